use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::{LogPolynomial, Polynomial, Rational, RationalFunction, VectorField};

/// `prod_i xi_i^(q_i) * P(L)` with rational exponents `q_i` and `P` a
/// polynomial in the formal symbol `L = ln xi_0` whose coefficients are
/// rational functions.
///
/// Fractional powers are never expanded: a first-order operator `X` is
/// applied through `X(I)/prod = (sum q_i X(xi_i)/xi_i) P + X(P)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantExpr {
    nvars: usize,
    factors: Vec<(usize, Polynomial, Rational)>,
    log: LogPolynomial,
    /// `xi_0`, the argument of `L`.
    log_base: Polynomial,
}

impl InvariantExpr {
    /// `xi_k` alone.
    pub fn from_xi(k: usize, xi: Polynomial) -> Self {
        Self::power_product(vec![(k, xi, Rational::one())])
    }

    pub fn power_product(factors: Vec<(usize, Polynomial, Rational)>) -> Self {
        let nvars = factors.first().map(|f| f.1.nvars()).expect("at least one factor");
        InvariantExpr {
            nvars,
            log: LogPolynomial::one(nvars),
            log_base: Polynomial::var(nvars, 0),
            factors,
        }
    }

    /// A log-polynomial in `L = ln(log_base)` with no power-product prefix.
    pub fn logarithmic(log: LogPolynomial, log_base: Polynomial) -> Self {
        InvariantExpr {
            nvars: log.nvars(),
            factors: Vec::new(),
            log,
            log_base,
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn factors(&self) -> &[(usize, Polynomial, Rational)] {
        &self.factors
    }

    pub fn log_part(&self) -> &LogPolynomial {
        &self.log
    }

    pub fn is_polynomial(&self) -> bool {
        self.log.degree() == Some(0)
            && self.log.coeff(0).is_polynomial()
            && self
                .factors
                .iter()
                .all(|(_, _, q)| q.is_integer() && !q.is_negative())
    }

    /// `X(I)` divided by the power-product prefix.
    pub fn apply_reduced(&self, x: &VectorField) -> LogPolynomial {
        let mut s = RationalFunction::zero(self.nvars);
        for (_, p, q) in &self.factors {
            let dp = x.apply(p);
            if dp.is_zero() {
                continue;
            }
            let ratio = RationalFunction::new(dp, p.clone()).expect("nonzero invariant factor");
            s = &s + &ratio.scale(q);
        }
        let dl = RationalFunction::new(x.apply(&self.log_base), self.log_base.clone())
            .expect("nonzero log base");
        &self.log.scale_rf(&s) + &self.log.derive(x, &dl)
    }

    /// Whether `X(I) = 0` exactly.
    pub fn annihilated_by(&self, x: &VectorField) -> bool {
        self.apply_reduced(x).is_zero()
    }

    /// Gradient of `I` divided by the prefix, evaluated at `point` with `L`
    /// replaced by `lambda`. Fails when a factor or denominator vanishes.
    pub fn reduced_gradient(&self, point: &[Rational], lambda: &Rational) -> Result<Vec<Rational>> {
        let degenerate = || Error::DegeneratePoint(1);
        for (_, p, _) in &self.factors {
            if p.eval(point).is_zero() {
                return Err(degenerate());
            }
        }
        if self.log.degree().unwrap_or(0) > 0 && self.log_base.eval(point).is_zero() {
            return Err(degenerate());
        }
        (0..self.nvars)
            .map(|a| {
                let x = VectorField::partial(self.nvars, a);
                self.apply_reduced(&x)
                    .eval(point, lambda)
                    .ok_or_else(degenerate)
            })
            .collect()
    }

    /// Symbolic form in terms of `xi_k` and `L = ln xi_0`.
    pub fn symbolic(&self, labels: &[String]) -> String {
        let mut parts: Vec<String> = self
            .factors
            .iter()
            .map(|(k, _, q)| {
                if q.is_one() {
                    format!("xi{k}")
                } else if q.is_integer() && !q.is_negative() {
                    format!("xi{k}^{q}")
                } else {
                    format!("xi{k}^({q})")
                }
            })
            .collect();
        let log_is_one = self.log == LogPolynomial::one(self.nvars);
        if !log_is_one {
            parts.push(format!("[{}]", self.log.fmt_with(labels)));
        }
        if parts.is_empty() {
            "1".into()
        } else {
            parts.join(" * ")
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::int;
    use crate::invariants::xi::xi;

    #[test]
    fn power_product_log_derivative() {
        let n = 5;
        // X = e1 d/de1 + 2 e2 d/de2 + 3 e3 d/de3: xi_1 has weight 4, xi_0 weight 1
        let mut c = vec![Polynomial::zero(n); n];
        for (a, w) in [(0, 1), (1, 2), (2, 3)] {
            c[a] = Polynomial::var(n, a).scale(&int(w));
        }
        let x = VectorField::new(c);
        let good = InvariantExpr::power_product(vec![
            (1, xi(n, 1).unwrap(), int(1)),
            (0, xi(n, 0).unwrap(), int(-4)),
        ]);
        assert!(good.annihilated_by(&x));
        let bad = InvariantExpr::power_product(vec![
            (1, xi(n, 1).unwrap(), int(1)),
            (0, xi(n, 0).unwrap(), int(-1)),
        ]);
        assert!(!bad.annihilated_by(&x));
        assert_eq!(good.symbolic(&[]), "xi1 * xi0^(-4)");
    }
}
