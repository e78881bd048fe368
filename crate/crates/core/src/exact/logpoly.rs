//! Polynomials in a formal symbol `L` with rational-function coefficients.
//!
//! `L` stands for a logarithm `ln q` of a fixed rational function `q`; a
//! derivation acts on it through the supplied image `dL = d(q)/q`.

use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::ratfunc::RationalFunction;
use super::rational::Rational;
use super::vector_field::VectorField;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LogPolynomial {
    nvars: usize,
    coeffs: Vec<RationalFunction>,
}

impl LogPolynomial {
    pub fn new(nvars: usize, mut coeffs: Vec<RationalFunction>) -> Self {
        assert!(coeffs.iter().all(|c| c.nvars() == nvars));
        while coeffs.last().is_some_and(RationalFunction::is_zero) {
            coeffs.pop();
        }
        LogPolynomial { nvars, coeffs }
    }

    pub fn zero(nvars: usize) -> Self {
        Self::new(nvars, Vec::new())
    }

    pub fn constant(c: RationalFunction) -> Self {
        Self::new(c.nvars(), vec![c])
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(RationalFunction::one(nvars))
    }

    /// The symbol `L` itself.
    pub fn symbol(nvars: usize) -> Self {
        Self::new(
            nvars,
            vec![RationalFunction::zero(nvars), RationalFunction::one(nvars)],
        )
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// Coefficient of `L^m`.
    pub fn coeff(&self, m: usize) -> RationalFunction {
        self.coeffs
            .get(m)
            .cloned()
            .unwrap_or_else(|| RationalFunction::zero(self.nvars))
    }

    pub fn coefficients(&self) -> &[RationalFunction] {
        &self.coeffs
    }

    /// Highest power of `L` present; `None` for zero.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn scale_rf(&self, c: &RationalFunction) -> Self {
        Self::new(self.nvars, self.coeffs.iter().map(|x| x * c).collect())
    }

    /// `sum_m [d(c_m) L^m + m c_m L^(m-1) dL]` for an arbitrary derivation
    /// `d` given by its action on coefficients.
    pub fn derive_with<F>(&self, d: F, dl: &RationalFunction) -> Self
    where
        F: Fn(&RationalFunction) -> RationalFunction,
    {
        let len = self.coeffs.len();
        let mut out = vec![RationalFunction::zero(self.nvars); len];
        for (m, c) in self.coeffs.iter().enumerate() {
            out[m] = &out[m] + &d(c);
            if m > 0 && !c.is_zero() {
                let k = Rational::from_integer((m as i64).into());
                out[m - 1] = &out[m - 1] + &(c * dl).scale(&k);
            }
        }
        Self::new(self.nvars, out)
    }

    pub fn derive(&self, d: &VectorField, dl: &RationalFunction) -> Self {
        self.derive_with(|c| d.apply_rf(c), dl)
    }

    /// Value with the coefficients evaluated at `point` and `L = lambda`.
    pub fn eval(&self, point: &[Rational], lambda: &Rational) -> Option<Rational> {
        let mut acc = Rational::zero();
        let mut pw = Rational::one();
        for c in &self.coeffs {
            acc += c.eval(point)? * &pw;
            pw *= lambda;
        }
        Some(acc)
    }

    pub fn fmt_with(&self, labels: &[String]) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(m, c)| {
                let s = c.fmt_with(labels);
                match m {
                    0 => s,
                    1 => format!("({s})*L"),
                    _ => format!("({s})*L^{m}"),
                }
            })
            .collect();
        parts.join(" + ")
    }
}

impl From<RationalFunction> for LogPolynomial {
    fn from(c: RationalFunction) -> Self {
        Self::constant(c)
    }
}

impl Add for &LogPolynomial {
    type Output = LogPolynomial;
    fn add(self, rhs: &LogPolynomial) -> LogPolynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        LogPolynomial::new(
            self.nvars,
            (0..len).map(|m| &self.coeff(m) + &rhs.coeff(m)).collect(),
        )
    }
}

impl Sub for &LogPolynomial {
    type Output = LogPolynomial;
    fn sub(self, rhs: &LogPolynomial) -> LogPolynomial {
        self + &(-rhs)
    }
}

impl Neg for &LogPolynomial {
    type Output = LogPolynomial;
    fn neg(self) -> LogPolynomial {
        LogPolynomial::new(self.nvars, self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Mul for &LogPolynomial {
    type Output = LogPolynomial;
    fn mul(self, rhs: &LogPolynomial) -> LogPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return LogPolynomial::zero(self.nvars);
        }
        let mut out =
            vec![RationalFunction::zero(self.nvars); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        LogPolynomial::new(self.nvars, out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::poly::Polynomial;

    #[test]
    fn derivative_of_symbol_is_dl() {
        let d = VectorField::partial(2, 0);
        let out = LogPolynomial::symbol(2).derive(&d, &RationalFunction::one(2));
        assert_eq!(out, LogPolynomial::one(2));
    }

    #[test]
    fn derivative_of_constant_coefficient() {
        let d = VectorField::partial(2, 0);
        let x = Polynomial::var(2, 0);
        let c = RationalFunction::from_poly(x.pow(3));
        let dl = RationalFunction::from_poly(Polynomial::var(2, 1));
        let out = LogPolynomial::constant(c).derive(&d, &dl);
        let expected = RationalFunction::from_poly(x.pow(2).scale(&Rational::from_integer(3.into())));
        assert_eq!(out, LogPolynomial::constant(expected));
    }

    #[test]
    fn trailing_zero_coefficients_are_trimmed() {
        let lp = LogPolynomial::new(1, vec![RationalFunction::one(1), RationalFunction::zero(1)]);
        assert_eq!(lp.degree(), Some(0));
        assert!((&lp - &lp).is_zero());
    }
}
