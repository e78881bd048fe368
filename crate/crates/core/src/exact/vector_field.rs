use super::poly::Polynomial;
use super::ratfunc::RationalFunction;
use super::rational::Rational;

/// First-order differential operator `sum_a c_a d/dx_a` with polynomial
/// coefficients. Acts as a derivation on polynomials and rational functions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VectorField {
    coeffs: Vec<Polynomial>,
}

impl VectorField {
    pub fn new(coeffs: Vec<Polynomial>) -> Self {
        let n = coeffs.len();
        assert!(coeffs.iter().all(|c| c.nvars() == n));
        VectorField { coeffs }
    }

    pub fn zero(nvars: usize) -> Self {
        Self::new(vec![Polynomial::zero(nvars); nvars])
    }

    /// `d/dx_var`.
    pub fn partial(nvars: usize, var: usize) -> Self {
        let mut coeffs = vec![Polynomial::zero(nvars); nvars];
        coeffs[var] = Polynomial::one(nvars);
        Self::new(coeffs)
    }

    pub fn nvars(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coefficients(&self) -> &[Polynomial] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Polynomial::is_zero)
    }

    /// Diagonal weights when the field is `sum_a w_a x_a d/dx_a`.
    pub fn diagonal_weights(&self) -> Option<Vec<Rational>> {
        let n = self.nvars();
        self.coeffs
            .iter()
            .enumerate()
            .map(|(a, c)| {
                if c.is_zero() {
                    return Some(num_traits::Zero::zero());
                }
                let mut e = vec![0; n];
                e[a] = 1;
                let w = c.coefficient(&e);
                (c == &Polynomial::monomial(n, e, w.clone())).then_some(w)
            })
            .collect()
    }

    pub fn apply(&self, p: &Polynomial) -> Polynomial {
        assert_eq!(p.nvars(), self.nvars());
        let mut out = Polynomial::zero(p.nvars());
        for (a, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() || p.degree_in(a) == 0 {
                continue;
            }
            out = &out + &(c * &p.diff(a));
        }
        out
    }

    /// Quotient rule.
    pub fn apply_rf(&self, r: &RationalFunction) -> RationalFunction {
        let (n, d) = (r.numerator(), r.denominator());
        let dn = self.apply(n);
        let dd = self.apply(d);
        if dd.is_zero() {
            return RationalFunction::new(dn, d.clone()).expect("nonzero denominator");
        }
        // common factors of the quotient-rule numerator and d^2 divide d
        let mut num = &(&dn * d) - &(n * &dd);
        if num.is_zero() {
            return RationalFunction::zero(self.nvars());
        }
        let mut den = d * d;
        let mut g = d.clone();
        loop {
            g = num.gcd(&g);
            if g.is_constant() {
                break;
            }
            num = num.div_exact(&g).expect("gcd divides");
            den = den.div_exact(&g).expect("gcd divides");
        }
        RationalFunction::normalized(num, den)
    }
}
