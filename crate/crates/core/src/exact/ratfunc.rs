use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Zero;

use super::poly::Polynomial;
use super::rational::Rational;
use crate::error::{Error, Result};

/// Quotient of polynomials kept in lowest terms with a monic denominator.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: Polynomial,
    den: Polynomial,
}

impl RationalFunction {
    pub fn new(num: Polynomial, den: Polynomial) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        assert_eq!(num.nvars(), den.nvars());
        Ok(Self::reduce(num, den))
    }

    pub fn from_poly(p: Polynomial) -> Self {
        let n = p.nvars();
        RationalFunction {
            num: p,
            den: Polynomial::one(n),
        }
    }

    pub fn zero(nvars: usize) -> Self {
        Self::from_poly(Polynomial::zero(nvars))
    }

    pub fn one(nvars: usize) -> Self {
        Self::from_poly(Polynomial::one(nvars))
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        Self::from_poly(Polynomial::constant(nvars, c))
    }

    pub fn numerator(&self) -> &Polynomial {
        &self.num
    }

    pub fn denominator(&self) -> &Polynomial {
        &self.den
    }

    pub fn nvars(&self) -> usize {
        self.num.nvars()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_constant()
    }

    pub fn recip(&self) -> Result<Self> {
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        Ok(self * &rhs.recip()?)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        RationalFunction {
            num: self.num.scale(c),
            den: if c.is_zero() {
                Polynomial::one(self.nvars())
            } else {
                self.den.clone()
            },
        }
    }

    /// `None` when the denominator vanishes at `point`.
    pub fn eval(&self, point: &[Rational]) -> Option<Rational> {
        let d = self.den.eval(point);
        if d.is_zero() {
            None
        } else {
            Some(self.num.eval(point) / d)
        }
    }

    pub fn embed(&self, nvars: usize) -> Self {
        RationalFunction {
            num: self.num.embed(nvars),
            den: self.den.embed(nvars),
        }
    }

    pub fn fmt_with(&self, labels: &[String]) -> String {
        let num = self.num.fmt_with(labels);
        if self.den.is_constant() {
            return num;
        }
        let wrap = |p: &Polynomial, s: String| {
            if p.num_terms() > 1 {
                format!("({s})")
            } else {
                s
            }
        };
        format!(
            "{}/{}",
            wrap(&self.num, num),
            wrap(&self.den, self.den.fmt_with(labels))
        )
    }

    /// Quotient of coprime `num` and `den`, made monic in the denominator.
    pub(crate) fn normalized(num: Polynomial, den: Polynomial) -> Self {
        let lc = den.leading_coefficient().expect("nonzero denominator").recip();
        RationalFunction {
            num: num.scale(&lc),
            den: den.scale(&lc),
        }
    }

    fn reduce(num: Polynomial, den: Polynomial) -> Self {
        let nvars = num.nvars();
        if num.is_zero() {
            return Self::zero(nvars);
        }
        let (num, den) = if let Some(q) = num.div_exact(&den) {
            (q, Polynomial::one(nvars))
        } else {
            let g = num.gcd(&den);
            (
                num.div_exact(&g).expect("gcd divides numerator"),
                den.div_exact(&g).expect("gcd divides denominator"),
            )
        };
        let lc = den.leading_coefficient().expect("nonzero denominator").recip();
        RationalFunction {
            num: num.scale(&lc),
            den: den.scale(&lc),
        }
    }
}

impl From<Polynomial> for RationalFunction {
    fn from(p: Polynomial) -> Self {
        Self::from_poly(p)
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.fmt_with(&super::poly::default_labels(self.nvars())))
    }
}

impl Add for &RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: &RationalFunction) -> RationalFunction {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        // with g = gcd(b, d): a/b + c/d = (a d/g + c b/g) / (b d/g), and any
        // common factor of that numerator and denominator divides g
        let g = self.den.gcd(&rhs.den);
        let bg = self.den.div_exact(&g).expect("gcd divides");
        let dg = rhs.den.div_exact(&g).expect("gcd divides");
        let num = &(&self.num * &dg) + &(&rhs.num * &bg);
        let den = &bg * &rhs.den;
        if num.is_zero() {
            return RationalFunction::zero(self.nvars());
        }
        let h = if g.is_constant() { g } else { num.gcd(&g) };
        RationalFunction::normalized(
            num.div_exact(&h).expect("gcd divides"),
            den.div_exact(&h).expect("gcd divides"),
        )
    }
}

impl Sub for &RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: &RationalFunction) -> RationalFunction {
        self + &(-rhs)
    }
}

impl Mul for &RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: &RationalFunction) -> RationalFunction {
        if self.is_zero() || rhs.is_zero() {
            return RationalFunction::zero(self.nvars());
        }
        // both operands are in lowest terms, so cross-cancelling suffices
        let g1 = self.num.gcd(&rhs.den);
        let g2 = rhs.num.gcd(&self.den);
        let div = |p: &Polynomial, g: &Polynomial| p.div_exact(g).expect("gcd divides");
        RationalFunction::normalized(
            &div(&self.num, &g1) * &div(&rhs.num, &g2),
            &div(&self.den, &g2) * &div(&rhs.den, &g1),
        )
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}
