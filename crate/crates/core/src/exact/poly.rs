//! Sparse multivariate polynomials over the rationals.
//!
//! Terms are keyed by exponent vectors ordered graded-lexicographically with
//! `x1 > x2 > ... > xN`. Serialization walks terms from the largest monomial
//! down, so the printed form is canonical.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::rational::Rational;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn new(exps: Vec<u32>) -> Self {
        Monomial(exps)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    fn checked_div(&self, other: &Monomial) -> Option<Monomial> {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<_>>>()
            .map(Monomial)
    }

    fn common(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.min(b)).collect())
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polynomial {
    nvars: usize,
    terms: BTreeMap<Monomial, Rational>,
}

impl Polynomial {
    pub fn zero(nvars: usize) -> Self {
        Polynomial {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        Self::monomial(nvars, vec![0; nvars], c)
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Rational::one())
    }

    /// The variable `x_{index+1}`.
    pub fn var(nvars: usize, index: usize) -> Self {
        assert!(index < nvars, "variable index out of range");
        let mut e = vec![0; nvars];
        e[index] = 1;
        Self::monomial(nvars, e, Rational::one())
    }

    pub fn monomial(nvars: usize, exps: Vec<u32>, c: Rational) -> Self {
        assert_eq!(exps.len(), nvars);
        let mut p = Self::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(Monomial(exps), c);
        }
        p
    }

    pub fn from_terms<I>(nvars: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (Vec<u32>, Rational)>,
    {
        let mut p = Self::zero(nvars);
        for (e, c) in terms {
            assert_eq!(e.len(), nvars);
            p.add_term(Monomial(e), c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms from the largest monomial to the smallest.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter().rev()
    }

    pub fn coefficient(&self, exps: &[u32]) -> Rational {
        self.terms
            .get(&Monomial(exps.to_vec()))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_one)
    }

    pub fn constant_value(&self) -> Option<Rational> {
        if self.is_zero() {
            Some(Rational::zero())
        } else if self.is_constant() {
            self.terms.values().next().cloned()
        } else {
            None
        }
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn degree_in(&self, var: usize) -> u32 {
        self.terms.keys().map(|m| m.0[var]).max().unwrap_or(0)
    }

    /// Largest term in graded-lex order.
    pub fn leading_term(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    pub fn leading_coefficient(&self) -> Option<&Rational> {
        self.leading_term().map(|(_, c)| c)
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    /// Every term is of degree one.
    pub fn is_homogeneous_linear(&self) -> bool {
        self.terms.keys().all(|m| m.degree() == 1)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect(),
        }
    }

    /// Divides by the leading coefficient; zero stays zero.
    pub fn monic(&self) -> Self {
        match self.leading_coefficient() {
            Some(c) => self.scale(&c.recip()),
            None => self.clone(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(self.nvars);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Partial derivative with respect to variable `var`.
    pub fn diff(&self, var: usize) -> Self {
        assert!(var < self.nvars, "variable index out of range");
        let mut out = Self::zero(self.nvars);
        for (m, c) in &self.terms {
            let e = m.0[var];
            if e == 0 {
                continue;
            }
            let mut exps = m.0.clone();
            exps[var] -= 1;
            out.add_term(Monomial(exps), c * Rational::from_integer(e.into()));
        }
        out
    }

    pub fn eval(&self, point: &[Rational]) -> Rational {
        assert_eq!(point.len(), self.nvars);
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (x, &e) in point.iter().zip(&m.0) {
                for _ in 0..e {
                    t *= x;
                }
            }
            acc += t;
        }
        acc
    }

    /// Reinterprets the polynomial in a larger variable set; the new
    /// variables are appended after the existing ones.
    pub fn embed(&self, nvars: usize) -> Self {
        assert!(nvars >= self.nvars);
        Polynomial {
            nvars,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| {
                    let mut e = m.0.clone();
                    e.resize(nvars, 0);
                    (Monomial(e), c.clone())
                })
                .collect(),
        }
    }

    /// `self / divisor` when the division is exact.
    pub fn div_exact(&self, divisor: &Polynomial) -> Option<Polynomial> {
        assert_eq!(self.nvars, divisor.nvars);
        let (lm, lc) = divisor.leading_term()?;
        let (lm, lc) = (lm.clone(), lc.clone());
        let mut rem = self.clone();
        let mut quot = Self::zero(self.nvars);
        while let Some((m, c)) = rem.leading_term() {
            let qm = m.checked_div(&lm)?;
            let qc = c / &lc;
            let t = Polynomial::monomial(self.nvars, qm.0, qc);
            rem = &rem - &(&t * divisor);
            quot = &quot + &t;
        }
        Some(quot)
    }

    /// Largest monomial dividing every term.
    pub fn monomial_content(&self) -> Monomial {
        let mut it = self.terms.keys();
        match it.next() {
            None => Monomial::one(self.nvars),
            Some(first) => it.fold(first.clone(), |acc, m| acc.common(m)),
        }
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Polynomial) -> Polynomial {
        assert_eq!(self.nvars, other.nvars);
        if self.is_zero() {
            return other.monic();
        }
        if other.is_zero() {
            return self.monic();
        }
        if self.is_constant() || other.is_constant() {
            return Self::one(self.nvars);
        }
        let (ma, mb) = (self.monomial_content(), other.monomial_content());
        let m = Polynomial::monomial(self.nvars, ma.common(&mb).0, Rational::one());
        if self.is_monomial() || other.is_monomial() {
            return m;
        }
        let strip = |p: &Polynomial, mc: &Monomial| {
            p.div_exact(&Polynomial::monomial(p.nvars, mc.0.clone(), Rational::one()))
                .expect("monomial content divides")
        };
        &m * &primitive_gcd(&strip(self, &ma), &strip(other, &mb))
    }

    pub fn fmt_with(&self, labels: &[String]) -> String {
        assert!(labels.len() >= self.nvars);
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (m, c)) in self.terms().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let factors: Vec<String> = m
                .0
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(v, &e)| {
                    if e == 1 {
                        labels[v].clone()
                    } else {
                        format!("{}^{}", labels[v], e)
                    }
                })
                .collect();
            if factors.is_empty() {
                out.push_str(&abs.to_string());
            } else {
                if !abs.is_one() {
                    out.push_str(&abs.to_string());
                    out.push('*');
                }
                out.push_str(&factors.join("*"));
            }
        }
        out
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(x) => {
                *x += c;
                if x.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }
}

/// Default variable names `e1..eN`.
pub fn default_labels(nvars: usize) -> Vec<String> {
    (1..=nvars).map(|i| format!("e{i}")).collect()
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.fmt_with(&default_labels(self.nvars)))
    }
}

// Univariate view in `var`: index k holds the coefficient of var^k. Trailing
// zero coefficients are never stored; the zero polynomial is the empty vec.
/// Image of `p` in `Q[x_var]` after substituting `point` for the other
/// variables.
fn univariate_image(p: &Polynomial, var: usize, point: &[Rational]) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); p.degree_in(var) as usize + 1];
    for (m, c) in &p.terms {
        let mut t = c.clone();
        for (u, &e) in m.0.iter().enumerate() {
            if u != var && e > 0 {
                t *= super::rational::powi(&point[u], e as i64);
            }
        }
        out[m.0[var] as usize] += t;
    }
    out
}

fn univariate_gcd_degree(mut a: Vec<Rational>, mut b: Vec<Rational>) -> usize {
    let trim = |v: &mut Vec<Rational>| {
        while v.last().is_some_and(Zero::is_zero) {
            v.pop();
        }
    };
    trim(&mut a);
    trim(&mut b);
    while !b.is_empty() {
        while a.len() >= b.len() {
            let shift = a.len() - b.len();
            let f = a.last().unwrap().clone() / b.last().unwrap();
            for (i, c) in b.iter().enumerate() {
                let d = c * &f;
                a[i + shift] -= d;
            }
            trim(&mut a);
            if a.is_empty() {
                break;
            }
        }
        std::mem::swap(&mut a, &mut b);
    }
    a.len().saturating_sub(1)
}

/// Upper bound on the degree of `gcd(a, b)` in `var`, from a
/// specialization of the other variables that keeps both leading
/// coefficients nonzero.
fn gcd_degree_bound(a: &Polynomial, b: &Polynomial, var: usize) -> u32 {
    let (da, db) = (a.degree_in(var), b.degree_in(var));
    if da == 0 || db == 0 {
        return 0;
    }
    for shift in 0..4i64 {
        let point: Vec<Rational> = (0..a.nvars)
            .map(|i| Rational::from_integer((2 * i as i64 + 3 + 7 * shift).into()))
            .collect();
        let ia = univariate_image(a, var, &point);
        let ib = univariate_image(b, var, &point);
        if !ia[da as usize].is_zero() && !ib[db as usize].is_zero() {
            return univariate_gcd_degree(ia, ib) as u32;
        }
    }
    da.min(db)
}

/// Gcd of polynomials without monomial content.
fn primitive_gcd(a: &Polynomial, b: &Polynomial) -> Polynomial {
    let nvars = a.nvars;
    if a.is_constant() || b.is_constant() {
        return Polynomial::one(nvars);
    }
    let vars: Vec<usize> = (0..nvars)
        .filter(|&v| a.degree_in(v) > 0 || b.degree_in(v) > 0)
        .collect();
    let bounds: Vec<u32> = vars.iter().map(|&v| gcd_degree_bound(a, b, v)).collect();
    if bounds.iter().all(|&d| d == 0) {
        return Polynomial::one(nvars);
    }
    // a variable the gcd cannot involve: the gcd divides every coefficient
    if let Some(i) = bounds.iter().position(|&d| d == 0) {
        let v = vars[i];
        let mut g = Polynomial::zero(nvars);
        for c in to_univariate(a, v).iter().chain(&to_univariate(b, v)) {
            g = g.gcd(c);
            if g.is_constant() {
                break;
            }
        }
        return g;
    }
    let var = vars[(0..vars.len()).min_by_key(|&i| bounds[i]).expect("some variable")];
    let ua = to_univariate(a, var);
    let ub = to_univariate(b, var);
    let ca = content(&ua, nvars);
    let cb = content(&ub, nvars);
    let c = ca.gcd(&cb);
    let mut pa = divide_coeffs(&ua, &ca);
    let mut pb = divide_coeffs(&ub, &cb);
    if pa.len() < pb.len() {
        std::mem::swap(&mut pa, &mut pb);
    }
    while !pb.is_empty() {
        let r = pseudo_remainder(&pa, &pb);
        pa = pb;
        pb = if r.is_empty() {
            r
        } else {
            let cr = content(&r, nvars);
            divide_coeffs(&r, &cr)
        };
    }
    (&c * &from_univariate(&pa, var)).monic()
}

fn to_univariate(p: &Polynomial, var: usize) -> Vec<Polynomial> {
    let mut out = vec![Polynomial::zero(p.nvars); p.degree_in(var) as usize + 1];
    for (m, c) in &p.terms {
        let k = m.0[var] as usize;
        let mut e = m.0.clone();
        e[var] = 0;
        out[k].add_term(Monomial(e), c.clone());
    }
    trim(&mut out);
    out
}

fn from_univariate(coeffs: &[Polynomial], var: usize) -> Polynomial {
    let nvars = coeffs.first().map_or(0, Polynomial::nvars);
    let mut out = Polynomial::zero(nvars);
    for (k, c) in coeffs.iter().enumerate() {
        for (m, x) in &c.terms {
            let mut e = m.0.clone();
            e[var] += k as u32;
            out.add_term(Monomial(e), x.clone());
        }
    }
    out
}

fn trim(v: &mut Vec<Polynomial>) {
    while v.last().is_some_and(Polynomial::is_zero) {
        v.pop();
    }
}

fn content(coeffs: &[Polynomial], nvars: usize) -> Polynomial {
    coeffs
        .iter()
        .fold(Polynomial::zero(nvars), |acc, c| acc.gcd(c))
}

// Primitive part, scaled so the leading coefficient is monic.
fn divide_coeffs(coeffs: &[Polynomial], d: &Polynomial) -> Vec<Polynomial> {
    let mut out: Vec<Polynomial> = coeffs
        .iter()
        .map(|c| c.div_exact(d).expect("content divides every coefficient"))
        .collect();
    if let Some(lc) = out.last().and_then(|c| c.leading_coefficient()).cloned() {
        let inv = lc.recip();
        for c in &mut out {
            *c = c.scale(&inv);
        }
    }
    out
}

// lc(b)^k * a reduced modulo b, for the smallest k the loop needs.
fn pseudo_remainder(a: &[Polynomial], b: &[Polynomial]) -> Vec<Polynomial> {
    let db = b.len() - 1;
    let lb = &b[db];
    let mut r = a.to_vec();
    while !r.is_empty() && r.len() > db {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        let shift = dr - db;
        let mut next: Vec<Polynomial> = r.iter().map(|c| c * lb).collect();
        for (i, bc) in b.iter().enumerate() {
            next[i + shift] = &next[i + shift] - &(&lr * bc);
        }
        trim(&mut next);
        r = next;
    }
    r
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        assert_eq!(self.nvars, rhs.nvars);
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        assert_eq!(self.nvars, rhs.nvars);
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        assert_eq!(self.nvars, rhs.nvars);
        let mut out = Polynomial::zero(self.nvars);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Add for Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: Polynomial) -> Polynomial {
        &self + &rhs
    }
}

impl Sub for Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: Polynomial) -> Polynomial {
        &self - &rhs
    }
}

impl Mul for Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: Polynomial) -> Polynomial {
        &self * &rhs
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}
