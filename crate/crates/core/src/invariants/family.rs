use num_traits::{One, Zero};

use super::expr::InvariantExpr;
use super::xi::xi_in;
use crate::algebra::LieAlgebra;
use crate::error::{Error, Result};
use crate::exact::{factorial, int, LogPolynomial, Polynomial, Rational, RationalFunction, VectorField};
use crate::families::{FamilyKind, FamilyLabel};

/// Number of invariants the family is known to have.
pub fn expected_count(label: &FamilyLabel) -> usize {
    let n = label.n();
    match label.kind() {
        FamilyKind::Nilradical => n - 2,
        FamilyKind::Snp2 => n - 4,
        _ => n - 3,
    }
}

fn xi_at(label: &FamilyLabel, k: usize) -> Result<Polynomial> {
    xi_in(label.n(), k, label.dim())
}

fn factor(label: &FamilyLabel, k: usize, q: Rational) -> Result<(usize, Polynomial, Rational)> {
    Ok((k, xi_at(label, k)?, q))
}

/// Weighted sums of ordered compositions:
/// `comp[m][s] = sum_{i_1+..+i_m = s, 0 <= i <= cap} prod a_{i+3}`.
fn compositions(a: &dyn Fn(usize) -> Rational, m_max: usize, s_max: usize, cap: usize) -> Vec<Vec<Rational>> {
    let mut comp = vec![vec![Rational::zero(); s_max + 1]; m_max + 1];
    comp[0][0] = Rational::one();
    for m in 1..=m_max {
        for s in 0..=s_max {
            let mut acc = Rational::zero();
            for i in 0..=s.min(cap) {
                let ai = a(i + 3);
                if !ai.is_zero() && !comp[m - 1][s - i].is_zero() {
                    acc += ai * &comp[m - 1][s - i];
                }
            }
            comp[m][s] = acc;
        }
    }
    comp
}

fn s6_chi(label: &FamilyLabel, k: usize) -> Result<InvariantExpr> {
    let n = label.n();
    let nv = label.dim();
    let params = label.params().to_vec();
    let a = move |idx: usize| {
        if (3..n).contains(&idx) {
            params[idx - 3].clone()
        } else {
            Rational::zero()
        }
    };
    let m_max = (k + 1) / 2;
    let comp = compositions(&a, m_max, k + 1, k + 1);
    let xi0 = xi_at(label, 0)?;
    let mut coeffs = Vec::with_capacity(m_max + 1);
    for m in 0..=m_max {
        let mut c = RationalFunction::zero(nv);
        if k + 1 >= 2 * m {
            let s = k + 1 - 2 * m;
            if !comp[m][s].is_zero() {
                c = &c + &RationalFunction::constant(nv, comp[m][s].clone());
            }
        }
        if k > 2 * m {
            let total = k - 2 * m - 1;
            for j in 0..=total.min(k + 1) {
                let w = &comp[m][total - j];
                if w.is_zero() {
                    continue;
                }
                let term = RationalFunction::new(xi_at(label, j + 1)?, xi0.pow(j as u32 + 2))?;
                c = &c + &term.scale(w);
            }
        }
        let sign = if m % 2 == 0 { int(1) } else { int(-1) };
        coeffs.push(c.scale(&(sign / Rational::from_integer(factorial(m as u32)))));
    }
    Ok(InvariantExpr::logarithmic(LogPolynomial::new(nv, coeffs), xi0))
}

/// The `k`-th invariant of the family (`k` starts at 1 for the solvable
/// families and at 0 for `n(n,1)`, where it is `xi_k`).
pub fn chi(label: &FamilyLabel, k: usize) -> Result<InvariantExpr> {
    let n = label.n();
    let count = expected_count(label);
    let out_of_range = || Error::IndexOutOfRange { index: k, max: count };
    let ni = n as i64;
    match label.kind() {
        FamilyKind::Nilradical => {
            if k >= count {
                return Err(out_of_range());
            }
            Ok(InvariantExpr::from_xi(k, xi_at(label, k)?))
        }
        _ if k == 0 || k > count => Err(out_of_range()),
        FamilyKind::S1 | FamilyKind::S2 | FamilyKind::S5 => {
            let (_, beta) = label.alpha_beta().expect("one outer element");
            let den = &beta + int(ni - 2);
            if den.is_zero() {
                return Err(Error::DivergentExponent(
                    "beta = 2-n; use the s(n+1,3) invariants".into(),
                ));
            }
            let q = int(k as i64 + 1) * (&beta + int(ni - 3)) / den;
            Ok(InvariantExpr::power_product(vec![
                factor(label, k, int(1))?,
                factor(label, 0, -q)?,
            ]))
        }
        FamilyKind::S3 => {
            if k == 1 {
                Ok(InvariantExpr::from_xi(0, xi_at(label, 0)?))
            } else {
                Ok(InvariantExpr::power_product(vec![
                    factor(label, k, int(2))?,
                    factor(label, 1, -int(k as i64 + 1))?,
                ]))
            }
        }
        FamilyKind::S4 => Ok(InvariantExpr::power_product(vec![
            factor(label, k, int(1))?,
            factor(label, 0, -int(k as i64 + 1))?,
        ])),
        FamilyKind::S6 => s6_chi(label, k),
        FamilyKind::Snp2 => Ok(InvariantExpr::power_product(vec![
            factor(label, k + 1, int(1))?,
            factor(label, 1, -Rational::new((k as i64 + 2).into(), 2.into()))?,
        ])),
    }
}

/// All invariants of the family, in index order. Empty when the count is 0.
pub fn invariant_family(label: &FamilyLabel) -> Result<Vec<InvariantExpr>> {
    let count = expected_count(label);
    match label.kind() {
        FamilyKind::Nilradical => (0..count).map(|k| chi(label, k)).collect(),
        _ => (1..=count).map(|k| chi(label, k)).collect(),
    }
}

fn diagonal_operator(n: usize, nvars: usize, alpha: &Rational, beta: &Rational) -> VectorField {
    let mut c = vec![Polynomial::zero(nvars); nvars];
    for k in 1..n {
        let w = alpha * int((n - 1 - k) as i64) + beta;
        c[k - 1] = Polynomial::var(nvars, k - 1).scale(&w);
    }
    VectorField::new(c)
}

/// The action of the outer elements on `e_1..e_{n-1}` as first-order
/// operators in the algebra's variables: `sum_k ((n-1-k) alpha + beta) e_k d/de_k`
/// for the diagonal families, the shifted form
/// `e_1 d/de_1 + e_2 d/de_2 + sum_l (e_{l+2} + sum_{j<=l} a_{l+3-j} e_j) d/de_{l+2}`
/// for S6, and the pair of weights `(n-1-k)` and `1` for the two-element
/// extension.
pub fn truncated_operators(label: &FamilyLabel) -> Vec<VectorField> {
    let n = label.n();
    let nv = label.dim();
    let zero = Rational::zero();
    let one = Rational::one();
    match label.kind() {
        FamilyKind::Nilradical => Vec::new(),
        FamilyKind::Snp2 => vec![
            diagonal_operator(n, nv, &one, &zero),
            diagonal_operator(n, nv, &zero, &one),
        ],
        FamilyKind::S6 => {
            let a = label.params();
            let mut c = vec![Polynomial::zero(nv); nv];
            c[0] = Polynomial::var(nv, 0);
            c[1] = Polynomial::var(nv, 1);
            for l in 1..=n - 3 {
                let mut p = Polynomial::var(nv, l + 1);
                for j in 1..=l {
                    let idx = l + 3 - j;
                    if idx < n {
                        p = &p + &Polynomial::var(nv, j - 1).scale(&a[idx - 3]);
                    }
                }
                c[l + 1] = p;
            }
            vec![VectorField::new(c)]
        }
        _ => {
            let (alpha, beta) = label.alpha_beta().expect("one outer element");
            vec![diagonal_operator(n, nv, &alpha, &beta)]
        }
    }
}

/// Coadjoint operators of the outer basis elements with only their
/// `d/de_1..d/de_{n-1}` part kept.
pub fn truncated_from_coadjoint(l: &LieAlgebra, n: usize) -> Vec<VectorField> {
    let ops = super::coadjoint::coadjoint_operators(l);
    let nv = l.dim();
    ops[n..]
        .iter()
        .map(|op| {
            let mut c = op.coefficients().to_vec();
            for p in c.iter_mut().skip(n - 1) {
                *p = Polynomial::zero(nv);
            }
            VectorField::new(c)
        })
        .collect()
}

/// `lambda` with `X(p) = lambda p`.
pub fn weighted_eigenvalue(x: &VectorField, p: &Polynomial) -> Result<Rational> {
    let image = x.apply(p);
    let Some((m, c)) = p.leading_term() else {
        return Ok(Rational::zero());
    };
    let lambda = image.coefficient(m.exponents()) / c;
    if image == p.scale(&lambda) {
        Ok(lambda)
    } else {
        Err(Error::NotEigenvector)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::build;

    #[test]
    fn s4_example() {
        let label = FamilyLabel::simple(FamilyKind::S4, 5).unwrap();
        let c = chi(&label, 1).unwrap();
        assert_eq!(c.symbolic(&[]), "xi1 * xi0^(-2)");
        let op = &truncated_operators(&label)[0];
        assert!(c.annihilated_by(op));
        let wrong = InvariantExpr::power_product(vec![
            factor(&label, 1, int(1)).unwrap(),
            factor(&label, 0, int(-1)).unwrap(),
        ]);
        assert!(!wrong.annihilated_by(op));
    }

    #[test]
    fn s6_first_invariant() {
        let label = FamilyLabel::s6(6, vec![int(1)]).unwrap();
        let c = chi(&label, 1).unwrap();
        let log = c.log_part();
        assert_eq!(log.degree(), Some(1));
        assert_eq!(log.coeff(1), RationalFunction::constant(7, int(-1)));
        let expect = RationalFunction::new(xi_in(6, 1, 7).unwrap(), xi_in(6, 0, 7).unwrap().pow(2)).unwrap();
        assert_eq!(log.coeff(0), expect);
    }

    #[test]
    fn truncated_operators_match_coadjoint() {
        for s in ["s(n+1,1):6:beta=3/2", "s(n+1,5):5", "s(n+1,6):7:a=[1,0,-2,3]", "s(n+2):6"] {
            let label = FamilyLabel::parse(s).unwrap();
            let l = build(&label).unwrap();
            assert_eq!(truncated_operators(&label), truncated_from_coadjoint(&l, label.n()), "{s}");
        }
    }

    #[test]
    fn eigenvalues() {
        let label = FamilyLabel::s1(6, int(3)).unwrap();
        let op = &truncated_operators(&label)[0];
        assert_eq!(weighted_eigenvalue(op, &xi_at(&label, 0).unwrap()).unwrap(), int(7));
        assert_eq!(weighted_eigenvalue(op, &xi_at(&label, 2).unwrap()).unwrap(), int(18));
        assert_eq!(weighted_eigenvalue(op, &Polynomial::one(7)).unwrap(), int(0));
        let sum = &Polynomial::var(7, 0) + &Polynomial::var(7, 1);
        assert!(matches!(weighted_eigenvalue(op, &sum), Err(Error::NotEigenvector)));
    }

    #[test]
    fn index_range() {
        assert!(chi(&FamilyLabel::simple(FamilyKind::S2, 5).unwrap(), 1).is_ok());
        assert!(chi(&FamilyLabel::simple(FamilyKind::S2, 5).unwrap(), 3).is_err());
    }
}
