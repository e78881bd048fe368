use num_traits::{One, Zero};

use super::build::build_nilradical;
use crate::algebra::{split_inner, LieAlgebra};
use crate::error::{Error, Result};
use crate::exact::{powi, QMatrix, Rational};

/// Changes of basis of `n(n,1)` that preserve its bracket table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BasisChange {
    /// `e~_k = tau w^(n-1-k) e_k` for `k < n`, `e~_n = w e_n`.
    Scaling { omega: Rational, tau: Rational },
    /// `e~_k = e_k + sum_{j<k} u_{k-j} e_j` for `k < n`,
    /// `e~_n = e_n + sum_{j<n} v_j e_j`. `u` holds `u_1..u_{n-2}`, `v` holds
    /// `v_1..v_{n-1}`.
    Unipotent { u: Vec<Rational>, v: Vec<Rational> },
}

impl BasisChange {
    /// Unipotent change with a single nonzero `u_j` (1-based).
    pub fn u_only(n: usize, j: usize, c: Rational) -> Self {
        let mut u = vec![Rational::zero(); n - 2];
        u[j - 1] = c;
        BasisChange::Unipotent {
            u,
            v: vec![Rational::zero(); n - 1],
        }
    }

    /// Unipotent change with a single nonzero `v_j` (1-based).
    pub fn v_only(n: usize, j: usize, c: Rational) -> Self {
        let mut v = vec![Rational::zero(); n - 1];
        v[j - 1] = c;
        BasisChange::Unipotent {
            u: vec![Rational::zero(); n - 2],
            v,
        }
    }

    /// The `n x n` matrix whose rows are the new basis vectors.
    pub fn matrix(&self, n: usize) -> Result<QMatrix> {
        let mut m = QMatrix::zeros(n, n);
        match self {
            BasisChange::Scaling { omega, tau } => {
                if omega.is_zero() || tau.is_zero() {
                    return Err(Error::InvalidParameter("scaling by zero".into()));
                }
                for k in 1..n {
                    m[(k - 1, k - 1)] = tau * powi(omega, (n - 1 - k) as i64);
                }
                m[(n - 1, n - 1)] = omega.clone();
            }
            BasisChange::Unipotent { u, v } => {
                if u.len() != n - 2 || v.len() != n - 1 {
                    return Err(Error::DimensionMismatch {
                        expected: n - 1,
                        got: v.len(),
                    });
                }
                for k in 1..=n {
                    m[(k - 1, k - 1)] = Rational::one();
                }
                for k in 2..n {
                    for j in 1..k {
                        m[(k - 1, j - 1)] = u[k - j - 1].clone();
                    }
                }
                for j in 1..n {
                    m[(n - 1, j - 1)] = v[j - 1].clone();
                }
            }
        }
        Ok(m)
    }
}

/// Checks that the first `n` basis vectors of `l` carry the `n(n,1)` table.
pub(crate) fn has_standard_nilradical(l: &LieAlgebra, n: usize) -> bool {
    let Ok(nil) = build_nilradical(n) else {
        return false;
    };
    if l.dim() < n {
        return false;
    }
    (0..n).all(|a| {
        (a + 1..n).all(|b| {
            let v = l.basis_bracket(a, b);
            v[..n] == nil.basis_bracket(a, b)[..] && v[n..].iter().all(Zero::is_zero)
        })
    })
}

/// Embeds an `n x n` change on the nilradical into the whole algebra, fixing
/// the remaining basis vectors.
pub(crate) fn extend(m: &QMatrix, dim: usize) -> QMatrix {
    let mut t = QMatrix::identity(dim);
    for i in 0..m.rows() {
        for j in 0..m.cols() {
            t[(i, j)] = m[(i, j)].clone();
        }
    }
    t
}

/// Applies `t` to the nilradical `span{e_1..e_n}` of `l` (the first `n` basis
/// vectors), leaving the outer basis vectors alone. Returns the new algebra
/// and the `n x n` conjugator, so that outer derivations transform as
/// `D -> T D T^-1`.
pub fn apply_basis_change(l: &LieAlgebra, n: usize, t: &BasisChange) -> Result<(LieAlgebra, QMatrix)> {
    if !has_standard_nilradical(l, n) {
        return Err(Error::InvalidParameter(
            "the first n basis vectors must carry the n(n,1) brackets".into(),
        ));
    }
    let m = t.matrix(n)?;
    let out = l.change_basis(&extend(&m, l.dim()))?;
    if !has_standard_nilradical(&out, n) {
        return Err(Error::BracketNotPreserved(format!("{t:?}")));
    }
    Ok((out, m))
}

/// `D` restricted to the nilradical: row `a` is `[x, e_a]` for the outer
/// basis vector `x`.
pub fn outer_derivation(l: &LieAlgebra, n: usize, outer: usize) -> Result<QMatrix> {
    let x = l.basis_vector(outer);
    let mut rows = Vec::with_capacity(n);
    for a in 0..n {
        let v = l.bracket(&x, &l.basis_vector(a))?;
        if v[n..].iter().any(|c| !c.is_zero()) {
            return Err(Error::NotAnIdeal);
        }
        rows.push(v[..n].to_vec());
    }
    Ok(QMatrix::from_rows(rows))
}

/// Subtracts from each outer basis vector the element of the nilradical
/// whose adjoint cancels the inner part of its derivation, leaving every
/// outer derivation in canonical shape.
pub fn reduce_to_canonical(l: &LieAlgebra, n: usize) -> Result<LieAlgebra> {
    let nil = build_nilradical(n)?;
    let dim = l.dim();
    let mut t = QMatrix::identity(dim);
    for f in n..dim {
        let d = outer_derivation(l, n, f)?;
        let (_, z) = split_inner(&nil, &d)?;
        for (j, zj) in z.into_iter().enumerate() {
            t[(f, j)] = -zj;
        }
    }
    l.change_basis(&t)
}

/// `(alpha, beta, [a_3..a_n])` read off a derivation in canonical shape.
pub fn canonical_parameters(d: &QMatrix) -> (Rational, Rational, Vec<Rational>) {
    let n = d.rows();
    let alpha = d[(n - 1, n - 1)].clone();
    let beta = d[(n - 2, n - 2)].clone();
    let mut a: Vec<Rational> = (3..n).map(|k| d[(k - 1, 0)].clone()).collect();
    a.push(d[(n - 1, n - 2)].clone());
    (alpha, beta, a)
}
