//! Derivations and inner derivations in the row convention
//! `D(e_a) = sum_b D[a][b] e_b`.

use std::collections::HashSet;

use num_traits::Zero;

use super::lie::LieAlgebra;
use super::subspace::Subspace;
use crate::error::{Error, Result};
use crate::exact::{QMatrix, Rational};

fn flatten(m: &QMatrix) -> Vec<Rational> {
    m.entries().to_vec()
}

fn unflatten(n: usize, v: Vec<Rational>) -> QMatrix {
    QMatrix::from_rows(v.chunks(n).map(<[Rational]>::to_vec).collect())
}

/// Linear system on the `N^2` entries of `D` (index `a*N + b`) expressing
/// `D[e_i,e_j] = [D e_i, e_j] + [e_i, D e_j]` for all `i < j`.
pub fn derivation_constraints(l: &LieAlgebra) -> QMatrix {
    let n = l.dim();
    let mut seen: HashSet<Vec<Rational>> = HashSet::new();
    let mut rows = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let cij = l.basis_bracket(i, j);
            for c in 0..n {
                let mut row = vec![Rational::zero(); n * n];
                // D[e_i,e_j] component c: sum_k c^k_ij D[k][c]
                for (k, ck) in cij.iter().enumerate() {
                    if !ck.is_zero() {
                        row[k * n + c] += ck;
                    }
                }
                // [D e_i, e_j]_c = sum_k D[i][k] c^c_kj
                for k in 0..n {
                    let s = l.structure_constant(k, j, c);
                    if !s.is_zero() {
                        row[i * n + k] -= &s;
                    }
                    let s = l.structure_constant(i, k, c);
                    if !s.is_zero() {
                        row[j * n + k] -= &s;
                    }
                }
                if row.iter().any(|x| !x.is_zero()) && seen.insert(row.clone()) {
                    rows.push(row);
                }
            }
        }
    }
    if rows.is_empty() {
        return QMatrix::zeros(0, n * n);
    }
    QMatrix::from_rows(rows)
}

pub fn is_derivation(l: &LieAlgebra, d: &QMatrix) -> Result<bool> {
    let n = l.dim();
    if d.rows() != n || d.cols() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            got: d.rows(),
        });
    }
    for i in 0..n {
        for j in i + 1..n {
            let lhs = d.left_mul_vec(&l.basis_bracket(i, j));
            let r1 = l.bracket(d.row(i), &l.basis_vector(j))?;
            let r2 = l.bracket(&l.basis_vector(i), d.row(j))?;
            if lhs
                .iter()
                .zip(r1.iter().zip(&r2))
                .any(|(x, (y, z))| x != &(y + z))
            {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// A basis of `Der(L)`, one nullspace vector per free entry.
pub fn derivation_space(l: &LieAlgebra) -> Vec<QMatrix> {
    let n = l.dim();
    let sys = derivation_constraints(l);
    if sys.rows() == 0 {
        return (0..n * n)
            .map(|k| {
                let mut m = QMatrix::zeros(n, n);
                m[(k / n, k % n)] = Rational::from_integer(1.into());
                m
            })
            .collect();
    }
    sys.nullspace()
        .into_iter()
        .map(|v| unflatten(n, v))
        .collect()
}

/// Inner derivations as a subspace of flattened `N x N` matrices.
pub fn inner_derivations(l: &LieAlgebra) -> Subspace {
    let n = l.dim();
    Subspace::span(
        n * n,
        (0..n).map(|a| flatten(&l.ad_matrix(&l.basis_vector(a)).expect("basis vector"))),
    )
}

/// Reduced-echelon basis of `ad(L)`.
pub fn inner_derivation_space(l: &LieAlgebra) -> Vec<QMatrix> {
    let n = l.dim();
    inner_derivations(l)
        .basis()
        .iter()
        .map(|v| unflatten(n, v.clone()))
        .collect()
}

/// Splits `d = r + ad_z` with `r` vanishing on the pivot entries of the
/// echelon basis of `ad(L)`. Returns `(r, z)`.
pub fn split_inner(l: &LieAlgebra, d: &QMatrix) -> Result<(QMatrix, Vec<Rational>)> {
    let n = l.dim();
    if d.rows() != n || d.cols() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            got: d.rows(),
        });
    }
    let inner = inner_derivations(l);
    let flat = flatten(d);
    let r = inner.reduce(&flat);
    let diff: Vec<Rational> = flat.iter().zip(&r).map(|(a, b)| a - b).collect();
    // columns are the flattened ad_{e_a}
    let cols: Vec<Vec<Rational>> = (0..n)
        .map(|a| flatten(&l.ad_matrix(&l.basis_vector(a)).expect("basis vector")))
        .collect();
    let a = QMatrix::from_rows(
        (0..n * n)
            .map(|k| cols.iter().map(|c| c[k].clone()).collect())
            .collect(),
    );
    let z = a.solve(&diff).expect("difference lies in ad(L)");
    Ok((unflatten(n, r), z))
}

fn check_pattern(n: usize, d: &QMatrix, diag_weight: impl Fn(usize) -> i64) -> bool {
    if d.rows() != n || d.cols() != n {
        return false;
    }
    // 1-based indices throughout
    let at = |i: usize, j: usize| &d[(i - 1, j - 1)];
    let alpha = at(n, n).clone();
    let beta = at(n - 1, n - 1).clone();
    for i in 1..=n {
        for j in i + 1..=n {
            if !at(i, j).is_zero() {
                return false;
            }
        }
    }
    for i in 1..n {
        let expect = &alpha * Rational::from_integer(diag_weight(i).into()) + &beta;
        if at(i, i) != &expect {
            return false;
        }
    }
    for i in 1..n {
        for j in i + 1..n {
            if at(j, i) != at(j - i + 1, 1) {
                return false;
            }
        }
    }
    true
}

/// Whether every matrix has the lower-triangular shape of a derivation of
/// `n(n,1)`: diagonal `D_ii = (n-1-i) D_nn + D_{n-1,n-1}` for `i < n` and
/// Toeplitz entries `D_ji = D_{j-i+1,1}` for `i < j <= n-1`. Row `n` is
/// unconstrained below the diagonal.
pub fn verify_lemma1_pattern(n: usize, basis: &[QMatrix]) -> bool {
    n >= 2 && basis.iter().all(|d| check_pattern(n, d, |i| n as i64 - 1 - i as i64))
}

/// The same shape with the diagonal read as `(n-i+1) D_nn + D_{n-1,n-1}`.
/// Derivations of `n(n,1)` with `D_nn != 0` do not have it.
pub fn verify_lemma1_printed_pattern(n: usize, basis: &[QMatrix]) -> bool {
    n >= 2 && basis.iter().all(|d| check_pattern(n, d, |i| n as i64 - i as i64 + 1))
}
