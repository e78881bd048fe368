use num_traits::Zero;

use super::lie::LieAlgebra;
use super::series::is_ideal;
use super::subspace::Subspace;
use crate::error::{Error, Result};
use crate::exact::{Polynomial, QMatrix, Rational};

/// Matrix of `ad_x` restricted to the ideal, in the ideal's echelon basis
/// (row convention).
pub fn restricted_adjoint(l: &LieAlgebra, ideal: &Subspace, x: &[Rational]) -> Result<QMatrix> {
    let mut rows = Vec::with_capacity(ideal.dim());
    for y in ideal.basis() {
        let v = l.bracket(x, y)?;
        rows.push(ideal.coordinates(&v).ok_or(Error::NotAnIdeal)?);
    }
    if rows.is_empty() {
        return Ok(QMatrix::zeros(0, 0));
    }
    Ok(QMatrix::from_rows(rows))
}

/// Whether no nontrivial linear combination of the `outer` vectors acts
/// nilpotently on `ideal`.
///
/// Two outer vectors are decided over the algebraic closure: the power
/// sums `tr((t A1 + A2)^k)` all vanish at some `t` exactly when their gcd is
/// nonconstant.
pub fn nil_independent(l: &LieAlgebra, ideal: &Subspace, outer: &[Vec<Rational>]) -> Result<bool> {
    if !is_ideal(l, ideal) {
        return Err(Error::NotAnIdeal);
    }
    let mats = outer
        .iter()
        .map(|x| restricted_adjoint(l, ideal, x))
        .collect::<Result<Vec<_>>>()?;
    match mats.as_slice() {
        [] => Ok(true),
        [a] => Ok(!a.is_nilpotent()),
        [a1, a2] => {
            if a1.is_nilpotent() {
                return Ok(false);
            }
            let m = ideal.dim();
            let mut power: Vec<QMatrix> = vec![QMatrix::identity(m)];
            let mut g = Polynomial::zero(1);
            for _ in 0..m {
                let mut next = vec![QMatrix::zeros(m, m); power.len() + 1];
                for (j, p) in power.iter().enumerate() {
                    next[j + 1] = &next[j + 1] + &(p * a1);
                    next[j] = &next[j] + &(p * a2);
                }
                power = next;
                let trace = Polynomial::from_terms(
                    1,
                    power
                        .iter()
                        .enumerate()
                        .map(|(j, p)| (vec![j as u32], p.trace()))
                        .filter(|(_, c)| !c.is_zero()),
                );
                g = g.gcd(&trace);
                if g.is_constant() && !g.is_zero() {
                    return Ok(true);
                }
            }
            Ok(false)
        }
        _ => Err(Error::Unsupported(format!(
            "nil-independence of {} outer elements",
            mats.len()
        ))),
    }
}
