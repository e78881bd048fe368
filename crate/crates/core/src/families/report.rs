use serde::Serialize;

use super::build::build_nilradical;
use crate::algebra::{derivation_space, inner_derivation_space, verify_lemma1_pattern, verify_lemma1_printed_pattern};
use crate::error::Result;
use crate::exact::QMatrix;

/// Derivations of `n(n,1)` together with the verdicts of both readings of
/// the diagonal rule.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DerivationReport {
    pub n: usize,
    pub dim: usize,
    pub inner_dim: usize,
    /// Every basis element has `D_ii = (n-1-i) D_nn + D_{n-1,n-1}`.
    pub diagonal_rule_n_minus_i_minus_1: bool,
    /// Every basis element has `D_ii = (n-i+1) D_nn + D_{n-1,n-1}`.
    pub diagonal_rule_n_minus_i_plus_1: bool,
    pub basis: Vec<Vec<Vec<String>>>,
    pub inner_basis: Vec<Vec<Vec<String>>>,
}

fn rows(m: &QMatrix) -> Vec<Vec<String>> {
    m.row_vecs()
        .iter()
        .map(|r| r.iter().map(ToString::to_string).collect())
        .collect()
}

pub fn derivation_report(n: usize) -> Result<DerivationReport> {
    let l = build_nilradical(n)?;
    let basis = derivation_space(&l);
    let inner = inner_derivation_space(&l);
    Ok(DerivationReport {
        n,
        dim: basis.len(),
        inner_dim: inner.len(),
        diagonal_rule_n_minus_i_minus_1: verify_lemma1_pattern(n, &basis),
        diagonal_rule_n_minus_i_plus_1: verify_lemma1_printed_pattern(n, &basis),
        basis: basis.iter().map(rows).collect(),
        inner_basis: inner.iter().map(rows).collect(),
    })
}
