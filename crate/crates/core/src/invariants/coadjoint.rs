use num_traits::Zero;
use rand::Rng;

use crate::algebra::LieAlgebra;
use crate::exact::{int, Polynomial, QMatrix, Rational, VectorField};

/// `G_k = sum_a (sum_b g_b c^b_{ka}) d/dg_a`, one operator per basis element.
pub fn coadjoint_operators(l: &LieAlgebra) -> Vec<VectorField> {
    let n = l.dim();
    (0..n)
        .map(|k| {
            VectorField::new(
                (0..n)
                    .map(|a| linear_form(n, &l.basis_bracket(k, a)))
                    .collect(),
            )
        })
        .collect()
}

fn linear_form(n: usize, v: &[Rational]) -> Polynomial {
    let mut p = Polynomial::zero(n);
    for (b, c) in v.iter().enumerate() {
        if !c.is_zero() {
            p = &p + &Polynomial::var(n, b).scale(c);
        }
    }
    p
}

/// `C[i][j] = sum_b c^b_{ij} g_b`.
pub fn structure_matrix(l: &LieAlgebra) -> Vec<Vec<Polynomial>> {
    let n = l.dim();
    (0..n)
        .map(|i| (0..n).map(|j| linear_form(n, &l.basis_bracket(i, j))).collect())
        .collect()
}

pub fn evaluate_matrix(c: &[Vec<Polynomial>], point: &[Rational]) -> QMatrix {
    QMatrix::from_rows(
        c.iter()
            .map(|row| row.iter().map(|p| p.eval(point)).collect())
            .collect(),
    )
}

pub fn random_integer_point<R: Rng>(rng: &mut R, n: usize, bound: i64) -> Vec<Rational> {
    (0..n).map(|_| int(rng.gen_range(-bound..=bound))).collect()
}

/// Maximum rank of `C` over `trials` random integer points with coordinates
/// in `[-bound, bound]`. Never exceeds the generic rank.
pub fn generic_rank<R: Rng>(c: &[Vec<Polynomial>], trials: usize, bound: i64, rng: &mut R) -> usize {
    let n = c.len();
    (0..trials.max(1))
        .map(|_| evaluate_matrix(c, &random_integer_point(rng, n, bound)).rank())
        .max()
        .unwrap_or(0)
}

/// Number of functionally independent invariants, `N - rank C`.
pub fn invariant_count<R: Rng>(l: &LieAlgebra, trials: usize, bound: i64, rng: &mut R) -> usize {
    l.dim() - generic_rank(&structure_matrix(l), trials, bound, rng)
}
