use num_traits::{One, Zero};

use super::label::{FamilyKind, FamilyLabel};
use crate::algebra::{LieAlgebra, Subspace};
use crate::error::{Error, Result};
use crate::exact::{int, QMatrix, Rational};

fn labels(n: usize, outer: usize) -> Vec<String> {
    let mut l: Vec<String> = (1..=n).map(|i| format!("e{i}")).collect();
    match outer {
        0 => {}
        1 => l.push("f".into()),
        p => l.extend((1..=p).map(|i| format!("f{i}"))),
    }
    l
}

fn unit(dim: usize, i: usize, c: Rational) -> Vec<Rational> {
    let mut v = vec![Rational::zero(); dim];
    v[i] = c;
    v
}

fn nilradical_brackets(n: usize, dim: usize) -> Vec<(usize, usize, Vec<Rational>)> {
    // [e_k, e_n] = e_{k-1}, 2 <= k <= n-1 (0-based: k-1 and n-1)
    (2..n)
        .map(|k| (k - 1, n - 1, unit(dim, k - 2, Rational::one())))
        .collect()
}

/// `n(n,1)`: `[e_k, e_n] = e_{k-1}` for `2 <= k <= n-1`.
pub fn build_nilradical(n: usize) -> Result<LieAlgebra> {
    FamilyLabel::nilradical(n)?;
    LieAlgebra::new(labels(n, 0), nilradical_brackets(n, n))
}

/// Derivation of `n(n,1)` in the canonical shape: diagonal
/// `(n-1-j) alpha + beta` for `j <= n-1`, `alpha` last; `D[k][l] = a_{k-l+1}`
/// for `l <= k-2 < n-1`; `D[n][n-1] = a_n`.
///
/// `a` lists `a_3, ..., a_n`; missing trailing entries are zero.
pub fn canonical_derivation(n: usize, alpha: &Rational, beta: &Rational, a: &[Rational]) -> QMatrix {
    let get = |j: usize| a.get(j - 3).cloned().unwrap_or_else(Rational::zero);
    let mut d = QMatrix::zeros(n, n);
    for j in 1..n {
        d[(j - 1, j - 1)] = alpha * int((n - 1 - j) as i64) + beta;
    }
    d[(n - 1, n - 1)] = alpha.clone();
    for k in 3..n {
        for l in 1..=k - 2 {
            d[(k - 1, l - 1)] = get(k - l + 1);
        }
    }
    if n >= 3 {
        d[(n - 1, n - 2)] = get(n);
    }
    d
}

/// The derivations (row convention) that the outer elements of `label` act
/// by on the nilradical.
pub fn outer_derivations(label: &FamilyLabel) -> Vec<QMatrix> {
    let n = label.n();
    let zero = Rational::zero();
    let one = Rational::one();
    match label.kind() {
        FamilyKind::Nilradical => Vec::new(),
        FamilyKind::Snp2 => vec![
            canonical_derivation(n, &one, &zero, &[]),
            canonical_derivation(n, &zero, &one, &[]),
        ],
        FamilyKind::S5 => {
            let mut a = vec![zero; n - 2];
            a[n - 3] = one.clone();
            vec![canonical_derivation(n, &one, &one, &a)]
        }
        FamilyKind::S6 => vec![canonical_derivation(n, &zero, &one, label.params())],
        _ => {
            let (alpha, beta) = label.alpha_beta().expect("one outer element");
            vec![canonical_derivation(n, &alpha, &beta, &[])]
        }
    }
}

/// The algebra named by `label`, in the basis `e1..en, f` or
/// `e1..en, f1, f2`.
pub fn build(label: &FamilyLabel) -> Result<LieAlgebra> {
    let n = label.n();
    let derivations = outer_derivations(label);
    let p = derivations.len();
    let dim = n + p;
    let mut brackets = nilradical_brackets(n, dim);
    for (i, d) in derivations.iter().enumerate() {
        for k in 0..n {
            let mut v = d.row(k).to_vec();
            v.resize(dim, Rational::zero());
            brackets.push((n + i, k, v));
        }
    }
    LieAlgebra::new(labels(n, p), brackets)
}

/// The matrix `M` with `[e_k, e_n] = sum_j M[k][j] e_j` on `span{e_1..e_{n-1}}`:
/// a single nilpotent Jordan block.
pub fn jordan_matrix(n: usize) -> QMatrix {
    let mut m = QMatrix::zeros(n - 1, n - 1);
    for k in 2..n {
        m[(k - 1, k - 2)] = Rational::one();
    }
    m
}

/// `Ker M ⊆ Im M`, with `M` acting on row vectors.
pub fn kernel_in_image(m: &QMatrix) -> bool {
    let n = m.rows();
    let kernel = Subspace::span(n, m.transpose().nullspace());
    let image = Subspace::span(n, m.row_vecs());
    image.contains_subspace(&kernel)
}

/// `(2n-1)^2 >= 8n+1`.
pub fn abelian_subalgebra_bound(n: usize) -> bool {
    let n = n as i128;
    (2 * n - 1) * (2 * n - 1) > 8 * n
}

/// Checks that `label` builds, i.e. its parameters are admissible.
pub fn validate(label: &FamilyLabel) -> Result<()> {
    if label.n() < 4 {
        return Err(Error::BadDimension(format!("n = {}", label.n())));
    }
    build(label).map(|_| ())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::frac;

    #[test]
    fn nilradical_table() {
        let l = build_nilradical(5).unwrap();
        assert_eq!(l.basis_bracket(2, 4), unit(5, 1, int(1)));
        assert_eq!(l.basis_bracket(0, 4), vec![int(0); 5]);
        assert!(build_nilradical(3).is_err());
    }

    #[test]
    fn jordan_matches_adjoint() {
        let n = 6;
        let l = build_nilradical(n).unwrap();
        let ad = l.ad_matrix(&l.basis_vector(n - 1)).unwrap();
        let m = jordan_matrix(n);
        for i in 0..n - 1 {
            for j in 0..n - 1 {
                assert_eq!(ad[(i, j)], -m[(i, j)].clone());
            }
        }
        assert!(kernel_in_image(&jordan_matrix(4)));
        assert!(!kernel_in_image(&QMatrix::zeros(2, 2)));
    }

    #[test]
    fn canonical_layout() {
        let d = canonical_derivation(5, &int(1), &frac(1, 2), &[int(7), int(8), int(9)]);
        assert_eq!(d[(0, 0)], frac(7, 2));
        assert_eq!(d[(3, 3)], frac(1, 2));
        assert_eq!(d[(4, 4)], int(1));
        assert_eq!(d[(2, 0)], int(7));
        assert_eq!(d[(3, 1)], int(7));
        assert_eq!(d[(3, 0)], int(8));
        assert_eq!(d[(4, 3)], int(9));
        assert_eq!(d[(4, 0)], int(0));
    }

    #[test]
    fn bound() {
        assert!(!abelian_subalgebra_bound(2));
        assert!(abelian_subalgebra_bound(4));
    }
}
