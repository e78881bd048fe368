//! Characteristic series, centers and centralizers.

use serde::{Deserialize, Serialize};

use super::lie::LieAlgebra;
use super::subspace::Subspace;
use crate::exact::{QMatrix, Rational};

/// Dimension lists of the derived, lower central and upper central series.
///
/// A series that stabilizes at a nonzero term lists the repeated term once,
/// e.g. `[6, 4, 4]`; an upper central series starting from a zero center
/// is `[0]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeriesSignature {
    pub ds: Vec<usize>,
    pub cs: Vec<usize>,
    pub us: Vec<usize>,
}

/// `span{[x, y] : x in a, y in b}`.
pub fn bracket_span(l: &LieAlgebra, a: &Subspace, b: &Subspace) -> Subspace {
    let mut out = Vec::new();
    for x in a.basis() {
        for y in b.basis() {
            out.push(l.bracket(x, y).expect("subspace of the algebra"));
        }
    }
    Subspace::span(l.dim(), out)
}

fn iterate<F>(start: Subspace, step: F) -> Vec<Subspace>
where
    F: Fn(&Subspace) -> Subspace,
{
    let mut terms = vec![start];
    loop {
        let last = terms.last().expect("nonempty");
        if last.is_zero() {
            break;
        }
        let next = step(last);
        let stable = &next == last;
        terms.push(next);
        if stable {
            break;
        }
    }
    terms
}

pub fn derived_series(l: &LieAlgebra) -> Vec<Subspace> {
    iterate(Subspace::full(l.dim()), |g| bracket_span(l, g, g))
}

pub fn lower_central_series(l: &LieAlgebra) -> Vec<Subspace> {
    let full = Subspace::full(l.dim());
    iterate(full.clone(), |g| bracket_span(l, g, &full))
}

/// `{x : [x, y] in modulo for all y in h}`.
pub fn centralizer_modulo(l: &LieAlgebra, h: &Subspace, modulo: &Subspace) -> Subspace {
    let n = l.dim();
    let mut rows: Vec<Vec<Rational>> = Vec::new();
    for y in h.basis() {
        let images: Vec<Vec<Rational>> = (0..n)
            .map(|a| {
                let v = l.bracket(&l.basis_vector(a), y).expect("dimensions match");
                modulo.reduce(&v)
            })
            .collect();
        for c in 0..n {
            rows.push(images.iter().map(|img| img[c].clone()).collect());
        }
    }
    if rows.is_empty() {
        return Subspace::full(n);
    }
    Subspace::span(n, QMatrix::from_rows(rows).nullspace())
}

pub fn centralizer(l: &LieAlgebra, h: &Subspace) -> Subspace {
    centralizer_modulo(l, h, &Subspace::zero(l.dim()))
}

pub fn center(l: &LieAlgebra) -> Subspace {
    centralizer(l, &Subspace::full(l.dim()))
}

/// `z_1` is the center, `z_{k+1}/z_k` the center of `L/z_k`. Stops at the
/// whole algebra, at a repeated term, or immediately when the center is zero.
pub fn upper_central_series(l: &LieAlgebra) -> Vec<Subspace> {
    let full = Subspace::full(l.dim());
    let mut terms = vec![center(l)];
    loop {
        let last = terms.last().expect("nonempty");
        if last.is_zero() || last == &full {
            break;
        }
        let next = centralizer_modulo(l, &full, last);
        let stable = &next == last;
        terms.push(next);
        if stable {
            break;
        }
    }
    terms
}

fn dims(series: &[Subspace]) -> Vec<usize> {
    series.iter().map(Subspace::dim).collect()
}

pub fn series_signature(l: &LieAlgebra) -> SeriesSignature {
    SeriesSignature {
        ds: dims(&derived_series(l)),
        cs: dims(&lower_central_series(l)),
        us: dims(&upper_central_series(l)),
    }
}

/// Smallest `k` with `g^k = 0`, if the lower central series terminates.
pub fn nilpotency_degree(l: &LieAlgebra) -> Option<usize> {
    let cs = lower_central_series(l);
    cs.iter().position(Subspace::is_zero)
}

/// Smallest `k` with `g^(k) = 0`, if the derived series terminates.
pub fn solvability_depth(l: &LieAlgebra) -> Option<usize> {
    derived_series(l).iter().position(Subspace::is_zero)
}

pub fn is_nilpotent(l: &LieAlgebra) -> bool {
    nilpotency_degree(l).is_some()
}

pub fn is_solvable(l: &LieAlgebra) -> bool {
    solvability_depth(l).is_some()
}

pub fn is_ideal(l: &LieAlgebra, h: &Subspace) -> bool {
    h.contains_subspace(&bracket_span(l, h, &Subspace::full(l.dim())))
}

/// Whether the subalgebra `h` is nilpotent as a Lie algebra in its own right.
pub fn is_nilpotent_subalgebra(l: &LieAlgebra, h: &Subspace) -> bool {
    iterate(h.clone(), |g| bracket_span(l, g, h))
        .last()
        .is_some_and(Subspace::is_zero)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::int;

    fn heisenberg() -> LieAlgebra {
        let labels = ["x", "y", "z"].map(String::from).to_vec();
        LieAlgebra::new(labels, [(0, 1, vec![int(0), int(0), int(1)])]).unwrap()
    }

    #[test]
    fn abelian_series() {
        let a = LieAlgebra::abelian(3);
        let s = series_signature(&a);
        assert_eq!(s.ds, vec![3, 0]);
        assert_eq!(s.cs, vec![3, 0]);
        assert_eq!(s.us, vec![3]);
        assert_eq!(nilpotency_degree(&a), Some(1));
        assert_eq!(centralizer(&a, &Subspace::full(3)), Subspace::full(3));
    }

    #[test]
    fn heisenberg_series() {
        let h = heisenberg();
        let s = series_signature(&h);
        assert_eq!(s.ds, vec![3, 1, 0]);
        assert_eq!(s.cs, vec![3, 1, 0]);
        assert_eq!(s.us, vec![1, 3]);
        assert_eq!(center(&h), Subspace::coordinate(3, [2]));
        assert!(is_ideal(&h, &Subspace::coordinate(3, [2])));
        assert!(!is_ideal(
            &LieAlgebra::new(
                ["a", "b"].map(String::from).to_vec(),
                [(0, 1, vec![int(0), int(1)])]
            )
            .unwrap(),
            &Subspace::coordinate(2, [0])
        ));
    }

    #[test]
    fn non_nilpotent_two_dimensional() {
        // [a, b] = b
        let l = LieAlgebra::new(
            ["a", "b"].map(String::from).to_vec(),
            [(0, 1, vec![int(0), int(1)])],
        )
        .unwrap();
        let s = series_signature(&l);
        assert_eq!(s.ds, vec![2, 1, 0]);
        assert_eq!(s.cs, vec![2, 1, 1]);
        assert_eq!(s.us, vec![0]);
        assert!(is_solvable(&l));
        assert!(!is_nilpotent(&l));
    }
}
