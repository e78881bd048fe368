//! Independent oracles and randomized property suites shared by the test
//! targets. Every suite draws from a fixed-seed ChaCha stream.

#![allow(dead_code)]

use nilrad::exact::{factorial, int, frac, LogPolynomial, Polynomial, QMatrix, Rational, RationalFunction, VectorField};
use nilrad::families::{build, FamilyKind, FamilyLabel};
use nilrad::invariants::{evaluate_matrix, structure_matrix, weighted_eigenvalue, xi};
use num_traits::{One, Zero};
use proptest::prelude::*;
use proptest::test_runner::{Config, RngAlgorithm, TestRng, TestRunner};

pub const SEED: u64 = 0x5eed;

pub fn runner(cases: u32, seed: u64) -> TestRunner {
    let mut bytes = [0u8; 32];
    bytes[..8].copy_from_slice(&seed.to_le_bytes());
    TestRunner::new_with_rng(
        Config {
            cases,
            failure_persistence: None,
            ..Config::default()
        },
        TestRng::from_seed(RngAlgorithm::ChaCha, &bytes),
    )
}

/// Structure constants of n(n,1) straight from its defining brackets:
/// `c[i][j][k]` with `[e_i, e_j] = sum_k c[i][j][k] e_k`, 0-based.
pub fn nilradical_constants(n: usize) -> Vec<Vec<Vec<i64>>> {
    let mut c = vec![vec![vec![0i64; n]; n]; n];
    for k in 1..n - 1 {
        c[k][n - 1][k - 1] = 1;
        c[n - 1][k][k - 1] = -1;
    }
    c
}

/// Rank by plain fraction-valued Gaussian elimination.
pub fn gauss_rank(mut rows: Vec<Vec<Rational>>) -> usize {
    let mut rank = 0;
    let cols = rows.first().map_or(0, Vec::len);
    for col in 0..cols {
        let Some(p) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        let pivot = rows[rank][col].clone();
        for r in 0..rows.len() {
            if r != rank && !rows[r][col].is_zero() {
                let f = rows[r][col].clone() / &pivot;
                for c in col..cols {
                    let v = rows[rank][c].clone() * &f;
                    rows[r][c] -= v;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Dimension of the derivation algebra: `N^2` minus the rank of the linear
/// system `D[x,y] = [Dx,y] + [x,Dy]` over all basis pairs.
pub fn brute_force_derivation_dim(c: &[Vec<Vec<i64>>]) -> usize {
    let n = c.len();
    let var = |a: usize, b: usize| a * n + b;
    let mut rows = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            for k in 0..n {
                let mut row = vec![Rational::zero(); n * n];
                for m in 0..n {
                    row[var(m, k)] += int(c[i][j][m]);
                    row[var(i, m)] -= int(c[m][j][k]);
                    row[var(j, m)] -= int(c[i][m][k]);
                }
                if row.iter().any(|x| !x.is_zero()) {
                    rows.push(row);
                }
            }
        }
    }
    n * n - gauss_rank(rows)
}

fn poly(nv: usize) -> impl Strategy<Value = Polynomial> {
    prop::collection::vec((prop::collection::vec(0u32..3, nv), -5i64..=5), 0..5)
        .prop_map(move |t| Polynomial::from_terms(nv, t.into_iter().map(|(e, c)| (e, int(c)))))
}

fn nonzero_poly(nv: usize) -> impl Strategy<Value = Polynomial> {
    poly(nv).prop_filter("nonzero", |p| !p.is_zero())
}

fn ratfunc(nv: usize) -> impl Strategy<Value = RationalFunction> {
    (poly(nv), nonzero_poly(nv)).prop_map(|(a, b)| RationalFunction::new(a, b).unwrap())
}

fn logpoly(nv: usize) -> impl Strategy<Value = LogPolynomial> {
    prop::collection::vec(ratfunc(nv), 0..3).prop_map(move |c| LogPolynomial::new(nv, c))
}

fn linear_field(nv: usize) -> impl Strategy<Value = VectorField> {
    prop::collection::vec(prop::collection::vec(-3i64..=3, nv), nv).prop_map(move |rows| {
        VectorField::new(
            rows.into_iter()
                .map(|r| {
                    r.into_iter().enumerate().fold(Polynomial::zero(nv), |acc, (i, c)| {
                        &acc + &Polynomial::var(nv, i).scale(&int(c))
                    })
                })
                .collect(),
        )
    })
}

fn matrix(rows: usize, cols: usize) -> impl Strategy<Value = QMatrix> {
    prop::collection::vec(prop::collection::vec(-3i64..=3, cols), rows)
        .prop_map(|r| QMatrix::from_rows(r.into_iter().map(|v| v.into_iter().map(int).collect()).collect()))
}

fn label() -> impl Strategy<Value = FamilyLabel> {
    (4usize..=7, 0usize..8, -3i64..=5, prop::collection::vec(-3i64..=3, 4)).prop_map(|(n, kind, beta, a)| {
        let simple = |k| FamilyLabel::simple(k, n).unwrap();
        match kind {
            0 => FamilyLabel::nilradical(n).unwrap(),
            1 => FamilyLabel::s1(n, int(beta)).unwrap_or_else(|_| simple(FamilyKind::S2)),
            2 => simple(FamilyKind::S2),
            3 => simple(FamilyKind::S3),
            4 => simple(FamilyKind::S4),
            5 => simple(FamilyKind::S5),
            6 => {
                let mut a: Vec<Rational> = a.into_iter().take(n - 3).map(int).collect();
                if a.iter().all(Zero::is_zero) {
                    a[0] = int(1);
                }
                FamilyLabel::s6(n, a).unwrap()
            }
            _ => simple(FamilyKind::Snp2),
        }
    })
}

fn report<T: std::fmt::Debug>(r: Result<(), proptest::test_runner::TestError<T>>) -> Result<(), String> {
    r.map_err(|e| e.to_string())
}

pub fn leibniz_polynomial(seed: u64) -> Result<(), String> {
    report(runner(64, seed).run(&(poly(3), poly(3), 0usize..3), |(p, q, v)| {
        let lhs = (&p * &q).diff(v);
        let rhs = &(&p.diff(v) * &q) + &(&p * &q.diff(v));
        prop_assert_eq!(lhs, rhs);
        Ok(())
    }))
}

pub fn leibniz_rational_function(seed: u64) -> Result<(), String> {
    report(runner(32, seed).run(&(ratfunc(3), ratfunc(3), linear_field(3)), |(r, s, x)| {
        let lhs = x.apply_rf(&(&r * &s));
        let rhs = &(&x.apply_rf(&r) * &s) + &(&r * &x.apply_rf(&s));
        prop_assert_eq!(lhs, rhs);
        Ok(())
    }))
}

pub fn leibniz_log_polynomial(seed: u64) -> Result<(), String> {
    report(runner(24, seed).run(&(logpoly(3), logpoly(3), linear_field(3), ratfunc(3)), |(p, q, x, dl)| {
        let lhs = (&p * &q).derive(&x, &dl);
        let rhs = &(&p.derive(&x, &dl) * &q) + &(&p * &q.derive(&x, &dl));
        prop_assert_eq!(lhs, rhs);
        Ok(())
    }))
}

pub fn rref_idempotent(seed: u64) -> Result<(), String> {
    report(runner(64, seed).run(&(1usize..6, 1usize..6).prop_flat_map(|(r, c)| matrix(r, c)), |m| {
        let once = m.rref();
        let twice = once.reduced.rref();
        prop_assert_eq!(&once.reduced, &twice.reduced);
        prop_assert_eq!(once.rank, twice.rank);
        prop_assert_eq!(once.rank, m.transpose().rank());
        Ok(())
    }))
}

fn det(m: &[Vec<Rational>]) -> Rational {
    if m.is_empty() {
        return Rational::one();
    }
    let mut acc = Rational::zero();
    for j in 0..m.len() {
        if m[0][j].is_zero() {
            continue;
        }
        let minor: Vec<Vec<Rational>> =
            m[1..].iter().map(|r| [&r[..j], &r[j + 1..]].concat()).collect();
        let t = m[0][j].clone() * det(&minor);
        if j % 2 == 0 {
            acc += t;
        } else {
            acc -= t;
        }
    }
    acc
}

fn choose(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    (k - 1..n)
        .flat_map(|last| {
            choose(last, k - 1).into_iter().map(move |mut s| {
                s.push(last);
                s
            })
        })
        .collect()
}

pub fn rank_by_minors(m: &QMatrix) -> usize {
    let rows = m.row_vecs();
    let (r, c) = (m.rows(), m.cols());
    (1..=r.min(c))
        .rev()
        .find(|&k| {
            choose(r, k).iter().any(|rs| {
                choose(c, k).iter().any(|cs| {
                    let sub: Vec<Vec<Rational>> =
                        rs.iter().map(|&i| cs.iter().map(|&j| rows[i][j].clone()).collect()).collect();
                    !det(&sub).is_zero()
                })
            })
        })
        .unwrap_or(0)
}

pub fn rank_matches_minors(seed: u64) -> Result<(), String> {
    report(runner(64, seed).run(&(1usize..5, 1usize..5).prop_flat_map(|(r, c)| matrix(r, c)), |m| {
        prop_assert_eq!(m.rank(), rank_by_minors(&m));
        Ok(())
    }))
}

pub fn gcd_divides(seed: u64) -> Result<(), String> {
    report(runner(48, seed).run(&(nonzero_poly(2), nonzero_poly(2), nonzero_poly(2)), |(g, a, b)| {
        let p = &g * &a;
        let q = &g * &b;
        let d = p.gcd(&q);
        prop_assert!(p.div_exact(&d).is_some());
        prop_assert!(q.div_exact(&d).is_some());
        prop_assert!(d.div_exact(&g.monic()).is_some(), "gcd {} misses common factor {}", d, g);
        Ok(())
    }))
}

pub fn field_inverse(seed: u64) -> Result<(), String> {
    report(runner(48, seed).run(&ratfunc(3), |r| {
        if r.is_zero() {
            prop_assert!(r.recip().is_err());
        } else {
            let inv = r.recip().unwrap();
            prop_assert_eq!(&r * &inv, RationalFunction::one(3));
        }
        Ok(())
    }))
}

pub fn structure_matrix_antisymmetric_even_rank(seed: u64) -> Result<(), String> {
    let strat = (label(), prop::collection::vec(-50i64..=50, 9));
    report(runner(32, seed).run(&strat, |(label, pt)| {
        let l = build(&label).unwrap();
        let c = structure_matrix(&l);
        let n = l.dim();
        for i in 0..n {
            prop_assert!(c[i][i].is_zero());
            for j in 0..n {
                prop_assert_eq!(&c[i][j], &-&c[j][i]);
            }
        }
        let point: Vec<Rational> = pt.into_iter().take(n).map(int).collect();
        let r = evaluate_matrix(&c, &point).rank();
        prop_assert_eq!(r % 2, 0, "{} rank {}", label, r);
        Ok(())
    }))
}

pub fn eigenvalue_law(seed: u64) -> Result<(), String> {
    let strat = (5usize..=9, -6i64..=6, -6i64..=6, 1i64..=3).prop_flat_map(|(n, a, b, d)| (Just(n), Just(a), Just(b), Just(d), 0..n - 2));
    report(runner(64, seed).run(&strat, |(n, a, b, d, k)| {
        let (alpha, beta) = (frac(a, d), frac(b, d));
        let weight = |j: usize| &alpha * int(n as i64 - 1 - j as i64) + &beta;
        let mut coeffs = vec![Polynomial::zero(n); n];
        for j in 1..n {
            coeffs[j - 1] = Polynomial::var(n, j - 1).scale(&weight(j));
        }
        let op = VectorField::new(coeffs);
        let p = xi(n, k).unwrap();
        let lambda = weighted_eigenvalue(&op, &p).unwrap();
        let expected = if k == 0 { weight(1) } else { int(k as i64 + 1) * weight(2) };
        prop_assert_eq!(lambda, expected);
        prop_assert_eq!(weighted_eigenvalue(&op, &Polynomial::one(n)).unwrap(), int(0));
        Ok(())
    }))
}

pub fn xi_structure(seed: u64) -> Result<(), String> {
    let strat = (4usize..=12).prop_flat_map(|n| (Just(n), 1..n - 2));
    report(runner(48, seed).run(&strat, |(n, k)| {
        let p = xi(n, k).unwrap();
        prop_assert_eq!(p.num_terms(), k + 1);
        let f = Rational::from_integer(factorial(k as u32 + 1));
        for (_, c) in p.terms() {
            prop_assert!((c * &f).is_integer());
        }
        Ok(())
    }))
}

pub type Suite = (&'static str, fn(u64) -> Result<(), String>);

pub const SUITES: [Suite; 10] = [
    ("leibniz_polynomial", leibniz_polynomial),
    ("leibniz_rational_function", leibniz_rational_function),
    ("leibniz_log_polynomial", leibniz_log_polynomial),
    ("rref_idempotent", rref_idempotent),
    ("rank_matches_minors", rank_matches_minors),
    ("gcd_divides", gcd_divides),
    ("field_inverse", field_inverse),
    ("structure_matrix_antisymmetric_even_rank", structure_matrix_antisymmetric_even_rank),
    ("eigenvalue_law", eigenvalue_law),
    ("xi_structure", xi_structure),
];
