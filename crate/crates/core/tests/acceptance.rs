//! Runs every acceptance criterion and prints one PASS/FAIL line each.
//! Exits nonzero when any criterion fails.

mod common;

use std::process::ExitCode;

use nilrad::algebra::{
    bracket_span, derivation_space, inner_derivation_space, is_ideal, is_nilpotent_subalgebra, nil_independent,
    series_signature, verify_lemma1_pattern, LieAlgebra, Subspace,
};
use nilrad::exact::{frac, int, QMatrix, Rational};
use nilrad::families::{
    apply_basis_change, build, build_nilradical, canonical_derivation, classify_algebra, derivation_report,
    jordan_matrix, kernel_in_image, BasisChange, ExtensionSpec, FamilyKind, FamilyLabel, FieldTag,
};
use nilrad::invariants::{
    coadjoint_operators, invariant_count, invariant_family, verify_theorem, xi, Report, Sampling,
};
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

/// DS, CS, US as printed for each family.
fn printed_series(kind: FamilyKind, n: usize) -> (Vec<usize>, Vec<usize>, Vec<usize>) {
    use FamilyKind::*;
    match kind {
        Nilradical => {
            let mut cs = vec![n, n - 2];
            cs.extend((0..n - 2).rev());
            let mut us: Vec<usize> = (1..n - 1).collect();
            us.push(n);
            (vec![n, n - 2, 0], cs, us)
        }
        S1 | S5 => (vec![n + 1, n, n - 2, 0], vec![n + 1, n, n], vec![0]),
        S2 => (vec![n + 1, n - 1, n - 3, 0], vec![n + 1, n - 1, n - 1], vec![0]),
        S3 => (vec![n + 1, n, n - 2, 0], vec![n + 1, n, n], vec![1, 1]),
        S4 | S6 => (vec![n + 1, n - 1, 0], vec![n + 1, n - 1, n - 1], vec![0]),
        Snp2 => (vec![n + 2, n, n - 2, 0], vec![n + 2, n, n], vec![0]),
    }
}

fn random_s6_params<R: Rng>(rng: &mut R, n: usize) -> Vec<Rational> {
    loop {
        let a: Vec<Rational> = (0..n - 3).map(|_| int(rng.gen_range(-3..=3))).collect();
        if a.iter().any(|x| !x.is_zero()) {
            return a;
        }
    }
}

/// Every family for n = 4..8: the beta grid -3..5 for S1 (minus 0, n-2 and
/// 2-n, which are other families or excluded), ten random S6 vectors per n
/// read over both fields, and the parameter-free families.
fn grid() -> Vec<(FamilyLabel, FieldTag)> {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut cells = Vec::new();
    for n in 4..=8usize {
        let ni = n as i64;
        cells.push((FamilyLabel::nilradical(n).unwrap(), FieldTag::Real));
        for beta in -3..=5i64 {
            if beta == 0 || beta == ni - 2 || beta == 2 - ni {
                continue;
            }
            cells.push((FamilyLabel::s1(n, int(beta)).unwrap(), FieldTag::Real));
        }
        for kind in [FamilyKind::S2, FamilyKind::S3, FamilyKind::S4, FamilyKind::S5, FamilyKind::Snp2] {
            cells.push((FamilyLabel::simple(kind, n).unwrap(), FieldTag::Real));
        }
        for _ in 0..10 {
            let raw = FamilyLabel::s6(n, random_s6_params(&mut rng, n)).unwrap();
            for field in [FieldTag::Real, FieldTag::Complex] {
                let label = raw.canonicalize(field).unwrap_or_else(|_| raw.clone());
                cells.push((label, field));
            }
        }
    }
    cells
}

fn reports(cells: &[(FamilyLabel, FieldTag)]) -> Result<Vec<Report>, String> {
    cells
        .iter()
        .map(|(l, f)| verify_theorem(l, *f, Sampling::default()).map_err(|e| format!("{l}: {e}")))
        .collect()
}

fn check(r: &Report, name: &str) -> bool {
    r.checks.iter().find(|c| c.name == name).is_some_and(|c| c.pass)
}

fn criterion_1() -> Outcome {
    for n in 4..=10 {
        let sig = series_signature(&build_nilradical(n).map_err(|e| e.to_string())?);
        let (ds, cs, us) = printed_series(FamilyKind::Nilradical, n);
        ensure(sig.ds == ds && sig.cs == cs && sig.us == us, || {
            format!("n = {n}: got DS={:?} CS={:?} US={:?}", sig.ds, sig.cs, sig.us)
        })?;
    }
    Ok("n = 4..10".into())
}

fn criterion_2(cells: &[(FamilyLabel, FieldTag)]) -> Outcome {
    for (label, field) in cells {
        let sig = series_signature(&build(label).map_err(|e| e.to_string())?);
        let (ds, cs, us) = printed_series(label.kind(), label.n());
        ensure(sig.ds == ds && sig.cs == cs && sig.us == us, || {
            format!("{label} ({field}): got DS={:?} CS={:?} US={:?}", sig.ds, sig.cs, sig.us)
        })?;
    }
    Ok(format!("{} cells", cells.len()))
}

fn criterion_3() -> Outcome {
    for n in 4..=8 {
        let oracle = common::brute_force_derivation_dim(&common::nilradical_constants(n));
        let l = build_nilradical(n).map_err(|e| e.to_string())?;
        let basis = derivation_space(&l);
        ensure(basis.len() == oracle && oracle == 2 * n - 1, || {
            format!("n = {n}: solver {} oracle {oracle}", basis.len())
        })?;
        let inner = inner_derivation_space(&l).len();
        ensure(inner == n - 1, || format!("n = {n}: inner dimension {inner}"))?;
        for (i, d) in basis.iter().enumerate() {
            ensure(verify_lemma1_pattern(n, std::slice::from_ref(d)), || {
                format!("n = {n}: basis element {i} breaks the pattern")
            })?;
        }
        let report = derivation_report(n).map_err(|e| e.to_string())?;
        ensure(
            report.diagonal_rule_n_minus_i_minus_1 && !report.diagonal_rule_n_minus_i_plus_1,
            || format!("n = {n}: diagonal rule verdicts {report:?}"),
        )?;
    }
    Ok("dims 2n-1 / n-1; diagonal (n-1-i) holds, (n-i+1) recorded as failing".into())
}

fn count_cells(n: usize) -> Vec<FamilyLabel> {
    let mut v = vec![FamilyLabel::nilradical(n).unwrap()];
    for beta in [int(-3), frac(1, 2), int(5)] {
        if let Ok(l) = FamilyLabel::s1(n, beta) {
            v.push(l);
        }
    }
    for kind in [FamilyKind::S2, FamilyKind::S3, FamilyKind::S4, FamilyKind::S5, FamilyKind::Snp2] {
        v.push(FamilyLabel::simple(kind, n).unwrap());
    }
    v.push(FamilyLabel::s6(n, vec![int(1)]).unwrap());
    let mut last = vec![int(0); n - 3];
    last[n - 4] = int(-2);
    v.push(FamilyLabel::s6(n, last).unwrap());
    v
}

fn criterion_4() -> Outcome {
    let s = Sampling::default();
    let mut cells = 0;
    for n in 4..=9 {
        for label in count_cells(n) {
            let l = build(&label).map_err(|e| e.to_string())?;
            let expected = match label.kind() {
                FamilyKind::Nilradical => n - 2,
                FamilyKind::Snp2 => n - 4,
                _ => n - 3,
            };
            let first = invariant_count(&l, s.trials, s.bound, &mut s.rng());
            let again = invariant_count(&l, s.trials, s.bound, &mut s.rng());
            ensure(first == expected && again == first, || {
                format!("{label}: counts {first}, {again}; expected {expected}")
            })?;
            let built = invariant_family(&label).map_err(|e| e.to_string())?;
            ensure(built.len() == expected, || format!("{label}: {} invariants built", built.len()))?;
            cells += 1;
        }
    }
    let snp2 = FamilyLabel::simple(FamilyKind::Snp2, 4).unwrap();
    let r = verify_theorem(&snp2, FieldTag::Real, s).map_err(|e| e.to_string())?;
    ensure(
        r.count_computed == 0 && r.invariants.is_empty() && r.annihilation.is_empty() && r.pass,
        || format!("s(n+2) at n = 4: {r:?}"),
    )?;
    Ok(format!("{cells} cells, 5 trials, seed {}", s.seed))
}

fn criterion_5(cells: &[(FamilyLabel, FieldTag)], reports: &[Report]) -> Outcome {
    for n in 4..=8 {
        let ops = coadjoint_operators(&build_nilradical(n).map_err(|e| e.to_string())?);
        for k in 0..=n - 3 {
            let p = xi(n, k).map_err(|e| e.to_string())?;
            for (i, op) in ops.iter().enumerate() {
                ensure(op.apply(&p).is_zero(), || format!("n = {n}: E_{} xi_{k} != 0", i + 1))?;
            }
        }
    }
    for ((label, _), r) in cells.iter().zip(reports) {
        let truncated = label.kind() == FamilyKind::Nilradical
            || (check(r, "truncated_annihilation") && check(r, "truncated_operator_form"));
        ensure(check(r, "coadjoint_annihilation") && truncated, || {
            format!("{label}: {:?}", r.witnesses)
        })?;
    }
    Ok(format!("xi for n = 4..8 and {} family cells", cells.len()))
}

fn criterion_6(cells: &[(FamilyLabel, FieldTag)], reports: &[Report]) -> Outcome {
    for ((label, _), r) in cells.iter().zip(reports) {
        ensure(r.independence_rank == r.invariants.len() && check(r, "functional_independence"), || {
            format!("{label}: rank {} of {}", r.independence_rank, r.invariants.len())
        })?;
    }
    Ok(format!("{} cells, 5 trials, bound 1000", cells.len()))
}

fn outcome_key(r: &nilrad::Result<nilrad::families::Classification>) -> String {
    match r {
        Ok(c) => c.label.to_string(),
        Err(e) => format!("error: {}", error_kind(e)),
    }
}

fn error_kind(e: &nilrad::Error) -> &'static str {
    use nilrad::Error::*;
    match e {
        ExcludedParameter(_) => "excluded",
        IrrationalNormalization(_) => "irrational",
        NilpotentInput => "nilpotent",
        NotNilIndependent(_) => "nil-dependent",
        CommutatorNotInner => "commutator",
        _ => "other",
    }
}

fn random_rational<R: Rng>(rng: &mut R, bound: i64) -> Rational {
    frac(rng.gen_range(-bound..=bound), rng.gen_range(1..=3))
}

fn nonzero_rational<R: Rng>(rng: &mut R, bound: i64) -> Rational {
    loop {
        let r = random_rational(rng, bound);
        if !r.is_zero() {
            return r;
        }
    }
}

/// A random table-preserving change of basis on the nilradical, followed by
/// `f_i -> c_i f_i + x_i` with random `c_i != 0` and `x_i` in the nilradical.
fn disguise<R: Rng>(rng: &mut R, l: &LieAlgebra, n: usize) -> Result<LieAlgebra, String> {
    let t = if rng.gen_bool(0.5) {
        BasisChange::Scaling {
            omega: nonzero_rational(rng, 3),
            tau: nonzero_rational(rng, 3),
        }
    } else {
        BasisChange::Unipotent {
            u: (0..n - 2).map(|_| random_rational(rng, 3)).collect(),
            v: (0..n - 1).map(|_| random_rational(rng, 3)).collect(),
        }
    };
    let (l, _) = apply_basis_change(l, n, &t).map_err(|e| e.to_string())?;
    let dim = l.dim();
    let mut m = QMatrix::identity(dim);
    for f in n..dim {
        m[(f, f)] = nonzero_rational(rng, 3);
        for a in 0..n {
            m[(f, a)] = random_rational(rng, 3);
        }
    }
    l.change_basis(&m).map_err(|e| e.to_string())
}

fn same_table(a: &LieAlgebra, b: &LieAlgebra) -> bool {
    a.dim() == b.dim() && (0..a.dim()).all(|i| (0..a.dim()).all(|j| a.basis_bracket(i, j) == b.basis_bracket(i, j)))
}

fn criterion_7() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut labelled = 0;
    for cell in 0..200 {
        let n = rng.gen_range(4..=8usize);
        let field = if rng.gen_bool(0.5) { FieldTag::Real } else { FieldTag::Complex };
        let alpha = match rng.gen_range(0..3) {
            0 => int(0),
            _ => nonzero_rational(&mut rng, 3),
        };
        let beta = if alpha.is_zero() || rng.gen_bool(0.2) {
            // hit the special diagonals now and then
            match rng.gen_range(0..4) {
                0 => int(0),
                1 => &alpha * int(2 - n as i64),
                2 => alpha.clone(),
                _ => nonzero_rational(&mut rng, 4),
            }
        } else {
            random_rational(&mut rng, 4)
        };
        let beta = if alpha.is_zero() && beta.is_zero() { int(1) } else { beta };
        let a: Vec<Rational> = (0..n - 2)
            .map(|_| if rng.gen_bool(0.5) { int(0) } else { random_rational(&mut rng, 3) })
            .collect();
        let d = canonical_derivation(n, &alpha, &beta, &a);
        let input = ExtensionSpec::new(n, vec![d], int(0)).extension_algebra().map_err(|e| e.to_string())?;
        let base = classify_algebra(&input, field);
        let key = outcome_key(&base);
        for _ in 0..2 {
            let moved = disguise(&mut rng, &input, n)?;
            let other = outcome_key(&classify_algebra(&moved, field));
            ensure(other == key, || {
                format!("cell {cell}: n={n} alpha={alpha} beta={beta} a={a:?} {field}: {key} vs {other}")
            })?;
        }
        if let Ok(c) = &base {
            labelled += 1;
            let rebuilt = build(&c.label).map_err(|e| e.to_string())?;
            let again = classify_algebra(&rebuilt, field).map_err(|e| format!("{}: {e}", c.label))?;
            ensure(again.label == c.label, || format!("round trip {} -> {}", c.label, again.label))?;
            if let Some(norm) = &c.normalized {
                ensure(same_table(norm, &rebuilt), || format!("cell {cell}: normalized table differs from {}", c.label))?;
            }
        }
    }

    for cell in 0..40 {
        let n = rng.gen_range(4..=8usize);
        let nil = build_nilradical(n).map_err(|e| e.to_string())?;
        let (a1, b1, a2, b2) = loop {
            let v: Vec<Rational> = (0..4).map(|_| random_rational(&mut rng, 3)).collect();
            if &v[0] * &v[3] != &v[1] * &v[2] {
                break (v[0].clone(), v[1].clone(), v[2].clone(), v[3].clone());
            }
        };
        let zero = vec![int(0); n - 2];
        let mut ds = Vec::new();
        for (alpha, beta) in [(a1, b1), (a2, b2)] {
            let x: Vec<Rational> = (0..n).map(|_| random_rational(&mut rng, 3)).collect();
            let ad = nil.ad_matrix(&x).map_err(|e| e.to_string())?;
            ds.push(&canonical_derivation(n, &alpha, &beta, &zero) + &ad);
        }
        let gamma = nonzero_rational(&mut rng, 5);
        let input = ExtensionSpec::new(n, ds, gamma).extension_algebra().map_err(|e| e.to_string())?;
        let input = disguise(&mut rng, &input, n)?;
        let c = classify_algebra(&input, FieldTag::Real).map_err(|e| format!("pair cell {cell}: {e}"))?;
        ensure(c.label.kind() == FamilyKind::Snp2, || format!("pair cell {cell}: {}", c.label))?;
        let norm = c.normalized.ok_or("pair cell without normalized algebra")?;
        ensure(norm.basis_bracket(n, n + 1).iter().all(Zero::is_zero), || {
            format!("pair cell {cell}: [f1,f2] = {:?}", norm.basis_bracket(n, n + 1))
        })?;
        ensure(same_table(&norm, &build(&c.label).map_err(|e| e.to_string())?), || {
            format!("pair cell {cell}: normalized table differs")
        })?;
    }
    Ok(format!("200 single cells ({labelled} named), 40 pair cells"))
}

fn criterion_8() -> Outcome {
    let mut checked = 0;
    for n in 4..=8 {
        for label in count_cells(n) {
            if label.kind() == FamilyKind::Nilradical {
                continue;
            }
            let l = build(&label).map_err(|e| e.to_string())?;
            let dim = l.dim();
            let nil = Subspace::coordinate(dim, 0..n);
            let full = Subspace::full(dim);
            ensure(is_ideal(&l, &nil) && is_nilpotent_subalgebra(&l, &nil), || {
                format!("{label}: e1..en is not a nilpotent ideal")
            })?;
            let outer: Vec<Vec<Rational>> = (n..dim).map(|f| l.basis_vector(f)).collect();
            let maximal = nil_independent(&l, &nil, &outer).map_err(|e| e.to_string())?;
            ensure(maximal, || format!("{label}: outer part is nil-dependent"))?;
            ensure(2 * nil.dim() >= dim, || format!("{label}: nilradical {} of {dim}", nil.dim()))?;
            ensure(nil.contains_subspace(&bracket_span(&l, &full, &full)), || {
                format!("{label}: [s,s] not inside the nilradical")
            })?;
            checked += 1;
        }
    }
    for n in 3..=12 {
        let m = jordan_matrix(n);
        ensure(kernel_in_image(&m), || format!("Jordan block n = {n}: Ker not in Im"))?;
        // a single nilpotent block of size >= 2 has Ker M = Im M^(size-1), inside Im M
        let size = n - 1;
        let single_block = m.rank() == size - 1 && m.pow(size as u32).is_zero() && !m.pow(size as u32 - 1).is_zero();
        ensure(single_block, || format!("Jordan block n = {n} is not a single nilpotent block"))?;
    }
    ensure(!kernel_in_image(&QMatrix::zeros(2, 2)), || "zero 2x2 matrix reported Ker in Im".into())?;
    Ok(format!("{checked} solvable algebras; Jordan blocks n = 3..12"))
}

fn criterion_9() -> Outcome {
    for (name, suite) in common::SUITES {
        suite(common::SEED).map_err(|e| format!("{name}: {e}"))?;
    }
    Ok(format!("{} suites, seed {:#x}", common::SUITES.len(), common::SEED))
}

fn main() -> ExitCode {
    let cells = grid();
    let sweep = reports(&cells);
    let from_sweep = |f: fn(&[(FamilyLabel, FieldTag)], &[Report]) -> Outcome| match &sweep {
        Ok(r) => f(&cells, r),
        Err(e) => Err(e.clone()),
    };
    let results: Vec<(&str, Outcome)> = vec![
        ("series of n(n,1)", criterion_1()),
        ("series signatures of all families", criterion_2(&cells)),
        ("derivations of n(n,1)", criterion_3()),
        ("invariant counts via rank", criterion_4()),
        ("exact annihilation", from_sweep(criterion_5)),
        ("functional independence", from_sweep(criterion_6)),
        ("classifier round trip and basis-change invariance", criterion_7()),
        ("structural inequalities", criterion_8()),
        ("property suites", criterion_9()),
    ];
    let mut failed = 0;
    for (i, (name, r)) in results.iter().enumerate() {
        match r {
            Ok(detail) => println!("criterion {}: PASS  {name} ({detail})", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {}: FAIL  {name}: {why}", i + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
