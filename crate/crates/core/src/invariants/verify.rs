use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::coadjoint::{coadjoint_operators, generic_rank, structure_matrix};
use super::expr::InvariantExpr;
use super::family::{expected_count, invariant_family, truncated_from_coadjoint, truncated_operators};
use crate::algebra::{series_signature, SeriesSignature};
use crate::error::{Error, Result};
use crate::exact::{QMatrix, Rational, VectorField};
use crate::families::{build, FamilyKind, FamilyLabel, FieldTag};

/// Randomized evaluation settings. Everything random is drawn from a
/// ChaCha8 stream seeded with `seed`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Sampling {
    pub trials: usize,
    pub bound: i64,
    pub seed: u64,
}

impl Default for Sampling {
    fn default() -> Self {
        Sampling {
            trials: 5,
            bound: 1000,
            seed: 0,
        }
    }
}

impl Sampling {
    pub fn rng(&self) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.seed)
    }
}

/// Whether every operator sends `inv` to zero.
pub fn verify_annihilation(ops: &[VectorField], inv: &InvariantExpr) -> bool {
    ops.iter().all(|x| inv.annihilated_by(x))
}

fn random_rational<R: Rng>(rng: &mut R, bound: i64) -> Rational {
    let p = rng.gen_range(-bound..=bound);
    let q = rng.gen_range(1..=bound.max(1));
    Rational::new(BigInt::from(p), BigInt::from(q))
}

const RESAMPLES: usize = 20;

/// Maximum rank of the Jacobian of `invs` over `trials` random rational
/// points (and random values of `L`). Points where a factor or denominator
/// vanishes are resampled; if no trial finds a usable point the result is
/// `DegeneratePoint`.
pub fn functional_independence<R: Rng>(
    invs: &[InvariantExpr],
    trials: usize,
    bound: i64,
    rng: &mut R,
) -> Result<usize> {
    let Some(first) = invs.first() else {
        return Ok(0);
    };
    let nv = first.nvars();
    let mut best = None;
    let mut attempts = 0;
    for _ in 0..trials.max(1) {
        for _ in 0..RESAMPLES {
            attempts += 1;
            let point: Vec<Rational> = (0..nv).map(|_| random_rational(rng, bound)).collect();
            let lambda = random_rational(rng, bound);
            let rows: Result<Vec<Vec<Rational>>> =
                invs.iter().map(|i| i.reduced_gradient(&point, &lambda)).collect();
            if let Ok(rows) = rows {
                let r = QMatrix::from_rows(rows).rank();
                best = Some(best.map_or(r, |b: usize| b.max(r)));
                break;
            }
        }
    }
    best.ok_or(Error::DegeneratePoint(attempts))
}

/// DS/CS/US dimension lists the family is known to have.
pub fn expected_signature(label: &FamilyLabel) -> SeriesSignature {
    let n = label.n();
    let sig = |ds: Vec<usize>, cs: Vec<usize>, us: Vec<usize>| SeriesSignature { ds, cs, us };
    match label.kind() {
        FamilyKind::Nilradical => {
            let mut cs = vec![n];
            cs.extend((0..=n - 2).rev());
            let mut us: Vec<usize> = (1..=n - 2).collect();
            us.push(n);
            sig(vec![n, n - 2, 0], cs, us)
        }
        FamilyKind::S1 | FamilyKind::S5 => sig(vec![n + 1, n, n - 2, 0], vec![n + 1, n, n], vec![0]),
        FamilyKind::S3 => sig(vec![n + 1, n, n - 2, 0], vec![n + 1, n, n], vec![1, 1]),
        FamilyKind::S2 => sig(vec![n + 1, n - 1, n - 3, 0], vec![n + 1, n - 1, n - 1], vec![0]),
        FamilyKind::S4 | FamilyKind::S6 => sig(vec![n + 1, n - 1, 0], vec![n + 1, n - 1, n - 1], vec![0]),
        FamilyKind::Snp2 => sig(vec![n + 2, n, n - 2, 0], vec![n + 2, n, n], vec![0]),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

impl Check {
    fn new(name: &str, pass: bool, detail: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            pass,
            detail: detail.into(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub schema: u32,
    pub family: String,
    pub label: String,
    pub n: usize,
    pub field: String,
    pub params: Vec<String>,
    /// The classifier's representative of the label over `field`, when one
    /// exists with rational parameters.
    pub canonical: Option<String>,
    pub sampling: Sampling,
    pub count_expected: usize,
    pub count_computed: usize,
    #[serde(rename = "rank_C")]
    pub rank_c: usize,
    pub invariants: Vec<String>,
    pub annihilation: Vec<bool>,
    pub independence_rank: usize,
    pub witnesses: Vec<String>,
    pub checks: Vec<Check>,
    pub pass: bool,
}

fn depends_only_on_nilradical(inv: &InvariantExpr, n: usize) -> bool {
    let outer = n - 1..inv.nvars();
    let free = |p: &crate::exact::Polynomial| outer.clone().all(|v| p.degree_in(v) == 0);
    inv.factors().iter().all(|(_, p, _)| free(p))
        && inv
            .log_part()
            .coefficients()
            .iter()
            .all(|c| free(c.numerator()) && free(c.denominator()))
}

/// Builds the algebra and its invariants and checks them against the
/// expected count, the coadjoint and truncated operators, functional
/// independence and the series signature.
pub fn verify_theorem(label: &FamilyLabel, field: FieldTag, sampling: Sampling) -> Result<Report> {
    let n = label.n();
    let l = build(label)?;
    let labels = l.labels().to_vec();
    let mut rng = sampling.rng();
    let mut checks = Vec::new();
    let mut witnesses = Vec::new();

    let c = structure_matrix(&l);
    let rank_c = generic_rank(&c, sampling.trials, sampling.bound, &mut rng);
    let count_computed = l.dim() - rank_c;
    let count_expected = expected_count(label);
    checks.push(Check::new(
        "invariant_count",
        count_computed == count_expected,
        format!("dim {} - rank {rank_c} = {count_computed}, expected {count_expected}", l.dim()),
    ));
    checks.push(Check::new(
        "rank_parity",
        rank_c % 2 == 0 && count_computed % 2 == l.dim() % 2,
        format!("rank {rank_c}, dim {}", l.dim()),
    ));

    let invs = invariant_family(label)?;
    checks.push(Check::new(
        "constructed_count",
        invs.len() == count_computed,
        format!("{} constructed", invs.len()),
    ));
    checks.push(Check::new(
        "invariants_free_of_outer_variables",
        invs.iter().all(|i| depends_only_on_nilradical(i, n)),
        "",
    ));

    let full = coadjoint_operators(&l);
    let first_index = usize::from(label.kind() != FamilyKind::Nilradical);
    let mut annihilation = Vec::with_capacity(invs.len());
    for (i, inv) in invs.iter().enumerate() {
        let mut ok = true;
        for (k, op) in full.iter().enumerate() {
            let r = inv.apply_reduced(op);
            if !r.is_zero() {
                ok = false;
                witnesses.push(format!(
                    "invariant {} under coadjoint operator of {}: {}",
                    i + first_index,
                    labels[k],
                    r.fmt_with(&labels)
                ));
            }
        }
        annihilation.push(ok);
    }
    checks.push(Check::new(
        "coadjoint_annihilation",
        annihilation.iter().all(|&b| b),
        format!("{} operators", full.len()),
    ));

    if label.kind() != FamilyKind::Nilradical {
        let truncated = truncated_operators(label);
        let from_c = truncated_from_coadjoint(&l, n);
        checks.push(Check::new(
            "truncated_operator_form",
            truncated == from_c,
            format!("{} operators", truncated.len()),
        ));
        let mut ok = true;
        for (i, inv) in invs.iter().enumerate() {
            for (k, op) in truncated.iter().enumerate() {
                let r = inv.apply_reduced(op);
                if !r.is_zero() {
                    ok = false;
                    witnesses.push(format!(
                        "invariant {} under truncated operator {}: {}",
                        i + first_index,
                        k + 1,
                        r.fmt_with(&labels)
                    ));
                }
            }
        }
        checks.push(Check::new("truncated_annihilation", ok, ""));
    }

    let independence_rank =
        match functional_independence(&invs, sampling.trials, sampling.bound, &mut rng) {
            Ok(r) => r,
            Err(e) => {
                witnesses.push(e.to_string());
                0
            }
        };
    checks.push(Check::new(
        "functional_independence",
        independence_rank == invs.len(),
        format!("jacobian rank {independence_rank} of {}", invs.len()),
    ));

    let sig = series_signature(&l);
    let expected = expected_signature(label);
    checks.push(Check::new(
        "series_signature",
        sig == expected,
        format!(
            "DS={:?} CS={:?} US={:?}, expected DS={:?} CS={:?} US={:?}",
            sig.ds, sig.cs, sig.us, expected.ds, expected.cs, expected.us
        ),
    ));

    let pass = checks.iter().all(|c| c.pass);
    Ok(Report {
        schema: 1,
        family: label.kind().name().into(),
        label: label.to_string(),
        n,
        field: field.to_string(),
        params: label.params().iter().map(ToString::to_string).collect(),
        canonical: label.canonicalize(field).ok().map(|c| c.to_string()),
        sampling,
        count_expected,
        count_computed,
        rank_c,
        invariants: invs.iter().map(|i| i.symbolic(&labels)).collect(),
        annihilation,
        independence_rank,
        witnesses,
        checks,
        pass,
    })
}
