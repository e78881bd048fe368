use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use nilrad::algebra::{format_table, parse_table, series_signature};
use nilrad::families::{
    build, classify_algebra, classify_extension, derivation_report, ExtensionSpec, FamilyKind, FamilyLabel,
    FieldTag,
};
use nilrad::invariants::{invariant_family, verify_theorem, xi_in, Report, Sampling};
use rayon::prelude::*;
use serde_json::{json, Value};

mod grid;

#[derive(Parser)]
#[command(name = "nilrad", version, about = "Solvable Lie algebras with nilradical n(n,1) and their invariants")]
struct Cli {
    /// Ground field, R or C.
    #[arg(long, global = true, default_value = "R", value_parser = parse_field)]
    field: FieldTag,
    #[arg(long, global = true, value_enum, default_value_t = Output::Json)]
    output: Output,
    /// Seed of every randomized rank and independence trial.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[arg(long, global = true, default_value_t = 5)]
    trials: usize,
    /// Random sample coordinates are drawn from -bound..=bound.
    #[arg(long, global = true, default_value_t = 1000)]
    bound: i64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Output {
    Json,
    Table,
}

#[derive(Subcommand)]
enum Command {
    /// Structure constants of a family member, e.g. `s(n+1,1):5:beta=3/2`.
    Build { label: String },
    /// Derived, lower and upper central series dimensions.
    Series { label: String },
    /// Derivations of n(n,1).
    Derivations { n: usize },
    /// Name an extension given as a JSON spec or a structure-constant file.
    Classify { file: PathBuf },
    /// Generalized Casimir invariants of a family member.
    Invariants { label: String },
    /// Check the invariants, counts and series of one family member.
    Verify { label: String },
    /// Run `verify` over every family and a parameter grid for n = 4..n-max.
    VerifyAll {
        #[arg(long, default_value_t = 8)]
        n_max: usize,
    },
}

fn parse_field(s: &str) -> Result<FieldTag, String> {
    s.parse().map_err(|e: nilrad::Error| e.to_string())
}

enum Failure {
    BadInput(String),
    Verification(String),
}

impl From<nilrad::Error> for Failure {
    fn from(e: nilrad::Error) -> Self {
        Failure::BadInput(e.to_string())
    }
}

struct Ctx {
    field: FieldTag,
    output: Output,
    sampling: Sampling,
}

impl Ctx {
    /// Writes to stdout; a closed pipe is not an error.
    fn emit(&self, value: &Value, table: impl FnOnce() -> String) {
        let mut out = io::stdout().lock();
        let _ = match self.output {
            Output::Json => writeln!(out, "{}", serde_json::to_string_pretty(value).expect("serializable")),
            Output::Table => write!(out, "{}", table()),
        };
    }
}

fn with_schema(mut v: Value) -> Value {
    if let Value::Object(m) = &mut v {
        m.insert("schema".into(), json!(1));
    }
    v
}

fn label(s: &str) -> Result<FamilyLabel, Failure> {
    Ok(FamilyLabel::parse(s)?)
}

fn cmd_build(ctx: &Ctx, s: &str) -> Result<(), Failure> {
    let l = build(&label(s)?)?;
    let table = format_table(&l);
    ctx.emit(
        &json!({"schema": 1, "label": s, "dim": l.dim(), "basis": l.labels(), "table": table}),
        || table.clone(),
    );
    Ok(())
}

fn cmd_series(ctx: &Ctx, s: &str) -> Result<(), Failure> {
    let label = label(s)?;
    let sig = series_signature(&build(&label)?);
    ctx.emit(
        &json!({"schema": 1, "label": label.to_string(), "ds": sig.ds, "cs": sig.cs, "us": sig.us}),
        || format!("{label}\nDS = {:?}\nCS = {:?}\nUS = {:?}\n", sig.ds, sig.cs, sig.us),
    );
    Ok(())
}

fn cmd_derivations(ctx: &Ctx, n: usize) -> Result<(), Failure> {
    let r = derivation_report(n)?;
    let v = with_schema(serde_json::to_value(&r).expect("serializable"));
    ctx.emit(&v, || {
        format!(
            "n = {}\nderivations: {}\ninner derivations: {}\nD_ii = (n-1-i) D_nn + D_(n-1,n-1): {}\nD_ii = (n-i+1) D_nn + D_(n-1,n-1): {}\n",
            r.n, r.dim, r.inner_dim, r.diagonal_rule_n_minus_i_minus_1, r.diagonal_rule_n_minus_i_plus_1
        )
    });
    Ok(())
}

fn cmd_classify(ctx: &Ctx, path: &PathBuf) -> Result<(), Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure::BadInput(format!("{}: {e}", path.display())))?;
    let c = if text.trim_start().starts_with('{') {
        classify_extension(&ExtensionSpec::from_json(&text)?, ctx.field)?
    } else {
        classify_algebra(&parse_table(&text)?, ctx.field)?
    };
    ctx.emit(
        &json!({
            "schema": 1,
            "label": c.label.to_string(),
            "family": c.label.kind().name(),
            "field": ctx.field.to_string(),
            "params": c.label.params().iter().map(ToString::to_string).collect::<Vec<_>>(),
        }),
        || format!("{}\n", c.label),
    );
    Ok(())
}

fn cmd_invariants(ctx: &Ctx, s: &str) -> Result<(), Failure> {
    let label = label(s)?;
    let l = build(&label)?;
    let names = l.labels();
    let invs = invariant_family(&label)?;
    let symbolic: Vec<String> = invs.iter().map(|i| i.symbolic(names)).collect();
    let mut xis = serde_json::Map::new();
    for k in 0..=label.n() - 3 {
        xis.insert(format!("xi{k}"), json!(xi_in(label.n(), k, l.dim())?.fmt_with(names)));
    }
    let first = usize::from(label.kind() != FamilyKind::Nilradical);
    ctx.emit(
        &json!({"schema": 1, "label": label.to_string(), "invariants": symbolic, "xi": xis}),
        || {
            let mut out = String::new();
            for (i, s) in symbolic.iter().enumerate() {
                out += &format!("chi{} = {s}\n", i + first);
            }
            for (k, p) in &xis {
                out += &format!("{k} = {}\n", p.as_str().unwrap_or_default());
            }
            out
        },
    );
    Ok(())
}

fn failed_checks(r: &Report) -> Vec<&str> {
    r.checks.iter().filter(|c| !c.pass).map(|c| c.name.as_str()).collect()
}

fn report_table(r: &Report) -> String {
    let mut out = format!("{} over {}\n", r.label, r.field);
    for c in &r.checks {
        out += &format!("  {:<36} {}  {}\n", c.name, if c.pass { "ok  " } else { "FAIL" }, c.detail);
    }
    for w in &r.witnesses {
        out += &format!("  witness: {w}\n");
    }
    out
}

fn cmd_verify(ctx: &Ctx, s: &str) -> Result<(), Failure> {
    let r = verify_theorem(&label(s)?, ctx.field, ctx.sampling)?;
    ctx.emit(&serde_json::to_value(&r).expect("serializable"), || report_table(&r));
    if r.pass {
        Ok(())
    } else {
        Err(Failure::Verification(format!("{}: failed {}", r.label, failed_checks(&r).join(", "))))
    }
}

fn cmd_verify_all(ctx: &Ctx, n_max: usize) -> Result<(), Failure> {
    if n_max < 4 {
        return Err(Failure::BadInput(format!("--n-max must be at least 4, got {n_max}")));
    }
    let cells = grid::cells(n_max);
    let reports: Vec<Result<Report, String>> = cells
        .par_iter()
        .map(|(l, f)| verify_theorem(l, *f, ctx.sampling).map_err(|e| format!("{l} over {f}: {e}")))
        .collect();
    let mut failures = Vec::new();
    let mut rows = Vec::new();
    let mut table = String::new();
    for r in &reports {
        match r {
            Ok(r) => {
                let failed = failed_checks(r);
                if !r.pass {
                    failures.push(format!("{} over {}: failed {}", r.label, r.field, failed.join(", ")));
                }
                table += &format!(
                    "{:<40} {}  {:>2} invariants  {}\n",
                    r.label,
                    r.field,
                    r.count_computed,
                    if r.pass { "ok".into() } else { format!("FAIL {}", failed.join(",")) }
                );
                rows.push(json!({
                    "label": r.label, "field": r.field, "count": r.count_computed, "pass": r.pass, "failed": failed,
                }));
            }
            Err(e) => {
                failures.push(e.clone());
                table += &format!("{e}\n");
                rows.push(json!({"error": e, "pass": false}));
            }
        }
    }
    let pass = failures.is_empty();
    table += &format!("{} cells, {} failed\n", reports.len(), failures.len());
    ctx.emit(
        &json!({"schema": 1, "n_max": n_max, "sampling": ctx.sampling, "cells": rows, "pass": pass}),
        || table,
    );
    if pass {
        Ok(())
    } else {
        Err(Failure::Verification(failures.join("\n")))
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let ctx = Ctx {
        field: cli.field,
        output: cli.output,
        sampling: Sampling {
            trials: cli.trials,
            bound: cli.bound,
            seed: cli.seed,
        },
    };
    let result = match &cli.command {
        Command::Build { label } => cmd_build(&ctx, label),
        Command::Series { label } => cmd_series(&ctx, label),
        Command::Derivations { n } => cmd_derivations(&ctx, *n),
        Command::Classify { file } => cmd_classify(&ctx, file),
        Command::Invariants { label } => cmd_invariants(&ctx, label),
        Command::Verify { label } => cmd_verify(&ctx, label),
        Command::VerifyAll { n_max } => cmd_verify_all(&ctx, *n_max),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification(msg)) => {
            eprintln!("verification failed: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::BadInput(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
