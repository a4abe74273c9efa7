//! Command-line front end; all machine output is JSON or CSV on stdout.

use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::adjoint::{closed_form, compare_with_printed};
use crate::algebra::{commutator_table, AlgebraElement};
use crate::claims::{claims_report, DEFAULT_SAMPLES, DEFAULT_SEED, SOLUTION_PARAMETERS};
use crate::error::{Error, Result};
use crate::jet::{
    defining_equations, invariance_residual, parse_polynomial, second_prolongation, FMode, JetPolynomial,
    PointVectorField,
};
use crate::optimal::{canonicalize_screw, classify_1d_paper, equivalence_search};
use crate::scalar::{parse_rational, Rational};
use crate::solutions::{family, verify_invariance, FAMILIES};

/// Exit status for a clean run.
pub const EXIT_OK: i32 = 0;
/// Exit status when `check-claims` reports a discrepancy.
pub const EXIT_DISCREPANCY: i32 = 1;
/// Exit status for malformed input.
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "se3sym", version, about = "Symmetry and subalgebra checks for the Poisson equation")]
pub struct Cli {
    /// Seed for every sampled computation.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SourceMode {
    Zero,
    Generic,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Commutator table of the basis X_1..X_6.
    Table {
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// Matrix of Ad(exp(s X_i)), exact or evaluated at --param.
    Adjoint {
        #[arg(long = "gen")]
        generator: usize,
        #[arg(long)]
        param: Option<f64>,
    },
    /// Normalize a 1-d subalgebra.
    Classify {
        /// Six comma-separated decimal or p/q coefficients.
        #[arg(long, allow_hyphen_values = true)]
        vector: String,
    },
    /// Search for an adjoint word relating two 1-d subalgebras.
    Equiv {
        #[arg(long, allow_hyphen_values = true)]
        x: String,
        #[arg(long, allow_hyphen_values = true)]
        y: String,
    },
    /// Recompute every checkable statement and report a verdict for each.
    CheckClaims {
        #[arg(long, default_value_t = DEFAULT_SAMPLES)]
        samples: usize,
    },
    /// Second prolongation and residuals of a point vector field.
    Prolong {
        /// `X1`..`X6`, `dilation`, or `xi1; xi2; xi3; phi`.
        #[arg(long, allow_hyphen_values = true)]
        field: String,
        #[arg(long, value_enum, default_value_t = SourceMode::Generic)]
        f: SourceMode,
    },
    /// Finite-difference check that the six transformations preserve solutions.
    VerifySolutions {
        #[arg(long)]
        family: Option<String>,
        #[arg(long, default_value_t = 100)]
        samples: usize,
    },
}

struct Usage(String);

impl From<Error> for Usage {
    fn from(e: Error) -> Self {
        Usage(e.to_string())
    }
}

/// Parses six comma-separated coefficients.
pub fn parse_vector(flag: &str, text: &str) -> std::result::Result<[Rational; 6], String> {
    let parts: Vec<&str> = text.split(',').map(str::trim).collect();
    if parts.len() != 6 {
        return Err(format!("--{flag}: expected 6 comma-separated coefficients, got {}", parts.len()));
    }
    let mut out = Vec::with_capacity(6);
    for p in parts {
        out.push(parse_rational(p).ok_or_else(|| format!("--{flag}: cannot parse '{p}' as a number"))?);
    }
    Ok(out.try_into().expect("six entries"))
}

fn float_vector(flag: &str, text: &str) -> std::result::Result<AlgebraElement<f64>, Usage> {
    let q = parse_vector(flag, text).map_err(Usage)?;
    let x = AlgebraElement::new(q).to_f64();
    if !x.is_finite() {
        return Err(Usage(format!("--{flag}: coefficients must be finite")));
    }
    Ok(x)
}

/// Parses a named field or `xi1; xi2; xi3; phi`.
pub fn parse_field(text: &str) -> Result<PointVectorField> {
    let t = text.trim();
    if t == "dilation" {
        return Ok(PointVectorField::dilation());
    }
    if let Some(i) = t.strip_prefix('X').or_else(|| t.strip_prefix('x')).and_then(|d| d.parse::<usize>().ok()) {
        return PointVectorField::generator(i);
    }
    let parts: Vec<&str> = t.split(';').collect();
    if parts.len() != 4 {
        return Err(Error::InvalidArgument(format!(
            "field must be X1..X6, dilation, or four ';'-separated components, got {} component(s)",
            parts.len()
        )));
    }
    let comps: Vec<JetPolynomial> = parts.iter().map(|p| parse_polynomial(p)).collect::<Result<_>>()?;
    let [a, b, c, phi]: [JetPolynomial; 4] = comps.try_into().expect("four components");
    PointVectorField::new([a, b, c], phi)
}

fn json_out<T: Serialize>(out: &mut dyn Write, value: &T) -> std::io::Result<()> {
    let text = serde_json::to_string_pretty(value).expect("serializable output");
    writeln!(out, "{text}")
}

fn table(out: &mut dyn Write, format: Format) -> std::result::Result<i32, Usage> {
    let basis: Vec<AlgebraElement<Rational>> = (1..=6).map(AlgebraElement::basis).collect();
    let t = commutator_table(&basis)?;
    let cells: Vec<Vec<String>> = t.iter().map(|r| r.iter().map(ToString::to_string).collect()).collect();
    let names: Vec<String> = (1..=6).map(|i| format!("X_{i}")).collect();
    let io = match format {
        Format::Json => json_out(out, &json!({"basis": names, "cells": cells})),
        Format::Csv => (|| {
            writeln!(out, ",{}", names.join(","))?;
            for (n, row) in names.iter().zip(&cells) {
                writeln!(out, "{n},{}", row.join(","))?;
            }
            Ok(())
        })(),
    };
    io.map_err(|e| Usage(e.to_string()))?;
    Ok(EXIT_OK)
}

fn dispatch(cli: Cli, out: &mut dyn Write) -> std::result::Result<i32, Usage> {
    let io = |r: std::io::Result<()>| r.map_err(|e| Usage(e.to_string()));
    match cli.command {
        Command::Table { format } => table(out, format),
        Command::Adjoint { generator, param } => {
            if !(1..=6).contains(&generator) {
                return Err(Usage(format!("--gen: expected 1..6, got {generator}")));
            }
            let exact = closed_form(generator);
            let discrepancies = compare_with_printed(generator)?;
            let doc = match param {
                None => json!({"generator": generator, "exact": exact, "printed_discrepancies": discrepancies}),
                Some(s) if s.is_finite() => json!({
                    "generator": generator, "param": s, "matrix": exact.evaluate(s),
                    "exact": exact, "printed_discrepancies": discrepancies,
                }),
                Some(s) => return Err(Usage(format!("--param: must be finite, got {s}"))),
            };
            io(json_out(out, &doc))?;
            Ok(EXIT_OK)
        }
        Command::Classify { vector } => {
            let x = float_vector("vector", &vector)?;
            let rep = classify_1d_paper(&x)?;
            let screw = canonicalize_screw(&x)?;
            let doc = json!({"input": x, "representative": rep, "screw": screw, "canonical": screw.canonical()});
            io(json_out(out, &doc))?;
            Ok(EXIT_OK)
        }
        Command::Equiv { x, y } => {
            let (xv, yv) = (float_vector("x", &x)?, float_vector("y", &y)?);
            let e = equivalence_search(&xv, &yv)?;
            let doc = json!({
                "x": xv, "y": yv, "equivalent": e.is_some(),
                "word": e.as_ref().map(|e| &e.word), "factor": e.as_ref().map(|e| e.factor),
                "x_screw": canonicalize_screw(&xv)?, "y_screw": canonicalize_screw(&yv)?,
            });
            io(json_out(out, &doc))?;
            Ok(EXIT_OK)
        }
        Command::CheckClaims { samples } => {
            if samples == 0 {
                return Err(Usage("--samples: must be at least 1".into()));
            }
            let report = claims_report(samples, cli.seed)?;
            io(json_out(out, &report))?;
            Ok(if report.has_discrepancies() { EXIT_DISCREPANCY } else { EXIT_OK })
        }
        Command::Prolong { field, f } => {
            let v = parse_field(&field).map_err(|e| Usage(format!("--field: {e}")))?;
            let mode = match f {
                SourceMode::Zero => FMode::Zero,
                SourceMode::Generic => FMode::Generic,
            };
            let pr = second_prolongation(&v);
            let names = ["phi^x", "phi^y", "phi^z", "phi^xx", "phi^xy", "phi^xz", "phi^yy", "phi^yz", "phi^zz"];
            let coefficients: serde_json::Map<String, serde_json::Value> =
                names.iter().zip(pr.all()).map(|(n, p)| (n.to_string(), json!(p))).collect();
            let defining: Vec<_> = defining_equations(&v)
                .into_iter()
                .map(|r| json!({"equation": r.equation, "residual": mode.apply(&r.residual)}))
                .collect();
            let doc = json!({
                "field": {"xi": v.xi(), "phi": v.phi()},
                "f": mode,
                "prolongation": coefficients,
                "invariance_residual": mode.apply(&invariance_residual(&v)),
                "defining_equations": defining,
            });
            io(json_out(out, &doc))?;
            Ok(EXIT_OK)
        }
        Command::VerifySolutions { family: name, samples } => {
            let names: Vec<&str> = match &name {
                Some(n) => vec![n.as_str()],
                None => FAMILIES.to_vec(),
            };
            let mut runs = Vec::new();
            let mut worst = 0.0_f64;
            for n in names {
                let h = family(n).map_err(|e| Usage(format!("--family: {e}")))?;
                for k in 1..=6 {
                    for s in SOLUTION_PARAMETERS {
                        let r = verify_invariance(&h, k, s, samples, cli.seed)?;
                        worst = worst.max(r.max_residual);
                        runs.push(r);
                    }
                }
            }
            io(json_out(out, &json!({"seed": cli.seed, "max_residual": worst, "runs": runs})))?;
            Ok(EXIT_OK)
        }
    }
}

/// Runs the command line `args` (program name first); returns the exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };
    match dispatch(cli, out) {
        Ok(code) => code,
        Err(Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
    }
}

