//! Batch entry points behind the command-line interface: compute a report,
//! verify a spec against the oracles, or sweep a bounded family.
//!
//! Exit-code contract: 0 success, 1 internal error, 2 invalid input,
//! 3 verification failure.

use std::io::Write;
use std::path::PathBuf;

use serde::Serialize;

use crate::error::Error;
use crate::extension::{build_spec_seeded, KummerLattice};
use crate::genus::{genus_field, genus_field_nonkummer, GenusReport, SpecEcho};
use crate::polyring::DEFAULT_SEED;
use crate::report::{
    parse_report_json, parse_spec_dto, render_text, report_to_json, SpecDto,
};
use crate::sweep::{run_sweep, SweepBounds};
use crate::verify::{run_kummer_checks, run_nonkummer_checks, CheckOutcome, CheckStatus};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Text,
    Json,
}

#[derive(Debug, Clone)]
pub enum Command {
    Compute,
    Verify { expect: Option<PathBuf> },
    Sweep(SweepBounds),
}

#[derive(Debug, Clone)]
pub struct JobConfig {
    pub command: Command,
    pub input: Option<PathBuf>,
    pub inline: Option<String>,
    pub format: OutputFormat,
    pub seed: u64,
    pub reduce: bool,
}

pub const EXIT_OK: i32 = 0;
pub const EXIT_INTERNAL: i32 = 1;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_VERIFY_FAILED: i32 = 3;

fn exit_code_for(err: &Error) -> i32 {
    match err {
        Error::NotPrime(_)
        | Error::ReducibleModulus(_)
        | Error::DegreeMismatch { .. }
        | Error::FieldTooLarge(..)
        | Error::NotMonic
        | Error::ConstantPolynomial
        | Error::SyntaxError { .. }
        | Error::UnknownCoefficient { .. }
        | Error::ZeroPolynomial
        | Error::NotKummer { .. }
        | Error::WildPrime(_)
        | Error::DependentGenerators { .. }
        | Error::ConstantRadical
        | Error::GroupTooLarge(..)
        | Error::UnramifiedListedPrime(_)
        | Error::PrimeNotListed(_)
        | Error::InvalidSpec(_) => EXIT_INVALID,
        _ => EXIT_INTERNAL,
    }
}

fn load_spec_text(config: &JobConfig) -> Result<String, Error> {
    match (&config.input, &config.inline) {
        (Some(path), None) => {
            std::fs::read_to_string(path).map_err(|e| Error::Io(e.to_string()))
        }
        (None, Some(text)) => Ok(text.clone()),
        _ => Err(Error::InvalidSpec(
            "exactly one of --input and --inline is required".into(),
        )),
    }
}

/// Parse the spec; with `--reduce`, dependent Kummer generators are replaced
/// by a computed basis of the same lattice instead of being rejected.
fn load_spec(config: &JobConfig) -> Result<SpecEcho, Error> {
    let text = load_spec_text(config)?;
    let dto: SpecDto =
        serde_json::from_str(&text).map_err(|e| Error::InvalidSpec(e.to_string()))?;
    match parse_spec_dto(&dto) {
        Ok(spec) => Ok(spec),
        Err(Error::DependentGenerators { witness }) if config.reduce => {
            let field = crate::gf::make_field(dto.p, dto.n, dto.modulus.clone())?;
            let gens = dto.generators.as_ref().expect("Kummer path");
            let raw: Result<Vec<_>, Error> = gens
                .iter()
                .map(|g| {
                    Ok((
                        field.parse(&g.gamma)?,
                        crate::polyring::parse_poly(&field, &g.d)?,
                    ))
                })
                .collect();
            let lattice = KummerLattice::span(&field, dto.l, &raw?)?;
            let basis: Vec<_> = lattice
                .row_radicals()
                .iter()
                .enumerate()
                .map(|(i, (gamma, _))| (gamma.clone(), lattice.row_poly(i)))
                .collect();
            let spec = build_spec_seeded(&field, dto.l, &basis, config.seed)?;
            let _ = witness;
            Ok(SpecEcho::Kummer(spec))
        }
        Err(e) => Err(e),
    }
}

fn compute_report(spec: &SpecEcho) -> Result<GenusReport, Error> {
    match spec {
        SpecEcho::Kummer(s) => genus_field(s),
        SpecEcho::NonKummer(s) => genus_field_nonkummer(s),
    }
}

#[derive(Serialize)]
struct CheckLine<'a> {
    name: &'a str,
    #[serde(skip_serializing_if = "Option::is_none")]
    passed: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: Option<&'a str>,
    #[serde(skip_serializing_if = "Option::is_none")]
    skipped: Option<&'a str>,
}

fn write_check_line(out: &mut dyn Write, c: &CheckOutcome) -> Result<(), Error> {
    let line = match &c.status {
        CheckStatus::Passed => CheckLine {
            name: &c.name,
            passed: Some(true),
            witness: None,
            skipped: None,
        },
        CheckStatus::Failed(w) => CheckLine {
            name: &c.name,
            passed: Some(false),
            witness: Some(w),
            skipped: None,
        },
        CheckStatus::Skipped(r) => CheckLine {
            name: &c.name,
            passed: None,
            witness: None,
            skipped: Some(r),
        },
    };
    writeln!(out, "{}", serde_json::to_string(&line).expect("serializable"))
        .map_err(|e| Error::Io(e.to_string()))
}

fn cmd_compute(config: &JobConfig, out: &mut dyn Write) -> Result<i32, Error> {
    let spec = load_spec(config)?;
    let report = compute_report(&spec)?;
    let rendered = match config.format {
        OutputFormat::Json => report_to_json(&report),
        OutputFormat::Text => render_text(&report),
    };
    writeln!(out, "{}", rendered.trim_end()).map_err(|e| Error::Io(e.to_string()))?;
    Ok(EXIT_OK)
}

fn cmd_verify(
    config: &JobConfig,
    expect: &Option<PathBuf>,
    out: &mut dyn Write,
) -> Result<i32, Error> {
    let spec = load_spec(config)?;
    let mut outcomes = match &spec {
        SpecEcho::Kummer(s) => run_kummer_checks(s)?,
        SpecEcho::NonKummer(s) => run_nonkummer_checks(s)?,
    };
    if let Some(path) = expect {
        let text =
            std::fs::read_to_string(path).map_err(|e| Error::Io(e.to_string()))?;
        let expected = parse_report_json(&text)?;
        let actual = compute_report(&spec)?;
        outcomes.push(CheckOutcome {
            name: "expected_report_match".into(),
            status: if expected == actual {
                CheckStatus::Passed
            } else {
                CheckStatus::Failed("recomputed report differs from the fixture".into())
            },
        });
    }
    let mut code = EXIT_OK;
    for c in &outcomes {
        write_check_line(out, c)?;
        if matches!(c.status, CheckStatus::Failed(_)) {
            code = EXIT_VERIFY_FAILED;
        }
    }
    Ok(code)
}

/// Run the configured job, writing to `out`; returns the process exit code.
pub fn run(config: &JobConfig, out: &mut dyn Write) -> i32 {
    let result = match &config.command {
        Command::Compute => cmd_compute(config, out),
        Command::Verify { expect } => cmd_verify(config, expect, out),
        Command::Sweep(bounds) => run_sweep(bounds, out),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            exit_code_for(&e)
        }
    }
}

impl JobConfig {
    pub fn compute(inline: &str) -> Self {
        JobConfig {
            command: Command::Compute,
            input: None,
            inline: Some(inline.to_string()),
            format: OutputFormat::Json,
            seed: DEFAULT_SEED,
            reduce: false,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_str(config: &JobConfig) -> (i32, String) {
        let mut buf = Vec::new();
        let code = run(config, &mut buf);
        (code, String::from_utf8(buf).unwrap())
    }

    #[test]
    fn compute_c3_json() {
        let cfg = JobConfig::compute(
            r#"{"p":7,"n":1,"l":3,"generators":[{"gamma":"6","D":"T^3+3*T^2+2*T"}]}"#,
        );
        let (code, out) = run_str(&cfg);
        assert_eq!(code, EXIT_OK);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["case"], "C3");
        assert_eq!(v["genus_degree"], 3);
    }

    #[test]
    fn compute_rejects_dependent_without_reduce() {
        let cfg = JobConfig::compute(
            r#"{"p":7,"n":1,"l":3,"generators":[{"gamma":"6","D":"T"},{"gamma":"1","D":"T"}]}"#,
        );
        let (code, _) = run_str(&cfg);
        assert_eq!(code, EXIT_INVALID);
    }

    #[test]
    fn reduce_reenters_with_basis() {
        let mut cfg = JobConfig::compute(
            r#"{"p":7,"n":1,"l":3,"generators":[{"gamma":"6","D":"T"},{"gamma":"1","D":"T"}]}"#,
        );
        cfg.reduce = true;
        let (code, out) = run_str(&cfg);
        assert_eq!(code, EXIT_OK);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        // the two dependent generators collapse to the rank-1 lattice of cbrt(T)
        assert_eq!(v["spec"]["generators"].as_array().unwrap().len(), 1);

        // a non-geometric span still fails: the basis contains a constant row
        let mut cfg = JobConfig::compute(
            r#"{"p":7,"n":1,"l":3,"generators":[{"gamma":"1","D":"T"},{"gamma":"3","D":"T"}]}"#,
        );
        cfg.reduce = true;
        let (code, _) = run_str(&cfg);
        assert_eq!(code, EXIT_INVALID);
    }

    #[test]
    fn verify_c3_passes() {
        let mut cfg = JobConfig::compute(
            r#"{"p":7,"n":1,"l":3,"generators":[{"gamma":"6","D":"T^3+3*T^2+2*T"}]}"#,
        );
        cfg.command = Command::Verify { expect: None };
        let (code, out) = run_str(&cfg);
        assert_eq!(code, EXIT_OK);
        for line in out.trim().lines() {
            let v: serde_json::Value = serde_json::from_str(line).unwrap();
            assert_eq!(v["passed"], true, "line {line}");
        }
    }

    #[test]
    fn nonkummer_compute() {
        let cfg = JobConfig::compute(
            r#"{"p":2,"n":1,"l":3,"primes":["T^2+T+1"],"C":[[1]],"twisted":false}"#,
        );
        let (code, out) = run_str(&cfg);
        assert_eq!(code, EXIT_OK);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["case"], "NK_cyclotomic");
        assert_eq!(v["genus_degree"], 1);
    }
}
