//! The `weylring` command line: `series`, `verify` and `invariants`
//! subcommands with text or JSON output.
//!
//! Exit codes: 0 on success (for `verify`, a true verdict), 1 on a failed
//! verification or internal inconsistency, 2 on bad flags (including
//! `verify` with m ≠ 2).

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use crate::invariants::{invariant_basis, poincare_series, PoincareSeries};
use crate::presentation::verify_theorem_with;
use crate::report::{InvariantReport, PresentationReport};
use crate::sampling::{property_sample, DEFAULT_SEED};
use crate::{AlgebraContext, Error, LieGroup};

#[derive(Debug, Parser)]
#[command(
    name = "weylring",
    version,
    about = "Invariant rings of the rank-2 Weyl groups: Poincare series, invariant bases and presentation checks"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute the Poincaré series of the invariant ring.
    Series {
        #[command(flatten)]
        common: CommonArgs,
        /// Highest degree to report; defaults to the group's standard range.
        #[arg(long)]
        max_degree: Option<usize>,
    },
    /// Verify the six-generator presentation of the invariant ring (m = 2).
    Verify {
        #[command(flatten)]
        common: CommonArgs,
        /// Highest degree of the dimension comparison; defaults per group.
        #[arg(long)]
        max_degree: Option<usize>,
    },
    /// Print the echelonized invariant basis of one degree.
    Invariants {
        #[command(flatten)]
        common: CommonArgs,
        /// Cohomological degree of the basis.
        #[arg(long)]
        degree: usize,
    },
}

#[derive(Debug, Args)]
pub struct CommonArgs {
    /// Group preset.
    #[arg(long, value_enum)]
    pub group: LieGroup,
    /// Number of exterior tensor factors.
    #[arg(long, default_value_t = 2)]
    pub m: usize,
    /// Output format.
    #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
    pub output: OutputFormat,
    /// Seed for the sampled property checks run by `verify`.
    #[arg(long, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    /// Write the report to this file instead of standard output.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

impl ValueEnum for LieGroup {
    fn value_variants<'a>() -> &'a [Self] {
        &LieGroup::ALL
    }

    fn to_possible_value(&self) -> Option<clap::builder::PossibleValue> {
        Some(clap::builder::PossibleValue::new(self.name()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    Text,
    Json,
}

/// Resolved run parameters; round-trips through serde.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunConfig {
    pub group: LieGroup,
    pub m: usize,
    pub max_degree: usize,
    pub output: OutputFormat,
    pub seed: u64,
}

impl RunConfig {
    pub fn resolve(common: &CommonArgs, max_degree: Option<usize>) -> RunConfig {
        RunConfig {
            group: common.group,
            m: common.m,
            max_degree: max_degree.unwrap_or_else(|| common.group.default_max_degree()),
            output: common.output,
            seed: common.seed,
        }
    }
}

/// What a subcommand produced: the payload for stdout (or `--out`), an
/// optional stderr note, and the process exit code.
#[derive(Debug)]
pub struct CmdOutput {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl CmdOutput {
    fn ok(stdout: String) -> CmdOutput {
        CmdOutput {
            code: 0,
            stdout,
            stderr: String::new(),
        }
    }

    fn fail(code: i32, stderr: String) -> CmdOutput {
        CmdOutput {
            code,
            stdout: String::new(),
            stderr,
        }
    }
}

fn exit_code(err: &Error) -> i32 {
    match err {
        Error::Internal(_) => 1,
        _ => 2, // everything else is a usage problem
    }
}

/// Run one parsed command. Flag parsing itself (exit code 2 on bad flags) is
/// clap's job; see [`Cli`].
pub fn execute(cli: Cli) -> CmdOutput {
    match cli.command {
        Command::Series { common, max_degree } => {
            let config = RunConfig::resolve(&common, max_degree);
            deliver(&common, run_series(&config))
        }
        Command::Verify { common, max_degree } => {
            let config = RunConfig::resolve(&common, max_degree);
            deliver(&common, run_verify(&config))
        }
        Command::Invariants { common, degree } => {
            let config = RunConfig::resolve(&common, None);
            deliver(&common, run_invariants(&config, degree))
        }
    }
}

fn deliver(common: &CommonArgs, result: Result<CmdOutput, Error>) -> CmdOutput {
    let output = match result {
        Ok(output) => output,
        Err(err) => CmdOutput::fail(exit_code(&err), format!("error: {err}\n")),
    };
    if output.code == 2 || output.stdout.is_empty() {
        return output;
    }
    if let Some(path) = &common.out {
        match std::fs::write(path, &output.stdout) {
            Ok(()) => CmdOutput {
                code: output.code,
                stdout: format!("wrote report to {}\n", path.display()),
                stderr: output.stderr,
            },
            Err(err) => CmdOutput::fail(
                1,
                format!("error: cannot write {}: {err}\n", path.display()),
            ),
        }
    } else {
        output
    }
}

/// `series`: the invariant dimensions by degree.
pub fn run_series(config: &RunConfig) -> Result<CmdOutput, Error> {
    let ctx = AlgebraContext::new(config.group, config.m)?;
    let series = poincare_series(&ctx, config.max_degree);
    let payload = match config.output {
        OutputFormat::Json => series_report(config, series).to_json() + "\n",
        OutputFormat::Text => {
            let report = series_report(config, series);
            format!("{report}")
        }
    };
    Ok(CmdOutput::ok(payload))
}

fn series_report(config: &RunConfig, series: PoincareSeries) -> PresentationReport {
    PresentationReport {
        group: config.group,
        m: config.m,
        series,
        checks: Vec::new(),
        dimension_table: Vec::new(),
    }
}

/// `verify`: the full presentation report plus a seeded property sample.
pub fn run_verify(config: &RunConfig) -> Result<CmdOutput, Error> {
    if config.m != 2 {
        return Err(Error::RequiresTwoFactors(config.m));
    }
    let mut report = verify_theorem_with(config.group, config.max_degree)?;
    report
        .checks
        .push(property_sample(config.group, 2, config.seed, 50)?);
    let payload = match config.output {
        OutputFormat::Json => report.to_json() + "\n",
        OutputFormat::Text => format!("{report}"),
    };
    if report.verdict() {
        Ok(CmdOutput::ok(payload))
    } else {
        Ok(CmdOutput {
            code: 1,
            stdout: payload,
            stderr: format!("failed checks: {}\n", report.failing_checks().join(", ")),
        })
    }
}

/// `invariants`: the echelonized basis of one degree, rendered.
pub fn run_invariants(config: &RunConfig, degree: usize) -> Result<CmdOutput, Error> {
    let ctx = AlgebraContext::new(config.group, config.m)?;
    let basis = invariant_basis(&ctx, degree);
    let report = InvariantReport {
        group: config.group,
        m: config.m,
        degree,
        dimension: basis.dimension(),
        basis: basis.vectors.iter().map(|v| v.to_string()).collect(),
    };
    let payload = match config.output {
        OutputFormat::Json => report.to_json() + "\n",
        OutputFormat::Text => format!("{report}"),
    };
    Ok(CmdOutput::ok(payload))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn config_round_trips_through_serde() {
        let config = RunConfig {
            group: LieGroup::G2,
            m: 2,
            max_degree: 16,
            output: OutputFormat::Json,
            seed: 99,
        };
        let json = serde_json::to_string(&config).unwrap();
        let back: RunConfig = serde_json::from_str(&json).unwrap();
        assert_eq!(back, config);
    }

    #[test]
    fn verify_rejects_other_factor_counts() {
        let config = RunConfig {
            group: LieGroup::G2,
            m: 3,
            max_degree: 16,
            output: OutputFormat::Text,
            seed: DEFAULT_SEED,
        };
        let err = run_verify(&config).unwrap_err();
        assert_eq!(err, Error::RequiresTwoFactors(3));
        assert_eq!(exit_code(&err), 2);
    }

    #[test]
    fn series_text_and_json_agree_numerically() {
        let config = RunConfig {
            group: LieGroup::Su3,
            m: 1,
            max_degree: 8,
            output: OutputFormat::Json,
            seed: DEFAULT_SEED,
        };
        let json_out = run_series(&config).unwrap().stdout;
        let parsed: PresentationReport = serde_json::from_str(&json_out).unwrap();
        assert_eq!(parsed.series.coefficients(), &[1, 0, 0, 1, 0, 1, 0, 0, 1]);

        let text = run_series(&RunConfig {
            output: OutputFormat::Text,
            ..config
        })
        .unwrap()
        .stdout;
        assert!(text.contains("series: 1 0 0 1 0 1 0 0 1"));
    }
}
