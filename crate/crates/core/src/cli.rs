//! The `laws`, `simulate` and `check` commands.
//!
//! Results go to `out` and diagnostics to `err`. Exit codes: 0 success,
//! 1 a law or validation failure, 2 a usage, I/O or input parse error.

use std::ffi::OsString;
use std::fmt;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use crate::laws::{check_all, CoreTriple, SampleConfig};
use crate::parser::{parse_scenario, parse_trace};
use crate::pipeline::{emit_frame_xml, frame_log, simulate, simulate_frames};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExitStatus {
    pub code: u8,
}

impl ExitStatus {
    pub const SUCCESS: ExitStatus = ExitStatus { code: 0 };
    pub const FAILURE: ExitStatus = ExitStatus { code: 1 };
    pub const USAGE: ExitStatus = ExitStatus { code: 2 };

    pub fn is_success(self) -> bool {
        self.code == 0
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "statethread",
    version,
    about = "Monad-law checks and a scripted animation pipeline"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check the monad laws of the built-in calculus on random samples.
    Laws {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1000)]
        samples: usize,
    },
    /// Run the animation pipeline and print one line per tick.
    Simulate {
        /// Scenario file.
        scenario: PathBuf,
        /// Event-trace file.
        trace: PathBuf,
        #[arg(long)]
        ticks: u64,
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
        dt: u64,
        /// Emit frame XML instead of the rendered frame log.
        #[arg(long)]
        xml: bool,
    },
    /// Parse and validate a file.
    Check {
        path: PathBuf,
        #[arg(long, value_enum)]
        kind: FileKind,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FileKind {
    Scenario,
    Trace,
}

impl fmt::Display for FileKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FileKind::Scenario => "scenario",
            FileKind::Trace => "trace",
        })
    }
}

/// Parses `args` (including the program name) and runs the selected command.
pub fn main_with_args<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> ExitStatus
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            if e.use_stderr() {
                let _ = write!(err, "{rendered}");
                return ExitStatus::USAGE;
            }
            let _ = write!(out, "{rendered}");
            return ExitStatus::SUCCESS;
        }
    };
    let result = match cli.command {
        Command::Laws { seed, samples } => cmd_laws(seed, samples, out),
        Command::Simulate {
            scenario,
            trace,
            ticks,
            dt,
            xml,
        } => cmd_simulate(&scenario, &trace, ticks, dt, xml, out, err),
        Command::Check { path, kind } => cmd_check(&path, kind, out, err),
    };
    result.unwrap_or_else(|e| {
        let _ = writeln!(err, "error: {e}");
        ExitStatus::USAGE
    })
}

/// Runs every law check against the built-in calculus.
pub fn cmd_laws(seed: u64, samples: usize, out: &mut dyn Write) -> std::io::Result<ExitStatus> {
    let reports = check_all(&CoreTriple, &SampleConfig::new(seed, samples));
    for report in &reports {
        writeln!(out, "{report}")?;
    }
    Ok(if reports.iter().all(|r| r.passed) {
        ExitStatus::SUCCESS
    } else {
        ExitStatus::FAILURE
    })
}

fn read_input(path: &Path, err: &mut dyn Write) -> std::io::Result<Option<String>> {
    match fs::read_to_string(path) {
        Ok(text) => Ok(Some(text)),
        Err(e) => {
            writeln!(err, "error: cannot read {}: {e}", path.display())?;
            Ok(None)
        }
    }
}

pub fn cmd_simulate(
    scenario_path: &Path,
    trace_path: &Path,
    ticks: u64,
    dt: u64,
    xml: bool,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> std::io::Result<ExitStatus> {
    if dt == 0 {
        writeln!(err, "error: --dt must be at least 1")?;
        return Ok(ExitStatus::USAGE);
    }
    if ticks > 0 && (ticks - 1).checked_mul(dt).is_none() {
        writeln!(
            err,
            "error: --ticks {ticks} with --dt {dt} overflows the clock"
        )?;
        return Ok(ExitStatus::USAGE);
    }
    let Some(scenario_text) = read_input(scenario_path, err)? else {
        return Ok(ExitStatus::USAGE);
    };
    let Some(trace_text) = read_input(trace_path, err)? else {
        return Ok(ExitStatus::USAGE);
    };
    let scenario = match parse_scenario(&scenario_text) {
        Ok(sc) => sc,
        Err(e) => {
            writeln!(err, "{}: {e}", scenario_path.display())?;
            return Ok(ExitStatus::USAGE);
        }
    };
    let trace = match parse_trace(&trace_text) {
        Ok(t) => t,
        Err(e) => {
            writeln!(err, "{}: {e}", trace_path.display())?;
            return Ok(ExitStatus::USAGE);
        }
    };
    if xml {
        for fi in simulate_frames(&scenario, &trace, ticks, dt) {
            writeln!(out, "{}", emit_frame_xml(&fi))?;
        }
    } else {
        out.write_all(frame_log(&simulate(&scenario, &trace, ticks, dt)).as_bytes())?;
    }
    Ok(ExitStatus::SUCCESS)
}

pub fn cmd_check(
    path: &Path,
    kind: FileKind,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> std::io::Result<ExitStatus> {
    let Some(text) = read_input(path, err)? else {
        return Ok(ExitStatus::USAGE);
    };
    let result = match kind {
        FileKind::Scenario => parse_scenario(&text).map(|_| ()),
        FileKind::Trace => parse_trace(&text).map(|_| ()),
    };
    match result {
        Ok(()) => {
            writeln!(out, "OK")?;
            Ok(ExitStatus::SUCCESS)
        }
        Err(e) => {
            writeln!(err, "{}: {e}", path.display())?;
            Ok(ExitStatus::USAGE)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn invoke(args: &[&str]) -> (ExitStatus, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("statethread").chain(args.iter().copied());
        let status = main_with_args(argv, &mut out, &mut err);
        (
            status,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn laws_zero_samples() {
        let (status, out, err) = invoke(&["laws", "--samples", "0"]);
        assert_eq!(status, ExitStatus::SUCCESS);
        assert_eq!(out.lines().count(), 7);
        assert!(out
            .lines()
            .all(|l| l.ends_with("PASS checked=0 counterexamples=0")));
        assert!(err.is_empty());
    }

    #[test]
    fn laws_negative_samples_is_usage_error() {
        let (status, out, err) = invoke(&["laws", "--samples", "-3"]);
        assert_eq!(status, ExitStatus::USAGE);
        assert!(out.is_empty());
        assert!(err.contains("Usage"), "{err}");
    }

    #[test]
    fn unknown_subcommand_is_usage_error() {
        assert_eq!(invoke(&["frobnicate"]).0, ExitStatus::USAGE);
        assert_eq!(invoke(&[]).0, ExitStatus::USAGE);
    }

    #[test]
    fn dt_zero_is_rejected() {
        let (status, _, _) = invoke(&["simulate", "a", "b", "--ticks", "1", "--dt", "0"]);
        assert_eq!(status, ExitStatus::USAGE);
    }

    #[test]
    fn missing_file() {
        let (status, out, err) = invoke(&["check", "/no/such/file", "--kind", "trace"]);
        assert_eq!(status, ExitStatus::USAGE);
        assert!(out.is_empty());
        assert!(err.contains("cannot read"), "{err}");
    }
}
