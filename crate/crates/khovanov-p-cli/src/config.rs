//! Run configuration shared by all commands, and parsers for the textual
//! argument forms (`lo..hi` windows, comma-separated weights).

use std::fmt;
use std::str::FromStr;

use clap::ValueEnum;
use khovanov_p::{Mode, Weight};
use serde::Serialize;

use crate::error::{CliError, CliResult};

/// Closed range `lo..=hi` of weight entries, written `lo..hi`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Window {
    /// Smallest entry.
    pub lo: i64,
    /// Largest entry.
    pub hi: i64,
}

impl FromStr for Window {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (a, b) = s.split_once("..").ok_or_else(|| format!("window `{s}` is not of the form lo..hi"))?;
        let lo = a.trim().parse::<i64>().map_err(|e| format!("window start `{a}`: {e}"))?;
        let hi = b.trim().trim_start_matches('=').parse::<i64>().map_err(|e| format!("window end `{b}`: {e}"))?;
        if lo > hi {
            return Err(format!("window {lo}..{hi} is empty"));
        }
        Ok(Window { lo, hi })
    }
}

impl fmt::Display for Window {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}..{}", self.lo, self.hi)
    }
}

/// Output format.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
pub enum Format {
    /// Pretty-printed JSON.
    Json,
    /// Plain-text drawings and tables.
    Ascii,
    /// TikZ pictures.
    Tikz,
    /// Graphviz, for quivers.
    Dot,
}

/// Which algebra to compute in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
pub enum ModeArg {
    /// The quotient `K_n`.
    Kn,
    /// The full algebra `K`.
    Full,
}

/// Settings that apply to every command.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RunConfig {
    /// Rank, when the command needs one and it is not implied by the input.
    pub n: Option<usize>,
    /// Algebra.
    pub mode: ModeArg,
    /// Bounds for weight enumeration.
    pub window: Window,
    /// Output format.
    pub output: Format,
    /// Seed of randomized runs.
    pub seed: u64,
}

impl RunConfig {
    /// The rank, or a usage error naming the command that needs it.
    pub fn rank(&self, command: &str) -> CliResult<usize> {
        self.n.ok_or_else(|| CliError::Usage(format!("`{command}` needs -n")))
    }

    /// The algebra for rank `n`.
    pub fn algebra(&self, n: usize) -> Mode {
        match self.mode {
            ModeArg::Kn => Mode::Kn(n),
            ModeArg::Full => Mode::FullK,
        }
    }
}

/// Parses `3,0,-2` (or the empty string) into a weight.
pub fn parse_weight(s: &str) -> CliResult<Weight> {
    let entries = parse_ints(s)?;
    Weight::new(entries).map_err(|e| CliError::Usage(e.to_string()))
}

/// Parses a comma-separated list of integers.
pub fn parse_ints(s: &str) -> CliResult<Vec<i64>> {
    let s = s.trim().trim_start_matches('(').trim_end_matches(')');
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|x| x.trim().parse::<i64>().map_err(|e| CliError::Usage(format!("`{x}` is not an integer: {e}"))))
        .collect()
}

/// Parses a comma-separated list of partition parts.
pub fn parse_parts(s: &str) -> CliResult<Vec<usize>> {
    parse_ints(s)?
        .into_iter()
        .map(|x| usize::try_from(x).map_err(|_| CliError::Usage(format!("negative part {x}"))))
        .collect()
}
