use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use sccore::table::Method;
use serde::Serialize;

use crate::CliError;

/// Inclusive integer range written `A..B`, or a single value `A`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct IntRange {
    pub start: u64,
    pub end: u64,
}

impl IntRange {
    pub fn new(start: u64, end: u64) -> Self {
        IntRange { start, end }
    }

    pub fn iter(&self) -> impl Iterator<Item = u64> {
        self.start..=self.end
    }
}

impl FromStr for IntRange {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let num = |x: &str| x.trim().parse::<u64>().map_err(|e| format!("bad integer {x:?}: {e}"));
        let (start, end) = match s.split_once("..") {
            Some((a, b)) => (num(a)?, num(b.strip_prefix('=').unwrap_or(b))?),
            None => {
                let v = num(s)?;
                (v, v)
            }
        };
        if start > end {
            return Err(format!("empty range {s}"));
        }
        Ok(IntRange { start, end })
    }
}

impl fmt::Display for IntRange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}..{}", self.start, self.end)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    Monotonicity,
    ZeroSets,
    SevenVsNine,
    Conjecture45,
    Bounds,
    Proportion,
    Exceptional,
}

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::Monotonicity => "monotonicity",
            Suite::ZeroSets => "zero-sets",
            Suite::SevenVsNine => "seven-vs-nine",
            Suite::Conjecture45 => "conjecture45",
            Suite::Bounds => "bounds",
            Suite::Proportion => "proportion",
            Suite::Exceptional => "exceptional",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CommandKind {
    Table,
    Verify,
    Asymptotics,
}

#[derive(Debug, Parser)]
#[command(name = "sccore", version, about = "Tabulate and cross-check self-conjugate t-core counts")]
pub struct Cli {
    #[command(subcommand)]
    pub command: CliCommand,
    #[command(flatten)]
    pub options: Options,
}

#[derive(Debug, Subcommand)]
pub enum CliCommand {
    /// Tabulate sc_t(n) by each requested method and check agreement.
    Table,
    /// Run one verification suite.
    Verify {
        #[arg(value_enum)]
        suite: Suite,
    },
    /// Compare sc_t(n) with the circle-method main term (t >= 10).
    Asymptotics,
}

#[derive(Debug, Args)]
pub struct Options {
    /// t range, `A..B` inclusive or a single value.
    #[arg(long = "t", global = true)]
    pub t: Option<IntRange>,
    /// n range, `A..B` inclusive or a single value.
    #[arg(long = "n", global = true)]
    pub n: Option<IntRange>,
    /// Comma-separated methods: oracle, series, formula, circle.
    #[arg(long, global = true, value_delimiter = ',')]
    pub methods: Option<Vec<Method>>,
    /// Truncation K of the singular series.
    #[arg(long = "K", global = true, default_value_t = 200)]
    pub k_max: u64,
    /// Largest n accepted by the brute-force enumerator.
    #[arg(long, global = true, default_value_t = 120)]
    pub cap: u64,
    /// Comma-separated proportions for the proportion suite.
    #[arg(long, global = true, value_delimiter = ',')]
    pub alpha: Option<Vec<f64>>,
    /// X for the conjecture45 suite.
    #[arg(long = "x", global = true, default_value_t = 13)]
    pub x: u64,
    /// Spacing between sampled n in the proportion suite.
    #[arg(long, global = true, default_value_t = 20)]
    pub step: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

/// Fully resolved settings for one run; defaults depend on the command.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RunConfig {
    pub command: CommandKind,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub suite: Option<Suite>,
    pub t: IntRange,
    pub n: IntRange,
    pub methods: Vec<String>,
    #[serde(rename = "K")]
    pub k_max: u64,
    pub cap: u64,
    pub alpha: Vec<f64>,
    pub x: u64,
    pub step: u64,
    pub format: Format,
    #[serde(skip)]
    pub out: Option<PathBuf>,
    #[serde(skip)]
    pub method_list: Vec<Method>,
    #[serde(skip)]
    pub t_explicit: bool,
}

impl RunConfig {
    pub fn from_cli(cli: Cli) -> Result<Self, CliError> {
        let o = cli.options;
        let (command, suite) = match cli.command {
            CliCommand::Table => (CommandKind::Table, None),
            CliCommand::Verify { suite } => (CommandKind::Verify, Some(suite)),
            CliCommand::Asymptotics => (CommandKind::Asymptotics, None),
        };
        let (t, n) = default_ranges(command, suite);
        let method_list = o.methods.unwrap_or_else(|| vec![Method::Oracle, Method::Series, Method::Formula]);
        if method_list.is_empty() {
            return Err(CliError::Usage("no methods requested".into()));
        }
        if o.cap == 0 {
            return Err(CliError::Usage("--cap must be positive".into()));
        }
        if o.k_max == 0 {
            return Err(CliError::Usage("--K must be positive".into()));
        }
        if o.step == 0 {
            return Err(CliError::Usage("--step must be positive".into()));
        }
        let alpha = o.alpha.unwrap_or_else(|| vec![0.25, 0.5, 0.75]);
        if alpha.is_empty() || alpha.iter().any(|a| !(*a > 0.0 && *a <= 1.0)) {
            return Err(CliError::Usage("--alpha values must lie in (0, 1]".into()));
        }
        Ok(RunConfig {
            t_explicit: o.t.is_some(),
            command,
            suite,
            t: o.t.unwrap_or(t),
            n: o.n.unwrap_or(n),
            methods: method_list.iter().map(|m| m.name().to_string()).collect(),
            k_max: o.k_max,
            cap: o.cap,
            alpha,
            x: o.x,
            step: o.step,
            format: o.format,
            out: o.out,
            method_list,
        })
    }

    pub fn command_name(&self) -> String {
        match (self.command, self.suite) {
            (CommandKind::Table, _) => "table".into(),
            (CommandKind::Asymptotics, _) => "asymptotics".into(),
            (CommandKind::Verify, Some(s)) => format!("verify {}", s.name()),
            (CommandKind::Verify, None) => "verify".into(),
        }
    }

    pub fn limits(&self) -> sccore::Limits {
        sccore::Limits {
            enumeration: self.cap,
            ..sccore::Limits::default()
        }
    }
}

fn default_ranges(command: CommandKind, suite: Option<Suite>) -> (IntRange, IntRange) {
    let r = IntRange::new;
    match (command, suite) {
        (CommandKind::Table, _) => (r(4, 9), r(0, 40)),
        (CommandKind::Asymptotics, _) => (r(10, 10), r(1, 300)),
        (_, Some(Suite::Monotonicity)) => (r(6, 12), r(20, 120)),
        (_, Some(Suite::ZeroSets)) => (r(7, 9), r(0, 200)),
        (_, Some(Suite::SevenVsNine)) => (r(7, 9), r(0, 100)),
        (_, Some(Suite::Conjecture45)) => (r(9, 9), r(0, 0)),
        (_, Some(Suite::Bounds)) => (r(10, 13), r(0, 50)),
        (_, Some(Suite::Proportion)) => (r(1, 1), r(40, 100)),
        (_, Some(Suite::Exceptional)) => (r(6, 6), r(0, 100_000)),
        (_, None) => (r(1, 1), r(0, 0)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_ranges() {
        assert_eq!("4..9".parse::<IntRange>().unwrap(), IntRange::new(4, 9));
        assert_eq!("8".parse::<IntRange>().unwrap(), IntRange::new(8, 8));
        assert_eq!("0..=3".parse::<IntRange>().unwrap(), IntRange::new(0, 3));
        assert!("5..4".parse::<IntRange>().is_err());
        assert!("a..4".parse::<IntRange>().is_err());
        assert_eq!(IntRange::new(3, 7).iter().count(), 5);
    }

    #[test]
    fn defaults_follow_command() {
        let cli = Cli::try_parse_from(["sccore", "verify", "monotonicity"]).unwrap();
        let cfg = RunConfig::from_cli(cli).unwrap();
        assert_eq!(cfg.n, IntRange::new(20, 120));
        assert_eq!(cfg.command_name(), "verify monotonicity");
        let cli = Cli::try_parse_from(["sccore", "table", "--methods", "series,circle", "--K", "50"]).unwrap();
        let cfg = RunConfig::from_cli(cli).unwrap();
        assert_eq!(cfg.method_list, vec![Method::Series, Method::Circle]);
        assert_eq!(cfg.k_max, 50);
    }

    #[test]
    fn rejects_bad_options() {
        assert!(Cli::try_parse_from(["sccore", "table", "--n", "3..1"]).is_err());
        let cli = Cli::try_parse_from(["sccore", "table", "--cap", "0"]).unwrap();
        assert!(RunConfig::from_cli(cli).is_err());
        let cli = Cli::try_parse_from(["sccore", "verify", "proportion", "--alpha", "1.5"]).unwrap();
        assert!(RunConfig::from_cli(cli).is_err());
    }
}
