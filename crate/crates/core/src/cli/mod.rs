//! Command-line surface: argument parsing, run configuration and the shared
//! output/exit-code plumbing. `main.rs` only forwards `std::env::args`.

mod commands;
mod json;
pub mod manifest;
mod svg;

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::error::Error;
use crate::exactnum::DEFAULT_DIGITS;

pub use json::{approx_json, exact_json, rational_json};

pub const EXIT_OK: i32 = 0;
pub const EXIT_MANIFEST_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

pub const DEFAULT_SCAN_STEPS: usize = 999;

/// Smallest precision accepted by commands that compare approximations.
pub const MIN_APPROX_DIGITS: u32 = 10;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    Text,
    Json,
    Svg,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RunConfig {
    pub precision_digits: u32,
    pub scan_steps: usize,
    pub output_format: OutputFormat,
    pub seed: u64,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            precision_digits: DEFAULT_DIGITS,
            scan_steps: DEFAULT_SCAN_STEPS,
            output_format: OutputFormat::Text,
            seed: 0,
        }
    }
}

impl RunConfig {
    fn require_approx_precision(&self) -> Result<(), Error> {
        if self.precision_digits < MIN_APPROX_DIGITS {
            return Err(Error::InvalidArgument(format!(
                "--digits must be at least {MIN_APPROX_DIGITS} for approximate comparisons, got {}",
                self.precision_digits
            )));
        }
        Ok(())
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "cyclicquad",
    version,
    about = "Exact mensuration of triangles and quadrilaterals, with a coordinate-embedding oracle"
)]
pub struct Cli {
    /// Significant decimal digits for approximations
    #[arg(long, global = true, default_value_t = DEFAULT_DIGITS, value_parser = clap::value_parser!(u32).range(1..))]
    pub digits: u32,

    /// Number of interior diagonals sampled by `scan`
    #[arg(long, global = true, default_value_t = DEFAULT_SCAN_STEPS)]
    pub steps: usize,

    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Text)]
    pub format: OutputFormat,

    /// Seed for the randomized property checks in `reproduce`
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,

    /// Write the output to a file instead of stdout
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Re-derive every worked example and print a pass/fail manifest
    Reproduce {
        /// Perturb the expected value of one entry (exercises the failure path)
        #[arg(long, hide = true)]
        inject_failure: Option<String>,
    },
    /// Area of a triangle (three sides) or quadrilateral (four sides in order)
    Area {
        #[arg(required = true, num_args = 3..=4)]
        lengths: Vec<String>,
        /// Diagonal separating the (a, b) triangle from the (c, d) triangle
        #[arg(long)]
        diagonal: Option<String>,
    },
    /// Integer cyclic quadrilateral from two Pythagorean triples
    Construct {
        l1: u64,
        m1: u64,
        n1: u64,
        l2: u64,
        m2: u64,
        n2: u64,
    },
    /// Area as a function of the diagonal for fixed sides
    Scan {
        #[arg(required = true, num_args = 4)]
        sides: Vec<String>,
    },
    /// Second diagonal and area of a rhombus
    Rhombus {
        side: Option<String>,
        d1: Option<String>,
        /// Build the rhombus from a Pythagorean triple instead
        #[arg(long, num_args = 3, value_names = ["L", "M", "N"], conflicts_with_all = ["side", "d1"])]
        triple: Option<Vec<u64>>,
    },
    /// Pythagorean triples up to a hypotenuse bound
    Triples {
        max_hypotenuse: u64,
        /// List pairs of triples sharing a hypotenuse instead
        #[arg(long)]
        pairs: bool,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Reproduce { .. } => "reproduce",
            Command::Area { .. } => "area",
            Command::Construct { .. } => "construct",
            Command::Scan { .. } => "scan",
            Command::Rhombus { .. } => "rhombus",
            Command::Triples { .. } => "triples",
        }
    }
}

/// What one invocation produced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn usage(message: impl Into<String>) -> Self {
        Outcome {
            code: EXIT_USAGE,
            stdout: String::new(),
            stderr: message.into(),
        }
    }
}

/// A command's result before formatting.
pub(crate) struct Rendered {
    pub code: i32,
    pub text: String,
    /// `entries`/`report` members of the JSON document.
    pub json_body: Vec<(&'static str, Value)>,
    pub svg: Option<String>,
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(err) => {
            let code = if err.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = err.render().to_string();
            return if code == EXIT_OK {
                Outcome { code, stdout: rendered, stderr: String::new() }
            } else {
                Outcome::usage(rendered)
            };
        }
    };
    run_cli(&cli)
}

pub fn run_cli(cli: &Cli) -> Outcome {
    let config = RunConfig {
        precision_digits: cli.digits,
        scan_steps: cli.steps,
        output_format: cli.format,
        seed: cli.seed,
    };
    let rendered = match commands::dispatch(&cli.command, &config) {
        Ok(rendered) => rendered,
        Err(err) => return Outcome::usage(format!("error: {err}\n")),
    };
    let body = match config.output_format {
        OutputFormat::Text => rendered.text,
        OutputFormat::Json => {
            let mut doc = serde_json::Map::new();
            doc.insert("command".into(), json!(cli.command.name()));
            doc.insert("config".into(), serde_json::to_value(&config).expect("config serializes"));
            for (key, value) in rendered.json_body {
                doc.insert(key.into(), value);
            }
            let mut text = serde_json::to_string_pretty(&Value::Object(doc)).expect("json serializes");
            text.push('\n');
            text
        }
        OutputFormat::Svg => match rendered.svg {
            Some(svg) => svg,
            None => {
                return Outcome::usage(format!(
                    "error: --format svg is only available for `scan`, not `{}`\n",
                    cli.command.name()
                ))
            }
        },
    };
    match &cli.out {
        Some(path) => match std::fs::write(path, &body) {
            Ok(()) => Outcome {
                code: rendered.code,
                stdout: String::new(),
                stderr: String::new(),
            },
            Err(err) => Outcome::usage(format!("error: cannot write {}: {err}\n", path.display())),
        },
        None => Outcome {
            code: rendered.code,
            stdout: body,
            stderr: String::new(),
        },
    }
}
