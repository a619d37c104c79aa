//! `gbfan`: Gröbner bases, Gröbner fans and point-set constructions from the
//! command line. Exit codes: 0 success, 2 parse or usage, 3 domain, 4 internal.

mod commands;
mod input;

use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use gbfan::{ErrorKind, FieldSpec};
use serde_json::Value;

use input::{IdealSource, RingFlags, Source};

#[derive(Parser, Debug)]
#[command(name = "gbfan", version, about = "Exact Gröbner bases, Gröbner fans and ideals of points")]
pub struct Cli {
    /// Coefficient field: QQ or GF(p). Overrides any `# field:` header.
    #[arg(long, global = true)]
    field: Option<String>,
    /// Comma separated variables, highest first. Overrides any `# vars:` header.
    #[arg(long, global = true)]
    vars: Option<String>,
    /// Term ordering: lex, deglex, degrevlex, weight:w1,… or matrix:r1;r2;…
    #[arg(long, global = true, default_value = "degrevlex")]
    order: String,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Seed for randomized commands.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Reduced Gröbner basis under --order.
    Gb(IdealSource),
    /// Every reduced Gröbner basis, one per cone of the Gröbner fan.
    Fan(IdealSource),
    /// Reduced basis of the vanishing ideal of a points file under --order.
    Points(Source),
    /// Distraction of a monomial ideal.
    Distract {
        #[command(flatten)]
        source: Source,
        /// One tuple of distinct constants per variable, tuples separated by `;`.
        #[arg(long)]
        spec: String,
    },
    /// Natural distraction of a zero-dimensional monomial ideal.
    Natural(Source),
    /// Staircase points of a zero-dimensional monomial ideal as CSV.
    Staircase {
        #[command(flatten)]
        source: Source,
        /// Draw the order ideal (●) and minimal generators (○) instead; two variables only.
        #[arg(long)]
        diagram: bool,
    },
    /// Largest grid ideal contained in a zero-dimensional ideal.
    Mgrid(IdealSource),
    /// Complement `J : I1` of an ideal inside a grid ideal, with its certificate.
    Complement {
        /// Grid file: one `var: roots` or `var: poly <expr>` line per variable.
        #[command(flatten)]
        grid: Source,
        /// `I1` as the vanishing ideal of this points file.
        #[arg(long, conflicts_with = "ideal")]
        subset: Option<std::path::PathBuf>,
        /// `I1` as a list of generators.
        #[arg(long)]
        ideal: Option<String>,
    },
    /// Image of an ideal under `x_i ↦ a_i x_i + b_i`.
    Shift {
        #[command(flatten)]
        source: IdealSource,
        /// Comma separated nonzero scales `a_i`; all 1 when omitted.
        #[arg(long)]
        scales: Option<String>,
        /// Comma separated offsets `b_i`; all 0 when omitted.
        #[arg(long)]
        offsets: Option<String>,
    },
    /// Distinct normal forms of a polynomial over every reduced basis.
    Models {
        #[command(flatten)]
        source: IdealSource,
        /// The polynomial to reduce.
        #[arg(long)]
        function: String,
    },
    /// Whether the ideal has a single reduced Gröbner basis.
    Unique(IdealSource),
    /// Compare fan enumeration with the basic-set oracle on random ideals of points.
    Selfcheck {
        /// Number of random ideals.
        #[arg(long, default_value_t = 20)]
        count: usize,
    },
}

/// A failure with its exit code.
#[derive(Debug)]
pub enum CliError {
    Lib(gbfan::Error),
    Usage(String),
    Check(String),
}

impl From<gbfan::Error> for CliError {
    fn from(e: gbfan::Error) -> Self {
        CliError::Lib(e)
    }
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Check(_) => 4,
            CliError::Lib(e) => match e.kind() {
                ErrorKind::Parse => 2,
                ErrorKind::Domain => 3,
                ErrorKind::Internal => 4,
            },
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Lib(e) => {
                let case = format!("{e:?}");
                let case = case.split(['(', ' ', '{']).next().unwrap_or_default();
                write!(f, "{e} [{case}]")
            }
            CliError::Usage(m) | CliError::Check(m) => write!(f, "{m}"),
        }
    }
}

/// What a command produces: plain text and the structured equivalent.
pub struct Report {
    pub text: String,
    pub json: Value,
}

/// Options shared by every command.
pub struct Context {
    pub flags: RingFlags,
    pub order: String,
    pub seed: u64,
}

fn run(cli: Cli) -> Result<Report, CliError> {
    let field = cli.field.as_deref().map(str::parse::<FieldSpec>).transpose()?;
    let ctx = Context {
        flags: RingFlags { field, vars: cli.vars },
        order: cli.order,
        seed: cli.seed,
    };
    commands::dispatch(&ctx, &cli.command)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = cli.format;
    let name = commands::name(&cli.command);
    match run(cli) {
        Ok(report) => {
            let body = match format {
                Format::Text => report.text,
                Format::Json => {
                    let mut json = report.json;
                    if let Value::Object(map) = &mut json {
                        map.insert("schema".into(), 1.into());
                        map.insert("command".into(), name.into());
                    }
                    serde_json::to_string_pretty(&json).expect("serializable") + "\n"
                }
            };
            // a closed pipe downstream is not a failure of the command
            let _ = std::io::stdout().lock().write_all(body.as_bytes());
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
