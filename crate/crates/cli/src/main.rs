mod input;
mod render;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use zn_ag::classes::{ag_members_with, enumerate_class_with};
use zn_ag::{
    ag_group_members, classify, falsify_converse, verify, ClassVariant, ModGroupoid, NRange,
    TheoremId, VerifyConfig,
};

/// Modular groupoids Z_n(t,u) with a*b = (t*a + u*b) mod n.
#[derive(Debug, Parser)]
#[command(name = "znag", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the Cayley table of Z_n(t,u).
    Table(Params),
    /// Run every property checker on Z_n(t,u) or on a table read from a CSV file.
    Classify {
        #[arg(allow_negative_numbers = true, num_args = 3, value_names = ["N", "T", "U"],
              required_unless_present = "from_file", conflicts_with = "from_file")]
        params: Option<Vec<i128>>,
        /// CSV table: n lines of n comma-separated residues, no header.
        #[arg(long, value_name = "PATH")]
        from_file: Option<PathBuf>,
    },
    /// List the (t,u) pairs of a parameter class.
    Enumerate {
        n: usize,
        #[arg(long = "class", default_value = "zstarstarstar", value_parser = parse_variant)]
        variant: ClassVariant,
        /// Keep only pairs with t^2 = u (mod n).
        #[arg(long)]
        ag: bool,
        /// List the AG-group pairs (t,1) with t^2 = 1 (mod n) instead.
        #[arg(long, conflicts_with_all = ["variant", "ag"])]
        ag_group: bool,
        /// Keep the degenerate pair (0,0) in zstarstarstar.
        #[arg(long)]
        include_zero: bool,
    },
    /// Check registered theorems over a range of moduli.
    Verify(VerifyArgs),
}

#[derive(Debug, Args)]
struct Params {
    #[arg(allow_negative_numbers = true)]
    n: i128,
    #[arg(allow_negative_numbers = true)]
    t: i128,
    #[arg(allow_negative_numbers = true)]
    u: i128,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    /// Theorem id, or `all`.
    #[arg(long, default_value = "all")]
    theorem: String,
    #[arg(long, default_value_t = 3)]
    min_n: usize,
    #[arg(long, default_value_t = 30)]
    max_n: usize,
    /// Search outside the hypothesis instead of verifying it.
    #[arg(long)]
    converse: bool,
    /// Largest modulus checked exhaustively; larger ones are sampled.
    #[arg(long, default_value_t = 128)]
    cap: usize,
    /// Random triples per cubic check above the cap.
    #[arg(long, default_value_t = 1_000_000)]
    samples: u64,
    /// Base seed for sampled checks; each (n, t, u) derives its own.
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long, default_value_t = 10)]
    max_violations: usize,
    /// Run on the calling thread only.
    #[arg(long)]
    sequential: bool,
}

fn parse_variant(s: &str) -> Result<ClassVariant, String> {
    s.parse().map_err(|e: zn_ag::Error| e.to_string())
}

/// Exit status 2: usage or input error.
struct UsageError(String);

impl<E: std::fmt::Display> From<E> for UsageError {
    fn from(e: E) -> Self {
        UsageError(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(UsageError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, UsageError> {
    let format = cli.format;
    match cli.command {
        Command::Table(Params { n, t, u }) => {
            let g = ModGroupoid::new(n, t, u)?;
            print!("{}", render::table(&g, format));
        }
        Command::Classify { params, from_file } => {
            let (header, table) = match (params, from_file) {
                (Some(p), _) => {
                    let g = ModGroupoid::new(p[0], p[1], p[2])?;
                    (Some(g), g.cayley_table())
                }
                (None, Some(path)) => {
                    let text = std::fs::read_to_string(&path)
                        .map_err(|e| UsageError(format!("{}: {e}", path.display())))?;
                    let table = input::parse_table(&text)
                        .map_err(|e| UsageError(format!("{}: {e}", path.display())))?;
                    (None, table)
                }
                (None, None) => unreachable!("clap requires one source"),
            };
            let profile = classify(&table);
            print!("{}", render::profile(header.as_ref(), &profile, format));
        }
        Command::Enumerate {
            n,
            variant,
            ag,
            ag_group,
            include_zero,
        } => {
            let listing = if ag_group {
                ag_group_members(n)?
            } else if ag {
                ag_members_with(n, variant, include_zero)?
            } else {
                enumerate_class_with(n, variant, include_zero)?
            };
            print!("{}", render::listing(&listing, format));
        }
        Command::Verify(args) => return run_verify(args, format),
    }
    Ok(ExitCode::SUCCESS)
}

fn run_verify(args: VerifyArgs, format: Format) -> Result<ExitCode, UsageError> {
    let ids: Vec<TheoremId> = if args.theorem == "all" {
        TheoremId::ALL.to_vec()
    } else {
        vec![args.theorem.parse()?]
    };
    let range = NRange::new(args.min_n, args.max_n)?;
    let defaults = VerifyConfig::default();
    let config = VerifyConfig {
        exhaustive_cap: args.cap,
        samples: args.samples,
        seed: args.seed.unwrap_or(defaults.seed),
        max_violations: args.max_violations,
        parallel: !args.sequential,
        ..defaults
    };
    let reports = if args.converse {
        let mut reports = Vec::new();
        for &id in &ids {
            match falsify_converse(id, range, &config) {
                Ok(r) => reports.push(r),
                // `all` skips the ids without a converse search.
                Err(zn_ag::Error::NoConverse(_)) if ids.len() > 1 => {}
                Err(e) => return Err(e.into()),
            }
        }
        reports
    } else if ids.len() > 1 {
        zn_ag::verify_all(range, &config)?
    } else {
        vec![verify(ids[0], range, &config)?]
    };
    print!("{}", render::reports(&reports, format));
    Ok(if reports.iter().all(|r| r.passed()) {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}
