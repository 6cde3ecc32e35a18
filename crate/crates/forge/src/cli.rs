use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use operad_forge_core::span::ClosureOptions;

use crate::commands::{self, instance, SeriesName};
use crate::error::{CliError, CliResult};
use crate::exec::Parallel;
use crate::report::Format;
use crate::suites::{self, Context, Suite};

#[derive(Debug, Parser)]
#[command(
    name = "operad-forge",
    version,
    about = "Graph insertion operads in exact arithmetic"
)]
pub struct Cli {
    /// Output style.
    #[arg(long, global = true, value_enum, default_value = "table")]
    pub format: Format,
    /// Seed for randomized checks.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Allow arities above the default bound of 6.
    #[arg(long, global = true)]
    pub unsafe_arity: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Insert the right operand into the left one at vertex STAR.
    Compose {
        #[arg(long, default_value = "g")]
        operad: String,
        left: PathBuf,
        star: String,
        right: PathBuf,
    },
    /// Run a verification suite; exits 1 if any check fails.
    Verify {
        #[arg(value_enum)]
        suite: Suite,
    },
    /// Dimensions of the suboperad generated by the graphs in a file.
    Closure {
        #[arg(long, default_value = "g")]
        operad: String,
        #[arg(long)]
        gens: PathBuf,
        #[arg(long, default_value_t = 5)]
        max_arity: usize,
        /// Skip composites with more edges than this.
        #[arg(long)]
        edge_cap: Option<usize>,
    },
    /// Generator orbits of a whole operad, arity by arity.
    Generators {
        #[arg(long, default_value = "g")]
        operad: String,
        #[arg(long, visible_alias = "arity", default_value_t = 4)]
        max_arity: usize,
        #[arg(long)]
        edge_cap: Option<usize>,
    },
    /// Whether an element lies in the suboperad generated by a file of graphs.
    Membership {
        #[arg(long, default_value = "g")]
        operad: String,
        #[arg(long)]
        gens: PathBuf,
        #[arg(long)]
        element: PathBuf,
        #[arg(long)]
        edge_cap: Option<usize>,
    },
    /// Pairing matrix between dual and primal tree combinations.
    Pairing {
        #[arg(long)]
        left: PathBuf,
        #[arg(long)]
        right: PathBuf,
        /// Pair the given combinations as they are instead of their relabeling spans.
        #[arg(long)]
        raw: bool,
    },
    /// Dimensions of a Hilbert series.
    Hilbert {
        #[arg(long, value_enum, default_value = "sp-dual")]
        series: SeriesName,
        #[arg(long, default_value_t = operad_forge_core::series::DEFAULT_ORDER)]
        order: usize,
    },
}

fn read(path: &Path) -> CliResult<String> {
    std::fs::read_to_string(path).map_err(|e| CliError::parse(format!("{}: {e}", path.display())))
}

fn options(cli: &Cli, edge_cap: Option<usize>) -> ClosureOptions {
    ClosureOptions {
        edge_cap,
        unsafe_arity: cli.unsafe_arity,
        ..ClosureOptions::default()
    }
}

/// Standard output and exit status of one invocation.
pub struct Outcome {
    pub stdout: String,
    pub notices: Vec<String>,
    pub success: bool,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Self {
            stdout,
            notices: Vec::new(),
            success: true,
        }
    }
}

pub fn run(cli: &Cli) -> CliResult<Outcome> {
    let exec = Parallel::from_env()?;
    match &cli.command {
        Command::Compose {
            operad,
            left,
            star,
            right,
        } => {
            let inst = instance(operad)?;
            let c = commands::compose_texts(&inst, &read(left)?, star, &read(right)?)?;
            Ok(Outcome {
                stdout: commands::render_comb(&c.result, &c.names, cli.format),
                notices: c.notices,
                success: true,
            })
        }
        Command::Verify { suite } => {
            let report = suites::run(
                *suite,
                &Context {
                    seed: cli.seed,
                    exec: &exec,
                },
            );
            Ok(Outcome {
                stdout: report.render(cli.format),
                notices: Vec::new(),
                success: report.passed,
            })
        }
        Command::Closure {
            operad,
            gens,
            max_arity,
            edge_cap,
        } => Ok(Outcome::ok(commands::closure(
            instance(operad)?,
            &read(gens)?,
            *max_arity,
            options(cli, *edge_cap),
            &exec,
            cli.format,
        )?)),
        Command::Generators {
            operad,
            max_arity,
            edge_cap,
        } => Ok(Outcome::ok(commands::generators(
            instance(operad)?,
            *max_arity,
            options(cli, *edge_cap),
            &exec,
            cli.format,
        )?)),
        Command::Membership {
            operad,
            gens,
            element,
            edge_cap,
        } => Ok(Outcome::ok(commands::membership(
            instance(operad)?,
            &read(gens)?,
            &read(element)?,
            options(cli, *edge_cap),
            &exec,
            cli.format,
        )?)),
        Command::Pairing { left, right, raw } => Ok(Outcome::ok(commands::pairing(
            &read(left)?,
            &read(right)?,
            !raw,
            cli.format,
        )?)),
        Command::Hilbert { series, order } => {
            Ok(Outcome::ok(commands::hilbert(*series, *order, cli.format)?))
        }
    }
}

pub fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            for n in &out.notices {
                eprintln!("note: {n}");
            }
            let mut stdout = std::io::stdout().lock();
            let _ = stdout.write_all(out.stdout.as_bytes());
            let _ = stdout.flush();
            if out.success {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
