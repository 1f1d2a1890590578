//! Argument parsing and dispatch for `rkernel`. Every command reads its
//! input, calls the library, and returns the library's report text.

use std::fs;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use rainbow_kernels::explore::{explore_fk, explore_problem1, ExploreConfig, ExploreReport};
use rainbow_kernels::generators::{random_tournament, t5_star, t_star};
use rainbow_kernels::reductions::{
    build_dh, build_td, parse_hypergraph, parse_rpog, serialize_rpog, Hypergraph3, RpogInstance,
};
use rainbow_kernels::report::{self, Report};
use rainbow_kernels::{
    parse_digraph, parse_tournament, rainbow_closure, serialize_dot, serialize_tournament,
    ColoredDigraph, Error, Tournament,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_GUARD: i32 = 3;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommandOutcome {
    pub exit_code: i32,
    pub report_text: String,
}

impl CommandOutcome {
    fn ok(text: impl Into<String>) -> Self {
        CommandOutcome {
            exit_code: EXIT_OK,
            report_text: text.into(),
        }
    }

    fn from_report(r: Report) -> Self {
        CommandOutcome {
            exit_code: if r.positive { EXIT_OK } else { EXIT_NEGATIVE },
            report_text: r.text,
        }
    }
}

#[derive(Debug)]
enum Failure {
    Library(Error),
    Io(PathBuf, std::io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Library(e)
    }
}

impl Failure {
    fn into_outcome(self) -> CommandOutcome {
        match self {
            Failure::Library(e) => CommandOutcome {
                exit_code: if e.is_guard() { EXIT_GUARD } else { EXIT_INPUT },
                report_text: format!("error: {e}\n"),
            },
            Failure::Io(path, e) => CommandOutcome {
                exit_code: EXIT_INPUT,
                report_text: format!("error: {}: {e}\n", path.display()),
            },
        }
    }
}

type Outcome = std::result::Result<CommandOutcome, Failure>;

#[derive(Parser)]
#[command(name = "rkernel", version)]
#[command(about = "Rainbow and properly colored kernels in arc-colored digraphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write a named or random tournament
    Gen {
        #[command(subcommand)]
        what: GenKind,
    },
    /// Decide whether a kernel by rainbow or properly colored paths exists
    Kernel { kind: PathKindArg, file: PathBuf },
    /// Print the rainbow or properly colored closure
    Closure { kind: ClosureKindArg, file: PathBuf },
    /// Check a coloring hypothesis
    Check { what: CheckKind, file: PathBuf },
    /// Apply one or both hardness gadgets
    Reduce {
        what: ReduceKind,
        file: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Solve a problem by brute force
    Solve { problem: SolveKind, file: PathBuf },
    /// Cross-check both gadgets on a hypergraph
    Verify { what: VerifyKind, file: PathBuf },
    /// Search random instances for counterexamples
    Explore {
        what: ExploreKind,
        /// Largest vertex count
        #[arg(long)]
        n: usize,
        /// Number of instances
        #[arg(long)]
        seeds: u64,
        /// First seed
        #[arg(long)]
        seed: u64,
        /// Directory for counterexample instances
        #[arg(long, default_value = ".")]
        out_dir: PathBuf,
    },
    /// Convert a digraph to another format
    Export {
        format: ExportFormat,
        file: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum GenKind {
    /// The 2-colored 5-vertex tournament without a rainbow kernel
    T5star {
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// The n-vertex tournament with a monochromatic sink triangle
    Tstar {
        n: usize,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// A random tournament with at most m colors
    Random {
        n: usize,
        m: usize,
        #[arg(long)]
        seed: u64,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum PathKindArg {
    Rainbow,
    Pcp,
}

#[derive(Clone, Copy, ValueEnum)]
enum ClosureKindArg {
    Rainbow,
    Pc,
}

#[derive(Clone, Copy, ValueEnum)]
enum CheckKind {
    Thm2,
    Triangles,
    Cycles,
    Lemma1,
}

#[derive(Clone, Copy, ValueEnum)]
enum ReduceKind {
    #[value(name = "3dpm-to-rpog")]
    DpmToRpog,
    #[value(name = "rpog-to-rkt")]
    RpogToRkt,
    #[value(name = "3dpm-to-rkt")]
    DpmToRkt,
}

#[derive(Clone, Copy, ValueEnum)]
enum SolveKind {
    #[value(name = "3dpm")]
    Dpm,
}

#[derive(Clone, Copy, ValueEnum)]
enum VerifyKind {
    Chain,
}

#[derive(Clone, Copy, ValueEnum)]
enum ExploreKind {
    Problem1,
    Fk,
}

#[derive(Clone, Copy, ValueEnum)]
enum ExportFormat {
    Dot,
}

/// Runs one command. `argv` excludes the program name.
pub fn run<I, S>(argv: I) -> CommandOutcome
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let args = std::iter::once("rkernel".into()).chain(argv.into_iter().map(Into::into));
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let exit_code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            return CommandOutcome {
                exit_code,
                report_text: e.render().to_string(),
            };
        }
    };
    dispatch(cli.command).unwrap_or_else(Failure::into_outcome)
}

fn read(path: &Path) -> std::result::Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Io(path.to_path_buf(), e))
}

fn read_digraph(path: &Path) -> std::result::Result<ColoredDigraph, Failure> {
    Ok(parse_digraph(&read(path)?)?)
}

fn read_tournament(path: &Path) -> std::result::Result<Tournament, Failure> {
    Ok(parse_tournament(&read(path)?)?)
}

fn read_hypergraph(path: &Path) -> std::result::Result<Hypergraph3, Failure> {
    Ok(parse_hypergraph(&read(path)?)?)
}

fn read_rpog(path: &Path) -> std::result::Result<RpogInstance, Failure> {
    Ok(parse_rpog(&read(path)?)?)
}

/// Writes `text` to `output` and reports the path, or returns the text.
fn emit(text: String, output: Option<PathBuf>) -> Outcome {
    match output {
        None => Ok(CommandOutcome::ok(text)),
        Some(path) => {
            fs::write(&path, text).map_err(|e| Failure::Io(path.clone(), e))?;
            Ok(CommandOutcome::ok(format!("wrote {}\n", path.display())))
        }
    }
}

fn dispatch(command: Command) -> Outcome {
    match command {
        Command::Gen { what } => match what {
            GenKind::T5star { output } => emit(serialize_tournament(&t5_star()), output),
            GenKind::Tstar { n, output } => emit(serialize_tournament(&t_star(n)?), output),
            GenKind::Random { n, m, seed, output } => emit(
                serialize_tournament(&random_tournament(n, m, seed)?),
                output,
            ),
        },
        Command::Kernel { kind, file } => Ok(CommandOutcome::from_report(match kind {
            PathKindArg::Rainbow => report::rainbow_kernel_report(&read_digraph(&file)?)?,
            PathKindArg::Pcp => report::pcp_kernel_report(&read_tournament(&file)?),
        })),
        Command::Closure { kind, file } => Ok(CommandOutcome::from_report(match kind {
            ClosureKindArg::Rainbow => {
                report::closure_report("rainbow", &rainbow_closure(&read_digraph(&file)?))
            }
            ClosureKindArg::Pc => report::pc_closure_report(&read_tournament(&file)?),
        })),
        Command::Check { what, file } => Ok(CommandOutcome::from_report(match what {
            CheckKind::Thm2 => report::theorem2_report(&read_tournament(&file)?)?,
            CheckKind::Triangles => report::triangles_report(&read_tournament(&file)?),
            CheckKind::Cycles => report::cycles_report(&read_digraph(&file)?)?,
            CheckKind::Lemma1 => report::lemma1_report(&read_tournament(&file)?)?,
        })),
        Command::Reduce { what, file, output } => {
            let text = match what {
                ReduceKind::DpmToRpog => serialize_rpog(&build_dh(&read_hypergraph(&file)?)),
                ReduceKind::RpogToRkt => {
                    serialize_tournament(&build_td(&read_rpog(&file)?).tournament)
                }
                ReduceKind::DpmToRkt => {
                    serialize_tournament(&build_td(&build_dh(&read_hypergraph(&file)?)).tournament)
                }
            };
            emit(text, output)
        }
        Command::Solve { problem, file } => match problem {
            SolveKind::Dpm => Ok(CommandOutcome::from_report(report::matching_report(
                &read_hypergraph(&file)?,
            )?)),
        },
        Command::Verify { what, file } => match what {
            VerifyKind::Chain => Ok(CommandOutcome::from_report(report::chain_report(
                &read_hypergraph(&file)?,
            )?)),
        },
        Command::Explore {
            what,
            n,
            seeds,
            seed,
            out_dir,
        } => {
            let config = ExploreConfig {
                n_max: n,
                seeds,
                base_seed: seed,
            };
            let result = match what {
                ExploreKind::Problem1 => explore_problem1(&config)?,
                ExploreKind::Fk => explore_fk(&config)?,
            };
            save_counterexamples(&result, &out_dir)?;
            Ok(CommandOutcome::from_report(report::explore_report(&result)))
        }
        Command::Export {
            format,
            file,
            output,
        } => match format {
            ExportFormat::Dot => emit(serialize_dot(&read_digraph(&file)?), output),
        },
    }
}

fn save_counterexamples(result: &ExploreReport, dir: &Path) -> std::result::Result<(), Failure> {
    for rec in result.counterexamples() {
        let path = dir.join(rec.instance_name(result.name));
        let text = rec
            .counterexample
            .as_deref()
            .expect("counterexample record");
        fs::write(&path, text).map_err(|e| Failure::Io(path.clone(), e))?;
    }
    Ok(())
}
