use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use leftsimple::certify::CertifyOptions;
use leftsimple::cli::{self, split_names, CliError, Report, SemigroupFile, ORDER_BOUND_ENV};
use leftsimple::factory::CorpusSpec;

#[derive(Parser)]
#[command(name = "leftsimple", version, about = "Reflexive unitary subsemigroups of finite left simple semigroups")]
struct Args {
    /// Omit timing from reports so output is byte-stable.
    #[arg(long, global = true)]
    golden: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Validate a table and report basic structure.
    Check { file: PathBuf },
    /// Classify a named subset and, if reflexive unitary, its quotient.
    Subset { file: PathBuf, name: String },
    /// Work with normal series.
    Series {
        file: PathBuf,
        #[command(subcommand)]
        action: SeriesAction,
    },
    /// List every reflexive unitary subsemigroup.
    Enumerate { file: PathBuf },
    /// Write an instance file: `left-group <m> <group>` or `double <instance>`.
    Generate {
        kind: String,
        params: Vec<String>,
        #[arg(short, long)]
        output: PathBuf,
        /// Record the reflexive unitary subsemigroups as subsets R1, R2, ...
        #[arg(long)]
        with_ru: bool,
        /// Write JSON instead of the text format.
        #[arg(long)]
        json: bool,
    },
    /// Run every check over the corpus of left groups and doubles.
    Certify {
        #[arg(long, default_value_t = CorpusSpec::default().max_order)]
        max_order: usize,
    },
}

#[derive(Subcommand)]
enum SeriesAction {
    /// Check that comma-separated subsets form a normal series below S.
    Validate { subsets: String },
    /// Schreier refinement of two series.
    Refine { first: String, second: String },
    /// All composition series.
    Compose,
    /// Check that all composition series are isomorphic.
    JordanHolder,
}

fn load(path: &PathBuf) -> Result<SemigroupFile, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
    SemigroupFile::parse(&text)
}

fn run(args: Args) -> Result<Option<Report>, CliError> {
    let report = match args.command {
        Command::Check { file } => cli::cmd_check(&load(&file)?)?,
        Command::Subset { file, name } => cli::cmd_subset(&load(&file)?, &name)?,
        Command::Series { file, action } => {
            let f = load(&file)?;
            match action {
                SeriesAction::Validate { subsets } => cli::cmd_series_validate(&f, &split_names(&subsets))?,
                SeriesAction::Refine { first, second } => {
                    cli::cmd_series_refine(&f, &split_names(&first), &split_names(&second))?
                }
                SeriesAction::Compose => cli::cmd_series_compose(&f)?,
                SeriesAction::JordanHolder => cli::cmd_series_jordan_holder(&f)?,
            }
        }
        Command::Enumerate { file } => cli::cmd_enumerate(&load(&file)?)?,
        Command::Generate { kind, params, output, with_ru, json } => {
            let f = cli::cmd_generate(&kind, &params, with_ru)?;
            let text = if json { f.to_json() } else { f.to_text() };
            std::fs::write(&output, text).map_err(|e| CliError::Io(format!("{}: {e}", output.display())))?;
            return Ok(None);
        }
        Command::Certify { max_order } => {
            let opts = CertifyOptions { corpus: CorpusSpec::default().with_max_order(max_order), ..Default::default() };
            cli::cmd_certify(&opts)?
        }
    };
    Ok(Some(report))
}

fn main() -> ExitCode {
    let args = match Args::try_parse() {
        Ok(args) => args,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    if let Ok(v) = std::env::var(ORDER_BOUND_ENV) {
        match v.parse() {
            Ok(n) => leftsimple::set_order_bound(n),
            Err(_) => {
                eprintln!("error: {ORDER_BOUND_ENV} must be a number, got {v:?}");
                return ExitCode::from(1);
            }
        }
    }
    let golden = args.golden;
    match run(args) {
        Ok(None) => ExitCode::SUCCESS,
        Ok(Some(report)) => {
            print!("{}", report.render(golden));
            if report.passed() {
                ExitCode::SUCCESS
            } else {
                eprintln!(
                    "error: {}",
                    CliError::ChecksFailed { failed: report.checks.iter().filter(|c| !c.passed).count() }
                );
                ExitCode::from(3)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
