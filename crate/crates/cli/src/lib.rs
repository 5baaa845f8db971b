//! Command-line front end: `check`, `construct`, `search`, `verify-theorem`
//! and `catalogue` over JSON documents.
//!
//! Exit codes: 0 pass, 1 a law or theorem failed, 2 usage or parse error,
//! 3 a precondition or parameter requirement was violated.

mod check;
mod construct;
mod run;

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use bihom_core::exactlin::{LinearMap, Tensor2};
use bihom_core::io::{self, Document};
use bihom_core::Error;
use clap::{Args, Parser, Subcommand, ValueEnum};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_PRECONDITION: i32 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "bihom",
    version,
    about = "Exact checks and constructions for Hom and BiHom structures"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

/// Maps, tensors and exponents shared by several subcommands.
#[derive(Args, Debug, Default)]
struct Params {
    /// First twisting map σ (the structure map α of a Yau twist).
    #[arg(long, value_name = "FILE")]
    sigma: Option<PathBuf>,
    /// Second twisting map τ (the map β of a Yau twist).
    #[arg(long, value_name = "FILE")]
    tau: Option<PathBuf>,
    /// Extra endomorphism η of `simprop`, composed into both products
    #[arg(long, value_name = "FILE")]
    eta: Option<PathBuf>,
    /// The Rota-Baxter operator or derivation.
    #[arg(long, value_name = "FILE")]
    map: Option<PathBuf>,
    /// A tensor `r`; overrides one held by an input document.
    #[arg(long, value_name = "FILE")]
    r: Option<PathBuf>,
    /// Exponent n or k of α^n-operators and α^k-derivations.
    #[arg(long, default_value_t = 0)]
    power: u32,
    /// Use −r in place of r (the opposite sign convention for Δ_r).
    #[arg(long)]
    negate_r: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check one law on a document; prints the verdict as JSON.
    Check {
        law: check::LawName,
        file: PathBuf,
        /// Variant of the rota-baxter or derivation identity.
        #[arg(long, value_enum)]
        kind: Option<check::OperatorKind>,
        #[command(flatten)]
        params: Params,
    },
    /// Build a structure from verified inputs.
    Construct {
        recipe: construct::Recipe,
        #[arg(required = true)]
        files: Vec<PathBuf>,
        /// Output file; standard output when absent.
        #[arg(short, long, value_name = "FILE")]
        output: Option<PathBuf>,
        /// Which output of `moregendend` to write.
        #[arg(long, value_enum, default_value_t = construct::Part::Dendriform)]
        part: construct::Part,
        #[command(flatten)]
        params: Params,
    },
    /// Run a search; certified results are streamed as JSON lines.
    Search {
        spec: PathBuf,
        /// Overrides the candidate budget of the specification.
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Run a theorem pipeline; prints one report per instance.
    VerifyTheorem {
        /// Theorem id T1 to T12.
        theorem: String,
        files: Vec<PathBuf>,
        /// Also run every built-in instance of the theorem.
        #[arg(long)]
        all_catalogue: bool,
        #[command(flatten)]
        params: Params,
    },
    /// Inspect or export the built-in catalogue.
    Catalogue {
        #[command(subcommand)]
        action: CatalogueAction,
    },
}

#[derive(Subcommand, Debug)]
enum CatalogueAction {
    /// One line per entry: id, kind, status and provenance.
    List,
    /// Write every entry as `<id>.json` into a directory.
    Export { dir: PathBuf },
}

/// Why a command did not complete.
#[derive(Debug)]
enum Failure {
    Usage(String),
    File(PathBuf, String),
    Core(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

impl Failure {
    fn exit_code(&self) -> i32 {
        match self {
            Failure::Usage(_) | Failure::File(..) => EXIT_USAGE,
            Failure::Core(e) => core_exit_code(e),
        }
    }

    fn message(&self) -> String {
        match self {
            Failure::Usage(m) => m.clone(),
            Failure::File(path, m) => format!("{}: {m}", path.display()),
            Failure::Core(Error::Precondition {
                hypothesis,
                verdict,
            }) => match &verdict.witness {
                Some(w) => format!(
                    "precondition `{hypothesis}` failed: law `{}` at {:?}",
                    w.law, w.indices
                ),
                None => format!("precondition `{hypothesis}` failed"),
            },
            Failure::Core(e) => e.to_string(),
        }
    }
}

fn core_exit_code(e: &Error) -> i32 {
    match e {
        Error::Precondition { .. } | Error::InvalidParameter(_) | Error::NotInvertible => {
            EXIT_PRECONDITION
        }
        Error::Inconsistent(_) => EXIT_FAIL,
        _ => EXIT_USAGE,
    }
}

type CliResult<T> = Result<T, Failure>;

fn read_document(path: &Path) -> CliResult<Document> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::File(path.to_path_buf(), e.to_string()))?;
    io::parse(&text).map_err(|e| Failure::File(path.to_path_buf(), e.to_string()))
}

fn read_map(path: &Path) -> CliResult<LinearMap> {
    match read_document(path)? {
        Document::LinearMap(f) => Ok(f),
        other => Err(wrong_kind(path, "linear-map", &other)),
    }
}

fn read_tensor(path: &Path) -> CliResult<Tensor2> {
    match read_document(path)? {
        Document::Tensor2(t) => Ok(t),
        other => Err(wrong_kind(path, "tensor2", &other)),
    }
}

fn wrong_kind(path: &Path, expected: &str, found: &Document) -> Failure {
    Failure::File(
        path.to_path_buf(),
        format!("expected a `{expected}` document, found `{}`", found.kind()),
    )
}

fn opt_map(path: &Option<PathBuf>) -> CliResult<Option<LinearMap>> {
    path.as_deref().map(read_map).transpose()
}

fn required_map(path: &Option<PathBuf>, flag: &str) -> CliResult<LinearMap> {
    opt_map(path)?.ok_or_else(|| Failure::Usage(format!("--{flag} is required")))
}

fn compact(doc: &Document) -> String {
    io::to_value(doc).to_string()
}

/// Runs the CLI on `argv` (including the program name) and returns the exit
/// code. Reports go to `stdout`, diagnostics to `stderr`.
pub fn run_cli<I, T>(argv: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(stderr, "{text}");
                EXIT_USAGE
            } else {
                let _ = write!(stdout, "{text}");
                EXIT_PASS
            };
        }
    };
    let outcome = match cli.command {
        Command::Check {
            law,
            file,
            kind,
            params,
        } => check::run(law, &file, kind, &params, stdout),
        Command::Construct {
            recipe,
            files,
            output,
            part,
            params,
        } => construct::run(recipe, &files, output.as_deref(), part, &params, stdout),
        Command::Search { spec, budget } => run::search(&spec, budget, stdout, stderr),
        Command::VerifyTheorem {
            theorem,
            files,
            all_catalogue,
            params,
        } => run::verify_theorem(&theorem, &files, all_catalogue, &params, stdout, stderr),
        Command::Catalogue { action } => match action {
            CatalogueAction::List => run::catalogue_list(stdout),
            CatalogueAction::Export { dir } => run::catalogue_export(&dir, stdout),
        },
    };
    match outcome {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(stderr, "error: {}", f.message());
            f.exit_code()
        }
    }
}

/// `ValueEnum` names, for messages.
fn value_name<T: ValueEnum>(v: &T) -> String {
    v.to_possible_value()
        .map(|p| p.get_name().to_string())
        .unwrap_or_default()
}
