//! The `duality` command line, with its streams injected so it can run
//! in-process.

use std::ffi::OsString;
use std::io::{Read, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};

use duality_core::closure::ContinuityMode;
use duality_core::duplication::build_y_space;
use duality_core::mayet::build_dual;
use duality_core::order::check_ortho_axioms;

use crate::emit::{caps_from, emit_documents, emit_dual, emit_duplicate, emit_report, Format};
use crate::generate::{exhaustive, RandomPosets};
use crate::{emit_document, parse_poset, run_verify, CliError, Claim, PosetDocument, VerifyOptions};

/// Exit code for input, precondition and usage errors.
pub const EXIT_ERROR: i32 = 2;

#[derive(Parser)]
#[command(name = "duality", version, about = "Finite posets as clopen families of closure spaces")]
struct Cli {
    /// Output format
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,
    /// Bound on valuation and closed-family enumeration
    #[arg(long, global = true)]
    cap: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Parse and validate a document; print it normalized to cover pairs
    Validate { file: PathBuf },
    /// Dual closure space of an orthocomplemented poset
    Dual { file: PathBuf },
    /// Duplicated orthoposet E and the bi-closure space Y
    Duplicate { file: PathBuf },
    /// Check one claim on a document
    Verify {
        file: PathBuf,
        #[arg(long, value_enum)]
        claim: Claim,
        /// Require clopen preimages instead of closed ones
        #[arg(long)]
        strict_continuity: bool,
    },
    /// Generate posets
    Gen(GenArgs),
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct GenMode {
    /// Every labeled poset on n elements (n <= 6)
    #[arg(long, value_name = "N")]
    exhaustive: Option<usize>,
    /// Random posets on n elements (n <= 12)
    #[arg(long, value_name = "N")]
    random: Option<usize>,
}

#[derive(Args)]
struct GenArgs {
    #[command(flatten)]
    mode: GenMode,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 1)]
    count: usize,
}

/// Runs the command line on `args` (program name first) and returns the
/// exit code: 0 success or pass, 1 counterexample, 2 error.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                stderr.write_all(text.as_bytes())
            } else {
                stdout.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match execute(cli, stdin, stdout, stderr) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            EXIT_ERROR
        }
    }
}

fn read_document(path: &Path, stdin: &mut dyn Read) -> Result<PosetDocument, CliError> {
    let text = if path.as_os_str() == "-" {
        let mut s = String::new();
        stdin.read_to_string(&mut s)?;
        s
    } else {
        std::fs::read_to_string(path)?
    };
    parse_poset(&text)
}

fn execute(
    cli: Cli,
    stdin: &mut dyn Read,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> Result<i32, CliError> {
    let caps = caps_from(cli.cap);
    let format = cli.format;
    match cli.command {
        Command::Validate { file } => {
            let doc = read_document(&file, stdin)?;
            let poset = doc.poset()?;
            let mut normalized = PosetDocument::from_poset(&poset);
            normalized.bottom = doc.bottom.clone();
            normalized.top = doc.top.clone();
            normalized.complement = doc.complement.clone();
            if doc.complement.is_some() {
                let b = doc.bounded()?;
                let c = doc.complement_indices(b.poset())?;
                let report = check_ortho_axioms(&b, &c)?;
                for check in report.checks() {
                    let status = if check.passed { "ok" } else { "FAILS" };
                    writeln!(stderr, "axiom {}: {status}", check.name)?;
                    if let Some(w) = &check.witness {
                        writeln!(stderr, "  {}", w.message)?;
                    }
                }
            }
            write!(stdout, "{}", emit_document(&normalized, format)?)?;
            Ok(0)
        }
        Command::Dual { file } => {
            let e = read_document(&file, stdin)?.ortho()?;
            let d = build_dual(&e, caps)?;
            write!(stdout, "{}", emit_dual(&d, caps.family, format)?)?;
            Ok(0)
        }
        Command::Duplicate { file } => {
            let p = read_document(&file, stdin)?.poset()?;
            let y = build_y_space(&p, caps)?;
            write!(stdout, "{}", emit_duplicate(&p, &y, caps.family, format)?)?;
            Ok(0)
        }
        Command::Verify {
            file,
            claim,
            strict_continuity,
        } => {
            let doc = read_document(&file, stdin)?;
            let mode = if strict_continuity {
                ContinuityMode::Strict
            } else {
                ContinuityMode::Weak
            };
            let report = run_verify(&doc, claim, VerifyOptions { caps, mode });
            if let Some(w) = &report.witness {
                writeln!(stderr, "{:?}: {}", report.status, w.message)?;
            }
            write!(stdout, "{}", emit_report(&report, format)?)?;
            Ok(report.exit_code())
        }
        Command::Gen(args) => {
            let posets = match (args.mode.exhaustive, args.mode.random) {
                (Some(n), _) => exhaustive(n)?,
                (None, Some(n)) => RandomPosets::new(n, args.seed)?.take(args.count).collect(),
                (None, None) => unreachable!("clap enforces one mode"),
            };
            writeln!(stderr, "{} posets", posets.len())?;
            let docs: Vec<PosetDocument> = posets.iter().map(PosetDocument::from_poset).collect();
            write!(stdout, "{}", emit_documents(&docs, format)?)?;
            Ok(0)
        }
    }
}
