//! Command-line front end: the document schema, codecs between documents and
//! library values, and the `noiter` subcommands.

mod codec;
mod commands;
mod family;
mod schema;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

pub use codec::*;
pub use commands::{
    check_document, forms_for, run_check, run_compose, run_convert, run_enumerate, run_oracle_compare, Outcome,
    ReportFormat, EXIT_FAIL, EXIT_OK, EXIT_USAGE,
};
pub use family::{parse_family, Instance, FAMILY_HELP};
pub use schema::*;

use crate::oracle::{Limits, CAP_ENV_VAR, DEFAULT_MAX_CANDIDATES};

#[derive(Debug, Parser)]
#[command(name = "noiter", version, about = "Check monads, monad morphisms and distributive laws on finite categories")]
struct Cli {
    /// Refuse enumerations with more candidates than this.
    #[arg(long, global = true, env = CAP_ENV_VAR, default_value_t = DEFAULT_MAX_CANDIDATES)]
    max_candidates: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

impl From<Format> for ReportFormat {
    fn from(f: Format) -> Self {
        match f {
            Format::Text => ReportFormat::Text,
            Format::Json => ReportFormat::Json,
        }
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check the laws of a document; exit 0 if they hold, 1 if not, 2 on bad input.
    Check {
        /// category, functor, nattrans, monad, kl-morphism, em-morphism,
        /// kl-transformation, em-transformation, distlaw, alpha or algebra-ext
        kind: String,
        path: PathBuf,
        /// Which presentation of the laws to check (default: all that apply)
        #[arg(long)]
        form: Option<String>,
        #[arg(long, value_enum, default_value = "text")]
        report: Format,
    },
    /// Convert a monad or a distributive law to another presentation.
    Convert {
        path: PathBuf,
        /// extensive, monoidal, alpha, lambda or algebra
        #[arg(long)]
        to: String,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Composite monad of a law, or composite of two Kl-morphisms.
    Compose {
        #[arg(required = true, num_args = 1..=2)]
        paths: Vec<PathBuf>,
        /// Write the composite monad in extensive form
        #[arg(long)]
        extensive: bool,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Enumerate structures on every instance of a family.
    Enumerate {
        /// functors, monads, monads-extensive, closure-operators or distlaws
        what: String,
        #[arg(help = FAMILY_HELP)]
        family: String,
        /// Write one document per structure into this directory
        #[arg(long)]
        out_dir: Option<PathBuf>,
    },
    /// Brute-force cross-checks.
    Oracle {
        #[command(subcommand)]
        command: OracleCommand,
    },
}

#[derive(Debug, Subcommand)]
enum OracleCommand {
    /// Compare every presentation on every candidate over a family.
    Compare {
        #[arg(help = FAMILY_HELP)]
        family: String,
        /// all, forms, distlaws, morphisms or posets
        #[arg(long, default_value = "all")]
        only: String,
        #[arg(long, value_enum, default_value = "text")]
        report: Format,
    },
}

/// Parses arguments and runs one subcommand, returning its outcome.
pub fn execute<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome { stderr: text, code, ..Default::default() }
            } else {
                Outcome { stdout: text, code, ..Default::default() }
            };
        }
    };
    let limits = Limits::new(cli.max_candidates);
    match cli.command {
        Command::Check { kind, path, form, report } => {
            run_check(&kind, &path, form.as_deref(), report.into(), &limits)
        }
        Command::Convert { path, to, output } => run_convert(&path, &to, output.as_deref()),
        Command::Compose { paths, extensive, output } => run_compose(&paths, extensive, output.as_deref()),
        Command::Enumerate { what, family, out_dir } => run_enumerate(&what, &family, out_dir.as_deref(), &limits),
        Command::Oracle { command: OracleCommand::Compare { family, only, report } } => {
            run_oracle_compare(&family, &only, report.into(), &limits)
        }
    }
}

/// Runs the CLI against the process streams and returns the exit status.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let out = execute(args);
    let _ = std::io::stdout().write_all(out.stdout.as_bytes());
    let _ = std::io::stderr().write_all(out.stderr.as_bytes());
    out.code
}
