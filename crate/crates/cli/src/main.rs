//! `zeq` — solve `λx = Ax ⊕ b` over max-times, nonnegative, max-min and
//! Łukasiewicz semirings from JSON problem files.

mod input;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use zeq_core::linalg::SeriesParams;
use zeq_core::zsolver::ZProblem;

#[derive(Parser)]
#[command(
    name = "zeq",
    version,
    about = "Solve λx = Ax ⊕ b over idempotent and nonnegative semirings"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Default, PartialEq, Eq, ValueEnum)]
enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Solve λx = Ax ⊕ b: certificate, least solution, solution-set basis.
    ///
    /// Exits 0 when solvable, 2 when unsolvable, 1 on bad input.
    Solve {
        /// JSON problem file: {"semiring", "matrix", "b"?, "lambda"?}.
        file: PathBuf,
        /// Override the file's lambda (default 1).
        #[arg(long)]
        lambda: Option<f64>,
        /// Series increment tolerance (nonnegative instance only).
        #[arg(long, default_value_t = 1e-12)]
        tolerance: f64,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Per-class roots, the eigenvalue set, spectral classes, eigenbases.
    Spectrum {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Frobenius normal form: classes, roots, and the reduced graph.
    Fnf {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Kleene star of the matrix, plus A*b when the file provides b.
    Star {
        file: PathBuf,
        /// Series increment tolerance (nonnegative instance only).
        #[arg(long, default_value_t = 1e-12)]
        tolerance: f64,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Split a solution into least-solution and eigenvector parts.
    Decompose {
        /// JSON problem file: {"semiring", "matrix", "b"?, "lambda"?}.
        file: PathBuf,
        /// JSON array holding the solution vector to split.
        solution: PathBuf,
        /// Override the file's lambda (default 1).
        #[arg(long)]
        lambda: Option<f64>,
        /// Series increment tolerance (nonnegative instance only).
        #[arg(long, default_value_t = 1e-12)]
        tolerance: f64,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(1);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(1)
        }
    }
}

fn series_params(tolerance: f64) -> SeriesParams {
    SeriesParams {
        tolerance,
        ..SeriesParams::default()
    }
}

fn run(cli: Cli) -> Result<u8, String> {
    match cli.command {
        Command::Solve {
            file,
            lambda,
            tolerance,
            format,
        } => {
            let problem = input::load_problem(&file, lambda)?;
            let p = ZProblem::new(problem.matrix.clone(), problem.b_or_zero(), problem.lambda)
                .map_err(|e| e.to_string())?;
            let out = report::solve(&p, &series_params(tolerance));
            let solvable = out.solvable;
            emit(&out, format, report::render_solve);
            Ok(if solvable { 0 } else { 2 })
        }
        Command::Spectrum { file, format } => {
            let problem = input::load_problem(&file, None)?;
            let out = report::spectrum(&problem.matrix)?;
            emit(&out, format, report::render_spectrum);
            Ok(0)
        }
        Command::Fnf { file, format } => {
            let problem = input::load_problem(&file, None)?;
            let out = report::fnf(&problem.matrix)?;
            emit(&out, format, report::render_fnf);
            Ok(0)
        }
        Command::Star {
            file,
            tolerance,
            format,
        } => {
            let problem = input::load_problem(&file, None)?;
            let out = report::star(
                &problem.matrix,
                problem.b.as_ref(),
                &series_params(tolerance),
            )?;
            emit(&out, format, report::render_star);
            Ok(0)
        }
        Command::Decompose {
            file,
            solution,
            lambda,
            tolerance,
            format,
        } => {
            let problem = input::load_problem(&file, lambda)?;
            let x = input::load_vector(&solution, problem.context(), problem.matrix.n())?;
            let p = ZProblem::new(problem.matrix.clone(), problem.b_or_zero(), problem.lambda)
                .map_err(|e| e.to_string())?;
            let out = report::decompose(&p, &x, &series_params(tolerance))?;
            emit(&out, format, report::render_decompose);
            Ok(0)
        }
    }
}

fn emit<T: Serialize>(out: &T, format: Format, render: impl Fn(&T) -> String) {
    use std::io::Write;

    let text = match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(out).expect("reports serialize");
            s.push('\n');
            s
        }
        Format::Text => render(out),
    };
    let mut stdout = std::io::stdout().lock();
    if let Err(e) = stdout.write_all(text.as_bytes()) {
        // A closed pipe (e.g. piping into `head`) is not an error.
        if e.kind() == std::io::ErrorKind::BrokenPipe {
            std::process::exit(0);
        }
        eprintln!("error: cannot write report: {e}");
        std::process::exit(1);
    }
}
