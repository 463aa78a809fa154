use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{CommandFactory, Parser, Subcommand};
use stargeo::mechanics::{Method, OrbitParams};
use stargeo_cli::expr;
use stargeo_cli::kepler;
use stargeo_cli::session::{parse_relations, AlgebraKind, EvalError, Session};
use stargeo_cli::verify::{self, Suite};

#[derive(Parser)]
#[command(name = "stargeo", version, about = "Exact star products, Clifford algebras and Kepler regularization")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate an expression in a Clifford or Moyal session.
    Eval {
        #[arg(allow_hyphen_values = true)]
        expr: String,
        /// sigma3, theta3, sta, phase:d or moyal:d
        #[arg(long, default_value = "sigma3")]
        algebra: AlgebraKind,
        /// Comma-separated `circular:c:s`, `hyperbolic:c:s`, `on_shell:p:m`.
        #[arg(long, env = "GA_RELATIONS")]
        relations: Option<String>,
    },
    /// Print the canonical form of an expression.
    Fmt {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Run a verification suite.
    Verify {
        suite: Suite,
        #[arg(long)]
        json: bool,
    },
    /// Integrate a Kepler orbit and write a CSV trajectory.
    Kepler {
        #[arg(long, default_value_t = 0.6)]
        e: f64,
        #[arg(long, default_value_t = 1.0)]
        a: f64,
        #[arg(long, default_value_t = 10)]
        orbits: u32,
        #[arg(long, default_value_t = 10_000)]
        steps: u32,
        #[arg(long, default_value = "ks")]
        method: Method,
        /// CSV destination; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Write every n-th step.
        #[arg(long, default_value_t = 100)]
        every: usize,
    },
}

fn usage_error(kind: ErrorKind, msg: impl std::fmt::Display) -> ! {
    Cli::command().error(kind, msg).exit()
}

fn main() -> ExitCode {
    match Cli::parse().command {
        Command::Eval {
            expr,
            algebra,
            relations,
        } => {
            let rels = match relations.as_deref().map(parse_relations).transpose() {
                Ok(r) => r.unwrap_or_default(),
                Err(e) => usage_error(ErrorKind::ValueValidation, e),
            };
            let session = Session::new(algebra, rels);
            match session.eval_str(&expr) {
                Ok(v) => {
                    println!("{v}");
                    ExitCode::SUCCESS
                }
                Err(e @ EvalError::Syntax(_)) => {
                    eprintln!("error: {e}");
                    ExitCode::from(2)
                }
                Err(e) => {
                    eprintln!("error: {e}");
                    ExitCode::from(1)
                }
            }
        }
        Command::Fmt { expr } => match expr::parse(&expr) {
            Ok(e) => {
                println!("{e}");
                ExitCode::SUCCESS
            }
            Err(e) => {
                eprintln!("error: {e}");
                ExitCode::from(2)
            }
        },
        Command::Verify { suite, json } => {
            let report = verify::run(suite);
            if json {
                println!("{}", report.to_json());
            } else {
                print!("{}", report.render_text());
            }
            ExitCode::from(report.exit_code() as u8)
        }
        Command::Kepler {
            e,
            a,
            orbits,
            steps,
            method,
            out,
            every,
        } => {
            let params = match OrbitParams::new(e, a, orbits, steps) {
                Ok(p) => p,
                Err(err) => usage_error(ErrorKind::ValueValidation, err),
            };
            if every == 0 {
                usage_error(ErrorKind::ValueValidation, "--every must be at least 1");
            }
            let result = match &out {
                Some(path) => File::create(path).map_err(kepler::KeplerError::from).and_then(|f| {
                    let mut w = BufWriter::new(f);
                    let s = kepler::run(&params, method, every, &mut w)?;
                    w.flush()?;
                    Ok(s)
                }),
                None => {
                    let mut w = BufWriter::new(io::stdout().lock());
                    kepler::run(&params, method, every, &mut w).and_then(|s| {
                        w.flush()?;
                        Ok(s)
                    })
                }
            };
            match result {
                Ok(summaries) => {
                    eprintln!("{}", kepler::summary_line(&params, &summaries));
                    ExitCode::SUCCESS
                }
                Err(err) => {
                    eprintln!("error: {err}");
                    ExitCode::from(1)
                }
            }
        }
    }
}
