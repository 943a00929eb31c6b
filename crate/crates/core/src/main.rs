//! Command-line front end: certify signatures, run batches, re-verify
//! certificates, reproduce the case tables and check ingested groups.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use fenchel::catalog::{certify, Outcome};
use fenchel::cert::Certificate;
use fenchel::maps::{
    corollary_check, hemi_construction, ingest_group, odd_identity_check, perfect_route_check,
    GroupSystem,
};
use fenchel::report::{convention_report, exit, exit_code, run_batch, summarize, tables_report};
use fenchel::search::SearchContext;
use fenchel::signature::NecSignature;

#[derive(Parser)]
#[command(
    name = "fenchel",
    version,
    about = "Certified torsion-free normal subgroups of NEC groups"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[arg(long, global = true, default_value_t = 16)]
    max_degree: usize,
    #[arg(long, global = true, default_value_t = 1_000_000)]
    max_attempts: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Also report the bordered-surface criterion under both adjacency readings.
    #[arg(long, global = true)]
    both_conventions: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Prop51,
    Cor52,
    Hemi,
    Perfect,
}

#[derive(Subcommand)]
enum Command {
    /// Certify one signature, e.g. "(1;+;[4];{(2)})".
    Certify { signature: String },
    /// Certify every signature in a file, one per line; "#" starts a comment.
    Batch { file: PathBuf },
    /// Re-verify a certificate file.
    Verify { file: PathBuf },
    /// Instantiate the solved-case table and report the unresolved one.
    Tables,
    /// Run a checker on a group file.
    CheckGroup {
        file: PathBuf,
        #[arg(long, value_enum)]
        mode: Mode,
    },
}

fn emit<T: Serialize>(format: Format, value: &T, text: impl FnOnce() -> String) {
    match format {
        Format::Json => println!(
            "{}",
            serde_json::to_string_pretty(value).expect("serializable")
        ),
        Format::Text => println!("{}", text()),
    }
}

fn usage(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(exit::USAGE as u8)
}

fn code(c: i32) -> ExitCode {
    ExitCode::from(c as u8)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) if !e.use_stderr() => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let _ = e.print();
            return code(exit::USAGE);
        }
    };
    let ctx = SearchContext {
        seed: cli.seed,
        max_degree: cli.max_degree,
        max_attempts: cli.max_attempts,
    };
    match &cli.command {
        Command::Certify { signature } => cmd_certify(&cli, &ctx, signature),
        Command::Batch { file } => cmd_batch(&cli, &ctx, file),
        Command::Verify { file } => cmd_verify(&cli, file),
        Command::Tables => cmd_tables(&cli, &ctx),
        Command::CheckGroup { file, mode } => cmd_check_group(&cli, file, *mode),
    }
}

#[derive(Serialize)]
struct CertifyOutput<'a> {
    status: &'a str,
    #[serde(skip_serializing_if = "Option::is_none")]
    certificate: Option<&'a Certificate>,
    #[serde(skip_serializing_if = "Option::is_none")]
    detail: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    conventions: Option<fenchel::report::ConventionReport>,
}

fn cmd_certify(cli: &Cli, ctx: &SearchContext, text: &str) -> ExitCode {
    let sig: NecSignature = match text.parse() {
        Ok(s) => s,
        Err(e) => return usage(format!("cannot parse signature {text:?}: {e}")),
    };
    let outcome = certify(&sig, ctx);
    let row = summarize(0, text, &outcome, 0.0);
    let conventions = cli.both_conventions.then(|| convention_report(&sig));
    let out = CertifyOutput {
        status: outcome.status(),
        certificate: match &outcome {
            Outcome::Certified(c) => Some(c),
            _ => None,
        },
        detail: row.detail.clone(),
        conventions,
    };
    emit(cli.format, &out, || {
        let mut s = format!("{} {}", sig, outcome.status());
        if let (Some(r), Some(i)) = (&row.recipe, row.index) {
            s += &format!(" recipe {r} index {i}");
            if let Some(g) = row.genus {
                s += &format!(" kernel genus {g}");
            }
        }
        if let Some(d) = &row.detail {
            s += &format!(" ({d})");
        }
        if let Some(c) = &out.conventions {
            s += &format!("\ncriterion cyclic={:?} linear={:?}", c.cyclic, c.linear);
        }
        s
    });
    code(exit_code(&outcome))
}

fn cmd_batch(cli: &Cli, ctx: &SearchContext, file: &PathBuf) -> ExitCode {
    let input = match std::fs::read_to_string(file) {
        Ok(t) => t,
        Err(e) => return usage(format!("{}: {e}", file.display())),
    };
    let rows = run_batch(&input, ctx);
    emit(cli.format, &rows, || {
        rows.iter()
            .map(|r| {
                format!(
                    "{}\t{}\t{}\t{}\t{}\t{:.1}ms",
                    r.signature,
                    r.status,
                    r.recipe.as_deref().unwrap_or("-"),
                    r.index.map_or("-".into(), |i| i.to_string()),
                    r.genus.map_or("-".into(), |g| g.to_string()),
                    r.wall_ms
                )
            })
            .collect::<Vec<_>>()
            .join("\n")
    });
    ExitCode::SUCCESS
}

fn cmd_verify(cli: &Cli, file: &PathBuf) -> ExitCode {
    let verdict = std::fs::read_to_string(file)
        .map_err(|e| e.to_string())
        .and_then(|t| Certificate::from_json(&t).map_err(|e| e.to_string()))
        .and_then(|c| c.verify().map_err(|e| e.to_string()));
    match verdict {
        Ok(v) => {
            emit(cli.format, &v, || {
                if v.pass {
                    "verified".into()
                } else {
                    format!("rejected: {}", v.failures.join("; "))
                }
            });
            code(if v.pass {
                exit::CERTIFIED
            } else {
                exit::VERIFY_FAILED
            })
        }
        Err(e) => {
            eprintln!("error: {e}");
            code(exit::VERIFY_FAILED)
        }
    }
}

fn cmd_tables(cli: &Cli, ctx: &SearchContext) -> ExitCode {
    let rows = tables_report(ctx);
    emit(cli.format, &rows, || {
        rows.iter()
            .map(|r| {
                format!(
                    "table {} row {:>2}  {:<24} {:<34} {:<24} {}{}",
                    r.table,
                    r.row.row,
                    r.row.cycle,
                    r.row.periods,
                    r.row.example,
                    r.status,
                    r.index.map_or(String::new(), |i| format!(" index {i}"))
                )
            })
            .collect::<Vec<_>>()
            .join("\n")
    });
    let ok = rows.iter().all(|r| r.verified);
    code(if ok {
        exit::CERTIFIED
    } else {
        exit::VERIFY_FAILED
    })
}

fn cmd_check_group(cli: &Cli, file: &PathBuf, mode: Mode) -> ExitCode {
    let sys = match ingest_group(file) {
        Ok(s) => s,
        Err(e) => return usage(format!("{}: {e}", file.display())),
    };
    let involutions = |sys: GroupSystem| match sys {
        GroupSystem::Involutions(s) => Ok(s),
        GroupSystem::Rotations(_) => Err(usage(
            "this mode needs an involution system (roles C0, C1, ...)",
        )),
    };
    match mode {
        Mode::Prop51 => {
            let sys = match involutions(sys) {
                Ok(s) => s,
                Err(c) => return c,
            };
            let r = odd_identity_check(&sys);
            let string = sys.is_string();
            emit(
                cli.format,
                &serde_json::json!({"report": r, "string": string}),
                || {
                    format!(
                    "odd identity word: {} (|G| = {}, even subgroup order {}){}; string: {string}",
                    r.holds,
                    r.group_order,
                    r.even_order,
                    r.witness.as_ref().map_or(String::new(), |w| format!(", witness {w}"))
                )
                },
            );
            code(if r.holds { exit::CERTIFIED } else { exit::OPEN })
        }
        Mode::Cor52 => {
            let rot = match sys {
                GroupSystem::Rotations(r) => r,
                GroupSystem::Involutions(s) => s.rotations(),
            };
            let r = corollary_check(&rot);
            emit(cli.format, &r, || {
                format!("holds: {:?}; {}", r.holds, r.message)
            });
            code(match r.holds {
                Some(true) => exit::CERTIFIED,
                Some(false) => exit::OPEN,
                None => exit::SEARCH_FAILED,
            })
        }
        Mode::Hemi => {
            let sys = match involutions(sys) {
                Ok(s) => s,
                Err(c) => return c,
            };
            match hemi_construction(&sys) {
                Ok(r) => {
                    emit(cli.format, &r, || {
                        format!(
                            "|N| = {}, |G/N| = {}, normal: {}, signature {}: {}",
                            r.n_order,
                            r.quotient_order,
                            r.normal,
                            r.signature.as_deref().unwrap_or("-"),
                            r.message
                        )
                    });
                    code(if r.certified {
                        exit::CERTIFIED
                    } else {
                        exit::VERIFY_FAILED
                    })
                }
                Err(e) => usage(e),
            }
        }
        Mode::Perfect => {
            let sys = match involutions(sys) {
                Ok(s) => s,
                Err(c) => return c,
            };
            match perfect_route_check(&sys) {
                Ok(r) => {
                    emit(cli.format, &r, || {
                        format!(
                            "{} certified: {} witness {}",
                            r.signature, r.certified, r.witness
                        )
                    });
                    code(if r.certified {
                        exit::CERTIFIED
                    } else {
                        exit::VERIFY_FAILED
                    })
                }
                Err(e) => {
                    eprintln!("error: {e}");
                    code(exit::SEARCH_FAILED)
                }
            }
        }
    }
}
