//! Command-line front end for `descent-core`.
//!
//! Every subcommand prints one canonical JSON document carrying `type`,
//! `command` and `schema_version`. Exit codes: 0 for success or a positive
//! answer, 1 for a valid query with a negative answer, 2 for usage or input
//! errors (with a one-line diagnostic on stderr).

pub mod json;

use std::collections::BTreeSet;
use std::ffi::OsString;
use std::thread;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use descent_core::descent::{self, descends_in, descent_lattice, verify_type, Method};
use descent_core::intlat::IntLattice;
use descent_core::repcheck::WeightSystem;
use descent_core::subsys::{enumerate_all, maximal_subsystems, RootSubsystem};
use descent_core::{Basis, RootSystem, TypeLabel, WeightVec};
use serde_json::{json, Value};

/// Outcome of one invocation; `main` writes the streams and exits.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommandResult {
    pub exit_code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl CommandResult {
    fn usage(msg: impl std::fmt::Display) -> Self {
        CommandResult {
            exit_code: 2,
            stdout: String::new(),
            stderr: format!("{msg}\n"),
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "descent",
    version,
    about = "Descent lattices of simple Lie types"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone)]
struct Vector(Vec<i64>);

#[derive(Debug, Clone)]
struct Rows(Vec<Vec<i64>>);

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Ambient {
    Weight,
    Root,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Descent lattice L(g) in alpha-coordinates.
    Lattice {
        #[arg(long = "type", value_name = "TYPE", value_parser = parse_type)]
        ty: TypeLabel,
        #[arg(long, value_parser = parse_method, default_value = "recursive")]
        method: Method,
    },
    /// Whether L_P(lambda) is ample and descends to the torus quotient.
    Descends {
        #[arg(long = "type", value_name = "TYPE", value_parser = parse_type)]
        ty: TypeLabel,
        /// Comma-separated omega-coordinates (alpha-coordinates with --alpha).
        #[arg(long, value_parser = parse_vector, allow_hyphen_values = true)]
        lambda: Vector,
        /// Comma-separated 1-based indices of the parabolic's simple roots.
        #[arg(long, value_parser = parse_vector, default_value = "")]
        parabolic: Vector,
        #[arg(long)]
        alpha: bool,
    },
    /// Compare the recursive, direct and closed-form lattices.
    Verify {
        #[arg(long = "type", value_name = "TYPE", value_parser = parse_type, required_unless_present = "all", conflicts_with = "all")]
        ty: Option<TypeLabel>,
        #[arg(long)]
        all: bool,
    },
    /// Full-rank subsystems, or only the maximal ones.
    Subsystems {
        #[arg(long = "type", value_name = "TYPE", value_parser = parse_type)]
        ty: TypeLabel,
        #[arg(long)]
        maximal: bool,
    },
    /// Quotient of the weight (or root) lattice by the span of `--sub`.
    Torsion {
        #[arg(long = "type", value_name = "TYPE", value_parser = parse_type)]
        ty: TypeLabel,
        /// Semicolon-separated alpha-coordinate vectors.
        #[arg(long, value_parser = parse_rows, allow_hyphen_values = true)]
        sub: Rows,
        #[arg(long, value_enum, default_value = "weight")]
        ambient: Ambient,
    },
    /// Multiplicity of the weight mu in V(lambda), both in omega-coordinates.
    Multiplicity {
        #[arg(long = "type", value_name = "TYPE", value_parser = parse_type)]
        ty: TypeLabel,
        #[arg(long, value_parser = parse_vector, allow_hyphen_values = true)]
        lambda: Vector,
        #[arg(long, value_parser = parse_vector, allow_hyphen_values = true)]
        mu: Vector,
    },
    /// Cartan matrix, symmetrizer and positive roots.
    System {
        #[arg(long = "type", value_name = "TYPE", value_parser = parse_type)]
        ty: TypeLabel,
    },
}

fn parse_type(s: &str) -> Result<TypeLabel, String> {
    s.parse().map_err(|e: descent_core::Error| e.to_string())
}

fn parse_method(s: &str) -> Result<Method, String> {
    s.parse()
        .map_err(|()| format!("unknown method {s:?} (expected recursive, direct or closed)"))
}

fn parse_vector(s: &str) -> Result<Vector, String> {
    if s.trim().is_empty() {
        return Ok(Vector(Vec::new()));
    }
    s.split(',')
        .map(|x| {
            x.trim()
                .parse::<i64>()
                .map_err(|_| format!("malformed integer {:?}", x.trim()))
        })
        .collect::<Result<_, _>>()
        .map(Vector)
}

fn parse_rows(s: &str) -> Result<Rows, String> {
    s.split(';')
        .filter(|r| !r.trim().is_empty())
        .map(|r| parse_vector(r).map(|v| v.0))
        .collect::<Result<_, _>>()
        .map(Rows)
}

/// Parses `args` (without the program name) and runs the subcommand.
pub fn run<I, S>(args: I) -> CommandResult
where
    I: IntoIterator<Item = S>,
    S: Into<OsString> + Clone,
{
    let argv = std::iter::once(OsString::from("descent")).chain(args.into_iter().map(Into::into));
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => CommandResult {
                    exit_code: 0,
                    stdout: e.render().to_string(),
                    stderr: String::new(),
                },
                ErrorKind::DisplayHelpOnMissingArgumentOrSubcommand => {
                    CommandResult::usage("error: a subcommand is required (see --help)")
                }
                _ => {
                    let text = e.render().to_string();
                    CommandResult::usage(text.lines().next().unwrap_or("error: invalid usage"))
                }
            };
        }
    };
    match dispatch(cli.command) {
        Ok((code, payload)) => CommandResult {
            exit_code: code,
            stdout: format!(
                "{}\n",
                serde_json::to_string(&payload).expect("serializable")
            ),
            stderr: String::new(),
        },
        Err(msg) => CommandResult::usage(format!("error: {msg}")),
    }
}

fn payload(command: &str, ty: &str, mut body: Value) -> Value {
    let obj = body.as_object_mut().expect("object payload");
    obj.insert("type".into(), json!(ty));
    obj.insert("command".into(), json!(command));
    obj.insert("schema_version".into(), json!(json::SCHEMA_VERSION));
    body
}

fn check_len(v: &[i64], n: usize, what: &str) -> Result<(), String> {
    if v.len() != n {
        return Err(format!("{what} has {} entries, expected {n}", v.len()));
    }
    Ok(())
}

type Dispatch = Result<(i32, Value), String>;

fn dispatch(command: Command) -> Dispatch {
    let err = |e: descent_core::Error| e.to_string();
    match command {
        Command::Lattice { ty, method } => {
            let l = descent_lattice(ty, method).map_err(err)?;
            Ok((
                0,
                payload("lattice", &ty.to_string(), json::descent_lattice(&l)),
            ))
        }
        Command::Descends {
            ty,
            lambda,
            parabolic,
            alpha,
        } => {
            let system = RootSystem::new(ty).map_err(err)?;
            let n = system.rank();
            check_len(&lambda.0, n, "lambda")?;
            let omega = if alpha {
                system.alpha_to_omega(&lambda.0).map_err(err)?
            } else {
                lambda.0
            };
            let parabolic: BTreeSet<usize> = parabolic
                .0
                .iter()
                .map(|&i| {
                    usize::try_from(i).map_err(|_| format!("parabolic index {i} out of range"))
                })
                .collect::<Result<_, _>>()?;
            let l = descent_lattice(ty, Method::Recursive).map_err(err)?;
            let report = descends_in(&l, &WeightVec::omega(omega), &parabolic).map_err(err)?;
            let mut body = json::descent_report(&report);
            body["descent_lattice"] = json::descent_lattice(&l);
            let code = if report.descends { 0 } else { 1 };
            Ok((code, payload("descends", &ty.to_string(), body)))
        }
        Command::Verify { ty: Some(ty), .. } => {
            let report = verify_type(ty).map_err(err)?;
            let code = if report.agree { 0 } else { 1 };
            Ok((
                code,
                payload("verify", &ty.to_string(), json::verify_report(&report)),
            ))
        }
        Command::Verify { ty: None, .. } => {
            let types = descent::supported_types();
            let reports: Vec<_> = thread::scope(|scope| {
                let handles: Vec<_> = types
                    .iter()
                    .map(|&label| scope.spawn(move || verify_type(label)))
                    .collect();
                handles
                    .into_iter()
                    .map(|h| h.join().expect("verification thread panicked"))
                    .collect()
            });
            let reports = reports
                .into_iter()
                .collect::<Result<Vec<_>, _>>()
                .map_err(err)?;
            let agree = reports.iter().all(|r| r.agree);
            let body = json!({
                "agree": agree,
                "types_checked": reports.len(),
                "results": reports.iter().map(json::verify_report).collect::<Vec<_>>(),
            });
            Ok((if agree { 0 } else { 1 }, payload("verify", "all", body)))
        }
        Command::Subsystems { ty, maximal } => {
            let system = RootSystem::new(ty).map_err(err)?;
            let subs = if maximal {
                maximal_subsystems(&system, &RootSubsystem::full(&system)).map_err(err)?
            } else {
                enumerate_all(&system).map_err(err)?
            };
            let body = json!({
                "maximal": maximal,
                "count": subs.len(),
                "subsystems": subs.iter().map(json::subsystem).collect::<Vec<_>>(),
            });
            Ok((0, payload("subsystems", &ty.to_string(), body)))
        }
        Command::Torsion { ty, sub, ambient } => {
            let system = RootSystem::new(ty).map_err(err)?;
            let n = system.rank();
            for r in &sub.0 {
                check_len(r, n, "sublattice vector")?;
            }
            let alpha_sub = IntLattice::from_rows(n, Basis::Alpha, &sub.0).map_err(err)?;
            let (outer, inner) = match ambient {
                Ambient::Root => (IntLattice::standard(n, Basis::Alpha), alpha_sub.clone()),
                Ambient::Weight => {
                    let omega: Vec<Vec<i64>> = sub
                        .0
                        .iter()
                        .map(|r| system.alpha_to_omega(r))
                        .collect::<Result<_, _>>()
                        .map_err(err)?;
                    (
                        IntLattice::standard(n, Basis::Omega),
                        IntLattice::from_rows(n, Basis::Omega, &omega).map_err(err)?,
                    )
                }
            };
            let profile = outer.torsion_quotient(&inner).map_err(err)?;
            let index = outer.index_of(&inner).map_err(err)?;
            let body = json!({
                "ambient": match ambient { Ambient::Weight => "weight", Ambient::Root => "root" },
                "sublattice": json::lattice(&alpha_sub),
                "free_rank": n - inner.rank(),
                "index": json::index(&index),
                "torsion": json::torsion(&profile),
            });
            Ok((0, payload("torsion", &ty.to_string(), body)))
        }
        Command::Multiplicity { ty, lambda, mu } => {
            let n = ty.rank();
            check_len(&lambda.0, n, "lambda")?;
            check_len(&mu.0, n, "mu")?;
            let ws = WeightSystem::new(ty, &lambda.0).map_err(err)?;
            let m = ws.multiplicity(&mu.0).map_err(err)?;
            let body = json!({
                "lambda": lambda.0,
                "mu": mu.0,
                "dimension": ws.dimension,
                "multiplicity": m,
            });
            Ok((0, payload("multiplicity", &ty.to_string(), body)))
        }
        Command::System { ty } => {
            let system = RootSystem::new(ty).map_err(err)?;
            Ok((
                0,
                payload("system", &ty.to_string(), json::root_system(&system)),
            ))
        }
    }
}
