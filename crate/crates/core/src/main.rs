//! Command-line front end: check, extract, convert, generate, oracle and
//! verify-matroid subcommands over the JSON file formats.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use sparsegeom::engine::{run_extraction_with, run_recognition_with, EngineOptions};
use sparsegeom::error::Error;
use sparsegeom::generate::{construct_tight_geometry, random_geometry};
use sparsegeom::geometry::IncidenceGeometry;
use sparsegeom::hypergraph::{derive_params, hypergraph_to_geometry, Hypergraph};
use sparsegeom::oracle::{
    brute_force_verdict, max_sparse_subset, verify_matroid_exchange, verify_matroid_pairwise,
    OracleBounds,
};
use sparsegeom::preset;
use sparsegeom::SparsityParams;

#[derive(Parser)]
#[command(name = "sparsegeom", version, about = "Sparsity of rank-2 incidence geometries")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct ParamsArg {
    /// Parameter quadruple lambda,k1,k2,l
    #[arg(long, value_name = "L,K1,K2,L", conflicts_with = "preset")]
    params: Option<String>,
    /// Named preset: rods, kplane:<k>, dual-kplane:<k>, graph:<k>,<l>
    #[arg(long)]
    preset: Option<String>,
}

impl ParamsArg {
    fn resolve(&self) -> Result<SparsityParams, Error> {
        match (&self.params, &self.preset) {
            (Some(p), None) => {
                let parts: Vec<&str> = p.split(',').collect();
                if parts.len() != 4 {
                    return Err(Error::Parse(format!(
                        "expected four comma-separated integers, got {p:?}"
                    )));
                }
                let mut vals = [0u32; 4];
                for (slot, part) in vals.iter_mut().zip(&parts) {
                    *slot = part
                        .trim()
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad parameter value {part:?}")))?;
                }
                SparsityParams::new(vals[0], vals[1], vals[2], vals[3])
            }
            (None, Some(name)) => preset::resolve(name),
            _ => Err(Error::Parse("exactly one of --params/--preset required".into())),
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Decide sparsity/tightness of a geometry file (Verdict JSON on stdout)
    Check {
        #[command(flatten)]
        params: ParamsArg,
        /// Assert the game invariants after every move
        #[arg(long)]
        debug_invariants: bool,
        /// Seed for invariant support sampling
        #[arg(long, default_value_t = 0)]
        seed: u64,
        input: PathBuf,
    },
    /// Extract a maximum sparse subgeometry (lambda = 1 only)
    Extract {
        #[command(flatten)]
        params: ParamsArg,
        /// Write the accepted subgeometry to this geometry file
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        debug_invariants: bool,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        input: PathBuf,
    },
    /// Convert a hypergraph file to a geometry, optionally deriving params
    Convert {
        /// Hypergraph sparsity parameter k
        #[arg(long)]
        k: Option<u32>,
        /// Hypergraph sparsity parameter l
        #[arg(long)]
        l: Option<u32>,
        /// Force a specific lambda instead of the smallest feasible one
        #[arg(long)]
        lambda: Option<u32>,
        #[arg(long)]
        out: Option<PathBuf>,
        input: PathBuf,
    },
    /// Construct geometries
    #[command(subcommand)]
    Generate(GenerateCommand),
    /// Exhaustive reference verdicts
    Oracle {
        #[command(flatten)]
        params: ParamsArg,
        /// Report a maximum sparse incidence subset instead of a verdict
        #[arg(long)]
        max_subset: bool,
        #[arg(long, default_value_t = 16)]
        oracle_bound: usize,
        input: PathBuf,
    },
    /// Check the basis-exchange axiom
    VerifyMatroid {
        #[command(flatten)]
        params: ParamsArg,
        /// Ground-set points for full enumeration
        #[arg(long, requires = "lines", conflicts_with = "pair")]
        points: Option<usize>,
        /// Ground-set lines for full enumeration
        #[arg(long, requires = "points")]
        lines: Option<usize>,
        /// Two tight geometry files for a pairwise exchange check
        #[arg(long, num_args = 2, value_names = ["FIRST", "SECOND"])]
        pair: Option<Vec<PathBuf>>,
        #[arg(long, default_value_t = 12)]
        oracle_bound: usize,
    },
}

#[derive(Subcommand)]
enum GenerateCommand {
    /// A (1,k1,k2,l)-tight geometry with the requested size
    Tight {
        #[command(flatten)]
        params: ParamsArg,
        #[arg(long)]
        points: usize,
        #[arg(long)]
        lines: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Seeded Bernoulli incidences on a grid
    Random {
        #[arg(long)]
        points: usize,
        #[arg(long)]
        lines: usize,
        #[arg(long)]
        density: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn load_geometry(path: &PathBuf) -> Result<IncidenceGeometry, Error> {
    let text = std::fs::read_to_string(path)?;
    IncidenceGeometry::from_json(&text)
}

fn emit_geometry(g: &IncidenceGeometry, out: &Option<PathBuf>) -> Result<(), Error> {
    let json = g.to_json();
    if let Some(path) = out {
        std::fs::write(path, &json)?;
    }
    println!("{json}");
    Ok(())
}

fn run(cli: Cli) -> Result<(), Error> {
    match cli.command {
        Command::Check {
            params,
            debug_invariants,
            seed,
            input,
        } => {
            let p = params.resolve()?;
            let g = load_geometry(&input)?;
            let opts = EngineOptions {
                debug_invariants,
                seed,
            };
            let verdict = run_recognition_with(&g, p, &opts)?;
            println!(
                "{}",
                serde_json::to_string_pretty(&verdict.to_report(&g)).expect("report")
            );
        }
        Command::Extract {
            params,
            out,
            debug_invariants,
            seed,
            input,
        } => {
            let p = params.resolve()?;
            let g = load_geometry(&input)?;
            let opts = EngineOptions {
                debug_invariants,
                seed,
            };
            let verdict = run_extraction_with(&g, p, &opts)?;
            if let Some(path) = &out {
                let accepted = verdict.accepted.as_deref().unwrap_or(&[]);
                let sub = g.restrict_incidences(accepted);
                std::fs::write(path, sub.to_json())?;
            }
            println!(
                "{}",
                serde_json::to_string_pretty(&verdict.to_report(&g)).expect("report")
            );
        }
        Command::Convert {
            k,
            l,
            lambda,
            out,
            input,
        } => {
            let text = std::fs::read_to_string(&input)?;
            let h = Hypergraph::from_json(&text)?;
            let g = hypergraph_to_geometry(&h);
            let derived = match (k, l) {
                (Some(k), Some(l)) => Some(derive_params(k, l, h.uniform_rank()?, lambda)?),
                (None, None) => None,
                _ => return Err(Error::Parse("--k and --l must be given together".into())),
            };
            if let Some(path) = &out {
                std::fs::write(path, g.to_json())?;
            }
            let geometry: serde_json::Value =
                serde_json::from_str(&g.to_json()).expect("own output");
            let report = serde_json::json!({
                "params": derived.map(|p| {
                    let (a, b, c, d) = p.as_tuple();
                    vec![a, b, c, d]
                }),
                "geometry": geometry,
            });
            println!("{}", serde_json::to_string_pretty(&report).expect("report"));
        }
        Command::Generate(cmd) => match cmd {
            GenerateCommand::Tight {
                params,
                points,
                lines,
                out,
            } => {
                let p = params.resolve()?;
                let g = construct_tight_geometry(&p, points, lines)?;
                emit_geometry(&g, &out)?;
            }
            GenerateCommand::Random {
                points,
                lines,
                density,
                seed,
                out,
            } => {
                if !(0.0..=1.0).contains(&density) {
                    return Err(Error::Parse("density must be in [0, 1]".into()));
                }
                let g = random_geometry(points, lines, density, seed);
                emit_geometry(&g, &out)?;
            }
        },
        Command::Oracle {
            params,
            max_subset,
            oracle_bound,
            input,
        } => {
            let p = params.resolve()?;
            let g = load_geometry(&input)?;
            let bounds = OracleBounds::with_limit(oracle_bound);
            if max_subset {
                let subset = max_sparse_subset(&g, &p, &bounds)?;
                let named: Vec<(String, String)> = subset
                    .iter()
                    .map(|&i| {
                        let (pt, ln) = g.incidences()[i];
                        (g.point_name(pt).to_owned(), g.line_name(ln).to_owned())
                    })
                    .collect();
                let report = serde_json::json!({
                    "size": named.len(),
                    "max_sparse_subset": named,
                });
                println!("{}", serde_json::to_string_pretty(&report).expect("report"));
            } else {
                let verdict = brute_force_verdict(&g, &p, &bounds)?;
                println!(
                    "{}",
                    serde_json::to_string_pretty(&verdict.to_report(&g)).expect("report")
                );
            }
        }
        Command::VerifyMatroid {
            params,
            points,
            lines,
            pair,
            oracle_bound,
        } => {
            let p = params.resolve()?;
            let bounds = OracleBounds::with_limit(oracle_bound);
            let report = match (points, lines, pair) {
                (Some(n), Some(m), None) => verify_matroid_exchange(n, m, &p, &bounds)?,
                (None, None, Some(files)) => {
                    let g1 = load_geometry(&files[0])?;
                    let g2 = load_geometry(&files[1])?;
                    verify_matroid_pairwise(&g1, &g2, &p)?
                }
                _ => {
                    return Err(Error::Parse(
                        "give either --points/--lines or --pair".into(),
                    ))
                }
            };
            println!("{}", serde_json::to_string_pretty(&report).expect("report"));
        }
    }
    Ok(())
}

fn exit_code(err: &Error) -> u8 {
    match err {
        Error::NonPositiveLambda
        | Error::ParameterConditionViolated { .. }
        | Error::LambdaNotOne(_) => 2,
        Error::Parse(_)
        | Error::DanglingReference(_)
        | Error::DuplicateIncidence(_, _)
        | Error::Io(_) => 3,
        _ => 4,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(exit_code(&err))
        }
    }
}
