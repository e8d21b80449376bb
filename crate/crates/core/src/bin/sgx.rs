use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use sgraph::fusion::{build_sgraph, numeric_zset, zset};
use sgraph::harness::{count_functions, count_graphs, run_sweep, Check, SweepConfig};
use sgraph::polytope::{build_system, enumerate_vertices, vertices_csv, PolytopeDocument, Variant};
use sgraph::tableau::{
    deconstruct_bounded, default_step_bound, evaluate_diffs, evaluate_rows, order_relations,
    rebuild_heights, strongly_extremal_column, trace, validate_profile, HeightProfile,
};
use sgraph::{CoeffOrder, Error, FunctionVector, NumericCoeffs, Profile};

#[derive(Parser)]
#[command(name = "sgx", version, about = "Canonical S-graph workbench")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Build G(c) for an order.
    Graph {
        #[arg(long)]
        order: CoeffOrder,
        #[command(flatten)]
        out: Output,
    },
    /// List Z(c), symbolically or at numeric coefficients.
    Zset {
        #[arg(long)]
        order: CoeffOrder,
        #[arg(long)]
        coeffs: Option<NumericCoeffs>,
        #[command(flatten)]
        out: Output,
    },
    /// Inequalities and vertices of K(c) or a variant.
    Polytope {
        #[arg(long)]
        order: CoeffOrder,
        #[arg(long)]
        coeffs: NumericCoeffs,
        #[arg(long, default_value = "3")]
        variant: Variant,
        #[command(flatten)]
        out: Output,
    },
    #[command(subcommand)]
    Tableau(TableauCmd),
    /// Distinct functions and graphs over all orders of size n.
    Count {
        #[arg(long, value_delimiter = ',', required = true)]
        n: Vec<usize>,
    },
    /// Run one check of the sweep.
    Verify {
        check: Check,
        #[command(flatten)]
        sweep: SweepArgs,
    },
    /// Run every check.
    Sweep {
        #[command(flatten)]
        sweep: SweepArgs,
    },
}

#[derive(Subcommand)]
enum TableauCmd {
    /// Function of a height profile, by rows and by column differences.
    Eval {
        #[arg(long)]
        heights: HeightProfile,
    },
    /// Deconstruct a function and rebuild a profile for it.
    Reconstruct {
        #[arg(long)]
        function: FunctionVector,
        #[arg(long)]
        max_steps: Option<usize>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
    Dot,
}

#[derive(Args)]
struct Output {
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct SweepArgs {
    #[arg(long, value_delimiter = ',', default_value = "1,2,3")]
    n: Vec<usize>,
    #[arg(long, default_value_t = 2)]
    trials: usize,
    #[arg(long, default_value_t = 42)]
    seed: u64,
    #[arg(long, value_delimiter = ',', default_value = "generic")]
    profile: Vec<Profile>,
    #[arg(long)]
    report: Option<PathBuf>,
    /// Record wall-clock time per check (breaks byte-identical reports).
    #[arg(long)]
    timing: bool,
}

impl SweepArgs {
    fn config(&self, checks: Vec<Check>) -> SweepConfig {
        SweepConfig {
            n_values: self.n.clone(),
            trials_per_order: self.trials,
            seed: self.seed,
            profiles: self.profile.clone(),
            checks,
            timing: self.timing,
        }
    }
}

fn emit(out: &Output, text: String) -> Result<(), Error> {
    match &out.out {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| Error::Input(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn pretty(v: &impl serde::Serialize) -> String {
    serde_json::to_string_pretty(v).expect("serializable") + "\n"
}

fn unsupported(format: Format, what: &str) -> Error {
    let name = match format {
        Format::Json => "json",
        Format::Csv => "csv",
        Format::Dot => "dot",
    };
    Error::Input(format!("{what} cannot be written as {name}"))
}

fn sweep(cfg: SweepConfig, report: Option<&PathBuf>) -> Result<bool, Error> {
    let r = run_sweep(&cfg)?;
    print!("{}", r.summary());
    if let Some(path) = report {
        std::fs::write(path, r.to_json())
            .map_err(|e| Error::Input(format!("cannot write {}: {e}", path.display())))?;
    }
    Ok(r.passed())
}

fn run(cli: Cli) -> Result<bool, Error> {
    match cli.cmd {
        Cmd::Graph { order, out } => {
            let g = build_sgraph(&order);
            let text = match out.format {
                Format::Json => pretty(&g),
                Format::Dot => g.to_dot(),
                f => return Err(unsupported(f, "a graph")),
            };
            emit(&out, text)?;
        }
        Cmd::Zset { order, coeffs, out } => {
            let g = build_sgraph(&order);
            let text = match (out.format, coeffs) {
                (Format::Json, None) => pretty(&zset(&g)),
                (Format::Json, Some(c)) => {
                    let pts = numeric_zset(&g, &c)?;
                    let pts: Vec<Vec<String>> =
                        pts.iter().map(|p| p.iter().map(ToString::to_string).collect()).collect();
                    pretty(&json!({ "order": order, "coeffs": c, "points": pts }))
                }
                (Format::Csv, Some(c)) => vertices_csv(order.n(), &numeric_zset(&g, &c)?),
                (f, _) => return Err(unsupported(f, "this Z-set")),
            };
            emit(&out, text)?;
        }
        Cmd::Polytope { order, coeffs, variant, out } => {
            let sys = build_system(&order, &coeffs, variant)?;
            let v = enumerate_vertices(&sys);
            let text = match out.format {
                Format::Json => pretty(&PolytopeDocument::new(&sys, &v)),
                Format::Csv => vertices_csv(sys.n, &v),
                f => return Err(unsupported(f, "a polytope")),
            };
            emit(&out, text)?;
        }
        Cmd::Tableau(TableauCmd::Eval { heights }) => {
            let violations: Vec<String> = validate_profile(&heights).iter().map(ToString::to_string).collect();
            let rows = evaluate_rows(&heights).map(|f| f.to_string()).map_err(|e| e.to_string());
            let diffs = evaluate_diffs(&heights).map(|f| f.to_string()).map_err(|e| e.to_string());
            print!(
                "{}",
                pretty(&json!({
                    "heights": heights,
                    "violations": violations,
                    "rows": rows.as_ref().unwrap_or_else(|e| e),
                    "diffs": diffs.as_ref().unwrap_or_else(|e| e),
                    "agree": rows.is_ok() && rows == diffs,
                    "relations": order_relations(&heights).to_string(),
                }))
            );
        }
        Cmd::Tableau(TableauCmd::Reconstruct { function, max_steps }) => {
            let bound = max_steps.unwrap_or_else(|| default_step_bound(function.n()).max(1));
            let extremal = strongly_extremal_column(&function);
            match deconstruct_bounded(&function, bound) {
                Ok(log) => {
                    let steps: Vec<String> = trace(&function, &log).iter().map(ToString::to_string).collect();
                    let rebuild = rebuild_heights(&log, &function)?;
                    print!(
                        "{}",
                        pretty(&json!({
                            "function": function.to_string(),
                            "extremal": extremal,
                            "log": log,
                            "trace": steps,
                            "rebuild": rebuild,
                        }))
                    );
                }
                Err(reason) => {
                    print!(
                        "{}",
                        pretty(&json!({
                            "function": function.to_string(),
                            "extremal": extremal,
                            "notRepresentable": reason,
                        }))
                    );
                    return Ok(false);
                }
            }
        }
        Cmd::Count { n } => {
            for n in n {
                println!("n={n} functions={} graphs={}", count_functions(n)?, count_graphs(n)?);
            }
        }
        Cmd::Verify { check, sweep: args } => {
            return sweep(args.config(vec![check]), args.report.as_ref());
        }
        Cmd::Sweep { sweep: args } => {
            return sweep(args.config(Check::ALL.to_vec()), args.report.as_ref());
        }
    }
    Ok(true)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("sgx: {e}");
            match e {
                Error::Internal(_) => ExitCode::from(1),
                _ => ExitCode::from(2),
            }
        }
    }
}
