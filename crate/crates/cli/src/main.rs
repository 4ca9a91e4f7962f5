use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::Context;
use bkvpg::format::{parse_paths, write_instance, FormatError};
use bkvpg::{
    exact::exact_mwis_capped, generate, solve, Arith, GenParams, Instance, InstanceError, PathId,
    PivotRule, RoundingError, SolveError, SolveOptions,
};
use bkvpg_cli::args::{parse_grid, parse_list, parse_weight_range};
use bkvpg_cli::bench::{auto_grid, run_sweep, write_csv, BenchSpec};
use bkvpg_cli::render::render_svg;
use bkvpg_cli::report::{FailureJson, ReportJson};
use clap::{Parser, Subcommand};

/// Approximate maximum-weight independent sets of weighted grid paths.
#[derive(Debug, Parser)]
#[command(name = "bkvpg", version)]
struct Cli {
    /// Arithmetic for the LP and rounding: auto (exact up to 64 paths), exact, float.
    #[arg(long, global = true, default_value = "auto")]
    arith: Arith,
    /// Float-mode tolerance.
    #[arg(long, global = true, default_value_t = 1e-9)]
    tolerance: f64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check an instance file and print its parameters.
    Validate { input: PathBuf },
    /// Solve with the LP relaxation and local-ratio rounding.
    Solve {
        input: PathBuf,
        #[arg(long, default_value = "min-id")]
        pivot: PivotRule,
        /// Write the LP in CPLEX LP format.
        #[arg(long, value_name = "FILE")]
        lp_dump: Option<PathBuf>,
        /// Write the intersection graph as a sorted `u v` edge list.
        #[arg(long, value_name = "FILE")]
        edge_list: Option<PathBuf>,
    },
    /// Solve exactly by branch and bound (small instances only).
    Exact {
        input: PathBuf,
        #[arg(long, default_value_t = bkvpg::exact::DEFAULT_CAP)]
        cap: usize,
    },
    /// Generate a random instance.
    Gen {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 20)]
        n: usize,
        #[arg(long, default_value_t = 1)]
        k: u32,
        #[arg(long, default_value_t = 2)]
        c: u64,
        /// `W` or `WxH`; defaults to a size scaled to n and c.
        #[arg(long)]
        grid: Option<String>,
        #[arg(long, default_value = "1:100")]
        weights: String,
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
    },
    /// Sweep generated instances and write a CSV table.
    Bench {
        #[arg(long, default_value = "20")]
        n: String,
        #[arg(long, default_value = "1")]
        k: String,
        #[arg(long, default_value = "2")]
        c: String,
        /// Seeds as a list with inclusive ranges, e.g. `1..5,9`.
        #[arg(long, default_value = "1..5")]
        seeds: String,
        /// Grid side, or `auto`.
        #[arg(long, default_value = "auto")]
        grid: String,
        #[arg(long, default_value = "1:100")]
        weights: String,
        #[arg(long, default_value_t = 18)]
        exact_cap: usize,
        #[arg(long, default_value = "min-id")]
        pivot: PivotRule,
        /// Worker threads.
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Leave runtime_ms empty so the file is reproducible.
        #[arg(long)]
        no_timing: bool,
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
    },
    /// Draw an instance as SVG.
    Render {
        input: PathBuf,
        #[arg(long, value_name = "FILE")]
        out: PathBuf,
        /// Comma-separated path ids to emphasize.
        #[arg(long)]
        highlight: Option<String>,
        /// Emphasize the `selected` ids of a `solve` or `exact` report.
        #[arg(long, value_name = "FILE")]
        highlight_report: Option<PathBuf>,
    },
}

/// Bad input that could not be read as an instance at all (exit 2).
#[derive(Debug, thiserror::Error)]
#[error("{0}")]
struct Unreadable(String);

fn read_text(path: &Path) -> anyhow::Result<String> {
    fs::read_to_string(path)
        .with_context(|| format!("reading {}", path.display()))
        .map_err(|e| Unreadable(format!("{e:#}")).into())
}

fn print_invalid(e: &InstanceError) {
    match e {
        InstanceError::InvalidPaths(list) => {
            for (id, violations) in list {
                for v in violations {
                    println!("path {id}: {v}");
                }
            }
        }
        other => println!("{other}"),
    }
}

/// Reads and validates; invalid instances are printed and mapped to exit 1.
fn load(path: &Path) -> anyhow::Result<Result<Instance, ExitCode>> {
    let text = read_text(path)?;
    let (k, paths) = parse_paths(&text).map_err(|e: FormatError| Unreadable(e.to_string()))?;
    match Instance::new(k, paths) {
        Ok(inst) => Ok(Ok(inst)),
        Err(e) => {
            print_invalid(&e);
            Ok(Err(ExitCode::from(1)))
        }
    }
}

fn write_out(out: Option<&Path>, text: &str) -> anyhow::Result<()> {
    match out {
        Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn run(cli: Cli) -> anyhow::Result<ExitCode> {
    let opts_with = |pivot| SolveOptions {
        arith: cli.arith,
        pivot,
        tolerance: cli.tolerance,
    };
    match cli.command {
        Command::Validate { input } => {
            let inst = match load(&input)? {
                Ok(i) => i,
                Err(code) => return Ok(code),
            };
            println!(
                "n={} k={} c={} B={}",
                inst.len(),
                inst.k(),
                inst.c(),
                inst.bound()
            );
            Ok(ExitCode::SUCCESS)
        }
        Command::Solve {
            input,
            pivot,
            lp_dump,
            edge_list,
        } => {
            let inst = match load(&input)? {
                Ok(i) => i,
                Err(code) => return Ok(code),
            };
            match solve(&inst, &opts_with(pivot)) {
                Ok(sol) => {
                    if let Some(p) = lp_dump {
                        write_out(Some(&p), &sol.lp.to_lp_format())?;
                    }
                    if let Some(p) = edge_list {
                        write_out(Some(&p), &sol.graph.edge_list())?;
                    }
                    println!("{}", ReportJson::from(&sol.report).to_json());
                    Ok(ExitCode::SUCCESS)
                }
                Err(e) => {
                    let kind = match &e {
                        SolveError::Rounding(RoundingError::CertificationFailed { .. }) => "CertificationFailed",
                        SolveError::Rounding(_) => "RoundingFailed",
                        SolveError::Bound(_) => "BoundViolated",
                        SolveError::Lp(_) => "LpFailed",
                    };
                    let payload = FailureJson {
                        error: kind.into(),
                        message: e.to_string(),
                    };
                    println!("{}", serde_json::to_string(&payload)?);
                    Ok(ExitCode::from(1))
                }
            }
        }
        Command::Exact { input, cap } => {
            let inst = match load(&input)? {
                Ok(i) => i,
                Err(code) => return Ok(code),
            };
            let graph = bkvpg::build_graph(&bkvpg::build_point_index(&inst));
            let best = match exact_mwis_capped(&graph, &inst.weights(), cap) {
                Ok(b) => b,
                Err(e) => {
                    eprintln!("error: {e}");
                    return Ok(ExitCode::from(1));
                }
            };
            let independent = graph.is_independent(&best.indices);
            println!("{}", ReportJson::from_exact(&best, inst.bound(), independent).to_json());
            Ok(if independent { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
        Command::Gen {
            seed,
            n,
            k,
            c,
            grid,
            weights,
            out,
        } => {
            let (grid_w, grid_h) = match grid {
                Some(g) => parse_grid(&g).map_err(anyhow::Error::msg)?,
                None => {
                    let g = auto_grid(n, k, c);
                    (g, g)
                }
            };
            let (weight_min, weight_max) = parse_weight_range(&weights).map_err(anyhow::Error::msg)?;
            let inst = generate(&GenParams {
                n,
                k,
                c,
                grid_w,
                grid_h,
                weight_min,
                weight_max,
                seed,
            })?;
            write_out(out.as_deref(), &write_instance(&inst))?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Bench {
            n,
            k,
            c,
            seeds,
            grid,
            weights,
            exact_cap,
            pivot,
            jobs,
            no_timing,
            out,
        } => {
            let grid = match grid.as_str() {
                "auto" => None,
                g => Some(g.parse().map_err(|_| anyhow::anyhow!("bad grid `{g}`"))?),
            };
            let spec = BenchSpec {
                ns: parse_list(&n).map_err(anyhow::Error::msg)?,
                ks: parse_list(&k).map_err(anyhow::Error::msg)?,
                cs: parse_list(&c).map_err(anyhow::Error::msg)?,
                seeds: parse_list(&seeds).map_err(anyhow::Error::msg)?,
                grid,
                weights: parse_weight_range(&weights).map_err(anyhow::Error::msg)?,
                exact_cap,
                arith: cli.arith,
                pivot,
                tolerance: cli.tolerance,
                timing: !no_timing,
                jobs,
            };
            write_out(out.as_deref(), &write_csv(&run_sweep(&spec)))?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Render {
            input,
            out,
            highlight,
            highlight_report,
        } => {
            let inst = match load(&input)? {
                Ok(i) => i,
                Err(code) => return Ok(code),
            };
            let mut ids: Vec<PathId> = match highlight {
                Some(h) => parse_list(&h).map_err(anyhow::Error::msg)?,
                None => Vec::new(),
            };
            if let Some(p) = highlight_report {
                let doc: serde_json::Value = serde_json::from_str(&read_text(&p)?)
                    .with_context(|| format!("parsing {}", p.display()))?;
                let selected = doc["selected"]
                    .as_array()
                    .ok_or_else(|| anyhow::anyhow!("{} has no `selected` array", p.display()))?;
                for v in selected {
                    ids.push(v.as_u64().ok_or_else(|| anyhow::anyhow!("bad id {v}"))?);
                }
            }
            match render_svg(&inst, &ids) {
                Ok(svg) => {
                    write_out(Some(&out), &svg)?;
                    Ok(ExitCode::SUCCESS)
                }
                Err(e) => {
                    eprintln!("error: {e}");
                    Ok(ExitCode::from(1))
                }
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            if e.is::<Unreadable>() {
                ExitCode::from(2)
            } else {
                ExitCode::from(1)
            }
        }
    }
}
