//! Parameter sweeps: generate, solve, optionally compare with the exact
//! optimum, and tabulate one row per cell.

use std::time::Instant;

use bkvpg::{
    exact::exact_mwis_capped, generate, solve, Arith, GenParams, Number, PivotRule, Rational,
    SolveOptions,
};
use serde::Serialize;

/// Sweep definition. Cells are the product `ns x ks x cs x seeds`, in that
/// nesting order.
#[derive(Debug, Clone)]
pub struct BenchSpec {
    pub ns: Vec<usize>,
    pub ks: Vec<u32>,
    pub cs: Vec<u64>,
    pub seeds: Vec<u64>,
    /// Fixed grid side, or `None` for [`auto_grid`].
    pub grid: Option<i64>,
    pub weights: (i64, i64),
    /// Largest `n` for which the exact optimum is computed.
    pub exact_cap: usize,
    pub arith: Arith,
    pub pivot: PivotRule,
    pub tolerance: f64,
    /// Record wall-clock time per cell; off gives reproducible files.
    pub timing: bool,
    pub jobs: usize,
}

impl Default for BenchSpec {
    fn default() -> Self {
        Self {
            ns: vec![20],
            ks: vec![1],
            cs: vec![2],
            seeds: (1..=5).collect(),
            grid: None,
            weights: (1, 100),
            exact_cap: 18,
            arith: Arith::Auto,
            pivot: PivotRule::MinId,
            tolerance: 1e-9,
            timing: true,
            jobs: 1,
        }
    }
}

/// Grid side dense enough that most LPs are fractional:
/// `ceil(sqrt n) * (c+1) / 2`, never below the `c*(k+1)` a maximal path needs.
pub fn auto_grid(n: usize, k: u32, c: u64) -> i64 {
    let root = (n as f64).sqrt().ceil() as u64;
    (root * (c + 1) / 2).max(c * (k as u64 + 1)) as i64
}

/// One CSV line. `c` and `bound` describe the generated instance (its longest
/// segment can be shorter than requested).
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BenchRow {
    pub seed: u64,
    pub n: usize,
    pub k: u32,
    pub c: Option<u64>,
    pub bound: Option<u64>,
    pub lp_objective: Option<String>,
    pub alg_weight: Option<String>,
    pub exact_weight: Option<String>,
    pub ratio_lp: Option<String>,
    pub ratio_opt: Option<String>,
    pub runtime_ms: Option<String>,
    pub error: Option<String>,
}

fn ratio(num: f64, den: &Rational) -> String {
    let den = Number::to_f64(den);
    let r = if den == 0.0 && num == 0.0 { 1.0 } else { num / den };
    format!("{r:.6}")
}

fn run_cell(spec: &BenchSpec, n: usize, k: u32, c: u64, seed: u64) -> BenchRow {
    let mut row = BenchRow {
        seed,
        n,
        k,
        c: None,
        bound: None,
        lp_objective: None,
        alg_weight: None,
        exact_weight: None,
        ratio_lp: None,
        ratio_opt: None,
        runtime_ms: None,
        error: None,
    };
    let grid = spec.grid.unwrap_or_else(|| auto_grid(n, k, c));
    let params = GenParams {
        n,
        k,
        c,
        grid_w: grid,
        grid_h: grid,
        weight_min: spec.weights.0,
        weight_max: spec.weights.1,
        seed,
    };
    let inst = match generate(&params) {
        Ok(i) => i,
        Err(e) => {
            row.error = Some(e.to_string());
            return row;
        }
    };
    row.c = Some(inst.c());
    row.bound = Some(inst.bound());

    let opts = SolveOptions {
        arith: spec.arith,
        pivot: spec.pivot,
        tolerance: spec.tolerance,
    };
    let start = Instant::now();
    let sol = match solve(&inst, &opts) {
        Ok(s) => s,
        Err(e) => {
            row.error = Some(e.to_string());
            return row;
        }
    };
    let elapsed = start.elapsed();
    let report = &sol.report;
    let lp = report.lp_objective.to_f64();
    row.lp_objective = Some(report.lp_objective.to_string());
    row.alg_weight = Some(report.weight.to_string());
    row.ratio_lp = Some(ratio(lp, &report.weight));
    if spec.timing {
        row.runtime_ms = Some(format!("{:.3}", elapsed.as_secs_f64() * 1e3));
    }

    if n <= spec.exact_cap {
        match exact_mwis_capped(&sol.graph, &inst.weights(), spec.exact_cap) {
            Ok(opt) => {
                row.ratio_opt = Some(ratio(Number::to_f64(&opt.best_weight), &report.weight));
                row.exact_weight = Some(opt.best_weight.to_string());
            }
            Err(e) => row.error = Some(e.to_string()),
        }
    }
    row
}

/// Runs every cell on a pool of `spec.jobs` workers; rows come back in cell
/// order regardless of completion order.
pub fn run_sweep(spec: &BenchSpec) -> Vec<BenchRow> {
    use rayon::prelude::*;

    let cells: Vec<(usize, u32, u64, u64)> = spec
        .ns
        .iter()
        .flat_map(|&n| {
            spec.ks.iter().flat_map(move |&k| {
                spec.cs
                    .iter()
                    .flat_map(move |&c| spec.seeds.iter().map(move |&s| (n, k, c, s)))
            })
        })
        .collect();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(spec.jobs.max(1))
        .build()
        .expect("thread pool");
    pool.install(|| {
        cells
            .par_iter()
            .map(|&(n, k, c, s)| run_cell(spec, n, k, c, s))
            .collect()
    })
}

/// Serializes rows as CSV with a header line, even when there are no rows.
pub fn write_csv(rows: &[BenchRow]) -> String {
    const HEADER: [&str; 12] = [
        "seed",
        "n",
        "k",
        "c",
        "bound",
        "lp_objective",
        "alg_weight",
        "exact_weight",
        "ratio_lp",
        "ratio_opt",
        "runtime_ms",
        "error",
    ];
    let mut w = csv::WriterBuilder::new().has_headers(false).from_writer(Vec::new());
    w.write_record(HEADER).expect("in-memory write");
    for row in rows {
        w.serialize(row).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("flush")).expect("utf-8")
}
