//! `mkvc` command line: solve, verify, generate and benchmark bipartite
//! max k-vertex cover instances.
//!
//! Exit codes: 0 success, 1 usage/parameter error, 2 unreadable or malformed
//! input, 3 invalid k, 4 exact-solver cap exceeded, 5 verification violation.

use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;

use mkvc::analysis::{self, RatioReport, Rational};
use mkvc::exact::{self, ExactError, DEFAULT_EXACT_CAP};
use mkvc::gen;
use mkvc::graph::BipartiteGraph;
use mkvc::report::{
    CoverageSet, RatioPair, RatioSet, SolutionSet, SolveReport, Timings, VerifyReport,
};
use mkvc::solver;

const EXIT_USAGE: i32 = 1;
const EXIT_PARSE: i32 = 2;
const EXIT_BAD_K: i32 = 3;
const EXIT_CAP: i32 = 4;
const EXIT_VIOLATION: i32 = 5;

type CliResult = Result<i32, (i32, String)>;

#[derive(Parser)]
#[command(
    name = "mkvc",
    version,
    about = "Max k-vertex cover tools for bipartite graphs"
)]
struct Cli {
    /// Exact-solver cap on the smaller side (default 20; env MKVC_EXACT_CAP).
    #[arg(long, global = true)]
    exact_cap: Option<usize>,
    /// Report wall-clock fields as 0 so repeated runs are byte-identical.
    #[arg(long, global = true)]
    stable_output: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Alg {
    Comb07,
    Greedy,
    Exact,
    All,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Model {
    Gnp,
    Semiregular,
    Planted,
}

#[derive(Subcommand)]
enum Command {
    /// Solve one instance and print a JSON report.
    Solve {
        #[arg(short, long)]
        input: PathBuf,
        #[arg(short)]
        k: usize,
        #[arg(short, long, value_enum, default_value = "comb07")]
        alg: Alg,
        /// Emit JSON (the default and only solve format).
        #[arg(long, default_value = "true")]
        json: bool,
    },
    /// Check the lemma bounds and the 0.7 ratio against the exact optimum.
    Verify {
        #[arg(short, long)]
        input: PathBuf,
        #[arg(short)]
        k: usize,
        /// Emit JSON (the default and only verify format).
        #[arg(long, default_value = "true")]
        json: bool,
    },
    /// Generate an instance file.
    Gen {
        #[arg(short, long, value_enum)]
        model: Model,
        #[arg(long)]
        na: usize,
        #[arg(long)]
        nb: usize,
        /// Edge probability (gnp).
        #[arg(short, long)]
        p: Option<f64>,
        /// Side degrees (semiregular).
        #[arg(long)]
        da: Option<usize>,
        #[arg(long)]
        db: Option<usize>,
        /// Planted hub counts and degrees (planted).
        #[arg(long)]
        k1: Option<usize>,
        #[arg(long)]
        k2: Option<usize>,
        #[arg(long)]
        dhub: Option<usize>,
        #[arg(long, default_value = "0")]
        dnoise: usize,
        #[arg(long, default_value = "0")]
        seed: u64,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Run every solver over a directory of .bkvc files; CSV on stdout.
    Bench {
        /// Directory containing .bkvc instance files.
        #[arg(short, long)]
        dir: PathBuf,
        /// Fixed k for every instance.
        #[arg(short)]
        k: Option<usize>,
        /// k as a fraction of nA + nB.
        #[arg(long)]
        k_frac: Option<f64>,
        /// Sweep every k from 0 to nA + nB.
        #[arg(long)]
        k_sweep: bool,
        /// Emit CSV (the default and only bench format).
        #[arg(long, default_value = "true")]
        csv: bool,
    },
}

fn main() {
    let cli = Cli::parse();
    let code = match run(cli) {
        Ok(code) => code,
        Err((code, msg)) => {
            eprintln!("mkvc: {msg}");
            code
        }
    };
    std::process::exit(code);
}

fn resolve_cap(flag: Option<usize>) -> usize {
    if let Some(cap) = flag {
        return cap;
    }
    match std::env::var("MKVC_EXACT_CAP") {
        Ok(v) => match v.parse() {
            Ok(cap) => cap,
            Err(_) => {
                eprintln!("mkvc: ignoring malformed MKVC_EXACT_CAP={v:?}");
                DEFAULT_EXACT_CAP
            }
        },
        Err(_) => DEFAULT_EXACT_CAP,
    }
}

fn load_graph(path: &Path) -> Result<BipartiteGraph, (i32, String)> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| (EXIT_PARSE, format!("{}: {e}", path.display())))?;
    BipartiteGraph::parse_bkvc(&text).map_err(|e| (EXIT_PARSE, format!("{}: {e}", path.display())))
}

fn check_k(g: &BipartiteGraph, k: usize) -> Result<(), (i32, String)> {
    if k > g.n_total() {
        return Err((
            EXIT_BAD_K,
            format!("k = {k} out of range (graph has {} vertices)", g.n_total()),
        ));
    }
    Ok(())
}

fn run(cli: Cli) -> CliResult {
    let cap = resolve_cap(cli.exact_cap);
    match cli.command {
        Command::Solve {
            input,
            k,
            alg,
            json: _,
        } => cmd_solve(&input, k, alg, cap, cli.stable_output),
        Command::Verify { input, k, json: _ } => cmd_verify(&input, k, cap, cli.stable_output),
        Command::Gen {
            model,
            na,
            nb,
            p,
            da,
            db,
            k1,
            k2,
            dhub,
            dnoise,
            seed,
            output,
        } => cmd_gen(
            model, na, nb, p, da, db, k1, k2, dhub, dnoise, seed, &output,
        ),
        Command::Bench {
            dir,
            k,
            k_frac,
            k_sweep,
            csv: _,
        } => cmd_bench(&dir, k, k_frac, k_sweep, cap, cli.stable_output),
    }
}

struct Stopwatch {
    start: Instant,
    stable: bool,
}

impl Stopwatch {
    fn new(stable: bool) -> Self {
        Stopwatch {
            start: Instant::now(),
            stable,
        }
    }

    fn lap(&mut self) -> u64 {
        let ms = self.start.elapsed().as_millis() as u64;
        self.start = Instant::now();
        if self.stable {
            0
        } else {
            ms
        }
    }
}

fn cmd_solve(input: &Path, k: usize, alg: Alg, cap: usize, stable: bool) -> CliResult {
    let g = load_graph(input)?;
    check_k(&g, k)?;
    let total_start = Instant::now();

    let mut coverage = CoverageSet::default();
    let mut solutions = SolutionSet::default();
    let mut timings = Timings::default();
    let mut winner = None;

    if matches!(alg, Alg::Comb07 | Alg::All) {
        let mut sw = Stopwatch::new(stable);
        let (sol, tag) = solver::solve_comb07(&g, k).map_err(|e| (EXIT_BAD_K, e.to_string()))?;
        timings.comb07_ms = Some(sw.lap());
        coverage.comb07 = Some(sol.coverage);
        solutions.comb07 = Some(sol);
        winner = Some(tag);
    }
    if matches!(alg, Alg::Greedy | Alg::All) {
        let mut sw = Stopwatch::new(stable);
        let sol = solver::solve_greedy(&g, k).map_err(|e| (EXIT_BAD_K, e.to_string()))?;
        timings.greedy_ms = Some(sw.lap());
        coverage.greedy = Some(sol.coverage);
        solutions.greedy = Some(sol);
    }
    match alg {
        Alg::Exact => {
            let mut sw = Stopwatch::new(stable);
            let sol = exact::solve_exact(&g, k, cap).map_err(exact_error_to_cli)?;
            timings.exact_ms = Some(sw.lap());
            coverage.exact = Some(sol.coverage);
            solutions.exact = Some(sol);
        }
        // Within `all`, an over-cap instance degrades to null exact
        // fields instead of failing the whole report.
        Alg::All if g.n_a().min(g.n_b()) <= cap => {
            let mut sw = Stopwatch::new(stable);
            let sol = exact::solve_exact(&g, k, cap).map_err(exact_error_to_cli)?;
            timings.exact_ms = Some(sw.lap());
            coverage.exact = Some(sol.coverage);
            solutions.exact = Some(sol);
        }
        _ => {}
    }

    let mut ratios = RatioSet::default();
    let mut verdict = None;
    if let Some(opt) = coverage.exact {
        if let Some(algv) = coverage.comb07 {
            verdict = Some(10 * algv >= 7 * opt);
            if opt > 0 {
                ratios.comb07_vs_exact =
                    Some(RatioPair::from(Rational::new(algv as i64, opt as i64)));
            }
        }
        if let Some(gv) = coverage.greedy {
            if opt > 0 {
                ratios.greedy_vs_exact =
                    Some(RatioPair::from(Rational::new(gv as i64, opt as i64)));
            }
        }
    }
    timings.total_ms = if stable {
        0
    } else {
        total_start.elapsed().as_millis() as u64
    };

    let report = SolveReport {
        instance: input.display().to_string(),
        k,
        n_a: g.n_a(),
        n_b: g.n_b(),
        m: g.edge_count(),
        coverage,
        solutions,
        winner,
        ratios,
        verdict,
        lemmas: None,
        timings_ms: timings,
    };
    print_json(&report);
    Ok(0)
}

fn cmd_verify(input: &Path, k: usize, cap: usize, stable: bool) -> CliResult {
    let g = load_graph(input)?;
    check_k(&g, k)?;
    let total_start = Instant::now();

    let mut sw = Stopwatch::new(stable);
    let optimum = exact::solve_exact(&g, k, cap).map_err(exact_error_to_cli)?;
    let exact_ms = sw.lap();
    let (alg_sol, winner) = solver::solve_comb07(&g, k).map_err(|e| (EXIT_BAD_K, e.to_string()))?;
    let comb_ms = sw.lap();

    let profile =
        analysis::extract_params(&g, k, &optimum).map_err(|e| (EXIT_USAGE, e.to_string()))?;
    let lemmas =
        analysis::check_lemma_bounds(&g, k, &optimum).map_err(|e| (EXIT_USAGE, e.to_string()))?;
    let theorem = RatioReport {
        alg: alg_sol.coverage,
        opt: optimum.coverage,
        verdict: 10 * alg_sol.coverage >= 7 * optimum.coverage,
        ratio: (optimum.coverage > 0)
            .then(|| Rational::new(alg_sol.coverage as i64, optimum.coverage as i64)),
    };

    let lemma_summary = lemmas.counts();
    let report = VerifyReport {
        instance: input.display().to_string(),
        k,
        n_a: g.n_a(),
        n_b: g.n_b(),
        m: g.edge_count(),
        profile,
        lemma_summary,
        winner,
        timings_ms: Timings {
            comb07_ms: Some(comb_ms),
            greedy_ms: None,
            exact_ms: Some(exact_ms),
            total_ms: if stable {
                0
            } else {
                total_start.elapsed().as_millis() as u64
            },
        },
        theorem: theorem.clone(),
        lemmas: lemmas.clone(),
    };
    print_json(&report);

    let mut violated = false;
    for row in lemmas.violated() {
        violated = true;
        eprintln!(
            "mkvc: violated {:?}: lhs = {} < rhs = {} (instance {}, k = {k})",
            row.id,
            row.lhs.unwrap(),
            row.rhs.unwrap(),
            input.display()
        );
    }
    if !theorem.verdict {
        violated = true;
        eprintln!(
            "mkvc: ratio verdict failed: 10*{} < 7*{} (instance {}, k = {k})",
            theorem.alg,
            theorem.opt,
            input.display()
        );
    }
    Ok(if violated { EXIT_VIOLATION } else { 0 })
}

#[allow(clippy::too_many_arguments)]
fn cmd_gen(
    model: Model,
    na: usize,
    nb: usize,
    p: Option<f64>,
    da: Option<usize>,
    db: Option<usize>,
    k1: Option<usize>,
    k2: Option<usize>,
    dhub: Option<usize>,
    dnoise: usize,
    seed: u64,
    output: &Path,
) -> CliResult {
    let require = |name: &str, v: Option<usize>| -> Result<usize, (i32, String)> {
        v.ok_or((EXIT_USAGE, format!("--{name} is required for this model")))
    };
    let g = match model {
        Model::Gnp => {
            let p = p.ok_or((EXIT_USAGE, "-p is required for gnp".to_string()))?;
            gen::gen_gnp(na, nb, p, seed).map_err(|e| (EXIT_USAGE, e.to_string()))?
        }
        Model::Semiregular => {
            let da = require("da", da)?;
            let db = require("db", db)?;
            gen::gen_semiregular(na, nb, da, db, seed).map_err(|e| (EXIT_USAGE, e.to_string()))?
        }
        Model::Planted => {
            let k1 = require("k1", k1)?;
            let k2 = require("k2", k2)?;
            let dhub = require("dhub", dhub)?;
            let (g, k) = gen::gen_planted(na, nb, k1, k2, dhub, dnoise, seed)
                .map_err(|e| (EXIT_USAGE, e.to_string()))?;
            eprintln!("mkvc: planted budget k = {k}");
            g
        }
    };
    std::fs::write(output, g.to_bkvc())
        .map_err(|e| (EXIT_USAGE, format!("{}: {e}", output.display())))?;
    Ok(0)
}

struct BenchRow {
    instance: String,
    k: usize,
    n_a: usize,
    n_b: usize,
    m: usize,
    comb07: u64,
    greedy: u64,
    exact: Option<u64>,
    winner: mkvc::CandidateTag,
    elapsed_ms: u64,
}

fn cmd_bench(
    dir: &Path,
    k_fixed: Option<usize>,
    k_frac: Option<f64>,
    k_sweep: bool,
    cap: usize,
    stable: bool,
) -> CliResult {
    let policies = [k_fixed.is_some(), k_frac.is_some(), k_sweep];
    if policies.iter().filter(|&&x| x).count() != 1 {
        return Err((
            EXIT_USAGE,
            "choose exactly one k policy: -k <K>, --k-frac <F>, or --k-sweep".to_string(),
        ));
    }
    if let Some(f) = k_frac {
        if !(0.0..=1.0).contains(&f) {
            return Err((EXIT_USAGE, format!("--k-frac {f} outside [0, 1]")));
        }
    }

    let mut paths: Vec<PathBuf> = std::fs::read_dir(dir)
        .map_err(|e| (EXIT_USAGE, format!("{}: {e}", dir.display())))?
        .filter_map(|entry| entry.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|ext| ext == "bkvc"))
        .collect();
    paths.sort();

    let mut skipped_files = 0usize;
    let mut instances = Vec::new();
    for path in paths {
        match std::fs::read_to_string(&path)
            .map_err(|e| e.to_string())
            .and_then(|text| BipartiteGraph::parse_bkvc(&text).map_err(|e| e.to_string()))
        {
            Ok(g) => instances.push((path, g)),
            Err(e) => {
                eprintln!("mkvc: skipping {}: {e}", path.display());
                skipped_files += 1;
            }
        }
    }

    let mut skipped_rows = 0usize;
    let mut jobs: Vec<(usize, &PathBuf, &BipartiteGraph, usize)> = Vec::new();
    for (idx, (path, g)) in instances.iter().enumerate() {
        let n = g.n_total();
        let ks: Vec<usize> = if k_sweep {
            (0..=n).collect()
        } else if let Some(f) = k_frac {
            vec![(f * n as f64).floor() as usize]
        } else {
            let k = k_fixed.unwrap();
            if k > n {
                eprintln!(
                    "mkvc: skipping {} at k = {k}: graph has only {n} vertices",
                    path.display()
                );
                skipped_rows += 1;
                continue;
            }
            vec![k]
        };
        for k in ks {
            jobs.push((idx, path, g, k));
        }
    }

    let rows: Vec<BenchRow> = jobs
        .par_iter()
        .map(|&(_, path, g, k)| {
            let start = Instant::now();
            let (comb, winner) = solver::solve_comb07(g, k).expect("k validated");
            let greedy = solver::solve_greedy(g, k).expect("k validated");
            let exact = if g.n_a().min(g.n_b()) <= cap {
                Some(exact::solve_exact(g, k, cap).expect("cap checked").coverage)
            } else {
                None
            };
            BenchRow {
                instance: path.display().to_string(),
                k,
                n_a: g.n_a(),
                n_b: g.n_b(),
                m: g.edge_count(),
                comb07: comb.coverage,
                greedy: greedy.coverage,
                exact,
                winner,
                elapsed_ms: if stable {
                    0
                } else {
                    start.elapsed().as_millis() as u64
                },
            }
        })
        .collect();

    println!(
        "instance,k,n_a,n_b,m,comb07,greedy,exact,ratio_comb07,ratio_greedy,winner_label,winner_k1,winner_k2,winner_orientation,elapsed_ms"
    );
    let mut min_ratio: Option<Rational> = None;
    let mut exact_rows = 0usize;
    for row in &rows {
        let (ratio_comb, ratio_greedy) = match row.exact {
            Some(opt) if opt > 0 => {
                exact_rows += 1;
                let rc = Rational::new(row.comb07 as i64, opt as i64);
                let rg = Rational::new(row.greedy as i64, opt as i64);
                if min_ratio.is_none_or(|m| rc < m) {
                    min_ratio = Some(rc);
                }
                (rc.to_string(), rg.to_string())
            }
            Some(_) => {
                exact_rows += 1;
                (String::new(), String::new())
            }
            None => (String::new(), String::new()),
        };
        let guess = row
            .winner
            .guess
            .expect("split solver always reports a guess");
        println!(
            "{},{},{},{},{},{},{},{},{},{},{},{},{},{},{}",
            csv_field(&row.instance),
            row.k,
            row.n_a,
            row.n_b,
            row.m,
            row.comb07,
            row.greedy,
            row.exact.map_or(String::new(), |v| v.to_string()),
            ratio_comb,
            ratio_greedy,
            serde_json::to_value(row.winner.label)
                .expect("label serializes")
                .as_str()
                .unwrap(),
            guess.k1,
            guess.k2,
            match guess.orientation {
                mkvc::Orientation::AIsV1 => "A-is-V1",
                mkvc::Orientation::BIsV1 => "B-is-V1",
            },
            row.elapsed_ms,
        );
    }
    println!(
        "# instances={} rows={} exact_rows={} skipped_files={} skipped_rows={} min_ratio_comb07={}",
        instances.len(),
        rows.len(),
        exact_rows,
        skipped_files,
        skipped_rows,
        min_ratio.map_or("n/a".to_string(), |r| r.to_string()),
    );
    Ok(0)
}

fn csv_field(s: &str) -> String {
    if s.contains(',') || s.contains('"') || s.contains('\n') {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn exact_error_to_cli(e: ExactError) -> (i32, String) {
    let code = match e {
        ExactError::CapExceeded { .. } => EXIT_CAP,
        ExactError::KOutOfRange { .. } => EXIT_BAD_K,
        ExactError::NaiveCapExceeded { .. } => EXIT_CAP,
    };
    (code, e.to_string())
}

fn print_json<T: serde::Serialize>(value: &T) {
    println!(
        "{}",
        serde_json::to_string_pretty(value).expect("reports serialize")
    );
}
