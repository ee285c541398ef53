//! `metricdim`: build corona-of-product graphs, compute exact metric
//! dimensions with certificates, and check the family dimension claims.
//!
//! Exit codes: 0 success, 1 a verification or resolving check failed,
//! 2 usage or input error, 3 size cap exceeded.

use std::env;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::str::FromStr;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand};
use serde::Serialize;

use metricdim::families::{
    claimed_dim, grid_corona, kn_pm_corona, refute_old_theorems, verify_theorem, Family,
    FamilyError, FamilyInstance, Refutation, RefutationStatus, RefutationSummary, TheoremSummary,
    DEFAULT_SIZE_CAP,
};
use metricdim::io::{labels_path, load_graph, parse_label_list, save_graph};
use metricdim::solver::{failing_subsets, SolveError};
use metricdim::{
    all_pairs_distances, is_resolving_set, metric_dimension_exact, metric_representation,
    witness_pair, Graph, LandmarkSet, VertexId,
};

#[derive(Parser)]
#[command(name = "metricdim", version, about = "Exact metric dimension toolkit")]
struct Cli {
    /// Solver threads (default: all cores; results are identical either way)
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Emit structured JSON instead of text
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Construct a family instance and write it as an edge list
    Build {
        /// grid-corona for (P_n x P_m).K1, kn-pm-corona for (K_n x P_m).K1
        #[arg(long)]
        family: Family,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        /// Output file; labels go to the same path with `.labels` added
        #[arg(long)]
        out: PathBuf,
    },
    /// Compute the exact metric dimension of a graph file
    Dim {
        #[arg(long = "in", value_name = "FILE")]
        input: PathBuf,
        /// Also list every failing subset below the dimension (text only)
        #[arg(long)]
        verbose: bool,
    },
    /// Check whether a landmark set resolves a graph
    CheckSet {
        #[arg(long = "in", value_name = "FILE")]
        input: PathBuf,
        /// Comma-separated labels, e.g. "v(1,1),v(1,2),v(3,2)"
        #[arg(long)]
        set: String,
    },
    /// Check a dimension claim over its parameter range
    Verify {
        /// 3 for the grid corona, 4 for the complete-product corona
        #[arg(long)]
        theorem: u8,
        #[arg(long, default_value_t = 5)]
        n_max: usize,
        #[arg(long, default_value_t = 5)]
        m_max: usize,
    },
    /// Compare the superseded m = 2 dimension claims with exact values
    Refute {
        /// Single value or inclusive range, e.g. 4 or 3..5
        #[arg(long)]
        n: IntRange,
    },
    /// Exact dimensions over a parameter grid, in- and out-of-range
    Sweep {
        #[arg(long)]
        family: Family,
        /// Single value or inclusive range, e.g. 4 or 1..5
        #[arg(long)]
        n: IntRange,
        #[arg(long)]
        m: IntRange,
    },
}

/// Inclusive integer range: `4` or `3..6` (meaning 3, 4, 5, 6).
#[derive(Clone, Copy, Debug)]
struct IntRange {
    lo: usize,
    hi: usize,
}

impl IntRange {
    fn iter(self) -> impl Iterator<Item = usize> {
        self.lo..=self.hi
    }
}

impl FromStr for IntRange {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parse = |t: &str| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| format!("expected a number or a..b range, got {s:?}"))
        };
        let (lo, hi) = match s.split_once("..") {
            Some((a, b)) => (parse(a)?, parse(b)?),
            None => {
                let v = parse(s)?;
                (v, v)
            }
        };
        if lo > hi {
            return Err(format!("empty range {s:?}"));
        }
        Ok(IntRange { lo, hi })
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(exit_code_for(&e))
        }
    }
}

fn exit_code_for(e: &anyhow::Error) -> u8 {
    let capped = match e.downcast_ref::<FamilyError>() {
        Some(FamilyError::SizeCapExceeded { .. }) => true,
        Some(FamilyError::Solve(SolveError::OrderTooLarge { .. })) => true,
        _ => matches!(e.downcast_ref::<SolveError>(), Some(SolveError::OrderTooLarge { .. })),
    };
    if capped {
        3
    } else {
        2
    }
}

fn run(cli: Cli) -> Result<bool> {
    if let Some(threads) = cli.threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global()
            .context("setting up the thread pool")?;
    }
    let cap = size_cap()?;
    match cli.command {
        Command::Build { family, n, m, out } => cmd_build(family, n, m, &out),
        Command::Dim { input, verbose } => cmd_dim(&input, verbose, cli.json, cap),
        Command::CheckSet { input, set } => cmd_check_set(&input, &set, cli.json),
        Command::Verify { theorem, n_max, m_max } => {
            cmd_verify(theorem, n_max, m_max, cli.json, cap)
        }
        Command::Refute { n } => cmd_refute(n, cli.json, cap),
        Command::Sweep { family, n, m } => cmd_sweep(family, n, m, cli.json, cap),
    }
}

/// Vertex cap for solver-backed commands; METRICDIM_SIZE_CAP overrides.
fn size_cap() -> Result<usize> {
    match env::var("METRICDIM_SIZE_CAP") {
        Ok(raw) => raw
            .trim()
            .parse()
            .with_context(|| format!("METRICDIM_SIZE_CAP must be an integer, got {raw:?}")),
        Err(env::VarError::NotPresent) => Ok(DEFAULT_SIZE_CAP),
        Err(e) => Err(e).context("reading METRICDIM_SIZE_CAP"),
    }
}

fn build_instance(family: Family, n: usize, m: usize) -> Result<FamilyInstance> {
    if n == 0 || m == 0 {
        bail!("family parameters start at 1, got n = {n}, m = {m}");
    }
    Ok(match family {
        Family::GridCorona => grid_corona(n, m),
        Family::CompleteProdCorona => kn_pm_corona(n, m),
    })
}

fn cmd_build(family: Family, n: usize, m: usize, out: &Path) -> Result<bool> {
    let inst = build_instance(family, n, m)?;
    save_graph(&inst.graph, out).with_context(|| format!("writing {}", out.display()))?;
    println!(
        "wrote {} ({} vertices, {} edges) and {}",
        out.display(),
        inst.graph.order(),
        inst.graph.edge_count(),
        labels_path(out).display(),
    );
    Ok(true)
}

fn load_capped(path: &Path, cap: usize) -> Result<Graph> {
    let g = load_graph(path).with_context(|| format!("reading {}", path.display()))?;
    if g.order() > cap {
        return Err(FamilyError::SizeCapExceeded { order: g.order(), cap }.into());
    }
    Ok(g)
}

fn cmd_dim(input: &Path, verbose: bool, json: bool, cap: usize) -> Result<bool> {
    let g = load_capped(input, cap)?;
    let cert = metric_dimension_exact(&g)?;
    if json {
        println!("{}", serde_json::to_string_pretty(&cert)?);
        return Ok(true);
    }
    if verbose {
        let dm = all_pairs_distances(&g)?;
        for size in cert.start_size..cert.dim {
            for (set, (a, b)) in failing_subsets(&dm, size) {
                println!(
                    "failing size {size}: {{{}}} cannot separate ({}, {})",
                    labels_of(&g, &set),
                    g.label(a),
                    g.label(b),
                );
            }
        }
    }
    println!("{cert}");
    Ok(true)
}

#[derive(Serialize)]
struct CheckSetOutput {
    set: Vec<String>,
    resolves: bool,
    witness_pair: Option<(String, String)>,
}

fn cmd_check_set(input: &Path, set: &str, json: bool) -> Result<bool> {
    let g = load_graph(input).with_context(|| format!("reading {}", input.display()))?;
    let labels = parse_label_list(set)?;
    let set = LandmarkSet::from_labels(&g, &labels)?;
    let dm = all_pairs_distances(&g)?;
    let resolves = is_resolving_set(&dm, &set);
    let pair = witness_pair(&dm, &set);
    debug_assert_eq!(resolves, pair.is_none());

    if json {
        let out = CheckSetOutput {
            set: labels.iter().map(|l| l.to_string()).collect(),
            resolves,
            witness_pair: pair.map(|(a, b)| (g.label(a).to_string(), g.label(b).to_string())),
        };
        println!("{}", serde_json::to_string_pretty(&out)?);
        return Ok(resolves);
    }

    let rendered: Vec<String> = labels.iter().map(|l| l.to_string()).collect();
    match pair {
        None => println!("set {{{}}} resolves the graph", rendered.join(", ")),
        Some((a, b)) => {
            println!("set {{{}}} does not resolve the graph", rendered.join(", "));
            println!(
                "unresolved pair: ({}, {}), shared representation {}",
                g.label(a),
                g.label(b),
                metric_representation(&dm, a, &set),
            );
        }
    }
    Ok(resolves)
}

fn ok_fail(ok: bool) -> &'static str {
    if ok {
        "ok"
    } else {
        "FAIL"
    }
}

fn theorem_table_header() -> String {
    format!(
        "{:<13}{:>3}{:>3}{:>9}{:>7}{:>14}{:>9}  {}",
        "family", "n", "m", "claimed", "exact", "construction", "formula", "verdict"
    )
}

fn theorem_table_row(s: &TheoremSummary) -> String {
    format!(
        "{:<13}{:>3}{:>3}{:>9}{:>7}{:>14}{:>9}  {}",
        s.family.to_string(),
        s.n,
        s.m,
        s.claimed,
        s.exact,
        ok_fail(s.construction_ok),
        s.formula_ok.map_or("-", ok_fail),
        if s.passed { "pass" } else { "FAIL" },
    )
}

fn cmd_verify(theorem: u8, n_max: usize, m_max: usize, json: bool, cap: usize) -> Result<bool> {
    let family = match theorem {
        3 => Family::GridCorona,
        4 => Family::CompleteProdCorona,
        other => bail!("unknown theorem {other}; expected 3 or 4"),
    };
    let mut rows: Vec<TheoremSummary> = Vec::new();
    for n in 3..=n_max {
        for m in 2..=m_max {
            rows.push(verify_theorem(family, n, m, cap)?.summary());
        }
    }
    let passed = rows.iter().filter(|r| r.passed).count();
    let all_pass = passed == rows.len();

    if json {
        println!("{}", serde_json::to_string_pretty(&rows)?);
    } else {
        println!("{}", theorem_table_header());
        for row in &rows {
            println!("{}", theorem_table_row(row));
        }
        println!("{passed} of {} instances pass", rows.len());
    }
    Ok(all_pass)
}

fn labels_of(g: &Graph, ids: &[VertexId]) -> String {
    ids.iter().map(|&v| g.label(v).to_string()).collect::<Vec<_>>().join(", ")
}

fn refutation_line(r: &Refutation, g: &Graph) -> String {
    let verdict = match r.status {
        RefutationStatus::Coincides => format!("values coincide (both {})", r.true_dim),
        RefutationStatus::Discrepancy if r.old_claim < r.true_dim => {
            let checked = r
                .evidence
                .exhausted
                .iter()
                .find(|e| e.size == r.old_claim)
                .map_or(0, |e| e.subsets_checked);
            format!("discrepancy confirmed (all {checked} size-{} subsets fail)", r.old_claim)
        }
        RefutationStatus::Discrepancy => format!(
            "discrepancy confirmed (size-{} witness {{{}}})",
            r.true_dim,
            labels_of(g, &r.evidence.witness_ids()),
        ),
    };
    format!(
        "  {}({},{}): superseded claim {}, exact {} -> {}",
        r.family, r.n, r.m, r.old_claim, r.true_dim, verdict
    )
}

#[derive(Serialize)]
struct RefuteOutput {
    n: usize,
    grid: RefutationSummary,
    complete: RefutationSummary,
    confirmed: bool,
}

fn cmd_refute(range: IntRange, json: bool, cap: usize) -> Result<bool> {
    let mut all_confirmed = true;
    let mut out = Vec::new();
    for n in range.iter() {
        let report = refute_old_theorems(n, cap)?;
        all_confirmed &= report.confirmed();
        if json {
            out.push(RefuteOutput {
                n,
                grid: report.grid.summary(),
                complete: report.complete.summary(),
                confirmed: report.confirmed(),
            });
        } else {
            let grid_graph = grid_corona(n, 2).graph;
            let complete_graph = kn_pm_corona(n, 2).graph;
            println!("n = {n}");
            println!("{}", refutation_line(&report.grid, &grid_graph));
            println!("{}", refutation_line(&report.complete, &complete_graph));
        }
    }
    if json {
        println!("{}", serde_json::to_string_pretty(&out)?);
    }
    Ok(all_confirmed)
}

#[derive(Serialize)]
struct SweepCell {
    family: Family,
    n: usize,
    m: usize,
    dim: usize,
    in_claimed_range: bool,
}

fn cmd_sweep(family: Family, ns: IntRange, ms: IntRange, json: bool, cap: usize) -> Result<bool> {
    let mut cells: Vec<SweepCell> = Vec::new();
    for n in ns.iter() {
        for m in ms.iter() {
            let inst = build_instance(family, n, m)?;
            let order = inst.graph.order();
            if order > cap {
                return Err(FamilyError::SizeCapExceeded { order, cap }.into());
            }
            let cert = metric_dimension_exact(&inst.graph)?;
            cells.push(SweepCell {
                family,
                n,
                m,
                dim: cert.dim,
                in_claimed_range: claimed_dim(family, n, m).is_ok(),
            });
        }
    }

    if json {
        println!("{}", serde_json::to_string_pretty(&cells)?);
        return Ok(true);
    }
    println!("exact dimensions for {family} (* = outside the claimed range)");
    let mut header = format!("{:>5}", "n\\m");
    for m in ms.iter() {
        header.push_str(&format!("{m:>5}"));
    }
    println!("{header}");
    for n in ns.iter() {
        let mut row = format!("{n:>5}");
        for cell in cells.iter().filter(|c| c.n == n) {
            let marker = if cell.in_claimed_range { "" } else { "*" };
            row.push_str(&format!("{:>5}", format!("{}{}", cell.dim, marker)));
        }
        println!("{row}");
    }
    Ok(true)
}
