//! Exact metric dimension by exhaustive search, with certificates.
//!
//! The solver walks subset sizes upward from the twin-class lower bound
//! and, within a size, scans k-combinations in lexicographic order. The
//! first resolving subset found is the answer; every smaller size is
//! fully enumerated and the counts are recorded in the certificate.
//!
//! Parallelism never changes the result: workers claim disjoint blocks of
//! combination ranks and race on an atomic minimum of successful ranks.
//! A block whose range lies above the current minimum is skipped, which
//! can only drop combinations that are lexicographically later than the
//! eventual winner, so the returned witness is always the globally least
//! resolving subset of its size.

use std::fmt;
use std::sync::atomic::{AtomicU64, Ordering};
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::distance::{all_pairs_distances, DistanceMatrix};
use crate::graph::{attach_pendant, Graph, GraphError, VertexId};
use crate::subsets::{binomial, next_combination, unrank_combination};
use crate::twins::twin_classes;

/// Largest graph order the solver accepts. Keeps every combination rank
/// representable in a `u64`.
pub const MAX_SOLVE_ORDER: usize = 64;

/// Combination ranks per parallel work block.
const BLOCK: u64 = 8192;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolveError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("graph order {order} exceeds the solver limit of {MAX_SOLVE_ORDER} vertices")]
    OrderTooLarge { order: usize },
}

/// Record of one fully enumerated subset size that contained no resolving
/// set. `subsets_checked` always equals `subsets_total` = C(order, size).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SizeEvidence {
    pub size: usize,
    pub subsets_checked: u64,
    pub subsets_total: u64,
}

/// Outcome of an exact solve.
///
/// The certificate is self-contained: the witness shows `dim` suffices,
/// the `exhausted` entries show every size from `start_size` up to
/// `dim - 1` was enumerated in full, and sizes below `start_size` are
/// excluded by the twin-class bound (each class of t mutual twins forces
/// t - 1 landmarks). Everything except `solve_time_ms` is deterministic
/// for a given graph.
#[derive(Clone, Debug, Serialize)]
pub struct DimensionCertificate {
    pub order: usize,
    pub dim: usize,
    /// Vertex ids of the lexicographically least minimum resolving set.
    pub witness: Vec<usize>,
    pub witness_labels: Vec<String>,
    pub twin_lower_bound: usize,
    /// Twin classes with two or more members, as label lists.
    pub nontrivial_twin_classes: Vec<Vec<String>>,
    /// First size searched; sizes below it are skipped via the twin bound.
    pub start_size: usize,
    pub exhausted: Vec<SizeEvidence>,
    pub solve_time_ms: f64,
}

impl DimensionCertificate {
    pub fn witness_ids(&self) -> Vec<VertexId> {
        self.witness.iter().map(|&v| VertexId(v)).collect()
    }

    /// Re-check the certificate's own claims against a graph: the witness
    /// resolves, its size equals `dim`, and the exhaustion counts cover
    /// every size from `start_size` to `dim - 1` in full.
    pub fn is_consistent_with(&self, g: &Graph) -> bool {
        if g.order() != self.order || self.witness.len() != self.dim {
            return false;
        }
        let Ok(dm) = all_pairs_distances(g) else {
            return false;
        };
        if crate::resolving::witness_pair_ids(&dm, &self.witness).is_some() {
            return false;
        }
        let expected: Vec<usize> = (self.start_size..self.dim).collect();
        let sizes: Vec<usize> = self.exhausted.iter().map(|e| e.size).collect();
        sizes == expected
            && self.exhausted.iter().all(|e| {
                e.subsets_total == binomial(self.order, e.size)
                    && e.subsets_checked == e.subsets_total
            })
    }
}

impl fmt::Display for DimensionCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "order = {}", self.order)?;
        writeln!(f, "dim = {}", self.dim)?;
        writeln!(f, "witness = {{{}}}", self.witness_labels.join(", "))?;
        writeln!(f, "twin lower bound = {}", self.twin_lower_bound)?;
        if self.nontrivial_twin_classes.is_empty() {
            writeln!(f, "nontrivial twin classes = none")?;
        } else {
            let classes: Vec<String> = self
                .nontrivial_twin_classes
                .iter()
                .map(|c| format!("{{{}}}", c.join(", ")))
                .collect();
            writeln!(f, "nontrivial twin classes = {}", classes.join(" "))?;
        }
        writeln!(f, "search start size = {}", self.start_size)?;
        for e in &self.exhausted {
            writeln!(
                f,
                "exhausted size {} = {}/{} subsets",
                e.size, e.subsets_checked, e.subsets_total
            )?;
        }
        write!(f, "wall time ms = {:.3}", self.solve_time_ms)
    }
}

/// Scratch space for resolving-set checks over one distance matrix.
struct Checker<'a> {
    dm: &'a DistanceMatrix,
    k: usize,
    reps: Vec<u32>,
    order: Vec<usize>,
}

impl<'a> Checker<'a> {
    fn new(dm: &'a DistanceMatrix, k: usize) -> Self {
        let n = dm.order();
        Checker { dm, k, reps: vec![0; n * k], order: Vec::with_capacity(n) }
    }

    fn is_resolving(&mut self, combo: &[usize]) -> bool {
        debug_assert_eq!(combo.len(), self.k);
        let n = self.dm.order();
        let k = self.k;
        for (t, &w) in combo.iter().enumerate() {
            let row = self.dm.row_raw(w);
            for v in 0..n {
                self.reps[v * k + t] = row[v];
            }
        }
        self.order.clear();
        self.order.extend(0..n);
        let reps = &self.reps;
        self.order
            .sort_unstable_by(|&a, &b| reps[a * k..a * k + k].cmp(&reps[b * k..b * k + k]));
        self.order
            .windows(2)
            .all(|w| reps[w[0] * k..w[0] * k + k] != reps[w[1] * k..w[1] * k + k])
    }
}

/// Find the lexicographically least resolving k-subset, in parallel.
/// Also returns how many subsets were checked; when the search fails the
/// count equals C(n, k) because no block can bail early.
fn search_size(dm: &DistanceMatrix, k: usize) -> (Option<Vec<usize>>, u64) {
    let n = dm.order();
    let total = binomial(n, k);
    if total == 0 {
        return (None, 0);
    }
    let best = AtomicU64::new(u64::MAX);
    let blocks = total.div_ceil(BLOCK);
    let checked: u64 = (0..blocks)
        .into_par_iter()
        .map_init(
            || Checker::new(dm, k),
            |checker, b| {
                let start = b * BLOCK;
                if start >= best.load(Ordering::Relaxed) {
                    return 0;
                }
                let end = (start + BLOCK).min(total);
                let mut combo = unrank_combination(start, n, k);
                let mut rank = start;
                let mut checked = 0u64;
                loop {
                    if rank >= best.load(Ordering::Relaxed) {
                        break;
                    }
                    checked += 1;
                    if checker.is_resolving(&combo) {
                        best.fetch_min(rank, Ordering::Relaxed);
                        break;
                    }
                    rank += 1;
                    if rank == end {
                        break;
                    }
                    let advanced = next_combination(&mut combo, n);
                    debug_assert!(advanced);
                }
                checked
            },
        )
        .sum();
    match best.load(Ordering::Relaxed) {
        u64::MAX => (None, checked),
        r => (Some(unrank_combination(r, n, k)), checked),
    }
}

/// Compute the exact metric dimension of a connected graph.
///
/// Returns the lexicographically least minimum resolving set together
/// with exhaustion evidence for every smaller size. Single-vertex graphs
/// get dimension 0 by convention (the empty set resolves them).
pub fn metric_dimension_exact(g: &Graph) -> Result<DimensionCertificate, SolveError> {
    let t0 = Instant::now();
    let order = g.order();
    if order > MAX_SOLVE_ORDER {
        return Err(SolveError::OrderTooLarge { order });
    }
    let dm = all_pairs_distances(g)?;
    let twins = twin_classes(&dm);
    let lower_bound = twins.lower_bound();
    let nontrivial_twin_classes: Vec<Vec<String>> = twins
        .nontrivial_classes()
        .map(|c| c.iter().map(|&v| g.label(v).to_string()).collect())
        .collect();

    let mut cert = DimensionCertificate {
        order,
        dim: 0,
        witness: Vec::new(),
        witness_labels: Vec::new(),
        twin_lower_bound: lower_bound,
        nontrivial_twin_classes,
        start_size: lower_bound,
        exhausted: Vec::new(),
        solve_time_ms: 0.0,
    };
    if order == 1 {
        cert.solve_time_ms = t0.elapsed().as_secs_f64() * 1e3;
        return Ok(cert);
    }

    for k in lower_bound..order {
        let (found, checked) = search_size(&dm, k);
        match found {
            Some(combo) => {
                cert.dim = k;
                cert.witness_labels =
                    combo.iter().map(|&v| g.label(VertexId(v)).to_string()).collect();
                cert.witness = combo;
                cert.solve_time_ms = t0.elapsed().as_secs_f64() * 1e3;
                return Ok(cert);
            }
            None => {
                debug_assert_eq!(checked, binomial(order, k));
                cert.exhausted.push(SizeEvidence {
                    size: k,
                    subsets_checked: checked,
                    subsets_total: binomial(order, k),
                });
            }
        }
    }
    unreachable!("all but one vertex always form a resolving set")
}

/// Sequential stream of every failing subset of one size, in lexicographic
/// order, each with the least vertex pair it cannot separate. Backs the
/// spot-checkable verbose output; the certificate itself stores counts only.
pub fn failing_subsets(
    dm: &DistanceMatrix,
    size: usize,
) -> impl Iterator<Item = (Vec<VertexId>, (VertexId, VertexId))> + '_ {
    let n = dm.order();
    let total = binomial(n, size);
    let mut combo: Vec<usize> = (0..size).collect();
    let mut remaining = total;
    std::iter::from_fn(move || {
        while remaining > 0 {
            remaining -= 1;
            let current = combo.clone();
            if remaining > 0 {
                next_combination(&mut combo, n);
            }
            if let Some((u, v)) = crate::resolving::witness_pair_ids(dm, &current) {
                return Some((
                    current.into_iter().map(VertexId).collect(),
                    (VertexId(u), VertexId(v)),
                ));
            }
        }
        None
    })
}

/// Check the pendant sandwich bound at `v`: attaching one pendant vertex
/// never lowers the dimension and raises it by at most one.
pub fn pendant_bound_check(g: &Graph, v: VertexId) -> Result<bool, SolveError> {
    if g.order() < 2 {
        return Err(GraphError::OrderTooSmall { min: 2, got: g.order() }.into());
    }
    if !g.contains(v) {
        return Err(GraphError::VertexOutOfRange { id: v.0, order: g.order() }.into());
    }
    let base = metric_dimension_exact(g)?;
    let extended = metric_dimension_exact(&attach_pendant(g, v))?;
    Ok(base.dim <= extended.dim && extended.dim <= base.dim + 1)
}
