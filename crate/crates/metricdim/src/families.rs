//! The two corona-of-product families, their claimed dimensions, and the
//! machinery that checks the claims against the exact solver.
//!
//! The grid corona is `(P_n x P_m) . K1` (a path-by-path grid with one
//! pendant per vertex); the complete-product corona is `(K_n x P_m) . K1`.
//! For each family there is a constructed landmark set, a claimed
//! dimension value, and (for the grid) a closed-form representation
//! formula. [`verify_theorem`] checks all of them on one instance;
//! [`refute_old_theorems`] documents where the superseded claims
//! (dimension 2 for grids with m = 2, dimension n for the complete
//! product with m = 2) disagree with the exact values.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

use crate::distance::all_pairs_distances;
use crate::graph::{
    cartesian_product, complete_graph, corona_k1, path_graph, Graph, VertexId, VertexLabel,
};
use crate::resolving::{is_resolving_set, metric_representation, LandmarkSet, Representation};
use crate::solver::{metric_dimension_exact, DimensionCertificate, SolveError};

/// Default ceiling on instance order (2nm) for exact verification runs.
pub const DEFAULT_SIZE_CAP: usize = 60;
/// Default ceiling on nm for the product-only dimension check.
pub const DEFAULT_LEMMA4_CAP: usize = 30;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Family {
    #[serde(rename = "grid-corona")]
    GridCorona,
    #[serde(rename = "kn-pm-corona")]
    CompleteProdCorona,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::GridCorona => write!(f, "grid-corona"),
            Family::CompleteProdCorona => write!(f, "kn-pm-corona"),
        }
    }
}

impl FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "grid-corona" => Ok(Family::GridCorona),
            "kn-pm-corona" => Ok(Family::CompleteProdCorona),
            other => Err(format!(
                "unknown family {other:?}; expected grid-corona or kn-pm-corona"
            )),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("{family} claim does not cover n = {n}, m = {m}")]
    OutsideTheoremRange { family: Family, n: usize, m: usize },
    #[error("product dimension claim does not cover n = {n}, m = {m}")]
    OutsideLemmaRange { n: usize, m: usize },
    #[error("representation index (i, j) = ({i}, {j}) outside the {n} x {m} vertex grid")]
    IndexOutOfRange { i: usize, j: usize, n: usize, m: usize },
    #[error("instance has {order} vertices, above the size cap of {cap}")]
    SizeCapExceeded { order: usize, cap: usize },
    #[error("expected a {expected} instance, got {got}")]
    WrongFamily { expected: Family, got: Family },
    #[error(transparent)]
    Solve(#[from] SolveError),
}

/// One concrete family member: parameters plus the constructed graph.
///
/// Base vertices carry `Pair(i, j)` labels with id `(i-1)m + (j-1)`;
/// their pendants carry `Pendant(Pair(i, j))` at id `nm + (i-1)m + (j-1)`.
#[derive(Clone, Debug)]
pub struct FamilyInstance {
    pub family: Family,
    pub n: usize,
    pub m: usize,
    pub graph: Graph,
}

impl FamilyInstance {
    pub fn name(&self) -> String {
        format!("{}({},{})", self.family, self.n, self.m)
    }
}

/// Build `(P_n x P_m) . K1`.
pub fn grid_corona(n: usize, m: usize) -> FamilyInstance {
    assert!(n >= 1 && m >= 1, "family parameters start at 1");
    let grid = cartesian_product(
        &path_graph(n).expect("n >= 1"),
        &path_graph(m).expect("m >= 1"),
    )
    .expect("path factors carry base labels");
    FamilyInstance { family: Family::GridCorona, n, m, graph: corona_k1(&grid) }
}

/// Build `(K_n x P_m) . K1`.
pub fn kn_pm_corona(n: usize, m: usize) -> FamilyInstance {
    assert!(n >= 1 && m >= 1, "family parameters start at 1");
    let product = cartesian_product(
        &complete_graph(n).expect("n >= 1"),
        &path_graph(m).expect("m >= 1"),
    )
    .expect("factors carry base labels");
    FamilyInstance { family: Family::CompleteProdCorona, n, m, graph: corona_k1(&product) }
}

fn check_range(family: Family, n: usize, m: usize) -> Result<(), FamilyError> {
    if n >= 3 && m >= 2 {
        Ok(())
    } else {
        Err(FamilyError::OutsideTheoremRange { family, n, m })
    }
}

/// Landmark labels `{v_11, v_1m, v_nm}` for the grid corona, in that order.
pub fn theorem3_labels(n: usize, m: usize) -> Result<Vec<VertexLabel>, FamilyError> {
    check_range(Family::GridCorona, n, m)?;
    Ok(vec![
        VertexLabel::Pair(1, 1),
        VertexLabel::Pair(1, m),
        VertexLabel::Pair(n, m),
    ])
}

/// [`theorem3_labels`] bound to a grid-corona instance.
pub fn theorem3_set(inst: &FamilyInstance) -> Result<LandmarkSet, FamilyError> {
    if inst.family != Family::GridCorona {
        return Err(FamilyError::WrongFamily {
            expected: Family::GridCorona,
            got: inst.family,
        });
    }
    let labels = theorem3_labels(inst.n, inst.m)?;
    Ok(LandmarkSet::from_labels(&inst.graph, &labels).expect("labels exist in the instance"))
}

/// Closed-form representation of a grid-corona vertex with respect to
/// the landmark order of [`theorem3_labels`]. The base vertex `v_ij` maps
/// to `(i+j-2, m+i-j-1, m+n-i-j)`; its pendant adds one to every
/// coordinate.
pub fn theorem3_formula(
    n: usize,
    m: usize,
    i: usize,
    j: usize,
    pendant: bool,
) -> Result<Representation, FamilyError> {
    check_range(Family::GridCorona, n, m)?;
    if i < 1 || i > n || j < 1 || j > m {
        return Err(FamilyError::IndexOutOfRange { i, j, n, m });
    }
    let base = [i + j - 2, m + i - j - 1, m + n - i - j];
    let bump = usize::from(pendant);
    Ok(Representation(base.iter().map(|&d| (d + bump) as u32).collect()))
}

/// Landmark labels for the complete-product corona: `{v_11, v_21, v_3m}`
/// when n = 3, and `{v_1m, v_31, v_41, .., v_n1}` when n >= 4.
pub fn theorem4_labels(n: usize, m: usize) -> Result<Vec<VertexLabel>, FamilyError> {
    check_range(Family::CompleteProdCorona, n, m)?;
    if n == 3 {
        Ok(vec![
            VertexLabel::Pair(1, 1),
            VertexLabel::Pair(2, 1),
            VertexLabel::Pair(3, m),
        ])
    } else {
        let mut labels = vec![VertexLabel::Pair(1, m)];
        labels.extend((3..=n).map(|i| VertexLabel::Pair(i, 1)));
        Ok(labels)
    }
}

/// [`theorem4_labels`] bound to a complete-product-corona instance.
pub fn theorem4_set(inst: &FamilyInstance) -> Result<LandmarkSet, FamilyError> {
    if inst.family != Family::CompleteProdCorona {
        return Err(FamilyError::WrongFamily {
            expected: Family::CompleteProdCorona,
            got: inst.family,
        });
    }
    let labels = theorem4_labels(inst.n, inst.m)?;
    Ok(LandmarkSet::from_labels(&inst.graph, &labels).expect("labels exist in the instance"))
}

/// Dimension value claimed for an in-range instance: 3 for the grid
/// corona; 3 (n = 3) or n - 1 (n >= 4) for the complete-product corona.
/// Out-of-range parameters are refused rather than extrapolated.
pub fn claimed_dim(family: Family, n: usize, m: usize) -> Result<usize, FamilyError> {
    check_range(family, n, m)?;
    Ok(match family {
        Family::GridCorona => 3,
        Family::CompleteProdCorona => {
            if n == 3 {
                3
            } else {
                n - 1
            }
        }
    })
}

/// Full check of one instance: the constructed set resolves, the exact
/// dimension equals the claimed value, and (grid family) the closed-form
/// representations match BFS on every vertex.
#[derive(Clone, Debug)]
pub struct TheoremReport {
    pub instance: FamilyInstance,
    pub claimed_dim: usize,
    pub constructed_set: Vec<VertexLabel>,
    pub construction_resolves: bool,
    pub exact: DimensionCertificate,
    /// `None` for the complete-product family, which has no closed form.
    pub formula_matches_bfs: Option<bool>,
}

impl TheoremReport {
    pub fn passes(&self) -> bool {
        self.construction_resolves
            && self.exact.dim == self.claimed_dim
            && self.formula_matches_bfs.unwrap_or(true)
    }

    pub fn summary(&self) -> TheoremSummary {
        TheoremSummary {
            family: self.instance.family,
            n: self.instance.n,
            m: self.instance.m,
            claimed: self.claimed_dim,
            exact: self.exact.dim,
            construction_ok: self.construction_resolves,
            formula_ok: self.formula_matches_bfs,
            passed: self.passes(),
        }
    }
}

/// Table row form of a [`TheoremReport`].
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct TheoremSummary {
    pub family: Family,
    pub n: usize,
    pub m: usize,
    pub claimed: usize,
    pub exact: usize,
    pub construction_ok: bool,
    pub formula_ok: Option<bool>,
    pub passed: bool,
}

/// Run every check the family supports on one instance.
///
/// `cap` bounds the instance order 2nm; [`DEFAULT_SIZE_CAP`] keeps runs
/// at desk scale.
pub fn verify_theorem(
    family: Family,
    n: usize,
    m: usize,
    cap: usize,
) -> Result<TheoremReport, FamilyError> {
    let claimed = claimed_dim(family, n, m)?;
    let order = 2 * n * m;
    if order > cap {
        return Err(FamilyError::SizeCapExceeded { order, cap });
    }
    let instance = match family {
        Family::GridCorona => grid_corona(n, m),
        Family::CompleteProdCorona => kn_pm_corona(n, m),
    };
    let set = match family {
        Family::GridCorona => theorem3_set(&instance)?,
        Family::CompleteProdCorona => theorem4_set(&instance)?,
    };
    let dm = all_pairs_distances(&instance.graph).map_err(SolveError::from)?;
    let construction_resolves = is_resolving_set(&dm, &set);
    let exact = metric_dimension_exact(&instance.graph)?;

    let formula_matches_bfs = match family {
        Family::CompleteProdCorona => None,
        Family::GridCorona => {
            let mut all_match = true;
            'scan: for i in 1..=n {
                for j in 1..=m {
                    for pendant in [false, true] {
                        let id = (i - 1) * m + (j - 1) + if pendant { n * m } else { 0 };
                        let formula = theorem3_formula(n, m, i, j, pendant)?;
                        let bfs = metric_representation(&dm, VertexId(id), &set);
                        if formula != bfs {
                            all_match = false;
                            break 'scan;
                        }
                    }
                }
            }
            Some(all_match)
        }
    };

    let constructed_set = set
        .vertices()
        .iter()
        .map(|&v| instance.graph.label(v).clone())
        .collect();
    Ok(TheoremReport {
        instance,
        claimed_dim: claimed,
        constructed_set,
        construction_resolves,
        exact,
        formula_matches_bfs,
    })
}

/// Check that the product `K_n x P_m` alone (no corona) has dimension
/// n - 1. Covers n >= 3, m >= 1; `cap` bounds the order nm.
pub fn verify_lemma4(n: usize, m: usize, cap: usize) -> Result<bool, FamilyError> {
    if n < 3 || m < 1 {
        return Err(FamilyError::OutsideLemmaRange { n, m });
    }
    let order = n * m;
    if order > cap {
        return Err(FamilyError::SizeCapExceeded { order, cap });
    }
    let product = cartesian_product(
        &complete_graph(n).expect("n >= 3"),
        &path_graph(m).expect("m >= 1"),
    )
    .expect("factors carry base labels");
    let cert = metric_dimension_exact(&product)?;
    Ok(cert.dim == n - 1)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum RefutationStatus {
    /// The superseded claim disagrees with the exact value.
    Discrepancy,
    /// The superseded claim happens to equal the exact value.
    Coincides,
}

/// Exact dimension of one m = 2 instance set against a superseded claim.
#[derive(Clone, Debug)]
pub struct Refutation {
    pub family: Family,
    pub n: usize,
    pub m: usize,
    pub old_claim: usize,
    pub true_dim: usize,
    pub status: RefutationStatus,
    pub evidence: DimensionCertificate,
}

impl Refutation {
    /// The evidence settles the comparison: when the old claim is below
    /// the true value, that size appears fully exhausted; when above, the
    /// smaller witness in the certificate is itself the disproof.
    pub fn evidence_complete(&self) -> bool {
        self.true_dim == self.evidence.dim
            && (self.old_claim >= self.true_dim
                || self
                    .evidence
                    .exhausted
                    .iter()
                    .any(|e| e.size == self.old_claim && e.subsets_checked == e.subsets_total))
    }

    pub fn summary(&self) -> RefutationSummary {
        RefutationSummary {
            family: self.family,
            n: self.n,
            m: self.m,
            old_claim: self.old_claim,
            true_dim: self.true_dim,
            status: self.status,
            evidence_complete: self.evidence_complete(),
        }
    }
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct RefutationSummary {
    pub family: Family,
    pub n: usize,
    pub m: usize,
    pub old_claim: usize,
    pub true_dim: usize,
    pub status: RefutationStatus,
    pub evidence_complete: bool,
}

/// Both m = 2 refutations for one n.
#[derive(Clone, Debug)]
pub struct RefutationReport {
    pub n: usize,
    pub grid: Refutation,
    pub complete: Refutation,
}

impl RefutationReport {
    /// True when the comparison came out as documented: the grid claim is
    /// wrong for every n, and the complete-product claim is wrong for
    /// n >= 4 but coincidentally right at n = 3.
    pub fn confirmed(&self) -> bool {
        let grid_ok =
            self.grid.status == RefutationStatus::Discrepancy && self.grid.evidence_complete();
        let complete_ok = if self.n == 3 {
            self.complete.status == RefutationStatus::Coincides
        } else {
            self.complete.status == RefutationStatus::Discrepancy
                && self.complete.evidence_complete()
        };
        grid_ok && complete_ok
    }
}

fn refute_instance(
    instance: &FamilyInstance,
    old_claim: usize,
    cap: usize,
) -> Result<Refutation, FamilyError> {
    let order = instance.graph.order();
    if order > cap {
        return Err(FamilyError::SizeCapExceeded { order, cap });
    }
    let evidence = metric_dimension_exact(&instance.graph)?;
    let status = if evidence.dim == old_claim {
        RefutationStatus::Coincides
    } else {
        RefutationStatus::Discrepancy
    };
    Ok(Refutation {
        family: instance.family,
        n: instance.n,
        m: instance.m,
        old_claim,
        true_dim: evidence.dim,
        status,
        evidence,
    })
}

/// Compare both superseded m = 2 claims against exact values for one n:
/// dimension 2 for `(P_n x P_2) . K1` and dimension n for
/// `(K_n x P_2) . K1`.
pub fn refute_old_theorems(n: usize, cap: usize) -> Result<RefutationReport, FamilyError> {
    if n < 3 {
        return Err(FamilyError::OutsideTheoremRange { family: Family::GridCorona, n, m: 2 });
    }
    let grid = refute_instance(&grid_corona(n, 2), 2, cap)?;
    let complete = refute_instance(&kn_pm_corona(n, 2), n, cap)?;
    Ok(RefutationReport { n, grid, complete })
}
