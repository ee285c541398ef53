//! Metric representations and the resolving-set predicate.

use std::fmt;

use serde::Serialize;

use crate::distance::DistanceMatrix;
use crate::graph::{Graph, GraphError, VertexId, VertexLabel};

/// Ordered set of distinct landmark vertices.
///
/// The order is significant: representation coordinates follow it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LandmarkSet {
    ids: Vec<VertexId>,
}

impl LandmarkSet {
    pub fn new(g: &Graph, ids: Vec<VertexId>) -> Result<Self, GraphError> {
        for (i, &v) in ids.iter().enumerate() {
            if !g.contains(v) {
                return Err(GraphError::VertexOutOfRange { id: v.0, order: g.order() });
            }
            if ids[..i].contains(&v) {
                return Err(GraphError::DuplicateLandmark(v));
            }
        }
        Ok(Self { ids })
    }

    pub fn from_labels(g: &Graph, labels: &[VertexLabel]) -> Result<Self, GraphError> {
        let mut ids = Vec::with_capacity(labels.len());
        for label in labels {
            let v = g
                .vertex(label)
                .ok_or_else(|| GraphError::UnknownLabel(label.clone()))?;
            if ids.contains(&v) {
                return Err(GraphError::DuplicateLandmark(v));
            }
            ids.push(v);
        }
        Ok(Self { ids })
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.ids
    }

    pub fn len(&self) -> usize {
        self.ids.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ids.is_empty()
    }
}

/// Distance vector of one vertex with respect to an ordered landmark set.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Representation(pub Vec<u32>);

impl fmt::Display for Representation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, d) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{d}")?;
        }
        write!(f, ")")
    }
}

/// r(v | S): distances from `v` to each landmark, in landmark order.
pub fn metric_representation(
    dm: &DistanceMatrix,
    v: VertexId,
    s: &LandmarkSet,
) -> Representation {
    Representation(s.ids.iter().map(|&w| dm.get(v, w)).collect())
}

/// True iff all vertices receive pairwise distinct representations.
pub fn is_resolving_set(dm: &DistanceMatrix, s: &LandmarkSet) -> bool {
    let mut reps: Vec<Vec<u32>> = (0..dm.order())
        .map(|v| s.ids.iter().map(|&w| dm.get_raw(v, w.0)).collect())
        .collect();
    reps.sort_unstable();
    reps.windows(2).all(|w| w[0] != w[1])
}

/// Least id-ordered pair of vertices that `s` fails to separate, if any.
///
/// Deliberately compares pairs directly rather than reusing
/// [`is_resolving_set`], so the two can cross-check each other.
pub fn witness_pair(dm: &DistanceMatrix, s: &LandmarkSet) -> Option<(VertexId, VertexId)> {
    let ids: Vec<usize> = s.ids.iter().map(|v| v.0).collect();
    witness_pair_ids(dm, &ids).map(|(u, v)| (VertexId(u), VertexId(v)))
}

pub(crate) fn witness_pair_ids(dm: &DistanceMatrix, ids: &[usize]) -> Option<(usize, usize)> {
    let n = dm.order();
    for u in 0..n {
        for v in u + 1..n {
            if ids.iter().all(|&w| dm.get_raw(u, w) == dm.get_raw(v, w)) {
                return Some((u, v));
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::distance::all_pairs_distances;
    use crate::graph::{complete_graph, corona_k1, cycle_graph, path_graph};

    fn set(g: &Graph, labels: &[&str]) -> LandmarkSet {
        let parsed: Vec<VertexLabel> = labels.iter().map(|s| s.parse().unwrap()).collect();
        LandmarkSet::from_labels(g, &parsed).unwrap()
    }

    #[test]
    fn path_is_resolved_by_one_end() {
        let p5 = path_graph(5).unwrap();
        let dm = all_pairs_distances(&p5).unwrap();
        assert!(is_resolving_set(&dm, &set(&p5, &["b(1)"])));
        assert!(is_resolving_set(&dm, &set(&p5, &["b(5)"])));
        let mid = set(&p5, &["b(3)"]);
        assert!(!is_resolving_set(&dm, &mid));
        assert_eq!(witness_pair(&dm, &mid), Some((VertexId(0), VertexId(4))));
    }

    #[test]
    fn complete_graph_needs_all_but_one() {
        let k4 = complete_graph(4).unwrap();
        let dm = all_pairs_distances(&k4).unwrap();
        assert!(is_resolving_set(&dm, &set(&k4, &["b(1)", "b(2)", "b(3)"])));
        let two = set(&k4, &["b(1)", "b(2)"]);
        assert!(!is_resolving_set(&dm, &two));
        assert_eq!(witness_pair(&dm, &two), Some((VertexId(2), VertexId(3))));
    }

    #[test]
    fn cycle_needs_two() {
        let c6 = cycle_graph(6).unwrap();
        let dm = all_pairs_distances(&c6).unwrap();
        assert!(!is_resolving_set(&dm, &set(&c6, &["b(1)"])));
        assert!(is_resolving_set(&dm, &set(&c6, &["b(1)", "b(2)"])));
        // antipodal pair fails: both sides of the cycle mirror each other
        assert!(!is_resolving_set(&dm, &set(&c6, &["b(1)", "b(4)"])));
    }

    #[test]
    fn empty_set_resolves_only_trivial_graph() {
        let k1 = complete_graph(1).unwrap();
        let dm = all_pairs_distances(&k1).unwrap();
        assert!(is_resolving_set(&dm, &LandmarkSet::new(&k1, vec![]).unwrap()));

        let p2 = path_graph(2).unwrap();
        let dm = all_pairs_distances(&p2).unwrap();
        let empty = LandmarkSet::new(&p2, vec![]).unwrap();
        assert!(!is_resolving_set(&dm, &empty));
        assert_eq!(witness_pair(&dm, &empty), Some((VertexId(0), VertexId(1))));
    }

    #[test]
    fn full_vertex_set_always_resolves() {
        for g in [
            path_graph(4).unwrap(),
            cycle_graph(5).unwrap(),
            corona_k1(&complete_graph(3).unwrap()),
        ] {
            let dm = all_pairs_distances(&g).unwrap();
            let all = LandmarkSet::new(&g, g.vertices().collect()).unwrap();
            assert!(is_resolving_set(&dm, &all));
            assert_eq!(witness_pair(&dm, &all), None);
        }
    }

    #[test]
    fn representation_display_and_values() {
        let p4 = path_graph(4).unwrap();
        let dm = all_pairs_distances(&p4).unwrap();
        let s = set(&p4, &["b(1)", "b(4)"]);
        let rep = metric_representation(&dm, VertexId(1), &s);
        assert_eq!(rep, Representation(vec![1, 2]));
        assert_eq!(rep.to_string(), "(1,2)");
        assert_eq!(Representation(vec![]).to_string(), "()");
    }

    #[test]
    fn landmark_validation() {
        let p3 = path_graph(3).unwrap();
        assert_eq!(
            LandmarkSet::new(&p3, vec![VertexId(0), VertexId(0)]).unwrap_err(),
            GraphError::DuplicateLandmark(VertexId(0))
        );
        assert_eq!(
            LandmarkSet::new(&p3, vec![VertexId(7)]).unwrap_err(),
            GraphError::VertexOutOfRange { id: 7, order: 3 }
        );
        assert_eq!(
            LandmarkSet::from_labels(&p3, &["b(9)".parse().unwrap()]).unwrap_err(),
            GraphError::UnknownLabel("b(9)".parse().unwrap())
        );
    }

    #[test]
    fn two_landmarks_cannot_resolve_the_wide_grid_corona() {
        // S = {u11, v11} collapses many pairs; the least one is
        // (v12, v21), and each (u_i1, v_{i+1,1}) pair collapses too.
        let inst = crate::families::grid_corona(4, 2);
        let dm = all_pairs_distances(&inst.graph).unwrap();
        let s = set(&inst.graph, &["u(1,1)", "v(1,1)"]);
        assert!(!is_resolving_set(&dm, &s));
        let (a, b) = witness_pair(&dm, &s).unwrap();
        assert_eq!(
            (inst.graph.label(a).to_string(), inst.graph.label(b).to_string()),
            ("v(1,2)".to_string(), "v(2,1)".to_string())
        );
        for i in 2..=3 {
            let pendant = inst.graph.vertex(&format!("u({i},1)").parse().unwrap()).unwrap();
            let next = inst.graph.vertex(&format!("v({},1)", i + 1).parse().unwrap()).unwrap();
            assert_eq!(
                metric_representation(&dm, pendant, &s),
                metric_representation(&dm, next, &s)
            );
        }
    }

    #[test]
    fn landmark_order_changes_representation() {
        let p4 = path_graph(4).unwrap();
        let dm = all_pairs_distances(&p4).unwrap();
        let fwd = set(&p4, &["b(1)", "b(4)"]);
        let rev = set(&p4, &["b(4)", "b(1)"]);
        let v = VertexId(0);
        assert_eq!(metric_representation(&dm, v, &fwd), Representation(vec![0, 3]));
        assert_eq!(metric_representation(&dm, v, &rev), Representation(vec![3, 0]));
    }
}
