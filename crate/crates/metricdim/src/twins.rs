//! Twin vertices and the lower bound they impose on resolving sets.
//!
//! Vertices u and v are twins when d(u, x) = d(v, x) for every other
//! vertex x. No landmark outside the pair can separate twins, so a
//! resolving set must contain all but at most one member of each twin
//! class. The relation is transitive (comparing u ~ v via a third vertex
//! pins d(u, v) down as well), which lets classes be built by comparing
//! each vertex against one representative.

use crate::distance::DistanceMatrix;
use crate::graph::VertexId;

/// Partition of the vertex set into twin equivalence classes.
///
/// Classes are ordered by their least member and each class lists its
/// members in ascending id order. Singleton classes are included.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwinPartition {
    classes: Vec<Vec<VertexId>>,
    order: usize,
}

impl TwinPartition {
    pub fn classes(&self) -> &[Vec<VertexId>] {
        &self.classes
    }

    /// Classes with two or more members, i.e. the actual twin groups.
    pub fn nontrivial_classes(&self) -> impl Iterator<Item = &Vec<VertexId>> {
        self.classes.iter().filter(|c| c.len() > 1)
    }

    /// Least possible size of a resolving set implied by the partition.
    ///
    /// Each class forces |class| - 1 landmarks, and any graph with at
    /// least two vertices needs at least one.
    pub fn lower_bound(&self) -> usize {
        if self.order <= 1 {
            return 0;
        }
        let forced: usize = self.classes.iter().map(|c| c.len() - 1).sum();
        forced.max(1)
    }
}

fn twins(dm: &DistanceMatrix, u: usize, v: usize) -> bool {
    (0..dm.order())
        .filter(|&x| x != u && x != v)
        .all(|x| dm.get_raw(u, x) == dm.get_raw(v, x))
}

/// Group all vertices into twin classes.
pub fn twin_classes(dm: &DistanceMatrix) -> TwinPartition {
    let mut classes: Vec<Vec<VertexId>> = Vec::new();
    for v in 0..dm.order() {
        match classes.iter_mut().find(|c| twins(dm, c[0].0, v)) {
            Some(class) => class.push(VertexId(v)),
            None => classes.push(vec![VertexId(v)]),
        }
    }
    TwinPartition { classes, order: dm.order() }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::distance::all_pairs_distances;
    use crate::graph::{
        attach_pendant, cartesian_product, complete_graph, corona_k1, cycle_graph, path_graph,
    };

    fn partition(g: &crate::graph::Graph) -> TwinPartition {
        twin_classes(&all_pairs_distances(g).unwrap())
    }

    #[test]
    fn complete_graph_is_one_class() {
        let p = partition(&complete_graph(5).unwrap());
        assert_eq!(p.classes().len(), 1);
        assert_eq!(p.classes()[0].len(), 5);
        assert_eq!(p.lower_bound(), 4);
    }

    #[test]
    fn long_paths_have_no_twins() {
        let p = partition(&path_graph(5).unwrap());
        assert_eq!(p.classes().len(), 5);
        assert_eq!(p.nontrivial_classes().count(), 0);
        assert_eq!(p.lower_bound(), 1);
    }

    #[test]
    fn path_of_three_pairs_its_ends() {
        let p = partition(&path_graph(3).unwrap());
        assert_eq!(
            p.classes(),
            &[vec![VertexId(0), VertexId(2)], vec![VertexId(1)]]
        );
        assert_eq!(p.lower_bound(), 1);
    }

    #[test]
    fn four_cycle_has_antipodal_twins() {
        let p = partition(&cycle_graph(4).unwrap());
        assert_eq!(
            p.classes(),
            &[vec![VertexId(0), VertexId(2)], vec![VertexId(1), VertexId(3)]]
        );
        assert_eq!(p.lower_bound(), 2);
    }

    #[test]
    fn star_leaves_are_twins() {
        // K1 with three pendants attached in sequence
        let mut g = complete_graph(1).unwrap();
        for _ in 0..3 {
            g = attach_pendant(&g, VertexId(0));
        }
        let p = partition(&g);
        assert_eq!(p.classes().len(), 2);
        assert_eq!(p.lower_bound(), 2);
    }

    #[test]
    fn trivial_graph_needs_nothing() {
        let p = partition(&complete_graph(1).unwrap());
        assert_eq!(p.lower_bound(), 0);
        let p = partition(&complete_graph(2).unwrap());
        assert_eq!(p.lower_bound(), 1);
    }

    #[test]
    fn pendants_break_all_twins_in_coronas() {
        for g in [
            corona_k1(&complete_graph(4).unwrap()),
            corona_k1(&cartesian_product(&path_graph(3).unwrap(), &path_graph(2).unwrap()).unwrap()),
            corona_k1(&cycle_graph(4).unwrap()),
        ] {
            let p = partition(&g);
            assert_eq!(p.nontrivial_classes().count(), 0, "corona should be twin-free");
            assert_eq!(p.lower_bound(), 1);
        }
    }
}
