//! Undirected simple graphs with structured vertex labels.
//!
//! Graphs are immutable once constructed; every builder returns a fresh
//! graph, so values can be shared freely across threads. Labels record how
//! each vertex arose (base family index, product pair, corona pendant) and
//! survive composition, which keeps solver output readable against the
//! family definitions.

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

/// Dense 0-based vertex index, stable for the lifetime of its graph.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct VertexId(pub usize);

impl VertexId {
    pub fn index(self) -> usize {
        self.0
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Structured vertex name. Indices are 1-based, matching the usual
/// `v_i` / `v_ij` notation: `Base(i)` is the i-th vertex of a base family,
/// `Pair(i, j)` a product vertex, `Pendant(inner)` a corona copy of the
/// vertex labeled `inner`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum VertexLabel {
    Base(usize),
    Pair(usize, usize),
    Pendant(Box<VertexLabel>),
}

impl VertexLabel {
    pub fn pendant_of(inner: VertexLabel) -> Self {
        VertexLabel::Pendant(Box::new(inner))
    }

    pub fn is_pendant(&self) -> bool {
        matches!(self, VertexLabel::Pendant(_))
    }
}

impl fmt::Display for VertexLabel {
    /// Text form used in files and on the command line: `b(i)` for base
    /// vertices, `v(i,j)` for product vertices, `u(i,j)` for the pendant of
    /// `v(i,j)`, and `p(<inner>)` for any other pendant.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VertexLabel::Base(i) => write!(f, "b({i})"),
            VertexLabel::Pair(i, j) => write!(f, "v({i},{j})"),
            VertexLabel::Pendant(inner) => match inner.as_ref() {
                VertexLabel::Pair(i, j) => write!(f, "u({i},{j})"),
                other => write!(f, "p({other})"),
            },
        }
    }
}

/// Error for label strings that do not follow the `b(i)` / `v(i,j)` /
/// `u(i,j)` / `p(..)` syntax.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("invalid vertex label {0:?}")]
pub struct LabelParseError(pub String);

impl FromStr for VertexLabel {
    type Err = LabelParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let trimmed = s.trim();
        match parse_label(trimmed) {
            Some((label, rest)) if rest.trim().is_empty() => Ok(label),
            _ => Err(LabelParseError(s.to_owned())),
        }
    }
}

fn parse_label(s: &str) -> Option<(VertexLabel, &str)> {
    let s = s.trim_start();
    if let Some(rest) = s.strip_prefix("b(") {
        let (i, rest) = parse_usize(rest)?;
        let rest = expect(rest, ')')?;
        Some((VertexLabel::Base(i), rest))
    } else if let Some(rest) = s.strip_prefix("v(") {
        let ((i, j), rest) = parse_index_pair(rest)?;
        Some((VertexLabel::Pair(i, j), rest))
    } else if let Some(rest) = s.strip_prefix("u(") {
        let ((i, j), rest) = parse_index_pair(rest)?;
        Some((VertexLabel::pendant_of(VertexLabel::Pair(i, j)), rest))
    } else if let Some(rest) = s.strip_prefix("p(") {
        let (inner, rest) = parse_label(rest)?;
        let rest = expect(rest, ')')?;
        Some((VertexLabel::pendant_of(inner), rest))
    } else {
        None
    }
}

fn parse_usize(s: &str) -> Option<(usize, &str)> {
    let s = s.trim_start();
    let end = s.find(|c: char| !c.is_ascii_digit()).unwrap_or(s.len());
    if end == 0 {
        return None;
    }
    let value = s[..end].parse().ok()?;
    Some((value, &s[end..]))
}

fn parse_index_pair(s: &str) -> Option<((usize, usize), &str)> {
    let (i, rest) = parse_usize(s)?;
    let rest = expect(rest, ',')?;
    let (j, rest) = parse_usize(rest)?;
    let rest = expect(rest, ')')?;
    Some(((i, j), rest))
}

fn expect(s: &str, c: char) -> Option<&str> {
    s.trim_start().strip_prefix(c)
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("graph order must be at least {min}, got {got}")]
    OrderTooSmall { min: usize, got: usize },
    #[error("vertex id {id} out of range for order {order}")]
    VertexOutOfRange { id: usize, order: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge between {0} and {1}")]
    DuplicateEdge(usize, usize),
    #[error("duplicate vertex label {0}")]
    DuplicateLabel(VertexLabel),
    #[error("cartesian product factors must carry only base labels")]
    NonBaseFactor,
    #[error("graph is disconnected; distances are defined for connected graphs only")]
    Disconnected,
    #[error("duplicate landmark {0}")]
    DuplicateLandmark(VertexId),
    #[error("no vertex labeled {0}")]
    UnknownLabel(VertexLabel),
}

/// Undirected simple graph of order at least one, with injective vertex
/// labels and sorted neighbor lists.
#[derive(Clone, Debug)]
pub struct Graph {
    adj: Vec<Vec<VertexId>>,
    labels: Vec<VertexLabel>,
    by_label: HashMap<VertexLabel, VertexId>,
    edge_count: usize,
}

impl Graph {
    /// Builds a graph from one label per vertex and a list of undirected
    /// edges over 0-based ids. Rejects the empty graph, out-of-range
    /// endpoints, self-loops, duplicate edges and duplicate labels.
    pub fn new(labels: Vec<VertexLabel>, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let n = labels.len();
        if n == 0 {
            return Err(GraphError::OrderTooSmall { min: 1, got: 0 });
        }
        let mut by_label = HashMap::with_capacity(n);
        for (id, label) in labels.iter().enumerate() {
            if by_label.insert(label.clone(), VertexId(id)).is_some() {
                return Err(GraphError::DuplicateLabel(label.clone()));
            }
        }
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            for id in [u, v] {
                if id >= n {
                    return Err(GraphError::VertexOutOfRange { id, order: n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            adj[u].push(VertexId(v));
            adj[v].push(VertexId(u));
        }
        for (u, list) in adj.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                return Err(GraphError::DuplicateEdge(u, w[0].0));
            }
        }
        Ok(Graph {
            adj,
            labels,
            by_label,
            edge_count: edges.len(),
        })
    }

    pub fn order(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        (0..self.order()).map(VertexId)
    }

    /// Neighbors of `v` in increasing id order. Panics if `v` is out of range.
    pub fn neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.adj[v.0]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adj[v.0].len()
    }

    pub fn label(&self, v: VertexId) -> &VertexLabel {
        &self.labels[v.0]
    }

    pub fn labels(&self) -> &[VertexLabel] {
        &self.labels
    }

    /// Looks a vertex up by its label.
    pub fn vertex(&self, label: &VertexLabel) -> Option<VertexId> {
        self.by_label.get(label).copied()
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        self.adj[u.0].binary_search(&v).is_ok()
    }

    /// All edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.vertices().flat_map(move |u| {
            self.neighbors(u)
                .iter()
                .copied()
                .filter(move |&v| u < v)
                .map(move |v| (u, v))
        })
    }

    pub fn contains(&self, v: VertexId) -> bool {
        v.0 < self.order()
    }
}

/// The path `P_n` on vertices `b(1)..b(n)`.
pub fn path_graph(n: usize) -> Result<Graph, GraphError> {
    if n == 0 {
        return Err(GraphError::OrderTooSmall { min: 1, got: 0 });
    }
    let labels = (1..=n).map(VertexLabel::Base).collect();
    let edges: Vec<_> = (0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect();
    Graph::new(labels, &edges)
}

/// The cycle `C_n`, `n >= 3`.
pub fn cycle_graph(n: usize) -> Result<Graph, GraphError> {
    if n < 3 {
        return Err(GraphError::OrderTooSmall { min: 3, got: n });
    }
    let labels = (1..=n).map(VertexLabel::Base).collect();
    let mut edges: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
    edges.push((n - 1, 0));
    Graph::new(labels, &edges)
}

/// The complete graph `K_n` on vertices `b(1)..b(n)`.
pub fn complete_graph(n: usize) -> Result<Graph, GraphError> {
    if n == 0 {
        return Err(GraphError::OrderTooSmall { min: 1, got: 0 });
    }
    let labels = (1..=n).map(VertexLabel::Base).collect();
    let mut edges = Vec::with_capacity(n * (n - 1) / 2);
    for i in 0..n {
        for j in i + 1..n {
            edges.push((i, j));
        }
    }
    Graph::new(labels, &edges)
}

/// Cartesian product `G x H`: vertices are pairs, and `(v_i,u_j)` is
/// adjacent to `(v_k,u_l)` exactly when the vertices agree in one
/// coordinate and are adjacent in the other factor.
///
/// Both factors must carry only `Base` labels; the product vertex built
/// from `b(i)` and `b(j)` is labeled `v(i,j)` and placed at id
/// `(i-1)*m + (j-1)` row-major, so ids are reproducible across runs.
pub fn cartesian_product(g: &Graph, h: &Graph) -> Result<Graph, GraphError> {
    for factor in [g, h] {
        if factor
            .labels()
            .iter()
            .any(|l| !matches!(l, VertexLabel::Base(_)))
        {
            return Err(GraphError::NonBaseFactor);
        }
    }
    let (n, m) = (g.order(), h.order());
    let base = |graph: &Graph, v: VertexId| match graph.label(v) {
        VertexLabel::Base(i) => *i,
        _ => unreachable!("checked above"),
    };
    let mut labels = Vec::with_capacity(n * m);
    for gv in g.vertices() {
        for hv in h.vertices() {
            labels.push(VertexLabel::Pair(base(g, gv), base(h, hv)));
        }
    }
    let id = |gv: VertexId, hv: VertexId| gv.0 * m + hv.0;
    let mut edges = Vec::new();
    for gv in g.vertices() {
        for hv in h.vertices() {
            for &hw in h.neighbors(hv) {
                if hv < hw {
                    edges.push((id(gv, hv), id(gv, hw)));
                }
            }
        }
        for &gw in g.neighbors(gv) {
            if gv < gw {
                for hv in h.vertices() {
                    edges.push((id(gv, hv), id(gw, hv)));
                }
            }
        }
    }
    Graph::new(labels, &edges)
}

/// Corona product `G . H`: one copy of `G` plus `|V(G)|` copies of `H`,
/// with every vertex of the i-th copy joined to the i-th vertex of `G`.
///
/// Copies occupy ids `[n, n + n*|H|)` in base-vertex order. Each copy
/// vertex is labeled by wrapping `Pendant` around its base vertex's label
/// until the label is unused, so labels stay injective even when `G`
/// already contains pendants.
pub fn corona(g: &Graph, h: &Graph) -> Graph {
    let n = g.order();
    let m = h.order();
    let mut labels: Vec<VertexLabel> = g.labels().to_vec();
    let mut taken: HashSet<VertexLabel> = g.labels().iter().cloned().collect();
    let mut edges: Vec<(usize, usize)> = g.edges().map(|(u, v)| (u.0, v.0)).collect();
    for gv in g.vertices() {
        let copy_start = n + gv.0 * m;
        for hv in h.vertices() {
            let mut label = VertexLabel::pendant_of(g.label(gv).clone());
            while taken.contains(&label) {
                label = VertexLabel::pendant_of(label);
            }
            taken.insert(label.clone());
            labels.push(label);
            // join edge to the base vertex
            edges.push((gv.0, copy_start + hv.0));
        }
        for (hu, hv) in h.edges() {
            edges.push((copy_start + hu.0, copy_start + hv.0));
        }
    }
    Graph::new(labels, &edges).expect("corona of valid graphs is valid")
}

/// Corona with `K_1`: attaches one pendant neighbor to every vertex,
/// doubling the order. The pendant of vertex id `k` gets id `n + k`.
pub fn corona_k1(g: &Graph) -> Graph {
    let k1 = complete_graph(1).expect("K1 is valid");
    corona(g, &k1)
}

/// Returns a copy of `g` with one new pendant vertex attached to `v`.
/// The new vertex gets id `n` and a fresh `Pendant` label.
pub fn attach_pendant(g: &Graph, v: VertexId) -> Graph {
    assert!(g.contains(v), "vertex {v} out of range");
    let n = g.order();
    let mut labels = g.labels().to_vec();
    let mut label = VertexLabel::pendant_of(g.label(v).clone());
    while g.vertex(&label).is_some() {
        label = VertexLabel::pendant_of(label);
    }
    labels.push(label);
    let mut edges: Vec<(usize, usize)> = g.edges().map(|(u, w)| (u.0, w.0)).collect();
    edges.push((v.0, n));
    Graph::new(labels, &edges).expect("pendant attachment preserves validity")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn path_graph_shapes() {
        let p1 = path_graph(1).unwrap();
        assert_eq!(p1.order(), 1);
        assert_eq!(p1.edge_count(), 0);

        let p4 = path_graph(4).unwrap();
        assert_eq!(p4.order(), 4);
        assert_eq!(p4.edge_count(), 3);
        assert_eq!(p4.degree(VertexId(0)), 1);
        assert_eq!(p4.degree(VertexId(1)), 2);

        assert_eq!(
            path_graph(0).unwrap_err(),
            GraphError::OrderTooSmall { min: 1, got: 0 }
        );
    }

    #[test]
    fn complete_graph_shapes() {
        let k3 = complete_graph(3).unwrap();
        assert_eq!(k3.order(), 3);
        assert_eq!(k3.edge_count(), 3);

        let k4 = complete_graph(4).unwrap();
        assert_eq!(k4.edge_count(), 6);
        assert_eq!(k4.degree(VertexId(0)), 3);

        let k1 = complete_graph(1).unwrap();
        assert_eq!(k1.order(), 1);
        assert_eq!(k1.edge_count(), 0);

        assert!(complete_graph(0).is_err());
    }

    #[test]
    fn cycle_graph_shapes() {
        let c4 = cycle_graph(4).unwrap();
        assert_eq!(c4.order(), 4);
        assert_eq!(c4.edge_count(), 4);
        assert!(c4.vertices().all(|v| c4.degree(v) == 2));
        assert!(cycle_graph(2).is_err());
    }

    #[test]
    fn product_of_paths_is_grid() {
        let p2 = path_graph(2).unwrap();
        let c4 = cartesian_product(&p2, &p2).unwrap();
        assert_eq!(c4.order(), 4);
        assert_eq!(c4.edge_count(), 4);
        assert!(c4.vertices().all(|v| c4.degree(v) == 2));

        let grid = cartesian_product(&path_graph(3).unwrap(), &p2).unwrap();
        assert_eq!(grid.order(), 6);
        assert_eq!(grid.edge_count(), 7);
    }

    #[test]
    fn product_edge_count_formula() {
        // |E(G x H)| = |V(G)|*|E(H)| + |V(H)|*|E(G)|
        for n in 1..=4 {
            for m in 1..=4 {
                let g = path_graph(n).unwrap();
                let h = complete_graph(m).unwrap();
                let prod = cartesian_product(&g, &h).unwrap();
                assert_eq!(prod.order(), n * m);
                assert_eq!(
                    prod.edge_count(),
                    n * h.edge_count() + m * g.edge_count(),
                    "edge count for P{n} x K{m}"
                );
            }
        }
    }

    #[test]
    fn triangular_prism() {
        // K3 x P2: adjacency enumerated by hand from the product rule.
        let prism = cartesian_product(
            &complete_graph(3).unwrap(),
            &path_graph(2).unwrap(),
        )
        .unwrap();
        assert_eq!(prism.order(), 6);
        assert_eq!(prism.edge_count(), 9);
        // two triangles ...
        for j in 0..2usize {
            let tri: Vec<_> = (0..3)
                .map(|i| prism.vertex(&VertexLabel::Pair(i + 1, j + 1)).unwrap())
                .collect();
            assert!(prism.has_edge(tri[0], tri[1]));
            assert!(prism.has_edge(tri[1], tri[2]));
            assert!(prism.has_edge(tri[0], tri[2]));
        }
        // ... connected by a perfect matching
        for i in 0..3usize {
            let a = prism.vertex(&VertexLabel::Pair(i + 1, 1)).unwrap();
            let b = prism.vertex(&VertexLabel::Pair(i + 1, 2)).unwrap();
            assert!(prism.has_edge(a, b));
            assert_eq!(prism.degree(a), 3);
        }
    }

    #[test]
    fn product_requires_base_labels() {
        let p2 = path_graph(2).unwrap();
        let grid = cartesian_product(&p2, &p2).unwrap();
        assert_eq!(
            cartesian_product(&grid, &p2).unwrap_err(),
            GraphError::NonBaseFactor
        );
    }

    #[test]
    fn corona_k1_doubles_order() {
        let p2 = path_graph(2).unwrap();
        let g = corona_k1(&p2);
        assert_eq!(g.order(), 4);
        assert_eq!(g.edge_count(), 3);
        // P2 . K1 is a path on 4 vertices: degrees 1,2,2,1
        let mut degrees: Vec<_> = g.vertices().map(|v| g.degree(v)).collect();
        degrees.sort_unstable();
        assert_eq!(degrees, vec![1, 1, 2, 2]);
    }

    #[test]
    fn corona_k1_of_grid() {
        let grid = cartesian_product(&path_graph(3).unwrap(), &path_graph(2).unwrap()).unwrap();
        let g = corona_k1(&grid);
        // 7 grid edges + 6 pendant edges
        assert_eq!(g.order(), 12);
        assert_eq!(g.edge_count(), 13);
        let pendants: Vec<_> = g.vertices().filter(|&v| g.label(v).is_pendant()).collect();
        assert_eq!(pendants.len(), 6);
        assert!(pendants.iter().all(|&v| g.degree(v) == 1));
        // pendants occupy the upper id range, pendant of id k at id n+k
        for &v in &pendants {
            assert!(v.0 >= 6);
            let inner = match g.label(v) {
                VertexLabel::Pendant(inner) => inner.as_ref().clone(),
                _ => unreachable!(),
            };
            let base = g.vertex(&inner).unwrap();
            assert_eq!(v.0, 6 + base.0);
            assert_eq!(g.neighbors(v), &[base]);
        }
    }

    #[test]
    fn corona_general_matches_definition() {
        // P2 . K2: 2 + 2*2 vertices; each copy is an edge joined to its base.
        let g = corona(&path_graph(2).unwrap(), &complete_graph(2).unwrap());
        assert_eq!(g.order(), 6);
        // 1 base edge + 2 copies * (1 internal + 2 join edges)
        assert_eq!(g.edge_count(), 7);
        assert_eq!(g.degree(VertexId(0)), 3);
        assert_eq!(g.degree(VertexId(2)), 2);
    }

    #[test]
    fn pendant_labels_stay_injective_under_iteration() {
        let g = corona_k1(&corona_k1(&path_graph(2).unwrap()));
        assert_eq!(g.order(), 8);
        let mut labels: Vec<_> = g.labels().to_vec();
        labels.sort();
        labels.dedup();
        assert_eq!(labels.len(), 8);
    }

    #[test]
    fn attach_pendant_adds_one_leaf() {
        let k3 = complete_graph(3).unwrap();
        let paw = attach_pendant(&k3, VertexId(1));
        assert_eq!(paw.order(), 4);
        assert_eq!(paw.edge_count(), 4);
        assert_eq!(paw.degree(VertexId(3)), 1);
        assert_eq!(paw.neighbors(VertexId(3)), &[VertexId(1)]);

        // attaching to a vertex that already owns a pendant picks a fresh label
        let g = corona_k1(&k3);
        let g2 = attach_pendant(&g, VertexId(0));
        let mut labels: Vec<_> = g2.labels().to_vec();
        labels.sort();
        labels.dedup();
        assert_eq!(labels.len(), g2.order());
    }

    #[test]
    fn rejects_malformed_graphs() {
        let b = |i| VertexLabel::Base(i);
        assert_eq!(
            Graph::new(vec![b(1), b(2)], &[(0, 0)]).unwrap_err(),
            GraphError::SelfLoop(0)
        );
        assert_eq!(
            Graph::new(vec![b(1), b(2)], &[(0, 1), (1, 0)]).unwrap_err(),
            GraphError::DuplicateEdge(0, 1)
        );
        assert_eq!(
            Graph::new(vec![b(1), b(1)], &[]).unwrap_err(),
            GraphError::DuplicateLabel(b(1))
        );
        assert_eq!(
            Graph::new(vec![b(1)], &[(0, 1)]).unwrap_err(),
            GraphError::VertexOutOfRange { id: 1, order: 1 }
        );
    }

    #[test]
    fn label_display_round_trips() {
        let cases = [
            "b(3)",
            "v(1,2)",
            "u(4,10)",
            "p(b(2))",
            "p(p(b(1)))",
        ];
        for s in cases {
            let label: VertexLabel = s.parse().unwrap();
            assert_eq!(label.to_string(), s);
        }
        // u(i,j) is the canonical form of p(v(i,j))
        let via_p: VertexLabel = "p(v(2,3))".parse().unwrap();
        assert_eq!(via_p.to_string(), "u(2,3)");
        assert!("w(1)".parse::<VertexLabel>().is_err());
        assert!("v(1)".parse::<VertexLabel>().is_err());
        assert!("b(1) extra".parse::<VertexLabel>().is_err());
    }
}
