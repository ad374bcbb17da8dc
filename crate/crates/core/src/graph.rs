//! Edge-weighted simple graphs on vertices `1..=n`, their edge ideals, and the
//! forbidden-induced-subgraph test for integral closedness.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::monomial::{Monomial, MonomialIdeal};

/// A simple graph with positive integer edge weights. Vertices are `1..=n`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct WeightedGraph {
    n: usize,
    /// Keyed by `(i, j)` with `i < j`.
    edges: BTreeMap<(usize, usize), u32>,
}

impl WeightedGraph {
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize, u32)>) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidGraph("graph needs at least one vertex".into()));
        }
        let mut map = BTreeMap::new();
        for (a, b, w) in edges {
            if a == b {
                return Err(Error::InvalidGraph(format!("loop at vertex {a}")));
            }
            for v in [a, b] {
                if v == 0 || v > n {
                    return Err(Error::UnknownVertex(v));
                }
            }
            if w == 0 {
                return Err(Error::InvalidGraph(format!("edge {a}-{b} has weight 0")));
            }
            let key = (a.min(b), a.max(b));
            if map.insert(key, w).is_some() {
                return Err(Error::InvalidGraph(format!("parallel edge {a}-{b}")));
            }
        }
        Ok(WeightedGraph { n, edges: map })
    }

    /// The cycle `C^n` with `e_i = x_i x_{i+1}` (indices mod `n`) of weight
    /// `weights[i-1]`.
    pub fn cycle(n: usize, weights: &[u32]) -> Result<Self> {
        if n < 3 {
            return Err(Error::InvalidGraph(format!("a cycle needs n >= 3, got {n}")));
        }
        if weights.len() != n {
            return Err(Error::InvalidGraph(format!(
                "cycle on {n} vertices needs {n} weights, got {}",
                weights.len()
            )));
        }
        WeightedGraph::new(n, (1..=n).map(|i| (i, i % n + 1, weights[i - 1])))
    }

    /// The path `P^n` with `e_i = x_i x_{i+1}` of weight `weights[i-1]`.
    pub fn path(n: usize, weights: &[u32]) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidGraph(format!("a path needs n >= 2, got {n}")));
        }
        if weights.len() != n - 1 {
            return Err(Error::InvalidGraph(format!(
                "path on {n} vertices needs {} weights, got {}",
                n - 1,
                weights.len()
            )));
        }
        WeightedGraph::new(n, (1..n).map(|i| (i, i + 1, weights[i - 1])))
    }

    pub fn num_vertices(&self) -> usize {
        self.n
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    /// Edges as `(i, j, w)` with `i < j`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, u32)> + '_ {
        self.edges.iter().map(|(&(a, b), &w)| (a, b, w))
    }

    pub fn weight(&self, a: usize, b: usize) -> Option<u32> {
        self.edges.get(&(a.min(b), a.max(b))).copied()
    }

    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        self.edges()
            .filter_map(|(a, b, _)| {
                if a == v {
                    Some(b)
                } else if b == v {
                    Some(a)
                } else {
                    None
                }
            })
            .collect()
    }

    pub fn is_trivially_weighted(&self) -> bool {
        self.edges.values().all(|&w| w == 1)
    }

    /// `I(G_w)`: one generator `x_i^w x_j^w` per edge, in a ring with one
    /// variable per vertex (isolated vertices included).
    pub fn edge_ideal(&self) -> MonomialIdeal {
        let gens = self
            .edges()
            .map(|(a, b, w)| {
                let mut e = vec![0; self.n];
                e[a - 1] = w;
                e[b - 1] = w;
                Monomial::new(e).expect("n >= 1")
            })
            .collect();
        MonomialIdeal::minimalize(self.n, gens).expect("edge generators are never units")
    }

    /// Edge ideal of the induced subgraph on `vertices`, kept in the ring of
    /// the whole graph.
    pub fn induced_edge_ideal(&self, vertices: &[usize]) -> Result<MonomialIdeal> {
        let (sub, labels) = self.induced_subgraph(vertices)?;
        let map: Vec<usize> = labels.iter().map(|&v| v - 1).collect();
        sub.edge_ideal().embed(self.n, &map)
    }

    /// The induced subgraph on `vertices`, relabeled `1..=|A|` in increasing
    /// order of the original labels. The second component maps new label
    /// `k` (at index `k-1`) to its original label.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Result<(WeightedGraph, Vec<usize>)> {
        let mut labels: Vec<usize> = vertices.to_vec();
        labels.sort_unstable();
        labels.dedup();
        if let Some(&bad) = labels.iter().find(|&&v| v == 0 || v > self.n) {
            return Err(Error::UnknownVertex(bad));
        }
        if labels.is_empty() {
            return Err(Error::InvalidGraph("induced subgraph on the empty set".into()));
        }
        let position = |v: usize| labels.binary_search(&v).ok().map(|p| p + 1);
        let edges: Vec<_> = self
            .edges()
            .filter_map(|(a, b, w)| Some((position(a)?, position(b)?, w)))
            .collect();
        Ok((WeightedGraph::new(labels.len(), edges)?, labels))
    }

    pub fn delete_vertex(&self, v: usize) -> Result<(WeightedGraph, Vec<usize>)> {
        if v == 0 || v > self.n {
            return Err(Error::UnknownVertex(v));
        }
        let rest: Vec<usize> = (1..=self.n).filter(|&u| u != v).collect();
        self.induced_subgraph(&rest)
    }

    fn nontrivial(&self, a: usize, b: usize) -> bool {
        self.weight(a, b).is_some_and(|w| w >= 2)
    }

    fn adjacent(&self, a: usize, b: usize) -> bool {
        self.weight(a, b).is_some()
    }

    /// Looks for one of the three forbidden induced subgraphs. Vertex sets in
    /// the certificate are sorted.
    pub fn integral_closure_certificate(&self) -> ClosureCertificate {
        let nontrivial: Vec<(usize, usize)> = self
            .edges()
            .filter(|&(_, _, w)| w >= 2)
            .map(|(a, b, _)| (a, b))
            .collect();

        // (1) induced 2-edge path with both edges non-trivial
        for v in 1..=self.n {
            let nbrs: Vec<usize> = self
                .neighbors(v)
                .into_iter()
                .filter(|&u| self.nontrivial(u, v))
                .collect();
            for (k, &u) in nbrs.iter().enumerate() {
                for &w in &nbrs[k + 1..] {
                    if !self.adjacent(u, w) {
                        let mut vs = vec![u, v, w];
                        vs.sort_unstable();
                        return ClosureCertificate::violated(ForbiddenPattern::NontrivialPath, vs);
                    }
                }
            }
        }

        // (2) two disjoint non-trivial edges inducing exactly themselves
        for (k, &(a, b)) in nontrivial.iter().enumerate() {
            for &(c, d) in &nontrivial[k + 1..] {
                if [c, d].contains(&a) || [c, d].contains(&b) {
                    continue;
                }
                let crossing = [(a, c), (a, d), (b, c), (b, d)]
                    .iter()
                    .any(|&(x, y)| self.adjacent(x, y));
                if !crossing {
                    let mut vs = vec![a, b, c, d];
                    vs.sort_unstable();
                    return ClosureCertificate::violated(
                        ForbiddenPattern::DisjointNontrivialEdges,
                        vs,
                    );
                }
            }
        }

        // (3) triangle with all edges non-trivial
        for &(a, b) in &nontrivial {
            for c in (b + 1)..=self.n {
                if self.nontrivial(a, c) && self.nontrivial(b, c) {
                    return ClosureCertificate::violated(
                        ForbiddenPattern::NontrivialTriangle,
                        vec![a, b, c],
                    );
                }
            }
        }

        ClosureCertificate {
            closed: true,
            violation: None,
        }
    }

    pub fn is_integrally_closed(&self) -> bool {
        self.integral_closure_certificate().closed
    }

    /// If the graph is a single cycle through all vertices, its vertices in
    /// cyclic order starting at vertex 1 (towards the smaller neighbor).
    pub fn cyclic_order(&self) -> Option<Vec<usize>> {
        if self.n < 3 || self.num_edges() != self.n {
            return None;
        }
        if (1..=self.n).any(|v| self.neighbors(v).len() != 2) {
            return None;
        }
        let mut order = vec![1];
        let mut prev = 0;
        let mut cur = 1;
        loop {
            let mut nbrs = self.neighbors(cur);
            nbrs.sort_unstable();
            let next = if nbrs[0] != prev { nbrs[0] } else { nbrs[1] };
            if next == 1 {
                break;
            }
            order.push(next);
            prev = cur;
            cur = next;
        }
        (order.len() == self.n).then_some(order)
    }
}

impl fmt::Debug for WeightedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "G[n={}]{{", self.n)?;
        for (k, (a, b, w)) in self.edges().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{a}-{b}:{w}")?;
        }
        write!(f, "}}")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ForbiddenPattern {
    /// Induced path on three vertices, both edges non-trivial.
    NontrivialPath,
    /// Two vertex-disjoint non-trivial edges with no edges between them.
    DisjointNontrivialEdges,
    /// Triangle with all three edges non-trivial.
    NontrivialTriangle,
}

impl ForbiddenPattern {
    pub fn id(self) -> u8 {
        match self {
            ForbiddenPattern::NontrivialPath => 1,
            ForbiddenPattern::DisjointNontrivialEdges => 2,
            ForbiddenPattern::NontrivialTriangle => 3,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClosureCertificate {
    pub closed: bool,
    pub violation: Option<(ForbiddenPattern, Vec<usize>)>,
}

impl ClosureCertificate {
    fn violated(pattern: ForbiddenPattern, vertices: Vec<usize>) -> Self {
        ClosureCertificate {
            closed: false,
            violation: Some((pattern, vertices)),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CycleCase {
    Trivial,
    OneEdge,
    TwoEdge,
    ThreeEdgeN6,
}

impl CycleCase {
    pub fn as_str(self) -> &'static str {
        match self {
            CycleCase::Trivial => "trivial",
            CycleCase::OneEdge => "one-edge",
            CycleCase::TwoEdge => "two-edge",
            CycleCase::ThreeEdgeN6 => "three-edge-n6",
        }
    }
}

impl fmt::Display for CycleCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for CycleCase {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "trivial" => Ok(CycleCase::Trivial),
            "one-edge" => Ok(CycleCase::OneEdge),
            "two-edge" => Ok(CycleCase::TwoEdge),
            "three-edge-n6" | "three-edge" => Ok(CycleCase::ThreeEdgeN6),
            other => Err(Error::InvalidGraph(format!("unknown cycle family {other:?}"))),
        }
    }
}

/// An integrally closed weighted cycle, rotated/reflected so that
/// `w_1 >= w_3 >= w_5` lexicographically dominate every other labeling.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycleFamily {
    pub n: usize,
    /// `weights[i-1]` is the weight of `e_i = x_i x_{i+1}` after normalization.
    pub weights: Vec<u32>,
    pub nontrivial_count: usize,
    pub case: CycleCase,
    /// `vertex_order[k]` is the original label of normalized vertex `x_{k+1}`.
    pub vertex_order: Vec<usize>,
}

impl CycleFamily {
    /// Convenience: classify the cycle built from `weights`.
    pub fn from_weights(weights: &[u32]) -> Result<Self> {
        classify_cycle(&WeightedGraph::cycle(weights.len(), weights)?)
    }

    pub fn graph(&self) -> WeightedGraph {
        WeightedGraph::cycle(self.n, &self.weights).expect("family holds a valid cycle")
    }

    pub fn ideal(&self) -> MonomialIdeal {
        self.graph().edge_ideal()
    }
}

fn normalization_key(w: &[u32]) -> Vec<u32> {
    w.iter()
        .step_by(2)
        .chain(w.iter().skip(1).step_by(2))
        .copied()
        .collect()
}

/// Classifies an integrally closed cycle by its number of non-trivial edges
/// and normalizes the labeling.
pub fn classify_cycle(g: &WeightedGraph) -> Result<CycleFamily> {
    let order = g.cyclic_order().ok_or(Error::NotACycle)?;
    let cert = g.integral_closure_certificate();
    if let Some((pattern, vertices)) = cert.violation {
        return Err(Error::NotIntegrallyClosed { pattern, vertices });
    }
    let n = order.len();
    let mut best: Option<(Vec<u32>, Vec<u32>, Vec<usize>)> = None;
    for reflect in [false, true] {
        let seq: Vec<usize> = if reflect {
            std::iter::once(order[0])
                .chain(order[1..].iter().rev().copied())
                .collect()
        } else {
            order.clone()
        };
        for shift in 0..n {
            let verts: Vec<usize> = (0..n).map(|k| seq[(k + shift) % n]).collect();
            let weights: Vec<u32> = (0..n)
                .map(|k| g.weight(verts[k], verts[(k + 1) % n]).expect("cycle edge"))
                .collect();
            let key = normalization_key(&weights);
            if best.as_ref().is_none_or(|(k, _, _)| key > *k) {
                best = Some((key, weights, verts));
            }
        }
    }
    let (_, weights, vertex_order) = best.expect("n >= 3");
    let nontrivial_count = weights.iter().filter(|&&w| w >= 2).count();
    let case = match nontrivial_count {
        0 => CycleCase::Trivial,
        1 => CycleCase::OneEdge,
        2 => CycleCase::TwoEdge,
        3 if n == 6 => CycleCase::ThreeEdgeN6,
        k => {
            return Err(Error::InvalidGraph(format!(
                "integrally closed {n}-cycle with {k} non-trivial edges"
            )))
        }
    };
    Ok(CycleFamily {
        n,
        weights,
        nontrivial_count,
        case,
        vertex_order,
    })
}

pub const MAX_ENUMERATION_VERTICES: usize = 6;
pub const MAX_ENUMERATION_WEIGHT: u32 = 3;

/// All weighted simple graphs on vertices `1..=n` with weights in
/// `1..=max_w`; smaller graphs appear as graphs with isolated vertices.
pub fn enumerate_weighted_graphs(n: usize, max_w: u32) -> Result<GraphEnumerator> {
    if n == 0 || n > MAX_ENUMERATION_VERTICES {
        return Err(Error::EnumerationCap(format!(
            "vertex count {n} outside 1..={MAX_ENUMERATION_VERTICES}"
        )));
    }
    if max_w == 0 || max_w > MAX_ENUMERATION_WEIGHT {
        return Err(Error::EnumerationCap(format!(
            "max weight {max_w} outside 1..={MAX_ENUMERATION_WEIGHT}"
        )));
    }
    let pairs: Vec<(usize, usize)> = (1..=n)
        .flat_map(|a| ((a + 1)..=n).map(move |b| (a, b)))
        .collect();
    Ok(GraphEnumerator {
        n,
        max_w,
        state: Some(vec![0; pairs.len()]),
        pairs,
    })
}

/// Odometer over edge states (0 = absent, otherwise the weight). Cloning
/// restarts nothing; call [`enumerate_weighted_graphs`] again for a fresh pass.
#[derive(Debug, Clone)]
pub struct GraphEnumerator {
    n: usize,
    max_w: u32,
    pairs: Vec<(usize, usize)>,
    state: Option<Vec<u32>>,
}

impl GraphEnumerator {
    /// `(max_w + 1)^(n choose 2)`.
    pub fn total(&self) -> u128 {
        (self.max_w as u128 + 1).pow(self.pairs.len() as u32)
    }
}

impl Iterator for GraphEnumerator {
    type Item = WeightedGraph;

    fn next(&mut self) -> Option<WeightedGraph> {
        let state = self.state.as_mut()?;
        let edges: Vec<_> = self
            .pairs
            .iter()
            .zip(state.iter())
            .filter(|(_, &s)| s > 0)
            .map(|(&(a, b), &s)| (a, b, s))
            .collect();
        let graph = WeightedGraph::new(self.n, edges).expect("enumerated graphs are simple");
        let mut k = 0;
        loop {
            if k == state.len() {
                self.state = None;
                break;
            }
            if state[k] < self.max_w {
                state[k] += 1;
                break;
            }
            state[k] = 0;
            k += 1;
        }
        Some(graph)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::ideal;

    #[test]
    fn cycle_and_path_builders() {
        let tri = WeightedGraph::cycle(3, &[1, 1, 1]).unwrap();
        assert_eq!(tri.num_edges(), 3);
        assert!(tri.is_trivially_weighted());
        let c6 = WeightedGraph::cycle(6, &[2, 1, 2, 1, 2, 1]).unwrap();
        assert_eq!(c6.weight(6, 1), Some(1));
        assert_eq!(c6.weight(5, 6), Some(2));
        let p4 = WeightedGraph::path(4, &[2, 1, 2]).unwrap();
        assert_eq!(p4.edges().collect::<Vec<_>>(), vec![(1, 2, 2), (2, 3, 1), (3, 4, 2)]);
        assert!(WeightedGraph::cycle(2, &[1, 1]).is_err());
        assert!(WeightedGraph::path(1, &[]).is_err());
        assert!(WeightedGraph::cycle(3, &[1, 0, 1]).is_err());
    }

    #[test]
    fn edge_ideal_examples() {
        let c3 = WeightedGraph::cycle(3, &[2, 1, 1]).unwrap();
        assert_eq!(
            c3.edge_ideal(),
            ideal(3, &[&[2, 2, 0], &[0, 1, 1], &[1, 0, 1]])
        );
        let single = WeightedGraph::new(2, [(1, 2, 3)]).unwrap();
        assert_eq!(single.edge_ideal(), ideal(2, &[&[3, 3]]));
        let p3 = WeightedGraph::path(3, &[1, 1]).unwrap();
        assert_eq!(p3.edge_ideal(), ideal(3, &[&[1, 1, 0], &[0, 1, 1]]));
    }

    #[test]
    fn isolated_vertices_keep_ring_arity() {
        let g = WeightedGraph::new(4, [(1, 2, 1)]).unwrap();
        assert_eq!(g.edge_ideal().arity(), 4);
    }

    #[test]
    fn delete_vertex_from_c4() {
        let c4 = WeightedGraph::cycle(4, &[1, 1, 1, 1]).unwrap();
        let (p, labels) = c4.delete_vertex(2).unwrap();
        assert_eq!(labels, vec![1, 3, 4]);
        // x3-x4 and x4-x1 in old labels; relabeled 2-3 and 1-3
        assert_eq!(p.edges().collect::<Vec<_>>(), vec![(1, 3, 1), (2, 3, 1)]);
    }

    #[test]
    fn induced_path_of_six_cycle_keeps_weights() {
        let c6 = WeightedGraph::cycle(6, &[2, 1, 2, 1, 2, 1]).unwrap();
        let (p, labels) = c6.induced_subgraph(&[1, 4, 5, 6]).unwrap();
        assert_eq!(labels, vec![1, 4, 5, 6]);
        // x4-x5 (w=1), x5-x6 (w=2), x6-x1 (w=1)
        assert_eq!(
            p.edges().collect::<Vec<_>>(),
            vec![(1, 4, 1), (2, 3, 1), (3, 4, 2)]
        );
        assert!(c6.induced_subgraph(&[1, 9]).is_err());
        let (all, _) = c6.induced_subgraph(&[1, 2, 3, 4, 5, 6]).unwrap();
        assert_eq!(all, c6);
    }

    #[test]
    fn induced_edge_ideal_in_full_ring() {
        let c4 = WeightedGraph::cycle(4, &[2, 1, 1, 1]).unwrap();
        let i = c4.induced_edge_ideal(&[1, 2, 3]).unwrap();
        assert_eq!(i, ideal(4, &[&[2, 2, 0, 0], &[0, 1, 1, 0]]));
    }

    #[test]
    fn closure_certificate_examples() {
        let trivial = WeightedGraph::cycle(5, &[1; 5]).unwrap();
        assert!(trivial.is_integrally_closed());
        let bad = WeightedGraph::cycle(5, &[2, 2, 1, 1, 1]).unwrap();
        let cert = bad.integral_closure_certificate();
        assert!(!cert.closed);
        assert_eq!(
            cert.violation,
            Some((ForbiddenPattern::NontrivialPath, vec![1, 2, 3]))
        );
        let c6 = WeightedGraph::cycle(6, &[2, 1, 2, 1, 2, 1]).unwrap();
        assert!(c6.is_integrally_closed());
        let tri = WeightedGraph::cycle(3, &[2, 2, 2]).unwrap();
        assert_eq!(
            tri.integral_closure_certificate().violation.unwrap().0,
            ForbiddenPattern::NontrivialTriangle
        );
        let two_triangle = WeightedGraph::cycle(3, &[2, 2, 1]).unwrap();
        assert!(two_triangle.is_integrally_closed());
        let matching = WeightedGraph::new(4, [(1, 2, 2), (3, 4, 2)]).unwrap();
        assert_eq!(
            matching.integral_closure_certificate().violation.unwrap().0,
            ForbiddenPattern::DisjointNontrivialEdges
        );
        // the same two edges joined by a third edge are fine
        let joined = WeightedGraph::new(4, [(1, 2, 2), (3, 4, 2), (2, 3, 1)]).unwrap();
        assert!(joined.is_integrally_closed());
    }

    #[test]
    fn classify_examples() {
        let f = CycleFamily::from_weights(&[2, 1, 1, 1, 1]).unwrap();
        assert_eq!(f.case, CycleCase::OneEdge);
        let f = CycleFamily::from_weights(&[3, 1, 2, 1]).unwrap();
        assert_eq!(f.case, CycleCase::TwoEdge);
        assert_eq!(f.weights, vec![3, 1, 2, 1]);
        let f = CycleFamily::from_weights(&[2, 1, 2, 1, 2, 1]).unwrap();
        assert_eq!(f.case, CycleCase::ThreeEdgeN6);
        let f = CycleFamily::from_weights(&[1, 1, 1]).unwrap();
        assert_eq!(f.case, CycleCase::Trivial);
    }

    #[test]
    fn classify_normalizes_rotation_and_reflection() {
        // non-trivial edges e_2 (w=2) and e_4 (w=3) of a 5-cycle
        let f = CycleFamily::from_weights(&[1, 2, 1, 3, 1]).unwrap();
        assert_eq!(f.weights, vec![3, 1, 2, 1, 1]);
        let f = CycleFamily::from_weights(&[1, 2, 1, 2, 1, 3]).unwrap();
        assert_eq!(f.weights, vec![3, 1, 2, 1, 2, 1]);
        let f = CycleFamily::from_weights(&[2, 2, 1]).unwrap();
        assert_eq!(f.weights, vec![2, 1, 2]);
        let f = CycleFamily::from_weights(&[1, 1, 1, 4, 1, 1, 1]).unwrap();
        assert_eq!(f.weights, vec![4, 1, 1, 1, 1, 1, 1]);
        // the relabeled cycle has the same edge ideal up to the vertex map
        let g = WeightedGraph::cycle(5, &[1, 2, 1, 3, 1]).unwrap();
        let f = classify_cycle(&g).unwrap();
        for k in 0..5 {
            let (a, b) = (f.vertex_order[k], f.vertex_order[(k + 1) % 5]);
            assert_eq!(g.weight(a, b), Some(f.weights[k]));
        }
    }

    #[test]
    fn classify_rejects_non_cycles_and_non_closed() {
        let p = WeightedGraph::path(4, &[1, 1, 1]).unwrap();
        assert_eq!(classify_cycle(&p), Err(Error::NotACycle));
        let bad = WeightedGraph::cycle(5, &[2, 2, 1, 1, 1]).unwrap();
        assert!(matches!(
            classify_cycle(&bad),
            Err(Error::NotIntegrallyClosed { .. })
        ));
        // two disjoint triangles are not a single cycle
        let two = WeightedGraph::new(
            6,
            [(1, 2, 1), (2, 3, 1), (1, 3, 1), (4, 5, 1), (5, 6, 1), (4, 6, 1)],
        )
        .unwrap();
        assert_eq!(two.cyclic_order(), None);
    }

    #[test]
    fn cyclic_order_follows_arbitrary_labels() {
        let g = WeightedGraph::new(4, [(1, 3, 1), (3, 2, 1), (2, 4, 2), (4, 1, 1)]).unwrap();
        assert_eq!(g.cyclic_order(), Some(vec![1, 3, 2, 4]));
        let f = classify_cycle(&g).unwrap();
        assert_eq!(f.case, CycleCase::OneEdge);
        assert_eq!(f.weights[0], 2);
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_weighted_graphs(2, 1).unwrap().count(), 2);
        assert_eq!(enumerate_weighted_graphs(2, 2).unwrap().count(), 3);
        // three possible edges, each absent or one of two weights: (1 + 2)^3
        let e = enumerate_weighted_graphs(3, 2).unwrap();
        assert_eq!(e.total(), 27);
        let all: Vec<_> = e.collect();
        assert_eq!(all.len(), 27);
        let distinct: std::collections::HashSet<_> = all.into_iter().collect();
        assert_eq!(distinct.len(), 27);
        assert!(enumerate_weighted_graphs(7, 1).is_err());
        assert!(enumerate_weighted_graphs(3, 4).is_err());
    }

    #[test]
    fn edge_ideal_has_one_generator_per_edge() {
        for g in enumerate_weighted_graphs(4, 2).unwrap() {
            assert_eq!(g.edge_ideal().num_generators(), g.num_edges());
        }
    }

    #[test]
    fn closed_cycles_match_corollary() {
        // <= 2 non-trivial edges (n != 6) or <= 3 alternating ones (n = 6)
        for n in 3..=6usize {
            let total = 2usize.pow(n as u32);
            for mask in 0..total {
                let w: Vec<u32> = (0..n).map(|k| 1 + ((mask >> k) & 1) as u32).collect();
                let g = WeightedGraph::cycle(n, &w).unwrap();
                let nontriv: Vec<usize> = (0..n).filter(|&k| w[k] == 2).collect();
                let adjacent_pair = nontriv.iter().any(|&a| {
                    nontriv
                        .iter()
                        .any(|&b| b == (a + 1) % n)
                });
                let expected = match (n, nontriv.len()) {
                    (_, 0 | 1) => true,
                    (3, 2) => true,
                    (3, _) => false,
                    (4, 2) => !adjacent_pair,
                    (5, 2) => !adjacent_pair,
                    (6, 2) => {
                        let d = (nontriv[1] - nontriv[0]) % n;
                        d == 2 || d == 4
                    }
                    (6, 3) => nontriv.iter().all(|k| k % 2 == nontriv[0] % 2),
                    _ => false,
                };
                assert_eq!(g.is_integrally_closed(), expected, "n={n} w={w:?}");
            }
        }
    }
}
