//! Simple graphs and the handful of constructions everything else is
//! built from: complements, vertex deletion, walk matrices, and the
//! rooted product.
//!
//! Graphs are immutable once constructed, undirected, loop-free, and
//! labeled 0..n-1. The adjacency structure is a row-major boolean
//! matrix; symmetry and the zero diagonal are enforced by every
//! constructor, so downstream code can rely on them unconditionally.

mod g6;
mod iso;

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::intalg::IntMatrix;

/// An undirected simple graph on vertices 0..n-1.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<bool>, // row-major n*n; symmetric with zero diagonal
}

impl Graph {
    /// The graph on `n` vertices with no edges.
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            adj: vec![false; n * n],
        }
    }

    /// Builds a graph from an explicit edge list. Duplicate edges are
    /// harmless; loops and out-of-range endpoints are rejected.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            g.set_edge(u, v)?;
        }
        Ok(g)
    }

    /// Builds a graph from a symmetric 0/1 matrix with zero diagonal.
    pub fn from_adjacency(m: &IntMatrix) -> Result<Self> {
        let n = m.rows();
        m.require_square()?;
        let mut g = Graph::empty(n);
        for i in 0..n {
            for j in 0..n {
                let x = &m[(i, j)];
                if !x.is_zero() && !x.is_one() {
                    return Err(Error::Parse(format!(
                        "adjacency entry ({i}, {j}) is {x}, expected 0 or 1"
                    )));
                }
                if m[(i, j)] != m[(j, i)] {
                    return Err(Error::Parse(format!(
                        "adjacency matrix not symmetric at ({i}, {j})"
                    )));
                }
                if i == j && x.is_one() {
                    return Err(Error::Parse(format!("loop at vertex {i}")));
                }
                if i < j && x.is_one() {
                    g.set_edge(i, j)?;
                }
            }
        }
        Ok(g)
    }

    /// The path on `n` vertices, edges i -- i+1.
    pub fn path(n: usize) -> Self {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &edges).expect("path edges are valid")
    }

    /// The cycle on `n >= 3` vertices.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "cycle needs at least 3 vertices");
        let mut edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        edges.push((n - 1, 0));
        Graph::from_edges(n, &edges).expect("cycle edges are valid")
    }

    /// The complete graph on `n` vertices.
    pub fn complete(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for i in 0..n {
            for j in (i + 1)..n {
                g.set_edge(i, j).expect("in range");
            }
        }
        g
    }

    fn set_edge(&mut self, u: usize, v: usize) -> Result<()> {
        if u >= self.n {
            return Err(Error::VertexOutOfRange {
                vertex: u,
                order: self.n,
            });
        }
        if v >= self.n {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                order: self.n,
            });
        }
        if u == v {
            return Err(Error::Parse(format!("loop at vertex {u}")));
        }
        self.adj[u * self.n + v] = true;
        self.adj[v * self.n + u] = true;
        Ok(())
    }

    /// Number of vertices.
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u * self.n + v]
    }

    pub fn degree(&self, v: usize) -> usize {
        (0..self.n).filter(|&u| self.adj[v * self.n + u]).count()
    }

    /// Edges as (u, v) with u < v, in row-major order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in (u + 1)..self.n {
                if self.adj[u * self.n + v] {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.edges().len()
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut degs: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        degs.sort_unstable();
        degs
    }

    /// The adjacency matrix A as an integer matrix.
    pub fn adjacency_matrix(&self) -> IntMatrix {
        IntMatrix::from_fn(self.n, self.n, |i, j| {
            if self.adj[i * self.n + j] {
                BigInt::one()
            } else {
                BigInt::zero()
            }
        })
    }

    /// The complement: same vertices, edges exactly where this graph
    /// has none.
    pub fn complement(&self) -> Graph {
        let mut g = Graph::empty(self.n);
        for i in 0..self.n {
            for j in (i + 1)..self.n {
                if !self.adj[i * self.n + j] {
                    g.set_edge(i, j).expect("in range");
                }
            }
        }
        g
    }

    /// The walk matrix W = [e, Ae, A^2 e, ..., A^(n-1) e], where e is
    /// the all-ones vector. Column k+1 is A times column k.
    pub fn walk_matrix(&self) -> IntMatrix {
        let n = self.n;
        let mut cols: Vec<Vec<BigInt>> = Vec::with_capacity(n);
        let mut col = vec![BigInt::one(); n];
        for _ in 0..n {
            let next: Vec<BigInt> = (0..n)
                .map(|i| {
                    (0..n)
                        .filter(|&j| self.adj[i * n + j])
                        .map(|j| &col[j])
                        .sum()
                })
                .collect();
            cols.push(col);
            col = next;
        }
        IntMatrix::from_columns(n, &cols)
    }

    /// The induced subgraph on everything except `v`, with the
    /// remaining labels compacted to 0..n-2 in order.
    pub fn delete_vertex(&self, v: usize) -> Result<Graph> {
        if v >= self.n {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                order: self.n,
            });
        }
        let keep: Vec<usize> = (0..self.n).filter(|&u| u != v).collect();
        let mut g = Graph::empty(self.n - 1);
        for (i, &u) in keep.iter().enumerate() {
            for (j, &w) in keep.iter().enumerate().skip(i + 1) {
                if self.adj[u * self.n + w] {
                    g.set_edge(i, j).expect("in range");
                }
            }
        }
        Ok(g)
    }

    /// The rooted product: one copy of `h` per vertex of `self`, with
    /// the roots of the copies joined according to this graph's edges.
    ///
    /// Vertex (i, g) -- the i-th vertex of the copy of H sitting over
    /// vertex g -- gets index i*n + g, so the adjacency matrix is
    /// exactly A(H) (x) I_n + D_root (x) A(G) in Kronecker form.
    pub fn rooted_product(&self, h: &RootedGraph) -> Graph {
        let n = self.n;
        let m = h.graph().order();
        let mut g = Graph::empty(n * m);
        // Within each copy of H.
        for (hu, hv) in h.graph().edges() {
            for gv in 0..n {
                g.set_edge(hu * n + gv, hv * n + gv).expect("in range");
            }
        }
        // Roots joined by the edges of self.
        for (gu, gv) in self.edges() {
            g.set_edge(h.root() * n + gu, h.root() * n + gv)
                .expect("in range");
        }
        g
    }

    /// Exact isomorphism test by canonical-form comparison, intended
    /// for small graphs. Uses the default size cap.
    pub fn is_isomorphic(&self, other: &Graph) -> Result<bool> {
        self.is_isomorphic_capped(other, iso::DEFAULT_CAP)
    }

    /// Same, with an explicit size cap.
    pub fn is_isomorphic_capped(&self, other: &Graph, cap: usize) -> Result<bool> {
        if self.n != other.n
            || self.edge_count() != other.edge_count()
            || self.degree_sequence() != other.degree_sequence()
        {
            return Ok(false);
        }
        Ok(self.canonical_form_capped(cap)? == other.canonical_form_capped(cap)?)
    }

    /// The canonical representative of this graph's isomorphism class:
    /// the relabeling whose upper-triangle bit string (in graph6 order)
    /// is lexicographically smallest. Two graphs are isomorphic exactly
    /// when their canonical forms are equal.
    pub fn canonical_form(&self) -> Result<Graph> {
        self.canonical_form_capped(iso::DEFAULT_CAP)
    }

    /// Same, with an explicit size cap.
    pub fn canonical_form_capped(&self, cap: usize) -> Result<Graph> {
        iso::canonical_form(self, cap)
    }

    /// Relabels by `perm`, where `perm[new_label] = old_label`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n, "permutation length mismatch");
        let mut g = Graph::empty(self.n);
        for i in 0..self.n {
            for j in (i + 1)..self.n {
                if self.adj[perm[i] * self.n + perm[j]] {
                    g.set_edge(i, j).expect("in range");
                }
            }
        }
        g
    }

    /// Upper-triangle adjacency bits in graph6 column order:
    /// (0,1), (0,2), (1,2), (0,3), (1,3), (2,3), ...
    pub(crate) fn upper_bits(&self) -> Vec<bool> {
        let mut bits = Vec::with_capacity(self.n * (self.n.saturating_sub(1)) / 2);
        for j in 1..self.n {
            for i in 0..j {
                bits.push(self.adj[i * self.n + j]);
            }
        }
        bits
    }

    /// Parses the graph6 ASCII encoding (optionally prefixed by the
    /// ">>graph6<<" header).
    pub fn from_graph6(text: &str) -> Result<Graph> {
        g6::parse_graph6(text)
    }

    /// The graph6 ASCII encoding of this graph.
    pub fn to_graph6(&self) -> String {
        g6::write_graph6(self)
    }

    /// Parses the plain edge-list format: an "n m" header line, then m
    /// "u v" pairs (whitespace-separated, 0-based).
    pub fn from_edge_list(text: &str) -> Result<Graph> {
        g6::parse_edge_list(text)
    }

    /// Writes the edge-list format parsed by [`Graph::from_edge_list`].
    pub fn to_edge_list(&self) -> String {
        g6::write_edge_list(self)
    }
}

// Graphs order by (n, upper-triangle bits), matching the byte order of
// their graph6 encodings. Used to pick deterministic representatives.
impl Ord for Graph {
    fn cmp(&self, other: &Self) -> Ordering {
        self.n
            .cmp(&other.n)
            .then_with(|| self.upper_bits().cmp(&other.upper_bits()))
    }
}

impl PartialOrd for Graph {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A graph with a distinguished root vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootedGraph {
    graph: Graph,
    root: usize,
}

impl RootedGraph {
    pub fn new(graph: Graph, root: usize) -> Result<Self> {
        if root >= graph.order() {
            return Err(Error::VertexOutOfRange {
                vertex: root,
                order: graph.order(),
            });
        }
        Ok(RootedGraph { graph, root })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn root(&self) -> usize {
        self.root
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::intalg;
    use num_traits::Signed;

    fn bi(x: i64) -> BigInt {
        BigInt::from(x)
    }

    #[test]
    fn construction_and_accessors() {
        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(g.order(), 4);
        assert_eq!(g.edge_count(), 3);
        assert!(g.has_edge(1, 0));
        assert!(!g.has_edge(0, 2));
        assert_eq!(g.degree(1), 2);
        assert_eq!(g.degree_sequence(), vec![1, 1, 2, 2]);
        assert_eq!(g, Graph::path(4));

        assert!(Graph::from_edges(3, &[(0, 3)]).is_err());
        assert!(Graph::from_edges(3, &[(1, 1)]).is_err());
    }

    #[test]
    fn adjacency_round_trip() {
        let g = Graph::cycle(5);
        let a = g.adjacency_matrix();
        assert_eq!(Graph::from_adjacency(&a).unwrap(), g);

        // Asymmetric, loopy, and non-0/1 matrices are all rejected.
        let bad = IntMatrix::from_i64_rows(&[&[0, 1], &[0, 0]]);
        assert!(Graph::from_adjacency(&bad).is_err());
        let loopy = IntMatrix::from_i64_rows(&[&[1, 0], &[0, 0]]);
        assert!(Graph::from_adjacency(&loopy).is_err());
        let weighted = IntMatrix::from_i64_rows(&[&[0, 2], &[2, 0]]);
        assert!(Graph::from_adjacency(&weighted).is_err());
    }

    #[test]
    fn complement_basics() {
        // Double complement is the identity.
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (3, 4), (0, 4)]).unwrap();
        assert_eq!(g.complement().complement(), g);
        // K3 complement is empty.
        assert_eq!(Graph::complete(3).complement(), Graph::empty(3));
        // P4 complement has edge set {02, 03, 13}.
        assert_eq!(
            Graph::path(4).complement().edges(),
            vec![(0, 2), (0, 3), (1, 3)]
        );
    }

    #[test]
    fn walk_matrix_small_cases() {
        // K1: W = [1].
        assert_eq!(Graph::empty(1).walk_matrix(), IntMatrix::from_i64_rows(&[&[1]]));
        // K2 is regular, so Ae = e and W = [[1,1],[1,1]], singular.
        let w = Graph::complete(2).walk_matrix();
        assert_eq!(w, IntMatrix::from_i64_rows(&[&[1, 1], &[1, 1]]));
        assert_eq!(w.det().unwrap(), bi(0));
    }

    #[test]
    fn walk_matrix_column_recurrence() {
        let g = Graph::from_edges(5, &[(0, 1), (0, 2), (1, 2), (2, 3), (3, 4)]).unwrap();
        let a = g.adjacency_matrix();
        let w = g.walk_matrix();
        for k in 0..4 {
            let next = a.mul_vec(&w.column(k));
            assert_eq!(w.column(k + 1), next);
        }
        assert_eq!(w.column(0), vec![bi(1); 5]);
    }

    #[test]
    fn delete_vertex_examples() {
        // P3 minus its middle vertex: two isolated vertices.
        assert_eq!(Graph::path(3).delete_vertex(1).unwrap(), Graph::empty(2));
        // K3 minus anything is K2.
        for v in 0..3 {
            assert_eq!(Graph::complete(3).delete_vertex(v).unwrap(), Graph::complete(2));
        }
        // P4 minus an end vertex is P3.
        assert_eq!(Graph::path(4).delete_vertex(3).unwrap(), Graph::path(3));
        assert!(Graph::path(4).delete_vertex(4).is_err());
    }

    #[test]
    fn rooted_product_degenerate_cases() {
        let g = Graph::cycle(5);
        // G o K1 with the only possible root gives back G.
        let k1 = RootedGraph::new(Graph::empty(1), 0).unwrap();
        assert_eq!(g.rooted_product(&k1), g);
        // K1 o H gives back H (labels are h*1 + 0 = h).
        let h = RootedGraph::new(Graph::path(4), 1).unwrap();
        assert_eq!(Graph::empty(1).rooted_product(&h), Graph::path(4));
    }

    #[test]
    fn rooted_product_edge_count_and_kronecker_form() {
        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)]).unwrap();
        let h = RootedGraph::new(Graph::path(3), 2).unwrap();
        let prod = g.rooted_product(&h);
        let n = g.order();
        let m = h.graph().order();
        assert_eq!(prod.order(), n * m);
        assert_eq!(
            prod.edge_count(),
            g.edge_count() + n * h.graph().edge_count()
        );

        // Entry-wise check of A(H) (x) I_n + D_v (x) A(G).
        let ag = g.adjacency_matrix();
        let ah = h.graph().adjacency_matrix();
        let ap = prod.adjacency_matrix();
        for hu in 0..m {
            for hv in 0..m {
                for gu in 0..n {
                    for gv in 0..n {
                        let mut expect = BigInt::zero();
                        if gu == gv {
                            expect += &ah[(hu, hv)];
                        }
                        if hu == h.root() && hv == h.root() {
                            expect += &ag[(gu, gv)];
                        }
                        assert_eq!(ap[(hu * n + gu, hv * n + gv)], expect);
                    }
                }
            }
        }
    }

    #[test]
    fn rooted_product_respects_root_choice() {
        // P3 rooted at an end vs at the middle give non-isomorphic
        // products over K2.
        let g = Graph::complete(2);
        let end = g.rooted_product(&RootedGraph::new(Graph::path(3), 0).unwrap());
        let mid = g.rooted_product(&RootedGraph::new(Graph::path(3), 1).unwrap());
        // Rooted at an end: two P3s joined at their tips = P6.
        assert!(end.is_isomorphic(&Graph::path(6)).unwrap());
        assert!(!end.is_isomorphic(&mid).unwrap());
    }

    #[test]
    fn root_out_of_range_rejected() {
        assert!(RootedGraph::new(Graph::path(3), 3).is_err());
        assert!(RootedGraph::new(Graph::path(3), 2).is_ok());
    }

    #[test]
    fn permuted_relabels() {
        let g = Graph::path(3);
        // perm[new] = old: new 0 is old 1 (the center).
        let p = g.permuted(&[1, 0, 2]);
        assert!(p.has_edge(0, 1));
        assert!(p.has_edge(0, 2));
        assert!(!p.has_edge(1, 2));
    }

    #[test]
    fn walk_matrix_matches_hand_built_krylov_columns() {
        for g in [
            Graph::path(4),
            Graph::cycle(5),
            crate::fixtures::paper_g8(),
        ] {
            let n = g.order();
            let a = g.adjacency_matrix();
            let mut cols = Vec::new();
            let mut v = vec![bi(1); n];
            for _ in 0..n {
                cols.push(v.clone());
                v = a.mul_vec(&v);
            }
            assert_eq!(g.walk_matrix(), IntMatrix::from_columns(n, &cols));
        }
        // The flip automorphism of P4 pairs up identical rows of W, so
        // paths of even length are never controllable.
        assert_eq!(Graph::path(4).walk_matrix().det().unwrap(), bi(0));
        // The 8-vertex fixture is asymmetric and controllable.
        assert_ne!(
            crate::fixtures::paper_g8().walk_matrix().det().unwrap(),
            bi(0)
        );
    }

    #[test]
    fn graph_ordering_matches_graph6_bytes() {
        // Ord agrees with comparing graph6 strings for same-order graphs.
        let gs = [
            Graph::empty(4),
            Graph::path(4),
            Graph::cycle(4),
            Graph::complete(4),
            Graph::from_edges(4, &[(0, 3), (1, 2)]).unwrap(),
        ];
        for a in &gs {
            for b in &gs {
                assert_eq!(a.cmp(b), a.to_graph6().cmp(&b.to_graph6()));
            }
        }
    }

    #[test]
    fn snf_of_a_walk_matrix_runs() {
        // Smoke test tying graphs to intalg: the invariant factors of a
        // nonsingular walk matrix multiply to |det W|.
        let w = crate::fixtures::paper_g8().walk_matrix();
        let snf = intalg::smith_normal_form(&w).unwrap();
        let prod: BigInt = snf.invariant_factors().iter().product();
        assert_eq!(prod, w.det().unwrap().abs());
    }
}
