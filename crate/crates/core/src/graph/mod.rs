//! Undirected simple graphs on labeled vertices `0..n`, with the graph6
//! codec, traversal, automorphisms, exhaustive enumeration, and exact
//! construction of the graph matrices.

mod automorphism;
mod enumerate;
mod graph6;
mod matrices;

use std::collections::VecDeque;
use std::fmt;

use thiserror::Error;

pub use automorphism::{
    all_nonidentity_involutions, automorphisms, Permutation, AUTOMORPHISM_MAX_N,
};
pub use enumerate::{
    enumerate_labeled_graphs, enumerate_mask_range, graph_from_mask, labeled_graph_count,
    pair_index, LabeledGraphs, ENUMERATION_MAX_N,
};
pub use graph6::{parse_graph6, write_graph6, Graph6Error, GRAPH6_MAX_N};
pub use matrices::{build_matrix, normalized_laplacian_float, MatrixKind};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("graph has {n} vertices, below the required minimum of {min}")]
    TooSmall { n: usize, min: usize },
    #[error("graph is disconnected (infinite diameter)")]
    Disconnected,
    #[error("graph has {n} vertices, above the supported maximum of {max} for this operation")]
    TooLarge { n: usize, max: usize },
    #[error("vertex {0} is isolated")]
    IsolatedVertex(usize),
}

/// Undirected simple graph. Adjacency is stored as one bit row per vertex;
/// the rows are kept symmetric with a zero diagonal.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    words: usize,
    bits: Vec<u64>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        let words = n.div_ceil(64).max(1);
        Self {
            n,
            words,
            bits: vec![0; n * words],
        }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Self::empty(n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        for w in [u, v] {
            if w >= self.n {
                return Err(GraphError::VertexOutOfRange {
                    vertex: w,
                    n: self.n,
                });
            }
        }
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        self.set(u, v);
        self.set(v, u);
        Ok(())
    }

    fn set(&mut self, u: usize, v: usize) {
        self.bits[u * self.words + v / 64] |= 1 << (v % 64);
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of edges.
    pub fn m(&self) -> usize {
        let ones: u32 = self.bits.iter().map(|w| w.count_ones()).sum();
        ones as usize / 2
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.bits[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }

    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    fn row(&self, v: usize) -> &[u64] {
        &self.bits[v * self.words..(v + 1) * self.words]
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.row(v).iter().enumerate().flat_map(|(wi, &word)| {
            let mut w = word;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let bit = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(wi * 64 + bit)
            })
        })
    }

    /// Edges `(i, j)` with `i < j`, in row-major order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.n)
            .flat_map(|i| {
                self.neighbors(i)
                    .filter(move |&j| j > i)
                    .map(move |j| (i, j))
            })
            .collect()
    }

    /// Breadth-first distances from `source`; `None` for unreachable vertices.
    pub fn distances_from(&self, source: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n];
        let mut queue = VecDeque::new();
        dist[source] = Some(0);
        queue.push_back(source);
        while let Some(u) = queue.pop_front() {
            let d = dist[u].expect("queued vertices have a distance");
            for w in self.neighbors(u) {
                if dist[w].is_none() {
                    dist[w] = Some(d + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    // Named families used throughout the tests and examples.

    pub fn complete(n: usize) -> Self {
        let mut g = Self::empty(n);
        for i in 0..n {
            for j in i + 1..n {
                g.set(i, j);
                g.set(j, i);
            }
        }
        g
    }

    pub fn path(n: usize) -> Self {
        let mut g = Self::empty(n);
        for i in 1..n {
            g.set(i - 1, i);
            g.set(i, i - 1);
        }
        g
    }

    pub fn cycle(n: usize) -> Self {
        let mut g = Self::path(n);
        if n >= 3 {
            g.set(0, n - 1);
            g.set(n - 1, 0);
        }
        g
    }

    /// `K_{1,leaves}` with the center labeled `leaves`.
    pub fn star(leaves: usize) -> Self {
        let mut g = Self::empty(leaves + 1);
        for i in 0..leaves {
            g.set(i, leaves);
            g.set(leaves, i);
        }
        g
    }

    pub fn petersen() -> Self {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((i + 5, (i + 2) % 5 + 5));
        }
        Self::from_edges(10, &edges).expect("valid edge list")
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges())
            .finish()
    }
}

/// True iff a breadth-first search from vertex 0 reaches every vertex.
pub fn is_connected(g: &Graph) -> bool {
    g.n() <= 1 || g.distances_from(0).iter().all(Option::is_some)
}

/// Largest shortest-path distance over all vertex pairs.
pub fn diameter(g: &Graph) -> Result<usize, GraphError> {
    let mut best = 0;
    for v in 0..g.n() {
        for d in g.distances_from(v) {
            best = best.max(d.ok_or(GraphError::Disconnected)?);
        }
    }
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_counts() {
        let p = Graph::petersen();
        assert_eq!(p.n(), 10);
        assert_eq!(p.m(), 15);
        assert!(p.degrees().iter().all(|&d| d == 3));
        assert_eq!(Graph::complete(5).m(), 10);
        assert_eq!(Graph::star(4).degree(4), 4);
    }

    #[test]
    fn edge_validation() {
        let mut g = Graph::empty(3);
        assert_eq!(g.add_edge(0, 0), Err(GraphError::SelfLoop(0)));
        assert_eq!(
            g.add_edge(0, 3),
            Err(GraphError::VertexOutOfRange { vertex: 3, n: 3 })
        );
        g.add_edge(2, 1).unwrap();
        assert!(g.has_edge(1, 2) && g.has_edge(2, 1));
        assert!(!g.has_edge(1, 1));
    }

    #[test]
    fn connectivity() {
        assert!(is_connected(&Graph::complete(3)));
        assert!(!is_connected(&Graph::empty(2)));
        assert!(is_connected(&Graph::path(4)));
        assert!(is_connected(&Graph::empty(1)));
    }

    #[test]
    fn diameters() {
        for n in 2..7 {
            assert_eq!(diameter(&Graph::complete(n)).unwrap(), 1);
        }
        assert_eq!(diameter(&Graph::path(5)).unwrap(), 4);
        assert_eq!(diameter(&Graph::petersen()).unwrap(), 2);
        assert_eq!(diameter(&Graph::empty(2)), Err(GraphError::Disconnected));
    }

    #[test]
    fn wide_graphs_use_multiple_words() {
        let g = Graph::cycle(200);
        assert_eq!(g.m(), 200);
        assert!(g.has_edge(0, 199));
        assert_eq!(g.neighbors(130).collect::<Vec<_>>(), vec![129, 131]);
        assert_eq!(diameter(&g).unwrap(), 100);
    }
}
