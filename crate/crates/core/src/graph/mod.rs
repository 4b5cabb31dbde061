//! Finite undirected graphs with optional loops and no isolated vertices.
//!
//! Vertices are dense identifiers `0..n`. A loop on `v` is recorded as
//! `v ∈ neighbors(v)`, so the open neighborhood of a looped vertex contains
//! the vertex itself. Every other module reads adjacency through this single
//! convention.

mod analysis;
mod generate;
mod io;
mod iso;

use std::fmt;

use thiserror::Error;

pub use analysis::{bipartition, components, Bipartition, Component, Side};
pub use generate::{all_trees, generate, random_connected, random_tree, Family};
pub use io::{parse, parse_json, parse_text, to_json, to_text};
pub use iso::{isomorphic, isomorphic_with_cap, DEFAULT_ISO_CAP};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {0} has no neighbors")]
    IsolatedVertex(usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    OutOfRange { vertex: usize, n: usize },
    #[error("a graph needs at least one vertex")]
    Empty,
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("graph has {n} vertices, above the isomorphism cap of {cap}")]
    SizeLimitExceeded { n: usize, cap: usize },
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate and reversed edges
    /// collapse; `(v, v)` is a loop.
    pub fn build<I>(n: usize, edges: I) -> Result<Graph, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if n == 0 {
            return Err(GraphError::Empty);
        }
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::OutOfRange { vertex: w, n });
                }
            }
            adj[u].push(v);
            if u != v {
                adj[v].push(u);
            }
        }
        Graph::from_adjacency(adj)
    }

    /// Accepts per-vertex neighbor lists; symmetrizes, sorts and
    /// deduplicates them, then checks the no-isolated-vertex rule.
    pub fn from_adjacency(mut adj: Vec<Vec<usize>>) -> Result<Graph, GraphError> {
        let n = adj.len();
        if n == 0 {
            return Err(GraphError::Empty);
        }
        let mut extra = Vec::new();
        for (u, nbrs) in adj.iter().enumerate() {
            for &v in nbrs {
                if v >= n {
                    return Err(GraphError::OutOfRange { vertex: v, n });
                }
                extra.push((v, u));
            }
        }
        for (v, u) in extra {
            adj[v].push(u);
        }
        for nbrs in &mut adj {
            nbrs.sort_unstable();
            nbrs.dedup();
        }
        if let Some(v) = adj.iter().position(Vec::is_empty) {
            return Err(GraphError::IsolatedVertex(v));
        }
        Ok(Graph { adj })
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.adj.len()
    }

    /// Sorted open neighborhood; contains `v` iff `v` is looped.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    pub fn has_loop(&self, v: usize) -> bool {
        self.has_edge(v, v)
    }

    pub fn loop_count(&self) -> usize {
        self.vertices().filter(|&v| self.has_loop(v)).count()
    }

    pub fn is_loopless(&self) -> bool {
        self.loop_count() == 0
    }

    pub fn is_reflexive(&self) -> bool {
        self.loop_count() == self.n()
    }

    /// Edges as `(u, v)` with `u <= v`, sorted lexicographically.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (u, nbrs) in self.adj.iter().enumerate() {
            out.extend(nbrs.iter().filter(|&&v| v >= u).map(|&v| (u, v)));
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.edges().len()
    }

    pub fn is_regular(&self) -> Option<usize> {
        let d = self.degree(0);
        self.vertices().all(|v| self.degree(v) == d).then_some(d)
    }

    pub fn is_connected(&self) -> bool {
        components(self).len() == 1
    }

    /// Subgraph induced on `vertices`, relabeled in the given order.
    pub fn induced(&self, vertices: &[usize]) -> Result<Graph, GraphError> {
        let mut pos = vec![usize::MAX; self.n()];
        for (i, &v) in vertices.iter().enumerate() {
            pos[v] = i;
        }
        let adj = vertices
            .iter()
            .map(|&v| {
                self.adj[v]
                    .iter()
                    .filter(|&&w| pos[w] != usize::MAX)
                    .map(|&w| pos[w])
                    .collect()
            })
            .collect();
        Graph::from_adjacency(adj)
    }

    /// Disjoint union; `other`'s vertices are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.n();
        let mut adj = self.adj.clone();
        adj.extend(
            other
                .adj
                .iter()
                .map(|nbrs| nbrs.iter().map(|&w| w + shift).collect()),
        );
        Graph { adj }
    }

    /// Total loop-inclusive degree multiset, handy for quick rejections.
    pub fn degree_sequence(&self) -> Vec<(usize, bool)> {
        let mut seq: Vec<_> = self
            .vertices()
            .map(|v| (self.degree(v), self.has_loop(v)))
            .collect();
        seq.sort_unstable();
        seq
    }

    /// Short stable digest of the canonical text form.
    pub fn fingerprint(&self) -> String {
        use sha2::{Digest, Sha256};
        let digest = Sha256::digest(to_text(self).as_bytes());
        digest[..8].iter().map(|b| format!("{b:02x}")).collect()
    }

    /// Checks symmetry, set semantics and the isolated-vertex rule.
    pub fn validate(&self) -> Result<(), GraphError> {
        let n = self.n();
        if n == 0 {
            return Err(GraphError::Empty);
        }
        for (u, nbrs) in self.adj.iter().enumerate() {
            if nbrs.is_empty() {
                return Err(GraphError::IsolatedVertex(u));
            }
            if nbrs.windows(2).any(|w| w[0] >= w[1]) {
                return Err(GraphError::InvalidInput(format!(
                    "neighbors of {u} are not a sorted set"
                )));
            }
            for &v in nbrs {
                if v >= n {
                    return Err(GraphError::OutOfRange { vertex: v, n });
                }
                if !self.has_edge(v, u) {
                    return Err(GraphError::InvalidInput(format!(
                        "edge {u}-{v} is not symmetric"
                    )));
                }
            }
        }
        Ok(())
    }

    pub(crate) fn adjacency(&self) -> &[Vec<usize>] {
        &self.adj
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n(), self.edges())
    }
}
