use std::collections::VecDeque;

use super::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    A,
    B,
}

impl Side {
    fn flip(self) -> Side {
        match self {
            Side::A => Side::B,
            Side::B => Side::A,
        }
    }
}

/// Two-coloring of a graph. When `valid` is false `parts` is still filled
/// with the BFS parity labeling but some edge is monochromatic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bipartition {
    pub parts: Vec<Side>,
    pub valid: bool,
}

impl Bipartition {
    pub fn side(&self, v: usize) -> Side {
        self.parts[v]
    }

    pub fn side_members(&self, side: Side) -> Vec<usize> {
        (0..self.parts.len())
            .filter(|&v| self.parts[v] == side)
            .collect()
    }

    /// Number of entries of `vertices` on each side, as `(A, B)`.
    pub fn split_count(&self, vertices: &[usize]) -> (usize, usize) {
        let a = vertices
            .iter()
            .filter(|&&v| self.parts[v] == Side::A)
            .count();
        (a, vertices.len() - a)
    }
}

/// BFS 2-coloring. The smallest vertex of each component is put on side A.
/// A loop is an odd closed walk, so any looped vertex makes the result invalid.
pub fn bipartition(g: &Graph) -> Bipartition {
    let n = g.n();
    let mut parts: Vec<Option<Side>> = vec![None; n];
    let mut valid = true;
    let mut queue = VecDeque::new();
    for start in g.vertices() {
        if parts[start].is_some() {
            continue;
        }
        parts[start] = Some(Side::A);
        queue.push_back(start);
        while let Some(u) = queue.pop_front() {
            let su = parts[u].unwrap();
            for &w in g.neighbors(u) {
                match parts[w] {
                    None => {
                        parts[w] = Some(su.flip());
                        queue.push_back(w);
                    }
                    Some(sw) if sw == su => valid = false,
                    Some(_) => {}
                }
            }
        }
    }
    Bipartition {
        parts: parts.into_iter().map(Option::unwrap).collect(),
        valid,
    }
}

/// A connected component as an induced subgraph. `vertices[i]` is the
/// original identifier of vertex `i` of `graph`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Component {
    pub vertices: Vec<usize>,
    pub graph: Graph,
}

/// Connected components ordered by their smallest vertex; vertices inside a
/// component are kept in increasing order.
pub fn components(g: &Graph) -> Vec<Component> {
    let n = g.n();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for start in g.vertices() {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut members = vec![start];
        let mut stack = vec![start];
        while let Some(u) = stack.pop() {
            for &w in g.neighbors(u) {
                if !seen[w] {
                    seen[w] = true;
                    members.push(w);
                    stack.push(w);
                }
            }
        }
        members.sort_unstable();
        let graph = g
            .induced(&members)
            .expect("a component of a valid graph has no isolated vertices");
        out.push(Component {
            vertices: members,
            graph,
        });
    }
    out
}
