//! Generators for the graph families used throughout the crate.
//!
//! Labeling is fixed so results are reproducible: paths and cycles are
//! numbered along the path/cycle, Kneser vertices are the `m`-subsets of
//! `{1..n}` in lexicographic order, and hypercubes use the iterated box
//! product numbering (first coordinate most significant).

use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{components, isomorphic, Graph, GraphError};
use crate::products::iterated_box;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    /// `P_n`: path on `n` vertices.
    Path(usize),
    /// `I_n^ℓ`: looped path on `n + 1` vertices.
    LoopedPath(usize),
    Cycle(usize),
    LoopedCycle(usize),
    Complete(usize),
    LoopedComplete(usize),
    Kneser {
        n: usize,
        m: usize,
    },
    /// One vertex with a loop.
    Terminal,
    Hypercube(usize),
    RandomTree {
        n: usize,
        seed: u64,
    },
}

pub fn generate(family: &Family) -> Result<Graph, GraphError> {
    let invalid = |msg: &str| Err(GraphError::InvalidInput(format!("{family}: {msg}")));
    match *family {
        Family::Path(n) => {
            if n < 2 {
                return invalid("a path needs at least 2 vertices");
            }
            Graph::build(n, (0..n - 1).map(|i| (i, i + 1)))
        }
        Family::LoopedPath(n) => {
            let verts = n + 1;
            Graph::build(
                verts,
                (0..verts).map(|i| (i, i)).chain((0..n).map(|i| (i, i + 1))),
            )
        }
        Family::Cycle(n) | Family::LoopedCycle(n) => {
            if n < 3 {
                return invalid("a cycle needs at least 3 vertices");
            }
            let looped = matches!(family, Family::LoopedCycle(_));
            let loops = (0..n).filter(|_| looped).map(|i| (i, i));
            Graph::build(n, (0..n).map(|i| (i, (i + 1) % n)).chain(loops))
        }
        Family::Complete(n) => {
            if n < 2 {
                return invalid("an unlooped complete graph needs at least 2 vertices");
            }
            Graph::build(n, (0..n).tuple_combinations())
        }
        Family::LoopedComplete(n) => {
            if n < 1 {
                return invalid("need at least 1 vertex");
            }
            Graph::build(n, (0..n).tuple_combinations().chain((0..n).map(|i| (i, i))))
        }
        Family::Kneser { n, m } => {
            if m == 0 || n < 2 * m {
                return invalid("Kneser graphs need m >= 1 and n >= 2m");
            }
            let subsets: Vec<Vec<usize>> = (1..=n).combinations(m).collect();
            let mut edges = Vec::new();
            for (i, a) in subsets.iter().enumerate() {
                for (j, b) in subsets.iter().enumerate().skip(i + 1) {
                    if a.iter().all(|x| !b.contains(x)) {
                        edges.push((i, j));
                    }
                }
            }
            Graph::build(subsets.len(), edges)
        }
        Family::Terminal => Graph::build(1, [(0, 0)]),
        Family::Hypercube(d) => {
            if d == 0 {
                return invalid("dimension must be at least 1");
            }
            let k2 = generate(&Family::Complete(2))?;
            Ok(iterated_box(&vec![k2; d])?.0)
        }
        Family::RandomTree { n, seed } => {
            if n < 2 {
                return invalid("a tree needs at least 2 vertices");
            }
            Ok(random_tree(n, seed))
        }
    }
}

/// Uniform random recursive tree: vertex `i` attaches to a uniformly chosen
/// earlier vertex.
pub fn random_tree(n: usize, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let edges: Vec<_> = (1..n).map(|i| (rng.gen_range(0..i), i)).collect();
    Graph::build(n, edges).expect("trees on >= 2 vertices have no isolated vertices")
}

/// Erdős–Rényi sample on `5..=9` vertices with edge probability drawn from
/// `{0.3, 0.5}` and independent loops with probability 0.2, redrawn until it
/// is connected. With `reflexive` every vertex gets a loop instead.
pub fn random_connected(rng: &mut impl Rng, reflexive: bool) -> Graph {
    loop {
        let n = rng.gen_range(5..=9);
        let p = if rng.gen_bool(0.5) { 0.3 } else { 0.5 };
        let mut edges = Vec::new();
        for u in 0..n {
            if reflexive || rng.gen_bool(0.2) {
                edges.push((u, u));
            }
            for v in u + 1..n {
                if rng.gen_bool(p) {
                    edges.push((u, v));
                }
            }
        }
        if let Ok(g) = Graph::build(n, edges) {
            if g.is_connected() {
                return g;
            }
        }
    }
}

/// Every tree on `n` vertices up to isomorphism, grown by leaf addition.
pub fn all_trees(n: usize) -> Vec<Graph> {
    if n < 2 {
        return Vec::new();
    }
    let mut level = vec![generate(&Family::Path(2)).unwrap()];
    for size in 3..=n {
        let mut next: Vec<Graph> = Vec::new();
        for t in &level {
            for attach in t.vertices() {
                let mut edges = t.edges();
                edges.push((attach, size - 1));
                let cand = Graph::build(size, edges).unwrap();
                let seq = cand.degree_sequence();
                let dup = next.iter().any(|h| {
                    h.degree_sequence() == seq
                        && isomorphic(h, &cand).expect("trees are small").is_some()
                });
                if !dup {
                    next.push(cand);
                }
            }
        }
        level = next;
    }
    debug_assert!(level.iter().all(|t| components(t).len() == 1));
    level
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Path(n) => write!(f, "P{n}"),
            Family::LoopedPath(n) => write!(f, "I{n}l"),
            Family::Cycle(n) => write!(f, "C{n}"),
            Family::LoopedCycle(n) => write!(f, "C{n}l"),
            Family::Complete(n) => write!(f, "K{n}"),
            Family::LoopedComplete(n) => write!(f, "K{n}l"),
            Family::Kneser { n, m } => write!(f, "K{n}_{m}"),
            Family::Terminal => write!(f, "T"),
            Family::Hypercube(d) => write!(f, "Q{d}"),
            Family::RandomTree { n, seed } => write!(f, "RT{n}_{seed}"),
        }
    }
}

impl FromStr for Family {
    type Err = GraphError;

    /// Shorthand: `P4`, `I4l`, `C5`, `C5l`, `K6`, `K3l`, `K5_2`, `Q3`, `T`,
    /// `RT8_3` (random tree on 8 vertices, seed 3).
    fn from_str(s: &str) -> Result<Family, GraphError> {
        let bad = || GraphError::InvalidInput(format!("unknown family shorthand `{s}`"));
        let num = |t: &str| t.parse::<usize>().map_err(|_| bad());
        if s == "T" {
            return Ok(Family::Terminal);
        }
        if let Some(rest) = s.strip_prefix("RT") {
            let (n, seed) = rest.split_once('_').ok_or_else(bad)?;
            return Ok(Family::RandomTree {
                n: num(n)?,
                seed: seed.parse().map_err(|_| bad())?,
            });
        }
        let mut chars = s.chars();
        let head = chars.next().ok_or_else(bad)?;
        let rest = chars.as_str();
        let (body, looped) = match rest.strip_suffix('l') {
            Some(b) => (b, true),
            None => (rest, false),
        };
        let fam = match (head, looped) {
            ('P', false) => Family::Path(num(body)?),
            ('I', true) => Family::LoopedPath(num(body)?),
            ('C', false) => Family::Cycle(num(body)?),
            ('C', true) => Family::LoopedCycle(num(body)?),
            ('K', true) => Family::LoopedComplete(num(body)?),
            ('K', false) => match body.split_once('_') {
                Some((n, m)) => Family::Kneser {
                    n: num(n)?,
                    m: num(m)?,
                },
                None => Family::Complete(num(body)?),
            },
            ('Q', false) => Family::Hypercube(num(body)?),
            _ => return Err(bad()),
        };
        Ok(fam)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn binom(n: usize, k: usize) -> usize {
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    #[test]
    fn petersen_by_brute_force() {
        let g = generate(&Family::Kneser { n: 5, m: 2 }).unwrap();
        // independent count: pairs of 2-subsets of {1..5} that are disjoint
        let mut subsets = Vec::new();
        for a in 1..=5 {
            for b in a + 1..=5 {
                subsets.push([a, b]);
            }
        }
        let mut disjoint = 0;
        for i in 0..subsets.len() {
            for j in i + 1..subsets.len() {
                if subsets[i].iter().all(|x| !subsets[j].contains(x)) {
                    disjoint += 1;
                }
            }
        }
        assert_eq!(disjoint, 15);
        assert_eq!(g.n(), 10);
        assert_eq!(g.edge_count(), 15);
        assert_eq!(g.is_regular(), Some(3));
    }

    #[test]
    fn looped_path_i4() {
        let g = generate(&Family::LoopedPath(4)).unwrap();
        assert_eq!(g.n(), 5);
        assert_eq!(g.loop_count(), 5);
        assert_eq!(g.edge_count(), 9);
    }

    #[test]
    fn c5_is_two_regular() {
        let g = generate(&Family::Cycle(5)).unwrap();
        assert_eq!((g.n(), g.edge_count(), g.is_regular()), (5, 5, Some(2)));
    }

    #[test]
    fn kneser_degree_and_hypercube_shape() {
        for n in 4..=8 {
            let g = generate(&Family::Kneser { n, m: 2 }).unwrap();
            assert_eq!(g.n(), binom(n, 2));
            assert_eq!(g.is_regular(), Some(binom(n - 2, 2)));
        }
        for d in 1..=5 {
            let q = generate(&Family::Hypercube(d)).unwrap();
            assert_eq!(q.n(), 1 << d);
            assert_eq!(q.is_regular(), Some(d));
        }
    }

    #[test]
    fn invalid_families() {
        for family in [
            Family::Kneser { n: 3, m: 2 },
            Family::Cycle(2),
            Family::Path(1),
            Family::Complete(1),
            Family::Hypercube(0),
        ] {
            assert!(matches!(
                generate(&family),
                Err(GraphError::InvalidInput(_))
            ));
        }
    }

    #[test]
    fn shorthand_round_trip() {
        for s in [
            "P4", "I4l", "C5", "C5l", "K6", "K3l", "K5_2", "Q3", "T", "RT8_3",
        ] {
            let f: Family = s.parse().unwrap();
            assert_eq!(f.to_string(), s);
        }
        assert!("X3".parse::<Family>().is_err());
        assert!("Cl".parse::<Family>().is_err());
    }

    #[test]
    fn tree_counts_match_known_sequence() {
        // unlabeled trees on n vertices: 1, 1, 2, 3, 6, 11, 23, 47, 106
        let expected = [1, 1, 2, 3, 6, 11, 23, 47, 106];
        for (i, &count) in expected.iter().enumerate() {
            let n = i + 2;
            let trees = all_trees(n);
            assert_eq!(trees.len(), count, "n = {n}");
            assert!(trees
                .iter()
                .all(|t| t.edge_count() == n - 1 && t.is_connected()));
        }
    }

    #[test]
    fn random_generators_are_valid() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for i in 0..30 {
            let g = random_connected(&mut rng, i % 3 == 0);
            assert!(g.validate().is_ok());
            assert!(g.is_connected());
            assert!((5..=9).contains(&g.n()));
            if i % 3 == 0 {
                assert!(g.is_reflexive());
            }
        }
        let t = random_tree(12, 3);
        assert_eq!(t, random_tree(12, 3));
        assert!(t.is_connected() && t.edge_count() == 11);
    }
}
