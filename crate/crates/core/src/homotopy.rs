//! ×-homotopy through folds.
//!
//! A fold deletes a vertex `x` whose neighborhood is contained in the
//! neighborhood of some other vertex `x'`, mapping `x` onto `x'`. An unfold
//! is the inverse: it adds a vertex whose neighborhood lies inside an
//! existing one. Two graphs are treated as homotopy equivalent when their
//! stiff cores (graphs with no fold left) are isomorphic.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{isomorphic, Graph, GraphError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HomotopyError {
    #[error("N({x}) is not contained in N({xp})")]
    NotFoldable { x: usize, xp: usize },
    #[error("invalid unfold: {0}")]
    InvalidUnfold(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// One step of a fold sequence, expressed in the labeling of the graph the
/// step is applied to. An unfold appends vertex `x == n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum FoldStep {
    Fold {
        x: usize,
        xp: usize,
    },
    Unfold {
        x: usize,
        xp: usize,
        nbrs: Vec<usize>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FoldSequence {
    pub steps: Vec<FoldStep>,
    pub source: String,
    pub target: String,
}

impl FoldSequence {
    pub fn replay(&self, g: &Graph) -> Result<Graph, HomotopyError> {
        let mut cur = g.clone();
        for step in &self.steps {
            cur = match step {
                FoldStep::Fold { x, xp } => fold(&cur, *x, *xp)?.graph,
                FoldStep::Unfold { x, xp, nbrs } => {
                    if *x != cur.n() {
                        return Err(HomotopyError::InvalidUnfold(format!(
                            "new vertex must be {}, step says {x}",
                            cur.n()
                        )));
                    }
                    unfold(&cur, *xp, nbrs)?
                }
            };
        }
        Ok(cur)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("plain struct serializes")
    }

    pub fn folds(&self) -> usize {
        self.steps
            .iter()
            .filter(|s| matches!(s, FoldStep::Fold { .. }))
            .count()
    }
}

fn is_subset(small: &[usize], big: &[usize]) -> bool {
    small.iter().all(|v| big.binary_search(v).is_ok())
}

pub fn is_foldable(g: &Graph, x: usize, xp: usize) -> bool {
    x != xp && x < g.n() && xp < g.n() && is_subset(g.neighbors(x), g.neighbors(xp))
}

/// All ordered pairs `(x, x')`, `x != x'`, with `N(x) ⊆ N(x')`, sorted.
pub fn foldable_pairs(g: &Graph) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for x in g.vertices() {
        for xp in g.vertices() {
            if is_foldable(g, x, xp) {
                out.push((x, xp));
            }
        }
    }
    out
}

pub fn is_stiff(g: &Graph) -> bool {
    g.vertices()
        .all(|x| g.vertices().all(|xp| !is_foldable(g, x, xp)))
}

/// Result of a fold. `map[v]` is the image of original vertex `v` in the
/// folded graph; it is the fold homomorphism itself.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Folded {
    pub graph: Graph,
    pub map: Vec<usize>,
}

pub fn fold(g: &Graph, x: usize, xp: usize) -> Result<Folded, HomotopyError> {
    if !is_foldable(g, x, xp) {
        return Err(HomotopyError::NotFoldable { x, xp });
    }
    let relabel = |v: usize| if v > x { v - 1 } else { v };
    let adj = g
        .vertices()
        .filter(|&v| v != x)
        .map(|v| {
            g.neighbors(v)
                .iter()
                .filter(|&&w| w != x)
                .map(|&w| relabel(w))
                .collect()
        })
        .collect();
    let graph = Graph::from_adjacency(adj)?;
    let map = g
        .vertices()
        .map(|v| if v == x { relabel(xp) } else { relabel(v) })
        .collect();
    Ok(Folded { graph, map })
}

/// Adds vertex `g.n()` with neighborhood `nbrs`. Listing `g.n()` itself in
/// `nbrs` requests a loop. Legal iff the new vertex folds back onto `xp`.
pub fn unfold(g: &Graph, xp: usize, nbrs: &[usize]) -> Result<Graph, HomotopyError> {
    let new = g.n();
    if xp >= new {
        return Err(HomotopyError::InvalidUnfold(format!(
            "vertex {xp} is not in the graph"
        )));
    }
    if nbrs.is_empty() {
        return Err(HomotopyError::InvalidUnfold(
            "new vertex would be isolated".into(),
        ));
    }
    if let Some(&w) = nbrs.iter().find(|&&w| w > new) {
        return Err(HomotopyError::InvalidUnfold(format!(
            "neighbor {w} is out of range"
        )));
    }
    let mut adj: Vec<Vec<usize>> = g.adjacency().to_vec();
    adj.push(nbrs.to_vec());
    let graph = Graph::from_adjacency(adj)?;
    if !is_foldable(&graph, new, xp) {
        return Err(HomotopyError::InvalidUnfold(format!(
            "N({new}) = {:?} is not contained in N({xp}) = {:?}",
            graph.neighbors(new),
            graph.neighbors(xp)
        )));
    }
    Ok(graph)
}

/// Folds the lowest foldable `x` onto its lowest valid `x'` until the graph
/// is stiff.
pub fn dismantle(g: &Graph) -> (Graph, FoldSequence) {
    dismantle_by(g, |pairs| pairs[0])
}

/// Dismantles with a seeded random choice among foldable pairs at each step.
pub fn dismantle_random(g: &Graph, seed: u64) -> (Graph, FoldSequence) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    dismantle_by(g, |pairs| *pairs.choose(&mut rng).unwrap())
}

fn dismantle_by(
    g: &Graph,
    mut choose: impl FnMut(&[(usize, usize)]) -> (usize, usize),
) -> (Graph, FoldSequence) {
    let mut cur = g.clone();
    let mut steps = Vec::new();
    loop {
        let pairs = foldable_pairs(&cur);
        if pairs.is_empty() {
            break;
        }
        let (x, xp) = choose(&pairs);
        cur = fold(&cur, x, xp).expect("pair was reported foldable").graph;
        steps.push(FoldStep::Fold { x, xp });
    }
    let seq = FoldSequence {
        steps,
        source: g.fingerprint(),
        target: cur.fingerprint(),
    };
    (cur, seq)
}

/// Evidence that two graphs share a stiff core: each sequence dismantles its
/// graph, and `core_map` is an isomorphism from the left core to the right.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Certificate {
    pub left: FoldSequence,
    pub right: FoldSequence,
    pub left_core: Vec<(usize, usize)>,
    pub right_core: Vec<(usize, usize)>,
    pub core_map: Vec<usize>,
}

impl Certificate {
    pub fn core_size(&self) -> usize {
        self.core_map.len()
    }
}

pub fn homotopy_equivalent(g: &Graph, h: &Graph) -> Result<Option<Certificate>, HomotopyError> {
    let (cg, left) = dismantle(g);
    let (ch, right) = dismantle(h);
    Ok(isomorphic(&cg, &ch)?.map(|core_map| Certificate {
        left,
        right,
        left_core: cg.edges(),
        right_core: ch.edges(),
        core_map,
    }))
}

/// Applies `steps` random unfolds and folds; the output is homotopy
/// equivalent to `g` by construction. Deterministic in `seed`.
pub fn random_perturbation(g: &Graph, steps: usize, seed: u64) -> Graph {
    perturbation_sequence(g, steps, seed).0
}

/// Like [`random_perturbation`] but also returns the applied steps.
pub fn perturbation_sequence(g: &Graph, steps: usize, seed: u64) -> (Graph, FoldSequence) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut cur = g.clone();
    let mut applied = Vec::with_capacity(steps);
    for _ in 0..steps {
        let pairs = foldable_pairs(&cur);
        if !pairs.is_empty() && rng.gen_bool(0.4) {
            let (x, xp) = *pairs.choose(&mut rng).unwrap();
            cur = fold(&cur, x, xp).expect("reported foldable").graph;
            applied.push(FoldStep::Fold { x, xp });
            continue;
        }
        let xp = rng.gen_range(0..cur.n());
        let pool = cur.neighbors(xp).to_vec();
        let mut nbrs: Vec<usize> = Vec::new();
        while nbrs.is_empty() {
            nbrs = pool.iter().copied().filter(|_| rng.gen_bool(0.5)).collect();
        }
        if cur.has_loop(xp) && nbrs.contains(&xp) && rng.gen_bool(0.3) {
            nbrs.push(cur.n());
        }
        let x = cur.n();
        cur = unfold(&cur, xp, &nbrs).expect("subsets of N(x') always unfold");
        applied.push(FoldStep::Unfold { x, xp, nbrs });
    }
    let seq = FoldSequence {
        steps: applied,
        source: g.fingerprint(),
        target: cur.fingerprint(),
    };
    (cur, seq)
}
