//! Independent reference implementation for cross-checking the solver.
//!
//! The oracle plays the game tree directly: `cops_within(C, r, t)` asks
//! whether the cops can force capture in at most `t` of their own moves. A
//! robber that survives forever must repeat a position, so once raising the
//! horizon stops changing any answer the remaining states are robber wins.
//! Moves are generated here from raw adjacency, not from the crate.

#![allow(dead_code)]

use std::collections::{BTreeSet, HashMap};

use copnum::graph::Graph;
use copnum::solver::Variant;

pub struct Oracle<'g> {
    g: &'g Graph,
    variant: Variant,
    moves: Vec<Vec<usize>>,
    memo_cops: HashMap<(Vec<usize>, usize, usize), bool>,
    memo_robber: HashMap<(Vec<usize>, usize, usize), bool>,
}

impl<'g> Oracle<'g> {
    pub fn new(g: &'g Graph, variant: Variant) -> Oracle<'g> {
        let n = g.n();
        let moves = (0..n)
            .map(|v| {
                (0..n)
                    .filter(|&w| g.has_edge(v, w) || (w == v && variant == Variant::Classic))
                    .collect()
            })
            .collect();
        Oracle {
            g,
            variant,
            moves,
            memo_cops: HashMap::new(),
            memo_robber: HashMap::new(),
        }
    }

    fn joint_moves(&self, cops: &[usize]) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new()];
        for &c in cops {
            let mut next = Vec::new();
            for partial in &out {
                for &m in &self.moves[c] {
                    let mut p = partial.clone();
                    p.push(m);
                    next.push(p);
                }
            }
            out = next;
        }
        out
    }

    /// Cops to move from `cops` (any order) with the robber on `r`.
    pub fn cops_within(&mut self, cops: &[usize], r: usize, t: usize) -> bool {
        if t == 0 {
            return false;
        }
        let mut key = cops.to_vec();
        key.sort_unstable();
        if let Some(&v) = self.memo_cops.get(&(key.clone(), r, t)) {
            return v;
        }
        let mut win = false;
        for next in self.joint_moves(&key) {
            if next.contains(&r) || self.robber_within(&next, r, t - 1) {
                win = true;
                break;
            }
        }
        self.memo_cops.insert((key, r, t), win);
        win
    }

    /// Robber to move, no cop on `r`; `t` more cop moves allowed.
    pub fn robber_within(&mut self, cops: &[usize], r: usize, t: usize) -> bool {
        if t == 0 {
            return false;
        }
        let mut key = cops.to_vec();
        key.sort_unstable();
        if let Some(&v) = self.memo_robber.get(&(key.clone(), r, t)) {
            return v;
        }
        let steps = self.moves[r].clone();
        let caught_by_stepping = self.variant != Variant::SneakyActive;
        let win = steps
            .iter()
            .all(|&r2| (caught_by_stepping && key.contains(&r2)) || self.cops_within(&key, r2, t));
        self.memo_robber.insert((key, r, t), win);
        win
    }

    pub fn all_multisets(&self, k: usize) -> Vec<Vec<usize>> {
        let n = self.g.n();
        let mut out = Vec::new();
        let mut cur = Vec::new();
        fn rec(n: usize, k: usize, from: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if cur.len() == k {
                out.push(cur.clone());
                return;
            }
            for v in from..n {
                cur.push(v);
                rec(n, k, v, cur, out);
                cur.pop();
            }
        }
        rec(n, k, 0, &mut cur, &mut out);
        out
    }

    /// Least `t` with capture forced within `t` cop moves, for every state;
    /// `None` marks robber wins.
    pub fn solve(&mut self, k: usize) -> OracleTable {
        let sets = self.all_multisets(k);
        let n = self.g.n();
        let mut cop = HashMap::new();
        let mut robber = HashMap::new();
        let mut t = 1;
        loop {
            let mut changed = false;
            for c in &sets {
                for r in 0..n {
                    if !cop.contains_key(&(c.clone(), r)) && self.cops_within(c, r, t) {
                        cop.insert((c.clone(), r), t);
                        changed = true;
                    }
                    if !c.contains(&r)
                        && !robber.contains_key(&(c.clone(), r))
                        && self.robber_within(c, r, t)
                    {
                        robber.insert((c.clone(), r), t);
                        changed = true;
                    }
                }
            }
            if !changed {
                break;
            }
            t += 1;
        }
        OracleTable { cop, robber }
    }
}

pub struct OracleTable {
    /// (cops, robber) -> least number of cop moves to capture, cops to move.
    pub cop: HashMap<(Vec<usize>, usize), usize>,
    /// Same with the robber to move.
    pub robber: HashMap<(Vec<usize>, usize), usize>,
}

/// Every connected graph on `1..=max_n` vertices with every loop pattern,
/// one representative per isomorphism class.
pub fn small_connected_graphs(max_n: usize) -> Vec<Graph> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        let slots: Vec<(usize, usize)> = (0..n).flat_map(|u| (u..n).map(move |v| (u, v))).collect();
        let perms = permutations(n);
        let mut seen = BTreeSet::new();
        for mask in 0u64..(1 << slots.len()) {
            let edges: Vec<(usize, usize)> = slots
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            let Ok(g) = Graph::build(n, edges.iter().copied()) else {
                continue;
            };
            if !g.is_connected() {
                continue;
            }
            let canon = perms
                .iter()
                .map(|p| {
                    let mut code = 0u64;
                    for &(u, v) in &edges {
                        let (a, b) = (p[u].min(p[v]), p[u].max(p[v]));
                        let idx = slots.iter().position(|&s| s == (a, b)).unwrap();
                        code |= 1 << idx;
                    }
                    code
                })
                .min()
                .unwrap();
            if seen.insert(canon) {
                out.push(g);
            }
        }
    }
    out
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for at in 0..=p.len() {
            let mut q = p.clone();
            q.insert(at, n - 1);
            out.push(q);
        }
    }
    out
}

pub fn family(s: &str) -> Graph {
    copnum::graph::generate(&s.parse().unwrap()).unwrap()
}

/// Compares the solver's table with the oracle on every state. Returns the
/// first disagreement.
pub fn compare_with_oracle(g: &Graph, k: usize, variant: Variant) -> Result<usize, String> {
    use copnum::solver::{solve_win_table, Status, Turn};
    let table = solve_win_table(g, k, variant).map_err(|e| e.to_string())?;
    let mut oracle = Oracle::new(g, variant);
    let want = oracle.solve(k);
    let ms = table.multisets();
    let mut compared = 0;
    for i in 0..ms.count() {
        let cops = ms.get(i);
        for r in g.vertices() {
            let got = table.status_at(i, r, Turn::CopToMove);
            let exp = want.cop.get(&(cops.clone(), r)).map(|&t| (t - 1) as u16);
            if got.rank() != exp {
                return Err(format!(
                    "{variant} k={k} cops {cops:?} robber {r} cop-to-move: {got:?} vs {exp:?}"
                ));
            }
            let got = table.status_at(i, r, Turn::RobberToMove);
            if cops.contains(&r) {
                if got != Status::Captured {
                    return Err(format!("{cops:?} {r}: expected Captured, got {got:?}"));
                }
            } else {
                let exp = want.robber.get(&(cops.clone(), r)).map(|&t| (t - 1) as u16);
                if got.rank() != exp {
                    return Err(format!(
                        "{variant} k={k} cops {cops:?} robber {r} robber-to-move: {got:?} vs {exp:?}"
                    ));
                }
            }
            compared += 2;
        }
    }
    Ok(compared)
}
