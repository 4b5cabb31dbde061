use crate::graph::Graph;

use super::index::{multiset_count, Multisets};
use super::{legal_moves, GameState, SolverError, Turn, Variant};

const NOT_WIN: u16 = u16::MAX;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    /// The cops force capture; rank 0 means the next cop move captures.
    CopWin(u16),
    RobberWin,
    /// Robber-to-move state with a cop already on the robber.
    Captured,
}

impl Status {
    pub fn is_cop_win(self) -> bool {
        matches!(self, Status::CopWin(_))
    }

    pub fn rank(self) -> Option<u16> {
        match self {
            Status::CopWin(r) => Some(r),
            _ => None,
        }
    }
}

/// Least-fixpoint labeling of every state of one (graph, k, variant) game.
///
/// A cop-to-move state entering at iteration `i` has rank `i`; from it the
/// cops capture within `i + 1` of their moves.
#[derive(Clone, Debug)]
pub struct WinTable {
    graph: Graph,
    fingerprint: String,
    variant: Variant,
    sets: Multisets,
    cop_rank: Vec<u16>,
    robber_rank: Vec<u16>,
    iterations: usize,
}

/// Total number of states, both sides to move, saturating.
pub fn state_count(n: usize, k: usize) -> u64 {
    multiset_count(n, k)
        .saturating_mul(n as u64)
        .saturating_mul(2)
}

pub fn solve_win_table(g: &Graph, k: usize, variant: Variant) -> Result<WinTable, SolverError> {
    solve_win_table_with(g, k, variant, super::DEFAULT_BUDGET)
}

pub fn solve_win_table_with(
    g: &Graph,
    k: usize,
    variant: Variant,
    budget: u64,
) -> Result<WinTable, SolverError> {
    if k == 0 {
        return Err(SolverError::NoCops);
    }
    let states = state_count(g.n(), k);
    if states > budget {
        return Err(SolverError::BudgetExceeded {
            states,
            limit: budget,
        });
    }
    Ok(Solver::new(g, k, variant).run())
}

struct Bits {
    words: usize,
}

impl Bits {
    fn set(&self, buf: &mut [u64], row: usize, v: usize) {
        buf[row * self.words + v / 64] |= 1 << (v % 64);
    }

    fn get(&self, buf: &[u64], row: usize, v: usize) -> bool {
        buf[row * self.words + v / 64] >> (v % 64) & 1 == 1
    }

    fn row<'a>(&self, buf: &'a [u64], row: usize) -> &'a [u64] {
        &buf[row * self.words..(row + 1) * self.words]
    }
}

/// Joint cop moves are unions over a product of per-cop choices. Rather than
/// enumerating the product, cops are moved one at a time: stage `j` holds, for
/// every (unmoved multiset `U` with `k - j` cops, moved multiset `M` with `j`
/// cops), the union over all ways of moving `U` and adding it to `M`.
struct Solver<'g> {
    g: &'g Graph,
    k: usize,
    variant: Variant,
    n: usize,
    bits: Bits,
    // sets[s] ranks multisets of size s
    sets: Vec<Multisets>,
    // pop[s][u] = (smallest element of U, rank of the rest), for |U| = s >= 1
    pop: Vec<Vec<(u32, u32)>>,
    // insert[s][m * n + t] = rank of M + {t}, for |M| = s < k
    insert: Vec<Vec<u32>>,
    moves: Vec<Vec<usize>>,
    move_bits: Vec<u64>,
    masks: Vec<u64>,
}

impl<'g> Solver<'g> {
    fn new(g: &'g Graph, k: usize, variant: Variant) -> Solver<'g> {
        let n = g.n();
        let bits = Bits {
            words: n.div_ceil(64),
        };
        let sets: Vec<Multisets> = (0..=k).map(|s| Multisets::new(n, s)).collect();
        let mut pop = vec![Vec::new()];
        let mut scratch = Vec::new();
        for s in 1..=k {
            let table = (0..sets[s].count())
                .map(|u| {
                    let c = sets[s].get(u);
                    (c[0] as u32, sets[s - 1].rank(&c[1..]) as u32)
                })
                .collect();
            pop.push(table);
        }
        let mut insert = Vec::new();
        for s in 0..k {
            let mut table = Vec::with_capacity(sets[s].count() * n);
            for m in 0..sets[s].count() {
                let base = sets[s].get(m);
                for t in 0..n {
                    scratch.clear();
                    scratch.extend_from_slice(&base);
                    let at = scratch.partition_point(|&x| x <= t);
                    scratch.insert(at, t);
                    table.push(sets[s + 1].rank(&scratch) as u32);
                }
            }
            insert.push(table);
        }
        let moves: Vec<Vec<usize>> = g.vertices().map(|v| legal_moves(g, v, variant)).collect();
        let mut move_bits = vec![0u64; n * bits.words];
        for (v, mv) in moves.iter().enumerate() {
            for &w in mv {
                bits.set(&mut move_bits, v, w);
            }
        }
        let count = sets[k].count();
        let mut masks = vec![0u64; count * bits.words];
        for c in 0..count {
            for v in sets[k].get(c) {
                bits.set(&mut masks, c, v);
            }
        }
        Solver {
            g,
            k,
            variant,
            n,
            bits,
            sets,
            pop,
            insert,
            moves,
            move_bits,
            masks,
        }
    }

    /// `out[C] = union over joint moves C -> C' of src[C']`.
    fn sweep(&self, src: &[u64], out: &mut Vec<u64>) {
        let w = self.bits.words;
        let mut next = src.to_vec();
        let mut cur = Vec::new();
        for j in (0..self.k).rev() {
            let us = self.k - j;
            let cu = self.sets[us].count();
            let cm = self.sets[j].count();
            let cm_next = self.sets[j + 1].count();
            cur.clear();
            cur.resize(cu * cm * w, 0);
            for u in 0..cu {
                let (v, rest) = self.pop[us][u];
                let rest = rest as usize;
                for &t in &self.moves[v as usize] {
                    for m in 0..cm {
                        let m2 = self.insert[j][m * self.n + t] as usize;
                        let from = (rest * cm_next + m2) * w;
                        let to = (u * cm + m) * w;
                        for i in 0..w {
                            cur[to + i] |= next[from + i];
                        }
                    }
                }
            }
            std::mem::swap(&mut next, &mut cur);
        }
        *out = next;
    }

    fn run(self) -> WinTable {
        let n = self.n;
        let w = self.bits.words;
        let count = self.sets[self.k].count();
        let mut cop_rank = vec![NOT_WIN; count * n];
        let mut robber_rank = vec![NOT_WIN; count * n];
        let robber_caught = self.variant.robber_move_can_capture();

        // g = robber-to-move wins (B) plus the cop squares themselves
        let mut g = self.masks.clone();
        let mut a = Vec::new();
        let mut a_prev = vec![0u64; count * w];
        let mut b = vec![0u64; count * w];
        let mut iteration = 0usize;
        let mut safe = vec![0u64; w];
        loop {
            self.sweep(&g, &mut a);
            if a == a_prev {
                break;
            }
            assert!(iteration < NOT_WIN as usize, "rank overflow");
            let rank = iteration as u16;
            for c in 0..count {
                for r in 0..n {
                    if self.bits.get(&a, c, r) && !self.bits.get(&a_prev, c, r) {
                        cop_rank[c * n + r] = rank;
                    }
                }
            }
            for c in 0..count {
                let row_a = self.bits.row(&a, c);
                let mask = self.bits.row(&self.masks, c);
                for i in 0..w {
                    safe[i] = row_a[i] | if robber_caught { mask[i] } else { 0 };
                }
                for r in 0..n {
                    if self.bits.get(&self.masks, c, r) || self.bits.get(&b, c, r) {
                        continue;
                    }
                    let mv = self.bits.row(&self.move_bits, r);
                    if (0..w).all(|i| mv[i] & !safe[i] == 0) {
                        self.bits.set(&mut b, c, r);
                        robber_rank[c * n + r] = rank;
                    }
                }
            }
            for i in 0..g.len() {
                g[i] = b[i] | self.masks[i];
            }
            std::mem::swap(&mut a_prev, &mut a);
            iteration += 1;
        }
        WinTable {
            graph: self.g.clone(),
            fingerprint: self.g.fingerprint(),
            variant: self.variant,
            sets: self
                .sets
                .into_iter()
                .nth(self.k)
                .expect("k-th level exists"),
            cop_rank,
            robber_rank,
            iterations: iteration,
        }
    }
}

impl WinTable {
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn fingerprint(&self) -> &str {
        &self.fingerprint
    }

    pub fn k(&self) -> usize {
        self.sets.k()
    }

    pub fn variant(&self) -> Variant {
        self.variant
    }

    pub fn multisets(&self) -> &Multisets {
        &self.sets
    }

    /// Fixpoint iterations that added states.
    pub fn iterations(&self) -> usize {
        self.iterations
    }

    fn index(&self, cops: &[usize]) -> usize {
        if cops.windows(2).all(|w| w[0] <= w[1]) {
            self.sets.rank(cops)
        } else {
            let mut sorted = cops.to_vec();
            sorted.sort_unstable();
            self.sets.rank(&sorted)
        }
    }

    /// Rank of the cop-to-move state, if the cops win it.
    pub fn cop_rank(&self, cops: &[usize], robber: usize) -> Option<u16> {
        let r = self.cop_rank[self.index(cops) * self.graph.n() + robber];
        (r != NOT_WIN).then_some(r)
    }

    /// Rank of the robber-to-move state with no cop on the robber.
    pub fn robber_rank(&self, cops: &[usize], robber: usize) -> Option<u16> {
        let r = self.robber_rank[self.index(cops) * self.graph.n() + robber];
        (r != NOT_WIN).then_some(r)
    }

    pub fn status(&self, state: &GameState) -> Status {
        let rank = match state.turn {
            Turn::CopToMove => self.cop_rank(&state.cops, state.robber),
            Turn::RobberToMove => {
                if state.cops.contains(&state.robber) {
                    return Status::Captured;
                }
                self.robber_rank(&state.cops, state.robber)
            }
        };
        rank.map_or(Status::RobberWin, Status::CopWin)
    }

    /// Status by multiset rank, for exhaustive comparisons.
    pub fn status_at(&self, cop_index: usize, robber: usize, turn: Turn) -> Status {
        let n = self.graph.n();
        let raw = match turn {
            Turn::CopToMove => self.cop_rank[cop_index * n + robber],
            Turn::RobberToMove => {
                if self.sets.get(cop_index).contains(&robber) {
                    return Status::Captured;
                }
                self.robber_rank[cop_index * n + robber]
            }
        };
        if raw == NOT_WIN {
            Status::RobberWin
        } else {
            Status::CopWin(raw)
        }
    }

    /// Worst start rank over robber placements, or `None` if some robber
    /// start escapes.
    pub fn placement_rank(&self, cops: &[usize]) -> Option<u16> {
        let row = self.index(cops) * self.graph.n();
        let ranks = &self.cop_rank[row..row + self.graph.n()];
        if ranks.contains(&NOT_WIN) {
            None
        } else {
            ranks.iter().copied().max()
        }
    }

    pub fn is_winning_placement(&self, cops: &[usize]) -> bool {
        self.placement_rank(cops).is_some()
    }

    /// Least robber start escaping `cops`.
    pub fn escape(&self, cops: &[usize]) -> Option<usize> {
        let row = self.index(cops) * self.graph.n();
        self.cop_rank[row..row + self.graph.n()]
            .iter()
            .position(|&r| r == NOT_WIN)
    }

    pub fn max_rank(&self) -> Option<u16> {
        self.cop_rank
            .iter()
            .copied()
            .filter(|&r| r != NOT_WIN)
            .max()
    }

    pub fn cop_win_count(&self) -> usize {
        self.cop_rank.iter().filter(|&&r| r != NOT_WIN).count()
    }
}
