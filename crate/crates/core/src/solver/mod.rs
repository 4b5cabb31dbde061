//! Exact solving of the three game variants by backward induction over the
//! dense table of (cop multiset, robber, side to move) states.

mod copnum;
mod index;
mod strategy;
mod table;
mod trace;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, GraphError};

pub use copnum::{
    cop_number, cop_number_with, lower_bound, placement_order, winning_placements, Bounds,
    KFailure, RankSummary, SolveOutcome, SolverConfig, DEFAULT_BUDGET,
};
pub use index::{binomial, multiset_count, Multisets};
pub use strategy::{best_cop_move, best_robber_move, extract_strategy, Strategy};
pub use table::{solve_win_table, solve_win_table_with, state_count, Status, WinTable};
pub use trace::{simulate_trace, Mover, RobberPolicy, Trace, TurnRecord};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Variant {
    #[serde(rename = "classic")]
    Classic,
    #[serde(rename = "fully-active")]
    FullyActive,
    #[serde(rename = "sneaky-active")]
    SneakyActive,
}

impl Variant {
    pub const ALL: [Variant; 3] = [
        Variant::Classic,
        Variant::FullyActive,
        Variant::SneakyActive,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Variant::Classic => "classic",
            Variant::FullyActive => "fully-active",
            Variant::SneakyActive => "sneaky-active",
        }
    }

    /// Whether a robber stepping onto a cop is caught.
    pub fn robber_move_can_capture(self) -> bool {
        !matches!(self, Variant::SneakyActive)
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Variant {
    type Err = String;

    fn from_str(s: &str) -> Result<Variant, String> {
        match s {
            "classic" => Ok(Variant::Classic),
            "active" | "fully-active" => Ok(Variant::FullyActive),
            "sneaky" | "sneaky-active" => Ok(Variant::SneakyActive),
            _ => Err(format!(
                "unknown variant `{s}` (expected classic, active or sneaky)"
            )),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Turn {
    CopToMove,
    RobberToMove,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GameState {
    pub cops: Vec<usize>,
    pub robber: usize,
    pub turn: Turn,
}

impl GameState {
    pub fn new(mut cops: Vec<usize>, robber: usize, turn: Turn) -> GameState {
        cops.sort_unstable();
        GameState { cops, robber, turn }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SolverError {
    #[error("{states} states exceed the budget of {limit}")]
    BudgetExceeded { states: u64, limit: u64 },
    #[error("no k <= {cap} wins ({} values of k tried)", failures.len())]
    CapExceeded { cap: usize, failures: Vec<KFailure> },
    #[error("placement {placement:?} does not defeat every robber start")]
    NotWinning { placement: Vec<usize> },
    #[error("need at least one cop")]
    NoCops,
    #[error("placement {placement:?} does not fit the table (k = {k}, n = {n})")]
    BadPlacement {
        placement: Vec<usize>,
        k: usize,
        n: usize,
    },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Where a piece on `v` may go next: classic adds staying put, the active
/// variants only allow staying through a loop.
pub fn legal_moves(g: &Graph, v: usize, variant: Variant) -> Vec<usize> {
    let mut moves = g.neighbors(v).to_vec();
    if variant == Variant::Classic && !g.has_loop(v) {
        let at = moves.partition_point(|&w| w < v);
        moves.insert(at, v);
    }
    moves
}

/// Capture check after the cops moved to `cops`.
pub fn cop_move_captures(cops: &[usize], robber: usize) -> bool {
    cops.contains(&robber)
}

/// Capture check after the robber moved onto `robber`.
pub fn robber_move_captures(variant: Variant, cops: &[usize], robber: usize) -> bool {
    variant.robber_move_can_capture() && cops.contains(&robber)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, Family};

    #[test]
    fn legal_moves_examples() {
        let p5 = generate(&Family::Path(5)).unwrap();
        let i4 = generate(&Family::LoopedPath(4)).unwrap();
        assert_eq!(legal_moves(&p5, 2, Variant::SneakyActive), vec![1, 3]);
        assert_eq!(legal_moves(&i4, 2, Variant::SneakyActive), vec![1, 2, 3]);
        assert_eq!(legal_moves(&p5, 2, Variant::Classic), vec![1, 2, 3]);
        assert_eq!(legal_moves(&i4, 2, Variant::Classic), vec![1, 2, 3]);
        assert_eq!(legal_moves(&p5, 0, Variant::FullyActive), vec![1]);
    }

    #[test]
    fn sneaky_robber_never_captured_by_own_move() {
        let c5 = generate(&Family::Cycle(5)).unwrap();
        for r in c5.vertices() {
            for r2 in legal_moves(&c5, r, Variant::SneakyActive) {
                assert!(!robber_move_captures(Variant::SneakyActive, &[r2], r2));
                assert!(robber_move_captures(Variant::FullyActive, &[r2], r2));
            }
        }
    }

    #[test]
    fn variant_names() {
        for v in Variant::ALL {
            assert_eq!(v.name().parse::<Variant>().unwrap(), v);
            assert_eq!(serde_json::to_string(&v).unwrap(), format!("\"{v}\""));
        }
        assert_eq!("active".parse::<Variant>().unwrap(), Variant::FullyActive);
        assert!("lazy".parse::<Variant>().is_err());
    }
}
