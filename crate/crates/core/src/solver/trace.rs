use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::strategy::{best_cop_move, best_robber_move};
use super::table::WinTable;
use super::{cop_move_captures, legal_moves, robber_move_captures};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RobberPolicy {
    /// Table-driven: stay out of the cop-win set, else maximize rank.
    Evader,
    /// Uniform over legal moves.
    Random(u64),
    /// Step onto a cop whenever one is in reach, else move like `Evader`.
    Shadow,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Mover {
    Placement,
    Cops,
    Robber,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TurnRecord {
    pub turn: usize,
    pub mover: Mover,
    pub cops: Vec<usize>,
    pub robber: usize,
    pub capture: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct Trace {
    records: Vec<TurnRecord>,
}

impl Trace {
    pub fn records(&self) -> &[TurnRecord] {
        &self.records
    }

    pub fn captured(&self) -> bool {
        self.records.last().is_some_and(|r| r.capture)
    }

    pub fn cop_turns(&self) -> usize {
        self.records
            .iter()
            .filter(|r| r.mover == Mover::Cops)
            .count()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.records).expect("records serialize")
    }
}

/// Plays the game from `placement` and `robber_start` with the cops on the
/// table strategy, for at most `max_turns` rounds of cop move plus robber
/// move.
pub fn simulate_trace(
    table: &WinTable,
    placement: &[usize],
    robber_start: usize,
    policy: RobberPolicy,
    max_turns: usize,
) -> Trace {
    let g = table.graph();
    let variant = table.variant();
    let mut rng = match policy {
        RobberPolicy::Random(seed) => Some(ChaCha8Rng::seed_from_u64(seed)),
        _ => None,
    };
    let mut cops = placement.to_vec();
    cops.sort_unstable();
    let mut robber = robber_start;
    let mut records = vec![TurnRecord {
        turn: 0,
        mover: Mover::Placement,
        cops: cops.clone(),
        robber,
        capture: false,
    }];
    for turn in 1..=max_turns {
        cops = best_cop_move(table, &cops, robber);
        cops.sort_unstable();
        let capture = cop_move_captures(&cops, robber);
        records.push(TurnRecord {
            turn,
            mover: Mover::Cops,
            cops: cops.clone(),
            robber,
            capture,
        });
        if capture {
            break;
        }
        robber = match policy {
            RobberPolicy::Evader => best_robber_move(table, &cops, robber),
            RobberPolicy::Random(_) => {
                let moves = legal_moves(g, robber, variant);
                *moves
                    .choose(rng.as_mut().expect("seeded"))
                    .expect("no isolated vertices")
            }
            RobberPolicy::Shadow => legal_moves(g, robber, variant)
                .into_iter()
                .find(|r| cops.contains(r))
                .unwrap_or_else(|| best_robber_move(table, &cops, robber)),
        };
        let capture = robber_move_captures(variant, &cops, robber);
        records.push(TurnRecord {
            turn,
            mover: Mover::Robber,
            cops: cops.clone(),
            robber,
            capture,
        });
        if capture {
            break;
        }
    }
    Trace { records }
}
