use itertools::Itertools;

use super::table::WinTable;
use super::{cop_move_captures, legal_moves, robber_move_captures, SolverError};

/// Table-backed optimal play. Moves are looked up on demand rather than
/// materialized for every state.
#[derive(Clone, Copy, Debug)]
pub struct Strategy<'t> {
    table: &'t WinTable,
}

pub fn extract_strategy<'t>(
    table: &'t WinTable,
    placement: &[usize],
) -> Result<Strategy<'t>, SolverError> {
    let n = table.graph().n();
    if placement.len() != table.k() || placement.iter().any(|&v| v >= n) {
        return Err(SolverError::BadPlacement {
            placement: placement.to_vec(),
            k: table.k(),
            n,
        });
    }
    if !table.is_winning_placement(placement) {
        return Err(SolverError::NotWinning {
            placement: placement.to_vec(),
        });
    }
    Ok(Strategy { table })
}

impl<'t> Strategy<'t> {
    pub fn table(&self) -> &'t WinTable {
        self.table
    }

    pub fn cop_move(&self, cops: &[usize], robber: usize) -> Vec<usize> {
        best_cop_move(self.table, cops, robber)
    }

    pub fn robber_move(&self, cops: &[usize], robber: usize) -> usize {
        best_robber_move(self.table, cops, robber)
    }
}

/// Joint move for the sorted cops, returned as one target per cop in the
/// same order. Captures first, then the smallest robber-to-move rank; ties go
/// to the lexicographically least move.
pub fn best_cop_move(table: &WinTable, cops: &[usize], robber: usize) -> Vec<usize> {
    let g = table.graph();
    let variant = table.variant();
    let mut sorted = cops.to_vec();
    sorted.sort_unstable();
    let mut best: Option<(u32, Vec<usize>)> = None;
    let mut next = Vec::with_capacity(sorted.len());
    for joint in sorted
        .iter()
        .map(|&c| legal_moves(g, c, variant))
        .multi_cartesian_product()
    {
        let key = if cop_move_captures(&joint, robber) {
            0
        } else {
            next.clear();
            next.extend_from_slice(&joint);
            next.sort_unstable();
            table
                .robber_rank(&next, robber)
                .map_or(u32::MAX, |r| r as u32 + 1)
        };
        if best.as_ref().is_none_or(|(k, _)| key < *k) {
            let done = key == 0;
            best = Some((key, joint));
            if done {
                break;
            }
        }
    }
    best.expect("every vertex has a legal move").1
}

/// Prefers a square the cops cannot win from, else the one with the largest
/// rank; stepping onto a cop where that loses is a last resort.
pub fn best_robber_move(table: &WinTable, cops: &[usize], robber: usize) -> usize {
    let g = table.graph();
    let variant = table.variant();
    let mut best = (0u32, usize::MAX);
    for r in legal_moves(g, robber, variant) {
        let key = if robber_move_captures(variant, cops, r) {
            0
        } else {
            table.cop_rank(cops, r).map_or(u32::MAX, |x| x as u32 + 1)
        };
        if best.1 == usize::MAX || key > best.0 {
            best = (key, r);
        }
    }
    best.1
}
