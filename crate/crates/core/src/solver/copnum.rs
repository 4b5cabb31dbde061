use itertools::Itertools;
use serde::Serialize;

use crate::graph::{bipartition, components, Graph};

use super::table::{solve_win_table_with, WinTable};
use super::{SolverError, Variant};

pub const DEFAULT_BUDGET: u64 = 200_000_000;

#[derive(Clone, Debug)]
pub struct SolverConfig {
    /// Largest table, in states, built for one (component, k).
    pub budget: u64,
    /// Largest k tried per component; defaults to the component's size.
    pub cap: Option<usize>,
    /// Solve components separately and add the answers.
    pub decompose: bool,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            budget: DEFAULT_BUDGET,
            cap: None,
            decompose: true,
        }
    }
}

/// A k that lost: `robber_witness` escapes the placement `against`, the
/// first one in enumeration order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct KFailure {
    pub k: usize,
    pub robber_witness: usize,
    pub against: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub component: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RankSummary {
    /// Worst start rank of the witness placement.
    pub max: u16,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Bounds {
    pub lower: usize,
    pub cap: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct SolveOutcome {
    pub variant: Variant,
    pub cop_number: usize,
    pub placement: Vec<usize>,
    pub per_k: Vec<KFailure>,
    pub ranks: RankSummary,
    pub bounds: Bounds,
}

impl SolveOutcome {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("outcome serializes")
    }
}

/// Smallest k worth trying: a loopless graph lets a lone sneaky robber sit
/// on the cop's square forever, since the cop has to step off it.
pub fn lower_bound(g: &Graph, variant: Variant) -> usize {
    if variant == Variant::SneakyActive && g.is_loopless() {
        2
    } else {
        1
    }
}

/// All k-multisets in search order: on bipartite graphs the splits closest
/// to even come first, lexicographic otherwise and within a split.
pub fn placement_order(g: &Graph, k: usize) -> Vec<Vec<usize>> {
    let mut all: Vec<Vec<usize>> = g.vertices().combinations_with_replacement(k).collect();
    let parts = bipartition(g);
    if parts.valid {
        all.sort_by_key(|c| {
            let (a, b) = parts.split_count(c);
            a.abs_diff(b)
        });
    }
    all
}

/// Every placement beating all robber starts, in search order.
pub fn winning_placements(table: &WinTable) -> Vec<Vec<usize>> {
    placement_order(table.graph(), table.k())
        .into_iter()
        .filter(|c| table.is_winning_placement(c))
        .collect()
}

fn first_winning(table: &WinTable) -> Option<Vec<usize>> {
    placement_order(table.graph(), table.k())
        .into_iter()
        .find(|c| table.is_winning_placement(c))
}

struct Part {
    k: usize,
    placement: Vec<usize>,
    max_rank: u16,
    failures: Vec<KFailure>,
}

fn solve_connected(
    g: &Graph,
    variant: Variant,
    lower: usize,
    cap: usize,
    budget: u64,
) -> Result<Part, SolverError> {
    let mut failures = Vec::new();
    for k in lower..=cap {
        let table = solve_win_table_with(g, k, variant, budget)?;
        if let Some(placement) = first_winning(&table) {
            let max_rank = table.placement_rank(&placement).expect("placement wins");
            return Ok(Part {
                k,
                placement,
                max_rank,
                failures,
            });
        }
        let against: Vec<usize> = placement_order(g, k).swap_remove(0);
        let robber_witness = table.escape(&against).expect("no placement wins");
        failures.push(KFailure {
            k,
            robber_witness,
            against,
            component: None,
        });
    }
    Err(SolverError::CapExceeded { cap, failures })
}

pub fn cop_number(
    g: &Graph,
    variant: Variant,
    cap: Option<usize>,
) -> Result<SolveOutcome, SolverError> {
    let config = SolverConfig {
        cap,
        ..SolverConfig::default()
    };
    cop_number_with(g, variant, &config)
}

/// Least k with a winning placement, found by trying k upward from the lower
/// bound. Components are solved apart because the robber commits to one.
pub fn cop_number_with(
    g: &Graph,
    variant: Variant,
    config: &SolverConfig,
) -> Result<SolveOutcome, SolverError> {
    let parts: Vec<(Vec<usize>, Graph)> = if config.decompose {
        components(g)
            .into_iter()
            .map(|c| (c.vertices, c.graph))
            .collect()
    } else {
        vec![(g.vertices().collect(), g.clone())]
    };
    let multi = parts.len() > 1;
    let mut outcome = SolveOutcome {
        variant,
        cop_number: 0,
        placement: Vec::new(),
        per_k: Vec::new(),
        ranks: RankSummary { max: 0 },
        bounds: Bounds { lower: 0, cap: 0 },
    };
    for (idx, (verts, part)) in parts.iter().enumerate() {
        let lower = lower_bound(part, variant);
        let cap = config.cap.unwrap_or(part.n());
        let relabel = |f: KFailure| KFailure {
            against: f.against.iter().map(|&v| verts[v]).collect(),
            robber_witness: verts[f.robber_witness],
            component: multi.then_some(idx),
            ..f
        };
        let solved = match solve_connected(part, variant, lower, cap, config.budget) {
            Ok(s) => s,
            Err(SolverError::CapExceeded { cap, failures }) => {
                let mut all = outcome.per_k;
                all.extend(failures.into_iter().map(relabel));
                return Err(SolverError::CapExceeded { cap, failures: all });
            }
            Err(e) => return Err(e),
        };
        outcome.cop_number += solved.k;
        outcome
            .placement
            .extend(solved.placement.iter().map(|&v| verts[v]));
        outcome
            .per_k
            .extend(solved.failures.into_iter().map(relabel));
        outcome.ranks.max = outcome.ranks.max.max(solved.max_rank);
        outcome.bounds.lower += lower;
        outcome.bounds.cap = outcome.bounds.cap.max(cap);
    }
    outcome.placement.sort_unstable();
    Ok(outcome)
}
