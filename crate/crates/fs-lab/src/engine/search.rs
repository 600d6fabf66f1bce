//! Reachability queries in FS(X,Y) without materializing the state space.
//!
//! `same_component` runs bidirectional BFS keyed on ranks, expanding the
//! smaller frontier one full level at a time. Every step is deterministic:
//! frontiers are expanded in insertion order and neighbors generated in the
//! fixed X-edge scan order, so the returned swap sequence for a given query
//! is always the same. A side whose frontier empties has exhausted its
//! component, which makes a negative answer definitive.

use std::collections::{HashMap, HashSet};

use super::{Connectivity::*, EngineError, FsInstance, SwapFilter};
use crate::perm::{rank_of, Bijection, PermRank, SwapSequence};

/// Outcome of a reachability query.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Connectivity {
    /// Same component. Carries the connecting swap sequence except when the
    /// answer came from a census fallback, which knows membership only.
    Connected(Option<SwapSequence>),
    Disconnected,
}

impl Connectivity {
    pub fn is_connected(&self) -> bool {
        matches!(self, Connected(_))
    }

    pub fn sequence(&self) -> Option<&SwapSequence> {
        match self {
            Connected(seq) => seq.as_ref(),
            Disconnected => None,
        }
    }
}

/// One direction of the search. `parents` records, for every non-root state,
/// the state it was discovered from and the swap that got there.
struct Side {
    root: u64,
    parents: HashMap<u64, (u64, (usize, usize))>,
    frontier: Vec<u64>,
}

impl Side {
    fn new(root: u64) -> Side {
        Side {
            root,
            parents: HashMap::new(),
            frontier: vec![root],
        }
    }

    fn seen(&self, rank: u64) -> bool {
        rank == self.root || self.parents.contains_key(&rank)
    }

    /// Swaps on the tree path from `rank` back to the root, in walk order.
    fn swaps_toward_root(&self, mut rank: u64) -> Vec<(usize, usize)> {
        let mut swaps = Vec::new();
        while rank != self.root {
            let (parent, swap) = self.parents[&rank];
            swaps.push(swap);
            rank = parent;
        }
        swaps
    }
}

/// Expands one BFS level of `side`. Returns the first newly discovered rank
/// that the other side has already seen, if any.
fn expand_level(
    inst: &FsInstance,
    side: &mut Side,
    other: &Side,
    filter: Option<&SwapFilter>,
) -> Option<u64> {
    let n = inst.n();
    let mut next = Vec::new();
    for i in 0..side.frontier.len() {
        let rank = side.frontier[i];
        let mut map: Vec<usize> = PermRank::new(rank, n)
            .expect("ranks in the search stay below n!")
            .unrank()
            .into();
        for &(a, c) in inst.x_edges() {
            let (u, v) = (map[a], map[c]);
            if !inst.y().has_edge(u, v) {
                continue;
            }
            if let Some(f) = filter {
                if !f.allows(u, v) {
                    continue;
                }
            }
            map.swap(a, c);
            let neighbor = rank_of(&map);
            map.swap(a, c);
            if side.seen(neighbor) {
                continue;
            }
            side.parents.insert(neighbor, (rank, (u.min(v), u.max(v))));
            next.push(neighbor);
            if other.seen(neighbor) {
                side.frontier = next;
                return Some(neighbor);
            }
        }
    }
    side.frontier = next;
    None
}

pub(crate) fn same_component(
    inst: &FsInstance,
    a: &Bijection,
    b: &Bijection,
    filter: Option<&SwapFilter>,
) -> Result<Connectivity, EngineError> {
    if a == b {
        return Ok(Connected(Some(SwapSequence::new())));
    }
    let mut fwd = Side::new(a.rank().index());
    let mut bwd = Side::new(b.rank().index());
    let budget = inst.config().search_budget;

    loop {
        if fwd.frontier.is_empty() || bwd.frontier.is_empty() {
            return Ok(Disconnected);
        }
        let visited = 2 + fwd.parents.len() + bwd.parents.len();
        if visited > budget {
            // Unfiltered membership can still be decided by a full census.
            if filter.is_none() && inst.n() <= inst.config().census_cap {
                let census = inst.component_census()?;
                return Ok(if census.same_component(a, b) {
                    Connected(None)
                } else {
                    Disconnected
                });
            }
            return Err(EngineError::BudgetExhausted { visited, budget });
        }
        let meet = if fwd.frontier.len() <= bwd.frontier.len() {
            expand_level(inst, &mut fwd, &bwd, filter)
        } else {
            expand_level(inst, &mut bwd, &fwd, filter)
        };
        if let Some(meet) = meet {
            // Forward swaps were collected walking away from `a`, so they
            // reverse; backward swaps are involutions walked toward `b`, so
            // they apply as collected.
            let mut swaps = fwd.swaps_toward_root(meet);
            swaps.reverse();
            swaps.extend(bwd.swaps_toward_root(meet));
            let seq = SwapSequence(swaps);
            debug_assert_eq!(
                inst.apply_sequence(a, &seq).expect("search paths replay"),
                *b
            );
            return Ok(Connected(Some(seq)));
        }
    }
}

pub(crate) fn reach_any(
    inst: &FsInstance,
    from: &Bijection,
    targets: &HashSet<u64>,
    filter: Option<&SwapFilter>,
) -> Result<Connectivity, EngineError> {
    let start = from.rank().index();
    if targets.contains(&start) {
        return Ok(Connected(Some(SwapSequence::new())));
    }
    let n = inst.n();
    let mut side = Side::new(start);
    let budget = inst.config().search_budget;

    loop {
        if side.frontier.is_empty() {
            return Ok(Disconnected);
        }
        let visited = 1 + side.parents.len();
        if visited > budget {
            return Err(EngineError::BudgetExhausted { visited, budget });
        }
        let mut next = Vec::new();
        let mut hit = None;
        'level: for i in 0..side.frontier.len() {
            let rank = side.frontier[i];
            let mut map: Vec<usize> = PermRank::new(rank, n)
                .expect("ranks in the search stay below n!")
                .unrank()
                .into();
            for &(a, c) in inst.x_edges() {
                let (u, v) = (map[a], map[c]);
                if !inst.y().has_edge(u, v) {
                    continue;
                }
                if let Some(f) = filter {
                    if !f.allows(u, v) {
                        continue;
                    }
                }
                map.swap(a, c);
                let neighbor = rank_of(&map);
                map.swap(a, c);
                if side.seen(neighbor) {
                    continue;
                }
                side.parents.insert(neighbor, (rank, (u.min(v), u.max(v))));
                next.push(neighbor);
                if targets.contains(&neighbor) {
                    hit = Some(neighbor);
                    break 'level;
                }
            }
        }
        side.frontier = next;
        if let Some(hit) = hit {
            let mut swaps = side.swaps_toward_root(hit);
            swaps.reverse();
            let seq = SwapSequence(swaps);
            debug_assert!(targets.contains(
                &inst
                    .apply_sequence(from, &seq)
                    .expect("search paths replay")
                    .rank()
                    .index()
            ));
            return Ok(Connected(Some(seq)));
        }
    }
}
