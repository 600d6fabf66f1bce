//! The FS(X,Y) engine.
//!
//! For two graphs X and Y on the same vertex count n, the friends-and-
//! strangers graph FS(X,Y) has the n! bijections V(X) → V(Y) as vertices;
//! bijections σ and τ are adjacent when τ = (u,v) ∘ σ for a friendly swap:
//! a pair {u,v} ⊆ V(Y) with (u,v) ∈ E(Y) whose current positions are
//! adjacent in X, i.e. (σ⁻¹(u), σ⁻¹(v)) ∈ E(X).
//!
//! Bijections are addressed by Lehmer rank, so the whole state space is the
//! integer interval [0, n!) and never materialized. Censuses run a flat
//! union-find over that interval; reachability queries run bidirectional
//! breadth-first search keyed on ranks.

mod census;
mod search;
mod union_find;

pub use census::{CensusJson, Component, ComponentCensus, HARD_CENSUS_LIMIT};
pub use search::Connectivity;

use std::collections::HashSet;

use thiserror::Error;

use crate::graph::{Graph, VertexSet};
use crate::perm::{Bijection, PermError, SwapSequence, MAX_RANK_N};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum EngineError {
    #[error("X has {x} vertices but Y has {y}; FS(X,Y) needs equal vertex counts")]
    MismatchedSizes { x: usize, y: usize },
    #[error("FS instances need between 1 and {MAX_RANK_N} vertices, got {0}")]
    UnsupportedSize(usize),
    #[error("bijection acts on {got} elements, instance has {expected} vertices")]
    BijectionSize { expected: usize, got: usize },
    #[error(
        "census over {n}! states needs roughly {estimated_mib} MiB \
         (8 bytes per state); the cap is currently n = {cap}"
    )]
    CensusOverCap {
        n: usize,
        cap: usize,
        estimated_mib: u64,
    },
    #[error("census index space {0}! exceeds u32 slots; censuses stop at n = {HARD_CENSUS_LIMIT}")]
    CensusUnsupported(usize),
    #[error("swap filter forbids vertex {vertex}, which is not a Y-vertex (n = {n})")]
    FilterOutOfRange { vertex: usize, n: usize },
    #[error("search budget of {budget} visited states exhausted after {visited}")]
    BudgetExhausted { visited: usize, budget: usize },
    #[error("swap {pair:?} at step {step} is not friendly from the current bijection")]
    IllegalSwap { step: usize, pair: (usize, usize) },
    #[error("failed to build thread pool: {0}")]
    ThreadPool(String),
    #[error(transparent)]
    Perm(#[from] PermError),
}

/// Resource knobs. Defaults keep casual use well inside desk-scale memory.
#[derive(Debug, Clone)]
pub struct EngineConfig {
    /// Largest n for which a full census is attempted (state count n!).
    pub census_cap: usize,
    /// Worker threads for the census scan; `None` uses the global pool.
    pub threads: Option<usize>,
    /// Max states a reachability search may visit before falling back to a
    /// census (when one is allowed) or giving up.
    pub search_budget: usize,
}

impl Default for EngineConfig {
    fn default() -> Self {
        EngineConfig {
            census_cap: 10,
            threads: None,
            search_budget: 2_000_000,
        }
    }
}

/// Restricts searches to swaps that avoid a set of Y-vertices entirely.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SwapFilter {
    forbidden: VertexSet,
}

impl SwapFilter {
    pub fn forbidding<I: IntoIterator<Item = usize>>(vertices: I) -> SwapFilter {
        SwapFilter {
            forbidden: vertices.into_iter().collect(),
        }
    }

    pub fn forbidden(&self) -> VertexSet {
        self.forbidden
    }

    pub fn allows(&self, u: usize, v: usize) -> bool {
        !self.forbidden.contains(u) && !self.forbidden.contains(v)
    }
}

/// An immutable FS(X,Y) problem instance. Construction fixes the X-edge
/// scan order (sorted), which makes swap enumeration, censuses, and returned
/// swap sequences deterministic.
#[derive(Debug, Clone)]
pub struct FsInstance {
    x: Graph,
    y: Graph,
    x_edges: Vec<(usize, usize)>,
    config: EngineConfig,
}

impl FsInstance {
    pub fn new(x: Graph, y: Graph) -> Result<FsInstance, EngineError> {
        FsInstance::with_config(x, y, EngineConfig::default())
    }

    pub fn with_config(x: Graph, y: Graph, config: EngineConfig) -> Result<FsInstance, EngineError> {
        if x.n() != y.n() {
            return Err(EngineError::MismatchedSizes { x: x.n(), y: y.n() });
        }
        let n = x.n();
        if n == 0 || n > MAX_RANK_N {
            return Err(EngineError::UnsupportedSize(n));
        }
        let x_edges = x.edges();
        Ok(FsInstance {
            x,
            y,
            x_edges,
            config,
        })
    }

    pub fn n(&self) -> usize {
        self.x.n()
    }

    pub fn x(&self) -> &Graph {
        &self.x
    }

    pub fn y(&self) -> &Graph {
        &self.y
    }

    pub fn config(&self) -> &EngineConfig {
        &self.config
    }

    pub(crate) fn x_edges(&self) -> &[(usize, usize)] {
        &self.x_edges
    }

    fn check_bijection(&self, b: &Bijection) -> Result<(), EngineError> {
        if b.n() != self.n() {
            return Err(EngineError::BijectionSize {
                expected: self.n(),
                got: b.n(),
            });
        }
        Ok(())
    }

    fn check_filter(&self, filter: Option<&SwapFilter>) -> Result<(), EngineError> {
        if let Some(f) = filter {
            let inside = VertexSet::all_below(self.n());
            if let Some(vertex) = f.forbidden().difference(inside).min() {
                return Err(EngineError::FilterOutOfRange {
                    vertex,
                    n: self.n(),
                });
            }
        }
        Ok(())
    }

    /// Can values u and v be swapped right now? True iff (u,v) ∈ E(Y) and
    /// their current positions are adjacent in X.
    pub fn is_friendly(&self, b: &Bijection, u: usize, v: usize) -> bool {
        let n = self.n();
        u < n && v < n && u != v && self.y.has_edge(u, v) && {
            self.x.has_edge(b.preimage(u), b.preimage(v))
        }
    }

    /// All friendly swaps available from `b`, as value pairs (u,v) with
    /// u < v, listed in the fixed X-edge scan order. Each unordered pair
    /// appears once: a value pair determines its position pair uniquely.
    pub fn friendly_swaps(&self, b: &Bijection) -> Vec<(usize, usize)> {
        self.x_edges
            .iter()
            .filter_map(|&(a, c)| {
                let (u, v) = (b.image(a), b.image(c));
                self.y.has_edge(u, v).then_some((u.min(v), u.max(v)))
            })
            .collect()
    }

    /// Plays a swap sequence from `b`, insisting every step is friendly at
    /// the moment it is applied.
    pub fn apply_sequence(
        &self,
        b: &Bijection,
        s: &SwapSequence,
    ) -> Result<Bijection, EngineError> {
        self.check_bijection(b)?;
        let mut cur = b.clone();
        for (step, (u, v)) in s.iter().enumerate() {
            if !self.is_friendly(&cur, u, v) {
                return Err(EngineError::IllegalSwap { step, pair: (u, v) });
            }
            cur = cur.apply_value_swap(u, v)?;
        }
        Ok(cur)
    }

    /// Φ(σ) = (sign(σ) + |σ(A_X) ∩ A_Y|) mod 2 when both graphs carry
    /// bipartitions with first parts A_X, A_Y; `None` otherwise. A friendly
    /// swap flips the sign and moves exactly one of u, v across the A_Y
    /// boundary relative to A_X, so Φ is constant on components.
    pub fn parity_invariant(&self, b: &Bijection) -> Option<u8> {
        let (a_x, _) = self.x.bipartition()?;
        let (a_y, _) = self.y.bipartition()?;
        let crossing = a_x
            .iter()
            .filter(|&xv| xv < b.n() && a_y.contains(b.image(xv)))
            .count();
        Some(((b.sign() as usize + crossing) % 2) as u8)
    }

    /// Exact connected-component census of FS(X,Y). See [`ComponentCensus`].
    pub fn component_census(&self) -> Result<ComponentCensus, EngineError> {
        census::component_census(self)
    }

    /// Are `a` and `b` in the same component? Bidirectional BFS; an optional
    /// filter restricts traversal to swaps avoiding its forbidden vertices.
    /// Definitive `Disconnected` comes from exhausting one side's component.
    /// If the state budget runs out, an unfiltered query falls back to the
    /// census (membership only, no path) when n is under the census cap.
    pub fn same_component(
        &self,
        a: &Bijection,
        b: &Bijection,
        filter: Option<&SwapFilter>,
    ) -> Result<Connectivity, EngineError> {
        self.check_bijection(a)?;
        self.check_bijection(b)?;
        self.check_filter(filter)?;
        search::same_component(self, a, b, filter)
    }

    /// Forward search from `from` until any rank in `targets` is reached.
    /// `Disconnected` means the reachable set (under the filter) was
    /// exhausted without hitting a target.
    pub fn reach_any(
        &self,
        from: &Bijection,
        targets: &HashSet<u64>,
        filter: Option<&SwapFilter>,
    ) -> Result<Connectivity, EngineError> {
        self.check_bijection(from)?;
        self.check_filter(filter)?;
        search::reach_any(self, from, targets, filter)
    }

    /// Are Y-vertices u and v exchangeable from `b`: is (u,v)∘b in the same
    /// component as `b`? On success the sequence transforms `b` into (u,v)∘b.
    pub fn exchangeable(
        &self,
        b: &Bijection,
        u: usize,
        v: usize,
    ) -> Result<Connectivity, EngineError> {
        self.check_bijection(b)?;
        let target = b.apply_value_swap(u, v)?;
        self.same_component(b, &target, None)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;
    use crate::perm::{factorial, PermRank};

    fn complete(n: usize) -> Graph {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v));
            }
        }
        Graph::from_edges(n, &edges).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        let mut edges: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
        edges.push((0, n - 1));
        Graph::from_edges(n, &edges).unwrap()
    }

    fn star(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|i| (0, i)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    fn path(n: usize) -> Graph {
        let edges: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    fn k22() -> Graph {
        Graph::from_edges(4, &[(0, 2), (0, 3), (1, 2), (1, 3)]).unwrap()
    }

    #[test]
    fn instance_construction_validates() {
        assert_eq!(
            FsInstance::new(path(3), path(4)).unwrap_err(),
            EngineError::MismatchedSizes { x: 3, y: 4 }
        );
        assert!(FsInstance::new(path(3), cycle(3)).is_ok());
    }

    #[test]
    fn friendly_swaps_follow_both_graphs() {
        // X a path, Y complete: only X limits the swaps.
        let inst = FsInstance::new(path(3), complete(3)).unwrap();
        let id = Bijection::identity(3).unwrap();
        assert_eq!(inst.friendly_swaps(&id), vec![(0, 1), (1, 2)]);

        // X complete too: every pair swaps.
        let inst = FsInstance::new(complete(4), complete(4)).unwrap();
        let b = Bijection::from_vec(vec![2, 0, 3, 1]).unwrap();
        assert_eq!(inst.friendly_swaps(&b).len(), 6);

        // Edge-disjoint under the identity: a perfect matching against the
        // complementary 4-cycle leaves the identity isolated.
        let matching = Graph::from_edges(4, &[(0, 2), (1, 3)]).unwrap();
        let inst = FsInstance::new(matching, cycle(4)).unwrap();
        let id = Bijection::identity(4).unwrap();
        assert!(inst.friendly_swaps(&id).is_empty());
    }

    #[test]
    fn apply_sequence_validates_each_step() {
        let inst = FsInstance::new(complete(3), path(3)).unwrap();
        let id = Bijection::identity(3).unwrap();
        assert_eq!(inst.apply_sequence(&id, &SwapSequence::new()).unwrap(), id);

        // The common-neighbor exchange: w = 1 is adjacent to both 0 and 2 in
        // Y, so the sequence wu, wv, wu exchanges u = 0 and v = 2.
        let seq: SwapSequence = [(0, 1), (1, 2), (0, 1)].into_iter().collect();
        let out = inst.apply_sequence(&id, &seq).unwrap();
        assert_eq!(out, id.apply_value_swap(0, 2).unwrap());

        // A sequence followed by its reversal is a round trip.
        let back = inst.apply_sequence(&out, &seq.reversed()).unwrap();
        assert_eq!(back, id);

        // (0,2) is not a Y-edge, so it is never friendly.
        let bad: SwapSequence = [(0, 1), (0, 2)].into_iter().collect();
        assert_eq!(
            inst.apply_sequence(&id, &bad).unwrap_err(),
            EngineError::IllegalSwap {
                step: 1,
                pair: (0, 2)
            }
        );
    }

    #[test]
    fn census_frozen_examples() {
        // FS(K_{2,2}, K_{2,2}): two components of 12.
        let inst = FsInstance::new(k22(), k22()).unwrap();
        let census = inst.component_census().unwrap();
        assert_eq!(census.sizes(), vec![12, 12]);

        // FS(Star_4, C_4): the cyclic order of the leaf tokens is invariant.
        let inst = FsInstance::new(star(4), cycle(4)).unwrap();
        let census = inst.component_census().unwrap();
        assert_eq!(census.sizes(), vec![12, 12]);

        // FS(K_3, K_3): transpositions generate everything.
        let inst = FsInstance::new(complete(3), complete(3)).unwrap();
        let census = inst.component_census().unwrap();
        assert_eq!(census.sizes(), vec![6]);

        // Degenerate single-vertex instance.
        let one = Graph::edgeless(1).unwrap();
        let inst = FsInstance::new(one.clone(), one).unwrap();
        let census = inst.component_census().unwrap();
        assert_eq!(census.sizes(), vec![1]);
    }

    #[test]
    fn census_totals_are_factorials() {
        let pairs = [
            (path(4), cycle(4)),
            (star(5), cycle(5)),
            (complete(4), k22()),
        ];
        for (x, y) in pairs {
            let n = x.n();
            let inst = FsInstance::new(x, y).unwrap();
            let census = inst.component_census().unwrap();
            assert_eq!(census.total(), factorial(n));
            assert_eq!(census.num_components(), census.sizes().len());
        }
    }

    #[test]
    fn census_respects_the_cap() {
        let cfg = EngineConfig {
            census_cap: 4,
            ..EngineConfig::default()
        };
        let inst = FsInstance::with_config(star(5), cycle(5), cfg).unwrap();
        match inst.component_census().unwrap_err() {
            EngineError::CensusOverCap { n, cap, .. } => {
                assert_eq!((n, cap), (5, 4));
            }
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn neighbor_relation_is_symmetric_at_small_n() {
        let inst = FsInstance::new(path(4), cycle(4)).unwrap();
        for i in 0..24u64 {
            let b = PermRank::new(i, 4).unwrap().unrank();
            for (u, v) in inst.friendly_swaps(&b) {
                let nb = b.apply_value_swap(u, v).unwrap();
                assert!(
                    inst.friendly_swaps(&nb).contains(&(u, v)),
                    "swap ({u},{v}) not available back from {nb:?}"
                );
            }
        }
    }

    #[test]
    fn shortest_exchange_on_a_triangle() {
        // X = K_3, Y the path 0–1–2: exchanging the endpoint values 0 and 2
        // requires the three-swap pattern through the middle value.
        let inst = FsInstance::new(complete(3), path(3)).unwrap();
        let id = Bijection::identity(3).unwrap();
        match inst.exchangeable(&id, 0, 2).unwrap() {
            Connectivity::Connected(Some(seq)) => {
                let expected: SwapSequence = [(0, 1), (1, 2), (0, 1)].into_iter().collect();
                assert_eq!(seq, expected);
                let out = inst.apply_sequence(&id, &seq).unwrap();
                assert_eq!(out, id.apply_value_swap(0, 2).unwrap());
            }
            other => panic!("expected a connecting sequence, got {other:?}"),
        }
    }

    #[test]
    fn direct_swap_gives_a_one_step_sequence() {
        let inst = FsInstance::new(complete(3), complete(3)).unwrap();
        let id = Bijection::identity(3).unwrap();
        match inst.exchangeable(&id, 0, 1).unwrap() {
            Connectivity::Connected(Some(seq)) => {
                assert_eq!(seq, [(0, 1)].into_iter().collect());
            }
            other => panic!("expected one swap, got {other:?}"),
        }
    }

    #[test]
    fn exchangeable_rejects_equal_vertices() {
        let inst = FsInstance::new(complete(3), complete(3)).unwrap();
        let id = Bijection::identity(3).unwrap();
        assert_eq!(
            inst.exchangeable(&id, 1, 1).unwrap_err(),
            EngineError::Perm(PermError::DegenerateSwap(1))
        );
    }

    #[test]
    fn same_component_agrees_with_census_on_k33() {
        let k33 = Graph::from_edges(6, &[(0, 3), (0, 4), (0, 5), (1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5)])
            .unwrap();
        let inst = FsInstance::new(k33.clone(), k33).unwrap();
        let id = Bijection::identity(6).unwrap();
        // 3 and 4 sit in the same partite set of Y, so the parity invariant
        // separates id from (3,4)∘id.
        let twisted = id.apply_value_swap(3, 4).unwrap();
        let search = inst.same_component(&id, &twisted, None).unwrap();
        assert!(!search.is_connected());
        let census = inst.component_census().unwrap();
        assert!(!census.same_component(&id, &twisted));
        // A cross-part swap is a single friendly swap away.
        let crossed = id.apply_value_swap(0, 3).unwrap();
        assert!(inst.same_component(&id, &crossed, None).unwrap().is_connected());
        assert!(census.same_component(&id, &crossed));
    }

    #[test]
    fn identical_endpoints_connect_trivially() {
        let inst = FsInstance::new(path(3), path(3)).unwrap();
        let b = Bijection::from_vec(vec![2, 1, 0]).unwrap();
        match inst.same_component(&b, &b, None).unwrap() {
            Connectivity::Connected(Some(seq)) => assert!(seq.is_empty()),
            other => panic!("expected empty sequence, got {other:?}"),
        }
    }

    #[test]
    fn budget_exhaustion_falls_back_to_census() {
        let cfg = EngineConfig {
            search_budget: 2,
            ..EngineConfig::default()
        };
        let inst = FsInstance::with_config(star(4), cycle(4), cfg).unwrap();
        let id = Bijection::identity(4).unwrap();
        let far = Bijection::from_vec(vec![1, 2, 3, 0]).unwrap();
        // Membership still gets decided, but only via the census, so no
        // path comes back when the answer is positive.
        match inst.same_component(&id, &far, None).unwrap() {
            Connectivity::Connected(seq) => assert!(seq.is_none()),
            Connectivity::Disconnected => {}
        }

        // Forbidding the star center kills every swap, so the filtered
        // component is exhausted immediately: a definitive no.
        let filter = SwapFilter::forbidding([0]);
        assert_eq!(
            inst.same_component(&id, &far, Some(&filter)).unwrap(),
            Connectivity::Disconnected
        );

        // With a filter whose restricted component outgrows the budget, the
        // census is not equivalent and the budget is fatal.
        let cfg = EngineConfig {
            search_budget: 2,
            ..EngineConfig::default()
        };
        let inst = FsInstance::with_config(complete(4), complete(4), cfg).unwrap();
        let id = Bijection::identity(4).unwrap();
        let far = Bijection::from_vec(vec![1, 2, 3, 0]).unwrap();
        let err = inst
            .same_component(&id, &far, Some(&SwapFilter::forbidding([0])))
            .unwrap_err();
        assert!(matches!(err, EngineError::BudgetExhausted { .. }));
    }

    #[test]
    fn filtered_search_avoids_forbidden_vertices() {
        let inst = FsInstance::new(complete(4), complete(4)).unwrap();
        let id = Bijection::identity(4).unwrap();
        let target = id.apply_value_swap(2, 3).unwrap();
        let filter = SwapFilter::forbidding([0]);
        match inst.same_component(&id, &target, Some(&filter)).unwrap() {
            Connectivity::Connected(Some(seq)) => {
                for (u, v) in seq.iter() {
                    assert!(u != 0 && v != 0, "swap ({u},{v}) touches forbidden 0");
                }
                assert_eq!(inst.apply_sequence(&id, &seq).unwrap(), target);
            }
            other => panic!("expected filtered path, got {other:?}"),
        }
        let off_range = SwapFilter::forbidding([9]);
        assert_eq!(
            inst.same_component(&id, &target, Some(&off_range)).unwrap_err(),
            EngineError::FilterOutOfRange { vertex: 9, n: 4 }
        );
    }

    #[test]
    fn reach_any_finds_nearest_target_set_member() {
        let inst = FsInstance::new(complete(3), complete(3)).unwrap();
        let id = Bijection::identity(3).unwrap();
        let targets: std::collections::HashSet<u64> = [
            Bijection::from_vec(vec![2, 1, 0]).unwrap().rank().index(),
            Bijection::from_vec(vec![1, 0, 2]).unwrap().rank().index(),
        ]
        .into_iter()
        .collect();
        match inst.reach_any(&id, &targets, None).unwrap() {
            Connectivity::Connected(Some(seq)) => {
                let end = inst.apply_sequence(&id, &seq).unwrap();
                assert!(targets.contains(&end.rank().index()));
                assert_eq!(seq.len(), 1, "a target is one swap away");
            }
            other => panic!("expected reachable target, got {other:?}"),
        }
        // Already on a target: empty sequence.
        let own = std::collections::HashSet::from([id.rank().index()]);
        match inst.reach_any(&id, &own, None).unwrap() {
            Connectivity::Connected(Some(seq)) => assert!(seq.is_empty()),
            other => panic!("expected empty sequence, got {other:?}"),
        }
    }

    #[test]
    fn parity_invariant_is_constant_under_friendly_swaps() {
        let x = k22()
            .with_bipartition([0, 1].into_iter().collect(), [2, 3].into_iter().collect())
            .unwrap();
        let y = cycle(4)
            .with_bipartition([0, 2].into_iter().collect(), [1, 3].into_iter().collect())
            .unwrap();
        let inst = FsInstance::new(x, y).unwrap();
        for i in 0..24u64 {
            let b = PermRank::new(i, 4).unwrap().unrank();
            let phi = inst.parity_invariant(&b).unwrap();
            for (u, v) in inst.friendly_swaps(&b) {
                let nb = b.apply_value_swap(u, v).unwrap();
                assert_eq!(inst.parity_invariant(&nb).unwrap(), phi);
            }
        }
        // Without bipartitions there is no invariant to speak of.
        let bare = FsInstance::new(k22(), cycle(4)).unwrap();
        assert!(bare
            .parity_invariant(&Bijection::identity(4).unwrap())
            .is_none());
    }
}
