//! Named graph families, two parameterized lower-bound pair constructions,
//! seeded random graph samplers, and a small fixture zoo.
//!
//! The pair constructions produce (X, Y, σ) witnesses:
//!
//! * `prop_1_6_pair(n, k)` splits the vertices into k cyclically arranged
//!   groups; X joins groups at cyclic distance ≤ 1, Y joins groups at cyclic
//!   distance ≠ 1. Both graphs are connected with high minimum degree, yet
//!   FS(X,Y) is disconnected: no friendly swap can move a token out of its
//!   group's image.
//! * `thm_1_11_pair(r, δ1, δ2)` builds bipartite edge-subgraphs of K_{r,r}
//!   with δ(X) = δ1 and δ(Y) ≥ δ2 where δ1 + δ2 = ⌊3r/2⌋, such that the
//!   identity bijection is an isolated vertex of FS(X,Y): X and Y occupy
//!   complementary blocks, so no X-edge ever maps onto a Y-edge.
//!
//! Everything here is deterministic: fixed block layouts, circulant gadgets,
//! and seeded RNGs, so a given parameter set always produces the same bytes.

use std::ops::Range;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, GraphError, VertexSet, THETA_ZERO_EDGES};
use crate::perm::Bijection;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ConstructError {
    #[error("{family} needs at least {min} vertices, got {got}")]
    TooSmall {
        family: &'static str,
        min: usize,
        got: usize,
    },
    #[error("group pairs need n ≥ k ≥ 5, got n = {n}, k = {k}")]
    IllegalGroupParams { n: usize, k: usize },
    #[error(
        "block pairs need r ≥ 2, δ1 ≤ r, δ2 ≤ r, and δ1 + δ2 = ⌊3r/2⌋ = {required_sum}; \
         got r = {r}, δ1 = {d1}, δ2 = {d2}"
    )]
    IllegalBlockParams {
        r: usize,
        d1: usize,
        d2: usize,
        required_sum: usize,
    },
    #[error("no graph on {n} vertices has minimum degree {min_degree}")]
    InfeasibleDegree { n: usize, min_degree: usize },
    #[error(
        "gave up after {attempts} attempts to sample a connected graph \
         with n = {n}, δ ≥ {min_degree}"
    )]
    GenerationFailed {
        n: usize,
        min_degree: usize,
        attempts: usize,
    },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Star with center 0 and leaves 1..n.
pub fn star(n: usize) -> Result<Graph, ConstructError> {
    if n < 2 {
        return Err(ConstructError::TooSmall {
            family: "star",
            min: 2,
            got: n,
        });
    }
    let edges: Vec<_> = (1..n).map(|i| (0, i)).collect();
    Ok(Graph::from_edges(n, &edges)?)
}

/// Star plus the extra edge (1,2) between two leaves.
pub fn star_plus(n: usize) -> Result<Graph, ConstructError> {
    if n < 3 {
        return Err(ConstructError::TooSmall {
            family: "star_plus",
            min: 3,
            got: n,
        });
    }
    let mut edges: Vec<_> = (1..n).map(|i| (0, i)).collect();
    edges.push((1, 2));
    Ok(Graph::from_edges(n, &edges)?)
}

/// Cycle 0–1–⋯–(n−1)–0.
pub fn cycle(n: usize) -> Result<Graph, ConstructError> {
    if n < 3 {
        return Err(ConstructError::TooSmall {
            family: "cycle",
            min: 3,
            got: n,
        });
    }
    let mut edges: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
    edges.push((0, n - 1));
    Ok(Graph::from_edges(n, &edges)?)
}

/// Path 0–1–⋯–(n−1).
pub fn path(n: usize) -> Result<Graph, ConstructError> {
    if n < 1 {
        return Err(ConstructError::TooSmall {
            family: "path",
            min: 1,
            got: n,
        });
    }
    let edges: Vec<_> = (0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect();
    Ok(Graph::from_edges(n, &edges)?)
}

pub fn complete(n: usize) -> Result<Graph, ConstructError> {
    if n < 1 {
        return Err(ConstructError::TooSmall {
            family: "complete",
            min: 1,
            got: n,
        });
    }
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            edges.push((u, v));
        }
    }
    Ok(Graph::from_edges(n, &edges)?)
}

/// K_{a,b} with parts {0..a} and {a..a+b}; carries its bipartition.
pub fn complete_bipartite(a: usize, b: usize) -> Result<Graph, ConstructError> {
    if a < 1 || b < 1 {
        return Err(ConstructError::TooSmall {
            family: "complete_bipartite",
            min: 1,
            got: a.min(b),
        });
    }
    let mut edges = Vec::new();
    for u in 0..a {
        for v in a..a + b {
            edges.push((u, v));
        }
    }
    let g = Graph::from_edges(a + b, &edges)?;
    let left: VertexSet = (0..a).collect();
    let right: VertexSet = (a..a + b).collect();
    Ok(g.with_bipartition(left, right)?)
}

/// The seven-vertex exceptional graph: a hexagon with one antipodal pendant
/// path through vertex 6.
pub fn theta_zero() -> Graph {
    Graph::from_edges(7, &THETA_ZERO_EDGES).expect("valid constant")
}

/// Construction metadata carried next to a lower-bound pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "construction")]
pub enum PairMeta {
    #[serde(rename = "prop_1_6")]
    Prop16 {
        n: usize,
        k: usize,
        /// Base group size: n = k·t + r.
        t: usize,
        r: usize,
        delta_x: usize,
        delta_y: usize,
    },
    #[serde(rename = "thm_1_11")]
    Thm111 {
        r: usize,
        delta1: usize,
        delta2: usize,
        delta_x: usize,
        delta_y: usize,
    },
}

/// A pair (X, Y) with a witness bijection σ demonstrating a lower bound:
/// σ's component is constrained (group pairs) or σ is isolated (block pairs).
#[derive(Debug, Clone)]
pub struct LowerBoundPair {
    pub x: Graph,
    pub y: Graph,
    pub sigma: Bijection,
    pub meta: PairMeta,
}

/// Wire form of the (σ, meta) sidecar written next to pair graph files.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Sidecar {
    pub sigma: Bijection,
    pub meta: PairMeta,
}

impl LowerBoundPair {
    pub fn sidecar(&self) -> Sidecar {
        Sidecar {
            sigma: self.sigma.clone(),
            meta: self.meta,
        }
    }
}

/// Contiguous vertex ranges for k groups: the first `n mod k` groups get an
/// extra vertex.
pub(crate) fn group_ranges(n: usize, k: usize) -> Vec<Range<usize>> {
    let t = n / k;
    let r = n % k;
    let mut ranges = Vec::with_capacity(k);
    let mut next = 0;
    for i in 0..k {
        let size = if i < r { t + 1 } else { t };
        ranges.push(next..next + size);
        next += size;
    }
    debug_assert_eq!(next, n);
    ranges
}

/// Connected pair with disconnected FS graph: X joins groups at cyclic
/// distance ≤ 1, Y joins groups at cyclic distance ≠ 1, σ is the identity.
/// Degree floors δ(X) ≥ 3n/k − 4 and δ(Y) ≥ (k−2)n/k − 3 are asserted in
/// integer arithmetic.
pub fn prop_1_6_pair(n: usize, k: usize) -> Result<LowerBoundPair, ConstructError> {
    if k < 5 || n < k {
        return Err(ConstructError::IllegalGroupParams { n, k });
    }
    let ranges = group_ranges(n, k);
    let mut group_of = vec![0usize; n];
    for (g, range) in ranges.iter().enumerate() {
        for v in range.clone() {
            group_of[v] = g;
        }
    }

    let mut x = Graph::edgeless(n)?;
    let mut y = Graph::edgeless(n)?;
    for u in 0..n {
        for v in u + 1..n {
            let diff = (group_of[u] + k - group_of[v]) % k;
            let cyclic_adjacent = diff == 1 || diff == k - 1;
            if diff == 0 || cyclic_adjacent {
                x.add_edge(u, v)?;
            }
            if !cyclic_adjacent {
                y.add_edge(u, v)?;
            }
        }
    }

    let (dx, dy) = (x.min_degree(), y.min_degree());
    // Floors rearranged additively to stay in unsigned arithmetic:
    // δ(X) ≥ 3n/k − 4 and δ(Y) ≥ (k−2)n/k − 3.
    assert!(dx * k + 4 * k >= 3 * n, "δ(X) floor violated: {dx}·{k} < 3·{n} − 4·{k}");
    assert!(
        dy * k + 3 * k >= (k - 2) * n,
        "δ(Y) floor violated: {dy}·{k} < ({k}−2)·{n} − 3·{k}"
    );
    assert!(x.is_connected() && y.is_connected());

    Ok(LowerBoundPair {
        x,
        y,
        sigma: Bijection::identity(n).expect("n ≥ k ≥ 5"),
        meta: PairMeta::Prop16 {
            n,
            k,
            t: n / k,
            r: n % k,
            delta_x: dx,
            delta_y: dy,
        },
    })
}

fn complete_between(g: &mut Graph, a: Range<usize>, b: Range<usize>) -> Result<(), GraphError> {
    for u in a {
        for v in b.clone() {
            g.add_edge(u, v)?;
        }
    }
    Ok(())
}

/// Joins `from[i]` to `to[(i + j) mod |to|]` for every j in `window`.
/// Requires |from| = |to|; empty ranges and empty windows are fine.
fn circulant_between(
    g: &mut Graph,
    from: Range<usize>,
    to: Range<usize>,
    window: Range<usize>,
) -> Result<(), GraphError> {
    let size = to.len();
    debug_assert_eq!(from.len(), size);
    if window.is_empty() || size == 0 {
        return Ok(());
    }
    for (i, u) in from.enumerate() {
        for j in window.clone() {
            g.add_edge(u, to.start + (i + j) % size)?;
        }
    }
    Ok(())
}

/// Bipartite pair on 2r vertices whose FS graph has more than two components
/// because the identity is an isolated vertex. Blocks (h = ⌈r/2⌉, l = ⌊r/2⌋):
///
/// ```text
///   A = 0..h     B = h..r     C = r..r+l     D = r+l..2r
/// ```
///
/// X (parts A∪B vs C∪D): A–C and B–D complete, A–D a d-regular circulant
/// with d = δ1 − l, B–C an e-regular circulant with e = max(0, δ1 − h).
/// Y (parts A∪C vs B∪D): A–B and C–D complete, A–D and B–C the circulants
/// complementary to X's. Every block pair is used by at most one of X and Y,
/// and the two circulant windows are disjoint, so X and Y share no edge and
/// the identity admits no friendly swap at all.
pub fn thm_1_11_pair(r: usize, d1: usize, d2: usize) -> Result<LowerBoundPair, ConstructError> {
    let required_sum = 3 * r / 2;
    if r < 2 || d1 > r || d2 > r || d1 + d2 != required_sum {
        return Err(ConstructError::IllegalBlockParams {
            r,
            d1,
            d2,
            required_sum,
        });
    }
    let h = r.div_ceil(2);
    let l = r / 2;
    let (a, b, c, d_blk) = (0..h, h..r, r..r + l, r + l..2 * r);
    let d = d1 - l; // d1 ≥ l is implied by d2 ≤ r
    let e = d1.saturating_sub(h);

    let mut x = Graph::edgeless(2 * r)?;
    complete_between(&mut x, a.clone(), c.clone())?;
    complete_between(&mut x, b.clone(), d_blk.clone())?;
    circulant_between(&mut x, a.clone(), d_blk.clone(), 0..d)?;
    circulant_between(&mut x, b.clone(), c.clone(), 0..e)?;

    let mut y = Graph::edgeless(2 * r)?;
    complete_between(&mut y, a.clone(), b.clone())?;
    complete_between(&mut y, c.clone(), d_blk.clone())?;
    circulant_between(&mut y, a.clone(), d_blk.clone(), d..h)?;
    circulant_between(&mut y, b.clone(), c.clone(), e..l)?;

    let x_left: VertexSet = (0..r).collect();
    let x = x.with_bipartition(x_left, (r..2 * r).collect())?;
    let y_left: VertexSet = a.chain(c).collect();
    let y = y.with_bipartition(y_left, b.chain(d_blk).collect())?;

    let sigma = Bijection::identity(2 * r).expect("2 ≤ 2r");
    // σ isolated: no X-edge maps onto a Y-edge.
    for (u, v) in x.edges() {
        assert!(
            !y.has_edge(sigma.image(u), sigma.image(v)),
            "blocks overlap at X-edge ({u},{v})"
        );
    }
    let (dx, dy) = (x.min_degree(), y.min_degree());
    assert_eq!(dx, d1, "δ(X) must equal δ1 exactly");
    assert!(dy >= d2, "δ(Y) = {dy} below target {d2}");

    Ok(LowerBoundPair {
        x,
        y,
        sigma,
        meta: PairMeta::Thm111 {
            r,
            delta1: d1,
            delta2: d2,
            delta_x: dx,
            delta_y: dy,
        },
    })
}

/// Adds random edges at `v` (chosen among `allowed` non-neighbors) until its
/// degree reaches `target`.
fn top_up_degree<F>(
    g: &mut Graph,
    v: usize,
    target: usize,
    rng: &mut ChaCha8Rng,
    allowed: F,
) -> Result<(), ConstructError>
where
    F: Fn(usize) -> bool,
{
    while g.degree(v) < target {
        let candidates: Vec<usize> = (0..g.n())
            .filter(|&w| w != v && !g.has_edge(v, w) && allowed(w))
            .collect();
        let w = candidates[rng.gen_range(0..candidates.len())];
        g.add_edge(v, w)?;
    }
    Ok(())
}

/// Heuristic sampler (no uniformity claim): G(n,p) tuned so that degrees land
/// near `min_degree`, followed by a repair pass topping up deficient vertices,
/// then rejection until connected if requested.
pub fn random_graph_min_degree(
    n: usize,
    min_degree: usize,
    connected: bool,
    seed: u64,
) -> Result<Graph, ConstructError> {
    if n < 1 || min_degree + 1 > n {
        return Err(ConstructError::InfeasibleDegree { n, min_degree });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let p = if n < 2 {
        0.0
    } else {
        (((min_degree + 1) as f64) / ((n - 1) as f64)).min(1.0)
    };
    const ATTEMPTS: usize = 200;
    for _ in 0..ATTEMPTS {
        let mut g = Graph::edgeless(n)?;
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen_bool(p) {
                    g.add_edge(u, v)?;
                }
            }
        }
        for v in 0..n {
            top_up_degree(&mut g, v, min_degree, &mut rng, |_| true)?;
        }
        if !connected || g.is_connected() {
            return Ok(g);
        }
    }
    Err(ConstructError::GenerationFailed {
        n,
        min_degree,
        attempts: ATTEMPTS,
    })
}

/// Random edge-subgraph of K_{r,r} with parts {0..r}, {r..2r} (bipartition
/// carried) and minimum degree ≥ `min_degree`. Same sample-then-repair
/// strategy, restricted to cross-part pairs.
pub fn random_bipartite_subgraph(
    r: usize,
    min_degree: usize,
    seed: u64,
) -> Result<Graph, ConstructError> {
    if r < 1 || min_degree > r {
        return Err(ConstructError::InfeasibleDegree {
            n: 2 * r,
            min_degree,
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let p = ((min_degree as f64 + 0.5) / r as f64).min(1.0);
    let mut g = Graph::edgeless(2 * r)?;
    for u in 0..r {
        for v in r..2 * r {
            if rng.gen_bool(p) {
                g.add_edge(u, v)?;
            }
        }
    }
    for v in 0..2 * r {
        let other_part = move |w: usize| (w < r) != (v < r);
        top_up_degree(&mut g, v, min_degree, &mut rng, other_part)?;
    }
    let left: VertexSet = (0..r).collect();
    Ok(g.with_bipartition(left, (r..2 * r).collect())?)
}

/// A labeled spread of small graphs covering the classifier's cases: both
/// Wilsonian and almost-Wilsonian specimens plus the excluded ones, for every
/// n from 2 to `max_n`.
pub fn fixture_zoo(max_n: usize) -> Vec<(String, Graph)> {
    let mut zoo: Vec<(String, Graph)> = Vec::new();
    let mut push = |name: String, g: Result<Graph, ConstructError>| {
        zoo.push((name, g.expect("fixture parameters are legal")));
    };
    for n in 2..=max_n {
        push(format!("K{n}"), complete(n));
        push(format!("P{n}"), path(n));
        if n >= 3 {
            push(format!("Star{n}"), star(n));
            push(format!("C{n}"), cycle(n));
        }
        if n >= 4 {
            push(format!("+Star{n}"), star_plus(n));
            push(
                format!("K{},{}", n / 2, n.div_ceil(2)),
                complete_bipartite(n / 2, n.div_ceil(2)),
            );
            // Complete graph minus its last edge: Wilsonian but not complete.
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if (u, v) != (n - 2, n - 1) {
                        edges.push((u, v));
                    }
                }
            }
            push(format!("K{n}-e"), Graph::from_edges(n, &edges).map_err(Into::into));
            if n % 2 == 0 {
                let matching: Vec<_> = (0..n / 2).map(|i| (2 * i, 2 * i + 1)).collect();
                push(
                    format!("M{n}"),
                    Graph::from_edges(n, &matching).map_err(Into::into),
                );
            }
        }
        if n >= 5 {
            // Wheel: hub 0 joined to the cycle 1..n.
            let mut edges: Vec<_> = (1..n).map(|i| (0, i)).collect();
            edges.extend((1..n - 1).map(|i| (i, i + 1)));
            edges.push((1, n - 1));
            push(format!("W{n}"), Graph::from_edges(n, &edges).map_err(Into::into));
        }
        if n == 7 {
            push("theta0".to_string(), Ok(theta_zero()));
        }
    }
    zoo
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classify::classify;
    use crate::engine::FsInstance;

    #[test]
    fn family_shapes() {
        let s = star(4).unwrap();
        assert_eq!((0..4).map(|v| s.degree(v)).collect::<Vec<_>>(), vec![3, 1, 1, 1]);
        assert_eq!(star_plus(5).unwrap().edge_count(), 5);
        assert!(cycle(6).unwrap().is_cycle_graph());
        assert_eq!(path(5).unwrap().edge_count(), 4);
        assert_eq!(complete(5).unwrap().edge_count(), 10);

        let k33 = complete_bipartite(3, 3).unwrap();
        assert_eq!(k33.min_degree(), 3);
        assert!(k33.is_bipartite());
        let (left, right) = k33.bipartition().unwrap();
        assert_eq!(left.to_vec(), vec![0, 1, 2]);
        assert_eq!(right.to_vec(), vec![3, 4, 5]);

        let theta = theta_zero();
        assert!(theta.is_theta_zero());
        assert_eq!(theta.edge_count(), 8);
    }

    #[test]
    fn family_size_floors() {
        assert!(star(1).is_err());
        assert!(star_plus(2).is_err());
        assert!(cycle(2).is_err());
        assert!(complete(0).is_err());
        assert!(complete_bipartite(0, 3).is_err());
    }

    #[test]
    fn group_pair_at_n5_is_two_five_cycles() {
        let pair = prop_1_6_pair(5, 5).unwrap();
        assert_eq!(pair.x.edges(), vec![(0, 1), (0, 4), (1, 2), (2, 3), (3, 4)]);
        assert_eq!(pair.y.edges(), vec![(0, 2), (0, 3), (1, 3), (1, 4), (2, 4)]);
        assert!(pair.x.is_cycle_graph());
        assert!(pair.y.is_cycle_graph(), "the distance-2 circulant is again C5");
        assert_eq!(pair.sigma, Bijection::identity(5).unwrap());
        assert_eq!(
            pair.meta,
            PairMeta::Prop16 { n: 5, k: 5, t: 1, r: 0, delta_x: 2, delta_y: 2 }
        );
    }

    #[test]
    fn group_pairs_meet_their_degree_floors_across_the_sweep() {
        for k in 5..=12 {
            for n in k..=12 {
                let pair = prop_1_6_pair(n, k).unwrap();
                let (dx, dy) = (pair.x.min_degree(), pair.y.min_degree());
                assert!(dx * k + 4 * k >= 3 * n, "n={n} k={k} δX={dx}");
                assert!(dy * k + 3 * k >= (k - 2) * n, "n={n} k={k} δY={dy}");
                assert!(pair.x.is_connected() && pair.y.is_connected());
                match pair.meta {
                    PairMeta::Prop16 { t, r, .. } => assert_eq!(k * t + r, n),
                    other => panic!("wrong meta {other:?}"),
                }
            }
        }
        assert!(prop_1_6_pair(4, 5).is_err(), "n < k");
        assert!(prop_1_6_pair(7, 4).is_err(), "k < 5");
    }

    #[test]
    fn block_pair_at_r2_is_matching_versus_four_cycle() {
        let pair = thm_1_11_pair(2, 1, 2).unwrap();
        assert_eq!(pair.x.edges(), vec![(0, 2), (1, 3)]);
        assert_eq!(pair.y.edges(), vec![(0, 1), (0, 3), (1, 2), (2, 3)]);
        assert!(pair.y.is_cycle_graph(), "Y is C4");
        assert_eq!(pair.sigma, Bijection::identity(4).unwrap());
    }

    #[test]
    fn block_pair_at_r4_has_complete_complement_blocks() {
        // δ1 = ⌊r/2⌋ zeroes the A–D circulant in X, so Y gets it completely.
        let pair = thm_1_11_pair(4, 2, 4).unwrap();
        for i in 0..2 {
            for j in 6..8 {
                assert!(!pair.x.has_edge(i, j), "A–D empty in X");
                assert!(pair.y.has_edge(i, j), "A–D complete in Y");
            }
        }
        assert_eq!(pair.x.min_degree(), 2);
        assert_eq!(pair.y.min_degree(), 4);
    }

    #[test]
    fn block_pairs_satisfy_all_declared_invariants() {
        for r in 2..=6usize {
            let sum = 3 * r / 2;
            for d1 in 1..=r {
                let Some(d2) = sum.checked_sub(d1) else { continue };
                if d2 > r || d2 == 0 {
                    continue;
                }
                let pair = thm_1_11_pair(r, d1, d2).unwrap();
                assert_eq!(pair.x.min_degree(), d1, "r={r} δ1={d1}");
                assert!(pair.y.min_degree() >= d2, "r={r} δ2={d2}");
                assert!(pair.x.is_bipartite() && pair.y.is_bipartite());
                assert!(pair.x.bipartition().is_some() && pair.y.bipartition().is_some());
                match pair.meta {
                    PairMeta::Thm111 { delta_x, delta_y, .. } => {
                        assert_eq!(delta_x, d1);
                        assert_eq!(delta_y, pair.y.min_degree());
                    }
                    other => panic!("wrong meta {other:?}"),
                }
            }
        }
    }

    #[test]
    fn block_pair_sigma_is_isolated_per_the_engine() {
        for (r, d1, d2) in [(2, 1, 2), (2, 2, 1), (3, 2, 2), (3, 1, 3), (4, 3, 3)] {
            let pair = thm_1_11_pair(r, d1, d2).unwrap();
            let inst = FsInstance::new(pair.x, pair.y).unwrap();
            assert!(
                inst.friendly_swaps(&pair.sigma).is_empty(),
                "σ not isolated at (r={r}, δ1={d1}, δ2={d2})"
            );
        }
    }

    #[test]
    fn block_pair_parameter_validation() {
        let err = thm_1_11_pair(4, 2, 3).unwrap_err();
        assert_eq!(
            err,
            ConstructError::IllegalBlockParams { r: 4, d1: 2, d2: 3, required_sum: 6 }
        );
        assert!(thm_1_11_pair(1, 1, 0).is_err());
        assert!(thm_1_11_pair(4, 5, 1).is_err(), "δ1 > r");
    }

    #[test]
    fn random_graphs_hit_forced_cases_and_are_reproducible() {
        let k6 = random_graph_min_degree(6, 5, false, 42).unwrap();
        assert_eq!(k6.edge_count(), 15, "δ = n−1 forces the complete graph");

        let a = random_graph_min_degree(6, 4, true, 7).unwrap();
        let b = random_graph_min_degree(6, 4, true, 7).unwrap();
        assert_eq!(a, b, "same seed, same graph");

        for seed in 0..100 {
            let g = random_graph_min_degree(8, 4, true, seed).unwrap();
            assert!(g.min_degree() >= 4);
            assert!(g.is_connected());
        }
        assert!(random_graph_min_degree(5, 5, false, 0).is_err());
    }

    #[test]
    fn random_bipartite_subgraphs_stay_inside_their_parts() {
        let forced = random_bipartite_subgraph(3, 3, 11).unwrap();
        assert_eq!(forced.edge_count(), 9, "δ = r forces K_{{3,3}}");

        for seed in 0..50 {
            let g = random_bipartite_subgraph(4, 3, seed).unwrap();
            assert!(g.min_degree() >= 3);
            let (left, right) = g.bipartition().unwrap();
            assert_eq!(left.to_vec(), vec![0, 1, 2, 3]);
            for (u, v) in g.edges() {
                assert_ne!(left.contains(u), left.contains(v));
            }
            assert_eq!(right.len(), 4);
        }
    }

    #[test]
    fn tiny_bipartite_samples_cover_the_legal_spanning_subgraphs() {
        // Exactly 7 spanning subgraphs of K_{2,2} have δ ≥ 1: the full graph,
        // four one-edge deletions, and the two perfect matchings.
        let legal: Vec<Vec<(usize, usize)>> = vec![
            vec![(0, 2), (0, 3), (1, 2), (1, 3)],
            vec![(0, 3), (1, 2), (1, 3)],
            vec![(0, 2), (1, 2), (1, 3)],
            vec![(0, 2), (0, 3), (1, 3)],
            vec![(0, 2), (0, 3), (1, 2)],
            vec![(0, 2), (1, 3)],
            vec![(0, 3), (1, 2)],
        ];
        let mut seen = std::collections::HashSet::new();
        for seed in 0..200 {
            let g = random_bipartite_subgraph(2, 1, seed).unwrap();
            let edges = g.edges();
            assert!(legal.contains(&edges), "illegal subgraph {edges:?}");
            seen.insert(edges);
        }
        assert!(seen.len() >= 3, "sampler too concentrated: {seen:?}");
    }

    #[test]
    fn zoo_is_well_formed_and_spans_the_classes() {
        let zoo = fixture_zoo(7);
        let mut names = std::collections::HashSet::new();
        for (name, g) in &zoo {
            assert!(names.insert(name.clone()), "duplicate fixture {name}");
            assert!(g.n() >= 2 && g.n() <= 7);
        }
        assert!(zoo.iter().any(|(name, _)| name == "theta0"));
        for n in 4..=6 {
            let wilsonian = zoo
                .iter()
                .filter(|(_, g)| g.n() == n && classify(g).wilsonian)
                .count();
            assert!(wilsonian >= 2, "want multiple wilsonian fixtures at n={n}");
        }
        // Almost-but-not-Wilsonian specimens. None can exist at n = 4: the
        // only bipartite biconnected graph there is C4, which the ≥4-cycle
        // clause excludes, and the only cycle that survives it is C3.
        for n in [3, 5, 6] {
            let almost_only = zoo.iter().any(|(_, g)| {
                let r = classify(g);
                g.n() == n && r.almost_wilsonian && !r.wilsonian
            });
            assert!(almost_only, "want an almost-but-not-wilsonian fixture at n={n}");
        }
    }

    #[test]
    fn sidecar_serialization_is_tagged() {
        let pair = thm_1_11_pair(3, 2, 2).unwrap();
        let text = serde_json::to_string(&pair.sidecar()).unwrap();
        assert!(text.starts_with(r#"{"sigma":[0,1,2,3,4,5],"meta":{"construction":"thm_1_11""#));
        let back: Sidecar = serde_json::from_str(&text).unwrap();
        assert_eq!(back.meta, pair.meta);

        let group = prop_1_6_pair(7, 5).unwrap();
        let text = serde_json::to_string(&group.sidecar()).unwrap();
        assert!(text.contains(r#""construction":"prop_1_6""#));
    }
}
