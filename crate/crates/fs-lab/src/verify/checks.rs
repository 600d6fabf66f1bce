//! Per-instance hypothesis/conclusion evaluation, one function per claim
//! shape. Every function measures both predicates even when the hypothesis
//! fails, so callers can report vacuous rows and boundary evidence alike.

use std::collections::HashSet;

use crate::classify::classify;
use crate::constructions::{complete_bipartite, group_ranges, star, star_plus, PairMeta};
use crate::engine::{CensusJson, EngineConfig, FsInstance, SwapFilter};
use crate::graph::{Graph, TwoColoring, VertexSet};
use crate::perm::{factorial, next_permutation, rank_of, Bijection, PermRank};

use super::{ClaimId, InstanceCheck, VerifyError};

fn same_size(x: &Graph, y: &Graph) -> Result<usize, VerifyError> {
    if x.n() != y.n() {
        return Err(VerifyError::SizeMismatch {
            left: x.n(),
            right: y.n(),
        });
    }
    Ok(x.n())
}

fn census_of(x: &Graph, y: &Graph, config: &EngineConfig) -> Result<CensusJson, VerifyError> {
    let inst = FsInstance::with_config(x.clone(), y.clone(), config.clone())?;
    Ok(CensusJson::from(&inst.component_census()?))
}

/// Return `g` with a declared bipartition, computing a 2-coloring when none
/// is attached. Odd cycles are a hard error for the bipartite claims.
fn with_declared_bipartition(g: &Graph, claim: ClaimId) -> Result<Graph, VerifyError> {
    if g.bipartition().is_some() {
        return Ok(g.clone());
    }
    match g.two_coloring() {
        TwoColoring::Bipartite(a, b) => Ok(g.clone().with_bipartition(a, b)?),
        TwoColoring::OddCycle(cycle) => Err(VerifyError::BadBipartiteInput {
            claim,
            detail: format!("input has an odd cycle through vertices {cycle:?}"),
        }),
    }
}

/// Both graphs must carry bipartitions whose four parts all have size r.
fn balanced_parts(
    x: &Graph,
    y: &Graph,
    claim: ClaimId,
) -> Result<(usize, VertexSet, VertexSet, VertexSet, VertexSet), VerifyError> {
    let missing = |side: &str| VerifyError::BadBipartiteInput {
        claim,
        detail: format!("{side} carries no declared bipartition"),
    };
    let (ax, bx) = x.bipartition().ok_or_else(|| missing("X"))?;
    let (ay, by) = y.bipartition().ok_or_else(|| missing("Y"))?;
    let r = ax.len();
    if bx.len() != r || ay.len() != r || by.len() != r {
        return Err(VerifyError::BadBipartiteInput {
            claim,
            detail: format!(
                "all four parts must have equal size; got {}/{} and {}/{}",
                ax.len(),
                bx.len(),
                ay.len(),
                by.len()
            ),
        });
    }
    Ok((r, ax, bx, ay, by))
}

/// THM_1_4: n ≥ 6, δ(X) > n/2, δ(Y) > n/2, and 2·min(δ) + 3·max(δ) ≥ 3n
/// force FS(X,Y) to be connected.
pub fn check_thm_1_4(
    x: &Graph,
    y: &Graph,
    config: &EngineConfig,
) -> Result<InstanceCheck, VerifyError> {
    let n = same_size(x, y)?;
    let (dx, dy) = (x.min_degree(), y.min_degree());
    let (lo, hi) = (dx.min(dy), dx.max(dy));
    let hypothesis = n >= 6 && 2 * dx > n && 2 * dy > n && 2 * lo + 3 * hi >= 3 * n;
    let census = census_of(x, y, config)?;
    let conclusion = census.num_components == 1;
    Ok(InstanceCheck {
        hypothesis,
        conclusion,
        census: Some(census),
        note: None,
    })
}

/// THM_1_5: X and Y connected with min(δ) + 2·max(δ) ≥ 2n force FS(X,Y)
/// to be connected.
pub fn check_thm_1_5(
    x: &Graph,
    y: &Graph,
    config: &EngineConfig,
) -> Result<InstanceCheck, VerifyError> {
    let n = same_size(x, y)?;
    let (dx, dy) = (x.min_degree(), y.min_degree());
    let (lo, hi) = (dx.min(dy), dx.max(dy));
    let hypothesis = x.is_connected() && y.is_connected() && lo + 2 * hi >= 2 * n;
    let census = census_of(x, y, config)?;
    let conclusion = census.num_components == 1;
    Ok(InstanceCheck {
        hypothesis,
        conclusion,
        census: Some(census),
        note: None,
    })
}

/// THM_1_10: edge-subgraphs of K_{r,r} with δ(X) + δ(Y) ≥ 3r/2 + 1 give an
/// FS graph with exactly two components.
pub fn check_thm_1_10(
    x: &Graph,
    y: &Graph,
    config: &EngineConfig,
) -> Result<InstanceCheck, VerifyError> {
    same_size(x, y)?;
    let (r, ..) = balanced_parts(x, y, ClaimId::Thm1_10)?;
    // integer form of δ(X) + δ(Y) ≥ 3r/2 + 1
    let hypothesis = 2 * (x.min_degree() + y.min_degree()) >= 3 * r + 2;
    let census = census_of(x, y, config)?;
    let conclusion = census.num_components == 2;
    Ok(InstanceCheck {
        hypothesis,
        conclusion,
        census: Some(census),
        note: None,
    })
}

/// PROP_2_2: bipartite X and Y on n ≥ 3 vertices give a disconnected FS
/// graph, with the parity invariant Φ constant across every FS edge.
pub fn check_prop_2_2(
    x: &Graph,
    y: &Graph,
    config: &EngineConfig,
) -> Result<InstanceCheck, VerifyError> {
    let n = same_size(x, y)?;
    let xb = with_declared_bipartition(x, ClaimId::Prop2_2)?;
    let yb = with_declared_bipartition(y, ClaimId::Prop2_2)?;
    let hypothesis = n >= 3;
    let inst = FsInstance::with_config(xb, yb, config.clone())?;
    let census = CensusJson::from(&inst.component_census()?);
    let phi_ok = phi_preserved_on_all_fs_edges(&inst)?;
    let conclusion = census.num_components >= 2 && phi_ok;
    Ok(InstanceCheck {
        hypothesis,
        conclusion,
        census: Some(census),
        note: (!phi_ok).then(|| "parity invariant broken across an FS edge".to_string()),
    })
}

/// Walk every bijection and every friendly swap out of it, confirming that
/// Φ agrees across each FS edge (each edge is seen from both endpoints).
fn phi_preserved_on_all_fs_edges(inst: &FsInstance) -> Result<bool, VerifyError> {
    let n = inst.n();
    for index in 0..factorial(n) {
        let b = PermRank::new(index, n)?.unrank();
        let phi = inst
            .parity_invariant(&b)
            .expect("both graphs carry bipartitions");
        for (u, v) in inst.friendly_swaps(&b) {
            let t = b.apply_value_swap(u, v)?;
            if inst.parity_invariant(&t) != Some(phi) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// PROP_2_3: FS(K_{r,r}, K_{r,r}) has exactly two components.
pub fn check_prop_2_3(r: usize, config: &EngineConfig) -> Result<InstanceCheck, VerifyError> {
    if r < 2 {
        return Err(VerifyError::BadParam {
            claim: ClaimId::Prop2_3,
            detail: format!("r must be at least 2; got {r}"),
        });
    }
    let k = complete_bipartite(r, r)?;
    let census = census_of(&k, &k, config)?;
    let conclusion = census.num_components == 2;
    Ok(InstanceCheck {
        hypothesis: true,
        conclusion,
        census: Some(census),
        note: None,
    })
}

/// THM_2_6 (Wilson): a biconnected, non-bipartite W that is neither a cycle
/// nor θ0 gives a connected FS(Star_n, W).
pub fn check_thm_2_6(w: &Graph, config: &EngineConfig) -> Result<InstanceCheck, VerifyError> {
    let hub = star(w.n())?;
    let hypothesis = classify(w).wilsonian;
    let census = census_of(&hub, w, config)?;
    let conclusion = census.num_components == 1;
    Ok(InstanceCheck {
        hypothesis,
        conclusion,
        census: Some(census),
        note: None,
    })
}

/// THM_2_8: a biconnected W (n ≥ 3) that is neither a long cycle nor θ0
/// gives a connected FS(+Star_n, W).
pub fn check_thm_2_8(w: &Graph, config: &EngineConfig) -> Result<InstanceCheck, VerifyError> {
    let hub = star_plus(w.n())?;
    let hypothesis = classify(w).almost_wilsonian;
    let census = census_of(&hub, w, config)?;
    let conclusion = census.num_components == 1;
    Ok(InstanceCheck {
        hypothesis,
        conclusion,
        census: Some(census),
        note: None,
    })
}

/// PROP_1_6 witness: the group-structured pair must be connected, meet its
/// degree floors, and have a disconnected FS graph in which every bijection
/// in σ's component maps each group A_i onto B_i.
pub fn check_prop_1_6_instance(
    x: &Graph,
    y: &Graph,
    sigma: &Bijection,
    meta: &PairMeta,
    config: &EngineConfig,
) -> Result<InstanceCheck, VerifyError> {
    let PairMeta::Prop16 { n, k, .. } = *meta else {
        return Err(VerifyError::BadParam {
            claim: ClaimId::Prop1_6,
            detail: "meta must be a prop_1_6 record".to_string(),
        });
    };
    if x.n() != n || y.n() != n || sigma.n() != n {
        return Err(VerifyError::BadParam {
            claim: ClaimId::Prop1_6,
            detail: format!("meta says n = {n} but graphs disagree"),
        });
    }
    let hypothesis = n >= k && k >= 5;
    let (dx, dy) = (x.min_degree(), y.min_degree());
    // additive forms of δ(X) ≥ 3n/k − 4 and δ(Y) ≥ (k−2)n/k − 3
    let floors_ok = dx * k + 4 * k >= 3 * n && dy * k + 3 * k >= k.saturating_sub(2) * n;
    let inst = FsInstance::with_config(x.clone(), y.clone(), config.clone())?;
    let census = inst.component_census()?;
    let idx = census.component_index_of(sigma.rank());
    let members = census.members_of(idx);
    let ranges = group_ranges(n, k);
    let groups_preserved = members.iter().all(|rank| {
        let b = rank.unrank();
        ranges.iter().all(|range| {
            let want = ((1u64 << range.end) - 1) ^ ((1u64 << range.start) - 1);
            let got = range.clone().fold(0u64, |m, i| m | 1 << b.image(i));
            got == want
        })
    });
    let conclusion = x.is_connected()
        && y.is_connected()
        && floors_ok
        && census.num_components() >= 2
        && groups_preserved;
    Ok(InstanceCheck {
        hypothesis,
        conclusion,
        census: Some(CensusJson::from(&census)),
        note: Some(format!(
            "{} components; sigma's component has {} bijections, all group-preserving: {}",
            census.num_components(),
            members.len(),
            groups_preserved
        )),
    })
}

/// THM_1_11 witness: for a legal (r, δ1, δ2) the block pair must be a
/// K_{r,r} edge-subgraph pair with δ(X) = δ1 and δ(Y) ≥ δ2 whose FS graph
/// has at least three components, with σ isolated.
pub fn check_thm_1_11_instance(
    x: &Graph,
    y: &Graph,
    sigma: &Bijection,
    meta: &PairMeta,
    config: &EngineConfig,
) -> Result<InstanceCheck, VerifyError> {
    let PairMeta::Thm111 {
        r, delta1, delta2, ..
    } = *meta
    else {
        return Err(VerifyError::BadParam {
            claim: ClaimId::Thm1_11,
            detail: "meta must be a thm_1_11 record".to_string(),
        });
    };
    if x.n() != 2 * r || y.n() != 2 * r || sigma.n() != 2 * r {
        return Err(VerifyError::BadParam {
            claim: ClaimId::Thm1_11,
            detail: format!("meta says r = {r} but graphs are not on 2r vertices"),
        });
    }
    let hypothesis = r >= 2 && delta1 <= r && delta2 <= r && delta1 + delta2 == (3 * r) / 2;
    let shape_ok = balanced_parts(x, y, ClaimId::Thm1_11).is_ok();
    let degrees_ok = x.min_degree() == delta1 && y.min_degree() >= delta2;
    let inst = FsInstance::with_config(x.clone(), y.clone(), config.clone())?;
    let census = inst.component_census()?;
    let idx = census.component_index_of(sigma.rank());
    let sigma_isolated = census.components()[idx].size == 1;
    let conclusion =
        shape_ok && degrees_ok && census.num_components() >= 3 && sigma_isolated;
    Ok(InstanceCheck {
        hypothesis,
        conclusion,
        census: Some(CensusJson::from(&census)),
        note: Some(format!(
            "{} components; sigma isolated: {sigma_isolated}",
            census.num_components()
        )),
    })
}

/// LEM_4_1: with |Q| ≥ 5 and 2|Q| + 3δ(G) ≥ 3m + 2, the induced graph G|_Q
/// has at most two components, and the component structure obeys the
/// Wilsonian windows spelled out in the lemma.
pub fn check_lemma_4_1(g: &Graph, q: VertexSet) -> Result<InstanceCheck, VerifyError> {
    let m = g.n() as i64;
    let dg = g.min_degree() as i64;
    let qs = q.len() as i64;
    let hypothesis = qs >= 5 && 2 * qs + 3 * dg >= 3 * m + 2;

    let (h, _) = g.induced_subgraph(q);
    let comps = h.connected_components();
    let hi = m - dg - 1;

    let conclusion;
    let note;
    match comps.len() {
        0 => {
            conclusion = true;
            note = Some("empty Q".to_string());
        }
        1 => {
            if classify(&h).almost_wilsonian {
                conclusion = true;
                note = Some("single almost-Wilsonian component".to_string());
            } else {
                // a cut vertex must split the component into two Wilsonian
                // pieces inside the size and degree windows
                let lo = dg + qs - m;
                let split = h
                    .cut_vertices()
                    .iter()
                    .any(|v| cut_vertex_splits_well(&h, v, lo, hi, lo - 1));
                conclusion = split;
                note = Some(format!(
                    "single component, valid cut-vertex split: {split}"
                ));
            }
        }
        2 => {
            let lo = dg + 1 + qs - m;
            let dmin = dg + qs - m;
            conclusion = comps.iter().all(|&c| {
                let (f, _) = h.induced_subgraph(c);
                classify(&f).wilsonian
                    && (lo..=hi).contains(&(f.n() as i64))
                    && f.min_degree() as i64 >= dmin
            });
            note = Some("two components".to_string());
        }
        more => {
            conclusion = false;
            note = Some(format!("{more} components in G|_Q"));
        }
    }
    Ok(InstanceCheck {
        hypothesis,
        conclusion,
        census: None,
        note,
    })
}

/// Does removing `v` from `f` leave exactly two Wilsonian components, each
/// within the size window [lo, hi] and of minimum degree ≥ dmin? Components
/// attached to `v` by at least two edges must stay Wilsonian with `v` added
/// back.
fn cut_vertex_splits_well(f: &Graph, v: usize, lo: i64, hi: i64, dmin: i64) -> bool {
    let mut keep = VertexSet::all_below(f.n());
    keep.remove(v);
    let (fv, fv_to_f) = f.induced_subgraph(keep);
    let parts = fv.connected_components();
    if parts.len() != 2 {
        return false;
    }
    parts.iter().all(|&part| {
        let (piece, _) = fv.induced_subgraph(part);
        if !(classify(&piece).wilsonian
            && (lo..=hi).contains(&(piece.n() as i64))
            && piece.min_degree() as i64 >= dmin)
        {
            return false;
        }
        let part_in_f: VertexSet = part.iter().map(|w| fv_to_f[w]).collect();
        if f.neighbors(v).intersection(part_in_f).len() >= 2 {
            let mut with_v = part_in_f;
            with_v.insert(v);
            let (plus, _) = f.induced_subgraph(with_v);
            if !classify(&plus).wilsonian {
                return false;
            }
        }
        true
    })
}

/// LEM_6_2: from a proposition-6.1 instance (balanced bipartite pair with
/// δ(X) + δ(Y) ≥ 3r/2 + 1, u and v in different parts of Y, preimages
/// adjacent in X), some block-aligned bijection μ with μ(A_X) = A_Y is
/// reachable without ever swapping u or v. The search starts from whichever
/// of σ, (u,v)∘σ puts at least (r−1)/2 of the A_Y-preimages on the side of
/// σ⁻¹(u).
pub fn check_lemma_6_2_instance(
    x: &Graph,
    y: &Graph,
    sigma: &Bijection,
    u: usize,
    v: usize,
    config: &EngineConfig,
) -> Result<InstanceCheck, VerifyError> {
    let claim = ClaimId::Lem6_2;
    let n = same_size(x, y)?;
    let (r, ax, bx, ay, by) = balanced_parts(x, y, claim)?;
    if u >= n || v >= n || u == v {
        return Err(VerifyError::BadParam {
            claim,
            detail: format!("u and v must be distinct Y-vertices below {n}; got {u}, {v}"),
        });
    }

    let deg_ok = 2 * (x.min_degree() + y.min_degree()) >= 3 * r + 2;
    let cross = ay.contains(u) != ay.contains(v);
    let pre_adjacent = x.has_edge(sigma.preimage(u), sigma.preimage(v));
    let hypothesis = deg_ok && cross && pre_adjacent;

    let a_y = if ay.contains(u) { ay } else { by };
    let side_of = |xv: usize| if ax.contains(xv) { ax } else { bx };
    let aligned = |b: &Bijection, part: VertexSet| {
        part.iter()
            .filter(|&xv| {
                let img = b.image(xv);
                img != u && a_y.contains(img)
            })
            .count()
    };
    let mut start = sigma.clone();
    let mut flipped = false;
    if 2 * aligned(&start, side_of(start.preimage(u))) + 1 < r {
        start = start.apply_value_swap(u, v)?;
        flipped = true;
    }
    let a_x = side_of(start.preimage(u));
    let b_x = VertexSet::all_below(n).difference(a_x);
    let b_y = VertexSet::all_below(n).difference(a_y);

    let targets = aligned_ranks(a_x, b_x, a_y, b_y, n);
    let inst = FsInstance::with_config(x.clone(), y.clone(), config.clone())?;
    let filter = SwapFilter::forbidding([u, v]);
    let reached = inst.reach_any(&start, &targets, Some(&filter))?;
    Ok(InstanceCheck {
        hypothesis,
        conclusion: reached.is_connected(),
        census: None,
        note: flipped.then(|| "searched from (u,v)∘σ per the orientation rule".to_string()),
    })
}

/// Ranks of every bijection mapping part `ax` onto `ay` and `bx` onto `by`.
fn aligned_ranks(ax: VertexSet, bx: VertexSet, ay: VertexSet, by: VertexSet, n: usize) -> HashSet<u64> {
    let axv = ax.to_vec();
    let bxv = bx.to_vec();
    let mut out = HashSet::new();
    let mut map = vec![0usize; n];
    let mut ayv = ay.to_vec();
    loop {
        let mut byv = by.to_vec();
        loop {
            for (i, &src) in axv.iter().enumerate() {
                map[src] = ayv[i];
            }
            for (i, &src) in bxv.iter().enumerate() {
                map[src] = byv[i];
            }
            out.insert(rank_of(&map));
            if !next_permutation(&mut byv) {
                break;
            }
        }
        if !next_permutation(&mut ayv) {
            break;
        }
    }
    out
}

/// PROP_2_1 consequence: the component size multisets of FS(X,Y) and
/// FS(Y,X) coincide. Capped at n ≤ 6 to keep the double census cheap.
pub fn check_census_symmetry(
    x: &Graph,
    y: &Graph,
    config: &EngineConfig,
) -> Result<InstanceCheck, VerifyError> {
    let n = same_size(x, y)?;
    if n > 6 {
        return Err(VerifyError::ScaleLimit {
            claim: ClaimId::Prop2_1,
            max: 6,
            got: n,
        });
    }
    let xy = census_of(x, y, config)?;
    let yx = census_of(y, x, config)?;
    // census sizes come out sorted, so vector equality is multiset equality
    let conclusion = xy.sizes == yx.sizes;
    Ok(InstanceCheck {
        hypothesis: true,
        conclusion,
        note: (!conclusion).then(|| format!("FS(Y,X) sizes {:?}", yx.sizes)),
        census: Some(xy),
    })
}

/// COR_1_12 upper half: an edge-subgraph X of K_{r,r} with
/// δ(X) ≥ r/2 + 1 gives FS(X, K_{r,r}) exactly two components.
pub(crate) fn check_cor_1_12_upper(
    x: &Graph,
    k: &Graph,
    config: &EngineConfig,
) -> Result<InstanceCheck, VerifyError> {
    same_size(x, k)?;
    let (r, ..) = balanced_parts(x, k, ClaimId::Cor1_12)?;
    let complete_side = k.edge_count() == r * r;
    let hypothesis = complete_side && 2 * x.min_degree() >= r + 2;
    let census = census_of(x, k, config)?;
    let conclusion = census.num_components == 2;
    Ok(InstanceCheck {
        hypothesis,
        conclusion,
        census: Some(census),
        note: None,
    })
}

/// CONJ_8_1 instance: connected pair on the 2·min + 3·max ≥ 3n side of the
/// boundary; the conjectured conclusion is a connected FS graph.
pub fn check_conjecture_8_1(
    x: &Graph,
    y: &Graph,
    config: &EngineConfig,
) -> Result<InstanceCheck, VerifyError> {
    let n = same_size(x, y)?;
    let (dx, dy) = (x.min_degree(), y.min_degree());
    let (lo, hi) = (dx.min(dy), dx.max(dy));
    let hypothesis = x.is_connected() && y.is_connected() && 2 * lo + 3 * hi >= 3 * n;
    let census = census_of(x, y, config)?;
    let conclusion = census.num_components == 1;
    Ok(InstanceCheck {
        hypothesis,
        conclusion,
        census: Some(census),
        note: None,
    })
}
