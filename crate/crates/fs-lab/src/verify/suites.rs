//! Suite runners: fixture instances plus seeded random ones, evaluated in
//! parallel and merged back in instance order. Every randomized suite
//! derives all of its randomness from the one seed recorded in the report.

use std::time::Instant;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::constructions::{
    complete, complete_bipartite, cycle, fixture_zoo, path, prop_1_6_pair,
    random_bipartite_subgraph, random_graph_min_degree, star, star_plus, thm_1_11_pair,
    ConstructError, LowerBoundPair,
};
use crate::engine::EngineConfig;
use crate::graph::{Graph, VertexSet};
use crate::perm::{factorial, Bijection, PermRank};

use super::checks::{
    check_census_symmetry, check_conjecture_8_1, check_cor_1_12_upper, check_lemma_4_1,
    check_lemma_6_2_instance, check_prop_1_6_instance, check_prop_2_2, check_prop_2_3,
    check_thm_1_10, check_thm_1_11_instance, check_thm_1_4, check_thm_1_5, check_thm_2_6,
    check_thm_2_8,
};
use super::{ClaimId, Counterexample, InstanceCheck, VerificationReport, VerifyError};

/// Knobs shared by all suites. `trials` is the sample count per parameter
/// point; exhaustive suites ignore it.
#[derive(Debug, Clone)]
pub struct SuiteOptions {
    pub trials: usize,
    pub seed: u64,
    pub engine: EngineConfig,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions {
            trials: 100,
            seed: 0,
            engine: EngineConfig::default(),
        }
    }
}

/// Claim-specific parameters, all optional; [`run_claim`] decides which are
/// required for which claim.
#[derive(Debug, Clone, Copy, Default)]
pub struct ClaimParams {
    pub r: Option<usize>,
    pub n: Option<usize>,
    pub k: Option<usize>,
    pub d1: Option<usize>,
    pub d2: Option<usize>,
}

/// Dispatch a claim to its suite.
pub fn run_claim(
    claim: ClaimId,
    params: &ClaimParams,
    opts: &SuiteOptions,
) -> Result<VerificationReport, VerifyError> {
    let need = |flag: &'static str, value: Option<usize>| {
        value.ok_or(VerifyError::MissingParam { claim, flag })
    };
    match claim {
        ClaimId::Thm1_4 => run_thm_1_4(opts),
        ClaimId::Thm1_5 => run_thm_1_5(opts),
        ClaimId::Thm1_10 => run_thm_1_10(need("--r", params.r)?, opts),
        ClaimId::Prop2_2 => run_prop_2_2(opts),
        ClaimId::Prop2_3 => run_prop_2_3(need("--r", params.r)?, &opts.engine),
        ClaimId::Thm2_6 => run_thm_2_6(params.n.unwrap_or(7), &opts.engine),
        ClaimId::Thm2_8 => run_thm_2_8(params.n.unwrap_or(7), &opts.engine),
        ClaimId::Prop1_6 => match (params.n, params.k) {
            (None, None) => run_prop_1_6(None, &opts.engine),
            (n, k) => run_prop_1_6(
                Some((need("--n", n)?, need("--k", k)?)),
                &opts.engine,
            ),
        },
        ClaimId::Thm1_11 => match (params.r, params.d1, params.d2) {
            (None, None, None) => run_thm_1_11(None, &opts.engine),
            (r, d1, d2) => run_thm_1_11(
                Some((need("--r", r)?, need("--d1", d1)?, need("--d2", d2)?)),
                &opts.engine,
            ),
        },
        ClaimId::Lem4_1 => run_lem_4_1(opts),
        ClaimId::Lem6_2 => run_lem_6_2(need("--r", params.r)?, opts),
        ClaimId::Prop2_1 => run_prop_2_1(opts),
        ClaimId::Cor1_12 => run_cor_1_12(need("--r", params.r)?, opts),
        ClaimId::Conj8_1 => search_conjecture_8_1(
            need("--n", params.n)?,
            need("--d1", params.d1)?,
            need("--d2", params.d2)?,
            opts,
        ),
    }
}

/// Evaluate instances in parallel, then record them in instance order so the
/// report is identical for any thread count.
fn run_all<I: Sync>(
    report: &mut VerificationReport,
    instances: &[I],
    check: impl Fn(&I) -> Result<InstanceCheck, VerifyError> + Sync,
    counterexample: impl Fn(&I, &InstanceCheck) -> Counterexample,
) -> Result<(), VerifyError> {
    let checks: Vec<InstanceCheck> = instances
        .par_iter()
        .map(&check)
        .collect::<Result<_, _>>()?;
    for (inst, chk) in instances.iter().zip(checks) {
        let cx = (chk.hypothesis && !chk.conclusion).then(|| counterexample(inst, &chk));
        report.record(&chk, cx);
    }
    Ok(())
}

fn pair_counterexample(
    claim: ClaimId,
    x: &Graph,
    y: &Graph,
    chk: &InstanceCheck,
) -> Counterexample {
    Counterexample {
        claim,
        x: x.clone(),
        y: Some(y.clone()),
        sigma: None,
        q: None,
        swap: None,
        meta: None,
        census: chk.census.clone(),
        note: chk.note.clone().unwrap_or_default(),
    }
}

fn witness_counterexample(
    claim: ClaimId,
    pair: &LowerBoundPair,
    chk: &InstanceCheck,
) -> Counterexample {
    Counterexample {
        claim,
        x: pair.x.clone(),
        y: Some(pair.y.clone()),
        sigma: Some(pair.sigma.clone()),
        q: None,
        swap: None,
        meta: Some(pair.meta),
        census: chk.census.clone(),
        note: chk.note.clone().unwrap_or_default(),
    }
}

/// THM_1_4 suite: the acceptance grid (n = 6 with δ ≥ 4; n = 7 with floors
/// (4,5) and (5,5)) plus a complete-graph row and a vacuous cycle row.
pub fn run_thm_1_4(opts: &SuiteOptions) -> Result<VerificationReport, VerifyError> {
    let started = Instant::now();
    let claim = ClaimId::Thm1_4;
    let mut report = VerificationReport::new(claim, Some(opts.seed));
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);

    let k6 = complete(6)?;
    let c6 = cycle(6)?;
    let mut instances = vec![(k6.clone(), k6), (c6.clone(), c6)];
    let grid = [(6usize, 4usize, 4usize), (7, 4, 5), (7, 5, 5)];
    for &(n, d1, d2) in &grid {
        for _ in 0..opts.trials {
            // δ > n/2 already forces connectivity, no rejection needed
            let x = random_graph_min_degree(n, d1, false, rng.gen())?;
            let y = random_graph_min_degree(n, d2, false, rng.gen())?;
            instances.push((x, y));
        }
    }
    run_all(
        &mut report,
        &instances,
        |(x, y)| check_thm_1_4(x, y, &opts.engine),
        |(x, y), chk| pair_counterexample(claim, x, y, chk),
    )?;
    report.note(format!(
        "{} random pairs per grid point {:?}",
        opts.trials, grid
    ));
    report.set_elapsed(started.elapsed());
    Ok(report)
}

/// THM_1_5 suite: connected pairs at n = 7 with min + 2·max ≥ 14, plus a
/// complete-graph row and a vacuous star row.
pub fn run_thm_1_5(opts: &SuiteOptions) -> Result<VerificationReport, VerifyError> {
    let started = Instant::now();
    let claim = ClaimId::Thm1_5;
    let mut report = VerificationReport::new(claim, Some(opts.seed));
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);

    let k4 = complete(4)?;
    let s5 = star(5)?;
    let mut instances = vec![(k4.clone(), k4), (s5.clone(), s5)];
    let n = 7;
    let floors = [(2usize, 6usize), (3, 6), (4, 5), (4, 6), (5, 5), (5, 6), (6, 6)];
    for _ in 0..opts.trials {
        let &(lo, hi) = floors.choose(&mut rng).expect("non-empty floor list");
        let (d1, d2) = if rng.gen() { (lo, hi) } else { (hi, lo) };
        let x = random_graph_min_degree(n, d1, true, rng.gen())?;
        let y = random_graph_min_degree(n, d2, true, rng.gen())?;
        instances.push((x, y));
    }
    run_all(
        &mut report,
        &instances,
        |(x, y)| check_thm_1_5(x, y, &opts.engine),
        |(x, y), chk| pair_counterexample(claim, x, y, chk),
    )?;
    report.note(format!(
        "{} random connected pairs at n = {n}, floors drawn from {floors:?}",
        opts.trials
    ));
    report.set_elapsed(started.elapsed());
    Ok(report)
}

/// All 16 edge-subgraphs of K_{2,2}, bipartition attached.
fn all_k22_subgraphs() -> Result<Vec<Graph>, VerifyError> {
    let cross = [(0usize, 2usize), (0, 3), (1, 2), (1, 3)];
    let a: VertexSet = [0, 1].into_iter().collect();
    let b: VertexSet = [2, 3].into_iter().collect();
    (0u32..16)
        .map(|bits| {
            let edges: Vec<(usize, usize)> = cross
                .iter()
                .enumerate()
                .filter(|&(i, _)| bits >> i & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            Ok(Graph::from_edges(4, &edges)?.with_bipartition(a, b)?)
        })
        .collect()
}

/// Degree floor pairs (a, b) with a, b ≤ r and a + b ≥ 3r/2 + 1.
fn feasible_floor_pairs(r: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for a in 0..=r {
        for b in 0..=r {
            if 2 * (a + b) >= 3 * r + 2 {
                out.push((a, b));
            }
        }
    }
    out
}

/// THM_1_10 suite. Exhaustive over all 256 ordered subgraph pairs at r = 2;
/// seeded samples at higher r, plus the matching block-construction row as
/// boundary evidence (hypothesis and conclusion both fail there).
pub fn run_thm_1_10(r: usize, opts: &SuiteOptions) -> Result<VerificationReport, VerifyError> {
    let started = Instant::now();
    let claim = ClaimId::Thm1_10;
    if r < 2 {
        return Err(VerifyError::BadParam {
            claim,
            detail: format!("r must be at least 2; got {r}"),
        });
    }
    let mut report = VerificationReport::new(claim, Some(opts.seed));
    let mut instances: Vec<(Graph, Graph)> = Vec::new();
    if r == 2 {
        let subs = all_k22_subgraphs()?;
        for x in &subs {
            for y in &subs {
                instances.push((x.clone(), y.clone()));
            }
        }
        report.note("exhaustive: all 256 ordered pairs of K_{2,2} edge-subgraphs");
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
        let floors = feasible_floor_pairs(r);
        for _ in 0..opts.trials {
            let &(a, b) = floors.choose(&mut rng).expect("feasible floors exist for r >= 2");
            instances.push((
                random_bipartite_subgraph(r, a, rng.gen())?,
                random_bipartite_subgraph(r, b, rng.gen())?,
            ));
        }
        let d1 = (3 * r) / 2 - r;
        let pair = thm_1_11_pair(r, d1, r)?;
        instances.push((pair.x, pair.y));
        report.note(format!(
            "boundary row: block pair at (r, δ1, δ2) = ({r}, {d1}, {r}) fails hypothesis and conclusion"
        ));
    }
    run_all(
        &mut report,
        &instances,
        |(x, y)| check_thm_1_10(x, y, &opts.engine),
        |(x, y), chk| pair_counterexample(claim, x, y, chk),
    )?;
    report.set_elapsed(started.elapsed());
    Ok(report)
}

/// Bipartite graph on n vertices with shuffled part labels and a random
/// cross-edge density. Carries its bipartition.
fn random_bipartite_graph(n: usize, rng: &mut ChaCha8Rng) -> Result<Graph, VerifyError> {
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let split = rng.gen_range(1..n);
    let a: VertexSet = order[..split].iter().copied().collect();
    let b: VertexSet = order[split..].iter().copied().collect();
    let p = rng.gen_range(0.3..0.85);
    let mut g = Graph::edgeless(n)?;
    for u in a.iter() {
        for v in b.iter() {
            if rng.gen_bool(p) {
                g.add_edge(u.min(v), u.max(v))?;
            }
        }
    }
    Ok(g.with_bipartition(a, b)?)
}

/// PROP_2_2 suite: fixture rows (paths, K_{3,3}, a perfect matching against
/// C_4) plus random bipartite pairs at 3 ≤ n ≤ 7.
pub fn run_prop_2_2(opts: &SuiteOptions) -> Result<VerificationReport, VerifyError> {
    let started = Instant::now();
    let claim = ClaimId::Prop2_2;
    let mut report = VerificationReport::new(claim, Some(opts.seed));
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);

    let p4 = path(4)?;
    let k33 = complete_bipartite(3, 3)?;
    let matching = Graph::from_edges(4, &[(0, 2), (1, 3)])?;
    let mut instances = vec![
        (p4.clone(), p4),
        (k33.clone(), k33),
        (matching, cycle(4)?),
    ];
    for _ in 0..opts.trials {
        let n = rng.gen_range(3..=7);
        let x = random_bipartite_graph(n, &mut rng)?;
        let y = random_bipartite_graph(n, &mut rng)?;
        instances.push((x, y));
    }
    run_all(
        &mut report,
        &instances,
        |(x, y)| check_prop_2_2(x, y, &opts.engine),
        |(x, y), chk| pair_counterexample(claim, x, y, chk),
    )?;
    report.note(format!("{} random bipartite pairs at 3 <= n <= 7", opts.trials));
    report.set_elapsed(started.elapsed());
    Ok(report)
}

/// PROP_2_3: one census of FS(K_{r,r}, K_{r,r}).
pub fn run_prop_2_3(r: usize, config: &EngineConfig) -> Result<VerificationReport, VerifyError> {
    let started = Instant::now();
    let claim = ClaimId::Prop2_3;
    let mut report = VerificationReport::new(claim, None);
    let chk = check_prop_2_3(r, config)?;
    let cx = (chk.hypothesis && !chk.conclusion).then(|| {
        let k = complete_bipartite(r, r).expect("r validated by the check");
        pair_counterexample(claim, &k, &k, &chk)
    });
    report.record(&chk, cx);
    report.set_elapsed(started.elapsed());
    Ok(report)
}

/// THM_2_6 suite: every zoo fixture W up to `max_n` against Star_n. The
/// Wilsonian fixtures must connect; cycles and θ0 are vacuous rows whose
/// conclusion also fails, which is exactly Wilson's exception list.
pub fn run_thm_2_6(max_n: usize, config: &EngineConfig) -> Result<VerificationReport, VerifyError> {
    let started = Instant::now();
    let claim = ClaimId::Thm2_6;
    let mut report = VerificationReport::new(claim, None);
    let instances: Vec<(String, Graph)> = fixture_zoo(max_n)
        .into_iter()
        .filter(|(_, w)| w.n() >= 2)
        .collect();
    run_all(
        &mut report,
        &instances,
        |(_, w)| check_thm_2_6(w, config),
        |(name, w), chk| {
            let mut cx = pair_counterexample(
                claim,
                &star(w.n()).expect("zoo graphs have n >= 2"),
                w,
                chk,
            );
            cx.note = format!("fixture {name}");
            cx
        },
    )?;
    report.note(format!("fixture zoo up to n = {max_n}"));
    report.set_elapsed(started.elapsed());
    Ok(report)
}

/// THM_2_8 suite: zoo fixtures against +Star_n.
pub fn run_thm_2_8(max_n: usize, config: &EngineConfig) -> Result<VerificationReport, VerifyError> {
    let started = Instant::now();
    let claim = ClaimId::Thm2_8;
    let mut report = VerificationReport::new(claim, None);
    let instances: Vec<(String, Graph)> = fixture_zoo(max_n)
        .into_iter()
        .filter(|(_, w)| w.n() >= 3)
        .collect();
    run_all(
        &mut report,
        &instances,
        |(_, w)| check_thm_2_8(w, config),
        |(name, w), chk| {
            let mut cx = pair_counterexample(
                claim,
                &star_plus(w.n()).expect("zoo graphs filtered to n >= 3"),
                w,
                chk,
            );
            cx.note = format!("fixture {name}");
            cx
        },
    )?;
    report.note(format!("fixture zoo up to n = {max_n}"));
    report.set_elapsed(started.elapsed());
    Ok(report)
}

/// PROP_1_6 suite: the group construction either at one (n, k) or at the
/// default sweep n ∈ {5, 6, 7} with k = 5.
pub fn run_prop_1_6(
    sel: Option<(usize, usize)>,
    config: &EngineConfig,
) -> Result<VerificationReport, VerifyError> {
    let started = Instant::now();
    let claim = ClaimId::Prop1_6;
    let mut report = VerificationReport::new(claim, None);
    let picks: Vec<(usize, usize)> = match sel {
        Some(p) => vec![p],
        None => vec![(5, 5), (6, 5), (7, 5)],
    };
    let pairs: Vec<LowerBoundPair> = picks
        .iter()
        .map(|&(n, k)| prop_1_6_pair(n, k))
        .collect::<Result<_, _>>()?;
    run_all(
        &mut report,
        &pairs,
        |p| check_prop_1_6_instance(&p.x, &p.y, &p.sigma, &p.meta, config),
        |p, chk| witness_counterexample(claim, p, chk),
    )?;
    report.note(format!("group pairs at (n, k) in {picks:?}"));
    report.set_elapsed(started.elapsed());
    Ok(report)
}

/// Legal (r, δ1, δ2) triples: δ1 + δ2 = ⌊3r/2⌋ with both at most r.
fn legal_block_triples(rs: &[usize]) -> Vec<(usize, usize, usize)> {
    let mut out = Vec::new();
    for &r in rs {
        let sum = (3 * r) / 2;
        for d1 in sum.saturating_sub(r)..=r.min(sum) {
            out.push((r, d1, sum - d1));
        }
    }
    out
}

/// THM_1_11 suite: the block construction either at one legal triple or at
/// every legal triple with r ∈ {2, 3, 4}.
pub fn run_thm_1_11(
    sel: Option<(usize, usize, usize)>,
    config: &EngineConfig,
) -> Result<VerificationReport, VerifyError> {
    let started = Instant::now();
    let claim = ClaimId::Thm1_11;
    let mut report = VerificationReport::new(claim, None);
    let triples = match sel {
        Some(t) => vec![t],
        None => legal_block_triples(&[2, 3, 4]),
    };
    let pairs: Vec<LowerBoundPair> = triples
        .iter()
        .map(|&(r, d1, d2)| thm_1_11_pair(r, d1, d2))
        .collect::<Result<_, _>>()?;
    run_all(
        &mut report,
        &pairs,
        |p| check_thm_1_11_instance(&p.x, &p.y, &p.sigma, &p.meta, config),
        |p, chk| witness_counterexample(claim, p, chk),
    )?;
    report.note(format!("block pairs at (r, δ1, δ2) in {triples:?}"));
    report.set_elapsed(started.elapsed());
    Ok(report)
}

/// LEM_4_1 suite: per m ∈ {6..10}, `trials` random (G, Q) pairs filtered to
/// the hypothesis, plus a complete-graph row and a vacuous sparse row.
pub fn run_lem_4_1(opts: &SuiteOptions) -> Result<VerificationReport, VerifyError> {
    let started = Instant::now();
    let claim = ClaimId::Lem4_1;
    let mut report = VerificationReport::new(claim, Some(opts.seed));
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);

    let mut instances: Vec<(Graph, VertexSet)> = vec![
        (complete(8)?, (0..6).collect()),
        (cycle(10)?, (0..5).collect()),
    ];
    for m in 6..=10usize {
        let mut accepted = 0;
        let mut attempts = 0;
        let cap = opts.trials.saturating_mul(200).max(1000);
        while accepted < opts.trials {
            attempts += 1;
            if attempts > cap {
                return Err(VerifyError::GenerationStalled {
                    wanted: opts.trials,
                    got: accepted,
                    attempts,
                });
            }
            let floor = rng.gen_range(2 * m / 3..m);
            let g = random_graph_min_degree(m, floor, false, rng.gen())?;
            let q_size = rng.gen_range(5..=m);
            let q: VertexSet = rand::seq::index::sample(&mut rng, m, q_size)
                .into_iter()
                .collect();
            let (dg, qs) = (g.min_degree() as i64, q_size as i64);
            if !(qs >= 5 && 2 * qs + 3 * dg >= 3 * m as i64 + 2) {
                continue;
            }
            instances.push((g, q));
            accepted += 1;
        }
    }
    run_all(
        &mut report,
        &instances,
        |(g, q)| check_lemma_4_1(g, *q),
        |(g, q), chk| Counterexample {
            claim,
            x: g.clone(),
            y: None,
            sigma: None,
            q: Some(q.to_vec()),
            swap: None,
            meta: None,
            census: None,
            note: chk.note.clone().unwrap_or_default(),
        },
    )?;
    report.note(format!(
        "{} hypothesis-true random (G, Q) instances per m in 6..=10",
        opts.trials
    ));
    report.set_elapsed(started.elapsed());
    Ok(report)
}

/// X-edges whose σ-images land in different parts of Y, as Y-vertex pairs.
fn eligible_swaps(x: &Graph, y: &Graph, sigma: &Bijection) -> Vec<(usize, usize)> {
    let Some((ay, _)) = y.bipartition() else {
        return Vec::new();
    };
    x.edges()
        .iter()
        .filter_map(|&(a, b)| {
            let (u, v) = (sigma.image(a), sigma.image(b));
            (ay.contains(u) != ay.contains(v)).then_some((u.min(v), u.max(v)))
        })
        .collect()
}

/// LEM_6_2 suite. At r = 2 the degree hypothesis forces X = Y = K_{2,2}, so
/// the run is exhaustive over all 24 starts and every eligible (u, v). At
/// r ∈ {3, 4} it samples qualifying pairs, starts, and swaps.
pub fn run_lem_6_2(r: usize, opts: &SuiteOptions) -> Result<VerificationReport, VerifyError> {
    let started = Instant::now();
    let claim = ClaimId::Lem6_2;
    if r < 2 {
        return Err(VerifyError::BadParam {
            claim,
            detail: format!("r must be at least 2; got {r}"),
        });
    }
    if r > 4 {
        return Err(VerifyError::ScaleLimit { claim, max: 4, got: r });
    }
    let mut report = VerificationReport::new(claim, Some(opts.seed));
    let mut instances: Vec<(Graph, Graph, Bijection, usize, usize)> = Vec::new();
    if r == 2 {
        let subs = all_k22_subgraphs()?;
        let mut qualifying = Vec::new();
        for x in &subs {
            for y in &subs {
                if 2 * (x.min_degree() + y.min_degree()) >= 3 * r + 2 {
                    qualifying.push((x.clone(), y.clone()));
                }
            }
        }
        report.note(format!(
            "exhaustive at r = 2: {} qualifying pair(s) out of 256",
            qualifying.len()
        ));
        for (x, y) in qualifying {
            for index in 0..factorial(4) {
                let sigma = PermRank::new(index, 4)?.unrank();
                for (u, v) in eligible_swaps(&x, &y, &sigma) {
                    instances.push((x.clone(), y.clone(), sigma.clone(), u, v));
                }
            }
        }
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
        let floors = feasible_floor_pairs(r);
        let cap = opts.trials.saturating_mul(200).max(1000);
        let mut attempts = 0;
        while instances.len() < opts.trials {
            attempts += 1;
            if attempts > cap {
                return Err(VerifyError::GenerationStalled {
                    wanted: opts.trials,
                    got: instances.len(),
                    attempts,
                });
            }
            let &(a, b) = floors.choose(&mut rng).expect("feasible floors exist");
            let x = random_bipartite_subgraph(r, a, rng.gen())?;
            let y = random_bipartite_subgraph(r, b, rng.gen())?;
            let mut order: Vec<usize> = (0..2 * r).collect();
            order.shuffle(&mut rng);
            let sigma = Bijection::from_vec(order)?;
            let eligible = eligible_swaps(&x, &y, &sigma);
            let Some(&(u, v)) = eligible.choose(&mut rng) else {
                continue;
            };
            instances.push((x, y, sigma, u, v));
        }
    }
    run_all(
        &mut report,
        &instances,
        |(x, y, sigma, u, v)| check_lemma_6_2_instance(x, y, sigma, *u, *v, &opts.engine),
        |(x, y, sigma, u, v), chk| Counterexample {
            claim,
            x: x.clone(),
            y: Some(y.clone()),
            sigma: Some(sigma.clone()),
            q: None,
            swap: Some((*u, *v)),
            meta: None,
            census: None,
            note: chk.note.clone().unwrap_or_default(),
        },
    )?;
    report.set_elapsed(started.elapsed());
    Ok(report)
}

/// PROP_2_1 suite: census size multisets of FS(X,Y) and FS(Y,X) on fixture
/// pairs and random pairs at n ≤ 6.
pub fn run_prop_2_1(opts: &SuiteOptions) -> Result<VerificationReport, VerifyError> {
    let started = Instant::now();
    let claim = ClaimId::Prop2_1;
    let mut report = VerificationReport::new(claim, Some(opts.seed));
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);

    let mut instances = vec![
        (star(5)?, cycle(5)?),
        (complete(4)?, path(4)?),
        (cycle(4)?, cycle(4)?),
    ];
    for _ in 0..opts.trials {
        let n = rng.gen_range(3..=6);
        let dx = rng.gen_range(1..n);
        let dy = rng.gen_range(1..n);
        instances.push((
            random_graph_min_degree(n, dx, false, rng.gen())?,
            random_graph_min_degree(n, dy, false, rng.gen())?,
        ));
    }
    run_all(
        &mut report,
        &instances,
        |(x, y)| check_census_symmetry(x, y, &opts.engine),
        |(x, y), chk| pair_counterexample(claim, x, y, chk),
    )?;
    report.note(format!("{} random pairs at 3 <= n <= 6", opts.trials));
    report.set_elapsed(started.elapsed());
    Ok(report)
}

/// COR_1_12 suite. Upper side: subgraphs of K_{r,r} at the sufficient floor
/// against K_{r,r} (exhaustive at r = 2). Lower side: the block pair at
/// δ1 = ⌊r/2⌋, δ2 = r. Even r pins d*_{r,r}; odd r only brackets it.
pub fn run_cor_1_12(r: usize, opts: &SuiteOptions) -> Result<VerificationReport, VerifyError> {
    let started = Instant::now();
    let claim = ClaimId::Cor1_12;
    if r < 2 {
        return Err(VerifyError::BadParam {
            claim,
            detail: format!("r must be at least 2; got {r}"),
        });
    }
    if r > 4 {
        return Err(VerifyError::ScaleLimit { claim, max: 4, got: r });
    }
    let mut report = VerificationReport::new(claim, Some(opts.seed));
    let k = complete_bipartite(r, r)?;
    let sufficient = (r + 1) / 2 + 1;

    let uppers: Vec<Graph> = if r == 2 {
        report.note("exhaustive at r = 2: K_{2,2} is the only subgraph with δ ≥ 2");
        all_k22_subgraphs()?
            .into_iter()
            .filter(|g| g.min_degree() >= sufficient)
            .collect()
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
        (0..opts.trials)
            .map(|_| random_bipartite_subgraph(r, sufficient, rng.gen()))
            .collect::<Result<_, _>>()?
    };
    run_all(
        &mut report,
        &uppers,
        |x| check_cor_1_12_upper(x, &k, &opts.engine),
        |x, chk| pair_counterexample(claim, x, &k, chk),
    )?;

    let pair = thm_1_11_pair(r, r / 2, r)?;
    let chk = check_thm_1_11_instance(&pair.x, &pair.y, &pair.sigma, &pair.meta, &opts.engine)?;
    let cx = (chk.hypothesis && !chk.conclusion).then(|| witness_counterexample(claim, &pair, &chk));
    report.record(&chk, cx);

    if r % 2 == 0 {
        report.note(format!(
            "even r = {r}: δ ≥ {} forces two components and δ = {} admits more, so d*_{{{r},{r}}} = {}",
            r / 2 + 1,
            r / 2,
            r / 2 + 1
        ));
    } else {
        report.note(format!(
            "odd r = {r}: δ = {} admits more than two components and δ ≥ {sufficient} forces two; δ = {} is not adjudicated, leaving d*_{{{r},{r}}} in {{{}, {sufficient}}}",
            r / 2,
            (r + 1) / 2,
            (r + 1) / 2
        ));
    }
    report.set_elapsed(started.elapsed());
    Ok(report)
}

/// Connected graph whose minimum degree is exactly `d`: sample at the floor,
/// then shave edges between over-degree endpoints until some vertex lands on
/// d, backing out any removal that disconnects the graph.
fn connected_graph_exact_min_degree(
    n: usize,
    d: usize,
    rng: &mut ChaCha8Rng,
) -> Result<Graph, VerifyError> {
    const RESTARTS: usize = 60;
    'outer: for _ in 0..RESTARTS {
        let mut g = random_graph_min_degree(n, d, true, rng.gen())?;
        while g.min_degree() > d {
            let mut spare: Vec<(usize, usize)> = g
                .edges()
                .into_iter()
                .filter(|&(u, v)| g.degree(u) > d && g.degree(v) > d)
                .collect();
            spare.shuffle(rng);
            let mut removed = false;
            for (u, v) in spare {
                g.remove_edge(u, v)?;
                if g.is_connected() {
                    removed = true;
                    break;
                }
                g.add_edge(u, v)?;
            }
            if !removed {
                continue 'outer;
            }
        }
        return Ok(g);
    }
    Err(VerifyError::GenerationStalled {
        wanted: 1,
        got: 0,
        attempts: RESTARTS,
    })
}

/// CONJ_8_1 search: sample connected pairs with exact minimum degrees
/// (δ1, δ2) inside the conjectured region 2·min + 3·max ≥ 3n and record any
/// disconnected FS instance verbatim. This reports evidence; it proves
/// nothing either way.
pub fn search_conjecture_8_1(
    n: usize,
    d1: usize,
    d2: usize,
    opts: &SuiteOptions,
) -> Result<VerificationReport, VerifyError> {
    let started = Instant::now();
    let claim = ClaimId::Conj8_1;
    if n == 0 || d1 + 1 > n || d2 + 1 > n {
        return Err(ConstructError::InfeasibleDegree {
            n,
            min_degree: d1.max(d2),
        }
        .into());
    }
    let (lo, hi) = (d1.min(d2), d1.max(d2));
    let got = 2 * lo + 3 * hi;
    if got < 3 * n {
        return Err(VerifyError::OutsideSearchRegion { got, need: 3 * n });
    }
    let mut report = VerificationReport::new(claim, Some(opts.seed));
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let mut instances: Vec<(Graph, Graph)> = Vec::new();
    for _ in 0..opts.trials {
        let x = connected_graph_exact_min_degree(n, d1, &mut rng)?;
        let y = connected_graph_exact_min_degree(n, d2, &mut rng)?;
        instances.push((x, y));
    }
    run_all(
        &mut report,
        &instances,
        |(x, y)| check_conjecture_8_1(x, y, &opts.engine),
        |(x, y), chk| {
            let mut cx = pair_counterexample(claim, x, y, chk);
            cx.note = format!("disconnected pair at exact floors ({d1}, {d2}), n = {n}");
            cx
        },
    )?;
    report.note(format!(
        "searched {} connected pairs at n = {n} with exact floors ({d1}, {d2}); disconnected instances are potential counterexamples of an open conjecture, not test failures",
        opts.trials
    ));
    report.set_elapsed(started.elapsed());
    Ok(report)
}
