//! Exact component census of FS(X,Y).
//!
//! The state space is the rank interval [0, n!). The scan visits every rank,
//! enumerates its friendly swaps by walking the sorted X-edge list, computes
//! each neighbor's rank in place (swap two entries, rank, swap back), and
//! merges the pair in a shared union-find. Ranks are visited in chunks: a
//! chunk unranks its first permutation once and then steps with
//! `next_permutation`, whose successor is exactly rank + 1.
//!
//! Determinism does not depend on the schedule: the union-find partition is
//! the transitive closure of the merged pairs whatever the interleaving, and
//! the extraction pass walks ranks in ascending order, so representatives
//! (per-component minimum ranks), sizes, and ordering come out identical for
//! every thread count.

use std::collections::HashMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize, Serializer};

use super::union_find::AtomicUnionFind;
use super::{EngineError, FsInstance};
use crate::perm::{factorial, next_permutation, rank_of, Bijection, PermRank};

/// 13! overflows the u32 union-find slots, so censuses stop at n = 12.
pub const HARD_CENSUS_LIMIT: usize = 12;

const CHUNK: u64 = 1 << 13;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Component {
    /// Number of bijections in the component.
    pub size: u64,
    /// The member with the smallest rank.
    pub representative: PermRank,
}

/// Full component structure of one FS(X,Y) instance. Components are ordered
/// by (size, representative rank), both ascending.
#[derive(Debug, Clone)]
pub struct ComponentCensus {
    n: usize,
    components: Vec<Component>,
    /// Component index of every rank, in rank order.
    comp_of: Vec<u32>,
}

impl ComponentCensus {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn num_components(&self) -> usize {
        self.components.len()
    }

    pub fn components(&self) -> &[Component] {
        &self.components
    }

    pub fn sizes(&self) -> Vec<u64> {
        self.components.iter().map(|c| c.size).collect()
    }

    pub fn total(&self) -> u64 {
        self.comp_of.len() as u64
    }

    /// Index into `components` for the component containing `rank`.
    pub fn component_index_of(&self, rank: PermRank) -> usize {
        assert_eq!(rank.n(), self.n, "rank from a different-sized instance");
        self.comp_of[rank.index() as usize] as usize
    }

    pub fn same_component(&self, a: &Bijection, b: &Bijection) -> bool {
        self.component_index_of(a.rank()) == self.component_index_of(b.rank())
    }

    /// Members of component `idx` (by census order), ascending by rank.
    /// Linear in n!; intended for small-n analysis.
    pub fn members_of(&self, idx: usize) -> Vec<PermRank> {
        self.comp_of
            .iter()
            .enumerate()
            .filter(|&(_, &c)| c as usize == idx)
            .map(|(rank, _)| PermRank::new(rank as u64, self.n).expect("rank < n!"))
            .collect()
    }
}

impl Serialize for ComponentCensus {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        CensusJson::from(self).serialize(serializer)
    }
}

/// Wire form of a census: sizes and representative ranks only.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusJson {
    pub n: usize,
    pub num_components: usize,
    pub sizes: Vec<u64>,
    pub representatives: Vec<u64>,
}

impl From<&ComponentCensus> for CensusJson {
    fn from(c: &ComponentCensus) -> CensusJson {
        CensusJson {
            n: c.n(),
            num_components: c.num_components(),
            sizes: c.sizes(),
            representatives: c
                .components
                .iter()
                .map(|comp| comp.representative.index())
                .collect(),
        }
    }
}

pub(crate) fn component_census(inst: &FsInstance) -> Result<ComponentCensus, EngineError> {
    let n = inst.n();
    if n > HARD_CENSUS_LIMIT {
        return Err(EngineError::CensusUnsupported(n));
    }
    let cap = inst.config().census_cap;
    if n > cap {
        // union-find slots plus component ids, 4 bytes each
        let estimated_mib = factorial(n).saturating_mul(8) >> 20;
        return Err(EngineError::CensusOverCap {
            n,
            cap,
            estimated_mib,
        });
    }

    let total = factorial(n);
    let uf = AtomicUnionFind::new(total);
    let num_chunks = total.div_ceil(CHUNK);

    let scan = || {
        (0..num_chunks).into_par_iter().for_each(|chunk| {
            let start = chunk * CHUNK;
            let end = total.min(start + CHUNK);
            let mut map: Vec<usize> = PermRank::new(start, n)
                .expect("chunk start below n!")
                .unrank()
                .into();
            for rank in start..end {
                for &(a, c) in inst.x_edges() {
                    let (u, v) = (map[a], map[c]);
                    if inst.y().has_edge(u, v) {
                        map.swap(a, c);
                        let neighbor = rank_of(&map);
                        map.swap(a, c);
                        // Each undirected FS edge is merged from its smaller
                        // endpoint only.
                        if neighbor > rank {
                            uf.union(rank as u32, neighbor as u32);
                        }
                    }
                }
                next_permutation(&mut map);
            }
        });
    };
    match inst.config().threads {
        Some(t) => rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build()
            .map_err(|e| EngineError::ThreadPool(e.to_string()))?
            .install(scan),
        None => scan(),
    }

    // Ascending extraction: the first rank seen for each root is the
    // component minimum, independent of merge history.
    let mut comp_of = vec![0u32; total as usize];
    let mut index_of_root: HashMap<u32, u32> = HashMap::new();
    let mut found: Vec<(u64, u64)> = Vec::new(); // (size, representative rank)
    for rank in 0..total {
        let root = uf.find(rank as u32);
        let id = *index_of_root.entry(root).or_insert_with(|| {
            found.push((0, rank));
            (found.len() - 1) as u32
        });
        found[id as usize].0 += 1;
        comp_of[rank as usize] = id;
    }

    let mut order: Vec<usize> = (0..found.len()).collect();
    order.sort_by_key(|&i| found[i]);
    let mut renumber = vec![0u32; found.len()];
    for (new_id, &old_id) in order.iter().enumerate() {
        renumber[old_id] = new_id as u32;
    }
    for id in comp_of.iter_mut() {
        *id = renumber[*id as usize];
    }
    let components = order
        .iter()
        .map(|&i| Component {
            size: found[i].0,
            representative: PermRank::new(found[i].1, n).expect("rank < n!"),
        })
        .collect();

    Ok(ComponentCensus {
        n,
        components,
        comp_of,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::EngineConfig;
    use crate::graph::Graph;

    fn instance(threads: Option<usize>) -> FsInstance {
        let star = Graph::from_edges(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
        let cycle = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)]).unwrap();
        let cfg = EngineConfig {
            threads,
            ..EngineConfig::default()
        };
        FsInstance::with_config(star, cycle, cfg).unwrap()
    }

    #[test]
    fn census_is_identical_across_thread_counts() {
        let baseline = serde_json::to_string(&instance(Some(1)).component_census().unwrap()).unwrap();
        for threads in [2, 3, 8] {
            let run = serde_json::to_string(&instance(Some(threads)).component_census().unwrap())
                .unwrap();
            assert_eq!(run, baseline, "threads = {threads}");
        }
        let pooled = serde_json::to_string(&instance(None).component_census().unwrap()).unwrap();
        assert_eq!(pooled, baseline);
    }

    #[test]
    fn components_are_ordered_and_indexed_consistently() {
        let census = instance(None).component_census().unwrap();
        assert_eq!(census.total(), 120);
        let comps = census.components();
        for w in comps.windows(2) {
            assert!(
                (w[0].size, w[0].representative.index())
                    < (w[1].size, w[1].representative.index()),
                "sorted by (size, representative)"
            );
        }
        // Sizes agree with membership counts, and each representative lives
        // in its own component with the minimal rank.
        for (idx, comp) in comps.iter().enumerate() {
            let members = census.members_of(idx);
            assert_eq!(members.len() as u64, comp.size);
            assert_eq!(members[0], comp.representative);
            assert_eq!(census.component_index_of(comp.representative), idx);
        }
        let json = CensusJson::from(&census);
        assert_eq!(json.num_components, comps.len());
        assert_eq!(json.sizes.iter().sum::<u64>(), 120);
    }
}
