//! Simple undirected graphs on at most [`MAX_VERTICES`] vertices, stored as
//! one adjacency bitmask per vertex, plus the structural predicates the
//! classifier needs: connectivity, cut vertices, two-colorings with odd-cycle
//! witnesses, cycle-graph detection, and recognition of the seven-vertex
//! exceptional graph θ₀.
//!
//! A graph may carry an optional bipartition (used to orient parity
//! arguments) and optional vertex labels (cosmetic, for construction output).

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub const MAX_VERTICES: usize = 32;

/// θ₀: a six-cycle `0-1-2-3-4-5-0` plus a seventh vertex adjacent to the two
/// antipodal vertices 0 and 3. Degree sequence (3,3,2,2,2,2,2), 8 edges,
/// non-bipartite, triangle-free.
pub const THETA_ZERO_EDGES: [(usize, usize); 8] = [
    (0, 1),
    (1, 2),
    (2, 3),
    (3, 4),
    (4, 5),
    (0, 5),
    (0, 6),
    (3, 6),
];

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("graphs support at most {MAX_VERTICES} vertices, got {0}")]
    TooManyVertices(usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0} is not allowed")]
    SelfLoop(usize),
    #[error("edge ({0}, {1}) must list the smaller endpoint first")]
    UnorderedEdge(usize, usize),
    #[error("edge ({0}, {1}) appears more than once")]
    DuplicateEdge(usize, usize),
    #[error("bipartition parts must be disjoint and cover every vertex")]
    BipartitionNotAPartition,
    #[error("edge ({0}, {1}) has both endpoints in the same bipartition part")]
    EdgeWithinPart(usize, usize),
    #[error("expected {expected} vertex labels, got {got}")]
    WrongLabelCount { got: usize, expected: usize },
}

/// A set of vertex indices below [`MAX_VERTICES`], packed into a `u64`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    /// `{0, 1, ..., n-1}`.
    pub fn all_below(n: usize) -> VertexSet {
        debug_assert!(n <= MAX_VERTICES);
        if n == 0 {
            VertexSet(0)
        } else {
            VertexSet(u64::MAX >> (64 - n))
        }
    }

    pub fn contains(self, v: usize) -> bool {
        v < MAX_VERTICES && self.0 & (1 << v) != 0
    }

    pub fn insert(&mut self, v: usize) {
        debug_assert!(v < MAX_VERTICES);
        self.0 |= 1 << v;
    }

    pub fn remove(&mut self, v: usize) {
        debug_assert!(v < MAX_VERTICES);
        self.0 &= !(1 << v);
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    /// Smallest member, if any.
    pub fn min(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    pub fn union(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & !other.0)
    }

    pub fn is_subset_of(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    /// Members in ascending order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let v = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(v)
            }
        })
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

/// Outcome of a two-coloring attempt.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TwoColoring {
    /// Parts listed with the part containing the smallest vertex first.
    Bipartite(VertexSet, VertexSet),
    /// Vertices of an odd cycle in traversal order; the edge from the last
    /// vertex back to the first closes it.
    OddCycle(Vec<usize>),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "GraphJson", into = "GraphJson")]
pub struct Graph {
    n: usize,
    rows: Vec<u64>,
    bipartition: Option<(VertexSet, VertexSet)>,
    labels: Option<Vec<String>>,
}

impl Graph {
    pub fn edgeless(n: usize) -> Result<Graph, GraphError> {
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n));
        }
        Ok(Graph {
            n,
            rows: vec![0; n],
            bipartition: None,
            labels: None,
        })
    }

    /// Builds a graph from an edge list. Endpoint order does not matter and
    /// repeated edges collapse; self-loops and out-of-range endpoints are
    /// rejected. (The JSON form is stricter; see [`GraphJson`].)
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
        let mut g = Graph::edgeless(n)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        for w in [u, v] {
            if w >= self.n {
                return Err(GraphError::VertexOutOfRange {
                    vertex: w,
                    n: self.n,
                });
            }
        }
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        if let Some((a, _)) = self.bipartition {
            if a.contains(u) == a.contains(v) {
                return Err(GraphError::EdgeWithinPart(u.min(v), u.max(v)));
            }
        }
        self.rows[u] |= 1 << v;
        self.rows[v] |= 1 << u;
        Ok(())
    }

    /// Removes an edge if present; removing a missing edge is a no-op.
    pub fn remove_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        for w in [u, v] {
            if w >= self.n {
                return Err(GraphError::VertexOutOfRange {
                    vertex: w,
                    n: self.n,
                });
            }
        }
        self.rows[u] &= !(1 << v);
        self.rows[v] &= !(1 << u);
        Ok(())
    }

    /// Attaches a bipartition. Parts must partition the vertex set and every
    /// existing edge must cross between them.
    pub fn with_bipartition(mut self, a: VertexSet, b: VertexSet) -> Result<Graph, GraphError> {
        let all = VertexSet::all_below(self.n);
        if !a.intersection(b).is_empty() || a.union(b) != all {
            return Err(GraphError::BipartitionNotAPartition);
        }
        for (u, v) in self.edges() {
            if a.contains(u) == a.contains(v) {
                return Err(GraphError::EdgeWithinPart(u, v));
            }
        }
        self.bipartition = Some((a, b));
        Ok(self)
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Graph, GraphError> {
        if labels.len() != self.n {
            return Err(GraphError::WrongLabelCount {
                got: labels.len(),
                expected: self.n,
            });
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn bipartition(&self) -> Option<(VertexSet, VertexSet)> {
        self.bipartition
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.rows[u] & (1 << v) != 0
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.rows[v])
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].count_ones() as usize
    }

    /// Minimum degree δ; 0 for the empty graph.
    pub fn min_degree(&self) -> usize {
        self.rows
            .iter()
            .map(|r| r.count_ones() as usize)
            .min()
            .unwrap_or(0)
    }

    pub fn edge_count(&self) -> usize {
        self.rows.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            let above = VertexSet(self.rows[u]).difference(VertexSet::all_below(u + 1));
            for v in above.iter() {
                out.push((u, v));
            }
        }
        out
    }

    /// Subgraph induced on `keep`, with vertices renumbered `0..keep.len()`
    /// in ascending order of their original indices. Returns the new graph
    /// and the new-to-old index map. Bipartition and labels are dropped.
    pub fn induced_subgraph(&self, keep: VertexSet) -> (Graph, Vec<usize>) {
        let old_ids: Vec<usize> = keep.iter().filter(|&v| v < self.n).collect();
        let mut g = Graph::edgeless(old_ids.len()).expect("subset of a valid graph");
        for (new_u, &old_u) in old_ids.iter().enumerate() {
            for (new_v, &old_v) in old_ids.iter().enumerate().skip(new_u + 1) {
                if self.has_edge(old_u, old_v) {
                    g.rows[new_u] |= 1 << new_v;
                    g.rows[new_v] |= 1 << new_u;
                }
            }
        }
        (g, old_ids)
    }

    /// Connected components as vertex sets, ordered by smallest member.
    pub fn connected_components(&self) -> Vec<VertexSet> {
        let mut seen = VertexSet::EMPTY;
        let mut comps = Vec::new();
        for root in 0..self.n {
            if seen.contains(root) {
                continue;
            }
            let mut comp = VertexSet::EMPTY;
            let mut stack = vec![root];
            comp.insert(root);
            while let Some(u) = stack.pop() {
                for v in self.neighbors(u).difference(comp).iter() {
                    comp.insert(v);
                    stack.push(v);
                }
            }
            seen = seen.union(comp);
            comps.push(comp);
        }
        comps
    }

    pub fn is_connected(&self) -> bool {
        self.n > 0 && self.connected_components().len() == 1
    }

    /// Articulation points, via one DFS computing lowpoints. Works per
    /// component on disconnected graphs; a DFS root is an articulation point
    /// exactly when it has two or more DFS children.
    pub fn cut_vertices(&self) -> VertexSet {
        struct Dfs<'a> {
            g: &'a Graph,
            disc: Vec<usize>,
            low: Vec<usize>,
            timer: usize,
            cuts: VertexSet,
        }
        impl Dfs<'_> {
            fn run(&mut self, u: usize, parent: Option<usize>) {
                self.disc[u] = self.timer;
                self.low[u] = self.timer;
                self.timer += 1;
                let mut children = 0usize;
                for v in self.g.neighbors(u).iter() {
                    if self.disc[v] == usize::MAX {
                        children += 1;
                        self.run(v, Some(u));
                        self.low[u] = self.low[u].min(self.low[v]);
                        if parent.is_some() && self.low[v] >= self.disc[u] {
                            self.cuts.insert(u);
                        }
                    } else if Some(v) != parent {
                        self.low[u] = self.low[u].min(self.disc[v]);
                    }
                }
                if parent.is_none() && children >= 2 {
                    self.cuts.insert(u);
                }
            }
        }
        let mut dfs = Dfs {
            g: self,
            disc: vec![usize::MAX; self.n],
            low: vec![usize::MAX; self.n],
            timer: 0,
            cuts: VertexSet::EMPTY,
        };
        for root in 0..self.n {
            if dfs.disc[root] == usize::MAX {
                dfs.run(root, None);
            }
        }
        dfs.cuts
    }

    /// Connected with no cut vertex, on at least two vertices. By this
    /// convention a single edge (K₂) counts as biconnected.
    pub fn is_biconnected(&self) -> bool {
        self.n >= 2 && self.is_connected() && self.cut_vertices().is_empty()
    }

    /// BFS two-coloring. Either a proper bipartition (part containing vertex
    /// 0 first) or an explicit odd-cycle witness built from the BFS forest.
    pub fn two_coloring(&self) -> TwoColoring {
        let n = self.n;
        let mut color = vec![u8::MAX; n];
        let mut parent = vec![usize::MAX; n];
        let mut depth = vec![0usize; n];
        for root in 0..n {
            if color[root] != u8::MAX {
                continue;
            }
            color[root] = 0;
            let mut queue = std::collections::VecDeque::from([root]);
            while let Some(u) = queue.pop_front() {
                for v in self.neighbors(u).iter() {
                    if color[v] == u8::MAX {
                        color[v] = 1 - color[u];
                        parent[v] = u;
                        depth[v] = depth[u] + 1;
                        queue.push_back(v);
                    } else if color[v] == color[u] {
                        return TwoColoring::OddCycle(odd_cycle_witness(
                            u, v, &parent, &depth,
                        ));
                    }
                }
            }
        }
        let part0: VertexSet = (0..n).filter(|&v| color[v] == 0).collect();
        let part1 = VertexSet::all_below(n).difference(part0);
        TwoColoring::Bipartite(part0, part1)
    }

    pub fn is_bipartite(&self) -> bool {
        matches!(self.two_coloring(), TwoColoring::Bipartite(..))
    }

    /// Is this graph a cycle Cₙ for some n ≥ 3? (Connected and 2-regular.)
    pub fn is_cycle_graph(&self) -> bool {
        self.n >= 3 && self.is_connected() && (0..self.n).all(|v| self.degree(v) == 2)
    }

    /// Is this graph isomorphic to θ₀?
    pub fn is_theta_zero(&self) -> bool {
        if self.n != 7 || self.edge_count() != 8 {
            return false;
        }
        let mut degs: Vec<usize> = (0..7).map(|v| self.degree(v)).collect();
        degs.sort_unstable();
        if degs != [2, 2, 2, 2, 2, 3, 3] {
            return false;
        }
        let pattern = Graph::from_edges(7, &THETA_ZERO_EDGES).expect("valid constant");
        is_isomorphic_bruteforce(&pattern, self)
    }
}

/// Reconstructs an odd closed walk from a BFS forest, given an edge `(u, v)`
/// whose endpoints got equal colors. Returns vertices in cycle order starting
/// at the lowest common ancestor; same-color endpoints have equal depth
/// parity, so the cycle length is odd.
fn odd_cycle_witness(u: usize, v: usize, parent: &[usize], depth: &[usize]) -> Vec<usize> {
    let (mut a, mut b) = (u, v);
    while depth[a] > depth[b] {
        a = parent[a];
    }
    while depth[b] > depth[a] {
        b = parent[b];
    }
    while a != b {
        a = parent[a];
        b = parent[b];
    }
    let lca = a;
    let ascend = |mut x: usize| {
        let mut chain = vec![x];
        while x != lca {
            x = parent[x];
            chain.push(x);
        }
        chain
    };
    let mut cycle = ascend(u);
    cycle.reverse(); // lca ... u
    let back = ascend(v); // v ... lca
    cycle.extend(back.into_iter().take_while(|&x| x != lca));
    debug_assert_eq!(cycle.len() % 2, 1);
    cycle
}

/// Backtracking isomorphism test, feasible for the 7-vertex patterns used
/// here. Assumes equal vertex and edge counts (callers pre-check).
fn is_isomorphic_bruteforce(pattern: &Graph, host: &Graph) -> bool {
    let n = pattern.n();
    let mut assign = vec![usize::MAX; n];
    let mut used = vec![false; n];

    fn extend(
        pattern: &Graph,
        host: &Graph,
        assign: &mut [usize],
        used: &mut [bool],
        next: usize,
    ) -> bool {
        let n = pattern.n();
        if next == n {
            return true;
        }
        for cand in 0..n {
            if used[cand] || pattern.degree(next) != host.degree(cand) {
                continue;
            }
            let consistent = (0..next).all(|prev| {
                pattern.has_edge(prev, next) == host.has_edge(assign[prev], cand)
            });
            if consistent {
                assign[next] = cand;
                used[cand] = true;
                if extend(pattern, host, assign, used, next + 1) {
                    return true;
                }
                used[cand] = false;
                assign[next] = usize::MAX;
            }
        }
        false
    }

    extend(pattern, host, &mut assign, &mut used, 0)
}

/// Interchange format: explicit edge list with `u < v` required and
/// duplicates rejected, so a given graph has exactly one JSON spelling.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GraphJson {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bipartition: Option<[Vec<usize>; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

impl TryFrom<GraphJson> for Graph {
    type Error = GraphError;

    fn try_from(j: GraphJson) -> Result<Graph, GraphError> {
        let mut g = Graph::edgeless(j.n)?;
        for &(u, v) in &j.edges {
            if u >= v {
                return Err(GraphError::UnorderedEdge(u, v));
            }
            if g.has_edge(u, v) {
                return Err(GraphError::DuplicateEdge(u, v));
            }
            g.add_edge(u, v)?;
        }
        if let Some([a, b]) = j.bipartition {
            let to_set = |part: &[usize]| -> Result<VertexSet, GraphError> {
                let set: VertexSet = part.iter().copied().filter(|&v| v < MAX_VERTICES).collect();
                if set.len() != part.len() || part.iter().any(|&v| v >= j.n) {
                    return Err(GraphError::BipartitionNotAPartition);
                }
                Ok(set)
            };
            g = g.with_bipartition(to_set(&a)?, to_set(&b)?)?;
        }
        if let Some(labels) = j.labels {
            g = g.with_labels(labels)?;
        }
        Ok(g)
    }
}

impl From<Graph> for GraphJson {
    fn from(g: Graph) -> GraphJson {
        GraphJson {
            n: g.n(),
            edges: g.edges(),
            bipartition: g
                .bipartition()
                .map(|(a, b)| [a.to_vec(), b.to_vec()]),
            labels: g.labels.clone(),
        }
    }
}
