//! Helpers shared by the integration suites: an independent permutation
//! enumerator and a from-scratch census oracle. Neither touches the engine's
//! ranking, union-find, or parallel machinery, so agreement between the two
//! routes is meaningful.

use std::collections::HashMap;

use fs_lab::graph::Graph;

/// Every bijection on {0..n-1} as an image vector, generated by recursive
/// insertion. The order differs from the engine's lexicographic ranks on
/// purpose.
pub fn all_bijections(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for rest in all_bijections(n - 1) {
        for slot in 0..n {
            let mut next = rest.clone();
            next.insert(slot, n - 1);
            out.push(next);
        }
    }
    out
}

/// Component size multiset (ascending) of FS(X, Y) by flood fill over a hash
/// map of image vectors.
pub fn census_oracle(x: &Graph, y: &Graph) -> Vec<u64> {
    let n = x.n();
    assert_eq!(n, y.n(), "oracle needs equal vertex counts");
    let verts = all_bijections(n);
    let index: HashMap<Vec<usize>, usize> = verts
        .iter()
        .enumerate()
        .map(|(i, v)| (v.clone(), i))
        .collect();
    let mut seen = vec![false; verts.len()];
    let mut sizes = Vec::new();
    for start in 0..verts.len() {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut stack = vec![start];
        let mut size = 0u64;
        while let Some(i) = stack.pop() {
            size += 1;
            let sigma = &verts[i];
            let mut pre = vec![0usize; n];
            for (pos, &img) in sigma.iter().enumerate() {
                pre[img] = pos;
            }
            for (u, v) in y.edges() {
                let (a, b) = (pre[u], pre[v]);
                if !x.has_edge(a, b) {
                    continue;
                }
                let mut tau = sigma.clone();
                tau.swap(a, b);
                let j = index[&tau];
                if !seen[j] {
                    seen[j] = true;
                    stack.push(j);
                }
            }
        }
        sizes.push(size);
    }
    sizes.sort_unstable();
    sizes
}

/// Cut vertices the slow way: v is a cut vertex iff deleting it leaves more
/// components among the remaining vertices than the whole graph had.
pub fn cut_vertices_oracle(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let base = g.connected_components().len();
    (0..n)
        .filter(|&v| {
            let keep = (0..n).filter(|&w| w != v).collect();
            let (h, _) = g.induced_subgraph(keep);
            h.connected_components().len() > base
        })
        .collect()
}
