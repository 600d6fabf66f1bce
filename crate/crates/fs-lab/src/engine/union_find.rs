//! Lock-free union-find over a dense `u32` index space.
//!
//! Parents only ever decrease: `union` roots the larger root index under the
//! smaller via CAS, and path halving rewrites a parent to its grandparent,
//! which is never larger. Every slot's value is therefore monotonically
//! non-increasing, which rules out cycles and ABA trouble with plain
//! `Relaxed` ordering: correctness needs only the per-slot modification
//! order, not cross-slot happens-before. The resulting partition is the
//! transitive closure of the submitted pairs regardless of interleaving, so
//! censuses built on top are identical for every thread count.

use std::sync::atomic::{AtomicU32, Ordering};

pub(crate) struct AtomicUnionFind {
    slots: Vec<AtomicU32>,
}

impl AtomicUnionFind {
    pub fn new(len: u64) -> AtomicUnionFind {
        assert!(len <= u32::MAX as u64, "index space exceeds u32 slots");
        let slots = (0..len as u32).map(AtomicU32::new).collect();
        AtomicUnionFind { slots }
    }

    pub fn find(&self, mut i: u32) -> u32 {
        loop {
            let p = self.slots[i as usize].load(Ordering::Relaxed);
            if p == i {
                return i;
            }
            let gp = self.slots[p as usize].load(Ordering::Relaxed);
            if gp == p {
                return p;
            }
            // Halve the path; a lost race just means someone else shortened it.
            let _ = self.slots[i as usize].compare_exchange_weak(
                p,
                gp,
                Ordering::Relaxed,
                Ordering::Relaxed,
            );
            i = gp;
        }
    }

    pub fn union(&self, a: u32, b: u32) {
        let (mut a, mut b) = (a, b);
        loop {
            let ra = self.find(a);
            let rb = self.find(b);
            if ra == rb {
                return;
            }
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            // Succeeds only while hi is still its own root; otherwise retry
            // from the partially-merged state.
            if self.slots[hi as usize]
                .compare_exchange(hi, lo, Ordering::Relaxed, Ordering::Relaxed)
                .is_ok()
            {
                return;
            }
            a = lo;
            b = hi;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn singletons_then_chains() {
        let uf = AtomicUnionFind::new(6);
        assert!((0..6).all(|i| uf.find(i) == i));
        uf.union(0, 1);
        uf.union(2, 3);
        uf.union(1, 3);
        assert_eq!(uf.find(3), uf.find(0));
        assert_ne!(uf.find(4), uf.find(0));
        uf.union(4, 4);
        assert_eq!(uf.find(4), 4);
    }

    #[test]
    fn concurrent_unions_agree_with_sequential_closure() {
        use std::sync::Arc;
        // A fixed pair list whose closure is easy to state: ring segments.
        let pairs: Vec<(u32, u32)> = (0..1000u32)
            .map(|i| (i, i / 7 * 7)) // group consecutive runs of 7
            .collect();
        let uf = Arc::new(AtomicUnionFind::new(1000));
        std::thread::scope(|s| {
            for chunk in pairs.chunks(125) {
                let uf = Arc::clone(&uf);
                s.spawn(move || {
                    for &(a, b) in chunk {
                        uf.union(a, b);
                    }
                });
            }
        });
        for i in 0..1000u32 {
            assert_eq!(uf.find(i), uf.find(i / 7 * 7));
            if i % 7 == 0 && i + 7 < 1000 {
                assert_ne!(uf.find(i), uf.find(i + 7));
            }
        }
    }
}
