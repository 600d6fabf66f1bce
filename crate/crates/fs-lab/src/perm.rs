//! Bijections `V(X) -> V(Y)` as permutations of `0..n-1`, with a dense
//! Lehmer-code ranking into `[0, n!)`, permutation signs, value swaps, and
//! swap sequences.
//!
//! The ranking is the factorial-number-system encoding: permutations ordered
//! lexicographically, so the identity ranks 0 and the reversal ranks `n! - 1`.
//! A dense, collision-free index is what lets the component engine run a flat
//! union-find over all `n!` states.

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Largest `n` for which `n!` fits comfortably in rank arithmetic (20! < 2^63).
pub const MAX_RANK_N: usize = 20;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PermError {
    #[error("bijections must have between 1 and {MAX_RANK_N} entries, got {0}")]
    BadLength(usize),
    #[error("not a permutation of 0..{n}: value {value} {problem}")]
    NotAPermutation {
        n: usize,
        value: usize,
        problem: &'static str,
    },
    #[error("rank {index} out of range: n = {n} admits ranks 0..{}", factorial(*n))]
    RankOutOfRange { index: u64, n: usize },
    #[error("swap endpoints must be distinct, got ({0}, {0})")]
    DegenerateSwap(usize),
    #[error("value {value} out of range for a bijection on {n} elements")]
    ValueOutOfRange { value: usize, n: usize },
}

/// `n!` as a `u64`. Panics for `n > 20`, which no caller reaches: every
/// constructor in this module bounds `n` by [`MAX_RANK_N`] first.
pub fn factorial(n: usize) -> u64 {
    assert!(n <= MAX_RANK_N, "factorial({n}) overflows u64");
    (1..=n as u64).product()
}

/// A bijection from the vertices of `X` to the vertices of `Y`, stored as
/// `map[x] = y`. The inverse is computed on demand, never stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Bijection {
    map: Vec<usize>,
}

impl Bijection {
    /// The identity bijection on `n` elements.
    pub fn identity(n: usize) -> Result<Self, PermError> {
        if n == 0 || n > MAX_RANK_N {
            return Err(PermError::BadLength(n));
        }
        Ok(Bijection {
            map: (0..n).collect(),
        })
    }

    /// Validates that `map` is a permutation of `0..map.len()`.
    pub fn from_vec(map: Vec<usize>) -> Result<Self, PermError> {
        let n = map.len();
        if n == 0 || n > MAX_RANK_N {
            return Err(PermError::BadLength(n));
        }
        let mut seen = vec![false; n];
        for &y in &map {
            if y >= n {
                return Err(PermError::NotAPermutation {
                    n,
                    value: y,
                    problem: "out of range",
                });
            }
            if seen[y] {
                return Err(PermError::NotAPermutation {
                    n,
                    value: y,
                    problem: "appears twice",
                });
            }
            seen[y] = true;
        }
        Ok(Bijection { map })
    }

    pub fn n(&self) -> usize {
        self.map.len()
    }

    /// `σ(x)`: the Y-vertex occupying X-vertex `x`.
    pub fn image(&self, x: usize) -> usize {
        self.map[x]
    }

    /// `σ⁻¹(y)`: the X-vertex occupied by Y-vertex `y` (linear scan).
    pub fn preimage(&self, y: usize) -> usize {
        self.map
            .iter()
            .position(|&v| v == y)
            .expect("valid bijections are surjective")
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.map
    }

    /// Parity of the permutation: 0 even, 1 odd, via cycle decomposition
    /// (`parity = (n - #cycles) mod 2`).
    pub fn sign(&self) -> u8 {
        let n = self.map.len();
        let mut seen = vec![false; n];
        let mut cycles = 0usize;
        for start in 0..n {
            if seen[start] {
                continue;
            }
            cycles += 1;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                x = self.map[x];
            }
        }
        ((n - cycles) % 2) as u8
    }

    /// Lehmer rank of this bijection in lexicographic order.
    pub fn rank(&self) -> PermRank {
        PermRank {
            index: rank_of(&self.map),
            n: self.map.len(),
        }
    }

    /// `(u,v) ∘ σ`: the positions holding values `u` and `v` exchange
    /// occupants; all other positions are unchanged. The input is not mutated.
    pub fn apply_value_swap(&self, u: usize, v: usize) -> Result<Bijection, PermError> {
        let n = self.map.len();
        if u == v {
            return Err(PermError::DegenerateSwap(u));
        }
        for value in [u, v] {
            if value >= n {
                return Err(PermError::ValueOutOfRange { value, n });
            }
        }
        let mut map = self.map.clone();
        let pu = self.preimage(u);
        let pv = self.preimage(v);
        map.swap(pu, pv);
        Ok(Bijection { map })
    }
}

impl TryFrom<Vec<usize>> for Bijection {
    type Error = PermError;
    fn try_from(map: Vec<usize>) -> Result<Self, Self::Error> {
        Bijection::from_vec(map)
    }
}

impl From<Bijection> for Vec<usize> {
    fn from(b: Bijection) -> Self {
        b.map
    }
}

/// Dense index of a permutation: `index ∈ [0, n!)` under lexicographic order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PermRank {
    n: usize,
    index: u64,
}

impl PermRank {
    pub fn new(index: u64, n: usize) -> Result<Self, PermError> {
        if n == 0 || n > MAX_RANK_N {
            return Err(PermError::BadLength(n));
        }
        if index >= factorial(n) {
            return Err(PermError::RankOutOfRange { index, n });
        }
        Ok(PermRank { n, index })
    }

    pub fn index(&self) -> u64 {
        self.index
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Inverse of `rank`: decodes the factorial-base digits and picks the
    /// corresponding still-unused value at each position.
    pub fn unrank(&self) -> Bijection {
        let n = self.n;
        let mut remaining: Vec<usize> = (0..n).collect();
        let mut idx = self.index;
        let mut map = Vec::with_capacity(n);
        for pos in 0..n {
            let base = factorial(n - 1 - pos);
            let digit = (idx / base) as usize;
            idx %= base;
            map.push(remaining.remove(digit));
        }
        Bijection { map }
    }
}

/// Lehmer rank of a permutation slice (assumed valid).
pub(crate) fn rank_of(map: &[usize]) -> u64 {
    let n = map.len();
    let mut index = 0u64;
    for i in 0..n {
        let smaller_after = map[i + 1..].iter().filter(|&&x| x < map[i]).count() as u64;
        index += smaller_after * factorial(n - 1 - i);
    }
    index
}

/// Advances `a` to its lexicographic successor in place. Returns false (and
/// leaves `a` sorted ascending) when `a` was the last permutation. Rank `r+1`
/// is exactly the successor of rank `r`, which lets the census engine walk a
/// rank interval without unranking every state.
pub(crate) fn next_permutation(a: &mut [usize]) -> bool {
    let n = a.len();
    if n < 2 {
        return false;
    }
    let Some(i) = (0..n - 1).rev().find(|&i| a[i] < a[i + 1]) else {
        a.reverse();
        return false;
    };
    let j = (i + 1..n).rev().find(|&j| a[j] > a[i]).unwrap();
    a.swap(i, j);
    a[i + 1..].reverse();
    true
}

/// An ordered list of value swaps `(u, v)` with `u, v ∈ V(Y)` — the `Σ` that
/// transforms one bijection into another when every swap is friendly.
/// Legality is context-dependent and checked by the engine, not here.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct SwapSequence(pub Vec<(usize, usize)>);

impl SwapSequence {
    pub fn new() -> Self {
        SwapSequence(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.0.iter().copied()
    }

    /// `rev(Σ)`: the same swaps in reverse order. Since each swap is its own
    /// inverse, applying `Σ` then `rev(Σ)` restores the starting bijection.
    pub fn reversed(&self) -> SwapSequence {
        let mut pairs = self.0.clone();
        pairs.reverse();
        SwapSequence(pairs)
    }
}

impl FromIterator<(usize, usize)> for SwapSequence {
    fn from_iter<T: IntoIterator<Item = (usize, usize)>>(iter: T) -> Self {
        SwapSequence(iter.into_iter().collect())
    }
}
