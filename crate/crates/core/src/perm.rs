//! Permutations on `0..n` in one-line notation.

use alloc::vec::Vec;

use crate::cycle_type::CycleType;
use crate::rng::SplitMix64;

/// A permutation stored as its image vector: `p[i]` is where point i goes.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Perm {
    map: Vec<u32>,
}

impl Perm {
    /// Builds from an image vector; debug-checks bijectivity.
    pub fn new(map: Vec<u32>) -> Self {
        debug_assert!({
            let mut seen = alloc::vec![false; map.len()];
            map.iter().all(|&i| {
                let ok = (i as usize) < seen.len() && !seen[i as usize];
                if ok {
                    seen[i as usize] = true;
                }
                ok
            })
        });
        Perm { map }
    }

    pub fn identity(n: usize) -> Self {
        Perm {
            map: (0..n as u32).collect(),
        }
    }

    /// Builds from disjoint cycles over `0..n`.
    pub fn from_cycles(n: usize, cycles: &[&[u32]]) -> Self {
        let mut map: Vec<u32> = (0..n as u32).collect();
        for cycle in cycles {
            for (i, &point) in cycle.iter().enumerate() {
                map[point as usize] = cycle[(i + 1) % cycle.len()];
            }
        }
        Perm::new(map)
    }

    pub fn degree(&self) -> usize {
        self.map.len()
    }

    pub fn apply(&self, point: usize) -> usize {
        self.map[point] as usize
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Perm) -> Perm {
        debug_assert_eq!(self.degree(), other.degree());
        Perm {
            map: other.map.iter().map(|&i| self.map[i as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Perm {
        let mut map = alloc::vec![0u32; self.map.len()];
        for (i, &j) in self.map.iter().enumerate() {
            map[j as usize] = i as u32;
        }
        Perm { map }
    }

    pub fn cycle_type(&self) -> CycleType {
        let n = self.map.len();
        let mut seen = alloc::vec![false; n];
        let mut parts = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0u32;
            let mut cur = start;
            while !seen[cur] {
                seen[cur] = true;
                len += 1;
                cur = self.map[cur] as usize;
            }
            parts.push(len);
        }
        CycleType::new(parts).expect("cycle lengths are positive")
    }

    /// Sign of the permutation: +1 for even, −1 for odd.
    pub fn sign(&self) -> i8 {
        let transpositions: u32 = self
            .cycle_type()
            .parts()
            .iter()
            .map(|&len| len - 1)
            .sum();
        if transpositions.is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// Uniform random permutation by Fisher–Yates.
    pub fn random(n: usize, rng: &mut SplitMix64) -> Perm {
        let mut map: Vec<u32> = (0..n as u32).collect();
        for i in (1..n).rev() {
            let j = rng.next_below(i as u64 + 1) as usize;
            map.swap(i, j);
        }
        Perm { map }
    }

    /// The `index`-th permutation of `0..n` in Lehmer-code (factorial number
    /// system) order; `index` must be below n!.
    pub fn by_index(n: usize, mut index: u64) -> Perm {
        let mut digits = alloc::vec![0u64; n];
        for i in 1..=n as u64 {
            digits[n - i as usize] = index % i;
            index /= i;
        }
        let mut pool: Vec<u32> = (0..n as u32).collect();
        let map = digits
            .iter()
            .map(|&d| pool.remove(d as usize))
            .collect();
        Perm { map }
    }

    pub fn one_line(&self) -> &[u32] {
        &self.map
    }
}

/// n! as u64; callers keep n small enough not to overflow.
pub fn factorial(n: usize) -> u64 {
    (1..=n as u64).product()
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::collections::BTreeSet;
    use alloc::vec;

    #[test]
    fn compose_then_invert() {
        let p = Perm::new(vec![0, 2, 1, 4, 3]);
        assert_eq!(p.compose(&p.inverse()), Perm::identity(5));
    }

    #[test]
    fn cycle_type_of_product_of_cycles() {
        let p = Perm::from_cycles(6, &[&[0, 1, 2], &[3, 4]]);
        assert_eq!(p.cycle_type(), CycleType::new(vec![3, 2, 1]).unwrap());
    }

    #[test]
    fn sign_matches_parity() {
        assert_eq!(Perm::from_cycles(4, &[&[0, 1]]).sign(), -1);
        assert_eq!(Perm::from_cycles(4, &[&[0, 1, 2]]).sign(), 1);
        assert_eq!(Perm::identity(4).sign(), 1);
    }

    #[test]
    fn by_index_enumerates_all() {
        let all: BTreeSet<Perm> = (0..factorial(4)).map(|i| Perm::by_index(4, i)).collect();
        assert_eq!(all.len(), 24);
    }

    #[test]
    fn by_index_zero_is_identity() {
        assert_eq!(Perm::by_index(5, 0), Perm::identity(5));
    }

    #[test]
    fn random_is_bijection() {
        let mut rng = SplitMix64::new(3);
        for _ in 0..50 {
            let p = Perm::random(8, &mut rng);
            let mut seen = [false; 8];
            for i in 0..8 {
                seen[p.apply(i)] = true;
            }
            assert!(seen.iter().all(|&b| b));
        }
    }
}
