//! Exact reference distributions of cycle types.
//!
//! Tables hold probabilities as exact big-integer rationals; floating point
//! appears only inside [`tv_distance`]. Three table sources: the closed-form
//! symmetric-group class probabilities, exhaustive or sampled iterated
//! wreath powers, and breadth-first closures of generated permutation
//! groups.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::BigUint;
use num_rational::Ratio;
use num_traits::{One, ToPrimitive, Zero};

use crate::cycle_type::CycleType;
use crate::perm::{factorial, Perm};
use crate::rng::SplitMix64;
use crate::{Error, Result};

/// Exact probabilities over big rationals.
pub type Rational = Ratio<BigUint>;

/// How a table was produced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Provenance {
    ExactFormula,
    ExhaustiveEnumeration,
    Sampled { n_samples: u64, seed: u64 },
}

impl core::fmt::Display for Provenance {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            Provenance::ExactFormula => write!(f, "exact-formula"),
            Provenance::ExhaustiveEnumeration => write!(f, "exhaustive-enumeration"),
            Provenance::Sampled { n_samples, seed } => {
                write!(f, "sampled(n={n_samples},seed={seed})")
            }
        }
    }
}

/// A cycle-type distribution on partitions of `degree`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistTable {
    pub degree: u32,
    pub entries: BTreeMap<CycleType, Rational>,
    pub provenance: Provenance,
}

impl DistTable {
    /// Probability of a type (zero when absent).
    pub fn prob(&self, t: &CycleType) -> Rational {
        self.entries.get(t).cloned().unwrap_or_else(Rational::zero)
    }

    /// Exact sum of all probabilities.
    pub fn total(&self) -> Rational {
        self.entries.values().fold(Rational::zero(), |a, b| a + b)
    }

    /// CSV with a provenance header comment: `type,num,den,prob_float`.
    pub fn to_csv(&self) -> String {
        let mut out = alloc::format!(
            "# degree={} provenance={}\ntype,num,den,prob_float\n",
            self.degree,
            self.provenance
        );
        for (t, p) in &self.entries {
            let float = p.to_f64().unwrap_or(f64::NAN);
            out += &alloc::format!("{t},{},{},{}\n", p.numer(), p.denom(), float);
        }
        out
    }
}

/// All partitions of n in descending-lex order of their part vectors.
pub fn partitions(n: u32) -> Vec<CycleType> {
    fn rec(remaining: u32, max_part: u32, current: &mut Vec<u32>, out: &mut Vec<CycleType>) {
        if remaining == 0 {
            out.push(CycleType::new(current.clone()).expect("positive parts"));
            return;
        }
        let top = core::cmp::min(remaining, max_part);
        for part in (1..=top).rev() {
            current.push(part);
            rec(remaining - part, part, current, out);
            current.pop();
        }
    }
    let mut out = Vec::new();
    if n == 0 {
        out.push(CycleType::empty());
    } else {
        rec(n, n, &mut Vec::new(), &mut out);
    }
    out
}

/// Exact class distribution of the symmetric group S_N: the probability of
/// cycle type λ with part multiplicities m_i is `1 / Π_i (i^(m_i) · m_i!)`.
pub fn sn_class_distribution(n: u32) -> Result<DistTable> {
    if n == 0 || n > 64 {
        return Err(Error::unsupported(alloc::format!(
            "symmetric-group table degree {n} outside 1..=64"
        )));
    }
    let mut entries = BTreeMap::new();
    for t in partitions(n) {
        let mut centralizer = BigUint::one();
        for (part, mult) in t.multiplicities() {
            centralizer *= BigUint::from(part).pow(mult);
            for k in 1..=mult as u64 {
                centralizer *= BigUint::from(k);
            }
        }
        entries.insert(t, Rational::new(BigUint::one(), centralizer));
    }
    Ok(DistTable {
        degree: n,
        entries,
        provenance: Provenance::ExactFormula,
    })
}

/// An iterated wreath power `[S_d]^k` acting on the d^k leaves of the
/// depth-k d-ary tree: the base `[S_d]^(k−1)` permutes blocks and a fresh
/// `S_d` acts in each fiber.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WreathSpec {
    pub d: u32,
    pub k: u32,
}

impl WreathSpec {
    pub fn new(d: u32, k: u32) -> Result<Self> {
        if d < 2 || k < 1 {
            return Err(Error::invalid(alloc::format!(
                "wreath power needs d >= 2 and k >= 1, got ({d}, {k})"
            )));
        }
        Ok(WreathSpec { d, k })
    }

    /// d^k, the number of leaves (capped at 2^20).
    pub fn leaf_count(&self) -> Result<u64> {
        let mut n: u64 = 1;
        for _ in 0..self.k {
            n = n
                .checked_mul(self.d as u64)
                .filter(|&v| v <= 1 << 20)
                .ok_or_else(|| {
                    Error::unsupported(alloc::format!(
                        "d^k = {}^{} exceeds the 2^20 leaf cap",
                        self.d,
                        self.k
                    ))
                })?;
        }
        Ok(n)
    }

    /// Group order |[S_d]^k| = Π_{i<k} (d!)^(d^i), bounded by `cap`.
    pub fn order(&self, cap: u64) -> Result<u64> {
        let fact = factorial(self.d as usize);
        let mut order: u64 = 1;
        let mut fibers: u64 = 1;
        for _ in 0..self.k {
            for _ in 0..fibers {
                order = order
                    .checked_mul(fact)
                    .filter(|&v| v <= cap)
                    .ok_or_else(|| {
                        Error::unsupported(alloc::format!(
                            "wreath order for ({}, {}) exceeds cap {cap}",
                            self.d,
                            self.k
                        ))
                    })?;
            }
            fibers *= self.d as u64;
        }
        Ok(order)
    }
}

/// Samples the cycle type of a uniform element of `[S_d]^k`.
///
/// Recursion on the tower: sample the base type from `[S_d]^(k−1)`, then for
/// each base cycle of length ℓ compose ℓ independent uniform fiber
/// permutations; each cycle of length c in the composite yields a leaf cycle
/// of length ℓ·c.
pub fn wreath_sample(spec: WreathSpec, rng: &mut SplitMix64) -> Result<CycleType> {
    spec.leaf_count()?;
    Ok(wreath_sample_inner(spec.d as usize, spec.k, rng))
}

fn wreath_sample_inner(d: usize, k: u32, rng: &mut SplitMix64) -> CycleType {
    if k == 1 {
        return Perm::random(d, rng).cycle_type();
    }
    let base = wreath_sample_inner(d, k - 1, rng);
    let mut parts = Vec::new();
    for &len in base.parts() {
        let mut composite = Perm::identity(d);
        for _ in 0..len {
            composite = Perm::random(d, rng).compose(&composite);
        }
        for &c in composite.cycle_type().parts() {
            parts.push(len * c);
        }
    }
    CycleType::new(parts).expect("positive parts")
}

/// Materializes the `index`-th element of `[S_d]^k` as a permutation of the
/// d^k leaves, using mixed-radix indexing of (base element, fiber tuple).
///
/// Leaf `(block, pos)` maps to `(base(block), τ_block(pos))` — fibers are
/// attached to source blocks.
pub fn wreath_element_by_index(spec: WreathSpec, index: u64) -> Result<Perm> {
    spec.leaf_count()?;
    Ok(element_by_index_inner(spec.d as usize, spec.k, index))
}

fn element_by_index_inner(d: usize, k: u32, index: u64) -> Perm {
    if k == 1 {
        return Perm::by_index(d, index);
    }
    // |[S_d]^(k−1)|; callers checked the total order fits u64.
    let base_order: u64 = {
        let fact = factorial(d);
        let mut order: u64 = 1;
        let mut fibers: u64 = 1;
        for _ in 0..k - 1 {
            for _ in 0..fibers {
                order *= fact;
            }
            fibers *= d as u64;
        }
        order
    };
    let fact = factorial(d);
    let base = element_by_index_inner(d, k - 1, index % base_order);
    let mut rest = index / base_order;
    let blocks = base.degree();
    let mut leaf_map = alloc::vec![0u32; blocks * d];
    for block in 0..blocks {
        let fiber = Perm::by_index(d, rest % fact);
        rest /= fact;
        for pos in 0..d {
            leaf_map[block * d + pos] = (base.apply(block) * d + fiber.apply(pos)) as u32;
        }
    }
    Perm::new(leaf_map)
}

/// Mode for [`wreath_distribution`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WreathMode {
    /// Enumerate every element; requires the group order within the cap.
    Exhaustive,
    /// Aggregate `n_samples` draws seeded from `seed`.
    Sampled { n_samples: u64, seed: u64 },
}

/// Cap on the group order accepted by exhaustive wreath enumeration.
pub const WREATH_EXHAUSTIVE_CAP: u64 = 10_000_000;

/// Cycle-type distribution of `[S_d]^k`, exact (exhaustive) or empirical.
pub fn wreath_distribution(spec: WreathSpec, mode: WreathMode) -> Result<DistTable> {
    let leaves = spec.leaf_count()?;
    match mode {
        WreathMode::Exhaustive => {
            let order = spec.order(WREATH_EXHAUSTIVE_CAP)?;
            let mut counts: BTreeMap<CycleType, u64> = BTreeMap::new();
            for index in 0..order {
                let t = element_by_index_inner(spec.d as usize, spec.k, index).cycle_type();
                *counts.entry(t).or_insert(0) += 1;
            }
            let entries = counts
                .into_iter()
                .map(|(t, c)| (t, Rational::new(BigUint::from(c), BigUint::from(order))))
                .collect();
            Ok(DistTable {
                degree: leaves as u32,
                entries,
                provenance: Provenance::ExhaustiveEnumeration,
            })
        }
        WreathMode::Sampled { n_samples, seed } => {
            if n_samples == 0 {
                return Err(Error::invalid(String::from("sampled mode needs n >= 1")));
            }
            let mut rng = SplitMix64::new(seed);
            let mut counts: BTreeMap<CycleType, u64> = BTreeMap::new();
            for _ in 0..n_samples {
                *counts.entry(wreath_sample(spec, &mut rng)?).or_insert(0) += 1;
            }
            let entries = counts
                .into_iter()
                .map(|(t, c)| (t, Rational::new(BigUint::from(c), BigUint::from(n_samples))))
                .collect();
            Ok(DistTable {
                degree: leaves as u32,
                entries,
                provenance: Provenance::Sampled { n_samples, seed },
            })
        }
    }
}

/// Probability that a uniform element of `[S_d]^k` is a single d^k-cycle on
/// the leaves: the recursion P(k) = P(k−1)/d with P(1) = 1/d gives 1/d^k.
///
/// Equals the asymptotic density of irreducible k-th iterates; the tests
/// pin it against exhaustive enumeration for (2,2), (2,3), (3,2).
pub fn full_cycle_probability(spec: WreathSpec) -> Result<Rational> {
    let leaves = spec.leaf_count()?;
    Ok(Rational::new(BigUint::one(), BigUint::from(leaves)))
}

/// Cap on the closure size accepted by [`group_closure_distribution`].
pub const CLOSURE_CAP: usize = 1_000_000;

/// Breadth-first closure of a generated permutation group.
pub fn group_closure(generators: &[Perm], cap: usize) -> Result<Vec<Perm>> {
    let n = generators
        .first()
        .map(Perm::degree)
        .ok_or_else(|| Error::invalid(String::from("need at least one generator")))?;
    if generators.iter().any(|g| g.degree() != n) {
        return Err(Error::invalid(String::from("generators have mixed degrees")));
    }
    let mut seen: BTreeSet<Perm> = BTreeSet::new();
    let mut queue: alloc::collections::VecDeque<Perm> = alloc::collections::VecDeque::new();
    let id = Perm::identity(n);
    seen.insert(id.clone());
    queue.push_back(id);
    while let Some(current) = queue.pop_front() {
        for g in generators {
            let next = g.compose(&current);
            if seen.insert(next.clone()) {
                if seen.len() > cap {
                    return Err(Error::ClosureTooLarge { cap });
                }
                queue.push_back(next);
            }
        }
    }
    Ok(seen.into_iter().collect())
}

/// Exact cycle-type distribution over the closure of `generators`.
pub fn group_closure_distribution(generators: &[Perm]) -> Result<DistTable> {
    let elements = group_closure(generators, CLOSURE_CAP)?;
    let order = elements.len() as u64;
    let degree = elements[0].degree() as u32;
    let mut counts: BTreeMap<CycleType, u64> = BTreeMap::new();
    for e in &elements {
        *counts.entry(e.cycle_type()).or_insert(0) += 1;
    }
    let entries = counts
        .into_iter()
        .map(|(t, c)| (t, Rational::new(BigUint::from(c), BigUint::from(order))))
        .collect();
    Ok(DistTable {
        degree,
        entries,
        provenance: Provenance::ExhaustiveEnumeration,
    })
}

/// Generators for the action of GL₃(F₂) on the seven nonzero vectors of
/// F₂³ (point i ↔ vector i+1 in binary): a transvection and the cyclic
/// coordinate shift. The closure has order 168.
pub fn psl32_generators() -> [Perm; 2] {
    let transvection = [[1, 1, 0], [0, 1, 0], [0, 0, 1]];
    let shift = [[0, 0, 1], [1, 0, 0], [0, 1, 0]];
    [matrix_perm(&transvection), matrix_perm(&shift)]
}

/// The permutation a 3×3 matrix over F₂ induces on the nonzero vectors.
pub fn matrix_perm(m: &[[u8; 3]; 3]) -> Perm {
    let mut map = Vec::with_capacity(7);
    for v in 1u32..8 {
        let bits = [v & 1, (v >> 1) & 1, (v >> 2) & 1];
        let mut w = 0u32;
        for (i, row) in m.iter().enumerate() {
            let mut bit = 0u32;
            for (j, &mij) in row.iter().enumerate() {
                bit ^= (mij as u32) & bits[j];
            }
            w |= bit << i;
        }
        map.push(w - 1);
    }
    Perm::new(map)
}

/// Reference table for the PSL(3,2) ≅ GL₃(F₂) action on 7 points.
pub fn psl32_distribution() -> Result<DistTable> {
    group_closure_distribution(&psl32_generators())
}

/// Total variation distance between two exact tables of equal degree.
pub fn tv_distance(a: &DistTable, b: &DistTable) -> Result<f64> {
    if a.degree != b.degree {
        return Err(Error::DegreeMismatch(a.degree, b.degree));
    }
    let keys: BTreeSet<&CycleType> = a.entries.keys().chain(b.entries.keys()).collect();
    let mut sum = 0.0f64;
    for t in keys {
        let pa = a.prob(t).to_f64().unwrap_or(0.0);
        let pb = b.prob(t).to_f64().unwrap_or(0.0);
        sum += (pa - pb).abs();
    }
    Ok(sum / 2.0)
}

/// Total variation between empirical counts (normalized by `total`) and an
/// exact table.
pub fn tv_counts_vs_table(
    counts: &BTreeMap<CycleType, u64>,
    total: u64,
    table: &DistTable,
) -> Result<f64> {
    if total == 0 {
        // An empty histogram is maximally far from any distribution.
        return Ok(1.0);
    }
    let degree = counts.keys().next().map(|t| t.total()).unwrap_or(table.degree);
    if degree != table.degree {
        return Err(Error::DegreeMismatch(degree, table.degree));
    }
    let keys: BTreeSet<&CycleType> = counts.keys().chain(table.entries.keys()).collect();
    let mut sum = 0.0f64;
    for t in keys {
        let pa = counts.get(t).copied().unwrap_or(0) as f64 / total as f64;
        let pb = table.prob(t).to_f64().unwrap_or(0.0);
        sum += (pa - pb).abs();
    }
    Ok(sum / 2.0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn s3_table_exact() {
        let t = sn_class_distribution(3).unwrap();
        let third = Rational::new(BigUint::from(1u32), BigUint::from(3u32));
        let half = Rational::new(BigUint::from(1u32), BigUint::from(2u32));
        let sixth = Rational::new(BigUint::from(1u32), BigUint::from(6u32));
        assert_eq!(t.prob(&CycleType::single(3)), third);
        assert_eq!(t.prob(&CycleType::new(vec![2, 1]).unwrap()), half);
        assert_eq!(t.prob(&CycleType::new(vec![1, 1, 1]).unwrap()), sixth);
    }

    #[test]
    fn s4_four_cycles() {
        let t = sn_class_distribution(4).unwrap();
        let quarter = Rational::new(BigUint::from(1u32), BigUint::from(4u32));
        assert_eq!(t.prob(&CycleType::single(4)), quarter);
    }

    #[test]
    fn tables_sum_to_one() {
        for n in 1..=12 {
            let t = sn_class_distribution(n).unwrap();
            assert!(t.total().is_one(), "S_{n} table does not sum to 1");
        }
    }

    #[test]
    fn partition_counts() {
        // p(n) for n = 1..10.
        let expect = [1, 2, 3, 5, 7, 11, 15, 22, 30, 42];
        for (n, &e) in (1..=10).zip(&expect) {
            assert_eq!(partitions(n).len(), e, "p({n})");
        }
    }

    #[test]
    fn wreath_2_2_exhaustive_table() {
        let spec = WreathSpec::new(2, 2).unwrap();
        let t = wreath_distribution(spec, WreathMode::Exhaustive).unwrap();
        let r = |n: u32, d: u32| Rational::new(BigUint::from(n), BigUint::from(d));
        assert_eq!(t.prob(&CycleType::single(4)), r(2, 8));
        assert_eq!(t.prob(&CycleType::new(vec![2, 2]).unwrap()), r(3, 8));
        assert_eq!(t.prob(&CycleType::new(vec![2, 1, 1]).unwrap()), r(2, 8));
        assert_eq!(t.prob(&CycleType::new(vec![1, 1, 1, 1]).unwrap()), r(1, 8));
        assert!(t.total().is_one());
    }

    #[test]
    fn wreath_height_one_equals_symmetric_group() {
        for d in 2..=4 {
            let spec = WreathSpec::new(d, 1).unwrap();
            let w = wreath_distribution(spec, WreathMode::Exhaustive).unwrap();
            let s = sn_class_distribution(d).unwrap();
            assert_eq!(w.entries, s.entries);
        }
    }

    #[test]
    fn full_cycle_probability_formula() {
        let r = |n: u32, d: u32| Rational::new(BigUint::from(n), BigUint::from(d));
        assert_eq!(
            full_cycle_probability(WreathSpec::new(2, 2).unwrap()).unwrap(),
            r(1, 4)
        );
        assert_eq!(
            full_cycle_probability(WreathSpec::new(5, 1).unwrap()).unwrap(),
            r(1, 5)
        );
        assert_eq!(
            full_cycle_probability(WreathSpec::new(2, 3).unwrap()).unwrap(),
            r(1, 8)
        );
    }

    #[test]
    fn sampled_types_are_partitions_of_leaves() {
        let spec = WreathSpec::new(3, 2).unwrap();
        let mut rng = SplitMix64::new(11);
        for _ in 0..200 {
            let t = wreath_sample(spec, &mut rng).unwrap();
            assert_eq!(t.total(), 9);
        }
    }

    #[test]
    fn closure_of_s3_generators() {
        let gens = [
            Perm::from_cycles(3, &[&[0, 1]]),
            Perm::from_cycles(3, &[&[0, 1, 2]]),
        ];
        let dist = group_closure_distribution(&gens).unwrap();
        let sn = sn_class_distribution(3).unwrap();
        assert_eq!(dist.entries, sn.entries);
    }

    #[test]
    fn closure_of_identity_only() {
        let dist = group_closure_distribution(&[Perm::identity(5)]).unwrap();
        assert_eq!(dist.entries.len(), 1);
        assert!(dist
            .prob(&CycleType::new(vec![1, 1, 1, 1, 1]).unwrap())
            .is_one());
    }

    #[test]
    fn psl32_closure_size_and_types() {
        let elements = group_closure(&psl32_generators(), CLOSURE_CAP).unwrap();
        assert_eq!(elements.len(), 168);
        let dist = psl32_distribution().unwrap();
        let r = |n: u32| Rational::new(BigUint::from(n), BigUint::from(168u32));
        assert_eq!(dist.prob(&CycleType::single(7)), r(48));
        assert_eq!(dist.prob(&CycleType::new(vec![4, 2, 1]).unwrap()), r(42));
        assert_eq!(dist.prob(&CycleType::new(vec![3, 3, 1]).unwrap()), r(56));
        assert_eq!(
            dist.prob(&CycleType::new(vec![2, 2, 1, 1, 1]).unwrap()),
            r(21)
        );
        assert_eq!(
            dist.prob(&CycleType::new(vec![1, 1, 1, 1, 1, 1, 1]).unwrap()),
            r(1)
        );
    }

    #[test]
    fn tv_examples() {
        let s3 = sn_class_distribution(3).unwrap();
        assert_eq!(tv_distance(&s3, &s3).unwrap(), 0.0);

        // Uniform over the three S_3 types: TV = 1/6.
        let third = Rational::new(BigUint::from(1u32), BigUint::from(3u32));
        let uniform = DistTable {
            degree: 3,
            entries: s3
                .entries
                .keys()
                .cloned()
                .map(|t| (t, third.clone()))
                .collect(),
            provenance: Provenance::ExactFormula,
        };
        let tv = tv_distance(&s3, &uniform).unwrap();
        assert!((tv - 1.0 / 6.0).abs() < 1e-12);

        // Disjoint supports at the same degree: TV = 1.
        let only2 = DistTable {
            degree: 2,
            entries: [(CycleType::single(2), Rational::one())].into_iter().collect(),
            provenance: Provenance::ExactFormula,
        };
        let only11 = DistTable {
            degree: 2,
            entries: [(CycleType::new(vec![1, 1]).unwrap(), Rational::one())]
                .into_iter()
                .collect(),
            provenance: Provenance::ExactFormula,
        };
        assert_eq!(tv_distance(&only2, &only11).unwrap(), 1.0);
        assert_eq!(tv_distance(&only2, &s3), Err(Error::DegreeMismatch(2, 3)));
    }
}
