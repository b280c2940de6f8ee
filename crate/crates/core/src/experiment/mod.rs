//! Sweep orchestration: plans, accumulators, and report assembly.
//!
//! A plan names a family, an operation, a sweep mode, and a seed. Sweeps are
//! data-parallel over disjoint index ranges: [`Prepared::sweep_range`]
//! produces a [`SweepAccum`] for any sub-range, partial accumulators merge
//! commutatively, and [`Prepared::assemble`] turns the merged result into a
//! report. Reports are therefore byte-identical for a fixed plan regardless
//! of how the index space was chunked.

mod report;

pub use report::{
    certify_symmetric, emit_report, BoundEcho, CertReport, CertVerdict, DensityEcho,
    ExperimentReport, FamilyEcho, Histogram, HistogramRow, IndependenceSummary, JointRow,
    MorseSummary, PlanEcho, ReferenceEcho, ReferenceRow, ReportFormat, TvEcho,
};

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;

use num_traits::ToPrimitive;

use crate::cycle_type::CycleType;
use crate::family::{self, FamilySpec, SpecTuple};
use crate::field::{FieldDescriptor, FieldElem};
use crate::group::{
    self, full_cycle_probability, psl32_distribution, sn_class_distribution,
    wreath_distribution, DistTable, WreathMode, WreathSpec, WREATH_EXHAUSTIVE_CAP,
};
use crate::poly::{self, FactorOutcome, MorseDiagnostic};
use crate::rng::{stream_seed, SplitMix64};
use crate::{Error, Result};

/// Default cap on exhaustive sweep sizes.
pub const DEFAULT_SWEEP_CAP: u64 = 10_000_000;

/// Sample count used when an oversized exhaustive sweep auto-downgrades.
pub const DEFAULT_AUTO_SAMPLES: u64 = 1_000_000;

/// Stream tag for sampled wreath reference tables.
const WREATH_REF_STREAM: u64 = 0x5752_4541;

/// Where the family comes from.
#[derive(Debug, Clone, PartialEq, Eq)]
#[allow(clippy::large_enum_variant)]
pub enum FamilySource {
    /// A registry fixture resolved over the given field.
    Fixture { key: String, field: FieldDescriptor },
    Inline(FamilySpec),
}

/// How the coefficient space is traversed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SweepMode {
    /// Exhaustive when it fits the cap, otherwise sampled with
    /// [`DEFAULT_AUTO_SAMPLES`] draws (recorded as a notice).
    Auto,
    /// Full Cartesian product in field-enumeration order; errors above cap.
    Exhaustive,
    /// Seeded uniform draws, one independent stream per draw index.
    Sampled { n_samples: u64 },
}

/// Reference-distribution requests for the report.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReferenceRequest {
    /// Exact S_degree class distribution.
    SymmetricGroup,
    /// `[S_r]^k` table for the family's composed degree and iterate depth.
    Wreath(WreathRefMode),
    /// The PSL(3,2) action on 7 points.
    Psl32,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WreathRefMode {
    /// Exhaustive when the group order fits the cap, else sampled 10^6.
    Auto,
    Exhaustive,
    Sampled { n_samples: u64 },
}

/// The operation a plan performs.
#[derive(Debug, Clone, PartialEq, Eq)]
#[allow(clippy::large_enum_variant)]
pub enum PlanOp {
    /// Count irreducible specializations and check the density bound.
    CountIrreducible,
    /// Factorization-type histogram with reference comparisons.
    TypeHistogram,
    /// Histogram of iterates (k ≥ 2) against the wreath-power reference.
    IterateHistogram,
    /// Joint factorization types at two values of one coefficient.
    Independence {
        /// Exponent index (must lie in the template support).
        index: u32,
        c: FieldElem,
        c_prime: FieldElem,
    },
    /// Type histogram plus symmetric-group certification.
    Certify,
    /// Fraction of specializations that are Morse.
    MorseSweep,
}

impl PlanOp {
    fn name(&self) -> &'static str {
        match self {
            PlanOp::CountIrreducible => "count-irr",
            PlanOp::TypeHistogram => "hist",
            PlanOp::IterateHistogram => "iterate-hist",
            PlanOp::Independence { .. } => "independence",
            PlanOp::Certify => "certify",
            PlanOp::MorseSweep => "morse-sweep",
        }
    }
}

/// Optional thresholds; absent fields fall back to built-in defaults.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Tolerances {
    /// C in the density bound `|N − T/den| ≤ C·T/√q`; defaults to the
    /// composed degree r.
    pub bound_constant: Option<u64>,
    /// When set, the first TV entry is compared against this by callers.
    pub tv_max: Option<f64>,
}

/// A full experiment description. Equal plans produce byte-identical
/// reports.
#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentPlan {
    pub family: FamilySource,
    pub iterate_k: u32,
    pub mode: SweepMode,
    pub seed: u64,
    pub op: PlanOp,
    pub comparisons: Vec<ReferenceRequest>,
    pub tolerances: Tolerances,
    pub sweep_cap: u64,
    pub degree_cap: u64,
}

impl ExperimentPlan {
    /// A plan with defaults: k = 1, auto mode, seed 0, default comparisons.
    pub fn new(family: FamilySource, op: PlanOp) -> Self {
        ExperimentPlan {
            family,
            iterate_k: 1,
            mode: SweepMode::Auto,
            seed: 0,
            op,
            comparisons: Vec::new(),
            tolerances: Tolerances::default(),
            sweep_cap: DEFAULT_SWEEP_CAP,
            degree_cap: family::DEFAULT_DEGREE_CAP,
        }
    }
}

/// Partial sweep state over a range of tuple indices. Merging is
/// commutative and associative, so chunked and serial sweeps agree.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SweepAccum {
    pub total: u64,
    pub ramified: u64,
    pub irreducible: u64,
    pub counts: BTreeMap<CycleType, u64>,
    /// Smallest sweep index that produced each type.
    pub witness_index: BTreeMap<CycleType, u64>,
    pub morse_passed: u64,
    pub morse_char_small: u64,
    pub joint: BTreeMap<(CycleType, CycleType), u64>,
    pub pair_excluded: u64,
}

impl SweepAccum {
    pub fn merge(mut self, other: SweepAccum) -> SweepAccum {
        self.total += other.total;
        self.ramified += other.ramified;
        self.irreducible += other.irreducible;
        for (t, c) in other.counts {
            *self.counts.entry(t).or_insert(0) += c;
        }
        for (t, i) in other.witness_index {
            self.witness_index
                .entry(t)
                .and_modify(|cur| *cur = (*cur).min(i))
                .or_insert(i);
        }
        self.morse_passed += other.morse_passed;
        self.morse_char_small += other.morse_char_small;
        for (k, c) in other.joint {
            *self.joint.entry(k).or_insert(0) += c;
        }
        self.pair_excluded += other.pair_excluded;
        self
    }
}

/// A validated plan bound to its resolved family, ready to sweep.
#[derive(Debug)]
pub struct Prepared {
    plan: ExperimentPlan,
    family: FamilySpec,
    field: FieldDescriptor,
    /// Positions in the support vector that the sweep varies.
    free_positions: Vec<usize>,
    /// For independence: (support position, c, c′).
    fixed: Option<(usize, FieldElem, FieldElem)>,
    /// Total sweep points and whether they are exhaustive indices or draws.
    exhaustive: bool,
    total_points: u64,
    notice: Option<String>,
    /// Swept polynomial degree r^k.
    swept_degree: u32,
}

/// Validates a plan and resolves its family.
pub fn prepare(plan: &ExperimentPlan) -> Result<Prepared> {
    let family = match &plan.family {
        FamilySource::Fixture { key, field } => family::fixture(key, field)?,
        FamilySource::Inline(spec) => spec.clone(),
    };
    let field = family.field().clone();

    if plan.iterate_k == 0 {
        return Err(Error::invalid(String::from("iterate_k must be >= 1")));
    }
    let mut swept_degree: u64 = 1;
    for _ in 0..plan.iterate_k {
        swept_degree = swept_degree.saturating_mul(family.r() as u64);
    }
    if swept_degree > plan.degree_cap {
        return Err(Error::DegreeCapExceeded {
            degree: swept_degree,
            cap: plan.degree_cap,
        });
    }
    if matches!(plan.op, PlanOp::IterateHistogram) && plan.iterate_k < 2 {
        return Err(Error::invalid(String::from(
            "iterate-hist needs iterate_k >= 2; use hist for k = 1",
        )));
    }
    if matches!(plan.op, PlanOp::Certify) && swept_degree < 2 {
        return Err(Error::DegreeTooSmall(swept_degree as u32));
    }
    if matches!(plan.op, PlanOp::MorseSweep) && swept_degree < 2 {
        return Err(Error::DegreeTooSmall(swept_degree as u32));
    }

    let support = family.phi().support.clone();
    let (free_positions, fixed) = match &plan.op {
        PlanOp::Independence { index, c, c_prime } => {
            let position = support
                .iter()
                .position(|&e| e == *index)
                .ok_or(Error::IndexNotInSupport(*index))?;
            for value in [c, c_prime] {
                if value.coords().len() != field.nu() as usize {
                    return Err(Error::FieldMismatch);
                }
            }
            let free: Vec<usize> = (0..support.len()).filter(|&p| p != position).collect();
            (free, Some((position, c.clone(), c_prime.clone())))
        }
        _ => ((0..support.len()).collect(), None),
    };

    let space: u128 = (field.q() as u128).pow(free_positions.len() as u32);
    let (exhaustive, total_points, notice) = match plan.mode {
        SweepMode::Exhaustive => {
            if space > plan.sweep_cap as u128 {
                return Err(Error::SweepCapExceeded {
                    size: space,
                    cap: plan.sweep_cap,
                });
            }
            (true, space as u64, None)
        }
        SweepMode::Sampled { n_samples } => {
            if n_samples == 0 {
                return Err(Error::invalid(String::from("sampled mode needs n >= 1")));
            }
            (false, n_samples, None)
        }
        SweepMode::Auto => {
            if space <= plan.sweep_cap as u128 {
                (true, space as u64, None)
            } else {
                (
                    false,
                    DEFAULT_AUTO_SAMPLES,
                    Some(alloc::format!(
                        "tuple space {space} exceeds cap {}; sampling {DEFAULT_AUTO_SAMPLES} draws",
                        plan.sweep_cap
                    )),
                )
            }
        }
    };

    Ok(Prepared {
        plan: plan.clone(),
        family,
        field,
        free_positions,
        fixed,
        exhaustive,
        total_points,
        notice,
        swept_degree: swept_degree as u32,
    })
}

impl Prepared {
    /// Number of sweep points (tuples or draws).
    pub fn total_points(&self) -> u64 {
        self.total_points
    }

    pub fn family(&self) -> &FamilySpec {
        &self.family
    }

    /// The free-coordinate assignment at a sweep index: exhaustive sweeps
    /// decode base-q digits (first coordinate fastest), sampled sweeps draw
    /// from the index's own stream.
    fn free_values_at(&self, index: u64) -> Vec<FieldElem> {
        if self.exhaustive {
            let q = self.field.q();
            let mut rest = index;
            self.free_positions
                .iter()
                .map(|_| {
                    let digit = rest % q;
                    rest /= q;
                    self.field.elem_by_index(digit)
                })
                .collect()
        } else {
            let mut rng = SplitMix64::new(stream_seed(self.plan.seed, index));
            self.free_positions
                .iter()
                .map(|_| self.field.sample(&mut rng))
                .collect()
        }
    }

    /// Reconstructs the full coefficient tuple at a sweep index (for ops
    /// with no fixed coordinate).
    fn tuple_at(&self, index: u64) -> SpecTuple {
        SpecTuple::new(self.free_values_at(index))
    }

    /// For independence: the two tuples with the fixed coordinate set to c
    /// and c′.
    fn pair_at(&self, index: u64) -> (SpecTuple, SpecTuple) {
        let (position, c, c_prime) = self.fixed.as_ref().expect("independence op");
        let free = self.free_values_at(index);
        let build = |value: &FieldElem| {
            let mut values = Vec::with_capacity(free.len() + 1);
            let mut free_iter = free.iter();
            for p in 0..free.len() + 1 {
                if p == *position {
                    values.push(value.clone());
                } else {
                    values.push(free_iter.next().expect("arity").clone());
                }
            }
            SpecTuple::new(values)
        };
        (build(c), build(c_prime))
    }

    fn specialized(&self, tuple: &SpecTuple) -> Result<crate::poly::Poly> {
        if self.plan.iterate_k == 1 {
            family::specialize(&self.family, tuple)
        } else {
            family::iterate_specialize(
                &self.family,
                tuple,
                self.plan.iterate_k,
                self.plan.degree_cap,
            )
        }
    }

    /// Sweeps indices `start..end` into a fresh accumulator.
    pub fn sweep_range(&self, start: u64, end: u64) -> Result<SweepAccum> {
        let mut accum = SweepAccum::default();
        for index in start..end.min(self.total_points) {
            self.process(index, &mut accum)?;
        }
        Ok(accum)
    }

    fn process(&self, index: u64, accum: &mut SweepAccum) -> Result<()> {
        accum.total += 1;
        match &self.plan.op {
            PlanOp::CountIrreducible => {
                let p = self.specialized(&self.tuple_at(index))?;
                if poly::is_irreducible(&p)? {
                    accum.irreducible += 1;
                }
            }
            PlanOp::TypeHistogram | PlanOp::IterateHistogram | PlanOp::Certify => {
                let p = self.specialized(&self.tuple_at(index))?;
                match poly::factor_type(&p)? {
                    FactorOutcome::Squarefree(t) => {
                        if t.is_full_cycle() {
                            accum.irreducible += 1;
                        }
                        witness_min(&mut accum.witness_index, t.clone(), index);
                        *accum.counts.entry(t).or_insert(0) += 1;
                    }
                    FactorOutcome::Ramified(_) => accum.ramified += 1,
                }
            }
            PlanOp::Independence { .. } => {
                let (ta, tb) = self.pair_at(index);
                let pa = family::specialize(&self.family, &ta)?;
                let pb = family::specialize(&self.family, &tb)?;
                let outcome_a = classify(&pa)?;
                let outcome_b = classify(&pb)?;
                match (outcome_a, outcome_b) {
                    (Some(a), Some(b)) => {
                        *accum.joint.entry((a, b)).or_insert(0) += 1;
                    }
                    _ => accum.pair_excluded += 1,
                }
            }
            PlanOp::MorseSweep => {
                let p = self.specialized(&self.tuple_at(index))?;
                let verdict = poly::is_morse(&p)?;
                if verdict.degenerate_detail == Some(MorseDiagnostic::CharacteristicTooSmall) {
                    accum.morse_char_small += 1;
                } else if verdict.is_morse {
                    accum.morse_passed += 1;
                }
            }
        }
        Ok(())
    }

    /// Turns a merged accumulator into the final report. `elapsed_ms` stays
    /// out of the canonical byte image unless the caller provides it.
    pub fn assemble(
        &self,
        accum: SweepAccum,
        elapsed_ms: Option<u64>,
    ) -> Result<ExperimentReport> {
        let field = self.field.clone();
        let r = self.swept_degree;
        let k = self.plan.iterate_k;

        let histogram_total = accum.total - accum.ramified;
        let histogram_rows: Vec<HistogramRow> = accum
            .counts
            .iter()
            .map(|(t, &c)| HistogramRow {
                cycle_type: alloc::format!("{t}"),
                count: c,
                prob: if histogram_total > 0 {
                    c as f64 / histogram_total as f64
                } else {
                    0.0
                },
            })
            .collect();

        // Density and bound for counting-flavored ops.
        let (n_irreducible, expected_density, bound) = match self.plan.op {
            PlanOp::CountIrreducible
            | PlanOp::TypeHistogram
            | PlanOp::IterateHistogram
            | PlanOp::Certify => {
                let n = accum.irreducible;
                let den = (self.family.r() as u64).pow(k);
                let constant = self.plan.tolerances.bound_constant.unwrap_or(r as u64);
                let pass = density_bound_holds(n, accum.total, den, field.q(), constant);
                (
                    Some(n),
                    Some(DensityEcho {
                        num: 1,
                        den,
                        float: 1.0 / den as f64,
                    }),
                    Some(BoundEcho { constant, pass }),
                )
            }
            _ => (None, None, None),
        };

        // Reference tables and TV distances.
        let comparisons = self.effective_comparisons();
        let mut references = Vec::new();
        let mut tv = Vec::new();
        for request in &comparisons {
            let (name, table) = self.reference_table(request)?;
            let distance =
                group::tv_counts_vs_table(&accum.counts, histogram_total, &table)?;
            tv.push(TvEcho {
                reference: name.clone(),
                tv: distance,
            });
            references.push(report::reference_echo(name, &table));
        }

        // Witness tuples resolved back from their sweep indices.
        let witnesses: BTreeMap<CycleType, Vec<Vec<u64>>> = accum
            .witness_index
            .iter()
            .map(|(t, &i)| {
                let tuple = self.tuple_at(i);
                (
                    t.clone(),
                    tuple
                        .values
                        .iter()
                        .map(|e| e.coords().to_vec())
                        .collect(),
                )
            })
            .collect();

        let histogram_struct = Histogram {
            degree: r,
            counts: accum.counts.clone(),
            ramified: accum.ramified,
            total: accum.total,
            witnesses,
        };

        let certification = match self.plan.op {
            PlanOp::Certify => Some(certify_symmetric(&histogram_struct)?),
            _ => None,
        };

        let morse = match self.plan.op {
            PlanOp::MorseSweep => {
                let evaluated = accum.total - accum.morse_char_small;
                Some(MorseSummary {
                    evaluated,
                    passed: accum.morse_passed,
                    characteristic_too_small: accum.morse_char_small,
                    fraction: if evaluated > 0 {
                        Some(accum.morse_passed as f64 / evaluated as f64)
                    } else {
                        None
                    },
                })
            }
            _ => None,
        };

        let independence = match &self.plan.op {
            PlanOp::Independence { index, c, c_prime } => {
                let both: u64 = accum.joint.values().sum();
                let distance = joint_vs_product_tv(&accum.joint, both);
                tv.push(TvEcho {
                    reference: String::from("product-of-marginals"),
                    tv: distance,
                });
                Some(IndependenceSummary {
                    index: *index,
                    c: c.coords().to_vec(),
                    c_prime: c_prime.coords().to_vec(),
                    both_squarefree: both,
                    excluded: accum.pair_excluded,
                    joint: accum
                        .joint
                        .iter()
                        .map(|((a, b), &count)| JointRow {
                            type_a: alloc::format!("{a}"),
                            type_b: alloc::format!("{b}"),
                            count,
                        })
                        .collect(),
                    tv_joint_vs_product: distance,
                })
            }
            _ => None,
        };

        Ok(ExperimentReport {
            plan: self.plan_echo(&comparisons),
            field,
            family: self.family_echo()?,
            iterate_k: k,
            total: accum.total,
            ramified: accum.ramified,
            n_irreducible,
            expected_density,
            bound,
            histogram: histogram_rows,
            references,
            tv,
            certification,
            morse,
            independence,
            seed: self.plan.seed,
            elapsed_ms,
        })
    }

    fn effective_comparisons(&self) -> Vec<ReferenceRequest> {
        if !self.plan.comparisons.is_empty() {
            return self.plan.comparisons.clone();
        }
        match self.plan.op {
            PlanOp::TypeHistogram | PlanOp::Certify => {
                alloc::vec![ReferenceRequest::SymmetricGroup]
            }
            PlanOp::IterateHistogram => {
                alloc::vec![ReferenceRequest::Wreath(WreathRefMode::Auto)]
            }
            _ => Vec::new(),
        }
    }

    fn reference_table(&self, request: &ReferenceRequest) -> Result<(String, DistTable)> {
        match request {
            ReferenceRequest::SymmetricGroup => {
                let table = sn_class_distribution(self.swept_degree)?;
                Ok((alloc::format!("s{}", self.swept_degree), table))
            }
            ReferenceRequest::Psl32 => Ok((String::from("psl32"), psl32_distribution()?)),
            ReferenceRequest::Wreath(mode) => {
                let spec = WreathSpec::new(self.family.r(), self.plan.iterate_k)?;
                let resolved = match mode {
                    WreathRefMode::Exhaustive => WreathMode::Exhaustive,
                    WreathRefMode::Sampled { n_samples } => WreathMode::Sampled {
                        n_samples: *n_samples,
                        seed: stream_seed(self.plan.seed, WREATH_REF_STREAM),
                    },
                    WreathRefMode::Auto => {
                        if spec.order(WREATH_EXHAUSTIVE_CAP).is_ok() {
                            WreathMode::Exhaustive
                        } else {
                            WreathMode::Sampled {
                                n_samples: 1_000_000,
                                seed: stream_seed(self.plan.seed, WREATH_REF_STREAM),
                            }
                        }
                    }
                };
                let table = wreath_distribution(spec, resolved)?;
                Ok((
                    alloc::format!("wreath-{}-{}", spec.d, spec.k),
                    table,
                ))
            }
        }
    }

    fn plan_echo(&self, comparisons: &[ReferenceRequest]) -> PlanEcho {
        let family_name = match &self.plan.family {
            FamilySource::Fixture { key, .. } => key.clone(),
            FamilySource::Inline(_) => String::from("inline"),
        };
        let mode = if self.exhaustive {
            String::from("exhaustive")
        } else {
            alloc::format!("sampled(n={})", self.total_points)
        };
        let comparison_names = comparisons
            .iter()
            .map(|c| match c {
                ReferenceRequest::SymmetricGroup => alloc::format!("s{}", self.swept_degree),
                ReferenceRequest::Psl32 => String::from("psl32"),
                ReferenceRequest::Wreath(_) => {
                    alloc::format!("wreath-{}-{}", self.family.r(), self.plan.iterate_k)
                }
            })
            .collect();
        PlanEcho {
            op: String::from(self.plan.op.name()),
            family: family_name,
            mode,
            comparisons: comparison_names,
            bound_constant: self.plan.tolerances.bound_constant,
            tv_max: self.plan.tolerances.tv_max,
            notice: self.notice.clone(),
        }
    }

    fn family_echo(&self) -> Result<FamilyEcho> {
        let f = self.family.f();
        Ok(FamilyEcho {
            fixture: self.family.fixture().map(String::from),
            n: f.n(),
            coeffs_x: f
                .coeffs_x()
                .iter()
                .map(|p| p.coeffs().iter().map(|e| e.coords().to_vec()).collect())
                .collect(),
            phi_d: self.family.phi().d,
            phi_support: self.family.phi().support.clone(),
            r: self.family.r(),
            params: self.family.params() as u32,
            validation: family::validate_family(&self.family)?,
        })
    }
}

fn witness_min(map: &mut BTreeMap<CycleType, u64>, t: CycleType, index: u64) {
    map.entry(t)
        .and_modify(|cur| *cur = (*cur).min(index))
        .or_insert(index);
}

/// Squarefree type, or `None` for ramified (used by the independence op).
fn classify(p: &crate::poly::Poly) -> Result<Option<CycleType>> {
    Ok(match poly::factor_type(p)? {
        FactorOutcome::Squarefree(t) => Some(t),
        FactorOutcome::Ramified(_) => None,
    })
}

/// Exact integer form of `|N − T/den| ≤ C·T/√q`:
/// `(N·den − T)² · q ≤ (C·T·den)²`.
fn density_bound_holds(n: u64, total: u64, den: u64, q: u64, constant: u64) -> bool {
    let lhs_base = (n as i128) * (den as i128) - total as i128;
    let lhs = (lhs_base * lhs_base) as u128 * q as u128;
    let rhs_base = constant as u128 * total as u128 * den as u128;
    // rhs_base ≤ 2^12 · 2^24 · 2^12-ish at desk scale; squaring stays in u128.
    let rhs = rhs_base * rhs_base;
    lhs <= rhs
}

/// TV between an empirical joint distribution and the product of its own
/// marginals.
fn joint_vs_product_tv(joint: &BTreeMap<(CycleType, CycleType), u64>, total: u64) -> f64 {
    if total == 0 {
        return 0.0;
    }
    let mut marg_a: BTreeMap<&CycleType, u64> = BTreeMap::new();
    let mut marg_b: BTreeMap<&CycleType, u64> = BTreeMap::new();
    for ((a, b), &c) in joint {
        *marg_a.entry(a).or_insert(0) += c;
        *marg_b.entry(b).or_insert(0) += c;
    }
    let n = total as f64;
    let mut sum = 0.0;
    for (a, &ca) in &marg_a {
        for (b, &cb) in &marg_b {
            let j = joint
                .get(&((*a).clone(), (*b).clone()))
                .copied()
                .unwrap_or(0) as f64
                / n;
            let p = (ca as f64 / n) * (cb as f64 / n);
            sum += (j - p).abs();
        }
    }
    sum / 2.0
}

/// Runs a plan start to finish on the calling thread.
pub fn run_plan(plan: &ExperimentPlan) -> Result<ExperimentReport> {
    let prepared = prepare(plan)?;
    let accum = prepared.sweep_range(0, prepared.total_points())?;
    prepared.assemble(accum, None)
}

/// Convenience wrappers naming the operation explicitly.
pub fn count_irreducible(plan: &ExperimentPlan) -> Result<ExperimentReport> {
    run_as(plan, PlanOp::CountIrreducible)
}

pub fn type_histogram(plan: &ExperimentPlan) -> Result<ExperimentReport> {
    run_as(plan, PlanOp::TypeHistogram)
}

pub fn iterate_histogram(plan: &ExperimentPlan) -> Result<ExperimentReport> {
    run_as(plan, PlanOp::IterateHistogram)
}

pub fn morse_sweep(plan: &ExperimentPlan) -> Result<ExperimentReport> {
    run_as(plan, PlanOp::MorseSweep)
}

fn run_as(plan: &ExperimentPlan, op: PlanOp) -> Result<ExperimentReport> {
    let mut plan = plan.clone();
    plan.op = op;
    run_plan(&plan)
}

/// Fraction helper used by tests and the CLI: irreducible share of a report.
pub fn irreducible_fraction(report: &ExperimentReport) -> Option<f64> {
    report
        .n_irreducible
        .map(|n| n as f64 / report.total as f64)
}

/// Expected irreducible density of the report's family/iterate as f64.
pub fn expected_density_f64(report: &ExperimentReport) -> Option<f64> {
    report.expected_density.as_ref().map(|d| d.float)
}

/// Exact full-cycle reference for an iterate plan, as f64.
pub fn full_cycle_reference(r: u32, k: u32) -> Result<f64> {
    let p = full_cycle_probability(WreathSpec::new(r, k)?)?;
    Ok(p.to_f64().unwrap_or(f64::NAN))
}
