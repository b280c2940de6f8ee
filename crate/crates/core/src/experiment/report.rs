//! Report types, symmetric-group certification, and emission.
//!
//! Reports serialize to JSON with a fixed key order (struct-field order
//! below) and LF line endings, so identical plans produce byte-identical
//! files regardless of worker count. Measured wall time is kept out of the
//! canonical form unless a caller explicitly injects it.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;

use num_traits::ToPrimitive;
use serde::Serialize;

use crate::cycle_type::CycleType;
use crate::field::FieldDescriptor;
use crate::group::DistTable;
use crate::{Error, Result};

/// Empirical factorization-type histogram over the unramified part of a
/// sweep.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Histogram {
    /// Degree of the swept polynomials (a partition total).
    pub degree: u32,
    /// Counts per type over squarefree specializations.
    pub counts: BTreeMap<CycleType, u64>,
    /// Non-squarefree specializations, excluded from the counts.
    pub ramified: u64,
    /// Everything swept: Σ counts + ramified.
    pub total: u64,
    /// One witness coefficient tuple per observed type (coordinates of each
    /// tuple entry, low-to-high).
    pub witnesses: BTreeMap<CycleType, Vec<Vec<u64>>>,
}

impl Histogram {
    /// Number of squarefree specializations (the histogram's denominator).
    pub fn squarefree_total(&self) -> u64 {
        self.total - self.ramified
    }
}

/// Certification verdict for "the family's group is the full symmetric
/// group", from factorization-type evidence alone.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum CertVerdict {
    CertifiedSymmetric,
    TransitiveOnly,
    Inconclusive,
}

/// Evidence behind a certification verdict.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CertReport {
    pub observed_r_cycle: bool,
    pub observed_r_minus_1_cycle: bool,
    pub observed_transposition_type: bool,
    pub verdict: CertVerdict,
    /// Witness tuples for the three probe types, keyed by type string.
    pub witnesses: BTreeMap<String, Vec<Vec<u64>>>,
}

/// Sound symmetric-group certification from a histogram.
///
/// A squarefree specialization's type is the cycle type of an actual group
/// element, and an irreducible specialization forces transitivity. The rule:
/// an r-cycle gives transitivity, an (r−1)-cycle then gives 2-transitivity
/// (hence primitivity), and a transposition type `[2,1^(r−2)]` inside a
/// primitive group forces the full symmetric group. All three observed ⇒
/// CERTIFIED_SYMMETRIC; only the r-cycle ⇒ TRANSITIVE_ONLY; anything less ⇒
/// INCONCLUSIVE. Absence of evidence never certifies.
pub fn certify_symmetric(h: &Histogram) -> Result<CertReport> {
    let r = h.degree;
    if r < 2 {
        return Err(Error::DegreeTooSmall(r));
    }
    let r_cycle = CycleType::single(r);
    let r_minus_1 = CycleType::new(alloc::vec![r - 1, 1]).expect("positive parts");
    let mut transposition_parts = alloc::vec![2u32];
    transposition_parts.extend(core::iter::repeat_n(1, r as usize - 2));
    let transposition = CycleType::new(transposition_parts).expect("positive parts");

    let observed_r_cycle = h.counts.contains_key(&r_cycle);
    let observed_r_minus_1_cycle = h.counts.contains_key(&r_minus_1);
    let observed_transposition_type = h.counts.contains_key(&transposition);

    let verdict = if observed_r_cycle && observed_r_minus_1_cycle && observed_transposition_type
    {
        CertVerdict::CertifiedSymmetric
    } else if observed_r_cycle {
        CertVerdict::TransitiveOnly
    } else {
        CertVerdict::Inconclusive
    };

    let mut witnesses = BTreeMap::new();
    for t in [&r_cycle, &r_minus_1, &transposition] {
        if let Some(w) = h.witnesses.get(t) {
            witnesses.insert(alloc::format!("{t}"), w.clone());
        }
    }
    Ok(CertReport {
        observed_r_cycle,
        observed_r_minus_1_cycle,
        observed_transposition_type,
        verdict,
        witnesses,
    })
}

/// Plan echo embedded in every report.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PlanEcho {
    pub op: String,
    pub family: String,
    pub mode: String,
    pub comparisons: Vec<String>,
    pub bound_constant: Option<u64>,
    pub tv_max: Option<f64>,
    /// Set when the plan was downgraded (e.g. auto-sampling an oversized
    /// exhaustive sweep).
    pub notice: Option<String>,
}

/// Family echo: enough to reproduce the family without the fixture registry.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FamilyEcho {
    pub fixture: Option<String>,
    pub n: u32,
    /// t-polynomial coefficients of each power of x; innermost vectors are
    /// field-element coordinates.
    pub coeffs_x: Vec<Vec<Vec<u64>>>,
    pub phi_d: u32,
    pub phi_support: Vec<u32>,
    pub r: u32,
    pub params: u32,
    /// Hypothesis check: never silently treated as valid — an inconclusive
    /// irreducibility certificate stays visible here.
    pub validation: crate::family::ValidationReport,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DensityEcho {
    pub num: u64,
    pub den: u64,
    pub float: f64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundEcho {
    /// The constant C in `|N − T/den| ≤ C·T/√q`. The asymptotic estimate
    /// does not pin it down, so the value used is recorded here.
    pub constant: u64,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct HistogramRow {
    #[serde(rename = "type")]
    pub cycle_type: String,
    pub count: u64,
    /// Count over squarefree total.
    pub prob: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ReferenceRow {
    #[serde(rename = "type")]
    pub cycle_type: String,
    pub num: String,
    pub den: String,
    pub prob: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ReferenceEcho {
    pub name: String,
    pub provenance: String,
    pub table: Vec<ReferenceRow>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TvEcho {
    pub reference: String,
    pub tv: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MorseSummary {
    pub evaluated: u64,
    pub passed: u64,
    pub characteristic_too_small: u64,
    /// passed / evaluated, absent when nothing was meaningfully evaluated.
    pub fraction: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct JointRow {
    pub type_a: String,
    pub type_b: String,
    pub count: u64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct IndependenceSummary {
    pub index: u32,
    pub c: Vec<u64>,
    pub c_prime: Vec<u64>,
    /// Pairs where both specializations were squarefree.
    pub both_squarefree: u64,
    /// Pairs excluded because either side was ramified.
    pub excluded: u64,
    pub joint: Vec<JointRow>,
    pub tv_joint_vs_product: f64,
}

/// Full experiment outcome. Field order here is the canonical JSON key
/// order.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ExperimentReport {
    pub plan: PlanEcho,
    pub field: FieldDescriptor,
    pub family: FamilyEcho,
    pub iterate_k: u32,
    pub total: u64,
    pub ramified: u64,
    pub n_irreducible: Option<u64>,
    pub expected_density: Option<DensityEcho>,
    pub bound: Option<BoundEcho>,
    pub histogram: Vec<HistogramRow>,
    pub references: Vec<ReferenceEcho>,
    pub tv: Vec<TvEcho>,
    pub certification: Option<CertReport>,
    pub morse: Option<MorseSummary>,
    pub independence: Option<IndependenceSummary>,
    pub seed: u64,
    pub elapsed_ms: Option<u64>,
}

/// Output format for [`emit_report`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFormat {
    Json,
    Csv,
}

/// Serializes a report: canonical pretty JSON (LF, trailing newline) or the
/// histogram as CSV with a provenance comment.
pub fn emit_report(report: &ExperimentReport, format: ReportFormat) -> Result<String> {
    match format {
        ReportFormat::Json => {
            let mut s = serde_json::to_string_pretty(report)
                .map_err(|e| Error::invalid(alloc::format!("serialization failed: {e}")))?;
            s.push('\n');
            Ok(s)
        }
        ReportFormat::Csv => {
            let mut out = alloc::format!(
                "# op={} family={} total={} ramified={} seed={}\n",
                report.plan.op,
                report.plan.family,
                report.total,
                report.ramified,
                report.seed
            );
            out += "type,count,prob\n";
            for row in &report.histogram {
                out += &alloc::format!("{},{},{}\n", row.cycle_type, row.count, row.prob);
            }
            Ok(out)
        }
    }
}

pub(crate) fn reference_echo(name: String, table: &DistTable) -> ReferenceEcho {
    ReferenceEcho {
        name,
        provenance: alloc::format!("{}", table.provenance),
        table: table
            .entries
            .iter()
            .map(|(t, p)| ReferenceRow {
                cycle_type: alloc::format!("{t}"),
                num: alloc::format!("{}", p.numer()),
                den: alloc::format!("{}", p.denom()),
                prob: p.to_f64().unwrap_or(f64::NAN),
            })
            .collect(),
    }
}
