//! Rendering: reports, distribution tables, and factorizations in json,
//! csv, and human table form.

use cyclotype_core::experiment::{emit_report, ExperimentReport, ReportFormat};
use cyclotype_core::field::FieldDescriptor;
use cyclotype_core::group::DistTable;
use cyclotype_core::poly::{Factorization, Poly};
use cyclotype_core::Error;

use serde::Serialize;

pub fn render_report(report: &ExperimentReport, format: &str) -> Result<String, Error> {
    match format {
        "json" => emit_report(report, ReportFormat::Json),
        "csv" => emit_report(report, ReportFormat::Csv),
        "table" => Ok(report_table(report)),
        other => Err(Error::InvalidInput(format!("unknown format {other:?}"))),
    }
}

fn report_table(report: &ExperimentReport) -> String {
    let mut out = String::new();
    out += &format!(
        "op: {}   family: {}   mode: {}   seed: {}\n",
        report.plan.op, report.plan.family, report.plan.mode, report.seed
    );
    out += &format!(
        "field: F_{} (p={}, nu={})   k: {}\n",
        field_q(&report.field),
        report.field.p(),
        report.field.nu(),
        report.iterate_k
    );
    out += &format!(
        "total: {}   ramified: {}\n",
        report.total, report.ramified
    );
    if let (Some(n), Some(d)) = (&report.n_irreducible, &report.expected_density) {
        out += &format!(
            "irreducible: {n} ({:.6} of total; expected density {}/{} = {:.6})\n",
            *n as f64 / report.total as f64,
            d.num,
            d.den,
            d.float
        );
    }
    if let Some(b) = &report.bound {
        out += &format!(
            "density bound (C = {}): {}\n",
            b.constant,
            if b.pass { "pass" } else { "FAIL" }
        );
    }
    if !report.histogram.is_empty() {
        out += "\ntype                count      prob\n";
        for row in &report.histogram {
            out += &format!("{:<18} {:>8}  {:.6}\n", row.cycle_type, row.count, row.prob);
        }
    }
    for tv in &report.tv {
        out += &format!("tv vs {}: {:.6}\n", tv.reference, tv.tv);
    }
    if let Some(cert) = &report.certification {
        out += &format!(
            "certification: {:?} (r-cycle {}, (r-1)-cycle {}, transposition {})\n",
            cert.verdict,
            cert.observed_r_cycle,
            cert.observed_r_minus_1_cycle,
            cert.observed_transposition_type
        );
    }
    if let Some(m) = &report.morse {
        out += &format!(
            "morse: {}/{} passed ({}), characteristic-too-small {}\n",
            m.passed,
            m.evaluated,
            m.fraction
                .map(|f| format!("{f:.4}"))
                .unwrap_or_else(|| "n/a".into()),
            m.characteristic_too_small
        );
    }
    if let Some(ind) = &report.independence {
        out += &format!(
            "independence: TV(joint, product) = {:.6} over {} pairs ({} excluded)\n",
            ind.tv_joint_vs_product, ind.both_squarefree, ind.excluded
        );
    }
    if let Some(ms) = report.elapsed_ms {
        out += &format!("elapsed: {ms} ms\n");
    }
    out
}

fn field_q(field: &FieldDescriptor) -> String {
    if field.nu() == 1 {
        format!("{}", field.p())
    } else {
        format!("{}^{}", field.p(), field.nu())
    }
}

pub fn render_dist_table(table: &DistTable, format: &str) -> Result<String, Error> {
    match format {
        "csv" => Ok(table.to_csv()),
        "json" => {
            #[derive(Serialize)]
            struct Row {
                #[serde(rename = "type")]
                cycle_type: String,
                num: String,
                den: String,
                prob: f64,
            }
            #[derive(Serialize)]
            struct Out {
                degree: u32,
                provenance: String,
                entries: Vec<Row>,
            }
            use num_traits_to_f64::RatioExt;
            let out = Out {
                degree: table.degree,
                provenance: format!("{}", table.provenance),
                entries: table
                    .entries
                    .iter()
                    .map(|(t, p)| Row {
                        cycle_type: format!("{t}"),
                        num: format!("{}", p.numer()),
                        den: format!("{}", p.denom()),
                        prob: p.to_f64_lossy(),
                    })
                    .collect(),
            };
            let mut s = serde_json::to_string_pretty(&out)
                .map_err(|e| Error::InvalidInput(format!("serialization failed: {e}")))?;
            s.push('\n');
            Ok(s)
        }
        "table" => {
            let mut out = format!(
                "[S_d]^k distribution, degree {} ({})\n",
                table.degree, table.provenance
            );
            out += "type          prob\n";
            use num_traits_to_f64::RatioExt;
            for (t, p) in &table.entries {
                out += &format!(
                    "{:<12} {}/{} = {:.6}\n",
                    format!("{t}"),
                    p.numer(),
                    p.denom(),
                    p.to_f64_lossy()
                );
            }
            Ok(out)
        }
        other => Err(Error::InvalidInput(format!("unknown format {other:?}"))),
    }
}

/// Small shim so table rendering can turn exact rationals into floats
/// without dragging num-traits into every caller.
mod num_traits_to_f64 {
    use cyclotype_core::group::Rational;

    pub trait RatioExt {
        fn to_f64_lossy(&self) -> f64;
    }

    impl RatioExt for Rational {
        fn to_f64_lossy(&self) -> f64 {
            let n: f64 = format!("{}", self.numer()).parse().unwrap_or(f64::NAN);
            let d: f64 = format!("{}", self.denom()).parse().unwrap_or(f64::NAN);
            n / d
        }
    }
}

pub fn render_factorization(
    field: &FieldDescriptor,
    input: &Poly,
    factorization: &Factorization,
    format: &str,
) -> Result<String, Error> {
    #[derive(Serialize)]
    struct FactorRow {
        coeffs: Vec<Vec<u64>>,
        multiplicity: u32,
        degree: usize,
    }
    #[derive(Serialize)]
    struct Out {
        field: FieldDescriptor,
        input: Vec<Vec<u64>>,
        unit: Vec<u64>,
        factors: Vec<FactorRow>,
    }
    let rows: Vec<FactorRow> = factorization
        .factors
        .iter()
        .map(|(p, m)| FactorRow {
            coeffs: p.coeffs().iter().map(|c| c.coords().to_vec()).collect(),
            multiplicity: *m,
            degree: p.degree().unwrap_or(0),
        })
        .collect();
    match format {
        "json" => {
            let out = Out {
                field: field.clone(),
                input: input.coeffs().iter().map(|c| c.coords().to_vec()).collect(),
                unit: factorization.unit.coords().to_vec(),
                factors: rows,
            };
            let mut s = serde_json::to_string_pretty(&out)
                .map_err(|e| Error::InvalidInput(format!("serialization failed: {e}")))?;
            s.push('\n');
            Ok(s)
        }
        "csv" => {
            let mut out = String::from("degree,multiplicity,coeffs\n");
            for row in rows {
                let coeffs = row
                    .coeffs
                    .iter()
                    .map(|c| {
                        if c.len() == 1 {
                            format!("{}", c[0])
                        } else {
                            format!(
                                "[{}]",
                                c.iter()
                                    .map(|v| v.to_string())
                                    .collect::<Vec<_>>()
                                    .join(" ")
                            )
                        }
                    })
                    .collect::<Vec<_>>()
                    .join(";");
                out += &format!("{},{},{}\n", row.degree, row.multiplicity, coeffs);
            }
            Ok(out)
        }
        "table" => {
            let mut out = format!(
                "factorization over F_{} ({} factors)\n",
                field_q(field),
                rows.len()
            );
            for row in rows {
                out += &format!(
                    "  degree {} multiplicity {}: {:?}\n",
                    row.degree, row.multiplicity, row.coeffs
                );
            }
            Ok(out)
        }
        other => Err(Error::InvalidInput(format!("unknown format {other:?}"))),
    }
}
