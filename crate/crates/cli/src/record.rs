//! JSON-lines records. Each output line is one [`Record`].

use serde::{Deserialize, Serialize};

use charmorph::category::{Certificate, IrreducibilityVerdict};
use charmorph::checks::CheckReport;
use charmorph::{Matrix, Scalar, Subspace};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ViolationRecord {
    pub kind: String,
    pub witness: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum Record {
    Check {
        check: String,
        verdict: String,
        equations: usize,
        violations: Vec<ViolationRecord>,
        #[serde(default, skip_serializing_if = "Vec::is_empty")]
        notes: Vec<String>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        elapsed_ms: Option<f64>,
    },
    Classification {
        generated_dimension: usize,
        irreducibility: String,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        certificate: Option<String>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        witness: Option<Vec<Vec<String>>>,
    },
    SearchResult {
        index: usize,
        alphas: Vec<Vec<Vec<String>>>,
        is_hom: bool,
        is_characteristic: bool,
        irreducibility: String,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        witness: Option<Vec<Vec<String>>>,
        signature: String,
    },
    SearchSummary {
        field: String,
        d: usize,
        dim: usize,
        mode: String,
        examined: u64,
        characteristic: u64,
        distinct: usize,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        elapsed_ms: Option<f64>,
    },
    LemmaCounterexample {
        a: u64,
        b: u64,
        c: u64,
        d: u64,
        degenerate: bool,
    },
    LemmaSummary {
        n: u64,
        field: String,
        counterexamples: usize,
        degenerate: usize,
    },
}

pub(crate) fn vectors(rows: &[Vec<Scalar>]) -> Vec<Vec<String>> {
    rows.iter()
        .map(|r| r.iter().map(Scalar::to_compact_string).collect())
        .collect()
}

pub(crate) fn matrix_rows(m: &Matrix) -> Vec<Vec<String>> {
    m.rows()
        .map(|r| r.iter().map(Scalar::to_compact_string).collect())
        .collect()
}

pub(crate) fn witness_rows(w: Option<&Subspace>) -> Option<Vec<Vec<String>>> {
    w.map(|s| vectors(s.basis()))
}

pub(crate) fn certificate(v: &IrreducibilityVerdict) -> Option<String> {
    match v {
        IrreducibilityVerdict::Irreducible(Certificate::GeneratedDimension(n)) => {
            Some(format!("generated_dimension {n}"))
        }
        IrreducibilityVerdict::Irreducible(Certificate::ExhaustiveSpinUp) => {
            Some("exhaustive_spin_up".into())
        }
        _ => None,
    }
}

impl Record {
    pub(crate) fn from_report(report: &CheckReport, timings: bool) -> Record {
        Record::Check {
            check: report.check.short().to_string(),
            verdict: if report.passed() { "pass" } else { "fail" }.to_string(),
            equations: report.stats.equations,
            violations: report
                .violations()
                .iter()
                .map(|v| ViolationRecord {
                    kind: v.kind.to_string(),
                    witness: v.witness.to_string(),
                })
                .collect(),
            notes: report.stats.notes.clone(),
            elapsed_ms: timings.then_some(report.stats.elapsed.as_secs_f64() * 1e3),
        }
    }
}
