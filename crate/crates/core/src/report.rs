//! Serialized forms of [`VerificationReport`].
//!
//! JSON carries every exact integer as a decimal string. Right-hand terms
//! always carry an explicit sign (`"+56"`, `"-7"`). Key order is fixed by
//! the struct field order, so parse-then-serialize is byte-identical.

use num_bigint::{BigInt, Sign};
use serde::{Deserialize, Serialize};

use crate::identity::{CaseResult, VerificationReport};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ReportDocument {
    pub family: String,
    pub n_max: u64,
    pub k_max: u64,
    pub checked: u64,
    pub failed: u64,
    pub elapsed_ms: u64,
    pub cases: Vec<CaseDocument>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CaseDocument {
    pub n: u64,
    pub k: u64,
    pub lhs_terms: Vec<String>,
    pub lhs_total: String,
    pub rhs_terms: Vec<String>,
    pub rhs_total: String,
    pub equal: bool,
}

fn with_sign(v: &BigInt) -> String {
    match v.sign() {
        Sign::Minus => v.to_string(),
        _ => format!("+{v}"),
    }
}

impl From<&CaseResult> for CaseDocument {
    fn from(r: &CaseResult) -> Self {
        CaseDocument {
            n: r.case.n,
            k: r.case.k,
            lhs_terms: r.lhs.terms().iter().map(ToString::to_string).collect(),
            lhs_total: r.lhs.total().to_string(),
            rhs_terms: r.rhs.terms().iter().map(with_sign).collect(),
            rhs_total: r.rhs.total().to_string(),
            equal: r.equal,
        }
    }
}

impl From<&VerificationReport> for ReportDocument {
    fn from(r: &VerificationReport) -> Self {
        ReportDocument {
            family: r.family.name().to_string(),
            n_max: r.n_max,
            k_max: r.k_max,
            checked: r.checked as u64,
            failed: r.failed as u64,
            elapsed_ms: r.elapsed_ms,
            cases: r.cases.iter().map(CaseDocument::from).collect(),
        }
    }
}

fn pretty<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report documents always serialize");
    s.push('\n');
    s
}

/// One report as a JSON object.
pub fn report_json(report: &VerificationReport) -> String {
    pretty(&ReportDocument::from(report))
}

/// Several reports as a JSON array of report objects.
pub fn reports_json(reports: &[VerificationReport]) -> String {
    let docs: Vec<ReportDocument> = reports.iter().map(ReportDocument::from).collect();
    pretty(&docs)
}

/// Re-serializes a document produced by [`report_json`] or [`reports_json`].
pub fn canonicalize(json: &str) -> serde_json::Result<String> {
    let trimmed = json.trim_start();
    if trimmed.starts_with('[') {
        let docs: Vec<ReportDocument> = serde_json::from_str(json)?;
        Ok(pretty(&docs))
    } else {
        let doc: ReportDocument = serde_json::from_str(json)?;
        Ok(pretty(&doc))
    }
}

/// `1+2+6+16+45 = 90-21+1 = 70`, or both sides with their totals when they differ.
pub fn case_line(r: &CaseResult) -> String {
    if r.equal {
        format!("{} = {} = {}", r.lhs.expression(), r.rhs.expression(), r.lhs.total())
    } else {
        format!(
            "{} = {} != {} = {}",
            r.lhs.expression(),
            r.lhs.total(),
            r.rhs.expression(),
            r.rhs.total()
        )
    }
}

pub fn report_text(report: &VerificationReport) -> String {
    let mut out = String::new();
    for r in &report.cases {
        let status = if r.equal { "ok" } else { "FAIL" };
        out.push_str(&format!(
            "{} n={} k={}: {}  {}\n",
            report.family,
            r.case.n,
            r.case.k,
            case_line(r),
            status
        ));
    }
    out.push_str(&format!(
        "{}: checked {}, failed {} ({} ms)\n",
        report.family, report.checked, report.failed, report.elapsed_ms
    ));
    out
}
