//! The machine report: one JSON document per suite run.

use std::collections::BTreeMap;
use std::time::{Duration, SystemTime, UNIX_EPOCH};

use serde::{Deserialize, Serialize};

use indres::homspace::IsoCertificate;
use indres::linalg::{Field, Matrix};
use indres::theorems::{CheckReport, HypothesisStatus, Verdict};

pub const TOOL: &str = "indres";
pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Summary {
    pub total: usize,
    pub pass: usize,
    pub dim_mismatch: usize,
    pub no_certificate: usize,
    pub skipped_hypothesis: usize,
    pub not_applicable: usize,
    /// Checks with a satisfied hypothesis and no certificate.
    pub failures: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Hypothesis {
    /// `satisfied`, `violated` or `not_applicable`.
    pub status: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
}

/// Matrices are lists of rows; a row is its scalar literals separated by single spaces.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Certificate {
    pub field: String,
    pub intertwiner: Vec<String>,
    pub inverse: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CheckEntry {
    pub name: String,
    pub inputs: String,
    pub hypothesis: Hypothesis,
    pub lhs_dim: usize,
    pub rhs_dim: usize,
    /// `pass`, `dim_mismatch`, `no_certificate`, `skipped_hypothesis` or `not_applicable`.
    pub verdict: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub trials: Option<usize>,
    pub seed: u64,
    pub notes: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub certificate: Option<Certificate>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SuiteReport {
    pub tool: String,
    pub version: String,
    pub seed: u64,
    pub max_trials: usize,
    /// Seconds since the Unix epoch; the one field outside the determinism contract.
    pub timestamp: u64,
    pub summary: Summary,
    pub checks: Vec<CheckEntry>,
}

fn matrix_rows(m: &Matrix) -> Vec<String> {
    (0..m.rows())
        .map(|r| {
            m.row(r)
                .iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(" ")
        })
        .collect()
}

fn parse_rows(field: Field, rows: &[String]) -> Result<Matrix, String> {
    let parsed: Vec<Vec<_>> = rows
        .iter()
        .map(|r| {
            r.split(' ')
                .filter(|s| !s.is_empty())
                .map(|s| field.parse_scalar(s))
                .collect()
        })
        .collect::<Result<_, _>>()
        .map_err(|e| e.to_string())?;
    Matrix::from_rows(field, parsed).map_err(|e| e.to_string())
}

impl Certificate {
    pub fn from_certificate(c: &IsoCertificate) -> Certificate {
        Certificate {
            field: c.intertwiner.field().to_string(),
            intertwiner: matrix_rows(&c.intertwiner),
            inverse: matrix_rows(&c.inverse),
        }
    }

    pub fn to_certificate(&self) -> Result<IsoCertificate, String> {
        let field: Field = self
            .field
            .parse()
            .map_err(|e: indres::Error| e.to_string())?;
        Ok(IsoCertificate {
            intertwiner: parse_rows(field, &self.intertwiner)?,
            inverse: parse_rows(field, &self.inverse)?,
        })
    }
}

pub fn verdict_name(v: &Verdict) -> &'static str {
    match v {
        Verdict::Pass(_) => "pass",
        Verdict::DimMismatch => "dim_mismatch",
        Verdict::NoCertificateFound { .. } => "no_certificate",
        Verdict::SkippedHypothesis => "skipped_hypothesis",
        Verdict::NotApplicable => "not_applicable",
    }
}

impl CheckEntry {
    pub fn from_report(r: &CheckReport) -> CheckEntry {
        let hypothesis = match &r.hypothesis {
            HypothesisStatus::Satisfied => Hypothesis {
                status: "satisfied".into(),
                reason: None,
            },
            HypothesisStatus::Violated(s) => Hypothesis {
                status: "violated".into(),
                reason: Some(s.clone()),
            },
            HypothesisStatus::NotApplicable(s) => Hypothesis {
                status: "not_applicable".into(),
                reason: Some(s.clone()),
            },
        };
        CheckEntry {
            name: r.check_name.clone(),
            inputs: r.inputs.clone(),
            hypothesis,
            lhs_dim: r.lhs_dim,
            rhs_dim: r.rhs_dim,
            verdict: verdict_name(&r.verdict).into(),
            trials: match r.verdict {
                Verdict::NoCertificateFound { trials } => Some(trials),
                _ => None,
            },
            seed: r.seed,
            notes: r.notes.clone(),
            certificate: match &r.verdict {
                Verdict::Pass(c) => Some(Certificate::from_certificate(c)),
                _ => None,
            },
        }
    }

    pub fn is_failure(&self) -> bool {
        self.hypothesis.status == "satisfied"
            && matches!(self.verdict.as_str(), "dim_mismatch" | "no_certificate")
    }
}

impl Summary {
    pub fn of(entries: &[CheckEntry]) -> Summary {
        let mut s = Summary {
            total: entries.len(),
            ..Summary::default()
        };
        for e in entries {
            match e.verdict.as_str() {
                "pass" => s.pass += 1,
                "dim_mismatch" => s.dim_mismatch += 1,
                "no_certificate" => s.no_certificate += 1,
                "skipped_hypothesis" => s.skipped_hypothesis += 1,
                _ => s.not_applicable += 1,
            }
            if e.is_failure() {
                s.failures += 1;
            }
        }
        s
    }
}

impl SuiteReport {
    pub fn new(seed: u64, max_trials: usize, reports: &[CheckReport]) -> SuiteReport {
        let checks: Vec<CheckEntry> = reports.iter().map(CheckEntry::from_report).collect();
        let timestamp = SystemTime::now()
            .duration_since(UNIX_EPOCH)
            .map_or(0, |d| d.as_secs());
        SuiteReport {
            tool: TOOL.into(),
            version: VERSION.into(),
            seed,
            max_trials,
            timestamp,
            summary: Summary::of(&checks),
            checks,
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<SuiteReport, String> {
        let r: SuiteReport = serde_json::from_str(text).map_err(|e| e.to_string())?;
        if Summary::of(&r.checks) != r.summary {
            return Err("summary counts disagree with the check list".into());
        }
        Ok(r)
    }

    pub fn exit_code(&self) -> i32 {
        i32::from(self.summary.failures > 0)
    }
}

/// Per-family verdict counts, the failing checks, and the wall time.
pub fn human_summary(report: &SuiteReport, reports: &[CheckReport], wall: Duration) -> String {
    let mut families: BTreeMap<&str, [usize; 5]> = BTreeMap::new();
    let mut time: BTreeMap<&str, Duration> = BTreeMap::new();
    for (e, r) in report.checks.iter().zip(reports) {
        let slot = match e.verdict.as_str() {
            "pass" => 0,
            "dim_mismatch" => 1,
            "no_certificate" => 2,
            "skipped_hypothesis" => 3,
            _ => 4,
        };
        families.entry(&e.name).or_default()[slot] += 1;
        *time.entry(&e.name).or_default() += r.elapsed;
    }
    let mut out = format!(
        "{:<20} {:>7} {:>7} {:>7} {:>7} {:>7} {:>10}\n",
        "check", "pass", "dim", "nocert", "skipped", "n/a", "cpu"
    );
    for (name, c) in &families {
        out += &format!(
            "{:<20} {:>7} {:>7} {:>7} {:>7} {:>7} {:>9.2}s\n",
            name,
            c[0],
            c[1],
            c[2],
            c[3],
            c[4],
            time[name].as_secs_f64()
        );
    }
    for e in report.checks.iter().filter(|e| e.is_failure()) {
        out += &format!("FAILED {} [{}]: {}\n", e.name, e.verdict, e.inputs);
    }
    let s = &report.summary;
    out += &format!(
        "{} checks: {} pass, {} dim_mismatch, {} no_certificate, {} skipped_hypothesis, {} not_applicable in {:.2}s\n",
        s.total,
        s.pass,
        s.dim_mismatch,
        s.no_certificate,
        s.skipped_hypothesis,
        s.not_applicable,
        wall.as_secs_f64()
    );
    out
}
