//! Executable checks: each builds both sides of an asserted isomorphism and certifies it.
//!
//! A check never asserts anything when its hypothesis fails; it records both
//! dimensions and returns [`Verdict::SkippedHypothesis`]. Structural
//! preconditions (surjectivity, kernel containments, direct factors) that fail
//! make the check [`Verdict::NotApplicable`].

mod adjunctions;
mod mackey;

use std::sync::Arc;
use std::time::{Duration, Instant};

pub use adjunctions::{
    check_dual_ind, check_dual_res, check_frobenius, check_hom_equals_ind, check_ind_tensor,
    check_transitivity, coinduced_rep, CoinducedRep,
};
pub use mackey::{
    build_mackey_rhs, check_lemma_mackey_1, check_lemma_mackey_2, check_lemma_mackey_3,
    check_mackey, find_trivial_complement, mackey_squares, MackeyDecomposition, MackeyInstance,
    MackeySquare, MackeySummand,
};

use crate::error::Result;
use crate::groups::{FiniteGroup, GroupHom, Subgroup};
use crate::homspace::{iso_certificate, verify_certificate, IsoCertificate, IsoSearch};
use crate::linalg::Matrix;
use crate::rep::{higman_sum, is_relatively_one_projective, trivial_rep, Representation};

/// Seed and trial budget for certificate searches.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchOptions {
    pub seed: u64,
    pub max_trials: usize,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            seed: 0,
            max_trials: 256,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HypothesisStatus {
    Satisfied,
    Violated(String),
    NotApplicable(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    /// The certificate maps the left side to the right side.
    Pass(IsoCertificate),
    DimMismatch,
    NoCertificateFound {
        trials: usize,
    },
    SkippedHypothesis,
    NotApplicable,
}

/// The two modules a passing certificate relates, kept for re-verification.
#[derive(Clone, Debug)]
pub struct Evidence {
    pub lhs: Representation,
    pub rhs: Representation,
}

#[derive(Clone, Debug)]
pub struct CheckReport {
    pub check_name: String,
    pub inputs: String,
    pub hypothesis: HypothesisStatus,
    /// Zero when the side was never built (not applicable).
    pub lhs_dim: usize,
    pub rhs_dim: usize,
    pub verdict: Verdict,
    pub seed: u64,
    pub elapsed: Duration,
    pub notes: Vec<String>,
    pub evidence: Option<Arc<Evidence>>,
}

impl CheckReport {
    pub fn is_pass(&self) -> bool {
        matches!(self.verdict, Verdict::Pass(_))
    }

    /// A satisfied hypothesis without a passing certificate.
    pub fn is_failure(&self) -> bool {
        self.hypothesis == HypothesisStatus::Satisfied
            && matches!(
                self.verdict,
                Verdict::DimMismatch | Verdict::NoCertificateFound { .. }
            )
    }

    /// Re-checks a passing certificate against the stored sides.
    pub fn reverify(&self) -> Result<(), String> {
        let Verdict::Pass(cert) = &self.verdict else {
            return Err("not a passing report".into());
        };
        let evidence = self.evidence.as_ref().ok_or("no evidence attached")?;
        if evidence.lhs.dim() != self.lhs_dim || evidence.rhs.dim() != self.rhs_dim {
            return Err("evidence dimensions disagree with the report".into());
        }
        verify_certificate(&evidence.lhs, &evidence.rhs, cert)
    }
}

/// Shared bookkeeping for a check in progress.
pub(crate) struct Pending {
    name: String,
    inputs: String,
    start: Instant,
    opts: SearchOptions,
    pub(crate) notes: Vec<String>,
}

impl Pending {
    pub(crate) fn new(name: &str, inputs: String, opts: &SearchOptions) -> Pending {
        Pending {
            name: name.to_string(),
            inputs,
            start: Instant::now(),
            opts: *opts,
            notes: Vec::new(),
        }
    }

    pub(crate) fn note(&mut self, s: impl Into<String>) {
        self.notes.push(s.into());
    }

    pub(crate) fn report(
        self,
        hypothesis: HypothesisStatus,
        dims: (usize, usize),
        verdict: Verdict,
    ) -> CheckReport {
        CheckReport {
            check_name: self.name,
            inputs: self.inputs,
            hypothesis,
            lhs_dim: dims.0,
            rhs_dim: dims.1,
            verdict,
            seed: self.opts.seed,
            elapsed: self.start.elapsed(),
            notes: self.notes,
            evidence: None,
        }
    }

    pub(crate) fn not_applicable(self, reason: String) -> CheckReport {
        self.report(
            HypothesisStatus::NotApplicable(reason),
            (0, 0),
            Verdict::NotApplicable,
        )
    }

    /// Searches for a certificate unless the hypothesis is violated.
    pub(crate) fn compare(
        self,
        hypothesis: HypothesisStatus,
        lhs: Representation,
        rhs: Representation,
    ) -> Result<CheckReport> {
        let dims = (lhs.dim(), rhs.dim());
        if hypothesis != HypothesisStatus::Satisfied {
            return Ok(self.report(hypothesis, dims, Verdict::SkippedHypothesis));
        }
        let search = iso_certificate(&lhs, &rhs, self.opts.seed, self.opts.max_trials)?;
        Ok(self.settle(search, lhs, rhs))
    }

    /// Turns a search result into a report, re-verifying any certificate.
    pub(crate) fn settle(
        mut self,
        search: IsoSearch,
        lhs: Representation,
        rhs: Representation,
    ) -> CheckReport {
        let dims = (lhs.dim(), rhs.dim());
        match search {
            IsoSearch::Certified(cert) => self.pass(cert, lhs, rhs),
            IsoSearch::DimensionMismatch { .. } => {
                self.report(HypothesisStatus::Satisfied, dims, Verdict::DimMismatch)
            }
            IsoSearch::NoCertificateFound { trials } => {
                self.note(format!(
                    "no invertible intertwiner among {trials} candidates"
                ));
                self.report(
                    HypothesisStatus::Satisfied,
                    dims,
                    Verdict::NoCertificateFound { trials },
                )
            }
        }
    }

    /// Accepts a certificate only after an independent check.
    pub(crate) fn pass(
        mut self,
        cert: IsoCertificate,
        lhs: Representation,
        rhs: Representation,
    ) -> CheckReport {
        let dims = (lhs.dim(), rhs.dim());
        if let Err(e) = verify_certificate(&lhs, &rhs, &cert) {
            self.note(format!("certificate rejected: {e}"));
            return self.report(
                HypothesisStatus::Satisfied,
                dims,
                Verdict::NoCertificateFound { trials: 0 },
            );
        }
        let mut report = self.report(HypothesisStatus::Satisfied, dims, Verdict::Pass(cert));
        report.evidence = Some(Arc::new(Evidence { lhs, rhs }));
        report
    }
}

/// Evaluates "Res to K is relatively 1-projective" and records the witness or obstruction.
pub(crate) fn projectivity_gate(
    v: &Representation,
    k: &Subgroup,
    notes: &mut Vec<String>,
) -> Result<HypothesisStatus> {
    match is_relatively_one_projective(v, k)? {
        Some(theta) => {
            if !higman_sum(v, k, &theta).is_identity() {
                return Ok(HypothesisStatus::NotApplicable(
                    "Higman witness failed re-verification".into(),
                ));
            }
            let how = if v.field().is_unit(k.order() as u64) {
                "averaging"
            } else {
                "linear solve"
            };
            notes.push(format!(
                "relatively 1-projective over |K|={} ({how})",
                k.order()
            ));
            Ok(HypothesisStatus::Satisfied)
        }
        None => Ok(HypothesisStatus::Violated(format!(
            "Σ_k ρ(k)θρ(k)⁻¹ = 1 has no solution over |K|={} in {}",
            k.order(),
            v.field()
        ))),
    }
}

/// A linear isomorphism between two plain vector spaces, as a certificate between trivial modules.
pub(crate) fn linear_iso_evidence(pending: Pending, matrix: Matrix) -> CheckReport {
    let one = FiniteGroup::trivial();
    let lhs = trivial_rep(&one, matrix.field(), matrix.cols());
    let rhs = trivial_rep(&one, matrix.field(), matrix.rows());
    let dims = (lhs.dim(), rhs.dim());
    if dims.0 != dims.1 {
        return pending.report(HypothesisStatus::Satisfied, dims, Verdict::DimMismatch);
    }
    match matrix.inverse() {
        Some(inverse) => pending.pass(
            IsoCertificate {
                intertwiner: matrix,
                inverse,
            },
            lhs,
            rhs,
        ),
        None => {
            let mut pending = pending;
            pending.note("natural map between the hom spaces is singular");
            pending.report(
                HypothesisStatus::Satisfied,
                dims,
                Verdict::NoCertificateFound { trials: 1 },
            )
        }
    }
}

pub(crate) fn describe_hom(name: &str, f: &GroupHom) -> String {
    format!(
        "{name}: |{}| → |{}|",
        f.domain().order(),
        f.codomain().order()
    )
}
