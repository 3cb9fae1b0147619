//! Counterexample search: unary claims over a sweep.

use serde::Serialize;

use crate::enumerate::{fold_sweep, SweepError, SweepSpec, SweepSummary};
use crate::error::Error;
use crate::invariants::InvariantReport;

use super::unary::check_unary;
use super::verdict::{CheckReport, TheoremVerdict};
use super::Theorem;

pub type HuntError = SweepError<Error>;

#[derive(Debug, Clone, Serialize)]
pub struct HuntOutcome {
    /// One report per requested claim, in request order.
    pub reports: Vec<CheckReport>,
    /// Verdicts with a met hypothesis, in sweep order; empty unless requested.
    pub verdicts: Vec<TheoremVerdict>,
    pub summary: SweepSummary,
}

impl HuntOutcome {
    pub fn counterexample_count(&self) -> u64 {
        self.reports.iter().map(|r| r.counterexample_count).sum()
    }
}

/// Runs every claim in `theorems` on every graph of the sweep.
///
/// A counterexample is data, not an error. Errors are invalid specs,
/// non-unary claims, and failed bookkeeping identities (reported with the
/// offending graph's graph6 string).
pub fn hunt(spec: &SweepSpec, theorems: &[Theorem], workers: usize) -> Result<HuntOutcome, HuntError> {
    hunt_with_verdicts(spec, theorems, workers, false)
}

/// [`hunt`], optionally keeping every hypothesis-meeting verdict.
pub fn hunt_with_verdicts(
    spec: &SweepSpec,
    theorems: &[Theorem],
    workers: usize,
    keep_verdicts: bool,
) -> Result<HuntOutcome, HuntError> {
    if theorems.is_empty() {
        return Err(Error::InvalidParameter("no claims requested".into()).into());
    }
    if let Some(t) = theorems.iter().find(|t| !t.is_unary()) {
        return Err(Error::InvalidParameter(format!(
            "{t} needs constructed inputs and cannot run over a sweep"
        ))
        .into());
    }

    let init = || {
        (
            theorems.iter().map(|t| CheckReport::new(t.id())).collect::<Vec<_>>(),
            Vec::new(),
        )
    };
    let ((reports, verdicts), summary) = fold_sweep(
        spec,
        workers,
        init,
        |(reports, verdicts): &mut (Vec<CheckReport>, Vec<TheoremVerdict>), s| {
            let r = InvariantReport::from_distances(&s.graph, &s.dist);
            for (report, &t) in reports.iter_mut().zip(theorems) {
                let v = check_unary(t, &s.graph, &s.dist, &r)?;
                report.record(&v, &s.graph);
                if keep_verdicts && v.hypothesis_met {
                    verdicts.push(v);
                }
            }
            Ok(())
        },
        |(reports, verdicts), (later_reports, later_verdicts)| {
            for (r, later) in reports.iter_mut().zip(later_reports) {
                r.merge(later);
            }
            verdicts.extend(later_verdicts);
        },
    )?;
    Ok(HuntOutcome {
        reports,
        verdicts,
        summary,
    })
}
