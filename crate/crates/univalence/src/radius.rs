//! Certified lower bounds for the radius of univalence of concrete maps,
//! primarily the error function `errf(z) = ∫_0^z e^(-t²) dt`.
//!
//! `errf(rz)` has `S(errf(rz)) = -2r²(1 + r²z²)`, so `|S| <= 2r²(1 + r²x²)`
//! on `|z| = x` and any admissible comparison function `p` with
//! `2(r² + r⁴x²) <= 2p(x)` on `[0,1)` certifies univalence of `errf(rz)` on
//! the unit disc, i.e. certifies `r` as a lower bound for the radius.
//!
//! Admissibility is enforced before any certification: the candidate must
//! pass the comparison-function check, be self majorant, and its even
//! solution of `u'' + pu = 0` must not vanish on `[0, 1-ε)`; dropping the
//! last condition would admit the oscillatory counterexample families and
//! "certify" radii beyond the true one.

use crate::checker::{self, CheckError, CheckStatus};
use crate::families::Candidate;
use crate::ode::{self, OdeError};
use std::fmt;

#[derive(Debug, Clone, PartialEq)]
pub enum RadiusError {
    /// Prerequisite certificates absent or refuted.
    CandidateNotAdmissible { candidate: String, reason: String },
    /// No parameter in the scan was admissible.
    EmptyAdmissibleSet,
    BadGrid(String),
    Check(CheckError),
    Ode(OdeError),
}

impl fmt::Display for RadiusError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RadiusError::CandidateNotAdmissible { candidate, reason } => {
                write!(f, "{} not admissible: {}", candidate, reason)
            }
            RadiusError::EmptyAdmissibleSet => write!(f, "no admissible candidate in scan"),
            RadiusError::BadGrid(msg) => write!(f, "bad grid: {}", msg),
            RadiusError::Check(e) => write!(f, "check: {}", e),
            RadiusError::Ode(e) => write!(f, "ode: {}", e),
        }
    }
}

impl std::error::Error for RadiusError {}

impl From<CheckError> for RadiusError {
    fn from(e: CheckError) -> Self {
        RadiusError::Check(e)
    }
}

impl From<OdeError> for RadiusError {
    fn from(e: OdeError) -> Self {
        RadiusError::Ode(e)
    }
}

/// Registered radius targets: maps with a closed-form modulus majorant of
/// their Schwarzian on circles.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum RadiusTarget {
    Errf,
}

impl RadiusTarget {
    /// Sharp modulus majorant of `|S(target(rz))|` on `|z| = x`.
    pub fn bound(&self, r: f64, x: f64) -> f64 {
        match self {
            RadiusTarget::Errf => errf_schwarzian_bound(r, x),
        }
    }

    pub fn label(&self) -> &'static str {
        match self {
            RadiusTarget::Errf => "errf",
        }
    }
}

/// `2r²(1 + r²x²)`: the sharp majorant of `|S(errf(rz))| = 2r²|1 + r²z²|`
/// on the circle `|z| = x`.
pub fn errf_schwarzian_bound(r: f64, x: f64) -> f64 {
    2.0 * r * r * (1.0 + r * r * x * x)
}

/// Endpoint offset used by the certification sweeps.
const CERTIFY_EPS: f64 = 1e-6;

/// A candidate that passed all three admissibility checks; constructing one
/// is the only way to run a certification sweep.
#[derive(Debug, Clone)]
pub struct AdmissibleCandidate {
    candidate: Candidate,
}

impl AdmissibleCandidate {
    pub fn candidate(&self) -> &Candidate {
        &self.candidate
    }
}

/// Runs the three prerequisite checks: comparison-function certificate,
/// self-majorance certificate, and a nonvanishing even solution on
/// `[0, 1-ε)`.
pub fn admit(c: &Candidate, grid: usize) -> Result<AdmissibleCandidate, RadiusError> {
    let not_admissible = |reason: String| RadiusError::CandidateNotAdmissible {
        candidate: c.name(),
        reason,
    };
    let nehari = checker::check_nehari(c, grid.max(checker::DEFAULT_GRID), CERTIFY_EPS)?;
    if nehari.status != CheckStatus::Verified {
        return Err(not_admissible(format!("comparison-function check {:?}", nehari.status)));
    }
    let sm = checker::check_self_majorant(c, checker::DEFAULT_SM_ORDER, 64)?;
    if sm.status != CheckStatus::Verified {
        return Err(not_admissible(format!("self-majorance check {:?}", sm.status)));
    }
    let sol = ode::solve_even(c, CERTIFY_EPS, 1e-10)?;
    if sol.zero_count() > 0 {
        return Err(not_admissible(format!(
            "even solution vanishes at x = {}",
            sol.zeros()[0]
        )));
    }
    Ok(AdmissibleCandidate { candidate: c.clone() })
}

/// Outcome of a certification sweep at a fixed radius.
#[derive(Debug, Clone, PartialEq, serde::Serialize)]
pub enum CertifyOutcome {
    Certified,
    Failed { worst_x: f64, deficit: f64 },
}

impl CertifyOutcome {
    pub fn is_certified(&self) -> bool {
        matches!(self, CertifyOutcome::Certified)
    }
}

fn sweep(
    target: RadiusTarget,
    r: f64,
    c: &Candidate,
    grid: usize,
) -> Result<CertifyOutcome, RadiusError> {
    let hi = 1.0 - CERTIFY_EPS;
    let mut worst_x = 0.0;
    let mut worst_margin = f64::INFINITY;
    for i in 0..grid {
        let x = hi * i as f64 / (grid - 1) as f64;
        let margin = 2.0 * c.p(x).map_err(CheckError::EvaluationFailure)? - target.bound(r, x);
        if margin < worst_margin {
            worst_margin = margin;
            worst_x = x;
        }
    }
    // past the sweep the comparison continues in φ form, where both sides
    // stay finite: bound·(1-x²)² <= 2φ(x)
    for &x in &[1.0 - 1e-7, 1.0 - 1e-8, 1.0 - 1e-9] {
        let omx2 = 1.0 - x * x;
        let margin = 2.0 * c.phi(x).map_err(CheckError::EvaluationFailure)?
            - target.bound(r, x) * omx2 * omx2;
        if margin < 0.0 {
            return Ok(CertifyOutcome::Failed { worst_x: x, deficit: -margin });
        }
    }
    // at x = 1 the bound side vanishes, so the check reduces to τ >= 0;
    // τ falls back to extrapolation for candidates without a closed form
    let tau = checker::tau(c)?;
    if tau < -1e-12 {
        return Ok(CertifyOutcome::Failed { worst_x: 1.0, deficit: -2.0 * tau });
    }
    if worst_margin < 0.0 {
        Ok(CertifyOutcome::Failed { worst_x, deficit: -worst_margin })
    } else {
        Ok(CertifyOutcome::Certified)
    }
}

/// Certifies `r` against an already-admitted candidate on a grid of at least
/// 4096 points.
pub fn certify_admitted(
    target: RadiusTarget,
    r: f64,
    adm: &AdmissibleCandidate,
    grid: usize,
) -> Result<CertifyOutcome, RadiusError> {
    if grid < 4096 {
        return Err(RadiusError::BadGrid(format!("grid {} below 4096", grid)));
    }
    sweep(target, r, &adm.candidate, grid)
}

/// Certifies `r` for the error function against candidate `c`, enforcing the
/// admissibility prerequisites first.
pub fn certify(r: f64, c: &Candidate, grid: usize) -> Result<CertifyOutcome, RadiusError> {
    let adm = admit(c, grid)?;
    certify_admitted(RadiusTarget::Errf, r, &adm, grid)
}

/// One probed radius in the bisection history.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize)]
pub struct TracePoint {
    pub r: f64,
    pub certified: bool,
}

/// A certified lower bound for a radius of univalence, with the witnessing
/// family parameters and margin profile.
#[derive(Debug, Clone, serde::Serialize)]
pub struct RadiusEstimate {
    pub target: String,
    pub r_lower: f64,
    pub family: Candidate,
    /// Minimum of `2p(x) - bound(r_lower, x)` over the verification grid.
    pub margin: f64,
    /// Abscissa where the margin is attained.
    pub margin_argmin: f64,
    /// Bisection history of the winning candidate.
    pub search_trace: Vec<TracePoint>,
}

impl RadiusEstimate {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("serializable")
    }
}

/// Bisection tolerance in `r` (three reported decimals).
pub const R_TOL: f64 = 1e-4;
/// Verification grid for the final certificate.
pub const FINAL_GRID: usize = 8192;

fn bisect_radius(
    target: RadiusTarget,
    adm: &AdmissibleCandidate,
    grid: usize,
) -> Result<(f64, Vec<TracePoint>), RadiusError> {
    let mut trace = Vec::new();
    let mut lo = 0.0f64;
    let mut hi = 2.0f64;
    let hi_out = certify_admitted(target, hi, adm, grid)?;
    trace.push(TracePoint { r: hi, certified: hi_out.is_certified() });
    if hi_out.is_certified() {
        // nothing in the catalogue gets near this; report the bracket edge
        return Ok((hi, trace));
    }
    while hi - lo > R_TOL {
        let mid = 0.5 * (lo + hi);
        let out = certify_admitted(target, mid, adm, grid)?;
        trace.push(TracePoint { r: mid, certified: out.is_certified() });
        if out.is_certified() {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok((lo, trace))
}

/// Scans the candidate list, bisects the certifiable radius for each
/// admissible one to 1e-4, and returns the best. Candidates failing
/// admissibility are skipped; if none survives the scan the admissible set
/// is empty. The winner is re-verified on the 8192-point grid and its margin
/// profile minimum is reported.
pub fn maximize_radius(
    target: RadiusTarget,
    candidates: &[Candidate],
    grid: usize,
) -> Result<RadiusEstimate, RadiusError> {
    let grid = grid.max(4096);
    let mut best: Option<(f64, Candidate, Vec<TracePoint>)> = None;
    for c in candidates {
        let adm = match admit(c, grid) {
            Ok(a) => a,
            Err(RadiusError::CandidateNotAdmissible { .. }) => continue,
            Err(e) => return Err(e),
        };
        let (r, trace) = bisect_radius(target, &adm, grid)?;
        let better = match &best {
            None => true,
            Some((r_best, _, _)) => r > *r_best,
        };
        if better {
            best = Some((r, c.clone(), trace));
        }
    }
    let (r_lower, family, search_trace) = best.ok_or(RadiusError::EmptyAdmissibleSet)?;
    // final verification and margin profile on the dense grid
    let adm = admit(&family, grid)?;
    let outcome = certify_admitted(target, r_lower, &adm, FINAL_GRID)?;
    debug_assert!(outcome.is_certified());
    let (margin, margin_argmin) = min_margin(target, r_lower, &family, FINAL_GRID)?;
    Ok(RadiusEstimate {
        target: target.label().into(),
        r_lower,
        family,
        margin,
        margin_argmin,
        search_trace,
    })
}

fn min_margin(
    target: RadiusTarget,
    r: f64,
    c: &Candidate,
    grid: usize,
) -> Result<(f64, f64), RadiusError> {
    let hi = 1.0 - CERTIFY_EPS;
    let mut min = f64::INFINITY;
    let mut argmin = 0.0;
    for i in 0..grid {
        let x = hi * i as f64 / (grid - 1) as f64;
        let margin = 2.0 * c.p(x).map_err(CheckError::EvaluationFailure)? - target.bound(r, x);
        if margin < min {
            min = margin;
            argmin = x;
        }
    }
    Ok((min, argmin))
}

/// Margin profile rows `(x, 2p(x), bound(r,x))` for CSV export.
pub fn margin_profile(
    target: RadiusTarget,
    r: f64,
    c: &Candidate,
    n: usize,
) -> Result<Vec<(f64, f64, f64)>, RadiusError> {
    let hi = 1.0 - CERTIFY_EPS;
    let mut rows = Vec::with_capacity(n);
    for i in 0..n {
        let x = hi * i as f64 / (n - 1) as f64;
        let p = c.p(x).map_err(CheckError::EvaluationFailure)?;
        rows.push((x, 2.0 * p, target.bound(r, x)));
    }
    Ok(rows)
}

/// Candidates for a one-parameter λ scan of theorem 4 or 5.
pub fn lambda_scan(theorem: u8, start: f64, stop: f64, step: f64) -> Vec<Candidate> {
    assert!(step > 0.0);
    let mut out = Vec::new();
    let mut k = 0usize;
    loop {
        // round accumulated grid values to 12 decimals so parameter labels
        // stay readable
        let lambda = ((start + step * k as f64) * 1e12).round() / 1e12;
        if lambda > stop + 1e-12 {
            break;
        }
        out.push(match theorem {
            4 => Candidate::thm4(lambda),
            5 => Candidate::thm5(lambda),
            t => panic!("lambda scan supports theorems 4 and 5, got {}", t),
        });
        k += 1;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use std::f64::consts::PI;

    #[test]
    fn bound_reference_values() {
        assert_relative_eq!(errf_schwarzian_bound(1.0, 0.0), 2.0);
        let r: f64 = 1.365;
        assert_relative_eq!(
            errf_schwarzian_bound(r, 1.0),
            2.0 * r.powi(2) * (1.0 + r.powi(2)),
            max_relative = 1e-15
        );
        // monotone in r and x
        assert!(errf_schwarzian_bound(1.1, 0.5) > errf_schwarzian_bound(1.0, 0.5));
        assert!(errf_schwarzian_bound(1.0, 0.6) > errf_schwarzian_bound(1.0, 0.5));
    }

    #[test]
    fn paper_point_certifies() {
        let out = certify(1.365, &Candidate::thm5(0.2), FINAL_GRID).unwrap();
        assert!(out.is_certified());
    }

    #[test]
    fn tiny_radius_certifies_against_constant() {
        let out = certify(0.1, &Candidate::const_pi(0.0), 4096).unwrap();
        assert!(out.is_certified());
    }

    #[test]
    fn beyond_true_radius_nothing_certifies() {
        // r = 1.58 exceeds the actual radius of univalence (1.5748...), so
        // every candidate must fail or be inadmissible
        let candidates = vec![
            Candidate::thm1(0.8, 0.05),
            Candidate::thm2(0.45, 0.3),
            Candidate::thm3(0.75, 0.1),
            Candidate::thm4(0.3),
            Candidate::thm5(0.2),
            Candidate::hille(2.0),
            Candidate::const_pi(0.0),
            Candidate::TwoOver,
            Candidate::NehariMu1 { mu: 0.5 },
            Candidate::Beesack { lambda: 0.3 },
        ];
        for c in candidates {
            match certify(1.58, &c, 4096) {
                Ok(out) => assert!(!out.is_certified(), "{} certified 1.58", c.name()),
                Err(RadiusError::CandidateNotAdmissible { .. }) => {}
                Err(e) => panic!("unexpected error for {}: {}", c.name(), e),
            }
        }
    }

    #[test]
    fn oscillatory_candidates_are_rejected() {
        // hille passes the comparison-function and self-majorance checks but
        // its even solution oscillates, so it must not be admitted
        let err = admit(&Candidate::hille(2.0), 4096).unwrap_err();
        match err {
            RadiusError::CandidateNotAdmissible { reason, .. } => {
                assert!(reason.contains("vanishes"), "reason: {}", reason)
            }
            e => panic!("unexpected: {}", e),
        }
    }

    #[test]
    fn certification_is_monotone_in_r() {
        let adm = admit(&Candidate::thm5(0.2), 4096).unwrap();
        let mut was_certified = true;
        for i in 0..30 {
            let r = 0.1 + 1.5 * i as f64 / 29.0;
            let now = certify_admitted(RadiusTarget::Errf, r, &adm, 4096)
                .unwrap()
                .is_certified();
            assert!(was_certified || !now, "certification must be monotone");
            was_certified = now;
        }
    }

    #[test]
    fn constant_candidate_matches_quadratic_closed_form() {
        // binding constraint at x=1: 2r²(1+r²) = π²/2, so r² = (sqrt(1+π²)-1)/2
        let est = maximize_radius(RadiusTarget::Errf, &[Candidate::const_pi(0.0)], 4096).unwrap();
        let expected = (((1.0 + PI * PI).sqrt() - 1.0) / 2.0).sqrt();
        assert!(
            (est.r_lower - expected).abs() <= 2.0 * R_TOL,
            "bisection {} vs closed form {}",
            est.r_lower,
            expected
        );
    }

    #[test]
    fn thm5_scan_reaches_the_reported_radius() {
        let cands = lambda_scan(5, 0.14, 0.26, 0.02);
        let est = maximize_radius(RadiusTarget::Errf, &cands, 4096).unwrap();
        assert!(est.r_lower >= 1.365, "r_lower = {}", est.r_lower);
        assert!(est.r_lower < 1.5748, "sanity ceiling breached: {}", est.r_lower);
        // margin minimum sits at an interior tangency point
        assert!(est.margin >= 0.0);
        assert!(
            est.margin_argmin > 0.1 && est.margin_argmin < 0.9,
            "argmin = {}",
            est.margin_argmin
        );
        assert!(!est.search_trace.is_empty());
    }

    #[test]
    fn custom_series_candidates_certify() {
        // truncated series of 2/(1-x^2): nonvanishing solution 1-x^2, the
        // endpoint comparison runs through the extrapolated tau
        let n = 64;
        let mut coeffs = vec![0.0; n + 1];
        let mut k = 0;
        while 2 * k <= n {
            coeffs[2 * k] = 2.0;
            k += 1;
        }
        let series =
            crate::series::TaylorSeries::new(coeffs, crate::series::Parity::Even).unwrap();
        let hot = Candidate::Custom { series: series.scale(PI * PI / 8.0) };
        let c = Candidate::Custom { series };
        assert!(certify(0.5, &c, 4096).unwrap().is_certified());
        assert!(!certify(1.58, &c, 4096).unwrap().is_certified());
        // a comparison function that genuinely oscillates is rejected even
        // as a custom series: (pi^2/4)/(1-x^2) exceeds the borderline
        // 2/(1-x^2) and its even solution vanishes before 1
        assert!(matches!(
            certify(0.5, &hot, 4096),
            Err(RadiusError::CandidateNotAdmissible { .. })
        ));
    }

    #[test]
    fn refinement_only_shrinks_or_confirms() {
        let coarse =
            maximize_radius(RadiusTarget::Errf, &[Candidate::thm5(0.2)], 4096).unwrap();
        let fine =
            maximize_radius(RadiusTarget::Errf, &[Candidate::thm5(0.2)], 16384).unwrap();
        assert!(fine.r_lower <= coarse.r_lower + R_TOL);
        assert!((fine.r_lower - coarse.r_lower).abs() <= 2.0 * R_TOL);
    }

    #[test]
    fn empty_admissible_set_reported() {
        let err =
            maximize_radius(RadiusTarget::Errf, &[Candidate::hille(1.0)], 4096).unwrap_err();
        assert_eq!(err, RadiusError::EmptyAdmissibleSet);
    }

    #[test]
    fn estimate_serializes() {
        let est = maximize_radius(RadiusTarget::Errf, &[Candidate::thm5(0.2)], 4096).unwrap();
        let json = est.to_json();
        assert!(json.contains("\"target\":\"errf\""));
        assert!(json.contains("r_lower"));
    }
}
