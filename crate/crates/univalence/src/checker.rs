//! Numerical certifiers for the three pillars behind each univalence
//! criterion: the comparison-function property (positivity of `p` and
//! monotonicity of `φ = p(x)(1-x²)²`), self-majorance `|p(z)| <= p(|z|)`,
//! and the endpoint quantity `τ = lim φ` with its valence classification.
//!
//! Verdicts are high-confidence numerics on explicit grids, not proofs, and
//! every certificate records the grid and slack it used. Reruns with the
//! same grid and tolerance are bit-identical.

use crate::families::{Candidate, FamilyError};
use crate::series::SeriesError;
use num_complex::Complex64;
use std::f64::consts::PI;
use std::fmt;

#[derive(Debug, Clone, PartialEq)]
pub enum CheckError {
    EvaluationFailure(FamilyError),
    SeriesProblem(SeriesError),
    /// Richardson extrapolants failed to settle within the spread.
    NoLimit { spread: f64 },
    /// Requested sample radius beyond the reliable evaluation radius.
    SeriesDivergence { requested: f64, reliable: f64 },
    BadGrid(String),
}

impl fmt::Display for CheckError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CheckError::EvaluationFailure(e) => write!(f, "evaluation failure: {}", e),
            CheckError::SeriesProblem(e) => write!(f, "series: {}", e),
            CheckError::NoLimit { spread } => {
                write!(f, "endpoint extrapolation did not settle (spread {})", spread)
            }
            CheckError::SeriesDivergence { requested, reliable } => write!(
                f,
                "radius {} beyond reliable evaluation radius {}",
                requested, reliable
            ),
            CheckError::BadGrid(msg) => write!(f, "bad grid: {}", msg),
        }
    }
}

impl std::error::Error for CheckError {}

impl From<FamilyError> for CheckError {
    fn from(e: FamilyError) -> Self {
        CheckError::EvaluationFailure(e)
    }
}

impl From<SeriesError> for CheckError {
    fn from(e: SeriesError) -> Self {
        CheckError::SeriesProblem(e)
    }
}

/// Outcome of a numerical check. `Indeterminate` is an honest verdict: the
/// sufficient condition failed but no counterexample was found.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckStatus {
    Verified,
    Refuted,
    Indeterminate,
}

/// Where a check failed (or what left it undecided).
#[derive(Debug, Clone, PartialEq, serde::Serialize, serde::Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    /// Grid abscissa with the offending value and the violated constraint.
    Point { x: f64, value: f64, constraint: String },
    /// Series coefficient index with its value.
    Coefficient { index: usize, value: f64 },
    /// Polar sample where `|p(z)|` exceeds `p(|z|)` by `excess`.
    Polar { r: f64, theta: f64, excess: f64 },
}

#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct GridSpec {
    pub n: usize,
    pub eps: f64,
}

/// Outcome of a numerical check, with enough metadata to reproduce it.
#[derive(Debug, Clone, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct Certificate {
    pub check_id: String,
    pub status: CheckStatus,
    pub witness: Option<Witness>,
    pub grid: GridSpec,
    pub tolerance: f64,
}

impl Certificate {
    pub fn is_verified(&self) -> bool {
        self.status == CheckStatus::Verified
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("serializable")
    }
}

/// Default sweep resolution.
pub const DEFAULT_GRID: usize = 4096;
/// Default endpoint offset for sweeps.
pub const DEFAULT_EPS: f64 = 1e-6;

/// Monotonicity slack: `1e-10 · max(1, φ(0))`.
fn nehari_slack(phi0: f64) -> f64 {
    1e-10 * phi0.abs().max(1.0)
}

/// Certifies the comparison-function property: `p > 0` and `φ` nonincreasing
/// on `{0, ..., 1-eps}` plus the endpoint limit `φ(1)`. Refutations carry the
/// first grid point where `φ` increases beyond the slack (or positivity
/// fails). Grid must have at least 256 points and `eps` lie in `(0, 1e-3]`.
///
/// The monotone quantity is the squared form `φ = p(x)(1-x²)²`. Some
/// statements of the criterion ask only for `p(x)(1-x²)` nonincreasing, but
/// the squared form is what the admissibility arguments actually use, so it
/// is the one checked here.
pub fn check_nehari(c: &Candidate, grid: usize, eps: f64) -> Result<Certificate, CheckError> {
    if grid < 256 {
        return Err(CheckError::BadGrid(format!("grid {} below 256", grid)));
    }
    if !(eps > 0.0 && eps <= 1e-3) {
        return Err(CheckError::BadGrid(format!("eps {} outside (0, 1e-3]", eps)));
    }
    let check_id = format!("nehari:{}", c.name());
    let spec = GridSpec { n: grid, eps };
    let phi0 = c.phi(0.0)?;
    let slack = nehari_slack(phi0);
    let refuted = |witness: Witness| Certificate {
        check_id: check_id.clone(),
        status: CheckStatus::Refuted,
        witness: Some(witness),
        grid: spec,
        tolerance: slack,
    };

    let hi = 1.0 - eps;
    let mut prev = f64::INFINITY;
    for i in 0..grid {
        let x = hi * i as f64 / (grid - 1) as f64;
        let phi = c.phi(x)?;
        if phi <= 0.0 {
            return Ok(refuted(Witness::Point { x, value: phi, constraint: "p(x) > 0".into() }));
        }
        if phi - prev > slack {
            return Ok(refuted(Witness::Point {
                x,
                value: phi - prev,
                constraint: "phi nonincreasing".into(),
            }));
        }
        prev = phi;
    }
    let tau = endpoint_phi(c)?;
    // slack also absorbs extrapolation noise around an exact zero limit
    if tau < -slack {
        return Ok(refuted(Witness::Point { x: 1.0, value: tau, constraint: "phi(1) >= 0".into() }));
    }
    if tau - prev > slack {
        return Ok(refuted(Witness::Point {
            x: 1.0,
            value: tau - prev,
            constraint: "phi nonincreasing".into(),
        }));
    }
    Ok(Certificate {
        check_id,
        status: CheckStatus::Verified,
        witness: None,
        grid: spec,
        tolerance: slack,
    })
}

fn endpoint_phi(c: &Candidate) -> Result<f64, CheckError> {
    match c.tau_analytic() {
        Some(t) => Ok(t),
        None => tau_extrapolated(c),
    }
}

/// Polynomial route for the theorem-1 monotonicity check: `φ` is the cubic
/// `ψ(t) = A + Bt + Ct² + Dt³` in `t = x²`, so the verdict reduces to the
/// sign of a quadratic on `[0, 1]`. Cross-checks the grid sweep.
pub fn thm1_poly_verdict(a: f64, lambda: f64) -> bool {
    let b = 2.0 * (a - 2.0 * a * a + 4.0 * a * lambda - 2.0 * lambda * lambda + 2.0 * lambda);
    let cc = -2.0 * lambda * (4.0 * a - 4.0 * lambda + 1.0);
    let d = -4.0 * lambda * lambda;
    let aa = 2.0 * (a - lambda);
    let slack = 1e-9 * aa.abs().max(1.0);
    // max of psi'(t) = B + 2Ct + 3Dt^2 over [0,1]
    let psi_p = |t: f64| b + 2.0 * cc * t + 3.0 * d * t * t;
    let mut max_dp = psi_p(0.0).max(psi_p(1.0));
    if d != 0.0 {
        let t_star = -cc / (3.0 * d);
        if (0.0..=1.0).contains(&t_star) {
            max_dp = max_dp.max(psi_p(t_star));
        }
    }
    if max_dp > slack {
        return false;
    }
    // positivity: psi monotone pieces, check ends and interior criticals
    let psi = |t: f64| aa + b * t + cc * t * t + d * t * t * t;
    let mut min_psi = psi(0.0).min(psi(1.0));
    // roots of psi' (quadratic 3D t^2 + 2C t + B)
    if d != 0.0 {
        let disc = 4.0 * cc * cc - 12.0 * d * b;
        if disc >= 0.0 {
            for sign in [-1.0, 1.0] {
                let t = (-2.0 * cc + sign * disc.sqrt()) / (6.0 * d);
                if (0.0..=1.0).contains(&t) {
                    min_psi = min_psi.min(psi(t));
                }
            }
        }
    } else if cc != 0.0 {
        let t = -b / (2.0 * cc);
        if (0.0..=1.0).contains(&t) {
            min_psi = min_psi.min(psi(t));
        }
    }
    min_psi > 0.0
}

/// Polynomial route for theorem 3: with `t = (1-x²)/(1+x²)`, `φ` decreases in
/// `x` exactly when `H(t) = (1+t)² ψ'(t)/4` is nonnegative on `[0,1]`, and
/// `H` is the cubic below.
pub fn thm3_poly_verdict(a: f64, b: f64) -> bool {
    let h0 = 2.0 * a * a - 2.0 * a * b - a;
    let h1 = 4.0 * a * b - 2.0 * b * b;
    let h2 = 2.0 * a * b + 2.0 * b * b + 3.0 * b;
    let h3 = 2.0 * b * b + 2.0 * b;
    let h = |t: f64| h0 + t * (h1 + t * (h2 + t * h3));
    let slack = 1e-9 * (4.0 * a * (1.0 - a)).abs().max(1.0);
    let mut min_h = h(0.0).min(h(1.0));
    // critical points of the cubic
    let (qa, qb, qc) = (3.0 * h3, 2.0 * h2, h1);
    if qa != 0.0 {
        let disc = qb * qb - 4.0 * qa * qc;
        if disc >= 0.0 {
            for sign in [-1.0, 1.0] {
                let t = (-qb + sign * disc.sqrt()) / (2.0 * qa);
                if (0.0..=1.0).contains(&t) {
                    min_h = min_h.min(h(t));
                }
            }
        }
    } else if qb != 0.0 {
        let t = -qc / qb;
        if (0.0..=1.0).contains(&t) {
            min_h = min_h.min(h(t));
        }
    }
    if min_h < -slack {
        return false;
    }
    // positivity: psi nondecreasing in t, so tau = psi(0) >= 0 suffices,
    // plus a nonzero interior value
    4.0 * a * (1.0 - a) >= 0.0 && a + b > 0.0
}

/// Default series order for the self-majorance check.
pub const DEFAULT_SM_ORDER: usize = 40;

/// Certifies self-majorance. Coefficient nonnegativity (within 1e-12) of the
/// series to order `n` is sufficient; when some coefficient is negative the
/// check attempts a refutation by polar sampling of `|p(r e^{iθ})| > p(r)`,
/// and returns `Indeterminate` when none is found; negative coefficients
/// alone do not disprove self-majorance.
pub fn check_self_majorant(
    c: &Candidate,
    n: usize,
    circle_samples: usize,
) -> Result<Certificate, CheckError> {
    if n < 16 {
        return Err(CheckError::BadGrid(format!("series order {} below 16", n)));
    }
    if circle_samples < 8 {
        return Err(CheckError::BadGrid("need at least 8 angles".into()));
    }
    let check_id = format!("self-majorant:{}", c.name());
    let series = c.p_series(n)?;
    let tol = 1e-12;
    let mut worst_idx = 0usize;
    let mut worst = f64::INFINITY;
    for k in 0..=n {
        if series.coeff(k) < worst {
            worst = series.coeff(k);
            worst_idx = k;
        }
    }
    let radii: Vec<f64> = (1..=18).map(|i| 0.05 * i as f64).collect();
    let grid = GridSpec { n: radii.len() * circle_samples, eps: 1.0 - radii.last().unwrap() };
    if worst >= -tol {
        return Ok(Certificate {
            check_id,
            status: CheckStatus::Verified,
            witness: None,
            grid,
            tolerance: tol,
        });
    }
    // refutation attempt over the polar grid
    let mut best: Option<(f64, f64, f64)> = None; // (excess, r, theta)
    for &r in &radii {
        let p_r = c.p(r)?;
        for j in 0..circle_samples {
            let theta = 2.0 * PI * j as f64 / circle_samples as f64;
            let z = Complex64::from_polar(r, theta);
            let excess = c.p_complex(z).norm() - p_r * (1.0 + 1e-9);
            if excess > 0.0 && best.map_or(true, |(e, _, _)| excess > e) {
                best = Some((excess, r, theta));
            }
        }
    }
    Ok(match best {
        Some((excess, r, theta)) => Certificate {
            check_id,
            status: CheckStatus::Refuted,
            witness: Some(Witness::Polar { r, theta, excess }),
            grid,
            tolerance: tol,
        },
        None => Certificate {
            check_id,
            status: CheckStatus::Indeterminate,
            witness: Some(Witness::Coefficient { index: worst_idx, value: worst }),
            grid,
            tolerance: tol,
        },
    })
}

/// `τ = lim_{x→1⁻} φ(x)` by Richardson extrapolation of `φ(1 - 2^-k)`,
/// `k = 8..=20`; the last two extrapolants must agree to 1e-6.
pub fn tau_extrapolated(c: &Candidate) -> Result<f64, CheckError> {
    let ks: Vec<i32> = (8..=20).collect();
    let mut table: Vec<Vec<f64>> = Vec::with_capacity(ks.len());
    for (i, &k) in ks.iter().enumerate() {
        let h = (2.0f64).powi(-k);
        let mut row = vec![c.phi(1.0 - h)?];
        for j in 1..=i.min(6) {
            let prev_row = &table[i - 1];
            let cur = row[j - 1];
            let val = cur + (cur - prev_row[j - 1]) / ((2.0f64).powi(j as i32) - 1.0);
            row.push(val);
        }
        table.push(row);
    }
    let last = table.last().expect("nonempty");
    let prev = &table[table.len() - 2];
    let spread = (last.last().unwrap() - prev.last().unwrap()).abs();
    if spread > 1e-6 {
        return Err(CheckError::NoLimit { spread });
    }
    Ok(*last.last().unwrap())
}

/// `τ` from the closed form where the family has one, otherwise by
/// extrapolation.
pub fn tau(c: &Candidate) -> Result<f64, CheckError> {
    match c.tau_analytic() {
        Some(t) => Ok(t),
        None => tau_extrapolated(c),
    }
}

/// Sub-classification hook for the boundary family
/// `p = (1-x²)^-2 (1 + λ/log²(1/(1-x²)))`: `λ > 1` oscillates, `λ < 1` has
/// finite valence.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub enum SigmaClass {
    InfinitelyOscillatory,
    FiniteValence,
    Critical,
}

/// Valence classification of `C·p` by `C·τ` against 1.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize)]
pub enum Valence {
    Finite,
    Infinite,
    Boundary { sigma: Option<SigmaClass> },
}

/// Classifies the valence regime of `C·p`: `C·τ < 1` forces finitely many
/// zeros of any comparison solution, `C·τ > 1` forces oscillation, and the
/// boundary case reports the sigma-family hook when applicable.
pub fn classify_valence(c: &Candidate, scale: f64) -> Result<Valence, CheckError> {
    let t = tau(c)? * scale;
    let tol = 1e-9;
    Ok(if t > 1.0 + tol {
        Valence::Infinite
    } else if t < 1.0 - tol {
        Valence::Finite
    } else {
        let sigma = match *c {
            Candidate::ChuaquiSigma { lambda } => Some(if lambda > 1.0 + tol {
                SigmaClass::InfinitelyOscillatory
            } else if lambda < 1.0 - tol {
                SigmaClass::FiniteValence
            } else {
                SigmaClass::Critical
            }),
            _ => None,
        };
        Valence::Boundary { sigma }
    })
}

/// A locally univalent map whose Schwarzian can be evaluated on the disc:
/// either one of the registered closed forms or a truncated series.
#[derive(Debug, Clone)]
pub enum SchwarzianSource {
    /// `f(z) = z`, `Sf = 0`.
    Identity,
    /// Koebe `z/(1-z)²`, `Sf = -6/(1-z²)²`.
    Koebe,
    /// Quotient of the oscillatory-equation solutions, `Sf = 2(1+γ²)/(1-z²)²`.
    HilleQuotient { gamma: f64 },
    /// `z/(1-z²)`, `Sf = 6/(1+z²)²`.
    ZOverOneMinusZSq,
    /// `errf(rz)`, `Sf = -2r²(1+r²z²)`.
    ErrfScaled { r: f64 },
    /// Truncated series, trusted only within 0.9 of its radius heuristic.
    Series(crate::series::TaylorSeries),
}

impl SchwarzianSource {
    pub fn label(&self) -> String {
        match self {
            SchwarzianSource::Identity => "identity".into(),
            SchwarzianSource::Koebe => "koebe".into(),
            SchwarzianSource::HilleQuotient { gamma } => format!("hille-quotient({})", gamma),
            SchwarzianSource::ZOverOneMinusZSq => "z/(1-z^2)".into(),
            SchwarzianSource::ErrfScaled { r } => format!("errf({}z)", r),
            SchwarzianSource::Series(s) => format!("series(order={})", s.order()),
        }
    }
}

/// Sampled verification of `|Sf(z)| <= 2 p(|z|)` over a polar grid.
/// This is a check, not a proof; the certificate records the grid density.
pub fn verify_schwarzian_bound(
    f: &SchwarzianSource,
    c: &Candidate,
    radii: &[f64],
    angles: usize,
) -> Result<Certificate, CheckError> {
    if radii.is_empty() || angles < 4 {
        return Err(CheckError::BadGrid("need radii and at least 4 angles".into()));
    }
    let r_max = radii.iter().cloned().fold(0.0f64, f64::max);
    if r_max >= 1.0 {
        return Err(CheckError::BadGrid("radii must stay inside the disc".into()));
    }
    let series_s = match f {
        SchwarzianSource::Series(s) => {
            let sw = crate::series::schwarzian(s)?;
            let reliable = 0.9 * sw.radius_heuristic().min(s.radius_heuristic());
            if r_max > reliable {
                return Err(CheckError::SeriesDivergence { requested: r_max, reliable });
            }
            Some(sw)
        }
        _ => None,
    };
    let sf = |z: Complex64| -> Complex64 {
        let one = Complex64::new(1.0, 0.0);
        match f {
            SchwarzianSource::Identity => Complex64::new(0.0, 0.0),
            SchwarzianSource::Koebe => {
                let d = one - z * z;
                -6.0 * (d * d).inv()
            }
            SchwarzianSource::HilleQuotient { gamma } => {
                let d = one - z * z;
                2.0 * (1.0 + gamma * gamma) * (d * d).inv()
            }
            SchwarzianSource::ZOverOneMinusZSq => {
                let d = one + z * z;
                6.0 * (d * d).inv()
            }
            SchwarzianSource::ErrfScaled { r } => {
                -2.0 * r * r * (one + r * r * z * z)
            }
            SchwarzianSource::Series(_) => series_s.as_ref().expect("computed").eval_complex(z),
        }
    };
    let tol = 1e-9;
    let check_id = format!("schwarzian-bound:{}:{}", f.label(), c.name());
    let grid = GridSpec { n: radii.len() * angles, eps: 1.0 - r_max };
    let mut worst: Option<(f64, f64, f64)> = None;
    for &r in radii {
        let bound = 2.0 * c.p(r)?;
        for j in 0..angles {
            let theta = 2.0 * PI * j as f64 / angles as f64;
            let z = Complex64::from_polar(r, theta);
            let excess = sf(z).norm() - bound * (1.0 + tol);
            if excess > 0.0 && worst.map_or(true, |(e, _, _)| excess > e) {
                worst = Some((excess, r, theta));
            }
        }
    }
    Ok(match worst {
        Some((excess, r, theta)) => Certificate {
            check_id,
            status: CheckStatus::Refuted,
            witness: Some(Witness::Polar { r, theta, excess }),
            grid,
            tolerance: tol,
        },
        None => Certificate {
            check_id,
            status: CheckStatus::Verified,
            witness: None,
            grid,
            tolerance: tol,
        },
    })
}
