//! Catalogue of comparison functions `p(x)` for the univalence criterion
//! `|Sf(z)| <= 2 p(|z|)`: the five parametric theorem families, the classical
//! comparison functions, closed-form evaluators for `p`, `φ = p(x)(1-x²)²`
//! and the endpoint limit, power-series assembly, parameter-region predicates
//! and the critical constants where the regions close.
//!
//! Evaluation near the singular endpoint `x = 1` goes through argument-reduced
//! trigonometry and algebraically cancelled forms of `φ`, never through
//! `p·(1-x²)²` verbatim, so the monotonicity sweeps stay accurate to the last
//! grid point.

use crate::series::{
    cos_series, sec_series, tan_half_series, SeriesError, TaylorSeries,
};
use num_complex::Complex64;
use std::f64::consts::{FRAC_PI_2, PI};
use std::fmt;

/// Errors from family evaluation and region queries.
#[derive(Debug, Clone, PartialEq)]
pub enum FamilyError {
    /// `p(1)` requested where the family blows up.
    EndpointSingularity { x: f64 },
    /// `φ(1)` has no closed-form limit (custom series).
    LimitUnavailable,
    /// Parameter outside the mathematical domain of the operation.
    ParameterDomain(String),
    /// Argument outside `[-1, 1]`.
    OutOfDomain { x: f64 },
    /// Family has no power-series form about 0.
    NoSeriesForm,
    Series(SeriesError),
}

impl fmt::Display for FamilyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilyError::EndpointSingularity { x } => {
                write!(f, "family is singular at x = {}", x)
            }
            FamilyError::LimitUnavailable => write!(f, "endpoint limit unavailable"),
            FamilyError::ParameterDomain(msg) => write!(f, "parameter domain: {}", msg),
            FamilyError::OutOfDomain { x } => write!(f, "x = {} outside [-1, 1]", x),
            FamilyError::NoSeriesForm => write!(f, "family has no series form about 0"),
            FamilyError::Series(e) => write!(f, "series: {}", e),
        }
    }
}

impl std::error::Error for FamilyError {}

impl From<SeriesError> for FamilyError {
    fn from(e: SeriesError) -> Self {
        FamilyError::Series(e)
    }
}

/// `(sin(πx/2), cos(πx/2))` with the argument reduced near `±1` so that the
/// small factor is computed from `1 ∓ x` directly.
pub fn half_pi_sin_cos(x: f64) -> (f64, f64) {
    if x > 0.5 {
        let (s, c) = (FRAC_PI_2 * (1.0 - x)).sin_cos();
        (c, s)
    } else if x < -0.5 {
        let (s, c) = (FRAC_PI_2 * (1.0 + x)).sin_cos();
        (-c, s)
    } else {
        (FRAC_PI_2 * x).sin_cos()
    }
}

/// `tan(πx/2)`, accurate up to the pole at `|x| = 1`.
pub fn tan_half_pi(x: f64) -> f64 {
    let (s, c) = half_pi_sin_cos(x);
    s / c
}

/// `G(x) = (1-x²) tan(πx/2)`; `G(1) = 4/π`.
pub fn g_eval(x: f64) -> f64 {
    if x == 1.0 {
        return 4.0 / PI;
    }
    if x == -1.0 {
        return -4.0 / PI;
    }
    let (s, c) = half_pi_sin_cos(x);
    (1.0 - x * x) * s / c
}

/// `G'(x)`, computed as `(π/2)(1-x²) + tan(πx/2)·((π/2)G(x) - 2x)` to avoid
/// the cancellation of the two divergent pieces near `x = 1`; `G'(1) = 2/π`.
pub fn g_prime(x: f64) -> f64 {
    if x.abs() == 1.0 {
        return 2.0 / PI;
    }
    let t = tan_half_pi(x);
    FRAC_PI_2 * (1.0 - x * x) + t * (FRAC_PI_2 * g_eval(x) - 2.0 * x)
}

/// Second derivative of `G` from its power series
/// `G(x) = (π/2)x - (4/π) Σ_{k>=1} (λ(2k)-λ(2k+2)) x^(2k+1)`.
/// The coefficient differences decay like `9^-k`, so the series converges
/// rapidly on all of `[0, 1]`. Coefficients are computed once and cached.
pub fn g_second(x: f64) -> f64 {
    static COEFFS: std::sync::OnceLock<Vec<f64>> = std::sync::OnceLock::new();
    let coeffs = COEFFS.get_or_init(|| {
        (1..=40u32
            )
            .map(|k| {
                let diff = crate::series::dirichlet_lambda_diff(2 * k).expect("k >= 1");
                -4.0 / PI * diff * (2 * k + 1) as f64 * (2 * k) as f64
            })
            .collect()
    });
    let x2 = x * x;
    let mut acc = 0.0;
    let mut pow = x; // x^(2k-1)
    for c in coeffs {
        acc += c * pow;
        pow *= x2;
    }
    acc
}

/// `R(x) = G(x) / (πx/2)`, decreasing from `R(0) = 1` to `R(1) = 8/π²`.
pub fn r_eval(x: f64) -> f64 {
    debug_assert!((0.0..=1.0).contains(&x));
    if x == 1.0 {
        return 8.0 / (PI * PI);
    }
    if x < 1e-4 {
        // tan(u)/u = 1 + u²/3 + 2u⁴/15 + ...
        let u = FRAC_PI_2 * x;
        return (1.0 - x * x) * (1.0 + u * u / 3.0 + 2.0 * u.powi(4) / 15.0);
    }
    g_eval(x) / (FRAC_PI_2 * x)
}

/// `L(x) = (π/2) tan(πx/2) - (2λ/(1-μ)) x/(1-x²)` for `μ != 1`.
/// At `x = 1` the limit is `1/2` when `2λ/(1-μ) = 2` and `±∞` otherwise.
pub fn l_eval(x: f64, lambda: f64, mu: f64) -> Result<f64, FamilyError> {
    if mu == 1.0 {
        return Err(FamilyError::ParameterDomain("mu = 1 in L(x)".into()));
    }
    let c = 2.0 * lambda / (1.0 - mu);
    if x.abs() == 1.0 {
        return Ok(if (c - 2.0).abs() < 1e-14 {
            0.5 * x.signum()
        } else if c < 2.0 {
            f64::INFINITY * x.signum()
        } else {
            f64::NEG_INFINITY * x.signum()
        });
    }
    Ok(FRAC_PI_2 * tan_half_pi(x) - c * x / (1.0 - x * x))
}

/// A coefficient function: family identifier plus parameters. Everything a
/// candidate exposes (`p`, `φ`, series, generator, `τ`) is a pure function
/// of this value.
#[derive(Debug, Clone, PartialEq, serde::Serialize, serde::Deserialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum Candidate {
    /// `p` generated by `u = (1-x²)^a exp(λx²)`.
    Thm1 { a: f64, lambda: f64 },
    /// `p` generated by `u = (1-x²)^λ cos^μ(πx/2)`.
    Thm2 { lambda: f64, mu: f64 },
    /// `p` generated by `u = (1-x²)^a (1+x²)^(-b)`.
    Thm3 { a: f64, b: f64 },
    /// `p = 2λπx tan(πx/2) + π²/4 - (2λ + 4λ²x²)`, from `u = cos(πx/2) e^(λx²)`.
    Thm4 { lambda: f64 },
    /// `p = (π²/4)(1 - λ² sin² + 2λ sin²/cos - λ cos)` at `πx/2`,
    /// from `u = cos(πx/2) exp(-λ cos(πx/2))`.
    Thm5 { lambda: f64 },
    /// `p = (1+γ²)(1-x²)^(-2)`: the sharp oscillatory counterexample.
    Hille { gamma: f64 },
    /// Constant `p = π²/4 + δ`.
    ConstPi { delta: f64 },
    /// `p = 2(1-x²)^(-1)`.
    TwoOver,
    /// `p = (1+μ)(1-μx²)(1-x²)^(-2)`, generated by `(1-x²)^((μ+1)/2)`.
    NehariMu1 { mu: f64 },
    /// `p = (1-μ²)(1-x²)^(-2) + μ(2+μ)(1+x²)^(-2)`.
    NehariMu2 { mu: f64 },
    /// `p = (π²/4)(1-λ) + λ(1-λ)((π/2)tan(πx/2) - 2x/(1-x²))²`.
    Beesack { lambda: f64 },
    /// `p = (1-x²)^(-2) (1 + λ (log 1/(1-x²))^(-2))` on `(0,1)`, with an
    /// evaluation floor at `x = 1e-6` to dodge the log singularity at 0.
    ChuaquiSigma { lambda: f64 },
    /// Arbitrary even series coefficient function.
    Custom { series: TaylorSeries },
}

pub use Candidate::*;

const CHUAQUI_FLOOR: f64 = 1e-6;

impl Candidate {
    pub fn thm1(a: f64, lambda: f64) -> Self {
        Thm1 { a, lambda }
    }
    pub fn thm2(lambda: f64, mu: f64) -> Self {
        Thm2 { lambda, mu }
    }
    pub fn thm3(a: f64, b: f64) -> Self {
        Thm3 { a, b }
    }
    pub fn thm4(lambda: f64) -> Self {
        Thm4 { lambda }
    }
    pub fn thm5(lambda: f64) -> Self {
        Thm5 { lambda }
    }
    pub fn hille(gamma: f64) -> Self {
        Hille { gamma }
    }
    pub fn const_pi(delta: f64) -> Self {
        ConstPi { delta }
    }

    /// Short identifier used in certificates and CLI output.
    pub fn name(&self) -> String {
        match self {
            Thm1 { a, lambda } => format!("thm1(a={}, lambda={})", a, lambda),
            Thm2 { lambda, mu } => format!("thm2(lambda={}, mu={})", lambda, mu),
            Thm3 { a, b } => format!("thm3(a={}, b={})", a, b),
            Thm4 { lambda } => format!("thm4(lambda={})", lambda),
            Thm5 { lambda } => format!("thm5(lambda={})", lambda),
            Hille { gamma } => format!("hille(gamma={})", gamma),
            ConstPi { delta } => format!("const_pi(delta={})", delta),
            TwoOver => "two_over".into(),
            NehariMu1 { mu } => format!("nehari_mu1(mu={})", mu),
            NehariMu2 { mu } => format!("nehari_mu2(mu={})", mu),
            Beesack { lambda } => format!("beesack(lambda={})", lambda),
            ChuaquiSigma { lambda } => format!("chuaqui_sigma(lambda={})", lambda),
            Custom { series } => format!("custom(order={})", series.order()),
        }
    }

    /// Evaluates `p(x)` on `[-1, 1]`. Families that blow up at the endpoint
    /// report [`FamilyError::EndpointSingularity`] when `|x| = 1`.
    pub fn p(&self, x: f64) -> Result<f64, FamilyError> {
        if !(-1.0..=1.0).contains(&x) {
            return Err(FamilyError::OutOfDomain { x });
        }
        let x2 = x * x;
        let omx2 = 1.0 - x2;
        if x.abs() == 1.0 {
            return self.p_at_endpoint(x);
        }
        Ok(match *self {
            Thm1 { a, lambda } => {
                (2.0 * a + (2.0 * a - 4.0 * a * a) * x2) / (omx2 * omx2)
                    + 8.0 * a * lambda * x2 / omx2
                    - (4.0 * lambda * lambda * x2 + 2.0 * lambda)
            }
            Thm2 { lambda, mu } => {
                if mu == 1.0 {
                    let t = tan_half_pi(x);
                    4.0 * lambda * (1.0 - lambda) * x2 / (omx2 * omx2)
                        + 2.0 * lambda / omx2
                        + PI * PI / 4.0
                        - 2.0 * lambda * PI * x * t / omx2
                } else {
                    // cancellation-free split: all four pieces are positive
                    // inside the admissible region
                    let l = l_eval(x, lambda, mu)?;
                    4.0 * lambda * (1.0 - lambda - mu) / (1.0 - mu) * x2 / (omx2 * omx2)
                        + 2.0 * lambda / omx2
                        + mu * PI * PI / 4.0
                        + mu * (1.0 - mu) * l * l
                }
            }
            Thm3 { a, b } => {
                let opx2 = 1.0 + x2;
                ((2.0 * a - 4.0 * a * b) + x2 * (2.0 * a + 4.0 * a * b - 4.0 * a * a))
                    / (omx2 * omx2)
                    + ((2.0 * b + 4.0 * a * b) + x2 * (4.0 * a * b - 2.0 * b - 4.0 * b * b))
                        / (opx2 * opx2)
            }
            Thm4 { lambda } => {
                2.0 * lambda * PI * x * tan_half_pi(x) + PI * PI / 4.0
                    - (2.0 * lambda + 4.0 * lambda * lambda * x2)
            }
            Thm5 { lambda } => {
                let (s, v) = half_pi_sin_cos(x);
                let s2 = s * s;
                PI * PI / 4.0
                    * (1.0 - lambda * lambda * s2 + 2.0 * lambda * s2 / v - lambda * v)
            }
            Hille { gamma } => (1.0 + gamma * gamma) / (omx2 * omx2),
            ConstPi { delta } => PI * PI / 4.0 + delta,
            TwoOver => 2.0 / omx2,
            NehariMu1 { mu } => (1.0 + mu) * (1.0 - mu * x2) / (omx2 * omx2),
            NehariMu2 { mu } => {
                let opx2 = 1.0 + x2;
                (1.0 - mu * mu) / (omx2 * omx2) + mu * (2.0 + mu) / (opx2 * opx2)
            }
            Beesack { lambda } => {
                let m = FRAC_PI_2 * tan_half_pi(x) - 2.0 * x / omx2;
                PI * PI / 4.0 * (1.0 - lambda) + lambda * (1.0 - lambda) * m * m
            }
            ChuaquiSigma { lambda } => {
                let xx = x.abs().max(CHUAQUI_FLOOR);
                let o = 1.0 - xx * xx;
                (1.0 + lambda / (1.0 / o).ln().powi(2)) / (o * o)
            }
            Custom { ref series } => series.eval(x),
        })
    }

    fn p_at_endpoint(&self, x: f64) -> Result<f64, FamilyError> {
        let fail = Err(FamilyError::EndpointSingularity { x });
        match *self {
            Thm1 { a, lambda } if a == 0.0 => Ok(-(4.0 * lambda * lambda + 2.0 * lambda)),
            Thm2 { lambda, mu } if lambda == 0.0 && (mu == 0.0 || mu == 1.0) => {
                Ok(mu * PI * PI / 4.0)
            }
            Thm4 { lambda } | Thm5 { lambda } if lambda == 0.0 => Ok(PI * PI / 4.0),
            ConstPi { delta } => Ok(PI * PI / 4.0 + delta),
            NehariMu2 { mu } if mu == 1.0 => Ok(0.75),
            Beesack { lambda } => {
                Ok(PI * PI / 4.0 * (1.0 - lambda) + lambda * (1.0 - lambda) * 0.25)
            }
            Custom { ref series } => Ok(series.eval(x)),
            _ => fail,
        }
    }

    /// Evaluates `φ(x) = p(x)(1-x²)²` on `[-1, 1]` through the cancelled
    /// closed forms; at `|x| = 1` the analytic limit `τ` is returned.
    pub fn phi(&self, x: f64) -> Result<f64, FamilyError> {
        if !(-1.0..=1.0).contains(&x) {
            return Err(FamilyError::OutOfDomain { x });
        }
        if x.abs() == 1.0 {
            return self.tau_analytic().ok_or(FamilyError::LimitUnavailable);
        }
        let x2 = x * x;
        let omx2 = 1.0 - x2;
        Ok(match *self {
            Thm1 { a, lambda } => {
                // φ = A + Bx² + Cx⁴ + Dx⁶
                let aa = 2.0 * (a - lambda);
                let bb = 2.0 * (a - 2.0 * a * a + 4.0 * a * lambda - 2.0 * lambda * lambda
                    + 2.0 * lambda);
                let cc = -2.0 * lambda * (4.0 * a - 4.0 * lambda + 1.0);
                let dd = -4.0 * lambda * lambda;
                aa + x2 * (bb + x2 * (cc + x2 * dd))
            }
            Thm2 { lambda, mu } => {
                let g = g_eval(x);
                4.0 * lambda * (1.0 - lambda) * x2
                    + 2.0 * lambda * omx2
                    + mu * PI * PI / 4.0 * omx2 * omx2
                    + mu * (1.0 - mu) * PI * PI / 4.0 * g * g
                    - 2.0 * mu * lambda * PI * x * g
            }
            Thm3 { a, b } => {
                let t = omx2 / (1.0 + x2);
                let n1 = (2.0 * a - 4.0 * a * b) + x2 * (2.0 * a + 4.0 * a * b - 4.0 * a * a);
                let n2 = (2.0 * b + 4.0 * a * b) + x2 * (4.0 * a * b - 2.0 * b - 4.0 * b * b);
                n1 + n2 * t * t
            }
            Thm4 { lambda } => {
                let g = g_eval(x);
                omx2 * omx2 * (PI * PI / 4.0 - 2.0 * lambda - 4.0 * lambda * lambda * x2)
                    + 2.0 * lambda * PI * x * omx2 * g
            }
            Thm5 { lambda } => {
                let (s, v) = half_pi_sin_cos(x);
                let s2 = s * s;
                PI * PI / 4.0
                    * (omx2 * omx2 * (1.0 - lambda * lambda * s2 - lambda * v)
                        + 2.0 * lambda * s2 * omx2 * omx2 / v)
            }
            Hille { gamma } => 1.0 + gamma * gamma,
            ConstPi { delta } => (PI * PI / 4.0 + delta) * omx2 * omx2,
            TwoOver => 2.0 * omx2,
            NehariMu1 { mu } => (1.0 + mu) * (1.0 - mu * x2),
            NehariMu2 { mu } => {
                let t = omx2 / (1.0 + x2);
                (1.0 - mu * mu) + mu * (2.0 + mu) * t * t
            }
            Beesack { lambda } => {
                let inner = FRAC_PI_2 * g_eval(x) - 2.0 * x;
                PI * PI / 4.0 * (1.0 - lambda) * omx2 * omx2
                    + lambda * (1.0 - lambda) * inner * inner
            }
            ChuaquiSigma { lambda } => {
                let xx = x.abs().max(CHUAQUI_FLOOR);
                1.0 + lambda / (1.0 / (1.0 - xx * xx)).ln().powi(2)
            }
            Custom { ref series } => series.eval(x) * omx2 * omx2,
        })
    }

    /// `p(z)` for complex arguments, used by the self-majorance refutation
    /// sampler and the Schwarzian bound checks.
    pub fn p_complex(&self, z: Complex64) -> Complex64 {
        let one = Complex64::new(1.0, 0.0);
        let z2 = z * z;
        let omz2 = one - z2;
        let pi = Complex64::new(PI, 0.0);
        match *self {
            Thm1 { a, lambda } => {
                (2.0 * a + (2.0 * a - 4.0 * a * a) * z2) / (omz2 * omz2)
                    + 8.0 * a * lambda * z2 / omz2
                    - (4.0 * lambda * lambda * z2 + 2.0 * lambda)
            }
            Thm2 { lambda, mu } => {
                let t = (pi * z / 2.0).tan();
                4.0 * lambda * (1.0 - lambda) * z2 / (omz2 * omz2)
                    + 2.0 * lambda / omz2
                    + PI * PI / 4.0 * mu
                    + mu * (1.0 - mu) * PI * PI / 4.0 * t * t
                    - 2.0 * mu * lambda * PI * z * t / omz2
            }
            Thm3 { a, b } => {
                let opz2 = one + z2;
                ((2.0 * a - 4.0 * a * b) + z2 * (2.0 * a + 4.0 * a * b - 4.0 * a * a))
                    / (omz2 * omz2)
                    + ((2.0 * b + 4.0 * a * b) + z2 * (4.0 * a * b - 2.0 * b - 4.0 * b * b))
                        / (opz2 * opz2)
            }
            Thm4 { lambda } => {
                2.0 * lambda * PI * z * (pi * z / 2.0).tan() + PI * PI / 4.0
                    - (2.0 * lambda + 4.0 * lambda * lambda * z2)
            }
            Thm5 { lambda } => {
                let v = (pi * z / 2.0).cos();
                let s2 = one - v * v;
                PI * PI / 4.0
                    * (one - lambda * lambda * s2 + 2.0 * lambda * s2 / v - lambda * v)
            }
            Hille { gamma } => (1.0 + gamma * gamma) * (omz2 * omz2).inv(),
            ConstPi { delta } => Complex64::new(PI * PI / 4.0 + delta, 0.0),
            TwoOver => 2.0 * omz2.inv(),
            NehariMu1 { mu } => (1.0 + mu) * (one - mu * z2) / (omz2 * omz2),
            NehariMu2 { mu } => {
                let opz2 = one + z2;
                (1.0 - mu * mu) / (omz2 * omz2) + mu * (2.0 + mu) / (opz2 * opz2)
            }
            Beesack { lambda } => {
                let m = pi / 2.0 * (pi * z / 2.0).tan() - 2.0 * z / omz2;
                PI * PI / 4.0 * (1.0 - lambda) + lambda * (1.0 - lambda) * m * m
            }
            ChuaquiSigma { lambda } => {
                let log = omz2.inv().ln();
                (one + lambda / (log * log)) / (omz2 * omz2)
            }
            Custom { ref series } => series.eval_complex(z),
        }
    }

    /// Even power series of `p` about 0, assembled from the series primitives.
    /// Fails for the sigma family, which is not analytic at the origin.
    pub fn p_series(&self, n: usize) -> Result<TaylorSeries, FamilyError> {
        let g1 = geom_x2(n); // 1/(1-x²)
        let g2 = geom_x2_sq(n); // 1/(1-x²)²
        Ok(match *self {
            Thm1 { a, lambda } => {
                let head = even_poly(&[2.0 * a, 2.0 * a - 4.0 * a * a], n);
                let mid = TaylorSeries::monomial(8.0 * a * lambda, 2, n).mul(&g1);
                let tail = even_poly(&[2.0 * lambda, 4.0 * lambda * lambda], n);
                head.mul(&g2).add(&mid).sub(&tail)
            }
            Thm2 { lambda, mu } => {
                if mu == 1.0 {
                    // direct split; the L-form divides by 1-μ
                    let tan = tan_half_series(n.max(1))?;
                    let xtan = TaylorSeries::monomial(1.0, 1, n).mul(&tan);
                    let t1 = TaylorSeries::monomial(4.0 * lambda * (1.0 - lambda), 2, n).mul(&g2);
                    let t2 = g1.scale(2.0 * lambda);
                    let t3 = TaylorSeries::constant(PI * PI / 4.0, n);
                    let t5 = xtan.mul(&g1).scale(2.0 * lambda * PI);
                    t1.add(&t2).add(&t3).sub(&t5)
                } else {
                    let c = 2.0 * lambda / (1.0 - mu);
                    let l = tan_half_series(n.max(1))?
                        .scale(FRAC_PI_2)
                        .sub(&TaylorSeries::monomial(c, 1, n).mul(&g1));
                    let t1 = TaylorSeries::monomial(
                        4.0 * lambda * (1.0 - lambda - mu) / (1.0 - mu),
                        2,
                        n,
                    )
                    .mul(&g2);
                    let t2 = g1.scale(2.0 * lambda);
                    let t3 = TaylorSeries::constant(mu * PI * PI / 4.0, n);
                    let t4 = l.mul(&l).scale(mu * (1.0 - mu));
                    t1.add(&t2).add(&t3).add(&t4)
                }
            }
            Thm3 { a, b } => {
                let h2 = alt_x2_sq(n); // 1/(1+x²)²
                let n1 = even_poly(
                    &[2.0 * a - 4.0 * a * b, 2.0 * a + 4.0 * a * b - 4.0 * a * a],
                    n,
                );
                let n2 = even_poly(
                    &[2.0 * b + 4.0 * a * b, 4.0 * a * b - 2.0 * b - 4.0 * b * b],
                    n,
                );
                n1.mul(&g2).add(&n2.mul(&h2))
            }
            Thm4 { lambda } => {
                let xtan = TaylorSeries::monomial(1.0, 1, n).mul(&tan_half_series(n.max(1))?);
                xtan.scale(2.0 * lambda * PI)
                    .add(&even_poly(
                        &[PI * PI / 4.0 - 2.0 * lambda, -4.0 * lambda * lambda],
                        n,
                    ))
            }
            Thm5 { lambda } => {
                let sec_half = sec_series(n).scale_argument(FRAC_PI_2);
                let cos_half = cos_series(n).scale_argument(FRAC_PI_2);
                let cos_full = cos_series(n).scale_argument(PI);
                let mut acc = TaylorSeries::constant(1.0 - lambda * lambda + lambda * lambda / 2.0, n);
                acc = acc.add(&sec_half.scale(2.0 * lambda));
                acc = acc.add(&cos_full.scale(lambda * lambda / 2.0));
                acc = acc.sub(&cos_half.scale(3.0 * lambda));
                acc.scale(PI * PI / 4.0)
            }
            Hille { gamma } => g2.scale(1.0 + gamma * gamma),
            ConstPi { delta } => TaylorSeries::constant(PI * PI / 4.0 + delta, n),
            TwoOver => g1.scale(2.0),
            NehariMu1 { mu } => even_poly(&[1.0 + mu, -mu * (1.0 + mu)], n).mul(&g2),
            NehariMu2 { mu } => {
                let h2 = alt_x2_sq(n);
                g2.scale(1.0 - mu * mu).add(&h2.scale(mu * (2.0 + mu)))
            }
            Beesack { lambda } => {
                let m = tan_half_series(n.max(1))?
                    .scale(FRAC_PI_2)
                    .sub(&TaylorSeries::monomial(2.0, 1, n).mul(&g1));
                TaylorSeries::constant(PI * PI / 4.0 * (1.0 - lambda), n)
                    .add(&m.mul(&m).scale(lambda * (1.0 - lambda)))
            }
            ChuaquiSigma { .. } => return Err(FamilyError::NoSeriesForm),
            Custom { ref series } => series.truncated(n),
        })
    }

    /// Closed-form `τ = lim_{x→1⁻} p(x)(1-x²)²` where known.
    pub fn tau_analytic(&self) -> Option<f64> {
        match *self {
            Thm1 { a, .. } | Thm3 { a, .. } => Some(4.0 * a * (1.0 - a)),
            Thm2 { lambda, mu } => Some(4.0 * (lambda + mu) * (1.0 - lambda - mu)),
            Thm4 { .. } | Thm5 { .. } => Some(0.0),
            Hille { gamma } => Some(1.0 + gamma * gamma),
            ConstPi { .. } | TwoOver | Beesack { .. } => Some(0.0),
            NehariMu1 { mu } => Some((1.0 + mu) * (1.0 - mu)),
            NehariMu2 { mu } => Some(1.0 - mu * mu),
            ChuaquiSigma { .. } => Some(1.0),
            Custom { .. } => None,
        }
    }

    /// Closed-form generator `u(x)` with `u'' + p u = 0` where one exists
    /// (normalization arbitrary).
    pub fn generator_u(&self, x: f64) -> Option<f64> {
        let omx2 = 1.0 - x * x;
        match *self {
            Thm1 { a, lambda } => Some(omx2.powf(a) * (lambda * x * x).exp()),
            Thm2 { lambda, mu } => {
                let (_, c) = half_pi_sin_cos(x);
                Some(omx2.powf(lambda) * c.powf(mu))
            }
            Thm3 { a, b } => Some(omx2.powf(a) * (1.0 + x * x).powf(-b)),
            Thm4 { lambda } => {
                let (_, c) = half_pi_sin_cos(x);
                Some(c * (lambda * x * x).exp())
            }
            Thm5 { lambda } => {
                let (_, c) = half_pi_sin_cos(x);
                Some(c * (-lambda * c).exp())
            }
            Hille { gamma } => {
                let theta = 0.5 * gamma * ((1.0 + x) / (1.0 - x)).ln();
                Some(omx2.sqrt() * theta.cos())
            }
            ConstPi { delta } => {
                let w2 = PI * PI / 4.0 + delta;
                if w2 > 0.0 {
                    Some((w2.sqrt() * x).cos())
                } else {
                    None
                }
            }
            TwoOver => Some(omx2),
            NehariMu1 { mu } => Some(omx2.powf((mu + 1.0) / 2.0)),
            NehariMu2 { mu } => {
                Some(omx2.powf((mu + 1.0) / 2.0) * (1.0 + x * x).powf(-mu / 2.0))
            }
            Beesack { .. } | ChuaquiSigma { .. } | Custom { .. } => None,
        }
    }

    /// Human-readable description of the generator, if any.
    pub fn generator_description(&self) -> Option<String> {
        match *self {
            Thm1 { a, lambda } => Some(format!("(1-x^2)^{} * exp({} x^2)", a, lambda)),
            Thm2 { lambda, mu } => Some(format!("(1-x^2)^{} * cos^{}(pi x/2)", lambda, mu)),
            Thm3 { a, b } => Some(format!("(1-x^2)^{} * (1+x^2)^-{}", a, b)),
            Thm4 { lambda } => Some(format!("cos(pi x/2) * exp({} x^2)", lambda)),
            Thm5 { lambda } => Some(format!("cos(pi x/2) * exp(-{} cos(pi x/2))", lambda)),
            Hille { gamma } => Some(format!(
                "(1-x^2)^(1/2) * cos({}/2 * log((1+x)/(1-x)))",
                gamma
            )),
            ConstPi { delta } => Some(format!("cos(sqrt(pi^2/4 + {}) x)", delta)),
            TwoOver => Some("1 - x^2".into()),
            NehariMu1 { mu } => Some(format!("(1-x^2)^(({}+1)/2)", mu)),
            NehariMu2 { mu } => Some(format!("(1-x^2)^(({mu}+1)/2) * (1+x^2)^(-{mu}/2)", mu = mu)),
            Beesack { .. } | ChuaquiSigma { .. } | Custom { .. } => None,
        }
    }

    /// Analytic vanishing order of the generator at `x = 1`, where known.
    pub fn multiplicity_analytic(&self) -> Option<f64> {
        match *self {
            Thm1 { a, .. } | Thm3 { a, .. } => Some(a),
            Thm2 { lambda, mu } => Some(lambda + mu),
            Thm4 { .. } | Thm5 { .. } | TwoOver => Some(1.0),
            ConstPi { delta } if delta == 0.0 => Some(1.0),
            NehariMu1 { mu } => Some((mu + 1.0) / 2.0),
            NehariMu2 { mu } => Some((mu + 1.0) / 2.0),
            _ => None,
        }
    }
}

fn even_poly(even_coeffs: &[f64], n: usize) -> TaylorSeries {
    let mut v = vec![0.0; n + 1];
    for (k, &c) in even_coeffs.iter().enumerate() {
        if 2 * k <= n {
            v[2 * k] = c;
        }
    }
    TaylorSeries::new(v, crate::series::Parity::Even).expect("finite")
}

fn geom_x2(n: usize) -> TaylorSeries {
    let mut v = vec![0.0; n + 1];
    let mut k = 0;
    while 2 * k <= n {
        v[2 * k] = 1.0;
        k += 1;
    }
    TaylorSeries::new(v, crate::series::Parity::Even).expect("finite")
}

fn geom_x2_sq(n: usize) -> TaylorSeries {
    let mut v = vec![0.0; n + 1];
    let mut k = 0;
    while 2 * k <= n {
        v[2 * k] = (k + 1) as f64;
        k += 1;
    }
    TaylorSeries::new(v, crate::series::Parity::Even).expect("finite")
}

fn alt_x2_sq(n: usize) -> TaylorSeries {
    let mut v = vec![0.0; n + 1];
    let mut k = 0;
    while 2 * k <= n {
        v[2 * k] = if k % 2 == 0 { (k + 1) as f64 } else { -((k + 1) as f64) };
        k += 1;
    }
    TaylorSeries::new(v, crate::series::Parity::Even).expect("finite")
}

// ---------------------------------------------------------------------------
// Parameter regions
// ---------------------------------------------------------------------------

/// Region variant: `A` is the univalence-criterion region, `B` the
/// self-majorant sub-region. For theorems 2, 4 and 5 the variants coincide.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub enum Variant {
    A,
    B,
}

/// A membership query against one theorem's parameter region.
#[derive(Debug, Clone, PartialEq)]
pub struct RegionQuery {
    pub theorem: u8,
    pub variant: Variant,
    pub params: Vec<f64>,
}

/// Result of a region query; `Outside` names the first violated inequality.
#[derive(Debug, Clone, PartialEq, serde::Serialize, serde::Deserialize)]
pub enum RegionVerdict {
    Inside,
    Outside { violated: String, residual: f64 },
}

impl RegionVerdict {
    pub fn is_inside(&self) -> bool {
        matches!(self, RegionVerdict::Inside)
    }
}

/// Boundary tolerance: residuals within this of the boundary count as inside.
pub const REGION_TOL: f64 = 1e-12;

/// Checks a list of inequalities `value >= 0`, returning the first violated.
fn check_all(items: &[(&str, f64)]) -> RegionVerdict {
    for (id, residual) in items {
        if *residual < -REGION_TOL {
            return RegionVerdict::Outside { violated: (*id).into(), residual: *residual };
        }
    }
    RegionVerdict::Inside
}

/// Lower boundary of the theorem-1 region: `λ >= (1-2a)/4`.
pub fn thm1_lower(a: f64) -> f64 {
    (1.0 - 2.0 * a) / 4.0
}

/// Upper boundary of the theorem-1 region: `λ <= ((1+2a) - sqrt(1+6a))/2`.
pub fn thm1_upper(a: f64) -> f64 {
    ((1.0 + 2.0 * a) - (1.0 + 6.0 * a).sqrt()) / 2.0
}

/// Extra lower boundary of the theorem-1 self-majorant region:
/// `λ >= a - sqrt(6a)/2`.
pub fn thm1_lower_sm(a: f64) -> f64 {
    a - (6.0 * a).sqrt() / 2.0
}

/// Lower boundary of the theorem-3 region: `b >= (-(5+4a) + sqrt(25+48a))/4`.
pub fn thm3_lower(a: f64) -> f64 {
    (-(5.0 + 4.0 * a) + (25.0 + 48.0 * a).sqrt()) / 4.0
}

/// `S(a) = (-1 + sqrt(1+4a(1-a)))/2`, one of the theorem-3 upper bounds.
pub fn thm3_s(a: f64) -> f64 {
    (-1.0 + (1.0 + 4.0 * a * (1.0 - a)).sqrt()) / 2.0
}

/// `T(a) = (-4a-3 + sqrt(9+48a))/4`, the third theorem-3 upper bound that the
/// two-bound form leaves implicit (`S <= T` on `[a0, 1]` makes it redundant
/// there, but both predicates are exposed for cross-checking).
pub fn thm3_t(a: f64) -> f64 {
    (-4.0 * a - 3.0 + (9.0 + 48.0 * a).sqrt()) / 4.0
}

/// Region membership for the five theorems, with a 1e-12 boundary tolerance
/// counted as inside. Theorem-3 variant B uses the two-bound form; see
/// [`thm3_region_b_three_bound`] for the three-bound variant.
pub fn region_contains(q: &RegionQuery) -> Result<RegionVerdict, FamilyError> {
    let need = |k: usize| -> Result<(), FamilyError> {
        if q.params.len() != k {
            Err(FamilyError::ParameterDomain(format!(
                "theorem {} expects {} parameter(s), got {}",
                q.theorem,
                k,
                q.params.len()
            )))
        } else {
            Ok(())
        }
    };
    match q.theorem {
        1 => {
            need(2)?;
            let (a, lambda) = (q.params[0], q.params[1]);
            let mut items = vec![
                ("a >= 1/2", a - 0.5),
                ("a <= 1", 1.0 - a),
                ("lambda >= (1-2a)/4", lambda - thm1_lower(a)),
                ("lambda <= ((1+2a)-sqrt(1+6a))/2", thm1_upper(a) - lambda),
            ];
            if q.variant == Variant::B {
                items.push(("lambda >= a - sqrt(6a)/2", lambda - thm1_lower_sm(a)));
            }
            Ok(check_all(&items))
        }
        2 => {
            need(2)?;
            let (lambda, mu) = (q.params[0], q.params[1]);
            Ok(check_all(&[
                ("lambda >= 0", lambda),
                ("mu >= 0", mu),
                ("lambda+mu >= 1/2", lambda + mu - 0.5),
                ("lambda+mu <= 1", 1.0 - lambda - mu),
                ("lambda >= (1-mu)/2", lambda - (1.0 - mu) / 2.0),
                ("lambda <= 1-mu", 1.0 - mu - lambda),
            ]))
        }
        3 => {
            need(2)?;
            let (a, b) = (q.params[0], q.params[1]);
            let mut items = vec![
                ("a >= 1/2", a - 0.5),
                ("a <= 1", 1.0 - a),
                ("b >= (-(5+4a)+sqrt(25+48a))/4", b - thm3_lower(a)),
                ("b <= a - 1/2", a - 0.5 - b),
            ];
            if q.variant == Variant::B {
                items.push(("b >= a-1", b - (a - 1.0)));
                items.push(("b <= (-1+sqrt(1+4a(1-a)))/2", thm3_s(a) - b));
            }
            Ok(check_all(&items))
        }
        4 => {
            need(1)?;
            let lambda = q.params[0];
            let l0 = CriticalConstants::compute().lambda0_thm4;
            Ok(check_all(&[
                ("lambda >= 0", lambda),
                ("lambda <= lambda0", l0 - lambda),
            ]))
        }
        5 => {
            need(1)?;
            let lambda = q.params[0];
            let l0 = CriticalConstants::compute().lambda0_thm5;
            Ok(check_all(&[
                ("lambda >= 0", lambda),
                ("lambda <= lambda0", l0 - lambda),
            ]))
        }
        t => Err(FamilyError::ParameterDomain(format!("unknown theorem {}", t))),
    }
}

/// Theorem-3 variant B with all three competing upper bounds explicit.
pub fn thm3_region_b_three_bound(a: f64, b: f64) -> RegionVerdict {
    let base = region_contains(&RegionQuery { theorem: 3, variant: Variant::B, params: vec![a, b] })
        .expect("arity fixed");
    if let RegionVerdict::Outside { .. } = base {
        return base;
    }
    check_all(&[("b <= (-4a-3+sqrt(9+48a))/4", thm3_t(a) - b)])
}

/// The named critical constants of the parameter regions, each computed from
/// its closed form.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize)]
pub struct CriticalConstants {
    /// `((4+π²) - sqrt(16+π⁴))/8`: upper λ limit of theorem 4.
    pub lambda0_thm4: f64,
    /// `((4+5π²/4) - sqrt((4+5π²/4)² - 8π²))/π²`: upper λ limit of theorem 5.
    pub lambda0_thm5: f64,
    /// `(sqrt(3)+1)/4`: where the three theorem-3 upper bounds coincide.
    pub a0: f64,
    /// `(sqrt(7)+1)/4`: where the two theorem-3 lower bounds coincide.
    pub a1: f64,
    /// `1/2 + sqrt(2)/3`: crossover of the two theorem-1 lower bounds.
    pub thm1_crossover: f64,
}

impl CriticalConstants {
    pub fn compute() -> Self {
        let pi2 = PI * PI;
        let a = 4.0 + 1.25 * pi2;
        CriticalConstants {
            lambda0_thm4: ((4.0 + pi2) - (16.0 + pi2 * pi2).sqrt()) / 8.0,
            lambda0_thm5: (a - (a * a - 8.0 * pi2).sqrt()) / pi2,
            a0: (3.0f64.sqrt() + 1.0) / 4.0,
            a1: (7.0f64.sqrt() + 1.0) / 4.0,
            thm1_crossover: 0.5 + 2.0f64.sqrt() / 3.0,
        }
    }

    pub fn table(&self) -> Vec<(&'static str, f64)> {
        vec![
            ("lambda0_thm4", self.lambda0_thm4),
            ("lambda0_thm5", self.lambda0_thm5),
            ("a0", self.a0),
            ("a1", self.a1),
            ("thm1_crossover", self.thm1_crossover),
        ]
    }
}

/// JSON dump of the built-in family catalogue: identifier, parameter names,
/// parameter domain and generator description.
pub fn catalogue_json() -> String {
    let rows = vec![
        ("thm1", vec!["a", "lambda"], "1/2 <= a <= 1, (1-2a)/4 <= lambda <= ((1+2a)-sqrt(1+6a))/2", Some("(1-x^2)^a exp(lambda x^2)")),
        ("thm2", vec!["lambda", "mu"], "lambda, mu >= 0, 1/2 <= lambda+mu <= 1, (1-mu)/2 <= lambda <= 1-mu", Some("(1-x^2)^lambda cos^mu(pi x/2)")),
        ("thm3", vec!["a", "b"], "1/2 <= a <= 1, (-(5+4a)+sqrt(25+48a))/4 <= b <= a-1/2", Some("(1-x^2)^a (1+x^2)^-b")),
        ("thm4", vec!["lambda"], "0 <= lambda <= 0.402529...", Some("cos(pi x/2) exp(lambda x^2)")),
        ("thm5", vec!["lambda"], "0 <= lambda <= 0.266257...", Some("cos(pi x/2) exp(-lambda cos(pi x/2))")),
        ("hille", vec!["gamma"], "gamma > 0", Some("(1-x^2)^(1/2) cos((gamma/2) log((1+x)/(1-x)))")),
        ("const_pi", vec!["delta"], "delta > -pi^2/4", Some("cos(sqrt(pi^2/4+delta) x)")),
        ("two_over", vec![], "no parameters", Some("1-x^2")),
        ("nehari_mu1", vec!["mu"], "0 <= mu <= 1", Some("(1-x^2)^((mu+1)/2)")),
        ("nehari_mu2", vec!["mu"], "0 <= mu <= 1", Some("(1-x^2)^((mu+1)/2) (1+x^2)^(-mu/2)")),
        ("beesack", vec!["lambda"], "0 <= lambda < 1", None),
        ("chuaqui_sigma", vec!["lambda"], "lambda > 0, x in (0,1) floored at 1e-6", None),
        ("custom_series", vec!["coeffs"], "even series with positive radius", None),
    ];
    let items: Vec<String> = rows
        .into_iter()
        .map(|(name, params, domain, gen)| {
            let params: Vec<String> = params.iter().map(|p| format!("\"{}\"", p)).collect();
            let gen = match gen {
                Some(g) => format!("\"{}\"", g),
                None => "null".into(),
            };
            format!(
                "{{\"family\":\"{}\",\"arity\":{},\"params\":[{}],\"domain\":\"{}\",\"generator\":{}}}",
                name,
                params.len(),
                params.join(","),
                domain,
                gen
            )
        })
        .collect();
    format!("[{}]", items.join(","))
}
