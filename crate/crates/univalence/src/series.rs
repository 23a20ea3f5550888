//! Truncated real power-series arithmetic and the special series used by the
//! coefficient families: tan(πx/2), sec x, the Dirichlet lambda function and
//! the Euler numbers, plus the Schwarzian derivative as a series operator.
//!
//! A [`TaylorSeries`] is a plain vector of `f64` coefficients `c0..cN` about
//! the origin together with an advisory parity tag. All arithmetic is
//! coefficient-exact up to the truncation order; binary operations truncate
//! to the shorter operand.

use num_complex::Complex64;
use std::fmt;

/// Parity tag carried by a series. Advisory but checkable: an `Even` series
/// must have exactly zero odd-index coefficients, and dually for `Odd`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
    None,
}

/// Errors from series construction and arithmetic.
#[derive(Debug, Clone, PartialEq)]
pub enum SeriesError {
    /// A coefficient is NaN or infinite.
    NonFiniteCoefficient { index: usize },
    /// A parity tag contradicts a nonzero coefficient.
    ParityViolation { index: usize, value: f64 },
    /// Division by a series with zero constant term.
    DivisionByZeroConstantTerm,
    /// Composition with an inner series whose constant term is nonzero.
    CompositionNonzeroConstant,
    /// Schwarzian of a series with `c1 = 0`.
    NotLocallyUnivalent,
    /// Dirichlet lambda requires exponent `p >= 2`.
    InvalidExponent { p: u32 },
    /// Exact integer range exceeded at the reported order.
    OverflowAtOrder { order: usize },
    /// Operation needs a higher truncation order than supplied.
    OrderTooSmall { needed: usize },
    /// Degenerate Möbius coefficients (`ad - bc = 0` or `d = 0`).
    DegenerateMobius,
    /// Malformed JSON payload.
    Json(String),
}

impl fmt::Display for SeriesError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SeriesError::NonFiniteCoefficient { index } => {
                write!(f, "non-finite coefficient at index {}", index)
            }
            SeriesError::ParityViolation { index, value } => {
                write!(f, "parity violated at index {} (coefficient {})", index, value)
            }
            SeriesError::DivisionByZeroConstantTerm => {
                write!(f, "division by series with zero constant term")
            }
            SeriesError::CompositionNonzeroConstant => {
                write!(f, "composition requires inner series with zero constant term")
            }
            SeriesError::NotLocallyUnivalent => {
                write!(f, "schwarzian requires c1 != 0 (locally univalent at 0)")
            }
            SeriesError::InvalidExponent { p } => {
                write!(f, "dirichlet lambda requires p >= 2, got {}", p)
            }
            SeriesError::OverflowAtOrder { order } => {
                write!(f, "exact integer overflow at order {}", order)
            }
            SeriesError::OrderTooSmall { needed } => {
                write!(f, "series order too small, need at least {}", needed)
            }
            SeriesError::DegenerateMobius => {
                write!(f, "mobius map requires ad - bc != 0 and d != 0")
            }
            SeriesError::Json(msg) => write!(f, "series json: {}", msg),
        }
    }
}

impl std::error::Error for SeriesError {}

/// Truncated power series `c0 + c1 x + ... + cN x^N` over `f64`.
#[derive(Debug, Clone, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct TaylorSeries {
    coeffs: Vec<f64>,
    parity: Parity,
}

impl TaylorSeries {
    /// Builds a series from raw coefficients, validating finiteness and the
    /// parity tag. `coeffs[k]` is the coefficient of `x^k`.
    pub fn new(coeffs: Vec<f64>, parity: Parity) -> Result<Self, SeriesError> {
        assert!(!coeffs.is_empty(), "series needs at least the constant term");
        for (index, &c) in coeffs.iter().enumerate() {
            if !c.is_finite() {
                return Err(SeriesError::NonFiniteCoefficient { index });
            }
        }
        let s = TaylorSeries { coeffs, parity };
        s.check_parity()?;
        Ok(s)
    }

    /// Constant series `c` of the given truncation order.
    pub fn constant(c: f64, order: usize) -> Self {
        let mut coeffs = vec![0.0; order + 1];
        coeffs[0] = c;
        TaylorSeries { coeffs, parity: Parity::Even }
    }

    /// The monomial `c x^k` of the given truncation order (`k <= order`).
    pub fn monomial(c: f64, k: usize, order: usize) -> Self {
        assert!(k <= order);
        let mut coeffs = vec![0.0; order + 1];
        coeffs[k] = c;
        let parity = if k % 2 == 0 { Parity::Even } else { Parity::Odd };
        TaylorSeries { coeffs, parity }
    }

    /// Truncation order `N`.
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of `x^k`, zero beyond the truncation order.
    pub fn coeff(&self, k: usize) -> f64 {
        self.coeffs.get(k).copied().unwrap_or(0.0)
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    pub fn parity(&self) -> Parity {
        self.parity
    }

    /// Verifies the parity tag against the coefficients (exact zeros required).
    pub fn check_parity(&self) -> Result<(), SeriesError> {
        let offset = match self.parity {
            Parity::Even => 1,
            Parity::Odd => 0,
            Parity::None => return Ok(()),
        };
        for (index, &value) in self.coeffs.iter().enumerate() {
            if index % 2 == offset && value != 0.0 {
                return Err(SeriesError::ParityViolation { index, value });
            }
        }
        Ok(())
    }

    /// Copy truncated (or zero-extended) to the given order.
    pub fn truncated(&self, order: usize) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(order + 1, 0.0);
        TaylorSeries { coeffs, parity: self.parity }
    }

    pub fn add(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a - b)
    }

    fn zip_with(&self, other: &Self, f: impl Fn(f64, f64) -> f64) -> Self {
        let n = self.order().min(other.order());
        let coeffs = (0..=n).map(|k| f(self.coeff(k), other.coeff(k))).collect();
        let parity = if self.parity == other.parity { self.parity } else { Parity::None };
        TaylorSeries { coeffs, parity }
    }

    /// Product truncated to the shorter operand's order.
    pub fn mul(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        let mut coeffs = vec![0.0; n + 1];
        for i in 0..=n.min(self.order()) {
            let a = self.coeff(i);
            if a == 0.0 {
                continue;
            }
            for j in 0..=(n - i).min(other.order()) {
                coeffs[i + j] += a * other.coeff(j);
            }
        }
        let parity = match (self.parity, other.parity) {
            (Parity::Even, Parity::Even) | (Parity::Odd, Parity::Odd) => Parity::Even,
            (Parity::Even, Parity::Odd) | (Parity::Odd, Parity::Even) => Parity::Odd,
            _ => Parity::None,
        };
        TaylorSeries { coeffs, parity }
    }

    /// Scalar multiple.
    pub fn scale(&self, factor: f64) -> Self {
        let coeffs = self.coeffs.iter().map(|c| c * factor).collect();
        TaylorSeries { coeffs, parity: self.parity }
    }

    /// Argument substitution `x -> s x`, i.e. `c_k -> c_k s^k`.
    pub fn scale_argument(&self, s: f64) -> Self {
        let mut pow = 1.0;
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| {
                let v = c * pow;
                pow *= s;
                v
            })
            .collect();
        TaylorSeries { coeffs, parity: self.parity }
    }

    /// Long division, requires `other.c0 != 0`.
    pub fn div(&self, other: &Self) -> Result<Self, SeriesError> {
        let b0 = other.coeff(0);
        if b0 == 0.0 {
            return Err(SeriesError::DivisionByZeroConstantTerm);
        }
        let n = self.order().min(other.order());
        let mut coeffs = vec![0.0; n + 1];
        for k in 0..=n {
            let mut acc = self.coeff(k);
            for j in 1..=k {
                acc -= other.coeff(j) * coeffs[k - j];
            }
            coeffs[k] = acc / b0;
        }
        let parity = match (self.parity, other.parity) {
            (Parity::Even, Parity::Even) => Parity::Even,
            (Parity::Odd, Parity::Even) => Parity::Odd,
            _ => Parity::None,
        };
        Ok(TaylorSeries { coeffs, parity })
    }

    /// Composition `self(inner(x))`; the inner series must vanish at 0.
    /// The result is truncated at the shorter of the two orders.
    pub fn compose(&self, inner: &Self) -> Result<Self, SeriesError> {
        if inner.coeff(0) != 0.0 {
            return Err(SeriesError::CompositionNonzeroConstant);
        }
        let n = self.order().min(inner.order());
        // Horner over the truncated outer coefficients.
        let mut result = TaylorSeries::constant(self.coeff(n), n);
        for k in (0..n).rev() {
            result = result.mul(&inner.truncated(n));
            result.coeffs[0] += self.coeff(k);
        }
        result.parity = match (self.parity, inner.parity) {
            (p, Parity::Odd) => p,
            (_, Parity::Even) => Parity::Even,
            _ => Parity::None,
        };
        Ok(result)
    }

    /// Derivative, one order lower.
    pub fn differentiate(&self) -> Self {
        if self.order() == 0 {
            return TaylorSeries { coeffs: vec![0.0], parity: Parity::Even };
        }
        let coeffs = (1..=self.order()).map(|k| self.coeff(k) * k as f64).collect();
        let parity = match self.parity {
            Parity::Even => Parity::Odd,
            Parity::Odd => Parity::Even,
            Parity::None => Parity::None,
        };
        TaylorSeries { coeffs, parity }
    }

    /// Antiderivative with constant term fixed to 0, one order higher.
    pub fn integrate(&self) -> Self {
        let mut coeffs = vec![0.0; self.order() + 2];
        for k in 0..=self.order() {
            coeffs[k + 1] = self.coeff(k) / (k + 1) as f64;
        }
        let parity = match self.parity {
            Parity::Even => Parity::Odd,
            Parity::Odd => Parity::Even,
            Parity::None => Parity::None,
        };
        TaylorSeries { coeffs, parity }
    }

    /// Horner evaluation at a real point.
    pub fn eval(&self, x: f64) -> f64 {
        let mut acc = 0.0;
        for &c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Horner evaluation at a complex point.
    pub fn eval_complex(&self, z: Complex64) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for &c in self.coeffs.iter().rev() {
            acc = acc * z + c;
        }
        acc
    }

    /// Largest absolute coefficient.
    pub fn max_abs_coeff(&self) -> f64 {
        self.coeffs.iter().fold(0.0, |m, c| m.max(c.abs()))
    }

    /// Crude convergence-radius heuristic from the tail coefficient growth:
    /// `1 / max |c_k|^(1/k)` over the top half of the coefficients.
    pub fn radius_heuristic(&self) -> f64 {
        let n = self.order();
        let mut inv_r: f64 = 0.0;
        for k in (n / 2).max(1)..=n {
            let c = self.coeff(k).abs();
            if c > 0.0 {
                inv_r = inv_r.max(c.powf(1.0 / k as f64));
            }
        }
        if inv_r == 0.0 {
            f64::INFINITY
        } else {
            1.0 / inv_r
        }
    }

    /// JSON form `{order, parity, coeffs[]}` with 17 significant digits per
    /// coefficient (enough to round-trip `f64` exactly).
    pub fn to_json(&self) -> String {
        let parity = match self.parity {
            Parity::Even => "even",
            Parity::Odd => "odd",
            Parity::None => "none",
        };
        let coeffs: Vec<String> = self.coeffs.iter().map(|c| format!("{:.16e}", c)).collect();
        format!(
            "{{\"order\":{},\"parity\":\"{}\",\"coeffs\":[{}]}}",
            self.order(),
            parity,
            coeffs.join(",")
        )
    }

    /// Parses the JSON form produced by [`TaylorSeries::to_json`].
    pub fn from_json(text: &str) -> Result<Self, SeriesError> {
        let v: serde_json::Value =
            serde_json::from_str(text).map_err(|e| SeriesError::Json(e.to_string()))?;
        let parity = match v.get("parity").and_then(|p| p.as_str()) {
            Some("even") => Parity::Even,
            Some("odd") => Parity::Odd,
            Some("none") => Parity::None,
            other => return Err(SeriesError::Json(format!("bad parity field: {:?}", other))),
        };
        let coeffs = v
            .get("coeffs")
            .and_then(|c| c.as_array())
            .ok_or_else(|| SeriesError::Json("missing coeffs".into()))?
            .iter()
            .map(|c| c.as_f64().ok_or_else(|| SeriesError::Json("non-numeric coeff".into())))
            .collect::<Result<Vec<f64>, _>>()?;
        TaylorSeries::new(coeffs, parity)
    }
}

/// Kahan compensated accumulator.
#[derive(Default, Clone, Copy)]
struct Kahan {
    sum: f64,
    comp: f64,
}

impl Kahan {
    fn add(&mut self, x: f64) {
        let y = x - self.comp;
        let t = self.sum + y;
        self.comp = (t - self.sum) - y;
        self.sum = t;
    }
}

/// Euler–Maclaurin estimate of the tail `sum_{n>=a} (2n+1)^-p`.
fn lambda_tail(p: u32, a: u64) -> f64 {
    let m = 2.0 * a as f64 + 1.0;
    let fp = p as f64;
    // integral + f(a)/2 - f'(a)/12
    m.powi(1 - p as i32) / (2.0 * (fp - 1.0)) + 0.5 * m.powi(-(p as i32))
        + (fp / 6.0) * m.powi(-(p as i32) - 1)
}

/// Dirichlet lambda `λ(p) = Σ 1/(2n+1)^p` for integer `p >= 2`.
///
/// Sums up to 10^6 terms with compensated accumulation, then adds an
/// Euler–Maclaurin tail estimate; absolute error is below 1e-14.
pub fn dirichlet_lambda(p: u32) -> Result<f64, SeriesError> {
    if p < 2 {
        return Err(SeriesError::InvalidExponent { p });
    }
    let mut acc = Kahan::default();
    let mut n: u64 = 0;
    while n < 1_000_000 {
        let term = (2.0 * n as f64 + 1.0).powi(-(p as i32));
        if term < 1e-18 {
            break;
        }
        acc.add(term);
        n += 1;
    }
    Ok(acc.sum + lambda_tail(p, n))
}

/// The difference `λ(p) - λ(p+2)` computed without cancellation:
/// `Σ_{n>=1} (4n^2+4n) (2n+1)^-(p+2)`.
pub fn dirichlet_lambda_diff(p: u32) -> Result<f64, SeriesError> {
    if p < 2 {
        return Err(SeriesError::InvalidExponent { p });
    }
    let mut acc = Kahan::default();
    let mut n: u64 = 1;
    while n < 1_000_000 {
        let nf = n as f64;
        let term = (4.0 * nf * nf + 4.0 * nf) * (2.0 * nf + 1.0).powi(-(p as i32) - 2);
        if term < 1e-19 {
            break;
        }
        acc.add(term);
        n += 1;
    }
    Ok(acc.sum + lambda_tail(p, n) - lambda_tail(p + 2, n))
}

/// Dirichlet beta `β(s) = Σ (-1)^n/(2n+1)^s` at odd integer `s >= 1`.
///
/// Summed in positive pairs `(4k+1)^-s - (4k+3)^-s` with an
/// Euler–Maclaurin tail; used as the cross-check identity for the Euler
/// numbers, not on any hot path.
pub fn dirichlet_beta_odd(s: u32) -> f64 {
    assert!(s >= 1 && s % 2 == 1, "beta cross-check defined for odd s >= 1");
    let si = s as i32;
    let pair = |k: f64| (4.0 * k + 1.0).powi(-si) - (4.0 * k + 3.0).powi(-si);
    let mut acc = Kahan::default();
    let mut k: u64 = 0;
    while k < 2_000_000 {
        let term = pair(k as f64);
        if term < 1e-18 {
            break;
        }
        acc.add(term);
        k += 1;
    }
    let kf = k as f64;
    // tail: integral of the pair function + pair/2 - pair'/12
    let integral = if s == 1 {
        0.25 * ((4.0 * kf + 3.0) / (4.0 * kf + 1.0)).ln()
    } else {
        ((4.0 * kf + 1.0).powi(1 - si) - (4.0 * kf + 3.0).powi(1 - si)) / (4.0 * (s as f64 - 1.0))
    };
    let d_pair = -4.0 * s as f64
        * ((4.0 * kf + 1.0).powi(-si - 1) - (4.0 * kf + 3.0).powi(-si - 1));
    acc.sum + integral + 0.5 * pair(kf) - d_pair / 12.0
}

/// Series of `tan(πx/2)` to order `n >= 1`: odd, with coefficient
/// `(4/π) λ(2k+2)` on `x^(2k+1)`. All coefficients are strictly positive
/// and `(π/2)` times them decreases strictly to 2.
pub fn tan_half_series(n: usize) -> Result<TaylorSeries, SeriesError> {
    if n < 1 {
        return Err(SeriesError::OrderTooSmall { needed: 1 });
    }
    let mut coeffs = vec![0.0; n + 1];
    let mut k = 0usize;
    while 2 * k + 1 <= n {
        coeffs[2 * k + 1] = 4.0 / std::f64::consts::PI * dirichlet_lambda(2 * k as u32 + 2)?;
        k += 1;
    }
    TaylorSeries::new(coeffs, Parity::Odd)
}

/// Series of `sec x` to order `n`: even with positive coefficients
/// `|E_2m|/(2m)!`, computed by the cosine-reciprocal convolution recurrence.
pub fn sec_series(n: usize) -> TaylorSeries {
    let m_max = n / 2;
    let inv_fact = inv_factorials(2 * m_max);
    let mut s = vec![0.0f64; m_max + 1];
    s[0] = 1.0;
    for m in 1..=m_max {
        let mut acc = 0.0;
        for j in 0..m {
            let sign = if (m - j) % 2 == 1 { 1.0 } else { -1.0 };
            acc += sign * s[j] * inv_fact[2 * (m - j)];
        }
        s[m] = acc;
    }
    let mut coeffs = vec![0.0; n + 1];
    for (m, &v) in s.iter().enumerate() {
        coeffs[2 * m] = v;
    }
    TaylorSeries { coeffs, parity: Parity::Even }
}

/// Series of `cos x` to order `n`.
pub fn cos_series(n: usize) -> TaylorSeries {
    let inv_fact = inv_factorials(n);
    let mut coeffs = vec![0.0; n + 1];
    let mut m = 0usize;
    while 2 * m <= n {
        coeffs[2 * m] = if m % 2 == 0 { inv_fact[2 * m] } else { -inv_fact[2 * m] };
        m += 1;
    }
    TaylorSeries { coeffs, parity: Parity::Even }
}

fn inv_factorials(up_to: usize) -> Vec<f64> {
    let mut v = vec![1.0f64; up_to + 1];
    for k in 1..=up_to {
        v[k] = v[k - 1] / k as f64;
    }
    v
}

/// Exact Euler numbers `E_0, E_2, ..., E_2M` as `i128`, via the secant
/// convolution recurrence `Σ_j (-1)^(m-j) C(2m,2j) |E_2j| = 0`.
///
/// Signs alternate: `E_2m = (-1)^m |E_2m|`. Overflow of the exact integer
/// range is reported with the offending order (`i128` holds up to `E_38`).
pub fn euler_numbers(m_count: usize) -> Result<Vec<i128>, SeriesError> {
    let mut abs: Vec<i128> = Vec::with_capacity(m_count + 1);
    abs.push(1);
    for m in 1..=m_count {
        let order = 2 * m;
        let mut acc: i128 = 0;
        for (j, &e) in abs.iter().enumerate() {
            let c = binomial_i128(2 * m, 2 * j).ok_or(SeriesError::OverflowAtOrder { order })?;
            let term = c.checked_mul(e).ok_or(SeriesError::OverflowAtOrder { order })?;
            acc = if (m - j) % 2 == 1 {
                acc.checked_add(term)
            } else {
                acc.checked_sub(term)
            }
            .ok_or(SeriesError::OverflowAtOrder { order })?;
        }
        if acc < 0 {
            return Err(SeriesError::OverflowAtOrder { order });
        }
        abs.push(acc);
    }
    Ok(abs
        .into_iter()
        .enumerate()
        .map(|(m, e)| if m % 2 == 1 { -e } else { e })
        .collect())
}

fn binomial_i128(n: usize, k: usize) -> Option<i128> {
    let k = k.min(n - k);
    let mut acc: i128 = 1;
    for i in 0..k {
        acc = acc.checked_mul((n - i) as i128)?;
        acc /= (i + 1) as i128;
    }
    Some(acc)
}

/// Schwarzian derivative of a series, `Sf = (f''/f')' - (f''/f')^2 / 2`,
/// truncated three orders below the input.
pub fn schwarzian(f: &TaylorSeries) -> Result<TaylorSeries, SeriesError> {
    if f.order() < 3 {
        return Err(SeriesError::OrderTooSmall { needed: 3 });
    }
    if f.coeff(1) == 0.0 {
        return Err(SeriesError::NotLocallyUnivalent);
    }
    let fp = f.differentiate();
    let fpp = fp.differentiate();
    let q = fpp.div(&fp)?; // order N-2
    let qp = q.differentiate(); // order N-3
    let q2 = q.mul(&q).truncated(qp.order());
    Ok(qp.sub(&q2.scale(0.5)))
}

/// Truncated series of the Möbius map `(az+b)/(cz+d)` about 0.
/// Requires `ad - bc != 0` and `d != 0`.
pub fn mobius_series(a: f64, b: f64, c: f64, d: f64, n: usize) -> Result<TaylorSeries, SeriesError> {
    if a * d - b * c == 0.0 || d == 0.0 {
        return Err(SeriesError::DegenerateMobius);
    }
    // (az+b) * (1/d) * sum_k (-c/d)^k z^k
    let ratio = -c / d;
    let mut geo = vec![0.0; n + 1];
    let mut pow = 1.0 / d;
    for g in geo.iter_mut() {
        *g = pow;
        pow *= ratio;
    }
    let geo = TaylorSeries { coeffs: geo, parity: Parity::None };
    let linear = TaylorSeries::new(
        {
            let mut v = vec![0.0; n + 1];
            v[0] = b;
            if n >= 1 {
                v[1] = a;
            }
            v
        },
        Parity::None,
    )?;
    Ok(linear.mul(&geo))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use std::f64::consts::PI;

    fn geometric(n: usize) -> TaylorSeries {
        TaylorSeries::new(vec![1.0; n + 1], Parity::None).unwrap()
    }

    #[test]
    fn polynomial_product() {
        // (1+x)(1-x) = 1 - x^2
        let a = TaylorSeries::new(vec![1.0, 1.0, 0.0, 0.0], Parity::None).unwrap();
        let b = TaylorSeries::new(vec![1.0, -1.0, 0.0, 0.0], Parity::None).unwrap();
        let p = a.mul(&b);
        assert_eq!(p.coeffs(), &[1.0, 0.0, -1.0, 0.0]);
    }

    #[test]
    fn geometric_series_by_division() {
        // 1/(1-x) = sum x^n
        let one = TaylorSeries::constant(1.0, 8);
        let denom = TaylorSeries::new(
            {
                let mut v = vec![0.0; 9];
                v[0] = 1.0;
                v[1] = -1.0;
                v
            },
            Parity::None,
        )
        .unwrap();
        let q = one.div(&denom).unwrap();
        assert_eq!(q.coeffs(), &[1.0; 9]);
    }

    #[test]
    fn differentiate_exp_series() {
        let inv_fact = inv_factorials(10);
        let e = TaylorSeries::new(inv_fact.clone(), Parity::None).unwrap();
        let d = e.differentiate();
        for k in 0..=9 {
            assert_relative_eq!(d.coeff(k), inv_fact[k], epsilon = 1e-15);
        }
    }

    #[test]
    fn integrate_fixes_constant_to_zero() {
        let s = geometric(5);
        let i = s.integrate();
        assert_eq!(i.coeff(0), 0.0);
        assert_eq!(i.order(), 6);
        assert_relative_eq!(i.coeff(3), 1.0 / 3.0);
    }

    #[test]
    fn division_by_zero_constant_rejected() {
        let a = geometric(4);
        let b = TaylorSeries::monomial(1.0, 1, 4);
        assert_eq!(a.div(&b).unwrap_err(), SeriesError::DivisionByZeroConstantTerm);
    }

    #[test]
    fn composition_requires_zero_constant() {
        let a = geometric(4);
        let b = TaylorSeries::constant(1.0, 4);
        assert_eq!(a.compose(&b).unwrap_err(), SeriesError::CompositionNonzeroConstant);
    }

    #[test]
    fn non_finite_coefficients_rejected() {
        let err = TaylorSeries::new(vec![1.0, f64::NAN], Parity::None).unwrap_err();
        assert_eq!(err, SeriesError::NonFiniteCoefficient { index: 1 });
    }

    #[test]
    fn dirichlet_lambda_reference_values() {
        // lambda(2) = pi^2/8, lambda(4) = pi^4/96
        assert!((dirichlet_lambda(2).unwrap() - PI * PI / 8.0).abs() < 1e-14);
        assert!((dirichlet_lambda(4).unwrap() - PI.powi(4) / 96.0).abs() < 1e-14);
        assert_eq!(dirichlet_lambda(1).unwrap_err(), SeriesError::InvalidExponent { p: 1 });
    }

    #[test]
    fn dirichlet_lambda_above_one_and_decreasing() {
        // strict in exact arithmetic; in f64 the excess ~3^-p drops below half
        // an ulp of 1.0 near p = 34, so strictness is asserted below that
        let mut prev = f64::INFINITY;
        for p in 2..=32 {
            let v = dirichlet_lambda(p).unwrap();
            assert!(v > 1.0, "lambda({}) = {} should exceed 1", p, v);
            assert!(v < prev, "lambda must decrease");
            prev = v;
        }
        for p in 33..60 {
            assert!(dirichlet_lambda(p).unwrap() >= 1.0);
        }
    }

    #[test]
    fn dirichlet_lambda_diff_matches_direct() {
        for p in [2u32, 4, 8, 16] {
            let direct = dirichlet_lambda(p).unwrap() - dirichlet_lambda(p + 2).unwrap();
            let diff = dirichlet_lambda_diff(p).unwrap();
            assert!((direct - diff).abs() < 1e-13, "p={}: {} vs {}", p, direct, diff);
        }
    }

    #[test]
    fn tan_half_leading_coefficient_and_value() {
        let t = tan_half_series(41).unwrap();
        // tan(pi x/2) ~ (pi/2) x, cross-checked against lambda(2) = pi^2/8
        assert_relative_eq!(t.coeff(1), PI / 2.0, epsilon = 1e-13);
        assert_relative_eq!(t.coeff(1), 4.0 / PI * PI * PI / 8.0, epsilon = 1e-13);
        // tan(pi/4) = 1
        assert!((t.eval(0.5) - 1.0).abs() < 1e-10);
        // all coefficients of odd powers strictly positive
        for k in 0..=20 {
            assert!(t.coeff(2 * k + 1) > 0.0);
        }
        assert_eq!(t.parity(), Parity::Odd);
    }

    #[test]
    fn tan_half_mapped_sequence_decreases_to_two() {
        let t = tan_half_series(63).unwrap();
        let mut prev = f64::INFINITY;
        for k in 0..=30 {
            let mapped = PI / 2.0 * t.coeff(2 * k + 1); // = 2 lambda(2k+2)
            let strict = 2 * k + 2 <= 32; // beyond that the excess underflows
            assert!(mapped > 2.0 - 1e-15);
            if strict {
                assert!(mapped > 2.0 && mapped < prev, "k={}", k);
            }
            prev = prev.min(mapped);
        }
    }

    #[test]
    fn euler_numbers_small_values() {
        let e = euler_numbers(3).unwrap();
        assert_eq!(e, vec![1, -1, 5, -61]);
    }

    #[test]
    fn euler_numbers_growth_bound() {
        // |E_2m| >= 5^(m-1) with equality at m = 2
        let e = euler_numbers(10).unwrap();
        let mut pow5: i128 = 1;
        for m in 1..=10 {
            assert!(e[m].unsigned_abs() >= pow5.unsigned_abs(), "m={}", m);
            if m == 2 {
                assert_eq!(e[m].abs(), pow5);
            }
            pow5 *= 5;
        }
    }

    #[test]
    fn euler_numbers_overflow_reported() {
        assert!(euler_numbers(19).is_ok());
        assert_eq!(
            euler_numbers(20).unwrap_err(),
            SeriesError::OverflowAtOrder { order: 40 }
        );
    }

    #[test]
    fn euler_beta_identity() {
        // E_2m = (-1)^m 2 (2/pi)^(2m+1) (2m)! beta(2m+1), to 1e-10 relative
        let e = euler_numbers(12).unwrap();
        let mut fact = 1.0f64;
        for m in 0..=12 {
            if m > 0 {
                fact *= (2 * m - 1) as f64 * (2 * m) as f64;
            }
            let sign = if m % 2 == 1 { -1.0 } else { 1.0 };
            let ident = sign
                * 2.0
                * (2.0 / PI).powi(2 * m as i32 + 1)
                * fact
                * dirichlet_beta_odd(2 * m as u32 + 1);
            let rel = (ident - e[m] as f64) / e[m] as f64;
            assert!(rel.abs() < 1e-10, "m={}: identity {} vs {}", m, ident, e[m]);
        }
    }

    #[test]
    fn sec_series_basics() {
        let s = sec_series(40);
        assert_eq!(s.coeff(0), 1.0);
        assert_relative_eq!(s.coeff(2), 0.5, epsilon = 1e-15);
        // c4 = |E_4|/4! = 5/24
        assert_relative_eq!(s.coeff(4), 5.0 / 24.0, epsilon = 1e-15);
        for m in 0..=20 {
            assert!(s.coeff(2 * m) > 0.0);
        }
        // truncation error at x=1 is ~1.2e-8 at order 40 and below 1e-9 from
        // order 52 on; assert both honest levels
        assert!((s.eval(1.0) - 1.0 / 1.0f64.cos()).abs() < 2e-8);
        let s60 = sec_series(60);
        assert!((s60.eval(1.0) - 1.0 / 1.0f64.cos()).abs() < 1e-9);
    }

    #[test]
    fn sec_times_cos_is_one() {
        let n = 40;
        let prod = sec_series(n).mul(&cos_series(n));
        assert_relative_eq!(prod.coeff(0), 1.0, epsilon = 1e-15);
        for k in 1..=n {
            assert!(prod.coeff(k).abs() < 1e-12, "k={}: {}", k, prod.coeff(k));
        }
    }

    #[test]
    fn schwarzian_of_mobius_vanishes() {
        let t = mobius_series(1.3, -0.4, 0.35, 1.0, 24).unwrap();
        let s = schwarzian(&t).unwrap();
        assert!(s.max_abs_coeff() < 1e-12, "max coeff {}", s.max_abs_coeff());
    }

    #[test]
    fn schwarzian_of_koebe() {
        // Koebe z/(1-z)^2 = sum k z^k; S = -6/(1-z^2)^2 = -6 sum (k+1) z^2k
        let n = 24;
        let koebe =
            TaylorSeries::new((0..=n).map(|k| k as f64).collect(), Parity::None).unwrap();
        let s = schwarzian(&koebe).unwrap();
        for k in 0..=(s.order() / 2) {
            assert_relative_eq!(s.coeff(2 * k), -6.0 * (k as f64 + 1.0), epsilon = 1e-10);
        }
        for k in 0..s.order() / 2 {
            assert!(s.coeff(2 * k + 1).abs() < 1e-10);
        }
    }

    #[test]
    fn schwarzian_rejects_degenerate() {
        let f = TaylorSeries::new(vec![0.0, 0.0, 1.0, 1.0], Parity::None).unwrap();
        assert_eq!(schwarzian(&f).unwrap_err(), SeriesError::NotLocallyUnivalent);
        let short = TaylorSeries::new(vec![0.0, 1.0], Parity::None).unwrap();
        assert_eq!(schwarzian(&short).unwrap_err(), SeriesError::OrderTooSmall { needed: 3 });
    }

    #[test]
    fn schwarzian_parity_odd_gives_even() {
        let mut coeffs = vec![0.0; 16];
        coeffs[1] = 1.0;
        coeffs[3] = 0.2;
        coeffs[5] = -0.05;
        let f = TaylorSeries::new(coeffs, Parity::Odd).unwrap();
        let s = schwarzian(&f).unwrap();
        assert_eq!(s.parity(), Parity::Even);
        s.check_parity().unwrap();
    }

    #[test]
    fn json_round_trip() {
        let t = tan_half_series(9).unwrap();
        let json = t.to_json();
        let back = TaylorSeries::from_json(&json).unwrap();
        assert_eq!(t, back);
        assert!(json.contains("\"parity\":\"odd\""));
    }
}
