//! Jacobi, generalized Laguerre and Romanovski polynomials with unrestricted
//! indices, evaluated together with their first two derivatives.
//!
//! Jacobi indices may be negative or complex: the rational extensions use
//! non-classical index pairs such as `(−a−½, B−3/2)`, and the Kepler–Coulomb
//! problem on the sphere needs conjugate complex indices evaluated on the
//! imaginary axis. The recurrence-based evaluators propagate
//! `(value, d1, d2)` triples; [`jacobi`] picks, by region, a route that stays
//! well conditioned for non-classical indices.

use core::ops::{Add, Div, Mul, Sub};

use num_complex::Complex64;

use crate::error::{finite, Error, Result};

/// A polynomial value with its first and second derivative with respect to
/// the polynomial argument.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PolyValue {
    pub value: f64,
    pub d1: f64,
    pub d2: f64,
}

impl PolyValue {
    pub const ONE: PolyValue = PolyValue { value: 1.0, d1: 0.0, d2: 0.0 };
    pub const ZERO: PolyValue = PolyValue { value: 0.0, d1: 0.0, d2: 0.0 };

    /// Multiplies value and derivatives by a constant.
    pub fn scale(self, c: f64) -> PolyValue {
        PolyValue { value: c * self.value, d1: c * self.d1, d2: c * self.d2 }
    }

    /// Logarithmic derivatives `(ṗ/p, p̈/p)`.
    pub fn log_ratios(self) -> (f64, f64) {
        (self.d1 / self.value, self.d2 / self.value)
    }
}

/// Real Jacobi index pair `(α, β)`; no sign restriction.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct JacobiParams {
    pub alpha: f64,
    pub beta: f64,
}

impl JacobiParams {
    pub fn new(alpha: f64, beta: f64) -> Self {
        JacobiParams { alpha, beta }
    }
}

/// Where a complex-index Jacobi polynomial is evaluated.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Argument {
    /// `z = x`.
    Real,
    /// `z = i·x`.
    Imaginary,
}

/// Complex Jacobi index pair together with the argument convention.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ComplexJacobiParams {
    pub alpha: Complex64,
    pub beta: Complex64,
    pub argument: Argument,
}

/// Complex value with derivatives with respect to the complex argument `z`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ComplexPolyValue {
    pub value: Complex64,
    pub d1: Complex64,
    pub d2: Complex64,
}

/// An orthogonal-polynomial instance: family, degree and index data.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum PolyRef {
    Jacobi { degree: u32, params: JacobiParams },
    Laguerre { degree: u32, alpha: f64 },
    Romanovski { degree: u32, p1: f64, p2: f64 },
}

impl PolyRef {
    pub fn jacobi(degree: u32, alpha: f64, beta: f64) -> Self {
        PolyRef::Jacobi { degree, params: JacobiParams { alpha, beta } }
    }

    pub fn laguerre(degree: u32, alpha: f64) -> Self {
        PolyRef::Laguerre { degree, alpha }
    }

    pub fn degree(&self) -> u32 {
        match *self {
            PolyRef::Jacobi { degree, .. }
            | PolyRef::Laguerre { degree, .. }
            | PolyRef::Romanovski { degree, .. } => degree,
        }
    }

    /// Evaluates the polynomial. Jacobi instances fall back to the explicit
    /// sum when the recurrence is degenerate (see [`jacobi`]).
    pub fn eval(&self, x: f64) -> Result<PolyValue> {
        match *self {
            PolyRef::Jacobi { degree, params } => jacobi(degree, params, x),
            PolyRef::Laguerre { degree, alpha } => laguerre_eval(degree, alpha, x),
            PolyRef::Romanovski { degree, p1, p2 } => romanovski_eval(degree, p1, p2, x),
        }
    }
}

trait Field:
    Copy
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + From<f64>
    + PartialEq
{
    fn is_exact_zero(&self) -> bool;
}

impl Field for f64 {
    fn is_exact_zero(&self) -> bool {
        *self == 0.0
    }
}

impl Field for Complex64 {
    fn is_exact_zero(&self) -> bool {
        self.re == 0.0 && self.im == 0.0
    }
}

/// Forward recurrence; `Err(step)` names the degree whose denominator vanishes.
fn recurrence<T: Field>(n: u32, alpha: T, beta: T, z: T) -> core::result::Result<[T; 3], usize> {
    let c = |x: f64| -> T { T::from(x) };
    let one = c(1.0);
    let zero = c(0.0);
    if n == 0 {
        return Ok([one, zero, zero]);
    }
    let half = c(0.5);
    let slope = half * (alpha + beta + c(2.0));
    let mut prev = [one, zero, zero];
    let mut cur = [slope * z + half * (alpha - beta), slope, zero];
    for k in 2..=n {
        let kf = c(k as f64);
        let s = c(2.0) * kf + alpha + beta;
        let denom = c(2.0) * kf * (kf + alpha + beta) * (s - c(2.0));
        if denom.is_exact_zero() {
            return Err(k as usize);
        }
        let a1 = (s - one) * s * (s - c(2.0));
        let b1 = (s - one) * (alpha * alpha - beta * beta);
        let d = c(2.0) * (kf + alpha - one) * (kf + beta - one) * s;
        let lin = a1 * z + b1;
        let next = [
            (lin * cur[0] - d * prev[0]) / denom,
            (lin * cur[1] + a1 * cur[0] - d * prev[1]) / denom,
            (lin * cur[2] + c(2.0) * a1 * cur[1] - d * prev[2]) / denom,
        ];
        prev = cur;
        cur = next;
    }
    Ok(cur)
}

/// Explicit sum `(1/n!) Σ_k C(n,k) (n+α+β+1)_k (α+k+1)_{n−k} ((z−1)/2)^k`,
/// free of divisions by index-dependent quantities.
fn explicit_sum<T: Field>(n: u32, alpha: T, beta: T, z: T) -> [T; 3] {
    let c = |x: f64| -> T { T::from(x) };
    let n_us = n as usize;
    let nf = n as f64;
    // coefficient of w^k, w = (z − 1)/2
    let mut coeffs: alloc::vec::Vec<T> = alloc::vec::Vec::with_capacity(n_us + 1);
    let mut n_fact = 1.0;
    for j in 1..=n_us {
        n_fact *= j as f64;
    }
    for k in 0..=n_us {
        let mut binom = 1.0;
        for j in 0..k {
            binom = binom * (nf - j as f64) / (j as f64 + 1.0);
        }
        let mut term = c(binom / n_fact);
        for j in 0..k {
            term = term * (c(nf + 1.0 + j as f64) + alpha + beta);
        }
        for j in 0..(n_us - k) {
            term = term * (alpha + c(k as f64 + 1.0 + j as f64));
        }
        coeffs.push(term);
    }
    let w = (z - c(1.0)) * c(0.5);
    let mut v = c(0.0);
    let mut dv = c(0.0);
    let mut ddv = c(0.0);
    for k in (0..=n_us).rev() {
        ddv = ddv * w + c(2.0) * dv;
        dv = dv * w + v;
        v = v * w + coeffs[k];
    }
    [v, dv * c(0.5), ddv * c(0.25)]
}

/// `P_n^{(α,β)}(z)` by the forward three-term recurrence.
///
/// Fails with [`Error::DegenerateParameters`] when a recurrence denominator
/// `2k(k+α+β)(2k+α+β−2)` is exactly zero.
pub fn jacobi_eval(n: u32, p: JacobiParams, z: f64) -> Result<PolyValue> {
    finite(p.alpha, "jacobi alpha")?;
    finite(p.beta, "jacobi beta")?;
    finite(z, "jacobi argument")?;
    match recurrence(n, p.alpha, p.beta, z) {
        Ok([value, d1, d2]) => checked(PolyValue { value, d1, d2 }),
        Err(step) => Err(Error::DegenerateParameters { step, alpha: p.alpha, beta: p.beta }),
    }
}

/// `P_n^{(α,β)}(z)` from the explicit finite sum; valid for every index pair.
pub fn jacobi_eval_explicit(n: u32, p: JacobiParams, z: f64) -> Result<PolyValue> {
    finite(p.alpha, "jacobi alpha")?;
    finite(p.beta, "jacobi beta")?;
    finite(z, "jacobi argument")?;
    let [value, d1, d2] = explicit_sum(n, p.alpha, p.beta, z);
    checked(PolyValue { value, d1, d2 })
}

/// `P_n^{(α,β)}(z)` with derivatives, choosing the evaluation route by
/// region so that no route is used where it is ill-conditioned:
///
/// * `z ≥ 1`: the explicit sum in powers of `(z−1)/2`;
/// * `z ≤ −1`: the same sum after the reflection
///   `P_n^{(α,β)}(z) = (−1)ⁿ P_n^{(β,α)}(−z)`;
/// * `|z| < 1`, classical indices (`α, β > −1`): the three-term recurrence,
///   which is stable there;
/// * `|z| < 1`, other indices: the two-sided binomial sum
///   `Σ_k C(n+α, n−k) C(n+β, k) ((z−1)/2)^k ((z+1)/2)^{n−k}`; the forward
///   recurrence can lose several digits for such indices.
///
/// Derivatives of the sum routes use
/// `d/dz P_n^{(α,β)} = ½(n+α+β+1) P_{n−1}^{(α+1,β+1)}`, a polynomial
/// identity valid for all indices.
pub fn jacobi(n: u32, p: JacobiParams, z: f64) -> Result<PolyValue> {
    finite(p.alpha, "jacobi alpha")?;
    finite(p.beta, "jacobi beta")?;
    finite(z, "jacobi argument")?;
    if z.abs() < 1.0 && p.alpha > -1.0 && p.beta > -1.0 {
        return jacobi_eval(n, p, z);
    }
    let value = |k: u32, shift: f64| jacobi_sum_value(k, p.alpha + shift, p.beta + shift, z);
    let nf = n as f64;
    let s = nf + p.alpha + p.beta;
    let v = value(n, 0.0);
    let d1 = if n >= 1 { 0.5 * (s + 1.0) * value(n - 1, 1.0) } else { 0.0 };
    let d2 = if n >= 2 { 0.25 * (s + 1.0) * (s + 2.0) * value(n - 2, 2.0) } else { 0.0 };
    checked(PolyValue { value: v, d1, d2 })
}

/// Value of `P_n^{(α,β)}(z)` by the sum suited to the region of `z`.
fn jacobi_sum_value(n: u32, alpha: f64, beta: f64, z: f64) -> f64 {
    if z >= 1.0 {
        explicit_sum(n, alpha, beta, z)[0]
    } else if z <= -1.0 {
        let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
        sign * explicit_sum(n, beta, alpha, -z)[0]
    } else {
        two_sided_sum(n, alpha, beta, z)
    }
}

/// `Σ_k C(n+α, n−k) C(n+β, k) ((z−1)/2)^k ((z+1)/2)^{n−k}` with generalized
/// binomial coefficients.
fn two_sided_sum(n: u32, alpha: f64, beta: f64, z: f64) -> f64 {
    let binom = |x: f64, j: u32| (0..j).fold(1.0, |acc, i| acc * (x - i as f64) / (i as f64 + 1.0));
    let nf = n as f64;
    let (wm, wp) = ((z - 1.0) / 2.0, (z + 1.0) / 2.0);
    (0..=n).map(|k| binom(nf + alpha, n - k) * binom(nf + beta, k) * wm.powi(k as i32) * wp.powi((n - k) as i32)).sum()
}

/// Complex-index Jacobi polynomial at `z = x` or `z = i·x`; derivatives are
/// with respect to `z`.
pub fn jacobi_complex(n: u32, p: ComplexJacobiParams, x: f64) -> Result<ComplexPolyValue> {
    finite(x, "jacobi argument")?;
    if !(p.alpha.re.is_finite() && p.alpha.im.is_finite() && p.beta.re.is_finite() && p.beta.im.is_finite()) {
        return Err(Error::NonFinite("complex jacobi index"));
    }
    let z = match p.argument {
        Argument::Real => Complex64::new(x, 0.0),
        Argument::Imaginary => Complex64::new(0.0, x),
    };
    let [value, d1, d2] = match recurrence(n, p.alpha, p.beta, z) {
        Ok(v) => v,
        Err(_) => explicit_sum(n, p.alpha, p.beta, z),
    };
    Ok(ComplexPolyValue { value, d1, d2 })
}

/// Generalized Laguerre `L_n^{(α)}(t)` with derivatives, for any real `α`.
pub fn laguerre_eval(n: u32, alpha: f64, t: f64) -> Result<PolyValue> {
    finite(alpha, "laguerre alpha")?;
    finite(t, "laguerre argument")?;
    if n == 0 {
        return Ok(PolyValue::ONE);
    }
    let mut prev = [1.0, 0.0, 0.0];
    let mut cur = [1.0 + alpha - t, -1.0, 0.0];
    for k in 2..=n {
        let kf = k as f64;
        let lin = 2.0 * kf - 1.0 + alpha - t;
        let d = kf - 1.0 + alpha;
        let next = [
            (lin * cur[0] - d * prev[0]) / kf,
            (lin * cur[1] - cur[0] - d * prev[1]) / kf,
            (lin * cur[2] - 2.0 * cur[1] - d * prev[2]) / kf,
        ];
        prev = cur;
        cur = next;
    }
    checked(PolyValue { value: cur[0], d1: cur[1], d2: cur[2] })
}

/// Leading coefficient `(n+2p₂−1)_n / (2ⁿ n!)` fixing the normalization of
/// `R_n^{(p1,p2)}`.
pub fn romanovski_leading_coefficient(n: u32, p2: f64) -> f64 {
    let mut k = 1.0;
    for j in 0..n {
        k *= (n as f64 + 2.0 * p2 - 1.0 + j as f64) / (2.0 * (j as f64 + 1.0));
    }
    k
}

/// Romanovski polynomial `R_n^{(p1,p2)}(x) = (−i)ⁿ P_n^{(α, ᾱ)}(i x)` with
/// `α = p₂ − 1 + i p₁/2`, evaluated in complex arithmetic.
///
/// The result is real by construction; an imaginary residue above `1e−10`
/// relative, or disagreement with the real coefficient route
/// ([`romanovski_series`]), is reported as an error.
pub fn romanovski_eval(n: u32, p1: f64, p2: f64, x: f64) -> Result<PolyValue> {
    finite(p1, "romanovski p1")?;
    finite(p2, "romanovski p2")?;
    finite(x, "romanovski argument")?;
    let alpha = Complex64::new(p2 - 1.0, 0.5 * p1);
    let params = ComplexJacobiParams { alpha, beta: alpha.conj(), argument: Argument::Imaginary };
    let cv = jacobi_complex(n, params, x)?;
    // (−i)^n, and d/dx = i d/dz
    let phase = Complex64::new(0.0, -1.0).powu(n);
    let i = Complex64::new(0.0, 1.0);
    let value = phase * cv.value;
    let d1 = phase * i * cv.d1;
    let d2 = -(phase * cv.d2);

    let (series, magnitude) = romanovski_series_with_magnitude(n, p1, p2, x)?;
    let scale = magnitude.max(value.re.abs()).max(f64::MIN_POSITIVE);
    if value.im.abs() > 1e-10 * scale {
        return Err(Error::ComplexLeak { imag: value.im, real: value.re });
    }
    if (series.value - value.re).abs() > 1e-10 * scale {
        return Err(Error::RouteMismatch { first: value.re, second: series.value });
    }
    checked(PolyValue { value: value.re, d1: d1.re, d2: d2.re })
}

/// Real-coefficient route for `R_n^{(p1,p2)}`: the monomial coefficients of
/// the polynomial solution of
/// `(1+x²)Y'' + (p₁ + 2p₂x)Y' − n(n+2p₂−1)Y = 0`
/// obtained downward from the leading coefficient.
pub fn romanovski_series(n: u32, p1: f64, p2: f64, x: f64) -> Result<PolyValue> {
    romanovski_series_with_magnitude(n, p1, p2, x).map(|(v, _)| v)
}

fn romanovski_series_with_magnitude(n: u32, p1: f64, p2: f64, x: f64) -> Result<(PolyValue, f64)> {
    let nu = n as usize;
    let nf = n as f64;
    let mut c = alloc::vec![0.0; nu + 3];
    c[nu] = romanovski_leading_coefficient(n, p2);
    for k in (0..nu).rev() {
        let kf = k as f64;
        let denom = (kf - nf) * (kf + nf + 2.0 * p2 - 1.0);
        if denom == 0.0 {
            return Err(Error::DegenerateParameters { step: k, alpha: p1, beta: p2 });
        }
        c[k] = -(c[k + 2] * (kf + 2.0) * (kf + 1.0) + c[k + 1] * p1 * (kf + 1.0)) / denom;
    }
    let mut v = 0.0;
    let mut dv = 0.0;
    let mut ddv = 0.0;
    let mut magnitude = 0.0;
    for k in (0..=nu).rev() {
        ddv = ddv * x + 2.0 * dv;
        dv = dv * x + v;
        v = v * x + c[k];
        magnitude = magnitude * x.abs() + c[k].abs();
    }
    Ok((checked(PolyValue { value: v, d1: dv, d2: ddv })?, magnitude))
}

fn checked(v: PolyValue) -> Result<PolyValue> {
    if v.value.is_finite() && v.d1.is_finite() && v.d2.is_finite() {
        Ok(v)
    } else {
        Err(Error::NonFinite("polynomial value overflow"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degree_zero_is_one() {
        let v = jacobi_eval(0, JacobiParams::new(-3.3, 7.1), 0.7).unwrap();
        assert_eq!(v, PolyValue::ONE);
        assert_eq!(laguerre_eval(0, -4.0, 3.0).unwrap(), PolyValue::ONE);
        assert_eq!(romanovski_eval(0, 1.0, -2.0, 0.3).unwrap().value, 1.0);
    }

    #[test]
    fn linear_jacobi_by_hand() {
        let v = jacobi_eval(1, JacobiParams::new(1.0, 1.0), 0.5).unwrap();
        assert!((v.value - 1.0).abs() < 1e-15);
        assert!((v.d1 - 2.0).abs() < 1e-15);
        assert_eq!(v.d2, 0.0);
    }

    #[test]
    fn degenerate_recurrence_is_reported_and_bypassed() {
        // α + β = −2: the degree-2 denominator 2·2·(2+α+β)·(2+α+β) vanishes.
        let p = JacobiParams::new(-0.5, -1.5);
        match jacobi_eval(2, p, 0.3) {
            Err(Error::DegenerateParameters { step, .. }) => assert_eq!(step, 2),
            other => panic!("expected degenerate error, got {other:?}"),
        }
        let v = jacobi(2, p, 0.3).unwrap();
        let w = jacobi_eval_explicit(2, p, 0.3).unwrap();
        assert!((v.value - w.value).abs() < 1e-14 && (v.d1 - w.d1).abs() < 1e-14 && (v.d2 - w.d2).abs() < 1e-14);
    }

    #[test]
    fn explicit_matches_recurrence() {
        for &(a, b) in &[(0.3, 1.7), (-2.5, 0.7), (-0.7, -3.2), (4.0, -6.5)] {
            for n in 0..8 {
                for &z in &[-0.9, 0.1, 1.0, 3.5] {
                    let p = JacobiParams::new(a, b);
                    let r = jacobi_eval(n, p, z).unwrap();
                    let e = jacobi_eval_explicit(n, p, z).unwrap();
                    let s = 1.0 + r.value.abs();
                    assert!((r.value - e.value).abs() < 1e-11 * s, "{n} {a} {b} {z}");
                    assert!((r.d1 - e.d1).abs() < 1e-10 * (1.0 + r.d1.abs()));
                    assert!((r.d2 - e.d2).abs() < 1e-9 * (1.0 + r.d2.abs()));
                }
            }
        }
    }

    #[test]
    fn romanovski_linear_has_no_curvature() {
        let v = romanovski_eval(1, 0.8, -1.3, 2.2).unwrap();
        assert_eq!(v.d2, 0.0);
    }

    #[test]
    fn romanovski_leading_coefficient_matches_series() {
        let n = 4;
        let (p1, p2) = (-1.2, -0.5);
        let big = 1e4;
        let v = romanovski_eval(n, p1, p2, big).unwrap();
        let k = romanovski_leading_coefficient(n, p2);
        assert!((v.value / big.powi(4) / k - 1.0).abs() < 1e-3);
    }

    #[test]
    fn poly_ref_dispatch() {
        let p = PolyRef::laguerre(1, 0.5);
        assert_eq!(p.degree(), 1);
        assert!((p.eval(2.0).unwrap().value + 0.5).abs() < 1e-15);
    }
}
