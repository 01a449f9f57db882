use alloc::vec::Vec;

#[allow(unused_imports)] // inherent float methods need std
use num_traits::Float;

use crate::error::{finite, Error, Result};

/// Gauss–Legendre nodes and weights on `[−1, 1]`.
#[derive(Clone, Debug, PartialEq)]
pub struct GaussLegendre {
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
}

/// Nodes by Newton iteration on the three-term recurrence.
pub fn gauss_legendre(n: usize) -> GaussLegendre {
    let mut nodes = Vec::with_capacity(n);
    let mut weights = Vec::with_capacity(n);
    let nf = n as f64;
    for i in 0..n {
        let mut x = (core::f64::consts::PI * (i as f64 + 0.75) / (nf + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            let (mut p0, mut p1) = (1.0, x);
            for k in 2..=n {
                let kf = k as f64;
                let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
                p0 = p1;
                p1 = p2;
            }
            let p = if n == 0 { 1.0 } else { p1 };
            let pm1 = if n == 1 { 1.0 } else { p0 };
            dp = nf * (x * p - pm1) / (x * x - 1.0);
            let dx = p / dp;
            x -= dx;
            if dx.abs() < 1e-16 {
                break;
            }
        }
        nodes.push(x);
        weights.push(2.0 / ((1.0 - x * x) * dp * dp));
    }
    GaussLegendre { nodes, weights }
}

impl GaussLegendre {
    /// `∫_a^b f`.
    pub fn integrate(&self, a: f64, b: f64, f: &mut dyn FnMut(f64) -> Result<f64>) -> Result<(f64, f64)> {
        let (c, h) = (0.5 * (a + b), 0.5 * (b - a));
        let mut sum = 0.0;
        let mut abs = 0.0;
        for (x, w) in self.nodes.iter().zip(&self.weights) {
            let y = f(c + h * x)?;
            sum += w * y;
            abs += w * y.abs();
        }
        Ok((h * sum, h.abs() * abs))
    }
}

/// Result of an integration with a built-in convergence check.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct QuadResult {
    /// Rule with `n` nodes.
    pub value: f64,
    /// Rule with `2n` nodes.
    pub refined: f64,
    pub discrepancy: f64,
    /// `discrepancy ≤ 10⁻⁸ · max(|refined|, ∫|f|)`.
    pub converged: bool,
}

/// Integrates `f` over `[a, b]` with `n` and `2n` Gauss–Legendre nodes.
pub fn quad_integrate(f: &dyn Fn(f64) -> Result<f64>, a: f64, b: f64, n: usize) -> Result<QuadResult> {
    if n == 0 || !(a.is_finite() && b.is_finite()) {
        return Err(Error::InvalidSpec("quadrature needs n > 0 and a finite interval".into()));
    }
    let (value, _) = gauss_legendre(n).integrate(a, b, &mut |x| f(x))?;
    let (refined, abs) = gauss_legendre(2 * n).integrate(a, b, &mut |x| f(x))?;
    let discrepancy = (refined - value).abs();
    let scale = refined.abs().max(abs);
    if !refined.is_finite() {
        return Err(Error::NonFinite("quadrature"));
    }
    Ok(QuadResult { value, refined, discrepancy, converged: discrepancy <= 1e-8 * scale })
}

/// `∫_0^L f` over Gauss–Legendre panels whose widths grow geometrically
/// from the origin, so that features on the scale `scale` near `v = 0` and
/// slow tails out to `L` are both resolved.
pub fn integrate_graded(
    f: &mut dyn FnMut(f64) -> Result<f64>,
    extent: f64,
    scale: f64,
    panels: usize,
    nodes: usize,
) -> Result<f64> {
    if panels == 0 || nodes == 0 || !(extent > 0.0 && scale > 0.0) {
        return Err(Error::InvalidSpec("graded quadrature needs positive extent, scale, panels and nodes".into()));
    }
    let rate = ((extent / scale).ln() + 2.0).max(0.5);
    let edge = |k: usize| extent * (rate * k as f64 / panels as f64).exp_m1() / rate.exp_m1();
    let rule = gauss_legendre(nodes);
    let mut total = 0.0;
    for k in 0..panels {
        total += rule.integrate(edge(k), edge(k + 1), f)?.0;
    }
    finite(total, "graded quadrature")
}
