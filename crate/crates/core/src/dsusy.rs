//! Deformed supersymmetric factorization: superpotentials, partner
//! potentials, shape-invariance chains and the spectrum as partial sums of
//! the chain energies.
//!
//! With `Â± = ∓√f d/dr √f + W`, the Hamiltonian factorizes as
//! `Ĥ₀ = Â⁺Â⁻ + ε₀` and its partner is `Ĥ₁ = Â⁻Â⁺ + ε₀`, with potentials
//! `V₀ = W² − fW′ + ε₀` and `V₁ = W² + fW′ + ε₀`.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

#[allow(unused_imports)] // inherent float methods need std
use num_traits::Float;

use crate::error::{Error, Result};
use crate::model::{probe_radii, SystemKind, SystemSpec};
use crate::specfun::PolyRef;

/// Polynomial argument as a function of `r`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum ZMap {
    /// `z = 1 + 2λr²` (equals `1 − 2|λ|r²` on the sphere).
    Oscillator { lambda: f64 },
    /// `z = f/(√λ r)`, `λ > 0`.
    Coulomb { lambda: f64 },
    /// `t = c·r` (flat Kepler–Coulomb).
    Linear { scale: f64 },
    /// `t = c·r²` (flat oscillator).
    Quadratic { scale: f64 },
}

impl ZMap {
    /// `(z, dz/dr, d²z/dr²)`.
    pub fn eval(&self, r: f64) -> (f64, f64, f64) {
        match *self {
            ZMap::Oscillator { lambda } => (1.0 + 2.0 * lambda * r * r, 4.0 * lambda * r, 4.0 * lambda),
            ZMap::Coulomb { lambda } => {
                let s = lambda.sqrt();
                let f = (1.0 + lambda * r * r).sqrt();
                let z = f / (s * r);
                let z1 = -1.0 / (s * f * r * r);
                let z2 = (lambda * r * r + 2.0 * f * f) / (s * f * f * f * r * r * r);
                (z, z1, z2)
            }
            ZMap::Linear { scale } => (scale * r, scale, 0.0),
            ZMap::Quadratic { scale } => (scale * r * r, 2.0 * scale * r, 2.0 * scale),
        }
    }

    /// The argument alone.
    pub fn z(&self, r: f64) -> f64 {
        self.eval(r).0
    }
}

/// `σ · log p(z(r))`, entering `W` as `−f σ (log p)′`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LogTerm {
    pub sign: f64,
    pub poly: PolyRef,
    pub zmap: ZMap,
}

impl LogTerm {
    /// `(d/dr log p, d²/dr² log p)`.
    pub fn derivatives(&self, r: f64) -> Result<(f64, f64)> {
        let (_, z1, z2) = self.zmap.eval(r);
        let p = self.poly.eval(self.zmap.z(r))?;
        if p.value == 0.0 {
            return Err(Error::Consistency(format!("denominator polynomial vanishes at r = {r}")));
        }
        let (g1, g2) = p.log_ratios();
        let l1 = g1 * z1;
        Ok((l1, g2 * z1 * z1 + g1 * z2 - l1 * l1))
    }
}

/// Superpotential `W = c₁ f/r + c₂ r/f + c₀ − f Σ σ_k (log p_k)′` with its
/// factorization energy.
#[derive(Clone, Debug, PartialEq)]
pub struct Superpotential {
    pub lambda: f64,
    /// Coefficient of `f/r`.
    pub inverse_coefficient: f64,
    /// Coefficient of `r/f`.
    pub linear_coefficient: f64,
    pub constant: f64,
    pub log_terms: Vec<LogTerm>,
    pub epsilon0: f64,
}

impl Superpotential {
    /// `(W, W′)` at `r`.
    pub fn eval(&self, r: f64) -> Result<(f64, f64)> {
        let lambda = self.lambda;
        let f = (1.0 + lambda * r * r).sqrt();
        let mut w = self.inverse_coefficient * f / r + self.linear_coefficient * r / f + self.constant;
        // d(f/r)/dr = −1/(f r²), d(r/f)/dr = 1/f³
        let mut dw = -self.inverse_coefficient / (f * r * r) + self.linear_coefficient / (f * f * f);
        let df = lambda * r / f;
        for term in &self.log_terms {
            let (l1, l2) = term.derivatives(r)?;
            w -= f * term.sign * l1;
            dw -= term.sign * (df * l1 + f * l2);
        }
        Ok((w, dw))
    }

    pub fn value(&self, r: f64) -> Result<f64> {
        self.eval(r).map(|(w, _)| w)
    }

    pub fn derivative(&self, r: f64) -> Result<f64> {
        self.eval(r).map(|(_, dw)| dw)
    }

    /// `W² − fW′ + ε₀`.
    pub fn factorized_potential(&self, r: f64) -> Result<f64> {
        let (w, dw) = self.eval(r)?;
        let f = (1.0 + self.lambda * r * r).sqrt();
        Ok(w * w - f * dw + self.epsilon0)
    }

    /// `W² + fW′ + ε₀`.
    pub fn partner_potential(&self, r: f64) -> Result<f64> {
        let (w, dw) = self.eval(r)?;
        let f = (1.0 + self.lambda * r * r).sqrt();
        Ok(w * w + f * dw + self.epsilon0)
    }

    /// Power `κ` with `W ≈ −κ/r` near the origin (used to regularize
    /// discrete ladder operators).
    pub fn origin_exponent(&self) -> f64 {
        -self.inverse_coefficient
    }
}

/// Superpotential of the ground state.
pub fn superpotential(spec: &SystemSpec) -> Superpotential {
    let a = spec.a();
    let lambda = spec.lambda;
    match spec.kind {
        SystemKind::Oscillator => {
            let beta = spec.coupling;
            Superpotential {
                lambda,
                inverse_coefficient: -a,
                linear_coefficient: beta,
                constant: 0.0,
                log_terms: Vec::new(),
                epsilon0: beta * (2.0 * a + 1.0) - lambda * a * a,
            }
        }
        SystemKind::Coulomb => {
            let q = spec.coupling;
            Superpotential {
                lambda,
                inverse_coefficient: -a,
                linear_coefficient: 0.0,
                constant: q / (2.0 * a),
                log_terms: Vec::new(),
                epsilon0: -q * q / (4.0 * a * a) - lambda * a * a,
            }
        }
    }
}

/// Parameters of the first partner and the constant separating it from the
/// shifted potential: `V₁(μ) = V₀(μ₁) + R(μ)`.
pub fn shape_invariance_shift(spec: &SystemSpec) -> (SystemSpec, f64) {
    match spec.kind {
        SystemKind::Oscillator => {
            (spec.with_l(spec.l + 1).with_coupling(spec.coupling - spec.lambda), 2.0 * spec.coupling)
        }
        SystemKind::Coulomb => (spec.with_l(spec.l + 1), 0.0),
    }
}

/// `V₁ = W² + fW′ + ε₀` on the open radial domain.
pub fn partner_potential(spec: &SystemSpec, r: f64) -> Result<f64> {
    crate::model::potential_v(spec, r)?;
    superpotential(spec).partner_potential(r)
}

/// Closed form of the partner: `V₀(l+1, β−λ) + 2β` or `V₀(l+1, Q)`.
pub fn partner_closed_form(spec: &SystemSpec, r: f64) -> Result<f64> {
    crate::model::potential_v(spec, r)?;
    let (shifted, constant) = shape_invariance_shift(spec);
    Ok(shifted.potential_unchecked(r) + constant)
}

/// `|W² − fW′ + ε₀ − V₀| / (1 + |V₀|)` at `r`.
pub fn factorization_residual(spec: &SystemSpec, r: f64) -> Result<f64> {
    let v0 = crate::model::potential_v(spec, r)?;
    let v = superpotential(spec).factorized_potential(r)?;
    Ok((v - v0).abs() / (1.0 + v0.abs()))
}

/// Whether a chain reached the requested depth.
#[derive(Clone, Debug, PartialEq)]
pub enum ChainStatus {
    Complete,
    /// The parameter set left the admissible region after `depth` steps.
    Truncated { depth: usize, reason: String },
}

/// Shape-invariance hierarchy `μ₀, μ₁, …` with energy increments `ε₁, ε₂, …`.
#[derive(Clone, Debug, PartialEq)]
pub struct DsiChain {
    pub mu: Vec<SystemSpec>,
    /// `ε₁ … ε_N` (`eps[i-1] = ε_i`).
    pub eps: Vec<f64>,
    pub epsilon0: f64,
    pub status: ChainStatus,
    /// Largest relative deviation of the pointwise shape-invariance condition
    /// over the probe grid.
    pub max_dsi_defect: f64,
}

impl DsiChain {
    pub fn depth(&self) -> usize {
        self.eps.len()
    }
}

/// Closed-form increment `ε_i` of the hierarchy.
pub fn chain_increment(spec: &SystemSpec, i: usize) -> f64 {
    let a = spec.a();
    let lambda = spec.lambda;
    let i = i as f64;
    match spec.kind {
        SystemKind::Oscillator => 4.0 * spec.coupling - 4.0 * lambda * (a + 2.0 * i - 1.0),
        SystemKind::Coulomb => {
            let q = spec.coupling;
            let lo = a + i - 1.0;
            let hi = a + i;
            q * q / (4.0 * lo * lo) - q * q / (4.0 * hi * hi) - lambda * (2.0 * a + 2.0 * i - 1.0)
        }
    }
}

/// Builds the hierarchy to `depth` steps and verifies, on a probe grid, that
/// `W²(μ_i) + fW′(μ_i) − W²(μ_{i+1}) + fW′(μ_{i+1})` equals `ε_{i+1}`.
pub fn dsi_chain(spec: &SystemSpec, depth: usize) -> Result<DsiChain> {
    spec.validate()?;
    let mut mu = alloc::vec![*spec];
    let mut eps = Vec::new();
    let mut status = ChainStatus::Complete;
    let probes = probe_radii(spec, 64);
    let mut max_defect = 0.0_f64;
    for i in 1..=depth {
        let prev = mu[i - 1];
        let (next, _) = shape_invariance_shift(&prev);
        if next.coupling <= 0.0 {
            status = ChainStatus::Truncated {
                depth: i - 1,
                reason: format!("coupling {} of step {i} is not positive", next.coupling),
            };
            break;
        }
        let e = chain_increment(spec, i);
        let wp = superpotential(&prev);
        let wn = superpotential(&next);
        for &r in &probes {
            let f = (1.0 + spec.lambda * r * r).sqrt();
            let (w0, d0) = wp.eval(r)?;
            let (w1, d1) = wn.eval(r)?;
            let lhs = w0 * w0 + f * d0 - (w1 * w1 - f * d1);
            let scale = 1.0 + w0 * w0 + (f * d0).abs() + e.abs();
            max_defect = max_defect.max((lhs - e).abs() / scale);
        }
        mu.push(next);
        eps.push(e);
    }
    if max_defect > 1e-9 {
        return Err(Error::Consistency(format!("shape-invariance defect {max_defect:e} exceeds 1e-9")));
    }
    Ok(DsiChain { mu, eps, epsilon0: superpotential(spec).epsilon0, status, max_dsi_defect: max_defect })
}

/// `E_{n_r} = Σ_{i=0}^{n_r} ε_i`.
pub fn energy_from_chain(chain: &DsiChain, n_r: usize) -> Result<f64> {
    if n_r > chain.depth() {
        return Err(Error::DepthExceeded { index: n_r, depth: chain.depth() });
    }
    Ok(chain.epsilon0 + chain.eps[..n_r].iter().sum::<f64>())
}

impl core::fmt::Display for ChainStatus {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            ChainStatus::Complete => f.write_str("complete"),
            ChainStatus::Truncated { depth, reason } => write!(f, "truncated at depth {depth}: {reason}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zmap_derivatives_match_differences() {
        for map in [ZMap::Oscillator { lambda: -0.8 }, ZMap::Coulomb { lambda: 1.7 }, ZMap::Linear { scale: 2.0 }] {
            let r = 0.37;
            let h = 1e-5;
            let (_, z1, z2) = map.eval(r);
            let fd1 = (map.z(r + h) - map.z(r - h)) / (2.0 * h);
            let fd2 = (map.z(r + h) - 2.0 * map.z(r) + map.z(r - h)) / (h * h);
            assert!((z1 - fd1).abs() < 1e-6 * (1.0 + z1.abs()));
            assert!((z2 - fd2).abs() < 1e-3 * (1.0 + z2.abs()));
        }
    }

    #[test]
    fn depth_zero_chain() {
        let s = SystemSpec::oscillator(-1.0, 3, 0, 2.0).unwrap();
        let c = dsi_chain(&s, 0).unwrap();
        assert_eq!(c.mu.len(), 1);
        assert!(c.eps.is_empty());
        assert_eq!(energy_from_chain(&c, 0).unwrap(), 7.0);
        assert!(energy_from_chain(&c, 1).is_err());
    }

    #[test]
    fn oscillator_chain_truncates_on_positive_curvature() {
        let s = SystemSpec::oscillator(1.0, 3, 0, 2.5).unwrap();
        let c = dsi_chain(&s, 5).unwrap();
        assert!(matches!(c.status, ChainStatus::Truncated { depth: 2, .. }));
        assert_eq!(c.depth(), 2);
    }
}
