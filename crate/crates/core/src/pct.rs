//! Point canonical transformation onto constant-mass problems.
//!
//! The change of variable `u = ξ v(r)` with `v` the geodesic distance and
//! `ξ = √|λ|`, together with `ϕ(u) ∝ √f ψ(r)`, maps the deformed radial
//! problem onto one of four textbook potentials:
//!
//! | system                  | target            | `B`          | `ζ`              |
//! |-------------------------|-------------------|--------------|------------------|
//! | oscillator, `λ < 0`     | Pöschl–Teller I   | `β/|λ|`      | `−β(β−|λ|)/|λ|`  |
//! | oscillator, `λ > 0`     | Pöschl–Teller II  | `β/λ`        | `β(β+λ)/λ`       |
//! | Kepler–Coulomb, `λ < 0` | Rosen–Morse I     | `−Q/(2√|λ|)` | `0`              |
//! | Kepler–Coulomb, `λ > 0` | Eckart            | `Q/(2√λ)`    | `0`              |
//!
//! with `A = a`, `V(r) = ξ² U(u(r)) + ζ` and `E = ξ² ε + ζ`.

use alloc::format;
use alloc::string::ToString;
use alloc::vec::Vec;
use core::f64::consts::{FRAC_PI_2, PI};

#[allow(unused_imports)] // inherent float methods need std
use num_traits::Float;

use crate::error::{finite, Error, Result};
use crate::model::{self, probe_radii, SystemKind, SystemSpec};
use crate::specfun::{jacobi, romanovski_eval, JacobiParams};

/// The four flat-space target potentials.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FlatFamily {
    /// `A(A−1)csc²u + B(B−1)sec²u` on `(0, π/2)`.
    PoschlTellerI,
    /// `A(A−1)csch²u − B(B+1)sech²u` on `(0, ∞)`.
    PoschlTellerII,
    /// `A(A−1)csc²u + 2B cot u` on `(0, π)`.
    RosenMorseI,
    /// `A(A−1)csch²u − 2B coth u` on `(0, ∞)`.
    Eckart,
}

impl FlatFamily {
    pub fn label(self) -> &'static str {
        match self {
            FlatFamily::PoschlTellerI => "pt1",
            FlatFamily::PoschlTellerII => "pt2",
            FlatFamily::RosenMorseI => "rm1",
            FlatFamily::Eckart => "eckart",
        }
    }

    /// Trigonometric families live on the sphere-like chart.
    pub fn is_trigonometric(self) -> bool {
        matches!(self, FlatFamily::PoschlTellerI | FlatFamily::RosenMorseI)
    }
}

/// A flat target potential with its parameters.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct FlatPotentialSpec {
    pub family: FlatFamily,
    pub a: f64,
    pub b: f64,
}

impl FlatPotentialSpec {
    pub fn new(family: FlatFamily, a: f64, b: f64) -> Result<Self> {
        finite(a, "A")?;
        finite(b, "B")?;
        if a <= 0.0 {
            return Err(Error::InvalidSpec(format!("A = {a} must be positive")));
        }
        Ok(FlatPotentialSpec { family, a, b })
    }

    /// Open interval on which the potential is defined.
    pub fn u_domain(&self) -> (f64, f64) {
        match self.family {
            FlatFamily::PoschlTellerI => (0.0, FRAC_PI_2),
            FlatFamily::RosenMorseI => (0.0, PI),
            FlatFamily::PoschlTellerII | FlatFamily::Eckart => (0.0, f64::INFINITY),
        }
    }

    fn check(&self, u: f64) -> Result<()> {
        finite(u, "u")?;
        let (lo, hi) = self.u_domain();
        if u > lo && u < hi {
            Ok(())
        } else {
            Err(Error::Domain { x: u, lo, hi })
        }
    }

    /// Potential without the `A(A−1)/sin²u` (or `/sinh²u`) barrier.
    pub fn regular_part(&self, u: f64) -> f64 {
        let b = self.b;
        match self.family {
            FlatFamily::PoschlTellerI => b * (b - 1.0) / (u.cos() * u.cos()),
            FlatFamily::PoschlTellerII => -b * (b + 1.0) / (u.cosh() * u.cosh()),
            FlatFamily::RosenMorseI => 2.0 * b / u.tan(),
            FlatFamily::Eckart => -2.0 * b / u.tanh(),
        }
    }

    /// Strict upper bound on `n_r` for the finite spectra.
    pub fn level_bound(&self) -> Option<f64> {
        match self.family {
            FlatFamily::PoschlTellerII => Some((self.b - self.a) / 2.0),
            FlatFamily::Eckart => Some(if self.b > 0.0 { self.b.sqrt() - self.a } else { 0.0 }),
            _ => None,
        }
    }

    pub fn is_admissible(&self, n_r: i64) -> bool {
        n_r >= 0 && self.level_bound().map_or(true, |b| (n_r as f64) < b)
    }

    /// `ε_{n_r}` for any quantum number.
    pub fn epsilon(&self, n_r: i64) -> f64 {
        let (a, b, n) = (self.a, self.b, n_r as f64);
        match self.family {
            FlatFamily::PoschlTellerI => (a + b + 2.0 * n).powi(2),
            FlatFamily::PoschlTellerII => -(a - b + 2.0 * n).powi(2),
            FlatFamily::RosenMorseI => (a + n).powi(2) - b * b / (a + n).powi(2),
            FlatFamily::Eckart => -(a + n).powi(2) - b * b / (a + n).powi(2),
        }
    }
}

/// One level of a flat target potential.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct FlatSpectrumEntry {
    pub n_r: i64,
    pub epsilon: f64,
}

/// `U(u)` on the open domain of the family.
pub fn flat_potential_u(fp: &FlatPotentialSpec, u: f64) -> Result<f64> {
    fp.check(u)?;
    let barrier = if fp.family.is_trigonometric() { u.sin() } else { u.sinh() };
    Ok(fp.a * (fp.a - 1.0) / (barrier * barrier) + fp.regular_part(u))
}

/// Lowest `max_count` levels (all of them if the spectrum is shorter).
pub fn flat_spectrum(fp: &FlatPotentialSpec, max_count: usize) -> Vec<FlatSpectrumEntry> {
    (0..max_count as i64)
        .take_while(|&n| fp.is_admissible(n))
        .map(|n| FlatSpectrumEntry { n_r: n, epsilon: fp.epsilon(n) })
        .collect()
}

/// Unnormalized bound state `ϕ_{n_r}(u)`.
pub fn flat_wavefunction(fp: &FlatPotentialSpec, n_r: i64, u: f64) -> Result<f64> {
    if !fp.is_admissible(n_r) {
        return Err(Error::Inadmissible {
            n_r,
            reason: match fp.level_bound() {
                Some(b) => format!("bound states of {} require 0 <= n_r < {b}", fp.family.label()),
                None => "n_r must be non-negative".to_string(),
            },
        });
    }
    fp.check(u)?;
    flat_wavefunction_unchecked(fp, n_r as u32, u)
}

pub(crate) fn flat_wavefunction_unchecked(fp: &FlatPotentialSpec, n: u32, u: f64) -> Result<f64> {
    let (a, b) = (fp.a, fp.b);
    let nf = n as f64;
    Ok(match fp.family {
        FlatFamily::PoschlTellerI => {
            let p = jacobi(n, JacobiParams::new(a - 0.5, b - 0.5), (2.0 * u).cos())?;
            u.sin().powf(a) * u.cos().powf(b) * p.value
        }
        FlatFamily::PoschlTellerII => {
            let p = jacobi(n, JacobiParams::new(a - 0.5, -b - 0.5), (2.0 * u).cosh())?;
            (a * u.sinh().ln() - b * u.cosh().ln()).exp() * p.value
        }
        FlatFamily::RosenMorseI => {
            let k = a + nf;
            let p = romanovski_eval(n, -2.0 * b / k, 1.0 - k, 1.0 / u.tan())?;
            u.sin().powf(k) * (b * u / k).exp() * p.value
        }
        FlatFamily::Eckart => {
            let k = a + nf;
            let p = jacobi(n, JacobiParams::new(-k + b / k, -k - b / k), 1.0 / u.tanh())?;
            (k * u.sinh().ln() - b * u / k).exp() * p.value
        }
    })
}

/// `u(r) = arcsin(√|λ| r)` (`λ < 0`) or `arcsinh(√λ r)` (`λ > 0`).
pub fn u_of_r(lambda: f64, r: f64) -> Result<f64> {
    finite(lambda, "lambda")?;
    finite(r, "radius")?;
    if lambda == 0.0 {
        return Err(Error::FlatSpace);
    }
    let s = lambda.abs().sqrt();
    if lambda < 0.0 {
        if !(0.0..=1.0 / s).contains(&r) {
            return Err(Error::Domain { x: r, lo: 0.0, hi: 1.0 / s });
        }
        Ok((s * r).min(1.0).asin())
    } else {
        if r < 0.0 {
            return Err(Error::Domain { x: r, lo: 0.0, hi: f64::INFINITY });
        }
        Ok((s * r).asinh())
    }
}

/// Inverse of [`u_of_r`] on the first chart.
pub fn r_of_u(lambda: f64, u: f64) -> Result<f64> {
    finite(lambda, "lambda")?;
    finite(u, "u")?;
    if lambda == 0.0 {
        return Err(Error::FlatSpace);
    }
    let s = lambda.abs().sqrt();
    if lambda < 0.0 {
        if !(0.0..=FRAC_PI_2).contains(&u) {
            return Err(Error::Domain { x: u, lo: 0.0, hi: FRAC_PI_2 });
        }
        Ok(u.sin() / s)
    } else {
        if u < 0.0 {
            return Err(Error::Domain { x: u, lo: 0.0, hi: f64::INFINITY });
        }
        Ok(u.sinh() / s)
    }
}

/// The transformation attached to one curved system.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PctMap {
    pub lambda: f64,
    pub xi: f64,
    pub eta: f64,
    pub zeta: f64,
    pub target: FlatPotentialSpec,
}

impl PctMap {
    pub fn u_of_r(&self, r: f64) -> Result<f64> {
        u_of_r(self.lambda, r)
    }

    pub fn r_of_u(&self, u: f64) -> Result<f64> {
        r_of_u(self.lambda, u)
    }

    /// `ξ² ε + ζ`.
    pub fn energy(&self, epsilon: f64) -> f64 {
        self.xi * self.xi * epsilon + self.zeta
    }

    /// `ξ² U(u(r)) + ζ`.
    pub fn mapped_potential(&self, r: f64) -> Result<f64> {
        Ok(self.xi * self.xi * flat_potential_u(&self.target, self.u_of_r(r)?)? + self.zeta)
    }
}

/// Selects the target family for `(kind, sign λ)` and sets `A`, `B`, `ζ`.
///
/// Both identities `V = ξ²U + ζ` (probe grid) and `E = ξ²ε + ζ` (every
/// admissible level up to 32) are checked to `1e−9` relative before the map
/// is returned.
pub fn map_system(spec: &SystemSpec) -> Result<PctMap> {
    spec.validate()?;
    let lambda = spec.lambda;
    if lambda == 0.0 {
        return Err(Error::FlatSpace);
    }
    let xi = lambda.abs().sqrt();
    let a = spec.a();
    let c = spec.coupling;
    let (family, b, zeta) = match (spec.kind, lambda < 0.0) {
        (SystemKind::Oscillator, true) => (FlatFamily::PoschlTellerI, c / -lambda, -c * (c + lambda) / -lambda),
        (SystemKind::Oscillator, false) => (FlatFamily::PoschlTellerII, c / lambda, c * (c + lambda) / lambda),
        (SystemKind::Coulomb, true) => (FlatFamily::RosenMorseI, -c / (2.0 * xi), 0.0),
        (SystemKind::Coulomb, false) => (FlatFamily::Eckart, c / (2.0 * xi), 0.0),
    };
    let map = PctMap { lambda, xi, eta: 0.0, zeta, target: FlatPotentialSpec::new(family, a, b)? };

    for r in probe_radii(spec, 50) {
        let v = model::potential_v(spec, r)?;
        let mapped = map.mapped_potential(r)?;
        if (v - mapped).abs() > 1e-9 * (1.0 + v.abs()) {
            return Err(Error::Consistency(format!("potential map fails at r = {r}: {v} vs {mapped}")));
        }
    }
    let curved = model::spectrum(spec, 32);
    let flat = flat_spectrum(&map.target, 32);
    if curved.len() != flat.len() {
        return Err(Error::Consistency(format!(
            "level counts differ: {} curved vs {} flat",
            curved.len(),
            flat.len()
        )));
    }
    for (e, eps) in curved.iter().zip(&flat) {
        let mapped = map.energy(eps.epsilon);
        if (e.energy - mapped).abs() > 1e-9 * (1.0 + e.energy.abs()) {
            return Err(Error::Consistency(format!("energy map fails at n_r = {}", e.n_r)));
        }
    }
    Ok(map)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn endpoints_are_rejected() {
        let fp = FlatPotentialSpec::new(FlatFamily::PoschlTellerI, 1.0, 1.0).unwrap();
        assert!(flat_potential_u(&fp, 0.0).is_err());
        assert!(flat_potential_u(&fp, FRAC_PI_2).is_err());
        assert!(u_of_r(0.0, 1.0).is_err());
        assert!(u_of_r(-1.0, 1.5).is_err());
    }

    #[test]
    fn empty_pt2_spectrum() {
        let fp = FlatPotentialSpec::new(FlatFamily::PoschlTellerII, 3.0, 2.0).unwrap();
        assert!(flat_spectrum(&fp, 10).is_empty());
        assert!(flat_wavefunction(&fp, 0, 1.0).is_err());
    }
}
