//! Curved-space oscillator and Kepler–Coulomb systems: parameters, deforming
//! function, potentials, closed-form spectra and (unnormalized) radial
//! wavefunctions.
//!
//! The radial problem is `−√f d/dr f d/dr √f ψ + V ψ = E ψ` with
//! `f(r) = √(1+λr²)`, `a = l + (d−1)/2`, and
//!
//! * oscillator: `V = a(a−1)/r² + β(β+λ) r²/f²`,
//! * Kepler–Coulomb: `V = a(a−1)/r² − (Q/r) f`.
//!
//! For `λ < 0` the radial coordinate lives on `(0, 1/√|λ|)`; otherwise on
//! `(0, ∞)`.

use alloc::format;
use alloc::string::ToString;
use alloc::vec::Vec;

#[allow(unused_imports)] // inherent float methods need std
use num_traits::Float;

use crate::error::{finite, Error, Result};
use crate::specfun::{jacobi, laguerre_eval, romanovski_eval, JacobiParams};

/// Which potential the system carries.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SystemKind {
    /// Nonlinear harmonic oscillator (coupling β).
    Oscillator,
    /// Nonlinear Kepler–Coulomb problem (coupling Q).
    Coulomb,
}

impl SystemKind {
    /// Short lowercase label: `nlho` or `nlkc`.
    pub fn label(self) -> &'static str {
        match self {
            SystemKind::Oscillator => "nlho",
            SystemKind::Coulomb => "nlkc",
        }
    }
}

/// Curvature, dimension, angular momentum and coupling of one system.
///
/// `l` is signed so that the formal parameter values used by seed functions
/// (e.g. `l → −l−d+2`, i.e. `a → 1−a`) are representable; constructors that
/// build physical systems reject `l < 0`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SystemSpec {
    pub kind: SystemKind,
    pub lambda: f64,
    pub d: u32,
    pub l: i32,
    pub coupling: f64,
}

impl SystemSpec {
    /// Validated constructor.
    pub fn new(kind: SystemKind, lambda: f64, d: u32, l: i32, coupling: f64) -> Result<Self> {
        let spec = SystemSpec { kind, lambda, d, l, coupling };
        spec.validate()?;
        Ok(spec)
    }

    pub fn oscillator(lambda: f64, d: u32, l: u32, beta: f64) -> Result<Self> {
        Self::new(SystemKind::Oscillator, lambda, d, l as i32, beta)
    }

    pub fn coulomb(lambda: f64, d: u32, l: u32, q: f64) -> Result<Self> {
        Self::new(SystemKind::Coulomb, lambda, d, l as i32, q)
    }

    /// Unvalidated parameter set, for formal evaluations (seeds, shifted
    /// hierarchy members).
    pub fn formal(kind: SystemKind, lambda: f64, d: u32, l: i32, coupling: f64) -> Self {
        SystemSpec { kind, lambda, d, l, coupling }
    }

    pub fn validate(&self) -> Result<()> {
        finite(self.lambda, "lambda")?;
        finite(self.coupling, "coupling")?;
        if self.d < 2 {
            return Err(Error::InvalidSpec(format!("dimension d = {} must be at least 2", self.d)));
        }
        if self.l < 0 {
            return Err(Error::InvalidSpec(format!("angular momentum l = {} must be non-negative", self.l)));
        }
        if self.a() <= 0.0 {
            return Err(Error::InvalidSpec(format!("a = l + (d-1)/2 = {} must be positive", self.a())));
        }
        if self.coupling <= 0.0 {
            let name = match self.kind {
                SystemKind::Oscillator => "beta",
                SystemKind::Coulomb => "Q",
            };
            return Err(Error::InvalidSpec(format!("{name} = {} must be positive", self.coupling)));
        }
        Ok(())
    }

    /// `a = l + (d−1)/2`.
    pub fn a(&self) -> f64 {
        self.l as f64 + (self.d as f64 - 1.0) / 2.0
    }

    /// Same system with a different angular momentum (unvalidated).
    pub fn with_l(&self, l: i32) -> Self {
        SystemSpec { l, ..*self }
    }

    /// Same system with a different coupling (unvalidated).
    pub fn with_coupling(&self, coupling: f64) -> Self {
        SystemSpec { coupling, ..*self }
    }

    /// Same system with a different curvature (unvalidated).
    pub fn with_lambda(&self, lambda: f64) -> Self {
        SystemSpec { lambda, ..*self }
    }

    /// Same system with `a` replaced by `1 − a` (`l → −l−d+2`).
    pub fn reflected(&self) -> Self {
        self.with_l(2 - self.l - self.d as i32)
    }

    pub fn geometry(&self) -> Geometry {
        Geometry::new(self.lambda)
    }

    pub fn radial_domain(&self) -> RadialDomain {
        RadialDomain::for_lambda(self.lambda)
    }

    /// `√|λ|`.
    pub fn sqrt_abs_lambda(&self) -> f64 {
        self.lambda.abs().sqrt()
    }

    /// Characteristic length of the low-lying states; used to place probe
    /// points and truncation radii.
    pub fn length_scale(&self) -> f64 {
        let a = self.a().abs();
        match self.kind {
            SystemKind::Oscillator => 1.0 / self.coupling.sqrt(),
            SystemKind::Coulomb => 2.0 * (a + 1.0) * (a + 1.0) / self.coupling,
        }
    }

    /// Potential without its centrifugal term, as a function of `r`:
    /// `β(β+λ)r²/f²` or `−Qf/r`.
    pub fn regular_potential_at_radius(&self, r: f64, f: f64) -> f64 {
        match self.kind {
            SystemKind::Oscillator => self.coupling * (self.coupling + self.lambda) * r * r / (f * f),
            SystemKind::Coulomb => -self.coupling * f / r,
        }
    }

    /// Full potential at a radius, without domain checks.
    pub(crate) fn potential_unchecked(&self, r: f64) -> f64 {
        let a = self.a();
        let f = (1.0 + self.lambda * r * r).sqrt();
        a * (a - 1.0) / (r * r) + self.regular_potential_at_radius(r, f)
    }

    /// `V(r)`; see [`potential_v`].
    pub fn potential(&self, r: f64) -> Result<f64> {
        potential_v(self, r)
    }
}

/// The open radial interval `(0, r_max)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RadialDomain {
    /// `None` for `λ ≥ 0`, `1/√|λ|` otherwise.
    pub r_max: Option<f64>,
}

impl RadialDomain {
    pub fn for_lambda(lambda: f64) -> Self {
        if lambda < 0.0 {
            RadialDomain { r_max: Some(1.0 / (-lambda).sqrt()) }
        } else {
            RadialDomain { r_max: None }
        }
    }

    /// Strict interior membership.
    pub fn contains(&self, r: f64) -> bool {
        r > 0.0 && r.is_finite() && self.r_max.map_or(true, |m| r < m)
    }

    pub fn upper(&self) -> f64 {
        self.r_max.unwrap_or(f64::INFINITY)
    }

    fn check(&self, r: f64) -> Result<()> {
        if self.contains(r) {
            Ok(())
        } else {
            Err(Error::Domain { x: r, lo: 0.0, hi: self.upper() })
        }
    }
}

/// Geodesic description of the radial line.
///
/// With `v` the geodesic distance from the origin, `r(v)` is `sin(√|λ|v)/√|λ|`,
/// `v` or `sinh(√λ v)/√λ`, and `dr/dv = f`. Writing `φ(v) = √f ψ(r(v))` turns
/// the deformed equation into `−φ'' + Vφ = Eφ`. For `λ < 0` the geodesic
/// continues past `r_max` (where `f` changes sign) to the antipode
/// `v = π/√|λ|`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Geometry {
    pub lambda: f64,
}

impl Geometry {
    pub fn new(lambda: f64) -> Self {
        Geometry { lambda }
    }

    fn s(&self) -> f64 {
        self.lambda.abs().sqrt()
    }

    /// `r(v)`.
    pub fn radius(&self, v: f64) -> f64 {
        let s = self.s();
        if self.lambda < 0.0 {
            (s * v).sin() / s
        } else if self.lambda > 0.0 {
            (s * v).sinh() / s
        } else {
            v
        }
    }

    /// `f` along the geodesic (signed beyond `r_max` on the sphere).
    pub fn deforming(&self, v: f64) -> f64 {
        let s = self.s();
        if self.lambda < 0.0 {
            (s * v).cos()
        } else if self.lambda > 0.0 {
            (s * v).cosh()
        } else {
            1.0
        }
    }

    /// `v(r)` on the first branch.
    pub fn arclength(&self, r: f64) -> f64 {
        let s = self.s();
        if self.lambda < 0.0 {
            (s * r).min(1.0).asin() / s
        } else if self.lambda > 0.0 {
            (s * r).asinh() / s
        } else {
            r
        }
    }

    /// Angle-like coordinate `u = √|λ| v` (or `v` in flat space).
    pub fn angle(&self, v: f64) -> f64 {
        if self.lambda == 0.0 {
            v
        } else {
            self.s() * v
        }
    }
}

/// One bound state: quantum number and energies in both conventions.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SpectrumEntry {
    /// Radial quantum number (`−m−1` for the extra state of type III
    /// extensions).
    pub n_r: i64,
    /// Energy of the deformed operator.
    pub energy: f64,
    /// Energy in the original convention, `E + λ(d−1)²/4`.
    pub energy_script: f64,
    pub admissible: bool,
}

impl SpectrumEntry {
    pub fn new(spec: &SystemSpec, n_r: i64, energy: f64) -> Self {
        let dm1 = spec.d as f64 - 1.0;
        SpectrumEntry { n_r, energy, energy_script: energy + 0.25 * spec.lambda * dm1 * dm1, admissible: true }
    }
}

/// `f(r) = √(1+λr²)` on the closed radial domain `[0, r_max]`.
pub fn deforming_f(lambda: f64, r: f64) -> Result<f64> {
    finite(lambda, "lambda")?;
    finite(r, "radius")?;
    let dom = RadialDomain::for_lambda(lambda);
    if r < 0.0 || r > dom.upper() {
        return Err(Error::Domain { x: r, lo: 0.0, hi: dom.upper() });
    }
    Ok((1.0 + lambda * r * r).max(0.0).sqrt())
}

/// `V(r)` on the open radial domain.
pub fn potential_v(spec: &SystemSpec, r: f64) -> Result<f64> {
    finite(r, "radius")?;
    spec.radial_domain().check(r)?;
    Ok(spec.potential_unchecked(r))
}

/// Closed-form energy for an arbitrary (possibly formal) quantum number.
pub fn energy(spec: &SystemSpec, n_r: i64) -> f64 {
    let a = spec.a();
    let n = n_r as f64;
    match spec.kind {
        SystemKind::Oscillator => {
            let b = spec.coupling;
            b * (4.0 * n + 2.0 * a + 1.0) - spec.lambda * (2.0 * n + a) * (2.0 * n + a)
        }
        SystemKind::Coulomb => {
            let big_n = n + a;
            let q = spec.coupling;
            -q * q / (4.0 * big_n * big_n) - spec.lambda * big_n * big_n
        }
    }
}

/// Strict upper bound on `n_r` (finite only for `λ > 0`).
pub fn level_bound(spec: &SystemSpec) -> Option<f64> {
    if spec.lambda <= 0.0 {
        return None;
    }
    let a = spec.a();
    Some(match spec.kind {
        SystemKind::Oscillator => spec.coupling / (2.0 * spec.lambda) - a / 2.0,
        SystemKind::Coulomb => (spec.coupling / (2.0 * spec.lambda.sqrt())).sqrt() - a,
    })
}

/// Whether `n_r` labels a normalizable bound state.
pub fn is_admissible(spec: &SystemSpec, n_r: i64) -> bool {
    n_r >= 0 && level_bound(spec).map_or(true, |b| (n_r as f64) < b)
}

/// Bound-state spectrum, capped at `max_count` entries (all levels when the
/// spectrum is finite and shorter).
pub fn spectrum(spec: &SystemSpec, max_count: usize) -> Vec<SpectrumEntry> {
    (0..max_count as i64)
        .take_while(|&n| is_admissible(spec, n))
        .map(|n| SpectrumEntry::new(spec, n, energy(spec, n)))
        .collect()
}

/// Unnormalized radial wavefunction `ψ_{n_r}(r)` of an admissible state.
pub fn wavefunction_psi(spec: &SystemSpec, n_r: i64, r: f64) -> Result<f64> {
    if !is_admissible(spec, n_r) {
        return Err(Error::Inadmissible {
            n_r,
            reason: match level_bound(spec) {
                Some(b) => format!("bound states require 0 <= n_r < {b}"),
                None => "n_r must be non-negative".to_string(),
            },
        });
    }
    finite(r, "radius")?;
    spec.radial_domain().check(r)?;
    psi_formal(spec, n_r as u32, r)
}

/// Closed-form `ψ_n(r)` without admissibility or domain checks; used for
/// seed functions at formal parameter values.
pub fn psi_formal(spec: &SystemSpec, n: u32, r: f64) -> Result<f64> {
    let f = (1.0 + spec.lambda * r * r).sqrt();
    let phi = reduced_from_radius(spec, n, r, f, spec.geometry().arclength(r))?;
    Ok(phi / f.sqrt())
}

/// `φ_n(v) = √f ψ_n` as a function of geodesic distance; on the sphere the
/// Kepler–Coulomb state is continued over the whole geodesic `(0, π/√|λ|)`.
pub fn reduced_wavefunction(spec: &SystemSpec, n: u32, v: f64) -> Result<f64> {
    let g = spec.geometry();
    let r = g.radius(v);
    let f = g.deforming(v);
    reduced_from_radius(spec, n, r, f, v)
}

fn reduced_from_radius(spec: &SystemSpec, n: u32, r: f64, f: f64, v: f64) -> Result<f64> {
    let a = spec.a();
    let lambda = spec.lambda;
    let nf = n as f64;
    match spec.kind {
        SystemKind::Oscillator => {
            let beta = spec.coupling;
            if lambda == 0.0 {
                let t = beta * r * r;
                let l = laguerre_eval(n, a - 0.5, t)?;
                Ok(r.powf(a) * (-0.5 * t).exp() * l.value)
            } else {
                let k = -beta / lambda - 0.5;
                let p = jacobi(n, JacobiParams::new(a - 0.5, k), 1.0 + 2.0 * lambda * r * r)?;
                // in logs: r^a and f^{k+½} over- and underflow together far out
                Ok((a * r.ln() + (k + 0.5) * f.ln()).exp() * p.value)
            }
        }
        SystemKind::Coulomb => {
            let q = spec.coupling;
            let big_n = nf + a;
            if big_n == 0.0 {
                return Err(Error::Unsupported("vanishing principal number n_r + a".to_string()));
            }
            if lambda == 0.0 {
                let l = laguerre_eval(n, 2.0 * a - 1.0, q * r / big_n)?;
                Ok(r.powf(a) * (-q * r / (2.0 * big_n)).exp() * l.value)
            } else {
                let s = lambda.abs().sqrt();
                let u = s * v;
                let c = q / (2.0 * big_n * s);
                let z = f / (s * r);
                let log_rn = big_n * r.abs().ln();
                if lambda > 0.0 {
                    // (f − s r)^c = e^{−c u}
                    let p = jacobi(n, JacobiParams::new(-big_n + c, -big_n - c), z)?;
                    Ok((log_rn - c * u).exp() * p.value)
                } else {
                    let p = romanovski_eval(n, 2.0 * c, 1.0 - big_n, z)?;
                    Ok((log_rn - c * u).exp() * p.value)
                }
            }
        }
    }
}

/// Which measure a weight refers to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WeightKind {
    /// The `ψ` functions are orthogonal with respect to `dr`.
    Psi,
    /// Full radial functions `R = r^{−(d−1)/2} ψ` use `f^{−1} r^{d−1} dr`.
    Radial,
}

/// Measure density for the requested function class.
pub fn measure_weight(spec: &SystemSpec, r: f64, kind: WeightKind) -> f64 {
    match kind {
        WeightKind::Psi => 1.0,
        WeightKind::Radial => r.powi(spec.d as i32 - 1) / (1.0 + spec.lambda * r * r).sqrt(),
    }
}

/// Interior probe radii spanning the region where low-lying states live.
pub fn probe_radii(spec: &SystemSpec, count: usize) -> Vec<f64> {
    let count = count.max(2);
    let (lo, hi) = match spec.radial_domain().r_max {
        Some(m) => (0.02 * m, 0.98 * m),
        None => {
            let l = spec.length_scale();
            (0.02 * l, 4.0 * l)
        }
    };
    (0..count).map(|k| lo + (hi - lo) * k as f64 / (count - 1) as f64).collect()
}

/// What coordinate a [`GridFunction`] is sampled on.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DomainTag {
    /// Radial coordinate `r`.
    Radial,
    /// Geodesic distance `v`.
    Arclength,
    /// Flat-space variable `u` of the point canonical transformation.
    Angle,
}

/// A real function sampled on a strictly increasing grid.
#[derive(Clone, Debug, PartialEq)]
pub struct GridFunction {
    tag: DomainTag,
    nodes: Vec<f64>,
    values: Vec<f64>,
    provenance: Option<SystemSpec>,
}

impl GridFunction {
    pub fn new(tag: DomainTag, nodes: Vec<f64>, values: Vec<f64>, provenance: Option<SystemSpec>) -> Result<Self> {
        if nodes.len() != values.len() {
            return Err(Error::GridMismatch(format!("{} nodes but {} values", nodes.len(), values.len())));
        }
        if nodes.len() < 2 {
            return Err(Error::GridMismatch("a grid function needs at least two nodes".to_string()));
        }
        if nodes.windows(2).any(|w| !(w[1] > w[0])) {
            return Err(Error::GridMismatch("nodes must be strictly increasing".to_string()));
        }
        if nodes.iter().chain(values.iter()).any(|x| !x.is_finite()) {
            return Err(Error::NonFinite("grid function sample"));
        }
        Ok(GridFunction { tag, nodes, values, provenance })
    }

    /// Samples `f` at the given nodes.
    pub fn sample(
        tag: DomainTag,
        nodes: Vec<f64>,
        provenance: Option<SystemSpec>,
        mut f: impl FnMut(f64) -> Result<f64>,
    ) -> Result<Self> {
        let values = nodes.iter().map(|&x| f(x)).collect::<Result<Vec<_>>>()?;
        Self::new(tag, nodes, values, provenance)
    }

    pub fn tag(&self) -> DomainTag {
        self.tag
    }

    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn provenance(&self) -> Option<&SystemSpec> {
        self.provenance.as_ref()
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// Number of sign changes, ignoring samples below `floor · max|value|`.
    pub fn sign_changes(&self, floor: f64) -> usize {
        count_sign_changes(&self.values, floor)
    }
}

/// Sign changes of a sample sequence, skipping near-zero samples.
pub fn count_sign_changes(values: &[f64], floor: f64) -> usize {
    let peak = values.iter().fold(0.0_f64, |m, v| m.max(v.abs()));
    let cut = floor * peak;
    let mut last = 0.0_f64;
    let mut changes = 0;
    for &v in values {
        if v.abs() <= cut {
            continue;
        }
        if last != 0.0 && (v > 0.0) != (last > 0.0) {
            changes += 1;
        }
        last = v;
    }
    changes
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validation_rejects_bad_specs() {
        assert!(SystemSpec::oscillator(-1.0, 1, 0, 1.0).is_err());
        assert!(SystemSpec::oscillator(-1.0, 3, 0, 0.0).is_err());
        assert!(SystemSpec::coulomb(1.0, 3, 0, -2.0).is_err());
        assert!(SystemSpec::coulomb(f64::NAN, 3, 0, 2.0).is_err());
        assert!(SystemSpec::coulomb(1.0, 2, 0, 2.0).is_ok());
    }

    #[test]
    fn domain_edges() {
        assert!(deforming_f(-1.0, 1.0).is_ok());
        assert!(deforming_f(-1.0, 1.0 + 1e-9).is_err());
        let s = SystemSpec::oscillator(-1.0, 3, 0, 2.0).unwrap();
        assert!(potential_v(&s, 1.0).is_err());
        assert!(potential_v(&s, 0.0).is_err());
    }

    #[test]
    fn inadmissible_state_is_an_error() {
        let s = SystemSpec::coulomb(1.0, 3, 0, 20.0).unwrap();
        assert!(wavefunction_psi(&s, 3, 0.5).is_err());
        assert!(wavefunction_psi(&s, 2, 0.5).is_ok());
    }

    #[test]
    fn geometry_round_trip() {
        for &lam in &[-0.7, 0.0, 2.0] {
            let g = Geometry::new(lam);
            let r = 0.4;
            assert!((g.radius(g.arclength(r)) - r).abs() < 1e-14);
        }
    }

    #[test]
    fn sign_change_counter() {
        assert_eq!(count_sign_changes(&[1.0, 0.5, -0.2, -0.1, 0.3], 0.0), 2);
        assert_eq!(count_sign_changes(&[1.0, 1e-20, -1e-20, 1.0], 1e-12), 0);
    }

    #[test]
    fn grid_function_invariants() {
        assert!(GridFunction::new(DomainTag::Radial, alloc::vec![0.0, 1.0], alloc::vec![1.0], None).is_err());
        assert!(GridFunction::new(DomainTag::Radial, alloc::vec![1.0, 1.0], alloc::vec![1.0, 2.0], None).is_err());
        assert!(GridFunction::new(DomainTag::Radial, alloc::vec![0.0, 1.0], alloc::vec![1.0, f64::NAN], None).is_err());
        assert!(GridFunction::new(DomainTag::Angle, alloc::vec![0.0, 1.0], alloc::vec![1.0, 2.0], None).is_ok());
    }
}
