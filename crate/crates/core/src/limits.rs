//! Flat-space (`λ → 0`) limits of the rational extensions: the extended
//! radial oscillator and Kepler–Coulomb potentials with Laguerre
//! denominators, their spectra and wavefunctions, the enlarged shape
//! invariance of the flat Kepler–Coulomb family, and convergence studies
//! comparing curved extensions with their flat limits.
//!
//! Notation: `t = βr²` (oscillator) or `t = Qr/|m−a|` (Kepler–Coulomb);
//! hats denote `d/dt`.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

#[allow(unused_imports)] // inherent float methods need std
use num_traits::Float;

use crate::dsusy::{LogTerm, Superpotential, ZMap};
use crate::error::{finite, Error, Result};
use crate::model::{SpectrumEntry, SystemKind, SystemSpec};
use crate::numerics::{gauss_legendre, ArclengthDomain, RadialProblem};
use crate::rational::{self, ExtensionSpec, ExtensionType};
use crate::specfun::{laguerre_eval, PolyRef};

/// Number of samples in the nonvanishing scan of `q_m`.
const SCAN_POINTS: usize = 4001;

/// Largest `|λ|` at the end of a sequence for which the potential deviation
/// must have dropped below [`TERMINAL_TOLERANCE`].
pub const TERMINAL_LAMBDA: f64 = 1e-3;

/// Required terminal deviation of the rational part.
pub const TERMINAL_TOLERANCE: f64 = 1e-4;

/// A flat-space rational extension (`λ = 0`).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct FlatExtendedSystem {
    parent: SystemSpec,
    ext_type: ExtensionType,
    m: u32,
}

impl FlatExtendedSystem {
    /// Validated construction. The Kepler–Coulomb family has no type I
    /// limit; the other inequalities are
    /// oscillator II/III: `m < a + 1/2` (III: `m` even);
    /// Kepler–Coulomb II: `a < m < 2a + 1`; III: `m < a`, `m` even.
    pub fn new(kind: SystemKind, d: u32, l: u32, coupling: f64, ext_type: ExtensionType, m: u32) -> Result<Self> {
        let parent = SystemSpec::new(kind, 0.0, d, l as i32, coupling)?;
        Self::from_parent(parent, ext_type, m)
    }

    fn from_parent(parent: SystemSpec, ext_type: ExtensionType, m: u32) -> Result<Self> {
        parent.validate()?;
        if parent.lambda != 0.0 {
            return Err(Error::InvalidSpec(format!("flat systems need lambda = 0, got {}", parent.lambda)));
        }
        if m == 0 {
            return Err(Error::ExtensionInadmissible("the degree m must be at least 1".into()));
        }
        let sys = FlatExtendedSystem { parent, ext_type, m };
        sys.admissibility().map_err(Error::ExtensionInadmissible)?;
        let (min_abs, max_abs, changes) = sys.scan()?;
        if changes > 0 || min_abs <= 1e-8 * max_abs {
            return Err(Error::ExtensionInadmissible(format!(
                "denominator q_m changes sign or nearly vanishes for t >= 0 (min |q| = {min_abs:e}, max |q| = {max_abs:e})"
            )));
        }
        Ok(sys)
    }

    /// The flat system reached by a curved extension as `λ → 0` at fixed
    /// `(d, l, coupling, type, m)`.
    pub fn limit_of(ext: &ExtensionSpec) -> Result<Self> {
        Self::from_parent(ext.parent().with_lambda(0.0), ext.ext_type(), ext.m())
    }

    /// Unchecked construction (formal degree, shifted partners).
    pub fn formal(parent: SystemSpec, ext_type: ExtensionType, m: u32) -> Self {
        FlatExtendedSystem { parent: parent.with_lambda(0.0), ext_type, m }
    }

    pub fn parent(&self) -> &SystemSpec {
        &self.parent
    }

    pub fn kind(&self) -> SystemKind {
        self.parent.kind
    }

    pub fn ext_type(&self) -> ExtensionType {
        self.ext_type
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn a(&self) -> f64 {
        self.parent.a()
    }

    pub fn coupling(&self) -> f64 {
        self.parent.coupling
    }

    pub fn admissibility(&self) -> core::result::Result<(), String> {
        let (a, mf) = (self.a(), self.m as f64);
        let even = || {
            if self.m % 2 == 0 {
                Ok(())
            } else {
                Err(format!("type III needs an even degree, got m = {}", self.m))
            }
        };
        match (self.kind(), self.ext_type) {
            (SystemKind::Oscillator, ExtensionType::I) => Ok(()),
            (SystemKind::Oscillator, ty) => {
                if ty == ExtensionType::III {
                    even()?;
                }
                if mf < a + 0.5 {
                    Ok(())
                } else {
                    Err(format!("type {ty} needs m < a + 1/2 = {}", a + 0.5))
                }
            }
            (SystemKind::Coulomb, ExtensionType::I) => Err(
                "the flat Kepler-Coulomb problem has no type I extension: no angular momentum satisfies its conditions"
                    .into(),
            ),
            (SystemKind::Coulomb, ExtensionType::II) => {
                if a < mf && mf < 2.0 * a + 1.0 {
                    Ok(())
                } else {
                    Err(format!("type II needs a < m < 2a + 1, i.e. {a} < {mf} < {}", 2.0 * a + 1.0))
                }
            }
            (SystemKind::Coulomb, ExtensionType::III) => {
                even()?;
                if mf < a {
                    Ok(())
                } else {
                    Err(format!("type III needs m < a, i.e. {mf} < {a}"))
                }
            }
        }
    }

    /// Scale `c` of the variable `t = c·r^k` (`k = 2` oscillator, `k = 1`
    /// Kepler–Coulomb).
    pub fn t_scale(&self) -> f64 {
        match self.kind() {
            SystemKind::Oscillator => self.coupling(),
            SystemKind::Coulomb => self.coupling() / (self.m as f64 - self.a()).abs(),
        }
    }

    pub fn t_of_r(&self, r: f64) -> f64 {
        match self.kind() {
            SystemKind::Oscillator => self.t_scale() * r * r,
            SystemKind::Coulomb => self.t_scale() * r,
        }
    }

    /// `+1` if `q_m(t) = L_m^{(α)}(t)`, `−1` if `q_m(t) = L_m^{(α)}(−t)`.
    fn argument_sign(&self) -> f64 {
        match (self.kind(), self.ext_type) {
            (SystemKind::Oscillator, ExtensionType::II) | (SystemKind::Coulomb, ExtensionType::II) => 1.0,
            _ => -1.0,
        }
    }

    fn alpha(&self) -> f64 {
        let a = self.a();
        match (self.kind(), self.ext_type) {
            (SystemKind::Oscillator, ExtensionType::I) => a - 1.5,
            (SystemKind::Oscillator, _) => -a - 0.5,
            (SystemKind::Coulomb, _) => -2.0 * a - 1.0,
        }
    }

    /// The denominator `q_m` as a Laguerre instance.
    pub fn denominator(&self) -> PolyRef {
        PolyRef::laguerre(self.m, self.alpha())
    }

    /// The argument map `r ↦ ±t` of [`Self::denominator`].
    pub fn zmap(&self) -> ZMap {
        let c = self.argument_sign() * self.t_scale();
        match self.kind() {
            SystemKind::Oscillator => ZMap::Quadratic { scale: c },
            SystemKind::Coulomb => ZMap::Linear { scale: c },
        }
    }

    /// `(q, q̂, q̂̂)` at `t ≥ 0`.
    pub fn q_at_t(&self, t: f64) -> Result<(f64, f64, f64)> {
        let s = self.argument_sign();
        let v = laguerre_eval(self.m, self.alpha(), s * t)?;
        Ok((v.value, s * v.d1, v.d2))
    }

    fn scan(&self) -> Result<(f64, f64, usize)> {
        // w = (1−x)^m q(x/(1−x)) on x ∈ [0, 1]; at x = 1 it is the leading
        // coefficient (±1)^m/m!
        let m = self.m as i32;
        let mut fact = 1.0;
        for k in 1..=self.m {
            fact *= k as f64;
        }
        let lead = (-self.argument_sign()).powi(m) / fact;
        let mut values = Vec::with_capacity(SCAN_POINTS);
        for k in 0..SCAN_POINTS {
            let x = k as f64 / (SCAN_POINTS - 1) as f64;
            let v = if k + 1 == SCAN_POINTS { lead } else { (1.0 - x).powi(m) * self.q_at_t(x / (1.0 - x))?.0 };
            values.push(finite(v, "denominator sample")?);
        }
        let min_abs = values.iter().fold(f64::INFINITY, |m, v| m.min(v.abs()));
        let max_abs = values.iter().fold(0.0_f64, |m, v| m.max(v.abs()));
        let changes = values.windows(2).filter(|w| w[0].signum() != w[1].signum() || w[1] == 0.0).count();
        Ok((min_abs, max_abs, changes))
    }

    /// Additive constant of the flat partner: `+2β` (oscillator II), `−2β`
    /// (oscillator I, III), `0` (Kepler–Coulomb).
    pub fn gamma(&self) -> f64 {
        match (self.kind(), self.ext_type) {
            (SystemKind::Oscillator, ExtensionType::II) => 2.0 * self.coupling(),
            (SystemKind::Oscillator, _) => -2.0 * self.coupling(),
            (SystemKind::Coulomb, _) => 0.0,
        }
    }

    fn check_radius(&self, r: f64) -> Result<()> {
        finite(r, "radius")?;
        if r > 0.0 {
            Ok(())
        } else {
            Err(Error::Domain { x: r, lo: 0.0, hi: f64::INFINITY })
        }
    }
}

fn flat_v_rat_unchecked(sys: &FlatExtendedSystem, r: f64) -> Result<f64> {
    if sys.m == 0 {
        return Ok(0.0);
    }
    let t = sys.t_of_r(r);
    let (q, q1, q2) = sys.q_at_t(t)?;
    if q == 0.0 {
        return Err(Error::Consistency(format!("denominator polynomial vanishes at r = {r}")));
    }
    let g1 = q1 / q;
    let c = sys.coupling();
    Ok(match sys.kind() {
        SystemKind::Oscillator => -4.0 * c * (g1 + 2.0 * t * (q2 / q - g1 * g1)),
        SystemKind::Coulomb => {
            let k = sys.m as f64 - sys.a();
            -2.0 * c * c / (k * k) * (q2 / q - g1 * g1)
        }
    })
}

/// Rational part of the flat extended potential:
/// `−4β{q̂/q + 2t[q̂̂/q − (q̂/q)²]}` (oscillator) or
/// `−2Q²/(m−a)² [q̂̂/q − (q̂/q)²]` (Kepler–Coulomb).
pub fn flat_v_rat(sys: &FlatExtendedSystem, r: f64) -> Result<f64> {
    sys.check_radius(r)?;
    flat_v_rat_unchecked(sys, r)
}

fn flat_conventional(sys: &FlatExtendedSystem, r: f64) -> f64 {
    let a = sys.a();
    let c = sys.coupling();
    match sys.kind() {
        SystemKind::Oscillator => a * (a - 1.0) / (r * r) + c * c * r * r,
        SystemKind::Coulomb => a * (a - 1.0) / (r * r) - c / r,
    }
}

/// `V(r) + V_rat(r)` with the flat conventional potential
/// `a(a−1)/r² + β²r²` or `a(a−1)/r² − Q/r`.
pub fn flat_extended_potential(sys: &FlatExtendedSystem, r: f64) -> Result<f64> {
    sys.check_radius(r)?;
    Ok(flat_conventional(sys, r) + flat_v_rat_unchecked(sys, r)?)
}

/// Energy of the flat extended state with quantum number `n_r`:
/// `β(4n_r+2a+1)` (oscillator I/II), `β(4n_r+2a+5)` (oscillator III),
/// `−Q²/(4(n_r+a+1)²)` (Kepler–Coulomb; `n_r = −m−1` gives `a − m`).
pub fn flat_extended_energy(sys: &FlatExtendedSystem, n_r: i64) -> f64 {
    let (a, c, n) = (sys.a(), sys.coupling(), n_r as f64);
    match (sys.kind(), sys.ext_type) {
        (SystemKind::Oscillator, ExtensionType::III) => c * (4.0 * n + 2.0 * a + 5.0),
        (SystemKind::Oscillator, _) => c * (4.0 * n + 2.0 * a + 1.0),
        (SystemKind::Coulomb, _) => {
            let big = n + a + 1.0;
            -c * c / (4.0 * big * big)
        }
    }
}

fn flat_admissible(sys: &FlatExtendedSystem, n_r: i64) -> bool {
    n_r >= 0 || (sys.ext_type == ExtensionType::III && n_r == -(sys.m as i64) - 1)
}

/// Lowest `max_count` levels (the extra type III level first).
pub fn flat_extended_spectrum(sys: &FlatExtendedSystem, max_count: usize) -> Vec<SpectrumEntry> {
    let mut ns: Vec<i64> = Vec::new();
    if sys.ext_type == ExtensionType::III {
        ns.push(-(sys.m as i64) - 1);
    }
    let mut n = 0;
    while ns.len() < max_count {
        ns.push(n);
        n += 1;
    }
    ns.truncate(max_count);
    ns.into_iter().map(|n| SpectrumEntry::new(&sys.parent, n, flat_extended_energy(sys, n))).collect()
}

fn lag(n: i64, alpha: f64, x: f64) -> Result<f64> {
    if n < 0 {
        return Ok(0.0);
    }
    Ok(laguerre_eval(n as u32, alpha, x)?.value)
}

/// Oscillator denominator of the given type at `(m, a)` and `t`.
fn q_osc(ty: ExtensionType, m: i64, a: f64, t: f64) -> Result<f64> {
    match ty {
        ExtensionType::I => lag(m, a - 1.5, -t),
        ExtensionType::II => lag(m, -a - 0.5, t),
        ExtensionType::III => lag(m, -a - 0.5, -t),
    }
}

/// Kepler–Coulomb denominator `L_m^{(−2a−1)}(±Qr/|m−a|)`; the argument
/// depends on `m − a` only, so shifting both keeps it.
fn q_kc(sys: &FlatExtendedSystem, m: i64, a: f64, r: f64) -> Result<f64> {
    lag(m, -2.0 * a - 1.0, sys.argument_sign() * sys.t_of_r(r))
}

/// Unnormalized flat extended wavefunction:
/// `r^a e^{−t/2} 𝒬(t)/q_m(t)` (oscillator) or
/// `r^a e^{−Qr/(2(n+1))} 𝒬(r)/q_m` with `n = n_r + a` (Kepler–Coulomb).
pub fn flat_extended_wavefunction(sys: &FlatExtendedSystem, n_r: i64, r: f64) -> Result<f64> {
    if !flat_admissible(sys, n_r) {
        return Err(Error::Inadmissible {
            n_r,
            reason: String::from(if sys.ext_type == ExtensionType::III {
                "n_r must be -m-1 or >= 0"
            } else {
                "n_r must be >= 0"
            }),
        });
    }
    sys.check_radius(r)?;
    let (a, c) = (sys.a(), sys.coupling());
    let mi = sys.m as i64;
    let ty = sys.ext_type;
    let extra = ty == ExtensionType::III && n_r == -mi - 1;
    match sys.kind() {
        SystemKind::Oscillator => {
            let t = c * r * r;
            let qm = q_osc(ty, mi, a, t)?;
            let big_q = if extra {
                1.0
            } else {
                match ty {
                    ExtensionType::I => {
                        qm * (lag(n_r, a - 1.5, t)? + lag(n_r - 1, a - 0.5, t)?)
                            + q_osc(ty, mi - 1, a + 1.0, t)? * lag(n_r, a - 1.5, t)?
                    }
                    ExtensionType::II => {
                        qm * (-(a + 0.5) * lag(n_r, a + 0.5, t)? + t * lag(n_r - 1, a + 1.5, t)?)
                            - t * q_osc(ty, mi - 1, a - 1.0, t)? * lag(n_r, a + 0.5, t)?
                    }
                    ExtensionType::III => {
                        qm * ((t - a - 0.5) * lag(n_r, a + 0.5, t)? + t * lag(n_r - 1, a + 1.5, t)?)
                            + t * q_osc(ty, mi - 1, a - 1.0, t)? * lag(n_r, a + 0.5, t)?
                    }
                }
            };
            Ok((a * r.ln() - 0.5 * t).exp() * big_q / qm)
        }
        SystemKind::Coulomb => {
            let qm = q_kc(sys, mi, a, r)?;
            if extra {
                let k = a - sys.m as f64;
                return Ok((a * r.ln() - c * r / (2.0 * k)).exp() / qm);
            }
            let big = n_r as f64 + a + 1.0;
            let x = c * r / big;
            let mf = sys.m as f64;
            let big_q = x * x * qm * lag(n_r - 1, 2.0 * a + 3.0, x)?
                + (mf + 1.0) * (2.0 * a - mf + 1.0) * q_kc(sys, mi + 1, a + 1.0, r)? * lag(n_r, 2.0 * a + 1.0, x)?;
            Ok((a * r.ln() - 0.5 * x).exp() * big_q / qm)
        }
    }
}

/// Standard (`f ≡ 1`) superpotential of the flat type II Kepler–Coulomb
/// extension, `W = −a/r + Q/(2(a+1)) − (log q_{m+1}^{(a+1)})′ + (log q_m)′`.
pub fn flat_enlarged_superpotential(sys: &FlatExtendedSystem) -> Result<Superpotential> {
    if sys.kind() != SystemKind::Coulomb || sys.ext_type != ExtensionType::II {
        return Err(Error::Unsupported("the enlarged shape invariance concerns flat Kepler-Coulomb type II".into()));
    }
    let a = sys.a();
    let up = FlatExtendedSystem::formal(sys.parent.with_l(sys.parent.l + 1), sys.ext_type, sys.m + 1);
    Ok(Superpotential {
        lambda: 0.0,
        inverse_coefficient: -a,
        linear_coefficient: 0.0,
        constant: sys.coupling() / (2.0 * (a + 1.0)),
        log_terms: vec![
            LogTerm { sign: 1.0, poly: up.denominator(), zmap: up.zmap() },
            LogTerm { sign: -1.0, poly: sys.denominator(), zmap: sys.zmap() },
        ],
        epsilon0: flat_extended_energy(sys, 0),
    })
}

/// `(V^{(m)}(l) + 2W′, V^{(m+1)}(l+1))` for the flat type II Kepler–Coulomb
/// extension; the two agree by the enlarged shape invariance.
pub fn flat_enlarged_si(sys: &FlatExtendedSystem, r: f64) -> Result<(f64, f64)> {
    let w = flat_enlarged_superpotential(sys)?;
    let up = FlatExtendedSystem::formal(sys.parent.with_l(sys.parent.l + 1), sys.ext_type, sys.m + 1);
    let lhs = flat_extended_potential(sys, r)? + 2.0 * w.derivative(r)?;
    Ok((lhs, flat_extended_potential(&up, r)?))
}

impl RadialProblem for FlatExtendedSystem {
    fn chart_lambda(&self) -> f64 {
        0.0
    }

    fn centrifugal(&self) -> f64 {
        self.a()
    }

    fn regular_potential(&self, v: f64) -> Result<f64> {
        let a = self.a();
        Ok(flat_conventional(self, v) - a * (a - 1.0) / (v * v) + flat_v_rat_unchecked(self, v)?)
    }

    fn domain(&self) -> ArclengthDomain {
        ArclengthDomain::HalfLine
    }

    fn length_scale(&self) -> f64 {
        self.parent.length_scale()
    }
}

/// One point of a convergence study.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ConvergenceRow {
    pub lambda: f64,
    /// `max_r |V_rat(λ) + γ(λ) − V_rat^{flat} − γ^{flat}|` over the probes.
    pub potential_deviation: f64,
    /// Largest infidelity `1 − ⟨ψ_λ|ψ₀⟩²/(‖ψ_λ‖²‖ψ₀‖²)` over the lowest two
    /// extended states.
    pub wavefunction_distance: f64,
}

/// Curved-to-flat convergence study.
#[derive(Clone, Debug, PartialEq)]
pub struct ConvergenceReport {
    pub rows: Vec<ConvergenceRow>,
    /// Why the sequence was cut short (admissibility lost, probe outside the
    /// domain), if it was.
    pub truncated: Option<String>,
}

impl ConvergenceReport {
    /// Both deviations decrease strictly along the sequence (needs at least
    /// two rows).
    pub fn monotone(&self) -> bool {
        self.rows.len() >= 2
            && self.rows.windows(2).all(|w| {
                w[1].potential_deviation < w[0].potential_deviation
                    && w[1].wavefunction_distance < w[0].wavefunction_distance
            })
    }

    pub fn terminal(&self) -> Option<&ConvergenceRow> {
        self.rows.last()
    }

    /// The last deviation is at most ten times the first-order
    /// extrapolation `dev₁·|λ_last|/|λ₁|` from the first row.
    pub fn first_order(&self) -> bool {
        match (self.rows.first(), self.rows.last()) {
            (Some(a), Some(b)) if self.rows.len() >= 2 => {
                b.potential_deviation <= 10.0 * a.potential_deviation * (b.lambda / a.lambda).abs()
            }
            _ => false,
        }
    }

    /// Monotone decrease, a complete sequence, and a terminal potential
    /// deviation of at most `tol`.
    pub fn passes(&self, tol: f64) -> bool {
        self.truncated.is_none()
            && self.monotone()
            && self.terminal().is_some_and(|t| t.potential_deviation <= tol)
    }
}

/// Upper end of the overlap integrals: where the flat ground state has
/// decayed by `e^{−40}`, inside the curved domain.
fn overlap_cutoff(flat: &FlatExtendedSystem, n_r: i64) -> f64 {
    match flat.kind() {
        SystemKind::Oscillator => 12.0 / flat.coupling().sqrt(),
        SystemKind::Coulomb => {
            let big = (n_r as f64 + flat.a() + 1.0).max(flat.a() - flat.m as f64);
            120.0 * big / flat.coupling()
        }
    }
}

fn infidelity(ext: &ExtensionSpec, flat: &FlatExtendedSystem, n_r: i64) -> Result<f64> {
    let upper = ext.parent().radial_domain().upper();
    let cut = overlap_cutoff(flat, n_r).min(upper);
    let gl = gauss_legendre(64);
    let panels = 64;
    let (mut s11, mut s22, mut s12) = (0.0, 0.0, 0.0);
    for k in 0..panels {
        let (lo, hi) = (cut * k as f64 / panels as f64, cut * (k + 1) as f64 / panels as f64);
        let (c, h) = (0.5 * (lo + hi), 0.5 * (hi - lo));
        for (x, w) in gl.nodes.iter().zip(&gl.weights) {
            let r = c + h * x;
            let u = rational::extended_wavefunction(ext, n_r, r)?;
            let v = flat_extended_wavefunction(flat, n_r, r)?;
            s11 += w * h * u * u;
            s22 += w * h * v * v;
            s12 += w * h * u * v;
        }
    }
    Ok((1.0 - s12 * s12 / (s11 * s22)).max(0.0))
}

/// Tabulates, along `lambda_seq` (same sign as the extension's curvature),
/// the deviation of the curved rational part from its flat limit at the
/// probe radii and the infidelity of the lowest two extended states. The
/// sequence is cut at the first `λ` where the extension is inadmissible or a
/// probe leaves the radial domain.
pub fn convergence_study(ext: &ExtensionSpec, lambda_seq: &[f64], r_probe: &[f64]) -> Result<ConvergenceReport> {
    let flat = FlatExtendedSystem::limit_of(ext)?;
    let sign = ext.parent().lambda.signum();
    let mut rows = Vec::new();
    let mut truncated = None;
    for &lambda in lambda_seq {
        finite(lambda, "lambda")?;
        if lambda.signum() != sign || lambda == 0.0 {
            return Err(Error::InvalidSpec(format!(
                "curvature {lambda} has the wrong sign for this extension (expected the sign of {})",
                ext.parent().lambda
            )));
        }
        let curved = match ExtensionSpec::new(ext.parent().with_lambda(lambda), ext.ext_type(), ext.m()) {
            Ok(c) => c,
            Err(e) => {
                truncated = Some(format!("lambda = {lambda}: {e}"));
                break;
            }
        };
        let gamma = curved.system().gamma;
        let mut dev = 0.0_f64;
        let mut outside = None;
        for &r in r_probe {
            if !curved.parent().radial_domain().contains(r) {
                outside = Some(r);
                break;
            }
            let d = rational::v_rat(&curved, r)? + gamma - flat_v_rat(&flat, r)? - flat.gamma();
            dev = dev.max(d.abs());
        }
        if let Some(r) = outside {
            truncated = Some(format!("lambda = {lambda}: probe radius {r} lies outside the radial domain"));
            break;
        }
        let mut dist = 0.0_f64;
        for n in rational::extended_quantum_numbers(&curved, 2) {
            dist = dist.max(infidelity(&curved, &flat, n)?);
        }
        rows.push(ConvergenceRow { lambda, potential_deviation: dev, wavefunction_distance: dist });
    }
    Ok(ConvergenceReport { rows, truncated })
}
