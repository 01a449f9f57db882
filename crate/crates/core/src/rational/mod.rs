//! Type I/II/III rational extensions of the oscillator on the sphere
//! (`λ < 0`) and of the Kepler–Coulomb problem on the hyperbolic space
//! (`λ > 0`).
//!
//! Each extension is the deformed-supersymmetric partner of a conventional
//! potential `V(r; l′, β′)` (or `V(r; l′, Q)`), obtained from a seed
//! solution. The partner equals `V(r; l, β) + V_rat(r) (+ γ)` with a rational
//! part built from a Jacobi denominator `p_m(z)`. Types I and II are
//! isospectral with the parent; type III gains one level below it.

mod coulomb;
mod oscillator;

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

#[allow(unused_imports)] // inherent float methods need std
use num_traits::Float;

use crate::dsusy::{LogTerm, Superpotential, ZMap};
use crate::error::{finite, Error, Result};
use crate::model::{energy, psi_formal, SpectrumEntry, SystemKind, SystemSpec};
use crate::numerics::{ArclengthDomain, RadialProblem};
use crate::specfun::{PolyRef, PolyValue};

/// Which seed function generates the extension.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ExtensionType {
    I,
    II,
    III,
}

impl ExtensionType {
    pub const ALL: [ExtensionType; 3] = [ExtensionType::I, ExtensionType::II, ExtensionType::III];

    pub fn label(self) -> &'static str {
        match self {
            ExtensionType::I => "I",
            ExtensionType::II => "II",
            ExtensionType::III => "III",
        }
    }

    /// Types I and II keep the parent spectrum.
    pub fn is_isospectral(self) -> bool {
        self != ExtensionType::III
    }
}

impl fmt::Display for ExtensionType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl core::str::FromStr for ExtensionType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "I" | "i" | "1" => Ok(ExtensionType::I),
            "II" | "ii" | "2" => Ok(ExtensionType::II),
            "III" | "iii" | "3" => Ok(ExtensionType::III),
            other => Err(Error::InvalidSpec(format!("unknown extension type {other:?} (expected I, II or III)"))),
        }
    }
}

/// A rational extension: parent system, type and denominator degree.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ExtensionSpec {
    parent: SystemSpec,
    ext_type: ExtensionType,
    m: u32,
}

/// Number of samples in the nonvanishing scan of the denominator.
const SCAN_POINTS: usize = 4001;

impl ExtensionSpec {
    /// Validated construction: the parent must be an oscillator with `λ < 0`
    /// or a Kepler–Coulomb system with `λ > 0`, the admissibility
    /// inequalities must hold, and `p_m` must stay away from zero on the
    /// closed physical `z`-interval.
    pub fn new(parent: SystemSpec, ext_type: ExtensionType, m: u32) -> Result<Self> {
        parent.validate()?;
        match parent.kind {
            SystemKind::Oscillator if parent.lambda < 0.0 => {}
            SystemKind::Coulomb if parent.lambda > 0.0 => {}
            _ => {
                return Err(Error::Unsupported(format!(
                    "rational extensions are built for the oscillator with lambda < 0 and the Kepler-Coulomb \
                     problem with lambda > 0 (got {} with lambda = {})",
                    parent.kind.label(),
                    parent.lambda
                )))
            }
        }
        if m == 0 {
            return Err(Error::ExtensionInadmissible("the degree m must be at least 1".into()));
        }
        let ext = ExtensionSpec { parent, ext_type, m };
        ext.admissibility().map_err(Error::ExtensionInadmissible)?;
        let scan = ext.denominator().scan()?;
        if !scan.nonvanishing() {
            return Err(Error::ExtensionInadmissible(format!(
                "denominator p_m changes sign or nearly vanishes on the physical interval (min |p| = {:e}, max |p| = {:e})",
                scan.min_abs, scan.max_abs
            )));
        }
        Ok(ext)
    }

    /// Unchecked construction for formal parameter values (degree zero,
    /// shifted partners, parameters outside the admissible region).
    pub fn formal(parent: SystemSpec, ext_type: ExtensionType, m: u32) -> Self {
        ExtensionSpec { parent, ext_type, m }
    }

    pub fn parent(&self) -> &SystemSpec {
        &self.parent
    }

    pub fn ext_type(&self) -> ExtensionType {
        self.ext_type
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn kind(&self) -> SystemKind {
        self.parent.kind
    }

    pub fn a(&self) -> f64 {
        self.parent.a()
    }

    /// Reduced coupling: `β/|λ|` or `Q/(2√λ)`.
    pub fn reduced_coupling(&self) -> f64 {
        let p = &self.parent;
        match p.kind {
            SystemKind::Oscillator => p.coupling / p.lambda.abs(),
            SystemKind::Coulomb => p.coupling / (2.0 * p.lambda.abs().sqrt()),
        }
    }

    /// The admissibility inequalities; the error names the violated one.
    pub fn admissibility(&self) -> core::result::Result<(), String> {
        let (a, b) = (self.a(), self.reduced_coupling());
        match self.kind() {
            SystemKind::Oscillator => oscillator::admissibility(self.ext_type, self.m, a, b),
            SystemKind::Coulomb => coulomb::admissibility(self.ext_type, self.m, a, b),
        }
    }

    fn zmap(&self) -> ZMap {
        match self.kind() {
            SystemKind::Oscillator => ZMap::Oscillator { lambda: self.parent.lambda },
            SystemKind::Coulomb => ZMap::Coulomb { lambda: self.parent.lambda },
        }
    }

    fn poly(&self, ty: ExtensionType, m: i64, a: f64) -> Option<PolyRef> {
        let b = self.reduced_coupling();
        match self.kind() {
            SystemKind::Oscillator => oscillator::denominator(ty, m, a, b),
            SystemKind::Coulomb => coulomb::denominator(ty, m, a, b),
        }
    }

    /// `p_m^{(l,β)}` or `p_m^{(l,Q)}` with its argument map.
    pub fn denominator(&self) -> DenominatorPoly {
        DenominatorPoly {
            kind: self.kind(),
            poly: self.poly(self.ext_type, self.m as i64, self.a()).unwrap_or(PolyRef::jacobi(0, 0.0, 0.0)),
            zmap: self.zmap(),
        }
    }

    /// Parent-prime parameters and the additive constant.
    pub fn system(&self) -> ExtendedSystem {
        let p = &self.parent;
        let l_prime = match self.ext_type {
            ExtensionType::I => p.l - 1,
            ExtensionType::II | ExtensionType::III => p.l + 1,
        };
        let abs_lambda = p.lambda.abs();
        let (coupling_prime, gamma) = match (p.kind, self.ext_type) {
            (SystemKind::Oscillator, ExtensionType::I) => (p.coupling + abs_lambda, -2.0 * p.coupling),
            (SystemKind::Oscillator, ExtensionType::II) => {
                (p.coupling - abs_lambda, 2.0 * (p.coupling - abs_lambda))
            }
            (SystemKind::Oscillator, ExtensionType::III) => (p.coupling + abs_lambda, -2.0 * p.coupling),
            (SystemKind::Coulomb, _) => (p.coupling, 0.0),
        };
        ExtendedSystem { ext: *self, l_prime, coupling_prime, gamma }
    }

    /// Parameters reached by one step of the extended shape invariance:
    /// `(l+1, β+|λ|)` with the same `m` for the oscillator, `(l+1, Q)` with
    /// `m ∓ 1` (type I / II) for Kepler–Coulomb.
    pub fn shifted(&self) -> Result<ExtensionSpec> {
        if !self.ext_type.is_isospectral() {
            return Err(Error::Unsupported("type III extensions have no extended superpotential".into()));
        }
        let p = &self.parent;
        Ok(match p.kind {
            SystemKind::Oscillator => ExtensionSpec::formal(
                p.with_l(p.l + 1).with_coupling(p.coupling + p.lambda.abs()),
                self.ext_type,
                self.m,
            ),
            SystemKind::Coulomb => {
                let m = match self.ext_type {
                    ExtensionType::I => self.m - 1,
                    _ => self.m + 1,
                };
                ExtensionSpec::formal(p.with_l(p.l + 1), self.ext_type, m)
            }
        })
    }

    fn check_radius(&self, r: f64) -> Result<()> {
        finite(r, "radius")?;
        let dom = self.parent.radial_domain();
        if dom.contains(r) {
            Ok(())
        } else {
            Err(Error::Domain { x: r, lo: 0.0, hi: dom.upper() })
        }
    }
}

/// Denominator polynomial together with its argument `z(r)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct DenominatorPoly {
    kind: SystemKind,
    pub poly: PolyRef,
    pub zmap: ZMap,
}

/// Extremes of `|p_m|` over the physical interval.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct DenominatorScan {
    pub min_abs: f64,
    pub max_abs: f64,
    pub sign_changes: usize,
}

impl DenominatorScan {
    /// No sign change and `min |p| > 10⁻⁸ max |p|`.
    pub fn nonvanishing(&self) -> bool {
        self.sign_changes == 0 && self.min_abs > 1e-8 * self.max_abs
    }
}

impl DenominatorPoly {
    pub fn degree(&self) -> u32 {
        self.poly.degree()
    }

    pub fn z_of_r(&self, r: f64) -> f64 {
        self.zmap.z(r)
    }

    /// Closed physical `z`-interval: `[−1, 1]` (oscillator) or `[1, ∞]`
    /// (Kepler–Coulomb).
    pub fn physical_interval(&self) -> (f64, f64) {
        match self.kind {
            SystemKind::Oscillator => (-1.0, 1.0),
            SystemKind::Coulomb => (1.0, f64::INFINITY),
        }
    }

    pub fn eval_z(&self, z: f64) -> Result<PolyValue> {
        self.poly.eval(z)
    }

    pub fn at_radius(&self, r: f64) -> Result<f64> {
        Ok(self.poly.eval(self.z_of_r(r))?.value)
    }

    fn leading_coefficient(&self) -> f64 {
        match self.poly {
            PolyRef::Jacobi { degree, params } => {
                let n = degree as f64;
                let mut c = 1.0;
                for k in 0..degree {
                    c *= (n + params.alpha + params.beta + 1.0 + k as f64) / (2.0 * (k as f64 + 1.0));
                }
                c
            }
            _ => f64::NAN,
        }
    }

    /// Samples `p_m` over the closed physical interval. On `[1, ∞]` the scan
    /// uses `w = 1/z` and the polynomial `w^m p_m(1/w)`, whose value at
    /// `w = 0` is the leading coefficient.
    pub fn scan(&self) -> Result<DenominatorScan> {
        let mut values = Vec::with_capacity(SCAN_POINTS);
        for k in 0..SCAN_POINTS {
            let x = k as f64 / (SCAN_POINTS - 1) as f64;
            let v = match self.kind {
                SystemKind::Oscillator => self.poly.eval(-1.0 + 2.0 * x)?.value,
                SystemKind::Coulomb => {
                    if x == 0.0 {
                        self.leading_coefficient()
                    } else {
                        x.powi(self.degree() as i32) * self.poly.eval(1.0 / x)?.value
                    }
                }
            };
            values.push(finite(v, "denominator sample")?);
        }
        let min_abs = values.iter().fold(f64::INFINITY, |m, v| m.min(v.abs()));
        let max_abs = values.iter().fold(0.0_f64, |m, v| m.max(v.abs()));
        let sign_changes = values.windows(2).filter(|w| w[0].signum() != w[1].signum() || w[1] == 0.0).count();
        Ok(DenominatorScan { min_abs, max_abs, sign_changes })
    }
}

/// Extension together with the parameters of the conventional partner
/// `V(r; l′, β′)` and the oscillator's additive constant `γ`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ExtendedSystem {
    pub ext: ExtensionSpec,
    pub l_prime: i32,
    pub coupling_prime: f64,
    /// `−2β` (I, III) or `2(β−|λ|)` (II) for the oscillator; 0 otherwise.
    pub gamma: f64,
}

impl ExtendedSystem {
    /// The conventional partner `V(r; l′, β′)` (formal: `l′` may be negative).
    pub fn prime_parent(&self) -> SystemSpec {
        let p = self.ext.parent();
        SystemSpec::formal(p.kind, p.lambda, p.d, self.l_prime, self.coupling_prime)
    }
}

/// System whose `m`-th state is the seed of the given type at `parent`.
fn seed_system(parent: &SystemSpec, ty: ExtensionType) -> SystemSpec {
    let reflected = matches!(ty, ExtensionType::II | ExtensionType::III);
    let mut s = if reflected { parent.reflected() } else { *parent };
    if parent.kind == SystemKind::Oscillator && matches!(ty, ExtensionType::I | ExtensionType::III) {
        s = s.with_coupling(parent.lambda.abs() - parent.coupling);
    }
    s
}

/// Seed function `χ_m(r)` at the parameters of the extension's parent:
/// `ψ_m` with `β → |λ|−β` (I), `l → 2−l−d` (II) or both (III) for the
/// oscillator; `ψ_m` (I) or `ψ_m` with `l → 2−l−d` (II, III) for
/// Kepler–Coulomb.
pub fn seed_function(ext: &ExtensionSpec, r: f64) -> Result<f64> {
    ext.check_radius(r)?;
    psi_formal(&seed_system(ext.parent(), ext.ext_type), ext.m, r)
}

/// Factorization energy `𝓔_m` of [`seed_function`].
pub fn seed_energy(ext: &ExtensionSpec) -> f64 {
    energy(&seed_system(ext.parent(), ext.ext_type), ext.m as i64)
}

/// Superpotential `W^{(m)}(r; l′, β′) = −f (log χ_m)′ − f′/2` of the seed
/// at the primed parameters, in closed form; its factorization energy is
/// the seed energy there. It factorizes `V(l′, β′)` and has partner
/// `V_ext + γ`.
pub fn construction_superpotential(ext: &ExtensionSpec) -> Superpotential {
    let sys = ext.system();
    let p = ext.parent();
    let a = ext.a();
    let mf = ext.m as f64;
    let (c1, c2, c0) = match (p.kind, ext.ext_type) {
        (SystemKind::Oscillator, ExtensionType::I) => (-(a - 1.0), -p.coupling, 0.0),
        (SystemKind::Oscillator, ExtensionType::II) => (a, p.coupling - p.lambda.abs(), 0.0),
        (SystemKind::Oscillator, ExtensionType::III) => (a, -p.coupling, 0.0),
        (SystemKind::Coulomb, ExtensionType::I) => {
            let k = a - 1.0 + mf;
            (-k, 0.0, p.coupling / (2.0 * k))
        }
        (SystemKind::Coulomb, _) => {
            let k = a - mf;
            (k, 0.0, -p.coupling / (2.0 * k))
        }
    };
    let den = ext.denominator();
    let prime = ExtensionSpec::formal(sys.prime_parent(), ext.ext_type, ext.m);
    Superpotential {
        lambda: p.lambda,
        inverse_coefficient: c1,
        linear_coefficient: c2,
        constant: c0,
        log_terms: vec![LogTerm { sign: 1.0, poly: den.poly, zmap: den.zmap }],
        epsilon0: seed_energy(&prime),
    }
}

fn v_rat_unchecked(ext: &ExtensionSpec, r: f64) -> Result<f64> {
    if ext.m == 0 {
        return Ok(0.0);
    }
    let den = ext.denominator();
    let z = den.z_of_r(r);
    let p = den.eval_z(z)?;
    if p.value == 0.0 {
        return Err(Error::Consistency(format!("denominator polynomial vanishes at r = {r}")));
    }
    let lambda = ext.parent.lambda;
    Ok(match ext.kind() {
        SystemKind::Oscillator => oscillator::v_rat(lambda.abs(), z, p.value, p.d1, p.d2),
        SystemKind::Coulomb => coulomb::v_rat(lambda, ext.m, z, p.value, p.d1, p.d2),
    })
}

/// Rational part `V_rat^{(m)}(r)` of the extended potential.
pub fn v_rat(ext: &ExtensionSpec, r: f64) -> Result<f64> {
    ext.check_radius(r)?;
    v_rat_unchecked(ext, r)
}

/// `V_ext = V(r; l, β) + V_rat(r)`; `γ` is kept separately on
/// [`ExtendedSystem`].
pub fn extended_potential(ext: &ExtensionSpec, r: f64) -> Result<f64> {
    ext.check_radius(r)?;
    Ok(ext.parent.potential_unchecked(r) + v_rat_unchecked(ext, r)?)
}

/// Closed-form extended energy for a (possibly formal) quantum number.
pub fn extended_energy(ext: &ExtensionSpec, n_r: i64) -> f64 {
    let p = ext.parent();
    match p.kind {
        SystemKind::Oscillator => oscillator::energy(ext.ext_type, n_r, ext.a(), p.coupling, p.lambda.abs()),
        SystemKind::Coulomb => coulomb::energy(ext.ext_type, n_r, ext.a(), p.coupling, p.lambda),
    }
}

/// Whether `n_r` labels a bound state of the extended potential
/// (`n_r = −m−1` is the extra type III level).
pub fn is_extended_admissible(ext: &ExtensionSpec, n_r: i64) -> bool {
    if ext.ext_type == ExtensionType::III && n_r == -(ext.m as i64) - 1 {
        return true;
    }
    if n_r < 0 {
        return false;
    }
    match ext.kind() {
        SystemKind::Oscillator => true,
        SystemKind::Coulomb => {
            (n_r as f64) < coulomb::level_bound(ext.ext_type, ext.a(), ext.reduced_coupling())
        }
    }
}

/// Quantum numbers of the bound states in increasing energy order.
pub fn extended_quantum_numbers(ext: &ExtensionSpec, max_count: usize) -> Vec<i64> {
    let mut out = Vec::new();
    if ext.ext_type == ExtensionType::III && max_count > 0 {
        out.push(-(ext.m as i64) - 1);
    }
    let mut n = 0;
    while out.len() < max_count && is_extended_admissible(ext, n) {
        out.push(n);
        n += 1;
    }
    out
}

/// Bound-state spectrum of `V_ext`, lowest first.
pub fn extended_spectrum(ext: &ExtensionSpec, max_count: usize) -> Vec<SpectrumEntry> {
    extended_quantum_numbers(ext, max_count)
        .into_iter()
        .map(|n| SpectrumEntry::new(&ext.parent, n, extended_energy(ext, n)))
        .collect()
}

/// The polynomial `𝒬_{n_r}^{(m)}(z)` of an extended state.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct QPolynomial {
    ext: ExtensionSpec,
    n_r: i64,
}

impl QPolynomial {
    pub fn n_r(&self) -> i64 {
        self.n_r
    }

    /// Nominal degree: `m + n_r` (oscillator I/II), `m + n_r + 1`
    /// (oscillator III, Kepler–Coulomb II/III), `m + n_r − 1`
    /// (Kepler–Coulomb I); 0 for the extra type III state.
    pub fn degree(&self) -> u32 {
        match self.ext.kind() {
            SystemKind::Oscillator => oscillator::q_degree(self.ext.ext_type, self.ext.m, self.n_r),
            SystemKind::Coulomb => coulomb::q_degree(self.ext.ext_type, self.ext.m, self.n_r),
        }
    }

    pub fn eval(&self, z: f64) -> Result<f64> {
        finite(z, "z")?;
        let e = &self.ext;
        let (a, b) = (e.a(), e.reduced_coupling());
        match e.kind() {
            SystemKind::Oscillator => oscillator::q_value(e.ext_type, e.m, self.n_r, a, b, z),
            SystemKind::Coulomb => coulomb::q_value(e.ext_type, e.m, self.n_r, a, b, e.parent.lambda, z),
        }
    }
}

/// `𝒬_{n_r}^{(m)}` for a bound-state quantum number.
pub fn q_polynomial(ext: &ExtensionSpec, n_r: i64) -> Result<QPolynomial> {
    if !is_extended_admissible(ext, n_r) {
        return Err(inadmissible(ext, n_r));
    }
    Ok(QPolynomial { ext: *ext, n_r })
}

fn inadmissible(ext: &ExtensionSpec, n_r: i64) -> Error {
    let reason = match ext.kind() {
        SystemKind::Coulomb => format!(
            "bound states require 0 <= n_r < {}{}",
            coulomb::level_bound(ext.ext_type, ext.a(), ext.reduced_coupling()),
            if ext.ext_type == ExtensionType::III { " or n_r = -m-1" } else { "" }
        ),
        SystemKind::Oscillator => {
            String::from(if ext.ext_type == ExtensionType::III { "n_r must be -m-1 or >= 0" } else { "n_r must be >= 0" })
        }
    };
    Error::Inadmissible { n_r, reason }
}

/// Unnormalized extended wavefunction: `ψ₀(r)·𝒬(z)/p_m(z)` for the
/// oscillator, `r^N f^{−1/2} (f − √λ r)^{B/N} 𝒬(z)/p_m(z)` with
/// `N = n_r + a ∓ 1` for Kepler–Coulomb.
pub fn extended_wavefunction(ext: &ExtensionSpec, n_r: i64, r: f64) -> Result<f64> {
    let q = q_polynomial(ext, n_r)?;
    ext.check_radius(r)?;
    let den = ext.denominator();
    let z = den.z_of_r(r);
    let p = den.eval_z(z)?.value;
    let qv = q.eval(z)?;
    let lambda = ext.parent.lambda;
    let f = (1.0 + lambda * r * r).sqrt();
    let a = ext.a();
    let b = ext.reduced_coupling();
    let log_pref = match ext.kind() {
        SystemKind::Oscillator => a * r.ln() + (b - 0.5) * f.ln(),
        SystemKind::Coulomb => {
            let big_n = coulomb::principal(ext.ext_type, n_r, a);
            let u = (lambda.sqrt() * r).asinh();
            big_n * r.ln() - 0.5 * f.ln() - b / big_n * u
        }
    };
    Ok(log_pref.exp() * qv / p)
}

/// Measure `(1−z)^{a−1/2} (1+z)^{B−1/2} p_m(z)^{−2}` on `(−1, 1)` under which
/// the oscillator `𝒬` family is orthogonal.
pub fn q_weight(ext: &ExtensionSpec, z: f64) -> Result<f64> {
    if ext.kind() != SystemKind::Oscillator {
        return Err(Error::Unsupported("the Kepler-Coulomb Q polynomials have no simple weight".into()));
    }
    if !(z > -1.0 && z < 1.0) {
        return Err(Error::Domain { x: z, lo: -1.0, hi: 1.0 });
    }
    let p = ext.denominator().eval_z(z)?.value;
    let (a, b) = (ext.a(), ext.reduced_coupling());
    Ok((1.0 - z).powf(a - 0.5) * (1.0 + z).powf(b - 0.5) / (p * p))
}

/// Closed form of `𝒬_0^{(m)}` as a multiple of `p_m^{(l+1, β+|λ|)}`:
/// `(B + 1/2 − m)` (type I) or `(m − a − 1/2)` (type II).
pub fn q0_closed_form(ext: &ExtensionSpec, z: f64) -> Result<f64> {
    if ext.kind() != SystemKind::Oscillator || !ext.ext_type.is_isospectral() {
        return Err(Error::Unsupported("the ground-state ratio identity covers oscillator types I and II".into()));
    }
    let (a, b, mf) = (ext.a(), ext.reduced_coupling(), ext.m as f64);
    let factor = match ext.ext_type {
        ExtensionType::I => b + 0.5 - mf,
        _ => mf - a - 0.5,
    };
    let shifted = ext.shifted()?;
    Ok(factor * shifted.denominator().eval_z(z)?.value)
}

/// Ground-state superpotential `W_ext = −f (log ψ₀^{ext})′ − f′/2` of a type
/// I or II extension, with `ε₀ = E₀ + γ`, so that
/// `W_ext² − fW_ext′ + ε₀ = V_ext + γ`.
pub fn extended_superpotential(ext: &ExtensionSpec) -> Result<Superpotential> {
    let shifted = ext.shifted()?;
    let p = ext.parent();
    let a = ext.a();
    let sys = ext.system();
    let den = ext.denominator();
    let up = shifted.denominator();
    let (c1, c2, c0) = match p.kind {
        SystemKind::Oscillator => (-a, p.coupling, 0.0),
        SystemKind::Coulomb => {
            let k = match ext.ext_type {
                ExtensionType::I => a - 1.0,
                _ => a + 1.0,
            };
            (-k, 0.0, p.coupling / (2.0 * k))
        }
    };
    Ok(Superpotential {
        lambda: p.lambda,
        inverse_coefficient: c1,
        linear_coefficient: c2,
        constant: c0,
        log_terms: vec![
            LogTerm { sign: 1.0, poly: up.poly, zmap: up.zmap },
            LogTerm { sign: -1.0, poly: den.poly, zmap: den.zmap },
        ],
        epsilon0: extended_energy(ext, 0) + sys.gamma,
    })
}

/// `V_ext + γ + 2fW_ext′`, the partner of the extended potential.
pub fn extended_partner(ext: &ExtensionSpec, r: f64) -> Result<f64> {
    ext.check_radius(r)?;
    let w = extended_superpotential(ext)?;
    let f = (1.0 + ext.parent.lambda * r * r).sqrt();
    Ok(extended_potential(ext, r)? + ext.system().gamma + 2.0 * f * w.derivative(r)?)
}

/// Shape-invariant form of the partner: `V_ext(l+1, β+|λ|) + γ + 2β`
/// (oscillator) or `V_ext^{(m∓1)}(l+1, Q)` (Kepler–Coulomb).
pub fn extended_partner_closed_form(ext: &ExtensionSpec, r: f64) -> Result<f64> {
    ext.check_radius(r)?;
    let shifted = ext.shifted()?;
    let base = shifted.parent.potential_unchecked(r) + v_rat_unchecked(&shifted, r)?;
    Ok(match ext.kind() {
        SystemKind::Oscillator => base + ext.system().gamma + 2.0 * ext.parent.coupling,
        SystemKind::Coulomb => base,
    })
}

impl RadialProblem for ExtensionSpec {
    fn chart_lambda(&self) -> f64 {
        self.parent.lambda
    }

    fn centrifugal(&self) -> f64 {
        self.a()
    }

    fn regular_potential(&self, v: f64) -> Result<f64> {
        let g = self.parent.geometry();
        let r = g.radius(v);
        Ok(self.parent.regular_potential_at_radius(r, g.deforming(v)) + v_rat_unchecked(self, r)?)
    }

    fn domain(&self) -> ArclengthDomain {
        self.parent.domain()
    }

    fn length_scale(&self) -> f64 {
        self.parent.length_scale()
    }
}
