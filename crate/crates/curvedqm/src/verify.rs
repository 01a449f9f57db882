//! Verification suite: every closed-form claim checked against an
//! independent oracle (eigensolver, operator residuals, quadrature,
//! pointwise identities, flat-limit studies).
//!
//! Work is split into jobs (one per group and case) which run on a scoped
//! thread pool; the report is sorted by `(group, case, check)` so its content
//! does not depend on scheduling.

use std::fmt;
use std::str::FromStr;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

use serde::Serialize;

use curvedqm_core::dsusy::{self, dsi_chain, energy_from_chain, superpotential, ChainStatus};
use curvedqm_core::limits::{
    convergence_study, flat_enlarged_si, flat_extended_energy, flat_extended_spectrum, flat_extended_wavefunction,
    FlatExtendedSystem,
};
use curvedqm_core::model::{count_sign_changes, energy, probe_radii, reduced_wavefunction, spectrum, wavefunction_psi};
use curvedqm_core::numerics::{
    apply_ladder, discretize_deformed, extrapolated_eigenvalues, extrapolated_residual, integrate_graded,
    quad_integrate, suggest_extent, GridSpec, LadderSign, RadialProblem,
};
use curvedqm_core::pct::{flat_spectrum, flat_wavefunction, map_system};
use curvedqm_core::rational::{
    construction_superpotential, extended_partner, extended_partner_closed_form, extended_potential,
    extended_spectrum, extended_superpotential, extended_wavefunction, q0_closed_form, q_polynomial, q_weight,
    ExtensionSpec, ExtensionType,
};
use curvedqm_core::{Error, SystemKind, SystemSpec};

/// Version of the JSON report layout.
pub const SCHEMA_VERSION: u32 = 1;

/// Grid sizes of the Richardson-extrapolated eigenvalues.
pub const EIGEN_GRIDS: [usize; 3] = [1000, 2000, 4000];

/// Coarse grid of the nested-grid residual; the fine grid has
/// `3 · 1333 + 1 = 4000` points.
pub const RESIDUAL_POINTS: usize = 1333;

/// Curvature sequences of the flat-limit studies (magnitudes).
pub const LIMIT_SEQUENCE: [f64; 3] = [1e-1, 1e-2, 1e-3];

/// Probe radii of the flat-limit studies.
pub const LIMIT_PROBES: [f64; 6] = [0.25, 0.5, 0.75, 1.0, 1.5, 2.0];

pub const TOL_EIGENVALUE: f64 = 1e-6;
pub const TOL_RESIDUAL: f64 = 1e-6;
pub const TOL_OVERLAP: f64 = 1e-8;
pub const TOL_FACTORIZATION: f64 = 1e-10;
pub const TOL_DSI: f64 = 1e-9;
pub const TOL_PARTIAL_SUM: f64 = 1e-12;
pub const TOL_PCT_ENERGY: f64 = 1e-10;
pub const TOL_PCT_TRANSPORT: f64 = 1e-9;
pub const TOL_RATIO_IDENTITY: f64 = 1e-10;
pub const TOL_CONSTRUCTION: f64 = 1e-9;
pub const TOL_PARTNER: f64 = 1e-8;
pub const TOL_FLAT_SI: f64 = 1e-8;
pub const TOL_LADDER: f64 = 1e-6;

/// Families of checks.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Group {
    Spectra,
    Wavefunctions,
    Dsusy,
    Pct,
    Rational,
    Edsi,
    Limits,
}

impl Group {
    pub const ALL: [Group; 7] =
        [Group::Spectra, Group::Wavefunctions, Group::Dsusy, Group::Pct, Group::Rational, Group::Edsi, Group::Limits];

    pub fn name(self) -> &'static str {
        match self {
            Group::Spectra => "spectra",
            Group::Wavefunctions => "wavefunctions",
            Group::Dsusy => "dsusy",
            Group::Pct => "pct",
            Group::Rational => "rational",
            Group::Edsi => "edsi",
            Group::Limits => "limits",
        }
    }
}

impl fmt::Display for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Group {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Group::ALL
            .into_iter()
            .find(|g| g.name() == s)
            .ok_or_else(|| format!("unknown group {s:?} (expected one of spectra, wavefunctions, dsusy, pct, rational, edsi, limits)"))
    }
}

/// One line of the report. Informational rows carry no tolerance and never
/// fail.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckRecord {
    pub group: Group,
    pub case: String,
    pub check: String,
    pub measured: Option<f64>,
    pub tolerance: Option<f64>,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl CheckRecord {
    /// `measured ≤ tolerance` (NaN fails).
    fn bound(group: Group, case: &str, check: impl Into<String>, measured: f64, tolerance: f64) -> Self {
        CheckRecord {
            group,
            case: case.to_string(),
            check: check.into(),
            measured: Some(measured),
            tolerance: Some(tolerance),
            pass: measured <= tolerance,
            note: None,
        }
    }

    fn info(group: Group, case: &str, check: impl Into<String>, measured: Option<f64>, note: Option<String>) -> Self {
        CheckRecord {
            group,
            case: case.to_string(),
            check: check.into(),
            measured,
            tolerance: None,
            pass: true,
            note,
        }
    }

    fn failure(group: Group, case: &str, check: impl Into<String>, note: String) -> Self {
        CheckRecord {
            group,
            case: case.to_string(),
            check: check.into(),
            measured: None,
            tolerance: None,
            pass: false,
            note: Some(note),
        }
    }

    fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }
}

/// Totals of a report.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
}

/// Complete verification report.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub schema_version: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub generated_at_unix: Option<u64>,
    pub groups: Vec<Group>,
    pub summary: Summary,
    pub checks: Vec<CheckRecord>,
}

impl Report {
    fn new(groups: Vec<Group>, checks: Vec<CheckRecord>, generated_at_unix: Option<u64>) -> Self {
        let mut report = Report {
            schema_version: SCHEMA_VERSION,
            generated_at_unix,
            groups,
            summary: Summary { total: 0, passed: 0, failed: 0 },
            checks,
        };
        report.settle();
        report
    }

    /// Sorts by `(group, case, check)` and recomputes the totals.
    fn settle(&mut self) {
        self.checks.sort_by(|a, b| (a.group, &a.case, &a.check).cmp(&(b.group, &b.case, &b.check)));
        let passed = self.checks.iter().filter(|c| c.pass).count();
        self.summary = Summary { total: self.checks.len(), passed, failed: self.checks.len() - passed };
    }

    /// Adds a record, keeping the order and totals consistent.
    pub fn push(&mut self, record: CheckRecord) {
        self.checks.push(record);
        self.settle();
    }

    pub fn all_pass(&self) -> bool {
        self.summary.failed == 0
    }

    pub fn group_passes(&self, group: Group) -> bool {
        self.checks.iter().filter(|c| c.group == group).all(|c| c.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckRecord> {
        self.checks.iter().filter(|c| !c.pass)
    }
}

/// One unit of work.
#[derive(Clone, Debug, PartialEq)]
pub enum Job {
    Spectrum(SystemSpec),
    Wavefunctions(SystemSpec),
    Dsusy(SystemSpec),
    Pct(SystemSpec),
    Extension(ExtensionSpec),
    Edsi(ExtensionSpec),
    Limit(ExtensionSpec),
    Flat(FlatExtendedSystem),
}

impl Job {
    pub fn group(&self) -> Group {
        match self {
            Job::Spectrum(_) => Group::Spectra,
            Job::Wavefunctions(_) => Group::Wavefunctions,
            Job::Dsusy(_) => Group::Dsusy,
            Job::Pct(_) => Group::Pct,
            Job::Extension(_) => Group::Rational,
            Job::Edsi(_) => Group::Edsi,
            Job::Limit(_) | Job::Flat(_) => Group::Limits,
        }
    }

    /// Runs the checks of this job; an unexpected error becomes a failed
    /// record rather than aborting the report.
    pub fn run(&self) -> Vec<CheckRecord> {
        let group = self.group();
        let (case, result) = match self {
            Job::Spectrum(s) => (system_case(s), spectrum_checks(s)),
            Job::Wavefunctions(s) => (system_case(s), wavefunction_checks(s)),
            Job::Dsusy(s) => (system_case(s), dsusy_checks(s)),
            Job::Pct(s) => (system_case(s), pct_checks(s)),
            Job::Extension(e) => (extension_case(e), extension_checks(e)),
            Job::Edsi(e) => (extension_case(e), edsi_checks(e)),
            Job::Limit(e) => (extension_case(e), limit_checks(e)),
            Job::Flat(f) => (flat_case(f), flat_checks(f)),
        };
        match result {
            Ok(mut records) => {
                for r in &mut records {
                    r.group = group;
                    r.case.clone_from(&case);
                }
                records
            }
            Err(e) => vec![CheckRecord::failure(group, &case, "evaluation", e.to_string())],
        }
    }
}

type Checks = Result<Vec<CheckRecord>, Error>;

/// Stable, sortable case key.
pub fn system_case(s: &SystemSpec) -> String {
    let c = match s.kind {
        SystemKind::Oscillator => "beta",
        SystemKind::Coulomb => "Q",
    };
    format!("{} lambda={:+} d={} l={} {c}={}", s.kind.label(), s.lambda, s.d, s.l, s.coupling)
}

pub fn extension_case(e: &ExtensionSpec) -> String {
    format!("{} type={} m={}", system_case(e.parent()), e.ext_type(), e.m())
}

pub fn flat_case(f: &FlatExtendedSystem) -> String {
    format!("flat {} type={} m={}", system_case(f.parent()), f.ext_type(), f.m())
}

// ---------------------------------------------------------------- matrices

/// Coupling used in the curved test matrix for a system kind and curvature.
pub fn matrix_coupling(kind: SystemKind, lambda: f64) -> f64 {
    match kind {
        SystemKind::Oscillator => 10.0,
        SystemKind::Coulomb if lambda < 0.0 => 20.0,
        SystemKind::Coulomb => 2.0 * lambda.sqrt() * 50.0,
    }
}

/// `{NLHO, NLKC} × λ ∈ {±1, ±0.1} × d ∈ {2, 3, 5} × l ∈ {0, 1, 2}`.
pub fn system_matrix() -> Vec<SystemSpec> {
    let mut out = Vec::new();
    for kind in [SystemKind::Oscillator, SystemKind::Coulomb] {
        for lambda in [-1.0, -0.1, 0.1, 1.0] {
            for d in [2, 3, 5] {
                for l in 0..3 {
                    if let Ok(s) = SystemSpec::new(kind, lambda, d, l, matrix_coupling(kind, lambda)) {
                        out.push(s);
                    }
                }
            }
        }
    }
    out
}

/// The rational extensions checked by default (all admissible).
pub fn extension_matrix() -> Vec<ExtensionSpec> {
    let osc = |d, l, beta, ty, m| (SystemSpec::oscillator(-1.0, d, l, beta), ty, m);
    let kc = |d, l, b: f64, ty, m| (SystemSpec::coulomb(1.0, d, l, 2.0 * b), ty, m);
    [
        osc(3, 1, 3.0, ExtensionType::I, 1),
        osc(5, 1, 2.0, ExtensionType::II, 2),
        osc(5, 1, 3.0, ExtensionType::III, 2),
        kc(5, 1, 11.0, ExtensionType::I, 4),
        kc(5, 1, 20.0, ExtensionType::I, 10),
        kc(3, 1, 30.0, ExtensionType::II, 3),
        kc(5, 1, 30.0, ExtensionType::III, 2),
    ]
    .into_iter()
    .map(|(s, ty, m)| ExtensionSpec::new(s.expect("matrix system is valid"), ty, m).expect("matrix extension is admissible"))
    .collect()
}

/// Extensions followed to the flat limit, one per type that has one:
/// oscillator I/II/III (`β` fixed, `λ → 0⁻`), Kepler–Coulomb II/III (`Q`
/// fixed, `λ → 0⁺`).
pub fn limit_matrix() -> Vec<ExtensionSpec> {
    let lead = LIMIT_SEQUENCE[0];
    let osc = |d, l, beta, ty, m| (SystemSpec::oscillator(-lead, d, l, beta), ty, m);
    let kc = |d, l, q, ty, m| (SystemSpec::coulomb(lead, d, l, q), ty, m);
    [
        osc(3, 1, 3.0, ExtensionType::I, 1),
        osc(5, 1, 2.0, ExtensionType::II, 2),
        osc(5, 1, 3.0, ExtensionType::III, 2),
        kc(3, 1, 20.0, ExtensionType::II, 3),
        kc(5, 1, 20.0, ExtensionType::III, 2),
    ]
    .into_iter()
    .map(|(s, ty, m)| ExtensionSpec::new(s.expect("limit system is valid"), ty, m).expect("limit extension is admissible"))
    .collect()
}

/// All jobs of the default matrix for the selected groups.
pub fn default_jobs(groups: &[Group]) -> Vec<Job> {
    let mut jobs = Vec::new();
    for &g in groups {
        match g {
            Group::Spectra => jobs.extend(system_matrix().into_iter().map(Job::Spectrum)),
            Group::Wavefunctions => jobs.extend(system_matrix().into_iter().map(Job::Wavefunctions)),
            Group::Dsusy => jobs.extend(system_matrix().into_iter().map(Job::Dsusy)),
            Group::Pct => jobs.extend(system_matrix().into_iter().map(Job::Pct)),
            Group::Rational => jobs.extend(extension_matrix().into_iter().map(Job::Extension)),
            Group::Edsi => jobs.extend(
                extension_matrix().into_iter().filter(|e| e.ext_type() != ExtensionType::III).map(Job::Edsi),
            ),
            Group::Limits => {
                let lim = limit_matrix();
                jobs.extend(lim.iter().copied().map(Job::Limit));
                jobs.extend(
                    lim.iter().map(|e| Job::Flat(FlatExtendedSystem::limit_of(e).expect("flat limit is admissible"))),
                );
            }
        }
    }
    jobs
}

/// Jobs for a user-supplied system (and optional extension).
pub fn user_jobs(groups: &[Group], system: &SystemSpec, ext: Option<&ExtensionSpec>) -> Vec<Job> {
    let mut jobs = Vec::new();
    for &g in groups {
        match (g, ext) {
            (Group::Spectra, _) => jobs.push(Job::Spectrum(*system)),
            (Group::Wavefunctions, _) => jobs.push(Job::Wavefunctions(*system)),
            (Group::Dsusy, _) => jobs.push(Job::Dsusy(*system)),
            (Group::Pct, _) if system.lambda != 0.0 => jobs.push(Job::Pct(*system)),
            (Group::Rational, Some(e)) => jobs.push(Job::Extension(*e)),
            (Group::Edsi, Some(e)) if e.ext_type() != ExtensionType::III => jobs.push(Job::Edsi(*e)),
            (Group::Limits, Some(e)) => {
                if let Ok(flat) = FlatExtendedSystem::limit_of(e) {
                    jobs.push(Job::Limit(*e));
                    jobs.push(Job::Flat(flat));
                }
            }
            _ => {}
        }
    }
    jobs
}

/// Thread cap: `CURVEDQM_THREADS` if set to a positive integer, otherwise
/// the available parallelism.
pub fn thread_count() -> usize {
    std::env::var("CURVEDQM_THREADS")
        .ok()
        .and_then(|v| v.trim().parse::<usize>().ok())
        .filter(|&n| n > 0)
        .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()))
}

/// Runs the jobs on up to `threads` workers and assembles a sorted report.
pub fn run_jobs(groups: Vec<Group>, jobs: &[Job], threads: usize, generated_at_unix: Option<u64>) -> Report {
    let next = AtomicUsize::new(0);
    let results = Mutex::new(Vec::new());
    let workers = threads.max(1).min(jobs.len().max(1));
    std::thread::scope(|scope| {
        for _ in 0..workers {
            scope.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                let Some(job) = jobs.get(i) else { break };
                let records = job.run();
                results.lock().expect("no worker panics while holding the lock").extend(records);
            });
        }
    });
    Report::new(groups, results.into_inner().expect("workers have finished"), generated_at_unix)
}

// ---------------------------------------------------------------- helpers

fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs().max(f64::MIN_POSITIVE)
}

/// Largest `|x − y| / (1 + |y|)` of a pointwise identity.
fn identity_defect(pairs: impl IntoIterator<Item = Result<(f64, f64), Error>>) -> Result<f64, Error> {
    let mut worst = 0.0_f64;
    for p in pairs {
        let (x, y) = p?;
        worst = worst.max((x - y).abs() / (1.0 + y.abs()));
    }
    Ok(worst)
}

/// Largest normalized overlap `|⟨i|j⟩|/√(⟨i|i⟩⟨j|j⟩)`, `i ≠ j`, of functions
/// of the geodesic distance on `[0, extent]`.
fn max_overlap(
    funcs: &[Box<dyn Fn(f64) -> Result<f64, Error> + Sync + '_>],
    extent: f64,
    scale: f64,
) -> Result<f64, Error> {
    let n = funcs.len();
    let mut gram = vec![vec![0.0; n]; n];
    for i in 0..n {
        for j in i..n {
            let v = integrate_graded(&mut |x| Ok(funcs[i](x)? * funcs[j](x)?), extent, scale, 160, 24)?;
            gram[i][j] = v;
            gram[j][i] = v;
        }
    }
    let mut worst = 0.0_f64;
    for i in 0..n {
        for j in 0..i {
            worst = worst.max(gram[i][j].abs() / (gram[i][i] * gram[j][j]).sqrt());
        }
    }
    Ok(worst)
}

// ---------------------------------------------------------------- groups

fn spectrum_checks(s: &SystemSpec) -> Checks {
    let g = Group::Spectra;
    let levels = spectrum(s, 3);
    if levels.is_empty() {
        return Ok(vec![CheckRecord::info(g, "", "bound states", Some(0.0), Some("no bound states".into()))]);
    }
    let extent = suggest_extent(s, levels.len())?;
    let num = extrapolated_eigenvalues(s, extent, levels.len(), EIGEN_GRIDS)?;
    Ok(levels
        .iter()
        .zip(&num.values)
        .map(|(lv, e)| {
            CheckRecord::bound(g, "", format!("eigenvalue n_r={}", lv.n_r), rel(*e, lv.energy), TOL_EIGENVALUE)
        })
        .collect())
}

fn wavefunction_checks(s: &SystemSpec) -> Checks {
    let g = Group::Wavefunctions;
    let levels = spectrum(s, 3);
    if levels.is_empty() {
        return Ok(vec![CheckRecord::info(g, "", "bound states", Some(0.0), Some("no bound states".into()))]);
    }
    let extent = suggest_extent(s, levels.len())?;
    let mut out = Vec::new();
    for lv in &levels {
        let n = lv.n_r as u32;
        let phi = move |v: f64| reduced_wavefunction(s, n, v);
        let res = extrapolated_residual(s, extent, RESIDUAL_POINTS, lv.energy, &phi)?;
        out.push(CheckRecord::bound(g, "", format!("residual n_r={n}"), res, TOL_RESIDUAL));
    }
    if levels.len() > 1 {
        let funcs: Vec<Box<dyn Fn(f64) -> Result<f64, Error> + Sync>> = levels
            .iter()
            .map(|lv| {
                let n = lv.n_r as u32;
                Box::new(move |v: f64| reduced_wavefunction(s, n, v)) as Box<dyn Fn(f64) -> Result<f64, Error> + Sync>
            })
            .collect();
        let ov = max_overlap(&funcs, extent, s.length_scale())?;
        out.push(CheckRecord::bound(g, "", "max overlap", ov, TOL_OVERLAP));
    }
    Ok(out)
}

fn dsusy_checks(s: &SystemSpec) -> Checks {
    let g = Group::Dsusy;
    let mut out = Vec::new();
    let mut worst = 0.0_f64;
    for r in probe_radii(s, 64) {
        worst = worst.max(dsusy::factorization_residual(s, r)?);
    }
    out.push(CheckRecord::bound(g, "", "factorization", worst, TOL_FACTORIZATION));

    let chain = dsi_chain(s, 6)?;
    out.push(CheckRecord::bound(g, "", "shape invariance", chain.max_dsi_defect, TOL_DSI));
    if let ChainStatus::Truncated { .. } = chain.status {
        out.push(CheckRecord::info(g, "", "chain status", Some(chain.depth() as f64), Some(chain.status.to_string())));
    }
    let levels = spectrum(s, 7);
    let mut worst_sum = 0.0_f64;
    for lv in levels.iter().filter(|lv| (lv.n_r as usize) <= chain.depth()) {
        worst_sum = worst_sum.max(rel(energy_from_chain(&chain, lv.n_r as usize)?, lv.energy));
    }
    out.push(CheckRecord::bound(g, "", "partial sums", worst_sum, TOL_PARTIAL_SUM));

    // discrete annihilation of the ground state by the lowering operator
    if !levels.is_empty() && !(s.kind == SystemKind::Coulomb && s.lambda < 0.0) {
        out.push(CheckRecord::bound(g, "", "ground-state annihilation", annihilation_ratio(s)?, TOL_LADDER));
    }
    Ok(out)
}

/// `‖Â⁻ψ₀‖/‖Â⁺ψ₀‖` on the grid, with the `O(h²)` error of the discrete
/// derivative removed by combining nested grids as in the residual.
fn annihilation_ratio(s: &SystemSpec) -> Result<f64, Error> {
    let extent = suggest_extent(s, 1)?;
    let coarse_spec = GridSpec::for_problem(s, RESIDUAL_POINTS, extent)?;
    let fine_spec = GridSpec { points: 3 * RESIDUAL_POINTS + 1, ..coarse_spec };
    let w = superpotential(s);
    let psi = |r: f64| wavefunction_psi(s, 0, r);
    let apply = |spec: &GridSpec, sign| -> Result<(Vec<f64>, Vec<f64>, Vec<f64>), Error> {
        let op = discretize_deformed(s, spec)?;
        let sampled = op.sample_radial(&psi)?;
        let out = apply_ladder(op.grid(), &w, sign, &sampled)?;
        Ok((out.values().to_vec(), op.grid().jacobian().to_vec(), op.grid().deforming()))
    };
    let (lc, jac, f) = apply(&coarse_spec, LadderSign::Lowering)?;
    let (lf, _, _) = apply(&fine_spec, LadderSign::Lowering)?;
    let (raised, _, _) = apply(&coarse_spec, LadderSign::Raising)?;
    let mut num = 0.0;
    let mut den = 0.0;
    for j in 0..lc.len() {
        let lowered = (9.0 * lf[3 * j + 1] - lc[j]) / 8.0;
        num += lowered * lowered * jac[j] * f[j];
        den += raised[j] * raised[j] * jac[j] * f[j];
    }
    Ok((num / den).sqrt())
}

fn pct_checks(s: &SystemSpec) -> Checks {
    let g = Group::Pct;
    let map = map_system(s)?;
    let curved = spectrum(s, 16);
    let flat = flat_spectrum(&map.target, 16);
    let mut out = vec![CheckRecord::bound(
        g,
        "",
        format!("level count ({})", map.target.family.label()),
        (curved.len() as f64 - flat.len() as f64).abs(),
        0.0,
    )];
    let mut worst = 0.0_f64;
    for (c, f) in curved.iter().zip(&flat) {
        worst = worst.max(rel(map.energy(f.epsilon), c.energy));
    }
    out.push(CheckRecord::bound(g, "", "energy map", worst, TOL_PCT_ENERGY));
    let mut transport = 0.0_f64;
    for lv in curved.iter().take(3) {
        let mut base = None;
        for r in probe_radii(s, 40) {
            let psi = wavefunction_psi(s, lv.n_r, r)?;
            let phi = flat_wavefunction(&map.target, lv.n_r, map.u_of_r(r)?)?;
            let f = (1.0 + s.lambda * r * r).sqrt();
            if psi.abs() < 1e-200 || phi.abs() < 1e-200 {
                continue;
            }
            let ratio = phi / (f.sqrt() * psi);
            match base {
                None => base = Some(ratio),
                Some(b) => transport = transport.max((ratio / b - 1.0).abs()),
            }
        }
    }
    out.push(CheckRecord::bound(g, "", "transport ratio constancy", transport, TOL_PCT_TRANSPORT));
    Ok(out)
}

/// `φ(v) = √f ψ_ext(r(v))`.
fn reduced_extended(e: &ExtensionSpec, n_r: i64) -> impl Fn(f64) -> Result<f64, Error> + Sync + '_ {
    let geo = e.parent().geometry();
    move |v| Ok(geo.deforming(v).sqrt() * extended_wavefunction(e, n_r, geo.radius(v))?)
}

fn extension_checks(e: &ExtensionSpec) -> Checks {
    let g = Group::Rational;
    let mut out = Vec::new();
    let levels = extended_spectrum(e, 5);
    let extent = suggest_extent(e, levels.len())?;
    let num = extrapolated_eigenvalues(e, extent, levels.len(), EIGEN_GRIDS)?;
    for (lv, x) in levels.iter().zip(&num.values) {
        out.push(CheckRecord::bound(g, "", format!("eigenvalue n_r={}", lv.n_r), rel(*x, lv.energy), TOL_EIGENVALUE));
    }
    let parent = spectrum(e.parent(), 5);
    if e.ext_type() == ExtensionType::III {
        let below = num.values.iter().filter(|x| **x < parent[0].energy).count();
        out.push(CheckRecord::bound(g, "", "levels below parent ground state", (below as f64 - 1.0).abs(), 0.0));
        let extra = levels[0].energy;
        out.push(CheckRecord::bound(g, "", "extra level", rel(num.values[0], extra), TOL_EIGENVALUE));
    } else if e.kind() == SystemKind::Oscillator {
        let mut worst = 0.0_f64;
        for (p, x) in parent.iter().zip(&num.values) {
            worst = worst.max(rel(*x, p.energy));
        }
        out.push(CheckRecord::bound(g, "", "isospectral with parent", worst, TOL_EIGENVALUE));
    } else {
        // Kepler–Coulomb I/II: isospectral with the primed conventional partner
        let prime = e.system().prime_parent();
        let mut worst = 0.0_f64;
        for (lv, x) in levels.iter().zip(&num.values) {
            worst = worst.max(rel(*x, energy(&prime, lv.n_r)));
        }
        out.push(CheckRecord::bound(g, "", "isospectral with primed partner", worst, TOL_EIGENVALUE));
    }

    for lv in levels.iter().take(3) {
        let phi = reduced_extended(e, lv.n_r);
        let res = extrapolated_residual(e, extent, RESIDUAL_POINTS, lv.energy, &phi)?;
        out.push(CheckRecord::bound(g, "", format!("residual n_r={}", lv.n_r), res, TOL_RESIDUAL));
    }
    let funcs: Vec<Box<dyn Fn(f64) -> Result<f64, Error> + Sync>> = levels
        .iter()
        .map(|lv| Box::new(reduced_extended(e, lv.n_r)) as Box<dyn Fn(f64) -> Result<f64, Error> + Sync>)
        .collect();
    let ov = max_overlap(&funcs, extent, e.length_scale())?;
    out.push(CheckRecord::bound(g, "", "wavefunction overlap", ov, TOL_OVERLAP));

    // node counts (recorded, not asserted, for type III)
    let geo = e.parent().geometry();
    for lv in levels.iter().take(3) {
        let samples: Vec<f64> = (1..4000)
            .map(|k| extended_wavefunction(e, lv.n_r, geo.radius(extent * k as f64 / 4000.0)))
            .collect::<Result<_, _>>()?;
        let peak = samples.iter().fold(0.0_f64, |m, v| m.max(v.abs()));
        let nodes = count_sign_changes(&samples, 1e-10 * peak) as f64;
        if e.ext_type() == ExtensionType::III {
            out.push(CheckRecord::info(g, "", format!("nodes n_r={}", lv.n_r), Some(nodes), None));
        } else {
            out.push(CheckRecord::bound(g, "", format!("nodes n_r={}", lv.n_r), (nodes - lv.n_r as f64).abs(), 0.0));
        }
    }

    // construction: V_ext + γ = V(l′) + 2fW′ and V(l′) = W² − fW′ + ε₀
    let w = construction_superpotential(e);
    let sys = e.system();
    let prime = sys.prime_parent();
    let probes = extension_probes(e);
    let defect = identity_defect(probes.iter().map(|&r| {
        let f = (1.0 + e.parent().lambda * r * r).sqrt();
        Ok((extended_potential(e, r)? + sys.gamma, conventional_potential(&prime, r) + 2.0 * f * w.derivative(r)?))
    }))?;
    out.push(CheckRecord::bound(g, "", "construction identity", defect, TOL_CONSTRUCTION));
    let defect = identity_defect(probes.iter().map(|&r| Ok((w.factorized_potential(r)?, conventional_potential(&prime, r)))))?;
    out.push(CheckRecord::bound(g, "", "construction factorization", defect, TOL_CONSTRUCTION));

    if e.kind() == SystemKind::Oscillator {
        out.extend(q_family_checks(e)?);
    }
    Ok(out)
}

/// `V(r)` for possibly formal parameters (negative `l′` allowed).
fn conventional_potential(s: &SystemSpec, r: f64) -> f64 {
    let a = s.a();
    let f = (1.0 + s.lambda * r * r).sqrt();
    a * (a - 1.0) / (r * r) + s.regular_potential_at_radius(r, f)
}

fn extension_probes(e: &ExtensionSpec) -> Vec<f64> {
    probe_radii(e.parent(), 48)
}

fn q_family_checks(e: &ExtensionSpec) -> Checks {
    let g = Group::Rational;
    let mut out = Vec::new();
    let ns: Vec<i64> = curvedqm_core::rational::extended_quantum_numbers(e, 5);
    let qs = ns.iter().map(|&n| q_polynomial(e, n)).collect::<Result<Vec<_>, _>>()?;
    let mut gram = vec![vec![0.0; qs.len()]; qs.len()];
    let mut converged = true;
    for i in 0..qs.len() {
        for j in i..qs.len() {
            let (qi, qj) = (qs[i], qs[j]);
            let res = quad_integrate(&|z| Ok(qi.eval(z)? * qj.eval(z)? * q_weight(e, z)?), -1.0, 1.0, 400)?;
            converged &= res.converged;
            gram[i][j] = res.refined;
            gram[j][i] = res.refined;
        }
    }
    let mut worst = 0.0_f64;
    for i in 0..qs.len() {
        for j in 0..i {
            worst = worst.max(gram[i][j].abs() / (gram[i][i] * gram[j][j]).sqrt());
        }
    }
    let rec = CheckRecord::bound(g, "", "Q-family orthogonality", worst, TOL_OVERLAP);
    out.push(if converged { rec } else { rec.with_note("quadrature discrepancy above 1e-8 relative") });

    // actual degree from the growth far outside the roots; it falls below
    // the nominal one when a leading coefficient vanishes for the given
    // parameters
    let mut drop = 0.0_f64;
    for q in &qs {
        let k = (q.eval(2e4)? / q.eval(1e4)?).abs().log2().round();
        drop = drop.max(q.degree() as f64 - k);
    }
    out.push(CheckRecord::info(g, "", "Q-family degree drop", Some(drop), None));

    if e.ext_type() != ExtensionType::III {
        let q0 = q_polynomial(e, 0)?;
        let defect = identity_defect((0..=40).map(|k| {
            let z = -1.0 + 2.0 * k as f64 / 40.0;
            Ok((q0.eval(z)?, q0_closed_form(e, z)?))
        }))?;
        out.push(CheckRecord::bound(g, "", "ground-state ratio identity", defect, TOL_RATIO_IDENTITY));
    }
    Ok(out)
}

fn edsi_checks(e: &ExtensionSpec) -> Checks {
    let g = Group::Edsi;
    let w = extended_superpotential(e)?;
    let gamma = e.system().gamma;
    let probes = extension_probes(e);
    let fact = identity_defect(probes.iter().map(|&r| Ok((w.factorized_potential(r)?, extended_potential(e, r)? + gamma))))?;
    let partner =
        identity_defect(probes.iter().map(|&r| Ok((extended_partner(e, r)?, extended_partner_closed_form(e, r)?))))?;
    let name = match e.kind() {
        SystemKind::Oscillator => "extended partner (l+1, beta+|lambda|)",
        SystemKind::Coulomb => match e.ext_type() {
            ExtensionType::I => "enlarged partner (l+1, m-1)",
            _ => "enlarged partner (l+1, m+1)",
        },
    };
    Ok(vec![
        CheckRecord::bound(g, "", "extended factorization", fact, TOL_CONSTRUCTION),
        CheckRecord::bound(g, "", name, partner, TOL_PARTNER),
    ])
}

fn limit_checks(e: &ExtensionSpec) -> Checks {
    let g = Group::Limits;
    let sign = e.parent().lambda.signum();
    let seq: Vec<f64> = LIMIT_SEQUENCE.iter().map(|x| sign * x).collect();
    let rep = convergence_study(e, &seq, &LIMIT_PROBES)?;
    let mut out = Vec::new();
    if let Some(t) = &rep.truncated {
        out.push(CheckRecord::failure(g, "", "sequence complete", t.clone()));
    }
    out.push(CheckRecord::bound(g, "", "monotone decrease", if rep.monotone() { 0.0 } else { 1.0 }, 0.0));
    let (first, last) = (rep.rows[0], *rep.terminal().expect("at least one row"));
    let ratio = last.potential_deviation / (first.potential_deviation * (last.lambda / first.lambda).abs());
    out.push(CheckRecord::bound(g, "", "first-order scaling", ratio, 10.0));
    for row in &rep.rows {
        out.push(CheckRecord::info(
            g,
            "",
            format!("potential deviation lambda={:+e}", row.lambda),
            Some(row.potential_deviation),
            None,
        ));
        out.push(CheckRecord::info(
            g,
            "",
            format!("wavefunction infidelity lambda={:+e}", row.lambda),
            Some(row.wavefunction_distance),
            None,
        ));
    }
    Ok(out)
}

fn flat_checks(f: &FlatExtendedSystem) -> Checks {
    let g = Group::Limits;
    let mut out = Vec::new();
    let levels = flat_extended_spectrum(f, 3);
    let extent = suggest_extent(f, levels.len())?;
    let num = extrapolated_eigenvalues(f, extent, levels.len(), EIGEN_GRIDS)?;
    for (lv, x) in levels.iter().zip(&num.values) {
        out.push(CheckRecord::bound(g, "", format!("flat eigenvalue n_r={}", lv.n_r), rel(*x, lv.energy), TOL_EIGENVALUE));
    }
    for lv in &levels {
        let n = lv.n_r;
        let phi = move |v: f64| flat_extended_wavefunction(f, n, v);
        let res = extrapolated_residual(f, extent, RESIDUAL_POINTS, flat_extended_energy(f, n), &phi)?;
        out.push(CheckRecord::bound(g, "", format!("flat residual n_r={n}"), res, TOL_RESIDUAL));
    }
    if f.kind() == SystemKind::Coulomb && f.ext_type() == ExtensionType::II {
        let scale = f.parent().length_scale();
        let defect = identity_defect((1..=48).map(|k| flat_enlarged_si(f, 0.1 * scale * k as f64)))?;
        out.push(CheckRecord::bound(g, "", "flat enlarged shape invariance", defect, TOL_FLAT_SI));
    }
    Ok(out)
}
