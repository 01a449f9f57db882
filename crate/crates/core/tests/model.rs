//! Closed-form spectra and wavefunctions of the curved oscillator and
//! Kepler–Coulomb problems, checked against finite differences of the
//! original and deformed radial equations and against the eigensolver.

use curvedqm_core::model::{
    energy, is_admissible, level_bound, potential_v, psi_formal, spectrum, wavefunction_psi, SystemKind,
};
use curvedqm_core::numerics::{extrapolated_eigenvalues, suggest_extent};
use curvedqm_core::SystemSpec;
use proptest::prelude::*;

/// Five-point central differences `(g′, g″)`.
fn differences(g: &dyn Fn(f64) -> f64, x: f64, h: f64) -> (f64, f64) {
    let (gp, g0, gm) = (g(x + h), g(x), g(x - h));
    let (gp2, gm2) = (g(x + 2.0 * h), g(x - 2.0 * h));
    let d1 = (8.0 * (gp - gm) - (gp2 - gm2)) / (12.0 * h);
    let d2 = (16.0 * (gp + gm) - (gp2 + gm2) - 30.0 * g0) / (12.0 * h * h);
    (d1, d2)
}

/// A physical system with at least three bound states, and a radius well
/// inside the region where they live.
fn system_strategy() -> impl Strategy<Value = (SystemSpec, f64)> {
    (any::<bool>(), any::<bool>(), 0.1f64..1.0, 2u32..6, 0u32..3, 0.0f64..1.0, 0.05f64..0.9).prop_map(
        |(osc, sphere, mag, d, l, c, x)| {
            let lambda = if sphere { -mag } else { mag };
            let a = l as f64 + (d as f64 - 1.0) / 2.0;
            let s = if osc {
                // λ > 0 needs β/(2λ) − a/2 > 3
                let beta = if sphere { 1.0 + 9.0 * c } else { mag * (a + 6.5) + 9.0 * c };
                SystemSpec::oscillator(lambda, d, l, beta).unwrap()
            } else {
                // λ > 0 needs √(Q/(2√λ)) − a > 3
                let q = if sphere { 2.0 + 28.0 * c } else { 2.0 * mag.sqrt() * ((a + 3.5).powi(2) + 20.0 * c) };
                SystemSpec::coulomb(lambda, d, l, q).unwrap()
            };
            let r = match s.radial_domain().r_max {
                Some(m) => x * m,
                None => (0.05 + 3.0 * x) * s.length_scale(),
            };
            (s, r)
        },
    )
}

fn f_of(s: &SystemSpec, r: f64) -> f64 {
    (1.0 + s.lambda * r * r).sqrt()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    /// `−√f (f (√f ψ)′)′ + Vψ = Eψ` by finite differences.
    #[test]
    fn deformed_equation_holds(case in system_strategy(), n_r in 0i64..3) {
        let (s, r) = case;
        let g = |x: f64| f_of(&s, x).sqrt() * psi_formal(&s, n_r as u32, x).unwrap();
        let h = 1e-3 * r.min(s.length_scale());
        let (g1, g2) = differences(&g, r, h);
        let f = f_of(&s, r);
        let df = s.lambda * r / f;
        let psi = wavefunction_psi(&s, n_r, r).unwrap();
        let kinetic = -f.sqrt() * (df * g1 + f * g2);
        let v = potential_v(&s, r).unwrap();
        let e = energy(&s, n_r);
        let lhs = kinetic + v * psi - e * psi;
        let scale = kinetic.abs() + (v * psi).abs() + (e * psi).abs();
        prop_assert!(lhs.abs() <= 1e-6 * scale, "{s:?} n_r={n_r} r={r}: {lhs} vs {scale}");
    }

    /// The original radial equation for `R = r^{−(d−1)/2} √f ψ` with
    /// `𝓔 = E + λ(d−1)²/4` and `l(l+d−2)/r²`.
    #[test]
    fn radial_equation_holds(case in system_strategy(), n_r in 0i64..3) {
        let (s, r) = case;
        let dm1 = s.d as f64 - 1.0;
        let big_r = |x: f64| x.powf(-dm1 / 2.0) * f_of(&s, x).sqrt() * psi_formal(&s, n_r as u32, x).unwrap();
        let h = 1e-3 * r.min(s.length_scale());
        let (r1, r2) = differences(&big_r, r, h);
        let lam = s.lambda;
        let l = s.l as f64;
        let script_v = match s.kind {
            SystemKind::Oscillator => s.coupling * (s.coupling + lam) * r * r / (1.0 + lam * r * r),
            SystemKind::Coulomb => -s.coupling / r * (1.0 + lam * r * r).sqrt(),
        };
        let script_e = energy(&s, n_r) + 0.25 * lam * dm1 * dm1;
        let rv = big_r(r);
        let terms = [
            -(1.0 + lam * r * r) * r2,
            -(dm1 + s.d as f64 * lam * r * r) / r * r1,
            l * (l + dm1 - 1.0) / (r * r) * rv,
            script_v * rv,
            -script_e * rv,
        ];
        let lhs: f64 = terms.iter().sum();
        let scale: f64 = terms.iter().map(|t| t.abs()).sum();
        prop_assert!(lhs.abs() <= 1e-6 * scale, "{s:?} n_r={n_r} r={r}: {lhs} vs {scale}");
    }

    /// The position-dependent-mass ordering `m^{−1/4} d/dr m^{−1/2} d/dr m^{−1/4}`
    /// with `m = 1/f²` is the deformed kinetic operator.
    #[test]
    fn pdm_ordering_matches_deformed_operator(case in system_strategy(), n_r in 0i64..3) {
        let (s, r) = case;
        let mass = |x: f64| 1.0 / (1.0 + s.lambda * x * x);
        let psi = |x: f64| psi_formal(&s, n_r as u32, x).unwrap();
        let h = 2e-3 * r.min(s.length_scale());
        // inner: m^{−1/2} d/dr (m^{−1/4} ψ), differentiated once more
        let inner = |x: f64| {
            let (d1, _) = differences(&|y| mass(y).powf(-0.25) * psi(y), x, h);
            mass(x).powf(-0.5) * d1
        };
        let (outer, _) = differences(&inner, r, h);
        let pdm = -mass(r).powf(-0.25) * outer;
        let g = |x: f64| f_of(&s, x).sqrt() * psi(x);
        let (g1, g2) = differences(&g, r, 1e-3 * r.min(s.length_scale()));
        let f = f_of(&s, r);
        let deformed = -f.sqrt() * (s.lambda * r / f * g1 + f * g2);
        prop_assert!((pdm - deformed).abs() <= 1e-5 * (deformed.abs() + (energy(&s, n_r) * psi(r)).abs()));
    }

    /// `E = β(2n+d) − λ(n+(d−1)/2)²` with `n = 2n_r + l` for the oscillator.
    #[test]
    fn oscillator_energy_in_principal_form(lam in -1.0f64..1.0, d in 2u32..7, l in 0u32..4, beta in 0.5f64..20.0, n_r in 0i64..6) {
        let s = SystemSpec::oscillator(lam, d, l, beta).unwrap();
        let n = (2 * n_r + l as i64) as f64;
        let df = d as f64;
        let expected = beta * (2.0 * n + df) - lam * (n + (df - 1.0) / 2.0).powi(2);
        prop_assert!((energy(&s, n_r) - expected).abs() <= 1e-12 * (1.0 + expected.abs()));
    }

    /// For `λ > 0` the energy, continued to real `n_r`, rises to its maximum
    /// exactly at the level bound, where it meets the continuum threshold
    /// `V(∞)`: `β(β+λ)/λ` (oscillator) or `−Q√λ` (Kepler–Coulomb).
    #[test]
    fn level_bound_is_the_continuum_threshold(osc in any::<bool>(), lam in 0.05f64..2.0, d in 2u32..6, l in 0u32..3, c in 0.3f64..30.0) {
        let s = if osc { SystemSpec::oscillator(lam, d, l, c) } else { SystemSpec::coulomb(lam, d, l, c) }.unwrap();
        let a = s.a();
        let (threshold, continued): (f64, Box<dyn Fn(f64) -> f64>) = match s.kind {
            SystemKind::Oscillator => (c * (c + lam) / lam, Box::new(move |x| c * (4.0 * x + 2.0 * a + 1.0) - lam * (2.0 * x + a).powi(2))),
            SystemKind::Coulomb => (-c * lam.sqrt(), Box::new(move |x| -c * c / (4.0 * (x + a).powi(2)) - lam * (x + a).powi(2))),
        };
        let bound = level_bound(&s).unwrap();
        prop_assert!((continued(bound) - threshold).abs() <= 1e-10 * (1.0 + threshold.abs()));
        for dx in [1e-3, 0.1, 0.7] {
            prop_assert!(continued(bound - dx) < threshold && continued(bound + dx) < threshold);
        }
        for n in 0..40i64 {
            prop_assert_eq!(is_admissible(&s, n), (n as f64) < bound);
            if is_admissible(&s, n) {
                prop_assert!((energy(&s, n) - continued(n as f64)).abs() <= 1e-10 * (1.0 + threshold.abs()));
                if is_admissible(&s, n + 1) {
                    prop_assert!(energy(&s, n + 1) > energy(&s, n));
                }
            }
        }
        prop_assert_eq!(spectrum(&s, 1000).len() as f64, bound.ceil().max(0.0).min(1000.0));
    }
}

#[test]
fn flat_space_energies_are_recovered() {
    for (d, l) in [(2u32, 0u32), (3, 1), (5, 2)] {
        for n_r in 0..5 {
            let osc = SystemSpec::oscillator(0.0, d, l, 1.7).unwrap();
            let kc = SystemSpec::coulomb(0.0, d, l, 3.0).unwrap();
            let a = osc.a();
            let n = n_r as f64;
            assert!((energy(&osc, n_r) - 1.7 * (4.0 * n + 2.0 * a + 1.0)).abs() < 1e-12);
            assert!((energy(&kc, n_r) + 9.0 / (4.0 * (n + a).powi(2))).abs() < 1e-12);
        }
    }
}

#[test]
fn nodes_count_the_radial_quantum_number() {
    for s in [
        SystemSpec::oscillator(-0.5, 3, 1, 2.0).unwrap(),
        SystemSpec::oscillator(0.3, 2, 0, 6.0).unwrap(),
        SystemSpec::coulomb(-0.2, 3, 0, 4.0).unwrap(),
        SystemSpec::coulomb(0.1, 3, 1, 20.0).unwrap(),
    ] {
        let upper = s.radial_domain().r_max.map_or(30.0 * s.length_scale(), |m| 0.999 * m);
        for n_r in 0..3i64 {
            let values: Vec<f64> =
                (1..4000).map(|k| wavefunction_psi(&s, n_r, upper * k as f64 / 4000.0).unwrap()).collect();
            let changes = values.windows(2).filter(|w| w[0].signum() != w[1].signum()).count();
            assert_eq!(changes as i64, n_r, "{s:?}");
        }
    }
}

/// Lowest eigenvalues of the discretized deformed operator against the
/// closed forms, for one system per (kind, sign of λ).
#[test]
fn spectra_match_the_eigensolver() {
    for s in [
        SystemSpec::oscillator(-1.0, 3, 1, 10.0).unwrap(),
        SystemSpec::oscillator(0.1, 2, 0, 10.0).unwrap(),
        SystemSpec::coulomb(-0.1, 5, 2, 20.0).unwrap(),
        SystemSpec::coulomb(1.0, 3, 0, 100.0).unwrap(),
    ] {
        let extent = suggest_extent(&s, 3).unwrap();
        let ex = extrapolated_eigenvalues(&s, extent, 3, [1000, 2000, 4000]).unwrap();
        for (n, e) in ex.values.iter().enumerate() {
            let exact = energy(&s, n as i64);
            assert!((e - exact).abs() <= 1e-6 * exact.abs().max(1.0), "{s:?} n={n}: {e} vs {exact}");
        }
    }
}

#[test]
fn inadmissible_levels_are_rejected() {
    let s = SystemSpec::coulomb(1.0, 3, 0, 20.0).unwrap();
    // √(Q/(2√λ)) − a = √10 − 1 ≈ 2.16: levels 0, 1, 2
    assert_eq!(spectrum(&s, 10).len(), 3);
    assert!(wavefunction_psi(&s, 3, 0.5).is_err());
    assert!(wavefunction_psi(&s, -1, 0.5).is_err());
}
