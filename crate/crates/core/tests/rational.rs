//! Rational extensions against independent constructions: the seed checked
//! through the parent equation, the extended potential rebuilt from
//! finite-difference superpotentials of the seed, extended states checked
//! through their own equation, orthogonality by quadrature in the geodesic
//! variable, Sturm node counts and the eigensolver.

use curvedqm_core::model::{count_sign_changes, SystemKind};
use curvedqm_core::numerics::{extrapolated_eigenvalues, suggest_extent};
use curvedqm_core::rational::{
    construction_superpotential, extended_energy, extended_partner, extended_partner_closed_form,
    extended_potential, extended_quantum_numbers, extended_spectrum, extended_superpotential, extended_wavefunction,
    is_extended_admissible, q0_closed_form, q_polynomial, q_weight, seed_energy, seed_function, v_rat, ExtensionSpec,
    ExtensionType,
};
use curvedqm_core::specfun::{jacobi, JacobiParams};
use curvedqm_core::{Error, SystemSpec};
use proptest::prelude::*;

fn differences(g: &dyn Fn(f64) -> f64, x: f64, h: f64) -> (f64, f64) {
    let (gp, g0, gm) = (g(x + h), g(x), g(x - h));
    let (gp2, gm2) = (g(x + 2.0 * h), g(x - 2.0 * h));
    let d1 = (8.0 * (gp - gm) - (gp2 - gm2)) / (12.0 * h);
    let d2 = (16.0 * (gp + gm) - (gp2 + gm2) - 30.0 * g0) / (12.0 * h * h);
    (d1, d2)
}

fn f_of(lambda: f64, r: f64) -> f64 {
    (1.0 + lambda * r * r).sqrt()
}

/// `a(a−1)/r² + β(β+λ)r²/f²` or `a(a−1)/r² − Qf/r` for a (possibly
/// formal, negative) angular momentum.
fn potential_oracle(kind: SystemKind, lambda: f64, d: u32, l: i32, c: f64, r: f64) -> f64 {
    let a = l as f64 + (d as f64 - 1.0) / 2.0;
    let centrifugal = a * (a - 1.0) / (r * r);
    match kind {
        SystemKind::Oscillator => centrifugal + c * (c + lambda) * r * r / (1.0 + lambda * r * r),
        SystemKind::Coulomb => centrifugal - c * f_of(lambda, r) / r,
    }
}

/// `(−√f d/dr f d/dr √f + V − E) ψ` by finite differences, with its scale.
fn deformed_residual(lambda: f64, psi: &dyn Fn(f64) -> f64, v: f64, e: f64, r: f64, h: f64) -> (f64, f64) {
    let g = |x: f64| f_of(lambda, x).sqrt() * psi(x);
    let (g1, g2) = differences(&g, r, h);
    let f = f_of(lambda, r);
    let df = lambda * r / f;
    let kinetic = -f.sqrt() * (df * g1 + f * g2);
    let p = psi(r);
    (kinetic + (v - e) * p, kinetic.abs() + (v * p).abs() + (e * p).abs())
}

fn ty_of(k: u8) -> ExtensionType {
    ExtensionType::ALL[k as usize % 3]
}

/// Admissible extensions of every (kind, type), with a radius inside the
/// domain.
fn extension_strategy() -> impl Strategy<Value = (ExtensionSpec, f64)> {
    (any::<bool>(), 0u8..3, 0.3f64..2.0, 2u32..7, 0u32..3, 0u32..12, 0.0f64..1.0, 0.05f64..0.9).prop_filter_map(
        "inadmissible extension",
        |(osc, k, mag, d, l, raw, c, x)| {
            let ty = ty_of(k);
            let a = l as f64 + (d as f64 - 1.0) / 2.0;
            let (parent, m) = if osc {
                let (m, b) = match ty {
                    ExtensionType::I => {
                        let m = 1 + raw % 3;
                        (m, m as f64 - 0.3 + 5.0 * c)
                    }
                    ExtensionType::II => {
                        let top = (a + 0.5).ceil() as u32 - 1;
                        if top == 0 {
                            return None;
                        }
                        (1 + raw % top, 0.7 + 5.0 * c)
                    }
                    ExtensionType::III => {
                        if a <= 1.5 {
                            return None;
                        }
                        (2, 1.7 + 5.0 * c)
                    }
                };
                (SystemSpec::oscillator(-mag, d, l, b * mag).ok()?, m)
            } else {
                let (m, b) = match ty {
                    ExtensionType::I => {
                        if a <= 2.0 {
                            return None;
                        }
                        let m = 1 + raw % 4;
                        (m, (a - 1.0).powi(2) + (0.1 + 0.8 * c) * (a - 1.0) * m as f64)
                    }
                    ExtensionType::II => (a.floor() as u32 + 1, (a + 4.0).powi(2) + 20.0 * c),
                    ExtensionType::III => {
                        if a <= 2.0 {
                            return None;
                        }
                        (2, (a + 4.0).powi(2) + 20.0 * c)
                    }
                };
                (SystemSpec::coulomb(mag, d, l, 2.0 * b * mag.sqrt()).ok()?, m)
            };
            let ext = ExtensionSpec::new(parent, ty, m).ok()?;
            let r = match parent.radial_domain().r_max {
                Some(top) => x * top,
                None => (0.05 + 3.0 * x) * parent.length_scale(),
            };
            Some((ext, r))
        },
    )
}

fn step(ext: &ExtensionSpec, r: f64) -> f64 {
    1e-3 * r.min(ext.parent().length_scale())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    /// The seed solves the parent equation at its factorization energy.
    #[test]
    fn seed_solves_the_parent_equation(case in extension_strategy()) {
        let (ext, r) = case;
        // at the parent parameters the Kepler–Coulomb II/III seed has
        // principal number m + 1 − a, which vanishes at a = m + 1
        prop_assume!(seed_function(&ext, r).is_ok());
        let p = *ext.parent();
        let v = potential_oracle(p.kind, p.lambda, p.d, p.l, p.coupling, r);
        let (res, scale) =
            deformed_residual(p.lambda, &|x| seed_function(&ext, x).unwrap(), v, seed_energy(&ext), r, step(&ext, r));
        prop_assert!(res.abs() <= 1e-6 * scale, "{ext:?} r={r}: {res} vs {scale}");
    }

    /// With `W = −f(log χ)′ − f′/2` built by differences from the seed at
    /// the primed parameters, `W² − fW′ + 𝓔 = V(l′, β′)` and
    /// `W² + fW′ + 𝓔 = V_ext + γ`.
    #[test]
    fn extended_potential_is_the_seed_partner(case in extension_strategy()) {
        let (ext, r) = case;
        let sys = ext.system();
        let prime = sys.prime_parent();
        let seed_ext = ExtensionSpec::formal(prime, ext.ext_type(), ext.m());
        let chi = |x: f64| seed_function(&seed_ext, x).unwrap();
        let (c1, c2) = differences(&chi, r, step(&ext, r));
        let (g1, g2) = (c1 / chi(r), c2 / chi(r));
        let lam = prime.lambda;
        let f = f_of(lam, r);
        let (df, ddf) = (lam * r / f, lam / (f * f * f));
        let w = -f * g1 - df / 2.0;
        let dw = -df * g1 - f * (g2 - g1 * g1) - ddf / 2.0;
        let eps = seed_energy(&seed_ext);
        let v_prime = potential_oracle(prime.kind, lam, prime.d, prime.l, prime.coupling, r);
        let fact = w * w - f * dw + eps;
        prop_assert!((fact - v_prime).abs() <= 1e-6 * (1.0 + v_prime.abs() + w * w), "{fact} vs {v_prime}");
        let v_ext = extended_potential(&ext, r).unwrap() + sys.gamma;
        let partner = w * w + f * dw + eps;
        prop_assert!((partner - v_ext).abs() <= 1e-6 * (1.0 + v_ext.abs() + w * w), "{ext:?} r={r}: {partner} vs {v_ext}");
        // the closed-form construction superpotential is the same function
        let wc = construction_superpotential(&ext);
        prop_assert!((wc.value(r).unwrap() - w).abs() <= 1e-6 * (1.0 + w.abs()));
        prop_assert!((wc.epsilon0 - eps).abs() <= 1e-10 * (1.0 + eps.abs()));
        // V_ext − V = V_rat
        let p = ext.parent();
        let base = potential_oracle(p.kind, p.lambda, p.d, p.l, p.coupling, r);
        prop_assert!((extended_potential(&ext, r).unwrap() - base - v_rat(&ext, r).unwrap()).abs() <= 1e-9 * (1.0 + base.abs()));
    }

    /// Extended states solve the extended equation at their energies.
    #[test]
    fn extended_states_solve_the_extended_equation(case in extension_strategy(), k in 0usize..3) {
        let (ext, r) = case;
        let ns = extended_quantum_numbers(&ext, 3);
        prop_assume!(k < ns.len());
        let n = ns[k];
        let v = extended_potential(&ext, r).unwrap();
        let e = extended_energy(&ext, n);
        let (res, scale) =
            deformed_residual(ext.parent().lambda, &|x| extended_wavefunction(&ext, n, x).unwrap(), v, e, r, step(&ext, r));
        prop_assert!(res.abs() <= 1e-6 * scale, "{ext:?} n_r={n} r={r}: {res} vs {scale}");
    }

    /// `V_ext + γ` is isospectral with `V(l′, β′)`; type III adds the seed
    /// energy as its lowest level.
    #[test]
    fn extended_levels_follow_the_conventional_partner(case in extension_strategy()) {
        let (ext, _) = case;
        let sys = ext.system();
        let prime = sys.prime_parent();
        let levels = extended_spectrum(&ext, 6);
        let mut rest = levels.as_slice();
        if ext.ext_type() == ExtensionType::III {
            prop_assert_eq!(levels[0].n_r, -(ext.m() as i64) - 1);
            let seed_prime = seed_energy(&ExtensionSpec::formal(prime, ExtensionType::III, ext.m()));
            prop_assert!((levels[0].energy + sys.gamma - seed_prime).abs() <= 1e-9 * (1.0 + seed_prime.abs()));
            rest = &levels[1..];
        }
        for entry in rest {
            let n = entry.n_r as f64;
            let a_prime = prime.a();
            let expected = match prime.kind {
                SystemKind::Oscillator => {
                    let (b, lam) = (prime.coupling, prime.lambda);
                    b * (4.0 * n + 2.0 * a_prime + 1.0) - lam * (2.0 * n + a_prime).powi(2)
                }
                SystemKind::Coulomb => {
                    let big_n = n + a_prime;
                    -prime.coupling.powi(2) / (4.0 * big_n * big_n) - prime.lambda * big_n * big_n
                }
            };
            prop_assert!((entry.energy + sys.gamma - expected).abs() <= 1e-9 * (1.0 + expected.abs()));
        }
        for w in levels.windows(2) {
            prop_assert!(w[1].energy > w[0].energy);
        }
    }

    /// `W_ext = −f(log ψ₀)′ − f′/2` and the enlarged shape invariance
    /// `V_ext + γ + 2fW_ext′ = V_ext(shifted) + const`.
    #[test]
    fn extended_superpotential_and_shape_invariance(case in extension_strategy()) {
        let (ext, r) = case;
        prop_assume!(ext.ext_type().is_isospectral());
        let psi0 = |x: f64| extended_wavefunction(&ext, 0, x).unwrap();
        let (p1, _) = differences(&psi0, r, step(&ext, r));
        let lam = ext.parent().lambda;
        let f = f_of(lam, r);
        let w = -f * p1 / psi0(r) - lam * r / (2.0 * f);
        let wext = extended_superpotential(&ext).unwrap();
        prop_assert!((wext.value(r).unwrap() - w).abs() <= 1e-6 * (1.0 + w.abs()), "{} vs {w}", wext.value(r).unwrap());
        let v = extended_potential(&ext, r).unwrap() + ext.system().gamma;
        prop_assert!((wext.factorized_potential(r).unwrap() - v).abs() <= 1e-8 * (1.0 + v.abs()));
        // shifted extension written out by hand
        let p = ext.parent();
        let (shifted, constant) = match p.kind {
            SystemKind::Oscillator => (
                ExtensionSpec::formal(p.with_l(p.l + 1).with_coupling(p.coupling - p.lambda), ext.ext_type(), ext.m()),
                ext.system().gamma + 2.0 * p.coupling,
            ),
            SystemKind::Coulomb => {
                let m = if ext.ext_type() == ExtensionType::I { ext.m() - 1 } else { ext.m() + 1 };
                (ExtensionSpec::formal(p.with_l(p.l + 1), ext.ext_type(), m), 0.0)
            }
        };
        let rhs = extended_potential(&shifted, r).unwrap() + constant;
        let lhs = extended_partner(&ext, r).unwrap();
        prop_assert!((lhs - rhs).abs() <= 1e-8 * (1.0 + rhs.abs()), "{ext:?} r={r}: {lhs} vs {rhs}");
        prop_assert!((extended_partner_closed_form(&ext, r).unwrap() - rhs).abs() <= 1e-10 * (1.0 + rhs.abs()));
    }
}

/// Oscillator 𝒬₀ against its ratio identities, with the shifted
/// denominators written as explicit Jacobi polynomials.
#[test]
fn ground_polynomial_ratio_identities() {
    let cases = [(3u32, 1u32, 3.0, ExtensionType::I, 1u32), (4, 2, 4.5, ExtensionType::I, 3), (5, 1, 2.0, ExtensionType::II, 2), (6, 2, 1.3, ExtensionType::II, 3)];
    for (d, l, b, ty, m) in cases {
        let ext = ExtensionSpec::new(SystemSpec::oscillator(-0.7, d, l, 0.7 * b).unwrap(), ty, m).unwrap();
        let a = ext.a();
        let q0 = q_polynomial(&ext, 0).unwrap();
        for z in [-0.9, -0.3, 0.2, 0.8] {
            // p_m at (l+1, β+|λ|): a → a+1, B → B+1
            let (factor, alpha, beta) = match ty {
                ExtensionType::I => (b + 0.5 - m as f64, a - 0.5, -b - 1.5),
                _ => (m as f64 - a - 0.5, -a - 1.5, b - 0.5),
            };
            let expected = factor * jacobi(m, JacobiParams::new(alpha, beta), z).unwrap().value;
            let value = q0.eval(z).unwrap();
            assert!((value - expected).abs() < 1e-10 * (1.0 + expected.abs()), "{ext:?} z={z}: {value} vs {expected}");
            assert!((q0_closed_form(&ext, z).unwrap() - expected).abs() < 1e-10 * (1.0 + expected.abs()));
        }
    }
}

/// Composite Simpson rule; the integrand is taken as zero at the ends.
fn simpson(g: &dyn Fn(f64) -> f64, lo: f64, hi: f64, n: usize) -> f64 {
    let h = (hi - lo) / n as f64;
    let mut s = 0.0;
    for k in 1..n {
        s += if k % 2 == 1 { 4.0 } else { 2.0 } * g(lo + h * k as f64);
    }
    s * h / 3.0
}

fn fixed_cases() -> Vec<ExtensionSpec> {
    let osc = |d, l, b: f64, ty, m| ExtensionSpec::new(SystemSpec::oscillator(-1.0, d, l, b).unwrap(), ty, m).unwrap();
    let kc = |d, l, b: f64, ty, m| ExtensionSpec::new(SystemSpec::coulomb(1.0, d, l, 2.0 * b).unwrap(), ty, m).unwrap();
    vec![
        osc(3, 1, 3.0, ExtensionType::I, 1),
        osc(5, 1, 2.0, ExtensionType::II, 2),
        osc(5, 1, 3.0, ExtensionType::III, 2),
        kc(5, 1, 11.0, ExtensionType::I, 4),
        kc(3, 1, 30.0, ExtensionType::II, 3),
        kc(5, 1, 30.0, ExtensionType::III, 2),
    ]
}

/// `∫ψ_j ψ_k dr = 0` for distinct levels, integrated in `u` with
/// `r = sin u/√|λ|` or `sinh u/√λ`.
#[test]
fn extended_states_are_orthogonal() {
    for ext in fixed_cases() {
        let lam = ext.parent().lambda;
        let s = lam.abs().sqrt();
        let (r_of, dr, top): (Box<dyn Fn(f64) -> f64>, Box<dyn Fn(f64) -> f64>, f64) = if lam < 0.0 {
            (Box::new(move |u: f64| u.sin() / s), Box::new(move |u: f64| u.cos() / s), std::f64::consts::FRAC_PI_2)
        } else {
            (Box::new(move |u: f64| u.sinh() / s), Box::new(move |u: f64| u.cosh() / s), 30.0)
        };
        let ns = extended_quantum_numbers(&ext, 4);
        let psi = |n: i64, u: f64| extended_wavefunction(&ext, n, r_of(u)).unwrap_or(0.0);
        let norms: Vec<f64> = ns.iter().map(|&n| simpson(&|u| psi(n, u).powi(2) * dr(u), 0.0, top, 20000)).collect();
        for i in 0..ns.len() {
            for j in 0..i {
                let overlap = simpson(&|u| psi(ns[i], u) * psi(ns[j], u) * dr(u), 0.0, top, 20000);
                let cos = overlap / (norms[i] * norms[j]).sqrt();
                assert!(cos.abs() < 1e-8, "{ext:?} ({}, {}): {cos:e}", ns[i], ns[j]);
            }
        }
    }
}

/// The oscillator 𝒬 family is orthogonal under the exceptional weight.
#[test]
fn oscillator_q_family_is_orthogonal_under_its_weight() {
    for ext in fixed_cases().into_iter().filter(|e| e.kind() == SystemKind::Oscillator) {
        let ns = extended_quantum_numbers(&ext, 4);
        let qs: Vec<_> = ns.iter().map(|&n| q_polynomial(&ext, n).unwrap()).collect();
        // z = cos θ
        let inner = |i: usize, j: usize| {
            simpson(
                &|t: f64| {
                    let z = t.cos();
                    q_weight(&ext, z).unwrap() * qs[i].eval(z).unwrap() * qs[j].eval(z).unwrap() * t.sin()
                },
                0.0,
                std::f64::consts::PI,
                20000,
            )
        };
        for i in 0..ns.len() {
            for j in 0..i {
                let cos = inner(i, j) / (inner(i, i) * inner(j, j)).sqrt();
                assert!(cos.abs() < 1e-8, "{ext:?} ({}, {}): {cos:e}", ns[i], ns[j]);
            }
        }
    }
}

/// The k-th level (lowest first) has k nodes.
#[test]
fn extended_states_have_sturm_node_counts() {
    for ext in fixed_cases() {
        let top = ext.parent().radial_domain().r_max.map_or(200.0 * ext.parent().length_scale(), |m| 0.999 * m);
        for (k, n) in extended_quantum_numbers(&ext, 4).into_iter().enumerate() {
            let values: Vec<f64> =
                (1..6000).map(|i| extended_wavefunction(&ext, n, top * i as f64 / 6000.0).unwrap()).collect();
            assert_eq!(count_sign_changes(&values, 0.0), k, "{ext:?} n_r={n}");
        }
    }
}

#[test]
fn spectra_match_the_eigensolver() {
    for ext in fixed_cases() {
        let levels = extended_spectrum(&ext, 3);
        let extent = suggest_extent(&ext, levels.len()).unwrap();
        let ex = extrapolated_eigenvalues(&ext, extent, levels.len(), [1000, 2000, 4000]).unwrap();
        for (e, exact) in ex.values.iter().zip(&levels) {
            assert!((e - exact.energy).abs() <= 1e-6 * exact.energy.abs().max(1.0), "{ext:?}: {e} vs {}", exact.energy);
        }
    }
}

#[test]
fn admissibility_walls_are_reported() {
    let osc = SystemSpec::oscillator(-1.0, 3, 0, 1.2).unwrap();
    // type I needs m < B + 1/2 = 1.7
    assert!(ExtensionSpec::new(osc, ExtensionType::I, 1).is_ok());
    assert!(matches!(ExtensionSpec::new(osc, ExtensionType::I, 2), Err(Error::ExtensionInadmissible(_))));
    assert!(matches!(ExtensionSpec::new(osc, ExtensionType::I, 0), Err(Error::ExtensionInadmissible(_))));
    // type II needs m < a + 1/2 = 1.5
    assert!(ExtensionSpec::new(osc, ExtensionType::II, 2).is_err());
    let kc = SystemSpec::coulomb(1.0, 3, 0, 40.0).unwrap();
    // type I needs a > 2
    assert!(ExtensionSpec::new(kc, ExtensionType::I, 1).is_err());
    let hyperbolic_osc = SystemSpec::oscillator(1.0, 3, 0, 4.0).unwrap();
    assert!(matches!(ExtensionSpec::new(hyperbolic_osc, ExtensionType::I, 1), Err(Error::Unsupported(_))));
    let ext = ExtensionSpec::new(SystemSpec::oscillator(-1.0, 5, 1, 3.0).unwrap(), ExtensionType::III, 2).unwrap();
    assert!(is_extended_admissible(&ext, -3));
    assert!(!is_extended_admissible(&ext, -1));
    assert!(q_polynomial(&ext, -2).is_err());
}
