//! Orthogonal polynomials against independent oracles: explicit binomial
//! sums, the defining differential equations, finite differences and the
//! classical limit and argument relations.

use curvedqm_core::specfun::{
    jacobi, jacobi_complex, jacobi_eval_explicit, laguerre_eval, romanovski_eval, romanovski_series, Argument,
    ComplexJacobiParams, JacobiParams, PolyRef,
};
use num_complex::Complex64;
use proptest::prelude::*;

/// Generalized binomial coefficient `x(x−1)…(x−j+1)/j!`.
fn binom(x: f64, j: u32) -> f64 {
    (0..j).fold(1.0, |acc, i| acc * (x - i as f64) / (i as f64 + 1.0))
}

/// `Σ_k C(n+α, n−k) C(n+β, k) ((z−1)/2)^k ((z+1)/2)^{n−k}`, valid for every
/// index pair.
fn jacobi_oracle(n: u32, alpha: f64, beta: f64, z: f64) -> f64 {
    (0..=n)
        .map(|k| {
            binom(n as f64 + alpha, n - k)
                * binom(n as f64 + beta, k)
                * ((z - 1.0) / 2.0).powi(k as i32)
                * ((z + 1.0) / 2.0).powi((n - k) as i32)
        })
        .sum()
}

/// `Σ_k (−1)^k C(n+α, n−k) x^k / k!`.
fn laguerre_oracle(n: u32, alpha: f64, x: f64) -> f64 {
    let mut fact = 1.0;
    let mut s = 0.0;
    for k in 0..=n {
        if k > 0 {
            fact *= k as f64;
        }
        s += (-1.0f64).powi(k as i32) * binom(n as f64 + alpha, n - k) * x.powi(k as i32) / fact;
    }
    s
}

fn close(a: f64, b: f64, tol: f64) -> bool {
    (a - b).abs() <= tol * (1.0 + a.abs().max(b.abs()))
}

/// Central differences of `g` at `x`: `(g′, g″)`.
fn differences(g: &dyn Fn(f64) -> f64, x: f64, h: f64) -> (f64, f64) {
    let (gp, g0, gm) = (g(x + h), g(x), g(x - h));
    let (gp2, gm2) = (g(x + 2.0 * h), g(x - 2.0 * h));
    let d1 = (8.0 * (gp - gm) - (gp2 - gm2)) / (12.0 * h);
    let d2 = (16.0 * (gp + gm) - (gp2 + gm2) - 30.0 * g0) / (12.0 * h * h);
    (d1, d2)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn jacobi_matches_binomial_sum(n in 0u32..9, alpha in -6.0f64..6.0, beta in -6.0f64..6.0, z in -3.0f64..3.0) {
        let v = jacobi(n, JacobiParams::new(alpha, beta), z).unwrap();
        let o = jacobi_oracle(n, alpha, beta, z);
        prop_assert!(close(v.value, o, 1e-10), "{} vs {}", v.value, o);
    }

    #[test]
    fn jacobi_satisfies_its_differential_equation(
        n in 0u32..9, alpha in -6.0f64..6.0, beta in -6.0f64..6.0, z in -2.0f64..2.0
    ) {
        let v = jacobi(n, JacobiParams::new(alpha, beta), z).unwrap();
        let nf = n as f64;
        let lhs = (1.0 - z * z) * v.d2 + (beta - alpha - (alpha + beta + 2.0) * z) * v.d1
            + nf * (nf + alpha + beta + 1.0) * v.value;
        let scale = 1.0 + v.d2.abs() * (1.0 + z * z) + v.d1.abs() * (2.0 + alpha.abs() + beta.abs()) * 3.0
            + v.value.abs() * nf * (nf + alpha.abs() + beta.abs() + 1.0);
        prop_assert!(lhs.abs() <= 1e-11 * scale, "residual {lhs} (scale {scale})");
    }

    #[test]
    fn jacobi_derivatives_match_differences(n in 1u32..8, alpha in -4.0f64..4.0, beta in -4.0f64..4.0, z in -1.5f64..1.5) {
        let p = JacobiParams::new(alpha, beta);
        let v = jacobi(n, p, z).unwrap();
        let (d1, d2) = differences(&|x| jacobi_oracle(n, alpha, beta, x), z, 1e-3);
        prop_assert!(close(v.d1, d1, 1e-7), "{} vs {}", v.d1, d1);
        prop_assert!(close(v.d2, d2, 1e-6), "{} vs {}", v.d2, d2);
    }

    #[test]
    fn laguerre_matches_series(n in 0u32..12, alpha in -8.0f64..8.0, x in -4.0f64..8.0) {
        let v = laguerre_eval(n, alpha, x).unwrap();
        let o = laguerre_oracle(n, alpha, x);
        prop_assert!(close(v.value, o, 1e-9), "{} vs {}", v.value, o);
        // d/dx L_n^{(α)} = −L_{n−1}^{(α+1)}
        let d1 = if n >= 1 { -laguerre_oracle(n - 1, alpha + 1.0, x) } else { 0.0 };
        let d2 = if n >= 2 { laguerre_oracle(n - 2, alpha + 2.0, x) } else { 0.0 };
        prop_assert!(close(v.d1, d1, 1e-9), "{} vs {}", v.d1, d1);
        prop_assert!(close(v.d2, d2, 1e-9), "{} vs {}", v.d2, d2);
    }

    #[test]
    fn laguerre_satisfies_its_differential_equation(n in 0u32..12, alpha in -8.0f64..8.0, x in -4.0f64..12.0) {
        let v = laguerre_eval(n, alpha, x).unwrap();
        let lhs = x * v.d2 + (alpha + 1.0 - x) * v.d1 + n as f64 * v.value;
        let scale = 1.0 + (x * v.d2).abs() + ((alpha.abs() + 1.0 + x.abs()) * v.d1).abs() + (n as f64 * v.value).abs();
        prop_assert!(lhs.abs() <= 1e-11 * scale);
    }

    #[test]
    fn romanovski_satisfies_its_differential_equation(n in 0u32..7, p1 in -10.0f64..10.0, p2 in -6.0f64..-0.6, x in -3.0f64..3.0) {
        let v = romanovski_eval(n, p1, p2, x).unwrap();
        let nf = n as f64;
        let lhs = (1.0 + x * x) * v.d2 + (p1 + 2.0 * p2 * x) * v.d1 - nf * (nf + 2.0 * p2 - 1.0) * v.value;
        let scale = 1.0 + ((1.0 + x * x) * v.d2).abs() + ((p1.abs() + 2.0 * p2.abs() * x.abs()) * v.d1).abs()
            + (nf * (nf + 2.0 * p2.abs() + 1.0) * v.value).abs();
        prop_assert!(lhs.abs() <= 1e-10 * scale, "residual {lhs}");
        let s = romanovski_series(n, p1, p2, x).unwrap();
        prop_assert!(close(v.value, s.value, 1e-9));
    }

    /// `P_n^{(α,β)}(z) = (−1)^n ((z−1)/2)^n P_n^{(−2n−α−β−1, β)}((z+3)/(z−1))`.
    #[test]
    fn jacobi_argument_transformation(n in 0u32..8, alpha in -5.0f64..5.0, beta in -5.0f64..5.0, z in 1.1f64..6.0) {
        let nf = n as f64;
        let lhs = jacobi(n, JacobiParams::new(alpha, beta), z).unwrap().value;
        let zbar = (z + 3.0) / (z - 1.0);
        let rhs = (-1.0f64).powi(n as i32) * ((z - 1.0) / 2.0).powi(n as i32)
            * jacobi(n, JacobiParams::new(-2.0 * nf - alpha - beta - 1.0, beta), zbar).unwrap().value;
        prop_assert!(close(lhs, rhs, 1e-9), "{lhs} vs {rhs}");
    }
}

#[test]
fn jacobi_approaches_laguerre_for_large_second_index() {
    // P_n^{(α,β)}(1 − 2x/β) → L_n^{(α)}(x) with an O(1/β) error
    for (n, alpha, x) in [(3, 0.5, 0.7), (5, -1.5, 2.0), (4, 2.5, 4.0)] {
        let target = laguerre_eval(n, alpha, x).unwrap().value;
        let errs: Vec<f64> = [1e2, 1e3, 1e4]
            .iter()
            .flat_map(|&b: &f64| [b, -b])
            .map(|b| (jacobi(n, JacobiParams::new(alpha, b), 1.0 - 2.0 * x / b).unwrap().value - target).abs())
            .collect();
        // each tenfold increase of |β| shrinks the error roughly tenfold
        assert!(errs[2] < 0.2 * errs[0] && errs[4] < 0.2 * errs[2], "{errs:?}");
        assert!(errs[3] < 0.2 * errs[1] && errs[5] < 0.2 * errs[3], "{errs:?}");
        assert!(errs[4] < 1e-2 * (1.0 + target.abs()));
    }
}

#[test]
fn explicit_sum_agrees_on_degenerate_indices() {
    // α+β = −2 makes the degree-2 recurrence step singular
    for (alpha, beta) in [(-0.5, -1.5), (1.0, -3.0), (-2.5, 0.5)] {
        for z in [-0.7, 0.1, 1.8] {
            let o = jacobi_oracle(2, alpha, beta, z);
            let v = jacobi(2, JacobiParams::new(alpha, beta), z).unwrap();
            let e = jacobi_eval_explicit(2, JacobiParams::new(alpha, beta), z).unwrap();
            assert!(close(v.value, o, 1e-12) && close(e.value, o, 1e-12));
        }
    }
}

#[test]
fn complex_jacobi_reduces_to_real_jacobi() {
    for (n, alpha, beta, x) in [(4, 0.3, -1.2, 0.4), (6, -2.5, 1.5, -1.3)] {
        let p = ComplexJacobiParams {
            alpha: Complex64::new(alpha, 0.0),
            beta: Complex64::new(beta, 0.0),
            argument: Argument::Real,
        };
        let c = jacobi_complex(n, p, x).unwrap();
        assert!(close(c.value.re, jacobi_oracle(n, alpha, beta, x), 1e-12) && c.value.im.abs() < 1e-14);
    }
}

/// The complex Jacobi form on `i·cot u` and the real Romanovski form on
/// `cot u` are proportional (the sphere Kepler–Coulomb states).
#[test]
fn rosen_morse_jacobi_and_romanovski_forms_are_proportional() {
    for (n, a, b) in [(2u32, 1.5, -3.0), (3, 2.0, -6.0), (4, 1.0, 2.5)] {
        let k = a + n as f64;
        let p = ComplexJacobiParams {
            alpha: Complex64::new(-k, -b / k),
            beta: Complex64::new(-k, b / k),
            argument: Argument::Imaginary,
        };
        let mut ratios = Vec::new();
        for u in [0.3, 0.8, 1.4, 2.2, 2.9] {
            let x = 1.0 / f64::tan(u);
            let c = jacobi_complex(n, p, x).unwrap().value;
            let r = romanovski_eval(n, -2.0 * b / k, 1.0 - k, x).unwrap().value;
            ratios.push(c / r);
        }
        for r in &ratios[1..] {
            assert!((r - ratios[0]).norm() < 1e-10 * ratios[0].norm(), "{ratios:?}");
        }
    }
}

#[test]
fn poly_ref_dispatches_to_the_families() {
    let j = PolyRef::jacobi(3, 0.5, -0.5).eval(0.2).unwrap().value;
    assert!(close(j, jacobi_oracle(3, 0.5, -0.5, 0.2), 1e-13));
    let l = PolyRef::laguerre(4, 1.5).eval(0.9).unwrap().value;
    assert!(close(l, laguerre_oracle(4, 1.5, 0.9), 1e-13));
}
