//! Kepler–Coulomb problem on the hyperbolic space (`λ > 0`), extended
//! through the Eckart potential.
//!
//! Notation: `a = l + (d−1)/2`, `B = Q/(2√λ)`, `z = f/(√λ r)`.

use alloc::format;
use alloc::string::String;

#[allow(unused_imports)] // inherent float methods need std
use num_traits::Float;

use super::ExtensionType;
use crate::error::Result;
use crate::specfun::{jacobi, JacobiParams, PolyRef};

/// `p_m^{(l,Q)}` for the given type at `(a, B)`; `None` for negative degree.
pub(super) fn denominator(ty: ExtensionType, m: i64, a: f64, b: f64) -> Option<PolyRef> {
    if m < 0 {
        return None;
    }
    let mf = m as f64;
    let mu = m as u32;
    Some(match ty {
        ExtensionType::I => {
            let c = b / (a - 1.0 + mf);
            PolyRef::jacobi(mu, -a + 1.0 - mf + c, -a + 1.0 - mf - c)
        }
        ExtensionType::II | ExtensionType::III => {
            let c = b / (a - mf);
            PolyRef::jacobi(mu, a - mf - c, a - mf + c)
        }
    })
}

pub(super) fn admissibility(ty: ExtensionType, m: u32, a: f64, b: f64) -> core::result::Result<(), String> {
    let mf = m as f64;
    let wall = |ok: bool, text: String| if ok { Ok(()) } else { Err(text) };
    match ty {
        ExtensionType::I => {
            wall(a > 2.0, format!("type I needs a > 2, got a = {a}"))?;
            let (lo, hi) = ((a - 1.0) * (a - 1.0), (a - 1.0) * (a - 1.0 + mf));
            wall(
                lo < b && b < hi,
                format!("type I needs (a-1)^2 < Q/(2 sqrt(lambda)) < (a-1)(a-1+m), i.e. {lo} < {b} < {hi}"),
            )
        }
        ExtensionType::II => {
            wall(
                (mf - 1.0) / 2.0 < a && a < mf,
                format!("type II needs (m-1)/2 < a < m, i.e. {} < {a} < {mf}", (mf - 1.0) / 2.0),
            )?;
            let lo = (a + 1.0) * (a + 1.0);
            wall(b > lo, format!("type II needs Q/(2 sqrt(lambda)) > (a+1)^2, i.e. {b} > {lo}"))
        }
        ExtensionType::III => {
            wall(m % 2 == 0, format!("type III needs an even degree, got m = {m}"))?;
            wall(a > mf, format!("type III needs a > m, i.e. {a} > {mf}"))?;
            let lo = (a + 1.0) * (a + 1.0);
            wall(b > lo, format!("type III needs Q/(2 sqrt(lambda)) > (a+1)^2, i.e. {b} > {lo}"))
        }
    }
}

fn p_at(ty: ExtensionType, m: i64, a: f64, b: f64, z: f64) -> Result<f64> {
    match denominator(ty, m, a, b) {
        Some(p) => Ok(p.eval(z)?.value),
        None => Ok(0.0),
    }
}

fn jac(n: i64, alpha: f64, beta: f64, z: f64) -> Result<f64> {
    if n < 0 {
        return Ok(0.0);
    }
    Ok(jacobi(n as u32, JacobiParams::new(alpha, beta), z)?.value)
}

/// Principal number `N` of the state: `n_r + a − 1` (type I) or
/// `n_r + a + 1` (types II, III).
pub(super) fn principal(ty: ExtensionType, n_r: i64, a: f64) -> f64 {
    match ty {
        ExtensionType::I => n_r as f64 + a - 1.0,
        ExtensionType::II | ExtensionType::III => n_r as f64 + a + 1.0,
    }
}

/// `𝒬_{n_r}^{(m)}(z)`; `n_r = −m−1` (type III) gives 1.
pub(super) fn q_value(ty: ExtensionType, m: u32, n_r: i64, a: f64, b: f64, lambda: f64, z: f64) -> Result<f64> {
    let mi = m as i64;
    let mf = m as f64;
    let q = 2.0 * b * lambda.sqrt();
    let big_n = principal(ty, n_r, a);
    let c = b / big_n;
    let pm = p_at(ty, mi, a, b, z)?;
    let pn = jac(n_r, -big_n + c, -big_n - c, z)?;
    let pn1 = jac(n_r - 1, -big_n + c, -big_n - c, z)?;
    match ty {
        ExtensionType::I => {
            let k = a - 1.0 + mf;
            let pd = p_at(ExtensionType::I, mi - 1, a + 1.0, b, z)?;
            let am1 = a - 1.0;
            Ok((q * q - 4.0 * lambda * big_n * big_n * am1 * am1) / (big_n * big_n) * pm * pn1
                - (q * q - 4.0 * lambda * k * k * am1 * am1) / (k * k) * pd * pn)
        }
        ExtensionType::II | ExtensionType::III => {
            if ty == ExtensionType::III && n_r == -mi - 1 {
                return Ok(1.0);
            }
            let pu = p_at(ty, mi + 1, a + 1.0, b, z)?;
            let ap1 = a + 1.0;
            Ok((q * q - 4.0 * lambda * big_n * big_n * ap1 * ap1) / (4.0 * lambda * big_n * big_n) * pm * pn1
                + (mf + 1.0) * (2.0 * a - mf + 1.0) * pu * pn)
        }
    }
}

/// Nominal degree of `𝒬_{n_r}^{(m)}`.
pub(super) fn q_degree(ty: ExtensionType, m: u32, n_r: i64) -> u32 {
    let m = m as i64;
    match ty {
        ExtensionType::I => (m + n_r - 1).max(0) as u32,
        ExtensionType::III if n_r == -m - 1 => 0,
        ExtensionType::II | ExtensionType::III => (m + n_r + 1) as u32,
    }
}

/// Strict upper bound on `n_r ≥ 0`.
pub(super) fn level_bound(ty: ExtensionType, a: f64, b: f64) -> f64 {
    match ty {
        ExtensionType::I => b.sqrt() - a + 1.0,
        ExtensionType::II | ExtensionType::III => b.sqrt() - a - 1.0,
    }
}

pub(super) fn energy(ty: ExtensionType, n_r: i64, a: f64, q: f64, lambda: f64) -> f64 {
    let big_n = principal(ty, n_r, a);
    -q * q / (4.0 * big_n * big_n) - lambda * big_n * big_n
}

/// `V_rat` from `p`, `ṗ`, `p̈` at `z`.
pub(super) fn v_rat(lambda: f64, m: u32, z: f64, p: f64, p1: f64, p2: f64) -> f64 {
    let g1 = p1 / p;
    let w = 1.0 - z * z;
    2.0 * lambda * w * (2.0 * z * g1 - w * (p2 / p - g1 * g1) - m as f64)
}
