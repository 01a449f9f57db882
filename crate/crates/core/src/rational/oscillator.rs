//! Oscillator on the sphere (`λ < 0`), extended through Pöschl–Teller I.
//!
//! Notation: `a = l + (d−1)/2`, `B = β/|λ|`, `z = 1 − 2|λ|r²`.

use alloc::format;
use alloc::string::String;

#[allow(unused_imports)] // inherent float methods need std
use num_traits::Float;

use super::ExtensionType;
use crate::error::Result;
use crate::specfun::{jacobi, JacobiParams, PolyRef};

/// `p_m^{(l,β)}` for the given type at `(a, B)`; `None` for negative degree.
pub(super) fn denominator(ty: ExtensionType, m: i64, a: f64, b: f64) -> Option<PolyRef> {
    if m < 0 {
        return None;
    }
    let m = m as u32;
    Some(match ty {
        ExtensionType::I => PolyRef::jacobi(m, a - 1.5, -b - 0.5),
        ExtensionType::II => PolyRef::jacobi(m, -a - 0.5, b - 1.5),
        ExtensionType::III => PolyRef::jacobi(m, -a - 0.5, -b - 0.5),
    })
}

pub(super) fn admissibility(ty: ExtensionType, m: u32, a: f64, b: f64) -> core::result::Result<(), String> {
    let mf = m as f64;
    let wall = |ok: bool, text: String| if ok { Ok(()) } else { Err(text) };
    match ty {
        ExtensionType::I => wall(mf < b + 0.5, format!("type I needs m < beta/|lambda| + 1/2 = {}", b + 0.5)),
        ExtensionType::II => wall(mf < a + 0.5, format!("type II needs m < a + 1/2 = {}", a + 0.5)),
        ExtensionType::III => {
            wall(m % 2 == 0, format!("type III needs an even degree, got m = {m}"))?;
            wall(mf < a + 0.5, format!("type III needs m < a + 1/2 = {}", a + 0.5))?;
            wall(mf < b + 0.5, format!("type III needs m < beta/|lambda| + 1/2 = {}", b + 0.5))
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

/// `𝒬_{n_r}^{(m)}(z)`; `n_r = −m−1` (type III) gives 1.
pub(super) fn q_value(ty: ExtensionType, m: u32, n_r: i64, a: f64, b: f64, z: f64) -> Result<f64> {
    let mi = m as i64;
    let mf = m as f64;
    let n = n_r as f64;
    let pm = p_at(ty, mi, a, b, z)?;
    match ty {
        ExtensionType::I => {
            let pn = jac(n_r, a - 1.5, b + 0.5, z)?;
            let pn1 = jac(n_r - 1, a - 0.5, b + 1.5, z)?;
            let pd = p_at(ExtensionType::I, mi - 1, a + 1.0, b - 1.0, z)?;
            Ok((b + 0.5) * pm * pn + 0.5 * (1.0 + z) * ((n + a + b) * pm * pn1 - (mf + a - b - 1.0) * pd * pn))
        }
        ExtensionType::II => {
            let pn = jac(n_r, a + 0.5, b - 1.5, z)?;
            let pn1 = jac(n_r - 1, a + 1.5, b - 0.5, z)?;
            let pd = p_at(ExtensionType::II, mi - 1, a - 1.0, b + 1.0, z)?;
            Ok(-(a + 0.5) * pm * pn + 0.5 * (1.0 - z) * ((n + a + b) * pm * pn1 - (mf - a + b - 1.0) * pd * pn))
        }
        ExtensionType::III => {
            if n_r == -mi - 1 {
                return Ok(1.0);
            }
            let pn = jac(n_r, a + 0.5, b + 0.5, z)?;
            let pn1 = jac(n_r - 1, a + 1.5, b + 1.5, z)?;
            let pd = p_at(ExtensionType::III, mi - 1, a - 1.0, b - 1.0, z)?;
            Ok((b - a - (b + a + 1.0) * z) * pm * pn
                + 0.5 * (1.0 - z * z) * ((n + a + b + 2.0) * pm * pn1 - (mf - a - b) * pd * pn))
        }
    }
}

/// Nominal degree of `𝒬_{n_r}^{(m)}`.
pub(super) fn q_degree(ty: ExtensionType, m: u32, n_r: i64) -> u32 {
    match ty {
        ExtensionType::I | ExtensionType::II => (m as i64 + n_r) as u32,
        ExtensionType::III if n_r == -(m as i64) - 1 => 0,
        ExtensionType::III => (m as i64 + n_r + 1) as u32,
    }
}

/// Extended energy for a (possibly formal) quantum number.
pub(super) fn energy(ty: ExtensionType, n_r: i64, a: f64, beta: f64, abs_lambda: f64) -> f64 {
    let n = n_r as f64;
    match ty {
        ExtensionType::I | ExtensionType::II => {
            beta * (4.0 * n + 2.0 * a + 1.0) + abs_lambda * (2.0 * n + a) * (2.0 * n + a)
        }
        ExtensionType::III => beta * (4.0 * n + 2.0 * a + 5.0) + abs_lambda * (2.0 * n + a + 2.0) * (2.0 * n + a + 2.0),
    }
}

/// `V_rat` from `p`, `ṗ`, `p̈` at `z`.
pub(super) fn v_rat(abs_lambda: f64, z: f64, p: f64, p1: f64, p2: f64) -> f64 {
    let g1 = p1 / p;
    8.0 * abs_lambda * (z * g1 - (1.0 - z * z) * (p2 / p - g1 * g1))
}
