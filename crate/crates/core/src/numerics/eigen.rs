use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

#[allow(unused_imports)] // inherent float methods need std
use num_traits::Float;

use super::operator::DiscreteOperator;
use crate::error::{Error, Result};

/// Lowest eigenpairs of a discrete operator.
///
/// Vectors are unit vectors in the matrix variable `y`; residuals are
/// `‖Hy − Ey‖ / ‖H‖∞`.
#[derive(Clone, Debug, PartialEq)]
pub struct EigenResult {
    pub values: Vec<f64>,
    pub vectors: Vec<Vec<f64>>,
    pub residuals: Vec<f64>,
}

/// Number of eigenvalues below `x` (Sturm count via `LDLᵀ` pivots).
fn sturm_count(diag: &[f64], off2: &[f64], x: f64, pivmin: f64) -> usize {
    let mut count = 0;
    let mut d = diag[0] - x;
    if d.abs() < pivmin {
        d = -pivmin;
    }
    if d < 0.0 {
        count += 1;
    }
    for i in 1..diag.len() {
        d = diag[i] - x - off2[i - 1] / d;
        if d.abs() < pivmin {
            d = -pivmin;
        }
        if d < 0.0 {
            count += 1;
        }
    }
    count
}

/// LU factors of a tridiagonal matrix with partial pivoting.
struct TridiagonalLu {
    dl: Vec<f64>,
    d: Vec<f64>,
    du: Vec<f64>,
    du2: Vec<f64>,
    swapped: Vec<bool>,
}

impl TridiagonalLu {
    /// Factors `T − σI`; exact zero pivots are replaced by `tiny`.
    fn factor(op: &DiscreteOperator, sigma: f64, tiny: f64) -> Self {
        let n = op.len();
        let mut dl = op.off().to_vec();
        let mut du = op.off().to_vec();
        let mut d: Vec<f64> = op.diag().iter().map(|x| x - sigma).collect();
        let mut du2 = vec![0.0; n.saturating_sub(2)];
        let mut swapped = vec![false; n.saturating_sub(1)];
        for i in 0..n - 1 {
            if d[i].abs() >= dl[i].abs() {
                if d[i] == 0.0 {
                    d[i] = tiny;
                }
                let fact = dl[i] / d[i];
                dl[i] = fact;
                d[i + 1] -= fact * du[i];
            } else {
                let fact = d[i] / dl[i];
                d[i] = dl[i];
                dl[i] = fact;
                let temp = du[i];
                du[i] = d[i + 1];
                d[i + 1] = temp - fact * d[i + 1];
                if i + 2 < n {
                    du2[i] = du[i + 1];
                    du[i + 1] = -fact * du[i + 1];
                }
                swapped[i] = true;
            }
        }
        if d[n - 1] == 0.0 {
            d[n - 1] = tiny;
        }
        TridiagonalLu { dl, d, du, du2, swapped }
    }

    fn solve(&self, b: &mut [f64]) {
        let n = self.d.len();
        for i in 0..n - 1 {
            if self.swapped[i] {
                let temp = b[i] - self.dl[i] * b[i + 1];
                b[i] = b[i + 1];
                b[i + 1] = temp;
            } else {
                b[i + 1] -= self.dl[i] * b[i];
            }
        }
        b[n - 1] /= self.d[n - 1];
        if n > 1 {
            b[n - 2] = (b[n - 2] - self.du[n - 2] * b[n - 1]) / self.d[n - 2];
        }
        for i in (0..n.saturating_sub(2)).rev() {
            b[i] = (b[i] - self.du[i] * b[i + 1] - self.du2[i] * b[i + 2]) / self.d[i];
        }
    }
}

fn normalize(x: &mut [f64]) -> f64 {
    let norm = x.iter().map(|v| v * v).sum::<f64>().sqrt();
    if norm > 0.0 {
        x.iter_mut().for_each(|v| *v /= norm);
    }
    norm
}

/// The `k` lowest eigenvalues (bisection on Sturm counts) and their vectors
/// (inverse iteration), with a deterministic sign convention: the first
/// component exceeding `10⁻³` of the largest one is positive.
pub fn lowest_eigenpairs(op: &DiscreteOperator, k: usize) -> Result<EigenResult> {
    let n = op.len();
    if k > n {
        return Err(Error::InvalidSpec(format!("{k} eigenpairs requested from a {n}×{n} matrix")));
    }
    if k == 0 {
        return Ok(EigenResult { values: Vec::new(), vectors: Vec::new(), residuals: Vec::new() });
    }
    let diag = op.diag();
    let off = op.off();
    let off2: Vec<f64> = off.iter().map(|x| x * x).collect();
    let norm = op.norm_inf();
    let (mut glo, mut ghi) = (f64::INFINITY, f64::NEG_INFINITY);
    for j in 0..n {
        let mut r = 0.0;
        if j > 0 {
            r += off[j - 1].abs();
        }
        if j + 1 < n {
            r += off[j].abs();
        }
        glo = glo.min(diag[j] - r);
        ghi = ghi.max(diag[j] + r);
    }
    let pad = f64::EPSILON * norm.max(1.0) * n as f64;
    glo -= pad;
    ghi += pad;
    let pivmin = f64::MIN_POSITIVE * off2.iter().fold(1.0_f64, |m, &v| m.max(v));

    let mut values = Vec::with_capacity(k);
    let mut vectors: Vec<Vec<f64>> = Vec::with_capacity(k);
    let mut residuals = Vec::with_capacity(k);
    let mut lower = glo;
    for idx in 0..k {
        // the idx-th eigenvalue: smallest x with count(x) > idx
        let (mut lo, mut hi) = (lower, ghi);
        for _ in 0..400 {
            let mid = 0.5 * (lo + hi);
            if mid <= lo || mid >= hi {
                break;
            }
            if sturm_count(diag, &off2, mid, pivmin) > idx {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        let sigma = 0.5 * (lo + hi);
        lower = lo;

        let lu = TridiagonalLu::factor(op, sigma, f64::EPSILON * norm.max(f64::MIN_POSITIVE));
        // deterministic, non-degenerate start vector
        let mut state: u64 = 0x9E37_79B9_7F4A_7C15 ^ (idx as u64);
        let mut x: Vec<f64> = (0..n)
            .map(|_| {
                state = state.wrapping_mul(6_364_136_223_846_793_005).wrapping_add(1_442_695_040_888_963_407);
                ((state >> 11) as f64 / (1u64 << 53) as f64) - 0.25
            })
            .collect();
        normalize(&mut x);
        for _ in 0..6 {
            lu.solve(&mut x);
            for prev in &vectors {
                let dot: f64 = prev.iter().zip(&x).map(|(a, b)| a * b).sum();
                x.iter_mut().zip(prev).for_each(|(v, p)| *v -= dot * p);
            }
            if normalize(&mut x) == 0.0 || x.iter().any(|v| !v.is_finite()) {
                return Err(Error::NoConvergence(format!("inverse iteration broke down for eigenvalue {idx}")));
            }
        }
        let hx = op.apply(&x);
        let rayleigh: f64 = hx.iter().zip(&x).map(|(a, b)| a * b).sum();
        let res = hx.iter().zip(&x).map(|(a, b)| (a - rayleigh * b).powi(2)).sum::<f64>().sqrt() / norm;
        let peak = x.iter().fold(0.0_f64, |m, v| m.max(v.abs()));
        if let Some(first) = x.iter().find(|v| v.abs() > 1e-3 * peak) {
            if *first < 0.0 {
                x.iter_mut().for_each(|v| *v = -*v);
            }
        }
        values.push(rayleigh);
        vectors.push(x);
        residuals.push(res);
    }
    Ok(EigenResult { values, vectors, residuals })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::SystemSpec;
    use crate::numerics::{discretize_deformed, GridSpec};

    #[test]
    fn sturm_count_of_diagonal_matrix() {
        let d = [1.0, 2.0, 3.0];
        assert_eq!(sturm_count(&d, &[0.0, 0.0], 2.5, 1e-300), 2);
    }

    #[test]
    fn flat_oscillator_ground_state() {
        let spec = SystemSpec::oscillator(0.0, 3, 0, 1.0).unwrap();
        let g = GridSpec::for_problem(&spec, 600, 8.0).unwrap();
        let op = discretize_deformed(&spec, &g).unwrap();
        let res = lowest_eigenpairs(&op, 3).unwrap();
        for (n, e) in res.values.iter().enumerate() {
            assert!((e - (4.0 * n as f64 + 3.0)).abs() < 1e-3, "{e}");
        }
        assert!(res.residuals.iter().all(|r| *r < 1e-9));
    }
}
