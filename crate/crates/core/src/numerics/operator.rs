use alloc::format;
use alloc::string::ToString;
use alloc::vec::Vec;

#[allow(unused_imports)] // inherent float methods need std
use num_traits::Float;

use super::grid::{Grid, GridSpec};
use super::{RadialProblem, RightEnd};
use crate::dsusy::Superpotential;
use crate::error::{Error, Result};
use crate::model::{DomainTag, GridFunction};

/// Symmetric tridiagonal discretization of `−d²/dv² + V` acting on
/// `y = √(dv/dt) φ`.
#[derive(Clone, Debug, PartialEq)]
pub struct DiscreteOperator {
    grid: Grid,
    diag: Vec<f64>,
    off: Vec<f64>,
}

/// Builds the operator for `problem` on the grid described by `spec`.
pub fn discretize_deformed<P: RadialProblem + ?Sized>(problem: &P, spec: &GridSpec) -> Result<DiscreteOperator> {
    let lambda = problem.chart_lambda();
    let a = problem.centrifugal();
    let grid = Grid::new(*spec, lambda)?;
    let n = grid.len();
    let h2 = grid.h() * grid.h();
    let geometry = crate::model::Geometry::new(lambda);
    let log_r: Vec<f64> = grid.radius().iter().map(|r| r.ln()).collect();
    let (v_face, jac_face) = grid.faces();
    let jac = grid.jacobian();

    // log of the flux weight ρ²/g' at each face, or None where ρ vanishes
    let mut log_k: Vec<Option<f64>> = Vec::with_capacity(n + 1);
    for j in 0..=n {
        let r = geometry.radius(v_face[j]);
        let regular_end = j == n && spec.right == RightEnd::Regular;
        if j == 0 || regular_end || !(r > 0.0) {
            log_k.push(None);
        } else {
            log_k.push(Some(2.0 * a * r.ln() - jac_face[j].ln()));
        }
    }
    let log_d: Vec<f64> = (0..n).map(|j| 2.0 * a * log_r[j] + jac[j].ln()).collect();

    let shift = lambda * a * a;
    let mut diag = Vec::with_capacity(n);
    for j in 0..n {
        let mut kin = 0.0;
        for face in [j, j + 1] {
            if let Some(lk) = log_k[face] {
                kin += (lk - log_d[j]).exp();
            }
        }
        let pot = problem.regular_potential(grid.arclength()[j])?;
        let entry = kin / h2 + pot - shift;
        if !entry.is_finite() {
            return Err(Error::NonFinite("operator diagonal"));
        }
        diag.push(entry);
    }
    let mut off = Vec::with_capacity(n.saturating_sub(1));
    for j in 0..n - 1 {
        let entry = match log_k[j + 1] {
            Some(lk) => -(lk - 0.5 * (log_d[j] + log_d[j + 1])).exp() / h2,
            None => 0.0,
        };
        off.push(entry);
    }
    Ok(DiscreteOperator { grid, diag, off })
}

impl DiscreteOperator {
    pub fn grid(&self) -> &Grid {
        &self.grid
    }

    pub fn diag(&self) -> &[f64] {
        &self.diag
    }

    pub fn off(&self) -> &[f64] {
        &self.off
    }

    pub fn len(&self) -> usize {
        self.diag.len()
    }

    pub fn is_empty(&self) -> bool {
        self.diag.is_empty()
    }

    /// Largest absolute row sum.
    pub fn norm_inf(&self) -> f64 {
        let n = self.len();
        (0..n)
            .map(|j| {
                let mut s = self.diag[j].abs();
                if j > 0 {
                    s += self.off[j - 1].abs();
                }
                if j + 1 < n {
                    s += self.off[j].abs();
                }
                s
            })
            .fold(0.0, f64::max)
    }

    /// Matrix–vector product.
    pub fn apply(&self, y: &[f64]) -> Vec<f64> {
        let n = self.len();
        (0..n)
            .map(|j| {
                let mut s = self.diag[j] * y[j];
                if j > 0 {
                    s += self.off[j - 1] * y[j - 1];
                }
                if j + 1 < n {
                    s += self.off[j] * y[j + 1];
                }
                s
            })
            .collect()
    }

    /// `y = √(g') φ` from samples of `φ(v)`.
    pub fn vector_from_reduced(&self, phi: &dyn Fn(f64) -> Result<f64>) -> Result<Vec<f64>> {
        self.grid
            .arclength()
            .iter()
            .zip(self.grid.jacobian())
            .map(|(&v, &j)| Ok(j.sqrt() * phi(v)?))
            .collect()
    }

    /// `φ_j = y_j / √(g'_j)`.
    pub fn reduced_from_vector(&self, y: &[f64]) -> Vec<f64> {
        y.iter().zip(self.grid.jacobian()).map(|(y, j)| y / j.sqrt()).collect()
    }

    /// `(−φ'' + Vφ − Eφ)` at the nodes, from the matrix applied to samples.
    pub fn pointwise_residual(&self, energy: f64, phi: &dyn Fn(f64) -> Result<f64>) -> Result<Vec<f64>> {
        let y = self.vector_from_reduced(phi)?;
        let hy = self.apply(&y);
        Ok(hy
            .iter()
            .zip(&y)
            .zip(self.grid.jacobian())
            .map(|((hy, y), j)| (hy - energy * y) / j.sqrt())
            .collect())
    }

    /// Plain relative residual `‖(H − E)y‖ / ‖E y‖` on this grid.
    pub fn residual(&self, energy: f64, phi: &dyn Fn(f64) -> Result<f64>) -> Result<f64> {
        let y = self.vector_from_reduced(phi)?;
        let hy = self.apply(&y);
        let num: f64 = hy.iter().zip(&y).map(|(a, b)| (a - energy * b).powi(2)).sum();
        let den: f64 = y.iter().map(|b| (energy * b).powi(2)).sum();
        Ok((num / den).sqrt())
    }

    /// Samples a radial function `ψ(r)` at the nodes.
    pub fn sample_radial(&self, psi: &dyn Fn(f64) -> Result<f64>) -> Result<GridFunction> {
        let r = self.grid.radius().to_vec();
        if self.grid.spec().right == RightEnd::Regular {
            return Err(Error::Unsupported("radial sampling needs a monotone chart".to_string()));
        }
        GridFunction::sample(DomainTag::Radial, r, None, psi)
    }

    /// Applies the operator to a radial function sampled on this grid and
    /// returns `(Ĥψ)(r_j)`.
    pub fn apply_radial(&self, psi: &GridFunction) -> Result<GridFunction> {
        check_on_grid(&self.grid, psi)?;
        let f = self.grid.deforming();
        let jac = self.grid.jacobian();
        let y: Vec<f64> = (0..self.len()).map(|j| psi.values()[j] * f[j].sqrt() * jac[j].sqrt()).collect();
        let hy = self.apply(&y);
        let out = (0..self.len()).map(|j| hy[j] / (f[j].sqrt() * jac[j].sqrt())).collect();
        GridFunction::new(DomainTag::Radial, psi.nodes().to_vec(), out, psi.provenance().copied())
    }
}

/// Which ladder operator to apply.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LadderSign {
    /// `Â⁺ = −√f d/dr √f + W`.
    Raising,
    /// `Â⁻ = +√f d/dr √f + W`.
    Lowering,
}

fn check_on_grid(grid: &Grid, psi: &GridFunction) -> Result<()> {
    if psi.tag() != DomainTag::Radial {
        return Err(Error::GridMismatch("expected a function of r".to_string()));
    }
    if psi.len() != grid.len() {
        return Err(Error::GridMismatch(format!("{} samples on a grid of {} nodes", psi.len(), grid.len())));
    }
    for (a, b) in psi.nodes().iter().zip(grid.radius()) {
        if (a - b).abs() > 1e-12 * b.abs() {
            return Err(Error::GridMismatch(format!("node {a} is not a grid node (expected {b})")));
        }
    }
    Ok(())
}

/// Discrete `Â∓ψ = (±√f d/dr √f + W)ψ` on the grid of an operator.
///
/// Writing `√f ψ = r^κ g` with `W ≈ −κ/r` at the origin, the derivative acts
/// on the smooth factor `g` (centred differences in the grid coordinate,
/// one-sided second order at the ends), so the `r^κ` behaviour is treated
/// exactly.
pub fn apply_ladder(grid: &Grid, w: &Superpotential, sign: LadderSign, psi: &GridFunction) -> Result<GridFunction> {
    check_on_grid(grid, psi)?;
    if grid.spec().right == RightEnd::Regular {
        return Err(Error::Unsupported("ladder operators need a monotone chart".to_string()));
    }
    let kappa = w.origin_exponent().max(0.0);
    let n = grid.len();
    let r = grid.radius();
    let f = grid.deforming();
    let jac = grid.jacobian();
    let h = grid.h();
    let g: Vec<f64> = (0..n).map(|j| psi.values()[j] * f[j].sqrt() * (-kappa * r[j].ln()).exp()).collect();
    let mut out = Vec::with_capacity(n);
    for j in 0..n {
        let gt = if j == 0 {
            (-3.0 * g[0] + 4.0 * g[1] - g[2]) / (2.0 * h)
        } else if j == n - 1 {
            (3.0 * g[n - 1] - 4.0 * g[n - 2] + g[n - 3]) / (2.0 * h)
        } else {
            (g[j + 1] - g[j - 1]) / (2.0 * h)
        };
        let gv = gt / jac[j];
        let wj = w.value(r[j])?;
        let rho = (kappa * r[j].ln()).exp();
        let inner = kappa * f[j] / r[j];
        let value = match sign {
            LadderSign::Lowering => gv + (inner + wj) * g[j],
            LadderSign::Raising => -gv + (wj - inner) * g[j],
        };
        out.push(rho / f[j].sqrt() * value);
    }
    GridFunction::new(DomainTag::Radial, psi.nodes().to_vec(), out, psi.provenance().copied())
}
