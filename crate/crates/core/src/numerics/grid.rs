use alloc::format;
use alloc::vec::Vec;

#[allow(unused_imports)] // inherent float methods need std
use num_traits::Float;

use super::{ArclengthDomain, RadialProblem, RightEnd};
use crate::error::{Error, Result};
use crate::model::Geometry;

/// Map from the computational coordinate `t ∈ (0,1)` to `v ∈ (0, L)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum GridMap {
    /// `v = L t`.
    Linear,
    /// `v = L (e^{γt} − 1)/(e^γ − 1)`: refines near the origin.
    Exponential { rate: f64 },
    /// `v = L (t − α sin(2πt)/(2π))`: refines both ends by `1/(1−α)`.
    Clustered { strength: f64 },
}

impl GridMap {
    /// `(v, dv/dt)`.
    pub fn eval(&self, t: f64, extent: f64) -> (f64, f64) {
        match *self {
            GridMap::Linear => (extent * t, extent),
            GridMap::Exponential { rate } => {
                let den = rate.exp_m1();
                (extent * (rate * t).exp_m1() / den, extent * rate * (rate * t).exp() / den)
            }
            GridMap::Clustered { strength } => {
                let w = 2.0 * core::f64::consts::PI * t;
                (extent * (t - strength * w.sin() / (2.0 * core::f64::consts::PI)), extent * (1.0 - strength * w.cos()))
            }
        }
    }
}

/// Resolution, extent, map and right boundary of a grid.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GridSpec {
    pub points: usize,
    pub extent: f64,
    pub map: GridMap,
    pub right: RightEnd,
}

impl GridSpec {
    /// Grid for a problem: full interval for finite domains, `extent` as a
    /// Dirichlet truncation for half-lines, where the exponential rate grows
    /// with `ln(extent / length scale)`. The extent may not exceed a
    /// finite domain.
    pub fn for_problem<P: RadialProblem + ?Sized>(problem: &P, points: usize, extent: f64) -> Result<Self> {
        let (extent, right) = match problem.domain() {
            ArclengthDomain::Finite { end, right } => {
                if extent > end * (1.0 + 1e-12) {
                    return Err(Error::Domain { x: extent, lo: 0.0, hi: end });
                }
                if extent < end * (1.0 - 1e-12) {
                    (extent, RightEnd::Dirichlet)
                } else {
                    (end, right)
                }
            }
            ArclengthDomain::HalfLine => (extent, RightEnd::Dirichlet),
        };
        // an exponential map keeps the nodes near the origin on the scale of
        // the states however far the truncation has to be pushed
        let map = match problem.preferred_map() {
            GridMap::Exponential { rate } => {
                let ratio = extent / problem.length_scale();
                GridMap::Exponential { rate: rate.max(ratio.ln() + 2.0) }
            }
            other => other,
        };
        Ok(GridSpec { points, extent, map, right })
    }

    /// Spacing in `t`. The Dirichlet cap is a ghost node one cell beyond the
    /// last node; a regular end is the last cell face, where the flux
    /// weight vanishes.
    pub fn spacing(&self) -> f64 {
        match self.right {
            RightEnd::Dirichlet => 1.0 / (self.points as f64 + 0.5),
            RightEnd::Regular => 1.0 / self.points as f64,
        }
    }
}

/// Cell-centred nodes with the chart data needed by the discretization.
#[derive(Clone, Debug, PartialEq)]
pub struct Grid {
    spec: GridSpec,
    h: f64,
    lambda: f64,
    v: Vec<f64>,
    jac: Vec<f64>,
    radius: Vec<f64>,
    /// Interfaces `j + ½`, `j = 0..=n`; entry 0 is the origin.
    v_face: Vec<f64>,
    jac_face: Vec<f64>,
}

impl Grid {
    pub fn new(spec: GridSpec, chart_lambda: f64) -> Result<Self> {
        if spec.points < 3 {
            return Err(Error::InvalidSpec(format!("a grid needs at least 3 points, got {}", spec.points)));
        }
        if !(spec.extent > 0.0 && spec.extent.is_finite()) {
            return Err(Error::InvalidSpec(format!("grid extent {} must be positive and finite", spec.extent)));
        }
        let h = spec.spacing();
        let g = Geometry::new(chart_lambda);
        let n = spec.points;
        let mut v = Vec::with_capacity(n);
        let mut jac = Vec::with_capacity(n);
        let mut radius = Vec::with_capacity(n);
        for j in 0..n {
            let t = (j as f64 + 0.5) * h;
            let (vj, dj) = spec.map.eval(t, spec.extent);
            v.push(vj);
            jac.push(dj);
            radius.push(g.radius(vj));
        }
        let mut v_face = Vec::with_capacity(n + 1);
        let mut jac_face = Vec::with_capacity(n + 1);
        for j in 0..=n {
            let (vf, df) = spec.map.eval(j as f64 * h, spec.extent);
            v_face.push(vf);
            jac_face.push(df);
        }
        if radius.iter().any(|&r| !(r > 0.0)) {
            return Err(Error::Domain { x: spec.extent, lo: 0.0, hi: spec.extent });
        }
        Ok(Grid { spec, h, lambda: chart_lambda, v, jac, radius, v_face, jac_face })
    }

    pub fn spec(&self) -> &GridSpec {
        &self.spec
    }

    pub fn h(&self) -> f64 {
        self.h
    }

    pub fn len(&self) -> usize {
        self.v.len()
    }

    pub fn is_empty(&self) -> bool {
        self.v.is_empty()
    }

    pub fn chart_lambda(&self) -> f64 {
        self.lambda
    }

    /// Geodesic distances of the nodes.
    pub fn arclength(&self) -> &[f64] {
        &self.v
    }

    /// `dv/dt` at the nodes.
    pub fn jacobian(&self) -> &[f64] {
        &self.jac
    }

    /// `r(v)` at the nodes.
    pub fn radius(&self) -> &[f64] {
        &self.radius
    }

    /// Signed deforming function at the nodes.
    pub fn deforming(&self) -> Vec<f64> {
        let g = Geometry::new(self.lambda);
        self.v.iter().map(|&v| g.deforming(v)).collect()
    }

    pub(crate) fn faces(&self) -> (&[f64], &[f64]) {
        (&self.v_face, &self.jac_face)
    }

    /// Grid-weighted `∫ u w dv ≈ Σ u_j w_j g'_j h`.
    pub fn inner(&self, u: &[f64], w: &[f64]) -> f64 {
        u.iter().zip(w).zip(&self.jac).map(|((a, b), j)| a * b * j).sum::<f64>() * self.h
    }
}
