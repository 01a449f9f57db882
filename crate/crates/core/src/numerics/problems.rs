use core::f64::consts::{FRAC_PI_2, PI};

use super::{ArclengthDomain, RadialProblem, RightEnd};
use crate::error::Result;
use crate::model::{SystemKind, SystemSpec};
use crate::pct::{FlatFamily, FlatPotentialSpec};

impl RadialProblem for SystemSpec {
    fn chart_lambda(&self) -> f64 {
        self.lambda
    }

    fn centrifugal(&self) -> f64 {
        self.a()
    }

    fn regular_potential(&self, v: f64) -> Result<f64> {
        let g = self.geometry();
        Ok(self.regular_potential_at_radius(g.radius(v), g.deforming(v)))
    }

    /// On the sphere the oscillator is confined to the hemisphere by its
    /// potential wall; the Kepler–Coulomb problem lives on the whole
    /// geodesic up to the antipode.
    fn domain(&self) -> ArclengthDomain {
        if self.lambda >= 0.0 {
            return ArclengthDomain::HalfLine;
        }
        let s = self.sqrt_abs_lambda();
        match self.kind {
            SystemKind::Oscillator => ArclengthDomain::Finite { end: FRAC_PI_2 / s, right: RightEnd::Dirichlet },
            SystemKind::Coulomb => ArclengthDomain::Finite { end: PI / s, right: RightEnd::Regular },
        }
    }

    fn length_scale(&self) -> f64 {
        SystemSpec::length_scale(self)
    }
}

/// A flat target potential in its variable `u`, treated on the unit sphere
/// (trigonometric families) or the unit hyperboloid chart (hyperbolic ones)
/// so that `u` plays the role of the geodesic distance.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct FlatProblem {
    pub potential: FlatPotentialSpec,
}

impl FlatProblem {
    pub fn new(potential: FlatPotentialSpec) -> Self {
        FlatProblem { potential }
    }
}

impl RadialProblem for FlatProblem {
    fn chart_lambda(&self) -> f64 {
        if self.potential.family.is_trigonometric() {
            -1.0
        } else {
            1.0
        }
    }

    fn centrifugal(&self) -> f64 {
        self.potential.a
    }

    /// `A(A−1)/sin²u = A(A−1)/r²` on the chart, so the regular part is the
    /// potential minus its barrier.
    fn regular_potential(&self, u: f64) -> Result<f64> {
        Ok(self.potential.regular_part(u))
    }

    fn domain(&self) -> ArclengthDomain {
        match self.potential.family {
            FlatFamily::PoschlTellerI => ArclengthDomain::Finite { end: FRAC_PI_2, right: RightEnd::Dirichlet },
            FlatFamily::RosenMorseI => ArclengthDomain::Finite { end: PI, right: RightEnd::Regular },
            FlatFamily::PoschlTellerII | FlatFamily::Eckart => ArclengthDomain::HalfLine,
        }
    }

    fn length_scale(&self) -> f64 {
        1.0
    }
}

/// A problem given by a closure for the regular part of the potential as a
/// function of geodesic distance.
pub struct FnProblem<F: Fn(f64) -> Result<f64>> {
    pub chart_lambda: f64,
    pub centrifugal: f64,
    pub domain: ArclengthDomain,
    pub length_scale: f64,
    pub regular: F,
}

impl<F: Fn(f64) -> Result<f64>> FnProblem<F> {
    pub fn new(chart_lambda: f64, centrifugal: f64, domain: ArclengthDomain, length_scale: f64, regular: F) -> Self {
        FnProblem { chart_lambda, centrifugal, domain, length_scale, regular }
    }
}

impl<F: Fn(f64) -> Result<f64>> RadialProblem for FnProblem<F> {
    fn chart_lambda(&self) -> f64 {
        self.chart_lambda
    }

    fn centrifugal(&self) -> f64 {
        self.centrifugal
    }

    fn regular_potential(&self, v: f64) -> Result<f64> {
        (self.regular)(v)
    }

    fn domain(&self) -> ArclengthDomain {
        self.domain
    }

    fn length_scale(&self) -> f64 {
        self.length_scale
    }
}
