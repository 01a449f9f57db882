//! Quantum oscillator and Kepler–Coulomb problems in d-dimensional
//! constant-curvature spaces.
//!
//! The crate covers, for both potentials:
//!
//! * closed-form bound-state spectra and wavefunctions of the deformed
//!   Schrödinger operator `−√f d/dr f d/dr √f + V` with `f = √(1+λr²)`
//!   ([`model`]);
//! * the deformed supersymmetric factorization, superpotentials and
//!   shape-invariance hierarchies ([`dsusy`]);
//! * the point canonical transformation onto the Pöschl–Teller I/II,
//!   Rosen–Morse I and Eckart potentials ([`pct`]);
//! * type I/II/III rational extensions of the oscillator on the sphere and
//!   of the Kepler–Coulomb problem on the hyperbolic space ([`rational`]);
//! * the flat-space (λ → 0) extended systems and convergence studies
//!   ([`limits`]);
//! * an independent numerical oracle: a symmetric finite-difference
//!   discretization, a tridiagonal eigensolver, discrete ladder operators and
//!   Gauss–Legendre quadrature ([`numerics`]).
//!
//! Units are `ħ = 2m = 1`. The crate is `no_std` and needs only `alloc`.

#![no_std]

extern crate alloc;

pub mod dsusy;
pub mod error;
pub mod limits;
pub mod model;
pub mod numerics;
pub mod pct;
pub mod rational;
pub mod specfun;

pub use error::{Error, Result};
pub use model::{SpectrumEntry, SystemKind, SystemSpec};
