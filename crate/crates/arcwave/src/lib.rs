//! Spectral boundary-integral solver for time-harmonic scattering by
//! multiple disjoint open arcs in 2D (Helmholtz and elastic), plus a
//! verification harness for parametric shape-holomorphy diagnostics:
//! Chebyshev coefficient-decay fits, complex-step derivative checks, and
//! explicit admissibility radii for complexified geometries.

pub mod cheb;
pub mod error;
pub mod geometry;
pub mod kernels;
pub mod spectral;

pub use error::{Error, Result};
