//! Zernike analysis on the unit disk.
//!
//! Exact radial polynomials, the complex W-basis, a quadrature-exact disk
//! transform, the ladder algebra acting on coefficient fields, and the
//! norm inequalities that govern those operators.

pub mod algebra;
pub mod basis;
pub mod cli;
mod dd;
pub mod error;
pub mod pgm;
pub mod radial;
pub mod rhs;
pub mod transform;
pub mod verify;

pub use basis::{w_eval, z_eval, DiskPoint, ModeIndex};
pub use error::{Error, Result};
pub use radial::{build_radial, radial_eval, RadialIndex, RadialPolynomial};
pub use transform::{analyze, synthesize, CoeffField, DiskQuadrature, PolarSamples, RasterImage};
