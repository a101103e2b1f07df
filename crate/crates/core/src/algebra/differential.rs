//! Finite-difference checks of the differential realization of the ladder
//! operators on `L^2(D)`:
//!
//! ```text
//! A± = e^{±i phi}/2 [ ∓(1-r^2) d/dr + r(U+V+1±1) + (U-V)/r ] sqrt((U+V+1±1)/(U+V+1))
//! B± = e^{∓i phi}/2 [ ∓(1-r^2) d/dr + r(U+V+1±1) - (U-V)/r ] sqrt((U+V+1±1)/(U+V+1))
//! ```
//!
//! `U`, `V` and the square-root factor act diagonally, so on `W_{u,v}` they are
//! replaced by the mode's eigenvalues.

use num_complex::Complex64;

use super::Generator;
use crate::basis::{angular, mode_to_radial, w_eval_with, DiskPoint, ModeIndex};
use crate::error::{Error, Result};
use crate::radial::{build_radial, central_differences, check_interior};

fn derivatives(mode: ModeIndex, p: DiskPoint, h: f64) -> Result<(Complex64, Complex64, Complex64)> {
    check_interior(p.r(), h)?;
    let poly = build_radial(mode_to_radial(mode))?;
    let w = |r: f64| w_eval_with(&poly, mode, r, p.phi());
    let (re1, re2) = central_differences(|r| w(r).re, p.r(), h);
    let (im1, im2) = central_differences(|r| w(r).im, p.r(), h);
    Ok((w(p.r()), Complex64::new(re1, im1), Complex64::new(re2, im2)))
}

/// `|D W_{u,v}(p) - k W_{u',v'}(p)|` where `D` is the differential form of a
/// ladder generator and `k W_{u',v'}` its algebraic action.
pub fn ladder_differential_residual(which: Generator, mode: ModeIndex, p: DiskPoint, h: f64) -> Result<f64> {
    let (sign, a_family) = match which {
        Generator::APlus => (1.0, true),
        Generator::AMinus => (-1.0, true),
        Generator::BPlus => (1.0, false),
        Generator::BMinus => (-1.0, false),
        other => return Err(Error::Domain(format!("{other} has no first-order differential form"))),
    };
    let (w, dw, _) = derivatives(mode, p, h)?;
    let r = p.r();
    let n = f64::from(mode.degree());
    let m = f64::from(mode.order());
    let m_term = if a_family { m / r } else { -m / r };
    let bracket = dw * (-sign * (1.0 - r * r)) + w * (r * (n + 1.0 + sign) + m_term);
    let phase_order = if a_family == (sign > 0.0) { 1 } else { -1 };
    let root = ((n + 1.0 + sign) / (n + 1.0)).sqrt();
    let lhs = angular(phase_order, p.phi()) * bracket * (0.5 * root);

    let algebraic = crate::transform::CoeffField::unit(mode);
    let image = super::apply_generator(which, &algebraic)?;
    let rhs = match image.iter().find(|(_, c)| c.norm() != 0.0) {
        Some((target, k)) => {
            let poly = build_radial(mode_to_radial(target))?;
            k * w_eval_with(&poly, target, r, p.phi())
        }
        None => Complex64::new(0.0, 0.0),
    };
    Ok((lhs - rhs).norm())
}

/// Residual of the per-mode second-order identity
/// `W'' = [(3r - 1/r) W' - n(n+2) W + m^2/r^2 W] / (1 - r^2)`.
pub fn ode_mode_residual(mode: ModeIndex, p: DiskPoint, h: f64) -> Result<f64> {
    let (w, dw, d2w) = derivatives(mode, p, h)?;
    let r = p.r();
    let n = f64::from(mode.degree());
    let m2 = f64::from(mode.order()).powi(2);
    let rhs = (dw * (3.0 * r - 1.0 / r) - w * (n * (n + 2.0)) + w * (m2 / (r * r))) / (1.0 - r * r);
    Ok((d2w - rhs).norm())
}
