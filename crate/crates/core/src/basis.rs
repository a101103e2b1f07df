//! W-Zernike functions on the unit disk.
//!
//! `W_{u,v}(r, phi) = sqrt((u+v+1)/pi) R_{u+v}^{|u-v|}(r) e^{i(u-v)phi}`, an
//! orthonormal basis of `L^2(D, r dr dphi)` indexed by the free quadrant
//! `(u, v)` instead of the parity-constrained `(n, m)` lattice.

use std::f64::consts::{PI, TAU};
use std::fmt;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::radial::{build_radial, RadialIndex, RadialPolynomial};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ModeIndex {
    pub u: u32,
    pub v: u32,
}

impl ModeIndex {
    pub const fn new(u: u32, v: u32) -> Self {
        Self { u, v }
    }

    /// Total degree `n = u + v`.
    pub fn degree(&self) -> u32 {
        self.u + self.v
    }

    /// Azimuthal order `m = u - v`.
    pub fn order(&self) -> i32 {
        self.u as i32 - self.v as i32
    }

    /// Position in the dense triangular layout: by degree, then by `u`.
    pub fn offset(&self) -> usize {
        let d = self.degree() as usize;
        d * (d + 1) / 2 + self.u as usize
    }

    pub fn conjugate(&self) -> Self {
        Self { u: self.v, v: self.u }
    }
}

impl fmt::Display for ModeIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.u, self.v)
    }
}

/// All modes with `u + v <= bandwidth`, in serialization order.
pub fn modes_up_to(bandwidth: usize) -> impl Iterator<Item = ModeIndex> {
    (0..=bandwidth as u32).flat_map(|d| (0..=d).map(move |u| ModeIndex::new(u, d - u)))
}

pub fn mode_count(bandwidth: usize) -> usize {
    (bandwidth + 1) * (bandwidth + 2) / 2
}

pub fn mode_to_radial(mode: ModeIndex) -> RadialIndex {
    RadialIndex::new(i64::from(mode.degree()), i64::from(mode.order()))
        .expect("(u+v, u-v) is always a valid radial index")
}

pub fn radial_to_mode(index: RadialIndex) -> ModeIndex {
    let n = index.n() as i32;
    let m = index.m();
    ModeIndex::new(((n + m) / 2) as u32, ((n - m) / 2) as u32)
}

/// A point of the closed unit disk with the angle normalized into `[0, 2pi)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DiskPoint {
    r: f64,
    phi: f64,
}

impl DiskPoint {
    pub fn new(r: f64, phi: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&r) {
            return Err(Error::Domain(format!("radius must lie in [0, 1], got {r}")));
        }
        if !phi.is_finite() {
            return Err(Error::Domain(format!("angle must be finite, got {phi}")));
        }
        let mut phi = phi.rem_euclid(TAU);
        if phi >= TAU {
            phi = 0.0;
        }
        Ok(Self { r, phi })
    }

    pub fn r(&self) -> f64 {
        self.r
    }

    pub fn phi(&self) -> f64 {
        self.phi
    }
}

/// `e^{i m phi}` computed so that the values for `m` and `-m` are exact conjugates.
pub(crate) fn angular(m: i32, phi: f64) -> Complex64 {
    let (s, c) = (f64::from(m.unsigned_abs()) * phi).sin_cos();
    Complex64::new(c, if m < 0 { -s } else { s })
}

pub fn w_bound(mode: ModeIndex) -> f64 {
    (f64::from(mode.degree() + 1) / PI).sqrt()
}

/// `W_{u,v}` evaluated with a prebuilt radial polynomial for `R_{u+v}^{|u-v|}`.
pub(crate) fn w_eval_with(poly: &RadialPolynomial, mode: ModeIndex, r: f64, phi: f64) -> Complex64 {
    angular(mode.order(), phi) * (w_bound(mode) * poly.eval_unchecked(r))
}

pub fn w_eval(mode: ModeIndex, p: DiskPoint) -> Result<Complex64> {
    let poly = build_radial(mode_to_radial(mode))?;
    Ok(w_eval_with(&poly, mode, p.r, p.phi))
}

/// Real Zernike function of the optics convention:
/// `R_n^{|m|}(r) cos(|m| phi)` for `m >= 0`, `R_n^{|m|}(r) sin(|m| phi)` for `m < 0`.
pub fn z_eval(index: RadialIndex, p: DiskPoint) -> Result<f64> {
    let poly = build_radial(index)?;
    let angle = f64::from(index.abs_m()) * p.phi;
    let trig = if index.m() >= 0 { angle.cos() } else { angle.sin() };
    Ok(poly.eval_unchecked(p.r) * trig)
}
