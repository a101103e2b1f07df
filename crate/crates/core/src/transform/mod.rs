//! Forward and inverse W-Zernike transforms between sampled functions on the
//! disk and coefficient fields.

mod coeff_file;
mod field;
mod quadrature;
mod raster;

pub use coeff_file::{parse_coeffs, read_coeffs, write_coeffs, COEFF_HEADER};
pub use field::CoeffField;
pub use quadrature::{build_quadrature, gauss_legendre, DiskQuadrature};
pub use raster::{polar_to_raster, raster_to_polar, render_magnitude, RasterImage};

use num_complex::Complex64;
use rayon::prelude::*;

use crate::basis::{angular, w_bound, DiskPoint, ModeIndex};
use crate::error::{Error, Result};
use crate::radial::{build_radial, RadialIndex, RadialPolynomial, MAX_DEGREE};

/// Radial polynomials `R_n^{|m|}` for every `n <= bandwidth`, grouped by degree.
/// `polys[n][j]` holds `|m| = n - 2j`, which serves the modes `(n-j, j)` and `(j, n-j)`.
#[derive(Debug, Clone)]
pub struct RadialTable {
    polys: Vec<Vec<RadialPolynomial>>,
}

impl RadialTable {
    pub fn new(bandwidth: usize) -> Result<Self> {
        if bandwidth > MAX_DEGREE as usize {
            return Err(Error::DegreeTooLarge {
                n: bandwidth as u32,
                max: MAX_DEGREE,
            });
        }
        let polys = (0..=bandwidth as i64)
            .map(|n| {
                (0..=n / 2)
                    .map(|j| build_radial(RadialIndex::new(n, n - 2 * j).expect("valid by construction")))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { polys })
    }

    pub fn bandwidth(&self) -> usize {
        self.polys.len() - 1
    }

    pub fn get(&self, mode: ModeIndex) -> &RadialPolynomial {
        &self.polys[mode.degree() as usize][mode.u.min(mode.v) as usize]
    }

    /// `sum f_{u,v} W_{u,v}(r, phi)`, sharing each radial value between `m` and `-m`.
    fn synthesize_at(&self, coeffs: &CoeffField, r: f64, phi: f64) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for (n, row) in self.polys.iter().enumerate().take(coeffs.bandwidth() + 1) {
            let scale = (n as f64 + 1.0).sqrt() / std::f64::consts::PI.sqrt();
            for (j, poly) in row.iter().enumerate() {
                let radial = scale * poly.eval_unchecked(r);
                let hi = ModeIndex::new((n - j) as u32, j as u32);
                acc += coeffs.get(hi) * angular(hi.order(), phi) * radial;
                if hi.u != hi.v {
                    let lo = hi.conjugate();
                    acc += coeffs.get(lo) * angular(lo.order(), phi) * radial;
                }
            }
        }
        acc
    }
}

/// Function values on the nodes of a [`DiskQuadrature`], radius-major.
#[derive(Debug, Clone, PartialEq)]
pub struct PolarSamples {
    n_r: usize,
    n_phi: usize,
    values: Vec<Complex64>,
}

impl PolarSamples {
    pub fn new(n_r: usize, n_phi: usize, values: Vec<Complex64>) -> Result<Self> {
        if values.len() != n_r * n_phi {
            return Err(Error::ShapeMismatch {
                expected: format!("{} values", n_r * n_phi),
                got: format!("{}", values.len()),
            });
        }
        Ok(Self { n_r, n_phi, values })
    }

    pub fn zeros_for(q: &DiskQuadrature) -> Self {
        Self {
            n_r: q.n_r(),
            n_phi: q.n_phi(),
            values: vec![Complex64::new(0.0, 0.0); q.n_r() * q.n_phi()],
        }
    }

    /// Samples `f(r, phi)` at every node of `q`.
    pub fn from_fn(q: &DiskQuadrature, f: impl Fn(f64, f64) -> Complex64) -> Self {
        let values = q.nodes().map(|(r, phi)| f(r, phi)).collect();
        Self {
            n_r: q.n_r(),
            n_phi: q.n_phi(),
            values,
        }
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.n_r, self.n_phi)
    }

    pub fn values(&self) -> &[Complex64] {
        &self.values
    }

    pub fn get(&self, j: usize, k: usize) -> Complex64 {
        self.values[j * self.n_phi + k]
    }

    pub fn map(&self, f: impl Fn(Complex64) -> Complex64) -> Self {
        Self {
            n_r: self.n_r,
            n_phi: self.n_phi,
            values: self.values.iter().map(|&c| f(c)).collect(),
        }
    }

    pub fn check_shape(&self, q: &DiskQuadrature) -> Result<()> {
        if self.shape() != (q.n_r(), q.n_phi()) {
            return Err(Error::ShapeMismatch {
                expected: format!("{}x{}", q.n_r(), q.n_phi()),
                got: format!("{}x{}", self.n_r, self.n_phi),
            });
        }
        Ok(())
    }
}

/// Projects samples onto the modes with `u + v <= bandwidth`:
/// `f_{u,v} = sum_{j,k} w_j (2pi/M) conj(W_{u,v}(r_j, phi_k)) s_{jk}`.
pub fn analyze(samples: &PolarSamples, q: &DiskQuadrature, bandwidth: usize) -> Result<CoeffField> {
    samples.check_shape(q)?;
    if bandwidth > q.bandwidth() {
        return Err(Error::BandwidthExceeded {
            requested: bandwidth,
            limit: q.bandwidth(),
        });
    }
    let table = RadialTable::new(bandwidth)?;
    let n = bandwidth as i32;
    let dphi = q.angular_weight();
    // Angular projections F_j(m) = (2pi/M) sum_k s_jk e^{-i m phi_k}, m = -N..=N.
    let projections: Vec<Vec<Complex64>> = (0..q.n_r())
        .map(|j| {
            (-n..=n)
                .map(|m| {
                    (0..q.n_phi())
                        .map(|k| samples.get(j, k) * angular(-m, q.angle(k)))
                        .sum::<Complex64>()
                        * dphi
                })
                .collect()
        })
        .collect();
    let mut out = CoeffField::zeros(bandwidth);
    for (mode, _) in CoeffField::zeros(bandwidth).iter() {
        let poly = table.get(mode);
        let m_slot = (mode.order() + n) as usize;
        let value: Complex64 = q
            .radii()
            .iter()
            .zip(q.radial_weights())
            .zip(&projections)
            .map(|((&r, &w), proj)| proj[m_slot] * (w * poly.eval_unchecked(r)))
            .sum();
        out.set(mode, value * w_bound(mode));
    }
    Ok(out)
}

/// Evaluates `sum f_{u,v} W_{u,v}` at each point.
pub fn synthesize(coeffs: &CoeffField, points: &[DiskPoint]) -> Result<Vec<Complex64>> {
    let table = RadialTable::new(coeffs.bandwidth())?;
    Ok(points
        .par_iter()
        .map(|p| table.synthesize_at(coeffs, p.r(), p.phi()))
        .collect())
}

/// Synthesis at raw `(r, phi)` pairs with `0 <= r <= 1` assumed by the caller.
pub(crate) fn synthesize_raw(coeffs: &CoeffField, points: &[(f64, f64)]) -> Result<Vec<Complex64>> {
    let table = RadialTable::new(coeffs.bandwidth())?;
    Ok(points
        .par_iter()
        .map(|&(r, phi)| table.synthesize_at(coeffs, r, phi))
        .collect())
}

/// Synthesizes a field on the nodes of `q`.
pub fn synthesize_on_grid(coeffs: &CoeffField, q: &DiskQuadrature) -> Result<PolarSamples> {
    let nodes: Vec<(f64, f64)> = q.nodes().collect();
    PolarSamples::new(q.n_r(), q.n_phi(), synthesize_raw(coeffs, &nodes)?)
}

/// Quadrature value of `int conj(a) b r dr dphi`.
pub fn inner_product(a: &PolarSamples, b: &PolarSamples, q: &DiskQuadrature) -> Result<Complex64> {
    a.check_shape(q)?;
    b.check_shape(q)?;
    let dphi = q.angular_weight();
    let mut acc = Complex64::new(0.0, 0.0);
    for (j, &w) in q.radial_weights().iter().enumerate() {
        let row: Complex64 = (0..q.n_phi()).map(|k| a.get(j, k).conj() * b.get(j, k)).sum();
        acc += row * (w * dphi);
    }
    Ok(acc)
}

/// `| ||synthesize(f)||^2_quadrature - sum |f_{u,v}|^2 |`.
pub fn parseval_gap(coeffs: &CoeffField, q: &DiskQuadrature) -> Result<f64> {
    if coeffs.bandwidth() > q.bandwidth() {
        return Err(Error::BandwidthExceeded {
            requested: coeffs.bandwidth(),
            limit: q.bandwidth(),
        });
    }
    let s = synthesize_on_grid(coeffs, q)?;
    let spatial = inner_product(&s, &s, q)?.re;
    Ok((spatial - coeffs.l2_norm().powi(2)).abs())
}
