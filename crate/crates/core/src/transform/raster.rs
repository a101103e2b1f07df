//! Resampling between pixel rasters and the disk.
//!
//! The largest disk inscribed in the raster maps onto the unit disk: centre at
//! `(width/2, height/2)` in continuous pixel coordinates, radius
//! `min(width, height)/2`, `phi` measured counter-clockwise from the +x axis with
//! rows running downwards. Pixel `(i, j)` covers `[i, i+1) x [j, j+1)`.

use num_complex::Complex64;

use super::{synthesize_raw, CoeffField, DiskQuadrature, PolarSamples};
use crate::error::{Error, Result};

/// Grayscale raster, row-major from the top row.
#[derive(Debug, Clone, PartialEq)]
pub struct RasterImage {
    width: usize,
    height: usize,
    data: Vec<f64>,
}

impl RasterImage {
    pub fn new(width: usize, height: usize, data: Vec<f64>) -> Result<Self> {
        if width == 0 || height == 0 {
            return Err(Error::Image("raster must be at least 1x1".into()));
        }
        if data.len() != width * height {
            return Err(Error::ShapeMismatch {
                expected: format!("{} pixels", width * height),
                got: format!("{}", data.len()),
            });
        }
        if let Some(bad) = data.iter().find(|x| !x.is_finite()) {
            return Err(Error::Image(format!("non-finite intensity {bad}")));
        }
        Ok(Self { width, height, data })
    }

    pub fn from_fn(width: usize, height: usize, f: impl Fn(usize, usize) -> f64) -> Result<Self> {
        let data = (0..height)
            .flat_map(|y| (0..width).map(move |x| (x, y)))
            .map(|(x, y)| f(x, y))
            .collect();
        Self::new(width, height, data)
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn data(&self) -> &[f64] {
        &self.data
    }

    pub fn pixel(&self, x: usize, y: usize) -> f64 {
        self.data[y * self.width + x]
    }

    pub fn max_value(&self) -> f64 {
        self.data.iter().copied().fold(0.0, f64::max)
    }

    fn center_and_radius(&self) -> (f64, f64, f64) {
        (
            self.width as f64 / 2.0,
            self.height as f64 / 2.0,
            self.width.min(self.height) as f64 / 2.0,
        )
    }

    /// Disk coordinates `(r, phi)` of a pixel centre, or `None` outside the disk.
    pub fn pixel_to_disk(&self, x: usize, y: usize) -> Option<(f64, f64)> {
        disk_coords(self.width, self.height, x, y)
    }

    /// Bilinear interpolation at continuous coordinates, pixel centres at half-integers.
    pub fn bilinear(&self, x: f64, y: f64) -> f64 {
        let fx = (x - 0.5).clamp(0.0, (self.width - 1) as f64);
        let fy = (y - 0.5).clamp(0.0, (self.height - 1) as f64);
        let x0 = fx.floor() as usize;
        let y0 = fy.floor() as usize;
        let x1 = (x0 + 1).min(self.width - 1);
        let y1 = (y0 + 1).min(self.height - 1);
        let tx = fx - x0 as f64;
        let ty = fy - y0 as f64;
        let top = self.pixel(x0, y0) * (1.0 - tx) + self.pixel(x1, y0) * tx;
        let bottom = self.pixel(x0, y1) * (1.0 - tx) + self.pixel(x1, y1) * tx;
        top * (1.0 - ty) + bottom * ty
    }
}

fn disk_coords(width: usize, height: usize, x: usize, y: usize) -> Option<(f64, f64)> {
    let radius = width.min(height) as f64 / 2.0;
    let dx = (x as f64 + 0.5 - width as f64 / 2.0) / radius;
    let dy = (height as f64 / 2.0 - (y as f64 + 0.5)) / radius;
    let r = dx.hypot(dy);
    if r > 1.0 {
        None
    } else {
        Some((r, dy.atan2(dx).rem_euclid(std::f64::consts::TAU)))
    }
}

/// Samples the raster at every quadrature node by bilinear interpolation.
pub fn raster_to_polar(img: &RasterImage, q: &DiskQuadrature) -> Result<PolarSamples> {
    let (cx, cy, radius) = img.center_and_radius();
    let values = q
        .nodes()
        .map(|(r, phi)| {
            let x = cx + radius * r * phi.cos();
            let y = cy - radius * r * phi.sin();
            Complex64::new(img.bilinear(x, y), 0.0)
        })
        .collect();
    PolarSamples::new(q.n_r(), q.n_phi(), values)
}

/// `|sum f_{u,v} W_{u,v}|` at each pixel centre inside the disk, zero outside.
pub fn render_magnitude(coeffs: &CoeffField, width: usize, height: usize) -> Result<RasterImage> {
    if width == 0 || height == 0 {
        return Err(Error::Image("raster must be at least 1x1".into()));
    }
    let mut inside = Vec::new();
    let mut points = Vec::new();
    for y in 0..height {
        for x in 0..width {
            if let Some(p) = disk_coords(width, height, x, y) {
                inside.push(y * width + x);
                points.push(p);
            }
        }
    }
    let values = synthesize_raw(coeffs, &points)?;
    let mut data = vec![0.0; width * height];
    for (slot, v) in inside.into_iter().zip(values) {
        data[slot] = v.norm();
    }
    RasterImage::new(width, height, data)
}

/// [`render_magnitude`] rescaled so the brightest pixel is 1; an all-zero
/// field stays zero.
pub fn polar_to_raster(coeffs: &CoeffField, width: usize, height: usize) -> Result<RasterImage> {
    let mut img = render_magnitude(coeffs, width, height)?;
    let peak = img.max_value();
    if peak > 0.0 {
        img.data.iter_mut().for_each(|x| *x /= peak);
    }
    Ok(img)
}
