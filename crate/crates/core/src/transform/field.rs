use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;
use rand::Rng;
use rand_distr::{Distribution, StandardNormal};

use crate::basis::{mode_count, modes_up_to, ModeIndex};

/// Finitely supported coefficients `f_{u,v}` over modes with `u + v <= bandwidth`,
/// stored densely in the triangular layout of [`ModeIndex::offset`].
#[derive(Debug, Clone, PartialEq)]
pub struct CoeffField {
    bandwidth: usize,
    values: Vec<Complex64>,
}

impl CoeffField {
    pub fn zeros(bandwidth: usize) -> Self {
        Self {
            bandwidth,
            values: vec![Complex64::new(0.0, 0.0); mode_count(bandwidth)],
        }
    }

    /// A single basis mode with coefficient 1; bandwidth is the mode's degree.
    pub fn unit(mode: ModeIndex) -> Self {
        let mut f = Self::zeros(mode.degree() as usize);
        f.set(mode, Complex64::new(1.0, 0.0));
        f
    }

    pub fn from_modes(bandwidth: usize, entries: impl IntoIterator<Item = (ModeIndex, Complex64)>) -> Self {
        let mut f = Self::zeros(bandwidth);
        for (mode, c) in entries {
            f.set(mode, c);
        }
        f
    }

    /// Entries drawn from a standard complex Gaussian (real and imaginary parts
    /// independent N(0, 1)).
    pub fn random_gaussian<R: Rng + ?Sized>(bandwidth: usize, rng: &mut R) -> Self {
        let values = (0..mode_count(bandwidth))
            .map(|_| {
                let re: f64 = StandardNormal.sample(rng);
                let im: f64 = StandardNormal.sample(rng);
                Complex64::new(re, im)
            })
            .collect();
        Self { bandwidth, values }
    }

    /// Gaussian integers with parts uniform in `-range..=range`.
    pub fn random_integer<R: Rng + ?Sized>(bandwidth: usize, range: i32, rng: &mut R) -> Self {
        let values = (0..mode_count(bandwidth))
            .map(|_| {
                Complex64::new(
                    f64::from(rng.random_range(-range..=range)),
                    f64::from(rng.random_range(-range..=range)),
                )
            })
            .collect();
        Self { bandwidth, values }
    }

    pub fn bandwidth(&self) -> usize {
        self.bandwidth
    }

    pub fn values(&self) -> &[Complex64] {
        &self.values
    }

    pub fn contains(&self, mode: ModeIndex) -> bool {
        mode.degree() as usize <= self.bandwidth
    }

    /// Coefficient of `mode`, zero outside the stored support.
    pub fn get(&self, mode: ModeIndex) -> Complex64 {
        if self.contains(mode) {
            self.values[mode.offset()]
        } else {
            Complex64::new(0.0, 0.0)
        }
    }

    /// Panics if `mode` lies outside the bandwidth.
    pub fn set(&mut self, mode: ModeIndex, c: Complex64) {
        assert!(self.contains(mode), "mode {mode} outside bandwidth {}", self.bandwidth);
        self.values[mode.offset()] = c;
    }

    pub(crate) fn add_at(&mut self, mode: ModeIndex, c: Complex64) {
        self.values[mode.offset()] += c;
    }

    pub fn iter(&self) -> impl Iterator<Item = (ModeIndex, Complex64)> + '_ {
        modes_up_to(self.bandwidth).zip(self.values.iter().copied())
    }

    /// Same coefficients at a larger bandwidth. Never truncates.
    pub fn padded(&self, bandwidth: usize) -> Self {
        assert!(bandwidth >= self.bandwidth, "padding cannot shrink a field");
        let mut values = self.values.clone();
        values.resize(mode_count(bandwidth), Complex64::new(0.0, 0.0));
        Self { bandwidth, values }
    }

    /// Drops trailing degrees whose coefficients are all exactly zero.
    pub fn trimmed(&self) -> Self {
        let mut bw = self.bandwidth;
        while bw > 0
            && self.values[mode_count(bw - 1)..mode_count(bw)]
                .iter()
                .all(|c| c.norm_sqr() == 0.0)
        {
            bw -= 1;
        }
        Self {
            bandwidth: bw,
            values: self.values[..mode_count(bw)].to_vec(),
        }
    }

    pub fn scale(&self, c: Complex64) -> Self {
        Self {
            bandwidth: self.bandwidth,
            values: self.values.iter().map(|x| x * c).collect(),
        }
    }

    pub fn map(&self, mut f: impl FnMut(ModeIndex, Complex64) -> Complex64) -> Self {
        let values = self.iter().map(|(m, c)| f(m, c)).collect();
        Self {
            bandwidth: self.bandwidth,
            values,
        }
    }

    pub fn l2_norm(&self) -> f64 {
        self.values.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt()
    }

    /// `sum conj(self) * other` over the common support.
    pub fn dot(&self, other: &CoeffField) -> Complex64 {
        self.values.iter().zip(&other.values).map(|(a, b)| a.conj() * b).sum()
    }

    /// Largest entrywise modulus of the difference, padding the smaller field.
    pub fn max_abs_diff(&self, other: &CoeffField) -> f64 {
        let bw = self.bandwidth.max(other.bandwidth);
        let a = self.padded(bw);
        let b = other.padded(bw);
        a.values
            .iter()
            .zip(&b.values)
            .map(|(x, y)| (x - y).norm())
            .fold(0.0, f64::max)
    }

    pub fn max_abs(&self) -> f64 {
        self.values.iter().map(|c| c.norm()).fold(0.0, f64::max)
    }

    /// `max |f_{u,v} - conj(f_{v,u})|`; zero for fields of real functions.
    pub fn hermitian_defect(&self) -> f64 {
        self.iter()
            .map(|(m, c)| (c - self.get(m.conjugate()).conj()).norm())
            .fold(0.0, f64::max)
    }

    /// Coefficients of `Re W_{u,v}`, i.e. `(W_{u,v} + W_{v,u}) / 2`.
    pub fn real_part_of(mode: ModeIndex) -> Self {
        let mut f = Self::zeros(mode.degree() as usize);
        f.add_at(mode, Complex64::new(0.5, 0.0));
        f.add_at(mode.conjugate(), Complex64::new(0.5, 0.0));
        f
    }

    /// Coefficients of `Im W_{u,v}`, i.e. `(W_{u,v} - W_{v,u}) / 2i`.
    pub fn imag_part_of(mode: ModeIndex) -> Self {
        let mut f = Self::zeros(mode.degree() as usize);
        f.add_at(mode, Complex64::new(0.0, -0.5));
        f.add_at(mode.conjugate(), Complex64::new(0.0, 0.5));
        f
    }

    fn zip_with(&self, other: &CoeffField, op: impl Fn(Complex64, Complex64) -> Complex64) -> Self {
        let bw = self.bandwidth.max(other.bandwidth);
        let a = self.padded(bw);
        let b = other.padded(bw);
        let values = a.values.iter().zip(&b.values).map(|(x, y)| op(*x, *y)).collect();
        Self { bandwidth: bw, values }
    }
}

impl Add for &CoeffField {
    type Output = CoeffField;
    fn add(self, rhs: &CoeffField) -> CoeffField {
        self.zip_with(rhs, |a, b| a + b)
    }
}

impl Sub for &CoeffField {
    type Output = CoeffField;
    fn sub(self, rhs: &CoeffField) -> CoeffField {
        self.zip_with(rhs, |a, b| a - b)
    }
}

impl Mul<f64> for &CoeffField {
    type Output = CoeffField;
    fn mul(self, rhs: f64) -> CoeffField {
        self.scale(Complex64::new(rhs, 0.0))
    }
}

impl Neg for &CoeffField {
    type Output = CoeffField;
    fn neg(self) -> CoeffField {
        self.scale(Complex64::new(-1.0, 0.0))
    }
}
