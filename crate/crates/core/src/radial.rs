//! Zernike radial polynomials `R_n^m` on `[-1, 1]`.
//!
//! Coefficients are generated exactly as integers and evaluated by Horner's
//! scheme in `t = r^2` using double-double arithmetic. The coefficients of
//! high-degree radial polynomials alternate in sign and grow like `5.8^(n/2)`,
//! so plain `f64` Horner loses every significant digit near `r = 1` once
//! `n` passes about 30. A Jacobi three-term recurrence provides an
//! independent evaluation path used as an oracle.

use std::fmt;
use std::sync::OnceLock;

use crate::dd::DoubleDouble;
use crate::error::{Error, Result};

/// Largest radial degree accepted anywhere in the crate.
pub const MAX_DEGREE: u32 = 60;

/// A valid `(n, m)` pair: `|m| <= n` and `n - |m|` even.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RadialIndex {
    n: u32,
    m: i32,
}

impl RadialIndex {
    pub fn new(n: i64, m: i64) -> Result<Self> {
        if n < 0 {
            return Err(Error::InvalidIndex {
                n,
                m,
                reason: "degree n must be non-negative",
            });
        }
        if m.abs() > n {
            return Err(Error::InvalidIndex {
                n,
                m,
                reason: "bound violation: |m| must not exceed n",
            });
        }
        if (n - m.abs()) % 2 != 0 {
            return Err(Error::InvalidIndex {
                n,
                m,
                reason: "parity violation: n and m must have the same parity",
            });
        }
        if n > i64::from(u32::MAX) {
            return Err(Error::DegreeTooLarge {
                n: u32::MAX,
                max: MAX_DEGREE,
            });
        }
        Ok(Self {
            n: n as u32,
            m: m as i32,
        })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn m(&self) -> i32 {
        self.m
    }

    pub fn abs_m(&self) -> u32 {
        self.m.unsigned_abs()
    }

    /// `(n - |m|) / 2`, the degree of the polynomial in `t = r^2`.
    pub fn half_gap(&self) -> u32 {
        (self.n - self.abs_m()) / 2
    }
}

impl fmt::Display for RadialIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "R_{}^{}", self.n, self.m)
    }
}

fn pascal() -> &'static Vec<Vec<i128>> {
    static TABLE: OnceLock<Vec<Vec<i128>>> = OnceLock::new();
    TABLE.get_or_init(|| {
        let size = (MAX_DEGREE + 2) as usize;
        let mut rows: Vec<Vec<i128>> = Vec::with_capacity(size);
        for n in 0..size {
            let mut row = vec![1i128; n + 1];
            for k in 1..n {
                row[k] = rows[n - 1][k - 1] + rows[n - 1][k];
            }
            rows.push(row);
        }
        rows
    })
}

fn binomial(n: u32, k: u32) -> i128 {
    if k > n {
        0
    } else {
        pascal()[n as usize][k as usize]
    }
}

/// A radial polynomial stored as exact integer coefficients.
#[derive(Debug, Clone, PartialEq)]
pub struct RadialPolynomial {
    index: RadialIndex,
    /// `coeffs[k]` multiplies `r^(n - 2k)`, `k = 0..=(n-|m|)/2`.
    coeffs: Vec<i128>,
    /// Same coefficients split into double-double, ordered for Horner in `t`.
    horner: Vec<DoubleDouble>,
}

impl RadialPolynomial {
    pub fn index(&self) -> RadialIndex {
        self.index
    }

    pub fn coefficients(&self) -> &[i128] {
        &self.coeffs
    }

    /// `(coefficient, exponent)` pairs from the leading term down.
    pub fn terms(&self) -> impl Iterator<Item = (i128, u32)> + '_ {
        let n = self.index.n;
        self.coeffs.iter().enumerate().map(move |(k, &c)| (c, n - 2 * k as u32))
    }

    /// Sum of the coefficients, i.e. the exact value at `r = 1`.
    pub fn value_at_one(&self) -> i128 {
        self.coeffs.iter().sum()
    }

    /// Evaluates without the domain check. Parity in `r` is exact because
    /// only `r^2` and `r^|m|` enter.
    pub fn eval_unchecked(&self, r: f64) -> f64 {
        let t = DoubleDouble::square(r);
        let mut acc = DoubleDouble::ZERO;
        for &c in &self.horner {
            acc = acc.mul(t).add(c);
        }
        acc.to_f64() * r.powi(self.index.abs_m() as i32)
    }

    pub fn eval(&self, r: f64) -> Result<f64> {
        check_unit_interval(r)?;
        Ok(self.eval_unchecked(r))
    }
}

fn check_unit_interval(r: f64) -> Result<()> {
    if !(-1.0..=1.0).contains(&r) {
        return Err(Error::Domain(format!("|r| must be at most 1, got {r}")));
    }
    Ok(())
}

/// Builds `R_n^m` from the explicit finite-sum formula.
pub fn build_radial(index: RadialIndex) -> Result<RadialPolynomial> {
    let n = index.n;
    if n > MAX_DEGREE {
        return Err(Error::DegreeTooLarge { n, max: MAX_DEGREE });
    }
    let v = index.half_gap();
    let coeffs: Vec<i128> = (0..=v)
        .map(|k| {
            let sign = if k % 2 == 0 { 1 } else { -1 };
            sign * binomial(n - k, k) * binomial(n - 2 * k, v - k)
        })
        .collect();
    let horner = coeffs.iter().map(|&c| DoubleDouble::from_i128(c)).collect();
    Ok(RadialPolynomial { index, coeffs, horner })
}

pub fn radial_eval(poly: &RadialPolynomial, r: f64) -> Result<f64> {
    poly.eval(r)
}

/// Jacobi polynomial `P_k^{(alpha, 0)}(x)` by the forward three-term recurrence.
pub fn jacobi_p(k: u32, alpha: f64, x: f64) -> f64 {
    let beta = 0.0;
    if k == 0 {
        return 1.0;
    }
    let mut prev = 1.0;
    let mut cur = (alpha + 1.0) + (alpha + beta + 2.0) * (x - 1.0) / 2.0;
    for j in 2..=k {
        let j = f64::from(j);
        let s = 2.0 * j + alpha + beta;
        let a1 = 2.0 * j * (j + alpha + beta) * (s - 2.0);
        let a2 = (s - 1.0) * (s * (s - 2.0) * x + alpha * alpha - beta * beta);
        let a3 = 2.0 * (j + alpha - 1.0) * (j + beta - 1.0) * s;
        let next = (a2 * cur - a3 * prev) / a1;
        prev = cur;
        cur = next;
    }
    cur
}

/// Independent evaluation of `R_n^m(r)` through
/// `(-1)^k r^|m| P_k^{(|m|,0)}(1 - 2r^2)` with `k = (n - |m|)/2`.
pub fn radial_eval_jacobi(index: RadialIndex, r: f64) -> Result<f64> {
    check_unit_interval(r)?;
    let k = index.half_gap();
    let am = index.abs_m();
    let sign = if k.is_multiple_of(2) { 1.0 } else { -1.0 };
    Ok(sign * r.powi(am as i32) * jacobi_p(k, f64::from(am), 1.0 - 2.0 * r * r))
}

/// Coefficients `(a, b)` of `r R_n^m = a R_{n+1}^{m+1} + b R_{n-1}^{m+1}`.
pub fn recurrence_coefficients(n: u32, m: u32) -> (f64, f64) {
    let denom = 2.0 * f64::from(n + 1);
    (f64::from(n + m + 2) / denom, f64::from(n - m) / denom)
}

/// Absolute residual of the raising recurrence in `m`. The `R_{n-1}^{m+1}`
/// term is dropped when `n = |m|`, where its coefficient is exactly zero.
pub fn recurrence_residual(index: RadialIndex, r: f64) -> Result<f64> {
    check_unit_interval(r)?;
    let n = index.n;
    let m = index.abs_m();
    if n == 0 {
        return Err(Error::Domain("the recurrence requires n >= 1".into()));
    }
    if n + 1 > MAX_DEGREE {
        return Err(Error::DegreeTooLarge {
            n: n + 1,
            max: MAX_DEGREE,
        });
    }
    let (a, b) = recurrence_coefficients(n, m);
    let here = build_radial(index)?.eval_unchecked(r);
    let up = build_radial(RadialIndex::new(i64::from(n + 1), i64::from(m + 1))?)?.eval_unchecked(r);
    let down = if n > m {
        b * build_radial(RadialIndex::new(i64::from(n - 1), i64::from(m + 1))?)?.eval_unchecked(r)
    } else {
        0.0
    };
    Ok((r * here - a * up - down).abs())
}

pub(crate) fn check_interior(r: f64, h: f64) -> Result<()> {
    if h.is_nan() || h <= 0.0 {
        return Err(Error::Domain(format!("step h must be positive, got {h}")));
    }
    if r < h || r > 1.0 - h {
        return Err(Error::Domain(format!("r = {r} must lie in [h, 1-h] with h = {h}")));
    }
    Ok(())
}

/// Central differences `(f', f'')` of `f` at `r` with step `h`.
pub(crate) fn central_differences(f: impl Fn(f64) -> f64, r: f64, h: f64) -> (f64, f64) {
    let plus = f(r + h);
    let mid = f(r);
    let minus = f(r - h);
    ((plus - minus) / (2.0 * h), (plus - 2.0 * mid + minus) / (h * h))
}

/// Finite-difference residual of the radial Zernike differential equation
/// `(1-r^2) R'' - (3r - 1/r) R' + n(n+2) R - m^2/r^2 R = 0`.
pub fn ode_residual(index: RadialIndex, r: f64, h: f64) -> Result<f64> {
    check_interior(r, h)?;
    let poly = build_radial(index)?;
    let (d1, d2) = central_differences(|x| poly.eval_unchecked(x), r, h);
    let n = f64::from(index.n);
    let m2 = f64::from(index.abs_m()).powi(2);
    let value = poly.eval_unchecked(r);
    Ok(((1.0 - r * r) * d2 - (3.0 * r - 1.0 / r) * d1 + n * (n + 2.0) * value - m2 / (r * r) * value).abs())
}
