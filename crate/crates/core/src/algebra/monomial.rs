//! Ordered monomials `c A+^a1 A3^a2 A-^a3 B+^b1 B3^b2 B-^b3` and finite sums of them.
//!
//! A monomial maps `|u,v>` to a single mode `|u+a1-a3, v+b1-b3>` with weight
//! `c g(u, v)`, where
//!
//! ```text
//! g = (u-a3+1)^(a1) (u-a3+1/2)^a2 (u)_a3 * (v-b3+1)^(b1) (v-b3+1/2)^b2 (v)_b3
//! ```
//!
//! using rising `x^(n)` and falling `(x)_n` factorials. The lowering factor acts
//! first, so any mode it would push below zero is annihilated by `(u)_a3 = 0`.

use std::io::Write;

use num_complex::Complex64;

use super::{Generator, LadderAlgebra};
use crate::basis::ModeIndex;
use crate::error::{Error, Result};
use crate::transform::CoeffField;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct UEAMonomial {
    pub c: Complex64,
    pub alpha: [u32; 3],
    pub beta: [u32; 3],
}

impl UEAMonomial {
    pub fn new(c: Complex64, alpha: [u32; 3], beta: [u32; 3]) -> Self {
        Self { c, alpha, beta }
    }

    pub fn identity() -> Self {
        Self::new(Complex64::new(1.0, 0.0), [0; 3], [0; 3])
    }

    /// The generator word in written (left-to-right) order.
    pub fn word(&self) -> Vec<Generator> {
        use Generator::*;
        let [a1, a2, a3] = self.alpha;
        let [b1, b2, b3] = self.beta;
        [(APlus, a1), (A3, a2), (AMinus, a3), (BPlus, b1), (B3, b2), (BMinus, b3)]
            .into_iter()
            .flat_map(|(g, k)| std::iter::repeat_n(g, k as usize))
            .collect()
    }

    /// Growth of the bandwidth under this monomial.
    pub fn raise(&self) -> usize {
        (self.alpha[0] + self.beta[0]) as usize
    }
}

/// Ordered sum of monomials.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct OperatorSpec {
    pub monomials: Vec<UEAMonomial>,
}

impl OperatorSpec {
    pub fn new(monomials: Vec<UEAMonomial>) -> Self {
        Self { monomials }
    }
}

fn rising(x: f64, n: u32) -> f64 {
    (0..n).map(|k| x + f64::from(k)).product()
}

fn falling(x: u32, n: u32) -> f64 {
    if n > x {
        return 0.0;
    }
    (0..n).map(|k| f64::from(x - k)).product()
}

fn family_factor(x: u32, [raise, diag, lower]: [u32; 3]) -> f64 {
    let down = falling(x, lower);
    if down == 0.0 {
        return 0.0;
    }
    let base = f64::from(x - lower);
    rising(base + 1.0, raise) * (base + 0.5).powi(diag as i32) * down
}

pub fn monomial_g(u: u32, v: u32, alpha: [u32; 3], beta: [u32; 3]) -> f64 {
    family_factor(u, alpha) * family_factor(v, beta)
}

impl LadderAlgebra {
    pub fn apply_monomial(&self, m: &UEAMonomial, f: &CoeffField) -> Result<CoeffField> {
        let bw = f.bandwidth() + m.raise();
        self.check(bw)?;
        let mut out = CoeffField::zeros(bw);
        for (mode, c) in f.iter() {
            let g = monomial_g(mode.u, mode.v, m.alpha, m.beta);
            if g == 0.0 {
                continue;
            }
            let target = ModeIndex::new(mode.u + m.alpha[0] - m.alpha[2], mode.v + m.beta[0] - m.beta[2]);
            out.add_at(target, m.c * g * c);
        }
        Ok(out)
    }

    /// Sum of the monomial images; the empty sum is the zero field.
    pub fn apply_operator(&self, op: &OperatorSpec, f: &CoeffField) -> Result<CoeffField> {
        let bw = f.bandwidth() + op.monomials.iter().map(UEAMonomial::raise).max().unwrap_or(0);
        self.check(bw)?;
        let mut acc = CoeffField::zeros(bw);
        for m in &op.monomials {
            acc = &acc + &self.apply_monomial(m, f)?;
        }
        Ok(acc)
    }

    /// Applies a generator word as an operator product: the rightmost factor acts first.
    pub fn compose(&self, word: &[Generator], f: &CoeffField) -> Result<CoeffField> {
        word.iter().rev().try_fold(f.clone(), |acc, &g| self.apply(g, &acc))
    }
}

pub fn apply_monomial(m: &UEAMonomial, f: &CoeffField) -> Result<CoeffField> {
    LadderAlgebra::default().apply_monomial(m, f)
}

pub fn apply_operator(op: &OperatorSpec, f: &CoeffField) -> Result<CoeffField> {
    LadderAlgebra::default().apply_operator(op, f)
}

pub fn compose_generators(word: &[Generator], f: &CoeffField) -> Result<CoeffField> {
    LadderAlgebra::default().compose(word, f)
}

/// Parses the operator-spec text format:
///
/// ```text
/// # zernike-operator
/// # c_re c_im a1 a2 a3 b1 b2 b3
/// 1 0 3 0 0 1 0 0
/// ```
///
/// One monomial per line, eight whitespace-separated fields. Lines starting
/// with `#` and blank lines are ignored.
pub fn parse_operator_spec(text: &str) -> Result<OperatorSpec> {
    let mut monomials = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let err = |msg: String| Error::Parse { line: i + 1, msg };
        let parts: Vec<&str> = line.split_whitespace().collect();
        if parts.len() != 8 {
            return Err(err(format!(
                "expected `c_re c_im a1 a2 a3 b1 b2 b3`, found {} fields",
                parts.len()
            )));
        }
        let num = |s: &str| -> Result<f64> {
            s.parse::<f64>()
                .ok()
                .filter(|x| x.is_finite())
                .ok_or_else(|| err(format!("bad coefficient `{s}`")))
        };
        let exp = |s: &str| -> Result<u32> { s.parse().map_err(|_| err(format!("bad exponent `{s}`"))) };
        let c = Complex64::new(num(parts[0])?, num(parts[1])?);
        let alpha = [exp(parts[2])?, exp(parts[3])?, exp(parts[4])?];
        let beta = [exp(parts[5])?, exp(parts[6])?, exp(parts[7])?];
        monomials.push(UEAMonomial::new(c, alpha, beta));
    }
    Ok(OperatorSpec::new(monomials))
}

pub fn write_operator_spec<W: Write>(op: &OperatorSpec, mut out: W) -> Result<()> {
    writeln!(out, "# zernike-operator")?;
    writeln!(out, "# c_re c_im a1 a2 a3 b1 b2 b3")?;
    for m in &op.monomials {
        let [a1, a2, a3] = m.alpha;
        let [b1, b2, b3] = m.beta;
        writeln!(out, "{} {} {a1} {a2} {a3} {b1} {b2} {b3}", m.c.re, m.c.im)?;
    }
    Ok(())
}
