//! Text serialization of coefficient fields.
//!
//! ```text
//! # zernike-coeffs bandwidth=N
//! u v re im
//! ```
//!
//! One line per mode, whitespace separated. Modes absent from the file are
//! zero; further `#` lines are comments. Writers emit every mode in layout order
//! using the shortest round-trip decimal form of each float.

use std::collections::HashSet;
use std::io::{BufRead, Write};

use num_complex::Complex64;

use super::CoeffField;
use crate::basis::ModeIndex;
use crate::error::{Error, Result};

pub const COEFF_HEADER: &str = "# zernike-coeffs";

pub fn write_coeffs<W: Write>(field: &CoeffField, mut out: W) -> Result<()> {
    writeln!(out, "{COEFF_HEADER} bandwidth={}", field.bandwidth())?;
    for (mode, c) in field.iter() {
        writeln!(out, "{} {} {} {}", mode.u, mode.v, c.re, c.im)?;
    }
    Ok(())
}

pub fn read_coeffs<R: BufRead>(input: R) -> Result<CoeffField> {
    let mut field: Option<CoeffField> = None;
    let mut seen = HashSet::new();
    for (i, line) in input.lines().enumerate() {
        let line = line?;
        let lineno = i + 1;
        let trimmed = line.trim();
        if trimmed.is_empty() {
            continue;
        }
        let Some(f) = field.as_mut() else {
            field = Some(CoeffField::zeros(parse_header(trimmed, lineno)?));
            continue;
        };
        if trimmed.starts_with('#') {
            continue;
        }
        let parse_err = |msg: String| Error::Parse { line: lineno, msg };
        let parts: Vec<&str> = trimmed.split_whitespace().collect();
        if parts.len() != 4 {
            return Err(parse_err(format!("expected `u v re im`, found {} fields", parts.len())));
        }
        let u: u32 = parts[0]
            .parse()
            .map_err(|_| parse_err(format!("bad mode index `{}`", parts[0])))?;
        let v: u32 = parts[1]
            .parse()
            .map_err(|_| parse_err(format!("bad mode index `{}`", parts[1])))?;
        let re: f64 = parts[2]
            .parse()
            .map_err(|_| parse_err(format!("bad number `{}`", parts[2])))?;
        let im: f64 = parts[3]
            .parse()
            .map_err(|_| parse_err(format!("bad number `{}`", parts[3])))?;
        if !re.is_finite() || !im.is_finite() {
            return Err(parse_err("coefficients must be finite".into()));
        }
        let mode = ModeIndex::new(u, v);
        if !f.contains(mode) {
            return Err(parse_err(format!("mode {mode} exceeds bandwidth {}", f.bandwidth())));
        }
        if !seen.insert(mode) {
            return Err(parse_err(format!("duplicate mode {mode}")));
        }
        f.set(mode, Complex64::new(re, im));
    }
    field.ok_or(Error::Parse {
        line: 0,
        msg: "missing header".into(),
    })
}

pub fn parse_coeffs(text: &str) -> Result<CoeffField> {
    read_coeffs(text.as_bytes())
}

fn parse_header(line: &str, lineno: usize) -> Result<usize> {
    let rest = line.strip_prefix(COEFF_HEADER).ok_or_else(|| Error::Parse {
        line: lineno,
        msg: format!("expected header `{COEFF_HEADER} bandwidth=N`"),
    })?;
    rest.trim()
        .strip_prefix("bandwidth=")
        .and_then(|n| n.trim().parse().ok())
        .ok_or_else(|| Error::Parse {
            line: lineno,
            msg: "header must declare bandwidth=N".into(),
        })
}
