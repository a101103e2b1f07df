//! The `su(1,1) + su(1,1)` ladder algebra acting on coefficient fields.
//!
//! On basis modes:
//!
//! | generator | action on `|u,v>`          |
//! |-----------|----------------------------|
//! | `A+`      | `(u+1) |u+1,v>`            |
//! | `A-`      | `u |u-1,v>`                |
//! | `A3`      | `(u+1/2) |u,v>`            |
//! | `U`       | `u |u,v>`                  |
//!
//! and the `B` family mirrors these on `v`. Raising generators grow the
//! bandwidth by one; lowering and diagonal ones keep it.

mod differential;
mod exponential;
mod monomial;

pub use differential::{ladder_differential_residual, ode_mode_residual};
pub use exponential::group_exponential;
pub use monomial::{
    apply_monomial, apply_operator, compose_generators, monomial_g, parse_operator_spec, write_operator_spec,
    OperatorSpec, UEAMonomial,
};

use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;

use crate::basis::ModeIndex;
use crate::error::{Error, Result};
use crate::transform::CoeffField;

/// Default hard cap on `u + v` for fields produced by the algebra.
pub const DEFAULT_MAX_BANDWIDTH: usize = 128;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Generator {
    APlus,
    AMinus,
    A3,
    BPlus,
    BMinus,
    B3,
    U,
    V,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    A,
    B,
}

impl Generator {
    pub const ALL: [Generator; 8] = [
        Generator::APlus,
        Generator::AMinus,
        Generator::A3,
        Generator::BPlus,
        Generator::BMinus,
        Generator::B3,
        Generator::U,
        Generator::V,
    ];

    pub fn family(self) -> Family {
        match self {
            Generator::APlus | Generator::AMinus | Generator::A3 | Generator::U => Family::A,
            _ => Family::B,
        }
    }

    /// Shift in the family's own index: +1, -1 or 0.
    pub fn shift(self) -> i32 {
        match self {
            Generator::APlus | Generator::BPlus => 1,
            Generator::AMinus | Generator::BMinus => -1,
            _ => 0,
        }
    }

    pub fn raising(family: Family) -> Self {
        match family {
            Family::A => Generator::APlus,
            Family::B => Generator::BPlus,
        }
    }

    pub fn lowering(family: Family) -> Self {
        match family {
            Family::A => Generator::AMinus,
            Family::B => Generator::BMinus,
        }
    }

    pub fn diagonal(family: Family) -> Self {
        match family {
            Family::A => Generator::A3,
            Family::B => Generator::B3,
        }
    }

    /// Target mode and weight of the action on `|u,v>`; `None` when annihilated.
    fn act(self, mode: ModeIndex) -> Option<(ModeIndex, f64)> {
        let (u, v) = (mode.u, mode.v);
        let (uf, vf) = (f64::from(u), f64::from(v));
        match self {
            Generator::APlus => Some((ModeIndex::new(u + 1, v), uf + 1.0)),
            Generator::AMinus => (u > 0).then(|| (ModeIndex::new(u - 1, v), uf)),
            Generator::A3 => Some((mode, uf + 0.5)),
            Generator::U => Some((mode, uf)),
            Generator::BPlus => Some((ModeIndex::new(u, v + 1), vf + 1.0)),
            Generator::BMinus => (v > 0).then(|| (ModeIndex::new(u, v - 1), vf)),
            Generator::B3 => Some((mode, vf + 0.5)),
            Generator::V => Some((mode, vf)),
        }
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Generator::APlus => "A+",
            Generator::AMinus => "A-",
            Generator::A3 => "A3",
            Generator::BPlus => "B+",
            Generator::BMinus => "B-",
            Generator::B3 => "B3",
            Generator::U => "U",
            Generator::V => "V",
        };
        f.write_str(s)
    }
}

impl FromStr for Generator {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Generator::ALL
            .into_iter()
            .find(|g| g.to_string().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Domain(format!("unknown generator `{s}`")))
    }
}

/// Applies generators under a bandwidth cap. Exceeding the cap is an error,
/// never a silent truncation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LadderAlgebra {
    pub max_bandwidth: usize,
}

impl Default for LadderAlgebra {
    fn default() -> Self {
        Self {
            max_bandwidth: DEFAULT_MAX_BANDWIDTH,
        }
    }
}

impl LadderAlgebra {
    pub fn new(max_bandwidth: usize) -> Self {
        Self { max_bandwidth }
    }

    pub(crate) fn check(&self, bandwidth: usize) -> Result<()> {
        if bandwidth > self.max_bandwidth {
            return Err(Error::BandwidthExceeded {
                requested: bandwidth,
                limit: self.max_bandwidth,
            });
        }
        Ok(())
    }

    pub fn apply(&self, g: Generator, f: &CoeffField) -> Result<CoeffField> {
        let bw = f.bandwidth() + usize::from(g.shift() > 0);
        self.check(bw)?;
        let mut out = CoeffField::zeros(bw);
        for (mode, c) in f.iter() {
            if let Some((target, w)) = g.act(mode) {
                out.add_at(target, c * w);
            }
        }
        Ok(out)
    }

    /// Multiplication by `r e^{i phi}` in coefficient space.
    pub fn apply_p(&self, f: &CoeffField) -> Result<CoeffField> {
        let bw = f.bandwidth() + 1;
        self.check(bw)?;
        let mut out = CoeffField::zeros(bw);
        for (mode, c) in f.iter() {
            let (alpha, beta) = p_coefficients(mode);
            out.add_at(ModeIndex::new(mode.u + 1, mode.v), c * alpha);
            if mode.v > 0 {
                out.add_at(ModeIndex::new(mode.u, mode.v - 1), c * beta);
            }
        }
        Ok(out)
    }
}

pub fn apply_generator(g: Generator, f: &CoeffField) -> Result<CoeffField> {
    LadderAlgebra::default().apply(g, f)
}

pub fn apply_p(f: &CoeffField) -> Result<CoeffField> {
    LadderAlgebra::default().apply_p(f)
}

/// `(alpha_u^v, beta_u^v)` with `r e^{i phi} W_{u,v} = alpha W_{u+1,v} + beta W_{u,v-1}`.
pub fn p_coefficients(mode: ModeIndex) -> (f64, f64) {
    let u = f64::from(mode.u);
    let v = f64::from(mode.v);
    let n = u + v;
    let alpha = (u + 1.0) / ((n + 1.0) * (n + 2.0)).sqrt();
    let beta = if mode.v == 0 { 0.0 } else { v / (n * (n + 1.0)).sqrt() };
    (alpha, beta)
}

/// A linear combination of generators, the right-hand side of a commutation relation.
type Combination = Vec<(f64, Generator)>;

fn expected_commutator(x: Generator, y: Generator) -> Option<Combination> {
    use Generator::*;
    let direct = |x: Generator, y: Generator| -> Option<Combination> {
        match (x, y) {
            (APlus, AMinus) => Some(vec![(-2.0, A3)]),
            (BPlus, BMinus) => Some(vec![(-2.0, B3)]),
            (A3, APlus) | (U, APlus) => Some(vec![(1.0, APlus)]),
            (A3, AMinus) | (U, AMinus) => Some(vec![(-1.0, AMinus)]),
            (B3, BPlus) | (V, BPlus) => Some(vec![(1.0, BPlus)]),
            (B3, BMinus) | (V, BMinus) => Some(vec![(-1.0, BMinus)]),
            (a, b) if matches!(a, APlus | AMinus | A3) && matches!(b, BPlus | BMinus | B3) => Some(vec![]),
            _ => None,
        }
    };
    direct(x, y).or_else(|| direct(y, x).map(|c| c.into_iter().map(|(k, g)| (-k, g)).collect()))
}

const SUPPORTED_RELATIONS: &str = "[A+,A-]=-2A3, [A3,A+-]=+-A+-, [U,A+-]=+-A+-, the B mirrors, \
[Ai,Bj]=0 for i,j in {+,-,3}, and their reversals";

/// Max-norm of `([X, Y] - expected) f` for a relation of the algebra.
pub fn commutator_residual(x: Generator, y: Generator, f: &CoeffField) -> Result<f64> {
    let expected = expected_commutator(x, y)
        .ok_or_else(|| Error::UnsupportedPair(x.to_string(), y.to_string(), SUPPORTED_RELATIONS.into()))?;
    let alg = LadderAlgebra::default();
    let xy = alg.apply(x, &alg.apply(y, f)?)?;
    let yx = alg.apply(y, &alg.apply(x, f)?)?;
    let mut diff = &xy - &yx;
    for (k, g) in expected {
        diff = &diff - &(&alg.apply(g, f)? * k);
    }
    Ok(diff.max_abs())
}

/// `C = X3^2 - (X+ X- + X- X+)/2`, composed from generator applications.
pub fn casimir_apply(family: Family, f: &CoeffField) -> Result<CoeffField> {
    let alg = LadderAlgebra::default();
    let (up, down, diag) = (
        Generator::raising(family),
        Generator::lowering(family),
        Generator::diagonal(family),
    );
    let d2 = alg.apply(diag, &alg.apply(diag, f)?)?;
    let ud = alg.apply(up, &alg.apply(down, f)?)?;
    let du = alg.apply(down, &alg.apply(up, f)?)?;
    let anti = &ud + &du;
    let out = &d2 - &(&anti * 0.5);
    Ok(out.trimmed_to(f.bandwidth()))
}

impl CoeffField {
    /// Drops degrees above `bandwidth`, which must already hold only zeros.
    pub(crate) fn trimmed_to(&self, bandwidth: usize) -> CoeffField {
        if bandwidth >= self.bandwidth() {
            return self.padded(bandwidth);
        }
        debug_assert!(self
            .iter()
            .all(|(m, c)| m.degree() as usize <= bandwidth || c == Complex64::new(0.0, 0.0)));
        CoeffField::from_modes(bandwidth, self.iter().filter(|(m, _)| m.degree() as usize <= bandwidth))
    }
}
