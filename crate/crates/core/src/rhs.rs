//! Weighted norm families on coefficient fields and numeric checks of the
//! continuity bounds they support.
//!
//! Two families are used: `||f||_p = sqrt(sum |f_uv|^2 (u+v+1)^(2p))` and
//! `||f||_{1,q} = sum |f_uv| (u+v+1)^q`.
//!
//! Two of the bounds carry constants different from the textbook statement:
//! raising generators satisfy `||A+ f||_p <= 2^p ||f||_{p+1}` (the target mode
//! sits one degree higher, so the weight `(u+v+2)^p` is not dominated by
//! `(u+v+1)^p`; the unit field at `(0,0)` attains the constant), and point
//! evaluation satisfies `|f(r,phi)| <= ||f||_{1,1} / sqrt(pi)` because
//! `|W_uv| <= sqrt((u+v+1)/pi)`.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::algebra::{Generator, LadderAlgebra};
use crate::error::{Error, Result};
use crate::transform::{build_quadrature, synthesize_on_grid, CoeffField};

/// Largest norm index accepted by [`norm_report`].
pub const MAX_NORM_INDEX: u32 = 8;

/// Relative slack for inequality checks that can hold with equality.
const SLACK: f64 = 1e-12;

fn weight(degree: u32) -> f64 {
    f64::from(degree) + 1.0
}

pub fn norm_p(f: &CoeffField, p: u32) -> f64 {
    f.iter()
        .map(|(m, c)| c.norm_sqr() * weight(m.degree()).powi(2 * p as i32))
        .sum::<f64>()
        .sqrt()
}

pub fn norm_1q(f: &CoeffField, q: u32) -> f64 {
    f.iter()
        .map(|(m, c)| c.norm() * weight(m.degree()).powi(q as i32))
        .sum()
}

#[derive(Debug, Clone, PartialEq)]
pub struct BoundCheck {
    pub name: String,
    pub lhs: f64,
    pub rhs: f64,
    pub pass: bool,
}

impl BoundCheck {
    fn new(name: impl Into<String>, lhs: f64, rhs: f64) -> Self {
        let pass = lhs <= rhs * (1.0 + SLACK) + f64::MIN_POSITIVE;
        Self {
            name: name.into(),
            lhs,
            rhs,
            pass,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct NormReport {
    /// `||f||_p` for `p = 0..=P`.
    pub p_norms: Vec<f64>,
    /// `||f||_{1,q}` for `q = 0..=Q`.
    pub q_norms: Vec<f64>,
    pub checks: Vec<BoundCheck>,
}

impl NormReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &BoundCheck> {
        self.checks.iter().filter(|c| !c.pass)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ResolventSign {
    Plus,
    Minus,
}

impl ResolventSign {
    fn shift(self) -> Complex64 {
        match self {
            ResolventSign::Plus => Complex64::new(0.0, 1.0),
            ResolventSign::Minus => Complex64::new(0.0, -1.0),
        }
    }
}

/// `g_uv = f_uv / (u ± i)`, the preimage of `f` under `U ± i`.
pub fn resolvent_field(f: &CoeffField, sign: ResolventSign) -> CoeffField {
    f.map(|m, c| c / (Complex64::new(f64::from(m.u), 0.0) + sign.shift()))
}

/// Norms up to the given indices together with every bound check.
pub fn norm_report(f: &CoeffField, max_p: u32, max_q: u32) -> Result<NormReport> {
    if max_p > MAX_NORM_INDEX || max_q > MAX_NORM_INDEX {
        return Err(Error::Domain(format!("norm indices are capped at {MAX_NORM_INDEX}")));
    }
    let p_norms = (0..=max_p).map(|p| norm_p(f, p)).collect();
    let q_norms = (0..=max_q).map(|q| norm_1q(f, q)).collect();
    Ok(NormReport {
        p_norms,
        q_norms,
        checks: continuity_checks(f)?,
    })
}

/// The report at the default indices `p, q <= 3`.
pub fn continuity_report(f: &CoeffField) -> Result<NormReport> {
    norm_report(f, 3, 3)
}

fn continuity_checks(f: &CoeffField) -> Result<Vec<BoundCheck>> {
    let alg = LadderAlgebra::default();
    let mut checks = Vec::new();
    let images: Vec<(Generator, CoeffField)> = [
        Generator::U,
        Generator::V,
        Generator::APlus,
        Generator::AMinus,
        Generator::BPlus,
        Generator::BMinus,
    ]
    .into_iter()
    .map(|g| alg.apply(g, f).map(|img| (g, img)))
    .collect::<Result<_>>()?;
    let pf = alg.apply_p(f)?;
    let g_plus = resolvent_field(f, ResolventSign::Plus);
    let g_minus = resolvent_field(f, ResolventSign::Minus);

    for p in 0..=3u32 {
        let next = norm_p(f, p + 1);
        for (g, img) in &images {
            let constant = if g.shift() > 0 { 2f64.powi(p as i32) } else { 1.0 };
            let label = if constant == 1.0 {
                String::new()
            } else {
                format!("{constant}*")
            };
            checks.push(BoundCheck::new(
                format!("||{g} f||_{p} <= {label}||f||_{}", p + 1),
                norm_p(img, p),
                constant * next,
            ));
        }
        let here = norm_p(f, p);
        checks.push(BoundCheck::new(
            format!("||g+||_{p} <= ||f||_{p}"),
            norm_p(&g_plus, p),
            here,
        ));
        checks.push(BoundCheck::new(
            format!("||g-||_{p} <= ||f||_{p}"),
            norm_p(&g_minus, p),
            here,
        ));
        checks.push(BoundCheck::new(
            format!("||f||_{p} <= ||f||_1,{p}"),
            here,
            norm_1q(f, p),
        ));
        let c = 2f64.powi(p as i32) + 1.0;
        checks.push(BoundCheck::new(
            format!("||P f||_1,{p} <= {c}*||f||_1,{p}"),
            norm_1q(&pf, p),
            c * norm_1q(f, p),
        ));
    }

    // (U ± i) g± = f
    for (name, g, sign) in [
        ("+", &g_plus, ResolventSign::Plus),
        ("-", &g_minus, ResolventSign::Minus),
    ] {
        let back = g.map(|m, c| c * (Complex64::new(f64::from(m.u), 0.0) + sign.shift()));
        let scale = f.max_abs().max(f64::MIN_POSITIVE);
        checks.push(BoundCheck::new(
            format!("|(U{name}i) g{name} - f| <= 1e-15 max|f|"),
            back.max_abs_diff(f),
            1e-15 * scale,
        ));
    }

    let grid = build_quadrature(f.bandwidth() + 2);
    let peak = synthesize_on_grid(f, &grid)?
        .values()
        .iter()
        .map(|v| v.norm())
        .fold(0.0, f64::max);
    checks.push(BoundCheck::new(
        "max|f(r,phi)| <= ||f||_1,1/sqrt(pi)",
        peak,
        norm_1q(f, 1) / PI.sqrt(),
    ));
    Ok(checks)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::basis::ModeIndex;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn unit(u: u32, v: u32) -> CoeffField {
        CoeffField::unit(ModeIndex::new(u, v))
    }

    #[test]
    fn norm_examples() {
        assert_eq!(norm_p(&unit(2, 1), 1), 4.0);
        assert_eq!(norm_1q(&unit(2, 1), 2), 16.0);
        assert_eq!(norm_p(&CoeffField::zeros(4), 3), 0.0);
        let f = CoeffField::random_gaussian(5, &mut ChaCha8Rng::seed_from_u64(1));
        assert_eq!(norm_p(&f, 0), f.l2_norm());
        let l1: f64 = f.values().iter().map(|c| c.norm()).sum();
        assert_eq!(norm_1q(&f, 0), l1);
    }

    #[test]
    fn basis_mode_norms_are_powers() {
        for (u, v) in [(0, 0), (3, 4), (7, 1)] {
            for p in 0..5 {
                assert_eq!(norm_p(&unit(u, v), p), f64::from(u + v + 1).powi(p as i32));
            }
        }
    }

    #[test]
    fn single_mode_slack() {
        let f = unit(3, 0);
        let u_img = crate::algebra::apply_generator(Generator::U, &f).unwrap();
        assert_eq!(norm_p(&u_img, 0), 3.0);
        assert_eq!(norm_p(&f, 1), 4.0);
        let pf = crate::algebra::apply_p(&unit(0, 0)).unwrap();
        assert!((norm_1q(&pf, 1) - 2f64.sqrt()).abs() < 1e-15);
    }

    #[test]
    fn raising_bound_needs_the_power_of_two() {
        // Without the 2^p factor the bound fails at (0,0): ||A+ f||_1 = 2 > ||f||_2 = 1.
        let f = unit(0, 0);
        let img = crate::algebra::apply_generator(Generator::APlus, &f).unwrap();
        assert_eq!(norm_p(&img, 1), 2.0);
        assert_eq!(norm_p(&f, 2), 1.0);
        assert!(continuity_report(&f).unwrap().all_pass());
    }

    #[test]
    fn resolvent_examples() {
        let g = resolvent_field(&unit(0, 0), ResolventSign::Plus);
        assert_eq!(g.get(ModeIndex::new(0, 0)), Complex64::new(0.0, -1.0));
        assert_eq!(norm_p(&g, 0), 1.0);
    }

    #[test]
    fn zero_field_passes() {
        let r = continuity_report(&CoeffField::zeros(3)).unwrap();
        assert!(r.all_pass());
        assert!(r.p_norms.iter().chain(&r.q_norms).all(|&x| x == 0.0));
    }

    #[test]
    fn random_fields_pass() {
        let mut rng = ChaCha8Rng::seed_from_u64(21);
        for bw in 0..=12 {
            let f = CoeffField::random_gaussian(bw, &mut rng);
            let r = continuity_report(&f).unwrap();
            assert!(r.all_pass(), "{:?}", r.failures().collect::<Vec<_>>());
            assert!(r.p_norms.windows(2).all(|w| w[0] <= w[1]));
            assert!(r.q_norms.windows(2).all(|w| w[0] <= w[1]));
        }
    }

    #[test]
    fn index_cap() {
        assert!(norm_report(&unit(1, 1), 9, 0).is_err());
        assert_eq!(norm_report(&unit(1, 1), 8, 8).unwrap().p_norms.len(), 9);
    }
}
