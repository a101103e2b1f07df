//! Self-verification suites run by `zernike verify`.

use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::algebra::{
    casimir_apply, commutator_residual, compose_generators, ladder_differential_residual, ode_mode_residual, Family,
    Generator, LadderAlgebra, UEAMonomial,
};
use crate::basis::{modes_up_to, DiskPoint, ModeIndex};
use crate::error::Result;
use crate::radial::{build_radial, radial_eval_jacobi, recurrence_residual, RadialIndex};
use crate::transform::{analyze, build_quadrature, parseval_gap, synthesize_on_grid, CoeffField};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VerifyConfig {
    /// Upper bandwidth for every suite; smaller values give a quick run.
    pub bandwidth: usize,
    pub seed: u64,
    /// Perturbs the Gram suite so that it fails. Used to test the harness.
    pub inject_fault: bool,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        Self {
            bandwidth: 16,
            seed: 0x5eed,
            inject_fault: false,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SuiteResult {
    pub name: &'static str,
    pub checks: usize,
    pub failures: usize,
    /// Largest error observed, in the suite's own measure.
    pub worst: f64,
    pub tolerance: f64,
}

impl SuiteResult {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

struct Tally {
    name: &'static str,
    tolerance: f64,
    checks: usize,
    failures: usize,
    worst: f64,
}

impl Tally {
    fn new(name: &'static str, tolerance: f64) -> Self {
        Self {
            name,
            tolerance,
            checks: 0,
            failures: 0,
            worst: 0.0,
        }
    }

    fn record(&mut self, err: f64) {
        self.checks += 1;
        if err.is_nan() || err > self.tolerance {
            self.failures += 1;
        }
        if err.is_nan() || err > self.worst {
            self.worst = err;
        }
    }

    fn finish(self) -> SuiteResult {
        SuiteResult {
            name: self.name,
            checks: self.checks,
            failures: self.failures,
            worst: self.worst,
            tolerance: self.tolerance,
        }
    }
}

pub fn run_all(cfg: &VerifyConfig) -> Result<Vec<SuiteResult>> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let n = cfg.bandwidth;
    let mut results = vec![
        gram(n, cfg.inject_fault)?,
        parseval(n, &mut rng)?,
        commutators(n.min(10), &mut rng)?,
        casimir(n.min(12))?,
        monomial_oracle(n.min(6), if n < 6 { 1 } else { 3 }, &mut rng)?,
        worked_example()?,
    ];
    results.extend(radial(n.min(20))?);
    results.extend(differential(n.min(6))?);
    Ok(results)
}

/// Gram matrix of every mode with `u + v <= n`; each column is the analysis of
/// one synthesized basis function.
fn gram(n: usize, inject_fault: bool) -> Result<SuiteResult> {
    let mut t = Tally::new("gram", 1e-10);
    let q = build_quadrature(n);
    for mode in modes_up_to(n) {
        let samples = synthesize_on_grid(&CoeffField::unit(mode), &q)?;
        let column = analyze(&samples, &q, n)?;
        for (other, c) in column.iter() {
            let mut expected = if other == mode { 1.0 } else { 0.0 };
            if inject_fault && other == mode && mode.degree() == 0 {
                expected += 1e-6;
            }
            t.record((c - Complex64::new(expected, 0.0)).norm());
        }
    }
    Ok(t.finish())
}

fn parseval(n: usize, rng: &mut ChaCha8Rng) -> Result<SuiteResult> {
    let mut t = Tally::new("parseval+roundtrip", 1e-11);
    let q = build_quadrature(n);
    for _ in 0..20 {
        let f = CoeffField::random_gaussian(n, rng);
        t.record(parseval_gap(&f, &q)?);
        let back = analyze(&synthesize_on_grid(&f, &q)?, &q, n)?;
        t.record(back.max_abs_diff(&f));
    }
    Ok(t.finish())
}

fn commutators(n: usize, rng: &mut ChaCha8Rng) -> Result<SuiteResult> {
    let mut t = Tally::new("commutators", 0.0);
    let f = CoeffField::random_integer(n, 9, rng);
    for x in Generator::ALL {
        for y in Generator::ALL {
            if let Ok(res) = commutator_residual(x, y, &f) {
                t.record(res);
            }
        }
    }
    Ok(t.finish())
}

fn casimir(n: usize) -> Result<SuiteResult> {
    let mut t = Tally::new("casimir", 0.0);
    for u in 0..=n as u32 {
        for v in 0..=n as u32 {
            let f = CoeffField::unit(ModeIndex::new(u, v));
            for family in [Family::A, Family::B] {
                let c = casimir_apply(family, &f)?;
                t.record(c.max_abs_diff(&(&f * -0.25)));
            }
        }
    }
    Ok(t.finish())
}

fn grid(points: usize) -> impl Iterator<Item = f64> {
    (0..points).map(move |i| i as f64 / (points - 1) as f64)
}

/// `R(1) = 1`, the Jacobi oracle and the raising recurrence for `n <= n_max`.
fn radial(n_max: usize) -> Result<[SuiteResult; 3]> {
    let mut norm = Tally::new("radial normalization", 0.0);
    let mut oracle = Tally::new("radial jacobi oracle", 1e-10);
    let mut rec = Tally::new("radial recurrence", 1e-13);
    for n in 0..=n_max as i64 {
        for m in (-n..=n).step_by(2) {
            let idx = RadialIndex::new(n, m)?;
            let poly = build_radial(idx)?;
            norm.record((poly.value_at_one() - 1).abs() as f64);
            for r in grid(21) {
                let v = poly.eval_unchecked(r);
                oracle.record((v - radial_eval_jacobi(idx, r)?).abs() / v.abs().max(1.0));
                if n >= 1 {
                    rec.record(recurrence_residual(idx, r)?);
                }
            }
        }
    }
    Ok([norm.finish(), oracle.finish(), rec.finish()])
}

const INTERIOR: [(f64, f64); 5] = [(0.15, 0.3), (0.35, 1.7), (0.5, 2.9), (0.65, 4.2), (0.85, 5.6)];

fn differential(n: usize) -> Result<[SuiteResult; 2]> {
    let mut ladder = Tally::new("ladder differential forms", 1e-6);
    let mut ode = Tally::new("mode ode residual", 1e-5);
    let ladders = [Generator::APlus, Generator::AMinus, Generator::BPlus, Generator::BMinus];
    for mode in modes_up_to(n) {
        for &(r, phi) in &INTERIOR {
            let p = DiskPoint::new(r, phi)?;
            for g in ladders {
                ladder.record(ladder_differential_residual(g, mode, p, 1e-4)?);
            }
            ode.record(ode_mode_residual(mode, p, 1e-4)?);
        }
    }
    Ok([ladder.finish(), ode.finish()])
}

fn monomial_oracle(n: usize, max_exp: u32, rng: &mut ChaCha8Rng) -> Result<SuiteResult> {
    let mut t = Tally::new("monomial oracle", 1e-12);
    let alg = LadderAlgebra::default();
    let f = CoeffField::random_gaussian(n, rng);
    let range = 0..=max_exp;
    for a in exponent_vectors(range.clone()) {
        for b in exponent_vectors(range.clone()) {
            let m = UEAMonomial::new(Complex64::new(1.0, 0.0), a, b);
            let direct = alg.apply_monomial(&m, &f)?;
            let composed = compose_generators(&m.word(), &f)?;
            t.record(direct.max_abs_diff(&composed) / composed.max_abs().max(1.0));
        }
    }
    Ok(t.finish())
}

fn exponent_vectors(range: std::ops::RangeInclusive<u32>) -> impl Iterator<Item = [u32; 3]> + Clone {
    let r = range.clone();
    range.flat_map(move |i| {
        let r2 = r.clone();
        r.clone().flat_map(move |j| r2.clone().map(move |k| [i, j, k]))
    })
}

fn worked_example() -> Result<SuiteResult> {
    let mut t = Tally::new("worked example (4,1) -> 420 (7,2)", 0.0);
    let m = UEAMonomial::new(Complex64::new(1.0, 0.0), [3, 0, 0], [1, 0, 0]);
    let out = LadderAlgebra::default().apply_monomial(&m, &CoeffField::unit(ModeIndex::new(4, 1)))?;
    let expected = CoeffField::from_modes(out.bandwidth(), [(ModeIndex::new(7, 2), Complex64::new(420.0, 0.0))]);
    t.record(out.max_abs_diff(&expected));
    Ok(t.finish())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quick_mode_passes() {
        let cfg = VerifyConfig {
            bandwidth: 4,
            ..Default::default()
        };
        for s in run_all(&cfg).unwrap() {
            assert!(s.passed(), "{s:?}");
        }
    }

    #[test]
    fn injected_fault_is_caught() {
        let cfg = VerifyConfig {
            bandwidth: 3,
            inject_fault: true,
            ..Default::default()
        };
        let results = run_all(&cfg).unwrap();
        assert!(!results[0].passed());
        assert!(results[1..].iter().all(SuiteResult::passed));
    }
}
