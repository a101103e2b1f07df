use num_complex::Complex64;

use super::{Family, Generator, LadderAlgebra};
use crate::error::Result;
use crate::transform::CoeffField;

/// `X = a1 (X+ + X-) + i a2 (X+ - X-) + a3 X3` for the chosen family.
fn apply_x(alg: &LadderAlgebra, family: Family, [a1, a2, a3]: [f64; 3], f: &CoeffField) -> Result<CoeffField> {
    let up = alg.apply(Generator::raising(family), f)?;
    let down = alg.apply(Generator::lowering(family), f)?;
    let diag = alg.apply(Generator::diagonal(family), f)?;
    let sum = (&up + &down).scale(Complex64::new(a1, 0.0));
    let diff = (&up - &down).scale(Complex64::new(0.0, a2));
    Ok(&(&sum + &diff) + &diag.scale(Complex64::new(a3, 0.0)))
}

/// Truncated Taylor series `sum_{k<=K} (iX)^k / k!` applied to `f`.
/// The result has bandwidth `N + K`.
pub fn group_exponential(family: Family, params: [f64; 3], order: usize, f: &CoeffField) -> Result<CoeffField> {
    let alg = LadderAlgebra::default();
    alg.check(f.bandwidth() + order)?;
    let mut term = f.clone();
    let mut acc = f.padded(f.bandwidth() + order);
    for k in 1..=order {
        term = apply_x(&alg, family, params, &term)?.scale(Complex64::new(0.0, 1.0 / k as f64));
        acc = &acc + &term;
    }
    Ok(acc)
}
