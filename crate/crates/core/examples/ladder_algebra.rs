//! Ladder generators, their commutators and the Casimir on coefficient fields.

use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use zernike::algebra::{
    apply_generator, apply_monomial, casimir_apply, commutator_residual, Family, Generator, UEAMonomial,
};
use zernike::basis::ModeIndex;
use zernike::transform::CoeffField;

fn show(label: &str, f: &CoeffField) {
    let terms: Vec<String> = f
        .iter()
        .filter(|(_, c)| c.norm() != 0.0)
        .map(|(m, c)| format!("{} {m}", c.re))
        .collect();
    println!(
        "{label:<14} = {}",
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join(" + ")
        }
    );
}

fn main() -> zernike::Result<()> {
    let f = CoeffField::unit(ModeIndex::new(4, 1));
    show("|4,1>", &f);
    for g in Generator::ALL {
        show(&format!("{g} |4,1>"), &apply_generator(g, &f)?);
    }

    let m = UEAMonomial::new(Complex64::new(1.0, 0.0), [3, 0, 0], [1, 0, 0]);
    show("A+^3 B+ |4,1>", &apply_monomial(&m, &f)?);

    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let field = CoeffField::random_integer(10, 9, &mut rng);
    println!("\ncommutator residuals on an integer field of bandwidth 10:");
    for (x, y) in [
        (Generator::APlus, Generator::AMinus),
        (Generator::A3, Generator::APlus),
        (Generator::U, Generator::AMinus),
        (Generator::BPlus, Generator::BMinus),
        (Generator::APlus, Generator::BMinus),
    ] {
        println!("  [{x}, {y}]: {}", commutator_residual(x, y, &field)?);
    }
    if let Err(e) = commutator_residual(Generator::U, Generator::V, &field) {
        println!("  [U, V]: {e}");
    }

    let c = casimir_apply(Family::B, &CoeffField::unit(ModeIndex::new(3, 5)))?;
    show("\nC_B |3,5>", &c);
    Ok(())
}
