//! Weighted norms of a coefficient field and the continuity bounds of the
//! ladder generators, resolvents and point evaluation.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use zernike::algebra::{apply_generator, Generator};
use zernike::basis::ModeIndex;
use zernike::rhs::{continuity_report, norm_p};
use zernike::transform::CoeffField;

fn main() -> zernike::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(77);
    let f = CoeffField::random_gaussian(10, &mut rng);
    let report = continuity_report(&f)?;
    for (p, (a, b)) in report.p_norms.iter().zip(&report.q_norms).enumerate() {
        println!("p = {p}: ||f||_p = {a:>12.4}   ||f||_(1,p) = {b:>12.4}");
    }
    println!("{} checks, {} failures", report.checks.len(), report.failures().count());
    for c in report.checks.iter().take(6) {
        println!("  {:<40} {:>12.4} <= {:>12.4}", c.name, c.lhs, c.rhs);
    }

    // The raising bound needs the factor 2^p: on |0,0> the weight doubles.
    let unit = CoeffField::unit(ModeIndex::new(0, 0));
    let raised = apply_generator(Generator::APlus, &unit)?;
    println!(
        "\n|0,0>: ||A+ f||_1 = {}, ||f||_2 = {}, 2 ||f||_2 = {}",
        norm_p(&raised, 1),
        norm_p(&unit, 2),
        2.0 * norm_p(&unit, 2)
    );
    Ok(())
}
