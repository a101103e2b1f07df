//! Truncated Taylor series of the group action `exp(iX)` with `X` a real
//! combination of the Hermitian generators of one family.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use zernike::algebra::{group_exponential, Family};
use zernike::transform::CoeffField;

fn main() -> zernike::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let f = CoeffField::random_gaussian(6, &mut rng);
    println!("||f|| = {:.12}", f.l2_norm());
    for scale in [0.01, 0.05, 0.2] {
        let params = [scale, -0.5 * scale, 0.8 * scale];
        for order in [2, 6, 12] {
            let g = group_exponential(Family::A, params, order, &f)?;
            println!(
                "scale {scale:<5} order {order:>2}: bandwidth {:>2}, relative norm change {:.2e}",
                g.bandwidth(),
                (g.l2_norm() - f.l2_norm()).abs() / f.l2_norm()
            );
        }
    }
    Ok(())
}
