//! Analysis and synthesis on the unit disk with the exact product quadrature.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use zernike::basis::modes_up_to;
use zernike::transform::{analyze, build_quadrature, parseval_gap, synthesize_on_grid, CoeffField};

fn main() -> zernike::Result<()> {
    let n = 16;
    let q = build_quadrature(n);
    println!(
        "bandwidth {n}: {} modes, {} radial x {} angular nodes",
        modes_up_to(n).count(),
        q.n_r(),
        q.n_phi()
    );

    let mut gram_error = 0.0f64;
    for mode in modes_up_to(n) {
        let unit = CoeffField::unit(mode);
        let column = analyze(&synthesize_on_grid(&unit, &q)?, &q, n)?;
        gram_error = gram_error.max(column.max_abs_diff(&unit));
    }
    println!("Gram matrix deviation from identity: {gram_error:.2e}");

    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let f = CoeffField::random_gaussian(n, &mut rng);
    let back = analyze(&synthesize_on_grid(&f, &q)?, &q, n)?;
    println!(
        "random field: roundtrip error {:.2e}, Parseval gap {:.2e}",
        back.max_abs_diff(&f),
        parseval_gap(&f, &q)?
    );

    // A field of higher bandwidth is projected, not aliased, onto the lower modes.
    let wide = CoeffField::random_gaussian(n + 4, &mut rng);
    let q_wide = build_quadrature(n + 4);
    let projected = analyze(&synthesize_on_grid(&wide, &q_wide)?, &q_wide, n)?;
    let kept_error = modes_up_to(n)
        .map(|m| (projected.get(m) - wide.get(m)).norm())
        .fold(0.0, f64::max);
    println!(
        "projection of a bandwidth-{} field: error on kept modes {kept_error:.2e}",
        n + 4
    );
    Ok(())
}
