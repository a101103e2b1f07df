//! Exact-coefficient radial polynomials, checked against the Jacobi form.
//!
//! Run with `cargo run --example radial_evaluation`.

use zernike::radial::{build_radial, radial_eval_jacobi, recurrence_coefficients, RadialIndex};

fn naive_horner(coeffs: &[i128], n: u32, r: f64) -> f64 {
    // Power-basis sum sum_k c_k r^(n-2k), evaluated in plain f64.
    coeffs
        .iter()
        .enumerate()
        .map(|(k, &c)| c as f64 * r.powi((n - 2 * k as u32) as i32))
        .sum()
}

fn main() -> zernike::Result<()> {
    println!("low-order polynomials at r = 0.5");
    for (n, m) in [(0, 0), (1, 1), (2, 0), (2, 2), (3, 1), (4, 0), (4, 2)] {
        let p = build_radial(RadialIndex::new(n, m)?)?;
        println!(
            "  R_{n}^{m}(0.5) = {:>8}   coefficients {:?}",
            p.eval(0.5)?,
            p.coefficients()
        );
    }

    println!("\nhigh degree near the rim: exact coefficients vs a plain power sum");
    for n in [20u32, 30, 40, 50] {
        let idx = RadialIndex::new(i64::from(n), 0)?;
        let p = build_radial(idx)?;
        let r = 0.995;
        let oracle = radial_eval_jacobi(idx, r)?;
        println!(
            "  n = {n:>2}: library error {:.1e}, plain sum error {:.1e}, largest |coefficient| {:.1e}",
            (p.eval(r)? - oracle).abs(),
            (naive_horner(p.coefficients(), n, r) - oracle).abs(),
            p.coefficients()
                .iter()
                .map(|c| c.unsigned_abs() as f64)
                .fold(0.0, f64::max),
        );
    }

    let (a, b) = recurrence_coefficients(3, 1);
    println!("\nr R_3^1 = {a} R_4^2 + {b} R_2^2");

    match RadialIndex::new(3, 2) {
        Err(e) => println!("(3, 2) is rejected: {e}"),
        Ok(_) => unreachable!(),
    }
    Ok(())
}
