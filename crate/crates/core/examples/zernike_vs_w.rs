//! Real Zernike functions against the complex W-basis: each W is a scaled
//! `R e^{i m phi}`, and real images are Hermitian combinations of W's.
//! Writes a CSV of the field `1.25 Re W_{2,0} + 2.5 Im W_{2,1}`.

use std::io::Write;

use num_complex::Complex64;
use zernike::basis::{w_bound, w_eval, z_eval, DiskPoint, ModeIndex};
use zernike::radial::RadialIndex;
use zernike::transform::{synthesize, CoeffField};

fn main() -> zernike::Result<()> {
    let p = DiskPoint::new(0.7, 0.9)?;
    for (u, v) in [(1, 0), (2, 0), (2, 1), (1, 3)] {
        let mode = ModeIndex::new(u, v);
        let w = w_eval(mode, p)?;
        let n = i64::from(u + v);
        let m = i64::from(u) - i64::from(v);
        let z_cos = z_eval(RadialIndex::new(n, m.abs())?, p)?;
        println!(
            "W_{{{u},{v}}} = {w:.6}, scale {:.6}, Re W / scale = {:.6}, Z = {z_cos:.6}",
            w_bound(mode),
            w.re / w_bound(mode)
        );
    }

    // Re W = (W + W*)/2 and Im W = (W - W*)/2i, with W* the mirrored mode.
    let mut f = CoeffField::real_part_of(ModeIndex::new(2, 0)).scale(Complex64::new(1.25, 0.0));
    f = &f + &CoeffField::imag_part_of(ModeIndex::new(2, 1)).scale(Complex64::new(2.5, 0.0));
    println!("Hermitian defect of the combined field: {}", f.hermitian_defect());

    let path = std::env::temp_dir().join("zernike_field.csv");
    let mut out = std::io::BufWriter::new(std::fs::File::create(&path)?);
    writeln!(out, "r,phi,value")?;
    let points: Vec<DiskPoint> = (0..=40)
        .flat_map(|i| (0..90).map(move |k| (f64::from(i) / 40.0, f64::from(k) * std::f64::consts::TAU / 90.0)))
        .map(|(r, phi)| DiskPoint::new(r, phi))
        .collect::<zernike::Result<_>>()?;
    let values = synthesize(&f, &points)?;
    let mut max_imag = 0.0f64;
    for (pt, v) in points.iter().zip(&values) {
        writeln!(out, "{},{},{}", pt.r(), pt.phi(), v.re)?;
        max_imag = max_imag.max(v.im.abs());
    }
    out.flush()?;
    println!("wrote {} (largest imaginary part {max_imag:.1e})", path.display());
    Ok(())
}
