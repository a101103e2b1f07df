//! The image pipeline: decompose a picture into W-Zernike coefficients,
//! transform them with an algebra operator, and render the result.
//!
//! Writes its files to the system temporary directory and drives the same
//! code paths as the `zernike` binary.

use zernike::basis::ModeIndex;
use zernike::cli;
use zernike::pgm::{Pgm, PgmFormat};
use zernike::transform::RasterImage;

fn main() -> zernike::Result<()> {
    let dir = std::env::temp_dir().join("zernike_pipeline");
    std::fs::create_dir_all(&dir)?;
    let file = |name: &str| dir.join(name).to_string_lossy().into_owned();

    // A soft off-centre spot with a faint ring.
    let size = 128;
    let img = RasterImage::from_fn(size, size, |x, y| {
        let (dx, dy) = (x as f64 - 80.0, y as f64 - 50.0);
        let d2 = (dx * dx + dy * dy) / 400.0;
        let ring = ((x as f64 - 64.0).hypot(y as f64 - 64.0) - 45.0).powi(2) / 20.0;
        0.8 * (-d2).exp() + 0.2 * (-ring).exp()
    })?;
    Pgm::from_raster(&img, 255)?.write(dir.join("input.pgm").as_path(), PgmFormat::Binary)?;

    let ops = concat!(env!("CARGO_MANIFEST_DIR"), "/examples/operators");
    let steps: [Vec<String>; 4] = [
        vec![
            "analyze".into(),
            "--input".into(),
            file("input.pgm"),
            "--output".into(),
            file("f.coeffs"),
        ],
        vec![
            "apply".into(),
            "--coeffs".into(),
            file("f.coeffs"),
            "--operator".into(),
            format!("{ops}/soften.op"),
            "--output".into(),
            file("g.coeffs"),
            "--render".into(),
            file("softened.pgm"),
            "--size".into(),
            size.to_string(),
        ],
        vec![
            "synthesize".into(),
            "--coeffs".into(),
            file("f.coeffs"),
            "--output".into(),
            file("reconstructed.pgm"),
            "--size".into(),
            size.to_string(),
        ],
        vec!["norms".into(), "--coeffs".into(), file("g.coeffs")],
    ];
    for step in steps {
        let mut argv = vec!["zernike".to_string(), "--bandwidth".into(), "12".into()];
        argv.extend(step);
        let code = cli::run(argv, &mut std::io::stdout(), &mut std::io::stderr());
        if code != cli::EXIT_OK {
            eprintln!("step failed with exit status {code}");
            std::process::exit(code);
        }
    }

    let f = zernike::transform::parse_coeffs(&std::fs::read_to_string(dir.join("f.coeffs"))?)?;
    println!(
        "f_00 = {:.4}, Hermitian defect {:.1e}; outputs in {}",
        f.get(ModeIndex::new(0, 0)).re,
        f.hermitian_defect(),
        dir.display()
    );
    Ok(())
}
