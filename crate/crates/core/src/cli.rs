//! Command-line front end: decompose an image, transform its coefficients
//! with a ladder-algebra operator, render the result, and self-check.
//!
//! Exit status: 0 success, 1 usage error, 2 data or validation error,
//! 3 verification failure.

use std::f64::consts::TAU;
use std::fs::File;
use std::io::{BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use num_complex::Complex64;

use crate::algebra::{parse_operator_spec, LadderAlgebra, DEFAULT_MAX_BANDWIDTH};
use crate::basis::{mode_to_radial, w_bound, w_eval, DiskPoint, ModeIndex};
use crate::error::{Error, Result};
use crate::pgm::{Pgm, PgmFormat};
use crate::radial::{build_radial, RadialIndex};
use crate::rhs::norm_report;
use crate::transform::{
    analyze, build_quadrature, polar_to_raster, raster_to_polar, read_coeffs, render_magnitude, synthesize,
    write_coeffs, CoeffField, RasterImage,
};
use crate::verify::{run_all, VerifyConfig};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_DATA: i32 = 2;
pub const EXIT_VERIFY: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "zernike",
    version,
    about = "Zernike analysis and soft adaptive optics on the unit disk"
)]
pub struct Cli {
    /// Bandwidth N: largest retained u+v.
    #[arg(long, global = true, default_value_t = 16)]
    pub bandwidth: usize,

    /// Suppress informational messages.
    #[arg(long, global = true)]
    pub quiet: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate R_n^m(r) or W_{u,v}(r, phi).
    Eval(EvalArgs),
    /// Decompose a PGM image into W-Zernike coefficients.
    Analyze {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        output: PathBuf,
    },
    /// Apply an operator spec to a coefficient file.
    Apply {
        #[arg(long)]
        coeffs: PathBuf,
        #[arg(long)]
        operator: PathBuf,
        #[arg(long)]
        output: PathBuf,
        /// Also render |g| to this path.
        #[arg(long)]
        render: Option<PathBuf>,
        #[command(flatten)]
        raster: RasterArgs,
    },
    /// Render |f| of a coefficient file.
    Synthesize {
        #[arg(long)]
        coeffs: PathBuf,
        #[arg(long)]
        output: PathBuf,
        #[command(flatten)]
        raster: RasterArgs,
    },
    /// Print the norm families and continuity checks of a coefficient file.
    Norms {
        #[arg(long)]
        coeffs: PathBuf,
    },
    /// Run the built-in property suites.
    Verify {
        #[arg(long, hide = true)]
        inject_fault: bool,
    },
    /// Export (r, phi) grids of modes or fields as CSV.
    Plotdata(PlotArgs),
}

#[derive(Debug, Args)]
pub struct EvalArgs {
    /// Radial index pair.
    #[arg(long, num_args = 2, value_names = ["N", "M"], allow_negative_numbers = true, conflicts_with = "mode", required_unless_present = "mode")]
    pub radial: Option<Vec<i64>>,
    /// Mode index pair.
    #[arg(long, num_args = 2, value_names = ["U", "V"])]
    pub mode: Option<Vec<u32>>,
    #[arg(long)]
    pub r: f64,
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    pub phi: f64,
}

#[derive(Debug, Args)]
pub struct RasterArgs {
    /// Raster width in pixels.
    #[arg(long, default_value_t = 256)]
    pub size: usize,
    /// Raster height; defaults to the width.
    #[arg(long)]
    pub height: Option<usize>,
    /// Write unnormalized magnitudes as CSV instead of a PGM.
    #[arg(long)]
    pub raw: bool,
    #[arg(long, default_value_t = 255)]
    pub maxval: u16,
    /// Write plain-text P2 instead of binary P5.
    #[arg(long)]
    pub ascii: bool,
}

#[derive(Debug, Args)]
pub struct PlotArgs {
    /// Mode to export; repeat for several.
    #[arg(long, num_args = 2, value_names = ["U", "V"], action = clap::ArgAction::Append, required_unless_present = "coeffs")]
    pub mode: Vec<u32>,
    /// Coefficient file to export instead of single modes.
    #[arg(long, conflicts_with = "mode")]
    pub coeffs: Option<PathBuf>,
    #[arg(long)]
    pub output: PathBuf,
    #[arg(long, default_value_t = 51)]
    pub nr: usize,
    #[arg(long, default_value_t = 72)]
    pub nphi: usize,
}

/// Parses `args` (program name first) and runs the command. Returns the exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            if e.use_stderr() {
                let _ = write!(err, "{}", e.render());
                return EXIT_USAGE;
            }
            let _ = write!(out, "{}", e.render());
            return EXIT_OK;
        }
    };
    match dispatch(&cli, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_DATA
        }
    }
}

fn dispatch(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    let mut info = |msg: String| {
        if !cli.quiet {
            let _ = writeln!(err, "{msg}");
        }
    };
    match &cli.command {
        Command::Eval(a) => cmd_eval(a, out),
        Command::Analyze { input, output } => {
            let field = analyze_image(&Pgm::read(input)?.to_raster(), cli.bandwidth)?;
            save_coeffs(&field, output)?;
            info(format!(
                "wrote {} coefficients to {}",
                field.values().len(),
                output.display()
            ));
            Ok(EXIT_OK)
        }
        Command::Apply {
            coeffs,
            operator,
            output,
            render,
            raster,
        } => {
            let f = load_coeffs(coeffs)?;
            let spec = parse_operator_spec(&std::fs::read_to_string(operator)?)?;
            let g = LadderAlgebra::new(DEFAULT_MAX_BANDWIDTH.max(cli.bandwidth)).apply_operator(&spec, &f)?;
            save_coeffs(&g, output)?;
            info(format!(
                "wrote bandwidth-{} field to {}",
                g.bandwidth(),
                output.display()
            ));
            if let Some(path) = render {
                write_raster(&g, path, raster)?;
                info(format!("rendered {}", path.display()));
            }
            Ok(EXIT_OK)
        }
        Command::Synthesize { coeffs, output, raster } => {
            write_raster(&load_coeffs(coeffs)?, output, raster)?;
            info(format!("rendered {}", output.display()));
            Ok(EXIT_OK)
        }
        Command::Norms { coeffs } => cmd_norms(&load_coeffs(coeffs)?, out),
        Command::Verify { inject_fault } => {
            let cfg = VerifyConfig {
                bandwidth: cli.bandwidth,
                inject_fault: *inject_fault,
                ..Default::default()
            };
            let results = run_all(&cfg)?;
            let failed = results.iter().filter(|s| !s.passed()).count();
            for s in &results {
                writeln!(
                    out,
                    "{:<4} {:<36} {:>7} checks  worst {:.3e}  (tol {:.0e})",
                    if s.passed() { "ok" } else { "FAIL" },
                    s.name,
                    s.checks,
                    s.worst,
                    s.tolerance
                )?;
            }
            writeln!(out, "{} suites passed, {} failed", results.len() - failed, failed)?;
            Ok(if failed == 0 { EXIT_OK } else { EXIT_VERIFY })
        }
        Command::Plotdata(a) => {
            cmd_plotdata(a)?;
            info(format!("wrote {}", a.output.display()));
            Ok(EXIT_OK)
        }
    }
}

fn cmd_eval(a: &EvalArgs, out: &mut dyn Write) -> Result<i32> {
    if let Some(nm) = &a.radial {
        let poly = build_radial(RadialIndex::new(nm[0], nm[1])?)?;
        writeln!(out, "{:?}", poly.eval(a.r)?)?;
    } else if let Some(uv) = &a.mode {
        let w = w_eval(ModeIndex::new(uv[0], uv[1]), DiskPoint::new(a.r, a.phi)?)?;
        writeln!(out, "{:?} {:?}", w.re, w.im)?;
    }
    Ok(EXIT_OK)
}

/// Projects `|image|` onto the modes with `u + v <= bandwidth` using the
/// bandwidth's own quadrature. Denser rules put nodes within a pixel of the
/// rim, where bilinear samples pick up pixels from outside the disk.
pub fn analyze_image(img: &RasterImage, bandwidth: usize) -> Result<CoeffField> {
    let q = build_quadrature(bandwidth);
    let samples = raster_to_polar(img, &q)?.map(|v| Complex64::new(v.norm(), 0.0));
    analyze(&samples, &q, bandwidth)
}

fn load_coeffs(path: &Path) -> Result<CoeffField> {
    read_coeffs(BufReader::new(
        File::open(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?,
    ))
}

fn save_coeffs(field: &CoeffField, path: &Path) -> Result<()> {
    let mut w = BufWriter::new(File::create(path)?);
    write_coeffs(field, &mut w)?;
    w.flush()?;
    Ok(())
}

fn write_raster(field: &CoeffField, path: &Path, a: &RasterArgs) -> Result<()> {
    let (w, h) = (a.size, a.height.unwrap_or(a.size));
    if a.raw {
        let img = render_magnitude(field, w, h)?;
        let mut f = BufWriter::new(File::create(path)?);
        for row in img.data().chunks(w) {
            let line: Vec<String> = row.iter().map(f64::to_string).collect();
            writeln!(f, "{}", line.join(","))?;
        }
        f.flush()?;
        return Ok(());
    }
    let img = polar_to_raster(field, w, h)?;
    let format = if a.ascii { PgmFormat::Ascii } else { PgmFormat::Binary };
    Pgm::from_raster(&img, a.maxval)?.write(path, format)
}

fn cmd_norms(f: &CoeffField, out: &mut dyn Write) -> Result<i32> {
    let report = norm_report(f, 3, 3)?;
    writeln!(out, "{:<4} {:>24} {:>24}", "k", "||f||_k", "||f||_{1,k}")?;
    for (k, (p, q)) in report.p_norms.iter().zip(&report.q_norms).enumerate() {
        writeln!(out, "{:<4} {:>24} {:>24}", k, p, q)?;
    }
    writeln!(out)?;
    let width = report.checks.iter().map(|c| c.name.len()).max().unwrap_or(5).max(5);
    writeln!(out, "{:<width$} {:>24} {:>24}  status", "check", "lhs", "rhs")?;
    for c in &report.checks {
        let status = if c.pass { "pass" } else { "FAIL" };
        writeln!(out, "{:<width$} {:>24} {:>24}  {status}", c.name, c.lhs, c.rhs)?;
    }
    Ok(if report.all_pass() { EXIT_OK } else { EXIT_VERIFY })
}

fn cmd_plotdata(a: &PlotArgs) -> Result<()> {
    if a.nr < 2 || a.nphi < 1 {
        return Err(Error::Domain("plotdata needs --nr >= 2 and --nphi >= 1".into()));
    }
    let grid: Vec<DiskPoint> = (0..a.nr)
        .flat_map(|j| (0..a.nphi).map(move |k| (j as f64 / (a.nr - 1) as f64, TAU * k as f64 / a.nphi as f64)))
        .map(|(r, phi)| DiskPoint::new(r, phi))
        .collect::<Result<_>>()?;
    let mut w = BufWriter::new(File::create(&a.output)?);
    writeln!(w, "field,r,phi,re,im,abs,z_cos,z_sin,scale")?;
    if let Some(path) = &a.coeffs {
        let values = synthesize(&load_coeffs(path)?, &grid)?;
        for (p, v) in grid.iter().zip(values) {
            writeln!(w, "coeffs,{},{},{},{},{},,,", p.r(), p.phi(), v.re, v.im, v.norm())?;
        }
    }
    for uv in a.mode.chunks(2) {
        let mode = ModeIndex::new(uv[0], uv[1]);
        let poly = build_radial(mode_to_radial(mode))?;
        let scale = w_bound(mode);
        let m = f64::from(mode.order());
        for p in &grid {
            let v = w_eval(mode, *p)?;
            let radial = poly.eval(p.r())?;
            let (s, c) = (m * p.phi()).sin_cos();
            writeln!(
                w,
                "W{}_{},{},{},{},{},{},{},{},{}",
                mode.u,
                mode.v,
                p.r(),
                p.phi(),
                v.re,
                v.im,
                v.norm(),
                radial * c,
                radial * s,
                scale
            )?;
        }
    }
    w.flush()?;
    Ok(())
}
