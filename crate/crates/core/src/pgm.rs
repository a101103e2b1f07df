//! Netpbm grayscale images: P2 (ASCII) and P5 (binary), `maxval <= 65535`.

use std::path::Path;

use crate::error::{Error, Result};
use crate::transform::RasterImage;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PgmFormat {
    Ascii,
    Binary,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Pgm {
    pub width: usize,
    pub height: usize,
    pub maxval: u16,
    pub pixels: Vec<u16>,
}

struct Cursor<'a> {
    data: &'a [u8],
    pos: usize,
}

impl Cursor<'_> {
    fn skip_space_and_comments(&mut self) {
        while self.pos < self.data.len() {
            match self.data[self.pos] {
                b'#' => {
                    while self.pos < self.data.len() && self.data[self.pos] != b'\n' {
                        self.pos += 1;
                    }
                }
                c if c.is_ascii_whitespace() => self.pos += 1,
                _ => break,
            }
        }
    }

    fn number(&mut self, what: &str) -> Result<u32> {
        self.skip_space_and_comments();
        let start = self.pos;
        while self.pos < self.data.len() && self.data[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        std::str::from_utf8(&self.data[start..self.pos])
            .ok()
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| Error::Image(format!("malformed {what}")))
    }
}

impl Pgm {
    pub fn new(width: usize, height: usize, maxval: u16, pixels: Vec<u16>) -> Result<Self> {
        if width == 0 || height == 0 {
            return Err(Error::Image("image dimensions must be positive".into()));
        }
        if maxval == 0 {
            return Err(Error::Image("maxval must be positive".into()));
        }
        if pixels.len() != width * height {
            return Err(Error::Image(format!(
                "expected {} pixels, got {}",
                width * height,
                pixels.len()
            )));
        }
        if pixels.iter().any(|&p| p > maxval) {
            return Err(Error::Image("pixel value exceeds maxval".into()));
        }
        Ok(Self {
            width,
            height,
            maxval,
            pixels,
        })
    }

    pub fn decode(data: &[u8]) -> Result<Self> {
        let format = match data.get(..2) {
            Some(b"P2") => PgmFormat::Ascii,
            Some(b"P5") => PgmFormat::Binary,
            _ => return Err(Error::Image("not a P2/P5 PGM file".into())),
        };
        let mut cur = Cursor { data, pos: 2 };
        let width = cur.number("width")? as usize;
        let height = cur.number("height")? as usize;
        let maxval = cur.number("maxval")?;
        if maxval == 0 || maxval > 65535 {
            return Err(Error::Image(format!("maxval {maxval} outside 1..=65535")));
        }
        let count = width
            .checked_mul(height)
            .ok_or_else(|| Error::Image("image dimensions overflow".into()))?;
        let pixels = match format {
            PgmFormat::Ascii => (0..count)
                .map(|_| cur.number("pixel value"))
                .collect::<Result<Vec<u32>>>()?,
            PgmFormat::Binary => {
                // exactly one whitespace byte separates the header from the raster
                if !cur.data.get(cur.pos).is_some_and(|c| c.is_ascii_whitespace()) {
                    return Err(Error::Image("missing separator before binary raster".into()));
                }
                let body = &data[cur.pos + 1..];
                let bytes = if maxval < 256 { 1 } else { 2 };
                if body.len() < count * bytes {
                    return Err(Error::Image("truncated binary raster".into()));
                }
                if bytes == 1 {
                    body[..count].iter().map(|&b| u32::from(b)).collect()
                } else {
                    body[..2 * count]
                        .chunks_exact(2)
                        .map(|c| u32::from(u16::from_be_bytes([c[0], c[1]])))
                        .collect()
                }
            }
        };
        if pixels.iter().any(|&p| p > maxval) {
            return Err(Error::Image("pixel value exceeds maxval".into()));
        }
        Self::new(
            width,
            height,
            maxval as u16,
            pixels.into_iter().map(|p| p as u16).collect(),
        )
    }

    pub fn encode(&self, format: PgmFormat) -> Vec<u8> {
        let mut out = Vec::new();
        match format {
            PgmFormat::Ascii => {
                out.extend_from_slice(format!("P2\n{} {}\n{}\n", self.width, self.height, self.maxval).as_bytes());
                for row in self.pixels.chunks(self.width) {
                    let line: Vec<String> = row.iter().map(u16::to_string).collect();
                    out.extend_from_slice(line.join(" ").as_bytes());
                    out.push(b'\n');
                }
            }
            PgmFormat::Binary => {
                out.extend_from_slice(format!("P5\n{} {}\n{}\n", self.width, self.height, self.maxval).as_bytes());
                for &p in &self.pixels {
                    if self.maxval < 256 {
                        out.push(p as u8);
                    } else {
                        out.extend_from_slice(&p.to_be_bytes());
                    }
                }
            }
        }
        out
    }

    pub fn read(path: &Path) -> Result<Self> {
        Self::decode(&std::fs::read(path)?)
    }

    pub fn write(&self, path: &Path, format: PgmFormat) -> Result<()> {
        std::fs::write(path, self.encode(format))?;
        Ok(())
    }

    /// Intensities scaled into `[0, 1]` by `maxval`.
    pub fn to_raster(&self) -> RasterImage {
        let scale = f64::from(self.maxval);
        RasterImage::new(
            self.width,
            self.height,
            self.pixels.iter().map(|&p| f64::from(p) / scale).collect(),
        )
        .expect("pgm dimensions are valid")
    }

    /// Quantizes a raster whose intensities lie in `[0, 1]`; values outside are clamped.
    pub fn from_raster(img: &RasterImage, maxval: u16) -> Result<Self> {
        let scale = f64::from(maxval);
        let pixels = img
            .data()
            .iter()
            .map(|&x| (x.clamp(0.0, 1.0) * scale).round() as u16)
            .collect();
        Self::new(img.width(), img.height(), maxval, pixels)
    }
}
