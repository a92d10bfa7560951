//! Grayscale density images of unit-interval zero counts.

use std::io::{BufRead, Write};

use crate::error::{Error, Result};
use crate::zeros::UnitIntervalCounts;

/// Gray level removed per zero in a unit interval.
pub const SHADE_PER_ZERO: u32 = 60;

/// Row-major 8-bit grayscale image.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DensityImage {
    width: usize,
    height: usize,
    pixels: Vec<u8>,
}

impl DensityImage {
    pub fn new(width: usize, height: usize, pixels: Vec<u8>) -> Result<Self> {
        if width == 0 || width.checked_mul(height) != Some(pixels.len()) {
            return Err(Error::InvalidConfig(format!(
                "{} bytes do not fill a {width}x{height} image",
                pixels.len()
            )));
        }
        Ok(Self {
            width,
            height,
            pixels,
        })
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn pixels(&self) -> &[u8] {
        &self.pixels
    }

    pub fn pixel(&self, column: usize, row: usize) -> u8 {
        self.pixels[row * self.width + column]
    }

    /// Binary portable graymap, maxval 255.
    pub fn write_pgm<W: Write>(&self, mut w: W) -> Result<()> {
        write!(w, "P5\n{} {}\n255\n", self.width, self.height)?;
        w.write_all(&self.pixels)?;
        w.flush()?;
        Ok(())
    }

    pub fn to_pgm_bytes(&self) -> Vec<u8> {
        let mut buf = Vec::with_capacity(self.pixels.len() + 32);
        self.write_pgm(&mut buf)
            .expect("writing to a Vec cannot fail");
        buf
    }

    /// Read a binary graymap with maxval 255, as written by [`Self::write_pgm`].
    pub fn read_pgm<R: BufRead>(mut r: R) -> Result<Self> {
        let mut fields = Vec::with_capacity(4);
        let mut token = String::new();
        let mut line = 1;
        while fields.len() < 4 {
            let mut byte = [0u8; 1];
            if r.read(&mut byte)? == 0 {
                return Err(Error::Parse {
                    line,
                    message: "truncated graymap header".into(),
                });
            }
            let c = byte[0];
            if c.is_ascii_whitespace() {
                if !token.is_empty() {
                    fields.push(std::mem::take(&mut token));
                }
                if c == b'\n' {
                    line += 1;
                }
            } else if c == b'#' && token.is_empty() {
                let mut comment = Vec::new();
                r.read_until(b'\n', &mut comment)?;
                line += 1;
            } else {
                token.push(c as char);
            }
        }
        let bad = |message: String| Error::Parse { line, message };
        if fields[0] != "P5" {
            return Err(bad(format!("magic {:?} is not P5", fields[0])));
        }
        let num = |s: &str| {
            s.parse::<usize>()
                .map_err(|_| bad(format!("bad header field {s:?}")))
        };
        let (width, height, maxval) = (num(&fields[1])?, num(&fields[2])?, num(&fields[3])?);
        if maxval != 255 {
            return Err(bad(format!("maxval {maxval} is not 255")));
        }
        let mut pixels = vec![0u8; width * height];
        r.read_exact(&mut pixels)?;
        DensityImage::new(width, height, pixels)
    }
}

/// Gray level for a count: 255 (white) for no zero, darker with each zero.
pub fn shade(count: u32) -> u8 {
    255u32.saturating_sub(SHADE_PER_ZERO.saturating_mul(count)) as u8
}

/// Lay `F(1), F(2), ...` out left to right, top to bottom, `width` per row.
/// The last row is padded with white.
pub fn render_counts(counts: &UnitIntervalCounts, width: usize) -> Result<DensityImage> {
    if width == 0 {
        return Err(Error::InvalidConfig(
            "image width must be at least 1".into(),
        ));
    }
    let n_max = counts.n_max() as usize;
    if n_max == 0 {
        return Err(Error::InvalidConfig("no counts to render".into()));
    }
    let height = n_max.div_ceil(width);
    let mut pixels = vec![255u8; width * height];
    for (p, &c) in pixels.iter_mut().zip(counts.as_slice()) {
        *p = shade(c);
    }
    DensityImage::new(width, height, pixels)
}

/// `scale * 2pi / ln 2`, the wrap width at which the density beats align.
pub fn beat_width(scale: f64) -> Result<f64> {
    if !(scale > 0.0 && scale.is_finite()) {
        return Err(Error::Domain {
            function: "beat_width",
            value: scale,
            constraint: "scale > 0",
        });
    }
    Ok(scale * std::f64::consts::TAU / std::f64::consts::LN_2)
}
