//! PGM reader for `P2` (ASCII) and `P5` (binary) files.

use std::path::Path;

use fht_core::Image;

use crate::error::{malformed, unsupported, Result};

const FORMAT: &str = "PGM";

pub fn read_pgm(path: impl AsRef<Path>) -> Result<Image> {
    parse_pgm(&std::fs::read(path)?)
}

/// Decodes a PGM byte stream. Pixel `(x, y)` of the image is the sample in
/// column `x`, row `y`, widened to an accumulator without rescaling.
pub fn parse_pgm(bytes: &[u8]) -> Result<Image> {
    let mut cur = Cursor { bytes, pos: 0 };
    let magic = cur.token()?;
    let ascii = match magic {
        b"P2" => true,
        b"P5" => false,
        other => {
            return Err(unsupported(
                FORMAT,
                format!("magic {:?}, expected P2 or P5", String::from_utf8_lossy(other)),
            ))
        }
    };
    let width = cur.number("width")?;
    let height = cur.number("height")?;
    let maxval = cur.number("maxval")?;
    if width == 0 || height == 0 {
        return Err(malformed(FORMAT, format!("empty image {width}x{height}")));
    }
    if maxval == 0 || maxval > 65535 {
        return Err(unsupported(FORMAT, format!("maxval {maxval} outside 1..=65535")));
    }
    let count = width
        .checked_mul(height)
        .ok_or_else(|| malformed(FORMAT, "image dimensions overflow"))?;

    let mut data = Vec::with_capacity(count);
    if ascii {
        for i in 0..count {
            let v = cur
                .number("sample")
                .map_err(|_| malformed(FORMAT, format!("expected {count} samples, found {i}")))?;
            data.push(v);
        }
    } else {
        // Exactly one whitespace byte separates the header from the samples.
        match cur.bytes.get(cur.pos) {
            Some(b) if b.is_ascii_whitespace() => cur.pos += 1,
            _ => return Err(malformed(FORMAT, "missing whitespace after header")),
        }
        let sample_bytes = if maxval < 256 { 1 } else { 2 };
        let payload = &cur.bytes[cur.pos..];
        if payload.len() < count * sample_bytes {
            return Err(malformed(
                FORMAT,
                format!("truncated payload: {} of {} bytes", payload.len(), count * sample_bytes),
            ));
        }
        if sample_bytes == 1 {
            data.extend(payload[..count].iter().map(|&b| b as usize));
        } else {
            data.extend(payload[..2 * count].chunks_exact(2).map(|c| u16::from_be_bytes([c[0], c[1]]) as usize));
        }
    }
    if let Some(v) = data.iter().find(|&&v| v > maxval) {
        return Err(malformed(FORMAT, format!("sample {v} exceeds maxval {maxval}")));
    }
    Ok(Image::new(width, height, data.into_iter().map(|v| v as i64).collect())?)
}

struct Cursor<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn skip_space_and_comments(&mut self) {
        while let Some(&b) = self.bytes.get(self.pos) {
            if b == b'#' {
                while let Some(&c) = self.bytes.get(self.pos) {
                    self.pos += 1;
                    if c == b'\n' || c == b'\r' {
                        break;
                    }
                }
            } else if b.is_ascii_whitespace() {
                self.pos += 1;
            } else {
                break;
            }
        }
    }

    fn token(&mut self) -> Result<&'a [u8]> {
        self.skip_space_and_comments();
        let start = self.pos;
        while self.bytes.get(self.pos).is_some_and(|b| !b.is_ascii_whitespace() && *b != b'#') {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(malformed(FORMAT, "unexpected end of data"));
        }
        Ok(&self.bytes[start..self.pos])
    }

    fn number(&mut self, what: &str) -> Result<usize> {
        let tok = self.token()?;
        std::str::from_utf8(tok)
            .ok()
            .filter(|s| s.bytes().all(|b| b.is_ascii_digit()))
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| malformed(FORMAT, format!("bad {what} {:?}", String::from_utf8_lossy(tok))))
    }
}
