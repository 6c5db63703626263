//! `FHT1` raster: a 13-byte header followed by little-endian `i64` values.
//!
//! ```text
//! offset  size  field
//! 0       4     magic "FHT1"
//! 4       4     width  (u32 LE)
//! 8       4     height (u32 LE)
//! 12      1     dtype  (0 = i64)
//! 13      8·w·h payload, x-fastest row-major
//! ```

use std::path::Path;

use fht_core::Image;

use crate::error::{malformed, unsupported, Result};

pub const MAGIC: &[u8; 4] = b"FHT1";
pub const DTYPE_I64: u8 = 0;
const HEADER_LEN: usize = 13;
const FORMAT: &str = "FHT1 raster";

pub fn encode_raster(img: &Image) -> Result<Vec<u8>> {
    let width = u32::try_from(img.width()).map_err(|_| unsupported(FORMAT, "width exceeds u32"))?;
    let height = u32::try_from(img.height()).map_err(|_| unsupported(FORMAT, "height exceeds u32"))?;
    let mut out = Vec::with_capacity(HEADER_LEN + 8 * img.data().len());
    out.extend_from_slice(MAGIC);
    out.extend_from_slice(&width.to_le_bytes());
    out.extend_from_slice(&height.to_le_bytes());
    out.push(DTYPE_I64);
    for v in img.data() {
        out.extend_from_slice(&v.to_le_bytes());
    }
    Ok(out)
}

pub fn decode_raster(bytes: &[u8]) -> Result<Image> {
    if bytes.len() < HEADER_LEN {
        return Err(malformed(FORMAT, format!("{} bytes is shorter than the header", bytes.len())));
    }
    if &bytes[..4] != MAGIC {
        return Err(malformed(FORMAT, "bad magic"));
    }
    let width = u32::from_le_bytes(bytes[4..8].try_into().expect("4 bytes")) as usize;
    let height = u32::from_le_bytes(bytes[8..12].try_into().expect("4 bytes")) as usize;
    if bytes[12] != DTYPE_I64 {
        return Err(unsupported(FORMAT, format!("dtype code {}", bytes[12])));
    }
    let payload = &bytes[HEADER_LEN..];
    let expected = width
        .checked_mul(height)
        .and_then(|n| n.checked_mul(8))
        .ok_or_else(|| malformed(FORMAT, "dimensions overflow"))?;
    if payload.len() != expected {
        return Err(malformed(
            FORMAT,
            format!("payload is {} bytes, expected {expected} for {width}x{height}", payload.len()),
        ));
    }
    let data = payload
        .chunks_exact(8)
        .map(|c| i64::from_le_bytes(c.try_into().expect("8 bytes")))
        .collect();
    Ok(Image::new(width, height, data)?)
}

pub fn write_raster(path: impl AsRef<Path>, img: &Image) -> Result<()> {
    std::fs::write(path, encode_raster(img)?)?;
    Ok(())
}

pub fn read_raster(path: impl AsRef<Path>) -> Result<Image> {
    decode_raster(&std::fs::read(path)?)
}
