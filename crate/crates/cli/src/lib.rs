//! File formats and helpers behind the `fht` command-line tool.
//!
//! * [`pgm`]: grayscale PGM input (`P2` and `P5`, up to 16-bit samples);
//! * [`raster`]: the `FHT1` binary raster for images and Hough images;
//! * [`csv`]: byte-reproducible CSV output for Hough images and analysis series;
//! * [`quadrants`]: the four-quadrant transform covering every line direction.

pub mod csv;
mod error;
pub mod pgm;
pub mod quadrants;
pub mod raster;

pub use error::{FormatError, Result};
