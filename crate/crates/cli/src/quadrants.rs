//! Four-quadrant transform. The core transform only covers lines that are
//! predominantly horizontal with non-negative slope; flips and a transpose
//! of the input cover the remaining directions.

use fht_core::{fht2d_counted, HoughImage, Image, SplitStrategy};

use crate::error::Result;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuadrantSet {
    /// Mostly horizontal lines rising with `x`: the plain transform.
    pub horizontal_positive: HoughImage,
    /// Mostly horizontal lines falling with `x`: transform of the left-right
    /// mirrored input. Row `t` is slope `−t` on the original image, measured
    /// from the rightmost column.
    pub horizontal_negative: HoughImage,
    /// Mostly vertical lines: transform of the transposed input.
    pub vertical_positive: HoughImage,
    /// Transform of the transposed, then left-right mirrored input.
    pub vertical_negative: HoughImage,
}

impl QuadrantSet {
    pub const SUFFIXES: [&'static str; 4] = ["hpos", "hneg", "vpos", "vneg"];

    /// Quadrants paired with their file suffixes, in a fixed order.
    pub fn named(&self) -> [(&'static str, &HoughImage); 4] {
        [
            (Self::SUFFIXES[0], &self.horizontal_positive),
            (Self::SUFFIXES[1], &self.horizontal_negative),
            (Self::SUFFIXES[2], &self.vertical_positive),
            (Self::SUFFIXES[3], &self.vertical_negative),
        ]
    }
}

/// The inputs fed to the core transform for each quadrant, in [`QuadrantSet::SUFFIXES`] order.
pub fn quadrant_inputs(img: &Image) -> [Image; 4] {
    let transposed = img.transpose();
    let transposed_flipped = transposed.flip_horizontal();
    [img.clone(), img.flip_horizontal(), transposed, transposed_flipped]
}

/// Runs all four quadrants and returns them with their addition counts.
pub fn quadrants_counted(img: &Image, strategy: SplitStrategy) -> Result<(QuadrantSet, [u64; 4])> {
    let [a, b, c, d] = quadrant_inputs(img);
    let (hp, n0) = fht2d_counted(&a, strategy)?;
    let (hn, n1) = fht2d_counted(&b, strategy)?;
    let (vp, n2) = fht2d_counted(&c, strategy)?;
    let (vn, n3) = fht2d_counted(&d, strategy)?;
    let set = QuadrantSet {
        horizontal_positive: hp,
        horizontal_negative: hn,
        vertical_positive: vp,
        vertical_negative: vn,
    };
    Ok((set, [n0, n1, n2, n3]))
}

pub fn quadrants(img: &Image, strategy: SplitStrategy) -> Result<QuadrantSet> {
    quadrants_counted(img, strategy).map(|(set, _)| set)
}
