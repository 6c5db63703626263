//! The recursive transform: split the width, transform both halves, merge
//! each slope row as `left + rotate(right, shift)`.

use crate::error::{contract, FhtError, Result};
use crate::image::{HoughImage, Image};

/// How a width `w >= 2` is divided into a left and a right part.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SplitStrategy {
    /// `(⌊w/2⌋, ⌈w/2⌉)`.
    Simple,
    /// Largest power of two strictly below `w`, then the remainder.
    Tweaked,
}

impl SplitStrategy {
    pub const ALL: [SplitStrategy; 2] = [SplitStrategy::Simple, SplitStrategy::Tweaked];

    /// Unchecked split; callers guarantee `w >= 2`.
    #[inline]
    pub(crate) fn split(self, w: usize) -> (usize, usize) {
        debug_assert!(w >= 2);
        match self {
            SplitStrategy::Simple => (w / 2, w - w / 2),
            SplitStrategy::Tweaked => {
                let left = w.next_power_of_two() / 2;
                (left, w - left)
            }
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            SplitStrategy::Simple => "simple",
            SplitStrategy::Tweaked => "tweaked",
        }
    }
}

impl std::fmt::Display for SplitStrategy {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for SplitStrategy {
    type Err = FhtError;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "simple" | "s" => Ok(SplitStrategy::Simple),
            "tweaked" | "t" => Ok(SplitStrategy::Tweaked),
            other => Err(contract(format!("unknown split strategy {other:?}"))),
        }
    }
}

pub fn split_simple(w: usize) -> Result<(usize, usize)> {
    if w < 2 {
        return Err(contract(format!("split needs w >= 2, got {w}")));
    }
    Ok(SplitStrategy::Simple.split(w))
}

pub fn split_tweaked(w: usize) -> Result<(usize, usize)> {
    if w < 2 {
        return Err(contract(format!("split needs w >= 2, got {w}")));
    }
    Ok(SplitStrategy::Tweaked.split(w))
}

/// `round(num / den)` with ties rounded up, in integer arithmetic.
pub fn round_half_up_ratio(num: u64, den: u64) -> Result<u64> {
    if den == 0 {
        return Err(contract("round_half_up_ratio with zero denominator"));
    }
    Ok(round_half_up(num as u128, den as u128) as u64)
}

#[inline]
pub(crate) fn round_half_up(num: u128, den: u128) -> u128 {
    (2 * num + den) / (2 * den)
}

/// Slope of the part of width `part` that the slope `t` of width `w` maps to.
#[inline]
pub(crate) fn sub_slope(t: usize, part: usize, w: usize) -> usize {
    if part == 1 {
        return 0;
    }
    // t < w, so the product stays below w² and fits in 64 bits for any
    // image that fits in memory.
    let (num, den) = ((t * (part - 1)) as u64, (w - 1) as u64);
    ((2 * num + den) / (2 * den)) as usize
}

/// Circular shift: `u[i] = v[(i + r) mod h]`.
pub fn rotate(v: &[i64], r: usize) -> Result<Vec<i64>> {
    if r >= v.len() {
        return Err(contract(format!("rotate by {r} outside [0, {})", v.len())));
    }
    let mut out = Vec::with_capacity(v.len());
    out.extend_from_slice(&v[r..]);
    out.extend_from_slice(&v[..r]);
    Ok(out)
}

fn check_budget(img: &Image) -> Result<()> {
    let max_abs = img.max_abs();
    if (img.width() as u128) * (max_abs as u128) >= 1u128 << 62 {
        return Err(FhtError::Overflow { width: img.width(), max_abs });
    }
    Ok(())
}

/// Computes the Hough image `J(t, s)` for every slope `t ∈ [0, w)` and shift
/// `s ∈ [0, h)`: the sum of the input along the generating pattern for
/// `(w, t)`, moved down by `s` rows with vertical wrap-around.
pub fn fht2d(img: &Image, strategy: SplitStrategy) -> Result<HoughImage> {
    fht2d_counted(img, strategy).map(|(j, _)| j)
}

/// [`fht2d`] plus the number of scalar additions done by the merges.
pub fn fht2d_counted(img: &Image, strategy: SplitStrategy) -> Result<(HoughImage, u64)> {
    check_budget(img)?;
    let (w, h) = (img.width(), img.height());

    // Column-major working copy: every column (and later every slope row) is contiguous.
    let mut cols = Vec::with_capacity(w * h);
    for x in 0..w {
        cols.extend((0..h).map(|y| img.get(x, y)));
    }

    let mut additions = 0u64;
    let rows = transform_columns(&cols, w, h, strategy, &mut additions);

    let mut out = vec![0i64; w * h];
    for (t, row) in rows.chunks_exact(h).enumerate() {
        for (s, &v) in row.iter().enumerate() {
            out[s * w + t] = v;
        }
    }
    Ok((Image::new(w, h, out)?, additions))
}

fn transform_columns(cols: &[i64], w: usize, h: usize, strategy: SplitStrategy, additions: &mut u64) -> Vec<i64> {
    if w == 1 {
        return cols.to_vec();
    }
    let (w0, w1) = strategy.split(w);
    let (left_cols, right_cols) = cols.split_at(w0 * h);
    let left = transform_columns(left_cols, w0, h, strategy, additions);
    let right = transform_columns(right_cols, w1, h, strategy, additions);

    let mut out = vec![0i64; w * h];
    for (t, row) in out.chunks_exact_mut(h).enumerate() {
        let t0 = sub_slope(t, w0, w);
        let t1 = sub_slope(t, w1, w);
        let l = &left[t0 * h..(t0 + 1) * h];
        let r = &right[t1 * h..(t1 + 1) * h];
        merge_row(row, l, r, (t - t1) % h);
    }
    *additions += (w * h) as u64;
    out
}

/// `out = l + rotate(r, shift)` without materializing the rotation.
#[inline]
fn merge_row(out: &mut [i64], l: &[i64], r: &[i64], shift: usize) {
    let h = out.len();
    let split = h - shift;
    for ((o, a), b) in out[..split].iter_mut().zip(&l[..split]).zip(&r[shift..]) {
        *o = a + b;
    }
    for ((o, a), b) in out[split..].iter_mut().zip(&l[split..]).zip(&r[..shift]) {
        *o = a + b;
    }
}
