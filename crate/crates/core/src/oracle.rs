//! Slow reference implementations. They share no code path with the fast
//! transform beyond the pattern builder and exist to validate it.

use num_rational::Ratio;

use crate::error::{FhtError, Result};
use crate::fht::SplitStrategy;
use crate::image::{HoughImage, Image};
use crate::patterns::{fht2d_pattern, Pattern};

/// Direct summation along every shifted pattern, `Θ(w²h)`.
pub fn slow_hough(img: &Image, strategy: SplitStrategy) -> Result<HoughImage> {
    let (w, h) = (img.width(), img.height());
    let max_abs = img.max_abs();
    if (w as u128) * (max_abs as u128) >= 1u128 << 62 {
        return Err(FhtError::Overflow { width: w, max_abs });
    }
    let mut out = Image::zeros(w, h)?;
    for t in 0..w {
        let pat = fht2d_pattern(w, t, strategy)?;
        for s in 0..h {
            let sum = pat
                .values
                .iter()
                .enumerate()
                .map(|(x, &y)| img.get(x, (y + s as i64).rem_euclid(h as i64) as usize))
                .sum();
            out.set(t, s, sum);
        }
    }
    Ok(out)
}

/// Additions done by the transform of a `w x h` image, counted on the split
/// tree: every inner node of width `m` costs `m·h`.
pub fn count_additions_tree(w: usize, h: usize, strategy: SplitStrategy) -> u64 {
    if w <= 1 {
        return 0;
    }
    let (w0, w1) = match strategy {
        SplitStrategy::Simple => (w / 2, w.div_ceil(2)),
        SplitStrategy::Tweaked => {
            let mut p = 1;
            while 2 * p < w {
                p *= 2;
            }
            (p, w - p)
        }
    };
    (w * h) as u64 + count_additions_tree(w0, h, strategy) + count_additions_tree(w1, h, strategy)
}

/// Largest vertical distance between the pattern and its ideal line
/// `y = x·t/(n−1)`, as an exact fraction over `n − 1`.
pub fn line_error(pat: &Pattern) -> Ratio<i64> {
    let n = pat.values.len();
    if n <= 1 {
        return Ratio::from_integer(0);
    }
    let den = (n - 1) as i64;
    let t = pat.t as i64;
    let num = pat
        .values
        .iter()
        .enumerate()
        .map(|(x, &y)| (x as i64 * t - y * den).abs())
        .max()
        .unwrap_or(0);
    Ratio::new(num, den)
}

#[cfg(test)]
mod tests {
    use super::*;
    use SplitStrategy::*;

    #[test]
    fn identity_on_single_column() {
        let img = Image::new(1, 3, vec![4, -5, 6]).unwrap();
        assert_eq!(slow_hough(&img, Simple).unwrap(), img);
    }

    #[test]
    fn two_by_two_table() {
        let img = Image::new(2, 2, vec![1, 10, 100, 1000]).unwrap();
        let j = slow_hough(&img, Tweaked).unwrap();
        assert_eq!(j.data(), &[11, 1001, 1100, 110]);
    }

    #[test]
    fn all_ones_gives_width() {
        for n in 1..12 {
            let img = Image::from_fn(n, n, |_, _| 1).unwrap();
            for s in SplitStrategy::ALL {
                assert!(slow_hough(&img, s).unwrap().data().iter().all(|&v| v == n as i64));
            }
        }
    }

    #[test]
    fn tree_counts() {
        assert_eq!(count_additions_tree(1, 7, Simple), 0);
        assert_eq!(count_additions_tree(1, 7, Tweaked), 0);
        assert_eq!(count_additions_tree(3, 3, Simple), 15);
        assert_eq!(count_additions_tree(17, 17, Tweaked), 1377);
    }

    #[test]
    fn line_error_examples() {
        let p = |n, t, values| Pattern { n, t, values };
        assert_eq!(line_error(&p(1, 0, vec![0])), Ratio::from_integer(0));
        assert_eq!(line_error(&p(4, 1, vec![0, 0, 1, 1])), Ratio::new(1, 3));
        assert_eq!(line_error(&p(4, 3, vec![0, 1, 2, 3])), Ratio::from_integer(0));
    }
}
