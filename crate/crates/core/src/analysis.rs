//! Addition counts, approximation errors and the series behind the
//! complexity and accuracy plots.
//!
//! Pass/fail style comparisons are done on exact integers and rationals.
//! The `norm_*` fields are `f64` and meant for reporting only.

use num_rational::Ratio;
use num_traits::Zero;
use rayon::prelude::*;

use crate::fht::SplitStrategy;
use crate::oracle::count_additions_tree;
use crate::patterns::fill_pattern;

/// Sizes swept by default, matching the published plots.
pub const DEFAULT_N_MAX: usize = 4096;

/// Sizes checked individually in fast mode on top of `1..=1024`.
pub const FAST_SENTINELS: [usize; 4] = [1451, 2048, 4095, 4096];

/// Sizes conjectured to carry the highest peaks of the normalized error of
/// the simple strategy: `n₀ = 23`, `n_{k+1} = 2·n_k + (−1)^(k+1)`.
pub const SIMPLE_PEAK_SIZES: [usize; 7] = [23, 45, 91, 181, 363, 725, 1451];

#[inline]
fn floor_log2(n: usize) -> u32 {
    debug_assert!(n >= 1);
    usize::BITS - 1 - n.leading_zeros()
}

/// `log₂ n`, exact for powers of two.
fn log2(n: usize) -> f64 {
    if n.is_power_of_two() {
        n.trailing_zeros() as f64
    } else {
        (n as f64).log2()
    }
}

/// Closed form of the addition count for the simple strategy on `n x n`:
/// `(⌊log₂n⌋ + 2)·n² − 2^(⌊log₂n⌋+1)·n`.
pub fn closed_form_f_simple(n: usize) -> u64 {
    assert!(n >= 1, "n must be positive");
    let q = floor_log2(n) as u64;
    let n = n as u64;
    (q + 2) * n * n - (1u64 << (q + 1)) * n
}

/// Addition count of the tweaked strategy at `n = 2^k + 1`:
/// `(2^k + 1)·(2^k + 1 + k·2^k)`.
pub fn tweaked_peak_count(k: u32) -> u64 {
    let p = 1u64 << k;
    (p + 1) * (p + 1 + k as u64 * p)
}

/// Upper bound on the tweaked strategy's approximation error:
/// `⌊log₂n⌋/6 + 1 − 2^(−⌊log₂n⌋)`.
pub fn tweaked_error_bound(n: usize) -> Ratio<i64> {
    assert!(n >= 1, "n must be positive");
    let q = floor_log2(n) as i64;
    Ratio::new(q, 6) + Ratio::from_integer(1) - Ratio::new(1, 1i64 << q)
}

/// `5·log₃2/3`, the largest value of `f_S(n)/(n² log₂ n)`.
pub fn simple_complexity_constant() -> f64 {
    5.0 / (3.0 * 3f64.log2())
}

/// `81·log₁₇2/17`, the largest value of `f_T(n)/(n² log₂ n)`.
pub fn tweaked_complexity_constant() -> f64 {
    81.0 / (17.0 * 17f64.log2())
}

/// Maximum over slopes of the vertical deviation between each generating
/// pattern and its ideal line, exactly.
pub fn max_orthotropic_error(n: usize, strategy: SplitStrategy) -> Ratio<i64> {
    assert!(n >= 1, "n must be positive");
    if n == 1 {
        return Ratio::zero();
    }
    let num = if n <= MAX_FAST_WIDTH {
        max_scaled_deviation(n, strategy)
    } else {
        max_scaled_deviation_wide(n, strategy)
    };
    Ratio::new(num as i64, (n - 1) as i64)
}

/// Widest `n` whose products `x·t` and `pat(x)·(n−1)` fit in `i32`.
const MAX_FAST_WIDTH: usize = 46_340;

fn max_scaled_deviation_wide(n: usize, strategy: SplitStrategy) -> u64 {
    let den = (n - 1) as i64;
    let mut pat = vec![0i64; n];
    (0..n)
        .map(|t| {
            fill_pattern(t, strategy, &mut pat);
            pat.iter()
                .enumerate()
                .map(|(x, &y)| (x as i64 * t as i64 - y * den).unsigned_abs())
                .max()
                .unwrap_or(0)
        })
        .max()
        .unwrap_or(0)
}

/// `max over t, x of |x·t − pat_t(x)·(n−1)|`.
///
/// Instead of building one pattern per slope, the split tree is walked once
/// while carrying, for every root slope `t`, the node's sub-slope and the
/// vertical offset of its sub-pattern. Each node is then a few passes over
/// arrays of length `n`.
fn max_scaled_deviation(n: usize, strategy: SplitStrategy) -> u64 {
    struct Walk {
        strategy: SplitStrategy,
        /// `x·t` at `x = 1` is `t`, so leaves only need `t` and `n − 1`.
        slopes: Vec<i32>,
        den: i32,
        /// Scratch buffers per tree depth: (sub-slope, offset) of a right child.
        scratch: Vec<(Vec<i32>, Vec<i32>)>,
        worst: i32,
    }

    impl Walk {
        fn leaf(&mut self, x: usize, base: &[i32]) {
            let x = x as i32;
            let den = self.den;
            let worst = self
                .slopes
                .iter()
                .zip(base)
                .map(|(&t, &b)| dev(x, t, b, den))
                .max()
                .unwrap_or(0);
            self.worst = self.worst.max(worst);
        }

        fn pair(&mut self, x0: usize, slope: &[i32], base: &[i32]) {
            let (x0, x1) = (x0 as i32, x0 as i32 + 1);
            let den = self.den;
            let worst = self
                .slopes
                .iter()
                .zip(slope)
                .zip(base)
                .map(|((&t, &s), &b)| dev(x0, t, b, den).max(dev(x1, t, b + s, den)))
                .max()
                .unwrap_or(0);
            self.worst = self.worst.max(worst);
        }

        fn node(&mut self, depth: usize, w: usize, x0: usize, slope: &[i32], base: &[i32]) {
            match w {
                1 => return self.leaf(x0, base),
                // Two single columns: offsets `base` and `base + slope`.
                2 => return self.pair(x0, slope, base),
                _ => {}
            }
            let (w0, w1) = self.strategy.split(w);
            let den = (w - 1) as i32;
            // Sub-slope tables indexed by this node's slope, which is < w.
            let round = |s: i32, part: usize| (2 * s * (part as i32 - 1) + den) / (2 * den);
            let left_table: Vec<i32> = (0..w as i32).map(|s| round(s, w0)).collect();
            let right_table: Vec<i32> = (0..w as i32).map(|s| round(s, w1)).collect();

            if self.scratch.len() <= depth {
                self.scratch.push((vec![0; slope.len()], vec![0; slope.len()]));
            }
            let (mut r_slope, mut r_base) = std::mem::take(&mut self.scratch[depth]);
            for (((rs, rb), &s), &b) in r_slope.iter_mut().zip(r_base.iter_mut()).zip(slope).zip(base) {
                *rs = right_table[s as usize];
                *rb = b + s - *rs;
            }
            self.node(depth + 1, w1, x0 + w0, &r_slope, &r_base);
            self.scratch[depth] = (r_slope, r_base);

            if w0 == 1 {
                self.leaf(x0, base);
            } else {
                // The left child keeps the parent's offset.
                let l_slope: Vec<i32> = slope.iter().map(|&s| left_table[s as usize]).collect();
                self.node(depth + 1, w0, x0, &l_slope, base);
            }
        }
    }

    /// `|x·t − y·den|`; every operand is below `n` and `n ≤ MAX_FAST_WIDTH`,
    /// so nothing wraps.
    #[inline(always)]
    fn dev(x: i32, t: i32, y: i32, den: i32) -> i32 {
        x.wrapping_mul(t).wrapping_sub(y.wrapping_mul(den)).wrapping_abs()
    }

    let slopes: Vec<i32> = (0..n as i32).collect();
    let mut walk = Walk { strategy, slopes: slopes.clone(), den: (n - 1) as i32, scratch: Vec::new(), worst: 0 };
    walk.node(0, n, 0, &slopes, &vec![0; n]);
    walk.worst as u64
}

#[derive(Debug, Clone, PartialEq)]
pub struct ComplexityRecord {
    pub n: usize,
    pub f_simple: u64,
    pub f_tweaked: u64,
    /// `f_simple / (n² log₂ n)`; `None` at `n = 1`.
    pub norm_simple: Option<f64>,
    pub norm_tweaked: Option<f64>,
}

impl ComplexityRecord {
    pub fn new(n: usize) -> Self {
        let f_simple = count_additions_tree(n, n, SplitStrategy::Simple);
        let f_tweaked = count_additions_tree(n, n, SplitStrategy::Tweaked);
        let scale = (n > 1).then(|| (n as f64) * (n as f64) * log2(n));
        Self {
            n,
            f_simple,
            f_tweaked,
            norm_simple: scale.map(|d| f_simple as f64 / d),
            norm_tweaked: scale.map(|d| f_tweaked as f64 / d),
        }
    }
}

pub fn complexity_series(n_max: usize) -> Vec<ComplexityRecord> {
    (1..=n_max).into_par_iter().map(ComplexityRecord::new).collect()
}

#[derive(Debug, Clone, PartialEq)]
pub struct ErrorRecord {
    pub n: usize,
    pub e_simple: Ratio<i64>,
    pub e_tweaked: Ratio<i64>,
    pub bound: Ratio<i64>,
    /// `e_simple / (log₂ n / 6)`; `None` at `n = 1`.
    pub norm_simple: Option<f64>,
    pub norm_tweaked: Option<f64>,
}

impl ErrorRecord {
    pub fn new(n: usize) -> Self {
        let e_simple = max_orthotropic_error(n, SplitStrategy::Simple);
        let e_tweaked = if n.is_power_of_two() {
            e_simple
        } else {
            max_orthotropic_error(n, SplitStrategy::Tweaked)
        };
        let scale = (n > 1).then(|| log2(n) / 6.0);
        let norm = |e: Ratio<i64>| scale.map(|d| ratio_to_f64(e) / d);
        Self {
            n,
            e_simple,
            e_tweaked,
            bound: tweaked_error_bound(n),
            norm_simple: norm(e_simple),
            norm_tweaked: norm(e_tweaked),
        }
    }

    /// The simple strategy's error lies strictly above the tweaked bound.
    pub fn simple_exceeds_bound(&self) -> bool {
        self.e_simple > self.bound
    }
}

pub(crate) fn ratio_to_f64(r: Ratio<i64>) -> f64 {
    *r.numer() as f64 / *r.denom() as f64
}

/// `1..=1024` followed by the sentinels, ascending.
pub fn fast_sizes() -> Vec<usize> {
    let mut sizes: Vec<usize> = (1..=1024).collect();
    sizes.extend(FAST_SENTINELS);
    sizes
}

/// Computes error records for `sizes` and hands them to `sink` in the given
/// order. Work is spread over the rayon pool in chunks so callers can write
/// results out as they arrive.
pub fn error_series_with(sizes: &[usize], mut sink: impl FnMut(ErrorRecord)) {
    const CHUNK: usize = 32;
    for chunk in sizes.chunks(CHUNK) {
        let records: Vec<ErrorRecord> = chunk.par_iter().map(|&n| ErrorRecord::new(n)).collect();
        records.into_iter().for_each(&mut sink);
    }
}

pub fn error_series(n_max: usize) -> Vec<ErrorRecord> {
    let sizes: Vec<usize> = (1..=n_max).collect();
    let mut out = Vec::with_capacity(n_max);
    error_series_with(&sizes, |r| out.push(r));
    out
}

/// Share of sizes whose simple-strategy error is strictly above the tweaked
/// bound. Returns `0` for an empty slice.
pub fn separation_fraction_of(records: &[ErrorRecord]) -> Ratio<u64> {
    if records.is_empty() {
        return Ratio::zero();
    }
    let above = records.iter().filter(|r| r.simple_exceeds_bound()).count();
    Ratio::new(above as u64, records.len() as u64)
}

/// Share of `n ∈ [1, n_max]` with `E_S(n)` strictly above the tweaked bound.
pub fn separation_fraction(n_max: usize) -> Ratio<u64> {
    assert!(n_max >= 1, "n_max must be positive");
    let sizes: Vec<usize> = (1..=n_max).collect();
    let above: usize = sizes
        .par_iter()
        .filter(|&&n| max_orthotropic_error(n, SplitStrategy::Simple) > tweaked_error_bound(n))
        .count();
    Ratio::new(above as u64, n_max as u64)
}
