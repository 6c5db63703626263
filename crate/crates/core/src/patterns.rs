//! Generating dyadic patterns: the discrete lines the transform sums along.

use crate::error::{contract, Result};
use crate::fht::{sub_slope, SplitStrategy};

/// Discrete approximation of the line `y = x·t/(n−1)` over `x ∈ [0, n)`.
///
/// `values[x]` is the row offset at column `x`. Values are not wrapped; the
/// transform applies the vertical wrap when it adds a shift.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Pattern {
    pub n: usize,
    pub t: usize,
    pub values: Vec<i64>,
}

/// Builds the generating pattern for width `n` and slope `t` by recursion:
/// split `n`, build both sub-patterns for the rounded sub-slopes, lift the
/// right one by `t − t₁` and concatenate.
pub fn fht2d_pattern(n: usize, t: usize, strategy: SplitStrategy) -> Result<Pattern> {
    if n == 0 {
        return Err(contract("pattern width must be positive"));
    }
    if t >= n {
        return Err(contract(format!("slope {t} outside [0, {n})")));
    }
    Ok(Pattern { n, t, values: build(n, t, strategy) })
}

fn build(n: usize, t: usize, strategy: SplitStrategy) -> Vec<i64> {
    if n == 1 {
        return vec![0];
    }
    let (n0, n1) = strategy.split(n);
    let (t0, t1) = (sub_slope(t, n0, n), sub_slope(t, n1, n));
    let mut values = build(n0, t0, strategy);
    let lift = (t - t1) as i64;
    values.extend(build(n1, t1, strategy).into_iter().map(|v| v + lift));
    values
}

/// All `n` generating patterns, in slope order.
pub fn pattern_set(n: usize, strategy: SplitStrategy) -> Result<Vec<Pattern>> {
    if n == 0 {
        return Err(contract("pattern width must be positive"));
    }
    (0..n).map(|t| fht2d_pattern(n, t, strategy)).collect()
}

/// Writes the pattern for `(out.len(), t)` into `out` in one pass over the
/// split tree, without intermediate allocations.
pub(crate) fn fill_pattern(t: usize, strategy: SplitStrategy, out: &mut [i64]) {
    fn go(t: usize, base: i64, strategy: SplitStrategy, out: &mut [i64]) {
        let n = out.len();
        if n == 1 {
            out[0] = base;
            return;
        }
        let (n0, n1) = strategy.split(n);
        let (t0, t1) = (sub_slope(t, n0, n), sub_slope(t, n1, n));
        let (left, right) = out.split_at_mut(n0);
        go(t0, base, strategy, left);
        go(t1, base + (t - t1) as i64, strategy, right);
    }
    debug_assert!(t < out.len());
    go(t, 0, strategy, out);
}
