use crate::error::{FhtError, Result};

/// Rectangular grid of 64-bit accumulators.
///
/// Values are stored row-major with `x` fastest: the value at column `x`,
/// row `y` lives at `data[y * width + x]`. The same layout is used by the
/// raster file format.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Image {
    width: usize,
    height: usize,
    data: Vec<i64>,
}

/// Output of the transform. Same layout as [`Image`]: the column index is the
/// slope `t` and the row index is the shift `s`, so `J(t, s)` is `get(t, s)`.
pub type HoughImage = Image;

impl Image {
    pub fn new(width: usize, height: usize, data: Vec<i64>) -> Result<Self> {
        if width == 0 || height == 0 || width.checked_mul(height) != Some(data.len()) {
            return Err(FhtError::Shape { width, height, len: data.len() });
        }
        Ok(Self { width, height, data })
    }

    pub fn zeros(width: usize, height: usize) -> Result<Self> {
        let len = width
            .checked_mul(height)
            .ok_or(FhtError::Shape { width, height, len: 0 })?;
        Self::new(width, height, vec![0; len])
    }

    /// Builds an image by evaluating `f(x, y)` at every pixel.
    pub fn from_fn(width: usize, height: usize, mut f: impl FnMut(usize, usize) -> i64) -> Result<Self> {
        let mut data = Vec::with_capacity(width.saturating_mul(height));
        for y in 0..height {
            for x in 0..width {
                data.push(f(x, y));
            }
        }
        Self::new(width, height, data)
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn data(&self) -> &[i64] {
        &self.data
    }

    pub fn into_data(self) -> Vec<i64> {
        self.data
    }

    #[inline]
    pub fn get(&self, x: usize, y: usize) -> i64 {
        debug_assert!(x < self.width && y < self.height);
        self.data[y * self.width + x]
    }

    #[inline]
    pub fn set(&mut self, x: usize, y: usize, v: i64) {
        debug_assert!(x < self.width && y < self.height);
        self.data[y * self.width + x] = v;
    }

    /// Largest absolute value, `0` for an all-zero image.
    pub fn max_abs(&self) -> u64 {
        self.data.iter().map(|v| v.unsigned_abs()).max().unwrap_or(0)
    }

    /// Column `x` as a vector of `height` values.
    pub fn column(&self, x: usize) -> Vec<i64> {
        (0..self.height).map(|y| self.get(x, y)).collect()
    }

    /// Mirror left-right: column `x` moves to `width - 1 - x`.
    pub fn flip_horizontal(&self) -> Self {
        Self::from_fn(self.width, self.height, |x, y| self.get(self.width - 1 - x, y))
            .expect("shape preserved")
    }

    /// Swap the axes, so the result is `height x width`.
    pub fn transpose(&self) -> Self {
        Self::from_fn(self.height, self.width, |x, y| self.get(y, x)).expect("shape preserved")
    }

    /// Cyclically shifts rows: the result at `(x, y)` is the input at `(x, (y + r) mod h)`.
    pub fn shift_rows(&self, r: usize) -> Self {
        let h = self.height;
        Self::from_fn(self.width, h, |x, y| self.get(x, (y + r) % h)).expect("shape preserved")
    }
}
