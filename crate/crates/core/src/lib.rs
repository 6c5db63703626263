//! Fast Hough (discrete Radon) transform for images of arbitrary size.
//!
//! The transform sums image values along dyadic line patterns using a
//! divide-and-conquer scheme in the spirit of Brady and Yong. Two ways of
//! splitting a non-power-of-two width are provided:
//!
//! * [`SplitStrategy::Simple`] bisects the width (`⌊w/2⌋, ⌈w/2⌉`);
//! * [`SplitStrategy::Tweaked`] cuts off the largest power of two below the width.
//!
//! Both coincide with the classic algorithm when the width is a power of two.
//! Besides the transform itself the crate exposes the generating patterns,
//! slow reference implementations and analyzers for the addition count and
//! the line approximation error.

pub mod analysis;
mod error;
pub mod fht;
mod image;
pub mod oracle;
pub mod patterns;

pub use error::{FhtError, Result};
pub use fht::{fht2d, fht2d_counted, rotate, round_half_up_ratio, split_simple, split_tweaked, SplitStrategy};
pub use image::{HoughImage, Image};
pub use patterns::{fht2d_pattern, pattern_set, Pattern};
