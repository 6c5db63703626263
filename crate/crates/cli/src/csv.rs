//! CSV output. Non-integer numbers are rendered with 12 significant digits,
//! rounding half to even, and trailing zeros dropped, so files are
//! byte-identical across runs and platforms.

use std::io::Write;

use fht_core::analysis::{ComplexityRecord, ErrorRecord};
use fht_core::HoughImage;
use num_rational::Ratio;
use num_traits::{Signed, Zero};

pub const SIGNIFICANT_DIGITS: u32 = 12;

pub const COMPLEXITY_HEADER: &str = "n,f_simple,f_tweaked,norm_simple,norm_tweaked";
pub const ERROR_HEADER: &str = "n,e_simple,e_tweaked,bound,norm_simple,norm_tweaked";

/// Exact decimal rendering of a fraction.
pub fn format_ratio(r: Ratio<i64>) -> String {
    if r.is_zero() {
        return "0".to_owned();
    }
    let sign = if r.is_negative() { "-" } else { "" };
    let num = r.numer().unsigned_abs() as u128;
    let den = *r.denom() as u128;

    // Decimal exponent e with 10^e <= num/den < 10^(e+1).
    // num/den >= 10^e
    let at_least = |e: i32| if e >= 0 { num >= den * pow10(e) } else { num * pow10(-e) >= den };
    let mut e: i32 = 0;
    while at_least(e + 1) {
        e += 1;
    }
    while !at_least(e) {
        e -= 1;
    }

    // mantissa = round_half_even(num/den · 10^(digits−1−e))
    let shift = SIGNIFICANT_DIGITS as i32 - 1 - e;
    let (scaled_num, scaled_den) = if shift >= 0 { (num * pow10(shift), den) } else { (num, den * pow10(-shift)) };
    let mut mantissa = scaled_num / scaled_den;
    let rem = scaled_num % scaled_den;
    if 2 * rem > scaled_den || (2 * rem == scaled_den && mantissa % 2 == 1) {
        mantissa += 1;
    }
    if mantissa == pow10(SIGNIFICANT_DIGITS as i32) {
        mantissa /= 10;
        e += 1;
    }
    format!("{sign}{}", place_point(&mantissa.to_string(), e))
}

/// Rendering of a double; the rounding is the standard library's exact
/// decimal conversion.
pub fn format_f64(v: f64) -> String {
    if v == 0.0 {
        return "0".to_owned();
    }
    assert!(v.is_finite(), "cannot render {v}");
    let s = format!("{:.*e}", SIGNIFICANT_DIGITS as usize - 1, v);
    let (mantissa, exp) = s.split_once('e').expect("scientific notation");
    let (sign, mantissa) = match mantissa.strip_prefix('-') {
        Some(m) => ("-", m),
        None => ("", mantissa),
    };
    let digits: String = mantissa.chars().filter(|c| *c != '.').collect();
    format!("{sign}{}", place_point(&digits, exp.parse().expect("exponent")))
}

fn pow10(e: i32) -> u128 {
    debug_assert!(e >= 0);
    10u128.pow(e as u32)
}

/// Places the decimal point in `digits` (first digit has weight `10^e`) and
/// trims trailing fractional zeros.
fn place_point(digits: &str, e: i32) -> String {
    let n = digits.len() as i32;
    let mut out = if e < 0 {
        format!("0.{}{}", "0".repeat((-e - 1) as usize), digits)
    } else if e + 1 >= n {
        format!("{}{}", digits, "0".repeat((e + 1 - n) as usize))
    } else {
        let (int, frac) = digits.split_at((e + 1) as usize);
        format!("{int}.{frac}")
    };
    if out.contains('.') {
        while out.ends_with('0') {
            out.pop();
        }
        if out.ends_with('.') {
            out.pop();
        }
    }
    out
}

fn optional(v: Option<f64>) -> String {
    v.map(format_f64).unwrap_or_default()
}

pub fn complexity_row(r: &ComplexityRecord) -> String {
    format!(
        "{},{},{},{},{}",
        r.n,
        r.f_simple,
        r.f_tweaked,
        optional(r.norm_simple),
        optional(r.norm_tweaked)
    )
}

pub fn error_row(r: &ErrorRecord) -> String {
    format!(
        "{},{},{},{},{},{}",
        r.n,
        format_ratio(r.e_simple),
        format_ratio(r.e_tweaked),
        format_ratio(r.bound),
        optional(r.norm_simple),
        optional(r.norm_tweaked)
    )
}

/// One line per shift `s`, one column per slope `t`.
pub fn write_hough_csv(mut out: impl Write, j: &HoughImage) -> std::io::Result<()> {
    for row in j.data().chunks_exact(j.width()) {
        let line: Vec<String> = row.iter().map(i64::to_string).collect();
        writeln!(out, "{}", line.join(","))?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> Ratio<i64> {
        Ratio::new(n, d)
    }

    #[test]
    fn ratio_rendering() {
        assert_eq!(format_ratio(r(0, 1)), "0");
        assert_eq!(format_ratio(r(1, 3)), "0.333333333333");
        assert_eq!(format_ratio(r(2, 3)), "0.666666666667");
        assert_eq!(format_ratio(r(13, 12)), "1.08333333333");
        assert_eq!(format_ratio(r(3, 1)), "3");
        assert_eq!(format_ratio(r(12288 - 1, 4096)), "2.99975585938");
        assert_eq!(format_ratio(r(1, 4095)), "0.0002442002442");
        assert_eq!(format_ratio(r(-1, 8)), "-0.125");
        assert_eq!(format_ratio(r(123_456_789_012_345, 1)), "123456789012000");
        assert_eq!(format_ratio(r(9_999_999_999_995, 10)), "1000000000000");
    }

    #[test]
    fn ratio_ties_round_to_even() {
        // 13 significant digits ending in 5: exact ties.
        assert_eq!(format_ratio(r(1_000_000_000_005, 1_000_000_000_000)), "1");
        assert_eq!(format_ratio(r(1_000_000_000_015, 1_000_000_000_000)), "1.00000000002");
        assert_eq!(format_ratio(r(2_000_000_000_025, 10)), "200000000002");
    }

    #[test]
    fn float_rendering() {
        assert_eq!(format_f64(0.0), "0");
        assert_eq!(format_f64(1.0), "1");
        assert_eq!(format_f64(0.125), "0.125");
        assert_eq!(format_f64(5.0 / (3.0 * 3f64.log2())), "1.05154958929");
        assert_eq!(format_f64(1e-5), "0.00001");
        assert_eq!(format_f64(-2.5), "-2.5");
        assert_eq!(format_f64(1234567.0), "1234567");
    }

    #[test]
    fn ratio_and_float_agree_off_ties() {
        for d in 1..200 {
            for n in 0..3 * d {
                assert_eq!(format_ratio(r(n, d)), format_f64(n as f64 / d as f64), "{n}/{d}");
            }
        }
    }

    #[test]
    fn hough_csv_layout() {
        let j = HoughImage::new(2, 2, vec![11, 1001, 1100, 110]).unwrap();
        let mut out = Vec::new();
        write_hough_csv(&mut out, &j).unwrap();
        assert_eq!(String::from_utf8(out).unwrap(), "11,1001\n1100,110\n");
    }
}
