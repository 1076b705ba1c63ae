//! Deterministic decimal rendering for CSV output.
//!
//! Values are rounded to 12 significant digits and written in plain decimal
//! notation with trailing fractional zeros trimmed, so identical runs emit
//! byte-identical files.

use crate::rational::{to_f64, Rational};

/// Renders a float at 12 significant digits.
pub fn fmt_sig(x: f64) -> String {
    fmt_sig_n(x, 12)
}

/// Renders an exact rational in decimal at 12 significant digits.
pub fn fmt_rational(r: Rational) -> String {
    fmt_sig(to_f64(r))
}

fn fmt_sig_n(x: f64, sig: i32) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    assert!(x.is_finite(), "cannot render non-finite value");
    let magnitude = x.abs().log10().floor() as i32;
    let decimals = (sig - 1 - magnitude).clamp(0, 17) as usize;
    let s = format!("{x:.decimals$}");
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    #[test]
    fn plain_decimals() {
        assert_eq!(fmt_sig(0.0), "0");
        assert_eq!(fmt_sig(25.0), "25");
        assert_eq!(fmt_sig(0.06), "0.06");
        assert_eq!(fmt_sig(-1.5), "-1.5");
        assert_eq!(fmt_sig(1e-4), "0.0001");
    }

    #[test]
    fn twelve_significant_digits() {
        assert_eq!(fmt_rational(rat(2, 3)), "0.666666666667");
        assert_eq!(fmt_rational(rat(1, 3)), "0.333333333333");
        assert_eq!(fmt_sig(1.0 / 7.0), "0.142857142857");
    }
}
