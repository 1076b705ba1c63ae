//! Exact rational scalars shared by all analytic modules.

use num::rational::Ratio;
use num::{Signed, Zero};

/// Exact rational number; every breakpoint, multiplexing gain and diversity
/// value on the analytic side of the crate is one of these.
///
/// Backed by `i128` so that chained exact operations (crossing points of
/// crossing points) have ample headroom before overflow.
pub type Rational = Ratio<i128>;

/// Shorthand constructor, `rat(2, 5)` is 2/5.
///
/// Panics if `den == 0`.
pub fn rat(num: i64, den: i64) -> Rational {
    Ratio::new(i128::from(num), i128::from(den))
}

/// The `(x)+ = max(0, x)` clamp used throughout DMT expressions.
pub fn pos(x: Rational) -> Rational {
    if x.is_negative() {
        Rational::zero()
    } else {
        x
    }
}

/// Parses `"2"`, `"-3/4"` or `"0.125"` into an exact rational.
///
/// Decimal strings convert exactly (`"0.01"` is 1/100, not the nearest
/// float), which is what keeps CLI grids exact.
pub fn parse_rational(s: &str) -> Result<Rational, String> {
    let s = s.trim();
    if s.is_empty() {
        return Err("empty rational literal".into());
    }
    if let Some((n, d)) = s.split_once('/') {
        let num: i128 = n
            .trim()
            .parse()
            .map_err(|_| format!("bad numerator in {s:?}"))?;
        let den: i128 = d
            .trim()
            .parse()
            .map_err(|_| format!("bad denominator in {s:?}"))?;
        if den == 0 {
            return Err(format!("zero denominator in {s:?}"));
        }
        return Ok(Ratio::new(num, den));
    }
    if let Some((int, frac)) = s.split_once('.') {
        if frac.len() > 15 || !frac.chars().all(|c| c.is_ascii_digit()) {
            return Err(format!("bad decimal literal {s:?}"));
        }
        let (sign, int) = match int.strip_prefix('-') {
            Some(rest) => (-1i128, rest),
            None => (1i128, int),
        };
        let whole: i128 = if int.is_empty() {
            0
        } else {
            int.parse().map_err(|_| format!("bad decimal literal {s:?}"))?
        };
        let den = 10i128.pow(frac.len() as u32);
        let frac_num: i128 = if frac.is_empty() {
            0
        } else {
            frac.parse().map_err(|_| format!("bad decimal literal {s:?}"))?
        };
        let num = whole
            .checked_mul(den)
            .and_then(|w| w.checked_add(frac_num))
            .ok_or_else(|| format!("decimal literal {s:?} out of range"))?;
        return Ok(Ratio::new(sign * num, den));
    }
    s.parse::<i128>()
        .map(Ratio::from_integer)
        .map_err(|_| format!("bad rational literal {s:?}"))
}

/// Lossy conversion for the simulator and CSV rendering.
pub fn to_f64(r: Rational) -> f64 {
    *r.numer() as f64 / *r.denom() as f64
}
