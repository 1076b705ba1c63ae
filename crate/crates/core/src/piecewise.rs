//! Continuous piecewise-linear curves on `[0, ∞)` with exact rational
//! breakpoints.
//!
//! Every DMT curve in the crate is one of these. A curve is stored as its
//! breakpoint list; beyond the last breakpoint the function continues as a
//! constant. Curves are normalized on construction (collinear interior
//! points and redundant trailing horizontal points removed), so structural
//! equality of two curves is equality of the functions they represent.
//!
//! # Example
//!
//! ```
//! use dmtnet_core::piecewise::PiecewiseLinear;
//! use dmtnet_core::rational::rat;
//!
//! // (1 - r)+ and 3(1 - 2r)+ cross at r = 2/5.
//! let a = PiecewiseLinear::new(vec![(rat(0, 1), rat(1, 1)), (rat(1, 1), rat(0, 1))]);
//! let b = PiecewiseLinear::new(vec![(rat(0, 1), rat(3, 1)), (rat(1, 2), rat(0, 1))]);
//! let m = a.min(&b);
//! assert_eq!(m.eval(rat(2, 5)), rat(3, 5));
//! assert!(m.breakpoints().contains(&(rat(2, 5), rat(3, 5))));
//! ```

use num::{Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::rational::Rational;

/// A continuous piecewise-linear function on `[0, ∞)`, nonnegative, with
/// exact rational breakpoints and constant continuation after the last one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PiecewiseLinear {
    points: Vec<(Rational, Rational)>,
}

impl PiecewiseLinear {
    /// Builds a curve from `(x, y)` breakpoints.
    ///
    /// Panics unless the list is non-empty, starts at `x = 0`, has strictly
    /// increasing `x` and nonnegative `y` throughout.
    pub fn new(points: Vec<(Rational, Rational)>) -> Self {
        Self::validated(points).expect("invalid piecewise-linear breakpoints")
    }

    fn validated(points: Vec<(Rational, Rational)>) -> Result<Self, &'static str> {
        if points.is_empty() {
            return Err("curve must contain at least one breakpoint");
        }
        if !points[0].0.is_zero() {
            return Err("first breakpoint must be at x = 0");
        }
        for pair in points.windows(2) {
            if pair[0].0 >= pair[1].0 {
                return Err("breakpoint x-coordinates must be strictly increasing");
            }
        }
        if points.iter().any(|(_, y)| y.is_negative()) {
            return Err("breakpoint values must be nonnegative");
        }
        Ok(Self {
            points: normalize(points),
        })
    }

    /// The constant curve `r ↦ y`.
    pub fn constant(y: Rational) -> Self {
        Self::new(vec![(Rational::zero(), y)])
    }

    /// The clamped line `r ↦ (intercept − slope·r)+` for `intercept ≥ 0`.
    ///
    /// With `slope = 0` this is the constant curve. Panics on a negative
    /// intercept or slope.
    pub fn clamped_line(intercept: Rational, slope: Rational) -> Self {
        assert!(
            !intercept.is_negative() && !slope.is_negative(),
            "clamped_line expects nonnegative intercept and slope"
        );
        if slope.is_zero() || intercept.is_zero() {
            return Self::constant(intercept);
        }
        Self::new(vec![
            (Rational::zero(), intercept),
            (intercept / slope, Rational::zero()),
        ])
    }

    /// The normalized breakpoint list.
    pub fn breakpoints(&self) -> &[(Rational, Rational)] {
        &self.points
    }

    /// Evaluates the curve at `r ≥ 0`, exactly.
    ///
    /// At a stored breakpoint the stored value is returned verbatim; between
    /// breakpoints the value is exact rational interpolation; past the last
    /// breakpoint the last value continues. Panics on negative `r`.
    pub fn eval(&self, r: Rational) -> Rational {
        assert!(!r.is_negative(), "curve evaluated at negative r");
        let last = self.points.len() - 1;
        if r >= self.points[last].0 {
            return self.points[last].1;
        }
        // binary search for the segment containing r
        let idx = match self.points.binary_search_by(|(x, _)| x.cmp(&r)) {
            Ok(i) => return self.points[i].1,
            Err(i) => i - 1,
        };
        let (x0, y0) = self.points[idx];
        let (x1, y1) = self.points[idx + 1];
        y0 + (y1 - y0) * (r - x0) / (x1 - x0)
    }

    /// Exact pointwise minimum of two curves, with every crossing point
    /// inserted as a breakpoint.
    pub fn min(&self, other: &Self) -> Self {
        let mut xs: Vec<Rational> = self
            .points
            .iter()
            .chain(other.points.iter())
            .map(|&(x, _)| x)
            .collect();
        xs.sort_unstable();
        xs.dedup();

        let mut out = Vec::with_capacity(xs.len() + 2);
        for i in 0..xs.len() {
            let (ya, yb) = (self.eval(xs[i]), other.eval(xs[i]));
            out.push((xs[i], ya.min(yb)));
            if i + 1 == xs.len() {
                break;
            }
            // both curves are affine on [xs[i], xs[i+1]]; insert the crossing
            // when the difference changes sign strictly inside the interval
            let d0 = ya - yb;
            let d1 = self.eval(xs[i + 1]) - other.eval(xs[i + 1]);
            if (d0.is_positive() && d1.is_negative()) || (d0.is_negative() && d1.is_positive()) {
                let x_cross = xs[i] + (xs[i + 1] - xs[i]) * d0 / (d0 - d1);
                out.push((x_cross, self.eval(x_cross)));
            }
        }
        Self::new(out)
    }

    /// Exact pointwise minimum of a non-empty list of curves.
    pub fn pointwise_min(curves: &[Self]) -> Self {
        assert!(!curves.is_empty(), "pointwise_min of an empty curve list");
        curves
            .iter()
            .skip(1)
            .fold(curves[0].clone(), |acc, c| acc.min(c))
    }

    /// The curve `r ↦ f(a·r)` for `a > 0` (breakpoints move `x → x/a`).
    pub fn compose_scale(&self, a: Rational) -> Self {
        assert!(a.is_positive(), "compose_scale expects a > 0");
        Self::new(self.points.iter().map(|&(x, y)| (x / a, y)).collect())
    }

    /// True when the curve never increases, as every DMT curve must.
    pub fn is_non_increasing(&self) -> bool {
        self.points.windows(2).all(|p| p[0].1 >= p[1].1)
    }

    /// Samples `(r, f(r))` rows on a caller-specified grid.
    pub fn sample(&self, grid: &[Rational]) -> Vec<(Rational, Rational)> {
        grid.iter().map(|&r| (r, self.eval(r))).collect()
    }
}

/// Drops interior breakpoints collinear with their neighbors, then trailing
/// points that only restate the constant continuation.
fn normalize(points: Vec<(Rational, Rational)>) -> Vec<(Rational, Rational)> {
    let mut out: Vec<(Rational, Rational)> = Vec::with_capacity(points.len());
    for p in points {
        while out.len() >= 2 && collinear(out[out.len() - 2], out[out.len() - 1], p) {
            out.pop();
        }
        out.push(p);
    }
    while out.len() >= 2 && out[out.len() - 1].1 == out[out.len() - 2].1 {
        out.pop();
    }
    out
}

fn collinear(a: (Rational, Rational), b: (Rational, Rational), c: (Rational, Rational)) -> bool {
    (b.1 - a.1) * (c.0 - a.0) == (c.1 - a.1) * (b.0 - a.0)
}

// JSON form: ordered array of [[x_num, x_den], [y_num, y_den]] pairs.
impl Serialize for PiecewiseLinear {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        use serde::ser::Error as _;
        let narrow = |v: i128| {
            i64::try_from(v).map_err(|_| S::Error::custom("breakpoint exceeds the JSON integer range"))
        };
        let mut raw: Vec<[[i64; 2]; 2]> = Vec::with_capacity(self.points.len());
        for (x, y) in &self.points {
            raw.push([
                [narrow(*x.numer())?, narrow(*x.denom())?],
                [narrow(*y.numer())?, narrow(*y.denom())?],
            ]);
        }
        raw.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for PiecewiseLinear {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = Vec::<[[i64; 2]; 2]>::deserialize(deserializer)?;
        let mut points = Vec::with_capacity(raw.len());
        for [[xn, xd], [yn, yd]] in raw {
            if xd == 0 || yd == 0 {
                return Err(D::Error::custom("zero denominator in breakpoint"));
            }
            points.push((
                Rational::new(i128::from(xn), i128::from(xd)),
                Rational::new(i128::from(yn), i128::from(yd)),
            ));
        }
        Self::validated(points).map_err(D::Error::custom)
    }
}
