//! `start:stop:step` sweep grids, exact for rationals and plain for dB axes.

use dmtnet_core::rational::{parse_rational, Rational};
use num::{Signed, Zero};

use crate::error::{CliError, Result};

/// An inclusive rational grid parsed from `start:stop:step`; values are
/// exact, so `0:0.5:0.01` contains exactly 51 points.
#[derive(Clone, Debug, PartialEq)]
pub struct RationalGrid {
    pub start: Rational,
    pub stop: Rational,
    pub step: Rational,
}

impl RationalGrid {
    pub fn parse(field: &str, text: &str) -> Result<Self> {
        let parts: Vec<&str> = text.split(':').collect();
        if parts.len() != 3 {
            return Err(CliError::invalid(
                field,
                format!("expected start:stop:step, got {text:?}"),
            ));
        }
        let parse = |s: &str| parse_rational(s).map_err(|e| CliError::invalid(field, e));
        let grid = Self {
            start: parse(parts[0])?,
            stop: parse(parts[1])?,
            step: parse(parts[2])?,
        };
        if !grid.step.is_positive() {
            return Err(CliError::invalid(field, "step must be positive"));
        }
        if grid.stop < grid.start {
            return Err(CliError::invalid(field, "stop must not precede start"));
        }
        Ok(grid)
    }

    pub fn values(&self) -> Vec<Rational> {
        let mut out = Vec::new();
        let mut x = self.start;
        while x <= self.stop {
            out.push(x);
            x += self.step;
        }
        out
    }

    /// Rejects grids containing negative points.
    pub fn require_nonnegative(&self, field: &str) -> Result<()> {
        if self.start.is_negative() {
            return Err(CliError::invalid(field, "grid must be nonnegative"));
        }
        Ok(())
    }

    /// Rejects grids containing non-positive points.
    pub fn require_positive(&self, field: &str) -> Result<()> {
        if self.start.is_positive() {
            Ok(())
        } else {
            Err(CliError::invalid(field, "grid must be strictly positive"))
        }
    }

    pub fn spec_string(&self) -> String {
        format!("{}:{}:{}", self.start, self.stop, self.step)
    }
}

/// An inclusive dB grid parsed from `start:stop:step` (floats allowed).
#[derive(Clone, Debug, PartialEq)]
pub struct DbGrid {
    pub start: f64,
    pub stop: f64,
    pub step: f64,
}

impl DbGrid {
    pub fn parse(field: &str, text: &str) -> Result<Self> {
        let parts: Vec<&str> = text.split(':').collect();
        if parts.len() != 3 {
            return Err(CliError::invalid(
                field,
                format!("expected start:stop:step, got {text:?}"),
            ));
        }
        let parse = |s: &str| {
            s.trim()
                .parse::<f64>()
                .map_err(|e| CliError::invalid(field, e.to_string()))
        };
        let grid = Self {
            start: parse(parts[0])?,
            stop: parse(parts[1])?,
            step: parse(parts[2])?,
        };
        if !(grid.step > 0.0) || !grid.step.is_finite() {
            return Err(CliError::invalid(field, "step must be positive"));
        }
        if !grid.start.is_finite() || grid.stop < grid.start {
            return Err(CliError::invalid(field, "stop must not precede start"));
        }
        Ok(grid)
    }

    pub fn values(&self) -> Vec<f64> {
        let count = ((self.stop - self.start) / self.step + 1e-9).floor() as usize + 1;
        (0..count).map(|i| self.start + self.step * i as f64).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use dmtnet_core::rational::rat;

    #[test]
    fn rational_grid_is_exact_and_inclusive() {
        let g = RationalGrid::parse("r-grid", "0:0.5:0.01").unwrap();
        let values = g.values();
        assert_eq!(values.len(), 51);
        assert_eq!(values[33], rat(33, 100));
        assert_eq!(*values.last().unwrap(), rat(1, 2));
    }

    #[test]
    fn rational_grid_accepts_fraction_syntax() {
        let g = RationalGrid::parse("alpha-grid", "1/20:3:1/20").unwrap();
        assert_eq!(g.values().len(), 60);
        assert_eq!(g.values()[0], rat(1, 20));
    }

    #[test]
    fn bad_grids_name_the_field() {
        let err = RationalGrid::parse("r-grid", "0:1").unwrap_err();
        assert!(err.to_string().contains("r-grid"));
        assert!(RationalGrid::parse("g", "0:1:0").is_err());
        assert!(RationalGrid::parse("g", "1:0:1").is_err());
        assert!(DbGrid::parse("snr", "10:40:-1").is_err());
    }

    #[test]
    fn db_grid_counts_points() {
        let g = DbGrid::parse("snr", "14:40:1").unwrap();
        assert_eq!(g.values().len(), 27);
        assert_eq!(g.values()[0], 14.0);
        assert_eq!(*g.values().last().unwrap(), 40.0);
    }
}
