//! Interval grey numbers: closed intervals `[lo, hi]` whose exact value is
//! unknown but bounded.
//!
//! Everything downstream (decision matrix cells, weights, preferences) is built
//! from [`GreyInterval`]. Arithmetic here is restricted to the non-negative
//! quadrant, which is all the decision pipeline needs.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A closed interval `[lo, hi]` with `lo <= hi`.
///
/// Serialized as a two-element array `[lo, hi]`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "[f64; 2]", into = "[f64; 2]")]
pub struct GreyInterval {
    lo: f64,
    hi: f64,
}

impl GreyInterval {
    pub const ZERO: GreyInterval = GreyInterval { lo: 0.0, hi: 0.0 };
    pub const ONE: GreyInterval = GreyInterval { lo: 1.0, hi: 1.0 };

    /// Builds `[lo, hi]`. Reversed or non-finite bounds are rejected, never swapped.
    pub fn new(lo: f64, hi: f64) -> Result<Self> {
        if !lo.is_finite() || !hi.is_finite() || lo > hi {
            return Err(Error::InvalidInterval { lo, hi });
        }
        Ok(GreyInterval { lo, hi })
    }

    /// The degenerate interval `[value, value]`.
    pub fn point(value: f64) -> Self {
        GreyInterval { lo: value, hi: value }
    }

    /// Callers guarantee `lo <= hi`; only checked in debug builds.
    pub(crate) fn from_ordered(lo: f64, hi: f64) -> Self {
        debug_assert!(lo <= hi, "unordered bounds [{lo}, {hi}]");
        GreyInterval { lo, hi }
    }

    #[inline]
    pub fn lo(&self) -> f64 {
        self.lo
    }

    #[inline]
    pub fn hi(&self) -> f64 {
        self.hi
    }

    pub fn width(&self) -> f64 {
        self.hi - self.lo
    }

    pub fn is_degenerate(&self) -> bool {
        self.lo == self.hi
    }

    pub fn is_non_negative(&self) -> bool {
        self.lo >= 0.0
    }

    /// True when `self` lies inside `[lo, hi]`.
    pub fn within(&self, lo: f64, hi: f64) -> bool {
        self.lo >= lo && self.hi <= hi
    }

    pub fn contains(&self, value: f64) -> bool {
        self.lo <= value && value <= self.hi
    }

    /// Euclidean distance between the bound pairs `(lo, hi)` of two intervals.
    pub fn distance(&self, other: &GreyInterval) -> f64 {
        (other.hi - self.hi).hypot(other.lo - self.lo)
    }

    /// Bound-wise sum.
    pub fn add(&self, other: &GreyInterval) -> GreyInterval {
        GreyInterval {
            lo: self.lo + other.lo,
            hi: self.hi + other.hi,
        }
    }

    /// `[c * lo, c * hi]` for `c >= 0`.
    pub fn scale(&self, factor: f64) -> Result<GreyInterval> {
        if !(factor >= 0.0) || !factor.is_finite() {
            return Err(Error::NegativeFactor(factor));
        }
        Ok(GreyInterval {
            lo: factor * self.lo,
            hi: factor * self.hi,
        })
    }

    /// Product of two non-negative intervals, `[a.lo * b.lo, a.hi * b.hi]`.
    pub fn mul(&self, other: &GreyInterval) -> Result<GreyInterval> {
        for operand in [self, other] {
            if !operand.is_non_negative() {
                return Err(Error::NegativeOperand {
                    lo: operand.lo,
                    hi: operand.hi,
                });
            }
        }
        Ok(GreyInterval {
            lo: self.lo * other.lo,
            hi: self.hi * other.hi,
        })
    }
}

/// Free-function form of [`GreyInterval::distance`].
pub fn distance(a: &GreyInterval, b: &GreyInterval) -> f64 {
    a.distance(b)
}

impl TryFrom<[f64; 2]> for GreyInterval {
    type Error = Error;

    fn try_from([lo, hi]: [f64; 2]) -> Result<Self> {
        GreyInterval::new(lo, hi)
    }
}

impl From<GreyInterval> for [f64; 2] {
    fn from(value: GreyInterval) -> Self {
        [value.lo, value.hi]
    }
}

impl fmt::Display for GreyInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match f.precision() {
            Some(p) => write!(f, "[{:.p$}, {:.p$}]", self.lo, self.hi, p = p),
            None => write!(f, "[{}, {}]", self.lo, self.hi),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gi(lo: f64, hi: f64) -> GreyInterval {
        GreyInterval::new(lo, hi).unwrap()
    }

    #[test]
    fn distance_examples() {
        assert_eq!(gi(0.0, 0.0).distance(&gi(3.0, 4.0)), 5.0);
        assert_eq!(gi(2.0, 5.0).distance(&gi(2.0, 5.0)), 0.0);
        assert!((gi(1.0, 2.0).distance(&gi(2.0, 4.0)) - 5f64.sqrt()).abs() < 1e-12);
    }

    #[test]
    fn degenerate_distance_is_root_two_times_gap() {
        let d = GreyInterval::point(1.5).distance(&GreyInterval::point(4.0));
        assert!((d - 2f64.sqrt() * 2.5).abs() < 1e-12);
    }

    #[test]
    fn add_examples() {
        assert_eq!(GreyInterval::ZERO.add(&gi(2.0, 3.0)), gi(2.0, 3.0));
        assert_eq!(gi(1.0, 2.0).add(&gi(3.0, 4.0)), gi(4.0, 6.0));
        assert_eq!(
            GreyInterval::point(0.3).add(&GreyInterval::point(0.7)),
            GreyInterval::ONE
        );
    }

    #[test]
    fn scale_examples() {
        assert_eq!(gi(0.4, 0.6).scale(0.5).unwrap(), gi(0.2, 0.3));
        assert_eq!(gi(0.4, 0.6).scale(1.0).unwrap(), gi(0.4, 0.6));
        assert_eq!(gi(0.4, 0.6).scale(0.0).unwrap(), GreyInterval::ZERO);
        assert!(matches!(gi(0.4, 0.6).scale(-1.0), Err(Error::NegativeFactor(_))));
    }

    #[test]
    fn mul_examples() {
        assert_eq!(GreyInterval::ONE.mul(&gi(2.0, 3.0)).unwrap(), gi(2.0, 3.0));
        let p = gi(0.5, 0.6).mul(&gi(0.2, 0.3)).unwrap();
        assert!((p.lo() - 0.10).abs() < 1e-12 && (p.hi() - 0.18).abs() < 1e-12);
        assert_eq!(GreyInterval::ZERO.mul(&gi(2.0, 3.0)).unwrap(), GreyInterval::ZERO);
    }

    #[test]
    fn mul_rejects_negative_bounds() {
        let neg = gi(-1.0, 2.0);
        assert!(matches!(neg.mul(&gi(1.0, 2.0)), Err(Error::NegativeOperand { .. })));
        assert!(matches!(gi(1.0, 2.0).mul(&neg), Err(Error::NegativeOperand { .. })));
    }

    #[test]
    fn reversed_bounds_are_rejected() {
        assert!(matches!(
            GreyInterval::new(2.0, 1.0),
            Err(Error::InvalidInterval { .. })
        ));
        assert!(GreyInterval::new(f64::NAN, 1.0).is_err());
    }

    #[test]
    fn serde_as_pair() {
        let v: GreyInterval = serde_json::from_str("[6, 8]").unwrap();
        assert_eq!(v, gi(6.0, 8.0));
        assert_eq!(serde_json::to_string(&v).unwrap(), "[6.0,8.0]");
        assert!(serde_json::from_str::<GreyInterval>("[8, 6]").is_err());
    }
}
