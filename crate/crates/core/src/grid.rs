//! Exact rational degrees on the grid `{0, 1/g, ..., 1}`.
//!
//! The Łukasiewicz operations are closed over this grid, so search over fuzzy
//! models can run in integer arithmetic and never produce rounding artifacts.

use std::cmp::Ordering;
use std::fmt;

use crate::values::ValueError;

/// A degree `numerator / denominator` with `numerator <= denominator`.
///
/// Two grid degrees may only be combined when they share a denominator; the
/// arithmetic methods panic otherwise. Use [`crate::TruthValue`] for checked
/// combination of values of unknown origin.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GridDegree {
    num: u32,
    den: u32,
}

impl GridDegree {
    pub fn new(num: u32, den: u32) -> Result<Self, ValueError> {
        if den == 0 {
            return Err(ValueError::ZeroGrid);
        }
        if num > den {
            return Err(ValueError::OutOfRange(num as f64 / den as f64));
        }
        Ok(Self { num, den })
    }

    pub fn zero(den: u32) -> Self {
        assert!(den > 0, "grid denominator must be positive");
        Self { num: 0, den }
    }

    pub fn one(den: u32) -> Self {
        assert!(den > 0, "grid denominator must be positive");
        Self { num: den, den }
    }

    pub fn from_bit(bit: bool, den: u32) -> Self {
        if bit {
            Self::one(den)
        } else {
            Self::zero(den)
        }
    }

    /// Snaps a float onto the grid if it lies on a grid point (within 1e-9).
    pub fn from_f64(x: f64, den: u32) -> Option<Self> {
        if !(0.0..=1.0).contains(&x) || den == 0 {
            return None;
        }
        let scaled = x * den as f64;
        let rounded = scaled.round();
        if (scaled - rounded).abs() > 1e-9 {
            return None;
        }
        Some(Self {
            num: rounded as u32,
            den,
        })
    }

    #[inline]
    pub fn numerator(self) -> u32 {
        self.num
    }

    #[inline]
    pub fn denominator(self) -> u32 {
        self.den
    }

    #[inline]
    pub fn to_f64(self) -> f64 {
        self.num as f64 / self.den as f64
    }

    /// Re-expresses this degree over a denominator that is a multiple of the
    /// current one.
    pub fn refine(self, den: u32) -> Option<Self> {
        if den == 0 || !den.is_multiple_of(self.den) {
            return None;
        }
        Some(Self {
            num: self.num * (den / self.den),
            den,
        })
    }

    #[inline]
    fn same_grid(self, other: Self) -> u32 {
        assert_eq!(
            self.den, other.den,
            "grid degrees with different denominators combined"
        );
        self.den
    }

    #[inline]
    pub(crate) fn complement(self) -> Self {
        Self {
            num: self.den - self.num,
            den: self.den,
        }
    }

    #[inline]
    pub(crate) fn truncated_sub_one(self, other: Self) -> Self {
        let den = self.same_grid(other);
        Self {
            num: (self.num + other.num).saturating_sub(den),
            den,
        }
    }

    #[inline]
    pub(crate) fn truncated_add(self, other: Self) -> Self {
        let den = self.same_grid(other);
        Self {
            num: (self.num + other.num).min(den),
            den,
        }
    }

    /// `|self + other - 1|`
    #[inline]
    pub(crate) fn distance_of_sum_from_one(self, other: Self) -> Self {
        let den = self.same_grid(other);
        Self {
            num: (self.num + other.num).abs_diff(den),
            den,
        }
    }

    #[inline]
    pub(crate) fn sum_cmp_one(self, other: Self) -> Ordering {
        let den = self.same_grid(other);
        (self.num + other.num).cmp(&den)
    }
}

impl PartialOrd for GridDegree {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        if self.den == other.den {
            Some(self.num.cmp(&other.num))
        } else {
            (self.num as u64 * other.den as u64).partial_cmp(&(other.num as u64 * self.den as u64))
        }
    }
}

impl fmt::Display for GridDegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_f64())
    }
}
