//! Truth values of the four-valued logic and its `[0,1]²` generalization.
//!
//! A value is a pair `<pos, neg>`: `pos` is the degree to which a formula is
//! true and `neg` the degree to which it is false, judged independently. The
//! pair carrier is generic over [`Degree`], which has three implementations:
//!
//! * `bool` for the exact four-valued bilattice `{0,1}²`,
//! * `f64` for general evaluation over the unit square,
//! * [`GridDegree`] for exact search on the grid `{0, 1/g, ..., 1}²`.
//!
//! [`TruthValue`] wraps the three carriers behind one dynamically checked type.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::grid::GridDegree;

/// Absolute tolerance used when classifying floating-point values.
pub const CLASSIFY_EPS: f64 = 1e-9;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ValueError {
    #[error("carrier mismatch: cannot combine {left} with {right}")]
    CarrierMismatch { left: String, right: String },
    #[error("grid mismatch: denominators {0} and {1}")]
    GridMismatch(u32, u32),
    #[error("degree {0} outside [0,1]")]
    OutOfRange(f64),
    #[error("grid denominator must be positive")]
    ZeroGrid,
    #[error("cannot parse truth value `{0}`")]
    Parse(String),
}

/// Which logic a value, model or formula belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Logic {
    /// The four-valued logic over `{0,1}²`.
    #[serde(rename = "bd4")]
    Bd4,
    /// The Łukasiewicz generalization over `[0,1]²`.
    #[serde(rename = "lbd")]
    Lbd,
}

impl fmt::Display for Logic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Logic::Bd4 => "bd4",
            Logic::Lbd => "lbd",
        })
    }
}

impl FromStr for Logic {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "bd4" => Ok(Logic::Bd4),
            "lbd" => Ok(Logic::Lbd),
            other => Err(format!("unknown logic `{other}` (expected bd4 or lbd)")),
        }
    }
}

/// A truth or falsity degree.
///
/// Every operation is one of the piecewise-linear functions of standard
/// Łukasiewicz logic, so each carrier is closed under all of them.
pub trait Degree: Copy + PartialEq + PartialOrd + fmt::Debug + Send + Sync + 'static {
    /// The logic whose derived connectives apply to this carrier.
    const LOGIC: Logic;

    fn zero_like(self) -> Self;
    fn one_like(self) -> Self;
    /// `1 - x`
    fn complement(self) -> Self;
    fn min(self, other: Self) -> Self;
    fn max(self, other: Self) -> Self;
    /// `max(x + y - 1, 0)`
    fn luk_and(self, other: Self) -> Self;
    /// `min(x + y, 1)`
    fn luk_or(self, other: Self) -> Self;
    /// `|x + y - 1|`
    fn sum_defect(self, other: Self) -> Self;
    /// Exact test for `x = 1`, used by the Baaz Delta.
    fn is_one(self) -> bool;
    /// Tolerant test for `x = 1`, used for designation.
    fn is_full(self) -> bool;
    /// Tolerant comparison of `x + y` against `1`.
    fn sum_cmp_one(self, other: Self) -> Ordering;
    fn to_f64(self) -> f64;
}

impl Degree for bool {
    const LOGIC: Logic = Logic::Bd4;

    fn zero_like(self) -> Self {
        false
    }
    fn one_like(self) -> Self {
        true
    }
    fn complement(self) -> Self {
        !self
    }
    fn min(self, other: Self) -> Self {
        self & other
    }
    fn max(self, other: Self) -> Self {
        self | other
    }
    fn luk_and(self, other: Self) -> Self {
        self & other
    }
    fn luk_or(self, other: Self) -> Self {
        self | other
    }
    fn sum_defect(self, other: Self) -> Self {
        self == other
    }
    fn is_one(self) -> bool {
        self
    }
    fn is_full(self) -> bool {
        self
    }
    fn sum_cmp_one(self, other: Self) -> Ordering {
        (self as u8 + other as u8).cmp(&1)
    }
    fn to_f64(self) -> f64 {
        if self {
            1.0
        } else {
            0.0
        }
    }
}

impl Degree for f64 {
    const LOGIC: Logic = Logic::Lbd;

    fn zero_like(self) -> Self {
        0.0
    }
    fn one_like(self) -> Self {
        1.0
    }
    fn complement(self) -> Self {
        1.0 - self
    }
    fn min(self, other: Self) -> Self {
        f64::min(self, other)
    }
    fn max(self, other: Self) -> Self {
        f64::max(self, other)
    }
    fn luk_and(self, other: Self) -> Self {
        (self + other - 1.0).max(0.0)
    }
    fn luk_or(self, other: Self) -> Self {
        (self + other).min(1.0)
    }
    fn sum_defect(self, other: Self) -> Self {
        (self + other - 1.0).abs()
    }
    fn is_one(self) -> bool {
        self == 1.0
    }
    fn is_full(self) -> bool {
        (self - 1.0).abs() <= CLASSIFY_EPS
    }
    fn sum_cmp_one(self, other: Self) -> Ordering {
        let d = self + other - 1.0;
        if d.abs() <= CLASSIFY_EPS {
            Ordering::Equal
        } else if d < 0.0 {
            Ordering::Less
        } else {
            Ordering::Greater
        }
    }
    fn to_f64(self) -> f64 {
        self
    }
}

impl Degree for GridDegree {
    const LOGIC: Logic = Logic::Lbd;

    fn zero_like(self) -> Self {
        GridDegree::zero(self.denominator())
    }
    fn one_like(self) -> Self {
        GridDegree::one(self.denominator())
    }
    fn complement(self) -> Self {
        GridDegree::complement(self)
    }
    fn min(self, other: Self) -> Self {
        if other < self {
            other
        } else {
            self
        }
    }
    fn max(self, other: Self) -> Self {
        if other > self {
            other
        } else {
            self
        }
    }
    fn luk_and(self, other: Self) -> Self {
        self.truncated_sub_one(other)
    }
    fn luk_or(self, other: Self) -> Self {
        self.truncated_add(other)
    }
    fn sum_defect(self, other: Self) -> Self {
        self.distance_of_sum_from_one(other)
    }
    fn is_one(self) -> bool {
        self.numerator() == self.denominator()
    }
    fn is_full(self) -> bool {
        self.is_one()
    }
    fn sum_cmp_one(self, other: Self) -> Ordering {
        GridDegree::sum_cmp_one(self, other)
    }
    fn to_f64(self) -> f64 {
        GridDegree::to_f64(self)
    }
}

/// The four corner values of the bilattice.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Corner {
    T,
    B,
    N,
    F,
}

impl Corner {
    /// All corners in the row order of the classic truth tables.
    pub const ALL: [Corner; 4] = [Corner::T, Corner::B, Corner::N, Corner::F];

    pub fn bits(self) -> (bool, bool) {
        match self {
            Corner::T => (true, false),
            Corner::F => (false, true),
            Corner::N => (false, false),
            Corner::B => (true, true),
        }
    }

    pub fn from_bits(pos: bool, neg: bool) -> Self {
        match (pos, neg) {
            (true, false) => Corner::T,
            (false, true) => Corner::F,
            (false, false) => Corner::N,
            (true, true) => Corner::B,
        }
    }

    pub fn glyph(self) -> char {
        match self {
            Corner::T => 'T',
            Corner::B => 'B',
            Corner::N => 'N',
            Corner::F => 'F',
        }
    }

    pub fn from_glyph(c: char) -> Option<Self> {
        match c {
            'T' => Some(Corner::T),
            'B' => Some(Corner::B),
            'N' => Some(Corner::N),
            'F' => Some(Corner::F),
            _ => None,
        }
    }
}

impl fmt::Display for Corner {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.glyph())
    }
}

/// Which of the classification predicates a value satisfies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub designated: bool,
    pub normal: bool,
    pub gappy: bool,
    pub glutty: bool,
}

/// A truth value `<pos, neg>` over the carrier `D`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Truth<D> {
    pub pos: D,
    pub neg: D,
}

pub type FourValue = Truth<bool>;
pub type FuzzyValue = Truth<f64>;
pub type GridValue = Truth<GridDegree>;

impl<D: Degree> Truth<D> {
    #[inline]
    pub const fn new(pos: D, neg: D) -> Self {
        Self { pos, neg }
    }

    /// BD negation `~`: swaps truth and falsity.
    #[inline]
    pub fn bd_neg(self) -> Self {
        Self::new(self.neg, self.pos)
    }

    /// Lattice conjunction `∧`, the meet of the truth order.
    #[inline]
    pub fn weak_and(self, other: Self) -> Self {
        Self::new(self.pos.min(other.pos), self.neg.max(other.neg))
    }

    /// Lattice disjunction `∨`, the join of the truth order.
    #[inline]
    pub fn weak_or(self, other: Self) -> Self {
        Self::new(self.pos.max(other.pos), self.neg.min(other.neg))
    }

    /// Indicator of designated values `▲`.
    #[inline]
    pub fn bd_delta(self) -> Self {
        Self::new(self.pos, self.pos.complement())
    }

    /// Strong (Łukasiewicz) conjunction `⊗`.
    #[inline]
    pub fn strong_and(self, other: Self) -> Self {
        Self::new(self.pos.luk_and(other.pos), self.neg.luk_or(other.neg))
    }

    /// Strong (Łukasiewicz) disjunction `⊕`.
    #[inline]
    pub fn strong_or(self, other: Self) -> Self {
        Self::new(self.pos.luk_or(other.pos), self.neg.luk_and(other.neg))
    }

    /// Baaz Delta `Δ`: crisp test for full truth, with the same tolerance as
    /// designation on floating-point carriers.
    #[inline]
    pub fn baaz_delta(self) -> Self {
        let top = self.pos.is_full();
        let one = self.pos.one_like();
        let zero = self.pos.zero_like();
        if top {
            Self::new(one, zero)
        } else {
            Self::new(zero, one)
        }
    }

    /// Bivalent negation `¬`, closed form of `~▲φ`.
    #[inline]
    pub fn bivalent_neg(self) -> Self {
        Self::new(self.pos.complement(), self.pos)
    }

    /// Material implication `→`, closed form.
    ///
    /// Over `bool` the truncated sums coincide with max/min, so this is also
    /// the four-valued `~φ ∨ ψ`.
    #[inline]
    pub fn implies(self, other: Self) -> Self {
        Self::new(self.neg.luk_or(other.pos), self.pos.luk_and(other.neg))
    }

    /// Normality indicator `∘`, closed form `<1 - |a+b-1|, |a+b-1|>`.
    #[inline]
    pub fn circ(self) -> Self {
        let defect = self.pos.sum_defect(self.neg);
        Self::new(defect.complement(), defect)
    }

    /// `∨` for the four-valued carrier, `⊕` for the fuzzy ones.
    #[inline]
    pub fn mode_or(self, other: Self) -> Self {
        match D::LOGIC {
            Logic::Bd4 => self.weak_or(other),
            Logic::Lbd => self.strong_or(other),
        }
    }

    /// `∧` for the four-valued carrier, `⊗` for the fuzzy ones.
    #[inline]
    pub fn mode_and(self, other: Self) -> Self {
        match D::LOGIC {
            Logic::Bd4 => self.weak_and(other),
            Logic::Lbd => self.strong_and(other),
        }
    }

    /// `¬φ` computed through its defining expansion `~▲φ`.
    pub fn bivalent_neg_expanded(self) -> Self {
        self.bd_delta().bd_neg()
    }

    /// `φ → ψ` computed through its defining expansion `~φ ∨ ψ` (`⊕` when fuzzy).
    pub fn implies_expanded(self, other: Self) -> Self {
        self.bd_neg().mode_or(other)
    }

    /// `∘φ` computed through `(▲φ ∨ ▲~φ) ∧ (~▲φ ∨ ~▲~φ)`, strong connectives when fuzzy.
    pub fn circ_expanded(self) -> Self {
        let d = self.bd_delta();
        let dn = self.bd_neg().bd_delta();
        d.mode_or(dn).mode_and(d.bd_neg().mode_or(dn.bd_neg()))
    }

    /// Truth order: `pos₁ ≤ pos₂` and `neg₁ ≥ neg₂`.
    pub fn leq_t(self, other: Self) -> bool {
        self.pos <= other.pos && self.neg >= other.neg
    }

    /// Information order: `pos₁ ≤ pos₂` and `neg₁ ≤ neg₂`.
    pub fn leq_i(self, other: Self) -> bool {
        self.pos <= other.pos && self.neg <= other.neg
    }

    #[inline]
    pub fn is_designated(self) -> bool {
        self.pos.is_full()
    }

    #[inline]
    pub fn is_normal(self) -> bool {
        self.pos.sum_cmp_one(self.neg) == Ordering::Equal
    }

    pub fn classify(self) -> Classification {
        let sum = self.pos.sum_cmp_one(self.neg);
        Classification {
            designated: self.is_designated(),
            normal: sum == Ordering::Equal,
            gappy: sum == Ordering::Less,
            glutty: sum == Ordering::Greater,
        }
    }

    /// The corner this value sits on, if any.
    pub fn corner(self) -> Option<Corner> {
        let bit = |d: D| {
            if d == d.one_like() {
                Some(true)
            } else if d == d.zero_like() {
                Some(false)
            } else {
                None
            }
        };
        Some(Corner::from_bits(bit(self.pos)?, bit(self.neg)?))
    }

    pub fn to_f64_pair(self) -> Truth<f64> {
        Truth::new(self.pos.to_f64(), self.neg.to_f64())
    }
}

impl Truth<bool> {
    pub const T: Self = Truth::new(true, false);
    pub const F: Self = Truth::new(false, true);
    pub const N: Self = Truth::new(false, false);
    pub const B: Self = Truth::new(true, true);

    pub fn from_corner(c: Corner) -> Self {
        let (p, n) = c.bits();
        Truth::new(p, n)
    }

    /// Every four-valued value in table order `T, B, N, F`.
    pub fn all() -> [Self; 4] {
        Corner::ALL.map(Self::from_corner)
    }

    pub fn to_fuzzy(self) -> Truth<f64> {
        self.to_f64_pair()
    }

    pub fn to_grid(self, den: u32) -> Truth<GridDegree> {
        Truth::new(
            GridDegree::from_bit(self.pos, den),
            GridDegree::from_bit(self.neg, den),
        )
    }
}

impl Truth<f64> {
    pub fn checked(pos: f64, neg: f64) -> Result<Self, ValueError> {
        for d in [pos, neg] {
            if !(0.0..=1.0).contains(&d) {
                return Err(ValueError::OutOfRange(d));
            }
        }
        Ok(Truth::new(pos, neg))
    }

    pub fn from_corner(c: Corner) -> Self {
        Truth::<bool>::from_corner(c).to_fuzzy()
    }
}

impl Truth<GridDegree> {
    pub fn from_corner(c: Corner, den: u32) -> Self {
        Truth::<bool>::from_corner(c).to_grid(den)
    }

    pub fn grid(pos: u32, neg: u32, den: u32) -> Result<Self, ValueError> {
        Ok(Truth::new(
            GridDegree::new(pos, den)?,
            GridDegree::new(neg, den)?,
        ))
    }

    /// All `(g+1)²` grid pairs in canonical order: `pos` descending, then
    /// `neg` ascending. At `g = 1` this is `T, B, N, F`.
    pub fn all_on_grid(den: u32) -> Vec<Self> {
        let mut out = Vec::with_capacity(((den + 1) * (den + 1)) as usize);
        for p in (0..=den).rev() {
            for n in 0..=den {
                out.push(Truth::new(
                    GridDegree::new(p, den).expect("on grid"),
                    GridDegree::new(n, den).expect("on grid"),
                ));
            }
        }
        out
    }

    pub fn denominator(self) -> u32 {
        self.pos.denominator()
    }
}

impl<D: Degree> fmt::Display for Truth<D> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.corner() {
            Some(c) => write!(f, "{c}"),
            None => write!(f, "<{},{}>", self.pos.to_f64(), self.neg.to_f64()),
        }
    }
}

/// The carrier a [`TruthValue`] lives in.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Carrier {
    FourValued,
    Fuzzy,
    Grid(u32),
}

impl fmt::Display for Carrier {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Carrier::FourValued => f.write_str("four-valued"),
            Carrier::Fuzzy => f.write_str("fuzzy"),
            Carrier::Grid(g) => write!(f, "fuzzy grid g={g}"),
        }
    }
}

/// A truth value in any carrier, with checked mixed-carrier operations.
///
/// Four-valued operands are embedded at the corners when combined with fuzzy
/// ones. Floating-point and grid values never mix, and neither do grids with
/// different denominators.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum TruthValue {
    Four(Truth<bool>),
    Fuzzy(Truth<f64>),
    Grid(Truth<GridDegree>),
}

impl TruthValue {
    pub const T: Self = TruthValue::Four(Truth::<bool>::T);
    pub const F: Self = TruthValue::Four(Truth::<bool>::F);
    pub const N: Self = TruthValue::Four(Truth::<bool>::N);
    pub const B: Self = TruthValue::Four(Truth::<bool>::B);

    pub fn fuzzy(pos: f64, neg: f64) -> Result<Self, ValueError> {
        Truth::<f64>::checked(pos, neg).map(TruthValue::Fuzzy)
    }

    pub fn carrier(&self) -> Carrier {
        match self {
            TruthValue::Four(_) => Carrier::FourValued,
            TruthValue::Fuzzy(_) => Carrier::Fuzzy,
            TruthValue::Grid(v) => Carrier::Grid(v.denominator()),
        }
    }

    pub fn pos(&self) -> f64 {
        self.as_f64().pos
    }

    pub fn neg(&self) -> f64 {
        self.as_f64().neg
    }

    pub fn as_f64(&self) -> Truth<f64> {
        match *self {
            TruthValue::Four(v) => v.to_f64_pair(),
            TruthValue::Fuzzy(v) => v,
            TruthValue::Grid(v) => v.to_f64_pair(),
        }
    }

    pub fn corner(&self) -> Option<Corner> {
        match *self {
            TruthValue::Four(v) => v.corner(),
            TruthValue::Fuzzy(v) => v.corner(),
            TruthValue::Grid(v) => v.corner(),
        }
    }

    fn lift_fuzzy(self) -> Self {
        match self {
            TruthValue::Four(v) => TruthValue::Fuzzy(v.to_fuzzy()),
            other => other,
        }
    }

    /// Brings two operands into a common carrier.
    fn unify(self, other: Self) -> Result<(Self, Self), ValueError> {
        use TruthValue::*;
        let mismatch = || ValueError::CarrierMismatch {
            left: self.carrier().to_string(),
            right: other.carrier().to_string(),
        };
        match (self, other) {
            (Four(_), Four(_)) | (Fuzzy(_), Fuzzy(_)) => Ok((self, other)),
            (Grid(a), Grid(b)) if a.denominator() == b.denominator() => Ok((self, other)),
            (Grid(a), Grid(b)) => Err(ValueError::GridMismatch(a.denominator(), b.denominator())),
            (Four(a), Fuzzy(_)) => Ok((Fuzzy(a.to_fuzzy()), other)),
            (Fuzzy(_), Four(b)) => Ok((self, Fuzzy(b.to_fuzzy()))),
            (Four(a), Grid(b)) => Ok((Grid(a.to_grid(b.denominator())), other)),
            (Grid(a), Four(b)) => Ok((self, Grid(b.to_grid(a.denominator())))),
            _ => Err(mismatch()),
        }
    }

    fn unary(
        self,
        f4: fn(FourValue) -> FourValue,
        ff: fn(FuzzyValue) -> FuzzyValue,
        fg: fn(GridValue) -> GridValue,
    ) -> Self {
        match self {
            TruthValue::Four(v) => TruthValue::Four(f4(v)),
            TruthValue::Fuzzy(v) => TruthValue::Fuzzy(ff(v)),
            TruthValue::Grid(v) => TruthValue::Grid(fg(v)),
        }
    }

    fn binary(
        self,
        other: Self,
        f4: fn(FourValue, FourValue) -> FourValue,
        ff: fn(FuzzyValue, FuzzyValue) -> FuzzyValue,
        fg: fn(GridValue, GridValue) -> GridValue,
    ) -> Result<Self, ValueError> {
        Ok(match self.unify(other)? {
            (TruthValue::Four(a), TruthValue::Four(b)) => TruthValue::Four(f4(a, b)),
            (TruthValue::Fuzzy(a), TruthValue::Fuzzy(b)) => TruthValue::Fuzzy(ff(a, b)),
            (TruthValue::Grid(a), TruthValue::Grid(b)) => TruthValue::Grid(fg(a, b)),
            _ => unreachable!("unify returns a common carrier"),
        })
    }

    pub fn bd_neg(self) -> Self {
        self.unary(Truth::bd_neg, Truth::bd_neg, Truth::bd_neg)
    }

    pub fn bd_delta(self) -> Self {
        self.unary(Truth::bd_delta, Truth::bd_delta, Truth::bd_delta)
    }

    pub fn weak_and(self, other: Self) -> Result<Self, ValueError> {
        self.binary(other, Truth::weak_and, Truth::weak_and, Truth::weak_and)
    }

    pub fn weak_or(self, other: Self) -> Result<Self, ValueError> {
        self.binary(other, Truth::weak_or, Truth::weak_or, Truth::weak_or)
    }

    pub fn strong_and(self, other: Self) -> Result<Self, ValueError> {
        self.lift_fuzzy().binary(
            other.lift_fuzzy(),
            Truth::strong_and,
            Truth::strong_and,
            Truth::strong_and,
        )
    }

    pub fn strong_or(self, other: Self) -> Result<Self, ValueError> {
        self.lift_fuzzy().binary(
            other.lift_fuzzy(),
            Truth::strong_or,
            Truth::strong_or,
            Truth::strong_or,
        )
    }

    pub fn baaz_delta(self) -> Self {
        self.lift_fuzzy()
            .unary(Truth::baaz_delta, Truth::baaz_delta, Truth::baaz_delta)
    }

    pub fn bivalent_neg(self) -> Self {
        self.unary(
            Truth::bivalent_neg,
            Truth::bivalent_neg,
            Truth::bivalent_neg,
        )
    }

    pub fn implies(self, other: Self) -> Result<Self, ValueError> {
        self.binary(other, Truth::implies, Truth::implies, Truth::implies)
    }

    pub fn circ(self) -> Self {
        self.unary(Truth::circ, Truth::circ, Truth::circ)
    }

    pub fn leq_t(self, other: Self) -> Result<bool, ValueError> {
        Ok(match self.unify(other)? {
            (TruthValue::Four(a), TruthValue::Four(b)) => a.leq_t(b),
            (TruthValue::Fuzzy(a), TruthValue::Fuzzy(b)) => a.leq_t(b),
            (TruthValue::Grid(a), TruthValue::Grid(b)) => a.leq_t(b),
            _ => unreachable!(),
        })
    }

    pub fn leq_i(self, other: Self) -> Result<bool, ValueError> {
        Ok(match self.unify(other)? {
            (TruthValue::Four(a), TruthValue::Four(b)) => a.leq_i(b),
            (TruthValue::Fuzzy(a), TruthValue::Fuzzy(b)) => a.leq_i(b),
            (TruthValue::Grid(a), TruthValue::Grid(b)) => a.leq_i(b),
            _ => unreachable!(),
        })
    }

    pub fn classify(&self) -> Classification {
        match *self {
            TruthValue::Four(v) => v.classify(),
            TruthValue::Fuzzy(v) => v.classify(),
            TruthValue::Grid(v) => v.classify(),
        }
    }

    pub fn is_designated(&self) -> bool {
        self.classify().designated
    }
}

impl From<Truth<bool>> for TruthValue {
    fn from(v: Truth<bool>) -> Self {
        TruthValue::Four(v)
    }
}

impl From<Truth<f64>> for TruthValue {
    fn from(v: Truth<f64>) -> Self {
        TruthValue::Fuzzy(v)
    }
}

impl From<Truth<GridDegree>> for TruthValue {
    fn from(v: Truth<GridDegree>) -> Self {
        TruthValue::Grid(v)
    }
}

impl fmt::Display for TruthValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TruthValue::Four(v) => v.fmt(f),
            TruthValue::Fuzzy(v) => v.fmt(f),
            TruthValue::Grid(v) => v.fmt(f),
        }
    }
}

/// Parses `T`, `F`, `N`, `B` as four-valued corners and `<p,n>` as a fuzzy value.
impl FromStr for TruthValue {
    type Err = ValueError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        let mut chars = t.chars();
        if let (Some(c), None) = (chars.next(), chars.next()) {
            if let Some(corner) = Corner::from_glyph(c) {
                return Ok(TruthValue::Four(Truth::<bool>::from_corner(corner)));
            }
        }
        let inner = t
            .strip_prefix('<')
            .and_then(|r| r.strip_suffix('>'))
            .ok_or_else(|| ValueError::Parse(s.to_string()))?;
        let (p, n) = inner
            .split_once(',')
            .ok_or_else(|| ValueError::Parse(s.to_string()))?;
        let parse = |x: &str| {
            x.trim()
                .parse::<f64>()
                .map_err(|_| ValueError::Parse(s.to_string()))
        };
        TruthValue::fuzzy(parse(p)?, parse(n)?)
    }
}
