//! Trapezoidal fuzzy numbers.
//!
//! A [`FuzzyNumber`] is the 4-tuple `(a, b, alpha, beta)`: membership is 1 on
//! the core `[a, b]` and falls linearly to 0 over `alpha` on the left and
//! `beta` on the right. Crisp numbers, crisp intervals and triangular numbers
//! are all special cases of the same representation.

mod arith;
mod extension;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use extension::{
    brute_force_extend, brute_force_extend_with, extend_binary, AlphaLevel, DiscretizedFuzzy,
    OracleGrid, SampledMembership, DEFAULT_RESOLUTION, ORACLE_GRID,
};

/// Slack allowed when checking that a term fits inside `[0, 1]`, so that
/// decimal inputs such as `0.05 - 0.05` are not rejected over rounding.
const UNIT_SLACK: f64 = 1e-12;

/// A closed interval `[lo, hi]`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Interval {
    pub lo: f64,
    pub hi: f64,
}

impl Interval {
    pub fn new(lo: f64, hi: f64) -> Result<Self> {
        if lo.is_nan() || hi.is_nan() || lo > hi {
            return Err(Error::invariant(
                "interval",
                format!("[{lo}, {hi}] is not ordered"),
            ));
        }
        Ok(Interval { lo, hi })
    }

    pub fn point(x: f64) -> Self {
        Interval { lo: x, hi: x }
    }

    pub fn width(&self) -> f64 {
        self.hi - self.lo
    }

    pub fn contains(&self, x: f64) -> bool {
        self.lo <= x && x <= self.hi
    }

    /// True when `other` lies inside `self`.
    pub fn encloses(&self, other: &Interval) -> bool {
        self.lo <= other.lo && other.hi <= self.hi
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.lo, self.hi)
    }
}

/// First moment (normalized) and area of a membership function.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Features {
    pub centroid: f64,
    pub area: f64,
}

/// Anything a centroid and area can be extracted from.
pub trait HasFeatures {
    fn features(&self) -> Features;
}

/// A trapezoidal fuzzy number on the real line.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawFuzzy")]
pub struct FuzzyNumber {
    a: f64,
    b: f64,
    alpha: f64,
    beta: f64,
}

#[derive(Deserialize)]
struct RawFuzzy {
    a: f64,
    b: f64,
    alpha: f64,
    beta: f64,
}

impl TryFrom<RawFuzzy> for FuzzyNumber {
    type Error = Error;

    fn try_from(raw: RawFuzzy) -> Result<Self> {
        FuzzyNumber::new(raw.a, raw.b, raw.alpha, raw.beta)
    }
}

impl FuzzyNumber {
    pub fn new(a: f64, b: f64, alpha: f64, beta: f64) -> Result<Self> {
        let tuple = format!("({a}, {b}, {alpha}, {beta})");
        if ![a, b, alpha, beta].iter().all(|v| v.is_finite()) {
            return Err(Error::invariant(
                "fuzzy number",
                format!("{tuple} has a non-finite entry"),
            ));
        }
        if a > b {
            return Err(Error::invariant(
                "fuzzy number",
                format!("{tuple} has a > b"),
            ));
        }
        if alpha < 0.0 || beta < 0.0 {
            return Err(Error::invariant(
                "fuzzy number",
                format!("{tuple} has a negative spread"),
            ));
        }
        Ok(FuzzyNumber { a, b, alpha, beta })
    }

    pub fn crisp(x: f64) -> Self {
        FuzzyNumber {
            a: x,
            b: x,
            alpha: 0.0,
            beta: 0.0,
        }
    }

    /// Build the trapezoid with the given core (level 1) and support (level 0).
    pub fn from_cuts(core: Interval, support: Interval) -> Result<Self> {
        // Rounding in the caller can leave the support a hair inside the core.
        let alpha = (core.lo - support.lo).max(0.0);
        let beta = (support.hi - core.hi).max(0.0);
        FuzzyNumber::new(core.lo, core.hi, alpha, beta)
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn b(&self) -> f64 {
        self.b
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }

    pub fn tuple(&self) -> (f64, f64, f64, f64) {
        (self.a, self.b, self.alpha, self.beta)
    }

    pub fn is_crisp_point(&self) -> bool {
        self.a == self.b && self.alpha == 0.0 && self.beta == 0.0
    }

    pub fn core(&self) -> Interval {
        Interval {
            lo: self.a,
            hi: self.b,
        }
    }

    /// Closure of the support, `[a - alpha, b + beta]`.
    pub fn support(&self) -> Interval {
        Interval {
            lo: self.a - self.alpha,
            hi: self.b + self.beta,
        }
    }

    /// Membership degree of `x`. A zero spread makes that side a step with
    /// membership exactly 1 at the core endpoint.
    pub fn membership(&self, x: f64) -> f64 {
        let FuzzyNumber { a, b, alpha, beta } = *self;
        let mu = if x < a {
            if alpha > 0.0 && x >= a - alpha {
                (x - a + alpha) / alpha
            } else {
                0.0
            }
        } else if x <= b {
            1.0
        } else if beta > 0.0 && x <= b + beta {
            (b + beta - x) / beta
        } else {
            0.0
        };
        mu.clamp(0.0, 1.0)
    }

    /// The crisp interval `{x : membership(x) >= level}` for `level` in `(0, 1]`.
    pub fn alpha_cut(&self, level: f64) -> Result<Interval> {
        if !(level > 0.0 && level <= 1.0) {
            return Err(Error::domain(format!(
                "alpha level {level} is outside (0, 1]"
            )));
        }
        Ok(self.cut(level))
    }

    /// Level cut for `level` in `[0, 1]`; level 0 gives the closed support.
    pub(crate) fn cut(&self, level: f64) -> Interval {
        let slack = 1.0 - level;
        Interval {
            lo: self.a - self.alpha * slack,
            hi: self.b + self.beta * slack,
        }
    }

    /// True when the whole support lies inside `[0, 1]`.
    pub fn is_unit(&self) -> bool {
        self.a - self.alpha >= -UNIT_SLACK && self.b + self.beta <= 1.0 + UNIT_SLACK
    }

    /// Clamp core and support into `[0, 1]`.
    pub fn clip_unit(&self) -> UnitFuzzyNumber {
        let clamp = |iv: Interval| Interval {
            lo: iv.lo.clamp(0.0, 1.0),
            hi: iv.hi.clamp(0.0, 1.0),
        };
        let n = FuzzyNumber::from_cuts(clamp(self.core()), clamp(self.support()))
            .expect("clamping an ordered trapezoid keeps it ordered");
        UnitFuzzyNumber {
            base: n,
            mirrored: false,
        }
    }
}

impl HasFeatures for FuzzyNumber {
    /// Closed-form area and centroid of the trapezoid. A crisp point has area 0
    /// and its centroid is the point itself.
    fn features(&self) -> Features {
        let FuzzyNumber { a, b, alpha, beta } = *self;
        let area = (b - a) + (alpha + beta) / 2.0;
        if area == 0.0 {
            return Features {
                centroid: a,
                area: 0.0,
            };
        }
        let moment =
            (b * b - a * a) / 2.0 + alpha * (a / 2.0 - alpha / 6.0) + beta * (b / 2.0 + beta / 6.0);
        Features {
            centroid: moment / area,
            area,
        }
    }
}

impl fmt::Display for FuzzyNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {}, {})", self.a, self.b, self.alpha, self.beta)
    }
}

/// A fuzzy number whose support lies inside `[0, 1]`.
///
/// Negation is stored as a flag rather than applied to the fields, so that
/// negating twice returns the original 4-tuple bit for bit.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
#[serde(try_from = "FuzzyNumber", into = "FuzzyNumber")]
pub struct UnitFuzzyNumber {
    base: FuzzyNumber,
    mirrored: bool,
}

impl UnitFuzzyNumber {
    pub fn new(n: FuzzyNumber) -> Result<Self> {
        if !n.is_unit() {
            return Err(Error::invariant(
                "unit fuzzy number",
                format!("support of {n} leaves [0, 1]"),
            ));
        }
        Ok(UnitFuzzyNumber {
            base: n,
            mirrored: false,
        })
    }

    pub fn from_tuple(a: f64, b: f64, alpha: f64, beta: f64) -> Result<Self> {
        Self::new(FuzzyNumber::new(a, b, alpha, beta)?)
    }

    /// The effective 4-tuple.
    pub fn get(&self) -> FuzzyNumber {
        if self.mirrored {
            let FuzzyNumber { a, b, alpha, beta } = self.base;
            FuzzyNumber {
                a: 1.0 - b,
                b: 1.0 - a,
                alpha: beta,
                beta: alpha,
            }
        } else {
            self.base
        }
    }

    /// Pointwise `N(x) = 1 - x`: `(a, b, alpha, beta)` becomes
    /// `(1 - b, 1 - a, beta, alpha)`.
    pub fn negate(self) -> Self {
        UnitFuzzyNumber {
            base: self.base,
            mirrored: !self.mirrored,
        }
    }

    pub fn membership(&self, x: f64) -> f64 {
        self.get().membership(x)
    }
}

impl PartialEq for UnitFuzzyNumber {
    fn eq(&self, other: &Self) -> bool {
        self.get() == other.get()
    }
}

impl TryFrom<FuzzyNumber> for UnitFuzzyNumber {
    type Error = Error;

    fn try_from(n: FuzzyNumber) -> Result<Self> {
        UnitFuzzyNumber::new(n)
    }
}

impl From<UnitFuzzyNumber> for FuzzyNumber {
    fn from(n: UnitFuzzyNumber) -> Self {
        n.get()
    }
}

impl HasFeatures for UnitFuzzyNumber {
    fn features(&self) -> Features {
        self.get().features()
    }
}

impl fmt::Display for UnitFuzzyNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.get().fmt(f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn maybe() -> FuzzyNumber {
        FuzzyNumber::new(0.4, 0.6, 0.1, 0.1).unwrap()
    }

    #[test]
    fn membership_on_left_side() {
        assert!((maybe().membership(0.35) - 0.5).abs() < 1e-12);
        assert_eq!(maybe().membership(0.5), 1.0);
        assert_eq!(maybe().membership(0.29), 0.0);
        assert!((maybe().membership(0.675) - 0.25).abs() < 1e-12);
    }

    #[test]
    fn crisp_zero_is_a_step() {
        let zero = FuzzyNumber::crisp(0.0);
        assert_eq!(zero.membership(0.1), 0.0);
        assert_eq!(zero.membership(0.0), 1.0);
        assert_eq!(zero.membership(-1e-9), 0.0);
    }

    #[test]
    fn alpha_cuts() {
        let cut = maybe().alpha_cut(0.5).unwrap();
        assert!((cut.lo - 0.35).abs() < 1e-12 && (cut.hi - 0.65).abs() < 1e-12);
        assert_eq!(
            maybe().alpha_cut(1.0).unwrap(),
            Interval { lo: 0.4, hi: 0.6 }
        );

        let unlikely = FuzzyNumber::new(0.0, 0.25, 0.0, 0.1).unwrap();
        let cut = unlikely.alpha_cut(0.2).unwrap();
        assert_eq!(cut.lo, 0.0);
        assert!((cut.hi - 0.33).abs() < 1e-12);
    }

    #[test]
    fn alpha_cut_rejects_bad_levels() {
        for level in [0.0, -0.1, 1.5, f64::NAN] {
            assert!(matches!(maybe().alpha_cut(level), Err(Error::Domain(_))));
        }
    }

    #[test]
    fn features_of_maybe() {
        let f = maybe().features();
        assert!((f.centroid - 0.5).abs() < 1e-12);
        assert!((f.area - 0.3).abs() < 1e-12);
    }

    #[test]
    fn crisp_point_features() {
        let f = FuzzyNumber::crisp(1.0).features();
        assert_eq!(
            f,
            Features {
                centroid: 1.0,
                area: 0.0
            }
        );
    }

    #[test]
    fn features_match_numeric_integration() {
        let n = FuzzyNumber::new(0.1, 0.18, 0.06, 0.05).unwrap();
        let steps = 200_000;
        let (lo, hi) = (n.support().lo, n.support().hi);
        let h = (hi - lo) / steps as f64;
        let (mut area, mut moment) = (0.0, 0.0);
        for i in 0..steps {
            let x = lo + (i as f64 + 0.5) * h;
            area += n.membership(x) * h;
            moment += x * n.membership(x) * h;
        }
        let f = n.features();
        assert!((f.area - area).abs() < 1e-8);
        assert!((f.centroid - moment / area).abs() < 1e-8);
    }

    #[test]
    fn constructor_rejects_bad_tuples() {
        assert!(FuzzyNumber::new(0.6, 0.4, 0.0, 0.0).is_err());
        assert!(FuzzyNumber::new(0.4, 0.6, -0.1, 0.0).is_err());
        assert!(FuzzyNumber::new(0.4, f64::NAN, 0.0, 0.0).is_err());
        assert!(UnitFuzzyNumber::from_tuple(0.05, 0.2, 0.1, 0.0).is_err());
        assert!(UnitFuzzyNumber::from_tuple(0.9, 1.0, 0.0, 0.01).is_err());
    }

    #[test]
    fn negate_mirrors_unlikely_onto_likely() {
        let unlikely = UnitFuzzyNumber::from_tuple(0.0, 0.25, 0.0, 0.1).unwrap();
        assert_eq!(unlikely.negate().get().tuple(), (0.75, 1.0, 0.1, 0.0));
        let certain = UnitFuzzyNumber::from_tuple(1.0, 1.0, 0.0, 0.0).unwrap();
        assert_eq!(certain.negate().get().tuple(), (0.0, 0.0, 0.0, 0.0));
    }

    #[test]
    fn negate_is_bitwise_involution() {
        let n = UnitFuzzyNumber::from_tuple(0.1, 0.18, 0.06, 0.05).unwrap();
        let back = n.negate().negate().get();
        assert_eq!(back.tuple(), (0.1, 0.18, 0.06, 0.05));
    }

    #[test]
    fn clip_clamps_into_unit_interval() {
        let n = FuzzyNumber::new(-0.2, 0.3, 0.1, 0.9)
            .unwrap()
            .clip_unit()
            .get();
        assert_eq!(n.tuple(), (0.0, 0.3, 0.0, 0.7));
    }

    #[test]
    fn json_shape() {
        let json = serde_json::to_string(&maybe()).unwrap();
        assert_eq!(json, r#"{"a":0.4,"b":0.6,"alpha":0.1,"beta":0.1}"#);
        let back: FuzzyNumber = serde_json::from_str(&json).unwrap();
        assert_eq!(back, maybe());
        assert!(
            serde_json::from_str::<FuzzyNumber>(r#"{"a":1,"b":0,"alpha":0,"beta":0}"#).is_err()
        );
    }
}
