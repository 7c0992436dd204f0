//! Closed-form arithmetic on trapezoids.
//!
//! Core and support endpoints are propagated exactly with interval
//! arithmetic and joined with straight sides. The result is exact at levels
//! 0 and 1; for `mul`, `div` and `pow` the true sides are curved, so the
//! intermediate levels are a secant approximation.

use std::ops::{Add, Mul, Neg, Sub};

use super::{FuzzyNumber, Interval};
use crate::error::{Error, Result};

fn corners(x: Interval, y: Interval, f: impl Fn(f64, f64) -> f64) -> Interval {
    let v = [f(x.lo, y.lo), f(x.lo, y.hi), f(x.hi, y.lo), f(x.hi, y.hi)];
    Interval {
        lo: v.iter().copied().fold(f64::INFINITY, f64::min),
        hi: v.iter().copied().fold(f64::NEG_INFINITY, f64::max),
    }
}

impl FuzzyNumber {
    pub fn add(&self, other: &FuzzyNumber) -> FuzzyNumber {
        FuzzyNumber {
            a: self.a + other.a,
            b: self.b + other.b,
            alpha: self.alpha + other.alpha,
            beta: self.beta + other.beta,
        }
    }

    pub fn sub(&self, other: &FuzzyNumber) -> FuzzyNumber {
        FuzzyNumber {
            a: self.a - other.b,
            b: self.b - other.a,
            alpha: self.alpha + other.beta,
            beta: self.beta + other.alpha,
        }
    }

    pub fn mul(&self, other: &FuzzyNumber) -> FuzzyNumber {
        let core = corners(self.core(), other.core(), |u, v| u * v);
        let support = corners(self.support(), other.support(), |u, v| u * v);
        FuzzyNumber::from_cuts(core, support).expect("interval products stay ordered")
    }

    /// Fails when the support of `other` contains 0.
    pub fn div(&self, other: &FuzzyNumber) -> Result<FuzzyNumber> {
        let s = other.support();
        if s.contains(0.0) {
            return Err(Error::domain(format!(
                "division by {other}, whose support {s} contains 0"
            )));
        }
        let core = corners(self.core(), other.core(), |u, v| u / v);
        let support = corners(self.support(), other.support(), |u, v| u / v);
        FuzzyNumber::from_cuts(core, support)
    }

    /// `self ^ other`; both supports must be nonnegative. `u^v` is monotone in
    /// each argument on the nonnegative quadrant, so the extremes sit at corners.
    pub fn pow(&self, other: &FuzzyNumber) -> Result<FuzzyNumber> {
        for (name, n) in [("base", self), ("exponent", other)] {
            if n.support().lo < 0.0 {
                return Err(Error::domain(format!("{name} {n} has negative support")));
            }
        }
        let core = corners(self.core(), other.core(), f64::powf);
        let support = corners(self.support(), other.support(), f64::powf);
        if !support.hi.is_finite() {
            return Err(Error::domain("power overflowed"));
        }
        FuzzyNumber::from_cuts(core, support)
    }

    /// `1 / self`; the support must exclude 0.
    pub fn recip(&self) -> Result<FuzzyNumber> {
        FuzzyNumber::crisp(1.0).div(self)
    }

    pub fn scale(&self, k: f64) -> FuzzyNumber {
        self.mul(&FuzzyNumber::crisp(k))
    }
}

impl Add for FuzzyNumber {
    type Output = FuzzyNumber;

    fn add(self, rhs: FuzzyNumber) -> FuzzyNumber {
        FuzzyNumber::add(&self, &rhs)
    }
}

impl Sub for FuzzyNumber {
    type Output = FuzzyNumber;

    fn sub(self, rhs: FuzzyNumber) -> FuzzyNumber {
        FuzzyNumber::sub(&self, &rhs)
    }
}

impl Mul for FuzzyNumber {
    type Output = FuzzyNumber;

    fn mul(self, rhs: FuzzyNumber) -> FuzzyNumber {
        FuzzyNumber::mul(&self, &rhs)
    }
}

impl Neg for FuzzyNumber {
    type Output = FuzzyNumber;

    fn neg(self) -> FuzzyNumber {
        FuzzyNumber {
            a: -self.b,
            b: -self.a,
            alpha: self.beta,
            beta: self.alpha,
        }
    }
}
