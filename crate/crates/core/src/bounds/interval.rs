//! Closed intervals of `f64` with outward rounding.
//!
//! `+ - * / sqrt` are correctly rounded in IEEE 754, so widening each result
//! by one ulp on both sides encloses the exact value. `ln` carries no such
//! guarantee from the platform libm; it is widened by [`LN_ULPS`] instead.

use std::ops::{Add, Div, Mul, Sub};

use serde::Serialize;

/// Widening applied to `ln`, generous against libm error (typically < 1 ulp).
pub const LN_ULPS: u32 = 4;

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Interval {
    pub lo: f64,
    pub hi: f64,
}

fn down(x: f64, ulps: u32) -> f64 {
    (0..ulps).fold(x, |v, _| v.next_down())
}

fn up(x: f64, ulps: u32) -> f64 {
    (0..ulps).fold(x, |v, _| v.next_up())
}

impl Interval {
    /// A point interval; `x` must be exactly representable.
    pub fn exact(x: f64) -> Self {
        Interval { lo: x, hi: x }
    }

    pub fn new(lo: f64, hi: f64) -> Self {
        assert!(lo <= hi, "empty interval [{lo}, {hi}]");
        Interval { lo, hi }
    }

    fn widened(lo: f64, hi: f64, ulps: u32) -> Self {
        Interval::new(down(lo, ulps), up(hi, ulps))
    }

    pub fn contains(&self, x: f64) -> bool {
        self.lo <= x && x <= self.hi
    }

    pub fn width(&self) -> f64 {
        self.hi - self.lo
    }

    /// Requires `lo >= 0`.
    pub fn sqrt(self) -> Self {
        assert!(self.lo >= 0.0, "sqrt of an interval reaching below 0");
        Interval::widened(self.lo.sqrt(), self.hi.sqrt(), 1)
    }

    /// Requires `lo > 0`.
    pub fn ln(self) -> Self {
        assert!(self.lo > 0.0, "ln of an interval reaching 0");
        Interval::widened(self.lo.ln(), self.hi.ln(), LN_ULPS)
    }

    /// `x^{3/2}` as `x * sqrt(x)`; requires `lo >= 0`.
    pub fn pow_three_halves(self) -> Self {
        self * self.sqrt()
    }
}

impl From<u64> for Interval {
    fn from(v: u64) -> Self {
        let x = v as f64;
        if x as u64 == v {
            Interval::exact(x)
        } else {
            Interval::widened(x, x, 1)
        }
    }
}

impl Add for Interval {
    type Output = Interval;
    fn add(self, o: Interval) -> Interval {
        Interval::widened(self.lo + o.lo, self.hi + o.hi, 1)
    }
}

impl Sub for Interval {
    type Output = Interval;
    fn sub(self, o: Interval) -> Interval {
        Interval::widened(self.lo - o.hi, self.hi - o.lo, 1)
    }
}

impl Mul for Interval {
    type Output = Interval;
    fn mul(self, o: Interval) -> Interval {
        let p = [self.lo * o.lo, self.lo * o.hi, self.hi * o.lo, self.hi * o.hi];
        let lo = p.iter().copied().fold(f64::INFINITY, f64::min);
        let hi = p.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        Interval::widened(lo, hi, 1)
    }
}

impl Div for Interval {
    type Output = Interval;
    /// Requires the divisor to exclude 0.
    fn div(self, o: Interval) -> Interval {
        assert!(o.lo > 0.0 || o.hi < 0.0, "division by an interval containing 0");
        let q = [self.lo / o.lo, self.lo / o.hi, self.hi / o.lo, self.hi / o.hi];
        let lo = q.iter().copied().fold(f64::INFINITY, f64::min);
        let hi = q.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        Interval::widened(lo, hi, 1)
    }
}
