//! `lo:hi` or single-value arguments.

use std::str::FromStr;

use crate::Failure;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Span {
    pub lo: f64,
    pub hi: f64,
}

impl FromStr for Span {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let num = |p: &str| p.trim().parse::<f64>().map_err(|_| format!("not a number: {p:?}"));
        let (lo, hi) = match s.split_once(':') {
            Some((a, b)) => (num(a)?, num(b)?),
            None => {
                let v = num(s)?;
                (v, v)
            }
        };
        if !(lo.is_finite() && hi.is_finite() && lo <= hi) {
            return Err(format!("expected lo <= hi, got {s:?}"));
        }
        Ok(Span { lo, hi })
    }
}

impl Span {
    /// Every integer in the span; both ends must be whole numbers.
    pub fn integers(&self) -> Result<std::ops::RangeInclusive<usize>, Failure> {
        if self.lo < 0.0 || self.lo.fract() != 0.0 || self.hi.fract() != 0.0 {
            return Err(Failure::usage(format!("expected whole numbers, got {}:{}", self.lo, self.hi)));
        }
        Ok(self.lo as usize..=self.hi as usize)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_ranges_and_points() {
        assert_eq!("14:1000000".parse::<Span>().unwrap(), Span { lo: 14.0, hi: 1e6 });
        assert_eq!("196".parse::<Span>().unwrap(), Span { lo: 196.0, hi: 196.0 });
        assert!("9:3".parse::<Span>().is_err());
        assert!("a:3".parse::<Span>().is_err());
    }

    #[test]
    fn integer_spans() {
        let s: Span = "3:7".parse().unwrap();
        assert_eq!(s.integers().ok().unwrap().collect::<Vec<_>>(), vec![3, 4, 5, 6, 7]);
        assert!("2.5:4".parse::<Span>().unwrap().integers().is_err());
    }
}
