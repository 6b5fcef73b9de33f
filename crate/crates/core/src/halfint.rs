//! Half-integer spins and spin triples.

use crate::{Error, Result};
use serde::{Deserialize, Serialize};
use std::fmt;
use std::ops::{Add, Neg, Sub};

/// A half-integer, stored as twice its value.
///
/// Spins, weights and set elements throughout are half-integers; storing
/// `2j` keeps all arithmetic in `i64`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct HalfInt(pub i64);

impl HalfInt {
    pub const ZERO: HalfInt = HalfInt(0);

    /// Build from twice the value.
    pub fn from_twice(t: i64) -> Self {
        HalfInt(t)
    }

    /// Build from an integer value.
    pub fn from_int(n: i64) -> Self {
        HalfInt(2 * n)
    }

    /// Twice the value (always an integer).
    pub fn twice(self) -> i64 {
        self.0
    }

    pub fn is_integer(self) -> bool {
        self.0 % 2 == 0
    }

    /// The integer value, when integral.
    pub fn as_int(self) -> Option<i64> {
        if self.is_integer() {
            Some(self.0 / 2)
        } else {
            None
        }
    }

    pub fn is_nonneg(self) -> bool {
        self.0 >= 0
    }

    pub fn abs(self) -> Self {
        HalfInt(self.0.abs())
    }

    /// Parse "2", "-1", "3/2", "-5/2".
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::InvalidSpin(s.to_string());
        if let Some((a, b)) = s.split_once('/') {
            let n: i64 = a.trim().parse().map_err(|_| bad())?;
            let d: i64 = b.trim().parse().map_err(|_| bad())?;
            if d != 2 {
                return Err(bad());
            }
            Ok(HalfInt(n))
        } else {
            let n: i64 = s.parse().map_err(|_| bad())?;
            Ok(HalfInt(2 * n))
        }
    }
}

impl Add for HalfInt {
    type Output = HalfInt;
    fn add(self, rhs: HalfInt) -> HalfInt {
        HalfInt(self.0 + rhs.0)
    }
}

impl Sub for HalfInt {
    type Output = HalfInt;
    fn sub(self, rhs: HalfInt) -> HalfInt {
        HalfInt(self.0 - rhs.0)
    }
}

impl Neg for HalfInt {
    type Output = HalfInt;
    fn neg(self) -> HalfInt {
        HalfInt(-self.0)
    }
}

impl fmt::Display for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0 % 2 == 0 {
            write!(f, "{}", self.0 / 2)
        } else {
            write!(f, "{}/2", self.0)
        }
    }
}

impl fmt::Debug for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Shorthand for a half-integer from twice its value.
pub fn half(t: i64) -> HalfInt {
    HalfInt(t)
}

/// Three spins (j1, j2, j3), each a nonnegative half-integer.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct SpinTriple(pub HalfInt, pub HalfInt, pub HalfInt);

impl SpinTriple {
    pub fn new(j1: HalfInt, j2: HalfInt, j3: HalfInt) -> Result<Self> {
        for j in [j1, j2, j3] {
            if !j.is_nonneg() {
                return Err(Error::InvalidSpin(format!("negative spin {j}")));
            }
        }
        Ok(SpinTriple(j1, j2, j3))
    }

    /// Build from twice-values, e.g. `(1,1,1)` for three spin-1/2.
    pub fn from_twice(t1: i64, t2: i64, t3: i64) -> Self {
        SpinTriple(HalfInt(t1), HalfInt(t2), HalfInt(t3))
    }

    pub fn spins(&self) -> [HalfInt; 3] {
        [self.0, self.1, self.2]
    }

    /// Dimension of M_{j1} ⊗ M_{j2} ⊗ M_{j3}.
    pub fn product_dim(&self) -> usize {
        self.spins()
            .iter()
            .map(|j| (j.twice() + 1) as usize)
            .product()
    }

    pub fn site_dims(&self) -> Vec<usize> {
        self.spins()
            .iter()
            .map(|j| (j.twice() + 1) as usize)
            .collect()
    }

    /// Parse "3/2,1,1/2".
    pub fn parse(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split(',').collect();
        if parts.len() != 3 {
            return Err(Error::InvalidSpin(format!("expected three spins in `{s}`")));
        }
        SpinTriple::new(
            HalfInt::parse(parts[0])?,
            HalfInt::parse(parts[1])?,
            HalfInt::parse(parts[2])?,
        )
    }
}

impl fmt::Display for SpinTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.0, self.1, self.2)
    }
}

impl fmt::Debug for SpinTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_round_trip() {
        assert_eq!(HalfInt::parse("3/2").unwrap(), half(3));
        assert_eq!(HalfInt::parse("2").unwrap(), half(4));
        assert_eq!(HalfInt::parse("-1").unwrap(), half(-2));
        assert_eq!(half(3).to_string(), "3/2");
        assert_eq!(half(4).to_string(), "2");
        assert!(HalfInt::parse("1/3").is_err());
    }

    #[test]
    fn triple_dims() {
        let t = SpinTriple::parse("3/2,1,1/2").unwrap();
        assert_eq!(t.product_dim(), 4 * 3 * 2);
        assert_eq!(t.site_dims(), vec![4, 3, 2]);
    }
}
