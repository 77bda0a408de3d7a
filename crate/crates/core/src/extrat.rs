//! Exact extended non-negative rationals, the carrier of the Lawvere quantale.
//!
//! Values are either a reduced non-negative [`BigRational`] or `∞`. Addition
//! treats `∞` as absorbing, and [`ExtRat::monus`] is truncated subtraction with
//! the conventions that make it the implication of `([0,∞], +, 0)`.

use std::cmp::Ordering;
use std::fmt;
use std::ops::Add;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub enum ExtRat {
    Finite(BigRational),
    Infinity,
}

impl ExtRat {
    pub fn zero() -> Self {
        ExtRat::Finite(BigRational::zero())
    }

    pub fn infinity() -> Self {
        ExtRat::Infinity
    }

    pub fn from_integer(n: u64) -> Self {
        ExtRat::Finite(BigRational::from_integer(BigInt::from(n)))
    }

    /// `numer / denom`; fails on a zero denominator.
    pub fn ratio(numer: u64, denom: u64) -> Result<Self> {
        if denom == 0 {
            return Err(Error::Schema("zero denominator".into()));
        }
        Ok(ExtRat::Finite(BigRational::new(
            BigInt::from(numer),
            BigInt::from(denom),
        )))
    }

    /// Wraps a rational, rejecting negative values.
    pub fn from_rational(r: BigRational) -> Result<Self> {
        if r.is_negative() {
            return Err(Error::Schema(format!("negative value {r}")));
        }
        Ok(ExtRat::Finite(r))
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, ExtRat::Infinity)
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, ExtRat::Finite(r) if r.is_zero())
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            ExtRat::Finite(r) => Some(r),
            ExtRat::Infinity => None,
        }
    }

    /// Truncated subtraction `self ⊖ rhs`.
    ///
    /// `q ⊖ ∞ = 0` (also for `q = ∞`), `∞ ⊖ p = ∞` for finite `p`, and
    /// `max(0, q − p)` otherwise. With these conventions `p ⊖ q` is the
    /// least `r` with `r + q ≥ p`.
    pub fn monus(&self, rhs: &ExtRat) -> ExtRat {
        match (self, rhs) {
            (_, ExtRat::Infinity) => ExtRat::zero(),
            (ExtRat::Infinity, ExtRat::Finite(_)) => ExtRat::Infinity,
            (ExtRat::Finite(a), ExtRat::Finite(b)) => {
                if a > b {
                    ExtRat::Finite(a - b)
                } else {
                    ExtRat::zero()
                }
            }
        }
    }

    pub fn max_of<'a>(values: impl IntoIterator<Item = &'a ExtRat>) -> Option<ExtRat> {
        values.into_iter().max().cloned()
    }
}

impl Ord for ExtRat {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (ExtRat::Infinity, ExtRat::Infinity) => Ordering::Equal,
            (ExtRat::Infinity, _) => Ordering::Greater,
            (_, ExtRat::Infinity) => Ordering::Less,
            (ExtRat::Finite(a), ExtRat::Finite(b)) => a.cmp(b),
        }
    }
}

impl PartialOrd for ExtRat {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Add for &ExtRat {
    type Output = ExtRat;

    fn add(self, rhs: &ExtRat) -> ExtRat {
        match (self, rhs) {
            (ExtRat::Finite(a), ExtRat::Finite(b)) => ExtRat::Finite(a + b),
            _ => ExtRat::Infinity,
        }
    }
}

impl Add for ExtRat {
    type Output = ExtRat;

    fn add(self, rhs: ExtRat) -> ExtRat {
        &self + &rhs
    }
}

impl fmt::Display for ExtRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtRat::Infinity => f.write_str("inf"),
            ExtRat::Finite(r) if r.is_integer() => write!(f, "{}", r.numer()),
            ExtRat::Finite(r) => write!(f, "{}/{}", r.numer(), r.denom()),
        }
    }
}

impl fmt::Debug for ExtRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for ExtRat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "inf" {
            return Ok(ExtRat::Infinity);
        }
        let parse = |t: &str| {
            t.trim()
                .parse::<BigInt>()
                .map_err(|_| Error::Schema(format!("not a rational: {s:?}")))
        };
        let value = match s.split_once('/') {
            Some((n, d)) => {
                let d = parse(d)?;
                if d.is_zero() {
                    return Err(Error::Schema(format!("zero denominator in {s:?}")));
                }
                BigRational::new(parse(n)?, d)
            }
            None => BigRational::from_integer(parse(s)?),
        };
        ExtRat::from_rational(value)
    }
}

impl Serialize for ExtRat {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for ExtRat {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Shorthand used throughout tests and examples: `rat("3/2")`, `rat("inf")`.
///
/// Panics on malformed input.
pub fn rat(s: &str) -> ExtRat {
    s.parse().unwrap_or_else(|e| panic!("bad rational literal {s:?}: {e}"))
}
