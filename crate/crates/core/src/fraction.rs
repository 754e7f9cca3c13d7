//! Exact reduced rationals, including the infinity slope `1/0`.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A reduced fraction `num/den` with `den >= 0`.
///
/// `den == 0` only occurs for the infinity slope, stored as `1/0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawFraction", into = "RawFraction")]
pub struct Fraction {
    num: i64,
    den: i64,
}

#[derive(Serialize, Deserialize)]
struct RawFraction {
    num: i64,
    den: i64,
}

impl TryFrom<RawFraction> for Fraction {
    type Error = Error;
    fn try_from(raw: RawFraction) -> Result<Self> {
        Fraction::new(raw.num, raw.den)
    }
}

impl From<Fraction> for RawFraction {
    fn from(f: Fraction) -> Self {
        RawFraction { num: f.num, den: f.den }
    }
}

fn narrow(v: i128, ctx: &'static str) -> Result<i64> {
    i64::try_from(v).map_err(|_| Error::Overflow(ctx))
}

impl Fraction {
    pub const INFINITY: Fraction = Fraction { num: 1, den: 0 };
    pub const ZERO: Fraction = Fraction { num: 0, den: 1 };

    pub fn new(num: i64, den: i64) -> Result<Self> {
        Self::from_wide(num as i128, den as i128)
    }

    fn from_wide(num: i128, den: i128) -> Result<Self> {
        if den == 0 {
            return if num == 0 {
                Err(Error::ZeroDenominator("0/0"))
            } else {
                Ok(Self::INFINITY)
            };
        }
        let g = num.gcd(&den);
        let (mut n, mut d) = (num / g, den / g);
        if d < 0 {
            n = -n;
            d = -d;
        }
        Ok(Fraction {
            num: narrow(n, "fraction")?,
            den: narrow(d, "fraction")?,
        })
    }

    pub const fn integer(n: i64) -> Self {
        Fraction { num: n, den: 1 }
    }

    pub fn num(&self) -> i64 {
        self.num
    }

    pub fn den(&self) -> i64 {
        self.den
    }

    pub fn is_infinite(&self) -> bool {
        self.den == 0
    }

    pub fn is_integer(&self) -> bool {
        self.den == 1
    }

    pub fn as_integer(&self) -> Option<i64> {
        self.is_integer().then_some(self.num)
    }

    pub fn checked_add(&self, other: &Fraction) -> Result<Fraction> {
        if self.is_infinite() || other.is_infinite() {
            return Err(Error::ZeroDenominator("sum with 1/0"));
        }
        let (a, b) = (self.num as i128, self.den as i128);
        let (c, d) = (other.num as i128, other.den as i128);
        Self::from_wide(a * d + c * b, b * d)
    }

    pub fn checked_neg(&self) -> Result<Fraction> {
        if self.is_infinite() {
            return Ok(*self);
        }
        Ok(Fraction {
            num: self.num.checked_neg().ok_or(Error::Overflow("negation"))?,
            den: self.den,
        })
    }

    /// Largest integer not exceeding the value.
    pub fn floor(&self) -> Result<i64> {
        if self.is_infinite() {
            return Err(Error::ZeroDenominator("floor of 1/0"));
        }
        Ok(Integer::div_floor(&self.num, &self.den))
    }

    /// Splits `self = k + r` with `k` an integer and `r` in `(-1/2, 1/2]`.
    pub fn split_symmetric(&self) -> Result<(i64, Fraction)> {
        let k0 = self.floor()?;
        let r0 = Fraction::new(self.num - k0 * self.den, self.den)?;
        // r0 in [0, 1); shift the upper half down by one.
        if 2 * r0.num > r0.den {
            Ok((k0 + 1, Fraction::new(r0.num - r0.den, r0.den)?))
        } else {
            Ok((k0, r0))
        }
    }
}

impl PartialOrd for Fraction {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Total order with `1/0` above every finite value.
impl Ord for Fraction {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self.is_infinite(), other.is_infinite()) {
            (true, true) => Ordering::Equal,
            (true, false) => Ordering::Greater,
            (false, true) => Ordering::Less,
            (false, false) => {
                let l = self.num as i128 * other.den as i128;
                let r = other.num as i128 * self.den as i128;
                l.cmp(&r)
            }
        }
    }
}

impl From<i64> for Fraction {
    fn from(n: i64) -> Self {
        Fraction::integer(n)
    }
}

impl fmt::Display for Fraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

fn parse_int(s: &str, whole: &str) -> Result<i64> {
    let t = s.trim();
    let digits = t.strip_prefix(['-', '+']).unwrap_or(t);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(Error::ParseFraction(whole.to_string()));
    }
    t.parse().map_err(|_| Error::ParseFraction(whole.to_string()))
}

/// Accepts `r` or `r/s` with integer `r`, `s`; rejects decimals.
impl FromStr for Fraction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.split_once('/') {
            Some((n, d)) => Fraction::new(parse_int(n, s)?, parse_int(d, s)?),
            None => Ok(Fraction::integer(parse_int(s, s)?)),
        }
    }
}
