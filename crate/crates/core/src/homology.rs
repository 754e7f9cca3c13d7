//! First homology of torus boundaries.
//!
//! A class on a boundary torus is written `a·[λ] + b·[μ]` in a fixed
//! meridian–longitude basis. The algebraic intersection pairing is
//! normalised so that `[μ]·[λ] = 1` on every torus, hence
//! `x·y = x.mu·y.lambda − x.lambda·y.mu`.
//!
//! All arithmetic is checked; overflow surfaces as [`Error::Overflow`].

use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CurveClass {
    pub lambda: i64,
    pub mu: i64,
}

impl CurveClass {
    pub const ZERO: CurveClass = CurveClass { lambda: 0, mu: 0 };
    pub const MERIDIAN: CurveClass = CurveClass { lambda: 0, mu: 1 };
    pub const LONGITUDE: CurveClass = CurveClass { lambda: 1, mu: 0 };

    pub const fn new(lambda: i64, mu: i64) -> Self {
        CurveClass { lambda, mu }
    }

    /// A class that must be represented by a simple closed curve.
    pub fn curve(lambda: i64, mu: i64) -> Result<Self> {
        let c = CurveClass { lambda, mu };
        if c.is_curve() {
            Ok(c)
        } else {
            Err(Error::NotACurve { lambda, mu })
        }
    }

    /// Coprime coefficients, or the zero class.
    pub fn is_curve(&self) -> bool {
        let g = self.lambda.gcd(&self.mu);
        g == 1 || (self.lambda == 0 && self.mu == 0)
    }

    pub fn checked_scale(&self, k: i64) -> Result<Self> {
        let ctx = "curve class scaling";
        Ok(CurveClass {
            lambda: self.lambda.checked_mul(k).ok_or(Error::Overflow(ctx))?,
            mu: self.mu.checked_mul(k).ok_or(Error::Overflow(ctx))?,
        })
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        let ctx = "curve class sum";
        Ok(CurveClass {
            lambda: self.lambda.checked_add(other.lambda).ok_or(Error::Overflow(ctx))?,
            mu: self.mu.checked_add(other.mu).ok_or(Error::Overflow(ctx))?,
        })
    }
}

impl Add for CurveClass {
    type Output = CurveClass;
    fn add(self, rhs: Self) -> Self {
        CurveClass::new(self.lambda + rhs.lambda, self.mu + rhs.mu)
    }
}

impl Sub for CurveClass {
    type Output = CurveClass;
    fn sub(self, rhs: Self) -> Self {
        CurveClass::new(self.lambda - rhs.lambda, self.mu - rhs.mu)
    }
}

impl Neg for CurveClass {
    type Output = CurveClass;
    fn neg(self) -> Self {
        CurveClass::new(-self.lambda, -self.mu)
    }
}

impl fmt::Display for CurveClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[λ] + {}[μ]", self.lambda, self.mu)
    }
}

/// Algebraic intersection number, with `[μ]·[λ] = 1`.
pub fn intersection(x: CurveClass, y: CurveClass) -> Result<i64> {
    let v = x.mu as i128 * y.lambda as i128 - x.lambda as i128 * y.mu as i128;
    i64::try_from(v).map_err(|_| Error::Overflow("intersection"))
}

/// Framing of `c'` after one `m`-move on an `n`-framed `c` with `lk(K, c) = lk`.
pub fn framing_after_m_move(n: i64, lk: i64, m: i64) -> Result<i64> {
    lk.checked_mul(2)
        .and_then(|v| v.checked_add(n))
        .and_then(|v| v.checked_add(m))
        .ok_or(Error::Overflow("framing after m-move"))
}

/// Folds [`framing_after_m_move`] over a chain of `(lk, m)` moves.
pub fn framing_after_moves(start: i64, chain: &[(i64, i64)]) -> Result<i64> {
    chain
        .iter()
        .try_fold(start, |n, &(lk, m)| framing_after_m_move(n, lk, m))
}

/// The two possible linking numbers after a single `m`-move, ascending.
pub fn lk_after_m_move(lk: i64, m: i64) -> Result<[i64; 2]> {
    let ctx = "linking number after m-move";
    let a = lk.checked_add(m).ok_or(Error::Overflow(ctx))?;
    let b = lk.checked_sub(m).ok_or(Error::Overflow(ctx))?;
    Ok([a.min(b), a.max(b)])
}

/// Boundary slope `m + p + 2·lk` on the band-summed component.
pub fn band_sum_boundary_slope(p: i64, m: i64, lk: i64) -> Result<i64> {
    framing_after_m_move(p, lk, m)
}

/// The `(-1/n)` surgery slope `[μ_c] − n[λ_c]` on a seiferter.
pub fn twist_slope(n: i64) -> Result<CurveClass> {
    Ok(CurveClass::new(
        n.checked_neg().ok_or(Error::Overflow("twist slope"))?,
        1,
    ))
}

/// A homomorphism between two torus lattices, fixed by the images of the
/// source meridian and longitude.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TorusMap {
    pub meridian_image: CurveClass,
    pub longitude_image: CurveClass,
}

impl TorusMap {
    /// Isotopy of a seiferter onto an exceptional fiber whose framing was
    /// shifted by `shift`: `μ_c ↦ μ`, `λ_c ↦ λ − shift·μ`.
    pub fn framing_shift(shift: i64) -> Result<Self> {
        Ok(TorusMap {
            meridian_image: CurveClass::MERIDIAN,
            longitude_image: CurveClass::new(
                1,
                shift.checked_neg().ok_or(Error::Overflow("framing shift"))?,
            ),
        })
    }

    /// Isotopy of a meridional seiferter onto the core of the torus filled
    /// by slope `m`: `μ_c ↦ λ' + m·μ'`, `λ_c ↦ −μ' − shift·(λ' + m·μ')`.
    pub fn meridian_to_core(m: i64, shift: i64) -> Result<Self> {
        let core_meridian = CurveClass::new(1, m);
        let pushed = core_meridian.checked_scale(shift)?;
        let longitude_image = CurveClass::new(0, -1)
            .checked_add(&CurveClass::new(
                pushed.lambda.checked_neg().ok_or(Error::Overflow("meridian map"))?,
                pushed.mu.checked_neg().ok_or(Error::Overflow("meridian map"))?,
            ))?;
        Ok(TorusMap {
            meridian_image: core_meridian,
            longitude_image,
        })
    }

    pub fn apply(&self, c: CurveClass) -> Result<CurveClass> {
        self.longitude_image
            .checked_scale(c.lambda)?
            .checked_add(&self.meridian_image.checked_scale(c.mu)?)
    }
}

/// Image of the `(-1/n)` slope under `μ_c ↦ μ`, `λ_c ↦ λ − k·μ`:
/// `−n[λ] + (n·k + 1)[μ]`.
pub fn slope_image_fiber_case(k: i64, n: i64) -> Result<CurveClass> {
    TorusMap::framing_shift(k)?.apply(twist_slope(n)?)
}

/// Image of the `(-1/n)` slope of the `m`-moved meridian on the knot
/// boundary: `(n(m+2)+1)[λ'] + (mn(m+2)+m+n)[μ']`.
pub fn slope_image_meridian_case(m: i64, n: i64) -> Result<CurveClass> {
    let shift = m.checked_add(2).ok_or(Error::Overflow("meridian shift"))?;
    TorusMap::meridian_to_core(m, shift)?.apply(twist_slope(n)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pairing_examples() {
        let l = CurveClass::LONGITUDE;
        let m = CurveClass::MERIDIAN;
        assert_eq!(intersection(l, l).unwrap(), 0);
        assert_eq!(intersection(m, l).unwrap(), 1);
        assert_eq!(intersection(l, m).unwrap(), -1);
        // (-1,-1)·(-3,2): absolute value 5 = |3n(m+3) - 2n + 3| at m = -5, n = 1.
        let v = intersection(CurveClass::new(-1, -1), CurveClass::new(-3, 2)).unwrap();
        assert_eq!(v.abs(), 5);
        assert_eq!(v, 5);
    }

    #[test]
    fn moves() {
        assert_eq!(framing_after_m_move(0, 2, -1).unwrap(), 3);
        assert_eq!(framing_after_m_move(3, 1, -1).unwrap(), 4);
        assert_eq!(framing_after_m_move(7, 0, 0).unwrap(), 7);
        assert_eq!(framing_after_moves(0, &[(2, -1), (1, -1)]).unwrap(), 4);
        assert_eq!(lk_after_m_move(1, -1).unwrap(), [0, 2]);
        assert_eq!(lk_after_m_move(4, 0).unwrap(), [4, 4]);
        assert_eq!(lk_after_m_move(2, -5).unwrap(), [-3, 7]);
        assert_eq!(band_sum_boundary_slope(-1, -5, 2).unwrap(), -2);
        assert_eq!(band_sum_boundary_slope(-2, -5, 3).unwrap(), -1);
        assert_eq!(band_sum_boundary_slope(0, 0, 0).unwrap(), 0);
    }

    #[test]
    fn fiber_case_images() {
        assert_eq!(slope_image_fiber_case(-3, 1).unwrap(), CurveClass::new(-1, -2));
        assert_eq!(slope_image_fiber_case(11, 0).unwrap(), CurveClass::MERIDIAN);
        for p in -5..=5 {
            assert_eq!(slope_image_fiber_case(4, p).unwrap(), CurveClass::new(-p, 4 * p + 1));
        }
    }

    #[test]
    fn meridian_case_images() {
        for m in -8..=8 {
            assert_eq!(slope_image_meridian_case(m, 0).unwrap(), CurveClass::new(1, m));
        }
        let fiber = CurveClass::new(1, -6);
        let a = slope_image_meridian_case(-6, 1).unwrap();
        assert_eq!(a, CurveClass::new(-3, 19));
        assert_eq!(intersection(a, fiber).unwrap().abs(), 1);
        let b = slope_image_meridian_case(0, 1).unwrap();
        assert_eq!(b, CurveClass::new(3, 1));
        assert_eq!(intersection(b, fiber).unwrap().abs(), 19);
    }

    #[test]
    fn curve_assertion() {
        assert!(CurveClass::curve(-3, 2).is_ok());
        assert!(CurveClass::curve(0, 0).is_ok());
        assert_eq!(
            CurveClass::curve(4, -6),
            Err(Error::NotACurve { lambda: 4, mu: -6 })
        );
    }

    #[test]
    fn overflow_is_an_error() {
        let big = CurveClass::new(i64::MAX, 1);
        assert!(intersection(big, CurveClass::new(0, i64::MAX)).is_err());
        assert!(framing_after_m_move(i64::MAX, 1, 0).is_err());
        assert!(slope_image_fiber_case(i64::MAX, 2).is_err());
    }
}
