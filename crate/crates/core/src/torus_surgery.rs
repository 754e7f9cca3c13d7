//! Surgery on torus knots and their basic seiferters.

use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fraction::Fraction;
use crate::homology::CurveClass;
use crate::seiferter::{
    FiberIdentity, KnotDesc, SeiferterDesc, SeiferterRole, SeiferterStatus, SurgeryVertex,
};
use crate::sfs::{classify_triple, OrbifoldTriple, SfsClass};

/// `T(p, q)` with `|p| > q >= 1` and `gcd(|p|, q) = 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct TorusKnot {
    p: i64,
    q: i64,
}

impl TorusKnot {
    /// A nontrivial torus knot (`q >= 2`).
    pub fn new(p: i64, q: i64) -> Result<Self> {
        if q < 2 {
            return Err(Error::InvalidTorusKnot { p, q });
        }
        Self::new_allow_trivial(p, q)
    }

    /// Also admits the trivial knots `T(p, 1)`.
    pub fn new_allow_trivial(p: i64, q: i64) -> Result<Self> {
        let ok = q >= 1 && p.checked_abs().is_some_and(|a| a > q) && p.gcd(&q) == 1;
        if ok {
            Ok(TorusKnot { p, q })
        } else {
            Err(Error::InvalidTorusKnot { p, q })
        }
    }

    /// The left-handed trefoil `T(-3, 2)`.
    pub const fn trefoil() -> Self {
        TorusKnot { p: -3, q: 2 }
    }

    pub fn p(&self) -> i64 {
        self.p
    }

    pub fn q(&self) -> i64 {
        self.q
    }

    pub fn pq(&self) -> i64 {
        self.p * self.q
    }
}

impl fmt::Display for TorusKnot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "T({},{})", self.p, self.q)
    }
}

/// The three basic seiferters of a torus knot: the exceptional fibers
/// `s_p`, `s_q` of the exterior and a meridian `c_mu`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum BasicSeiferterKind {
    #[serde(rename = "s_p")]
    SP,
    #[serde(rename = "s_q")]
    SQ,
    #[serde(rename = "c_mu")]
    CMu,
}

impl BasicSeiferterKind {
    /// Position of this fiber's index in the triple from [`moser_classify`].
    pub fn triple_position(self) -> usize {
        match self {
            BasicSeiferterKind::SP => 0,
            BasicSeiferterKind::SQ => 1,
            BasicSeiferterKind::CMu => 2,
        }
    }

    pub fn name_for(self, k: &TorusKnot) -> String {
        match self {
            BasicSeiferterKind::SP => format!("s_{}", k.p),
            BasicSeiferterKind::SQ => format!("s_{}", k.q),
            BasicSeiferterKind::CMu => "c_mu".to_string(),
        }
    }

    /// Linking number with the knot.
    pub fn lk_with(self, k: &TorusKnot) -> i64 {
        match self {
            BasicSeiferterKind::SP => k.q,
            BasicSeiferterKind::SQ => k.p.abs(),
            BasicSeiferterKind::CMu => 1,
        }
    }
}

impl fmt::Display for BasicSeiferterKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BasicSeiferterKind::SP => "s_p",
            BasicSeiferterKind::SQ => "s_q",
            BasicSeiferterKind::CMu => "c_mu",
        })
    }
}

/// `r/s` surgery on `T(p, q)` fibers over `S²(|p|, q, |pqs − r|)`.
///
/// The triple is returned in that order; a zero third index is the
/// degenerate (reducible) case and a unit one the lens case.
pub fn moser_classify(k: &TorusKnot, slope: Fraction) -> Result<(OrbifoldTriple, SfsClass)> {
    if slope.is_infinite() {
        return Err(Error::InvalidSlope(slope.to_string()));
    }
    let (r, s) = (slope.num() as i128, slope.den() as i128);
    let x = (k.p as i128 * k.q as i128 * s - r).unsigned_abs();
    let x = u64::try_from(x).map_err(|_| Error::Overflow("Moser index"))?;
    let triple = OrbifoldTriple::new(vec![k.p.unsigned_abs(), k.q as u64, x]);
    let class = classify_triple(&triple)?;
    Ok((triple, class))
}

/// Descriptor of a basic seiferter of `(T(p, q), m)`.
pub fn basic_seiferter_data(
    k: &TorusKnot,
    m: i64,
    which: BasicSeiferterKind,
) -> Result<SeiferterDesc> {
    let fiber = match which {
        BasicSeiferterKind::SP => FiberIdentity::ExceptionalFiber {
            index: k.p.unsigned_abs(),
            fiber_class: CurveClass::curve(k.p, k.q)?,
            framing_shift: 0,
        },
        BasicSeiferterKind::SQ => FiberIdentity::ExceptionalFiber {
            index: k.q as u64,
            fiber_class: CurveClass::curve(k.q, k.p)?,
            framing_shift: 0,
        },
        BasicSeiferterKind::CMu => FiberIdentity::Meridian {
            knot_fiber: CurveClass::curve(1, k.pq())?,
            framing_shift: 0,
        },
    };
    Ok(SeiferterDesc {
        name: which.name_for(k),
        lk_with_knot: which.lk_with(k),
        roles: vec![SeiferterRole {
            ambient: SurgeryVertex::integral(KnotDesc::Torus(*k), m),
            isotopic_to: which,
            fiber,
        }],
        status: SeiferterStatus::Basic { of: which },
        every_slope_of: Some(*k),
    })
}

/// A basic annular pair with its linking data
/// `(lk(K, a), lk(K, b), lk(a, b))`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BasicAnnularPair {
    pub first: BasicSeiferterKind,
    pub second: BasicSeiferterKind,
    pub linking: [i64; 3],
}

/// `{s_p, s_q}`, `{s_p, c_mu}`, `{s_q, c_mu}` in that order.
pub fn basic_annular_pairs(k: &TorusKnot) -> [BasicAnnularPair; 3] {
    use BasicSeiferterKind::*;
    let mk = |first: BasicSeiferterKind, second: BasicSeiferterKind, mutual: i64| BasicAnnularPair {
        first,
        second,
        linking: [first.lk_with(k), second.lk_with(k), mutual],
    };
    // s_p ∪ s_q is a Hopf link; c_mu bounds a disk missing both cores.
    [mk(SP, SQ, 1), mk(SP, CMu, 0), mk(SQ, CMu, 0)]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::seiferter::FiberIdentity;

    fn t() -> TorusKnot {
        TorusKnot::trefoil()
    }

    #[test]
    fn torus_knot_validation() {
        assert!(TorusKnot::new(-3, 2).is_ok());
        assert!(TorusKnot::new(2, 3).is_err());
        assert!(TorusKnot::new(4, 2).is_err());
        assert!(TorusKnot::new(5, 1).is_err());
        assert!(TorusKnot::new_allow_trivial(5, 1).is_ok());
        assert!(TorusKnot::new(i64::MIN, 3).is_err());
    }

    #[test]
    fn moser_examples() {
        let (tri, class) = moser_classify(&t(), Fraction::integer(-6)).unwrap();
        assert!(tri.same_multiset(&OrbifoldTriple::new(vec![2, 3, 0])));
        assert_eq!(class, SfsClass::ConnSumLens { orders: [2, 3] });

        let (tri, class) = moser_classify(&t(), Fraction::integer(-5)).unwrap();
        assert!(tri.same_multiset(&OrbifoldTriple::new(vec![2, 3, 1])));
        assert!(matches!(class, SfsClass::LensByShape { .. }));

        for n0 in [-4i64, -1, 1, 2, 7] {
            let (tri, _) = moser_classify(&t(), Fraction::new(-1, n0).unwrap()).unwrap();
            let expect = (6 * n0 - 1).unsigned_abs();
            assert!(tri.same_multiset(&OrbifoldTriple::new(vec![2, 3, expect])));
        }
        assert!(moser_classify(&t(), Fraction::INFINITY).is_err());
    }

    #[test]
    fn lens_and_reducible_slopes() {
        for m in -100..=100 {
            let (_, class) = moser_classify(&t(), Fraction::integer(m)).unwrap();
            assert_eq!(class.is_lens_like(), m == -5 || m == -7, "m = {m}");
            assert_eq!(matches!(class, SfsClass::ConnSumLens { .. }), m == -6, "m = {m}");
        }
    }

    #[test]
    fn basic_seiferter_examples() {
        let sp = basic_seiferter_data(&t(), 0, BasicSeiferterKind::SP).unwrap();
        assert_eq!(sp.lk_with_knot, 2);
        assert_eq!(
            sp.roles[0].fiber,
            FiberIdentity::ExceptionalFiber {
                index: 3,
                fiber_class: CurveClass::new(-3, 2),
                framing_shift: 0
            }
        );
        let sq = basic_seiferter_data(&t(), 0, BasicSeiferterKind::SQ).unwrap();
        assert_eq!(sq.lk_with_knot, 3);
        assert_eq!(sq.roles[0].fiber.index_hint(), Some(2));
        assert_eq!(
            sq.roles[0].fiber,
            FiberIdentity::ExceptionalFiber {
                index: 2,
                fiber_class: CurveClass::new(2, -3),
                framing_shift: 0
            }
        );
        let cmu = basic_seiferter_data(&t(), -2, BasicSeiferterKind::CMu).unwrap();
        assert_eq!(cmu.lk_with_knot, 1);
        assert_eq!(crate::seiferter::index_after_twist(&cmu.roles[0], 0).unwrap(), 4);
    }

    #[test]
    fn meridian_index_matches_moser() {
        for m in -100..=100 {
            let cmu = basic_seiferter_data(&t(), m, BasicSeiferterKind::CMu).unwrap();
            let (tri, _) = moser_classify(&t(), Fraction::integer(m)).unwrap();
            let idx = crate::seiferter::index_after_twist(&cmu.roles[0], 0).unwrap();
            assert_eq!(idx, tri.indices()[2]);
        }
    }

    #[test]
    fn knot_fiber_is_a_curve() {
        for k in [t(), TorusKnot::new(5, 2).unwrap(), TorusKnot::new(-7, 3).unwrap()] {
            let fiber = CurveClass::new(1, k.pq());
            let v = crate::homology::intersection(fiber, CurveClass::MERIDIAN).unwrap();
            assert_eq!(v.abs(), 1);
        }
    }

    #[test]
    fn annular_pairs() {
        let pairs = basic_annular_pairs(&t());
        assert_eq!(pairs.len(), 3);
        assert_eq!(pairs[0].linking, [2, 3, 1]);
        assert_eq!(pairs[1].linking, [2, 1, 0]);
        assert_eq!(pairs[2].linking, [3, 1, 0]);
    }
}
