//! The `K_n^m` family, hyperbolicity rules, exclusion oracles and named-knot
//! resolution.

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fraction::Fraction;
use crate::seiferter::{
    seiferter_c, cm_family, cm_name, twist, twisted_orbifold, KnotDesc, NamedKnot, SurgeryVertex,
};
use crate::sfs::{classify_triple, OrbifoldTriple, SfsClass};
use crate::torus_surgery::{moser_classify, TorusKnot};

/// Default `|p|` bound for [`torus_knot_exclusion`].
pub const DEFAULT_TORUS_BOUND: i64 = 100;

fn to_u64(v: i128, ctx: &'static str) -> Result<u64> {
    u64::try_from(v.unsigned_abs()).map_err(|_| Error::Overflow(ctx))
}

fn wide_abs(v: Option<i128>, ctx: &'static str) -> Result<u64> {
    to_u64(v.ok_or(Error::Overflow(ctx))?, ctx)
}

/// The three indices `(a, b, c)` replacing `c^m`'s fiber after `n` twists,
/// evaluated from their closed forms.
pub fn closed_form_indices(m: i64, n: i64) -> Result<[u64; 3]> {
    let (m, n) = (m as i128, n as i128);
    let a = n
        .checked_mul(m + 2)
        .and_then(|v| v.checked_mul(m + 6))
        .and_then(|v| v.checked_add(m + n + 6));
    let b = n
        .checked_mul(m + 3)
        .and_then(|v| v.checked_mul(3))
        .and_then(|v| v.checked_add(3 - 2 * n));
    let c = n
        .checked_mul(m + 4)
        .and_then(|v| v.checked_mul(2))
        .and_then(|v| v.checked_add(2 - 3 * n));
    Ok([
        wide_abs(a, "index a")?,
        wide_abs(b, "index b")?,
        wide_abs(c, "index c")?,
    ])
}

/// `S²(2, 3, a)`, `S²(2, |m+5|, b)`, `S²(3, |m+4|, c)`.
pub fn closed_form_triples(m: i64, n: i64) -> Result<[OrbifoldTriple; 3]> {
    let [a, b, c] = closed_form_indices(m, n)?;
    let m5 = to_u64(m as i128 + 5, "|m+5|")?;
    let m4 = to_u64(m as i128 + 4, "|m+4|")?;
    Ok([
        OrbifoldTriple::new(vec![2, 3, a]),
        OrbifoldTriple::new(vec![2, m5, b]),
        OrbifoldTriple::new(vec![3, m4, c]),
    ])
}

/// The same triples, obtained by pushing the twist slope through each role
/// of `c^m` and pairing with the fiber class.
pub fn generic_triples(m: i64, n: i64) -> Result<[OrbifoldTriple; 3]> {
    let c = cm_family(m)?;
    Ok([
        twisted_orbifold(&c.roles[0], n)?,
        twisted_orbifold(&c.roles[1], n)?,
        twisted_orbifold(&c.roles[2], n)?,
    ])
}

/// Slopes `m + 1 - i + n(m+1)²` for `i = 1, 2, 3`.
pub fn knm_slopes(m: i64, n: i64) -> Result<[i64; 3]> {
    let d = knm_d(m, n)?;
    let ovf = || Error::Overflow("K_n^m slope");
    Ok([
        d.checked_sub(1).ok_or_else(ovf)?,
        d.checked_sub(2).ok_or_else(ovf)?,
        d.checked_sub(3).ok_or_else(ovf)?,
    ])
}

/// `d = m + 1 + n(m+1)²`.
pub fn knm_d(m: i64, n: i64) -> Result<i64> {
    let ovf = || Error::Overflow("K_n^m slope");
    let m1 = m.checked_add(1).ok_or_else(ovf)?;
    m1.checked_mul(m1)
        .and_then(|v| v.checked_mul(n))
        .and_then(|v| v.checked_add(m1))
        .ok_or_else(ovf)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KnmReport {
    pub m: i64,
    pub n: i64,
    pub knot: KnotDesc,
    pub slopes: [i64; 3],
    pub triples: [OrbifoldTriple; 3],
    pub classes: [SfsClass; 3],
    pub hyperbolic: bool,
    pub name: Option<NamedKnot>,
}

/// `K_n^m`, the trefoil twisted `n` times along `c^m`, and its three
/// successive Seifert surgeries.
pub fn knm_report(m: i64, n: i64) -> Result<KnmReport> {
    let closed = closed_form_triples(m, n)?;
    let generic = generic_triples(m, n)?;
    for (i, (a, b)) in closed.iter().zip(&generic).enumerate() {
        if !a.same_multiset(b) {
            return Err(Error::InvariantViolation(format!(
                "K_{n}^{m} surgery {}: closed form {a} but homology path {b}",
                i + 1
            )));
        }
    }
    let classes = [
        classify_triple(&closed[0])?,
        classify_triple(&closed[1])?,
        classify_triple(&closed[2])?,
    ];
    let slopes = knm_slopes(m, n)?;
    let c = cm_family(m)?;
    let v = twist(&SurgeryVertex::torus(TorusKnot::trefoil(), m), &c, n)?;
    Ok(KnmReport {
        m,
        n,
        name: resolve_name(&v),
        knot: v.knot,
        slopes,
        triples: closed,
        classes,
        hyperbolic: knm_hyperbolic(m, n),
    })
}

/// `K_n^m` is hyperbolic iff `m ∉ {-5,-4,-3,-2}`, `n ≠ 0` and
/// `(m, n) ≠ (-1, -1)`.
pub fn knm_hyperbolic(m: i64, n: i64) -> bool {
    !(-5..=-2).contains(&m) && n != 0 && (m, n) != (-1, -1)
}

/// All of `a, b, c, |m+5|, |m+4|` are at least 2.
pub fn small_sfs_triple_check(m: i64, n: i64) -> Result<bool> {
    let [a, b, c] = closed_form_indices(m, n)?;
    let m5 = (m as i128 + 5).unsigned_abs();
    let m4 = (m as i128 + 4).unsigned_abs();
    Ok(a >= 2 && b >= 2 && c >= 2 && m5 >= 2 && m4 >= 2)
}

/// Outcome of the bounded torus-knot search, with the bound it covered.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TorusExclusion {
    pub bound: i64,
    pub witness: Option<(i64, i64)>,
}

/// Looks for a torus knot `T(p, q)` with `2 <= q < |p| <= bound` whose
/// surgeries at `d-1, d-2, d-3` have the given base orbifolds.
pub fn torus_knot_exclusion(
    triples: &[OrbifoldTriple; 3],
    d: i64,
    bound: i64,
) -> Result<TorusExclusion> {
    if bound < 2 {
        return Err(Error::InvalidBound(bound));
    }
    let targets: Vec<Vec<u64>> = triples.iter().map(OrbifoldTriple::multiset).collect();
    let fits = |ap: u64, q: u64| targets.iter().all(|t| t.contains(&ap) && t.contains(&q));
    for q in 2..bound {
        for ap in (q + 1)..=bound {
            if ap.gcd(&q) != 1 || !fits(ap as u64, q as u64) {
                continue;
            }
            for p in [-ap, ap] {
                let pq = p as i128 * q as i128;
                let ok = (1..=3).all(|i| {
                    let x = (pq - d as i128 + i as i128).unsigned_abs();
                    let mut cand = vec![ap as u128, q as u128, x];
                    cand.sort_unstable();
                    let want: Vec<u128> = targets[i - 1].iter().map(|&v| v as u128).collect();
                    cand == want
                });
                if ok {
                    return Ok(TorusExclusion {
                        bound,
                        witness: Some((p, q)),
                    });
                }
            }
        }
    }
    Ok(TorusExclusion {
        bound,
        witness: None,
    })
}

/// Name of a twisted trefoil, where one is known.
pub fn resolve_name(v: &SurgeryVertex) -> Option<NamedKnot> {
    match &v.knot {
        KnotDesc::Named(k) => Some(*k),
        KnotDesc::Twisted { base, seiferter, n } if **base == KnotDesc::Torus(TorusKnot::trefoil()) => {
            let s = seiferter.as_str();
            if s == cm_name(-1) {
                n.checked_add(1).map(NamedKnot::twist_knot)
            } else if s == cm_name(-6) && *n == 1 {
                Some(NamedKnot::Pretzel { a: -2, b: 3, c: 7 })
            } else if s == "c" && *n == -1 {
                Some(NamedKnot::Pretzel { a: 3, b: -3, c: -3 })
            } else {
                None
            }
        }
        _ => None,
    }
}

/// Either the resolved name or the twisted form itself.
pub fn canonical_knot(v: &SurgeryVertex) -> KnotDesc {
    resolve_name(v).map_or_else(|| v.knot.clone(), KnotDesc::Named)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KpReport {
    pub p: i64,
    pub vertex: SurgeryVertex,
    pub triple: OrbifoldTriple,
    pub hyperbolic: bool,
    pub genus_one: bool,
}

/// `K_p`, the trefoil twisted `p` times along `c`, with its `(-1)`-surgery.
pub fn kp_report(p: i64) -> Result<KpReport> {
    let c = seiferter_c()?;
    let start = SurgeryVertex::torus(TorusKnot::trefoil(), -1);
    let mut vertex = twist(&start, &c, p)?;
    vertex.knot = canonical_knot(&vertex);
    let triple = twisted_orbifold(&c.roles[0], p)?;
    Ok(KpReport {
        p,
        vertex,
        triple,
        hyperbolic: p != 0,
        genus_one: true,
    })
}

/// True when `(K_p, -1)` cannot come from the primitive/Seifert-fibered
/// construction: its base orbifold would have to match a twist knot's
/// `(-1)`-surgery `T(-3,2)(-1/n₀)`, which happens only for `p = 0`.
pub fn ps_construction_excluded(p: i64) -> Result<bool> {
    let kp = kp_report(p)?;
    let largest = kp.triple.indices().iter().copied().max().unwrap_or(0);
    // |6n₀ - 1| must equal one of the indices.
    let reach = i64::try_from(largest / 6 + 2).map_err(|_| Error::Overflow("n0 range"))?;
    let t = TorusKnot::trefoil();
    for n0 in (-reach..=reach).filter(|&n0| n0 != 0) {
        let (tw, _) = moser_classify(&t, Fraction::new(-1, n0)?)?;
        if tw.same_multiset(&kp.triple) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// All three surgeries are small Seifert fibered.
pub fn three_successive_check(r: &KnmReport) -> bool {
    r.classes.iter().all(SfsClass::is_small_sfs)
}

/// No fiber index is zero, so all three surgeries are non-degenerate
/// Seifert fibrations.
pub fn nonzero_indices_check(r: &KnmReport) -> bool {
    r.triples.iter().all(|t| !t.has_degenerate_fiber())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum NonSatelliteCertificate {
    ThreeSmallSfs,
    NonzeroIndices,
}

/// Why `K_n^m` is not a satellite: a knot with three successive Seifert
/// fibered surgeries is not one.
pub fn non_satellite_certificate(r: &KnmReport) -> Option<NonSatelliteCertificate> {
    if three_successive_check(r) {
        Some(NonSatelliteCertificate::ThreeSmallSfs)
    } else if nonzero_indices_check(r) {
        Some(NonSatelliteCertificate::NonzeroIndices)
    } else {
        None
    }
}

/// A hyperbolic knot with small Seifert surgeries at `m`, `m+1`, `m+2`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuccessiveTriple {
    pub m: i64,
    pub report: KnmReport,
    /// Use the mirror image of `report`'s knot and negate its slopes.
    pub mirror: bool,
    pub slopes: [i64; 3],
    /// Set when the construction uses an assumption that is not known to
    /// be necessary.
    pub open_question: Option<String>,
}

/// `K_{m+2}^0` for `m ≠ -2`; the mirror of `K_2^0` for `m = -2`.
pub fn successive_triple(m: i64) -> Result<SuccessiveTriple> {
    let mirror = m == -2;
    let n = if mirror {
        2
    } else {
        m.checked_add(2).ok_or(Error::Overflow("twist count"))?
    };
    let report = knm_report(0, n)?;
    let mut slopes = report.slopes;
    if mirror {
        slopes = slopes.map(|s| -s);
    }
    slopes.sort_unstable();
    let open_question = mirror.then(|| {
        "open: whether some hyperbolic knot has small Seifert surgeries at -2, -1, 0 \
         without passing to a mirror image"
            .to_string()
    });
    Ok(SuccessiveTriple {
        m,
        report,
        mirror,
        slopes,
        open_question,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tri(v: [u64; 3]) -> OrbifoldTriple {
        OrbifoldTriple::new(v.to_vec())
    }

    #[test]
    fn pretzel_milestone() {
        let r = knm_report(-6, 1).unwrap();
        assert_eq!(r.slopes, [19, 18, 17]);
        assert_eq!(r.triples, [tri([2, 3, 1]), tri([2, 1, 8]), tri([3, 2, 5])]);
        assert_eq!(r.name, Some(NamedKnot::Pretzel { a: -2, b: 3, c: 7 }));
        assert!(r.hyperbolic);
        assert!(!three_successive_check(&r));
        assert_eq!(non_satellite_certificate(&r), Some(NonSatelliteCertificate::NonzeroIndices));
    }

    #[test]
    fn zero_twist_is_torus_surgery() {
        let t = TorusKnot::trefoil();
        for m in -20..=20 {
            let r = knm_report(m, 0).unwrap();
            assert_eq!(r.knot, KnotDesc::Torus(t));
            for (i, tr) in r.triples.iter().enumerate() {
                let (mo, _) = moser_classify(&t, Fraction::integer(m - i as i64)).unwrap();
                assert!(tr.same_multiset(&mo));
            }
        }
    }

    #[test]
    fn twist_knot_row() {
        let r = knm_report(-1, 2).unwrap();
        assert_eq!(r.triples, [tri([2, 3, 17]), tri([2, 4, 11]), tri([3, 3, 8])]);
        assert_eq!(r.name, Some(NamedKnot::TwistKnot { n: 3 }));
        // Tw(3)(-1) is also T(-3,2)(-1/3): S²(2, 3, |6·3 - 1|).
        let (tw, _) = moser_classify(&TorusKnot::trefoil(), Fraction::new(-1, 3).unwrap()).unwrap();
        assert!(tw.same_multiset(&r.triples[0]));
    }

    #[test]
    fn hyperbolic_predicate() {
        assert!(knm_hyperbolic(-6, 1));
        assert!(!knm_hyperbolic(3, 0));
        assert!(!knm_hyperbolic(-1, -1));
        assert!(!knm_hyperbolic(-4, 7));
    }

    #[test]
    fn small_sfs_examples() {
        for n in [-3, -1, 1, 2, 9] {
            assert!(small_sfs_triple_check(0, n).unwrap());
        }
        assert!(!small_sfs_triple_check(-1, -1).unwrap());
        assert!(!small_sfs_triple_check(-3, 4).unwrap());
        assert!(three_successive_check(&knm_report(0, 3).unwrap()));
        assert!(!three_successive_check(&knm_report(-1, -1).unwrap()));
    }

    #[test]
    fn torus_exclusion_examples() {
        let r = knm_report(0, 2).unwrap();
        let out = torus_knot_exclusion(&r.triples, knm_d(0, 2).unwrap(), 100).unwrap();
        assert_eq!(out.witness, None);
        assert_eq!(out.bound, 100);

        let r = knm_report(-6, 1).unwrap();
        assert_eq!(knm_d(-6, 1).unwrap(), 20);
        assert_eq!(torus_knot_exclusion(&r.triples, 20, 100).unwrap().witness, None);

        let r = knm_report(0, 0).unwrap();
        let out = torus_knot_exclusion(&r.triples, 1, 100).unwrap();
        assert_eq!(out.witness, Some((-3, 2)));

        assert_eq!(torus_knot_exclusion(&r.triples, 1, 1), Err(Error::InvalidBound(1)));
    }

    #[test]
    fn names() {
        let t = KnotDesc::Torus(TorusKnot::trefoil());
        let tw = |s: &str, n| SurgeryVertex::integral(KnotDesc::twisted(t.clone(), s, n).unwrap(), 0);
        assert_eq!(resolve_name(&tw("c^-6", 1)), Some(NamedKnot::Pretzel { a: -2, b: 3, c: 7 }));
        assert_eq!(resolve_name(&tw("c^-1", -1)), Some(NamedKnot::Trivial));
        assert_eq!(resolve_name(&tw("c^-1", -2)), Some(NamedKnot::FigureEight));
        assert_eq!(resolve_name(&tw("c^-1", 4)), Some(NamedKnot::TwistKnot { n: 5 }));
        assert_eq!(resolve_name(&tw("c^-6", 2)), None);
        assert_eq!(resolve_name(&SurgeryVertex::integral(t, 0)), None);
    }

    #[test]
    fn kp_examples() {
        let r = kp_report(-1).unwrap();
        assert_eq!(r.vertex.knot, KnotDesc::Named(NamedKnot::Pretzel { a: 3, b: -3, c: -3 }));
        assert_eq!(r.vertex.slope, Fraction::integer(-1));
        assert!(r.triple.same_multiset(&tri([2, 7, 5])));
        assert!(r.hyperbolic && r.genus_one);

        let r = kp_report(0).unwrap();
        assert_eq!(r.vertex, SurgeryVertex::torus(TorusKnot::trefoil(), -1));
        assert!(r.triple.same_multiset(&tri([2, 3, 5])));
        assert!(!r.hyperbolic);

        assert!(kp_report(2).unwrap().triple.same_multiset(&tri([2, 23, 5])));
    }

    #[test]
    fn ps_exclusion_examples() {
        assert!(!ps_construction_excluded(0).unwrap());
        assert!(ps_construction_excluded(-1).unwrap());
        assert!(ps_construction_excluded(5).unwrap());
    }

    #[test]
    fn successive_triples() {
        let s = successive_triple(0).unwrap();
        assert_eq!(s.slopes, [0, 1, 2]);
        assert!(s.report.hyperbolic && !s.mirror);
        let s = successive_triple(-2).unwrap();
        assert_eq!(s.report.slopes, [2, 1, 0]);
        assert_eq!(s.slopes, [-2, -1, 0]);
        assert!(s.mirror && s.open_question.is_some());
        for m in -15..=15 {
            let s = successive_triple(m).unwrap();
            assert_eq!(s.slopes, [m, m + 1, m + 2]);
            assert!(three_successive_check(&s.report));
            assert!(s.report.hyperbolic);
        }
    }
}
