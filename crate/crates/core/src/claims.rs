//! Regression registry: every tabulated result the crate reproduces, with
//! the value it computes and the value it is expected to match.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::classify::{
    closed_form_indices, generic_triples, knm_d, knm_hyperbolic, knm_report, kp_report,
    non_satellite_certificate, ps_construction_excluded, resolve_name, small_sfs_triple_check,
    torus_knot_exclusion, DEFAULT_TORUS_BOUND,
};
use crate::error::{Error, Result};
use crate::fraction::Fraction;
use crate::homology::{band_sum_boundary_slope, framing_after_m_move};
use crate::network::{export_json, cm_lines, named_knots, load_json, NetworkGraph};
use crate::seiferter::{
    basic_annular_candidates, cm_family, cm_link, same_lk_filter, seiferter_status, twist,
    KnotDesc, NamedKnot, PairFamily, SeiferterStatus, SurgeryVertex, TrefoilSeiferter,
};
use crate::sfs::{
    double_branched_cover, montesinos_status, two_bridge_is_torus_link, MontesinosStatus,
    OrbifoldTriple, TwoBridge,
};
use crate::sweep::{grid, map_ordered};
use crate::torus_surgery::{moser_classify, BasicSeiferterKind, TorusKnot};

/// Outcome of one claim.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub computed: String,
    pub expected: String,
    pub pass: bool,
}

impl Check {
    fn eq<T: PartialEq + std::fmt::Debug>(computed: T, expected: T) -> Check {
        Check {
            pass: computed == expected,
            computed: format!("{computed:?}"),
            expected: format!("{expected:?}"),
        }
    }

    /// A sweep: `failures` lists the offending parameters.
    fn sweep(what: &str, total: usize, failures: Vec<String>) -> Check {
        let computed = match failures.first() {
            None => format!("{what}: {total}/{total} agree"),
            Some(first) => format!(
                "{what}: {} of {total} disagree, first at {first}",
                failures.len()
            ),
        };
        Check {
            pass: failures.is_empty(),
            computed,
            expected: format!("{what}: {total}/{total} agree"),
        }
    }
}

pub struct Claim {
    pub id: &'static str,
    pub tag: &'static str,
    pub anchor: &'static str,
    run: fn() -> Result<Check>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClaimResult {
    pub id: &'static str,
    pub tag: &'static str,
    pub anchor: &'static str,
    #[serde(flatten)]
    pub check: Check,
}

fn tri(v: [u64; 3]) -> OrbifoldTriple {
    OrbifoldTriple::new(v.to_vec())
}

fn trefoil() -> TorusKnot {
    TorusKnot::trefoil()
}

fn formula_sweep(which: usize) -> Result<Check> {
    let pts = grid(-50..=50, -50..=50);
    let bad = map_ordered(&pts, |&(m, n)| -> Result<Option<String>> {
        let closed = closed_form_indices(m, n)?[which];
        let generic = &generic_triples(m, n)?[which];
        // The homology path replaces exactly one entry of the torus-knot triple.
        let (base, _) = moser_classify(&trefoil(), Fraction::integer(m - which as i64))?;
        let role = &cm_family(m)?.roles[which];
        let pos = role.isotopic_to.triple_position();
        let ok = generic.indices()[pos] == closed
            && generic.with_index(pos, base.indices()[pos]) == base;
        Ok((!ok).then(|| format!("(m, n) = ({m}, {n})")))
    });
    let failures = bad.into_iter().collect::<Result<Vec<_>>>()?;
    Ok(Check::sweep(
        "closed form vs homology path on [-50,50]^2",
        pts.len(),
        failures.into_iter().flatten().collect(),
    ))
}

fn c_mu_line_present(g: &NetworkGraph, slopes: std::ops::RangeInclusive<i64>) -> bool {
    let t = KnotDesc::Torus(trefoil());
    let id = |s: i64| format!("{t}({s})");
    slopes.clone().all(|s| g.contains(&t, s))
        && slopes
            .clone()
            .zip(slopes.skip(1))
            .all(|(a, b)| g.has_edge(&id(a), &id(b), "c_mu"))
}

pub fn registry() -> Vec<Claim> {
    vec![
        Claim {
            id: "moves-framing",
            tag: "moves",
            anchor: "framings 3 then 4 along the two (-1)-moves building c",
            run: || {
                Ok(Check::eq(
                    (framing_after_m_move(0, 2, -1)?, framing_after_m_move(3, 1, -1)?),
                    (3, 4),
                ))
            },
        },
        Claim {
            id: "moves-band-sum",
            tag: "moves",
            anchor: "band-sum boundary slopes -2 and -1 at m = -5",
            run: || {
                Ok(Check::eq(
                    (band_sum_boundary_slope(-1, -5, 2)?, band_sum_boundary_slope(-2, -5, 3)?),
                    (-2, -1),
                ))
            },
        },
        Claim {
            id: "base-orbifold-a",
            tag: "base-orbifold",
            anchor: "index |n(m+2)(m+6)+m+n+6| from the meridional role",
            run: || formula_sweep(0),
        },
        Claim {
            id: "base-orbifold-b",
            tag: "base-orbifold",
            anchor: "index |3n(m+3)-2n+3| from the s_-3 role",
            run: || formula_sweep(1),
        },
        Claim {
            id: "base-orbifold-c",
            tag: "base-orbifold",
            anchor: "index |2n(m+4)-3n+2| from the s_2 role",
            run: || formula_sweep(2),
        },
        Claim {
            id: "pretzel-237",
            tag: "pretzel",
            anchor: "K_1^-6 = P(-2,3,7) with surgeries 19, 18, 17",
            run: || {
                let r = knm_report(-6, 1)?;
                Ok(Check::eq(
                    (r.slopes, r.triples.clone(), r.name),
                    (
                        [19, 18, 17],
                        [tri([2, 3, 1]), tri([2, 1, 8]), tri([3, 2, 5])],
                        Some(NamedKnot::Pretzel { a: -2, b: 3, c: 7 }),
                    ),
                ))
            },
        },
        Claim {
            id: "twist-knot-line",
            tag: "twist-knots",
            anchor: "n twists along c^-1 give (Tw(n+1), -1), n in [-20,20]",
            run: || {
                let c = cm_family(-1)?;
                let start = SurgeryVertex::torus(trefoil(), -1);
                let mut failures = Vec::new();
                for n in -20..=20 {
                    let v = twist(&start, &c, n)?;
                    let ok = v.slope == Fraction::integer(-1)
                        && resolve_name(&v) == (n != 0).then(|| NamedKnot::twist_knot(n + 1));
                    if !ok {
                        failures.push(format!("n = {n}"));
                    }
                }
                Ok(Check::sweep("names on the c^-1 line", 41, failures))
            },
        },
        Claim {
            id: "twist-knot-surgery",
            tag: "twist-knots",
            anchor: "T(-3,2)(-1/n0) fibers over S^2(2,3,|6n0-1|)",
            run: || {
                let mut failures = Vec::new();
                for n0 in (-20..=20).filter(|&n| n != 0) {
                    let (t, _) = moser_classify(&trefoil(), Fraction::new(-1, n0)?)?;
                    if !t.same_multiset(&tri([2, 3, (6 * n0 - 1).unsigned_abs()])) {
                        failures.push(format!("n0 = {n0}"));
                    }
                }
                Ok(Check::sweep("n0 in [-20,20]", 40, failures))
            },
        },
        Claim {
            id: "kp-orbifold",
            tag: "kp-family",
            anchor: "K_p(-1) fibers over S^2(2,|10p+3|,5), |p| <= 50",
            run: || {
                let mut failures = Vec::new();
                for p in -50..=50 {
                    let r = kp_report(p)?;
                    let closed = tri([2, (10 * p + 3).unsigned_abs(), 5]);
                    if !r.triple.same_multiset(&closed) || r.hyperbolic != (p != 0) {
                        failures.push(format!("p = {p}"));
                    }
                }
                Ok(Check::sweep("p in [-50,50]", 101, failures))
            },
        },
        Claim {
            id: "kp-pretzel",
            tag: "kp-family",
            anchor: "(-1)-twist along c gives (P(3,-3,-3), -1)",
            run: || {
                let r = kp_report(-1)?;
                Ok(Check::eq(
                    r.vertex,
                    SurgeryVertex::integral(
                        KnotDesc::Named(NamedKnot::Pretzel { a: 3, b: -3, c: -3 }),
                        -1,
                    ),
                ))
            },
        },
        Claim {
            id: "ps-exclusion",
            tag: "ps-exclusion",
            anchor: "only K_0 arises from the primitive/Seifert-fibered construction, |p| <= 100",
            run: || {
                let ps: Vec<i64> = (-100..=100).collect();
                let got = map_ordered(&ps, |&p| ps_construction_excluded(p).map(|e| (p, e)));
                let mut failures = Vec::new();
                for r in got {
                    let (p, excluded) = r?;
                    if excluded != (p != 0) {
                        failures.push(format!("p = {p}"));
                    }
                }
                Ok(Check::sweep("p in [-100,100]", ps.len(), failures))
            },
        },
        Claim {
            id: "seiferter-table",
            tag: "seiferter-table",
            anchor: "status of c_1^m, c_2^m, c_3^m for m from -8 to -1",
            run: || {
                use BasicSeiferterKind::*;
                let cable = SeiferterStatus::Cable {
                    of: SP,
                    slope: Fraction::new(-1, 2)?,
                };
                let b = |of| SeiferterStatus::Basic { of };
                let h = SeiferterStatus::Hyperbolic;
                // Rows c^m, c^{m+1}, c^{m+2}; columns m = -8, ..., -1.
                let rows = [
                    [h, h, h, cable, b(SQ), b(SP), b(CMu), h],
                    [h, h, cable, b(SQ), b(SP), b(CMu), h, h],
                    [h, cable, b(SQ), b(SP), b(CMu), h, h, h],
                ];
                let mut computed = Vec::new();
                for (i, _) in rows.iter().enumerate() {
                    computed.push(std::array::from_fn::<_, 8, _>(|j| {
                        seiferter_status(-8 + j as i64 + i as i64)
                    }));
                }
                Ok(Check::eq(computed, rows.to_vec()))
            },
        },
        Claim {
            id: "knm-hyperbolic",
            tag: "hyperbolic",
            anchor: "every hyperbolic K_n^m has a non-satellite certificate, [-30,30]^2",
            run: || {
                let pts = grid(-30..=30, -30..=30);
                let got = map_ordered(&pts, |&(m, n)| -> Result<Option<String>> {
                    if !knm_hyperbolic(m, n) {
                        return Ok(None);
                    }
                    let r = knm_report(m, n)?;
                    let ok = (small_sfs_triple_check(m, n)? || m == -6)
                        && non_satellite_certificate(&r).is_some();
                    Ok((!ok).then(|| format!("(m, n) = ({m}, {n})")))
                });
                let failures = got.into_iter().collect::<Result<Vec<_>>>()?;
                Ok(Check::sweep("[-30,30]^2", pts.len(), failures.into_iter().flatten().collect()))
            },
        },
        Claim {
            id: "torus-exclusion",
            tag: "hyperbolic",
            anchor: "no torus knot shares the three surgeries of a hyperbolic K_n^m, [-15,15]^2",
            run: || {
                let pts = grid(-15..=15, -15..=15);
                let got = map_ordered(&pts, |&(m, n)| -> Result<Option<String>> {
                    if !knm_hyperbolic(m, n) {
                        return Ok(None);
                    }
                    let r = knm_report(m, n)?;
                    let out = torus_knot_exclusion(&r.triples, knm_d(m, n)?, DEFAULT_TORUS_BOUND)?;
                    Ok(out.witness.map(|w| format!("(m, n) = ({m}, {n}) witness {w:?}")))
                });
                let failures = got.into_iter().collect::<Result<Vec<_>>>()?;
                Ok(Check::sweep(
                    "[-15,15]^2 with |p| <= 100",
                    pts.len(),
                    failures.into_iter().flatten().collect(),
                ))
            },
        },
        Claim {
            id: "annular-candidates",
            tag: "annular",
            anchor: "basic-looking pairs over m in [-30,30]",
            run: || {
                let mut computed = Vec::new();
                for m in -30..=30 {
                    for c in basic_annular_candidates(m)? {
                        computed.push((m, c.family, c.rejected.is_some()));
                    }
                }
                use TrefoilSeiferter::*;
                let expected = vec![
                    (-6, PairFamily(SMinus3, C3), false),
                    (-5, PairFamily(C2, C3), false),
                    (-4, PairFamily(C1, C2), false),
                    (-4, PairFamily(C1, C3), false),
                    (-4, PairFamily(C2, C3), false),
                    (-3, PairFamily(C1, C2), false),
                    (0, PairFamily(SMinus3, C3), true),
                ];
                Ok(Check::eq(computed, expected))
            },
        },
        Claim {
            id: "same-lk",
            tag: "annular",
            anchor: "pairs linking the trefoil equally, m in [-30,30]",
            run: || {
                let mut computed = Vec::new();
                for m in -30..=30 {
                    for h in same_lk_filter(m)? {
                        computed.push((h.family, m, h.irrelevant));
                    }
                }
                computed.sort();
                use TrefoilSeiferter::*;
                let mut expected = vec![
                    (PairFamily(CMu, C2), -3, false),
                    (PairFamily(CMu, C2), -1, false),
                    (PairFamily(CMu, C3), -4, false),
                    (PairFamily(CMu, C3), -2, false),
                    (PairFamily(SMinus3, C1), -3, false),
                    (PairFamily(SMinus3, C1), 1, false),
                    (PairFamily(SMinus3, C3), -5, true),
                    (PairFamily(SMinus3, C3), -1, false),
                    (PairFamily(S2, C1), -4, false),
                    (PairFamily(S2, C1), 2, false),
                    (PairFamily(S2, C2), -5, true),
                    (PairFamily(S2, C2), 1, false),
                ];
                expected.sort();
                Ok(Check::eq(computed, expected))
            },
        },
        Claim {
            id: "two-bridge-families",
            tag: "two-bridge",
            anchor: "(6p+4)/(2p+1) torus iff p in {0,-1}; (6p+10)/(2p+3) iff p in {-1,-2}",
            run: || {
                let mut failures = Vec::new();
                for p in -50..=50 {
                    let a = two_bridge_is_torus_link(&TwoBridge::from_pair(6 * p + 4, 2 * p + 1)?);
                    let b = two_bridge_is_torus_link(&TwoBridge::from_pair(6 * p + 10, 2 * p + 3)?);
                    if a != (p == 0 || p == -1) || b != (p == -1 || p == -2) {
                        failures.push(format!("p = {p}"));
                    }
                }
                Ok(Check::sweep("p in [-50,50]", 101, failures))
            },
        },
        Claim {
            id: "montesinos-covers",
            tag: "montesinos",
            anchor: "double branched covers over S^2(2,3,6) and S^2(2,3,2); Euler numbers 1/3 and 0",
            run: || {
                let (t1, _) = double_branched_cover(&cm_link(1)?)?;
                let (t3, _) = double_branched_cover(&cm_link(-3)?)?;
                let (_, e_plus) = double_branched_cover(&crate::sfs::Montesinos::from_pairs([
                    (-1, 2),
                    (2, 3),
                    (1, 6),
                ])?)?;
                let (_, e_minus) = double_branched_cover(&crate::sfs::Montesinos::from_pairs([
                    (-1, 2),
                    (2, 3),
                    (-1, 6),
                ])?)?;
                Ok(Check::eq(
                    (t1.multiset(), t3.multiset(), e_plus, e_minus),
                    (vec![2, 3, 6], vec![2, 2, 3], Fraction::new(1, 3)?, Fraction::ZERO),
                ))
            },
        },
        Claim {
            id: "montesinos-toroidal",
            tag: "montesinos",
            anchor: "T(-3,2) u c^m is toroidal only at m = -5 (m outside -4..-2, |m| <= 50)",
            run: || {
                let mut toroidal = Vec::new();
                for m in (-50..=50).filter(|m| !(-4..=-2).contains(m)) {
                    if montesinos_status(&cm_link(m)?)? == MontesinosStatus::ExceptionalToroidal {
                        toroidal.push(m);
                    }
                }
                Ok(Check::eq(toroidal, vec![-5]))
            },
        },
        Claim {
            id: "network-named-knots",
            tag: "network",
            anchor: "named surgeries around (T,-1) and (T,-6)",
            run: || {
                let g = named_knots()?.build()?;
                let want = [
                    (NamedKnot::Trivial, -1),
                    (NamedKnot::FigureEight, -1),
                    (NamedKnot::Pretzel { a: -2, b: 3, c: 7 }, 19),
                    (NamedKnot::Pretzel { a: 3, b: -3, c: -3 }, -1),
                ];
                let computed: Vec<bool> = want
                    .iter()
                    .map(|(k, s)| g.contains(&KnotDesc::Named(*k), *s))
                    .collect();
                Ok(Check::eq(
                    (
                        computed,
                        c_mu_line_present(&g, -3..=1) && c_mu_line_present(&g, -8..=-4),
                    ),
                    (vec![true; 4], true),
                ))
            },
        },
        Claim {
            id: "network-cm-lines",
            tag: "network",
            anchor: "c^m lines through (T,m), (T,m-1), (T,m-2) and the c_mu line, m = 0",
            run: || {
                let g = cm_lines(0, 2)?.build()?;
                let t = KnotDesc::Torus(trefoil());
                let mut lines = Vec::new();
                for s in -2..=0 {
                    let c = cm_family(0)?;
                    let v = twist(&SurgeryVertex::integral(t.clone(), s), &c, 1)?;
                    lines.push(g.contains(&v.knot, v.integer_slope()?));
                }
                Ok(Check::eq(
                    (lines, c_mu_line_present(&g, -4..=2)),
                    (vec![true; 3], true),
                ))
            },
        },
        Claim {
            id: "network-json",
            tag: "network",
            anchor: "JSON export round-trips byte for byte",
            run: || {
                let g = cm_lines(-3, 2)?.build()?;
                let a = export_json(&g)?;
                let b = export_json(&load_json(&a)?)?;
                Ok(Check::eq(a == b, true))
            },
        },
    ]
}

pub fn tags() -> BTreeSet<&'static str> {
    registry().iter().map(|c| c.tag).collect()
}

/// Runs every claim, or those whose tag or id equals `filter`.
pub fn verify(filter: Option<&str>) -> Result<Vec<ClaimResult>> {
    let selected: Vec<Claim> = registry()
        .into_iter()
        .filter(|c| filter.is_none_or(|f| c.tag == f || c.id == f))
        .collect();
    if selected.is_empty() {
        return Err(Error::UnknownClaimTag(filter.unwrap_or_default().to_string()));
    }
    selected
        .iter()
        .map(|c| {
            Ok(ClaimResult {
                id: c.id,
                tag: c.tag,
                anchor: c.anchor,
                check: (c.run)()?,
            })
        })
        .collect()
}
