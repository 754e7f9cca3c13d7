use proptest::prelude::*;

use ssn_core::network::{build, export_json, cm_lines, load_json, seiferter_by_name};
use ssn_core::seiferter::{cm_family, twist};
use ssn_core::sfs::{classify_triple, continued_fraction, lens_equivalent, LensSpace};
use ssn_core::sweep::{knm_grid, knm_grid_sequential};
use ssn_core::{Fraction, OrbifoldTriple, SurgeryVertex, TorusKnot};

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

fn lens(p: u64, q: i64) -> Option<LensSpace> {
    LensSpace::new(p, Some(q)).ok()
}

/// Folds `[a0; a1, ..., ak]` back into `num/den` in lowest terms.
fn reassemble(cf: &[i64]) -> (i128, i128) {
    let (last, rest) = cf.split_last().unwrap();
    let (mut num, mut den) = (*last as i128, 1i128);
    for &a in rest.iter().rev() {
        (num, den) = (a as i128 * num + den, num);
    }
    if den < 0 {
        (num, den) = (-num, -den);
    }
    (num, den)
}

proptest! {
    #[test]
    fn continued_fraction_reassembles(num in -100_000i64..=100_000, den in 1i64..=100_000) {
        let f = Fraction::new(num, den).unwrap();
        let cf = continued_fraction(f).unwrap();
        let g = gcd(num, den);
        prop_assert_eq!(reassemble(&cf), ((num / g) as i128, (den / g) as i128));
        for a in cf.iter().skip(1) {
            prop_assert!(*a >= 1);
        }
    }

    #[test]
    fn fraction_display_parses_back(num in -1_000_000i64..=1_000_000, den in -1000i64..=1000) {
        prop_assume!(num != 0 || den != 0);
        let f = Fraction::new(num, den).unwrap();
        let back: Fraction = f.to_string().parse().unwrap();
        prop_assert_eq!(back, f);
    }

    #[test]
    fn lens_equivalence_is_an_equivalence(p in 2u64..=60, a in -200i64..=200, b in -200i64..=200, c in -200i64..=200, oriented: bool) {
        let (Some(x), Some(y), Some(z)) = (lens(p, a), lens(p, b), lens(p, c)) else {
            return Ok(());
        };
        prop_assert!(lens_equivalent(&x, &x, oriented).unwrap());
        let xy = lens_equivalent(&x, &y, oriented).unwrap();
        prop_assert_eq!(xy, lens_equivalent(&y, &x, oriented).unwrap());
        if xy && lens_equivalent(&y, &z, oriented).unwrap() {
            prop_assert!(lens_equivalent(&x, &z, oriented).unwrap());
        }
        // q and q + p name the same space.
        prop_assert!(lens_equivalent(&x, &lens(p, a + p as i64).unwrap(), true).unwrap());
    }

    #[test]
    fn lens_brute_force(p in 2u64..=40, a in 1i64..40, b in 1i64..40) {
        let (Some(x), Some(y)) = (lens(p, a), lens(p, b)) else {
            return Ok(());
        };
        let pi = p as i64;
        let oriented = (a - b).rem_euclid(pi) == 0 || (a * b - 1).rem_euclid(pi) == 0;
        let any = oriented || (a + b).rem_euclid(pi) == 0 || (a * b + 1).rem_euclid(pi) == 0;
        prop_assert_eq!(lens_equivalent(&x, &y, true).unwrap(), oriented);
        prop_assert_eq!(lens_equivalent(&x, &y, false).unwrap(), any);
    }

    #[test]
    fn unit_entries_do_not_matter(v in prop::collection::vec(0u64..=40, 1..=3), ones in 0usize..=3) {
        let mut padded = v.clone();
        padded.extend(std::iter::repeat_n(1, ones));
        let a = classify_triple(&OrbifoldTriple::new(v));
        let b = classify_triple(&OrbifoldTriple::new(padded));
        prop_assert_eq!(a, b);
    }

    #[test]
    fn twisted_vertices_keep_slope_rule(m in -40i64..=40, k in -20i64..=20, n in -10i64..=10) {
        let c = cm_family(k).unwrap();
        let v = SurgeryVertex::torus(TorusKnot::trefoil(), m);
        let w = twist(&v, &c, n).unwrap();
        prop_assert_eq!(w.integer_slope().unwrap(), m + n * c.lk_with_knot * c.lk_with_knot);
    }

    #[test]
    fn json_round_trip(m in -10i64..=4, radius in 1u32..=2) {
        let g = cm_lines(m, radius).unwrap().build().unwrap();
        let text = export_json(&g).unwrap();
        prop_assert_eq!(&export_json(&load_json(&text).unwrap()).unwrap(), &text);
    }
}

#[test]
fn parallel_matches_sequential() {
    let par = knm_grid(-20..=20, -20..=20).unwrap();
    let seq = knm_grid_sequential(-20..=20, -20..=20).unwrap();
    assert_eq!(par, seq);
    assert_eq!(par.len(), 41 * 41);
    assert_eq!((par[0].m, par[0].n), (-20, -20));
    assert_eq!((par[1].m, par[1].n), (-20, -19));
}

#[test]
fn radius_one_counts() {
    // c_mu (lk 1) and c^1 (lk 2) from (T, -1): four new vertices.
    let seeds = vec![SurgeryVertex::torus(TorusKnot::trefoil(), -1)];
    let s = vec![
        seiferter_by_name("c_mu").unwrap(),
        seiferter_by_name("c^1").unwrap(),
    ];
    let g = build(&seeds, &s, 1).unwrap();
    assert_eq!(g.vertices.len(), 5);
    assert_eq!(g.edges.len(), 4);
    assert_eq!(g.vertices.iter().filter(|v| v.frontier).count(), 4);
}

#[test]
fn build_is_deterministic() {
    let a = export_json(&cm_lines(-6, 3).unwrap().build().unwrap()).unwrap();
    for _ in 0..4 {
        let b = export_json(&cm_lines(-6, 3).unwrap().build().unwrap()).unwrap();
        assert_eq!(a, b);
    }
}
