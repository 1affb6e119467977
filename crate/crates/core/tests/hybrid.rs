mod common;

use common::*;
use desing_core::blowup::Center;
use desing_core::coeff::{coeff_ideal_villamayor, weighted_order, BigOrder};
use desing_core::hybrid::{
    hybrid_invariant, lemma_equivalence_check, maximal_contact_frame, modified_coeff_ideal, staged_build,
    staged_build_with, suggest_center, InvariantEntry,
};
use desing_core::invariants::order_of_ideal;
use desing_core::poly::Polynomial;
use desing_core::stdbasis::{ideal_equals, Ideal};
use desing_core::{Error, MonomialOrder, OrderValue};
use num_bigint::BigUint;

fn fin(v: u64) -> BigOrder {
    BigOrder::Finite(BigUint::from(v))
}

fn entry(value: BigOrder, dimension: usize) -> InvariantEntry {
    InvariantEntry { value, dimension }
}

fn linear_support(f: &Polynomial) -> Vec<usize> {
    let n = f.ring().nvars();
    (0..n).filter(|&i| f.terms().iter().any(|(_, m)| m.degree() == 1 && m.exp(i) == 1)).collect()
}

#[test]
fn frames() {
    let r = ring5();
    let local = MonomialOrder::local(5);
    let f = maximal_contact_frame(&five_var_ideal(), 2, &local).unwrap();
    assert_eq!(f, vec![p(&r, "z")]);

    let j = ideal(&r, &["z^5 + z^3*x^3*y^3", "w^5 + x^5 + v^3*y^2"]);
    let f = maximal_contact_frame(&j, 5, &local).unwrap();
    assert_eq!(f.len(), 5);
    let mut support: Vec<usize> = f.iter().flat_map(linear_support).collect();
    support.sort_unstable();
    support.dedup();
    assert_eq!(support, vec![0, 1, 2, 3, 4]);

    let r2 = ring(&["x", "y"]);
    let f = maximal_contact_frame(&ideal(&r2, &["x^2 + y^2"]), 2, &MonomialOrder::local(2)).unwrap();
    assert_eq!(f.len(), 2);
    assert!(f.contains(&p(&r2, "x")) && f.contains(&p(&r2, "y")));

    assert!(matches!(
        maximal_contact_frame(&five_var_ideal(), 3, &local),
        Err(Error::OrderMismatch { expected: 3, .. })
    ));
}

#[test]
fn staging_five_var() {
    let r = ring5();
    let h = staged_build(&five_var_ideal()).unwrap();
    assert_eq!(h.degrees(), vec![2, 5]);
    assert_eq!(h.widths(), vec![1, 5]);
    assert!(h.substitution_is_identity());
    let j = ideal(&r, &["z^5 + z^3*x^3*y^3", "w^5 + x^5 + v^3*y^2"]);
    assert!(ideal_equals(h.jk(), &j, &MonomialOrder::degrevlex(5)).unwrap());
    assert_eq!(order_of_ideal(h.jk(), None).unwrap(), OrderValue::Finite(5));
    assert!(h.is_zero_dimensional());
    let w = modified_coeff_ideal(&h).unwrap();
    assert!(w.components().is_empty());
    assert_eq!(weighted_order(&w, None).unwrap(), BigOrder::Infinite);
}

#[test]
fn staging_three_var() {
    let r = ring3();
    let h = staged_build_with(&three_var_ideal(), &zyx_local()).unwrap();
    assert_eq!(h.degrees(), vec![5, 9]);
    assert_eq!(h.widths(), vec![1, 2]);
    let mut flag = h.flag_names();
    flag.sort();
    assert_eq!(flag, ["x", "z"]);
    assert_eq!(h.jk(), &ideal(&r, &["x^9 + x^4*y^11", "z^9 + x^9"]));

    let w = modified_coeff_ideal(&h).unwrap();
    let levels: Vec<i64> = w.components().iter().map(|c| c.level).collect();
    assert_eq!(levels, vec![4, 5, 6, 7, 8]);
    let y = ring(&["y"]);
    for c in w.components() {
        assert_eq!(c.ideal, ideal(&y, &["y^11"]));
        let expected: u64 = 362880 / (9 - c.level as u64);
        assert_eq!(c.exponent, BigUint::from(expected));
    }
    assert_eq!(weighted_order(&w, None).unwrap(), fin(798336));
}

#[test]
fn single_generator_stages_once() {
    let r = ring3();
    let f = ideal(&r, &["z^2 + x^3"]);
    let h = staged_build(&f).unwrap();
    assert_eq!(h.degrees(), vec![2]);
    assert_eq!(h.jk(), &f);
    assert_eq!(h.flag_names(), ["z"]);
    let w = modified_coeff_ideal(&h).unwrap();
    assert_eq!(weighted_order(&w, None).unwrap(), fin(3));
    let plain = coeff_ideal_villamayor(&f, 2, 2).unwrap();
    assert_eq!(weighted_order(&plain, None).unwrap(), fin(3));
    // every level of the ordinary coefficient ideal is contained level-wise
    for c in plain.components() {
        let same = w.components().iter().find(|d| d.level == c.level).unwrap();
        assert_eq!(same.exponent, c.exponent);
        assert!(desing_core::stdbasis::ideal_contains(&same.ideal, &c.ideal, &MonomialOrder::degrevlex(2)).unwrap());
    }
}

#[test]
fn staging_rejects_degenerate_input() {
    let r = ring3();
    assert!(matches!(staged_build(&Ideal::zero(&r)), Err(Error::ZeroIdeal)));
    assert!(matches!(staged_build(&ideal(&r, &["1 + x"])), Err(Error::UnitIdeal)));
}

#[test]
fn invariants_of_examples() {
    let inv = hybrid_invariant(&five_var_ideal(), 8).unwrap();
    assert_eq!(inv.entries, vec![entry(fin(5), 5), entry(BigOrder::Infinite, 0)]);
    assert!(inv.complete);

    let r = ring3();
    let i2 = three_var_ideal();
    let h = staged_build_with(&i2, &zyx_local()).unwrap();
    let inv = desing_core::hybrid::hybrid_invariant_of(&h, 8).unwrap();
    assert_eq!(inv.entries, vec![entry(fin(9), 3), entry(fin(798336), 1), entry(BigOrder::Infinite, 0)]);

    let smooth = hybrid_invariant(&ideal(&r, &["x"]), 8).unwrap();
    assert_eq!(smooth.entries[0], entry(fin(1), 3));
    assert!(smooth.complete);
    assert_eq!(smooth.entries.last().unwrap().value, BigOrder::Infinite);
}

#[test]
fn invariant_depth_limit() {
    let r = ring3();
    let inv = hybrid_invariant(&ideal(&r, &["z^2 + x^3 + y^5"]), 2).unwrap();
    assert_eq!(inv.entries.len(), 2);
    assert!(!inv.complete);
    let full = hybrid_invariant(&ideal(&r, &["z^2 + x^3 + y^5"]), 8).unwrap();
    assert!(full.complete);
    assert_eq!(full.entries[1], entry(fin(3), 2));
}

#[test]
fn centers() {
    let c = suggest_center(&five_var_ideal(), 8).unwrap();
    assert_eq!(c.center_vars, ["x", "y", "z", "w", "v"]);
    let c = suggest_center(&three_var_ideal(), 8).unwrap();
    assert_eq!(c.center_vars, ["x", "y", "z"]);
    assert_eq!(c.to_string(), "V(x,y,z)");
    let smooth = suggest_center(&ideal(&ring3(), &["x"]), 8).unwrap();
    assert!(smooth.is_empty());
}

#[test]
fn marker_consistency_on_random_pairs() {
    let r = ring3();
    let mut rng = rng(17);
    let mut checked = 0;
    for _ in 0..40 {
        let lo = {
            use rand::Rng;
            rng.gen_range(2..=3)
        };
        let f = random_poly(&mut rng, &r, 3, lo, lo);
        let g = random_poly(&mut rng, &r, 3, lo + 1, lo + 2);
        if f.is_zero() || g.is_zero() {
            continue;
        }
        let i = Ideal::new(&r, vec![f, g]).unwrap();
        let h = match staged_build(&i) {
            Ok(h) => h,
            Err(Error::NonPolynomialCoordinateChange(_)) => continue,
            Err(e) => panic!("{e}"),
        };
        for (g, d) in h.marked() {
            assert_eq!(g.order(), OrderValue::Finite(d));
        }
        let w = h.widths();
        assert!(w.windows(2).all(|p| p[0] <= p[1]) && *w.last().unwrap() <= 3);
        assert_eq!(order_of_ideal(h.jk(), None).unwrap(), OrderValue::Finite(h.dk()));
        checked += 1;
    }
    assert!(checked >= 20, "only {checked} cases staged");
}

#[test]
fn lemma_on_five_var_charts() {
    let r = ring5();
    let report = lemma_equivalence_check(&five_var_ideal(), &Center::point(&r), Some(3)).unwrap();
    assert!(report.all_equivalent());
    let y = report.charts.iter().find(|c| c.chart == "y").unwrap();
    assert!(y.hs_drop);
    assert_eq!(y.hs_strict.as_ref().unwrap().values(), &[1, 5, 14, 29]);
    assert_eq!(y.weak_jk_order, OrderValue::Finite(3));
    let x = report.charts.iter().find(|c| c.chart == "x").unwrap();
    assert!(x.hs_drop && x.order_drop);
    assert_eq!(x.weak_jk_order, OrderValue::Finite(0));
}

#[test]
fn lemma_on_three_var_charts() {
    let r = ring3();
    let report = lemma_equivalence_check(&three_var_ideal(), &Center::point(&r), None).unwrap();
    assert!(report.all_equivalent());
    let y = report.charts.iter().find(|c| c.chart == "y").unwrap();
    assert!(!y.hs_drop && !y.order_drop);
    assert_eq!(y.rebuilt_matches, Some(true));
}

#[test]
fn lemma_unchanged_hypersurface() {
    let r = ring3();
    let f = ideal(&r, &["z^2 + x^4*y^4"]);
    let report = lemma_equivalence_check(&f, &Center::point(&r), None).unwrap();
    let x = report.charts.iter().find(|c| c.chart == "x").unwrap();
    assert!(!x.hs_drop && !x.order_drop);
    assert_eq!(x.rebuilt_matches, Some(true));
    assert!(report.all_equivalent());
}

fn staging_summary(h: &desing_core::hybrid::HybridData) -> (Vec<u32>, Vec<usize>, OrderValue, BigOrder) {
    let w = modified_coeff_ideal(h).unwrap();
    (h.degrees(), h.widths(), order_of_ideal(h.jk(), None).unwrap(), weighted_order(&w, None).unwrap())
}

#[test]
fn staging_is_stable_under_perturbation() {
    let mut rng = rng(606);
    let r5 = ring5();
    let i1 = five_var_ideal();
    let base1 = staging_summary(&staged_build(&i1).unwrap());
    // z, x, y, w, v
    let chain1 = [2, 0, 1, 3, 4];
    for _ in 0..50 {
        let phi = triangular_substitution(&mut rng, &r5, &chain1);
        let h = staged_build(&i1.substitute(&phi, &r5)).unwrap();
        assert_eq!(staging_summary(&h), base1);
    }
    let r3 = ring3();
    let i2 = three_var_ideal();
    let base2 = staging_summary(&staged_build_with(&i2, &zyx_local()).unwrap());
    // x, z, y
    let chain2 = [0, 2, 1];
    for _ in 0..50 {
        let phi = triangular_substitution(&mut rng, &r3, &chain2);
        let moved = i2.substitute(&phi, &r3);
        let h = staged_build_with(&moved, &zyx_local()).unwrap();
        assert_eq!(staging_summary(&h), base2, "{moved}");
    }
}
