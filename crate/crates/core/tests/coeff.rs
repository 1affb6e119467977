mod common;

use common::*;
use desing_core::coeff::{
    coeff_ideal_villamayor, coefficients_in_flag, coefficients_in_variable, expand_weighted, monomial_split,
    weighted_order, BigOrder, Component, WeightedIdealSum,
};
use desing_core::invariants::order_of_ideal;
use desing_core::poly::{integer, Monomial, Polynomial};
use desing_core::stdbasis::Ideal;
use desing_core::{Error, OrderValue};
use num_bigint::BigUint;
use rand::Rng;

fn fin(v: u64) -> BigOrder {
    BigOrder::Finite(BigUint::from(v))
}

fn reassemble_flag(f: &Polynomial, flag: &[usize]) -> Polynomial {
    let parts = coefficients_in_flag(f, flag).unwrap();
    let mut acc = Polynomial::zero(f.ring());
    for (beta, c) in parts {
        for &v in flag {
            assert_eq!(c.degree_in(v).unwrap_or(0), 0, "coefficient still involves the flag");
        }
        let mut exps = vec![0u32; f.ring().nvars()];
        for (i, &v) in flag.iter().enumerate() {
            exps[v] = beta[i];
        }
        acc = acc.add(&c.mul(&Polynomial::monomial(f.ring(), integer(1), Monomial::from_exps(exps))));
    }
    acc
}

#[test]
fn coefficients_reassemble() {
    let r = ring5();
    let f = p(&r, "z^2 + 3*x^3*y^3*z - w^5*z + v");
    let c = coefficients_in_variable(&f, 2).unwrap();
    assert_eq!(c.len(), 3);
    assert_eq!(c[&2], p(&r, "1"));
    assert_eq!(c[&1], p(&r, "3*x^3*y^3 - w^5"));
    assert_eq!(c[&0], p(&r, "v"));
    let mut rng = rng(11);
    for _ in 0..100 {
        let f = random_poly(&mut rng, &r, 6, 0, 5);
        let k = rng.gen_range(1..=3);
        let mut flag: Vec<usize> = (0..5).collect();
        for i in 0..5 {
            flag.swap(i, rng.gen_range(0..5));
        }
        flag.truncate(k);
        assert_eq!(reassemble_flag(&f, &flag), f);
    }
}

#[test]
fn repeated_flag_is_rejected() {
    let r = ring3();
    assert!(matches!(coefficients_in_flag(&p(&r, "x"), &[0, 0]), Err(Error::InvalidArgument(_))));
}

#[test]
fn villamayor_components() {
    let i = five_var_ideal();
    let w = coeff_ideal_villamayor(&i, 2, 2).unwrap();
    let names: Vec<&str> = w.ring().vars().iter().map(|s| s.as_str()).collect();
    assert_eq!(names, ["x", "y", "w", "v"]);
    assert_eq!(w.components().len(), 1);
    let c = &w.components()[0];
    assert_eq!(c.level, 0);
    assert_eq!(c.exponent, BigUint::from(1u32));
    assert_eq!(c.ideal, ideal(w.ring(), &["x^3*y^3", "w^5 + x^5 + v^3*y^2"]));
    assert_eq!(weighted_order(&w, None).unwrap(), fin(5));
    assert!(matches!(coeff_ideal_villamayor(&i, 2, 0), Err(Error::InvalidArgument(_))));
}

#[test]
fn villamayor_levels_carry_factorial_weights() {
    let r = ring3();
    let i = ideal(&r, &["z^3 + x^2*z + y^5"]);
    let w = coeff_ideal_villamayor(&i, 2, 3).unwrap();
    let levels: Vec<(i64, BigUint)> = w.components().iter().map(|c| (c.level, c.exponent.clone())).collect();
    assert_eq!(levels, vec![(0, BigUint::from(2u32)), (1, BigUint::from(3u32))]);
    // min(2*5, 3*2)
    assert_eq!(weighted_order(&w, None).unwrap(), fin(6));
}

#[test]
fn valuation_law_for_a_monic_power() {
    let r = ring(&["x", "y", "w", "z"]);
    let mut rng = rng(5);
    for b in 1..=4u32 {
        for _ in 0..10 {
            let a = random_poly(&mut rng, &r.without(&[3]).unwrap(), 4, 1, 6);
            let a = a.remap(&r, &[Some(0), Some(1), Some(2)]).unwrap();
            let f = Polynomial::var(&r, 3).pow(b).add(&a);
            let w = coeff_ideal_villamayor(&Ideal::new(&r, vec![f]).unwrap(), 3, b).unwrap();
            let fact: u64 = (1..=b as u64).product();
            let expected = match a.order() {
                OrderValue::Finite(d) => fin(fact / b as u64 * d as u64),
                OrderValue::Infinite => BigOrder::Infinite,
            };
            assert_eq!(weighted_order(&w, None).unwrap(), expected);
        }
    }
}

#[test]
fn z_free_ideal_sits_at_level_zero() {
    let r = ring3();
    let i = ideal(&r, &["x^2 + y^3", "x*y"]);
    let w = coeff_ideal_villamayor(&i, 2, 4).unwrap();
    assert_eq!(w.components().len(), 1);
    let c = &w.components()[0];
    assert_eq!(c.level, 0);
    assert_eq!(c.exponent, BigUint::from(6u32));
    assert_eq!(c.ideal, ideal(w.ring(), &["x^2 + y^3", "x*y"]));
}

#[test]
fn weighted_order_examples() {
    let r = ring(&["x", "y"]);
    let w = WeightedIdealSum::new(&r, vec![Component { ideal: ideal(&r, &["x^5"]), exponent: BigUint::from(6u32), level: 0 }])
        .unwrap();
    assert_eq!(weighted_order(&w, None).unwrap(), fin(30));
    let empty = WeightedIdealSum::new(&r, vec![]).unwrap();
    assert_eq!(weighted_order(&empty, None).unwrap(), BigOrder::Infinite);
    assert!(empty.is_zero());
}

#[test]
fn expansion() {
    let r = ring(&["x", "y"]);
    let w = WeightedIdealSum::new(
        &r,
        vec![
            Component { ideal: ideal(&r, &["x"]), exponent: BigUint::from(2u32), level: 0 },
            Component { ideal: ideal(&r, &["y"]), exponent: BigUint::from(1u32), level: 1 },
        ],
    )
    .unwrap();
    assert_eq!(expand_weighted(&w, 100).unwrap(), ideal(&r, &["x^2", "y"]));
    let big = WeightedIdealSum::new(&r, vec![Component { ideal: ideal(&r, &["y"]), exponent: BigUint::from(72576u32), level: 4 }])
        .unwrap();
    assert!(matches!(expand_weighted(&big, 10_000), Err(Error::BudgetExceeded { .. })));
}

#[test]
fn expansion_preserves_weighted_order() {
    let r = ring(&["x", "y", "w"]);
    let mut rng = rng(8);
    for _ in 0..30 {
        let mut comps = Vec::new();
        for level in 0..rng.gen_range(1..=3) {
            let gens = vec![random_poly(&mut rng, &r, 2, 1, 3), random_poly(&mut rng, &r, 2, 1, 3)];
            comps.push(Component {
                ideal: Ideal::new(&r, gens).unwrap(),
                exponent: BigUint::from(rng.gen_range(1u32..=3)),
                level,
            });
        }
        let w = WeightedIdealSum::new(&r, comps).unwrap();
        let expanded = expand_weighted(&w, 1_000).unwrap();
        let direct = weighted_order(&w, None).unwrap();
        assert_eq!(BigOrder::from(order_of_ideal(&expanded, None).unwrap()), direct);
    }
}

#[test]
fn monomial_splits() {
    let r = ring(&["x", "y", "w", "v"]);
    let i = ideal(&r, &["x^3*y^4", "y^3*w^5 + y^3*x^5 + v^3*y^4"]);
    let s = monomial_split(&i, &[1]).unwrap();
    assert_eq!(s.monomial_part, Monomial::from_exps(vec![0, 3, 0, 0]));
    assert_eq!(s.non_monomial_part, ideal(&r, &["x^3*y", "w^5 + x^5 + v^3*y"]));
    assert_eq!(order_of_ideal(&s.non_monomial_part, None).unwrap(), OrderValue::Finite(4));

    let x = ideal(&ring(&["x"]), &["x^2"]);
    let s = monomial_split(&x, &[0]).unwrap();
    assert_eq!(s.monomial_part, Monomial::from_exps(vec![2]));
    assert_eq!(s.non_monomial_part, ideal(&ring(&["x"]), &["1"]));

    assert!(matches!(monomial_split(&Ideal::zero(&r), &[0]), Err(Error::ZeroIdeal)));
}

#[test]
fn split_reassembles() {
    let r = ring(&["x", "y", "w"]);
    let mut rng = rng(21);
    for _ in 0..50 {
        let m = random_monomial(&mut rng, 3, 3);
        let m = Monomial::from_exps(vec![m.exp(0), m.exp(1), 0]);
        let gens: Vec<Polynomial> =
            (0..2).map(|_| random_poly(&mut rng, &r, 3, 0, 3).mul(&Polynomial::monomial(&r, integer(1), m.clone()))).collect();
        let i = Ideal::new(&r, gens).unwrap();
        if i.is_zero() {
            continue;
        }
        let s = monomial_split(&i, &[0, 1]).unwrap();
        assert!(m.divides(&s.monomial_part));
        let mono = Polynomial::monomial(&r, integer(1), s.monomial_part.clone());
        let back = s.non_monomial_part.map(|g| g.mul(&mono));
        assert_eq!(back, i);
        assert_eq!(s.monomial_part.exp(2), 0);
    }
}

/// Weak transforms of the five-variable example in the charts of the
/// blowup at the origin, with their coefficient ideals with respect to z.
/// The last entry is the y-chart weak transform with `v^3*y^4` in place of
/// `v^3*y^3`, the form under which the orders 7 and 4 appear.
#[test]
fn chart_coefficient_orders() {
    let r = ring5();
    // generators, weighted order, (exceptional var, its exponent, remaining order)
    type Case<'a> = (&'a [&'a str], u64, Option<(usize, u32, u32)>);
    let cases: [Case; 5] = [
        (&["z^2 + x^4*y^3", "x^3*w^5 + x^3 + x^3*v^3*y^2"], 3, None),
        (&["z^2 + x^3*y^4", "y^3*w^5 + y^3*x^5 + v^3*y^3"], 6, Some((1, 3, 3))),
        (&["z^2 + x^3*y^3*w^4", "w^3 + x^5*w^3 + v^3*y^2*w^3"], 3, None),
        (&["z^2 + x^3*y^3*v^4", "w^5*v^3 + x^5*v^3 + y^2*v^3"], 5, Some((3, 3, 2))),
        (&["z^2 + x^3*y^4", "y^3*w^5 + y^3*x^5 + v^3*y^4"], 7, Some((1, 3, 4))),
    ];
    for (gens, order, split) in cases {
        let w = coeff_ideal_villamayor(&ideal(&r, gens), 2, 2).unwrap();
        assert_eq!(weighted_order(&w, None).unwrap(), fin(order), "{gens:?}");
        if let Some((var, mono, rest)) = split {
            let s = monomial_split(&w.components()[0].ideal, &[var]).unwrap();
            assert_eq!(s.monomial_part.exp(var), mono);
            assert_eq!(order_of_ideal(&s.non_monomial_part, None).unwrap(), OrderValue::Finite(rest));
        }
    }
}
