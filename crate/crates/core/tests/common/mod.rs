#![allow(dead_code)]

use desing_core::poly::{integer, Monomial, Polynomial, RingRef};
use desing_core::stdbasis::Ideal;
use desing_core::Ring;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub use rand::SeedableRng;
pub type TestRng = ChaCha8Rng;

pub fn rng(seed: u64) -> TestRng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn ring(names: &[&str]) -> RingRef {
    Ring::new(names.iter().copied()).unwrap()
}

pub fn p(r: &RingRef, s: &str) -> Polynomial {
    desing_core::parse_polynomial(s, r).unwrap()
}

pub fn ideal(r: &RingRef, gens: &[&str]) -> Ideal {
    Ideal::parse(r, gens).unwrap()
}

/// Sparse polynomial with small integer coefficients and degree in
/// `min_deg..=max_deg`.
pub fn random_poly(rng: &mut TestRng, r: &RingRef, terms: usize, min_deg: u32, max_deg: u32) -> Polynomial {
    let n = r.nvars();
    let mut out = Vec::new();
    for _ in 0..terms {
        let d = rng.gen_range(min_deg..=max_deg);
        let mut exps = vec![0u32; n];
        for _ in 0..d {
            exps[rng.gen_range(0..n)] += 1;
        }
        let mut c = rng.gen_range(-3i64..=3);
        if c == 0 {
            c = 1;
        }
        out.push((integer(c), Monomial::from_exps(exps)));
    }
    Polynomial::from_terms(r, out)
}

pub fn random_monomial(rng: &mut TestRng, n: usize, max_deg: u32) -> Monomial {
    let d = rng.gen_range(1..=max_deg);
    let mut exps = vec![0u32; n];
    for _ in 0..d {
        exps[rng.gen_range(0..n)] += 1;
    }
    Monomial::from_exps(exps)
}

pub fn ring5() -> RingRef {
    ring(&["x", "y", "z", "w", "v"])
}

/// `<z^2 + x^3*y^3, w^5 + x^5 + v^3*y^2>` in five variables.
pub fn five_var_ideal() -> Ideal {
    ideal(&ring5(), &["z^2 + x^3*y^3", "w^5 + x^5 + v^3*y^2"])
}

pub fn ring3() -> RingRef {
    ring(&["x", "y", "z"])
}

/// `<x^5 + y^11, z^9 + x^9>`, used with the local order ranking z > y > x.
pub fn three_var_ideal() -> Ideal {
    ideal(&ring3(), &["x^5 + y^11", "z^9 + x^9"])
}

pub fn zyx_local() -> desing_core::MonomialOrder {
    desing_core::MonomialOrder::new(desing_core::OrderKind::NegDegRevLex, vec![2, 1, 0]).unwrap()
}

/// Random polynomial of degree 2 in the listed variables, with one or two
/// terms.
pub fn random_quadratic(rng: &mut TestRng, r: &RingRef, vars: &[usize]) -> Polynomial {
    let mut out = Vec::new();
    if vars.is_empty() {
        return Polynomial::zero(r);
    }
    for _ in 0..rng.gen_range(1..=2) {
        let mut exps = vec![0u32; r.nvars()];
        for _ in 0..2 {
            exps[vars[rng.gen_range(0..vars.len())]] += 1;
        }
        let mut c = rng.gen_range(-2i64..=2);
        if c == 0 {
            c = 1;
        }
        out.push((integer(c), Monomial::from_exps(exps)));
    }
    Polynomial::from_terms(r, out)
}

/// Triangular substitution with identity linear part: the variable
/// `chain[k]` maps to itself plus a quadratic in `chain[k+1..]`.
pub fn triangular_substitution(rng: &mut TestRng, r: &RingRef, chain: &[usize]) -> Vec<Polynomial> {
    let mut images: Vec<Polynomial> = (0..r.nvars()).map(|i| Polynomial::var(r, i)).collect();
    for (k, &v) in chain.iter().enumerate() {
        let q = random_quadratic(rng, r, &chain[k + 1..]);
        images[v] = images[v].add(&q);
    }
    images
}
