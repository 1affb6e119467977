use crate::error::{Error, Result};
use crate::invariants::order_of_ideal;
use crate::poly::{MonomialOrder, OrderValue, Polynomial, RingRef};
use crate::stdbasis::{standard_basis, Ideal};

use super::frame::{contact_candidates, solvable_for, FrameBuilder};

/// Elements marked at one degree of the staged construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Stage {
    pub degree: u32,
    /// Flag length after this stage.
    pub width: usize,
    pub generators: Vec<Polynomial>,
}

/// Result of the staged construction, in the coordinates it chose.
#[derive(Clone, Debug)]
pub struct HybridData {
    ordering: MonomialOrder,
    flag: Vec<usize>,
    stages: Vec<Stage>,
    jk: Ideal,
    substitution: Vec<Polynomial>,
    original: Ideal,
    transformed: Ideal,
}

impl HybridData {
    pub fn ring(&self) -> &RingRef {
        self.original.ring()
    }

    pub fn ordering(&self) -> &MonomialOrder {
        &self.ordering
    }

    /// `y_1, ..., y_{e_k}` as variable indices.
    pub fn flag_vars(&self) -> &[usize] {
        &self.flag
    }

    pub fn flag_names(&self) -> Vec<String> {
        self.flag.iter().map(|&v| self.ring().name(v).to_string()).collect()
    }

    pub fn stages(&self) -> &[Stage] {
        &self.stages
    }

    pub fn degrees(&self) -> Vec<u32> {
        self.stages.iter().map(|s| s.degree).collect()
    }

    pub fn widths(&self) -> Vec<usize> {
        self.stages.iter().map(|s| s.width).collect()
    }

    /// Each marked generator with its order.
    pub fn marked(&self) -> Vec<(Polynomial, u32)> {
        self.stages.iter().flat_map(|s| s.generators.iter().map(move |g| (g.clone(), s.degree))).collect()
    }

    pub fn jk(&self) -> &Ideal {
        &self.jk
    }

    pub fn dk(&self) -> u32 {
        self.stages.last().expect("at least one stage").degree
    }

    pub fn ek(&self) -> usize {
        self.flag.len()
    }

    /// Images of the variables under the coordinate change; the staged
    /// ideal is the input composed with this map.
    pub fn substitution(&self) -> &[Polynomial] {
        &self.substitution
    }

    pub fn substitution_is_identity(&self) -> bool {
        self.substitution.iter().enumerate().all(|(i, p)| *p == Polynomial::var(self.ring(), i))
    }

    pub fn original(&self) -> &Ideal {
        &self.original
    }

    /// The input ideal in the staged coordinates.
    pub fn ideal(&self) -> &Ideal {
        &self.transformed
    }

    /// The flag fills the whole space: the center is the origin.
    pub fn is_zero_dimensional(&self) -> bool {
        self.flag.len() == self.ring().nvars()
    }
}

pub fn staged_build(ideal: &Ideal) -> Result<HybridData> {
    staged_build_with(ideal, &MonomialOrder::local(ideal.ring().nvars()))
}

/// Degree-by-degree construction of `J_k`.
///
/// Marks the elements of the reduced standard basis of `ideal` as their
/// order is reached. Each stage recomputes the flag from the order-one
/// elements of `Δ^{d-1}` of the current elements and straightens new flag
/// elements into coordinates. Elements already marked are multiplied by
/// each flag variable once per degree until all elements are marked.
pub fn staged_build_with(ideal: &Ideal, ord: &MonomialOrder) -> Result<HybridData> {
    if !ord.is_local() {
        return Err(Error::InvalidArgument("staging needs a local ordering".into()));
    }
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    let ring = ideal.ring().clone();
    let n = ring.nvars();
    let mut d = match order_of_ideal(ideal, None)? {
        OrderValue::Finite(0) => return Err(Error::UnitIdeal),
        OrderValue::Finite(d) => d,
        OrderValue::Infinite => return Err(Error::ZeroIdeal),
    };
    let sb = standard_basis(ideal, ord, true, None)?;
    if sb.is_unit() {
        return Err(Error::UnitIdeal);
    }
    let mut pending: Vec<Polynomial> = sb.basis().to_vec();
    let mut images: Vec<Polynomial> = (0..n).map(|i| Polynomial::var(&ring, i)).collect();
    let mut flag: Vec<usize> = Vec::new();
    let mut stages: Vec<Stage> = Vec::new();
    let mut raised: Vec<Polynomial> = Vec::new();
    loop {
        let (mut new, rest): (Vec<Polynomial>, Vec<Polynomial>) =
            pending.into_iter().partition(|g| g.order() == OrderValue::Finite(d));
        pending = rest;
        if !new.is_empty() {
            let mut current = raised.clone();
            current.extend(new.iter().cloned());
            let mut fb = FrameBuilder::new(ord);
            for &v in &flag {
                fb.add_variable(Polynomial::var(&ring, v), v);
            }
            let mut fresh: Vec<(usize, Polynomial)> = Vec::new();
            for c in contact_candidates(&current, d) {
                if let Some(hit) = fb.offer(&c) {
                    fresh.push(hit);
                }
            }
            if fb.rank() == 0 {
                return Err(Error::Internal("no order-one element in the iterated Δ-ideal".into()));
            }
            let full = fb.rank() == n;
            for k in 0..fresh.len() {
                let (v, h) = fresh[k].clone();
                flag.push(v);
                let x = Polynomial::var(&ring, v);
                if full || h == x {
                    continue;
                }
                if !solvable_for(&h, v) {
                    return Err(Error::NonPolynomialCoordinateChange(format!(
                        "order-one element {h} is not linear in {}",
                        ring.name(v)
                    )));
                }
                // x_v -> x_v - r turns h = x_v + r into x_v
                let r = h.sub(&x);
                let mut sigma: Vec<Polynomial> = (0..n).map(|i| Polynomial::var(&ring, i)).collect();
                sigma[v] = x.sub(&r);
                let apply = |list: &mut Vec<Polynomial>| {
                    for p in list.iter_mut() {
                        *p = p.substitute(&sigma);
                    }
                };
                apply(&mut images);
                apply(&mut new);
                apply(&mut raised);
                apply(&mut pending);
                for s in stages.iter_mut() {
                    apply(&mut s.generators);
                }
                for item in fresh.iter_mut().skip(k + 1) {
                    item.1 = item.1.substitute(&sigma);
                }
            }
            stages.push(Stage { degree: d, width: flag.len(), generators: new.clone() });
        }
        if pending.is_empty() {
            let mut gens = raised;
            for g in new {
                if !gens.contains(&g) {
                    gens.push(g);
                }
            }
            let jk = Ideal::new(&ring, gens)?;
            let transformed = ideal.substitute(&images, &ring);
            return Ok(HybridData {
                ordering: ord.clone(),
                flag,
                stages,
                jk,
                substitution: images,
                original: ideal.clone(),
                transformed,
            });
        }
        let mut next: Vec<Polynomial> = Vec::new();
        for g in raised.iter().chain(new.iter()) {
            for &y in &flag {
                let p = g.mul(&Polynomial::var(&ring, y));
                if !next.contains(&p) {
                    next.push(p);
                }
            }
        }
        raised = next;
        d += 1;
    }
}
