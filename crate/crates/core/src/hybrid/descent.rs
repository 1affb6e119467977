use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::Zero;

use crate::coeff::{
    coeff_ideal_villamayor, coefficients_in_flag, expand_weighted, level_exponent, restriction, weighted_order, BigOrder,
    Component, WeightedIdealSum,
};
use crate::error::{Error, Result};
use crate::invariants::order_of_ideal;
use crate::poly::{MonomialOrder, OrderValue, Polynomial};
use crate::stdbasis::Ideal;

use super::frame::{maximal_contact_frame, solvable_for};
use super::staging::{staged_build, HybridData};

/// Largest total size of an expanded weighted sum during descent.
pub const DESCENT_BUDGET: u64 = 4096;

/// The coefficient ideal of `J_k` with respect to the whole flag.
///
/// A coefficient `a_β` of a marked generator of order `d_i` enters every
/// level `j` with `|β| + d_k - d_i <= j < d_k`, weighted by
/// `d_k!/(d_k - j)`, in the ring without the flag variables. When the flag
/// fills the space the result is the empty sum in the full ring.
pub fn modified_coeff_ideal(h: &HybridData) -> Result<WeightedIdealSum> {
    let ring = h.ring();
    if h.is_zero_dimensional() {
        return WeightedIdealSum::new(ring, Vec::new());
    }
    let flag = h.flag_vars();
    let (small, map) = restriction(ring, flag)?;
    let dk = h.dk();
    let mut levels: Vec<Vec<Polynomial>> = vec![Vec::new(); dk as usize];
    for stage in h.stages() {
        for g in &stage.generators {
            for (beta, a) in coefficients_in_flag(g, flag)? {
                let start = beta.iter().sum::<u32>() + dk - stage.degree;
                let a = a.remap(&small, &map).expect("coefficient is free of the flag");
                for level in levels.iter_mut().skip(start as usize) {
                    if !level.contains(&a) {
                        level.push(a.clone());
                    }
                }
            }
        }
    }
    let mut components = Vec::new();
    for (j, gens) in levels.into_iter().enumerate() {
        if !gens.is_empty() {
            components.push(Component { ideal: Ideal::new(&small, gens)?, exponent: level_exponent(dk, j as u32), level: j as i64 });
        }
    }
    WeightedIdealSum::new(&small, components)
}

/// One slot `(value, dimension)` of the invariant.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantEntry {
    pub value: BigOrder,
    pub dimension: usize,
}

impl fmt::Display for InvariantEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.value, self.dimension)
    }
}

/// Leading part of the invariant. `complete` is false when the descent
/// stopped at the depth limit or the expansion budget before reaching
/// order zero, infinity or dimension zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HybridInvariant {
    pub entries: Vec<InvariantEntry>,
    pub complete: bool,
}

impl fmt::Display for HybridInvariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.entries.iter().map(|e| e.to_string()).collect();
        write!(f, "({})", parts.join(", "))?;
        if !self.complete {
            f.write_str(" ...")?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CenterSuggestion {
    /// Variable names whose common zero set is the center; empty when the
    /// ideal is already smooth at the origin.
    pub center_vars: Vec<String>,
    pub invariant: HybridInvariant,
}

impl CenterSuggestion {
    pub fn is_empty(&self) -> bool {
        self.center_vars.is_empty()
    }
}

impl fmt::Display for CenterSuggestion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.center_vars.is_empty() {
            f.write_str("none (smooth)")
        } else {
            write!(f, "V({})", self.center_vars.join(","))
        }
    }
}

fn is_terminal(e: &InvariantEntry) -> bool {
    e.value.is_infinite() || e.value.is_zero() || e.dimension == 0
}

/// `Σ I_j^{e_j}` with all exponents divided by their gcd, which keeps the
/// singular locus and the transforms of the weighted sum.
fn normalized_expansion(w: &WeightedIdealSum) -> Result<Ideal> {
    let g = w.components().iter().fold(BigUint::zero(), |acc, c| acc.gcd(&c.exponent));
    let components = w
        .components()
        .iter()
        .map(|c| Component { ideal: c.ideal.clone(), exponent: &c.exponent / &g, level: c.level })
        .collect();
    expand_weighted(&WeightedIdealSum::new(w.ring(), components)?, DESCENT_BUDGET)
}

/// One Villamayor step: a hypersurface of maximal contact for `k` of
/// order `b` becomes a coordinate, and the coefficient ideal lives on it.
fn villamayor_step(k: &Ideal, b: u32) -> Result<(String, WeightedIdealSum)> {
    let ring = k.ring();
    let n = ring.nvars();
    let ord = MonomialOrder::local(n);
    let frame = maximal_contact_frame(k, b, &ord)?;
    let h = &frame[0];
    let v = (0..n).find(|&i| solvable_for(h, i)).ok_or_else(|| {
        Error::NonPolynomialCoordinateChange(format!("order-one element {h} cannot be made a coordinate"))
    })?;
    let x = Polynomial::var(ring, v);
    let straight = if *h == x {
        k.clone()
    } else {
        let mut sigma: Vec<Polynomial> = (0..n).map(|i| Polynomial::var(ring, i)).collect();
        sigma[v] = x.sub(&h.sub(&x));
        k.substitute(&sigma, ring)
    };
    Ok((ring.name(v).to_string(), coeff_ideal_villamayor(&straight, v, b)?))
}

fn descend(h: &HybridData, max_depth: usize) -> Result<(HybridInvariant, Vec<String>)> {
    let n = h.ring().nvars();
    let mut entries = vec![InvariantEntry { value: BigOrder::Finite(BigUint::from(h.dk())), dimension: n }];
    let mut center = h.flag_names();
    let mut complete = true;
    let mut w = modified_coeff_ideal(h)?;
    if max_depth > 1 {
        entries.push(InvariantEntry { value: weighted_order(&w, None)?, dimension: n - h.ek() });
    }
    loop {
        let last = entries.last().expect("nonempty").clone();
        if is_terminal(&last) {
            break;
        }
        if entries.len() >= max_depth {
            complete = false;
            break;
        }
        let k = match normalized_expansion(&w) {
            Ok(k) => k,
            Err(Error::BudgetExceeded { .. }) => {
                complete = false;
                break;
            }
            Err(e) => return Err(e),
        };
        let b = match order_of_ideal(&k, None)? {
            OrderValue::Finite(b) => b,
            OrderValue::Infinite => return Err(Error::Internal("descent reached the zero ideal".into())),
        };
        if last.dimension == 1 {
            // the only variable is the hypersurface; nothing lives on it
            let v = k.ring().name(0).to_string();
            center.push(v);
            entries.push(InvariantEntry { value: BigOrder::Infinite, dimension: 0 });
            break;
        }
        let (v, next) = villamayor_step(&k, b)?;
        center.push(v);
        entries.push(InvariantEntry { value: weighted_order(&next, None)?, dimension: last.dimension - 1 });
        w = next;
    }
    Ok((HybridInvariant { entries, complete }, center))
}

/// `(ord J_k, n), (ord Coeff^new, n - e_k), ...` followed by Villamayor
/// descent. Exceptional counters are not tracked (no prior exceptional
/// divisors).
pub fn hybrid_invariant(ideal: &Ideal, max_depth: usize) -> Result<HybridInvariant> {
    let h = staged_build(ideal)?;
    hybrid_invariant_of(&h, max_depth)
}

pub fn hybrid_invariant_of(h: &HybridData, max_depth: usize) -> Result<HybridInvariant> {
    Ok(descend(h, max_depth.max(1))?.0)
}

pub fn suggest_center(ideal: &Ideal, max_depth: usize) -> Result<CenterSuggestion> {
    let h = staged_build(ideal)?;
    suggest_center_of(&h, max_depth)
}

/// Flag variables of every descent level. An ideal of order one at the
/// origin is smooth there and needs no center.
pub fn suggest_center_of(h: &HybridData, max_depth: usize) -> Result<CenterSuggestion> {
    let (invariant, mut center) = descend(h, max_depth.max(1))?;
    if h.dk() == 1 {
        center.clear();
    } else {
        let ring = h.ring();
        center.sort_by_key(|name| ring.index_of(name));
        center.dedup();
    }
    Ok(CenterSuggestion { center_vars: center, invariant })
}
