//! Coefficient ideals: coefficients with respect to a variable or a flag,
//! weighted sums of ideal powers kept unexpanded, and monomial splitting.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::invariants::order_of_ideal;
use crate::poly::{Coeff, Monomial, OrderValue, Polynomial, RingRef};
use crate::stdbasis::Ideal;

/// An order value that may exceed machine integers (weighted orders carry
/// factorial exponents).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BigOrder {
    Finite(BigUint),
    Infinite,
}

impl BigOrder {
    pub fn is_infinite(&self) -> bool {
        matches!(self, BigOrder::Infinite)
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, BigOrder::Finite(v) if v.is_zero())
    }

    pub fn scaled(&self, e: &BigUint) -> BigOrder {
        match self {
            BigOrder::Finite(v) => BigOrder::Finite(v * e),
            BigOrder::Infinite => BigOrder::Infinite,
        }
    }

    pub fn to_u64(&self) -> Option<u64> {
        match self {
            BigOrder::Finite(v) => v.to_u64(),
            BigOrder::Infinite => None,
        }
    }
}

impl From<OrderValue> for BigOrder {
    fn from(o: OrderValue) -> Self {
        match o {
            OrderValue::Finite(d) => BigOrder::Finite(BigUint::from(d)),
            OrderValue::Infinite => BigOrder::Infinite,
        }
    }
}

impl fmt::Display for BigOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BigOrder::Finite(v) => write!(f, "{v}"),
            BigOrder::Infinite => f.write_str("inf"),
        }
    }
}

/// `n! / (n - k)`, the exponent attached to level `k` below order `n`.
pub fn level_exponent(n: u32, k: u32) -> BigUint {
    assert!(k < n, "level must be below the order");
    let mut f = BigUint::one();
    for i in 2..=n {
        f *= i;
    }
    f / (n - k)
}

/// One summand `ideal^exponent` of a weighted sum, tagged with its level.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Component {
    pub ideal: Ideal,
    pub exponent: BigUint,
    pub level: i64,
}

/// Formal sum `Σ I_k^{e_k}`; the empty sum is the zero ideal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightedIdealSum {
    ring: RingRef,
    components: Vec<Component>,
}

impl WeightedIdealSum {
    pub fn new(ring: &RingRef, components: Vec<Component>) -> Result<Self> {
        for c in &components {
            if c.exponent.is_zero() {
                return Err(Error::InvalidArgument("weighted exponents must be positive".into()));
            }
            if !crate::poly::ring::same_ring(c.ideal.ring(), ring) {
                return Err(Error::ContextMismatch);
            }
        }
        Ok(WeightedIdealSum { ring: ring.clone(), components })
    }

    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn components(&self) -> &[Component] {
        &self.components
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(|c| c.ideal.is_zero())
    }

    /// Multiplies every exponent by `factor`.
    pub fn scaled(&self, factor: &BigUint) -> WeightedIdealSum {
        let components = self
            .components
            .iter()
            .map(|c| Component { ideal: c.ideal.clone(), exponent: &c.exponent * factor, level: c.level })
            .collect();
        WeightedIdealSum { ring: self.ring.clone(), components }
    }
}

/// `f = Σ_k result[k] * x_var^k` with coefficients free of `x_var`.
pub fn coefficients_in_variable(f: &Polynomial, var: usize) -> Result<BTreeMap<u32, Polynomial>> {
    Ok(coefficients_in_flag(f, &[var])?.into_iter().map(|(beta, c)| (beta[0], c)).collect())
}

/// `f = Σ_β result[β] * y^β` where `y` is the flag, coefficients free of
/// the flag variables.
pub fn coefficients_in_flag(f: &Polynomial, flag: &[usize]) -> Result<BTreeMap<Vec<u32>, Polynomial>> {
    let n = f.ring().nvars();
    for (i, &v) in flag.iter().enumerate() {
        if v >= n {
            return Err(Error::InvalidArgument(format!("variable index {v} out of range")));
        }
        if flag[..i].contains(&v) {
            return Err(Error::InvalidArgument(format!("flag variable {} repeated", f.ring().name(v))));
        }
    }
    let mut groups: BTreeMap<Vec<u32>, Vec<(Coeff, Monomial)>> = BTreeMap::new();
    for (c, m) in f.terms() {
        let beta: Vec<u32> = flag.iter().map(|&v| m.exp(v)).collect();
        let mut exps = m.exps().to_vec();
        for &v in flag {
            exps[v] = 0;
        }
        groups.entry(beta).or_default().push((c.clone(), Monomial::from_exps(exps)));
    }
    Ok(groups.into_iter().map(|(beta, terms)| (beta, Polynomial::from_terms(f.ring(), terms))).collect())
}

/// Index map dropping `drop` from `ring`, and the smaller ring.
pub(crate) fn restriction(ring: &RingRef, drop: &[usize]) -> Result<(RingRef, Vec<Option<usize>>)> {
    let small = ring.without(drop)?;
    let mut map = Vec::with_capacity(ring.nvars());
    let mut next = 0;
    for i in 0..ring.nvars() {
        if drop.contains(&i) {
            map.push(None);
        } else {
            map.push(Some(next));
            next += 1;
        }
    }
    Ok((small, map))
}

/// Villamayor's coefficient ideal with respect to `z` and order `b`:
/// components `(I_k, b!/(b-k), k)` for `k < b`, where `I_k` collects the
/// `z^k` coefficients of all generators, living in the ring without `z`.
pub fn coeff_ideal_villamayor(ideal: &Ideal, z: usize, b: u32) -> Result<WeightedIdealSum> {
    if b == 0 {
        return Err(Error::InvalidArgument("order b must be positive".into()));
    }
    let (small, map) = restriction(ideal.ring(), &[z])?;
    let mut levels: Vec<Vec<Polynomial>> = vec![Vec::new(); b as usize];
    for g in ideal.generators() {
        for (k, c) in coefficients_in_variable(g, z)? {
            if k < b {
                let c = c.remap(&small, &map).expect("coefficient is free of z");
                if !levels[k as usize].contains(&c) {
                    levels[k as usize].push(c);
                }
            }
        }
    }
    let components = levels
        .into_iter()
        .enumerate()
        .filter(|(_, gens)| !gens.is_empty())
        .map(|(k, gens)| Component { ideal: Ideal::from_vec(&small, gens), exponent: level_exponent(b, k as u32), level: k as i64 })
        .collect();
    WeightedIdealSum::new(&small, components)
}

/// `min_k e_k * ord(I_k)` at `point`; `+inf` for the empty sum.
pub fn weighted_order(w: &WeightedIdealSum, point: Option<&[Coeff]>) -> Result<BigOrder> {
    let mut best = BigOrder::Infinite;
    for c in &w.components {
        let o = BigOrder::from(order_of_ideal(&c.ideal, point)?).scaled(&c.exponent);
        best = best.min(o);
    }
    Ok(best)
}

/// Materializes `Σ I_k^{e_k}` when `Σ e_k * #gens(I_k)` fits in `budget`.
pub fn expand_weighted(w: &WeightedIdealSum, budget: u64) -> Result<Ideal> {
    let mut needed = BigUint::zero();
    for c in &w.components {
        needed += &c.exponent * BigUint::from(c.ideal.len());
    }
    if needed > BigUint::from(budget) {
        return Err(Error::BudgetExceeded { needed: needed.to_string(), budget });
    }
    let mut acc = Ideal::zero(&w.ring);
    for c in &w.components {
        let e = c.exponent.to_i64().expect("bounded by budget");
        acc = acc.sum(&c.ideal.power(e)?)?;
    }
    Ok(acc)
}

/// Monomial part (in exceptional variables) times the remaining ideal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialSplit {
    pub monomial_part: Monomial,
    pub non_monomial_part: Ideal,
}

/// Factors out the largest monomial in `exceptional` dividing every term
/// of every generator.
pub fn monomial_split(ideal: &Ideal, exceptional: &[usize]) -> Result<MonomialSplit> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    let n = ideal.ring().nvars();
    let mut exps = vec![0u32; n];
    for &v in exceptional {
        if v >= n {
            return Err(Error::InvalidArgument(format!("variable index {v} out of range")));
        }
        exps[v] = ideal.generators().iter().map(|g| g.var_multiplicity(v)).min().unwrap_or(0);
    }
    let mono = Monomial::from_exps(exps);
    let rest = ideal.map(|g| g.divide_by_monomial(&mono).expect("monomial divides every term"));
    Ok(MonomialSplit { monomial_part: mono, non_monomial_part: rest })
}
