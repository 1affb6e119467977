//! Order, the Δ-operator, order loci and Hilbert–Samuel sequences at a
//! point.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::poly::{Coeff, Monomial, MonomialOrder, OrderValue, Polynomial};
use crate::stdbasis::{minimalize_monomials, standard_basis, Ideal};

fn at_point(ideal: &Ideal, point: Option<&[Coeff]>) -> Result<Ideal> {
    match point {
        Some(p) => ideal.translate(p),
        None => Ok(ideal.clone()),
    }
}

/// Order of `ideal` at `point` (origin by default): the largest `k` with
/// `I ⊆ m^k`. This is the minimum order of the generators after moving
/// the point to the origin; `+inf` for the zero ideal.
pub fn order_of_ideal(ideal: &Ideal, point: Option<&[Coeff]>) -> Result<OrderValue> {
    let moved = at_point(ideal, point)?;
    Ok(moved.generators().iter().map(|g| g.order()).min().unwrap_or(OrderValue::Infinite))
}

/// Presents an ideal by its reduced degree reverse lexicographic basis,
/// which describes the same ideal globally and at every point.
fn presentation(ideal: &Ideal) -> Result<Ideal> {
    let ord = MonomialOrder::degrevlex(ideal.ring().nvars());
    Ok(standard_basis(ideal, &ord, true, None)?.ideal())
}

/// All partial derivatives of order at most `k` of the generators,
/// including the generators themselves.
fn partials_up_to(ideal: &Ideal, k: u32) -> Vec<Polynomial> {
    let n = ideal.ring().nvars();
    let mut layer: Vec<Polynomial> = ideal.generators().to_vec();
    let mut all = layer.clone();
    for _ in 0..k {
        let mut next = Vec::new();
        for f in &layer {
            for v in 0..n {
                let d = f.derivative(v);
                if !d.is_zero() && !all.contains(&d) && !next.contains(&d) {
                    next.push(d);
                }
            }
        }
        all.extend(next.iter().cloned());
        layer = next;
    }
    all
}

/// `Δ(I)`: the generators together with all their first partials.
pub fn delta_ideal(ideal: &Ideal) -> Result<Ideal> {
    delta_iterate(ideal, 2)
}

/// `Δ^{c-1}(I)`, whose zero set is the locus of order at least `c`.
pub fn delta_iterate(ideal: &Ideal, c: u32) -> Result<Ideal> {
    if c == 0 {
        return Err(Error::InvalidArgument("c must be at least 1".into()));
    }
    if c == 1 {
        return Ok(ideal.clone());
    }
    let gens = partials_up_to(ideal, c - 1);
    presentation(&Ideal::new(ideal.ring(), gens)?)
}

/// Defining ideal of the locus where `ideal` has order at least `c`.
pub fn order_locus_ideal(ideal: &Ideal, c: u32) -> Result<Ideal> {
    delta_iterate(ideal, c)
}

/// Hilbert–Samuel values at a point: `values[s]` is the number of degree-`s`
/// monomials outside the leading ideal of the local standard basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HsSequence {
    values: Vec<u64>,
}

impl HsSequence {
    pub fn new(values: Vec<u64>) -> Self {
        HsSequence { values }
    }

    pub fn values(&self) -> &[u64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Prefix sums, i.e. lengths of `R/(I + m^{s+1})`.
    pub fn cumulative(&self) -> HsSequence {
        let mut acc = 0;
        HsSequence { values: self.values.iter().map(|v| { acc += v; acc }).collect() }
    }
}

impl fmt::Display for HsSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.values.iter().map(|v| v.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Lexicographic comparison of equally long sequences.
pub fn hs_compare(a: &HsSequence, b: &HsSequence) -> Result<Ordering> {
    if a.len() != b.len() {
        return Err(Error::LengthMismatch(a.len(), b.len()));
    }
    Ok(a.values.cmp(&b.values))
}

/// Hilbert–Samuel slice values for `s = 0..=max_degree`.
pub fn hs_sequence(ideal: &Ideal, max_degree: u32, point: Option<&[Coeff]>) -> Result<HsSequence> {
    let moved = at_point(ideal, point)?;
    let n = moved.ring().nvars();
    let ord = MonomialOrder::local(n);
    let sb = standard_basis(&moved, &ord, true, None)?;
    if sb.is_unit() {
        return Err(Error::UnitIdeal);
    }
    let lead = sb.leading_ideal()?;
    Ok(HsSequence::new(monomial_hilbert_function(&lead, n, max_degree)))
}

/// Number of monomials of each degree `0..=max_degree` in `n` variables
/// outside the monomial ideal generated by `gens`.
pub fn monomial_hilbert_function(gens: &[Monomial], n: usize, max_degree: u32) -> Vec<u64> {
    let num = hilbert_numerator(gens.to_vec(), n, max_degree);
    (0..=max_degree)
        .map(|s| {
            let mut total: i128 = 0;
            for (k, &c) in num.iter().enumerate() {
                let k = k as u32;
                if k <= s && c != 0 {
                    total += c as i128 * binomial((s - k) as u64 + n as u64 - 1, n as u64 - 1) as i128;
                }
            }
            u64::try_from(total).expect("Hilbert function is non-negative")
        })
        .collect()
}

fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut r: u128 = 1;
    for i in 0..k {
        r = r * (n - i) as u128 / (i + 1) as u128;
    }
    r as u64
}

/// Numerator of the Hilbert series of `S/M`, truncated above `max_degree`.
/// Uses `HN(M + <m>) = HN(M) - t^deg(m) HN(M : m)`.
fn hilbert_numerator(gens: Vec<Monomial>, n: usize, max_degree: u32) -> Vec<i64> {
    let mut gens: Vec<Monomial> = gens.into_iter().filter(|m| m.degree() <= max_degree).collect();
    let mut out = vec![0i64; max_degree as usize + 1];
    out[0] = 1;
    if gens.is_empty() {
        return out;
    }
    gens = minimalize_monomials(gens, &MonomialOrder::degrevlex(n));
    if gens.iter().any(|m| m.is_one()) {
        out[0] = 0;
        return out;
    }
    // pairwise coprime pure powers factor as a product of (1 - t^a)
    if gens.iter().all(|m| m.exps().iter().filter(|&&e| e > 0).count() == 1)
        && (0..n).all(|v| gens.iter().filter(|m| m.exp(v) > 0).count() <= 1)
    {
        for m in &gens {
            let d = m.degree() as usize;
            for k in (d..out.len()).rev() {
                out[k] -= out[k - d];
            }
        }
        return out;
    }
    let last = gens.pop().expect("nonempty");
    let rest = hilbert_numerator(gens.clone(), n, max_degree);
    let colon: Vec<Monomial> = gens.iter().map(|g| last.gcd(g).quotient_of(g).expect("gcd divides")).collect();
    let shift = last.degree();
    let inner = hilbert_numerator(colon, n, max_degree.saturating_sub(shift));
    for (k, c) in rest.into_iter().enumerate() {
        out[k] = c;
    }
    for (k, c) in inner.into_iter().enumerate() {
        let idx = k + shift as usize;
        if idx < out.len() {
            out[idx] -= c;
        }
    }
    out
}
