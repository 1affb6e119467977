use super::ideal::Ideal;
use super::sb::standard_basis;
use super::ideal_equals;
use crate::error::{Error, Result};
use crate::poly::{MonomialOrder, Polynomial};

/// Default bound on quotient steps during saturation.
pub const MAX_SATURATION_STEPS: usize = 256;

/// The colon ideal `I : <x_v>`.
///
/// Computed on the homogenization: for a degree reverse lexicographic basis
/// of a homogeneous ideal with `x_v` ranked last, `x_v` divides a leading
/// monomial exactly when it divides the element, so dividing out one power
/// of `x_v` wherever possible generates the colon. Dehomogenizing commutes
/// with the colon, and so does localization at the origin.
pub fn quotient_by_variable(ideal: &Ideal, v: usize) -> Result<Ideal> {
    let ring = ideal.ring();
    let n = ring.nvars();
    if v >= n {
        return Err(Error::InvalidArgument(format!("variable index {v} out of range")));
    }
    if ideal.is_zero() {
        return Ok(ideal.clone());
    }
    let g = standard_basis(ideal, &MonomialOrder::degrevlex(n), true, None)?;
    let hring = ring.with_fresh("h");
    let hom = Ideal::from_vec(&hring, g.basis().iter().map(|f| f.homogenize(&hring)).collect());
    let ord = MonomialOrder::degrevlex(n + 1).with_last(v);
    let gh = standard_basis(&hom, &ord, true, None)?;
    let mut gens: Vec<Polynomial> = Vec::new();
    for f in gh.basis() {
        let q = f.divide_by_var(v, 1).unwrap_or_else(|| f.clone());
        let d = q.dehomogenize(ring);
        if !d.is_zero() && !gens.contains(&d) {
            gens.push(d);
        }
    }
    Ok(Ideal::from_vec(ring, gens))
}

/// `I : <x_v>^inf` by iterated single quotients, stopping once two
/// consecutive ideals agree under `ord`. Returns the fixed point and the
/// number of quotient steps taken.
pub fn saturate_by_variable(ideal: &Ideal, v: usize, ord: &MonomialOrder, max_steps: usize) -> Result<(Ideal, usize)> {
    let mut cur = ideal.clone();
    for step in 1..=max_steps {
        let next = quotient_by_variable(&cur, v)?;
        if ideal_equals(&cur, &next, ord)? {
            return Ok((next, step));
        }
        cur = next;
    }
    Err(Error::Internal(format!("saturation did not stabilize within {max_steps} steps")))
}
