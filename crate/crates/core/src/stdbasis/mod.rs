//! Standard bases for global and local orders, normal forms and ideal
//! predicates.

pub mod colon;
pub mod ideal;
pub mod sb;

pub use colon::{quotient_by_variable, saturate_by_variable, MAX_SATURATION_STEPS};
pub use ideal::{ideal_combine, CombineKind, Ideal};
pub use sb::{minimalize_monomials, normal_form, s_polynomial, standard_basis, StandardBasis};

use crate::error::{Error, Result};
use crate::poly::{MonomialOrder, Polynomial};

/// Leading ideal of a complete standard basis, as monomial polynomials.
pub fn leading_ideal(sb: &StandardBasis) -> Result<Ideal> {
    let ring = sb.ring();
    let gens: Vec<Polynomial> = sb
        .leading_ideal()?
        .into_iter()
        .map(|m| Polynomial::monomial(ring, crate::poly::integer(1), m))
        .collect();
    Ideal::new(ring, gens)
}

/// Membership; at local orders this is membership in the localization at
/// the origin.
pub fn ideal_membership(f: &Polynomial, ideal: &Ideal, ord: &MonomialOrder) -> Result<bool> {
    if !crate::poly::ring::same_ring(f.ring(), ideal.ring()) {
        return Err(Error::ContextMismatch);
    }
    Ok(standard_basis(ideal, ord, false, None)?.contains(f))
}

/// Equality by mutual containment.
pub fn ideal_equals(a: &Ideal, b: &Ideal, ord: &MonomialOrder) -> Result<bool> {
    if !crate::poly::ring::same_ring(a.ring(), b.ring()) {
        return Err(Error::ContextMismatch);
    }
    Ok(ideal_contains(a, b, ord)? && ideal_contains(b, a, ord)?)
}

/// Whether `b` is contained in `a`.
pub fn ideal_contains(a: &Ideal, b: &Ideal, ord: &MonomialOrder) -> Result<bool> {
    if !crate::poly::ring::same_ring(a.ring(), b.ring()) {
        return Err(Error::ContextMismatch);
    }
    Ok(standard_basis(a, ord, false, None)?.contains_ideal(b))
}
