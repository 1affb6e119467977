//! Local algebra for resolution of singularities: standard bases in local
//! rings, order and Hilbert–Samuel invariants, coefficient ideals, a staged
//! maximal-contact construction and blowup transforms.

pub mod blowup;
pub mod coeff;
pub mod error;
pub mod hybrid;
pub mod invariants;
pub mod poly;
pub mod stdbasis;

pub use coeff::{BigOrder, WeightedIdealSum};
pub use error::{Error, Result};
pub use poly::{
    format_canonical, parse_polynomial, Coeff, Monomial, MonomialOrder, OrderKind, OrderValue, Polynomial, Ring,
    RingRef,
};
