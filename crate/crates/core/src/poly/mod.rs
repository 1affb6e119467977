//! Polynomial rings, monomial orders and sparse rational polynomials.

pub mod format;
pub mod monomial;
pub mod order;
pub mod parse;
pub mod polynomial;
pub mod ring;

pub use format::format_canonical;
pub use monomial::{monomials_of_degree, Monomial};
pub use order::{MonomialOrder, OrderKind};
pub use parse::parse_polynomial;
pub use polynomial::{integer, rational, ArithOp, Coeff, OrderValue, Polynomial, Term};
pub use ring::{Ring, RingRef};
