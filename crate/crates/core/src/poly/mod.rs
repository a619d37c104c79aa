//! Terms, polynomials, term orderings and linear shifts.

mod ordering;
mod parse;
mod polynomial;
mod ring;
mod shift;
mod term;

pub use ordering::{OrderKey, OrderKind, TermOrdering};
pub use parse::parse_polynomial_list;
pub use polynomial::{PolyOp, Polynomial};
pub use ring::Ring;
pub use shift::LinearShift;
pub use term::{Term, TermDisplay};
