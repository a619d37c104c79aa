//! Exact Gröbner bases, restricted Gröbner fans and ideals of points over the
//! rationals and prime fields.

pub mod error;
pub mod fan;
pub mod field;
pub mod groebner;
mod linalg;
pub mod monomial;
pub mod points;
pub mod poly;

pub use error::{Error, ErrorKind, Result};
pub use fan::{Cone, GroebnerFan, MarkedReducedGB};
pub use field::{ArithOp, FieldElement, FieldSpec};
pub use groebner::{Ideal, ReducedGB};
pub use monomial::MonomialIdeal;
pub use points::{DistractionSpec, GridIdeal, PointSet};
pub use poly::{LinearShift, OrderKind, PolyOp, Polynomial, Ring, Term, TermOrdering};
