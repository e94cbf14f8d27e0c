//! Cyclic codes over finite fields: factorization of `x^n - 1`, duals,
//! basic dual zeros, hull dimensions, LCD and LCP tests, intersection
//! dimensions and trace representations, together with a brute-force
//! linear-algebra oracle that checks every formula independently.

pub mod arith;
pub mod cli;
pub mod cosets;
pub mod cyclic;
pub mod error;
pub mod field;
pub mod matrix;
pub mod oracle;
pub mod poly;
pub mod tower;
pub mod trace;
pub mod verify;

pub use cosets::{CosetTable, CyclotomicCoset};
pub use cyclic::{BasicDualZero, CodeSpace, CyclicCode, HullPartition};
pub use error::{Error, Result};
pub use field::{Elem, Field};
pub use matrix::GfMatrix;
pub use poly::{Poly, PolyRing};
pub use tower::FieldTower;
pub use trace::{TraceRepr, TraceSpec};
