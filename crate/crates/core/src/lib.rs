//! Polynomial functions between residue class rings of the integers and of
//! `F_q[t]`.

pub mod error;
pub mod exec;
pub mod field;
pub mod fqpoly;
pub mod oracle;
pub mod orderings;
pub mod polyfun;
pub mod ring;

pub use error::{Error, Result};
pub use exec::Execution;
pub use field::{GaloisField, GfElement};
pub use fqpoly::FqPoly;
pub use ring::{BaseElement, IdealGen, RingInstance};
