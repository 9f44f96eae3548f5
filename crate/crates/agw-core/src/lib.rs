//! Permutation polynomials over finite fields: verification of the
//! commutative squares behind the AGW criterion, closed-form compositional
//! inverses for the multiplicative, additive, hybrid, and linearized
//! families, branch-function inverse assembly with cyclotomic characteristic
//! functions, and exhaustive brute-force oracles that certify every formula.
//!
//! Everything is deterministic: fields fix the smallest irreducible modulus
//! and the smallest primitive element, elements are enumerated by base-p
//! digit rank, and the inversion oracle is fully exhaustive (capped by
//! `AGW_MAX_Q`, default 16384).

pub mod additive;
pub mod branch;
pub mod diagram;
pub mod error;
pub mod field;
pub mod linearized;
pub mod mult;
pub mod oracle;
pub mod parse;
pub mod poly;
pub mod testutil;

pub use error::{Error, Result};
pub use field::{CyclotomicSys, FieldCtx, FieldElem};
pub use oracle::PointMap;
pub use poly::Poly;
