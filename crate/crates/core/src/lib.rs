//! Exact induction and restriction of modules over finite-group algebras along
//! arbitrary group homomorphisms, with executable checks of the standard
//! identities (transitivity, projection formula, duality, Frobenius reciprocity,
//! Mackey decomposition) that certify each isomorphism by an explicit matrix.

pub mod catalog;
pub mod error;
pub mod groups;
pub mod homspace;
pub mod linalg;
pub mod rep;
pub mod theorems;

pub use error::{Error, Result};
