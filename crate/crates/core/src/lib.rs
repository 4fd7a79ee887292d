//! Finite-field arithmetic, polynomial algebra and Gröbner machinery for
//! studying the c-boomerang uniformity of power maps and Dickson
//! permutations.

pub mod boomerang;
pub mod bpoly;
pub mod dickson;
pub mod error;
pub mod gf;
pub mod groebner;
pub mod parse;
pub mod polytope;
pub mod tightness;
pub mod upoly;

pub use bpoly::{BiPoly, Monomial2, Var};
pub use error::{Error, Result};
pub use gf::{Elt, FieldCtx};
pub use upoly::{FactorList, UniPoly};
