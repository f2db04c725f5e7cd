//! Exact-arithmetic toolkit for the congruent number problem.
//!
//! Decides and constructs right triangles of integer area `n` with sides in
//! Q, in real quadratic fields, or in an explicit cubic field, certified by
//! points of infinite order on the elliptic curve `E_n: Y^2 = X^3 - n^2 X`.
//! Everything on the trusted path is exact: big rationals, polynomial
//! algebra over Q, Sturm-certified root isolation, and interval arithmetic
//! with rational endpoints. No floating point anywhere.

pub mod constructions;
pub mod correspondence;
pub mod elliptic;
mod error;
pub mod field;
pub mod poly;
pub mod rational;
pub mod roots;
pub mod serialize;
pub mod tunnell;

pub use error::{Error, Result};
pub use field::{FieldElement, FieldRef, NumberField};
pub use poly::UniPoly;
pub use rational::Rational;
pub use roots::IsolatingInterval;
