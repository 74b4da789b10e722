//! Exact noncommutative differential geometry on the quantum torus `uv = qvu`, over the field
//! `Q(q)`: differential forms, bimodule connections and their braidings, vector fields,
//! interior products, Lie derivatives, curvature, torsion and formal flows. A separate
//! module analyses a constant-coefficient braiding family on the quantum sphere.

pub mod braid;
pub mod bracket;
pub mod calculus;
pub mod connection;
pub mod error;
pub mod expr;
pub mod flows;
pub mod interior;
pub mod matrix;
pub mod random;
pub mod report;
pub mod scalar;
pub mod suite;
pub mod sphere;
pub mod tensor;
pub mod torus;

pub use error::{Error, Result};
pub use scalar::{PolyZ, ScalarQ};
pub use tensor::{Letter, Tensor, TwoForm};
pub use torus::{Monomial, TorusElement};
