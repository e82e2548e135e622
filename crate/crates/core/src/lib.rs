//! Exact support τ-tilting computations over finite-dimensional algebras.
#![no_std]
extern crate alloc;

pub mod algebra;
pub mod checks;
pub mod error;
pub mod field;
pub mod fixtures;
pub mod group;
pub mod matrix;
pub mod mutation;
pub mod poly;
pub mod rep;
pub mod skew;
pub mod tau;

pub use error::{Error, Result};
pub use field::{FieldSpec, Scalar};
pub use matrix::{Matrix, Span};
