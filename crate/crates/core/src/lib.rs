//! Exact nilpotency theory for finite-rank Lie algebras and Lie modules.
//!
//! Coefficients are exact: the rationals, the integers, or a prime field. On
//! top of a small exact linear-algebra kernel the crate decides nilpotency of
//! Lie modules through the lower central series, and produces certificates
//! that can be re-checked independently: terminating or stabilising chains,
//! Engel flags that strictly triangularise every action at once, refuting
//! elements, the ascent through Engelian sub-algebras, and the comparison of
//! the zero root subalgebra with Cartan subalgebras.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]

extern crate alloc;

pub mod algebra;
pub mod catalog;
pub mod engel;
pub mod error;
pub mod lattice;
mod linalg;
pub mod matrix;
pub mod ring;
pub mod roots;
pub mod sample;
pub mod submodule;

pub use algebra::{
    validate_algebra, validate_module, BracketTable, LieAlgebra, LieModule, ValidationReport,
    Violation,
};
pub use error::{Error, Result};
pub use linalg::determinant;
pub use matrix::{Matrix, Vector};
pub use ring::{RingKind, Scalar, ScalarRing};
pub use submodule::{image, is_nilpotent_endo, kernel, EndoNilpotency, Submodule};
