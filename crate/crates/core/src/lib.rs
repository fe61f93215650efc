//! Marked signed graph products and their spectra.
//!
//! Exact arithmetic lives in [`algebra`]; graphs, markings and generators in
//! [`graph`]; the product and its factored characteristic polynomials in
//! [`product`] and [`theorems`].

pub mod algebra;
pub mod applications;
pub mod cli;
pub mod coronal;
pub mod error;
pub mod graph;
pub mod io;
pub mod product;
pub mod spectra;
pub mod theorems;
pub mod verify;

pub use error::{Error, Result};
pub use graph::{MarkedSignedGraph, Marking, MatrixKind, Sign, SignedGraph};
