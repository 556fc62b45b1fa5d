//! Kostka functions attached to r-tuples of partitions.
//!
//! The crate computes the two families of Hall-Littlewood functions `P^±` in
//! the ring of r-colored symmetric functions by bi-orthogonalizing the Schur
//! basis against a ζ-twisted power-sum form, reads off the Kostka functions
//! `K^±`, and checks them against independent tableau and Hall-polynomial
//! computations. All arithmetic is exact.

#![allow(clippy::needless_range_loop, clippy::type_complexity)]

pub mod error;
pub mod exactalg;
pub mod hall;
pub mod io;
pub mod multisym;
pub mod partitions;
pub mod symfunc;
pub mod tableaux;
pub mod verify;

pub use error::{Error, Result};
