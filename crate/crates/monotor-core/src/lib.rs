//! Exact-arithmetic decision procedures for torsion functors with monomial
//! support over graded polynomial rings and their finite-index degree
//! restrictions, applied to the toric Cox pipeline: fan combinatorics, the
//! irrelevant ideal, graded Cech degree supports and flat-degree reports.

// index loops read and write across several matrices at once
#![allow(clippy::needless_range_loop)]

pub mod cech;
pub mod error;
pub mod lattice;
pub mod monomial;
pub mod restriction;
pub mod toric;
pub mod torsion;

pub use error::{Error, Result};
