//! Combinatorial construction kit for 3- and 4-dimensional fullerenes:
//! simple manifolds whose 2-faces are all pentagons or hexagons.
//!
//! The crate builds seed complexes (barrels, the 120-cell, polyhex quotients),
//! transforms them (gluing chains, coronas, subdivision, folding, facet-pairing
//! quotients), and verifies results with exact f-vectors and isomorphism
//! certificates.

pub mod builders;
pub mod census;
pub mod classify;
pub mod constructions;
pub mod error;
pub mod io;
pub mod kernel;
pub mod pipeline;
pub mod verify;

pub use error::{Error, Result};
pub use kernel::{CellRef, Complex, FVector, FlagSystem, IncidenceComplex, Orientability};
