//! Exact algebra toolkit: noncommutative presentations and their matrix
//! representations, trace identities, quantum tori, branes between them and
//! path coalgebras.

pub mod chtrace;
pub mod coalg;
pub mod dbrane;
pub mod error;
pub mod io;
pub mod lattice;
pub mod matrep;
pub mod matrix;
pub mod mpoly;
pub mod ncalg;
pub mod qtorus;
pub mod scalar;
pub mod upoly;

pub use error::{Error, Result};
