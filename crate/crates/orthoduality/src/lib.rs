//! Finite ortholattices and their dual upper Vietoris orthospaces.
//!
//! Every structure here is finite and materialized: lattices carry their
//! meet, join and orthocomplement tables, spaces carry their specialization
//! order and orthogonality relation as bitsets.

pub mod bitset;
pub mod canon;
pub mod catalog;
pub mod dictionary;
pub mod duality;
pub mod error;
pub mod filters;
pub mod io;
pub mod lattice;
pub mod suite;
pub mod uvo;

pub use error::{Error, Result, SpaceError, ValidationError};
