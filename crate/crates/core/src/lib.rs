//! Exact computation with braid groups, curves in punctured disks, framed braids and
//! endomorphisms of Artin groups of type A, B and of the pure braid group.
//!
//! Every equality is decided by the Garside normal form; the Artin action on the free group
//! is kept as an independent oracle. Words are read left to right throughout.

pub mod braid;
pub mod complex;
pub mod curve;
pub mod error;
pub mod framed;
pub mod hom;
pub mod report;

pub use error::{Error, Result};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");
