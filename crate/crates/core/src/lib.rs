//! Finite rings, their structural sets, and exhaustive deciders for
//! weakly nil clean and related element-wise properties.

pub mod construct;
pub mod deciders;
pub mod error;
pub mod harness;
pub mod par;
pub mod ring;
pub mod structure;

pub use construct::{build, build_with, BuildOptions, QuotientRing, RingSpec, Subring};
pub use error::{Error, Result};
pub use ring::{Elem, FiniteRing, Trajectory};
pub use structure::{Ideal, StructureTables};
