//! Exact Schur rings over finite products of Galois rings.

pub mod cgring;
pub mod classify;
pub mod construct;
pub mod doc;
pub mod duality;
pub mod error;
pub mod galois;
pub mod numtheory;
pub mod parse;
pub mod set;
pub mod sring;
pub mod subgroup;

pub use cgring::{CGRing, Ideal, IdealRing, Quotient, RingElement, SubRing};
pub use duality::{Characters, CycInt};
pub use error::{Error, Result};
pub use galois::{GaloisRing, GrElement};
pub use set::ElementSet;
pub use sring::SRing;
pub use subgroup::UnitSubgroup;
