//! Bispace verification: a carrier with two σ-structures, the semi-open
//! sets they induce, (j-i)sg*-closed classification, pairwise separation
//! axioms, and an executable claim registry swept over all small bispaces.
//!
//! Finite carriers (up to 16 points) are handled exactly with bitmask
//! subsets. Uncountable carriers are handled symbolically through schema
//! families (countable / co-countable generated structures) over a fixed
//! list of distinguished atoms; queries the symbolic algebra cannot force
//! come back as indeterminate rather than guessed.

pub mod axioms;
pub mod error;
pub mod harness;
pub mod kappa_family;
pub mod semi_ops;
pub mod set_universe;
pub mod sg_star;

pub use error::{Error, Result, Tri};
pub use kappa_family::{
    enumerate_sigma_structures, Bispace, ExplicitFamily, KappaFamily, KappaIndex, Schema, Violation,
};
pub use set_universe::{AtomSet, Bulk, FiniteUniverse, Mask, SetExpr, SymbolicUniverse, Universe};
pub use sg_star::{SgIndex, SgWitness};
