//! Regular Cayley maps on dihedral groups.
//!
//! The crate builds finite groups as multiplication tables, recognizes and
//! enumerates skew-morphisms, constructs Cayley maps with their dart systems,
//! forms quotient maps and admissible quadruples, and classifies the regular
//! Cayley maps on small dihedral groups together with verifiers for the
//! kernel-size results this machinery exists to check.

pub mod aut;
pub mod catalog;
pub mod dart;
pub mod error;
pub mod graph;
pub mod group;
pub mod json;
pub mod map;
pub mod perm;
pub mod quadruple;
pub mod quotient;
pub mod skew;
pub mod subgroup;

pub use error::{Error, Result};
pub use group::{Elem, FiniteGroup, GroupTag, IDENTITY};
pub use map::{CayleyMap, MapAnalysis};
pub use perm::Perm;
pub use skew::SkewMorphism;
pub use subgroup::{CosetPartition, Side, Subgroup};
