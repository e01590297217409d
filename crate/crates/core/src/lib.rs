//! Exact class expansions of symmetric functions evaluated in Jucys-Murphy elements.
//!
//! The crate has two halves. The oracles ([`symgroup`], [`partial`], [`hecke`]) expand
//! everything by brute force in a group algebra. The [`recurrence`] engine computes the
//! same coefficients from induction relations on partitions and scales much further.
//! [`series`], [`dyck`] and [`alpha`] build on the engine.

pub mod algebra;
pub mod alpha;
pub mod dyck;
pub mod error;
pub mod hecke;
pub mod partial;
pub mod partition;
pub mod numbers;
pub mod perm;
pub mod poly;
pub mod recurrence;
pub mod series;
pub mod symfunc;
pub mod symgroup;

pub use error::{Error, Result};
pub use partition::{partitions_of, Partition, WeakComposition};
pub use perm::Permutation;
pub use symfunc::SymFunc;
