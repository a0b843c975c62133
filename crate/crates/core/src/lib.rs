//! Finite group engine for checking subgroup-embedding classifications.
//!
//! Groups are materialized as dense multiplication tables ([`GroupTable`]),
//! subgroups as bitsets over element indices ([`Subgroup`]). On top of that
//! the crate provides complete subgroup lattices, the TI / subnormal /
//! self-centralizing predicates, recognizers for the structural pieces that
//! appear in Frobenius-type classifications, and evaluators that compare the
//! quantified subgroup conditions against those structural descriptions.
//!
//! The crate is `no_std` and only needs `alloc`.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod corpus;
pub mod error;
pub mod group;
pub mod iso;
pub mod lattice;
pub mod perm;
pub mod structure;
pub mod subgroup;
pub mod theorem;

pub use error::{Error, Result};
pub use group::{prime_divisors, GroupTable, DEFAULT_MAX_ORDER};
pub use lattice::{all_subgroups, LatticeLimits, SubgroupLattice};
pub use perm::Permutation;
pub use subgroup::Subgroup;
