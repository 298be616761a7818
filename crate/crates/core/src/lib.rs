//! Group-theoretic obstructions for Galois groups ramified at a single
//! finite prime.
//!
//! The crate works with fully enumerated permutation groups
//! ([`group::FiniteGroup`]) and provides:
//!
//! * constructors for the group families that appear in the obstructions
//!   ([`families`]),
//! * an exhaustive search for tame Frobenius-compatible generating tuples over
//!   `F_q(t)` ([`frobenius`]),
//! * number-field exclusion rules over `Q` ([`rules`]).

pub mod abelian;
pub mod arith;
pub mod error;
pub mod families;
pub mod field;
pub mod frobenius;
pub mod group;
pub mod perm;
pub mod rules;
pub mod splitting;

pub use abelian::InvariantFactors;
pub use error::{GroupError, RuleError, SearchError};
pub use group::{ConjugacyClass, FiniteGroup, Subgroup, DEFAULT_CAP};
pub use perm::Permutation;
