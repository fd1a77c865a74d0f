//! Element-order power sums `ψ_k(G) = Σ o(g)^k` of finite groups, and the
//! solvability criteria built on them.
//!
//! Groups are Cayley tables ([`group::FiniteGroup`]); all arithmetic is exact
//! ([`psi`]); each criterion in [`criteria`] is a sufficient condition that
//! can be cross-checked against the derived series.

pub mod catalog;
pub mod cli;
pub mod criteria;
pub mod error;
pub mod group;
pub mod psi;
pub mod report;
pub mod verify;

pub use error::{Error, Result};
pub use group::FiniteGroup;
