//! Symmetry, anonymity and role relations in finite strategic games.
//!
//! Games are stored as exact rational payoff tables over a shared action set.
//! The crate decides invariance under player permutations, classifies games
//! (anonymous, symmetric, self-anonymous, self-symmetric and the
//! permutation-based symmetry), and compares the situations of players
//! through the roles they play for each other.

pub mod cli;
pub mod error;
pub mod fixtures;
pub mod game;
pub mod oracle;
pub mod permutation;
pub mod relations;
pub mod report;
pub mod roles;
pub mod symmetry;
pub mod verdict;

pub use error::{Error, Result};
pub use game::{Game, Payoff, Profile};
pub use permutation::Permutation;
