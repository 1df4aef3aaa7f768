//! Braid words and their invariants, torsion in mixed braid groups modulo
//! the centre, and interval bounds on the (higher) topological complexity of
//! braid subgroups `B_n^G = π⁻¹(G)`.
//!
//! | module | contents |
//! |---|---|
//! | [`braid`] | braid words, `σ_i`, `δ`, `ε`, `Δ²`, `α_j`, projection to `S_n` |
//! | [`equivalence`] | Garside normal form, word problem with a step budget |
//! | [`permutation`] | permutations, cycle types, group specs, Young splits |
//! | [`linking`] | linking profiles of closures, `A_n` coordinates, disjointness sampling |
//! | [`torsion`] | torsion classification of `B_{n−k,k}/Z` with witnesses |
//! | [`bounds`] | `TC_m` intervals with provenance |
//! | [`verify`] | property-verification suites |

pub mod bounds;
pub mod braid;
pub mod equivalence;
pub mod error;
pub mod linking;
pub mod permutation;
pub mod rewrite;
pub mod torsion;
pub mod verify;

pub use braid::{BraidWord, ExponentSum, Letter, Sign};
pub use error::{Error, Result};
pub use permutation::{CycleType, GroupSpec, Permutation};
