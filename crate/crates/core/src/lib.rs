//! Exact computation in virtual twin groups and their pure subgroups.
//!
//! The toolkit covers words over the involutive generators with their defining
//! relators, the projection onto the symmetric group with its Schreier
//! transversal, rewriting into the right-angled Artin structure of the pure
//! subgroup, normal forms and the word problem there, the defining graph with
//! its automorphism analysis, endomorphism algebra, and batch verification
//! suites replaying the headline computations.
//!
//! Everything is immutable and pure; values can be shared across threads
//! freely.

pub mod endo;
pub mod error;
pub mod graph;
pub mod perm;
pub mod raag;
pub mod rewrite;
pub mod verify;
pub mod word;

pub use error::{Error, Result};
pub use graph::{defining_graph, graph_automorphisms, DefGraph};
pub use perm::{
    act, diagonal_orbit_check, pi_image, schreier_tuple, schreier_word, Perm, SignedLambda,
};
pub use raag::{all_gens, raag_equal, AbelianImage, LambdaGen, RaagWord};
pub use rewrite::{decompose, gamma, rewrite_tau, vt_equal, vt_is_identity};
pub use word::{defining_relators, GenKind, RelatorSet, VGen, VWord};

/// Highest strand count the stock configuration targets; all algorithms stay
/// exact above it, only enumeration guards consult this.
pub const DEFAULT_MAX_STRANDS: usize = 8;
