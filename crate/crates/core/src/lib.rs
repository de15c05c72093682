//! Nonnegative partial information decomposition for discrete distributions.
//!
//! Given a joint distribution over a target `S` and predictors
//! `R = {R_1, .., R_{n-1}}`, the information `I(S; R)` is split into atoms,
//! one per antichain of predictor subsets. Redundancy is measured by `I_min`,
//! the expected minimum specific information any source carries about each
//! target outcome, and the atoms are its Möbius inverse over the redundancy
//! lattice.
//!
//! ```
//! use pid_core::{decompose, systems};
//!
//! let pid = decompose(&systems::xor()).unwrap();
//! let synergy = pid.atom_of(&"{12}".parse().unwrap()).unwrap();
//! assert!((synergy - 1.0).abs() < 1e-12);
//! ```
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod distribution;
pub mod error;
pub mod interaction;
pub mod lattice;
pub mod pid;
pub mod systems;

pub use distribution::{JointDistribution, Source};
pub use error::{Error, ErrorKind, Result};
pub use interaction::{
    atom_signature, conditional_mutual_information, interaction_decomposition_report,
    interaction_information, AtomSignature, InteractionReport,
};
pub use lattice::{enumerate_nodes, NodeId, RedundancyLattice, SourceCollection, MAX_PREDICTORS};
pub use pid::{
    asymmetry_report, decompose, decompose_pruned, i_min, pi_closed_form, pi_inclusion_exclusion,
    pi_recursive, PIDecomposition, PrunedDecomposition,
};
