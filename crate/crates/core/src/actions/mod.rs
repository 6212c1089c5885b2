//! Groups acting on Hadamard matrices through a base scheme.
//!
//! A pair `(P, Q)` of signed permutation matrices acts by `H ↦ P⁻¹ H Q`.
//! `K` is the group of pairs whose permutation parts lie in `Iso(X, S)` and
//! differ by an element of `Aut(X, S)`; its orbits, merged under
//! transposition, are the similarity classes.

mod bound;
mod claims;
mod groups;
mod orbits;
mod packed;
mod similar;

pub use bound::{lower_bound, sylvester_bound, Bound};
pub use claims::{claim_checks, ClaimReport, CLAIM_ORDER_CAP};
pub use groups::{aut_group, induced_relation_perm, iso_group, GROUP_DEGREE_CAP};
pub use orbits::{k_orbits, OrbitMode, OrbitOptions, OrbitPartition, OrbitReport};
pub use similar::{similar_check, similar_with_groups};
