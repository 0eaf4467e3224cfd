//! Permutation-group algorithms: Schreier–Sims, orbit–stabiliser over
//! arbitrary hashable states, relation checking, homomorphism closure, and
//! brute-force routines for small groups.

mod bsgs;
mod element;
mod hom;
mod orbit;
mod small;
mod words;

pub use bsgs::{bsgs_build, group_order, membership, Bsgs};
pub use element::GroupElement;
pub use hom::{hom_closure, GroupHom};
pub use orbit::{orbit_stabilizer, orbit_stabilizer_with, OrbitStabilizer};
pub use small::{
    action_kernel_generators, action_kernel_order, center_of, derived_subgroup, enumerate_group,
    induced_block_action, is_simple_small, normal_closure, quotient_action, reduce_generators,
    ENUMERATION_CAP,
};
pub use words::{check_relations, s6_relators, Word, S6_RELATORS};
