//! Exact construction and verification of the automorphism group of the
//! order-6 complex Hadamard matrix with cube-root-of-unity entries, its
//! split-quaternion representation, and the outer automorphism of S₆ it
//! induces.

pub mod codes;
pub mod error;
pub mod exactnum;
pub mod grouptheory;
pub mod hadamard_aut;
pub mod linalg;
pub mod monomial;
pub mod outer_s6;
pub mod perm;
pub mod report;
pub mod splitquat_rep;
pub mod verify;

pub use error::{Error, Result};
