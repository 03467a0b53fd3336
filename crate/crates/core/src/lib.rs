//! Real Weyl groups from combinatorial data.
//!
//! Given a root system Φ, an integral isometric involution θ of its root
//! lattice, and a ±1 grading of the θ-fixed (imaginary) roots, this crate
//! computes the real Weyl group as
//!
//! ```text
//! W(g, h) = (W^c)^θ ⋉ (W^re × (A ⋉ W^{im,c}))
//! ```
//!
//! with explicit generators (as permutations of root indices) and exact
//! orders. Everything is exact integer / rational arithmetic; the crate is
//! `no_std` and only needs `alloc`.
//!
//! The [`oracle`] module re-derives every structural identity by brute-force
//! enumeration at small rank, independently of the constructive pipeline in
//! [`realweyl`].

#![no_std]
// Matrix code reads better with explicit indices.
#![allow(clippy::needless_range_loop)]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod arith;
pub mod involution;
pub mod lattice;
pub mod oracle;
pub mod realweyl;
pub mod rootset;
pub mod rootsys;
pub mod subsystems;
pub mod weylperm;

pub use involution::{InvolutionDatum, InvolutionError, RootClassification, VoganDiagram};
pub use lattice::{EpsilonSet, IntegerLattice, LatticeMode};
pub use realweyl::{RealWeylDecomposition, RealWeylError};
pub use rootset::RootSet;
pub use rootsys::{CartanType, RootIndex, RootSystem, RootSystemError, Series};
pub use subsystems::{Subsystem, SuperorthogonalSet};
pub use weylperm::{Perm, PermGroup, WeylElement};
