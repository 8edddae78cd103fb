//! Exact root-combinatorial machinery for abelian ideals of a Borel subalgebra
//! of a simple Lie algebra: minuscule elements of the affine Weyl group, the
//! rootlet fibration, normalisers of `𝔟`-stable subspaces, ℤ-gradings, and a
//! registry of executable checks over all simple types.

pub mod error;
pub mod gradings;
pub mod ideals;
pub mod normalisers;
pub mod rootsys;
pub mod sets;
pub mod verify;
pub mod weyl;

pub use error::{Error, Result};
pub use rootsys::{build_root_system, Family, Root, RootSystem, SimpleTypeId};
pub use sets::{RootSet, SimpleSubset, SubsetRole};
