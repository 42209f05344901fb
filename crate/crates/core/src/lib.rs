//! Permute-and-add network codes from ideals of group algebras F_q[G].
//!
//! The crate builds the full pipeline: finite fields, abelian groups and
//! their regular representation, the group algebra and its semisimple
//! spectral decomposition, ideals (group codes) with annihilators and
//! covering radii, network-code execution/verification, and constructive
//! multicast solvers (Jaggi–Sanders, scalar-to-ideal lifting, rotate-and-add).

pub mod algebra;
pub mod error;
pub mod gf;
pub mod group;
pub mod ideal;
pub mod lincode;
pub mod linalg;
pub mod multicast;
pub mod network;
pub mod spectral;

pub use algebra::{bit_expand, bit_truncate, AlgebraElement, EdgeVector};
pub use error::{Error, Result};
pub use gf::{Field, FieldElement};
pub use group::{Group, GroupElement, Permutation};
pub use ideal::GroupCode;
pub use lincode::LinearCode;
pub use network::{ModuleContext, Network, NetworkCode};
pub use spectral::Decomposition;
