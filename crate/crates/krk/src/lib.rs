//! Affine crystal and KLR character engine.
//!
//! Builds Kirillov-Reshetikhin crystals `B^{1,1}`, depth-truncated highest
//! weight crystals, the explicit KLR modules `T(p,k)` attached to paths, and
//! checks the crystal isomorphism `B(Λ_{σ(i)}) ≅ B^{1,1} ⊗ B(Λ_i)` at the level
//! of crystals and graded characters.

pub mod appendix;
pub mod cartan;
pub mod categorify;
pub mod crystal;
pub mod error;
pub mod hw;
pub mod klr;
pub mod kr;
pub mod paths;
pub mod suites;
pub mod tmod;

pub use cartan::{AffineType, CartanDatum, Family, RootVec, WeightH};
pub use crystal::{Arrow, CrystalGraph};
pub use klr::{GradedChar, LaurentPoly};
