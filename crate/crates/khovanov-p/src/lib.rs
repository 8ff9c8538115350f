//! The diagrammatic Khovanov algebra of type P and its quotients `K_n`.
//!
//! Cup, cap and circle diagrams live on the half-integer line and are encoded
//! by integer codes (see [`diagrams::HalfPos`]). On top of these the crate
//! provides the surgery multiplication, orientations and the triangular basis,
//! crossingless matchings with their reductions, up-down-tableau combinatorics,
//! exact-rational module realizations, and the applications built from them:
//! Ext¹ between simples, duality on simples, irreducible summands and quivers.

pub mod acceptance;
pub mod algebra;
pub mod applications;
pub mod diagrams;
pub mod error;
pub mod linalg;
pub mod matchings;
pub mod modules;
pub mod orientation;
pub mod tableaux;
mod trace;

pub use algebra::{multiply, AlgebraElement, Mode};
pub use diagrams::{CapDiagram, CircleDiagram, CupDiagram, HalfPos, Weight};
pub use error::{Error, Result};
pub use matchings::{CrossinglessMatching, StackedDiagram};
