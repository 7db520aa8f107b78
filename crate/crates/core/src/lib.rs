//! Exact-arithmetic workbench for operadic (co)homology over ℚ.
//!
//! The crate builds bar, Hochschild, Connes, cotangent, Chevalley–Eilenberg
//! and post-Lie complexes of small algebras, splits them along operators such
//! as the shuffle element, runs spectral sequences of filtered complexes, and
//! does the dimension calculus of 𝕊-modules.

pub mod algebra;
pub mod complexes;
pub mod error;
pub mod hodge;
pub mod lie_postlie;
pub mod linalg;
pub mod opcalc;
pub mod par;
pub mod symgroup;

pub use error::{Error, Result};
pub use linalg::{Matrix, Rational};
