//! Chevalley–Eilenberg complexes and the post-Lie complex of a Lie algebra
//! with zero circle product.

mod ce;
mod postlie;

pub use ce::{chevalley_eilenberg, CESpec};
pub(crate) use ce::ce_tensor_complex;
pub use postlie::{postlie_complex, postlie_split_check, GradedDims, PostLieSpec, SplitReport};
