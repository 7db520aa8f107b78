//! Bar, Hochschild, Harrison, cotangent and Connes complexes of small
//! algebras, and the splitting of Hochschild (co)homology along the shuffle
//! operator.

mod bar;
pub(crate) mod basis;
mod connes;
mod cotangent;
mod hochschild;
mod tensor;

pub use bar::bar_complex;
pub use basis::WeightWindow;
pub use connes::{connes_complex, CyclicSign};
pub use cotangent::{cotangent_complex, CotangentSide};
pub use hochschild::{
    harrison_complex, harrison_dims, hochschild_complex, hochschild_dims, hodge_filtered_complex, hodge_pieces, shuffle_commutation_defect,
    shuffle_endomorphism, HochschildSpec, HodgeTable, Variant,
};
