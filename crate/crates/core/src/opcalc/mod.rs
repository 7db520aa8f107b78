//! Dimension calculus of 𝕊-modules through exponential generating
//! functions f(x) = Σ dim P(n)·xⁿ/n!, valid over a field of characteristic 0.

mod series;
mod table;

pub use series::{egf_compose, hadamard, DimSeries};
pub use table::{dims_table, koszul_dual_dim_check, koszul_partner, law_dim_check, LawCheck, OperadName};
