//! Finite-dimensional algebras over the operad tags assoc, comm, lie and
//! postlie, their coefficient modules, and weight-truncated free algebras.

mod free;
mod json;
mod module;
mod presentation;
mod table;

pub mod examples;

pub use free::{free_algebra_truncation, is_lyndon, lyndon_words, standard_bracketing, LyndonBasis};
pub use json::{
    algebra_from_doc, algebra_to_doc, algebra_to_json, module_from_doc, module_to_json, parse_algebra, parse_module,
    AlgebraDoc, ModuleDoc,
};
pub use module::{ModulePresentation, Side};
pub use presentation::{show_combination, AlgebraPresentation, OperadTag};
pub use table::{unit, Table};
