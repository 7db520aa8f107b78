//! Bounded complexes over ℚ, their homology, splittings along commuting
//! operators, and spectral sequences of filtered complexes.

mod chain;
mod filtered;
mod io;

pub use chain::{ChainComplex, Direction};
pub use filtered::{FilteredComplex, SpectralPage};
pub use io::{filtered_from_doc, filtered_to_doc, filtered_to_json, parse_filtered_complex, ComplexDoc};
