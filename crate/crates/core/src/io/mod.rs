//! File formats and the reference experiment generators.

pub mod cases;
pub mod format;
pub mod matrix_market;
pub mod vector;

pub use cases::{build_case, householder_reflector, householder_similarity, BuiltCase, CaseSpec};
pub use format::{format_float, to_json_string, write_atomic, CsvTable};
pub use matrix_market::{parse_matrix_market, read_matrix_market, write_matrix_market};
pub use vector::read_vector;
