//! Detectors and constructions around symmetric Ritz values: the spectral
//! measure, palindrome and spectrum-symmetry tests, the Ritz symmetry report,
//! Jordan-Wielandt matrices and the red-black rearrangement of
//! constant-diagonal Jacobi matrices.

mod condition;
mod jordan_wielandt;
mod measure;
mod ritz;

pub use condition::{
    check_sufficient_condition, is_absolute_palindrome, palindrome_vector_sample, spectrum_symmetry_center,
    sufficient_condition_from, PalindromeCheck, Sign, SufficientCondition,
};
pub use jordan_wielandt::{
    jordan_wielandt_assemble, jordan_wielandt_eigenpairs, red_black_permute, Eigenpair, RedBlackForm, RANK_RELATIVE_TOL,
};
pub use measure::{spectral_measure, Jump, SpectralMeasure, Step};
pub use ritz::{
    analyze_symmetry, ritz_symmetry_check, NodePair, RitzSymmetry, SymmetryAnalysis, SymmetryReport, SymmetryVerdict,
    DEFAULT_SYMMETRY_TOL,
};
