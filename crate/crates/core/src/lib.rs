//! Hermite normal form and determinant of nonsingular polynomial matrices
//! over prime fields.
//!
//! The Hermite form is computed in two passes: the diagonal entries are found
//! by recursive block triangularization with kernel and column bases, then
//! the full form is recovered from a single shifted column reduction of a
//! partially linearized matrix. The determinant uses the same triangularization
//! and tracks the determinant of the implicit unimodular transform through
//! constant-term linear algebra.
//!
//! ```
//! use polyhermite::{samples, hermite, determinant};
//!
//! let a = samples::hermite_input();
//! assert_eq!(hermite(&a).unwrap(), samples::hermite_output());
//! assert_eq!(determinant(&samples::det_input()).unwrap(), samples::det_value());
//! ```

pub mod bases;
pub mod constmat;
pub mod det;
pub mod error;
pub mod field;
pub mod hnf;
pub mod io;
pub mod linearize;
pub mod matrix;
pub mod oracle;
pub mod poly;
pub mod reduce;
pub mod samples;

pub use bases::{approximant_basis, column_basis_ext, kernel_basis, right_factor, ColumnBasisExt};
pub use constmat::{completion, ConstMat};
pub use det::{det_fastpath_diag, determinant, determinant_rec, unimodular_det_constants};
pub use error::{Error, Result};
pub use field::{FieldElement, Prime};
pub use hnf::{hermite, hermite_diagonal, hermite_known_degree, is_hermite};
pub use io::{format_pmat, parse_pmat, parse_shift};
pub use linearize::{
    compress, dominant_permutation, parlin_rows, smooth, smooth_for_hermite, LinearizationInfo,
    SmoothInfo,
};
pub use matrix::{PolyMat, Shift};
pub use poly::{Poly, NEG_INF};
pub use reduce::{column_reduce, popov_normalize};
