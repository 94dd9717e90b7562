//! Exact dense linear algebra over the rationals and prime fields.

pub mod field;
pub mod matrix;
pub mod sparse;

pub use field::{Field, PrimeField, Rationals};
pub use matrix::{member_of_span, reduce_against_rref, Matrix, Rref};
pub use sparse::{merge_duplicates, sparse_rank, SparseEchelon, SparseRow};
