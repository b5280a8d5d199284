//! Exact integer linear algebra: Smith and Hermite normal forms, integer
//! solving and integer kernels. All arithmetic is on `BigInt`.

mod hermite;
mod matrix;
mod smith;

pub use hermite::hermite_normal_form;
pub use matrix::IntMatrix;
pub use smith::{
    kernel_basis, smith_normal_form, smith_normal_form_with, solve_integer, PivotOrder, SmithDecomposition, Solution,
};
