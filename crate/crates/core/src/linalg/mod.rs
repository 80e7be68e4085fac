//! Exact linear algebra over ℤ and ℚ.
//!
//! Matrices are dense. Integer kernels, images and solvability are all read
//! off a Smith normal form with unimodular transforms, so lattice bases come
//! out saturated where the theory says they should.

mod lattice;
mod matrix;
mod rational;
mod smith;

pub use lattice::{
    annihilator_basis, generator_matrix, image_basis, image_rank, integer_image_basis,
    integer_kernel_basis, is_direct_summand, kernel_basis, lattice_contains, quotient_structure,
    saturation_basis, solve_integer, sublattice_equal, ModuleStructure,
};
pub use matrix::{IntMatrix, Matrix, RatMatrix};
pub use rational::{column_space_basis, nullspace, rank, rref, solve_rational};
pub use smith::{smith_normal_form, SmithDecomposition};
