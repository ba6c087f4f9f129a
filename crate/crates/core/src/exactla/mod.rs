//! Exact linear algebra over Z and F_p, and homology of bounded complexes.

pub mod abgroup;
pub mod complex;
pub mod exchange;
pub mod fp;
pub mod matrix;
pub mod smith;

pub use abgroup::{Canonicalization, FgAbGroup, PresentedAbGroup};
pub use complex::{homology_with_coefficients, AbChainComplex};
pub use fp::{check_prime, fp_image, fp_kernel, fp_quotient, FpChainComplex, FpMatrix, FpQuotient, FpSubspace, inv_mod};
pub use matrix::Matrix;
pub use smith::{
    integer_kernel, invariant_factors, lattice_basis, lattice_intersection, lattice_quotient,
    smith_normal_form, Lattice, SmithDecomposition,
};
