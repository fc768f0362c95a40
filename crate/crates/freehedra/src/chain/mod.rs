//! Exact linear algebra over Z and Z/p: sparse matrices, Smith normal form,
//! bounded complexes and their homology.

pub mod complex;
pub mod homology;
pub mod matrix;
pub mod ring;
pub mod snf;

pub use complex::{
    check_complex, compose_is_zero, dualize, from_boundary, interval, koszul_evaluation, point, tensor, ChainComplex, ZeroWitness,
};
pub use homology::{homology, homology_basis, HomologyBasis, HomologyDegree, HomologySummary};
pub use matrix::SparseMatrix;
pub use ring::{sign, Coefficient, Ring};
pub use snf::{smith_normal_form, verify_snf, Snf};
