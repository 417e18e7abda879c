//! Exact-arithmetic engine for the real Clifford algebra Cl(r,s), viewed as
//! a module over itself.
//!
//! The algebra is generated by e_1, ..., e_{r+s} with u^2 = -u^T q u,
//! q = I_r (+) (-I_s), so the first r generators square to -1 and the rest
//! to +1.  The crate computes the SO(r,s)-invariant subspace of the algebra,
//! decides existence of equivariant complex structures (they exist exactly
//! when the volume element squares to -1, and are then +/-omega), and
//! extracts complex gamma matrices for left multiplication on idempotent
//! summands.  All arithmetic is exact over big rationals.

pub mod blade;
pub mod complex;
pub mod error;
pub mod expr;
pub mod gamma;
pub mod invariants;
pub mod lie;
pub mod linalg;
pub mod multivector;
pub mod operator;
pub mod orthogonal;
pub mod signature;
pub mod verify;

pub use blade::{blade_mul, omega_squared, volume_element, Blade};
pub use complex::{ComplexMatrix, GaussianRational};
pub use error::{CliffordError, Result};
pub use expr::{format_multivector, format_rational, parse_multivector, FormatStyle};
pub use gamma::{
    candidate_idempotents, canonical_complex_basis, classify_matrix_algebra,
    complex_coordinates, complex_rep_matrix, gamma_matrices, image_basis, make_complex_structure,
    make_idempotent, pauli_matrices, verify_clifford_relations, AlgebraClass, ComplexBasis,
    ComplexStructure, MatrixAlgebraTag, Projection,
};
pub use invariants::{
    brute_force_invariants, find_equivariant_complex_structures, find_equivariant_idempotents,
    invariant_subspace, is_equivariant, InvariantBasis, BRUTE_FORCE_MAX_N,
};
pub use lie::{generators, left_mul_operator, right_mul_operator, LieGenerator};
pub use multivector::{rat, Multivector, Rational};
pub use operator::LinearOperator;
pub use orthogonal::OrthogonalMap;
pub use signature::{Signature, DEFAULT_MAX_N};
pub use verify::{all_passed, run_all, signatures_up_to, CheckReport, VerifyOptions};
