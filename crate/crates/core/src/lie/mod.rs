//! Lie algebras over a [`crate::ring::BaseRing`]: free graded Lie algebras in the
//! Lyndon basis, class-2 algebras `M ⊕ Λ²M`, `𝓕′(M)`, Chevalley–Eilenberg
//! complexes and truncated enveloping algebras.

pub mod algebra;
pub mod ce;
pub mod fprime;
pub mod lyndon;
pub mod uea;

pub use algebra::{
    abelian, class2_from_module, free_lie_graded, heisenberg, prime_field, quotient_of_free, reduce_mod2,
    weight_offsets, LieAlgebra,
};
pub use ce::{ce_complex, graded_ce_component, CeComplex, RightModule};
pub use fprime::{fprime_of_module, FPRIME_MAX_WEIGHT};
pub use lyndon::{lyndon_words, FreeLie, LieExpr};
pub use uea::{pbw_kernel_weight2, uea_truncated, PbwReport, TruncatedUea};
