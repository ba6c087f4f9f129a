//! Homology engines: CE homology, Hopf's formula for `H₂`, and the Tor
//! computation for `U = Z⟨x,y⟩/(2x, 2y)` via its explicit resolution.

pub mod hopf;
pub mod main_example;

use crate::error::Result;
use crate::lie::{free_lie_graded, graded_ce_component, reduce_mod2, ce_complex, LieAlgebra};
use crate::ring::BaseRing;

pub use hopf::{h2_agreement, hopf_h2, ideal_closure, H2Comparison, HopfDatum, LiePresentation};
pub use main_example::{main_example_resolution, MainExample};

/// `H_n` of the (ungraded) CE complex with trivial coefficients.
pub fn ce_homology<B: BaseRing>(l: &LieAlgebra<B>, n: usize) -> Result<B::Homology> {
    Ok(ce_complex(l, n + 1, None)?.homology()?.swap_remove(n))
}

/// `H_n` of the weight-`w` summand of the CE complex.
pub fn graded_ce_homology<B: BaseRing>(l: &LieAlgebra<B>, n: usize, w: usize) -> Result<B::Homology> {
    Ok(graded_ce_component(l, w, n + 1)?.homology()?.swap_remove(n))
}

/// Dimensions of `H_n` in weights `1..=w_max` for the free Lie algebra on `g`
/// generators over `F_2`.
pub fn graded_ce_homology_free_f2(g: usize, w_max: usize, n: usize) -> Result<Vec<usize>> {
    let l = reduce_mod2(&free_lie_graded(g, w_max))?;
    (1..=w_max).map(|w| graded_ce_homology(&l, n, w)).collect()
}
