//! `𝓕′(M)`: the Lie subalgebra of the tensor algebra `T(M)` generated by `M`,
//! truncated at weight 3.

use crate::algebra::{KModule, KModuleMap, SquareZeroAlgebra};
use crate::error::{Error, Result};
use crate::multilinear::{tensor, TupleBasis};
use crate::presentation::{FreeVec, Presentation};
use crate::ring::BaseRing;

use super::algebra::LieAlgebra;

pub const FPRIME_MAX_WEIGHT: usize = 3;

/// Relations of the image of `k^gens → target` (a presented module), i.e. a
/// generating set of the kernel as a submodule of the free module.
fn kernel_relations(
    alg: &SquareZeroAlgebra,
    gens: usize,
    target: &Presentation<SquareZeroAlgebra>,
    images: &[FreeVec<crate::algebra::KElement>],
) -> Result<Vec<FreeVec<crate::algebra::KElement>>> {
    let free = KModule::from_presentation(&Presentation::free(*alg, gens))?;
    let tgt = KModule::from_presentation(target)?;
    let map = KModuleMap::from_images(&free, &tgt, images)?;
    let kernel = map.kernel();
    let d = alg.dim();
    let p = alg.prime() as i64;
    let basis = kernel.basis();
    Ok((0..kernel.dim())
        .map(|r| {
            let row = basis.row(r);
            let mut v = FreeVec::new();
            for (c, &x) in row.iter().enumerate() {
                if x != 0 {
                    let mono = alg.monomial((c % d) as u32, x as i64 % p);
                    v.add_term(alg, c / d, &mono);
                }
            }
            v
        })
        .collect())
}

/// `𝓕′(M)` up to weight `w_max <= 3`. Generators: `e_i` (weight 1), `[e_i, e_j]`
/// for `i < j` (weight 2), `[e_k, [e_i, e_j]]` (weight 3); relations are the
/// kernels of the maps into `M^{⊗2}` and `M^{⊗3}`.
pub fn fprime_of_module(m: &Presentation<SquareZeroAlgebra>, w_max: usize) -> Result<LieAlgebra<SquareZeroAlgebra>> {
    if w_max == 0 || w_max > FPRIME_MAX_WEIGHT {
        return Err(Error::Unsupported(format!(
            "F'(M) is implemented for weights 1..={FPRIME_MAX_WEIGHT}"
        )));
    }
    let alg = *m.ring();
    let g = m.gens();
    let pairs = TupleBasis::increasing(g, 2);
    let np = pairs.len();
    let mut relations: Vec<FreeVec<_>> = m.relations().to_vec();
    let mut weights = vec![1; g];
    let mut brackets = Vec::new();
    let one = alg.one();
    let neg = alg.from_i64(-1);

    if w_max >= 2 {
        // e_i ⊗ e_j - e_j ⊗ e_i in M ⊗ M
        let m2 = tensor(m, m);
        let images: Vec<_> = pairs
            .tuples()
            .iter()
            .map(|t| FreeVec::from_terms(&alg, [(t[0] * g + t[1], one.clone()), (t[1] * g + t[0], neg.clone())]))
            .collect();
        for r in kernel_relations(&alg, np, &m2, &images)? {
            relations.push(r.reindex(&alg, |i| Some(g + i)));
        }
        weights.extend(std::iter::repeat(2).take(np));
        for (k, t) in pairs.tuples().iter().enumerate() {
            brackets.push(((t[0], t[1]), FreeVec::basis(&alg, g + k)));
        }
    }
    if w_max >= 3 {
        let m3 = tensor(m, &tensor(m, m));
        let idx = |a: usize, b: usize, c: usize| a * g * g + b * g + c;
        let mut images = Vec::with_capacity(g * np);
        for k in 0..g {
            for t in pairs.tuples() {
                let (i, j) = (t[0], t[1]);
                // e_k (e_i e_j - e_j e_i) - (e_i e_j - e_j e_i) e_k
                images.push(FreeVec::from_terms(
                    &alg,
                    [
                        (idx(k, i, j), one.clone()),
                        (idx(k, j, i), neg.clone()),
                        (idx(i, j, k), neg.clone()),
                        (idx(j, i, k), one.clone()),
                    ],
                ));
            }
        }
        for r in kernel_relations(&alg, g * np, &m3, &images)? {
            relations.push(r.reindex(&alg, |i| Some(g + np + i)));
        }
        weights.extend(std::iter::repeat(3).take(g * np));
        for k in 0..g {
            for p in 0..np {
                brackets.push(((k, g + p), FreeVec::basis(&alg, g + np + k * np + p)));
            }
        }
    }
    let module = Presentation::new(alg, weights.len(), relations)?;
    LieAlgebra::new(module, weights, brackets, w_max)
}
