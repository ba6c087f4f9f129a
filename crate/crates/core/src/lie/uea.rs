//! Weight-truncated universal enveloping algebras: per weight, words in the
//! generators of `L` modulo relations of `L` in any slot and
//! `u (a b - b a - [a,b]) v`.

use std::collections::HashMap;

use crate::algebra::{KModule, KModuleMap, SquareZeroAlgebra};
use crate::error::Result;
use crate::exactla::FpSubspace;
use crate::multilinear::lambda_to_tensor_map;
use crate::presentation::{FreeVec, Presentation};
use crate::ring::BaseRing;

use super::algebra::{class2_from_module, LieAlgebra};

#[derive(Clone, Debug)]
pub struct TruncatedUea<B: BaseRing> {
    components: Vec<Presentation<B>>,
    words: Vec<Vec<Vec<usize>>>,
    index: Vec<HashMap<Vec<usize>, usize>>,
    weights: Vec<usize>,
}

fn words_of_weight(weights: &[usize], w: usize, memo: &mut HashMap<usize, Vec<Vec<usize>>>) -> Vec<Vec<usize>> {
    if let Some(v) = memo.get(&w) {
        return v.clone();
    }
    let out = if w == 0 {
        vec![Vec::new()]
    } else {
        let mut out = Vec::new();
        for (g, &gw) in weights.iter().enumerate() {
            if gw <= w {
                for mut rest in words_of_weight(weights, w - gw, memo) {
                    rest.insert(0, g);
                    out.push(rest);
                }
            }
        }
        out
    };
    memo.insert(w, out.clone());
    out
}

pub fn uea_truncated<B: BaseRing>(l: &LieAlgebra<B>, w_max: usize) -> Result<TruncatedUea<B>> {
    let ring = l.ring();
    let weights = l.weights().to_vec();
    let mut memo = HashMap::new();
    let words: Vec<Vec<Vec<usize>>> = (0..=w_max).map(|w| words_of_weight(&weights, w, &mut memo)).collect();
    let index: Vec<HashMap<Vec<usize>, usize>> = words
        .iter()
        .map(|ws| ws.iter().enumerate().map(|(i, s)| (s.clone(), i)).collect())
        .collect();
    let mut components = Vec::with_capacity(w_max + 1);
    for w in 0..=w_max {
        let idx = &index[w];
        let splice = |u: &[usize], mid: &[usize], v: &[usize]| {
            let mut s = u.to_vec();
            s.extend(mid);
            s.extend(v);
            idx[&s]
        };
        let mut relations = Vec::new();
        for rho in l.module().relations() {
            let wr = l.weight_of(rho).expect("homogeneous relation");
            if wr > w {
                continue;
            }
            for wu in 0..=w - wr {
                for u in &words[wu] {
                    for v in &words[w - wr - wu] {
                        relations.push(FreeVec::from_terms(
                            ring,
                            rho.iter().map(|(k, c)| (splice(u, &[k], v), c.clone())),
                        ));
                    }
                }
            }
        }
        for s in &words[w] {
            for p in 0..s.len().saturating_sub(1) {
                let (a, b) = (s[p], s[p + 1]);
                if a >= b {
                    continue;
                }
                let (u, v) = (&s[..p], &s[p + 2..]);
                let mut rel = FreeVec::basis(ring, idx[s]);
                rel.add_term(ring, splice(u, &[b, a], v), &ring.from_i64(-1));
                for (k, c) in l.bracket_gens(a, b).iter() {
                    rel.add_term(ring, splice(u, &[k], v), &ring.neg(c));
                }
                relations.push(rel);
            }
        }
        components.push(Presentation::new(ring.clone(), words[w].len(), relations)?);
    }
    Ok(TruncatedUea {
        components,
        words,
        index,
        weights,
    })
}

impl<B: BaseRing> TruncatedUea<B> {
    pub fn component(&self, w: usize) -> &Presentation<B> {
        &self.components[w]
    }

    pub fn words(&self, w: usize) -> &[Vec<usize>] {
        &self.words[w]
    }

    pub fn max_weight(&self) -> usize {
        self.components.len() - 1
    }

    /// `φ(e_g)`, the one-letter word.
    pub fn phi(&self, ring: &B, g: usize) -> FreeVec<B::Elem> {
        FreeVec::basis(ring, self.index[self.weights[g]][&vec![g]])
    }

    /// Images of the weight-`w` generators of `L` under `φ`.
    pub fn phi_images(&self, ring: &B, l: &LieAlgebra<B>, w: usize) -> Vec<FreeVec<B::Elem>> {
        l.component_range(w).map(|g| self.phi(ring, g)).collect()
    }

    /// Product of elements of weights `a` and `b` (concatenation of words).
    pub fn multiply(&self, ring: &B, a: usize, x: &FreeVec<B::Elem>, b: usize, y: &FreeVec<B::Elem>) -> FreeVec<B::Elem> {
        let mut out = FreeVec::new();
        for (i, c) in x.iter() {
            for (j, d) in y.iter() {
                let mut s = self.words[a][i].clone();
                s.extend(&self.words[b][j]);
                out.add_term(ring, self.index[a + b][&s], &ring.mul(c, d));
            }
        }
        out
    }
}

/// Kernel of `φ` on the weight-2 part `Λ²M` of `M ⊕ Λ²M`, compared with the
/// kernel of `∂: Λ²M → M ⊗ M`.
#[derive(Clone, Debug)]
pub struct PbwReport {
    pub lambda2: KModule,
    pub kernel: FpSubspace,
    pub koszul_kernel: FpSubspace,
}

impl PbwReport {
    pub fn kernel_dim(&self) -> usize {
        self.kernel.dim()
    }

    pub fn kernels_agree(&self) -> bool {
        self.kernel.dim() == self.koszul_kernel.dim() && self.kernel.contains_space(&self.koszul_kernel)
    }
}

pub fn pbw_kernel_weight2(m: &Presentation<SquareZeroAlgebra>) -> Result<PbwReport> {
    let alg = *m.ring();
    let l = class2_from_module(m);
    let u = uea_truncated(&l, 2)?;
    let lambda2 = KModule::from_presentation(&l.component(2))?;
    let u2 = KModule::from_presentation(u.component(2))?;
    let phi = KModuleMap::from_images(&lambda2, &u2, &u.phi_images(&alg, &l, 2))?;
    let d = lambda_to_tensor_map(m, 2);
    let src = KModule::from_presentation(&d.source.presentation)?;
    let tgt = KModule::from_presentation(&d.target)?;
    let koszul = KModuleMap::from_images(&src, &tgt, &d.images)?;
    Ok(PbwReport {
        kernel: phi.kernel(),
        koszul_kernel: koszul.kernel(),
        lambda2,
    })
}
