//! Chevalley–Eilenberg complexes `N ⊗ ΛⁿL` with
//! `∂(m ⊗ x_1∧…∧x_n) = Σ_i (-1)^{i+1} m·x_i ⊗ x_1∧…x̂_i…∧x_n
//!                    + Σ_{i<j} (-1)^{i+j} m ⊗ [x_i,x_j]∧x_1∧…x̂_i…x̂_j…∧x_n`.

use crate::error::{Error, Result};
use crate::multilinear::{powers::sort_with_sign, wedge_product, TupleBasis};
use crate::presentation::{FreeVec, PresentedComplex, Presentation};
use crate::ring::{BaseRing, RelationSpan};

use super::algebra::LieAlgebra;

/// A right `L`-module: `action[ν][x]` is `e_ν · e_x`.
#[derive(Clone, Debug)]
pub struct RightModule<B: BaseRing> {
    pub module: Presentation<B>,
    pub action: Vec<Vec<FreeVec<B::Elem>>>,
}

impl<B: BaseRing> RightModule<B> {
    /// The trivial module `B` (all of `L` acts by zero).
    pub fn trivial(l: &LieAlgebra<B>) -> Self {
        RightModule {
            module: Presentation::free(l.ring().clone(), 1),
            action: vec![vec![FreeVec::new(); l.gens()]],
        }
    }

    /// `L` acting on itself by `m · x = [m, x]`.
    pub fn adjoint(l: &LieAlgebra<B>) -> Self {
        let action = (0..l.gens())
            .map(|m| (0..l.gens()).map(|x| l.bracket_gens(m, x)).collect())
            .collect();
        RightModule {
            module: l.module().clone(),
            action,
        }
    }

    fn act(&self, ring: &B, v: &FreeVec<B::Elem>, x: &FreeVec<B::Elem>) -> FreeVec<B::Elem> {
        let mut out = FreeVec::new();
        for (m, a) in v.iter() {
            for (g, b) in x.iter() {
                out.add_scaled(ring, &ring.mul(a, b), &self.action[m][g]);
            }
        }
        out
    }

    /// `m·[x,y] = (m·x)·y - (m·y)·x`, and the action respects relations.
    pub fn check(&self, l: &LieAlgebra<B>) -> Result<()> {
        let ring = l.ring();
        let span = self.module.span();
        let e = |i| FreeVec::basis(ring, i);
        for m in 0..self.module.gens() {
            for x in 0..l.gens() {
                for y in x + 1..l.gens() {
                    let mut v = self.act(ring, &e(m), &l.bracket_gens(x, y));
                    let mx_y = self.act(ring, &self.act(ring, &e(m), &e(x)), &e(y));
                    let my_x = self.act(ring, &self.act(ring, &e(m), &e(y)), &e(x));
                    v.add_scaled(ring, &ring.from_i64(-1), &mx_y);
                    v.add_scaled(ring, &ring.one(), &my_x);
                    if !span.contains(&v) {
                        return Err(Error::BracketCheck(format!("not a right module at (e{m}, e{x}, e{y})")));
                    }
                }
            }
        }
        for m in 0..self.module.gens() {
            for rel in l.module().relations() {
                if !span.contains(&self.act(ring, &e(m), rel)) {
                    return Err(Error::BracketCheck("action does not respect relations of L".into()));
                }
            }
        }
        for rel in self.module.relations() {
            for x in 0..l.gens() {
                if !span.contains(&self.act(ring, rel, &e(x))) {
                    return Err(Error::BracketCheck("action does not respect module relations".into()));
                }
            }
        }
        Ok(())
    }
}

/// A (possibly weight-restricted) CE complex. Position `n` has generators
/// `(ν, J)` at index `ν * |bases[n]| + index(J)`.
#[derive(Clone, Debug)]
pub struct CeComplex<B: BaseRing> {
    complex: PresentedComplex<B>,
    bases: Vec<TupleBasis>,
    weight: Option<usize>,
}

impl<B: BaseRing> CeComplex<B> {
    pub fn complex(&self) -> &PresentedComplex<B> {
        &self.complex
    }

    pub fn basis(&self, n: usize) -> &TupleBasis {
        &self.bases[n]
    }

    pub fn weight(&self) -> Option<usize> {
        self.weight
    }

    pub fn homology(&self) -> Result<Vec<B::Homology>> {
        self.complex.homology()
    }
}

/// The CE complex in positions `0..=nmax` with coefficients in `coefficients`
/// (trivial when `None`).
pub fn ce_complex<B: BaseRing>(
    l: &LieAlgebra<B>,
    nmax: usize,
    coefficients: Option<&RightModule<B>>,
) -> Result<CeComplex<B>> {
    let trivial;
    let coeff = match coefficients {
        Some(c) => {
            c.check(l)?;
            c
        }
        None => {
            trivial = RightModule::trivial(l);
            &trivial
        }
    };
    build(l, nmax, coeff, None)
}

/// The weight-`w` summand of the CE complex with trivial coefficients.
pub fn graded_ce_component<B: BaseRing>(l: &LieAlgebra<B>, w: usize, nmax: usize) -> Result<CeComplex<B>> {
    build(l, nmax, &RightModule::trivial(l), Some(w))
}

fn build<B: BaseRing>(
    l: &LieAlgebra<B>,
    nmax: usize,
    coeff: &RightModule<B>,
    weight: Option<usize>,
) -> Result<CeComplex<B>> {
    let ring = l.ring();
    let wts = l.weights();
    let tuple_weight = |t: &[usize]| t.iter().map(|&i| wts[i]).sum::<usize>();
    let basis_for = |n: usize, w: Option<usize>| match w {
        Some(w) => TupleBasis::increasing_filtered(l.gens(), n, |t| tuple_weight(t) == w),
        None => TupleBasis::increasing(l.gens(), n),
    };
    let bases: Vec<TupleBasis> = (0..=nmax).map(|n| basis_for(n, weight)).collect();
    let cg = coeff.module.gens();

    let mut modules = Vec::with_capacity(nmax + 1);
    for (n, basis) in bases.iter().enumerate() {
        let bl = basis.len();
        let mut relations = Vec::new();
        for r in coeff.module.relations() {
            for j in 0..bl {
                relations.push(crate::multilinear::tensor_vec(ring, r, &FreeVec::basis(ring, j), bl));
            }
        }
        if n > 0 {
            for rho in l.module().relations() {
                let wr = l.weight_of(rho).expect("homogeneous relation");
                if weight.is_some_and(|w| w < wr) {
                    continue;
                }
                let lower = basis_for(n - 1, weight.map(|w| w - wr));
                for k in lower.tuples() {
                    let rest: Vec<FreeVec<B::Elem>> = k.iter().map(|&i| FreeVec::basis(ring, i)).collect();
                    let mut factors = vec![rho];
                    factors.extend(rest.iter());
                    let wedge = wedge_product(ring, &factors, basis);
                    for nu in 0..cg {
                        relations.push(wedge.reindex(ring, |j| Some(nu * bl + j)));
                    }
                }
            }
        }
        modules.push(Presentation::new(ring.clone(), cg * bl, relations)?);
    }

    let mut boundaries = Vec::with_capacity(nmax);
    for n in 1..=nmax {
        let (basis, lower) = (&bases[n], &bases[n - 1]);
        let ll = lower.len();
        let mut images = Vec::with_capacity(cg * basis.len());
        for nu in 0..cg {
            for t in basis.tuples() {
                let mut v = FreeVec::new();
                for i in 0..t.len() {
                    let mut rest = t.clone();
                    let x = rest.remove(i);
                    let r = match lower.index_of(&rest) {
                        Some(r) => r,
                        None => continue,
                    };
                    let sign = ring.from_i64(if i % 2 == 0 { 1 } else { -1 });
                    for (mu, c) in coeff.action[nu][x].iter() {
                        v.add_term(ring, mu * ll + r, &ring.mul(&sign, c));
                    }
                }
                for a in 0..t.len() {
                    for b in a + 1..t.len() {
                        let br = l.bracket_gens(t[a], t[b]);
                        if br.is_zero() {
                            continue;
                        }
                        let rest: Vec<usize> =
                            t.iter().enumerate().filter(|&(k, _)| k != a && k != b).map(|(_, &x)| x).collect();
                        let sign = if (a + b) % 2 == 0 { 1 } else { -1 };
                        for (k, c) in br.iter() {
                            let mut tup = vec![k];
                            tup.extend(&rest);
                            if let Some((sorted, odd)) = sort_with_sign(&tup) {
                                let s = if odd { -sign } else { sign };
                                let idx = lower.index_of(&sorted).expect("weight-preserving bracket");
                                v.add_term(ring, nu * ll + idx, &ring.mul(&ring.from_i64(s), c));
                            }
                        }
                    }
                }
                images.push(v);
            }
        }
        boundaries.push(images);
    }
    let complex = PresentedComplex::new(ring.clone(), modules, boundaries)?;
    Ok(CeComplex { complex, bases, weight })
}
