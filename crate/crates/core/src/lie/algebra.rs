use std::collections::BTreeMap;
use std::ops::Range;

use num_bigint::BigInt;

use crate::algebra::SquareZeroAlgebra;
use crate::error::{Error, Result};
use crate::multilinear::{exterior_power, TupleBasis};
use crate::presentation::{FreeVec, Presentation};
use crate::ring::{BaseRing, Integers, RelationSpan};

use super::lyndon::FreeLie;

/// A weight-graded Lie algebra presented as a module with one weight per
/// generator (weights non-decreasing) and a bracket table on generator pairs.
/// Brackets of total weight above `truncation` are zero.
#[derive(Clone, Debug)]
pub struct LieAlgebra<B: BaseRing> {
    module: Presentation<B>,
    weights: Vec<usize>,
    brackets: BTreeMap<(usize, usize), FreeVec<B::Elem>>,
    truncation: usize,
}

impl<B: BaseRing> LieAlgebra<B> {
    /// `brackets` lists `[e_i, e_j]` for `i < j`; missing pairs bracket to zero.
    /// Checks homogeneity, well-definedness on relations and the Jacobi identity.
    pub fn new(
        module: Presentation<B>,
        weights: Vec<usize>,
        brackets: impl IntoIterator<Item = ((usize, usize), FreeVec<B::Elem>)>,
        truncation: usize,
    ) -> Result<Self> {
        let l = Self::new_unchecked(module, weights, brackets, truncation)?;
        l.check()?;
        Ok(l)
    }

    pub(crate) fn new_unchecked(
        module: Presentation<B>,
        weights: Vec<usize>,
        brackets: impl IntoIterator<Item = ((usize, usize), FreeVec<B::Elem>)>,
        truncation: usize,
    ) -> Result<Self> {
        if weights.len() != module.gens() {
            return Err(Error::Shape("one weight per generator expected".into()));
        }
        if weights.windows(2).any(|w| w[0] > w[1]) || weights.iter().any(|&w| w == 0 || w > truncation) {
            return Err(Error::Shape("weights must be non-decreasing and within 1..=truncation".into()));
        }
        let mut table = BTreeMap::new();
        for ((i, j), v) in brackets {
            if i >= j || j >= module.gens() {
                return Err(Error::Shape(format!("bracket entry ({i}, {j}) must have i < j < gens")));
            }
            if !v.is_zero() {
                table.insert((i, j), v);
            }
        }
        Ok(LieAlgebra {
            module,
            weights,
            brackets: table,
            truncation,
        })
    }

    pub fn ring(&self) -> &B {
        self.module.ring()
    }

    pub fn module(&self) -> &Presentation<B> {
        &self.module
    }

    pub fn gens(&self) -> usize {
        self.module.gens()
    }

    pub fn weights(&self) -> &[usize] {
        &self.weights
    }

    pub fn truncation(&self) -> usize {
        self.truncation
    }

    pub fn weight_of(&self, v: &FreeVec<B::Elem>) -> Option<usize> {
        let mut ws = v.iter().map(|(i, _)| self.weights[i]);
        let w = ws.next()?;
        if ws.all(|x| x == w) {
            Some(w)
        } else {
            None
        }
    }

    /// Generator indices of the weight-`w` component.
    pub fn component_range(&self, w: usize) -> Range<usize> {
        let start = self.weights.partition_point(|&x| x < w);
        let end = self.weights.partition_point(|&x| x <= w);
        start..end
    }

    /// The weight-`w` component as a presented module.
    pub fn component(&self, w: usize) -> Presentation<B> {
        let r = self.component_range(w);
        let rels = self
            .module
            .relations()
            .iter()
            .filter(|rel| self.weight_of(rel) == Some(w))
            .map(|rel| rel.reindex(self.ring(), |i| Some(i - r.start)))
            .collect();
        Presentation::new(self.ring().clone(), r.len(), rels).expect("component")
    }

    pub fn bracket_gens(&self, i: usize, j: usize) -> FreeVec<B::Elem> {
        use std::cmp::Ordering::*;
        match i.cmp(&j) {
            Less => self.brackets.get(&(i, j)).cloned().unwrap_or_default(),
            Greater => self
                .brackets
                .get(&(j, i))
                .map(|v| v.neg(self.ring()))
                .unwrap_or_default(),
            Equal => FreeVec::new(),
        }
    }

    pub fn bracket(&self, u: &FreeVec<B::Elem>, v: &FreeVec<B::Elem>) -> FreeVec<B::Elem> {
        let ring = self.ring();
        let mut out = FreeVec::new();
        for (i, a) in u.iter() {
            for (j, b) in v.iter() {
                out.add_scaled(ring, &ring.mul(a, b), &self.bracket_gens(i, j));
            }
        }
        out
    }

    /// Alternation holds by construction; checks homogeneity, that brackets
    /// respect relations, and Jacobi on all generator triples.
    pub fn check(&self) -> Result<()> {
        let ring = self.ring();
        for rel in self.module.relations() {
            if self.weight_of(rel).is_none() {
                return Err(Error::BracketCheck("relation is not homogeneous".into()));
            }
        }
        for (&(i, j), v) in &self.brackets {
            let w = self.weights[i] + self.weights[j];
            if w > self.truncation || self.weight_of(v) != Some(w) {
                return Err(Error::BracketCheck(format!("bracket [e{i}, e{j}] is not of weight {w}")));
            }
        }
        let span = self.module.span();
        let n = self.gens();
        for rel in self.module.relations() {
            for k in 0..n {
                if !span.contains(&self.bracket(rel, &FreeVec::basis(ring, k))) {
                    return Err(Error::BracketCheck(format!("bracket with e{k} does not respect relations")));
                }
            }
        }
        for i in 0..n {
            for j in i + 1..n {
                let ij = self.bracket_gens(i, j);
                for k in j + 1..n {
                    if self.weights[i] + self.weights[j] + self.weights[k] > self.truncation {
                        continue;
                    }
                    let e = |x: usize| FreeVec::basis(ring, x);
                    let mut s = self.bracket(&ij, &e(k));
                    s.add_scaled(ring, &ring.one(), &self.bracket(&self.bracket_gens(j, k), &e(i)));
                    s.add_scaled(ring, &ring.one(), &self.bracket(&self.bracket_gens(k, i), &e(j)));
                    if !span.contains(&s) {
                        return Err(Error::BracketCheck(format!("Jacobi fails on (e{i}, e{j}, e{k})")));
                    }
                }
            }
        }
        Ok(())
    }

    /// Changes coefficients along a ring map.
    pub fn map_coefficients<C: BaseRing>(&self, target: C, f: impl Fn(&B::Elem) -> C::Elem) -> Result<LieAlgebra<C>> {
        let conv = |v: &FreeVec<B::Elem>| FreeVec::from_terms(&target, v.iter().map(|(i, c)| (i, f(c))));
        let module = Presentation::new(
            target.clone(),
            self.gens(),
            self.module.relations().iter().map(conv).collect(),
        )?;
        let brackets: Vec<_> = self.brackets.iter().map(|(&k, v)| (k, conv(v))).collect();
        LieAlgebra::new(module, self.weights.clone(), brackets, self.truncation)
    }
}

/// The free Lie algebra on `g` generators over Z truncated at weight `w_max`
/// (the class-`w_max` nilpotent quotient), in the Lyndon basis.
pub fn free_lie_graded(g: usize, w_max: usize) -> LieAlgebra<Integers> {
    quotient_of_free(&FreeLie::new(g, w_max), &vec![Vec::new(); w_max + 1]).expect("free Lie algebra")
}

/// Offset of the weight-`w` Lyndon words in the total generator order.
pub fn weight_offsets(f: &FreeLie) -> Vec<usize> {
    let mut off = vec![0; f.max_weight() + 2];
    for w in 1..=f.max_weight() {
        off[w + 1] = off[w] + f.rank(w);
    }
    off
}

/// The quotient of the truncated free Lie algebra by per-weight sublattices
/// `ideal[w]` (Lyndon coordinates), assumed to form an ideal.
pub fn quotient_of_free(f: &FreeLie, ideal: &[Vec<Vec<BigInt>>]) -> Result<LieAlgebra<Integers>> {
    let z = Integers;
    let w_max = f.max_weight();
    let off = weight_offsets(f);
    let total = off[w_max + 1];
    let mut weights = Vec::with_capacity(total);
    for w in 1..=w_max {
        weights.extend(std::iter::repeat(w).take(f.rank(w)));
    }
    let mut relations = Vec::new();
    for (w, gens) in ideal.iter().enumerate().skip(1) {
        for coords in gens {
            relations.push(FreeVec::from_terms(
                &z,
                coords.iter().enumerate().map(|(i, c)| (off[w] + i, c.clone())),
            ));
        }
    }
    let module = Presentation::new(z, total, relations)?;
    let mut brackets = Vec::new();
    for u in 1..=w_max {
        for v in u..=w_max - u {
            for i in 0..f.rank(u) {
                for j in 0..f.rank(v) {
                    let (a, b) = (off[u] + i, off[v] + j);
                    if a >= b {
                        continue;
                    }
                    let c = f.bracket_basis(u, i, v, j);
                    let vec = FreeVec::from_terms(&z, c.into_iter().enumerate().map(|(k, x)| (off[u + v] + k, x)));
                    brackets.push(((a, b), vec));
                }
            }
        }
    }
    LieAlgebra::new(module, weights, brackets, w_max)
}

pub fn prime_field(p: u32) -> SquareZeroAlgebra {
    SquareZeroAlgebra::prime_field(p).expect("prime")
}

/// Componentwise reduction modulo 2.
pub fn reduce_mod2(l: &LieAlgebra<Integers>) -> Result<LieAlgebra<SquareZeroAlgebra>> {
    let f2 = prime_field(2);
    l.map_coefficients(f2, |c| {
        let r = c % 2;
        f2.from_i64(if r == BigInt::from(0) { 0 } else { 1 })
    })
}

/// Heisenberg algebra over Z: `x, y` in weight 1, `z = [x, y]` in weight 2.
pub fn heisenberg() -> LieAlgebra<Integers> {
    let z = Integers;
    LieAlgebra::new(Presentation::free(z, 3), vec![1, 1, 2], [((0, 1), FreeVec::basis(&z, 2))], 2)
        .expect("Heisenberg algebra")
}

/// Abelian Lie algebra on a module, all generators in weight 1.
pub fn abelian<B: BaseRing>(m: &Presentation<B>) -> LieAlgebra<B> {
    LieAlgebra::new(m.clone(), vec![1; m.gens()], [], 1).expect("abelian algebra")
}

/// `M ⊕ Λ²M` with `[a, b] = a ∧ b` and `Λ²M` central. Generators of `M`
/// come first, then the wedge pairs in lexicographic order.
pub fn class2_from_module<B: BaseRing>(m: &Presentation<B>) -> LieAlgebra<B> {
    let ring = m.ring();
    let g = m.gens();
    let lam = exterior_power(m, 2);
    let pairs = TupleBasis::increasing(g, 2);
    let mut relations: Vec<FreeVec<B::Elem>> = m.relations().to_vec();
    relations.extend(
        lam.presentation
            .relations()
            .iter()
            .map(|r| r.reindex(ring, |i| Some(g + i))),
    );
    let module = Presentation::new(ring.clone(), g + pairs.len(), relations).expect("class-2 module");
    let mut weights = vec![1; g];
    weights.extend(std::iter::repeat(2).take(pairs.len()));
    let brackets: Vec<_> = pairs
        .tuples()
        .iter()
        .enumerate()
        .map(|(k, t)| ((t[0], t[1]), FreeVec::basis(ring, g + k)))
        .collect();
    LieAlgebra::new(module, weights, brackets, 2).expect("class-2 algebra")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn heisenberg_bracket() {
        let h = heisenberg();
        let z = Integers;
        assert_eq!(h.bracket_gens(1, 0), FreeVec::basis(&z, 2).neg(&z));
        assert_eq!(h.component_range(2), 2..3);
    }

    #[test]
    fn jacobi_violation_rejected() {
        let z = Integers;
        let e = |i| FreeVec::basis(&z, i);
        // inhomogeneous bracket
        let bad = LieAlgebra::new(Presentation::free(z, 3), vec![1, 1, 1], [((0, 1), e(0))], 1);
        assert!(bad.is_err());
        // [a,b] = d, [c,d] = e and nothing else: Jacobi fails on (a, b, c)
        let bad = LieAlgebra::new(Presentation::free(z, 5), vec![1, 1, 1, 2, 3], [((0, 1), e(3)), ((2, 3), e(4))], 3);
        assert!(matches!(bad, Err(Error::BracketCheck(_))));
    }

    #[test]
    fn free_ranks() {
        let f = free_lie_graded(2, 4);
        let ranks: Vec<usize> = (1..=4).map(|w| f.component_range(w).len()).collect();
        assert_eq!(ranks, vec![2, 1, 2, 3]);
        assert_eq!(reduce_mod2(&f).unwrap().gens(), 8);
    }
}
