use std::collections::HashMap;

use itertools::Itertools;

use crate::presentation::{FreeVec, Presentation};
use crate::ring::BaseRing;

/// Tuples of generator indices in lexicographic order: strictly increasing
/// (wedge monomials) or non-decreasing (symmetric monomials).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TupleBasis {
    tuples: Vec<Vec<usize>>,
    index: HashMap<Vec<usize>, usize>,
}

impl TupleBasis {
    fn from_tuples(tuples: Vec<Vec<usize>>) -> Self {
        let index = tuples.iter().enumerate().map(|(i, t)| (t.clone(), i)).collect();
        TupleBasis { tuples, index }
    }

    pub fn increasing(gens: usize, n: usize) -> Self {
        Self::from_tuples((0..gens).combinations(n).collect())
    }

    /// Increasing tuples satisfying `keep`, in lexicographic order.
    pub fn increasing_filtered(gens: usize, n: usize, keep: impl Fn(&[usize]) -> bool) -> Self {
        Self::from_tuples((0..gens).combinations(n).filter(|t| keep(t)).collect())
    }

    pub fn multisets(gens: usize, n: usize) -> Self {
        Self::from_tuples((0..gens).combinations_with_replacement(n).collect())
    }

    pub fn len(&self) -> usize {
        self.tuples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tuples.is_empty()
    }

    pub fn tuple(&self, i: usize) -> &[usize] {
        &self.tuples[i]
    }

    pub fn tuples(&self) -> &[Vec<usize>] {
        &self.tuples
    }

    pub fn index_of(&self, t: &[usize]) -> Option<usize> {
        self.index.get(t).copied()
    }
}

/// A power of a presented module together with the basis labelling its
/// generators.
#[derive(Clone, Debug)]
pub struct Power<B: BaseRing> {
    pub presentation: Presentation<B>,
    pub basis: TupleBasis,
}

/// Sorts a tuple of distinct indices, returning the permutation sign, or
/// `None` if an index repeats.
pub fn sort_with_sign(t: &[usize]) -> Option<(Vec<usize>, bool)> {
    let mut v = t.to_vec();
    let mut odd = false;
    for i in 1..v.len() {
        let mut j = i;
        while j > 0 && v[j - 1] > v[j] {
            v.swap(j - 1, j);
            odd = !odd;
            j -= 1;
        }
        if j > 0 && v[j - 1] == v[j] {
            return None;
        }
    }
    Some((v, odd))
}

fn expand<B: BaseRing>(
    ring: &B,
    factors: &[&FreeVec<B::Elem>],
    mut term: impl FnMut(&[usize], &B::Elem),
) {
    fn go<B: BaseRing>(
        ring: &B,
        factors: &[&FreeVec<B::Elem>],
        idx: &mut Vec<usize>,
        coeff: B::Elem,
        term: &mut dyn FnMut(&[usize], &B::Elem),
    ) {
        if idx.len() == factors.len() {
            term(idx, &coeff);
            return;
        }
        for (i, c) in factors[idx.len()].iter() {
            let next = ring.mul(&coeff, c);
            if ring.is_zero(&next) {
                continue;
            }
            idx.push(i);
            go(ring, factors, idx, next, term);
            idx.pop();
        }
    }
    go(ring, factors, &mut Vec::new(), ring.one(), &mut term);
}

/// `v_1 ∧ ... ∧ v_n` in the basis of increasing tuples.
pub fn wedge_product<B: BaseRing>(ring: &B, factors: &[&FreeVec<B::Elem>], basis: &TupleBasis) -> FreeVec<B::Elem> {
    let mut out = FreeVec::new();
    expand(ring, factors, |idx, c| {
        if let Some((sorted, odd)) = sort_with_sign(idx) {
            let c = if odd { ring.neg(c) } else { c.clone() };
            out.add_term(ring, basis.index_of(&sorted).expect("wedge basis"), &c);
        }
    });
    out
}

/// `v_1 · ... · v_n` in the basis of non-decreasing tuples.
pub fn symmetric_product<B: BaseRing>(
    ring: &B,
    factors: &[&FreeVec<B::Elem>],
    basis: &TupleBasis,
) -> FreeVec<B::Elem> {
    let mut out = FreeVec::new();
    expand(ring, factors, |idx, c| {
        let mut sorted = idx.to_vec();
        sorted.sort_unstable();
        out.add_term(ring, basis.index_of(&sorted).expect("symmetric basis"), c);
    });
    out
}

/// `u ⊗ v` where the right factor has `right_gens` generators.
pub fn tensor_vec<B: BaseRing>(
    ring: &B,
    u: &FreeVec<B::Elem>,
    v: &FreeVec<B::Elem>,
    right_gens: usize,
) -> FreeVec<B::Elem> {
    let mut out = FreeVec::new();
    for (i, a) in u.iter() {
        for (j, b) in v.iter() {
            out.add_term(ring, i * right_gens + j, &ring.mul(a, b));
        }
    }
    out
}

/// `A ⊗ B` with generator `(i, j)` at index `i * gens(B) + j`.
pub fn tensor<B: BaseRing>(a: &Presentation<B>, b: &Presentation<B>) -> Presentation<B> {
    let ring = a.ring();
    let bg = b.gens();
    let mut relations = Vec::new();
    for r in a.relations() {
        for j in 0..bg {
            relations.push(tensor_vec(ring, r, &FreeVec::basis(ring, j), bg));
        }
    }
    for i in 0..a.gens() {
        for s in b.relations() {
            relations.push(tensor_vec(ring, &FreeVec::basis(ring, i), s, bg));
        }
    }
    Presentation::new(ring.clone(), a.gens() * bg, relations).expect("tensor indices")
}

fn power<B: BaseRing>(
    m: &Presentation<B>,
    n: usize,
    basis: TupleBasis,
    lower: TupleBasis,
    product: impl Fn(&B, &[&FreeVec<B::Elem>], &TupleBasis) -> FreeVec<B::Elem>,
) -> Power<B> {
    let ring = m.ring();
    let mut relations = Vec::new();
    if n > 0 {
        for r in m.relations() {
            for t in lower.tuples() {
                let rest: Vec<FreeVec<B::Elem>> = t.iter().map(|&i| FreeVec::basis(ring, i)).collect();
                let mut factors = vec![r];
                factors.extend(rest.iter());
                relations.push(product(ring, &factors, &basis));
            }
        }
    }
    Power {
        presentation: Presentation::new(ring.clone(), basis.len(), relations).expect("power indices"),
        basis,
    }
}

/// `Λⁿ(F/R) = ΛⁿF / (R ∧ Λⁿ⁻¹F)`.
pub fn exterior_power<B: BaseRing>(m: &Presentation<B>, n: usize) -> Power<B> {
    let g = m.gens();
    power(
        m,
        n,
        TupleBasis::increasing(g, n),
        TupleBasis::increasing(g, n.saturating_sub(1)),
        wedge_product,
    )
}

/// `Sⁿ(F/R) = SⁿF / (R · Sⁿ⁻¹F)`.
pub fn symmetric_power<B: BaseRing>(m: &Presentation<B>, n: usize) -> Power<B> {
    let g = m.gens();
    power(
        m,
        n,
        TupleBasis::multisets(g, n),
        TupleBasis::multisets(g, n.saturating_sub(1)),
        symmetric_product,
    )
}

/// The map `ΛⁿM → M ⊗ Λⁿ⁻¹M`,
/// `a_1 ∧ ... ∧ a_n ↦ Σ (-1)^{i+1} a_i ⊗ (a_1 ∧ ... â_i ... ∧ a_n)`.
#[derive(Clone, Debug)]
pub struct LambdaToTensor<B: BaseRing> {
    pub source: Power<B>,
    pub lower: Power<B>,
    pub target: Presentation<B>,
    pub images: Vec<FreeVec<B::Elem>>,
}

pub fn lambda_to_tensor_map<B: BaseRing>(m: &Presentation<B>, n: usize) -> LambdaToTensor<B> {
    assert!(n >= 1, "lambda_to_tensor_map needs n >= 1");
    let ring = m.ring();
    let source = exterior_power(m, n);
    let lower = exterior_power(m, n - 1);
    let target = tensor(m, &lower.presentation);
    let lg = lower.basis.len();
    let images = source
        .basis
        .tuples()
        .iter()
        .map(|t| {
            let mut v = FreeVec::new();
            for i in 0..t.len() {
                let mut rest = t.clone();
                let a = rest.remove(i);
                let idx = a * lg + lower.basis.index_of(&rest).expect("lower wedge");
                let c = ring.from_i64(if i % 2 == 0 { 1 } else { -1 });
                v.add_term(ring, idx, &c);
            }
            v
        })
        .collect();
    LambdaToTensor {
        source,
        lower,
        target,
        images,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{to_presented_group, Integers};
    use crate::exactla::FgAbGroup;

    fn cyclic(orders: &[i64]) -> Presentation<Integers> {
        let r = Integers;
        let rels = orders
            .iter()
            .enumerate()
            .filter(|(_, &q)| q != 0)
            .map(|(i, &q)| FreeVec::from_terms(&r, [(i, r.from_i64(q))]))
            .collect();
        Presentation::new(r, orders.len(), rels).unwrap()
    }

    #[test]
    fn signs() {
        assert_eq!(sort_with_sign(&[2, 0, 1]), Some((vec![0, 1, 2], false)));
        assert_eq!(sort_with_sign(&[1, 0]), Some((vec![0, 1], true)));
        assert_eq!(sort_with_sign(&[1, 1]), None);
    }

    #[test]
    fn integral_powers_of_split_modules() {
        // Λ²(Z/2 ⊕ Z/4) = Z/2, S²(Z/2 ⊕ Z/4) = Z/2 ⊕ Z/2 ⊕ Z/4, (Z/2 ⊕ Z) ⊗ (Z/2 ⊕ Z) = (Z/2)^3 ⊕ Z
        let m = cyclic(&[2, 4]);
        let g = |p: &Presentation<Integers>| to_presented_group(p).group();
        assert_eq!(g(&exterior_power(&m, 2).presentation), FgAbGroup::from_cyclic_orders(&[2], 0));
        assert_eq!(g(&symmetric_power(&m, 2).presentation), FgAbGroup::from_cyclic_orders(&[2, 2, 4], 0));
        let n = cyclic(&[2, 0]);
        assert_eq!(g(&tensor(&n, &n)), FgAbGroup::from_cyclic_orders(&[2, 2, 2], 1));
        assert_eq!(g(&exterior_power(&n, 0).presentation), FgAbGroup::free(1));
        assert_eq!(g(&exterior_power(&n, 3).presentation), FgAbGroup::zero());
    }
}
