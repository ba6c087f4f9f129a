//! Sparse vectors in free modules, presentations and complexes of presented
//! modules over a [`BaseRing`].

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::ring::{BaseRing, RelationSpan};

/// Sparse vector in a free module, indexed by generator. Zero coefficients are
/// never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreeVec<E> {
    terms: BTreeMap<usize, E>,
}

impl<E> Default for FreeVec<E> {
    fn default() -> Self {
        FreeVec {
            terms: BTreeMap::new(),
        }
    }
}

impl<E: Clone> FreeVec<E> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn basis<B: BaseRing<Elem = E>>(ring: &B, i: usize) -> Self {
        let mut v = Self::new();
        v.terms.insert(i, ring.one());
        v
    }

    pub fn from_terms<B: BaseRing<Elem = E>>(ring: &B, terms: impl IntoIterator<Item = (usize, E)>) -> Self {
        let mut v = Self::new();
        for (i, c) in terms {
            v.add_term(ring, i, &c);
        }
        v
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &E)> {
        self.terms.iter().map(|(&i, c)| (i, c))
    }

    pub fn get(&self, i: usize) -> Option<&E> {
        self.terms.get(&i)
    }

    pub fn max_index(&self) -> Option<usize> {
        self.terms.keys().next_back().copied()
    }

    pub fn add_term<B: BaseRing<Elem = E>>(&mut self, ring: &B, i: usize, c: &E) {
        if ring.is_zero(c) {
            return;
        }
        let sum = match self.terms.get(&i) {
            Some(old) => ring.add(old, c),
            None => c.clone(),
        };
        if ring.is_zero(&sum) {
            self.terms.remove(&i);
        } else {
            self.terms.insert(i, sum);
        }
    }

    /// `self += c * other`
    pub fn add_scaled<B: BaseRing<Elem = E>>(&mut self, ring: &B, c: &E, other: &FreeVec<E>) {
        if ring.is_zero(c) {
            return;
        }
        for (i, x) in other.iter() {
            self.add_term(ring, i, &ring.mul(c, x));
        }
    }

    pub fn scaled<B: BaseRing<Elem = E>>(&self, ring: &B, c: &E) -> Self {
        let mut v = Self::new();
        v.add_scaled(ring, c, self);
        v
    }

    pub fn neg<B: BaseRing<Elem = E>>(&self, ring: &B) -> Self {
        self.scaled(ring, &ring.from_i64(-1))
    }

    pub fn sub<B: BaseRing<Elem = E>>(&self, ring: &B, other: &Self) -> Self {
        let mut v = self.clone();
        v.add_scaled(ring, &ring.from_i64(-1), other);
        v
    }

    /// Relabels generators through `f`; terms mapped to `None` are dropped.
    pub fn reindex<B: BaseRing<Elem = E>>(&self, ring: &B, f: impl Fn(usize) -> Option<usize>) -> Self {
        let mut v = Self::new();
        for (i, c) in self.iter() {
            if let Some(j) = f(i) {
                v.add_term(ring, j, c);
            }
        }
        v
    }

    pub fn to_dense(&self, len: usize, zero: E) -> Vec<E> {
        let mut out = vec![zero; len];
        for (i, c) in self.iter() {
            out[i] = c.clone();
        }
        out
    }
}

/// Applies the linear map with the given generator images to `v`.
pub fn apply_map<B: BaseRing>(ring: &B, images: &[FreeVec<B::Elem>], v: &FreeVec<B::Elem>) -> FreeVec<B::Elem> {
    let mut out = FreeVec::new();
    for (i, c) in v.iter() {
        out.add_scaled(ring, c, &images[i]);
    }
    out
}

/// Composite `second ∘ first` on generator images.
pub fn compose<B: BaseRing>(
    ring: &B,
    second: &[FreeVec<B::Elem>],
    first: &[FreeVec<B::Elem>],
) -> Vec<FreeVec<B::Elem>> {
    first.iter().map(|v| apply_map(ring, second, v)).collect()
}

/// The module `R^gens / span(relations)`.
#[derive(Clone, Debug, PartialEq)]
pub struct Presentation<B: BaseRing> {
    ring: B,
    gens: usize,
    relations: Vec<FreeVec<B::Elem>>,
}

impl<B: BaseRing> Presentation<B> {
    pub fn new(ring: B, gens: usize, relations: Vec<FreeVec<B::Elem>>) -> Result<Self> {
        if let Some(bad) = relations.iter().find(|r| r.max_index().is_some_and(|i| i >= gens)) {
            return Err(Error::Shape(format!(
                "relation index {} out of range for {gens} generators",
                bad.max_index().unwrap_or(0)
            )));
        }
        let relations = relations.into_iter().filter(|r| !r.is_zero()).collect();
        Ok(Presentation { ring, gens, relations })
    }

    pub fn free(ring: B, gens: usize) -> Self {
        Presentation {
            ring,
            gens,
            relations: Vec::new(),
        }
    }

    pub fn ring(&self) -> &B {
        &self.ring
    }

    pub fn gens(&self) -> usize {
        self.gens
    }

    pub fn relations(&self) -> &[FreeVec<B::Elem>] {
        &self.relations
    }

    pub fn with_extra_relations(&self, extra: impl IntoIterator<Item = FreeVec<B::Elem>>) -> Self {
        let mut relations = self.relations.clone();
        relations.extend(extra.into_iter().filter(|r| !r.is_zero()));
        Presentation {
            ring: self.ring.clone(),
            gens: self.gens,
            relations,
        }
    }

    pub fn span(&self) -> B::Span {
        self.ring.relation_span(self)
    }
}

/// A bounded complex of presented modules, position 0 at the bottom.
/// `boundary(n)` lists the images in position `n - 1` of the generators of
/// position `n`; `boundary(0)` is zero.
#[derive(Clone, Debug)]
pub struct PresentedComplex<B: BaseRing> {
    ring: B,
    modules: Vec<Presentation<B>>,
    boundaries: Vec<Vec<FreeVec<B::Elem>>>,
}

impl<B: BaseRing> PresentedComplex<B> {
    /// `boundaries[n - 1]` is `∂_n`; checks well-definedness and `∂∘∂ = 0`
    /// modulo relations.
    pub fn new(ring: B, modules: Vec<Presentation<B>>, boundaries: Vec<Vec<FreeVec<B::Elem>>>) -> Result<Self> {
        let c = Self::new_unchecked(ring, modules, boundaries)?;
        c.validate()?;
        Ok(c)
    }

    pub(crate) fn new_unchecked(
        ring: B,
        modules: Vec<Presentation<B>>,
        boundaries: Vec<Vec<FreeVec<B::Elem>>>,
    ) -> Result<Self> {
        if boundaries.len() + 1 != modules.len().max(1) {
            return Err(Error::Shape("need one boundary between consecutive positions".into()));
        }
        let mut all = vec![vec![FreeVec::new(); modules.first().map_or(0, Presentation::gens)]];
        all.extend(boundaries);
        for (n, images) in all.iter().enumerate().skip(1) {
            if images.len() != modules[n].gens() {
                return Err(Error::Shape(format!("boundary {n}: one image per generator expected")));
            }
            let target = modules[n - 1].gens();
            if images.iter().any(|v| v.max_index().is_some_and(|i| i >= target)) {
                return Err(Error::Shape(format!("boundary {n}: image index out of range")));
            }
        }
        Ok(PresentedComplex {
            ring,
            modules,
            boundaries: all,
        })
    }

    fn validate(&self) -> Result<()> {
        let spans: Vec<B::Span> = self.modules.iter().map(Presentation::span).collect();
        for n in 1..self.modules.len() {
            let d = &self.boundaries[n];
            for r in self.modules[n].relations() {
                if !spans[n - 1].contains(&apply_map(&self.ring, d, r)) {
                    return Err(Error::IllDefinedMap { position: n });
                }
            }
            if n >= 2 {
                for v in compose(&self.ring, &self.boundaries[n - 1], d) {
                    if !spans[n - 2].contains(&v) {
                        return Err(Error::NotAComplex { position: n });
                    }
                }
            }
        }
        Ok(())
    }

    pub fn ring(&self) -> &B {
        &self.ring
    }

    pub fn len(&self) -> usize {
        self.modules.len()
    }

    pub fn is_empty(&self) -> bool {
        self.modules.is_empty()
    }

    pub fn modules(&self) -> &[Presentation<B>] {
        &self.modules
    }

    pub fn module(&self, n: usize) -> &Presentation<B> {
        &self.modules[n]
    }

    pub fn boundary(&self, n: usize) -> &[FreeVec<B::Elem>] {
        &self.boundaries[n]
    }

    pub fn homology(&self) -> Result<Vec<B::Homology>> {
        self.ring.homology(self)
    }

    /// Adds the given relations at every position (e.g. `q e_i` for `⊗ Z/q`).
    pub fn with_extra_relations(&self, extra: impl Fn(usize) -> Vec<FreeVec<B::Elem>>) -> Result<Self> {
        let modules = self
            .modules
            .iter()
            .map(|m| m.with_extra_relations(extra(m.gens())))
            .collect();
        Self::new(self.ring.clone(), modules, self.boundaries[1..].to_vec())
    }
}
