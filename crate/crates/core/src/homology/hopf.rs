use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::exactla::{lattice_basis, lattice_intersection, lattice_quotient, FgAbGroup, Lattice};
use crate::lie::lyndon::{commutator, letter};
use crate::lie::{graded_ce_component, quotient_of_free, FreeLie, LieAlgebra, LieExpr};
use crate::ring::Integers;
use crate::IntMatrix;

/// `𝔣(x_1..x_g)/𝔯` with `𝔯` the ideal generated by homogeneous relations,
/// considered up to weight `truncation`.
#[derive(Clone, Debug)]
pub struct LiePresentation {
    generators: usize,
    relations: Vec<(usize, Vec<BigInt>)>,
    free: FreeLie,
}

pub const GENERATOR_NAMES: [char; 6] = ['x', 'y', 'z', 'u', 'v', 'w'];

impl LiePresentation {
    pub fn new(generators: usize, relations: &[LieExpr], truncation: usize) -> Result<Self> {
        let free = FreeLie::new(generators, truncation);
        let mut rels = Vec::new();
        for r in relations {
            let poly = r.to_poly();
            let Some(w) = poly.keys().next().map(Vec::len) else {
                continue;
            };
            if poly.keys().any(|k| k.len() != w) {
                return Err(Error::BracketCheck("relation is not homogeneous".into()));
            }
            if w <= truncation {
                rels.push((w, free.coordinates(&poly, w)?));
            }
        }
        Ok(LiePresentation {
            generators,
            relations: rels,
            free,
        })
    }

    /// Relations written with generators `x, y, z, u, v, w`.
    pub fn parse(generators: usize, relations: &[&str], truncation: usize) -> Result<Self> {
        let names = &GENERATOR_NAMES[..generators.min(GENERATOR_NAMES.len())];
        let exprs = relations
            .iter()
            .map(|s| LieExpr::parse(s, names))
            .collect::<Result<Vec<_>>>()?;
        Self::new(generators, &exprs, truncation)
    }

    pub fn free_algebra(generators: usize, truncation: usize) -> Self {
        Self::new(generators, &[], truncation).expect("free presentation")
    }

    /// Heisenberg as `𝔣(x, y)/([[x,y],x], [[x,y],y])`.
    pub fn heisenberg(truncation: usize) -> Self {
        Self::parse(2, &["[[x,y],x]", "[[x,y],y]"], truncation).expect("Heisenberg presentation")
    }

    /// Heisenberg as `𝔣(x, y, z)/(z, [[x,y],x], [[x,y],y])`.
    pub fn heisenberg_redundant(truncation: usize) -> Self {
        Self::parse(3, &["z", "[[x,y],x]", "[[x,y],y]"], truncation).expect("Heisenberg presentation")
    }

    /// The free abelian Lie algebra on two generators, `𝔣(x, y)/([x,y])`.
    pub fn abelian2(truncation: usize) -> Self {
        Self::parse(2, &["[x,y]"], truncation).expect("abelian presentation")
    }

    pub fn generators(&self) -> usize {
        self.generators
    }

    pub fn truncation(&self) -> usize {
        self.free.max_weight()
    }

    pub fn free(&self) -> &FreeLie {
        &self.free
    }

    /// The quotient Lie algebra, truncated.
    pub fn quotient(&self) -> Result<LieAlgebra<Integers>> {
        quotient_of_free(&self.free, &ideal_closure(self)?)
    }
}

fn columns(rows: usize, cols: &[Vec<BigInt>]) -> IntMatrix {
    IntMatrix::from_cols(rows, cols).expect("coordinate length")
}

fn to_cols(m: &IntMatrix) -> Vec<Vec<BigInt>> {
    (0..m.cols()).map(|j| m.col(j)).collect()
}

/// Brackets `[a, b]` for `a` in `left` (weight `u`) and `b` in `right`
/// (weight `v`), in Lyndon coordinates of weight `u + v`.
fn bracket_sets(f: &FreeLie, u: usize, left: &[Vec<BigInt>], v: usize, right: &[Vec<BigInt>]) -> Result<Vec<Vec<BigInt>>> {
    let mut out = Vec::new();
    for a in left {
        let pa = f.polynomial(a, u);
        for b in right {
            out.push(f.coordinates(&commutator(&pa, &f.polynomial(b, v)), u + v)?);
        }
    }
    Ok(out)
}

fn unit_vectors(n: usize) -> Vec<Vec<BigInt>> {
    (0..n)
        .map(|i| (0..n).map(|j| BigInt::from((i == j) as i64)).collect())
        .collect()
}

/// Lattice bases of `𝔯_w` for `w = 0..=truncation` (index 0 unused), built as
/// `𝔯_w = span(relations of weight w) + Σ_i [𝔯_{w-1}, x_i]`.
pub fn ideal_closure(p: &LiePresentation) -> Result<Vec<Vec<Vec<BigInt>>>> {
    let f = &p.free;
    let w_max = f.max_weight();
    let mut ideal: Vec<Vec<Vec<BigInt>>> = vec![Vec::new(); w_max + 1];
    for w in 1..=w_max {
        let mut gens: Vec<Vec<BigInt>> = p.relations.iter().filter(|(rw, _)| *rw == w).map(|(_, c)| c.clone()).collect();
        if w >= 2 {
            for prev in &ideal[w - 1] {
                let pp = f.polynomial(prev, w - 1);
                for i in 0..p.generators {
                    gens.push(f.coordinates(&commutator(&pp, &letter(i as u8)), w)?);
                }
            }
        }
        ideal[w] = to_cols(&lattice_basis(&columns(f.rank(w), &gens)));
    }
    Ok(ideal)
}

/// Weight-`w` data of `(𝔯 ∩ [𝔣,𝔣]) / [𝔯,𝔣]`.
#[derive(Clone, Debug)]
pub struct HopfDatum {
    pub weight: usize,
    pub numerator: IntMatrix,
    pub denominator: IntMatrix,
    pub group: FgAbGroup,
}

pub fn hopf_h2(p: &LiePresentation, w: usize) -> Result<HopfDatum> {
    let f = &p.free;
    if w == 0 || w > f.max_weight() {
        return Err(Error::Unsupported(format!("weight {w} outside 1..={}", f.max_weight())));
    }
    let ideal = ideal_closure(p)?;
    let rank = f.rank(w);
    let mut derived = Vec::new();
    let mut rf = Vec::new();
    for u in 1..w {
        derived.extend(bracket_sets(f, u, &unit_vectors(f.rank(u)), w - u, &unit_vectors(f.rank(w - u)))?);
        rf.extend(bracket_sets(f, u, &ideal[u], w - u, &unit_vectors(f.rank(w - u)))?);
    }
    let numerator = lattice_basis(&lattice_intersection(&columns(rank, &ideal[w]), &columns(rank, &derived))?);
    let denominator = lattice_basis(&columns(rank, &rf));
    let lattice = Lattice::new(&numerator);
    if (0..denominator.cols()).any(|j| !lattice.contains(&denominator.col(j))) {
        return Err(Error::Shape("[r, f] is not contained in r ∩ [f, f]".into()));
    }
    let group = lattice_quotient(&numerator, &denominator)?;
    Ok(HopfDatum {
        weight: w,
        numerator,
        denominator,
        group,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct H2Comparison {
    pub weight: usize,
    pub hopf: FgAbGroup,
    pub ce: FgAbGroup,
}

impl H2Comparison {
    pub fn agree(&self) -> bool {
        self.hopf == self.ce
    }
}

/// Hopf's formula against CE `H₂` of the quotient algebra, per weight.
pub fn h2_agreement(p: &LiePresentation) -> Result<Vec<H2Comparison>> {
    let q = p.quotient()?;
    (1..=p.truncation())
        .map(|w| {
            let hopf = hopf_h2(p, w)?.group;
            let ce = graded_ce_component(&q, w, 3)?.homology()?.swap_remove(2);
            Ok(H2Comparison { weight: w, hopf, ce })
        })
        .collect()
}
