//! The `F_2` layer: `Ω𝔤 ≅ Γ²𝔤` for exponent-2 Lie algebras, the map
//! `φ: Ω𝔤 ⊗ 𝔤 → Ω𝔤`, `φ(ω₂(a) ⊗ b) = γ₁([a,b]) γ₁(a)`, and
//! `H^CE_{2,1}(𝔤) = coker φ`.

use crate::algebra::{KModule, SquareZeroAlgebra};
use crate::error::{Error, Result};
use crate::exactla::FpMatrix;
use crate::lie::{prime_field, LieAlgebra};
use crate::multilinear::{divided_square_f2, DividedSquare};
use crate::ring::{to_presented_group, BaseRing, Integers};

/// A finite-dimensional graded Lie algebra over `F_p` with explicit structure
/// constants on an `F_p` basis.
#[derive(Clone, Debug)]
pub struct FpLieAlgebra {
    p: u32,
    weights: Vec<usize>,
    brackets: Vec<Vec<Vec<u8>>>,
    truncation: usize,
}

impl FpLieAlgebra {
    /// Realizes a Lie algebra over a square-zero algebra on the `F_p` basis of
    /// its underlying module.
    pub fn from_lie(l: &LieAlgebra<SquareZeroAlgebra>) -> Result<Self> {
        let alg = *l.ring();
        let km = KModule::from_presentation(l.module())?;
        let d = alg.dim();
        let gens = l.gens();
        let basis: Vec<(usize, u32)> = km.quotient().basis().iter().map(|&c| (c / d, (c % d) as u32)).collect();
        let weights = basis.iter().map(|&(g, _)| l.weights()[g]).collect();
        let mut brackets = vec![vec![Vec::new(); basis.len()]; basis.len()];
        for (a, &(g, ma)) in basis.iter().enumerate() {
            for (b, &(h, mb)) in basis.iter().enumerate() {
                let v = match crate::algebra::monomial_mul(ma, mb) {
                    Some(mask) => {
                        let br = l.bracket_gens(g, h).scaled(&alg, &alg.monomial(mask, 1));
                        km.quotient().project(&crate::algebra::ambient_vector(&alg, gens, &br))
                    }
                    None => vec![0; basis.len()],
                };
                brackets[a][b] = v;
            }
        }
        Ok(FpLieAlgebra {
            p: alg.prime(),
            weights,
            brackets,
            truncation: l.truncation(),
        })
    }

    /// An integral Lie algebra whose underlying group has exponent 2.
    pub fn from_integral_exponent2(l: &LieAlgebra<Integers>) -> Result<Self> {
        let group = to_presented_group(l.module()).group();
        if group.free_rank() > 0 || !group.is_elementary(2) {
            return Err(Error::Unsupported(format!(
                "underlying group {group} does not have exponent 2"
            )));
        }
        let f2 = prime_field(2);
        let reduced = l.map_coefficients(f2, |c| f2.from_i64(if (c % 2u32) == 0u32.into() { 0 } else { 1 }))?;
        Self::from_lie(&reduced)
    }

    pub fn prime(&self) -> u32 {
        self.p
    }

    pub fn dim(&self) -> usize {
        self.weights.len()
    }

    pub fn weights(&self) -> &[usize] {
        &self.weights
    }

    pub fn truncation(&self) -> usize {
        self.truncation
    }

    pub fn bracket(&self, i: usize, j: usize) -> &[u8] {
        &self.brackets[i][j]
    }

    /// Bracket of arbitrary vectors.
    pub fn bracket_vec(&self, u: &[u8], v: &[u8]) -> Vec<u8> {
        let p = self.p;
        let mut out = vec![0u32; self.dim()];
        for (i, &a) in u.iter().enumerate().filter(|(_, &a)| a != 0) {
            for (j, &b) in v.iter().enumerate().filter(|(_, &b)| b != 0) {
                for (k, &c) in self.brackets[i][j].iter().enumerate() {
                    out[k] = (out[k] + a as u32 * b as u32 * c as u32) % p;
                }
            }
        }
        out.into_iter().map(|x| x as u8).collect()
    }
}

/// `Ω𝔤 = Γ²𝔤` with weights: `γ₂(b_i)` has weight `2 wt(b_i)`,
/// `γ₁(b_i)γ₁(b_j)` has weight `wt(b_i) + wt(b_j)`.
#[derive(Clone, Debug)]
pub struct OmegaF2 {
    pub gamma: DividedSquare,
    pub weights: Vec<usize>,
}

pub fn omega_f2(l: &FpLieAlgebra) -> Result<OmegaF2> {
    if l.p != 2 {
        return Err(Error::Unsupported(format!(
            "Ω is only modelled for exponent-2 algebras (got characteristic {})",
            l.p
        )));
    }
    let d = l.dim();
    let gamma = divided_square_f2(d);
    let mut weights = vec![0; gamma.dim()];
    for i in 0..d {
        weights[gamma.gamma2_index(i)] = 2 * l.weights[i];
        for j in i + 1..d {
            weights[gamma.product_index(i, j)] = l.weights[i] + l.weights[j];
        }
    }
    Ok(OmegaF2 { gamma, weights })
}

/// Matrix of `φ` on the generators `a ⊗ b_k` of `Ω𝔤 ⊗ 𝔤` (column `a * d + k`),
/// where `a` runs over the `Γ²` basis.
#[derive(Clone, Debug)]
pub struct PhiMap {
    pub omega: OmegaF2,
    pub matrix: FpMatrix,
    /// Weight each generator image must have: `2u + v` for `ω₂(a) ⊗ b`.
    pub predicted_weights: Vec<usize>,
}

pub fn phi_map(l: &FpLieAlgebra) -> Result<PhiMap> {
    let omega = omega_f2(l)?;
    let g = omega.gamma;
    let d = l.dim();
    let unit = |i: usize| {
        let mut v = vec![0u8; d];
        v[i] = 1;
        v
    };
    let mut cols = vec![Vec::new(); g.dim() * d];
    let mut predicted = vec![0; g.dim() * d];
    for k in 0..d {
        for i in 0..d {
            // φ(γ₂(b_i) ⊗ b_k) = γ₁[b_i, b_k] γ₁ b_i
            let col = g.gamma2_index(i) * d + k;
            cols[col] = g.product(l.bracket(i, k), &unit(i));
            predicted[col] = 2 * l.weights[i] + l.weights[k];
            for j in i + 1..d {
                // (γ₁b_i γ₁b_j) ⊗ b_k ↦ γ₁[b_i,b_k] γ₁b_j + γ₁[b_j,b_k] γ₁b_i
                let col = g.product_index(i, j) * d + k;
                let mut v = g.product(l.bracket(i, k), &unit(j));
                for (x, y) in v.iter_mut().zip(g.product(l.bracket(j, k), &unit(i))) {
                    *x ^= y;
                }
                cols[col] = v;
                predicted[col] = l.weights[i] + l.weights[j] + l.weights[k];
            }
        }
    }
    Ok(PhiMap {
        matrix: FpMatrix::from_col_vecs(2, g.dim(), &cols),
        omega,
        predicted_weights: predicted,
    })
}

impl PhiMap {
    /// `ε: Γ²𝔤 → 𝔤` as a `d × dim Γ²` matrix.
    pub fn epsilon(&self) -> FpMatrix {
        let g = self.omega.gamma;
        let cols: Vec<Vec<u8>> = (0..g.dim())
            .map(|c| {
                let mut e = vec![0u8; g.dim()];
                e[c] = 1;
                g.epsilon(&e)
            })
            .collect();
        FpMatrix::from_col_vecs(2, g.base_dim(), &cols)
    }

    pub fn epsilon_phi_vanishes(&self) -> bool {
        self.epsilon().mul(&self.matrix).map(|m| m.is_zero()).unwrap_or(false)
    }

    /// Generators whose image is not homogeneous of the predicted weight.
    pub fn inhomogeneous_generators(&self) -> Vec<usize> {
        (0..self.matrix.cols())
            .filter(|&c| {
                let col = self.matrix.col(c);
                col.iter()
                    .enumerate()
                    .any(|(r, &x)| x != 0 && self.omega.weights[r] != self.predicted_weights[c])
            })
            .collect()
    }
}

/// `coker φ`, in total and per output weight.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct H21 {
    pub dim: usize,
    /// `(w, dim)` for `w = 1..=truncation`, where truncation does not affect the value.
    pub per_weight: Vec<(usize, usize)>,
    pub epsilon_bar_rank: usize,
}

pub fn h21_f2(l: &FpLieAlgebra) -> Result<H21> {
    let phi = phi_map(l)?;
    if !phi.epsilon_phi_vanishes() {
        return Err(Error::Unsupported("ε∘φ does not vanish".into()));
    }
    if let Some(&c) = phi.inhomogeneous_generators().first() {
        return Err(Error::Unsupported(format!("φ is not weight-homogeneous on generator {c}")));
    }
    let total = phi.omega.gamma.dim();
    let dim = total - phi.matrix.rank();
    let per_weight = (1..=l.truncation())
        .map(|w| {
            let space = phi.omega.weights.iter().filter(|&&x| x == w).count();
            let cols: Vec<Vec<u8>> = (0..phi.matrix.cols())
                .filter(|&c| phi.predicted_weights[c] == w)
                .map(|c| phi.matrix.col(c))
                .collect();
            let rank = FpMatrix::from_col_vecs(2, total, &cols).rank();
            (w, space - rank)
        })
        .collect();
    Ok(H21 {
        dim,
        per_weight,
        epsilon_bar_rank: phi.epsilon().rank(),
    })
}

/// What the exact sequence `H₄^CE → H^CE_{2,1} → H₃^S → H₃^CE → 0` gives for
/// `H₃^S` from the dimensions of the other terms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum H3sReport {
    /// `H₃^CE = 0` and `H₄^CE = 0`: `H₃^S ≅ H^CE_{2,1}`.
    Isomorphic { dim: usize },
    /// `H₃^CE = 0`: `H₃^S` is a quotient of `H^CE_{2,1}`.
    QuotientOf { upper_bound: usize },
    /// `H₃^S ↠ H₃^CE`.
    SurjectsOnto { lower_bound: usize },
}

pub fn h3s_from_sequence(h4ce: usize, h21: usize, h3ce: usize) -> H3sReport {
    match (h3ce, h4ce) {
        (0, 0) => H3sReport::Isomorphic { dim: h21 },
        (0, _) => H3sReport::QuotientOf { upper_bound: h21 },
        _ => H3sReport::SurjectsOnto { lower_bound: h3ce },
    }
}
