use crate::error::{Error, Result};
use crate::exactla::{homology_with_coefficients, AbChainComplex, FgAbGroup};
use crate::presentation::{apply_map, FreeVec, PresentedComplex, Presentation};
use crate::ring::BaseRing;

use super::powers::{exterior_power, sort_with_sign, symmetric_power, tensor, Power};

/// The weight-`k` summand `0 → ΛᵏM → M⊗Λᵏ⁻¹M → … → SᵏM → 0` of the Koszul
/// complex. Position `n` is `Sᵏ⁻ⁿM ⊗ ΛⁿM`; generator `(α, β)` has index
/// `index(α) * |Λⁿ| + index(β)`.
#[derive(Clone, Debug)]
pub struct KoszulComplex<B: BaseRing> {
    module: Presentation<B>,
    k: usize,
    sym: Vec<Power<B>>,
    ext: Vec<Power<B>>,
    complex: PresentedComplex<B>,
}

pub fn koszul_complex<B: BaseRing>(m: &Presentation<B>, k: usize) -> Result<KoszulComplex<B>> {
    let ring = m.ring();
    let sym: Vec<Power<B>> = (0..=k).map(|n| symmetric_power(m, n)).collect();
    let ext: Vec<Power<B>> = (0..=k).map(|n| exterior_power(m, n)).collect();
    let modules: Vec<Presentation<B>> = (0..=k)
        .map(|n| tensor(&sym[k - n].presentation, &ext[n].presentation))
        .collect();
    let mut boundaries = Vec::with_capacity(k);
    for n in 1..=k {
        let (s, e) = (&sym[k - n].basis, &ext[n].basis);
        let (s_up, e_down) = (&sym[k - n + 1].basis, &ext[n - 1].basis);
        let mut images = Vec::with_capacity(s.len() * e.len());
        for alpha in s.tuples() {
            for beta in e.tuples() {
                let mut v = FreeVec::new();
                for j in 0..beta.len() {
                    let mut rest = beta.clone();
                    let b = rest.remove(j);
                    let mut up = alpha.clone();
                    up.push(b);
                    up.sort_unstable();
                    let idx = s_up.index_of(&up).expect("sym") * e_down.len() + e_down.index_of(&rest).expect("ext");
                    v.add_term(ring, idx, &ring.from_i64(if j % 2 == 0 { 1 } else { -1 }));
                }
                images.push(v);
            }
        }
        boundaries.push(images);
    }
    let complex = PresentedComplex::new(ring.clone(), modules, boundaries)?;
    Ok(KoszulComplex {
        module: m.clone(),
        k,
        sym,
        ext,
        complex,
    })
}

impl<B: BaseRing> KoszulComplex<B> {
    pub fn module(&self) -> &Presentation<B> {
        &self.module
    }

    pub fn weight(&self) -> usize {
        self.k
    }

    pub fn complex(&self) -> &PresentedComplex<B> {
        &self.complex
    }

    pub fn symmetric(&self, n: usize) -> &Power<B> {
        &self.sym[n]
    }

    pub fn exterior(&self, n: usize) -> &Power<B> {
        &self.ext[n]
    }

    pub fn homology(&self) -> Result<Vec<B::Homology>> {
        self.complex.homology()
    }

    /// `h(a_1…a_s ⊗ β) = Σ_i a_1…â_i…a_s ⊗ a_i ∧ β`, from position `n` to `n + 1`.
    pub fn homotopy(&self, n: usize) -> Vec<FreeVec<B::Elem>> {
        let ring = self.module.ring();
        let k = self.k;
        let (s, e) = (&self.sym[k - n].basis, &self.ext[n].basis);
        if n == k {
            return vec![FreeVec::new(); s.len() * e.len()];
        }
        let (s_down, e_up) = (&self.sym[k - n - 1].basis, &self.ext[n + 1].basis);
        let mut images = Vec::with_capacity(s.len() * e.len());
        for alpha in s.tuples() {
            for beta in e.tuples() {
                let mut v = FreeVec::new();
                for i in 0..alpha.len() {
                    let mut rest = alpha.clone();
                    let a = rest.remove(i);
                    let mut wedge = vec![a];
                    wedge.extend(beta);
                    if let Some((sorted, odd)) = sort_with_sign(&wedge) {
                        let idx = s_down.index_of(&rest).expect("sym") * e_up.len() + e_up.index_of(&sorted).expect("ext");
                        v.add_term(ring, idx, &ring.from_i64(if odd { -1 } else { 1 }));
                    }
                }
                images.push(v);
            }
        }
        images
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomotopyReport {
    /// The scalar `n + m`, constant (= k) on the weight-k summand.
    pub coefficient: usize,
    pub holds: bool,
    pub failing_position: Option<usize>,
    /// Whether the homology vanishes; only evaluated when `k` is invertible.
    pub contracts: Option<bool>,
}

/// Checks `∂h + h∂ = k·id` on every generator of every position, modulo
/// relations, and that `h` is well defined.
pub fn koszul_homotopy_check<B: BaseRing>(kos: &KoszulComplex<B>, k_invertible: bool) -> Result<HomotopyReport> {
    let ring = kos.module.ring();
    let c = &kos.complex;
    let k = kos.k;
    let spans: Vec<B::Span> = c.modules().iter().map(Presentation::span).collect();
    let homotopies: Vec<Vec<FreeVec<B::Elem>>> = (0..=k).map(|n| kos.homotopy(n)).collect();
    let mut failing = None;
    'outer: for n in 0..=k {
        let h = &homotopies[n];
        if n < k {
            for r in c.module(n).relations() {
                if !crate::ring::RelationSpan::contains(&spans[n + 1], &apply_map(ring, h, r)) {
                    failing = Some(n);
                    break 'outer;
                }
            }
        }
        let kk = ring.from_i64(k as i64);
        for g in 0..c.module(n).gens() {
            let x = FreeVec::basis(ring, g);
            let mut v = if n < k {
                apply_map(ring, c.boundary(n + 1), &h[g])
            } else {
                FreeVec::new()
            };
            if n > 0 {
                let dx = &c.boundary(n)[g];
                v.add_scaled(ring, &ring.one(), &apply_map(ring, &homotopies[n - 1], dx));
            }
            v.add_scaled(ring, &ring.neg(&kk), &x);
            if !crate::ring::RelationSpan::contains(&spans[n], &v) {
                failing = Some(n);
                break 'outer;
            }
        }
    }
    let contracts = if k_invertible && failing.is_none() {
        Some(kos.homology()?.iter().all(B::homology_is_zero))
    } else {
        None
    };
    Ok(HomotopyReport {
        coefficient: k,
        holds: failing.is_none(),
        failing_position: failing,
        contracts,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PurityReport {
    /// `(probe, homology at each position of C ⊗ probe)`
    pub probes: Vec<(FgAbGroup, Vec<FgAbGroup>)>,
}

impl PurityReport {
    pub fn pure(&self) -> bool {
        self.probes.iter().all(|(_, hs)| hs.iter().all(FgAbGroup::is_zero))
    }
}

/// Tensors an acyclic complex with each probe group and reports the homology.
pub fn purity_probe(c: &AbChainComplex, probes: &[FgAbGroup]) -> Result<PurityReport> {
    for (n, h) in c.homology_all()?.into_iter().enumerate() {
        if !h.is_zero() {
            return Err(Error::NotAcyclic {
                position: n,
                homology: h.to_string(),
            });
        }
    }
    let probes = probes
        .iter()
        .map(|p| {
            let hs = (0..c.len())
                .map(|n| homology_with_coefficients(c, n, p))
                .collect::<Result<Vec<_>>>()?;
            Ok((p.clone(), hs))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(PurityReport { probes })
}
