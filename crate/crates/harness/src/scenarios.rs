//! The named scenarios. Each one fixes its inputs, runs the computation and
//! records one claim per checked statement.

use homalg::algebra::{diagonal_module, KElement, KModule, KModuleMap, SquareZeroAlgebra};
use homalg::derived::{h21_f2, h3s_from_sequence, phi_map, FpLieAlgebra, H3sReport};
use homalg::exactla::{FgAbGroup, FpMatrix};
use homalg::homology::{
    graded_ce_homology, graded_ce_homology_free_f2, h2_agreement, main_example::expected_homology,
    main_example_resolution, LiePresentation,
};
use homalg::lie::{
    class2_from_module, fprime_of_module, free_lie_graded, pbw_kernel_weight2, reduce_mod2, FreeLie,
};
use homalg::multilinear::{
    divided_square_f2, koszul_complex, koszul_homotopy_check, lambda_to_tensor_map, purity_probe,
};
use homalg::presentation::{FreeVec, Presentation};
use homalg::ring::{to_ab_complex, Integers};
use homalg::{Error, Result};
use itertools::Itertools;
use num_bigint::BigInt;
use num_integer::Integer;

use crate::report::{Provenance, Recorder, Report};

/// Default value and inclusive range of a numeric override.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Bound {
    pub default: usize,
    pub min: usize,
    pub max: usize,
}

impl Bound {
    const fn new(default: usize, min: usize, max: usize) -> Self {
        Bound { default, min, max }
    }

    fn resolve(&self, scenario: &str, flag: &str, value: Option<usize>) -> Result<usize> {
        match value {
            None => Ok(self.default),
            Some(v) if (self.min..=self.max).contains(&v) => Ok(v),
            Some(v) => Err(Error::Unsupported(format!(
                "{scenario}: --{flag} must be in {}..={} (got {v})",
                self.min, self.max
            ))),
        }
    }
}

#[derive(Clone, Debug)]
pub struct Scenario {
    pub id: &'static str,
    pub summary: &'static str,
    pub weight: Option<Bound>,
    pub k: Option<Bound>,
}

#[derive(Clone, Copy, Debug, Default)]
pub struct Overrides {
    pub weight: Option<usize>,
    pub k: Option<usize>,
    pub timings: bool,
}

const SCENARIOS: &[Scenario] = &[
    Scenario {
        id: "koszul-counterexample-p2",
        summary: "t1e1^t2e2 is a nonzero cycle of Kos(M,2) over F2[t1,t2,t3]/(t_i^2)",
        weight: None,
        k: None,
    },
    Scenario {
        id: "koszul-counterexample-p3",
        summary: "t1e1^t2e2^t3e3 lies in the kernel of L3M -> M(x)L2M over F3[t1..t4]/(t_i^2)",
        weight: None,
        k: None,
    },
    Scenario {
        id: "koszul-pid-acyclic",
        summary: "Kos(M,k) is acyclic for finitely generated abelian groups M",
        weight: None,
        k: Some(Bound::new(4, 1, 5)),
    },
    Scenario {
        id: "koszul-homotopy",
        summary: "dh + hd = k.id on Kos(M,k), contracting when k is invertible",
        weight: None,
        k: Some(Bound::new(4, 1, 5)),
    },
    Scenario {
        id: "purity-probes",
        summary: "Kos(M,k) (x) N is acyclic for N = Z/2, Z/3, Z/4",
        weight: None,
        k: Some(Bound::new(4, 1, 5)),
    },
    Scenario {
        id: "hopf-agreement",
        summary: "Hopf's formula agrees with CE H2 per weight on graded quotients of free Lie algebras",
        weight: Some(Bound::new(4, 1, 5)),
        k: None,
    },
    Scenario {
        id: "main-example-tor",
        summary: "Tor^U(Z,Z) for U = Z<x,y>/(x^2,y^2) from the explicit resolution",
        weight: Some(Bound::new(4, 1, 6)),
        k: None,
    },
    Scenario {
        id: "free-f2-ce-vanishing",
        summary: "graded CE H2 and H3 of the free Lie algebra on two generators over F2",
        weight: Some(Bound::new(4, 1, 5)),
        k: None,
    },
    Scenario {
        id: "h21-main-example",
        summary: "coker of phi: Omega(g) (x) g -> Omega(g) for g the free Lie algebra mod 2",
        weight: Some(Bound::new(4, 2, 5)),
        k: None,
    },
    Scenario {
        id: "fprime-h2",
        summary: "graded CE H2 of the Lie subalgebra of T(M) generated by M, p = 2",
        weight: Some(Bound::new(3, 2, 3)),
        k: None,
    },
    Scenario {
        id: "class2-pbw",
        summary: "the PBW map fails to be injective in weight 2 for the p = 2 module",
        weight: None,
        k: None,
    },
];

pub fn list_scenarios() -> &'static [Scenario] {
    SCENARIOS
}

pub fn find_scenario(id: &str) -> Option<&'static Scenario> {
    SCENARIOS.iter().find(|s| s.id == id)
}

pub fn run_scenario(id: &str, o: Overrides) -> Result<Report> {
    let s = find_scenario(id).ok_or_else(|| Error::Parse(format!("unknown scenario {id:?}")))?;
    let weight = match s.weight {
        Some(b) => Some(b.resolve(id, "weight", o.weight)?),
        None if o.weight.is_some() => return Err(Error::Unsupported(format!("{id} does not take --weight"))),
        None => None,
    };
    let k = match s.k {
        Some(b) => Some(b.resolve(id, "k", o.k)?),
        None if o.k.is_some() => return Err(Error::Unsupported(format!("{id} does not take --k"))),
        None => None,
    };
    let mut r = Recorder::new(id, o.timings);
    if let Some(w) = weight {
        r.param("weight", w);
    }
    if let Some(k) = k {
        r.param("k", k);
    }
    match id {
        "koszul-counterexample-p2" => koszul_counterexample_p2(&mut r)?,
        "koszul-counterexample-p3" => koszul_counterexample_p3(&mut r)?,
        "koszul-pid-acyclic" => pid_acyclic(&mut r, k.unwrap_or(4))?,
        "koszul-homotopy" => homotopy(&mut r, k.unwrap_or(4))?,
        "purity-probes" => purity(&mut r, k.unwrap_or(4))?,
        "hopf-agreement" => hopf(&mut r, weight.unwrap_or(4))?,
        "main-example-tor" => main_example(&mut r, weight.unwrap_or(4))?,
        "free-f2-ce-vanishing" => free_f2(&mut r, weight.unwrap_or(4))?,
        "h21-main-example" => h21(&mut r, weight.unwrap_or(4))?,
        "fprime-h2" => fprime(&mut r, weight.unwrap_or(3))?,
        "class2-pbw" => class2_pbw(&mut r)?,
        _ => unreachable!("scenario table and dispatch agree"),
    }
    Ok(r.finish())
}

/// Runs every scenario; overrides apply only where a scenario takes them.
pub fn run_all(o: Overrides) -> Result<Vec<Report>> {
    SCENARIOS
        .iter()
        .map(|s| {
            let o = Overrides {
                weight: o.weight.filter(|_| s.weight.is_some()),
                k: o.k.filter(|_| s.k.is_some()),
                timings: o.timings,
            };
            run_scenario(s.id, o)
        })
        .collect()
}

fn nonzero(b: bool) -> &'static str {
    if b {
        "nonzero"
    } else {
        "zero"
    }
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn list<T: std::fmt::Display>(xs: &[T]) -> String {
    format!("[{}]", xs.iter().join(", "))
}

/// `t_1 ... t_n (e_1 ∧ ... ∧ e_n)` in `ΛⁿM`, followed by its class, whether
/// that class is nonzero, whether its image in `M ⊗ Λⁿ⁻¹M` vanishes, and the
/// dimension of the kernel of `ΛⁿM → M ⊗ Λⁿ⁻¹M`.
struct Witness {
    source_dim: usize,
    target_dim: usize,
    nonzero: bool,
    image_zero: bool,
    kernel_dim: usize,
}

fn wedge_witness(m: &Presentation<SquareZeroAlgebra>, n: usize) -> Result<Witness> {
    let alg = *m.ring();
    let d = lambda_to_tensor_map(m, n);
    let src = KModule::from_presentation(&d.source.presentation)?;
    let tgt = KModule::from_presentation(&d.target)?;
    let map = KModuleMap::from_images(&src, &tgt, &d.images)?;
    let first: Vec<usize> = (0..n).collect();
    let idx = d.source.basis.index_of(&first).expect("witness tuple");
    let w = FreeVec::from_terms(&alg, [(idx, alg.monomial((1 << n) - 1, 1))]);
    let class = src.class_of(&w);
    Ok(Witness {
        source_dim: src.dim(),
        target_dim: tgt.dim(),
        nonzero: class.iter().any(|&x| x != 0),
        image_zero: map.apply(&class).iter().all(|&x| x == 0),
        kernel_dim: map.kernel().dim(),
    })
}

fn koszul_counterexample_p2(r: &mut Recorder) -> Result<()> {
    r.param("module", "diagonal:p=2,n=3");
    let m = diagonal_module(2, 3)?;
    let w = wedge_witness(&m, 2)?;
    let loc = "Koszul counterexample in characteristic 2";
    r.check("witness-nonzero", loc, Provenance::Paper, "nonzero", nonzero(w.nonzero));
    r.check("witness-image", loc, Provenance::Paper, "0", if w.image_zero { "0" } else { "nonzero" });
    r.check("dim-M", loc, Provenance::Derived, 17, KModule::from_presentation(&m)?.dim());
    r.check("dim-L2M", loc, Provenance::Derived, 10, w.source_dim);
    r.check("dim-MxM", loc, Provenance::Derived, 40, w.target_dim);
    r.check("kernel-dim-L2M-to-MxM", loc, Provenance::Derived, 1, w.kernel_dim);
    let h = koszul_complex(&m, 2)?.homology()?;
    r.check("kos2-homology-dims", loc, Provenance::Derived, "[0, 0, 1]", list(&h));
    Ok(())
}

fn koszul_counterexample_p3(r: &mut Recorder) -> Result<()> {
    r.param("module", "diagonal:p=3,n=4");
    let m = diagonal_module(3, 4)?;
    let w = wedge_witness(&m, 3)?;
    let loc = "Koszul counterexample in characteristic 3";
    r.check("witness-nonzero", loc, Provenance::Paper, "nonzero", nonzero(w.nonzero));
    r.check("witness-image", loc, Provenance::Paper, "0", if w.image_zero { "0" } else { "nonzero" });
    r.check("dim-M", loc, Provenance::Derived, 49, KModule::from_presentation(&m)?.dim());
    r.check("kernel-dim-L3M-to-MxL2M", loc, Provenance::Derived, 1, w.kernel_dim);
    let h = koszul_complex(&m, 3)?.homology()?;
    r.check("kos3-homology-dims", loc, Provenance::Derived, "[0, 0, 1, 1]", list(&h));
    let loc = "third homology of the free Lie algebra on the characteristic-3 module";
    let h3 = graded_ce_homology(&class2_from_module(&m), 3, 3)?;
    r.check_with("ce-h3-weight3", loc, Provenance::Paper, "nonzero", h3, h3 > 0);
    r.check("ce-h3-weight3-dim", loc, Provenance::Derived, 1, h3);
    r.assert_only("rs-h3", loc, "H3^RS = 0");
    Ok(())
}

/// `⊕ Z/o_i ⊕ Z^f` for every multiset of at most three orders from
/// {2, 3, 4, 8} and `f ∈ {0, 1}`.
fn pid_family() -> Vec<(String, Presentation<Integers>)> {
    let z = Integers;
    let mut out = Vec::new();
    for size in 0..=3 {
        for orders in [2i64, 3, 4, 8].into_iter().combinations_with_replacement(size) {
            for free in 0..=1usize {
                let rels = orders
                    .iter()
                    .enumerate()
                    .map(|(i, &o)| FreeVec::from_terms(&z, [(i, BigInt::from(o))]))
                    .collect();
                let p = Presentation::new(z, orders.len() + free, rels).expect("cyclic sum");
                let name = FgAbGroup::from_cyclic_orders(&orders, free).to_string();
                out.push((name, p));
            }
        }
    }
    out
}

fn pid_acyclic(r: &mut Recorder, kmax: usize) -> Result<()> {
    let family = pid_family();
    r.param("modules", family.len());
    let loc = "Koszul complex over a PID is acyclic";
    for k in 1..=kmax {
        let mut bad = Vec::new();
        for (name, m) in &family {
            if !koszul_complex(m, k)?.homology()?.iter().all(FgAbGroup::is_zero) {
                bad.push(name.clone());
            }
        }
        let computed = if bad.is_empty() {
            "all zero".to_string()
        } else {
            format!("nonzero for {}", bad.join(", "))
        };
        r.check(&format!("acyclic-k{k}"), loc, Provenance::Paper, "all zero", computed);
    }
    Ok(())
}

fn purity(r: &mut Recorder, kmax: usize) -> Result<()> {
    let family = pid_family();
    let probes = [2i64, 3, 4].map(|q| FgAbGroup::from_cyclic_orders(&[q], 0));
    r.param("modules", family.len());
    r.param("probes", "Z/2, Z/3, Z/4");
    let loc = "Koszul complex over a PID is pure acyclic";
    for k in 1..=kmax {
        let mut bad = Vec::new();
        for (name, m) in &family {
            let c = to_ab_complex(koszul_complex(m, k)?.complex())?;
            if !purity_probe(&c, &probes)?.pure() {
                bad.push(name.clone());
            }
        }
        let computed = if bad.is_empty() {
            "all zero".to_string()
        } else {
            format!("nonzero for {}", bad.join(", "))
        };
        r.check(&format!("pure-k{k}"), loc, Provenance::Paper, "all zero", computed);
    }
    Ok(())
}

fn homotopy(r: &mut Recorder, kmax: usize) -> Result<()> {
    let family = pid_family();
    r.param("modules", family.len());
    r.param("extra-module", "diagonal:p=3,n=2");
    let loc = "Koszul homotopy dh + hd = (n+m) id";
    // k acts invertibly on M iff M is torsion with orders prime to k
    let invertible = |m: &Presentation<Integers>, k: usize| {
        m.relations().len() == m.gens()
            && m.relations().iter().all(|rel| {
                rel.iter()
                    .all(|(_, o)| o.gcd(&BigInt::from(k)) == BigInt::from(1))
            })
    };
    for k in 1..=kmax {
        let (mut holds, mut contracts, mut expected_contracts) = (0, 0, 0);
        for (_, m) in &family {
            let inv = invertible(m, k);
            let rep = koszul_homotopy_check(&koszul_complex(m, k)?, inv)?;
            holds += usize::from(rep.holds);
            if inv {
                expected_contracts += 1;
                contracts += usize::from(rep.contracts == Some(true));
            }
        }
        r.check(
            &format!("identity-k{k}"),
            loc,
            Provenance::Paper,
            format!("{} of {}", family.len(), family.len()),
            format!("{holds} of {}", family.len()),
        );
        r.check(
            &format!("contracts-k{k}"),
            loc,
            Provenance::Paper,
            format!("{expected_contracts} of {expected_contracts}"),
            format!("{contracts} of {expected_contracts}"),
        );
    }
    let m = diagonal_module(3, 2)?;
    for k in 1..=kmax.min(3) {
        let inv = k % 3 != 0;
        let rep = koszul_homotopy_check(&koszul_complex(&m, k)?, inv)?;
        r.check(&format!("identity-f3-k{k}"), loc, Provenance::Paper, "holds", if rep.holds { "holds" } else { "fails" });
        if inv {
            r.check(&format!("contracts-f3-k{k}"), loc, Provenance::Paper, "yes", yes(rep.contracts == Some(true)));
        }
    }
    Ok(())
}

fn hopf(r: &mut Recorder, w: usize) -> Result<()> {
    let loc = "Hopf formula for graded quotients of free Lie algebras";
    let family = [
        ("heisenberg", LiePresentation::heisenberg(w)),
        ("heisenberg-redundant", LiePresentation::heisenberg_redundant(w)),
        ("free", LiePresentation::free_algebra(2, w)),
        ("abelian", LiePresentation::abelian2(w)),
    ];
    let mut heis = Vec::new();
    for (name, p) in &family {
        for c in h2_agreement(p)? {
            // expected side is CE H2 of the quotient, computed side Hopf's formula
            r.check(&format!("{name}-w{}", c.weight), loc, Provenance::Paper, &c.ce, &c.hopf);
            if name.starts_with("heisenberg") {
                heis.push((name, c.weight, c.hopf));
            }
        }
    }
    // the two Heisenberg presentations must give the same groups
    let (a, b): (Vec<_>, Vec<_>) = heis.iter().partition(|(n, _, _)| **n == "heisenberg");
    let same = a.iter().zip(&b).all(|(x, y)| x.1 == y.1 && x.2 == y.2);
    r.check("heisenberg-presentation-independent", loc, Provenance::Trivial, "yes", yes(same));
    if w >= 3 {
        let oracle = FgAbGroup::free(FreeLie::new(2, 3).rank(3));
        let computed = a.iter().find(|x| x.1 == 3).map(|x| x.2.to_string()).unwrap_or_default();
        r.check("heisenberg-w3-value", loc, Provenance::Derived, oracle, computed);
    }
    Ok(())
}

fn main_example(r: &mut Recorder, w: usize) -> Result<()> {
    let nmax = 2 * w - 1;
    r.param("nmax", nmax);
    let loc = "Tor over Z<x,y>/(x^2, y^2) from the explicit resolution";
    let ex = main_example_resolution(w, nmax)?;
    r.check(
        "resolution-exact",
        loc,
        Provenance::Paper,
        format!("exact in weights <= {w}"),
        format!("exact in weights <= {}", ex.weight_complexes.len() - 1),
    );
    for n in 0..=nmax {
        let prov = if n == 0 { Provenance::Trivial } else { Provenance::Paper };
        r.check(&format!("H{n}"), loc, prov, expected_homology(n), &ex.homology[n]);
    }
    Ok(())
}

fn free_f2(r: &mut Recorder, w: usize) -> Result<()> {
    let loc = "free Lie algebras over F2 have vanishing higher CE homology";
    for n in [2, 3] {
        let dims = graded_ce_homology_free_f2(2, w, n)?;
        r.check(&format!("H{n}-weights-1..{w}"), loc, Provenance::Paper, list(&vec![0; w]), list(&dims));
    }
    Ok(())
}

/// `dim φ(Ω𝔤 ⊗ 𝔤)` from `φ(γ₂(a) ⊗ b) = γ₁[a,b]γ₁a` over every `a ∈ 𝔤`;
/// the `γ₂(a)` span `Γ²𝔤` since `γ₂(a + a') = γ₂a + γ₂a' + aa'`.
fn brute_force_phi_rank(l: &FpLieAlgebra) -> usize {
    let d = l.dim();
    let g = divided_square_f2(d);
    let mut cols = Vec::new();
    for bits in 1u64..1 << d {
        let a: Vec<u8> = (0..d).map(|i| (bits >> i & 1) as u8).collect();
        for k in 0..d {
            let mut b = vec![0u8; d];
            b[k] = 1;
            cols.push(g.product(&l.bracket_vec(&a, &b), &a));
        }
    }
    FpMatrix::from_col_vecs(2, g.dim(), &cols).rank()
}

fn h21(r: &mut Recorder, w: usize) -> Result<()> {
    r.param("generators", 2);
    let loc = "H^CE_{2,1} of the free Lie algebra mod 2";
    let lz = reduce_mod2(&free_lie_graded(2, w))?;
    let l = FpLieAlgebra::from_lie(&lz)?;
    let phi = phi_map(&l)?;
    r.check("epsilon-phi-zero", loc, Provenance::Paper, "0", if phi.epsilon_phi_vanishes() { "0" } else { "nonzero" });
    let inh = phi.inhomogeneous_generators();
    r.check("phi-homogeneous", loc, Provenance::Paper, "all generators", if inh.is_empty() {
        "all generators".to_string()
    } else {
        format!("fails on {}", list(&inh))
    });
    let h = h21_f2(&l)?;
    r.check("coker-surjects-onto-g", loc, Provenance::Paper, format!("rank {}", l.dim()), format!("rank {}", h.epsilon_bar_rank));
    r.check_with(
        "coker-dim-at-least-dim-g",
        loc,
        Provenance::Trivial,
        format!(">= {}", l.dim()),
        h.dim,
        h.dim >= l.dim(),
    );
    let total = divided_square_f2(l.dim()).dim();
    r.check("coker-dim-brute-force", loc, Provenance::Derived, total - brute_force_phi_rank(&l), h.dim);
    let per_weight = h.per_weight.iter().map(|(w, d)| format!("{w}:{d}")).join(" ");
    r.param("coker-per-weight", per_weight);
    let h3 = (1..=w).map(|u| graded_ce_homology(&lz, 3, u)).sum::<Result<usize>>()?;
    let h4 = (1..=w).map(|u| graded_ce_homology(&lz, 4, u)).sum::<Result<usize>>()?;
    r.check("ce-h3", loc, Provenance::Paper, 0, h3);
    r.check("ce-h4", loc, Provenance::Paper, 0, h4);
    let s = match h3s_from_sequence(h4, h.dim, h3) {
        H3sReport::Isomorphic { .. } => "isomorphic to H^CE_{2,1}",
        H3sReport::QuotientOf { .. } => "quotient of H^CE_{2,1}",
        H3sReport::SurjectsOnto { .. } => "surjects onto H3^CE",
    };
    r.check("h3s-from-sequence", loc, Provenance::Paper, "isomorphic to H^CE_{2,1}", s);
    r.assert_only("h3s-abstract-type", loc, "H3^S = (Z/2)^(infinite direct sum)");
    Ok(())
}

fn fprime(r: &mut Recorder, w: usize) -> Result<()> {
    r.param("module", "diagonal:p=2,n=3");
    let loc = "second homology of the Lie subalgebra of T(M) generated by M";
    let m = diagonal_module(2, 3)?;
    let l = fprime_of_module(&m, w)?;
    let dims = (1..=w)
        .map(|u| Ok(KModule::from_presentation(&l.component(u))?.dim()))
        .collect::<Result<Vec<_>>>()?;
    r.check("component-dims", loc, Provenance::Derived, list(&[17, 9, 23][..w]), list(&dims));
    let h2 = graded_ce_homology(&l, 2, 2)?;
    r.check_with("ce-h2-weight2", loc, Provenance::Paper, "nonzero", h2, h2 > 0);
    r.check("ce-h2-weight2-dim", loc, Provenance::Derived, 1, h2);
    r.assert_only("rt-h2", loc, "H2^RT = 0");
    Ok(())
}

fn class2_pbw(r: &mut Recorder) -> Result<()> {
    r.param("module", "diagonal:p=2,n=3");
    r.param("free-module", "free:p=2,m=3,rank=3");
    let loc = "PBW map is not injective";
    let m = diagonal_module(2, 3)?;
    let alg = *m.ring();
    let rep = pbw_kernel_weight2(&m)?;
    r.check_with("kernel-nonzero", loc, Provenance::Paper, "nonzero", rep.kernel_dim(), rep.kernel_dim() > 0);
    let w: FreeVec<KElement> = FreeVec::from_terms(&alg, [(0, alg.monomial(0b11, 1))]);
    let class = rep.lambda2.class_of(&w);
    r.check("kernel-contains-witness", loc, Provenance::Paper, "yes", yes(rep.kernel.contains(&class)));
    r.check("kernel-equals-koszul-kernel", loc, Provenance::Paper, "yes", yes(rep.kernels_agree()));
    let free = Presentation::free(alg, 3);
    r.check("free-kernel", loc, Provenance::Trivial, 0, pbw_kernel_weight2(&free)?.kernel_dim());
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_unique_and_stable() {
        let ids: Vec<_> = list_scenarios().iter().map(|s| s.id).collect();
        assert!(ids.len() >= 11);
        assert!(ids.contains(&"main-example-tor"));
        assert_eq!(ids.iter().unique().count(), ids.len());
    }

    #[test]
    fn bounds_are_explicit() {
        let e = run_scenario("main-example-tor", Overrides { weight: Some(9), ..Default::default() }).unwrap_err();
        assert!(e.to_string().contains("1..=6"), "{e}");
        assert!(run_scenario("class2-pbw", Overrides { k: Some(2), ..Default::default() }).is_err());
        assert!(run_scenario("no-such", Overrides::default()).is_err());
    }

    #[test]
    fn family_size() {
        assert_eq!(pid_family().len(), 70);
    }
}
