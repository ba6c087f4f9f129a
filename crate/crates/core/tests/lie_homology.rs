use homalg::algebra::diagonal_module;
use homalg::derived::{h21_f2, h3s_from_sequence, omega_f2, phi_map, FpLieAlgebra, H3sReport};
use homalg::exactla::FgAbGroup;
use homalg::homology::main_example::expected_homology;
use homalg::homology::{ce_homology, graded_ce_homology, h2_agreement, hopf_h2, main_example_resolution, LiePresentation};
use homalg::lie::{
    class2_from_module, fprime_of_module, free_lie_graded, graded_ce_component, heisenberg, pbw_kernel_weight2,
    reduce_mod2, FreeLie,
};
use homalg::multilinear::lambda_to_tensor_map;
use homalg::Error;

/// On the weight-3 part of `M ⊕ Λ²M`, CE `∂₃: Λ³M → M ⊗ Λ²M` is the Koszul map
/// `a∧b∧c ↦ a⊗(b∧c) - b⊗(a∧c) + c⊗(a∧b)` on the nose.
#[test]
fn ce_d3_is_the_koszul_map() {
    for (p, n) in [(2, 3), (3, 3), (3, 4)] {
        let m = diagonal_module(p, n).unwrap();
        let g = m.gens();
        let ring = *m.ring();
        let l = class2_from_module(&m);
        let ce = graded_ce_component(&l, 3, 3).unwrap();
        let kos = lambda_to_tensor_map(&m, 3);
        let lg = kos.lower.basis.len();
        let lower = ce.basis(2);
        for (i, t) in ce.basis(3).tuples().iter().enumerate() {
            let image = ce.complex().boundary(3)[i].reindex(&ring, |j| {
                let s = lower.tuple(j);
                Some(s[0] * lg + (s[1] - g))
            });
            let k = kos.source.basis.index_of(t).unwrap();
            assert_eq!(image, kos.images[k], "p={p} tuple {t:?}");
        }
    }
}

#[test]
fn heisenberg_ce_homology() {
    let l = heisenberg();
    let h: Vec<String> = (0..4).map(|n| ce_homology(&l, n).unwrap().to_string()).collect();
    assert_eq!(h, ["Z", "Z^2", "Z^2", "Z"]);
    // ∂(x∧y) = -z
    let ce = homalg::lie::ce_complex(&l, 2, None).unwrap();
    let xy = ce.basis(2).index_of(&[0, 1]).unwrap();
    let z = ce.basis(1).index_of(&[2]).unwrap();
    let d = &ce.complex().boundary(2)[xy];
    assert_eq!(d.len(), 1);
    assert_eq!(d.get(z).unwrap(), &num_bigint::BigInt::from(-1));
}

#[test]
fn hopf_formula_family() {
    let h = LiePresentation::heisenberg(4);
    let r = LiePresentation::heisenberg_redundant(4);
    for w in 1..=4 {
        assert_eq!(hopf_h2(&h, w).unwrap().group, hopf_h2(&r, w).unwrap().group, "weight {w}");
    }
    // Heisenberg in weight 3: the whole weight-3 part of the free Lie algebra
    let rank3 = FreeLie::new(2, 3).rank(3);
    assert_eq!(hopf_h2(&h, 3).unwrap().group, FgAbGroup::free(rank3));
    for p in [h, r, LiePresentation::free_algebra(2, 4), LiePresentation::abelian2(4)] {
        assert!(h2_agreement(&p).unwrap().iter().all(|c| c.agree()));
    }
    assert!(LiePresentation::parse(2, &["x + [x,y]"], 3).is_err());
    assert!(hopf_h2(&LiePresentation::abelian2(3), 5).is_err());
}

#[test]
fn main_example_tor() {
    let ex = main_example_resolution(4, 7).unwrap();
    for n in 0..=7 {
        assert_eq!(ex.homology[n], expected_homology(n), "H{n}");
    }
    assert_eq!(expected_homology(3).to_string(), "(Z/2)^4");
    assert!(matches!(main_example_resolution(2, 4), Err(Error::Unsupported(_))));
}

#[test]
fn free_f2_higher_homology_vanishes() {
    let l = reduce_mod2(&free_lie_graded(2, 4)).unwrap();
    for w in 1..=4 {
        assert_eq!(graded_ce_homology(&l, 2, w).unwrap(), 0);
        assert_eq!(graded_ce_homology(&l, 3, w).unwrap(), 0);
    }
    assert_eq!(graded_ce_homology(&l, 1, 1).unwrap(), 2);
}

#[test]
fn fprime_and_pbw() {
    let m = diagonal_module(2, 3).unwrap();
    let l = fprime_of_module(&m, 3).unwrap();
    assert_eq!(graded_ce_homology(&l, 2, 2).unwrap(), 1);
    assert!(fprime_of_module(&m, 4).is_err());
    let pbw = pbw_kernel_weight2(&m).unwrap();
    assert_eq!(pbw.kernel_dim(), 1);
    assert!(pbw.kernels_agree());
    let free = homalg::presentation::Presentation::free(*m.ring(), 3);
    assert_eq!(pbw_kernel_weight2(&free).unwrap().kernel_dim(), 0);
}

#[test]
fn class2_third_homology_p3() {
    let m = diagonal_module(3, 4).unwrap();
    assert_eq!(graded_ce_homology(&class2_from_module(&m), 3, 3).unwrap(), 1);
}

#[test]
fn derived_functor_pieces() {
    let l = FpLieAlgebra::from_lie(&reduce_mod2(&free_lie_graded(2, 4)).unwrap()).unwrap();
    assert_eq!(l.weights(), &[1, 1, 2, 3, 3, 4, 4, 4]);
    let phi = phi_map(&l).unwrap();
    assert!(phi.epsilon_phi_vanishes());
    assert!(phi.inhomogeneous_generators().is_empty());
    let h = h21_f2(&l).unwrap();
    assert_eq!(h.epsilon_bar_rank, l.dim());
    assert_eq!(h.per_weight, vec![(1, 0), (2, 3), (3, 0), (4, 1)]);
    assert!(FpLieAlgebra::from_integral_exponent2(&heisenberg()).is_err());
    let l3 = FpLieAlgebra::from_lie(&class2_from_module(&diagonal_module(3, 2).unwrap())).unwrap();
    assert!(omega_f2(&l3).is_err());
    assert_eq!(h3s_from_sequence(0, 9, 0), H3sReport::Isomorphic { dim: 9 });
    assert_eq!(h3s_from_sequence(2, 9, 0), H3sReport::QuotientOf { upper_bound: 9 });
    assert_eq!(h3s_from_sequence(0, 9, 1), H3sReport::SurjectsOnto { lower_bound: 1 });
}
