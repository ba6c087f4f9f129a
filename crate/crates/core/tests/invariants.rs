mod common;

use homalg::algebra::SquareZeroAlgebra;
use homalg::exactla::{fp_kernel, invariant_factors, smith_normal_form, FgAbGroup, FpChainComplex, FpMatrix, PresentedAbGroup};
use homalg::lie::{abelian, free_lie_graded, heisenberg, prime_field, reduce_mod2, uea_truncated, LieAlgebra};
use homalg::multilinear::{exterior_power, symmetric_power};
use homalg::presentation::{apply_map, FreeVec, Presentation};
use homalg::ring::{to_presented_group, BaseRing, Integers, RelationSpan};
use homalg::IntMatrix;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn int_matrix(rows: &[Vec<i64>]) -> IntMatrix {
    IntMatrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()).unwrap()
}

fn matrix_strategy() -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1usize..6, 1usize..6).prop_flat_map(|(r, c)| prop::collection::vec(prop::collection::vec(-20i64..20, c), r))
}

fn is_unimodular(m: &IntMatrix) -> bool {
    let d = invariant_factors(m);
    d.len() == m.rows() && d.iter().all(One::is_one)
}

fn binom(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn smith_transforms_are_unimodular(rows in matrix_strategy()) {
        let a = int_matrix(&rows);
        let snf = smith_normal_form(&a);
        let d = snf.left.mul(&a).unwrap().mul(&snf.right).unwrap();
        for i in 0..d.rows() {
            for j in 0..d.cols() {
                let want = if i == j && i < snf.rank() { snf.diagonal[i].clone() } else { BigInt::zero() };
                prop_assert_eq!(d.get(i, j), &want);
            }
        }
        prop_assert!(is_unimodular(&snf.left));
        prop_assert!(is_unimodular(&snf.right));
        for w in snf.diagonal.windows(2) {
            prop_assert!(w[1].is_multiple_of(&w[0]));
        }
    }

    #[test]
    fn canonical_form_is_idempotent(rows in matrix_strategy()) {
        let a = int_matrix(&rows);
        let g = FgAbGroup::from_relation_matrix(a.rows(), &a);
        let orders: Vec<i64> = g.torsion().iter().map(|t| i64::try_from(t).unwrap()).collect();
        prop_assert_eq!(&FgAbGroup::from_cyclic_orders(&orders, g.free_rank()), &g);
        let canon = PresentedAbGroup::new(a.rows(), a).unwrap().canonicalize();
        prop_assert_eq!(canon.group, g);
    }

    #[test]
    fn rank_nullity_f2_100(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        // duplicate some rows so the rank varies
        let rows: Vec<Vec<u32>> = (0..100).map(|_| (0..100).map(|_| rng.gen_range(0..2)).collect()).collect();
        let mut a = FpMatrix::from_rows(2, 100, &rows).unwrap();
        for i in 0..rng.gen_range(0..60) {
            let src = rng.gen_range(0..100);
            a.set_row(i, &a.row(src));
        }
        let k = fp_kernel(&a);
        prop_assert_eq!(a.rank() + k.rows(), 100);
        prop_assert_eq!(k.rank(), k.rows());
        prop_assert!(a.mul(&k.transpose()).unwrap().is_zero());
    }

    #[test]
    fn euler_characteristic_over_fp(seed in any::<u64>(), p in prop::sample::select(vec![2u32, 3, 5])) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let dims = [rng.gen_range(0..7usize), rng.gen_range(1..8), rng.gen_range(0..7)];
        let d1_rows: Vec<Vec<u32>> = (0..dims[0]).map(|_| (0..dims[1]).map(|_| rng.gen_range(0..p)).collect()).collect();
        let d1 = FpMatrix::from_rows(p, dims[1], &d1_rows).unwrap();
        // columns of d2: random combinations of the kernel of d1
        let k = fp_kernel(&d1);
        let mut d2 = FpMatrix::zeros(p, dims[1], dims[2]);
        for j in 0..dims[2] {
            for r in 0..k.rows() {
                let c = rng.gen_range(0..p);
                for i in 0..dims[1] {
                    d2.set(i, j, (d2.get(i, j) + c * k.get(r, i)) % p);
                }
            }
        }
        let c = FpChainComplex::new(p, dims.to_vec(), vec![d1, d2]).unwrap();
        let chi: i64 = c.homology_all().iter().enumerate().map(|(n, &h)| if n % 2 == 0 { h as i64 } else { -(h as i64) }).sum();
        prop_assert_eq!(chi, c.euler_characteristic());
    }

    #[test]
    fn jacobi_on_random_triples(coeffs in prop::collection::vec(prop::collection::vec(-3i64..4, 14), 3)) {
        let l = free_lie_graded(2, 5);
        let z = Integers;
        let v: Vec<FreeVec<BigInt>> = coeffs
            .iter()
            .map(|c| FreeVec::from_terms(&z, c.iter().take(l.gens()).enumerate().map(|(i, &x)| (i, BigInt::from(x)))))
            .collect();
        let (a, b, c) = (&v[0], &v[1], &v[2]);
        let mut s = l.bracket(a, &l.bracket(b, c));
        s.add_scaled(&z, &BigInt::one(), &l.bracket(b, &l.bracket(c, a)));
        s.add_scaled(&z, &BigInt::one(), &l.bracket(c, &l.bracket(a, b)));
        prop_assert!(s.is_zero());
        // antisymmetry
        let mut t = l.bracket(a, b);
        t.add_scaled(&z, &BigInt::one(), &l.bracket(b, a));
        prop_assert!(t.is_zero());
    }

    #[test]
    fn exterior_powers_of_cyclic_sums(orders in prop::collection::vec(2i64..13, 0..4), free in 0usize..3, n in 1usize..4) {
        let z = Integers;
        let rels = orders.iter().enumerate().map(|(i, &o)| FreeVec::from_terms(&z, [(i, BigInt::from(o))])).collect();
        let m = Presentation::new(z, orders.len() + free, rels).unwrap();
        let got = to_presented_group(&exterior_power(&m, n).presentation).group();
        // Λⁿ of a sum of cyclic groups: one summand per n-subset, of order the gcd
        let all: Vec<i64> = orders.iter().copied().chain(std::iter::repeat(0).take(free)).collect();
        let mut summands = Vec::new();
        for s in 0u32..1 << all.len() {
            if s.count_ones() as usize == n {
                summands.push((0..all.len()).filter(|i| s >> i & 1 == 1).fold(0i64, |g, i| g.gcd(&all[i])));
            }
        }
        prop_assert_eq!(got, FgAbGroup::from_cyclic_orders(&summands, 0));
    }

    #[test]
    fn powers_of_free_modules(p in prop::sample::select(vec![2u32, 3]), m in 0u32..3, r in 1usize..5, n in 1usize..4) {
        let alg = SquareZeroAlgebra::new(p, m).unwrap();
        let f = Presentation::free(alg, r);
        let k = 1usize << m;
        let lam = homalg::algebra::KModule::from_presentation(&exterior_power(&f, n).presentation).unwrap();
        let sym = homalg::algebra::KModule::from_presentation(&symmetric_power(&f, n).presentation).unwrap();
        prop_assert_eq!(lam.dim(), binom(r, n) * k);
        prop_assert_eq!(sym.dim(), binom(r + n - 1, n) * k);
    }
}

/// Coefficients up to `t^w_max` of `Π 1/(1 - t^{w_g})`.
fn pbw_series(weights: &[usize], w_max: usize) -> Vec<usize> {
    let mut s = vec![0; w_max + 1];
    s[0] = 1;
    for &w in weights {
        for d in w..=w_max {
            s[d] += s[d - w];
        }
    }
    s
}

fn check_pbw(l: &LieAlgebra<Integers>, w_max: usize) {
    let u = uea_truncated(l, w_max).unwrap();
    let series = pbw_series(l.weights(), w_max);
    for w in 1..=w_max {
        let g = to_presented_group(u.component(w)).group();
        assert!(g.torsion().is_empty(), "weight {w}: {g}");
        assert_eq!(g.free_rank(), series[w], "weight {w}");
    }
}

#[test]
fn pbw_counts() {
    check_pbw(&abelian(&Presentation::free(Integers, 2)), 4);
    check_pbw(&heisenberg(), 4);
    let f = free_lie_graded(2, 4);
    check_pbw(&f, 4);
    // the free Lie algebra's enveloping algebra is the tensor algebra
    assert_eq!(pbw_series(f.weights(), 4), vec![1, 2, 4, 8, 16]);
}

/// `φ[a, b] = φa φb - φb φa` in the truncated enveloping algebra.
fn check_phi_bracket<B: BaseRing>(l: &LieAlgebra<B>, w_max: usize) {
    let ring = l.ring();
    let u = uea_truncated(l, w_max).unwrap();
    let phi_of = |v: &FreeVec<B::Elem>, w: usize| {
        let start = l.component_range(w).start;
        let images = u.phi_images(ring, l, w);
        apply_map(ring, &images, &v.reindex(ring, |g| g.checked_sub(start)))
    };
    for i in 0..l.gens() {
        for j in 0..l.gens() {
            let (wi, wj) = (l.weights()[i], l.weights()[j]);
            if wi + wj > w_max {
                continue;
            }
            let (a, b) = (u.phi(ring, i), u.phi(ring, j));
            let mut d = u.multiply(ring, wi, &a, wj, &b);
            d.add_scaled(ring, &ring.neg(&ring.one()), &u.multiply(ring, wj, &b, wi, &a));
            d.add_scaled(ring, &ring.neg(&ring.one()), &phi_of(&l.bracket_gens(i, j), wi + wj));
            assert!(u.component(wi + wj).span().contains(&d), "generators {i}, {j}");
        }
    }
}

#[test]
fn phi_is_a_lie_map() {
    check_phi_bracket(&heisenberg(), 3);
    check_phi_bracket(&free_lie_graded(2, 4), 4);
    check_phi_bracket(&reduce_mod2(&free_lie_graded(3, 3)).unwrap(), 3);
    let m = homalg::algebra::diagonal_module(2, 3).unwrap();
    check_phi_bracket(&homalg::lie::class2_from_module(&m), 2);
}

#[test]
fn ce_euler_characteristic() {
    use homalg::algebra::realize_complex;
    use homalg::lie::graded_ce_component;
    let l = reduce_mod2(&free_lie_graded(2, 4)).unwrap();
    let m = homalg::algebra::diagonal_module(2, 3).unwrap();
    let c2 = homalg::lie::class2_from_module(&m);
    for (l, w) in [(&l, 2), (&l, 3), (&l, 4), (&c2, 2), (&c2, 3)] {
        let c = realize_complex(graded_ce_component(l, w, 4).unwrap().complex()).unwrap();
        let chi: i64 = c.homology_all().iter().enumerate().map(|(n, &h)| if n % 2 == 0 { h as i64 } else { -(h as i64) }).sum();
        assert_eq!(chi, c.euler_characteristic(), "weight {w}");
    }
}

#[test]
fn abelian_h21_is_gamma2() {
    use homalg::derived::{h21_f2, FpLieAlgebra};
    for d in 1..=4 {
        let l = FpLieAlgebra::from_lie(&abelian(&Presentation::free(prime_field(2), d))).unwrap();
        assert_eq!(h21_f2(&l).unwrap().dim, d * (d + 1) / 2);
    }
}

/// `dim coker φ` from `φ(γ₂(a) ⊗ b) = γ₁[a,b] γ₁a` over every element `a`.
#[test]
fn h21_brute_force() {
    use homalg::derived::{h21_f2, FpLieAlgebra};
    for w in 2..=4 {
        let l = FpLieAlgebra::from_lie(&reduce_mod2(&free_lie_graded(2, w)).unwrap()).unwrap();
        let d = l.dim();
        // Γ² basis: γ₂(b_i) then b_i b_j (i < j), products taken by hand
        let idx = |i: usize, j: usize| if i == j { i } else { d + (0..i).map(|r| d - 1 - r).sum::<usize>() + (j - i - 1) };
        let total = d + d * (d - 1) / 2;
        let mut rows = Vec::new();
        for bits in 1u32..1 << d {
            let a: Vec<u8> = (0..d).map(|i| (bits >> i & 1) as u8).collect();
            for k in 0..d {
                let mut e = vec![0u8; d];
                e[k] = 1;
                let c = l.bracket_vec(&a, &e);
                let mut v = vec![0u32; total];
                for i in 0..d {
                    for j in 0..d {
                        if c[i] == 1 && a[j] == 1 {
                            // γ₁x γ₁y with x = y gives 2γ₂(x) = 0
                            if i != j {
                                let t = idx(i.min(j), i.max(j));
                                v[t] ^= 1;
                            }
                        }
                    }
                }
                rows.push(v);
            }
        }
        let h = h21_f2(&l).unwrap();
        let r = common::rank(2, total, rows);
        assert_eq!(h.dim, total - r, "W = {w}");
        assert!(h.dim >= d);
    }
}

#[test]
fn kspan_membership_matches_modules() {
    let m = homalg::algebra::diagonal_module(2, 3).unwrap();
    let alg = *m.ring();
    let span = m.span();
    // t1 t2 t3 e1 = t2 t3 (t1e1 + t2e2 + t3e3) lies in the relation span
    assert!(span.contains(&FreeVec::from_terms(&alg, [(0, alg.monomial(0b111, 1))])));
    assert!(!span.contains(&FreeVec::from_terms(&alg, [(0, alg.monomial(0b001, 1))])));
}
