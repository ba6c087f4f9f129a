//! Square-zero algebras `F_p[t_1..t_m]/(t_i^2)` and finitely presented modules
//! over them, realized as finite-dimensional `F_p` spaces with action operators.

use std::fmt;

use crate::error::{Error, Result};
use crate::exactla::{check_prime, FpChainComplex, FpMatrix, FpSubspace};
use crate::presentation::{FreeVec, PresentedComplex, Presentation};
use crate::ring::{BaseRing, RelationSpan};

pub const MAX_VARIABLES: u32 = 16;

/// Product of two square-free monomials given as bitmasks.
pub fn monomial_mul(a: u32, b: u32) -> Option<u32> {
    if a & b == 0 {
        Some(a | b)
    } else {
        None
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SquareZeroAlgebra {
    p: u32,
    m: u32,
}

impl SquareZeroAlgebra {
    pub fn new(p: u32, m: u32) -> Result<Self> {
        check_prime(p)?;
        if m > MAX_VARIABLES {
            return Err(Error::Unsupported(format!("at most {MAX_VARIABLES} variables")));
        }
        Ok(SquareZeroAlgebra { p, m })
    }

    /// The prime field itself (no variables).
    pub fn prime_field(p: u32) -> Result<Self> {
        Self::new(p, 0)
    }

    pub fn prime(&self) -> u32 {
        self.p
    }

    pub fn variables(&self) -> u32 {
        self.m
    }

    /// `F_p`-dimension, the number of square-free monomials.
    pub fn dim(&self) -> usize {
        1 << self.m
    }

    pub fn monomial(&self, mask: u32, coeff: i64) -> KElement {
        let mut c = vec![0u8; self.dim()];
        c[mask as usize] = self.reduce(coeff);
        KElement { coeffs: c }
    }

    /// The variable `t_i`, 1-based.
    pub fn var(&self, i: u32) -> KElement {
        assert!(i >= 1 && i <= self.m, "variable index out of range");
        self.monomial(1 << (i - 1), 1)
    }

    fn reduce(&self, c: i64) -> u8 {
        c.rem_euclid(self.p as i64) as u8
    }

    pub fn check_same(&self, other: &Self) -> Result<()> {
        if self != other {
            return Err(Error::BaseMismatch(format!("{} vs {}", self.name(), other.name())));
        }
        Ok(())
    }
}

/// An element of a square-zero algebra: one `F_p` coefficient per monomial.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct KElement {
    coeffs: Vec<u8>,
}

impl KElement {
    pub fn coeff(&self, mask: u32) -> u8 {
        self.coeffs[mask as usize]
    }

    /// Nonzero terms as `(monomial, coefficient)`.
    pub fn terms(&self) -> impl Iterator<Item = (u32, u8)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(m, &c)| (m as u32, c))
    }
}

fn fmt_monomial(mask: u32) -> String {
    if mask == 0 {
        return "1".into();
    }
    (0..32)
        .filter(|b| mask >> b & 1 == 1)
        .map(|b| format!("t{}", b + 1))
        .collect::<Vec<_>>()
        .join("")
}

impl fmt::Display for KElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .terms()
            .map(|(m, c)| match (c, m) {
                (1, _) => fmt_monomial(m),
                (_, 0) => c.to_string(),
                _ => format!("{c}{}", fmt_monomial(m)),
            })
            .collect();
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

impl fmt::Debug for KElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Renders a free-module element as e.g. `t1*e1 + t2*e2` (1-based generators).
pub fn format_free_vec(v: &FreeVec<KElement>) -> String {
    let parts: Vec<String> = v
        .iter()
        .map(|(g, c)| {
            if c.terms().count() == 1 && c.coeff(0) == 1 {
                format!("e{}", g + 1)
            } else if c.terms().count() == 1 {
                format!("{c}*e{}", g + 1)
            } else {
                format!("({c})*e{}", g + 1)
            }
        })
        .collect();
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join(" + ")
    }
}

/// Coordinates in the `F_p` space underlying a free module: generator `g`,
/// monomial `mask` sits at `g * 2^m + mask`.
pub fn ambient_vector(alg: &SquareZeroAlgebra, gens: usize, v: &FreeVec<KElement>) -> Vec<u8> {
    let d = alg.dim();
    let mut out = vec![0u8; gens * d];
    for (g, c) in v.iter() {
        out[g * d..(g + 1) * d].copy_from_slice(&c.coeffs);
    }
    out
}

/// Multiplies an ambient free-module vector by the monomial `mask`.
pub fn shift_ambient(alg: &SquareZeroAlgebra, v: &[u8], mask: u32) -> Vec<u8> {
    let d = alg.dim();
    let mut out = vec![0u8; v.len()];
    for (idx, &c) in v.iter().enumerate() {
        if c == 0 {
            continue;
        }
        let (g, m) = (idx / d, (idx % d) as u32);
        if let Some(n) = monomial_mul(m, mask) {
            out[g * d + n as usize] = c;
        }
    }
    out
}

pub struct KSpan {
    alg: SquareZeroAlgebra,
    gens: usize,
    space: FpSubspace,
}

impl KSpan {
    pub fn space(&self) -> &FpSubspace {
        &self.space
    }
}

impl RelationSpan<KElement> for KSpan {
    fn contains(&self, v: &FreeVec<KElement>) -> bool {
        self.space.contains(&ambient_vector(&self.alg, self.gens, v))
    }
}

/// `F_p`-span of all monomial multiples of the given ambient vectors.
pub fn closure_span(alg: &SquareZeroAlgebra, ambient: usize, vecs: &[Vec<u8>]) -> FpSubspace {
    let mut rows = Vec::with_capacity(vecs.len() * alg.dim());
    for v in vecs {
        for mask in 0..alg.dim() as u32 {
            let s = shift_ambient(alg, v, mask);
            if s.iter().any(|&c| c != 0) {
                rows.push(s);
            }
        }
    }
    FpSubspace::from_vecs(alg.p, ambient, &rows)
}

impl BaseRing for SquareZeroAlgebra {
    type Elem = KElement;
    type Span = KSpan;
    type Homology = usize;

    fn zero(&self) -> KElement {
        KElement {
            coeffs: vec![0; self.dim()],
        }
    }
    fn from_i64(&self, n: i64) -> KElement {
        self.monomial(0, n)
    }
    fn is_zero(&self, a: &KElement) -> bool {
        a.coeffs.iter().all(|&c| c == 0)
    }
    fn add(&self, a: &KElement, b: &KElement) -> KElement {
        let p = self.p as u16;
        KElement {
            coeffs: a
                .coeffs
                .iter()
                .zip(&b.coeffs)
                .map(|(&x, &y)| ((x as u16 + y as u16) % p) as u8)
                .collect(),
        }
    }
    fn mul(&self, a: &KElement, b: &KElement) -> KElement {
        let p = self.p;
        let mut out = vec![0u32; self.dim()];
        for (ma, ca) in a.terms() {
            for (mb, cb) in b.terms() {
                if let Some(m) = monomial_mul(ma, mb) {
                    out[m as usize] = (out[m as usize] + ca as u32 * cb as u32) % p;
                }
            }
        }
        KElement {
            coeffs: out.into_iter().map(|c| c as u8).collect(),
        }
    }
    fn neg(&self, a: &KElement) -> KElement {
        let p = self.p as u8;
        KElement {
            coeffs: a.coeffs.iter().map(|&c| if c == 0 { 0 } else { p - c }).collect(),
        }
    }
    fn name(&self) -> String {
        if self.m == 0 {
            format!("F_{}", self.p)
        } else {
            format!("F_{}[t_1..t_{}]/(t_i^2)", self.p, self.m)
        }
    }

    fn relation_span(&self, p: &Presentation<Self>) -> KSpan {
        let vecs: Vec<Vec<u8>> = p
            .relations()
            .iter()
            .map(|r| ambient_vector(self, p.gens(), r))
            .collect();
        KSpan {
            alg: *self,
            gens: p.gens(),
            space: closure_span(self, p.gens() * self.dim(), &vecs),
        }
    }

    fn homology(&self, c: &PresentedComplex<Self>) -> Result<Vec<usize>> {
        Ok(realize_complex(c)?.homology_all())
    }

    fn homology_is_zero(h: &usize) -> bool {
        *h == 0
    }
}

/// A quotient `A / R` of an `F_p` space, with the non-pivot coordinates of `R`
/// as quotient basis.
#[derive(Clone, Debug)]
pub struct KQuotient {
    relations: FpSubspace,
    basis: Vec<usize>,
}

impl KQuotient {
    pub fn new(relations: FpSubspace) -> Self {
        let basis = relations.complement_indices();
        KQuotient { relations, basis }
    }

    pub fn ambient(&self) -> usize {
        self.relations.ambient()
    }

    pub fn relations(&self) -> &FpSubspace {
        &self.relations
    }

    /// Ambient coordinate of each quotient basis vector.
    pub fn basis(&self) -> &[usize] {
        &self.basis
    }

    pub fn project(&self, v: &[u8]) -> Vec<u8> {
        let r = self.relations.reduce(v);
        self.basis.iter().map(|&c| r[c]).collect()
    }
}

/// A module over a square-zero algebra: an `F_p` space with commuting
/// square-zero operators `T_1..T_m`, stored as a quotient of an ambient space.
#[derive(Clone, Debug)]
pub struct KModule {
    alg: SquareZeroAlgebra,
    actions: Vec<FpMatrix>,
    quotient: KQuotient,
    presentation: Option<Presentation<SquareZeroAlgebra>>,
}

impl KModule {
    /// Quotient of an ambient space with commuting actions by a stable subspace.
    /// `ambient_action(i, c)` is the image of the `c`-th unit vector under `t_{i+1}`.
    pub fn quotient_of(
        alg: SquareZeroAlgebra,
        relations: FpSubspace,
        ambient_action: impl Fn(usize, usize) -> Vec<u8>,
    ) -> Result<Self> {
        let quotient = KQuotient::new(relations);
        let dim = quotient.basis.len();
        let mut actions = Vec::with_capacity(alg.m as usize);
        for i in 0..alg.m as usize {
            let cols: Vec<Vec<u8>> = quotient
                .basis
                .iter()
                .map(|&c| quotient.project(&ambient_action(i, c)))
                .collect();
            actions.push(FpMatrix::from_col_vecs(alg.p, dim, &cols));
        }
        let module = KModule {
            alg,
            actions,
            quotient,
            presentation: None,
        };
        module.check_action()?;
        Ok(module)
    }

    pub fn from_presentation(p: &Presentation<SquareZeroAlgebra>) -> Result<Self> {
        let alg = *p.ring();
        let span = alg.relation_span(p);
        let d = alg.dim();
        let mut module = Self::quotient_of(alg, span.space, |i, c| {
            let mut e = vec![0u8; p.gens() * d];
            e[c] = 1;
            shift_ambient(&alg, &e, 1 << i)
        })?;
        module.presentation = Some(p.clone());
        Ok(module)
    }

    pub fn algebra(&self) -> &SquareZeroAlgebra {
        &self.alg
    }

    pub fn dim(&self) -> usize {
        self.quotient.basis.len()
    }

    pub fn action(&self, i: usize) -> &FpMatrix {
        &self.actions[i]
    }

    pub fn quotient(&self) -> &KQuotient {
        &self.quotient
    }

    pub fn presentation(&self) -> Option<&Presentation<SquareZeroAlgebra>> {
        self.presentation.as_ref()
    }

    /// Generator count of the free cover, for presented modules.
    pub fn gens(&self) -> Option<usize> {
        self.presentation.as_ref().map(Presentation::gens)
    }

    /// Class of a free-module element (presented modules only).
    pub fn class_of(&self, v: &FreeVec<KElement>) -> Vec<u8> {
        let gens = self.gens().expect("class_of needs a presented module");
        self.quotient.project(&ambient_vector(&self.alg, gens, v))
    }

    /// Applies the monomial `mask` to a vector of the module.
    pub fn act(&self, mask: u32, v: &[u8]) -> Vec<u8> {
        let mut out = v.to_vec();
        for i in 0..self.alg.m as usize {
            if mask >> i & 1 == 1 {
                out = self.actions[i].mul_vec(&out);
            }
        }
        out
    }

    /// Asserts that the operators commute pairwise and square to zero.
    pub fn check_action(&self) -> Result<()> {
        for i in 0..self.actions.len() {
            for j in i..self.actions.len() {
                let ij = self.actions[i].mul(&self.actions[j])?;
                let ok = if i == j {
                    ij.is_zero()
                } else {
                    ij == self.actions[j].mul(&self.actions[i])?
                };
                if !ok {
                    return Err(Error::Unsupported(format!(
                        "action operators t{} and t{} violate the square-zero relations",
                        i + 1,
                        j + 1
                    )));
                }
            }
        }
        Ok(())
    }

    /// `F_p` basis of the submodule generated by `elements`.
    pub fn submodule_span(&self, elements: &[Vec<u8>]) -> FpSubspace {
        let mut rows = Vec::new();
        for v in elements {
            for mask in 0..self.alg.dim() as u32 {
                rows.push(self.act(mask, v));
            }
        }
        FpSubspace::from_vecs(self.alg.p, self.dim(), &rows)
    }
}

pub fn free_kmodule(alg: SquareZeroAlgebra, rank: usize) -> KModule {
    KModule::from_presentation(&Presentation::free(alg, rank)).expect("free module")
}

pub fn present_kmodule(alg: SquareZeroAlgebra, rank: usize, relations: Vec<FreeVec<KElement>>) -> Result<KModule> {
    KModule::from_presentation(&Presentation::new(alg, rank, relations)?)
}

/// The relation `t_1 e_1 + ... + t_n e_n` in `k^n`.
pub fn diagonal_relation(alg: &SquareZeroAlgebra, n: usize) -> FreeVec<KElement> {
    FreeVec::from_terms(alg, (0..n).map(|i| (i, alg.var(i as u32 + 1))))
}

/// `M = k^n / <t_1 e_1 + ... + t_n e_n>` over `F_p[t_1..t_n]/(t_i^2)`.
pub fn diagonal_module(p: u32, n: usize) -> Result<Presentation<SquareZeroAlgebra>> {
    let alg = SquareZeroAlgebra::new(p, n as u32)?;
    Presentation::new(alg, n, vec![diagonal_relation(&alg, n)])
}

/// An `F_p`-linear map between modules that commutes with the action.
#[derive(Clone, Debug)]
pub struct KModuleMap {
    matrix: FpMatrix,
}

impl KModuleMap {
    pub fn new(source: &KModule, target: &KModule, matrix: FpMatrix) -> Result<Self> {
        source.alg.check_same(&target.alg)?;
        if matrix.rows() != target.dim() || matrix.cols() != source.dim() {
            return Err(Error::Shape("map matrix does not match module dimensions".into()));
        }
        for i in 0..source.actions.len() {
            if matrix.mul(&source.actions[i])? != target.actions[i].mul(&matrix)? {
                return Err(Error::Unsupported(format!("map does not commute with t{}", i + 1)));
            }
        }
        Ok(KModuleMap { matrix })
    }

    /// The map of presented modules sending generator `g` to `images[g]`.
    pub fn from_images(source: &KModule, target: &KModule, images: &[FreeVec<KElement>]) -> Result<Self> {
        Self::new(source, target, images_matrix(source, target, images)?)
    }

    pub fn matrix(&self) -> &FpMatrix {
        &self.matrix
    }

    pub fn apply(&self, v: &[u8]) -> Vec<u8> {
        self.matrix.mul_vec(v)
    }

    pub fn kernel(&self) -> FpSubspace {
        FpSubspace::from_rows(&crate::exactla::fp_kernel(&self.matrix))
    }
}

fn images_matrix(source: &KModule, target: &KModule, images: &[FreeVec<KElement>]) -> Result<FpMatrix> {
    let (Some(sg), Some(tg)) = (source.gens(), target.gens()) else {
        return Err(Error::Unsupported("generator images need presented modules".into()));
    };
    if images.len() != sg {
        return Err(Error::Shape("one image per generator expected".into()));
    }
    let alg = &source.alg;
    let d = alg.dim();
    let ambient_images: Vec<Vec<u8>> = images.iter().map(|v| ambient_vector(alg, tg, v)).collect();
    let cols: Vec<Vec<u8>> = source
        .quotient
        .basis
        .iter()
        .map(|&c| {
            let (g, mask) = (c / d, (c % d) as u32);
            target.quotient.project(&shift_ambient(alg, &ambient_images[g], mask))
        })
        .collect();
    Ok(FpMatrix::from_col_vecs(alg.p, target.dim(), &cols))
}

/// Realizes a complex of presented modules as a complex of `F_p` spaces.
pub fn realize_complex(c: &PresentedComplex<SquareZeroAlgebra>) -> Result<FpChainComplex> {
    let modules: Vec<KModule> = c.modules().iter().map(KModule::from_presentation).collect::<Result<_>>()?;
    let boundaries = (1..modules.len())
        .map(|n| images_matrix(&modules[n], &modules[n - 1], c.boundary(n)))
        .collect::<Result<Vec<_>>>()?;
    FpChainComplex::new(c.ring().p, modules.iter().map(KModule::dim).collect(), boundaries)
}

/// `M ⊗_k N` as the quotient of `M ⊗_{F_p} N` by `(t x) ⊗ y - x ⊗ (t y)`.
/// The ambient coordinate of `x_a ⊗ y_b` is `a * dim N + b`.
pub fn tensor_k(m: &KModule, n: &KModule) -> Result<KModule> {
    m.alg.check_same(&n.alg)?;
    let p = m.alg.p;
    let (dm, dn) = (m.dim(), n.dim());
    let mut rows = Vec::new();
    for i in 0..m.actions.len() {
        let (tm, tn) = (&m.actions[i], &n.actions[i]);
        for a in 0..dm {
            let ta = tm.col(a);
            for b in 0..dn {
                let tb = tn.col(b);
                let mut v = vec![0u8; dm * dn];
                for (a2, &c) in ta.iter().enumerate() {
                    if c != 0 {
                        v[a2 * dn + b] = c;
                    }
                }
                for (b2, &c) in tb.iter().enumerate() {
                    if c != 0 {
                        let idx = a * dn + b2;
                        v[idx] = ((v[idx] as u32 + p - c as u32) % p) as u8;
                    }
                }
                if v.iter().any(|&x| x != 0) {
                    rows.push(v);
                }
            }
        }
    }
    let relations = FpSubspace::from_vecs(p, dm * dn, &rows);
    KModule::quotient_of(m.alg, relations, |i, c| {
        let (a, b) = (c / dn, c % dn);
        let mut v = vec![0u8; dm * dn];
        for (a2, &x) in m.actions[i].col(a).iter().enumerate() {
            v[a2 * dn + b] = x;
        }
        v
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn monomials() {
        assert_eq!(monomial_mul(0b001, 0b010), Some(0b011));
        assert_eq!(monomial_mul(0b001, 0b001), None);
        assert_eq!(monomial_mul(0, 0b100), Some(0b100));
    }

    #[test]
    fn free_dimensions() {
        let a = SquareZeroAlgebra::new(2, 3).unwrap();
        assert_eq!(free_kmodule(a, 1).dim(), 8);
        assert_eq!(free_kmodule(a, 3).dim(), 24);
        let b = SquareZeroAlgebra::new(3, 4).unwrap();
        assert_eq!(free_kmodule(b, 4).dim(), 64);
    }

    #[test]
    fn algebra_multiplication() {
        let a = SquareZeroAlgebra::new(3, 2).unwrap();
        let x = a.add(&a.var(1), &a.from_i64(2));
        let sq = a.mul(&x, &x);
        // (t1 + 2)^2 = 4 + 4 t1 = 1 + t1 mod 3
        assert_eq!(sq, a.add(&a.from_i64(1), &a.var(1)));
        assert!(a.is_zero(&a.mul(&a.var(2), &a.var(2))));
    }

    #[test]
    fn rejects_bad_parameters() {
        assert!(SquareZeroAlgebra::new(4, 1).is_err());
        assert!(SquareZeroAlgebra::new(2, 17).is_err());
    }

    #[test]
    fn unit_law_for_tensor() {
        let a = SquareZeroAlgebra::new(2, 3).unwrap();
        let m = KModule::from_presentation(&diagonal_module(2, 3).unwrap()).unwrap();
        let k = free_kmodule(a, 1);
        assert_eq!(tensor_k(&k, &k).unwrap().dim(), 8);
        assert_eq!(tensor_k(&m, &k).unwrap().dim(), m.dim());
    }

    #[test]
    fn map_commutes_with_action() {
        let a = SquareZeroAlgebra::new(2, 2).unwrap();
        let f = free_kmodule(a, 1);
        let t1 = FreeVec::from_terms(&a, [(0, a.var(1))]);
        assert!(KModuleMap::from_images(&f, &f, &[t1]).is_ok());
        // a non-linear map: swap the monomials 1 and t2
        let mut m = FpMatrix::identity(2, 4);
        m.set(0, 0, 0);
        m.set(2, 2, 0);
        m.set(0, 2, 1);
        m.set(2, 0, 1);
        assert!(KModuleMap::new(&f, &f, m).is_err());
    }
}
