//! Coefficient rings for presented modules.
//!
//! Multilinear constructions (tensor, exterior and symmetric powers, Koszul and
//! Chevalley–Eilenberg complexes) are written once over [`BaseRing`] and
//! realized either over Z (Smith normal form) or over a square-zero algebra
//! (finite F_p linear algebra).

use std::fmt::{Debug, Display};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::Result;
use crate::exactla::{AbChainComplex, FgAbGroup, Lattice, PresentedAbGroup};
use crate::presentation::{FreeVec, PresentedComplex, Presentation};
use crate::IntMatrix;

/// Membership test for the submodule spanned by a presentation's relations.
pub trait RelationSpan<E> {
    fn contains(&self, v: &FreeVec<E>) -> bool;
}

pub trait BaseRing: Clone + Debug + PartialEq + Send + Sync {
    type Elem: Clone + Debug + PartialEq + Send + Sync;
    type Span: RelationSpan<Self::Elem>;
    type Homology: Clone + Debug + PartialEq + Display;

    fn zero(&self) -> Self::Elem;
    fn from_i64(&self, n: i64) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn name(&self) -> String;

    fn one(&self) -> Self::Elem {
        self.from_i64(1)
    }

    fn relation_span(&self, p: &Presentation<Self>) -> Self::Span;

    /// Homology at every position of a validated complex.
    fn homology(&self, c: &PresentedComplex<Self>) -> Result<Vec<Self::Homology>>;

    fn homology_is_zero(h: &Self::Homology) -> bool;
}

/// The integers.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Integers;

pub struct IntegerSpan {
    lattice: Lattice,
    gens: usize,
}

impl RelationSpan<BigInt> for IntegerSpan {
    fn contains(&self, v: &FreeVec<BigInt>) -> bool {
        self.lattice.contains(&v.to_dense(self.gens, BigInt::zero()))
    }
}

impl BaseRing for Integers {
    type Elem = BigInt;
    type Span = IntegerSpan;
    type Homology = FgAbGroup;

    fn zero(&self) -> BigInt {
        BigInt::zero()
    }
    fn from_i64(&self, n: i64) -> BigInt {
        BigInt::from(n)
    }
    fn is_zero(&self, a: &BigInt) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a + b
    }
    fn mul(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a * b
    }
    fn neg(&self, a: &BigInt) -> BigInt {
        -a
    }
    fn one(&self) -> BigInt {
        BigInt::one()
    }
    fn name(&self) -> String {
        "Z".into()
    }

    fn relation_span(&self, p: &Presentation<Self>) -> IntegerSpan {
        IntegerSpan {
            lattice: Lattice::new(&relation_matrix(p)),
            gens: p.gens(),
        }
    }

    fn homology(&self, c: &PresentedComplex<Self>) -> Result<Vec<FgAbGroup>> {
        to_ab_complex(c)?.homology_all()
    }

    fn homology_is_zero(h: &FgAbGroup) -> bool {
        h.is_zero()
    }
}

/// Relations of an integral presentation as the columns of a matrix.
pub fn relation_matrix(p: &Presentation<Integers>) -> IntMatrix {
    let cols: Vec<Vec<BigInt>> = p
        .relations()
        .iter()
        .map(|r| r.to_dense(p.gens(), BigInt::zero()))
        .collect();
    IntMatrix::from_cols(p.gens(), &cols).expect("relation length")
}

pub fn to_presented_group(p: &Presentation<Integers>) -> PresentedAbGroup {
    PresentedAbGroup::new(p.gens(), relation_matrix(p)).expect("shape")
}

/// Generator-level matrix of a map given by images of generators.
pub fn image_matrix(rows: usize, images: &[FreeVec<BigInt>]) -> IntMatrix {
    let cols: Vec<Vec<BigInt>> = images.iter().map(|v| v.to_dense(rows, BigInt::zero())).collect();
    IntMatrix::from_cols(rows, &cols).expect("image length")
}

pub fn to_ab_complex(c: &PresentedComplex<Integers>) -> Result<AbChainComplex> {
    let groups: Vec<PresentedAbGroup> = c.modules().iter().map(to_presented_group).collect();
    let boundaries = (1..c.len())
        .map(|n| image_matrix(c.module(n - 1).gens(), c.boundary(n)))
        .collect();
    AbChainComplex::new(groups, boundaries)
}
