use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::smith::{invariant_factors, smith_normal_form, SmithDecomposition};
use crate::error::{Error, Result};
use crate::IntMatrix;

/// A finitely generated abelian group in invariant-factor form
/// `Z^free_rank ⊕ Z/d_1 ⊕ ... ⊕ Z/d_k`, `d_i ≥ 2`, `d_i | d_{i+1}`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct FgAbGroup {
    torsion: Vec<BigInt>,
    free_rank: usize,
}

impl FgAbGroup {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn free(rank: usize) -> Self {
        FgAbGroup {
            torsion: Vec::new(),
            free_rank: rank,
        }
    }

    /// Canonical form of `Z^free_rank ⊕ ⊕ Z/orders[i]`; orders may be arbitrary
    /// (0 means a copy of Z, 1 a trivial summand).
    pub fn from_cyclic_orders(orders: &[i64], free_rank: usize) -> Self {
        let n = orders.len();
        let mut rel = IntMatrix::zeros(n, n);
        for (i, &o) in orders.iter().enumerate() {
            rel.set(i, i, BigInt::from(o));
        }
        let mut g = Self::from_relation_matrix(n, &rel);
        g.free_rank += free_rank;
        g
    }

    /// Cokernel of `rel : Z^k -> Z^gens`.
    pub fn from_relation_matrix(gens: usize, rel: &IntMatrix) -> Self {
        assert_eq!(rel.rows(), gens, "relation matrix rows");
        let diag = invariant_factors(rel);
        Self::from_diagonal(gens, &diag)
    }

    fn from_diagonal(gens: usize, diag: &[BigInt]) -> Self {
        FgAbGroup {
            torsion: diag.iter().filter(|d| !d.is_one()).cloned().collect(),
            free_rank: gens - diag.len(),
        }
    }

    pub fn torsion(&self) -> &[BigInt] {
        &self.torsion
    }

    pub fn free_rank(&self) -> usize {
        self.free_rank
    }

    pub fn is_zero(&self) -> bool {
        self.torsion.is_empty() && self.free_rank == 0
    }

    /// `(Z/p)^k` for some k (including k = 0).
    pub fn is_elementary(&self, p: u32) -> bool {
        self.free_rank == 0 && self.torsion.iter().all(|d| *d == BigInt::from(p))
    }

    pub fn direct_sum(&self, other: &FgAbGroup) -> FgAbGroup {
        let orders: Vec<BigInt> = self.torsion.iter().chain(&other.torsion).cloned().collect();
        let n = orders.len();
        let mut rel = IntMatrix::zeros(n, n);
        for (i, o) in orders.into_iter().enumerate() {
            rel.set(i, i, o);
        }
        let mut g = Self::from_relation_matrix(n, &rel);
        g.free_rank = self.free_rank + other.free_rank;
        g
    }

    /// `self ⊗ Z/q`.
    pub fn tensor_cyclic(&self, q: &BigInt) -> FgAbGroup {
        let mut orders: Vec<BigInt> = self.torsion.iter().map(|d| num_integer::Integer::gcd(d, q)).collect();
        orders.extend(std::iter::repeat(q.abs()).take(self.free_rank));
        let n = orders.len();
        let mut rel = IntMatrix::zeros(n, n);
        for (i, o) in orders.into_iter().enumerate() {
            rel.set(i, i, o);
        }
        Self::from_relation_matrix(n, &rel)
    }

    pub fn order(&self) -> Option<BigInt> {
        if self.free_rank > 0 {
            return None;
        }
        Some(self.torsion.iter().fold(BigInt::one(), |acc, d| acc * d))
    }
}

impl fmt::Display for FgAbGroup {
    /// `Z^2 + (Z/2)^3 + Z/4`; the trivial group prints as `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        let mut i = 0;
        while i < self.torsion.len() {
            let d = &self.torsion[i];
            let run = self.torsion[i..].iter().take_while(|x| *x == d).count();
            parts.push(if run == 1 {
                format!("Z/{d}")
            } else {
                format!("(Z/{d})^{run}")
            });
            i += run;
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

impl fmt::Debug for FgAbGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FgAbGroup({self})")
    }
}

/// `Z^generators / (column span of relations)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PresentedAbGroup {
    generators: usize,
    relations: IntMatrix,
}

/// Canonical form together with the change of generators that realizes it:
/// coordinates `left * x` of a generator-level vector `x` reduce, entry by
/// entry, modulo the diagonal.
#[derive(Clone, Debug)]
pub struct Canonicalization {
    pub group: FgAbGroup,
    pub smith: SmithDecomposition<BigInt>,
}

impl PresentedAbGroup {
    pub fn new(generators: usize, relations: IntMatrix) -> Result<Self> {
        if relations.rows() != generators {
            return Err(Error::Shape(format!(
                "relation matrix has {} rows for {generators} generators",
                relations.rows()
            )));
        }
        Ok(PresentedAbGroup {
            generators,
            relations,
        })
    }

    pub fn free(generators: usize) -> Self {
        PresentedAbGroup {
            generators,
            relations: IntMatrix::zeros(generators, 0),
        }
    }

    /// Generators `e_i` with relations `orders[i] * e_i` (0 means free).
    pub fn cyclic_sum(orders: &[i64]) -> Self {
        let cols: Vec<Vec<BigInt>> = orders
            .iter()
            .enumerate()
            .filter(|(_, &o)| o != 0)
            .map(|(i, &o)| {
                let mut c = vec![BigInt::zero(); orders.len()];
                c[i] = BigInt::from(o);
                c
            })
            .collect();
        PresentedAbGroup {
            generators: orders.len(),
            relations: IntMatrix::from_cols(orders.len(), &cols).expect("shape"),
        }
    }

    pub fn generators(&self) -> usize {
        self.generators
    }

    pub fn relations(&self) -> &IntMatrix {
        &self.relations
    }

    pub fn canonicalize(&self) -> Canonicalization {
        let smith = smith_normal_form(&self.relations);
        Canonicalization {
            group: FgAbGroup::from_diagonal(self.generators, &smith.diagonal),
            smith,
        }
    }

    pub fn group(&self) -> FgAbGroup {
        FgAbGroup::from_relation_matrix(self.generators, &self.relations)
    }

    /// Adds relations `q * e_i` for every generator: the presentation of `self ⊗ Z/q`.
    pub fn tensor_cyclic(&self, q: i64) -> Self {
        let n = self.generators;
        let mut extra = IntMatrix::zeros(n, n);
        for i in 0..n {
            extra.set(i, i, BigInt::from(q));
        }
        PresentedAbGroup {
            generators: n,
            relations: self.relations.hcat(&extra).expect("rows agree"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_forms() {
        assert_eq!(FgAbGroup::from_cyclic_orders(&[2, 3], 0).to_string(), "Z/6");
        assert_eq!(FgAbGroup::from_cyclic_orders(&[2, 2, 4], 1).to_string(), "Z + (Z/2)^2 + Z/4");
        assert_eq!(FgAbGroup::from_cyclic_orders(&[1, 0], 0).to_string(), "Z");
        assert_eq!(FgAbGroup::zero().to_string(), "0");
    }

    #[test]
    fn canonicalization_is_idempotent() {
        let g = FgAbGroup::from_cyclic_orders(&[4, 6, 0, 9], 2);
        let orders: Vec<i64> = g.torsion().iter().map(|d| i64::try_from(d).unwrap()).collect();
        assert_eq!(FgAbGroup::from_cyclic_orders(&orders, g.free_rank()), g);
    }

    #[test]
    fn tensor_with_cyclic() {
        let g = FgAbGroup::from_cyclic_orders(&[4, 3], 1);
        assert_eq!(g.tensor_cyclic(&BigInt::from(2)).to_string(), "(Z/2)^2");
        let p = PresentedAbGroup::cyclic_sum(&[4, 3, 0]).tensor_cyclic(2);
        assert_eq!(p.group(), g.tensor_cyclic(&BigInt::from(2)));
    }

    #[test]
    fn presented_group_rejects_bad_shape() {
        assert!(PresentedAbGroup::new(2, IntMatrix::zeros(3, 1)).is_err());
    }
}
