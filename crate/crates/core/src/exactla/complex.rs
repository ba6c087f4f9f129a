use super::abgroup::{FgAbGroup, PresentedAbGroup};
use super::smith::{integer_kernel, lattice_quotient, Lattice};
use crate::error::{Error, Result};
use crate::IntMatrix;

/// A bounded complex `C_top -> ... -> C_1 -> C_0` of presented abelian groups.
///
/// `boundary(n)` is the generator-level matrix of `C_n -> C_{n-1}`, of shape
/// `gens(C_{n-1}) x gens(C_n)`; `boundary(0)` is the zero map to 0.
#[derive(Clone, Debug)]
pub struct AbChainComplex {
    groups: Vec<PresentedAbGroup>,
    boundaries: Vec<IntMatrix>,
}

impl AbChainComplex {
    /// Validates that each boundary respects relations and that consecutive
    /// boundaries compose to zero modulo relations.
    pub fn new(groups: Vec<PresentedAbGroup>, mut boundaries: Vec<IntMatrix>) -> Result<Self> {
        if boundaries.len() + 1 == groups.len() {
            let g0 = groups.first().map_or(0, PresentedAbGroup::generators);
            boundaries.insert(0, IntMatrix::zeros(0, g0));
        }
        if boundaries.len() != groups.len() {
            return Err(Error::Shape("one boundary per position expected".into()));
        }
        for (n, d) in boundaries.iter().enumerate().skip(1) {
            if d.rows() != groups[n - 1].generators() || d.cols() != groups[n].generators() {
                return Err(Error::Shape(format!("boundary {n} has wrong shape")));
            }
        }
        let lattices: Vec<Lattice> = groups.iter().map(|g| Lattice::new(g.relations())).collect();
        for n in 1..groups.len() {
            let image = boundaries[n].mul(groups[n].relations())?;
            if !(0..image.cols()).all(|j| lattices[n - 1].contains(&image.col(j))) {
                return Err(Error::IllDefinedMap { position: n });
            }
            if n >= 2 {
                let comp = boundaries[n - 1].mul(&boundaries[n])?;
                if !(0..comp.cols()).all(|j| lattices[n - 2].contains(&comp.col(j))) {
                    return Err(Error::NotAComplex { position: n });
                }
            }
        }
        Ok(AbChainComplex { groups, boundaries })
    }

    /// A complex of free groups `Z^{ranks[n]}`.
    pub fn free(boundaries: Vec<IntMatrix>) -> Result<Self> {
        let mut ranks: Vec<usize> = boundaries.iter().map(IntMatrix::cols).collect();
        if let Some(first) = boundaries.first() {
            ranks.insert(0, first.rows());
        }
        let groups = ranks.into_iter().map(PresentedAbGroup::free).collect();
        Self::new(groups, boundaries)
    }

    pub fn len(&self) -> usize {
        self.groups.len()
    }

    pub fn is_empty(&self) -> bool {
        self.groups.is_empty()
    }

    pub fn group(&self, n: usize) -> &PresentedAbGroup {
        &self.groups[n]
    }

    pub fn boundary(&self, n: usize) -> &IntMatrix {
        &self.boundaries[n]
    }

    /// `ker ∂_n / im ∂_{n+1}` in canonical form; zero outside the stored range.
    pub fn homology(&self, n: usize) -> Result<FgAbGroup> {
        if n >= self.groups.len() {
            return Ok(FgAbGroup::zero());
        }
        let gens = self.groups[n].generators();
        if gens == 0 {
            return Ok(FgAbGroup::zero());
        }
        // cycles: x with ∂x in the relation lattice of C_{n-1}
        let cycles = if n >= 1 && self.groups[n - 1].generators() > 0 {
            let stacked = self.boundaries[n].hcat(self.groups[n - 1].relations())?;
            integer_kernel(&stacked).row_block(0, gens)
        } else {
            IntMatrix::identity(gens)
        };
        let mut bounds = self.groups[n].relations().clone();
        if n + 1 < self.groups.len() {
            bounds = self.boundaries[n + 1].hcat(&bounds)?;
        }
        lattice_quotient(&cycles, &bounds)
    }

    pub fn homology_all(&self) -> Result<Vec<FgAbGroup>> {
        (0..self.groups.len()).map(|n| self.homology(n)).collect()
    }

    /// Tensor with `Z/q`: append `q e_i` to every relation set.
    pub fn tensor_cyclic(&self, q: i64) -> Result<Self> {
        let groups = self.groups.iter().map(|g| g.tensor_cyclic(q)).collect();
        Self::new(groups, self.boundaries.clone())
    }
}

/// `H_n` of `C ⊗ N` for a finitely generated `N`, as a direct sum over the
/// cyclic summands of `N`.
pub fn homology_with_coefficients(c: &AbChainComplex, n: usize, probe: &FgAbGroup) -> Result<FgAbGroup> {
    let mut out = FgAbGroup::zero();
    for d in probe.torsion() {
        let q = i64::try_from(d).map_err(|_| Error::Overflow)?;
        out = out.direct_sum(&c.tensor_cyclic(q)?.homology(n)?);
    }
    let free = c.homology(n)?;
    for _ in 0..probe.free_rank() {
        out = out.direct_sum(&free);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> IntMatrix {
        IntMatrix::from_i64_rows(rows).unwrap()
    }

    #[test]
    fn multiplication_by_two() {
        let c = AbChainComplex::free(vec![m(&[&[2]])]).unwrap();
        assert_eq!(c.homology(0).unwrap().to_string(), "Z/2");
        assert_eq!(c.homology(1).unwrap().to_string(), "0");
    }

    #[test]
    fn non_complex_is_rejected() {
        let err = AbChainComplex::free(vec![m(&[&[1]]), m(&[&[1]])]).unwrap_err();
        assert_eq!(err, Error::NotAComplex { position: 2 });
    }

    #[test]
    fn ill_defined_boundary_is_rejected() {
        // Z/2 -> Z by identity is not well defined
        let groups = vec![PresentedAbGroup::free(1), PresentedAbGroup::cyclic_sum(&[2])];
        let err = AbChainComplex::new(groups, vec![m(&[&[1]])]).unwrap_err();
        assert_eq!(err, Error::IllDefinedMap { position: 1 });
    }

    #[test]
    fn presented_groups() {
        // Z -> Z/4 (surjection), homology: ker = 4Z ~ Z at 1, 0 at 0
        let groups = vec![PresentedAbGroup::cyclic_sum(&[4]), PresentedAbGroup::free(1)];
        let c = AbChainComplex::new(groups, vec![m(&[&[1]])]).unwrap();
        assert_eq!(c.homology(1).unwrap().to_string(), "Z");
        assert_eq!(c.homology(0).unwrap().to_string(), "0");
        // Z/4 -(2)-> Z/4: ker = {0,2}, im = {0,2}
        let groups = vec![PresentedAbGroup::cyclic_sum(&[4]), PresentedAbGroup::cyclic_sum(&[4])];
        let c = AbChainComplex::new(groups, vec![m(&[&[2]])]).unwrap();
        assert_eq!(c.homology(1).unwrap().to_string(), "Z/2");
        assert_eq!(c.homology(0).unwrap().to_string(), "Z/2");
    }

    #[test]
    fn coefficients() {
        let c = AbChainComplex::free(vec![m(&[&[2]])]).unwrap();
        let probe = FgAbGroup::from_cyclic_orders(&[2], 0);
        assert_eq!(homology_with_coefficients(&c, 1, &probe).unwrap().to_string(), "Z/2");
        let probe = FgAbGroup::from_cyclic_orders(&[3], 1);
        assert_eq!(homology_with_coefficients(&c, 0, &probe).unwrap().to_string(), "Z/2");
    }
}
