//! Smith normal form and the lattice routines built on it.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::abgroup::FgAbGroup;
use super::matrix::Matrix;
use crate::error::{Error, Result};
use crate::scalar::IntScalar;
use crate::IntMatrix;

/// `left * A * right = diag(diagonal, 0, ...)` with unimodular `left`, `right`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithDecomposition<T> {
    /// Nonzero invariant factors, each dividing the next.
    pub diagonal: Vec<T>,
    pub left: Matrix<T>,
    pub right: Matrix<T>,
}

impl<T: IntScalar> SmithDecomposition<T> {
    pub fn compute(a: &Matrix<T>) -> Result<Self> {
        let mut work = a.clone();
        let mut left = Matrix::identity(a.rows());
        let mut right = Matrix::identity(a.cols());
        let rank = reduce(&mut work, Some(&mut left), Some(&mut right))?;
        Ok(SmithDecomposition {
            diagonal: (0..rank).map(|i| work.get(i, i).clone()).collect(),
            left,
            right,
        })
    }

    pub fn rank(&self) -> usize {
        self.diagonal.len()
    }

    pub fn to_big(&self) -> SmithDecomposition<BigInt> {
        SmithDecomposition {
            diagonal: self.diagonal.iter().map(IntScalar::to_bigint).collect(),
            left: self.left.to_big(),
            right: self.right.to_big(),
        }
    }
}

/// Smith normal form over Z; runs in `i64` and falls back to `BigInt` on overflow.
pub fn smith_normal_form(a: &IntMatrix) -> SmithDecomposition<BigInt> {
    if let Some(small) = a.convert::<i64>() {
        if let Ok(snf) = SmithDecomposition::compute(&small) {
            return snf.to_big();
        }
    }
    SmithDecomposition::compute(a).expect("BigInt arithmetic cannot overflow")
}

/// Invariant factors only (no transforms), with the same fast path.
pub fn invariant_factors(a: &IntMatrix) -> Vec<BigInt> {
    if let Some(mut small) = a.convert::<i64>() {
        if let Ok(rank) = reduce::<i64>(&mut small, None, None) {
            return (0..rank).map(|i| BigInt::from(*small.get(i, i))).collect();
        }
    }
    let mut work = a.clone();
    let rank = reduce(&mut work, None, None).expect("BigInt arithmetic cannot overflow");
    (0..rank).map(|i| work.get(i, i).clone()).collect()
}

/// Diagonalizes `a` in place, returning the rank. Each pivot is the entry of
/// smallest absolute value in the remaining block (first in row-major order
/// among ties), which keeps entry growth down.
fn reduce<T: IntScalar>(
    a: &mut Matrix<T>,
    mut left: Option<&mut Matrix<T>>,
    mut right: Option<&mut Matrix<T>>,
) -> Result<usize> {
    let (rows, cols) = (a.rows(), a.cols());
    let mut t = 0;
    while t < rows.min(cols) {
        let Some((pi, pj)) = smallest_nonzero(a, t) else {
            break;
        };
        row_swap(a, left.as_deref_mut(), t, pi);
        col_swap(a, right.as_deref_mut(), t, pj);
        loop {
            for i in t + 1..rows {
                while !a.get(i, t).is_zero() {
                    let q = a.get(i, t).clone() / a.get(t, t).clone();
                    row_axpy(a, left.as_deref_mut(), i, t, &q.neg_checked()?)?;
                    if !a.get(i, t).is_zero() {
                        row_swap(a, left.as_deref_mut(), t, i);
                    }
                }
            }
            for j in t + 1..cols {
                while !a.get(t, j).is_zero() {
                    let q = a.get(t, j).clone() / a.get(t, t).clone();
                    col_axpy(a, right.as_deref_mut(), j, t, &q.neg_checked()?)?;
                    if !a.get(t, j).is_zero() {
                        col_swap(a, right.as_deref_mut(), t, j);
                    }
                }
            }
            if (t + 1..rows).any(|i| !a.get(i, t).is_zero()) {
                continue;
            }
            let pivot = a.get(t, t).clone();
            let offender = (t + 1..rows).find(|&i| {
                (t + 1..cols).any(|j| !(a.get(i, j).clone() % pivot.clone()).is_zero())
            });
            match offender {
                Some(i) => row_axpy(a, left.as_deref_mut(), t, i, &T::one())?,
                None => break,
            }
        }
        if a.get(t, t).is_negative() {
            a.negate_row(t)?;
            if let Some(l) = left.as_deref_mut() {
                l.negate_row(t)?;
            }
        }
        t += 1;
    }
    Ok(t)
}

fn smallest_nonzero<T: IntScalar>(a: &Matrix<T>, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize, T)> = None;
    for i in t..a.rows() {
        for j in t..a.cols() {
            let x = a.get(i, j);
            if x.is_zero() {
                continue;
            }
            // i64::MIN has no absolute value; it then simply sorts first
            let ax = if x.is_negative() { x.neg_checked().unwrap_or_else(|_| x.clone()) } else { x.clone() };
            if best.as_ref().map_or(true, |(_, _, b)| ax < *b) {
                let unit = ax.is_one();
                best = Some((i, j, ax));
                if unit {
                    return best.map(|(i, j, _)| (i, j));
                }
            }
        }
    }
    best.map(|(i, j, _)| (i, j))
}

fn row_swap<T: IntScalar>(a: &mut Matrix<T>, left: Option<&mut Matrix<T>>, i: usize, j: usize) {
    a.swap_rows(i, j);
    if let Some(l) = left {
        l.swap_rows(i, j);
    }
}

fn col_swap<T: IntScalar>(a: &mut Matrix<T>, right: Option<&mut Matrix<T>>, i: usize, j: usize) {
    a.swap_cols(i, j);
    if let Some(r) = right {
        r.swap_cols(i, j);
    }
}

fn row_axpy<T: IntScalar>(
    a: &mut Matrix<T>,
    left: Option<&mut Matrix<T>>,
    dst: usize,
    src: usize,
    c: &T,
) -> Result<()> {
    a.add_row_multiple(dst, src, c)?;
    if let Some(l) = left {
        l.add_row_multiple(dst, src, c)?;
    }
    Ok(())
}

fn col_axpy<T: IntScalar>(
    a: &mut Matrix<T>,
    right: Option<&mut Matrix<T>>,
    dst: usize,
    src: usize,
    c: &T,
) -> Result<()> {
    a.add_col_multiple(dst, src, c)?;
    if let Some(r) = right {
        r.add_col_multiple(dst, src, c)?;
    }
    Ok(())
}

/// Basis of the integer kernel `{x : A x = 0}`, as columns.
pub fn integer_kernel(a: &IntMatrix) -> IntMatrix {
    let snf = smith_normal_form(a);
    snf.right.col_block(snf.rank(), a.cols())
}

/// Column lattice spanned by `gens`, with a membership test.
pub struct Lattice {
    snf: SmithDecomposition<BigInt>,
    ambient: usize,
}

impl Lattice {
    pub fn new(gens: &IntMatrix) -> Self {
        Lattice {
            snf: smith_normal_form(gens),
            ambient: gens.rows(),
        }
    }

    pub fn rank(&self) -> usize {
        self.snf.rank()
    }

    /// Coordinates of `v` with respect to the basis `left^-1 (d_i e_i)`, or `None`
    /// when `v` is not in the lattice.
    pub fn coordinates(&self, v: &[BigInt]) -> Option<Vec<BigInt>> {
        assert_eq!(v.len(), self.ambient, "vector length");
        let c = self.snf.left.mul_vec(v).expect("BigInt");
        let r = self.rank();
        if c[r..].iter().any(|x| !x.is_zero()) {
            return None;
        }
        let mut out = Vec::with_capacity(r);
        for (ci, d) in c[..r].iter().zip(&self.snf.diagonal) {
            if !(ci % d).is_zero() {
                return None;
            }
            out.push(ci / d);
        }
        Some(out)
    }

    pub fn contains(&self, v: &[BigInt]) -> bool {
        self.coordinates(v).is_some()
    }
}

/// The group `Z / B` for column lattices `B ⊆ Z ⊆ Z^n` given by generators.
pub fn lattice_quotient(z_gens: &IntMatrix, b_gens: &IntMatrix) -> Result<FgAbGroup> {
    let lattice = Lattice::new(z_gens);
    let r = lattice.rank();
    let mut coords = Vec::with_capacity(b_gens.cols());
    for j in 0..b_gens.cols() {
        let c = lattice.coordinates(&b_gens.col(j)).ok_or_else(|| {
            Error::Shape(format!("generator {j} of the sublattice is outside the lattice"))
        })?;
        coords.push(c);
    }
    let rel = IntMatrix::from_cols(r, &coords)?;
    Ok(FgAbGroup::from_relation_matrix(r, &rel))
}

/// Generators of the intersection of two column lattices in the same ambient space.
pub fn lattice_intersection(a: &IntMatrix, b: &IntMatrix) -> Result<IntMatrix> {
    let mut neg_b = b.clone();
    for i in 0..neg_b.rows() {
        neg_b.negate_row(i)?;
    }
    let k = integer_kernel(&a.hcat(&neg_b)?);
    a.mul(&k.row_block(0, a.cols()))
}

/// A basis of the column lattice spanned by `gens` (column echelon form).
pub fn lattice_basis(gens: &IntMatrix) -> IntMatrix {
    let mut a = gens.clone();
    let mut next = 0;
    for i in 0..a.rows() {
        if next == a.cols() {
            break;
        }
        loop {
            // smallest nonzero |entry| among remaining columns in row i
            let best = (next..a.cols())
                .filter(|&j| !a.get(i, j).is_zero())
                .min_by(|&x, &y| a.get(i, x).abs().cmp(&a.get(i, y).abs()));
            let Some(p) = best else { break };
            a.swap_cols(next, p);
            let mut done = true;
            for j in next + 1..a.cols() {
                if a.get(i, j).is_zero() {
                    continue;
                }
                let q = a.get(i, j) / a.get(i, next);
                a.add_col_multiple(j, next, &-q).expect("BigInt");
                if !a.get(i, j).is_zero() {
                    done = false;
                }
            }
            if done {
                next += 1;
                break;
            }
        }
    }
    a.col_block(0, next)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    fn is_unit(v: &BigInt) -> bool {
        v.abs().is_one()
    }

    fn big(rows: &[&[i64]]) -> IntMatrix {
        IntMatrix::from_i64_rows(rows).unwrap()
    }

    fn diag(snf: &SmithDecomposition<BigInt>) -> Vec<i64> {
        snf.diagonal.iter().map(|d| i64::try_from(d).unwrap()).collect()
    }

    fn check_transforms(a: &IntMatrix, snf: &SmithDecomposition<BigInt>) {
        let d = snf.left.mul(a).unwrap().mul(&snf.right).unwrap();
        for i in 0..d.rows() {
            for j in 0..d.cols() {
                let expect = if i == j && i < snf.rank() {
                    snf.diagonal[i].clone()
                } else {
                    BigInt::zero()
                };
                assert_eq!(d.get(i, j), &expect);
            }
        }
        assert!(is_unit(&snf.left.determinant().unwrap()));
        assert!(is_unit(&snf.right.determinant().unwrap()));
    }

    #[test]
    fn identity_and_zero() {
        let id = big(&[&[1, 0], &[0, 1]]);
        assert_eq!(diag(&smith_normal_form(&id)), vec![1, 1]);
        let z = IntMatrix::zeros(2, 3);
        assert!(smith_normal_form(&z).diagonal.is_empty());
    }

    #[test]
    fn two_by_two_gcd_chase() {
        let a = big(&[&[2, 4], &[6, 8]]);
        let snf = smith_normal_form(&a);
        assert_eq!(diag(&snf), vec![2, 4]);
        check_transforms(&a, &snf);
    }

    #[test]
    fn divisibility_is_enforced() {
        let a = big(&[&[2, 0], &[0, 3]]);
        assert_eq!(diag(&smith_normal_form(&a)), vec![1, 6]);
        let b = big(&[&[4, 0, 0], &[0, 6, 0], &[0, 0, 10]]);
        let snf = smith_normal_form(&b);
        assert_eq!(diag(&snf), vec![2, 2, 60]);
        check_transforms(&b, &snf);
    }

    #[test]
    fn fixed_width_overflow_is_reported() {
        let a = Matrix::<i64>::from_i64_rows(&[&[i64::MAX, 3], &[5, i64::MAX - 1]]).unwrap();
        assert_eq!(SmithDecomposition::compute(&a), Err(Error::Overflow));
        // the public entry point falls back to BigInt
        let snf = smith_normal_form(&a.to_big());
        check_transforms(&a.to_big(), &snf);
    }

    #[test]
    fn kernel_and_quotient() {
        let a = big(&[&[1, 2, 3], &[2, 4, 6]]);
        let k = integer_kernel(&a);
        assert_eq!(k.cols(), 2);
        assert!(a.mul(&k).unwrap().is_zero());
        // Z^1 / 2Z
        let z = big(&[&[1]]);
        let b = big(&[&[2]]);
        assert_eq!(lattice_quotient(&z, &b).unwrap().to_string(), "Z/2");
        // 2Z / 4Z ~ Z/2, and 2Z / 0 ~ Z
        assert_eq!(lattice_quotient(&b, &big(&[&[4]])).unwrap().to_string(), "Z/2");
        assert_eq!(lattice_quotient(&b, &IntMatrix::zeros(1, 0)).unwrap().to_string(), "Z");
        assert!(lattice_quotient(&b, &z).is_err());
    }

    #[test]
    fn intersection_and_basis() {
        let a = big(&[&[2]]);
        let b = big(&[&[3]]);
        let i = lattice_intersection(&a, &b).unwrap();
        let basis = lattice_basis(&i);
        assert_eq!(basis.cols(), 1);
        assert_eq!(basis.get(0, 0).abs(), BigInt::from(6));
        let gens = big(&[&[2, 4, 6], &[0, 2, 2]]);
        let basis = lattice_basis(&gens);
        assert_eq!(basis.cols(), 2);
        let l = Lattice::new(&basis);
        for j in 0..gens.cols() {
            assert!(l.contains(&gens.col(j)));
        }
        assert_eq!(lattice_quotient(&basis, &gens).unwrap().to_string(), "0");
    }
}
