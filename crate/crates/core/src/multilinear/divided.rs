/// `Γ²V` for an `F_2` space `V` of dimension `d`: basis `γ₂(b_i)` (indices
/// `0..d`) followed by `γ₁(b_i)γ₁(b_j)` for `i < j` in lexicographic order.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DividedSquare {
    d: usize,
}

pub fn divided_square_f2(d: usize) -> DividedSquare {
    DividedSquare { d }
}

impl DividedSquare {
    pub fn base_dim(&self) -> usize {
        self.d
    }

    pub fn dim(&self) -> usize {
        self.d * (self.d + 1) / 2
    }

    pub fn gamma2_index(&self, i: usize) -> usize {
        i
    }

    /// Index of `γ₁(b_i)γ₁(b_j)`, `i != j`.
    pub fn product_index(&self, i: usize, j: usize) -> usize {
        let (i, j) = if i < j { (i, j) } else { (j, i) };
        assert!(i < j && j < self.d, "product index");
        self.d + i * (2 * self.d - i - 1) / 2 + (j - i - 1)
    }

    /// `γ₂(Σ v_i b_i) = Σ v_i γ₂(b_i) + Σ_{i<j} v_i v_j γ₁(b_i)γ₁(b_j)`.
    pub fn gamma2(&self, v: &[u8]) -> Vec<u8> {
        let mut out = vec![0u8; self.dim()];
        let support: Vec<usize> = (0..self.d).filter(|&i| v[i] & 1 == 1).collect();
        for (a, &i) in support.iter().enumerate() {
            out[i] ^= 1;
            for &j in &support[a + 1..] {
                out[self.product_index(i, j)] ^= 1;
            }
        }
        out
    }

    /// `γ₁(u)γ₁(v)`; the diagonal terms `γ₁(b)γ₁(b) = 2γ₂(b)` vanish.
    pub fn product(&self, u: &[u8], v: &[u8]) -> Vec<u8> {
        let mut out = vec![0u8; self.dim()];
        for i in 0..self.d {
            for j in i + 1..self.d {
                if ((u[i] & v[j]) ^ (u[j] & v[i])) & 1 == 1 {
                    out[self.product_index(i, j)] ^= 1;
                }
            }
        }
        out
    }

    /// `ε: Γ²V → V`, `γ₂(a) ↦ a`, products to zero.
    pub fn epsilon(&self, w: &[u8]) -> Vec<u8> {
        w[..self.d].to_vec()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn divided_power_law() {
        let g = divided_square_f2(3);
        assert_eq!(g.dim(), 6);
        let b1 = [1, 0, 0];
        let b2 = [0, 1, 0];
        let sum = g.gamma2(&[1, 1, 0]);
        let mut diff = sum.clone();
        for (x, y) in diff.iter_mut().zip(g.gamma2(&b1).iter().zip(g.gamma2(&b2)).map(|(a, b)| a ^ b)) {
            *x ^= y;
        }
        assert_eq!(diff, g.product(&b1, &b2));
        assert_eq!(divided_square_f2(1).dim(), 1);
        assert!(g.product(&b1, &b1).iter().all(|&x| x == 0));
    }
}
