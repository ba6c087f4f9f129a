//! Dense matrices over a prime field. Rows are bit-packed when `p = 2` and
//! stored one byte per entry otherwise.

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
enum Repr {
    Packed { words: usize, data: Vec<u64> },
    Bytes(Vec<u8>),
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct FpMatrix {
    p: u32,
    rows: usize,
    cols: usize,
    repr: Repr,
}

pub fn inv_mod(a: u32, p: u32) -> u32 {
    assert!(a % p != 0, "zero has no inverse");
    let mut result = 1u64;
    let mut base = a as u64 % p as u64;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            result = result * base % p as u64;
        }
        base = base * base % p as u64;
        e >>= 1;
    }
    result as u32
}

pub fn check_prime(p: u32) -> Result<()> {
    if p < 2 || p > 251 || (2..p).take_while(|d| d * d <= p).any(|d| p % d == 0) {
        return Err(Error::Unsupported(format!("{p} is not a supported prime (2 <= p <= 251)")));
    }
    Ok(())
}

impl FpMatrix {
    pub fn zeros(p: u32, rows: usize, cols: usize) -> Self {
        let repr = if p == 2 {
            let words = cols.div_ceil(64);
            Repr::Packed {
                words,
                data: vec![0; rows * words],
            }
        } else {
            Repr::Bytes(vec![0; rows * cols])
        };
        FpMatrix { p, rows, cols, repr }
    }

    pub fn identity(p: u32, n: usize) -> Self {
        let mut m = Self::zeros(p, n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    /// Entries are reduced mod p.
    pub fn from_rows(p: u32, cols: usize, rows: &[Vec<u32>]) -> Result<Self> {
        let mut m = Self::zeros(p, rows.len(), cols);
        for (i, r) in rows.iter().enumerate() {
            if r.len() != cols {
                return Err(Error::Shape(format!("row {i} has length {}", r.len())));
            }
            for (j, &v) in r.iter().enumerate() {
                m.set(i, j, v % p);
            }
        }
        Ok(m)
    }

    pub fn from_row_vecs(p: u32, cols: usize, rows: &[Vec<u8>]) -> Self {
        let mut m = Self::zeros(p, rows.len(), cols);
        for (i, r) in rows.iter().enumerate() {
            assert_eq!(r.len(), cols, "row length");
            m.set_row(i, r);
        }
        m
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_col_vecs(p: u32, rows: usize, cols: &[Vec<u8>]) -> Self {
        let mut m = Self::zeros(p, rows, cols.len());
        for (j, c) in cols.iter().enumerate() {
            assert_eq!(c.len(), rows, "column length");
            for (i, &v) in c.iter().enumerate() {
                if v != 0 {
                    m.set(i, j, v as u32);
                }
            }
        }
        m
    }

    pub fn prime(&self) -> u32 {
        self.p
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> u32 {
        debug_assert!(i < self.rows && j < self.cols);
        match &self.repr {
            Repr::Packed { words, data } => ((data[i * words + j / 64] >> (j % 64)) & 1) as u32,
            Repr::Bytes(d) => d[i * self.cols + j] as u32,
        }
    }

    pub fn set(&mut self, i: usize, j: usize, v: u32) {
        let v = v % self.p;
        match &mut self.repr {
            Repr::Packed { words, data } => {
                let w = &mut data[i * *words + j / 64];
                if v == 1 {
                    *w |= 1 << (j % 64);
                } else {
                    *w &= !(1 << (j % 64));
                }
            }
            Repr::Bytes(d) => d[i * self.cols + j] = v as u8,
        }
    }

    pub fn row(&self, i: usize) -> Vec<u8> {
        (0..self.cols).map(|j| self.get(i, j) as u8).collect()
    }

    pub fn set_row(&mut self, i: usize, v: &[u8]) {
        for (j, &x) in v.iter().enumerate() {
            self.set(i, j, x as u32);
        }
    }

    pub fn col(&self, j: usize) -> Vec<u8> {
        (0..self.rows).map(|i| self.get(i, j) as u8).collect()
    }

    pub fn row_vecs(&self) -> Vec<Vec<u8>> {
        (0..self.rows).map(|i| self.row(i)).collect()
    }

    pub fn is_zero(&self) -> bool {
        match &self.repr {
            Repr::Packed { data, .. } => data.iter().all(|&w| w == 0),
            Repr::Bytes(d) => d.iter().all(|&x| x == 0),
        }
    }

    fn row_is_zero(&self, i: usize) -> bool {
        match &self.repr {
            Repr::Packed { words, data } => data[i * words..(i + 1) * words].iter().all(|&w| w == 0),
            Repr::Bytes(d) => d[i * self.cols..(i + 1) * self.cols].iter().all(|&x| x == 0),
        }
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        match &mut self.repr {
            Repr::Packed { words, data } => {
                for k in 0..*words {
                    data.swap(a * *words + k, b * *words + k);
                }
            }
            Repr::Bytes(d) => {
                for k in 0..self.cols {
                    d.swap(a * self.cols + k, b * self.cols + k);
                }
            }
        }
    }

    /// row[dst] += c * row[src]
    pub fn add_row_multiple(&mut self, dst: usize, src: usize, c: u32) {
        let c = c % self.p;
        if c == 0 {
            return;
        }
        match &mut self.repr {
            Repr::Packed { words, data } => {
                for k in 0..*words {
                    let s = data[src * *words + k];
                    data[dst * *words + k] ^= s;
                }
            }
            Repr::Bytes(d) => {
                let p = self.p;
                for k in 0..self.cols {
                    let s = d[src * self.cols + k] as u32;
                    if s != 0 {
                        let t = &mut d[dst * self.cols + k];
                        *t = ((*t as u32 + c * s) % p) as u8;
                    }
                }
            }
        }
    }

    pub fn scale_row(&mut self, i: usize, c: u32) {
        if let Repr::Bytes(d) = &mut self.repr {
            let p = self.p;
            for k in 0..self.cols {
                let t = &mut d[i * self.cols + k];
                *t = ((*t as u32 * c) % p) as u8;
            }
        } else if c % 2 == 0 {
            for j in 0..self.cols {
                self.set(i, j, 0);
            }
        }
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.p, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let v = self.get(i, j);
                if v != 0 {
                    t.set(j, i, v);
                }
            }
        }
        t
    }

    pub fn mul(&self, other: &FpMatrix) -> Result<FpMatrix> {
        if self.p != other.p || self.cols != other.rows {
            return Err(Error::Shape(format!(
                "cannot multiply {}x{} by {}x{} (p = {}, {})",
                self.rows, self.cols, other.rows, other.cols, self.p, other.p
            )));
        }
        let mut out = Self::zeros(self.p, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a != 0 {
                    out.add_row_from(i, other, k, a);
                }
            }
        }
        Ok(out)
    }

    /// row[dst] of self += c * row[src] of other (same column count).
    fn add_row_from(&mut self, dst: usize, other: &FpMatrix, src: usize, c: u32) {
        match (&mut self.repr, &other.repr) {
            (Repr::Packed { words, data }, Repr::Packed { data: od, .. }) => {
                for k in 0..*words {
                    data[dst * *words + k] ^= od[src * *words + k];
                }
            }
            (Repr::Bytes(d), Repr::Bytes(od)) => {
                let (p, n) = (self.p, self.cols);
                for k in 0..n {
                    let s = od[src * n + k] as u32;
                    if s != 0 {
                        let t = &mut d[dst * n + k];
                        *t = ((*t as u32 + c * s) % p) as u8;
                    }
                }
            }
            _ => unreachable!("representation follows the prime"),
        }
    }

    pub fn mul_vec(&self, v: &[u8]) -> Vec<u8> {
        assert_eq!(v.len(), self.cols, "vector length");
        let p = self.p;
        (0..self.rows)
            .map(|i| {
                let s: u64 = (0..self.cols)
                    .filter(|&j| v[j] != 0)
                    .map(|j| self.get(i, j) as u64 * v[j] as u64)
                    .sum();
                (s % p as u64) as u8
            })
            .collect()
    }

    pub fn vcat(&self, other: &FpMatrix) -> FpMatrix {
        assert_eq!(self.cols, other.cols, "vcat column mismatch");
        let mut out = Self::zeros(self.p, self.rows + other.rows, self.cols);
        for i in 0..self.rows {
            out.set_row(i, &self.row(i));
        }
        for i in 0..other.rows {
            out.set_row(self.rows + i, &other.row(i));
        }
        out
    }

    pub fn sub(&self, other: &FpMatrix) -> FpMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "shape");
        let mut out = self.clone();
        for i in 0..self.rows {
            for j in 0..self.cols {
                let v = (self.get(i, j) + self.p - other.get(i, j)) % self.p;
                out.set(i, j, v);
            }
        }
        out
    }

    pub fn scaled(&self, c: u32) -> FpMatrix {
        let mut out = self.clone();
        for i in 0..self.rows {
            out.scale_row(i, c % self.p);
        }
        out
    }

    /// Reduced row echelon form in place; returns pivot columns. Pivot rows are
    /// the first nonzero rows at or below the current position.
    pub fn rref_in_place(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(pr) = (r..self.rows).find(|&i| self.get(i, c) != 0) else {
                continue;
            };
            self.swap_rows(r, pr);
            let inv = inv_mod(self.get(r, c), self.p);
            if inv != 1 {
                self.scale_row(r, inv);
            }
            for i in 0..self.rows {
                if i != r {
                    let v = self.get(i, c);
                    if v != 0 {
                        self.add_row_multiple(i, r, self.p - v);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rref(&self) -> (FpMatrix, Vec<usize>) {
        let mut m = self.clone();
        let pivots = m.rref_in_place();
        let mut basis = Self::zeros(self.p, pivots.len(), self.cols);
        for i in 0..pivots.len() {
            basis.set_row(i, &m.row(i));
        }
        (basis, pivots)
    }

    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.rref_in_place().len()
    }

    pub fn drop_zero_rows(&self) -> FpMatrix {
        let keep: Vec<usize> = (0..self.rows).filter(|&i| !self.row_is_zero(i)).collect();
        let mut out = Self::zeros(self.p, keep.len(), self.cols);
        for (k, &i) in keep.iter().enumerate() {
            out.set_row(k, &self.row(i));
        }
        out
    }
}

/// Basis (as rows) of `{x : A x = 0}`.
pub fn fp_kernel(a: &FpMatrix) -> FpMatrix {
    let (r, pivots) = a.rref();
    let free: Vec<usize> = (0..a.cols()).filter(|c| !pivots.contains(c)).collect();
    let mut k = FpMatrix::zeros(a.prime(), free.len(), a.cols());
    for (row, &f) in free.iter().enumerate() {
        k.set(row, f, 1);
        for (i, &pc) in pivots.iter().enumerate() {
            let v = r.get(i, f);
            if v != 0 {
                k.set(row, pc, a.prime() - v);
            }
        }
    }
    k
}

/// Row-reduced basis (as rows) of the column space of `A`.
pub fn fp_image(a: &FpMatrix) -> FpMatrix {
    a.transpose().rref().0
}

/// Cokernel of `A`: a complement basis of the column space (unit vectors at the
/// non-pivot coordinates) and the projection onto it.
#[derive(Clone, Debug)]
pub struct FpQuotient {
    pub complement: FpMatrix,
    pub projection: FpMatrix,
}

pub fn fp_quotient(a: &FpMatrix) -> FpQuotient {
    let space = FpSubspace::from_rows(&a.transpose());
    let complement_idx = space.complement_indices();
    let p = a.prime();
    let n = a.rows();
    let mut complement = FpMatrix::zeros(p, complement_idx.len(), n);
    for (k, &c) in complement_idx.iter().enumerate() {
        complement.set(k, c, 1);
    }
    let mut projection = FpMatrix::zeros(p, complement_idx.len(), n);
    for j in 0..n {
        let mut e = vec![0u8; n];
        e[j] = 1;
        let reduced = space.reduce(&e);
        for (k, &c) in complement_idx.iter().enumerate() {
            if reduced[c] != 0 {
                projection.set(k, j, reduced[c] as u32);
            }
        }
    }
    FpQuotient {
        complement,
        projection,
    }
}

/// A subspace of `F_p^n` held in reduced row echelon form.
#[derive(Clone, Debug)]
pub struct FpSubspace {
    p: u32,
    ambient: usize,
    basis: FpMatrix,
    pivots: Vec<usize>,
}

impl FpSubspace {
    pub fn zero(p: u32, ambient: usize) -> Self {
        FpSubspace {
            p,
            ambient,
            basis: FpMatrix::zeros(p, 0, ambient),
            pivots: Vec::new(),
        }
    }

    pub fn from_rows(m: &FpMatrix) -> Self {
        let (basis, pivots) = m.rref();
        FpSubspace {
            p: m.prime(),
            ambient: m.cols(),
            basis,
            pivots,
        }
    }

    pub fn from_vecs(p: u32, ambient: usize, vecs: &[Vec<u8>]) -> Self {
        Self::from_rows(&FpMatrix::from_row_vecs(p, ambient, vecs))
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn basis(&self) -> &FpMatrix {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Non-pivot coordinates, in increasing order.
    pub fn complement_indices(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.ambient];
        for &c in &self.pivots {
            is_pivot[c] = true;
        }
        (0..self.ambient).filter(|&c| !is_pivot[c]).collect()
    }

    /// The unique representative of `v + S` vanishing at every pivot coordinate.
    pub fn reduce(&self, v: &[u8]) -> Vec<u8> {
        assert_eq!(v.len(), self.ambient, "vector length");
        let mut out = v.to_vec();
        for (i, &c) in self.pivots.iter().enumerate() {
            let a = out[c] as u32;
            if a == 0 {
                continue;
            }
            for j in c..self.ambient {
                let b = self.basis.get(i, j);
                if b != 0 {
                    out[j] = ((out[j] as u32 + (self.p - a) * b) % self.p) as u8;
                }
            }
        }
        out
    }

    pub fn contains(&self, v: &[u8]) -> bool {
        self.reduce(v).iter().all(|&x| x == 0)
    }

    pub fn contains_space(&self, other: &FpSubspace) -> bool {
        (0..other.dim()).all(|i| self.contains(&other.basis.row(i)))
    }

    pub fn sum(&self, other: &FpSubspace) -> FpSubspace {
        FpSubspace::from_rows(&self.basis.vcat(&other.basis))
    }
}

/// A bounded complex of finite-dimensional `F_p` spaces; `boundary(n)` maps
/// position `n` to `n - 1` and has shape `dim(n-1) x dim(n)`.
#[derive(Clone, Debug)]
pub struct FpChainComplex {
    p: u32,
    dims: Vec<usize>,
    boundaries: Vec<FpMatrix>,
}

impl FpChainComplex {
    /// `boundaries[n - 1]` is `∂_n` for `n = 1..dims.len()`.
    pub fn new(p: u32, dims: Vec<usize>, boundaries: Vec<FpMatrix>) -> Result<Self> {
        if boundaries.len() + 1 != dims.len().max(1) {
            return Err(Error::Shape("need one boundary between consecutive positions".into()));
        }
        let mut all = vec![FpMatrix::zeros(p, 0, dims.first().copied().unwrap_or(0))];
        all.extend(boundaries);
        for (n, d) in all.iter().enumerate().skip(1) {
            if d.prime() != p || d.rows() != dims[n - 1] || d.cols() != dims[n] {
                return Err(Error::Shape(format!("boundary {n} has wrong shape")));
            }
            if n >= 2 && !all[n - 1].mul(d)?.is_zero() {
                return Err(Error::NotAComplex { position: n });
            }
        }
        Ok(FpChainComplex {
            p,
            dims,
            boundaries: all,
        })
    }

    pub fn prime(&self) -> u32 {
        self.p
    }

    pub fn len(&self) -> usize {
        self.dims.len()
    }

    pub fn is_empty(&self) -> bool {
        self.dims.is_empty()
    }

    pub fn dim(&self, n: usize) -> usize {
        self.dims.get(n).copied().unwrap_or(0)
    }

    pub fn boundary(&self, n: usize) -> &FpMatrix {
        &self.boundaries[n]
    }

    pub fn homology(&self, n: usize) -> usize {
        if n >= self.dims.len() {
            return 0;
        }
        let out_rank = self.boundaries[n].rank();
        let in_rank = self.boundaries.get(n + 1).map_or(0, FpMatrix::rank);
        self.dims[n] - out_rank - in_rank
    }

    pub fn homology_all(&self) -> Vec<usize> {
        (0..self.dims.len()).map(|n| self.homology(n)).collect()
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.dims
            .iter()
            .enumerate()
            .map(|(n, &d)| if n % 2 == 0 { d as i64 } else { -(d as i64) })
            .sum()
    }
}
