//! Small dense linear algebra over F_p, written independently of the crate so
//! tests can use it as an oracle.
#![allow(dead_code)]

pub fn inv(a: u32, p: u32) -> u32 {
    (1..p).find(|x| a * x % p == 1).expect("invertible")
}

/// Row-reduced basis of the span of `rows`, with pivot columns.
#[derive(Clone, Debug)]
pub struct Span {
    pub p: u32,
    pub rows: Vec<Vec<u32>>,
    pub pivots: Vec<usize>,
    pub ambient: usize,
}

impl Span {
    pub fn new(p: u32, ambient: usize, vecs: impl IntoIterator<Item = Vec<u32>>) -> Self {
        let mut s = Span {
            p,
            rows: Vec::new(),
            pivots: Vec::new(),
            ambient,
        };
        for v in vecs {
            s.insert(v);
        }
        s
    }

    pub fn reduce(&self, v: &[u32]) -> Vec<u32> {
        let p = self.p;
        let mut v: Vec<u32> = v.iter().map(|x| x % p).collect();
        for (row, &c) in self.rows.iter().zip(&self.pivots) {
            let f = v[c];
            if f != 0 {
                for (x, r) in v.iter_mut().zip(row) {
                    *x = (*x + p * p - f * r % p) % p;
                }
            }
        }
        v
    }

    /// Adds `v`, keeping the basis fully reduced; returns whether the dimension grew.
    pub fn insert(&mut self, v: Vec<u32>) -> bool {
        let p = self.p;
        let mut v = self.reduce(&v);
        let Some(c) = v.iter().position(|&x| x != 0) else {
            return false;
        };
        let s = inv(v[c], p);
        for x in v.iter_mut() {
            *x = *x * s % p;
        }
        for row in self.rows.iter_mut() {
            let f = row[c];
            if f != 0 {
                for (x, y) in row.iter_mut().zip(&v) {
                    *x = (*x + p * p - f * y % p) % p;
                }
            }
        }
        self.rows.push(v);
        self.pivots.push(c);
        true
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn contains(&self, v: &[u32]) -> bool {
        self.reduce(v).iter().all(|&x| x == 0)
    }

    /// Columns not used as pivots: coordinates on the quotient.
    pub fn free_columns(&self) -> Vec<usize> {
        (0..self.ambient).filter(|c| !self.pivots.contains(c)).collect()
    }
}

/// `ambient / span` with coordinates on the free columns.
pub struct Quotient {
    pub span: Span,
    pub free: Vec<usize>,
}

impl Quotient {
    pub fn new(span: Span) -> Self {
        let free = span.free_columns();
        Quotient { span, free }
    }

    pub fn dim(&self) -> usize {
        self.free.len()
    }

    pub fn coords(&self, v: &[u32]) -> Vec<u32> {
        let r = self.span.reduce(v);
        self.free.iter().map(|&c| r[c]).collect()
    }

    /// Representative of the `i`-th quotient basis vector.
    pub fn lift(&self, i: usize) -> Vec<u32> {
        let mut v = vec![0; self.span.ambient];
        v[self.free[i]] = 1;
        v
    }
}

pub fn rank(p: u32, cols: usize, rows: impl IntoIterator<Item = Vec<u32>>) -> usize {
    Span::new(p, cols, rows).dim()
}
