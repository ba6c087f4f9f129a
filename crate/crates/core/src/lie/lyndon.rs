//! Lyndon words and the free Lie algebra over Z, embedded in the free
//! associative algebra.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

pub type Word = Vec<u8>;

/// Element of the free associative algebra with integer coefficients.
pub type AssocPoly = BTreeMap<Word, BigInt>;

/// Lyndon words of length exactly `n` over `g` letters, lexicographically.
pub fn lyndon_words(g: usize, n: usize) -> Vec<Word> {
    assert!(g <= u8::MAX as usize, "alphabet too large");
    let mut out = Vec::new();
    if g == 0 || n == 0 {
        return out;
    }
    // Duval's generation of all Lyndon words of length <= n
    let mut w: Vec<u8> = vec![0];
    loop {
        if w.len() == n {
            out.push(w.clone());
        }
        let m = w.len();
        while w.len() < n {
            let c = w[w.len() - m];
            w.push(c);
        }
        while let Some(&last) = w.last() {
            if last as usize == g - 1 {
                w.pop();
            } else {
                break;
            }
        }
        match w.last_mut() {
            Some(last) => *last += 1,
            None => break,
        }
    }
    out
}

pub fn is_lyndon(w: &[u8]) -> bool {
    !w.is_empty() && (1..w.len()).all(|i| *w < w[i..])
}

/// `w = u v` with `v` the longest proper Lyndon suffix.
pub fn standard_factorization(w: &[u8]) -> (Word, Word) {
    assert!(w.len() >= 2, "standard factorization needs length >= 2");
    let i = (1..w.len()).find(|&i| is_lyndon(&w[i..])).expect("a letter is Lyndon");
    (w[..i].to_vec(), w[i..].to_vec())
}

pub fn poly_mul(a: &AssocPoly, b: &AssocPoly) -> AssocPoly {
    let mut out = AssocPoly::new();
    for (u, x) in a {
        for (v, y) in b {
            let mut w = u.clone();
            w.extend(v);
            add_term(&mut out, w, &(x * y));
        }
    }
    out
}

pub fn add_term(p: &mut AssocPoly, w: Word, c: &BigInt) {
    if c.is_zero() {
        return;
    }
    let e = p.entry(w.clone()).or_insert_with(BigInt::zero);
    *e += c;
    if e.is_zero() {
        p.remove(&w);
    }
}

pub fn poly_add_scaled(p: &mut AssocPoly, c: &BigInt, q: &AssocPoly) {
    for (w, x) in q {
        add_term(p, w.clone(), &(c * x));
    }
}

/// `PQ - QP`
pub fn commutator(p: &AssocPoly, q: &AssocPoly) -> AssocPoly {
    let mut out = poly_mul(p, q);
    poly_add_scaled(&mut out, &BigInt::from(-1), &poly_mul(q, p));
    out
}

pub fn letter(i: u8) -> AssocPoly {
    AssocPoly::from([(vec![i], BigInt::one())])
}

/// The free Lie algebra on `g` generators over Z, weights `1..=max_weight`.
/// Basis: standard-bracketed Lyndon words, ordered by weight and then
/// lexicographically.
#[derive(Clone, Debug)]
pub struct FreeLie {
    g: usize,
    max_weight: usize,
    words: Vec<Vec<Word>>,
    expansions: HashMap<Word, AssocPoly>,
    index: HashMap<Word, (usize, usize)>,
}

impl FreeLie {
    pub fn new(g: usize, max_weight: usize) -> Self {
        let mut words = vec![Vec::new()];
        let mut expansions = HashMap::new();
        let mut index = HashMap::new();
        for w in 1..=max_weight {
            let ws = lyndon_words(g, w);
            for (i, word) in ws.iter().enumerate() {
                let p = if w == 1 {
                    letter(word[0])
                } else {
                    let (u, v) = standard_factorization(word);
                    commutator(&expansions[&u], &expansions[&v])
                };
                expansions.insert(word.clone(), p);
                index.insert(word.clone(), (w, i));
            }
            words.push(ws);
        }
        FreeLie {
            g,
            max_weight,
            words,
            expansions,
            index,
        }
    }

    pub fn generators(&self) -> usize {
        self.g
    }

    pub fn max_weight(&self) -> usize {
        self.max_weight
    }

    pub fn rank(&self, w: usize) -> usize {
        self.words.get(w).map_or(0, Vec::len)
    }

    pub fn words(&self, w: usize) -> &[Word] {
        &self.words[w]
    }

    pub fn expansion(&self, word: &[u8]) -> &AssocPoly {
        &self.expansions[word]
    }

    /// Coordinates of a homogeneous Lie polynomial of weight `w` in the
    /// Lyndon basis. Uses that the expansion of a Lyndon word is the word
    /// itself plus lexicographically larger words.
    pub fn coordinates(&self, poly: &AssocPoly, w: usize) -> Result<Vec<BigInt>> {
        let mut coords = vec![BigInt::zero(); self.rank(w)];
        let mut rest = poly.clone();
        while let Some((word, c)) = rest.iter().next().map(|(k, v)| (k.clone(), v.clone())) {
            if word.len() != w {
                return Err(Error::BracketCheck(format!("polynomial is not homogeneous of weight {w}")));
            }
            let Some(&(_, i)) = self.index.get(&word) else {
                return Err(Error::BracketCheck("polynomial is not a Lie element".into()));
            };
            coords[i] += &c;
            poly_add_scaled(&mut rest, &(-c), &self.expansions[&word]);
        }
        Ok(coords)
    }

    /// Lie polynomial from Lyndon coordinates in weight `w`.
    pub fn polynomial(&self, coords: &[BigInt], w: usize) -> AssocPoly {
        let mut p = AssocPoly::new();
        for (c, word) in coords.iter().zip(&self.words[w]) {
            poly_add_scaled(&mut p, c, &self.expansions[word]);
        }
        p
    }

    /// `[b_i, b_j]` for basis elements of weights `u` and `v` (`u + v <= max_weight`).
    pub fn bracket_basis(&self, u: usize, i: usize, v: usize, j: usize) -> Vec<BigInt> {
        let p = commutator(&self.expansions[&self.words[u][i]], &self.expansions[&self.words[v][j]]);
        self.coordinates(&p, u + v).expect("bracket of Lie elements")
    }
}

/// A Lie polynomial written with generators and brackets, e.g. `[[x,y],x]`
/// or `z - [x,y]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LieExpr {
    Gen(u8),
    Bracket(Box<LieExpr>, Box<LieExpr>),
    Sum(Vec<(i64, LieExpr)>),
}

impl LieExpr {
    pub fn gen(i: u8) -> Self {
        LieExpr::Gen(i)
    }

    pub fn bracket(a: LieExpr, b: LieExpr) -> Self {
        LieExpr::Bracket(Box::new(a), Box::new(b))
    }

    pub fn to_poly(&self) -> AssocPoly {
        match self {
            LieExpr::Gen(i) => letter(*i),
            LieExpr::Bracket(a, b) => commutator(&a.to_poly(), &b.to_poly()),
            LieExpr::Sum(terms) => {
                let mut p = AssocPoly::new();
                for (c, e) in terms {
                    poly_add_scaled(&mut p, &BigInt::from(*c), &e.to_poly());
                }
                p
            }
        }
    }

    /// Parses expressions over the generator names `names` (single letters).
    pub fn parse(s: &str, names: &[char]) -> Result<Self> {
        let chars: Vec<char> = s.chars().filter(|c| !c.is_whitespace()).collect();
        let mut pos = 0;
        let e = parse_sum(&chars, &mut pos, names)?;
        if pos != chars.len() {
            return Err(Error::Parse(format!("unexpected trailing input in {s:?}")));
        }
        Ok(e)
    }
}

fn parse_sum(c: &[char], pos: &mut usize, names: &[char]) -> Result<LieExpr> {
    let mut terms = Vec::new();
    let mut sign = 1i64;
    if c.get(*pos) == Some(&'-') {
        sign = -1;
        *pos += 1;
    }
    loop {
        let mut coeff = 1i64;
        let start = *pos;
        while c.get(*pos).is_some_and(|d| d.is_ascii_digit()) {
            *pos += 1;
        }
        if *pos > start {
            let digits: String = c[start..*pos].iter().collect();
            coeff = digits.parse().map_err(|_| Error::Parse("bad coefficient".into()))?;
            if c.get(*pos) == Some(&'*') {
                *pos += 1;
            }
        }
        terms.push((sign * coeff, parse_atom(c, pos, names)?));
        match c.get(*pos) {
            Some('+') => sign = 1,
            Some('-') => sign = -1,
            _ => break,
        }
        *pos += 1;
    }
    if terms.len() == 1 && terms[0].0 == 1 {
        Ok(terms.pop().expect("one term").1)
    } else {
        Ok(LieExpr::Sum(terms))
    }
}

fn parse_atom(c: &[char], pos: &mut usize, names: &[char]) -> Result<LieExpr> {
    match c.get(*pos) {
        Some('[') => {
            *pos += 1;
            let a = parse_sum(c, pos, names)?;
            if c.get(*pos) != Some(&',') {
                return Err(Error::Parse("expected ',' in bracket".into()));
            }
            *pos += 1;
            let b = parse_sum(c, pos, names)?;
            if c.get(*pos) != Some(&']') {
                return Err(Error::Parse("expected ']'".into()));
            }
            *pos += 1;
            Ok(LieExpr::bracket(a, b))
        }
        Some(ch) => {
            let i = names
                .iter()
                .position(|n| n == ch)
                .ok_or_else(|| Error::Parse(format!("unknown generator {ch:?}")))?;
            *pos += 1;
            Ok(LieExpr::Gen(i as u8))
        }
        None => Err(Error::Parse("unexpected end of expression".into())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_lyndon_words() {
        assert_eq!(lyndon_words(2, 1), vec![vec![0], vec![1]]);
        assert_eq!(lyndon_words(2, 2), vec![vec![0, 1]]);
        assert_eq!(lyndon_words(2, 3), vec![vec![0, 0, 1], vec![0, 1, 1]]);
        assert_eq!(standard_factorization(&[0, 0, 1]), (vec![0], vec![0, 1]));
        assert_eq!(standard_factorization(&[0, 1, 1]), (vec![0, 1], vec![1]));
        assert!(!is_lyndon(&[0, 1, 0, 1]));
    }

    #[test]
    fn rewriting() {
        let f = FreeLie::new(2, 4);
        // [y,x] = -[x,y]
        assert_eq!(f.bracket_basis(1, 1, 1, 0), vec![BigInt::from(-1)]);
        assert_eq!(f.bracket_basis(1, 0, 1, 0), vec![BigInt::zero()]);
        let e = LieExpr::parse("[[x,y],x]", &['x', 'y']).unwrap();
        assert_eq!(f.coordinates(&e.to_poly(), 3).unwrap(), vec![BigInt::from(-1), BigInt::zero()]);
        let bad = LieExpr::parse("x - [x,y]", &['x', 'y']).unwrap();
        assert!(f.coordinates(&bad.to_poly(), 1).is_err());
        assert!(LieExpr::parse("[x,q]", &['x', 'y']).is_err());
    }
}
