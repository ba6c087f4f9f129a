//! `U = Z⟨x,y⟩/(2x, 2y)` and its free resolution
//! `… → U⁴ →g U⁴ →f U² →g U² →f U →ε Z`, `f(a, b) = xa + yb`, `g(a) = 2a`.
//! `P_n` has `2^⌈n/2⌉` generators of weight `⌈n/2⌉`.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::exactla::{AbChainComplex, FgAbGroup, PresentedAbGroup};
use crate::IntMatrix;

fn gen_weight(n: usize) -> usize {
    n.div_ceil(2)
}

fn blocks(n: usize) -> usize {
    1 << gen_weight(n)
}

/// Generator `(block, word)` of the weight-`w` part of `P_n`; words over
/// `{x, y}` are encoded as binary numbers (lexicographic order).
fn weight_part(n: usize, w: usize) -> Option<(usize, usize)> {
    let c = gen_weight(n);
    (w >= c).then(|| (blocks(n), w - c))
}

fn presented_part(n: usize, w: usize) -> PresentedAbGroup {
    let Some((b, len)) = weight_part(n, w) else {
        return PresentedAbGroup::free(0);
    };
    let gens = b << len;
    if len == 0 {
        return PresentedAbGroup::free(gens);
    }
    let mut rel = IntMatrix::zeros(gens, gens);
    for i in 0..gens {
        rel.set(i, i, BigInt::from(2));
    }
    PresentedAbGroup::new(gens, rel).expect("shape")
}

/// Image of generator `(block, word)` of `P_n` in `P_{n-1}` as
/// `(block', word', coefficient)`.
fn boundary_image(n: usize, block: usize, word: usize, len: usize) -> (usize, usize, i64) {
    if n % 2 == 1 {
        // generator 2i + s ↦ x_s e_i: prepend the letter s
        let (i, s) = (block / 2, block % 2);
        (i, (s << len) | word, 1)
    } else {
        (block, word, 2)
    }
}

fn boundary_matrix(n: usize, w: usize) -> IntMatrix {
    let rows = presented_part(n - 1, w).generators();
    let src = weight_part(n, w);
    let cols = src.map_or(0, |(b, len)| b << len);
    let mut m = IntMatrix::zeros(rows, cols);
    if let Some((b, len)) = src {
        let tgt_len = weight_part(n - 1, w).expect("target part").1;
        for block in 0..b {
            for word in 0..1usize << len {
                let (tb, tw, c) = boundary_image(n, block, word, len);
                m.set(tb << tgt_len | tw, block << len | word, BigInt::from(c));
            }
        }
    }
    m
}

#[derive(Clone, Debug)]
pub struct MainExample {
    pub truncation: usize,
    /// Augmented weight-`w` complexes (exactness errors report positions in
    /// this indexing): position 0 is `Z` (weight 0 only),
    /// position `n + 1` is the weight-`w` part of `P_n`.
    pub weight_complexes: Vec<AbChainComplex>,
    /// `P ⊗_U Z` in positions `0..=nmax + 1`.
    pub tensored: AbChainComplex,
    /// `H_0..=H_nmax` of the tensored complex.
    pub homology: Vec<FgAbGroup>,
}

/// Builds the resolution up to weight `w_max`, verifies zero composites and
/// exactness in every weight `<= w_max`, then computes `Tor_n^U(Z, Z)` for
/// `n <= nmax` (requires `nmax + 1 <= 2 w_max`).
pub fn main_example_resolution(w_max: usize, nmax: usize) -> Result<MainExample> {
    if w_max == 0 || nmax + 1 > 2 * w_max {
        return Err(Error::Unsupported(format!(
            "need w_max >= 1 and nmax <= 2*w_max - 1 (got w_max = {w_max}, nmax = {nmax})"
        )));
    }
    let top = 2 * w_max;
    let mut weight_complexes = Vec::with_capacity(w_max + 1);
    for w in 0..=w_max {
        let mut groups = vec![if w == 0 { PresentedAbGroup::free(1) } else { PresentedAbGroup::free(0) }];
        groups.extend((0..=top).map(|n| presented_part(n, w)));
        let mut boundaries = Vec::with_capacity(top + 1);
        // augmentation: the empty word of P_0 maps to 1
        let mut eps = IntMatrix::zeros(groups[0].generators(), groups[1].generators());
        if w == 0 {
            eps.set(0, 0, BigInt::from(1));
        }
        boundaries.push(eps);
        boundaries.extend((1..=top).map(|n| boundary_matrix(n, w)));
        let c = AbChainComplex::new(groups, boundaries)?;
        for (pos, h) in c.homology_all()?.into_iter().enumerate() {
            if !h.is_zero() {
                return Err(Error::Exactness {
                    weight: w,
                    position: pos,
                    homology: h.to_string(),
                });
            }
        }
        weight_complexes.push(c);
    }
    let tensored = tensored_complex(nmax + 1)?;
    let homology = (0..=nmax).map(|n| tensored.homology(n)).collect::<Result<Vec<_>>>()?;
    Ok(MainExample {
        truncation: w_max,
        weight_complexes,
        tensored,
        homology,
    })
}

/// `P_n ⊗_U Z = Z^{blocks}`: keep only the coefficients on empty words.
fn tensored_complex(top: usize) -> Result<AbChainComplex> {
    let mut boundaries = Vec::with_capacity(top);
    for n in 1..=top {
        let mut m = IntMatrix::zeros(blocks(n - 1), blocks(n));
        for block in 0..blocks(n) {
            // f prepends a letter, which the augmentation kills; g keeps the empty word
            if n % 2 == 0 {
                let (tb, _, c) = boundary_image(n, block, 0, 0);
                m.set(tb, block, BigInt::from(c));
            }
        }
        boundaries.push(m);
    }
    AbChainComplex::free(boundaries)
}

/// `(Z/2)^{2^{n+1}}` for `H_{2n+1}`, `0` for `H_{2n+2}`, `Z` for `H_0`.
pub fn expected_homology(n: usize) -> FgAbGroup {
    match n {
        0 => FgAbGroup::free(1),
        _ if n % 2 == 1 => FgAbGroup::from_cyclic_orders(&vec![2; 1 << n.div_ceil(2)], 0),
        _ => FgAbGroup::zero(),
    }
}
