//! Independent braid-group oracle based on permutation braids.
//!
//! Equality of braid words is decided through the classical left-greedy
//! canonical form `Δ^p·x₁⋯x_k` whose factors are permutation braids, encoded
//! directly as permutations. Nothing here touches the presentation machinery
//! of the other modules, so this oracle can sit on the target side of
//! homomorphism checks without circularity.
//!
//! Conventions: permutations act on 0-based positions, and products compose
//! left to right (`mul(a, b)` is "a then b"), matching the reading order of
//! braid words.

use crate::kernel::{SignedLetter, SignedWord, Word};

/// A permutation in one-line notation over 0-based positions.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Perm(Vec<u8>);

impl Perm {
    pub fn identity(m: usize) -> Perm {
        Perm((0..m as u8).collect())
    }

    /// The adjacent transposition for braid generator `i` (1-based).
    pub fn transposition(m: usize, i: usize) -> Perm {
        assert!(i >= 1 && i < m, "generator index {i} out of range for {m} strands");
        let mut v: Vec<u8> = (0..m as u8).collect();
        v.swap(i - 1, i);
        Perm(v)
    }

    /// The longest element (order-reversing permutation), image of Δ.
    pub fn longest(m: usize) -> Perm {
        Perm((0..m as u8).rev().collect())
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &v)| v as usize == i)
    }

    /// `a then b`: `mul(a,b)(k) = b(a(k))`.
    pub fn mul(&self, other: &Perm) -> Perm {
        Perm(self.0.iter().map(|&v| other.0[v as usize]).collect())
    }

    pub fn inverse(&self) -> Perm {
        let mut v = vec![0u8; self.0.len()];
        for (i, &img) in self.0.iter().enumerate() {
            v[img as usize] = i as u8;
        }
        Perm(v)
    }

    /// Number of inversions = length of any reduced word.
    pub fn length(&self) -> usize {
        let mut count = 0;
        for i in 0..self.0.len() {
            for j in (i + 1)..self.0.len() {
                if self.0[i] > self.0[j] {
                    count += 1;
                }
            }
        }
        count
    }

    /// Generators left-dividing the permutation braid: descents of the
    /// one-line notation.
    pub fn starting_set(&self) -> Vec<usize> {
        (1..self.0.len())
            .filter(|&i| self.0[i - 1] > self.0[i])
            .collect()
    }

    /// Generators right-dividing the permutation braid: descents of the
    /// inverse.
    pub fn finishing_set(&self) -> Vec<usize> {
        self.inverse().starting_set()
    }

    /// One-line notation over 1-based values, for display.
    pub fn one_line(&self) -> Vec<usize> {
        self.0.iter().map(|&v| v as usize + 1).collect()
    }
}

/// Meet of two permutation braids under the prefix order: the largest common
/// left-divisor, computed by greedily peeling common starting generators.
pub fn meet(a: &Perm, b: &Perm) -> Perm {
    let m = a.degree();
    let mut a = a.clone();
    let mut b = b.clone();
    let mut acc = Perm::identity(m);
    loop {
        let sa = a.starting_set();
        let sb = b.starting_set();
        let Some(&i) = sa.iter().find(|i| sb.contains(i)) else {
            return acc;
        };
        let t = Perm::transposition(m, i);
        acc = acc.mul(&t);
        a = t.mul(&a);
        b = t.mul(&b);
    }
}

/// `∂x = x⁻¹·Δ`, the right complement into the half-twist.
fn complement(x: &Perm) -> Perm {
    x.inverse().mul(&Perm::longest(x.degree()))
}

/// `Δ·x·Δ⁻¹`, the flip automorphism on permutation braids.
fn tau(x: &Perm) -> Perm {
    let w0 = Perm::longest(x.degree());
    w0.mul(x).mul(&w0)
}

/// Left-greedy canonical form `Δ^p·x₁⋯x_k` of a braid; factors are nontrivial
/// permutation braids distinct from Δ, and consecutive factors are
/// left-weighted. Equal braids have identical canonical forms.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BraidNf {
    pub strands: usize,
    pub delta_pow: i64,
    pub factors: Vec<Perm>,
}

impl BraidNf {
    pub fn is_identity(&self) -> bool {
        self.delta_pow == 0 && self.factors.is_empty()
    }
}

/// Canonical form of a signed braid word on `strands` strands; generator
/// indices run over `1..strands`.
pub fn braid_normal_form(strands: usize, word: &SignedWord) -> BraidNf {
    assert!(strands >= 2, "need at least two strands");
    let w0 = Perm::longest(strands);
    let mut delta_pow: i64 = 0;
    let mut factors: Vec<Perm> = Vec::new();
    for l in &word.0 {
        let i = l.gen as usize;
        if !l.inverse {
            factors.push(Perm::transposition(strands, i));
        } else {
            // σ_i⁻¹ = Δ⁻¹·(Δ·σ_i⁻¹); push Δ⁻¹ through the accumulated factors.
            delta_pow -= 1;
            for f in factors.iter_mut() {
                *f = tau(f);
            }
            factors.push(w0.mul(&Perm::transposition(strands, i)));
        }
    }
    let (shift, factors) = left_weight(strands, factors);
    BraidNf {
        strands,
        delta_pow: delta_pow + shift,
        factors,
    }
}

/// Left-weights a positive factor list, extracting full twists to the front.
fn left_weight(strands: usize, mut factors: Vec<Perm>) -> (i64, Vec<Perm>) {
    let w0 = Perm::longest(strands);
    loop {
        factors.retain(|f| !f.is_identity());
        if factors.len() < 2 {
            break;
        }
        let mut changed = false;
        for i in 0..factors.len() - 1 {
            // Slide the largest slice of factors[i+1] that still fits.
            let s = meet(&complement(&factors[i]), &factors[i + 1]);
            if !s.is_identity() {
                factors[i] = factors[i].mul(&s);
                factors[i + 1] = s.inverse().mul(&factors[i + 1]);
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    factors.retain(|f| !f.is_identity());
    let mut shift = 0i64;
    while factors.first() == Some(&w0) {
        factors.remove(0);
        shift += 1;
    }
    debug_assert!(factors.iter().all(|f| *f != w0));
    (shift, factors)
}

/// Equality of braid words via canonical forms.
pub fn braid_equal(strands: usize, a: &SignedWord, b: &SignedWord) -> bool {
    braid_normal_form(strands, a) == braid_normal_form(strands, b)
}

/// Image of a positive word over `ρ₁..ρ_n` in the braid group on `n+1`
/// strands, mapping `ρ_i ↦ σ₁σ₂⋯σ_i`.
pub fn sigma_image(n: usize, w: &Word) -> SignedWord {
    let mut out = Vec::new();
    for &g in w.letters() {
        debug_assert!(g >= 1 && g as usize <= n);
        for i in 1..=g {
            out.push(SignedLetter::pos(i));
        }
    }
    SignedWord(out)
}

/// Signed variant of [`sigma_image`].
pub fn sigma_image_signed(n: usize, w: &SignedWord) -> SignedWord {
    let mut out = SignedWord::empty();
    for &l in &w.0 {
        let img = sigma_image(n, &Word::letter(l.gen));
        if l.inverse {
            out = out.concat(&img.inverse());
        } else {
            out = out.concat(&img);
        }
    }
    out
}

/// σ-length of the image of a positive ρ-word: each ρ_i contributes i.
pub fn sigma_lambda(w: &Word) -> u64 {
    w.letters().iter().map(|&g| g as u64).sum()
}

/// Bounded divisibility inside the submonoid generated by the σ-prefixes:
/// searches for a ρ-word `z` with `u·z = v` in the braid group, exhaustively
/// over the exact σ-length budget. Returns the ShortLex-least witness.
pub fn sigma_divides(n: usize, u: &Word, v: &Word) -> Option<Word> {
    let lu = sigma_lambda(u);
    let lv = sigma_lambda(v);
    if lu > lv {
        return None;
    }
    let budget = lv - lu;
    let strands = n + 1;
    let target = braid_normal_form(strands, &sigma_image(n, v));
    let mut candidates: Vec<Word> = Vec::new();
    enumerate_weighted(n, budget, &mut Word::empty(), &mut candidates);
    candidates.sort();
    candidates.into_iter().find(|z| {
        let w = u.concat(z);
        braid_normal_form(strands, &sigma_image(n, &w)) == target
    })
}

fn enumerate_weighted(n: usize, budget: u64, prefix: &mut Word, out: &mut Vec<Word>) {
    if budget == 0 {
        out.push(prefix.clone());
        return;
    }
    for g in 1..=n as u16 {
        if g as u64 <= budget {
            prefix.push(g);
            enumerate_weighted(n, budget - g as u64, prefix, out);
            prefix.0.pop();
        }
    }
}

/// Outcome of the no-lcm certificate for the σ-prefix submonoid.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NoLcmReport {
    /// Two common right-multiples of ρ₁ and ρ₂, neither dividing the other.
    Pass {
        multiple_a: Word,
        multiple_b: Word,
    },
    /// For n = 2 the submonoid is Garside and the candidate multiples
    /// coincide with the lcm picture; the certificate does not apply.
    NotApplicable,
}

/// Certifies that the σ-prefix submonoid of the braid group on `n+1` strands
/// has no right-lcms for `n ≥ 3`: both ρ₂² (= ρ₁ρ₂ρ₁) and ρ₂ρ₃ (= ρ₁ρ₃ρ₁)
/// are common right-multiples of ρ₁ and ρ₂, yet neither divides the other.
pub fn no_lcm_certificate(n: usize) -> Result<NoLcmReport, String> {
    if n < 3 {
        return Ok(NoLcmReport::NotApplicable);
    }
    let strands = n + 1;
    let eq = |a: &Word, b: &Word| -> bool {
        braid_equal(strands, &sigma_image(n, a), &sigma_image(n, b))
    };
    let m_a = Word::from_letters(&[2, 2]);
    let m_a_alt = Word::from_letters(&[1, 2, 1]);
    let m_b = Word::from_letters(&[2, 3]);
    let m_b_alt = Word::from_letters(&[1, 3, 1]);
    if !eq(&m_a, &m_a_alt) {
        return Err("ρ₂² and ρ₁ρ₂ρ₁ should coincide".into());
    }
    if !eq(&m_b, &m_b_alt) {
        return Err("ρ₂ρ₃ and ρ₁ρ₃ρ₁ should coincide".into());
    }
    for target in [&m_a, &m_b] {
        for gen in [1u16, 2u16] {
            if sigma_divides(n, &Word::letter(gen), target).is_none() {
                return Err(format!(
                    "ρ{gen} should left-divide the candidate multiple"
                ));
            }
        }
    }
    if sigma_divides(n, &m_a, &m_b).is_some() {
        return Err("ρ₂² unexpectedly divides ρ₂ρ₃".into());
    }
    if sigma_divides(n, &m_b, &m_a).is_some() {
        return Err("ρ₂ρ₃ unexpectedly divides ρ₂²".into());
    }
    Ok(NoLcmReport::Pass {
        multiple_a: m_a,
        multiple_b: m_b,
    })
}
