//! Divisor lattices of a Garside element, greedy normal forms, gcds, lattice
//! duality, and the word problem in the group of fractions.
//!
//! A structure is built from three presentations of the same monoid: a base
//! presentation driving the brute-force oracle, a right-complemented
//! cube-verified `forward` presentation used for reversing on the left side,
//! and a right-complemented cube-verified presentation `backward` of the
//! *opposite* monoid used for the right side. For self-opposite presentations
//! the three coincide; the torus-knot family needs genuinely different
//! enlargements on each side.

use std::cmp::Reverse;
use std::collections::BinaryHeap;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::kernel::{Letter, Presentation, SignedWord, Word};
use crate::reversing::{
    self, ComplementTable, CubeMode, ReversingError, ThetaOutcome,
};
use crate::rewrite::{self, OracleError};
use crate::{Caps, Side};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GarsideDefect {
    DivisorSetsDiffer { left: usize, right: usize, detail: String },
    GeneratorNotDivisor(Letter),
    LatticeFailure { side: Side, a: usize, b: usize, join: bool },
}

impl fmt::Display for GarsideDefect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GarsideDefect::DivisorSetsDiffer { left, right, detail } => write!(
                f,
                "left-divisor set ({left}) and right-divisor set ({right}) differ: {detail}"
            ),
            GarsideDefect::GeneratorNotDivisor(g) => {
                write!(f, "generator #{g} does not divide the candidate element")
            }
            GarsideDefect::LatticeFailure { side, a, b, join } => write!(
                f,
                "simples {a} and {b} have no unique {} under {:?}-divisibility",
                if *join { "join" } else { "meet" },
                side
            ),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StructureError {
    #[error("presentation has no homogeneous length function")]
    NoLengthFunction,
    #[error("not a Garside element: {0}")]
    NotGarsideElement(GarsideDefect),
    #[error("word is not a divisor of the Garside element")]
    NotASimple,
    #[error("cube condition failed on the {side:?} reversing presentation")]
    CubeFailed { side: Side },
    #[error("elements admit no common multiple where the axioms require one")]
    NoCommonMultiple,
    #[error("invalid input word: {0}")]
    BadWord(String),
    #[error(transparent)]
    Reversing(#[from] ReversingError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
}

/// Left-greedy factorization into nontrivial simples, by lattice index.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct NormalForm {
    pub factors: Vec<usize>,
}

impl NormalForm {
    pub fn identity() -> Self {
        NormalForm { factors: Vec::new() }
    }

    pub fn is_identity(&self) -> bool {
        self.factors.is_empty()
    }
}

/// An irreducible left fraction `den⁻¹·num`; the canonical form solving the
/// word problem in the group of fractions.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GroupElement {
    pub den: NormalForm,
    pub num: NormalForm,
}

impl GroupElement {
    pub fn identity() -> Self {
        GroupElement {
            den: NormalForm::identity(),
            num: NormalForm::identity(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.den.is_identity() && self.num.is_identity()
    }
}

/// A bijection between simple index sets, or absent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticeIso {
    pub mapping: Option<Vec<usize>>,
}

/// Outcome of the duality analysis of a divisor lattice.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualityReport {
    /// x ↦ Δ·x⁻¹ on simple indices.
    pub anti_iso: Vec<usize>,
    /// Whether the map above is an order-reversing bijection
    /// (Div, ≤_L) → (Div, ≤_R). Always true for a correctly built structure.
    pub anti_iso_order_reversing: bool,
    /// An order-reversing self-bijection of (Div, ≤_L), when one exists.
    pub self_dual_left: LatticeIso,
}

/// JSON form of the divisor lattice.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct LatticeDoc {
    pub simples: Vec<Vec<Letter>>,
    #[serde(rename = "coversL")]
    pub covers_l: Vec<[usize; 2]>,
    #[serde(rename = "coversR")]
    pub covers_r: Vec<[usize; 2]>,
}

/// Fixed-width bit matrix for order relations on simples.
#[derive(Debug, Clone)]
struct BitMatrix {
    n: usize,
    words: usize,
    rows: Vec<u64>,
}

impl BitMatrix {
    fn new(n: usize) -> Self {
        let words = n.div_ceil(64);
        BitMatrix {
            n,
            words,
            rows: vec![0; n * words],
        }
    }

    fn set(&mut self, i: usize, j: usize) {
        self.rows[i * self.words + j / 64] |= 1u64 << (j % 64);
    }

    fn get(&self, i: usize, j: usize) -> bool {
        self.rows[i * self.words + j / 64] & (1u64 << (j % 64)) != 0
    }

    fn row(&self, i: usize) -> &[u64] {
        &self.rows[i * self.words..(i + 1) * self.words]
    }

    fn transposed(&self) -> BitMatrix {
        let mut t = BitMatrix::new(self.n);
        for i in 0..self.n {
            for j in 0..self.n {
                if self.get(i, j) {
                    t.set(j, i);
                }
            }
        }
        t
    }
}

/// The divisor lattice of a Garside element together with the reversing and
/// oracle machinery needed to compute with it.
pub struct GarsideStructure {
    base: Presentation,
    fwd: ComplementTable,
    bwd: ComplementTable,
    delta: Word,
    caps: Caps,
    simples: Vec<Word>,
    delta_idx: usize,
    gen_simple: Vec<usize>,
    mul_gen: Vec<Vec<Option<usize>>>,
    left_le: BitMatrix,
    right_le: BitMatrix,
    covers_l: Vec<(usize, usize)>,
    covers_r: Vec<(usize, usize)>,
    meet_l: Vec<u32>,
    join_l: Vec<u32>,
    meet_r: Vec<u32>,
    join_r: Vec<u32>,
    comp_post: Vec<usize>,
    comp_pre: Vec<usize>,
}

/// Builds the structure for `delta` using `p` itself as the forward reversing
/// presentation and its opposite as the backward one. Suitable for
/// presentations whose relation set is closed under word reversal.
pub fn build_structure_simple(
    p: &Presentation,
    delta: &Word,
    caps: &Caps,
) -> Result<GarsideStructure, StructureError> {
    build_structure(p, p, &p.opposite(), delta, caps)
}

/// Builds the divisor lattice of `delta` and verifies the Garside axioms on
/// it: the left- and right-divisor sets coincide, every generator divides
/// `delta`, and both divisibility orders are lattices.
///
/// `forward` must be a right-complemented presentation of the same monoid as
/// `base`, and `backward` a right-complemented presentation of its opposite;
/// both are cube-checked here (sharp first, then up to equivalence).
pub fn build_structure(
    base: &Presentation,
    forward: &Presentation,
    backward: &Presentation,
    delta: &Word,
    caps: &Caps,
) -> Result<GarsideStructure, StructureError> {
    if base.lambda().is_none() {
        return Err(StructureError::NoLengthFunction);
    }
    check_word(base, delta)?;
    let fwd = ComplementTable::new(forward)?;
    let bwd = ComplementTable::new(backward)?;
    let base_op = base.opposite();
    verify_cube(&fwd, base, caps, Side::Left)?;
    verify_cube(&bwd, &base_op, caps, Side::Right)?;

    // Left divisors, breadth-first from the identity: every divisor is
    // reachable by right-multiplication by generators within the divisor set.
    let n_gens = base.n_generators();
    let (mut reps, mut mul) = enumerate_divisors(&fwd, base, delta, caps, false)?;

    // Canonical ShortLex representatives: the minimal word for a divisor is
    // the minimal generator-labeled path from the identity in the
    // multiplication graph, because every representing word is such a path.
    let canon = shortlex_paths(&reps, &mul, n_gens);
    let mut order: Vec<usize> = (0..reps.len()).collect();
    order.sort_by(|&a, &b| canon[a].cmp(&canon[b]));
    let mut rank = vec![0usize; reps.len()];
    for (new_idx, &old_idx) in order.iter().enumerate() {
        rank[old_idx] = new_idx;
    }
    reps = order.iter().map(|&o| canon[o].clone()).collect();
    mul = {
        let mut remapped = vec![vec![None; n_gens]; reps.len()];
        for (old_i, row) in mul.iter().enumerate() {
            for (g, tgt) in row.iter().enumerate() {
                remapped[rank[old_i]][g] = tgt.map(|t| rank[t]);
            }
        }
        remapped
    };
    let k = reps.len();

    // Right divisors via the opposite monoid, then matched elementwise.
    let delta_rev = delta.reversed();
    let (op_reps, op_mul) = enumerate_divisors(&bwd, &base_op, &delta_rev, caps, false)?;
    if op_reps.len() != k {
        return Err(StructureError::NotGarsideElement(
            GarsideDefect::DivisorSetsDiffer {
                left: k,
                right: op_reps.len(),
                detail: "divisor counts differ".into(),
            },
        ));
    }
    // m[op index] = left index of the same monoid element.
    let mut m = vec![usize::MAX; k];
    let mut minv = vec![usize::MAX; k];
    for (i_op, w_op) in op_reps.iter().enumerate() {
        let elem = w_op.reversed();
        let found = locate(&fwd, base, caps, &reps, &elem)?;
        match found {
            Some(i) if minv[i] == usize::MAX => {
                m[i_op] = i;
                minv[i] = i_op;
            }
            Some(_) => {
                return Err(StructureError::NotGarsideElement(
                    GarsideDefect::DivisorSetsDiffer {
                        left: k,
                        right: k,
                        detail: format!(
                            "right divisor `{}` matches an already-matched left divisor",
                            base.word_string(&elem)
                        ),
                    },
                ))
            }
            None => {
                return Err(StructureError::NotGarsideElement(
                    GarsideDefect::DivisorSetsDiffer {
                        left: k,
                        right: k,
                        detail: format!(
                            "right divisor `{}` is not a left divisor",
                            base.word_string(&elem)
                        ),
                    },
                ))
            }
        }
    }

    // Orders by reachability in the multiplication graphs.
    let left_le = reachability(&mul, k);
    let op_le = reachability(&op_mul, k);
    let mut right_le = BitMatrix::new(k);
    for i in 0..k {
        for j in 0..k {
            if op_le.get(minv[i], minv[j]) {
                right_le.set(i, j);
            }
        }
    }

    // Every generator divides delta.
    let mut gen_simple = vec![0usize; n_gens];
    for g in 1..=n_gens as Letter {
        match locate(&fwd, base, caps, &reps, &Word::letter(g))? {
            Some(i) => gen_simple[(g - 1) as usize] = i,
            None => {
                return Err(StructureError::NotGarsideElement(
                    GarsideDefect::GeneratorNotDivisor(g),
                ))
            }
        }
    }
    let delta_idx = locate(&fwd, base, caps, &reps, delta)?
        .expect("delta divides itself");
    debug_assert!((0..k).all(|i| left_le.get(i, delta_idx)));
    debug_assert!((0..k).all(|i| right_le.get(i, delta_idx)));

    // Hasse covers and meet/join tables for both orders.
    let covers_l = hasse_covers(&left_le);
    let covers_r = hasse_covers(&right_le);
    let (meet_l, join_l) = lattice_tables(&left_le, Side::Left)?;
    let (meet_r, join_r) = lattice_tables(&right_le, Side::Right)?;

    // Complements into delta on both sides.
    let budget = caps.theta_budget;
    let mut comp_post = vec![0usize; k];
    let mut comp_pre = vec![0usize; k];
    for i in 0..k {
        let post = match reversing::theta(&fwd, &reps[i], delta, budget) {
            ThetaOutcome::Defined(w) => w,
            ThetaOutcome::Undefined => return Err(StructureError::NoCommonMultiple),
            ThetaOutcome::Diverged(steps) => {
                return Err(StructureError::Reversing(ReversingError::Diverged { steps }))
            }
        };
        comp_post[i] = locate(&fwd, base, caps, &reps, &post)?
            .expect("complement of a divisor is a divisor");
        let pre = match reversing::theta(&bwd, &reps[i].reversed(), &delta_rev, budget) {
            ThetaOutcome::Defined(w) => w.reversed(),
            ThetaOutcome::Undefined => return Err(StructureError::NoCommonMultiple),
            ThetaOutcome::Diverged(steps) => {
                return Err(StructureError::Reversing(ReversingError::Diverged { steps }))
            }
        };
        comp_pre[i] = locate(&fwd, base, caps, &reps, &pre)?
            .expect("complement of a divisor is a divisor");
    }

    Ok(GarsideStructure {
        base: base.clone(),
        fwd,
        bwd,
        delta: delta.clone(),
        caps: *caps,
        simples: reps,
        delta_idx,
        gen_simple,
        mul_gen: mul,
        left_le,
        right_le,
        covers_l,
        covers_r,
        meet_l,
        join_l,
        meet_r,
        join_r,
        comp_post,
        comp_pre,
    })
}

fn check_word(p: &Presentation, w: &Word) -> Result<(), StructureError> {
    for &g in w.letters() {
        if g == 0 || g as usize > p.n_generators() {
            return Err(StructureError::BadWord(format!(
                "letter {g} outside the alphabet"
            )));
        }
    }
    Ok(())
}

fn verify_cube(
    table: &ComplementTable,
    oracle: &Presentation,
    caps: &Caps,
    side: Side,
) -> Result<(), StructureError> {
    let sharp = reversing::cube_all_generator_triples(table, CubeMode::Sharp, caps.theta_budget);
    if sharp.all_pass() {
        return Ok(());
    }
    let equiv = reversing::cube_all_generator_triples(
        table,
        CubeMode::UpToEquivalence {
            oracle,
            cap: caps.class_cap,
        },
        caps.theta_budget,
    );
    if equiv.all_pass() {
        Ok(())
    } else {
        Err(StructureError::CubeFailed { side })
    }
}

/// Divisibility of `w` into `delta`, by reversing with an oracle fallback.
fn divides_into(
    table: &ComplementTable,
    base: &Presentation,
    caps: &Caps,
    w: &Word,
    delta: &Word,
) -> Result<bool, StructureError> {
    match reversing::theta(table, delta, w, caps.theta_budget) {
        ThetaOutcome::Defined(rest) => Ok(rest.is_empty()),
        ThetaOutcome::Undefined => Ok(false),
        ThetaOutcome::Diverged(_) => {
            Ok(rewrite::left_divides(base, w, delta, caps.class_cap)?.is_some())
        }
    }
}

/// Element equality by double reversal, with an oracle fallback on budget
/// exhaustion. Sound once the cube condition has been verified.
fn elems_equal(
    table: &ComplementTable,
    base: &Presentation,
    caps: &Caps,
    u: &Word,
    v: &Word,
) -> Result<bool, StructureError> {
    match reversing::reverse_words(table, u, v, caps.theta_budget) {
        reversing::ReversalOutcome::Complete { comp_u, comp_v } => {
            Ok(comp_u.is_empty() && comp_v.is_empty())
        }
        reversing::ReversalOutcome::Undefined => Ok(false),
        reversing::ReversalOutcome::Diverged(_) => {
            Ok(rewrite::words_equal(base, u, v, caps.class_cap)?)
        }
    }
}

fn locate(
    table: &ComplementTable,
    base: &Presentation,
    caps: &Caps,
    reps: &[Word],
    w: &Word,
) -> Result<Option<usize>, StructureError> {
    let lam = base.lambda_len(w).map_err(|_| StructureError::NoLengthFunction)?;
    for (i, r) in reps.iter().enumerate() {
        if base.lambda_len(r).unwrap() == lam && elems_equal(table, base, caps, r, w)? {
            return Ok(Some(i));
        }
    }
    Ok(None)
}

/// Representative words per divisor plus the right-multiplication graph.
type DivisorGraph = (Vec<Word>, Vec<Vec<Option<usize>>>);

/// Breadth-first enumeration of the divisors of `delta`, returning one
/// representative word per element and the right-multiplication graph.
fn enumerate_divisors(
    table: &ComplementTable,
    base: &Presentation,
    delta: &Word,
    caps: &Caps,
    _right: bool,
) -> Result<DivisorGraph, StructureError> {
    let n_gens = base.n_generators();
    let mut reps: Vec<Word> = vec![Word::empty()];
    let mut mul: Vec<Vec<Option<usize>>> = Vec::new();
    let mut head = 0usize;
    while head < reps.len() {
        let cur = reps[head].clone();
        let mut row = vec![None; n_gens];
        for g in 1..=n_gens as Letter {
            let cand = {
                let mut w = cur.clone();
                w.push(g);
                w
            };
            if !divides_into(table, base, caps, &cand, delta)? {
                continue;
            }
            let found = locate(table, base, caps, &reps, &cand)?;
            let idx = match found {
                Some(i) => i,
                None => {
                    reps.push(cand);
                    reps.len() - 1
                }
            };
            row[(g - 1) as usize] = Some(idx);
        }
        mul.push(row);
        head += 1;
    }
    Ok((reps, mul))
}

/// ShortLex-minimal path words from the identity in the multiplication graph.
#[allow(clippy::needless_range_loop)]
fn shortlex_paths(reps: &[Word], mul: &[Vec<Option<usize>>], n_gens: usize) -> Vec<Word> {
    let k = reps.len();
    let mut best: Vec<Option<Word>> = vec![None; k];
    let mut heap: BinaryHeap<Reverse<(Word, usize)>> = BinaryHeap::new();
    heap.push(Reverse((Word::empty(), 0)));
    while let Some(Reverse((w, i))) = heap.pop() {
        match &best[i] {
            Some(b) if *b <= w => continue,
            _ => {}
        }
        best[i] = Some(w.clone());
        for g in 0..n_gens {
            if let Some(j) = mul[i][g] {
                let mut next = w.clone();
                next.push((g + 1) as Letter);
                if best[j].as_ref().is_none_or(|b| next < *b) {
                    heap.push(Reverse((next, j)));
                }
            }
        }
    }
    best.into_iter()
        .map(|w| w.expect("multiplication graph is connected from the identity"))
        .collect()
}

fn reachability(mul: &[Vec<Option<usize>>], k: usize) -> BitMatrix {
    let mut le = BitMatrix::new(k);
    for start in 0..k {
        let mut stack = vec![start];
        let mut seen = vec![false; k];
        seen[start] = true;
        while let Some(i) = stack.pop() {
            le.set(start, i);
            for tgt in mul[i].iter().flatten() {
                if !seen[*tgt] {
                    seen[*tgt] = true;
                    stack.push(*tgt);
                }
            }
        }
    }
    le
}

fn hasse_covers(le: &BitMatrix) -> Vec<(usize, usize)> {
    let k = le.n;
    let mut covers = Vec::new();
    for i in 0..k {
        for j in 0..k {
            if i == j || !le.get(i, j) {
                continue;
            }
            let mut is_cover = true;
            for mid in 0..k {
                if mid != i && mid != j && le.get(i, mid) && le.get(mid, j) {
                    is_cover = false;
                    break;
                }
            }
            if is_cover {
                covers.push((i, j));
            }
        }
    }
    covers.sort_unstable();
    covers
}

/// Meet and join tables; errors if some pair lacks a unique bound.
#[allow(clippy::needless_range_loop)]
fn lattice_tables(le: &BitMatrix, side: Side) -> Result<(Vec<u32>, Vec<u32>), StructureError> {
    let k = le.n;
    let col = le.transposed();
    let mut meet = vec![0u32; k * k];
    let mut join = vec![0u32; k * k];
    let words = le.words;
    let mut buf = vec![0u64; words];
    for a in 0..k {
        for b in 0..k {
            // Meet: unique maximal common lower bound.
            for w in 0..words {
                buf[w] = col.row(a)[w] & col.row(b)[w];
            }
            let mut best: Option<usize> = None;
            let mut unique = true;
            for y in iter_bits(&buf, k) {
                // Maximal: no strictly greater element within the set.
                let mut maximal = true;
                for w in 0..words {
                    let above = le.row(y)[w] & buf[w];
                    let self_bit = if y / 64 == w { 1u64 << (y % 64) } else { 0 };
                    if above & !self_bit != 0 {
                        maximal = false;
                        break;
                    }
                }
                if maximal {
                    if best.is_some() {
                        unique = false;
                        break;
                    }
                    best = Some(y);
                }
            }
            match (best, unique) {
                (Some(y), true) => meet[a * k + b] = y as u32,
                _ => {
                    return Err(StructureError::NotGarsideElement(
                        GarsideDefect::LatticeFailure { side, a, b, join: false },
                    ))
                }
            }
            // Join: unique minimal common upper bound.
            for w in 0..words {
                buf[w] = le.row(a)[w] & le.row(b)[w];
            }
            let mut best: Option<usize> = None;
            let mut unique = true;
            for y in iter_bits(&buf, k) {
                let mut minimal = true;
                for w in 0..words {
                    let below = col.row(y)[w] & buf[w];
                    let self_bit = if y / 64 == w { 1u64 << (y % 64) } else { 0 };
                    if below & !self_bit != 0 {
                        minimal = false;
                        break;
                    }
                }
                if minimal {
                    if best.is_some() {
                        unique = false;
                        break;
                    }
                    best = Some(y);
                }
            }
            match (best, unique) {
                (Some(y), true) => join[a * k + b] = y as u32,
                _ => {
                    return Err(StructureError::NotGarsideElement(
                        GarsideDefect::LatticeFailure { side, a, b, join: true },
                    ))
                }
            }
        }
    }
    Ok((meet, join))
}

fn iter_bits<'a>(words: &'a [u64], n: usize) -> impl Iterator<Item = usize> + 'a {
    (0..n).filter(move |&i| words[i / 64] & (1u64 << (i % 64)) != 0)
}

fn lcm_usize(a: usize, b: usize) -> usize {
    let gcd = {
        let (mut a, mut b) = (a, b);
        while b != 0 {
            let r = a % b;
            a = b;
            b = r;
        }
        a
    };
    a / gcd * b
}

impl GarsideStructure {
    pub fn base(&self) -> &Presentation {
        &self.base
    }

    pub fn delta(&self) -> &Word {
        &self.delta
    }

    pub fn delta_index(&self) -> usize {
        self.delta_idx
    }

    pub fn simple_count(&self) -> usize {
        self.simples.len()
    }

    /// Canonical ShortLex representative words, sorted; index 0 is the
    /// identity.
    pub fn simples(&self) -> &[Word] {
        &self.simples
    }

    pub fn simple_word(&self, i: usize) -> &Word {
        &self.simples[i]
    }

    pub fn generator_simple(&self, g: Letter) -> usize {
        self.gen_simple[(g - 1) as usize]
    }

    /// `simple · g` as a simple index, or `None` if the product leaves the
    /// divisor set.
    pub fn right_multiple_by_generator(&self, i: usize, g: Letter) -> Option<usize> {
        self.mul_gen[i][(g - 1) as usize]
    }

    pub fn left_le(&self, i: usize, j: usize) -> bool {
        self.left_le.get(i, j)
    }

    pub fn right_le(&self, i: usize, j: usize) -> bool {
        self.right_le.get(i, j)
    }

    pub fn covers_left(&self) -> &[(usize, usize)] {
        &self.covers_l
    }

    pub fn covers_right(&self) -> &[(usize, usize)] {
        &self.covers_r
    }

    pub fn meet_left(&self, a: usize, b: usize) -> usize {
        self.meet_l[a * self.simples.len() + b] as usize
    }

    pub fn join_left(&self, a: usize, b: usize) -> usize {
        self.join_l[a * self.simples.len() + b] as usize
    }

    pub fn meet_right(&self, a: usize, b: usize) -> usize {
        self.meet_r[a * self.simples.len() + b] as usize
    }

    pub fn join_right(&self, a: usize, b: usize) -> usize {
        self.join_r[a * self.simples.len() + b] as usize
    }

    /// `(post, pre)` with `s·post = Δ = pre·s`.
    pub fn complement_pair(&self, i: usize) -> (usize, usize) {
        (self.comp_post[i], self.comp_pre[i])
    }

    /// Whether `a·b = Δ` implies `b·a = Δ` throughout, i.e. the two
    /// complements coincide elementwise.
    pub fn complements_coincide(&self) -> bool {
        self.comp_post == self.comp_pre
    }

    /// Complements of an arbitrary word that must be a divisor of Δ;
    /// `NotASimple` otherwise.
    pub fn complement_of_word(&self, w: &Word) -> Result<(usize, usize), StructureError> {
        match self.find_simple(w)? {
            Some(i) => Ok(self.complement_pair(i)),
            None => Err(StructureError::NotASimple),
        }
    }

    /// Finds the simple equal to `w`, if `w` divides Δ.
    pub fn find_simple(&self, w: &Word) -> Result<Option<usize>, StructureError> {
        check_word(&self.base, w)?;
        locate(&self.fwd, &self.base, &self.caps, &self.simples, w)
    }

    /// Element equality of arbitrary words, by reversing with oracle fallback.
    pub fn words_equal(&self, u: &Word, v: &Word) -> Result<bool, StructureError> {
        check_word(&self.base, u)?;
        check_word(&self.base, v)?;
        elems_equal(&self.fwd, &self.base, &self.caps, u, v)
    }

    /// True iff `w` commutes with every generator.
    pub fn is_central(&self, w: &Word) -> Result<bool, StructureError> {
        check_word(&self.base, w)?;
        for g in self.base.generators() {
            let gw = Word::letter(g).concat(w);
            let wg = w.concat(&Word::letter(g));
            if !self.words_equal(&gw, &wg)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Left-quotient `d⁻¹·w` as a word, for `d ≤_L w`.
    fn quot_left(&self, d: &Word, w: &Word) -> Result<Word, StructureError> {
        match reversing::theta(&self.fwd, d, w, self.caps.theta_budget) {
            ThetaOutcome::Defined(q) => Ok(q),
            ThetaOutcome::Undefined => Err(StructureError::NoCommonMultiple),
            ThetaOutcome::Diverged(steps) => {
                Err(StructureError::Reversing(ReversingError::Diverged { steps }))
            }
        }
    }

    /// Right-quotient `w·d⁻¹` as a word, for `d ≤_R w`.
    fn quot_right(&self, d: &Word, w: &Word) -> Result<Word, StructureError> {
        match reversing::theta(&self.bwd, &d.reversed(), &w.reversed(), self.caps.theta_budget) {
            ThetaOutcome::Defined(q) => Ok(q.reversed()),
            ThetaOutcome::Undefined => Err(StructureError::NoCommonMultiple),
            ThetaOutcome::Diverged(steps) => {
                Err(StructureError::Reversing(ReversingError::Diverged { steps }))
            }
        }
    }

    /// The maximal simple left-divisor of `w` (its greedy head): the join of
    /// all simples left-dividing `w`.
    pub fn head_left(&self, w: &Word) -> Result<usize, StructureError> {
        let mut h = 0usize;
        for s in 1..self.simples.len() {
            match reversing::theta(&self.fwd, w, &self.simples[s], self.caps.theta_budget) {
                ThetaOutcome::Defined(rest) => {
                    if rest.is_empty() {
                        h = self.join_left(h, s);
                    }
                }
                ThetaOutcome::Undefined => {}
                ThetaOutcome::Diverged(_) => {
                    if rewrite::left_divides(&self.base, &self.simples[s], w, self.caps.class_cap)?
                        .is_some()
                    {
                        h = self.join_left(h, s);
                    }
                }
            }
        }
        Ok(h)
    }

    /// The maximal simple right-divisor of `w`.
    pub fn head_right(&self, w: &Word) -> Result<usize, StructureError> {
        let wr = w.reversed();
        let mut h = 0usize;
        for s in 1..self.simples.len() {
            let sr = self.simples[s].reversed();
            match reversing::theta(&self.bwd, &wr, &sr, self.caps.theta_budget) {
                ThetaOutcome::Defined(rest) => {
                    if rest.is_empty() {
                        h = self.join_right(h, s);
                    }
                }
                ThetaOutcome::Undefined => {}
                ThetaOutcome::Diverged(_) => {
                    if rewrite::right_divides(&self.base, &self.simples[s], w, self.caps.class_cap)?
                        .is_some()
                    {
                        h = self.join_right(h, s);
                    }
                }
            }
        }
        Ok(h)
    }

    /// Product of two simples when it is again a simple.
    fn mul_simples(&self, a: usize, b: usize) -> Option<usize> {
        let w = self.simples[a].concat(&self.simples[b]);
        locate(&self.fwd, &self.base, &self.caps, &self.simples, &w)
            .expect("equality tests on simples do not cap")
    }

    /// Left-weights one adjacent pair: moves the largest possible prefix of
    /// `b` into `a`, using `gcd(a·b, Δ) = a·(b ∧ (a\Δ))`.
    fn pair_op(&self, a: usize, b: usize) -> (usize, usize) {
        let c = self.meet_left(b, self.comp_post[a]);
        if c == 0 {
            return (a, b);
        }
        let a2 = self
            .mul_simples(a, c)
            .expect("a·c divides Δ because c divides a's complement");
        let b2_word = self
            .quot_left(&self.simples[c], &self.simples[b])
            .expect("c divides b by construction");
        let b2 = locate(&self.fwd, &self.base, &self.caps, &self.simples, &b2_word)
            .expect("equality tests on simples do not cap")
            .expect("a right-divisor of a simple is simple");
        (a2, b2)
    }

    /// Left-greedy normal form of a word.
    pub fn normal_form(&self, w: &Word) -> Result<NormalForm, StructureError> {
        check_word(&self.base, w)?;
        let mut factors: Vec<usize> = w
            .letters()
            .iter()
            .map(|&g| self.gen_simple[(g - 1) as usize])
            .collect();
        loop {
            let mut changed = false;
            factors.retain(|&f| f != 0);
            if factors.len() < 2 {
                break;
            }
            for i in 0..factors.len() - 1 {
                let (x, y) = self.pair_op(factors[i], factors[i + 1]);
                if (x, y) != (factors[i], factors[i + 1]) {
                    factors[i] = x;
                    factors[i + 1] = y;
                    changed = true;
                }
            }
            if !changed {
                break;
            }
        }
        factors.retain(|&f| f != 0);
        debug_assert!(factors
            .windows(2)
            .all(|p| self.meet_left(p[1], self.comp_post[p[0]]) == 0));
        Ok(NormalForm { factors })
    }

    /// Word spelled by a normal form.
    pub fn nf_word(&self, nf: &NormalForm) -> Word {
        let parts: Vec<&Word> = nf.factors.iter().map(|&i| &self.simples[i]).collect();
        Word::join(&parts)
    }

    /// Left-gcd of two words, by iterated meets of greedy heads.
    pub fn gcd_left(&self, u: &Word, v: &Word) -> Result<Word, StructureError> {
        check_word(&self.base, u)?;
        check_word(&self.base, v)?;
        let mut acc = Word::empty();
        let mut u = u.clone();
        let mut v = v.clone();
        loop {
            if u.is_empty() || v.is_empty() {
                break;
            }
            let d = self.meet_left(self.head_left(&u)?, self.head_left(&v)?);
            if d == 0 {
                break;
            }
            acc = acc.concat(&self.simples[d]);
            u = self.quot_left(&self.simples[d], &u)?;
            v = self.quot_left(&self.simples[d], &v)?;
        }
        Ok(acc)
    }

    /// Right-gcd of two words; the mirror of [`GarsideStructure::gcd_left`].
    pub fn gcd_right(&self, u: &Word, v: &Word) -> Result<Word, StructureError> {
        check_word(&self.base, u)?;
        check_word(&self.base, v)?;
        let mut acc = Word::empty();
        let mut u = u.clone();
        let mut v = v.clone();
        loop {
            if u.is_empty() || v.is_empty() {
                break;
            }
            let d = self.meet_right(self.head_right(&u)?, self.head_right(&v)?);
            if d == 0 {
                break;
            }
            acc = self.simples[d].concat(&acc);
            u = self.quot_right(&self.simples[d], &u)?;
            v = self.quot_right(&self.simples[d], &v)?;
        }
        Ok(acc)
    }

    /// The flip automorphism x ↦ Δ⁻¹·x·Δ as a permutation of the simples.
    pub fn delta_conjugation(&self) -> Result<Vec<usize>, StructureError> {
        let mut tau = Vec::with_capacity(self.simples.len());
        for x in 0..self.simples.len() {
            let xd = self.simples[x].concat(&self.delta);
            let y = self.quot_left(&self.delta, &xd)?;
            let idx = locate(&self.fwd, &self.base, &self.caps, &self.simples, &y)?
                .expect("conjugates of simples are simples");
            tau.push(idx);
        }
        Ok(tau)
    }

    /// Smallest k ≥ 1 with Δ^k central: the order of the flip permutation on
    /// simples (which generate the monoid). A computed quantity, asserted
    /// nowhere.
    pub fn minimal_central_delta_power(&self) -> Result<usize, StructureError> {
        let tau = self.delta_conjugation()?;
        let mut seen = vec![false; tau.len()];
        let mut order: usize = 1;
        for start in 0..tau.len() {
            if seen[start] {
                continue;
            }
            let mut len = 0usize;
            let mut cur = start;
            loop {
                seen[cur] = true;
                len += 1;
                cur = tau[cur];
                if cur == start {
                    break;
                }
            }
            order = lcm_usize(order, len);
        }
        Ok(order)
    }

    /// Right-lcm of two arbitrary words via the forward reversing table.
    pub fn right_lcm_words(
        &self,
        u: &Word,
        v: &Word,
    ) -> Result<Option<reversing::LcmResult>, StructureError> {
        check_word(&self.base, u)?;
        check_word(&self.base, v)?;
        Ok(reversing::right_lcm(&self.fwd, u, v, self.caps.theta_budget)?)
    }

    /// Left-lcm of two arbitrary words via the backward reversing table.
    pub fn left_lcm_words(
        &self,
        u: &Word,
        v: &Word,
    ) -> Result<Option<reversing::LcmResult>, StructureError> {
        check_word(&self.base, u)?;
        check_word(&self.base, v)?;
        Ok(reversing::left_lcm_with(
            &self.bwd,
            u,
            v,
            self.caps.theta_budget,
        )?)
    }

    /// Canonical irreducible left fraction of a signed word.
    ///
    /// Positive letters multiply the numerator; a negative letter `g⁻¹` is
    /// absorbed through the left-lcm `c·num = d·g`, giving
    /// `den⁻¹·num·g⁻¹ = (c·den)⁻¹·d`. The pair is reduced by its left-gcd at
    /// the end.
    pub fn group_normalize(&self, sw: &SignedWord) -> Result<GroupElement, StructureError> {
        let mut den = Word::empty();
        let mut num = Word::empty();
        for l in &sw.0 {
            if l.gen == 0 || l.gen as usize > self.base.n_generators() {
                return Err(StructureError::BadWord(format!(
                    "letter {} outside the alphabet",
                    l.gen
                )));
            }
            if !l.inverse {
                num.push(l.gen);
            } else {
                let g = Word::letter(l.gen);
                let r = reversing::left_lcm_with(&self.bwd, &num, &g, self.caps.theta_budget)?
                    .ok_or(StructureError::NoCommonMultiple)?;
                den = r.comp_u.concat(&den);
                num = r.comp_v;
            }
        }
        let g = self.gcd_left(&den, &num)?;
        let den = self.quot_left(&g, &den)?;
        let num = self.quot_left(&g, &num)?;
        Ok(GroupElement {
            den: self.normal_form(&den)?,
            num: self.normal_form(&num)?,
        })
    }

    /// Word problem in the group of fractions.
    pub fn group_equal(&self, a: &SignedWord, b: &SignedWord) -> Result<bool, StructureError> {
        Ok(self.group_normalize(a)? == self.group_normalize(b)?)
    }

    /// Renders a group element as a string over the base alphabet.
    pub fn group_element_string(&self, e: &GroupElement) -> String {
        let den = self.base.word_string(&self.nf_word(&e.den));
        let num = self.base.word_string(&self.nf_word(&e.num));
        if e.den.is_identity() {
            num
        } else {
            format!("({den})⁻¹·{num}")
        }
    }

    /// Duality analysis: verifies x ↦ Δ·x⁻¹ reverses order onto the right
    /// lattice, and searches for an order-reversing self-bijection of the
    /// left lattice.
    pub fn duality(&self) -> DualityReport {
        let k = self.simples.len();
        let anti = self.comp_pre.clone();
        let mut bijective = vec![false; k];
        let mut ok = true;
        for &y in &anti {
            if bijective[y] {
                ok = false;
            }
            bijective[y] = true;
        }
        if ok {
            'outer: for i in 0..k {
                for j in 0..k {
                    if self.left_le.get(i, j) != self.right_le.get(anti[j], anti[i]) {
                        ok = false;
                        break 'outer;
                    }
                }
            }
        }
        let self_dual = self.search_self_duality();
        DualityReport {
            anti_iso: anti,
            anti_iso_order_reversing: ok,
            self_dual_left: LatticeIso { mapping: self_dual },
        }
    }

    /// Backtracking search for an order-reversing bijection of (Div, ≤_L)
    /// onto itself, pruned by degree profiles.
    fn search_self_duality(&self) -> Option<Vec<usize>> {
        let k = self.simples.len();
        let down: Vec<usize> = (0..k)
            .map(|i| (0..k).filter(|&j| self.left_le.get(j, i)).count())
            .collect();
        let up: Vec<usize> = (0..k)
            .map(|i| (0..k).filter(|&j| self.left_le.get(i, j)).count())
            .collect();
        let cov_out: Vec<usize> = (0..k)
            .map(|i| self.covers_l.iter().filter(|&&(a, _)| a == i).count())
            .collect();
        let cov_in: Vec<usize> = (0..k)
            .map(|i| self.covers_l.iter().filter(|&&(_, b)| b == i).count())
            .collect();
        let mut candidates: Vec<Vec<usize>> = (0..k)
            .map(|x| {
                (0..k)
                    .filter(|&y| {
                        down[y] == up[x]
                            && up[y] == down[x]
                            && cov_in[y] == cov_out[x]
                            && cov_out[y] == cov_in[x]
                    })
                    .collect()
            })
            .collect();
        // Assign the most constrained elements first.
        let mut order: Vec<usize> = (0..k).collect();
        order.sort_by_key(|&x| candidates[x].len());
        for c in candidates.iter_mut() {
            c.sort_unstable();
        }
        let mut assign = vec![usize::MAX; k];
        let mut used = vec![false; k];
        self.backtrack_duality(&order, &candidates, &mut assign, &mut used, 0)
            .then_some(assign)
    }

    fn backtrack_duality(
        &self,
        order: &[usize],
        candidates: &[Vec<usize>],
        assign: &mut Vec<usize>,
        used: &mut Vec<bool>,
        depth: usize,
    ) -> bool {
        if depth == order.len() {
            return true;
        }
        let x = order[depth];
        for &y in &candidates[x] {
            if used[y] {
                continue;
            }
            let consistent = order[..depth].iter().all(|&z| {
                let zy = assign[z];
                self.left_le.get(x, z) == self.left_le.get(zy, y)
                    && self.left_le.get(z, x) == self.left_le.get(y, zy)
            });
            if !consistent {
                continue;
            }
            assign[x] = y;
            used[y] = true;
            if self.backtrack_duality(order, candidates, assign, used, depth + 1) {
                return true;
            }
            assign[x] = usize::MAX;
            used[y] = false;
        }
        false
    }

    /// JSON document of the divisor lattice.
    pub fn lattice_doc(&self) -> LatticeDoc {
        LatticeDoc {
            simples: self.simples.iter().map(|w| w.letters().to_vec()).collect(),
            covers_l: self.covers_l.iter().map(|&(a, b)| [a, b]).collect(),
            covers_r: self.covers_r.iter().map(|&(a, b)| [a, b]).collect(),
        }
    }

    /// Graphviz rendering of the left-divisibility Hasse diagram; node and
    /// edge order is canonical so output is diff-stable.
    pub fn lattice_dot(&self) -> String {
        let mut out = String::from("digraph divisors {\n  rankdir=BT;\n");
        for (i, w) in self.simples.iter().enumerate() {
            out.push_str(&format!(
                "  s{} [label=\"{}\"];\n",
                i,
                self.base.word_string(w)
            ));
        }
        for (a, b) in &self.covers_l {
            out.push_str(&format!("  s{a} -> s{b};\n"));
        }
        out.push_str("}\n");
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;
    use crate::kernel::SignedLetter;

    fn caps() -> Caps {
        Caps::default()
    }

    fn m2() -> GarsideStructure {
        families::mn_structure(2, &caps()).unwrap()
    }

    fn w(letters: &[Letter]) -> Word {
        Word::from_letters(letters)
    }

    #[test]
    fn m2_has_eight_simples() {
        let s = m2();
        assert_eq!(s.simple_count(), 8);
        let reps: Vec<Word> = s.simples().to_vec();
        let expected = vec![
            Word::empty(),
            w(&[1]),
            w(&[2]),
            w(&[1, 2]),
            w(&[2, 1]),
            w(&[2, 2]),
            w(&[2, 1, 2]),
            w(&[2, 2, 2]),
        ];
        assert_eq!(reps, expected);
    }

    #[test]
    fn free_monoid_on_one_generator() {
        let p = Presentation::new(vec!["g".into()], vec![]).unwrap();
        let s = build_structure_simple(&p, &Word::letter(1), &caps()).unwrap();
        assert_eq!(s.simple_count(), 2);
        let d = s.duality();
        assert!(d.anti_iso_order_reversing);
        assert!(d.self_dual_left.mapping.is_some());
    }

    #[test]
    fn generator_must_divide_delta() {
        // In ⟨a, b | a·b² = b²·a⟩ no power of b is divisible by a.
        let p = Presentation::new(
            vec!["a".into(), "b".into()],
            vec![(w(&[1, 2, 2]), w(&[2, 2, 1]))],
        )
        .unwrap();
        let err = build_structure_simple(&p, &Word::power(2, 4), &caps());
        assert!(matches!(
            err,
            Err(StructureError::NotGarsideElement(
                GarsideDefect::GeneratorNotDivisor(1)
            ))
        ));
    }

    #[test]
    fn complement_of_each_simple() {
        let s = m2();
        // complement of the identity is Δ and vice versa.
        let (post, pre) = s.complement_pair(0);
        assert_eq!(post, s.delta_index());
        assert_eq!(pre, s.delta_index());
        let (post, pre) = s.complement_pair(s.delta_index());
        assert_eq!(post, 0);
        assert_eq!(pre, 0);
        // complement of r2 is r2².
        let r2 = s.find_simple(&w(&[2])).unwrap().unwrap();
        let sq = s.find_simple(&w(&[2, 2])).unwrap().unwrap();
        assert_eq!(s.complement_pair(r2), (sq, sq));
        assert!(s.complements_coincide());
        // Arbitrary representatives work; non-divisors are rejected.
        assert_eq!(s.complement_of_word(&w(&[1, 2, 1])).unwrap(), (r2, r2));
        assert!(matches!(
            s.complement_of_word(&w(&[1, 1])),
            Err(StructureError::NotASimple)
        ));
    }

    #[test]
    fn centrality() {
        let s = m2();
        assert!(s.is_central(&Word::power(2, 3)).unwrap());
        assert!(s.is_central(&Word::empty()).unwrap());
        assert!(!s.is_central(&w(&[1])).unwrap());
    }

    #[test]
    fn normal_form_examples() {
        let s = m2();
        // r1·r2·r1·r2 ≡ Δ is a single factor.
        let nf = s.normal_form(&w(&[1, 2, 1, 2])).unwrap();
        assert_eq!(nf.factors, vec![s.delta_index()]);
        // The empty word has the empty normal form.
        assert!(s.normal_form(&Word::empty()).unwrap().is_identity());
        // r1·r1 is stuck as two atomic factors.
        let r1 = s.find_simple(&w(&[1])).unwrap().unwrap();
        let nf = s.normal_form(&w(&[1, 1])).unwrap();
        assert_eq!(nf.factors, vec![r1, r1]);
    }

    #[test]
    fn normal_form_is_idempotent_on_its_own_word() {
        let s = m2();
        for word in [
            w(&[1, 2, 1]),
            w(&[2, 2, 1, 1]),
            w(&[1, 1, 2, 2, 1]),
            w(&[2, 1, 2, 1, 2]),
        ] {
            let nf = s.normal_form(&word).unwrap();
            let again = s.normal_form(&s.nf_word(&nf)).unwrap();
            assert_eq!(nf, again);
        }
    }

    #[test]
    fn gcd_examples() {
        let s = m2();
        // gcd_L(Δ, s) = s for any simple.
        for i in 0..s.simple_count() {
            let g = s
                .gcd_left(&Word::power(2, 3), &s.simple_word(i).clone())
                .unwrap();
            assert!(s.words_equal(&g, s.simple_word(i)).unwrap());
        }
        // r1·r2 and r2·r1 have trivial left-gcd.
        let g = s.gcd_left(&w(&[1, 2]), &w(&[2, 1])).unwrap();
        assert!(g.is_empty());
        // Equal elements: their gcd is themselves.
        let g = s.gcd_left(&w(&[1, 2, 1]), &w(&[2, 2])).unwrap();
        assert!(s.words_equal(&g, &w(&[2, 2])).unwrap());
    }

    #[test]
    fn gcd_right_mirror() {
        let s = m2();
        let g = s.gcd_right(&w(&[1, 2]), &w(&[2, 2])).unwrap();
        // Common right-divisors of r1·r2 and r2² are 1 and r2 only.
        assert!(
            s.words_equal(&g, &w(&[2])).unwrap(),
            "got {}",
            s.base().word_string(&g)
        );
    }

    #[test]
    fn group_normalize_free_reduction() {
        let s = m2();
        let sw = SignedWord(vec![SignedLetter::pos(1), SignedLetter::neg(1)]);
        assert!(s.group_normalize(&sw).unwrap().is_identity());
    }

    #[test]
    fn group_normalize_fraction() {
        let s = m2();
        // r2⁻¹·r1·r2·r1 = r2⁻¹·r2² = r2.
        let sw = SignedWord(vec![
            SignedLetter::neg(2),
            SignedLetter::pos(1),
            SignedLetter::pos(2),
            SignedLetter::pos(1),
        ]);
        let e = s.group_normalize(&sw).unwrap();
        assert!(e.den.is_identity());
        let r2 = s.find_simple(&w(&[2])).unwrap().unwrap();
        assert_eq!(e.num.factors, vec![r2]);
    }

    #[test]
    fn group_equality_of_relation_sides() {
        let s = m2();
        let a = SignedWord::from_word(&w(&[1, 2, 1]));
        let b = SignedWord::from_word(&w(&[2, 2]));
        assert!(s.group_equal(&a, &b).unwrap());
        assert!(s.group_equal(&a, &a).unwrap());
    }

    #[test]
    fn duality_of_m2_is_self_dual() {
        let s = m2();
        let d = s.duality();
        assert!(d.anti_iso_order_reversing);
        assert!(d.self_dual_left.mapping.is_some());
        // The anti-isomorphism is involutive here because Δ is central.
        for i in 0..s.simple_count() {
            assert_eq!(d.anti_iso[d.anti_iso[i]], i);
        }
    }

    #[test]
    fn lattice_doc_and_dot_are_stable() {
        let s = m2();
        let doc = s.lattice_doc();
        assert_eq!(doc.simples.len(), 8);
        assert_eq!(doc.covers_l.len(), 9);
        let dot1 = s.lattice_dot();
        let dot2 = s.lattice_dot();
        assert_eq!(dot1, dot2);
        assert!(dot1.contains("s0 [label=\"1\"]"));
    }

    #[test]
    fn classical_braid_structure_on_three_strands() {
        // The positive braid monoid on two generators with Δ the half-twist:
        // six simples, and Δ² (not Δ) is central.
        let p = crate::families::braid_artin(2).unwrap();
        let s = build_structure_simple(&p, &w(&[1, 2, 1]), &caps()).unwrap();
        assert_eq!(s.simple_count(), 6);
        assert!(!s.is_central(s.delta()).unwrap());
        assert_eq!(s.minimal_central_delta_power().unwrap(), 2);
        // The torus-knot structures have central Δ already.
        assert_eq!(m2().minimal_central_delta_power().unwrap(), 1);
    }

    /// Independent route to the greedy head: extract gcd(w, Δ) by repeatedly
    /// testing simple divisibility, then compare with the pair-op normal form.
    #[test]
    fn normal_form_agrees_with_head_extraction() {
        let s = m2();
        let words = [
            w(&[1, 2, 1, 2, 1]),
            w(&[2, 2, 2, 1]),
            w(&[1, 1, 1]),
            w(&[2, 1, 1, 2]),
        ];
        for word in words {
            let nf = s.normal_form(&word).unwrap();
            // Reference: peel greedy heads off the front.
            let mut rest = word.clone();
            let mut factors = Vec::new();
            while !rest.is_empty() {
                let h = s.head_left(&rest).unwrap();
                assert_ne!(h, 0, "nonempty word must have a nontrivial head");
                factors.push(h);
                rest = s.quot_left(&s.simple_word(h).clone(), &rest).unwrap();
            }
            assert_eq!(nf.factors, factors);
        }
    }
}
