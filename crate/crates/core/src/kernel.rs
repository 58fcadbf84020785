//! Words, relations and validated monoid presentations.
//!
//! Everything downstream operates on [`Word`]s over a fixed alphabet of
//! 1-based generator indices. Display names are cosmetic; equality is index
//! equality. A [`Presentation`] is immutable once constructed and carries the
//! inferred homogeneous length function when one exists.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// 1-based index of a generator within its alphabet.
pub type Letter = u16;

/// A word over a generator alphabet. The empty word is the monoid identity.
///
/// `Ord` is ShortLex: first by letter count, then lexicographically. This is
/// the canonical ordering used for representatives everywhere in the crate.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Word(pub Vec<Letter>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn letter(g: Letter) -> Self {
        Word(vec![g])
    }

    pub fn from_letters(letters: &[Letter]) -> Self {
        Word(letters.to_vec())
    }

    /// `g^k` as a word.
    pub fn power(g: Letter, k: usize) -> Self {
        Word(vec![g; k])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = Vec::with_capacity(self.0.len() + other.0.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn push(&mut self, g: Letter) {
        self.0.push(g);
    }

    pub fn reversed(&self) -> Word {
        let mut v = self.0.clone();
        v.reverse();
        Word(v)
    }

    pub fn starts_with(&self, prefix: &Word) -> bool {
        self.0.starts_with(&prefix.0)
    }

    /// Concatenation of several words.
    pub fn join(parts: &[&Word]) -> Word {
        let mut v = Vec::new();
        for p in parts {
            v.extend_from_slice(&p.0);
        }
        Word(v)
    }
}

impl From<Vec<Letter>> for Word {
    fn from(v: Vec<Letter>) -> Self {
        Word(v)
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "w{:?}", self.0)
    }
}

/// One letter of a group word: a generator or its formal inverse.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct SignedLetter {
    pub gen: Letter,
    pub inverse: bool,
}

impl SignedLetter {
    pub fn pos(gen: Letter) -> Self {
        SignedLetter { gen, inverse: false }
    }

    pub fn neg(gen: Letter) -> Self {
        SignedLetter { gen, inverse: true }
    }

    pub fn inverted(self) -> Self {
        SignedLetter {
            gen: self.gen,
            inverse: !self.inverse,
        }
    }
}

/// A word in the generators and their formal inverses.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct SignedWord(pub Vec<SignedLetter>);

impl SignedWord {
    pub fn empty() -> Self {
        SignedWord(Vec::new())
    }

    pub fn from_word(w: &Word) -> Self {
        SignedWord(w.letters().iter().map(|&g| SignedLetter::pos(g)).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn inverse(&self) -> SignedWord {
        SignedWord(self.0.iter().rev().map(|l| l.inverted()).collect())
    }

    pub fn concat(&self, other: &SignedWord) -> SignedWord {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        SignedWord(v)
    }

    /// Cancels adjacent `g g⁻¹` pairs until none remain.
    pub fn free_reduce(&self) -> SignedWord {
        let mut out: Vec<SignedLetter> = Vec::with_capacity(self.0.len());
        for &l in &self.0 {
            match out.last() {
                Some(&top) if top.gen == l.gen && top.inverse != l.inverse => {
                    out.pop();
                }
                _ => out.push(l),
            }
        }
        SignedWord(out)
    }

    /// Substitutes `images[g-1]` for each positive letter `g` (and the inverse
    /// image for each negative letter), without free reduction.
    pub fn substitute(&self, images: &[SignedWord]) -> SignedWord {
        let mut out = SignedWord::empty();
        for &l in &self.0 {
            let img = &images[(l.gen - 1) as usize];
            if l.inverse {
                out = out.concat(&img.inverse());
            } else {
                out = out.concat(img);
            }
        }
        out
    }
}

/// A defining relation `lhs = rhs` between two nonempty positive words.
///
/// Relations are stored with a deterministic orientation: the side whose first
/// letter is smaller comes first (ties broken ShortLex on the whole words).
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Relation {
    lhs: Word,
    rhs: Word,
}

impl Relation {
    fn oriented(a: Word, b: Word) -> Relation {
        let swap = match b.letters()[0].cmp(&a.letters()[0]) {
            Ordering::Less => true,
            Ordering::Greater => false,
            Ordering::Equal => b < a,
        };
        if swap {
            Relation { lhs: b, rhs: a }
        } else {
            Relation { lhs: a, rhs: b }
        }
    }

    pub fn lhs(&self) -> &Word {
        &self.lhs
    }

    pub fn rhs(&self) -> &Word {
        &self.rhs
    }

    pub fn sides(&self) -> (&Word, &Word) {
        (&self.lhs, &self.rhs)
    }
}

/// Reason a presentation fails to be right-complemented.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum RcViolation {
    /// A relation of the form `s… = s…`.
    SameInitial { relation: usize },
    /// Two relations whose sides start with the same unordered generator pair.
    DuplicatePair { first: usize, second: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PresentationError {
    #[error("alphabet must be nonempty")]
    EmptyAlphabet,
    #[error("duplicate generator name `{0}`")]
    DuplicateGenerator(String),
    #[error("malformed relation #{index}: {reason}")]
    MalformedRelation { index: usize, reason: String },
    #[error("presentation has no homogeneous length function")]
    NoLengthFunction,
}

/// A validated monoid presentation.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Presentation {
    names: Vec<String>,
    relations: Vec<Relation>,
    lambda: Option<Vec<u64>>,
}

impl Presentation {
    /// Validates the alphabet and relations and infers the length function.
    ///
    /// `lambda` is the minimal positive integer solution of the homogeneity
    /// system when one exists, and absent otherwise; operations that rely on
    /// Noetherian divisibility refuse to run without it.
    pub fn new(
        names: Vec<String>,
        relations: Vec<(Word, Word)>,
    ) -> Result<Presentation, PresentationError> {
        Self::with_lambda(names, relations, None)
    }

    /// Like [`Presentation::new`] but with caller-supplied generator weights,
    /// which are checked for homogeneity instead of inferred.
    pub fn with_lambda(
        names: Vec<String>,
        relations: Vec<(Word, Word)>,
        given: Option<Vec<u64>>,
    ) -> Result<Presentation, PresentationError> {
        if names.is_empty() {
            return Err(PresentationError::EmptyAlphabet);
        }
        for (i, n) in names.iter().enumerate() {
            if names[..i].contains(n) {
                return Err(PresentationError::DuplicateGenerator(n.clone()));
            }
        }
        let n_gens = names.len();
        let mut oriented: Vec<Relation> = Vec::with_capacity(relations.len());
        for (index, (a, b)) in relations.into_iter().enumerate() {
            for side in [&a, &b] {
                if side.is_empty() {
                    return Err(PresentationError::MalformedRelation {
                        index,
                        reason: "relation side is empty".into(),
                    });
                }
                for &g in side.letters() {
                    if g == 0 || g as usize > n_gens {
                        return Err(PresentationError::MalformedRelation {
                            index,
                            reason: format!("unknown generator index {g}"),
                        });
                    }
                }
            }
            if a == b {
                // A trivial relation carries no information; drop it.
                continue;
            }
            let rel = Relation::oriented(a, b);
            if !oriented.contains(&rel) {
                oriented.push(rel);
            }
        }
        let lambda = match given {
            Some(weights) => {
                if weights.len() != n_gens {
                    return Err(PresentationError::MalformedRelation {
                        index: 0,
                        reason: "weight list length does not match alphabet".into(),
                    });
                }
                if weights.contains(&0) {
                    return Err(PresentationError::NoLengthFunction);
                }
                for (index, r) in oriented.iter().enumerate() {
                    let weigh = |w: &Word| -> u64 {
                        w.letters().iter().map(|&g| weights[(g - 1) as usize]).sum()
                    };
                    if weigh(&r.lhs) != weigh(&r.rhs) {
                        return Err(PresentationError::MalformedRelation {
                            index,
                            reason: "supplied weights are not homogeneous".into(),
                        });
                    }
                }
                Some(weights)
            }
            None => infer_lambda(n_gens, &oriented),
        };
        Ok(Presentation {
            names,
            relations: oriented,
            lambda,
        })
    }

    pub fn n_generators(&self) -> usize {
        self.names.len()
    }

    /// All generator indices, `1..=n`.
    pub fn generators(&self) -> impl Iterator<Item = Letter> + '_ {
        1..=self.names.len() as Letter
    }

    pub fn generator_name(&self, g: Letter) -> &str {
        &self.names[(g - 1) as usize]
    }

    pub fn generator_names(&self) -> &[String] {
        &self.names
    }

    pub fn relations(&self) -> &[Relation] {
        &self.relations
    }

    pub fn lambda(&self) -> Option<&[u64]> {
        self.lambda.as_deref()
    }

    /// Length of `w` under the homogeneous length function.
    pub fn lambda_len(&self, w: &Word) -> Result<u64, PresentationError> {
        let weights = self
            .lambda
            .as_ref()
            .ok_or(PresentationError::NoLengthFunction)?;
        Ok(w.letters().iter().map(|&g| weights[(g - 1) as usize]).sum())
    }

    /// Checks the right-complementedness hypothesis: no `s… = s…` relation and
    /// at most one relation per unordered pair of distinct initial generators.
    /// Relation sides are nonempty by construction.
    pub fn right_complemented_violation(&self) -> Option<RcViolation> {
        let mut seen: Vec<(Letter, Letter, usize)> = Vec::new();
        for (i, r) in self.relations.iter().enumerate() {
            let s = r.lhs.letters()[0];
            let t = r.rhs.letters()[0];
            if s == t {
                return Some(RcViolation::SameInitial { relation: i });
            }
            let key = (s.min(t), s.max(t));
            if let Some(&(_, _, first)) = seen.iter().find(|&&(a, b, _)| (a, b) == key) {
                return Some(RcViolation::DuplicatePair { first, second: i });
            }
            seen.push((key.0, key.1, i));
        }
        None
    }

    pub fn is_right_complemented(&self) -> bool {
        self.right_complemented_violation().is_none()
    }

    /// The opposite presentation: every relation side reversed letterwise.
    /// The alphabet and weights are unchanged; renaming is the caller's
    /// concern via display names.
    pub fn opposite(&self) -> Presentation {
        let relations = self
            .relations
            .iter()
            .map(|r| Relation::oriented(r.lhs.reversed(), r.rhs.reversed()))
            .collect();
        Presentation {
            names: self.names.clone(),
            relations,
            lambda: self.lambda.clone(),
        }
    }

    /// Same alphabet and weights, different display names.
    pub fn renamed(&self, names: Vec<String>) -> Result<Presentation, PresentationError> {
        if names.len() != self.names.len() {
            return Err(PresentationError::EmptyAlphabet);
        }
        Ok(Presentation {
            names,
            relations: self.relations.clone(),
            lambda: self.lambda.clone(),
        })
    }

    /// Union of the relation sets of `self` and `extra` (same alphabet).
    /// Exact duplicates are dropped; the length function is re-derived.
    pub fn merged_with(&self, extra: &Presentation) -> Result<Presentation, PresentationError> {
        let mut rels: Vec<(Word, Word)> = self
            .relations
            .iter()
            .chain(extra.relations.iter())
            .map(|r| (r.lhs.clone(), r.rhs.clone()))
            .collect();
        rels.dedup();
        Presentation::new(self.names.clone(), rels)
    }

    /// Renders a word with the presentation's display names, `·`-separated.
    pub fn word_string(&self, w: &Word) -> String {
        if w.is_empty() {
            return "1".to_string();
        }
        w.letters()
            .iter()
            .map(|&g| self.generator_name(g))
            .collect::<Vec<_>>()
            .join("·")
    }

    /// Renders a signed word, marking inverses with a trailing `⁻¹`.
    pub fn signed_word_string(&self, w: &SignedWord) -> String {
        if w.is_empty() {
            return "1".to_string();
        }
        w.0.iter()
            .map(|l| {
                let name = self.generator_name(l.gen);
                if l.inverse {
                    format!("{name}⁻¹")
                } else {
                    name.to_string()
                }
            })
            .collect::<Vec<_>>()
            .join("·")
    }

    pub fn to_doc(&self) -> PresentationDoc {
        PresentationDoc {
            generators: self
                .names
                .iter()
                .enumerate()
                .map(|(i, name)| GeneratorDoc {
                    name: name.clone(),
                    lambda: self.lambda.as_ref().map(|l| l[i]),
                })
                .collect(),
            relations: self
                .relations
                .iter()
                .map(|r| RelationDoc {
                    lhs: r.lhs.letters().to_vec(),
                    rhs: r.rhs.letters().to_vec(),
                })
                .collect(),
        }
    }

    pub fn from_doc(doc: PresentationDoc) -> Result<Presentation, PresentationError> {
        let names = doc.generators.iter().map(|g| g.name.clone()).collect();
        let given: Option<Vec<u64>> = if doc.generators.iter().all(|g| g.lambda.is_some()) {
            Some(doc.generators.iter().map(|g| g.lambda.unwrap()).collect())
        } else {
            None
        };
        let relations = doc
            .relations
            .into_iter()
            .map(|r| (Word(r.lhs), Word(r.rhs)))
            .collect();
        Presentation::with_lambda(names, relations, given)
    }
}

/// Interchange form of a presentation, the canonical JSON schema of the CLI.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PresentationDoc {
    pub generators: Vec<GeneratorDoc>,
    pub relations: Vec<RelationDoc>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GeneratorDoc {
    pub name: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lambda: Option<u64>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct RelationDoc {
    pub lhs: Vec<Letter>,
    pub rhs: Vec<Letter>,
}

type Rat = BigRational;

/// Minimal positive integer solution of the homogeneity system, if any.
///
/// Each relation contributes the linear constraint λ(lhs) = λ(rhs). The system
/// is solved over the rationals; a strictly positive point of the solution
/// space is sought by Fourier–Motzkin elimination over the free variables,
/// then scaled to the primitive integer vector. Free variables are minimized
/// greedily in index order, which pins the result deterministically (and gives
/// the unique minimal solution when the solution space is one-dimensional).
#[allow(clippy::needless_range_loop)]
fn infer_lambda(n_gens: usize, relations: &[Relation]) -> Option<Vec<u64>> {
    // Difference of letter counts per relation.
    let mut rows: Vec<Vec<Rat>> = Vec::new();
    for r in relations {
        let mut row = vec![Rat::zero(); n_gens];
        for &g in r.lhs().letters() {
            row[(g - 1) as usize] += Rat::one();
        }
        for &g in r.rhs().letters() {
            row[(g - 1) as usize] -= Rat::one();
        }
        if row.iter().any(|c| !c.is_zero()) {
            rows.push(row);
        }
    }

    // Reduced row echelon form; record pivot columns.
    let mut pivots: Vec<usize> = Vec::new();
    let mut rank = 0usize;
    for col in 0..n_gens {
        let Some(pr) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pr);
        let inv = rows[rank][col].clone();
        for c in col..n_gens {
            let v = rows[rank][c].clone() / inv.clone();
            rows[rank][c] = v;
        }
        for r in 0..rows.len() {
            if r != rank && !rows[r][col].is_zero() {
                let f = rows[r][col].clone();
                for c in col..n_gens {
                    let sub = rows[rank][c].clone() * f.clone();
                    rows[r][c] -= sub;
                }
            }
        }
        pivots.push(col);
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }

    let free: Vec<usize> = (0..n_gens).filter(|c| !pivots.contains(c)).collect();
    if free.is_empty() {
        // Only the zero solution.
        return None;
    }

    // Pivot variable col = Σ over free f of (-coeff) · y_f.
    let pivot_expr: Vec<(usize, Vec<Rat>)> = pivots
        .iter()
        .enumerate()
        .map(|(r, &col)| {
            let coeffs = free.iter().map(|&f| -rows[r][f].clone()).collect();
            (col, coeffs)
        })
        .collect();

    // Constraints Σ a·y ≥ rhs over the free variables: every pivot ≥ 1 and
    // every free variable ≥ 1.
    let d = free.len();
    let mut constraints: Vec<(Vec<Rat>, Rat)> = Vec::new();
    for (_, coeffs) in &pivot_expr {
        constraints.push((coeffs.clone(), Rat::one()));
    }
    for j in 0..d {
        let mut a = vec![Rat::zero(); d];
        a[j] = Rat::one();
        constraints.push((a, Rat::one()));
    }

    // Fourier–Motzkin elimination, highest variable first.
    struct Level {
        var: usize,
        lowers: Vec<(Vec<Rat>, Rat)>,
        uppers: Vec<(Vec<Rat>, Rat)>,
    }
    const FM_ROW_CAP: usize = 200_000;
    let mut levels: Vec<Level> = Vec::new();
    let mut current = constraints;
    for var in (0..d).rev() {
        let mut lowers = Vec::new();
        let mut uppers = Vec::new();
        let mut rest = Vec::new();
        for (a, rhs) in current {
            if a[var].is_positive() {
                lowers.push((a, rhs));
            } else if a[var].is_negative() {
                uppers.push((a, rhs));
            } else {
                rest.push((a, rhs));
            }
        }
        if lowers.len() * uppers.len() + rest.len() > FM_ROW_CAP {
            // Give up on pathological systems rather than loop forever.
            return None;
        }
        for (al, rl) in &lowers {
            for (au, ru) in &uppers {
                // Scale so the `var` coefficients cancel; both scalars positive.
                let sl = -au[var].clone();
                let su = al[var].clone();
                let mut a = vec![Rat::zero(); d];
                for k in 0..var {
                    a[k] = al[k].clone() * sl.clone() + au[k].clone() * su.clone();
                }
                let rhs = rl.clone() * sl + ru.clone() * su;
                rest.push((a, rhs));
            }
        }
        levels.push(Level { var, lowers, uppers });
        current = rest;
    }
    // Variable-free residue: 0 ≥ rhs must hold.
    if current.iter().any(|(_, rhs)| rhs.is_positive()) {
        return None;
    }

    // Back-substitute, smallest variable first, taking each variable at the
    // max of its lower bounds.
    let mut y = vec![Rat::zero(); d];
    for level in levels.iter().rev() {
        let var = level.var;
        let eval = |a: &[Rat], rhs: &Rat, y: &[Rat]| -> Rat {
            let mut acc = rhs.clone();
            for k in 0..var {
                acc -= a[k].clone() * y[k].clone();
            }
            acc / a[var].clone()
        };
        let mut best: Option<Rat> = None;
        for (a, rhs) in &level.lowers {
            let bound = eval(a, rhs, &y);
            if best.as_ref().is_none_or(|b| bound > *b) {
                best = Some(bound);
            }
        }
        let val = best.unwrap_or_else(Rat::one);
        debug_assert!(level
            .uppers
            .iter()
            .all(|(a, rhs)| { eval(a, rhs, &y) >= val }));
        y[var] = val;
    }

    // Assemble the full rational solution.
    let mut solution = vec![Rat::zero(); n_gens];
    for (j, &f) in free.iter().enumerate() {
        solution[f] = y[j].clone();
    }
    for (col, coeffs) in &pivot_expr {
        let mut acc = Rat::zero();
        for (j, c) in coeffs.iter().enumerate() {
            acc += c.clone() * y[j].clone();
        }
        solution[*col] = acc;
    }
    if solution.iter().any(|v| !v.is_positive()) {
        return None;
    }

    // Scale to the primitive positive integer vector.
    let mut scale = BigInt::one();
    for v in &solution {
        scale = lcm(&scale, v.denom());
    }
    let ints: Vec<BigInt> = solution
        .iter()
        .map(|v| (v * Rat::from_integer(scale.clone())).to_integer())
        .collect();
    let mut g = BigInt::zero();
    for v in &ints {
        g = gcd(&g, v);
    }
    let mut out = Vec::with_capacity(n_gens);
    for v in &ints {
        let reduced = v / &g;
        out.push(u64::try_from(reduced).ok()?);
    }
    Some(out)
}

fn gcd(a: &BigInt, b: &BigInt) -> BigInt {
    let mut a = a.abs();
    let mut b = b.abs();
    while !b.is_zero() {
        let r = &a % &b;
        a = b;
        b = r;
    }
    a
}

fn lcm(a: &BigInt, b: &BigInt) -> BigInt {
    if a.is_zero() || b.is_zero() {
        return BigInt::zero();
    }
    (a * b).abs() / gcd(a, b)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(letters: &[Letter]) -> Word {
        Word::from_letters(letters)
    }

    fn m2() -> Presentation {
        // ⟨r1, r2 | r1·r2·r1 = r2·r2⟩
        Presentation::new(
            vec!["r1".into(), "r2".into()],
            vec![(w(&[1, 2, 1]), w(&[2, 2]))],
        )
        .unwrap()
    }

    #[test]
    fn lambda_inference_two_generators() {
        let p = m2();
        assert_eq!(p.lambda(), Some(&[1, 2][..]));
    }

    #[test]
    fn lambda_free_monoid_is_all_ones() {
        let p = Presentation::new(vec!["g".into()], vec![]).unwrap();
        assert_eq!(p.lambda(), Some(&[1][..]));
        assert_eq!(p.lambda_len(&w(&[1, 1, 1])).unwrap(), 3);
    }

    #[test]
    fn lambda_absent_when_no_positive_solution() {
        // ab = ba² forces λ(a) = 0.
        let p = Presentation::new(
            vec!["a".into(), "b".into()],
            vec![(w(&[1, 2]), w(&[2, 1, 1]))],
        )
        .unwrap();
        assert_eq!(p.lambda(), None);
        assert!(matches!(
            p.lambda_len(&w(&[1])),
            Err(PresentationError::NoLengthFunction)
        ));
    }

    #[test]
    fn lambda_length_examples() {
        // In the n = 3 torus-knot monoid, λ(r1·r3·r2) = 3 + 2 + 1 = 6 = n+i+1.
        let p = Presentation::new(
            vec!["r1".into(), "r2".into(), "r3".into()],
            vec![
                (w(&[1, 3, 1]), w(&[2, 3])),
                (w(&[1, 3, 2]), w(&[3, 3])),
            ],
        )
        .unwrap();
        assert_eq!(p.lambda(), Some(&[1, 2, 3][..]));
        assert_eq!(p.lambda_len(&w(&[1, 3, 2])).unwrap(), 6);
        assert_eq!(p.lambda_len(&Word::empty()).unwrap(), 0);
        // r3⁴ and (r1·r3)³ have the same length 12.
        assert_eq!(p.lambda_len(&Word::power(3, 4)).unwrap(), 12);
        assert_eq!(p.lambda_len(&w(&[1, 3, 1, 3, 1, 3])).unwrap(), 12);
    }

    #[test]
    fn malformed_relations_are_rejected() {
        let err = Presentation::new(vec!["a".into()], vec![(Word::empty(), w(&[1]))]);
        assert!(matches!(
            err,
            Err(PresentationError::MalformedRelation { .. })
        ));
        let err = Presentation::new(vec!["a".into()], vec![(w(&[1]), w(&[2]))]);
        assert!(matches!(
            err,
            Err(PresentationError::MalformedRelation { .. })
        ));
        let err = Presentation::new(vec!["a".into(), "a".into()], vec![]);
        assert!(matches!(err, Err(PresentationError::DuplicateGenerator(_))));
    }

    #[test]
    fn orientation_is_normalized() {
        let p = Presentation::new(
            vec!["a".into(), "b".into()],
            vec![(w(&[2, 2]), w(&[1, 2, 1]))],
        )
        .unwrap();
        assert_eq!(p.relations()[0].lhs(), &w(&[1, 2, 1]));
        assert_eq!(p.relations()[0].rhs(), &w(&[2, 2]));
    }

    #[test]
    fn right_complemented_checks() {
        assert!(m2().is_right_complemented());
        let free = Presentation::new(vec!["a".into()], vec![]).unwrap();
        assert!(free.is_right_complemented());
        // Two relations on the same initial pair.
        let p = Presentation::new(
            vec!["a".into(), "b".into()],
            vec![(w(&[1, 2]), w(&[2, 1])), (w(&[1, 1, 2]), w(&[2, 2, 1]))],
        )
        .unwrap();
        assert!(matches!(
            p.right_complemented_violation(),
            Some(RcViolation::DuplicatePair { first: 0, second: 1 })
        ));
        let p = Presentation::new(
            vec!["a".into(), "b".into()],
            vec![(w(&[1, 2]), w(&[1, 1]))],
        )
        .unwrap();
        assert!(matches!(
            p.right_complemented_violation(),
            Some(RcViolation::SameInitial { relation: 0 })
        ));
    }

    #[test]
    fn opposite_is_an_involution() {
        let p = Presentation::new(
            vec!["r1".into(), "r2".into(), "r3".into()],
            vec![
                (w(&[1, 3, 1]), w(&[2, 3])),
                (w(&[1, 3, 2]), w(&[3, 3])),
                (w(&[2, 3, 3, 1]), w(&[3, 3, 3])),
            ],
        )
        .unwrap();
        assert_eq!(p.opposite().opposite(), p);
        // A palindromic relation is fixed by opposition.
        let q = m2();
        assert_eq!(q.opposite(), q);
    }

    #[test]
    fn shortlex_ordering() {
        let mut words = vec![w(&[2, 1]), w(&[1, 2]), w(&[3]), Word::empty(), w(&[1, 1])];
        words.sort();
        assert_eq!(
            words,
            vec![Word::empty(), w(&[3]), w(&[1, 1]), w(&[1, 2]), w(&[2, 1])]
        );
    }

    #[test]
    fn signed_word_free_reduction() {
        let sw = SignedWord(vec![
            SignedLetter::pos(1),
            SignedLetter::pos(2),
            SignedLetter::neg(2),
            SignedLetter::neg(1),
            SignedLetter::pos(3),
        ]);
        assert_eq!(sw.free_reduce(), SignedWord(vec![SignedLetter::pos(3)]));
        let ww = SignedWord::from_word(&w(&[1, 2]));
        assert!(ww.concat(&ww.inverse()).free_reduce().is_empty());
    }

    #[test]
    fn doc_round_trip() {
        let p = m2();
        let doc = p.to_doc();
        let q = Presentation::from_doc(doc).unwrap();
        assert_eq!(p, q);
    }
}
