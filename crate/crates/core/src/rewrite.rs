//! Brute-force word-equivalence oracle for homogeneous presentations.
//!
//! Homogeneity makes every equivalence class finite, so exhausting a class by
//! breadth-first closure under single relation applications is a sound (if
//! slow) decision procedure. This module is the ground truth that the
//! reversing and lattice layers are tested against. A capped closure is
//! reported as [`OracleError::CapExceeded`], never as a negative answer.

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet, VecDeque};

use thiserror::Error;

use crate::kernel::{Letter, Presentation, PresentationError, Word};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("presentation has no homogeneous length function")]
    NoLengthFunction,
    #[error("equivalence closure exceeded the cap of {cap} words (inconclusive)")]
    CapExceeded { cap: usize },
}

impl From<PresentationError> for OracleError {
    fn from(e: PresentationError) -> Self {
        match e {
            PresentationError::NoLengthFunction => OracleError::NoLengthFunction,
            other => panic!("unexpected presentation error in oracle: {other}"),
        }
    }
}

/// The closure of a word under relation application, possibly truncated.
#[derive(Debug, Clone)]
pub struct EquivClass {
    pub seed: Word,
    /// ShortLex-ordered; the first element is the canonical representative.
    pub members: BTreeSet<Word>,
    /// True iff the cap was hit before the closure was complete.
    pub capped: bool,
}

impl EquivClass {
    pub fn min_rep(&self) -> &Word {
        self.members.iter().next().expect("class is never empty")
    }

    pub fn contains(&self, w: &Word) -> bool {
        self.members.contains(w)
    }
}

/// All words obtained from `w` by one application of one relation of `p`,
/// in either direction, at any position.
pub fn one_step_rewrites(p: &Presentation, w: &Word) -> Vec<Word> {
    let mut out = Vec::new();
    for r in p.relations() {
        for (from, to) in [(r.lhs(), r.rhs()), (r.rhs(), r.lhs())] {
            let f = from.letters();
            if f.len() > w.len() {
                continue;
            }
            for start in 0..=(w.len() - f.len()) {
                if &w.letters()[start..start + f.len()] == f {
                    let mut v = Vec::with_capacity(w.len() - f.len() + to.len());
                    v.extend_from_slice(&w.letters()[..start]);
                    v.extend_from_slice(to.letters());
                    v.extend_from_slice(&w.letters()[start + f.len()..]);
                    out.push(Word::from(v));
                }
            }
        }
    }
    out
}

/// Breadth-first closure of `{w}` under relation application.
pub fn equiv_class(p: &Presentation, w: &Word, cap: usize) -> Result<EquivClass, OracleError> {
    let lam = p.lambda_len(w)?;
    let mut members: BTreeSet<Word> = BTreeSet::new();
    members.insert(w.clone());
    let mut queue: VecDeque<Word> = VecDeque::new();
    queue.push_back(w.clone());
    let mut capped = false;
    'bfs: while let Some(cur) = queue.pop_front() {
        for next in one_step_rewrites(p, &cur) {
            debug_assert_eq!(p.lambda_len(&next).unwrap(), lam);
            if members.contains(&next) {
                continue;
            }
            if members.len() >= cap {
                capped = true;
                break 'bfs;
            }
            members.insert(next.clone());
            queue.push_back(next);
        }
    }
    Ok(EquivClass {
        seed: w.clone(),
        members,
        capped,
    })
}

/// ShortLex-minimal representative of the class of `w`.
pub fn canonical_rep(p: &Presentation, w: &Word, cap: usize) -> Result<Word, OracleError> {
    let class = equiv_class(p, w, cap)?;
    if class.capped {
        return Err(OracleError::CapExceeded { cap });
    }
    Ok(class.min_rep().clone())
}

/// Decides `u ≡ v` by bidirectional closure. Inconclusive cap hits are raised
/// as an error, never returned as `false`.
pub fn words_equal(p: &Presentation, u: &Word, v: &Word, cap: usize) -> Result<bool, OracleError> {
    if p.lambda_len(u)? != p.lambda_len(v)? {
        return Ok(false);
    }
    if u == v {
        return Ok(true);
    }
    let mut side_a = Frontier::new(u.clone());
    let mut side_b = Frontier::new(v.clone());
    loop {
        // A side with an exhausted frontier holds the entire class of its
        // seed; no meeting means the words differ.
        if side_a.frontier.is_empty() || side_b.frontier.is_empty() {
            return Ok(false);
        }
        let (grow, other) = if side_a.frontier.len() <= side_b.frontier.len() {
            (&mut side_a, &side_b)
        } else {
            (&mut side_b, &side_a)
        };
        if grow.expand(p, &other.all)? {
            return Ok(true);
        }
        if side_a.all.len() + side_b.all.len() > cap {
            return Err(OracleError::CapExceeded { cap });
        }
    }
}

struct Frontier {
    all: HashSet<Word>,
    frontier: Vec<Word>,
}

impl Frontier {
    fn new(seed: Word) -> Self {
        let mut all = HashSet::new();
        all.insert(seed.clone());
        Frontier {
            all,
            frontier: vec![seed],
        }
    }

    /// Expands one level; true iff a new word lies in `other`.
    fn expand(&mut self, p: &Presentation, other: &HashSet<Word>) -> Result<bool, OracleError> {
        let mut next = Vec::new();
        let mut met = false;
        for w in std::mem::take(&mut self.frontier) {
            for n in one_step_rewrites(p, &w) {
                if self.all.contains(&n) {
                    continue;
                }
                if other.contains(&n) {
                    met = true;
                }
                self.all.insert(n.clone());
                next.push(n);
            }
        }
        self.frontier = next;
        Ok(met)
    }
}

/// Searches for `z` with `u·z ≡ v`; the witness is ShortLex-minimal.
///
/// Every solution word `u·z` is literally a member of the class of `v`, so
/// the search scans that closure for members with `u` as a prefix.
pub fn left_divides(
    p: &Presentation,
    u: &Word,
    v: &Word,
    cap: usize,
) -> Result<Option<Word>, OracleError> {
    if p.lambda_len(u)? > p.lambda_len(v)? {
        return Ok(None);
    }
    let class = equiv_class(p, v, cap)?;
    if class.capped {
        return Err(OracleError::CapExceeded { cap });
    }
    let mut best: Option<Word> = None;
    for m in &class.members {
        if m.starts_with(u) {
            let z = Word::from_letters(&m.letters()[u.len()..]);
            if best.as_ref().is_none_or(|b| z < *b) {
                best = Some(z);
            }
        }
    }
    Ok(best)
}

/// Searches for `z` with `z·u ≡ v`; the witness is ShortLex-minimal.
pub fn right_divides(
    p: &Presentation,
    u: &Word,
    v: &Word,
    cap: usize,
) -> Result<Option<Word>, OracleError> {
    if p.lambda_len(u)? > p.lambda_len(v)? {
        return Ok(None);
    }
    let class = equiv_class(p, v, cap)?;
    if class.capped {
        return Err(OracleError::CapExceeded { cap });
    }
    let mut best: Option<Word> = None;
    for m in &class.members {
        if m.letters().ends_with(u.letters()) {
            let z = Word::from_letters(&m.letters()[..m.len() - u.len()]);
            if best.as_ref().is_none_or(|b| z < *b) {
                best = Some(z);
            }
        }
    }
    Ok(best)
}

/// A failed cancellation: `a·b ≡ a·c` (left) or `b·a ≡ c·a` (right) with
/// `b ≢ c`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CancellationWitness {
    pub side: crate::Side,
    pub a: Word,
    pub b: Word,
    pub c: Word,
}

/// Exhaustive cancellativity scan over all products `a·b` with
/// `λ(a·b) ≤ max_lambda`.
///
/// The whole λ-bounded universe of words is partitioned into equivalence
/// classes (complete within the universe, since rewriting preserves λ); a
/// counterexample is two members of one class sharing a literal prefix whose
/// suffixes lie in different classes, and dually for suffixes.
pub fn cancellativity_scan(
    p: &Presentation,
    max_lambda: u64,
    cap: usize,
) -> Result<Option<CancellationWitness>, OracleError> {
    let weights = p.lambda().ok_or(OracleError::NoLengthFunction)?.to_vec();
    let n = p.n_generators() as Letter;

    // Enumerate the universe.
    let mut universe: Vec<Word> = Vec::new();
    let mut stack: Vec<(Word, u64)> = vec![(Word::empty(), 0)];
    while let Some((w, lam)) = stack.pop() {
        if !w.is_empty() {
            universe.push(w.clone());
        }
        if universe.len() > cap {
            return Err(OracleError::CapExceeded { cap });
        }
        for g in 1..=n {
            let nl = lam + weights[(g - 1) as usize];
            if nl <= max_lambda {
                let mut next = w.clone();
                next.push(g);
                stack.push((next, nl));
            }
        }
    }
    universe.sort();
    let index: HashMap<Word, usize> = universe
        .iter()
        .enumerate()
        .map(|(i, w)| (w.clone(), i))
        .collect();

    // Union words connected by a single rewrite.
    let mut dsu = Dsu::new(universe.len());
    for (i, w) in universe.iter().enumerate() {
        for r in one_step_rewrites(p, w) {
            let j = *index.get(&r).expect("rewrites preserve lambda");
            dsu.union(i, j);
        }
    }
    // Canonical class id: the ShortLex-least member index.
    let mut class_id: Vec<usize> = (0..universe.len()).collect();
    for i in 0..universe.len() {
        let r = dsu.find(i);
        if i < class_id[r] {
            class_id[r] = i;
        }
    }
    let class_of = |i: usize, dsu: &mut Dsu| class_id[dsu.find(i)];

    // Left: same class, same literal prefix, inequivalent suffixes.
    let mut by_prefix: BTreeMap<(usize, Word), (usize, Word)> = BTreeMap::new();
    for (i, w) in universe.iter().enumerate() {
        let whole = class_of(i, &mut dsu);
        for k in 1..w.len() {
            let a = Word::from_letters(&w.letters()[..k]);
            let b = Word::from_letters(&w.letters()[k..]);
            let b_class = class_of(index[&b], &mut dsu);
            match by_prefix.get(&(whole, a.clone())) {
                None => {
                    by_prefix.insert((whole, a), (b_class, b));
                }
                Some((seen_class, seen_b)) => {
                    if *seen_class != b_class {
                        return Ok(Some(CancellationWitness {
                            side: crate::Side::Left,
                            a,
                            b: seen_b.clone(),
                            c: b,
                        }));
                    }
                }
            }
        }
    }

    // Right: same class, same literal suffix, inequivalent prefixes.
    let mut by_suffix: BTreeMap<(usize, Word), (usize, Word)> = BTreeMap::new();
    for (i, w) in universe.iter().enumerate() {
        let whole = class_of(i, &mut dsu);
        for k in 1..w.len() {
            let a = Word::from_letters(&w.letters()[k..]);
            let b = Word::from_letters(&w.letters()[..k]);
            let b_class = class_of(index[&b], &mut dsu);
            match by_suffix.get(&(whole, a.clone())) {
                None => {
                    by_suffix.insert((whole, a), (b_class, b));
                }
                Some((seen_class, seen_b)) => {
                    if *seen_class != b_class {
                        return Ok(Some(CancellationWitness {
                            side: crate::Side::Right,
                            a,
                            b: seen_b.clone(),
                            c: b,
                        }));
                    }
                }
            }
        }
    }

    Ok(None)
}

struct Dsu {
    parent: Vec<usize>,
}

impl Dsu {
    fn new(n: usize) -> Self {
        Dsu {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut i: usize) -> usize {
        while self.parent[i] != i {
            self.parent[i] = self.parent[self.parent[i]];
            i = self.parent[i];
        }
        i
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.parent[hi] = lo;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const CAP: usize = 100_000;

    fn w(letters: &[Letter]) -> Word {
        Word::from_letters(letters)
    }

    fn m2() -> Presentation {
        Presentation::new(
            vec!["r1".into(), "r2".into()],
            vec![(w(&[1, 2, 1]), w(&[2, 2]))],
        )
        .unwrap()
    }

    fn m3() -> Presentation {
        Presentation::new(
            vec!["r1".into(), "r2".into(), "r3".into()],
            vec![(w(&[1, 3, 1]), w(&[2, 3])), (w(&[1, 3, 2]), w(&[3, 3]))],
        )
        .unwrap()
    }

    #[test]
    fn class_of_delta_in_m2_has_three_members() {
        let p = m2();
        let class = equiv_class(&p, &w(&[2, 2, 2]), 100).unwrap();
        assert!(!class.capped);
        let expected: BTreeSet<Word> = [w(&[2, 2, 2]), w(&[1, 2, 1, 2]), w(&[2, 1, 2, 1])]
            .into_iter()
            .collect();
        assert_eq!(class.members, expected);
    }

    #[test]
    fn class_of_empty_word_is_singleton() {
        let p = m2();
        let class = equiv_class(&p, &Word::empty(), 10).unwrap();
        assert_eq!(class.members.len(), 1);
    }

    #[test]
    fn class_applies_defining_relation() {
        let p = m3();
        let class = equiv_class(&p, &w(&[1, 3, 1]), 100).unwrap();
        assert!(class.contains(&w(&[2, 3])));
    }

    #[test]
    fn words_equal_on_garside_element_forms() {
        let p = m3();
        // (r1·r3)³ ≡ r3⁴.
        assert!(words_equal(&p, &w(&[1, 3, 1, 3, 1, 3]), &Word::power(3, 4), CAP).unwrap());
        // r1·r2·r1 is inert in the n = 3 monoid.
        assert!(!words_equal(&p, &w(&[1, 2, 1]), &w(&[2, 2]), CAP).unwrap());
        let u = w(&[3, 1, 2]);
        assert!(words_equal(&p, &u, &u, CAP).unwrap());
        // And its class really is a singleton.
        assert_eq!(equiv_class(&p, &w(&[1, 2, 1]), CAP).unwrap().members.len(), 1);
    }

    #[test]
    fn divisibility_with_witness() {
        let p = m3();
        // r1·(r3·r2) ≡ r3² by the defining relation.
        let z = left_divides(&p, &w(&[1]), &w(&[3, 3]), CAP).unwrap();
        assert_eq!(z, Some(w(&[3, 2])));
        // The identity divides everything, with the minimal representative as witness.
        let z = left_divides(&p, &Word::empty(), &w(&[1, 3, 1]), CAP).unwrap();
        assert_eq!(z, Some(w(&[2, 3])));
        // r1 does not left-divide r2 in the two-generator monoid.
        let p2 = m2();
        assert_eq!(left_divides(&p2, &w(&[1]), &w(&[2]), CAP).unwrap(), None);
    }

    #[test]
    fn right_divisibility() {
        let p = m3();
        // r3² = r1·r3·r2, so r2 right-divides r3².
        let z = right_divides(&p, &w(&[2]), &w(&[3, 3]), CAP).unwrap();
        assert_eq!(z, Some(w(&[1, 3])));
        assert_eq!(right_divides(&p, &w(&[1]), &w(&[3, 3]), CAP).unwrap(), None);
    }

    #[test]
    fn scan_finds_no_counterexample_in_cancellative_monoids() {
        let p = m2();
        assert_eq!(cancellativity_scan(&p, 8, CAP).unwrap(), None);
        let free = Presentation::new(vec!["a".into(), "b".into()], vec![]).unwrap();
        assert_eq!(cancellativity_scan(&free, 6, CAP).unwrap(), None);
    }

    #[test]
    fn scan_detects_a_non_cancellative_monoid() {
        // ⟨a, b | a·b = b·b⟩: a·b ≡ b·b with a ≢ b.
        let p = Presentation::new(
            vec!["a".into(), "b".into()],
            vec![(w(&[1, 2]), w(&[2, 2]))],
        )
        .unwrap();
        let witness = cancellativity_scan(&p, 4, CAP).unwrap();
        let witness = witness.expect("right cancellation fails");
        assert_eq!(witness.side, crate::Side::Right);
    }

    #[test]
    fn equivalence_is_transitive_on_samples() {
        let p = m2();
        let sample = [
            w(&[2, 2, 2]),
            w(&[1, 2, 1, 2]),
            w(&[2, 1, 2, 1]),
            w(&[1, 1, 2, 2]),
        ];
        for a in &sample {
            for b in &sample {
                for c in &sample {
                    let ab = words_equal(&p, a, b, CAP).unwrap();
                    let bc = words_equal(&p, b, c, CAP).unwrap();
                    let ac = words_equal(&p, a, c, CAP).unwrap();
                    if ab && bc {
                        assert!(ac);
                    }
                    assert_eq!(ab, words_equal(&p, b, a, CAP).unwrap());
                }
            }
        }
    }

    #[test]
    fn antisymmetry_of_divisibility() {
        let p = m2();
        let u = w(&[1, 2]);
        let v = w(&[2, 1]);
        let uv = left_divides(&p, &u, &v, CAP).unwrap();
        let vu = left_divides(&p, &v, &u, CAP).unwrap();
        assert!(uv.is_none() && vu.is_none());
    }
}
