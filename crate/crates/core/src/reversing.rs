//! Subword reversing: the syntactic right-complement of a right-complemented
//! presentation, its extension to words, the cube-condition checker, and
//! conditional lcms.
//!
//! For a right-complemented presentation there is a unique partial map θ on
//! generator pairs with `s·θ(s,t) = t·θ(t,s)` the relation joining `s` and
//! `t`, and `θ(s,s) = ε`. Reversing evaluates its unique minimal extension to
//! words. When the presentation is homogeneous and the cube condition holds on
//! all generator triples, `θ(u,v)` is defined exactly when `u` and `v` admit a
//! common right-multiple, and then `u·θ(u,v) = v·θ(v,u)` is their right-lcm;
//! in particular `u ≤_L v ⟺ θ(v,u) = ε`, which gives cheap syntactic
//! divisibility and equality tests.

use thiserror::Error;

use crate::kernel::{Letter, Presentation, RcViolation, Word};
use crate::rewrite::{self, OracleError};
use crate::Side;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReversingError {
    #[error("presentation is not right-complemented")]
    NotRightComplemented { violation: RcViolation },
    #[error("reversing exhausted its budget after {steps} lookups")]
    Diverged { steps: u64 },
}

/// The partial map θ on ordered generator pairs.
#[derive(Debug, Clone)]
pub struct ComplementTable {
    n: usize,
    entries: Vec<Option<Word>>,
}

impl ComplementTable {
    /// Populates the table from the relations of a right-complemented
    /// presentation. Pairs joined by no relation stay undefined.
    pub fn new(p: &Presentation) -> Result<ComplementTable, ReversingError> {
        if let Some(violation) = p.right_complemented_violation() {
            return Err(ReversingError::NotRightComplemented { violation });
        }
        let n = p.n_generators();
        let mut entries = vec![None; n * n];
        for s in 1..=n as Letter {
            entries[Self::slot(n, s, s)] = Some(Word::empty());
        }
        for r in p.relations() {
            let (lhs, rhs) = r.sides();
            let s = lhs.letters()[0];
            let t = rhs.letters()[0];
            entries[Self::slot(n, s, t)] = Some(Word::from_letters(&lhs.letters()[1..]));
            entries[Self::slot(n, t, s)] = Some(Word::from_letters(&rhs.letters()[1..]));
        }
        Ok(ComplementTable { n, entries })
    }

    fn slot(n: usize, s: Letter, t: Letter) -> usize {
        (s as usize - 1) * n + (t as usize - 1)
    }

    pub fn n_generators(&self) -> usize {
        self.n
    }

    /// θ(s,t) on generators; `None` when no relation joins the pair.
    pub fn entry(&self, s: Letter, t: Letter) -> Option<&Word> {
        self.entries[Self::slot(self.n, s, t)].as_ref()
    }
}

/// Result of evaluating the extended θ on a pair of words.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ThetaOutcome {
    Defined(Word),
    /// A missing table entry was reached: no common right-multiple.
    Undefined,
    /// The lookup budget ran out; semantically inconclusive.
    Diverged(u64),
}

impl ThetaOutcome {
    pub fn as_defined(&self) -> Option<&Word> {
        match self {
            ThetaOutcome::Defined(w) => Some(w),
            _ => None,
        }
    }

    pub fn is_diverged(&self) -> bool {
        matches!(self, ThetaOutcome::Diverged(_))
    }
}

/// Both complements of one reversal: `u·comp_u = v·comp_v` when complete.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ReversalOutcome {
    Complete { comp_u: Word, comp_v: Word },
    Undefined,
    Diverged(u64),
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Item {
    Pos(Letter),
    Neg(Letter),
}

/// Reverses the signed word `u⁻¹·v` to `comp_u·comp_v⁻¹`.
///
/// Deterministic leftmost strategy; the extension of θ is unique, so the
/// strategy affects only the budget, not the result. Each table lookup
/// consumes one unit of budget.
pub fn reverse_words(
    table: &ComplementTable,
    u: &Word,
    v: &Word,
    budget: u64,
) -> ReversalOutcome {
    let mut state: Vec<Item> = Vec::with_capacity(u.len() + v.len());
    state.extend(u.letters().iter().rev().map(|&g| Item::Neg(g)));
    state.extend(v.letters().iter().map(|&g| Item::Pos(g)));
    let mut steps: u64 = 0;
    let mut scan: usize = 0;
    loop {
        // Find the leftmost Neg·Pos boundary at or after `scan`; everything
        // before it is boundary-free by construction.
        let mut boundary = None;
        let mut i = scan;
        while i + 1 < state.len() {
            if let (Item::Neg(s), Item::Pos(t)) = (state[i], state[i + 1]) {
                boundary = Some((i, s, t));
                break;
            }
            i += 1;
        }
        let Some((i, s, t)) = boundary else {
            // Pos-block followed by Neg-block.
            let split = state.iter().position(|it| matches!(it, Item::Neg(_)));
            let split = split.unwrap_or(state.len());
            let comp_u = Word::from(
                state[..split]
                    .iter()
                    .map(|it| match it {
                        Item::Pos(g) => *g,
                        Item::Neg(_) => unreachable!(),
                    })
                    .collect::<Vec<_>>(),
            );
            let comp_v = Word::from(
                state[split..]
                    .iter()
                    .rev()
                    .map(|it| match it {
                        Item::Neg(g) => *g,
                        Item::Pos(_) => unreachable!(),
                    })
                    .collect::<Vec<_>>(),
            );
            return ReversalOutcome::Complete { comp_u, comp_v };
        };
        if steps + 2 > budget {
            return ReversalOutcome::Diverged(steps);
        }
        steps += 2;
        let (Some(st), Some(ts)) = (table.entry(s, t), table.entry(t, s)) else {
            return ReversalOutcome::Undefined;
        };
        let mut insert: Vec<Item> = Vec::with_capacity(st.len() + ts.len());
        insert.extend(st.letters().iter().map(|&g| Item::Pos(g)));
        insert.extend(ts.letters().iter().rev().map(|&g| Item::Neg(g)));
        state.splice(i..i + 2, insert);
        scan = i.saturating_sub(1);
    }
}

/// The extended complement θ(u,v).
pub fn theta(table: &ComplementTable, u: &Word, v: &Word, budget: u64) -> ThetaOutcome {
    match reverse_words(table, u, v, budget) {
        ReversalOutcome::Complete { comp_u, .. } => ThetaOutcome::Defined(comp_u),
        ReversalOutcome::Undefined => ThetaOutcome::Undefined,
        ReversalOutcome::Diverged(s) => ThetaOutcome::Diverged(s),
    }
}

/// Syntactic left-divisibility: `u ≤_L v ⟺ θ(v,u) = ε`.
///
/// Sound when the presentation is homogeneous and cube-verified. `Undefined`
/// means no common right-multiple, hence not a divisor.
pub fn divides_left(
    table: &ComplementTable,
    u: &Word,
    v: &Word,
    budget: u64,
) -> Result<bool, ReversingError> {
    match theta(table, v, u, budget) {
        ThetaOutcome::Defined(w) => Ok(w.is_empty()),
        ThetaOutcome::Undefined => Ok(false),
        ThetaOutcome::Diverged(steps) => Err(ReversingError::Diverged { steps }),
    }
}

/// Syntactic equality: both complements of the reversal of `(u,v)` empty.
pub fn reversal_equal(
    table: &ComplementTable,
    u: &Word,
    v: &Word,
    budget: u64,
) -> Result<bool, ReversingError> {
    match reverse_words(table, u, v, budget) {
        ReversalOutcome::Complete { comp_u, comp_v } => {
            Ok(comp_u.is_empty() && comp_v.is_empty())
        }
        ReversalOutcome::Undefined => Ok(false),
        ReversalOutcome::Diverged(steps) => Err(ReversingError::Diverged { steps }),
    }
}

/// How the two sides of a cube check are compared.
#[derive(Clone, Copy)]
pub enum CubeMode<'a> {
    /// Equal as literal words.
    Sharp,
    /// Equivalent under the relations, decided by the rewrite oracle.
    UpToEquivalence {
        oracle: &'a Presentation,
        cap: usize,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CubeFailure {
    pub triple: (Word, Word, Word),
    pub lhs: ThetaOutcome,
    pub rhs: ThetaOutcome,
}

impl CubeFailure {
    /// True when the failure is a budget exhaustion rather than a genuine
    /// mismatch.
    pub fn is_divergence(&self) -> bool {
        self.lhs.is_diverged() || self.rhs.is_diverged()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CubeVerdict {
    Pass,
    Fail(CubeFailure),
    /// The oracle comparison was capped; neither Pass nor Fail is justified.
    Inconclusive(String),
}

impl CubeVerdict {
    pub fn is_pass(&self) -> bool {
        matches!(self, CubeVerdict::Pass)
    }
}

/// Checks the θ-cube condition for one triple `(a,b,c)`:
/// `θ(θ(a,b), θ(a,c))` and `θ(θ(b,a), θ(b,c))` must be both undefined, or both
/// defined and equal (sharp) / equivalent (oracle mode).
pub fn cube_condition(
    table: &ComplementTable,
    triple: (&Word, &Word, &Word),
    mode: CubeMode<'_>,
    budget: u64,
) -> CubeVerdict {
    let (a, b, c) = triple;
    let lhs = nested_theta(table, a, b, c, budget);
    let rhs = nested_theta(table, b, a, c, budget);
    let fail = |lhs: ThetaOutcome, rhs: ThetaOutcome| {
        CubeVerdict::Fail(CubeFailure {
            triple: (a.clone(), b.clone(), c.clone()),
            lhs,
            rhs,
        })
    };
    match (&lhs, &rhs) {
        (ThetaOutcome::Diverged(_), _) | (_, ThetaOutcome::Diverged(_)) => fail(lhs, rhs),
        (ThetaOutcome::Undefined, ThetaOutcome::Undefined) => CubeVerdict::Pass,
        (ThetaOutcome::Defined(x), ThetaOutcome::Defined(y)) => match mode {
            CubeMode::Sharp => {
                if x == y {
                    CubeVerdict::Pass
                } else {
                    fail(lhs, rhs)
                }
            }
            CubeMode::UpToEquivalence { oracle, cap } => {
                match rewrite::words_equal(oracle, x, y, cap) {
                    Ok(true) => CubeVerdict::Pass,
                    Ok(false) => fail(lhs, rhs),
                    Err(OracleError::CapExceeded { cap }) => CubeVerdict::Inconclusive(format!(
                        "oracle comparison capped at {cap} words"
                    )),
                    Err(OracleError::NoLengthFunction) => {
                        CubeVerdict::Inconclusive("oracle needs a homogeneous presentation".into())
                    }
                }
            }
        },
        _ => fail(lhs, rhs),
    }
}

/// θ(θ(a,b), θ(a,c)) with budget shared across the three evaluations.
fn nested_theta(
    table: &ComplementTable,
    a: &Word,
    b: &Word,
    c: &Word,
    budget: u64,
) -> ThetaOutcome {
    let ab = match theta(table, a, b, budget) {
        ThetaOutcome::Defined(w) => w,
        other => return other,
    };
    let ac = match theta(table, a, c, budget) {
        ThetaOutcome::Defined(w) => w,
        other => return other,
    };
    theta(table, &ab, &ac, budget)
}

/// Result of a sweep over all ordered triples of pairwise distinct generators.
#[derive(Debug, Clone)]
pub struct CubeReport {
    pub verdicts: Vec<((Letter, Letter, Letter), CubeVerdict)>,
}

impl CubeReport {
    pub fn all_pass(&self) -> bool {
        self.verdicts.iter().all(|(_, v)| v.is_pass())
    }

    pub fn first_failure(&self) -> Option<&((Letter, Letter, Letter), CubeVerdict)> {
        self.verdicts
            .iter()
            .find(|(_, v)| matches!(v, CubeVerdict::Fail(_)))
    }

    pub fn any_inconclusive(&self) -> bool {
        self.verdicts
            .iter()
            .any(|(_, v)| matches!(v, CubeVerdict::Inconclusive(_)))
    }
}

/// Runs the cube check over every ordered triple of pairwise distinct
/// generators, in lexicographic order.
pub fn cube_all_generator_triples(
    table: &ComplementTable,
    mode: CubeMode<'_>,
    budget: u64,
) -> CubeReport {
    let n = table.n_generators() as Letter;
    let mut verdicts = Vec::new();
    for a in 1..=n {
        for b in 1..=n {
            for c in 1..=n {
                if a == b || b == c || a == c {
                    continue;
                }
                let (wa, wb, wc) = (Word::letter(a), Word::letter(b), Word::letter(c));
                let verdict = cube_condition(table, (&wa, &wb, &wc), mode, budget);
                verdicts.push(((a, b, c), verdict));
            }
        }
    }
    CubeReport { verdicts }
}

/// A computed lcm together with the complements into it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LcmResult {
    pub lcm: Word,
    pub comp_u: Word,
    pub comp_v: Word,
}

/// Right-lcm via reversing: `Some(u·θ(u,v), θ(u,v), θ(v,u))` when defined,
/// `None` when the pair has no common right-multiple.
pub fn right_lcm(
    table: &ComplementTable,
    u: &Word,
    v: &Word,
    budget: u64,
) -> Result<Option<LcmResult>, ReversingError> {
    match reverse_words(table, u, v, budget) {
        ReversalOutcome::Complete { comp_u, comp_v } => Ok(Some(LcmResult {
            lcm: u.concat(&comp_u),
            comp_u,
            comp_v,
        })),
        ReversalOutcome::Undefined => Ok(None),
        ReversalOutcome::Diverged(steps) => Err(ReversingError::Diverged { steps }),
    }
}

/// Left-lcm computed in the opposite presentation on reversed words; the
/// result satisfies `comp_u·u = comp_v·v = lcm`.
///
/// The opposite of `p` must itself be right-complemented (and cube-verified
/// for the result to be meaningful); callers with a presentation whose
/// opposite is not right-complemented must supply a different presentation of
/// the same monoid.
pub fn left_lcm(
    p: &Presentation,
    u: &Word,
    v: &Word,
    budget: u64,
) -> Result<Option<LcmResult>, ReversingError> {
    let op = ComplementTable::new(&p.opposite())?;
    left_lcm_with(&op, u, v, budget)
}

/// Like [`left_lcm`], with the opposite-presentation table supplied directly.
pub fn left_lcm_with(
    op_table: &ComplementTable,
    u: &Word,
    v: &Word,
    budget: u64,
) -> Result<Option<LcmResult>, ReversingError> {
    match right_lcm(op_table, &u.reversed(), &v.reversed(), budget)? {
        Some(r) => Ok(Some(LcmResult {
            lcm: r.lcm.reversed(),
            comp_u: r.comp_u.reversed(),
            comp_v: r.comp_v.reversed(),
        })),
        None => Ok(None),
    }
}

/// Iterated pairwise lcm of all generators, folded in index order.
/// `None` if some pair admits no common multiple.
pub fn atoms_lcm(
    p: &Presentation,
    side: Side,
    budget: u64,
) -> Result<Option<Word>, ReversingError> {
    let gens: Vec<Word> = p.generators().map(Word::letter).collect();
    match side {
        Side::Right => {
            let table = ComplementTable::new(p)?;
            let mut acc = gens[0].clone();
            for g in &gens[1..] {
                match right_lcm(&table, &acc, g, budget)? {
                    Some(r) => acc = r.lcm,
                    None => return Ok(None),
                }
            }
            Ok(Some(acc))
        }
        Side::Left => {
            let op = ComplementTable::new(&p.opposite())?;
            let mut acc = gens[0].clone();
            for g in &gens[1..] {
                match left_lcm_with(&op, &acc, g, budget)? {
                    Some(r) => acc = r.lcm,
                    None => return Ok(None),
                }
            }
            Ok(Some(acc))
        }
    }
}
