//! Garside-theoretic computations for finitely presented monoids.
//!
//! The crate is organized around a small set of layers:
//!
//! * [`kernel`] — words, relations and validated presentations, including the
//!   homogeneous length function that makes divisibility Noetherian.
//! * [`rewrite`] — a brute-force word-equivalence oracle for homogeneous
//!   presentations, by exhaustive closure of equivalence classes. Slow but
//!   trustworthy; everything faster is tested against it.
//! * [`reversing`] — the syntactic right-complement of a right-complemented
//!   presentation, its extension to words (subword reversing), the cube
//!   condition checker, and conditional lcms.
//! * [`garside`] — divisor lattices of a Garside element, greedy normal
//!   forms, gcds, lattice duality, and the word problem in the group of
//!   fractions via irreducible left fractions.
//! * [`families`] — constructors for the torus-knot, braid-quotient and
//!   dihedral monoid families studied here, plus homomorphism verifiers.
//! * [`braidref`] — an independent classical braid-group oracle based on
//!   permutation braids, used to decide braid-word equality without touching
//!   the machinery under test.
//! * [`cosets`] — Todd–Coxeter coset enumeration for the finite quotients.

pub mod braidref;
pub mod cosets;
pub mod families;
pub mod garside;
pub mod kernel;
pub mod reversing;
pub mod rewrite;

/// Which side of a divisibility, lcm, or cancellation statement is meant.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// Resource limits shared across the oracle and reversing layers.
///
/// The limits exist to turn non-termination into a reported outcome: a capped
/// closure or an exhausted reversing budget is always surfaced as a distinct
/// result, never conflated with a negative answer.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Caps {
    /// Maximum number of words a single equivalence-class closure may hold.
    pub class_cap: usize,
    /// Maximum number of complement-table lookups per reversing evaluation.
    pub theta_budget: u64,
    /// Maximum number of coset-table rows allocated during an enumeration.
    pub max_cosets: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            class_cap: 1_000_000,
            theta_budget: 100_000,
            max_cosets: 100_000,
        }
    }
}

impl Caps {
    /// Uniformly scaled-up limits for structure builds on larger alphabets.
    pub fn generous() -> Self {
        Caps {
            class_cap: 4_000_000,
            theta_budget: 50_000_000,
            max_cosets: 1_000_000,
        }
    }
}
