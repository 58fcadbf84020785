//! Committed divisor-lattice data for the two smallest torus-knot monoids,
//! used as reproduction fixtures: node labels are given as (not necessarily
//! canonical) representative words, and covers index into the node list.

use garside_kit::garside::GarsideStructure;
use garside_kit::kernel::Word;

pub struct LatticeFixture {
    pub nodes: &'static [&'static [u16]],
    pub covers: &'static [(usize, usize)],
}

/// Rank 2, Δ = r2³: eight simples.
pub const M2_LATTICE: LatticeFixture = LatticeFixture {
    nodes: &[
        &[],
        &[1],
        &[2],
        &[1, 2],
        &[2, 1],
        &[2, 2],
        &[2, 1, 2],
        &[2, 2, 2],
    ],
    covers: &[
        (0, 1),
        (0, 2),
        (1, 3),
        (3, 5),
        (2, 5),
        (2, 4),
        (4, 6),
        (6, 7),
        (5, 7),
    ],
};

/// Rank 3, Δ = r3⁴: twenty-one simples.
pub const M3_LATTICE: LatticeFixture = LatticeFixture {
    nodes: &[
        &[],
        &[1],
        &[2],
        &[2, 1],
        &[3],
        &[1, 3],
        &[3, 1],
        &[1, 3, 1],
        &[3, 2],
        &[2, 1, 3],
        &[3, 2, 1],
        &[3, 3],
        &[3, 1, 3],
        &[3, 3, 1],
        &[1, 3, 1, 3],
        &[3, 1, 3, 1],
        &[3, 3, 3],
        &[3, 2, 1, 3],
        &[3, 3, 1, 3],
        &[3, 1, 3, 1, 3],
        &[3, 3, 3, 3],
    ],
    covers: &[
        (0, 1),
        (1, 5),
        (0, 2),
        (0, 4),
        (4, 6),
        (2, 7),
        (3, 9),
        (2, 3),
        (5, 11),
        (5, 7),
        (7, 14),
        (4, 8),
        (6, 12),
        (12, 15),
        (11, 13),
        (13, 18),
        (12, 16),
        (9, 14),
        (14, 16),
        (16, 20),
        (10, 17),
        (17, 19),
        (15, 19),
        (11, 16),
        (18, 20),
        (19, 20),
        (4, 11),
        (8, 15),
        (8, 10),
    ],
};

/// Matches the fixture against a computed structure: every fixture node must
/// correspond to a unique simple (up to element equality), and the
/// fixture covers must translate exactly onto the computed Hasse diagram.
pub fn matches_structure(
    fixture: &LatticeFixture,
    s: &GarsideStructure,
) -> Result<(), String> {
    if fixture.nodes.len() != s.simple_count() {
        return Err(format!(
            "node count mismatch: fixture {}, computed {}",
            fixture.nodes.len(),
            s.simple_count()
        ));
    }
    let mut to_simple = Vec::with_capacity(fixture.nodes.len());
    let mut used = vec![false; s.simple_count()];
    for (i, letters) in fixture.nodes.iter().enumerate() {
        let w = Word::from_letters(letters);
        match s.find_simple(&w).map_err(|e| e.to_string())? {
            Some(idx) if !used[idx] => {
                used[idx] = true;
                to_simple.push(idx);
            }
            Some(idx) => {
                return Err(format!(
                    "fixture node {i} duplicates simple {idx} ({})",
                    s.base().word_string(s.simple_word(idx))
                ))
            }
            None => {
                return Err(format!(
                    "fixture node {i} ({}) is not a divisor",
                    s.base().word_string(&w)
                ))
            }
        }
    }
    let mut expected: Vec<(usize, usize)> = fixture
        .covers
        .iter()
        .map(|&(a, b)| (to_simple[a], to_simple[b]))
        .collect();
    expected.sort_unstable();
    let mut computed: Vec<(usize, usize)> = s.covers_left().to_vec();
    computed.sort_unstable();
    if expected != computed {
        return Err(format!(
            "cover sets differ: fixture has {} edges, computed {}",
            expected.len(),
            computed.len()
        ));
    }
    Ok(())
}
