//! Acceptance suite: every release criterion, one test each, all exact.
//!
//! Each test prints a single `[acceptance] …: PASS` line (visible with
//! `--nocapture`) and enforces its runtime budget.

use std::time::Instant;

use garside_kit::braidref::{self, NoLcmReport};
use garside_kit::cosets;
use garside_kit::families;
use garside_kit::kernel::{SignedLetter, SignedWord, Word};
use garside_kit::reversing::{self, ComplementTable, CubeMode};
use garside_kit::rewrite;
use garside_kit::{Caps, Side};

use garside_kit_cli::fixtures;
use garside_kit_cli::report;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn finish(tag: &str, name: &str, start: Instant, limit_secs: f64) {
    let elapsed = start.elapsed().as_secs_f64();
    println!("[acceptance] {tag} {name}: PASS ({elapsed:.2}s < {limit_secs}s limit)");
    assert!(
        elapsed < limit_secs,
        "{tag} exceeded its runtime budget: {elapsed:.2}s ≥ {limit_secs}s"
    );
}

fn caps() -> Caps {
    Caps::generous()
}

/// The rank-2 lattice is exactly the eight committed simples with the
/// committed covers, and the CLI emits the committed DOT rendering.
#[test]
fn c01_rank2_lattice_fixture() {
    let start = Instant::now();
    let s = families::mn_structure(2, &caps()).unwrap();
    assert_eq!(s.simple_count(), 8);
    fixtures::matches_structure(&fixtures::M2_LATTICE, &s).unwrap();
    let out = std::process::Command::new(env!("CARGO_BIN_EXE_garside-kit"))
        .args(["lattice", "mn", "--n", "2", "--format", "dot"])
        .output()
        .unwrap();
    let committed = std::fs::read_to_string(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/tests/fixtures/m2_lattice.dot"
    ))
    .unwrap();
    assert_eq!(String::from_utf8_lossy(&out.stdout), committed);
    finish("C01", "rank-2 lattice fixture", start, 1.0);
}

/// The rank-3 lattice is exactly the twenty-one committed simples with the
/// committed covers.
#[test]
fn c02_rank3_lattice_fixture() {
    let start = Instant::now();
    let s = families::mn_structure(3, &caps()).unwrap();
    assert_eq!(s.simple_count(), 21);
    fixtures::matches_structure(&fixtures::M3_LATTICE, &s).unwrap();
    finish("C02", "rank-3 lattice fixture", start, 10.0);
}

/// Sharp cube condition passes on both workhorse presentations for ranks
/// 2..8, and fails with a witness on the defining presentation for 3..6.
#[test]
fn c03_cube_conditions() {
    let start = Instant::now();
    let budget = caps().theta_budget;
    for n in 2..=8u32 {
        let left = families::mn_r_prime(n).unwrap();
        let t = ComplementTable::new(&left).unwrap();
        assert!(
            reversing::cube_all_generator_triples(&t, CubeMode::Sharp, budget).all_pass(),
            "left enlargement fails sharp cube at rank {n}"
        );
        let right = families::mn_r_second(n).unwrap().opposite();
        let t = ComplementTable::new(&right).unwrap();
        assert!(
            reversing::cube_all_generator_triples(&t, CubeMode::Sharp, budget).all_pass(),
            "opposite right enlargement fails sharp cube at rank {n}"
        );
    }
    for n in 3..=6u32 {
        let p = families::mn_r(n).unwrap();
        let t = ComplementTable::new(&p).unwrap();
        let report = reversing::cube_all_generator_triples(&t, CubeMode::Sharp, budget);
        let ((a, b, c), _) = report
            .first_failure()
            .unwrap_or_else(|| panic!("no cube failure found at rank {n}"));
        assert!(a != b && b != c && a != c);
    }
    finish("C03", "cube conditions", start, 30.0);
}

/// Reversing-computed one-sided lcms of generator pairs match the closed
/// forms, with equality decided by the rewrite oracle, for ranks 2..8.
#[test]
fn c04_lcm_formulas() {
    let start = Instant::now();
    for n in 2..=8u32 {
        assert_eq!(report::check_lcm_formulas(n, &caps()), Ok(true), "rank {n}");
    }
    finish("C04", "lcm closed forms", start, 60.0);
}

/// Garside axioms for ranks 2..4: the divisor set of rn^{n+1} closes into
/// coinciding left/right lattice structures, Δ is central and equal to both
/// alternating forms, and the lcm of the atoms is rn^n, strictly below Δ.
#[test]
fn c05_garside_axioms() {
    let start = Instant::now();
    let caps = caps();
    for n in 2..=4u32 {
        // Build success verifies: left divisors = right divisors, both
        // orders are lattices, every generator divides Δ.
        let s = families::mn_structure(n, &caps).unwrap();
        assert!(s.is_central(s.delta()).unwrap(), "rank {n}");
        assert!(s.complements_coincide(), "rank {n}");
        let nn = n as u16;
        let saturated = families::mn_saturated(n).unwrap();
        let delta = families::mn_delta(n);
        let mut alt = Word::empty();
        let mut alt_rev = Word::empty();
        for _ in 0..nn {
            alt.push(1);
            alt.push(nn);
            alt_rev.push(nn);
            alt_rev.push(1);
        }
        assert!(rewrite::words_equal(&saturated, &delta, &alt, caps.class_cap).unwrap());
        assert!(rewrite::words_equal(&saturated, &delta, &alt_rev, caps.class_cap).unwrap());
        // Atoms' lcm on both sides is rn^n, a strict divisor of Δ.
        let rn_n = Word::power(nn, n as usize);
        let left_pres = families::mn_r_prime(n).unwrap();
        let second = families::mn_r_second(n).unwrap();
        let right = reversing::atoms_lcm(&left_pres, Side::Right, caps.theta_budget)
            .unwrap()
            .unwrap();
        let left = reversing::atoms_lcm(&second, Side::Left, caps.theta_budget)
            .unwrap()
            .unwrap();
        assert!(rewrite::words_equal(&saturated, &right, &rn_n, caps.class_cap).unwrap());
        assert!(rewrite::words_equal(&saturated, &left, &rn_n, caps.class_cap).unwrap());
        assert_ne!(
            saturated.lambda_len(&rn_n).unwrap(),
            saturated.lambda_len(&delta).unwrap()
        );
    }
    finish("C05", "garside axioms", start, 120.0);
}

/// Duality: x ↦ Δ·x⁻¹ is an order-reversing bijection in both small ranks;
/// the rank-2 left lattice is self-dual and the rank-3 one is not.
#[test]
fn c06_duality() {
    let start = Instant::now();
    let s2 = families::mn_structure(2, &caps()).unwrap();
    let d2 = s2.duality();
    assert!(d2.anti_iso_order_reversing);
    assert!(d2.self_dual_left.mapping.is_some());
    let s3 = families::mn_structure(3, &caps()).unwrap();
    let d3 = s3.duality();
    assert!(d3.anti_iso_order_reversing);
    assert!(d3.self_dual_left.mapping.is_none());
    finish("C06", "lattice duality", start, 5.0);
}

/// All named homomorphisms verify against the defining relations.
#[test]
fn c07_homomorphisms() {
    let start = Instant::now();
    let caps = caps();
    for n in 1..=8u32 {
        assert!(
            families::verify_braid_surjection(n).unwrap().passed(),
            "braid surjection rank {n}"
        );
        assert!(
            families::pres_bn_maps(n).unwrap().passed(),
            "braid presentation maps rank {n}"
        );
    }
    for n in 2..=6u32 {
        assert!(
            families::verify_torus_xy_embedding(n, &caps).unwrap().passed(),
            "two-generator form rank {n}"
        );
    }
    for n in 2..=5u32 {
        assert!(
            families::iso_cyclic_roundtrip(n, &caps).unwrap().passed(),
            "cyclic round-trip rank {n}"
        );
    }
    finish("C07", "homomorphisms", start, 60.0);
}

/// The σ-prefix submonoid of the braid group has no right-lcms: certified
/// for ranks 3 and 4.
#[test]
fn c08_sigma_has_no_lcm() {
    let start = Instant::now();
    for n in [3usize, 4] {
        match braidref::no_lcm_certificate(n).unwrap() {
            NoLcmReport::Pass { .. } => {}
            NoLcmReport::NotApplicable => panic!("certificate must apply at rank {n}"),
        }
    }
    finish("C08", "no lcm in the sigma-prefix submonoid", start, 30.0);
}

/// Finite quotient orders: (n+1)! for the symmetric presentations (n ≤ 4),
/// 48 for the rank-3 quotient, 6 for the rank-2 quotient.
#[test]
fn c09_finite_quotients() {
    let start = Instant::now();
    let max = caps().max_cosets;
    let square = SignedWord(vec![SignedLetter::pos(1), SignedLetter::pos(1)]);
    for n in 1..=4u32 {
        let gp = cosets::quotient_of(&families::hn(n).unwrap(), std::slice::from_ref(&square));
        let expect: usize = (1..=(n as usize + 1)).product();
        assert_eq!(cosets::coset_enumerate(&gp, max).order(), Some(expect));
    }
    let gp = cosets::quotient_of(&families::mn_r(3).unwrap(), std::slice::from_ref(&square));
    assert_eq!(cosets::coset_enumerate(&gp, max).order(), Some(48));
    let gp = cosets::quotient_of(&families::mn_r(2).unwrap(), std::slice::from_ref(&square));
    assert_eq!(cosets::coset_enumerate(&gp, max).order(), Some(6));
    finish("C09", "finite quotient orders", start, 10.0);
}

/// Dihedral family: structures build for m = 3, 5, 7, 9 with Δ = r2^m; the
/// m = 3 structure coincides with the rank-2 one; the even obstruction
/// reproduces.
#[test]
fn c10_dihedral_family() {
    let start = Instant::now();
    let caps = caps();
    let mut counts = Vec::new();
    for m in [3u32, 5, 7, 9] {
        let s = families::dihedral_structure(m, &caps).unwrap();
        counts.push(s.simple_count());
        assert!(s.is_central(s.delta()).unwrap(), "m={m}");
    }
    let d3 = families::dihedral_structure(3, &caps).unwrap();
    let m2 = families::mn_structure(2, &caps).unwrap();
    assert_eq!(d3.simples(), m2.simples());
    assert_eq!(d3.covers_left(), m2.covers_left());
    assert_eq!(d3.covers_right(), m2.covers_right());
    assert!(families::even_dihedral_check(8, &caps).unwrap().passed());
    finish("C10", "dihedral family", start, 30.0);
}

/// Word problem soundness: normal-form equality agrees with the exhaustive
/// oracle on all positive words of weight ≤ 8 in ranks 2 and 3, and
/// `w·w⁻¹` normalizes to the identity for 500 seeded random signed words per
/// structure.
#[test]
fn c11_word_problem() {
    let start = Instant::now();
    let caps = caps();
    for n in [2u32, 3] {
        assert_eq!(report::check_word_problem(n, 8, &caps), Ok(true), "rank {n}");
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0xC0FFEE);
    for n in [2u32, 3] {
        let s = families::mn_structure(n, &caps).unwrap();
        for round in 0..500 {
            let len = rng.gen_range(0..10);
            let word = SignedWord(
                (0..len)
                    .map(|_| {
                        let g = rng.gen_range(1..=n as u16);
                        if rng.gen_bool(0.5) {
                            SignedLetter::pos(g)
                        } else {
                            SignedLetter::neg(g)
                        }
                    })
                    .collect(),
            );
            let prod = word.concat(&word.inverse());
            let e = s.group_normalize(&prod).unwrap();
            assert!(e.is_identity(), "rank {n}, round {round}: {word:?}");
        }
    }
    finish("C11", "word problem soundness", start, 120.0);
}

/// Bounded cancellativity scan of the braid-quotient monoids: any hit would
/// refute the conjectured cancellativity and block release.
#[test]
fn c12_cancellativity_scan() {
    let start = Instant::now();
    for n in [3u32, 4] {
        let p = families::hn(n).unwrap();
        let witness = rewrite::cancellativity_scan(&p, 10, caps().class_cap).unwrap();
        assert!(
            witness.is_none(),
            "RELEASE BLOCKER: cancellativity counterexample in rank {n}: {witness:?}; \
             this refutes the conjectured cancellativity and requires review"
        );
    }
    finish("C12", "cancellativity scan", start, 600.0);
}
