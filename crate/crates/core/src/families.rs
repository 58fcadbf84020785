//! Constructors for the monoid families under study and verifiers for the
//! homomorphisms between them.
//!
//! The central family is the torus-knot monoid on generators `r1..rn` with
//! relations `r1·rn·ri = r(i+1)·rn`. Its reversing machinery needs two
//! enlarged presentations of the same monoid: a "left" variant
//! (`ri·rn^i·r(j−i) = rj·rn^i`) that is right-complemented with a sharp cube
//! condition, and a "right" variant
//! (`(r1·rn)^{n−j+1}·ri = r(n−j+i+1)·(r1·rn)^{n−j}·rj`) whose opposite is.
//! Alongside it live the braid-presentation quotient `hn`, the dihedral
//! monoids of odd index, and the two classical torus-knot presentations.

use thiserror::Error;

use crate::braidref;
use crate::garside::{self, GarsideStructure, StructureError};
use crate::kernel::{
    Letter, Presentation, PresentationError, SignedLetter, SignedWord, Word,
};
use crate::rewrite::{self, OracleError};
use crate::Caps;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("bad parameters: {0}")]
    BadParameters(String),
    #[error(transparent)]
    Presentation(#[from] PresentationError),
    #[error(transparent)]
    Structure(#[from] StructureError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error("verification failed: {0}")]
    Verification(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FamilyKind {
    /// Defining torus-knot presentation `r1·rn·ri = r(i+1)·rn`.
    MnR,
    /// Enlarged left presentation `ri·rn^i·r(j−i) = rj·rn^i`.
    MnRPrime,
    /// Enlarged right presentation
    /// `(r1·rn)^{n−j+1}·ri = r(n−j+i+1)·(r1·rn)^{n−j}·rj`.
    MnRSecond,
    /// Braid quotient presentation `r1·rj·ri = r(i+1)·rj` for i < j.
    Hn,
    /// Odd dihedral monoid `r1·r2^((m−1)/2)·r1 = r2^((m+1)/2)`.
    Dihedral,
    /// Two-generator torus presentation `x^n = y^m`.
    TorusXy,
    /// Cyclic torus presentation `x1·x2⋯ = x2·x3⋯ = …` with m factors.
    TorusCyclic,
    /// Artin braid presentation on n generators (n+1 strands).
    BraidArtin,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FamilySpec {
    pub kind: FamilyKind,
    pub n: u32,
    pub m: Option<u32>,
}

pub fn make_family(spec: &FamilySpec) -> Result<Presentation, FamilyError> {
    match spec.kind {
        FamilyKind::MnR => mn_r(spec.n),
        FamilyKind::MnRPrime => mn_r_prime(spec.n),
        FamilyKind::MnRSecond => mn_r_second(spec.n),
        FamilyKind::Hn => hn(spec.n),
        FamilyKind::Dihedral => dihedral(spec.m.unwrap_or(spec.n)),
        FamilyKind::TorusXy => torus_xy(spec.n, spec.m.unwrap_or(spec.n + 1)),
        FamilyKind::TorusCyclic => torus_cyclic(spec.n, spec.m.unwrap_or(spec.n + 1)),
        FamilyKind::BraidArtin => braid_artin(spec.n),
    }
}

fn r_names(n: u32, stem: &str) -> Vec<String> {
    (1..=n).map(|i| format!("{stem}{i}")).collect()
}

fn check_rank(n: u32) -> Result<(), FamilyError> {
    if n < 1 {
        return Err(FamilyError::BadParameters("rank must be at least 1".into()));
    }
    if n > 255 {
        return Err(FamilyError::BadParameters("rank too large".into()));
    }
    Ok(())
}

/// The defining presentation: `r1·rn·ri = r(i+1)·rn` for `1 ≤ i < n`.
pub fn mn_r(n: u32) -> Result<Presentation, FamilyError> {
    check_rank(n)?;
    let n = n as Letter;
    let mut rels = Vec::new();
    for i in 1..n {
        rels.push((
            Word::from_letters(&[1, n, i]),
            Word::from_letters(&[i + 1, n]),
        ));
    }
    Ok(Presentation::new(r_names(n as u32, "r"), rels)?)
}

/// The enlarged left presentation: `ri·rn^i·r(j−i) = rj·rn^i` for `i < j`.
pub fn mn_r_prime(n: u32) -> Result<Presentation, FamilyError> {
    check_rank(n)?;
    let n = n as Letter;
    let mut rels = Vec::new();
    for i in 1..=n {
        for j in (i + 1)..=n {
            let mut lhs = vec![i];
            lhs.extend(std::iter::repeat_n(n, i as usize));
            lhs.push(j - i);
            let mut rhs = vec![j];
            rhs.extend(std::iter::repeat_n(n, i as usize));
            rels.push((Word::from(lhs), Word::from(rhs)));
        }
    }
    Ok(Presentation::new(r_names(n as u32, "r"), rels)?)
}

/// The enlarged right presentation:
/// `(r1·rn)^{n−j+1}·ri = r(n−j+i+1)·(r1·rn)^{n−j}·rj` for `i < j`.
pub fn mn_r_second(n: u32) -> Result<Presentation, FamilyError> {
    check_rank(n)?;
    let n = n as Letter;
    let block = |k: Letter| -> Vec<Letter> {
        let mut v = Vec::with_capacity(2 * k as usize);
        for _ in 0..k {
            v.push(1);
            v.push(n);
        }
        v
    };
    let mut rels = Vec::new();
    for i in 1..=n {
        for j in (i + 1)..=n {
            let mut lhs = block(n - j + 1);
            lhs.push(i);
            let mut rhs = vec![n - j + i + 1];
            rhs.extend(block(n - j));
            rhs.push(j);
            rels.push((Word::from(lhs), Word::from(rhs)));
        }
    }
    Ok(Presentation::new(r_names(n as u32, "r"), rels)?)
}

/// Union of the defining and both enlarged presentations; used to keep
/// oracle searches short on words that are one enlarged relation apart.
pub fn mn_saturated(n: u32) -> Result<Presentation, FamilyError> {
    let base = mn_r(n)?;
    let merged = base.merged_with(&mn_r_prime(n)?)?;
    Ok(merged.merged_with(&mn_r_second(n)?)?)
}

/// The braid quotient presentation: `r1·rj·ri = r(i+1)·rj` for `1 ≤ i < j ≤ n`.
pub fn hn(n: u32) -> Result<Presentation, FamilyError> {
    check_rank(n)?;
    let n = n as Letter;
    let mut rels = Vec::new();
    for j in 2..=n {
        for i in 1..j {
            rels.push((
                Word::from_letters(&[1, j, i]),
                Word::from_letters(&[i + 1, j]),
            ));
        }
    }
    Ok(Presentation::new(r_names(n as u32, "r"), rels)?)
}

/// The odd dihedral monoid `⟨r1, r2 | r1·r2^((m−1)/2)·r1 = r2^((m+1)/2)⟩`.
pub fn dihedral(m: u32) -> Result<Presentation, FamilyError> {
    if m < 3 || m.is_multiple_of(2) {
        return Err(FamilyError::BadParameters(
            "dihedral index must be odd and at least 3".into(),
        ));
    }
    let half = ((m - 1) / 2) as usize;
    let mut lhs = vec![1];
    lhs.extend(std::iter::repeat_n(2, half));
    lhs.push(1);
    let rhs = vec![2; half + 1];
    Ok(Presentation::new(
        r_names(2, "r"),
        vec![(Word::from(lhs), Word::from(rhs))],
    )?)
}

/// Two-generator torus presentation `⟨x, y | x^n = y^m⟩`, gcd(n, m) = 1.
pub fn torus_xy(n: u32, m: u32) -> Result<Presentation, FamilyError> {
    if n < 1 || m < 1 {
        return Err(FamilyError::BadParameters("exponents must be positive".into()));
    }
    if gcd_u32(n, m) != 1 {
        return Err(FamilyError::BadParameters(
            "exponents must be relatively prime".into(),
        ));
    }
    Ok(Presentation::new(
        vec!["x".into(), "y".into()],
        vec![(Word::power(1, n as usize), Word::power(2, m as usize))],
    )?)
}

fn cyclic_factor_word(n: u32, m: u32, start: u32) -> Word {
    let mut v = Vec::with_capacity(m as usize);
    for t in 0..m {
        v.push((((start - 1 + t) % n) + 1) as Letter);
    }
    Word::from(v)
}

/// Cyclic torus presentation: all words `x_k·x_{k+1}⋯` (m factors, indices
/// mod n) are equal. The chain is stored as the n−1 relations
/// `word_1 = word_k`.
pub fn torus_cyclic(n: u32, m: u32) -> Result<Presentation, FamilyError> {
    cyclic_common(n, m)?;
    let w1 = cyclic_factor_word(n, m, 1);
    let rels = (2..=n)
        .map(|k| (w1.clone(), cyclic_factor_word(n, m, k)))
        .collect();
    Ok(Presentation::new(r_names(n, "x"), rels)?)
}

/// The cyclic presentation with every pairwise relation `word_i = word_j`
/// spelled out. Same congruence as [`torus_cyclic`]; unlike the chain form it
/// is right-complemented with a sharp cube condition, which the reversing
/// machinery needs.
pub fn torus_cyclic_saturated(n: u32, m: u32) -> Result<Presentation, FamilyError> {
    cyclic_common(n, m)?;
    let mut rels = Vec::new();
    for i in 1..=n {
        for j in (i + 1)..=n {
            rels.push((cyclic_factor_word(n, m, i), cyclic_factor_word(n, m, j)));
        }
    }
    Ok(Presentation::new(r_names(n, "x"), rels)?)
}

fn cyclic_common(n: u32, m: u32) -> Result<(), FamilyError> {
    if n < 2 {
        return Err(FamilyError::BadParameters(
            "cyclic presentation needs at least two generators".into(),
        ));
    }
    if n > 255 || m < 2 {
        return Err(FamilyError::BadParameters("parameters out of range".into()));
    }
    if gcd_u32(n, m) != 1 {
        return Err(FamilyError::BadParameters(
            "parameters must be relatively prime".into(),
        ));
    }
    Ok(())
}

/// Artin braid presentation on `n` generators (braid group on n+1 strands).
pub fn braid_artin(n: u32) -> Result<Presentation, FamilyError> {
    check_rank(n)?;
    let n = n as Letter;
    let mut rels = Vec::new();
    for i in 1..n {
        rels.push((
            Word::from_letters(&[i, i + 1, i]),
            Word::from_letters(&[i + 1, i, i + 1]),
        ));
    }
    for i in 1..=n {
        for j in (i + 2)..=n {
            rels.push((Word::from_letters(&[i, j]), Word::from_letters(&[j, i])));
        }
    }
    Ok(Presentation::new(r_names(n as u32, "s"), rels)?)
}

fn gcd_u32(a: u32, b: u32) -> u32 {
    let (mut a, mut b) = (a, b);
    while b != 0 {
        let r = a % b;
        a = b;
        b = r;
    }
    a
}

/// Garside element `rn^{n+1}` of the rank-`n` torus-knot monoid.
pub fn mn_delta(n: u32) -> Word {
    Word::power(n as Letter, n as usize + 1)
}

/// Builds the full divisor-lattice structure of the rank-`n` torus-knot
/// monoid with Garside element `rn^{n+1}`, using the left enlargement for
/// forward reversing and the opposite of the right enlargement backward.
pub fn mn_structure(n: u32, caps: &Caps) -> Result<GarsideStructure, FamilyError> {
    let base = mn_r(n)?;
    let forward = mn_r_prime(n)?;
    let backward = mn_r_second(n)?.opposite();
    Ok(garside::build_structure(
        &base,
        &forward,
        &backward,
        &mn_delta(n),
        caps,
    )?)
}

/// Builds the dihedral structure with `Δ = r2^m`, after checking the two
/// closed-form complement identities that make `Δ` a Garside element:
/// `(r1·r2^h)² = (r2^h·r1)² = Δ` and `r1·(r2^h·r1·r2^h) = (r2^h·r1·r2^h)·r1 = Δ`
/// with `h = (m−1)/2`.
pub fn dihedral_structure(m: u32, caps: &Caps) -> Result<GarsideStructure, FamilyError> {
    let p = dihedral(m)?;
    let h = ((m - 1) / 2) as usize;
    let delta = Word::power(2, m as usize);
    let mut half = Word::letter(1);
    half = half.concat(&Word::power(2, h));
    let squared = half.concat(&half);
    let mut half_rev = Word::power(2, h);
    half_rev.push(1);
    let squared_rev = half_rev.concat(&half_rev);
    let a1 = Word::power(2, h).concat(&Word::letter(1)).concat(&Word::power(2, h));
    let checks = [
        (squared.clone(), delta.clone()),
        (squared_rev.clone(), delta.clone()),
        (Word::letter(1).concat(&a1), delta.clone()),
        (a1.concat(&Word::letter(1)), delta.clone()),
    ];
    for (lhs, rhs) in &checks {
        if !rewrite::words_equal(&p, lhs, rhs, caps.class_cap)? {
            return Err(FamilyError::Verification(format!(
                "dihedral identity failed: {} ≠ {}",
                p.word_string(lhs),
                p.word_string(rhs)
            )));
        }
    }
    Ok(garside::build_structure_simple(&p, &delta, caps)?)
}

/// Structure of `⟨x, y | x^n = y^m⟩` with `Δ = x^n`. The relation is
/// palindromic, so the presentation serves both reversing directions.
pub fn torus_xy_structure(n: u32, m: u32, caps: &Caps) -> Result<GarsideStructure, FamilyError> {
    let p = torus_xy(n, m)?;
    Ok(garside::build_structure_simple(
        &p,
        &Word::power(1, n as usize),
        caps,
    )?)
}

/// Structure of the cyclic torus presentation with `Δ` the common relation
/// value; reversing runs on the saturated all-pairs variant.
pub fn torus_cyclic_structure(
    n: u32,
    m: u32,
    caps: &Caps,
) -> Result<GarsideStructure, FamilyError> {
    let base = torus_cyclic(n, m)?;
    let saturated = torus_cyclic_saturated(n, m)?;
    Ok(garside::build_structure(
        &base,
        &saturated,
        &saturated.opposite(),
        &cyclic_factor_word(n, m, 1),
        caps,
    )?)
}

/// Result of checking one homomorphism candidate against the defining
/// relations of its source.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HomVerdict {
    Pass,
    Fail { relation_index: usize },
}

impl HomVerdict {
    pub fn passed(&self) -> bool {
        matches!(self, HomVerdict::Pass)
    }
}

/// Checks that generator images satisfy every defining relation of `source`,
/// under the supplied target equality.
pub fn verify_hom(
    source: &Presentation,
    images: &[SignedWord],
    mut target_eq: impl FnMut(&SignedWord, &SignedWord) -> Result<bool, FamilyError>,
) -> Result<HomVerdict, FamilyError> {
    assert_eq!(images.len(), source.n_generators());
    for (idx, rel) in source.relations().iter().enumerate() {
        let lhs = SignedWord::from_word(rel.lhs()).substitute(images);
        let rhs = SignedWord::from_word(rel.rhs()).substitute(images);
        if !target_eq(&lhs, &rhs)? {
            return Ok(HomVerdict::Fail { relation_index: idx });
        }
    }
    Ok(HomVerdict::Pass)
}

/// Images `ri ↦ σ1·σ2⋯σi` into the braid group on n+1 strands.
pub fn sigma_prefix_images(n: u32) -> Vec<SignedWord> {
    (1..=n as Letter)
        .map(|i| braidref::sigma_image(n as usize, &Word::letter(i)))
        .collect()
}

/// Verifies that `ri ↦ σ1⋯σi` is a homomorphism from the rank-`n` torus-knot
/// presentation to the braid group on n+1 strands.
pub fn verify_braid_surjection(n: u32) -> Result<HomVerdict, FamilyError> {
    let source = mn_r(n)?;
    let images = sigma_prefix_images(n);
    verify_hom(&source, &images, |a, b| {
        Ok(braidref::braid_equal(n as usize + 1, a, b))
    })
}

/// Verifies `ri ↦ x^i·y^{−i}` into the group of `⟨x, y | x^n = y^{n+1}⟩`.
pub fn verify_torus_xy_embedding(n: u32, caps: &Caps) -> Result<HomVerdict, FamilyError> {
    let source = mn_r(n)?;
    let target = torus_xy_structure(n, n + 1, caps)?;
    let images: Vec<SignedWord> = (1..=n as u16)
        .map(|i| {
            let mut letters = Vec::new();
            for _ in 0..i {
                letters.push(SignedLetter::pos(1));
            }
            for _ in 0..i {
                letters.push(SignedLetter::neg(2));
            }
            SignedWord(letters)
        })
        .collect();
    verify_hom(&source, &images, |a, b| Ok(target.group_equal(a, b)?))
}

/// Images of the torus-knot generators in the cyclic presentation:
/// `r1 ↦ x1` and `ri ↦ x_{n−i+2}·x_{n−i+3}⋯x_n·x1` for `i ≥ 2`.
pub fn cyclic_images(n: u32) -> Vec<SignedWord> {
    let n = n as Letter;
    (1..=n)
        .map(|i| {
            if i == 1 {
                SignedWord::from_word(&Word::letter(1))
            } else {
                let mut v: Vec<Letter> = ((n - i + 2)..=n).collect();
                v.push(1);
                SignedWord::from_word(&Word::from(v))
            }
        })
        .collect()
}

/// Images of the cyclic generators back in the torus-knot group:
/// `x1 ↦ r1` and `x_k ↦ r_{n−k+2}·r_{n−k+1}⁻¹` for `k ≥ 2`.
pub fn cyclic_inverse_images(n: u32) -> Vec<SignedWord> {
    let n = n as Letter;
    (1..=n)
        .map(|k| {
            if k == 1 {
                SignedWord::from_word(&Word::letter(1))
            } else {
                SignedWord(vec![
                    SignedLetter::pos(n - k + 2),
                    SignedLetter::neg(n - k + 1),
                ])
            }
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RoundtripReport {
    pub forward_hom: HomVerdict,
    pub inverse_hom: HomVerdict,
    pub inverse_then_forward_fixes: bool,
    pub forward_then_inverse_fixes: bool,
}

impl RoundtripReport {
    pub fn passed(&self) -> bool {
        self.forward_hom.passed()
            && self.inverse_hom.passed()
            && self.inverse_then_forward_fixes
            && self.forward_then_inverse_fixes
    }
}

/// Verifies that the two maps between the rank-`n` torus-knot presentation
/// and the cyclic presentation are mutually inverse isomorphisms: both are
/// homomorphisms and both composites fix every generator up to group
/// equality.
pub fn iso_cyclic_roundtrip(n: u32, caps: &Caps) -> Result<RoundtripReport, FamilyError> {
    if n < 2 {
        return Err(FamilyError::BadParameters("rank must be at least 2".into()));
    }
    let source = mn_r(n)?;
    let cyclic_base = torus_cyclic(n, n + 1)?;
    let mn = mn_structure(n, caps)?;
    let cyclic = torus_cyclic_structure(n, n + 1, caps)?;
    let phi = cyclic_images(n);
    let psi = cyclic_inverse_images(n);

    let forward_hom = verify_hom(&source, &phi, |a, b| Ok(cyclic.group_equal(a, b)?))?;
    let inverse_hom = verify_hom(&cyclic_base, &psi, |a, b| Ok(mn.group_equal(a, b)?))?;

    let mut psi_phi = true;
    for i in 1..=n as Letter {
        let image = SignedWord::from_word(&Word::letter(i))
            .substitute(&phi)
            .substitute(&psi);
        if !mn.group_equal(&image, &SignedWord::from_word(&Word::letter(i)))? {
            psi_phi = false;
        }
    }
    let mut phi_psi = true;
    for k in 1..=n as Letter {
        let image = SignedWord::from_word(&Word::letter(k))
            .substitute(&psi)
            .substitute(&phi);
        if !cyclic.group_equal(&image, &SignedWord::from_word(&Word::letter(k)))? {
            phi_psi = false;
        }
    }
    Ok(RoundtripReport {
        forward_hom,
        inverse_hom,
        inverse_then_forward_fixes: psi_phi,
        forward_then_inverse_fixes: phi_psi,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PresBnReport {
    /// The quotient relations hold under `ri ↦ σ1⋯σi`.
    pub forward_hom: HomVerdict,
    /// `f(g(σi)) = σi` in the braid group, for every i.
    pub fg_fixes_sigma: bool,
    /// `g(f(ri))` free-reduces to `ri`, for every i.
    pub gf_fixes_rho: bool,
}

impl PresBnReport {
    pub fn passed(&self) -> bool {
        self.forward_hom.passed() && self.fg_fixes_sigma && self.gf_fixes_rho
    }
}

/// Verifies the mutually inverse maps between the braid group on n+1 strands
/// and the group of the `hn` presentation: `f: ri ↦ σ1⋯σi` and
/// `g: σi ↦ r(i−1)⁻¹·ri` (with `r0 = 1`).
pub fn pres_bn_maps(n: u32) -> Result<PresBnReport, FamilyError> {
    let strands = n as usize + 1;
    let source = hn(n)?;
    let images = sigma_prefix_images(n);
    let forward_hom = verify_hom(&source, &images, |a, b| {
        Ok(braidref::braid_equal(strands, a, b))
    })?;

    // g(σi) = r(i−1)⁻¹ · ri, then mapped through f into the braid group.
    let g_image = |i: Letter| -> SignedWord {
        let mut v = Vec::new();
        if i > 1 {
            v.push(SignedLetter::neg(i - 1));
        }
        v.push(SignedLetter::pos(i));
        SignedWord(v)
    };
    let mut fg_fixes_sigma = true;
    for i in 1..=n as Letter {
        let fg = g_image(i).substitute(&images);
        let sigma = SignedWord(vec![SignedLetter::pos(i)]);
        if !braidref::braid_equal(strands, &fg, &sigma) {
            fg_fixes_sigma = false;
        }
    }

    // g(f(ri)) = g(σ1)·g(σ2)⋯g(σi) telescopes freely to ri.
    let mut gf_fixes_rho = true;
    for i in 1..=n as Letter {
        let mut word = SignedWord::empty();
        for k in 1..=i {
            word = word.concat(&g_image(k));
        }
        let reduced = word.free_reduce();
        if reduced != SignedWord(vec![SignedLetter::pos(i)]) {
            gf_fixes_rho = false;
        }
    }

    Ok(PresBnReport {
        forward_hom,
        fg_fixes_sigma,
        gf_fixes_rho,
    })
}

/// Report of the even-dihedral obstruction check on
/// `⟨r1, r2 | r1·r2² = r2²·r1⟩`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EvenDihedralReport {
    /// The defining commutation holds (sanity).
    pub commutation_holds: bool,
    /// For each k ≤ max, whether `r1` fails to left-divide `r2^k`
    /// (it must, for a bounded certificate that no `r2^k` can play the role
    /// of a Garside element).
    pub powers_clean: Vec<(usize, bool)>,
}

impl EvenDihedralReport {
    pub fn passed(&self) -> bool {
        self.commutation_holds && self.powers_clean.iter().all(|&(_, ok)| ok)
    }
}

/// Bounded reproduction of the obstruction for even dihedral type: in
/// `⟨r1, r2 | r1·r2² = r2²·r1⟩` the generator `r1` divides no power `r2^k`,
/// so no such power can be a Garside element. Asserts nothing beyond the
/// bound.
pub fn even_dihedral_check(max_power: usize, caps: &Caps) -> Result<EvenDihedralReport, FamilyError> {
    let p = Presentation::new(
        vec!["r1".into(), "r2".into()],
        vec![(
            Word::from_letters(&[1, 2, 2]),
            Word::from_letters(&[2, 2, 1]),
        )],
    )?;
    let commutation_holds = rewrite::words_equal(
        &p,
        &Word::from_letters(&[1, 2, 2]),
        &Word::from_letters(&[2, 2, 1]),
        caps.class_cap,
    )?;
    let mut powers_clean = Vec::new();
    for k in 1..=max_power {
        let divisible =
            rewrite::left_divides(&p, &Word::letter(1), &Word::power(2, k), caps.class_cap)?;
        powers_clean.push((k, divisible.is_none()));
    }
    Ok(EvenDihedralReport {
        commutation_holds,
        powers_clean,
    })
}
