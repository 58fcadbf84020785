//! Command-line surface. Exit codes: 0 success or verified Pass, 1 verified
//! Fail or negative answer, 2 inconclusive (capped closure, exhausted
//! reversing budget, coset overflow), 3 usage error.

use std::fs;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use garside_kit::braidref::{self, NoLcmReport};
use garside_kit::cosets;
use garside_kit::families::{self, FamilyKind, FamilySpec};
use garside_kit::garside::GarsideStructure;
use garside_kit::kernel::{
    Letter, Presentation, PresentationDoc, SignedLetter, SignedWord, Word,
};
use garside_kit::reversing::{self, ComplementTable, CubeMode, CubeVerdict};
use garside_kit::rewrite::{self, OracleError};
use garside_kit::{Caps, Side};

use crate::report;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_INCONCLUSIVE: i32 = 2;
pub const EXIT_USAGE: i32 = 3;

#[derive(Parser)]
#[command(
    name = "garside-kit",
    version,
    about = "Garside-theoretic computations for presented monoids",
    disable_help_subcommand = true
)]
pub struct Cli {
    #[command(subcommand)]
    command: Cmd,
    /// Emit JSON instead of text where supported.
    #[arg(long, global = true)]
    json: bool,
    /// Seed for the randomized parts of the report.
    #[arg(long, global = true, default_value_t = 0xC0FFEE)]
    seed: u64,
}

#[derive(Subcommand)]
enum Cmd {
    /// Print a family presentation.
    Family(FamilyArgs),
    /// Verification suites.
    Verify {
        #[command(subcommand)]
        what: VerifyCmd,
    },
    /// Emit the divisor lattice of the Garside element.
    Lattice(LatticeArgs),
    /// Greedy normal form of a positive word.
    Nf(StructWordArgs),
    /// One-sided lcm of two positive words.
    Lcm(TwoWordArgs),
    /// One-sided gcd of two positive words.
    Gcd(TwoWordArgs),
    /// Word problem for signed words in the group of fractions.
    Wp(WpArgs),
    /// Braid-group oracle.
    Braid {
        #[command(subcommand)]
        what: BraidCmd,
    },
    /// Order of a finite quotient by coset enumeration.
    Order(OrderArgs),
    /// Brute-force rewriting oracle.
    Oracle {
        #[command(subcommand)]
        what: OracleCmd,
    },
    /// Bounded property scans.
    Scan {
        #[command(subcommand)]
        what: ScanCmd,
    },
    /// Run the reproduction suite and emit a report.
    Report(ReportArgs),
}

#[derive(Args, Clone)]
struct Selector {
    /// Positional family shorthand (same values as --family).
    #[arg(value_name = "FAMILY")]
    family_pos: Option<String>,
    /// Family kind: mn | mnp | mns | hn | dihedral | torus-xy | torus-cyclic | braid.
    #[arg(long, visible_alias = "kind")]
    family: Option<String>,
    /// Primary parameter (rank).
    #[arg(long, default_value_t = 2)]
    n: u32,
    /// Secondary parameter (dihedral index or torus exponent).
    #[arg(long)]
    m: Option<u32>,
    /// Shorthand `kind:n[:m]`, e.g. `mn:3`.
    #[arg(long)]
    monoid: Option<String>,
    /// Presentation JSON file instead of a named family.
    #[arg(long)]
    presentation: Option<PathBuf>,
}

struct Resolved {
    presentation: Presentation,
    family: Option<(String, u32, Option<u32>)>,
}

enum CmdError {
    Usage(String),
    Inconclusive(String),
}

impl From<OracleError> for CmdError {
    fn from(e: OracleError) -> Self {
        CmdError::Inconclusive(e.to_string())
    }
}

impl Selector {
    fn resolve(&self) -> Result<Resolved, CmdError> {
        if let Some(path) = &self.presentation {
            let text = fs::read_to_string(path)
                .map_err(|e| CmdError::Usage(format!("cannot read {}: {e}", path.display())))?;
            let doc: PresentationDoc = serde_json::from_str(&text)
                .map_err(|e| CmdError::Usage(format!("invalid presentation JSON: {e}")))?;
            let p = Presentation::from_doc(doc)
                .map_err(|e| CmdError::Usage(format!("invalid presentation: {e}")))?;
            return Ok(Resolved {
                presentation: p,
                family: None,
            });
        }
        let (kind, n, m) = if let Some(spec) = &self.monoid {
            let parts: Vec<&str> = spec.split(':').collect();
            if parts.len() < 2 || parts.len() > 3 {
                return Err(CmdError::Usage(format!(
                    "--monoid expects kind:n[:m], got `{spec}`"
                )));
            }
            let n: u32 = parts[1]
                .parse()
                .map_err(|_| CmdError::Usage(format!("bad rank in `{spec}`")))?;
            let m = match parts.get(2) {
                Some(s) => Some(
                    s.parse()
                        .map_err(|_| CmdError::Usage(format!("bad parameter in `{spec}`")))?,
                ),
                None => None,
            };
            (parts[0].to_ascii_lowercase(), n, m)
        } else {
            let kind = self
                .family
                .clone()
                .or_else(|| self.family_pos.clone())
                .ok_or_else(|| {
                    CmdError::Usage("select a monoid with --family/--monoid/--presentation".into())
                })?;
            (kind.to_ascii_lowercase(), self.n, self.m)
        };
        let fk = match kind.as_str() {
            "mn" => FamilyKind::MnR,
            "mnp" => FamilyKind::MnRPrime,
            "mns" => FamilyKind::MnRSecond,
            "hn" => FamilyKind::Hn,
            "dihedral" => FamilyKind::Dihedral,
            "torus-xy" => FamilyKind::TorusXy,
            "torus-cyclic" => FamilyKind::TorusCyclic,
            "braid" => FamilyKind::BraidArtin,
            other => {
                return Err(CmdError::Usage(format!("unknown family `{other}`")));
            }
        };
        let p = families::make_family(&FamilySpec { kind: fk, n, m })
            .map_err(|e| CmdError::Usage(e.to_string()))?;
        Ok(Resolved {
            presentation: p,
            family: Some((kind, n, m)),
        })
    }

    /// A full divisor-lattice structure, for families with a distinguished
    /// Garside element or an explicit presentation plus `--delta`.
    fn structure(&self, delta: &Option<String>, caps: &Caps) -> Result<GarsideStructure, CmdError> {
        let resolved = self.resolve()?;
        match &resolved.family {
            Some((kind, n, m)) => report::structure_for(kind, *n, *m, caps)
                .map_err(CmdError::Inconclusive),
            None => {
                let delta = delta
                    .as_ref()
                    .ok_or_else(|| CmdError::Usage("--presentation requires --delta".into()))?;
                let delta = parse_word(delta)?;
                garside_kit::garside::build_structure_simple(&resolved.presentation, &delta, caps)
                    .map_err(|e| CmdError::Inconclusive(e.to_string()))
            }
        }
    }
}

#[derive(Args)]
struct FamilyArgs {
    #[command(flatten)]
    select: Selector,
    /// Output format (`json` for the interchange document).
    #[arg(long)]
    emit: Option<String>,
}

#[derive(Subcommand)]
enum VerifyCmd {
    /// Cube condition on all ordered triples of distinct generators.
    Cube(CubeArgs),
    /// Garside axioms for a family with a distinguished Garside element.
    Garside {
        #[command(flatten)]
        select: Selector,
    },
    /// Defining-relation checks for the named homomorphisms.
    Hom(HomArgs),
    /// Certificate that the σ-prefix submonoid has no lcms.
    NoLcm {
        /// Rank (at least 3 for the certificate to apply).
        #[arg(long, default_value_t = 3)]
        n: u32,
    },
    /// Odd dihedral structure plus the even obstruction.
    Dihedral {
        /// Odd index m ≥ 3.
        #[arg(long, default_value_t = 5)]
        m: u32,
    },
}

#[derive(Args)]
struct CubeArgs {
    #[command(flatten)]
    select: Selector,
    /// `sharp` (equal words) or `equiv` (equal up to the relations).
    #[arg(long, default_value = "sharp")]
    variant: String,
}

#[derive(Args)]
struct HomArgs {
    /// braid-surjection | torus-xy | cyclic-roundtrip | braid-presentation.
    #[arg(long)]
    map: String,
    #[arg(long, default_value_t = 3)]
    n: u32,
}

#[derive(Args)]
struct LatticeArgs {
    #[command(flatten)]
    select: Selector,
    /// dot | json.
    #[arg(long, default_value = "dot")]
    format: String,
    /// Garside element (required with --presentation), e.g. "2 2 2".
    #[arg(long)]
    delta: Option<String>,
}

#[derive(Args)]
struct StructWordArgs {
    #[command(flatten)]
    select: Selector,
    /// Positive word as 1-based indices, e.g. "1 2 1".
    #[arg(long)]
    word: String,
    #[arg(long)]
    delta: Option<String>,
}

#[derive(Args)]
struct TwoWordArgs {
    #[command(flatten)]
    select: Selector,
    #[arg(long, default_value = "right")]
    side: String,
    #[arg(long)]
    u: String,
    #[arg(long)]
    v: String,
    #[arg(long)]
    delta: Option<String>,
}

#[derive(Args)]
struct WpArgs {
    #[command(flatten)]
    select: Selector,
    /// Signed word, negative indices for inverses, e.g. "1 -2 1".
    #[arg(long, allow_hyphen_values = true)]
    u: String,
    /// Optional second word; omitted means "normalize --u".
    #[arg(long, allow_hyphen_values = true)]
    v: Option<String>,
    #[arg(long)]
    delta: Option<String>,
}

#[derive(Subcommand)]
enum BraidCmd {
    /// Left-greedy canonical form of a braid word.
    Nf {
        #[arg(long)]
        strands: usize,
        /// Signed generator indices, e.g. "1 2 -1".
        #[arg(long, allow_hyphen_values = true)]
        word: String,
    },
}

#[derive(Args)]
struct OrderArgs {
    #[command(flatten)]
    select: Selector,
    /// Extra relator such as "r1^2"; repeatable.
    #[arg(long = "add-relator")]
    add_relator: Vec<String>,
    #[arg(long, default_value_t = 100_000)]
    max_cosets: usize,
}

#[derive(Subcommand)]
enum OracleCmd {
    /// Word equivalence by exhaustive closure.
    Equal(OracleTwoWords),
    /// One-sided divisibility with a witness.
    Divides(OracleDividesArgs),
    /// Cancellativity scan (same as `scan cancellativity`).
    Scan(ScanArgs),
}

#[derive(Args)]
struct OracleTwoWords {
    #[command(flatten)]
    select: Selector,
    #[arg(long)]
    u: String,
    #[arg(long)]
    v: String,
    #[arg(long)]
    cap: Option<usize>,
}

#[derive(Args)]
struct OracleDividesArgs {
    #[command(flatten)]
    select: Selector,
    #[arg(long, default_value = "left")]
    side: String,
    #[arg(long)]
    u: String,
    #[arg(long)]
    v: String,
    #[arg(long)]
    cap: Option<usize>,
}

#[derive(Subcommand)]
enum ScanCmd {
    /// Search for cancellation failures up to a λ-bound.
    Cancellativity(ScanArgs),
}

#[derive(Args)]
struct ScanArgs {
    #[command(flatten)]
    select: Selector,
    #[arg(long, default_value_t = 10)]
    max_lambda: u64,
    #[arg(long)]
    cap: Option<usize>,
}

#[derive(Args)]
struct ReportArgs {
    #[arg(long, default_value_t = 3)]
    n_max: u32,
    /// Emit markdown (default) or json.
    #[arg(long)]
    format: Option<String>,
}

#[derive(Serialize)]
struct Envelope<T: Serialize> {
    command: String,
    status: String,
    data: T,
}

fn emit<T: Serialize>(json: bool, command: &str, status: &str, data: T, text: String) {
    if json {
        let env = Envelope {
            command: command.to_string(),
            status: status.to_string(),
            data,
        };
        println!("{}", serde_json::to_string_pretty(&env).unwrap());
    } else {
        println!("{text}");
    }
}

fn parse_word(s: &str) -> Result<Word, CmdError> {
    let mut letters = Vec::new();
    for tok in s.split_whitespace() {
        let v: i64 = tok
            .parse()
            .map_err(|_| CmdError::Usage(format!("bad letter `{tok}` in word")))?;
        if v < 1 || v > u16::MAX as i64 {
            return Err(CmdError::Usage(format!("letter {v} out of range")));
        }
        letters.push(v as Letter);
    }
    Ok(Word::from(letters))
}

fn parse_signed(s: &str) -> Result<SignedWord, CmdError> {
    let mut out = Vec::new();
    for tok in s.split_whitespace() {
        let v: i64 = tok
            .parse()
            .map_err(|_| CmdError::Usage(format!("bad letter `{tok}` in word")))?;
        if v == 0 || v.unsigned_abs() > u16::MAX as u64 {
            return Err(CmdError::Usage(format!("letter {v} out of range")));
        }
        out.push(if v > 0 {
            SignedLetter::pos(v as Letter)
        } else {
            SignedLetter::neg((-v) as Letter)
        });
    }
    Ok(SignedWord(out))
}

/// Relator syntax: whitespace-separated `name[^exp]` or `index[^exp]` tokens.
fn parse_relator(p: &Presentation, s: &str) -> Result<SignedWord, CmdError> {
    let mut out = Vec::new();
    for tok in s.split_whitespace() {
        let (base, exp) = match tok.split_once('^') {
            Some((b, e)) => {
                let exp: i64 = e
                    .parse()
                    .map_err(|_| CmdError::Usage(format!("bad exponent in `{tok}`")))?;
                (b, exp)
            }
            None => (tok, 1),
        };
        let gen: Letter = if let Ok(idx) = base.parse::<u16>() {
            idx
        } else {
            let found = p
                .generator_names()
                .iter()
                .position(|n| n == base)
                .ok_or_else(|| CmdError::Usage(format!("unknown generator `{base}`")))?;
            (found + 1) as Letter
        };
        if gen == 0 || gen as usize > p.n_generators() {
            return Err(CmdError::Usage(format!("generator `{base}` out of range")));
        }
        for _ in 0..exp.unsigned_abs() {
            out.push(if exp >= 0 {
                SignedLetter::pos(gen)
            } else {
                SignedLetter::neg(gen)
            });
        }
    }
    Ok(SignedWord(out))
}

fn env_caps(mut caps: Caps) -> Caps {
    if let Ok(v) = std::env::var("GARSIDE_KIT_MAX_CAP") {
        if let Ok(cap) = v.parse::<usize>() {
            caps.class_cap = cap;
        }
    }
    caps
}

pub fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // clap prints help/version through the error path with success
            // status; keep that behavior, map real usage errors to 3.
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = e.print();
            return code;
        }
    };
    match dispatch(&cli) {
        Ok(code) => code,
        Err(CmdError::Usage(msg)) => {
            eprintln!("error: {msg}");
            EXIT_USAGE
        }
        Err(CmdError::Inconclusive(msg)) => {
            eprintln!("inconclusive: {msg}");
            EXIT_INCONCLUSIVE
        }
    }
}

fn dispatch(cli: &Cli) -> Result<i32, CmdError> {
    let caps = env_caps(Caps::generous());
    let oracle_caps = env_caps(Caps::default());
    match &cli.command {
        Cmd::Family(args) => {
            let resolved = args.select.resolve()?;
            let doc = resolved.presentation.to_doc();
            if cli.json || args.emit.as_deref() == Some("json") {
                println!("{}", serde_json::to_string_pretty(&doc).unwrap());
            } else {
                let p = &resolved.presentation;
                let lambda = match p.lambda() {
                    Some(l) => format!(
                        "λ = [{}]",
                        l.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(", ")
                    ),
                    None => "no homogeneous length function".to_string(),
                };
                println!(
                    "generators: {} ({lambda})",
                    p.generator_names().join(" ")
                );
                println!("relations:");
                for r in p.relations() {
                    println!("  {} = {}", p.word_string(r.lhs()), p.word_string(r.rhs()));
                }
            }
            Ok(EXIT_OK)
        }
        Cmd::Verify { what } => verify(cli, what, &caps, &oracle_caps),
        Cmd::Lattice(args) => {
            let s = args.select.structure(&args.delta, &caps)?;
            match args.format.as_str() {
                "dot" => print!("{}", s.lattice_dot()),
                "json" => println!("{}", serde_json::to_string_pretty(&s.lattice_doc()).unwrap()),
                other => return Err(CmdError::Usage(format!("unknown format `{other}`"))),
            }
            Ok(EXIT_OK)
        }
        Cmd::Nf(args) => {
            let s = args.select.structure(&args.delta, &caps)?;
            let w = parse_word(&args.word)?;
            let nf = s
                .normal_form(&w)
                .map_err(|e| CmdError::Inconclusive(e.to_string()))?;
            let words: Vec<String> = nf
                .factors
                .iter()
                .map(|&i| s.base().word_string(s.simple_word(i)))
                .collect();
            let data: Vec<Vec<Letter>> = nf
                .factors
                .iter()
                .map(|&i| s.simple_word(i).letters().to_vec())
                .collect();
            emit(
                cli.json,
                "nf",
                "ok",
                data,
                if words.is_empty() {
                    "1".to_string()
                } else {
                    words.join(" | ")
                },
            );
            Ok(EXIT_OK)
        }
        Cmd::Lcm(args) => {
            let s = args.select.structure(&args.delta, &caps)?;
            let u = parse_word(&args.u)?;
            let v = parse_word(&args.v)?;
            let side = parse_side(&args.side)?;
            let r = match side {
                Side::Right => s.right_lcm_words(&u, &v),
                Side::Left => s.left_lcm_words(&u, &v),
            }
            .map_err(|e| CmdError::Inconclusive(e.to_string()))?;
            match r {
                Some(l) => {
                    emit(
                        cli.json,
                        "lcm",
                        "ok",
                        serde_json::json!({
                            "lcm": l.lcm.letters(),
                            "comp_u": l.comp_u.letters(),
                            "comp_v": l.comp_v.letters(),
                        }),
                        format!(
                            "lcm = {}\ncomplement of u = {}\ncomplement of v = {}",
                            s.base().word_string(&l.lcm),
                            s.base().word_string(&l.comp_u),
                            s.base().word_string(&l.comp_v)
                        ),
                    );
                    Ok(EXIT_OK)
                }
                None => {
                    emit(
                        cli.json,
                        "lcm",
                        "none",
                        serde_json::json!(null),
                        "no common multiple".to_string(),
                    );
                    Ok(EXIT_FAIL)
                }
            }
        }
        Cmd::Gcd(args) => {
            let s = args.select.structure(&args.delta, &caps)?;
            let u = parse_word(&args.u)?;
            let v = parse_word(&args.v)?;
            let side = parse_side(&args.side)?;
            let g = match side {
                Side::Left => s.gcd_left(&u, &v),
                Side::Right => s.gcd_right(&u, &v),
            }
            .map_err(|e| CmdError::Inconclusive(e.to_string()))?;
            emit(
                cli.json,
                "gcd",
                "ok",
                serde_json::json!({ "gcd": g.letters() }),
                format!("gcd = {}", s.base().word_string(&g)),
            );
            Ok(EXIT_OK)
        }
        Cmd::Wp(args) => {
            let s = args.select.structure(&args.delta, &caps)?;
            let u = parse_signed(&args.u)?;
            let eu = s
                .group_normalize(&u)
                .map_err(|e| CmdError::Inconclusive(e.to_string()))?;
            match &args.v {
                None => {
                    emit(
                        cli.json,
                        "wp",
                        "ok",
                        serde_json::json!({ "normal": s.group_element_string(&eu) }),
                        format!("normal form: {}", s.group_element_string(&eu)),
                    );
                    Ok(EXIT_OK)
                }
                Some(v) => {
                    let v = parse_signed(v)?;
                    let ev = s
                        .group_normalize(&v)
                        .map_err(|e| CmdError::Inconclusive(e.to_string()))?;
                    let equal = eu == ev;
                    emit(
                        cli.json,
                        "wp",
                        if equal { "equal" } else { "distinct" },
                        serde_json::json!({
                            "equal": equal,
                            "u": s.group_element_string(&eu),
                            "v": s.group_element_string(&ev),
                        }),
                        format!(
                            "{}\nu = {}\nv = {}",
                            if equal { "EQUAL" } else { "DISTINCT" },
                            s.group_element_string(&eu),
                            s.group_element_string(&ev)
                        ),
                    );
                    Ok(if equal { EXIT_OK } else { EXIT_FAIL })
                }
            }
        }
        Cmd::Braid { what } => match what {
            BraidCmd::Nf { strands, word } => {
                if *strands < 2 {
                    return Err(CmdError::Usage("need at least two strands".into()));
                }
                let w = parse_signed(word)?;
                for l in &w.0 {
                    if l.gen as usize >= *strands {
                        return Err(CmdError::Usage(format!(
                            "generator {} out of range for {} strands",
                            l.gen, strands
                        )));
                    }
                }
                let nf = braidref::braid_normal_form(*strands, &w);
                let factors: Vec<Vec<usize>> =
                    nf.factors.iter().map(|p| p.one_line()).collect();
                emit(
                    cli.json,
                    "braid-nf",
                    "ok",
                    serde_json::json!({ "delta_power": nf.delta_pow, "factors": factors }),
                    format!(
                        "delta_power = {}\nfactors = {}",
                        nf.delta_pow,
                        if factors.is_empty() {
                            "[]".to_string()
                        } else {
                            factors
                                .iter()
                                .map(|f| format!("{f:?}"))
                                .collect::<Vec<_>>()
                                .join(" ")
                        }
                    ),
                );
                Ok(EXIT_OK)
            }
        },
        Cmd::Order(args) => {
            let resolved = args.select.resolve()?;
            let mut extra = Vec::new();
            for r in &args.add_relator {
                extra.push(parse_relator(&resolved.presentation, r)?);
            }
            let gp = cosets::quotient_of(&resolved.presentation, &extra);
            let t = cosets::coset_enumerate(&gp, args.max_cosets);
            match t.order() {
                Some(k) => {
                    emit(
                        cli.json,
                        "order",
                        "ok",
                        serde_json::json!({ "order": k }),
                        format!("order {k}"),
                    );
                    Ok(EXIT_OK)
                }
                None => {
                    emit(
                        cli.json,
                        "order",
                        "overflow",
                        serde_json::json!({ "max_cosets": args.max_cosets }),
                        format!("OVERFLOW after {} cosets", args.max_cosets),
                    );
                    Ok(EXIT_INCONCLUSIVE)
                }
            }
        }
        Cmd::Oracle { what } => oracle(cli, what, &oracle_caps),
        Cmd::Scan { what } => match what {
            ScanCmd::Cancellativity(args) => scan_cancellativity(cli, args, &oracle_caps),
        },
        Cmd::Report(args) => {
            if args.n_max < 1 || args.n_max > report::MAX_RANK_CEILING {
                return Err(CmdError::Usage(format!(
                    "--n-max must be between 1 and {}",
                    report::MAX_RANK_CEILING
                )));
            }
            let doc = report::build_report(args.n_max, cli.seed, &caps);
            if cli.json || args.format.as_deref() == Some("json") {
                println!("{}", serde_json::to_string_pretty(&doc).unwrap());
            } else {
                print!("{}", doc.to_markdown());
            }
            Ok(EXIT_OK)
        }
    }
}

fn parse_side(s: &str) -> Result<Side, CmdError> {
    match s {
        "left" => Ok(Side::Left),
        "right" => Ok(Side::Right),
        other => Err(CmdError::Usage(format!("side must be left or right, got `{other}`"))),
    }
}

fn verify(cli: &Cli, what: &VerifyCmd, caps: &Caps, oracle_caps: &Caps) -> Result<i32, CmdError> {
    match what {
        VerifyCmd::Cube(args) => {
            let resolved = args.select.resolve()?;
            let p = &resolved.presentation;
            let table = ComplementTable::new(p)
                .map_err(|e| CmdError::Inconclusive(format!("{e}")))?;
            let mode = match args.variant.as_str() {
                "sharp" => CubeMode::Sharp,
                "equiv" => CubeMode::UpToEquivalence {
                    oracle: p,
                    cap: oracle_caps.class_cap,
                },
                other => return Err(CmdError::Usage(format!("unknown variant `{other}`"))),
            };
            let report = reversing::cube_all_generator_triples(&table, mode, caps.theta_budget);
            let mut rows = Vec::new();
            let mut any_fail = false;
            let mut any_diverged = false;
            let mut any_inconclusive = false;
            for ((a, b, c), verdict) in &report.verdicts {
                let status = match verdict {
                    CubeVerdict::Pass => "pass",
                    CubeVerdict::Fail(f) if f.is_divergence() => {
                        any_diverged = true;
                        "diverged"
                    }
                    CubeVerdict::Fail(_) => {
                        any_fail = true;
                        "fail"
                    }
                    CubeVerdict::Inconclusive(_) => {
                        any_inconclusive = true;
                        "inconclusive"
                    }
                };
                rows.push(((*a, *b, *c), status));
            }
            if cli.json {
                let data: Vec<_> = rows
                    .iter()
                    .map(|((a, b, c), s)| serde_json::json!({"triple": [a, b, c], "verdict": s}))
                    .collect();
                let status = if any_fail {
                    "fail"
                } else if any_diverged || any_inconclusive {
                    "inconclusive"
                } else {
                    "pass"
                };
                println!(
                    "{}",
                    serde_json::to_string_pretty(&Envelope {
                        command: "verify-cube".into(),
                        status: status.into(),
                        data,
                    })
                    .unwrap()
                );
            } else {
                for ((a, b, c), s) in &rows {
                    println!(
                        "({}, {}, {}) {}",
                        p.generator_name(*a),
                        p.generator_name(*b),
                        p.generator_name(*c),
                        s
                    );
                }
                println!(
                    "summary: {} triples, {}",
                    rows.len(),
                    if any_fail {
                        "FAIL"
                    } else if any_diverged || any_inconclusive {
                        "INCONCLUSIVE"
                    } else {
                        "all pass"
                    }
                );
            }
            Ok(if any_fail {
                EXIT_FAIL
            } else if any_diverged || any_inconclusive {
                EXIT_INCONCLUSIVE
            } else {
                EXIT_OK
            })
        }
        VerifyCmd::Garside { select } => {
            let resolved = select.resolve()?;
            let (kind, n, _m) = resolved
                .family
                .ok_or_else(|| CmdError::Usage("verify garside needs a named family".into()))?;
            if kind != "mn" {
                // Generic families: build the structure and report the basics.
                let s = select.structure(&None, caps)?;
                let central = s
                    .is_central(s.delta())
                    .map_err(|e| CmdError::Inconclusive(e.to_string()))?;
                println!(
                    "ok divisor-lattice: {} simples; both orders are lattices",
                    s.simple_count()
                );
                println!("{} delta-central", if central { "ok" } else { "FAIL" });
                return Ok(if central { EXIT_OK } else { EXIT_FAIL });
            }
            let checks = report::garside_axiom_checks(n, caps)
                .map_err(CmdError::Inconclusive)?;
            let all_ok = checks.iter().all(|c| c.ok);
            if cli.json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&Envelope {
                        command: "verify-garside".into(),
                        status: if all_ok { "pass".into() } else { "fail".to_string() },
                        data: &checks,
                    })
                    .unwrap()
                );
            } else {
                for c in &checks {
                    if c.detail.is_empty() {
                        println!("{} {}", if c.ok { "ok" } else { "FAIL" }, c.name);
                    } else {
                        println!("{} {}: {}", if c.ok { "ok" } else { "FAIL" }, c.name, c.detail);
                    }
                }
            }
            Ok(if all_ok { EXIT_OK } else { EXIT_FAIL })
        }
        VerifyCmd::Hom(args) => {
            let n = args.n;
            let (name, passed): (&str, Result<bool, String>) = match args.map.as_str() {
                "braid-surjection" => (
                    "braid-surjection",
                    families::verify_braid_surjection(n)
                        .map(|v| v.passed())
                        .map_err(|e| e.to_string()),
                ),
                "torus-xy" => (
                    "torus-xy",
                    families::verify_torus_xy_embedding(n, caps)
                        .map(|v| v.passed())
                        .map_err(|e| e.to_string()),
                ),
                "cyclic-roundtrip" => (
                    "cyclic-roundtrip",
                    families::iso_cyclic_roundtrip(n, caps)
                        .map(|r| r.passed())
                        .map_err(|e| e.to_string()),
                ),
                "braid-presentation" => (
                    "braid-presentation",
                    families::pres_bn_maps(n)
                        .map(|r| r.passed())
                        .map_err(|e| e.to_string()),
                ),
                other => return Err(CmdError::Usage(format!("unknown map `{other}`"))),
            };
            match passed {
                Ok(true) => {
                    emit(
                        cli.json,
                        "verify-hom",
                        "pass",
                        serde_json::json!({"map": name, "n": n}),
                        format!("{name} (rank {n}): PASS"),
                    );
                    Ok(EXIT_OK)
                }
                Ok(false) => {
                    emit(
                        cli.json,
                        "verify-hom",
                        "fail",
                        serde_json::json!({"map": name, "n": n}),
                        format!("{name} (rank {n}): FAIL"),
                    );
                    Ok(EXIT_FAIL)
                }
                Err(e) => Err(CmdError::Inconclusive(e)),
            }
        }
        VerifyCmd::NoLcm { n } => match braidref::no_lcm_certificate(*n as usize) {
            Ok(NoLcmReport::Pass {
                multiple_a,
                multiple_b,
            }) => {
                emit(
                    cli.json,
                    "verify-no-lcm",
                    "pass",
                    serde_json::json!({
                        "n": n,
                        "multiple_a": multiple_a.letters(),
                        "multiple_b": multiple_b.letters(),
                    }),
                    format!(
                        "rank {n}: two incomparable common right-multiples found; no right-lcm exists"
                    ),
                );
                Ok(EXIT_OK)
            }
            Ok(NoLcmReport::NotApplicable) => {
                emit(
                    cli.json,
                    "verify-no-lcm",
                    "not-applicable",
                    serde_json::json!({"n": n}),
                    format!("rank {n}: certificate not applicable (the submonoid has lcms)"),
                );
                Ok(EXIT_OK)
            }
            Err(e) => {
                emit(
                    cli.json,
                    "verify-no-lcm",
                    "fail",
                    serde_json::json!({"n": n, "error": e}),
                    format!("rank {n}: FAIL ({e})"),
                );
                Ok(EXIT_FAIL)
            }
        },
        VerifyCmd::Dihedral { m } => {
            let s = families::dihedral_structure(*m, caps)
                .map_err(|e| CmdError::Inconclusive(e.to_string()))?;
            let even = families::even_dihedral_check(8, oracle_caps)
                .map_err(|e| CmdError::Inconclusive(e.to_string()))?;
            let ok = even.passed();
            emit(
                cli.json,
                "verify-dihedral",
                if ok { "pass" } else { "fail" },
                serde_json::json!({
                    "m": m,
                    "simples": s.simple_count(),
                    "even_obstruction": ok,
                }),
                format!(
                    "odd index {m}: structure built with {} simples\neven analogue: obstruction {}",
                    s.simple_count(),
                    if ok { "reproduced" } else { "NOT reproduced" }
                ),
            );
            Ok(if ok { EXIT_OK } else { EXIT_FAIL })
        }
    }
}

fn oracle(cli: &Cli, what: &OracleCmd, oracle_caps: &Caps) -> Result<i32, CmdError> {
    match what {
        OracleCmd::Equal(args) => {
            let resolved = args.select.resolve()?;
            let p = &resolved.presentation;
            let u = parse_word(&args.u)?;
            let v = parse_word(&args.v)?;
            let cap = args.cap.unwrap_or(oracle_caps.class_cap);
            let equal = rewrite::words_equal(p, &u, &v, cap)?;
            emit(
                cli.json,
                "oracle-equal",
                if equal { "equal" } else { "distinct" },
                serde_json::json!({"equal": equal}),
                (if equal { "EQUAL" } else { "DISTINCT" }).to_string(),
            );
            Ok(if equal { EXIT_OK } else { EXIT_FAIL })
        }
        OracleCmd::Divides(args) => {
            let resolved = args.select.resolve()?;
            let p = &resolved.presentation;
            let u = parse_word(&args.u)?;
            let v = parse_word(&args.v)?;
            let cap = args.cap.unwrap_or(oracle_caps.class_cap);
            let witness = match parse_side(&args.side)? {
                Side::Left => rewrite::left_divides(p, &u, &v, cap)?,
                Side::Right => rewrite::right_divides(p, &u, &v, cap)?,
            };
            match witness {
                Some(z) => {
                    emit(
                        cli.json,
                        "oracle-divides",
                        "divides",
                        serde_json::json!({"witness": z.letters()}),
                        format!("DIVIDES with witness {}", p.word_string(&z)),
                    );
                    Ok(EXIT_OK)
                }
                None => {
                    emit(
                        cli.json,
                        "oracle-divides",
                        "no",
                        serde_json::json!(null),
                        "DOES NOT DIVIDE".to_string(),
                    );
                    Ok(EXIT_FAIL)
                }
            }
        }
        OracleCmd::Scan(args) => scan_cancellativity(cli, args, oracle_caps),
    }
}

fn scan_cancellativity(cli: &Cli, args: &ScanArgs, oracle_caps: &Caps) -> Result<i32, CmdError> {
    let resolved = args.select.resolve()?;
    let p = &resolved.presentation;
    let cap = args.cap.unwrap_or(oracle_caps.class_cap);
    let result = rewrite::cancellativity_scan(p, args.max_lambda, cap)?;
    match result {
        None => {
            emit(
                cli.json,
                "scan-cancellativity",
                "pass",
                serde_json::json!({"max_lambda": args.max_lambda, "counterexample": null}),
                format!("no counterexample up to λ = {}", args.max_lambda),
            );
            Ok(EXIT_OK)
        }
        Some(w) => {
            let side = match w.side {
                Side::Left => "left",
                Side::Right => "right",
            };
            emit(
                cli.json,
                "scan-cancellativity",
                "counterexample",
                serde_json::json!({
                    "side": side,
                    "a": w.a.letters(),
                    "b": w.b.letters(),
                    "c": w.c.letters(),
                }),
                format!(
                    "COUNTEREXAMPLE ({side} cancellation): a = {}, b = {}, c = {}\n\
                     this refutes the conjectured cancellativity and requires review",
                    p.word_string(&w.a),
                    p.word_string(&w.b),
                    p.word_string(&w.c)
                ),
            );
            Ok(EXIT_FAIL)
        }
    }
}
