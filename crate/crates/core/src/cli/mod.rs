//! The `weylchar` command line.
//!
//! Every flag can also be set through an environment variable named
//! `WEYLCHAR_<FLAG>` (for example `WEYLCHAR_P=7`, `WEYLCHAR_CAP_WEYL=5000`).
//!
//! Exit codes: 0 ok, 2 configuration/usage/parse, 3 capability, 4 bound,
//! 5 a verification suite reported a failure. Failures print one line on
//! stderr: `weylchar: kind=<kind> code=<code> message=<json string>`.

pub mod suites;

use std::collections::BTreeSet;
use std::ffi::OsString;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::bh_lattice::{
    build_lattice, distinctness_check, down_sets, emit_graphs, hasse_dot, hasse_edges, pi_psi_socle, subrep_lattice, MAX_SUBREP_CAP,
};
use crate::character::{
    conjugate, example_313, first_strongly_generic, genericity, is_weakly_generic, lemma314_check, stabilizer,
    weyl_act, CharSpec, Genericity, Lemma314Mode, TorusCharacter,
};
use crate::closed_roots::{enumerate_closed_subsets, orthogonal_subsets, w_psi_report, ClosedRootSubset};
use crate::error::{Error, Result};
use crate::ext_rules::{
    classify_chain, classify_conj343, prop345_hypotheses, prop347_rule, twist, InductionPair, PiLabel,
    SupersingularToken,
};
use crate::field::{is_prime, ResidueField};
use crate::ord_skeleton::{alpha_chain, alpha_tilde, bruhat_strata, conjecture15_report, h_ord_rhs};
use crate::root_datum::{Kind, RootDatum};
use crate::weyl::{parse_simple_set, Parabolic, WeylGroup};

pub const SCHEMA_VERSION: u32 = 1;
pub const ENV_PREFIX: &str = "WEYLCHAR_";
pub const EXIT_ASSERTION: i32 = 5;

#[derive(Parser, Debug)]
#[command(name = "weylchar", version, about = "Weyl group and torus character combinatorics")]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Dot,
}

#[derive(Args, Debug, Clone)]
pub struct GlobalArgs {
    /// Root datum: glN, gsp4, g2, sc-TYPE or ad-TYPE, with TYPE like a2, b3, a1xa1.
    #[arg(long, global = true, env = "WEYLCHAR_DATUM", default_value = "gl3")]
    pub datum: String,
    #[arg(long, global = true, env = "WEYLCHAR_P", default_value_t = 5)]
    pub p: u64,
    /// Residue field size; defaults to p.
    #[arg(long, global = true, env = "WEYLCHAR_Q")]
    pub q: Option<u64>,
    /// Degree of F over Q_p.
    #[arg(long, global = true, env = "WEYLCHAR_D", default_value_t = 1)]
    pub d: usize,
    /// Output file (a directory for `bh graphs`).
    #[arg(long, global = true, env = "WEYLCHAR_OUT")]
    pub out: Option<PathBuf>,
    #[arg(long, global = true, env = "WEYLCHAR_FORMAT", value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Seed for sampled sweeps.
    #[arg(long, global = true, env = "WEYLCHAR_SEED", default_value_t = 0)]
    pub seed: u64,
    #[arg(long = "cap-weyl", global = true, env = "WEYLCHAR_CAP_WEYL", default_value_t = crate::weyl::DEFAULT_WEYL_CAP)]
    pub cap_weyl: usize,
    /// Largest |I| for subrepresentation lattices (at most 6).
    #[arg(long = "cap-subrep", global = true, env = "WEYLCHAR_CAP_SUBREP", default_value_t = crate::bh_lattice::DEFAULT_SUBREP_CAP)]
    pub cap_subrep: usize,
    /// Largest |Phi+| for closed-subset enumeration.
    #[arg(long = "cap-closed", global = true, env = "WEYLCHAR_CAP_CLOSED", default_value_t = crate::closed_roots::DEFAULT_CLOSED_CAP)]
    pub cap_closed: usize,
    /// Largest number of characters in an exhaustive sweep.
    #[arg(long = "cap-chars", global = true, env = "WEYLCHAR_CAP_CHARS", default_value_t = 1_000_000)]
    pub cap_chars: u64,
    /// Run the invariant suite of the selected command group.
    #[arg(long, global = true)]
    pub selftest: bool,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Root data.
    Datum {
        #[command(subcommand)]
        action: Option<DatumCmd>,
    },
    /// Weyl group enumeration, Bruhat order and Kostant representatives.
    Weyl {
        #[command(subcommand)]
        action: Option<WeylCmd>,
    },
    /// Torus characters and genericity.
    Char {
        #[command(subcommand)]
        action: Option<CharCmd>,
    },
    /// Closed root subsets, W_Psi and orthogonal subsets.
    Roots {
        #[command(subcommand)]
        action: Option<RootsCmd>,
    },
    /// Graded pieces of derived ordinary parts.
    Ord {
        #[command(subcommand)]
        action: Option<OrdCmd>,
    },
    /// Constituent lattices of Pi(chi)_Psi.
    Bh {
        #[command(subcommand)]
        action: Option<BhCmd>,
    },
    /// Extension classifiers.
    Ext {
        #[command(subcommand)]
        action: Option<ExtCmd>,
    },
    /// Assertion suites; exit 5 on failure.
    Verify {
        #[command(subcommand)]
        action: Option<VerifyCmd>,
    },
}

#[derive(Subcommand, Debug)]
pub enum DatumCmd {
    /// Simple roots, coroots, positive roots and derived data.
    Describe {
        /// Family (gl, gsp, g2, sc, ad); overrides --datum together with --n or --type.
        #[arg(long)]
        kind: Option<String>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long = "type")]
        cartan: Option<String>,
    },
}

#[derive(Subcommand, Debug)]
pub enum WeylCmd {
    /// All elements with canonical words.
    Enum,
    /// Kostant representatives of W / W_L.
    Kostant {
        #[arg(long, default_value = "")]
        levi: String,
    },
    /// Bruhat comparison `W1 <= W2`.
    Bruhat {
        #[arg(long, num_args = 2, value_names = ["W1", "W2"])]
        leq: Vec<String>,
    },
    /// `w = w_P w_L`.
    Decompose {
        #[arg(long)]
        w: String,
        #[arg(long, default_value = "")]
        levi: String,
    },
    /// All reduced words of `w`.
    Reduced {
        #[arg(long)]
        w: String,
    },
}

#[derive(Subcommand, Debug)]
pub enum CharCmd {
    /// Genericity level and stabilizer.
    Generic {
        /// Character: a JSON file, inline JSON, `trivial`, `example313` or `strongly-generic`.
        #[arg(long)]
        spec: String,
    },
    /// The order-two G2 character fixed by w0.
    Example313,
    /// Exhaustive sweep of the three distinctness criteria.
    #[command(name = "sweep-lemma314")]
    SweepLemma314,
    /// `s_alpha(chi) != chi` versus `chi o alpha^vee != 1`.
    #[command(name = "sweep-coroot")]
    SweepCoroot,
    /// `w(chi)` and `chi^w`.
    Act {
        #[arg(long)]
        w: String,
        #[arg(long)]
        spec: String,
    },
    /// One distinctness criterion for one pair.
    Lemma314 {
        #[arg(long)]
        w: String,
        #[arg(long)]
        spec: String,
        #[arg(long, default_value = "iii")]
        mode: String,
    },
}

#[derive(Subcommand, Debug)]
pub enum RootsCmd {
    /// W_Psi with Delta cap w(Psi) and its orthogonal subsets.
    Wpsi {
        /// `all`, `empty`, a JSON list of simple-coordinate vectors, or a file holding one.
        #[arg(long, default_value = "all")]
        psi: String,
    },
    /// Pairwise orthogonal subsets of a set of simple roots.
    Orth {
        #[arg(long)]
        set: String,
    },
    /// Every closed subset of Phi+.
    Closed,
}

#[derive(Subcommand, Debug)]
pub enum OrdCmd {
    /// Pieces of one degree.
    Rhs {
        #[arg(long, default_value = "")]
        levi: String,
        #[arg(long)]
        deg: usize,
        #[arg(long = "char", default_value = "trivial")]
        chi: String,
    },
    /// Every degree with its status.
    Report {
        #[arg(long, default_value = "")]
        levi: String,
        #[arg(long = "char", default_value = "trivial")]
        chi: String,
    },
    /// Bruhat cells of P \ G / B with inner strata.
    Strata {
        #[arg(long, default_value = "")]
        levi: String,
    },
    /// The twist filtration along the canonical word of a Kostant representative.
    Chain {
        #[arg(long, default_value = "")]
        levi: String,
        #[arg(long)]
        wp: String,
        #[arg(long, default_value = "e")]
        wl: String,
    },
}

#[derive(Subcommand, Debug)]
pub enum BhCmd {
    /// Constituents, socle degrees and extension graph for one w_Psi.
    Build {
        #[arg(long = "char")]
        chi: String,
        #[arg(long, default_value = "all")]
        psi: String,
        #[arg(long, default_value = "e")]
        wpsi: String,
    },
    /// Socle of Pi(chi)_Psi and label distinctness.
    Socle {
        #[arg(long = "char")]
        chi: String,
        #[arg(long, default_value = "all")]
        psi: String,
    },
    /// Down-set lattice of 2^I.
    Subreps {
        #[arg(long)]
        set: String,
    },
    /// Writes ext graph, lattice JSON and a Hasse diagram into --out.
    Graphs {
        #[arg(long = "char")]
        chi: String,
        #[arg(long, default_value = "all")]
        psi: String,
        #[arg(long, default_value = "e")]
        wpsi: String,
        /// I for the Hasse diagram; defaults to the largest orthogonal subset.
        #[arg(long)]
        set: Option<String>,
    },
}

#[derive(Subcommand, Debug)]
pub enum ExtCmd {
    /// Classifies a chain of principal series.
    Chain {
        #[arg(long)]
        chi: String,
        #[arg(long = "chiP")]
        chi_p: String,
        #[arg(long = "chiPP")]
        chi_pp: String,
    },
    /// Case dispatch for Ind pi' versus Ind pi.
    Conj343 {
        #[arg(long = "P", default_value = "")]
        parabolic: String,
        #[arg(long = "Pp", default_value = "")]
        parabolic_prime: String,
        /// Central character stub (or the character itself for P = B).
        #[arg(long = "chi", default_value = "trivial")]
        chi: String,
        /// `same`, `other`, or `twist:aK`.
        #[arg(long = "pi-prime", default_value = "same")]
        pi_prime: String,
    },
    /// Hypotheses of the Levi comparison isomorphism for d = 1.
    Prop345 {
        #[arg(long, default_value = "")]
        levi: String,
        #[arg(long = "char", default_value = "trivial")]
        chi: String,
    },
    /// The unconditional rule for d >= 2.
    Prop347,
}

#[derive(Subcommand, Debug, Clone, Copy)]
pub enum VerifyCmd {
    /// The G2 order-two character (datum is always G2).
    Example313,
    Lemma314,
    #[command(name = "coroot-equivalence")]
    CorootEquivalence,
    Kostant,
    Ord,
    Bh,
    Chain,
    Conj343,
    /// Every suite over the built-in small data.
    All,
}

/// Validated run configuration.
#[derive(Clone, Debug, Serialize)]
pub struct RunConfig {
    pub datum: String,
    pub p: u64,
    pub q: u64,
    pub d: usize,
    pub seed: u64,
    pub cap_weyl: usize,
    pub cap_subrep: usize,
    pub cap_closed: usize,
    pub cap_chars: u64,
    pub format: Format,
    #[serde(skip)]
    pub kind: Kind,
    #[serde(skip)]
    pub out: Option<PathBuf>,
}

impl RunConfig {
    pub fn from_args(g: &GlobalArgs) -> Result<Self> {
        if !is_prime(g.p) {
            return Err(Error::Config(format!("p = {} is not prime", g.p)));
        }
        let q = g.q.unwrap_or(g.p);
        ResidueField::new(g.p, q)?;
        for (name, v) in [
            ("cap-weyl", g.cap_weyl as u64),
            ("cap-subrep", g.cap_subrep as u64),
            ("cap-closed", g.cap_closed as u64),
            ("cap-chars", g.cap_chars),
        ] {
            if v == 0 {
                return Err(Error::Config(format!("--{name} must be positive")));
            }
        }
        if g.cap_subrep > MAX_SUBREP_CAP {
            return Err(Error::Config(format!("--cap-subrep is at most {MAX_SUBREP_CAP}")));
        }
        if g.d == 0 {
            return Err(Error::Config("--d must be at least 1".into()));
        }
        let kind: Kind = g.datum.parse()?;
        Ok(RunConfig {
            datum: kind.to_string(),
            p: g.p,
            q,
            d: g.d,
            seed: g.seed,
            cap_weyl: g.cap_weyl,
            cap_subrep: g.cap_subrep,
            cap_closed: g.cap_closed,
            cap_chars: g.cap_chars,
            format: g.format,
            kind,
            out: g.out.clone(),
        })
    }

    pub fn field(&self) -> ResidueField {
        ResidueField::new(self.p, self.q).expect("validated")
    }

    pub fn group(&self) -> Result<WeylGroup> {
        Ok(WeylGroup::with_cap(RootDatum::build(self.kind.clone())?, self.cap_weyl))
    }
}

/// What a run produced.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

enum Artifact {
    Json(Value),
    Dot(String),
}

fn diagnostic(kind: &str, code: i32, message: &str) -> String {
    format!("weylchar: kind={kind} code={code} message={}\n", Value::from(message))
}

fn failure(e: &Error) -> Outcome {
    let code = e.exit_code();
    Outcome { code, stdout: String::new(), stderr: diagnostic(e.kind(), code, &e.to_string()) }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    Outcome { code: 0, stdout: e.render().to_string(), stderr: String::new() }
                }
                ErrorKind::DisplayHelpOnMissingArgumentOrSubcommand => {
                    Outcome { code: 2, stdout: String::new(), stderr: e.render().to_string() }
                }
                _ => {
                    let text = e.render().to_string();
                    let first = text.lines().next().unwrap_or("").trim_start_matches("error: ");
                    Outcome { code: 2, stdout: String::new(), stderr: diagnostic("usage", 2, first) }
                }
            };
        }
    };
    let cfg = match RunConfig::from_args(&cli.global) {
        Ok(c) => c,
        Err(e) => return failure(&e),
    };
    match execute(&cli.command, &cfg, cli.global.selftest) {
        Ok((name, artifact)) => emit(&name, &cfg, artifact),
        Err(e) => failure(&e),
    }
}

fn emit(name: &str, cfg: &RunConfig, artifact: Artifact) -> Outcome {
    let (text, passed) = match artifact {
        Artifact::Json(result) => {
            let passed = result.get("passed").and_then(Value::as_bool).unwrap_or(true);
            let env = json!({
                "schema_version": SCHEMA_VERSION,
                "command": name,
                "config": cfg,
                "result": result,
            });
            (serde_json::to_string_pretty(&env).expect("serializable") + "\n", passed)
        }
        Artifact::Dot(dot) => (dot, true),
    };
    let mut out = Outcome { code: 0, stdout: String::new(), stderr: String::new() };
    match &cfg.out {
        Some(path) if name != "bh graphs" => {
            if let Err(e) = std::fs::write(path, &text) {
                return failure(&Error::Io(e));
            }
        }
        _ => out.stdout = text,
    }
    if !passed {
        out.code = EXIT_ASSERTION;
        out.stderr = diagnostic("assertion", EXIT_ASSERTION, &format!("suite '{name}' reported a failure"));
    }
    out
}

fn json_of<T: Serialize>(v: &T) -> Result<Artifact> {
    Ok(Artifact::Json(serde_json::to_value(v)?))
}

fn need_json(cfg: &RunConfig, name: &str) -> Result<()> {
    if cfg.format == Format::Dot {
        return Err(Error::Usage(format!("'{name}' has no DOT output")));
    }
    Ok(())
}

fn levi_set(group: &WeylGroup, s: &str) -> Result<Parabolic> {
    let t = s.trim();
    let set = if t == "b" || t == "B" || t == "torus" { BTreeSet::new() } else { parse_simple_set(t)? };
    group.parabolic(set)
}

fn one_based(s: &BTreeSet<usize>) -> Vec<usize> {
    s.iter().map(|i| i + 1).collect()
}

/// Reads a character argument: a file, inline JSON, or a keyword.
pub fn load_character(cfg: &RunConfig, group: &WeylGroup, arg: &str) -> Result<TorusCharacter> {
    let datum = group.datum();
    let field = cfg.field();
    let t = arg.trim();
    let chi = match t {
        "trivial" => return Ok(TorusCharacter::trivial(datum, field)),
        "example313" => return example_313(datum, field),
        "strongly-generic" => {
            return first_strongly_generic(group, field, suites::EXHAUSTIVE_LIMIT as u128)?
                .ok_or_else(|| Error::Capability(format!("no strongly generic character for {} at q = {}", datum.kind(), field.q())))
        }
        _ if t.starts_with('{') => CharSpec::from_json(t)?,
        _ => CharSpec::from_json(&std::fs::read_to_string(Path::new(t))?)?,
    };
    let f = chi.field()?;
    if f.p() != field.p() || f.q() != field.q() {
        return Err(Error::Config(format!(
            "character is over F_{} (p = {}), run uses F_{} (p = {}); pass --p/--q",
            f.q(),
            f.p(),
            field.q(),
            field.p()
        )));
    }
    chi.to_character(datum)
}

fn load_psi(datum: &RootDatum, arg: &str) -> Result<ClosedRootSubset> {
    let t = arg.trim();
    if t.starts_with('[') || matches!(t, "all" | "phi+" | "empty" | "none") {
        ClosedRootSubset::parse(datum, t)
    } else {
        ClosedRootSubset::parse(datum, &std::fs::read_to_string(t)?)
    }
}

fn describe_char(group: &WeylGroup, chi: &TorusCharacter) -> Result<Value> {
    let gen = genericity(group, chi)?;
    let stab = stabilizer(group, chi)?;
    Ok(json!({
        "character": CharSpec::from_character(chi),
        "display": chi.to_string(),
        "genericity": gen,
        "weakly_generic": is_weakly_generic(group, chi)?,
        "generic": gen >= Genericity::Generic,
        "strongly_generic": gen == Genericity::StronglyGeneric,
        "stabilizer": stab.iter().map(|w| w.word_one_based()).collect::<Vec<_>>(),
    }))
}

fn selftest_group(cmd: &Command) -> &'static str {
    match cmd {
        Command::Datum { .. } => "datum",
        Command::Weyl { .. } => "weyl",
        Command::Char { .. } => "char",
        Command::Roots { .. } => "roots",
        Command::Ord { .. } => "ord",
        Command::Bh { .. } => "bh",
        Command::Ext { .. } => "ext",
        Command::Verify { .. } => "verify",
    }
}

fn missing(group: &str) -> Error {
    Error::Usage(format!("'{group}' needs an action (or --selftest); see --help"))
}

fn execute(cmd: &Command, cfg: &RunConfig, selftest: bool) -> Result<(String, Artifact)> {
    if selftest {
        let g = selftest_group(cmd);
        need_json(cfg, "selftest")?;
        return Ok((format!("{g} selftest"), Artifact::Json(suites::selftest(g, cfg.seed)?)));
    }
    match cmd {
        Command::Datum { action } => match action.as_ref().ok_or_else(|| missing("datum"))? {
            DatumCmd::Describe { kind, n, cartan } => {
                need_json(cfg, "datum describe")?;
                let kind = match (kind.as_deref(), n, cartan) {
                    (None, _, _) => cfg.kind.clone(),
                    (Some("gl"), Some(n), _) => Kind::Gl(*n),
                    (Some("gsp"), Some(4) | None, _) => Kind::Gsp4,
                    (Some("g2"), _, _) => Kind::G2,
                    (Some("sc"), _, Some(t)) => Kind::SimplyConnected(t.parse()?),
                    (Some("ad"), _, Some(t)) => Kind::Adjoint(t.parse()?),
                    (Some(k), _, _) => return Err(Error::Usage(format!("--kind {k} needs --n or --type"))),
                };
                Ok(("datum describe".into(), json_of(&RootDatum::build(kind)?.describe())?))
            }
        },
        Command::Weyl { action } => weyl_cmd(action.as_ref().ok_or_else(|| missing("weyl"))?, cfg),
        Command::Char { action } => char_cmd(action.as_ref().ok_or_else(|| missing("char"))?, cfg),
        Command::Roots { action } => roots_cmd(action.as_ref().ok_or_else(|| missing("roots"))?, cfg),
        Command::Ord { action } => ord_cmd(action.as_ref().ok_or_else(|| missing("ord"))?, cfg),
        Command::Bh { action } => bh_cmd(action.as_ref().ok_or_else(|| missing("bh"))?, cfg),
        Command::Ext { action } => ext_cmd(action.as_ref().ok_or_else(|| missing("ext"))?, cfg),
        Command::Verify { action } => verify_cmd(*action.as_ref().ok_or_else(|| missing("verify"))?, cfg),
    }
}

fn weyl_cmd(cmd: &WeylCmd, cfg: &RunConfig) -> Result<(String, Artifact)> {
    need_json(cfg, "weyl")?;
    let group = cfg.group()?;
    match cmd {
        WeylCmd::Enum => {
            let els = group.elements()?;
            let mut dist = vec![0usize; group.datum().num_positive_roots() + 1];
            for w in els {
                dist[w.length()] += 1;
            }
            let elements: Vec<Value> =
                els.iter().map(|w| json!({ "word": w.word_one_based(), "length": w.length() })).collect();
            Ok((
                "weyl enum".into(),
                Artifact::Json(json!({ "order": els.len(), "length_distribution": dist, "elements": elements })),
            ))
        }
        WeylCmd::Kostant { levi } => {
            let p = levi_set(&group, levi)?;
            let reps = group.kostant_representatives(&p)?;
            let levi_order = group.levi_elements(&p)?.len();
            Ok((
                "weyl kostant".into(),
                Artifact::Json(json!({
                    "levi": one_based(p.levi()),
                    "orthogonal": one_based(p.orthogonal()),
                    "weyl_order": group.elements()?.len(),
                    "levi_order": levi_order,
                    "representatives": reps.iter().map(|w| w.word_one_based()).collect::<Vec<_>>(),
                })),
            ))
        }
        WeylCmd::Bruhat { leq } => {
            if leq.len() != 2 {
                return Err(Error::Usage("weyl bruhat needs --leq W1 W2".into()));
            }
            let a = group.parse_word(&leq[0])?;
            let b = group.parse_word(&leq[1])?;
            Ok((
                "weyl bruhat".into(),
                Artifact::Json(json!({
                    "w1": a.word_one_based(),
                    "w2": b.word_one_based(),
                    "leq": group.bruhat_leq(&a, &b),
                })),
            ))
        }
        WeylCmd::Decompose { w, levi } => {
            let p = levi_set(&group, levi)?;
            let w = group.parse_word(w)?;
            let (rep, wl) = group.kostant_decompose(&w, &p);
            Ok((
                "weyl decompose".into(),
                Artifact::Json(json!({
                    "w": w.word_one_based(),
                    "kostant_rep": rep.word_one_based(),
                    "w_l": wl.word_one_based(),
                })),
            ))
        }
        WeylCmd::Reduced { w } => {
            let w = group.parse_word(w)?;
            let words: Vec<Vec<usize>> =
                group.reduced_words(&w).iter().map(|x| x.iter().map(|i| i + 1).collect()).collect();
            Ok(("weyl reduced".into(), Artifact::Json(json!({ "w": w.word_one_based(), "reduced_words": words }))))
        }
    }
}

fn char_cmd(cmd: &CharCmd, cfg: &RunConfig) -> Result<(String, Artifact)> {
    need_json(cfg, "char")?;
    match cmd {
        CharCmd::Example313 => {
            let group = WeylGroup::new(RootDatum::build(Kind::G2)?);
            let chi = example_313(group.datum(), ResidueField::prime(cfg.p)?)?;
            Ok(("char example313".into(), Artifact::Json(describe_char(&group, &chi)?)))
        }
        CharCmd::SweepLemma314 => {
            let group = cfg.group()?;
            Ok(("char sweep-lemma314".into(), Artifact::Json(suites::lemma314(&group, cfg.field(), cfg.cap_chars)?)))
        }
        CharCmd::SweepCoroot => {
            let group = cfg.group()?;
            Ok(("char sweep-coroot".into(), Artifact::Json(suites::coroot_equivalence(&group, cfg.field(), cfg.seed)?)))
        }
        CharCmd::Generic { spec } => {
            let group = cfg.group()?;
            let chi = load_character(cfg, &group, spec)?;
            Ok(("char generic".into(), Artifact::Json(describe_char(&group, &chi)?)))
        }
        CharCmd::Act { w, spec } => {
            let group = cfg.group()?;
            let chi = load_character(cfg, &group, spec)?;
            let w = group.parse_word(w)?;
            Ok((
                "char act".into(),
                Artifact::Json(json!({
                    "w": w.word_one_based(),
                    "w_chi": CharSpec::from_character(&weyl_act(&group, &w, &chi)?),
                    "chi_w": CharSpec::from_character(&conjugate(&group, &w, &chi)?),
                })),
            ))
        }
        CharCmd::Lemma314 { w, spec, mode } => {
            let group = cfg.group()?;
            let chi = load_character(cfg, &group, spec)?;
            let w = group.parse_word(w)?;
            let mode: Lemma314Mode = mode.parse()?;
            Ok(("char lemma314".into(), json_of(&lemma314_check(&group, &chi, &w, mode, None)?)?))
        }
    }
}

fn roots_cmd(cmd: &RootsCmd, cfg: &RunConfig) -> Result<(String, Artifact)> {
    need_json(cfg, "roots")?;
    let group = cfg.group()?;
    let datum = group.datum();
    match cmd {
        RootsCmd::Wpsi { psi } => {
            let psi = load_psi(datum, psi)?;
            let entries = w_psi_report(&group, &psi)?;
            Ok((
                "roots wpsi".into(),
                Artifact::Json(json!({ "psi": psi.simple_coords(datum), "size": entries.len(), "w_psi": entries })),
            ))
        }
        RootsCmd::Orth { set } => {
            let s = parse_simple_set(set)?;
            if let Some(bad) = s.iter().find(|&&a| a >= datum.semisimple_rank()) {
                return Err(Error::Usage(format!("a{} is not a simple root", bad + 1)));
            }
            let subs: Vec<Vec<usize>> = orthogonal_subsets(datum, &s).iter().map(one_based).collect();
            Ok(("roots orth".into(), Artifact::Json(json!({ "set": one_based(&s), "orthogonal_subsets": subs }))))
        }
        RootsCmd::Closed => {
            let all = enumerate_closed_subsets(datum, cfg.cap_closed)?;
            let subsets: Vec<Vec<Vec<i64>>> = all.iter().map(|s| s.simple_coords(datum)).collect();
            Ok(("roots closed".into(), Artifact::Json(json!({ "count": all.len(), "subsets": subsets }))))
        }
    }
}

fn ord_cmd(cmd: &OrdCmd, cfg: &RunConfig) -> Result<(String, Artifact)> {
    need_json(cfg, "ord")?;
    let group = cfg.group()?;
    match cmd {
        OrdCmd::Rhs { levi, deg, chi } => {
            let p = levi_set(&group, levi)?;
            let chi = load_character(cfg, &group, chi)?;
            let pieces: Vec<Value> = h_ord_rhs(&group, &p, &chi, *deg, cfg.d)?
                .iter()
                .map(|piece| {
                    json!({
                        "kostant_rep": piece.kostant_rep.word_one_based(),
                        "alpha_tilde": piece.alpha_tilde.simple_coords,
                        "output_character": CharSpec::from_character(&piece.output),
                    })
                })
                .collect();
            Ok(("ord rhs".into(), Artifact::Json(json!({ "degree": deg, "levi": one_based(p.levi()), "pieces": pieces }))))
        }
        OrdCmd::Report { levi, chi } => {
            let p = levi_set(&group, levi)?;
            let chi = load_character(cfg, &group, chi)?;
            let rows = conjecture15_report(&group, &p, &chi, cfg.d)?;
            Ok((
                "ord report".into(),
                Artifact::Json(json!({ "levi": one_based(p.levi()), "rows": rows })),
            ))
        }
        OrdCmd::Strata { levi } => {
            let p = levi_set(&group, levi)?;
            Ok(("ord strata".into(), json_of(&bruhat_strata(&group, &p)?)?))
        }
        OrdCmd::Chain { levi, wp, wl } => {
            let p = levi_set(&group, levi)?;
            let wp = group.parse_word(wp)?;
            let wl = group.parse_word(wl)?;
            let steps = alpha_chain(&group, &p, &wp, &wl)?;
            Ok((
                "ord chain".into(),
                Artifact::Json(json!({
                    "w_p": wp.word_one_based(),
                    "w_l": wl.word_one_based(),
                    "alpha_tilde": alpha_tilde(&group, &wp).simple_coords,
                    "steps": steps,
                    "passed": steps.iter().all(|s| s.holds),
                })),
            ))
        }
    }
}

fn bh_cmd(cmd: &BhCmd, cfg: &RunConfig) -> Result<(String, Artifact)> {
    let group = cfg.group()?;
    let datum = group.datum();
    match cmd {
        BhCmd::Build { chi, psi, wpsi } => {
            let chi = load_character(cfg, &group, chi)?;
            let psi = load_psi(datum, psi)?;
            let lat = build_lattice(&group, &chi, &psi, &group.parse_word(wpsi)?)?;
            let art = match cfg.format {
                Format::Dot => Artifact::Dot(lat.to_dot()),
                Format::Json => Artifact::Json(serde_json::to_value(lat.to_json())?),
            };
            Ok(("bh build".into(), art))
        }
        BhCmd::Socle { chi, psi } => {
            need_json(cfg, "bh socle")?;
            let chi = load_character(cfg, &group, chi)?;
            let psi = load_psi(datum, psi)?;
            let (_, socle) = pi_psi_socle(&group, &chi, &psi)?;
            let distinct = distinctness_check(&group, &chi, &psi)?;
            Ok(("bh socle".into(), Artifact::Json(json!({ "socle": socle, "distinctness": distinct }))))
        }
        BhCmd::Subreps { set } => {
            let s = parse_simple_set(set)?;
            let art = match cfg.format {
                Format::Dot => Artifact::Dot(hasse_dot(&s, cfg.cap_subrep)?),
                Format::Json => {
                    let fams = subrep_lattice(&s, cfg.cap_subrep)?;
                    let edges = hasse_edges(&down_sets(s.len(), cfg.cap_subrep)?);
                    let fams: Vec<Vec<Vec<usize>>> =
                        fams.iter().map(|f| f.iter().map(one_based).collect()).collect();
                    Artifact::Json(json!({ "I": one_based(&s), "count": fams.len(), "subreps": fams, "hasse_edges": edges }))
                }
            };
            Ok(("bh subreps".into(), art))
        }
        BhCmd::Graphs { chi, psi, wpsi, set } => {
            need_json(cfg, "bh graphs")?;
            let dir = cfg.out.clone().ok_or_else(|| Error::Usage("bh graphs needs --out <dir>".into()))?;
            let chi = load_character(cfg, &group, chi)?;
            let psi = load_psi(datum, psi)?;
            let lat = build_lattice(&group, &chi, &psi, &group.parse_word(wpsi)?)?;
            let i_set = match set {
                Some(s) => parse_simple_set(s)?,
                None => lat.constituents.iter().map(|c| c.i_set.clone()).max_by_key(BTreeSet::len).unwrap_or_default(),
            };
            std::fs::create_dir_all(&dir)?;
            let files = emit_graphs(&lat, &i_set, cfg.cap_subrep)?;
            for (name, body) in &files {
                std::fs::write(dir.join(name), body)?;
            }
            Ok((
                "bh graphs".into(),
                Artifact::Json(json!({
                    "files": files.iter().map(|(n, _)| *n).collect::<Vec<_>>(),
                    "hasse_I": one_based(&i_set),
                })),
            ))
        }
    }
}

fn parse_pi_prime(group: &WeylGroup, p: &Parabolic, pp: &Parabolic, pi: &PiLabel, spec: &str, chi: &TorusCharacter) -> Result<PiLabel> {
    let t = spec.trim();
    let base = |name: &str| {
        if pp.levi().is_empty() {
            PiLabel::Character(chi.clone())
        } else {
            PiLabel::Supersingular(SupersingularToken { name: name.into(), conj: group.identity(), central: chi.clone() })
        }
    };
    if t == "same" {
        return Ok(base("pi"));
    }
    if t == "other" {
        return Ok(base("pi_other"));
    }
    if let Some(root) = t.strip_prefix("twist:") {
        if p != pp {
            return Err(Error::Usage("twist:aK needs --P equal to --Pp".into()));
        }
        let a = parse_simple_set(root)?;
        let &[a] = a.iter().copied().collect::<Vec<_>>().as_slice() else {
            return Err(Error::Usage("twist needs exactly one simple root".into()));
        };
        return twist(group, p, pi, a);
    }
    Err(Error::Usage(format!("--pi-prime must be same, other or twist:aK, got '{spec}'")))
}

fn ext_cmd(cmd: &ExtCmd, cfg: &RunConfig) -> Result<(String, Artifact)> {
    need_json(cfg, "ext")?;
    let group = cfg.group()?;
    match cmd {
        ExtCmd::Chain { chi, chi_p, chi_pp } => {
            let a = load_character(cfg, &group, chi)?;
            let b = load_character(cfg, &group, chi_p)?;
            let c = load_character(cfg, &group, chi_pp)?;
            Ok(("ext chain".into(), json_of(&classify_chain(&group, &a, &b, &c)?)?))
        }
        ExtCmd::Conj343 { parabolic, parabolic_prime, chi, pi_prime } => {
            let p = levi_set(&group, parabolic)?;
            let pp = levi_set(&group, parabolic_prime)?;
            let chi = load_character(cfg, &group, chi)?;
            let pi = if p.levi().is_empty() {
                PiLabel::Character(chi.clone())
            } else {
                PiLabel::Supersingular(SupersingularToken { name: "pi".into(), conj: group.identity(), central: chi.clone() })
            };
            let pi_prime = parse_pi_prime(&group, &p, &pp, &pi, pi_prime, &chi)?;
            let report = classify_conj343(&group, &InductionPair { p, p_prime: pp, pi: pi.clone(), pi_prime: pi_prime.clone() }, cfg.d)?;
            let mut v = serde_json::to_value(report)?;
            v["pi"] = json!(pi.describe());
            v["pi_prime"] = json!(pi_prime.describe());
            Ok(("ext conj343".into(), Artifact::Json(v)))
        }
        ExtCmd::Prop345 { levi, chi } => {
            let p = levi_set(&group, levi)?;
            let chi = load_character(cfg, &group, chi)?;
            let mut v = serde_json::to_value(prop345_hypotheses(&group, &p, &chi)?)?;
            v["d"] = json!(cfg.d);
            if cfg.d >= 2 {
                v["prediction"] = json!(prop347_rule(cfg.d)?.verdict);
            }
            Ok(("ext prop345".into(), Artifact::Json(v)))
        }
        ExtCmd::Prop347 => Ok(("ext prop347".into(), json_of(&prop347_rule(cfg.d)?)?)),
    }
}

fn verify_cmd(cmd: VerifyCmd, cfg: &RunConfig) -> Result<(String, Artifact)> {
    need_json(cfg, "verify")?;
    let field = cfg.field();
    let (name, v) = match cmd {
        VerifyCmd::Example313 => ("verify example313", suites::example313(cfg.p)?),
        VerifyCmd::Lemma314 => ("verify lemma314", suites::lemma314(&cfg.group()?, field, cfg.cap_chars)?),
        VerifyCmd::CorootEquivalence => {
            ("verify coroot-equivalence", suites::coroot_equivalence(&cfg.group()?, field, cfg.seed)?)
        }
        VerifyCmd::Kostant => ("verify kostant", suites::kostant(&cfg.group()?)?),
        VerifyCmd::Ord => ("verify ord", suites::ord(&cfg.group()?, field, 4096)?),
        VerifyCmd::Bh => ("verify bh", suites::bh(&cfg.group()?, field, cfg.cap_closed, cfg.cap_subrep)?),
        VerifyCmd::Chain => ("verify chain", suites::chain(&cfg.group()?, field)?),
        VerifyCmd::Conj343 => ("verify conj343", suites::conj343(&cfg.group()?, field)?),
        VerifyCmd::All => ("verify all", suites::selftest("verify", cfg.seed)?),
    };
    Ok((name.into(), Artifact::Json(v)))
}
