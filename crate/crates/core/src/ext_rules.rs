//! Statement-level classifiers for extensions between induced representations.
//!
//! Nothing here computes an Ext group. Each function evaluates the hypotheses
//! of a known rule on finite data and reports which rule applies.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::character::{compose_coroot, is_weakly_generic, weyl_act, CharSpec, TorusCharacter};
use crate::error::{Error, Result};
use crate::weyl::{Parabolic, WeylElement, WeylGroup};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "kind", content = "simple_root")]
pub enum ExtEdge {
    None,
    /// `chi_2 = s_alpha(chi_1)` with `chi_1 o alpha^vee != 1`; 0-based index.
    SimpleReflection(usize),
    SelfLoop,
}

/// Necessary condition for a non-split extension between the principal series
/// attached to `chi_1` and `chi_2`.
pub fn ext_edge(group: &WeylGroup, chi1: &TorusCharacter, chi2: &TorusCharacter) -> Result<ExtEdge> {
    if chi1 == chi2 {
        return Ok(ExtEdge::SelfLoop);
    }
    for a in 0..group.datum().semisimple_rank() {
        if compose_coroot(group.datum(), chi1, a)?.is_trivial() {
            continue;
        }
        if &weyl_act(group, &group.simple_reflection(a)?, chi1)? == chi2 {
            return Ok(ExtEdge::SimpleReflection(a));
        }
    }
    Ok(ExtEdge::None)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ChainVerdict {
    Excluded,
    UniqueChain,
    NoEdge,
    OutOfScope,
}

#[derive(Clone, Debug, Serialize)]
pub struct ChainReport {
    pub verdict: ChainVerdict,
    pub rule: &'static str,
    pub edge_first: ExtEdge,
    pub edge_second: ExtEdge,
    /// Irreducibility of the three principal series is never checked.
    pub irreducibility_checked: bool,
}

/// Classifies a chain with socle `chi`, middle `chi'` and cosocle `chi''`.
///
/// Checked in order: the parabolically induced chain from a Levi of semisimple
/// rank one, a missing extension edge, the non-existence rule, and otherwise
/// out of scope.
pub fn classify_chain(
    group: &WeylGroup,
    chi: &TorusCharacter,
    chi_p: &TorusCharacter,
    chi_pp: &TorusCharacter,
) -> Result<ChainReport> {
    let edge_first = ext_edge(group, chi, chi_p)?;
    let edge_second = ext_edge(group, chi_p, chi_pp)?;
    let report = |verdict, rule| ChainReport { verdict, rule, edge_first, edge_second, irreducibility_checked: false };

    if chi_pp == chi && chi_p != chi {
        for a in 0..group.datum().semisimple_rank() {
            if &weyl_act(group, &group.simple_reflection(a)?, chi)? == chi_p {
                return Ok(report(ChainVerdict::UniqueChain, "unique_chain_from_gl2"));
            }
        }
    }
    if edge_first == ExtEdge::None || edge_second == ExtEdge::None {
        return Ok(report(ChainVerdict::NoEdge, "missing_extension_edge"));
    }
    let middle_repeats = chi_p == chi || chi_p == chi_pp;
    if chi != chi_pp && (!middle_repeats || is_weakly_generic(group, chi_p)?) {
        return Ok(report(ChainVerdict::Excluded, "chain_nonexistence"));
    }
    Ok(report(ChainVerdict::OutOfScope, "hypotheses_not_met"))
}

/// Opaque stand-in for a supersingular representation of a Levi.
///
/// It records a name, the accumulated conjugation by elements of W, and a
/// torus character standing in for the central character.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SupersingularToken {
    pub name: String,
    pub conj: WeylElement,
    pub central: TorusCharacter,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PiLabel {
    Character(TorusCharacter),
    Supersingular(SupersingularToken),
}

impl PiLabel {
    pub fn describe(&self) -> String {
        match self {
            PiLabel::Character(c) => format!("character {c}"),
            PiLabel::Supersingular(t) => format!("{}^{} central {}", t.name, t.conj.label(), t.central),
        }
    }
}

#[derive(Clone, Debug)]
pub struct InductionPair {
    pub p: Parabolic,
    pub p_prime: Parabolic,
    pub pi: PiLabel,
    pub pi_prime: PiLabel,
}

fn check_label(p: &Parabolic, label: &PiLabel) -> Result<()> {
    match (p.levi().is_empty(), label) {
        (true, PiLabel::Character(_)) | (false, PiLabel::Supersingular(_)) => Ok(()),
        (true, _) => Err(Error::Usage("a torus Levi needs a character label".into())),
        (false, _) => Err(Error::Usage("a non-torus Levi needs a supersingular token".into())),
    }
}

/// `pi^alpha (x) (omega^{-1} o alpha)` for `alpha` orthogonal to the Levi.
pub fn twist(group: &WeylGroup, p: &Parabolic, label: &PiLabel, alpha: usize) -> Result<PiLabel> {
    if !p.orthogonal().contains(&alpha) {
        return Err(Error::Usage(format!("a{} is not orthogonal to the Levi", alpha + 1)));
    }
    let s = group.simple_reflection(alpha)?;
    let root = group.datum().simple_root(alpha);
    let move_char = |c: &TorusCharacter| -> Result<TorusCharacter> {
        weyl_act(group, &s, c)?.twist_by_omega_inverse(group.datum(), root)
    };
    Ok(match label {
        PiLabel::Character(c) => PiLabel::Character(move_char(c)?),
        PiLabel::Supersingular(t) => PiLabel::Supersingular(SupersingularToken {
            name: t.name.clone(),
            conj: group.multiply(&s, &t.conj),
            central: move_char(&t.central)?,
        }),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Conj343Case {
    CaseI,
    CaseIi,
    CaseIii,
    CaseIv,
}

#[derive(Clone, Debug, Serialize)]
pub struct Conj343Report {
    pub case: Conj343Case,
    pub prediction: &'static str,
    pub delta_l: Vec<usize>,
    pub delta_l_prime: Vec<usize>,
    pub delta_l_perp: Vec<usize>,
    pub twist_root: Option<usize>,
    /// Irreducibility of the induced representations (or `p != 2`) is assumed.
    pub irreducible_or_p_odd_checked: bool,
}

fn one_based(s: &BTreeSet<usize>) -> Vec<usize> {
    s.iter().map(|i| i + 1).collect()
}

/// Case dispatch for extensions between `Ind pi'` and `Ind pi`.
pub fn classify_conj343(group: &WeylGroup, pair: &InductionPair, d: usize) -> Result<Conj343Report> {
    check_label(&pair.p, &pair.pi)?;
    check_label(&pair.p_prime, &pair.pi_prime)?;
    let p_in_pp = pair.p.is_contained_in(&pair.p_prime);
    let pp_in_p = pair.p_prime.is_contained_in(&pair.p);
    let mut twist_root = None;
    let case = if !p_in_pp && !pp_in_p {
        Conj343Case::CaseI
    } else {
        if d == 1 && pair.p == pair.p_prime && pair.pi_prime != pair.pi {
            for &a in pair.p.orthogonal() {
                if twist(group, &pair.p, &pair.pi, a)? == pair.pi_prime {
                    twist_root = Some(a + 1);
                    break;
                }
            }
        }
        if twist_root.is_some() {
            Conj343Case::CaseIi
        } else if pp_in_p {
            Conj343Case::CaseIii
        } else {
            Conj343Case::CaseIv
        }
    };
    let prediction = match case {
        Conj343Case::CaseI => "ext1_vanishes",
        Conj343Case::CaseIi => "ext1_dimension_one",
        Conj343Case::CaseIii => "ind_from_levi_l_is_isomorphism",
        Conj343Case::CaseIv => "ind_from_levi_l_prime_is_isomorphism",
    };
    Ok(Conj343Report {
        case,
        prediction,
        delta_l: one_based(pair.p.levi()),
        delta_l_prime: one_based(pair.p_prime.levi()),
        delta_l_perp: one_based(pair.p.orthogonal()),
        twist_root,
        irreducible_or_p_odd_checked: false,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct Prop345Entry {
    pub alpha: usize,
    pub beta: usize,
    pub value: String,
    pub nontrivial: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct Prop345CaseI {
    pub alpha: usize,
    pub pi: CharSpec,
    pub pi_differs_from_chi: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct Prop345Report {
    pub table: Vec<Prop345Entry>,
    pub all_nontrivial: bool,
    pub prediction: &'static str,
    /// Only for `P = B`: the characters `s_alpha(chi) * (omega^{-1} o alpha)`.
    pub case_i: Vec<Prop345CaseI>,
}

/// Evaluates `(s_alpha(chi) * (omega^{-1} o alpha)) o beta^vee != 1` for
/// `alpha` outside and `beta` inside the Levi (with `F = Q_p`).
pub fn prop345_hypotheses(group: &WeylGroup, p: &Parabolic, chi: &TorusCharacter) -> Result<Prop345Report> {
    let datum = group.datum();
    let outside: Vec<usize> = (0..datum.semisimple_rank()).filter(|a| !p.levi().contains(a)).collect();
    let mut table = Vec::new();
    let mut case_i = Vec::new();
    for &a in &outside {
        let s = group.simple_reflection(a)?;
        let moved = weyl_act(group, &s, chi)?.twist_by_omega_inverse(datum, datum.simple_root(a))?;
        for &b in p.levi() {
            let v = compose_coroot(datum, &moved, b)?;
            table.push(Prop345Entry { alpha: a + 1, beta: b + 1, value: v.to_string(), nontrivial: !v.is_trivial() });
        }
        if p.levi().is_empty() {
            case_i.push(Prop345CaseI {
                alpha: a + 1,
                pi_differs_from_chi: &moved != chi,
                pi: CharSpec::from_character(&moved),
            });
        }
    }
    let all_nontrivial = table.iter().all(|e| e.nontrivial);
    Ok(Prop345Report {
        prediction: if all_nontrivial { "ind_from_levi_is_isomorphism" } else { "hypotheses_not_met" },
        table,
        all_nontrivial,
        case_i,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct Prop347Report {
    pub d: usize,
    pub verdict: &'static str,
}

/// For `d >= 2` the comparison map is an isomorphism with no hypothesis.
pub fn prop347_rule(d: usize) -> Result<Prop347Report> {
    let verdict = match d {
        0 => return Err(Error::Config("d = [F:Q_p] must be at least 1".into())),
        1 => "defer_to_prop345",
        _ => "isomorphism_unconditional",
    };
    Ok(Prop347Report { d, verdict })
}
