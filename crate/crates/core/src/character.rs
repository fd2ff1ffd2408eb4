//! Smooth characters of Q_p^× and of T(Q_p) with values in F_q^×.
//!
//! A smooth character of Q_p^× into a group of order prime to p is determined
//! by its value at p and by an exponent `e` on the units, where the units act
//! through `omega^e`. We store the value at p as a discrete log (see
//! [`ResidueField`]) and `e` modulo `p - 1`.
//!
//! A torus character is given by its compositions with the basis cocharacters
//! `e_i` of Y. Two Weyl conventions are provided:
//! [`weyl_act`] is `w(chi)(t) = chi(w^{-1} t w)`, and [`conjugate`] is
//! `chi^w(lambda) = chi(w lambda)`, so that `chi^w = w^{-1}(chi)`.

use std::collections::BTreeMap;
use std::fmt;

use rand::Rng;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::field::ResidueField;
use crate::lattice::{Matrix, Vector};
use crate::root_datum::{Kind, RootDatum};
use crate::weyl::{WeylElement, WeylGroup};

/// A smooth character `x -> g^{val_log * val(x)} * omega(x)^e`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SmoothCharQp {
    field: ResidueField,
    val_log: u64,
    e: u64,
}

impl SmoothCharQp {
    pub fn new(field: ResidueField, val_log: i64, e: i64) -> Self {
        SmoothCharQp {
            field,
            val_log: val_log.rem_euclid(field.unit_order() as i64) as u64,
            e: e.rem_euclid(field.omega_order() as i64) as u64,
        }
    }

    pub fn trivial(field: ResidueField) -> Self {
        SmoothCharQp { field, val_log: 0, e: 0 }
    }

    pub fn field(&self) -> ResidueField {
        self.field
    }

    /// Discrete log of the value at p.
    pub fn val_log(&self) -> u64 {
        self.val_log
    }

    /// The value at p as an integer residue, when `q = p`.
    pub fn value_at_p(&self) -> Option<u64> {
        self.field.element(self.val_log)
    }

    pub fn unit_exponent(&self) -> u64 {
        self.e
    }

    pub fn is_trivial(&self) -> bool {
        self.val_log == 0 && self.e == 0
    }

    pub fn mul(&self, other: &Self) -> Self {
        debug_assert_eq!(self.field, other.field);
        Self::new(self.field, (self.val_log + other.val_log) as i64, (self.e + other.e) as i64)
    }

    pub fn pow(&self, k: i64) -> Self {
        let q1 = self.field.unit_order() as i128;
        let p1 = self.field.omega_order() as i128;
        let v = (self.val_log as i128 * k as i128).rem_euclid(q1);
        let e = (self.e as i128 * k as i128).rem_euclid(p1);
        SmoothCharQp { field: self.field, val_log: v as u64, e: e as u64 }
    }

    pub fn inv(&self) -> Self {
        self.pow(-1)
    }

    /// Multiplicative order.
    pub fn order(&self) -> u64 {
        fn gcd(a: u64, b: u64) -> u64 {
            if b == 0 {
                a
            } else {
                gcd(b, a % b)
            }
        }
        let q1 = self.field.unit_order();
        let p1 = self.field.omega_order();
        let a = q1 / gcd(q1, self.val_log);
        let b = p1 / gcd(p1, self.e);
        a / gcd(a, b) * b
    }

    /// The character `omega^k`.
    pub fn omega_power(field: ResidueField, k: i64) -> Self {
        Self::new(field, 0, k)
    }
}

impl fmt::Display for SmoothCharQp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.value_at_p() {
            Some(v) => write!(f, "(p->{v}, omega^{})", self.e),
            None => write!(f, "(p->g^{}, omega^{})", self.val_log, self.e),
        }
    }
}

/// A character of T(Q_p), as its compositions with the basis cocharacters.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TorusCharacter {
    kind: Kind,
    field: ResidueField,
    components: Vec<SmoothCharQp>,
}

impl TorusCharacter {
    pub fn new(datum: &RootDatum, field: ResidueField, components: Vec<SmoothCharQp>) -> Result<Self> {
        if components.len() != datum.rank() {
            return Err(Error::DatumMismatch(format!(
                "{} needs {} components, got {}",
                datum.kind(),
                datum.rank(),
                components.len()
            )));
        }
        if components.iter().any(|c| c.field != field) {
            return Err(Error::DatumMismatch("components over different fields".into()));
        }
        Ok(TorusCharacter { kind: datum.kind().clone(), field, components })
    }

    /// Builds a character from `(val_log, e)` pairs.
    pub fn from_logs(datum: &RootDatum, field: ResidueField, logs: &[(i64, i64)]) -> Result<Self> {
        let comps = logs.iter().map(|&(v, e)| SmoothCharQp::new(field, v, e)).collect();
        Self::new(datum, field, comps)
    }

    pub fn trivial(datum: &RootDatum, field: ResidueField) -> Self {
        TorusCharacter {
            kind: datum.kind().clone(),
            field,
            components: vec![SmoothCharQp::trivial(field); datum.rank()],
        }
    }

    pub fn kind(&self) -> &Kind {
        &self.kind
    }

    pub fn field(&self) -> ResidueField {
        self.field
    }

    pub fn components(&self) -> &[SmoothCharQp] {
        &self.components
    }

    pub fn rank(&self) -> usize {
        self.components.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.components.iter().all(SmoothCharQp::is_trivial)
    }

    fn same_datum(&self, other: &TorusCharacter) -> Result<()> {
        if self.kind != other.kind || self.field != other.field {
            return Err(Error::DatumMismatch(format!(
                "{} over F_{} vs {} over F_{}",
                self.kind,
                self.field.q(),
                other.kind,
                other.field.q()
            )));
        }
        Ok(())
    }

    fn check_group(&self, group: &WeylGroup) -> Result<()> {
        if &self.kind != group.datum().kind() {
            return Err(Error::DatumMismatch(format!(
                "character on {} used with {}",
                self.kind,
                group.datum().kind()
            )));
        }
        Ok(())
    }

    /// `chi o lambda` for a cocharacter `lambda`.
    pub fn compose(&self, lambda: &Vector) -> Result<SmoothCharQp> {
        if lambda.dim() != self.rank() {
            return Err(Error::Usage(format!(
                "cocharacter of dimension {} for a rank {} torus",
                lambda.dim(),
                self.rank()
            )));
        }
        Ok(self.compose_unchecked(lambda.as_slice()))
    }

    fn compose_unchecked(&self, lambda: &[i64]) -> SmoothCharQp {
        let q1 = self.field.unit_order() as i128;
        let p1 = self.field.omega_order() as i128;
        let (mut v, mut e) = (0i128, 0i128);
        for (c, &l) in self.components.iter().zip(lambda) {
            v += c.val_log as i128 * l as i128;
            e += c.e as i128 * l as i128;
        }
        SmoothCharQp {
            field: self.field,
            val_log: v.rem_euclid(q1) as u64,
            e: e.rem_euclid(p1) as u64,
        }
    }

    pub fn mul(&self, other: &TorusCharacter) -> Result<TorusCharacter> {
        self.same_datum(other)?;
        Ok(TorusCharacter {
            kind: self.kind.clone(),
            field: self.field,
            components: self.components.iter().zip(&other.components).map(|(a, b)| a.mul(b)).collect(),
        })
    }

    pub fn inv(&self) -> TorusCharacter {
        TorusCharacter {
            kind: self.kind.clone(),
            field: self.field,
            components: self.components.iter().map(SmoothCharQp::inv).collect(),
        }
    }

    /// Character whose component `j` is `chi o (column j of m)`.
    fn transform(&self, m: &Matrix) -> TorusCharacter {
        let n = self.rank();
        let components = (0..n)
            .map(|j| {
                let col: Vec<i64> = (0..n).map(|i| m.get(i, j)).collect();
                self.compose_unchecked(&col)
            })
            .collect();
        TorusCharacter { kind: self.kind.clone(), field: self.field, components }
    }

    /// The torus character `omega o mu` for a character `mu` of T.
    pub fn omega_twist(datum: &RootDatum, field: ResidueField, mu: &Vector) -> Result<TorusCharacter> {
        if mu.dim() != datum.rank() {
            return Err(Error::Usage(format!("character of dimension {} for rank {}", mu.dim(), datum.rank())));
        }
        let components = mu.as_slice().iter().map(|&m| SmoothCharQp::new(field, 0, m)).collect();
        TorusCharacter::new(datum, field, components)
    }

    /// `chi * (omega^{-1} o mu)`.
    pub fn twist_by_omega_inverse(&self, datum: &RootDatum, mu: &Vector) -> Result<TorusCharacter> {
        self.mul(&Self::omega_twist(datum, self.field, &(-mu))?)
    }

    /// Number of characters of T(Q_p) over `field`, saturating.
    pub fn count(datum: &RootDatum, field: ResidueField) -> u128 {
        let per = (field.unit_order() * field.omega_order()) as u128;
        per.checked_pow(datum.rank() as u32).unwrap_or(u128::MAX)
    }

    /// The character at position `idx` of the lexicographic order on
    /// `(val_log, e)` per component, component 0 most significant.
    pub fn from_index(datum: &RootDatum, field: ResidueField, idx: u128) -> TorusCharacter {
        let p1 = field.omega_order() as u128;
        let per = field.unit_order() as u128 * p1;
        let n = datum.rank();
        let mut rest = idx;
        let mut components = vec![SmoothCharQp::trivial(field); n];
        for c in components.iter_mut().rev() {
            let d = rest % per;
            rest /= per;
            *c = SmoothCharQp { field, val_log: (d / p1) as u64, e: (d % p1) as u64 };
        }
        TorusCharacter { kind: datum.kind().clone(), field, components }
    }

    /// Every character over `field`, in the order of [`TorusCharacter::from_index`].
    pub fn enumerate(datum: &RootDatum, field: ResidueField, cap: u64) -> Result<Vec<TorusCharacter>> {
        let total = Self::count(datum, field);
        if total > cap as u128 {
            return Err(Error::Bound { what: "character sweep", size: total, cap: cap as u128 });
        }
        Ok((0..total).map(|i| Self::from_index(datum, field, i)).collect())
    }

    /// A uniformly random character.
    pub fn sample<R: Rng>(datum: &RootDatum, field: ResidueField, rng: &mut R) -> TorusCharacter {
        let components = (0..datum.rank())
            .map(|_| SmoothCharQp {
                field,
                val_log: rng.gen_range(0..field.unit_order()),
                e: rng.gen_range(0..field.omega_order()),
            })
            .collect();
        TorusCharacter { kind: datum.kind().clone(), field, components }
    }
}

impl fmt::Display for TorusCharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, c) in self.components.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

/// `w(chi)`, defined by `w(chi) o lambda = chi o (w^{-1} lambda)`.
pub fn weyl_act(group: &WeylGroup, w: &WeylElement, chi: &TorusCharacter) -> Result<TorusCharacter> {
    chi.check_group(group)?;
    // w^{-1} on Y is the transpose of w on X.
    Ok(chi.transform(&w.on_char().transpose()))
}

/// `chi^w`, defined by `chi^w o lambda = chi o (w lambda)`; equal to `w^{-1}(chi)`.
pub fn conjugate(group: &WeylGroup, w: &WeylElement, chi: &TorusCharacter) -> Result<TorusCharacter> {
    chi.check_group(group)?;
    Ok(chi.transform(w.on_cochar()))
}

/// `chi o alpha^vee` for the positive root with index `i`.
pub fn compose_coroot(datum: &RootDatum, chi: &TorusCharacter, i: usize) -> Result<SmoothCharQp> {
    if i >= datum.num_positive_roots() {
        return Err(Error::Usage(format!("root index {i} out of range")));
    }
    chi.compose(&datum.root(i).coroot)
}

/// Genericity levels, weakest first.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Genericity {
    NotWeaklyGeneric,
    WeaklyGeneric,
    Generic,
    StronglyGeneric,
}

impl fmt::Display for Genericity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Genericity::NotWeaklyGeneric => "not_weakly_generic",
            Genericity::WeaklyGeneric => "weakly_generic",
            Genericity::Generic => "generic",
            Genericity::StronglyGeneric => "strongly_generic",
        };
        f.write_str(s)
    }
}

/// Whether `s_alpha(chi) != chi` for every positive root.
pub fn is_generic(group: &WeylGroup, chi: &TorusCharacter) -> Result<bool> {
    for i in 0..group.datum().num_positive_roots() {
        let s = group.reflection(i)?;
        if &weyl_act(group, &s, chi)? == chi {
            return Ok(false);
        }
    }
    Ok(true)
}

pub fn is_weakly_generic(group: &WeylGroup, chi: &TorusCharacter) -> Result<bool> {
    for i in 0..group.datum().semisimple_rank() {
        let s = group.simple_reflection(i)?;
        if &weyl_act(group, &s, chi)? == chi {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The stabilizer of `chi` in W, in canonical order.
pub fn stabilizer(group: &WeylGroup, chi: &TorusCharacter) -> Result<Vec<WeylElement>> {
    let mut out = Vec::new();
    for w in group.elements()? {
        if &weyl_act(group, w, chi)? == chi {
            out.push(w.clone());
        }
    }
    Ok(out)
}

/// The strongest genericity level satisfied by `chi`.
pub fn genericity(group: &WeylGroup, chi: &TorusCharacter) -> Result<Genericity> {
    if !is_weakly_generic(group, chi)? {
        return Ok(Genericity::NotWeaklyGeneric);
    }
    if !is_generic(group, chi)? {
        return Ok(Genericity::WeaklyGeneric);
    }
    if stabilizer(group, chi)?.len() > 1 {
        return Ok(Genericity::Generic);
    }
    Ok(Genericity::StronglyGeneric)
}

/// Checks `s_alpha(chi) != chi <=> chi o alpha^vee != 1` for every positive root.
/// Only meaningful with connected center, otherwise a capability error.
pub fn generic_iff_coroot(group: &WeylGroup, chi: &TorusCharacter) -> Result<bool> {
    let datum = group.datum();
    datum.require_connected_center()?;
    for i in 0..datum.num_positive_roots() {
        let moved = &weyl_act(group, &group.reflection(i)?, chi)? != chi;
        let nontrivial = !compose_coroot(datum, chi, i)?.is_trivial();
        if moved != nontrivial {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `(chi * w(chi)^{-1}) o lambda`, computed as `chi o (lambda - w^{-1} lambda)`.
pub fn ratio_on_coweight(
    group: &WeylGroup,
    chi: &TorusCharacter,
    w: &WeylElement,
    lambda: &Vector,
) -> Result<SmoothCharQp> {
    chi.check_group(group)?;
    let w_inv_lambda = w.on_char().transpose().apply(lambda);
    chi.compose(&(lambda - &w_inv_lambda))
}

/// `sum_k s_1 ... s_{k-1} (lambda - s_k lambda)` for `w = s_n ... s_1`.
///
/// `word` is in the usual left-to-right order, `w = s_{word[0]} ... s_{word[n-1]}`,
/// so `s_1` is the last letter.
pub fn telescoped_difference(group: &WeylGroup, word: &[usize], lambda: &Vector) -> Result<Vector> {
    let mut prefix = group.identity();
    let mut total = Vector::zero(lambda.dim());
    for &letter in word.iter().rev() {
        let s = group.simple_reflection(letter)?;
        let step = lambda - &group.act_cochar(&s, lambda);
        total += &group.act_cochar(&prefix, &step);
        prefix = group.multiply(&prefix, &s);
    }
    Ok(total)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Lemma314Mode {
    I,
    Ii,
    Iii,
}

impl std::str::FromStr for Lemma314Mode {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "i" | "1" => Ok(Lemma314Mode::I),
            "ii" | "2" => Ok(Lemma314Mode::Ii),
            "iii" | "3" => Ok(Lemma314Mode::Iii),
            _ => Err(Error::Parse(format!("unknown mode '{s}', expected i, ii or iii"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Lemma314Verdict {
    HypothesesNotMet,
    PredictedDistinct,
    /// Hypotheses hold but `w(chi) = chi`. Never expected.
    Contradiction,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Lemma314Outcome {
    pub mode: Lemma314Mode,
    pub verdict: Lemma314Verdict,
    /// Reduced word (1-based) witnessing the hypotheses, when they hold.
    pub witness_word: Option<Vec<usize>>,
    pub fixed: bool,
}

/// Letters occurring exactly once in `word`.
fn singleton_letters(word: &[usize]) -> Vec<usize> {
    let mut counts: BTreeMap<usize, usize> = BTreeMap::new();
    for &l in word {
        *counts.entry(l).or_default() += 1;
    }
    counts.into_iter().filter(|&(_, c)| c == 1).map(|(l, _)| l).collect()
}

/// Evaluates the hypotheses of one mode of the lemma over all reduced words of `w`.
/// `generic` may be supplied to avoid recomputation.
pub fn lemma314_check(
    group: &WeylGroup,
    chi: &TorusCharacter,
    w: &WeylElement,
    mode: Lemma314Mode,
    generic: Option<bool>,
) -> Result<Lemma314Outcome> {
    let generic = match generic {
        Some(g) => g,
        None => is_generic(group, chi)?,
    };
    let words = group.reduced_words(w);
    let fixed = &weyl_act(group, w, chi)? == chi;
    Ok(lemma314_eval(group, chi, w, mode, generic, &words, fixed))
}

fn lemma314_eval(
    group: &WeylGroup,
    chi: &TorusCharacter,
    w: &WeylElement,
    mode: Lemma314Mode,
    generic: bool,
    words: &[Vec<usize>],
    fixed: bool,
) -> Lemma314Outcome {
    let datum = group.datum();
    let not_met = Lemma314Outcome { mode, verdict: Lemma314Verdict::HypothesesNotMet, witness_word: None, fixed };
    if !datum.has_connected_center() || w.is_identity() {
        return not_met;
    }
    // The letter applied first is the last one of the word.
    let witness: Option<&Vec<usize>> = match mode {
        Lemma314Mode::I => words.iter().find(|word| {
            let first = *word.last().expect("nonempty");
            word.iter().filter(|&&l| l == first).count() == 1
                && !chi.compose_unchecked(datum.simple_coroot(first).as_slice()).is_trivial()
        }),
        Lemma314Mode::Ii if generic => words.iter().find(|word| !singleton_letters(word).is_empty()),
        Lemma314Mode::Ii => None,
        Lemma314Mode::Iii => (generic && w.length() <= 5).then(|| &words[0]),
    };
    match witness {
        None => not_met,
        Some(word) => Lemma314Outcome {
            mode,
            verdict: if fixed { Lemma314Verdict::Contradiction } else { Lemma314Verdict::PredictedDistinct },
            witness_word: Some(word.iter().map(|i| i + 1).collect()),
            fixed,
        },
    }
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct ModeCounts {
    pub applied: u64,
    pub violations: u64,
}

#[derive(Clone, Debug, Serialize)]
pub struct FixedWitness {
    pub character: CharSpec,
    pub w: Vec<usize>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Lemma314Sweep {
    pub datum: String,
    pub p: u64,
    pub q: u64,
    pub characters_swept: u64,
    pub generic_characters: u64,
    pub pairs_checked: u64,
    pub violations: u64,
    pub mode_i: ModeCounts,
    pub mode_ii: ModeCounts,
    pub mode_iii: ModeCounts,
    pub optimality_witness_at_length_6: bool,
    pub witness: Option<FixedWitness>,
    pub passed: bool,
}

/// Runs all three modes over every character and every `w` with `1 <= l(w) <= 5`,
/// and looks for a generic character fixed by some `w` of length 6.
pub fn lemma314_sweep(group: &WeylGroup, field: ResidueField, cap: u64) -> Result<Lemma314Sweep> {
    let datum = group.datum();
    datum.require_connected_center()?;
    let total = TorusCharacter::count(datum, field);
    if total > cap as u128 {
        return Err(Error::Bound { what: "character sweep", size: total, cap: cap as u128 });
    }
    let elements: Vec<&WeylElement> = group.elements()?.iter().filter(|w| (1..=6).contains(&w.length())).collect();
    let words: Vec<Vec<Vec<usize>>> = elements.iter().map(|w| group.reduced_words(w)).collect();
    let mut out = Lemma314Sweep {
        datum: datum.kind().to_string(),
        p: field.p(),
        q: field.q(),
        characters_swept: 0,
        generic_characters: 0,
        pairs_checked: 0,
        violations: 0,
        mode_i: ModeCounts::default(),
        mode_ii: ModeCounts::default(),
        mode_iii: ModeCounts::default(),
        optimality_witness_at_length_6: false,
        witness: None,
        passed: false,
    };
    for idx in 0..total {
        let chi = TorusCharacter::from_index(datum, field, idx);
        let generic = is_generic(group, &chi)?;
        out.characters_swept += 1;
        out.generic_characters += u64::from(generic);
        for (w, ws) in elements.iter().zip(&words) {
            let fixed = weyl_act(group, w, &chi)? == chi;
            if w.length() == 6 {
                if generic && fixed && out.witness.is_none() {
                    out.optimality_witness_at_length_6 = true;
                    out.witness = Some(FixedWitness { character: CharSpec::from_character(&chi), w: w.word_one_based() });
                }
                continue;
            }
            out.pairs_checked += 1;
            for (mode, counts) in [
                (Lemma314Mode::I, &mut out.mode_i),
                (Lemma314Mode::Ii, &mut out.mode_ii),
                (Lemma314Mode::Iii, &mut out.mode_iii),
            ] {
                let r = lemma314_eval(group, &chi, w, mode, generic, ws, fixed);
                match r.verdict {
                    Lemma314Verdict::HypothesesNotMet => {}
                    Lemma314Verdict::PredictedDistinct => counts.applied += 1,
                    Lemma314Verdict::Contradiction => {
                        counts.applied += 1;
                        counts.violations += 1;
                    }
                }
            }
        }
    }
    out.violations = out.mode_i.violations + out.mode_ii.violations + out.mode_iii.violations;
    out.passed = out.violations == 0;
    Ok(out)
}

#[derive(Clone, Debug, Serialize)]
pub struct EquivalenceSweep {
    pub datum: String,
    pub p: u64,
    pub q: u64,
    pub sampled: bool,
    pub seed: Option<u64>,
    pub characters_checked: u64,
    pub violations: u64,
    pub passed: bool,
}

/// Checks `s_alpha(chi) != chi <=> chi o alpha^vee != 1` over all characters, or
/// over `samples` seeded random ones when there are more than `exhaustive_cap`.
pub fn coroot_equivalence_sweep(
    group: &WeylGroup,
    field: ResidueField,
    exhaustive_cap: u64,
    samples: u64,
    seed: u64,
) -> Result<EquivalenceSweep> {
    use rand::SeedableRng;
    let datum = group.datum();
    datum.require_connected_center()?;
    let total = TorusCharacter::count(datum, field);
    let sampled = total > exhaustive_cap as u128;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let n = if sampled { samples } else { total as u64 };
    let mut violations = 0;
    for idx in 0..n {
        let chi = if sampled {
            TorusCharacter::sample(datum, field, &mut rng)
        } else {
            TorusCharacter::from_index(datum, field, idx as u128)
        };
        if !generic_iff_coroot(group, &chi)? {
            violations += 1;
        }
    }
    Ok(EquivalenceSweep {
        datum: datum.kind().to_string(),
        p: field.p(),
        q: field.q(),
        sampled,
        seed: sampled.then_some(seed),
        characters_checked: n,
        violations,
        passed: violations == 0,
    })
}

/// The first strongly generic character in enumeration order, if any among the first `limit`.
pub fn first_strongly_generic(group: &WeylGroup, field: ResidueField, limit: u128) -> Result<Option<TorusCharacter>> {
    let datum = group.datum();
    let total = TorusCharacter::count(datum, field).min(limit);
    for idx in 0..total {
        let chi = TorusCharacter::from_index(datum, field, idx);
        if is_weakly_generic(group, &chi)? && genericity(group, &chi)? == Genericity::StronglyGeneric {
            return Ok(Some(chi));
        }
    }
    Ok(None)
}

/// The order-two character of T(Q_p) for G2 built from the valuation of the
/// short simple root and the Legendre symbol of the long one.
pub fn example_313(datum: &RootDatum, field: ResidueField) -> Result<TorusCharacter> {
    if datum.kind() != &Kind::G2 {
        return Err(Error::Capability(format!("this character lives on G2, not {}", datum.kind())));
    }
    if field.p() == 2 {
        return Err(Error::Config("the Legendre symbol needs p odd".into()));
    }
    let alpha = datum.simple_root(0);
    let beta = datum.simple_root(1);
    let half = (field.omega_order() / 2) as i64;
    let minus_one = field.minus_one_log() as i64;
    let logs: Vec<(i64, i64)> = (0..datum.rank())
        .map(|j| (alpha[j] * minus_one, beta[j] * half))
        .collect();
    TorusCharacter::from_logs(datum, field, &logs)
}

/// The same character on the split G2 datum over `F_p`.
pub fn build_example_313(p: u64) -> Result<TorusCharacter> {
    example_313(&RootDatum::build(Kind::G2)?, ResidueField::prime(p)?)
}

/// JSON form of a character: `{"p", "q", "generator", "components": [{"val_p", "e"}]}`.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct CharSpec {
    pub p: u64,
    #[serde(default)]
    pub q: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub datum: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub generator: Option<u64>,
    pub components: Vec<ComponentSpec>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct ComponentSpec {
    /// Either an integer residue (only when `q = p`) or the string `g^k`.
    pub val_p: Value,
    pub e: i64,
}

fn parse_val(field: ResidueField, v: &Value) -> Result<i64> {
    match v {
        Value::Number(n) => {
            let x = n.as_i64().ok_or_else(|| Error::Parse(format!("bad val_p {n}")))?;
            Ok(field.log_of(x)? as i64)
        }
        Value::String(s) => {
            let t = s.trim();
            if let Some(k) = t.strip_prefix("g^") {
                let k: i64 = k.trim().parse().map_err(|_| Error::Parse(format!("bad val_p '{s}'")))?;
                Ok(k)
            } else if t == "g" {
                Ok(1)
            } else {
                let x: i64 = t.parse().map_err(|_| Error::Parse(format!("bad val_p '{s}'")))?;
                Ok(field.log_of(x)? as i64)
            }
        }
        _ => Err(Error::Parse(format!("val_p must be an integer or \"g^k\", got {v}"))),
    }
}

impl CharSpec {
    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn field(&self) -> Result<ResidueField> {
        ResidueField::new(self.p, self.q.unwrap_or(self.p))
    }

    pub fn to_character(&self, datum: &RootDatum) -> Result<TorusCharacter> {
        if let Some(name) = &self.datum {
            let kind: Kind = name.parse()?;
            if &kind != datum.kind() {
                return Err(Error::DatumMismatch(format!("character file is for {kind}, run uses {}", datum.kind())));
            }
        }
        let field = self.field()?;
        let logs = self
            .components
            .iter()
            .map(|c| Ok((parse_val(field, &c.val_p)?, c.e)))
            .collect::<Result<Vec<_>>>()?;
        TorusCharacter::from_logs(datum, field, &logs)
    }

    pub fn from_character(chi: &TorusCharacter) -> Self {
        let field = chi.field();
        CharSpec {
            p: field.p(),
            q: Some(field.q()),
            datum: None,
            generator: field.generator(),
            components: chi
                .components()
                .iter()
                .map(|c| ComponentSpec {
                    val_p: match c.value_at_p() {
                        Some(v) => Value::from(v),
                        None => Value::from(format!("g^{}", c.val_log())),
                    },
                    e: c.unit_exponent() as i64,
                })
                .collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn setup(s: &str) -> WeylGroup {
        WeylGroup::new(RootDatum::build(s.parse().unwrap()).unwrap())
    }

    #[test]
    fn example_313_by_prime() {
        let chi = build_example_313(7).unwrap();
        assert_eq!(chi.field().p(), 7);
        assert_eq!(chi.kind(), &Kind::G2);
        assert!(build_example_313(2).is_err());
        assert!(build_example_313(9).is_err());
    }

    #[test]
    fn smooth_char_group_law() {
        let f = ResidueField::prime(5).unwrap();
        let a = SmoothCharQp::new(f, 1, 3);
        assert!(a.mul(&a.inv()).is_trivial());
        assert_eq!(a.pow(4), SmoothCharQp::trivial(f));
        assert_eq!(a.order(), 4);
        assert_eq!(SmoothCharQp::new(f, 2, 2).order(), 2);
    }

    #[test]
    fn gl2_swap() {
        let g = setup("gl2");
        let f = ResidueField::prime(5).unwrap();
        let chi = TorusCharacter::from_logs(g.datum(), f, &[(1, 0), (3, 0)]).unwrap();
        let s = g.simple_reflection(0).unwrap();
        let swapped = TorusCharacter::from_logs(g.datum(), f, &[(3, 0), (1, 0)]).unwrap();
        assert_eq!(weyl_act(&g, &s, &chi).unwrap(), swapped);
        // chi o alpha^vee = (a b^{-1}, 0)
        assert_eq!(compose_coroot(g.datum(), &chi, 0).unwrap(), SmoothCharQp::new(f, -2, 0));
        assert_eq!(genericity(&g, &chi).unwrap(), Genericity::StronglyGeneric);
    }

    #[test]
    fn omega_twist_gl2() {
        let g = setup("gl2");
        let f = ResidueField::prime(5).unwrap();
        let alpha = g.datum().simple_root(0).clone();
        let t = TorusCharacter::omega_twist(g.datum(), f, &alpha).unwrap();
        assert_eq!(t.components()[0].unit_exponent(), 1);
        assert_eq!(t.components()[1].unit_exponent(), 3);
        let back = TorusCharacter::omega_twist(g.datum(), f, &(-&alpha)).unwrap();
        assert!(t.mul(&back).unwrap().is_trivial());
    }

    #[test]
    fn example_313_at_5() {
        let g = setup("g2");
        let f = ResidueField::prime(5).unwrap();
        let chi = example_313(g.datum(), f).unwrap();
        assert_eq!(genericity(&g, &chi).unwrap(), Genericity::Generic);
        assert_eq!(weyl_act(&g, &g.longest_element(), &chi).unwrap(), chi);
        // chi o beta^vee = (-1, 0)
        let cb = compose_coroot(g.datum(), &chi, 1).unwrap();
        assert_eq!(cb.value_at_p(), Some(4));
        assert_eq!(cb.unit_exponent(), 0);
        assert!(example_313(g.datum(), ResidueField::prime(2).unwrap()).is_err());
    }

    #[test]
    fn conjugation_is_inverse_action() {
        let g = setup("sc-a2");
        let f = ResidueField::prime(7).unwrap();
        let chi = TorusCharacter::from_logs(g.datum(), f, &[(1, 2), (4, 5)]).unwrap();
        for w in g.elements().unwrap() {
            let inv = g.inverse(w);
            assert_eq!(conjugate(&g, w, &chi).unwrap(), weyl_act(&g, &inv, &chi).unwrap());
        }
    }

    #[test]
    fn ratio_for_simple_reflection() {
        let g = setup("gl3");
        let f = ResidueField::prime(5).unwrap();
        let chi = TorusCharacter::from_logs(g.datum(), f, &[(1, 2), (0, 1), (3, 3)]).unwrap();
        let lambdas = g.datum().fundamental_coweights().unwrap().to_vec();
        for a in 0..2 {
            let s = g.simple_reflection(a).unwrap();
            let r = ratio_on_coweight(&g, &chi, &s, &lambdas[a]).unwrap();
            assert_eq!(r, compose_coroot(g.datum(), &chi, a).unwrap());
        }
    }

    #[test]
    fn lemma_mode_i_needs_nontrivial_coroot() {
        let g = setup("gl2");
        let f = ResidueField::prime(5).unwrap();
        let chi = TorusCharacter::from_logs(g.datum(), f, &[(1, 0), (1, 0)]).unwrap();
        let s = g.simple_reflection(0).unwrap();
        let out = lemma314_check(&g, &chi, &s, Lemma314Mode::I, None).unwrap();
        assert_eq!(out.verdict, Lemma314Verdict::HypothesesNotMet);
    }

    #[test]
    fn char_spec_round_trip() {
        let g = setup("gl2");
        let json = r#"{"p": 5, "components": [{"val_p": 2, "e": 1}, {"val_p": "g^3", "e": 0}]}"#;
        let chi = CharSpec::from_json(json).unwrap().to_character(g.datum()).unwrap();
        assert_eq!(chi.components()[0].val_log(), 1);
        assert_eq!(chi.components()[1].value_at_p(), Some(3));
        let back = CharSpec::from_character(&chi).to_character(g.datum()).unwrap();
        assert_eq!(back, chi);
        let bad = r#"{"p": 5, "q": 25, "components": [{"val_p": 2, "e": 1}, {"val_p": 1, "e": 0}]}"#;
        assert!(CharSpec::from_json(bad).unwrap().to_character(g.datum()).is_err());
    }

    #[test]
    fn enumeration_count_and_cap() {
        let g = setup("gl2");
        let f = ResidueField::prime(5).unwrap();
        let all = TorusCharacter::enumerate(g.datum(), f, 1000).unwrap();
        assert_eq!(all.len(), 256);
        assert!(all[0].is_trivial());
        assert!(TorusCharacter::enumerate(g.datum(), f, 10).is_err());
    }
}
