//! Constituent lattices of the ordinary representations `Pi(chi)_Psi`.
//!
//! For a closed `Psi`, an element `w_Psi` of `W_Psi` and a pairwise-orthogonal
//! `I` inside `Delta cap w_Psi(Psi)`, the constituent `C_{w_Psi, I}` is labelled
//! by the torus character `(prod_{alpha in I} s_alpha) w_Psi (chi)`. The common
//! twist by `epsilon^{-1} o theta` cancels in every comparison and is not stored.
//!
//! Subrepresentations of the hypercube piece indexed by `I` are the down-closed
//! families of subsets of `I`, encoded as bitmasks over the `2^|I|` subsets.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt::Write as _;

use serde::Serialize;

use crate::character::{
    compose_coroot, genericity, weyl_act, CharSpec, Genericity, SmoothCharQp, TorusCharacter,
};
use crate::closed_roots::{delta_cap, orthogonal_subsets, twisted_element, verify_i_identity, w_psi_set, ClosedRootSubset};
use crate::error::{Error, Result};
use crate::weyl::{WeylElement, WeylGroup};

/// Default and hard caps on `|I|` for subrepresentation lattices.
pub const DEFAULT_SUBREP_CAP: usize = 5;
pub const MAX_SUBREP_CAP: usize = 6;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Constituent {
    pub w_psi: WeylElement,
    pub i_set: BTreeSet<usize>,
    pub label: TorusCharacter,
}

impl Constituent {
    pub fn socle_degree(&self) -> usize {
        self.i_set.len()
    }

    pub fn name(&self) -> String {
        let i: Vec<String> = self.i_set.iter().map(|a| format!("a{}", a + 1)).collect();
        format!("C[{};{{{}}}]", self.w_psi.label(), i.join(","))
    }
}

/// Which hypotheses on `chi` hold for a lattice.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HypothesisFlags {
    pub genericity: Genericity,
    pub generic: bool,
    /// `chi o alpha^vee != 1` for `alpha` in `w_Psi^{-1}(Delta) cap Psi`.
    pub weak_condition: bool,
    /// `chi o alpha^vee != omega^{+-1}` for every positive root.
    pub irreducibility_criterion: bool,
    /// Irreducibility of the constituents is assumed, never decided here.
    pub irreducible_assumed: bool,
}

#[derive(Clone, Debug)]
pub struct BhLattice {
    pub chi: TorusCharacter,
    pub psi: ClosedRootSubset,
    pub w_psi: WeylElement,
    pub delta_cap: BTreeSet<usize>,
    pub constituents: Vec<Constituent>,
    pub flags: HypothesisFlags,
}

/// Whether a non-split extension between `C_I` and `C_J` is allowed:
/// `|I sym J| = 1` or `I = J`.
pub fn ext_exists(i: &BTreeSet<usize>, j: &BTreeSet<usize>) -> bool {
    i.symmetric_difference(j).count() <= 1
}

/// `chi o alpha^vee not in {omega, omega^{-1}}` for every positive root.
pub fn irreducibility_criterion(group: &WeylGroup, chi: &TorusCharacter) -> Result<bool> {
    let f = chi.field();
    let omega = SmoothCharQp::omega_power(f, 1);
    let omega_inv = SmoothCharQp::omega_power(f, -1);
    for i in 0..group.datum().num_positive_roots() {
        let c = compose_coroot(group.datum(), chi, i)?;
        if c == omega || c == omega_inv {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `chi o alpha^vee != 1` for every `alpha` in `Psi` with `w_Psi(alpha)` simple.
pub fn weak_condition(group: &WeylGroup, chi: &TorusCharacter, psi: &ClosedRootSubset, w_psi: &WeylElement) -> Result<bool> {
    for &i in psi.roots() {
        let img = group.act_root(w_psi, i);
        if img.positive && group.datum().is_simple_index(img.index) && compose_coroot(group.datum(), chi, i)?.is_trivial() {
            return Ok(false);
        }
    }
    Ok(true)
}

pub fn build_lattice(
    group: &WeylGroup,
    chi: &TorusCharacter,
    psi: &ClosedRootSubset,
    w_psi: &WeylElement,
) -> Result<BhLattice> {
    let dc = delta_cap(group, w_psi, psi)?;
    let mut constituents = Vec::new();
    for i_set in orthogonal_subsets(group.datum(), &dc) {
        let w = twisted_element(group, &i_set, w_psi)?;
        let label = weyl_act(group, &w, chi)?;
        constituents.push(Constituent { w_psi: w_psi.clone(), i_set, label });
    }
    let gen = genericity(group, chi)?;
    let flags = HypothesisFlags {
        genericity: gen,
        generic: gen >= Genericity::Generic,
        weak_condition: weak_condition(group, chi, psi, w_psi)?,
        irreducibility_criterion: irreducibility_criterion(group, chi)?,
        irreducible_assumed: true,
    };
    Ok(BhLattice {
        chi: chi.clone(),
        psi: psi.clone(),
        w_psi: w_psi.clone(),
        delta_cap: dc,
        constituents,
        flags,
    })
}

impl BhLattice {
    /// Unordered extension edges `[i, j]` with `i <= j`, self-loops included.
    pub fn ext_edges(&self) -> Vec<[usize; 2]> {
        let c = &self.constituents;
        let mut out = Vec::new();
        for i in 0..c.len() {
            for j in i..c.len() {
                if ext_exists(&c[i].i_set, &c[j].i_set) {
                    out.push([i, j]);
                }
            }
        }
        out
    }

    pub fn socle_degrees(&self) -> Vec<usize> {
        self.constituents.iter().map(Constituent::socle_degree).collect()
    }

    /// Number of constituents with the same label, for each constituent.
    pub fn multiplicities(&self) -> Vec<usize> {
        let mut counts: HashMap<&TorusCharacter, usize> = HashMap::new();
        for c in &self.constituents {
            *counts.entry(&c.label).or_default() += 1;
        }
        self.constituents.iter().map(|c| counts[&c.label]).collect()
    }

    pub fn to_json(&self) -> LatticeJson {
        let mult = self.multiplicities();
        LatticeJson {
            w_psi: self.w_psi.word_one_based(),
            delta_cap: self.delta_cap.iter().map(|i| i + 1).collect(),
            constituents: self
                .constituents
                .iter()
                .zip(&mult)
                .map(|(c, &m)| ConstituentJson {
                    name: c.name(),
                    w_psi: c.w_psi.word_one_based(),
                    i: c.i_set.iter().map(|a| a + 1).collect(),
                    character: CharSpec::from_character(&c.label),
                    socle_degree: c.socle_degree(),
                    multiplicity: m,
                })
                .collect(),
            edges: self.ext_edges(),
            socle_degrees: self
                .constituents
                .iter()
                .map(|c| (c.name(), c.socle_degree()))
                .collect(),
            length: self.constituents.len(),
            hypotheses: self.flags.clone(),
        }
    }

    /// Extension graph in DOT; self-loops are left out.
    pub fn to_dot(&self) -> String {
        let mut s = String::from("graph ext {\n  node [shape=box];\n");
        for (k, c) in self.constituents.iter().enumerate() {
            let _ = writeln!(s, "  n{k} [label=\"{}\\ndeg {}\"];", c.name(), c.socle_degree());
        }
        for [i, j] in self.ext_edges() {
            if i != j {
                let _ = writeln!(s, "  n{i} -- n{j};");
            }
        }
        s.push_str("}\n");
        s
    }
}

/// Multiplicity and socle degree of every constituent, keyed by constituent name.
pub fn multiplicity_report(
    group: &WeylGroup,
    chi: &TorusCharacter,
    psi: &ClosedRootSubset,
    w_psi: &WeylElement,
) -> Result<BTreeMap<String, (usize, usize)>> {
    let lat = build_lattice(group, chi, psi, w_psi)?;
    let mult = lat.multiplicities();
    Ok(lat
        .constituents
        .iter()
        .zip(mult)
        .map(|(c, m)| (c.name(), (m, c.socle_degree())))
        .collect())
}

/// The files written for a lattice: `ext_graph.dot`, `lattice.json`, and
/// `hasse.dot` for the subrepresentation lattice of `i_set`.
pub fn emit_graphs(lattice: &BhLattice, i_set: &BTreeSet<usize>, cap: usize) -> Result<Vec<(&'static str, String)>> {
    let json = serde_json::to_string_pretty(&lattice.to_json()).expect("serializable") + "\n";
    Ok(vec![
        ("ext_graph.dot", lattice.to_dot()),
        ("lattice.json", json),
        ("hasse.dot", hasse_dot(i_set, cap)?),
    ])
}

#[derive(Clone, Debug, Serialize)]
pub struct ConstituentJson {
    pub name: String,
    pub w_psi: Vec<usize>,
    #[serde(rename = "I")]
    pub i: Vec<usize>,
    pub character: CharSpec,
    pub socle_degree: usize,
    pub multiplicity: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct LatticeJson {
    pub w_psi: Vec<usize>,
    pub delta_cap: Vec<usize>,
    pub constituents: Vec<ConstituentJson>,
    pub edges: Vec<[usize; 2]>,
    pub socle_degrees: BTreeMap<String, usize>,
    pub length: usize,
    pub hypotheses: HypothesisFlags,
}

/// All down-closed families of subsets of an `n`-element set, as bitmasks over
/// the `2^n` subsets (bit `s` set means subset `s` belongs to the family).
/// Ordered by family size, then by bitmask.
pub fn down_sets(n: usize, cap: usize) -> Result<Vec<u64>> {
    let cap = cap.min(MAX_SUBREP_CAP);
    if n > cap {
        return Err(Error::Bound { what: "|I| for subrepresentation lattice", size: n as u128, cap: cap as u128 });
    }
    let m = 1usize << n;
    // Subsets in order of size, so lower covers are decided first.
    let mut order: Vec<usize> = (0..m).collect();
    order.sort_by_key(|&s| (s.count_ones(), s));
    let mut out = Vec::new();
    fn rec(order: &[usize], pos: usize, n: usize, fam: u64, out: &mut Vec<u64>) {
        if pos == order.len() {
            out.push(fam);
            return;
        }
        let s = order[pos];
        rec(order, pos + 1, n, fam, out);
        let below_ok = (0..n).filter(|b| s >> b & 1 == 1).all(|b| fam >> (s & !(1 << b)) & 1 == 1);
        if below_ok {
            rec(order, pos + 1, n, fam | 1u64 << s, out);
        }
    }
    rec(&order, 0, n, 0, &mut out);
    out.sort_by_key(|&f| (f.count_ones(), f));
    Ok(out)
}

/// The subsets (as 0-based positions into `I`) of a family bitmask.
pub fn family_members(n: usize, fam: u64) -> Vec<Vec<usize>> {
    let mut subsets: Vec<usize> = (0..1usize << n).filter(|&s| fam >> s & 1 == 1).collect();
    subsets.sort_by_key(|&s| (s.count_ones(), s));
    subsets
        .into_iter()
        .map(|s| (0..n).filter(|b| s >> b & 1 == 1).collect())
        .collect()
}

/// The subrepresentation lattice of `Pi(chi)_{w_Psi, I}`: down-sets of `(2^I, subset)`.
pub fn subrep_lattice(i_set: &BTreeSet<usize>, cap: usize) -> Result<Vec<Vec<BTreeSet<usize>>>> {
    let elems: Vec<usize> = i_set.iter().copied().collect();
    let n = elems.len();
    Ok(down_sets(n, cap)?
        .into_iter()
        .map(|fam| {
            family_members(n, fam)
                .into_iter()
                .map(|pos| pos.into_iter().map(|p| elems[p]).collect())
                .collect()
        })
        .collect())
}

/// Covering pairs `[a, b]` (indices into `families`) of the down-set lattice.
pub fn hasse_edges(families: &[u64]) -> Vec<[usize; 2]> {
    let index: HashMap<u64, usize> = families.iter().enumerate().map(|(i, &f)| (f, i)).collect();
    let mut out = Vec::new();
    for (a, &f) in families.iter().enumerate() {
        for bit in 0..64 {
            if f >> bit & 1 == 0 {
                if let Some(&b) = index.get(&(f | 1u64 << bit)) {
                    out.push([a, b]);
                }
            }
        }
    }
    out.sort();
    out
}

/// Hasse diagram of the down-set lattice of `2^I` in DOT.
pub fn hasse_dot(i_set: &BTreeSet<usize>, cap: usize) -> Result<String> {
    let elems: Vec<usize> = i_set.iter().copied().collect();
    let n = elems.len();
    let fams = down_sets(n, cap)?;
    let mut s = String::from("digraph subreps {\n  rankdir=BT;\n");
    for (k, &f) in fams.iter().enumerate() {
        let members: Vec<String> = family_members(n, f)
            .iter()
            .map(|pos| {
                let names: Vec<String> = pos.iter().map(|&p| format!("a{}", elems[p] + 1)).collect();
                format!("{{{}}}", names.join(","))
            })
            .collect();
        let _ = writeln!(s, "  f{k} [label=\"{}\"];", members.join(" "));
    }
    for [a, b] in hasse_edges(&fams) {
        let _ = writeln!(s, "  f{a} -> f{b};");
    }
    s.push_str("}\n");
    Ok(s)
}

#[derive(Clone, Debug, Serialize)]
pub struct SocleReport {
    pub strongly_generic: bool,
    pub factors: Vec<ConstituentJson>,
    pub pairwise_distinct: bool,
}

/// `soc Pi(chi)_Psi`: one `C_{w_Psi, empty}` per `w_Psi` in `W_Psi`.
pub fn pi_psi_socle(group: &WeylGroup, chi: &TorusCharacter, psi: &ClosedRootSubset) -> Result<(Vec<Constituent>, SocleReport)> {
    let strongly = genericity(group, chi)? == Genericity::StronglyGeneric;
    let mut factors = Vec::new();
    for w in w_psi_set(group, psi)? {
        let label = weyl_act(group, &w, chi)?;
        factors.push(Constituent { w_psi: w, i_set: BTreeSet::new(), label });
    }
    let distinct = factors.iter().map(|c| &c.label).collect::<std::collections::HashSet<_>>().len() == factors.len();
    let report = SocleReport {
        strongly_generic: strongly,
        factors: factors
            .iter()
            .map(|c| ConstituentJson {
                name: c.name(),
                w_psi: c.w_psi.word_one_based(),
                i: vec![],
                character: CharSpec::from_character(&c.label),
                socle_degree: 0,
                multiplicity: 1,
            })
            .collect(),
        pairwise_distinct: distinct,
    };
    Ok((factors, report))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum DistinctnessStatus {
    HypothesesNotMet,
    Checked,
}

#[derive(Clone, Debug, Serialize)]
pub struct DistinctnessReport {
    pub status: DistinctnessStatus,
    pub constituents: usize,
    pub labels_distinct: bool,
    pub i_identity_holds: bool,
}

/// Pairwise distinctness of every label over all `w_Psi` and `I`, for strongly
/// generic `chi`; the identity `I = Delta cap w(-Psi)` is checked alongside.
pub fn distinctness_check(group: &WeylGroup, chi: &TorusCharacter, psi: &ClosedRootSubset) -> Result<DistinctnessReport> {
    if genericity(group, chi)? != Genericity::StronglyGeneric {
        return Ok(DistinctnessReport {
            status: DistinctnessStatus::HypothesesNotMet,
            constituents: 0,
            labels_distinct: false,
            i_identity_holds: false,
        });
    }
    let mut labels = std::collections::HashSet::new();
    let mut count = 0;
    let mut identity = true;
    for w in w_psi_set(group, psi)? {
        let lat = build_lattice(group, chi, psi, &w)?;
        for c in lat.constituents {
            identity &= verify_i_identity(group, psi, &w, &c.i_set)?;
            labels.insert(c.label);
            count += 1;
        }
    }
    Ok(DistinctnessReport {
        status: DistinctnessStatus::Checked,
        constituents: count,
        labels_distinct: labels.len() == count,
        i_identity_holds: identity,
    })
}
