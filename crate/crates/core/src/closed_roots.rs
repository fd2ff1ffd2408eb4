//! Closed subsets of positive roots, the sets `W_Psi`, and orthogonal subsets of Delta.
//!
//! Root subsets are sets of positive-root indices of the ambient [`RootDatum`].

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::root_datum::RootDatum;
use crate::weyl::{WeylElement, WeylGroup};

/// Default cap on `|Phi+|` for exhaustive enumeration of closed subsets.
pub const DEFAULT_CLOSED_CAP: usize = 12;

fn check_indices(datum: &RootDatum, s: &BTreeSet<usize>) -> Result<()> {
    match s.iter().find(|&&i| i >= datum.num_positive_roots()) {
        Some(bad) => Err(Error::Usage(format!("root index {bad} is not a positive root"))),
        None => Ok(()),
    }
}

pub fn is_closed(datum: &RootDatum, s: &BTreeSet<usize>) -> Result<bool> {
    check_indices(datum, s)?;
    for &a in s {
        for &b in s {
            if let Some(c) = datum.sum_root(a, b) {
                if !s.contains(&c) {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// The smallest closed subset of Phi+ containing `seed`.
pub fn make_closed(datum: &RootDatum, seed: &BTreeSet<usize>) -> Result<ClosedRootSubset> {
    check_indices(datum, seed)?;
    Ok(ClosedRootSubset { psi: datum.positive_roots_closure(seed)? })
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ClosedRootSubset {
    psi: BTreeSet<usize>,
}

impl ClosedRootSubset {
    /// Validates `s`. A set that is not closed is rejected, never completed.
    pub fn new(datum: &RootDatum, s: BTreeSet<usize>) -> Result<Self> {
        if !is_closed(datum, &s)? {
            let missing = s
                .iter()
                .flat_map(|&a| s.iter().filter_map(move |&b| datum.sum_root(a, b)))
                .find(|c| !s.contains(c))
                .expect("a non-closed set has a missing sum");
            return Err(Error::NotClosed(format!(
                "sum root {:?} is missing",
                datum.root(missing).simple_coords
            )));
        }
        Ok(ClosedRootSubset { psi: s })
    }

    pub fn all(datum: &RootDatum) -> Self {
        ClosedRootSubset { psi: (0..datum.num_positive_roots()).collect() }
    }

    pub fn empty() -> Self {
        ClosedRootSubset { psi: BTreeSet::new() }
    }

    pub fn roots(&self) -> &BTreeSet<usize> {
        &self.psi
    }

    pub fn len(&self) -> usize {
        self.psi.len()
    }

    pub fn is_empty(&self) -> bool {
        self.psi.is_empty()
    }

    /// The roots as simple-coordinate vectors, in index order.
    pub fn simple_coords(&self, datum: &RootDatum) -> Vec<Vec<i64>> {
        self.psi.iter().map(|&i| datum.root(i).simple_coords.clone()).collect()
    }

    /// Parses `all`, `empty`, or a JSON list of simple-coordinate vectors.
    pub fn parse(datum: &RootDatum, text: &str) -> Result<Self> {
        let t = text.trim();
        match t {
            "all" | "phi+" => return Ok(Self::all(datum)),
            "empty" | "none" | "[]" => return Ok(Self::empty()),
            _ => {}
        }
        let vecs: Vec<Vec<i64>> = serde_json::from_str(t)?;
        let mut set = BTreeSet::new();
        for v in vecs {
            let i = datum
                .root_by_simple_coords(&v)
                .ok_or_else(|| Error::Usage(format!("{v:?} is not a positive root")))?;
            set.insert(i);
        }
        Self::new(datum, set)
    }
}

/// `W_Psi = {w : w(Psi) in Phi+}`, in canonical order.
pub fn w_psi_set(group: &WeylGroup, psi: &ClosedRootSubset) -> Result<Vec<WeylElement>> {
    Ok(group
        .elements()?
        .iter()
        .filter(|w| maps_into_positive(group, w, psi))
        .cloned()
        .collect())
}

pub fn maps_into_positive(group: &WeylGroup, w: &WeylElement, psi: &ClosedRootSubset) -> bool {
    psi.psi.iter().all(|&i| group.act_root(w, i).positive)
}

/// `Delta cap w(Psi)` as simple indices. Fails when `w` is not in `W_Psi`.
pub fn delta_cap(group: &WeylGroup, w: &WeylElement, psi: &ClosedRootSubset) -> Result<BTreeSet<usize>> {
    let mut out = BTreeSet::new();
    for &i in &psi.psi {
        let img = group.act_root(w, i);
        if !img.positive {
            return Err(Error::NotInWPsi);
        }
        if group.datum().is_simple_index(img.index) {
            out.insert(img.index);
        }
    }
    Ok(out)
}

/// All pairwise-orthogonal subsets of `s`, ordered by size and then lexicographically.
pub fn orthogonal_subsets(datum: &RootDatum, s: &BTreeSet<usize>) -> Vec<BTreeSet<usize>> {
    let elems: Vec<usize> = s.iter().copied().collect();
    let orth = |a: usize, b: usize| datum.simple_root(a).dot(datum.simple_coroot(b)) == 0;
    let mut out: Vec<BTreeSet<usize>> = vec![BTreeSet::new()];
    let mut frontier: Vec<Vec<usize>> = vec![vec![]];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for set in &frontier {
            let start = set.last().map_or(0, |&last| {
                elems.iter().position(|&e| e == last).expect("member") + 1
            });
            for &e in &elems[start..] {
                if set.iter().all(|&x| orth(x, e)) {
                    let mut bigger = set.clone();
                    bigger.push(e);
                    next.push(bigger);
                }
            }
        }
        out.extend(next.iter().map(|v| v.iter().copied().collect::<BTreeSet<_>>()));
        frontier = next;
    }
    out
}

/// `(prod_{alpha in I} s_alpha) * w_psi`.
pub fn twisted_element(group: &WeylGroup, i_set: &BTreeSet<usize>, w_psi: &WeylElement) -> Result<WeylElement> {
    let word: Vec<usize> = i_set.iter().copied().collect();
    Ok(group.multiply(&group.from_word(&word)?, w_psi))
}

/// Checks `I = Delta cap w(-Psi)` for `w = (prod_{alpha in I} s_alpha) w_psi`.
pub fn verify_i_identity(
    group: &WeylGroup,
    psi: &ClosedRootSubset,
    w_psi: &WeylElement,
    i_set: &BTreeSet<usize>,
) -> Result<bool> {
    let w = twisted_element(group, i_set, w_psi)?;
    let lhs: BTreeSet<usize> = psi
        .psi
        .iter()
        .map(|&i| group.act_root(&w, i))
        .filter(|r| !r.positive && group.datum().is_simple_index(r.index))
        .map(|r| r.index)
        .collect();
    Ok(&lhs == i_set)
}

/// Every closed subset of Phi+, ordered by size and then lexicographically.
pub fn enumerate_closed_subsets(datum: &RootDatum, cap: usize) -> Result<Vec<ClosedRootSubset>> {
    let n = datum.num_positive_roots();
    if n > cap {
        return Err(Error::Bound { what: "positive roots for subset enumeration", size: n as u128, cap: cap as u128 });
    }
    let mut out = Vec::new();
    for mask in 0u64..(1u64 << n) {
        let set: BTreeSet<usize> = (0..n).filter(|i| mask >> i & 1 == 1).collect();
        if is_closed(datum, &set)? {
            out.push(ClosedRootSubset { psi: set });
        }
    }
    out.sort_by(|a, b| a.psi.len().cmp(&b.psi.len()).then_with(|| a.psi.iter().cmp(b.psi.iter())));
    Ok(out)
}

#[derive(Clone, Debug, Serialize)]
pub struct WPsiEntry {
    pub w_psi: Vec<usize>,
    pub delta_cap: Vec<usize>,
    pub orthogonal_subsets: Vec<Vec<usize>>,
}

/// `W_Psi` with, for each element, `Delta cap w(Psi)` and its orthogonal subsets (1-based).
pub fn w_psi_report(group: &WeylGroup, psi: &ClosedRootSubset) -> Result<Vec<WPsiEntry>> {
    let one = |s: &BTreeSet<usize>| s.iter().map(|i| i + 1).collect::<Vec<_>>();
    w_psi_set(group, psi)?
        .iter()
        .map(|w| {
            let dc = delta_cap(group, w, psi)?;
            Ok(WPsiEntry {
                w_psi: w.word_one_based(),
                orthogonal_subsets: orthogonal_subsets(group.datum(), &dc).iter().map(one).collect(),
                delta_cap: one(&dc),
            })
        })
        .collect()
}
