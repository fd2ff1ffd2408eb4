//! Kostant-indexed graded pieces of derived ordinary parts of principal series.
//!
//! For a standard parabolic `P = LN` and a torus character `chi`, degree `n`
//! collects one piece per Kostant representative `w` with `d * l(w) = n`. The
//! piece carries the twist `alpha_w`, the sum of the positive roots inverted
//! by `w`, and the character `chi^w * (omega^{-1} o alpha_w)` of T.
//!
//! Twists are stored additively as lattice vectors, so the trivial twist is 0.

use serde::Serialize;

use crate::character::{compose_coroot, conjugate, weyl_act, CharSpec, TorusCharacter};
use crate::error::{Error, Result};
use crate::lattice::Vector;
use crate::weyl::{Parabolic, WeylElement, WeylGroup};

/// `alpha_w` together with its coordinates over the simple roots.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AlphaTilde {
    pub coords: Vector,
    pub simple_coords: Vec<i64>,
}

fn sum_roots(group: &WeylGroup, roots: impl Iterator<Item = usize>) -> AlphaTilde {
    let d = group.datum();
    let mut coords = Vector::zero(d.rank());
    let mut simple_coords = vec![0; d.semisimple_rank()];
    for i in roots {
        coords += &d.root(i).coords;
        for (a, b) in simple_coords.iter_mut().zip(&d.root(i).simple_coords) {
            *a += b;
        }
    }
    AlphaTilde { coords, simple_coords }
}

/// Sum of the positive roots `alpha` with `w(alpha) < 0`.
pub fn alpha_tilde_inversions(group: &WeylGroup, w: &WeylElement) -> AlphaTilde {
    sum_roots(group, group.inversion_roots(w).into_iter())
}

/// Sum of the roots of `N_{w0 w}`, i.e. of `alpha > 0` with `(w0 w)(alpha) > 0`.
pub fn alpha_tilde_via_w0(group: &WeylGroup, w: &WeylElement) -> AlphaTilde {
    let w0w = group.multiply(&group.longest_element(), w);
    sum_roots(group, group.n_w_roots(&w0w).into_iter())
}

/// `alpha_w`; the two descriptions are computed and required to agree.
pub fn alpha_tilde(group: &WeylGroup, w: &WeylElement) -> AlphaTilde {
    let a = alpha_tilde_inversions(group, w);
    let b = alpha_tilde_via_w0(group, w);
    assert_eq!(a, b, "inversion-set and N_(w0 w) descriptions of alpha_w disagree");
    a
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedPiece {
    pub degree: usize,
    pub kostant_rep: WeylElement,
    pub alpha_tilde: AlphaTilde,
    pub output: TorusCharacter,
}

/// The pieces of degree `n` for the parabolic `p` and residue degree `d`.
pub fn h_ord_rhs(
    group: &WeylGroup,
    p: &Parabolic,
    chi: &TorusCharacter,
    n: usize,
    d: usize,
) -> Result<Vec<GradedPiece>> {
    if d == 0 {
        return Err(Error::Config("d = [F:Q_p] must be at least 1".into()));
    }
    if !n.is_multiple_of(d) {
        return Ok(vec![]);
    }
    let len = n / d;
    group
        .kostant_representatives(p)?
        .into_iter()
        .filter(|w| w.length() == len)
        .map(|w| {
            let alpha = alpha_tilde(group, &w);
            let output = conjugate(group, &w, chi)?.twist_by_omega_inverse(group.datum(), &alpha.coords)?;
            Ok(GradedPiece { degree: n, kostant_rep: w, alpha_tilde: alpha, output })
        })
        .collect()
}

/// Feeds `chi * (omega^{-1} o theta)` into degree 1 (with `d = 1`) and checks that
/// the piece at `s_gamma` is `s_gamma(chi) * (omega^{-1} o theta)`.
pub fn theta_twist_check(group: &WeylGroup, p: &Parabolic, chi: &TorusCharacter) -> Result<bool> {
    let datum = group.datum();
    let theta = datum.theta()?.clone();
    let input = chi.twist_by_omega_inverse(datum, &theta)?;
    for piece in h_ord_rhs(group, p, &input, 1, 1)? {
        let gamma = piece.kostant_rep.word()[0];
        if p.levi().contains(&gamma) {
            return Ok(false);
        }
        let expected = weyl_act(group, &piece.kostant_rep, chi)?.twist_by_omega_inverse(datum, &theta)?;
        if piece.output != expected {
            return Ok(false);
        }
    }
    Ok(true)
}

#[derive(Clone, Debug, Serialize)]
pub struct Cell {
    pub kostant_rep: Vec<usize>,
    pub length: usize,
    /// Inner strata `w_P w_L`, one per `w_L` in `W_L`, as (word of `w_L`, length).
    pub inner: Vec<(Vec<usize>, usize)>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Strata {
    pub cells: Vec<Cell>,
    /// Pairs `[i, j]` (indices into `cells`) with `i != j` and cell i in the closure of cell j.
    pub closure: Vec<[usize; 2]>,
}

/// Cells of `G = sqcup P^- w B` indexed by Kostant representatives, ordered by Bruhat.
pub fn bruhat_strata(group: &WeylGroup, p: &Parabolic) -> Result<Strata> {
    let reps = group.kostant_representatives(p)?;
    let levi = group.levi_elements(p)?;
    let cells = reps
        .iter()
        .map(|w| Cell {
            kostant_rep: w.word_one_based(),
            length: w.length(),
            inner: levi.iter().map(|v| (v.word_one_based(), v.length())).collect(),
        })
        .collect();
    let mut closure = Vec::new();
    for (j, w) in reps.iter().enumerate() {
        for (i, v) in reps.iter().enumerate() {
            if i != j && group.bruhat_leq(v, w) {
                closure.push([i, j]);
            }
        }
    }
    Ok(Strata { cells, closure })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RowStatus {
    ProvedN0,
    ProvedDNmidN,
    ProvedIrreducibleCase,
    Conjectural,
}

#[derive(Clone, Debug, Serialize)]
pub struct PieceJson {
    pub degree: usize,
    pub kostant_rep: Vec<usize>,
    pub alpha_tilde: Vec<i64>,
    pub output_character: CharSpec,
    /// `output o beta^vee != 1` for every `beta` in Delta_L.
    pub levi_irreducibility_criterion: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct ReportRow {
    pub degree: usize,
    pub status: RowStatus,
    pub pieces: Vec<PieceJson>,
}

/// Whether `chi o beta^vee != 1` for every simple root of the Levi. This is the
/// sufficient condition under which the Levi principal series is irreducible.
pub fn levi_criterion(group: &WeylGroup, p: &Parabolic, chi: &TorusCharacter) -> Result<bool> {
    for &b in p.levi() {
        if compose_coroot(group.datum(), chi, b)?.is_trivial() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Every degree from 0 to `d * max l(w_P)` with its pieces and the status of the
/// comparison isomorphism in that degree.
pub fn conjecture15_report(
    group: &WeylGroup,
    p: &Parabolic,
    chi: &TorusCharacter,
    d: usize,
) -> Result<Vec<ReportRow>> {
    if d == 0 {
        return Err(Error::Config("d = [F:Q_p] must be at least 1".into()));
    }
    let max_len = group
        .kostant_representatives(p)?
        .iter()
        .map(WeylElement::length)
        .max()
        .unwrap_or(0);
    let mut rows = Vec::new();
    for n in 0..=d * max_len {
        let pieces = h_ord_rhs(group, p, chi, n, d)?;
        let mut json = Vec::new();
        let mut all_irreducible = true;
        for piece in &pieces {
            let crit = levi_criterion(group, p, &piece.output)?;
            all_irreducible &= crit;
            json.push(PieceJson {
                degree: n,
                kostant_rep: piece.kostant_rep.word_one_based(),
                alpha_tilde: piece.alpha_tilde.simple_coords.clone(),
                output_character: CharSpec::from_character(&piece.output),
                levi_irreducibility_criterion: crit,
            });
        }
        let status = if n == 0 {
            RowStatus::ProvedN0
        } else if n % d != 0 {
            RowStatus::ProvedDNmidN
        } else if all_irreducible {
            RowStatus::ProvedIrreducibleCase
        } else {
            RowStatus::Conjectural
        };
        rows.push(ReportRow { degree: n, status, pieces: json });
    }
    Ok(rows)
}

/// One step of the filtration along a fixed reduced word of `w_P`.
#[derive(Clone, Debug, Serialize)]
pub struct ChainStep {
    pub k: usize,
    pub alpha_k: Vec<i64>,
    pub alpha_k_plus_1: Vec<i64>,
    pub quotient_root: Vec<i64>,
    pub holds: bool,
}

/// Along the canonical reduced word `w_P = s_l ... s_1` and for a given `w_L`,
/// sets `v_k = s_k ... s_1`, `alpha_k = sum of roots of N_{v_k} cap N_{w0 w_P}`,
/// takes the unique root `alpha` of `N_{P, v_k w_L}` missing from
/// `N_{P, v_(k+1) w_L}` and checks `alpha_(k+1) + w_L(alpha) = alpha_k`.
pub fn alpha_chain(
    group: &WeylGroup,
    p: &Parabolic,
    w_p: &WeylElement,
    w_l: &WeylElement,
) -> Result<Vec<ChainStep>> {
    if !group.is_kostant(w_p, p) {
        return Err(Error::Usage(format!("{} is not a Kostant representative", w_p.label())));
    }
    if !group.in_levi(w_l, p) {
        return Err(Error::Usage(format!("{} is not in W_L", w_l.label())));
    }
    let datum = group.datum();
    let word = w_p.word();
    let l = word.len();
    let w0w = group.multiply(&group.longest_element(), w_p);
    let n_w0w = group.n_w_roots(&w0w);
    // v_k is the product of the last k letters.
    let v = |k: usize| group.from_word(&word[l - k..]).expect("valid word");
    let alpha_k = |k: usize| {
        let n_vk = group.n_w_roots(&v(k));
        sum_roots(group, n_vk.intersection(&n_w0w).copied())
    };
    let np_roots = |x: &WeylElement| -> std::collections::BTreeSet<usize> {
        group
            .n_w_roots(x)
            .into_iter()
            .filter(|i| !p.levi_positive().contains(i))
            .collect()
    };
    let mut steps = Vec::new();
    for k in 0..l {
        let big = np_roots(&group.multiply(&v(k), w_l));
        let small = np_roots(&group.multiply(&v(k + 1), w_l));
        let diff: Vec<usize> = big.difference(&small).copied().collect();
        if diff.len() != 1 || !small.is_subset(&big) {
            return Err(Error::Usage(format!(
                "N_(P, v_k w_L) does not drop by one root at k = {k} for {}",
                w_p.label()
            )));
        }
        let alpha = &datum.root(diff[0]).coords;
        let moved = group.act_char(w_l, alpha);
        let a_k = alpha_k(k);
        let a_k1 = alpha_k(k + 1);
        let holds = &a_k1.coords + &moved == a_k.coords;
        steps.push(ChainStep {
            k,
            alpha_k: a_k.simple_coords,
            alpha_k_plus_1: a_k1.simple_coords,
            quotient_root: datum.root(diff[0]).simple_coords.clone(),
            holds,
        });
    }
    Ok(steps)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::ResidueField;
    use crate::root_datum::RootDatum;

    fn group(s: &str) -> WeylGroup {
        WeylGroup::new(RootDatum::build(s.parse().unwrap()).unwrap())
    }

    #[test]
    fn alpha_tilde_a2() {
        let g = group("gl3");
        let w = g.from_word(&[0, 1]).unwrap();
        assert_eq!(alpha_tilde(&g, &w).simple_coords, vec![1, 2]);
        assert!(alpha_tilde(&g, &g.identity()).coords.is_zero());
        let s2 = g.simple_reflection(1).unwrap();
        assert_eq!(&alpha_tilde(&g, &s2).coords, g.datum().simple_root(1));
    }

    #[test]
    fn degree_zero_and_divisibility() {
        let g = group("gl3");
        let f = ResidueField::prime(5).unwrap();
        let chi = TorusCharacter::from_logs(g.datum(), f, &[(1, 0), (2, 1), (3, 3)]).unwrap();
        let p = g.parabolic([0]).unwrap();
        let zero = h_ord_rhs(&g, &p, &chi, 0, 1).unwrap();
        assert_eq!(zero.len(), 1);
        assert_eq!(zero[0].output, chi);
        assert!(h_ord_rhs(&g, &p, &chi, 3, 2).unwrap().is_empty());
        assert!(h_ord_rhs(&g, &p, &chi, 0, 0).is_err());
    }

    #[test]
    fn poincare_counts() {
        let g = group("gl3");
        let f = ResidueField::prime(5).unwrap();
        let chi = TorusCharacter::trivial(g.datum(), f);
        let b = g.parabolic([]).unwrap();
        let counts: Vec<usize> = (0..4).map(|n| h_ord_rhs(&g, &b, &chi, n, 1).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 2, 2, 1]);
    }

    #[test]
    fn report_statuses() {
        let g = group("gl3");
        let f = ResidueField::prime(5).unwrap();
        let chi = TorusCharacter::trivial(g.datum(), f);
        let p = g.parabolic([0]).unwrap();
        let rows = conjecture15_report(&g, &p, &chi, 3).unwrap();
        assert_eq!(rows.len(), 7);
        assert_eq!(rows[0].status, RowStatus::ProvedN0);
        assert_eq!(rows[1].status, RowStatus::ProvedDNmidN);
        assert!(rows[1].pieces.is_empty());
    }

    #[test]
    fn strata_a2() {
        let g = group("gl3");
        let s = bruhat_strata(&g, &g.parabolic([0]).unwrap()).unwrap();
        assert_eq!(s.cells.iter().map(|c| c.length).collect::<Vec<_>>(), vec![0, 1, 2]);
        assert_eq!(s.closure, vec![[0, 1], [0, 2], [1, 2]]);
        assert_eq!(bruhat_strata(&g, &g.parabolic([0, 1]).unwrap()).unwrap().cells.len(), 1);
    }

    #[test]
    fn chain_a2() {
        let g = group("gl3");
        let p = g.parabolic([0]).unwrap();
        let w = g.from_word(&[0, 1]).unwrap();
        for wl in g.levi_elements(&p).unwrap() {
            let steps = alpha_chain(&g, &p, &w, &wl).unwrap();
            assert_eq!(steps.len(), 2);
            assert!(steps.iter().all(|s| s.holds));
            assert_eq!(steps[0].alpha_k, vec![1, 2]);
        }
    }
}
