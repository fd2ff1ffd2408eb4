//! Weyl group arithmetic: elements, length, reduced words, Bruhat order,
//! parabolic subgroups and Kostant representatives.
//!
//! An element is the pair of its action matrices on X and Y. Equality is
//! matrix equality; the reduced word is a cache holding the lexicographically
//! least reduced word, with `word = [a1, .., ak]` meaning `w = s_a1 ... s_ak`.

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashMap, HashSet};
use std::hash::{Hash, Hasher};
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::lattice::{Matrix, Vector};
use crate::root_datum::RootDatum;

/// Default cap on the size of W for exhaustive enumeration.
pub const DEFAULT_WEYL_CAP: usize = 1_000_000;

#[derive(Clone, Debug)]
pub struct WeylElement {
    on_char: Matrix,
    on_cochar: Matrix,
    word: Vec<usize>,
}

impl WeylElement {
    /// Canonical (lexicographically least) reduced word, 0-based simple indices.
    pub fn word(&self) -> &[usize] {
        &self.word
    }

    pub fn length(&self) -> usize {
        self.word.len()
    }

    pub fn is_identity(&self) -> bool {
        self.word.is_empty()
    }

    pub fn on_char(&self) -> &Matrix {
        &self.on_char
    }

    pub fn on_cochar(&self) -> &Matrix {
        &self.on_cochar
    }

    /// Reduced word with 1-based indices, as used in every external format.
    pub fn word_one_based(&self) -> Vec<usize> {
        self.word.iter().map(|i| i + 1).collect()
    }

    /// Human-readable form such as `s1s2s1`, or `e` for the identity.
    pub fn label(&self) -> String {
        if self.word.is_empty() {
            "e".to_string()
        } else {
            self.word.iter().map(|i| format!("s{}", i + 1)).collect()
        }
    }
}

impl PartialEq for WeylElement {
    fn eq(&self, other: &Self) -> bool {
        self.on_char == other.on_char && self.on_cochar == other.on_cochar
    }
}

impl Eq for WeylElement {}

impl Hash for WeylElement {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.on_char.hash(state);
    }
}

impl PartialOrd for WeylElement {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Canonical order: by length, then by canonical word.
impl Ord for WeylElement {
    fn cmp(&self, other: &Self) -> Ordering {
        self.word
            .len()
            .cmp(&other.word.len())
            .then_with(|| self.word.cmp(&other.word))
    }
}

/// Standard parabolic data attached to a subset of the simple roots.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Parabolic {
    levi: BTreeSet<usize>,
    levi_positive: BTreeSet<usize>,
    orthogonal: BTreeSet<usize>,
}

impl Parabolic {
    /// Delta_L as 0-based simple indices.
    pub fn levi(&self) -> &BTreeSet<usize> {
        &self.levi
    }

    /// Phi_L^+ as positive-root indices.
    pub fn levi_positive(&self) -> &BTreeSet<usize> {
        &self.levi_positive
    }

    /// Simple roots orthogonal to every root of Delta_L.
    pub fn orthogonal(&self) -> &BTreeSet<usize> {
        &self.orthogonal
    }

    /// `P <= P'` for standard parabolics is inclusion of the Levi simple roots.
    pub fn is_contained_in(&self, other: &Parabolic) -> bool {
        self.levi.is_subset(&other.levi)
    }
}

/// A root datum together with its Weyl group.
pub struct WeylGroup {
    datum: RootDatum,
    simple: Vec<(Matrix, Matrix)>,
    cap: usize,
    elements: OnceLock<Vec<WeylElement>>,
}

impl std::fmt::Debug for WeylGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("WeylGroup")
            .field("datum", self.datum.kind())
            .field("cap", &self.cap)
            .finish()
    }
}

fn reflection_matrices(root: &Vector, coroot: &Vector) -> (Matrix, Matrix) {
    let n = root.dim();
    // s(mu) = mu - <mu, coroot> root ; s(lambda) = lambda - <root, lambda> coroot
    let build = |a: &Vector, b: &Vector| {
        let rows: Vec<Vec<i64>> = (0..n)
            .map(|i| (0..n).map(|j| i64::from(i == j) - a[i] * b[j]).collect())
            .collect();
        Matrix::from_rows(&rows)
    };
    (build(root, coroot), build(coroot, root))
}

impl WeylGroup {
    pub fn new(datum: RootDatum) -> Self {
        Self::with_cap(datum, DEFAULT_WEYL_CAP)
    }

    pub fn with_cap(datum: RootDatum, cap: usize) -> Self {
        let simple = (0..datum.semisimple_rank())
            .map(|i| reflection_matrices(datum.simple_root(i), datum.simple_coroot(i)))
            .collect();
        WeylGroup { datum, simple, cap, elements: OnceLock::new() }
    }

    pub fn datum(&self) -> &RootDatum {
        &self.datum
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    pub fn order(&self) -> u128 {
        self.datum.weyl_order()
    }

    fn check_simple(&self, i: usize) -> Result<()> {
        if i < self.simple.len() {
            Ok(())
        } else {
            Err(Error::Usage(format!(
                "simple index {} out of range 1..={}",
                i + 1,
                self.simple.len()
            )))
        }
    }

    /// Wraps a pair of matrices, computing the canonical reduced word.
    fn element(&self, on_char: Matrix, on_cochar: Matrix) -> WeylElement {
        let mut word = Vec::new();
        let (mut m, mut n) = (on_char.clone(), on_cochar.clone());
        // w^{-1} acts on X through the transpose of its Y-matrix.
        'outer: loop {
            let inv = n.transpose();
            for i in 0..self.simple.len() {
                let image = inv.apply(self.datum.simple_root(i));
                if !self.is_positive(&image) {
                    word.push(i);
                    m = self.simple[i].0.mul(&m);
                    n = self.simple[i].1.mul(&n);
                    continue 'outer;
                }
            }
            break;
        }
        debug_assert!(m.is_identity());
        WeylElement { on_char, on_cochar, word }
    }

    fn is_positive(&self, root: &Vector) -> bool {
        self.datum
            .classify(root)
            .expect("Weyl images of roots are roots")
            .positive
    }

    pub fn identity(&self) -> WeylElement {
        let n = self.datum.rank();
        WeylElement { on_char: Matrix::identity(n), on_cochar: Matrix::identity(n), word: vec![] }
    }

    pub fn simple_reflection(&self, i: usize) -> Result<WeylElement> {
        self.check_simple(i)?;
        let (a, b) = self.simple[i].clone();
        Ok(WeylElement { on_char: a, on_cochar: b, word: vec![i] })
    }

    /// The reflection `s_alpha` for the positive root with index `i`.
    pub fn reflection(&self, i: usize) -> Result<WeylElement> {
        if i >= self.datum.num_positive_roots() {
            return Err(Error::Usage(format!("root index {i} out of range")));
        }
        let r = self.datum.root(i);
        let (a, b) = reflection_matrices(&r.coords, &r.coroot);
        Ok(self.element(a, b))
    }

    /// `w = s_{word[0]} s_{word[1]} ...` for an arbitrary (not necessarily reduced) word.
    pub fn from_word(&self, word: &[usize]) -> Result<WeylElement> {
        let n = self.datum.rank();
        let (mut a, mut b) = (Matrix::identity(n), Matrix::identity(n));
        for &i in word {
            self.check_simple(i)?;
            a = a.mul(&self.simple[i].0);
            b = b.mul(&self.simple[i].1);
        }
        Ok(self.element(a, b))
    }

    pub fn multiply(&self, w: &WeylElement, v: &WeylElement) -> WeylElement {
        self.element(w.on_char.mul(&v.on_char), w.on_cochar.mul(&v.on_cochar))
    }

    pub fn inverse(&self, w: &WeylElement) -> WeylElement {
        // The actions on X and Y are inverse-transposes of each other.
        self.element(w.on_cochar.transpose(), w.on_char.transpose())
    }

    pub fn length(&self, w: &WeylElement) -> usize {
        w.length()
    }

    pub fn act_char(&self, w: &WeylElement, mu: &Vector) -> Vector {
        w.on_char.apply(mu)
    }

    pub fn act_cochar(&self, w: &WeylElement, lambda: &Vector) -> Vector {
        w.on_cochar.apply(lambda)
    }

    /// Image of the positive root with index `i`, as a signed root.
    pub fn act_root(&self, w: &WeylElement, i: usize) -> crate::root_datum::SignedRoot {
        let image = w.on_char.apply(&self.datum.root(i).coords);
        self.datum.classify(&image).expect("Weyl images of roots are roots")
    }

    /// `{alpha in Phi+ : w(alpha) in Phi-}`.
    pub fn inversion_roots(&self, w: &WeylElement) -> BTreeSet<usize> {
        (0..self.datum.num_positive_roots())
            .filter(|&i| !self.act_root(w, i).positive)
            .collect()
    }

    /// `{alpha in Phi+ : w(alpha) in Phi+}`, the roots of N_w.
    pub fn n_w_roots(&self, w: &WeylElement) -> BTreeSet<usize> {
        (0..self.datum.num_positive_roots())
            .filter(|&i| self.act_root(w, i).positive)
            .collect()
    }

    /// All elements of W, sorted by (length, canonical word).
    pub fn elements(&self) -> Result<&[WeylElement]> {
        let order = self.order();
        if order > self.cap as u128 {
            return Err(Error::Bound { what: "Weyl group", size: order, cap: self.cap as u128 });
        }
        Ok(self.elements.get_or_init(|| self.enumerate()))
    }

    fn enumerate(&self) -> Vec<WeylElement> {
        let mut all = vec![self.identity()];
        let mut seen: HashSet<Matrix> = HashSet::from([self.identity().on_char]);
        let mut level = vec![self.identity()];
        while !level.is_empty() {
            let mut next = Vec::new();
            for w in &level {
                for (a, b) in &self.simple {
                    let m = a.mul(&w.on_char);
                    if seen.insert(m.clone()) {
                        next.push(self.element(m, b.mul(&w.on_cochar)));
                    }
                }
            }
            next.sort();
            all.extend(next.iter().cloned());
            level = next;
        }
        debug_assert_eq!(all.len() as u128, self.order());
        all
    }

    /// The longest element w0.
    pub fn longest_element(&self) -> WeylElement {
        let mut w = self.identity();
        'outer: loop {
            for i in 0..self.simple.len() {
                let img = w.on_char.apply(self.datum.simple_root(i));
                if self.is_positive(&img) {
                    w = self.multiply(&w, &self.simple_reflection(i).expect("valid index"));
                    continue 'outer;
                }
            }
            return w;
        }
    }

    /// The Bruhat interval `[1, w]`: all products of subwords of the canonical word of `w`.
    pub fn bruhat_interval(&self, w: &WeylElement) -> Vec<WeylElement> {
        let mut set: HashMap<Matrix, Matrix> = HashMap::new();
        let n = self.datum.rank();
        set.insert(Matrix::identity(n), Matrix::identity(n));
        for &i in &w.word {
            let (a, b) = &self.simple[i];
            let extended: Vec<(Matrix, Matrix)> =
                set.iter().map(|(x, y)| (x.mul(a), y.mul(b))).collect();
            for (x, y) in extended {
                set.entry(x).or_insert(y);
            }
        }
        let mut out: Vec<WeylElement> = set.into_iter().map(|(a, b)| self.element(a, b)).collect();
        out.sort();
        out
    }

    /// `w' <= w` in the Bruhat order, by the subword property on the canonical word of `w`.
    pub fn bruhat_leq(&self, w_prime: &WeylElement, w: &WeylElement) -> bool {
        if w_prime.length() > w.length() {
            return false;
        }
        if w_prime.length() == w.length() {
            return w_prime == w;
        }
        let n = self.datum.rank();
        let mut set: HashSet<Matrix> = HashSet::from([Matrix::identity(n)]);
        for &i in &w.word {
            let a = &self.simple[i].0;
            let extended: Vec<Matrix> = set.iter().map(|x| x.mul(a)).collect();
            set.extend(extended);
        }
        set.contains(&w_prime.on_char)
    }

    /// Every reduced word of `w`, sorted lexicographically.
    pub fn reduced_words(&self, w: &WeylElement) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut prefix = Vec::new();
        self.reduced_words_rec(w, &mut prefix, &mut out);
        out.sort();
        out
    }

    fn reduced_words_rec(&self, w: &WeylElement, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if w.is_identity() {
            out.push(prefix.clone());
            return;
        }
        for i in self.left_descents(w) {
            let s = self.simple_reflection(i).expect("valid index");
            let rest = self.multiply(&s, w);
            prefix.push(i);
            self.reduced_words_rec(&rest, prefix, out);
            prefix.pop();
        }
    }

    /// Simple indices `i` with `l(s_i w) < l(w)`.
    pub fn left_descents(&self, w: &WeylElement) -> Vec<usize> {
        let inv = w.on_cochar.transpose();
        (0..self.simple.len())
            .filter(|&i| !self.is_positive(&inv.apply(self.datum.simple_root(i))))
            .collect()
    }

    /// Simple indices `i` with `l(w s_i) < l(w)`.
    pub fn right_descents(&self, w: &WeylElement) -> Vec<usize> {
        (0..self.simple.len())
            .filter(|&i| !self.is_positive(&w.on_char.apply(self.datum.simple_root(i))))
            .collect()
    }

    pub fn parabolic(&self, levi: impl IntoIterator<Item = usize>) -> Result<Parabolic> {
        let levi: BTreeSet<usize> = levi.into_iter().collect();
        for &i in &levi {
            self.check_simple(i)?;
        }
        let levi_positive = self
            .datum
            .positive_roots()
            .iter()
            .enumerate()
            .filter(|(_, r)| {
                r.simple_coords
                    .iter()
                    .enumerate()
                    .all(|(j, &c)| c == 0 || levi.contains(&j))
            })
            .map(|(i, _)| i)
            .collect();
        let orthogonal = (0..self.simple.len())
            .filter(|&a| {
                levi.iter().all(|&b| {
                    self.datum.simple_root(a).dot(self.datum.simple_coroot(b)) == 0 && a != b
                })
            })
            .collect();
        Ok(Parabolic { levi, levi_positive, orthogonal })
    }

    /// Whether `w` lies in W_L.
    pub fn in_levi(&self, w: &WeylElement, p: &Parabolic) -> bool {
        w.word.iter().all(|i| p.levi.contains(i))
    }

    pub fn levi_elements(&self, p: &Parabolic) -> Result<Vec<WeylElement>> {
        Ok(self.elements()?.iter().filter(|w| self.in_levi(w, p)).cloned().collect())
    }

    /// Whether `w` has minimal length in `w W_L`.
    pub fn is_kostant(&self, w: &WeylElement, p: &Parabolic) -> bool {
        p.levi
            .iter()
            .all(|&i| self.is_positive(&w.on_char.apply(self.datum.simple_root(i))))
    }

    /// Minimal-length representatives of the left cosets `w W_L`, in canonical order.
    pub fn kostant_representatives(&self, p: &Parabolic) -> Result<Vec<WeylElement>> {
        Ok(self.elements()?.iter().filter(|w| self.is_kostant(w, p)).cloned().collect())
    }

    /// The unique factorization `w = w_P w_L` with `w_P` a Kostant representative.
    pub fn kostant_decompose(&self, w: &WeylElement, p: &Parabolic) -> (WeylElement, WeylElement) {
        let mut rep = w.clone();
        // Collected right to left: w = rep * s_{k_m} ... s_{k_1}.
        let mut levi_word = Vec::new();
        'outer: loop {
            for &i in &p.levi {
                if !self.is_positive(&rep.on_char.apply(self.datum.simple_root(i))) {
                    rep = self.multiply(&rep, &self.simple_reflection(i).expect("valid index"));
                    levi_word.push(i);
                    continue 'outer;
                }
            }
            break;
        }
        levi_word.reverse();
        let w_l = self.from_word(&levi_word).expect("valid indices");
        debug_assert_eq!(&self.multiply(&rep, &w_l), w);
        (rep, w_l)
    }

    /// Exhaustively checks that `w' <= w` implies `proj(w') <= proj(w)`.
    pub fn bruhat_projection_monotone(&self, p: &Parabolic) -> Result<bool> {
        let elements = self.elements()?;
        let proj: Vec<WeylElement> =
            elements.iter().map(|w| self.kostant_decompose(w, p).0).collect();
        for (j, w) in elements.iter().enumerate() {
            let below: HashSet<WeylElement> = self.bruhat_interval(w).into_iter().collect();
            for (i, v) in elements.iter().enumerate() {
                if below.contains(v) && !self.bruhat_leq(&proj[i], &proj[j]) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Parses a word such as `s1s2s1`, `1,2,1`, `121` or `e` (1-based letters).
    pub fn parse_word(&self, s: &str) -> Result<WeylElement> {
        let word = parse_word(s)?;
        self.from_word(&word)
    }
}

/// Parses a 1-based word into 0-based indices. Accepts `s1s2`, `1,2`, `1 2`, `12`, `e`, ``.
pub fn parse_word(s: &str) -> Result<Vec<usize>> {
    let t = s.trim();
    if t.is_empty() || t == "e" || t == "id" {
        return Ok(vec![]);
    }
    let letters: Vec<&str> = if t.contains('s') {
        t.split('s').filter(|x| !x.is_empty()).collect()
    } else if t.contains(',') || t.contains(' ') {
        t.split([',', ' ']).filter(|x| !x.is_empty()).collect()
    } else {
        t.split("").filter(|x| !x.is_empty()).collect()
    };
    letters
        .iter()
        .map(|l| {
            let k: usize = l
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad Weyl word '{s}'")))?;
            if k == 0 {
                return Err(Error::Parse(format!("Weyl word letters are 1-based: '{s}'")));
            }
            Ok(k - 1)
        })
        .collect()
}

/// Parses a list of simple roots such as `a1,a3` (1-based) into 0-based indices.
pub fn parse_simple_set(s: &str) -> Result<BTreeSet<usize>> {
    let t = s.trim();
    if t.is_empty() || t == "none" || t == "-" {
        return Ok(BTreeSet::new());
    }
    t.split(',')
        .map(|part| {
            let p = part.trim().trim_start_matches(['a', 'A']);
            let k: usize = p
                .parse()
                .map_err(|_| Error::Parse(format!("bad simple root '{part}'")))?;
            if k == 0 {
                return Err(Error::Parse("simple roots are 1-based".into()));
            }
            Ok(k - 1)
        })
        .collect()
}
