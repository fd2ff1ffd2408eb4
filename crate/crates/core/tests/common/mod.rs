//! Brute-force oracles shared by the integration tests.
//!
//! Everything here is rebuilt from a Cartan matrix alone: roots are the orbit
//! of the simple roots under simple reflections (in simple-root coordinates),
//! and Weyl elements are permutations of that finite root set.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};

/// Cartan matrices with `A[i][j] = <alpha_i, alpha_j^vee>`, Bourbaki numbering.
pub fn cartan(family: char, n: usize) -> Vec<Vec<i64>> {
    let mut a = vec![vec![0; n]; n];
    for i in 0..n {
        a[i][i] = 2;
        if i + 1 < n {
            a[i][i + 1] = -1;
            a[i + 1][i] = -1;
        }
    }
    match family {
        'A' => {}
        // alpha_n short
        'B' => a[n - 2][n - 1] = -2,
        // alpha_n long
        'C' => a[n - 1][n - 2] = -2,
        'G' => a[1][0] = -3,
        _ => panic!("family {family}"),
    }
    a
}

pub fn block_diag(blocks: &[Vec<Vec<i64>>]) -> Vec<Vec<i64>> {
    let n: usize = blocks.iter().map(Vec::len).sum();
    let mut out = vec![vec![0; n]; n];
    let mut off = 0;
    for b in blocks {
        for i in 0..b.len() {
            for j in 0..b.len() {
                out[off + i][off + j] = b[i][j];
            }
        }
        off += b.len();
    }
    out
}

/// Expected Cartan matrix for a datum name understood by the library.
pub fn expected_cartan(name: &str) -> Vec<Vec<i64>> {
    let name = name.to_ascii_lowercase();
    if let Some(n) = name.strip_prefix("gl") {
        let n: usize = n.parse().unwrap();
        return cartan('A', n - 1);
    }
    match name.as_str() {
        "gsp4" => return cartan('C', 2),
        "g2" => return cartan('G', 2),
        _ => {}
    }
    let body = name.split_once('-').map(|(_, b)| b).unwrap_or(&name);
    let blocks: Vec<Vec<Vec<i64>>> = body
        .split('x')
        .map(|t| {
            let mut c = t.chars();
            let fam = c.next().unwrap().to_ascii_uppercase();
            cartan(fam, c.as_str().parse().unwrap())
        })
        .collect();
    block_diag(&blocks)
}

#[derive(Clone, Debug)]
pub struct Oracle {
    pub cartan: Vec<Vec<i64>>,
    /// All roots; the positive ones first, in discovery order.
    pub roots: Vec<Vec<i64>>,
    pub n_pos: usize,
    index: HashMap<Vec<i64>, usize>,
    /// `refl[i][k]` = index of `s_i(root k)`.
    refl: Vec<Vec<usize>>,
}

pub type Perm = Vec<usize>;

impl Oracle {
    pub fn new(cartan: Vec<Vec<i64>>) -> Self {
        let n = cartan.len();
        let reflect = |i: usize, b: &[i64]| -> Vec<i64> {
            let pair: i64 = (0..n).map(|j| b[j] * cartan[j][i]).sum();
            let mut out = b.to_vec();
            out[i] -= pair;
            out
        };
        let mut seen: BTreeSet<Vec<i64>> = BTreeSet::new();
        let mut queue: VecDeque<Vec<i64>> = VecDeque::new();
        for i in 0..n {
            let mut e = vec![0; n];
            e[i] = 1;
            queue.push_back(e.clone());
            seen.insert(e);
        }
        while let Some(b) = queue.pop_front() {
            for i in 0..n {
                let r = reflect(i, &b);
                if seen.insert(r.clone()) {
                    queue.push_back(r);
                }
            }
        }
        let mut pos: Vec<Vec<i64>> = seen.iter().filter(|r| r.iter().all(|&x| x >= 0)).cloned().collect();
        pos.sort_by_key(|r| (r.iter().sum::<i64>(), std::cmp::Reverse(r.clone())));
        let n_pos = pos.len();
        let mut roots = pos.clone();
        roots.extend(pos.iter().map(|r| r.iter().map(|x| -x).collect::<Vec<_>>()));
        assert_eq!(roots.len(), seen.len(), "root system is not symmetric");
        let index: HashMap<Vec<i64>, usize> = roots.iter().enumerate().map(|(k, r)| (r.clone(), k)).collect();
        let refl = (0..n)
            .map(|i| roots.iter().map(|r| index[&reflect(i, r)]).collect())
            .collect();
        Oracle { cartan, roots, n_pos, index, refl }
    }

    pub fn rank(&self) -> usize {
        self.cartan.len()
    }

    pub fn positive(&self) -> &[Vec<i64>] {
        &self.roots[..self.n_pos]
    }

    pub fn index_of(&self, r: &[i64]) -> Option<usize> {
        self.index.get(r).copied()
    }

    pub fn is_positive(&self, k: usize) -> bool {
        k < self.n_pos
    }

    pub fn identity(&self) -> Perm {
        (0..self.roots.len()).collect()
    }

    /// `(a b)(k) = a(b(k))`.
    pub fn compose(a: &Perm, b: &Perm) -> Perm {
        b.iter().map(|&k| a[k]).collect()
    }

    pub fn simple(&self, i: usize) -> Perm {
        self.refl[i].clone()
    }

    pub fn of_word(&self, word: &[usize]) -> Perm {
        word.iter().fold(self.identity(), |acc, &i| Self::compose(&acc, &self.refl[i]))
    }

    pub fn inverse(p: &Perm) -> Perm {
        let mut out = vec![0; p.len()];
        for (k, &v) in p.iter().enumerate() {
            out[v] = k;
        }
        out
    }

    pub fn length(&self, p: &Perm) -> usize {
        (0..self.n_pos).filter(|&k| !self.is_positive(p[k])).count()
    }

    /// Every element with one reduced word, by breadth-first search.
    pub fn elements(&self) -> BTreeMap<Perm, Vec<usize>> {
        let mut out = BTreeMap::new();
        out.insert(self.identity(), vec![]);
        let mut queue = VecDeque::from([self.identity()]);
        while let Some(p) = queue.pop_front() {
            let word = out[&p].clone();
            for i in 0..self.rank() {
                let q = Self::compose(&p, &self.refl[i]);
                if !out.contains_key(&q) {
                    let mut w = word.clone();
                    w.push(i);
                    out.insert(q.clone(), w);
                    queue.push_back(q);
                }
            }
        }
        out
    }

    /// Products of all subwords of `word`: the Bruhat interval below it when `word` is reduced.
    pub fn subword_products(&self, word: &[usize]) -> BTreeSet<Perm> {
        let mut acc: BTreeSet<Perm> = BTreeSet::from([self.identity()]);
        for &i in word {
            let next: Vec<Perm> = acc.iter().map(|p| Self::compose(p, &self.refl[i])).collect();
            acc.extend(next);
        }
        acc
    }

    /// Minimal-length representatives of `W / W_L` by explicit coset enumeration.
    pub fn kostant_reps(&self, levi: &BTreeSet<usize>) -> BTreeSet<Perm> {
        let all = self.elements();
        let levi_group = self.levi_group(levi);
        let mut seen: BTreeSet<Perm> = BTreeSet::new();
        let mut reps = BTreeSet::new();
        for w in all.keys() {
            if seen.contains(w) {
                continue;
            }
            let coset: Vec<Perm> = levi_group.iter().map(|l| Self::compose(w, l)).collect();
            let min = coset.iter().min_by_key(|p| self.length(p)).unwrap().clone();
            assert_eq!(coset.iter().filter(|p| self.length(p) == self.length(&min)).count(), 1);
            seen.extend(coset);
            reps.insert(min);
        }
        reps
    }

    /// The subgroup generated by `s_i`, `i` in `levi`, by closure.
    pub fn levi_group(&self, levi: &BTreeSet<usize>) -> BTreeSet<Perm> {
        let mut out = BTreeSet::from([self.identity()]);
        let mut queue = VecDeque::from([self.identity()]);
        while let Some(p) = queue.pop_front() {
            for &i in levi {
                let q = Self::compose(&p, &self.refl[i]);
                if out.insert(q.clone()) {
                    queue.push_back(q);
                }
            }
        }
        out
    }

    pub fn levi_positive(&self, levi: &BTreeSet<usize>) -> BTreeSet<usize> {
        (0..self.n_pos)
            .filter(|&k| self.roots[k].iter().enumerate().all(|(j, &c)| c == 0 || levi.contains(&j)))
            .collect()
    }

    /// `a + b` as a root index, if it is a root.
    pub fn sum(&self, a: usize, b: usize) -> Option<usize> {
        let s: Vec<i64> = self.roots[a].iter().zip(&self.roots[b]).map(|(x, y)| x + y).collect();
        self.index_of(&s)
    }

    /// All closed subsets of the positive roots by brute-force filtering.
    pub fn closed_subsets(&self) -> Vec<BTreeSet<usize>> {
        let n = self.n_pos;
        assert!(n <= 16);
        (0u32..1 << n)
            .map(|m| (0..n).filter(|i| m >> i & 1 == 1).collect::<BTreeSet<usize>>())
            .filter(|s| s.iter().all(|&a| s.iter().all(|&b| self.sum(a, b).is_none_or(|c| s.contains(&c)))))
            .collect()
    }
}

/// Number of down-closed families of subsets of an `n`-set, by filtering all families.
pub fn brute_force_down_sets(n: usize) -> usize {
    let m = 1usize << n;
    assert!(m <= 16);
    (0u64..1 << m)
        .filter(|fam| {
            (0..m).all(|s| fam >> s & 1 == 0 || (0..n).all(|b| s >> b & 1 == 0 || fam >> (s & !(1 << b)) & 1 == 1))
        })
        .count()
}

/// Data of semisimple rank at most 3.
pub const SMALL_DATA: &[&str] = &[
    "gl2", "gl3", "gl4", "gsp4", "g2", "sc-a1", "sc-a1xa1", "sc-a2", "sc-b2", "sc-a1xa1xa1", "sc-a1xa2", "sc-a1xb2",
    "sc-a3", "sc-b3", "sc-c3", "ad-a2", "ad-b2", "ad-a3", "ad-b3", "ad-c3",
];

pub fn group(name: &str) -> weylchar::weyl::WeylGroup {
    use weylchar::root_datum::{Kind, RootDatum};
    let kind: Kind = name.parse().unwrap();
    weylchar::weyl::WeylGroup::new(RootDatum::build(kind).unwrap())
}
