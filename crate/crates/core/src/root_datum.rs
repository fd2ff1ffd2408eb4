//! Root data of split reductive groups.
//!
//! Every datum carries a character lattice X and a cocharacter lattice Y of
//! the same rank, written in dual bases so that the pairing is the dot
//! product. Roots and coroots are integer coordinate vectors. The positive
//! roots are generated from the simple ones by simple reflections and are
//! stored sorted by height.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::lattice::{solve_integral, Vector};

/// Largest lattice rank accepted by [`RootDatum::build`].
pub const MAX_RANK: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

/// An irreducible Cartan type such as `B3`, with Bourbaki numbering.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SimpleType {
    pub family: Family,
    pub rank: usize,
}

impl SimpleType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::B | Family::C => rank >= 2,
            Family::D => rank >= 4,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        if !ok || rank > MAX_RANK {
            return Err(Error::Config(format!("unsupported Cartan type {family:?}{rank}")));
        }
        Ok(SimpleType { family, rank })
    }

    /// Entry `[i][j]` is `<alpha_i, alpha_j^vee>`.
    pub fn cartan_matrix(&self) -> Vec<Vec<i64>> {
        let n = self.rank;
        let mut a = vec![vec![0i64; n]; n];
        for (i, row) in a.iter_mut().enumerate() {
            row[i] = 2;
        }
        let mut link = |i: usize, j: usize| {
            a[i][j] = -1;
            a[j][i] = -1;
        };
        match self.family {
            Family::A | Family::B | Family::C | Family::F | Family::G => {
                for i in 0..n - 1 {
                    link(i, i + 1);
                }
            }
            Family::D => {
                for i in 0..n - 2 {
                    link(i, i + 1);
                }
                link(n - 3, n - 1);
            }
            Family::E => {
                link(0, 2);
                link(1, 3);
                for i in 2..n - 1 {
                    link(i, i + 1);
                }
            }
        }
        match self.family {
            // alpha_n short
            Family::B => a[n - 2][n - 1] = -2,
            // alpha_n long
            Family::C => a[n - 1][n - 2] = -2,
            // alpha_1, alpha_2 long, alpha_3, alpha_4 short
            Family::F => a[1][2] = -2,
            // alpha_1 short, alpha_2 long
            Family::G => a[1][0] = -3,
            _ => {}
        }
        a
    }

    pub fn weyl_order(&self) -> u128 {
        let n = self.rank as u128;
        let fact = |k: u128| (1..=k).product::<u128>();
        match self.family {
            Family::A => fact(n + 1),
            Family::B | Family::C => (1u128 << n) * fact(n),
            Family::D => (1u128 << (n - 1)) * fact(n),
            Family::E => match n {
                6 => 51_840,
                7 => 2_903_040,
                _ => 696_729_600,
            },
            Family::F => 1152,
            Family::G => 12,
        }
    }

    pub fn positive_root_count(&self) -> usize {
        let n = self.rank;
        match self.family {
            Family::A => n * (n + 1) / 2,
            Family::B | Family::C => n * n,
            Family::D => n * (n - 1),
            Family::E => [36, 63, 120][n - 6],
            Family::F => 24,
            Family::G => 6,
        }
    }
}

impl fmt::Display for SimpleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}{}", self.family, self.rank)
    }
}

/// A possibly reducible Cartan type, e.g. `A1xA1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CartanType(pub Vec<SimpleType>);

impl CartanType {
    pub fn rank(&self) -> usize {
        self.0.iter().map(|t| t.rank).sum()
    }

    pub fn cartan_matrix(&self) -> Vec<Vec<i64>> {
        let n = self.rank();
        let mut a = vec![vec![0i64; n]; n];
        let mut off = 0;
        for t in &self.0 {
            let block = t.cartan_matrix();
            for i in 0..t.rank {
                for j in 0..t.rank {
                    a[off + i][off + j] = block[i][j];
                }
            }
            off += t.rank;
        }
        a
    }

    pub fn weyl_order(&self) -> u128 {
        self.0.iter().map(SimpleType::weyl_order).product()
    }

    pub fn positive_root_count(&self) -> usize {
        self.0.iter().map(SimpleType::positive_root_count).sum()
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, t) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, "x")?;
            }
            write!(f, "{t}")?;
        }
        Ok(())
    }
}

impl FromStr for CartanType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut parts = Vec::new();
        for part in s.split(['x', '*']) {
            let part = part.trim();
            let mut chars = part.chars();
            let family = match chars.next().map(|c| c.to_ascii_uppercase()) {
                Some('A') => Family::A,
                Some('B') => Family::B,
                Some('C') => Family::C,
                Some('D') => Family::D,
                Some('E') => Family::E,
                Some('F') => Family::F,
                Some('G') => Family::G,
                _ => return Err(Error::Config(format!("bad Cartan type '{s}'"))),
            };
            let rank: usize = chars
                .as_str()
                .trim_start_matches('_')
                .parse()
                .map_err(|_| Error::Config(format!("bad Cartan type '{s}'")))?;
            parts.push(SimpleType::new(family, rank)?);
        }
        if parts.is_empty() {
            return Err(Error::Config("empty Cartan type".into()));
        }
        Ok(CartanType(parts))
    }
}

/// The supported families of root data.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Kind {
    /// GL_n with the diagonal torus.
    Gl(usize),
    /// GSp_4 with torus coordinates (e1, e2, e0), e0 the similitude.
    Gsp4,
    /// The (simply connected and adjoint) group of type G2.
    G2,
    /// Simply connected semisimple group: X is the weight lattice.
    SimplyConnected(CartanType),
    /// Adjoint semisimple group: X is the root lattice.
    Adjoint(CartanType),
}

impl Kind {
    pub fn cartan_type(&self) -> CartanType {
        match self {
            Kind::Gl(n) => CartanType(vec![SimpleType { family: Family::A, rank: n - 1 }]),
            Kind::Gsp4 => CartanType(vec![SimpleType { family: Family::C, rank: 2 }]),
            Kind::G2 => CartanType(vec![SimpleType { family: Family::G, rank: 2 }]),
            Kind::SimplyConnected(t) | Kind::Adjoint(t) => t.clone(),
        }
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Kind::Gl(n) => write!(f, "GL_{n}"),
            Kind::Gsp4 => write!(f, "GSp_4"),
            Kind::G2 => write!(f, "G2"),
            Kind::SimplyConnected(t) => write!(f, "simply_connected({t})"),
            Kind::Adjoint(t) => write!(f, "adjoint({t})"),
        }
    }
}

impl FromStr for Kind {
    type Err = Error;

    /// Accepts `gl3`, `gl_3`, `gsp4`, `g2`, `sc-a3`, `sc:b2`, `ad-a1xa1`.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim().to_ascii_lowercase();
        if let Some(rest) = t.strip_prefix("sc-").or_else(|| t.strip_prefix("sc:")) {
            return Ok(Kind::SimplyConnected(rest.parse()?));
        }
        if let Some(rest) = t.strip_prefix("ad-").or_else(|| t.strip_prefix("ad:")) {
            return Ok(Kind::Adjoint(rest.parse()?));
        }
        if t == "gsp4" || t == "gsp_4" {
            return Ok(Kind::Gsp4);
        }
        if t == "g2" {
            return Ok(Kind::G2);
        }
        if let Some(rest) = t.strip_prefix("gl") {
            let n: usize = rest
                .trim_start_matches('_')
                .parse()
                .map_err(|_| Error::Config(format!("bad datum kind '{s}'")))?;
            return Ok(Kind::Gl(n));
        }
        Err(Error::Config(format!("unknown datum kind '{s}'")))
    }
}

/// A positive root with its coroot and its coordinates over the simple roots.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Root {
    pub coords: Vector,
    pub simple_coords: Vec<i64>,
    pub coroot: Vector,
}

impl Root {
    pub fn height(&self) -> i64 {
        self.simple_coords.iter().sum()
    }
}

/// Result of looking up a vector among the roots.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SignedRoot {
    pub index: usize,
    pub positive: bool,
}

#[derive(Clone, Debug)]
pub struct RootDatum {
    kind: Kind,
    cartan_type: CartanType,
    rank: usize,
    simple_roots: Vec<Vector>,
    simple_coroots: Vec<Vector>,
    positive: Vec<Root>,
    lookup: HashMap<Vector, SignedRoot>,
    fundamental_coweights: Option<Vec<Vector>>,
    theta: Option<Vector>,
}

impl RootDatum {
    /// Builds the datum of the given kind. Fails with a configuration error on
    /// unsupported kinds or ranks.
    pub fn build(kind: Kind) -> Result<Self> {
        match &kind {
            Kind::Gl(n) => {
                let n = *n;
                if !(2..=MAX_RANK).contains(&n) {
                    return Err(Error::Config(format!("GL_n needs 2 <= n <= {MAX_RANK}, got {n}")));
                }
                let diff = |i: usize| {
                    let mut v = Vector::zero(n);
                    v.0[i] = 1;
                    v.0[i + 1] = -1;
                    v
                };
                let simple: Vec<Vector> = (0..n - 1).map(diff).collect();
                let lambdas = (0..n - 1)
                    .map(|i| Vector((0..n).map(|j| i64::from(j <= i)).collect()))
                    .collect();
                let theta = Vector((0..n).map(|j| (n - 1 - j) as i64).collect());
                let ct = kind.cartan_type();
                Self::assemble(kind, ct, n, simple.clone(), simple, Some(theta), Some(lambdas))
            }
            Kind::Gsp4 => {
                let simple = vec![Vector(vec![1, -1, 0]), Vector(vec![0, 2, -1])];
                let coroots = vec![Vector(vec![1, -1, 0]), Vector(vec![0, 1, 0])];
                let lambdas = vec![Vector(vec![1, 0, 0]), Vector(vec![0, 0, -1])];
                let theta = Vector(vec![2, 1, 0]);
                let ct = kind.cartan_type();
                Self::assemble(kind, ct, 3, simple, coroots, Some(theta), Some(lambdas))
            }
            Kind::G2 => Self::simply_connected(kind.clone(), kind.cartan_type()),
            Kind::SimplyConnected(t) => Self::simply_connected(kind.clone(), t.clone()),
            Kind::Adjoint(t) => Self::adjoint(kind.clone(), t.clone()),
        }
    }

    /// X = weight lattice (basis: fundamental weights), Y = coroot lattice.
    fn simply_connected(kind: Kind, ct: CartanType) -> Result<Self> {
        let n = ct.rank();
        if n > MAX_RANK {
            return Err(Error::Config(format!("rank {n} exceeds {MAX_RANK}")));
        }
        let a = ct.cartan_matrix();
        let simple = a.iter().map(|row| Vector(row.clone())).collect();
        let coroots = (0..n).map(|i| Vector::unit(n, i)).collect();
        let theta = Vector(vec![1; n]);
        // lambda_i = sum_k c_k alpha_k^vee with sum_k A[j][k] c_k = delta_ij.
        let lambdas: Option<Vec<Vector>> = (0..n)
            .map(|i| {
                let rhs: Vec<i64> = (0..n).map(|j| i64::from(i == j)).collect();
                solve_integral(&a, &rhs).map(Vector)
            })
            .collect();
        Self::assemble(kind, ct, n, simple, coroots, Some(theta), lambdas)
    }

    /// X = root lattice (basis: simple roots), Y = coweight lattice.
    fn adjoint(kind: Kind, ct: CartanType) -> Result<Self> {
        let n = ct.rank();
        if n > MAX_RANK {
            return Err(Error::Config(format!("rank {n} exceeds {MAX_RANK}")));
        }
        let a = ct.cartan_matrix();
        let simple = (0..n).map(|i| Vector::unit(n, i)).collect();
        let coroots = (0..n).map(|i| Vector((0..n).map(|j| a[j][i]).collect())).collect();
        let lambdas = (0..n).map(|i| Vector::unit(n, i)).collect();
        let at: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| a[j][i]).collect()).collect();
        let theta = solve_integral(&at, &vec![1; n]).map(Vector);
        Self::assemble(kind, ct, n, simple, coroots, theta, Some(lambdas))
    }

    fn assemble(
        kind: Kind,
        cartan_type: CartanType,
        rank: usize,
        simple_roots: Vec<Vector>,
        simple_coroots: Vec<Vector>,
        theta: Option<Vector>,
        fundamental_coweights: Option<Vec<Vector>>,
    ) -> Result<Self> {
        let cartan = cartan_type.cartan_matrix();
        let r = simple_roots.len();
        for i in 0..r {
            for j in 0..r {
                let v = simple_roots[i].dot(&simple_coroots[j]);
                if v != cartan[i][j] {
                    return Err(Error::Config(format!(
                        "{kind}: <alpha_{}, alpha_{}^vee> = {v}, Cartan type {cartan_type} wants {}",
                        i + 1,
                        j + 1,
                        cartan[i][j]
                    )));
                }
            }
        }
        if let Some(t) = &theta {
            assert!(simple_coroots.iter().all(|c| t.dot(c) == 1), "theta must pair to 1");
        }
        if let Some(ls) = &fundamental_coweights {
            for (i, l) in ls.iter().enumerate() {
                for (j, a) in simple_roots.iter().enumerate() {
                    assert_eq!(a.dot(l), i64::from(i == j), "fundamental coweight property");
                }
            }
        }

        // Breadth-first closure of the simple roots under simple reflections.
        let mut positive: Vec<Root> = (0..r)
            .map(|i| Root {
                coords: simple_roots[i].clone(),
                simple_coords: (0..r).map(|j| i64::from(i == j)).collect(),
                coroot: simple_coroots[i].clone(),
            })
            .collect();
        let mut seen: HashMap<Vector, usize> =
            positive.iter().enumerate().map(|(i, rt)| (rt.coords.clone(), i)).collect();
        let mut queue: VecDeque<usize> = (0..r).collect();
        while let Some(idx) = queue.pop_front() {
            for i in 0..r {
                let root = &positive[idx];
                if root.coords == simple_roots[i] {
                    continue;
                }
                let c = root.coords.dot(&simple_coroots[i]);
                if c == 0 {
                    continue;
                }
                let coords = &root.coords - &simple_roots[i].scaled(c);
                if seen.contains_key(&coords) {
                    continue;
                }
                let d = simple_roots[i].dot(&root.coroot);
                let coroot = &root.coroot - &simple_coroots[i].scaled(d);
                let mut simple_coords = root.simple_coords.clone();
                simple_coords[i] -= c;
                debug_assert!(simple_coords.iter().all(|&x| x >= 0));
                seen.insert(coords.clone(), positive.len());
                queue.push_back(positive.len());
                positive.push(Root { coords, simple_coords, coroot });
            }
        }
        positive.sort_by(|a, b| {
            a.height()
                .cmp(&b.height())
                .then_with(|| b.simple_coords.cmp(&a.simple_coords))
        });

        let mut lookup = HashMap::new();
        for (index, root) in positive.iter().enumerate() {
            lookup.insert(root.coords.clone(), SignedRoot { index, positive: true });
            lookup.insert(-&root.coords, SignedRoot { index, positive: false });
        }

        Ok(RootDatum {
            kind,
            cartan_type,
            rank,
            simple_roots,
            simple_coroots,
            positive,
            lookup,
            fundamental_coweights,
            theta,
        })
    }

    pub fn kind(&self) -> &Kind {
        &self.kind
    }

    pub fn cartan_type(&self) -> &CartanType {
        &self.cartan_type
    }

    /// Rank of the lattices X and Y.
    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Number of simple roots.
    pub fn semisimple_rank(&self) -> usize {
        self.simple_roots.len()
    }

    pub fn simple_root(&self, i: usize) -> &Vector {
        &self.simple_roots[i]
    }

    pub fn simple_coroot(&self, i: usize) -> &Vector {
        &self.simple_coroots[i]
    }

    pub fn simple_roots(&self) -> &[Vector] {
        &self.simple_roots
    }

    pub fn simple_coroots(&self) -> &[Vector] {
        &self.simple_coroots
    }

    /// Positive roots sorted by height; the simple roots come first, in order.
    pub fn positive_roots(&self) -> &[Root] {
        &self.positive
    }

    pub fn root(&self, i: usize) -> &Root {
        &self.positive[i]
    }

    pub fn num_positive_roots(&self) -> usize {
        self.positive.len()
    }

    /// `(<alpha_i, alpha_j^vee>)_{i,j}` recomputed from the lattice vectors.
    pub fn cartan_matrix(&self) -> Vec<Vec<i64>> {
        self.simple_roots
            .iter()
            .map(|a| self.simple_coroots.iter().map(|c| a.dot(c)).collect())
            .collect()
    }

    pub fn weyl_order(&self) -> u128 {
        self.cartan_type.weyl_order()
    }

    /// The canonical pairing between X and Y.
    pub fn pairing(&self, mu: &Vector, lambda: &Vector) -> Result<i64> {
        if mu.dim() != self.rank || lambda.dim() != self.rank {
            return Err(Error::Usage(format!(
                "pairing expects vectors of dimension {}, got {} and {}",
                self.rank,
                mu.dim(),
                lambda.dim()
            )));
        }
        Ok(mu.dot(lambda))
    }

    /// Looks up a character-lattice vector among the roots.
    pub fn classify(&self, v: &Vector) -> Option<SignedRoot> {
        self.lookup.get(v).copied()
    }

    pub fn is_simple_index(&self, i: usize) -> bool {
        i < self.simple_roots.len()
    }

    pub fn root_by_simple_coords(&self, coords: &[i64]) -> Option<usize> {
        self.positive.iter().position(|r| r.simple_coords == coords)
    }

    /// Index of `alpha_i + alpha_j` when it is a positive root.
    pub fn sum_root(&self, i: usize, j: usize) -> Option<usize> {
        let s = &self.positive[i].coords + &self.positive[j].coords;
        self.classify(&s).filter(|r| r.positive).map(|r| r.index)
    }

    /// Smallest superset of `seed` closed under sums that are positive roots.
    pub fn positive_roots_closure(&self, seed: &BTreeSet<usize>) -> Result<BTreeSet<usize>> {
        if let Some(bad) = seed.iter().find(|&&i| i >= self.positive.len()) {
            return Err(Error::Usage(format!("root index {bad} is not a positive root")));
        }
        let mut set = seed.clone();
        loop {
            let mut added = Vec::new();
            for &a in &set {
                for &b in &set {
                    if let Some(c) = self.sum_root(a, b) {
                        if !set.contains(&c) {
                            added.push(c);
                        }
                    }
                }
            }
            if added.is_empty() {
                return Ok(set);
            }
            set.extend(added);
        }
    }

    pub fn has_connected_center(&self) -> bool {
        self.fundamental_coweights.is_some()
    }

    pub fn has_simply_connected_derived_group(&self) -> bool {
        self.theta.is_some()
    }

    /// Cocharacters `lambda_alpha` with `<beta, lambda_alpha> = delta`. They exist
    /// exactly when the center is connected.
    pub fn fundamental_coweights(&self) -> Result<&[Vector]> {
        self.fundamental_coweights.as_deref().ok_or_else(|| {
            Error::Capability(format!(
                "{}: center is not connected, fundamental coweights are not cocharacters",
                self.kind
            ))
        })
    }

    /// A character with `<theta, alpha^vee> = 1` for every simple root.
    pub fn theta(&self) -> Result<&Vector> {
        self.theta.as_ref().ok_or_else(|| {
            Error::Capability(format!(
                "{}: derived group is not simply connected, no theta in X",
                self.kind
            ))
        })
    }

    pub fn require_connected_center(&self) -> Result<()> {
        self.fundamental_coweights().map(|_| ())
    }

    pub fn describe(&self) -> DatumDescription {
        DatumDescription {
            kind: self.kind.to_string(),
            cartan_type: self.cartan_type.to_string(),
            rank: self.rank,
            simple_roots: self.simple_roots.clone(),
            simple_coroots: self.simple_coroots.clone(),
            cartan_matrix: self.cartan_matrix(),
            positive_roots: self.positive.clone(),
            theta: self.theta.clone(),
            fundamental_coweights: self.fundamental_coweights.clone(),
            connected_center: self.has_connected_center(),
            simply_connected_derived_group: self.has_simply_connected_derived_group(),
            weyl_order: self.weyl_order() as u64,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct DatumDescription {
    pub kind: String,
    pub cartan_type: String,
    pub rank: usize,
    pub simple_roots: Vec<Vector>,
    pub simple_coroots: Vec<Vector>,
    pub cartan_matrix: Vec<Vec<i64>>,
    pub positive_roots: Vec<Root>,
    pub theta: Option<Vector>,
    pub fundamental_coweights: Option<Vec<Vector>>,
    pub connected_center: bool,
    pub simply_connected_derived_group: bool,
    pub weyl_order: u64,
}

#[cfg(test)]
mod tests {
    use super::*;

    fn datum(s: &str) -> RootDatum {
        RootDatum::build(s.parse().unwrap()).unwrap()
    }

    #[test]
    fn gl3_roots() {
        let d = datum("gl3");
        assert_eq!(d.rank(), 3);
        assert_eq!(d.num_positive_roots(), 3);
        assert_eq!(d.simple_root(0), &Vector(vec![1, -1, 0]));
        assert_eq!(d.simple_root(1), &Vector(vec![0, 1, -1]));
        assert_eq!(d.root(2).coords, Vector(vec![1, 0, -1]));
        for i in 0..2 {
            assert_eq!(d.pairing(d.theta().unwrap(), d.simple_coroot(i)).unwrap(), 1);
        }
    }

    #[test]
    fn gl2_rank_one() {
        let d = datum("gl2");
        assert_eq!(d.num_positive_roots(), 1);
        let a = d.root(0);
        assert_eq!(a.coroot, Vector(vec![1, -1]));
        assert_eq!(d.pairing(&a.coords, &a.coroot).unwrap(), 2);
    }

    #[test]
    fn g2_pairing_and_count() {
        let d = datum("g2");
        assert_eq!(d.rank(), 2);
        assert_eq!(d.num_positive_roots(), 6);
        // alpha short, beta long
        assert_eq!(d.pairing(d.simple_root(1), d.simple_coroot(0)).unwrap(), -3);
        assert_eq!(d.pairing(d.simple_root(0), d.simple_coroot(1)).unwrap(), -1);
        assert!(d.has_connected_center());
    }

    #[test]
    fn every_root_pairs_to_two() {
        for s in ["gl4", "gsp4", "g2", "sc-b3", "sc-c3", "sc-d4", "sc-f4", "ad-a1xa1", "ad-a2"] {
            let d = datum(s);
            assert_eq!(d.num_positive_roots(), d.cartan_type().positive_root_count(), "{s}");
            for r in d.positive_roots() {
                assert_eq!(r.coords.dot(&r.coroot), 2, "{s}");
            }
        }
    }

    #[test]
    fn gsp4_is_type_c2() {
        let d = datum("gsp4");
        assert_eq!(d.cartan_matrix(), vec![vec![2, -1], vec![-2, 2]]);
        assert!(d.has_connected_center() && d.has_simply_connected_derived_group());
    }

    #[test]
    fn sl3_lacks_coweights() {
        let d = datum("sc-a2");
        assert!(matches!(d.fundamental_coweights(), Err(Error::Capability(_))));
        assert!(d.theta().is_ok());
        let pgl2 = datum("ad-a1");
        assert!(pgl2.theta().is_err());
        assert!(pgl2.fundamental_coweights().is_ok());
    }

    #[test]
    fn closure_examples() {
        let d = datum("sc-a2");
        let seed: BTreeSet<usize> = [0, 1].into();
        assert_eq!(d.positive_roots_closure(&seed).unwrap(), [0, 1, 2].into());
        assert!(d.positive_roots_closure(&BTreeSet::new()).unwrap().is_empty());
        let top: BTreeSet<usize> = [2].into();
        assert_eq!(d.positive_roots_closure(&top).unwrap(), top);
        assert!(d.positive_roots_closure(&[7].into()).is_err());
    }

    #[test]
    fn pairing_dimension_mismatch() {
        let d = datum("gl3");
        assert!(matches!(d.pairing(&Vector(vec![1, 0]), &Vector(vec![1, 0, 0])), Err(Error::Usage(_))));
    }

    #[test]
    fn kind_parsing() {
        assert_eq!("GL_3".parse::<Kind>().unwrap(), Kind::Gl(3));
        assert!("gl1".parse::<Kind>().map(RootDatum::build).unwrap().is_err());
        assert!("sc-d3".parse::<Kind>().is_err());
        assert!("foo".parse::<Kind>().is_err());
        assert_eq!(datum("ad-a1xa1").cartan_type().to_string(), "A1xA1");
    }
}
