//! Integer vectors and square integer matrices over a lattice with a fixed basis.
//!
//! Character and cocharacter lattices are always given dual bases, so the
//! canonical pairing is the coordinate dot product.

use std::fmt;
use std::ops::{Add, AddAssign, Index, Neg, Sub, SubAssign};

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

/// A vector of a free Z-module in coordinates.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Vector(pub Vec<i64>);

impl Vector {
    pub fn zero(dim: usize) -> Self {
        Vector(vec![0; dim])
    }

    pub fn unit(dim: usize, i: usize) -> Self {
        let mut v = vec![0; dim];
        v[i] = 1;
        Vector(v)
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    pub fn dot(&self, other: &Vector) -> i64 {
        debug_assert_eq!(self.dim(), other.dim());
        self.0.iter().zip(&other.0).map(|(a, b)| a * b).sum()
    }

    pub fn scaled(&self, k: i64) -> Vector {
        Vector(self.0.iter().map(|x| x * k).collect())
    }

    pub fn as_slice(&self) -> &[i64] {
        &self.0
    }
}

impl From<Vec<i64>> for Vector {
    fn from(v: Vec<i64>) -> Self {
        Vector(v)
    }
}

impl Index<usize> for Vector {
    type Output = i64;
    fn index(&self, i: usize) -> &i64 {
        &self.0[i]
    }
}

impl fmt::Display for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

impl Add for &Vector {
    type Output = Vector;
    fn add(self, rhs: &Vector) -> Vector {
        debug_assert_eq!(self.dim(), rhs.dim());
        Vector(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &Vector {
    type Output = Vector;
    fn sub(self, rhs: &Vector) -> Vector {
        debug_assert_eq!(self.dim(), rhs.dim());
        Vector(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &Vector {
    type Output = Vector;
    fn neg(self) -> Vector {
        Vector(self.0.iter().map(|a| -a).collect())
    }
}

impl AddAssign<&Vector> for Vector {
    fn add_assign(&mut self, rhs: &Vector) {
        for (a, b) in self.0.iter_mut().zip(&rhs.0) {
            *a += b;
        }
    }
}

impl SubAssign<&Vector> for Vector {
    fn sub_assign(&mut self, rhs: &Vector) {
        for (a, b) in self.0.iter_mut().zip(&rhs.0) {
            *a -= b;
        }
    }
}

/// Square integer matrix, row-major. Acts on column vectors.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    n: usize,
    data: Vec<i64>,
}

impl Matrix {
    pub fn identity(n: usize) -> Self {
        let mut data = vec![0; n * n];
        for i in 0..n {
            data[i * n + i] = 1;
        }
        Matrix { n, data }
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * n);
        for r in rows {
            assert_eq!(r.len(), n, "matrix must be square");
            data.extend_from_slice(r);
        }
        Matrix { n, data }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.data[i * self.n + j]
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        self.data.chunks(self.n.max(1)).map(|c| c.to_vec()).collect()
    }

    pub fn transpose(&self) -> Matrix {
        let n = self.n;
        let mut data = vec![0; n * n];
        for i in 0..n {
            for j in 0..n {
                data[j * n + i] = self.data[i * n + j];
            }
        }
        Matrix { n, data }
    }

    pub fn mul(&self, rhs: &Matrix) -> Matrix {
        let n = self.n;
        assert_eq!(n, rhs.n);
        let mut data = vec![0; n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.data[i * n + k];
                if a == 0 {
                    continue;
                }
                for j in 0..n {
                    data[i * n + j] += a * rhs.data[k * n + j];
                }
            }
        }
        Matrix { n, data }
    }

    pub fn apply(&self, v: &Vector) -> Vector {
        let n = self.n;
        assert_eq!(v.dim(), n);
        Vector(
            (0..n)
                .map(|i| (0..n).map(|j| self.data[i * n + j] * v.0[j]).sum())
                .collect(),
        )
    }

    pub fn is_identity(&self) -> bool {
        *self == Matrix::identity(self.n)
    }
}

/// Solves `a x = b` over Q for a square invertible `a`. Returns `None` when `a` is singular.
pub fn solve_rational(a: &[Vec<i64>], b: &[i64]) -> Option<Vec<Ratio<i128>>> {
    let n = a.len();
    let mut m: Vec<Vec<Ratio<i128>>> = a
        .iter()
        .zip(b)
        .map(|(row, &rhs)| {
            let mut r: Vec<Ratio<i128>> = row.iter().map(|&x| Ratio::from_integer(x as i128)).collect();
            r.push(Ratio::from_integer(rhs as i128));
            r
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| m[r][col] != Ratio::from_integer(0))?;
        m.swap(col, pivot);
        let p = m[col][col];
        for j in col..=n {
            m[col][j] /= p;
        }
        for r in 0..n {
            if r != col && m[r][col] != Ratio::from_integer(0) {
                let f = m[r][col];
                for j in col..=n {
                    let delta = f * m[col][j];
                    m[r][j] -= delta;
                }
            }
        }
    }
    Some(m.into_iter().map(|row| row[n]).collect())
}

/// Integral solution of `a x = b` for square invertible `a`, if the rational solution is integral.
pub fn solve_integral(a: &[Vec<i64>], b: &[i64]) -> Option<Vec<i64>> {
    solve_rational(a, b)?
        .into_iter()
        .map(|x| x.is_integer().then(|| x.to_integer() as i64))
        .collect()
}
