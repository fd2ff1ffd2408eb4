//! The residue field F_q and its cyclic unit group.
//!
//! Smooth characters only ever multiply, invert and compare values, so an
//! element of F_q^× is stored as its discrete logarithm with respect to a
//! fixed generator `g`. When `q = p` the generator is the smallest primitive
//! root modulo `p`, and integers can be converted in both directions. When
//! `q` is a proper power of `p` the generator is abstract and only the
//! `g^k` form is available.

use serde::Serialize;

use crate::error::{Error, Result};

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % m;
        }
        base = base * base % m;
        exp >>= 1;
    }
    acc
}

/// Smallest primitive root modulo the prime `p`.
pub fn primitive_root(p: u64) -> u64 {
    if p == 2 {
        return 1;
    }
    let factors = prime_factors(p - 1);
    (2..p)
        .find(|&g| factors.iter().all(|&f| pow_mod(g, (p - 1) / f, p) != 1))
        .expect("every prime has a primitive root")
}

/// Residue field data: the prime `p`, the field size `q = p^k` and the generator.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct ResidueField {
    p: u64,
    q: u64,
    generator: Option<u64>,
}

impl ResidueField {
    /// Field of size `q`, which must be a power of the prime `p`.
    pub fn new(p: u64, q: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::Config(format!("p = {p} is not prime")));
        }
        let mut r = q;
        while r > 1 && r.is_multiple_of(p) {
            r /= p;
        }
        if r != 1 || q < p {
            return Err(Error::Config(format!("q = {q} is not a power of p = {p}")));
        }
        if q > 1 << 24 {
            return Err(Error::Config(format!("q = {q} is too large")));
        }
        let generator = (q == p).then(|| primitive_root(p));
        Ok(ResidueField { p, q, generator })
    }

    pub fn prime(p: u64) -> Result<Self> {
        Self::new(p, p)
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    /// Order of F_q^×.
    pub fn unit_order(&self) -> u64 {
        self.q - 1
    }

    /// Order of F_p^×, the target of the mod-p cyclotomic character.
    pub fn omega_order(&self) -> u64 {
        self.p - 1
    }

    /// The generator as an integer residue, when `q = p`.
    pub fn generator(&self) -> Option<u64> {
        self.generator
    }

    /// Discrete logarithm of -1.
    pub fn minus_one_log(&self) -> u64 {
        if self.q.is_multiple_of(2) {
            0
        } else {
            (self.q - 1) / 2
        }
    }

    /// Discrete logarithm of a nonzero integer residue (prime fields only).
    pub fn log_of(&self, x: i64) -> Result<u64> {
        let g = self.generator.ok_or_else(|| {
            Error::Parse(format!(
                "integer field elements need q = p; use the g^k form for q = {}",
                self.q
            ))
        })?;
        let x = x.rem_euclid(self.p as i64) as u64;
        if x == 0 {
            return Err(Error::Parse("0 is not a unit".into()));
        }
        let mut acc = 1;
        for k in 0..self.p - 1 {
            if acc == x {
                return Ok(k);
            }
            acc = acc * g % self.p;
        }
        unreachable!("generator must reach every unit")
    }

    /// Integer residue `g^k` (prime fields only).
    pub fn element(&self, log: u64) -> Option<u64> {
        self.generator.map(|g| pow_mod(g, log, self.p))
    }
}
