//! Arithmetic over the prime field F_p: the Legendre symbol and binary
//! quadratic forms `a·λ² + b·λμ + c·μ²` decided by exhaustion.

use std::fmt;

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

fn check_odd_prime(p: i64) -> Result<u64> {
    if p < 2 || !is_prime(p as u64) {
        return Err(Error::NotPrime(p));
    }
    if p == 2 {
        return Err(Error::EvenModulus(p));
    }
    Ok(p as u64)
}

/// Least non-negative residue of `x` modulo `p`.
pub fn reduce(x: i64, p: u64) -> u64 {
    x.rem_euclid(p as i64) as u64
}

pub fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

/// Inverse of a nonzero residue, by Fermat.
pub fn inv_mod(x: u64, p: u64) -> u64 {
    debug_assert!(!x.is_multiple_of(p));
    pow_mod(x, p - 2, p)
}

/// Legendre symbol `(d/p)` via Euler's criterion.
pub fn legendre(d: i64, p: i64) -> Result<i8> {
    let p = check_odd_prime(p)?;
    let d = reduce(d, p);
    if d == 0 {
        return Ok(0);
    }
    Ok(if pow_mod(d, (p - 1) / 2, p) == 1 {
        1
    } else {
        -1
    })
}

/// Least quadratic non-residue modulo an odd prime.
pub fn least_non_residue(p: u32) -> Result<u32> {
    for d in 2..p {
        if legendre(d as i64, p as i64)? == -1 {
            return Ok(d);
        }
    }
    unreachable!("every odd prime has a non-residue")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct BinaryQuadraticForm {
    a: u64,
    b: u64,
    c: u64,
    p: u64,
}

impl BinaryQuadraticForm {
    /// Coefficients may be any integers; they are reduced into `[0, p)`.
    pub fn new(a: i64, b: i64, c: i64, p: i64) -> Result<Self> {
        let p = check_odd_prime(p)?;
        Ok(Self {
            a: reduce(a, p),
            b: reduce(b, p),
            c: reduce(c, p),
            p,
        })
    }

    pub fn coefficients(&self) -> (u64, u64, u64) {
        (self.a, self.b, self.c)
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn eval(&self, lambda: u64, mu: u64) -> u64 {
        let p = self.p;
        let (l, m) = (lambda % p, mu % p);
        (self.a * l % p * l + self.b * l % p * m + self.c * m % p * m) % p
    }

    /// `b² − 4ac` reduced mod p.
    pub fn discriminant(&self) -> u64 {
        let p = self.p;
        (self.b * self.b % p + p * 4 - 4 * self.a % p * self.c % p) % p
    }

    /// Lexicographically least `(λ, μ) ≠ (0, 0)` with `f(λ, μ) ≡ 0`.
    pub fn nontrivial_zero(&self) -> Option<(u64, u64)> {
        (0..self.p)
            .flat_map(|l| (0..self.p).map(move |m| (l, m)))
            .skip(1)
            .find(|&(l, m)| self.eval(l, m) == 0)
    }

    /// Whether `f(λ, μ) ≡ r` for some pair, the zero pair included.
    pub fn represents(&self, r: i64) -> bool {
        self.representation(r).is_some()
    }

    /// Lexicographically least pair with `f(λ, μ) ≡ r`.
    pub fn representation(&self, r: i64) -> Option<(u64, u64)> {
        let r = reduce(r, self.p);
        (0..self.p)
            .flat_map(|l| (0..self.p).map(move |m| (l, m)))
            .find(|&(l, m)| self.eval(l, m) == r)
    }
}

impl fmt::Display for BinaryQuadraticForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}·λ² + {}·λμ + {}·μ² (mod {})",
            self.a, self.b, self.c, self.p
        )
    }
}
