//! Group arithmetic on exponent vectors by collection from the left.
//!
//! The collected prefix is kept as an exponent vector and the uncollected
//! suffix as a stack of syllables `(k, e)`. Multiplying the prefix
//! `A·B` (with `A` ending at `g_k` and `B` over larger indices) by `g_k`
//! rewrites it as `A·g_k·B^{g_k}`, where `g_j^{g_k} = g_j [g_j, g_k]`.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::presentation::PcPresentation;

/// Exponent vector of the normal form `g_1^e1 ⋯ g_n^en`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Element(Vec<u32>);

impl Element {
    pub fn identity(n: usize) -> Self {
        Element(vec![0; n])
    }

    /// The `k`-th generator (0-based).
    pub fn generator(n: usize, k: usize) -> Self {
        let mut v = vec![0; n];
        v[k] = 1;
        Element(v)
    }

    pub fn from_exponents(exps: Vec<u32>) -> Self {
        Element(exps)
    }

    pub fn with_exponent(mut self, k: usize, e: u32) -> Self {
        self.0[k] = e;
        self
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn into_exponents(self) -> Vec<u32> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_identity() {
            return f.write_str("1");
        }
        let parts: Vec<String> = self
            .0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e != 0)
            .map(|(k, &e)| {
                if e == 1 {
                    format!("g{}", k + 1)
                } else {
                    format!("g{}^{}", k + 1, e)
                }
            })
            .collect();
        f.write_str(&parts.join("*"))
    }
}

type Syllable = (usize, u32);

impl PcPresentation {
    fn check_dim(&self, u: &Element) -> Result<()> {
        if u.len() != self.gens() || u.0.iter().any(|&e| e >= self.prime()) {
            return Err(Error::DimensionMismatch {
                expected: self.gens(),
                got: u.len(),
            });
        }
        Ok(())
    }

    /// Collects the syllables of `word` (processed left to right) onto `exps`.
    pub(crate) fn collect(&self, exps: &mut [u32], word: &[Syllable]) {
        let mut stack: Vec<Syllable> = word.iter().rev().copied().collect();
        self.collect_stack(exps, &mut stack);
    }

    fn push_word_rev(stack: &mut Vec<Syllable>, w: &[Syllable]) {
        stack.extend(w.iter().rev().copied());
    }

    fn collect_stack(&self, exps: &mut [u32], stack: &mut Vec<Syllable>) {
        let p = self.prime();
        let n = self.gens();
        while let Some((k, e)) = stack.pop() {
            if e == 0 {
                continue;
            }
            if exps[k + 1..].iter().all(|&x| x == 0) {
                let s = exps[k] + e;
                exps[k] = s % p;
                if s >= p {
                    Self::push_word_rev(stack, self.power_tail(k).syllables());
                }
                continue;
            }
            // g_k^e = g_k · g_k^(e-1): move a single g_k past the tail
            if e > 1 {
                stack.push((k, e - 1));
            }
            for j in (k + 1..n).rev() {
                let b = exps[j];
                if b == 0 {
                    continue;
                }
                exps[j] = 0;
                let c = self.comm_tail(j, k).syllables();
                if c.is_empty() {
                    stack.push((j, b));
                } else {
                    for _ in 0..b {
                        Self::push_word_rev(stack, c);
                        stack.push((j, 1));
                    }
                }
            }
            exps[k] += 1;
            if exps[k] == p {
                exps[k] = 0;
                Self::push_word_rev(stack, self.power_tail(k).syllables());
            }
        }
    }

    pub(crate) fn mul_unchecked(&self, u: &Element, v: &Element) -> Element {
        let mut exps = u.0.clone();
        let word: Vec<Syllable> =
            v.0.iter()
                .enumerate()
                .filter(|(_, &e)| e != 0)
                .map(|(k, &e)| (k, e))
                .collect();
        self.collect(&mut exps, &word);
        Element(exps)
    }

    /// Solves `u·x = 1` one generator at a time; the exponents chosen form
    /// the normal form of `x` directly.
    pub(crate) fn inverse_unchecked(&self, u: &Element) -> Element {
        let p = self.prime();
        let mut r = u.0.clone();
        let mut x = vec![0; self.gens()];
        for k in 0..self.gens() {
            let e = (p - r[k]) % p;
            if e != 0 {
                self.collect(&mut r, &[(k, e)]);
                x[k] = e;
            }
        }
        debug_assert!(r.iter().all(|&e| e == 0));
        Element(x)
    }

    pub fn identity(&self) -> Element {
        Element::identity(self.gens())
    }

    pub fn generator(&self, k: usize) -> Element {
        Element::generator(self.gens(), k)
    }

    /// Validates and wraps an exponent vector.
    pub fn element(&self, exps: Vec<u32>) -> Result<Element> {
        let e = Element(exps);
        self.check_dim(&e)?;
        Ok(e)
    }

    pub fn multiply(&self, u: &Element, v: &Element) -> Result<Element> {
        self.check_dim(u)?;
        self.check_dim(v)?;
        Ok(self.mul_unchecked(u, v))
    }

    pub fn inverse(&self, u: &Element) -> Result<Element> {
        self.check_dim(u)?;
        Ok(self.inverse_unchecked(u))
    }

    /// `u^k` by square-and-multiply; negative `k` inverts first.
    pub fn power(&self, u: &Element, k: i64) -> Result<Element> {
        self.check_dim(u)?;
        let mut base = if k < 0 {
            self.inverse_unchecked(u)
        } else {
            u.clone()
        };
        let mut k = k.unsigned_abs();
        let mut acc = self.identity();
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul_unchecked(&acc, &base);
            }
            base = self.mul_unchecked(&base, &base);
            k >>= 1;
        }
        Ok(acc)
    }

    /// `v⁻¹·u·v`.
    pub fn conjugate(&self, u: &Element, v: &Element) -> Result<Element> {
        self.check_dim(u)?;
        self.check_dim(v)?;
        let vi = self.inverse_unchecked(v);
        Ok(self.mul_unchecked(&self.mul_unchecked(&vi, u), v))
    }

    /// `[u, v] = u⁻¹·v⁻¹·u·v`.
    pub fn commutator(&self, u: &Element, v: &Element) -> Result<Element> {
        self.check_dim(u)?;
        self.check_dim(v)?;
        Ok(self.comm_unchecked(u, v))
    }

    pub(crate) fn comm_unchecked(&self, u: &Element, v: &Element) -> Element {
        let vu = self.mul_unchecked(v, u);
        let uv = self.mul_unchecked(u, v);
        self.mul_unchecked(&self.inverse_unchecked(&vu), &uv)
    }

    /// Left-normed iterated commutators of a generating pair `(α₁, α₂)`.
    pub fn named_commutators(&self, a1: &Element, a2: &Element) -> Result<NamedCommutators> {
        self.check_dim(a1)?;
        self.check_dim(a2)?;
        let a = [a1, a2];
        let beta = self.comm_unchecked(a1, a2);
        let betas = a.map(|x| self.comm_unchecked(&beta, x));
        let etas = [0, 1].map(|i| a.map(|x| self.comm_unchecked(&betas[i], x)));
        let xis = [0, 1].map(|i| [0, 1].map(|j| a.map(|x| self.comm_unchecked(&etas[i][j], x))));
        Ok(NamedCommutators {
            beta,
            betas,
            etas,
            xis,
        })
    }
}

/// `β = [α₁, α₂]`, `βᵢ = [β, αᵢ]`, `ηᵢⱼ = [βᵢ, αⱼ]`, `ξᵢⱼₖ = [ηᵢⱼ, αₖ]`.
/// Accessors take 1-based indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NamedCommutators {
    beta: Element,
    betas: [Element; 2],
    etas: [[Element; 2]; 2],
    xis: [[[Element; 2]; 2]; 2],
}

impl NamedCommutators {
    pub fn beta(&self) -> &Element {
        &self.beta
    }

    pub fn beta_i(&self, i: usize) -> &Element {
        &self.betas[i - 1]
    }

    pub fn eta(&self, i: usize, j: usize) -> &Element {
        &self.etas[i - 1][j - 1]
    }

    pub fn xi(&self, i: usize, j: usize, k: usize) -> &Element {
        &self.xis[i - 1][j - 1][k - 1]
    }

    /// All entries under their conventional names, in a fixed order.
    pub fn entries(&self) -> Vec<(String, &Element)> {
        let mut out = vec![("beta".to_string(), &self.beta)];
        for i in 1..=2 {
            out.push((format!("beta_{i}"), self.beta_i(i)));
        }
        for i in 1..=2 {
            for j in 1..=2 {
                out.push((format!("eta_{i}{j}"), self.eta(i, j)));
            }
        }
        for i in 1..=2 {
            for j in 1..=2 {
                for k in 1..=2 {
                    out.push((format!("xi_{i}{j}{k}"), self.xi(i, j, k)));
                }
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn heisenberg() -> PcPresentation {
        PcPresentation::parse("prime 5\ngens 3\ncomm 2 1 : 3^1\n").unwrap()
    }

    fn el(v: &[u32]) -> Element {
        Element::from_exponents(v.to_vec())
    }

    #[test]
    fn heisenberg_products() {
        let g = heisenberg();
        let ab = g.multiply(&g.generator(0), &g.generator(1)).unwrap();
        let ba = g.multiply(&g.generator(1), &g.generator(0)).unwrap();
        assert_eq!(ab, el(&[1, 1, 0]));
        // g2 g1 = g1 g2 [g2, g1]
        assert_eq!(ba, el(&[1, 1, 1]));
        assert_eq!(
            g.commutator(&g.generator(0), &g.generator(1)).unwrap(),
            el(&[0, 0, 4])
        );
        assert_eq!(
            g.commutator(&g.generator(1), &g.generator(0)).unwrap(),
            el(&[0, 0, 1])
        );
    }

    #[test]
    fn inverse_power_conjugate() {
        let g = heisenberg();
        let u = el(&[2, 3, 1]);
        let ui = g.inverse(&u).unwrap();
        assert!(g.multiply(&u, &ui).unwrap().is_identity());
        assert!(g.multiply(&ui, &u).unwrap().is_identity());
        assert!(g.power(&u, 5).unwrap().is_identity());
        assert_eq!(g.power(&u, -1).unwrap(), ui);
        assert_eq!(g.power(&u, 0).unwrap(), g.identity());
        assert_eq!(g.power(&u, 7).unwrap(), g.power(&u, 2).unwrap());
        let v = el(&[0, 1, 0]);
        // g2^(g1) = g2 [g2, g1]
        assert_eq!(g.conjugate(&v, &g.generator(0)).unwrap(), el(&[0, 1, 1]));
        assert!(g.commutator(&u, &u).unwrap().is_identity());
    }

    #[test]
    fn dimension_mismatch() {
        let g = heisenberg();
        assert_eq!(
            g.multiply(&el(&[1, 0]), &g.identity()),
            Err(Error::DimensionMismatch {
                expected: 3,
                got: 2
            })
        );
        assert!(g.element(vec![5, 0, 0]).is_err());
        assert!(g.inverse(&el(&[0, 0, 0, 0])).is_err());
    }

    #[test]
    fn abelian_commutators_vanish() {
        let g = PcPresentation::new(5, 2).unwrap();
        for a in 0..25u32 {
            for b in 0..25u32 {
                let u = el(&[a / 5, a % 5]);
                let v = el(&[b / 5, b % 5]);
                assert!(g.commutator(&u, &v).unwrap().is_identity());
            }
        }
    }

    #[test]
    fn heisenberg_named_commutators() {
        let g = heisenberg();
        let nc = g
            .named_commutators(&g.generator(0), &g.generator(1))
            .unwrap();
        assert_eq!(nc.beta(), &el(&[0, 0, 4]));
        assert!(nc.beta_i(1).is_identity());
        assert!(nc.beta_i(2).is_identity());
        assert_eq!(nc.entries().len(), 15);
        let ab = PcPresentation::new(5, 2).unwrap();
        let nc = ab
            .named_commutators(&ab.generator(0), &ab.generator(1))
            .unwrap();
        assert!(nc.entries().iter().all(|(_, e)| e.is_identity()));
    }

    #[test]
    fn power_relation_overflow() {
        // cyclic of order 25
        let g = PcPresentation::parse("prime 5\ngens 2\npow 1 : 2^1\n").unwrap();
        let x = g.generator(0);
        assert_eq!(g.power(&x, 5).unwrap(), el(&[0, 1]));
        assert_eq!(g.power(&x, 7).unwrap(), el(&[2, 1]));
        assert!(g.power(&x, 25).unwrap().is_identity());
        assert_eq!(g.inverse(&x).unwrap(), el(&[4, 4]));
    }

    #[test]
    fn display() {
        assert_eq!(el(&[0, 0, 0]).to_string(), "1");
        assert_eq!(el(&[1, 0, 3]).to_string(), "g1*g3^3");
    }
}
