//! Power-commutator presentations: data model, line-oriented text format and
//! the overlap consistency check.
//!
//! Generators are 0-based internally and 1-based in the text format and in
//! every user-facing message. A relation `comm J I : w` means `[g_J, g_I] = w`
//! with the commutator `[x, y] = x⁻¹y⁻¹xy`.

use std::collections::HashSet;
use std::fmt;

use serde::Serialize;

use crate::collector::Element;
use crate::error::{Error, Result};
use crate::fp_arith::is_prime;

/// A normal-form word `g_k1^e1 ⋯ g_km^em` with strictly increasing indices
/// and exponents in `[1, p)`. The empty word is the identity.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Word(Vec<(usize, u32)>);

impl Word {
    pub fn identity() -> Self {
        Word(Vec::new())
    }

    /// Builds a word from `(index, exponent)` syllables. Zero exponents are
    /// dropped; indices must be strictly increasing.
    pub fn new(syllables: Vec<(usize, u32)>, p: u32) -> Self {
        let w: Vec<_> = syllables
            .into_iter()
            .map(|(k, e)| (k, e % p))
            .filter(|&(_, e)| e != 0)
            .collect();
        debug_assert!(w.windows(2).all(|s| s[0].0 < s[1].0));
        Word(w)
    }

    pub fn from_element(e: &Element) -> Self {
        Word(
            e.exponents()
                .iter()
                .enumerate()
                .filter(|(_, &x)| x != 0)
                .map(|(k, &x)| (k, x))
                .collect(),
        )
    }

    pub fn to_element(&self, n: usize) -> Element {
        let mut exps = vec![0; n];
        for &(k, e) in &self.0 {
            exps[k] = e;
        }
        Element::from_exponents(exps)
    }

    pub fn syllables(&self) -> &[(usize, u32)] {
        &self.0
    }

    pub fn is_identity(&self) -> bool {
        self.0.is_empty()
    }

    /// Smallest generator index used, if any.
    pub fn leading_index(&self) -> Option<usize> {
        self.0.first().map(|s| s.0)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|(k, e)| format!("{}^{}", k + 1, e))
            .collect();
        f.write_str(&parts.join(" "))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PcPresentation {
    prime: u32,
    gens: usize,
    power: Vec<Word>,
    // comm[j * gens + i] holds [g_j, g_i] for i < j.
    comm: Vec<Word>,
}

impl PcPresentation {
    /// The elementary abelian presentation on `gens` generators.
    pub fn new(prime: u32, gens: usize) -> Result<Self> {
        if !is_prime(prime as u64) {
            return Err(Error::NotPrime(prime as i64));
        }
        Ok(Self {
            prime,
            gens,
            power: vec![Word::identity(); gens],
            comm: vec![Word::identity(); gens * gens],
        })
    }

    pub fn prime(&self) -> u32 {
        self.prime
    }

    pub fn gens(&self) -> usize {
        self.gens
    }

    /// `log_p` of the group order.
    pub fn log_order(&self) -> u32 {
        self.gens as u32
    }

    pub fn order(&self) -> u64 {
        (self.prime as u64).pow(self.gens as u32)
    }

    pub fn power_tail(&self, i: usize) -> &Word {
        &self.power[i]
    }

    pub fn comm_tail(&self, j: usize, i: usize) -> &Word {
        debug_assert!(j > i);
        &self.comm[j * self.gens + i]
    }

    fn check_index(&self, k: usize) -> Result<()> {
        if k >= self.gens {
            return Err(Error::GeneratorOutOfRange {
                index: k + 1,
                gens: self.gens,
            });
        }
        Ok(())
    }

    fn check_tail(&self, head: usize, tail: &Word) -> Result<()> {
        for &(k, _) in tail.syllables() {
            self.check_index(k)?;
            if k <= head {
                return Err(Error::TailOrdering {
                    head: head + 1,
                    tail: k + 1,
                });
            }
        }
        Ok(())
    }

    /// Sets `g_i^p = tail`; the tail must use indices greater than `i`.
    pub fn set_power(&mut self, i: usize, tail: Word) -> Result<()> {
        self.check_index(i)?;
        self.check_tail(i, &tail)?;
        self.power[i] = tail;
        Ok(())
    }

    /// Sets `[g_j, g_i] = tail` for `j > i`; the tail must use indices
    /// greater than `j`.
    pub fn set_comm(&mut self, j: usize, i: usize, tail: Word) -> Result<()> {
        self.check_index(j)?;
        self.check_index(i)?;
        if j <= i {
            return Err(Error::TailOrdering {
                head: i + 1,
                tail: j + 1,
            });
        }
        self.check_tail(j, &tail)?;
        self.comm[j * self.gens + i] = tail;
        Ok(())
    }

    /// Canonical text: header, then non-trivial power relations by index,
    /// then non-trivial commutator relations sorted by `(J, I)`.
    pub fn serialize(&self) -> String {
        let mut out = format!("prime {}\ngens {}\n", self.prime, self.gens);
        for i in 0..self.gens {
            if !self.power[i].is_identity() {
                out.push_str(&format!("pow {} : {}\n", i + 1, self.power[i]));
            }
        }
        for j in 0..self.gens {
            for i in 0..j {
                let w = self.comm_tail(j, i);
                if !w.is_identity() {
                    out.push_str(&format!("comm {} {} : {}\n", j + 1, i + 1, w));
                }
            }
        }
        out
    }

    pub fn parse(text: &str) -> Result<Self> {
        Parser::default().run(text)
    }

    /// Runs every associativity overlap through the collector.
    pub fn consistency_check(&self) -> ConsistencyReport {
        let n = self.gens;
        let p = self.prime;
        let g = |k: usize| Element::generator(n, k);
        let gp = |k: usize, e: u32| Element::generator(n, k).with_exponent(k, e);
        let mut failures = Vec::new();
        let mut check = |kind, triple: [usize; 3], left: Element, right: Element| {
            if left != right {
                failures.push(Overlap {
                    kind,
                    triple: triple.map(|t| t + 1),
                    left: left.into_exponents(),
                    right: right.into_exponents(),
                });
            }
        };

        for k in 0..n {
            for j in 0..k {
                for i in 0..j {
                    // (g_k g_j) g_i = g_k (g_j g_i)
                    let left = self.mul_unchecked(&self.mul_unchecked(&g(k), &g(j)), &g(i));
                    let right = self.mul_unchecked(&g(k), &self.mul_unchecked(&g(j), &g(i)));
                    check(OverlapKind::Triple, [k, j, i], left, right);
                }
            }
        }
        for j in 0..n {
            for i in 0..j {
                // g_j^p g_i = g_j^(p-1) (g_j g_i)
                let left = self.mul_unchecked(&self.power[j].to_element(n), &g(i));
                let right = self.mul_unchecked(&gp(j, p - 1), &self.mul_unchecked(&g(j), &g(i)));
                check(OverlapKind::PowerLeft, [j, j, i], left, right);

                // g_j g_i^p = (g_j g_i^(p-1)) g_i
                let left = self.mul_unchecked(&g(j), &self.power[i].to_element(n));
                let right = self.mul_unchecked(&self.mul_unchecked(&g(j), &gp(i, p - 1)), &g(i));
                check(OverlapKind::PowerRight, [j, i, i], left, right);
            }
        }
        for i in 0..n {
            // g_i^p g_i = g_i g_i^p
            let left = self.mul_unchecked(&self.power[i].to_element(n), &g(i));
            let right = self.mul_unchecked(&g(i), &self.power[i].to_element(n));
            check(OverlapKind::PowerSelf, [i, i, i], left, right);
        }
        ConsistencyReport { failures }
    }

    /// Fails with [`Error::Inconsistent`] unless every overlap resolves.
    pub fn ensure_consistent(&self) -> Result<()> {
        let report = self.consistency_check();
        if report.is_consistent() {
            Ok(())
        } else {
            Err(Error::Inconsistent(report.failures))
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum OverlapKind {
    /// `g_k g_j g_i` with `k > j > i`.
    Triple,
    /// `g_j^p g_i`.
    PowerLeft,
    /// `g_j g_i^p`.
    PowerRight,
    /// `g_i^p g_i`.
    PowerSelf,
}

/// An overlap whose two collections disagree. Indices are 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Overlap {
    pub kind: OverlapKind,
    pub triple: [usize; 3],
    pub left: Vec<u32>,
    pub right: Vec<u32>,
}

impl fmt::Display for Overlap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [k, j, i] = self.triple;
        let word = match self.kind {
            OverlapKind::Triple => format!("g{k} g{j} g{i}"),
            OverlapKind::PowerLeft => format!("g{j}^p g{i}"),
            OverlapKind::PowerRight => format!("g{k} g{i}^p"),
            OverlapKind::PowerSelf => format!("g{i}^p g{i}"),
        };
        write!(f, "{word}: {:?} vs {:?}", self.left, self.right)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConsistencyReport {
    pub failures: Vec<Overlap>,
}

impl ConsistencyReport {
    pub fn is_consistent(&self) -> bool {
        self.failures.is_empty()
    }
}

#[derive(Default)]
struct Parser {
    prime: Option<u32>,
    pres: Option<PcPresentation>,
    seen: HashSet<(usize, usize)>,
}

fn syntax(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Syntax {
        line,
        column,
        message: message.into(),
    }
}

/// Whitespace-separated tokens with their 1-based columns. A `:` is always
/// a token of its own, so `comm 2 1: 3` reads like `comm 2 1 : 3`.
fn tokens(line: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (idx, ch) in line.char_indices() {
        if ch.is_whitespace() || ch == ':' {
            if let Some(s) = start.take() {
                out.push((s, &line[s..idx]));
            }
            if ch == ':' {
                out.push((idx, ":"));
            }
        } else if start.is_none() {
            start = Some(idx);
        }
    }
    if let Some(s) = start {
        out.push((s, &line[s..]));
    }
    out.into_iter()
        .map(|(s, t)| (line[..s].chars().count() + 1, t))
        .collect()
}

impl Parser {
    fn run(mut self, text: &str) -> Result<PcPresentation> {
        for (lineno, raw) in text.lines().enumerate() {
            let lineno = lineno + 1;
            let line = raw.split('#').next().unwrap_or("");
            let toks = tokens(line);
            let Some(&(col, keyword)) = toks.first() else {
                continue;
            };
            match keyword {
                "prime" => self.prime_line(lineno, &toks)?,
                "gens" => self.gens_line(lineno, &toks)?,
                "pow" => self.relation_line(lineno, &toks, 1)?,
                "comm" => self.relation_line(lineno, &toks, 2)?,
                other => return Err(syntax(lineno, col, format!("unknown keyword `{other}`"))),
            }
        }
        self.pres
            .ok_or_else(|| syntax(text.lines().count().max(1), 1, "missing `gens` line"))
    }

    fn number(lineno: usize, tok: (usize, &str)) -> Result<u64> {
        tok.1.parse::<u64>().map_err(|_| {
            syntax(
                lineno,
                tok.0,
                format!("expected a non-negative integer, found `{}`", tok.1),
            )
        })
    }

    fn single_arg(lineno: usize, toks: &[(usize, &str)]) -> Result<u64> {
        match toks {
            [_, arg] => Self::number(lineno, *arg),
            [(col, kw)] => Err(syntax(
                lineno,
                col + kw.len(),
                format!("`{kw}` expects one argument"),
            )),
            [_, _, extra, ..] => Err(syntax(lineno, extra.0, "unexpected token")),
            [] => unreachable!(),
        }
    }

    fn prime_line(&mut self, lineno: usize, toks: &[(usize, &str)]) -> Result<()> {
        if self.prime.is_some() {
            return Err(Error::DuplicateRelation("prime".into()));
        }
        let p = Self::single_arg(lineno, toks)?;
        if p > u32::MAX as u64 || !is_prime(p) {
            return Err(Error::NotPrime(p as i64));
        }
        self.prime = Some(p as u32);
        Ok(())
    }

    fn gens_line(&mut self, lineno: usize, toks: &[(usize, &str)]) -> Result<()> {
        if self.pres.is_some() {
            return Err(Error::DuplicateRelation("gens".into()));
        }
        let Some(p) = self.prime else {
            return Err(syntax(lineno, toks[0].0, "`prime` must precede `gens`"));
        };
        let n = Self::single_arg(lineno, toks)?;
        if n > 64 {
            return Err(syntax(
                lineno,
                toks[1].0,
                "at most 64 generators are supported",
            ));
        }
        self.pres = Some(PcPresentation::new(p, n as usize)?);
        Ok(())
    }

    fn relation_line(&mut self, lineno: usize, toks: &[(usize, &str)], arity: usize) -> Result<()> {
        let keyword = toks[0].1;
        let Some(pres) = self.pres.as_mut() else {
            return Err(syntax(
                lineno,
                toks[0].0,
                format!("`{keyword}` before `gens`"),
            ));
        };
        let n = pres.gens();
        let p = pres.prime();
        let colon = 1 + arity;
        if toks.len() <= colon || toks[colon].1 != ":" {
            let col = toks
                .get(colon)
                .map_or_else(|| toks.last().map_or(1, |t| t.0 + t.1.len()), |t| t.0);
            return Err(syntax(
                lineno,
                col,
                format!("expected `{keyword}` followed by {arity} index(es) and `:`"),
            ));
        }
        let mut idx = Vec::with_capacity(arity);
        for &tok in &toks[1..colon] {
            let k = Self::number(lineno, tok)? as usize;
            if k == 0 || k > n {
                return Err(syntax(
                    lineno,
                    tok.0,
                    format!("generator index {k} out of range 1..={n}"),
                ));
            }
            idx.push(k - 1);
        }
        let (head, key) = match idx[..] {
            [i] => (i, (i, i)),
            [j, i] => {
                if j <= i {
                    return Err(syntax(
                        lineno,
                        toks[1].0,
                        format!("commutator `comm {} {}` requires J > I", j + 1, i + 1),
                    ));
                }
                (j, (j, i))
            }
            _ => unreachable!(),
        };
        if !self.seen.insert(key) {
            let name = if arity == 1 {
                format!("pow {}", head + 1)
            } else {
                format!("comm {} {}", key.0 + 1, key.1 + 1)
            };
            return Err(Error::DuplicateRelation(name));
        }

        let mut syllables = Vec::new();
        let mut last: Option<usize> = None;
        for &(col, tok) in &toks[colon + 1..] {
            let (k, e) = match tok.split_once('^') {
                Some((k, e)) => (k, e),
                None => (tok, "1"),
            };
            let k: usize = k
                .parse()
                .map_err(|_| syntax(lineno, col, format!("malformed syllable `{tok}`")))?;
            let e: u32 = e
                .parse()
                .map_err(|_| syntax(lineno, col, format!("malformed exponent in `{tok}`")))?;
            if k == 0 || k > n {
                return Err(syntax(
                    lineno,
                    col,
                    format!("generator index {k} out of range 1..={n}"),
                ));
            }
            if e >= p {
                return Err(syntax(
                    lineno,
                    col,
                    format!("exponent {e} not reduced modulo {p}"),
                ));
            }
            if k - 1 <= head {
                return Err(syntax(
                    lineno,
                    col,
                    Error::TailOrdering {
                        head: head + 1,
                        tail: k,
                    }
                    .to_string(),
                ));
            }
            if last.is_some_and(|l| l >= k - 1) {
                return Err(syntax(
                    lineno,
                    col,
                    "tail indices must be strictly increasing",
                ));
            }
            last = Some(k - 1);
            syllables.push((k - 1, e));
        }
        let tail = Word::new(syllables, p);
        match idx[..] {
            [i] => pres.set_power(i, tail),
            [j, i] => pres.set_comm(j, i, tail),
            _ => unreachable!(),
        }
    }
}

/// Assembles a presentation from relations written either in stored form
/// `[g_j, g_i] = w` (`j > i`) or in the reversed form `[g_i, g_j] = w`
/// (`i < j`), whose tails are inverted with the collector once every
/// relation among the larger generators is known.
#[derive(Debug, Clone)]
pub struct PresentationBuilder {
    pres: PcPresentation,
    reversed: Vec<(usize, usize, Word)>,
}

impl PresentationBuilder {
    pub fn new(prime: u32, gens: usize) -> Result<Self> {
        Ok(Self {
            pres: PcPresentation::new(prime, gens)?,
            reversed: Vec::new(),
        })
    }

    fn word(&self, syllables: &[(usize, u32)]) -> Word {
        let p = self.pres.prime;
        let mut s: Vec<(usize, u32)> = syllables.iter().map(|&(k, e)| (k - 1, e % p)).collect();
        s.sort_by_key(|x| x.0);
        Word::new(s, p)
    }

    /// `g_i^p = w`, 1-based indices.
    pub fn pow(mut self, i: usize, w: &[(usize, u32)]) -> Result<Self> {
        let w = self.word(w);
        self.pres.set_power(i - 1, w)?;
        Ok(self)
    }

    /// `[g_a, g_b] = w`, 1-based indices, either orientation.
    pub fn comm(mut self, a: usize, b: usize, w: &[(usize, u32)]) -> Result<Self> {
        let w = self.word(w);
        if a > b {
            self.pres.set_comm(a - 1, b - 1, w)?;
        } else {
            // validate now; the inverse is filled in by `build`
            self.pres.set_comm(b - 1, a - 1, w.clone())?;
            self.reversed.push((b - 1, a - 1, w));
        }
        Ok(self)
    }

    pub fn build(mut self) -> Result<PcPresentation> {
        let n = self.pres.gens;
        // the inverse of a tail over indices > j only needs relations among
        // those indices, all of which are final when processed by descending i
        self.reversed
            .sort_by(|x, y| y.1.cmp(&x.1).then(y.0.cmp(&x.0)));
        for (j, i, w) in std::mem::take(&mut self.reversed) {
            let inv = self.pres.inverse_unchecked(&w.to_element(n));
            self.pres.set_comm(j, i, Word::from_element(&inv))?;
        }
        Ok(self.pres)
    }
}
