use rayon::prelude::*;

use super::{ElemId, FiniteGroup};
use crate::collector::Element;
use crate::error::{Error, Result};
use crate::presentation::PcPresentation;

/// Largest supported `|G|`; the generator table holds `n·|G|` ids.
pub const MAX_ORDER: u64 = 1 << 24;

/// A consistent presentation with its element space indexed.
///
/// Right multiplication by each generator is tabulated once with the
/// collector; a general product `a·b` then walks the exponent vector of `b`
/// through the table.
#[derive(Debug, Clone)]
pub struct PcGroup {
    pres: PcPresentation,
    order: usize,
    // place[k] = p^(n-1-k)
    place: Vec<u32>,
    // by_gen[a * n + k] = a · g_k
    by_gen: Vec<ElemId>,
    inverses: Vec<ElemId>,
}

impl PcGroup {
    /// Checks consistency, then tabulates. Refuses inconsistent input.
    pub fn new(pres: PcPresentation) -> Result<Self> {
        pres.ensure_consistent()?;
        if pres.order() > MAX_ORDER {
            return Err(Error::TooLarge(pres.log_order()));
        }
        let n = pres.gens();
        let p = pres.prime();
        let order = pres.order() as usize;
        let place: Vec<u32> = (0..n).map(|k| p.pow((n - 1 - k) as u32)).collect();

        let mut by_gen = vec![0; order * n];
        if n > 0 {
            by_gen.par_chunks_mut(n).enumerate().for_each_init(
                || vec![0u32; n],
                |exps, (a, row)| {
                    for (k, slot) in row.iter_mut().enumerate() {
                        decode_into(a as ElemId, &place, p, exps);
                        pres.collect(exps, &[(k, 1)]);
                        *slot = encode(exps, &place);
                    }
                },
            );
        }

        let mut g = Self {
            pres,
            order,
            place,
            by_gen,
            inverses: Vec::new(),
        };
        let inverses: Vec<ElemId> = (0..order as ElemId)
            .into_par_iter()
            .map(|a| g.inverse_by_table(a))
            .collect();
        g.inverses = inverses;
        Ok(g)
    }

    pub fn presentation(&self) -> &PcPresentation {
        &self.pres
    }

    pub fn gens(&self) -> usize {
        self.pres.gens()
    }

    pub fn id(&self, e: &Element) -> Result<ElemId> {
        let e = self.pres.element(e.exponents().to_vec())?;
        Ok(encode(e.exponents(), &self.place))
    }

    pub fn element(&self, a: ElemId) -> Element {
        let mut exps = vec![0; self.gens()];
        decode_into(a, &self.place, self.prime(), &mut exps);
        Element::from_exponents(exps)
    }

    /// Id of the `k`-th pc generator (0-based).
    pub fn generator(&self, k: usize) -> ElemId {
        self.place[k]
    }

    #[inline]
    fn digit(&self, a: ElemId, k: usize) -> u32 {
        (a / self.place[k]) % self.pres.prime()
    }

    #[inline]
    fn times_gen(&self, a: ElemId, k: usize) -> ElemId {
        self.by_gen[a as usize * self.gens() + k]
    }

    fn inverse_by_table(&self, a: ElemId) -> ElemId {
        let p = self.prime();
        let mut r = a;
        let mut x = 0;
        for k in 0..self.gens() {
            let e = (p - self.digit(r, k)) % p;
            for _ in 0..e {
                r = self.times_gen(r, k);
            }
            x += e * self.place[k];
        }
        debug_assert_eq!(r, 0);
        x
    }
}

fn encode(exps: &[u32], place: &[u32]) -> ElemId {
    exps.iter().zip(place).map(|(e, w)| e * w).sum()
}

fn decode_into(a: ElemId, place: &[u32], p: u32, out: &mut [u32]) {
    for (o, w) in out.iter_mut().zip(place) {
        *o = (a / w) % p;
    }
}

impl FiniteGroup for PcGroup {
    fn prime(&self) -> u32 {
        self.pres.prime()
    }

    fn universe(&self) -> usize {
        self.order
    }

    fn order(&self) -> usize {
        self.order
    }

    fn log_order(&self) -> u32 {
        self.pres.log_order()
    }

    fn identity(&self) -> ElemId {
        0
    }

    fn elements(&self) -> Vec<ElemId> {
        (0..self.order as ElemId).collect()
    }

    #[inline]
    fn mul(&self, a: ElemId, b: ElemId) -> ElemId {
        let mut r = a;
        for k in 0..self.gens() {
            for _ in 0..self.digit(b, k) {
                r = self.times_gen(r, k);
            }
        }
        r
    }

    #[inline]
    fn inv(&self, a: ElemId) -> ElemId {
        self.inverses[a as usize]
    }

    fn generators(&self) -> Vec<ElemId> {
        (0..self.gens()).map(|k| self.generator(k)).collect()
    }

    fn exponents(&self, a: ElemId) -> Element {
        self.element(a)
    }
}
