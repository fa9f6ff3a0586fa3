//! Whole-group computations over an indexed element space.
//!
//! Every group handled here is a finite p-group whose elements carry dense
//! ids `0..universe`. For a [`PcGroup`] the id of `g_1^e1 ⋯ g_n^en` is the
//! mixed-radix number `e1 e2 … en` in base p, so ascending ids are the
//! lexicographic order on exponent vectors. A [`QuotientGroup`] reuses its
//! parent's ids, naming each coset by its least member.

mod cache;
mod central;
mod classes;
mod pcgroup;
mod quotient;
mod series;
mod subgroup;

pub use cache::Analysis;
pub use central::{
    all_subgroups_of_abelian, center_of_quotient_order, central_subgroups_of_order_p,
    conjecture_probe, eta_coordinates, find_central_h, normal_subgroups, ConjectureMode,
    ConjectureReport, ConjectureViolation, EtaCoordinates,
};
pub use classes::{
    commutator_image, commutator_length_le2, commutator_set, conjugacy_classes, cover_check,
    non_commutator_witnesses, ConjugacyClasses, CoverCheck,
};
pub use pcgroup::PcGroup;
pub use quotient::QuotientGroup;
pub use series::{
    center, derived_subgroup, element_order, exponent, frattini, is_abelian, lower_central_series,
    nilpotency_class, rank_d, two_step_centralizers, uniform_elements, upper_central_series,
};
pub use subgroup::{closure, normal_closure, ElementSet, Subgroup};

use crate::collector::Element;

/// Dense element id; see the module docs.
pub type ElemId = u32;

/// A finite p-group with indexed elements.
pub trait FiniteGroup: Sync {
    fn prime(&self) -> u32;

    /// Upper bound (exclusive) on element ids.
    fn universe(&self) -> usize;

    fn order(&self) -> usize;

    fn identity(&self) -> ElemId;

    /// All elements in ascending id order.
    fn elements(&self) -> Vec<ElemId>;

    fn mul(&self, a: ElemId, b: ElemId) -> ElemId;

    fn inv(&self, a: ElemId) -> ElemId;

    fn generators(&self) -> Vec<ElemId>;

    /// Exponent vector of `a` (of its coset representative for quotients).
    fn exponents(&self, a: ElemId) -> Element;

    fn log_order(&self) -> u32 {
        log_p(self.order(), self.prime())
    }

    /// `g⁻¹·a·g`.
    fn conj(&self, a: ElemId, g: ElemId) -> ElemId {
        self.mul(self.mul(self.inv(g), a), g)
    }

    /// `[a, b] = a⁻¹·b⁻¹·a·b`.
    fn comm(&self, a: ElemId, b: ElemId) -> ElemId {
        let ba = self.mul(b, a);
        let ab = self.mul(a, b);
        self.mul(self.inv(ba), ab)
    }

    fn pow(&self, a: ElemId, k: u64) -> ElemId {
        let mut base = a;
        let mut k = k;
        let mut acc = self.identity();
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            k >>= 1;
        }
        acc
    }
}

/// `log_p(n)` for an exact power `n = p^k`.
pub fn log_p(n: usize, p: u32) -> u32 {
    let mut k = 0;
    let mut m = n;
    while m > 1 {
        debug_assert!(m.is_multiple_of(p as usize), "{n} is not a power of {p}");
        m /= p as usize;
        k += 1;
    }
    k
}
