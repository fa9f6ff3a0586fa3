use std::sync::OnceLock;

use super::{
    commutator_length_le2, commutator_set, conjugacy_classes, exponent, find_central_h, is_abelian,
    lower_central_series, non_commutator_witnesses, rank_d, upper_central_series, ConjugacyClasses,
    ElemId, ElementSet, FiniteGroup, Subgroup,
};

/// Lazily computed, shareable invariants of one group. Each value is
/// computed at most once, on first request.
pub struct Analysis<'g, G: FiniteGroup + ?Sized> {
    group: &'g G,
    gamma: OnceLock<Vec<Subgroup>>,
    zeta: OnceLock<Vec<Subgroup>>,
    classes: OnceLock<ConjugacyClasses>,
    k: OnceLock<ElementSet>,
    d_gamma2: OnceLock<u32>,
    exp_gamma2: OnceLock<u64>,
    central_h: OnceLock<Option<Subgroup>>,
    length_le2: OnceLock<bool>,
}

impl<'g, G: FiniteGroup + ?Sized> Analysis<'g, G> {
    pub fn new(group: &'g G) -> Self {
        Self {
            group,
            gamma: OnceLock::new(),
            zeta: OnceLock::new(),
            classes: OnceLock::new(),
            k: OnceLock::new(),
            d_gamma2: OnceLock::new(),
            exp_gamma2: OnceLock::new(),
            central_h: OnceLock::new(),
            length_le2: OnceLock::new(),
        }
    }

    pub fn group(&self) -> &'g G {
        self.group
    }

    /// `γ₁ ⊇ γ₂ ⊇ … ⊇ γ_{c+1} = 1`.
    pub fn lower_central_series(&self) -> &[Subgroup] {
        self.gamma.get_or_init(|| lower_central_series(self.group))
    }

    /// `1 = Z₀ ⊆ Z₁ ⊆ … ⊆ Z_c = G`.
    pub fn upper_central_series(&self) -> &[Subgroup] {
        self.zeta.get_or_init(|| upper_central_series(self.group))
    }

    /// `γᵢ` for `i ≥ 1`; trivial past the end of the series.
    pub fn gamma(&self, i: usize) -> Subgroup {
        let s = self.lower_central_series();
        s.get(i - 1)
            .cloned()
            .unwrap_or_else(|| Subgroup::trivial(self.group))
    }

    /// `Zᵢ`; the whole group past the end of the series.
    pub fn zeta(&self, i: usize) -> Subgroup {
        let s = self.upper_central_series();
        s.get(i)
            .cloned()
            .unwrap_or_else(|| Subgroup::whole(self.group))
    }

    pub fn gamma2(&self) -> &Subgroup {
        let s = self.lower_central_series();
        s.get(1).unwrap_or(&s[0])
    }

    pub fn center(&self) -> &Subgroup {
        let s = self.upper_central_series();
        s.get(1).unwrap_or(&s[0])
    }

    pub fn class(&self) -> usize {
        self.lower_central_series().len() - 1
    }

    pub fn d_gamma2(&self) -> u32 {
        *self
            .d_gamma2
            .get_or_init(|| rank_d(self.group, self.gamma2()))
    }

    pub fn exp_gamma2(&self) -> u64 {
        *self
            .exp_gamma2
            .get_or_init(|| exponent(self.group, self.gamma2()))
    }

    pub fn gamma2_abelian(&self) -> bool {
        is_abelian(self.group, self.gamma2())
    }

    pub fn central_h(&self) -> Option<&Subgroup> {
        self.central_h
            .get_or_init(|| find_central_h(self.group, self.center(), &self.zeta(2)))
            .as_ref()
    }

    pub fn conjugacy_classes(&self) -> &ConjugacyClasses {
        self.classes.get_or_init(|| conjugacy_classes(self.group))
    }

    /// `K(G)`.
    pub fn commutator_set(&self) -> &ElementSet {
        self.k
            .get_or_init(|| commutator_set(self.group, self.conjugacy_classes()))
    }

    pub fn k_equals_gamma2(&self) -> bool {
        self.commutator_set().len() == self.gamma2().order()
    }

    pub fn witnesses(&self) -> Vec<ElemId> {
        non_commutator_witnesses(self.gamma2(), self.commutator_set())
    }

    pub fn commutator_length_le2(&self) -> bool {
        *self.length_le2.get_or_init(|| {
            commutator_length_le2(
                self.group,
                self.conjugacy_classes(),
                self.gamma2(),
                self.commutator_set(),
            )
        })
    }
}
