use fixedbitset::FixedBitSet;
use rayon::prelude::*;
use serde::Serialize;

use super::{ElemId, ElementSet, FiniteGroup, QuotientGroup, Subgroup};

const NO_CLASS: u32 = u32::MAX;

/// Conjugacy classes, ordered by their least member (the representative).
#[derive(Debug, Clone)]
pub struct ConjugacyClasses {
    classes: Vec<Vec<ElemId>>,
    class_of: Vec<u32>,
}

impl ConjugacyClasses {
    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    /// Each class sorted ascending; classes sorted by representative.
    pub fn classes(&self) -> &[Vec<ElemId>] {
        &self.classes
    }

    pub fn representatives(&self) -> impl Iterator<Item = ElemId> + '_ {
        self.classes.iter().map(|c| c[0])
    }

    pub fn class_index(&self, a: ElemId) -> usize {
        self.class_of[a as usize] as usize
    }

    pub fn class_of(&self, a: ElemId) -> &[ElemId] {
        &self.classes[self.class_index(a)]
    }

    pub fn is_representative(&self, a: ElemId) -> bool {
        self.class_of(a)[0] == a
    }

    /// Class sizes in representative order.
    pub fn sizes(&self) -> Vec<usize> {
        self.classes.iter().map(Vec::len).collect()
    }

    fn union_of(&self, universe: usize, marked: &FixedBitSet) -> ElementSet {
        let mut mask = FixedBitSet::with_capacity(universe);
        for c in marked.ones() {
            for &a in &self.classes[c] {
                mask.insert(a as usize);
            }
        }
        ElementSet::from_mask(mask)
    }
}

/// Orbits of conjugation by the generators, found in ascending id order.
pub fn conjugacy_classes<G: FiniteGroup + ?Sized>(g: &G) -> ConjugacyClasses {
    let gens = g.generators();
    let gens_inv: Vec<ElemId> = gens.iter().map(|&s| g.inv(s)).collect();
    let mut class_of = vec![NO_CLASS; g.universe()];
    let mut classes = Vec::new();
    for a in g.elements() {
        if class_of[a as usize] != NO_CLASS {
            continue;
        }
        let idx = classes.len() as u32;
        class_of[a as usize] = idx;
        let mut orbit = vec![a];
        let mut i = 0;
        while i < orbit.len() {
            let x = orbit[i];
            for (&s, &si) in gens.iter().zip(&gens_inv) {
                let y = g.mul(g.mul(si, x), s);
                if class_of[y as usize] == NO_CLASS {
                    class_of[y as usize] = idx;
                    orbit.push(y);
                }
            }
            i += 1;
        }
        orbit.sort_unstable();
        classes.push(orbit);
    }
    ConjugacyClasses { classes, class_of }
}

/// `K(G) = {[a, b] : a, b ∈ G}`.
///
/// `{[a, g] : g ∈ G} = a⁻¹·aᴳ`, and commutators with a conjugate of `a` are
/// conjugates of commutators with `a`, so K(G) is the union of the classes
/// met by `a⁻¹·aᴳ` as `a` runs over class representatives.
pub fn commutator_set<G: FiniteGroup + ?Sized>(g: &G, classes: &ConjugacyClasses) -> ElementSet {
    let reps: Vec<ElemId> = classes.representatives().collect();
    let nc = classes.len();
    let marked = reps
        .par_iter()
        .fold(
            || FixedBitSet::with_capacity(nc),
            |mut acc, &a| {
                let ai = g.inv(a);
                for &c in classes.class_of(a) {
                    acc.insert(classes.class_index(g.mul(ai, c)));
                }
                acc
            },
        )
        .reduce(
            || FixedBitSet::with_capacity(nc),
            |mut x, y| {
                x.union_with(&y);
                x
            },
        );
    classes.union_of(g.universe(), &marked)
}

/// `γ₂(G) ∖ K(G)` in ascending order.
pub fn non_commutator_witnesses(gamma2: &Subgroup, k: &ElementSet) -> Vec<ElemId> {
    gamma2
        .members()
        .iter()
        .copied()
        .filter(|&x| !k.contains(x))
        .collect()
}

/// Whether every element of `γ₂(G)` is a product of at most two
/// commutators. Both sets are unions of classes, so only class
/// representatives need checking.
pub fn commutator_length_le2<G: FiniteGroup + ?Sized>(
    g: &G,
    classes: &ConjugacyClasses,
    gamma2: &Subgroup,
    k: &ElementSet,
) -> bool {
    let missing: Vec<ElemId> = non_commutator_witnesses(gamma2, k)
        .into_iter()
        .filter(|&x| classes.is_representative(x))
        .collect();
    missing
        .par_iter()
        .all(|&x| k.members().iter().any(|&c| k.contains(g.mul(g.inv(c), x))))
}

/// `[x, G] = {[x, g] : g ∈ G}`.
pub fn commutator_image<G: FiniteGroup + ?Sized>(g: &G, x: ElemId) -> ElementSet {
    ElementSet::from_ids(g.universe(), g.elements().into_iter().map(|h| g.comm(x, h)))
}

/// Outcome of testing the covering criterion for `γ₂(G) = ⋃ [xᵢ, G]`
/// through a central subgroup `H ≤ γ₂(G)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CoverCheck {
    /// `H ≤ γ₂(G) ∩ Z(G)`.
    pub h_central_in_gamma2: bool,
    /// `γ₂(G)/H = ⋃ [xᵢH, G/H]`.
    pub quotient_covered: bool,
    /// `H ⊆ ⋂ [xᵢ, G]`.
    pub h_in_every_image: bool,
    /// `γ₂(G) = ⋃ [xᵢ, G]`, checked directly.
    pub covered: bool,
}

impl CoverCheck {
    /// The hypotheses hold, so the cover is guaranteed.
    pub fn hypotheses_hold(&self) -> bool {
        self.h_central_in_gamma2 && self.quotient_covered && self.h_in_every_image
    }
}

pub fn cover_check<G: FiniteGroup + ?Sized>(
    g: &G,
    gamma2: &Subgroup,
    center: &Subgroup,
    xs: &[ElemId],
    h: &Subgroup,
) -> CoverCheck {
    let images: Vec<ElementSet> = xs.iter().map(|&x| commutator_image(g, x)).collect();
    let h_central_in_gamma2 = h.is_subgroup_of(gamma2) && h.is_subgroup_of(center);
    let h_in_every_image = images
        .iter()
        .all(|img| h.members().iter().all(|&y| img.contains(y)));
    let covered = gamma2
        .members()
        .iter()
        .all(|&y| images.iter().any(|img| img.contains(y)));
    let quotient_covered = match QuotientGroup::new(g, h.clone()) {
        Ok(q) => {
            let q_images: Vec<ElementSet> = xs
                .iter()
                .map(|&x| commutator_image(&q, q.project(x)))
                .collect();
            gamma2
                .members()
                .iter()
                .all(|&y| q_images.iter().any(|img| img.contains(q.project(y))))
        }
        Err(_) => false,
    };
    CoverCheck {
        h_central_in_gamma2,
        quotient_covered,
        h_in_every_image,
        covered,
    }
}
