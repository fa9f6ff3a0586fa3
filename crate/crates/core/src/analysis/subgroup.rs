use fixedbitset::FixedBitSet;

use super::{log_p, ElemId, FiniteGroup};
use crate::collector::Element;

/// A set of element ids kept both sorted and as a membership bitset.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ElementSet {
    members: Vec<ElemId>,
    mask: FixedBitSet,
}

impl ElementSet {
    pub fn empty(universe: usize) -> Self {
        Self {
            members: Vec::new(),
            mask: FixedBitSet::with_capacity(universe),
        }
    }

    pub fn from_ids(universe: usize, ids: impl IntoIterator<Item = ElemId>) -> Self {
        let mut set = Self::empty(universe);
        for id in ids {
            set.insert(id);
        }
        set.members.sort_unstable();
        set
    }

    pub(crate) fn from_mask(mask: FixedBitSet) -> Self {
        let members = mask.ones().map(|i| i as ElemId).collect();
        Self { members, mask }
    }

    /// Inserts without restoring the sort order; returns whether it was new.
    fn insert(&mut self, id: ElemId) -> bool {
        if self.mask.put(id as usize) {
            return false;
        }
        self.members.push(id);
        true
    }

    pub fn contains(&self, id: ElemId) -> bool {
        self.mask.contains(id as usize)
    }

    /// Members in ascending id order.
    pub fn members(&self) -> &[ElemId] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn is_subset(&self, other: &ElementSet) -> bool {
        self.mask.is_subset(&other.mask)
    }

    pub fn mask(&self) -> &FixedBitSet {
        &self.mask
    }

    pub fn to_elements<G: FiniteGroup + ?Sized>(&self, g: &G) -> Vec<Element> {
        self.members.iter().map(|&a| g.exponents(a)).collect()
    }
}

/// A subgroup as an explicit element set together with the generators it
/// was built from.
#[derive(Debug, Clone)]
pub struct Subgroup {
    set: ElementSet,
    generators: Vec<ElemId>,
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        self.set == other.set
    }
}

impl Eq for Subgroup {}

impl Subgroup {
    pub fn trivial<G: FiniteGroup + ?Sized>(g: &G) -> Self {
        let mut set = ElementSet::empty(g.universe());
        set.insert(g.identity());
        Self {
            set,
            generators: Vec::new(),
        }
    }

    /// The whole group, generated by its own generators.
    pub fn whole<G: FiniteGroup + ?Sized>(g: &G) -> Self {
        Self {
            set: ElementSet::from_ids(g.universe(), g.elements()),
            generators: g.generators(),
        }
    }

    /// Wraps a set already known to be a subgroup, choosing generators
    /// greedily in ascending id order.
    pub fn from_closed_set<G: FiniteGroup + ?Sized>(g: &G, set: ElementSet) -> Self {
        let mut h = Self::trivial(g);
        for &a in set.members() {
            if !h.contains(a) {
                h.extend(g, a);
            }
            if h.order() == set.len() {
                break;
            }
        }
        debug_assert_eq!(h.set, set);
        Self {
            set,
            generators: h.generators,
        }
    }

    pub fn contains(&self, id: ElemId) -> bool {
        self.set.contains(id)
    }

    pub fn members(&self) -> &[ElemId] {
        self.set.members()
    }

    pub fn generators(&self) -> &[ElemId] {
        &self.generators
    }

    pub fn order(&self) -> usize {
        self.set.len()
    }

    pub fn log_order(&self, p: u32) -> u32 {
        log_p(self.order(), p)
    }

    pub fn is_trivial(&self) -> bool {
        self.order() == 1
    }

    pub fn as_set(&self) -> &ElementSet {
        &self.set
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.set.is_subset(&other.set)
    }

    /// Adds `x` as a generator and re-closes under right multiplication.
    pub fn extend<G: FiniteGroup + ?Sized>(&mut self, g: &G, x: ElemId) {
        if self.contains(x) {
            return;
        }
        self.generators.push(x);
        let mut queue = Vec::new();
        let old = self.set.members.len();
        for i in 0..old {
            let y = g.mul(self.set.members[i], x);
            if self.set.insert(y) {
                queue.push(y);
            }
        }
        while let Some(a) = queue.pop() {
            for &s in &self.generators {
                let y = g.mul(a, s);
                if self.set.insert(y) {
                    queue.push(y);
                }
            }
        }
        self.set.members.sort_unstable();
    }
}

/// Smallest subgroup containing `gens`.
pub fn closure<G: FiniteGroup + ?Sized>(g: &G, gens: &[ElemId]) -> Subgroup {
    let mut h = Subgroup::trivial(g);
    for &x in gens {
        h.extend(g, x);
    }
    h
}

/// Smallest normal subgroup containing `seeds`.
pub fn normal_closure<G: FiniteGroup + ?Sized>(g: &G, seeds: &[ElemId]) -> Subgroup {
    normal_closure_under(g, seeds, &g.generators())
}

/// Smallest subgroup containing `seeds` and closed under conjugation by
/// `conjugators`.
pub(crate) fn normal_closure_under<G: FiniteGroup + ?Sized>(
    g: &G,
    seeds: &[ElemId],
    conjugators: &[ElemId],
) -> Subgroup {
    let mut h = closure(g, seeds);
    let mut i = 0;
    while i < h.generators.len() {
        let x = h.generators[i];
        for &c in conjugators {
            let y = g.conj(x, c);
            h.extend(g, y);
        }
        i += 1;
    }
    h
}
