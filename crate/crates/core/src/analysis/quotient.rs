use super::{log_p, ElemId, ElementSet, FiniteGroup, Subgroup};
use crate::collector::Element;
use crate::error::{Error, Result};

/// `G/N` as a coset table over the parent's ids. Each coset is named by its
/// least member, so the quotient's ids are a subset of the parent's.
#[derive(Debug, Clone)]
pub struct QuotientGroup<'a, G: FiniteGroup + ?Sized> {
    parent: &'a G,
    kernel: Subgroup,
    rep: Vec<ElemId>,
    reps: Vec<ElemId>,
    generators: Vec<ElemId>,
}

const UNSET: ElemId = ElemId::MAX;

impl<'a, G: FiniteGroup + ?Sized> QuotientGroup<'a, G> {
    /// Fails with [`Error::NotNormal`] naming a generator of `kernel` whose
    /// conjugate by a parent generator leaves it.
    pub fn new(parent: &'a G, kernel: Subgroup) -> Result<Self> {
        for &x in kernel.generators() {
            for s in parent.generators() {
                let y = parent.conj(x, s);
                if !kernel.contains(y) {
                    return Err(Error::NotNormal {
                        element: parent.exponents(x).into_exponents(),
                        conjugate: parent.exponents(y).into_exponents(),
                    });
                }
            }
        }
        let mut rep = vec![UNSET; parent.universe()];
        let mut reps = Vec::with_capacity(parent.order() / kernel.order());
        for a in parent.elements() {
            if rep[a as usize] != UNSET {
                continue;
            }
            reps.push(a);
            for &k in kernel.members() {
                rep[parent.mul(a, k) as usize] = a;
            }
        }
        let mut generators: Vec<ElemId> = Vec::new();
        let one = rep[parent.identity() as usize];
        for s in parent.generators() {
            let r = rep[s as usize];
            if r != one && !generators.contains(&r) {
                generators.push(r);
            }
        }
        Ok(Self {
            parent,
            kernel,
            rep,
            reps,
            generators,
        })
    }

    pub fn parent(&self) -> &'a G {
        self.parent
    }

    pub fn kernel(&self) -> &Subgroup {
        &self.kernel
    }

    /// Canonical representative of the coset containing parent element `a`.
    pub fn project(&self, a: ElemId) -> ElemId {
        self.rep[a as usize]
    }

    /// Full preimage in the parent of a subgroup of the quotient.
    pub fn preimage(&self, h: &Subgroup) -> Subgroup {
        let set = ElementSet::from_ids(
            self.parent.universe(),
            self.parent
                .elements()
                .into_iter()
                .filter(|&a| h.contains(self.rep[a as usize])),
        );
        let mut lifted = Subgroup::from_closed_set(self.parent, set);
        // keep the kernel's generators so the preimage is described over them too
        for &k in self.kernel.generators() {
            lifted.extend(self.parent, k);
        }
        lifted
    }
}

impl<G: FiniteGroup + ?Sized> FiniteGroup for QuotientGroup<'_, G> {
    fn prime(&self) -> u32 {
        self.parent.prime()
    }

    fn universe(&self) -> usize {
        self.parent.universe()
    }

    fn order(&self) -> usize {
        self.reps.len()
    }

    fn log_order(&self) -> u32 {
        log_p(self.reps.len(), self.prime())
    }

    fn identity(&self) -> ElemId {
        self.rep[self.parent.identity() as usize]
    }

    fn elements(&self) -> Vec<ElemId> {
        self.reps.clone()
    }

    fn mul(&self, a: ElemId, b: ElemId) -> ElemId {
        self.rep[self.parent.mul(a, b) as usize]
    }

    fn inv(&self, a: ElemId) -> ElemId {
        self.rep[self.parent.inv(a) as usize]
    }

    fn generators(&self) -> Vec<ElemId> {
        self.generators.clone()
    }

    fn exponents(&self, a: ElemId) -> Element {
        self.parent.exponents(a)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analysis::{center, closure, is_abelian, PcGroup};
    use crate::catalog;

    fn heisenberg() -> PcGroup {
        PcGroup::new(catalog::build("heisenberg", 5).unwrap()).unwrap()
    }

    #[test]
    fn mod_center_is_elementary_abelian() {
        let g = heisenberg();
        let z = center(&g);
        let q = QuotientGroup::new(&g, z).unwrap();
        assert_eq!(q.order(), 25);
        let whole = Subgroup::whole(&q);
        assert!(is_abelian(&q, &whole));
        assert!(q.elements().iter().all(|&a| q.pow(a, 5) == q.identity()));
        assert_eq!(q.generators().len(), 2);
    }

    #[test]
    fn mod_whole_group_is_trivial() {
        let g = heisenberg();
        let q = QuotientGroup::new(&g, Subgroup::whole(&g)).unwrap();
        assert_eq!(q.order(), 1);
        assert_eq!(q.elements(), vec![0]);
        assert!(q.generators().is_empty());
    }

    #[test]
    fn rejects_non_normal_kernel() {
        let g = heisenberg();
        let h = closure(&g, &[g.generator(1)]);
        match QuotientGroup::new(&g, h) {
            Err(Error::NotNormal { element, conjugate }) => {
                assert_eq!(element, vec![0, 1, 0]);
                assert_ne!(conjugate, element);
            }
            other => panic!("expected NotNormal, got {other:?}"),
        }
    }

    #[test]
    fn representatives_are_least_in_coset() {
        let g = heisenberg();
        let z = center(&g);
        let q = QuotientGroup::new(&g, z.clone()).unwrap();
        for a in g.elements() {
            let r = q.project(a);
            assert!(r <= a);
            assert!(z.contains(g.mul(g.inv(r), a)));
        }
        let pre = q.preimage(&Subgroup::trivial(&q));
        assert_eq!(pre, z);
    }
}
