use std::collections::HashSet;

use fixedbitset::FixedBitSet;
use serde::Serialize;

use super::{
    center, closure, commutator_set, conjugacy_classes, frattini, lower_central_series,
    ConjugacyClasses, ElemId, FiniteGroup, PcGroup, QuotientGroup, Subgroup,
};
use crate::collector::Element;

/// Order-`p` subgroups of `z`, ordered by their least non-identity member.
pub fn central_subgroups_of_order_p<G: FiniteGroup + ?Sized>(g: &G, z: &Subgroup) -> Vec<Subgroup> {
    let p = g.prime() as u64;
    let one = g.identity();
    let mut seen = FixedBitSet::with_capacity(g.universe());
    let mut out = Vec::new();
    for &a in z.members() {
        if a == one || seen.contains(a as usize) || g.pow(a, p) != one {
            continue;
        }
        let h = closure(g, &[a]);
        for &x in h.members() {
            seen.insert(x as usize);
        }
        out.push(h);
    }
    out
}

/// `|Z(G/H)|` for `H ≤ Z(G)`, found inside `Z₂(G)`: the preimage of
/// `Z(G/H)` is `{x ∈ Z₂ : [x, s] ∈ H for every generator s}`.
pub fn center_of_quotient_order<G: FiniteGroup + ?Sized>(
    g: &G,
    zeta2: &Subgroup,
    h: &Subgroup,
) -> usize {
    let gens = g.generators();
    let lifted = zeta2
        .members()
        .iter()
        .filter(|&&x| gens.iter().all(|&s| h.contains(g.comm(x, s))))
        .count();
    lifted / h.order()
}

/// First order-`p` subgroup `H ≤ Z(G)` with `|Z(G/H)| = p²`.
pub fn find_central_h<G: FiniteGroup + ?Sized>(
    g: &G,
    z: &Subgroup,
    zeta2: &Subgroup,
) -> Option<Subgroup> {
    let target = (g.prime() as usize).pow(2);
    central_subgroups_of_order_p(g, z)
        .into_iter()
        .find(|h| center_of_quotient_order(g, zeta2, h) == target)
}

/// Every subgroup of the abelian subgroup `a`, ordered by size then by
/// member list.
pub fn all_subgroups_of_abelian<G: FiniteGroup + ?Sized>(g: &G, a: &Subgroup) -> Vec<Subgroup> {
    grow_lattice(g, Subgroup::trivial(g), |n| {
        a.members()
            .iter()
            .copied()
            .filter(|&x| !n.contains(x))
            .collect()
    })
}

/// Every normal subgroup. Each is reached from a smaller one by joining a
/// conjugacy class that is central modulo it.
pub fn normal_subgroups<G: FiniteGroup + ?Sized>(
    g: &G,
    classes: &ConjugacyClasses,
) -> Vec<Subgroup> {
    let p = g.prime() as u64;
    let gens = g.generators();
    grow_lattice(g, Subgroup::trivial(g), |n| {
        classes
            .representatives()
            .filter(|&x| {
                !n.contains(x)
                    && n.contains(g.pow(x, p))
                    && gens.iter().all(|&s| n.contains(g.comm(x, s)))
            })
            .collect()
    })
}

/// Breadth-first search over subgroups, extending each found subgroup by
/// each element that `candidates` offers.
fn grow_lattice<G, F>(g: &G, start: Subgroup, candidates: F) -> Vec<Subgroup>
where
    G: FiniteGroup + ?Sized,
    F: Fn(&Subgroup) -> Vec<ElemId>,
{
    let mut seen: HashSet<FixedBitSet> = HashSet::new();
    seen.insert(start.as_set().mask().clone());
    let mut found = vec![start];
    let mut i = 0;
    while i < found.len() {
        let n = found[i].clone();
        let mut covered = n.as_set().mask().clone();
        for x in candidates(&n) {
            if covered.contains(x as usize) {
                continue;
            }
            let mut m = n.clone();
            m.extend(g, x);
            covered.union_with(m.as_set().mask());
            if seen.insert(m.as_set().mask().clone()) {
                found.push(m);
            }
        }
        i += 1;
    }
    found.sort_by(|a, b| {
        a.order()
            .cmp(&b.order())
            .then_with(|| a.members().cmp(b.members()))
    });
    found
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ConjectureMode {
    /// `N = 1` and every subgroup of `Z(G)`.
    CentralOnly,
    /// Every normal subgroup.
    AllNormal,
}

/// A normal subgroup `N` for which `Z(G/N) ∩ γ₂(G/N) ⊄ K(G/N)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConjectureViolation {
    pub log_order: u32,
    pub generators: Vec<Element>,
    /// Least coset representative in `Z(G/N) ∩ γ₂(G/N)` outside `K(G/N)`.
    pub witness: Element,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConjectureReport {
    pub mode: ConjectureMode,
    pub subgroups_checked: usize,
    pub violations: Vec<ConjectureViolation>,
}

/// Tests `Z(G/N) ∩ γ₂(G/N) ⊆ K(G/N)` over the normal subgroups selected by
/// `mode`. All-normal mode enumerates the full normal lattice and is only
/// practical for small groups.
pub fn conjecture_probe<G: FiniteGroup + ?Sized>(g: &G, mode: ConjectureMode) -> ConjectureReport {
    let normals = match mode {
        ConjectureMode::CentralOnly => all_subgroups_of_abelian(g, &center(g)),
        ConjectureMode::AllNormal => normal_subgroups(g, &conjugacy_classes(g)),
    };
    let p = g.prime();
    let violations = normals
        .iter()
        .filter_map(|n| {
            let q = QuotientGroup::new(g, n.clone()).expect("probe subgroups are normal");
            let z = center(&q);
            let gamma2 = lower_central_series(&q)
                .into_iter()
                .nth(1)
                .unwrap_or_else(|| Subgroup::trivial(&q));
            let k = commutator_set(&q, &conjugacy_classes(&q));
            let witness = z
                .members()
                .iter()
                .copied()
                .find(|&x| gamma2.contains(x) && !k.contains(x))?;
            Some(ConjectureViolation {
                log_order: n.log_order(p),
                generators: n.generators().iter().map(|&x| g.exponents(x)).collect(),
                witness: g.exponents(witness),
            })
        })
        .collect();
    ConjectureReport {
        mode,
        subgroups_checked: normals.len(),
        violations,
    }
}

/// Coordinates `η₂₂ = η₁₁^m η₁₂^n` for a generating pair `α₁, α₂` with
/// `⟨η₁₁, η₁₂⟩` of order `p²`, where `β = [α₁, α₂]`, `βᵢ = [β, αᵢ]` and
/// `ηᵢⱼ = [βᵢ, αⱼ]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EtaCoordinates {
    pub alpha1: Element,
    pub alpha2: Element,
    pub m: u32,
    pub n: u32,
}

/// Searches generating pairs `(x^a y^b, x^c y^d)` with `ad − bc ≠ 0` over a
/// fixed basis `x, y` of `G/Φ(G)`, in lexicographic order of `(a, b, c, d)`,
/// and returns the first one whose `η₁₁, η₁₂` span a subgroup of order `p²`.
/// `None` when `G` is not 2-generated or no pair qualifies.
pub fn eta_coordinates(g: &PcGroup) -> Option<EtaCoordinates> {
    let p = g.prime();
    let whole = Subgroup::whole(g);
    let phi = frattini(g, &whole);
    if whole.log_order(p) != phi.log_order(p) + 2 {
        return None;
    }
    let x = g.elements().into_iter().find(|&a| !phi.contains(a))?;
    let mut with_x = phi.clone();
    with_x.extend(g, x);
    let y = g.elements().into_iter().find(|&a| !with_x.contains(a))?;
    let pres = g.presentation();
    let word = |a: u32, b: u32| g.mul(g.pow(x, a as u64), g.pow(y, b as u64));
    for a in 0..p {
        for b in 0..p {
            for c in 0..p {
                for d in 0..p {
                    if (a * d % p + p - b * c % p).is_multiple_of(p) {
                        continue;
                    }
                    let (a1, a2) = (word(a, b), word(c, d));
                    let named = pres
                        .named_commutators(&g.element(a1), &g.element(a2))
                        .expect("elements come from the group");
                    let id = |e: &Element| g.id(e).expect("named commutators lie in the group");
                    let (e11, e12, e22) = (
                        id(named.eta(1, 1)),
                        id(named.eta(1, 2)),
                        id(named.eta(2, 2)),
                    );
                    let span = closure(g, &[e11, e12]);
                    if span.order() != (p * p) as usize {
                        continue;
                    }
                    let (m, n) = (0..p)
                        .flat_map(|m| (0..p).map(move |n| (m, n)))
                        .find(|&(m, n)| g.mul(g.pow(e11, m as u64), g.pow(e12, n as u64)) == e22)?;
                    return Some(EtaCoordinates {
                        alpha1: g.element(a1),
                        alpha2: g.element(a2),
                        m,
                        n,
                    });
                }
            }
        }
    }
    None
}
