use rayon::prelude::*;

use super::subgroup::normal_closure_under;
use super::{normal_closure, ElemId, ElementSet, FiniteGroup, QuotientGroup, Subgroup};
use crate::error::{Error, Result};

/// `{h ∈ G : [x, h] ∈ target for every x ∈ xs}`. A subgroup whenever the
/// commutator map is a homomorphism modulo `target`, which holds for every
/// caller here.
fn centralizer_modulo<G: FiniteGroup + ?Sized>(
    g: &G,
    xs: &[ElemId],
    target: &Subgroup,
) -> Subgroup {
    let ids: Vec<ElemId> = g
        .elements()
        .into_par_iter()
        .filter(|&h| xs.iter().all(|&x| target.contains(g.comm(x, h))))
        .collect();
    Subgroup::from_closed_set(g, ElementSet::from_ids(g.universe(), ids))
}

pub fn center<G: FiniteGroup + ?Sized>(g: &G) -> Subgroup {
    centralizer_modulo(g, &g.generators(), &Subgroup::trivial(g))
}

pub fn is_abelian<G: FiniteGroup + ?Sized>(g: &G, h: &Subgroup) -> bool {
    let gens = h.generators();
    gens.iter()
        .enumerate()
        .all(|(i, &x)| gens[i + 1..].iter().all(|&y| g.mul(x, y) == g.mul(y, x)))
}

/// `[H, H]`.
pub fn derived_subgroup<G: FiniteGroup + ?Sized>(g: &G, h: &Subgroup) -> Subgroup {
    let gens = h.generators();
    let mut seeds = Vec::new();
    for (i, &x) in gens.iter().enumerate() {
        for &y in &gens[i + 1..] {
            seeds.push(g.comm(x, y));
        }
    }
    normal_closure_under(g, &seeds, gens)
}

/// `[γ₁, γ₂, …, γ_{c+1}]`, ending with the trivial subgroup.
pub fn lower_central_series<G: FiniteGroup + ?Sized>(g: &G) -> Vec<Subgroup> {
    let s = g.generators();
    let mut series = vec![Subgroup::whole(g)];
    while !series.last().unwrap().is_trivial() {
        let cur = series.last().unwrap();
        let seeds: Vec<ElemId> = cur
            .generators()
            .iter()
            .flat_map(|&x| s.iter().map(move |&y| (x, y)))
            .map(|(x, y)| g.comm(x, y))
            .collect();
        let next = normal_closure(g, &seeds);
        assert!(
            next.order() < cur.order(),
            "lower central series stalled: group is not nilpotent"
        );
        series.push(next);
    }
    series
}

/// `[Z₀ = 1, Z₁, …, Z_c = G]`, each term lifted from the center of the
/// quotient by the previous one.
pub fn upper_central_series<G: FiniteGroup + ?Sized>(g: &G) -> Vec<Subgroup> {
    let mut series = vec![Subgroup::trivial(g)];
    while series.last().unwrap().order() < g.order() {
        let cur = series.last().unwrap().clone();
        let q = QuotientGroup::new(g, cur.clone())
            .expect("terms of the upper central series are normal");
        let next = q.preimage(&center(&q));
        assert!(
            next.order() > cur.order(),
            "upper central series stalled: group is not nilpotent"
        );
        series.push(next);
    }
    series
}

pub fn nilpotency_class<G: FiniteGroup + ?Sized>(g: &G) -> usize {
    lower_central_series(g).len() - 1
}

pub fn element_order<G: FiniteGroup + ?Sized>(g: &G, a: ElemId) -> u64 {
    let one = g.identity();
    let mut order = 1;
    let mut x = a;
    while x != one {
        x = g.mul(x, a);
        order += 1;
    }
    order
}

/// Largest element order in `h`.
pub fn exponent<G: FiniteGroup + ?Sized>(g: &G, h: &Subgroup) -> u64 {
    let p = g.prime() as u64;
    h.members()
        .par_iter()
        .map(|&a| {
            // orders are powers of p, so repeated p-th powers suffice
            let mut x = a;
            let mut order = 1;
            while x != g.identity() {
                x = g.pow(x, p);
                order *= p;
            }
            order
        })
        .max()
        .unwrap_or(1)
}

/// `Φ(H) = Hᵖ[H, H]`.
pub fn frattini<G: FiniteGroup + ?Sized>(g: &G, h: &Subgroup) -> Subgroup {
    let gens = h.generators();
    let p = g.prime() as u64;
    let mut seeds: Vec<ElemId> = gens.iter().map(|&x| g.pow(x, p)).collect();
    for (i, &x) in gens.iter().enumerate() {
        for &y in &gens[i + 1..] {
            seeds.push(g.comm(x, y));
        }
    }
    normal_closure_under(g, &seeds, gens)
}

/// Minimal number of generators of `h`.
pub fn rank_d<G: FiniteGroup + ?Sized>(g: &G, h: &Subgroup) -> u32 {
    let p = g.prime();
    h.log_order(p) - frattini(g, h).log_order(p)
}

/// `C_i = C_G(γ_i/γ_{i+2})` for `1 ≤ i ≤ n−2`; requires maximal class.
pub fn two_step_centralizers<G: FiniteGroup + ?Sized>(g: &G) -> Result<Vec<Subgroup>> {
    let gamma = lower_central_series(g);
    let n = g.log_order();
    let class = gamma.len() - 1;
    if n < 2 || class + 1 != n as usize {
        return Err(Error::NotMaximalClass {
            log_order: n,
            class,
        });
    }
    // gamma has indices 0..=n-1 holding γ_1..γ_n; γ_i sits at i-1
    Ok((1..=n as usize - 2)
        .map(|i| centralizer_modulo(g, gamma[i - 1].generators(), &gamma[i + 1]))
        .collect())
}

/// Elements outside every two-step centralizer; requires maximal class.
pub fn uniform_elements<G: FiniteGroup + ?Sized>(g: &G) -> Result<Vec<ElemId>> {
    let cs = two_step_centralizers(g)?;
    Ok(g.elements()
        .into_iter()
        .filter(|&a| cs.iter().all(|c| !c.contains(a)))
        .collect())
}
