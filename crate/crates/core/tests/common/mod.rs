//! Oracles and sampling helpers shared by the integration tests.

#![allow(dead_code)]

use pcgroup::analysis::{
    all_subgroups_of_abelian, center, commutator_set, conjugacy_classes, lower_central_series,
    ElemId, ElementSet, FiniteGroup, PcGroup, QuotientGroup, Subgroup,
};
use pcgroup::catalog;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn group(id: &str, p: u32) -> PcGroup {
    PcGroup::new(catalog::build(id, p).unwrap()).unwrap()
}

/// Every catalog entry at every prime in `primes` it admits.
pub fn fixtures(primes: &[u32]) -> Vec<(String, PcGroup)> {
    let mut out = Vec::new();
    for e in catalog::list() {
        for &p in primes {
            if e.admits(p) {
                out.push((
                    format!("{}@{}", e.id, p),
                    PcGroup::new(e.build(p).unwrap()).unwrap(),
                ));
            }
        }
    }
    out
}

/// `K(G)` by the double loop over all pairs.
pub fn naive_commutator_set<G: FiniteGroup + ?Sized>(g: &G) -> ElementSet {
    let all = g.elements();
    ElementSet::from_ids(
        g.universe(),
        all.iter()
            .flat_map(|&a| all.iter().map(move |&b| g.comm(a, b))),
    )
}

/// `K(G) = γ₂(G)` via conjugacy classes.
pub fn k_equals_gamma2<G: FiniteGroup + ?Sized>(g: &G) -> bool {
    let gamma2 = lower_central_series(g)
        .into_iter()
        .nth(1)
        .unwrap_or_else(|| Subgroup::trivial(g));
    commutator_set(g, &conjugacy_classes(g)).len() == gamma2.order()
}

/// Every subgroup of `Z(G)`, trivial one included.
pub fn central_subgroups<G: FiniteGroup + ?Sized>(g: &G) -> Vec<Subgroup> {
    all_subgroups_of_abelian(g, &center(g))
}

pub fn sample<G: FiniteGroup + ?Sized>(g: &G, rng: &mut ChaCha8Rng) -> ElemId {
    let all = g.elements();
    all[rng.gen_range(0..all.len())]
}

fn conj<G: FiniteGroup + ?Sized>(g: &G, a: ElemId, b: ElemId) -> ElemId {
    g.conj(a, b)
}

/// Checks the commutator identities on `samples` random triples and
/// returns the first failure.
pub fn check_identities<G: FiniteGroup + ?Sized>(
    g: &G,
    rng: &mut ChaCha8Rng,
    samples: usize,
) -> Result<(), String> {
    let one = g.identity();
    let zeta2 = pcgroup::analysis::upper_central_series(g)
        .into_iter()
        .nth(2)
        .unwrap_or_else(|| Subgroup::whole(g));
    for _ in 0..samples {
        let (x, y, z) = (sample(g, rng), sample(g, rng), sample(g, rng));
        let c = |a, b| g.comm(a, b);
        let m = |a, b| g.mul(a, b);
        // [x, yz] = [x, z][x, y]^z
        if c(x, m(y, z)) != m(c(x, z), conj(g, c(x, y), z)) {
            return Err(format!("[x,yz] expansion fails at {x} {y} {z}"));
        }
        // [xy, z] = [x, z]^y [y, z]
        if c(m(x, y), z) != m(conj(g, c(x, z), y), c(y, z)) {
            return Err(format!("[xy,z] expansion fails at {x} {y} {z}"));
        }
        if g.inv(c(x, y)) != c(y, x) {
            return Err(format!("[x,y]^-1 = [y,x] fails at {x} {y}"));
        }
        // [x, y⁻¹, z]^y [y, z⁻¹, x]^z [z, x⁻¹, y]^x = 1
        let hw = |a: ElemId, b: ElemId, d: ElemId| conj(g, c(c(a, g.inv(b)), d), b);
        if m(m(hw(x, y, z), hw(y, z, x)), hw(z, x, y)) != one {
            return Err(format!("Hall-Witt fails at {x} {y} {z}"));
        }
        // [x, yⁿ] = [x, y]ⁿ when [x, y] commutes with x and y; y ∈ Z₂ forces that
        let w = zeta2.members()[rng.gen_range(0..zeta2.order())];
        let n = rng.gen_range(1..=2 * g.prime() as u64 + 1);
        for yy in [y, w] {
            let k = c(x, yy);
            if m(k, x) == m(x, k) && m(k, yy) == m(yy, k) && c(x, g.pow(yy, n)) != g.pow(k, n) {
                return Err(format!("[x,y^n] = [x,y]^n fails at {x} {yy} n={n}"));
            }
        }
    }
    Ok(())
}

/// Quotient-lifting: for every central `N` with `K(G/N) ≠ γ₂(G/N)`, `G`
/// itself has `K(G) ≠ γ₂(G)`. Returns the number of `N` checked.
pub fn check_quotient_lifting<G: FiniteGroup + ?Sized>(g: &G) -> Result<usize, String> {
    let parent_equal = k_equals_gamma2(g);
    let ns = central_subgroups(g);
    for n in &ns {
        let q = QuotientGroup::new(g, n.clone()).map_err(|e| e.to_string())?;
        if !k_equals_gamma2(&q) && parent_equal {
            return Err(format!(
                "quotient by N of order {} has K ≠ γ2 but G has K = γ2",
                n.order()
            ));
        }
    }
    Ok(ns.len())
}

/// Normal subgroups whose quotients are small enough to matter for the
/// order-`≤ p⁵` checks: lower central terms and central subgroups.
pub fn small_quotient_kernels<G: FiniteGroup + ?Sized>(g: &G, max_log: u32) -> Vec<Subgroup> {
    let p = g.prime();
    let mut out: Vec<Subgroup> = Vec::new();
    for n in lower_central_series(g)
        .into_iter()
        .chain(central_subgroups(g))
    {
        if g.log_order() - n.log_order(p) <= max_log && !out.contains(&n) {
            out.push(n);
        }
    }
    out
}
