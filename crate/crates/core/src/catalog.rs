//! Built-in presentations, parameterized by the prime, each paired with the
//! invariants it is known to have.
//!
//! The nine order-`p⁷` groups are written with a long generating sequence
//! `α₁ … α₇`; relations given as `[αᵢ, αⱼ]` with `i < j` are inverted into
//! the stored `[αⱼ, αᵢ]` orientation by [`PresentationBuilder`].

use serde::Serialize;

use crate::error::{Error, Result};
use crate::fp_arith::{is_prime, least_non_residue};
use crate::presentation::{PcPresentation, PresentationBuilder};
use crate::verifier::InvariantReport;

/// The subset of invariants asserted for a catalog group. Sizes are `log_p`.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct ExpectedProfile {
    pub log_order: Option<u32>,
    pub class: Option<usize>,
    pub log_gamma2: Option<u32>,
    pub d_gamma2: Option<u32>,
    pub log_exp_gamma2: Option<u32>,
    pub gamma2_abelian: Option<bool>,
    pub log_center: Option<u32>,
    pub k_equals_gamma2: Option<bool>,
}

impl ExpectedProfile {
    /// Human-readable list of every asserted field that `report` contradicts.
    /// `k_equals_gamma2` is only compared when the report carries it.
    pub fn mismatches(&self, report: &InvariantReport) -> Vec<String> {
        let mut out = Vec::new();
        let mut cmp = |name: &str, want: Option<String>, got: Option<String>| {
            if let (Some(w), Some(g)) = (want, got) {
                if w != g {
                    out.push(format!("{name}: expected {w}, computed {g}"));
                }
            }
        };
        let s = |x: Option<u32>| x.map(|v| v.to_string());
        cmp(
            "log_order",
            s(self.log_order),
            Some(report.log_order.to_string()),
        );
        cmp(
            "class",
            self.class.map(|c| c.to_string()),
            Some(report.class.to_string()),
        );
        cmp(
            "log_gamma2",
            s(self.log_gamma2),
            Some(report.gamma_log(2).to_string()),
        );
        cmp(
            "d_gamma2",
            s(self.d_gamma2),
            Some(report.d_gamma2.to_string()),
        );
        cmp(
            "log_exp_gamma2",
            s(self.log_exp_gamma2),
            Some(report.log_exp_gamma2.to_string()),
        );
        cmp(
            "gamma2_abelian",
            self.gamma2_abelian.map(|b| b.to_string()),
            Some(report.gamma2_abelian.to_string()),
        );
        cmp(
            "log_center",
            s(self.log_center),
            Some(report.zeta_log(1).to_string()),
        );
        cmp(
            "k_equals_gamma2",
            self.k_equals_gamma2.map(|b| b.to_string()),
            report.k_equals_gamma2.map(|b| b.to_string()),
        );
        out
    }

    pub fn claims(&self) -> String {
        let mut parts = Vec::new();
        if let Some(v) = self.log_order {
            parts.push(format!("|G|=p^{v}"));
        }
        if let Some(v) = self.class {
            parts.push(format!("class {v}"));
        }
        if let Some(v) = self.log_gamma2 {
            parts.push(format!("|γ2|=p^{v}"));
        }
        if let Some(v) = self.d_gamma2 {
            parts.push(format!("d(γ2)={v}"));
        }
        if let Some(v) = self.log_exp_gamma2 {
            parts.push(format!("exp(γ2)=p^{v}"));
        }
        if let Some(v) = self.gamma2_abelian {
            parts.push(if v { "γ2 abelian" } else { "γ2 non-abelian" }.to_string());
        }
        if let Some(v) = self.log_center {
            parts.push(format!("|Z|=p^{v}"));
        }
        if let Some(v) = self.k_equals_gamma2 {
            parts.push(if v { "K=γ2" } else { "K≠γ2" }.to_string());
        }
        parts.join(", ")
    }
}

type Builder = fn(u32) -> Result<PcPresentation>;

#[derive(Debug, Clone, Serialize)]
pub struct CatalogEntry {
    pub id: &'static str,
    pub description: &'static str,
    /// Least admissible prime.
    pub min_prime: u32,
    /// Whether the group is one of the nine order-`p⁷` examples.
    pub order_p7: bool,
    pub expected: ExpectedProfile,
    #[serde(skip)]
    builder: Builder,
}

impl CatalogEntry {
    pub fn admits(&self, p: u32) -> bool {
        is_prime(p as u64) && p >= self.min_prime
    }

    pub fn constraint(&self) -> String {
        match self.min_prime {
            2 => "any prime".to_string(),
            m => format!("p >= {m}"),
        }
    }

    pub fn build(&self, p: u32) -> Result<PcPresentation> {
        if !self.admits(p) {
            return Err(Error::InadmissiblePrime {
                id: self.id.to_string(),
                prime: p,
                constraint: self.constraint(),
            });
        }
        (self.builder)(p)
    }

    /// Free parameters chosen for prime `p`, e.g. the non-residue `ν`.
    pub fn parameters(&self, p: u32) -> Vec<(&'static str, u32)> {
        if self.id == "eabcls4-nu-KeqG" && p > 2 {
            vec![("nu", least_non_residue(p).expect("odd prime"))]
        } else {
            Vec::new()
        }
    }
}

fn b(p: u32, n: usize) -> Result<PresentationBuilder> {
    PresentationBuilder::new(p, n)
}

// With α₂ᵖ = α₆ and α₃ᵖ = α₇, conjugating α₁ by α₂ p times gives
// [α₁, α₆] = α₇, so [α₆, α₁] must be α₇⁻¹; taking α₇ there instead makes
// the overlap α₂ᵖ·α₁ fail.
fn cls5_abelian(p: u32) -> Result<PcPresentation> {
    cls5_abelian_with(p, p - 1)
}

fn cls5_abelian_with(p: u32, e61: u32) -> Result<PcPresentation> {
    b(p, 7)?
        .comm(1, 2, &[(3, 1)])?
        .comm(3, 1, &[(4, 1)])?
        .comm(3, 2, &[(5, 1)])?
        .comm(4, 1, &[(6, 1)])?
        .comm(6, 1, &[(7, e61)])?
        .comm(5, 2, &[(7, 1)])?
        .pow(3, &[(7, 1)])?
        .pow(1, &[(5, 1)])?
        .pow(2, &[(6, 1)])?
        .build()
}

fn cls5_nonabelian_exp_p2(p: u32) -> Result<PcPresentation> {
    b(p, 7)?
        .comm(1, 2, &[(3, 1)])?
        .comm(3, 1, &[(4, 1)])?
        .comm(3, 2, &[(5, 1)])?
        .comm(4, 1, &[(6, 1)])?
        .comm(6, 2, &[(7, 1)])?
        .comm(4, 3, &[(7, 1)])?
        .comm(1, 5, &[(7, 1)])?
        .pow(3, &[(7, 1)])?
        .pow(1, &[(6, 1)])?
        .pow(2, &[(5, 1)])?
        .build()
}

fn eabcls5(p: u32) -> Result<PcPresentation> {
    b(p, 7)?
        .comm(1, 2, &[(3, 1)])?
        .comm(3, 1, &[(4, 1)])?
        .comm(3, 2, &[(5, 1)])?
        .comm(4, 1, &[(6, 1)])?
        .comm(6, 1, &[(7, 1)])?
        .build()
}

fn nab_kneq(p: u32) -> Result<PcPresentation> {
    b(p, 7)?
        .comm(1, 2, &[(3, 1)])?
        .comm(3, 1, &[(4, 1)])?
        .comm(3, 2, &[(5, 1)])?
        .comm(4, 1, &[(6, 1)])?
        .comm(6, 2, &[(7, 1)])?
        .comm(4, 3, &[(7, 1)])?
        .comm(4, 2, &[(7, 1)])?
        .build()
}

fn nab_keq(p: u32) -> Result<PcPresentation> {
    b(p, 7)?
        .comm(1, 2, &[(3, 1)])?
        .comm(3, 1, &[(4, 1)])?
        .comm(5, 1, &[(6, 1), (7, 1)])?
        .comm(3, 2, &[(5, 1)])?
        .comm(4, 2, &[(6, 1)])?
        .comm(6, 1, &[(7, 1)])?
        .comm(3, 4, &[(7, 1)])?
        .build()
}

fn eabcls4_kneq(p: u32) -> Result<PcPresentation> {
    b(p, 7)?
        .comm(1, 2, &[(3, 1)])?
        .comm(3, 1, &[(4, 1)])?
        .comm(3, 2, &[(5, 1)])?
        .comm(4, 1, &[(6, 1)])?
        .comm(5, 2, &[(7, 1)])?
        .build()
}

fn eabcls4_nu_keq(p: u32) -> Result<PcPresentation> {
    let nu = least_non_residue(p)?;
    b(p, 7)?
        .comm(1, 2, &[(3, 1)])?
        .comm(3, 1, &[(4, 1)])?
        .comm(3, 2, &[(5, 1)])?
        .comm(5, 1, &[(7, 1)])?
        .comm(4, 2, &[(7, 1)])?
        // [α₄, α₁]^ν = [α₅, α₂] = α₆^ν
        .comm(4, 1, &[(6, 1)])?
        .comm(5, 2, &[(6, nu)])?
        .build()
}

fn lastlem_keq(p: u32) -> Result<PcPresentation> {
    b(p, 7)?
        .comm(1, 2, &[(4, 1)])?
        .comm(4, 1, &[(5, 1)])?
        .comm(4, 2, &[(6, 1)])?
        .comm(6, 1, &[(7, 1)])?
        .comm(5, 2, &[(7, 1)])?
        .pow(3, &[(7, 1)])?
        .build()
}

fn lastlem_kneq(p: u32) -> Result<PcPresentation> {
    b(p, 7)?
        .comm(1, 2, &[(4, 1)])?
        .comm(4, 1, &[(5, 1)])?
        .comm(4, 2, &[(6, 1)])?
        .comm(5, 1, &[(7, 1)])?
        .pow(3, &[(7, 1)])?
        .build()
}

fn cyclic(p: u32, k: usize) -> Result<PcPresentation> {
    let mut bld = b(p, k)?;
    for i in 1..k {
        bld = bld.pow(i, &[(i + 1, 1)])?;
    }
    bld.build()
}

fn heisenberg(p: u32) -> Result<PcPresentation> {
    b(p, 3)?.comm(2, 1, &[(3, 1)])?.build()
}

fn extraspecial_exp_p2(p: u32) -> Result<PcPresentation> {
    b(p, 3)?.pow(1, &[(3, 1)])?.comm(2, 1, &[(3, 1)])?.build()
}

fn maxclass_p4(p: u32) -> Result<PcPresentation> {
    b(p, 4)?
        .comm(2, 1, &[(3, 1)])?
        .comm(3, 1, &[(4, 1)])?
        .build()
}

fn cp_x_heisenberg(p: u32) -> Result<PcPresentation> {
    b(p, 4)?.comm(3, 2, &[(4, 1)])?.build()
}

const fn p7(
    class: usize,
    log_gamma2: u32,
    d_gamma2: Option<u32>,
    log_exp_gamma2: Option<u32>,
    gamma2_abelian: Option<bool>,
    log_center: u32,
    k_equals_gamma2: bool,
) -> ExpectedProfile {
    ExpectedProfile {
        log_order: Some(7),
        class: Some(class),
        log_gamma2: Some(log_gamma2),
        d_gamma2,
        log_exp_gamma2,
        gamma2_abelian,
        log_center: Some(log_center),
        k_equals_gamma2: Some(k_equals_gamma2),
    }
}

const fn small(
    log_order: u32,
    class: usize,
    log_gamma2: u32,
    log_center: u32,
    k_equals_gamma2: bool,
) -> ExpectedProfile {
    ExpectedProfile {
        log_order: Some(log_order),
        class: Some(class),
        log_gamma2: Some(log_gamma2),
        d_gamma2: None,
        log_exp_gamma2: None,
        gamma2_abelian: None,
        log_center: Some(log_center),
        k_equals_gamma2: Some(k_equals_gamma2),
    }
}

const ENTRIES: &[CatalogEntry] = &[
    CatalogEntry {
        id: "cls5-abelian",
        description: "class 5, γ2 abelian 4-generated of order p^5 and exponent p^2",
        min_prime: 5,
        order_p7: true,
        expected: p7(5, 5, Some(4), Some(2), Some(true), 1, false),
        builder: cls5_abelian,
    },
    CatalogEntry {
        id: "cls5-nonabelian-exp-p2",
        description: "class 5, γ2 non-abelian 4-generated of order p^5 and exponent p^2",
        min_prime: 5,
        order_p7: true,
        expected: p7(5, 5, Some(4), Some(2), Some(false), 1, false),
        builder: cls5_nonabelian_exp_p2,
    },
    CatalogEntry {
        id: "eabcls5",
        description: "class 5, γ2 elementary abelian of order p^5",
        min_prime: 5,
        order_p7: true,
        expected: p7(5, 5, Some(5), Some(1), Some(true), 2, false),
        builder: eabcls5,
    },
    CatalogEntry {
        id: "nab-KneqG",
        description: "class 5, γ2 non-abelian of order p^5 and exponent p, |Z| = p^2",
        min_prime: 5,
        order_p7: true,
        expected: p7(5, 5, None, Some(1), Some(false), 2, false),
        builder: nab_kneq,
    },
    CatalogEntry {
        id: "nab-KeqG",
        description: "class 5, γ2 non-abelian of order p^5 and exponent p, |Z| = p",
        min_prime: 5,
        order_p7: true,
        expected: p7(5, 5, None, Some(1), Some(false), 1, true),
        builder: nab_keq,
    },
    CatalogEntry {
        id: "eabcls4-KneqG",
        description: "class 4, γ2 elementary abelian of order p^5 with a central H",
        min_prime: 5,
        order_p7: true,
        expected: p7(4, 5, Some(5), Some(1), Some(true), 2, false),
        builder: eabcls4_kneq,
    },
    CatalogEntry {
        id: "eabcls4-nu-KeqG",
        description: "class 4, γ2 elementary abelian of order p^5, twisted by a non-residue ν",
        min_prime: 5,
        order_p7: true,
        expected: p7(4, 5, Some(5), Some(1), Some(true), 2, true),
        builder: eabcls4_nu_keq,
    },
    CatalogEntry {
        id: "lastlem-KeqG",
        description: "class 4, γ2 abelian 4-generated of order p^4, |Z| = p^2",
        min_prime: 5,
        order_p7: true,
        expected: p7(4, 4, Some(4), None, Some(true), 2, true),
        builder: lastlem_keq,
    },
    CatalogEntry {
        id: "lastlem-KneqG",
        description: "class 4, γ2 abelian 4-generated of order p^4, |Z| = p^3",
        min_prime: 5,
        order_p7: true,
        expected: p7(4, 4, Some(4), None, Some(true), 3, false),
        builder: lastlem_kneq,
    },
    CatalogEntry {
        id: "cyclic-p",
        description: "cyclic group of order p",
        min_prime: 2,
        order_p7: false,
        expected: small(1, 1, 0, 1, true),
        builder: |p| cyclic(p, 1),
    },
    CatalogEntry {
        id: "cyclic-p2",
        description: "cyclic group of order p^2",
        min_prime: 2,
        order_p7: false,
        expected: small(2, 1, 0, 2, true),
        builder: |p| cyclic(p, 2),
    },
    CatalogEntry {
        id: "cyclic-p3",
        description: "cyclic group of order p^3",
        min_prime: 2,
        order_p7: false,
        expected: small(3, 1, 0, 3, true),
        builder: |p| cyclic(p, 3),
    },
    CatalogEntry {
        id: "elementary-abelian-p2",
        description: "elementary abelian group of order p^2",
        min_prime: 2,
        order_p7: false,
        expected: small(2, 1, 0, 2, true),
        builder: |p| PcPresentation::new(p, 2),
    },
    CatalogEntry {
        id: "elementary-abelian-p3",
        description: "elementary abelian group of order p^3",
        min_prime: 2,
        order_p7: false,
        expected: small(3, 1, 0, 3, true),
        builder: |p| PcPresentation::new(p, 3),
    },
    CatalogEntry {
        id: "heisenberg",
        description: "extraspecial group of order p^3 and exponent p",
        min_prime: 3,
        order_p7: false,
        expected: small(3, 2, 1, 1, true),
        builder: heisenberg,
    },
    CatalogEntry {
        id: "extraspecial-exp-p2",
        description: "extraspecial group of order p^3 and exponent p^2",
        min_prime: 3,
        order_p7: false,
        expected: small(3, 2, 1, 1, true),
        builder: extraspecial_exp_p2,
    },
    CatalogEntry {
        id: "maxclass-p4",
        description: "group of order p^4 and maximal class 3",
        min_prime: 3,
        order_p7: false,
        expected: small(4, 3, 2, 1, true),
        builder: maxclass_p4,
    },
    CatalogEntry {
        id: "cp-x-heisenberg",
        description: "direct product of a cyclic group of order p and the Heisenberg group",
        min_prime: 3,
        order_p7: false,
        expected: small(4, 2, 1, 2, true),
        builder: cp_x_heisenberg,
    },
];

pub fn list() -> &'static [CatalogEntry] {
    ENTRIES
}

pub fn entry(id: &str) -> Result<&'static CatalogEntry> {
    ENTRIES
        .iter()
        .find(|e| e.id == id)
        .ok_or_else(|| Error::UnknownCatalogId(id.to_string()))
}

pub fn build(id: &str, p: u32) -> Result<PcPresentation> {
    entry(id)?.build(p)
}

/// Ids of the nine order-`p⁷` example groups, in catalog order.
pub fn order_p7_ids() -> impl Iterator<Item = &'static str> {
    ENTRIES.iter().filter(|e| e.order_p7).map(|e| e.id)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentation::OverlapKind;

    #[test]
    fn every_entry_is_consistent_at_admissible_primes() {
        for e in list() {
            for p in [2u32, 3, 5, 7] {
                if !e.admits(p) {
                    continue;
                }
                let pres = e.build(p).unwrap();
                let report = pres.consistency_check();
                assert!(
                    report.is_consistent(),
                    "{} at p={p}: {:?}",
                    e.id,
                    report
                        .failures
                        .iter()
                        .map(|f| f.to_string())
                        .collect::<Vec<_>>()
                );
            }
        }
    }

    #[test]
    fn order_p7_entries_have_seven_generators() {
        assert_eq!(order_p7_ids().count(), 9);
        for id in order_p7_ids() {
            assert_eq!(build(id, 5).unwrap().gens(), 7, "{id}");
        }
    }

    #[test]
    fn unknown_and_inadmissible() {
        assert_eq!(
            build("nope", 5),
            Err(Error::UnknownCatalogId("nope".into()))
        );
        assert!(matches!(
            build("eabcls5", 3),
            Err(Error::InadmissiblePrime { .. })
        ));
        assert!(matches!(
            build("cyclic-p", 4),
            Err(Error::InadmissiblePrime { .. })
        ));
    }

    #[test]
    fn first_example_power_relations() {
        let g = build("cls5-abelian", 5).unwrap();
        let a1p = g.power(&g.generator(0), 5).unwrap();
        assert_eq!(a1p, g.generator(4));
        let a3p = g.power(&g.generator(2), 5).unwrap();
        assert_eq!(a3p, g.generator(6));
    }

    #[test]
    fn cls5_abelian_needs_inverse_tail() {
        let pres = cls5_abelian_with(5, 1).unwrap();
        let failures = pres.consistency_check().failures;
        assert_eq!(failures.len(), 1);
        assert_eq!(failures[0].kind, OverlapKind::PowerLeft);
        assert_eq!(failures[0].triple, [2, 2, 1]);
        assert!(build("cls5-abelian", 5)
            .unwrap()
            .consistency_check()
            .is_consistent());
    }

    #[test]
    fn nu_is_least_non_residue() {
        let e = entry("eabcls4-nu-KeqG").unwrap();
        assert_eq!(e.parameters(5), vec![("nu", 2)]);
        assert_eq!(e.parameters(7), vec![("nu", 3)]);
        let g = e.build(5).unwrap();
        // [α₅, α₂] = α₆^ν
        assert_eq!(g.comm_tail(4, 1).syllables(), &[(5, 2)]);
    }

    #[test]
    fn maxclass_needs_odd_prime() {
        let e = entry("maxclass-p4").unwrap();
        assert!(!e.admits(2));
        // over F_2 the unipotent action of g1 has order 4, not 2
        let bad = PresentationBuilder::new(2, 4)
            .unwrap()
            .comm(2, 1, &[(3, 1)])
            .unwrap()
            .comm(3, 1, &[(4, 1)])
            .unwrap()
            .build()
            .unwrap();
        assert!(!bad.consistency_check().is_consistent());
    }
}
