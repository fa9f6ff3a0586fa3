//! Predicts from a handful of invariants whether every element of `γ₂(G)`
//! is a commutator, for groups of order `p⁷`, and checks the prediction
//! against the commutator set computed by enumeration.
//!
//! For `p ≥ 5` the prediction walks six clauses in order; the first whose
//! hypotheses match decides. For `p ∈ {2, 3}` a fixed list of profiles is
//! known to give `K(G) ≠ γ₂(G)`, and every other profile gives equality.

use std::fmt;

use serde::Serialize;

use crate::analysis::{log_p, Analysis, FiniteGroup, PcGroup};
use crate::collector::Element;
use crate::error::{Error, Result};

/// Invariants feeding the prediction. Subgroup sizes are `log_p`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InvariantReport {
    pub prime: u32,
    pub log_order: u32,
    pub class: usize,
    /// `log_p |γᵢ|` for `i = 1..=c`.
    pub gamma_logs: Vec<u32>,
    /// `log_p |Zᵢ|` for `i = 0..=c`.
    pub zeta_logs: Vec<u32>,
    pub d_gamma2: u32,
    pub log_exp_gamma2: u32,
    pub gamma2_abelian: bool,
    pub center_in_gamma2: bool,
    pub central_h_exists: bool,
    /// Filled only when the commutator set was enumerated.
    pub k_equals_gamma2: Option<bool>,
    pub commutator_length_le2: Option<bool>,
}

impl InvariantReport {
    /// `log_p |γᵢ|`, zero past the class.
    pub fn gamma_log(&self, i: usize) -> u32 {
        self.gamma_logs.get(i.wrapping_sub(1)).copied().unwrap_or(0)
    }

    /// `log_p |Zᵢ|`, saturating at the group order.
    pub fn zeta_log(&self, i: usize) -> u32 {
        self.zeta_logs.get(i).copied().unwrap_or(self.log_order)
    }
}

/// Computes the invariant report. With `brute_force`, also enumerates
/// `K(G)` and tests commutator length.
pub fn profile<G: FiniteGroup + ?Sized>(a: &Analysis<'_, G>, brute_force: bool) -> InvariantReport {
    let g = a.group();
    let p = g.prime();
    let gamma = a.lower_central_series();
    let zeta = a.upper_central_series();
    let class = a.class();
    let (k_equals_gamma2, commutator_length_le2) = if brute_force {
        (Some(a.k_equals_gamma2()), Some(a.commutator_length_le2()))
    } else {
        (None, None)
    };
    InvariantReport {
        prime: p,
        log_order: g.log_order(),
        class,
        gamma_logs: gamma[..class.max(1)]
            .iter()
            .map(|s| s.log_order(p))
            .collect(),
        zeta_logs: zeta.iter().map(|s| s.log_order(p)).collect(),
        d_gamma2: a.d_gamma2(),
        log_exp_gamma2: log_p(a.exp_gamma2() as usize, p),
        gamma2_abelian: a.gamma2_abelian(),
        center_in_gamma2: a.center().is_subgroup_of(a.gamma2()),
        central_h_exists: a.central_h().is_some(),
        k_equals_gamma2,
        commutator_length_le2,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "reason", rename_all = "kebab-case")]
pub enum Prediction {
    Equal,
    NotEqual,
    OutOfScope(String),
}

impl fmt::Display for Prediction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Prediction::Equal => f.write_str("K = γ2"),
            Prediction::NotEqual => f.write_str("K ≠ γ2"),
            Prediction::OutOfScope(r) => write!(f, "out of scope ({r})"),
        }
    }
}

/// The clause that decided a prediction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "theorem", content = "clause")]
pub enum Branch {
    /// Clauses 1 to 6 for `p ≥ 5`.
    A(u8),
    /// `"2^7"`, `"i"` … `"v"`, or `"none"` when no listed profile matches.
    B(&'static str),
}

impl fmt::Display for Branch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Branch::A(n) => write!(f, "A({n})"),
            Branch::B(c) => write!(f, "B({c})"),
        }
    }
}

fn equal_if(not_equal: bool) -> Prediction {
    if not_equal {
        Prediction::NotEqual
    } else {
        Prediction::Equal
    }
}

/// Prediction for `p ≥ 5`. Profiles that no group of order `p⁷` can have
/// are reported as [`Error::ImpossibleProfile`].
pub fn predict_theorem_a(r: &InvariantReport) -> Result<(Prediction, Option<Branch>)> {
    if r.prime < 5 {
        return Ok((Prediction::OutOfScope(format!("p = {} < 5", r.prime)), None));
    }
    if r.log_order != 7 {
        return Ok((
            Prediction::OutOfScope(format!("order p^{} is not p^7", r.log_order)),
            None,
        ));
    }
    let (c, g2, d, e) = (r.class, r.gamma_log(2), r.d_gamma2, r.log_exp_gamma2);
    let z = r.zeta_log(1);

    if d <= 3 || c == 6 {
        return Ok((Prediction::Equal, Some(Branch::A(1))));
    }
    if g2 == 4 && d == 4 {
        let class3 = c == 3 && r.center_in_gamma2 && z == 3;
        let class4 = c == 4 && !r.center_in_gamma2 && z == 3;
        return Ok((equal_if(class3 || class4), Some(Branch::A(2))));
    }
    if c == 5 && g2 == 5 && d == 4 && e == 2 {
        return Ok((Prediction::NotEqual, Some(Branch::A(3))));
    }
    if c == 4 && g2 == 5 {
        if !r.gamma2_abelian {
            return Err(Error::ImpossibleProfile(
                "class 4 with |γ2| = p^5 forces γ2 abelian".into(),
            ));
        }
        if e != 1 {
            return Err(Error::ImpossibleProfile(
                "class 4 with abelian γ2 of order p^5 forces exponent p".into(),
            ));
        }
        return Ok((equal_if(r.central_h_exists), Some(Branch::A(4))));
    }
    if c == 5 && g2 == 5 && r.gamma2_abelian && e == 1 {
        return Ok((Prediction::NotEqual, Some(Branch::A(5))));
    }
    if c == 5 && g2 == 5 && !r.gamma2_abelian && e == 1 {
        let not_equal = r.gamma_log(5) == 1 && r.zeta_log(2) == 3;
        return Ok((equal_if(not_equal), Some(Branch::A(6))));
    }
    Ok((Prediction::OutOfScope("no clause applies".into()), None))
}

/// Prediction for `p ∈ {2, 3}`.
pub fn predict_theorem_b(r: &InvariantReport) -> (Prediction, Option<Branch>) {
    if r.log_order != 7 || !(r.prime == 2 || r.prime == 3) {
        return (
            Prediction::OutOfScope(format!(
                "order {}^{} is not 2^7 or 3^7",
                r.prime, r.log_order
            )),
            None,
        );
    }
    let (c, g2, d, e, ab) = (
        r.class,
        r.gamma_log(2),
        r.d_gamma2,
        r.log_exp_gamma2,
        r.gamma2_abelian,
    );
    let (z, z2, g5) = (r.zeta_log(1), r.zeta_log(2), r.gamma_log(5));
    let clause = if r.prime == 2 {
        (c == 3 && ab && d == 3 && g2 == 4 && z == 3).then_some("2^7")
    } else if c == 5 && d == 3 && !ab && g5 == 1 && z2 == 3 {
        Some("i")
    } else if c == 5 && ab && d == 3 && g2 == 5 && e == 2 && z <= 2 {
        Some("ii")
    } else if c == 4 && ab && d == 3 && g2 == 4 && z == 3 {
        Some("iii")
    } else if c == 4 && ab && d == 4 && e == 2 {
        Some("iv")
    } else if c == 3 && ab && d == 4 && e == 1 && z == 3 {
        Some("v")
    } else {
        None
    };
    match clause {
        Some(c) => (Prediction::NotEqual, Some(Branch::B(c))),
        None => (Prediction::Equal, Some(Branch::B("none"))),
    }
}

/// Routes to the prediction for the report's prime.
pub fn predict(r: &InvariantReport) -> Result<(Prediction, Option<Branch>)> {
    if r.prime <= 3 {
        Ok(predict_theorem_b(r))
    } else {
        predict_theorem_a(r)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", content = "detail", rename_all = "kebab-case")]
pub enum Outcome {
    /// Prediction agrees with enumeration.
    Match,
    Mismatch(String),
    /// Out of scope, or enumeration was skipped.
    Unchecked,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub prediction: Prediction,
    pub branch: Option<Branch>,
    /// Enumerated `K(G) = γ₂(G)`.
    pub truth: Option<bool>,
    pub commutator_length_le2: Option<bool>,
    /// Elements of `γ₂(G)` that are not commutators, up to the limit.
    pub witnesses: Vec<Element>,
    pub outcome: Outcome,
}

/// Profiles `g`, predicts, and compares with enumeration when
/// `brute_force` is set. For `p ≥ 5` a group with `K(G) ≠ γ₂(G)` must also
/// have commutator length at most 2.
pub fn verify(g: &PcGroup, brute_force: bool, witness_limit: usize) -> Result<Verdict> {
    let a = Analysis::new(g);
    let report = profile(&a, brute_force);
    let (prediction, branch) = predict(&report)?;
    let witnesses = if brute_force {
        a.witnesses()
            .into_iter()
            .take(witness_limit)
            .map(|x| g.element(x))
            .collect()
    } else {
        Vec::new()
    };
    let truth = report.k_equals_gamma2;
    let outcome = match (&prediction, truth) {
        (Prediction::OutOfScope(_), _) | (_, None) => Outcome::Unchecked,
        (pred, Some(equal)) => {
            let predicted_equal = *pred == Prediction::Equal;
            let label = branch.map(|b| b.to_string()).unwrap_or_default();
            if predicted_equal != equal {
                Outcome::Mismatch(format!(
                    "branch {label} predicts {pred}, enumeration gives {}",
                    if equal { "K = γ2" } else { "K ≠ γ2" }
                ))
            } else if !equal && report.prime >= 5 && report.commutator_length_le2 == Some(false) {
                Outcome::Mismatch(format!("branch {label}: commutator length exceeds 2"))
            } else {
                Outcome::Match
            }
        }
    };
    Ok(Verdict {
        prediction,
        branch,
        truth,
        commutator_length_le2: report.commutator_length_le2,
        witnesses,
        outcome,
    })
}

/// Series of subgroup orders.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SeriesReport {
    /// `|γ₁|, |γ₂|, …, |γ_{c+1}| = 1`.
    pub gamma: Vec<u64>,
    /// `|Z₀| = 1, |Z₁|, …, |Z_c|`.
    pub zeta: Vec<u64>,
}

/// Machine-readable summary of one group.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AnalysisReport {
    pub prime: u32,
    pub order: u64,
    pub class: usize,
    pub series: SeriesReport,
    pub d_gamma2: u32,
    pub exp_gamma2: u64,
    pub k_size: Option<usize>,
    pub equal: Option<bool>,
    pub witnesses: Vec<Element>,
    #[serde(rename = "central_H")]
    pub central_h: Option<Vec<Element>>,
    pub commutator_length_le2: Option<bool>,
}

impl AnalysisReport {
    pub fn new<G: FiniteGroup + ?Sized>(
        a: &Analysis<'_, G>,
        brute_force: bool,
        witness_limit: usize,
    ) -> Self {
        let g = a.group();
        let sizes = |s: &[crate::analysis::Subgroup]| s.iter().map(|h| h.order() as u64).collect();
        let (k_size, equal, witnesses, length) = if brute_force {
            (
                Some(a.commutator_set().len()),
                Some(a.k_equals_gamma2()),
                a.witnesses()
                    .into_iter()
                    .take(witness_limit)
                    .map(|x| g.exponents(x))
                    .collect(),
                Some(a.commutator_length_le2()),
            )
        } else {
            (None, None, Vec::new(), None)
        };
        Self {
            prime: g.prime(),
            order: g.order() as u64,
            class: a.class(),
            series: SeriesReport {
                gamma: sizes(a.lower_central_series()),
                zeta: sizes(a.upper_central_series()),
            },
            d_gamma2: a.d_gamma2(),
            exp_gamma2: a.exp_gamma2(),
            k_size,
            equal,
            witnesses,
            central_h: a
                .central_h()
                .map(|h| h.generators().iter().map(|&x| g.exponents(x)).collect()),
            commutator_length_le2: length,
        }
    }
}
