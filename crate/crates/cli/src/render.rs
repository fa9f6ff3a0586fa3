//! Plain-text renderings and the JSON shapes that have no library type.

use std::fmt::Write;

use pcgroup::analysis::{Analysis, ConjectureReport, FiniteGroup};
use pcgroup::catalog::CatalogEntry;
use pcgroup::fp_arith::BinaryQuadraticForm;
use pcgroup::presentation::{ConsistencyReport, Overlap};
use pcgroup::verifier::{AnalysisReport, Outcome, Verdict};
use pcgroup::{Element, PcGroup, PcPresentation};
use serde::Serialize;

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn list(xs: &[Element]) -> String {
    if xs.is_empty() {
        return "none".into();
    }
    xs.iter()
        .map(Element::to_string)
        .collect::<Vec<_>>()
        .join(", ")
}

fn join<T: ToString>(xs: &[T]) -> String {
    xs.iter().map(T::to_string).collect::<Vec<_>>().join(" ")
}

#[derive(Serialize)]
pub struct ValidateJson<'a> {
    prime: u32,
    gens: usize,
    order: u64,
    consistent: bool,
    failures: &'a [Overlap],
}

impl<'a> ValidateJson<'a> {
    pub fn new(pres: &PcPresentation, report: &'a ConsistencyReport) -> Self {
        Self {
            prime: pres.prime(),
            gens: pres.gens(),
            order: pres.order(),
            consistent: report.is_consistent(),
            failures: &report.failures,
        }
    }
}

pub fn validate(pres: &PcPresentation, report: &ConsistencyReport, out: &mut String) {
    let (p, n) = (pres.prime(), pres.gens());
    if report.is_consistent() {
        let _ = writeln!(
            out,
            "consistent: {n} generators, order {p}^{n} = {}",
            pres.order()
        );
        return;
    }
    let _ = writeln!(
        out,
        "inconsistent: {} failing overlap(s)",
        report.failures.len()
    );
    for f in &report.failures {
        let _ = writeln!(out, "  {f}");
    }
}

pub fn analysis(r: &AnalysisReport, out: &mut String) {
    let _ = writeln!(out, "order          {}", r.order);
    let _ = writeln!(out, "class          {}", r.class);
    let _ = writeln!(out, "gamma orders   {}", join(&r.series.gamma));
    let _ = writeln!(out, "zeta orders    {}", join(&r.series.zeta));
    let _ = writeln!(out, "d(γ2)          {}", r.d_gamma2);
    let _ = writeln!(out, "exp(γ2)        {}", r.exp_gamma2);
    let central_h = match &r.central_h {
        Some(gens) => format!("<{}>", list(gens)),
        None => "none".into(),
    };
    let _ = writeln!(out, "central H      {central_h}");
    match (r.k_size, r.equal, r.commutator_length_le2) {
        (Some(k), Some(eq), Some(len)) => {
            let _ = writeln!(out, "|K(G)|         {k}");
            let _ = writeln!(out, "K = γ2         {}", yes_no(eq));
            let _ = writeln!(out, "length ≤ 2     {}", yes_no(len));
            let _ = writeln!(out, "witnesses      {}", list(&r.witnesses));
        }
        _ => {
            let _ = writeln!(out, "K(G)           not enumerated");
        }
    }
}

#[derive(Serialize)]
pub struct KsetJson {
    k_size: usize,
    gamma2_order: usize,
    equal: bool,
    commutator_length_le2: bool,
    witness_count: usize,
    witnesses: Vec<Element>,
}

impl KsetJson {
    pub fn new(a: &Analysis<'_, PcGroup>, witness_limit: usize) -> Self {
        let g = a.group();
        let all = a.witnesses();
        Self {
            k_size: a.commutator_set().len(),
            gamma2_order: a.gamma2().order(),
            equal: a.k_equals_gamma2(),
            commutator_length_le2: a.commutator_length_le2(),
            witness_count: all.len(),
            witnesses: all
                .into_iter()
                .take(witness_limit)
                .map(|x| g.exponents(x))
                .collect(),
        }
    }
}

pub fn kset(r: &KsetJson, out: &mut String) {
    let _ = writeln!(out, "|K(G)|         {}", r.k_size);
    let _ = writeln!(out, "|γ2(G)|        {}", r.gamma2_order);
    let _ = writeln!(out, "K = γ2         {}", yes_no(r.equal));
    let _ = writeln!(out, "length ≤ 2     {}", yes_no(r.commutator_length_le2));
    let _ = writeln!(
        out,
        "non-commutators {} (showing {})",
        r.witness_count,
        r.witnesses.len()
    );
    for w in &r.witnesses {
        let _ = writeln!(out, "  {w}");
    }
}

pub fn verdict(v: &Verdict, out: &mut String) {
    let branch = v
        .branch
        .map(|b| b.to_string())
        .unwrap_or_else(|| "-".into());
    let _ = writeln!(out, "prediction     {} [{branch}]", v.prediction);
    let truth = match v.truth {
        Some(true) => "K = γ2",
        Some(false) => "K ≠ γ2",
        None => "not enumerated",
    };
    let _ = writeln!(out, "enumeration    {truth}");
    if let Some(len) = v.commutator_length_le2 {
        let _ = writeln!(out, "length ≤ 2     {}", yes_no(len));
    }
    if v.truth == Some(false) {
        let _ = writeln!(out, "witnesses      {}", list(&v.witnesses));
    }
    let outcome = match &v.outcome {
        Outcome::Match => "match".to_string(),
        Outcome::Mismatch(why) => format!("MISMATCH: {why}"),
        Outcome::Unchecked => "unchecked".to_string(),
    };
    let _ = writeln!(out, "outcome        {outcome}");
}

pub fn catalog(entries: &[CatalogEntry], out: &mut String) {
    let width = entries.iter().map(|e| e.id.len()).max().unwrap_or(0);
    for e in entries {
        let _ = writeln!(
            out,
            "{:<width$}  {:<8}  {}  [{}]",
            e.id,
            e.constraint(),
            e.description,
            e.expected.claims()
        );
    }
}

#[derive(Serialize)]
pub struct QuadformJson {
    form: String,
    p: u64,
    discriminant: u64,
    target: Option<i64>,
    solution: Option<(u64, u64)>,
}

impl QuadformJson {
    pub fn new(form: &BinaryQuadraticForm, represents: Option<i64>) -> Self {
        let solution = match represents {
            Some(r) => form.representation(r),
            None => form.nontrivial_zero(),
        };
        Self {
            form: form.to_string(),
            p: form.modulus(),
            discriminant: form.discriminant(),
            target: represents,
            solution,
        }
    }
}

pub fn quadform(r: &QuadformJson, out: &mut String) {
    let line = match (r.target, r.solution) {
        (None, Some((l, m))) => format!("nontrivial zero (λ, μ) = ({l}, {m})"),
        (None, None) => "no nontrivial zero".to_string(),
        (Some(t), Some((l, m))) => format!("represents {t}: (λ, μ) = ({l}, {m})"),
        (Some(t), None) => format!("does not represent {t}"),
    };
    let _ = writeln!(out, "{}: {line}", r.form);
}

pub fn conjecture(r: &ConjectureReport, p: u32, out: &mut String) {
    let _ = writeln!(out, "normal subgroups checked  {}", r.subgroups_checked);
    let _ = writeln!(out, "violations                {}", r.violations.len());
    for v in &r.violations {
        let _ = writeln!(
            out,
            "  N of order {p}^{} = <{}>, witness {}",
            v.log_order,
            list(&v.generators),
            v.witness
        );
    }
}
