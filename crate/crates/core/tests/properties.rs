mod common;

use std::sync::OnceLock;

use pcgroup::analysis::{
    closure, lower_central_series, nilpotency_class, upper_central_series, Analysis, FiniteGroup,
    PcGroup,
};
use pcgroup::verifier::{predict_theorem_a, Branch, InvariantReport, Prediction};
use pcgroup::{Element, PcPresentation};
use proptest::prelude::*;

fn fixtures() -> &'static [(String, PcGroup)] {
    static CELL: OnceLock<Vec<(String, PcGroup)>> = OnceLock::new();
    CELL.get_or_init(|| {
        let mut all = common::fixtures(&[2, 3, 5]);
        all.retain(|(_, g)| g.log_order() <= 5);
        all.push(("eabcls5@5".into(), common::group("eabcls5", 5)));
        all
    })
}

/// A fixture index and three element ids in it.
fn triple() -> impl Strategy<Value = (usize, u32, u32, u32)> {
    (0..fixtures().len()).prop_flat_map(|i| {
        let n = fixtures()[i].1.order() as u32;
        (Just(i), 0..n, 0..n, 0..n)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(512))]

    #[test]
    fn group_axioms((i, a, b, c) in triple()) {
        let g = &fixtures()[i].1;
        let one = g.identity();
        prop_assert_eq!(g.mul(g.mul(a, b), c), g.mul(a, g.mul(b, c)));
        prop_assert_eq!(g.mul(a, one), a);
        prop_assert_eq!(g.mul(one, a), a);
        prop_assert_eq!(g.mul(a, g.inv(a)), one);
        prop_assert_eq!(g.pow(a, g.order() as u64), one);
    }

    #[test]
    fn table_agrees_with_collector((i, a, b, _) in triple()) {
        let g = &fixtures()[i].1;
        let pres = g.presentation();
        let (u, v) = (g.exponents(a), g.exponents(b));
        let prod = pres.multiply(&u, &v).unwrap();
        prop_assert_eq!(g.id(&prod).unwrap(), g.mul(a, b));
        prop_assert_eq!(g.id(&pres.inverse(&u).unwrap()).unwrap(), g.inv(a));
        prop_assert_eq!(g.id(&pres.commutator(&u, &v).unwrap()).unwrap(), g.comm(a, b));
        prop_assert_eq!(g.id(&pres.conjugate(&u, &v).unwrap()).unwrap(), g.conj(a, b));
    }

    #[test]
    fn commutators_lie_in_gamma2((i, a, b, _) in triple()) {
        let g = &fixtures()[i].1;
        let gamma2 = &lower_central_series(g)[1];
        prop_assert!(gamma2.contains(g.comm(a, b)));
    }

    #[test]
    fn negative_powers_invert((i, a, _, _) in triple(), k in 1i64..60) {
        let g = &fixtures()[i].1;
        let pres = g.presentation();
        let u = g.exponents(a);
        let pos = pres.power(&u, k).unwrap();
        let neg = pres.power(&u, -k).unwrap();
        prop_assert!(pres.multiply(&pos, &neg).unwrap().is_identity());
    }

    #[test]
    fn serialization_round_trips(i in 0..fixtures().len()) {
        let pres = fixtures()[i].1.presentation();
        let back = PcPresentation::parse(&pres.serialize()).unwrap();
        prop_assert_eq!(&back, pres);
    }

    #[test]
    fn earlier_clauses_take_precedence(report in order_p7_report()) {
        if let Ok((pred, branch)) = predict_theorem_a(&report) {
            let first = first_matching_hypothesis(&report);
            match (branch, first) {
                (Some(Branch::A(k)), Some(f)) => prop_assert_eq!(k, f),
                (None, None) => prop_assert!(matches!(pred, Prediction::OutOfScope(_))),
                (b, f) => prop_assert!(false, "branch {:?}, first hypothesis {:?}", b, f),
            }
        }
    }
}

/// Plausible invariant profiles of groups of order `p⁷`, `p ≥ 5`.
fn order_p7_report() -> impl Strategy<Value = InvariantReport> {
    (
        prop::sample::select(vec![5u32, 7, 11]),
        2u32..=6,
        1u32..=5,
        any::<(bool, bool, bool)>(),
        1u32..=2,
        0u32..=3,
    )
        .prop_flat_map(|(p, c, d, flags, log_exp, z_step)| {
            let top = 6 - c;
            (Just((p, c, d, flags, log_exp, z_step)), 0..=top)
        })
        .prop_map(|((p, c, d, (abelian, z_in, h), log_exp, z_step), extra)| {
            let c = c as usize;
            let log_g2 = (c as u32 - 1 + extra).min(5);
            let mut gamma_logs = vec![7, log_g2];
            let mut cur = log_g2;
            for i in 3..=c {
                let remaining = (c - i + 1) as u32;
                cur = (cur - 1).max(remaining);
                gamma_logs.push(cur);
            }
            gamma_logs.truncate(c);
            let mut zeta_logs = vec![0];
            for i in 1..c {
                zeta_logs.push((i as u32 + z_step).min(6));
            }
            zeta_logs.push(7);
            InvariantReport {
                prime: p,
                log_order: 7,
                class: c,
                gamma_logs,
                zeta_logs,
                d_gamma2: d.min(log_g2),
                log_exp_gamma2: log_exp,
                gamma2_abelian: abelian,
                center_in_gamma2: z_in,
                central_h_exists: h,
                k_equals_gamma2: None,
                commutator_length_le2: None,
            }
        })
}

/// Index of the first clause whose hypotheses (not its conclusion) hold.
fn first_matching_hypothesis(r: &InvariantReport) -> Option<u8> {
    let (c, d, g2) = (r.class, r.d_gamma2, r.gamma_log(2));
    if d <= 3 || c == 6 {
        Some(1)
    } else if g2 == 4 && d == 4 {
        Some(2)
    } else if c == 5 && g2 == 5 && d == 4 && r.log_exp_gamma2 == 2 {
        Some(3)
    } else if c == 4 && g2 == 5 {
        Some(4)
    } else if c == 5 && g2 == 5 && r.log_exp_gamma2 == 1 {
        Some(if r.gamma2_abelian { 5 } else { 6 })
    } else {
        None
    }
}

#[test]
fn lower_and_upper_series_agree() {
    for (name, g) in fixtures() {
        let p = g.prime();
        let gamma = lower_central_series(g);
        let zeta = upper_central_series(g);
        let c = nilpotency_class(g);
        assert_eq!(gamma.len(), c + 1, "{name}");
        assert_eq!(zeta.len(), c + 1, "{name}");
        for w in gamma.windows(2) {
            assert!(w[1].is_subgroup_of(&w[0]), "{name}");
        }
        for w in zeta.windows(2) {
            assert!(w[0].is_subgroup_of(&w[1]), "{name}");
        }
        // γ_{c+1-i} ≤ Z_i
        for i in 0..=c {
            assert!(
                gamma[c - i].is_subgroup_of(&zeta[i]),
                "{name}: γ{} ≰ Z{i}",
                c + 1 - i
            );
        }
        for s in gamma.iter().chain(&zeta) {
            assert_eq!(p.pow(s.log_order(p)) as usize, s.order(), "{name}");
        }
    }
}

#[test]
fn k_generates_gamma2_on_fixtures() {
    for (name, g) in fixtures() {
        let a = Analysis::new(g);
        assert_eq!(
            closure(g, a.commutator_set().members()),
            *a.gamma2(),
            "{name}"
        );
    }
}

#[test]
fn element_lookup_round_trips() {
    for (_, g) in fixtures() {
        for a in g.elements() {
            let e: Element = g.exponents(a);
            assert_eq!(g.id(&e).unwrap(), a);
        }
    }
}
