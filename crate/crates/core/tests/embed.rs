use minw::embed::*;
use minw::rational::{parse_q, q, q0, qf, Q};

fn case(s: &str) -> EmbeddingCase {
    instantiate(&CaseId::parse(s).unwrap()).unwrap()
}

fn qs(s: &str) -> Q {
    parse_q(s).unwrap()
}

/// h_mu for weights given as coordinate strings, one per component ("-" on the centre).
fn h(c: &EmbeddingCase, k: &Q, mus: &[&str]) -> Q {
    let mu: Vec<_> = c
        .components
        .iter()
        .zip(mus)
        .map(|(comp, m)| comp.algebra().map(|a| a.parse_weight(m).unwrap()))
        .collect();
    h_mu(c, k, &mu).unwrap()
}

#[test]
fn central_charges_agree_at_every_conformal_level() {
    let mut checked = 0;
    for id in all_cases(6) {
        let c = instantiate(&id).unwrap();
        for k in conformal_levels(&c) {
            let (cw, cs) = central_charges(&c, &k).unwrap();
            assert_eq!(cw, cs, "{} at k = {}", c.name(), k);
            checked += 1;
        }
    }
    assert!(checked > 60, "only {checked} conformal levels on the grid");
    let (cw, cs) = central_charges(&case("sl(4)"), &qf(-8, 3)).unwrap();
    assert_eq!((cw, cs), (q(-14), q(-14)));
}

#[test]
fn central_charges_vanish_where_all_components_collapse() {
    // G2 at -4/3: the sl(2) level is zero, so c_sug is the empty sum.
    let c = case("G2");
    let ks = component_levels(&c, &qf(-5, 3)).unwrap();
    assert_eq!(ks, vec![q0()]);
    assert_eq!(central_charges(&c, &qf(-5, 3)).unwrap().1, q0());
}

#[test]
fn component_levels_divide_p() {
    for id in all_cases(6) {
        let c = instantiate(&id).unwrap();
        // k_i(k) = k + shift_i vanishes at a root of p
        let ks = component_levels(&c, &q(1000)).unwrap();
        for (ki, comp) in ks.iter().zip(&c.components) {
            let root = q(1000) - ki;
            assert_eq!(c.p(&root), q0(), "{}: component {} level does not divide p", c.name(), comp.name);
        }
    }
}

#[test]
fn collapsing_levels_table() {
    let cases: &[(&str, &[&str])] = &[
        ("sl(5|2)", &["-3/2", "-1"]),
        ("G2", &["-5/3", "-4/3"]),
        ("D(2,1;1/4)", &["-5/4", "1/4"]),
        ("E6", &["-4", "-3"]),
        ("E7", &["-6", "-4"]),
        ("E8", &["-10", "-6"]),
        ("F4", &["-3", "-5/2"]),
        ("F(4)", &["-2/3", "2/3"]),
        ("G(3)", &["-3/4", "1/2"]),
        ("psl(3|3)", &["-1"]),
        ("spo(6|1)", &["-9/4", "-1/2"]),
        ("osp(8|2)", &["-2", "-1"]),
        ("F(4)/D(2,1;2)", &["-3/2", "-1"]),
        ("G(3)/osp(3|2)", &["-4/3", "-2/3"]),
    ];
    for (name, want) in cases {
        let want: Vec<Q> = want.iter().map(|s| qs(s)).collect();
        assert_eq!(collapsing_levels(&case(name)), want, "{name}");
    }
    // the critical level is never reported: sl(2|3) has -h = 1, p roots -1 and 1/2
    let c = case("sl(4|3)");
    assert!(!collapsing_levels(&c).contains(&-c.h_dual.clone()));
}

#[test]
fn dual_coxeter_numbers_of_rows() {
    for (name, h) in [("sl(4)", "4"), ("F(4)", "-2"), ("spo(6|1)", "7/2"), ("osp(9|2)", "5"), ("G(3)", "-3/2"), ("sl(2|5)", "-3")] {
        assert_eq!(case(name).h_dual, qs(h), "{name}");
    }
}

#[test]
fn conformal_level_classification() {
    assert!(conformal_levels(&case("sl(3)")).is_empty());
    assert!(conformal_levels(&case("sp(4)")).is_empty());
    assert!(conformal_levels(&case("F(4)/D(2,1;2)")).is_empty());
    assert!(conformal_levels(&case("osp(7|2)")).is_empty());
    assert!(conformal_levels(&case("sl(4|1)")).is_empty());
    for a in ["1/2", "-1/2", "-3/2"] {
        assert!(conformal_levels(&case(&format!("D(2,1;{a})"))).is_empty());
    }
    for n in [6, 8, 10] {
        let c = case(&format!("sp({n})"));
        assert_eq!(conformal_levels(&c), vec![-q(2) * &c.h_dual / q(3)]);
    }
    for n in [0, 2, 4] {
        let c = case(&format!("osp({}|{n})", n + 8));
        assert_eq!(conformal_levels(&c), vec![-(&c.h_dual - q(1)) / q(2)], "{}", c.name());
    }
    assert_eq!(conformal_levels(&case("sl(4)")), vec![qf(-8, 3), qf(-3, 2)]);
    assert_eq!(conformal_levels(&case("G(3)")), vec![qf(5, 4)]);
    assert_eq!(conformal_levels(&case("sl(2|3)")), vec![qf(2, 3)]);
    assert_eq!(conformal_levels(&case("sl(2|1)")), vec![qf(-2, 3)]);
}

#[test]
fn reference_h_values_lie_cases() {
    // D_n
    for n in 5..9i64 {
        let c = case(&format!("so({})", 2 * n));
        let k = qf(3, 2) - q(n);
        assert_eq!(h(&c, &k, &["2w1", "0"]), qf(4, 3));
        assert_eq!(h(&c, &k, &["0", "e3+e4"]), qf(4 * n - 12, 2 * n - 5));
        assert_eq!(h(&c, &k, &["0", "2e3"]), qf(4 * n - 8, 2 * n - 5));
        assert_eq!(h(&c, &k, &["2w1", "e3+e4"]), qf(4, 3) + qf(4 * n - 12, 2 * n - 5));
    }
    // B_n
    for n in [4i64, 6, 7] {
        let c = case(&format!("so({})", 2 * n + 1));
        let k = q(1 - n);
        assert_eq!(h(&c, &k, &["0", "e3+e4"]), qf(2 * n - 5, n - 2));
        assert_eq!(h(&c, &k, &["2w1", "2e3"]), qf(4, 3) + qf(2 * n - 3, n - 2));
    }
    let g2 = case("G2");
    for i in 1..=3i64 {
        assert_eq!(h(&g2, &qf(-3, 2), &[&format!("{}w1", 2 * i)]), qf(2 * i * (i + 1), 5));
    }
    let f4 = case("F4");
    assert_eq!(h(&f4, &q(-4), &["2w1"]), qf(8, 5));
    assert_eq!(h(&f4, &q(-4), &["2w3"]), qf(18, 5));
    let e6 = case("E6");
    for (w, v) in [("w1+w5", qf(12, 7)), ("w2+w4", qf(20, 7)), ("2w3", qf(24, 7))] {
        assert_eq!(h(&e6, &qf(-11, 2), &[w]), v);
    }
    let e7 = case("E7");
    for (w, v) in [("2w6", qf(36, 11)), ("w4", qf(32, 11)), ("w2", qf(20, 11))] {
        assert_eq!(h(&e7, &qf(-17, 2), &[w]), v);
    }
    let e8 = case("E8");
    for (w, v) in [("2w7", qf(60, 19)), ("w6", qf(56, 19)), ("w1", qf(36, 19))] {
        assert_eq!(h(&e8, &qf(-29, 2), &[w]), v);
    }
    let f = case("F(4)");
    for (w, v) in [("2w3", qf(24, 7)), ("w2", qf(20, 7)), ("w1", qf(12, 7))] {
        assert_eq!(h(&f, &qf(3, 2), &[w]), v);
    }
    // osp(4|2n)
    for n in 2..6i64 {
        let c = case(&format!("osp(4|{})", 2 * n));
        let k = q(n) - qf(1, 2);
        assert_eq!(h(&c, &k, &["2w1", "0"]), qf(4, 3));
        assert_eq!(h(&c, &k, &["0", "w2"]), qf(4 * n, 2 * n + 1));
        assert_eq!(h(&c, &k, &["0", "2w1"]), qf(4 * n + 4, 2 * n + 1));
    }
    // C_{n+1}
    for n in 2..6i64 {
        let c = case(&format!("sp({})", 2 * n + 2));
        let k = qf(-2 * (n + 2), 3);
        assert_eq!(h(&c, &k, &["2w1"]), qf(6 * (n + 1), 2 * n + 1));
        assert_eq!(h(&c, &k, &["w2"]), qf(6 * n, 2 * n + 1));
    }
    // spo(2|2n), spo(2|2n+1)
    for n in 3..6i64 {
        let c = case(&format!("spo(2|{})", 2 * n));
        let k = qf(2 * (n - 2), 3);
        assert_eq!(h(&c, &k, &["2e1"]), q(3) + qf(3, 2 * n - 1));
        assert_eq!(h(&c, &k, &["e1+e2"]), q(3) - qf(3, 2 * n - 1));
    }
    for n in 2..6i64 {
        let c = case(&format!("spo(2|{})", 2 * n + 1));
        let k = qf(2 * n - 3, 3);
        assert_eq!(h(&c, &k, &["2e1"]), q(3) + qf(3, 2 * n));
        assert_eq!(h(&c, &k, &["e1+e2"]), q(3) - qf(3, 2 * n));
    }
    let c = case("spo(2|3)");
    assert_eq!(h(&c, &qf(-1, 3), &["2w1"]), qf(3, 2));
    assert_eq!(h(&c, &qf(-1, 3), &["4w1"]), qf(9, 2));
}

#[test]
fn reference_h_values_center_cases() {
    for n in 4..10i64 {
        let c = case(&format!("sl({n})"));
        for k in conformal_levels(&c) {
            let mu = format!("w1+w{}", n - 3);
            let mu = if n == 4 { "2w1".to_string() } else { mu };
            assert_eq!(h(&c, &k, &["-", &mu]), q(n - 2) / (q(n) + &k - q(1)), "sl({n}) at {k}");
        }
    }
    for (m, n) in [(3i64, 7i64), (5, 1), (6, 1), (5, 3), (7, 2), (3, 5)] {
        let c = case(&format!("sl({m}|{n})"));
        let mu = format!("d1-e{}", m - 1);
        let d = m - n;
        let k1 = qf(n - m + 1, 2);
        assert_eq!(h(&c, &k1, &["-", &mu]), q(2) * (q(1) - qf(1, d - 1)), "sl({m}|{n})");
        let k2 = qf(2 * (n - m), 3);
        if d != 3 {
            assert_eq!(h(&c, &k2, &["-", &mu]), q(3) * (q(1) + qf(1, d - 3)), "sl({m}|{n})");
        }
    }
    // the odd-root pairing behind these values
    let c = case("sl(6|2)");
    let a = c.components[1].algebra().unwrap();
    let mu = a.weight("d1-e5").unwrap();
    assert_eq!(minw::algebra::inner(&mu, &a.rho.scale(&q(2))).unwrap(), q(2 * (6 - 2 - 2)));
}

#[test]
fn reference_h_values_super_fixtures() {
    for (nn, m) in [(6i64, 1i64), (8, 1), (8, 3), (10, 1), (12, 3)] {
        let c = case(&format!("spo({nn}|{m})"));
        let k = qf(m - nn - 2, 3);
        let t = nn - m - 1;
        assert_eq!(h(&c, &k, &["2d2"]), q(3) * (q(1) + qf(1, t)));
        assert_eq!(h(&c, &k, &["d2+d3"]), q(3) * (q(1) - qf(1, t)));
    }
    for (m, n) in [(8i64, 2i64), (10, 2), (11, 2), (12, 4), (13, 2)] {
        let c = case(&format!("osp({m}|{n})"));
        let k = qf(n - m + 3, 2);
        let t = m - n - 5;
        assert_eq!(h(&c, &k, &["2e3", "e1-e2"]), qf(10, 3) + qf(2, t));
        assert_eq!(h(&c, &k, &["e3+e4", "e1-e2"]), qf(10, 3) - qf(2, t));
        assert_eq!(h(&c, &k, &["2e3", "0"]), q(2) * (q(1) + qf(1, t)));
        assert_eq!(h(&c, &k, &["e3+e4", "0"]), q(2) * (q(1) - qf(1, t)));
        assert_eq!(h(&c, &k, &["0", "e1-e2"]), qf(4, 3));
    }
}

#[test]
fn component_own_levels_match_vacuum_modules() {
    // k_i divided by the scale of the restricted form is the level in the component's own normalization
    let own = |name: &str, k: Q| -> Vec<Q> {
        let c = case(name);
        component_levels(&c, &k)
            .unwrap()
            .iter()
            .zip(&c.components)
            .filter_map(|(ki, comp)| comp.scale.as_ref().map(|r| ki / r))
            .collect()
    };
    for n in 5..8i64 {
        assert_eq!(own(&format!("so({})", 2 * n), qf(3, 2) - q(n)), vec![qf(-1, 2), qf(7, 2) - q(n)]);
    }
    assert_eq!(own("so(9)", q(-3)), vec![qf(-1, 2), q(-1)]);
    assert_eq!(own("G2", qf(-3, 2)), vec![qf(1, 2)]);
    assert_eq!(own("F4", q(-4)), vec![qf(-3, 2)]);
    assert_eq!(own("E6", qf(-11, 2)), vec![qf(-5, 2)]);
    assert_eq!(own("E7", qf(-17, 2)), vec![qf(-9, 2)]);
    assert_eq!(own("E8", qf(-29, 2)), vec![qf(-17, 2)]);
    assert_eq!(own("F(4)", qf(3, 2)), vec![qf(-13, 4)]);
    for n in 2..5i64 {
        assert_eq!(own(&format!("osp(4|{})", 2 * n), q(n) - qf(1, 2)), vec![qf(-1, 2), qf(-(2 * n + 3), 4)]);
        assert_eq!(own(&format!("sp({})", 2 * n + 2), qf(-2 * (n + 2), 3)), vec![qf(-(4 * n + 5), 6)]);
    }
    for n in 3..6i64 {
        assert_eq!(own(&format!("spo(2|{})", 2 * n), qf(2 * (n - 2), 3)), vec![qf(-(4 * n - 5), 3)]);
        assert_eq!(own(&format!("spo(2|{})", 2 * n + 1), qf(2 * n - 3, 3)), vec![qf(-(4 * n - 3), 3)]);
    }
    assert_eq!(own("spo(2|3)", qf(-1, 3)), vec![qf(-2, 3)]);
    // sl(4) at -8/3: the sl(2) level is k+1
    assert_eq!(component_levels(&case("sl(4)"), &qf(-8, 3)).unwrap()[1], qf(-5, 3));
    // sl(2n) at 1/2-n: the sl(2n-2) level is k+1
    for n in 2..6i64 {
        let k = qf(1, 2) - q(n);
        assert_eq!(component_levels(&case(&format!("sl({})", 2 * n)), &k).unwrap()[1], &k + q(1));
    }
}

#[test]
fn verdicts() {
    let v = |name: &str, k: Q| criterion_report(&case(name), &k);
    for n in 5..9i64 {
        let r = v(&format!("sl({n})"), qf(1 - n, 2));
        assert_eq!(r.status, Status::ConformalSemisimpleFinite);
        assert_eq!(r.evidence.len(), 1);
        let k = qf(1 - n, 2);
        assert_eq!(qs(&r.evidence[0].h), q(n - 2) / (q(n) + k - q(1)));
    }
    assert_eq!(v("sl(4)", qf(-8, 3)).status, Status::ConformalInfinite);
    assert_eq!(v("psl(2|2)", qf(1, 2)).status, Status::ConformalInfinite);
    let so8 = v("so(8)", qf(-5, 2));
    assert_eq!(so8.status, Status::ConformalSemisimpleFinite);
    assert!(so8.notes.iter().any(|n| n.contains("fusion-rule")));
    assert_eq!(v("D(2,1;1/4)", qf(1, 2)).status, Status::ConformalSemisimpleFinite);
    assert_eq!(v("osp(4|2)", qf(1, 2)).status, Status::ConformalSemisimpleFinite);
    for (name, k) in [("G(3)", qf(5, 4)), ("D(2,1;2)", qf(1, 2)), ("so(11)", q(-4)), ("so(9)", qf(-14, 3)), ("so(10)", qf(-16, 3)), ("osp(4|4)", qf(4, 3)), ("sl(6)", q(-4))] {
        assert_eq!(v(name, k.clone()).status, Status::ConformalUndecided, "{name} at {k}");
    }
    assert_eq!(v("G2", qf(-4, 3)).status, Status::Collapsing);
    assert_eq!(v("G2", q(7)).status, Status::NonConformal);
    assert_eq!(v("sl(5|2)", q(-3)).status, Status::Excluded);
    assert_eq!(criterion_report(&instantiate(&CaseId::Sl(2)).unwrap(), &q(1)).status, Status::Excluded);
    // every finite verdict carries only non-integral evidence
    for id in all_cases(6) {
        for r in case_verdicts(&instantiate(&id).unwrap()) {
            if r.status == Status::ConformalSemisimpleFinite {
                assert!(r.evidence.iter().all(|e| !e.integral), "{} at {}", r.case, r.k);
            }
        }
    }
}

#[test]
fn tensor_squares_conserve_dimension() {
    for id in all_cases(6) {
        let c = instantiate(&id).unwrap();
        if let Some(sq) = tensor_square(&c) {
            let sq = sq.unwrap();
            assert!(sq.conserved(), "{}: {:?}", c.name(), sq.sdim_check);
        }
    }
    let f4 = tensor_square(&case("F4")).unwrap().unwrap();
    assert_eq!(f4.display(), "2w3 + 2w2 + 2w1 + 0");
    let spo = super_tensor_fixture(&case("spo(8|3)")).unwrap();
    assert_eq!(spo.source, "fixture");
    assert_eq!(spo.display(), "2d2 + d2+d3 + 0");
    let osp = super_tensor_fixture(&case("osp(9|2)")).unwrap();
    assert!(osp.display().contains("(2e3, e1-e2)") && osp.display().contains("(e3+e4, e1-e2)"));
    assert!(super_tensor_fixture(&case("G2")).is_err());
}

#[test]
fn json_report_schema() {
    let vs = case_verdicts(&case("sl(5)"));
    let j = verdicts_json(&vs);
    let first = &j[0];
    for key in ["case", "k", "status", "c_w", "c_sug", "evidence"] {
        assert!(first.get(key).is_some(), "missing {key}");
    }
    let conf = j.as_array().unwrap().iter().find(|v| v["status"] == "conformal-semisimple-finite").unwrap();
    assert_eq!(conf["evidence"][0]["integral"], false);
    assert!(conf["k"].as_str().unwrap().contains('/'));
}

#[test]
fn case_ids_parse() {
    assert_eq!(CaseId::parse("A3").unwrap(), CaseId::Sl(4));
    assert_eq!(CaseId::parse("so(6)").unwrap(), CaseId::Sl(4));
    assert_eq!(CaseId::parse("osp(3|2)").unwrap(), CaseId::Spo(2, 3));
    assert_eq!(CaseId::parse("D(2,1;1/4)").unwrap(), CaseId::D21(qf(1, 4)));
    assert_eq!(CaseId::parse("sl(2|1)").unwrap(), CaseId::Spo(2, 2));
    assert!(CaseId::parse("xyz").is_err());
}
