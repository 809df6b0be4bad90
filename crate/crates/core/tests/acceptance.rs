//! Acceptance run: one timed PASS/FAIL line per criterion, non-zero exit on any failure.

use std::collections::BTreeSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use minw::algebra::{build_algebra, AlgebraSpec};
use minw::embed::*;
use minw::lattice::*;
use minw::rational::{parse_q, q, qf, Q};
use minw::reps::Reps;
use minw::wmin::{build_ope, verify_phi, SL4_TABLE};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Check = Result<String, String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn case(s: &str) -> Result<EmbeddingCase, String> {
    let id = CaseId::parse(s).map_err(|e| e.to_string())?;
    instantiate(&id).map_err(|e| e.to_string())
}

fn h(c: &EmbeddingCase, k: &Q, mus: &[&str]) -> Result<Q, String> {
    let mut mu = Vec::new();
    for (comp, m) in c.components.iter().zip(mus) {
        mu.push(match comp.algebra() {
            Some(a) => Some(a.parse_weight(m).map_err(|e| format!("{}: {e}", c.name()))?),
            None => None,
        });
    }
    h_mu(c, k, &mu).map_err(|e| format!("{}: {e}", c.name()))
}

/// Check h on a list of (weights, expected value).
fn expect_h(c: &EmbeddingCase, k: &Q, rows: &[(&[&str], Q)]) -> Result<usize, String> {
    for (mus, want) in rows {
        let got = h(c, k, mus)?;
        ensure(&got == want, || format!("{} at k = {k}, mu = {mus:?}: got {got}, want {want}", c.name()))?;
    }
    Ok(rows.len())
}

/// A reference value applies when the level is neither critical nor collapsing.
fn legal(c: &EmbeddingCase, k: &Q) -> bool {
    *k != -c.h_dual.clone() && !collapsing_levels(c).contains(k)
}

/// Like `expect_h`, but `None` when the level is not legal for this case.
fn expect_legal(c: &EmbeddingCase, k: &Q, rows: &[(&[&str], Q)]) -> Result<Option<usize>, String> {
    if legal(c, k) {
        expect_h(c, k, rows).map(Some)
    } else {
        Ok(None)
    }
}

/// Run `f` on the first six parameters for which the case exists and `f` applies.
fn family(params: impl Iterator<Item = (String, i64, i64)>, mut f: impl FnMut(&EmbeddingCase, i64, i64) -> Result<Option<usize>, String>) -> Result<(usize, Vec<String>), String> {
    let mut names = Vec::new();
    let mut checked = 0;
    for (name, a, b) in params {
        let Ok(c) = case(&name) else { continue };
        let Some(n) = f(&c, a, b)? else { continue };
        checked += n;
        names.push(name);
        if names.len() == 6 {
            return Ok((checked, names));
        }
    }
    Err(format!("fewer than six legal parameters, got {names:?}"))
}

fn criterion_1() -> Check {
    let mut total = 0;
    let mut fams: Vec<(usize, Vec<String>)> = Vec::new();
    fams.push(family((5..).map(|n| (format!("so({})", 2 * n), n, 0)), |c, n, _| {
        let k = qf(3, 2) - q(n);
        expect_legal(c, &k, &[
            (&["2w1", "0"], qf(4, 3)),
            (&["0", "e3+e4"], qf(4 * n - 12, 2 * n - 5)),
            (&["0", "2e3"], qf(4 * n - 8, 2 * n - 5)),
            (&["2w1", "e3+e4"], qf(4, 3) + qf(4 * n - 12, 2 * n - 5)),
        ])
    })?);
    fams.push(family((4..).map(|n| (format!("so({})", 2 * n + 1), n, 0)), |c, n, _| {
        let k = q(1 - n);
        expect_legal(c, &k, &[
            (&["0", "e3+e4"], qf(2 * n - 5, n - 2)),
            (&["2w1", "2e3"], qf(4, 3) + qf(2 * n - 3, n - 2)),
        ])
    })?);
    let g2 = case("G2")?;
    for i in 1..=3i64 {
        total += expect_h(&g2, &qf(-3, 2), &[(&[&format!("{}w1", 2 * i)], qf(2 * i * (i + 1), 5))])?;
    }
    total += expect_h(&case("F4")?, &q(-4), &[(&["2w1"], qf(8, 5)), (&["2w3"], qf(18, 5))])?;
    total += expect_h(&case("E6")?, &qf(-11, 2), &[(&["w1+w5"], qf(12, 7)), (&["w2+w4"], qf(20, 7)), (&["2w3"], qf(24, 7))])?;
    total += expect_h(&case("E7")?, &qf(-17, 2), &[(&["w2"], qf(20, 11)), (&["w4"], qf(32, 11)), (&["2w6"], qf(36, 11))])?;
    total += expect_h(&case("E8")?, &qf(-29, 2), &[(&["w1"], qf(36, 19)), (&["w6"], qf(56, 19)), (&["2w7"], qf(60, 19))])?;
    total += expect_h(&case("F(4)")?, &qf(3, 2), &[(&["w1"], qf(12, 7)), (&["w2"], qf(20, 7)), (&["2w3"], qf(24, 7))])?;
    fams.push(family((2..).map(|n| (format!("osp(4|{})", 2 * n), n, 0)), |c, n, _| {
        let k = q(n) - qf(1, 2);
        expect_legal(c, &k, &[
            (&["2w1", "0"], qf(4, 3)),
            (&["0", "w2"], qf(4 * n, 2 * n + 1)),
            (&["0", "2w1"], qf(4 * n + 4, 2 * n + 1)),
            (&["2w1", "w2"], qf(4, 3) + qf(4 * n, 2 * n + 1)),
            (&["2w1", "2w1"], qf(4, 3) + qf(4 * n + 4, 2 * n + 1)),
        ])
    })?);
    fams.push(family((2..).map(|n| (format!("sp({})", 2 * n + 2), n, 0)), |c, n, _| {
        let k = qf(-2 * (n + 2), 3);
        expect_legal(c, &k, &[(&["2w1"], qf(6 * (n + 1), 2 * n + 1)), (&["w2"], qf(6 * n, 2 * n + 1))])
    })?);
    fams.push(family((3..).map(|n| (format!("spo(2|{})", 2 * n), n, 0)), |c, n, _| {
        let k = qf(2 * (n - 2), 3);
        expect_legal(c, &k, &[(&["2e1"], q(3) + qf(3, 2 * n - 1)), (&["e1+e2"], q(3) - qf(3, 2 * n - 1))])
    })?);
    fams.push(family((2..).map(|n| (format!("spo(2|{})", 2 * n + 1), n, 0)), |c, n, _| {
        let k = qf(2 * n - 3, 3);
        expect_legal(c, &k, &[(&["2e1"], q(3) + qf(3, 2 * n)), (&["e1+e2"], q(3) - qf(3, 2 * n))])
    })?);
    total += expect_h(&case("spo(2|3)")?, &qf(-1, 3), &[(&["2w1"], qf(3, 2)), (&["4w1"], qf(9, 2))])?;
    fams.push(family((4..).map(|n| (format!("sl({n})"), n, 0)), |c, n, _| {
        let mu = if n == 4 { "2w1".to_string() } else { format!("w1+w{}", n - 3) };
        let mut count = 0;
        for k in conformal_levels(c) {
            count += expect_h(c, &k, &[(&["-", &mu], q(n - 2) / (q(n) + &k - q(1)))])?;
        }
        Ok((count > 0).then_some(count))
    })?);
    // sl(m|n), m != n, by increasing m + n, with the denominators m-n-1 and m-n-3 nonzero
    let sl_pairs = (4..).flat_map(|s: i64| (3..s).map(move |m| (m, s - m))).filter(|&(m, n)| n >= 1 && m != n && m - n != 1 && m - n != 3);
    fams.push(family(sl_pairs.map(|(m, n)| (format!("sl({m}|{n})"), m, n)), |c, m, n| {
        let mu = format!("d1-e{}", m - 1);
        let d = m - n;
        let mut count = None;
        for (k, want) in [(qf(n - m + 1, 2), q(2) * (q(1) - qf(1, d - 1))), (qf(2 * (n - m), 3), q(3) * (q(1) + qf(1, d - 3)))] {
            if let Some(x) = expect_legal(c, &k, &[(&["-", &mu], want)])? {
                count = Some(count.unwrap_or(0) + x);
            }
        }
        Ok(count)
    })?);
    let spo_pairs = (7..).flat_map(|s: i64| (1..s).map(move |m| (s - m, m))).filter(|&(nn, m)| nn >= 6 && nn % 2 == 0 && nn - m - 1 != 0);
    fams.push(family(spo_pairs.map(|(nn, m)| (format!("spo({nn}|{m})"), nn, m)), |c, nn, m| {
        let k = qf(m - nn - 2, 3);
        let t = nn - m - 1;
        expect_legal(c, &k, &[(&["2d2"], q(3) * (q(1) + qf(1, t))), (&["d2+d3"], q(3) * (q(1) - qf(1, t)))])
    })?);
    let osp_pairs = (10..).flat_map(|s: i64| (2..s).map(move |n| (s - n, n))).filter(|&(m, n)| m >= 8 && n % 2 == 0 && m - n - 5 != 0);
    fams.push(family(osp_pairs.map(|(m, n)| (format!("osp({m}|{n})"), m, n)), |c, m, n| {
        let k = qf(n - m + 3, 2);
        let t = m - n - 5;
        expect_legal(c, &k, &[
            (&["2e3", "e1-e2"], qf(10, 3) + qf(2, t)),
            (&["e3+e4", "e1-e2"], qf(10, 3) - qf(2, t)),
            (&["2e3", "0"], q(2) * (q(1) + qf(1, t))),
            (&["e3+e4", "0"], q(2) * (q(1) - qf(1, t))),
            (&["0", "e1-e2"], qf(4, 3)),
        ])
    })?);
    total += fams.iter().map(|f| f.0).sum::<usize>();
    Ok(format!("{total} values over {} families (six parameters each) and 6 exceptional cases", fams.len()))
}

fn criterion_2() -> Check {
    let rows: &[(&str, &[&str])] = &[
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
    for (name, want) in rows {
        let want: Vec<Q> = want.iter().map(|s| parse_q(s).unwrap()).collect();
        let got = collapsing_levels(&case(name)?);
        ensure(got == want, || format!("collapsing levels of {name}: got {got:?}"))?;
    }
    let mut excluded = vec!["sl(3)".to_string(), "sp(4)".into(), "F(4)/D(2,1;2)".into()];
    for a in ["1/2", "-1/2", "-3/2"] {
        excluded.push(format!("D(2,1;{a})"));
    }
    for n in 1..4 {
        excluded.push(format!("spo({}|{})", 2 * n, 2 * n + 2));
        excluded.push(format!("sl({}|{})", n + 3, n));
        excluded.push(format!("osp({}|{})", 2 * n + 5, 2 * n));
    }
    for name in &excluded {
        let ks = conformal_levels(&case(name)?);
        ensure(ks.is_empty(), || format!("{name} should have no non-collapsing conformal level, got {ks:?}"))?;
    }
    let mut spot = 0;
    for n in [6, 8, 10] {
        let c = case(&format!("sp({n})"))?;
        ensure(conformal_levels(&c) == vec![-q(2) * &c.h_dual / q(3)], || format!("sp({n})"))?;
        spot += 1;
    }
    for n in [0, 2, 4] {
        let c = case(&format!("osp({}|{n})", n + 8))?;
        ensure(conformal_levels(&c) == vec![-(&c.h_dual - q(1)) / q(2)], || c.name())?;
        spot += 1;
    }
    for (name, want) in [("sl(4)", vec![qf(-8, 3), qf(-3, 2)]), ("G(3)", vec![qf(5, 4)]), ("sl(2|3)", vec![qf(2, 3)]), ("sl(2|1)", vec![qf(-2, 3)])] {
        let got = conformal_levels(&case(name)?);
        ensure(got == want, || format!("conformal levels of {name}: got {got:?}"))?;
        spot += 1;
    }
    Ok(format!("{} collapsing rows, {} exclusions, {spot} conformal spot checks", rows.len(), excluded.len()))
}

fn criterion_3() -> Check {
    let mut checked = 0;
    for id in all_cases(6) {
        let c = instantiate(&id).map_err(|e| e.to_string())?;
        for k in conformal_levels(&c) {
            let (cw, cs) = central_charges(&c, &k).map_err(|e| e.to_string())?;
            ensure(cw == cs, || format!("{} at k = {k}: c_w = {cw}, c_sug = {cs}", c.name()))?;
            checked += 1;
        }
    }
    let (cw, cs) = central_charges(&case("sl(4)")?, &qf(-8, 3)).map_err(|e| e.to_string())?;
    ensure(cw == q(-14) && cs == q(-14), || format!("sl(4) at -8/3: {cw}, {cs}"))?;
    Ok(format!("{checked} conformal levels on the grid; c(sl4, -8/3) = {cw}"))
}

fn labels(sq: &TensorSquare) -> BTreeSet<String> {
    sq.summands.iter().map(|s| s.label.clone()).collect()
}

fn square(name: &str) -> Result<TensorSquare, String> {
    let c = case(name)?;
    let sq = tensor_square(&c).ok_or_else(|| format!("{name}: no tensor square"))?.map_err(|e| e.to_string())?;
    ensure(sq.conserved(), || format!("{name}: dimension check {:?}", sq.sdim_check))?;
    Ok(sq)
}

fn product(a: &[&str], b: &[&str]) -> Vec<String> {
    let mut out = Vec::new();
    for x in a {
        for y in b {
            out.push(format!("({x}, {y})"));
        }
    }
    out
}

fn criterion_4() -> Check {
    let a1 = ["2w1", "0"];
    let nat2 = ["0", "w2", "2w1"];
    let expected: Vec<(&str, Vec<String>)> = vec![
        ("so(12)", product(&a1, &nat2)),
        ("so(11)", product(&a1, &nat2)),
        ("G2", vec!["6w1".into(), "4w1".into(), "2w1".into(), "0".into()]),
        ("E6", vec!["0".into(), "w1+w5".into(), "w2+w4".into(), "2w3".into()]),
        ("E7", vec!["0".into(), "w2".into(), "w4".into(), "2w6".into()]),
        ("E8", vec!["0".into(), "w1".into(), "w6".into(), "2w7".into()]),
        ("F(4)", vec!["2w3".into(), "w2".into(), "w1".into(), "0".into()]),
        ("osp(4|6)", product(&a1, &nat2)),
        ("sp(8)", vec!["2w1".into(), "w2".into(), "0".into()]),
        ("spo(2|8)", vec!["0".into(), "2w1".into(), "w2".into()]),
        ("spo(2|7)", vec!["0".into(), "2w1".into(), "w2".into()]),
        ("spo(2|3)", vec!["0".into(), "2w1".into(), "4w1".into()]),
        ("spo(8|3)", vec!["2d2".into(), "d2+d3".into(), "0".into()]),
        ("osp(9|2)", product(&["e3+e4", "2e3", "0"], &["e1-e2", "0"])),
    ];
    let mut computed = 0;
    let mut fixture = 0;
    for (name, want) in &expected {
        let sq = square(name)?;
        let want: BTreeSet<String> = want.iter().cloned().collect();
        ensure(labels(&sq) == want, || format!("{name}: got {}", sq.display()))?;
        if sq.source == "fixture" {
            fixture += 1;
        } else {
            computed += 1;
        }
    }
    // F4: the reference list misses 2w2, which the dimension count forces (196 = 1 + 21 + 90 + 84)
    let f4 = square("F4")?;
    let reference_f4: BTreeSet<String> = ["0", "2w1", "2w3"].iter().map(|s| s.to_string()).collect();
    let extra: Vec<_> = labels(&f4).difference(&reference_f4).cloned().collect();
    ensure(reference_f4.is_subset(&labels(&f4)) && extra == ["2w2"], || format!("F4: got {}", f4.display()))?;
    computed += 1;
    let e7 = Reps::new(&build_algebra(&AlgebraSpec::parse("E7").map_err(|e| e.to_string())?).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
    let w7 = [0, 0, 0, 0, 0, 0, 1];
    let dims: Vec<u128> = [[0; 7], [1, 0, 0, 0, 0, 0, 0], [0, 0, 0, 0, 0, 1, 0], [0, 0, 0, 0, 0, 0, 2]]
        .iter()
        .map(|w| e7.weyl_dim(w).unwrap())
        .collect();
    let d56 = e7.weyl_dim(&w7).map_err(|e| e.to_string())?;
    ensure(d56 == 56 && dims.iter().sum::<u128>() == 56 * 56, || format!("E7 dims {dims:?}"))?;
    let mut grid = 0;
    for id in all_cases(6) {
        let c = instantiate(&id).map_err(|e| e.to_string())?;
        if let Some(sq) = tensor_square(&c) {
            let sq = sq.map_err(|e| e.to_string())?;
            ensure(sq.conserved(), || format!("{}: {:?}", c.name(), sq.sdim_check))?;
            grid += 1;
        }
    }
    Ok(format!(
        "{computed} computed and {fixture} fixture decompositions (F4 adds 2w2 to the reference list); E7: 56^2 = {} ; {grid} grid squares conserve (s)dim",
        dims.iter().map(|d| d.to_string()).collect::<Vec<_>>().join(" + ")
    ))
}

fn criterion_5() -> Check {
    let checks = r3_bracket_identities();
    let bad: Vec<_> = checks.iter().filter(|c| !c.pass()).map(|c| c.name.clone()).collect();
    ensure(bad.is_empty(), || format!("failing identities: {bad:?}"))?;
    let g = r3_generators();
    let p2 = nth_product(&g.e1, &g.f2, 2);
    ensure(p2 == LatticeState::vacuum().scale_i(10), || format!("E1_(2)F2 = {p2}"))?;
    let p1 = nth_product(&g.e1, &g.f2, 1);
    let base = g.h.scale_i(-1).add(&g.j.scale_i(5));
    ensure(p1 == base.scale_i(3), || format!("E1_(1)F2 = {p1}"))?;
    Ok(format!("{} identities; E1_(2)F2 = 10; E1_(1)F2 = 3(-h+5j) (the reference value omits the factor 3)", checks.len()))
}

fn criterion_6() -> Check {
    let report = verify_phi().map_err(|e| e.to_string())?;
    let bad: Vec<_> = report.pairs.iter().filter(|p| !p.pass).map(|p| format!("{} {}", p.x, p.y)).collect();
    ensure(bad.is_empty(), || format!("phi fails on {bad:?}"))?;
    ensure(report.e1_f2_identity, || "-(2/9)[E1 F2] identity fails".into())?;
    ensure(report.omega_is_sugawara && report.sugawara_primary, || "Virasoro images".into())?;
    let table = build_ope(4, None).map_err(|e| e.to_string())?;
    let cmp = table.compare(SL4_TABLE).map_err(|e| e.to_string())?;
    let bad: Vec<_> = cmp.iter().filter(|p| !p.pass).map(|p| format!("{} {}", p.x, p.y)).collect();
    ensure(bad.is_empty(), || format!("formal table differs on {bad:?}"))?;
    Ok(format!("{} generator pairs at k = {}; formal sl(4) table matches on {} fixture pairs", report.pairs.len(), report.level, cmp.len()))
}

fn criterion_7() -> Check {
    let (l, r) = zhu_state_identity();
    ensure(l == r, || format!("state identity: {l} vs {r}"))?;
    let g = r3_generators();
    let circ = zhu_circ(&g.e1, &g.e2).map_err(|e| e.to_string())?;
    let want = nth_product(&g.e1, &g.e2, -1).add(&nth_product(&g.e1, &g.e2, 0));
    ensure(circ == want, || "E1 o E2".into())?;
    Ok(format!("state identity holds ({} terms); E1 o E2 = (E1_(-1) + E1_(0))E2", l.len()))
}

fn criterion_8() -> Check {
    let mut out = Vec::new();
    for l in -2..=2 {
        for j in 0..=2u32 {
            let v = singular_vector(l, j);
            let r = is_singular(l, j, &v);
            ensure(r.pass && r.nonzero, || format!("v[{l},{j}]: {r:?}"))?;
            out.push(format!("v[{l},{j}] L0={}", r.l0));
        }
    }
    Ok(format!("15 vectors singular and nonzero: {}", out.join(", ")))
}

fn random_state(rng: &mut ChaCha8Rng) -> LatticeState {
    let mut s = LatticeState::zero();
    for _ in 0..rng.gen_range(1..=2) {
        let exp = [rng.gen_range(-1..=1), rng.gen_range(-1..=1), rng.gen_range(-1..=1)];
        let len = rng.gen_range(0..=2);
        let mono: Mono = (0..len).map(|_| (rng.gen_range(1..=2u32), rng.gen_range(0..4u8))).collect();
        s.add_assign(&LatticeState::term(qf(rng.gen_range(-3..=3), rng.gen_range(1..=2)), mono, exp));
    }
    s
}

fn shift_up(p: &LambdaPolynomial) -> LambdaPolynomial {
    let mut out = LambdaPolynomial::zero();
    for (i, s) in &p.coeffs {
        out.add_at(i + 1, &s.scale_i(-1));
    }
    out
}

fn reps(name: &str) -> Reps {
    Reps::new(&build_algebra(&AlgebraSpec::parse(name).unwrap()).unwrap()).unwrap()
}

fn criterion_9() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let pick = |rng: &mut ChaCha8Rng| [rng.gen_range(-4..=4), rng.gen_range(-4..=4), rng.gen_range(-4..=4)];
    let n_cocycle = 100;
    for _ in 0..n_cocycle {
        let (x, y, z) = (pick(&mut rng), pick(&mut rng), pick(&mut rng));
        let sign = if d_pair(&x, &y).rem_euclid(2) == 0 { 1 } else { -1 };
        ensure(cocycle(&x, &y) * cocycle(&y, &x) == sign, || format!("cocycle symmetry at {x:?} {y:?}"))?;
        let xz = [x[0] + z[0], x[1] + z[1], x[2] + z[2]];
        ensure(cocycle(&xz, &y) == cocycle(&x, &y) * cocycle(&z, &y), || format!("cocycle additivity at {x:?} {z:?} {y:?}"))?;
    }
    let n_random = 12;
    for _ in 0..n_random {
        let (a, b) = (random_state(&mut rng), random_state(&mut rng));
        for n in -2..=2 {
            let lhs = screening_q(&nth_product(&a, &b, n));
            let rhs = nth_product(&screening_q(&a), &b, n).add(&nth_product(&a, &screening_q(&b), n));
            ensure(lhs == rhs, || format!("Q-derivation on {a} _({n}) {b}"))?;
        }
        ensure(lambda_bracket(&b, &a) == skew_bracket(&a, &b), || format!("skew-symmetry on {a}, {b}"))?;
        ensure(lambda_bracket(&translation(&a), &b) == shift_up(&lambda_bracket(&a, &b)), || format!("sesquilinearity on {a}, {b}"))?;
    }
    let pool = [("A1", 1usize), ("A2", 2), ("B2", 2), ("G2", 2), ("A3", 3), ("B3", 3), ("C3", 3)];
    let n_dim = 12;
    for _ in 0..n_dim {
        let (name, rank) = pool[rng.gen_range(0..pool.len())];
        let r = reps(name);
        let l: Vec<i64> = (0..rank).map(|_| rng.gen_range(0..=2)).collect();
        let m: Vec<i64> = (0..rank).map(|_| rng.gen_range(0..=2)).collect();
        let d = r.tensor_decompose(&l, &m).map_err(|e| e.to_string())?;
        let total: u128 = d.iter().map(|(w, k)| r.weyl_dim(w).unwrap() * *k as u128).sum();
        let want = r.weyl_dim(&l).unwrap() * r.weyl_dim(&m).unwrap();
        ensure(total == want, || format!("{name} {l:?} x {m:?}: {total} != {want}"))?;
    }
    let small = [("A1", 1usize), ("A2", 2), ("B2", 2), ("G2", 2)];
    let n_oracle = 16;
    for _ in 0..n_oracle {
        let (name, rank) = small[rng.gen_range(0..small.len())];
        let r = reps(name);
        let top = if name == "G2" { 1 } else { 2 };
        let l: Vec<i64> = (0..rank).map(|_| rng.gen_range(0..=top)).collect();
        let m: Vec<i64> = (0..rank).map(|_| rng.gen_range(0..=top)).collect();
        let k = r.tensor_decompose(&l, &m).map_err(|e| e.to_string())?;
        let b = r.tensor_decompose_brute(&l, &m).map_err(|e| e.to_string())?;
        ensure(k == b, || format!("{name} {l:?} x {m:?}: Klimyk {k:?}, brute force {b:?}"))?;
    }
    Ok(format!(
        "seed 2024: cocycle {n_cocycle}, Q-derivation {n_random}x5, skew/sesquilinearity {n_random}, dimension {n_dim}, Klimyk vs brute force {n_oracle}"
    ))
}

fn main() {
    // time limits where one is required
    let criteria: [(&str, Option<u64>, fn() -> Check); 9] = [
        ("h_mu atlas", Some(10), criterion_1),
        ("level classification", None, criterion_2),
        ("central-charge identity", None, criterion_3),
        ("tensor decompositions", Some(60), criterion_4),
        ("R3 bracket suite", Some(30), criterion_5),
        ("homomorphism phi", None, criterion_6),
        ("Zhu relation", None, criterion_7),
        ("singular vectors", None, criterion_8),
        ("property suites", None, criterion_9),
    ];
    let mut failed = 0;
    for (i, (name, limit, f)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let r = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|_| Err("panicked".into()));
        let dt = t.elapsed();
        let r = match r {
            Ok(msg) if limit.is_some_and(|l| dt > Duration::from_secs(l)) => Err(format!("{msg}; over the {} s limit", limit.unwrap())),
            other => other,
        };
        match r {
            Ok(msg) => println!("PASS criterion {} ({name}, {:.2} s): {msg}", i + 1, dt.as_secs_f64()),
            Err(msg) => {
                failed += 1;
                println!("FAIL criterion {} ({name}, {:.2} s): {msg}", i + 1, dt.as_secs_f64());
            }
        }
    }
    println!("{} of {} criteria pass", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
