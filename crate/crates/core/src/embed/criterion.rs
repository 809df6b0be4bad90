//! Tensor squares of g_{-1/2}, the conformal weights h_mu and the case verdicts.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use super::levels::{central_charges, component_levels, conformal_levels, in_k_set, two_thirds_level};
use super::{CaseId, ComponentKind, EmbedError, EmbeddingCase, TensorSpec};
use crate::algebra::{casimir_shifted, AlgebraData, Weight};
use crate::rational::{fmt_q, is_pos_int, q, q0, qf, Q};
use crate::reps::{Labels, Reps};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Collapsing,
    ConformalSemisimpleFinite,
    ConformalInfinite,
    ConformalUndecided,
    Excluded,
    NonConformal,
}

impl Status {
    pub fn as_str(&self) -> &'static str {
        match self {
            Status::Collapsing => "collapsing",
            Status::ConformalSemisimpleFinite => "conformal-semisimple-finite",
            Status::ConformalInfinite => "conformal-infinite",
            Status::ConformalUndecided => "conformal-undecided",
            Status::Excluded => "excluded",
            Status::NonConformal => "non-conformal",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Evidence {
    pub mu: String,
    pub h: String,
    /// true when h lies in Z_+ (which obstructs the criterion)
    pub integral: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct Verdict {
    pub case: String,
    pub k: String,
    pub status: Status,
    pub c_w: Option<String>,
    pub c_sug: Option<String>,
    pub evidence: Vec<Evidence>,
    pub notes: Vec<String>,
}

/// One irreducible summand, with a weight per component (None on the centre).
#[derive(Debug, Clone)]
pub struct Summand {
    pub mu: Vec<Option<Weight>>,
    pub label: String,
    pub mult: u64,
    pub sdim: i64,
}

impl Summand {
    pub fn is_zero(&self) -> bool {
        self.mu.iter().all(|m| m.as_ref().is_none_or(|w| w.is_zero()))
    }
}

#[derive(Debug, Clone)]
pub struct TensorSquare {
    pub case: String,
    pub source: &'static str,
    pub left: String,
    pub right: String,
    pub summands: Vec<Summand>,
    /// (sdim of the product, sum of summand sdims)
    pub sdim_check: (i64, i64),
}

impl TensorSquare {
    pub fn conserved(&self) -> bool {
        self.sdim_check.0 == self.sdim_check.1
    }

    pub fn display(&self) -> String {
        self.summands
            .iter()
            .map(|s| if s.mult == 1 { s.label.clone() } else { format!("{}*{}", s.mult, s.label) })
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

#[derive(Debug, Clone, Deserialize)]
struct Requires {
    var: String,
    min: i64,
}

#[derive(Debug, Clone, Deserialize)]
struct FixtureSummand {
    mu: Vec<String>,
    sdim: Vec<String>,
}

#[derive(Debug, Clone, Deserialize)]
struct FixtureEntry {
    requires: Requires,
    pathway: String,
    left: String,
    right: String,
    natural: Vec<Option<String>>,
    summands: Vec<FixtureSummand>,
}

fn super_fixtures() -> &'static BTreeMap<String, FixtureEntry> {
    static F: OnceLock<BTreeMap<String, FixtureEntry>> = OnceLock::new();
    F.get_or_init(|| {
        serde_json::from_str(include_str!("../../fixtures/super_decomp.json")).expect("super_decomp.json parses")
    })
}

fn vars_of(id: &CaseId) -> Vec<(&'static str, i64)> {
    match id {
        CaseId::SlSuper(m, n) | CaseId::Osp(m, n) => vec![("m", *m as i64), ("n", *n as i64)],
        CaseId::Spo(n, m) => vec![("n", *n as i64), ("m", *m as i64)],
        _ => vec![],
    }
}

/// Integer expression like `m-2-n` or `7`.
fn eval_expr(e: &str, vars: &[(&str, i64)]) -> Option<i64> {
    let mut total = 0i64;
    let mut sign = 1i64;
    let mut tok = String::new();
    let flush = |tok: &mut String, sign: i64, total: &mut i64| -> Option<()> {
        if tok.is_empty() {
            return Some(());
        }
        let v = match tok.parse::<i64>() {
            Ok(x) => x,
            Err(_) => vars.iter().find(|(n, _)| *n == tok.as_str())?.1,
        };
        *total += sign * v;
        tok.clear();
        Some(())
    };
    for ch in e.chars().filter(|c| !c.is_whitespace()) {
        if ch == '+' || ch == '-' {
            flush(&mut tok, sign, &mut total)?;
            sign = if ch == '-' { -1 } else { 1 };
        } else {
            tok.push(ch);
        }
    }
    flush(&mut tok, sign, &mut total)?;
    Some(total)
}

fn fill(template: &str, vars: &[(&str, i64)]) -> Option<String> {
    let mut out = String::new();
    let mut rest = template;
    while let Some(i) = rest.find('{') {
        out.push_str(&rest[..i]);
        let j = rest[i..].find('}')? + i;
        out.push_str(&eval_expr(&rest[i + 1..j], vars)?.to_string());
        rest = &rest[j + 1..];
    }
    out.push_str(rest);
    Some(out)
}

/// sdim of g_{1/2}, from sdim g = sdim g^natural + 2 sdim g_{1/2} + 3.
pub fn g_half_sdim(case: &EmbeddingCase) -> i64 {
    let nat: i64 = case.components.iter().map(|c| c.sdim).sum();
    (case.sdim - nat - 3) / 2
}

fn product_sdim_expected(case: &EmbeddingCase, center_pathway: bool) -> i64 {
    let d = g_half_sdim(case);
    if center_pathway {
        (d / 2) * (d / 2)
    } else {
        d * d
    }
}

/// The fixture decomposition of a superalgebra case, with super-dimension bookkeeping.
pub fn super_tensor_fixture(case: &EmbeddingCase) -> Result<TensorSquare, EmbedError> {
    let unknown = || EmbedError::UnknownCase(case.name());
    let TensorSpec::Fixture(id) = &case.tensor else { return Err(unknown()) };
    let fx = super_fixtures().get(id).ok_or_else(unknown)?;
    let vars = vars_of(&case.id);
    let have = vars.iter().find(|(n, _)| *n == fx.requires.var).map(|v| v.1).ok_or_else(unknown)?;
    if have < fx.requires.min {
        return Err(unknown());
    }
    let mut summands = Vec::new();
    let mut total = 0i64;
    for s in &fx.summands {
        let mut mu = Vec::new();
        let mut sdim = 1i64;
        let mut parts = Vec::new();
        for (i, c) in case.components.iter().enumerate() {
            let txt = fill(&s.mu[i], &vars).ok_or_else(unknown)?;
            let tag = s.sdim[i].as_str();
            let nat = fx.natural[i].as_ref().and_then(|e| fill(e, &vars)).and_then(|t| t.parse::<i64>().ok());
            let f = match (tag, nat) {
                ("1", _) => 1,
                ("adjoint", _) => c.sdim,
                ("S2-1", Some(d)) => d * (d + 1) / 2 - 1,
                ("L2-1", Some(d)) => d * (d - 1) / 2 - 1,
                _ => return Err(unknown()),
            };
            sdim *= f;
            match &c.kind {
                ComponentKind::Center => mu.push(None),
                ComponentKind::Simple(a) => {
                    let w = a.weight(&txt)?;
                    parts.push(w.to_string());
                    mu.push(Some(w));
                }
            }
        }
        total += sdim;
        let label = if parts.len() == 1 { parts[0].clone() } else { format!("({})", parts.join(", ")) };
        summands.push(Summand { mu, label, mult: 1, sdim });
    }
    Ok(TensorSquare {
        case: case.name(),
        source: "fixture",
        left: fill(&fx.left, &vars).unwrap_or_default(),
        right: fill(&fx.right, &vars).unwrap_or_default(),
        summands,
        sdim_check: (product_sdim_expected(case, fx.pathway == "center"), total),
    })
}

fn lie_square(case: &EmbeddingCase, left: &[Option<Labels>], right: &[Option<Labels>]) -> Result<TensorSquare, EmbedError> {
    // per component: list of (weight, labels text, mult, dim)
    let mut factors: Vec<Vec<(Option<Weight>, Option<String>, u64, u128)>> = Vec::new();
    let mut lhs: u128 = 1;
    let mut ltxt = Vec::new();
    let mut rtxt = Vec::new();
    for ((c, l), r) in case.components.iter().zip(left).zip(right) {
        match (&c.kind, l, r) {
            (ComponentKind::Simple(a), Some(l), Some(r)) => {
                let reps = Reps::new(a)?;
                lhs *= reps.weyl_dim(l)? * reps.weyl_dim(r)?;
                ltxt.push(AlgebraData::format_labels(l));
                rtxt.push(AlgebraData::format_labels(r));
                let mut opts = Vec::new();
                for (lab, m) in reps.tensor_decompose(l, r)? {
                    let w = a.from_labels(&lab)?;
                    opts.push((Some(w), Some(AlgebraData::format_labels(&lab)), m, reps.weyl_dim(&lab)?));
                }
                factors.push(opts);
            }
            _ => factors.push(vec![(None, None, 1, 1)]),
        }
    }
    let mut summands = Vec::new();
    let mut rhs: u128 = 0;
    let mut idx = vec![0usize; factors.len()];
    loop {
        let mut mu = Vec::new();
        let mut parts = Vec::new();
        let mut mult = 1u64;
        let mut dim = 1u128;
        for (f, &i) in factors.iter().zip(&idx) {
            let (w, t, m, d) = &f[i];
            mu.push(w.clone());
            if let Some(t) = t {
                parts.push(t.clone());
            }
            mult *= m;
            dim *= d;
        }
        rhs += mult as u128 * dim;
        let label = match parts.len() {
            0 => "0".to_string(),
            1 => parts[0].clone(),
            _ => format!("({})", parts.join(", ")),
        };
        summands.push(Summand { mu, label, mult, sdim: dim as i64 });
        // odometer
        let mut p = factors.len();
        loop {
            if p == 0 {
                let join = |v: &[String]| if v.len() == 1 { v[0].clone() } else { format!("({})", v.join(", ")) };
                return Ok(TensorSquare {
                    case: case.name(),
                    source: "klimyk",
                    left: join(&ltxt),
                    right: join(&rtxt),
                    summands,
                    sdim_check: (lhs as i64, rhs as i64),
                });
            }
            p -= 1;
            idx[p] += 1;
            if idx[p] < factors[p].len() {
                break;
            }
            idx[p] = 0;
        }
    }
}

/// g_{-1/2} x g_{-1/2} (or U+ x U- when g^natural has a centre), if known for this case.
pub fn tensor_square(case: &EmbeddingCase) -> Option<Result<TensorSquare, EmbedError>> {
    match &case.tensor {
        TensorSpec::Lie { left, right } => Some(lie_square(case, left, right)),
        TensorSpec::Fixture(_) => match super_tensor_fixture(case) {
            Err(EmbedError::UnknownCase(_)) => None,
            other => Some(other),
        },
        TensorSpec::None => None,
    }
}

/// Sum over components with k_i != 0 of (mu^i, mu^i + 2 rho^i) / (2 (k_i + h_0i)).
pub fn h_mu(case: &EmbeddingCase, k: &Q, mu: &[Option<Weight>]) -> Result<Q, EmbedError> {
    let ks = component_levels(case, k)?;
    let mut h = q0();
    for ((ki, c), m) in ks.iter().zip(&case.components).zip(mu) {
        if *ki == q0() {
            continue;
        }
        let (ComponentKind::Simple(a), Some(m)) = (&c.kind, m) else { continue };
        let den = ki + &c.dual_coxeter_restricted;
        if den == q0() {
            return Err(EmbedError::OutsideK(fmt_q(k)));
        }
        h += casimir_shifted(a, m)? / (q(2) * den);
    }
    Ok(h)
}

enum Special {
    Infinite,
    Fusion,
    Open,
}

fn special(case: &EmbeddingCase, k: &Q) -> Option<Special> {
    use CaseId::*;
    let half = qf(1, 2);
    let two_thirds = two_thirds_level(case);
    match &case.id {
        Sl(4) if *k == qf(-8, 3) => Some(Special::Infinite),
        Psl(2) if *k == half => Some(Special::Infinite),
        So(8) if *k == qf(-5, 2) => Some(Special::Fusion),
        Osp(4, 2) if *k == half => Some(Special::Fusion),
        D21(a) if *k == half && (*a == q(1) || *a == qf(1, 4)) => Some(Special::Fusion),
        D21(_) if *k == half => Some(Special::Open),
        G3Super if *k == qf(5, 4) => Some(Special::Open),
        So(11) if *k == q(-4) => Some(Special::Open),
        So(_) if *k == two_thirds => Some(Special::Open),
        Osp(_, _) if *k == two_thirds => Some(Special::Open),
        Sl(6) if *k == q(-4) => Some(Special::Open),
        _ => None,
    }
}

fn evidence(case: &EmbeddingCase, k: &Q, notes: &mut Vec<String>) -> Option<Vec<Evidence>> {
    let sq = match tensor_square(case) {
        None => {
            notes.push("no tensor-square data for this case".into());
            return None;
        }
        Some(Err(e)) => {
            notes.push(format!("tensor square unavailable: {e}"));
            return None;
        }
        Some(Ok(sq)) => sq,
    };
    let mut out = Vec::new();
    for s in sq.summands.iter().filter(|s| !s.is_zero()) {
        match h_mu(case, k, &s.mu) {
            Ok(h) => out.push(Evidence { mu: s.label.clone(), integral: is_pos_int(&h), h: fmt_q(&h) }),
            Err(e) => {
                notes.push(format!("h_mu for {}: {e}", s.label));
                return None;
            }
        }
    }
    Some(out)
}

pub fn criterion_report(case: &EmbeddingCase, k: &Q) -> Verdict {
    let mut v = Verdict {
        case: case.name(),
        k: fmt_q(k),
        status: Status::Excluded,
        c_w: None,
        c_sug: None,
        evidence: vec![],
        notes: vec![],
    };
    if let Some(why) = &case.excluded {
        v.notes.push(why.clone());
        return v;
    }
    if *k == -case.h_dual.clone() {
        v.notes.push("critical level".into());
        return v;
    }
    if let Ok((cw, cs)) = central_charges(case, k) {
        v.c_w = Some(fmt_q(&cw));
        v.c_sug = Some(fmt_q(&cs));
    }
    if case.p(k) == q0() {
        v.status = Status::Collapsing;
        return v;
    }
    if !conformal_levels(case).contains(k) {
        v.status = Status::NonConformal;
        if !in_k_set(case, k) {
            v.notes.push("level outside the admissible set".into());
        }
        return v;
    }
    let ev = evidence(case, k, &mut v.notes);
    if let Some(e) = &ev {
        v.evidence = e.clone();
    }
    v.status = match special(case, k) {
        Some(Special::Infinite) => {
            v.notes.push("known infinite decomposition".into());
            Status::ConformalInfinite
        }
        Some(Special::Fusion) => {
            // the h_mu test is not what decides these; keep the verdict consistent with its evidence
            if v.evidence.iter().any(|e| e.integral) {
                v.notes.push("h_mu test inconclusive".into());
                v.evidence.clear();
            }
            v.notes.push("via fusion-rule argument".into());
            Status::ConformalSemisimpleFinite
        }
        Some(Special::Open) => {
            v.notes.push("open case: decomposition not determined".into());
            Status::ConformalUndecided
        }
        None => match ev {
            Some(e) if e.iter().all(|x| !x.integral) => Status::ConformalSemisimpleFinite,
            Some(_) => {
                v.notes.push("some h_mu is a positive integer".into());
                Status::ConformalUndecided
            }
            None => Status::ConformalUndecided,
        },
    };
    v
}
