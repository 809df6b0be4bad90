//! Collapsing and conformal levels, component levels, central charges.

use super::{CaseId, ComponentKind, EmbedError, EmbeddingCase};
use crate::rational::{q, q0, qf, Q};

/// Roots of p(k) except the critical level.
pub fn collapsing_levels(case: &EmbeddingCase) -> Vec<Q> {
    let crit = -case.h_dual.clone();
    let mut out: Vec<Q> = Vec::new();
    for r in &case.p_roots {
        if *r != crit && !out.contains(r) {
            out.push(r.clone());
        }
    }
    out.sort();
    out
}

/// k_i = k + (h^vee - h^vee_{0,i})/2 per component (the centre gets k + h^vee/2).
pub fn component_levels(case: &EmbeddingCase, k: &Q) -> Result<Vec<Q>, EmbedError> {
    if *k == -case.h_dual.clone() {
        return Err(EmbedError::Critical);
    }
    Ok(case
        .components
        .iter()
        .map(|c| k + (&case.h_dual - &c.dual_coxeter_restricted) / q(2))
        .collect())
}

/// Membership in the admissible set: non-critical and k_i + h_0i != 0 whenever k_i != 0.
pub fn in_k_set(case: &EmbeddingCase, k: &Q) -> bool {
    match component_levels(case, k) {
        Err(_) => false,
        Ok(ks) => ks
            .iter()
            .zip(&case.components)
            .all(|(ki, c)| *ki == q0() || ki + &c.dual_coxeter_restricted != q0()),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Rule {
    None,
    HalfShift,
    TwoThirds,
    Both,
}

/// The case analysis of the conformal-level classification, before filtering.
fn rule(id: &CaseId) -> Rule {
    use CaseId::*;
    let d21_none = |a: &Q| *a == qf(1, 2) || *a == qf(-1, 2) || *a == qf(-3, 2);
    // orthosymplectic members of the classification, so(n) read as osp(n|0)
    let osp_rule = |m: i64, n: i64| -> Rule {
        if m == n + 5 && n >= 2 {
            Rule::None
        } else if m == n + 8 || (m == n + 2 && n >= 2) || (m == n - 4 && n >= 8) {
            Rule::HalfShift
        } else if m == n + 7 || (m == n + 1 && n >= 4) {
            Rule::TwoThirds
        } else {
            Rule::Both
        }
    };
    match id {
        Sl(3) => Rule::None,
        Sl(_) => Rule::Both,
        Sp(4) => Rule::None,
        Sp(_) => Rule::TwoThirds,
        So(n) => osp_rule(*n as i64, 0),
        Osp(m, n) => osp_rule(*m as i64, *n as i64),
        G2 | F4 | E6 | E7 | E8 | F4Super | G3Super | G3SuperOsp | Psl(_) => Rule::HalfShift,
        F4SuperD21 => Rule::None,
        D21(a) if d21_none(a) => Rule::None,
        D21(_) => Rule::HalfShift,
        Spo(n, m) => {
            let (n, m) = (*n as i64, *m as i64);
            if m == n + 2 || m == n - 1 || (m == n - 4 && n >= 4) {
                Rule::None
            } else {
                Rule::TwoThirds
            }
        }
        SlSuper(m, n) => {
            let (m, n) = (*m as i64, *n as i64);
            if m == n + 3 && m >= 4 {
                Rule::None
            } else if n == m + 1 || (n == m - 1 && m >= 3) {
                Rule::TwoThirds
            } else {
                Rule::Both
            }
        }
    }
}

/// -(h^vee - 1)/2
pub fn half_shift_level(case: &EmbeddingCase) -> Q {
    -(&case.h_dual - q(1)) / q(2)
}

/// -2h^vee/3
pub fn two_thirds_level(case: &EmbeddingCase) -> Q {
    -q(2) * &case.h_dual / q(3)
}

/// Non-collapsing conformal levels, each checked to lie in the admissible set.
pub fn conformal_levels(case: &EmbeddingCase) -> Vec<Q> {
    if case.excluded.is_some() {
        return vec![];
    }
    let cands = match rule(&case.id) {
        Rule::None => vec![],
        Rule::HalfShift => vec![half_shift_level(case)],
        Rule::TwoThirds => vec![two_thirds_level(case)],
        Rule::Both => vec![two_thirds_level(case), half_shift_level(case)],
    };
    let mut out: Vec<Q> = cands
        .into_iter()
        .filter(|k| case.p(k) != q0() && in_k_set(case, k))
        .collect();
    out.sort();
    out.dedup();
    out
}

/// (c_W, c_sug) at level k. Components with k_i = 0 are dropped from c_sug.
pub fn central_charges(case: &EmbeddingCase, k: &Q) -> Result<(Q, Q), EmbedError> {
    let ks = component_levels(case, k)?;
    let h = &case.h_dual;
    let c_w = k * q(case.sdim) / (k + h) - q(6) * k + h - q(4);
    let mut c_sug = q0();
    for (ki, c) in ks.iter().zip(&case.components) {
        if *ki == q0() {
            continue;
        }
        match c.kind {
            ComponentKind::Center => c_sug += q(1),
            ComponentKind::Simple(_) => {
                let den = ki + &c.dual_coxeter_restricted;
                if den == q0() {
                    return Err(EmbedError::OutsideK(crate::rational::fmt_q(k)));
                }
                c_sug += ki * q(c.sdim) / den;
            }
        }
    }
    Ok((c_w, c_sug))
}
