//! JSON verdicts and the markdown atlas.

use std::fmt::Write as _;

use super::criterion::{criterion_report, tensor_square, Verdict};
use super::levels::{collapsing_levels, conformal_levels};
use super::{catalog, family_grid, instantiate, CaseId, EmbeddingCase};
use crate::rational::{fmt_q_short, Q};

/// Verdicts at every collapsing and conformal level of a case, ordered by level.
pub fn case_verdicts(case: &EmbeddingCase) -> Vec<Verdict> {
    let mut ks: Vec<Q> = collapsing_levels(case);
    ks.extend(conformal_levels(case));
    ks.sort();
    ks.dedup();
    ks.iter().map(|k| criterion_report(case, k)).collect()
}

pub fn verdicts_json(vs: &[Verdict]) -> serde_json::Value {
    serde_json::to_value(vs).expect("verdicts serialize")
}

fn levels_text(ks: &[Q]) -> String {
    if ks.is_empty() {
        "none".into()
    } else {
        ks.iter().map(fmt_q_short).collect::<Vec<_>>().join(", ")
    }
}

/// Markdown: the family table, then one section per instantiated case.
pub fn atlas_markdown(count: usize) -> String {
    let mut s = String::new();
    s.push_str("# Conformal embeddings into minimal W-algebras\n\n");
    s.push_str("| table | g | g^natural | g_{1/2} | h^vee | p(k) |\n|---|---|---|---|---|---|\n");
    for r in catalog() {
        let _ = writeln!(s, "| {} | {} | {} | {} | {} | {} |", r.table, r.g, r.gnat, r.g_half, r.h_dual, r.p);
    }
    for r in catalog() {
        let _ = writeln!(s, "\n## {}\n", r.family);
        for id in family_grid(r.family, count) {
            atlas_case(&mut s, &id);
        }
    }
    s
}

fn atlas_case(s: &mut String, id: &CaseId) {
    let Ok(case) = instantiate(id) else { return };
    let _ = writeln!(
        s,
        "### {}\n\nh^vee = {}, sdim = {}, p(k) = {}, collapsing: {}, conformal: {}\n",
        case.name(),
        fmt_q_short(&case.h_dual),
        case.sdim,
        case.p_display(),
        levels_text(&collapsing_levels(&case)),
        levels_text(&conformal_levels(&case)),
    );
    if let Some(Ok(sq)) = tensor_square(&case) {
        let _ = writeln!(s, "tensor square ({}): {}\n", sq.source, sq.display());
    }
    for v in case_verdicts(&case) {
        let ev: Vec<String> = v.evidence.iter().map(|e| format!("h[{}] = {}{}", e.mu, e.h, if e.integral { " (integral)" } else { "" })).collect();
        let _ = writeln!(
            s,
            "- k = {}: {}{}{}",
            v.k,
            v.status.as_str(),
            if ev.is_empty() { String::new() } else { format!("; {}", ev.join(", ")) },
            if v.notes.is_empty() { String::new() } else { format!(" ({})", v.notes.join("; ")) },
        );
    }
}
