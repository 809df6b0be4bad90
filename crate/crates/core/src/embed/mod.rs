//! Conformal embeddings of the affine subalgebra generated by g^natural into
//! minimal W-algebras: the case catalog, levels, central charges and the
//! conformal-weight criterion.

pub mod criterion;
pub mod levels;
pub mod report;

use std::fmt;
use std::sync::Arc;

use crate::algebra::{
    build_algebra, build_d21, build_osp_super, build_sl_super, lie_from_simple, AlgebraData, AlgebraError, AlgebraSpec,
    BasisConvention, Family, SuperOpts,
};
use crate::rational::{fmt_q_short, parse_q, q, q0, qf, Q};
use crate::reps::Labels;

pub use criterion::{criterion_report, h_mu, super_tensor_fixture, tensor_square, Evidence, Status, Summand, TensorSquare, Verdict};
pub use report::{atlas_markdown, case_verdicts, verdicts_json};
pub use levels::{central_charges, collapsing_levels, component_levels, conformal_levels, in_k_set};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum EmbedError {
    #[error("unknown case `{0}`")]
    UnknownCase(String),
    #[error("critical level k = -h^vee")]
    Critical,
    #[error("level {0} is outside the admissible set (some k_i + h_0i = 0 with k_i != 0)")]
    OutsideK(String),
    #[error("case {0} is excluded: {1}")]
    Excluded(String, String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// Identifies one row of the tables, instantiated.
#[derive(Debug, Clone, PartialEq)]
pub enum CaseId {
    Sl(usize),
    So(usize),
    Sp(usize),
    G2,
    F4,
    E6,
    E7,
    E8,
    /// sl(m|n) with m >= 2, n >= 1; sl(2|n) is the Table 2 row.
    SlSuper(usize, usize),
    /// psl(m|m), m >= 2
    Psl(usize),
    /// spo(n|m), n >= 2 even
    Spo(usize, usize),
    /// osp(m|n), m >= 4, n >= 2 even
    Osp(usize, usize),
    D21(Q),
    /// F(4) with g^natural = so(7)
    F4Super,
    /// F(4) with g^natural = D(2,1;2)
    F4SuperD21,
    /// G(3) with g^natural = G2
    G3Super,
    /// G(3) with g^natural = osp(3|2)
    G3SuperOsp,
}

impl fmt::Display for CaseId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CaseId::Sl(n) => write!(f, "sl({n})"),
            CaseId::So(n) => write!(f, "so({n})"),
            CaseId::Sp(n) => write!(f, "sp({n})"),
            CaseId::G2 => write!(f, "G2"),
            CaseId::F4 => write!(f, "F4"),
            CaseId::E6 => write!(f, "E6"),
            CaseId::E7 => write!(f, "E7"),
            CaseId::E8 => write!(f, "E8"),
            CaseId::SlSuper(m, n) => write!(f, "sl({m}|{n})"),
            CaseId::Psl(m) => write!(f, "psl({m}|{m})"),
            CaseId::Spo(n, m) => write!(f, "spo({n}|{m})"),
            CaseId::Osp(m, n) => write!(f, "osp({m}|{n})"),
            CaseId::D21(a) => write!(f, "D(2,1;{})", fmt_q_short(a)),
            CaseId::F4Super => write!(f, "F(4)"),
            CaseId::F4SuperD21 => write!(f, "F(4)/D(2,1;2)"),
            CaseId::G3Super => write!(f, "G(3)"),
            CaseId::G3SuperOsp => write!(f, "G(3)/osp(3|2)"),
        }
    }
}

impl CaseId {
    /// Accepts `sl4`, `sl(4)`, `A3`, `so(10)`, `D5`, `sl(5|2)`, `D(2,1;1/4)`, `F(4)/so(7)` and so on.
    /// Isomorphic small cases are mapped to their canonical row.
    pub fn parse(s: &str) -> Result<CaseId, EmbedError> {
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let err = || EmbedError::UnknownCase(s.to_string());
        match t.as_str() {
            "G2" => return Ok(CaseId::G2),
            "F4" => return Ok(CaseId::F4),
            "E6" => return Ok(CaseId::E6),
            "E7" => return Ok(CaseId::E7),
            "E8" => return Ok(CaseId::E8),
            "F(4)" | "F(4)/so(7)" | "F(4)/B3" => return Ok(CaseId::F4Super),
            "F(4)/D(2,1;2)" => return Ok(CaseId::F4SuperD21),
            "G(3)" | "G(3)/G2" => return Ok(CaseId::G3Super),
            "G(3)/osp(3|2)" => return Ok(CaseId::G3SuperOsp),
            _ => {}
        }
        if let Some(rest) = t.strip_prefix("D(2,1;").and_then(|r| r.strip_suffix(')')) {
            return Ok(CaseId::D21(parse_q(rest).map_err(|_| err())?));
        }
        let num = |x: &str| x.parse::<usize>().map_err(|_| err());
        // Lie type names
        if t.len() >= 2 && t.chars().next().unwrap().is_ascii_uppercase() && t[1..].chars().all(|c| c.is_ascii_digit()) {
            let r = num(&t[1..])?;
            return Self::normalize(match &t[..1] {
                "A" => CaseId::Sl(r + 1),
                "B" => CaseId::So(2 * r + 1),
                "C" => CaseId::Sp(2 * r),
                "D" => CaseId::So(2 * r),
                _ => return Err(err()),
            });
        }
        for pre in ["psl", "spo", "osp", "sl", "so", "sp"] {
            if let Some(rest) = t.strip_prefix(pre) {
                let inner = rest.strip_prefix('(').and_then(|r| r.strip_suffix(')')).unwrap_or(rest);
                let (a, b) = match inner.split_once('|') {
                    Some((a, b)) => (num(a)?, Some(num(b)?)),
                    None => (num(inner)?, None),
                };
                let id = match (pre, b) {
                    ("sl", None) | ("sl", Some(0)) => CaseId::Sl(a),
                    ("sl", Some(b)) => CaseId::SlSuper(a, b),
                    ("psl", Some(b)) if a == b => CaseId::Psl(a),
                    ("so", None) | ("osp", Some(0)) => CaseId::So(a),
                    ("sp", None) | ("spo", Some(0)) => CaseId::Sp(a),
                    ("spo", Some(b)) => CaseId::Spo(a, b),
                    ("osp", Some(b)) => CaseId::Osp(a, b),
                    _ => return Err(err()),
                };
                return Self::normalize(id);
            }
        }
        Err(err())
    }

    fn normalize(id: CaseId) -> Result<CaseId, EmbedError> {
        Ok(match id {
            CaseId::So(5) => CaseId::Sp(4),
            CaseId::So(6) => CaseId::Sl(4),
            CaseId::SlSuper(2, 1) | CaseId::SlSuper(1, 2) => CaseId::Spo(2, 2),
            CaseId::SlSuper(1, n) if n >= 3 => CaseId::SlSuper(n, 1),
            CaseId::Osp(m, n) if m < 4 => CaseId::Spo(n, m),
            other => other,
        })
    }
}

/// Which case of the conformal-level classification applies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub enum NatShape {
    /// g^natural zero, simple or one-dimensional
    I,
    /// centre plus a simple ideal
    II,
    /// sl(2) plus at least one more ideal
    III,
}

#[derive(Debug, Clone)]
pub enum ComponentKind {
    Center,
    Simple(AlgebraData),
}

#[derive(Debug, Clone)]
pub struct ComponentSpec {
    pub index: usize,
    pub name: String,
    pub kind: ComponentKind,
    /// Dual Coxeter number with respect to the restricted form.
    pub dual_coxeter_restricted: Q,
    pub sdim: i64,
    /// Half the square length of a long root in the restricted form (the
    /// factor relating the restricted form to the component's own normalized form).
    pub scale: Option<Q>,
}

impl ComponentSpec {
    pub fn algebra(&self) -> Option<&AlgebraData> {
        match &self.kind {
            ComponentKind::Simple(a) => Some(a),
            ComponentKind::Center => None,
        }
    }
}

/// How the tensor square of g_{-1/2} (or U+ x U-) is obtained.
#[derive(Debug, Clone)]
pub enum TensorSpec {
    /// Computed per Lie component: highest weights of the two factors
    /// (None for the centre).
    Lie { left: Vec<Option<Labels>>, right: Vec<Option<Labels>> },
    /// Read from the superalgebra fixture catalog.
    Fixture(String),
    None,
}

#[derive(Debug, Clone)]
pub struct EmbeddingCase {
    pub id: CaseId,
    pub table: u8,
    pub h_dual: Q,
    pub sdim: i64,
    pub components: Vec<ComponentSpec>,
    /// The two roots of the monic quadratic p(k).
    pub p_roots: [Q; 2],
    pub gnat_desc: String,
    pub g_half_desc: String,
    pub center: bool,
    pub shape: NatShape,
    pub tensor: TensorSpec,
    pub excluded: Option<String>,
}

impl EmbeddingCase {
    pub fn name(&self) -> String {
        self.id.to_string()
    }

    pub fn p(&self, k: &Q) -> Q {
        (k - &self.p_roots[0]) * (k - &self.p_roots[1])
    }

    pub fn p_display(&self) -> String {
        let lin = |r: &Q| {
            if *r == q0() {
                "k".to_string()
            } else if *r < q0() {
                format!("(k+{})", fmt_q_short(&-r.clone()))
            } else {
                format!("(k-{})", fmt_q_short(r))
            }
        };
        format!("{}{}", lin(&self.p_roots[0]), lin(&self.p_roots[1]))
    }
}

fn center() -> ComponentSpec {
    ComponentSpec {
        index: 0,
        name: "center".into(),
        kind: ComponentKind::Center,
        dual_coxeter_restricted: q0(),
        sdim: 1,
        scale: None,
    }
}

fn simple(alg: AlgebraData, name: &str, scale: Option<Q>) -> ComponentSpec {
    ComponentSpec {
        index: 0,
        name: name.to_string(),
        dual_coxeter_restricted: alg.dual_coxeter.clone(),
        sdim: alg.sdim(),
        kind: ComponentKind::Simple(alg),
        scale,
    }
}

/// An sl(2) spanned by one root in a one- or two-dimensional coordinate patch.
fn a1_from_root(labels: &[&str], norms: &[Q], root: &[i64]) -> ComponentSpec {
    let basis = Arc::new(BasisConvention::diagonal(labels.iter().map(|s| s.to_string()).collect(), norms.to_vec()));
    let r: Vec<Q> = root.iter().map(|&x| q(x)).collect();
    let alg = lie_from_simple("A1", basis.clone(), vec![r.clone()], 1);
    let len = basis.pair(&r, &r);
    simple(alg, "A1", Some(len / q(2)))
}

fn lie(spec: AlgebraSpec) -> AlgebraData {
    build_algebra(&spec).expect("valid Lie type")
}

fn opts(f: Family, system: &str, eps_off: usize, del_off: usize, e: Q, d: Q) -> SuperOpts {
    let mut o = SuperOpts::for_family(f);
    o.system = system.into();
    o.eps_offset = eps_off;
    o.del_offset = del_off;
    o.eps_norm = e;
    o.del_norm = d;
    o
}

/// so(N) on coordinates e_{off+1}.. with the given norm, as components
/// (empty, centre, one A1, two A1, or a simple so(N)).
fn so_components(nn: usize, off: usize, norm: Q) -> Vec<ComponentSpec> {
    let l = |i: usize| format!("e{}", off + i);
    match nn {
        0 | 1 => vec![],
        2 => vec![center()],
        3 => vec![a1_from_root(&[&l(1)], &[norm], &[1])],
        4 => {
            let (a, b) = (l(1), l(2));
            vec![
                a1_from_root(&[&a, &b], &[norm.clone(), norm.clone()], &[1, -1]),
                a1_from_root(&[&a, &b], &[norm.clone(), norm], &[1, 1]),
            ]
        }
        _ => {
            let alg = build_osp_super(nn, 0, &opts(Family::Osp, "osp-epsilon-first", off, 0, norm.clone(), q(-1))).unwrap();
            let name = if nn % 2 == 1 { format!("B{}", nn / 2) } else { format!("D{}", nn / 2) };
            vec![simple(alg, &name, Some(norm))]
        }
    }
}

fn sp_component(nn: usize, off: usize, norm: Q) -> ComponentSpec {
    let alg = build_osp_super(0, nn, &opts(Family::Spo, "spo-distinguished", 0, off, q(1), norm.clone())).unwrap();
    let name = if nn == 2 { "A1".to_string() } else { format!("C{}", nn / 2) };
    // long root 2d has square length 4*norm
    simple(alg, &name, Some(q(2) * norm))
}

fn finish_components(mut cs: Vec<ComponentSpec>) -> Vec<ComponentSpec> {
    let mut i = 1;
    for c in cs.iter_mut() {
        if matches!(c.kind, ComponentKind::Center) {
            c.index = 0;
        } else {
            c.index = i;
            i += 1;
        }
    }
    cs
}

fn shape_of(cs: &[ComponentSpec]) -> NatShape {
    let center = cs.iter().any(|c| matches!(c.kind, ComponentKind::Center));
    let simples = cs.iter().filter(|c| !matches!(c.kind, ComponentKind::Center)).count();
    match (center, simples) {
        (true, 1) => NatShape::II,
        (_, s) if s >= 2 => NatShape::III,
        _ => NatShape::I,
    }
}

fn excluded(id: CaseId, why: &str) -> EmbeddingCase {
    EmbeddingCase {
        id,
        table: 0,
        h_dual: q0(),
        sdim: 0,
        components: vec![],
        p_roots: [q0(), q0()],
        gnat_desc: String::new(),
        g_half_desc: String::new(),
        center: false,
        shape: NatShape::I,
        tensor: TensorSpec::None,
        excluded: Some(why.to_string()),
    }
}

fn ones(n: usize) -> Vec<i64> {
    vec![0; n]
}

fn fund(n: usize, i: usize, c: i64) -> Labels {
    let mut v = ones(n);
    v[i - 1] = c;
    v
}

/// Instantiate one case. Excluded families come back flagged rather than as errors.
pub fn instantiate(id: &CaseId) -> Result<EmbeddingCase, EmbedError> {
    let id = CaseId::normalize(id.clone())?;
    let bad = || EmbedError::UnknownCase(id.to_string());
    let half = qf(1, 2);
    let (table, h, sdim, comps, roots, gnat, ghalf, tensor): (u8, Q, i64, Vec<ComponentSpec>, [Q; 2], String, String, TensorSpec) = match &id {
        CaseId::Sl(n) => {
            let n = *n;
            if n == 2 {
                return Ok(excluded(id, "g = sl(2) is excluded"));
            }
            if n < 2 {
                return Err(bad());
            }
            let mut cs = vec![center()];
            let mut tensor = TensorSpec::None;
            if n >= 4 {
                let o = opts(Family::Sl, "sl-distinguished", 1, 0, q(1), q(-1));
                let a = build_sl_super(n - 2, 0, &o)?;
                let r = n - 3;
                cs.push(simple(a, &format!("A{r}"), Some(q(1))));
                tensor = TensorSpec::Lie { left: vec![None, Some(fund(r, 1, 1))], right: vec![None, Some(fund(r, r, 1))] };
            }
            (1, q(n as i64), (n * n - 1) as i64, cs, [q(-1), -q(n as i64) / q(2)], format!("gl({})", n - 2), format!("C^{0} + (C^{0})*", n - 2), tensor)
        }
        CaseId::So(n) => {
            let n = *n;
            if n < 7 {
                return Err(bad());
            }
            let mut cs = vec![a1_from_root(&["e1", "e2"], &[q(1), q(1)], &[1, -1])];
            cs.extend(so_components(n - 4, 2, q(1)));
            let tensor = if n >= 9 {
                let r = (n - 4) / 2;
                TensorSpec::Lie { left: vec![Some(vec![1]), Some(fund(r, 1, 1))], right: vec![Some(vec![1]), Some(fund(r, 1, 1))] }
            } else {
                TensorSpec::None
            };
            let nq = q(n as i64);
            (1, nq.clone() - q(2), (n * (n - 1) / 2) as i64, cs, [q(-2), -(nq - q(4)) / q(2)], format!("sl(2)+so({})", n - 4), format!("C^2 x C^{}", n - 4), tensor)
        }
        CaseId::Sp(n) => {
            let n = *n;
            if n == 2 {
                return Ok(excluded(id, "g = sp(2) = sl(2) is excluded"));
            }
            if n < 4 || n % 2 == 1 {
                return Err(bad());
            }
            let cs = vec![sp_component(n - 2, 1, half.clone())];
            let r = (n - 2) / 2;
            let tensor = TensorSpec::Lie { left: vec![Some(fund(r, 1, 1))], right: vec![Some(fund(r, 1, 1))] };
            (1, q((n / 2 + 1) as i64), (n * (n + 1) / 2) as i64, cs, [-half.clone(), -(q(n as i64) + q(4)) / q(4)], format!("sp({})", n - 2), format!("C^{}", n - 2), tensor)
        }
        CaseId::G2 => {
            let a = lie(AlgebraSpec::A(1)).scaled(&qf(1, 3), "A1");
            let cs = vec![simple(a, "A1", Some(qf(1, 3)))];
            let tensor = TensorSpec::Lie { left: vec![Some(vec![3])], right: vec![Some(vec![3])] };
            (1, q(4), 14, cs, [qf(-4, 3), qf(-5, 3)], "sl(2)".into(), "S^3 C^2".into(), tensor)
        }
        CaseId::F4 => {
            let cs = vec![simple(lie(AlgebraSpec::C(3)), "C3", Some(q(1)))];
            let tensor = TensorSpec::Lie { left: vec![Some(vec![0, 0, 1])], right: vec![Some(vec![0, 0, 1])] };
            (1, q(9), 52, cs, [qf(-5, 2), q(-3)], "sp(6)".into(), "wedge_0^3 C^6".into(), tensor)
        }
        CaseId::E6 => {
            let cs = vec![simple(lie(AlgebraSpec::A(5)), "A5", Some(q(1)))];
            let tensor = TensorSpec::Lie { left: vec![Some(fund(5, 3, 1))], right: vec![Some(fund(5, 3, 1))] };
            (1, q(12), 78, cs, [q(-3), q(-4)], "sl(6)".into(), "wedge^3 C^6".into(), tensor)
        }
        CaseId::E7 => {
            let cs = vec![simple(lie(AlgebraSpec::D(6)), "D6", Some(q(1)))];
            let tensor = TensorSpec::Lie { left: vec![Some(fund(6, 6, 1))], right: vec![Some(fund(6, 6, 1))] };
            (1, q(18), 133, cs, [q(-4), q(-6)], "so(12)".into(), "spin_12".into(), tensor)
        }
        CaseId::E8 => {
            let cs = vec![simple(lie(AlgebraSpec::E(7)), "E7", Some(q(1)))];
            let tensor = TensorSpec::Lie { left: vec![Some(fund(7, 7, 1))], right: vec![Some(fund(7, 7, 1))] };
            (1, q(30), 248, cs, [q(-6), q(-10)], "E7".into(), "dim = 56".into(), tensor)
        }
        CaseId::SlSuper(m, n) => {
            let (m, n) = (*m, *n);
            if m == n {
                return Ok(excluded(id, "g = sl(n|n) is not simple"));
            }
            if m == n + 2 {
                return Ok(excluded(id, "g = sl(n+2|n) is excluded"));
            }
            if m < 2 || n == 0 {
                return Err(bad());
            }
            let g = build_algebra(&AlgebraSpec::Sl(m, n))?;
            let roots = [q(-1), qf(n as i64 - m as i64, 2)];
            if m == 2 {
                // Table 2: g^natural = gl(n), the sl(n) part sits on the deltas with form -1
                let o = opts(Family::Sl, "sl-distinguished", 0, 0, q(1), q(-1));
                let a = build_sl_super(0, n, &o)?;
                let r = n - 1;
                let cs = vec![center(), simple(a, &format!("A{r}"), Some(q(-1)))];
                let tensor = TensorSpec::Lie { left: vec![None, Some(fund(r, 1, 1))], right: vec![None, Some(fund(r, r, 1))] };
                (2, g.dual_coxeter.clone(), g.sdim(), cs, roots, format!("gl({n})"), format!("C^{n} + (C^{n})*"), tensor)
            } else {
                let o = opts(Family::Sl, "sl-delta-first", 1, 0, q(1), q(-1));
                let a = build_sl_super(m - 2, n, &o)?;
                let name = a.name.clone();
                let cs = vec![center(), simple(a, &name, None)];
                (3, g.dual_coxeter.clone(), g.sdim(), cs, roots, format!("gl({}|{n})", m - 2), format!("C^{0}|{n} + (C^{0}|{n})*", m - 2), TensorSpec::Fixture("sl-super".into()))
            }
        }
        CaseId::Psl(m) => {
            let m = *m;
            if m < 2 {
                return Err(bad());
            }
            let o = opts(Family::Sl, "sl-distinguished", 0, 0, q(1), q(-1));
            let a = build_sl_super(m - 2, m, &o)?;
            let name = a.name.clone();
            let scale = if m == 2 { Some(q(-1)) } else { None };
            let cs = vec![simple(a, &name, scale)];
            let table = if m == 2 { 2 } else { 3 };
            (table, q0(), -2, cs, [q0(), q(-1)], name, format!("C^{0}|{m} + (C^{0}|{m})*", m - 2), TensorSpec::None)
        }
        CaseId::Spo(nn, m) => {
            let (nn, m) = (*nn, *m);
            if nn < 2 || nn % 2 == 1 || m == 0 {
                return Err(bad());
            }
            let g = build_algebra(&AlgebraSpec::Spo(nn, m))?;
            let roots = [-half.clone(), -(q(nn as i64) - q(m as i64) + q(4)) / q(4)];
            if nn == 2 {
                let cs = so_components(m, 0, -half.clone());
                let tensor = match m {
                    2 => TensorSpec::Lie { left: vec![None], right: vec![None] },
                    3 => TensorSpec::Lie { left: vec![Some(vec![2])], right: vec![Some(vec![2])] },
                    m if m >= 5 => {
                        let r = m / 2;
                        TensorSpec::Lie { left: vec![Some(fund(r, 1, 1))], right: vec![Some(fund(r, 1, 1))] }
                    }
                    _ => TensorSpec::None,
                };
                (2, g.dual_coxeter.clone(), g.sdim(), cs, roots, format!("so({m})"), format!("C^{m}"), tensor)
            } else {
                let o = opts(Family::Spo, "spo-distinguished", 0, 1, -half.clone(), half.clone());
                let a = build_osp_super(m, nn - 2, &o)?;
                let name = a.name.clone();
                let cs = vec![simple(a, &name, None)];
                (3, g.dual_coxeter.clone(), g.sdim(), cs, roots, name, format!("C^{}|{m}", nn - 2), TensorSpec::Fixture("spo".into()))
            }
        }
        CaseId::Osp(m, n) => {
            let (m, n) = (*m, *n);
            if m < 4 || n == 0 || n % 2 == 1 {
                return Err(bad());
            }
            let g = build_algebra(&AlgebraSpec::Osp(m, n))?;
            let roots = [q(-2), -(q(m as i64) - q(n as i64) - q(4)) / q(2)];
            if m == 4 {
                let cs = vec![a1_from_root(&["e1", "e2"], &[q(1), q(1)], &[1, -1]), sp_component(n, 0, q(-1))];
                let r = n / 2;
                let tensor = TensorSpec::Lie { left: vec![Some(vec![1]), Some(fund(r, 1, 1))], right: vec![Some(vec![1]), Some(fund(r, 1, 1))] };
                (2, g.dual_coxeter.clone(), g.sdim(), cs, roots, format!("sl(2)+sp({n})"), format!("C^2 x C^{n}"), tensor)
            } else {
                let o = opts(Family::Osp, "osp-epsilon-first", 2, 0, q(1), q(-1));
                let a = build_osp_super(m - 4, n, &o)?;
                let name = a.name.clone();
                let cs = vec![simple(a, &name, None), a1_from_root(&["e1", "e2"], &[q(1), q(1)], &[1, -1])];
                (3, g.dual_coxeter.clone(), g.sdim(), cs, roots, format!("osp({}|{n})+sl(2)", m - 4), format!("C^{}|{n} x C^2", m - 4), TensorSpec::Fixture("osp".into()))
            }
        }
        CaseId::D21(a) => {
            let g = build_d21(a, &SuperOpts::for_family(Family::D21a))?;
            let one = q(1);
            let cs = vec![
                a1_from_root(&["e3"], &[a / q(2)], &[2]),
                a1_from_root(&["e2"], &[-(&one + a) / q(2)], &[2]),
            ];
            (2, g.dual_coxeter.clone(), g.sdim(), cs, [a.clone(), -(one + a)], "sl(2)+sl(2)".into(), "C^2 x C^2".into(), TensorSpec::None)
        }
        CaseId::F4Super => {
            let r = qf(-2, 3);
            let cs = vec![simple(lie(AlgebraSpec::B(3)).scaled(&r, "B3"), "B3", Some(r))];
            let tensor = TensorSpec::Lie { left: vec![Some(vec![0, 0, 1])], right: vec![Some(vec![0, 0, 1])] };
            (2, q(-2), 8, cs, [qf(-2, 3), qf(2, 3)], "so(7)".into(), "spin_7".into(), tensor)
        }
        CaseId::G3Super => {
            let r = qf(-3, 4);
            let cs = vec![simple(lie(AlgebraSpec::G2).scaled(&r, "G2"), "G2", Some(r))];
            (2, qf(-3, 2), 3, cs, [half.clone(), qf(-3, 4)], "G2".into(), "Dim = 0|7".into(), TensorSpec::None)
        }
        CaseId::F4SuperD21 => {
            let d = build_d21(&q(2), &SuperOpts::for_family(Family::D21a))?;
            let cs = vec![simple(d, "D(2,1;2)", None)];
            (3, q(3), 8, cs, [qf(-3, 2), q(-1)], "D(2,1;2)".into(), "Dim = 6|4".into(), TensorSpec::None)
        }
        CaseId::G3SuperOsp => {
            let o = build_algebra(&AlgebraSpec::Osp(3, 2))?.scaled(&qf(2, 3), "osp(3|2)");
            let cs = vec![simple(o, "osp(3|2)", None)];
            (3, q(2), 3, cs, [qf(-2, 3), qf(-4, 3)], "osp(3|2)".into(), "Dim = 4|4".into(), TensorSpec::None)
        }
    };
    let comps = finish_components(comps);
    let center = comps.iter().any(|c| matches!(c.kind, ComponentKind::Center));
    let shape = shape_of(&comps);
    Ok(EmbeddingCase {
        id,
        table,
        h_dual: h,
        sdim,
        components: comps,
        p_roots: roots,
        gnat_desc: gnat,
        g_half_desc: ghalf,
        center,
        shape,
        tensor,
        excluded: None,
    })
}

/// One row of the tables as a parametric family.
#[derive(Debug, Clone, serde::Serialize)]
pub struct FamilyRow {
    pub family: &'static str,
    pub table: u8,
    pub g: &'static str,
    pub gnat: &'static str,
    pub g_half: &'static str,
    pub h_dual: &'static str,
    pub p: &'static str,
}

pub fn catalog() -> Vec<FamilyRow> {
    let r = |family, table, g, gnat, g_half, h_dual, p| FamilyRow { family, table, g, gnat, g_half, h_dual, p };
    vec![
        r("sl(n)", 1, "sl(n), n>=3", "gl(n-2)", "C^(n-2) + (C^(n-2))*", "n", "(k+1)(k+n/2)"),
        r("so(n)", 1, "so(n), n>=7", "sl(2)+so(n-4)", "C^2 x C^(n-4)", "n-2", "(k+2)(k+(n-4)/2)"),
        r("sp(n)", 1, "sp(n), n>=4", "sp(n-2)", "C^(n-2)", "n/2+1", "(k+1/2)(k+(n+4)/4)"),
        r("G2", 1, "G2", "sl(2)", "S^3 C^2", "4", "(k+4/3)(k+5/3)"),
        r("F4", 1, "F4", "sp(6)", "wedge_0^3 C^6", "9", "(k+5/2)(k+3)"),
        r("E6", 1, "E6", "sl(6)", "wedge^3 C^6", "12", "(k+3)(k+4)"),
        r("E7", 1, "E7", "so(12)", "spin_12", "18", "(k+4)(k+6)"),
        r("E8", 1, "E8", "E7", "dim = 56", "30", "(k+6)(k+10)"),
        r("sl(2|n)", 2, "sl(2|n), n!=2", "gl(n)", "C^n + (C^n)*", "2-n", "(k+1)(k+(2-n)/2)"),
        r("psl(2|2)", 2, "psl(2|2)", "sl(2)", "C^2 + C^2", "0", "k(k+1)"),
        r("spo(2|m)", 2, "spo(2|m)", "so(m)", "C^m", "2-m/2", "(k+1/2)(k+(6-m)/4)"),
        r("osp(4|m)", 2, "osp(4|m)", "sl(2)+sp(m)", "C^2 x C^m", "2-m", "(k+2)(k-m/2)"),
        r("D(2,1;a)", 2, "D(2,1;a)", "sl(2)+sl(2)", "C^2 x C^2", "0", "(k-a)(k+1+a)"),
        r("F(4)", 2, "F(4)", "so(7)", "spin_7", "-2", "(k+2/3)(k-2/3)"),
        r("G(3)", 2, "G(3)", "G2", "Dim = 0|7", "-3/2", "(k-1/2)(k+3/4)"),
        r("sl(m|n)", 3, "sl(m|n), m!=n, m>2", "gl(m-2|n)", "C^(m-2|n) + (C^(m-2|n))*", "m-n", "(k+1)(k+(m-n)/2)"),
        r("psl(m|m)", 3, "psl(m|m), m>2", "sl(m-2|m)", "C^(m-2|m) + (C^(m-2|m))*", "0", "k(k+1)"),
        r("spo(n|m)", 3, "spo(n|m), n>=4", "spo(n-2|m)", "C^(n-2|m)", "(n-m)/2+1", "(k+1/2)(k+(n-m+4)/4)"),
        r("osp(m|n)", 3, "osp(m|n), m>=5", "osp(m-4|n)+sl(2)", "C^(m-4|n) x C^2", "m-n-2", "(k+2)(k+(m-n-4)/2)"),
        r("F(4)/D(2,1;2)", 3, "F(4)", "D(2,1;2)", "Dim = 6|4", "3", "(k+3/2)(k+1)"),
        r("G(3)/osp(3|2)", 3, "G(3)", "osp(3|2)", "Dim = 4|4", "2", "(k+2/3)(k+4/3)"),
    ]
}

/// The smallest `count` legal instances of a family (ordered by total size).
pub fn family_grid(family: &str, count: usize) -> Vec<CaseId> {
    let mut out = Vec::new();
    let push = |id: CaseId, out: &mut Vec<CaseId>| {
        if out.len() >= count {
            return;
        }
        let Ok(case) = instantiate(&id) else { return };
        if case.excluded.is_none() && !out.contains(&case.id) {
            out.push(case.id);
        }
    };
    match family {
        "sl(n)" => (3..).take(count).for_each(|n| push(CaseId::Sl(n), &mut out)),
        "so(n)" => (7..).take(count).for_each(|n| push(CaseId::So(n), &mut out)),
        "sp(n)" => (2..).map(|i| 2 * i).take(count).for_each(|n| push(CaseId::Sp(n), &mut out)),
        "sl(2|n)" => [1usize, 3, 4, 5, 6, 7, 8].iter().for_each(|&n| push(CaseId::SlSuper(2, n), &mut out)),
        "spo(2|m)" => (1..).take(count).for_each(|m| push(CaseId::Spo(2, m), &mut out)),
        "osp(4|m)" => (1..).map(|i| 2 * i).take(count).for_each(|m| push(CaseId::Osp(4, m), &mut out)),
        "psl(m|m)" => (3..).take(count).for_each(|m| push(CaseId::Psl(m), &mut out)),
        "D(2,1;a)" => [qf(1, 1), qf(1, 2), qf(1, 4), q(2), qf(-1, 2), qf(-3, 2), q(3)]
            .into_iter()
            .for_each(|a| push(CaseId::D21(a), &mut out)),
        "sl(m|n)" | "spo(n|m)" | "osp(m|n)" => {
            let mut pairs = Vec::new();
            for total in 3..40usize {
                for a in 1..total {
                    let b = total - a;
                    let id = match family {
                        "sl(m|n)" if a > 2 => CaseId::SlSuper(a, b),
                        "spo(n|m)" if a >= 4 && a % 2 == 0 => CaseId::Spo(a, b),
                        "osp(m|n)" if a >= 5 && b % 2 == 0 && b > 0 => CaseId::Osp(a, b),
                        _ => continue,
                    };
                    pairs.push(id);
                }
            }
            pairs.into_iter().for_each(|id| push(id, &mut out));
        }
        other => {
            if let Ok(id) = CaseId::parse(other) {
                push(id, &mut out);
            }
        }
    }
    out
}

/// Every row instantiated on its grid.
pub fn all_cases(count: usize) -> Vec<CaseId> {
    catalog().iter().flat_map(|r| family_grid(r.family, count)).collect()
}
