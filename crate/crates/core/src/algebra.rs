//! Root data for simple Lie algebras of rank <= 8 and the basic classical
//! superalgebras that occur as g or as components of g^natural.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;
use std::sync::Arc;

use num_traits::{Signed, Zero};
use serde::Deserialize;

use crate::rational::{det, fmt_q_short, invert, parse_q, q, q0, qf, Q};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AlgebraError {
    #[error("unsupported algebra: {0}")]
    Unsupported(String),
    #[error("{0} is not simple")]
    NotSimple(String),
    #[error("degenerate parameter: {0}")]
    Degenerate(String),
    #[error("weights live over different bases")]
    BasisMismatch,
    #[error("weight {0} is not dominant integral")]
    NotDominant(String),
    #[error("{0} is a superalgebra; use the fixture catalog")]
    SuperAlgebra(String),
    #[error("character support exceeds the cap of {0} dominant weights")]
    CapExceeded(usize),
    #[error("cannot parse `{0}`")]
    Parse(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasisConvention {
    pub labels: Vec<String>,
    pub gram: Vec<Vec<Q>>,
}

impl BasisConvention {
    pub fn new(labels: Vec<String>, gram: Vec<Vec<Q>>) -> Result<Self, AlgebraError> {
        let n = labels.len();
        if gram.len() != n || gram.iter().any(|r| r.len() != n) {
            return Err(AlgebraError::Parse("gram shape".into()));
        }
        for i in 0..n {
            for j in 0..n {
                if gram[i][j] != gram[j][i] {
                    return Err(AlgebraError::Parse("gram not symmetric".into()));
                }
            }
        }
        if det(&gram).is_zero() {
            return Err(AlgebraError::Parse("gram is degenerate".into()));
        }
        Ok(BasisConvention { labels, gram })
    }

    pub fn diagonal(labels: Vec<String>, diag: Vec<Q>) -> Self {
        let n = diag.len();
        let gram = (0..n)
            .map(|i| (0..n).map(|j| if i == j { diag[i].clone() } else { q0() }).collect())
            .collect();
        BasisConvention { labels, gram }
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn pair(&self, a: &[Q], b: &[Q]) -> Q {
        let mut s = q0();
        for i in 0..a.len() {
            if a[i].is_zero() {
                continue;
            }
            for j in 0..b.len() {
                if !b[j].is_zero() && !self.gram[i][j].is_zero() {
                    s += &a[i] * &self.gram[i][j] * &b[j];
                }
            }
        }
        s
    }

    fn scaled(&self, r: &Q) -> Self {
        BasisConvention {
            labels: self.labels.clone(),
            gram: self.gram.iter().map(|row| row.iter().map(|x| x * r).collect()).collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Weight {
    pub basis: Arc<BasisConvention>,
    pub coords: Vec<Q>,
}

impl Weight {
    pub fn zero(basis: &Arc<BasisConvention>) -> Self {
        Weight { basis: basis.clone(), coords: vec![q0(); basis.dim()] }
    }

    pub fn new(basis: &Arc<BasisConvention>, coords: Vec<Q>) -> Self {
        assert_eq!(coords.len(), basis.dim());
        Weight { basis: basis.clone(), coords }
    }

    pub fn unit(basis: &Arc<BasisConvention>, i: usize) -> Self {
        let mut w = Self::zero(basis);
        w.coords[i] = q(1);
        w
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    pub fn add(&self, o: &Weight) -> Weight {
        debug_assert!(Arc::ptr_eq(&self.basis, &o.basis) || self.basis == o.basis);
        let coords = self.coords.iter().zip(&o.coords).map(|(a, b)| a + b).collect();
        Weight { basis: self.basis.clone(), coords }
    }

    pub fn sub(&self, o: &Weight) -> Weight {
        let coords = self.coords.iter().zip(&o.coords).map(|(a, b)| a - b).collect();
        Weight { basis: self.basis.clone(), coords }
    }

    pub fn scale(&self, c: &Q) -> Weight {
        Weight { basis: self.basis.clone(), coords: self.coords.iter().map(|a| a * c).collect() }
    }

    pub fn rebase(&self, basis: &Arc<BasisConvention>) -> Weight {
        Weight { basis: basis.clone(), coords: self.coords.clone() }
    }

    /// Parse `2d2`, `e3+e4`, `d1-e2`, `3/2e1 + 1/2*e2`, `0`.
    pub fn parse(basis: &Arc<BasisConvention>, s: &str) -> Result<Weight, AlgebraError> {
        let err = || AlgebraError::Parse(s.to_string());
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let mut w = Weight::zero(basis);
        if t == "0" {
            return Ok(w);
        }
        let mut chunks = Vec::new();
        let mut cur = String::new();
        for (i, ch) in t.chars().enumerate() {
            if (ch == '+' || ch == '-') && i > 0 && !cur.ends_with('/') {
                chunks.push(std::mem::take(&mut cur));
            }
            cur.push(ch);
        }
        chunks.push(cur);
        let mut labels: Vec<(usize, &String)> = basis.labels.iter().enumerate().collect();
        labels.sort_by_key(|(_, l)| std::cmp::Reverse(l.len()));
        for chunk in chunks {
            let (sign, body) = match chunk.strip_prefix('-') {
                Some(b) => (-1, b.to_string()),
                None => (1, chunk.trim_start_matches('+').to_string()),
            };
            let (idx, lab) = labels
                .iter()
                .find(|(_, l)| body.ends_with(l.as_str()))
                .ok_or_else(err)?;
            let coef_txt = body[..body.len() - lab.len()].trim_end_matches('*');
            let coef = if coef_txt.is_empty() { q(1) } else { parse_q(coef_txt).map_err(|_| err())? };
            w.coords[*idx] += coef * q(sign);
        }
        Ok(w)
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = String::new();
        for (c, l) in self.coords.iter().zip(&self.basis.labels) {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let a = c.abs();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { "-" } else { "+" });
            }
            if a != q(1) {
                out.push_str(&fmt_q_short(&a));
            }
            out.push_str(l);
        }
        if out.is_empty() {
            out.push('0');
        }
        f.write_str(&out)
    }
}

pub fn inner(a: &Weight, b: &Weight) -> Result<Q, AlgebraError> {
    if !(Arc::ptr_eq(&a.basis, &b.basis) || a.basis == b.basis) {
        return Err(AlgebraError::BasisMismatch);
    }
    Ok(a.basis.pair(&a.coords, &b.coords))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Root {
    pub w: Weight,
    pub odd: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub enum AlgebraSpec {
    A(usize),
    B(usize),
    C(usize),
    D(usize),
    E(usize),
    F4,
    G2,
    /// sl(m|n) with n > 0 (n = 0 is type A).
    Sl(usize, usize),
    /// osp(m|n): orthogonal m, symplectic n (even), form normalized on the orthogonal side.
    Osp(usize, usize),
    /// spo(n|m): symplectic n (even), orthogonal m, form normalized on the symplectic side.
    Spo(usize, usize),
    D21(Q),
}

impl AlgebraSpec {
    pub fn parse(s: &str) -> Result<AlgebraSpec, AlgebraError> {
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let err = || AlgebraError::Parse(s.to_string());
        let num = |x: &str| x.parse::<usize>().map_err(|_| err());
        if let Some(rest) = t.strip_prefix("D(2,1;").and_then(|r| r.strip_suffix(')')) {
            return Ok(AlgebraSpec::D21(parse_q(rest).map_err(|_| err())?));
        }
        let lower = t.to_lowercase();
        for (pre, kind) in [("sl", 0), ("osp", 1), ("spo", 2), ("so", 3), ("sp", 4)] {
            if let Some(rest) = lower.strip_prefix(pre) {
                let inner = rest.trim_start_matches('(').trim_end_matches(')');
                if inner.is_empty() || !inner.chars().next().unwrap().is_ascii_digit() {
                    continue;
                }
                let (a, b) = match inner.split_once('|') {
                    Some((a, b)) => (num(a)?, Some(num(b)?)),
                    None => (num(inner)?, None),
                };
                return Ok(match (kind, b) {
                    (0, None) | (0, Some(0)) if a >= 2 => AlgebraSpec::A(a - 1),
                    (0, Some(b)) => AlgebraSpec::Sl(a, b),
                    (1, Some(b)) if b > 0 => AlgebraSpec::Osp(a, b),
                    (1, Some(0)) | (3, None) => match a {
                        3 => AlgebraSpec::A(1),
                        n if n >= 5 && n % 2 == 1 => AlgebraSpec::B(n / 2),
                        n if n >= 6 && n % 2 == 0 => AlgebraSpec::D(n / 2),
                        _ => return Err(AlgebraError::NotSimple(s.to_string())),
                    },
                    (2, Some(b)) if b > 0 => AlgebraSpec::Spo(a, b),
                    (2, Some(0)) | (4, None) if a >= 2 && a % 2 == 0 => {
                        if a == 2 {
                            AlgebraSpec::A(1)
                        } else {
                            AlgebraSpec::C(a / 2)
                        }
                    }
                    _ => return Err(err()),
                });
            }
        }
        let mut chars = t.chars();
        let head = chars.next().ok_or_else(err)?;
        let r: usize = chars.as_str().parse().map_err(|_| err())?;
        Ok(match head {
            'A' => AlgebraSpec::A(r),
            'B' => AlgebraSpec::B(r),
            'C' => AlgebraSpec::C(r),
            'D' => AlgebraSpec::D(r),
            'E' => AlgebraSpec::E(r),
            'F' if r == 4 => AlgebraSpec::F4,
            'G' if r == 2 => AlgebraSpec::G2,
            _ => return Err(err()),
        })
    }
}

#[derive(Debug, Clone)]
pub struct AlgebraData {
    pub name: String,
    pub basis: Arc<BasisConvention>,
    pub simple: Vec<Root>,
    pub pos_even: Vec<Weight>,
    pub pos_odd: Vec<Weight>,
    pub rho: Weight,
    pub theta: Weight,
    pub dual_coxeter: Q,
    pub cartan_dim: usize,
}

impl AlgebraData {
    pub fn is_lie(&self) -> bool {
        self.pos_odd.is_empty()
    }

    pub fn rank(&self) -> usize {
        self.simple.len()
    }

    /// Super-dimension: even roots and Cartan minus odd roots.
    pub fn sdim(&self) -> i64 {
        (2 * self.pos_even.len() + self.cartan_dim) as i64 - 2 * self.pos_odd.len() as i64
    }

    pub fn inner(&self, a: &Weight, b: &Weight) -> Q {
        self.basis.pair(&a.coords, &b.coords)
    }

    pub fn weight(&self, s: &str) -> Result<Weight, AlgebraError> {
        Weight::parse(&self.basis, s)
    }

    pub fn zero(&self) -> Weight {
        Weight::zero(&self.basis)
    }

    /// Same root data with the form multiplied by `r` (a restricted form).
    pub fn scaled(&self, r: &Q, name: &str) -> AlgebraData {
        let basis = Arc::new(self.basis.scaled(r));
        let rb = |w: &Weight| w.rebase(&basis);
        AlgebraData {
            name: name.to_string(),
            simple: self.simple.iter().map(|s| Root { w: rb(&s.w), odd: s.odd }).collect(),
            pos_even: self.pos_even.iter().map(rb).collect(),
            pos_odd: self.pos_odd.iter().map(rb).collect(),
            rho: rb(&self.rho),
            theta: rb(&self.theta),
            dual_coxeter: &self.dual_coxeter * r,
            cartan_dim: self.cartan_dim,
            basis,
        }
    }

    /// A_{ij} = 2(a_i|a_j)/(a_j|a_j).
    pub fn cartan_matrix(&self) -> Result<Vec<Vec<i64>>, AlgebraError> {
        if !self.is_lie() {
            return Err(AlgebraError::SuperAlgebra(self.name.clone()));
        }
        let n = self.rank();
        let mut a = vec![vec![0i64; n]; n];
        for i in 0..n {
            for j in 0..n {
                let v = q(2) * self.inner(&self.simple[i].w, &self.simple[j].w)
                    / self.inner(&self.simple[j].w, &self.simple[j].w);
                a[i][j] = crate::rational::to_i64(&v).expect("integral Cartan entry");
            }
        }
        Ok(a)
    }

    pub fn fundamental_weights(&self) -> Result<Vec<Weight>, AlgebraError> {
        let a = self.cartan_matrix()?;
        let aq: Vec<Vec<Q>> = a.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect();
        let m = invert(&aq).expect("Cartan matrix invertible");
        Ok((0..self.rank())
            .map(|i| {
                let mut w = self.zero();
                for k in 0..self.rank() {
                    w = w.add(&self.simple[k].w.scale(&m[i][k]));
                }
                w
            })
            .collect())
    }

    /// Dynkin labels 2(w|a_i)/(a_i|a_i); `None` if some label is not an integer.
    pub fn dynkin_labels(&self, w: &Weight) -> Option<Vec<i64>> {
        self.simple
            .iter()
            .map(|s| {
                let v = q(2) * self.inner(w, &s.w) / self.inner(&s.w, &s.w);
                crate::rational::to_i64(&v)
            })
            .collect()
    }

    pub fn from_labels(&self, labels: &[i64]) -> Result<Weight, AlgebraError> {
        let fw = self.fundamental_weights()?;
        let mut w = self.zero();
        for (l, f) in labels.iter().zip(&fw) {
            if *l != 0 {
                w = w.add(&f.scale(&q(*l)));
            }
        }
        Ok(w)
    }

    /// Accepts `3w1`, `w1+w5`, `2w7`, `0` (fundamental weights) or a coordinate expression.
    pub fn parse_weight(&self, s: &str) -> Result<Weight, AlgebraError> {
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if t.contains('w') && self.is_lie() {
            let mut labels = vec![0i64; self.rank()];
            for part in t.split('+') {
                let (c, i) = part.split_once('w').ok_or_else(|| AlgebraError::Parse(s.into()))?;
                let c: i64 = if c.is_empty() { 1 } else { c.parse().map_err(|_| AlgebraError::Parse(s.into()))? };
                let i: usize = i.parse().map_err(|_| AlgebraError::Parse(s.into()))?;
                if i == 0 || i > self.rank() {
                    return Err(AlgebraError::Parse(s.into()));
                }
                labels[i - 1] += c;
            }
            return self.from_labels(&labels);
        }
        self.weight(&t)
    }

    pub fn format_labels(labels: &[i64]) -> String {
        let parts: Vec<String> = labels
            .iter()
            .enumerate()
            .filter(|(_, &l)| l != 0)
            .map(|(i, &l)| if l == 1 { format!("w{}", i + 1) } else { format!("{}w{}", l, i + 1) })
            .collect();
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join("+")
        }
    }

    pub fn roots(&self) -> Vec<Root> {
        let mut v = Vec::new();
        for w in &self.pos_even {
            v.push(Root { w: w.clone(), odd: false });
            v.push(Root { w: w.scale(&q(-1)), odd: false });
        }
        for w in &self.pos_odd {
            v.push(Root { w: w.clone(), odd: true });
            v.push(Root { w: w.scale(&q(-1)), odd: true });
        }
        v
    }
}

pub fn casimir_shifted(alg: &AlgebraData, mu: &Weight) -> Result<Q, AlgebraError> {
    let two_rho = alg.rho.scale(&q(2));
    inner(mu, &mu.add(&two_rho))
}

pub fn weyl_vector(alg: &AlgebraData) -> Weight {
    alg.rho.clone()
}

fn labels(prefix: &str, n: usize, offset: usize) -> Vec<String> {
    (1..=n).map(|i| format!("{}{}", prefix, i + offset)).collect()
}

/// Lie algebra from simple roots (given in some basis) by closing under
/// simple reflections in simple-root coordinates.
pub fn lie_from_simple(name: &str, basis: Arc<BasisConvention>, simple: Vec<Vec<Q>>, cartan_dim: usize) -> AlgebraData {
    let n = simple.len();
    let sw: Vec<Weight> = simple.iter().map(|c| Weight::new(&basis, c.clone())).collect();
    let cart: Vec<Vec<i64>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let v = q(2) * basis.pair(&sw[i].coords, &sw[j].coords) / basis.pair(&sw[j].coords, &sw[j].coords);
                    crate::rational::to_i64(&v).expect("integral Cartan entry")
                })
                .collect()
        })
        .collect();
    let mut seen: BTreeSet<Vec<i64>> = BTreeSet::new();
    let mut queue = VecDeque::new();
    for i in 0..n {
        let mut e = vec![0i64; n];
        e[i] = 1;
        seen.insert(e.clone());
        queue.push_back(e);
    }
    while let Some(c) = queue.pop_front() {
        for i in 0..n {
            let pairing: i64 = (0..n).map(|j| c[j] * cart[j][i]).sum();
            if pairing == 0 {
                continue;
            }
            let mut r = c.clone();
            r[i] -= pairing;
            if seen.insert(r.clone()) {
                queue.push_back(r);
            }
        }
    }
    let to_w = |c: &Vec<i64>| {
        let mut w = Weight::zero(&basis);
        for (k, &ck) in c.iter().enumerate() {
            if ck != 0 {
                w = w.add(&sw[k].scale(&q(ck)));
            }
        }
        w
    };
    let mut pos: Vec<(i64, Vec<i64>)> = seen
        .iter()
        .filter(|c| c.iter().all(|&x| x >= 0))
        .map(|c| (c.iter().sum::<i64>(), c.clone()))
        .collect();
    pos.sort();
    let pos_even: Vec<Weight> = pos.iter().map(|(_, c)| to_w(c)).collect();
    let theta = to_w(&pos.last().unwrap().1);
    finish(name, basis, sw.into_iter().map(|w| Root { w, odd: false }).collect(), pos_even, vec![], Some(theta), cartan_dim)
}

fn finish(
    name: &str,
    basis: Arc<BasisConvention>,
    simple: Vec<Root>,
    pos_even: Vec<Weight>,
    pos_odd: Vec<Weight>,
    theta: Option<Weight>,
    cartan_dim: usize,
) -> AlgebraData {
    let mut rho = Weight::zero(&basis);
    for w in &pos_even {
        rho = rho.add(&w.scale(&qf(1, 2)));
    }
    for w in &pos_odd {
        rho = rho.sub(&w.scale(&qf(1, 2)));
    }
    let theta = theta.unwrap_or_else(|| highest_root(&basis, &simple, &pos_even, &pos_odd));
    let two_rho = rho.scale(&q(2));
    let dual_coxeter = basis.pair(&theta.coords, &theta.add(&two_rho).coords) / q(2);
    AlgebraData { name: name.to_string(), basis, simple, pos_even, pos_odd, rho, theta, dual_coxeter, cartan_dim }
}

/// The positive root that stays a root under no simple-root translation;
/// ties broken by the last (lexicographically largest) candidate.
fn highest_root(basis: &Arc<BasisConvention>, simple: &[Root], pe: &[Weight], po: &[Weight]) -> Weight {
    let all: BTreeSet<Vec<Q>> = pe.iter().chain(po).flat_map(|w| [w.coords.clone(), w.scale(&q(-1)).coords]).collect();
    let mut cands: Vec<&Weight> = pe
        .iter()
        .chain(po)
        .filter(|w| simple.iter().all(|s| !all.contains(&w.add(&s.w).coords)))
        .collect();
    cands.sort_by(|a, b| a.coords.cmp(&b.coords));
    cands.last().map(|w| (*w).clone()).unwrap_or_else(|| Weight::zero(basis))
}

/// Which kind of basis vector sits at a chain position.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Slot {
    Eps(usize),
    Del(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Sl,
    Osp,
    Spo,
    D21a,
}

#[derive(Debug, Clone, Deserialize)]
pub struct SystemFixture {
    pub id: String,
    pub family: Family,
    #[serde(default)]
    pub order: Vec<String>,
    #[serde(default)]
    pub simple: Vec<String>,
    #[serde(default)]
    pub parity: Vec<String>,
}

#[derive(Debug, Clone, Deserialize)]
pub struct InstanceFixture {
    pub algebra: String,
    pub system: String,
    pub simple: Vec<String>,
}

#[derive(Debug, Clone, Deserialize)]
pub struct RootFixtures {
    pub systems: Vec<SystemFixture>,
    pub instances: Vec<InstanceFixture>,
}

pub fn root_fixtures() -> RootFixtures {
    serde_json::from_str(include_str!("../fixtures/super_roots.json")).expect("valid root fixture")
}

fn system(id: &str) -> Result<SystemFixture, AlgebraError> {
    root_fixtures()
        .systems
        .into_iter()
        .find(|s| s.id == id)
        .ok_or_else(|| AlgebraError::Unsupported(format!("positive system {id}")))
}

/// Options for building superalgebra (or ambient-form) root data.
#[derive(Debug, Clone)]
pub struct SuperOpts {
    pub system: String,
    pub eps_offset: usize,
    pub del_offset: usize,
    /// Squared length of each epsilon / delta basis vector.
    pub eps_norm: Q,
    pub del_norm: Q,
}

impl SuperOpts {
    pub fn for_family(f: Family) -> SuperOpts {
        let (system, e, d) = match f {
            Family::Sl => ("sl-distinguished", q(1), q(-1)),
            Family::Osp => ("osp-epsilon-first", q(1), q(-1)),
            Family::Spo => ("spo-distinguished", qf(-1, 2), qf(1, 2)),
            Family::D21a => ("d21a-distinguished", q(1), q(1)),
        };
        SuperOpts { system: system.into(), eps_offset: 0, del_offset: 0, eps_norm: e, del_norm: d }
    }
}

fn chain_order(sys: &SystemFixture, p: usize, qn: usize) -> Vec<Slot> {
    let mut v = Vec::new();
    for part in &sys.order {
        match part.as_str() {
            "epsilon" => v.extend((0..p).map(Slot::Eps)),
            "delta" => v.extend((0..qn).map(Slot::Del)),
            other => panic!("bad chain token {other}"),
        }
    }
    v
}

/// sl(p|q) with the given positive system; p or q may be zero (then it is sl(n)
/// with form of sign eps_norm or del_norm).
pub fn build_sl_super(p: usize, qn: usize, o: &SuperOpts) -> Result<AlgebraData, AlgebraError> {
    if p == qn {
        return Err(AlgebraError::NotSimple(format!("sl({p}|{qn})")));
    }
    if p + qn < 2 {
        return Err(AlgebraError::Degenerate(format!("sl({p}|{qn}) is zero")));
    }
    let sys = system(&o.system)?;
    let mut labs = labels("e", p, o.eps_offset);
    labs.extend(labels("d", qn, o.del_offset));
    let mut diag = vec![o.eps_norm.clone(); p];
    diag.extend(vec![o.del_norm.clone(); qn]);
    let basis = Arc::new(BasisConvention::diagonal(labs, diag));
    let idx = |s: Slot| match s {
        Slot::Eps(i) => i,
        Slot::Del(i) => p + i,
    };
    let order = chain_order(&sys, p, qn);
    let vec_of = |pairs: &[(usize, i64)]| {
        let mut w = Weight::zero(&basis);
        for &(i, c) in pairs {
            w.coords[i] += q(c);
        }
        w
    };
    let rank_of: Vec<usize> = {
        let mut r = vec![0; p + qn];
        for (k, s) in order.iter().enumerate() {
            r[idx(*s)] = k;
        }
        r
    };
    let mut pe = Vec::new();
    let mut po = Vec::new();
    for a in 0..p + qn {
        for b in 0..p + qn {
            if rank_of[a] < rank_of[b] {
                let w = vec_of(&[(a, 1), (b, -1)]);
                if (a < p) == (b < p) {
                    pe.push(w);
                } else {
                    po.push(w);
                }
            }
        }
    }
    let simple: Vec<Root> = order
        .windows(2)
        .map(|w| Root { w: vec_of(&[(idx(w[0]), 1), (idx(w[1]), -1)]), odd: (idx(w[0]) < p) != (idx(w[1]) < p) })
        .collect();
    let name = match (p, qn) {
        (_, 0) => format!("sl({p})"),
        (0, _) => format!("sl({qn})"),
        _ => format!("sl({p}|{qn})"),
    };
    sort_weights(&mut pe);
    sort_weights(&mut po);
    Ok(finish(&name, basis, simple, pe, po, None, p + qn - 1))
}

fn sort_weights(v: &mut [Weight]) {
    v.sort_by(|a, b| a.coords.cmp(&b.coords));
}

/// Orthosymplectic root data: `m` orthogonal, `n` symplectic (even).
pub fn build_osp_super(m: usize, n: usize, o: &SuperOpts) -> Result<AlgebraData, AlgebraError> {
    if n % 2 != 0 {
        return Err(AlgebraError::Unsupported(format!("odd symplectic size {n}")));
    }
    let r = m / 2;
    let s = n / 2;
    let odd_m = m % 2 == 1;
    if r + s == 0 {
        return Err(AlgebraError::Degenerate("osp(1|0) or smaller is zero".into()));
    }
    if !odd_m && s == 0 && r < 2 {
        return Err(AlgebraError::NotSimple(format!("so({m})")));
    }
    let sys = system(&o.system)?;
    let mut labs = labels("e", r, o.eps_offset);
    labs.extend(labels("d", s, o.del_offset));
    let mut diag = vec![o.eps_norm.clone(); r];
    diag.extend(vec![o.del_norm.clone(); s]);
    let basis = Arc::new(BasisConvention::diagonal(labs, diag));
    let order = chain_order(&sys, r, s);
    let idx = |sl: Slot| match sl {
        Slot::Eps(i) => i,
        Slot::Del(i) => r + i,
    };
    let is_eps = |i: usize| i < r;
    let vec_of = |pairs: &[(usize, i64)]| {
        let mut w = Weight::zero(&basis);
        for &(i, c) in pairs {
            w.coords[i] += q(c);
        }
        w
    };
    let nb = r + s;
    let mut even = Vec::new();
    let mut odd = Vec::new();
    for a in 0..nb {
        for b in a + 1..nb {
            for (sa, sb) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
                let w = vec_of(&[(a, sa), (b, sb)]);
                if is_eps(a) == is_eps(b) {
                    even.push(w);
                } else {
                    odd.push(w);
                }
            }
        }
        for sa in [1, -1] {
            if is_eps(a) {
                if odd_m {
                    even.push(vec_of(&[(a, sa)]));
                }
            } else {
                even.push(vec_of(&[(a, 2 * sa)]));
                if odd_m {
                    odd.push(vec_of(&[(a, sa)]));
                }
            }
        }
    }
    let rank_of: Vec<usize> = {
        let mut rk = vec![0; nb];
        for (k, sl) in order.iter().enumerate() {
            rk[idx(*sl)] = k;
        }
        rk
    };
    let positive = |w: &Weight| {
        let mut best: Option<(usize, bool)> = None;
        for i in 0..nb {
            if !w.coords[i].is_zero() && best.is_none_or(|(rk, _)| rank_of[i] < rk) {
                best = Some((rank_of[i], w.coords[i].is_positive()));
            }
        }
        best.is_some_and(|(_, p)| p)
    };
    let mut pe: Vec<Weight> = even.into_iter().filter(|w| positive(w)).collect();
    let mut po: Vec<Weight> = odd.into_iter().filter(|w| positive(w)).collect();
    sort_weights(&mut pe);
    sort_weights(&mut po);
    let mut simple: Vec<Root> = order
        .windows(2)
        .map(|w| Root { w: vec_of(&[(idx(w[0]), 1), (idx(w[1]), -1)]), odd: is_eps(idx(w[0])) != is_eps(idx(w[1])) })
        .collect();
    let last = idx(*order.last().unwrap());
    if odd_m {
        simple.push(Root { w: vec_of(&[(last, 1)]), odd: !is_eps(last) });
    } else if is_eps(last) {
        let prev = idx(order[order.len() - 2]);
        simple.push(Root { w: vec_of(&[(prev, 1), (last, 1)]), odd: is_eps(prev) != is_eps(last) });
    } else {
        simple.push(Root { w: vec_of(&[(last, 2)]), odd: false });
    }
    let name = match (o.system.starts_with("spo"), n, m) {
        (_, 0, _) => format!("so({m})"),
        (_, _, 0) => format!("sp({n})"),
        (true, _, _) => format!("spo({n}|{m})"),
        (false, _, _) => format!("osp({m}|{n})"),
    };
    Ok(finish(&name, basis, simple, pe, po, None, nb))
}

pub fn build_d21(a: &Q, o: &SuperOpts) -> Result<AlgebraData, AlgebraError> {
    if a.is_zero() || *a == q(-1) {
        return Err(AlgebraError::Degenerate(format!("D(2,1;{}) needs a not in {{0,-1}}", fmt_q_short(a))));
    }
    let sys = system(&o.system)?;
    let basis = Arc::new(BasisConvention::diagonal(
        labels("e", 3, o.eps_offset),
        vec![qf(1, 2), -(q(1) + a) / q(2), a / q(2)],
    ));
    let mut pe = Vec::new();
    let mut po = Vec::new();
    for i in 0..3 {
        let mut w = Weight::zero(&basis);
        w.coords[i] = q(2);
        pe.push(w);
    }
    for s2 in [1, -1] {
        for s3 in [1, -1] {
            po.push(Weight::new(&basis, vec![q(1), q(s2), q(s3)]));
        }
    }
    sort_weights(&mut pe);
    sort_weights(&mut po);
    let simple = sys
        .simple
        .iter()
        .zip(&sys.parity)
        .map(|(s, p)| Ok(Root { w: Weight::parse(&basis, s)?, odd: p == "odd" }))
        .collect::<Result<Vec<_>, AlgebraError>>()?;
    let name = format!("D(2,1;{})", fmt_q_short(a));
    Ok(finish(&name, basis, simple, pe, po, None, 3))
}

fn exceptional(name: &str, gram: Vec<Vec<Q>>) -> AlgebraData {
    let n = gram.len();
    let basis = Arc::new(BasisConvention { labels: labels("a", n, 0), gram });
    let simple = (0..n).map(|i| (0..n).map(|j| if i == j { q(1) } else { q0() }).collect()).collect();
    lie_from_simple(name, basis, simple, n)
}

fn simply_laced(name: &str, n: usize, edges: &[(usize, usize)]) -> AlgebraData {
    let mut g = vec![vec![q0(); n]; n];
    for i in 0..n {
        g[i][i] = q(2);
    }
    for &(a, b) in edges {
        g[a - 1][b - 1] = q(-1);
        g[b - 1][a - 1] = q(-1);
    }
    exceptional(name, g)
}

fn eps_simple(n: usize, tail: &[(usize, i64)]) -> Vec<Vec<Q>> {
    let dim = tail.iter().map(|t| t.0 + 1).max().unwrap_or(n).max(n);
    let mut v = Vec::new();
    for i in 0..n - 1 {
        let mut c = vec![q0(); dim];
        c[i] = q(1);
        c[i + 1] = q(-1);
        v.push(c);
    }
    if !tail.is_empty() {
        let mut c = vec![q0(); dim];
        for &(i, x) in tail {
            c[i] += q(x);
        }
        v.push(c);
    }
    v
}

pub fn build_algebra(spec: &AlgebraSpec) -> Result<AlgebraData, AlgebraError> {
    Ok(match spec {
        AlgebraSpec::A(n) if *n >= 1 && *n <= 8 => {
            let basis = Arc::new(BasisConvention::diagonal(labels("e", n + 1, 0), vec![q(1); n + 1]));
            lie_from_simple(&format!("A{n}"), basis, eps_simple(n + 1, &[]), *n)
        }
        AlgebraSpec::B(n) if *n >= 2 && *n <= 8 => {
            let basis = Arc::new(BasisConvention::diagonal(labels("e", *n, 0), vec![q(1); *n]));
            lie_from_simple(&format!("B{n}"), basis, eps_simple(*n, &[(n - 1, 1)]), *n)
        }
        AlgebraSpec::C(n) if *n >= 2 && *n <= 8 => {
            let basis = Arc::new(BasisConvention::diagonal(labels("e", *n, 0), vec![qf(1, 2); *n]));
            lie_from_simple(&format!("C{n}"), basis, eps_simple(*n, &[(n - 1, 2)]), *n)
        }
        AlgebraSpec::D(n) if *n >= 3 && *n <= 8 => {
            let basis = Arc::new(BasisConvention::diagonal(labels("e", *n, 0), vec![q(1); *n]));
            lie_from_simple(&format!("D{n}"), basis, eps_simple(*n, &[(n - 2, 1), (n - 1, 1)]), *n)
        }
        AlgebraSpec::E(6) => simply_laced("E6", 6, &[(1, 3), (3, 4), (4, 5), (5, 6), (2, 4)]),
        AlgebraSpec::E(7) => simply_laced("E7", 7, &[(1, 3), (3, 4), (4, 5), (5, 6), (6, 7), (2, 4)]),
        AlgebraSpec::E(8) => simply_laced("E8", 8, &[(1, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 8), (2, 4)]),
        AlgebraSpec::F4 => {
            let g = vec![
                vec![q(2), q(-1), q0(), q0()],
                vec![q(-1), q(2), q(-1), q0()],
                vec![q0(), q(-1), q(1), qf(-1, 2)],
                vec![q0(), q0(), qf(-1, 2), q(1)],
            ];
            exceptional("F4", g)
        }
        AlgebraSpec::G2 => exceptional("G2", vec![vec![qf(2, 3), q(-1)], vec![q(-1), q(2)]]),
        AlgebraSpec::Sl(m, n) => build_sl_super(*m, *n, &SuperOpts::for_family(Family::Sl))?,
        AlgebraSpec::Osp(m, n) => {
            if *m == 0 {
                return Err(AlgebraError::Unsupported("use sp(n) for osp(0|n)".into()));
            }
            build_osp_super(*m, *n, &SuperOpts::for_family(Family::Osp))?
        }
        AlgebraSpec::Spo(n, m) => {
            if *n == 0 {
                return Err(AlgebraError::Unsupported("use so(m) for spo(0|m)".into()));
            }
            build_osp_super(*m, *n, &SuperOpts::for_family(Family::Spo))?
        }
        AlgebraSpec::D21(a) => build_d21(a, &SuperOpts::for_family(Family::D21a))?,
        other => return Err(AlgebraError::Unsupported(format!("{other:?}"))),
    })
}
