//! Finite-dimensional representations of simple Lie algebras in Dynkin-label
//! coordinates: Weyl dimensions, Freudenthal characters, Klimyk tensor products.

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};

use num_traits::{Signed, ToPrimitive};
use serde::Serialize;

use crate::algebra::{AlgebraData, AlgebraError, Weight};
use crate::rational::{q, q0, Q};

pub const DEFAULT_CAP: usize = 200_000;

pub type Labels = Vec<i64>;

/// Precomputed data for one simple Lie algebra.
#[derive(Debug, Clone)]
pub struct Reps {
    pub name: String,
    cartan: Vec<Vec<i64>>,
    /// (w_i|w_j)
    form: Vec<Vec<Q>>,
    /// positive roots as labels, together with F * root for fast pairing
    pos: Vec<(Labels, Vec<Q>)>,
    rho_f: Vec<Q>,
    pub cap: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DominantCharacter {
    pub algebra: String,
    pub highest: Labels,
    pub mults: BTreeMap<Labels, u64>,
}

impl Reps {
    pub fn new(alg: &AlgebraData) -> Result<Reps, AlgebraError> {
        let cartan = alg.cartan_matrix()?;
        let fw = alg.fundamental_weights()?;
        let n = fw.len();
        let mut form: Vec<Vec<Q>> = (0..n).map(|i| (0..n).map(|j| alg.inner(&fw[i], &fw[j])).collect()).collect();
        // restricted forms may be negative definite; only ratios matter here, so flip to positive
        if n > 0 && form[0][0] < q0() {
            form.iter_mut().flatten().for_each(|x| *x = -x.clone());
        }
        let mut r = Reps { name: alg.name.clone(), cartan, form, pos: vec![], rho_f: vec![], cap: DEFAULT_CAP };
        r.pos = alg
            .pos_even
            .iter()
            .map(|a| {
                let l = alg.dynkin_labels(a).expect("roots are integral");
                let f = r.apply_form(&l);
                (l, f)
            })
            .collect();
        r.rho_f = r.apply_form(&vec![1; n]);
        Ok(r)
    }

    pub fn rank(&self) -> usize {
        self.cartan.len()
    }

    fn apply_form(&self, l: &[i64]) -> Vec<Q> {
        (0..self.rank())
            .map(|i| l.iter().zip(&self.form[i]).fold(q0(), |acc, (x, f)| if *x == 0 { acc } else { acc + f * q(*x) }))
            .collect()
    }

    fn pair_f(l: &[i64], f: &[Q]) -> Q {
        l.iter().zip(f).fold(q0(), |acc, (x, y)| if *x == 0 { acc } else { acc + y * q(*x) })
    }

    pub fn pair(&self, a: &[i64], b: &[i64]) -> Q {
        Self::pair_f(a, &self.apply_form(b))
    }

    /// Labels of simple root i.
    pub fn simple_root(&self, i: usize) -> Labels {
        self.cartan[i].clone()
    }

    pub fn positive_roots(&self) -> Vec<Labels> {
        self.pos.iter().map(|(l, _)| l.clone()).collect()
    }

    pub fn labels_of(&self, alg: &AlgebraData, w: &Weight) -> Result<Labels, AlgebraError> {
        alg.dynkin_labels(w).ok_or_else(|| AlgebraError::NotDominant(w.to_string()))
    }

    fn check_dominant(l: &[i64]) -> Result<(), AlgebraError> {
        if l.iter().any(|&x| x < 0) {
            return Err(AlgebraError::NotDominant(format!("{l:?}")));
        }
        Ok(())
    }

    pub fn weyl_dim(&self, l: &[i64]) -> Result<u128, AlgebraError> {
        Self::check_dominant(l)?;
        let lr: Labels = l.iter().map(|x| x + 1).collect();
        let mut num = q(1);
        for (_, f) in &self.pos {
            num = num * Self::pair_f(&lr, f) / Self::pair_f(&vec![1; self.rank()], f);
        }
        Ok(num.to_integer().to_u128().expect("dimension fits"))
    }

    /// Reflect to the dominant chamber; returns the dominant weight and the
    /// parity of the number of reflections used.
    pub fn to_dominant(&self, l: &[i64]) -> (Labels, bool) {
        let mut v = l.to_vec();
        let mut odd = false;
        while let Some(i) = v.iter().position(|&x| x < 0) {
            let c = v[i];
            for j in 0..v.len() {
                v[j] -= c * self.cartan[i][j];
            }
            odd = !odd;
        }
        (v, odd)
    }

    /// The Weyl orbit of a dominant weight.
    pub fn orbit(&self, l: &[i64]) -> Result<Vec<Labels>, AlgebraError> {
        let mut seen = BTreeSet::new();
        let mut out = vec![l.to_vec()];
        let mut queue = VecDeque::from([l.to_vec()]);
        seen.insert(l.to_vec());
        while let Some(v) = queue.pop_front() {
            for i in 0..v.len() {
                if v[i] > 0 {
                    let mut w = v.clone();
                    let c = v[i];
                    for j in 0..v.len() {
                        w[j] -= c * self.cartan[i][j];
                    }
                    if seen.insert(w.clone()) {
                        if seen.len() > self.cap {
                            return Err(AlgebraError::CapExceeded(self.cap));
                        }
                        out.push(w.clone());
                        queue.push_back(w);
                    }
                }
            }
        }
        Ok(out)
    }

    /// Highest summands first; equal heights in descending lexicographic order.
    pub fn sort_summands(&self, v: &mut [(Labels, u64)]) {
        v.sort_by(|a, b| self.height(&b.0).cmp(&self.height(&a.0)).then(b.0.cmp(&a.0)));
    }

    fn height(&self, l: &[i64]) -> Q {
        Self::pair_f(l, &self.rho_f)
    }

    pub fn dominant_character(&self, l: &[i64]) -> Result<DominantCharacter, AlgebraError> {
        Self::check_dominant(l)?;
        // dominant weights below l, by subtracting positive roots inside the chamber
        let mut dom: BTreeSet<Labels> = BTreeSet::new();
        dom.insert(l.to_vec());
        let mut queue = VecDeque::from([l.to_vec()]);
        while let Some(v) = queue.pop_front() {
            for (a, _) in &self.pos {
                let w: Labels = v.iter().zip(a).map(|(x, y)| x - y).collect();
                if w.iter().all(|&x| x >= 0) && dom.insert(w.clone()) {
                    if dom.len() > self.cap {
                        return Err(AlgebraError::CapExceeded(self.cap));
                    }
                    queue.push_back(w);
                }
            }
        }
        let mut order: Vec<(Q, Labels)> = dom.into_iter().map(|w| (self.height(&w), w)).collect();
        order.sort_by(|a, b| b.0.cmp(&a.0).then(b.1.cmp(&a.1)));
        let lr: Labels = l.iter().map(|x| x + 1).collect();
        let top = self.pair(&lr, &lr);
        let mut m: HashMap<Labels, u64> = HashMap::new();
        m.insert(l.to_vec(), 1);
        for (_, mu) in order.iter().skip(1) {
            let mr: Labels = mu.iter().map(|x| x + 1).collect();
            let denom = &top - self.pair(&mr, &mr);
            let mut s = q0();
            for (a, f) in &self.pos {
                let mut j = 1;
                loop {
                    let w: Labels = mu.iter().zip(a).map(|(x, y)| x + j * y).collect();
                    let (d, _) = self.to_dominant(&w);
                    let mult = *m.get(&d).unwrap_or(&0);
                    if mult == 0 {
                        break;
                    }
                    s += Self::pair_f(&w, f) * q(mult as i64);
                    j += 1;
                }
            }
            let v = q(2) * s / denom;
            debug_assert!(v.is_integer() && !v.is_negative());
            let v = v.to_integer().to_u64().unwrap();
            if v > 0 {
                m.insert(mu.clone(), v);
            }
        }
        Ok(DominantCharacter { algebra: self.name.clone(), highest: l.to_vec(), mults: m.into_iter().collect() })
    }

    /// Total dimension of a dominant character (orbit-weighted sum).
    pub fn character_dim(&self, ch: &DominantCharacter) -> Result<u128, AlgebraError> {
        let mut d = 0u128;
        for (w, m) in &ch.mults {
            d += self.orbit(w)?.len() as u128 * *m as u128;
        }
        Ok(d)
    }

    /// All weights with multiplicity.
    pub fn full_character(&self, l: &[i64]) -> Result<BTreeMap<Labels, u64>, AlgebraError> {
        let ch = self.dominant_character(l)?;
        let mut out = BTreeMap::new();
        for (w, m) in &ch.mults {
            for v in self.orbit(w)? {
                out.insert(v, *m);
            }
        }
        Ok(out)
    }

    /// Klimyk: V(l) x V(r) = sum over weights nu of the smaller factor of
    /// sign(w) V(w(l + nu + rho) - rho).
    pub fn tensor_decompose(&self, l: &[i64], r: &[i64]) -> Result<Vec<(Labels, u64)>, AlgebraError> {
        Self::check_dominant(l)?;
        Self::check_dominant(r)?;
        let (big, small) = if self.weyl_dim(l)? >= self.weyl_dim(r)? { (l, r) } else { (r, l) };
        let chars = self.full_character(small)?;
        let mut acc: BTreeMap<Labels, i64> = BTreeMap::new();
        for (nu, m) in chars {
            let shifted: Labels = big.iter().zip(&nu).map(|(a, b)| a + b + 1).collect();
            if shifted.contains(&0) {
                continue;
            }
            let (d, odd) = self.to_dominant(&shifted);
            if d.contains(&0) {
                continue;
            }
            let hw: Labels = d.iter().map(|x| x - 1).collect();
            *acc.entry(hw).or_insert(0) += if odd { -(m as i64) } else { m as i64 };
        }
        let mut out: Vec<(Labels, u64)> = Vec::new();
        for (w, c) in acc {
            assert!(c >= 0, "negative Klimyk coefficient");
            if c > 0 {
                out.push((w, c as u64));
            }
        }
        self.sort_summands(&mut out);
        Ok(out)
    }

    /// Oracle: multiply full characters and peel maximal weights.
    pub fn tensor_decompose_brute(&self, l: &[i64], r: &[i64]) -> Result<Vec<(Labels, u64)>, AlgebraError> {
        let a = self.full_character(l)?;
        let b = self.full_character(r)?;
        let mut prod: BTreeMap<Labels, i64> = BTreeMap::new();
        for (x, mx) in &a {
            for (y, my) in &b {
                let s: Labels = x.iter().zip(y).map(|(u, v)| u + v).collect();
                *prod.entry(s).or_insert(0) += (*mx * *my) as i64;
            }
        }
        let mut out: BTreeMap<Labels, u64> = BTreeMap::new();
        loop {
            prod.retain(|_, v| *v != 0);
            let Some(top) = prod
                .iter()
                .map(|(w, _)| (self.height(w), w.clone()))
                .max()
                .map(|(_, w)| w)
            else {
                break;
            };
            let c = prod[&top];
            assert!(c > 0 && top.iter().all(|&x| x >= 0), "peeling hit a non-dominant maximum");
            *out.entry(top.clone()).or_insert(0) += c as u64;
            for (w, m) in self.full_character(&top)? {
                *prod.entry(w).or_insert(0) -= c * m as i64;
            }
        }
        let mut v: Vec<(Labels, u64)> = out.into_iter().collect();
        self.sort_summands(&mut v);
        Ok(v)
    }
}

pub fn weyl_dim(alg: &AlgebraData, w: &Weight) -> Result<u128, AlgebraError> {
    let r = Reps::new(alg)?;
    r.weyl_dim(&r.labels_of(alg, w)?)
}

pub fn dominant_character(alg: &AlgebraData, w: &Weight) -> Result<DominantCharacter, AlgebraError> {
    let r = Reps::new(alg)?;
    r.dominant_character(&r.labels_of(alg, w)?)
}

pub fn tensor_decompose(alg: &AlgebraData, a: &Weight, b: &Weight) -> Result<Vec<(Labels, u64)>, AlgebraError> {
    let r = Reps::new(alg)?;
    r.tensor_decompose(&r.labels_of(alg, a)?, &r.labels_of(alg, b)?)
}

pub fn format_decomposition(d: &[(Labels, u64)]) -> String {
    let parts: Vec<String> = d
        .iter()
        .map(|(w, m)| {
            let s = AlgebraData::format_labels(w);
            if *m == 1 {
                s
            } else {
                format!("{m}*{s}")
            }
        })
        .collect();
    parts.join(" + ")
}
