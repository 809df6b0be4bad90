//! Canonical finite sums of (coefficient × Heisenberg monomial × e^γ).

use std::collections::BTreeMap;

use num_traits::Zero;

use super::{exp_weight, heis_pair, LatticeError, LatticePoint};
use crate::rational::{q, q1, Q};

/// Heisenberg monomial: sorted pairs (n, i) standing for h_i(-n), n ≥ 1, with i an index
/// into the basis (α, σ, δ, φ). Repeats encode powers.
pub type Mono = Vec<(u32, u8)>;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Key {
    /// Exponent γ in (α₁, α₂, α₃) coordinates.
    pub exp: [i64; 3],
    pub mono: Mono,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LatticeState {
    pub(crate) terms: BTreeMap<Key, Q>,
}

pub(crate) fn mono_mul(a: &[(u32, u8)], b: &[(u32, u8)]) -> Mono {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        if a[i] <= b[j] {
            out.push(a[i]);
            i += 1;
        } else {
            out.push(b[j]);
            j += 1;
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    out
}

pub(crate) fn mono_degree(m: &[(u32, u8)]) -> i64 {
    m.iter().map(|&(n, _)| n as i64).sum()
}

pub(crate) fn exp_add(a: &[i64; 3], b: &[i64; 3]) -> [i64; 3] {
    [a[0] + b[0], a[1] + b[1], a[2] + b[2]]
}

impl LatticeState {
    pub fn zero() -> Self {
        Self::default()
    }
    pub fn vacuum() -> Self {
        Self::term(q1(), Vec::new(), [0, 0, 0])
    }
    pub fn term(c: Q, mut mono: Mono, exp: [i64; 3]) -> Self {
        mono.sort_unstable();
        let mut s = Self::zero();
        s.add_term(Key { exp, mono }, c);
        s
    }
    /// e^γ; γ must lie in D.
    pub fn exp(g: &LatticePoint) -> Result<Self, LatticeError> {
        let e = g.d_coords().ok_or_else(|| LatticeError::OutsideD(g.to_string()))?;
        Ok(Self::term(q1(), Vec::new(), e))
    }
    /// h(-1)·vacuum.
    pub fn heis(h: &LatticePoint) -> Self {
        Self::vacuum().mode(h, -1)
    }
    pub fn add_term(&mut self, k: Key, c: Q) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(k) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }
    pub fn iter(&self) -> impl Iterator<Item = (&Key, &Q)> {
        self.terms.iter()
    }
    pub fn len(&self) -> usize {
        self.terms.len()
    }
    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    pub fn coefficient(&self, k: &Key) -> Q {
        self.terms.get(k).cloned().unwrap_or_else(Q::zero)
    }
    pub fn add(&self, o: &Self) -> Self {
        let mut r = self.clone();
        r.add_assign(o);
        r
    }
    pub fn add_assign(&mut self, o: &Self) {
        for (k, c) in &o.terms {
            self.add_term(k.clone(), c.clone());
        }
    }
    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.scale(&q(-1)))
    }
    pub fn scale(&self, c: &Q) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LatticeState { terms: self.terms.iter().map(|(k, v)| (k.clone(), v * c)).collect() }
    }
    pub fn scale_i(&self, c: i64) -> Self {
        self.scale(&q(c))
    }

    /// Product of a Heisenberg polynomial (all exponents zero) with a state.
    pub fn heis_mul(&self, o: &Self) -> Self {
        let mut r = Self::zero();
        for (ka, ca) in &self.terms {
            debug_assert!(ka.exp == [0, 0, 0], "heis_mul needs a Heisenberg polynomial on the left");
            for (kb, cb) in &o.terms {
                r.add_term(Key { exp: kb.exp, mono: mono_mul(&ka.mono, &kb.mono) }, ca * cb);
            }
        }
        r
    }

    /// The mode h_(n) applied to the state.
    pub fn mode(&self, h: &LatticePoint, n: i64) -> Self {
        let hc = h.heis();
        let mut r = Self::zero();
        if n < 0 {
            let m = (-n) as u32;
            for (k, c) in &self.terms {
                for (i, hi) in hc.iter().enumerate() {
                    if hi.is_zero() {
                        continue;
                    }
                    r.add_term(Key { exp: k.exp, mono: mono_mul(&[(m, i as u8)], &k.mono) }, c * hi);
                }
            }
        } else if n == 0 {
            for (k, c) in &self.terms {
                let g = LatticePoint::from_d(k.exp);
                r.add_term(k.clone(), c * h.pair(&g));
            }
        } else {
            let m = n as u32;
            for (k, c) in &self.terms {
                for (pos, &(mm, idx)) in k.mono.iter().enumerate() {
                    if mm != m || (pos > 0 && k.mono[pos - 1] == (mm, idx)) {
                        continue;
                    }
                    let mult = k.mono.iter().filter(|&&x| x == (mm, idx)).count() as i64;
                    let f = heis_pair(idx as usize, &hc) * q(mult * n);
                    let mut mono = k.mono.clone();
                    mono.remove(pos);
                    r.add_term(Key { exp: k.exp, mono }, c * f);
                }
            }
        }
        r
    }

    /// Conformal weight of each term (Heisenberg degree plus the weight of e^γ).
    pub fn term_weight(k: &Key) -> Q {
        q(mono_degree(&k.mono)) + exp_weight(&LatticePoint::from_d(k.exp))
    }

    /// The common conformal weight of all terms.
    pub fn weight(&self) -> Result<Q, LatticeError> {
        let mut w: Option<Q> = None;
        for k in self.terms.keys() {
            let t = Self::term_weight(k);
            match &w {
                None => w = Some(t),
                Some(x) if *x != t => return Err(LatticeError::NotHomogeneous),
                _ => {}
            }
        }
        Ok(w.unwrap_or_else(Q::zero))
    }

    pub fn max_coefficient_height(&self) -> usize {
        self.terms.values().map(|c| c.numer().bits() as usize + c.denom().bits() as usize).max().unwrap_or(0)
    }
}
