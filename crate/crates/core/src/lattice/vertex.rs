//! n-th products. The main path expands the normally ordered vertex operator of each term
//! directly; the oracle path peels Heisenberg factors off with the Borcherds identity and
//! only expands bare exponentials.

use std::cell::RefCell;
use std::collections::{BTreeMap, HashMap};
use std::rc::Rc;

use num_traits::{One, Zero};

use super::state::{exp_add, mono_degree, mono_mul};
use super::{cocycle, d_pair, heis_pair, sign_q, Key, LatticePoint, LatticeState, Mono};
use crate::rational::{binom_i, q, q0, q1, Q};

type Terms = Vec<(Mono, Q)>;

thread_local! {
    static SCHUR: RefCell<HashMap<([i64; 3], usize), Rc<Terms>>> = RefCell::new(HashMap::new());
}

/// Coefficient of z^k in exp(Σ γ(-n) z^n / n), via k S_k = Σ_{n=1..k} γ(-n) S_{k-n}.
fn schur(exp: [i64; 3], k: usize) -> Rc<Terms> {
    if let Some(t) = SCHUR.with(|c| c.borrow().get(&(exp, k)).cloned()) {
        return t;
    }
    let terms: Terms = if k == 0 {
        vec![(Vec::new(), q1())]
    } else {
        let g = LatticePoint::from_d(exp).heis();
        let mut acc: BTreeMap<Mono, Q> = BTreeMap::new();
        for n in 1..=k {
            let prev = schur(exp, k - n);
            for (i, gi) in g.iter().enumerate() {
                if gi.is_zero() {
                    continue;
                }
                for (m, c) in prev.iter() {
                    let mono = mono_mul(&[(n as u32, i as u8)], m);
                    *acc.entry(mono).or_insert_with(q0) += c * gi;
                }
            }
        }
        let kq = q(k as i64);
        acc.into_iter().filter(|(_, c)| !c.is_zero()).map(|(m, c)| (m, c / &kq)).collect()
    };
    let rc = Rc::new(terms);
    SCHUR.with(|c| c.borrow_mut().insert((exp, k), rc.clone()));
    rc
}

/// Apply E₊(z) = exp(-Σ γ(n) z^{-n}/n): every factor h(-p) becomes h(-p) - ⟨γ,h⟩ z^{-p}.
/// `shift[i]` is -⟨γ, hᵢ⟩. Returns (removed weight d, coefficient, remaining monomial).
fn substitute(shift: &[Q; 4], c: &Q, mono: &[(u32, u8)]) -> Vec<(i64, Q, Mono)> {
    if shift.iter().all(Zero::is_zero) || mono.iter().all(|&(_, i)| shift[i as usize].is_zero()) {
        return vec![(0, c.clone(), mono.to_vec())];
    }
    let mut runs: Vec<((u32, u8), usize)> = Vec::new();
    for &f in mono {
        match runs.last_mut() {
            Some((x, c)) if *x == f => *c += 1,
            _ => runs.push((f, 1)),
        }
    }
    let mut out: Vec<(i64, Q, Mono)> = vec![(0, c.clone(), Vec::with_capacity(mono.len()))];
    for ((p, idx), mult) in runs {
        let s = &shift[idx as usize];
        if s.is_zero() {
            for (_, _, m) in out.iter_mut() {
                m.extend(std::iter::repeat_n((p, idx), mult));
            }
            continue;
        }
        let mut next = Vec::with_capacity(out.len() * (mult + 1));
        for (d, c, m) in &out {
            let mut spow = q1();
            for t in 0..=mult {
                let coef = if t == 0 { c.clone() } else { c * &spow * q(binom_i(mult as i64, t as i64)) };
                let mut mm = m.clone();
                mm.extend(std::iter::repeat_n((p, idx), mult - t));
                next.push((d + (p as i64) * t as i64, coef, mm));
                spow = &spow * s;
            }
        }
        out = next;
    }
    out
}

fn shifts(g: &[Q; 4]) -> [Q; 4] {
    std::array::from_fn(|i| -heis_pair(i, g))
}

/// Annihilation part of ∂^{(n-1)} h(z)/(n-1)! applied to (monomial, exponent μ):
/// Σ_{m≥0} (-1)^{n-1} C(m+n-1, n-1) h(m) z^{-m-n}. `z0` is ⟨h, μ⟩.
fn annihilate(n: u32, idx: u8, z0: &Q, items: Vec<(i64, Q, Mono)>) -> Vec<(i64, Q, Mono)> {
    let gram = super::heis_gram();
    let sign: i64 = if n % 2 == 1 { 1 } else { -1 };
    let mut out = Vec::new();
    for (zp, c, mono) in items {
        if !z0.is_zero() {
            out.push((zp - n as i64, &c * z0 * q(sign), mono.clone()));
        }
        let mut pos = 0;
        while pos < mono.len() {
            let f = mono[pos];
            let mult = mono[pos..].iter().take_while(|&&x| x == f).count();
            let m = f.0 as i64;
            let pr = &gram[idx as usize][f.1 as usize];
            if !pr.is_zero() {
                let k = sign * binom_i(m + n as i64 - 1, n as i64 - 1) * m * mult as i64;
                let mut mm = mono.clone();
                mm.remove(pos);
                out.push((zp - m - n as i64, &c * pr * q(k), mm));
            }
            pos += mult;
        }
    }
    out
}

/// Largest n with a possibly nonzero a_(n) b (bound from the lowest power of z in Y(a,z)b).
pub fn max_product_index(a: &LatticeState, b: &LatticeState) -> i64 {
    let mut best = i64::MIN;
    for (ka, _) in a.iter() {
        for (kb, _) in b.iter() {
            let v = mono_degree(&kb.mono) + mono_degree(&ka.mono) - d_pair(&ka.exp, &kb.exp) - 1;
            best = best.max(v);
        }
    }
    best
}

/// a_(n) b for arbitrary integer n, by direct expansion of Y(a, z).
pub fn nth_product(a: &LatticeState, b: &LatticeState, n: i64) -> LatticeState {
    nth_products(a, b, n, n).pop().unwrap_or_default()
}

/// a_(n) b for n = lo..=hi, sharing one expansion of Y(a, z) b.
pub fn nth_products(a: &LatticeState, b: &LatticeState, lo: i64, hi: i64) -> Vec<LatticeState> {
    let width = (hi - lo + 1).max(0) as usize;
    let mut out = vec![LatticeState::zero(); width];
    if width == 0 {
        return out;
    }
    // ⟨hᵢ, μ⟩ for each exponent μ of b
    let mut mus: HashMap<[i64; 3], [Q; 4]> = HashMap::new();
    for (kb, _) in b.iter() {
        mus.entry(kb.exp).or_insert_with(|| {
            let mu = LatticePoint::from_d(kb.exp).heis();
            std::array::from_fn(|i| heis_pair(i, &mu))
        });
    }
    for (ka, ca) in a.iter() {
        let sh = shifts(&LatticePoint::from_d(ka.exp).heis());
        let factors = &ka.mono;
        let k = factors.len();
        for mask in 0u32..(1u32 << k) {
            let creation: Vec<(u32, u8)> = (0..k).filter(|i| mask >> i & 1 == 1).map(|i| factors[i]).collect();
            let annih: Vec<(u32, u8)> = (0..k).filter(|i| mask >> i & 1 == 0).map(|i| factors[i]).collect();
            // (exponent of b, remaining monomial, z-power before E₋ and creation) -> coefficient
            let mut inter: HashMap<([i64; 3], Mono, i64), Q> = HashMap::new();
            for (kb, cb) in b.iter() {
                let mu = &mus[&kb.exp];
                let pair = d_pair(&ka.exp, &kb.exp);
                let c0 = if cocycle(&ka.exp, &kb.exp) < 0 { -(ca * cb) } else { ca * cb };
                let mut items = vec![(0i64, c0, kb.mono.clone())];
                for &(nn, idx) in &annih {
                    items = annihilate(nn, idx, &mu[idx as usize], items);
                }
                for (zp, c, mono) in items {
                    for (d, c2, rest) in substitute(&sh, &c, &mono) {
                        let pw = zp - d + pair;
                        if -lo - 1 - pw >= 0 {
                            *inter.entry((kb.exp, rest, pw)).or_insert_with(q0) += c2;
                        }
                    }
                }
            }
            let mut keys: Vec<_> = inter.into_iter().filter(|(_, c)| !c.is_zero()).collect();
            keys.sort_by(|x, y| x.0.cmp(&y.0));
            for ((mu_exp, rest, pw), c) in keys {
                let exp = exp_add(&ka.exp, &mu_exp);
                for (slot, dst) in out.iter_mut().enumerate() {
                    let budget = -(lo + slot as i64) - 1 - pw;
                    if budget < 0 {
                        break;
                    }
                    for kk in 0..=budget {
                        let sch = schur(ka.exp, kk as usize);
                        for (cmono, ccoef) in creation_parts(&creation, budget - kk) {
                            let base = mono_mul(&rest, &cmono);
                            let cc = if ccoef.is_one() { c.clone() } else { &c * &ccoef };
                            for (sm, sc) in sch.iter() {
                                dst.add_term(Key { exp, mono: mono_mul(&base, sm) }, &cc * sc);
                            }
                        }
                    }
                }
            }
        }
    }
    out
}

/// Creation parts of Π ∂^{(nᵢ-1)}hᵢ(z)/(nᵢ-1)! with total extra z-degree r:
/// each factor contributes C(p-1, n-1) h(-p) z^{p-n}, p ≥ n.
fn creation_parts(cre: &[(u32, u8)], r: i64) -> Vec<(Mono, Q)> {
    if cre.is_empty() {
        return if r == 0 { vec![(Vec::new(), q1())] } else { Vec::new() };
    }
    let (n, idx) = cre[0];
    let mut out = Vec::new();
    for s in 0..=r {
        let p = n as i64 + s;
        let c = q(binom_i(p - 1, n as i64 - 1));
        for (m, cm) in creation_parts(&cre[1..], r - s) {
            out.push((mono_mul(&[(p as u32, idx)], &m), &c * cm));
        }
    }
    out
}

/// e^γ_(n) applied to a state, used by the oracle.
fn exp_product(exp: [i64; 3], b: &LatticeState, n: i64) -> LatticeState {
    let sh = shifts(&LatticePoint::from_d(exp).heis());
    let mut out = LatticeState::zero();
    for (kb, cb) in b.iter() {
        let pair = d_pair(&exp, &kb.exp);
        let eps = sign_q(cocycle(&exp, &kb.exp));
        for (d, c, rest) in substitute(&sh, &q1(), &kb.mono) {
            let k = -n - 1 - (pair - d);
            if k < 0 {
                continue;
            }
            for (sm, sc) in schur(exp, k as usize).iter() {
                out.add_term(Key { exp: exp_add(&exp, &kb.exp), mono: mono_mul(&rest, sm) }, cb * &eps * &c * sc);
            }
        }
    }
    out
}

/// a_(n) b through the Borcherds identity
/// (h(-m)a')_(n) c = Σ_j C(m+j-1, j) [h(-m-j) a'_(n+j) c - (-1)^m a'_(n-m-j) h(j) c].
pub fn nth_product_oracle(a: &LatticeState, b: &LatticeState, n: i64) -> LatticeState {
    let mut out = LatticeState::zero();
    for (ka, ca) in a.iter() {
        out.add_assign(&oracle_term(ka, b, n).scale(ca));
    }
    out
}

fn oracle_term(ka: &Key, c: &LatticeState, n: i64) -> LatticeState {
    let Some((&(m, idx), rest)) = ka.mono.split_last() else {
        return exp_product(ka.exp, c, n);
    };
    let h = super::heis_vector(idx as usize);
    let a1 = Key { exp: ka.exp, mono: rest.to_vec() };
    let a1s = LatticeState::term(q1(), a1.mono.clone(), a1.exp);
    let m = m as i64;
    let mut out = LatticeState::zero();
    let top = max_product_index(&a1s, c);
    let mut j = 0;
    while n + j <= top {
        let inner = oracle_term(&a1, c, n + j);
        out.add_assign(&inner.mode(&h, -m - j).scale_i(binom_i(m + j - 1, j)));
        j += 1;
    }
    let sgn = if m % 2 == 0 { 1 } else { -1 };
    let maxmode = c.iter().flat_map(|(k, _)| k.mono.iter().map(|x| x.0 as i64)).max().unwrap_or(0);
    for j in 0..=maxmode {
        let hc = c.mode(&h, j);
        if hc.is_zero() {
            continue;
        }
        let inner = oracle_term(&a1, &hc, n - m - j);
        out.add_assign(&inner.scale_i(-sgn * binom_i(m + j - 1, j)));
    }
    out
}

/// λ-polynomial with state coefficients: coefficient of λ^i.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LambdaPolynomial {
    pub coeffs: BTreeMap<u32, LatticeState>,
}

impl LambdaPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }
    pub fn set(&mut self, i: u32, s: LatticeState) {
        if s.is_zero() {
            self.coeffs.remove(&i);
        } else {
            self.coeffs.insert(i, s);
        }
    }
    pub fn add_at(&mut self, i: u32, s: &LatticeState) {
        let cur = self.coeffs.remove(&i).unwrap_or_default();
        self.set(i, cur.add(s));
    }
    pub fn coeff(&self, i: u32) -> LatticeState {
        self.coeffs.get(&i).cloned().unwrap_or_default()
    }
    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
    pub fn scale(&self, c: &Q) -> Self {
        let mut r = Self::zero();
        for (i, s) in &self.coeffs {
            r.set(*i, s.scale(c));
        }
        r
    }
    pub fn add(&self, o: &Self) -> Self {
        let mut r = self.clone();
        for (i, s) in &o.coeffs {
            r.add_at(*i, s);
        }
        r
    }
    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.scale(&q(-1)))
    }
    pub fn degree(&self) -> Option<u32> {
        self.coeffs.keys().next_back().copied()
    }
}

fn factorial(n: u32) -> Q {
    (1..=n as i64).fold(q1(), |a, i| a * q(i))
}

/// [a_λ b] = Σ_{i≥0} λ^i/i! a_(i) b.
pub fn lambda_bracket(a: &LatticeState, b: &LatticeState) -> LambdaPolynomial {
    let mut r = LambdaPolynomial::zero();
    let top = max_product_index(a, b);
    for (i, s) in nth_products(a, b, 0, top).into_iter().enumerate() {
        r.set(i as u32, s.scale(&(q1() / factorial(i as u32))));
    }
    r
}

/// :ab: = a_(-1) b.
pub fn normally_ordered(a: &LatticeState, b: &LatticeState) -> LatticeState {
    nth_product(a, b, -1)
}

/// The derivation T with T e^γ = γ(-1) e^γ and [T, h(-n)] = n h(-n-1).
pub fn translation(a: &LatticeState) -> LatticeState {
    let mut out = LatticeState::zero();
    for (k, c) in a.iter() {
        let g = LatticePoint::from_d(k.exp);
        out.add_assign(&LatticeState::term(c.clone(), k.mono.clone(), k.exp).mode(&g, -1));
        for (pos, &(n, idx)) in k.mono.iter().enumerate() {
            let mut mono = k.mono.clone();
            mono[pos] = (n + 1, idx);
            out.add_term(Key { exp: k.exp, mono: { mono.sort_unstable(); mono } }, c * q(n as i64));
        }
    }
    out
}

/// Q = e^{α+β-3δ}_(0).
pub fn screening_q(a: &LatticeState) -> LatticeState {
    let s = LatticeState::exp(&LatticePoint::sigma()).expect("σ lies in D");
    nth_product(&s, a, 0)
}

/// Right side of skew-symmetry: -Σ_i (-λ-T)^i/i! a_(i) b, i.e. what [b_λ a] must equal.
pub fn skew_bracket(a: &LatticeState, b: &LatticeState) -> LambdaPolynomial {
    let ab = lambda_bracket(a, b);
    let mut r = LambdaPolynomial::zero();
    for (&i, s) in &ab.coeffs {
        // s = a_(i)b / i!; (-λ-T)^i = Σ_r C(i,r) (-λ)^r (-T)^{i-r}
        for rr in 0..=i {
            let mut t = s.clone();
            for _ in 0..(i - rr) {
                t = translation(&t).scale_i(-1);
            }
            let sign = if rr % 2 == 0 { 1 } else { -1 };
            r.add_at(rr, &t.scale(&q(-sign * binom_i(i as i64, rr as i64))));
        }
    }
    r
}
