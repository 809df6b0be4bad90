//! Normally ordered expressions in the strong generators.
//!
//! A word [a₁, …, a_m] stands for the right-nested product :a₁:a₂:…a_m:::, each
//! atom being T^d applied to one generator. Canonical words have non-decreasing atoms
//! (generator index first, then derivative order); the empty word is the vacuum.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::rational::Q;

use super::poly::RatFn;

/// (generator index, number of derivatives)
pub type Atom = (u16, u16);
pub type Word = Vec<Atom>;

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Expr(pub BTreeMap<Word, RatFn>);

impl Expr {
    pub fn zero() -> Self {
        Self::default()
    }
    pub fn word(w: Word, c: RatFn) -> Self {
        let mut e = Self::zero();
        e.add_term(w, c);
        e
    }
    pub fn atom(a: Atom) -> Self {
        Self::word(vec![a], RatFn::constant(Q::from_integer(1.into())))
    }
    pub fn vacuum(c: RatFn) -> Self {
        Self::word(Vec::new(), c)
    }
    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }
    pub fn add_term(&mut self, w: Word, c: RatFn) {
        if c.is_zero() {
            return;
        }
        match self.0.get_mut(&w) {
            Some(x) => {
                *x = x.add(&c);
                if x.is_zero() {
                    self.0.remove(&w);
                }
            }
            None => {
                self.0.insert(w, c);
            }
        }
    }
    pub fn add_assign(&mut self, o: &Self) {
        for (w, c) in &o.0 {
            self.add_term(w.clone(), c.clone());
        }
    }
    pub fn add_scaled(&mut self, o: &Self, s: &RatFn) {
        if s.is_zero() {
            return;
        }
        for (w, c) in &o.0 {
            self.add_term(w.clone(), c.mul(s));
        }
    }
    pub fn add(&self, o: &Self) -> Self {
        let mut r = self.clone();
        r.add_assign(o);
        r
    }
    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }
    pub fn neg(&self) -> Self {
        Expr(self.0.iter().map(|(w, c)| (w.clone(), c.neg())).collect())
    }
    pub fn scale(&self, s: &RatFn) -> Self {
        if s.is_zero() {
            return Self::zero();
        }
        Expr(self.0.iter().map(|(w, c)| (w.clone(), c.mul(s))).collect())
    }
    pub fn scale_q(&self, s: &Q) -> Self {
        if s.is_zero() {
            return Self::zero();
        }
        Expr(self.0.iter().map(|(w, c)| (w.clone(), c.scale(s))).collect())
    }
    pub fn iter(&self) -> impl Iterator<Item = (&Word, &RatFn)> {
        self.0.iter()
    }
    /// Substitute a rational level into every coefficient; None at a pole.
    pub fn eval(&self, k: &Q) -> Option<Self> {
        let mut r = Self::zero();
        for (w, c) in &self.0 {
            r.add_term(w.clone(), RatFn::constant(c.eval(k)?));
        }
        Some(r)
    }
}

/// λ-polynomial with expression coefficients; entry i is the coefficient of λ^i.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LExpr(pub Vec<Expr>);

impl LExpr {
    pub fn zero() -> Self {
        Self::default()
    }
    pub fn from_coeffs(v: Vec<Expr>) -> Self {
        let mut r = LExpr(v);
        r.trim();
        r
    }
    fn trim(&mut self) {
        while self.0.last().is_some_and(Expr::is_zero) {
            self.0.pop();
        }
    }
    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }
    pub fn coeff(&self, i: usize) -> Expr {
        self.0.get(i).cloned().unwrap_or_default()
    }
    pub fn add_at(&mut self, i: usize, e: &Expr) {
        if e.is_zero() {
            return;
        }
        if self.0.len() <= i {
            self.0.resize(i + 1, Expr::zero());
        }
        self.0[i].add_assign(e);
        self.trim();
    }
    pub fn add_assign(&mut self, o: &Self) {
        for (i, e) in o.0.iter().enumerate() {
            self.add_at(i, e);
        }
    }
    pub fn scale(&self, s: &RatFn) -> Self {
        Self::from_coeffs(self.0.iter().map(|e| e.scale(s)).collect())
    }
    pub fn neg(&self) -> Self {
        LExpr(self.0.iter().map(Expr::neg).collect())
    }
    pub fn eval(&self, k: &Q) -> Option<Self> {
        Some(Self::from_coeffs(self.0.iter().map(|e| e.eval(k)).collect::<Option<_>>()?))
    }
}

pub(crate) fn is_sorted(w: &[Atom]) -> bool {
    w.windows(2).all(|p| p[0] <= p[1])
}
