//! The homomorphism from W^{-8/3}(sl(4), θ) into the lattice realization.
//!
//! Images of G carry a factor √2, so every image is stored as a pair (r, s) meaning r + √2·s.

use std::collections::HashMap;

use serde::Serialize;

use crate::lattice::{lambda_bracket, normally_ordered, r3_generators, translation, LambdaPolynomial, LatticeState};
use crate::rational::{fmt_q_short, q, qf, Q};

use super::expr::{Atom, Expr, LExpr, Word};
use super::ope::{build_ope, OpeTable, PairCheck};
use super::WminError;

/// r + √2·s
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Sqrt2State {
    pub r: LatticeState,
    pub s: LatticeState,
}

impl Sqrt2State {
    pub fn add(&self, o: &Self) -> Self {
        Sqrt2State { r: self.r.add(&o.r), s: self.s.add(&o.s) }
    }
    pub fn scale(&self, c: &Q) -> Self {
        Sqrt2State { r: self.r.scale(c), s: self.s.scale(c) }
    }
    pub fn is_zero(&self) -> bool {
        self.r.is_zero() && self.s.is_zero()
    }
}

/// Image of one generator: `state`, times √2 when `sqrt2`.
#[derive(Clone, Debug)]
pub struct Image {
    pub state: LatticeState,
    pub sqrt2: bool,
}

pub fn level() -> Q {
    qf(-8, 3)
}

pub struct Phi {
    pub table: OpeTable,
    images: Vec<Image>,
    words: std::cell::RefCell<HashMap<Word, (LatticeState, usize)>>,
}

impl Phi {
    pub fn new() -> Result<Self, WminError> {
        let table = build_ope(4, Some(level()))?;
        let r = r3_generators();
        let third = qf(1, 3);
        let plain = |s: &LatticeState| Image { state: s.clone(), sqrt2: false };
        let root = |s: &LatticeState, c: Q| Image { state: s.scale(&c), sqrt2: true };
        let mut images = Vec::new();
        for g in &table.gens {
            let img = match g.name().as_str() {
                "J[c]" => plain(&r.j),
                "J[e23]" => plain(&r.e),
                "J[e32]" => plain(&r.f),
                "J[h2]" => plain(&r.h),
                "G[e21]" => root(&r.e1, third.clone()),
                "G[e31]" => root(&r.f1, third.clone()),
                "G[e43]" => root(&r.e2, third.clone()),
                "G[e42]" => root(&r.f2, -third.clone()),
                "w" => plain(&r.omega),
                other => return Err(WminError::UnknownGenerator(other.into())),
            };
            images.push(img);
        }
        Ok(Phi { table, images, words: Default::default() })
    }

    pub fn generator(&self, i: usize) -> &Image {
        &self.images[i]
    }

    fn atom(&self, a: Atom) -> (LatticeState, usize) {
        let img = &self.images[a.0 as usize];
        let s = (0..a.1).fold(img.state.clone(), |acc, _| translation(&acc));
        (s, img.sqrt2 as usize)
    }

    /// Image of a word as (state, number of √2 factors).
    fn word(&self, w: &Word) -> (LatticeState, usize) {
        if w.is_empty() {
            return (LatticeState::vacuum(), 0);
        }
        if let Some(r) = self.words.borrow().get(w) {
            return r.clone();
        }
        let (head, m) = self.atom(w[0]);
        let (tail, m2) = self.word(&w[1..].to_vec());
        let r = (normally_ordered(&head, &tail), m + m2);
        self.words.borrow_mut().insert(w.clone(), r.clone());
        r
    }

    pub fn map(&self, e: &Expr) -> Result<Sqrt2State, WminError> {
        let mut out = Sqrt2State::default();
        for (w, c) in e.iter() {
            let c = c.num().as_constant().filter(|_| c.is_polynomial()).ok_or(WminError::PhiLevel)?;
            let (s, m) = self.word(w);
            let c = c * q(1i64 << (m / 2));
            let part = s.scale(&c);
            if m % 2 == 0 {
                out.r.add_assign(&part);
            } else {
                out.s.add_assign(&part);
            }
        }
        Ok(out)
    }

    pub fn map_lambda(&self, l: &LExpr) -> Result<Vec<Sqrt2State>, WminError> {
        l.0.iter().map(|e| self.map(e)).collect()
    }

    /// λ-bracket of the images of two generators.
    pub fn image_bracket(&self, x: usize, y: usize) -> Vec<Sqrt2State> {
        let (a, b) = (&self.images[x], &self.images[y]);
        let lb = lambda_bracket(&a.state, &b.state);
        let deg = lb.degree().map_or(0, |d| d as usize + 1);
        (0..deg)
            .map(|i| {
                let s = lb.coeff(i as u32);
                match (a.sqrt2, b.sqrt2) {
                    (true, true) => Sqrt2State { r: s.scale(&q(2)), s: LatticeState::zero() },
                    (false, false) => Sqrt2State { r: s, s: LatticeState::zero() },
                    _ => Sqrt2State { r: LatticeState::zero(), s },
                }
            })
            .collect()
    }

    /// The displayed identity φ[G^{e21}_λ G^{e42}] = -(2/9)[E¹_λ F²].
    pub fn e1_f2_identity(&self) -> Result<bool, WminError> {
        let (x, y) = (self.table.index_of("G[e21]").unwrap(), self.table.index_of("G[e42]").unwrap());
        let lhs = self.map_lambda(self.table.entry(x, y))?;
        let r = r3_generators();
        let rhs = lambda_bracket(&r.e1, &r.f2).scale(&qf(-2, 9));
        Ok(same(&lhs, &rhs))
    }
}

fn same(lhs: &[Sqrt2State], rhs: &LambdaPolynomial) -> bool {
    let deg = rhs.degree().map_or(0, |d| d as usize + 1).max(lhs.len());
    (0..deg).all(|i| {
        let l = lhs.get(i).cloned().unwrap_or_default();
        l.s.is_zero() && l.r == rhs.coeff(i as u32)
    })
}

fn same_pairs(a: &[Sqrt2State], b: &[Sqrt2State]) -> bool {
    (0..a.len().max(b.len())).all(|i| a.get(i).cloned().unwrap_or_default() == b.get(i).cloned().unwrap_or_default())
}

#[derive(Clone, Debug, Serialize)]
pub struct PhiReport {
    pub level: String,
    pub pairs: Vec<PairCheck>,
    /// φ(ω_sug) equals the lattice Virasoro vector.
    pub omega_is_sugawara: bool,
    /// φ[G^{e21}_λ G^{e42}] = -(2/9)[E¹_λ F²].
    pub e1_f2_identity: bool,
    /// φ[ω_sug λ X] = φ((T + Δλ)X) for every J and G: the primary property of the images.
    pub sugawara_primary: bool,
    pub pass: bool,
}

/// Compare φ of every table entry with the λ-bracket of the images, over all ordered pairs.
pub fn verify_phi() -> Result<PhiReport, WminError> {
    let phi = Phi::new()?;
    let t = &phi.table;
    let ng = t.gens.len();
    let mut pairs = Vec::new();
    for x in 0..ng {
        for y in 0..ng {
            let lhs = phi.map_lambda(t.entry(x, y))?;
            let rhs = phi.image_bracket(x, y);
            let pass = same_pairs(&lhs, &rhs);
            let detail = (!pass).then(|| format!("table side {}", t.fmt_lexpr(t.entry(x, y))));
            pairs.push(PairCheck { x: t.gens[x].name(), y: t.gens[y].name(), pass, detail });
        }
    }
    let sug_expr = t.sugawara()?;
    let sug = phi.map(&sug_expr)?;
    let mut sugawara_primary = true;
    for x in (0..ng).filter(|&x| x != t.omega_index()) {
        let (_, want) = t.expected_virasoro(&sug_expr, x);
        let got = t.bracket(&sug_expr, &t.gen(x));
        sugawara_primary &= same_pairs(&phi.map_lambda(&got)?, &phi.map_lambda(&want)?);
    }
    let omega_is_sugawara = sug.s.is_zero() && sug.r == r3_generators().omega;
    let e1_f2_identity = phi.e1_f2_identity()?;
    let pass = omega_is_sugawara && e1_f2_identity && sugawara_primary && pairs.iter().all(|p| p.pass);
    Ok(PhiReport { level: fmt_q_short(&level()), pairs, omega_is_sugawara, e1_f2_identity, sugawara_primary, pass })
}
