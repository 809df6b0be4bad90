//! The λ-bracket table of W^k(sl(n), θ) on its strong generators, and the
//! normal-ordering / λ-bracket calculus built on top of it.

use std::cell::RefCell;
use std::collections::{BTreeMap, HashMap};

use num_traits::{One, Zero};
use serde::Serialize;

use crate::rational::{binom_i, fmt_q_short, parse_q, q, q0, qf, Q};

use super::ctx::{form, Mat, OpeContext};
use super::expr::{is_sorted, Atom, Expr, LExpr, Word};
use super::poly::{parse_ratfn, Poly, RatFn};
use super::WminError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum GenKind {
    J,
    G,
    Omega,
}

#[derive(Clone, Debug, Serialize)]
pub struct Generator {
    pub kind: GenKind,
    pub label: String,
}

impl Generator {
    pub fn name(&self) -> String {
        match self.kind {
            GenKind::J => format!("J[{}]", self.label),
            GenKind::G => format!("G[{}]", self.label),
            GenKind::Omega => "w".into(),
        }
    }
    /// Conformal weight: 1 for J, 3/2 for G, 2 for ω.
    pub fn weight(&self) -> Q {
        match self.kind {
            GenKind::J => q(1),
            GenKind::G => qf(3, 2),
            GenKind::Omega => q(2),
        }
    }
}

fn rc(x: Q) -> RatFn {
    RatFn::constant(x)
}

/// a·k + b
fn kl(a: Q, b: Q) -> RatFn {
    Poly::from_coeffs(vec![b, a]).into()
}

#[derive(Default)]
struct Caches {
    insert: HashMap<(Atom, Word), Expr>,
    nop: HashMap<(Word, Word), Expr>,
    bracket: HashMap<(Word, Word), LExpr>,
    deriv: HashMap<Word, Expr>,
}

pub struct OpeTable {
    pub ctx: OpeContext,
    pub gens: Vec<Generator>,
    /// None for formal k.
    pub level: Option<Q>,
    table: Vec<Vec<LExpr>>,
    cache: RefCell<Caches>,
}

/// One generator pair of a comparison or consistency check.
#[derive(Clone, Debug, Serialize)]
pub struct PairCheck {
    pub x: String,
    pub y: String,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct PrimaryCheck {
    pub field: String,
    pub weight: bool,
    pub translation: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

/// Central charge k(n²-1)/(k+n) - 6k + n - 4 of W^k(sl(n), θ).
pub fn central_charge(n: usize) -> RatFn {
    let nn = q(n as i64);
    let d = Poly::k_plus(nn.clone());
    let first = RatFn::new(Poly::k().scale(&(&nn * &nn - q(1))), d);
    first.add(&kl(q(-6), nn - q(4)))
}

/// Build the table for sl(n); `level = None` keeps k formal.
pub fn build_ope(n: usize, level: Option<Q>) -> Result<OpeTable, WminError> {
    let ctx = OpeContext::sl(n)?;
    if let Some(k) = &level {
        if *k == -ctx.h_dual.clone() {
            return Err(WminError::Critical(fmt_q_short(k)));
        }
    }
    let mut gens: Vec<Generator> =
        ctx.nat_labels.iter().map(|l| Generator { kind: GenKind::J, label: l.clone() }).collect();
    gens.extend(ctx.minus_labels.iter().map(|l| Generator { kind: GenKind::G, label: l.clone() }));
    gens.push(Generator { kind: GenKind::Omega, label: "w".into() });
    let ng = gens.len();
    let mut t = OpeTable {
        ctx,
        gens,
        level: None,
        table: vec![vec![LExpr::zero(); ng]; ng],
        cache: RefCell::new(Caches::default()),
    };
    t.fill_linear();
    t.fill_gg();
    if let Some(k) = level {
        for row in t.table.iter_mut() {
            for e in row.iter_mut() {
                *e = e.eval(&k).ok_or_else(|| WminError::Critical(fmt_q_short(&k)))?;
            }
        }
        t.level = Some(k);
        t.clear_caches();
    }
    Ok(t)
}

impl OpeTable {
    fn clear_caches(&self) {
        *self.cache.borrow_mut() = Caches::default();
    }

    pub fn n_j(&self) -> usize {
        self.ctx.nat.len()
    }
    pub fn omega_index(&self) -> usize {
        self.gens.len() - 1
    }
    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.gens.iter().position(|g| g.name() == name)
    }
    /// The stored bracket [X_λ Y] of two generators.
    pub fn entry(&self, x: usize, y: usize) -> &LExpr {
        &self.table[x][y]
    }
    pub fn gen(&self, i: usize) -> Expr {
        Expr::atom((i as u16, 0))
    }
    pub fn omega(&self) -> Expr {
        self.gen(self.omega_index())
    }

    /// J^{a♮} for a ∈ g₀.
    pub fn j_of(&self, a: &Mat) -> Expr {
        let mut e = Expr::zero();
        for (i, c) in self.ctx.nat_coords(a).into_iter().enumerate() {
            e.add_term(vec![(i as u16, 0)], rc(c));
        }
        e
    }
    /// J^{a♮_i}: the part of a♮ lying in ideal i.
    fn j_of_ideal(&self, a: &Mat, ideal: usize) -> Expr {
        let mut e = Expr::zero();
        for (i, c) in self.ctx.nat_coords(a).into_iter().enumerate() {
            if self.ctx.nat_ideal[i] == ideal {
                e.add_term(vec![(i as u16, 0)], rc(c));
            }
        }
        e
    }
    /// G^u for u ∈ g_{-1/2}.
    pub fn g_of(&self, u: &Mat) -> Expr {
        let nj = self.n_j();
        let mut e = Expr::zero();
        for (i, c) in self.ctx.minus_coords(u).into_iter().enumerate() {
            e.add_term(vec![((nj + i) as u16, 0)], rc(c));
        }
        e
    }

    fn fill_linear(&mut self) {
        let nj = self.n_j();
        let ng = self.gens.len();
        let w = self.omega_index();
        let cc = &self.ctx;
        for a in 0..nj {
            for b in 0..nj {
                let (f, c) = cc.jj_level(a, b);
                let top = self.j_of(&cc.nat[a].bracket(&cc.nat[b]));
                self.table[a][b] = LExpr::from_coeffs(vec![top, Expr::vacuum(kl(f, c))]);
            }
            for (ui, u) in cc.minus_half.iter().enumerate() {
                self.table[a][nj + ui] = LExpr::from_coeffs(vec![self.g_of(&cc.nat[a].bracket(u))]);
                self.table[nj + ui][a] = LExpr::from_coeffs(vec![self.g_of(&u.bracket(&cc.nat[a]))]);
            }
        }
        for x in 0..ng {
            let gx = Expr::atom((x as u16, 0));
            let dx = Expr::atom((x as u16, 1));
            if x == w {
                let cw = central_charge(cc.n).mul(&rc(qf(1, 12)));
                self.table[w][w] =
                    LExpr::from_coeffs(vec![dx.clone(), gx.scale_q(&q(2)), Expr::zero(), Expr::vacuum(cw)]);
                continue;
            }
            let wt = self.gens[x].weight();
            self.table[w][x] = LExpr::from_coeffs(vec![dx.clone(), gx.scale_q(&wt)]);
            // skew-symmetry of (T + Δλ)X
            self.table[x][w] = LExpr::from_coeffs(vec![dx.scale_q(&(&wt - q(1))), gx.scale_q(&wt)]);
        }
    }

    fn fill_gg(&mut self) {
        let nj = self.n_j();
        let cc = self.ctx.clone();
        let n = q(cc.n as i64);
        let p = Poly::k_plus(q(1)).mul(&Poly::k_plus(&n / q(2)));
        let p_over: Vec<RatFn> = (0..cc.ideal_count())
            .map(|i| {
                let (quo, rem) = p.div_rem(&Poly::k_plus(cc.ideal_shift(i)));
                debug_assert!(rem.is_zero());
                quo.into()
            })
            .collect();
        let casimir = (0..nj).fold(Expr::zero(), |mut acc, a| {
            acc.add_assign(&self.nop(&self.j_of(&cc.nat_dual[a]), &self.gen(a)));
            acc
        });
        let mut out = Vec::new();
        for (ui, u) in cc.minus_half.iter().enumerate() {
            for (vi, v) in cc.minus_half.iter().enumerate() {
                let t = form(&cc.e_theta, &u.bracket(v));
                let mut c0 = self.omega().scale(&kl(&t * q(-2), &t * &n * q(-2)));
                c0.add_assign(&casimir.scale_q(&t));
                for (g, ug) in cc.plus_half.iter().enumerate() {
                    let l = self.j_of(&u.bracket(&cc.plus_dual[g]));
                    let r = self.j_of(&ug.bracket(v));
                    c0.add_assign(&self.nop(&l, &r));
                }
                let w = cc.e_theta.bracket(u).bracket(v);
                c0.add_assign(&self.deriv(&self.j_of(&w)).scale(&kl(q(2), q(2))));
                let mut c1 = Expr::zero();
                for (i, po) in p_over.iter().enumerate() {
                    c1.add_assign(&self.j_of_ideal(&w, i).scale(&po.scale(&q(4))));
                }
                let c2 = Expr::vacuum(RatFn::from(p.scale(&(&t * q(2)))));
                out.push((nj + ui, nj + vi, LExpr::from_coeffs(vec![c0, c1, c2])));
            }
        }
        for (a, b, e) in out {
            self.table[a][b] = e;
        }
        self.clear_caches();
    }

    /// Sugawara vector Σ_i 1/(2(k_i + h0_i)) Σ_{α ∈ ideal i} :J^{u^α} J^{u_α}:, over the
    /// ideals with nonzero level (all of them when k is formal).
    pub fn sugawara(&self) -> Result<Expr, WminError> {
        let cc = &self.ctx;
        let mut out = Expr::zero();
        for i in 0..cc.ideal_count() {
            let shift = cc.ideal_shift(i);
            let denom = Poly::k_plus(&shift + &cc.h0[i]).scale(&q(2));
            let coef = match &self.level {
                None => RatFn::new(Poly::one(), denom),
                Some(k) => {
                    if (k + &shift).is_zero() {
                        continue;
                    }
                    let d = denom.eval(k);
                    if d.is_zero() {
                        return Err(WminError::Critical(fmt_q_short(k)));
                    }
                    rc(q(1) / d)
                }
            };
            for a in (0..self.n_j()).filter(|&a| cc.nat_ideal[a] == i) {
                out.add_assign(&self.nop(&self.j_of(&cc.nat_dual[a]), &self.gen(a)).scale(&coef));
            }
        }
        Ok(out)
    }

    // ---------------------------------------------------------------- calculus

    /// [T^m x _λ T^n y] = (-λ)^m (λ+T)^n [x_λ y].
    fn bracket_atoms(&self, a: Atom, b: Atom) -> LExpr {
        let base = &self.table[a.0 as usize][b.0 as usize];
        if a.1 == 0 && b.1 == 0 {
            return base.clone();
        }
        let (m, n) = (a.1 as usize, b.1 as usize);
        let sign = if m % 2 == 0 { q(1) } else { q(-1) };
        let mut r = LExpr::zero();
        for (j, c) in base.0.iter().enumerate() {
            let mut d = c.clone();
            for i in 0..=n {
                let coef = &sign * q(binom_i(n as i64, i as i64));
                r.add_at(j + n - i + m, &d.scale_q(&coef));
                if i < n {
                    d = self.deriv(&d);
                }
            }
        }
        r
    }

    pub fn deriv(&self, e: &Expr) -> Expr {
        let mut r = Expr::zero();
        for (w, c) in e.iter() {
            r.add_scaled(&self.deriv_word(w), c);
        }
        r
    }

    pub fn deriv_n(&self, e: &Expr, n: usize) -> Expr {
        (0..n).fold(e.clone(), |acc, _| self.deriv(&acc))
    }

    fn deriv_word(&self, w: &Word) -> Expr {
        if let Some(r) = self.cache.borrow().deriv.get(w) {
            return r.clone();
        }
        let mut r = Expr::zero();
        for pos in 0..w.len() {
            let mut v = w.clone();
            v[pos].1 += 1;
            r.add_assign(&self.from_atoms(&v));
        }
        self.cache.borrow_mut().deriv.insert(w.clone(), r.clone());
        r
    }

    /// Canonical form of the right-nested product of `atoms` in the given order.
    pub fn from_atoms(&self, atoms: &[Atom]) -> Expr {
        if is_sorted(atoms) {
            return Expr::word(atoms.to_vec(), rc(q(1)));
        }
        atoms.iter().rev().fold(Expr::vacuum(rc(q(1))), |acc, a| self.insert_expr(*a, &acc))
    }

    fn insert_expr(&self, a: Atom, e: &Expr) -> Expr {
        let mut r = Expr::zero();
        for (w, c) in e.iter() {
            r.add_scaled(&self.insert(a, w), c);
        }
        r
    }

    /// :a W: for an atom a and canonical word W.
    fn insert(&self, a: Atom, w: &Word) -> Expr {
        if w.is_empty() || a <= w[0] {
            let mut v = Vec::with_capacity(w.len() + 1);
            v.push(a);
            v.extend_from_slice(w);
            return Expr::word(v, rc(q(1)));
        }
        let key = (a, w.clone());
        if let Some(r) = self.cache.borrow().insert.get(&key) {
            return r.clone();
        }
        let rest: Word = w[1..].to_vec();
        // :a:bC:: = :b:aC:: + :(:ab: - :ba:) C:, with :ab: - :ba: = Σ_j (-1)^j/(j+1) T^{j+1} [a_λ b]_j
        let mut r = self.insert_expr(w[0], &self.insert(a, &rest));
        let ab = self.bracket_atoms(a, w[0]);
        let mut d = Expr::zero();
        for (j, c) in ab.0.iter().enumerate() {
            let s = if j % 2 == 0 { qf(1, j as i64 + 1) } else { qf(-1, j as i64 + 1) };
            d.add_assign(&self.deriv_n(c, j + 1).scale_q(&s));
        }
        r.add_assign(&self.nop(&d, &Expr::word(rest, rc(q(1)))));
        self.cache.borrow_mut().insert.insert(key, r.clone());
        r
    }

    /// Normally ordered product :XY:.
    pub fn nop(&self, x: &Expr, y: &Expr) -> Expr {
        let mut r = Expr::zero();
        for (u, cu) in x.iter() {
            for (v, cv) in y.iter() {
                r.add_scaled(&self.nop_word(u, v), &cu.mul(cv));
            }
        }
        r
    }

    fn nop_word(&self, u: &Word, v: &Word) -> Expr {
        match u.len() {
            0 => return Expr::word(v.clone(), rc(q(1))),
            1 => return self.insert(u[0], v),
            _ => {}
        }
        let key = (u.clone(), v.clone());
        if let Some(r) = self.cache.borrow().nop.get(&key) {
            return r.clone();
        }
        // ::aB:V: = :a:BV:: + Σ_i :(T^{i+1}a/(i+1)) [B_λ V]_i: + Σ_j :(T^{j+1}B/(j+1)) [a_λ V]_j:
        let a = u[0];
        let b: Word = u[1..].to_vec();
        let mut r = self.insert_expr(a, &self.nop_word(&b, v));
        for (i, d) in self.bracket_word(&b, v).0.iter().enumerate() {
            let s = qf(1, i as i64 + 1);
            r.add_assign(&self.insert_expr((a.0, a.1 + i as u16 + 1), d).scale_q(&s));
        }
        let be = Expr::word(b, rc(q(1)));
        for (j, e) in self.bracket_word(&vec![a], v).0.iter().enumerate() {
            let s = qf(1, j as i64 + 1);
            r.add_assign(&self.nop(&self.deriv_n(&be, j + 1), e).scale_q(&s));
        }
        self.cache.borrow_mut().nop.insert(key, r.clone());
        r
    }

    /// [X_λ Y].
    pub fn bracket(&self, x: &Expr, y: &Expr) -> LExpr {
        let mut r = LExpr::zero();
        for (u, cu) in x.iter() {
            for (v, cv) in y.iter() {
                r.add_assign(&self.bracket_word(u, v).scale(&cu.mul(cv)));
            }
        }
        r
    }

    fn bracket_word(&self, u: &Word, v: &Word) -> LExpr {
        if u.is_empty() || v.is_empty() {
            return LExpr::zero();
        }
        if u.len() == 1 && v.len() == 1 {
            return self.bracket_atoms(u[0], v[0]);
        }
        let key = (u.clone(), v.clone());
        if let Some(r) = self.cache.borrow().bracket.get(&key) {
            return r.clone();
        }
        let mut r = LExpr::zero();
        if v.len() >= 2 {
            // [U_λ :bC:] = :[U_λ b]C: + :b[U_λ C]: + ∫_0^λ [[U_λ b]_μ C] dμ
            let b = v[0];
            let c: Word = v[1..].to_vec();
            let ce = Expr::word(c.clone(), rc(q(1)));
            let ub = self.bracket_word(u, &vec![b]);
            for (i, d) in ub.0.iter().enumerate() {
                r.add_at(i, &self.nop(d, &ce));
                for (j, f) in self.bracket(d, &ce).0.iter().enumerate() {
                    r.add_at(i + j + 1, &f.scale_q(&qf(1, j as i64 + 1)));
                }
            }
            for (i, e) in self.bracket_word(u, &c).0.iter().enumerate() {
                r.add_at(i, &self.insert_expr(b, e));
            }
        } else {
            // skew-symmetry: [U_λ V] = -Σ_j (-λ-T)^j [V_λ U]_j
            for (j, e) in self.bracket_word(v, u).0.iter().enumerate() {
                let mut t = e.clone();
                for i in (0..=j).rev() {
                    // coefficient of λ^i: (-1)^{j+1} C(j,i) T^{j-i}
                    let s = if (j + 1) % 2 == 0 { q(1) } else { q(-1) };
                    r.add_at(i, &t.scale_q(&(s * q(binom_i(j as i64, i as i64)))));
                    if i > 0 {
                        t = self.deriv(&t);
                    }
                }
            }
        }
        self.cache.borrow_mut().bracket.insert(key, r.clone());
        r
    }

    /// What [Y_λ X] must be by skew-symmetry, given [X_λ Y].
    pub fn skew(&self, xy: &LExpr) -> LExpr {
        let mut r = LExpr::zero();
        for (j, e) in xy.0.iter().enumerate() {
            let mut t = e.clone();
            for i in (0..=j).rev() {
                let s = if (j + 1) % 2 == 0 { q(1) } else { q(-1) };
                r.add_at(i, &t.scale_q(&(s * q(binom_i(j as i64, i as i64)))));
                if i > 0 {
                    t = self.deriv(&t);
                }
            }
        }
        r
    }

    // ---------------------------------------------------------------- checks

    /// Skew-symmetry of the stored table on every ordered generator pair.
    pub fn skew_symmetry_report(&self) -> Vec<PairCheck> {
        let ng = self.gens.len();
        let mut out = Vec::new();
        for x in 0..ng {
            for y in 0..ng {
                let pass = self.skew(&self.table[x][y]) == self.table[y][x];
                out.push(PairCheck { x: self.gens[x].name(), y: self.gens[y].name(), pass, detail: None });
            }
        }
        out
    }

    /// Expected [ω_λ X] for a generator X: (T + Δλ)X, or the Virasoro bracket with the
    /// table's central charge when X is ω itself (then `omega` stands in for X).
    pub fn expected_virasoro(&self, omega: &Expr, x: usize) -> (Expr, LExpr) {
        let g = &self.gens[x];
        if g.kind == GenKind::Omega {
            let cw = self.table[x][x].coeff(3);
            (omega.clone(), LExpr::from_coeffs(vec![self.deriv(omega), omega.scale_q(&q(2)), Expr::zero(), cw]))
        } else {
            let e = self.gen(x);
            (e.clone(), LExpr::from_coeffs(vec![self.deriv(&e), e.scale_q(&g.weight())]))
        }
    }

    /// Brackets of `omega` (typically the Sugawara vector) with every generator.
    /// `weight` compares the λ^{≥1} part: conformal weight, primarity and the central term.
    /// `translation` compares the λ^0 part, which in the universal algebra only holds
    /// modulo the ideal generated by ω - `omega`.
    pub fn primary_report(&self, omega: &Expr) -> Vec<PrimaryCheck> {
        (0..self.gens.len())
            .map(|i| {
                let (x, want) = self.expected_virasoro(omega, i);
                let got = self.bracket(omega, &x);
                let top = |l: &LExpr| l.0.iter().skip(1).cloned().collect::<Vec<_>>();
                let weight = LExpr::from_coeffs(top(&got)) == LExpr::from_coeffs(top(&want));
                let translation = got.coeff(0) == want.coeff(0);
                let detail = (!weight || !translation).then(|| format!("got {}", self.fmt_lexpr(&got)));
                PrimaryCheck { field: self.gens[i].name(), weight, translation, detail }
            })
            .collect()
    }

    /// Compare with a table in text form; one entry per pair mentioned in the text.
    pub fn compare(&self, text: &str) -> Result<Vec<PairCheck>, WminError> {
        let parsed = self.parse_table(text)?;
        Ok(parsed
            .into_iter()
            .map(|((x, y), want)| {
                let got = &self.table[x][y];
                let detail = (*got != want).then(|| format!("table {} vs {}", self.fmt_lexpr(got), self.fmt_lexpr(&want)));
                PairCheck { x: self.gens[x].name(), y: self.gens[y].name(), pass: detail.is_none(), detail }
            })
            .collect())
    }

    // ---------------------------------------------------------------- text

    pub fn fmt_atom(&self, a: Atom) -> String {
        format!("{}{}", "d".repeat(a.1 as usize), self.gens[a.0 as usize].name())
    }

    pub fn fmt_word(&self, w: &Word) -> String {
        match w.len() {
            0 => "1".into(),
            1 => self.fmt_atom(w[0]),
            _ => format!(":{}:", w.iter().map(|a| self.fmt_atom(*a)).collect::<String>()),
        }
    }

    pub fn fmt_expr(&self, e: &Expr) -> String {
        if e.is_zero() {
            return "0".into();
        }
        let mut s = String::new();
        for (w, c) in e.iter() {
            let ws = self.fmt_word(w);
            let term = match c.num().as_constant().filter(|_| c.is_polynomial()) {
                Some(x) => {
                    let neg = x < q0();
                    let ax = if neg { -x } else { x };
                    let body = if w.is_empty() {
                        fmt_q_short(&ax)
                    } else if ax.is_one() {
                        ws
                    } else {
                        format!("{}*{ws}", fmt_q_short(&ax))
                    };
                    (neg, body)
                }
                None if w.is_empty() && c.is_polynomial() => (false, format!("({c})")),
                None if w.is_empty() => (false, c.to_string()),
                None if c.is_polynomial() => (false, format!("({c})*{ws}")),
                None => (false, format!("{c}*{ws}")),
            };
            match (s.is_empty(), term.0) {
                (true, true) => s.push_str(&format!("-{}", term.1)),
                (true, false) => s.push_str(&term.1),
                (false, true) => s.push_str(&format!(" - {}", term.1)),
                (false, false) => s.push_str(&format!(" + {}", term.1)),
            }
        }
        s
    }

    pub fn fmt_lexpr(&self, l: &LExpr) -> String {
        if l.is_zero() {
            return "0".into();
        }
        let parts: Vec<String> = l
            .0
            .iter()
            .enumerate()
            .filter(|(_, e)| !e.is_zero())
            .map(|(i, e)| match i {
                0 => format!("[{}]", self.fmt_expr(e)),
                1 => format!("λ[{}]", self.fmt_expr(e)),
                _ => format!("λ^{i}[{}]", self.fmt_expr(e)),
            })
            .collect();
        parts.join(" + ")
    }

    /// One line `X Y i: expr` per nonzero λ^i coefficient of every pair.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let kdesc = match &self.level {
            None => "formal k".to_string(),
            Some(k) => format!("k = {}", fmt_q_short(k)),
        };
        s.push_str(&format!("# W^k(sl({}), θ), {kdesc}\n", self.ctx.n));
        for (x, row) in self.table.iter().enumerate() {
            for (y, l) in row.iter().enumerate() {
                for (i, e) in l.0.iter().enumerate() {
                    if !e.is_zero() {
                        s.push_str(&format!(
                            "{} {} {i}: {}\n",
                            self.gens[x].name(),
                            self.gens[y].name(),
                            self.fmt_expr(e)
                        ));
                    }
                }
            }
        }
        s
    }

    fn parse_atoms(&self, s: &str) -> Result<Vec<Atom>, WminError> {
        let err = || WminError::Parse(format!("bad word `{s}`"));
        let mut out = Vec::new();
        let mut rest = s;
        while !rest.is_empty() {
            let d = rest.len() - rest.trim_start_matches('d').len();
            rest = &rest[d..];
            let name_len = if rest.starts_with('w') {
                1
            } else {
                rest.find(']').ok_or_else(err)? + 1
            };
            let name = &rest[..name_len];
            let g = self.index_of(name).ok_or_else(|| WminError::UnknownGenerator(name.into()))?;
            out.push((g as u16, d as u16));
            rest = &rest[name_len..];
        }
        Ok(out)
    }

    fn parse_word(&self, s: &str) -> Result<Expr, WminError> {
        let s = s.trim();
        if s == "1" {
            return Ok(Expr::vacuum(rc(q(1))));
        }
        let inner = match s.strip_prefix(':') {
            Some(t) => t.strip_suffix(':').ok_or_else(|| WminError::Parse(format!("unclosed word `{s}`")))?,
            None => s,
        };
        Ok(self.from_atoms(&self.parse_atoms(inner)?))
    }

    /// Parse an expression such as `2*:J[c]J[e23]: + (-k-2)*dJ[e23] - 1/2*w`.
    pub fn parse_expr(&self, s: &str) -> Result<Expr, WminError> {
        let s = s.trim();
        if s == "0" {
            return Ok(Expr::zero());
        }
        let mut terms: Vec<(bool, String)> = Vec::new();
        let mut depth = 0i32;
        let mut cur = String::new();
        let mut neg = false;
        for ch in s.chars() {
            match ch {
                '(' | '[' => depth += 1,
                ')' | ']' => depth -= 1,
                _ => {}
            }
            if depth == 0 && (ch == '+' || ch == '-') {
                if cur.trim().is_empty() {
                    if ch == '-' {
                        neg = !neg;
                    }
                    continue;
                }
                terms.push((neg, std::mem::take(&mut cur)));
                neg = ch == '-';
                continue;
            }
            cur.push(ch);
        }
        if !cur.trim().is_empty() {
            terms.push((neg, cur));
        }
        let mut out = Expr::zero();
        for (neg, t) in terms {
            let t = t.trim();
            let star = {
                let mut d = 0i32;
                t.char_indices().find(|&(_, c)| {
                    match c {
                        '(' | '[' => d += 1,
                        ')' | ']' => d -= 1,
                        _ => {}
                    }
                    d == 0 && c == '*'
                })
            };
            let (coef, word) = match star {
                Some((i, _)) => (parse_coef(&t[..i])?, self.parse_word(&t[i + 1..])?),
                None if t.starts_with('(') => (parse_coef(t)?, Expr::vacuum(rc(q(1)))),
                None => match parse_q(t) {
                    Ok(x) => (rc(x), Expr::vacuum(rc(q(1)))),
                    Err(_) => (rc(q(1)), self.parse_word(t)?),
                },
            };
            let coef = if neg { coef.neg() } else { coef };
            out.add_assign(&word.scale(&coef));
        }
        Ok(out)
    }

    /// Parse `X Y i: expr` lines; `#` starts a comment. Pairs accumulate over lines.
    pub fn parse_table(&self, text: &str) -> Result<BTreeMap<(usize, usize), LExpr>, WminError> {
        let mut out: BTreeMap<(usize, usize), LExpr> = BTreeMap::new();
        for line in text.lines() {
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (head, body) = line.split_once(':').ok_or_else(|| WminError::Parse(format!("no `:` in `{line}`")))?;
            let f: Vec<&str> = head.split_whitespace().collect();
            if f.len() != 3 {
                return Err(WminError::Parse(format!("expected `X Y i:` in `{line}`")));
            }
            let x = self.index_of(f[0]).ok_or_else(|| WminError::UnknownGenerator(f[0].into()))?;
            let y = self.index_of(f[1]).ok_or_else(|| WminError::UnknownGenerator(f[1].into()))?;
            let i: usize = f[2].parse().map_err(|_| WminError::Parse(format!("bad λ power `{}`", f[2])))?;
            let mut e = self.parse_expr(body)?;
            if let Some(k) = &self.level {
                e = e.eval(k).ok_or_else(|| WminError::Critical(fmt_q_short(k)))?;
            }
            out.entry((x, y)).or_default().add_at(i, &e);
        }
        Ok(out)
    }
}

fn parse_coef(s: &str) -> Result<RatFn, WminError> {
    let s = s.trim();
    if let Ok(x) = parse_q(s) {
        return Ok(rc(x));
    }
    parse_ratfn(s).ok_or_else(|| WminError::Parse(format!("bad coefficient `{s}`")))
}
