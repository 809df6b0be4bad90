//! Generators of the realization of W_{-8/3}(sl(4), θ), its bracket table, the Zhu
//! relation and the screening-built singular vectors.

use std::collections::BTreeMap;

use serde::Serialize;

use super::vertex::{
    lambda_bracket, max_product_index, normally_ordered, nth_product, nth_products, screening_q, translation,
};
use super::{LambdaPolynomial, LatticeError, LatticePoint, LatticeState};
use crate::rational::{binom_q, fmt_q, q, q0, qf, Q};

fn lp(a: i64, b: i64, d: Q, p: Q) -> LatticePoint {
    LatticePoint::new(q(a), q(b), d, p)
}

/// S₂(γ) = ((γ(-1))² + γ(-2))/2 on the vacuum.
pub fn s2(g: &LatticePoint) -> LatticeState {
    let v = LatticeState::vacuum();
    v.mode(g, -1).mode(g, -1).add(&v.mode(g, -2)).scale(&qf(1, 2))
}

/// S₃(γ) = (γ(-1)³ + 3γ(-1)γ(-2) + 2γ(-3))/6 on the vacuum.
pub fn s3(g: &LatticePoint) -> LatticeState {
    let v = LatticeState::vacuum();
    let a = v.mode(g, -1).mode(g, -1).mode(g, -1);
    let b = v.mode(g, -2).mode(g, -1).scale_i(3);
    let c = v.mode(g, -3).scale_i(2);
    a.add(&b).add(&c).scale(&qf(1, 6))
}

fn ex(g: &LatticePoint) -> LatticeState {
    LatticeState::exp(g).expect("exponent in D")
}

#[derive(Clone, Debug)]
pub struct R3 {
    pub e: LatticeState,
    pub h: LatticeState,
    pub f: LatticeState,
    pub j: LatticeState,
    pub e1: LatticeState,
    pub e2: LatticeState,
    pub f1: LatticeState,
    pub f2: LatticeState,
    pub omega: LatticeState,
}

impl R3 {
    pub fn named(&self) -> BTreeMap<&'static str, &LatticeState> {
        BTreeMap::from([
            ("e", &self.e),
            ("h", &self.h),
            ("f", &self.f),
            ("j", &self.j),
            ("E1", &self.e1),
            ("E2", &self.e2),
            ("F1", &self.f1),
            ("F2", &self.f2),
            ("omega", &self.omega),
        ])
    }
}

pub fn r3_generators() -> R3 {
    let (a, b, d, p) = (LatticePoint::alpha(), LatticePoint::beta(), LatticePoint::delta(), LatticePoint::phi());
    let e = ex(&lp(1, 1, q0(), q0()));
    let h = LatticeState::heis(&b.scale(&q(-2)).add(&d));
    let em = ex(&lp(-1, -1, q0(), q0()));
    // the α(-2) coefficient is +2/3: the sign that makes {e, h, f} an sl(2) triple
    let f = em
        .mode(&a, -1)
        .mode(&a, -1)
        .sub(&em.mode(&a, -2))
        .scale(&qf(-2, 3))
        .sub(&em.mode(&a, -1).mode(&d, -1))
        .add(&em.mode(&a, -1).mode(&b, -1).scale(&qf(1, 3)));
    let j = LatticeState::heis(&p);
    let e1 = ex(&lp(0, 0, qf(3, 2), qf(3, 2)));
    let e2 = screening_q(&ex(&lp(0, 0, qf(3, 2), qf(-3, 2))));
    let f1 = nth_product(&f, &e1, 0);
    let f2 = nth_product(&f, &e2, 0);
    let v = LatticeState::vacuum();
    let quad = |x: &LatticePoint| v.mode(x, -1).mode(x, -1);
    let omega = quad(&a)
        .sub(&v.mode(&a, -2))
        .sub(&quad(&b))
        .add(&v.mode(&b, -2))
        .scale(&qf(1, 2))
        .add(&quad(&d).sub(&v.mode(&d, -2).scale_i(2)).sub(&quad(&p)).scale(&qf(3, 4)));
    R3 { e, h, f, j, e1, e2, f1, f2, omega }
}

/// Q F¹, the conjugate of F² used for [E² _λ F¹].
pub fn f_bar2() -> LatticeState {
    screening_q(&r3_generators().f1)
}

#[derive(Clone, Debug)]
pub struct BracketCheck {
    pub name: String,
    pub lhs: LambdaPolynomial,
    pub rhs: LambdaPolynomial,
}

impl BracketCheck {
    pub fn pass(&self) -> bool {
        self.lhs == self.rhs
    }
}

fn poly(parts: &[(u32, LatticeState)]) -> LambdaPolynomial {
    let mut p = LambdaPolynomial::zero();
    for (i, s) in parts {
        p.add_at(*i, s);
    }
    p
}

/// The ten brackets among E¹, E², F¹, F², with their expected right-hand sides.
pub fn r3_bracket_identities() -> Vec<BracketCheck> {
    let g = r3_generators();
    let vac = LatticeState::vacuum();
    let no = normally_ordered;
    let t = translation;
    let je = no(&g.j, &g.e);
    let jf = no(&g.j, &g.f);
    let jh = no(&g.j, &g.h);
    let jj = no(&g.j, &g.j);
    let e1e2 = t(&g.e).add(&je.scale_i(3)).scale_i(3);
    let f1f2 = t(&g.f).add(&jf.scale_i(3)).scale_i(-3);
    // -3(ω + (∂h ± 3:jh: - 6:jj: ∓ 5∂j)/2)
    let mixed = |s: i64| {
        let inner = t(&g.h).add(&jh.scale_i(3 * s)).sub(&jj.scale_i(6)).sub(&t(&g.j).scale_i(5 * s));
        g.omega.add(&inner.scale(&qf(1, 2))).scale_i(-3)
    };
    let mut out = Vec::new();
    let mut push = |name: &str, a: &LatticeState, b: &LatticeState, rhs: LambdaPolynomial| {
        out.push(BracketCheck { name: name.into(), lhs: lambda_bracket(a, b), rhs });
    };
    push("[E1_l E1]", &g.e1, &g.e1, LambdaPolynomial::zero());
    push("[E2_l E2]", &g.e2, &g.e2, LambdaPolynomial::zero());
    push("[F1_l F1]", &g.f1, &g.f1, LambdaPolynomial::zero());
    push("[F2_l F2]", &g.f2, &g.f2, LambdaPolynomial::zero());
    push("[E1_l E2]", &g.e1, &g.e2, poly(&[(0, e1e2), (1, g.e.scale_i(6))]));
    push("[F1_l F2]", &g.f1, &g.f2, poly(&[(0, f1f2), (1, g.f.scale_i(-6))]));
    push("[E1_l F1]", &g.e1, &g.f1, LambdaPolynomial::zero());
    push(
        "[E1_l F2]",
        &g.e1,
        &g.f2,
        poly(&[(0, mixed(1)), (1, g.h.scale_i(-3).add(&g.j.scale_i(15))), (2, vac.scale_i(5))]),
    );
    push(
        "[E2_l F1]",
        &g.e2,
        &g.f1,
        poly(&[(0, mixed(-1)), (1, g.h.scale_i(-3).sub(&g.j.scale_i(15))), (2, vac.scale_i(5))]),
    );
    push("[E2_l F2]", &g.e2, &g.f2, LambdaPolynomial::zero());
    out
}

/// a ∘ b for homogeneous a: Σ C(Δ, i) a_(i-2) b when Δ ∈ Z, Σ C(Δ-1/2, i) a_(i-1) b when Δ ∈ 1/2 + Z.
pub fn zhu_circ(a: &LatticeState, b: &LatticeState) -> Result<LatticeState, LatticeError> {
    let w = a.weight()?;
    let (top, shift) = if w.is_integer() { (w, 2) } else { (w - qf(1, 2), 1) };
    let maxn = max_product_index(a, b);
    let mut out = LatticeState::zero();
    let mut i: i64 = 0;
    while i - shift <= maxn {
        let c = binom_q(&top, i as usize);
        if c != q0() {
            out.add_assign(&nth_product(a, b, i - shift).scale(&c));
        }
        i += 1;
    }
    Ok(out)
}

/// Both sides of :E¹E²: + 3:eω: = (e(-3) + (3/2)(h(-1)e(-2) - h(-2)e(-1))
///   + (9/2)((φ(-1)² + φ(-2))e(-1) + φ(-1)e(-2)))·1.
pub fn zhu_state_identity() -> (LatticeState, LatticeState) {
    let g = r3_generators();
    let vac = LatticeState::vacuum();
    let lhs = normally_ordered(&g.e1, &g.e2).add(&normally_ordered(&g.e, &g.omega).scale_i(3));
    let en = |n: i64| nth_product(&g.e, &vac, n);
    let hn = |s: &LatticeState, n: i64| nth_product(&g.h, s, n);
    let pn = |s: &LatticeState, n: i64| nth_product(&g.j, s, n);
    let e1 = en(-1);
    let e2 = en(-2);
    let mid = hn(&e2, -1).sub(&hn(&e1, -2)).scale(&qf(3, 2));
    let tail = pn(&pn(&e1, -1), -1).add(&pn(&e1, -2)).add(&pn(&e2, -1)).scale(&qf(9, 2));
    (lhs, en(-3).add(&mid).add(&tail))
}

/// The exponential e^γ and screening count r with v_{ℓ,j} = Q^r e^γ: γ = (3ℓ/2)(δ+φ)+3jδ and
/// r = j for ℓ ≥ 0, γ = -(3ℓ/2)(δ-φ)+3jδ and r = j-ℓ for ℓ ≤ 0.
pub fn singular_seed(l: i64, j: u32) -> (LatticeState, u32) {
    let j = j as i64;
    let (g, reps) = if l >= 0 { ([0, l + j, j], j) } else { ([0, j, j - l], j - l) };
    (LatticeState::term(q(1), Vec::new(), g), reps as u32)
}

pub fn singular_vector(l: i64, j: u32) -> LatticeState {
    let (mut v, reps) = singular_seed(l, j);
    for _ in 0..reps {
        v = screening_q(&v);
    }
    v
}

#[derive(Clone, Debug, Serialize)]
pub struct SingularReport {
    pub l: i64,
    pub j: u32,
    pub terms: usize,
    pub nonzero: bool,
    pub annihilated: bool,
    /// h(0) and φ(0) eigenvalues n and m, with L₀.
    pub n: String,
    pub m: String,
    pub l0: String,
    pub l0_expected: String,
    pub pass: bool,
}

/// 3n(n+2)/4 - 3m²/4.
pub fn l0_expected(n: &Q, m: &Q) -> Q {
    q(3) * n * (n + q(2)) / q(4) - q(3) * m * m / q(4)
}

fn eigenvalue(op: &LatticeState, v: &LatticeState, n: i64) -> Option<Q> {
    let w = nth_product(op, v, n);
    let (k, c) = v.iter().next()?;
    let lam = w.coefficient(k) / c;
    (w == v.scale(&lam)).then_some(lam)
}

/// Checks x_(n) v = 0 for n ≥ 1 and x ∈ {e, h, f, j}, e_(0) v = 0, v ≠ 0, and compares L₀
/// with the value forced by the gl(2)-weight.
///
/// e, h, j are applied to v directly. For f the screening is used instead: Q f = 0 gives
/// [Q, f_(n)] = (Q f)_(n) = 0, so f_(n) Q^r e^γ = Q^r f_(n) e^γ and it suffices that f_(n)
/// kills the seed exponential.
pub fn is_singular(l: i64, j: u32, v: &LatticeState) -> SingularReport {
    let g = r3_generators();
    let mut annihilated = nth_product(&g.e, v, 0).is_zero();
    for x in [&g.e, &g.h, &g.j] {
        annihilated &= nth_products(x, v, 1, max_product_index(x, v)).iter().all(LatticeState::is_zero);
    }
    let (seed, _) = singular_seed(l, j);
    annihilated &= screening_q(&g.f).is_zero();
    annihilated &= nth_products(&g.f, &seed, 1, max_product_index(&g.f, &seed)).iter().all(LatticeState::is_zero);
    let n = eigenvalue(&g.h, v, 0);
    let m = eigenvalue(&g.j, v, 0);
    let l0 = eigenvalue(&g.omega, v, 1);
    let expected = match (&n, &m) {
        (Some(n), Some(m)) => Some(l0_expected(n, m)),
        _ => None,
    };
    let show = |x: &Option<Q>| x.as_ref().map(fmt_q).unwrap_or_else(|| "not an eigenvector".into());
    let pass = !v.is_zero() && annihilated && l0.is_some() && l0 == expected;
    SingularReport {
        l,
        j,
        terms: v.len(),
        nonzero: !v.is_zero(),
        annihilated,
        n: show(&n),
        m: show(&m),
        l0: show(&l0),
        l0_expected: show(&expected),
        pass,
    }
}
