//! Polynomials and rational functions in the formal level k, with exact rational coefficients.

use std::fmt;

use num_traits::{One, Zero};

use crate::rational::{fmt_q_short, parse_q, q, q0, Q};

/// Coefficients from the constant term upward; no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Poly(Vec<Q>);

impl Poly {
    pub fn zero() -> Self {
        Poly(Vec::new())
    }
    pub fn constant(c: Q) -> Self {
        Poly(vec![c]).trimmed()
    }
    pub fn one() -> Self {
        Self::constant(q(1))
    }
    /// The variable k.
    pub fn k() -> Self {
        Poly(vec![q0(), q(1)])
    }
    /// k + c.
    pub fn k_plus(c: Q) -> Self {
        Poly(vec![c, q(1)])
    }
    pub fn from_coeffs(c: Vec<Q>) -> Self {
        Poly(c).trimmed()
    }
    fn trimmed(mut self) -> Self {
        while self.0.last().is_some_and(Zero::is_zero) {
            self.0.pop();
        }
        self
    }
    pub fn coeffs(&self) -> &[Q] {
        &self.0
    }
    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }
    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }
    pub fn lead(&self) -> Q {
        self.0.last().cloned().unwrap_or_else(q0)
    }
    pub fn as_constant(&self) -> Option<Q> {
        match self.0.len() {
            0 => Some(q0()),
            1 => Some(self.0[0].clone()),
            _ => None,
        }
    }
    pub fn add(&self, o: &Self) -> Self {
        let n = self.0.len().max(o.0.len());
        Poly((0..n).map(|i| self.0.get(i).cloned().unwrap_or_else(q0) + o.0.get(i).cloned().unwrap_or_else(q0)).collect())
            .trimmed()
    }
    pub fn neg(&self) -> Self {
        Poly(self.0.iter().map(|c| -c).collect())
    }
    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }
    pub fn scale(&self, c: &Q) -> Self {
        Poly(self.0.iter().map(|x| x * c).collect()).trimmed()
    }
    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        let mut r = vec![q0(); self.0.len() + o.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in o.0.iter().enumerate() {
                r[i + j] += a * b;
            }
        }
        Poly(r).trimmed()
    }
    pub fn eval(&self, k: &Q) -> Q {
        self.0.iter().rev().fold(q0(), |acc, c| acc * k + c)
    }
    /// Quotient and remainder; `d` must be nonzero.
    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        assert!(!d.is_zero(), "division by the zero polynomial");
        let dd = d.degree().unwrap_or(0);
        let mut rem = self.0.clone();
        let mut quo = vec![q0(); self.0.len().saturating_sub(dd).max(1)];
        let lead = d.lead();
        while rem.len() > dd && !rem.is_empty() {
            let shift = rem.len() - 1 - dd;
            let c = rem.last().unwrap() / &lead;
            for (i, x) in d.0.iter().enumerate() {
                rem[shift + i] -= &c * x;
            }
            quo[shift] = c;
            rem.pop();
            while rem.last().is_some_and(Zero::is_zero) {
                rem.pop();
            }
        }
        (Poly(quo).trimmed(), Poly(rem).trimmed())
    }
    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        self.scale(&(Q::one() / self.lead()))
    }
    pub fn gcd(&self, o: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }

    fn write_terms(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.0.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = *c < q0();
            let abs = if neg { -c.clone() } else { c.clone() };
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { "-" } else { "+" })?;
            }
            first = false;
            let var = match i {
                0 => String::new(),
                1 => "k".into(),
                _ => format!("k^{i}"),
            };
            if abs.is_one() && i > 0 {
                write!(f, "{var}")?;
            } else {
                write!(f, "{}{var}", fmt_q_short(&abs))?;
            }
        }
        Ok(())
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write_terms(f)
    }
}

/// Parse sums of terms `c`, `ck`, `ck^n` such as `-k^2-3k-2` or `3/2k+1`.
pub fn parse_poly(s: &str) -> Option<Poly> {
    let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if t.is_empty() {
        return None;
    }
    let mut out = Poly::zero();
    let b = t.as_bytes();
    let mut i = 0;
    while i < b.len() {
        let neg = match b[i] {
            b'-' => {
                i += 1;
                true
            }
            b'+' => {
                i += 1;
                false
            }
            _ => false,
        };
        let start = i;
        while i < b.len() && (b[i].is_ascii_digit() || b[i] == b'/') {
            i += 1;
        }
        let mut c = if start == i { q(1) } else { parse_q(&t[start..i]).ok()? };
        let mut deg = 0;
        if i < b.len() && b[i] == b'k' {
            i += 1;
            deg = 1;
            if i < b.len() && b[i] == b'^' {
                i += 1;
                let s2 = i;
                while i < b.len() && b[i].is_ascii_digit() {
                    i += 1;
                }
                deg = t[s2..i].parse().ok()?;
            }
        } else if start == i {
            return None;
        }
        if neg {
            c = -c;
        }
        let mut v = vec![q0(); deg + 1];
        v[deg] = c;
        out = out.add(&Poly(v));
    }
    Some(out)
}

/// num/den with gcd(num, den) = 1 and den monic.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatFn {
    num: Poly,
    den: Poly,
}

impl Default for RatFn {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<Poly> for RatFn {
    fn from(p: Poly) -> Self {
        RatFn { num: p, den: Poly::one() }
    }
}

impl RatFn {
    pub fn new(num: Poly, den: Poly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        if num.is_zero() {
            return Self::zero();
        }
        let g = num.gcd(&den);
        let (n, _) = num.div_rem(&g);
        let (d, _) = den.div_rem(&g);
        let l = d.lead();
        RatFn { num: n.scale(&(Q::one() / &l)), den: d.scale(&(Q::one() / &l)) }
    }
    pub fn zero() -> Self {
        RatFn { num: Poly::zero(), den: Poly::one() }
    }
    pub fn constant(c: Q) -> Self {
        Poly::constant(c).into()
    }
    pub fn num(&self) -> &Poly {
        &self.num
    }
    pub fn den(&self) -> &Poly {
        &self.den
    }
    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
    pub fn is_polynomial(&self) -> bool {
        self.den.degree() == Some(0)
    }
    pub fn add(&self, o: &Self) -> Self {
        if self.den == o.den {
            return Self::new(self.num.add(&o.num), self.den.clone());
        }
        Self::new(self.num.mul(&o.den).add(&o.num.mul(&self.den)), self.den.mul(&o.den))
    }
    pub fn neg(&self) -> Self {
        RatFn { num: self.num.neg(), den: self.den.clone() }
    }
    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }
    pub fn mul(&self, o: &Self) -> Self {
        Self::new(self.num.mul(&o.num), self.den.mul(&o.den))
    }
    pub fn scale(&self, c: &Q) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        RatFn { num: self.num.scale(c), den: self.den.clone() }
    }
    /// Value at a rational k; None at a pole.
    pub fn eval(&self, k: &Q) -> Option<Q> {
        let d = self.den.eval(k);
        (!d.is_zero()).then(|| self.num.eval(k) / d)
    }
}

impl fmt::Display for RatFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_polynomial() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

/// Parse `p` or `(p)/(q)` with p, q in the syntax of [`parse_poly`].
pub fn parse_ratfn(s: &str) -> Option<RatFn> {
    let t = s.trim();
    if let Some((a, b)) = t.split_once(")/(") {
        let n = parse_poly(a.strip_prefix('(')?)?;
        let d = parse_poly(b.strip_suffix(')')?)?;
        if d.is_zero() {
            return None;
        }
        return Some(RatFn::new(n, d));
    }
    let inner = t.strip_prefix('(').and_then(|x| x.strip_suffix(')')).unwrap_or(t);
    parse_poly(inner).map(RatFn::from)
}
