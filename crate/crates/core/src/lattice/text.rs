//! Plain-text state syntax, e.g. `3/2*a(-1)s(-2)E[a+b-3d] + -1*1`.
//!
//! Terms are joined by ` + `. A term is `coef*` followed by Heisenberg factors `x(-n)`
//! (x one of a, s, d, p; on input b is also accepted and expanded as s - a + 3d) and an
//! optional exponent `E[...]` written on a, b, d, p. A term with neither prints as `1`.

use num_traits::{One, Zero};

use super::{heis_vector, LatticeError, LatticePoint, LatticeState, HEIS_LETTERS};
use crate::rational::{fmt_q_short, parse_q, q, q1, Q};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseStateError {
    #[error("malformed state text near `{0}`")]
    Syntax(String),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
}

pub(crate) fn linear_text(c: &[Q], letters: &[char]) -> String {
    let mut s = String::new();
    for (x, l) in c.iter().zip(letters) {
        if x.is_zero() {
            continue;
        }
        let neg = *x < Q::zero();
        let abs = if neg { -x.clone() } else { x.clone() };
        if s.is_empty() {
            if neg {
                s.push('-');
            }
        } else {
            s.push(if neg { '-' } else { '+' });
        }
        if !abs.is_one() {
            s.push_str(&fmt_q_short(&abs));
        }
        s.push(*l);
    }
    if s.is_empty() {
        s.push('0');
    }
    s
}

impl std::fmt::Display for LatticeState {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.iter() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "{}*", fmt_q_short(c))?;
            for &(n, i) in &k.mono {
                write!(f, "{}(-{})", HEIS_LETTERS[i as usize], n)?;
            }
            if k.exp != [0, 0, 0] {
                write!(f, "E[{}]", LatticePoint::from_d(k.exp))?;
            } else if k.mono.is_empty() {
                write!(f, "1")?;
            }
        }
        Ok(())
    }
}

fn parse_linear(s: &str) -> Result<LatticePoint, ParseStateError> {
    let err = || ParseStateError::Syntax(s.to_string());
    let mut v = LatticePoint::zero();
    let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if t == "0" {
        return Ok(v);
    }
    let mut i = 0;
    let b = t.as_bytes();
    while i < b.len() {
        let mut sign = q1();
        if b[i] == b'+' || b[i] == b'-' {
            if b[i] == b'-' {
                sign = q(-1);
            }
            i += 1;
        }
        let start = i;
        while i < b.len() && (b[i].is_ascii_digit() || b[i] == b'/') {
            i += 1;
        }
        let coef = if start == i { q1() } else { parse_q(&t[start..i]).map_err(|_| err())? };
        let idx = match b.get(i) {
            Some(b'a') => 0,
            Some(b'b') => 1,
            Some(b'd') => 2,
            Some(b'p') => 3,
            _ => return Err(err()),
        };
        i += 1;
        v.0[idx] += sign * coef;
    }
    Ok(v)
}

fn parse_term(s: &str) -> Result<LatticeState, ParseStateError> {
    let err = || ParseStateError::Syntax(s.to_string());
    let (coef, body) = match s.split_once('*') {
        Some((c, b)) => (parse_q(c).map_err(|_| err())?, b.trim()),
        None => (q1(), s.trim()),
    };
    let (mods, exp) = match body.find("E[") {
        Some(p) => {
            let inner = body[p + 2..].strip_suffix(']').ok_or_else(err)?;
            (&body[..p], parse_linear(inner)?)
        }
        None => (body, LatticePoint::zero()),
    };
    let mut st = LatticeState::exp(&exp)?.scale(&coef);
    let mods = mods.trim();
    if mods == "1" || mods.is_empty() {
        return Ok(st);
    }
    let mut rest = mods;
    while !rest.is_empty() {
        let letter = rest.chars().next().ok_or_else(err)?;
        let h = match letter {
            'a' => heis_vector(0),
            's' => heis_vector(1),
            'd' => heis_vector(2),
            'p' => heis_vector(3),
            'b' => LatticePoint::beta(),
            _ => return Err(err()),
        };
        let close = rest.find(')').ok_or_else(err)?;
        let inner = rest.get(2..close).ok_or_else(err)?;
        if !rest[1..].starts_with('(') {
            return Err(err());
        }
        let n: i64 = inner.trim().parse().map_err(|_| err())?;
        if n >= 0 {
            return Err(err());
        }
        st = st.mode(&h, n);
        rest = rest[close + 1..].trim_start();
    }
    Ok(st)
}

/// Parse the text syntax back into a canonical state.
pub fn parse_state(s: &str) -> Result<LatticeState, ParseStateError> {
    let t = s.trim();
    if t == "0" {
        return Ok(LatticeState::zero());
    }
    let mut out = LatticeState::zero();
    for part in t.split(" + ") {
        out.add_assign(&parse_term(part)?);
    }
    Ok(out)
}
