//! The generalized lattice vertex algebra M(1) ⊗ C_ε[D] over the rank-4 space
//! spanned by α, β, δ, φ, with exact λ-brackets, screening, Zhu products and
//! singular vectors of the sl(4) realization at k = -8/3.

mod r3;
mod state;
mod text;
mod vertex;

use std::fmt;
use std::sync::OnceLock;

use num_traits::Zero;

use crate::rational::{q, q0, qf, to_i64, Q};

pub use r3::{
    f_bar2, is_singular, l0_expected, r3_bracket_identities, r3_generators, s2, s3, singular_seed, singular_vector, zhu_circ,
    zhu_state_identity, BracketCheck, R3, SingularReport,
};
pub use state::{Key, LatticeState, Mono};
pub use text::{parse_state, ParseStateError};
pub use vertex::{
    lambda_bracket, max_product_index, normally_ordered, nth_product, nth_product_oracle, nth_products, screening_q,
    skew_bracket, translation, LambdaPolynomial,
};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LatticeError {
    #[error("{0} is not in the lattice D")]
    OutsideD(String),
    #[error("state is not homogeneous")]
    NotHomogeneous,
}

/// Rational coordinates on the basis (α, β, δ, φ).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticePoint(pub [Q; 4]);

/// Gram matrix of (α, β, δ, φ): diag(1, -1, 2/3, -2/3).
pub fn gram_diag() -> [Q; 4] {
    [q(1), q(-1), qf(2, 3), qf(-2, 3)]
}

impl LatticePoint {
    pub fn new(a: Q, b: Q, d: Q, p: Q) -> Self {
        LatticePoint([a, b, d, p])
    }
    pub fn zero() -> Self {
        LatticePoint([q0(), q0(), q0(), q0()])
    }
    pub fn basis(i: usize) -> Self {
        let mut v = Self::zero();
        v.0[i] = q(1);
        v
    }
    pub fn alpha() -> Self {
        Self::basis(0)
    }
    pub fn beta() -> Self {
        Self::basis(1)
    }
    pub fn delta() -> Self {
        Self::basis(2)
    }
    pub fn phi() -> Self {
        Self::basis(3)
    }
    /// α + β - 3δ, the screening momentum.
    pub fn sigma() -> Self {
        LatticePoint([q(1), q(1), q(-3), q0()])
    }
    /// The generators α₁ = α+β, α₂ = (3/2)(δ+φ), α₃ = (3/2)(δ-φ) of D.
    pub fn d_generator(i: usize) -> Self {
        match i {
            0 => LatticePoint([q(1), q(1), q0(), q0()]),
            1 => LatticePoint([q0(), q0(), qf(3, 2), qf(3, 2)]),
            _ => LatticePoint([q0(), q0(), qf(3, 2), qf(-3, 2)]),
        }
    }
    pub fn from_d(c: [i64; 3]) -> Self {
        (0..3).fold(Self::zero(), |acc, i| acc.add(&Self::d_generator(i).scale(&q(c[i]))))
    }
    pub fn add(&self, o: &Self) -> Self {
        LatticePoint(std::array::from_fn(|i| &self.0[i] + &o.0[i]))
    }
    pub fn sub(&self, o: &Self) -> Self {
        LatticePoint(std::array::from_fn(|i| &self.0[i] - &o.0[i]))
    }
    pub fn scale(&self, c: &Q) -> Self {
        LatticePoint(std::array::from_fn(|i| &self.0[i] * c))
    }
    pub fn neg(&self) -> Self {
        self.scale(&q(-1))
    }
    pub fn pair(&self, o: &Self) -> Q {
        let g = gram_diag();
        (0..4).map(|i| &self.0[i] * &o.0[i] * &g[i]).sum()
    }
    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }
    /// Coordinates on (α₁, α₂, α₃) when the point lies in D.
    pub fn d_coords(&self) -> Option<[i64; 3]> {
        let [x, y, z, w] = &self.0;
        if x != y {
            return None;
        }
        let a1 = to_i64(x)?;
        let a2 = to_i64(&((z + w) / q(3)))?;
        let a3 = to_i64(&((z - w) / q(3)))?;
        Some([a1, a2, a3])
    }
    pub fn in_d(&self) -> bool {
        self.d_coords().is_some()
    }
    /// Membership in L = Zα + Zβ + Zδ + Zφ.
    pub fn in_l(&self) -> bool {
        self.0.iter().all(|c| c.is_integer())
    }
    /// Coordinates in the Heisenberg basis (α, σ, δ, φ) used by monomials.
    pub fn heis(&self) -> [Q; 4] {
        let [x, y, z, w] = &self.0;
        [x - y, y.clone(), z + q(3) * y, w.clone()]
    }
    pub fn from_heis(h: &[Q; 4]) -> Self {
        (0..4).fold(Self::zero(), |acc, i| acc.add(&heis_vector(i).scale(&h[i])))
    }
}

impl fmt::Display for LatticePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", text::linear_text(&self.0, &['a', 'b', 'd', 'p']))
    }
}

/// Letters of the Heisenberg basis, in canonical order: α, σ = α+β-3δ, δ, φ.
pub const HEIS_LETTERS: [char; 4] = ['a', 's', 'd', 'p'];

pub fn heis_vector(i: usize) -> LatticePoint {
    match i {
        0 => LatticePoint::alpha(),
        1 => LatticePoint::sigma(),
        2 => LatticePoint::delta(),
        _ => LatticePoint::phi(),
    }
}

/// Pairings among the Heisenberg basis vectors.
pub fn heis_gram() -> &'static [[Q; 4]; 4] {
    static G: OnceLock<[[Q; 4]; 4]> = OnceLock::new();
    G.get_or_init(|| std::array::from_fn(|i| std::array::from_fn(|j| heis_vector(i).pair(&heis_vector(j)))))
}

/// ⟨h_i, γ⟩ for a Heisenberg basis index and γ given by Heisenberg coordinates.
pub(crate) fn heis_pair(i: usize, g: &[Q; 4]) -> Q {
    let gr = heis_gram();
    (0..4).filter(|&j| !g[j].is_zero()).map(|j| &gr[i][j] * &g[j]).sum()
}

/// Bimultiplicative sign on D fixed by ε(α₂, α₃) = -ε(α₃, α₂) = 1 and ε = 1 on every other
/// generator pair, so ε(γ₁, γ₂) = (-1)^{a₃ b₂}.
pub fn cocycle(g1: &[i64; 3], g2: &[i64; 3]) -> i64 {
    if (g1[2] * g2[1]).rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

pub fn cocycle_points(g1: &LatticePoint, g2: &LatticePoint) -> Result<i64, LatticeError> {
    let a = g1.d_coords().ok_or_else(|| LatticeError::OutsideD(g1.to_string()))?;
    let b = g2.d_coords().ok_or_else(|| LatticeError::OutsideD(g2.to_string()))?;
    Ok(cocycle(&a, &b))
}

/// Pairing on D in (α₁, α₂, α₃) coordinates: ⟨αᵢ, αⱼ⟩ vanishes except ⟨α₂, α₃⟩ = 3.
pub fn d_pair(a: &[i64; 3], b: &[i64; 3]) -> i64 {
    3 * (a[1] * b[2] + a[2] * b[1])
}

/// Shift vector ν of the conformal vector: L₀ e^γ = (⟨γ,γ⟩/2 - ⟨ν,γ⟩) e^γ.
pub fn conformal_shift() -> LatticePoint {
    LatticePoint([qf(-1, 2), qf(1, 2), qf(-3, 2), q0()])
}

pub fn exp_weight(g: &LatticePoint) -> Q {
    g.pair(g) / q(2) - conformal_shift().pair(g)
}

pub(crate) fn sign_q(s: i64) -> Q {
    if s < 0 {
        q(-1)
    } else {
        q(1)
    }
}
