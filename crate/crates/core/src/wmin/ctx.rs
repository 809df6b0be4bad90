//! Matrix data of the minimal gradation of sl(n): θ-triple, g♮ with its ideals,
//! g_{±1/2}, dual bases and the Killing form of g₀.

use num_traits::Zero;

use crate::rational::{invert, q, q0, qf, Q};

use super::WminError;

/// Dense n×n matrix over Q.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mat {
    n: usize,
    d: Vec<Q>,
}

impl Mat {
    pub fn zero(n: usize) -> Self {
        Mat { n, d: vec![q0(); n * n] }
    }
    /// Matrix unit e_{ij}, 1-based.
    pub fn unit(n: usize, i: usize, j: usize) -> Self {
        let mut m = Self::zero(n);
        m.d[(i - 1) * n + (j - 1)] = q(1);
        m
    }
    pub fn get(&self, i: usize, j: usize) -> &Q {
        &self.d[(i - 1) * self.n + (j - 1)]
    }
    pub fn add(&self, o: &Self) -> Self {
        Mat { n: self.n, d: self.d.iter().zip(&o.d).map(|(a, b)| a + b).collect() }
    }
    pub fn sub(&self, o: &Self) -> Self {
        Mat { n: self.n, d: self.d.iter().zip(&o.d).map(|(a, b)| a - b).collect() }
    }
    pub fn scale(&self, c: &Q) -> Self {
        Mat { n: self.n, d: self.d.iter().map(|a| a * c).collect() }
    }
    pub fn mul(&self, o: &Self) -> Self {
        let n = self.n;
        let mut r = Self::zero(n);
        for i in 0..n {
            for l in 0..n {
                let a = &self.d[i * n + l];
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = &o.d[l * n + j];
                    if !b.is_zero() {
                        r.d[i * n + j] += a * b;
                    }
                }
            }
        }
        r
    }
    pub fn bracket(&self, o: &Self) -> Self {
        self.mul(o).sub(&o.mul(self))
    }
    pub fn trace(&self) -> Q {
        (0..self.n).map(|i| self.d[i * self.n + i].clone()).sum()
    }
    pub fn is_zero(&self) -> bool {
        self.d.iter().all(Zero::is_zero)
    }
}

/// (a|b) = tr(ab), normalized so that (θ|θ) = 2.
pub fn form(a: &Mat, b: &Mat) -> Q {
    a.mul(b).trace()
}

fn combo(basis: &[Mat], c: &[Q]) -> Mat {
    basis.iter().zip(c).fold(Mat::zero(basis[0].n), |acc, (b, x)| if x.is_zero() { acc } else { acc.add(&b.scale(x)) })
}

/// Coordinates of `a` in `basis`, read off through the inverse Gram matrix of `pair`.
fn coords(basis: &[Mat], gram_inv: &[Vec<Q>], a: &Mat, pair: impl Fn(&Mat, &Mat) -> Q) -> Vec<Q> {
    let rhs: Vec<Q> = basis.iter().map(|b| pair(a, b)).collect();
    gram_inv.iter().map(|row| row.iter().zip(&rhs).map(|(x, y)| x * y).sum()).collect()
}

#[derive(Clone, Debug)]
pub struct OpeContext {
    pub n: usize,
    pub e_theta: Mat,
    pub e_mtheta: Mat,
    pub x: Mat,
    /// Basis of g♮: the centre c first, then the sl(n-2) block.
    pub nat: Vec<Mat>,
    pub nat_labels: Vec<String>,
    /// Ideal of each g♮ basis vector: 0 = centre, 1 = sl(n-2).
    pub nat_ideal: Vec<usize>,
    /// Dual basis of g♮ under (·|·).
    pub nat_dual: Vec<Mat>,
    nat_gram_inv: Vec<Vec<Q>>,
    pub minus_half: Vec<Mat>,
    pub minus_labels: Vec<String>,
    pub plus_half: Vec<Mat>,
    /// Dual of `plus_half` under ⟨u,v⟩_ne = (e_{-θ}|[u,v]), with ⟨plus_half[δ], plus_dual[γ]⟩ = δ_{γδ}.
    pub plus_dual: Vec<Mat>,
    /// Killing form of g₀ = g♮ ⊕ Cx on the g♮ basis.
    pub kappa0: Vec<Vec<Q>>,
    pub h_dual: Q,
    /// Dual Coxeter numbers of the ideals (centre, sl(n-2)).
    pub h0: [Q; 2],
}

fn unit_label(n: usize, i: usize, j: usize) -> String {
    if n < 10 {
        format!("e{i}{j}")
    } else {
        format!("e{i},{j}")
    }
}

impl OpeContext {
    pub fn sl(n: usize) -> Result<Self, WminError> {
        if n < 3 {
            return Err(WminError::Rank(n));
        }
        let u = |i, j| Mat::unit(n, i, j);
        let e_theta = u(1, n).scale(&qf(1, 2));
        let e_mtheta = u(n, 1);
        let x = u(1, 1).sub(&u(n, n)).scale(&qf(1, 2));

        let mid = 2..n;
        let mut nat = Vec::new();
        let mut nat_labels = Vec::new();
        let mut nat_ideal = Vec::new();
        // c = diag(n-2, -2, ..., -2, n-2)/4, orthogonal to x and to the sl(n-2) block
        let mut c = u(1, 1).add(&u(n, n)).scale(&qf(n as i64 - 2, 4));
        for i in mid.clone() {
            c = c.sub(&u(i, i).scale(&qf(1, 2)));
        }
        nat.push(c);
        nat_labels.push("c".to_string());
        nat_ideal.push(0);
        for lower in [false, true] {
            for i in mid.clone() {
                for j in mid.clone() {
                    if (lower && i > j) || (!lower && i < j) {
                        nat.push(u(i, j));
                        nat_labels.push(unit_label(n, i, j));
                        nat_ideal.push(1);
                    }
                }
            }
        }
        for i in 2..n - 1 {
            nat.push(u(i, i).sub(&u(i + 1, i + 1)));
            nat_labels.push(format!("h{i}"));
            nat_ideal.push(1);
        }

        let gram: Vec<Vec<Q>> = nat.iter().map(|a| nat.iter().map(|b| form(a, b)).collect()).collect();
        let nat_gram_inv = invert(&gram).expect("trace form is nondegenerate on g♮");
        let nat_dual = nat_gram_inv.iter().map(|row| combo(&nat, row)).collect();

        let mut minus_half = Vec::new();
        let mut minus_labels = Vec::new();
        for i in mid.clone() {
            minus_half.push(u(i, 1));
            minus_labels.push(unit_label(n, i, 1));
        }
        for j in mid.clone() {
            minus_half.push(u(n, j));
            minus_labels.push(unit_label(n, n, j));
        }
        let plus_half: Vec<Mat> = mid.clone().map(|i| u(1, i)).chain(mid.clone().map(|j| u(j, n))).collect();

        let ne = |a: &Mat, b: &Mat| form(&e_mtheta, &a.bracket(b));
        let nmat: Vec<Vec<Q>> = plus_half.iter().map(|a| plus_half.iter().map(|b| ne(a, b)).collect()).collect();
        let nt: Vec<Vec<Q>> = (0..nmat.len()).map(|i| (0..nmat.len()).map(|j| nmat[j][i].clone()).collect()).collect();
        let dmat = invert(&nt).expect("neutral form is nondegenerate on g_{1/2}");
        let plus_dual: Vec<Mat> = dmat.iter().map(|row| combo(&plus_half, row)).collect();

        let mut g0 = nat.clone();
        g0.push(x.clone());
        let g0_gram: Vec<Vec<Q>> = g0.iter().map(|a| g0.iter().map(|b| form(a, b)).collect()).collect();
        let g0_inv = invert(&g0_gram).expect("trace form is nondegenerate on g₀");
        let kappa0 = nat
            .iter()
            .map(|a| {
                nat.iter()
                    .map(|b| {
                        g0.iter()
                            .enumerate()
                            .map(|(i, bi)| coords(&g0, &g0_inv, &a.bracket(&b.bracket(bi)), form)[i].clone())
                            .sum()
                    })
                    .collect()
            })
            .collect();

        Ok(OpeContext {
            n,
            e_theta,
            e_mtheta,
            x,
            nat,
            nat_labels,
            nat_ideal,
            nat_dual,
            nat_gram_inv,
            minus_half,
            minus_labels,
            plus_half,
            plus_dual,
            kappa0,
            h_dual: q(n as i64),
            h0: [q0(), q(n as i64 - 2)],
        })
    }

    /// Coordinates of a♮ on the g♮ basis, for a ∈ g₀.
    pub fn nat_coords(&self, a: &Mat) -> Vec<Q> {
        coords(&self.nat, &self.nat_gram_inv, a, form)
    }

    /// Coordinates of u ∈ g_{-1/2} on `minus_half` (matrix units, so entries are read off).
    pub fn minus_coords(&self, a: &Mat) -> Vec<Q> {
        self.minus_half
            .iter()
            .map(|b| {
                let (i, j) = (1..=self.n)
                    .flat_map(|i| (1..=self.n).map(move |j| (i, j)))
                    .find(|&(i, j)| !b.get(i, j).is_zero())
                    .expect("matrix unit");
                a.get(i, j).clone()
            })
            .collect()
    }

    /// (k + h/2)(a|b) - κ₀(a,b)/4 as (coefficient of k, constant), on g♮ basis indices.
    pub fn jj_level(&self, a: usize, b: usize) -> (Q, Q) {
        let f = form(&self.nat[a], &self.nat[b]);
        let c = &f * &self.h_dual / q(2) - &self.kappa0[a][b] / q(4);
        (f, c)
    }

    /// Shift s_i with k_i = k + s_i = k + (h - h0_i)/2.
    pub fn ideal_shift(&self, i: usize) -> Q {
        (&self.h_dual - &self.h0[i]) / q(2)
    }

    pub fn ideal_count(&self) -> usize {
        if self.n > 3 {
            2
        } else {
            1
        }
    }
}
