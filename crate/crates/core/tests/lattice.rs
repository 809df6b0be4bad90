use minw::lattice::*;
use minw::rational::{q, q0, qf, Q};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn lp(a: Q, b: Q, d: Q, p: Q) -> LatticePoint {
    LatticePoint::new(a, b, d, p)
}

fn ex(g: &LatticePoint) -> LatticeState {
    LatticeState::exp(g).unwrap()
}

fn poly(parts: &[(u32, LatticeState)]) -> LambdaPolynomial {
    let mut p = LambdaPolynomial::zero();
    for (i, s) in parts {
        p.add_at(*i, s);
    }
    p
}

fn random_state(rng: &mut ChaCha8Rng) -> LatticeState {
    let mut s = LatticeState::zero();
    for _ in 0..rng.gen_range(1..=2) {
        let exp = [rng.gen_range(-1..=1), rng.gen_range(-1..=1), rng.gen_range(-1..=1)];
        let mono: Mono = (0..rng.gen_range(0..=2)).map(|_| (rng.gen_range(1..=2u32), rng.gen_range(0..4u8))).collect();
        s.add_assign(&LatticeState::term(qf(rng.gen_range(-3..=3), rng.gen_range(1..=2)), mono, exp));
    }
    s
}

#[test]
fn pairing_and_membership() {
    let (a, b, d, p) = (LatticePoint::alpha(), LatticePoint::beta(), LatticePoint::delta(), LatticePoint::phi());
    assert_eq!(a.pair(&a), q(1));
    assert_eq!(b.pair(&b), q(-1));
    assert_eq!(d.pair(&d), qf(2, 3));
    assert_eq!(p.pair(&p), qf(-2, 3));
    assert_eq!(a.pair(&d), q0());
    assert!(LatticePoint::d_generator(1).in_d());
    assert!(LatticePoint::sigma().in_d());
    assert!(!a.in_d());
    assert!(a.in_l());
    assert!(!LatticePoint::d_generator(1).in_l());
    assert_eq!(LatticePoint::from_d([1, -1, -1]), LatticePoint::sigma());
    let e = LatticeState::exp(&a);
    assert!(matches!(e, Err(LatticeError::OutsideD(_))));
}

#[test]
fn cocycle_table_and_law() {
    let g = |i: usize| {
        let mut v = [0; 3];
        v[i] = 1;
        v
    };
    for i in 0..3 {
        assert_eq!(cocycle(&g(0), &g(i)), 1);
        assert_eq!(cocycle(&g(i), &g(0)), 1);
        assert_eq!(cocycle(&g(i), &g(i)), 1);
    }
    assert_eq!(cocycle(&g(1), &g(2)), 1);
    assert_eq!(cocycle(&g(2), &g(1)), -1);
    let sigma = [1, -1, -1];
    assert_eq!(cocycle(&sigma, &g(2)), 1);
    assert_eq!(cocycle(&sigma, &g(1)), -1);
    assert_eq!(cocycle(&sigma, &[-1, 1, 0]), -1);

    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut pick = || [rng.gen_range(-4..=4), rng.gen_range(-4..=4), rng.gen_range(-4..=4)];
    for _ in 0..200 {
        let (x, y, z) = (pick(), pick(), pick());
        let sign = if d_pair(&x, &y).rem_euclid(2) == 0 { 1 } else { -1 };
        assert_eq!(cocycle(&x, &y) * cocycle(&y, &x), sign, "{x:?} {y:?}");
        let xz = [x[0] + z[0], x[1] + z[1], x[2] + z[2]];
        assert_eq!(cocycle(&xz, &y), cocycle(&x, &y) * cocycle(&z, &y));
        assert_eq!(
            LatticePoint::from_d(x).pair(&LatticePoint::from_d(y)),
            q(d_pair(&x, &y)),
            "pairing on D"
        );
    }
}

#[test]
fn generators_match_closed_forms() {
    let g = r3_generators();
    let (a, b, d) = (LatticePoint::alpha(), LatticePoint::beta(), LatticePoint::delta());
    assert_eq!(g.h, LatticeState::heis(&b.scale(&q(-2)).add(&d)));
    let e32 = ex(&lp(q(-1), q(-1), qf(3, 2), qf(3, 2)));
    assert_eq!(g.f1, e32.mode(&a, -1).scale_i(-1));
    let sigma = LatticePoint::sigma();
    let e2 = s2(&sigma).heis_mul(&ex(&lp(q(1), q(1), qf(-3, 2), qf(-3, 2))));
    assert_eq!(g.e2, e2);
    let f2 = s3(&sigma).sub(&s2(&sigma).mode(&a, -1)).heis_mul(&ex(&lp(q0(), q0(), qf(-3, 2), qf(-3, 2))));
    assert_eq!(g.f2, f2);
    // Q F¹ = -(-α(-1) S₂(σ) + S₃(σ)) e^{-(3/2)(δ-φ)}
    let fb = s3(&sigma).sub(&s2(&sigma).mode(&a, -1)).scale_i(-1).heis_mul(&ex(&lp(q0(), q0(), qf(-3, 2), qf(3, 2))));
    assert_eq!(f_bar2(), fb);
}

#[test]
fn sl2_and_heisenberg_brackets() {
    let g = r3_generators();
    let vac = LatticeState::vacuum();
    assert_eq!(nth_product(&g.h, &g.e, 0), g.e.scale_i(2));
    assert_eq!(lambda_bracket(&g.e, &g.f), poly(&[(0, g.h.clone()), (1, vac.scale(&qf(-5, 3)))]));
    assert_eq!(lambda_bracket(&g.h, &g.h), poly(&[(1, vac.scale(&qf(-10, 3)))]));
    assert_eq!(lambda_bracket(&g.h, &g.f), poly(&[(0, g.f.scale_i(-2))]));
    assert_eq!(lambda_bracket(&g.j, &g.j), poly(&[(1, vac.scale(&qf(-2, 3)))]));
    assert!(lambda_bracket(&g.e, &g.e).is_zero());
    assert!(lambda_bracket(&g.f, &g.f).is_zero());
    for x in [&g.e, &g.h, &g.f] {
        assert!(lambda_bracket(&g.j, x).is_zero());
    }
}

#[test]
fn intermediate_products() {
    let g = r3_generators();
    assert_eq!(nth_product(&g.e1, &g.f2, 2), LatticeState::vacuum().scale_i(10));
    // the λ¹ coefficient of [E¹_λ F²] is 3λ(-h+5j)
    assert_eq!(nth_product(&g.e1, &g.f2, 1), g.h.scale_i(-3).add(&g.j.scale_i(15)));
}

#[test]
fn bracket_table() {
    for c in r3_bracket_identities() {
        assert!(c.pass(), "{}", c.name);
    }
}

#[test]
fn normally_ordered_closed_forms() {
    let g = r3_generators();
    let (b, d, p) = (LatticePoint::beta(), LatticePoint::delta(), LatticePoint::phi());
    let sigma = LatticePoint::sigma();
    let a2 = LatticePoint::d_generator(1);
    let e = ex(&LatticePoint::d_generator(0));
    let dp = d.add(&p);
    let vac = LatticeState::vacuum();
    let mixed = vac.mode(&dp, -1).mode(&sigma, -1).scale(&qf(9, 2));
    let e1e2 = s2(&sigma).add(&s2(&a2).scale_i(6)).add(&mixed).heis_mul(&e);
    assert_eq!(normally_ordered(&g.e1, &g.e2), e1e2);

    let ab = LatticePoint::d_generator(0);
    let quad = vac.mode(&b, -1).mode(&ab, -1).scale_i(-1).add(&vac.mode(&b, -2));
    let tail = vac.mode(&d, -1).mode(&d, -1).sub(&vac.mode(&d, -2).scale_i(2)).sub(&vac.mode(&p, -1).mode(&p, -1));
    let e_omega = quad.add(&tail.scale(&qf(3, 4))).heis_mul(&e);
    assert_eq!(normally_ordered(&g.e, &g.omega), e_omega);

    assert!(translation(&vac).is_zero());
    assert!(screening_q(&vac).is_zero());
}

#[test]
fn direct_and_oracle_agree() {
    let g = r3_generators();
    let named: Vec<_> = g.named().into_iter().collect();
    for (na, a) in &named {
        for (nb, b) in &named {
            let top = max_product_index(a, b);
            for n in -1..=top {
                assert_eq!(nth_product(a, b, n), nth_product_oracle(a, b, n), "{na}_({n}){nb}");
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..10 {
        let (a, b) = (random_state(&mut rng), random_state(&mut rng));
        for n in -2..=2 {
            assert_eq!(nth_product(&a, &b, n), nth_product_oracle(&a, &b, n), "{a} _({n}) {b}");
        }
    }
}

#[test]
fn batched_products_match_single() {
    let g = r3_generators();
    let top = max_product_index(&g.e1, &g.f2);
    let all = nth_products(&g.e1, &g.f2, -2, top);
    for (i, s) in all.iter().enumerate() {
        assert_eq!(*s, nth_product(&g.e1, &g.f2, i as i64 - 2));
    }
}

#[test]
fn screening_is_a_derivation() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..10 {
        let (a, b) = (random_state(&mut rng), random_state(&mut rng));
        for n in -2..=2 {
            let lhs = screening_q(&nth_product(&a, &b, n));
            let rhs = nth_product(&screening_q(&a), &b, n).add(&nth_product(&a, &screening_q(&b), n));
            assert_eq!(lhs, rhs, "Q({a} _({n}) {b})");
        }
    }
}

#[test]
fn screening_kills_the_generators() {
    let g = r3_generators();
    for x in [&g.e, &g.h, &g.f, &g.j, &g.omega] {
        assert!(screening_q(x).is_zero(), "{x}");
    }
}

#[test]
fn skew_symmetry_and_sesquilinearity() {
    let g = r3_generators();
    let named: Vec<_> = g.named().into_iter().collect();
    for (na, a) in &named {
        for (nb, b) in &named {
            assert_eq!(lambda_bracket(b, a), skew_bracket(a, b), "[{nb} {na}]");
        }
        for (nb, b) in &named {
            let lhs = lambda_bracket(&translation(a), b);
            let br = lambda_bracket(a, b);
            let mut rhs = LambdaPolynomial::zero();
            for (i, s) in &br.coeffs {
                rhs.add_at(i + 1, &s.scale_i(-1));
            }
            assert_eq!(lhs, rhs, "[T{na} {nb}]");
        }
    }
}

#[test]
fn conformal_weights_and_central_charge() {
    let g = r3_generators();
    for (x, w) in [(&g.e, q(1)), (&g.h, q(1)), (&g.f, q(1)), (&g.j, q(1))]
        .into_iter()
        .chain([&g.e1, &g.e2, &g.f1, &g.f2].map(|x| (x, qf(3, 2))))
    {
        assert_eq!(x.weight().unwrap(), w);
        assert_eq!(nth_product(&g.omega, x, 1), x.scale(&w));
        assert_eq!(nth_product(&g.omega, x, 0), translation(x));
    }
    // ω_(3)ω = c/2 with c = -14
    assert_eq!(nth_product(&g.omega, &g.omega, 3), LatticeState::vacuum().scale_i(-7));
    assert_eq!(nth_product(&g.omega, &g.omega, 1), g.omega.scale_i(2));
}

#[test]
fn zhu_relation() {
    let g = r3_generators();
    let (l, r) = zhu_state_identity();
    assert_eq!(l, r);
    let circ = zhu_circ(&g.e1, &g.e2).unwrap();
    assert_eq!(circ, nth_product(&g.e1, &g.e2, -1).add(&nth_product(&g.e1, &g.e2, 0)));
    assert!(zhu_circ(&LatticeState::vacuum(), &g.e2).unwrap().is_zero());
    assert!(matches!(zhu_circ(&g.e.add(&g.e1), &g.e2), Err(LatticeError::NotHomogeneous)));
}

#[test]
fn small_singular_vectors() {
    assert_eq!(singular_vector(0, 0), LatticeState::vacuum());
    assert_eq!(singular_vector(1, 0), r3_generators().e1);
    for (l, j) in [(0, 0), (1, 0), (1, 1), (-1, 1), (0, 1)] {
        let v = singular_vector(l, j);
        let r = is_singular(l, j, &v);
        assert!(r.pass, "{r:?}");
    }
    let r = is_singular(1, 1, &singular_vector(1, 1));
    assert_eq!((r.n.as_str(), r.m.as_str(), r.l0.as_str()), ("3/1", "-1/1", "21/2"));
    assert_eq!(l0_expected(&q(3), &q(-1)), qf(21, 2));
    // a non-singular state is rejected
    let g = r3_generators();
    assert!(!is_singular(0, 0, &g.f).pass);
}

#[test]
fn text_round_trip() {
    let g = r3_generators();
    for (_, s) in g.named() {
        let t = s.to_string();
        assert_eq!(&parse_state(&t).unwrap(), s, "{t}");
    }
    let v = singular_vector(1, 1);
    assert_eq!(parse_state(&v.to_string()).unwrap(), v);
    let s = parse_state("3/2*a(-1)b(-2)E[a+b-3d]").unwrap();
    let (a, b) = (LatticePoint::alpha(), LatticePoint::beta());
    let want = ex(&LatticePoint::sigma()).mode(&b, -2).mode(&a, -1).scale(&qf(3, 2));
    assert_eq!(s, want);
    assert_eq!(parse_state("0").unwrap(), LatticeState::zero());
    assert_eq!(LatticeState::zero().to_string(), "0");
    assert_eq!(LatticeState::vacuum().to_string(), "1*1");
    assert!(parse_state("2*x(-1)").is_err());
    assert!(parse_state("E[a]").is_err());
    assert!(parse_state("a(1)").is_err());
}
