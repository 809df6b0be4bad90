use minw::algebra::{build_algebra, AlgebraSpec};
use minw::reps::{format_decomposition, Reps};
use proptest::prelude::*;

fn reps(s: &str) -> Reps {
    Reps::new(&build_algebra(&AlgebraSpec::parse(s).unwrap()).unwrap()).unwrap()
}

#[test]
fn weyl_dimensions() {
    assert_eq!(reps("E7").weyl_dim(&[0, 0, 0, 0, 0, 0, 1]).unwrap(), 56);
    assert_eq!(reps("E8").weyl_dim(&[0; 8]).unwrap(), 1);
    assert_eq!(reps("A1").weyl_dim(&[3]).unwrap(), 4);
    assert_eq!(reps("C3").weyl_dim(&[0, 0, 1]).unwrap(), 14);
    assert_eq!(reps("E6").weyl_dim(&[1, 0, 0, 0, 0, 0]).unwrap(), 27);
    assert!(reps("A2").weyl_dim(&[-1, 0]).is_err());
}

#[test]
fn characters() {
    let a1 = reps("A1");
    let ch = a1.dominant_character(&[2]).unwrap();
    assert_eq!(ch.mults.into_iter().collect::<Vec<_>>(), vec![(vec![0], 1), (vec![2], 1)]);
    let c3 = reps("C3");
    let ch = c3.dominant_character(&[0, 0, 1]).unwrap();
    assert_eq!(ch.mults[&vec![1, 0, 0]], 1);
    assert_eq!(c3.character_dim(&ch).unwrap(), 14);
    let e7 = reps("E7");
    let ch = e7.dominant_character(&[0, 0, 0, 0, 0, 0, 1]).unwrap();
    assert_eq!(e7.character_dim(&ch).unwrap(), 56);
    let ad = e7.dominant_character(&[1, 0, 0, 0, 0, 0, 0]).unwrap();
    assert_eq!(ad.mults[&vec![0; 7]], 7);
}

#[test]
fn known_decompositions() {
    let a1 = reps("A1");
    assert_eq!(format_decomposition(&a1.tensor_decompose(&[3], &[3]).unwrap()), "6w1 + 4w1 + 2w1 + 0");
    let e7 = reps("E7");
    let d = e7.tensor_decompose(&[0, 0, 0, 0, 0, 0, 1], &[0, 0, 0, 0, 0, 0, 1]).unwrap();
    assert_eq!(format_decomposition(&d), "2w7 + w6 + w1 + 0");
    let total: u128 = d.iter().map(|(w, m)| e7.weyl_dim(w).unwrap() * *m as u128).sum();
    assert_eq!(total, 56 * 56);
    assert_eq!(a1.tensor_decompose(&[5], &[0]).unwrap(), vec![(vec![5], 1)]);
}

fn small_case() -> impl Strategy<Value = (String, Vec<i64>, Vec<i64>)> {
    prop_oneof![
        (0i64..4, 0i64..4).prop_map(|(a, b)| ("A1".to_string(), vec![a], vec![b])),
        (0i64..2, 0i64..2, 0i64..2, 0i64..2).prop_map(|(a, b, c, d)| ("A2".to_string(), vec![a, b], vec![c, d])),
        (0i64..2, 0i64..2, 0i64..2, 0i64..2).prop_map(|(a, b, c, d)| ("B2".to_string(), vec![a, b], vec![c, d])),
        (0i64..2, 0i64..2).prop_map(|(a, c)| ("G2".to_string(), vec![a, 0], vec![c, 0])),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 24, rng_algorithm: proptest::test_runner::RngAlgorithm::ChaCha, ..ProptestConfig::default() })]

    #[test]
    fn klimyk_matches_brute_force((alg, l, r) in small_case()) {
        let rp = reps(&alg);
        let k = rp.tensor_decompose(&l, &r).unwrap();
        prop_assert_eq!(&k, &rp.tensor_decompose_brute(&l, &r).unwrap());
        prop_assert_eq!(&k, &rp.tensor_decompose(&r, &l).unwrap());
        let total: u128 = k.iter().map(|(w, m)| rp.weyl_dim(w).unwrap() * *m as u128).sum();
        prop_assert_eq!(total, rp.weyl_dim(&l).unwrap() * rp.weyl_dim(&r).unwrap());
    }

    #[test]
    fn character_dim_matches_weyl(l in proptest::collection::vec(0i64..3, 3)) {
        for name in ["A3", "B3", "C3"] {
            let rp = reps(name);
            let ch = rp.dominant_character(&l).unwrap();
            prop_assert_eq!(rp.character_dim(&ch).unwrap(), rp.weyl_dim(&l).unwrap());
        }
    }
}

#[test]
fn c3_tensor_square_of_w3() {
    let c3 = reps("C3");
    let d = c3.tensor_decompose(&[0, 0, 1], &[0, 0, 1]).unwrap();
    assert_eq!(format_decomposition(&d), "2w3 + 2w2 + 2w1 + 0");
}
