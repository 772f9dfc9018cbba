use num_rational::BigRational;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use sp6_orbits::error::Error;
use sp6_orbits::exactfield::{Field, PrimeField, Rationals, Ring};
use sp6_orbits::linalg::{self, Mat};
use sp6_orbits::quartic::j;
use sp6_orbits::symplectic::{expand, random_element, GeneratorDescriptor, GroupKind};
use sp6_orbits::wedgerep::{
    act, act_tuple, contraction, from_tuple, in_x, induced_action, to_tuple, WedgeVector, XTuple, TRIPLES,
};

fn q(n: i64) -> BigRational {
    Rationals::new().from_i64(n)
}

fn basis<F: Field>(f: &F, t: [usize; 3]) -> WedgeVector<F::Elem> {
    let mut w = WedgeVector::zero(f);
    w.set(f, t, f.one());
    w
}

fn random_wedge<F: Field>(f: &F, rng: &mut ChaCha8Rng) -> WedgeVector<F::Elem> {
    WedgeVector { coords: (0..20).map(|_| f.random_small(rng, 3)).collect() }
}

fn random_tuple<F: Field>(f: &F, rng: &mut ChaCha8Rng) -> XTuple<F::Elem> {
    XTuple::from_coords(&(0..14).map(|_| f.random_small(rng, 3)).collect::<Vec<_>>())
}

#[test]
fn torus_scales_e123_by_product() {
    let f = Rationals::new();
    let t = [q(2), q(-3), q(5)];
    let g = expand(&f, &GeneratorDescriptor::TorusScale(t)).unwrap();
    let w = act(&f, &g.matrix, &basis(&f, [0, 1, 2])).unwrap();
    let mut want = WedgeVector::zero(&f);
    want.set(&f, [0, 1, 2], q(-30));
    assert_eq!(w, want);
}

#[test]
fn lagrangian_swap_sends_e123_to_e246() {
    let f = Rationals::new();
    let mut g = linalg::zeros(&f, 6, 6);
    // α = δ = diag(0, -1, 0), γ = diag(1, 0, 1) = -β
    g.set(1, 1, q(-1));
    g.set(4, 4, q(-1));
    g.set(3, 0, q(1));
    g.set(5, 2, q(1));
    g.set(0, 3, q(-1));
    g.set(2, 5, q(-1));
    assert_eq!(act(&f, &g, &basis(&f, [0, 1, 2])).unwrap(), basis(&f, [1, 3, 5]));
}

#[test]
fn induced_identity_and_singular() {
    let f = PrimeField::new(5).unwrap();
    assert_eq!(induced_action(&f, &linalg::identity(&f, 6)).unwrap(), linalg::identity(&f, 20));
    assert!(matches!(induced_action(&f, &linalg::zeros(&f, 6, 6)), Err(Error::SingularMatrix)));
}

#[test]
fn swap_preserves_j() {
    let f = Rationals::new();
    let mut w = WedgeVector::zero(&f);
    w.set(&f, [0, 1, 2], q(-1));
    w.set(&f, [3, 4, 5], q(-2));
    let x = to_tuple(&f, &w).unwrap();
    let s = expand(&f, &GeneratorDescriptor::Swap).unwrap();
    let y = act_tuple(&f, &s.matrix, &x).unwrap();
    assert_eq!(j(&f, &y), j(&f, &x));
    assert_eq!(j(&f, &x), q(-1));
    assert_eq!((y.x0.clone(), y.y0.clone()), (f.neg(&x.y0), x.x0.clone()));
}

#[test]
fn contraction_examples() {
    let f = Rationals::new();
    assert!(contraction(&f, &basis(&f, [0, 1, 2])).iter().all(|e| f.is_zero(e)));
    let phi = contraction(&f, &basis(&f, [0, 1, 3]));
    assert_eq!(phi, vec![q(0), q(-1), q(0), q(0), q(0), q(0)]);
    assert!(in_x(&f, &basis(&f, [0, 1, 2])));
    assert!(!in_x(&f, &basis(&f, [0, 1, 3])));
}

fn kernel_dim<F: Field>(f: &F) -> usize {
    let cols: Vec<Vec<F::Elem>> = TRIPLES.iter().map(|&t| contraction(f, &basis(f, t))).collect();
    let m = Mat::from_fn(6, 20, |i, k| cols[k][i].clone());
    20 - linalg::rank(f, &m)
}

#[test]
fn x_has_dimension_fourteen() {
    assert_eq!(kernel_dim(&Rationals::new()), 14);
    for p in [3, 5, 7, 13] {
        assert_eq!(kernel_dim(&PrimeField::new(p).unwrap()), 14);
    }
}

#[test]
fn tuple_round_trip_and_rejection() {
    let f = PrimeField::new(7).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for _ in 0..200 {
        let t = random_tuple(&f, &mut rng);
        let w = from_tuple(&f, &t);
        assert!(in_x(&f, &w));
        assert_eq!(to_tuple(&f, &w).unwrap(), t);
    }
    assert_eq!(to_tuple(&f, &basis(&f, [0, 1, 3])), Err(Error::NotInX));
}

fn functorial<F: Field>(f: &F, s1: u64, s2: u64, len: usize) {
    let g = random_element(f, s1, len, GroupKind::GSp).matrix;
    let h = random_element(f, s2, len, GroupKind::GSp).matrix;
    let lhs = induced_action(f, &linalg::mul(f, &g, &h)).unwrap();
    let rhs = linalg::mul(f, &induced_action(f, &g).unwrap(), &induced_action(f, &h).unwrap());
    assert_eq!(lhs, rhs);
}

#[test]
fn functoriality_two_hundred_pairs() {
    let f = PrimeField::new(5).unwrap();
    for s in 0..150 {
        functorial(&f, s, s + 1000, 3);
    }
    let q = Rationals::new();
    for s in 0..50 {
        functorial(&q, s, s + 1000, 2);
    }
}

#[test]
fn x_stable_under_five_hundred_elements() {
    let f = PrimeField::new(5).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for s in 0..500 {
        let g = random_element(&f, s, 3, GroupKind::Sp).matrix;
        let w = from_tuple(&f, &random_tuple(&f, &mut rng));
        assert!(in_x(&f, &act(&f, &g, &w).unwrap()));
    }
}

#[test]
fn membership_matches_contraction() {
    let f = PrimeField::new(3).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut hits = 0;
    for k in 0..1000 {
        let w = if k % 2 == 0 { random_wedge(&f, &mut rng) } else { from_tuple(&f, &random_tuple(&f, &mut rng)) };
        let zero = contraction(&f, &w).iter().all(|e| f.is_zero(e));
        assert_eq!(in_x(&f, &w), zero);
        hits += zero as usize;
    }
    assert!(hits >= 500);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn action_matches_tuple_action(seed in 0u64..100_000, v in prop::collection::vec(-4i64..=4, 14)) {
        let f = Rationals::new();
        let x = XTuple::from_coords(&v.iter().map(|&e| q(e)).collect::<Vec<_>>());
        let g = random_element(&f, seed, 3, GroupKind::GSp).matrix;
        let y = act_tuple(&f, &g, &x).unwrap();
        prop_assert_eq!(from_tuple(&f, &y), act(&f, &g, &from_tuple(&f, &x)).unwrap());
    }
}
