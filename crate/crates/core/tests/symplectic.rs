use num_rational::BigRational;
use proptest::prelude::*;
use sp6_orbits::error::Error;
use sp6_orbits::exactfield::{Field, PrimeField, Rationals, Ring};
use sp6_orbits::linalg::{self, Mat};
use sp6_orbits::symplectic::{
    expand, is_symplectic, omega, random_element, similitude_factor, word_element, GeneratorDescriptor, GroupKind,
    SymplecticElement,
};

fn q(n: i64, d: i64) -> BigRational {
    Rationals::new().from_ratio(n, d).unwrap()
}

fn blocks<F: Field>(f: &F, a: &[F::Elem], b: &[F::Elem], c: &[F::Elem], d: &[F::Elem]) -> Mat<F::Elem> {
    let (a, b, c, d) = (linalg::diag(f, a), linalg::diag(f, b), linalg::diag(f, c), linalg::diag(f, d));
    Mat::from_fn(6, 6, |i, j| match (i < 3, j < 3) {
        (true, true) => a.get(i, j).clone(),
        (true, false) => b.get(i, j - 3).clone(),
        (false, true) => c.get(i - 3, j).clone(),
        (false, false) => d.get(i - 3, j - 3).clone(),
    })
}

#[test]
fn block_condition_examples() {
    let f = Rationals::new();
    assert!(is_symplectic(&f, &linalg::identity(&f, 6)));
    let g = blocks(
        &f,
        &[q(1, 2), q(1, 1), q(1, 1)],
        &[q(1, 2), q(1, 1), q(1, 1)],
        &[q(-1, 1), q(-1, 2), q(-1, 2)],
        &[q(1, 1), q(1, 2), q(1, 2)],
    );
    assert!(is_symplectic(&f, &g));
    let mut bad = linalg::identity(&f, 6);
    bad.set(0, 4, q(1, 1));
    assert!(!is_symplectic(&f, &bad));
    assert!(similitude_factor(&f, &bad).is_none());
    assert!(!is_symplectic(&f, &linalg::identity(&f, 5)));
    let z = q(0, 1);
    let g = blocks(&f, &[z.clone(), q(-1, 1), z.clone()], &[q(-1, 1), z.clone(), q(-1, 1)], &[q(1, 1), z.clone(), q(1, 1)], &[
        z.clone(),
        q(-1, 1),
        z,
    ]);
    assert!(is_symplectic(&f, &g));
}

#[test]
fn generator_expansions() {
    let f = Rationals::new();
    let t = expand(&f, &GeneratorDescriptor::TorusScale([q(2, 1), q(-3, 1), q(1, 5)])).unwrap();
    let d = [q(2, 1), q(-3, 1), q(1, 5), q(1, 2), q(-1, 3), q(5, 1)];
    assert_eq!(t.matrix, linalg::diag(&f, &d));
    let s = expand(&f, &GeneratorDescriptor::Swap).unwrap();
    assert!(is_symplectic(&f, &s.matrix));
    assert_eq!(s.matrix, omega(&f).transpose());
    let h = expand(&f, &GeneratorDescriptor::Dilation(q(7, 3))).unwrap();
    assert!(!is_symplectic(&f, &h.matrix));
    assert_eq!(similitude_factor(&f, &h.matrix), Some(q(7, 3)));
    assert_eq!(h.multiplier, q(7, 3));
    let x = expand(&f, &GeneratorDescriptor::ScaleX0(q(4, 1))).unwrap();
    assert_eq!(x.matrix.get(0, 0), &q(1, 4));
    assert_eq!(x.matrix.get(3, 3), &q(4, 1));
    assert!(is_symplectic(&f, &x.matrix));
    let mut nonsym = linalg::zeros(&f, 3, 3);
    nonsym.set(0, 1, q(1, 1));
    assert!(matches!(expand(&f, &GeneratorDescriptor::GammaMove(nonsym.clone())), Err(Error::InvalidDescriptor(_))));
    assert!(matches!(expand(&f, &GeneratorDescriptor::BetaMove(nonsym)), Err(Error::InvalidDescriptor(_))));
    let singular = linalg::zeros(&f, 3, 3);
    assert!(matches!(expand(&f, &GeneratorDescriptor::BlockDiag(singular)), Err(Error::InvalidDescriptor(_))));
    assert!(matches!(expand(&f, &GeneratorDescriptor::ScaleX0(q(0, 1))), Err(Error::InvalidDescriptor(_))));
    assert!(matches!(
        expand(&f, &GeneratorDescriptor::TorusScale([q(1, 1), q(0, 1), q(1, 1)])),
        Err(Error::InvalidDescriptor(_))
    ));
}

#[test]
fn word_length_one_is_a_single_generator() {
    let f = PrimeField::new(5).unwrap();
    for seed in 0..20 {
        let g = random_element(&f, seed, 1, GroupKind::Sp);
        assert_eq!(g.word.len(), 1);
        assert_eq!(g.matrix, expand(&f, &g.word[0]).unwrap().matrix);
    }
}

#[test]
fn random_elements_reproducible() {
    let f = PrimeField::new(5).unwrap();
    let a = random_element(&f, 42, 6, GroupKind::GSp);
    let b = random_element(&f, 42, 6, GroupKind::GSp);
    assert_eq!(a, b);
    let q = Rationals::new();
    assert_eq!(random_element(&q, 7, 5, GroupKind::Sp), random_element(&q, 7, 5, GroupKind::Sp));
    assert_ne!(random_element(&q, 7, 5, GroupKind::Sp).matrix, random_element(&q, 8, 5, GroupKind::Sp).matrix);
}

fn check_group_laws<F: Field>(f: &F, a: &SymplecticElement<F::Elem>, b: &SymplecticElement<F::Elem>, kind: GroupKind) {
    for g in [a, b] {
        let mu = similitude_factor(f, &g.matrix).expect("similitude");
        assert_eq!(mu, g.multiplier);
        if kind == GroupKind::Sp {
            assert!(is_symplectic(f, &g.matrix) && f.is_one(&mu));
        }
        assert_eq!(word_element(f, &g.word).unwrap().matrix, g.matrix);
    }
    let ab = a.compose(f, b);
    assert_eq!(similitude_factor(f, &ab.matrix), Some(f.mul(&a.multiplier, &b.multiplier)));
    assert_eq!(word_element(f, &ab.word).unwrap().matrix, ab.matrix);
    let ai = a.inverse(f);
    assert_eq!(linalg::mul(f, &ai.matrix, &a.matrix), linalg::identity(f, 6));
    assert_eq!(word_element(f, &ai.word).unwrap().matrix, ai.matrix);
    assert!(f.is_one(&f.mul(&ai.multiplier, &a.multiplier)));
}

#[test]
fn two_hundred_random_elements_are_symplectic() {
    let f = PrimeField::new(5).unwrap();
    for seed in 0..200 {
        assert!(is_symplectic(&f, &random_element(&f, seed, 4, GroupKind::Sp).matrix));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn group_laws_over_f5(s1 in 0u64..10_000, s2 in 0u64..10_000, len in 1usize..8, gsp in any::<bool>()) {
        let f = PrimeField::new(5).unwrap();
        let kind = if gsp { GroupKind::GSp } else { GroupKind::Sp };
        check_group_laws(&f, &random_element(&f, s1, len, kind), &random_element(&f, s2, len, kind), kind);
    }

    #[test]
    fn group_laws_over_rationals(s1 in 0u64..10_000, s2 in 0u64..10_000, len in 1usize..5, gsp in any::<bool>()) {
        let f = Rationals::new();
        let kind = if gsp { GroupKind::GSp } else { GroupKind::Sp };
        check_group_laws(&f, &random_element(&f, s1, len, kind), &random_element(&f, s2, len, kind), kind);
    }
}
