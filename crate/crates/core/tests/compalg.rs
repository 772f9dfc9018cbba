use num_rational::BigRational;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use sp6_orbits::compalg::{
    cayley_dickson, conj, from_lambdas, ground, mul, norm, norm_form, octonion_norm_from_hermitian, traceless_classify,
    traceless_subspace, zorn, CompositionAlgebra, TracelessClass,
};
use sp6_orbits::error::Error;
use sp6_orbits::exactfield::{Field, PrimeField, Rationals, Ring};
use sp6_orbits::linalg::{self, Mat};
use sp6_orbits::quadforms::{invariants, is_isometric, is_isotropic, HermitianForm, QuadraticForm};

fn q(n: i64) -> BigRational {
    Rationals::new().from_i64(n)
}

fn diag(v: &[i64]) -> QuadraticForm<BigRational> {
    QuadraticForm::diagonal(&Rationals::new(), &v.iter().map(|&x| q(x)).collect::<Vec<_>>())
}

fn random_vec<F: Field>(f: &F, n: usize, rng: &mut ChaCha8Rng) -> Vec<F::Elem> {
    (0..n).map(|_| f.random_small(rng, 3)).collect()
}

fn restricted<F: Field>(f: &F, c: &CompositionAlgebra<F::Elem>) -> QuadraticForm<F::Elem> {
    let basis = traceless_subspace(f, c);
    let b = Mat::from_fn(c.dim, basis.len(), |i, k| basis[k][i].clone());
    QuadraticForm { gram: linalg::mul(f, &linalg::mul(f, &b.transpose(), &c.norm_gram), &b) }
}

fn algebras<F: Field>(f: &F, lambdas: &[i64]) -> Vec<CompositionAlgebra<F::Elem>> {
    let l: Vec<F::Elem> = lambdas.iter().map(|&x| f.from_i64(x)).collect();
    vec![
        from_lambdas(f, &l[..1]).unwrap(),
        from_lambdas(f, &l[..2]).unwrap(),
        from_lambdas(f, &l[..3]).unwrap(),
        zorn(f),
    ]
}

fn composition_laws<F: Field>(f: &F, c: &CompositionAlgebra<F::Elem>, n: usize, seed: u64) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..n {
        let (x, y) = (random_vec(f, c.dim, &mut rng), random_vec(f, c.dim, &mut rng));
        assert_eq!(norm(f, c, &mul(f, c, &x, &y)), f.mul(&norm(f, c, &x), &norm(f, c, &y)));
        let xb = conj(f, c, &x);
        assert_eq!(conj(f, c, &xb), x);
        let s: Vec<F::Elem> = x.iter().zip(&xb).map(|(a, b)| f.add(a, b)).collect();
        let t = s.iter().zip(&c.unit).find(|(_, u)| !f.is_zero(u)).map(|(a, _)| a.clone()).unwrap();
        assert_eq!(s, c.unit.iter().map(|u| f.mul(&t, u)).collect::<Vec<_>>());
        let n_x = norm(f, c, &x);
        assert_eq!(mul(f, c, &x, &xb), c.unit.iter().map(|u| f.mul(&n_x, u)).collect::<Vec<_>>());
        assert_eq!(mul(f, c, &c.unit, &x), x);
        assert_eq!(mul(f, c, &x, &c.unit), x);
    }
}

#[test]
fn multiplicative_norms_over_rationals() {
    let f = Rationals::new();
    for (k, c) in algebras(&f, &[-1, 3, -5]).iter().chain(&algebras(&f, &[2, -1, 7])).enumerate() {
        composition_laws(&f, c, 250, k as u64);
    }
}

#[test]
fn multiplicative_norms_over_f5() {
    let f = PrimeField::new(5).unwrap();
    for (k, c) in algebras(&f, &[2, 3, 4]).iter().enumerate() {
        composition_laws(&f, c, 1000, 100 + k as u64);
    }
}

#[test]
fn doubling_examples() {
    let f = Rationals::new();
    let c = cayley_dickson(&f, &ground(&f), &q(5)).unwrap();
    assert_eq!(norm_form(&c), diag(&[1, -5]));
    let s = cayley_dickson(&f, &ground(&f), &q(1)).unwrap();
    assert!(is_isotropic(&f, &norm_form(&s)).unwrap());
    assert!(sp6_orbits::compalg::is_split(&f, &s).unwrap());
    let o = from_lambdas(&f, &[q(-1), q(-1), q(-1)]).unwrap();
    assert_eq!(o.dim, 8);
    assert_eq!(invariants(&f, &norm_form(&o)).unwrap().signature, Some((8, 0)));
    assert!(!sp6_orbits::compalg::is_split(&f, &o).unwrap());
    assert_eq!(cayley_dickson(&f, &o, &q(1)), Err(Error::NonAssociativeBase));
    assert_eq!(from_lambdas(&f, &[q(1), q(1), q(1), q(1)]), Err(Error::NonAssociativeBase));
    assert_eq!(cayley_dickson(&f, &ground(&f), &q(0)), Err(Error::ZeroInput));
}

#[test]
fn zorn_examples() {
    let f = Rationals::new();
    let z = zorn(&f);
    assert_eq!(norm(&f, &z, &z.unit), q(1));
    assert!(sp6_orbits::compalg::is_split(&f, &z).unwrap());
    let split_quaternion = from_lambdas(&f, &[q(1), q(1)]).unwrap();
    let doubled = cayley_dickson(&f, &split_quaternion, &q(1)).unwrap();
    assert!(is_isometric(&f, &norm_form(&z), &norm_form(&doubled)).unwrap());
    let mut rng = ChaCha8Rng::seed_from_u64(20);
    for _ in 0..20 {
        let x = random_vec(&f, 8, &mut rng);
        assert_eq!(mul(&f, &z, &z.unit, &x), x);
    }
    let f5 = PrimeField::new(5).unwrap();
    composition_laws(&f5, &zorn(&f5), 100, 21);
}

#[test]
fn every_octonion_over_f5_is_split() {
    let f = PrimeField::new(5).unwrap();
    for a in 1..5 {
        for b in 1..5 {
            for c in 1..5 {
                let o = from_lambdas(&f, &[a, b, c]).unwrap();
                assert!(sp6_orbits::compalg::is_split(&f, &o).unwrap());
                let h = from_lambdas(&f, &[a, b]).unwrap();
                assert!(sp6_orbits::compalg::is_split(&f, &h).unwrap());
            }
        }
        let k = from_lambdas(&f, &[a]).unwrap();
        assert_eq!(sp6_orbits::compalg::is_split(&f, &k).unwrap(), f.is_square(&a));
    }
}

#[test]
fn octonions_from_hermitian_forms() {
    let f = Rationals::new();
    let h = HermitianForm::diagonal(&f, q(-1), &[q(1), q(1), q(1)]);
    let n = octonion_norm_from_hermitian(&f, &h).unwrap();
    assert!(is_isometric(&f, &n, &diag(&[1; 8])).unwrap());
    assert!(!is_isotropic(&f, &n).unwrap());
    let h = HermitianForm::diagonal(&f, q(-1), &[q(-1), q(-1), q(1)]);
    assert!(is_isotropic(&f, &octonion_norm_from_hermitian(&f, &h).unwrap()).unwrap());
    let h = HermitianForm::diagonal(&f, q(4), &[q(2), q(3), q(7)]);
    let n = octonion_norm_from_hermitian(&f, &h).unwrap();
    assert!(is_isometric(&f, &n, &norm_form(&zorn(&f))).unwrap());
    let h = HermitianForm::diagonal(&f, q(-1), &[q(-1), q(-1), q(-1)]);
    assert_eq!(octonion_norm_from_hermitian(&f, &h), Err(Error::NontrivialDiscriminant));
    let h = HermitianForm::diagonal(&f, q(-1), &[q(1), q(1)]);
    assert!(matches!(octonion_norm_from_hermitian(&f, &h), Err(Error::DimensionMismatch(_))));
    for (d, y) in [(-3, [1, 2, 2]), (-7, [2, 2, 4]), (-1, [2, 5, 10])] {
        let h = HermitianForm::diagonal(&f, q(d), &y.map(q));
        let inv = invariants(&f, &octonion_norm_from_hermitian(&f, &h).unwrap()).unwrap();
        assert_eq!(inv.disc.0, 1.into());
        assert_eq!(inv.rank, 8);
    }
}

#[test]
fn traceless_complements() {
    let f = Rationals::new();
    assert_eq!(traceless_subspace(&f, &zorn(&f)).len(), 7);
    let z = invariants(&f, &restricted(&f, &zorn(&f))).unwrap();
    assert_eq!((z.rank, z.signature), (7, Some((3, 4))));
    let c = from_lambdas(&f, &[q(3)]).unwrap();
    assert!(is_isometric(&f, &restricted(&f, &c), &diag(&[-3])).unwrap());
    let o = from_lambdas(&f, &[q(-1), q(-1), q(-1)]).unwrap();
    assert!(is_isometric(&f, &restricted(&f, &o), &diag(&[1; 7])).unwrap());
}

#[test]
fn traceless_orbit_data() {
    let f = Rationals::new();
    let z = zorn(&f);
    let basis = traceless_subspace(&f, &z);
    // x1 e1-direction in the Zorn basis: trace zero and null
    let mut v = vec![q(0); 8];
    v[1] = q(1);
    assert_eq!(traceless_classify(&f, &z, &v, true).unwrap(), TracelessClass::Null);
    assert_eq!(traceless_classify(&f, &z, &v, false).unwrap(), TracelessClass::Value(q(0)));
    for b in &basis {
        let twice: Vec<BigRational> = b.iter().map(|e| e * q(2)).collect();
        assert_eq!(traceless_classify(&f, &z, b, true).unwrap(), traceless_classify(&f, &z, &twice, true).unwrap());
        let nv = norm(&f, &z, b);
        assert_eq!(traceless_classify(&f, &z, b, false).unwrap(), TracelessClass::Value(nv));
    }
    assert_eq!(traceless_classify(&f, &z, &vec![q(0); 8], true), Err(Error::ZeroVector));
    assert_eq!(traceless_classify(&f, &z, &z.unit, true), Err(Error::NotTraceless));
    assert!(matches!(traceless_classify(&f, &z, &[q(1)], true), Err(Error::DimensionMismatch(_))));
}
