use num_rational::BigRational;
use sp6_orbits::error::Error;
use sp6_orbits::exactfield::{Field, Place, PrimeField, Rationals, Ring, SquareClass};
use sp6_orbits::orbits::{
    coarsen_scalar, gamma_x, reduce, stratum_representatives, Classifier, GroupMode, OrbitInvariant, QuadraticAlgebra,
    ReduceConfig, Stratum,
};
use sp6_orbits::quartic::j;
use sp6_orbits::symplectic::{random_element, word_element, GroupKind};
use sp6_orbits::wedgerep::{act_tuple, from_tuple, to_tuple, WedgeVector, XTuple};

fn q(n: i64) -> BigRational {
    Rationals::new().from_i64(n)
}

fn x2_diag<F: Field>(f: &F, d: [i64; 3]) -> XTuple<F::Elem> {
    let mut t = XTuple::zero(f);
    for k in 0..3 {
        t.a[k][k] = f.from_i64(d[k]);
    }
    t
}

fn x3_diag<F: Field>(f: &F, x0: i64, y0: i64, d: [i64; 3]) -> XTuple<F::Elem> {
    let mut t = XTuple::zero(f);
    t.x0 = f.from_i64(x0);
    t.y0 = f.from_i64(y0);
    for k in 0..3 {
        t.b[k][k] = f.from_i64(d[k]);
    }
    t
}

const MODES: [GroupMode; 3] = [GroupMode::Sp6, GroupMode::Sp6xGL1, GroupMode::GSp6xGL1];

#[test]
fn representatives_land_in_their_strata() {
    let f = Rationals::new();
    let c = Classifier::new(&f).unwrap();
    assert_eq!(c.calibration.ranks, [1, 4, 8]);
    assert!(c.calibration.x2_enabled, "{}", c.calibration.x2_note);
    let reps = stratum_representatives(&f);
    let tags: Vec<&str> = reps.iter().map(|x| c.stratify(x).unwrap().tag()).collect();
    assert_eq!(tags, ["X0", "X1", "X2", "X3"]);
    assert_eq!(c.stratify(&reps[3]).unwrap(), Stratum::X3(q(-1)));
    assert_eq!(c.stratify(&XTuple::zero(&f)).unwrap(), Stratum::Zero);

    let fp = PrimeField::new(5).unwrap();
    let c = Classifier::new(&fp).unwrap();
    let tags: Vec<&str> = stratum_representatives(&fp).iter().map(|x| c.stratify(x).unwrap().tag()).collect();
    assert_eq!(tags, ["X0", "X1", "X2", "X3"]);
}

#[test]
fn x1_class_read_from_reduced_b() {
    let f = Rationals::new();
    let c = Classifier::new(&f).unwrap();
    // -e1e2e3 + 5 e1e5e6
    let mut w = WedgeVector::zero(&f);
    w.set(&f, [0, 1, 2], q(-1));
    w.set(&f, [0, 4, 5], q(5));
    let x = to_tuple(&f, &w).unwrap();
    let inv = c.invariant(&x, GroupMode::Sp6).unwrap();
    assert_eq!(inv, OrbitInvariant::X1 { class: SquareClass(5.into()) });
    let rep = &stratum_representatives(&f)[1];
    let t = reduce(&f, rep, &ReduceConfig::default()).unwrap().canonical;
    assert_eq!(j(&f, &t), q(0));
    assert!(matches!(c.invariant(rep, GroupMode::Sp6).unwrap(), OrbitInvariant::X1 { .. }));
}

#[test]
fn split_square_case_gives_split_octonions() {
    let f = Rationals::new();
    let c = Classifier::new(&f).unwrap();
    let mut w = WedgeVector::zero(&f);
    w.set(&f, [0, 1, 2], q(-1));
    w.set(&f, [3, 4, 5], q(-1));
    let x = to_tuple(&f, &w).unwrap();
    let cl = c.classify(&x, GroupMode::Sp6).unwrap();
    let OrbitInvariant::X3 { i, algebra, octonion_split, octonion, .. } = &cl.invariant else { panic!() };
    assert_eq!(*i, f.from_ratio(-1, 4).unwrap());
    assert_eq!(*algebra, QuadraticAlgebra::Split);
    assert!(*octonion_split);
    assert_eq!(octonion.signature, Some((4, 4)));
    assert_eq!(gamma_x(&f, &x).unwrap(), QuadraticAlgebra::Split);
    let tr = cl.trace.unwrap();
    let g = word_element(&f, &tr.word).unwrap();
    assert_eq!(act_tuple(&f, &g.matrix, &x).unwrap(), tr.canonical);
}

#[test]
fn definite_octonions_from_identity_slice() {
    let f = Rationals::new();
    let c = Classifier::new(&f).unwrap();
    let x = x3_diag(&f, 1, 0, [1, 1, 1]);
    assert_eq!(j(&f, &x), q(1));
    let OrbitInvariant::X3 { algebra, octonion, octonion_split, hermitian_trace, .. } =
        c.invariant(&x, GroupMode::Sp6).unwrap()
    else {
        panic!()
    };
    assert_eq!(algebra, QuadraticAlgebra::Field(SquareClass((-1).into())));
    assert_eq!(octonion.signature, Some((8, 0)));
    assert!(!octonion_split);
    assert_eq!(hermitian_trace.signature, Some((6, 0)));
    let (oct, alg) = c.pair_invariant(&x).unwrap();
    assert_eq!((oct, alg.clone()), c.pair_invariant(&x.scaled(&f, &q(3))).unwrap());
    assert_eq!(alg, QuadraticAlgebra::Field(SquareClass((-1).into())));
    assert_eq!(c.pair_invariant(&stratum_representatives(&f)[2]), Err(Error::NotSemistable));
}

#[test]
fn x2_quaternions_over_rationals() {
    let f = Rationals::new();
    let c = Classifier::new(&f).unwrap();
    let hamilton = c.invariant(&x2_diag(&f, [1, 1, 1]), GroupMode::Sp6).unwrap();
    let OrbitInvariant::X2 { quaternion } = &hamilton else { panic!() };
    assert!(!quaternion.split);
    assert_eq!(quaternion.ramified, Some(vec![Place::Real, Place::Prime(2.into())]));
    let split = c.invariant(&x2_diag(&f, [-1, -1, 1]), GroupMode::Sp6).unwrap();
    let OrbitInvariant::X2 { quaternion } = &split else { panic!() };
    assert!(quaternion.split);
    // det(A) A = 30 <2, 3, 5>
    let OrbitInvariant::X2 { quaternion } = c.invariant(&x2_diag(&f, [2, 3, 5]), GroupMode::Sp6).unwrap() else {
        panic!()
    };
    let expect = sp6_orbits::orbits::quaternion_from_diagonal(&f, &[q(60), q(90), q(150)]).unwrap();
    assert_eq!(quaternion.ramified, expect.ramified);
    let rep = c.invariant(&stratum_representatives(&f)[2], GroupMode::Sp6).unwrap();
    assert!(matches!(rep, OrbitInvariant::X2 { .. }));
}

#[test]
fn coarsening_examples() {
    let f = Rationals::new();
    assert_eq!(coarsen_scalar(&f, &q(16), GroupMode::Sp6xGL1).unwrap(), q(1));
    assert_eq!(coarsen_scalar(&f, &q(4), GroupMode::GSp6xGL1).unwrap(), q(1));
    assert_eq!(coarsen_scalar(&f, &f.from_ratio(-1, 4).unwrap(), GroupMode::GSp6xGL1).unwrap(), q(-1));
    assert_eq!(coarsen_scalar(&f, &q(7), GroupMode::Sp6).unwrap(), q(7));
    assert_eq!(gamma_x(&f, &x3_diag(&f, 1, 0, [1, 1, 1])).unwrap(), QuadraticAlgebra::Field(SquareClass((-1).into())));
    assert_eq!(gamma_x(&f, &x3_diag(&f, 1, 0, [-2, 1, 1])).unwrap(), QuadraticAlgebra::Field(SquareClass(2.into())));
    assert_eq!(gamma_x(&f, &x2_diag(&f, [1, 1, 1])), Err(Error::NotSemistable));
}

fn translate<F: Field>(f: &F, x: &XTuple<F::Elem>, seed: u64, mode: GroupMode) -> XTuple<F::Elem> {
    let kind = if mode == GroupMode::GSp6xGL1 { GroupKind::GSp } else { GroupKind::Sp };
    let g = random_element(f, seed, 4, kind);
    let mut y = act_tuple(f, &g.matrix, x).unwrap();
    if mode != GroupMode::Sp6 {
        let a = f.from_i64((seed % 3) as i64 + 2);
        y = y.scaled(f, &a);
    }
    y
}

fn check_constancy<F: Field>(f: &F, reps: &[XTuple<F::Elem>], n: u64) {
    let c = Classifier::new(f).unwrap();
    for x in reps {
        for mode in MODES {
            let base = c.invariant(x, mode).unwrap();
            for s in 0..n {
                let y = translate(f, x, s * 31 + 7, mode);
                assert_eq!(c.invariant(&y, mode).unwrap(), base, "seed {s} mode {mode:?} at {x:?}");
            }
        }
    }
}

#[test]
fn invariants_constant_on_orbits_over_f5() {
    let f = PrimeField::new(5).unwrap();
    let mut reps = stratum_representatives(&f).to_vec();
    reps.push(x3_diag(&f, 1, 1, [1, 1, 1]));
    reps.push(x3_diag(&f, 1, 0, [2, 1, 1]));
    check_constancy(&f, &reps, 40);
}

#[test]
fn invariants_constant_on_orbits_over_rationals() {
    let f = Rationals::new();
    let mut reps = stratum_representatives(&f).to_vec();
    reps.push(x2_diag(&f, [2, 3, 5]));
    reps.push(x3_diag(&f, 1, 0, [1, 1, 1]));
    reps.push(x3_diag(&f, 1, 2, [3, -1, 7]));
    check_constancy(&f, &reps, 6);
}

#[test]
fn zero_vector_rejected() {
    let f = Rationals::new();
    let c = Classifier::new(&f).unwrap();
    assert_eq!(c.invariant(&XTuple::zero(&f), GroupMode::Sp6), Err(Error::ZeroVector));
    assert_eq!(reduce(&f, &XTuple::zero(&f), &ReduceConfig::default()).unwrap_err(), Error::ZeroVector);
    let _ = from_tuple(&f, &XTuple::zero(&f));
}
