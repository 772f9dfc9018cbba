//! Composition algebras: the ground field, Cayley-Dickson doubling, the
//! Zorn vector-matrix algebra, and the orbit fibers on trace-zero elements.

use crate::error::{Error, Result};
use crate::exactfield::{Field, SquareClass};
use crate::linalg::{self, Mat};
use crate::quadforms::{hermitian_discriminant, hermitian_trace_form, is_isotropic, HermitianForm, QuadraticForm};

/// How an algebra was built.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Construction<E> {
    Ground,
    CayleyDickson(Vec<E>),
    Zorn,
}

/// A unital algebra with a multiplicative quadratic norm, stored by dense
/// structure constants `e_i e_j = sum_k c[i][j][k] e_k` and the norm Gram
/// matrix `N(x) = x^t G x`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompositionAlgebra<E> {
    pub dim: usize,
    table: Vec<E>,
    pub norm_gram: Mat<E>,
    pub unit: Vec<E>,
    pub construction: Construction<E>,
}

impl<E: Clone> CompositionAlgebra<E> {
    fn c(&self, i: usize, j: usize, k: usize) -> &E {
        &self.table[(i * self.dim + j) * self.dim + k]
    }
}

/// The ground field as a 1-dimensional composition algebra.
pub fn ground<F: Field>(f: &F) -> CompositionAlgebra<F::Elem> {
    CompositionAlgebra {
        dim: 1,
        table: vec![f.one()],
        norm_gram: linalg::identity(f, 1),
        unit: vec![f.one()],
        construction: Construction::Ground,
    }
}

pub fn mul<F: Field>(f: &F, c: &CompositionAlgebra<F::Elem>, u: &[F::Elem], v: &[F::Elem]) -> Vec<F::Elem> {
    let n = c.dim;
    let mut out = vec![f.zero(); n];
    for (i, ui) in u.iter().enumerate() {
        if f.is_zero(ui) {
            continue;
        }
        for (j, vj) in v.iter().enumerate() {
            if f.is_zero(vj) {
                continue;
            }
            let p = f.mul(ui, vj);
            for (k, o) in out.iter_mut().enumerate() {
                let ck = c.c(i, j, k);
                if !f.is_zero(ck) {
                    *o = f.add(o, &f.mul(&p, ck));
                }
            }
        }
    }
    out
}

pub fn norm<F: Field>(f: &F, c: &CompositionAlgebra<F::Elem>, x: &[F::Elem]) -> F::Elem {
    QuadraticForm { gram: c.norm_gram.clone() }.value(f, x)
}

/// Polar form `b_N(x, y) = N(x + y) - N(x) - N(y) = 2 x^t G y`.
pub fn polar<F: Field>(f: &F, c: &CompositionAlgebra<F::Elem>, x: &[F::Elem], y: &[F::Elem]) -> F::Elem {
    let b = QuadraticForm { gram: c.norm_gram.clone() }.bilinear(f, x, y);
    f.add(&b, &b)
}

/// `conj(x) = b_N(x, 1) 1 - x`.
pub fn conj<F: Field>(f: &F, c: &CompositionAlgebra<F::Elem>, x: &[F::Elem]) -> Vec<F::Elem> {
    let t = polar(f, c, x, &c.unit);
    c.unit.iter().zip(x).map(|(u, xi)| f.sub(&f.mul(&t, u), xi)).collect()
}

fn basis<F: Field>(f: &F, n: usize, i: usize) -> Vec<F::Elem> {
    (0..n).map(|k| if k == i { f.one() } else { f.zero() }).collect()
}

fn is_associative<F: Field>(f: &F, c: &CompositionAlgebra<F::Elem>) -> bool {
    let n = c.dim;
    let e: Vec<Vec<F::Elem>> = (0..n).map(|i| basis(f, n, i)).collect();
    for a in &e {
        for b in &e {
            let ab = mul(f, c, a, b);
            for d in &e {
                if mul(f, c, &ab, d) != mul(f, c, a, &mul(f, c, b, d)) {
                    return false;
                }
            }
        }
    }
    true
}

/// Cayley-Dickson double `D ⊕ D` with
/// `(x, y)(u, v) = (x u + λ conj(v) y, v x + y conj(u))` and norm
/// `N(x) - λ N(y)`.
pub fn cayley_dickson<F: Field>(
    f: &F,
    d: &CompositionAlgebra<F::Elem>,
    lambda: &F::Elem,
) -> Result<CompositionAlgebra<F::Elem>> {
    if f.is_zero(lambda) {
        return Err(Error::ZeroInput);
    }
    if !is_associative(f, d) {
        return Err(Error::NonAssociativeBase);
    }
    let n = d.dim;
    let m = 2 * n;
    let zero = vec![f.zero(); n];
    let split = |i: usize| -> (Vec<F::Elem>, Vec<F::Elem>) {
        if i < n {
            (basis(f, n, i), zero.clone())
        } else {
            (zero.clone(), basis(f, n, i - n))
        }
    };
    let add = |a: Vec<F::Elem>, b: Vec<F::Elem>| -> Vec<F::Elem> { a.iter().zip(&b).map(|(x, y)| f.add(x, y)).collect() };
    let mut table = Vec::with_capacity(m * m * m);
    for i in 0..m {
        let (x, y) = split(i);
        for j in 0..m {
            let (u, v) = split(j);
            let lv = conj(f, d, &v).iter().map(|e| f.mul(lambda, e)).collect::<Vec<_>>();
            let first = add(mul(f, d, &x, &u), mul(f, d, &lv, &y));
            let second = add(mul(f, d, &v, &x), mul(f, d, &y, &conj(f, d, &u)));
            table.extend(first);
            table.extend(second);
        }
    }
    let nl = f.neg(lambda);
    let norm_gram = Mat::from_fn(m, m, |i, j| match (i < n, j < n) {
        (true, true) => d.norm_gram.get(i, j).clone(),
        (false, false) => f.mul(&nl, d.norm_gram.get(i - n, j - n)),
        _ => f.zero(),
    });
    let mut unit = d.unit.clone();
    unit.extend(zero.iter().cloned());
    let mut lambdas = match &d.construction {
        Construction::CayleyDickson(l) => l.clone(),
        _ => Vec::new(),
    };
    lambdas.push(lambda.clone());
    Ok(CompositionAlgebra { dim: m, table, norm_gram, unit, construction: Construction::CayleyDickson(lambdas) })
}

/// Iterated doubling of the ground field.
pub fn from_lambdas<F: Field>(f: &F, lambdas: &[F::Elem]) -> Result<CompositionAlgebra<F::Elem>> {
    if lambdas.len() > 3 {
        return Err(Error::NonAssociativeBase);
    }
    let mut c = ground(f);
    for l in lambdas {
        c = cayley_dickson(f, &c, l)?;
    }
    Ok(c)
}

/// The split octonions as vector matrices `[[a, x], [y, b]]` with basis
/// order (a, x1, x2, x3, y1, y2, y3, b), product
/// `(a a' + x.y', a x' + b' x - y × y'; a' y + b y' + x × x', b b' + y.x')`
/// and norm `a b - x.y`.
pub fn zorn<F: Field>(f: &F) -> CompositionAlgebra<F::Elem> {
    let unpack = |v: &[F::Elem]| -> (F::Elem, [F::Elem; 3], [F::Elem; 3], F::Elem) {
        (
            v[0].clone(),
            [v[1].clone(), v[2].clone(), v[3].clone()],
            [v[4].clone(), v[5].clone(), v[6].clone()],
            v[7].clone(),
        )
    };
    let dot = |p: &[F::Elem; 3], q: &[F::Elem; 3]| f.add(&f.add(&f.mul(&p[0], &q[0]), &f.mul(&p[1], &q[1])), &f.mul(&p[2], &q[2]));
    let crossv = |p: &[F::Elem; 3], q: &[F::Elem; 3]| -> [F::Elem; 3] {
        [
            f.sub(&f.mul(&p[1], &q[2]), &f.mul(&p[2], &q[1])),
            f.sub(&f.mul(&p[2], &q[0]), &f.mul(&p[0], &q[2])),
            f.sub(&f.mul(&p[0], &q[1]), &f.mul(&p[1], &q[0])),
        ]
    };
    let product = |u: &[F::Elem], v: &[F::Elem]| -> Vec<F::Elem> {
        let (a, x, y, b) = unpack(u);
        let (a2, x2, y2, b2) = unpack(v);
        let yy = crossv(&y, &y2);
        let xx = crossv(&x, &x2);
        let mut out = vec![f.add(&f.mul(&a, &a2), &dot(&x, &y2))];
        for k in 0..3 {
            out.push(f.sub(&f.add(&f.mul(&a, &x2[k]), &f.mul(&b2, &x[k])), &yy[k]));
        }
        for k in 0..3 {
            out.push(f.add(&f.add(&f.mul(&a2, &y[k]), &f.mul(&b, &y2[k])), &xx[k]));
        }
        out.push(f.add(&f.mul(&b, &b2), &dot(&y, &x2)));
        out
    };
    let mut table = Vec::with_capacity(512);
    for i in 0..8 {
        for j in 0..8 {
            table.extend(product(&basis(f, 8, i), &basis(f, 8, j)));
        }
    }
    let h = f.inv(&f.from_i64(2)).unwrap();
    let mh = f.neg(&h);
    let norm_gram = Mat::from_fn(8, 8, |i, j| match (i, j) {
        (0, 7) | (7, 0) => h.clone(),
        (1..=3, 4..=6) if j == i + 3 => mh.clone(),
        (4..=6, 1..=3) if i == j + 3 => mh.clone(),
        _ => f.zero(),
    });
    let mut unit = vec![f.zero(); 8];
    unit[0] = f.one();
    unit[7] = f.one();
    CompositionAlgebra { dim: 8, table, norm_gram, unit, construction: Construction::Zorn }
}

pub fn norm_form<E: Clone>(c: &CompositionAlgebra<E>) -> QuadraticForm<E> {
    QuadraticForm { gram: c.norm_gram.clone() }
}

/// An algebra of dimension at least 2 is split exactly when its norm is
/// isotropic.
pub fn is_split<F: Field>(f: &F, c: &CompositionAlgebra<F::Elem>) -> Result<bool> {
    is_isotropic(f, &norm_form(c))
}

/// Norm form `<1, -d> ⊥ (x -> h(x, x))` of the octonion algebra attached to
/// a rank-3 hermitian form over `k(sqrt d)` with trivial discriminant. This
/// determines the octonion algebra up to isomorphism.
pub fn octonion_norm_from_hermitian<F: Field>(f: &F, h: &HermitianForm<F::Elem>) -> Result<QuadraticForm<F::Elem>> {
    if h.dim() != 3 {
        return Err(Error::DimensionMismatch(format!("hermitian form of rank {}, expected 3", h.dim())));
    }
    if !hermitian_discriminant(f, h)?.trivial {
        return Err(Error::NontrivialDiscriminant);
    }
    let base = QuadraticForm::diagonal(f, &[f.one(), f.neg(&h.d)]);
    Ok(base.direct_sum(f, &hermitian_trace_form(f, h)))
}

/// Basis of the orthogonal complement of 1 under `b_N`.
pub fn traceless_subspace<F: Field>(f: &F, c: &CompositionAlgebra<F::Elem>) -> Vec<Vec<F::Elem>> {
    let g1 = linalg::mul_vec(f, &c.norm_gram, &c.unit);
    let row = Mat { rows: 1, cols: c.dim, data: g1 };
    linalg::kernel(f, &row)
}

/// Orbit datum of a nonzero trace-zero element under Aut(C) (the norm
/// value) or under Aut(C) × GL1 (its square class, or the null cone).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum TracelessClass<E> {
    Value(E),
    Null,
    Class(SquareClass),
}

pub fn traceless_classify<F: Field>(
    f: &F,
    c: &CompositionAlgebra<F::Elem>,
    v: &[F::Elem],
    with_scaling: bool,
) -> Result<TracelessClass<F::Elem>> {
    if v.len() != c.dim {
        return Err(Error::DimensionMismatch(format!("vector of length {} in dimension {}", v.len(), c.dim)));
    }
    if v.iter().all(|e| f.is_zero(e)) {
        return Err(Error::ZeroVector);
    }
    if !f.is_zero(&polar(f, c, v, &c.unit)) {
        return Err(Error::NotTraceless);
    }
    let n = norm(f, c, v);
    Ok(if !with_scaling {
        TracelessClass::Value(n)
    } else if f.is_zero(&n) {
        TracelessClass::Null
    } else {
        TracelessClass::Class(f.square_class(&n)?)
    })
}
