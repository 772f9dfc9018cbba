use super::QuadraticForm;
use crate::error::{Error, Result};
use crate::exactfield::Field;
use crate::linalg::Mat;

/// A hermitian form over K = k(sqrt d), `h(x, y) = sum conj(x_a) H_ab y_b`.
/// Entries of K are pairs `(u, v)` standing for `u + v sqrt d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HermitianForm<E> {
    pub d: E,
    pub gram: Mat<(E, E)>,
}

/// Determinant of a nondegenerate hermitian form, and whether it is a norm
/// from K (the class is trivial exactly then).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HermitianDiscriminant<E> {
    pub det: E,
    pub trivial: bool,
}

struct Ext<'a, F: Field> {
    f: &'a F,
    d: F::Elem,
}

impl<F: Field> Ext<'_, F> {
    fn add(&self, a: &(F::Elem, F::Elem), b: &(F::Elem, F::Elem)) -> (F::Elem, F::Elem) {
        (self.f.add(&a.0, &b.0), self.f.add(&a.1, &b.1))
    }
    fn mul(&self, a: &(F::Elem, F::Elem), b: &(F::Elem, F::Elem)) -> (F::Elem, F::Elem) {
        let f = self.f;
        (
            f.add(&f.mul(&a.0, &b.0), &f.mul(&self.d, &f.mul(&a.1, &b.1))),
            f.add(&f.mul(&a.0, &b.1), &f.mul(&a.1, &b.0)),
        )
    }
    fn conj(&self, a: &(F::Elem, F::Elem)) -> (F::Elem, F::Elem) {
        (a.0.clone(), self.f.neg(&a.1))
    }
    fn scale(&self, c: &F::Elem, a: &(F::Elem, F::Elem)) -> (F::Elem, F::Elem) {
        (self.f.mul(c, &a.0), self.f.mul(c, &a.1))
    }
    fn is_zero(&self, a: &(F::Elem, F::Elem)) -> bool {
        self.f.is_zero(&a.0) && self.f.is_zero(&a.1)
    }
}

impl<E: Clone + PartialEq> HermitianForm<E> {
    pub fn new<F: Field<Elem = E>>(f: &F, d: E, gram: Mat<(E, E)>) -> Result<Self> {
        if !gram.is_square() {
            return Err(Error::DimensionMismatch("hermitian Gram matrix is not square".into()));
        }
        if f.is_zero(&d) {
            return Err(Error::ZeroInput);
        }
        let k = Ext { f, d: d.clone() };
        for i in 0..gram.rows {
            for j in 0..gram.rows {
                if *gram.get(j, i) != k.conj(gram.get(i, j)) {
                    return Err(Error::Parse("matrix is not hermitian".into()));
                }
            }
        }
        Ok(HermitianForm { d, gram })
    }

    pub fn diagonal<F: Field<Elem = E>>(f: &F, d: E, entries: &[E]) -> Self {
        let n = entries.len();
        let gram = Mat::from_fn(n, n, |i, j| {
            if i == j {
                (entries[i].clone(), f.zero())
            } else {
                (f.zero(), f.zero())
            }
        });
        HermitianForm { d, gram }
    }

    pub fn dim(&self) -> usize {
        self.gram.rows
    }
}

/// Diagonal entries (in k) of a hermitian form after a change of basis
/// over K; zeros are placed last.
pub fn diagonalize_hermitian<F: Field>(f: &F, h: &HermitianForm<F::Elem>) -> Vec<F::Elem> {
    let k = Ext { f, d: h.d.clone() };
    let n = h.dim();
    let mut m = h.gram.clone();
    // e_dst <- e_dst + c e_src
    let add_multiple = |m: &mut Mat<(F::Elem, F::Elem)>, dst: usize, src: usize, c: &(F::Elem, F::Elem)| {
        let cb = k.conj(c);
        for t in 0..n {
            let v = k.add(m.get(dst, t), &k.mul(&cb, m.get(src, t)));
            m.set(dst, t, v);
        }
        for t in 0..n {
            let v = k.add(m.get(t, dst), &k.mul(c, m.get(t, src)));
            m.set(t, dst, v);
        }
    };
    for i in 0..n {
        if f.is_zero(&m.get(i, i).0) {
            if let Some(j) = (i + 1..n).find(|&j| !f.is_zero(&m.get(j, j).0)) {
                m.swap_rows(i, j);
                m.swap_cols(i, j);
            } else if let Some(j) = (i + 1..n).find(|&j| !k.is_zero(m.get(i, j))) {
                let c = if f.is_zero(&m.get(i, j).0) { (f.zero(), f.one()) } else { (f.one(), f.zero()) };
                add_multiple(&mut m, i, j, &c);
            } else {
                continue;
            }
        }
        let pinv = f.inv(&m.get(i, i).0).unwrap();
        for j in i + 1..n {
            if k.is_zero(m.get(i, j)) {
                continue;
            }
            let lam = k.scale(&f.neg(&pinv), m.get(i, j));
            add_multiple(&mut m, j, i, &lam);
        }
    }
    let mut d: Vec<F::Elem> = (0..n).map(|i| m.get(i, i).0.clone()).filter(|e| !f.is_zero(e)).collect();
    d.resize(n, f.zero());
    d
}

pub fn hermitian_discriminant<F: Field>(
    f: &F,
    h: &HermitianForm<F::Elem>,
) -> Result<HermitianDiscriminant<F::Elem>> {
    let d = diagonalize_hermitian(f, h);
    if d.iter().any(|e| f.is_zero(e)) {
        return Err(Error::DegenerateForm);
    }
    let det = d.iter().fold(f.one(), |a, b| f.mul(&a, b));
    let trivial = f.is_quadratic_norm(&det, &h.d)?;
    Ok(HermitianDiscriminant { det, trivial })
}

/// The k-quadratic form `x -> h(x, x)` on K^n viewed as k^(2n), which for
/// `<c_1, ..., c_n>` is `<c_1, ..., c_n> ⊗ <1, -d>`.
pub fn hermitian_trace_form<F: Field>(f: &F, h: &HermitianForm<F::Elem>) -> QuadraticForm<F::Elem> {
    let d = diagonalize_hermitian(f, h);
    let md = f.neg(&h.d);
    let entries: Vec<F::Elem> = d.iter().flat_map(|c| [c.clone(), f.mul(c, &md)]).collect();
    QuadraticForm::diagonal(f, &entries)
}
