//! Quadratic forms over exact fields: diagonalization, invariants,
//! isometry and isotropy, Pfister forms, and hermitian forms over a
//! quadratic extension.

mod hermitian;

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::exactfield::{Field, Place, Ring, SquareClass};
use crate::linalg::{identity, Mat};

pub use hermitian::{
    diagonalize_hermitian, hermitian_discriminant, hermitian_trace_form, HermitianDiscriminant, HermitianForm,
};

/// A quadratic form `q(v) = v^t G v` given by its symmetric Gram matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadraticForm<E> {
    pub gram: Mat<E>,
}

impl<E: Clone + PartialEq> QuadraticForm<E> {
    pub fn new(gram: Mat<E>) -> Result<Self> {
        if !gram.is_square() {
            return Err(Error::DimensionMismatch("Gram matrix is not square".into()));
        }
        if !gram.is_symmetric() {
            return Err(Error::Parse("Gram matrix is not symmetric".into()));
        }
        Ok(QuadraticForm { gram })
    }
}

impl<E: Clone> QuadraticForm<E> {
    pub fn dim(&self) -> usize {
        self.gram.rows
    }

    pub fn diagonal<R: Ring<Elem = E>>(r: &R, entries: &[E]) -> Self {
        QuadraticForm { gram: crate::linalg::diag(r, entries) }
    }

    pub fn value<R: Ring<Elem = E>>(&self, r: &R, v: &[E]) -> E {
        self.bilinear(r, v, v)
    }

    /// `u^t G v`.
    pub fn bilinear<R: Ring<Elem = E>>(&self, r: &R, u: &[E], v: &[E]) -> E {
        let gv = crate::linalg::mul_vec(r, &self.gram, v);
        let mut s = r.zero();
        for (a, b) in u.iter().zip(&gv) {
            s = r.add(&s, &r.mul(a, b));
        }
        s
    }

    pub fn scaled<R: Ring<Elem = E>>(&self, r: &R, c: &E) -> Self {
        QuadraticForm { gram: crate::linalg::scale(r, c, &self.gram) }
    }

    pub fn direct_sum<R: Ring<Elem = E>>(&self, r: &R, other: &Self) -> Self {
        let (n, m) = (self.dim(), other.dim());
        QuadraticForm {
            gram: Mat::from_fn(n + m, n + m, |i, j| {
                if i < n && j < n {
                    self.gram.get(i, j).clone()
                } else if i >= n && j >= n {
                    other.gram.get(i - n, j - n).clone()
                } else {
                    r.zero()
                }
            }),
        }
    }

    /// Kronecker product of Gram matrices.
    pub fn tensor<R: Ring<Elem = E>>(&self, r: &R, other: &Self) -> Self {
        let m = other.dim();
        let n = self.dim() * m;
        QuadraticForm {
            gram: Mat::from_fn(n, n, |i, j| {
                r.mul(self.gram.get(i / m, j / m), other.gram.get(i % m, j % m))
            }),
        }
    }
}

/// Symmetric Gaussian elimination: returns the diagonal entries `d` (zeros
/// last) and an invertible `P` with `P G P^t = diag(d)`.
pub fn diagonalize<F: Field>(f: &F, q: &QuadraticForm<F::Elem>) -> (Vec<F::Elem>, Mat<F::Elem>) {
    let n = q.dim();
    let mut m = q.gram.clone();
    let mut p = identity(f, n);
    // Row operations on `p` mirror the congruence applied to `m`.
    let add_multiple = |m: &mut Mat<F::Elem>, p: &mut Mat<F::Elem>, dst: usize, src: usize, c: &F::Elem| {
        for k in 0..n {
            let v = f.add(m.get(dst, k), &f.mul(c, m.get(src, k)));
            m.set(dst, k, v);
            let v = f.add(p.get(dst, k), &f.mul(c, p.get(src, k)));
            p.set(dst, k, v);
        }
        for k in 0..n {
            let v = f.add(m.get(k, dst), &f.mul(c, m.get(k, src)));
            m.set(k, dst, v);
        }
    };
    for i in 0..n {
        if f.is_zero(m.get(i, i)) {
            if let Some(j) = (i + 1..n).find(|&j| !f.is_zero(m.get(j, j))) {
                m.swap_rows(i, j);
                m.swap_cols(i, j);
                p.swap_rows(i, j);
            } else if let Some(j) = (i + 1..n).find(|&j| !f.is_zero(m.get(i, j))) {
                add_multiple(&mut m, &mut p, i, j, &f.one());
            } else {
                continue;
            }
        }
        let pinv = f.inv(m.get(i, i)).unwrap();
        for j in i + 1..n {
            if f.is_zero(m.get(j, i)) {
                continue;
            }
            let c = f.neg(&f.mul(m.get(j, i), &pinv));
            add_multiple(&mut m, &mut p, j, i, &c);
        }
    }
    let mut order: Vec<usize> = (0..n).filter(|&i| !f.is_zero(m.get(i, i))).collect();
    order.extend((0..n).filter(|&i| f.is_zero(m.get(i, i))));
    let d = order.iter().map(|&i| m.get(i, i).clone()).collect();
    let p = Mat::from_fn(n, n, |i, j| p.get(order[i], j).clone());
    (d, p)
}

/// Complete isometry invariants of a quadratic form.
///
/// `det` and `disc` describe the nondegenerate part. Over the rationals,
/// `signature` is (positive, negative) and `hasse_negative` lists the places
/// where the Hasse invariant `prod_{i<j} (a_i, a_j)_v` equals -1.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FormInvariants {
    pub dim: usize,
    pub rank: usize,
    pub det: SquareClass,
    pub disc: SquareClass,
    pub signature: Option<(usize, usize)>,
    pub hasse_negative: Option<Vec<Place>>,
}

impl FormInvariants {
    pub fn hasse(&self, v: &Place) -> Option<i8> {
        self.hasse_negative
            .as_ref()
            .map(|neg| if neg.contains(v) { -1 } else { 1 })
    }
}

fn sign_power<F: Field>(f: &F, r: usize) -> F::Elem {
    if (r * (r.saturating_sub(1)) / 2) % 2 == 1 {
        f.neg(&f.one())
    } else {
        f.one()
    }
}

fn hasse_negative_of(
    q: &crate::exactfield::Rationals,
    entries: &[BigRational],
    extra: &[BigRational],
) -> Result<Vec<Place>> {
    let mut all: Vec<BigRational> = entries.to_vec();
    all.extend_from_slice(extra);
    let places = q.relevant_places(&all)?;
    let mut neg = Vec::new();
    for v in places {
        let mut s = 1i8;
        for i in 0..entries.len() {
            for j in i + 1..entries.len() {
                s *= q.hilbert_symbol(&entries[i], &entries[j], &v)?;
            }
        }
        if s == -1 {
            neg.push(v);
        }
    }
    Ok(neg)
}

/// Invariants from a diagonal list of entries (zeros allowed).
pub fn invariants_of_diagonal<F: Field>(f: &F, entries: &[F::Elem]) -> Result<FormInvariants> {
    let nz: Vec<&F::Elem> = entries.iter().filter(|e| !f.is_zero(e)).collect();
    let rank = nz.len();
    let mut det = f.one();
    for e in &nz {
        det = f.mul(&det, e);
    }
    let det_class = f.square_class(&det)?;
    let disc = f.square_class(&f.mul(&det, &sign_power(f, rank)))?;
    let (signature, hasse_negative) = match f.rationals() {
        Some(q) => {
            let reps: Vec<BigRational> = nz
                .iter()
                .map(|e| f.square_class(e).map(|c| q.integer(c.0)))
                .collect::<Result<_>>()?;
            let pos = reps.iter().filter(|r| r > &&q.integer(BigInt::from(0))).count();
            (Some((pos, rank - pos)), Some(hasse_negative_of(q, &reps, &[])?))
        }
        None => (None, None),
    };
    Ok(FormInvariants { dim: entries.len(), rank, det: det_class, disc, signature, hasse_negative })
}

pub fn invariants<F: Field>(f: &F, q: &QuadraticForm<F::Elem>) -> Result<FormInvariants> {
    let (d, _) = diagonalize(f, q);
    invariants_of_diagonal(f, &d)
}

pub fn is_isometric<F: Field>(f: &F, a: &QuadraticForm<F::Elem>, b: &QuadraticForm<F::Elem>) -> Result<bool> {
    if a.dim() != b.dim() {
        return Err(Error::DimensionMismatch(format!("dimensions {} and {}", a.dim(), b.dim())));
    }
    Ok(invariants(f, a)? == invariants(f, b)?)
}

/// Whether the nondegenerate part with these invariants is isotropic at `v`.
fn locally_isotropic<F: Field>(f: &F, inv: &FormInvariants, v: &Place) -> Result<bool> {
    let n = inv.rank;
    if let Place::Real = v {
        let (p, m) = inv.signature.expect("rational invariants");
        return Ok(p > 0 && m > 0);
    }
    let q = f.rationals().expect("rational invariants");
    let d = q.integer(inv.det.0.clone());
    let eps = inv.hasse(v).unwrap();
    let m1 = q.integer(BigInt::from(-1));
    Ok(match n {
        0 | 1 => false,
        2 => locally_square(q, &(-d.clone()), v)?,
        3 => q.hilbert_symbol(&m1, &(-d), v)? == eps,
        4 => !locally_square(q, &d, v)? || eps == q.hilbert_symbol(&m1, &m1, v)?,
        _ => true,
    })
}

/// Whether a nonzero rational is a square in Q_p.
fn locally_square(q: &crate::exactfield::Rationals, a: &BigRational, v: &Place) -> Result<bool> {
    let Place::Prime(p) = v else {
        return Ok(a > &q.integer(BigInt::from(0)));
    };
    use num_integer::Integer;
    let n = a.numer() * a.denom();
    let (val, u) = crate::exactfield::split_valuation(&n, p);
    if val % 2 == 1 {
        return Ok(false);
    }
    if p == &BigInt::from(2) {
        Ok(u.mod_floor(&BigInt::from(8)) == BigInt::from(1))
    } else {
        Ok(crate::exactfield::legendre(&u, p) == 1)
    }
}

/// Whether the form represents zero nontrivially.
pub fn is_isotropic<F: Field>(f: &F, q: &QuadraticForm<F::Elem>) -> Result<bool> {
    let inv = invariants(f, q)?;
    if inv.rank < inv.dim {
        return Ok(true);
    }
    let n = inv.rank;
    if f.rationals().is_none() {
        return Ok(match n {
            0 | 1 => false,
            2 => inv.disc.is_trivial(),
            _ => true,
        });
    }
    if n == 2 {
        // -det must be a rational square.
        let md = f.neg(&f.class_element(&inv.det));
        return Ok(f.is_square(&md));
    }
    let qq = f.rationals().unwrap();
    let mut places: BTreeSet<Place> = qq.relevant_places(&[qq.integer(inv.det.0.clone())])?;
    places.extend(inv.hasse_negative.clone().unwrap());
    for v in &places {
        if !locally_isotropic(f, &inv, v)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Invariants of `q2` given those of `q = q1 ⊥ q2` and of `q1`.
pub fn cancel<F: Field>(f: &F, total: &FormInvariants, part: &FormInvariants) -> Result<FormInvariants> {
    if part.rank > total.rank || part.dim > total.dim {
        return Err(Error::DimensionMismatch("summand larger than total".into()));
    }
    let rank = total.rank - part.rank;
    let d = f.class_element(&total.det);
    let d1 = f.class_element(&part.det);
    let d2 = f.mul(&d, &d1);
    let det = f.square_class(&d2)?;
    let disc = f.square_class(&f.mul(&f.class_element(&det), &sign_power(f, rank)))?;
    let (signature, hasse_negative) = match f.rationals() {
        Some(q) => {
            let (p, m) = total.signature.unwrap();
            let (p1, m1) = part.signature.unwrap();
            if p1 > p || m1 > m {
                return Err(Error::Internal("signature of summand exceeds total".into()));
            }
            let d1q = q.integer(part.det.0.clone());
            let d2q = q.integer(det.0.clone());
            let mut places = q.relevant_places(&[q.integer(total.det.0.clone()), d1q.clone(), d2q.clone()])?;
            places.extend(total.hasse_negative.clone().unwrap());
            places.extend(part.hasse_negative.clone().unwrap());
            let mut neg = Vec::new();
            for v in places {
                let s = total.hasse(&v).unwrap() * part.hasse(&v).unwrap() * q.hilbert_symbol(&d1q, &d2q, &v)?;
                if s == -1 {
                    neg.push(v);
                }
            }
            (Some((p - p1, m - m1)), Some(neg))
        }
        None => (None, None),
    };
    Ok(FormInvariants { dim: total.dim - part.dim, rank, det, disc, signature, hasse_negative })
}

/// Slots of an n-fold Pfister form `<<a_1, ..., a_n>> = ⊗ <1, -a_i>`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PfisterSpec<E> {
    pub slots: Vec<E>,
}

/// Diagonal Pfister form; entry `k` is the product of `-a_i` over the set
/// bits `i` of `k`.
pub fn pfister<F: Field>(f: &F, spec: &PfisterSpec<F::Elem>) -> QuadraticForm<F::Elem> {
    let n = spec.slots.len();
    let entries: Vec<F::Elem> = (0..1usize << n)
        .map(|k| {
            let mut e = f.one();
            for (i, a) in spec.slots.iter().enumerate() {
                if k >> i & 1 == 1 {
                    e = f.mul(&e, &f.neg(a));
                }
            }
            e
        })
        .collect();
    QuadraticForm::diagonal(f, &entries)
}

/// The Pfister form with its leading `<1>` removed.
pub fn pure_part<F: Field>(f: &F, spec: &PfisterSpec<F::Elem>) -> QuadraticForm<F::Elem> {
    let full = pfister(f, spec);
    let n = full.dim();
    QuadraticForm { gram: Mat::from_fn(n - 1, n - 1, |i, j| full.gram.get(i + 1, j + 1).clone()) }
}

/// For a ternary form of trivial discriminant, slots `(a, b)` with
/// `q ≅ <-a, -b, ab>`, each chosen as a square class representative.
pub fn ternary_to_pfister<F: Field>(f: &F, q: &QuadraticForm<F::Elem>) -> Result<PfisterSpec<F::Elem>> {
    if q.dim() != 3 {
        return Err(Error::DimensionMismatch("ternary form expected".into()));
    }
    let (d, _) = diagonalize(f, q);
    if d.iter().any(|e| f.is_zero(e)) {
        return Err(Error::DegenerateForm);
    }
    let det = f.mul(&f.mul(&d[0], &d[1]), &d[2]);
    if !f.square_class(&det)?.is_trivial() {
        return Err(Error::NontrivialDiscriminant);
    }
    let a = f.class_element(&f.square_class(&f.neg(&d[0]))?);
    let b = f.class_element(&f.square_class(&f.neg(&d[1]))?);
    Ok(PfisterSpec { slots: vec![a, b] })
}
