//! Dense matrices over a ring, with the elimination routines needed by the
//! rest of the crate.

use crate::exactfield::{Field, Ring};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Mat<E> {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<E>,
}

impl<E: Clone> Mat<E> {
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> E) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Mat { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<E>>) -> Option<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        if rows.iter().any(|x| x.len() != c) {
            return None;
        }
        Some(Mat { rows: r, cols: c, data: rows.into_iter().flatten().collect() })
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> &E {
        &self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: E) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[E] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<E>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        Mat::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_symmetric(&self) -> bool
    where
        E: PartialEq,
    {
        self.is_square() && (0..self.rows).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    pub fn swap_cols(&mut self, a: usize, b: usize) {
        if a != b {
            for i in 0..self.rows {
                self.data.swap(i * self.cols + a, i * self.cols + b);
            }
        }
    }
}

pub fn identity<R: Ring>(r: &R, n: usize) -> Mat<R::Elem> {
    Mat::from_fn(n, n, |i, j| if i == j { r.one() } else { r.zero() })
}

pub fn zeros<R: Ring>(r: &R, rows: usize, cols: usize) -> Mat<R::Elem> {
    Mat::from_fn(rows, cols, |_, _| r.zero())
}

pub fn diag<R: Ring>(r: &R, d: &[R::Elem]) -> Mat<R::Elem> {
    Mat::from_fn(d.len(), d.len(), |i, j| if i == j { d[i].clone() } else { r.zero() })
}

pub fn mul<R: Ring>(r: &R, a: &Mat<R::Elem>, b: &Mat<R::Elem>) -> Mat<R::Elem> {
    assert_eq!(a.cols, b.rows, "matrix shapes do not compose");
    let mut out = zeros(r, a.rows, b.cols);
    for i in 0..a.rows {
        for k in 0..a.cols {
            let aik = a.get(i, k);
            if r.is_zero(aik) {
                continue;
            }
            for j in 0..b.cols {
                let v = r.add(out.get(i, j), &r.mul(aik, b.get(k, j)));
                out.set(i, j, v);
            }
        }
    }
    out
}

pub fn mul_vec<R: Ring>(r: &R, a: &Mat<R::Elem>, v: &[R::Elem]) -> Vec<R::Elem> {
    assert_eq!(a.cols, v.len());
    (0..a.rows)
        .map(|i| {
            let mut s = r.zero();
            for (x, y) in a.row(i).iter().zip(v) {
                if !r.is_zero(x) && !r.is_zero(y) {
                    s = r.add(&s, &r.mul(x, y));
                }
            }
            s
        })
        .collect()
}

pub fn add<R: Ring>(r: &R, a: &Mat<R::Elem>, b: &Mat<R::Elem>) -> Mat<R::Elem> {
    Mat::from_fn(a.rows, a.cols, |i, j| r.add(a.get(i, j), b.get(i, j)))
}

pub fn scale<R: Ring>(r: &R, c: &R::Elem, a: &Mat<R::Elem>) -> Mat<R::Elem> {
    Mat::from_fn(a.rows, a.cols, |i, j| r.mul(c, a.get(i, j)))
}

/// `P M P^t`.
pub fn congruence<R: Ring>(r: &R, p: &Mat<R::Elem>, m: &Mat<R::Elem>) -> Mat<R::Elem> {
    mul(r, &mul(r, p, m), &p.transpose())
}

/// Determinant by Gaussian elimination over a field.
pub fn det<F: Field>(f: &F, a: &Mat<F::Elem>) -> F::Elem {
    assert!(a.is_square());
    let n = a.rows;
    let mut m = a.clone();
    let mut d = f.one();
    for c in 0..n {
        let Some(piv) = (c..n).find(|&i| !f.is_zero(m.get(i, c))) else {
            return f.zero();
        };
        if piv != c {
            m.swap_rows(piv, c);
            d = f.neg(&d);
        }
        let pv = m.get(c, c).clone();
        d = f.mul(&d, &pv);
        let pinv = f.inv(&pv).unwrap();
        for i in c + 1..n {
            if f.is_zero(m.get(i, c)) {
                continue;
            }
            let factor = f.mul(m.get(i, c), &pinv);
            for j in c..n {
                let v = f.sub(m.get(i, j), &f.mul(&factor, m.get(c, j)));
                m.set(i, j, v);
            }
        }
    }
    d
}

/// Determinant by cofactor expansion, valid over any commutative ring.
/// Intended for small matrices.
pub fn det_ring<R: Ring>(r: &R, a: &Mat<R::Elem>) -> R::Elem {
    let n = a.rows;
    match n {
        0 => r.one(),
        1 => a.get(0, 0).clone(),
        2 => r.sub(&r.mul(a.get(0, 0), a.get(1, 1)), &r.mul(a.get(0, 1), a.get(1, 0))),
        _ => {
            let mut s = r.zero();
            for j in 0..n {
                if r.is_zero(a.get(0, j)) {
                    continue;
                }
                let minor = Mat::from_fn(n - 1, n - 1, |i, k| {
                    a.get(i + 1, if k < j { k } else { k + 1 }).clone()
                });
                let t = r.mul(a.get(0, j), &det_ring(r, &minor));
                s = if j % 2 == 0 { r.add(&s, &t) } else { r.sub(&s, &t) };
            }
            s
        }
    }
}

/// Row-reduced echelon form; returns the pivot columns.
pub fn rref<F: Field>(f: &F, m: &mut Mat<F::Elem>) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut row = 0;
    for c in 0..m.cols {
        if row == m.rows {
            break;
        }
        let Some(piv) = (row..m.rows).find(|&i| !f.is_zero(m.get(i, c))) else {
            continue;
        };
        m.swap_rows(piv, row);
        let pinv = f.inv(m.get(row, c)).unwrap();
        for j in 0..m.cols {
            let v = f.mul(m.get(row, j), &pinv);
            m.set(row, j, v);
        }
        for i in 0..m.rows {
            if i == row || f.is_zero(m.get(i, c)) {
                continue;
            }
            let factor = m.get(i, c).clone();
            for j in 0..m.cols {
                let v = f.sub(m.get(i, j), &f.mul(&factor, m.get(row, j)));
                m.set(i, j, v);
            }
        }
        pivots.push(c);
        row += 1;
    }
    pivots
}

pub fn rank<F: Field>(f: &F, a: &Mat<F::Elem>) -> usize {
    let mut m = a.clone();
    rref(f, &mut m).len()
}

pub fn inverse<F: Field>(f: &F, a: &Mat<F::Elem>) -> Option<Mat<F::Elem>> {
    if !a.is_square() {
        return None;
    }
    let n = a.rows;
    let mut aug = Mat::from_fn(n, 2 * n, |i, j| {
        if j < n {
            a.get(i, j).clone()
        } else if j - n == i {
            f.one()
        } else {
            f.zero()
        }
    });
    let piv = rref(f, &mut aug);
    if piv.len() < n || piv[n - 1] != n - 1 {
        return None;
    }
    Some(Mat::from_fn(n, n, |i, j| aug.get(i, j + n).clone()))
}

/// Basis of the right kernel `{v : A v = 0}`.
pub fn kernel<F: Field>(f: &F, a: &Mat<F::Elem>) -> Vec<Vec<F::Elem>> {
    let mut m = a.clone();
    let pivots = rref(f, &mut m);
    let free: Vec<usize> = (0..m.cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&fc| {
            let mut v = vec![f.zero(); m.cols];
            v[fc] = f.one();
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = f.neg(m.get(r, fc));
            }
            v
        })
        .collect()
}
