//! The 20-dimensional space ∧³V, the induced action, the contraction map,
//! the subspace X = ker φ, and the (x0, y0, A, B) coordinates on X.
//!
//! Coordinates are stored on sorted triples in lexicographic order. The
//! tuple layout is
//!
//! ```text
//! x0 = -x123,  y0 = -x456,
//! A = [[x423, x143, x124], [x523, x153, x125], [x623, x163, x126]],
//! B = [[x156, x416, x451], [x256, x426, x452], [x356, x436, x453]],
//! ```
//!
//! with coordinates of unsorted triples taken up to the permutation sign.
//! X is exactly the set of vectors whose A and B are symmetric.

use crate::error::{Error, Result};
use crate::exactfield::{Field, Ring};
use crate::linalg::{self, Mat};

/// Sorted index triples (0-based), lexicographic.
pub const TRIPLES: [[usize; 3]; 20] = {
    let mut out = [[0usize; 3]; 20];
    let mut n = 0;
    let mut i = 0;
    while i < 6 {
        let mut j = i + 1;
        while j < 6 {
            let mut l = j + 1;
            while l < 6 {
                out[n] = [i, j, l];
                n += 1;
                l += 1;
            }
            j += 1;
        }
        i += 1;
    }
    out
};

/// Position of the sorted version of a triple and the sign of the sorting
/// permutation, or `None` when an index repeats.
pub fn triple_index(t: [usize; 3]) -> Option<(usize, bool)> {
    let [a, b, c] = t;
    if a == b || b == c || a == c || a > 5 || b > 5 || c > 5 {
        return None;
    }
    let mut s = [a, b, c];
    let mut odd = false;
    for i in 0..3 {
        for j in 0..2 - i {
            if s[j] > s[j + 1] {
                s.swap(j, j + 1);
                odd = !odd;
            }
        }
    }
    let idx = TRIPLES.iter().position(|x| *x == s).unwrap();
    Some((idx, odd))
}

pub type M3<E> = [[E; 3]; 3];

/// A vector of ∧³V.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WedgeVector<E> {
    pub coords: Vec<E>,
}

impl<E: Clone> WedgeVector<E> {
    pub fn zero<R: Ring<Elem = E>>(r: &R) -> Self {
        WedgeVector { coords: vec![r.zero(); 20] }
    }

    /// Coordinate of `e_a e_b e_c` (0-based, any order).
    pub fn get<R: Ring<Elem = E>>(&self, r: &R, t: [usize; 3]) -> E {
        match triple_index(t) {
            None => r.zero(),
            Some((i, false)) => self.coords[i].clone(),
            Some((i, true)) => r.neg(&self.coords[i]),
        }
    }

    /// Sets the coefficient of `e_a e_b e_c` (distinct indices, any order).
    pub fn set<R: Ring<Elem = E>>(&mut self, r: &R, t: [usize; 3], v: E) {
        let (i, odd) = triple_index(t).expect("distinct indices");
        self.coords[i] = if odd { r.neg(&v) } else { v };
    }

    /// Adds `c e_a e_b e_c` (distinct indices, any order).
    pub fn add_term<R: Ring<Elem = E>>(&mut self, r: &R, t: [usize; 3], c: &E) {
        let cur = self.get(r, t);
        self.set(r, t, r.add(&cur, c));
    }
}

/// The 20x20 matrix of ∧³g: entry (target, source) is the 3x3 minor of g on
/// those rows and columns.
pub fn induced_action<F: Field>(f: &F, g: &Mat<F::Elem>) -> Result<Mat<F::Elem>> {
    if g.rows != 6 || g.cols != 6 {
        return Err(Error::DimensionMismatch("6x6 matrix expected".into()));
    }
    if f.is_zero(&linalg::det(f, g)) {
        return Err(Error::SingularMatrix);
    }
    Ok(induced_action_unchecked(f, g))
}

fn minor3<R: Ring>(r: &R, g: &Mat<R::Elem>, rows: &[usize; 3], cols: &[usize; 3]) -> R::Elem {
    let m = |i: usize, j: usize| g.get(rows[i], cols[j]);
    let t1 = r.mul(m(0, 0), &r.sub(&r.mul(m(1, 1), m(2, 2)), &r.mul(m(1, 2), m(2, 1))));
    let t2 = r.mul(m(0, 1), &r.sub(&r.mul(m(1, 0), m(2, 2)), &r.mul(m(1, 2), m(2, 0))));
    let t3 = r.mul(m(0, 2), &r.sub(&r.mul(m(1, 0), m(2, 1)), &r.mul(m(1, 1), m(2, 0))));
    r.add(&r.sub(&t1, &t2), &t3)
}

pub(crate) fn induced_action_unchecked<R: Ring>(r: &R, g: &Mat<R::Elem>) -> Mat<R::Elem> {
    Mat::from_fn(20, 20, |t, s| minor3(r, g, &TRIPLES[t], &TRIPLES[s]))
}

/// Coefficient of e1e2e3 in `g w`, without forming the full action.
pub fn act_x123<R: Ring>(r: &R, g: &Mat<R::Elem>, w: &WedgeVector<R::Elem>) -> R::Elem {
    let mut s = r.zero();
    for (k, c) in w.coords.iter().enumerate() {
        if !r.is_zero(c) {
            s = r.add(&s, &r.mul(&minor3(r, g, &TRIPLES[0], &TRIPLES[k]), c));
        }
    }
    s
}

pub fn act<F: Field>(f: &F, g: &Mat<F::Elem>, w: &WedgeVector<F::Elem>) -> Result<WedgeVector<F::Elem>> {
    let rho = induced_action(f, g)?;
    Ok(WedgeVector { coords: linalg::mul_vec(f, &rho, &w.coords) })
}

/// Contraction with the symplectic form:
/// `φ(v1 v2 v3) = Q(v2,v3) v1 - Q(v1,v3) v2 + Q(v1,v2) v3`.
pub fn contraction<F: Field>(f: &F, w: &WedgeVector<F::Elem>) -> Vec<F::Elem> {
    let q = |a: usize, b: usize| -> i64 {
        if b == a + 3 {
            1
        } else if a == b + 3 {
            -1
        } else {
            0
        }
    };
    let mut out = vec![f.zero(); 6];
    for (k, [i, j, l]) in TRIPLES.iter().copied().enumerate() {
        let c = &w.coords[k];
        if f.is_zero(c) {
            continue;
        }
        for (coef, idx) in [(q(j, l), i), (-q(i, l), j), (q(i, j), l)] {
            if coef != 0 {
                out[idx] = f.add(&out[idx], &f.mul(&f.from_i64(coef), c));
            }
        }
    }
    out
}

/// The six conditions `x_{r14} + x_{r25} + x_{r36} = 0`.
pub fn in_x<F: Field>(f: &F, w: &WedgeVector<F::Elem>) -> bool {
    (0..6).all(|r| {
        let s = f.add(&f.add(&w.get(f, [r, 0, 3]), &w.get(f, [r, 1, 4])), &w.get(f, [r, 2, 5]));
        f.is_zero(&s)
    })
}

/// A point of X in tuple coordinates. `x0` and `y0` are values; the
/// displayed tuple `(-x0, -y0, A, B)` lists the coefficients of e1e2e3 and
/// e4e5e6.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct XTuple<E> {
    pub x0: E,
    pub y0: E,
    pub a: M3<E>,
    pub b: M3<E>,
}

/// Triple for `A[r][c]`: (1,2,3) with position c replaced by r+4.
fn a_triple(r: usize, c: usize) -> [usize; 3] {
    let mut t = [0, 1, 2];
    t[c] = r + 3;
    t
}

/// Triple for `B[r][c]`: (4,5,6) with position c replaced by r+1.
fn b_triple(r: usize, c: usize) -> [usize; 3] {
    let mut t = [3, 4, 5];
    t[c] = r;
    t
}

impl<E: Clone> XTuple<E> {
    pub fn zero<R: Ring<Elem = E>>(r: &R) -> Self {
        XTuple {
            x0: r.zero(),
            y0: r.zero(),
            a: std::array::from_fn(|_| std::array::from_fn(|_| r.zero())),
            b: std::array::from_fn(|_| std::array::from_fn(|_| r.zero())),
        }
    }

    pub fn is_zero<R: Ring<Elem = E>>(&self, r: &R) -> bool {
        r.is_zero(&self.x0)
            && r.is_zero(&self.y0)
            && self.a.iter().flatten().all(|e| r.is_zero(e))
            && self.b.iter().flatten().all(|e| r.is_zero(e))
    }

    pub fn scaled<R: Ring<Elem = E>>(&self, r: &R, c: &E) -> Self {
        self.map(|e| r.mul(c, e))
    }

    pub fn map<G: Clone>(&self, mut m: impl FnMut(&E) -> G) -> XTuple<G> {
        XTuple {
            x0: m(&self.x0),
            y0: m(&self.y0),
            a: std::array::from_fn(|i| std::array::from_fn(|j| m(&self.a[i][j]))),
            b: std::array::from_fn(|i| std::array::from_fn(|j| m(&self.b[i][j]))),
        }
    }

    /// The 14 coordinates on X: x0, y0, A11, A22, A33, A12, A13, A23, then
    /// the same six entries of B.
    pub fn coords(&self) -> Vec<E> {
        let mut v = vec![self.x0.clone(), self.y0.clone()];
        for m in [&self.a, &self.b] {
            for (i, j) in SYM_INDEX {
                v.push(m[i][j].clone());
            }
        }
        v
    }

    /// Inverse of [`XTuple::coords`].
    pub fn from_coords(v: &[E]) -> Self {
        assert_eq!(v.len(), 14);
        let sym = |off: usize| -> M3<E> {
            std::array::from_fn(|i| {
                std::array::from_fn(|j| {
                    let k = SYM_INDEX.iter().position(|&(a, b)| (a, b) == (i.min(j), i.max(j))).unwrap();
                    v[off + k].clone()
                })
            })
        };
        XTuple { x0: v[0].clone(), y0: v[1].clone(), a: sym(2), b: sym(8) }
    }

    pub fn is_symmetric(&self) -> bool
    where
        E: PartialEq,
    {
        (0..3).all(|i| (0..3).all(|j| self.a[i][j] == self.a[j][i] && self.b[i][j] == self.b[j][i]))
    }
}

/// Index order of the six independent entries of a symmetric 3x3 matrix.
pub const SYM_INDEX: [(usize, usize); 6] = [(0, 0), (1, 1), (2, 2), (0, 1), (0, 2), (1, 2)];

pub fn from_tuple<R: Ring>(r: &R, t: &XTuple<R::Elem>) -> WedgeVector<R::Elem> {
    let mut w = WedgeVector::zero(r);
    w.set(r, [0, 1, 2], r.neg(&t.x0));
    w.set(r, [3, 4, 5], r.neg(&t.y0));
    for i in 0..3 {
        for j in 0..3 {
            w.set(r, a_triple(i, j), t.a[i][j].clone());
            w.set(r, b_triple(i, j), t.b[i][j].clone());
        }
    }
    w
}

/// Reads the tuple without checking symmetry. Every vector of ∧³V has such
/// a reading; it lies in X exactly when A and B are symmetric.
pub fn to_tuple_unchecked<R: Ring>(r: &R, w: &WedgeVector<R::Elem>) -> XTuple<R::Elem> {
    XTuple {
        x0: r.neg(&w.get(r, [0, 1, 2])),
        y0: r.neg(&w.get(r, [3, 4, 5])),
        a: std::array::from_fn(|i| std::array::from_fn(|j| w.get(r, a_triple(i, j)))),
        b: std::array::from_fn(|i| std::array::from_fn(|j| w.get(r, b_triple(i, j)))),
    }
}

pub fn to_tuple<F: Field>(f: &F, w: &WedgeVector<F::Elem>) -> Result<XTuple<F::Elem>> {
    if !in_x(f, w) {
        return Err(Error::NotInX);
    }
    let t = to_tuple_unchecked(f, w);
    debug_assert!(t.is_symmetric());
    Ok(t)
}

/// Checks that a tuple lies in X.
pub fn check_tuple<E: Clone + PartialEq>(t: &XTuple<E>) -> Result<()> {
    if t.is_symmetric() {
        Ok(())
    } else {
        Err(Error::NotInX)
    }
}

/// `g . x` on tuples, computed through the action on ∧³V.
pub fn act_tuple<F: Field>(f: &F, g: &Mat<F::Elem>, x: &XTuple<F::Elem>) -> Result<XTuple<F::Elem>> {
    check_tuple(x)?;
    to_tuple(f, &act(f, g, &from_tuple(f, x))?)
}
