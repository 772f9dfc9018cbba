//! Cubic-Jordan primitives on symmetric 3x3 matrices and the quartic
//! invariant J on X, with its gradient and the degree-2 covariant.
//!
//! The polynomial routines are generic over [`Ring`], so the same code
//! evaluates J on field elements and on truncated polynomials. Expanding
//! `J(x + t y)` formally gives the t^1 and t^2 coefficients without any
//! division by factorials, which keeps characteristic 3 usable.

use crate::error::{Error, Result};
use crate::exactfield::{Field, Ring, TruncPoly};
use crate::quadforms::QuadraticForm;
use crate::wedgerep::{from_tuple, XTuple, M3};
use crate::linalg::Mat;

pub fn m3_add<R: Ring>(r: &R, a: &M3<R::Elem>, b: &M3<R::Elem>) -> M3<R::Elem> {
    std::array::from_fn(|i| std::array::from_fn(|j| r.add(&a[i][j], &b[i][j])))
}

pub fn m3_sub<R: Ring>(r: &R, a: &M3<R::Elem>, b: &M3<R::Elem>) -> M3<R::Elem> {
    std::array::from_fn(|i| std::array::from_fn(|j| r.sub(&a[i][j], &b[i][j])))
}

pub fn m3_scale<R: Ring>(r: &R, c: &R::Elem, a: &M3<R::Elem>) -> M3<R::Elem> {
    std::array::from_fn(|i| std::array::from_fn(|j| r.mul(c, &a[i][j])))
}

pub fn m3_mul<R: Ring>(r: &R, a: &M3<R::Elem>, b: &M3<R::Elem>) -> M3<R::Elem> {
    std::array::from_fn(|i| {
        std::array::from_fn(|j| {
            let t = r.add(&r.mul(&a[i][0], &b[0][j]), &r.mul(&a[i][1], &b[1][j]));
            r.add(&t, &r.mul(&a[i][2], &b[2][j]))
        })
    })
}

pub fn m3_diag<R: Ring>(r: &R, d: [R::Elem; 3]) -> M3<R::Elem> {
    let [a, b, c] = d;
    [[a, r.zero(), r.zero()], [r.zero(), b, r.zero()], [r.zero(), r.zero(), c]]
}

pub fn m3_zero<R: Ring>(r: &R) -> M3<R::Elem> {
    std::array::from_fn(|_| std::array::from_fn(|_| r.zero()))
}

pub fn m3_identity<R: Ring>(r: &R) -> M3<R::Elem> {
    m3_diag(r, [r.one(), r.one(), r.one()])
}

/// Adjugate: the transposed cofactor matrix, so `M M♯ = det(M) I`.
pub fn adjoint<R: Ring>(r: &R, m: &M3<R::Elem>) -> M3<R::Elem> {
    std::array::from_fn(|i| {
        std::array::from_fn(|j| {
            // cofactor of (j, i)
            let rows: Vec<usize> = (0..3).filter(|&k| k != j).collect();
            let cols: Vec<usize> = (0..3).filter(|&k| k != i).collect();
            let d = r.sub(
                &r.mul(&m[rows[0]][cols[0]], &m[rows[1]][cols[1]]),
                &r.mul(&m[rows[0]][cols[1]], &m[rows[1]][cols[0]]),
            );
            if (i + j) % 2 == 0 {
                d
            } else {
                r.neg(&d)
            }
        })
    })
}

/// Polarized adjugate `(a + b)♯ - a♯ - b♯`.
pub fn cross<R: Ring>(r: &R, a: &M3<R::Elem>, b: &M3<R::Elem>) -> M3<R::Elem> {
    let s = adjoint(r, &m3_add(r, a, b));
    m3_sub(r, &m3_sub(r, &s, &adjoint(r, a)), &adjoint(r, b))
}

/// `trace(a b)`.
pub fn trace_pair<R: Ring>(r: &R, a: &M3<R::Elem>, b: &M3<R::Elem>) -> R::Elem {
    let mut s = r.zero();
    for i in 0..3 {
        for j in 0..3 {
            s = r.add(&s, &r.mul(&a[i][j], &b[j][i]));
        }
    }
    s
}

/// Determinant.
pub fn norm3<R: Ring>(r: &R, m: &M3<R::Elem>) -> R::Elem {
    let adj = adjoint(r, m);
    let mut s = r.zero();
    for k in 0..3 {
        s = r.add(&s, &r.mul(&m[0][k], &adj[k][0]));
    }
    s
}

/// `J = x0 N(B) + y0 N(A) + T(A♯, B♯) - (1/4)(x0 y0 - T(A, B))^2`, with the
/// constant 1/4 supplied since a general ring has no division.
pub fn j_in<R: Ring>(r: &R, quarter: &R::Elem, x: &XTuple<R::Elem>) -> R::Elem {
    let s = r.sub(&r.mul(&x.x0, &x.y0), &trace_pair(r, &x.a, &x.b));
    let t1 = r.mul(&x.x0, &norm3(r, &x.b));
    let t2 = r.mul(&x.y0, &norm3(r, &x.a));
    let t3 = trace_pair(r, &adjoint(r, &x.a), &adjoint(r, &x.b));
    let t4 = r.mul(quarter, &r.square(&s));
    r.sub(&r.add(&r.add(&t1, &t2), &t3), &t4)
}

fn quarter<F: Field>(f: &F) -> F::Elem {
    f.inv(&f.from_i64(4)).expect("characteristic is not 2")
}

fn half<F: Field>(f: &F) -> F::Elem {
    f.inv(&f.from_i64(2)).expect("characteristic is not 2")
}

/// The quartic invariant.
pub fn j<F: Field>(f: &F, x: &XTuple<F::Elem>) -> F::Elem {
    j_in(f, &quarter(f), x)
}

fn lift<F: Field>(p: &TruncPoly<F>, x: &XTuple<F::Elem>, y: &XTuple<F::Elem>) -> XTuple<Vec<F::Elem>> {
    let xs = x.coords();
    let ys = y.coords();
    let v: Vec<Vec<F::Elem>> = xs.into_iter().zip(ys).map(|(a, b)| p.linear(a, b)).collect();
    XTuple::from_coords(&v)
}

/// Coefficients of `J(x + t y)` in t, degrees 0 through 4.
pub fn j_poly<F: Field>(f: &F, x: &XTuple<F::Elem>, y: &XTuple<F::Elem>) -> Vec<F::Elem> {
    j_poly_truncated(f, x, y, 4)
}

fn j_poly_truncated<F: Field>(f: &F, x: &XTuple<F::Elem>, y: &XTuple<F::Elem>, degree: usize) -> Vec<F::Elem> {
    let p = TruncPoly::new(f.clone(), degree);
    let q = p.constant(quarter(f));
    j_in(&p, &q, &lift(&p, x, y))
}

/// A gradient, stored in tuple shape and paired with directions by
/// [`pairing`].
pub type GradientVector<E> = XTuple<E>;

/// `g.x0 y.x0 + g.y0 y.y0 + T(g.A, y.A) + T(g.B, y.B)`.
pub fn pairing<R: Ring>(r: &R, g: &GradientVector<R::Elem>, y: &XTuple<R::Elem>) -> R::Elem {
    let s = r.add(&r.mul(&g.x0, &y.x0), &r.mul(&g.y0, &y.y0));
    r.add(&s, &r.add(&trace_pair(r, &g.a, &y.a), &trace_pair(r, &g.b, &y.b)))
}

/// Closed-form gradient over any ring, given the constant 1/2.
pub fn grad_in<R: Ring>(r: &R, half: &R::Elem, x: &XTuple<R::Elem>) -> GradientVector<R::Elem> {
    let s = r.sub(&r.mul(&x.x0, &x.y0), &trace_pair(r, &x.a, &x.b));
    let hs = r.mul(half, &s);
    let (adj_a, adj_b) = (adjoint(r, &x.a), adjoint(r, &x.b));
    XTuple {
        x0: r.sub(&norm3(r, &x.b), &r.mul(&hs, &x.y0)),
        y0: r.sub(&norm3(r, &x.a), &r.mul(&hs, &x.x0)),
        a: m3_add(r, &m3_add(r, &m3_scale(r, &x.y0, &adj_a), &cross(r, &x.a, &adj_b)), &m3_scale(r, &hs, &x.b)),
        b: m3_add(r, &m3_add(r, &m3_scale(r, &x.x0, &adj_b), &cross(r, &x.b, &adj_a)), &m3_scale(r, &hs, &x.a)),
    }
}

/// Gradient with `pairing(grad_j(x), y)` equal to the t^1 coefficient of
/// `J(x + t y)`.
pub fn grad_j<F: Field>(f: &F, x: &XTuple<F::Elem>) -> GradientVector<F::Elem> {
    grad_in(f, &half(f), x)
}

/// The t^1 coefficient of `J(x + t y)` by formal expansion.
pub fn directional_derivative<F: Field>(f: &F, x: &XTuple<F::Elem>, y: &XTuple<F::Elem>) -> F::Elem {
    j_poly_truncated(f, x, y, 1)[1].clone()
}

/// Unit directions matching [`XTuple::coords`]; off-diagonal directions
/// have both symmetric entries set.
pub fn unit_directions<F: Field>(f: &F) -> Vec<XTuple<F::Elem>> {
    (0..14)
        .map(|k| {
            let v: Vec<F::Elem> = (0..14).map(|i| if i == k { f.one() } else { f.zero() }).collect();
            XTuple::from_coords(&v)
        })
        .collect()
}

/// The degree-2 covariant: the quadratic form `y -> [t^2] J(x + t y)` on
/// the 14 tuple coordinates.
pub fn q_cov<F: Field>(f: &F, x: &XTuple<F::Elem>) -> QuadraticForm<F::Elem> {
    let dirs = unit_directions(f);
    let c2 = |y: &XTuple<F::Elem>| j_poly_truncated(f, x, y, 2)[2].clone();
    let diag: Vec<F::Elem> = dirs.iter().map(&c2).collect();
    let h = half(f);
    let mut g = Mat::from_fn(14, 14, |i, j| if i == j { diag[i].clone() } else { f.zero() });
    for i in 0..14 {
        for j in i + 1..14 {
            let both = XTuple::from_coords(
                &dirs[i].coords().iter().zip(dirs[j].coords()).map(|(a, b)| f.add(a, &b)).collect::<Vec<_>>(),
            );
            let v = f.mul(&h, &f.sub(&f.sub(&c2(&both), &diag[i]), &diag[j]));
            g.set(i, j, v.clone());
            g.set(j, i, v);
        }
    }
    QuadraticForm { gram: g }
}

/// Same form as [`q_cov`], from the derivative of the closed-form gradient:
/// `G(u, v) = (1/2) pairing(D grad(x)[u], v)`. Used where speed matters.
pub fn q_cov_fast<F: Field>(f: &F, x: &XTuple<F::Elem>) -> QuadraticForm<F::Elem> {
    let p = TruncPoly::new(f.clone(), 1);
    let h = half(f);
    let ph = p.constant(h.clone());
    let dirs = unit_directions(f);
    let mut g = Mat::from_fn(14, 14, |_, _| f.zero());
    for (i, u) in dirs.iter().enumerate() {
        let d = grad_in(&p, &ph, &lift(&p, x, u)).map(|c| c[1].clone());
        for (j, v) in dirs.iter().enumerate().skip(i) {
            let e = f.mul(&h, &pairing(f, &d, v));
            g.set(i, j, e.clone());
            g.set(j, i, e);
        }
    }
    QuadraticForm { gram: g }
}

/// J on the slice spanned by e123, e456, e156, e426, e453, evaluated as
/// `-(1/4)(<x, y>^2 - 4 Pf(x) Pf(y))` for `e1 ∧ x + e4 ∧ y`.
pub fn j1_check<F: Field>(f: &F, t: &XTuple<F::Elem>) -> Result<F::Elem> {
    let on_slice = (0..3).all(|i| (0..3).all(|k| f.is_zero(&t.a[i][k]) && (i == k || f.is_zero(&t.b[i][k]))));
    if !on_slice {
        return Err(Error::OutsideSlice);
    }
    let w = from_tuple(f, t);
    // 2-forms on span(e2, e3, e5, e6), read off from e1∧· and e4∧· terms.
    let basis = [1usize, 2, 4, 5];
    let form = |lead: usize| -> [[F::Elem; 4]; 4] {
        std::array::from_fn(|a| std::array::from_fn(|b| w.get(f, [lead, basis[a], basis[b]])))
    };
    let pf = |m: &[[F::Elem; 4]; 4]| -> F::Elem {
        let t1 = f.mul(&m[0][1], &m[2][3]);
        let t2 = f.mul(&m[0][2], &m[1][3]);
        let t3 = f.mul(&m[0][3], &m[1][2]);
        f.add(&f.sub(&t1, &t2), &t3)
    };
    let (xf, yf) = (form(0), form(3));
    let sum: [[F::Elem; 4]; 4] = std::array::from_fn(|a| std::array::from_fn(|b| f.add(&xf[a][b], &yf[a][b])));
    let (px, py) = (pf(&xf), pf(&yf));
    let polar = f.sub(&f.sub(&pf(&sum), &px), &py);
    let j1 = f.sub(&f.square(&polar), &f.mul(&f.from_i64(4), &f.mul(&px, &py)));
    Ok(f.neg(&f.mul(&quarter(f), &j1)))
}
