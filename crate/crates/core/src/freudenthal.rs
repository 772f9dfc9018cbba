//! Reduced Freudenthal algebras `H3(C, Γ)`, their bilinear trace forms, and
//! the maps from dimension 6 and 9 algebras to quaternion classes and
//! semistable orbit data.

use crate::compalg::{conj, mul, norm_form, CompositionAlgebra};
use crate::error::{Error, Result};
use crate::exactfield::Field;
use crate::linalg::Mat;
use crate::orbits::{x3_invariant, GroupMode, OrbitInvariant, QuaternionClass};
use crate::quadforms::{invariants_of_diagonal, QuadraticForm};
use crate::wedgerep::XTuple;

/// Off-diagonal positions in storage order.
pub const PAIRS: [(usize, usize); 3] = [(0, 1), (0, 2), (1, 2)];

/// A Γ-hermitian matrix: scalar diagonal `alpha` and upper entries `x[k]`
/// at `PAIRS[k]`. The lower entries are `x_ji = γ_j^-1 γ_i conj(x_ij)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct H3Element<E> {
    pub alpha: [E; 3],
    pub x: [Vec<E>; 3],
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreudenthalAlgebra<E> {
    pub c: CompositionAlgebra<E>,
    pub gamma: [E; 3],
    gamma_inv: [E; 3],
}

fn check_char<F: Field>(f: &F) -> Result<()> {
    match f.characteristic() {
        p @ (2 | 3) => Err(Error::UnsupportedCharacteristic(p)),
        _ => Ok(()),
    }
}

pub fn h3<F: Field>(f: &F, c: &CompositionAlgebra<F::Elem>, gamma: [F::Elem; 3]) -> Result<FreudenthalAlgebra<F::Elem>> {
    check_char(f)?;
    let inv: Vec<F::Elem> = gamma.iter().map(|g| f.inv(g).ok_or(Error::SingularMatrix)).collect::<Result<_>>()?;
    Ok(FreudenthalAlgebra { c: c.clone(), gamma, gamma_inv: [inv[0].clone(), inv[1].clone(), inv[2].clone()] })
}

impl<E: Clone + PartialEq> FreudenthalAlgebra<E> {
    pub fn dim(&self) -> usize {
        3 * (self.c.dim + 1)
    }
}

fn scal<F: Field>(f: &F, a: &F::Elem, v: &[F::Elem]) -> Vec<F::Elem> {
    v.iter().map(|x| f.mul(a, x)).collect()
}

fn vadd<F: Field>(f: &F, u: &[F::Elem], v: &[F::Elem]) -> Vec<F::Elem> {
    u.iter().zip(v).map(|(a, b)| f.add(a, b)).collect()
}

/// Coefficient of the unit in `z`, assuming `z` lies in `k 1`.
fn scalar_part<F: Field>(f: &F, c: &CompositionAlgebra<F::Elem>, z: &[F::Elem]) -> Result<F::Elem> {
    let k = c.unit.iter().position(|u| !f.is_zero(u)).expect("nonzero unit");
    let s = f.div(&z[k], &c.unit[k]).expect("nonzero unit coordinate");
    if scal(f, &s, &c.unit).as_slice() != z {
        return Err(Error::Internal("diagonal entry outside the ground field".into()));
    }
    Ok(s)
}

impl<E: Clone + PartialEq + std::fmt::Debug> FreudenthalAlgebra<E> {
    fn entry<F: Field<Elem = E>>(&self, f: &F, x: &H3Element<E>, i: usize, j: usize) -> Vec<E> {
        if i == j {
            return scal(f, &x.alpha[i], &self.c.unit);
        }
        let k = PAIRS.iter().position(|&p| p == (i.min(j), i.max(j))).unwrap();
        if i < j {
            x.x[k].clone()
        } else {
            scal(f, &f.mul(&self.gamma_inv[i], &self.gamma[j]), &conj(f, &self.c, &x.x[k]))
        }
    }

    fn matrix<F: Field<Elem = E>>(&self, f: &F, x: &H3Element<E>) -> [[Vec<E>; 3]; 3] {
        std::array::from_fn(|i| std::array::from_fn(|j| self.entry(f, x, i, j)))
    }

    pub fn zero<F: Field<Elem = E>>(&self, f: &F) -> H3Element<E> {
        let z = vec![f.zero(); self.c.dim];
        H3Element { alpha: [f.zero(), f.zero(), f.zero()], x: [z.clone(), z.clone(), z] }
    }

    pub fn unit<F: Field<Elem = E>>(&self, f: &F) -> H3Element<E> {
        let mut u = self.zero(f);
        u.alpha = [f.one(), f.one(), f.one()];
        u
    }

    /// Basis: the three diagonal idempotents, then `e_k` in each off-diagonal
    /// slot in `PAIRS` order.
    pub fn basis<F: Field<Elem = E>>(&self, f: &F) -> Vec<H3Element<E>> {
        let mut out = Vec::with_capacity(self.dim());
        for i in 0..3 {
            let mut e = self.zero(f);
            e.alpha[i] = f.one();
            out.push(e);
        }
        for k in 0..3 {
            for m in 0..self.c.dim {
                let mut e = self.zero(f);
                e.x[k][m] = f.one();
                out.push(e);
            }
        }
        out
    }

    /// `X . Y = (XY + YX) / 2`.
    pub fn jordan<F: Field<Elem = E>>(&self, f: &F, x: &H3Element<E>, y: &H3Element<E>) -> Result<H3Element<E>> {
        let (mx, my) = (self.matrix(f, x), self.matrix(f, y));
        let h = f.inv(&f.from_i64(2)).unwrap();
        let prod = |i: usize, j: usize| -> Vec<E> {
            let mut acc = vec![f.zero(); self.c.dim];
            for k in 0..3 {
                acc = vadd(f, &acc, &mul(f, &self.c, &mx[i][k], &my[k][j]));
                acc = vadd(f, &acc, &mul(f, &self.c, &my[i][k], &mx[k][j]));
            }
            scal(f, &h, &acc)
        };
        let mut out = self.zero(f);
        for i in 0..3 {
            out.alpha[i] = scalar_part(f, &self.c, &prod(i, i))?;
        }
        for (k, &(i, j)) in PAIRS.iter().enumerate() {
            out.x[k] = prod(i, j);
        }
        Ok(out)
    }

    /// Sum of the diagonal scalars.
    pub fn trace<F: Field<Elem = E>>(&self, f: &F, x: &H3Element<E>) -> E {
        f.sum(x.alpha.iter())
    }

    /// Gram matrix of `T(X, Y) = trace(X . Y)` on [`Self::basis`].
    pub fn trace_form<F: Field<Elem = E>>(&self, f: &F) -> Result<QuadraticForm<E>> {
        let b = self.basis(f);
        let n = b.len();
        let mut g = Mat::from_fn(n, n, |_, _| f.zero());
        for i in 0..n {
            for j in i..n {
                let t = self.trace(f, &self.jordan(f, &b[i], &b[j])?);
                g.set(i, j, t.clone());
                g.set(j, i, t);
            }
        }
        Ok(QuadraticForm { gram: g })
    }

    /// `(γ3^-1 γ2, γ1^-1 γ3, γ2^-1 γ1)`.
    pub fn slots<F: Field<Elem = E>>(&self, f: &F) -> [E; 3] {
        slots(f, &self.gamma)
    }

    /// The closed form `<1, 1, 1> ⊥ b_N ⊗ <slots>`.
    pub fn formula_trace_form<F: Field<Elem = E>>(&self, f: &F) -> QuadraticForm<E> {
        let one = QuadraticForm::diagonal(f, &[f.one(), f.one(), f.one()]);
        let n = norm_form(&self.c);
        let b_n = n.scaled(f, &f.from_i64(2));
        one.direct_sum(f, &b_n.tensor(f, &QuadraticForm::diagonal(f, &self.slots(f))))
    }
}

fn slots<F: Field>(f: &F, g: &[F::Elem; 3]) -> [F::Elem; 3] {
    let d = |a: &F::Elem, b: &F::Elem| f.div(a, b).expect("invertible gamma");
    [d(&g[1], &g[2]), d(&g[2], &g[0]), d(&g[0], &g[1])]
}

fn checked_slots<F: Field>(f: &F, gamma: &[F::Elem; 3]) -> Result<[F::Elem; 3]> {
    check_char(f)?;
    if gamma.iter().any(|g| f.is_zero(g)) {
        return Err(Error::SingularMatrix);
    }
    Ok(slots(f, gamma))
}

/// Quaternion class attached to `H3(k, Γ)`: the one whose pure norm form is
/// `<slots>` (a ternary form of determinant 1).
pub fn classify_dim6<F: Field>(f: &F, gamma: &[F::Elem; 3]) -> Result<QuaternionClass<F::Elem>> {
    let s = checked_slots(f, gamma)?;
    QuaternionClass::from_ternary(f, &invariants_of_diagonal(f, &s)?)
}

/// A tuple with `J = i` whose hermitian diagonal is `<s1 i, s2, s3>`,
/// isometric to `<slots>` over `k(sqrt(-i))` since `i` is a norm there.
pub fn dim9_representative<F: Field>(f: &F, i: &F::Elem, gamma: &[F::Elem; 3]) -> Result<XTuple<F::Elem>> {
    if f.is_zero(i) {
        return Err(Error::ZeroInput);
    }
    let s = checked_slots(f, gamma)?;
    let mut t = XTuple::zero(f);
    t.x0 = f.one();
    t.b[0][0] = f.mul(&s[0], i);
    t.b[1][1] = s[1].clone();
    t.b[2][2] = s[2].clone();
    Ok(t)
}

/// Orbit datum in `J^-1(i)` matching `H3(k(sqrt(-i)), Γ)`.
pub fn classify_dim9<F: Field>(
    f: &F,
    i: &F::Elem,
    gamma: &[F::Elem; 3],
    mode: GroupMode,
) -> Result<OrbitInvariant<F::Elem>> {
    let t = dim9_representative(f, i, gamma)?;
    let y = [t.b[0][0].clone(), t.b[1][1].clone(), t.b[2][2].clone()];
    x3_invariant(f, i, &y, mode)
}

/// A Γ with `slots(Γ)` equal to `<y1 / (y1 y2 y3), y2, y3>`, which is
/// hermitian-isometric to `<y1, y2, y3>` whenever `y1 y2 y3` is a norm.
pub fn gamma_from_hermitian<F: Field>(f: &F, y: &[F::Elem; 3]) -> Result<[F::Elem; 3]> {
    let inv3 = f.inv(&y[2]).ok_or(Error::ZeroInput)?;
    if f.is_zero(&y[1]) || f.is_zero(&y[0]) {
        return Err(Error::ZeroInput);
    }
    Ok([f.one(), inv3, y[1].clone()])
}
