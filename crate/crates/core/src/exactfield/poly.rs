use super::Ring;

/// The ring R[t]/(t^(n+1)) of polynomials truncated above degree `n`.
/// Elements are coefficient vectors of length `n + 1`.
#[derive(Clone, Debug)]
pub struct TruncPoly<R: Ring> {
    pub base: R,
    pub degree: usize,
}

impl<R: Ring> TruncPoly<R> {
    pub fn new(base: R, degree: usize) -> Self {
        TruncPoly { base, degree }
    }

    pub fn constant(&self, c: R::Elem) -> Vec<R::Elem> {
        let mut v = vec![self.base.zero(); self.degree + 1];
        v[0] = c;
        v
    }

    /// `a + b t`.
    pub fn linear(&self, a: R::Elem, b: R::Elem) -> Vec<R::Elem> {
        let mut v = self.constant(a);
        if self.degree >= 1 {
            v[1] = b;
        }
        v
    }
}

impl<R: Ring> Ring for TruncPoly<R> {
    type Elem = Vec<R::Elem>;

    fn zero(&self) -> Self::Elem {
        vec![self.base.zero(); self.degree + 1]
    }
    fn one(&self) -> Self::Elem {
        self.constant(self.base.one())
    }
    fn from_i64(&self, n: i64) -> Self::Elem {
        self.constant(self.base.from_i64(n))
    }
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        a.iter().zip(b).map(|(x, y)| self.base.add(x, y)).collect()
    }
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        a.iter().zip(b).map(|(x, y)| self.base.sub(x, y)).collect()
    }
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        let mut out = self.zero();
        for (i, x) in a.iter().enumerate() {
            if self.base.is_zero(x) {
                continue;
            }
            for (j, y) in b.iter().enumerate().take(self.degree + 1 - i) {
                out[i + j] = self.base.add(&out[i + j], &self.base.mul(x, y));
            }
        }
        out
    }
    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        a.iter().map(|x| self.base.neg(x)).collect()
    }
    fn is_zero(&self, a: &Self::Elem) -> bool {
        a.iter().all(|x| self.base.is_zero(x))
    }
}
