//! Symplectic and similitude matrices on V = k^6 with the form
//! M = (0, I; -I, 0), a generator toolbox, and seeded random words.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::exactfield::Field;
use crate::linalg::{self, Mat};

/// One generator of the reduction toolbox.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum GeneratorDescriptor<E> {
    /// `(α, 0; 0, α^{-t})` for invertible α.
    BlockDiag(Mat<E>),
    /// `(I, 0; γ, I)` for symmetric γ.
    GammaMove(Mat<E>),
    /// `(I, β; 0, I)` for symmetric β.
    BetaMove(Mat<E>),
    /// `(0, -I; I, 0)`.
    Swap,
    /// `diag(t, t^{-1})`.
    TorusScale([E; 3]),
    /// `diag(x0^{-1}, 1, 1, x0, 1, 1)`.
    ScaleX0(E),
    /// `diag(a I, I)`, a similitude with factor `a`.
    Dilation(E),
}

/// Which group random words are drawn from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GroupKind {
    Sp,
    GSp,
}

/// A 6x6 matrix with `g M g^t = multiplier * M`, together with the word of
/// generators it was built from (applied first to last).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymplecticElement<E> {
    pub matrix: Mat<E>,
    pub multiplier: E,
    pub word: Vec<GeneratorDescriptor<E>>,
}

/// The standard alternating form matrix.
pub fn omega<F: Field>(f: &F) -> Mat<F::Elem> {
    Mat::from_fn(6, 6, |i, j| {
        if j == i + 3 {
            f.one()
        } else if i == j + 3 {
            f.neg(&f.one())
        } else {
            f.zero()
        }
    })
}

fn block<E: Clone>(g: &Mat<E>, bi: usize, bj: usize) -> Mat<E> {
    Mat::from_fn(3, 3, |i, j| g.get(3 * bi + i, 3 * bj + j).clone())
}

fn from_blocks<E: Clone>(a: &Mat<E>, b: &Mat<E>, c: &Mat<E>, d: &Mat<E>) -> Mat<E> {
    Mat::from_fn(6, 6, |i, j| match (i < 3, j < 3) {
        (true, true) => a.get(i, j).clone(),
        (true, false) => b.get(i, j - 3).clone(),
        (false, true) => c.get(i - 3, j).clone(),
        (false, false) => d.get(i - 3, j - 3).clone(),
    })
}

/// Exact check of `αβ^t = βα^t`, `γδ^t = δγ^t`, `αδ^t - βγ^t = I`.
pub fn is_symplectic<F: Field>(f: &F, g: &Mat<F::Elem>) -> bool {
    if g.rows != 6 || g.cols != 6 {
        return false;
    }
    let (a, b, c, d) = (block(g, 0, 0), block(g, 0, 1), block(g, 1, 0), block(g, 1, 1));
    let abt = linalg::mul(f, &a, &b.transpose());
    let cdt = linalg::mul(f, &c, &d.transpose());
    let adt = linalg::mul(f, &a, &d.transpose());
    let bct = linalg::mul(f, &b, &c.transpose());
    let lhs = Mat::from_fn(3, 3, |i, j| f.sub(adt.get(i, j), bct.get(i, j)));
    abt.is_symmetric() && cdt.is_symmetric() && lhs == linalg::identity(f, 3)
}

/// The factor μ with `g M g^t = μ M`, if `g` is a similitude.
pub fn similitude_factor<F: Field>(f: &F, g: &Mat<F::Elem>) -> Option<F::Elem> {
    if g.rows != 6 || g.cols != 6 {
        return None;
    }
    let m = omega(f);
    let gm = linalg::congruence(f, g, &m);
    let mu = gm.get(0, 3).clone();
    if f.is_zero(&mu) || gm != linalg::scale(f, &mu, &m) {
        return None;
    }
    Some(mu)
}

fn check_sym<F: Field>(m: &Mat<F::Elem>, what: &str) -> Result<()> {
    if m.rows != 3 || m.cols != 3 {
        return Err(Error::InvalidDescriptor(format!("{what} must be 3x3")));
    }
    if !m.is_symmetric() {
        return Err(Error::InvalidDescriptor(format!("{what} must be symmetric")));
    }
    Ok(())
}

/// The matrix and similitude factor of a single generator.
pub fn expand<F: Field>(f: &F, desc: &GeneratorDescriptor<F::Elem>) -> Result<SymplecticElement<F::Elem>> {
    let i3 = linalg::identity(f, 3);
    let z3 = linalg::zeros(f, 3, 3);
    let nonzero = |e: &F::Elem, what: &str| {
        if f.is_zero(e) {
            Err(Error::InvalidDescriptor(format!("{what} must be nonzero")))
        } else {
            Ok(())
        }
    };
    let (matrix, multiplier) = match desc {
        GeneratorDescriptor::BlockDiag(a) => {
            if a.rows != 3 || a.cols != 3 {
                return Err(Error::InvalidDescriptor("α must be 3x3".into()));
            }
            let ai = linalg::inverse(f, a).ok_or_else(|| Error::InvalidDescriptor("α must be invertible".into()))?;
            (from_blocks(a, &z3, &z3, &ai.transpose()), f.one())
        }
        GeneratorDescriptor::GammaMove(c) => {
            check_sym::<F>(c, "γ")?;
            (from_blocks(&i3, &z3, c, &i3), f.one())
        }
        GeneratorDescriptor::BetaMove(b) => {
            check_sym::<F>(b, "β")?;
            (from_blocks(&i3, b, &z3, &i3), f.one())
        }
        GeneratorDescriptor::Swap => {
            let mi = linalg::scale(f, &f.neg(&f.one()), &i3);
            (from_blocks(&z3, &mi, &i3, &z3), f.one())
        }
        GeneratorDescriptor::TorusScale(t) => {
            let mut d = Vec::with_capacity(6);
            for x in t {
                nonzero(x, "torus entry")?;
                d.push(x.clone());
            }
            for x in t {
                d.push(f.inv(x).unwrap());
            }
            (linalg::diag(f, &d), f.one())
        }
        GeneratorDescriptor::ScaleX0(x0) => {
            nonzero(x0, "x0")?;
            let one = f.one();
            let d = [f.inv(x0).unwrap(), one.clone(), one.clone(), x0.clone(), one.clone(), one];
            (linalg::diag(f, &d), f.one())
        }
        GeneratorDescriptor::Dilation(a) => {
            nonzero(a, "dilation factor")?;
            let one = f.one();
            let d = [a.clone(), a.clone(), a.clone(), one.clone(), one.clone(), one];
            (linalg::diag(f, &d), a.clone())
        }
    };
    Ok(SymplecticElement { matrix, multiplier, word: vec![desc.clone()] })
}

impl<E: Clone> SymplecticElement<E> {
    pub fn identity<F: Field<Elem = E>>(f: &F) -> Self {
        SymplecticElement { matrix: linalg::identity(f, 6), multiplier: f.one(), word: Vec::new() }
    }

    /// `self * other`: apply `other` first, then `self`.
    pub fn compose<F: Field<Elem = E>>(&self, f: &F, other: &Self) -> Self {
        let mut word = other.word.clone();
        word.extend(self.word.iter().cloned());
        SymplecticElement {
            matrix: linalg::mul(f, &self.matrix, &other.matrix),
            multiplier: f.mul(&self.multiplier, &other.multiplier),
            word,
        }
    }

    /// `g^{-1} = μ^{-1} M g^t M^{-1}`.
    pub fn inverse<F: Field<Elem = E>>(&self, f: &F) -> Self {
        let m = omega(f);
        let mneg = linalg::scale(f, &f.neg(&f.one()), &m);
        let mui = f.inv(&self.multiplier).expect("similitude factor is nonzero");
        let matrix = linalg::scale(f, &mui, &linalg::mul(f, &linalg::mul(f, &m, &self.matrix.transpose()), &mneg));
        let word = self.word.iter().rev().flat_map(|d| inverse_descriptor(f, d)).collect();
        SymplecticElement { matrix, multiplier: mui, word }
    }
}

fn inverse_descriptor<F: Field>(f: &F, d: &GeneratorDescriptor<F::Elem>) -> Vec<GeneratorDescriptor<F::Elem>> {
    use GeneratorDescriptor::*;
    let m1 = f.neg(&f.one());
    match d {
        BlockDiag(a) => vec![BlockDiag(linalg::inverse(f, a).expect("invertible α"))],
        GammaMove(c) => vec![GammaMove(linalg::scale(f, &m1, c))],
        BetaMove(b) => vec![BetaMove(linalg::scale(f, &m1, b))],
        Swap => vec![Swap, Swap, Swap],
        TorusScale(t) => vec![TorusScale(std::array::from_fn(|i| f.inv(&t[i]).unwrap()))],
        ScaleX0(x) => vec![ScaleX0(f.inv(x).unwrap())],
        Dilation(a) => vec![Dilation(f.inv(a).unwrap())],
    }
}

/// Product of a word, first descriptor applied first.
pub fn word_element<F: Field>(f: &F, word: &[GeneratorDescriptor<F::Elem>]) -> Result<SymplecticElement<F::Elem>> {
    let mut g = SymplecticElement::identity(f);
    for d in word {
        g = expand(f, d)?.compose(f, &g);
    }
    Ok(g)
}

fn random_small_sym<F: Field, R: Rng + ?Sized>(f: &F, rng: &mut R) -> Mat<F::Elem> {
    let mut m = linalg::zeros(f, 3, 3);
    for i in 0..3 {
        for j in i..3 {
            let v = f.random_small(rng, 2);
            m.set(i, j, v.clone());
            m.set(j, i, v);
        }
    }
    m
}

fn random_nonzero<F: Field, R: Rng + ?Sized>(f: &F, rng: &mut R) -> F::Elem {
    loop {
        let v = f.random_small(rng, 2);
        if !f.is_zero(&v) {
            return v;
        }
    }
}

/// One random generator with entries in {-2, ..., 2}.
pub fn random_descriptor<F: Field, R: Rng + ?Sized>(f: &F, rng: &mut R, kind: GroupKind) -> GeneratorDescriptor<F::Elem> {
    let kinds = if kind == GroupKind::GSp { 7 } else { 6 };
    match rng.gen_range(0..kinds) {
        0 => loop {
            let a = Mat::from_fn(3, 3, |_, _| f.random_small(rng, 2));
            if !f.is_zero(&linalg::det(f, &a)) {
                break GeneratorDescriptor::BlockDiag(a);
            }
        },
        1 => GeneratorDescriptor::GammaMove(random_small_sym(f, rng)),
        2 => GeneratorDescriptor::BetaMove(random_small_sym(f, rng)),
        3 => GeneratorDescriptor::Swap,
        4 => GeneratorDescriptor::TorusScale(std::array::from_fn(|_| random_nonzero(f, rng))),
        5 => GeneratorDescriptor::ScaleX0(random_nonzero(f, rng)),
        _ => GeneratorDescriptor::Dilation(random_nonzero(f, rng)),
    }
}

/// Random word drawn from an existing generator.
pub fn random_word<F: Field, R: Rng + ?Sized>(
    f: &F,
    rng: &mut R,
    word_length: usize,
    kind: GroupKind,
) -> SymplecticElement<F::Elem> {
    let word: Vec<_> = (0..word_length.max(1)).map(|_| random_descriptor(f, rng, kind)).collect();
    word_element(f, &word).expect("random descriptors are valid")
}

/// Deterministic random element: the same seed gives the same word and
/// matrix on every run and platform.
pub fn random_element<F: Field>(f: &F, seed: u64, word_length: usize, kind: GroupKind) -> SymplecticElement<F::Elem> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_word(f, &mut rng, word_length, kind)
}
