//! Reduction of a nonzero point of X to the shape (1, y0, 0, diag(y1, y2, y3)).

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::exactfield::Field;
use crate::linalg::{self, Mat};
use crate::quadforms::{diagonalize, QuadraticForm};
use crate::symplectic::{expand, random_word, GeneratorDescriptor, GroupKind};
use crate::wedgerep::{act, act_x123, check_tuple, from_tuple, to_tuple, WedgeVector, XTuple};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ReduceConfig {
    /// Maximum number of pivot words tried, fixed list included.
    pub pivot_budget: usize,
    /// Seed for the random fallback words.
    pub seed: u64,
}

impl Default for ReduceConfig {
    fn default() -> Self {
        ReduceConfig { pivot_budget: 512, seed: 0 }
    }
}

/// The generator word applied to an input (first to last) and the tuple it
/// produces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionTrace<E> {
    pub word: Vec<GeneratorDescriptor<E>>,
    pub canonical: XTuple<E>,
    /// Number of pivot words evaluated before x0 became nonzero.
    pub pivot_attempts: usize,
}

/// Fixed pivot list: Swap, then BetaMove(β) for the 63 nonzero symmetric
/// 0/1 matrices in binary order of their six upper entries.
pub fn pivot_words<F: Field>(f: &F) -> Vec<GeneratorDescriptor<F::Elem>> {
    let mut out = vec![GeneratorDescriptor::Swap];
    let slots = [(0, 0), (1, 1), (2, 2), (0, 1), (0, 2), (1, 2)];
    for mask in 1u32..64 {
        let mut b = linalg::zeros(f, 3, 3);
        for (k, &(i, j)) in slots.iter().enumerate() {
            if mask >> k & 1 == 1 {
                b.set(i, j, f.one());
                b.set(j, i, f.one());
            }
        }
        out.push(GeneratorDescriptor::BetaMove(b));
    }
    out
}

pub(crate) struct Walker<'a, F: Field> {
    pub f: &'a F,
    pub w: WedgeVector<F::Elem>,
    pub word: Vec<GeneratorDescriptor<F::Elem>>,
}

impl<F: Field> Walker<'_, F> {
    pub fn apply(&mut self, d: GeneratorDescriptor<F::Elem>) -> Result<()> {
        let g = expand(self.f, &d)?;
        self.w = act(self.f, &g.matrix, &self.w)?;
        self.word.push(d);
        Ok(())
    }

    pub fn apply_matrix(&mut self, g: &Mat<F::Elem>, word: &[GeneratorDescriptor<F::Elem>]) -> Result<()> {
        self.w = act(self.f, g, &self.w)?;
        self.word.extend(word.iter().cloned());
        Ok(())
    }

    pub fn tuple(&self) -> Result<XTuple<F::Elem>> {
        to_tuple(self.f, &self.w)
    }
}

fn pivot<F: Field>(wk: &mut Walker<'_, F>, cfg: &ReduceConfig) -> Result<usize> {
    let f = wk.f;
    if !f.is_zero(&wk.w.coords[0]) {
        return Ok(0);
    }
    let mut attempts = 0;
    for d in pivot_words(f) {
        if attempts >= cfg.pivot_budget {
            break;
        }
        attempts += 1;
        let g = expand(f, &d)?;
        if !f.is_zero(&act_x123(f, &g.matrix, &wk.w)) {
            wk.apply_matrix(&g.matrix, &g.word)?;
            return Ok(attempts);
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    while attempts < cfg.pivot_budget {
        attempts += 1;
        let g = random_word(f, &mut rng, 2, GroupKind::Sp);
        if !f.is_zero(&act_x123(f, &g.matrix, &wk.w)) {
            wk.apply_matrix(&g.matrix, &g.word)?;
            return Ok(attempts);
        }
    }
    Err(Error::PivotSearchExhausted { attempts })
}

fn is_diag<F: Field>(f: &F, m: &[[F::Elem; 3]; 3]) -> bool {
    (0..3).all(|i| (0..3).all(|j| i == j || f.is_zero(&m[i][j])))
}

fn broken(step: &str) -> Error {
    Error::Internal(format!("reduction step '{step}' did not reach its target shape"))
}

/// Carries `x` to `(1, y0, 0, diag(y1, y2, y3))`:
/// make x0 nonzero, clear A with a GammaMove, diagonalize B with a
/// BlockDiag congruence, then normalize x0 with ScaleX0.
pub fn reduce<F: Field>(f: &F, x: &XTuple<F::Elem>, cfg: &ReduceConfig) -> Result<ReductionTrace<F::Elem>> {
    check_tuple(x)?;
    if x.is_zero(f) {
        return Err(Error::ZeroVector);
    }
    let mut wk = Walker { f, w: from_tuple(f, x), word: Vec::new() };
    let attempts = pivot(&mut wk, cfg)?;
    reduce_from_pivot(&mut wk)?;
    let canonical = wk.tuple()?;
    Ok(ReductionTrace { word: wk.word, canonical, pivot_attempts: attempts })
}

pub(crate) fn reduce_walker<F: Field>(wk: &mut Walker<'_, F>, cfg: &ReduceConfig) -> Result<usize> {
    let attempts = pivot(wk, cfg)?;
    reduce_from_pivot(wk)?;
    Ok(attempts)
}

fn reduce_from_pivot<F: Field>(wk: &mut Walker<'_, F>) -> Result<()> {
    let f = wk.f;
    let t = wk.tuple()?;
    if t.a.iter().flatten().any(|e| !f.is_zero(e)) {
        let x0i = f.inv(&t.x0).unwrap();
        let gamma = Mat::from_fn(3, 3, |i, j| f.mul(&x0i, &t.a[i][j]));
        wk.apply(GeneratorDescriptor::GammaMove(gamma))?;
        let t = wk.tuple()?;
        if t.a.iter().flatten().any(|e| !f.is_zero(e)) || f.is_zero(&t.x0) {
            return Err(broken("clear A"));
        }
    }
    let t = wk.tuple()?;
    if !is_diag(f, &t.b) {
        let q = QuadraticForm { gram: Mat::from_fn(3, 3, |i, j| t.b[i][j].clone()) };
        let (_, p) = diagonalize(f, &q);
        wk.apply(GeneratorDescriptor::BlockDiag(p))?;
        let t = wk.tuple()?;
        if !is_diag(f, &t.b) || t.a.iter().flatten().any(|e| !f.is_zero(e)) {
            return Err(broken("diagonalize B"));
        }
    }
    let t = wk.tuple()?;
    if !f.is_one(&t.x0) {
        wk.apply(GeneratorDescriptor::ScaleX0(t.x0.clone()))?;
        let t = wk.tuple()?;
        if !f.is_one(&t.x0) || !is_diag(f, &t.b) {
            return Err(broken("normalize x0"));
        }
    }
    Ok(())
}
