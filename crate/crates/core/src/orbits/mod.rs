//! Stratification of X, orbit invariants for each stratum and group mode,
//! and the finite-field census.
//!
//! X splits as {0} ⊔ X0 ⊔ X1 ⊔ X2 inside J = 0, plus the fibers
//! U_i = J^{-1}(i) for i ≠ 0. Stratification uses the covariants J,
//! grad J and the rank of the degree-2 covariant; invariants come from the
//! reduced tuple (X1, X3) or from the degree-2 covariant (X2).

mod census;
mod quaternion;
mod reduce;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::exactfield::{Field, SquareClass};
use crate::linalg;
use crate::quadforms::{cancel, invariants, invariants_of_diagonal, is_isotropic, FormInvariants, QuadraticForm};
use crate::quartic::{grad_j, j, m3_diag, q_cov};
use crate::symplectic::{random_word, GeneratorDescriptor, GroupKind};
use crate::wedgerep::{from_tuple, XTuple};


pub use quaternion::{quaternion_from_diagonal, QuaternionClass};
pub use reduce::{pivot_words, reduce, ReduceConfig, ReductionTrace};

pub use census::{census, CensusReport, CensusScope, FiberReport, FIBER_STRIDE, X2_STRIDE};
use reduce::{reduce_walker, Walker};

/// Which group the orbits are taken under.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GroupMode {
    Sp6,
    Sp6xGL1,
    GSp6xGL1,
}

impl std::str::FromStr for GroupMode {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "sp6" => Ok(GroupMode::Sp6),
            "sp6gl1" | "sp6xgl1" => Ok(GroupMode::Sp6xGL1),
            "gsp6gl1" | "gsp6xgl1" | "gsp6" => Ok(GroupMode::GSp6xGL1),
            _ => Err(Error::Parse(format!("unknown group mode {s:?}"))),
        }
    }
}

impl GroupMode {
    pub fn name(&self) -> &'static str {
        match self {
            GroupMode::Sp6 => "sp6",
            GroupMode::Sp6xGL1 => "sp6gl1",
            GroupMode::GSp6xGL1 => "gsp6gl1",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Stratum<E> {
    Zero,
    X0,
    X1,
    X2,
    /// A fiber of J, carrying the value `i = J(x) ≠ 0`.
    X3(E),
}

impl<E> Stratum<E> {
    pub fn tag(&self) -> &'static str {
        match self {
            Stratum::Zero => "Zero",
            Stratum::X0 => "X0",
            Stratum::X1 => "X1",
            Stratum::X2 => "X2",
            Stratum::X3(_) => "X3",
        }
    }
}

/// `k × k` or the field `k(sqrt c)` for a nonsquare class c.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum QuadraticAlgebra {
    Split,
    Field(SquareClass),
}

/// Canonical orbit datum. Equal values mean equal orbits (for X3, equal
/// hermitian forms up to isometry).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum OrbitInvariant<E> {
    X0,
    /// The square class `a` of the orbit of `(1, 0, 0, diag(a, 0, 0))`.
    X1 { class: SquareClass },
    X2 { quaternion: QuaternionClass<E> },
    X3 {
        /// `J(x)`, coarsened according to the group mode.
        i: E,
        algebra: QuadraticAlgebra,
        /// Invariants of the trace form `<y1, y2, y3> ⊗ <1, i>`.
        hermitian_trace: FormInvariants,
        /// Invariants of the octonion norm `<1, i> ⊥ <y1, y2, y3> ⊗ <1, i>`.
        octonion: FormInvariants,
        octonion_split: bool,
    },
}

/// Result of classifying one point: the canonical invariant plus a witness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Classification<E> {
    pub stratum: Stratum<E>,
    pub invariant: OrbitInvariant<E>,
    /// Word carrying the input to the witness tuple. For X3 the witness has
    /// nonzero hermitian determinant.
    pub trace: Option<ReductionTrace<E>>,
    /// The hermitian diagonal `<y1, y2, y3>` over k(sqrt(-i)) (X3 only).
    pub hermitian_diag: Option<[E; 3]>,
}

/// Representative of `i` modulo 4th powers (Sp6xGL1) or squares
/// (GSp6xGL1); `i` itself for Sp6.
pub fn coarsen_scalar<F: Field>(f: &F, i: &F::Elem, mode: GroupMode) -> Result<F::Elem> {
    if f.is_zero(i) {
        return Err(Error::ZeroInput);
    }
    match mode {
        GroupMode::Sp6 => Ok(i.clone()),
        GroupMode::Sp6xGL1 => f.fourth_power_class(i),
        GroupMode::GSp6xGL1 => Ok(f.class_element(&f.square_class(i)?)),
    }
}

/// `k(sqrt(-J(x)))`.
pub fn gamma_x<F: Field>(f: &F, x: &XTuple<F::Elem>) -> Result<QuadraticAlgebra> {
    let i = j(f, x);
    if f.is_zero(&i) {
        return Err(Error::NotSemistable);
    }
    quadratic_algebra(f, &i)
}

fn quadratic_algebra<F: Field>(f: &F, i: &F::Elem) -> Result<QuadraticAlgebra> {
    let c = f.square_class(&f.neg(i))?;
    Ok(if c.is_trivial() { QuadraticAlgebra::Split } else { QuadraticAlgebra::Field(c) })
}

fn tuple_x0<F: Field>(f: &F) -> XTuple<F::Elem> {
    let mut t = XTuple::zero(f);
    t.x0 = f.one();
    t
}

fn tuple_x1<F: Field>(f: &F, a: F::Elem) -> XTuple<F::Elem> {
    let mut t = tuple_x0(f);
    t.b[0][0] = a;
    t
}

fn tuple_x2<F: Field>(f: &F, d: [F::Elem; 3]) -> XTuple<F::Elem> {
    let mut t = XTuple::zero(f);
    t.a = m3_diag(f, d);
    t
}

/// Outcome of the startup calibration.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Calibration {
    /// Covariant ranks at the X0, X1 and X2 representatives.
    pub ranks: [usize; 3],
    /// Whether the X2 quaternion map passed its self-check (always true
    /// over prime fields, where the class is unique).
    pub x2_enabled: bool,
    pub x2_note: String,
}

/// Per-field classifier with calibrated covariant data.
#[derive(Clone, Debug)]
pub struct Classifier<F: Field> {
    pub field: F,
    pub calibration: Calibration,
    /// Invariants of the fixed summand of the negated covariant core at
    /// X2 points (rationals only).
    x2_offset: Option<FormInvariants>,
    pub reduce_config: ReduceConfig,
}

fn neg_core_invariants<F: Field>(f: &F, x: &XTuple<F::Elem>) -> Result<FormInvariants> {
    let q = q_cov(f, x);
    invariants(f, &q.scaled(f, &f.neg(&f.one())))
}

impl<F: Field> Classifier<F> {
    pub fn new(f: &F) -> Result<Self> {
        Self::with_config(f, ReduceConfig::default())
    }

    pub fn with_config(f: &F, reduce_config: ReduceConfig) -> Result<Self> {
        if f.characteristic() == 2 {
            return Err(Error::UnsupportedCharacteristic(2));
        }
        let rank = |x: &XTuple<F::Elem>| linalg::rank(f, &q_cov(f, x).gram);
        let ranks = [
            rank(&tuple_x0(f)),
            rank(&tuple_x1(f, f.one())),
            rank(&tuple_x2(f, [f.one(), f.one(), f.one()])),
        ];
        if ranks[0] == ranks[1] || ranks[1] == ranks[2] || ranks[0] == ranks[2] {
            return Err(Error::CalibrationCollision(format!("covariant ranks {ranks:?} do not separate X0, X1, X2")));
        }
        let mut c = Classifier {
            field: f.clone(),
            calibration: Calibration { ranks, x2_enabled: true, x2_note: "unique class over a finite field".into() },
            x2_offset: None,
            reduce_config,
        };
        if f.rationals().is_some() {
            c.calibrate_x2()?;
        }
        Ok(c)
    }

    /// Over the rationals the negated covariant core at `(0, 0, A, 0)` is a
    /// fixed form plus the ternary form `det(A) A`. The fixed part is read
    /// off at `A = I`, then the recovery is checked on sample points and the
    /// two real-place classes must come out different.
    fn calibrate_x2(&mut self) -> Result<()> {
        let f = self.field.clone();
        let one = f.one();
        let unit = invariants_of_diagonal(&f, &[one.clone(), one.clone(), one.clone()])?;
        let total = neg_core_invariants(&f, &tuple_x2(&f, [one.clone(), one.clone(), one.clone()]))?;
        self.x2_offset = Some(cancel(&f, &total, &unit)?);
        let samples: [[i64; 3]; 6] = [[1, 1, 1], [-1, -1, 1], [2, 3, 5], [-1, 2, 7], [3, -5, 6], [-2, -3, 11]];
        for s in samples {
            let d: [F::Elem; 3] = std::array::from_fn(|k| f.from_i64(s[k]));
            let expect = {
                let det = f.from_i64(s[0] * s[1] * s[2]);
                let w: [F::Elem; 3] = std::array::from_fn(|k| f.mul(&det, &d[k]));
                invariants_of_diagonal(&f, &w)?
            };
            let got = self.x2_ternary(&tuple_x2(&f, d))?;
            if got != expect {
                self.calibration.x2_enabled = false;
                self.calibration.x2_note = format!("recovered ternary form at diag{s:?} does not match");
                return Ok(());
            }
        }
        let a = QuaternionClass::from_ternary(&f, &self.x2_ternary(&tuple_x2(&f, [one.clone(), one.clone(), one.clone()]))?)?;
        let m1 = f.neg(&one);
        let b = QuaternionClass::from_ternary(&f, &self.x2_ternary(&tuple_x2(&f, [m1.clone(), m1, one]))?)?;
        if a == b {
            self.calibration.x2_enabled = false;
            self.calibration.x2_note = "diag(1,1,1) and diag(-1,-1,1) are not separated".into();
        } else {
            self.calibration.x2_note = "ternary recovery confirmed on six points; real-place classes separated".into();
        }
        Ok(())
    }

    fn x2_ternary(&self, x: &XTuple<F::Elem>) -> Result<FormInvariants> {
        let offset = self.x2_offset.as_ref().expect("rational calibration");
        cancel(&self.field, &neg_core_invariants(&self.field, x)?, offset)
    }

    pub fn stratify(&self, x: &XTuple<F::Elem>) -> Result<Stratum<F::Elem>> {
        let f = &self.field;
        crate::wedgerep::check_tuple(x)?;
        if x.is_zero(f) {
            return Ok(Stratum::Zero);
        }
        let i = j(f, x);
        if !f.is_zero(&i) {
            return Ok(Stratum::X3(i));
        }
        if !grad_j(f, x).is_zero(f) {
            return Ok(Stratum::X2);
        }
        let r = linalg::rank(f, &q_cov(f, x).gram);
        if r == self.calibration.ranks[1] {
            Ok(Stratum::X1)
        } else if r == self.calibration.ranks[0] {
            Ok(Stratum::X0)
        } else {
            Err(Error::Internal(format!("covariant rank {r} matches no calibrated stratum")))
        }
    }

    pub fn invariant(&self, x: &XTuple<F::Elem>, mode: GroupMode) -> Result<OrbitInvariant<F::Elem>> {
        Ok(self.classify(x, mode)?.invariant)
    }

    pub fn classify(&self, x: &XTuple<F::Elem>, mode: GroupMode) -> Result<Classification<F::Elem>> {
        let f = &self.field;
        let stratum = self.stratify(x)?;
        match &stratum {
            Stratum::Zero => Err(Error::ZeroVector),
            Stratum::X0 => Ok(Classification { stratum, invariant: OrbitInvariant::X0, trace: None, hermitian_diag: None }),
            Stratum::X1 => {
                let tr = reduce(f, x, &self.reduce_config)?;
                let t = &tr.canonical;
                let nz: Vec<&F::Elem> = (0..3).map(|k| &t.b[k][k]).filter(|e| !f.is_zero(e)).collect();
                if !f.is_zero(&t.y0) || nz.len() != 1 {
                    return Err(Error::Internal("reduced X1 tuple must have y0 = 0 and rank-1 B".into()));
                }
                let class = f.square_class(nz[0])?;
                Ok(Classification { stratum, invariant: OrbitInvariant::X1 { class }, trace: Some(tr), hermitian_diag: None })
            }
            Stratum::X2 => {
                let quaternion = if f.rationals().is_none() {
                    QuaternionClass::split_class(f)
                } else {
                    if !self.calibration.x2_enabled {
                        return Err(Error::CalibrationCollision(self.calibration.x2_note.clone()));
                    }
                    // Same orbit, smaller numbers.
                    let tr = reduce(f, x, &self.reduce_config)?;
                    QuaternionClass::from_ternary(f, &self.x2_ternary(&tr.canonical)?)?
                };
                Ok(Classification { stratum, invariant: OrbitInvariant::X2 { quaternion }, trace: None, hermitian_diag: None })
            }
            Stratum::X3(i) => self.classify_x3(x, i.clone(), mode),
        }
    }

    fn classify_x3(&self, x: &XTuple<F::Elem>, i: F::Elem, mode: GroupMode) -> Result<Classification<F::Elem>> {
        let f = &self.field;
        let trace = self.nondegenerate_witness(x)?;
        let t = &trace.canonical;
        let y: [F::Elem; 3] = std::array::from_fn(|k| t.b[k][k].clone());
        let invariant = x3_invariant(f, &i, &y, mode)?;
        Ok(Classification { stratum: Stratum::X3(i), invariant, trace: Some(trace), hermitian_diag: Some(y) })
    }

    /// Reduction of an X3 point to `(1, y0, 0, D)` with `det D ≠ 0`.
    ///
    /// When the reduced D is zero (only possible when -i is a square), the
    /// per-plane SL2 word `BetaMove, TorusScale, GammaMove` carries
    /// `(1, y0, 0, 0)` to `(1, 0, 0, diag(-1/4, -y0, -y0))`. When D is
    /// nonzero but singular, a random move is applied and reduction repeats.
    pub fn nondegenerate_witness(&self, x: &XTuple<F::Elem>) -> Result<ReductionTrace<F::Elem>> {
        let f = &self.field;
        let cfg = &self.reduce_config;
        let mut wk = Walker { f, w: from_tuple(f, x), word: Vec::new() };
        let mut attempts = reduce_walker(&mut wk, cfg)?;
        let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ 0x5eed);
        loop {
            let t = wk.tuple()?;
            let d: [F::Elem; 3] = std::array::from_fn(|k| t.b[k][k].clone());
            if d.iter().all(|e| !f.is_zero(e)) {
                return Ok(ReductionTrace { word: wk.word, canonical: t, pivot_attempts: attempts });
            }
            if d.iter().all(|e| f.is_zero(e)) {
                let y0 = t.y0.clone();
                let y0i = f.inv(&y0).ok_or_else(|| Error::Internal("X3 point with y0 = 0 and D = 0".into()))?;
                let h = f.inv(&f.from_i64(2)).unwrap();
                let diag = |v: [F::Elem; 3]| linalg::diag(f, &v);
                let one = f.one();
                let mh = f.neg(&h);
                wk.apply(GeneratorDescriptor::BetaMove(diag([y0i, one.clone(), one.clone()])))?;
                wk.apply(GeneratorDescriptor::TorusScale([h.clone(), one.clone(), one.clone()]))?;
                wk.apply(GeneratorDescriptor::GammaMove(diag([f.neg(&f.add(&y0, &y0)), mh.clone(), mh])))?;
                let t = wk.tuple()?;
                let ok = f.is_one(&t.x0)
                    && f.is_zero(&t.y0)
                    && t.a.iter().flatten().all(|e| f.is_zero(e))
                    && (0..3).all(|a| (0..3).all(|b| (a == b) != f.is_zero(&t.b[a][b])));
                if !ok {
                    return Err(Error::Internal("split witness did not reach diagonal shape".into()));
                }
                return Ok(ReductionTrace { word: wk.word, canonical: t, pivot_attempts: attempts });
            }
            if attempts >= cfg.pivot_budget {
                return Err(Error::PivotSearchExhausted { attempts });
            }
            attempts += 1;
            let g = random_word(f, &mut rng, 2, GroupKind::Sp);
            wk.apply_matrix(&g.matrix, &g.word)?;
            attempts += reduce_walker(&mut wk, cfg)?;
        }
    }

    /// Octonion norm class and `k(sqrt(-i))` of a semistable point.
    pub fn pair_invariant(&self, x: &XTuple<F::Elem>) -> Result<(FormInvariants, QuadraticAlgebra)> {
        match self.invariant(x, GroupMode::GSp6xGL1) {
            Ok(OrbitInvariant::X3 { octonion, algebra, .. }) => Ok((octonion, algebra)),
            Ok(_) | Err(Error::ZeroVector) => Err(Error::NotSemistable),
            Err(e) => Err(e),
        }
    }
}

/// The X3 datum from `i` and a hermitian diagonal with `y1 y2 y3 ≠ 0`.
pub fn x3_invariant<F: Field>(f: &F, i: &F::Elem, y: &[F::Elem; 3], mode: GroupMode) -> Result<OrbitInvariant<F::Elem>> {
    let trace_entries: Vec<F::Elem> = y.iter().flat_map(|c| [c.clone(), f.mul(c, i)]).collect();
    let hermitian_trace = invariants_of_diagonal(f, &trace_entries)?;
    let mut oct = vec![f.one(), i.clone()];
    oct.extend(trace_entries);
    let octonion = invariants_of_diagonal(f, &oct)?;
    let octonion_split = is_isotropic(f, &QuadraticForm::diagonal(f, &oct))?;
    Ok(OrbitInvariant::X3 {
        i: coarsen_scalar(f, i, mode)?,
        algebra: quadratic_algebra(f, i)?,
        hermitian_trace,
        octonion,
        octonion_split,
    })
}

/// Canonical representatives of the four strata inside and off `J = 0`:
/// `-e1e2e3`, `e1e4e3 + e5e2e3`, `e1e4e3 + e5e2e3 + e1e2e6`, and
/// `-e1e2e3 - 2e4e5e6`.
pub fn stratum_representatives<F: Field>(f: &F) -> [XTuple<F::Elem>; 4] {
    use crate::wedgerep::{to_tuple_unchecked, WedgeVector};
    let build = |terms: &[([usize; 3], i64)]| {
        let mut w = WedgeVector::zero(f);
        for (t, c) in terms {
            w.add_term(f, *t, &f.from_i64(*c));
        }
        to_tuple_unchecked(f, &w)
    };
    [
        build(&[([0, 1, 2], -1)]),
        build(&[([0, 3, 2], 1), ([4, 1, 2], 1)]),
        build(&[([0, 3, 2], 1), ([4, 1, 2], 1), ([0, 1, 5], 1)]),
        build(&[([0, 1, 2], -1), ([3, 4, 5], -2)]),
    ]
}
