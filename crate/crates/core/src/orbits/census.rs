//! Stratum and fiber counts over a small prime field.

use std::collections::{BTreeMap, BTreeSet};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use super::{Classifier, GroupMode, OrbitInvariant};
use crate::error::{Error, Result};
use crate::exactfield::{Field, PrimeField};
use crate::linalg;
use crate::quartic::{grad_j, j, q_cov_fast};
use crate::symplectic::{random_element, GroupKind};
use crate::wedgerep::{act_tuple, XTuple};

/// Which vectors the census visits.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CensusScope {
    /// Every vector of `F_p^14`; allowed for p = 3 only.
    Full,
    /// `n` uniform random vectors drawn from `seed`.
    Sample { n: u64, seed: u64 },
}

/// Fibers are spot-checked at every `FIBER_STRIDE`-th visited vector.
pub const FIBER_STRIDE: u64 = 9973;
/// Covariant ranks at X2 points are checked at this stride.
pub const X2_STRIDE: u64 = 997;
const SAMPLE_CHUNK: u64 = 4096;

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FiberReport {
    pub count: u64,
    /// Vectors that were classified and compared with a random translate.
    pub sampled: u64,
    /// Pairs whose invariants differed.
    pub mismatches: u64,
    /// Distinct Sp6 invariants seen among the sampled vectors.
    pub distinct_sampled: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CensusReport {
    pub p: u64,
    pub scope: CensusScope,
    pub visited: u64,
    pub zero: u64,
    pub x0: u64,
    /// X1 counts keyed by the square-class representative.
    pub x1: BTreeMap<u64, u64>,
    pub x2: u64,
    /// Distinct X2 invariants among the rank-checked X2 points.
    pub x2_classes: usize,
    pub x2_rank_checked: u64,
    pub x2_rank_failures: u64,
    /// Fibers `J = i`, keyed by `i`.
    pub fibers: BTreeMap<u64, FiberReport>,
}

impl CensusReport {
    pub fn x1_total(&self) -> u64 {
        self.x1.values().sum()
    }

    pub fn fiber_total(&self) -> u64 {
        self.fibers.values().map(|r| r.count).sum()
    }

    /// Counts add up, two X1 classes, one X2 class, constant sampled fibers,
    /// and X2 covariant ranks as calibrated.
    pub fn checks_pass(&self) -> bool {
        let partition = self.zero + self.x0 + self.x1_total() + self.x2 + self.fiber_total() == self.visited;
        let full_zero = self.scope != CensusScope::Full || self.zero == 1;
        let x1_ok = self.scope != CensusScope::Full || self.x1.len() == 2;
        let x2_ok = self.x2_rank_checked == 0 || self.x2_classes == 1;
        let fibers_ok = self.fibers.values().all(|r| r.mismatches == 0);
        partition && full_zero && x1_ok && x2_ok && fibers_ok && self.x2_rank_failures == 0
    }

    pub fn to_json(&self) -> Value {
        let scope = match self.scope {
            CensusScope::Full => json!({"kind": "full"}),
            CensusScope::Sample { n, seed } => json!({"kind": "sample", "n": n, "seed": seed}),
        };
        let x1: serde_json::Map<String, Value> = self.x1.iter().map(|(k, v)| (k.to_string(), json!(v))).collect();
        let fibers: serde_json::Map<String, Value> = self
            .fibers
            .iter()
            .map(|(i, r)| {
                (
                    i.to_string(),
                    json!({
                        "count": r.count,
                        "sampled": r.sampled,
                        "mismatches": r.mismatches,
                        "distinct_sampled_invariants": r.distinct_sampled,
                    }),
                )
            })
            .collect();
        json!({
            "p": self.p,
            "scope": scope,
            "visited": self.visited,
            "counts": {
                "zero": self.zero,
                "X0": self.x0,
                "X1": self.x1_total(),
                "X2": self.x2,
                "X3": self.fiber_total(),
            },
            "x1_classes": x1,
            "x1_class_count": self.x1.len(),
            "x2_class_count": self.x2_classes,
            "x2_rank_checks": {"checked": self.x2_rank_checked, "failures": self.x2_rank_failures},
            "fibers": fibers,
            "checks_pass": self.checks_pass(),
        })
    }
}

#[derive(Default)]
struct Partial {
    visited: u64,
    zero: u64,
    x0: u64,
    x1: BTreeMap<u64, u64>,
    x2: u64,
    x2_rank_checked: u64,
    x2_rank_failures: u64,
    x2_invariants: BTreeSet<String>,
    fibers: BTreeMap<u64, (u64, u64, u64)>,
    sampled_invariants: BTreeMap<u64, BTreeSet<String>>,
}

impl Partial {
    fn merge(&mut self, o: Partial) {
        self.visited += o.visited;
        self.zero += o.zero;
        self.x0 += o.x0;
        for (k, v) in o.x1 {
            *self.x1.entry(k).or_default() += v;
        }
        self.x2 += o.x2;
        self.x2_rank_checked += o.x2_rank_checked;
        self.x2_rank_failures += o.x2_rank_failures;
        self.x2_invariants.extend(o.x2_invariants);
        for (k, (a, b, c)) in o.fibers {
            let e = self.fibers.entry(k).or_default();
            e.0 += a;
            e.1 += b;
            e.2 += c;
        }
        for (k, s) in o.sampled_invariants {
            self.sampled_invariants.entry(k).or_default().extend(s);
        }
    }
}

struct Worker<'a> {
    f: &'a PrimeField,
    c: &'a Classifier<PrimeField>,
    seed: u64,
}

impl Worker<'_> {
    fn visit(&self, out: &mut Partial, coords: &[u64], tag: u64) -> Result<()> {
        let f = self.f;
        out.visited += 1;
        let x = XTuple::from_coords(coords);
        if x.is_zero(f) {
            out.zero += 1;
            return Ok(());
        }
        let i = j(f, &x);
        if i != 0 {
            let e = out.fibers.entry(i).or_default();
            e.0 += 1;
            if tag % FIBER_STRIDE == 0 {
                e.1 += 1;
                let base = self.c.invariant(&x, GroupMode::Sp6)?;
                let g = random_element(f, self.seed ^ tag, 3, GroupKind::Sp);
                let y = act_tuple(f, &g.matrix, &x)?;
                if self.c.invariant(&y, GroupMode::Sp6)? != base {
                    out.fibers.get_mut(&i).unwrap().2 += 1;
                }
                out.sampled_invariants.entry(i).or_default().insert(format!("{base:?}"));
            }
            return Ok(());
        }
        if !grad_j(f, &x).is_zero(f) {
            out.x2 += 1;
            if tag % X2_STRIDE == 0 {
                out.x2_rank_checked += 1;
                if linalg::rank(f, &q_cov_fast(f, &x).gram) != self.c.calibration.ranks[2] {
                    out.x2_rank_failures += 1;
                }
                out.x2_invariants.insert(format!("{:?}", self.c.invariant(&x, GroupMode::Sp6)?));
            }
            return Ok(());
        }
        let r = linalg::rank(f, &q_cov_fast(f, &x).gram);
        if r == self.c.calibration.ranks[0] {
            out.x0 += 1;
        } else if r == self.c.calibration.ranks[1] {
            match self.c.invariant(&x, GroupMode::Sp6)? {
                OrbitInvariant::X1 { class } => {
                    let rep = f.class_element(&class);
                    *out.x1.entry(rep).or_default() += 1;
                }
                other => return Err(Error::Internal(format!("rank-4 point classified as {other:?}"))),
            }
        } else {
            return Err(Error::Internal(format!("J = 0 and grad J = 0 with covariant rank {r}")));
        }
        Ok(())
    }
}

fn digits(mut n: u64, p: u64, out: &mut [u64; 14]) {
    for d in out.iter_mut() {
        *d = n % p;
        n /= p;
    }
}

/// Runs the census over `F_p` using `jobs` worker threads. Results do not
/// depend on `jobs`.
pub fn census(p: u64, scope: CensusScope, jobs: usize, seed: u64) -> Result<CensusReport> {
    if scope == CensusScope::Full && p != 3 {
        return Err(Error::ScopeTooLarge);
    }
    let f = PrimeField::new(p)?;
    let c = Classifier::new(&f)?;
    let worker = Worker { f: &f, c: &c, seed };
    let jobs = jobs.max(1) as u64;

    let run_chunk = |k: u64| -> Result<Partial> {
        let mut out = Partial::default();
        let mut coords = [0u64; 14];
        match scope {
            CensusScope::Full => {
                let total = 3u64.pow(14);
                let (lo, hi) = (total * k / jobs, total * (k + 1) / jobs);
                for n in lo..hi {
                    digits(n, p, &mut coords);
                    worker.visit(&mut out, &coords, n)?;
                }
            }
            CensusScope::Sample { n, seed: s } => {
                let chunks = n.div_ceil(SAMPLE_CHUNK);
                for ch in (k..chunks).step_by(jobs as usize) {
                    let mut rng = ChaCha8Rng::seed_from_u64(s.wrapping_mul(0x9e37_79b9_7f4a_7c15) ^ ch);
                    let lo = ch * SAMPLE_CHUNK;
                    for idx in lo..(lo + SAMPLE_CHUNK).min(n) {
                        for d in coords.iter_mut() {
                            *d = rng.gen_range(0..p);
                        }
                        worker.visit(&mut out, &coords, idx)?;
                    }
                }
            }
        }
        Ok(out)
    };

    let parts: Vec<Result<Partial>> = std::thread::scope(|s| {
        let handles: Vec<_> = (0..jobs).map(|k| s.spawn(move || run_chunk(k))).collect();
        handles
            .into_iter()
            .map(|h| h.join().unwrap_or_else(|_| Err(Error::Internal("census worker panicked".into()))))
            .collect()
    });
    let mut total = Partial::default();
    for part in parts {
        total.merge(part?);
    }
    let fibers = total
        .fibers
        .iter()
        .map(|(&i, &(count, sampled, mismatches))| {
            let distinct_sampled = total.sampled_invariants.get(&i).map_or(0, |s| s.len());
            (i, FiberReport { count, sampled, mismatches, distinct_sampled })
        })
        .collect();
    Ok(CensusReport {
        p,
        scope,
        visited: total.visited,
        zero: total.zero,
        x0: total.x0,
        x1: total.x1,
        x2: total.x2,
        x2_classes: total.x2_invariants.len(),
        x2_rank_checked: total.x2_rank_checked,
        x2_rank_failures: total.x2_rank_failures,
        fibers,
    })
}
