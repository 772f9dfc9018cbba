//! Field-erased entry points returning JSON, shared by the command line
//! tool and the C interface.

pub mod json;

use serde_json::{json, Value};

use crate::compalg::{self, CompositionAlgebra};
use crate::error::{Error, Result};
use crate::exactfield::{Field, PrimeField, Rationals};
use crate::freudenthal::{classify_dim6, h3};
use crate::linalg;
use crate::orbits::{census, CensusScope, Classifier, GroupMode, ReduceConfig, Stratum};
use crate::quadforms::{invariants, is_isometric, is_isotropic, QuadraticForm};
use crate::quartic::{grad_j, j, q_cov_fast};
use crate::symplectic::{similitude_factor, word_element};
use crate::wedgerep::{act_tuple, from_tuple};

pub const SCHEMA_VERSION: u32 = 1;
pub const ARTIFACT_VERSION: &str = env!("CARGO_PKG_VERSION");

/// Either supported ground field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AnyField {
    Q(Rationals),
    Fp(PrimeField),
}

impl std::str::FromStr for AnyField {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.eq_ignore_ascii_case("q") {
            return Ok(AnyField::Q(Rationals::new()));
        }
        let p = s
            .strip_prefix("F:")
            .or_else(|| s.strip_prefix("f:"))
            .ok_or_else(|| Error::Parse(format!("field must be Q or F:p, got {s:?}")))?;
        let p: u64 = p.parse().map_err(|_| Error::Parse(format!("bad prime {p:?}")))?;
        Ok(AnyField::Fp(PrimeField::new(p)?))
    }
}

impl AnyField {
    pub fn name(&self) -> String {
        match self {
            AnyField::Q(f) => f.name(),
            AnyField::Fp(f) => f.name(),
        }
    }
}

macro_rules! dispatch {
    ($field:expr, $f:ident => $body:expr) => {
        match $field {
            AnyField::Q($f) => $body,
            AnyField::Fp($f) => $body,
        }
    };
}

/// Process exit status for an error.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::NotInX => 3,
        Error::UnsupportedCharacteristic(_) | Error::ScopeTooLarge => 4,
        Error::PivotSearchExhausted { .. } => 5,
        Error::Internal(_) | Error::CalibrationCollision(_) | Error::FactorizationBoundExceeded { .. } => 1,
        _ => 2,
    }
}

/// Short machine-readable error name.
pub fn error_kind(e: &Error) -> &'static str {
    match e {
        Error::ZeroInput => "ZeroInput",
        Error::FactorizationBoundExceeded { .. } => "FactorizationBoundExceeded",
        Error::DegenerateForm => "DegenerateForm",
        Error::NontrivialDiscriminant => "NontrivialDiscriminant",
        Error::NonAssociativeBase => "NonAssociativeBase",
        Error::NotTraceless => "NotTraceless",
        Error::ZeroVector => "ZeroVector",
        Error::InvalidDescriptor(_) => "InvalidDescriptor",
        Error::SingularMatrix => "SingularMatrix",
        Error::NotInX => "NotInX",
        Error::OutsideSlice => "OutsideSlice",
        Error::PivotSearchExhausted { .. } => "PivotSearchExhausted",
        Error::CalibrationCollision(_) => "CalibrationCollision",
        Error::NotSemistable => "NotSemistable",
        Error::ScopeTooLarge => "ScopeTooLarge",
        Error::UnsupportedCharacteristic(_) => "UnsupportedCharacteristic",
        Error::DimensionMismatch(_) => "DimensionMismatch",
        Error::Parse(_) => "Parse",
        Error::Internal(_) => "Internal",
    }
}

/// `J`, its gradient, the covariant rank and the stratum at a point.
pub fn j_report(field: &AnyField, input: &Value) -> Result<Value> {
    dispatch!(field, f => j_generic(f, input))
}

fn j_generic<F: Field>(f: &F, input: &Value) -> Result<Value> {
    let x = json::point(f, input)?;
    let c = Classifier::new(f)?;
    let stratum = c.stratify(&x)?;
    Ok(json!({
        "J": json::elem_json(f, &j(f, &x)),
        "grad": json::tuple_json(f, &grad_j(f, &x)),
        "q_cov_rank": linalg::rank(f, &q_cov_fast(f, &x).gram),
        "stratum": stratum_json(f, &stratum),
    }))
}

fn stratum_json<F: Field>(f: &F, s: &Stratum<F::Elem>) -> Value {
    match s {
        Stratum::X3(i) => json!({ "tag": "X3", "i": json::elem_json(f, i) }),
        other => json!({ "tag": other.tag() }),
    }
}

pub fn reduce_report(field: &AnyField, input: &Value, cfg: &ReduceConfig) -> Result<Value> {
    dispatch!(field, f => {
        let x = json::point(f, input)?;
        let tr = crate::orbits::reduce(f, &x, cfg)?;
        let mut out = json::trace_json(f, &tr);
        out["J"] = json::elem_json(f, &j(f, &x));
        Ok(out)
    })
}

pub fn classify_report(field: &AnyField, input: &Value, mode: GroupMode, cfg: &ReduceConfig) -> Result<Value> {
    dispatch!(field, f => {
        let x = json::point(f, input)?;
        let c = Classifier::with_config(f, *cfg)?;
        let cl = c.classify(&x, mode)?;
        Ok(json!({
            "stratum": stratum_json(f, &cl.stratum),
            "invariant": json::invariant_json(f, &cl.invariant),
            "witness": cl.trace.as_ref().map(|t| json::trace_json(f, t)),
            "hermitian_diag": cl.hermitian_diag.as_ref().map(|y| y.iter().map(|e| json::elem_json(f, e)).collect::<Vec<_>>()),
        }))
    })
}

/// Applies `{"g": 6x6 matrix}` or `{"word": [descriptors]}` to `"x"`.
pub fn act_report(field: &AnyField, input: &Value) -> Result<Value> {
    dispatch!(field, f => {
        let x = json::point(f, input)?;
        let g = if let Some(g) = input.get("g") {
            json::matrix(f, g)?
        } else if let Some(w) = input.get("word") {
            let word = w.as_array().ok_or_else(|| Error::Parse("word must be an array".into()))?;
            let word = word.iter().map(|d| json::descriptor(f, d)).collect::<Result<Vec<_>>>()?;
            word_element(f, &word)?.matrix
        } else {
            return Err(Error::Parse("act needs \"g\" or \"word\"".into()));
        };
        if (g.rows, g.cols) != (6, 6) {
            return Err(Error::DimensionMismatch("g must be 6x6".into()));
        }
        let m = similitude_factor(f, &g).ok_or_else(|| Error::InvalidDescriptor("g is not a symplectic similitude".into()))?;
        let y = act_tuple(f, &g, &x)?;
        Ok(json!({
            "result": json::tuple_json(f, &y),
            "wedge": json::wedge_json(f, &from_tuple(f, &y)),
            "multiplier": json::elem_json(f, &m),
            "J_before": json::elem_json(f, &j(f, &x)),
            "J_after": json::elem_json(f, &j(f, &y)),
        }))
    })
}

/// Parses `k`, `cd:a[,b[,c]]` or `zorn`.
pub fn composition_algebra<F: Field>(f: &F, spec: &str) -> Result<CompositionAlgebra<F::Elem>> {
    let s = spec.trim();
    if s.eq_ignore_ascii_case("k") {
        return Ok(compalg::ground(f));
    }
    if s.eq_ignore_ascii_case("zorn") {
        return Ok(compalg::zorn(f));
    }
    let rest = s
        .strip_prefix("cd:")
        .ok_or_else(|| Error::Parse(format!("algebra must be k, cd:a,b,c or zorn, got {s:?}")))?;
    let lambdas = rest.split(',').map(|t| f.parse(t)).collect::<Result<Vec<_>>>()?;
    compalg::from_lambdas(f, &lambdas)
}

pub fn algebra_report(field: &AnyField, spec: &str) -> Result<Value> {
    dispatch!(field, f => {
        let c = composition_algebra(f, spec)?;
        let n = compalg::norm_form(&c);
        Ok(json!({
            "spec": spec,
            "dim": c.dim,
            "norm": json::form_json(&invariants(f, &n)?),
            "split": compalg::is_split(f, &c)?,
        }))
    })
}

pub fn freudenthal_report(field: &AnyField, spec: &str, gamma: &[String]) -> Result<Value> {
    dispatch!(field, f => {
        let c = composition_algebra(f, spec)?;
        if gamma.len() != 3 {
            return Err(Error::DimensionMismatch("gamma needs 3 entries".into()));
        }
        let g = [f.parse(&gamma[0])?, f.parse(&gamma[1])?, f.parse(&gamma[2])?];
        let a = h3(f, &c, g.clone())?;
        let t = a.trace_form(f)?;
        let formula = a.formula_trace_form(f);
        let (diag, _) = crate::quadforms::diagonalize(f, &t);
        let (fdiag, _) = crate::quadforms::diagonalize(f, &formula);
        let mut out = json!({
            "dim": a.dim(),
            "trace_form_diagonal": diag.iter().map(|e| json::elem_json(f, e)).collect::<Vec<_>>(),
            "formula_diagonal": fdiag.iter().map(|e| json::elem_json(f, e)).collect::<Vec<_>>(),
            "trace_form": json::form_json(&invariants(f, &t)?),
            "isometric": is_isometric(f, &t, &formula)?,
        });
        if c.dim == 1 {
            out["quaternion"] = json::quaternion_json(f, &classify_dim6(f, &g)?);
        }
        Ok(out)
    })
}

fn form_of<F: Field>(f: &F, v: &Value) -> Result<QuadraticForm<F::Elem>> {
    if let Some(d) = v.get("diag") {
        return Ok(QuadraticForm::diagonal(f, &json::elems(f, d)?));
    }
    let g = v.get("gram").ok_or_else(|| Error::Parse("form needs \"gram\" or \"diag\"".into()))?;
    QuadraticForm::new(json::matrix(f, g)?)
}

/// Invariants and isotropy of a form; with `"compare"`, also isometry.
pub fn form_report(field: &AnyField, input: &Value) -> Result<Value> {
    dispatch!(field, f => {
        let q = form_of(f, input)?;
        let mut out = json!({
            "invariants": json::form_json(&invariants(f, &q)?),
            "isotropic": is_isotropic(f, &q)?,
        });
        if let Some(other) = input.get("compare") {
            out["isometric"] = json!(is_isometric(f, &q, &form_of(f, other)?)?);
        }
        Ok(out)
    })
}

pub fn census_report(p: u64, scope: CensusScope, jobs: usize, seed: u64) -> Result<Value> {
    Ok(census(p, scope, jobs, seed)?.to_json())
}

/// Wraps a result with the schema version, artifact version and config.
pub fn envelope(command: &str, config: Value, result: Value) -> Value {
    json!({
        "schema_version": SCHEMA_VERSION,
        "artifact_version": ARTIFACT_VERSION,
        "command": command,
        "config": config,
        "result": result,
    })
}

pub fn error_json(e: &Error) -> Value {
    json!({
        "schema_version": SCHEMA_VERSION,
        "error": error_kind(e),
        "message": e.to_string(),
        "exit_code": exit_code(e),
    })
}

/// Validates a point in any accepted encoding and returns its tuple encoding.
pub fn normalize_point(field: &AnyField, input: &Value) -> Result<Value> {
    dispatch!(field, f => Ok(json::tuple_json(f, &json::point(f, input)?)))
}
