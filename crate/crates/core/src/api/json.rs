//! JSON encodings of points, matrices, words and invariants.

use serde_json::{json, Map, Value};

use crate::error::{Error, Result};
use crate::exactfield::{Field, SquareClass};
use crate::linalg::Mat;
use crate::orbits::{OrbitInvariant, QuadraticAlgebra, QuaternionClass, ReductionTrace};
use crate::quadforms::FormInvariants;
use crate::symplectic::GeneratorDescriptor;
use crate::wedgerep::{in_x, to_tuple, triple_index, WedgeVector, XTuple, TRIPLES};

fn bad(msg: impl Into<String>) -> Error {
    Error::Parse(msg.into())
}

/// A field element from a JSON string ("-3/4") or integer.
pub fn elem<F: Field>(f: &F, v: &Value) -> Result<F::Elem> {
    match v {
        Value::String(s) => f.parse(s),
        Value::Number(n) => f.parse(&n.to_string()),
        other => Err(bad(format!("expected a number or string, got {other}"))),
    }
}

pub fn elem_json<F: Field>(f: &F, e: &F::Elem) -> Value {
    Value::String(f.display(e))
}

pub fn elems<F: Field>(f: &F, v: &Value) -> Result<Vec<F::Elem>> {
    v.as_array().ok_or_else(|| bad("expected an array"))?.iter().map(|e| elem(f, e)).collect()
}

pub fn elems3<F: Field>(f: &F, v: &Value) -> Result<[F::Elem; 3]> {
    let e = elems(f, v)?;
    <[F::Elem; 3]>::try_from(e).map_err(|e| Error::DimensionMismatch(format!("expected 3 entries, got {}", e.len())))
}

pub fn matrix<F: Field>(f: &F, v: &Value) -> Result<Mat<F::Elem>> {
    let rows = v.as_array().ok_or_else(|| bad("expected a matrix"))?;
    let rows: Vec<Vec<F::Elem>> = rows.iter().map(|r| elems(f, r)).collect::<Result<_>>()?;
    Mat::from_rows(rows).ok_or_else(|| Error::DimensionMismatch("ragged or empty matrix".into()))
}

pub fn matrix_json<F: Field>(f: &F, m: &Mat<F::Elem>) -> Value {
    Value::Array((0..m.rows).map(|i| Value::Array(m.row(i).iter().map(|e| elem_json(f, e)).collect())).collect())
}

fn m3<F: Field>(f: &F, v: &Value) -> Result<[[F::Elem; 3]; 3]> {
    let m = matrix(f, v)?;
    if (m.rows, m.cols) != (3, 3) {
        return Err(Error::DimensionMismatch("expected a 3x3 matrix".into()));
    }
    Ok(std::array::from_fn(|i| std::array::from_fn(|j| m.get(i, j).clone())))
}

fn m3_json<F: Field>(f: &F, m: &[[F::Elem; 3]; 3]) -> Value {
    Value::Array(m.iter().map(|r| Value::Array(r.iter().map(|e| elem_json(f, e)).collect())).collect())
}

/// A point of X from one of three encodings:
/// `{"wedge": [20 coefficients]}` in the order of `TRIPLES`,
/// `{"terms": [[c, [i, j, l]], ...]}` with 1-based indices, or
/// `{"x0", "y0", "A", "B"}` with optional `"display_sign": true` meaning
/// the scalars given are the e123 and e456 coefficients `-x0`, `-y0`.
pub fn point<F: Field>(f: &F, v: &Value) -> Result<XTuple<F::Elem>> {
    let v = v.get("x").unwrap_or(v);
    if let Some(w) = v.get("wedge") {
        let c = elems(f, w)?;
        if c.len() != 20 {
            return Err(Error::DimensionMismatch(format!("wedge vector needs 20 coordinates, got {}", c.len())));
        }
        return checked(f, WedgeVector { coords: c });
    }
    if let Some(terms) = v.get("terms") {
        let mut w = WedgeVector::zero(f);
        for t in terms.as_array().ok_or_else(|| bad("terms must be an array"))? {
            let pair = t.as_array().filter(|p| p.len() == 2).ok_or_else(|| bad("term must be [coef, [i, j, l]]"))?;
            let idx = pair[1].as_array().filter(|p| p.len() == 3).ok_or_else(|| bad("term index must have 3 entries"))?;
            let mut ix = [0usize; 3];
            for (k, e) in idx.iter().enumerate() {
                let n = e.as_u64().filter(|n| (1..=6).contains(n)).ok_or_else(|| bad("indices run from 1 to 6"))?;
                ix[k] = n as usize - 1;
            }
            if triple_index(ix).is_none() {
                return Err(bad(format!("repeated index in {ix:?}")));
            }
            w.add_term(f, ix, &elem(f, &pair[0])?);
        }
        return checked(f, w);
    }
    let field = |k: &str| v.get(k).ok_or_else(|| bad(format!("missing field {k:?}")));
    let mut t = XTuple { x0: elem(f, field("x0")?)?, y0: elem(f, field("y0")?)?, a: m3(f, field("A")?)?, b: m3(f, field("B")?)? };
    if v.get("display_sign").and_then(Value::as_bool).unwrap_or(false) {
        t.x0 = f.neg(&t.x0);
        t.y0 = f.neg(&t.y0);
    }
    if !t.is_symmetric() {
        return Err(Error::NotInX);
    }
    Ok(t)
}

fn checked<F: Field>(f: &F, w: WedgeVector<F::Elem>) -> Result<XTuple<F::Elem>> {
    if !in_x(f, &w) {
        return Err(Error::NotInX);
    }
    to_tuple(f, &w)
}

pub fn tuple_json<F: Field>(f: &F, t: &XTuple<F::Elem>) -> Value {
    json!({
        "x0": elem_json(f, &t.x0),
        "y0": elem_json(f, &t.y0),
        "A": m3_json(f, &t.a),
        "B": m3_json(f, &t.b),
    })
}

pub fn wedge_json<F: Field>(f: &F, w: &WedgeVector<F::Elem>) -> Value {
    let terms: Vec<Value> = TRIPLES
        .iter()
        .zip(&w.coords)
        .filter(|(_, c)| !f.is_zero(c))
        .map(|(t, c)| json!([elem_json(f, c), [t[0] + 1, t[1] + 1, t[2] + 1]]))
        .collect();
    json!({ "terms": terms })
}

pub fn descriptor<F: Field>(f: &F, v: &Value) -> Result<GeneratorDescriptor<F::Elem>> {
    if v.as_str() == Some("Swap") {
        return Ok(GeneratorDescriptor::Swap);
    }
    let obj = v.as_object().filter(|o| o.len() == 1).ok_or_else(|| Error::InvalidDescriptor(v.to_string()))?;
    let (k, a) = obj.iter().next().unwrap();
    Ok(match k.as_str() {
        "BlockDiag" => GeneratorDescriptor::BlockDiag(matrix(f, a)?),
        "GammaMove" => GeneratorDescriptor::GammaMove(matrix(f, a)?),
        "BetaMove" => GeneratorDescriptor::BetaMove(matrix(f, a)?),
        "TorusScale" => GeneratorDescriptor::TorusScale(elems3(f, a)?),
        "ScaleX0" => GeneratorDescriptor::ScaleX0(elem(f, a)?),
        "Dilation" => GeneratorDescriptor::Dilation(elem(f, a)?),
        "Swap" => GeneratorDescriptor::Swap,
        _ => return Err(Error::InvalidDescriptor(k.clone())),
    })
}

pub fn descriptor_json<F: Field>(f: &F, d: &GeneratorDescriptor<F::Elem>) -> Value {
    match d {
        GeneratorDescriptor::BlockDiag(m) => json!({ "BlockDiag": matrix_json(f, m) }),
        GeneratorDescriptor::GammaMove(m) => json!({ "GammaMove": matrix_json(f, m) }),
        GeneratorDescriptor::BetaMove(m) => json!({ "BetaMove": matrix_json(f, m) }),
        GeneratorDescriptor::Swap => json!("Swap"),
        GeneratorDescriptor::TorusScale(t) => json!({ "TorusScale": t.iter().map(|e| elem_json(f, e)).collect::<Vec<_>>() }),
        GeneratorDescriptor::ScaleX0(a) => json!({ "ScaleX0": elem_json(f, a) }),
        GeneratorDescriptor::Dilation(a) => json!({ "Dilation": elem_json(f, a) }),
    }
}

pub fn word_json<F: Field>(f: &F, w: &[GeneratorDescriptor<F::Elem>]) -> Value {
    Value::Array(w.iter().map(|d| descriptor_json(f, d)).collect())
}

pub fn trace_json<F: Field>(f: &F, t: &ReductionTrace<F::Elem>) -> Value {
    json!({
        "word": word_json(f, &t.word),
        "canonical": tuple_json(f, &t.canonical),
        "pivot_attempts": t.pivot_attempts,
    })
}

pub fn class_json(c: &SquareClass) -> Value {
    Value::String(c.0.to_string())
}

pub fn form_json(inv: &FormInvariants) -> Value {
    json!({
        "dim": inv.dim,
        "rank": inv.rank,
        "det": class_json(&inv.det),
        "disc": class_json(&inv.disc),
        "signature": inv.signature.map(|(p, n)| json!([p, n])),
        "hasse_negative": inv.hasse_negative.as_ref().map(|v| v.iter().map(|p| p.to_string()).collect::<Vec<_>>()),
    })
}

pub fn algebra_json(a: &QuadraticAlgebra) -> Value {
    match a {
        QuadraticAlgebra::Split => json!("split"),
        QuadraticAlgebra::Field(c) => json!({ "sqrt": class_json(c) }),
    }
}

pub fn quaternion_json<F: Field>(f: &F, q: &QuaternionClass<F::Elem>) -> Value {
    json!({
        "split": q.split,
        "ternary": form_json(&q.ternary),
        "ramified": q.ramified.as_ref().map(|v| v.iter().map(|p| p.to_string()).collect::<Vec<_>>()),
        "pfister": q.pfister.as_ref().map(|p| p.slots.iter().map(|e| elem_json(f, e)).collect::<Vec<_>>()),
    })
}

pub fn invariant_json<F: Field>(f: &F, inv: &OrbitInvariant<F::Elem>) -> Value {
    let mut m = Map::new();
    match inv {
        OrbitInvariant::X0 => {
            m.insert("stratum".into(), json!("X0"));
        }
        OrbitInvariant::X1 { class } => {
            m.insert("stratum".into(), json!("X1"));
            m.insert("class".into(), class_json(class));
        }
        OrbitInvariant::X2 { quaternion } => {
            m.insert("stratum".into(), json!("X2"));
            m.insert("quaternion".into(), quaternion_json(f, quaternion));
        }
        OrbitInvariant::X3 { i, algebra, hermitian_trace, octonion, octonion_split } => {
            m.insert("stratum".into(), json!("X3"));
            m.insert("i".into(), elem_json(f, i));
            m.insert("algebra".into(), algebra_json(algebra));
            m.insert("hermitian_trace".into(), form_json(hermitian_trace));
            m.insert("octonion".into(), form_json(octonion));
            m.insert("octonion_split".into(), json!(octonion_split));
        }
    }
    Value::Object(m)
}
