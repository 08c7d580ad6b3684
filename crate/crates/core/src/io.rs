//! JSON formats for matrices, vectors, measures, functionals and forms, and a
//! deterministic writer (fixed field order, 17 significant digits).
//!
//! Matrix: `{"n": rows, "entries": [[x, ...], ...]}` row-major, each entry a
//! number or an `[re, im]` pair. Measure: `{"atoms": [...], "values": [...]}`.
//! Functional: `{"algebra": {"kind": "commutative", "n": n}, "weights": [...]}`
//! or `{"algebra": {"kind": "full_matrix", "k": k}, "density": <matrix>}`.
//! Form: `{"gram": <matrix>}`.

use std::io;

use serde::Serialize;
use serde_json::{json, ser::Formatter, Map, Value};

use crate::adapters::{AlgebraDescriptor, AlgebraKind, FormSpec, FunctionalData, FunctionalSpec, MeasureTable};
use crate::error::{Error, Result};
use crate::linalg::{c, CMatrix, CVector, C64};
use crate::psd::make_psd;
use crate::tolerance::Tolerance;

fn parse_err(msg: impl Into<String>) -> Error {
    Error::Parse(msg.into())
}

pub fn parse_value(text: &str) -> Result<Value> {
    serde_json::from_str(text).map_err(|e| parse_err(format!("invalid JSON: {e}")))
}

fn scalar(v: &Value) -> Result<C64> {
    match v {
        Value::Number(x) => x
            .as_f64()
            .map(|re| c(re, 0.0))
            .ok_or_else(|| parse_err("number out of range")),
        Value::Array(parts) if parts.len() == 2 => {
            let re = parts[0].as_f64().ok_or_else(|| parse_err("real part must be a number"))?;
            let im = parts[1].as_f64().ok_or_else(|| parse_err("imaginary part must be a number"))?;
            Ok(c(re, im))
        }
        other => Err(parse_err(format!("expected a number or [re, im], got {other}"))),
    }
}

pub fn matrix_from_value(v: &Value) -> Result<CMatrix> {
    let rows = v
        .get("entries")
        .and_then(Value::as_array)
        .ok_or_else(|| parse_err("matrix object needs an \"entries\" array"))?;
    let ncols = match rows.first() {
        Some(r) => r.as_array().ok_or_else(|| parse_err("matrix rows must be arrays"))?.len(),
        None => 0,
    };
    if let Some(n) = v.get("n") {
        let n = n.as_u64().ok_or_else(|| parse_err("\"n\" must be a nonnegative integer"))?;
        if n as usize != rows.len() {
            return Err(parse_err(format!("\"n\" is {n} but there are {} rows", rows.len())));
        }
    }
    let mut m = CMatrix::zeros(rows.len(), ncols);
    for (i, row) in rows.iter().enumerate() {
        let row = row.as_array().ok_or_else(|| parse_err("matrix rows must be arrays"))?;
        if row.len() != ncols {
            return Err(parse_err(format!("row {i} has {} entries, expected {ncols}", row.len())));
        }
        for (j, x) in row.iter().enumerate() {
            m[(i, j)] = scalar(x)?;
        }
    }
    Ok(m)
}

pub fn parse_matrix(text: &str) -> Result<CMatrix> {
    matrix_from_value(&parse_value(text)?)
}

pub fn vector_from_value(v: &Value) -> Result<CVector> {
    let items = v.as_array().ok_or_else(|| parse_err("vector must be a JSON array"))?;
    let entries = items.iter().map(scalar).collect::<Result<Vec<_>>>()?;
    Ok(CVector::from_vec(entries))
}

pub fn parse_vector(text: &str) -> Result<CVector> {
    vector_from_value(&parse_value(text)?)
}

pub fn measure_from_value(v: &Value) -> Result<MeasureTable> {
    let atoms = v
        .get("atoms")
        .and_then(Value::as_array)
        .ok_or_else(|| parse_err("measure needs an \"atoms\" array"))?
        .iter()
        .map(|a| a.as_str().map(str::to_owned).ok_or_else(|| parse_err("atom labels must be strings")))
        .collect::<Result<Vec<_>>>()?;
    let values = v
        .get("values")
        .and_then(Value::as_array)
        .ok_or_else(|| parse_err("measure needs a \"values\" array"))?
        .iter()
        .map(|x| x.as_f64().ok_or_else(|| parse_err("measure values must be numbers")))
        .collect::<Result<Vec<_>>>()?;
    MeasureTable::new(atoms, values)
}

pub fn parse_measure(text: &str) -> Result<MeasureTable> {
    measure_from_value(&parse_value(text)?)
}

pub fn functional_from_value(v: &Value, tol: &Tolerance) -> Result<FunctionalSpec> {
    let alg = v.get("algebra").ok_or_else(|| parse_err("functional needs an \"algebra\" object"))?;
    let size = |key: &str| -> Result<usize> {
        alg.get(key)
            .and_then(Value::as_u64)
            .map(|x| x as usize)
            .ok_or_else(|| parse_err(format!("algebra needs integer \"{key}\"")))
    };
    let (algebra, data) = match alg.get("kind").and_then(Value::as_str) {
        Some("commutative") => {
            let weights = v
                .get("weights")
                .and_then(Value::as_array)
                .ok_or_else(|| parse_err("commutative functional needs \"weights\""))?
                .iter()
                .map(|x| x.as_f64().ok_or_else(|| parse_err("weights must be numbers")))
                .collect::<Result<Vec<_>>>()?;
            (AlgebraDescriptor::commutative(size("n")?)?, FunctionalData::Weights(weights))
        }
        Some("full_matrix") => {
            let density = v.get("density").ok_or_else(|| parse_err("full_matrix functional needs \"density\""))?;
            (AlgebraDescriptor::full_matrix(size("k")?)?, FunctionalData::Density(matrix_from_value(density)?))
        }
        _ => return Err(parse_err("algebra kind must be \"commutative\" or \"full_matrix\"")),
    };
    crate::adapters::functional_from_data(&algebra, data, tol)
}

pub fn parse_functional(text: &str, tol: &Tolerance) -> Result<FunctionalSpec> {
    functional_from_value(&parse_value(text)?, tol)
}

pub fn form_from_value(v: &Value, tol: &Tolerance) -> Result<FormSpec> {
    let gram = v.get("gram").ok_or_else(|| parse_err("form needs a \"gram\" matrix"))?;
    Ok(FormSpec::new(make_psd(&matrix_from_value(gram)?, tol)?))
}

pub fn parse_form(text: &str, tol: &Tolerance) -> Result<FormSpec> {
    form_from_value(&parse_value(text)?, tol)
}

fn scalar_value(z: C64) -> Value {
    json!([z.re, z.im])
}

pub fn matrix_to_value(m: &CMatrix) -> Value {
    let rows: Vec<Value> = (0..m.nrows())
        .map(|i| Value::Array((0..m.ncols()).map(|j| scalar_value(m[(i, j)])).collect()))
        .collect();
    json!({ "n": m.nrows(), "entries": rows })
}

pub fn vector_to_value(v: &CVector) -> Value {
    Value::Array(v.iter().map(|&z| scalar_value(z)).collect())
}

pub fn measure_to_value(m: &MeasureTable) -> Value {
    json!({ "atoms": m.atoms(), "values": m.values() })
}

pub fn functional_to_value(f: &FunctionalSpec) -> Value {
    let mut out = Map::new();
    let algebra = match f.algebra.kind() {
        AlgebraKind::Commutative { n } => json!({ "kind": "commutative", "n": n }),
        AlgebraKind::FullMatrix { k } => json!({ "kind": "full_matrix", "k": k }),
    };
    out.insert("algebra".into(), algebra);
    match &f.data {
        FunctionalData::Weights(w) => out.insert("weights".into(), json!(w)),
        FunctionalData::Density(rho) => out.insert("density".into(), matrix_to_value(rho)),
    };
    out.insert("gram".into(), matrix_to_value(f.gram.entries()));
    out.insert("cyclic_norm".into(), json!(f.cyclic_norm));
    Value::Object(out)
}

pub fn form_to_value(f: &FormSpec) -> Value {
    json!({ "gram": matrix_to_value(f.gram().entries()) })
}

pub fn tolerance_to_value(t: &Tolerance) -> Value {
    serde_json::to_value(t).expect("tolerance serializes")
}

pub fn to_value<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).unwrap_or(Value::Null)
}

/// Writes every float with 17 significant digits in exponent form.
struct FixedDigits;

impl Formatter for FixedDigits {
    fn write_f64<W: ?Sized + io::Write>(&mut self, writer: &mut W, value: f64) -> io::Result<()> {
        if value.is_finite() {
            write!(writer, "{value:.16e}")
        } else {
            writer.write_all(b"null")
        }
    }
}

/// Deterministic single-line serialization.
pub fn to_deterministic_string(v: &Value) -> String {
    let mut buf = Vec::new();
    let mut ser = serde_json::Serializer::with_formatter(&mut buf, FixedDigits);
    v.serialize(&mut ser).expect("serializing a Value into memory cannot fail");
    String::from_utf8(buf).expect("serde_json emits UTF-8")
}
