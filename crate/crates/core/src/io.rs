//! Matrix-tuple interchange format:
//!
//! ```text
//! {"k": 2, "n": 2, "field": "rational" | "cyclotomic-N",
//!  "matrices": [[["1", "0"], ["0", "1/2"]], ...]}
//! ```
//!
//! Each matrix is a list of `n` rows, in row-major order. Rational entries
//! are `"p/q"` strings or integers; cyclotomic entries may also be
//! coefficient lists in powers of `zeta_N`.

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::matrep::MatrixTuple;
use crate::matrix::Matrix;
use crate::scalar::{parse_rational, Cyclotomic, Field, Rational, ScalarJson};

/// Scalar field tag of a tuple file.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FieldTag {
    Rational,
    Cyclotomic(u64),
}

impl FieldTag {
    pub fn parse(s: &str) -> Result<Self> {
        if s == "rational" {
            return Ok(FieldTag::Rational);
        }
        s.strip_prefix("cyclotomic-")
            .and_then(|n| n.parse::<u64>().ok())
            .filter(|&n| n >= 1)
            .map(FieldTag::Cyclotomic)
            .ok_or_else(|| Error::Format(format!("unknown field tag `{s}`")))
    }

    pub fn name(&self) -> String {
        match self {
            FieldTag::Rational => "rational".into(),
            FieldTag::Cyclotomic(n) => format!("cyclotomic-{n}"),
        }
    }
}

/// A tuple over whichever field its file declares.
#[derive(Clone, Debug, PartialEq)]
pub enum AnyTuple {
    Rational(MatrixTuple<Rational>),
    Cyclotomic(u64, MatrixTuple<Cyclotomic>),
}

impl AnyTuple {
    pub fn field(&self) -> FieldTag {
        match self {
            AnyTuple::Rational(_) => FieldTag::Rational,
            AnyTuple::Cyclotomic(n, _) => FieldTag::Cyclotomic(*n),
        }
    }

    pub fn k(&self) -> usize {
        match self {
            AnyTuple::Rational(t) => t.k(),
            AnyTuple::Cyclotomic(_, t) => t.k(),
        }
    }

    pub fn n(&self) -> usize {
        match self {
            AnyTuple::Rational(t) => t.n(),
            AnyTuple::Cyclotomic(_, t) => t.n(),
        }
    }

    pub fn to_json(&self) -> Value {
        match self {
            AnyTuple::Rational(t) => tuple_to_json(t, FieldTag::Rational),
            AnyTuple::Cyclotomic(n, t) => tuple_to_json(t, FieldTag::Cyclotomic(*n)),
        }
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let tag = v
            .get("field")
            .and_then(Value::as_str)
            .map(FieldTag::parse)
            .transpose()?
            .unwrap_or(FieldTag::Rational);
        match tag {
            FieldTag::Rational => Ok(AnyTuple::Rational(tuple_from_json(v, |x| {
                rational_entry(x)
            })?)),
            FieldTag::Cyclotomic(n) => Ok(AnyTuple::Cyclotomic(
                n,
                tuple_from_json(v, |x| Cyclotomic::from_json(n, x))?,
            )),
        }
    }
}

fn rational_entry(x: &Value) -> Result<Rational> {
    match x {
        Value::String(s) => parse_rational(s),
        Value::Number(n) => parse_rational(&n.to_string()),
        _ => Err(Error::Format(format!("not a rational entry: {x}"))),
    }
}

pub fn matrix_to_json<F: Field + ScalarJson>(m: &Matrix<F>) -> Value {
    Value::Array(
        (0..m.rows())
            .map(|i| Value::Array(m.row(i).iter().map(ScalarJson::to_json).collect()))
            .collect(),
    )
}

pub fn tuple_to_json<F: Field + ScalarJson>(t: &MatrixTuple<F>, field: FieldTag) -> Value {
    json!({
        "k": t.k(),
        "n": t.n(),
        "field": field.name(),
        "matrices": t.matrices().iter().map(matrix_to_json).collect::<Vec<_>>(),
    })
}

fn tuple_from_json<F: Field>(
    v: &Value,
    entry: impl Fn(&Value) -> Result<F>,
) -> Result<MatrixTuple<F>> {
    let mats = v
        .get("matrices")
        .and_then(Value::as_array)
        .ok_or_else(|| Error::Format("tuple without `matrices` array".into()))?;
    let n = match v.get("n") {
        Some(n) => n
            .as_u64()
            .ok_or_else(|| Error::Format("`n` must be a positive integer".into()))?
            as usize,
        None => mats
            .first()
            .and_then(Value::as_array)
            .map(Vec::len)
            .ok_or_else(|| Error::Format("cannot infer `n` from an empty tuple".into()))?,
    };
    if let Some(k) = v.get("k") {
        let k = k
            .as_u64()
            .ok_or_else(|| Error::Format("`k` must be an integer".into()))? as usize;
        if k != mats.len() {
            return Err(Error::LengthMismatch {
                expected: k,
                found: mats.len(),
            });
        }
    }
    let matrices = mats
        .iter()
        .enumerate()
        .map(|(l, m)| parse_matrix(m, n, &entry).map_err(|e| annotate(e, l)))
        .collect::<Result<Vec<_>>>()?;
    MatrixTuple::new(n, matrices)
}

fn annotate(e: Error, l: usize) -> Error {
    match e {
        Error::Format(msg) => Error::Format(format!("matrix {}: {msg}", l + 1)),
        other => other,
    }
}

fn parse_matrix<F: Field>(
    m: &Value,
    n: usize,
    entry: &impl Fn(&Value) -> Result<F>,
) -> Result<Matrix<F>> {
    let rows = m
        .as_array()
        .filter(|rows| rows.len() == n)
        .ok_or_else(|| Error::Format(format!("matrix must be a list of {n} rows")))?;
    let mut values = Vec::with_capacity(n * n);
    for (i, row) in rows.iter().enumerate() {
        let row = row
            .as_array()
            .filter(|r| r.len() == n)
            .ok_or_else(|| Error::Format(format!("row {} must have {n} entries", i + 1)))?;
        for x in row {
            values.push(entry(x)?);
        }
    }
    let mut it = values.into_iter();
    Ok(Matrix::from_fn(n, n, |_, _| it.next().expect("n^2 entries")))
}
