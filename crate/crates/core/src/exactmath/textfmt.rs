//! Matrix text format: a JSON array of rows whose entries are strings
//! `"p/q"`, `"p"`, or polynomials such as `"T1^2 - 3/2*T2"`.

use serde_json::Value;

use crate::error::{Error, Result};
use crate::exactmath::matrix::{Matrix, PolyMatrix, QMatrix, Ring};
use crate::exactmath::poly::MPoly;
use crate::exactmath::rational::Rat;

/// A matrix read from text, tagged with its coefficient domain.
#[derive(Clone, Debug, PartialEq)]
pub enum RMatrix {
    Rat(QMatrix),
    Poly(PolyMatrix),
}

impl RMatrix {
    pub fn rows(&self) -> usize {
        match self {
            RMatrix::Rat(m) => m.rows(),
            RMatrix::Poly(m) => m.rows(),
        }
    }

    pub fn cols(&self) -> usize {
        match self {
            RMatrix::Rat(m) => m.cols(),
            RMatrix::Poly(m) => m.cols(),
        }
    }
}

fn entry_text(v: &Value) -> Result<String> {
    match v {
        Value::String(s) => Ok(s.clone()),
        Value::Number(n) if n.is_i64() || n.is_u64() => Ok(n.to_string()),
        other => Err(Error::Format(format!(
            "matrix entry must be a string, got {other}"
        ))),
    }
}

fn rows_of(text: &str) -> Result<Vec<Vec<String>>> {
    let v: Value =
        serde_json::from_str(text).map_err(|e| Error::Format(format!("matrix JSON: {e}")))?;
    let Value::Array(rows) = v else {
        return Err(Error::Format("matrix must be a JSON array of rows".into()));
    };
    rows.iter()
        .map(|r| match r {
            Value::Array(es) => es.iter().map(entry_text).collect(),
            _ => Err(Error::Format("each matrix row must be an array".into())),
        })
        .collect()
}

fn build<R: Ring>(rows: Vec<Vec<String>>, parse: impl Fn(&str) -> Result<R>) -> Result<Matrix<R>> {
    let cols = rows.first().map_or(0, |r| r.len());
    let parsed = rows
        .into_iter()
        .map(|r| r.iter().map(|s| parse(s)).collect::<Result<Vec<R>>>())
        .collect::<Result<Vec<_>>>()?;
    Matrix::from_rows(parsed, cols)
}

/// Parses a matrix, choosing the polynomial domain iff some entry mentions a variable.
pub fn parse_matrix(text: &str) -> Result<RMatrix> {
    let rows = rows_of(text)?;
    if rows.iter().flatten().any(|s| s.contains('T')) {
        Ok(RMatrix::Poly(build(rows, |s| s.parse::<MPoly>())?))
    } else {
        Ok(RMatrix::Rat(build(rows, |s| s.parse::<Rat>())?))
    }
}

pub fn parse_rat_matrix(text: &str) -> Result<QMatrix> {
    build(rows_of(text)?, |s| s.parse::<Rat>())
}

/// Entries rendered with `Display` as JSON strings.
pub fn matrix_to_json<R: Ring>(m: &Matrix<R>) -> Value {
    Value::Array(
        (0..m.rows())
            .map(|i| {
                Value::Array(
                    m.row(i)
                        .iter()
                        .map(|x| Value::String(x.to_string()))
                        .collect(),
                )
            })
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reads_rational_and_polynomial_matrices() {
        let m = parse_matrix(r#"[["1/2", "3"], ["-4", "0"]]"#).unwrap();
        let RMatrix::Rat(m) = m else {
            panic!("expected rational")
        };
        assert_eq!(*m.get(0, 0), Rat::new(1, 2));
        let p = parse_matrix(r#"[["T", "1"], ["0", "T^2 + T2"]]"#).unwrap();
        let RMatrix::Poly(p) = p else {
            panic!("expected polynomial")
        };
        assert_eq!(p.get(1, 1).to_string(), "T1^2 + T2");
        assert_eq!(
            matrix_to_json(&p).to_string(),
            r#"[["T1","1"],["0","T1^2 + T2"]]"#
        );
    }

    #[test]
    fn rejects_ragged_and_malformed() {
        assert!(parse_matrix(r#"[["1"], ["1", "2"]]"#).is_err());
        assert!(parse_matrix(r#"{"a": 1}"#).is_err());
        assert!(parse_matrix(r#"[["1/0"]]"#).is_err());
    }
}
