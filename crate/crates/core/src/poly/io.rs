//! Polynomial input formats.
//!
//! JSON: `{"coeffs": [[re, im], ...]}` in ascending degree, entries either
//! JSON numbers or rational texts such as `"-3/4"`.
//!
//! Plain text: one `re im` pair per line; blank lines and `#` comments are
//! skipped.

use num_complex::Complex64;
use num_rational::BigRational;
use serde_json::Value;
use thiserror::Error;

use super::{ComplexPoly, ExactPoly, Polynomial};
use crate::gaussian_rational::{parse_rational, ratio_to_f64, GaussianRational};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PolyFormat {
    Json,
    Text,
}

impl PolyFormat {
    /// JSON when the first non-blank character opens an object.
    pub fn sniff(input: &str) -> Self {
        if input.trim_start().starts_with('{') {
            PolyFormat::Json
        } else {
            PolyFormat::Text
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyParseError {
    #[error("line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("coefficient {index}: {message}")]
    Entry { index: usize, message: String },
    #[error("no coefficients given")]
    Empty,
}

#[derive(Debug, Clone)]
enum Number {
    Float(f64),
    Exact(BigRational),
}

impl Number {
    fn to_f64(&self) -> f64 {
        match self {
            Number::Float(x) => *x,
            Number::Exact(q) => ratio_to_f64(q),
        }
    }

    fn to_exact(&self) -> Option<BigRational> {
        match self {
            Number::Float(x) => BigRational::from_float(*x),
            Number::Exact(q) => Some(q.clone()),
        }
    }
}

fn parse_token(tok: &str) -> Result<Number, String> {
    if let Ok(x) = tok.parse::<f64>() {
        if !tok.contains('/') {
            if !x.is_finite() {
                return Err(format!("non-finite value {tok:?}"));
            }
            return Ok(Number::Float(x));
        }
    }
    parse_rational(tok).map(Number::Exact)
}

fn json_number(v: &Value) -> Result<Number, String> {
    match v {
        Value::Number(n) => {
            if let Some(i) = n.as_i64() {
                Ok(Number::Exact(BigRational::from_integer(i.into())))
            } else {
                n.as_f64()
                    .map(Number::Float)
                    .ok_or_else(|| format!("unrepresentable number {n}"))
            }
        }
        Value::String(s) => parse_rational(s).map(Number::Exact),
        other => Err(format!("expected a number or rational text, found {other}")),
    }
}

fn parse_json(input: &str) -> Result<Vec<[Number; 2]>, PolyParseError> {
    let doc: Value = serde_json::from_str(input).map_err(|e| PolyParseError::Syntax {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    let Some(coeffs) = doc.get("coeffs").and_then(Value::as_array) else {
        return Err(PolyParseError::Syntax {
            line: 1,
            column: 1,
            message: "expected an object with a \"coeffs\" array".into(),
        });
    };
    coeffs
        .iter()
        .enumerate()
        .map(|(index, pair)| {
            let entry = |message: String| PolyParseError::Entry { index, message };
            match pair.as_array().map(Vec::as_slice) {
                Some([re, im]) => Ok([
                    json_number(re).map_err(entry)?,
                    json_number(im).map_err(entry)?,
                ]),
                _ => Err(entry(format!("expected a [re, im] pair, found {pair}"))),
            }
        })
        .collect()
}

fn parse_text(input: &str) -> Result<Vec<[Number; 2]>, PolyParseError> {
    let mut out = Vec::new();
    for (lineno, raw) in input.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("");
        if line.trim().is_empty() {
            continue;
        }
        let mut fields = Vec::new();
        let mut rest = line;
        while let Some(start) = rest.find(|c: char| !c.is_whitespace()) {
            let tail = &rest[start..];
            let len = tail.find(char::is_whitespace).unwrap_or(tail.len());
            let column = line.len() - rest.len() + start + 1;
            fields.push((column, &tail[..len]));
            rest = &tail[len..];
        }
        let syntax = |column: usize, message: String| PolyParseError::Syntax {
            line: lineno + 1,
            column,
            message,
        };
        if fields.len() != 2 {
            return Err(syntax(
                1,
                format!("expected two fields \"re im\", found {}", fields.len()),
            ));
        }
        let re = parse_token(fields[0].1).map_err(|m| syntax(fields[0].0, m))?;
        let im = parse_token(fields[1].1).map_err(|m| syntax(fields[1].0, m))?;
        out.push([re, im]);
    }
    Ok(out)
}

fn parse_entries(input: &str) -> Result<Vec<[Number; 2]>, PolyParseError> {
    let entries = match PolyFormat::sniff(input) {
        PolyFormat::Json => parse_json(input)?,
        PolyFormat::Text => parse_text(input)?,
    };
    if entries.is_empty() {
        return Err(PolyParseError::Empty);
    }
    Ok(entries)
}

/// Parses either format into a floating-point polynomial.
pub fn parse_polynomial(input: &str) -> Result<ComplexPoly, PolyParseError> {
    let entries = parse_entries(input)?;
    Ok(Polynomial::new(
        entries
            .iter()
            .map(|[re, im]| Complex64::new(re.to_f64(), im.to_f64()))
            .collect(),
    ))
}

/// Parses either format into an exact polynomial; decimal inputs are
/// converted to the rational they denote.
pub fn parse_polynomial_exact(input: &str) -> Result<ExactPoly, PolyParseError> {
    let entries = parse_entries(input)?;
    let coeffs = entries
        .iter()
        .enumerate()
        .map(|(index, [re, im])| match (re.to_exact(), im.to_exact()) {
            (Some(re), Some(im)) => Ok(GaussianRational::new(re, im)),
            _ => Err(PolyParseError::Entry {
                index,
                message: "not a finite number".into(),
            }),
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Polynomial::new(coeffs))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_numbers() {
        let p = parse_polynomial(r#"{"coeffs":[[1,0],[0,0],[1,0]]}"#).unwrap();
        assert_eq!(p, ComplexPoly::from_real(&[1.0, 0.0, 1.0]));
    }

    #[test]
    fn json_rational_texts() {
        let p = parse_polynomial_exact(r#"{"coeffs":[["-7/16","3/2"],["1","0"]]}"#).unwrap();
        assert_eq!(p.coeffs()[0], GaussianRational::from_ratios(-7, 16, 3, 2));
        let f = parse_polynomial(r#"{"coeffs":[["1/4", 0.5],[1, 0]]}"#).unwrap();
        assert_eq!(f.coeffs()[0], Complex64::new(0.25, 0.5));
    }

    #[test]
    fn text_form() {
        let p = parse_polynomial("# z^2 - 2\n-2 0\n\n0 0\n1 0\n").unwrap();
        assert_eq!(p, ComplexPoly::from_real(&[-2.0, 0.0, 1.0]));
        let e = parse_polynomial_exact("1/3 -1/2\n1 0").unwrap();
        assert_eq!(e.coeffs()[0], GaussianRational::from_ratios(1, 3, -1, 2));
    }

    #[test]
    fn text_errors_carry_positions() {
        let err = parse_polynomial("1 0\n2 x\n").unwrap_err();
        assert_eq!(
            err,
            PolyParseError::Syntax {
                line: 2,
                column: 3,
                message: "not a number: \"x\"".into()
            }
        );
        assert!(matches!(
            parse_polynomial("1 2 3"),
            Err(PolyParseError::Syntax { line: 1, .. })
        ));
        assert!(matches!(
            parse_polynomial("1 nan"),
            Err(PolyParseError::Syntax {
                line: 1,
                column: 3,
                ..
            })
        ));
    }

    #[test]
    fn json_errors_carry_positions() {
        match parse_polynomial("{\"coeffs\": [[1, 0],\n [2, }") {
            Err(PolyParseError::Syntax { line, .. }) => assert_eq!(line, 2),
            other => panic!("{other:?}"),
        }
        assert_eq!(
            parse_polynomial(r#"{"coeffs":[[1,0],[true,0]]}"#),
            Err(PolyParseError::Entry {
                index: 1,
                message: "expected a number or rational text, found true".into()
            })
        );
        assert!(matches!(
            parse_polynomial(r#"{"coeffs":[[1,0,0]]}"#),
            Err(PolyParseError::Entry { index: 0, .. })
        ));
        assert!(matches!(
            parse_polynomial(r#"{"c":[]}"#),
            Err(PolyParseError::Syntax { .. })
        ));
        assert_eq!(
            parse_polynomial(r#"{"coeffs":[]}"#),
            Err(PolyParseError::Empty)
        );
        assert_eq!(
            parse_polynomial("  \n# nothing\n"),
            Err(PolyParseError::Empty)
        );
    }
}
