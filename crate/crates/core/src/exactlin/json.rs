//! Matrices as JSON: an array of rows, each an array of `"p/q"` strings.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use serde_json::Value;

use super::{LinAlgError, Matrix};

pub fn format_rational(q: &BigRational) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

/// Accepts `"p/q"` or a bare integer `"p"`.
pub fn parse_rational(s: &str) -> Result<BigRational, LinAlgError> {
    let s = s.trim();
    let bad = || LinAlgError::Parse(format!("not an exact rational: {s:?}"));
    let (p, q) = match s.split_once('/') {
        Some((p, q)) => (
            p.trim().parse::<BigInt>().map_err(|_| bad())?,
            q.trim().parse::<BigInt>().map_err(|_| bad())?,
        ),
        None => (s.parse::<BigInt>().map_err(|_| bad())?, BigInt::one()),
    };
    if q == BigInt::from(0) {
        return Err(LinAlgError::Parse(format!("zero denominator in {s:?}")));
    }
    Ok(BigRational::new(p, q))
}

pub fn vector_to_json(v: &[BigRational]) -> Value {
    Value::Array(
        v.iter()
            .map(|x| Value::String(format_rational(x)))
            .collect(),
    )
}

pub fn matrix_to_json(m: &Matrix<BigRational>) -> Value {
    Value::Array(m.row_vectors().map(vector_to_json).collect())
}

pub fn matrix_from_json(value: &Value) -> Result<Matrix<BigRational>, LinAlgError> {
    let rows = value
        .as_array()
        .ok_or_else(|| LinAlgError::Parse("matrix must be an array of rows".into()))?;
    let parsed = rows
        .iter()
        .map(|row| {
            row.as_array()
                .ok_or_else(|| LinAlgError::Parse("row must be an array".into()))?
                .iter()
                .map(|cell| match cell {
                    Value::String(s) => parse_rational(s),
                    Value::Number(n) if n.is_i64() => {
                        Ok(BigRational::from_integer(n.as_i64().unwrap().into()))
                    }
                    other => Err(LinAlgError::Parse(format!("unexpected entry {other}"))),
                })
                .collect::<Result<Vec<_>, _>>()
        })
        .collect::<Result<Vec<_>, _>>()?;
    Matrix::from_rows(parsed)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn reduced_fraction_strings() {
        let q = parse_rational("6/-4").unwrap();
        assert_eq!(format_rational(&q), "-3/2");
        assert_eq!(format_rational(&parse_rational("5").unwrap()), "5/1");
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("1.5").is_err());
    }

    proptest! {
        #[test]
        fn json_round_trip(entries in proptest::collection::vec((-50i64..50, 1i64..20), 6)) {
            let m = Matrix::from_fn(2, 3, |i, j| {
                let (p, q) = entries[3 * i + j];
                BigRational::new(p.into(), q.into())
            });
            let text = serde_json::to_string(&matrix_to_json(&m)).unwrap();
            let back = matrix_from_json(&serde_json::from_str(&text).unwrap()).unwrap();
            prop_assert_eq!(back, m);
        }
    }
}
