//! Serde helpers that write exact numbers as decimal or fraction strings.

use num_rational::BigRational;
use serde::ser::SerializeSeq;
use serde::Serializer;

pub fn rationals<S: Serializer>(values: &[BigRational], serializer: S) -> Result<S::Ok, S::Error> {
    let mut seq = serializer.serialize_seq(Some(values.len()))?;
    for v in values {
        seq.serialize_element(&v.to_string())?;
    }
    seq.end()
}

pub fn rational<S: Serializer>(value: &BigRational, serializer: S) -> Result<S::Ok, S::Error> {
    serializer.serialize_str(&value.to_string())
}

pub fn display<T: std::fmt::Display, S: Serializer>(value: &T, serializer: S) -> Result<S::Ok, S::Error> {
    serializer.collect_str(value)
}

pub fn displays<T: std::fmt::Display, S: Serializer>(values: &[T], serializer: S) -> Result<S::Ok, S::Error> {
    let mut seq = serializer.serialize_seq(Some(values.len()))?;
    for v in values {
        seq.serialize_element(&v.to_string())?;
    }
    seq.end()
}

pub fn opt_rationals<S: Serializer>(values: &Option<Vec<BigRational>>, serializer: S) -> Result<S::Ok, S::Error> {
    match values {
        Some(v) => rationals(v, serializer),
        None => serializer.serialize_none(),
    }
}

pub fn rational_rows<S: Serializer>(rows: &[Vec<BigRational>], serializer: S) -> Result<S::Ok, S::Error> {
    let text: Vec<Vec<String>> = rows.iter().map(|r| r.iter().map(ToString::to_string).collect()).collect();
    serde::Serialize::serialize(&text, serializer)
}
