//! Serializers that write big integers as plain JSON numbers.

use std::fmt::Display;
use std::str::FromStr;

use serde::ser::{SerializeSeq, Serializer};
use serde::Serialize;

fn number<T: Display>(v: &T) -> serde_json::Number {
    serde_json::Number::from_str(&v.to_string()).expect("integers are valid JSON numbers")
}

pub fn big<T: Display, S: Serializer>(v: &T, s: S) -> Result<S::Ok, S::Error> {
    number(v).serialize(s)
}

pub fn big_ints<T: Display, S: Serializer>(v: &[T], s: S) -> Result<S::Ok, S::Error> {
    let mut seq = s.serialize_seq(Some(v.len()))?;
    for x in v {
        seq.serialize_element(&number(x))?;
    }
    seq.end()
}
