//! Small shared helpers.

use serde::ser::SerializeSeq;
use serde::Serializer;

const INT_EXACT_BOUND: f64 = 9.0e15;

fn as_exact_int(v: f64) -> Option<i64> {
    if v.fract() == 0.0 && v.abs() < INT_EXACT_BOUND {
        Some(v as i64)
    } else {
        None
    }
}

/// Serialize a real as a JSON integer when it is integral, keeping card
/// documents free of spurious `.0` suffixes.
pub(crate) fn ser_real<S: Serializer>(v: &f64, ser: S) -> Result<S::Ok, S::Error> {
    match as_exact_int(*v) {
        Some(i) => ser.serialize_i64(i),
        None => ser.serialize_f64(*v),
    }
}

pub(crate) fn ser_real_vec<S: Serializer>(values: &[f64], ser: S) -> Result<S::Ok, S::Error> {
    let mut seq = ser.serialize_seq(Some(values.len()))?;
    for v in values {
        match as_exact_int(*v) {
            Some(i) => seq.serialize_element(&i)?,
            None => seq.serialize_element(v)?,
        }
    }
    seq.end()
}

/// `serde_json::Value` counterpart of [`ser_real`].
pub(crate) fn json_real(v: f64) -> serde_json::Value {
    match as_exact_int(v) {
        Some(i) => serde_json::Value::from(i),
        None => serde_json::Value::from(v),
    }
}
