//! Exact and approximate values as JSON. Everything numeric is a string so
//! no precision is lost to a consumer's float parser.

use serde_json::{json, Value};

use crate::exactnum::{ApproxScalar, Rational, Surd};

pub fn rational_json(value: &Rational) -> Value {
    json!({ "num": value.numer().to_string(), "den": value.denom().to_string() })
}

pub fn exact_json(value: &Surd, digits: u32) -> Value {
    json!({
        "coefficient": rational_json(value.coefficient()),
        "radicand": value.radicand().to_string(),
        "text": value.to_string(),
        "decimal": value.approx(digits).to_string(),
    })
}

pub fn approx_json(value: &ApproxScalar) -> Value {
    Value::String(value.to_string())
}
