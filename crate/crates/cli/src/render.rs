//! Canonical encodings: exact rationals as `"num/den"`, decimals and complex
//! numbers with an explicit digit count, JSON objects with sorted keys.

use rug::{Complex, Float, Rational};
use serde_json::{json, Value};
use torusasym::exact::precision::format_float;

pub fn rational(r: &Rational) -> Value {
    Value::String(format!("{}/{}", r.numer(), r.denom()))
}

pub fn decimal(x: &Float, digits: u32) -> Value {
    json!({ "value": format_float(x, digits), "digits": digits })
}

pub fn complex(z: &Complex, digits: u32) -> Value {
    json!({
        "re": format_float(z.real(), digits),
        "im": format_float(z.imag(), digits),
        "digits": digits,
    })
}

/// Pretty-printed JSON. `serde_json` maps are ordered by key, so parsing the
/// output and printing it again gives the same bytes.
pub fn to_json(value: &Value) -> String {
    let mut out = serde_json::to_string_pretty(value).expect("JSON values always serialize");
    out.push('\n');
    out
}

/// `\frac{a}{b}`, or the bare integer when `b = 1`.
pub fn tex_rational(r: &Rational) -> String {
    if *r.denom() == 1 {
        r.numer().to_string()
    } else {
        format!("\\frac{{{}}}{{{}}}", r.numer(), r.denom())
    }
}
