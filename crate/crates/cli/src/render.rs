use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde_json::Value;

/// `r` rounded half away from zero to `digits` decimal places.
pub fn decimal(r: &BigRational, digits: usize) -> String {
    let scale = BigInt::from(10u32).pow(digits as u32);
    let scaled = r.abs() * BigRational::from_integer(scale.clone());
    let (q, rem) = scaled.numer().div_rem(scaled.denom());
    let rounded = if rem * 2 >= *scaled.denom() { q + 1 } else { q };
    let (int, frac) = rounded.div_rem(&scale);
    let sign = if r.is_negative() && !(&int + &frac).is_zero() {
        "-"
    } else {
        ""
    };
    if digits == 0 {
        format!("{sign}{int}")
    } else {
        format!("{sign}{int}.{:0>digits$}", frac.to_string())
    }
}

fn cell(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "-".into(),
        Value::Object(o) if o.len() == 2 && o.contains_key("num") && o.contains_key("den") => {
            format!("{}/{}", cell(&o["num"]), cell(&o["den"]))
        }
        other => other.to_string(),
    }
}

/// One `key  value` line per top-level field.
pub fn table(v: &Value) -> String {
    match v {
        Value::Object(o) => {
            let width = o.keys().map(String::len).max().unwrap_or(0);
            o.iter()
                .map(|(k, x)| format!("{k:<width$}  {}\n", cell(x)))
                .collect()
        }
        other => format!("{}\n", cell(other)),
    }
}
