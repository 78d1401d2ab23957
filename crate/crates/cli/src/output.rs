use std::io::Write;
use std::time::{SystemTime, UNIX_EPOCH};

use serde_json::{json, Map, Value};

pub struct Context {
    pub reproducible: bool,
}

/// A JSON number with 12 significant digits; magnitudes below 1e-12 are
/// written as zero and non-finite values as null.
pub fn number(v: f64) -> Value {
    if !v.is_finite() {
        return Value::Null;
    }
    if v.abs() < 1e-12 {
        return json!(0.0);
    }
    let rounded: f64 = format!("{v:.11e}").parse().expect("formatted float parses");
    json!(rounded)
}

pub fn numbers(values: &[f64]) -> Value {
    Value::Array(values.iter().map(|&v| number(v)).collect())
}

/// Rewrites every float in `value` through [`number`].
pub fn round_floats(value: Value) -> Value {
    match value {
        Value::Number(n) if n.is_f64() => number(n.as_f64().unwrap_or(f64::NAN)),
        Value::Array(items) => Value::Array(items.into_iter().map(round_floats).collect()),
        Value::Object(map) => {
            Value::Object(map.into_iter().map(|(k, v)| (k, round_floats(v))).collect())
        }
        other => other,
    }
}

/// Prints `{tool_version, command, inputs, [generated_at_unix], ...body}`.
pub fn emit(ctx: &Context, command: &str, inputs: Value, body: Value) {
    let mut out = Map::new();
    out.insert("tool_version".into(), json!(env!("CARGO_PKG_VERSION")));
    out.insert("command".into(), json!(command));
    out.insert("inputs".into(), inputs);
    if !ctx.reproducible {
        let secs = SystemTime::now()
            .duration_since(UNIX_EPOCH)
            .map_or(0, |d| d.as_secs());
        out.insert("generated_at_unix".into(), json!(secs));
    }
    if let Value::Object(fields) = body {
        out.extend(fields);
    }
    write_stdout(&format!(
        "{}\n",
        serde_json::to_string_pretty(&Value::Object(out)).expect("JSON values serialize")
    ));
}

/// Writes to stdout, ignoring a closed pipe.
pub fn write_stdout(text: &str) {
    let mut out = std::io::stdout().lock();
    let _ = out.write_all(text.as_bytes()).and_then(|()| out.flush());
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn twelve_significant_digits() {
        assert_eq!(number(2f64.sqrt()).to_string(), "1.41421356237");
        assert_eq!(number(-1e-15).to_string(), "0.0");
        assert_eq!(number(8.000000000000002).to_string(), "8.0");
        assert_eq!(number(f64::INFINITY), Value::Null);
        assert_eq!(
            round_floats(json!({"a": [0.1234567890123456]})),
            json!({"a": [0.123456789012]})
        );
    }
}
