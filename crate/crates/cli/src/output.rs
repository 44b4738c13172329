//! JSON and CSV emission. Floats are written with 17 significant digits so
//! every value round-trips to the same double.

use std::fmt::Write as _;

use serde_json::{Map, Number, Value};

use hartmann_core::QuasiPolynomial;

pub fn fmt_float(x: f64) -> String {
    if x.is_finite() {
        format!("{x:.16e}")
    } else if x.is_nan() {
        "nan".to_string()
    } else if x > 0.0 {
        "inf".to_string()
    } else {
        "-inf".to_string()
    }
}

pub fn num(x: f64) -> Value {
    if !x.is_finite() {
        return Value::Null;
    }
    Value::Number(fmt_float(x).parse::<Number>().expect("formatted float is valid JSON"))
}

pub fn int(x: i64) -> Value {
    Value::Number(Number::from(x))
}

pub fn text(s: &str) -> Value {
    Value::String(s.to_string())
}

/// `{"alpha": .., "kappa": .., "coeffs": [[k, c], ...]}`.
pub fn quasi_polynomial(f: &QuasiPolynomial) -> Value {
    let mut m = Map::new();
    m.insert("alpha".into(), num(f.alpha()));
    m.insert("kappa".into(), num(f.kappa()));
    m.insert(
        "coeffs".into(),
        Value::Array(
            f.terms()
                .map(|(k, c)| Value::Array(vec![int(k as i64), num(c)]))
                .collect(),
        ),
    );
    Value::Object(m)
}

pub struct Meta {
    pub argv: Vec<String>,
}

impl Meta {
    fn json(&self) -> Value {
        let mut m = Map::new();
        m.insert("tool".into(), text(env!("CARGO_PKG_NAME")));
        m.insert("version".into(), text(env!("CARGO_PKG_VERSION")));
        m.insert("argv".into(), Value::Array(self.argv.iter().map(|a| text(a)).collect()));
        Value::Object(m)
    }

    fn csv_line(&self) -> String {
        format!(
            "# tool={} version={} argv={}\n",
            env!("CARGO_PKG_NAME"),
            env!("CARGO_PKG_VERSION"),
            self.argv.join(" ")
        )
    }
}

pub fn json_document(command: &str, params: Map<String, Value>, results: Vec<Value>, meta: Option<&Meta>) -> String {
    let mut doc = Map::new();
    doc.insert("command".into(), text(command));
    if let Some(meta) = meta {
        doc.insert("meta".into(), meta.json());
    }
    doc.insert("params".into(), Value::Object(params));
    doc.insert("results".into(), Value::Array(results));
    let mut out = serde_json::to_string_pretty(&Value::Object(doc)).expect("JSON values serialize");
    out.push('\n');
    out
}

/// CSV cell for a JSON scalar.
fn cell(v: &Value) -> String {
    match v {
        Value::Null => "nan".into(),
        Value::String(s) if s.contains([',', '"', '\n']) => format!("\"{}\"", s.replace('"', "\"\"")),
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

pub fn csv_document(header: &[&str], rows: &[Vec<Value>], meta: Option<&Meta>) -> String {
    let mut out = String::new();
    if let Some(meta) = meta {
        out.push_str(&meta.csv_line());
    }
    out.push_str(&header.join(","));
    out.push('\n');
    for row in rows {
        let cells: Vec<String> = row.iter().map(cell).collect();
        let _ = writeln!(out, "{}", cells.join(","));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seventeen_digits() {
        assert_eq!(fmt_float(-0.125), "-1.2500000000000000e-1");
        let x = 0.1 + 0.2;
        assert_eq!(fmt_float(x).parse::<f64>().unwrap(), x);
        assert_eq!(num(f64::INFINITY), Value::Null);
        let two = num(2.0).to_string();
        assert_eq!(two.parse::<f64>().unwrap(), 2.0);
        assert_eq!(two.split('e').next().unwrap().len(), 18);
    }

    #[test]
    fn csv_rows() {
        let doc = csv_document(&["a", "b"], &[vec![int(1), num(0.5)]], None);
        assert_eq!(doc, "a,b\n1,5.0000000000000000e-1\n");
        let quoted = csv_document(&["a"], &[vec![text("x,y")]], None);
        assert_eq!(quoted, "a\n\"x,y\"\n");
    }
}
