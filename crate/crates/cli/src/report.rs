//! Report serialization.
//!
//! Taylor coefficient lists omit exact trailing zeros; `cap` gives the full
//! length minus one.
//!
//! Keys keep insertion order and floats use the shortest round-trip form, so
//! identical runs print identical bytes.

use polyq::{Complex64, Component, PolyElement, QuotientElement};
use serde_json::{json, Map, Value};

pub const SCHEMA_VERSION: u64 = 1;

pub fn complex(z: Complex64) -> Value {
    json!([z.re, z.im])
}

pub fn points(zs: &[Complex64]) -> Value {
    Value::Array(zs.iter().map(|&z| complex(z)).collect())
}

fn component(c: &Component) -> Value {
    match c {
        Component::Poly(p) => json!({
            "kind": "poly",
            "coeffs": points(p.coeffs()),
        }),
        Component::Taylor(s) => {
            let zero = Complex64::new(0.0, 0.0);
            let used = s
                .coeffs()
                .iter()
                .rposition(|&c| c != zero)
                .map_or(0, |k| k + 1);
            json!({
                "kind": "taylor",
                "center": complex(s.center()),
                "cap": s.cap(),
                // null when the series converges everywhere
                "radius": s.radius().is_finite().then_some(s.radius()),
                "coeffs": points(&s.coeffs()[..used]),
            })
        }
    }
}

/// Components, plus the canonical text when every component is a polynomial.
pub fn element(f: &PolyElement) -> Value {
    let canonical = polyq::print_canonical(f).ok();
    json!({
        "canonical": canonical,
        "components": f.components().iter().map(component).collect::<Vec<_>>(),
    })
}

pub fn quotient(f: &QuotientElement) -> Value {
    let mut v = element(f.rep());
    if let Value::Object(m) = &mut v {
        m.insert("order".into(), json!(f.order_bound()));
    }
    v
}

pub struct Report {
    pub command: &'static str,
    pub inputs: Map<String, Value>,
    pub result: Map<String, Value>,
    pub diagnostics: Map<String, Value>,
}

impl Report {
    pub fn new(command: &'static str) -> Self {
        Self {
            command,
            inputs: Map::new(),
            result: Map::new(),
            diagnostics: Map::new(),
        }
    }

    pub fn input(&mut self, key: &str, v: impl Into<Value>) -> &mut Self {
        self.inputs.insert(key.into(), v.into());
        self
    }

    pub fn result(&mut self, key: &str, v: impl Into<Value>) -> &mut Self {
        self.result.insert(key.into(), v.into());
        self
    }

    pub fn diag(&mut self, key: &str, v: impl Into<Value>) -> &mut Self {
        self.diagnostics.insert(key.into(), v.into());
        self
    }

    pub fn to_json(&self) -> Value {
        json!({
            "schema_version": SCHEMA_VERSION,
            "command": self.command,
            "inputs": self.inputs,
            "result": self.result,
            "diagnostics": self.diagnostics,
        })
    }
}

/// `path,value` rows, one per scalar leaf. Array indices and object keys are
/// joined with dots.
pub fn to_csv(v: &Value) -> String {
    let mut out = String::from("path,value\n");
    flatten("", v, &mut out);
    out
}

fn flatten(path: &str, v: &Value, out: &mut String) {
    let join = |k: &str| {
        if path.is_empty() {
            k.to_string()
        } else {
            format!("{path}.{k}")
        }
    };
    match v {
        Value::Object(m) => m.iter().for_each(|(k, x)| flatten(&join(k), x, out)),
        Value::Array(a) => a
            .iter()
            .enumerate()
            .for_each(|(i, x)| flatten(&join(&i.to_string()), x, out)),
        Value::String(s) => {
            out.push_str(path);
            out.push(',');
            out.push_str(&csv_quote(s));
            out.push('\n');
        }
        other => {
            out.push_str(path);
            out.push(',');
            out.push_str(&other.to_string());
            out.push('\n');
        }
    }
}

fn csv_quote(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}
