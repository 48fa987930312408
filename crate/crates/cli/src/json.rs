//! Minimal JSON document builder for CLI output.
//!
//! Floats are rendered with 17 significant digits so every value round-trips
//! exactly and identical inputs produce byte-identical documents; serde_json
//! is used only for parsing inputs, never for output.

use std::fmt::Write;

/// A float with 17 significant digits, as a JSON-valid number literal.
pub fn fmt_f64(x: f64) -> String {
    debug_assert!(x.is_finite(), "output documents never carry non-finite numbers");
    format!("{x:.16e}")
}

#[derive(Clone, Debug)]
pub enum Json {
    Bool(bool),
    Int(i128),
    Float(f64),
    Str(String),
    Array(Vec<Json>),
    Object(Vec<(&'static str, Json)>),
}

impl Json {
    pub fn string(s: impl Into<String>) -> Json {
        Json::Str(s.into())
    }

    /// Top-level document with the schema marker first.
    pub fn document(fields: Vec<(&'static str, Json)>) -> Json {
        let mut all = vec![("schema", Json::string("1"))];
        all.extend(fields);
        Json::Object(all)
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        self.write(&mut out);
        out
    }

    fn write(&self, out: &mut String) {
        match self {
            Json::Bool(b) => {
                let _ = write!(out, "{b}");
            }
            Json::Int(i) => {
                let _ = write!(out, "{i}");
            }
            Json::Float(x) => out.push_str(&fmt_f64(*x)),
            Json::Str(s) => write_escaped(out, s),
            Json::Array(items) => {
                out.push('[');
                for (i, item) in items.iter().enumerate() {
                    if i > 0 {
                        out.push(',');
                    }
                    item.write(out);
                }
                out.push(']');
            }
            Json::Object(fields) => {
                out.push('{');
                for (i, (key, value)) in fields.iter().enumerate() {
                    if i > 0 {
                        out.push(',');
                    }
                    write_escaped(out, key);
                    out.push(':');
                    value.write(out);
                }
                out.push('}');
            }
        }
    }
}

fn write_escaped(out: &mut String, s: &str) {
    out.push('"');
    for c in s.chars() {
        match c {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            '\r' => out.push_str("\\r"),
            '\t' => out.push_str("\\t"),
            c if (c as u32) < 0x20 => {
                let _ = write!(out, "\\u{:04x}", c as u32);
            }
            c => out.push(c),
        }
    }
    out.push('"');
}
