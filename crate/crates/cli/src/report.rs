//! Output reports and their deterministic JSON/CSV encodings.

use std::io::{self, Write};

use ditlab::linalg::CMatrix;
use ditlab::Weight;
use serde::Serialize;
use serde_json::ser::{Formatter, PrettyFormatter};
use serde_json::{json, Map, Value};

use crate::input::Loaded;
use crate::CliError;

#[derive(Debug, Clone)]
pub struct Identity {
    pub name: String,
    pub pass: bool,
    pub residual: f64,
    pub tolerance: f64,
}

pub struct Report {
    command: &'static str,
    inputs: Vec<(String, String)>,
    mode: Option<&'static str>,
    quantities: Vec<(String, f64, Option<String>)>,
    identities: Vec<Identity>,
    extra: Map<String, Value>,
}

impl Report {
    pub fn new(command: &'static str) -> Self {
        Report { command, inputs: Vec::new(), mode: None, quantities: Vec::new(), identities: Vec::new(), extra: Map::new() }
    }

    pub fn input(&mut self, role: &str, loaded: &Loaded) {
        self.inputs.push((role.to_string(), loaded.sha256.clone()));
    }

    pub fn input_digest(&mut self, role: &str, sha256: String) {
        self.inputs.push((role.to_string(), sha256));
    }

    pub fn mode(&mut self, exact: bool) {
        self.mode = Some(if exact { "rational" } else { "float" });
    }

    pub fn float(&mut self, name: &str, value: f64) {
        self.quantities.push((name.to_string(), value, None));
    }

    /// A quantity from either arithmetic; rationals also keep their exact text.
    pub fn weight<T: Weight>(&mut self, name: &str, value: &T) {
        let exact = T::EXACT.then(|| value.to_string());
        self.quantities.push((name.to_string(), value.as_f64(), exact));
    }

    pub fn identity(&mut self, name: &str, residual: f64, tolerance: f64) {
        self.identities.push(Identity { name: name.to_string(), pass: residual <= tolerance, residual, tolerance });
    }

    /// An identity between two weights: exact equality for rationals.
    pub fn weight_identity<T: Weight>(&mut self, name: &str, lhs: &T, rhs: &T) {
        let tolerance = if T::EXACT { 0.0 } else { ditlab::weight::FLOAT_TOLERANCE };
        self.identities.push(Identity { name: name.to_string(), pass: lhs.close_to(rhs), residual: lhs.abs_diff(rhs), tolerance });
    }

    pub fn extra(&mut self, key: &str, value: Value) {
        self.extra.insert(key.to_string(), value);
    }

    pub fn all_pass(&self) -> bool {
        self.identities.iter().all(|i| i.pass)
    }

    pub fn to_json(&self) -> Value {
        let mut root = Map::new();
        root.insert("command".into(), json!(self.command));
        let inputs: Map<String, Value> = self.inputs.iter().map(|(r, h)| (r.clone(), json!({ "sha256": h }))).collect();
        root.insert("inputs".into(), Value::Object(inputs));
        if let Some(mode) = self.mode {
            root.insert("mode".into(), json!(mode));
        }
        let quantities: Map<String, Value> = self.quantities.iter().map(|(n, v, _)| (n.clone(), json!(v))).collect();
        root.insert("quantities".into(), Value::Object(quantities));
        if self.quantities.iter().any(|q| q.2.is_some()) {
            let exact: Map<String, Value> =
                self.quantities.iter().filter_map(|(n, _, e)| e.as_ref().map(|e| (n.clone(), json!(e)))).collect();
            root.insert("exact".into(), Value::Object(exact));
        }
        let identities: Map<String, Value> = self
            .identities
            .iter()
            .map(|i| (i.name.clone(), json!({ "pass": i.pass, "residual": i.residual, "tolerance": i.tolerance })))
            .collect();
        root.insert("identities_checked".into(), Value::Object(identities));
        for (k, v) in &self.extra {
            root.insert(k.clone(), v.clone());
        }
        Value::Object(root)
    }

    pub fn write_json(&self, out: &mut impl Write) -> Result<(), CliError> {
        if let Some((name, _, _)) = self.quantities.iter().find(|q| !q.1.is_finite()) {
            return Err(CliError::Invariant(format!("quantity {name} is not finite")));
        }
        let mut ser = serde_json::Serializer::with_formatter(&mut *out, SignificantDigits::default());
        self.to_json().serialize(&mut ser).map_err(|e| CliError::Io(e.to_string()))?;
        writeln!(out).map_err(|e| CliError::Io(e.to_string()))
    }

    pub fn write_csv(&self, out: &mut impl Write) -> Result<(), CliError> {
        let mut w = csv::Writer::from_writer(out);
        let io = |e: csv::Error| CliError::Io(e.to_string());
        w.write_record(["quantity", "value", "exact"]).map_err(io)?;
        for (name, value, exact) in &self.quantities {
            w.write_record([name.as_str(), &format_f64(*value), exact.as_deref().unwrap_or("")]).map_err(io)?;
        }
        w.flush().map_err(|e| CliError::Io(e.to_string()))
    }
}

/// Rows of `[re, im]` pairs.
pub fn matrix_json(m: &CMatrix) -> Value {
    Value::Array(
        (0..m.nrows())
            .map(|j| Value::Array((0..m.ncols()).map(|k| json!([m[(j, k)].re, m[(j, k)].im])).collect()))
            .collect(),
    )
}

/// Seventeen significant digits, the shortest width that round-trips every f64.
pub fn format_f64(x: f64) -> String {
    if x == 0.0 {
        return "0.0000000000000000e0".to_string();
    }
    format!("{x:.16e}")
}

/// Pretty JSON with every float printed by [`format_f64`].
#[derive(Default)]
struct SignificantDigits<'a>(PrettyFormatter<'a>);

impl Formatter for SignificantDigits<'_> {
    fn write_f64<W: ?Sized + Write>(&mut self, writer: &mut W, value: f64) -> io::Result<()> {
        writer.write_all(format_f64(value).as_bytes())
    }

    fn begin_array<W: ?Sized + Write>(&mut self, w: &mut W) -> io::Result<()> {
        self.0.begin_array(w)
    }

    fn end_array<W: ?Sized + Write>(&mut self, w: &mut W) -> io::Result<()> {
        self.0.end_array(w)
    }

    fn begin_array_value<W: ?Sized + Write>(&mut self, w: &mut W, first: bool) -> io::Result<()> {
        self.0.begin_array_value(w, first)
    }

    fn end_array_value<W: ?Sized + Write>(&mut self, w: &mut W) -> io::Result<()> {
        self.0.end_array_value(w)
    }

    fn begin_object<W: ?Sized + Write>(&mut self, w: &mut W) -> io::Result<()> {
        self.0.begin_object(w)
    }

    fn end_object<W: ?Sized + Write>(&mut self, w: &mut W) -> io::Result<()> {
        self.0.end_object(w)
    }

    fn begin_object_key<W: ?Sized + Write>(&mut self, w: &mut W, first: bool) -> io::Result<()> {
        self.0.begin_object_key(w, first)
    }

    fn begin_object_value<W: ?Sized + Write>(&mut self, w: &mut W) -> io::Result<()> {
        self.0.begin_object_value(w)
    }

    fn end_object_value<W: ?Sized + Write>(&mut self, w: &mut W) -> io::Result<()> {
        self.0.end_object_value(w)
    }
}
