use std::fmt::Display;
use std::fs;
use std::path::PathBuf;

use serde::de::DeserializeOwned;
use serde::Serialize;
use serde_json::Value;

use isocone::gps::GpsError;
use isocone::hermitian::HermitianError;
use isocone::m2::M2Error;
use isocone::{ConeError, PosetError};

/// A domain error, reported as `{"error": {"kind": ..., "detail": ...}}`.
#[derive(Debug)]
pub struct CliError {
    pub kind: String,
    pub detail: String,
}

impl CliError {
    pub fn new(kind: &str, detail: impl Display) -> Self {
        CliError { kind: kind.to_string(), detail: detail.to_string() }
    }

    pub fn to_json(&self) -> Value {
        serde_json::json!({ "error": { "kind": self.kind, "detail": self.detail } })
    }
}

macro_rules! from_kinded {
    ($($t:ty),*) => {$(
        impl From<$t> for CliError {
            fn from(e: $t) -> Self {
                CliError::new(e.kind(), &e)
            }
        }
    )*};
}

from_kinded!(PosetError, ConeError, HermitianError, M2Error, GpsError);

pub type CliResult<T> = Result<T, CliError>;

/// Parses `arg` as inline JSON when it looks like JSON, otherwise reads it
/// as a file path.
pub fn load<T: DeserializeOwned>(arg: &str) -> CliResult<T> {
    let trimmed = arg.trim_start();
    let text = if trimmed.starts_with('{') || trimmed.starts_with('[') {
        arg.to_string()
    } else {
        fs::read_to_string(arg).map_err(|e| CliError::new("Io", format!("{arg}: {e}")))?
    };
    serde_json::from_str(&text).map_err(|e| CliError::new("MalformedInput", format!("{arg}: {e}")))
}

/// Where and how results are written.
pub struct Sink {
    pub out: Option<PathBuf>,
}

impl Sink {
    pub fn write_text(&self, text: &str) -> CliResult<()> {
        match &self.out {
            Some(path) => fs::write(path, format!("{text}\n"))
                .map_err(|e| CliError::new("Io", format!("{}: {e}", path.display()))),
            None => {
                println!("{text}");
                Ok(())
            }
        }
    }

    pub fn write_json<T: Serialize>(&self, value: &T) -> CliResult<()> {
        let mut v = serde_json::to_value(value).map_err(|e| CliError::new("Serialization", e))?;
        clean_zeros(&mut v);
        self.write_text(&v.to_string())
    }

    pub fn write_csv(&self, header: &[&str], rows: Vec<Vec<String>>) -> CliResult<()> {
        let mut w = csv::Writer::from_writer(Vec::new());
        let fail = |e: csv::Error| CliError::new("Serialization", e);
        w.write_record(header).map_err(fail)?;
        for r in rows {
            w.write_record(&r).map_err(fail)?;
        }
        let bytes = w.into_inner().map_err(|e| CliError::new("Serialization", e))?;
        let text = String::from_utf8(bytes).expect("csv output is utf-8");
        self.write_text(text.trim_end())
    }
}

/// `-0.0` prints as `-0.0`; emit `0.0` instead so equal inputs give equal
/// bytes regardless of rounding direction.
fn clean_zeros(v: &mut Value) {
    match v {
        Value::Number(n) => {
            if n.as_f64() == Some(0.0) && n.is_f64() {
                *v = serde_json::json!(0.0);
            }
        }
        Value::Array(xs) => xs.iter_mut().for_each(clean_zeros),
        Value::Object(m) => m.values_mut().for_each(clean_zeros),
        _ => {}
    }
}
