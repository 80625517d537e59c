//! Exact values on the wire: rationals as strings, cyclotomic elements as
//! `{"m": .., "coords": [..]}` with string coordinates.

use lffc_core::field::parse_rational;
use lffc_core::{CycloElem, Field, Poly, Rational};
use serde_json::Value;

use crate::CliError;

pub trait WireField: Field + std::fmt::Display {
    fn to_wire(&self) -> Value;

    fn from_wire(v: &Value) -> Result<Self, CliError>;

    /// Parses a command-line value.
    fn parse_arg(s: &str) -> Result<Self, CliError> {
        let v = if s.trim_start().starts_with('{') {
            serde_json::from_str(s).map_err(|e| CliError::Input(format!("`{s}`: {e}")))?
        } else {
            Value::String(s.to_string())
        };
        Self::from_wire(&v)
    }
}

fn rational_from_wire(v: &Value) -> Result<Rational, CliError> {
    match v {
        Value::String(s) => Ok(parse_rational(s)?),
        Value::Number(n) if n.is_i64() || n.is_u64() => Ok(parse_rational(&n.to_string())?),
        other => Err(CliError::Input(format!("expected an exact rational, got {other}"))),
    }
}

impl WireField for Rational {
    fn to_wire(&self) -> Value {
        Value::String(self.to_string())
    }

    fn from_wire(v: &Value) -> Result<Self, CliError> {
        rational_from_wire(v)
    }
}

impl WireField for CycloElem {
    fn to_wire(&self) -> Value {
        serde_json::to_value(self).expect("cyclotomic elements serialize")
    }

    fn from_wire(v: &Value) -> Result<Self, CliError> {
        if v.is_object() {
            serde_json::from_value(v.clone()).map_err(|e| CliError::Input(format!("{v}: {e}")))
        } else {
            Ok(CycloElem::rational(rational_from_wire(v)?))
        }
    }
}

pub fn poly_to_wire<F: WireField>(p: &Poly<F>) -> Value {
    Value::Array(p.coeffs().iter().map(F::to_wire).collect())
}

pub fn poly_from_wire<F: WireField>(v: &Value) -> Result<Poly<F>, CliError> {
    let arr = v
        .as_array()
        .ok_or_else(|| CliError::Input(format!("expected a coefficient array, got {v}")))?;
    Ok(Poly::new(arr.iter().map(F::from_wire).collect::<Result<_, _>>()?))
}

/// Whether any value below `v` is a cyclotomic element.
pub fn mentions_cyclo(v: &Value) -> bool {
    match v {
        Value::Object(m) => m.contains_key("coords") || m.values().any(mentions_cyclo),
        Value::Array(a) => a.iter().any(mentions_cyclo),
        _ => false,
    }
}
