//! Invariant profiles as JSON.
//!
//! ```json
//! {"closed": false, "dim": 2, "entries": [{"k": 2, "kappa": "-1", "kappa_bar": "-1"}]}
//! ```
//!
//! Exact values are strings (`"p/q"`), float values are JSON numbers. An
//! undefined `κ̄` is `null`; `tau` appears exactly when `dim` is 3.

use affframe::{InvariantProfile, ProfileEntry, Rational};
use serde_json::{json, Map, Value};

use crate::error::CliError;
use crate::literal::{json_mode, Literal, NumberMode};

#[derive(Clone, Debug, PartialEq)]
pub enum AnyProfile {
    Exact(InvariantProfile<Rational>),
    Float(InvariantProfile<f64>),
}

impl AnyProfile {
    pub fn dim(&self) -> usize {
        match self {
            AnyProfile::Exact(p) => p.dim,
            AnyProfile::Float(p) => p.dim,
        }
    }

    pub fn to_json(&self) -> String {
        match self {
            AnyProfile::Exact(p) => write_profile(p),
            AnyProfile::Float(p) => write_profile(p),
        }
    }
}

pub fn profile_value<S: Literal>(profile: &InvariantProfile<S>) -> Value {
    let entries: Vec<Value> = profile
        .entries
        .iter()
        .map(|e| {
            let mut m = Map::new();
            m.insert("k".into(), json!(e.k));
            m.insert("kappa".into(), e.kappa.to_json());
            m.insert(
                "kappa_bar".into(),
                e.kappa_bar.as_ref().map_or(Value::Null, Literal::to_json),
            );
            if profile.dim == 3 {
                m.insert("tau".into(), e.tau.as_ref().map_or(Value::Null, Literal::to_json));
            }
            Value::Object(m)
        })
        .collect();
    json!({ "closed": profile.closed, "dim": profile.dim, "entries": entries })
}

pub fn write_profile<S: Literal>(profile: &InvariantProfile<S>) -> String {
    let mut s = serde_json::to_string_pretty(&profile_value(profile)).expect("profile serializes");
    s.push('\n');
    s
}

fn entry_mode(entries: &[Value]) -> Result<NumberMode, CliError> {
    let mut mode = None;
    for e in entries {
        for key in ["kappa", "kappa_bar", "tau"] {
            let Some(m) = e.get(key).and_then(json_mode) else {
                continue;
            };
            match mode {
                None => mode = Some(m),
                Some(prev) if prev != m => {
                    return Err(CliError::Parse("exact and float values cannot be mixed".into()))
                }
                _ => {}
            }
        }
    }
    Ok(mode.unwrap_or(NumberMode::Exact))
}

fn read_entries<S: Literal>(dim: usize, entries: &[Value]) -> Result<Vec<ProfileEntry<S>>, CliError> {
    entries
        .iter()
        .enumerate()
        .map(|(i, e)| {
            let at = |msg: &str| CliError::Parse(format!("entry {}: {msg}", i + 1));
            let obj = e.as_object().ok_or_else(|| at("expected an object"))?;
            let k = obj
                .get("k")
                .and_then(Value::as_u64)
                .filter(|&k| k > 0)
                .ok_or_else(|| at("k must be a positive integer"))? as usize;
            let kappa = S::from_json(obj.get("kappa").ok_or_else(|| at("missing kappa"))?)?;
            let kappa_bar = match obj.get("kappa_bar").ok_or_else(|| at("missing kappa_bar"))? {
                Value::Null => None,
                v => Some(S::from_json(v)?),
            };
            let tau = match (dim, obj.get("tau")) {
                (3, Some(v)) => Some(S::from_json(v)?),
                (3, None) => return Err(at("missing tau")),
                (_, Some(_)) => return Err(at("tau is only allowed in dim 3")),
                (_, None) => None,
            };
            Ok(ProfileEntry { k, kappa, kappa_bar, tau })
        })
        .collect()
}

pub fn parse_profile(text: &str) -> Result<AnyProfile, CliError> {
    let root: Value = serde_json::from_str(text).map_err(|e| CliError::Parse(e.to_string()))?;
    let dim = root
        .get("dim")
        .and_then(Value::as_u64)
        .filter(|&d| d == 2 || d == 3)
        .ok_or_else(|| CliError::Parse("dim must be 2 or 3".into()))? as usize;
    let closed = root
        .get("closed")
        .and_then(Value::as_bool)
        .ok_or_else(|| CliError::Parse("closed must be a boolean".into()))?;
    let entries = root
        .get("entries")
        .and_then(Value::as_array)
        .ok_or_else(|| CliError::Parse("entries must be an array".into()))?;
    Ok(match entry_mode(entries)? {
        NumberMode::Exact => AnyProfile::Exact(InvariantProfile {
            dim,
            closed,
            entries: read_entries(dim, entries)?,
        }),
        NumberMode::Float => AnyProfile::Float(InvariantProfile {
            dim,
            closed,
            entries: read_entries(dim, entries)?,
        }),
    })
}
