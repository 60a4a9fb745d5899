//! Raw local data files:
//!
//! ```json
//! {"base": "F3",
//!  "places": [{"name": "P", "field": "F9:u^2+1", "f": "u*z^-1 + 1", "g": "z^2"}]}
//! ```
//!
//! `base` defaults to the `--field` option and `field` to `base`. Series may
//! also be given in the object form of [`crate::series_json`].

use std::path::Path;

use serde_json::Value;

use reciprocity_core::curve::LocalDatum;
use reciprocity_core::Field;

use crate::parse::parse_in;
use crate::series_json::from_json;
use crate::spec::parse_field;
use crate::targets::Series;
use crate::CliError;

pub fn read_local_data(path: &Path, default_base: &Field, prec: i64) -> Result<(Field, Vec<LocalDatum>), CliError> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io { path: path.display().to_string(), source })?;
    parse_local_data(&text, default_base, prec)
}

pub fn parse_local_data(text: &str, default_base: &Field, prec: i64) -> Result<(Field, Vec<LocalDatum>), CliError> {
    let doc: Value = serde_json::from_str(text).map_err(|e| CliError::Input(format!("local data: {e}")))?;
    let str_field = |v: &Value, key: &str| -> Result<Option<String>, CliError> {
        match v.get(key) {
            None | Some(Value::Null) => Ok(None),
            Some(Value::String(s)) => Ok(Some(s.clone())),
            Some(_) => Err(CliError::Input(format!("local data: '{key}' must be a string"))),
        }
    };
    let base = match str_field(&doc, "base")? {
        Some(s) => parse_field(&s)?,
        None => default_base.clone(),
    };
    let places = doc
        .get("places")
        .and_then(Value::as_array)
        .ok_or_else(|| CliError::Input("local data: expected a 'places' array".into()))?;
    let mut data = Vec::with_capacity(places.len());
    for (i, place) in places.iter().enumerate() {
        let name = str_field(place, "name")?.unwrap_or_else(|| format!("P{}", i + 1));
        let field = match str_field(place, "field")? {
            Some(s) => parse_field(&s)?,
            None => base.clone(),
        };
        let target = Series::over_field(&field, prec);
        let series = |key: &str| -> Result<_, CliError> {
            match place.get(key) {
                Some(Value::String(text)) => parse_in(&target, text).map_err(|err| CliError::Parse { what: format!("{key} at {name}"), text: text.clone(), err }),
                Some(v @ Value::Object(_)) => from_json(v, &target),
                _ => Err(CliError::Input(format!("local data: place {name} needs '{key}' as a string or a series object"))),
            }
        };
        let (f, g) = (series("f")?, series("g")?);
        data.push(LocalDatum { name, residue_field: field, f, g });
    }
    Ok((base, data))
}
