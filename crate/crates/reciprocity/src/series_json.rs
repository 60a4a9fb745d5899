//! JSON form of a Laurent series:
//! `{"low": -1, "prec": 4, "coeffs": {"-1": "3", "0": "1", "1": "2"}}`.
//! `prec` is `null` (or absent) for an exact series.

use serde_json::{json, Map, Value};

use reciprocity_core::{LaurentSeries, Ring};

use crate::parse::parse_in;
use crate::targets::Series;
use crate::CliError;

pub fn to_json<R: Ring>(s: &LaurentSeries<R>) -> Value {
    let r = s.ring();
    let coeffs: Map<String, Value> = s.terms().into_iter().map(|(e, c)| (e.to_string(), json!(r.display(&c).to_string()))).collect();
    json!({"low": s.low(), "prec": s.prec(), "coeffs": coeffs})
}

pub fn from_json<R: Ring>(v: &Value, target: &Series<R>) -> Result<LaurentSeries<R>, CliError> {
    let bad = |why: &str| CliError::Input(format!("series JSON: {why}"));
    let obj = v.as_object().ok_or_else(|| bad("expected an object"))?;
    let prec = match obj.get("prec") {
        None | Some(Value::Null) => None,
        Some(p) => Some(p.as_i64().ok_or_else(|| bad("'prec' must be an integer"))?),
    };
    let coeffs = obj.get("coeffs").and_then(Value::as_object).ok_or_else(|| bad("expected a 'coeffs' object"))?;
    let r = &target.ring;
    let mut terms = Vec::with_capacity(coeffs.len());
    for (e, c) in coeffs {
        let e: i64 = e.parse().map_err(|_| bad(&format!("exponent '{e}' is not an integer")))?;
        let text = c.as_str().ok_or_else(|| bad("coefficients must be strings"))?;
        let value = parse_in(target, text).map_err(|err| CliError::Parse { what: format!("coefficient of z^{e}"), text: text.into(), err })?;
        if !value.is_exact() || value.terms().iter().any(|(k, _)| *k != 0) {
            return Err(bad(&format!("coefficient '{text}' is not a constant")));
        }
        terms.push((e, value.coeff(0)?));
    }
    if let Some(low) = obj.get("low") {
        let low = low.as_i64().ok_or_else(|| bad("'low' must be an integer"))?;
        if terms.iter().any(|(e, c)| *e < low && !r.is_zero(c)) {
            return Err(bad("a coefficient lies below 'low'"));
        }
    }
    let s = LaurentSeries::from_terms(r, &terms);
    Ok(match prec {
        Some(p) => s.truncate(p),
        None => s,
    })
}
