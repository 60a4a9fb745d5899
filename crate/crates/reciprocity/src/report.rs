//! Text and JSON renderings of verification reports.

use serde_json::{json, Value};

use reciprocity_core::curve::{ReportKind, VerificationReport};
use reciprocity_core::Ring;

fn value_key(kind: ReportKind) -> &'static str {
    match kind {
        ReportKind::Reciprocity => "local_factor",
        ReportKind::Residues | ReportKind::GelfandFuchs => "residue",
    }
}

pub fn to_json(input: Value, r: &VerificationReport) -> Value {
    let k = &r.field;
    let places: Vec<Value> = r
        .places
        .iter()
        .map(|e| {
            let mut entry = json!({"place": e.place, "deg": e.deg, "v_f": e.v_f, "v_g": e.v_g});
            entry[value_key(r.kind)] = json!(k.display(&e.value).to_string());
            entry
        })
        .collect();
    json!({
        "input": input,
        "places": places,
        "global": k.display(&r.global).to_string(),
        "verified": r.verified,
    })
}

pub fn to_text(r: &VerificationReport) -> String {
    let k = &r.field;
    let (header, total) = match r.kind {
        ReportKind::Reciprocity => ("local factor", "product"),
        ReportKind::Residues => ("residue", "sum"),
        ReportKind::GelfandFuchs => ("cocycle", "sum"),
    };
    let width = r.places.iter().map(|e| e.place.len()).max().unwrap_or(0).max(5);
    let mut out = format!("{:<width$}  deg  v_f  v_g  {header}\n", "place");
    for e in &r.places {
        out += &format!("{:<width$}  {:>3}  {:>3}  {:>3}  {}\n", e.place, e.deg, e.v_f, e.v_g, k.display(&e.value));
    }
    let verdict = if r.verified { "verified" } else { "VIOLATED" };
    out += &format!("{total} over {k}: {} (expected {}) {verdict}\n", k.display(&r.global), k.display(&r.expected()));
    out
}
