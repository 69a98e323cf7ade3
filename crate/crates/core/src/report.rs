//! JSON documents. Keys come out sorted because `serde_json` maps are ordered.

use serde_json::{json, Value};

use crate::census::SCHEMA_VERSION;
use crate::dynamics::{ConverseCertificate, CriterionValue, OrbitSets, StabilityReport, REPORTED_VALUES};
use crate::field::Field;
use crate::format::{element_json, poly_json};

fn criterion_values_json(field: &Field, values: &[CriterionValue]) -> Value {
    values
        .iter()
        .map(|v| json!({"n": v.n, "element": element_json(field, v.element), "character": v.character}))
        .collect()
}

pub fn field_json(field: &Field) -> Value {
    json!({
        "schema_version": SCHEMA_VERSION,
        "kind": "field",
        "spec": field.spec(),
        "characteristic": field.characteristic(),
        "order": field.order(),
        "degree": field.degree(),
        "absolute_degree": field.absolute_degree(),
        "depth": field.depth(),
        "base": field.base().map(|b| b.spec()),
        "modulus": field.modulus().map(|m| poly_json(&m)),
        "generator": element_json(field, field.generator()),
    })
}

pub fn stability_json(r: &StabilityReport) -> Value {
    let field = r.poly.field();
    json!({
        "schema_version": SCHEMA_VERSION,
        "kind": "stability_report",
        "field": field.spec(),
        "poly": poly_json(&r.poly),
        "poly_text": r.poly.to_string(),
        "degree": r.poly.degree(),
        "verdict": r.verdict.to_string(),
        "criterion_verdict": r.criterion_verdict.to_string(),
        "witness": r.witness.as_ref().map(|w| json!({"n": w.n, "reason": w.reason})),
        "criterion_values": criterion_values_json(field, &r.criterion_values),
        "tail_length": r.tail_length,
        "cycle_length": r.cycle_length,
        "span": r.span,
        "depth_verified": r.depth_verified,
        "first_reducible": r.first_reducible,
        "applicability": r.applicability,
        "converse_failure": r.converse_failure,
    })
}

/// Residues and values of the critical orbit, with the criterion values.
pub fn orbit_json(sets: &OrbitSets, limit: usize) -> Value {
    let orbit = sets.orbit();
    let f = orbit.polynomial();
    let field = f.field();
    let records: Vec<Value> = orbit
        .records()
        .iter()
        .take(limit)
        .map(|r| {
            json!({
                "n": r.n,
                "residue": poly_json(&r.residue),
                "value": element_json(field, r.value),
            })
        })
        .collect();
    let values: Vec<CriterionValue> = sets.values().into_iter().take(limit).collect();
    json!({
        "schema_version": SCHEMA_VERSION,
        "kind": "orbit",
        "field": field.spec(),
        "poly": poly_json(f),
        "poly_text": f.to_string(),
        "derivative": poly_json(orbit.derivative()),
        "k": orbit.critical_degree(),
        "parity": sets.parity(),
        "required_character": sets.required_character(),
        "tail_length": orbit.tail_length(),
        "cycle_length": orbit.cycle_length(),
        "span": sets.span(),
        "records": records,
        "criterion_values": criterion_values_json(field, &values),
    })
}

pub fn certificate_json(c: &ConverseCertificate) -> Value {
    let field = c.f.field();
    let values: Vec<CriterionValue> = c.s2_values.iter().take(REPORTED_VALUES).copied().collect();
    json!({
        "f": poly_json(&c.f),
        "f_text": c.f.to_string(),
        "d": c.d,
        "a0": element_json(field, c.a0),
        "e": c.e,
        "root": element_json(field, c.root),
        "root_verified": c.root_verified,
        "s2_values": criterion_values_json(field, &values),
        "s2_all_squares": c.s2_all_squares,
        "f_reducible": c.f_reducible,
    })
}
