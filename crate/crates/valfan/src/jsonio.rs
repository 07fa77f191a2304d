//! JSON interchange: the cycle-configuration file format and the result
//! documents emitted by the command-line tool.
//!
//! Exact numbers are emitted in their canonical text form (integers as
//! JSON numbers where they fit, everything else as strings like `"3/2"` or
//! `"3 - 2*sqrt(2)"`) and parse back to equal values. Approximate decimal
//! renderings only ever appear in fields named `approx*`.

use num_traits::ToPrimitive;
use serde_json::{json, Map, Value};
use thiserror::Error;

use crate::cycle::{CycleConfig, DualComplexPoint};
use crate::degen::{HomogeneityReport, RationalPolytope, WpsCiRecord};
use crate::exact::{format_rat, parse_rat, QuadVal, Rat};
use crate::lattice::{DivisorClass, SurfaceLattice};
use crate::special::{Boundary, BoundaryKind, Partition, Region, Verdict, WitnessSet};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum JsonError {
    #[error("config: {0}")]
    Config(String),
}

fn bad<T>(msg: impl Into<String>) -> Result<T, JsonError> {
    Err(JsonError::Config(msg.into()))
}

/// Renders a rational as a JSON number when it is a small integer, else as
/// its exact text form.
pub fn rat_value(r: &Rat) -> Value {
    if r.is_integer() {
        if let Some(n) = r.to_integer().to_i64() {
            return json!(n);
        }
    }
    json!(format_rat(r))
}

fn rat_from_value(v: &Value) -> Result<Rat, JsonError> {
    match v {
        Value::Number(n) => match n.as_i64() {
            Some(i) => Ok(Rat::from_integer(i.into())),
            None => bad(format!("non-integer JSON number {n}; use a string")),
        },
        Value::String(s) => parse_rat(s).map_err(|e| JsonError::Config(e.to_string())),
        other => bad(format!("expected a number or string, got {other}")),
    }
}

pub fn class_value(c: &DivisorClass) -> Value {
    Value::Array(c.coeffs().iter().map(rat_value).collect())
}

fn class_from_value(v: &Value) -> Result<DivisorClass, JsonError> {
    let Value::Array(items) = v else {
        return bad(format!("component must be an array, got {v}"));
    };
    let coeffs = items.iter().map(rat_from_value).collect::<Result<_, _>>()?;
    Ok(DivisorClass::new(coeffs))
}

/// Parses the config document:
/// `{ "surface": "blowup:1", "components": [[3, -1]], "branch_flip": false }`.
pub fn config_from_json(text: &str) -> Result<CycleConfig, JsonError> {
    let v: Value = serde_json::from_str(text).map_err(|e| JsonError::Config(e.to_string()))?;
    let Value::Object(map) = v else {
        return bad("config must be a JSON object");
    };
    let surface = match map.get("surface") {
        Some(Value::String(s)) => {
            SurfaceLattice::parse_kind(s).map_err(|e| JsonError::Config(e.to_string()))?
        }
        _ => return bad("missing or non-string `surface`"),
    };
    let components = match map.get("components") {
        Some(Value::Array(items)) => items
            .iter()
            .map(class_from_value)
            .collect::<Result<Vec<_>, _>>()?,
        _ => return bad("missing or non-array `components`"),
    };
    let branch_flip = match map.get("branch_flip") {
        None => false,
        Some(Value::Bool(b)) => *b,
        Some(other) => return bad(format!("`branch_flip` must be a bool, got {other}")),
    };
    for key in map.keys() {
        if !matches!(key.as_str(), "surface" | "components" | "branch_flip") {
            return bad(format!("unknown config key `{key}`"));
        }
    }
    Ok(CycleConfig::new(surface, components, branch_flip))
}

pub fn config_to_json(config: &CycleConfig) -> Value {
    json!({
        "surface": config.view().ambient().kind_string(),
        "components": config.components().iter().map(class_value).collect::<Vec<_>>(),
        "branch_flip": config.branch_flip(),
    })
}

pub fn quad_value(q: &QuadVal) -> Value {
    json!(q.to_string())
}

pub fn point_value(pt: &DualComplexPoint) -> Value {
    match pt {
        DualComplexPoint::Vertex(i) => json!({ "type": "vertex", "component": i }),
        DualComplexPoint::Edge { node, t } => json!({
            "type": "edge",
            "node": node,
            "t": t.to_string(),
            "approx_t": t.to_f64(),
        }),
    }
}

pub fn region_value(region: &Region) -> Value {
    match region {
        Region::Empty => json!({ "type": "empty" }),
        Region::FullCircle => json!({ "type": "full_circle" }),
        Region::OpenArc { lo, hi } => json!({
            "type": "open_arc",
            "lo": point_value(lo),
            "hi": point_value(hi),
        }),
    }
}

pub fn verdict_value(v: &Verdict) -> Value {
    json!({
        "special": v.special,
        "case": v.case_tag.as_str(),
        "certificate": v.certificate.as_ref().map(|a| {
            a.iter().map(rat_value).collect::<Vec<_>>()
        }),
    })
}

fn boundary_value(b: &Boundary) -> Value {
    let witness = match &b.kind {
        BoundaryKind::Vertex => json!("vertex"),
        BoundaryKind::Witness(e) => json!({
            "p": e.p,
            "q": e.q,
            "class": class_value(&e.class),
            "m": e.m,
        }),
    };
    json!({ "point": point_value(&b.point), "witness": witness })
}

pub fn partition_value(p: &Partition) -> Value {
    json!({
        "region": region_value(&p.region),
        "height_bound": p.height_bound,
        "truncated_ends": [p.truncated_ends.0, p.truncated_ends.1],
        "boundaries": p.boundaries.iter().map(boundary_value).collect::<Vec<_>>(),
        "chambers": p.chambers.iter().map(|c| json!({
            "start": point_value(&c.start),
            "end": point_value(&c.end),
            "verified_sample": point_value(&c.sample),
        })).collect::<Vec<_>>(),
    })
}

pub fn witness_set_value(w: &WitnessSet) -> Value {
    json!({
        "node": { "index": w.node.index, "left": w.node.left, "right": w.node.right },
        "height_bound": w.height_bound,
        "entries": w.entries.iter().map(|e| json!({
            "p": e.p,
            "q": e.q,
            "t": format_rat(&e.t()),
            "class": class_value(&e.class),
            "m": e.m,
        })).collect::<Vec<_>>(),
    })
}

pub fn polytope_value(p: &RationalPolytope) -> Value {
    Value::Array(
        p.vertices()
            .iter()
            .map(|(x, y)| Value::Array(vec![rat_value(x), rat_value(y)]))
            .collect(),
    )
}

pub fn wps_record_value(rec: &WpsCiRecord, report: &HomogeneityReport) -> Value {
    let eq_value = |eq: &[(i64, [num_bigint::BigInt; 5])]| -> Value {
        Value::Array(
            eq.iter()
                .map(|(c, exps)| {
                    json!({
                        "coeff": c,
                        "exponents": exps.iter().map(|e| json!(e.to_string())).collect::<Vec<_>>(),
                    })
                })
                .collect(),
        )
    };
    json!({
        "weights": rec.weights.iter().map(|w| json!(w.to_string())).collect::<Vec<_>>(),
        "equations": [eq_value(&rec.equations[0]), eq_value(&rec.equations[1])],
        "homogeneity": {
            "term_degrees": [
                report.term_degrees[0].iter().map(|d| json!(d.to_string())).collect::<Vec<_>>(),
                report.term_degrees[1].iter().map(|d| json!(d.to_string())).collect::<Vec<_>>(),
            ],
            "homogeneous": [report.homogeneous[0], report.homogeneous[1]],
            "degrees": [
                report.degrees[0].as_ref().map(|d| d.to_string()),
                report.degrees[1].as_ref().map(|d| d.to_string()),
            ],
            "naive_anticanonical_square": report
                .naive_anticanonical_square
                .as_ref()
                .map(format_rat),
        },
    })
}

/// Stable pretty rendering: object keys are sorted by construction
/// (`serde_json` maps are ordered), so equal documents print identically.
pub fn render(value: &Value) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("valid JSON value");
    s.push('\n');
    s
}

/// Parses an edge point given as `node` plus exact `t` text, or a vertex.
pub fn parse_point(
    config: &CycleConfig,
    node: Option<usize>,
    t: Option<&str>,
    vertex: Option<usize>,
) -> Result<DualComplexPoint, JsonError> {
    match (node, t, vertex) {
        (None, None, Some(v)) => {
            if v >= config.component_count() {
                return bad(format!("vertex {v} out of range"));
            }
            Ok(DualComplexPoint::Vertex(v))
        }
        (Some(n), Some(t), None) => {
            if n >= config.node_count() {
                return bad(format!("node {n} out of range"));
            }
            let t: crate::exact::ExtPos = t
                .parse()
                .map_err(|e: crate::exact::ExactError| JsonError::Config(e.to_string()))?;
            Ok(DualComplexPoint::at_weight(&config.node(n), &t))
        }
        _ => bad("give either --node with --t, or --vertex"),
    }
}

/// Round-trip helper for tests: every exact number in a document must
/// parse back to itself.
pub fn collect_exact_strings(v: &Value, out: &mut Vec<String>) {
    match v {
        Value::Object(map) => collect_from_map(map, out),
        Value::Array(items) => {
            for item in items {
                collect_exact_strings(item, out);
            }
        }
        _ => {}
    }
}

fn collect_from_map(map: &Map<String, Value>, out: &mut Vec<String>) {
    for (key, value) in map {
        if key.starts_with("approx") {
            continue;
        }
        match value {
            Value::String(s) if key == "t" => out.push(s.clone()),
            _ => collect_exact_strings(value, out),
        }
    }
}
