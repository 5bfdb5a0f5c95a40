//! Command implementations behind the `eacx` binary. Each command returns a
//! JSON value carrying `"schema": 1`; text output is rendered from it.

use crate::activity::{fmt_xy, xy_labels, Activity, Weight};
use crate::bits;
use crate::dilworth::{DilworthTruncation, MatroidPair};
use crate::error::{Error, Result};
use crate::exact_algebra::{format_rational, Rational};
use crate::io::{matroid_to_json, polynomial_to_json, weight_to_json};
use crate::kclasses::{g_chis, g_invariant, k_poly_localization, k_poly_localization_t, k_poly_localization_with, complex_k_specialized, omega, OmegaReport, SubstitutionVector};
use crate::matroid::Matroid;
use crate::simplicial::{is_cohen_macaulay, k_polynomial_fine, xy_grading, Grading};
use crate::tropical::{all_intersection_points, degree_polynomial, degree_polynomial_from_activity};
use crate::verify::{run_suite, Suite};
use serde_json::{json, Map, Value};

pub const SCHEMA: u64 = 1;

fn envelope(command: &str, body: Value) -> Value {
    let mut m = Map::new();
    m.insert("schema".into(), json!(SCHEMA));
    m.insert("command".into(), json!(command));
    if let Value::Object(b) = body {
        m.extend(b);
    }
    Value::Object(m)
}

fn sets(v: &[u32]) -> Vec<Vec<usize>> {
    v.iter().map(|&s| bits::elems(s)).collect()
}

pub fn dd(pair: &MatroidPair) -> Result<Value> {
    let t = DilworthTruncation::new(pair);
    Ok(envelope(
        "dd",
        json!({
            "n": pair.n(),
            "rank_m1": pair.m1.rank(),
            "rank_m2": pair.m2.rank(),
            "rank": t.rank(),
            "expected_rank": t.expected_rank,
            "bases": sets(t.d.bases()),
            "circuits": sets(&pair.circuits_d()),
        }),
    ))
}

fn face_labels(n: usize, m: u64) -> Vec<String> {
    let labels = xy_labels(n);
    (0..2 * n).filter(|i| m >> i & 1 == 1).map(|i| labels[i].clone()).collect()
}

pub fn complex(pair: &MatroidPair, w: &Weight) -> Result<Value> {
    let n = pair.n();
    let act = Activity::new(pair, w)?;
    let cx = act.complex()?;
    let cm = is_cohen_macaulay(&cx);
    let ea: Vec<Value> = act.ea_distribution()?.into_iter().map(|((e2, e1), c)| json!({"e2": e2, "e1": e1, "count": c})).collect();
    Ok(envelope(
        "complex",
        json!({
            "n": n,
            "weight": weight_to_json(w),
            "facets": act.facets()?.iter().map(|&f| fmt_xy(n, f)).collect::<Vec<_>>(),
            "sr_generators": act.sr_generators().iter().map(|&g| face_labels(n, g).join("*")).collect::<Vec<_>>(),
            "f_vector": cx.f_vector(),
            "dimension": cx.dim(),
            "pure": cx.is_pure(),
            "cohen_macaulay": cm.is_cm,
            "cm_witness": cm.witness.map(|(s, i)| json!({"face": cx.fmt_face(s), "degree": i})),
            "ea_distribution": ea,
        }),
    ))
}

/// K-polynomial from the complex in `grading`; for `z2` and `z2xzn` also from
/// localization, failing with `RouteDisagreement` on mismatch.
pub fn kpoly(pair: &MatroidPair, w: &Weight, grading: Grading, c: Option<&SubstitutionVector>) -> Result<Value> {
    let n = pair.n();
    let cx = Activity::new(pair, w)?.complex()?;
    let (fine, _) = xy_grading(n, Grading::Fine);
    let k = k_polynomial_fine(&cx, &fine)?;
    let (vars, images) = xy_grading(n, grading);
    let from_complex = k.coarsen(&vars, &images);
    let mut body = json!({
        "n": n,
        "weight": weight_to_json(w),
        "grading": grading_name(grading),
        "complex": polynomial_to_json(&from_complex),
    });
    match grading {
        Grading::Z2 => {
            let loc = match c {
                Some(c) => k_poly_localization_with(pair, c, &c.alternate())?,
                None => k_poly_localization(pair)?,
            };
            if loc != from_complex {
                return Err(Error::RouteDisagreement(format!("complex {from_complex} vs localization {loc}")));
            }
            body["localization"] = polynomial_to_json(&loc);
            body["agree"] = json!(true);
        }
        Grading::Z2xZn => {
            let cs = match c {
                Some(c) => vec![c.clone(), c.alternate()],
                None => vec![SubstitutionVector::consecutive(n), SubstitutionVector::primes(n)],
            };
            let mut checks = Vec::new();
            for c in &cs {
                let a = complex_k_specialized(&cx, n, c)?;
                let b = k_poly_localization_t(pair, c)?;
                if a != b {
                    return Err(Error::RouteDisagreement(format!("substitution {:?}: complex {a} vs localization {b}", c.c())));
                }
                checks.push(json!({"c": c.c(), "specialized": polynomial_to_json(&b)}));
            }
            body["localization_checks"] = json!(checks);
            body["agree"] = json!(true);
        }
        _ => {}
    }
    Ok(envelope("kpoly", body))
}

pub fn grading_name(g: Grading) -> &'static str {
    match g {
        Grading::Fine => "fine",
        Grading::Z2 => "z2",
        Grading::Zn => "zn",
        Grading::Z2xZn => "z2xzn",
        Grading::Z => "z",
    }
}

fn rat_json(q: &Option<Rational>) -> Value {
    q.as_ref().map(|q| json!(format_rational(q))).unwrap_or(Value::Null)
}

fn omega_json(r: &OmegaReport) -> Value {
    json!({
        "value": r.value.to_string(),
        "route": r.route,
        "route_a": r.route_a.as_ref().map(|v| v.to_string()),
        "route_b": r.route_b.as_ref().map(|v| v.to_string()),
        "components": r.components.iter().map(omega_json).collect::<Vec<_>>(),
        "beta_half_tutte": rat_json(&r.beta_half_tutte),
        "top_betti_half": rat_json(&r.top_betti_half),
    })
}

pub fn omega_cmd(m: &Matroid) -> Result<Value> {
    let r = omega(m)?;
    let mut body = omega_json(&r);
    body["matroid"] = matroid_to_json(m);
    Ok(envelope("omega", body))
}

pub fn g_cmd(m: &Matroid) -> Result<Value> {
    let g = g_invariant(m)?;
    let chis: Vec<String> = g_chis(m)?.iter().map(|c| c.to_string()).collect();
    let om = omega(m)?;
    Ok(envelope(
        "g",
        json!({
            "matroid": matroid_to_json(m),
            "g": polynomial_to_json(&g),
            "chi": chis,
            "omega": omega_json(&om),
        }),
    ))
}

/// Tropical point counts against the activity formula; a mismatch is a
/// `RouteDisagreement`.
pub fn chern_degree(pair: &MatroidPair, w: &Weight) -> Result<Value> {
    let n = pair.n();
    let trop = degree_polynomial(pair, w)?;
    let act = degree_polynomial_from_activity(pair, w)?;
    if trop != act {
        return Err(Error::RouteDisagreement(format!("tropical {trop} vs activity {act}")));
    }
    let t = DilworthTruncation::new(pair);
    let points: Vec<Value> = all_intersection_points(pair, w)?
        .iter()
        .map(|p| {
            json!({
                "i": p.i,
                "j": p.j,
                "coords": p.point.coords().iter().map(format_rational).collect::<Vec<_>>(),
                "monomial": fmt_xy(n, p.monomial),
            })
        })
        .collect();
    Ok(envelope(
        "chern-degree",
        json!({
            "n": n,
            "weight": weight_to_json(w),
            "expected_rank": t.expected_rank,
            "bases_of_d": t.d.bases().len(),
            "points": points,
            "total": trop.eval_at_ones().to_string(),
            "degree_polynomial": polynomial_to_json(&trop),
            "activity_polynomial": polynomial_to_json(&act),
            "agree": true,
        }),
    ))
}

/// Report and whether every check passed.
pub fn verify_cmd(suite: Suite, seed: u64) -> (Value, bool) {
    let r = run_suite(suite, seed);
    let ok = r.ok();
    let body = serde_json::to_value(&r).expect("report serializes");
    (envelope("verify", body), ok)
}

pub fn error_json(e: &Error) -> Value {
    json!({"schema": SCHEMA, "error": {"class": e.class(), "message": e.to_string()}})
}

/// Indented `key: value` rendering of a JSON value.
pub fn render_text(v: &Value) -> String {
    let mut out = String::new();
    render(v, 0, &mut out);
    out
}

fn scalar(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some("-".into()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) => Some(s.clone()),
        Value::Array(a) if a.iter().all(|x| !x.is_object() && !x.is_array()) => {
            Some(format!("[{}]", a.iter().map(|x| scalar(x).unwrap()).collect::<Vec<_>>().join(", ")))
        }
        Value::Array(a) if a.iter().all(|x| x.as_array().is_some_and(|r| r.iter().all(|y| !y.is_object() && !y.is_array()))) => {
            Some(format!("[{}]", a.iter().map(|x| scalar(x).unwrap()).collect::<Vec<_>>().join(", ")))
        }
        _ => None,
    }
}

fn is_polynomial(v: &Value) -> bool {
    v.get("vars").is_some() && v.get("terms").is_some()
}

fn poly_text(v: &Value) -> String {
    crate::io::polynomial_from_json(v).map(|p| p.to_string()).unwrap_or_else(|_| v.to_string())
}

fn render(v: &Value, indent: usize, out: &mut String) {
    let pad = "  ".repeat(indent);
    match v {
        Value::Object(m) => {
            for (k, x) in m {
                if is_polynomial(x) {
                    out.push_str(&format!("{pad}{k}: {}\n", poly_text(x)));
                } else if let Some(s) = scalar(x) {
                    out.push_str(&format!("{pad}{k}: {s}\n"));
                } else {
                    out.push_str(&format!("{pad}{k}:\n"));
                    render(x, indent + 1, out);
                }
            }
        }
        Value::Array(a) => {
            for x in a {
                if is_polynomial(x) {
                    out.push_str(&format!("{pad}- {}\n", poly_text(x)));
                } else if let Some(s) = scalar(x) {
                    out.push_str(&format!("{pad}- {s}\n"));
                } else {
                    out.push_str(&format!("{pad}-\n"));
                    render(x, indent + 1, out);
                }
            }
        }
        other => out.push_str(&format!("{pad}{}\n", scalar(other).unwrap_or_default())),
    }
}
