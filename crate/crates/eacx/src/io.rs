//! JSON formats for matroids, weights, realizations and polynomials.
//!
//! Matroids:
//! `{"n":N,"bases":[[..],..]}`, `{"uniform":{"r":R,"n":N}}`,
//! `{"named":"fano"|"nonfano"}`, `{"matrix":[["p/q",..],..]}`,
//! `{"schubert":{"chain":[[..],..],"a":[..]}}`.
//! Weights: `{"wx":["p/q",..],"wy":[..]}`, `{"lex":N}`, `{"seed":K}`.

use crate::activity::{lex_weight, random_weight, Weight};
use crate::bits;
use crate::error::{Error, Result};
use crate::exact_algebra::{format_rational, parse_rational, MultigradedPolynomial, QMatrix, Rational};
use crate::matroid::{fano, nonfano, schubert_matroid, uniform, ChainOfSets, Matroid, SchubertData};
use crate::realizable::Realization;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct UniformSpec {
    pub r: usize,
    pub n: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SchubertSpec {
    /// Chain sets as 1-based element lists; the empty set may be omitted.
    pub chain: Vec<Vec<usize>>,
    /// Bounds; `a_0 = 0` may be omitted.
    pub a: Vec<usize>,
}

/// A matroid as written in JSON.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged, deny_unknown_fields)]
pub enum MatroidSpec {
    Bases { n: usize, bases: Vec<Vec<usize>> },
    Uniform { uniform: UniformSpec },
    Named { named: String },
    Matrix { matrix: Vec<Vec<String>> },
    Schubert { schubert: SchubertSpec },
}

fn parse_matrix(rows: &[Vec<String>]) -> Result<QMatrix> {
    let parsed: Vec<Vec<Rational>> = rows.iter().map(|r| r.iter().map(|s| parse_rational(s)).collect::<Result<_>>()).collect::<Result<_>>()?;
    if let Some(w) = parsed.first().map(Vec::len) {
        if parsed.iter().any(|r| r.len() != w) {
            return Err(Error::BadInput("ragged matrix".into()));
        }
    }
    Ok(QMatrix::from_rows(parsed))
}

impl MatroidSpec {
    pub fn build(&self) -> Result<Matroid> {
        match self {
            MatroidSpec::Bases { n, bases } => Matroid::from_basis_lists(*n, bases),
            MatroidSpec::Uniform { uniform: u } => uniform(u.r, u.n),
            MatroidSpec::Named { named } => match named.as_str() {
                "fano" => Ok(fano()),
                "nonfano" => Ok(nonfano()),
                other => Err(Error::BadInput(format!("unknown named matroid {other}"))),
            },
            MatroidSpec::Matrix { matrix } => {
                let m = parse_matrix(matrix)?;
                if m.cols() == 0 {
                    return Err(Error::BadInput("matrix has no columns".into()));
                }
                Ok(Matroid::from_matrix(&m))
            }
            MatroidSpec::Schubert { schubert } => {
                let n = schubert.chain.iter().flatten().copied().max().unwrap_or(0);
                let sets: Vec<u32> = schubert.chain.iter().map(|s| bits::set(s)).collect();
                let chain = ChainOfSets::new(n, &sets)?;
                schubert_matroid(&SchubertData::new(chain, &schubert.a)?)
            }
        }
    }
}

pub fn parse_matroid(text: &str) -> Result<Matroid> {
    let spec: MatroidSpec = serde_json::from_str(text).map_err(|e| Error::BadInput(format!("matroid JSON: {e}")))?;
    spec.build()
}

/// `{"n":N,"bases":[..]}` form of a matroid.
pub fn matroid_to_json(m: &Matroid) -> Value {
    json!({ "n": m.n(), "bases": m.basis_lists() })
}

/// A weight as written in JSON; `Seed` needs the ground-set size.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged, deny_unknown_fields)]
pub enum WeightSpec {
    Explicit { wx: Vec<String>, wy: Vec<String> },
    Lex { lex: usize },
    Seed { seed: u64 },
}

impl WeightSpec {
    pub fn build(&self, n: usize) -> Result<Weight> {
        let w = match self {
            WeightSpec::Explicit { wx, wy } => {
                let p = |v: &[String]| v.iter().map(|s| parse_rational(s)).collect::<Result<Vec<_>>>();
                Weight::new(p(wx)?, p(wy)?)?
            }
            WeightSpec::Lex { lex } => lex_weight(*lex),
            WeightSpec::Seed { seed } => random_weight(n, *seed),
        };
        if w.n() != n {
            return Err(Error::BadInput(format!("weight has length {}, ground set {n}", w.n())));
        }
        Ok(w)
    }
}

pub fn parse_weight(text: &str, n: usize) -> Result<Weight> {
    let spec: WeightSpec = serde_json::from_str(text).map_err(|e| Error::BadInput(format!("weight JSON: {e}")))?;
    spec.build(n)
}

pub fn weight_to_json(w: &Weight) -> Value {
    let f = |v: &[Rational]| v.iter().map(format_rational).collect::<Vec<_>>();
    json!({ "wx": f(&w.wx), "wy": f(&w.wy) })
}

/// `{"matrix":[..]}`, optionally with `"matroid"`: the declared matroid the
/// column matroid must equal.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RealizationSpec {
    pub matrix: Vec<Vec<String>>,
    #[serde(default)]
    pub matroid: Option<MatroidSpec>,
}

pub fn parse_realization(text: &str) -> Result<Realization> {
    let spec: RealizationSpec = serde_json::from_str(text).map_err(|e| Error::BadInput(format!("realization JSON: {e}")))?;
    let m = parse_matrix(&spec.matrix)?;
    match &spec.matroid {
        Some(d) => Realization::verified(m, &d.build()?),
        None => Ok(Realization::from_matrix(m)),
    }
}

/// `{"vars":[..],"terms":[{"exp":[..],"coef":"int"},..]}`, terms sorted by
/// exponent vector.
pub fn polynomial_to_json(p: &MultigradedPolynomial) -> Value {
    let terms: Vec<Value> = p.terms().map(|(e, c)| json!({ "exp": e, "coef": c.to_string() })).collect();
    json!({ "vars": p.vars(), "terms": terms })
}

pub fn polynomial_from_json(v: &Value) -> Result<MultigradedPolynomial> {
    let bad = || Error::BadInput("polynomial JSON".into());
    let vars: Vec<String> = serde_json::from_value(v.get("vars").ok_or_else(bad)?.clone()).map_err(|_| bad())?;
    let mut p = MultigradedPolynomial::zero(&vars);
    for t in v.get("terms").and_then(Value::as_array).ok_or_else(bad)? {
        let exp: Vec<i64> = serde_json::from_value(t.get("exp").ok_or_else(bad)?.clone()).map_err(|_| bad())?;
        let coef = t.get("coef").and_then(Value::as_str).ok_or_else(bad)?.parse().map_err(|_| bad())?;
        if exp.len() != vars.len() {
            return Err(bad());
        }
        p.add_term(exp, coef);
    }
    Ok(p)
}
