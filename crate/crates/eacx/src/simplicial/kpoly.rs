//! K-polynomials and multidegrees of Stanley-Reisner rings.

use super::{closed_faces_of, reduced_homology_dims, SimplicialComplex};
use crate::error::{Error, Result};
use crate::exact_algebra::MultigradedPolynomial;
use num_bigint::BigInt;
use num_traits::Zero;
use std::collections::BTreeMap;
use std::str::FromStr;

/// Gradings of the polynomial ring in `x_1..x_n, y_1..y_n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Grading {
    /// One variable per vertex: `T1_i` for `x_i`, `T2_i` for `y_i`.
    Fine,
    /// `x_i ↦ U1`, `y_i ↦ U2`.
    Z2,
    /// `x_i, y_i ↦ T_i`.
    Zn,
    /// `x_i ↦ U1 T_i`, `y_i ↦ U2 T_i`.
    Z2xZn,
    /// Everything to `U`.
    Z,
}

impl FromStr for Grading {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "fine" => Grading::Fine,
            "z2" => Grading::Z2,
            "zn" => Grading::Zn,
            "z2xzn" => Grading::Z2xZn,
            "z" => Grading::Z,
            _ => return Err(Error::BadInput(format!("unknown grading {s}"))),
        })
    }
}

/// Target variables and the exponent vector of each of the `2n` vertices
/// (x block, then y block) under `g`.
pub fn xy_grading(n: usize, g: Grading) -> (Vec<String>, Vec<Vec<i64>>) {
    let unit = |len: usize, k: &[usize]| {
        let mut e = vec![0i64; len];
        for &i in k {
            e[i] += 1;
        }
        e
    };
    match g {
        Grading::Fine => {
            let vars = (1..=n).map(|i| format!("T1_{i}")).chain((1..=n).map(|i| format!("T2_{i}"))).collect();
            (vars, (0..2 * n).map(|v| unit(2 * n, &[v])).collect())
        }
        Grading::Z2 => (
            MultigradedPolynomial::names(&["U1", "U2"]),
            (0..2 * n).map(|v| unit(2, &[v / n])).collect(),
        ),
        Grading::Zn => ((1..=n).map(|i| format!("T{i}")).collect(), (0..2 * n).map(|v| unit(n, &[v % n])).collect()),
        Grading::Z2xZn => {
            let vars = ["U1".to_string(), "U2".to_string()].into_iter().chain((1..=n).map(|i| format!("T{i}"))).collect();
            (vars, (0..2 * n).map(|v| unit(n + 2, &[v / n, 2 + v % n])).collect())
        }
        Grading::Z => (vec!["U".to_string()], (0..2 * n).map(|_| vec![1]).collect()),
    }
}

const MAX_VERTICES: usize = 24;

/// Face indicator over the compressed vertex set, closed downward.
fn face_table(cx: &SimplicialComplex) -> Result<(Vec<usize>, Vec<i64>)> {
    let verts = cx.vertex_indices();
    let m = verts.len();
    if m > MAX_VERTICES {
        return Err(Error::TooLarge(format!("{m} vertices")));
    }
    let compress = |s: u64| verts.iter().enumerate().filter(|&(_, &v)| s >> v & 1 == 1).fold(0usize, |a, (i, _)| a | 1 << i);
    let mut h = vec![0i64; 1 << m];
    for &f in cx.facets() {
        h[compress(f)] = 1;
    }
    for b in 0..m {
        for s in 0..1usize << m {
            if s >> b & 1 == 0 && h[s | 1 << b] == 1 {
                h[s] = 1;
            }
        }
    }
    Ok((verts, h))
}

fn table_to_poly(vars: &[String], m: usize, g: &[i64], key: impl Fn(usize) -> usize) -> MultigradedPolynomial {
    let mut p = MultigradedPolynomial::zero(vars);
    for (s, &c) in g.iter().enumerate() {
        if c != 0 {
            let k = key(s);
            p.add_term((0..m).map(|i| (k >> i & 1) as i64).collect(), BigInt::from(c));
        }
    }
    p
}

/// `Σ_{σ∈Δ} Π_{j∈σ} T_j Π_{j∉σ} (1 - T_j)`, with one variable per vertex of
/// the ground set in increasing index order. The coefficient of `T^S` is the
/// Möbius transform `Σ_{σ⊆S, σ∈Δ} (-1)^{|S∖σ|}`.
pub fn k_polynomial_fine(cx: &SimplicialComplex, vars: &[String]) -> Result<MultigradedPolynomial> {
    if cx.is_void() {
        return Ok(MultigradedPolynomial::zero(vars));
    }
    let (verts, mut g) = face_table(cx)?;
    let m = verts.len();
    assert_eq!(vars.len(), m, "one variable per vertex");
    for b in 0..m {
        for s in 0..1usize << m {
            if s >> b & 1 == 1 {
                g[s] -= g[s ^ 1 << b];
            }
        }
    }
    Ok(table_to_poly(vars, m, &g, |s| s))
}

/// `K(Δ; 1 - T)` in the fine grading. The coefficient of `T^S` is
/// `Σ_{U ⊇ E∖S, U∈Δ} (-1)^{|U| - |E∖S|}`.
pub fn k_polynomial_fine_substituted(cx: &SimplicialComplex, vars: &[String]) -> Result<MultigradedPolynomial> {
    if cx.is_void() {
        return Ok(MultigradedPolynomial::zero(vars));
    }
    let (verts, mut g) = face_table(cx)?;
    let m = verts.len();
    assert_eq!(vars.len(), m, "one variable per vertex");
    for b in 0..m {
        for s in 0..1usize << m {
            if s >> b & 1 == 0 {
                g[s] -= g[s | 1 << b];
            }
        }
    }
    let full = (1usize << m) - 1;
    Ok(table_to_poly(vars, m, &g, |a| full ^ a))
}

fn binom(n: i64, k: i64) -> BigInt {
    let mut r = BigInt::from(1);
    for i in 0..k {
        r = r * (n - i) / (i + 1);
    }
    r
}

/// Exponent vectors `f ≤ e` with `|f| = k`.
fn bounded_compositions(e: &[i64], k: i64, out: &mut Vec<Vec<i64>>) {
    fn go(e: &[i64], i: usize, left: i64, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if i == e.len() {
            if left == 0 {
                out.push(cur.clone());
            }
            return;
        }
        let rest: i64 = e[i + 1..].iter().sum();
        let lo = (left - rest).max(0);
        for v in lo..=left.min(e[i]) {
            cur.push(v);
            go(e, i + 1, left - v, cur, out);
            cur.pop();
        }
    }
    go(e, 0, k, &mut Vec::with_capacity(e.len()), out);
}

/// Lowest-degree part of `p(1 - Z)`, found degree by degree.
pub fn lowest_part_after_one_minus(p: &MultigradedPolynomial) -> Result<MultigradedPolynomial> {
    if p.terms().any(|(e, _)| e.iter().any(|&x| x < 0)) {
        return Err(Error::NotPolynomial("negative exponent".into()));
    }
    let max = p.terms().map(|(e, _)| MultigradedPolynomial::total_degree(e)).max().unwrap_or(0);
    let mut buf = Vec::new();
    for k in 0..=max {
        let mut acc: BTreeMap<Vec<i64>, BigInt> = BTreeMap::new();
        for (e, c) in p.terms() {
            buf.clear();
            bounded_compositions(e, k, &mut buf);
            for f in &buf {
                let mut coef = c.clone();
                for (&ei, &fi) in e.iter().zip(f) {
                    if fi > 0 {
                        coef *= binom(ei, fi);
                    }
                }
                if k % 2 == 1 {
                    coef = -coef;
                }
                *acc.entry(f.clone()).or_insert_with(BigInt::zero) += coef;
            }
        }
        let mut r = MultigradedPolynomial::zero(p.vars());
        for (f, c) in acc {
            r.add_term(f, c);
        }
        if !r.is_zero() {
            return Ok(r);
        }
    }
    Ok(MultigradedPolynomial::zero(p.vars()))
}

/// Multidegree in the grading `images` (one exponent vector over `target`
/// per ground vertex): coarsen the K-polynomial, substitute `Z ↦ 1 - Z`,
/// keep the lowest-degree terms.
pub fn multidegree(cx: &SimplicialComplex, target: &[String], images: &[Vec<i64>]) -> Result<MultigradedPolynomial> {
    if !cx.is_pure() {
        return Err(Error::NotPure);
    }
    let fine_vars: Vec<String> = (0..cx.m()).map(|i| format!("v{i}")).collect();
    let k = k_polynomial_fine(cx, &fine_vars)?.coarsen(target, images);
    lowest_part_after_one_minus(&k)
}

/// `Σ_{facets F} Π_{j∉F} ℓ_j` where `ℓ_j` is the linear form with
/// coefficients `images[j]`.
pub fn facet_complement_enumerator(cx: &SimplicialComplex, target: &[String], images: &[Vec<i64>]) -> MultigradedPolynomial {
    let verts = cx.vertex_indices();
    let forms: Vec<MultigradedPolynomial> = images
        .iter()
        .map(|img| {
            let mut p = MultigradedPolynomial::zero(target);
            for (k, &c) in img.iter().enumerate() {
                if c != 0 {
                    let mut e = vec![0; target.len()];
                    e[k] = 1;
                    p.add_term(e, BigInt::from(c));
                }
            }
            p
        })
        .collect();
    let mut sum = MultigradedPolynomial::zero(target);
    for &f in cx.facets() {
        let mut term = MultigradedPolynomial::one(target);
        for (i, &v) in verts.iter().enumerate() {
            if f >> v & 1 == 0 {
                term = term.mul(&forms[i]);
            }
        }
        sum = sum.add(&term);
    }
    sum
}

/// `Σ_σ (-1)^{dim link σ + 1} dim H̃_top(link σ) Π_{j∉σ} T_j`, summed over
/// faces whose link is not a cone. Equals `K(Δ; 1 - T)` when `Δ` is
/// Cohen-Macaulay.
pub fn reisner_expansion(cx: &SimplicialComplex, vars: &[String]) -> MultigradedPolynomial {
    let verts = cx.vertex_indices();
    assert_eq!(vars.len(), verts.len());
    let mut p = MultigradedPolynomial::zero(vars);
    if cx.is_void() {
        return p;
    }
    for s in closed_faces_of(cx) {
        let link = cx.link(s).expect("closed faces are faces");
        let d = link.dim();
        let h = reduced_homology_dims(&link);
        let top = h[(d + 1) as usize];
        if top == 0 {
            continue;
        }
        let c = BigInt::from(top) * if d % 2 == 0 { -1 } else { 1 };
        p.add_term(verts.iter().map(|&v| (s >> v & 1 == 0) as i64).collect(), c);
    }
    p
}
