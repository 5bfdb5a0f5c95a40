//! Fine Betti numbers of Stanley-Reisner rings from link homology in the
//! Alexander dual.

use super::{reduced_homology_dims, SimplicialComplex};
use crate::exact_algebra::MultigradedPolynomial;
use num_bigint::BigInt;
use rayon::prelude::*;
use std::collections::BTreeMap;

/// `(i, σ) ↦ β_{i,σ}`, fine degrees as vertex masks. Zero entries are absent.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BettiTable {
    pub entries: BTreeMap<(usize, u64), u64>,
}

impl BettiTable {
    pub fn get(&self, i: usize, sigma: u64) -> u64 {
        self.entries.get(&(i, sigma)).copied().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        self.entries.keys().map(|k| k.0).max().unwrap_or(0)
    }

    /// Total Betti numbers `β_i`.
    pub fn totals(&self) -> Vec<u64> {
        let mut t = vec![0; self.max_degree() + 1];
        for (&(i, _), &b) in &self.entries {
            t[i] += b;
        }
        t
    }

    /// Coarsens fine degrees through `key`, summing counts.
    pub fn coarsen<K: Ord>(&self, key: impl Fn(u64) -> K) -> BTreeMap<(usize, K), u64> {
        let mut out = BTreeMap::new();
        for (&(i, s), &b) in &self.entries {
            *out.entry((i, key(s))).or_insert(0) += b;
        }
        out
    }
}

/// `β_{i,σ} = dim H̃_{i-2}(link_{Δ^∨}(σ̄))` for `1 ≤ i ≤ up_to_degree`, and
/// `β_{0,∅} = 1`.
pub fn hochster_betti(cx: &SimplicialComplex, up_to_degree: usize) -> BettiTable {
    let mut t = BettiTable::default();
    if cx.is_void() {
        return t;
    }
    t.entries.insert((0, 0), 1);
    let dual = cx.alexander_dual();
    if dual.is_void() {
        return t;
    }
    let ground = cx.ground();
    let found: Vec<Vec<((usize, u64), u64)>> = dual
        .faces()
        .par_iter()
        .map(|&tau| {
            let link = dual.link(tau).expect("face of the dual");
            let h = reduced_homology_dims(&link);
            let sigma = ground & !tau;
            h.iter()
                .enumerate()
                .filter(|&(k, &v)| v != 0 && k < up_to_degree)
                // h[k] = H̃_{k-1}, so i - 2 = k - 1
                .map(|(k, &v)| ((k + 1, sigma), v as u64))
                .collect()
        })
        .collect();
    for e in found.into_iter().flatten() {
        t.entries.insert(e.0, e.1);
    }
    t
}

/// `Σ_i Σ_σ (-1)^i β_{i,σ} T^σ` in the variables `vars`, one per vertex index
/// listed in `vertices`.
pub fn k_from_betti(table: &BettiTable, vars: &[String], vertices: &[usize]) -> MultigradedPolynomial {
    let mut p = MultigradedPolynomial::zero(vars);
    for (&(i, s), &b) in &table.entries {
        let exp: Vec<i64> = vertices.iter().map(|&v| (s >> v & 1) as i64).collect();
        let c = BigInt::from(b) * if i % 2 == 0 { 1 } else { -1 };
        p.add_term(exp, c);
    }
    p
}
