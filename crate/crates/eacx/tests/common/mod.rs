//! Independent brute-force oracles. Nothing here calls into the library's
//! own rank, circuit or homology code; everything is recomputed from basis
//! lists.
#![allow(dead_code)]

use std::collections::BTreeMap;

pub fn set(elems: &[usize]) -> u32 {
    elems.iter().fold(0, |a, &e| a | 1 << (e - 1))
}

pub fn parse_set(s: &str) -> u32 {
    s.chars().map(|c| c.to_digit(10).unwrap() as usize).fold(0, |a, e| a | 1 << (e - 1))
}

pub fn full(n: usize) -> u32 {
    (1u32 << n) - 1
}

/// Rank of `s` as the largest intersection with a basis.
pub fn rank(bases: &[u32], s: u32) -> usize {
    bases.iter().map(|b| (b & s).count_ones() as usize).max().unwrap_or(0)
}

pub fn k_subsets(n: usize, k: usize) -> Vec<u32> {
    (0..1u32 << n).filter(|s| s.count_ones() as usize == k).collect()
}

/// Fano bases written out by hand: 3-subsets of [7] minus the seven lines.
pub fn fano_lines() -> Vec<u32> {
    ["236", "245", "347", "127", "135", "146", "567"].iter().map(|s| parse_set(s)).collect()
}

pub fn fano_bases() -> Vec<u32> {
    let lines = fano_lines();
    k_subsets(7, 3).into_iter().filter(|s| !lines.contains(s)).collect()
}

pub fn nonfano_bases() -> Vec<u32> {
    let lines: Vec<u32> = fano_lines().into_iter().filter(|&l| l != parse_set("567")).collect();
    k_subsets(7, 3).into_iter().filter(|s| !lines.contains(s)).collect()
}

pub fn uniform_bases(r: usize, n: usize) -> Vec<u32> {
    k_subsets(n, r)
}

/// All families of disjoint nonempty subsets of `s`, by recursion on the
/// lowest remaining element (either left out or placed in a block).
fn subpartitions(s: u32) -> Vec<Vec<u32>> {
    if s == 0 {
        return vec![vec![]];
    }
    let low = s & s.wrapping_neg();
    let rest = s & !low;
    let mut out = Vec::new();
    for fam in subpartitions(rest) {
        out.push(fam.clone());
    }
    // blocks containing `low`
    let mut t = rest;
    loop {
        let block = low | t;
        for fam in subpartitions(rest & !t) {
            let mut f = fam;
            f.push(block);
            out.push(f);
        }
        if t == 0 {
            break;
        }
        t = (t - 1) & rest;
    }
    out
}

/// Truncation rank straight from the minimum over disjoint families.
pub fn dilworth_rank(b1: &[u32], b2: &[u32], s: u32) -> usize {
    subpartitions(s)
        .into_iter()
        .map(|fam| {
            let used = fam.iter().fold(0, |a, &t| a | t);
            let part: i64 = fam.iter().map(|&t| rank(b1, t) as i64 + rank(b2, t) as i64 - 1).sum();
            (part + (s & !used).count_ones() as i64) as usize
        })
        .min()
        .unwrap()
}

/// Bases of the truncation from the oracle rank.
pub fn dilworth_bases(b1: &[u32], b2: &[u32], n: usize) -> Vec<u32> {
    let r = dilworth_rank(b1, b2, full(n));
    k_subsets(n, r).into_iter().filter(|&s| dilworth_rank(b1, b2, s) == r).collect()
}

/// Minimal `C` with `r1(C) + r2(C) = |C|`.
pub fn dilworth_circuits(b1: &[u32], b2: &[u32], n: usize) -> Vec<u32> {
    let mut all: Vec<u32> = (1..=full(n)).filter(|&c| rank(b1, c) + rank(b2, c) == c.count_ones() as usize).collect();
    all.sort_by_key(|c| c.count_ones());
    let mut kept: Vec<u32> = Vec::new();
    for c in all {
        if !kept.iter().any(|&k| k & !c == 0) {
            kept.push(c);
        }
    }
    kept.sort();
    kept
}

fn binom(n: i64, k: i64) -> i64 {
    if k < 0 || k > n {
        return 0;
    }
    (0..k).fold(1, |a, i| a * (n - i) / (i + 1))
}

/// Tutte coefficients `(i, j) -> [x^i y^j]` from the corank-nullity sum,
/// expanded with binomials.
pub fn tutte(bases: &[u32], n: usize) -> BTreeMap<(i64, i64), i64> {
    let r = rank(bases, full(n)) as i64;
    let mut out = BTreeMap::new();
    for s in 0..=full(n) {
        let rs = rank(bases, s) as i64;
        let (a, b) = (r - rs, s.count_ones() as i64 - rs);
        for i in 0..=a {
            for j in 0..=b {
                let c = binom(a, i) * binom(b, j) * if (a - i + b - j) % 2 == 0 { 1 } else { -1 };
                *out.entry((i, j)).or_insert(0) += c;
            }
        }
    }
    out.retain(|_, v| *v != 0);
    out
}

/// Splits `C = I1 ⊔ I2` with `I_k` independent in `M_k`.
pub fn splits(b1: &[u32], b2: &[u32], c: u32) -> Vec<(u32, u32)> {
    let mut out = Vec::new();
    let mut i1 = c;
    loop {
        let i2 = c & !i1;
        if rank(b1, i1) == i1.count_ones() as usize && rank(b2, i2) == i2.count_ones() as usize {
            out.push((i1, i2));
        }
        if i1 == 0 {
            break;
        }
        i1 = (i1 - 1) & c;
    }
    out
}

/// Reduced Euler characteristic `-1 + f_0 - f_1 + ...` of the complex
/// generated by `facets`, enumerating faces directly.
pub fn reduced_euler(facets: &[u64]) -> i64 {
    let mut faces = std::collections::BTreeSet::new();
    for &f in facets {
        let mut t = f;
        loop {
            faces.insert(t);
            if t == 0 {
                break;
            }
            t = (t - 1) & f;
        }
    }
    faces.iter().map(|f| if f.count_ones() % 2 == 1 { 1 } else { -1 }).sum::<i64>()
}

pub fn fixture(name: &str) -> String {
    let path = format!("{}/fixtures/{name}", env!("CARGO_MANIFEST_DIR"));
    std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{path}: {e}"))
}
