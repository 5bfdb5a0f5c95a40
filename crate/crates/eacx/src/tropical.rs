//! Cones of the permutohedral fan, Chern-class fans of tautological quotient
//! classes, transverse zero-dimensional intersections of translated fans,
//! intersection graphs `G(p)` and monomials `m(p)`.
//!
//! A chain `S_1 ⊊ S_2 ⊊ …` names the cone where coordinates are constant on
//! each block `S_i ∖ S_{i-1}` and blocks decrease: `S_1` holds the largest
//! coordinates.

use crate::activity::{xy_mask, Activity, Weight};
use crate::bits;
use crate::dilworth::MatroidPair;
use crate::error::{Error, Result};
use crate::exact_algebra::{MultigradedPolynomial, Rational};
use crate::matroid::{ordered_set_partitions, ChainOfSets, Matroid};
use num_bigint::BigInt;
use num_traits::One;
use rayon::prelude::*;
use std::collections::{BTreeMap, VecDeque};

/// A cone `σ_{S_•}` of the permutohedral fan.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FanCone {
    pub chain: ChainOfSets,
}

impl FanCone {
    pub fn dim(&self) -> usize {
        self.chain.len() - 1
    }

    /// Relative-interior membership of `x` (mod the all-ones vector).
    pub fn contains_in_interior(&self, x: &[Rational]) -> bool {
        let blocks = self.chain.blocks();
        let vals: Option<Vec<&Rational>> = blocks
            .iter()
            .map(|&b| {
                let mut it = bits::iter(b).map(|e| &x[e - 1]);
                let first = it.next()?;
                it.all(|v| v == first).then_some(first)
            })
            .collect();
        match vals {
            Some(v) => v.windows(2).all(|w| w[0] > w[1]),
            None => false,
        }
    }
}

/// The cones of `c_j(Q_M)`, all of dimension `n - 1 - j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChernFan {
    pub j: usize,
    pub cones: Vec<FanCone>,
}

/// Chains with `n - j` blocks whose minors `M|S_i / S_{i-1}` are single loops
/// or rank-one uniform, with exactly `corank(M) - j` loops.
pub fn chern_fan(m: &Matroid, j: usize) -> Result<ChernFan> {
    let n = m.n();
    if n == 0 || j > n - 1 {
        return Err(Error::OutOfRange(format!("j = {j} on {n} elements")));
    }
    let Some(loops_wanted) = m.corank().checked_sub(j) else {
        return Ok(ChernFan { j, cones: Vec::new() });
    };
    let cones = ordered_set_partitions(n)
        .into_iter()
        .filter(|ch| ch.len() == n - j && chain_qualifies(m, ch, loops_wanted))
        .map(|chain| FanCone { chain })
        .collect();
    Ok(ChernFan { j, cones })
}

fn chain_qualifies(m: &Matroid, ch: &ChainOfSets, loops_wanted: usize) -> bool {
    let mut loops = 0;
    for w in ch.sets().windows(2) {
        let (lo, hi) = (w[0], w[1]);
        let block = hi & !lo;
        let r = m.rank_of(hi) - m.rank_of(lo);
        if r == 0 && bits::size(block) == 1 {
            loops += 1;
        } else if r == 1 {
            let rl = m.rank_of(lo);
            if bits::iter(block).any(|e| m.rank_of(lo | 1 << (e - 1)) == rl) {
                return false;
            }
        } else {
            return false;
        }
    }
    loops == loops_wanted
}

/// Point of `R^n / R1`, normalized so that the first coordinate is zero.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ProjPoint {
    coords: Vec<Rational>,
}

impl ProjPoint {
    pub fn new(mut coords: Vec<Rational>) -> Self {
        if let Some(first) = coords.first().cloned() {
            for c in coords.iter_mut() {
                *c -= &first;
            }
        }
        ProjPoint { coords }
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }
}

/// A transverse point of `(σ + w_x) ∩ (τ + w_y)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntersectionPoint {
    pub point: ProjPoint,
    pub i: usize,
    pub j: usize,
    pub sigma: ChainOfSets,
    pub tau: ChainOfSets,
    /// `m(p)` as an x-then-y vertex mask.
    pub monomial: u64,
}

fn block_index(ch: &ChainOfSets) -> Vec<usize> {
    let blocks = ch.blocks();
    let mut idx = vec![0; ch.n()];
    for (k, &b) in blocks.iter().enumerate() {
        for e in bits::iter(b) {
            idx[e - 1] = k;
        }
    }
    idx
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

/// Solves `a_{b(e)} - c_{g(e)} = d_e` on the block graph of a cone pair.
/// Returns the `a` values when the graph is a spanning tree and both value
/// sequences strictly decrease.
fn solve_cone_pair(bs: &[usize], k: usize, gs: &[usize], l: usize, d: &[Rational]) -> Result<Option<Vec<Rational>>> {
    let n = bs.len();
    let verts = k + l;
    let mut parent: Vec<usize> = (0..verts).collect();
    let mut cycle = false;
    for e in 0..n {
        let (u, v) = (find(&mut parent, bs[e]), find(&mut parent, k + gs[e]));
        if u == v {
            cycle = true;
        } else {
            parent[u] = v;
        }
    }
    // potentials over a spanning forest, one root per component
    let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); verts];
    for e in 0..n {
        adj[bs[e]].push((k + gs[e], e));
        adj[k + gs[e]].push((bs[e], e));
    }
    let mut val: Vec<Option<Rational>> = vec![None; verts];
    for root in (0..verts).rev() {
        if val[root].is_some() {
            continue;
        }
        if !cycle && root != verts - 1 {
            unreachable!("a tree is connected");
        }
        val[root] = Some(Rational::default());
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            let vu = val[u].clone().unwrap();
            for &(v, e) in &adj[u] {
                // a-vertex minus c-vertex equals d_e
                let want = if u < k { &vu - &d[e] } else { &vu + &d[e] };
                match &val[v] {
                    None => {
                        val[v] = Some(want);
                        queue.push_back(v);
                    }
                    Some(x) if *x != want => {
                        // inconsistent cycle: empty intersection
                        return Ok(None);
                    }
                    _ => {}
                }
            }
        }
        if !cycle {
            break;
        }
    }
    if cycle {
        // a consistent cycle leaves a positive-dimensional solution set
        return Err(Error::NonGenericWeight("cone pair meets in positive dimension".into()));
    }
    let val: Vec<Rational> = val.into_iter().map(|v| v.unwrap()).collect();
    for seq in [&val[..k], &val[k..]] {
        for w in seq.windows(2) {
            if w[0] == w[1] {
                return Err(Error::NonGenericWeight("intersection point on a cone boundary".into()));
            }
            if w[0] < w[1] {
                return Ok(None);
            }
        }
    }
    Ok(Some(val[..k].to_vec()))
}

/// Transverse intersection points of `c_i(Q_{M1}) + w_x` and
/// `c_j(Q_{M2}) + w_y`, for `i + j = n - 1`, sorted by coordinates.
pub fn zero_dim_intersections(pair: &MatroidPair, w: &Weight, i: usize, j: usize) -> Result<Vec<IntersectionPoint>> {
    let n = pair.n();
    if i + j != n - 1 {
        return Err(Error::OutOfRange(format!("i + j = {} but n - 1 = {}", i + j, n - 1)));
    }
    if w.n() != n {
        return Err(Error::BadInput(format!("weight has length {}, ground set {n}", w.n())));
    }
    let f1 = chern_fan(&pair.m1, i)?;
    let f2 = chern_fan(&pair.m2, j)?;
    let d: Vec<Rational> = (0..n).map(|e| &w.wy[e] - &w.wx[e]).collect();
    let t_idx: Vec<(Vec<usize>, usize, &FanCone)> = f2.cones.iter().map(|c| (block_index(&c.chain), c.chain.len(), c)).collect();
    let found: Vec<Vec<IntersectionPoint>> = f1
        .cones
        .par_iter()
        .map(|s| -> Result<Vec<IntersectionPoint>> {
            let bs = block_index(&s.chain);
            let k = s.chain.len();
            let mut out = Vec::new();
            for (gs, l, t) in &t_idx {
                if let Some(a) = solve_cone_pair(&bs, k, gs, *l, &d)? {
                    let p: Vec<Rational> = (0..n).map(|e| &w.wx[e] + &a[bs[e]]).collect();
                    let monomial = monomial_of_point(pair, w, &p);
                    out.push(IntersectionPoint { point: ProjPoint::new(p), i, j, sigma: s.chain.clone(), tau: t.chain.clone(), monomial });
                }
            }
            Ok(out)
        })
        .collect::<Result<_>>()?;
    let mut pts: Vec<IntersectionPoint> = found.into_iter().flatten().collect();
    pts.sort_by(|a, b| a.point.cmp(&b.point));
    pts.dedup_by(|a, b| a.point == b.point);
    Ok(pts)
}

/// Zero-dimensional intersection points for every `i + j = n - 1`.
pub fn all_intersection_points(pair: &MatroidPair, w: &Weight) -> Result<Vec<IntersectionPoint>> {
    let n = pair.n();
    let mut all = Vec::new();
    for i in 0..n {
        all.extend(zero_dim_intersections(pair, w, i, n - 1 - i)?);
    }
    Ok(all)
}

fn independent_of_higher(m: &Matroid, e: &[Rational], i: usize) -> bool {
    let higher = (0..e.len()).filter(|&j| e[j] > e[i]).fold(0u32, |s, j| s | 1 << j);
    m.rank_of(higher | 1 << i) > m.rank_of(higher)
}

/// `m(p)`: `x_i` when `i` is independent in `M1` of the elements with larger
/// `p - w_x`, `y_i` likewise for `M2` and `p - w_y`.
pub fn monomial_of_point(pair: &MatroidPair, w: &Weight, p: &[Rational]) -> u64 {
    let n = pair.n();
    let e1: Vec<Rational> = (0..n).map(|i| &p[i] - &w.wx[i]).collect();
    let e2: Vec<Rational> = (0..n).map(|i| &p[i] - &w.wy[i]).collect();
    let x = (0..n).filter(|&i| independent_of_higher(&pair.m1, &e1, i)).fold(0u32, |s, i| s | 1 << i);
    let y = (0..n).filter(|&i| independent_of_higher(&pair.m2, &e2, i)).fold(0u32, |s, i| s | 1 << i);
    xy_mask(n, x, y)
}

/// Bipartite graph with parts the distinct values of `p - w_x` and `p - w_y`
/// (largest first) and edge `i` joining `p_i - w_x,i` to `p_i - w_y,i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntersectionGraph {
    pub v1: Vec<Rational>,
    pub v2: Vec<Rational>,
    /// Endpoints of edge `i` as indices into `v1`, `v2`.
    pub edges: Vec<(usize, usize)>,
    /// Per vertex of `v1`: the minor `M1|{e ≥ v}/{e > v}` as (ground, rank).
    pub minors1: Vec<(u32, usize)>,
    pub minors2: Vec<(u32, usize)>,
}

fn part(m: &Matroid, e: &[Rational]) -> (Vec<Rational>, Vec<usize>, Vec<(u32, usize)>) {
    let mut vals: Vec<Rational> = e.to_vec();
    vals.sort_by(|a, b| b.cmp(a));
    vals.dedup();
    let idx: Vec<usize> = e.iter().map(|x| vals.iter().position(|v| v == x).unwrap()).collect();
    let minors = vals
        .iter()
        .map(|v| {
            let ge = (0..e.len()).filter(|&j| e[j] >= *v).fold(0u32, |s, j| s | 1 << j);
            let gt = (0..e.len()).filter(|&j| e[j] > *v).fold(0u32, |s, j| s | 1 << j);
            (ge & !gt, m.rank_of(ge) - m.rank_of(gt))
        })
        .collect();
    (vals, idx, minors)
}

/// Builds `G(p)`; a cycle (non-generic weight) is reported with the edge
/// label that closes it.
pub fn graph_of_point(pair: &MatroidPair, w: &Weight, p: &[Rational]) -> Result<IntersectionGraph> {
    let n = pair.n();
    let e1: Vec<Rational> = (0..n).map(|i| &p[i] - &w.wx[i]).collect();
    let e2: Vec<Rational> = (0..n).map(|i| &p[i] - &w.wy[i]).collect();
    let (v1, i1, minors1) = part(&pair.m1, &e1);
    let (v2, i2, minors2) = part(&pair.m2, &e2);
    let k = v1.len();
    let mut parent: Vec<usize> = (0..k + v2.len()).collect();
    for e in 0..n {
        let (a, b) = (find(&mut parent, i1[e]), find(&mut parent, k + i2[e]));
        if a == b {
            return Err(Error::CycleError(e + 1));
        }
        parent[a] = b;
    }
    let edges = i1.into_iter().zip(i2).collect();
    Ok(IntersectionGraph { v1, v2, edges, minors1, minors2 })
}

fn u_vars() -> Vec<String> {
    MultigradedPolynomial::names(&["u1", "u2"])
}

/// `Σ_{i+j=n-1} #points(i, j) u1^i u2^j`.
pub fn degree_polynomial(pair: &MatroidPair, w: &Weight) -> Result<MultigradedPolynomial> {
    let mut p = MultigradedPolynomial::zero(&u_vars());
    for pt in all_intersection_points(pair, w)? {
        p.add_term(vec![pt.i as i64, pt.j as i64], BigInt::one());
    }
    Ok(p)
}

/// `Σ_B u1^{rank M2 - 1 + |E1(B)|} u2^{rank M1 - 1 + |E2(B)|}` over bases of
/// `D` when it has expected rank, zero otherwise.
pub fn degree_polynomial_from_activity(pair: &MatroidPair, w: &Weight) -> Result<MultigradedPolynomial> {
    let mut p = MultigradedPolynomial::zero(&u_vars());
    let act = Activity::new(pair, w)?;
    if !act.trunc.expected_rank {
        return Ok(p);
    }
    let (r1, r2) = (pair.m1.rank() as i64, pair.m2.rank() as i64);
    for rec in act.records()? {
        p.add_term(vec![r2 - 1 + bits::size(rec.e1) as i64, r1 - 1 + bits::size(rec.e2) as i64], BigInt::one());
    }
    Ok(p)
}

/// `(|E2|, |E1|)` read off the monomials of the intersection points.
pub fn tropical_ea_distribution(pair: &MatroidPair, w: &Weight) -> Result<BTreeMap<(usize, usize), usize>> {
    let n = pair.n();
    let mut out = BTreeMap::new();
    for pt in all_intersection_points(pair, w)? {
        let (x, y) = crate::activity::split_xy(n, pt.monomial);
        let b = x & y;
        *out.entry((bits::size(y & !b), bits::size(x & !b))).or_insert(0) += 1;
    }
    Ok(out)
}

/// The intersection point whose monomial is the facet of the basis `b`.
pub fn facet_point(pair: &MatroidPair, w: &Weight, b: u32) -> Result<ProjPoint> {
    let all = facet_points(pair, w)?;
    all.into_iter()
        .find(|(basis, _)| *basis == b)
        .map(|(_, p)| p)
        .ok_or_else(|| Error::NotABasis(bits::elems(b)))
}

/// `facet_point` for every basis of `D`, in basis order.
pub fn facet_points(pair: &MatroidPair, w: &Weight) -> Result<Vec<(u32, ProjPoint)>> {
    let act = Activity::new(pair, w)?;
    if !act.trunc.expected_rank {
        return Err(Error::NotExpectedRank);
    }
    let points = all_intersection_points(pair, w)?;
    act.trunc
        .d
        .bases()
        .iter()
        .map(|&b| {
            let facet = act.activity_sets(b)?.facet(pair.n());
            let hits: Vec<&IntersectionPoint> = points.iter().filter(|p| p.monomial == facet).collect();
            match hits.as_slice() {
                [one] => Ok((b, one.point.clone())),
                _ => Err(Error::BadInput(format!("{} intersection points carry the facet of {}", hits.len(), bits::fmt(b)))),
            }
        })
        .collect()
}
