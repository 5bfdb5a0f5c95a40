//! Reduced homology over the rationals via exact ranks of boundary matrices.

use super::SimplicialComplex;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use rayon::prelude::*;
use std::collections::HashMap;

type Row<T> = Vec<(u32, T)>;

trait Coef: Clone + Sized {
    fn is_zero(&self) -> bool;
    fn mul_sub(a: &Self, x: &Self, b: &Self, y: &Self) -> Option<Self>;
    fn gcd(&self, o: &Self) -> Self;
    fn div(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
    fn is_negative(&self) -> bool;
    fn zero() -> Self;
}

impl Coef for i64 {
    fn is_zero(&self) -> bool {
        *self == 0
    }
    // a*x - b*y
    fn mul_sub(a: &Self, x: &Self, b: &Self, y: &Self) -> Option<Self> {
        a.checked_mul(*x)?.checked_sub(b.checked_mul(*y)?)
    }
    fn gcd(&self, o: &Self) -> Self {
        Integer::gcd(self, o)
    }
    fn div(&self, o: &Self) -> Self {
        self / o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn is_negative(&self) -> bool {
        *self < 0
    }
    fn zero() -> Self {
        0
    }
}

impl Coef for BigInt {
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn mul_sub(a: &Self, x: &Self, b: &Self, y: &Self) -> Option<Self> {
        Some(a * x - b * y)
    }
    fn gcd(&self, o: &Self) -> Self {
        Integer::gcd(self, o)
    }
    fn div(&self, o: &Self) -> Self {
        self / o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn is_negative(&self) -> bool {
        Signed::is_negative(self)
    }
    fn zero() -> Self {
        <BigInt as Zero>::zero()
    }
}

/// `a*r - b*p` on sparse rows, then divided by its content.
fn combine<T: Coef>(a: &T, r: &Row<T>, b: &T, p: &Row<T>) -> Option<Row<T>> {
    let zero = T::zero();
    let mut out: Row<T> = Vec::with_capacity(r.len() + p.len());
    let (mut i, mut j) = (0, 0);
    while i < r.len() || j < p.len() {
        let ci = r.get(i).map_or(u32::MAX, |e| e.0);
        let cj = p.get(j).map_or(u32::MAX, |e| e.0);
        let (c, v) = if ci < cj {
            i += 1;
            (ci, T::mul_sub(a, &r[i - 1].1, b, &zero)?)
        } else if cj < ci {
            j += 1;
            (cj, T::mul_sub(a, &zero, b, &p[j - 1].1)?)
        } else {
            i += 1;
            j += 1;
            (ci, T::mul_sub(a, &r[i - 1].1, b, &p[j - 1].1)?)
        };
        if !v.is_zero() {
            out.push((c, v));
        }
    }
    if let Some(first) = out.first() {
        let mut g = first.1.clone();
        for e in &out[1..] {
            g = g.gcd(&e.1);
        }
        if first.1.is_negative() {
            g = g.neg();
        }
        for e in out.iter_mut() {
            e.1 = e.1.div(&g);
        }
    }
    Some(out)
}

fn rank_generic<T: Coef>(rows: Vec<Row<T>>) -> Option<usize> {
    let mut pivots: HashMap<u32, Row<T>> = HashMap::new();
    for mut r in rows {
        while let Some(&(c, _)) = r.first() {
            match pivots.get(&c) {
                None => {
                    pivots.insert(c, r);
                    break;
                }
                Some(p) => {
                    let (a, b) = (p[0].1.clone(), r[0].1.clone());
                    r = combine(&a, &r, &b, p)?;
                }
            }
        }
    }
    Some(pivots.len())
}

/// Rank over Q of a sparse integer matrix given by rows of `(column, value)`
/// sorted by column.
pub fn sparse_rank(rows: Vec<Vec<(u32, i64)>>) -> usize {
    if let Some(r) = rank_generic(rows.clone()) {
        return r;
    }
    let big: Vec<Row<BigInt>> = rows.into_iter().map(|r| r.into_iter().map(|(c, v)| (c, BigInt::from(v))).collect()).collect();
    rank_generic(big).expect("bigint elimination cannot overflow")
}

/// Rank of the boundary map from `k`-element faces to `(k-1)`-element faces.
fn boundary_rank(upper: &[u64], lower: &[u64]) -> usize {
    if upper.is_empty() || lower.is_empty() {
        return 0;
    }
    let index: HashMap<u64, u32> = lower.iter().enumerate().map(|(i, &f)| (f, i as u32)).collect();
    let rows: Vec<Vec<(u32, i64)>> = upper
        .iter()
        .map(|&f| {
            let mut row = Vec::with_capacity(f.count_ones() as usize);
            let mut m = f;
            let mut pos = 0;
            while m != 0 {
                let low = m & m.wrapping_neg();
                let sign = if pos % 2 == 0 { 1 } else { -1 };
                row.push((index[&(f ^ low)], sign));
                m ^= low;
                pos += 1;
            }
            row.sort_unstable_by_key(|e| e.0);
            row
        })
        .collect();
    sparse_rank(rows)
}

/// `dim H̃_i` for `i = -1..=dim`, computed from the faces themselves. Empty for
/// the void complex.
pub fn reduced_homology_dims_direct(cx: &SimplicialComplex) -> Vec<usize> {
    let d = cx.dim();
    if d < -1 {
        return Vec::new();
    }
    let top = (d + 1) as usize;
    let mut by_size: Vec<Vec<u64>> = vec![Vec::new(); top + 1];
    for f in cx.faces() {
        by_size[f.count_ones() as usize].push(f);
    }
    // ranks[k] = rank of the map from size-k faces to size-(k-1) faces
    let ranks: Vec<usize> = (0..=top + 1)
        .into_par_iter()
        .map(|k| if k == 0 || k > top { 0 } else { boundary_rank(&by_size[k], &by_size[k - 1]) })
        .collect();
    (0..=top).map(|k| by_size[k].len() - ranks[k] - ranks[k + 1]).collect()
}

fn size_estimate(facets: &[u64]) -> u128 {
    facets.iter().map(|f| 1u128 << f.count_ones()).sum()
}

const DIRECT_LIMIT: u128 = 1 << 14;

/// `dim H̃_i` for `i = -1..=dim`. Large complexes with few facets are handled
/// through Alexander duality, `H̃_i(K) ≅ H̃^{m-i-3}(K^∨)` on `m` vertices.
pub fn reduced_homology_dims(cx: &SimplicialComplex) -> Vec<usize> {
    let d = cx.dim();
    if d < -1 {
        return Vec::new();
    }
    let direct = size_estimate(cx.facets());
    if direct <= DIRECT_LIMIT || cx.facets().len() > 400 {
        return reduced_homology_dims_direct(cx);
    }
    if cx.is_simplex() {
        return vec![0; (d + 2) as usize];
    }
    // any vertex in every facet makes a cone
    let common = cx.facets().iter().fold(cx.ground(), |a, &f| a & f);
    if common != 0 {
        return vec![0; (d + 2) as usize];
    }
    let dual = cx.alexander_dual();
    if size_estimate(dual.facets()) >= direct {
        return reduced_homology_dims_direct(cx);
    }
    let dd = reduced_homology_dims(&dual);
    let m = cx.m() as isize;
    (-1..=d)
        .map(|i| {
            let j = m - i - 3;
            if j >= -1 && ((j + 1) as usize) < dd.len() {
                dd[(j + 1) as usize]
            } else {
                0
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn homology_examples() {
        let hollow = SimplicialComplex::numbered(3, &[0b011, 0b101, 0b110]);
        assert_eq!(reduced_homology_dims(&hollow), vec![0, 0, 1]);
        let full = SimplicialComplex::numbered(3, &[0b111]);
        assert_eq!(reduced_homology_dims(&full), vec![0, 0, 0, 0]);
        let two_points = SimplicialComplex::numbered(2, &[0b01, 0b10]);
        assert_eq!(reduced_homology_dims(&two_points), vec![0, 1]);
        let empty_face = SimplicialComplex::numbered(2, &[]);
        assert_eq!(reduced_homology_dims(&empty_face), vec![1]);
    }

    #[test]
    fn sparse_rank_matches_dense() {
        let rows = vec![vec![(0, 2), (1, 4)], vec![(0, 3), (1, 6)], vec![(1, 1), (2, 5)]];
        assert_eq!(sparse_rank(rows), 2);
        let big = i64::MAX / 2;
        let rows = vec![vec![(0, big), (1, 3)], vec![(0, 3), (1, big)]];
        assert_eq!(sparse_rank(rows), 2);
    }

    #[test]
    fn duality_route_matches_direct() {
        // boundary of the 5-simplex minus nothing: a 4-sphere on 6 vertices
        // with one more vertex coned over half of it
        let facets: Vec<u64> = (0..6).map(|i| 0b111111 & !(1u64 << i)).chain([0b1000111u64, 0b1001011]).collect();
        let cx = SimplicialComplex::numbered(7, &facets);
        assert_eq!(reduced_homology_dims(&cx), reduced_homology_dims_direct(&cx));
        let sphere = SimplicialComplex::numbered(15, &(0..15).map(|i| 0x7fff & !(1u64 << i)).collect::<Vec<_>>());
        let h = reduced_homology_dims(&sphere);
        assert_eq!(h[14], 1);
        assert_eq!(h.iter().sum::<usize>(), 1);
    }
}
