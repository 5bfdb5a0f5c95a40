//! Reisner's criterion.

use super::{reduced_homology_dims, SimplicialComplex};
use rayon::prelude::*;
use std::collections::HashSet;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CmReport {
    pub is_cm: bool,
    /// First failing `(σ, i)`: `H̃_i(link σ) ≠ 0` with `i < dim link σ`.
    pub witness: Option<(u64, isize)>,
    /// Number of links whose homology was computed.
    pub links_checked: usize,
}

/// Faces equal to the intersection of the facets containing them. Any other
/// face has a cone as its link, which is acyclic.
pub fn closed_faces(cx: &SimplicialComplex) -> Vec<u64> {
    let facets = cx.facets();
    let mut seen: HashSet<u64> = facets.iter().copied().collect();
    let mut frontier: Vec<u64> = facets.to_vec();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for &s in &frontier {
            for &f in facets {
                let t = s & f;
                if seen.insert(t) {
                    next.push(t);
                }
            }
        }
        frontier = next;
    }
    seen.insert(0);
    let mut v: Vec<u64> = seen.into_iter().collect();
    v.sort_unstable_by_key(|&s| (s.count_ones(), s));
    v
}

/// True iff every link has vanishing reduced homology below its dimension.
pub fn is_cohen_macaulay(cx: &SimplicialComplex) -> CmReport {
    if cx.is_void() {
        return CmReport { is_cm: true, witness: None, links_checked: 0 };
    }
    let faces = closed_faces(cx);
    let failure = faces.par_iter().find_map_first(|&s| {
        let link = cx.link(s).expect("closed faces are faces");
        let h = reduced_homology_dims(&link);
        let d = link.dim();
        (-1..d).find(|&i| h[(i + 1) as usize] != 0).map(|i| (s, i))
    });
    CmReport { is_cm: failure.is_none(), witness: failure, links_checked: faces.len() }
}
