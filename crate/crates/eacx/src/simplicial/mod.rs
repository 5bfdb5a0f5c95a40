//! Simplicial complexes on labeled vertex sets given by their facets.

mod betti;
mod cm;
mod homology;
mod kpoly;

pub use betti::{hochster_betti, k_from_betti, BettiTable};
pub use cm::{closed_faces as closed_faces_of, is_cohen_macaulay, CmReport};
pub use homology::{reduced_homology_dims, reduced_homology_dims_direct, sparse_rank};
pub use kpoly::{
    facet_complement_enumerator, k_polynomial_fine, k_polynomial_fine_substituted, lowest_part_after_one_minus, multidegree,
    reisner_expansion, xy_grading, Grading,
};

use crate::bits::submasks64;
use crate::error::{Error, Result};
use std::collections::HashSet;

/// Complex on the vertex set `ground` (a mask over `labels`), given by its
/// facets. An empty facet list is the void complex; `{∅}` has one empty facet.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplicialComplex {
    labels: Vec<String>,
    ground: u64,
    facets: Vec<u64>,
}

fn full64(m: usize) -> u64 {
    if m == 64 {
        u64::MAX
    } else {
        (1u64 << m) - 1
    }
}

/// Drops non-maximal sets; output sorted.
pub fn maximal_sets(sets: &[u64]) -> Vec<u64> {
    let mut v = sets.to_vec();
    v.sort_unstable_by_key(|s| std::cmp::Reverse(s.count_ones()));
    v.dedup();
    let mut kept: Vec<u64> = Vec::new();
    for s in v {
        if !kept.iter().any(|&k| s & !k == 0) {
            kept.push(s);
        }
    }
    kept.sort_unstable();
    kept
}

impl SimplicialComplex {
    /// Complex on all labels; no facets gives `{∅}`.
    pub fn from_facets(labels: Vec<String>, facets: &[u64]) -> Self {
        let g = full64(labels.len());
        Self::with_ground(labels, g, facets)
    }

    pub fn with_ground(labels: Vec<String>, ground: u64, facets: &[u64]) -> Self {
        assert!(labels.len() <= 64);
        assert!(facets.iter().all(|f| f & !ground == 0), "facet outside the vertex set");
        let facets = if facets.is_empty() { vec![0] } else { maximal_sets(facets) };
        SimplicialComplex { labels, ground, facets }
    }

    /// The complex with no faces at all.
    pub fn void(labels: Vec<String>, ground: u64) -> Self {
        SimplicialComplex { labels, ground, facets: Vec::new() }
    }

    /// Numbered labels `1..=m`.
    pub fn numbered(m: usize, facets: &[u64]) -> Self {
        Self::from_facets((1..=m).map(|i| i.to_string()).collect(), facets)
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn ground(&self) -> u64 {
        self.ground
    }

    /// Number of vertices of the ground set.
    pub fn m(&self) -> usize {
        self.ground.count_ones() as usize
    }

    pub fn facets(&self) -> &[u64] {
        &self.facets
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    /// Dimension; `-1` for `{∅}` and `-2` for the void complex.
    pub fn dim(&self) -> isize {
        self.facets.iter().map(|f| f.count_ones() as isize - 1).max().unwrap_or(-2)
    }

    pub fn is_pure(&self) -> bool {
        self.facets.windows(2).all(|w| w[0].count_ones() == w[1].count_ones())
    }

    pub fn is_face(&self, s: u64) -> bool {
        self.facets.iter().any(|&f| s & !f == 0)
    }

    /// Full simplex on the ground set.
    pub fn is_simplex(&self) -> bool {
        self.facets == [self.ground]
    }

    /// All faces, sorted by (size, mask).
    pub fn faces(&self) -> Vec<u64> {
        let mut seen: HashSet<u64> = HashSet::new();
        for &f in &self.facets {
            for s in submasks64(f) {
                seen.insert(s);
            }
        }
        let mut v: Vec<u64> = seen.into_iter().collect();
        v.sort_unstable_by_key(|&s| (s.count_ones(), s));
        v
    }

    /// `f_{-1}, f_0, …, f_dim`.
    pub fn f_vector(&self) -> Vec<usize> {
        let d = self.dim();
        if d < -1 {
            return Vec::new();
        }
        let mut f = vec![0usize; (d + 2) as usize];
        for s in self.faces() {
            f[s.count_ones() as usize] += 1;
        }
        f
    }

    /// `{τ : τ ∪ σ ∈ Δ, τ ∩ σ = ∅}` on the vertex set `E \ σ`.
    pub fn link(&self, sigma: u64) -> Result<Self> {
        if !self.is_face(sigma) {
            return Err(Error::NotAFace(self.fmt_face(sigma)));
        }
        let fs: Vec<u64> = self.facets.iter().filter(|&&f| sigma & !f == 0).map(|&f| f & !sigma).collect();
        Ok(SimplicialComplex { labels: self.labels.clone(), ground: self.ground & !sigma, facets: maximal_sets(&fs) })
    }

    /// Faces contained in `w`, on the vertex set `w`.
    pub fn induced(&self, w: u64) -> Self {
        if self.is_void() {
            return Self::void(self.labels.clone(), w);
        }
        let fs: Vec<u64> = self.facets.iter().map(|&f| f & w).collect();
        SimplicialComplex { labels: self.labels.clone(), ground: w & self.ground, facets: maximal_sets(&fs) }
    }

    /// Minimal non-faces: minimal transversals of the facet complements.
    pub fn minimal_nonfaces(&self) -> Vec<u64> {
        let comps: Vec<u64> = self.facets.iter().map(|&f| self.ground & !f).collect();
        let mut t = minimal_transversals(&comps);
        t.sort_unstable_by_key(|&s| (s.count_ones(), s));
        t
    }

    /// Faces are the complements of non-faces; the dual of the full simplex
    /// is the void complex.
    pub fn alexander_dual(&self) -> Self {
        let fs: Vec<u64> = self.minimal_nonfaces().iter().map(|&s| self.ground & !s).collect();
        if fs.is_empty() {
            return Self::void(self.labels.clone(), self.ground);
        }
        SimplicialComplex { labels: self.labels.clone(), ground: self.ground, facets: maximal_sets(&fs) }
    }

    /// Join with a complex on a disjoint part of the same label set.
    pub fn join(&self, o: &Self) -> Self {
        assert_eq!(self.ground & o.ground, 0);
        let mut fs = Vec::new();
        for &a in &self.facets {
            for &b in &o.facets {
                fs.push(a | b);
            }
        }
        SimplicialComplex { labels: self.labels.clone(), ground: self.ground | o.ground, facets: maximal_sets(&fs) }
    }

    pub fn fmt_face(&self, s: u64) -> String {
        let v: Vec<&str> = (0..self.labels.len()).filter(|i| s >> i & 1 == 1).map(|i| self.labels[i].as_str()).collect();
        format!("{{{}}}", v.join(","))
    }

    /// Vertex indices of the ground set in increasing order.
    pub fn vertex_indices(&self) -> Vec<usize> {
        (0..64).filter(|i| self.ground >> i & 1 == 1).collect()
    }
}

/// Minimal sets meeting every set of the family (Berge's algorithm).
pub fn minimal_transversals(family: &[u64]) -> Vec<u64> {
    let mut trans: Vec<u64> = vec![0];
    let mut fam = family.to_vec();
    fam.sort_unstable_by_key(|s| s.count_ones());
    fam.dedup();
    for &a in &fam {
        let mut next: Vec<u64> = Vec::new();
        for &t in &trans {
            if t & a != 0 {
                next.push(t);
            } else {
                let mut m = a;
                while m != 0 {
                    let low = m & m.wrapping_neg();
                    next.push(t | low);
                    m ^= low;
                }
            }
        }
        next.sort_unstable_by_key(|s| (s.count_ones(), *s));
        next.dedup();
        let mut kept: Vec<u64> = Vec::new();
        for s in next {
            if !kept.iter().any(|&k| k & !s == 0) {
                kept.push(s);
            }
        }
        trans = kept;
        if trans.is_empty() {
            break;
        }
    }
    trans
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hollow_triangle() -> SimplicialComplex {
        SimplicialComplex::numbered(3, &[0b011, 0b101, 0b110])
    }

    #[test]
    fn link_examples() {
        let t = hollow_triangle();
        assert_eq!(t.link(0).unwrap().facets(), t.facets());
        assert_eq!(t.link(0b011).unwrap().facets(), &[0]);
        assert_eq!(t.link(0b001).unwrap().facets(), &[0b010, 0b100]);
        assert!(matches!(t.link(0b111), Err(Error::NotAFace(_))));
    }

    #[test]
    fn dual_examples() {
        let t = hollow_triangle();
        let d = t.alexander_dual();
        assert_eq!(d.facets(), &[0]);
        let full = SimplicialComplex::numbered(3, &[0b111]);
        assert!(full.alexander_dual().is_void());
        // involution on a non-degenerate complex
        let c = SimplicialComplex::numbered(4, &[0b0011, 0b0110, 0b1100]);
        assert_eq!(c.alexander_dual().alexander_dual(), c);
    }

    #[test]
    fn f_vector_and_faces() {
        let t = hollow_triangle();
        assert_eq!(t.f_vector(), vec![1, 3, 3]);
        assert_eq!(SimplicialComplex::numbered(2, &[]).f_vector(), vec![1]);
        assert_eq!(SimplicialComplex::numbered(2, &[]).dim(), -1);
        assert_eq!(SimplicialComplex::void(vec![], 0).dim(), -2);
    }

    #[test]
    fn minimal_nonfaces_of_path() {
        // path 1-2-3: non-faces 13 and 123; minimal is 13
        let p = SimplicialComplex::numbered(3, &[0b011, 0b110]);
        assert_eq!(p.minimal_nonfaces(), vec![0b101]);
    }
}
