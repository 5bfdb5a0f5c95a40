//! Matroids on `[n]` given by a validated basis family.

mod chain;
mod named;
mod schubert;

pub use chain::{ordered_set_partitions, ChainOfSets};
pub use named::{fano, fano_lines, nonfano};
pub use schubert::{schubert_expansion_check, schubert_matroid, SchubertData};

use crate::bits;
use crate::error::{Error, Result};
use crate::exact_algebra::{MultigradedPolynomial, QMatrix};
use num_bigint::BigInt;
use std::fmt;
use std::sync::Arc;

/// Largest ground set for which rank tables are built.
pub const MAX_N: usize = 20;

#[derive(Clone)]
pub struct Matroid {
    n: usize,
    rank: usize,
    bases: Vec<u32>,
    rank_table: Arc<Vec<u8>>,
}

impl PartialEq for Matroid {
    fn eq(&self, o: &Self) -> bool {
        self.n == o.n && self.bases == o.bases
    }
}
impl Eq for Matroid {}

impl fmt::Debug for Matroid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let b: Vec<String> = self.bases.iter().map(|&m| bits::fmt(m)).collect();
        write!(f, "Matroid(n={}, r={}, bases=[{}])", self.n, self.rank, b.join(" "))
    }
}

impl Matroid {
    /// Validates the basis family (equal sizes, exchange axiom).
    pub fn from_bases(n: usize, bases: &[u32]) -> Result<Matroid> {
        if n > MAX_N {
            return Err(Error::TooLarge(format!("ground set of size {n} > {MAX_N}")));
        }
        if bases.is_empty() {
            return Err(Error::EmptyMatroid);
        }
        let full = bits::full(n);
        if let Some(b) = bases.iter().find(|&&b| b & !full != 0) {
            return Err(Error::BadInput(format!("basis {} outside [{n}]", bits::fmt(*b))));
        }
        let r = bits::size(bases[0]);
        if let Some(b) = bases.iter().find(|&&b| bits::size(b) != r) {
            return Err(Error::MixedCardinality(r, bits::size(*b)));
        }
        let mut bs = bases.to_vec();
        bs.sort_unstable();
        bs.dedup();
        for &b1 in &bs {
            for &b2 in &bs {
                for e in bits::iter(b1 & !b2) {
                    let base = b1 & !(1 << (e - 1));
                    let ok = bits::iter(b2 & !b1).any(|f| bs.binary_search(&(base | 1 << (f - 1))).is_ok());
                    if !ok {
                        return Err(Error::AxiomViolation(format!(
                            "no exchange for e={e} between {} and {}",
                            bits::fmt(b1),
                            bits::fmt(b2)
                        )));
                    }
                }
            }
        }
        Ok(Self::build(n, bs))
    }

    /// Builds without the exchange check; callers guarantee a matroid.
    pub(crate) fn from_bases_trusted(n: usize, mut bases: Vec<u32>) -> Matroid {
        bases.sort_unstable();
        bases.dedup();
        debug_assert!(!bases.is_empty());
        Self::build(n, bases)
    }

    fn build(n: usize, bases: Vec<u32>) -> Matroid {
        let size = 1usize << n;
        let mut indep = vec![false; size];
        for &b in &bases {
            indep[b as usize] = true;
        }
        for s in (0..size).rev() {
            if indep[s] {
                let mut m = s;
                while m != 0 {
                    let low = m & m.wrapping_neg();
                    indep[s ^ low] = true;
                    m ^= low;
                }
            }
        }
        let mut rank = vec![0u8; size];
        for s in 1..size {
            rank[s] = if indep[s] {
                s.count_ones() as u8
            } else {
                let mut best = 0;
                let mut m = s;
                while m != 0 {
                    let low = m & m.wrapping_neg();
                    best = best.max(rank[s ^ low]);
                    m ^= low;
                }
                best
            };
        }
        let r = bits::size(bases[0]);
        Matroid { n, rank: r, bases, rank_table: Arc::new(rank) }
    }

    pub fn from_basis_lists(n: usize, bases: &[Vec<usize>]) -> Result<Matroid> {
        let masks: Vec<u32> = bases.iter().map(|b| bits::set(b)).collect();
        Self::from_bases(n, &masks)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn ground(&self) -> u32 {
        bits::full(self.n)
    }

    /// Rank of the whole matroid.
    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn corank(&self) -> usize {
        self.n - self.rank
    }

    pub fn bases(&self) -> &[u32] {
        &self.bases
    }

    pub fn is_basis(&self, s: u32) -> bool {
        self.bases.binary_search(&s).is_ok()
    }

    pub fn rank_of(&self, s: u32) -> usize {
        self.rank_table[s as usize] as usize
    }

    pub fn is_independent(&self, s: u32) -> bool {
        self.rank_of(s) == bits::size(s)
    }

    pub fn closure(&self, s: u32) -> u32 {
        let r = self.rank_of(s);
        (1..=self.n).filter(|&e| self.rank_of(s | 1 << (e - 1)) == r).fold(0, |m, e| m | 1 << (e - 1))
    }

    /// Minimal dependent sets, sorted by (size, mask).
    pub fn circuits(&self) -> Vec<u32> {
        let mut out: Vec<u32> = (1..=bits::full(self.n))
            .filter(|&s| !self.is_independent(s) && bits::iter(s).all(|e| self.is_independent(s & !(1 << (e - 1)))))
            .collect();
        out.sort_by_key(|&s| (bits::size(s), s));
        out
    }

    /// The unique circuit in `I + e`.
    pub fn fundamental_circuit(&self, i: u32, e: usize) -> Result<u32> {
        let ie = i | 1 << (e - 1);
        if !self.is_independent(i) || i & 1 << (e - 1) != 0 || self.is_independent(ie) {
            return Err(Error::NotDependent);
        }
        Ok(bits::iter(i).filter(|&f| self.is_independent(ie & !(1 << (f - 1)))).fold(1 << (e - 1), |m, f| m | 1 << (f - 1)))
    }

    pub fn loops(&self) -> u32 {
        (1..=self.n).filter(|&e| self.rank_of(1 << (e - 1)) == 0).fold(0, |m, e| m | 1 << (e - 1))
    }

    pub fn coloops(&self) -> u32 {
        self.bases.iter().fold(self.ground(), |m, &b| m & b)
    }

    pub fn dual(&self) -> Matroid {
        let g = self.ground();
        Self::from_bases_trusted(self.n, self.bases.iter().map(|&b| g & !b).collect())
    }

    /// `M|S`, relabeled order-preservingly onto `[|S|]`.
    pub fn restrict(&self, s: u32) -> Matroid {
        let r = self.rank_of(s);
        let k = bits::size(s);
        let sub: Vec<u32> = bits::k_subsets(k, r)
            .into_iter()
            .filter(|&t| self.is_independent(expand(t, s)))
            .collect();
        Self::from_bases_trusted(k, sub)
    }

    pub fn delete(&self, s: u32) -> Matroid {
        self.restrict(self.ground() & !s)
    }

    /// `M/S` on `[n] \ S`, relabeled order-preservingly.
    pub fn contract(&self, s: u32) -> Matroid {
        let rest = self.ground() & !s;
        let rs = self.rank_of(s);
        let k = bits::size(rest);
        let sub: Vec<u32> = bits::k_subsets(k, self.rank - rs)
            .into_iter()
            .filter(|&t| self.rank_of(expand(t, rest) | s) == self.rank)
            .collect();
        Self::from_bases_trusted(k, sub)
    }

    pub fn truncate(&self) -> Result<Matroid> {
        if self.rank == 0 {
            return Err(Error::RankZero);
        }
        let sub: Vec<u32> = bits::k_subsets(self.n, self.rank - 1).into_iter().filter(|&t| self.is_independent(t)).collect();
        Ok(Self::from_bases_trusted(self.n, sub))
    }

    /// `M ⊕ N` on `[n + m]`, with `N` shifted past `M`.
    pub fn direct_sum(&self, o: &Matroid) -> Matroid {
        let mut bs = Vec::with_capacity(self.bases.len() * o.bases.len());
        for &a in &self.bases {
            for &b in &o.bases {
                bs.push(a | b << self.n);
            }
        }
        Self::from_bases_trusted(self.n + o.n, bs)
    }

    /// Partition of `[n]` into connected components, sorted by least element.
    pub fn connected_components(&self) -> Vec<u32> {
        let mut parent: Vec<usize> = (0..self.n).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            let mut y = x;
            while p[y] != r {
                let nx = p[y];
                p[y] = r;
                y = nx;
            }
            r
        }
        for c in self.circuits() {
            let v = bits::elems(c);
            for w in v.windows(2) {
                let (a, b) = (find(&mut parent, w[0] - 1), find(&mut parent, w[1] - 1));
                parent[a] = b;
            }
        }
        let mut comps: Vec<u32> = Vec::new();
        let mut root_of = vec![usize::MAX; self.n];
        for e in 0..self.n {
            let r = find(&mut parent, e);
            if root_of[r] == usize::MAX {
                root_of[r] = comps.len();
                comps.push(0);
            }
            comps[root_of[r]] |= 1 << e;
        }
        comps
    }

    pub fn is_connected(&self) -> bool {
        self.connected_components().len() <= 1
    }

    /// Greedy basis along the permutation `pi` (1-indexed elements).
    pub fn lex_first_basis(&self, pi: &[usize]) -> u32 {
        let mut b = 0u32;
        let mut r = 0;
        for &e in pi {
            let c = b | 1 << (e - 1);
            if self.rank_of(c) > r {
                b = c;
                r += 1;
                if r == self.rank {
                    break;
                }
            }
        }
        b
    }

    /// Externally active elements of `b` for the total order `order`
    /// (listed smallest first).
    pub fn external_activity_classic(&self, order: &[usize], b: u32) -> Result<u32> {
        if !self.is_basis(b) {
            return Err(Error::NotABasis(bits::elems(b)));
        }
        let mut pos = vec![0; self.n + 1];
        for (k, &e) in order.iter().enumerate() {
            pos[e] = k;
        }
        let mut active = 0;
        for e in bits::iter(self.ground() & !b) {
            let c = self.fundamental_circuit(b, e)?;
            if bits::iter(c).min_by_key(|&f| pos[f]) == Some(e) {
                active |= 1 << (e - 1);
            }
        }
        Ok(active)
    }

    /// Tutte polynomial in variables `x`, `y` by the corank-nullity sum.
    pub fn tutte(&self) -> MultigradedPolynomial {
        let n = self.n;
        let mut count = vec![vec![0i64; n + 1]; n + 1];
        for a in 0..=bits::full(n) {
            let ra = self.rank_of(a);
            count[self.rank - ra][bits::size(a) - ra] += 1;
        }
        let vars = MultigradedPolynomial::names(&["x", "y"]);
        let mut t = MultigradedPolynomial::zero(&vars);
        let binom = binomials(n);
        for (i, row) in count.iter().enumerate() {
            for (j, &c) in row.iter().enumerate() {
                if c == 0 {
                    continue;
                }
                // c (x-1)^i (y-1)^j
                for a in 0..=i {
                    for b in 0..=j {
                        let sign = if (i - a + j - b) % 2 == 0 { 1 } else { -1 };
                        let coef = BigInt::from(c) * BigInt::from(binom[i][a]) * BigInt::from(binom[j][b]) * sign;
                        t.add_term(vec![a as i64, b as i64], coef);
                    }
                }
            }
        }
        t
    }

    /// Column matroid of a rational matrix.
    pub fn from_matrix(m: &QMatrix) -> Matroid {
        let n = m.cols();
        let r = m.rank();
        let bs: Vec<u32> = bits::k_subsets(n, r)
            .into_iter()
            .filter(|&s| {
                let cols: Vec<usize> = bits::iter(s).map(|e| e - 1).collect();
                m.select_columns(&cols).rank() == r
            })
            .collect();
        Self::from_bases_trusted(n, bs)
    }

    pub fn uniform(r: usize, n: usize) -> Result<Matroid> {
        if r > n {
            return Err(Error::BadRank { r, n });
        }
        if n > MAX_N {
            return Err(Error::TooLarge(format!("ground set of size {n}")));
        }
        Ok(Self::from_bases_trusted(n, bits::k_subsets(n, r)))
    }

    /// Basis lists as 1-indexed element vectors.
    pub fn basis_lists(&self) -> Vec<Vec<usize>> {
        self.bases.iter().map(|&b| bits::elems(b)).collect()
    }
}

/// `uniform(r, n)` as a free function.
pub fn uniform(r: usize, n: usize) -> Result<Matroid> {
    Matroid::uniform(r, n)
}

/// Maps a mask on `[k]` onto the elements of `onto` (order-preserving).
pub fn expand(t: u32, onto: u32) -> u32 {
    let e = bits::elems(onto);
    bits::iter(t).fold(0, |m, i| m | 1 << (e[i - 1] - 1))
}

/// Inverse of [`expand`]: a subset of `onto` as a mask on `[|onto|]`.
pub fn compress(s: u32, onto: u32) -> u32 {
    bits::elems(onto).iter().enumerate().filter(|(_, &e)| s & 1 << (e - 1) != 0).fold(0, |m, (k, _)| m | 1 << k)
}

pub(crate) fn binomials(n: usize) -> Vec<Vec<u64>> {
    let mut b = vec![vec![0u64; n + 1]; n + 1];
    for i in 0..=n {
        b[i][0] = 1;
        for j in 1..=i {
            b[i][j] = b[i - 1][j - 1] + if j < i { b[i - 1][j] } else { 0 };
        }
    }
    b
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bits::set;

    fn u(r: usize, n: usize) -> Matroid {
        Matroid::uniform(r, n).unwrap()
    }

    #[test]
    fn uniform_examples() {
        assert_eq!(u(2, 3).bases(), &[set(&[1, 2]), set(&[1, 3]), set(&[2, 3])]);
        assert_eq!(u(0, 2).bases(), &[0]);
        assert_eq!(u(5, 7).bases().len(), 21);
        assert!(matches!(Matroid::uniform(4, 3), Err(Error::BadRank { .. })));
    }

    #[test]
    fn from_bases_validation() {
        let m = Matroid::from_basis_lists(3, &[vec![1, 2], vec![1, 3], vec![2, 3]]).unwrap();
        assert_eq!(m, u(2, 3));
        assert!(matches!(Matroid::from_basis_lists(2, &[vec![1], vec![1, 2]]), Err(Error::MixedCardinality(..))));
        // {12, 34} has no exchange
        assert!(matches!(Matroid::from_basis_lists(4, &[vec![1, 2], vec![3, 4]]), Err(Error::AxiomViolation(_))));
    }

    #[test]
    fn from_matrix_examples() {
        let m = Matroid::from_matrix(&QMatrix::from_i64(&[vec![1, 0, 1], vec![0, 1, 1]]));
        assert_eq!(m, u(2, 3));
        let m = Matroid::from_matrix(&QMatrix::from_i64(&[vec![1, 0, 1], vec![0, 0, 1]]));
        assert_eq!(m.loops(), set(&[2]));
        let m = Matroid::from_matrix(&QMatrix::from_i64(&[vec![1, 1, 1, 1]]));
        assert_eq!(m, u(1, 4));
    }

    #[test]
    fn circuits_and_fundamental_circuits() {
        assert_eq!(u(1, 3).circuits(), vec![set(&[1, 2]), set(&[1, 3]), set(&[2, 3])]);
        assert_eq!(u(2, 3).fundamental_circuit(set(&[1, 2]), 3).unwrap(), set(&[1, 2, 3]));
        assert_eq!(u(2, 3).fundamental_circuit(set(&[1]), 3), Err(Error::NotDependent));
    }

    #[test]
    fn minors_and_sums() {
        assert_eq!(u(2, 3).dual(), u(1, 3));
        assert_eq!(u(2, 4).truncate().unwrap(), u(1, 4));
        assert_eq!(u(0, 3).truncate(), Err(Error::RankZero));
        let s = u(1, 2).direct_sum(&u(1, 2));
        assert_eq!(s.connected_components(), vec![set(&[1, 2]), set(&[3, 4])]);
        assert_eq!(u(2, 4).restrict(set(&[1, 3, 4])), u(2, 3));
        assert_eq!(u(2, 4).contract(set(&[2])), u(1, 3));
    }

    #[test]
    fn lex_first_basis_examples() {
        assert_eq!(u(2, 3).lex_first_basis(&[1, 2, 3]), set(&[1, 2]));
        assert_eq!(u(2, 3).lex_first_basis(&[3, 2, 1]), set(&[2, 3]));
        assert_eq!(fano().lex_first_basis(&[1, 2, 3, 4, 5, 6, 7]), set(&[1, 2, 3]));
    }

    #[test]
    fn classic_activity_examples() {
        let m = u(1, 3);
        assert_eq!(m.external_activity_classic(&[1, 2, 3], set(&[2])).unwrap(), set(&[1]));
        assert_eq!(m.external_activity_classic(&[1, 2, 3], set(&[1])).unwrap(), 0);
        assert!(matches!(m.external_activity_classic(&[1, 2, 3], set(&[1, 2])), Err(Error::NotABasis(_))));
    }

    #[test]
    fn tutte_examples() {
        assert_eq!(u(1, 2).tutte().to_string(), "y + x");
        let t = u(3, 5).tutte();
        // x^3 + 2x^2 + 3x + 3y + y^2
        let expect = [((3, 0), 1), ((2, 0), 2), ((1, 0), 3), ((0, 1), 3), ((0, 2), 1)];
        assert_eq!(t.len(), expect.len());
        for ((a, b), c) in expect {
            assert_eq!(t.coefficient(&[a, b]), BigInt::from(c));
        }
    }
}
