//! The diagonal Dilworth truncation `D(M1, M2)`.

use crate::bits;
use crate::error::{Error, Result};
use crate::matroid::Matroid;

/// Two matroids on the same ground set without common loops.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatroidPair {
    pub m1: Matroid,
    pub m2: Matroid,
}

impl MatroidPair {
    pub fn new(m1: Matroid, m2: Matroid) -> Result<Self> {
        if m1.n() != m2.n() {
            return Err(Error::GroundSetMismatch(m1.n(), m2.n()));
        }
        let common = m1.loops() & m2.loops();
        if common != 0 {
            return Err(Error::CommonLoop(common.trailing_zeros() as usize + 1));
        }
        Ok(MatroidPair { m1, m2 })
    }

    pub fn n(&self) -> usize {
        self.m1.n()
    }

    /// `I1 ⊔ I2 = S` with `I_k` independent in `M_k`.
    fn splits(&self, s: u32) -> bool {
        bits::submasks(s).any(|a| self.m1.is_independent(a) && self.m2.is_independent(s & !a))
    }

    /// Multiset `I + {j}` with `j ∈ I`: `j` goes to both sides.
    fn splits_doubled(&self, i: u32, j: usize) -> bool {
        let jb = 1u32 << (j - 1);
        let rest = i & !jb;
        bits::submasks(rest).any(|a| self.m1.is_independent(a | jb) && self.m2.is_independent((rest & !a) | jb))
    }

    /// Independence in `D` by brute force over all splits of `I + {j}`.
    pub fn independent_in_d(&self, i: u32) -> bool {
        (1..=self.n()).all(|j| {
            let jb = 1u32 << (j - 1);
            if i & jb == 0 {
                self.splits(i | jb)
            } else {
                self.splits_doubled(i, j)
            }
        })
    }

    /// Definitional rank: minimum over families of disjoint nonempty
    /// `T_i ⊆ S` of `Σ (r1(T_i) + r2(T_i) - 1) + |S \ ∪T_i|`.
    pub fn rank_d_bruteforce(&self, s: u32) -> Result<usize> {
        if bits::size(s) > 10 {
            return Err(Error::TooLarge(format!("|S| = {} > 10 for the exhaustive rank", bits::size(s))));
        }
        // h(X): best value for the elements of X, deciding the lowest element
        // first (left over, or the least element of some block T)
        let elems = bits::elems(s);
        let k = elems.len();
        let mut h = vec![i64::MAX; 1 << k];
        h[0] = 0;
        let block_cost = |t: u32| -> i64 {
            let real = crate::matroid::expand(t, s);
            self.m1.rank_of(real) as i64 + self.m2.rank_of(real) as i64 - 1
        };
        for x in 1u32..(1 << k) {
            let low = x & x.wrapping_neg();
            let mut best = h[(x ^ low) as usize] + 1;
            let others = x ^ low;
            for sub in bits::submasks(others) {
                let t = sub | low;
                best = best.min(block_cost(t) + h[(x & !t) as usize]);
            }
            h[x as usize] = best;
        }
        Ok(h[(1usize << k) - 1] as usize)
    }

    /// Minimal `C` with `r1(C) + r2(C) = |C|`, by increasing size.
    pub fn circuits_d(&self) -> Vec<u32> {
        let n = self.n();
        let mut kept: Vec<u32> = Vec::new();
        for size in 1..=n {
            for c in bits::k_subsets(n, size) {
                if self.m1.rank_of(c) + self.m2.rank_of(c) == size && !kept.iter().any(|&k| k & !c == 0) {
                    kept.push(c);
                }
            }
        }
        kept
    }

    /// All ordered splits `C = I1 ⊔ I2` of a circuit of `D`.
    pub fn decompositions(&self, c: u32) -> Result<Vec<(u32, u32)>> {
        if !self.is_circuit_d(c) {
            return Err(Error::NotACircuit(bits::elems(c)));
        }
        let mut out: Vec<(u32, u32)> = bits::submasks(c)
            .filter(|&a| self.m1.is_independent(a) && self.m2.is_independent(c & !a))
            .map(|a| (a, c & !a))
            .collect();
        out.sort_by_key(|&(a, _)| bits::lex_key(a));
        Ok(out)
    }

    fn is_circuit_d(&self, c: u32) -> bool {
        let tight = |s: u32| s != 0 && self.m1.rank_of(s) + self.m2.rank_of(s) == bits::size(s);
        tight(c) && !bits::submasks(c).any(|s| s != c && tight(s))
    }
}

/// `D(M1, M2)` with its underlying matroid.
#[derive(Debug, Clone)]
pub struct DilworthTruncation {
    pub pair: MatroidPair,
    pub d: Matroid,
    pub expected_rank: bool,
}

impl DilworthTruncation {
    pub fn new(pair: &MatroidPair) -> Self {
        let n = pair.n();
        // D-independence is downward closed; only test sets whose
        // one-smaller subsets all pass
        let size = 1usize << n;
        let mut indep = vec![false; size];
        indep[0] = pair.independent_in_d(0);
        let mut order: Vec<u32> = (1..size as u32).collect();
        order.sort_by_key(|&s| bits::size(s));
        let mut r = 0;
        for s in order {
            if bits::iter(s).all(|e| indep[(s & !(1 << (e - 1))) as usize]) && pair.independent_in_d(s) {
                indep[s as usize] = true;
                r = r.max(bits::size(s));
            }
        }
        let bases: Vec<u32> = bits::k_subsets(n, r).into_iter().filter(|&s| indep[s as usize]).collect();
        let d = Matroid::from_bases_trusted(n, bases);
        let expected = d.rank() as i64 == pair.m1.rank() as i64 + pair.m2.rank() as i64 - 1;
        DilworthTruncation { pair: pair.clone(), d, expected_rank: expected }
    }

    pub fn rank(&self) -> usize {
        self.d.rank()
    }

    /// Greedy rank inside `S`.
    pub fn rank_d(&self, s: u32) -> usize {
        self.d.rank_of(s)
    }

    pub fn circuits(&self) -> Vec<u32> {
        self.d.circuits()
    }

    /// `rank(M1) + rank(M2) - 1 - rank(D)`; zero iff `D` has expected rank.
    pub fn rank_deficit(&self) -> i64 {
        self.pair.m1.rank() as i64 + self.pair.m2.rank() as i64 - 1 - self.d.rank() as i64
    }
}

pub fn d_matroid(pair: &MatroidPair) -> DilworthTruncation {
    DilworthTruncation::new(pair)
}
