use crate::bits;
use crate::error::{Error, Result};

/// Chain `∅ = S_0 ⊊ S_1 ⊊ … ⊊ S_k = [n]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ChainOfSets {
    n: usize,
    sets: Vec<u32>,
}

impl ChainOfSets {
    /// Accepts the sets with or without the leading empty set.
    pub fn new(n: usize, sets: &[u32]) -> Result<Self> {
        let mut v = Vec::with_capacity(sets.len() + 1);
        if sets.first() != Some(&0) {
            v.push(0);
        }
        v.extend_from_slice(sets);
        if *v.last().unwrap() != bits::full(n) {
            return Err(Error::BadInput("chain must end at the full ground set".into()));
        }
        for w in v.windows(2) {
            if w[0] & !w[1] != 0 || w[0] == w[1] {
                return Err(Error::BadInput("chain not strictly increasing".into()));
            }
        }
        Ok(ChainOfSets { n, sets: v })
    }

    /// Chain whose successive differences are the given blocks.
    pub fn from_blocks(n: usize, blocks: &[u32]) -> Self {
        let mut sets = vec![0u32];
        let mut acc = 0;
        for &b in blocks {
            acc |= b;
            sets.push(acc);
        }
        debug_assert_eq!(acc, bits::full(n));
        ChainOfSets { n, sets }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Length `k` (number of proper steps).
    pub fn len(&self) -> usize {
        self.sets.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// `S_0, …, S_k`.
    pub fn sets(&self) -> &[u32] {
        &self.sets
    }

    /// Blocks `S_i \ S_{i-1}` for `i = 1..k`.
    pub fn blocks(&self) -> Vec<u32> {
        self.sets.windows(2).map(|w| w[1] & !w[0]).collect()
    }

    /// Index (0-based) of the block containing element `e`.
    pub fn block_of(&self, e: usize) -> usize {
        self.sets.iter().position(|&s| s & 1 << (e - 1) != 0).unwrap() - 1
    }
}

/// Every chain on `[n]`, i.e. every ordered set partition.
pub fn ordered_set_partitions(n: usize) -> Vec<ChainOfSets> {
    fn rec(n: usize, rest: u32, blocks: &mut Vec<u32>, out: &mut Vec<ChainOfSets>) {
        if rest == 0 {
            out.push(ChainOfSets::from_blocks(n, blocks));
            return;
        }
        for b in bits::submasks(rest) {
            if b == 0 {
                continue;
            }
            blocks.push(b);
            rec(n, rest & !b, blocks, out);
            blocks.pop();
        }
    }
    let mut out = Vec::new();
    if n == 0 {
        return vec![ChainOfSets { n: 0, sets: vec![0] }];
    }
    rec(n, bits::full(n), &mut Vec::new(), &mut out);
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fubini_counts() {
        let counts: Vec<usize> = (1..=5).map(|n| ordered_set_partitions(n).len()).collect();
        assert_eq!(counts, vec![1, 3, 13, 75, 541]);
    }

    #[test]
    fn validation() {
        assert!(ChainOfSets::new(3, &[0b001, 0b111]).is_ok());
        assert!(ChainOfSets::new(3, &[0b001, 0b001, 0b111]).is_err());
        assert!(ChainOfSets::new(3, &[0b011]).is_err());
        let c = ChainOfSets::new(3, &[0, 0b010, 0b111]).unwrap();
        assert_eq!(c.blocks(), vec![0b010, 0b101]);
        assert_eq!(c.block_of(2), 0);
        assert_eq!(c.block_of(3), 1);
    }
}
