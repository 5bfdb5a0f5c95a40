use super::{ordered_set_partitions, ChainOfSets, Matroid};
use crate::bits;
use crate::error::{Error, Result};

/// Chain with bounds: `I` independent iff `|I ∩ S_i| ≤ a_i` for all `i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SchubertData {
    pub chain: ChainOfSets,
    /// `a_0 = 0, a_1, …, a_k`.
    pub a: Vec<usize>,
}

impl SchubertData {
    /// `a` may omit the leading zero.
    pub fn new(chain: ChainOfSets, a: &[usize]) -> Result<Self> {
        let k = chain.len();
        let a = if a.len() == k { std::iter::once(0).chain(a.iter().copied()).collect() } else { a.to_vec() };
        if a.len() != k + 1 || a[0] != 0 {
            return Err(Error::BadInput(format!("bound vector must have {k} entries after a_0 = 0")));
        }
        Ok(SchubertData { chain, a })
    }

    pub fn is_independent(&self, s: u32) -> bool {
        self.chain.sets().iter().zip(&self.a).all(|(&si, &ai)| bits::size(s & si) <= ai)
    }

    /// Chain bounds taken from the rank function of `m`.
    pub fn from_ranks(m: &Matroid, chain: &ChainOfSets) -> Self {
        let a = chain.sets().iter().map(|&s| m.rank_of(s)).collect();
        SchubertData { chain: chain.clone(), a }
    }
}

/// The Schubert matroid of `d`.
pub fn schubert_matroid(d: &SchubertData) -> Result<Matroid> {
    let n = d.chain.n();
    // the independence system is a matroid, so greedy reaches the rank
    let mut r = 0;
    let mut g = 0u32;
    for e in 1..=n {
        if d.is_independent(g | 1 << (e - 1)) {
            g |= 1 << (e - 1);
            r += 1;
        }
    }
    let bases: Vec<u32> = bits::k_subsets(n, r).into_iter().filter(|&s| d.is_independent(s)).collect();
    if bases.is_empty() {
        return Err(Error::EmptyMatroid);
    }
    Ok(Matroid::from_bases_trusted(n, bases))
}

/// Checks the alternating Schubert expansion of `[B basis of M]` at every
/// `r`-subset `B`.
pub fn schubert_expansion_check(m: &Matroid) -> Result<bool> {
    let n = m.n();
    if n > 6 {
        return Err(Error::TooLarge(format!("n = {n} > 6 for the chain sweep")));
    }
    let chains = ordered_set_partitions(n);
    for b in bits::k_subsets(n, m.rank()) {
        let mut sum: i64 = 0;
        for c in &chains {
            let d = SchubertData::from_ranks(m, c);
            if d.is_independent(b) {
                sum += if (n - c.len()).is_multiple_of(2) { 1 } else { -1 };
            }
        }
        if sum != m.is_basis(b) as i64 {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bits::set;

    #[test]
    fn schubert_examples() {
        let d = SchubertData::new(ChainOfSets::new(4, &[0b1111]).unwrap(), &[2]).unwrap();
        assert_eq!(schubert_matroid(&d).unwrap(), Matroid::uniform(2, 4).unwrap());
        let d = SchubertData::new(ChainOfSets::new(3, &[0, set(&[1]), set(&[1, 2, 3])]).unwrap(), &[0, 0, 1]).unwrap();
        let m = schubert_matroid(&d).unwrap();
        assert_eq!(m.loops(), set(&[1]));
        assert_eq!(m.bases(), &[set(&[2]), set(&[3])]);
    }

    #[test]
    fn expansion_examples() {
        assert!(schubert_expansion_check(&Matroid::uniform(2, 3).unwrap()).unwrap());
        assert!(schubert_expansion_check(&Matroid::uniform(1, 2).unwrap()).unwrap());
        let with_loop = Matroid::from_basis_lists(3, &[vec![2]]).unwrap();
        assert!(schubert_expansion_check(&with_loop).unwrap());
        assert!(schubert_expansion_check(&Matroid::uniform(1, 7).unwrap()).is_err());
    }
}
