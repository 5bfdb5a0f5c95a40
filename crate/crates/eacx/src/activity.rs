//! Weights, initial decompositions of circuits of `D`, external activity and
//! the external activity complex `Δ_w(M1, M2)`.

use crate::bits;
use crate::dilworth::{DilworthTruncation, MatroidPair};
use crate::error::{Error, Result};
use crate::exact_algebra::{format_rational, rat, Rational};
use crate::simplicial::SimplicialComplex;
use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::{BTreeMap, HashMap};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Weight {
    pub wx: Vec<Rational>,
    pub wy: Vec<Rational>,
}

impl Weight {
    pub fn new(wx: Vec<Rational>, wy: Vec<Rational>) -> Result<Self> {
        if wx.len() != wy.len() {
            return Err(Error::BadInput(format!("wx has {} entries, wy has {}", wx.len(), wy.len())));
        }
        Ok(Weight { wx, wy })
    }

    pub fn n(&self) -> usize {
        self.wx.len()
    }

    /// Weight of the monomial `y_{I1} x_{I2}`.
    pub fn of_split(&self, i1: u32, i2: u32) -> Rational {
        let mut s = Rational::default();
        for e in bits::iter(i1) {
            s += &self.wy[e - 1];
        }
        for e in bits::iter(i2) {
            s += &self.wx[e - 1];
        }
        s
    }

    /// Coordinates in `s`, relabeled onto `[|s|]`.
    pub fn restrict(&self, s: u32) -> Weight {
        let pick = |v: &[Rational]| bits::iter(s).map(|e| v[e - 1].clone()).collect();
        Weight { wx: pick(&self.wx), wy: pick(&self.wy) }
    }
}

const PRIMES: [i64; 24] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89];

/// `w_y,i = 4^(n-i)`, `w_x,i = 1/(4 p_i)`: the initial decomposition of a
/// circuit is the one with lexicographically least `I1`.
pub fn lex_weight(n: usize) -> Weight {
    assert!(n >= 1 && n <= PRIMES.len());
    let wy = (1..=n).map(|i| Rational::from_integer(BigInt::from(4).pow((n - i) as u32))).collect();
    let wx = (0..n).map(|i| Rational::new(1.into(), (4 * PRIMES[i]).into())).collect();
    Weight { wx, wy }
}

/// Pseudo-random rationals with large numerators and denominators.
pub fn random_weight(n: usize, seed: u64) -> Weight {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut draw = || Rational::new(rng.gen_range(-1_000_000_000i64..=1_000_000_000).into(), rng.gen_range(1i64..=1_000_000).into());
    let wx = (0..n).map(|_| draw()).collect();
    let wy = (0..n).map(|_| draw()).collect();
    Weight { wx, wy }
}

/// Activity data of one basis of `D`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ActivityRecord {
    pub basis: u32,
    pub e1: u32,
    pub e2: u32,
}

impl ActivityRecord {
    /// `(|E2|, |E1|)`.
    pub fn ea(&self) -> (usize, usize) {
        (bits::size(self.e2), bits::size(self.e1))
    }

    /// `x_{B ∪ E1} y_{B ∪ E2}` as a `2n`-bit mask.
    pub fn facet(&self, n: usize) -> u64 {
        xy_mask(n, self.basis | self.e1, self.basis | self.e2)
    }
}

/// Mask with `x_i` at bit `i-1` and `y_i` at bit `n+i-1`.
pub fn xy_mask(n: usize, x: u32, y: u32) -> u64 {
    x as u64 | (y as u64) << n
}

/// Inverse of [`xy_mask`].
pub fn split_xy(n: usize, m: u64) -> (u32, u32) {
    ((m & ((1u64 << n) - 1)) as u32, (m >> n) as u32)
}

/// Vertex labels `x1..xn, y1..yn`.
pub fn xy_labels(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("x{i}")).chain((1..=n).map(|i| format!("y{i}"))).collect()
}

/// Renders a mask as `x{..}y{..}`.
pub fn fmt_xy(n: usize, m: u64) -> String {
    let (x, y) = split_xy(n, m);
    let f = |s: u32| bits::elems(s).iter().map(|e| e.to_string()).collect::<String>();
    format!("x{}y{}", f(x), f(y))
}

/// Maximizes the weight of `y_{I1} x_{I2}` over the splits of `C`.
pub fn initial_decomposition(pair: &MatroidPair, w: &Weight, c: u32) -> Result<(u32, u32)> {
    let splits = pair.decompositions(c)?;
    pick_initial(w, c, &splits)
}

fn pick_initial(w: &Weight, c: u32, splits: &[(u32, u32)]) -> Result<(u32, u32)> {
    let mut scored: Vec<(Rational, (u32, u32))> = splits.iter().map(|&(a, b)| (w.of_split(a, b), (a, b))).collect();
    scored.sort_by(|a, b| b.0.cmp(&a.0));
    for pair in scored.windows(2) {
        if pair[0].0 == pair[1].0 {
            return Err(Error::TieError(format!(
                "circuit {}: splits {}|{} and {}|{} both weigh {}",
                bits::fmt(c),
                bits::fmt(pair[0].1 .0),
                bits::fmt(pair[0].1 .1),
                bits::fmt(pair[1].1 .0),
                bits::fmt(pair[1].1 .1),
                format_rational(&pair[0].0)
            )));
        }
    }
    scored.first().map(|s| s.1).ok_or_else(|| Error::NotACircuit(bits::elems(c)))
}

/// `D(M1, M2)` together with a weight; caches initial decompositions.
#[derive(Debug, Clone)]
pub struct Activity {
    pub trunc: DilworthTruncation,
    pub w: Weight,
    initial: HashMap<u32, (u32, u32)>,
}

impl Activity {
    /// Computes `D` and the initial decomposition of every circuit of `D`.
    pub fn new(pair: &MatroidPair, w: &Weight) -> Result<Self> {
        Self::with_truncation(DilworthTruncation::new(pair), w)
    }

    pub fn with_truncation(trunc: DilworthTruncation, w: &Weight) -> Result<Self> {
        if w.n() != trunc.pair.n() {
            return Err(Error::BadInput(format!("weight has length {}, ground set {}", w.n(), trunc.pair.n())));
        }
        let mut initial = HashMap::new();
        for c in trunc.circuits() {
            let splits = trunc.pair.decompositions(c)?;
            initial.insert(c, pick_initial(w, c, &splits)?);
        }
        Ok(Activity { trunc, w: w.clone(), initial })
    }

    pub fn n(&self) -> usize {
        self.trunc.pair.n()
    }

    pub fn pair(&self) -> &MatroidPair {
        &self.trunc.pair
    }

    pub fn initial_decomposition(&self, c: u32) -> Result<(u32, u32)> {
        self.initial.get(&c).copied().ok_or_else(|| Error::NotACircuit(bits::elems(c)))
    }

    pub fn activity_sets(&self, b: u32) -> Result<ActivityRecord> {
        let d = &self.trunc.d;
        if !d.is_basis(b) {
            return Err(Error::NotABasis(bits::elems(b)));
        }
        let (mut e1, mut e2) = (0, 0);
        for i in bits::iter(d.ground() & !b) {
            let c = d.fundamental_circuit(b, i)?;
            let (i1, _) = self.initial_decomposition(c)?;
            if i1 & 1 << (i - 1) != 0 {
                e1 |= 1 << (i - 1);
            } else {
                e2 |= 1 << (i - 1);
            }
        }
        Ok(ActivityRecord { basis: b, e1, e2 })
    }

    pub fn records(&self) -> Result<Vec<ActivityRecord>> {
        self.trunc.d.bases().iter().map(|&b| self.activity_sets(b)).collect()
    }

    /// Facets `x_{B ∪ E1} y_{B ∪ E2}`, one per basis of `D`, sorted.
    pub fn facets(&self) -> Result<Vec<u64>> {
        let n = self.n();
        let mut f: Vec<u64> = self.records()?.iter().map(|r| r.facet(n)).collect();
        f.sort_unstable();
        Ok(f)
    }

    pub fn complex(&self) -> Result<SimplicialComplex> {
        Ok(SimplicialComplex::from_facets(xy_labels(self.n()), &self.facets()?))
    }

    /// `x_{I2} y_{I1}` for each circuit, sorted.
    pub fn sr_generators(&self) -> Vec<u64> {
        let n = self.n();
        let mut g: Vec<u64> = self.initial.values().map(|&(i1, i2)| xy_mask(n, i2, i1)).collect();
        g.sort_unstable();
        g
    }

    /// Multiset of `ea_w(B) = (|E2|, |E1|)` over the bases of `D`.
    pub fn ea_distribution(&self) -> Result<BTreeMap<(usize, usize), usize>> {
        let mut m = BTreeMap::new();
        for r in self.records()? {
            *m.entry(r.ea()).or_insert(0) += 1;
        }
        Ok(m)
    }
}

pub fn activity_sets(pair: &MatroidPair, w: &Weight, b: u32) -> Result<ActivityRecord> {
    Activity::new(pair, w)?.activity_sets(b)
}

pub fn complex(pair: &MatroidPair, w: &Weight) -> Result<SimplicialComplex> {
    Activity::new(pair, w)?.complex()
}

pub fn sr_generators(pair: &MatroidPair, w: &Weight) -> Result<Vec<u64>> {
    Ok(Activity::new(pair, w)?.sr_generators())
}

pub fn ea_distribution(pair: &MatroidPair, w: &Weight) -> Result<BTreeMap<(usize, usize), usize>> {
    Activity::new(pair, w)?.ea_distribution()
}

/// `a_k = #{B : |E1(B)| = k}` for `k = 0..=n`.
pub fn e1_sequence(dist: &BTreeMap<(usize, usize), usize>, n: usize) -> Vec<u64> {
    let mut a = vec![0u64; n + 1];
    for (&(_, e1), &c) in dist {
        a[e1] += c as u64;
    }
    a
}

/// `a_k^2 ≥ a_{k-1} a_{k+1}` and no internal zeros.
pub fn is_log_concave(a: &[u64]) -> bool {
    let first = a.iter().position(|&v| v != 0);
    let last = a.iter().rposition(|&v| v != 0);
    if let (Some(f), Some(l)) = (first, last) {
        if a[f..=l].contains(&0) {
            return false;
        }
    }
    a.windows(3).all(|w| w[1] * w[1] >= w[0] * w[2])
}

/// Integer-valued weight.
pub fn weight_from_ints(wx: &[i64], wy: &[i64]) -> Weight {
    Weight { wx: wx.iter().map(|&v| rat(v)).collect(), wy: wy.iter().map(|&v| rat(v)).collect() }
}
