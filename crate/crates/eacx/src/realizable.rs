//! Rational realizations of matroids, the determinantal generators `d_C`
//! and checks of the initial-ideal and Betti-number statements.

use crate::activity::{initial_decomposition, split_xy, xy_labels, xy_mask, Activity, Weight};
use crate::bits;
use crate::dilworth::{DilworthTruncation, MatroidPair};
use crate::error::{Error, Result};
use crate::exact_algebra::{rat, MultigradedPolynomial, QMatrix, Rational};
use crate::matroid::{schubert_matroid, Matroid, SchubertData};
use crate::simplicial::{hochster_betti, BettiTable, SimplicialComplex};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use std::collections::BTreeMap;

const SCHUBERT_RETRIES: usize = 16;
const ENTRY_BOUND: i64 = 1 << 20;

/// A full-row-rank matrix together with its column matroid.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Realization {
    pub matrix: QMatrix,
    pub matroid: Matroid,
}

impl Realization {
    /// Drops dependent rows so the matrix has full row rank.
    pub fn from_matrix(matrix: QMatrix) -> Self {
        // pivot columns of the transpose index independent rows
        let (_, rows) = matrix.transpose().rref();
        let matrix = matrix.select_rows(&rows);
        let matroid = Matroid::from_matrix(&matrix);
        Realization { matrix, matroid }
    }

    /// Accepts `matrix` only if its column matroid is `declared`.
    pub fn verified(matrix: QMatrix, declared: &Matroid) -> Result<Self> {
        let r = Self::from_matrix(matrix);
        if &r.matroid != declared {
            return Err(Error::RealizationFailed(format!("column matroid {:?} differs from the declared {:?}", r.matroid, declared)));
        }
        Ok(r)
    }

    pub fn n(&self) -> usize {
        self.matrix.cols()
    }
}

/// Vandermonde matrix with nodes `1..=n`.
pub fn realize_uniform(r: usize, n: usize) -> Result<Realization> {
    let m = crate::matroid::uniform(r, n)?;
    let rows: Vec<Vec<i64>> = (0..r).map(|k| (1..=n as i64).map(|x| x.pow(k as u32)).collect()).collect();
    let matrix = if r == 0 { QMatrix::zeros(0, n) } else { QMatrix::from_i64(&rows) };
    Ok(Realization { matrix, matroid: m })
}

/// The standard 0/1 realization of the non-Fano matroid.
pub fn realize_nonfano() -> Result<Realization> {
    let cols = [[1, 1, 1], [1, 0, 0], [0, 1, 0], [0, 0, 1], [1, 0, 1], [1, 1, 0], [0, 1, 1]];
    let rows: Vec<Vec<i64>> = (0..3).map(|i| cols.iter().map(|c| c[i]).collect()).collect();
    Realization::verified(QMatrix::from_i64(&rows), &crate::matroid::nonfano())
}

/// Column `e` in block `i` of the chain is a random vector supported on the
/// first `rank(S_i)` coordinates; the result is checked and redrawn on
/// failure.
pub fn realize_schubert(d: &SchubertData, seed: u64) -> Result<Realization> {
    let target = schubert_matroid(d)?;
    let n = d.chain.n();
    let r = target.rank();
    let support: Vec<usize> = d.chain.sets().iter().map(|&s| target.rank_of(s)).collect();
    let blocks = d.chain.blocks();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..SCHUBERT_RETRIES {
        let mut m = QMatrix::zeros(r, n);
        for (k, &b) in blocks.iter().enumerate() {
            for e in bits::iter(b) {
                for row in 0..support[k + 1] {
                    m.set(row, e - 1, rat(rng.gen_range(-ENTRY_BOUND..=ENTRY_BOUND)));
                }
            }
        }
        if m.rank() == r && Matroid::from_matrix(&m) == target {
            return Ok(Realization { matrix: m, matroid: target });
        }
    }
    Err(Error::RealizationFailed(format!("no realization of {target:?} after {SCHUBERT_RETRIES} draws")))
}

/// Kernel basis of the columns `cols`, each row scaled to a primitive
/// integer vector.
fn integer_kernel(m: &QMatrix, cols: &[usize]) -> Vec<Vec<BigInt>> {
    let sub = m.select_columns(cols);
    let sub = if sub.rows() == 0 { QMatrix::zeros(1, cols.len()) } else { sub };
    sub.kernel_basis()
        .into_iter()
        .map(|v| {
            let l = v.iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
            let ints: Vec<BigInt> = v.iter().map(|q| (q * Rational::from_integer(l.clone())).to_integer()).collect();
            let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
            ints.into_iter().map(|x| if g.is_zero() { x } else { x / &g }).collect()
        })
        .collect()
}

fn int_det(rows: &[Vec<BigInt>], cols: &[usize]) -> BigInt {
    if cols.is_empty() {
        return BigInt::one();
    }
    let q = QMatrix::from_rows(rows.iter().map(|r| cols.iter().map(|&c| Rational::from_integer(r[c].clone())).collect()).collect());
    q.det().to_integer()
}

/// `det d_C` as a polynomial in `x1..xn, y1..yn`, expanded along the split
/// of rows into the `A`-kernel block and the `B`-kernel block.
pub fn determinantal_generator(a: &Realization, b: &Realization, c: u32) -> Result<MultigradedPolynomial> {
    let n = a.n();
    if b.n() != n {
        return Err(Error::GroundSetMismatch(n, b.n()));
    }
    let cols: Vec<usize> = bits::iter(c).map(|e| e - 1).collect();
    let size = cols.len();
    let ra = a.matroid.rank_of(c);
    let rb = b.matroid.rank_of(c);
    if ra + rb != size {
        return Err(Error::NotSquare(ra + rb, size));
    }
    let ka = integer_kernel(&a.matrix, &cols);
    let kb = integer_kernel(&b.matrix, &cols);
    let mut p = MultigradedPolynomial::zero(&xy_labels(n));
    let row_sign: usize = (1..=ka.len()).sum();
    for xs in bits::k_subsets(size, ka.len()) {
        // positions in C taking an x variable
        let xpos: Vec<usize> = bits::iter(xs).map(|j| j - 1).collect();
        let ypos: Vec<usize> = (0..size).filter(|j| xs >> j & 1 == 0).collect();
        let da = int_det(&ka, &xpos);
        if da.is_zero() {
            continue;
        }
        let db = int_det(&kb, &ypos);
        if db.is_zero() {
            continue;
        }
        let col_sign: usize = xpos.iter().map(|j| j + 1).sum();
        let mut coef = da * db;
        if (row_sign + col_sign) % 2 == 1 {
            coef = -coef;
        }
        let xset = xpos.iter().fold(0u32, |s, &j| s | 1 << cols[j]);
        let yset = c & !xset;
        let mask = xy_mask(n, xset, yset);
        let exp: Vec<i64> = (0..2 * n).map(|v| (mask >> v & 1) as i64).collect();
        p.add_term(exp, coef);
    }
    Ok(p)
}

/// `(J1, J2)` for each monomial `y_{J1} x_{J2}` of a determinant.
pub fn monomial_splits(p: &MultigradedPolynomial, n: usize) -> Vec<(u32, u32)> {
    let mut out: Vec<(u32, u32)> = p
        .terms()
        .map(|(e, _)| {
            let mask = e.iter().enumerate().filter(|(_, &v)| v != 0).fold(0u64, |s, (i, _)| s | 1 << i);
            let (x, y) = split_xy(n, mask);
            (y, x)
        })
        .collect();
    out.sort_by_key(|&(a, _)| bits::lex_key(a));
    out
}

/// Per-circuit comparison of `det d_C` with the combinatorial prediction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CircuitCheck {
    pub circuit: u32,
    /// Leading `(J1, J2)` of the determinant.
    pub leading: (u32, u32),
    /// The `w`-initial decomposition `(I1, I2)`.
    pub expected: (u32, u32),
    /// Monomial support equals the set of independent splits.
    pub support_ok: bool,
}

impl CircuitCheck {
    pub fn ok(&self) -> bool {
        self.support_ok && self.leading == self.expected
    }
}

/// Checks every circuit of `D`; ties in the determinant raise `TieError`.
pub fn initial_ideal_report(a: &Realization, b: &Realization, w: &Weight) -> Result<Vec<CircuitCheck>> {
    let pair = MatroidPair::new(a.matroid.clone(), b.matroid.clone())?;
    let n = pair.n();
    let circuits = pair.circuits_d();
    circuits
        .par_iter()
        .map(|&c| {
            let det = determinantal_generator(a, b, c)?;
            let splits = monomial_splits(&det, n);
            let support_ok = splits == pair.decompositions(c)?;
            let mut scored: Vec<(Rational, (u32, u32))> = splits.iter().map(|&(j1, j2)| (w.of_split(j1, j2), (j1, j2))).collect();
            scored.sort_by(|x, y| y.0.cmp(&x.0));
            if scored.len() > 1 && scored[0].0 == scored[1].0 {
                return Err(Error::TieError(format!("two leading monomials of det d_C for C = {}", bits::fmt(c))));
            }
            let leading = scored.first().map(|s| s.1).ok_or_else(|| Error::NotACircuit(bits::elems(c)))?;
            let expected = initial_decomposition(&pair, w, c)?;
            Ok(CircuitCheck { circuit: c, leading, expected, support_ok })
        })
        .collect()
}

pub fn verify_initial_ideal(a: &Realization, b: &Realization, w: &Weight) -> Result<bool> {
    Ok(initial_ideal_report(a, b, w)?.iter().all(CircuitCheck::ok))
}

/// All `|C| × |C|` minors of `d_C` vanish at `x_i = u_i / t_i`,
/// `y_i = v_i / t_i` for random `u ∈ rowspace A`, `v ∈ rowspace B`, `t`.
pub fn minors_vanish_on_samples(a: &Realization, b: &Realization, c: u32, samples: usize, seed: u64) -> bool {
    let cols: Vec<usize> = bits::iter(c).map(|e| e - 1).collect();
    let size = cols.len();
    let ka = integer_kernel(&a.matrix, &cols);
    let kb = integer_kernel(&b.matrix, &cols);
    if ka.len() + kb.len() < size {
        return true;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let combo = |m: &QMatrix, rng: &mut ChaCha8Rng| -> Vec<Rational> {
        let coeffs: Vec<Rational> = (0..m.rows()).map(|_| rat(rng.gen_range(-50..=50))).collect();
        (0..m.cols()).map(|j| (0..m.rows()).fold(Rational::zero(), |s, i| s + &coeffs[i] * m.get(i, j))).collect()
    };
    (0..samples).all(|_| {
        let u = combo(&a.matrix, &mut rng);
        let v = combo(&b.matrix, &mut rng);
        let t: Vec<Rational> = (0..a.n()).map(|_| rat(rng.gen_range(1..=97))).collect();
        let mut rows = Vec::new();
        for (kern, vals) in [(&ka, &u), (&kb, &v)] {
            for r in kern {
                rows.push(cols.iter().enumerate().map(|(j, &e)| Rational::from_integer(r[j].clone()) * &vals[e] / &t[e]).collect());
            }
        }
        QMatrix::from_rows(rows).rank() < size
    })
}

/// Stanley-Reisner complex of `(x_C : C a circuit of D)` on `x1..xn, y1..yn`:
/// facets `x_B y_[n]`.
pub fn circuit_ideal_complex(trunc: &DilworthTruncation) -> SimplicialComplex {
    let n = trunc.pair.n();
    let all = bits::full(n);
    let facets: Vec<u64> = trunc.d.bases().iter().map(|&bs| xy_mask(n, bs, all)).collect();
    SimplicialComplex::from_facets(xy_labels(n), &facets)
}

/// Fine degree `x_A y_B ↦ 1_A + 1_B ∈ Z^n`.
pub fn zn_degree(n: usize, mask: u64) -> Vec<u8> {
    let (x, y) = split_xy(n, mask);
    (0..n).map(|i| (x >> i & 1) as u8 + (y >> i & 1) as u8).collect()
}

pub type ZnBetti = BTreeMap<(usize, Vec<u8>), u64>;

/// Both `Z^n`-graded Betti tables: of `Δ_w` and of the circuit-ideal complex.
pub fn betti_tables_zn(pair: &MatroidPair, w: &Weight) -> Result<(BettiTable, ZnBetti, ZnBetti)> {
    let n = pair.n();
    let act = Activity::new(pair, w)?;
    let cx = act.complex()?;
    let fine = hochster_betti(&cx, 2 * n);
    let other = hochster_betti(&circuit_ideal_complex(&act.trunc), 2 * n);
    let a = fine.coarsen(|s| zn_degree(n, s));
    let b = other.coarsen(|s| zn_degree(n, s));
    Ok((fine, a, b))
}

pub fn betti_equality_check(pair: &MatroidPair, w: &Weight) -> Result<bool> {
    let (_, a, b) = betti_tables_zn(pair, w)?;
    Ok(a == b)
}

/// Fine Betti numbers in total degree `n` sit in homological degree
/// `corank(D)` and in degrees `x_A y_B` with `A ⊔ B = [n]`.
pub fn top_degree_support_ok(fine: &BettiTable, n: usize, corank_d: usize) -> bool {
    fine.entries.keys().filter(|&&(_, s)| s.count_ones() as usize == n).all(|&(i, s)| {
        let (x, y) = split_xy(n, s);
        i == corank_d && x & y == 0 && (x | y) == bits::full(n)
    })
}
