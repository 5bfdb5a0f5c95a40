//! Torus localization on the permutohedral variety: Euler characteristics of
//! exterior powers of tautological classes, the localization form of the
//! `Z^2`-graded K-polynomial, the g-invariant and `ω(M)`.
//!
//! Every sum runs over `π ∈ S_n` after the specialization `T_i = t^{c_i}`.
//! Summands are grouped by their lex-first bases and brought over the common
//! denominator `L = Π_{a<b} (1 - t^{|c_a - c_b|})`, so a single exact division
//! by `L` at the end replaces per-term rational-function reduction.

use crate::activity::{lex_weight, xy_mask, Activity, Weight};
use crate::bits;
use crate::dilworth::{DilworthTruncation, MatroidPair};
use crate::error::{Error, Result};
use crate::exact_algebra::{MultigradedPolynomial, Rational, UniPoly, UniRationalFunction};
use crate::matroid::Matroid;
use crate::simplicial::{hochster_betti, k_polynomial_fine, reduced_homology_dims, xy_grading, Grading, SimplicialComplex};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;
use std::collections::BTreeMap;

const PRIMES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];

/// Distinct positive integers `c_1..c_n` for `T_i ↦ t^{c_i}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubstitutionVector {
    c: Vec<u64>,
}

impl SubstitutionVector {
    pub fn new(c: Vec<u64>) -> Result<Self> {
        let mut s = c.clone();
        s.sort_unstable();
        s.dedup();
        if s.len() != c.len() || c.contains(&0) {
            return Err(Error::BadInput(format!("substitution vector {c:?} must be distinct and positive")));
        }
        Ok(SubstitutionVector { c })
    }

    /// `(1, 2, …, n)`.
    pub fn consecutive(n: usize) -> Self {
        SubstitutionVector { c: (1..=n as u64).collect() }
    }

    /// The first `n` primes.
    pub fn primes(n: usize) -> Self {
        assert!(n <= PRIMES.len());
        SubstitutionVector { c: PRIMES[..n].to_vec() }
    }

    /// A vector other than `self`, for the second opinion.
    pub fn alternate(&self) -> Self {
        let n = self.c.len();
        let p = Self::primes(n);
        if *self == p {
            Self::consecutive(n)
        } else {
            p
        }
    }

    pub fn c(&self) -> &[u64] {
        &self.c
    }

    pub fn n(&self) -> usize {
        self.c.len()
    }
}

/// Grouped numerators over the common denominator `L`.
struct Groups {
    l: Vec<i128>,
    num: BTreeMap<(u32, u32), Vec<i128>>,
}

fn next_permutation(v: &mut [usize]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

fn poly_i128(p: &[i128]) -> UniPoly {
    UniPoly::new(p.iter().map(|&v| BigInt::from(v)).collect())
}

/// `Σ_π 1 / Π_k (1 - t^{c_{π(k+1)} - c_{π(k)}})` split by `key(π)`, each part
/// written as `N_key / L` with polynomial `N_key`.
fn localization_groups(c: &SubstitutionVector, key: &(dyn Fn(&[usize]) -> (u32, u32) + Sync)) -> Groups {
    let n = c.n();
    let cv = c.c();
    let mut l = vec![1i128];
    for a in 0..n {
        for b in a + 1..n {
            let k = cv[a].abs_diff(cv[b]) as usize;
            let mut next = vec![0i128; l.len() + k];
            for (j, &v) in l.iter().enumerate() {
                next[j] += v;
                next[j + k] -= v;
            }
            l = next;
        }
    }
    let spread = (cv.iter().max().unwrap_or(&0) - cv.iter().min().unwrap_or(&0)) as usize;
    let width = l.len() + n.saturating_sub(1) * spread;
    let heads: Vec<(usize, usize)> = if n < 2 {
        vec![(0, 0)]
    } else {
        (0..n).flat_map(|a| (0..n).filter(move |&b| b != a).map(move |b| (a, b))).collect()
    };
    let merge = |mut a: BTreeMap<(u32, u32), Vec<i128>>, b: BTreeMap<(u32, u32), Vec<i128>>| {
        for (k, v) in b {
            match a.get_mut(&k) {
                Some(acc) => acc.iter_mut().zip(&v).for_each(|(x, y)| *x += y),
                None => {
                    a.insert(k, v);
                }
            }
        }
        a
    };
    let num = heads
        .par_iter()
        .map(|&(a, b)| {
            let mut acc: BTreeMap<(u32, u32), Vec<i128>> = BTreeMap::new();
            // π as 0-based positions; the head is fixed, the tail runs through
            // all orders
            let mut tail: Vec<usize> = (0..n).filter(|&x| n < 2 || (x != a && x != b)).collect();
            let mut pi = vec![0usize; n];
            let mut buf = vec![0i128; l.len()];
            let mut labels = vec![0usize; n];
            loop {
                if n >= 2 {
                    pi[0] = a;
                    pi[1] = b;
                    pi[2..].copy_from_slice(&tail);
                } else {
                    pi.copy_from_slice(&tail);
                }
                buf.copy_from_slice(&l);
                let mut neg = 0usize;
                let mut shift = 0usize;
                for k in 0..n.saturating_sub(1) {
                    let (p, q) = (cv[pi[k]], cv[pi[k + 1]]);
                    let d = p.abs_diff(q) as usize;
                    if q < p {
                        neg += 1;
                        shift += d;
                    }
                    for j in d..buf.len() {
                        buf[j] += buf[j - d];
                    }
                }
                for (lab, &x) in labels.iter_mut().zip(&pi) {
                    *lab = x + 1;
                }
                let slot = acc.entry(key(&labels)).or_insert_with(|| vec![0i128; width]);
                let sign = if neg.is_multiple_of(2) { 1 } else { -1 };
                for (j, &v) in buf.iter().enumerate() {
                    if v != 0 {
                        slot[j + shift] += sign * v;
                    }
                }
                if !next_permutation(&mut tail) {
                    break;
                }
            }
            acc
        })
        .reduce(BTreeMap::new, merge);
    Groups { l, num }
}

/// `e_0, …, e_k` of the monomials `t^{c_a}` for `a ∈ s`.
fn elementary(s: u32, c: &[u64]) -> Vec<UniPoly> {
    let mut e = vec![UniPoly::one()];
    for a in bits::iter(s) {
        let m = UniPoly::monomial(BigInt::one(), c[a - 1] as usize);
        let mut next = e.clone();
        next.push(UniPoly::zero());
        for i in 0..e.len() {
            next[i + 1] = next[i + 1].add(&e[i].mul(&m));
        }
        e = next;
    }
    e
}

/// `num / L` as a polynomial, or the reason it is not one.
fn divide_by_l(num: &UniPoly, l: &UniPoly) -> Result<UniPoly> {
    if let Some(q) = num.div_exact(l) {
        return Ok(q);
    }
    let f = UniRationalFunction::new(num.clone(), l.clone())?;
    if f.den().eval_at_one().is_zero() {
        return Err(Error::PoleAtOne);
    }
    Err(Error::NotPolynomial(format!("denominator {} remains", f.den())))
}

/// `χ_{ij}(t) = Σ_π e_i(t^{c_a} : a∉B1(π)) e_j(t^{c_b} : b∉B2(π)) / Π(1 - t^{…})`
/// for all `i, j ≤ n`, each a polynomial in `t`.
#[derive(Debug, Clone)]
pub struct ChiTable {
    pub c: SubstitutionVector,
    pub polys: Vec<Vec<UniPoly>>,
}

impl ChiTable {
    pub fn value(&self, i: usize, j: usize) -> BigInt {
        self.polys.get(i).and_then(|r| r.get(j)).map_or_else(BigInt::zero, |p| p.eval_at_one())
    }

    pub fn values(&self) -> Vec<Vec<BigInt>> {
        self.polys.iter().map(|r| r.iter().map(|p| p.eval_at_one()).collect()).collect()
    }
}

fn check_c(n: usize, c: &SubstitutionVector) -> Result<()> {
    if c.n() != n {
        return Err(Error::BadInput(format!("substitution vector has length {}, ground set {n}", c.n())));
    }
    if n > 9 {
        return Err(Error::TooLarge(format!("n = {n} > 9 for the permutation sum")));
    }
    Ok(())
}

pub fn chi_table(pair: &MatroidPair, c: &SubstitutionVector) -> Result<ChiTable> {
    let n = pair.n();
    check_c(n, c)?;
    let (m1, m2) = (&pair.m1, &pair.m2);
    let key = |pi: &[usize]| (m1.lex_first_basis(pi), m2.lex_first_basis(pi));
    let g = localization_groups(c, &key);
    let full = bits::full(n);
    let mut acc = vec![vec![UniPoly::zero(); n + 1]; n + 1];
    for (&(b1, b2), nk) in &g.num {
        let nk = poly_i128(nk);
        let e1 = elementary(full & !b1, c.c());
        let e2 = elementary(full & !b2, c.c());
        for (i, p) in e1.iter().enumerate() {
            let pn = p.mul(&nk);
            for (j, q) in e2.iter().enumerate() {
                acc[i][j].add_assign(&pn.mul(q));
            }
        }
    }
    let l = poly_i128(&g.l);
    let polys = acc.iter().map(|row| row.iter().map(|p| divide_by_l(p, &l)).collect::<Result<Vec<_>>>()).collect::<Result<Vec<_>>>()?;
    Ok(ChiTable { c: c.clone(), polys })
}

fn agree(a: &ChiTable, b: &ChiTable) -> Result<()> {
    if a.values() != b.values() {
        return Err(Error::RouteDisagreement(format!(
            "Euler characteristics differ between substitution vectors {:?} and {:?}",
            a.c.c(),
            b.c.c()
        )));
    }
    Ok(())
}

/// `χ(⋀^i Q1^∨ · ⋀^j Q2^∨)`, checked against a second substitution vector.
pub fn chi_pair(pair: &MatroidPair, i: usize, j: usize, c: &SubstitutionVector) -> Result<BigInt> {
    let a = chi_table(pair, c)?;
    let b = chi_table(pair, &c.alternate())?;
    agree(&a, &b)?;
    Ok(a.value(i, j))
}

/// Per-permutation rational-function sum for one `(i, j)`; a slow reference.
pub fn chi_pair_reference(pair: &MatroidPair, i: usize, j: usize, c: &SubstitutionVector) -> Result<BigInt> {
    let n = pair.n();
    check_c(n, c)?;
    let cv = c.c();
    let full = bits::full(n);
    let mut pi: Vec<usize> = (1..=n).collect();
    let mut sum = UniRationalFunction::from_poly(UniPoly::zero());
    loop {
        let b1 = pair.m1.lex_first_basis(&pi);
        let b2 = pair.m2.lex_first_basis(&pi);
        let e1 = elementary(full & !b1, cv);
        let e2 = elementary(full & !b2, cv);
        let top = match (e1.get(i), e2.get(j)) {
            (Some(p), Some(q)) => p.mul(q),
            _ => UniPoly::zero(),
        };
        let mut num = UniRationalFunction::from_poly(top);
        for k in 0..n.saturating_sub(1) {
            let (p, q) = (cv[pi[k] - 1], cv[pi[k + 1] - 1]);
            let f = if q > p {
                UniRationalFunction::new(UniPoly::one(), UniPoly::one_minus_t_pow((q - p) as usize))?
            } else {
                // 1 / (1 - t^{-d}) = -t^d / (1 - t^d)
                let d = (p - q) as usize;
                UniRationalFunction::new(UniPoly::monomial(BigInt::from(-1), d), UniPoly::one_minus_t_pow(d))?
            };
            num = num.mul(&f);
        }
        sum = sum.add(&num);
        if !next_permutation(&mut pi) {
            break;
        }
    }
    if !sum.is_laurent() {
        return Err(Error::NotPolynomial(format!("denominator {} remains", sum.den())));
    }
    Ok(sum.eval_at_one()?.to_integer())
}

fn u_vars() -> Vec<String> {
    MultigradedPolynomial::names(&["U1", "U2"])
}

fn ut_vars() -> Vec<String> {
    MultigradedPolynomial::names(&["U1", "U2", "t"])
}

fn sign(k: usize) -> BigInt {
    if k.is_multiple_of(2) {
        BigInt::one()
    } else {
        BigInt::from(-1)
    }
}

fn table_to_u(t: &ChiTable) -> MultigradedPolynomial {
    let mut p = MultigradedPolynomial::zero(&u_vars());
    for (i, row) in t.polys.iter().enumerate() {
        for (j, q) in row.iter().enumerate() {
            p.add_term(vec![i as i64, j as i64], sign(i + j) * q.eval_at_one());
        }
    }
    p
}

/// `Σ_{i,j} χ_{ij}(t) (-U1)^i (-U2)^j` in the variables `U1, U2, t`.
pub fn k_poly_localization_t(pair: &MatroidPair, c: &SubstitutionVector) -> Result<MultigradedPolynomial> {
    let t = chi_table(pair, c)?;
    let mut p = MultigradedPolynomial::zero(&ut_vars());
    for (i, row) in t.polys.iter().enumerate() {
        for (j, q) in row.iter().enumerate() {
            for (k, a) in q.coeffs().iter().enumerate() {
                p.add_term(vec![i as i64, j as i64, k as i64], sign(i + j) * a);
            }
        }
    }
    Ok(p)
}

/// `Σ_{i,j} χ(⋀^i Q1^∨ ⋀^j Q2^∨) (-U1)^i (-U2)^j`, computed under `c1` and
/// `c2`; the two must agree.
pub fn k_poly_localization_with(pair: &MatroidPair, c1: &SubstitutionVector, c2: &SubstitutionVector) -> Result<MultigradedPolynomial> {
    let a = chi_table(pair, c1)?;
    let b = chi_table(pair, c2)?;
    agree(&a, &b)?;
    Ok(table_to_u(&a))
}

pub fn k_poly_localization(pair: &MatroidPair) -> Result<MultigradedPolynomial> {
    let n = pair.n();
    k_poly_localization_with(pair, &SubstitutionVector::consecutive(n), &SubstitutionVector::primes(n))
}

/// Complex-side K-polynomial in `U1, U2, t` after `x_i ↦ U1 t^{c_i}`,
/// `y_i ↦ U2 t^{c_i}`.
pub fn complex_k_specialized(cx: &SimplicialComplex, n: usize, c: &SubstitutionVector) -> Result<MultigradedPolynomial> {
    let (fine, _) = xy_grading(n, Grading::Fine);
    let k = k_polynomial_fine(cx, &fine)?;
    let images: Vec<Vec<i64>> = (0..2 * n).map(|v| vec![(v < n) as i64, (v >= n) as i64, c.c()[v % n] as i64]).collect();
    Ok(k.coarsen(&ut_vars(), &images))
}

/// Complex side against the localization sum at the `Z^2 × Z^n` level,
/// specialized along `c`.
pub fn k_poly_specialized_check_complex(pair: &MatroidPair, cx: &SimplicialComplex, c: &SubstitutionVector) -> Result<bool> {
    Ok(complex_k_specialized(cx, pair.n(), c)? == k_poly_localization_t(pair, c)?)
}

pub fn k_poly_specialized_check(pair: &MatroidPair, w: &Weight, c: &SubstitutionVector) -> Result<bool> {
    let cx = Activity::new(pair, w)?.complex()?;
    k_poly_specialized_check_complex(pair, &cx, c)
}

/// `t^{Σc} χ(⋀^i S_M · ⋀^i Q_M^∨)(t)` for `i = 0..=rank`.
fn g_table(m: &Matroid, c: &SubstitutionVector) -> Result<Vec<UniPoly>> {
    let n = m.n();
    check_c(n, c)?;
    let key = |pi: &[usize]| (m.lex_first_basis(pi), 0u32);
    let g = localization_groups(c, &key);
    let full = bits::full(n);
    let r = m.rank();
    let mut acc = vec![UniPoly::zero(); r + 1];
    for (&(b, _), nk) in &g.num {
        let nk = poly_i128(nk);
        // e_i(t^{-c}_B) t^{Σc} = e_{r-i}(t^c_B) t^{Σ_{a∉B} c_a}
        let eb = elementary(b, c.c());
        let eq = elementary(full & !b, c.c());
        let out: usize = bits::iter(full & !b).map(|a| c.c()[a - 1] as usize).sum();
        for (i, slot) in acc.iter_mut().enumerate() {
            if let Some(q) = eq.get(i) {
                slot.add_assign(&eb[r - i].mul(q).shift(out).mul(&nk));
            }
        }
    }
    let l = poly_i128(&g.l);
    acc.iter().map(|p| divide_by_l(p, &l)).collect()
}

/// `χ(⋀^i S_M · ⋀^i Q_M^∨)` for `i = 0..=rank`, agreed on by two
/// substitution vectors.
pub fn g_chis(m: &Matroid) -> Result<Vec<BigInt>> {
    let n = m.n();
    let a: Vec<BigInt> = g_table(m, &SubstitutionVector::consecutive(n))?.iter().map(|p| p.eval_at_one()).collect();
    let b: Vec<BigInt> = g_table(m, &SubstitutionVector::primes(n))?.iter().map(|p| p.eval_at_one()).collect();
    if a != b {
        return Err(Error::RouteDisagreement("g-invariant Euler characteristics differ between substitution vectors".into()));
    }
    Ok(a)
}

/// Speyer's g-invariant, `(-1)^c Σ_i χ(⋀^i S_M · ⋀^i Q_M^∨) (t + 1)^i` with
/// `c` the number of connected components; zero when `M` has a loop.
///
/// Expanding in `t - 1` instead puts the wrong signs on the lower
/// coefficients: it gives `t^2 - 2t` for `U(2,4)`, while the subdivision
/// bound forces `t^2 + 2t`. The leading coefficient, `ω(M)`, is the same
/// either way.
pub fn g_invariant(m: &Matroid) -> Result<MultigradedPolynomial> {
    let vars = vec!["t".to_string()];
    if m.loops() != 0 {
        return Ok(MultigradedPolynomial::zero(&vars));
    }
    let chis = g_chis(m)?;
    let tp1 = MultigradedPolynomial::var(&vars, 0).add(&MultigradedPolynomial::one(&vars));
    let mut g = MultigradedPolynomial::zero(&vars);
    for (i, x) in chis.iter().enumerate() {
        g = g.add(&tp1.pow(i as u32).scale(x));
    }
    Ok(g.scale(&sign(m.connected_components().len())))
}

/// `Σ_{B ∈ C([n], r)} dim H̃_{2r-2}(link(x_{[n]∖B} y_B))` in `Δ_w(M, M)`.
pub fn omega_via_links(m: &Matroid, w: &Weight) -> Result<BigInt> {
    let pair = MatroidPair::new(m.clone(), m.clone())?;
    let act = Activity::new(&pair, w)?;
    if m.loops() != 0 || !m.is_connected() || !act.trunc.expected_rank {
        return Err(Error::NotExpectedRank);
    }
    let cx = act.complex()?;
    Ok(omega_link_sum(m, &cx))
}

fn omega_link_sum(m: &Matroid, cx: &SimplicialComplex) -> BigInt {
    let (n, r) = (m.n(), m.rank());
    let full = bits::full(n);
    bits::k_subsets(n, r)
        .par_iter()
        .map(|&b| {
            let face = xy_mask(n, full & !b, b);
            if !cx.is_face(face) {
                return 0usize;
            }
            let link = cx.link(face).expect("checked face");
            let h = reduced_homology_dims(&link);
            h.get(2 * r - 1).copied().unwrap_or(0)
        })
        .sum::<usize>()
        .into()
}

/// How `ω(M)` was obtained.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OmegaReport {
    pub value: BigInt,
    /// `loop`, `components`, `unexpected-rank` or `cross-checked`.
    pub route: &'static str,
    /// `(-1)^{n+1} [U1^r U2^{n-r}]` of the localization K-polynomial.
    pub route_a: Option<BigInt>,
    /// Link-homology sum.
    pub route_b: Option<BigInt>,
    pub components: Vec<OmegaReport>,
    /// Tutte beta invariant of `D(M, M)` halved, when `2r - 1 = n - 2`.
    pub beta_half_tutte: Option<Rational>,
    /// Top total Betti number of `Δ_w(M, M)` halved, when `2r - 1 = n - 2`.
    pub top_betti_half: Option<Rational>,
}

impl OmegaReport {
    fn plain(value: BigInt, route: &'static str) -> Self {
        OmegaReport { value, route, route_a: None, route_b: None, components: Vec::new(), beta_half_tutte: None, top_betti_half: None }
    }
}

/// `ω(M)`, the coefficient of `t^{rank}` in `g_M`. Connected matroids of
/// expected rank go through both routes, which must agree.
pub fn omega(m: &Matroid) -> Result<OmegaReport> {
    omega_with(m, &lex_weight(m.n().max(1)))
}

pub fn omega_with(m: &Matroid, w: &Weight) -> Result<OmegaReport> {
    if m.loops() != 0 {
        return Ok(OmegaReport::plain(BigInt::zero(), "loop"));
    }
    let comps = m.connected_components();
    if comps.len() > 1 {
        let mut parts = Vec::new();
        for &s in &comps {
            let sub = m.restrict(s);
            parts.push(omega_with(&sub, &w.restrict(s))?);
        }
        let value = parts.iter().fold(BigInt::one(), |a, p| a * &p.value);
        let mut rep = OmegaReport::plain(value, "components");
        rep.components = parts;
        return Ok(rep);
    }
    let (n, r) = (m.n(), m.rank());
    let pair = MatroidPair::new(m.clone(), m.clone())?;
    let act = Activity::with_truncation(DilworthTruncation::new(&pair), w)?;
    if !act.trunc.expected_rank {
        return Ok(OmegaReport::plain(BigInt::zero(), "unexpected-rank"));
    }
    let k = k_poly_localization(&pair)?;
    let a = sign(n + 1) * k.coefficient(&[r as i64, (n - r) as i64]);
    let cx = act.complex()?;
    let b = omega_link_sum(m, &cx);
    if a != b {
        return Err(Error::RouteDisagreement(format!("omega: localization gives {a}, link homology gives {b}")));
    }
    let mut rep = OmegaReport::plain(a.clone(), "cross-checked");
    rep.route_a = Some(a);
    rep.route_b = Some(b);
    if 2 * r + 1 == n {
        let beta = act.trunc.d.tutte().coefficient(&[1, 0]);
        rep.beta_half_tutte = Some(Rational::new(beta, BigInt::from(2)));
        let totals = hochster_betti(&cx, 2 * n + 1).totals();
        let top = totals.last().copied().unwrap_or(0);
        rep.top_betti_half = Some(Rational::new(BigInt::from(top), BigInt::from(2)));
    }
    Ok(rep)
}

/// `(n-i-1)! / ((r-i)! (n-r-i)! (i-1)!)`.
pub fn fvector_bound(n: usize, r: usize, i: usize) -> Result<Rational> {
    if i < 1 || i > r || r + i > n {
        return Err(Error::OutOfRange(format!("(n, r, i) = ({n}, {r}, {i})")));
    }
    let f = |k: usize| (1..=k).fold(BigInt::one(), |a, x| a * x);
    Ok(Rational::new(f(n - i - 1), f(r - i) * f(n - r - i) * f(i - 1)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matroid::uniform;

    fn pair(a: Matroid, b: Matroid) -> MatroidPair {
        MatroidPair::new(a, b).unwrap()
    }

    #[test]
    fn u12_self_pair() {
        let p = pair(uniform(1, 2).unwrap(), uniform(1, 2).unwrap());
        let c = SubstitutionVector::consecutive(2);
        assert_eq!(chi_pair(&p, 0, 0, &c).unwrap(), BigInt::one());
        assert_eq!(chi_pair(&p, 1, 1, &c).unwrap(), BigInt::from(-1));
        assert_eq!(chi_pair_reference(&p, 1, 1, &c).unwrap(), BigInt::from(-1));
        assert_eq!(k_poly_localization(&p).unwrap().to_string(), "1 - U1*U2");
    }

    #[test]
    fn grouped_sum_matches_reference() {
        let p = pair(uniform(2, 4).unwrap(), uniform(1, 4).unwrap());
        let c = SubstitutionVector::primes(4);
        let t = chi_table(&p, &c).unwrap();
        for i in 0..=4 {
            for j in 0..=4 {
                assert_eq!(t.value(i, j), chi_pair_reference(&p, i, j, &c).unwrap(), "({i},{j})");
            }
        }
        // ⋀^i Q1^∨ vanishes above the corank
        assert!(t.value(3, 0).is_zero());
    }

    #[test]
    fn omega_small_cases() {
        assert_eq!(omega(&uniform(2, 4).unwrap()).unwrap().value, BigInt::one());
        assert_eq!(omega(&uniform(1, 2).unwrap()).unwrap().value, BigInt::one());
        let loopy = Matroid::from_bases(3, &[0b011]).unwrap();
        assert_eq!(omega(&loopy).unwrap().route, "loop");
    }

    #[test]
    fn g_small_cases() {
        assert_eq!(g_invariant(&uniform(1, 2).unwrap()).unwrap().to_string(), "t");
        assert_eq!(g_invariant(&uniform(2, 4).unwrap()).unwrap().to_string(), "2*t + t^2");
        let loopy = Matroid::from_bases(2, &[0b01]).unwrap();
        assert!(g_invariant(&loopy).unwrap().is_zero());
    }

    #[test]
    fn bound_values() {
        assert_eq!(fvector_bound(4, 2, 1).unwrap(), Rational::from_integer(2.into()));
        assert!(fvector_bound(4, 2, 0).is_err());
    }
}
