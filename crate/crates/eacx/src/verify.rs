//! Property suites over a fixture battery, with counterexample reporting.
//!
//! Every check maps a fixture (or nothing, for global checks) to pass or a
//! witness string. Checks run in parallel; results are collected in a fixed
//! order so reports are reproducible.

use crate::activity::{e1_sequence, is_log_concave, lex_weight, random_weight, xy_mask, Activity, Weight};
use crate::bits;
use crate::dilworth::{DilworthTruncation, MatroidPair};
use crate::error::{Error, Result};
use crate::exact_algebra::MultigradedPolynomial;
use crate::kclasses::{g_invariant, k_poly_localization, k_poly_specialized_check_complex, omega, SubstitutionVector};
use crate::matroid::{fano, nonfano, ordered_set_partitions, schubert_expansion_check, schubert_matroid, uniform, ChainOfSets, Matroid, SchubertData};
use crate::realizable::{
    betti_tables_zn, minors_vanish_on_samples, realize_nonfano, realize_schubert, realize_uniform, top_degree_support_ok, verify_initial_ideal,
};
use crate::simplicial::{
    hochster_betti, is_cohen_macaulay, k_from_betti, k_polynomial_fine, k_polynomial_fine_substituted, reduced_homology_dims, reisner_expansion,
    xy_grading, Grading, SimplicialComplex,
};
use crate::tropical::{degree_polynomial, degree_polynomial_from_activity, facet_points, graph_of_point, monomial_of_point, tropical_ea_distribution};
use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use std::str::FromStr;

/// A named pair with the weight used for weight-dependent checks.
#[derive(Debug, Clone)]
pub struct Fixture {
    pub name: String,
    pub pair: MatroidPair,
    pub weight: Weight,
}

impl Fixture {
    pub fn new(name: impl Into<String>, pair: MatroidPair) -> Self {
        let weight = lex_weight(pair.n());
        Fixture { name: name.into(), pair, weight }
    }
}

/// Column matroid of a random small-entry matrix; zero columns give loops,
/// repeated columns give parallel classes.
pub fn random_matroid(n: usize, rng: &mut ChaCha8Rng) -> Matroid {
    let r = rng.gen_range(1..=n);
    let rows: Vec<Vec<i64>> = (0..r)
        .map(|_| (0..n).map(|_| if rng.gen_bool(0.3) { 0 } else { rng.gen_range(-2..=2) }).collect())
        .collect();
    Matroid::from_matrix(&crate::exact_algebra::QMatrix::from_i64(&rows))
}

/// A pair without common loops and with both ranks positive.
pub fn random_pair(n: usize, rng: &mut ChaCha8Rng) -> MatroidPair {
    loop {
        let (a, b) = (random_matroid(n, rng), random_matroid(n, rng));
        if a.rank() == 0 || b.rank() == 0 {
            continue;
        }
        if let Ok(p) = MatroidPair::new(a, b) {
            return p;
        }
    }
}

/// A random chain with random admissible bounds.
pub fn random_schubert(n: usize, rng: &mut ChaCha8Rng) -> SchubertData {
    loop {
        let chains = ordered_set_partitions(n);
        let ch: ChainOfSets = chains.choose(rng).expect("n > 0").clone();
        let mut a = vec![0usize];
        for b in ch.blocks() {
            let prev = *a.last().unwrap();
            a.push(prev + rng.gen_range(0..=bits::size(b)));
        }
        let d = SchubertData::new(ch, &a).expect("bounds match the chain");
        if schubert_matroid(&d).map(|m| m.rank() > 0).unwrap_or(false) {
            return d;
        }
    }
}

/// Ordered pairs from `{U13, U23, U33}`, `(F, F)`, `(F⁻, F⁻)` and
/// `random_count` random pairs on `3..=6` elements.
pub fn battery(seed: u64, random_count: usize) -> Vec<Fixture> {
    let mut out = Vec::new();
    for r1 in 1..=3 {
        for r2 in 1..=3 {
            let p = MatroidPair::new(uniform(r1, 3).unwrap(), uniform(r2, 3).unwrap()).unwrap();
            out.push(Fixture::new(format!("U{r1}3/U{r2}3"), p));
        }
    }
    out.push(Fixture::new("F/F", MatroidPair::new(fano(), fano()).unwrap()));
    out.push(Fixture::new("F-/F-", MatroidPair::new(nonfano(), nonfano()).unwrap()));
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for k in 0..random_count {
        let n = rng.gen_range(3..=6);
        let mut f = Fixture::new(format!("random{k}(n={n})"), random_pair(n, &mut rng));
        f.weight = random_weight(n, rng.gen());
        out.push(f);
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Dilworth,
    Activity,
    Simplicial,
    Kclasses,
    Tropical,
    Realizable,
    All,
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "dilworth" => Suite::Dilworth,
            "activity" => Suite::Activity,
            "simplicial" => Suite::Simplicial,
            "kclasses" => Suite::Kclasses,
            "tropical" => Suite::Tropical,
            "realizable" => Suite::Realizable,
            "all" => Suite::All,
            _ => return Err(Error::BadInput(format!("unknown suite {s}"))),
        })
    }
}

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::Dilworth => "dilworth",
            Suite::Activity => "activity",
            Suite::Simplicial => "simplicial",
            Suite::Kclasses => "kclasses",
            Suite::Tropical => "tropical",
            Suite::Realizable => "realizable",
            Suite::All => "all",
        }
    }

    fn covers(self, s: Suite) -> bool {
        self == Suite::All || self == s
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub suite: &'static str,
    pub check: &'static str,
    pub fixture: String,
    pub passed: bool,
    /// Counterexample or error text on failure.
    pub witness: Option<String>,
    pub error_class: Option<&'static str>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub suite: &'static str,
    pub seed: u64,
    pub passed: usize,
    pub failed: usize,
    pub checks: Vec<CheckResult>,
}

impl SuiteReport {
    pub fn ok(&self) -> bool {
        self.failed == 0
    }
}

/// `Ok(None)` passes; `Ok(Some(w))` fails with witness `w`.
type Outcome = Result<Option<String>>;

fn fail_if(bad: bool, witness: impl FnOnce() -> String) -> Outcome {
    Ok(bad.then(witness))
}

struct PairCheck {
    suite: Suite,
    name: &'static str,
    run: fn(&Fixture, u64) -> Outcome,
}

struct GlobalCheck {
    suite: Suite,
    name: &'static str,
    run: fn(u64) -> Outcome,
}

fn result(suite: Suite, check: &'static str, fixture: String, o: Outcome) -> CheckResult {
    let (passed, witness, error_class) = match o {
        Ok(None) => (true, None, None),
        Ok(Some(w)) => (false, Some(w), None),
        Err(e) => (false, Some(e.to_string()), Some(e.class())),
    };
    CheckResult { suite: suite.name(), check, fixture, passed, witness, error_class }
}

/// Runs `suite` on the standard battery for `seed`.
pub fn run_suite(suite: Suite, seed: u64) -> SuiteReport {
    run_suite_on(suite, seed, &battery(seed, 20))
}

/// Runs `suite` with the given fixtures for the per-pair checks.
pub fn run_suite_on(suite: Suite, seed: u64, fixtures: &[Fixture]) -> SuiteReport {
    let pair_checks: Vec<&PairCheck> = PAIR_CHECKS.iter().filter(|c| suite.covers(c.suite)).collect();
    let jobs: Vec<(&PairCheck, &Fixture)> = pair_checks.iter().flat_map(|c| fixtures.iter().map(move |f| (*c, f))).collect();
    let mut checks: Vec<CheckResult> = jobs.par_iter().map(|(c, f)| result(c.suite, c.name, f.name.clone(), (c.run)(f, seed))).collect();
    let globals: Vec<&GlobalCheck> = GLOBAL_CHECKS.iter().filter(|c| suite.covers(c.suite)).collect();
    checks.extend(globals.par_iter().map(|c| result(c.suite, c.name, "-".into(), (c.run)(seed))).collect::<Vec<_>>());
    let passed = checks.iter().filter(|c| c.passed).count();
    SuiteReport { suite: suite.name(), seed, passed, failed: checks.len() - passed, checks }
}

const PAIR_CHECKS: &[PairCheck] = &[
    PairCheck { suite: Suite::Dilworth, name: "rank-matches-definition", run: rank_matches_definition },
    PairCheck { suite: Suite::Dilworth, name: "against-u1n", run: against_u1n },
    PairCheck { suite: Suite::Dilworth, name: "restriction", run: restriction },
    PairCheck { suite: Suite::Dilworth, name: "truncation", run: truncation },
    PairCheck { suite: Suite::Dilworth, name: "bases-span", run: bases_span },
    PairCheck { suite: Suite::Dilworth, name: "disconnected-below-expected", run: disconnected_below_expected },
    PairCheck { suite: Suite::Dilworth, name: "schubert-expansion", run: schubert_expansion },
    PairCheck { suite: Suite::Dilworth, name: "independence-bivaluative", run: independence_bivaluative },
    PairCheck { suite: Suite::Activity, name: "purity", run: purity },
    PairCheck { suite: Suite::Activity, name: "weight-robust-ea", run: weight_robust_ea },
    PairCheck { suite: Suite::Activity, name: "log-concave", run: log_concave },
    PairCheck { suite: Suite::Activity, name: "nonfaces-are-generators", run: nonfaces_are_generators },
    PairCheck { suite: Suite::Activity, name: "truncation-invariance", run: complex_truncation_invariance },
    PairCheck { suite: Suite::Activity, name: "join-over-components", run: join_over_components },
    PairCheck { suite: Suite::Simplicial, name: "euler-poincare", run: euler_poincare },
    PairCheck { suite: Suite::Simplicial, name: "betti-gives-k", run: betti_gives_k },
    PairCheck { suite: Suite::Simplicial, name: "cohen-macaulay", run: cohen_macaulay },
    PairCheck { suite: Suite::Simplicial, name: "reisner-expansion", run: reisner_positivity },
    PairCheck { suite: Suite::Kclasses, name: "k-bridge-z2", run: k_bridge_z2 },
    PairCheck { suite: Suite::Kclasses, name: "k-bridge-z2xzn", run: k_bridge_z2xzn },
    PairCheck { suite: Suite::Kclasses, name: "degree-n-sign", run: degree_n_sign },
    PairCheck { suite: Suite::Kclasses, name: "swap-symmetry", run: swap_symmetry },
    PairCheck { suite: Suite::Kclasses, name: "tutte-identity", run: tutte_identity_check },
    PairCheck { suite: Suite::Kclasses, name: "g-linear-positive", run: g_linear_positive },
    PairCheck { suite: Suite::Kclasses, name: "omega-routes", run: omega_routes },
    PairCheck { suite: Suite::Tropical, name: "degree-polynomial", run: tropical_degree },
    PairCheck { suite: Suite::Tropical, name: "ea-from-points", run: tropical_ea },
    PairCheck { suite: Suite::Tropical, name: "facet-points", run: facet_points_check },
    PairCheck { suite: Suite::Tropical, name: "random-points", run: random_points },
    PairCheck { suite: Suite::Realizable, name: "betti-bridge", run: betti_bridge },
];

const GLOBAL_CHECKS: &[GlobalCheck] = &[
    GlobalCheck { suite: Suite::Dilworth, name: "direct-sum", run: direct_sum },
    GlobalCheck { suite: Suite::Tropical, name: "cells-example", run: cells_example },
    GlobalCheck { suite: Suite::Realizable, name: "uniform-pairs", run: uniform_pairs },
    GlobalCheck { suite: Suite::Realizable, name: "nonfano-self-pair", run: nonfano_self_pair },
    GlobalCheck { suite: Suite::Realizable, name: "random-schubert-pairs", run: random_schubert_pairs },
    GlobalCheck { suite: Suite::Realizable, name: "minors-vanish", run: minors_vanish },
];

fn trunc(f: &Fixture) -> DilworthTruncation {
    DilworthTruncation::new(&f.pair)
}

// dilworth

fn rank_matches_definition(f: &Fixture, _: u64) -> Outcome {
    let t = trunc(f);
    for s in 0..=bits::full(f.pair.n()) {
        let brute = f.pair.rank_d_bruteforce(s)?;
        if brute != t.rank_d(s) {
            return Ok(Some(format!("S = {}: greedy {} vs definition {brute}", bits::fmt(s), t.rank_d(s))));
        }
    }
    Ok(None)
}

fn against_u1n(f: &Fixture, _: u64) -> Outcome {
    let n = f.pair.n();
    for m in [&f.pair.m1, &f.pair.m2] {
        let d = DilworthTruncation::new(&MatroidPair::new(m.clone(), uniform(1, n)?)?).d;
        if &d != m {
            return Ok(Some(format!("D(M, U1{n}) = {d:?} but M = {m:?}")));
        }
    }
    Ok(None)
}

fn restriction(f: &Fixture, _: u64) -> Outcome {
    let n = f.pair.n();
    if n > 6 {
        return Ok(None);
    }
    let d = trunc(f).d;
    for s in 1..=bits::full(n) {
        let sub = MatroidPair::new(f.pair.m1.restrict(s), f.pair.m2.restrict(s))?;
        if DilworthTruncation::new(&sub).d != d.restrict(s) {
            return Ok(Some(format!("S = {}", bits::fmt(s))));
        }
    }
    Ok(None)
}

fn truncation(f: &Fixture, _: u64) -> Outcome {
    let t = trunc(f);
    if t.expected_rank || f.pair.m2.loops() != 0 {
        return Ok(None);
    }
    let tr = DilworthTruncation::new(&MatroidPair::new(f.pair.m1.clone(), f.pair.m2.truncate()?)?);
    fail_if(tr.d != t.d, || format!("D(M1, tr M2) = {:?} vs D = {:?}", tr.d, t.d))
}

fn bases_span(f: &Fixture, _: u64) -> Outcome {
    let t = trunc(f);
    if !t.expected_rank || t.rank() == 0 {
        return Ok(None);
    }
    let bad = t.d.bases().iter().find(|&&b| f.pair.m1.rank_of(b) != f.pair.m1.rank() || f.pair.m2.rank_of(b) != f.pair.m2.rank());
    fail_if(bad.is_some(), || format!("basis {} does not span", bits::fmt(*bad.unwrap())))
}

fn disconnected_below_expected(f: &Fixture, _: u64) -> Outcome {
    for m in [&f.pair.m1, &f.pair.m2] {
        if m.loops() == 0 && !m.is_connected() {
            let t = DilworthTruncation::new(&MatroidPair::new(m.clone(), m.clone())?);
            if t.expected_rank {
                return Ok(Some(format!("{m:?} is disconnected but D(M, M) has expected rank")));
            }
        }
    }
    Ok(None)
}

fn schubert_expansion(f: &Fixture, _: u64) -> Outcome {
    if f.pair.n() > 5 {
        return Ok(None);
    }
    for m in [&f.pair.m1, &f.pair.m2] {
        if !schubert_expansion_check(m)? {
            return Ok(Some(format!("{m:?}")));
        }
    }
    Ok(None)
}

/// `Σ_{S•} (-1)^{n-ℓ} [I ∈ D(Ω(S•, rank_{M1}), M2)] = [I ∈ D(M1, M2)]`.
fn independence_bivaluative(f: &Fixture, _: u64) -> Outcome {
    let n = f.pair.n();
    if n > 5 {
        return Ok(None);
    }
    let chains = ordered_set_partitions(n);
    let omegas: Vec<(i64, MatroidPair)> = chains
        .iter()
        .map(|c| {
            let om = schubert_matroid(&SchubertData::from_ranks(&f.pair.m1, c))?;
            Ok((if (n - c.len()).is_multiple_of(2) { 1 } else { -1 }, MatroidPair::new(om, f.pair.m2.clone())?))
        })
        .collect::<Result<_>>()?;
    for i in 0..=bits::full(n) {
        let sum: i64 = omegas.iter().filter(|(_, p)| p.independent_in_d(i)).map(|(s, _)| s).sum();
        if sum != f.pair.independent_in_d(i) as i64 {
            return Ok(Some(format!("I = {}: expansion {sum}", bits::fmt(i))));
        }
    }
    Ok(None)
}

fn direct_sum(_: u64) -> Outcome {
    let cases = [((2, 3), (1, 3), (1, 2), (1, 2)), ((2, 4), (2, 4), (1, 3), (2, 3)), ((1, 2), (2, 2), (2, 3), (2, 3))];
    for ((a, b), (c, d), (e, g), (h, k)) in cases {
        let (m1, m2) = (uniform(a, b)?, uniform(c, d)?);
        let (n1, n2) = (uniform(e, g)?, uniform(h, k)?);
        let whole = DilworthTruncation::new(&MatroidPair::new(m1.direct_sum(&n1), m2.direct_sum(&n2))?).d;
        let left = DilworthTruncation::new(&MatroidPair::new(m1, m2)?).d;
        let right = DilworthTruncation::new(&MatroidPair::new(n1, n2)?).d;
        if whole != left.direct_sum(&right) {
            return Ok(Some(format!("U{a}{b}+U{e}{g} / U{c}{d}+U{h}{k}")));
        }
    }
    Ok(None)
}

// activity

fn purity(f: &Fixture, _: u64) -> Outcome {
    let act = Activity::new(&f.pair, &f.weight)?;
    let want = f.pair.n() + act.trunc.rank();
    let bad = act.facets()?.into_iter().find(|m| m.count_ones() as usize != want);
    fail_if(bad.is_some(), || format!("facet of size {} != {want}", bad.unwrap().count_ones()))
}

fn weight_robust_ea(f: &Fixture, seed: u64) -> Outcome {
    let base = Activity::new(&f.pair, &f.weight)?.ea_distribution()?;
    for k in 0..5 {
        let w = random_weight(f.pair.n(), seed.wrapping_mul(31).wrapping_add(k));
        let other = Activity::new(&f.pair, &w)?.ea_distribution()?;
        if other != base {
            return Ok(Some(format!("random weight {k}: {other:?} vs {base:?}")));
        }
    }
    Ok(None)
}

fn log_concave(f: &Fixture, _: u64) -> Outcome {
    let act = Activity::new(&f.pair, &f.weight)?;
    if !act.trunc.expected_rank {
        return Ok(None);
    }
    let a = e1_sequence(&act.ea_distribution()?, f.pair.n());
    fail_if(!is_log_concave(&a), || format!("a_k = {a:?}"))
}

fn nonfaces_are_generators(f: &Fixture, _: u64) -> Outcome {
    let act = Activity::new(&f.pair, &f.weight)?;
    let mut nf = act.complex()?.minimal_nonfaces();
    nf.sort_unstable();
    let gens = act.sr_generators();
    fail_if(nf != gens, || format!("minimal non-faces {nf:?} vs generators {gens:?}"))
}

fn complex_truncation_invariance(f: &Fixture, _: u64) -> Outcome {
    let act = Activity::new(&f.pair, &f.weight)?;
    if act.trunc.expected_rank || f.pair.m2.loops() != 0 {
        return Ok(None);
    }
    let tr = MatroidPair::new(f.pair.m1.clone(), f.pair.m2.truncate()?)?;
    let other = Activity::new(&tr, &f.weight)?;
    fail_if(act.facets()? != other.facets()?, || "facets differ after truncating M2".into())
}

fn sorted_facets(cx: &SimplicialComplex) -> Vec<u64> {
    let mut v = cx.facets().to_vec();
    v.sort_unstable();
    v
}

fn join_over_components(f: &Fixture, _: u64) -> Outcome {
    let act = Activity::new(&f.pair, &f.weight)?;
    let comps = act.trunc.d.connected_components();
    if comps.len() < 2 {
        return Ok(None);
    }
    let n = f.pair.n();
    let mut joined: Option<SimplicialComplex> = None;
    for &s in &comps {
        let sub = MatroidPair::new(f.pair.m1.restrict(s), f.pair.m2.restrict(s))?;
        let k = bits::size(s);
        let facets: Vec<u64> = Activity::new(&sub, &f.weight.restrict(s))?
            .facets()?
            .into_iter()
            .map(|m| {
                let (x, y) = crate::activity::split_xy(k, m);
                xy_mask(n, crate::matroid::expand(x, s), crate::matroid::expand(y, s))
            })
            .collect();
        let ground = xy_mask(n, s, s);
        let cx = SimplicialComplex::with_ground(crate::activity::xy_labels(n), ground, &facets);
        joined = Some(match joined {
            None => cx,
            Some(j) => j.join(&cx),
        });
    }
    let joined = joined.expect("at least two components");
    fail_if(sorted_facets(&joined) != sorted_facets(&act.complex()?), || format!("components {:?}", comps.iter().map(|&c| bits::fmt(c)).collect::<Vec<_>>()))
}

// simplicial

fn euler_poincare(f: &Fixture, _: u64) -> Outcome {
    let cx = Activity::new(&f.pair, &f.weight)?.complex()?;
    let fv = cx.f_vector();
    // f_vector starts at the empty face
    let lhs: i64 = fv.iter().enumerate().map(|(i, &c)| if i % 2 == 1 { c as i64 } else { -(c as i64) }).sum();
    let h = reduced_homology_dims(&cx);
    let rhs: i64 = h.iter().enumerate().map(|(i, &c)| if i % 2 == 1 { c as i64 } else { -(c as i64) }).sum();
    fail_if(lhs != rhs, || format!("f-vector {fv:?}, homology {h:?}"))
}

fn fine_k(cx: &SimplicialComplex, n: usize) -> Result<MultigradedPolynomial> {
    k_polynomial_fine(cx, &xy_grading(n, Grading::Fine).0)
}

fn betti_gives_k(f: &Fixture, _: u64) -> Outcome {
    let n = f.pair.n();
    let cx = Activity::new(&f.pair, &f.weight)?.complex()?;
    let vars = xy_grading(n, Grading::Fine).0;
    let from_betti = k_from_betti(&hochster_betti(&cx, 2 * n), &vars, &(0..2 * n).collect::<Vec<_>>());
    let direct = fine_k(&cx, n)?;
    fail_if(from_betti != direct, || format!("Betti side {from_betti} vs face side {direct}"))
}

fn cohen_macaulay(f: &Fixture, _: u64) -> Outcome {
    let cx = Activity::new(&f.pair, &f.weight)?.complex()?;
    let r = is_cohen_macaulay(&cx);
    if !r.is_cm {
        return Ok(Some(format!("witness {:?}", r.witness.map(|(s, i)| (cx.fmt_face(s), i)))));
    }
    // independence complexes as a control
    for m in [&f.pair.m1, &f.pair.m2] {
        let ind = SimplicialComplex::numbered(m.n(), &m.bases().iter().map(|&b| b as u64).collect::<Vec<_>>());
        if !is_cohen_macaulay(&ind).is_cm {
            return Ok(Some(format!("independence complex of {m:?}")));
        }
    }
    Ok(None)
}

fn reisner_positivity(f: &Fixture, _: u64) -> Outcome {
    let n = f.pair.n();
    let cx = Activity::new(&f.pair, &f.weight)?.complex()?;
    let vars = xy_grading(n, Grading::Fine).0;
    let a = k_polynomial_fine_substituted(&cx, &vars)?;
    let b = reisner_expansion(&cx, &vars);
    fail_if(a != b, || format!("K(1-T) = {a} vs link sum {b}"))
}

// kclasses

fn coarse_k(cx: &SimplicialComplex, n: usize, g: Grading) -> Result<MultigradedPolynomial> {
    let (vars, images) = xy_grading(n, g);
    Ok(fine_k(cx, n)?.coarsen(&vars, &images))
}

fn k_bridge_z2(f: &Fixture, _: u64) -> Outcome {
    let cx = Activity::new(&f.pair, &f.weight)?.complex()?;
    let a = coarse_k(&cx, f.pair.n(), Grading::Z2)?;
    let b = k_poly_localization(&f.pair)?;
    fail_if(a != b, || format!("complex {a} vs localization {b}"))
}

fn k_bridge_z2xzn(f: &Fixture, _: u64) -> Outcome {
    let n = f.pair.n();
    let cx = Activity::new(&f.pair, &f.weight)?.complex()?;
    for c in [SubstitutionVector::consecutive(n), SubstitutionVector::primes(n)] {
        if !k_poly_specialized_check_complex(&f.pair, &cx, &c)? {
            return Ok(Some(format!("substitution {:?}", c.c())));
        }
    }
    Ok(None)
}

fn degree_n_sign(f: &Fixture, _: u64) -> Outcome {
    let act = Activity::new(&f.pair, &f.weight)?;
    let n = f.pair.n();
    let k = coarse_k(&act.complex()?, n, Grading::Z2)?;
    let corank = n - act.trunc.rank();
    let want_negative = corank % 2 == 1;
    let bad = k.terms().find(|(e, c)| MultigradedPolynomial::total_degree(e) == n as i64 && c.is_negative() != want_negative);
    fail_if(bad.is_some(), || format!("term {:?} in {k}", bad.unwrap()))
}

fn swap_symmetry(f: &Fixture, _: u64) -> Outcome {
    if f.pair.m1 != f.pair.m2 {
        return Ok(None);
    }
    let k = coarse_k(&Activity::new(&f.pair, &f.weight)?.complex()?, f.pair.n(), Grading::Z2)?;
    fail_if(k.swap_vars(0, 1) != k, || format!("{k}"))
}

/// `(1-U)^{n-r} U^r T_M(1/U, 1)`.
pub fn tutte_side(m: &Matroid) -> MultigradedPolynomial {
    let vars = MultigradedPolynomial::names(&["U"]);
    let (n, r) = (m.n() as i64, m.rank() as i64);
    let mut s = MultigradedPolynomial::zero(&vars);
    for (e, c) in m.tutte().terms() {
        s.add_term(vec![r - e[0]], c.clone());
    }
    let one_minus = MultigradedPolynomial::one(&vars).sub(&MultigradedPolynomial::var(&vars, 0));
    one_minus.pow((n - r) as u32).mul(&s)
}

/// `Z`-graded K-polynomial of `Δ_w(M, U_{1,n})`.
pub fn tutte_complex_side(m: &Matroid, w: &Weight) -> Result<MultigradedPolynomial> {
    let n = m.n();
    let pair = MatroidPair::new(m.clone(), uniform(1, n)?)?;
    coarse_k(&Activity::new(&pair, w)?.complex()?, n, Grading::Z)
}

fn tutte_identity_check(f: &Fixture, _: u64) -> Outcome {
    let m = &f.pair.m1;
    let a = tutte_complex_side(m, &f.weight)?;
    let b = tutte_side(m);
    fail_if(a != b, || format!("complex {a} vs Tutte {b}"))
}

fn g_linear_positive(f: &Fixture, _: u64) -> Outcome {
    let m = &f.pair.m1;
    if m.loops() != 0 || !m.is_connected() {
        return Ok(None);
    }
    let g = g_invariant(m)?;
    let c = g.coefficient(&[1]);
    fail_if(c <= BigInt::zero(), || format!("g = {g}"))
}

fn omega_routes(f: &Fixture, _: u64) -> Outcome {
    let r = omega(&f.pair.m1)?;
    fail_if(r.value.is_negative(), || format!("omega = {}", r.value))
}

// tropical

fn tropical_degree(f: &Fixture, _: u64) -> Outcome {
    let a = degree_polynomial(&f.pair, &f.weight)?;
    let b = degree_polynomial_from_activity(&f.pair, &f.weight)?;
    fail_if(a != b, || format!("points {a} vs activity {b}"))
}

fn tropical_ea(f: &Fixture, _: u64) -> Outcome {
    let act = Activity::new(&f.pair, &f.weight)?;
    if !act.trunc.expected_rank {
        return Ok(None);
    }
    let a = tropical_ea_distribution(&f.pair, &f.weight)?;
    let b = act.ea_distribution()?;
    fail_if(a != b, || format!("points {a:?} vs activity {b:?}"))
}

fn facet_points_check(f: &Fixture, _: u64) -> Outcome {
    let act = Activity::new(&f.pair, &f.weight)?;
    if !act.trunc.expected_rank {
        return Ok(None);
    }
    let n = f.pair.n();
    let mut pts = Vec::new();
    for (b, p) in facet_points(&f.pair, &f.weight)? {
        let m = monomial_of_point(&f.pair, &f.weight, p.coords());
        if m != act.activity_sets(b)?.facet(n) || m.count_ones() as usize != n + act.trunc.rank() {
            return Ok(Some(format!("basis {}", bits::fmt(b))));
        }
        pts.push(p);
    }
    pts.sort();
    pts.dedup();
    fail_if(pts.len() != act.trunc.d.bases().len(), || "two bases share a point".into())
}

fn random_points(f: &Fixture, seed: u64) -> Outcome {
    let n = f.pair.n();
    let cx = Activity::new(&f.pair, &f.weight)?.complex()?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x9e37_79b9);
    for _ in 0..1000 {
        let p: Vec<_> = (0..n).map(|_| crate::exact_algebra::ratio(rng.gen_range(-1_000_000..=1_000_000), rng.gen_range(1..=997))).collect();
        graph_of_point(&f.pair, &f.weight, &p)?;
        let m = monomial_of_point(&f.pair, &f.weight, &p);
        if !cx.is_face(m) {
            return Ok(Some(format!("m(p) = {} is not a face", crate::activity::fmt_xy(n, m))));
        }
    }
    Ok(None)
}

fn cells_example(_: u64) -> Outcome {
    let pair = MatroidPair::new(uniform(2, 3)?, uniform(1, 3)?)?;
    let w = lex_weight(3);
    let p = degree_polynomial(&pair, &w)?;
    let want = {
        let vars = MultigradedPolynomial::names(&["u1", "u2"]);
        let mut q = MultigradedPolynomial::zero(&vars);
        q.add_term(vec![1, 1], 2.into());
        q.add_term(vec![0, 2], 1.into());
        q
    };
    fail_if(p != want, || format!("{p}"))
}

// realizable

fn uniform_pairs(_: u64) -> Outcome {
    let mut cases = Vec::new();
    for n in 2..=6 {
        for r1 in 1..=n {
            for r2 in 1..=n {
                cases.push((n, r1, r2));
            }
        }
    }
    let bad: Vec<String> = cases
        .par_iter()
        .map(|&(n, r1, r2)| -> Result<Option<String>> {
            let (a, b) = (realize_uniform(r1, n)?, realize_uniform(r2, n)?);
            Ok((!verify_initial_ideal(&a, &b, &lex_weight(n))?).then(|| format!("U{r1}{n}/U{r2}{n}")))
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .collect();
    fail_if(!bad.is_empty(), || bad.join(", "))
}

fn nonfano_self_pair(_: u64) -> Outcome {
    let r = realize_nonfano()?;
    fail_if(!verify_initial_ideal(&r, &r, &lex_weight(7))?, || "lex weight".into())
}

fn random_schubert_pairs(seed: u64) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5c4b);
    for k in 0..10 {
        let n = rng.gen_range(2..=6);
        let (d1, d2) = (random_schubert(n, &mut rng), random_schubert(n, &mut rng));
        let (a, b) = (realize_schubert(&d1, rng.gen())?, realize_schubert(&d2, rng.gen())?);
        if MatroidPair::new(a.matroid.clone(), b.matroid.clone()).is_err() {
            continue;
        }
        let w = random_weight(n, rng.gen());
        if !verify_initial_ideal(&a, &b, &w)? {
            return Ok(Some(format!("draw {k}: {:?} / {:?}", a.matroid, b.matroid)));
        }
    }
    Ok(None)
}

fn minors_vanish(seed: u64) -> Outcome {
    let cases = [(realize_uniform(2, 4)?, realize_uniform(2, 4)?), (realize_uniform(2, 3)?, realize_uniform(1, 3)?), (realize_nonfano()?, realize_nonfano()?)];
    for (a, b) in &cases {
        let pair = MatroidPair::new(a.matroid.clone(), b.matroid.clone())?;
        for c in pair.circuits_d() {
            if !minors_vanish_on_samples(a, b, c, 3, seed) {
                return Ok(Some(format!("C = {}", bits::fmt(c))));
            }
        }
    }
    Ok(None)
}

fn betti_bridge(f: &Fixture, _: u64) -> Outcome {
    let (fine, a, b) = betti_tables_zn(&f.pair, &f.weight)?;
    if a != b {
        let diff = a.iter().find(|(k, v)| b.get(k) != Some(v)).or_else(|| b.iter().find(|(k, v)| a.get(k) != Some(v)));
        return Ok(Some(format!("first difference at {diff:?}")));
    }
    let t = DilworthTruncation::new(&f.pair);
    let n = f.pair.n();
    fail_if(!top_degree_support_ok(&fine, n, n - t.rank()), || "degree-n Betti support outside corank(D)".into())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn battery_shape() {
        let b = battery(1, 20);
        assert_eq!(b.len(), 31);
        assert!(b.iter().all(|f| f.pair.m1.rank() > 0 && f.pair.m2.rank() > 0));
        assert_eq!(battery(1, 20)[12].pair.m1, b[12].pair.m1);
    }

    #[test]
    fn suite_names_round_trip() {
        for s in ["dilworth", "activity", "simplicial", "kclasses", "tropical", "realizable", "all"] {
            assert_eq!(Suite::from_str(s).unwrap().name(), s);
        }
        assert!(Suite::from_str("nope").is_err());
    }
}
