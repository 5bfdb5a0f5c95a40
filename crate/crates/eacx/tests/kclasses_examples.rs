use eacx::activity::{complex, lex_weight};
use eacx::dilworth::MatroidPair;
use eacx::exact_algebra::{ratio, rat, MultigradedPolynomial};
use eacx::kclasses::{chi_pair, fvector_bound, g_invariant, k_poly_localization, k_poly_specialized_check, k_poly_specialized_check_complex, omega, SubstitutionVector};
use eacx::matroid::{fano, nonfano, uniform, Matroid};
use eacx::simplicial::{k_polynomial_fine, xy_grading, Grading};
use num_bigint::BigInt;

fn pair(a: Matroid, b: Matroid) -> MatroidPair {
    MatroidPair::new(a, b).unwrap()
}

fn z2() -> Vec<String> {
    MultigradedPolynomial::names(&["U1", "U2"])
}

/// Complex-side K-polynomial coarsened to Z².
fn complex_k(p: &MatroidPair) -> MultigradedPolynomial {
    let n = p.n();
    let cx = complex(p, &lex_weight(n)).unwrap();
    let (fv, _) = xy_grading(n, Grading::Fine);
    let (tv, img) = xy_grading(n, Grading::Z2);
    k_polynomial_fine(&cx, &fv).unwrap().coarsen(&tv, &img)
}

#[test]
fn chi_values() {
    let c = SubstitutionVector::consecutive(2);
    let par = pair(uniform(1, 2).unwrap(), uniform(1, 2).unwrap());
    assert_eq!(chi_pair(&par, 0, 0, &c).unwrap(), BigInt::from(1));
    assert_eq!(chi_pair(&par, 1, 1, &c).unwrap(), BigInt::from(-1));
    let p = pair(uniform(2, 4).unwrap(), uniform(1, 4).unwrap());
    let c = SubstitutionVector::primes(4);
    assert_eq!(chi_pair(&p, 0, 0, &c).unwrap(), BigInt::from(1));
    // i above the corank of M1 vanishes
    for j in 0..=4 {
        assert_eq!(chi_pair(&p, 3, j, &c).unwrap(), BigInt::from(0));
    }
}

#[test]
fn localization_examples() {
    let par = pair(uniform(1, 2).unwrap(), uniform(1, 2).unwrap());
    let mut want = MultigradedPolynomial::one(&z2());
    want.add_term(vec![1, 1], BigInt::from(-1));
    assert_eq!(k_poly_localization(&par).unwrap(), want);
    // rank sum n and D of expected rank n - 1: 1 - U1^{r2} U2^{r1}
    for (a, b) in [(uniform(2, 3).unwrap(), uniform(1, 3).unwrap()), (uniform(2, 4).unwrap(), uniform(2, 4).unwrap())] {
        let (r1, r2) = (a.rank() as i64, b.rank() as i64);
        let p = pair(a, b);
        let mut want = MultigradedPolynomial::one(&z2());
        want.add_term(vec![r2, r1], BigInt::from(-1));
        assert_eq!(k_poly_localization(&p).unwrap(), want);
        assert_eq!(complex_k(&p), want);
    }
    let f = pair(fano(), fano());
    assert_eq!(k_poly_localization(&f).unwrap(), complex_k(&f));
}

#[test]
fn specialized_checks() {
    let p = pair(uniform(2, 3).unwrap(), uniform(1, 3).unwrap());
    assert!(k_poly_specialized_check(&p, &lex_weight(3), &SubstitutionVector::new(vec![2, 5, 11]).unwrap()).unwrap());
    let f = pair(fano(), fano());
    for c in [SubstitutionVector::consecutive(7), SubstitutionVector::primes(7)] {
        assert!(k_poly_specialized_check(&f, &lex_weight(7), &c).unwrap());
    }
    // drop one facet: the face sum changes, so the identity must fail
    let cx = complex(&f, &lex_weight(7)).unwrap();
    let mut facets = cx.facets().to_vec();
    facets.pop();
    let bad = eacx::simplicial::SimplicialComplex::with_ground(cx.labels().to_vec(), cx.ground(), &facets);
    assert!(!k_poly_specialized_check_complex(&f, &bad, &SubstitutionVector::consecutive(7)).unwrap());
    assert!(SubstitutionVector::new(vec![1, 1, 2]).is_err());
}

#[test]
fn g_invariant_examples() {
    let looped = Matroid::from_basis_lists(3, &[vec![1, 2]]).unwrap();
    assert!(g_invariant(&looped).unwrap().is_zero());
    let t = MultigradedPolynomial::names(&["t"]);
    let g12 = g_invariant(&uniform(1, 2).unwrap()).unwrap();
    assert_eq!(g12.coefficient(&[1]), BigInt::from(1));
    let (a, b) = (uniform(1, 2).unwrap(), uniform(2, 3).unwrap());
    let prod = g_invariant(&a).unwrap().mul(&g_invariant(&b).unwrap());
    assert_eq!(g_invariant(&a.direct_sum(&b)).unwrap(), prod);
    assert_eq!(g12.vars(), &t[..]);
}

#[test]
fn omega_examples() {
    assert_eq!(omega(&uniform(2, 4).unwrap()).unwrap().value, BigInt::from(1));
    let looped = Matroid::from_basis_lists(3, &[vec![1, 2]]).unwrap();
    assert_eq!(omega(&looped).unwrap().value, BigInt::from(0));
    for m in [fano(), nonfano()] {
        let r = omega(&m).unwrap();
        assert_eq!(r.route, "cross-checked");
        assert_eq!(r.route_a, r.route_b);
        assert!(r.value >= BigInt::from(0));
    }
    // a single circuit is connected, and 2r - 1 > n leaves D(M,M) short
    for m in [uniform(3, 4).unwrap(), uniform(4, 5).unwrap()] {
        assert!(m.is_connected());
        assert!(!eacx::dilworth::d_matroid(&pair(m.clone(), m.clone())).expected_rank);
        assert_eq!(omega(&m).unwrap().value, BigInt::from(0));
    }
}

#[test]
fn f_vector_bounds() {
    assert_eq!(fvector_bound(4, 2, 1).unwrap(), rat(2));
    // i = 1 gives C(n-2, r-1)
    for (n, r, want) in [(6, 3, 6), (7, 2, 5), (8, 4, 20)] {
        assert_eq!(fvector_bound(n, r, 1).unwrap(), rat(want));
    }
    // i = r: (n-r-1)! / ((n-2r)! (r-1)!)
    assert_eq!(fvector_bound(7, 3, 3).unwrap(), ratio(6, 2));
}
