mod common;

use common::*;
use eacx::activity::{complex, lex_weight, weight_from_ints};
use eacx::dilworth::MatroidPair;
use eacx::exact_algebra::MultigradedPolynomial;
use eacx::matroid::{fano, uniform, Matroid};
use eacx::simplicial::{hochster_betti, is_cohen_macaulay, k_from_betti, k_polynomial_fine, multidegree, reduced_homology_dims, xy_grading, Grading, SimplicialComplex};
use num_bigint::BigInt;
use std::collections::BTreeMap;

fn hollow() -> SimplicialComplex {
    SimplicialComplex::numbered(3, &[0b011, 0b101, 0b110])
}

fn independence_complex(m: &Matroid) -> SimplicialComplex {
    let f: Vec<u64> = m.bases().iter().map(|&b| b as u64).collect();
    SimplicialComplex::numbered(m.n(), &f)
}

fn vars(m: usize) -> Vec<String> {
    (1..=m).map(|i| format!("T{i}")).collect()
}

/// Face-sum formula expanded term by term: `[T^S] = Σ_{σ ⊆ S face} (-1)^{|S∖σ|}`.
fn face_sum(facets: &[u64], m: usize) -> BTreeMap<u64, i64> {
    let is_face = |s: u64| facets.iter().any(|&f| f & s == s);
    let mut out = BTreeMap::new();
    for s in 0..1u64 << m {
        let mut c = 0;
        let mut t = s;
        loop {
            if is_face(t) {
                c += if (s & !t).count_ones() % 2 == 0 { 1 } else { -1 };
            }
            if t == 0 {
                break;
            }
            t = (t - 1) & s;
        }
        if c != 0 {
            out.insert(s, c);
        }
    }
    out
}

fn as_map(p: &MultigradedPolynomial) -> BTreeMap<u64, i64> {
    p.terms()
        .map(|(e, c)| (e.iter().enumerate().fold(0u64, |a, (i, &k)| a | (k as u64) << i), i64::try_from(c).unwrap()))
        .collect()
}

#[test]
fn links() {
    let h = hollow();
    assert_eq!(h.link(0).unwrap().facets(), h.facets());
    let tri = SimplicialComplex::numbered(3, &[0b111]);
    assert_eq!(tri.link(0b111).unwrap().facets(), &[0]);
    let mut l = h.link(0b001).unwrap().facets().to_vec();
    l.sort();
    assert_eq!(l, vec![0b010, 0b100]);
    assert!(h.link(0b111).is_err());
}

#[test]
fn alexander_duals() {
    let full = SimplicialComplex::numbered(3, &[0b111]);
    assert!(full.alexander_dual().is_void());
    assert_eq!(hollow().alexander_dual().facets(), &[0]);
    let path = SimplicialComplex::numbered(4, &[0b0011, 0b0110, 0b1100]);
    let mut a = path.alexander_dual().alexander_dual().facets().to_vec();
    a.sort();
    assert_eq!(a, vec![0b0011, 0b0110, 0b1100]);
}

#[test]
fn homology_examples() {
    assert_eq!(reduced_homology_dims(&hollow()), vec![0, 0, 1]);
    assert!(reduced_homology_dims(&SimplicialComplex::numbered(4, &[0b1111])).iter().all(|&d| d == 0));
    assert_eq!(reduced_homology_dims(&SimplicialComplex::numbered(2, &[0b01, 0b10]))[1], 1);
}

#[test]
fn euler_poincare_against_face_count() {
    let p = MatroidPair::new(fano(), fano()).unwrap();
    let cases = vec![hollow(), independence_complex(&fano()), independence_complex(&uniform(2, 5).unwrap()), complex(&p, &lex_weight(7)).unwrap()];
    for cx in cases {
        let h = reduced_homology_dims(&cx);
        let alt: i64 = h.iter().enumerate().map(|(k, &d)| if k % 2 == 1 { d as i64 } else { -(d as i64) }).sum();
        // index 0 is degree -1
        assert_eq!(alt, reduced_euler(cx.facets()));
    }
}

#[test]
fn cohen_macaulay_examples() {
    for m in [fano(), uniform(2, 4).unwrap(), uniform(1, 2).unwrap().direct_sum(&uniform(1, 2).unwrap())] {
        assert!(is_cohen_macaulay(&independence_complex(&m)).is_cm);
    }
    let r = is_cohen_macaulay(&SimplicialComplex::numbered(4, &[0b0011, 0b1100]));
    assert!(!r.is_cm);
    assert_eq!(r.witness, Some((0, 0)));
    let p = MatroidPair::new(fano(), fano()).unwrap();
    assert!(is_cohen_macaulay(&complex(&p, &lex_weight(7)).unwrap()).is_cm);
}

#[test]
fn k_polynomials_by_face_sum() {
    let empty = SimplicialComplex::numbered(3, &[]);
    let k = k_polynomial_fine(&empty, &vars(3)).unwrap();
    // Π (1 - T_j)
    assert_eq!(k.len(), 8);
    assert_eq!(k.coefficient(&[1, 1, 1]), BigInt::from(-1));
    let full = SimplicialComplex::numbered(3, &[0b111]);
    assert_eq!(k_polynomial_fine(&full, &vars(3)).unwrap(), MultigradedPolynomial::one(&vars(3)));
    for cx in [hollow(), independence_complex(&uniform(2, 4).unwrap()), SimplicialComplex::numbered(4, &[0b0011, 0b1100])] {
        assert_eq!(as_map(&k_polynomial_fine(&cx, &vars(cx.m())).unwrap()), face_sum(cx.facets(), cx.m()));
    }
    // principal ideal x_a y_b for the parallel pair
    let p = MatroidPair::new(uniform(1, 2).unwrap(), uniform(1, 2).unwrap()).unwrap();
    let cx = complex(&p, &weight_from_ints(&[0, 5], &[3, 0])).unwrap();
    let k = as_map(&k_polynomial_fine(&cx, &vars(4)).unwrap());
    let want: BTreeMap<u64, i64> = [(0, 1), (0b0110, -1)].into_iter().collect();
    assert_eq!(k, want);
}

#[test]
fn multidegrees() {
    let full = SimplicialComplex::numbered(3, &[0b111]);
    let z = vec!["U".to_string()];
    assert_eq!(multidegree(&full, &z, &vec![vec![1]; 3]).unwrap(), MultigradedPolynomial::one(&z));
    // Zn grading of a complex from a pair: Σ_B Π_{i∉B} T_i
    let p = MatroidPair::new(fano(), uniform(2, 7).unwrap()).unwrap();
    let cx = complex(&p, &lex_weight(7)).unwrap();
    let (tv, img) = xy_grading(7, Grading::Zn);
    let md = multidegree(&cx, &tv, &img).unwrap();
    let d = eacx::dilworth::d_matroid(&p).d;
    let mut want = MultigradedPolynomial::zero(&tv);
    for &b in d.bases() {
        want.add_term((0..7).map(|i| 1 - (b >> i & 1) as i64).collect(), BigInt::from(1));
    }
    assert_eq!(md, want);
    // (M, U_{1,n}) in the Z grading: #bases · U^{n-r}
    for m in [fano(), uniform(2, 4).unwrap()] {
        let n = m.n();
        let p = MatroidPair::new(m.clone(), uniform(1, n).unwrap()).unwrap();
        let cx = complex(&p, &lex_weight(n)).unwrap();
        let (zv, zi) = xy_grading(n, Grading::Z);
        let md = multidegree(&cx, &zv, &zi).unwrap();
        assert_eq!(md, MultigradedPolynomial::monomial(&zv, vec![(n - m.rank()) as i64], BigInt::from(m.bases().len())));
    }
}

#[test]
fn hochster_examples() {
    let cx = independence_complex(&uniform(1, 3).unwrap());
    let t = hochster_betti(&cx, 3);
    assert_eq!(t.get(2, 0b111), 2);
    assert_eq!(t.get(0, 0), 1);
    for m in [uniform(2, 4).unwrap(), fano(), uniform(1, 3).unwrap()] {
        let (n, r) = (m.n(), m.rank());
        let t = hochster_betti(&independence_complex(&m), n + 1);
        for i in 0..=n {
            if i != n - r {
                assert_eq!(t.get(i, (1 << n) - 1), 0);
            }
        }
    }
}

#[test]
fn betti_and_face_sum_agree() {
    let p = MatroidPair::new(fano(), fano()).unwrap();
    let cases = vec![
        SimplicialComplex::numbered(3, &[0b011]),
        independence_complex(&uniform(2, 3).unwrap()),
        complex(&p, &lex_weight(7)).unwrap(),
    ];
    for cx in cases {
        let m = cx.m();
        let verts: Vec<usize> = (0..m).collect();
        let k = k_from_betti(&hochster_betti(&cx, m + 1), &vars(m), &verts);
        assert_eq!(as_map(&k), face_sum(cx.facets(), m));
    }
}
