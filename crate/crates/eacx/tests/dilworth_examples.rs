mod common;

use common::*;
use eacx::dilworth::{d_matroid, DilworthTruncation, MatroidPair};
use eacx::matroid::{fano, nonfano, uniform, Matroid};
use eacx::Error;

fn pair(a: Matroid, b: Matroid) -> MatroidPair {
    MatroidPair::new(a, b).unwrap()
}

fn sorted(mut v: Vec<u32>) -> Vec<u32> {
    v.sort();
    v
}

#[test]
fn cells_pair_independence() {
    let p = pair(uniform(2, 3).unwrap(), uniform(1, 3).unwrap());
    assert!(p.independent_in_d(set(&[1, 2])));
    assert!(!p.independent_in_d(set(&[1, 2, 3])));
    assert!(p.independent_in_d(0));
    assert_eq!(d_matroid(&p).d, uniform(2, 3).unwrap());
}

#[test]
fn fano_truncation_is_uniform() {
    let (fb, nb) = (fano_bases(), nonfano_bases());
    for (p, b) in [(pair(fano(), fano()), &fb), (pair(nonfano(), nonfano()), &nb)] {
        let t = d_matroid(&p);
        assert!(t.expected_rank);
        assert_eq!(t.rank(), 5);
        assert_eq!(t.d, uniform(5, 7).unwrap());
        assert_eq!(t.rank_d(full(7)), 5);
        assert_eq!(dilworth_rank(b, b, full(7)), 5);
    }
}

#[test]
fn fano_circuits_are_the_six_sets() {
    let p = pair(fano(), fano());
    let expected: Vec<u32> = ["123456", "123457", "123467", "123567", "124567", "134567", "234567"].iter().map(|s| parse_set(s)).collect();
    assert_eq!(sorted(p.circuits_d()), sorted(expected.clone()));
    let fb = fano_bases();
    assert_eq!(dilworth_circuits(&fb, &fb, 7), sorted(expected));
}

#[test]
fn circuits_of_small_pairs() {
    let p = pair(uniform(2, 3).unwrap(), uniform(1, 3).unwrap());
    assert_eq!(p.circuits_d(), vec![full(3)]);
    assert!(pair(uniform(2, 3).unwrap(), uniform(2, 3).unwrap()).circuits_d().is_empty());
}

#[test]
fn against_rank_one_uniform() {
    for m in [fano(), nonfano(), uniform(2, 4).unwrap(), Matroid::from_basis_lists(3, &[vec![1, 2], vec![1, 3]]).unwrap()] {
        let n = m.n();
        let t = d_matroid(&pair(m.clone(), uniform(1, n).unwrap()));
        assert_eq!(t.d, m);
        for s in 0..=full(n) {
            assert_eq!(t.rank_d(s), m.rank_of(s));
        }
    }
}

#[test]
fn one_loop_each_gives_rank_one() {
    let a = Matroid::from_basis_lists(3, &[vec![2, 3]]).unwrap();
    let b = Matroid::from_basis_lists(3, &[vec![1, 3]]).unwrap();
    let t = d_matroid(&pair(a.clone(), b.clone()));
    assert_eq!(t.rank(), 1);
    assert!(!t.expected_rank);
    assert_eq!(t.d.bases(), &[set(&[3])]);
    assert_eq!(sorted(t.d.bases().to_vec()), dilworth_bases(a.bases(), b.bases(), 3));
}

#[test]
fn greedy_rank_matches_definition() {
    let cases = [
        pair(uniform(2, 3).unwrap(), uniform(1, 3).unwrap()),
        pair(uniform(2, 4).unwrap(), uniform(2, 4).unwrap()),
        pair(uniform(1, 2).unwrap().direct_sum(&uniform(1, 2).unwrap()), uniform(2, 4).unwrap()),
        pair(fano(), nonfano()),
    ];
    for p in &cases {
        let t = DilworthTruncation::new(p);
        let (b1, b2) = (p.m1.bases().to_vec(), p.m2.bases().to_vec());
        for s in 0..=full(p.n()) {
            let want = dilworth_rank(&b1, &b2, s);
            assert_eq!(t.rank_d(s), want, "S = {s:b}");
            assert_eq!(p.rank_d_bruteforce(s).unwrap(), want);
        }
    }
    let p = pair(uniform(2, 3).unwrap(), uniform(1, 3).unwrap());
    assert_eq!(DilworthTruncation::new(&p).rank_d(0), 0);
}

#[test]
fn decompositions_of_circuits() {
    let p = pair(uniform(2, 3).unwrap(), uniform(1, 3).unwrap());
    let mut d = p.decompositions(full(3)).unwrap();
    d.sort();
    let mut want = vec![(set(&[2, 3]), set(&[1])), (set(&[1, 3]), set(&[2])), (set(&[1, 2]), set(&[3]))];
    want.sort();
    assert_eq!(d, want);
    let fb = fano_bases();
    let f = pair(fano(), fano());
    let c = parse_set("123456");
    let d = f.decompositions(c).unwrap();
    assert!(d.contains(&(parse_set("123"), parse_set("456"))));
    let mut oracle = splits(&fb, &fb, c);
    oracle.sort();
    let mut d = d;
    d.sort();
    assert_eq!(d, oracle);
    let d = f.decompositions(parse_set("123567")).unwrap();
    assert!(!d.contains(&(parse_set("123"), parse_set("567"))));
    assert!(matches!(f.decompositions(parse_set("123")), Err(Error::NotACircuit(_))));
}

#[test]
fn common_loop_is_rejected() {
    let l = Matroid::from_basis_lists(3, &[vec![1, 2], vec![1, 3]]).unwrap();
    let m = Matroid::from_basis_lists(3, &[vec![1]]).unwrap();
    // element 2 is not a loop of l, so this pair is fine
    assert!(MatroidPair::new(l.clone(), m.clone()).is_ok());
    let lone = Matroid::from_basis_lists(3, &[vec![1, 3]]).unwrap();
    assert!(matches!(MatroidPair::new(lone, m), Err(Error::CommonLoop(2))));
}

#[test]
fn disconnected_loopless_is_below_expected_rank() {
    let u = uniform(1, 2).unwrap();
    let m = u.direct_sum(&u);
    assert!(!d_matroid(&pair(m.clone(), m)).expected_rank);
}
