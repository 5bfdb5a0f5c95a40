//! Homology, Cohen-Macaulayness, K-polynomials and Betti numbers of the
//! external activity complex of the Fano self-pair.

use eacx::activity::{complex, lex_weight};
use eacx::dilworth::MatroidPair;
use eacx::matroid::fano;
use eacx::simplicial::{hochster_betti, is_cohen_macaulay, k_polynomial_fine, reduced_homology_dims, xy_grading, Grading};

fn main() -> eacx::Result<()> {
    let f = MatroidPair::new(fano(), fano())?;
    let cx = complex(&f, &lex_weight(7))?;
    println!("{} facets on {} vertices", cx.facets().len(), cx.m());
    println!("reduced homology dims from degree -1: {:?}", reduced_homology_dims(&cx));
    println!("Cohen-Macaulay: {}", is_cohen_macaulay(&cx).is_cm);
    let (fv, _) = xy_grading(7, Grading::Fine);
    let fine = k_polynomial_fine(&cx, &fv)?;
    for g in [Grading::Z2, Grading::Z] {
        let (vars, img) = xy_grading(7, g);
        println!("K-polynomial, {g:?} grading: {}", fine.coarsen(&vars, &img));
    }
    let table = hochster_betti(&cx, cx.m());
    let mut totals = vec![0u64; table.max_degree() + 1];
    for (&(i, _), &b) in &table.entries {
        totals[i] += b;
    }
    println!("total Betti numbers by homological degree: {totals:?}");
    Ok(())
}
