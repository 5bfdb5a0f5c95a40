//! Stable intersections of translated Chern-class fans for U(2,3)/U(1,3).

use eacx::activity::{fmt_xy, lex_weight};
use eacx::dilworth::MatroidPair;
use eacx::matroid::uniform;
use eacx::tropical::{degree_polynomial, zero_dim_intersections};

fn main() -> eacx::Result<()> {
    let p = MatroidPair::new(uniform(2, 3)?, uniform(1, 3)?)?;
    let w = lex_weight(3);
    for (i, j) in [(2, 0), (1, 1), (0, 2)] {
        for q in zero_dim_intersections(&p, &w, i, j)? {
            let coords: Vec<String> = q.point.coords().iter().map(|c| c.to_string()).collect();
            println!("(i,j) = ({i},{j}): point ({}) with monomial {}", coords.join(", "), fmt_xy(3, q.monomial));
        }
    }
    println!("degree polynomial: {}", degree_polynomial(&p, &w)?);
    Ok(())
}
