//! External activity complex of U(2,3)/U(1,3) and its ea-statistics.

use eacx::activity::{fmt_xy, lex_weight, random_weight, Activity};
use eacx::bits;
use eacx::dilworth::MatroidPair;
use eacx::matroid::uniform;

fn main() -> eacx::Result<()> {
    let pair = MatroidPair::new(uniform(2, 3)?, uniform(1, 3)?)?;
    let w = lex_weight(3);
    let act = Activity::new(&pair, &w)?;
    for r in act.records()? {
        println!("B = {}: E1 = {}, E2 = {}, facet {}", bits::fmt(r.basis), bits::fmt(r.e1), bits::fmt(r.e2), fmt_xy(3, r.facet(3)));
    }
    println!("minimal nonfaces: {:?}", act.sr_generators().iter().map(|&g| fmt_xy(3, g)).collect::<Vec<_>>());
    println!("ea distribution (|E2|,|E1|) -> count: {:?}", act.ea_distribution()?);
    // any generic weight gives the same counts
    let other = Activity::new(&pair, &random_weight(3, 9))?;
    println!("with a random weight:                  {:?}", other.ea_distribution()?);
    Ok(())
}
