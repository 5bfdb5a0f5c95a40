//! Determinantal circuit generators of the non-Fano self-pair and their
//! initial terms under the lex weight.

use eacx::activity::lex_weight;
use eacx::bits;
use eacx::realizable::{initial_ideal_report, realize_nonfano};

fn main() -> eacx::Result<()> {
    let r = realize_nonfano()?;
    println!("realization:");
    for i in 0..r.matrix.rows() {
        let row: Vec<String> = r.matrix.row(i).iter().map(|q| format!("{q:>3}")).collect();
        println!("  [{}]", row.join(" "));
    }
    for c in initial_ideal_report(&r, &r, &lex_weight(7))? {
        let (a, b) = c.leading;
        println!("C = {}: leading split {}|{}, support check {}", bits::fmt(c.circuit), bits::fmt(a), bits::fmt(b), c.ok());
    }
    Ok(())
}
