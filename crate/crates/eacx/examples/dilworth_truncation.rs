//! Diagonal Dilworth truncation of the Fano and non-Fano self-pairs.

use eacx::bits;
use eacx::dilworth::{d_matroid, MatroidPair};
use eacx::matroid::{fano, nonfano};

fn main() -> eacx::Result<()> {
    for (name, m) in [("F", fano()), ("F-", nonfano())] {
        let pair = MatroidPair::new(m.clone(), m)?;
        let t = d_matroid(&pair);
        println!("D({name},{name}): rank {} (expected: {}), {} bases", t.rank(), t.expected_rank, t.d.bases().len());
        for c in pair.circuits_d() {
            let splits = pair.decompositions(c)?;
            let (a, b) = splits[0];
            println!("  circuit {}: {} independent splits, first {}|{}", bits::fmt(c), splits.len(), bits::fmt(a), bits::fmt(b));
        }
    }
    Ok(())
}
