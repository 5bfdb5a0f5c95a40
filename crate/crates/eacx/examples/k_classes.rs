//! K-polynomials by equivariant localization, the g-invariant and omega.

use eacx::activity::lex_weight;
use eacx::dilworth::MatroidPair;
use eacx::kclasses::{g_invariant, k_poly_localization, k_poly_specialized_check, omega, SubstitutionVector};
use eacx::matroid::{fano, nonfano, uniform};

fn main() -> eacx::Result<()> {
    let p = MatroidPair::new(uniform(2, 4)?, uniform(2, 4)?)?;
    println!("K(U24, U24) = {}", k_poly_localization(&p)?);
    for c in [SubstitutionVector::consecutive(4), SubstitutionVector::primes(4)] {
        println!("fine identity at c = {:?}: {}", c.c(), k_poly_specialized_check(&p, &lex_weight(4), &c)?);
    }
    for (name, m) in [("U24", uniform(2, 4)?), ("U36", uniform(3, 6)?), ("F", fano()), ("F-", nonfano())] {
        let r = omega(&m)?;
        println!("{name}: g = {}, omega = {} via {}", g_invariant(&m)?, r.value, r.route);
    }
    Ok(())
}
