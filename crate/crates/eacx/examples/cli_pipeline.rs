//! The JSON documents the `eacx` binary prints, built in-process.

use eacx::activity::lex_weight;
use eacx::cli;
use eacx::dilworth::MatroidPair;
use eacx::matroid::uniform;
use eacx::simplicial::Grading;

fn main() -> eacx::Result<()> {
    let p = MatroidPair::new(uniform(2, 3)?, uniform(1, 3)?)?;
    let w = lex_weight(3);
    for v in [cli::dd(&p)?, cli::complex(&p, &w)?, cli::kpoly(&p, &w, Grading::Z2, None)?, cli::chern_degree(&p, &w)?] {
        println!("{}", serde_json::to_string(&v).expect("serializable"));
    }
    Ok(())
}
