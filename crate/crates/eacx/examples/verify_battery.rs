//! Runs every property suite over the default battery and prints a summary.

use eacx::verify::{run_suite, Suite};

fn main() {
    let seed = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(1);
    let report = run_suite(Suite::All, seed);
    for r in report.checks.iter().filter(|r| !r.passed) {
        println!("FAIL {} / {} on {}: {}", r.suite, r.check, r.fixture, r.witness.as_deref().unwrap_or(""));
    }
    println!("{} passed, {} failed", report.passed, report.failed);
}
