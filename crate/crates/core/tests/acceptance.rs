//! Runs every registered claim and prints one pass/fail line per criterion.

use std::process::ExitCode;

use strata_core::claims::{run_claims, ClaimContext};
use strata_core::lattice::OrbitCache;

fn main() -> ExitCode {
    let dir = tempfile::tempdir().expect("temporary cache directory");
    let ctx = ClaimContext {
        cache: Some(OrbitCache::new(dir.path())),
    };
    let report = match run_claims(None, &ctx) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("acceptance: {e}");
            return ExitCode::FAILURE;
        }
    };
    println!("\nacceptance criteria");
    for c in &report.claims {
        let status = if c.passed { "PASS" } else { "FAIL" };
        println!("{:<4} {status}  {}: {}", c.id, c.description, c.observed);
    }
    println!("{}/{} criteria passed\n", report.passed, report.claims.len());
    if report.claims.len() == 20 && report.all_passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
