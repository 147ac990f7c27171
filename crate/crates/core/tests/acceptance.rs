//! One line per acceptance criterion; nonzero exit if any fails.

use std::process::ExitCode;

use invdecomp::harness::acceptance::run_acceptance;

fn main() -> ExitCode {
    let seed = std::env::var("INVDECOMP_SEED")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(42);
    let results = run_acceptance(seed);
    for r in &results {
        println!("{}", r.line());
    }
    let failed = results.iter().filter(|r| !r.passed).count();
    println!("acceptance (seed {seed}): {} passed, {failed} failed", results.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
