//! One line per acceptance criterion; exits nonzero if any fails.
//!
//! Tolerances: chart identities within 1e-12, beta limits within 1e-9
//! relative; everything else is exact.

use std::process::ExitCode;
use std::time::Instant;

use polyfaces::verify::{run_criterion, CRITERIA};

fn main() -> ExitCode {
    let mut failed = 0;
    for &(id, ..) in &CRITERIA {
        let start = Instant::now();
        let report = run_criterion(id).expect("listed criterion");
        println!("{report} ({:.2?})", start.elapsed());
        failed += usize::from(!report.passed);
    }
    println!("{} of {} criteria passed", CRITERIA.len() - failed, CRITERIA.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
