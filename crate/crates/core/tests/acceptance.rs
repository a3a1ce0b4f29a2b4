//! Runs the thirteen acceptance criteria and prints one line per criterion.
//! Pass a criterion number (or several) to run a subset.

use std::process::ExitCode;

use grothendieck::suite::{run_criterion, CRITERIA};

fn main() -> ExitCode {
    let picked: Vec<u8> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let mut failed = 0;
    for (id, title) in CRITERIA {
        if !picked.is_empty() && !picked.contains(&id) {
            continue;
        }
        match run_criterion(id) {
            Ok(r) => {
                println!("{}", r.line());
                if !r.report.passed() {
                    failed += 1;
                    println!("  {}", r.report.to_string().replace('\n', "\n  "));
                }
            }
            Err(e) => {
                failed += 1;
                println!("criterion {id:>2} {title:<32} FAIL (error: {e})");
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
