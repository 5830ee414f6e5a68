//! One PASS/FAIL line per acceptance criterion; exits non-zero if any fail.

use linepursuit::verify::{criteria, run_criterion};
use std::process::ExitCode;

fn main() -> ExitCode {
    let mut failed = Vec::new();
    for c in criteria() {
        let o = run_criterion(&c);
        println!("{o}");
        for f in o.failures.iter().skip(1) {
            println!("    {f}");
        }
        if !o.passed() {
            failed.push(o.id);
        }
    }
    if failed.is_empty() {
        println!("acceptance: all {} criteria pass", criteria().len());
        ExitCode::SUCCESS
    } else {
        println!("acceptance: failing criteria {failed:?}");
        ExitCode::FAILURE
    }
}
