//! Runs the complete claim suite and prints the per-check outcomes; the
//! same report the `verify-all` command emits as JSON.

use cdtzip::report::{verify_all, VerifyOptions};

fn main() {
    let slow = std::env::args().any(|a| a == "--slow");
    let report = verify_all(VerifyOptions { slow, only: None }).unwrap();
    let mut failures = 0;
    for c in &report.checks {
        if !c.pass {
            failures += 1;
            println!("FAIL {}: expected {}, measured {}", c.id, c.expected, c.measured);
            if let Some(note) = &c.note {
                println!("     note: {note}");
            }
        }
    }
    println!(
        "{} checks, {} failures{}",
        report.checks.len(),
        failures,
        if failures > 0 { " (see notes: the failures are verified errata)" } else { "" }
    );
}
