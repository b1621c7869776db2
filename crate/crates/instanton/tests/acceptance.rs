//! Acceptance suite, one PASS/FAIL line per criterion.

use std::io::Write;

use instanton::acceptance::{run_all, AcceptanceConfig};

#[test]
fn acceptance() {
    let report = run_all(&AcceptanceConfig::default());
    // bypass the harness capture so the lines show in a plain `cargo test`
    let mut out = std::io::stdout().lock();
    for c in &report {
        writeln!(out, "{}", c.summary()).unwrap();
        eprintln!("  {} took {:.2?}", c.id, c.elapsed);
    }
    out.flush().unwrap();
    let failed: Vec<&str> = report.iter().filter(|c| !c.pass).map(|c| c.id.as_str()).collect();
    assert!(failed.is_empty(), "failed criteria: {:?}", failed);
}
