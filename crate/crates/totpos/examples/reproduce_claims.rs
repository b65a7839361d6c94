//! Drive the claims-reproduction suite from library code and summarize the
//! outcome per criterion. The `totpos reproduce` subcommand prints the same
//! entries with formatting options.
//!
//! ```bash
//! cargo run -p totpos --example reproduce_claims
//! ```

use std::collections::BTreeMap;
use totpos::reproduce::{run_all, SuiteConfig};

fn main() {
    let cfg = SuiteConfig::default();
    println!(
        "running the suite at {} bits, seed {} ...\n",
        cfg.precision, cfg.seed
    );
    let results = run_all(&cfg);

    let mut by_criterion: BTreeMap<u8, Vec<&str>> = BTreeMap::new();
    let mut failed = 0usize;
    for r in &results {
        let status = if r.passed { "PASS" } else { "FAIL" };
        println!("[{status}] {:<32} {:>9.1?}  {}", r.name, r.elapsed, r.detail);
        if !r.passed {
            failed += 1;
        }
        by_criterion.entry(r.criterion).or_default().push(r.name);
    }

    println!("\nentries per criterion:");
    for (criterion, names) in &by_criterion {
        if *criterion == 0 {
            println!("  sanity: {}", names.join(", "));
        } else {
            println!("  {criterion:>2}: {}", names.join(", "));
        }
    }
    println!(
        "\noverall: {} ({} of {} passed)",
        if failed == 0 { "pass" } else { "fail" },
        results.len() - failed,
        results.len()
    );
    std::process::exit(if failed == 0 { 0 } else { 1 });
}
