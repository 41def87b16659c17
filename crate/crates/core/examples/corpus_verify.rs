//! Generates the seeded corpus and checks every prediction against brute
//! force, reporting which zero-tail reading agrees with the oracle.
//!
//! ```bash
//! cargo run --release --example corpus_verify -- 42
//! ```

use std::time::Instant;

use anyhow::Result;
use fqgraph::corpus::{generate_corpus, verify_corpus, CorpusBounds};
use fqgraph::report::Method;
use fqgraph::structure::ZeroTailConvention;

fn main() -> Result<()> {
    let seed = std::env::args()
        .nth(1)
        .map(|s| s.parse())
        .transpose()?
        .unwrap_or(CorpusBounds::default().seed);
    let bounds = CorpusBounds {
        seed,
        ..Default::default()
    };
    let start = Instant::now();
    let corpus = generate_corpus(&bounds);
    let reports = verify_corpus(&corpus);
    let passed = reports.iter().filter(|r| r.passed()).count();
    let theorem = reports
        .iter()
        .filter(|r| r.method == Method::Theorem)
        .count();
    println!(
        "{} instances, {passed} isomorphic, {:.2?}",
        corpus.len(),
        start.elapsed()
    );
    for c in ZeroTailConvention::ALL {
        let agree = reports
            .iter()
            .flat_map(|r| &r.convention_checks)
            .filter(|k| k.convention == c && k.matches_oracle)
            .count();
        println!("{c:?} zero-tail reading agrees with brute force on {agree}/{theorem} theorem instances");
    }
    for r in reports.iter().filter(|r| !r.passed()) {
        println!("MISMATCH over F_{}: {}", r.field.p, r.polynomial);
    }
    Ok(())
}
