//! Searches a prime field for m-nice maps.
//!
//! ```bash
//! cargo run --release --example search_nice -- 13
//! ```

use anyhow::Result;
use fqgraph::corpus::{search_nice, SearchParams};

fn main() -> Result<()> {
    let q = std::env::args()
        .nth(1)
        .map(|s| s.parse())
        .transpose()?
        .unwrap_or(13);
    let mut params = SearchParams::new(q);
    params.n_max = 6;
    params.deg_max = 2;
    let hits = search_nice(&params);
    let mut by_m = std::collections::BTreeMap::new();
    for h in &hits {
        *by_m.entry(h.m).or_insert(0usize) += 1;
    }
    println!(
        "{} m-nice maps over F_{q} with n <= 6, deg h <= 2; per m: {by_m:?}",
        hits.len()
    );
    for inst in hits.iter().filter(|i| i.m > 1).take(5) {
        let ctx = inst.field();
        println!("  m = {}: {}", inst.m, inst.polynomial(&ctx).display(&ctx));
    }
    Ok(())
}
