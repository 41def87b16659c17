//! Graphviz renderings: the full brute-force graph of a small map and the
//! schematic drawing of a prediction.
//!
//! ```bash
//! cargo run --example dot_export -- /tmp/out
//! dot -Tsvg /tmp/out/f97.dot > f97.svg
//! ```

use std::path::PathBuf;

use anyhow::Result;
use fqgraph::dot::{oracle_dot, summary_dot};
use fqgraph::oracle::tabulate;
use fqgraph::structure::predict_full;
use fqgraph::{FieldCtx, Polynomial};

fn main() -> Result<()> {
    let dir = PathBuf::from(std::env::args().nth(1).unwrap_or_else(|| "dot_out".into()));
    std::fs::create_dir_all(&dir)?;

    let f97 = FieldCtx::prime(97)?;
    let g = Polynomial::parse(&f97, "x^6*(x^24-1)")?;
    std::fs::write(
        dir.join("f97.dot"),
        oracle_dot(&tabulate(&f97, &g), "g over F_97"),
    )?;

    let f181 = FieldCtx::prime(181)?;
    let g = Polynomial::parse(&f181, "x^15*(98*x^144+68*x^108+68*x^72-6*x^36-31)")?;
    let predicted = predict_full(&f181, &g)?;
    std::fs::write(
        dir.join("f181_predicted.dot"),
        summary_dot(&predicted.canonical(), "g over F_181"),
    )?;

    println!("wrote f97.dot and f181_predicted.dot to {}", dir.display());
    Ok(())
}
