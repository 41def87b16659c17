//! A map that is not m-nice: the prediction is refused with witnesses and
//! the brute-force graph is used instead.
//!
//! ```bash
//! cargo run --example non_nice
//! ```

use anyhow::Result;
use fqgraph::oracle::{fixed_points, tabulate};
use fqgraph::structure::predict_full;
use fqgraph::{FieldCtx, Polynomial, PredictError};

fn main() -> Result<()> {
    let ctx = FieldCtx::prime(97)?;
    let g = Polynomial::parse(&ctx, "x^6*(x^24-1)")?;
    match predict_full(&ctx, &g) {
        Err(PredictError::NotNice { m, witnesses }) => {
            println!("not {m}-nice; psi collides on {witnesses:?}");
        }
        Ok(_) => println!("unexpectedly nice"),
        Err(e) => return Err(e.into()),
    }
    let table = tabulate(&ctx, &g);
    let graph = fqgraph::oracle::build_functional_graph(&table);
    println!(
        "brute force: {} vertices, fixed points {:?}",
        graph.vertex_count(),
        fixed_points(&table)
    );
    print!("{}", graph.describe());
    Ok(())
}
