//! Cycle structure of `a x^n` over F_q straight from the closed form.
//!
//! ```bash
//! cargo run --example monomial -- 61 12
//! ```

use anyhow::{Context, Result};
use fqgraph::graph::graphs_isomorphic;
use fqgraph::oracle::oracle_graph;
use fqgraph::structure::monomial_graph;
use fqgraph::{FieldCtx, Polynomial};

fn main() -> Result<()> {
    let mut args = std::env::args().skip(1);
    let q: u64 = args
        .next()
        .unwrap_or_else(|| "61".into())
        .parse()
        .context("q")?;
    let n: u64 = args
        .next()
        .unwrap_or_else(|| "12".into())
        .parse()
        .context("n")?;
    let ctx = FieldCtx::prime(q)?;
    for a in [ctx.one(), ctx.alpha(), ctx.from_int(-1)] {
        let g = monomial_graph(&ctx, a, n)?;
        let f = Polynomial::monomial(a, n as usize);
        let ok = graphs_isomorphic(&g, &oracle_graph(&ctx, &f));
        println!(
            "{a} x^{n}: cycle lengths {:?}, matches brute force: {ok}",
            g.cycle_length_histogram()
        );
    }
    Ok(())
}
