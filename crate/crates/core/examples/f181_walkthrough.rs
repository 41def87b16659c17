//! Walks the F_181 example from decomposition to a verified prediction.
//!
//! ```bash
//! cargo run --example f181_walkthrough
//! ```

use anyhow::Result;
use fqgraph::graph::graphs_isomorphic;
use fqgraph::oracle::oracle_graph;
use fqgraph::poly::index_decompose;
use fqgraph::structure::{analyze_form, psi_map, zero_tree_multiplicities, ZeroTailConvention};
use fqgraph::{FieldCtx, Polynomial};

fn main() -> Result<()> {
    let ctx = FieldCtx::prime(181)?;
    let g = Polynomial::parse(&ctx, "x^15*(98*x^144+68*x^108+68*x^72-6*x^36-31)")?;
    let form = index_decompose(&ctx, &g)?;
    println!("g = {}", g.display(&ctx));
    println!(
        "n = {}, m = {}, s = {}, h = {}, nu = {}, omega' = {}",
        form.n,
        form.m,
        form.s(&ctx),
        form.h.display(&ctx),
        form.nu,
        form.omega_prime
    );

    let dynamics = psi_map(&ctx, &form);
    for (x, y) in dynamics.mu_m.iter().zip(&dynamics.psi_images) {
        println!("  psi({x}) = {y}");
    }
    println!("m-nice: {}", dynamics.nice);

    for convention in ZeroTailConvention::ALL {
        let m = zero_tree_multiplicities(&ctx, &form, &dynamics, convention);
        println!("zero-tree multiplicities under {convention:?}: {m:?}");
    }

    let analysis = analyze_form(&ctx, &form)?;
    for t in &analysis.tau_tables {
        println!(
            "cycle through {} (length {}): ell = {}, rep_exp = {}, tau = {:?}",
            t.representative, t.cycle_len, t.ell, t.rep_exp, t.tau
        );
    }
    println!(
        "component of 0: {} vertices",
        analysis.zero_component.vertex_count()
    );
    println!(
        "other components ({} vertices):\n{}",
        analysis.nonzero.vertex_count(),
        analysis.nonzero.describe()
    );

    let oracle = oracle_graph(&ctx, &g);
    println!(
        "prediction isomorphic to brute force: {}",
        graphs_isomorphic(&analysis.graph(), &oracle)
    );
    Ok(())
}
