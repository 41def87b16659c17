//! Elementary trees `T_V` and their levels for a few series `V`.
//!
//! ```bash
//! cargo run --example elementary_trees
//! ```

use anyhow::Result;
use fqgraph::graph::{elementary_tree, elementary_tree_level};
use fqgraph::number_theory::{iterated_gcd, GcdSeries};

fn main() -> Result<()> {
    let from_pair = iterated_gcd(15, 9);
    println!("gcd_15(9) = {:?}", from_pair.entries());
    for v in [
        from_pair,
        GcdSeries::new(vec![2, 2])?,
        GcdSeries::new(vec![4, 2, 1])?,
        GcdSeries::new(vec![1])?,
    ] {
        let t = elementary_tree(&v);
        println!(
            "V = {:?}: |T_V| = {}, depth {}, level populations {:?}",
            v.entries(),
            t.size(),
            t.depth(),
            t.level_counts()
        );
        for k in 0..=v.len() {
            let tk = elementary_tree_level(&v, k);
            println!("  T^{k}: {} vertices, {}", tk.size(), tk.code());
        }
    }
    Ok(())
}
