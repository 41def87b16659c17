//! Preimage regularity and the closed form for iterates, checked on one map.
//!
//! ```bash
//! cargo run --example regularity
//! ```

use anyhow::Result;
use fqgraph::oracle::{check_v_regular, tabulate};
use fqgraph::poly::{closed_form_iterate, index_decompose, iterate_map};
use fqgraph::structure::tree_series;
use fqgraph::{FieldCtx, Polynomial};

fn main() -> Result<()> {
    let ctx = FieldCtx::prime(181)?;
    let g = Polynomial::parse(&ctx, "x^15*(98*x^144+68*x^108+68*x^72-6*x^36-31)")?;
    let form = index_decompose(&ctx, &g)?;
    let v = tree_series(&form);
    let table = tabulate(&ctx, &g);
    let regular = ctx
        .nonzero_elements()
        .filter(|a| check_v_regular(&table, a.index(), &v))
        .count();
    println!(
        "V = {:?}: {regular}/{} nonzero elements are V-regular",
        v.entries(),
        ctx.group_order()
    );

    let agree = ctx.elements().all(|a| {
        (0..=6).all(|k| closed_form_iterate(&ctx, &form, a, k) == iterate_map(&ctx, &g, a, k))
    });
    println!("closed form equals iteration for k <= 6: {agree}");
    Ok(())
}
