//! Predictions over non-prime fields F_{p^k}: every nice map of the form
//! `x^n (x^s + c)` with small `n` is checked against brute force.
//!
//! ```bash
//! cargo run --release --example extension_field
//! ```

use anyhow::Result;
use fqgraph::graph::graphs_isomorphic;
use fqgraph::number_theory::divisors;
use fqgraph::oracle::oracle_graph;
use fqgraph::poly::IndexedForm;
use fqgraph::structure::analyze_form;
use fqgraph::{FieldCtx, Polynomial};

fn main() -> Result<()> {
    for (p, k) in [(2, 4), (3, 2), (3, 3), (5, 2), (7, 2), (2, 6)] {
        let ctx = FieldCtx::extension(p, k, None)?;
        let (mut nice, mut agree) = (0, 0);
        for m in divisors(ctx.group_order()).into_iter().filter(|&m| m > 1) {
            for n in 1..=4 {
                for c in ctx.nonzero_elements() {
                    let h = Polynomial::new(vec![c, ctx.one()]);
                    let form = IndexedForm::new(&ctx, n, h, m)?;
                    let Ok(a) = analyze_form(&ctx, &form) else {
                        continue;
                    };
                    nice += 1;
                    if graphs_isomorphic(&a.graph(), &oracle_graph(&ctx, &form.to_polynomial(&ctx)))
                    {
                        agree += 1;
                    }
                }
            }
        }
        println!(
            "F_{p}^{k} (modulus {:?}): {agree}/{nice} nice maps match brute force",
            ctx.modulus_poly()
        );
    }
    Ok(())
}
