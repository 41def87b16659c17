//! Graphviz output for functional graphs.

use std::fmt::Write;

use crate::graph::{GraphSummary, RootedTree};
use crate::oracle::{cyclic_vertices, MapTable};

const CYCLIC_ATTRS: &str = "cyclic=true, shape=doublecircle";

/// One node per field element labelled by its canonical index, one edge
/// `a -> f(a)` per element. Cyclic vertices carry `cyclic=true`.
pub fn oracle_dot(table: &MapTable, name: &str) -> String {
    let cyclic = cyclic_vertices(table);
    let mut out = format!("digraph \"{name}\" {{\n");
    for (a, &c) in cyclic.iter().enumerate() {
        if c {
            writeln!(out, "  {a} [{CYCLIC_ATTRS}];").unwrap();
        } else {
            writeln!(out, "  {a};").unwrap();
        }
    }
    for (a, &b) in table.image().iter().enumerate() {
        writeln!(out, "  {a} -> {b};").unwrap();
    }
    out.push_str("}\n");
    out
}

/// An unlabelled drawing of a summary: vertices are named `c<i>_<j>` by
/// component and position, with the same edge and attribute conventions as
/// [`oracle_dot`].
pub fn summary_dot(summary: &GraphSummary, name: &str) -> String {
    let mut nodes = String::new();
    let mut edges = String::new();
    for (ci, comp) in summary.components.iter().enumerate() {
        let mut next = comp.cycle_len;
        for j in 0..comp.cycle_len {
            writeln!(nodes, "  c{ci}_{j} [{CYCLIC_ATTRS}];").unwrap();
            writeln!(edges, "  c{ci}_{j} -> c{ci}_{};", (j + 1) % comp.cycle_len).unwrap();
        }
        for (j, tree) in comp.trees.iter().enumerate() {
            // Iterative walk over (subtree, id of the vertex it hangs from).
            let mut pending: Vec<(RootedTree, usize)> =
                tree.children().into_iter().map(|c| (c, j)).collect();
            while let Some((t, parent)) = pending.pop() {
                let id = next;
                next += 1;
                writeln!(nodes, "  c{ci}_{id};").unwrap();
                writeln!(edges, "  c{ci}_{id} -> c{ci}_{parent};").unwrap();
                pending.extend(t.children().into_iter().map(|c| (c, id)));
            }
        }
    }
    format!("digraph \"{name}\" {{\n{nodes}{edges}}}\n")
}
