//! Brute-force ground truth: tabulate a self-map of `F_q`, extract its
//! functional graph, and measure predecessor counts directly.

use rayon::prelude::*;

use crate::field::{FieldCtx, FieldElement};
use crate::graph::{Component, GraphSummary, RootedTree};
use crate::number_theory::GcdSeries;
use crate::poly::Polynomial;

/// `image[a]` is the canonical index of `f(a)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MapTable {
    image: Vec<u32>,
}

impl MapTable {
    /// Panics if some image lies outside `0..image.len()`.
    pub fn new(image: Vec<u32>) -> Self {
        let n = image.len();
        assert!(
            image.iter().all(|&b| (b as usize) < n),
            "map leaves its domain"
        );
        Self { image }
    }

    pub fn from_fn(size: usize, f: impl Fn(u32) -> u32 + Sync + Send) -> Self {
        Self::new((0..size as u32).into_par_iter().map(f).collect())
    }

    pub fn len(&self) -> usize {
        self.image.len()
    }

    pub fn is_empty(&self) -> bool {
        self.image.is_empty()
    }

    pub fn image(&self) -> &[u32] {
        &self.image
    }

    pub fn get(&self, a: u32) -> u32 {
        self.image[a as usize]
    }
}

/// `image[a] = f(a)` for every `a` in `F_q`.
pub fn tabulate(ctx: &FieldCtx, f: &Polynomial) -> MapTable {
    MapTable::from_fn(ctx.q() as usize, |a| {
        f.evaluate(ctx, ctx.element(a as u64).expect("in range"))
            .index()
    })
}

/// Reverse adjacency in compressed form.
#[derive(Debug, Clone)]
pub struct Preimages {
    offsets: Vec<u32>,
    list: Vec<u32>,
}

impl Preimages {
    pub fn new(table: &MapTable) -> Self {
        let n = table.len();
        let mut offsets = vec![0u32; n + 1];
        for &b in table.image() {
            offsets[b as usize + 1] += 1;
        }
        for i in 0..n {
            offsets[i + 1] += offsets[i];
        }
        let mut fill = offsets.clone();
        let mut list = vec![0u32; n];
        for (a, &b) in table.image().iter().enumerate() {
            list[fill[b as usize] as usize] = a as u32;
            fill[b as usize] += 1;
        }
        Self { offsets, list }
    }

    pub fn of(&self, b: u32) -> &[u32] {
        &self.list[self.offsets[b as usize] as usize..self.offsets[b as usize + 1] as usize]
    }
}

/// Marks every vertex lying on a cycle. Three-colour walk, no recursion.
pub fn cyclic_vertices(table: &MapTable) -> Vec<bool> {
    const NEW: u8 = 0;
    const ACTIVE: u8 = 1;
    const DONE: u8 = 2;
    let n = table.len();
    let mut state = vec![NEW; n];
    let mut cyclic = vec![false; n];
    let mut path = Vec::new();
    for start in 0..n as u32 {
        if state[start as usize] != NEW {
            continue;
        }
        let mut x = start;
        while state[x as usize] == NEW {
            state[x as usize] = ACTIVE;
            path.push(x);
            x = table.get(x);
        }
        if state[x as usize] == ACTIVE {
            // closed a new cycle at x
            let mut y = x;
            loop {
                cyclic[y as usize] = true;
                y = table.get(y);
                if y == x {
                    break;
                }
            }
        }
        for v in path.drain(..) {
            state[v as usize] = DONE;
        }
    }
    cyclic
}

/// Trees hanging from each vertex over non-cyclic preimages, built bottom-up.
/// Only vertices reachable backwards from `roots` are populated.
fn hanging_trees(
    pre: &Preimages,
    cyclic: &[bool],
    roots: impl IntoIterator<Item = u32>,
) -> Vec<Option<RootedTree>> {
    let mut order: Vec<u32> = roots.into_iter().collect();
    let mut head = 0;
    while head < order.len() {
        let v = order[head];
        head += 1;
        order.extend(pre.of(v).iter().copied().filter(|&c| !cyclic[c as usize]));
    }
    let mut trees: Vec<Option<RootedTree>> = vec![None; cyclic.len()];
    for &v in order.iter().rev() {
        let children = pre
            .of(v)
            .iter()
            .filter(|&&c| !cyclic[c as usize])
            .map(|&c| trees[c as usize].take().expect("child built first"))
            .collect();
        trees[v as usize] = Some(RootedTree::from_children(children));
    }
    trees
}

/// Every component of the functional graph, trees listed in cycle order.
pub fn build_functional_graph(table: &MapTable) -> GraphSummary {
    let cyclic = cyclic_vertices(table);
    let pre = Preimages::new(table);
    let roots = (0..table.len() as u32).filter(|&v| cyclic[v as usize]);
    let mut trees = hanging_trees(&pre, &cyclic, roots);
    let mut seen = vec![false; table.len()];
    let mut components = Vec::new();
    for start in 0..table.len() as u32 {
        if !cyclic[start as usize] || seen[start as usize] {
            continue;
        }
        let mut cycle_trees = Vec::new();
        let mut v = start;
        loop {
            seen[v as usize] = true;
            cycle_trees.push(trees[v as usize].take().expect("cyclic root built"));
            v = table.get(v);
            if v == start {
                break;
            }
        }
        components.push(Component::new(cycle_trees).expect("cycle is non-empty"));
    }
    GraphSummary::new(components)
}

/// All predecessors of a vertex, as a rooted structure at that vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Predecessors {
    /// The vertex is not on a cycle: its in-tree.
    Tree(RootedTree),
    /// The vertex is on a cycle: its whole component, rotated to start there.
    Cycle(Component),
}

pub fn predecessor_subgraph(table: &MapTable, a: u32) -> Predecessors {
    let cyclic = cyclic_vertices(table);
    let pre = Preimages::new(table);
    if !cyclic[a as usize] {
        let mut trees = hanging_trees(&pre, &cyclic, [a]);
        return Predecessors::Tree(trees[a as usize].take().expect("root built"));
    }
    let mut cycle = vec![a];
    let mut v = table.get(a);
    while v != a {
        cycle.push(v);
        v = table.get(v);
    }
    let mut trees = hanging_trees(&pre, &cyclic, cycle.iter().copied());
    let trees = cycle
        .iter()
        .map(|&v| trees[v as usize].take().expect("root built"))
        .collect();
    Predecessors::Cycle(Component::new(trees).expect("non-empty"))
}

/// The tree obtained from the predecessors of a cyclic vertex `a` by
/// removing its cyclic preimage together with everything above it.
pub fn tree_at_cyclic_vertex(table: &MapTable, a: u32) -> Option<RootedTree> {
    match predecessor_subgraph(table, a) {
        Predecessors::Cycle(c) => c.trees.into_iter().next(),
        Predecessors::Tree(_) => None,
    }
}

/// Vertices that reach `a` (including `a`).
pub fn predecessor_set(table: &MapTable, pre: &Preimages, a: u32) -> Vec<u32> {
    let mut seen = vec![false; table.len()];
    let mut out = vec![a];
    seen[a as usize] = true;
    let mut head = 0;
    while head < out.len() {
        let v = out[head];
        head += 1;
        for &c in pre.of(v) {
            if !seen[c as usize] {
                seen[c as usize] = true;
                out.push(c);
            }
        }
    }
    out
}

/// `layers[k][b] = |{x : f^(k)(x) = b}|` for `k = 0..=k_max`.
pub fn preimage_count_layers(table: &MapTable, k_max: usize) -> Vec<Vec<u64>> {
    let pre = Preimages::new(table);
    let n = table.len();
    let mut layers = vec![vec![1u64; n]];
    for _ in 0..k_max {
        let last = layers.last().unwrap();
        let next = (0..n as u32)
            .map(|b| pre.of(b).iter().map(|&c| last[c as usize]).sum())
            .collect();
        layers.push(next);
    }
    layers
}

/// Depth of the deepest non-cyclic vertex above a cycle plus the longest
/// cycle length. Beyond this many steps the preimage counts of every vertex
/// are periodic.
fn stabilization_horizon(table: &MapTable) -> usize {
    let cyclic = cyclic_vertices(table);
    let n = table.len();
    // distance to the cycle, computed by walking from each vertex with memo
    let mut dist = vec![usize::MAX; n];
    for v in 0..n {
        if cyclic[v] {
            dist[v] = 0;
        }
    }
    let mut stack = Vec::new();
    for start in 0..n as u32 {
        let mut x = start;
        while dist[x as usize] == usize::MAX {
            stack.push(x);
            x = table.get(x);
        }
        let mut d = dist[x as usize];
        while let Some(v) = stack.pop() {
            d += 1;
            dist[v as usize] = d;
        }
    }
    let height = dist.iter().copied().max().unwrap_or(0);
    let mut longest = 0usize;
    let mut seen = vec![false; n];
    for start in 0..n as u32 {
        if !cyclic[start as usize] || seen[start as usize] {
            continue;
        }
        let mut len = 0;
        let mut v = start;
        loop {
            seen[v as usize] = true;
            len += 1;
            v = table.get(v);
            if v == start {
                break;
            }
        }
        longest = longest.max(len);
    }
    height + longest
}

/// Per vertex: true when for every `k >= 1` the number of solutions of
/// `f^(k)(x) = b` is either `0` or `v_1 * ... * v_k`.
pub fn locally_regular_vertices(table: &MapTable, v: &GcdSeries) -> Vec<bool> {
    let k_max = stabilization_horizon(table) + v.len() + 1;
    let layers = preimage_count_layers(table, k_max);
    (0..table.len())
        .map(|b| {
            (1..=k_max).all(|k| {
                let c = layers[k][b] as u128;
                c == 0 || c == v.prefix_product(k)
            })
        })
        .collect()
}

/// True iff the predecessor subgraph `R_a` is `V`-regular: every vertex `b`
/// reaching `a` has, for each `k >= 1`, either no `k`-th preimages or exactly
/// `v_1 * ... * v_k` of them.
pub fn check_v_regular(table: &MapTable, a: u32, v: &GcdSeries) -> bool {
    let ok = locally_regular_vertices(table, v);
    let pre = Preimages::new(table);
    predecessor_set(table, &pre, a)
        .iter()
        .all(|&b| ok[b as usize])
}

/// [`check_v_regular`] for every vertex at once.
pub fn v_regular_roots(table: &MapTable, v: &GcdSeries) -> Vec<bool> {
    let ok = locally_regular_vertices(table, v);
    // a fails iff some failing vertex reaches it: push failures forward.
    let mut regular = vec![true; table.len()];
    for b in 0..table.len() as u32 {
        if ok[b as usize] {
            continue;
        }
        let mut x = b;
        while regular[x as usize] {
            regular[x as usize] = false;
            x = table.get(x);
        }
    }
    regular
}

/// Solutions of `f(x) = x`.
pub fn fixed_points(table: &MapTable) -> Vec<u32> {
    (0..table.len() as u32)
        .filter(|&a| table.get(a) == a)
        .collect()
}

/// Convenience: the oracle graph of a polynomial over a field.
pub fn oracle_graph(ctx: &FieldCtx, f: &Polynomial) -> GraphSummary {
    build_functional_graph(&tabulate(ctx, f))
}

/// Element for a table index.
pub fn element(ctx: &FieldCtx, i: u32) -> FieldElement {
    ctx.element(i as u64).expect("table index inside the field")
}
