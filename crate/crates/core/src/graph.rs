//! Rooted trees, elementary trees and functional-graph summaries.
//!
//! A [`RootedTree`] is held as its canonical AHU code: a balanced
//! parenthesis string where every vertex is written as `(` followed by the
//! codes of its children in sorted order and `)`. Two trees are isomorphic
//! exactly when their codes are equal, so tree equality is string equality.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::number_theory::GcdSeries;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("malformed tree code {0:?}")]
    BadCode(String),
    #[error("component declares cycle length {cycle_len} but lists {trees} trees")]
    LengthMismatch { cycle_len: usize, trees: usize },
    #[error("cycle length must be positive")]
    EmptyCycle,
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootedTree {
    code: String,
}

impl RootedTree {
    pub fn leaf() -> Self {
        Self {
            code: "()".to_string(),
        }
    }

    /// The tree whose root has the given subtrees as children.
    pub fn from_children(mut children: Vec<RootedTree>) -> Self {
        children.sort_unstable();
        let len = 2 + children.iter().map(|c| c.code.len()).sum::<usize>();
        let mut code = String::with_capacity(len);
        code.push('(');
        for c in &children {
            code.push_str(&c.code);
        }
        code.push(')');
        Self { code }
    }

    /// `count` copies of each listed subtree under a fresh root.
    pub fn from_multiset<'a>(parts: impl IntoIterator<Item = (usize, &'a RootedTree)>) -> Self {
        let mut children = Vec::new();
        for (count, t) in parts {
            children.extend(std::iter::repeat_n(t.clone(), count));
        }
        Self::from_children(children)
    }

    /// Parses any balanced parenthesis encoding (child order arbitrary) and
    /// returns the canonical tree.
    pub fn from_code(code: &str) -> Result<Self, GraphError> {
        let bad = || GraphError::BadCode(code.to_string());
        let mut stack: Vec<Vec<RootedTree>> = Vec::new();
        let mut done: Option<RootedTree> = None;
        for ch in code.chars() {
            if done.is_some() {
                return Err(bad());
            }
            match ch {
                '(' => stack.push(Vec::new()),
                ')' => {
                    let children = stack.pop().ok_or_else(bad)?;
                    let t = RootedTree::from_children(children);
                    match stack.last_mut() {
                        Some(parent) => parent.push(t),
                        None => done = Some(t),
                    }
                }
                _ => return Err(bad()),
            }
        }
        done.ok_or_else(bad)
    }

    /// Canonical AHU code.
    pub fn code(&self) -> &str {
        &self.code
    }

    /// Vertex count including the root.
    pub fn size(&self) -> usize {
        self.code.len() / 2
    }

    /// Length of the longest root-to-leaf path.
    pub fn depth(&self) -> usize {
        let mut cur = 0usize;
        let mut best = 0usize;
        for b in self.code.bytes() {
            if b == b'(' {
                cur += 1;
                best = best.max(cur);
            } else {
                cur -= 1;
            }
        }
        best - 1
    }

    /// Number of vertices at each depth, starting with the root.
    pub fn level_counts(&self) -> Vec<usize> {
        let mut counts = Vec::new();
        let mut cur = 0usize;
        for b in self.code.bytes() {
            if b == b'(' {
                if counts.len() <= cur {
                    counts.push(0);
                }
                counts[cur] += 1;
                cur += 1;
            } else {
                cur -= 1;
            }
        }
        counts
    }

    pub fn children(&self) -> Vec<RootedTree> {
        let inner = &self.code[1..self.code.len() - 1];
        let mut out = Vec::new();
        let mut level = 0usize;
        let mut start = 0usize;
        for (i, b) in inner.bytes().enumerate() {
            if b == b'(' {
                if level == 0 {
                    start = i;
                }
                level += 1;
            } else {
                level -= 1;
                if level == 0 {
                    out.push(RootedTree {
                        code: inner[start..=i].to_string(),
                    });
                }
            }
        }
        out
    }
}

impl fmt::Debug for RootedTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RootedTree({})", self.code)
    }
}

impl fmt::Display for RootedTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.code)
    }
}

impl Serialize for RootedTree {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.code)
    }
}

impl<'de> Deserialize<'de> for RootedTree {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let code = String::deserialize(d)?;
        RootedTree::from_code(&code).map_err(serde::de::Error::custom)
    }
}

pub fn canonical_encoding(t: &RootedTree) -> &str {
    t.code()
}

pub fn tree_size(t: &RootedTree) -> usize {
    t.size()
}

/// `T_V^0, ..., T_V^k`.
pub fn elementary_levels(v: &GcdSeries, k: usize) -> Vec<RootedTree> {
    let mut levels = vec![RootedTree::leaf()];
    for j in 1..=k {
        let mut parts = vec![(v.get(j) as usize, &levels[j - 1])];
        for i in 1..j {
            parts.push(((v.get(i) - v.get(i + 1)) as usize, &levels[i - 1]));
        }
        let t = RootedTree::from_multiset(parts);
        levels.push(t);
    }
    levels
}

/// `T_V^k = < v_k x T^(k-1) + sum_{i<k} (v_i - v_{i+1}) x T^(i-1) >`.
pub fn elementary_tree_level(v: &GcdSeries, k: usize) -> RootedTree {
    elementary_levels(v, k)
        .pop()
        .expect("level 0 always present")
}

/// `T_V = < (v_D - 1) x T^(D-1) + sum_{i<D} (v_i - v_{i+1}) x T^(i-1) >`.
pub fn elementary_tree(v: &GcdSeries) -> RootedTree {
    let d = v.len();
    let levels = elementary_levels(v, d - 1);
    let mut parts = vec![((v.get(d) - 1) as usize, &levels[d - 1])];
    for i in 1..d {
        parts.push(((v.get(i) - v.get(i + 1)) as usize, &levels[i - 1]));
    }
    RootedTree::from_multiset(parts)
}

/// A cycle of length `k` with one rooted tree per cycle vertex, in cycle
/// order (vertex `i` maps to vertex `i + 1`).
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawComponent")]
pub struct Component {
    pub cycle_len: usize,
    pub trees: Vec<RootedTree>,
}

#[derive(Deserialize)]
struct RawComponent {
    cycle_len: usize,
    trees: Vec<RootedTree>,
}

impl TryFrom<RawComponent> for Component {
    type Error = GraphError;

    fn try_from(raw: RawComponent) -> Result<Self, GraphError> {
        Component::new(raw.trees).and_then(|c| {
            if c.cycle_len == raw.cycle_len {
                Ok(c)
            } else {
                Err(GraphError::LengthMismatch {
                    cycle_len: raw.cycle_len,
                    trees: c.cycle_len,
                })
            }
        })
    }
}

impl Component {
    pub fn new(trees: Vec<RootedTree>) -> Result<Self, GraphError> {
        if trees.is_empty() {
            return Err(GraphError::EmptyCycle);
        }
        Ok(Self {
            cycle_len: trees.len(),
            trees,
        })
    }

    /// `cyc(k, T)`: every cycle vertex carries a copy of `tree`.
    pub fn uniform(k: usize, tree: &RootedTree) -> Self {
        assert!(k > 0, "cycle length must be positive");
        Self {
            cycle_len: k,
            trees: vec![tree.clone(); k],
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.trees.iter().map(RootedTree::size).sum()
    }

    /// The rotation of the tree sequence that is lexicographically least.
    pub fn canonical(&self) -> Self {
        let mut ranks: Vec<&RootedTree> = self.trees.iter().collect();
        ranks.sort_unstable();
        ranks.dedup();
        let seq: Vec<usize> = self
            .trees
            .iter()
            .map(|t| ranks.binary_search(&t).expect("present"))
            .collect();
        let start = least_rotation(&seq);
        let trees = self.trees[start..]
            .iter()
            .chain(&self.trees[..start])
            .cloned()
            .collect();
        Self {
            cycle_len: self.cycle_len,
            trees,
        }
    }

    /// True when every cycle vertex carries the same tree.
    pub fn is_uniform(&self) -> bool {
        self.trees.windows(2).all(|w| w[0] == w[1])
    }
}

/// Booth's algorithm: start index of the least rotation.
fn least_rotation(s: &[usize]) -> usize {
    let n = s.len();
    if n == 0 {
        return 0;
    }
    let at = |i: i64| s[i as usize % n];
    let mut f = vec![-1i64; 2 * n];
    let mut k = 0i64;
    for j in 1..2 * n as i64 {
        let sj = at(j);
        let mut i = f[(j - k - 1) as usize];
        while i != -1 && sj != at(k + i + 1) {
            if sj < at(k + i + 1) {
                k = j - i - 1;
            }
            i = f[i as usize];
        }
        if sj != at(k + i + 1) {
            // i == -1 here
            if sj < at(k) {
                k = j;
            }
            f[(j - k) as usize] = -1;
        } else {
            f[(j - k) as usize] = i + 1;
        }
    }
    k as usize % n
}

/// A functional graph up to isomorphism: a multiset of components.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct GraphSummary {
    pub components: Vec<Component>,
}

impl GraphSummary {
    pub fn new(components: Vec<Component>) -> Self {
        Self { components }
    }

    /// Disjoint union.
    pub fn union(mut self, other: GraphSummary) -> Self {
        self.components.extend(other.components);
        self
    }

    pub fn push_copies(&mut self, count: usize, c: &Component) {
        self.components
            .extend(std::iter::repeat_n(c.clone(), count));
    }

    pub fn vertex_count(&self) -> usize {
        self.components.iter().map(Component::vertex_count).sum()
    }

    /// Components rotated to their least form and sorted by
    /// `(cycle length, trees)`.
    pub fn canonical(&self) -> Self {
        let mut components: Vec<Component> =
            self.components.iter().map(Component::canonical).collect();
        components.sort_unstable_by(|a, b| {
            a.cycle_len
                .cmp(&b.cycle_len)
                .then_with(|| a.trees.cmp(&b.trees))
        });
        Self { components }
    }

    pub fn fixed_point_count(&self) -> usize {
        self.components.iter().filter(|c| c.cycle_len == 1).count()
    }

    /// Number of components per cycle length.
    pub fn cycle_length_histogram(&self) -> BTreeMap<usize, usize> {
        let mut h = BTreeMap::new();
        for c in &self.components {
            *h.entry(c.cycle_len).or_insert(0) += 1;
        }
        h
    }

    /// Multi-line human-readable listing, identical components grouped.
    pub fn describe(&self) -> String {
        let canon = self.canonical();
        let mut groups: Vec<(usize, &Component)> = Vec::new();
        for c in &canon.components {
            match groups.last_mut() {
                Some((count, last)) if *last == c => *count += 1,
                _ => groups.push((1, c)),
            }
        }
        let mut out = String::new();
        for (count, c) in groups {
            if c.is_uniform() {
                let t = &c.trees[0];
                out.push_str(&format!(
                    "{count} x cyc({}, T) with |T| = {}, depth {}: {}\n",
                    c.cycle_len,
                    t.size(),
                    t.depth(),
                    t.code()
                ));
            } else {
                let sizes: Vec<String> = c.trees.iter().map(|t| t.size().to_string()).collect();
                out.push_str(&format!(
                    "{count} x cycle of length {} with tree sizes [{}]\n",
                    c.cycle_len,
                    sizes.join(", ")
                ));
            }
        }
        out
    }
}

/// True iff the two summaries have the same multiset of components, each
/// compared up to rotation.
pub fn graphs_isomorphic(a: &GraphSummary, b: &GraphSummary) -> bool {
    a.components.len() == b.components.len() && a.canonical() == b.canonical()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn series(v: &[u64]) -> GcdSeries {
        GcdSeries::new(v.to_vec()).unwrap()
    }

    #[test]
    fn elementary_levels_of_331() {
        let v = series(&[3, 3, 1]);
        assert_eq!(elementary_tree_level(&v, 0), RootedTree::leaf());
        let t1 = elementary_tree_level(&v, 1);
        assert_eq!(t1.code(), "(()()())");
        assert_eq!(t1.size(), 4);
        let t2 = elementary_tree_level(&v, 2);
        assert_eq!(t2.size(), 13);
        assert_eq!(t2.children(), vec![t1.clone(); 3]);
    }

    #[test]
    fn elementary_tree_examples() {
        let t = elementary_tree(&series(&[3, 3, 1]));
        assert_eq!(t.size(), 9);
        assert_eq!(
            t.children(),
            vec![elementary_tree_level(&series(&[3, 3, 1]), 1); 2]
        );
        assert_eq!(elementary_tree(&series(&[1])), RootedTree::leaf());
        assert_eq!(elementary_tree(&series(&[2, 1])).code(), "(())");
    }

    #[test]
    fn codes() {
        assert_eq!(RootedTree::leaf().code(), "()");
        let t = RootedTree::from_children(vec![RootedTree::leaf(), RootedTree::leaf()]);
        assert_eq!(canonical_encoding(&t), "(()())");
        assert_eq!(tree_size(&RootedTree::leaf()), 1);
        let a = RootedTree::from_code("((())())").unwrap();
        let b = RootedTree::from_code("(()(()))").unwrap();
        assert_eq!(a, b);
        assert_eq!(a.depth(), 2);
        assert_eq!(a.level_counts(), vec![1, 2, 1]);
        for bad in ["", "(", "())", "()()", "(x)"] {
            assert!(RootedTree::from_code(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn isomorphism_examples() {
        assert!(graphs_isomorphic(
            &GraphSummary::default(),
            &GraphSummary::default()
        ));
        let ta = RootedTree::from_code("(())").unwrap();
        let tb = RootedTree::leaf();
        let x = GraphSummary::new(vec![Component::new(vec![ta.clone(), tb.clone()]).unwrap()]);
        let y = GraphSummary::new(vec![Component::new(vec![tb.clone(), ta.clone()]).unwrap()]);
        assert!(graphs_isomorphic(&x, &y));
        let one = GraphSummary::new(vec![Component::uniform(1, &tb)]);
        let two = GraphSummary::new(vec![Component::uniform(2, &tb)]);
        assert!(!graphs_isomorphic(&one, &two));
    }

    #[test]
    fn rotation_is_not_reflection() {
        let t: Vec<RootedTree> = ["()", "(())", "((()))"]
            .iter()
            .map(|c| RootedTree::from_code(c).unwrap())
            .collect();
        let fwd = Component::new(vec![t[0].clone(), t[1].clone(), t[2].clone()]).unwrap();
        let rev = Component::new(vec![t[0].clone(), t[2].clone(), t[1].clone()]).unwrap();
        assert_ne!(fwd.canonical(), rev.canonical());
    }

    #[test]
    fn least_rotation_brute_force() {
        let cases: Vec<Vec<usize>> = vec![
            vec![1, 0, 1, 0],
            vec![2, 2, 1, 2, 1, 1],
            vec![0],
            vec![3, 1, 2, 1, 2, 1, 2],
            vec![1, 1, 1],
        ];
        for s in cases {
            let n = s.len();
            let best = (0..n)
                .map(|i| s[i..].iter().chain(&s[..i]).copied().collect::<Vec<_>>())
                .min()
                .unwrap();
            let k = least_rotation(&s);
            let got: Vec<usize> = s[k..].iter().chain(&s[..k]).copied().collect();
            assert_eq!(got, best);
        }
    }

    #[test]
    fn json_schema() {
        let g = GraphSummary::new(vec![Component::uniform(2, &RootedTree::leaf())]);
        let s = serde_json::to_string(&g).unwrap();
        assert_eq!(s, r#"{"components":[{"cycle_len":2,"trees":["()","()"]}]}"#);
        let back: GraphSummary = serde_json::from_str(&s).unwrap();
        assert_eq!(back, g);
        assert!(serde_json::from_str::<GraphSummary>(
            r#"{"components":[{"cycle_len":3,"trees":["()"]}]}"#
        )
        .is_err());
    }
}
