// Licensed under the Apache License, Version 2.0 (the "License"); you may
// not use this file except in compliance with the License. You may obtain
// a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
// WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
// License for the specific language governing permissions and limitations
// under the License.

//! Forest predicates and tree surgery: the even-distance condition on
//! vertices of degree at least three ("big" vertices), embedding a forest in
//! a tree that keeps the condition, the even-parity tree `T*`, and the
//! deterministic leaf pruning used by the recursive colorer.

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ForestProfile {
    pub is_forest: bool,
    /// Vertices of degree at least three, ascending.
    pub big_vertices: Vec<usize>,
    /// Every pair of big vertices in a common component is at even distance.
    pub condition_holds: bool,
    /// Lexicographically least `(u, v, distance)` at odd distance.
    pub failing_pair: Option<(usize, usize, usize)>,
}

impl ForestProfile {
    /// A forest that satisfies the even-distance condition.
    pub fn passes(&self) -> bool {
        self.is_forest && self.condition_holds
    }
}

pub fn profile_forest(f: &Graph) -> ForestProfile {
    let big_vertices = f.big_vertices();
    let mut failing_pair = None;
    'outer: for (i, &u) in big_vertices.iter().enumerate() {
        let dist = f.distances_from(u);
        for &v in &big_vertices[i + 1..] {
            if let Some(d) = dist[v] {
                if d % 2 == 1 {
                    failing_pair = Some((u, v, d));
                    break 'outer;
                }
            }
        }
    }
    ForestProfile {
        is_forest: f.is_forest(),
        big_vertices,
        condition_holds: failing_pair.is_none(),
        failing_pair,
    }
}

/// Errors unless `t` is a tree satisfying the even-distance condition.
pub fn check_even_tree(t: &Graph) -> Result<()> {
    if !t.is_tree() {
        return Err(Error::ConditionViolated("not a tree".into()));
    }
    match profile_forest(t).failing_pair {
        Some((u, v, d)) => Err(Error::ConditionViolated(format!(
            "big vertices {u} and {v} are at odd distance {d}"
        ))),
        None => Ok(()),
    }
}

/// A tree containing `f` (on the same vertex ids, plus fresh ones appended)
/// in which all big vertices are pairwise at even distance.
///
/// Without big vertices, the path components are chained end to end.
/// Otherwise the smallest big vertex `b` of the first component that has
/// one is the anchor: every path component hangs from `b` by one of its
/// ends, and every other component with big vertices is joined to `b` by a
/// path of length two through a fresh vertex, ending at that component's
/// smallest big vertex.
pub fn embed_in_even_tree(f: &Graph) -> Result<Graph> {
    let profile = profile_forest(f);
    if !profile.is_forest {
        return Err(Error::ConditionViolated("not a forest".into()));
    }
    if let Some((u, v, d)) = profile.failing_pair {
        return Err(Error::ConditionViolated(format!(
            "big vertices {u} and {v} are at odd distance {d}"
        )));
    }
    let components = f.components();
    let mut extra = Vec::new();
    let mut next = f.vertex_count();
    let first_big = |comp: &[usize]| comp.iter().copied().find(|&v| f.degree(v) >= 3);
    match components.iter().find_map(|c| first_big(c)) {
        None => {
            let mut prev_end: Option<usize> = None;
            for comp in &components {
                let walk = path_walk(f, comp);
                if let Some(p) = prev_end {
                    extra.push((p, walk[0]));
                }
                prev_end = walk.last().copied();
            }
        }
        Some(anchor) => {
            for comp in &components {
                if comp.contains(&anchor) {
                    continue;
                }
                match first_big(comp) {
                    None => extra.push((anchor, path_walk(f, comp)[0])),
                    Some(b) => {
                        extra.push((anchor, next));
                        extra.push((next, b));
                        next += 1;
                    }
                }
            }
        }
    }
    f.with_isolated(next - f.vertex_count()).with_edges(&extra)
}

// Vertices of a path component from its smallest end.
fn path_walk(f: &Graph, comp: &[usize]) -> Vec<usize> {
    let start = comp
        .iter()
        .copied()
        .find(|&v| f.degree(v) <= 1)
        .expect("path component has an end");
    let mut walk = vec![start];
    let mut prev = usize::MAX;
    let mut cur = start;
    while let Some(&nxt) = f.neighbors(cur).iter().find(|&&w| w != prev) {
        walk.push(nxt);
        prev = cur;
        cur = nxt;
    }
    walk
}

/// The tree on big vertices and vertices at even distance from them, with
/// edges between vertices at distance two.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TStar {
    pub tree: Graph,
    /// Original vertex for each `T*` vertex, ascending.
    pub original: Vec<usize>,
}

impl TStar {
    pub fn vertex_count(&self) -> usize {
        self.tree.vertex_count()
    }
}

pub fn compute_t_star(t: &Graph) -> Result<TStar> {
    check_even_tree(t)?;
    let Some(&anchor) = t.big_vertices().first() else {
        return Err(Error::NotApplicable(
            "tree has no vertex of degree >= 3".into(),
        ));
    };
    let parity = t.distances_from(anchor);
    let original: Vec<usize> = (0..t.vertex_count())
        .filter(|&v| parity[v].is_some_and(|d| d % 2 == 0))
        .collect();
    let mut index = vec![usize::MAX; t.vertex_count()];
    for (i, &v) in original.iter().enumerate() {
        index[v] = i;
    }
    let mut edges = Vec::new();
    for (i, &v) in original.iter().enumerate() {
        for &m in t.neighbors(v) {
            for &w in t.neighbors(m) {
                if w != v && index[w] != usize::MAX && i < index[w] {
                    edges.push((i, index[w]));
                }
            }
        }
    }
    let tree = Graph::new(original.len(), &edges)?;
    if !tree.is_tree() {
        return Err(Error::InternalInvariant("T* is not a tree".into()));
    }
    Ok(TStar { tree, original })
}

/// `t` with one leaf removed, re-indexed densely.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrunedTree {
    pub tree: Graph,
    pub removed: usize,
    pub neighbor: usize,
    /// Original id of each remaining vertex.
    pub kept: Vec<usize>,
}

/// Removes the smallest leaf whose removal leaves a path or a star, or the
/// smallest leaf if there is none.
pub fn prune_leaf(t: &Graph) -> Result<PrunedTree> {
    if t.vertex_count() < 2 {
        return Err(Error::TooSmall(
            "pruning needs at least two vertices".into(),
        ));
    }
    if !t.is_tree() {
        return Err(Error::ConditionViolated("not a tree".into()));
    }
    let leaves: Vec<usize> = (0..t.vertex_count())
        .filter(|&v| t.degree(v) == 1)
        .collect();
    let without = |leaf: usize| {
        let kept: Vec<usize> = (0..t.vertex_count()).filter(|&v| v != leaf).collect();
        (t.induced_subgraph(&kept), kept)
    };
    let chosen = leaves
        .iter()
        .copied()
        .find(|&l| {
            let (g, _) = without(l);
            g.is_path() || g.is_star()
        })
        .unwrap_or(leaves[0]);
    let (tree, kept) = without(chosen);
    Ok(PrunedTree {
        tree,
        removed: chosen,
        neighbor: t.neighbors(chosen)[0],
        kept,
    })
}
