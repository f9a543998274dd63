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

//! Skeletons of a pattern graph inside a hypergraph: pattern vertices go to
//! distinct hypergraph vertices and pattern edges to distinct hyperedges
//! containing both endpoint images.

use super::{p_bound, Hypergraph};
use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SkeletonMode {
    /// Each pattern edge's hyperedge contains its endpoint images.
    Weak,
    /// Weak, and no chosen hyperedge contains the images of a non-adjacent
    /// pattern pair.
    Strict,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SkeletonWitness {
    /// Hypergraph vertex for each pattern vertex.
    pub vertex_map: Vec<usize>,
    /// Hyperedge index for each pattern edge, in the pattern's edge order.
    pub edge_map: Vec<usize>,
    pub mode: SkeletonMode,
}

impl SkeletonWitness {
    pub fn is_valid(&self, h: &Hypergraph, pattern: &Graph) -> bool {
        if self.vertex_map.len() != pattern.vertex_count()
            || self.edge_map.len() != pattern.edge_count()
            || !injective(&self.vertex_map, h.vertex_count())
            || !injective(&self.edge_map, h.edge_count())
        {
            return false;
        }
        let weak = pattern.edges().zip(&self.edge_map).all(|((u, v), &e)| {
            let e = h.edge(e);
            e.binary_search(&self.vertex_map[u]).is_ok()
                && e.binary_search(&self.vertex_map[v]).is_ok()
        });
        if !weak || self.mode == SkeletonMode::Weak {
            return weak;
        }
        let n = pattern.vertex_count();
        self.edge_map.iter().all(|&e| {
            let e = h.edge(e);
            (0..n).all(|u| {
                (u + 1..n).all(|v| {
                    pattern.has_edge(u, v)
                        || e.binary_search(&self.vertex_map[u]).is_err()
                        || e.binary_search(&self.vertex_map[v]).is_err()
                })
            })
        })
    }
}

fn injective(map: &[usize], bound: usize) -> bool {
    let mut seen = vec![false; bound];
    map.iter()
        .all(|&x| x < bound && !std::mem::replace(&mut seen[x], true))
}

fn tree_size_check(t: &Graph) -> Result<()> {
    if t.vertex_count() < 2 || !t.is_tree() {
        return Err(Error::Domain(
            "skeleton tree must be a tree on at least two vertices".into(),
        ));
    }
    Ok(())
}

/// Grows a weak skeleton of the tree `t` leaf by leaf.
///
/// Vertex 0 of `t` goes to hypergraph vertex 0; the remaining tree vertices
/// follow breadth-first order, and each new leaf takes the smallest fresh
/// vertex of the first unused hyperedge through its parent's image that has
/// one. The minimum degree `p(|V(t)|)` guarantees this never gets stuck on a
/// simple hypergraph without singleton edges.
pub fn find_skeleton_greedy(h: &Hypergraph, t: &Graph) -> Result<SkeletonWitness> {
    tree_size_check(t)?;
    if !h.is_simple() {
        return Err(Error::NotSimple("nested hyperedges".into()));
    }
    if let Some(i) = h.edges().iter().position(|e| e.len() < 2) {
        return Err(Error::NotSimple(format!(
            "hyperedge {i} has fewer than two vertices"
        )));
    }
    let required = p_bound(t.vertex_count())?;
    let degrees = h.degrees();
    let low = degrees
        .iter()
        .enumerate()
        .min_by_key(|&(v, &d)| (d, v))
        .map(|(v, &d)| (v, d));
    match low {
        None => {
            return Err(Error::PreconditionViolated {
                vertex: None,
                degree: 0,
                required: required as u64,
            })
        }
        Some((v, d)) if (d as u128) < required => {
            return Err(Error::PreconditionViolated {
                vertex: Some(v),
                degree: d,
                required: required as u64,
            })
        }
        _ => {}
    }

    let tree_edges: Vec<(usize, usize)> = t.edges().collect();
    let edge_index = |a: usize, b: usize| {
        tree_edges
            .binary_search(&(a.min(b), a.max(b)))
            .expect("tree edge")
    };
    let incidence = h.incidence();
    let mut vertex_map = vec![usize::MAX; t.vertex_count()];
    let mut edge_map = vec![usize::MAX; tree_edges.len()];
    let mut used_vertex = vec![false; h.vertex_count()];
    let mut used_edge = vec![false; h.edge_count()];
    vertex_map[0] = 0;
    used_vertex[0] = true;
    let mut queue = std::collections::VecDeque::from([0usize]);
    while let Some(u) = queue.pop_front() {
        for &v in t.neighbors(u) {
            if vertex_map[v] != usize::MAX {
                continue;
            }
            let fu = vertex_map[u];
            let step = incidence[fu].iter().find_map(|&e| {
                if used_edge[e] {
                    return None;
                }
                h.edge(e)
                    .iter()
                    .find(|&&x| !used_vertex[x])
                    .map(|&x| (e, x))
            });
            let Some((e, x)) = step else {
                return Err(Error::InternalInvariant(format!(
                    "greedy skeleton stuck at tree vertex {v}"
                )));
            };
            vertex_map[v] = x;
            used_vertex[x] = true;
            edge_map[edge_index(u, v)] = e;
            used_edge[e] = true;
            queue.push_back(v);
        }
    }
    Ok(SkeletonWitness {
        vertex_map,
        edge_map,
        mode: SkeletonMode::Weak,
    })
}

/// Backtracking search for a skeleton of an arbitrary pattern.
///
/// Pattern vertices are placed in depth-first order from the smallest
/// vertex of each component; each placement is followed by the choice of
/// hyperedges for the pattern edges back to already placed vertices. Aborts
/// with [`Error::SearchBudgetExceeded`] after `budget` search nodes.
pub fn find_skeleton_exhaustive(
    h: &Hypergraph,
    pattern: &Graph,
    mode: SkeletonMode,
    budget: Option<u64>,
) -> Result<Option<SkeletonWitness>> {
    let np = pattern.vertex_count();
    if np > h.vertex_count() || pattern.edge_count() > h.edge_count() {
        return Ok(None);
    }
    let mut order = Vec::with_capacity(np);
    let mut seen = vec![false; np];
    for root in 0..np {
        if !seen[root] {
            seen[root] = true;
            order.push(root);
            preorder(pattern, root, &mut seen, &mut order);
        }
    }
    let mut position = vec![0; np];
    for (i, &p) in order.iter().enumerate() {
        position[p] = i;
    }
    let pattern_edges: Vec<(usize, usize)> = pattern.edges().collect();
    let back: Vec<Vec<(usize, usize)>> = order
        .iter()
        .map(|&p| {
            pattern
                .neighbors(p)
                .iter()
                .filter(|&&q| position[q] < position[p])
                .map(|&q| {
                    (
                        q,
                        pattern_edges.binary_search(&(p.min(q), p.max(q))).unwrap(),
                    )
                })
                .collect()
        })
        .collect();
    let incidence = h.incidence();
    let section: Vec<Vec<usize>> = (0..h.vertex_count())
        .map(|v| {
            let mut nb: Vec<usize> = incidence[v]
                .iter()
                .flat_map(|&e| h.edge(e).iter().copied())
                .filter(|&w| w != v)
                .collect();
            nb.sort_unstable();
            nb.dedup();
            nb
        })
        .collect();
    let mut search = SkeletonSearch {
        h,
        pattern,
        mode,
        order: &order,
        back: &back,
        incidence: &incidence,
        section: &section,
        vertex_map: vec![usize::MAX; np],
        edge_map: vec![usize::MAX; pattern_edges.len()],
        used_vertex: vec![false; h.vertex_count()],
        used_edge: vec![false; h.edge_count()],
        nodes: 0,
        budget,
    };
    if search.place_vertex(0)? {
        Ok(Some(SkeletonWitness {
            vertex_map: search.vertex_map,
            edge_map: search.edge_map,
            mode,
        }))
    } else {
        Ok(None)
    }
}

fn preorder(g: &Graph, v: usize, seen: &mut [bool], order: &mut Vec<usize>) {
    for &w in g.neighbors(v) {
        if !seen[w] {
            seen[w] = true;
            order.push(w);
            preorder(g, w, seen, order);
        }
    }
}

struct SkeletonSearch<'a> {
    h: &'a Hypergraph,
    pattern: &'a Graph,
    mode: SkeletonMode,
    order: &'a [usize],
    back: &'a [Vec<(usize, usize)>],
    incidence: &'a [Vec<usize>],
    section: &'a [Vec<usize>],
    vertex_map: Vec<usize>,
    edge_map: Vec<usize>,
    used_vertex: Vec<bool>,
    used_edge: Vec<bool>,
    nodes: u64,
    budget: Option<u64>,
}

impl SkeletonSearch<'_> {
    fn tick(&mut self) -> Result<()> {
        self.nodes += 1;
        match self.budget {
            Some(budget) if self.nodes > budget => Err(Error::SearchBudgetExceeded { budget }),
            _ => Ok(()),
        }
    }

    fn contains(&self, e: usize, v: usize) -> bool {
        self.h.edge(e).binary_search(&v).is_ok()
    }

    // Strict mode: chosen hyperedges through `x` may only hold images of
    // pattern neighbors of `p`.
    fn strict_vertex_ok(&self, p: usize, x: usize) -> bool {
        self.mode == SkeletonMode::Weak
            || self
                .edge_map
                .iter()
                .filter(|&&e| e != usize::MAX)
                .all(|&e| {
                    !self.contains(e, x)
                        || self.order.iter().all(|&r| {
                            let fr = self.vertex_map[r];
                            fr == usize::MAX
                                || r == p
                                || self.pattern.has_edge(p, r)
                                || !self.contains(e, fr)
                        })
                })
    }

    fn strict_edge_ok(&self, e: usize) -> bool {
        if self.mode == SkeletonMode::Weak {
            return true;
        }
        let inside: Vec<usize> = self
            .order
            .iter()
            .copied()
            .filter(|&r| self.vertex_map[r] != usize::MAX && self.contains(e, self.vertex_map[r]))
            .collect();
        inside
            .iter()
            .enumerate()
            .all(|(i, &a)| inside[i + 1..].iter().all(|&b| self.pattern.has_edge(a, b)))
    }

    fn place_vertex(&mut self, i: usize) -> Result<bool> {
        if i == self.order.len() {
            return Ok(true);
        }
        let p = self.order[i];
        let section = self.section;
        let candidates: Vec<usize> = match self.back[i].first() {
            Some(&(q, _)) => section[self.vertex_map[q]].clone(),
            None => (0..self.h.vertex_count()).collect(),
        };
        for x in candidates {
            if self.used_vertex[x]
                || self.incidence[x].len() < self.pattern.degree(p)
                || !self.strict_vertex_ok(p, x)
            {
                continue;
            }
            self.tick()?;
            self.vertex_map[p] = x;
            self.used_vertex[x] = true;
            if self.place_edges(i, 0)? {
                return Ok(true);
            }
            self.used_vertex[x] = false;
            self.vertex_map[p] = usize::MAX;
        }
        Ok(false)
    }

    fn place_edges(&mut self, i: usize, j: usize) -> Result<bool> {
        let back = self.back;
        let Some(&(q, idx)) = back[i].get(j) else {
            return self.place_vertex(i + 1);
        };
        let fp = self.vertex_map[self.order[i]];
        let fq = self.vertex_map[q];
        let incidence = self.incidence;
        for &e in &incidence[fp] {
            if self.used_edge[e] || !self.contains(e, fq) || !self.strict_edge_ok(e) {
                continue;
            }
            self.tick()?;
            self.edge_map[idx] = e;
            self.used_edge[e] = true;
            if self.place_edges(i, j + 1)? {
                return Ok(true);
            }
            self.used_edge[e] = false;
            self.edge_map[idx] = usize::MAX;
        }
        Ok(false)
    }
}
