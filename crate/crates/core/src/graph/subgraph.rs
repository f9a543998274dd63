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

//! Backtracking search for a (not necessarily induced) copy of a pattern
//! graph inside a host graph.

use super::Graph;
use crate::error::{Error, Result};

/// An embedding of a pattern into a host.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubgraphWitness {
    /// Host vertex for every pattern vertex.
    pub vertex_map: Vec<usize>,
    /// Host edge realizing each pattern edge, in the pattern's edge order.
    pub edge_list: Vec<(usize, usize)>,
}

impl SubgraphWitness {
    fn from_map(pattern: &Graph, vertex_map: Vec<usize>) -> Self {
        let edge_list = pattern
            .edges()
            .map(|(u, v)| (vertex_map[u], vertex_map[v]))
            .collect();
        SubgraphWitness {
            vertex_map,
            edge_list,
        }
    }

    /// Rebuilds a witness from a vertex map, filling in the edge list.
    pub fn from_vertex_map(pattern: &Graph, vertex_map: Vec<usize>) -> Self {
        Self::from_map(pattern, vertex_map)
    }

    /// Checks injectivity and that every pattern edge lands on a host edge.
    pub fn is_valid(&self, host: &Graph, pattern: &Graph) -> bool {
        if self.vertex_map.len() != pattern.vertex_count() {
            return false;
        }
        let mut seen = vec![false; host.vertex_count()];
        for &h in &self.vertex_map {
            if h >= host.vertex_count() || seen[h] {
                return false;
            }
            seen[h] = true;
        }
        let expected: Vec<_> = pattern
            .edges()
            .map(|(u, v)| (self.vertex_map[u], self.vertex_map[v]))
            .collect();
        expected == self.edge_list && expected.iter().all(|&(a, b)| host.has_edge(a, b))
    }

    /// Re-expresses the witness through a vertex relabeling of the host,
    /// e.g. from an induced subgraph back to its parent graph.
    pub fn mapped(&self, host_ids: &[usize]) -> SubgraphWitness {
        SubgraphWitness {
            vertex_map: self.vertex_map.iter().map(|&v| host_ids[v]).collect(),
            edge_list: self
                .edge_list
                .iter()
                .map(|&(a, b)| (host_ids[a], host_ids[b]))
                .collect(),
        }
    }
}

/// A pattern vertex pinned to a host vertex before the search starts.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Anchor {
    pub pattern: usize,
    pub host: usize,
}

/// Exhaustive search for `pattern` as a subgraph of `host`.
pub fn contains_subgraph(host: &Graph, pattern: &Graph) -> Option<SubgraphWitness> {
    find_embedding(host.adjacency(), pattern, &[], None).expect("unbounded search cannot fail")
}

/// Like [`contains_subgraph`] but aborts after `budget` search nodes.
pub fn contains_subgraph_with_budget(
    host: &Graph,
    pattern: &Graph,
    budget: Option<u64>,
) -> Result<Option<SubgraphWitness>> {
    find_embedding(host.adjacency(), pattern, &[], budget)
}

/// Searches embeddings of `pattern` into the host given by sorted adjacency
/// lists, with some pattern vertices pinned by `anchors`.
///
/// Candidates are tried in ascending host id. Without anchors, and when every
/// pattern vertex that is not the smallest of its component has a smaller
/// neighbor, pattern vertices are matched in id order and the witness is the
/// lexicographically smallest one. Otherwise they are matched depth-first:
/// anchors first, then from the highest-degree remaining vertex.
pub fn find_embedding(
    host: &[Vec<usize>],
    pattern: &Graph,
    anchors: &[Anchor],
    budget: Option<u64>,
) -> Result<Option<SubgraphWitness>> {
    let np = pattern.vertex_count();
    if np > host.len() {
        return Ok(None);
    }
    let order = matching_order(pattern, anchors);
    let mut position = vec![usize::MAX; np];
    for (i, &p) in order.iter().enumerate() {
        position[p] = i;
    }
    // earlier-matched neighbors of each pattern vertex
    let back: Vec<Vec<usize>> = order
        .iter()
        .map(|&p| {
            pattern
                .neighbors(p)
                .iter()
                .copied()
                .filter(|&q| position[q] < position[p])
                .collect()
        })
        .collect();
    let mut search = Search {
        host,
        pattern,
        order: &order,
        back: &back,
        anchors,
        map: vec![usize::MAX; np],
        used: vec![false; host.len()],
        nodes: 0,
        budget,
    };
    if search.extend(0)? {
        Ok(Some(SubgraphWitness::from_map(pattern, search.map)))
    } else {
        Ok(None)
    }
}

fn matching_order(pattern: &Graph, anchors: &[Anchor]) -> Vec<usize> {
    let n = pattern.vertex_count();
    let grows_in_id_order = (0..n).all(|v| {
        pattern.neighbors(v).first().is_none_or(|&w| w < v)
            || pattern
                .distances_from(v)
                .iter()
                .take(v)
                .all(Option::is_none)
    });
    if anchors.is_empty() && grows_in_id_order {
        return (0..n).collect();
    }
    let mut seen = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for a in anchors {
        if !seen[a.pattern] {
            seen[a.pattern] = true;
            order.push(a.pattern);
        }
    }
    let anchored = order.clone();
    for root in anchored {
        dfs_order(pattern, root, &mut seen, &mut order);
    }
    while order.len() < n {
        let root = (0..n)
            .filter(|&v| !seen[v])
            .max_by_key(|&v| (pattern.degree(v), std::cmp::Reverse(v)))
            .unwrap();
        seen[root] = true;
        order.push(root);
        dfs_order(pattern, root, &mut seen, &mut order);
    }
    order
}

fn dfs_order(pattern: &Graph, v: usize, seen: &mut [bool], order: &mut Vec<usize>) {
    for &w in pattern.neighbors(v) {
        if !seen[w] {
            seen[w] = true;
            order.push(w);
            dfs_order(pattern, w, seen, order);
        }
    }
}

struct Search<'a> {
    host: &'a [Vec<usize>],
    pattern: &'a Graph,
    order: &'a [usize],
    back: &'a [Vec<usize>],
    anchors: &'a [Anchor],
    map: Vec<usize>,
    used: Vec<bool>,
    nodes: u64,
    budget: Option<u64>,
}

impl Search<'_> {
    fn fits(&self, i: usize, h: usize) -> bool {
        let p = self.order[i];
        !self.used[h]
            && self.host[h].len() >= self.pattern.degree(p)
            && self.back[i]
                .iter()
                .all(|&q| self.host[h].binary_search(&self.map[q]).is_ok())
    }

    fn tick(&mut self) -> Result<()> {
        self.nodes += 1;
        match self.budget {
            Some(budget) if self.nodes > budget => Err(Error::SearchBudgetExceeded { budget }),
            _ => Ok(()),
        }
    }

    fn extend(&mut self, i: usize) -> Result<bool> {
        if i == self.order.len() {
            return Ok(true);
        }
        let p = self.order[i];
        if let Some(anchor) = self.anchors.iter().find(|a| a.pattern == p) {
            return self.try_assign(i, anchor.host);
        }
        let host = self.host;
        match self.back[i].first() {
            Some(&q) => {
                for &h in &host[self.map[q]] {
                    if self.try_assign(i, h)? {
                        return Ok(true);
                    }
                }
            }
            None => {
                for h in 0..host.len() {
                    if self.try_assign(i, h)? {
                        return Ok(true);
                    }
                }
            }
        }
        Ok(false)
    }

    fn try_assign(&mut self, i: usize, h: usize) -> Result<bool> {
        if h >= self.host.len() || !self.fits(i, h) {
            return Ok(false);
        }
        self.tick()?;
        let p = self.order[i];
        self.map[p] = h;
        self.used[h] = true;
        if self.extend(i + 1)? {
            return Ok(true);
        }
        self.used[h] = false;
        self.map[p] = usize::MAX;
        Ok(false)
    }
}
