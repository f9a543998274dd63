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

use super::Graph;
use crate::error::{Error, Result};

/// A two-coloring of a bipartite graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bipartition {
    /// Side (0 or 1) of every vertex.
    pub side: Vec<u8>,
    pub parts: [Vec<usize>; 2],
}

/// Depth-first spanning forest, one tree per component rooted at the
/// component's smallest vertex.
#[derive(Debug, Clone)]
pub(crate) struct DfsForest {
    pub level: Vec<usize>,
    pub parent: Vec<Option<usize>>,
}

impl Graph {
    /// BFS distances from `source`; `None` marks another component.
    pub fn distances_from(&self, source: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.vertex_count()];
        dist[source] = Some(0);
        let mut queue = std::collections::VecDeque::from([source]);
        while let Some(v) = queue.pop_front() {
            let dv = dist[v].unwrap();
            for &w in self.neighbors(v) {
                if dist[w].is_none() {
                    dist[w] = Some(dv + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Shortest-path length, `None` when `u` and `v` are disconnected.
    pub fn distance(&self, u: usize, v: usize) -> Result<Option<usize>> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        Ok(self.distances_from(u)[v])
    }

    /// The square: same vertices, `uv` an edge iff `1 <= dist(u, v) <= 2`.
    pub fn square(&self) -> Graph {
        let n = self.vertex_count();
        let mut mark = vec![usize::MAX; n];
        let adj = (0..n)
            .map(|v| {
                mark[v] = v;
                let mut list = Vec::new();
                for &w in self.neighbors(v) {
                    if mark[w] != v {
                        mark[w] = v;
                        list.push(w);
                    }
                    for &x in self.neighbors(w) {
                        if mark[x] != v {
                            mark[x] = v;
                            list.push(x);
                        }
                    }
                }
                list.sort_unstable();
                list
            })
            .collect();
        Graph::from_sorted_adjacency(adj)
    }

    /// Depth-first levels from `root`, visiting neighbors in ascending order.
    ///
    /// Fails with [`Error::DisconnectedGraph`] when some vertex is not
    /// reachable from `root`.
    pub fn dfs_levels(&self, root: usize) -> Result<Vec<usize>> {
        self.check_vertex(root)?;
        let mut level = vec![usize::MAX; self.vertex_count()];
        let mut parent = vec![None; self.vertex_count()];
        self.dfs_from(root, &mut level, &mut parent);
        match level.iter().position(|&l| l == usize::MAX) {
            Some(unreachable) => Err(Error::DisconnectedGraph { unreachable }),
            None => Ok(level),
        }
    }

    pub(crate) fn dfs_forest(&self) -> DfsForest {
        let n = self.vertex_count();
        let mut level = vec![usize::MAX; n];
        let mut parent = vec![None; n];
        for root in 0..n {
            if level[root] == usize::MAX {
                self.dfs_from(root, &mut level, &mut parent);
            }
        }
        DfsForest { level, parent }
    }

    fn dfs_from(&self, root: usize, level: &mut [usize], parent: &mut [Option<usize>]) {
        level[root] = 0;
        // (vertex, index of the next neighbor to try)
        let mut stack = vec![(root, 0usize)];
        while let Some(top) = stack.last_mut() {
            let (v, next) = *top;
            match self.neighbors(v).get(next) {
                Some(&w) => {
                    top.1 += 1;
                    if level[w] == usize::MAX {
                        level[w] = level[v] + 1;
                        parent[w] = Some(v);
                        stack.push((w, 0));
                    }
                }
                None => {
                    stack.pop();
                }
            }
        }
    }

    /// A bipartition found by BFS per component, or `None` if there is an
    /// odd cycle. The smallest vertex of each component lands on side 0.
    pub fn bipartition(&self) -> Option<Bipartition> {
        let n = self.vertex_count();
        let mut side = vec![u8::MAX; n];
        for s in 0..n {
            if side[s] != u8::MAX {
                continue;
            }
            side[s] = 0;
            let mut queue = std::collections::VecDeque::from([s]);
            while let Some(v) = queue.pop_front() {
                for &w in self.neighbors(v) {
                    if side[w] == u8::MAX {
                        side[w] = 1 - side[v];
                        queue.push_back(w);
                    } else if side[w] == side[v] {
                        return None;
                    }
                }
            }
        }
        let mut parts = [Vec::new(), Vec::new()];
        for (v, &s) in side.iter().enumerate() {
            parts[s as usize].push(v);
        }
        Some(Bipartition { side, parts })
    }
}
