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

//! Simple undirected graphs on dense vertex ids `0..n`.

pub(crate) mod io;
mod subgraph;
mod traversal;

pub use io::{parse_edge_list, write_edge_list};
pub use subgraph::{
    contains_subgraph, contains_subgraph_with_budget, find_embedding, Anchor, SubgraphWitness,
};
pub use traversal::Bipartition;

use crate::error::{Error, Result};

/// An immutable simple graph. Neighbor lists are kept sorted ascending.
///
/// Labels are cosmetic and do not take part in equality.
#[derive(Debug, Clone, Default)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    edge_count: usize,
    labels: Option<Vec<String>>,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.adj == other.adj
    }
}

impl Eq for Graph {}

impl Graph {
    /// Builds a graph, rejecting loops, repeated edges and out-of-range ids.
    pub fn new(vertex_count: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut adj = vec![Vec::new(); vertex_count];
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= vertex_count {
                    return Err(Error::VertexOutOfRange {
                        vertex: w,
                        vertex_count,
                    });
                }
            }
            if u == v {
                return Err(Error::Loop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for (u, list) in adj.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                return Err(Error::DuplicateEdge(u.min(w[0]), u.max(w[0])));
            }
        }
        Ok(Graph {
            adj,
            edge_count: edges.len(),
            labels: None,
        })
    }

    pub fn empty(vertex_count: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); vertex_count],
            edge_count: 0,
            labels: None,
        }
    }

    /// Builds from sorted, duplicate-free adjacency lists. Callers own the
    /// invariants.
    pub(crate) fn from_sorted_adjacency(adj: Vec<Vec<usize>>) -> Self {
        let edge_count = adj.iter().map(Vec::len).sum::<usize>() / 2;
        Graph {
            adj,
            edge_count,
            labels: None,
        }
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.vertex_count() {
            return Err(Error::SizeMismatch {
                expected: self.vertex_count(),
                found: labels.len(),
            });
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn label(&self, v: usize) -> Option<&str> {
        self.labels.as_ref().map(|l| l[v].as_str())
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn adjacency(&self) -> &[Vec<usize>] {
        &self.adj
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.adj.len() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in ascending order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.vertex_count() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                vertex_count: self.vertex_count(),
            })
        }
    }

    /// The subgraph induced by `vertices`; new vertex `i` is `vertices[i]`.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Graph {
        let mut index = vec![usize::MAX; self.vertex_count()];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let adj = vertices
            .iter()
            .map(|&v| {
                let mut list: Vec<usize> = self.adj[v]
                    .iter()
                    .filter_map(|&w| (index[w] != usize::MAX).then_some(index[w]))
                    .collect();
                list.sort_unstable();
                list
            })
            .collect();
        Graph::from_sorted_adjacency(adj)
    }

    /// Disjoint union; the vertices of `other` are shifted by
    /// `self.vertex_count()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.vertex_count();
        let mut adj = self.adj.clone();
        adj.extend(
            other
                .adj
                .iter()
                .map(|list| list.iter().map(|&w| w + shift).collect()),
        );
        Graph::from_sorted_adjacency(adj)
    }

    /// Copy with the extra edges added.
    pub fn with_edges(&self, extra: &[(usize, usize)]) -> Result<Graph> {
        let mut edges: Vec<(usize, usize)> = self.edges().collect();
        edges.extend_from_slice(extra);
        Graph::new(self.vertex_count(), &edges)
    }

    /// Copy with `count` isolated vertices appended.
    pub fn with_isolated(&self, count: usize) -> Graph {
        let mut adj = self.adj.clone();
        adj.extend(std::iter::repeat_with(Vec::new).take(count));
        Graph::from_sorted_adjacency(adj)
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.vertex_count();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut i = 0;
            while i < comp.len() {
                let v = comp[i];
                i += 1;
                for &w in &self.adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// True for connected graphs, including the graph with no vertices.
    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    pub fn is_forest(&self) -> bool {
        self.edge_count + self.components().len() == self.vertex_count()
    }

    pub fn is_tree(&self) -> bool {
        self.vertex_count() > 0 && self.edge_count + 1 == self.vertex_count() && self.is_connected()
    }

    /// `P_k` for some `k >= 1`.
    pub fn is_path(&self) -> bool {
        self.is_tree() && self.max_degree() <= 2
    }

    /// `K_{1,s}` for some `s >= 1`.
    pub fn is_star(&self) -> bool {
        let n = self.vertex_count();
        n >= 2 && self.is_tree() && self.max_degree() == n - 1
    }

    /// Vertices of degree at least three.
    pub fn big_vertices(&self) -> Vec<usize> {
        (0..self.vertex_count())
            .filter(|&v| self.degree(v) >= 3)
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_edges() {
        assert_eq!(Graph::new(2, &[(0, 0)]), Err(Error::Loop(0)));
        assert_eq!(
            Graph::new(3, &[(0, 1), (1, 0)]),
            Err(Error::DuplicateEdge(0, 1))
        );
        assert!(matches!(
            Graph::new(2, &[(0, 2)]),
            Err(Error::VertexOutOfRange { vertex: 2, .. })
        ));
    }

    #[test]
    fn equality_ignores_edge_order_and_labels() {
        let a = Graph::new(3, &[(0, 1), (1, 2)]).unwrap();
        let b = Graph::new(3, &[(2, 1), (1, 0)])
            .unwrap()
            .with_labels(vec!["a".into(), "b".into(), "c".into()])
            .unwrap();
        assert_eq!(a, b);
        assert_ne!(a, Graph::new(4, &[(0, 1), (1, 2)]).unwrap());
    }

    #[test]
    fn shape_predicates() {
        let p4 = Graph::new(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert!(p4.is_path() && !p4.is_star() && p4.is_tree());
        let k13 = Graph::new(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert!(k13.is_star() && !k13.is_path());
        assert_eq!(k13.big_vertices(), vec![0]);
        let two = Graph::new(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(two.is_forest() && !two.is_tree());
        assert_eq!(two.components(), vec![vec![0, 1], vec![2, 3]]);
        let sub = p4.induced_subgraph(&[3, 2, 0]);
        assert_eq!(sub, Graph::new(3, &[(0, 1)]).unwrap());
    }
}
