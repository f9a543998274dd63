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

//! Hypergraphs with nested-edge simplification, tree skeletons and rainbow
//! coloring, plus the degree and palette bounds that drive them.

mod io;
mod rainbow;
mod skeleton;

pub use io::{parse_hypergraph, write_hypergraph};
pub use rainbow::{is_rainbow, rainbow_coloring, rainbow_violation, RainbowOutcome};
pub use skeleton::{find_skeleton_exhaustive, find_skeleton_greedy, SkeletonMode, SkeletonWitness};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Hyperedges are stored as sorted vertex lists.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Hypergraph {
    vertex_count: usize,
    edges: Vec<Vec<usize>>,
    provenance: Option<Vec<usize>>,
}

impl Hypergraph {
    pub fn new(vertex_count: usize, edges: Vec<Vec<usize>>) -> Result<Self> {
        let mut sorted = Vec::with_capacity(edges.len());
        for mut e in edges {
            e.sort_unstable();
            if let Some(&v) = e.iter().find(|&&v| v >= vertex_count) {
                return Err(Error::VertexOutOfRange {
                    vertex: v,
                    vertex_count,
                });
            }
            if let Some(w) = e.windows(2).find(|w| w[0] == w[1]) {
                return Err(Error::Domain(format!(
                    "vertex {} repeated in a hyperedge",
                    w[0]
                )));
            }
            sorted.push(e);
        }
        Ok(Hypergraph {
            vertex_count,
            edges: sorted,
            provenance: None,
        })
    }

    /// Attaches one external tag per hyperedge.
    pub fn with_provenance(mut self, tags: Vec<usize>) -> Result<Self> {
        if tags.len() != self.edges.len() {
            return Err(Error::SizeMismatch {
                expected: self.edges.len(),
                found: tags.len(),
            });
        }
        self.provenance = Some(tags);
        Ok(self)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Vec<usize>] {
        &self.edges
    }

    pub fn edge(&self, i: usize) -> &[usize] {
        &self.edges[i]
    }

    pub fn provenance(&self) -> Option<&[usize]> {
        self.provenance.as_deref()
    }

    /// Largest hyperedge size, 0 without edges.
    pub fn rank(&self) -> usize {
        self.edges.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.vertex_count];
        for e in &self.edges {
            for &v in e {
                deg[v] += 1;
            }
        }
        deg
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges
            .iter()
            .filter(|e| e.binary_search(&v).is_ok())
            .count()
    }

    /// Minimum degree, `None` for the hypergraph without vertices.
    pub fn min_degree(&self) -> Option<usize> {
        self.degrees().into_iter().min()
    }

    /// Hyperedge indices containing each vertex, ascending.
    pub fn incidence(&self) -> Vec<Vec<usize>> {
        let mut inc = vec![Vec::new(); self.vertex_count];
        for (i, e) in self.edges.iter().enumerate() {
            for &v in e {
                inc[v].push(i);
            }
        }
        inc
    }

    /// No hyperedge is contained in another one (duplicates count as nested).
    pub fn is_simple(&self) -> bool {
        (0..self.edges.len()).all(|i| {
            (0..self.edges.len()).all(|j| i == j || !is_subset(&self.edges[i], &self.edges[j]))
        })
    }

    /// Drops every hyperedge of size at most one and every hyperedge
    /// contained in another; among equal hyperedges the first survives.
    /// Survivors keep their order and provenance.
    pub fn simplify(&self) -> Hypergraph {
        let keep = simplified_indices(&self.edges);
        Hypergraph {
            vertex_count: self.vertex_count,
            edges: keep.iter().map(|&i| self.edges[i].clone()).collect(),
            provenance: self
                .provenance
                .as_ref()
                .map(|p| keep.iter().map(|&i| p[i]).collect()),
        }
    }
}

/// Indices of the hyperedges that survive simplification.
pub(crate) fn simplified_indices(edges: &[Vec<usize>]) -> Vec<usize> {
    (0..edges.len())
        .filter(|&i| {
            let e = &edges[i];
            e.len() >= 2
                && edges.iter().enumerate().all(|(j, other)| {
                    j == i || !is_subset(e, other) || (e.len() == other.len() && i < j)
                })
        })
        .collect()
}

/// Both slices sorted ascending.
pub(crate) fn is_subset(small: &[usize], big: &[usize]) -> bool {
    if small.len() > big.len() {
        return false;
    }
    let mut it = big.iter();
    small.iter().all(|x| it.any(|y| y == x))
}

/// `C(n, k)` with overflow checking.
fn binomial(n: u128, k: u128) -> Result<u128> {
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc
            .checked_mul(n - i)
            .ok_or(Error::Overflow("binomial coefficient"))?
            / (i + 1);
    }
    Ok(acc)
}

/// Minimum degree that forces a skeleton of every tree on `n` vertices:
/// `p(2) = 1` and `p(n) = C(n-2, ceil((n-2)/2)) + n - 1`.
pub fn p_bound(n: usize) -> Result<u128> {
    match n {
        0 | 1 => Err(Error::Domain(format!("p(n) needs n >= 2, got {n}"))),
        2 => Ok(1),
        _ => {
            let m = (n - 2) as u128;
            Ok(binomial(m, m.div_ceil(2))? + n as u128 - 1)
        }
    }
}

/// Rainbow palette size for skeleton-free hypergraphs of rank at most `r`:
/// `q(n, r) = (p(n) - 1)(r - 1) + 1`.
pub fn q_bound(n: usize, r: usize) -> Result<u128> {
    if r < 2 {
        return Err(Error::Domain(format!("q(n, r) needs r >= 2, got {r}")));
    }
    (p_bound(n)? - 1)
        .checked_mul(r as u128 - 1)
        .and_then(|x| x.checked_add(1))
        .ok_or(Error::Overflow("q(n, r)"))
}

/// The hypergraph on the big vertices whose hyperedges are the big
/// neighborhoods of the small vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NeighborHypergraph {
    /// One hyperedge per small vertex with a big neighbor, tagged with it.
    pub raw: Hypergraph,
    pub simplified: Hypergraph,
    /// Graph vertex behind each hypergraph vertex.
    pub big_index: Vec<usize>,
}

pub fn build_neighbor_hypergraph(
    g: &Graph,
    v_big: &[usize],
    v_small: &[usize],
) -> Result<NeighborHypergraph> {
    let n = g.vertex_count();
    let mut index = vec![usize::MAX; n];
    let mut small = vec![false; n];
    for (i, &v) in v_big.iter().enumerate() {
        g.check_vertex(v)?;
        if index[v] != usize::MAX {
            return Err(Error::InvalidPartition(format!("vertex {v} repeated")));
        }
        index[v] = i;
    }
    for &x in v_small {
        g.check_vertex(x)?;
        if index[x] != usize::MAX || small[x] {
            return Err(Error::InvalidPartition(format!("vertex {x} repeated")));
        }
        small[x] = true;
    }
    if v_big.len() + v_small.len() != n {
        return Err(Error::InvalidPartition(
            "parts do not cover the graph".into(),
        ));
    }
    let mut small_sorted = v_small.to_vec();
    small_sorted.sort_unstable();
    let mut edges = Vec::new();
    let mut tags = Vec::new();
    for x in small_sorted {
        let e: Vec<usize> = g
            .neighbors(x)
            .iter()
            .filter_map(|&w| (index[w] != usize::MAX).then_some(index[w]))
            .collect();
        if !e.is_empty() {
            edges.push(e);
            tags.push(x);
        }
    }
    let raw = Hypergraph::new(v_big.len(), edges)?.with_provenance(tags)?;
    let simplified = raw.simplify();
    Ok(NeighborHypergraph {
        raw,
        simplified,
        big_index: v_big.to_vec(),
    })
}
