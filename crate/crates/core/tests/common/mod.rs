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

#![allow(dead_code)]

use proptest::prelude::*;
use starcolor::coloring::Coloring;
use starcolor::Graph;

/// Graph on `lo..=hi` vertices, each pair present independently.
pub fn graph(lo: usize, hi: usize) -> impl Strategy<Value = Graph> {
    (lo..=hi).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * n.saturating_sub(1) / 2).prop_map(
            move |bits| {
                let mut edges = Vec::new();
                let mut it = bits.into_iter();
                for u in 0..n {
                    for v in u + 1..n {
                        if it.next().unwrap() {
                            edges.push((u, v));
                        }
                    }
                }
                Graph::new(n, &edges).unwrap()
            },
        )
    })
}

/// Graph together with a coloring drawn from `1..=k`.
pub fn colored_graph(lo: usize, hi: usize, k: u64) -> impl Strategy<Value = (Graph, Coloring)> {
    graph(lo, hi).prop_flat_map(move |g| {
        let n = g.vertex_count();
        proptest::collection::vec(1..=k, n)
            .prop_map(move |c| (g.clone(), Coloring::new(c).unwrap()))
    })
}

/// Graph with a greedy proper coloring from a random vertex priority.
pub fn properly_colored(lo: usize, hi: usize) -> impl Strategy<Value = (Graph, Coloring)> {
    graph(lo, hi).prop_flat_map(|g| {
        let n = g.vertex_count();
        proptest::collection::vec(any::<u8>(), n).prop_map(move |keys| {
            let mut order: Vec<usize> = (0..n).collect();
            order.sort_by_key(|&v| (keys[v], v));
            let mut colors = vec![0u64; n];
            for v in order {
                let mut c = 1;
                while g.neighbors(v).iter().any(|&w| colors[w] == c) {
                    c += 1;
                }
                colors[v] = c;
            }
            (g.clone(), Coloring::new(colors).unwrap())
        })
    })
}

/// Tries every injection of the pattern vertices into the host.
pub fn naive_contains(host: &Graph, pattern: &Graph) -> bool {
    fn go(host: &Graph, pattern: &Graph, map: &mut Vec<usize>, used: &mut [bool]) -> bool {
        let i = map.len();
        if i == pattern.vertex_count() {
            return pattern.edges().all(|(a, b)| host.has_edge(map[a], map[b]));
        }
        for h in 0..host.vertex_count() {
            if !used[h] {
                used[h] = true;
                map.push(h);
                if go(host, pattern, map, used) {
                    return true;
                }
                map.pop();
                used[h] = false;
            }
        }
        false
    }
    pattern.vertex_count() <= host.vertex_count()
        && go(
            host,
            pattern,
            &mut Vec::new(),
            &mut vec![false; host.vertex_count()],
        )
}

/// All shortest-path distances by Floyd-Warshall.
pub fn all_distances(g: &Graph) -> Vec<Vec<Option<usize>>> {
    let n = g.vertex_count();
    let mut d = vec![vec![None; n]; n];
    for (v, row) in d.iter_mut().enumerate() {
        row[v] = Some(0);
        for &w in g.neighbors(v) {
            row[w] = Some(1);
        }
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if let (Some(a), Some(b)) = (d[i][k], d[k][j]) {
                    if d[i][j].is_none_or(|c| a + b < c) {
                        d[i][j] = Some(a + b);
                    }
                }
            }
        }
    }
    d
}

/// Every coloring of `g` with colors `1..=k`, brute force.
pub fn all_colorings(n: usize, k: u64) -> Vec<Vec<u64>> {
    let mut out = vec![vec![]];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|c| {
                (1..=k).map(move |x| {
                    let mut c = c.clone();
                    c.push(x);
                    c
                })
            })
            .collect();
    }
    out
}

/// Replaces each edge by a path of length two; all original vertices end up
/// pairwise at even distance.
pub fn subdivide(g: &Graph) -> Graph {
    let n = g.vertex_count();
    let mut edges = Vec::new();
    for (i, (u, v)) in g.edges().enumerate() {
        edges.push((u, n + i));
        edges.push((v, n + i));
    }
    Graph::new(n + g.edge_count(), &edges).unwrap()
}

/// Forests whose big vertices are pairwise at even distance: subdivided
/// random trees, optionally with a pendant path, plus path components.
pub fn even_forest() -> impl Strategy<Value = Graph> {
    (
        proptest::collection::vec((1usize..7, any::<u64>()), 1..3),
        proptest::collection::vec(1usize..4, 0..3),
    )
        .prop_map(|(trees, paths)| {
            let mut g = Graph::empty(0);
            for (n, seed) in trees {
                g = g.disjoint_union(&subdivide(&starcolor::generators::random_tree(n, seed)));
            }
            for k in paths {
                g = g.disjoint_union(&starcolor::generators::path(k));
            }
            g
        })
}

/// Trees with the even-distance condition and at least two vertices.
pub fn even_tree() -> impl Strategy<Value = Graph> {
    (2usize..7, any::<u64>(), 0usize..3).prop_map(|(n, seed, tail)| {
        let t = subdivide(&starcolor::generators::random_tree(n, seed));
        // a pendant path at a leaf keeps every big vertex where it was
        let leaf = (0..t.vertex_count()).find(|&v| t.degree(v) == 1).unwrap();
        let base = t.vertex_count();
        let mut edges: Vec<(usize, usize)> = Vec::new();
        let mut prev = leaf;
        for i in 0..tail {
            edges.push((prev, base + i));
            prev = base + i;
        }
        t.with_isolated(tail).with_edges(&edges).unwrap()
    })
}

/// Hypergraph on `1..=max_n` vertices with up to `max_e` hyperedges of size
/// `1..=max_rank`.
pub fn hypergraph(
    max_n: usize,
    max_e: usize,
    max_rank: usize,
) -> impl Strategy<Value = starcolor::hypergraph::Hypergraph> {
    (1..=max_n).prop_flat_map(move |n| {
        proptest::collection::vec(
            proptest::collection::btree_set(0..n, 1..=max_rank.min(n)),
            0..=max_e,
        )
        .prop_map(move |edges| {
            starcolor::hypergraph::Hypergraph::new(
                n,
                edges.into_iter().map(|e| e.into_iter().collect()).collect(),
            )
            .unwrap()
        })
    })
}
