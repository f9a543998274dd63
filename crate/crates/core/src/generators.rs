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

//! Graph families, the subdivided-clique construction `G_{m,n}`, and seeded
//! random growth of F-free graphs.
//!
//! Randomness comes from `ChaCha8Rng::seed_from_u64(seed)` (rand_chacha) so
//! corpora are reproducible from their seed alone.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{find_embedding, Anchor, Graph};
use crate::par::Execution;

/// Named graph families with deterministic vertex numbering.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Family {
    /// `P_k` as `0-1-...-(k-1)`.
    Path(usize),
    /// `K_{1,s}` with center 0.
    Star(usize),
    Cycle(usize),
    Complete(usize),
    CompleteBipartite(usize, usize),
    /// Center 0 and one leg per entry, numbered leg by leg outward.
    Spider(Vec<usize>),
    /// Centers `0` and `gap` joined by a path of length `gap`, with `left`
    /// leaves on the first center and `right` on the second.
    DoubleBroom {
        gap: usize,
        left: usize,
        right: usize,
    },
}

fn domain(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}

pub fn gen_family(kind: &Family) -> Result<Graph> {
    let mut edges = Vec::new();
    let n = match *kind {
        Family::Path(k) => {
            if k == 0 {
                return Err(domain("path needs at least one vertex"));
            }
            edges.extend((1..k).map(|i| (i - 1, i)));
            k
        }
        Family::Star(s) => {
            if s == 0 {
                return Err(domain("star needs at least one leaf"));
            }
            edges.extend((1..=s).map(|i| (0, i)));
            s + 1
        }
        Family::Cycle(k) => {
            if k < 3 {
                return Err(domain("cycle needs at least three vertices"));
            }
            edges.extend((1..k).map(|i| (i - 1, i)));
            edges.push((0, k - 1));
            k
        }
        Family::Complete(k) => {
            if k == 0 {
                return Err(domain("complete graph needs a vertex"));
            }
            for u in 0..k {
                edges.extend((u + 1..k).map(|v| (u, v)));
            }
            k
        }
        Family::CompleteBipartite(a, b) => {
            if a == 0 || b == 0 {
                return Err(domain("complete bipartite graph needs two nonempty sides"));
            }
            for u in 0..a {
                edges.extend((a..a + b).map(|v| (u, v)));
            }
            a + b
        }
        Family::Spider(ref legs) => {
            if legs.is_empty() || legs.contains(&0) {
                return Err(domain(
                    "spider legs must be nonempty and of positive length",
                ));
            }
            let mut next = 1;
            for &len in legs {
                let mut prev = 0;
                for _ in 0..len {
                    edges.push((prev, next));
                    prev = next;
                    next += 1;
                }
            }
            next
        }
        Family::DoubleBroom { gap, left, right } => {
            if gap == 0 {
                return Err(domain("double broom centers must be distinct"));
            }
            edges.extend((1..=gap).map(|i| (i - 1, i)));
            let mut next = gap + 1;
            for _ in 0..left {
                edges.push((0, next));
                next += 1;
            }
            for _ in 0..right {
                edges.push((gap, next));
                next += 1;
            }
            next
        }
    };
    Graph::new(n, &edges)
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Path(k) => write!(f, "path:{k}"),
            Family::Star(s) => write!(f, "star:{s}"),
            Family::Cycle(k) => write!(f, "cycle:{k}"),
            Family::Complete(k) => write!(f, "complete:{k}"),
            Family::CompleteBipartite(a, b) => write!(f, "bipartite:{a},{b}"),
            Family::Spider(legs) => {
                let legs: Vec<String> = legs.iter().map(ToString::to_string).collect();
                write!(f, "spider:{}", legs.join(","))
            }
            Family::DoubleBroom { gap, left, right } => {
                write!(f, "broom:{gap},{left},{right}")
            }
        }
    }
}

/// Parses the `kind:params` form produced by `Display`, e.g. `spider:2,2,2`.
impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (kind, params) = s.split_once(':').unwrap_or((s, ""));
        let nums: Vec<usize> = params
            .split(',')
            .filter(|p| !p.trim().is_empty())
            .map(|p| {
                p.trim()
                    .parse()
                    .map_err(|_| domain(format!("bad family parameter `{p}`")))
            })
            .collect::<Result<_>>()?;
        let one = |name: &str| match nums[..] {
            [k] => Ok(k),
            _ => Err(domain(format!("{name} takes one parameter"))),
        };
        Ok(match kind.trim() {
            "path" => Family::Path(one("path")?),
            "star" => Family::Star(one("star")?),
            "cycle" => Family::Cycle(one("cycle")?),
            "complete" => Family::Complete(one("complete")?),
            "bipartite" => match nums[..] {
                [a, b] => Family::CompleteBipartite(a, b),
                _ => return Err(domain("bipartite takes two parameters")),
            },
            "spider" => Family::Spider(nums),
            "doublestar" => match nums[..] {
                [left, right] => Family::DoubleBroom {
                    gap: 1,
                    left,
                    right,
                },
                _ => return Err(domain("doublestar takes two parameters")),
            },
            "broom" => match nums[..] {
                [gap, left, right] => Family::DoubleBroom { gap, left, right },
                _ => return Err(domain("broom takes three parameters")),
            },
            other => return Err(domain(format!("unknown family `{other}`"))),
        })
    }
}

/// Shorthands for the common families; they panic on invalid sizes.
pub fn path(k: usize) -> Graph {
    gen_family(&Family::Path(k)).expect("valid path size")
}

pub fn star(s: usize) -> Graph {
    gen_family(&Family::Star(s)).expect("valid star size")
}

pub fn cycle(k: usize) -> Graph {
    gen_family(&Family::Cycle(k)).expect("valid cycle size")
}

pub fn complete(k: usize) -> Graph {
    gen_family(&Family::Complete(k)).expect("valid clique size")
}

pub fn spider(legs: &[usize]) -> Graph {
    gen_family(&Family::Spider(legs.to_vec())).expect("valid spider legs")
}

/// Two adjacent centers with `left` and `right` extra leaves.
pub fn double_star(left: usize, right: usize) -> Graph {
    gen_family(&Family::DoubleBroom {
        gap: 1,
        left,
        right,
    })
    .expect("valid double star")
}

/// Vertex numbering of `G_{m,n}`: hubs first, then subdivision vertices in
/// `(i, j, k)` lexicographic order. Indices here are 0-based.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GmnLayout {
    pub m: usize,
    pub n: usize,
    pub y: BTreeMap<(usize, usize, usize), usize>,
}

impl GmnLayout {
    pub fn x(&self, i: usize) -> usize {
        assert!(i < self.m);
        i
    }

    /// The `k`-th subdivision vertex between hubs `i < j`.
    pub fn y(&self, i: usize, j: usize, k: usize) -> usize {
        self.y[&(i, j, k)]
    }
}

/// `K_m` with every edge replaced by `n` internally disjoint paths of length 2.
pub fn gen_gmn(m: usize, n: usize) -> Result<(Graph, GmnLayout)> {
    if m < 2 || n < 1 {
        return Err(domain(format!(
            "G_{{m,n}} needs m >= 2 and n >= 1, got m={m}, n={n}"
        )));
    }
    let mut y = BTreeMap::new();
    let mut edges = Vec::with_capacity(n * m * (m - 1));
    let mut next = m;
    for i in 0..m {
        for j in i + 1..m {
            for k in 0..n {
                y.insert((i, j, k), next);
                edges.push((i, next));
                edges.push((j, next));
                next += 1;
            }
        }
    }
    Ok((Graph::new(next, &edges)?, GmnLayout { m, n, y }))
}

/// Uniform random labeled tree on `n` vertices by random attachment:
/// vertex `i` joins a uniform earlier vertex.
pub fn random_tree(n: usize, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let edges: Vec<_> = (1..n).map(|i| (rng.gen_range(0..i), i)).collect();
    Graph::new(n, &edges).expect("attachment tree is simple")
}

/// Result of random F-free growth.
#[derive(Debug, Clone)]
pub struct RandomFFree {
    pub graph: Graph,
    pub edges_achieved: usize,
    pub proposals: u64,
}

/// Grows an `f`-free graph on `n` vertices from the empty graph.
///
/// Each step proposes a uniformly random non-edge (rejection sampling of
/// vertex pairs from `ChaCha8Rng`) and keeps it iff the graph stays
/// `f`-free. Growth stops at `target_edges` edges or after `attempts`
/// consecutive rejections.
pub fn gen_random_ffree(
    f: &Graph,
    n: usize,
    target_edges: usize,
    seed: u64,
    attempts: usize,
) -> RandomFFree {
    grow_ffree(&Graph::empty(n), f, target_edges, seed, attempts)
}

/// Same growth as [`gen_random_ffree`] starting from `base`, which should
/// itself be `f`-free.
pub fn grow_ffree(
    base: &Graph,
    f: &Graph,
    target_edges: usize,
    seed: u64,
    attempts: usize,
) -> RandomFFree {
    let n = base.vertex_count();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut adj: Vec<Vec<usize>> = base.adjacency().to_vec();
    let mut edges = base.edge_count();
    let max_edges = n * n.saturating_sub(1) / 2;
    let mut rejections = 0;
    let mut proposals = 0;
    while edges < target_edges && edges < max_edges && rejections < attempts {
        let (u, v) = loop {
            let u = rng.gen_range(0..n);
            let v = rng.gen_range(0..n);
            if u != v && adj[u].binary_search(&v).is_err() {
                break (u, v);
            }
        };
        proposals += 1;
        insert_sorted(&mut adj[u], v);
        insert_sorted(&mut adj[v], u);
        if creates_copy(&adj, f, u, v) {
            remove_sorted(&mut adj[u], v);
            remove_sorted(&mut adj[v], u);
            rejections += 1;
        } else {
            edges += 1;
            rejections = 0;
        }
    }
    RandomFFree {
        graph: Graph::from_sorted_adjacency(adj),
        edges_achieved: edges,
        proposals,
    }
}

/// One grown graph per seed, identical to calling [`gen_random_ffree`] in a
/// loop.
pub fn random_ffree_corpus(
    f: &Graph,
    n: usize,
    target_edges: usize,
    seeds: &[u64],
    attempts: usize,
    exec: Execution,
) -> Vec<RandomFFree> {
    exec.map(seeds, |&seed| {
        gen_random_ffree(f, n, target_edges, seed, attempts)
    })
}

// Any new copy of `f` must use the edge `uv`, so only anchored searches run.
fn creates_copy(adj: &[Vec<usize>], f: &Graph, u: usize, v: usize) -> bool {
    if f.edge_count() == 0 {
        return f.vertex_count() <= adj.len();
    }
    f.edges().any(|(a, b)| {
        [(u, v), (v, u)].iter().any(|&(x, y)| {
            let anchors = [
                Anchor {
                    pattern: a,
                    host: x,
                },
                Anchor {
                    pattern: b,
                    host: y,
                },
            ];
            matches!(find_embedding(adj, f, &anchors, None), Ok(Some(_)))
        })
    })
}

fn insert_sorted(list: &mut Vec<usize>, x: usize) {
    if let Err(pos) = list.binary_search(&x) {
        list.insert(pos, x);
    }
}

fn remove_sorted(list: &mut Vec<usize>, x: usize) {
    if let Ok(pos) = list.binary_search(&x) {
        list.remove(pos);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::contains_subgraph;

    #[test]
    fn gmn_small_cases() {
        assert_eq!(
            gen_gmn(2, 1).unwrap().0,
            path(3).induced_subgraph(&[0, 2, 1])
        );
        assert_eq!(
            gen_gmn(2, 2).unwrap().0,
            cycle(4).induced_subgraph(&[0, 2, 1, 3])
        );
        let (g, layout) = gen_gmn(4, 5).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (34, 60));
        assert_eq!(layout.y(0, 1, 0), 4);
        assert!(gen_gmn(1, 3).is_err());
        assert!(gen_gmn(3, 0).is_err());
    }

    #[test]
    fn family_examples() {
        assert_eq!(gen_family(&Family::Path(4)).unwrap().edge_count(), 3);
        let s = spider(&[2, 2, 2]);
        assert_eq!((s.vertex_count(), s.degree(0)), (7, 3));
        assert_eq!(complete(5).edge_count(), 10);
        assert!(gen_family(&Family::Cycle(2)).is_err());
        assert!(gen_family(&Family::Spider(vec![2, 0])).is_err());
        for text in ["spider:2,2,1", "broom:2,2,2", "bipartite:3,3", "path:6"] {
            let fam: Family = text.parse().unwrap();
            assert_eq!(fam.to_string(), text);
        }
        assert_eq!(
            "doublestar:2,2".parse::<Family>().unwrap(),
            Family::DoubleBroom {
                gap: 1,
                left: 2,
                right: 2
            }
        );
        assert!("blob:1".parse::<Family>().is_err());
    }

    #[test]
    fn random_growth_respects_forbidden_graph() {
        let claw = star(3);
        let r = gen_random_ffree(&claw, 10, 12, 5, 200);
        assert!(r.edges_achieved <= 10);
        assert!(r.graph.max_degree() <= 2);
        assert_eq!(gen_random_ffree(&path(2), 5, 3, 1, 50).edges_achieved, 0);

        let t = spider(&[2, 2, 2]);
        let r = gen_random_ffree(&t, 40, 60, 7, 200);
        assert!(contains_subgraph(&r.graph, &t).is_none());
        let again = gen_random_ffree(&t, 40, 60, 7, 200);
        assert_eq!(r.graph, again.graph);
    }
}
