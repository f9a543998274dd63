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

//! Star coloring of graphs that contain no copy of a fixed tree `T` whose
//! big vertices are pairwise at even distance.
//!
//! At each level the vertices split at degree `d = |V(T*)| * Δ(T) + |V(T)|`.
//! Low-degree vertices get a greedy coloring of their square from the first
//! palette block `1..=d²+1`. High-degree vertices get a pair: a recursive
//! coloring of their induced graph against `T` minus a leaf, and a rainbow
//! coloring of the hypergraph of their common low-degree neighbors against
//! `T*`. Pairs are packed into the second block. When the input does contain
//! `T`, the algorithm may notice, and then it reports a copy of `T`.

use super::bound::{base_case, threshold, BaseKind};
use super::{c_bound, color_dfs_levels, color_square_greedy, BoundLedger};
use crate::coloring::{check_star, Color, Coloring, Violation};
use crate::error::{Error, Result};
use crate::graph::{Graph, SubgraphWitness};
use crate::hypergraph::{build_neighbor_hypergraph, q_bound, rainbow_coloring, RainbowOutcome};
use crate::par::Execution;
use crate::tree::{check_even_tree, compute_t_star, prune_leaf, TStar};

/// A `T*`-skeleton found in the neighbor hypergraph, in graph vertex ids.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SkeletonTrace {
    /// Graph vertex for each `T*` vertex.
    pub vertices: Vec<usize>,
    /// The low-degree vertex whose neighborhood carries each `T*` edge.
    pub connectors: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NotTFree {
    /// A copy of `T` in the input, when one could be assembled.
    pub witness: Option<SubgraphWitness>,
    pub skeleton: Option<SkeletonTrace>,
    /// Set when the final check of the coloring failed.
    pub violation: Option<Violation>,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TFreeOutcome {
    Colored {
        coloring: Coloring,
        ledger: BoundLedger,
    },
    NotTFree(NotTFree),
}

pub fn color_star_tfree(g: &Graph, t: &Graph) -> Result<TFreeOutcome> {
    color_star_tfree_with(g, t, Execution::default())
}

/// As [`color_star_tfree`]; `exec` decides whether the two sides of each
/// level are colored concurrently.
pub fn color_star_tfree_with(g: &Graph, t: &Graph, exec: Execution) -> Result<TFreeOutcome> {
    if t.vertex_count() < 2 {
        return Err(Error::TooSmall("tree needs at least two vertices".into()));
    }
    check_even_tree(t)?;
    let ledger = c_bound(t)?;
    let coloring = match solve(g, t, exec)? {
        Step::Colored(c) => c,
        Step::Found(report) => {
            if let Some(w) = &report.witness {
                if !w.is_valid(g, t) {
                    return Err(Error::InternalInvariant(
                        "assembled copy of T is invalid".into(),
                    ));
                }
            }
            return Ok(TFreeOutcome::NotTFree(report));
        }
    };
    if let Some(v) = check_star(g, &coloring)? {
        return Ok(TFreeOutcome::NotTFree(NotTFree {
            witness: None,
            skeleton: None,
            detail: format!("final check failed: {v}"),
            violation: Some(v),
        }));
    }
    if coloring.palette_size() as u128 > ledger.c_value {
        return Err(Error::InternalInvariant(format!(
            "palette {} exceeds c(T) = {}",
            coloring.palette_size(),
            ledger.c_value
        )));
    }
    Ok(TFreeOutcome::Colored { coloring, ledger })
}

enum Step {
    Colored(Coloring),
    Found(NotTFree),
}

fn found(
    witness: Option<SubgraphWitness>,
    skeleton: Option<SkeletonTrace>,
    detail: String,
) -> Step {
    Step::Found(NotTFree {
        witness,
        skeleton,
        violation: None,
        detail,
    })
}

fn solve(g: &Graph, t: &Graph, exec: Execution) -> Result<Step> {
    if let Some(base) = base_case(t) {
        return Ok(match base.kind {
            BaseKind::Path => solve_path(g, t),
            BaseKind::Star => solve_star(g, t),
        });
    }
    let tstar = compute_t_star(t)?;
    let d = threshold(t, tstar.vertex_count())?;
    let (big, small): (Vec<usize>, Vec<usize>) =
        (0..g.vertex_count()).partition(|&v| g.degree(v) > d);
    let pruned = prune_leaf(t)?;

    let g_small = g.induced_subgraph(&small);
    let g_big = g.induced_subgraph(&big);
    let (phi_small, inner) = exec.join(
        || color_square_greedy(&g_small),
        || solve(&g_big, &pruned.tree, exec),
    );

    let phi1 = match inner? {
        Step::Colored(c) => c,
        Step::Found(mut report) => {
            // a copy of T' among the big vertices extends by a fresh neighbor
            report.witness = report.witness.and_then(|w| {
                let mut map = vec![usize::MAX; t.vertex_count()];
                for (i, &tv) in pruned.kept.iter().enumerate() {
                    map[tv] = big[w.vertex_map[i]];
                }
                let anchor = map[pruned.neighbor];
                let fresh = g
                    .neighbors(anchor)
                    .iter()
                    .copied()
                    .find(|x| !map.contains(x))?;
                map[pruned.removed] = fresh;
                Some(SubgraphWitness::from_vertex_map(t, map))
            });
            if report.witness.is_none() {
                report.detail = format!("{}; copy of T not assembled", report.detail);
            }
            report.skeleton = report.skeleton.map(|s| SkeletonTrace {
                vertices: s.vertices.iter().map(|&v| big[v]).collect(),
                connectors: s.connectors.iter().map(|&x| big[x]).collect(),
            });
            return Ok(Step::Found(report));
        }
    };

    let block = (d as u128) * (d as u128) + 1;
    let mut colors: Vec<Color> = vec![0; g.vertex_count()];
    for (i, &v) in small.iter().enumerate() {
        let c = phi_small.color(i);
        if c as u128 > block {
            return Err(Error::InternalInvariant(format!(
                "small-side color {c} exceeds d^2+1"
            )));
        }
        colors[v] = c;
    }
    if big.is_empty() {
        return Ok(Step::Colored(Coloring::from_vec_unchecked(colors)));
    }

    let nh = build_neighbor_hypergraph(g, &big, &small)?;
    if nh.raw.rank() > d {
        return Err(Error::InternalInvariant("hyperedge larger than d".into()));
    }
    let phi2 = match rainbow_coloring(&nh.raw, &tstar.tree)? {
        RainbowOutcome::Colored(c) => c,
        RainbowOutcome::Skeleton(sk) => {
            let tags = nh.raw.provenance().expect("neighbor hypergraph is tagged");
            let trace = SkeletonTrace {
                vertices: sk.vertex_map.iter().map(|&i| big[i]).collect(),
                connectors: sk.edge_map.iter().map(|&e| tags[e]).collect(),
            };
            let witness = expand_skeleton(g, t, &tstar, &trace);
            let detail = match witness {
                Some(_) => "T*-skeleton in the neighbor hypergraph".to_string(),
                None => {
                    "T*-skeleton in the neighbor hypergraph; copy of T not assembled".to_string()
                }
            };
            return Ok(found(witness, Some(trace), detail));
        }
    };

    let q = q_bound(tstar.vertex_count(), d)?;
    for (i, &v) in big.iter().enumerate() {
        let (a, b) = (phi1.color(i) as u128, phi2.color(i) as u128);
        let c = block + (a - 1) * q + b;
        colors[v] = Color::try_from(c).map_err(|_| Error::Overflow("product color"))?;
    }
    Ok(Step::Colored(Coloring::from_vec_unchecked(colors)))
}

fn solve_path(g: &Graph, t: &Graph) -> Step {
    let k = t.vertex_count();
    let forest = g.dfs_forest();
    let Some(deep) = (0..g.vertex_count()).find(|&v| forest.level[v] + 1 >= k) else {
        return Step::Colored(color_dfs_levels(g));
    };
    // the tree path from an ancestor of `deep` down to it
    let mut chain = vec![deep];
    while chain.len() < k {
        let up = forest.parent[*chain.last().unwrap()].expect("level at least k-1");
        chain.push(up);
    }
    let end = (0..k).find(|&v| t.degree(v) <= 1).expect("path has an end");
    let mut map = vec![0; k];
    let (mut prev, mut cur) = (usize::MAX, end);
    for &x in &chain {
        map[cur] = x;
        let next = t.neighbors(cur).iter().copied().find(|&w| w != prev);
        prev = cur;
        match next {
            Some(w) => cur = w,
            None => break,
        }
    }
    found(
        Some(SubgraphWitness::from_vertex_map(t, map)),
        None,
        format!("depth-first path on {k} vertices"),
    )
}

fn solve_star(g: &Graph, t: &Graph) -> Step {
    let s = t.vertex_count() - 1;
    let Some(v) = (0..g.vertex_count()).find(|&v| g.degree(v) >= s) else {
        return Step::Colored(color_square_greedy(g));
    };
    let center = (0..t.vertex_count())
        .find(|&x| t.degree(x) == s)
        .expect("star has a center");
    let mut leaves = g.neighbors(v).iter().copied();
    let map = (0..t.vertex_count())
        .map(|x| {
            if x == center {
                v
            } else {
                leaves.next().unwrap()
            }
        })
        .collect();
    found(
        Some(SubgraphWitness::from_vertex_map(t, map)),
        None,
        format!("vertex {v} has degree at least {s}"),
    )
}

// Even vertices of T map to the skeleton, odd vertices between two even ones
// map to connectors, and odd leaves take fresh neighbors.
fn expand_skeleton(
    g: &Graph,
    t: &Graph,
    tstar: &TStar,
    trace: &SkeletonTrace,
) -> Option<SubgraphWitness> {
    let mut map = vec![usize::MAX; t.vertex_count()];
    for (i, &tv) in tstar.original.iter().enumerate() {
        map[tv] = trace.vertices[i];
    }
    let star_index = |tv: usize| tstar.original.binary_search(&tv).ok();
    for (e, (a, b)) in tstar.tree.edges().enumerate() {
        let (ta, tb) = (tstar.original[a], tstar.original[b]);
        let mid = t
            .neighbors(ta)
            .iter()
            .copied()
            .find(|&m| t.has_edge(m, tb))?;
        map[mid] = trace.connectors[e];
    }
    for tv in 0..t.vertex_count() {
        if map[tv] != usize::MAX {
            continue;
        }
        let parent = t
            .neighbors(tv)
            .iter()
            .copied()
            .find(|&p| star_index(p).is_some())?;
        let host = map[parent];
        let fresh = g
            .neighbors(host)
            .iter()
            .copied()
            .find(|x| !map.contains(x))?;
        map[tv] = fresh;
    }
    let w = SubgraphWitness::from_vertex_map(t, map);
    w.is_valid(g, t).then_some(w)
}
