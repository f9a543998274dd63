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

//! Validators for proper, H-avoiding, star, acyclic and 2-distance
//! colorings. Every validator checks properness first; bicolored searches
//! walk color pairs in ascending order and report the first hit.

use std::collections::BTreeMap;
use std::fmt;

use super::{Color, Coloring};
use crate::error::{Error, Result};
use crate::generators::path;
use crate::graph::{contains_subgraph_with_budget, Graph, SubgraphWitness};
use crate::par::Execution;

/// Budget and strategy for bicolored-pattern searches. The budget applies
/// to each color pair separately, so results do not depend on scheduling.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SearchOptions {
    pub budget: Option<u64>,
    pub execution: Execution,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BicoloredWitness {
    pub colors: (Color, Color),
    /// Embedding of the pattern into the host, in host vertex ids.
    pub embedding: SubgraphWitness,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    MonochromaticEdge {
        u: usize,
        v: usize,
    },
    Bicolored(BicoloredWitness),
    BicoloredCycle {
        colors: (Color, Color),
        cycle: Vec<usize>,
    },
    /// Two vertices at distance at most two share a color.
    CloseSameColor {
        u: usize,
        v: usize,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let list = |vs: &[usize]| {
            vs.iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join(" ")
        };
        match self {
            Violation::MonochromaticEdge { u, v } => write!(f, "monochromatic edge {u} {v}"),
            Violation::Bicolored(w) => write!(
                f,
                "bicolored pattern in colors {} {} at vertices {}",
                w.colors.0,
                w.colors.1,
                list(&w.embedding.vertex_map)
            ),
            Violation::BicoloredCycle { colors, cycle } => write!(
                f,
                "bicolored cycle in colors {} {} through {}",
                colors.0,
                colors.1,
                list(cycle)
            ),
            Violation::CloseSameColor { u, v } => {
                write!(f, "vertices {u} {v} within distance two share a color")
            }
        }
    }
}

/// The coloring requirement to check or to solve for.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Mode {
    Proper,
    Star,
    Acyclic,
    Dist2,
    /// No bicolored copy of the given connected graph.
    Avoid(Graph),
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Proper => "proper",
            Mode::Star => "star",
            Mode::Acyclic => "acyclic",
            Mode::Dist2 => "dist2",
            Mode::Avoid(_) => "avoid",
        })
    }
}

/// Smallest monochromatic edge, if any.
pub fn improper_edge(g: &Graph, c: &Coloring) -> Result<Option<(usize, usize)>> {
    c.check_size(g.vertex_count())?;
    Ok(g.edges().find(|&(u, v)| c.color(u) == c.color(v)))
}

pub fn check_proper(g: &Graph, c: &Coloring) -> Result<Option<Violation>> {
    Ok(improper_edge(g, c)?.map(|(u, v)| Violation::MonochromaticEdge { u, v }))
}

fn classes(c: &Coloring) -> BTreeMap<Color, Vec<usize>> {
    let mut map: BTreeMap<Color, Vec<usize>> = BTreeMap::new();
    for (v, &col) in c.colors().iter().enumerate() {
        map.entry(col).or_default().push(v);
    }
    map
}

// Color pairs joined by at least one edge, ascending.
fn edge_color_pairs(g: &Graph, c: &Coloring) -> Vec<(Color, Color)> {
    let mut pairs: Vec<(Color, Color)> = g
        .edges()
        .map(|(u, v)| (c.color(u), c.color(v)))
        .filter(|(a, b)| a != b)
        .map(|(a, b)| (a.min(b), a.max(b)))
        .collect();
    pairs.sort_unstable();
    pairs.dedup();
    pairs
}

fn merged(a: &[usize], b: &[usize]) -> Vec<usize> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    out.extend_from_slice(a);
    out.extend_from_slice(b);
    out.sort_unstable();
    out
}

/// First bicolored copy of `h`, with default [`SearchOptions`].
pub fn find_bicolored(g: &Graph, c: &Coloring, h: &Graph) -> Result<Option<BicoloredWitness>> {
    find_bicolored_with(g, c, h, &SearchOptions::default())
}

/// First bicolored copy of `h` over color pairs in ascending order.
pub fn find_bicolored_with(
    g: &Graph,
    c: &Coloring,
    h: &Graph,
    opts: &SearchOptions,
) -> Result<Option<BicoloredWitness>> {
    c.check_size(g.vertex_count())?;
    if h.edge_count() == 0 {
        return Err(Error::Domain("pattern needs at least one edge".into()));
    }
    let classes = classes(c);
    let pairs = edge_color_pairs(g, c);
    let hit = opts.execution.find_map_first(&pairs, |&(a, b)| {
        let vertices = merged(&classes[&a], &classes[&b]);
        if vertices.len() < h.vertex_count() {
            return None;
        }
        let sub = g.induced_subgraph(&vertices);
        if sub.edge_count() < h.edge_count() {
            return None;
        }
        match contains_subgraph_with_budget(&sub, h, opts.budget) {
            Ok(Some(w)) => Some(Ok(BicoloredWitness {
                colors: (a, b),
                embedding: w.mapped(&vertices),
            })),
            Ok(None) => None,
            Err(e) => Some(Err(e)),
        }
    });
    hit.transpose()
}

/// Proper and free of bicolored copies of the connected graph `h`.
pub fn check_avoiding(g: &Graph, c: &Coloring, h: &Graph) -> Result<Option<Violation>> {
    check_avoiding_with(g, c, h, &SearchOptions::default())
}

pub fn check_avoiding_with(
    g: &Graph,
    c: &Coloring,
    h: &Graph,
    opts: &SearchOptions,
) -> Result<Option<Violation>> {
    if !h.is_connected() {
        return Err(Error::Disconnected);
    }
    if let Some(v) = check_proper(g, c)? {
        return Ok(Some(v));
    }
    Ok(find_bicolored_with(g, c, h, opts)?.map(Violation::Bicolored))
}

/// Proper with no bicolored `P_4`, i.e. every two color classes induce a
/// star forest.
pub fn check_star(g: &Graph, c: &Coloring) -> Result<Option<Violation>> {
    check_avoiding(g, c, &path(4))
}

/// Proper with every two color classes inducing a forest.
pub fn check_acyclic(g: &Graph, c: &Coloring) -> Result<Option<Violation>> {
    check_acyclic_with(g, c, Execution::default())
}

pub fn check_acyclic_with(g: &Graph, c: &Coloring, exec: Execution) -> Result<Option<Violation>> {
    if let Some(v) = check_proper(g, c)? {
        return Ok(Some(v));
    }
    let classes = classes(c);
    let pairs = edge_color_pairs(g, c);
    Ok(exec.find_map_first(&pairs, |&(a, b)| {
        let vertices = merged(&classes[&a], &classes[&b]);
        let sub = g.induced_subgraph(&vertices);
        first_cycle(&sub).map(|cycle| Violation::BicoloredCycle {
            colors: (a, b),
            cycle: cycle.into_iter().map(|v| vertices[v]).collect(),
        })
    }))
}

// Adds edges in ascending order and returns the cycle closed by the first
// edge whose endpoints are already connected.
fn first_cycle(g: &Graph) -> Option<Vec<usize>> {
    let n = g.vertex_count();
    let mut parent: Vec<usize> = (0..n).collect();
    fn root(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    let mut forest: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (u, v) in g.edges() {
        let (ru, rv) = (root(&mut parent, u), root(&mut parent, v));
        if ru == rv {
            // path v -> u inside the forest, then close with uv
            let mut prev = vec![usize::MAX; n];
            prev[v] = v;
            let mut queue = std::collections::VecDeque::from([v]);
            while let Some(x) = queue.pop_front() {
                for &y in &forest[x] {
                    if prev[y] == usize::MAX {
                        prev[y] = x;
                        queue.push_back(y);
                    }
                }
            }
            let mut cycle = vec![u];
            let mut x = u;
            while x != v {
                x = prev[x];
                cycle.push(x);
            }
            return Some(cycle);
        }
        parent[ru] = rv;
        forest[u].push(v);
        forest[v].push(u);
    }
    None
}

/// Proper coloring of the square: no two vertices within distance two share
/// a color.
pub fn check_dist2(g: &Graph, c: &Coloring) -> Result<Option<Violation>> {
    Ok(improper_edge(&g.square(), c)?.map(|(u, v)| Violation::CloseSameColor { u, v }))
}

pub fn check_mode(g: &Graph, c: &Coloring, mode: &Mode) -> Result<Option<Violation>> {
    match mode {
        Mode::Proper => check_proper(g, c),
        Mode::Star => check_star(g, c),
        Mode::Acyclic => check_acyclic(g, c),
        Mode::Dist2 => check_dist2(g, c),
        Mode::Avoid(h) => check_avoiding(g, c, h),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete, cycle, path, star};

    fn col(c: &[Color]) -> Coloring {
        Coloring::new(c.to_vec()).unwrap()
    }

    #[test]
    fn proper_examples() {
        let k2 = path(2);
        assert_eq!(
            check_proper(&k2, &col(&[1, 1])).unwrap(),
            Some(Violation::MonochromaticEdge { u: 0, v: 1 })
        );
        assert_eq!(check_proper(&k2, &col(&[1, 2])).unwrap(), None);
        assert_eq!(check_proper(&cycle(4), &col(&[1, 2, 1, 2])).unwrap(), None);
        assert_eq!(
            check_proper(&k2, &col(&[1])),
            Err(Error::SizeMismatch {
                expected: 2,
                found: 1
            })
        );
    }

    #[test]
    fn bicolored_examples() {
        let w = find_bicolored(&cycle(4), &col(&[1, 2, 1, 2]), &path(4))
            .unwrap()
            .unwrap();
        assert_eq!(w.colors, (1, 2));
        assert!(w.embedding.is_valid(&cycle(4), &path(4)));
        assert_eq!(
            find_bicolored(&path(4), &col(&[1, 2, 3, 1]), &path(4)).unwrap(),
            None
        );
        assert!(find_bicolored(&path(3), &col(&[1, 2, 1]), &path(3))
            .unwrap()
            .is_some());
        assert!(find_bicolored(&path(3), &col(&[1, 2, 1]), &Graph::empty(2)).is_err());
    }

    #[test]
    fn star_examples() {
        let v = check_star(&path(4), &col(&[1, 2, 1, 2])).unwrap().unwrap();
        let Violation::Bicolored(w) = v else { panic!() };
        let mut verts = w.embedding.vertex_map.clone();
        verts.sort_unstable();
        assert_eq!(verts, vec![0, 1, 2, 3]);
        assert_eq!(check_star(&path(4), &col(&[1, 2, 3, 1])).unwrap(), None);
        assert_eq!(
            check_star(&complete(5), &col(&[1, 2, 3, 4, 5])).unwrap(),
            None
        );
        assert!(matches!(
            check_star(&path(2), &col(&[4, 4])).unwrap(),
            Some(Violation::MonochromaticEdge { .. })
        ));
    }

    #[test]
    fn acyclic_examples() {
        let v = check_acyclic(&cycle(4), &col(&[1, 2, 1, 2]))
            .unwrap()
            .unwrap();
        let Violation::BicoloredCycle { colors, mut cycle } = v else {
            panic!()
        };
        assert_eq!(colors, (1, 2));
        cycle.sort_unstable();
        assert_eq!(cycle, vec![0, 1, 2, 3]);
        assert_eq!(
            check_acyclic(&crate::generators::cycle(4), &col(&[1, 2, 1, 3])).unwrap(),
            None
        );
        let tree = crate::generators::spider(&[2, 2, 2]);
        assert_eq!(
            check_acyclic(&tree, &col(&[1, 2, 1, 2, 1, 2, 1])).unwrap(),
            None
        );
    }

    #[test]
    fn dist2_examples() {
        assert_eq!(
            check_dist2(&path(3), &col(&[1, 2, 1])).unwrap(),
            Some(Violation::CloseSameColor { u: 0, v: 2 })
        );
        assert_eq!(check_dist2(&cycle(4), &col(&[1, 2, 3, 4])).unwrap(), None);
        assert_eq!(check_dist2(&star(3), &col(&[1, 2, 3, 4])).unwrap(), None);
    }

    #[test]
    fn avoiding_requires_connected_pattern() {
        let two = path(2).disjoint_union(&path(2));
        assert_eq!(
            check_avoiding(&path(4), &col(&[1, 2, 3, 1]), &two),
            Err(Error::Disconnected)
        );
        let v = check_avoiding(&cycle(4), &col(&[1, 2, 1, 2]), &cycle(4)).unwrap();
        assert!(matches!(v, Some(Violation::Bicolored(_))));
    }
}
