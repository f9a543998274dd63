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

//! Rainbow coloring of hypergraphs without a tree skeleton.

use super::{
    find_skeleton_greedy, p_bound, q_bound, simplified_indices, Hypergraph, SkeletonWitness,
};
use crate::coloring::{Color, Coloring};
use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RainbowOutcome {
    Colored(Coloring),
    /// Every remaining vertex had degree at least `p(|V(t)|)`; the skeleton
    /// refers to vertices and hyperedge indices of the input hypergraph.
    Skeleton(SkeletonWitness),
}

/// First pair of distinct vertices sharing a hyperedge and a color, as
/// `(u, v, hyperedge)`.
pub fn rainbow_violation(h: &Hypergraph, c: &Coloring) -> Result<Option<(usize, usize, usize)>> {
    c.check_size(h.vertex_count())?;
    for (i, e) in h.edges().iter().enumerate() {
        for (a, &u) in e.iter().enumerate() {
            if let Some(&v) = e[a + 1..].iter().find(|&&v| c.color(v) == c.color(u)) {
                return Ok(Some((u, v, i)));
            }
        }
    }
    Ok(None)
}

pub fn is_rainbow(h: &Hypergraph, c: &Coloring) -> Result<bool> {
    Ok(rainbow_violation(h, c)?.is_none())
}

/// Rainbow-colors `h` with at most `q(|V(t)|, max(rank, 2))` colors, or
/// returns a `t`-skeleton.
///
/// Repeatedly deletes the smallest vertex of degree at most `p(|V(t)|) - 1`
/// and re-simplifies; vertices are then colored in reverse deletion order
/// with the smallest color unused by their co-hyperedge neighbors at the
/// time of deletion. If at some point every vertex has degree at least
/// `p(|V(t)|)`, the greedy skeleton of the remaining hypergraph is lifted
/// back to `h` and returned instead.
pub fn rainbow_coloring(h: &Hypergraph, t: &Graph) -> Result<RainbowOutcome> {
    if t.vertex_count() < 2 || !t.is_tree() {
        return Err(Error::Domain(
            "rainbow coloring needs a tree on at least two vertices".into(),
        ));
    }
    let p = p_bound(t.vertex_count())?;
    let q = q_bound(t.vertex_count(), h.rank().max(2))?;

    // working hyperedges with the index of the input hyperedge they came from
    let keep = simplified_indices(h.edges());
    let mut edges: Vec<Vec<usize>> = keep.iter().map(|&i| h.edge(i).to_vec()).collect();
    let mut origin: Vec<usize> = keep;
    let mut alive = vec![true; h.vertex_count()];
    let mut removal: Vec<(usize, Vec<usize>)> = Vec::with_capacity(h.vertex_count());

    while removal.len() < h.vertex_count() {
        let mut degree = vec![0u128; h.vertex_count()];
        for e in &edges {
            for &v in e {
                degree[v] += 1;
            }
        }
        let pick = (0..h.vertex_count()).find(|&v| alive[v] && degree[v] < p);
        let Some(v) = pick else {
            return lift_skeleton(h, t, &alive, &edges, &origin).map(RainbowOutcome::Skeleton);
        };
        let mut neighbors: Vec<usize> = edges
            .iter()
            .filter(|e| e.binary_search(&v).is_ok())
            .flat_map(|e| e.iter().copied())
            .filter(|&w| w != v)
            .collect();
        neighbors.sort_unstable();
        neighbors.dedup();
        removal.push((v, neighbors));
        alive[v] = false;
        for e in &mut edges {
            if let Ok(pos) = e.binary_search(&v) {
                e.remove(pos);
            }
        }
        let keep = simplified_indices(&edges);
        edges = keep
            .iter()
            .map(|&i| std::mem::take(&mut edges[i]))
            .collect();
        origin = keep.iter().map(|&i| origin[i]).collect();
    }

    let mut colors: Vec<Color> = vec![0; h.vertex_count()];
    for (v, neighbors) in removal.iter().rev() {
        let mut taken: Vec<Color> = neighbors
            .iter()
            .map(|&w| colors[w])
            .filter(|&c| c > 0)
            .collect();
        taken.sort_unstable();
        taken.dedup();
        let mut color: Color = 1;
        for &c in &taken {
            if c == color {
                color += 1;
            } else if c > color {
                break;
            }
        }
        if color as u128 > q {
            return Err(Error::InternalInvariant(format!(
                "rainbow color {color} exceeds q = {q}"
            )));
        }
        colors[*v] = color;
    }
    Ok(RainbowOutcome::Colored(Coloring::from_vec_unchecked(
        colors,
    )))
}

fn lift_skeleton(
    h: &Hypergraph,
    t: &Graph,
    alive: &[bool],
    edges: &[Vec<usize>],
    origin: &[usize],
) -> Result<SkeletonWitness> {
    let vertices: Vec<usize> = (0..h.vertex_count()).filter(|&v| alive[v]).collect();
    let mut index = vec![usize::MAX; h.vertex_count()];
    for (i, &v) in vertices.iter().enumerate() {
        index[v] = i;
    }
    let local = Hypergraph::new(
        vertices.len(),
        edges
            .iter()
            .map(|e| e.iter().map(|&v| index[v]).collect())
            .collect(),
    )?;
    let w = find_skeleton_greedy(&local, t)?;
    Ok(SkeletonWitness {
        vertex_map: w.vertex_map.iter().map(|&i| vertices[i]).collect(),
        edge_map: w.edge_map.iter().map(|&e| origin[e]).collect(),
        mode: w.mode,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::path;

    fn h(n: usize, edges: &[&[usize]]) -> Hypergraph {
        Hypergraph::new(n, edges.iter().map(|e| e.to_vec()).collect()).unwrap()
    }

    #[test]
    fn single_edge_needs_distinct_colors() {
        let hh = h(3, &[&[0, 1, 2]]);
        let RainbowOutcome::Colored(c) = rainbow_coloring(&hh, &path(3)).unwrap() else {
            panic!("expected a coloring");
        };
        assert_eq!(c.colors(), &[3, 2, 1]);
        assert!(is_rainbow(&hh, &c).unwrap());
        assert!(c.palette_size() as u128 <= q_bound(3, 3).unwrap());
    }

    #[test]
    fn triangle_of_pairs_yields_skeleton() {
        let hh = h(3, &[&[0, 1], &[0, 2], &[1, 2]]);
        let RainbowOutcome::Skeleton(w) = rainbow_coloring(&hh, &path(2)).unwrap() else {
            panic!("expected a skeleton");
        };
        assert!(w.is_valid(&hh, &path(2)));
        assert_eq!(w.edge_map.len(), 1);
    }

    #[test]
    fn edgeless_gets_one_color() {
        let RainbowOutcome::Colored(c) = rainbow_coloring(&h(3, &[]), &path(4)).unwrap() else {
            panic!("expected a coloring");
        };
        assert_eq!(c.colors(), &[1, 1, 1]);
    }

    #[test]
    fn lifted_skeleton_uses_input_indices() {
        // vertex 4 is deleted first; what remains is all pairs of {0,1,2,3}
        let hh = h(
            5,
            &[
                &[0, 4],
                &[0, 1],
                &[0, 2],
                &[0, 3],
                &[1, 2],
                &[1, 3],
                &[2, 3],
                &[0, 1],
            ],
        );
        let RainbowOutcome::Skeleton(w) = rainbow_coloring(&hh, &path(3)).unwrap() else {
            panic!("expected a skeleton");
        };
        assert!(w.is_valid(&hh, &path(3)));
        assert!(!w.vertex_map.contains(&4));
    }

    #[test]
    fn violation_reporting() {
        let hh = h(3, &[&[0, 1, 2]]);
        let c = Coloring::new(vec![1, 2, 1]).unwrap();
        assert_eq!(rainbow_violation(&hh, &c), Ok(Some((0, 2, 0))));
        assert!(rainbow_violation(&hh, &Coloring::new(vec![1]).unwrap()).is_err());
    }
}
