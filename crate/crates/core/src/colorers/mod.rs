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

//! Constructive star colorings: greedy coloring of the square, DFS levels,
//! and the recursive colorer for graphs without a fixed tree.

mod bound;
mod tfree;

pub use bound::{c_bound, BaseCase, BaseKind, BoundLedger, BoundLevel};
pub use tfree::{color_star_tfree, color_star_tfree_with, NotTFree, SkeletonTrace, TFreeOutcome};

use crate::coloring::{Color, Coloring};
use crate::graph::Graph;

/// Greedy proper coloring of the square in ascending vertex order. Uses at
/// most `Δ² + 1` colors and is both a star and a 2-distance coloring.
pub fn color_square_greedy(g: &Graph) -> Coloring {
    let sq = g.square();
    let mut colors: Vec<Color> = vec![0; g.vertex_count()];
    let mut mark: Vec<usize> = vec![usize::MAX; sq.max_degree() + 2];
    for v in 0..g.vertex_count() {
        for &w in sq.neighbors(v) {
            let c = colors[w] as usize;
            if c > 0 && c < mark.len() {
                mark[c] = v;
            }
        }
        let c = (1..).find(|&c| mark[c] != v).expect("a free color exists");
        colors[v] = c as Color;
    }
    Coloring::from_vec_unchecked(colors)
}

/// DFS level plus one, one DFS per component rooted at its smallest vertex.
/// A `P_k`-free graph gets at most `k - 1` colors.
pub fn color_dfs_levels(g: &Graph) -> Coloring {
    let forest = g.dfs_forest();
    Coloring::from_vec_unchecked(forest.level.iter().map(|&l| l as Color + 1).collect())
}
