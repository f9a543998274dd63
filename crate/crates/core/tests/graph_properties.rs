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

mod common;

use common::{all_distances, graph, naive_contains};
use proptest::prelude::*;
use starcolor::colorers::color_dfs_levels;
use starcolor::coloring::{check_dist2, check_proper, check_star, find_bicolored, Coloring};
use starcolor::generators::{double_star, gen_gmn, path, spider};
use starcolor::graph::{
    contains_subgraph, contains_subgraph_with_budget, parse_edge_list, write_edge_list,
};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn subgraph_search_matches_naive_oracle(host in graph(0, 7), pattern in graph(1, 4)) {
        let found = contains_subgraph(&host, &pattern);
        prop_assert_eq!(found.is_some(), naive_contains(&host, &pattern));
        if let Some(w) = found {
            prop_assert!(w.is_valid(&host, &pattern));
        }
    }

    #[test]
    fn distances_match_floyd_warshall(g in graph(1, 9)) {
        let d = all_distances(&g);
        for u in 0..g.vertex_count() {
            prop_assert_eq!(&g.distances_from(u), &d[u]);
            for v in 0..g.vertex_count() {
                prop_assert_eq!(g.distance(u, v).unwrap(), g.distance(v, u).unwrap());
                for w in 0..g.vertex_count() {
                    if let (Some(a), Some(b), Some(c)) = (d[u][v], d[v][w], d[u][w]) {
                        prop_assert!(c <= a + b);
                    }
                }
            }
        }
    }

    #[test]
    fn square_joins_pairs_within_distance_two(g in graph(0, 9)) {
        let sq = g.square();
        let d = all_distances(&g);
        for (u, row) in d.iter().enumerate() {
            for (v, dist) in row.iter().enumerate() {
                let close = u != v && dist.is_some_and(|x| x <= 2);
                prop_assert_eq!(sq.has_edge(u, v), close);
            }
        }
    }

    #[test]
    fn dfs_levels_are_proper(g in graph(1, 12)) {
        let c = color_dfs_levels(&g);
        prop_assert_eq!(check_proper(&g, &c).unwrap(), None);
        prop_assert_eq!(check_star(&g, &c).unwrap(), None);
        if g.is_connected() {
            let levels = g.dfs_levels(0).unwrap();
            for (u, v) in g.edges() {
                prop_assert_ne!(levels[u], levels[v]);
            }
        }
    }

    #[test]
    fn bipartition_is_consistent(g in graph(1, 9)) {
        match g.bipartition() {
            Some(b) => {
                for (u, v) in g.edges() {
                    prop_assert_ne!(b.side[u], b.side[v]);
                }
            }
            None => {
                // some odd cycle: no proper 2-coloring exists
                let two = common::all_colorings(g.vertex_count(), 2)
                    .into_iter()
                    .any(|c| check_proper(&g, &Coloring::new(c).unwrap()).unwrap().is_none());
                prop_assert!(!two);
            }
        }
    }

    #[test]
    fn edge_list_round_trips(g in graph(0, 10)) {
        let text = write_edge_list(&g, &["round trip".to_string()]);
        prop_assert_eq!(parse_edge_list(&text).unwrap(), g);
    }

    #[test]
    fn dist2_agrees_with_bicolored_p3((g, c) in common::colored_graph(1, 7, 4)) {
        let on_square = check_proper(&g.square(), &c).unwrap().is_none();
        prop_assert_eq!(check_dist2(&g, &c).unwrap().is_none(), on_square);
        let proper = check_proper(&g, &c).unwrap().is_none();
        let no_p3 = g.edge_count() == 0 || find_bicolored(&g, &c, &path(3)).unwrap().is_none();
        prop_assert_eq!(on_square, proper && no_p3);
    }
}

#[test]
fn spider_in_g45_is_centered_at_a_hub() {
    let (g, layout) = gen_gmn(4, 5).unwrap();
    assert_eq!((g.vertex_count(), g.edge_count()), (34, 60));
    let w = contains_subgraph(&g, &spider(&[2, 2, 2])).unwrap();
    assert!(w.is_valid(&g, &spider(&[2, 2, 2])));
    let center = w.vertex_map[0];
    assert!(center < layout.m);
    // the explicit embedding centred at x_1 through y^1_12, y^1_13, y^1_14
    let explicit = [
        layout.x(0),
        layout.y(0, 1, 0),
        layout.x(1),
        layout.y(0, 2, 0),
        layout.x(2),
        layout.y(0, 3, 0),
        layout.x(3),
    ];
    let t = spider(&[2, 2, 2]);
    assert!(t.edges().all(|(a, b)| g.has_edge(explicit[a], explicit[b])));
}

#[test]
fn gmn_shape_invariants() {
    for m in 2..=6 {
        for n in 1..=6 {
            if m * n > 24 {
                continue;
            }
            let (g, layout) = gen_gmn(m, n).unwrap();
            assert_eq!(g.vertex_count(), m + n * m * (m - 1) / 2);
            assert_eq!(g.edge_count(), n * m * (m - 1));
            for &y in layout.y.values() {
                assert_eq!(g.degree(y), 2);
            }
            for i in 0..m {
                assert_eq!(g.degree(layout.x(i)), n * (m - 1));
                for j in i + 1..m {
                    assert_eq!(g.distance(i, j).unwrap(), Some(2));
                }
            }
            let big = g.big_vertices();
            for &u in &big {
                for &v in &big {
                    assert_eq!(g.distance(u, v).unwrap().unwrap() % 2, 0);
                }
            }
        }
    }
}

#[test]
fn gmn_is_double_star_free() {
    let ds = double_star(2, 2);
    for (m, n) in [(2, 1), (2, 3), (3, 2), (3, 3), (4, 2), (4, 3)] {
        let (g, _) = gen_gmn(m, n).unwrap();
        assert_eq!(
            contains_subgraph_with_budget(&g, &ds, Some(1_000_000)).unwrap(),
            None
        );
    }
}

#[test]
fn small_gmn_examples() {
    let (p3, _) = gen_gmn(2, 1).unwrap();
    assert!(p3.is_path() && p3.vertex_count() == 3);
    let (c4, _) = gen_gmn(2, 2).unwrap();
    assert_eq!(c4.edge_count(), 4);
    assert!((0..4).all(|v| c4.degree(v) == 2));
    assert!(c4.is_connected());
    assert!(gen_gmn(1, 3).is_err());
    assert!(gen_gmn(3, 0).is_err());
}
