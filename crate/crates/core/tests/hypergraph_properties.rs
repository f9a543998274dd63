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

use common::{graph, hypergraph};
use proptest::prelude::*;
use starcolor::coloring::Coloring;
use starcolor::generators::{path, random_tree, star};
use starcolor::hypergraph::{
    build_neighbor_hypergraph, find_skeleton_exhaustive, find_skeleton_greedy, is_rainbow, p_bound,
    parse_hypergraph, q_bound, rainbow_coloring, write_hypergraph, Hypergraph, RainbowOutcome,
    SkeletonMode,
};
use starcolor::Error;

fn subset(a: &[usize], b: &[usize]) -> bool {
    a.iter().all(|x| b.contains(x))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn simplify_keeps_maximal_edges(h in hypergraph(8, 10, 4)) {
        let s = h.simplify();
        prop_assert!(s.is_simple());
        prop_assert_eq!(s.simplify(), s.clone());
        for e in h.edges().iter().filter(|e| e.len() >= 2) {
            prop_assert!(s.edges().iter().any(|f| subset(e, f)));
        }
        for f in s.edges() {
            prop_assert!(h.edges().contains(f));
        }
    }

    #[test]
    fn rainbow_coloring_or_skeleton(h in hypergraph(9, 12, 4), n in 2usize..5, seed in any::<u64>()) {
        let t = random_tree(n, seed);
        match rainbow_coloring(&h, &t).unwrap() {
            RainbowOutcome::Colored(c) => {
                prop_assert!(is_rainbow(&h, &c).unwrap());
                let q = q_bound(n, h.rank().max(2)).unwrap();
                prop_assert!(c.palette_size() as u128 <= q);
            }
            RainbowOutcome::Skeleton(w) => {
                prop_assert!(w.is_valid(&h, &t));
            }
        }
    }

    #[test]
    fn greedy_skeleton_under_degree_condition(h in hypergraph(8, 16, 3), n in 2usize..4, seed in any::<u64>()) {
        let s = h.simplify();
        let p = p_bound(n).unwrap();
        prop_assume!(s.vertex_count() >= n);
        prop_assume!(s.min_degree().is_some_and(|d| d as u128 >= p));
        let t = random_tree(n, seed);
        let w = find_skeleton_greedy(&s, &t).unwrap();
        prop_assert!(w.is_valid(&s, &t));
        prop_assert_eq!(w.mode, SkeletonMode::Weak);
    }

    #[test]
    fn exhaustive_skeletons_are_valid(h in hypergraph(6, 8, 3), n in 2usize..4, seed in any::<u64>()) {
        let t = random_tree(n, seed);
        for mode in [SkeletonMode::Weak, SkeletonMode::Strict] {
            if let Some(w) = find_skeleton_exhaustive(&h, &t, mode, None).unwrap() {
                prop_assert!(w.is_valid(&h, &t));
                prop_assert_eq!(w.mode, mode);
            }
        }
        let weak = find_skeleton_exhaustive(&h, &t, SkeletonMode::Weak, None).unwrap();
        let strict = find_skeleton_exhaustive(&h, &t, SkeletonMode::Strict, None).unwrap();
        prop_assert!(strict.is_none() || weak.is_some());
    }

    #[test]
    fn text_round_trip(h in hypergraph(8, 8, 4)) {
        let text = write_hypergraph(&h, &["test".into()]);
        prop_assert_eq!(parse_hypergraph(&text).unwrap(), h);
    }

    #[test]
    fn neighbor_hypergraph_edges_are_big_neighborhoods(g in graph(1, 10), split in any::<u16>()) {
        let n = g.vertex_count();
        let (big, small): (Vec<usize>, Vec<usize>) = (0..n).partition(|&v| split >> (v % 16) & 1 == 1);
        let nh = build_neighbor_hypergraph(&g, &big, &small).unwrap();
        let tags = nh.raw.provenance().unwrap();
        for (e, &x) in nh.raw.edges().iter().zip(tags) {
            let expect: Vec<usize> = g
                .neighbors(x)
                .iter()
                .filter_map(|w| big.iter().position(|b| b == w))
                .collect();
            prop_assert_eq!(e, &expect);
        }
        prop_assert!(nh.simplified.is_simple());
    }
}

#[test]
fn bound_values() {
    assert_eq!(p_bound(2).unwrap(), 1);
    assert_eq!(p_bound(3).unwrap(), 3);
    assert_eq!(p_bound(4).unwrap(), 5);
    assert_eq!(p_bound(5).unwrap(), 7);
    assert_eq!(p_bound(6).unwrap(), 11);
    assert_eq!(q_bound(3, 2).unwrap(), 3);
    assert_eq!(q_bound(4, 19).unwrap(), 73);
    assert_eq!(q_bound(3, 15).unwrap(), 29);
    assert!(matches!(p_bound(1), Err(Error::Domain(_))));
    assert!(matches!(q_bound(3, 1), Err(Error::Domain(_))));
}

#[test]
fn rainbow_single_edge() {
    let h = Hypergraph::new(3, vec![vec![0, 1, 2]]).unwrap();
    let RainbowOutcome::Colored(c) = rainbow_coloring(&h, &path(3)).unwrap() else {
        panic!("one edge has no P3 skeleton");
    };
    assert_eq!(c, Coloring::new(vec![3, 2, 1]).unwrap());
}

#[test]
fn claw_skeleton_in_dense_hypergraph() {
    // all pairs on six vertices: degree 5 = p(4)
    let edges: Vec<Vec<usize>> = (0..6)
        .flat_map(|u| (u + 1..6).map(move |v| vec![u, v]))
        .collect();
    let h = Hypergraph::new(6, edges).unwrap();
    let w = find_skeleton_greedy(&h, &star(3)).unwrap();
    assert!(w.is_valid(&h, &star(3)));
    assert!(matches!(
        rainbow_coloring(&h, &star(3)).unwrap(),
        RainbowOutcome::Skeleton(_)
    ));
}
