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

use proptest::prelude::*;
use starcolor::generators::{
    gen_random_ffree, grow_ffree, random_ffree_corpus, random_tree, spider, star,
};
use starcolor::graph::contains_subgraph;
use starcolor::Execution;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(60))]

    #[test]
    fn grown_graphs_are_free(n in 2usize..16, fsize in 2usize..6, fseed in any::<u64>(), seed in any::<u64>()) {
        let f = random_tree(fsize, fseed);
        let r = gen_random_ffree(&f, n, 3 * n, seed, 40);
        prop_assert!(contains_subgraph(&r.graph, &f).is_none());
        prop_assert_eq!(r.graph.edge_count(), r.edges_achieved);
        prop_assert_eq!(r.graph, gen_random_ffree(&f, n, 3 * n, seed, 40).graph);
    }

    #[test]
    fn growth_keeps_the_base(seed in any::<u64>()) {
        let f = spider(&[2, 2, 2]);
        let base = star(6).with_isolated(10);
        let r = grow_ffree(&base, &f, 30, seed, 40);
        for (u, v) in base.edges() {
            prop_assert!(r.graph.has_edge(u, v));
        }
        prop_assert!(contains_subgraph(&r.graph, &f).is_none());
    }
}

#[test]
fn corpus_does_not_depend_on_schedule() {
    let f = spider(&[2, 2, 1]);
    let seeds: Vec<u64> = (0..8).collect();
    let a = random_ffree_corpus(&f, 20, 30, &seeds, 50, Execution::Sequential);
    let b = random_ffree_corpus(&f, 20, 30, &seeds, 50, Execution::Parallel);
    let ga: Vec<_> = a.iter().map(|r| r.graph.clone()).collect();
    let gb: Vec<_> = b.iter().map(|r| r.graph.clone()).collect();
    assert_eq!(ga, gb);
}
