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

//! Star, acyclic and H-avoiding colorings of graphs that exclude a fixed
//! forest as a subgraph.
//!
//! The crate bundles the constructive colorers (square-greedy, DFS levels and
//! the recursive big/small split colorer for forbidden trees), the hypergraph
//! machinery they rely on (simplification, tree skeletons, rainbow coloring),
//! validators and classifiers, and exhaustive solvers that serve as oracles
//! on small inputs.

pub mod colorers;
pub mod coloring;
pub mod error;
pub mod exact;
pub mod generators;
pub mod graph;
pub mod hypergraph;
pub mod par;
pub mod tree;

pub use coloring::{Coloring, Mode};
pub use error::{Error, Result};
pub use graph::{Graph, SubgraphWitness};
pub use par::Execution;
