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

use thiserror::Error;

/// Errors produced by the graph, hypergraph and coloring routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for {vertex_count} vertices")]
    VertexOutOfRange { vertex: usize, vertex_count: usize },
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("graph is disconnected: vertex {unreachable} is unreachable")]
    DisconnectedGraph { unreachable: usize },
    #[error("pattern graph must be connected")]
    Disconnected,
    #[error("search exceeded its budget of {budget} nodes")]
    SearchBudgetExceeded { budget: u64 },
    #[error("tree condition violated: {0}")]
    ConditionViolated(String),
    #[error("not applicable: {0}")]
    NotApplicable(String),
    #[error("internal invariant broken: {0}")]
    InternalInvariant(String),
    #[error("graph too small: {0}")]
    TooSmall(String),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("vertex {vertex:?} has degree {degree}, below the required {required}")]
    PreconditionViolated {
        vertex: Option<usize>,
        degree: usize,
        required: u64,
    },
    #[error("hypergraph is not simple: {0}")]
    NotSimple(String),
    #[error("coloring covers {found} vertices, graph has {expected}")]
    SizeMismatch { expected: usize, found: usize },
    #[error("no valid coloring with at most {max_k} colors")]
    ExceedsMaxK { max_k: usize },
    #[error("invalid big/small partition: {0}")]
    InvalidPartition(String),
    #[error("arithmetic overflow while computing {0}")]
    Overflow(&'static str),
}

pub type Result<T> = std::result::Result<T, Error>;
