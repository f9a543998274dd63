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

//! Hypergraph text format: `p <vertex_count>`, then one hyperedge per line
//! as space-separated vertex ids.

use std::fmt::Write as _;

use super::Hypergraph;
use crate::error::Result;
use crate::graph::io::{data_lines, parse_error, parse_header, parse_id};

pub fn parse_hypergraph(text: &str) -> Result<Hypergraph> {
    let mut lines = data_lines(text);
    let n = parse_header(&mut lines)?;
    let mut edges = Vec::new();
    for (line, l) in lines {
        let mut e = l
            .split_whitespace()
            .map(|tok| parse_id(line, tok))
            .collect::<Result<Vec<_>>>()?;
        if let Some(&v) = e.iter().find(|&&v| v >= n) {
            return Err(parse_error(
                line,
                format!("vertex {v} out of range for p {n}"),
            ));
        }
        e.sort_unstable();
        if e.windows(2).any(|w| w[0] == w[1]) {
            return Err(parse_error(line, "vertex repeated within a hyperedge"));
        }
        edges.push(e);
    }
    Hypergraph::new(n, edges)
}

pub fn write_hypergraph(h: &Hypergraph, header: &[String]) -> String {
    let mut out = String::new();
    for line in header {
        let _ = writeln!(out, "# {line}");
    }
    let _ = writeln!(out, "p {}", h.vertex_count());
    for (i, e) in h.edges().iter().enumerate() {
        let ids: Vec<String> = e.iter().map(ToString::to_string).collect();
        match h.provenance() {
            Some(tags) => {
                let _ = writeln!(out, "{}  # from {}", ids.join(" "), tags[i]);
            }
            None => {
                let _ = writeln!(out, "{}", ids.join(" "));
            }
        }
    }
    out
}
