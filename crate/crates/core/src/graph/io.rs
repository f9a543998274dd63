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

//! Edge-list text format:
//!
//! ```text
//! # comment
//! p 4
//! 0 1
//! 1 2
//! ```

use std::fmt::Write as _;

use super::Graph;
use crate::error::{Error, Result};

pub(crate) fn data_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty())
}

pub(crate) fn parse_error(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

/// Parses a `p <n>` header line.
pub(crate) fn parse_header<'a>(
    lines: &mut impl Iterator<Item = (usize, &'a str)>,
) -> Result<usize> {
    let (line, text) = lines
        .next()
        .ok_or_else(|| parse_error(0, "missing `p <vertex_count>` line"))?;
    let mut parts = text.split_whitespace();
    match (parts.next(), parts.next(), parts.next()) {
        (Some("p"), Some(n), None) => n
            .parse()
            .map_err(|_| parse_error(line, format!("bad vertex count `{n}`"))),
        _ => Err(parse_error(line, "expected `p <vertex_count>`")),
    }
}

pub(crate) fn parse_id(line: usize, token: &str) -> Result<usize> {
    token
        .parse()
        .map_err(|_| parse_error(line, format!("bad vertex id `{token}`")))
}

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = data_lines(text);
    let n = parse_header(&mut lines)?;
    let mut edges = Vec::new();
    let mut seen = std::collections::HashSet::new();
    for (line, l) in lines {
        let ids: Vec<&str> = l.split_whitespace().collect();
        let [a, b] = ids[..] else {
            return Err(parse_error(line, "expected `u v`"));
        };
        let (u, v) = (parse_id(line, a)?, parse_id(line, b)?);
        if u >= n || v >= n {
            return Err(parse_error(line, format!("vertex out of range for p {n}")));
        }
        if u == v {
            return Err(parse_error(line, format!("loop at vertex {u}")));
        }
        if !seen.insert((u.min(v), u.max(v))) {
            return Err(parse_error(line, format!("duplicate edge {u} {v}")));
        }
        edges.push((u, v));
    }
    Graph::new(n, &edges)
}

/// Renders `g`, prefixing each `header` line with `# `.
pub fn write_edge_list(g: &Graph, header: &[String]) -> String {
    let mut out = String::new();
    for h in header {
        let _ = writeln!(out, "# {h}");
    }
    let _ = writeln!(out, "p {}", g.vertex_count());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}
