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

//! Vertex colorings and their text format (`v c` per line, colors >= 1).

mod classify;
mod validate;

pub use classify::{classify_f, classify_h, FVerdict, HClass, Verdict};
pub use validate::{
    check_acyclic, check_acyclic_with, check_avoiding, check_avoiding_with, check_dist2,
    check_mode, check_proper, check_star, find_bicolored, find_bicolored_with, improper_edge,
    BicoloredWitness, Mode, SearchOptions, Violation,
};

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::io::{data_lines, parse_error, parse_id};

pub type Color = u64;

/// A total map from vertices `0..len` to colors `>= 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Coloring {
    colors: Vec<Color>,
}

impl Coloring {
    pub fn new(colors: Vec<Color>) -> Result<Self> {
        if let Some(v) = colors.iter().position(|&c| c == 0) {
            return Err(Error::Domain(format!(
                "vertex {v} has color 0; colors start at 1"
            )));
        }
        Ok(Coloring { colors })
    }

    pub(crate) fn from_vec_unchecked(colors: Vec<Color>) -> Self {
        debug_assert!(colors.iter().all(|&c| c > 0));
        Coloring { colors }
    }

    pub fn colors(&self) -> &[Color] {
        &self.colors
    }

    pub fn color(&self, v: usize) -> Color {
        self.colors[v]
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    /// Largest color in use (0 for the empty coloring).
    pub fn palette_size(&self) -> Color {
        self.colors.iter().copied().max().unwrap_or(0)
    }

    /// Distinct colors, ascending.
    pub fn used_colors(&self) -> Vec<Color> {
        let mut used = self.colors.clone();
        used.sort_unstable();
        used.dedup();
        used
    }

    pub fn color_count(&self) -> usize {
        self.used_colors().len()
    }

    pub(crate) fn check_size(&self, vertex_count: usize) -> Result<()> {
        if self.len() == vertex_count {
            Ok(())
        } else {
            Err(Error::SizeMismatch {
                expected: vertex_count,
                found: self.len(),
            })
        }
    }
}

/// Parses `v c` lines; every vertex `0..n` must appear exactly once.
pub fn parse_coloring(text: &str) -> Result<Coloring> {
    let mut entries: Vec<Option<Color>> = Vec::new();
    for (line, l) in data_lines(text) {
        let parts: Vec<&str> = l.split_whitespace().collect();
        let [v, c] = parts[..] else {
            return Err(parse_error(line, "expected `v c`"));
        };
        let v = parse_id(line, v)?;
        let c: Color = c
            .parse()
            .map_err(|_| parse_error(line, format!("bad color `{c}`")))?;
        if c == 0 {
            return Err(parse_error(line, "colors must be positive"));
        }
        if v >= entries.len() {
            entries.resize(v + 1, None);
        }
        if entries[v].replace(c).is_some() {
            return Err(parse_error(line, format!("vertex {v} listed twice")));
        }
    }
    let colors = entries
        .iter()
        .enumerate()
        .map(|(v, c)| c.ok_or_else(|| parse_error(0, format!("vertex {v} has no color"))))
        .collect::<Result<Vec<_>>>()?;
    Ok(Coloring { colors })
}

/// Renders the coloring; `trailer` lines are appended as `#` comments.
pub fn write_coloring(c: &Coloring, trailer: &[String]) -> String {
    let mut out = String::new();
    for (v, col) in c.colors.iter().enumerate() {
        let _ = writeln!(out, "{v} {col}");
    }
    for t in trailer {
        let _ = writeln!(out, "# {t}");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts() {
        let c = Coloring::new(vec![3, 1, 3, 7]).unwrap();
        assert_eq!(c.palette_size(), 7);
        assert_eq!(c.color_count(), 3);
        assert!(Coloring::new(vec![1, 0]).is_err());
    }

    #[test]
    fn text_format() {
        let c = Coloring::new(vec![1, 2, 3, 1]).unwrap();
        let text = write_coloring(&c, &["ledger c=4".into()]);
        assert!(text.ends_with("# ledger c=4\n"));
        assert_eq!(parse_coloring(&text).unwrap(), c);
        assert_eq!(parse_coloring("# x\n1 2\n0 5\n").unwrap().colors(), &[5, 2]);
        assert!(parse_coloring("0 1\n0 2\n").is_err());
        assert!(parse_coloring("0 1\n2 2\n").is_err());
        assert!(parse_coloring("0 0\n").is_err());
        assert!(parse_coloring("0\n").is_err());
    }
}
