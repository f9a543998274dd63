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

//! Which pattern graphs `H` and forbidden graphs `F` give a bounded
//! `H`-avoiding chromatic number on `F`-free graphs.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::tree::profile_forest;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum HClass {
    /// Contains an odd cycle, so avoiding `H` is just proper coloring.
    NotBipartite,
    /// `K_{1,s}`.
    Star,
    /// Bipartite, not a star, and one side has maximum degree at most two.
    DegTwoPart,
    OtherBipartite,
}

impl fmt::Display for HClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            HClass::NotBipartite => "NotBipartite",
            HClass::Star => "Star",
            HClass::DegTwoPart => "DegTwoPart",
            HClass::OtherBipartite => "OtherBipartite",
        })
    }
}

pub fn classify_h(h: &Graph) -> Result<HClass> {
    if h.vertex_count() < 2 {
        return Err(Error::TooSmall(
            "pattern needs at least two vertices".into(),
        ));
    }
    if !h.is_connected() {
        return Err(Error::Disconnected);
    }
    let Some(bip) = h.bipartition() else {
        return Ok(HClass::NotBipartite);
    };
    if h.is_star() {
        return Ok(HClass::Star);
    }
    let low = |part: &[usize]| part.iter().all(|&v| h.degree(v) <= 2);
    Ok(if low(&bip.parts[0]) || low(&bip.parts[1]) {
        HClass::DegTwoPart
    } else {
        HClass::OtherBipartite
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Verdict {
    Bounded,
    Unbounded,
    Unknown,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Bounded => "Bounded",
            Verdict::Unbounded => "Unbounded",
            Verdict::Unknown => "Unknown",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FVerdict {
    pub verdict: Verdict,
    pub reason: String,
}

impl FVerdict {
    fn new(verdict: Verdict, reason: impl Into<String>) -> Self {
        FVerdict {
            verdict,
            reason: reason.into(),
        }
    }
}

// Edges of `f` form one star; isolated vertices are ignored and an edgeless
// graph counts.
fn edges_form_star(f: &Graph) -> bool {
    let touched: Vec<usize> = (0..f.vertex_count()).filter(|&v| f.degree(v) > 0).collect();
    touched.is_empty() || f.induced_subgraph(&touched).is_star()
}

pub fn classify_f(f: &Graph, hclass: HClass) -> FVerdict {
    use Verdict::*;
    match hclass {
        HClass::OtherBipartite => FVerdict::new(Unknown, "no characterization for this pattern"),
        HClass::NotBipartite => {
            if f.is_forest() {
                FVerdict::new(Bounded, "F is a forest; avoiding H is proper coloring")
            } else {
                FVerdict::new(
                    Unbounded,
                    "F contains a cycle; avoiding H is proper coloring",
                )
            }
        }
        HClass::Star => {
            if edges_form_star(f) {
                FVerdict::new(Bounded, "F is a star")
            } else {
                FVerdict::new(Unbounded, "F is not a star")
            }
        }
        HClass::DegTwoPart => {
            let profile = profile_forest(f);
            if !profile.is_forest {
                FVerdict::new(Unbounded, "F contains a cycle")
            } else if let Some((u, v, d)) = profile.failing_pair {
                FVerdict::new(
                    Unbounded,
                    format!("big vertices {u} and {v} are at odd distance {d}"),
                )
            } else {
                FVerdict::new(
                    Bounded,
                    "F is a forest with big vertices pairwise at even distance",
                )
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete, cycle, double_star, path, spider, star};

    #[test]
    fn h_examples() {
        assert_eq!(classify_h(&path(4)).unwrap(), HClass::DegTwoPart);
        assert_eq!(classify_h(&cycle(4)).unwrap(), HClass::DegTwoPart);
        assert_eq!(classify_h(&complete(3)).unwrap(), HClass::NotBipartite);
        assert_eq!(classify_h(&star(4)).unwrap(), HClass::Star);
        assert_eq!(classify_h(&path(3)).unwrap(), HClass::Star);
        assert_eq!(classify_h(&path(2)).unwrap(), HClass::Star);
        let k33 = crate::generators::gen_family(&"bipartite:3,3".parse().unwrap()).unwrap();
        assert_eq!(classify_h(&k33).unwrap(), HClass::OtherBipartite);
        assert_eq!(
            classify_h(&path(2).disjoint_union(&path(2))),
            Err(Error::Disconnected)
        );
        assert!(matches!(
            classify_h(&Graph::empty(1)),
            Err(Error::TooSmall(_))
        ));
    }

    #[test]
    fn f_examples() {
        assert_eq!(
            classify_f(&spider(&[2, 2, 2]), HClass::DegTwoPart).verdict,
            Verdict::Bounded
        );
        let ds = classify_f(&double_star(2, 2), HClass::DegTwoPart);
        assert_eq!(ds.verdict, Verdict::Unbounded);
        assert!(ds.reason.contains("odd distance 1"));
        assert_eq!(
            classify_f(&path(5), HClass::OtherBipartite).verdict,
            Verdict::Unknown
        );
        assert_eq!(classify_f(&star(3), HClass::Star).verdict, Verdict::Bounded);
        assert_eq!(
            classify_f(&path(4), HClass::Star).verdict,
            Verdict::Unbounded
        );
        assert_eq!(
            classify_f(&cycle(4), HClass::NotBipartite).verdict,
            Verdict::Unbounded
        );
        assert_eq!(
            classify_f(&double_star(2, 2), HClass::NotBipartite).verdict,
            Verdict::Bounded
        );
    }

    #[test]
    fn odd_big_pair_flips_verdict() {
        // two spiders joined at their centers by a 3-path
        let s = spider(&[1, 1, 1]);
        let joined = s.disjoint_union(&s).with_isolated(2);
        let joined = joined.with_edges(&[(0, 8), (8, 9), (9, 4)]).unwrap();
        assert_eq!(
            classify_f(&joined, HClass::DegTwoPart).verdict,
            Verdict::Unbounded
        );
        let even = s
            .disjoint_union(&s)
            .with_isolated(1)
            .with_edges(&[(0, 8), (8, 4)])
            .unwrap();
        assert_eq!(
            classify_f(&even, HClass::DegTwoPart).verdict,
            Verdict::Bounded
        );
    }
}
