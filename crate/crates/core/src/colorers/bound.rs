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

//! The palette bound `c(T)` of the recursive colorer, with the trace of
//! every recursion level.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::hypergraph::q_bound;
use crate::tree::{check_even_tree, compute_t_star, prune_leaf};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BaseKind {
    /// `c(P_k) = k - 1`.
    Path,
    /// `c(K_{1,s}) = (s - 1)^2 + 1`.
    Star,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BaseCase {
    pub kind: BaseKind,
    pub vertex_count: usize,
    pub value: u128,
}

/// One recursion step: `c(T) = c(T') * q + d^2 + 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundLevel {
    pub vertex_count: usize,
    pub max_degree: usize,
    pub tstar_size: usize,
    pub d: usize,
    pub q: u128,
    /// Leaf removed to get `T'`, in this level's vertex ids.
    pub removed_leaf: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundLedger {
    pub tree: Graph,
    /// Outermost level first.
    pub levels: Vec<BoundLevel>,
    pub base: BaseCase,
    pub c_value: u128,
}

impl BoundLedger {
    /// Evaluates the recursion from the recorded levels.
    pub fn recompute(&self) -> Result<u128> {
        self.levels.iter().rev().try_fold(self.base.value, |c, l| {
            let d = l.d as u128;
            c.checked_mul(l.q)
                .and_then(|x| x.checked_add(d * d + 1))
                .ok_or(Error::Overflow("c(T)"))
        })
    }

    /// The bound at each level, outermost first, ending with the base case.
    pub fn values(&self) -> Result<Vec<u128>> {
        let mut out = vec![self.base.value];
        let mut c = self.base.value;
        for l in self.levels.iter().rev() {
            let d = l.d as u128;
            c = c
                .checked_mul(l.q)
                .and_then(|x| x.checked_add(d * d + 1))
                .ok_or(Error::Overflow("c(T)"))?;
            out.push(c);
        }
        out.reverse();
        Ok(out)
    }

    /// Comment lines for the coloring file trailer.
    pub fn comment_lines(&self) -> Vec<String> {
        let mut out = Vec::with_capacity(self.levels.len() + 2);
        for (i, l) in self.levels.iter().enumerate() {
            out.push(format!(
                "level {i}: n={} maxdeg={} tstar={} d={} q={} removed_leaf={}",
                l.vertex_count, l.max_degree, l.tstar_size, l.d, l.q, l.removed_leaf
            ));
        }
        let kind = match self.base.kind {
            BaseKind::Path => "path",
            BaseKind::Star => "star",
        };
        out.push(format!(
            "base: {kind} n={} c={}",
            self.base.vertex_count, self.base.value
        ));
        out.push(format!("c_bound={}", self.c_value));
        out
    }
}

pub(crate) fn base_case(t: &Graph) -> Option<BaseCase> {
    let n = t.vertex_count();
    if t.is_path() {
        Some(BaseCase {
            kind: BaseKind::Path,
            vertex_count: n,
            value: (n - 1) as u128,
        })
    } else if t.is_star() {
        let s = (n - 2) as u128;
        Some(BaseCase {
            kind: BaseKind::Star,
            vertex_count: n,
            value: s * s + 1,
        })
    } else {
        None
    }
}

/// `d = |V(T*)| * Δ(T) + |V(T)|`.
pub(crate) fn threshold(t: &Graph, tstar_size: usize) -> Result<usize> {
    tstar_size
        .checked_mul(t.max_degree())
        .and_then(|x| x.checked_add(t.vertex_count()))
        .ok_or(Error::Overflow("d"))
}

/// The palette bound for star-coloring `t`-free graphs, pruning leaves with
/// [`prune_leaf`] until a path or a star remains.
pub fn c_bound(t: &Graph) -> Result<BoundLedger> {
    if t.vertex_count() < 2 {
        return Err(Error::TooSmall("tree needs at least two vertices".into()));
    }
    check_even_tree(t)?;
    let mut levels = Vec::new();
    let mut cur = t.clone();
    let base = loop {
        if let Some(base) = base_case(&cur) {
            break base;
        }
        let tstar = compute_t_star(&cur)?;
        let d = threshold(&cur, tstar.vertex_count())?;
        let pruned = prune_leaf(&cur)?;
        levels.push(BoundLevel {
            vertex_count: cur.vertex_count(),
            max_degree: cur.max_degree(),
            tstar_size: tstar.vertex_count(),
            d,
            q: q_bound(tstar.vertex_count(), d)?,
            removed_leaf: pruned.removed,
        });
        cur = pruned.tree;
    };
    let mut ledger = BoundLedger {
        tree: t.clone(),
        levels,
        base,
        c_value: 0,
    };
    ledger.c_value = ledger.recompute()?;
    Ok(ledger)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{double_star, path, spider, star};

    #[test]
    fn base_values() {
        assert_eq!(c_bound(&path(5)).unwrap().c_value, 4);
        assert_eq!(c_bound(&star(3)).unwrap().c_value, 5);
        assert_eq!(c_bound(&path(2)).unwrap().c_value, 1);
        assert_eq!(c_bound(&path(3)).unwrap().c_value, 2);
    }

    #[test]
    fn spider_222() {
        let ledger = c_bound(&spider(&[2, 2, 2])).unwrap();
        assert_eq!(ledger.levels.len(), 2);
        let (a, b) = (&ledger.levels[0], &ledger.levels[1]);
        assert_eq!((a.d, a.q, a.tstar_size), (19, 73, 4));
        assert_eq!((b.d, b.q, b.tstar_size), (15, 29, 3));
        assert_eq!(
            ledger.base,
            BaseCase {
                kind: BaseKind::Path,
                vertex_count: 5,
                value: 4
            }
        );
        assert_eq!(ledger.values().unwrap(), vec![25328, 342, 4]);
        assert_eq!(ledger.c_value, 25328);
        assert!(ledger.comment_lines().last().unwrap().ends_with("25328"));
    }

    #[test]
    fn rejects_bad_trees() {
        assert!(matches!(
            c_bound(&double_star(2, 2)),
            Err(Error::ConditionViolated(_))
        ));
        assert!(matches!(
            c_bound(&crate::generators::cycle(4)),
            Err(Error::ConditionViolated(_))
        ));
        assert!(matches!(c_bound(&Graph::empty(1)), Err(Error::TooSmall(_))));
    }
}
