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

//! Exact chromatic numbers for each coloring mode by backtracking, for
//! certifying the constructive colorers on small graphs.

use std::collections::VecDeque;

use crate::coloring::{find_bicolored, Color, Coloring, Mode};
use crate::error::{Error, Result};
use crate::graph::{find_embedding, Anchor, Graph};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactResult {
    pub k: usize,
    pub coloring: Coloring,
    /// Search nodes visited over all tried `k`.
    pub nodes: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Exhaustive {
    pub all: bool,
    /// Complete proper colorings examined, up to color permutation.
    pub inspected: u64,
}

/// Smallest-last order reversed: each vertex has few earlier neighbors.
pub fn degeneracy_order(g: &Graph) -> Vec<usize> {
    let n = g.vertex_count();
    let mut degree: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut removed = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !removed[v])
            .min_by_key(|&v| (degree[v], v))
            .expect("vertices remain");
        removed[v] = true;
        for &w in g.neighbors(v) {
            if !removed[w] {
                degree[w] -= 1;
            }
        }
        order.push(v);
    }
    order.reverse();
    order
}

struct Budget {
    limit: Option<u64>,
    nodes: u64,
}

impl Budget {
    fn tick(&mut self) -> Result<()> {
        self.nodes += 1;
        match self.limit {
            Some(b) if self.nodes > b => Err(Error::SearchBudgetExceeded { budget: b }),
            _ => Ok(()),
        }
    }
}

enum Check {
    Proper,
    Dist2(Graph),
    Star,
    Acyclic,
    Avoid(Graph),
}

struct Solver<'a> {
    g: &'a Graph,
    check: Check,
    colors: Vec<Color>,
    budget: Budget,
}

impl Solver<'_> {
    // `v` has just been colored; every other colored vertex was fine before.
    fn ok(&mut self, v: usize) -> Result<bool> {
        let g = self.g;
        let c = self.colors[v];
        if g.neighbors(v).iter().any(|&w| self.colors[w] == c) {
            return Ok(false);
        }
        Ok(match &self.check {
            Check::Proper => true,
            Check::Dist2(sq) => !sq.neighbors(v).iter().any(|&w| self.colors[w] == c),
            Check::Star => !self.p4_through(v),
            Check::Acyclic => !self.cycle_through(v),
            Check::Avoid(h) => !self.pattern_through(v, &h.clone())?,
        })
    }

    fn p4_through(&self, v: usize) -> bool {
        let (g, col) = (self.g, &self.colors);
        let a = col[v];
        // v at an end: v - b - c - d
        for &b in g.neighbors(v) {
            let beta = col[b];
            if beta == 0 {
                continue;
            }
            for &c in g.neighbors(b) {
                if c != v && col[c] == a && g.neighbors(c).iter().any(|&d| d != b && col[d] == beta)
                {
                    return true;
                }
            }
        }
        // v in the middle: x - w - v - w'
        let nb: Vec<usize> = g
            .neighbors(v)
            .iter()
            .copied()
            .filter(|&w| col[w] > 0)
            .collect();
        for &w in &nb {
            let twin = nb.iter().any(|&u| u != w && col[u] == col[w]);
            if twin && g.neighbors(w).iter().any(|&x| x != v && col[x] == a) {
                return true;
            }
        }
        false
    }

    fn cycle_through(&self, v: usize) -> bool {
        let (g, col) = (self.g, &self.colors);
        let a = col[v];
        let nb: Vec<usize> = g
            .neighbors(v)
            .iter()
            .copied()
            .filter(|&w| col[w] > 0)
            .collect();
        let mut seen = vec![false; g.vertex_count()];
        for &start in &nb {
            let beta = col[start];
            if seen[start] || nb.iter().filter(|&&w| col[w] == beta).count() < 2 {
                continue;
            }
            // search the alpha/beta graph without v for a second neighbor of v
            seen[start] = true;
            let mut queue = VecDeque::from([start]);
            while let Some(x) = queue.pop_front() {
                for &y in g.neighbors(x) {
                    if y == v || seen[y] || (col[y] != a && col[y] != beta) {
                        continue;
                    }
                    if col[y] == beta && g.has_edge(y, v) {
                        return true;
                    }
                    seen[y] = true;
                    queue.push_back(y);
                }
            }
        }
        false
    }

    fn pattern_through(&mut self, v: usize, h: &Graph) -> Result<bool> {
        let g = self.g;
        let a = self.colors[v];
        let mut betas: Vec<Color> = g
            .neighbors(v)
            .iter()
            .map(|&w| self.colors[w])
            .filter(|&c| c > 0)
            .collect();
        betas.sort_unstable();
        betas.dedup();
        for beta in betas {
            let vertices: Vec<usize> = (0..g.vertex_count())
                .filter(|&x| self.colors[x] == a || self.colors[x] == beta)
                .collect();
            if vertices.len() < h.vertex_count() {
                continue;
            }
            let sub = g.induced_subgraph(&vertices);
            let host = vertices.binary_search(&v).expect("v is colored");
            for p in 0..h.vertex_count() {
                self.budget.tick()?;
                let anchors = [Anchor { pattern: p, host }];
                let remaining = self
                    .budget
                    .limit
                    .map(|b| b.saturating_sub(self.budget.nodes));
                if find_embedding(sub.adjacency(), h, &anchors, remaining)?.is_some() {
                    return Ok(true);
                }
            }
        }
        Ok(false)
    }

    fn search(&mut self, order: &[usize], i: usize, used: Color, k: Color) -> Result<bool> {
        if i == order.len() {
            return Ok(true);
        }
        let v = order[i];
        for c in 1..=(used + 1).min(k) {
            self.budget.tick()?;
            self.colors[v] = c;
            if self.ok(v)? && self.search(order, i + 1, used.max(c), k)? {
                return Ok(true);
            }
        }
        self.colors[v] = 0;
        Ok(false)
    }
}

fn check_for(g: &Graph, mode: &Mode) -> Result<Check> {
    Ok(match mode {
        Mode::Proper => Check::Proper,
        Mode::Dist2 => Check::Dist2(g.square()),
        Mode::Star => Check::Star,
        Mode::Acyclic => Check::Acyclic,
        Mode::Avoid(h) => {
            if !h.is_connected() {
                return Err(Error::Disconnected);
            }
            if h.edge_count() == 0 {
                return Err(Error::Domain("pattern needs at least one edge".into()));
            }
            if h.bipartition().is_none() {
                // a bicolored subgraph is bipartite
                Check::Proper
            } else {
                Check::Avoid(h.clone())
            }
        }
    })
}

/// The least `k <= max_k` with a valid `k`-coloring in `mode`, and one such
/// coloring.
pub fn exact_chromatic(
    g: &Graph,
    mode: &Mode,
    max_k: usize,
    budget: Option<u64>,
) -> Result<ExactResult> {
    if max_k == 0 {
        return Err(Error::Domain("max_k must be at least 1".into()));
    }
    let mut solver = Solver {
        g,
        check: check_for(g, mode)?,
        colors: vec![0; g.vertex_count()],
        budget: Budget {
            limit: budget,
            nodes: 0,
        },
    };
    if g.vertex_count() == 0 {
        return Ok(ExactResult {
            k: 0,
            coloring: Coloring::from_vec_unchecked(vec![]),
            nodes: 0,
        });
    }
    let order = degeneracy_order(g);
    let start = if g.edge_count() > 0 { 2 } else { 1 };
    for k in start..=max_k {
        solver.colors.iter_mut().for_each(|c| *c = 0);
        if solver.search(&order, 0, 0, k as Color)? {
            return Ok(ExactResult {
                k,
                coloring: Coloring::from_vec_unchecked(solver.colors),
                nodes: solver.budget.nodes,
            });
        }
    }
    Err(Error::ExceedsMaxK { max_k })
}

/// Whether every proper coloring with at most `k` colors has a bicolored
/// copy of `h`. Colorings are enumerated once per color permutation, and the
/// search stops at the first coloring without one.
pub fn all_colorings_have_bicolored(
    g: &Graph,
    k: usize,
    h: &Graph,
    budget: Option<u64>,
) -> Result<Exhaustive> {
    if !h.is_connected() {
        return Err(Error::Disconnected);
    }
    let mut solver = Solver {
        g,
        check: Check::Proper,
        colors: vec![0; g.vertex_count()],
        budget: Budget {
            limit: budget,
            nodes: 0,
        },
    };
    let mut inspected = 0;
    let all = enumerate(&mut solver, 0, 0, k as Color, &mut |colors| {
        inspected += 1;
        let c = Coloring::from_vec_unchecked(colors.to_vec());
        Ok(find_bicolored(g, &c, h)?.is_some())
    })?;
    Ok(Exhaustive { all, inspected })
}

// Returns false as soon as `visit` does.
fn enumerate(
    s: &mut Solver<'_>,
    v: usize,
    used: Color,
    k: Color,
    visit: &mut dyn FnMut(&[Color]) -> Result<bool>,
) -> Result<bool> {
    if v == s.g.vertex_count() {
        return visit(&s.colors);
    }
    for c in 1..=(used + 1).min(k) {
        s.budget.tick()?;
        s.colors[v] = c;
        if s.ok(v)? && !enumerate(s, v + 1, used.max(c), k, visit)? {
            s.colors[v] = 0;
            return Ok(false);
        }
    }
    s.colors[v] = 0;
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::check_mode;
    use crate::generators::{complete, cycle, path, star};

    fn chi(g: &Graph, mode: Mode) -> usize {
        let r = exact_chromatic(g, &mode, 12, None).unwrap();
        assert_eq!(check_mode(g, &r.coloring, &mode).unwrap(), None);
        r.k
    }

    #[test]
    fn examples() {
        assert_eq!(chi(&complete(4), Mode::Proper), 4);
        assert_eq!(chi(&path(4), Mode::Star), 3);
        assert_eq!(chi(&cycle(4), Mode::Dist2), 4);
        assert_eq!(chi(&cycle(4), Mode::Acyclic), 3);
        assert_eq!(chi(&cycle(5), Mode::Star), 4);
        assert_eq!(chi(&star(4), Mode::Star), 2);
        assert_eq!(chi(&Graph::empty(3), Mode::Star), 1);
        assert_eq!(chi(&path(4), Mode::Avoid(path(4))), 3);
        assert_eq!(chi(&cycle(6), Mode::Avoid(cycle(6))), 3);
        assert_eq!(chi(&cycle(6), Mode::Avoid(complete(3))), 2);
    }

    #[test]
    fn limits() {
        assert_eq!(
            exact_chromatic(&complete(4), &Mode::Proper, 3, None),
            Err(Error::ExceedsMaxK { max_k: 3 })
        );
        assert_eq!(
            exact_chromatic(&complete(6), &Mode::Star, 10, Some(5)),
            Err(Error::SearchBudgetExceeded { budget: 5 })
        );
        assert!(exact_chromatic(&path(2), &Mode::Proper, 0, None).is_err());
    }

    #[test]
    fn exhaustive_examples() {
        let r = all_colorings_have_bicolored(&cycle(4), 2, &path(4), None).unwrap();
        assert_eq!(
            r,
            Exhaustive {
                all: true,
                inspected: 1
            }
        );
        assert!(
            !all_colorings_have_bicolored(&path(4), 3, &path(4), None)
                .unwrap()
                .all
        );
        assert!(
            !all_colorings_have_bicolored(&path(2), 2, &path(3), None)
                .unwrap()
                .all
        );
    }

    #[test]
    fn degeneracy_order_removes_leaves_first() {
        assert_eq!(degeneracy_order(&star(3)), vec![3, 0, 2, 1]);
    }
}
