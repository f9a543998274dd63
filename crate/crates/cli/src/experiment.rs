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

//! Batch experiments from a flat config file.
//!
//! ```text
//! # comments start with '#'
//! [run]
//! id = sweep
//! generator = gmn
//! m = 2..3
//! n = 1..3
//! mode = star
//! ```
//!
//! Every value of the form `a..b` (inclusive) expands into one run per
//! value, taking the cartesian product over all ranged keys.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::time::Instant;

use starcolor::colorers::{
    color_dfs_levels, color_square_greedy, color_star_tfree_with, TFreeOutcome,
};
use starcolor::coloring::{write_coloring, Coloring, Mode};
use starcolor::exact::exact_chromatic;
use starcolor::generators::{gen_gmn, gen_random_ffree};
use starcolor::graph::{parse_edge_list, write_edge_list};
use starcolor::tree::embed_in_even_tree;
use starcolor::{Error, Execution, Graph};

use crate::support::{load_graph, read, write, CmdResult, Failure};

pub const COLUMNS: [&str; 9] = [
    "run_id",
    "generator",
    "params",
    "seed",
    "mode",
    "k_exact_or_bound",
    "colors_used",
    "runtime_ms",
    "budget_hit",
];

const KEYS: [&str; 17] = [
    "id",
    "generator",
    "m",
    "n",
    "family",
    "f",
    "vertices",
    "edges",
    "attempts",
    "path",
    "seed",
    "mode",
    "h",
    "t",
    "budget",
    "max_k",
    "output",
];

/// One fully expanded run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Run {
    pub id: String,
    pub keys: BTreeMap<String, String>,
}

fn is_range(v: &str) -> bool {
    v.split_once("..").is_some_and(|(a, b)| {
        let digits = |s: &str| !s.trim().is_empty() && s.trim().chars().all(|c| c.is_ascii_digit());
        digits(a) && digits(b)
    })
}

pub fn parse_config(text: &str) -> Result<Vec<Run>, Failure> {
    let mut blocks: Vec<Vec<(String, String)>> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        if line == "[run]" {
            blocks.push(Vec::new());
            continue;
        }
        let err = |m: &str| Failure::usage(format!("config line {}: {m}", i + 1));
        let Some(block) = blocks.last_mut() else {
            return Err(err("expected [run] first"));
        };
        let Some((k, v)) = line.split_once('=') else {
            return Err(err("expected `key = value`"));
        };
        let (k, v) = (k.trim().to_string(), v.trim().to_string());
        if !KEYS.contains(&k.as_str()) {
            return Err(err(&format!("unknown key `{k}`")));
        }
        if block.iter().any(|(old, _)| *old == k) {
            return Err(err(&format!("key `{k}` repeated")));
        }
        block.push((k, v));
    }
    let mut runs = Vec::new();
    for (b, block) in blocks.iter().enumerate() {
        let base = block
            .iter()
            .find(|(k, _)| k == "id")
            .map_or_else(|| format!("run{:03}", b + 1), |(_, v)| v.clone());
        let mut partial: Vec<(Vec<String>, BTreeMap<String, String>)> =
            vec![(vec![], BTreeMap::new())];
        for (k, v) in block {
            let values: Vec<String> = if is_range(v) {
                crate::commands::parse_range(v)?
                    .iter()
                    .map(ToString::to_string)
                    .collect()
            } else {
                vec![v.clone()]
            };
            let ranged = values.len() > 1 || is_range(v);
            partial = partial
                .into_iter()
                .flat_map(|(tags, map)| {
                    values.iter().map(move |x| {
                        let mut tags = tags.clone();
                        let mut map = map.clone();
                        if ranged {
                            tags.push(format!("{k}{x}"));
                        }
                        map.insert(k.clone(), x.clone());
                        (tags, map)
                    })
                })
                .collect();
        }
        for (tags, keys) in partial {
            let id = std::iter::once(base.clone())
                .chain(tags)
                .collect::<Vec<_>>()
                .join("-");
            runs.push(Run { id, keys });
        }
    }
    Ok(runs)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Row {
    pub run_id: String,
    pub generator: String,
    pub params: String,
    pub seed: String,
    pub mode: String,
    pub k: String,
    pub colors: String,
    pub runtime_ms: u128,
    pub budget_hit: bool,
}

struct Ctx<'a> {
    run: &'a Run,
    base: &'a Path,
}

impl Ctx<'_> {
    fn get(&self, k: &str) -> Option<&str> {
        self.run.keys.get(k).map(String::as_str)
    }

    fn need(&self, k: &str) -> Result<&str, Failure> {
        self.get(k)
            .ok_or_else(|| Failure::usage(format!("run {}: missing `{k}`", self.run.id)))
    }

    fn num<T: std::str::FromStr>(&self, k: &str, default: Option<T>) -> Result<T, Failure> {
        match (self.get(k), default) {
            (Some(v), _) => v
                .parse()
                .map_err(|_| Failure::usage(format!("run {}: bad `{k}` value `{v}`", self.run.id))),
            (None, Some(d)) => Ok(d),
            (None, None) => Err(Failure::usage(format!(
                "run {}: missing `{k}`",
                self.run.id
            ))),
        }
    }

    // files relative to the config; family specs pass through
    fn graph(&self, k: &str) -> Result<Graph, Failure> {
        let v = self.need(k)?;
        let p = self.base.join(v);
        if p.exists() {
            load_graph(&p.to_string_lossy())
        } else {
            load_graph(v)
        }
    }
}

fn build_graph(cx: &Ctx<'_>) -> Result<(String, String, String, Graph), Failure> {
    let generator = cx.need("generator")?.to_string();
    let seed = cx.get("seed").unwrap_or("").to_string();
    let (params, g) = match generator.as_str() {
        "gmn" => {
            let (m, n) = (cx.num::<usize>("m", None)?, cx.num::<usize>("n", None)?);
            (format!("m={m} n={n}"), gen_gmn(m, n)?.0)
        }
        "family" => {
            let spec = cx.need("family")?;
            (spec.to_string(), load_graph(spec)?)
        }
        "ffree" => {
            let f = cx.graph("f")?;
            let vertices = cx.num::<usize>("vertices", None)?;
            let edges = cx.num::<usize>("edges", Some(2 * vertices))?;
            let attempts = cx.num::<usize>("attempts", Some(200))?;
            let seed_num = cx.num::<u64>("seed", Some(0))?;
            let r = gen_random_ffree(&f, vertices, edges, seed_num, attempts);
            (
                format!(
                    "f={} vertices={vertices} edges={edges} attempts={attempts}",
                    cx.need("f")?
                ),
                r.graph,
            )
        }
        "file" => {
            let path = cx.base.join(cx.need("path")?);
            let g = parse_edge_list(&read(&path)?)
                .map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?;
            (cx.need("path")?.to_string(), g)
        }
        other => {
            return Err(Failure::usage(format!(
                "run {}: unknown generator `{other}`",
                cx.run.id
            )))
        }
    };
    Ok((generator, params, seed, g))
}

enum Solved {
    Colored {
        k: String,
        coloring: Coloring,
        mode: String,
    },
    Nothing {
        k: String,
        budget_hit: bool,
    },
}

fn solve(cx: &Ctx<'_>, g: &Graph, mode: &str) -> Result<Solved, Failure> {
    let exact_mode = match mode {
        "proper" => Some(Mode::Proper),
        "star" => Some(Mode::Star),
        "acyclic" => Some(Mode::Acyclic),
        "dist2" => Some(Mode::Dist2),
        "avoid" => Some(Mode::Avoid(cx.graph("h")?)),
        _ => None,
    };
    if let Some(m) = exact_mode {
        let max_k = cx.num::<usize>("max_k", Some(16))?;
        let budget = cx
            .get("budget")
            .map(|_| cx.num::<u64>("budget", None))
            .transpose()?;
        return Ok(match exact_chromatic(g, &m, max_k, budget) {
            Ok(r) => Solved::Colored {
                k: r.k.to_string(),
                coloring: r.coloring,
                mode: mode.to_string(),
            },
            Err(Error::SearchBudgetExceeded { .. }) => Solved::Nothing {
                k: String::new(),
                budget_hit: true,
            },
            Err(Error::ExceedsMaxK { max_k }) => Solved::Nothing {
                k: format!(">{max_k}"),
                budget_hit: false,
            },
            Err(e) => return Err(e.into()),
        });
    }
    let star = "star".to_string();
    Ok(match mode {
        "square" => {
            let d = g.max_degree() as u128;
            Solved::Colored {
                k: (d * d + 1).to_string(),
                coloring: color_square_greedy(g),
                mode: star,
            }
        }
        "dfs" => Solved::Colored {
            k: String::new(),
            coloring: color_dfs_levels(g),
            mode: star,
        },
        "tfree" => {
            let t = cx.graph("t")?;
            let t = if t.is_tree() {
                t
            } else {
                embed_in_even_tree(&t)?
            };
            match color_star_tfree_with(g, &t, Execution::Sequential)? {
                TFreeOutcome::Colored { coloring, ledger } => Solved::Colored {
                    k: ledger.c_value.to_string(),
                    coloring,
                    mode: star,
                },
                TFreeOutcome::NotTFree(_) => Solved::Nothing {
                    k: "not-t-free".into(),
                    budget_hit: false,
                },
            }
        }
        "none" => Solved::Nothing {
            k: String::new(),
            budget_hit: false,
        },
        other => {
            return Err(Failure::usage(format!(
                "run {}: unknown mode `{other}`",
                cx.run.id
            )))
        }
    })
}

fn execute(run: &Run, base: &Path, deterministic: bool) -> Result<Row, Failure> {
    let cx = Ctx { run, base };
    let start = Instant::now();
    let (generator, params, seed, g) = build_graph(&cx)?;
    let mode = cx.get("mode").unwrap_or("none").to_string();
    let solved = solve(&cx, &g, &mode)?;
    let runtime_ms = if deterministic {
        0
    } else {
        start.elapsed().as_millis()
    };
    if let Some(dir) = cx.get("output") {
        let dir = base.join(dir);
        let header = [
            format!("run {} generator {generator} {params}", run.id),
            format!("seed {seed}"),
        ];
        write(
            &dir.join(format!("{}.edges", run.id)),
            &write_edge_list(&g, &header),
        )?;
        if let Solved::Colored { coloring, mode, .. } = &solved {
            let trailer = [format!("run {} mode {mode}", run.id)];
            write(
                &dir.join(format!("{}.coloring", run.id)),
                &write_coloring(coloring, &trailer),
            )?;
        }
    }
    let (k, colors, budget_hit) = match solved {
        Solved::Colored { k, coloring, .. } => (k, coloring.color_count().to_string(), false),
        Solved::Nothing { k, budget_hit } => (k, String::new(), budget_hit),
    };
    Ok(Row {
        run_id: run.id.clone(),
        generator,
        params,
        seed,
        mode,
        k,
        colors,
        runtime_ms,
        budget_hit,
    })
}

/// Runs every config entry, concurrently when `exec` allows, and returns the
/// rows sorted by run id.
pub fn run_all(
    runs: &[Run],
    base: &Path,
    deterministic: bool,
    exec: Execution,
) -> Result<Vec<Row>, Failure> {
    let results = exec.map(runs, |run| execute(run, base, deterministic));
    let mut rows = results.into_iter().collect::<Result<Vec<_>, _>>()?;
    rows.sort_by(|a, b| a.run_id.cmp(&b.run_id));
    Ok(rows)
}

pub fn to_csv(rows: &[Row]) -> Result<String, Failure> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let internal = |e: csv::Error| Failure::Internal(e.to_string());
    w.write_record(COLUMNS).map_err(internal)?;
    for r in rows {
        let runtime = r.runtime_ms.to_string();
        let budget = r.budget_hit.to_string();
        w.write_record([
            &r.run_id,
            &r.generator,
            &r.params,
            &r.seed,
            &r.mode,
            &r.k,
            &r.colors,
            &runtime,
            &budget,
        ])
        .map_err(internal)?;
    }
    let bytes = w
        .into_inner()
        .map_err(|e| Failure::Internal(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| Failure::Internal(e.to_string()))
}

pub fn experiment(
    config: &Path,
    out: Option<&PathBuf>,
    deterministic: bool,
    exec: Execution,
) -> CmdResult {
    let runs = parse_config(&read(config)?)?;
    let base = config.parent().unwrap_or(Path::new("."));
    let rows = run_all(&runs, base, deterministic, exec)?;
    let text = to_csv(&rows)?;
    match out {
        Some(p) => write(p, &text)?,
        None => print!("{text}"),
    }
    Ok(0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges_expand_to_a_product() {
        let runs =
            parse_config("[run]\nid = s\ngenerator = gmn\nm = 2..3\nn = 1..3\nmode = star\n")
                .unwrap();
        assert_eq!(runs.len(), 6);
        assert_eq!(runs[0].id, "s-m2-n1");
        assert_eq!(runs[5].id, "s-m3-n3");
        assert_eq!(runs[4].keys["n"], "2");
    }

    #[test]
    fn default_ids_and_comments() {
        let runs = parse_config("# top\n[run]\ngenerator = family  # inline\nfamily = path:4\n[run]\ngenerator = gmn\nm = 2\nn = 2\n").unwrap();
        assert_eq!(runs[0].id, "run001");
        assert_eq!(runs[0].keys["generator"], "family");
        assert_eq!(runs[1].id, "run002");
        assert!(parse_config("").unwrap().is_empty());
    }

    #[test]
    fn config_errors() {
        assert!(parse_config("m = 2\n").is_err());
        assert!(parse_config("[run]\nbogus = 1\n").is_err());
        assert!(parse_config("[run]\nm = 2\nm = 3\n").is_err());
        assert!(parse_config("[run]\nm 2\n").is_err());
    }

    #[test]
    fn empty_config_gives_header_only() {
        assert_eq!(to_csv(&[]).unwrap(), format!("{}\n", COLUMNS.join(",")));
    }
}
