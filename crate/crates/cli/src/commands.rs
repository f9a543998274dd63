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

use std::path::{Path, PathBuf};

use starcolor::colorers::{
    color_dfs_levels, color_square_greedy, color_star_tfree_with, TFreeOutcome,
};
use starcolor::coloring::{
    check_acyclic, check_avoiding_with, check_dist2, check_proper, check_star, classify_f,
    classify_h, parse_coloring, write_coloring, Coloring, Mode, SearchOptions, Verdict,
};
use starcolor::exact::exact_chromatic;
use starcolor::generators::{gen_gmn, gen_random_ffree};
use starcolor::graph::write_edge_list;
use starcolor::tree::{embed_in_even_tree, profile_forest};
use starcolor::{Error, Execution, Graph};

use crate::support::{load_graph, read, write, CmdResult, Failure};

pub fn classify(f: &str, h: &str) -> CmdResult {
    let f = load_graph(f)?;
    let h = load_graph(h)?;
    let class = classify_h(&h)?;
    let profile = profile_forest(&f);
    println!("h: {class}");
    let big: Vec<String> = profile
        .big_vertices
        .iter()
        .map(ToString::to_string)
        .collect();
    println!(
        "f: forest={} big=[{}] even_distance={}",
        profile.is_forest,
        big.join(" "),
        profile.condition_holds
    );
    let verdict = classify_f(&f, class);
    println!("verdict: {} ({})", verdict.verdict, verdict.reason);
    if let (Verdict::Unbounded, Some((u, v, d))) = (verdict.verdict, profile.failing_pair) {
        println!("failing pair: {u} {v} distance {d}");
    }
    Ok(match verdict.verdict {
        Verdict::Bounded => 0,
        Verdict::Unbounded => 1,
        Verdict::Unknown => 2,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Algo {
    Square,
    Dfs,
    Tfree,
}

fn emit(text: &str, out: Option<&Path>) -> Result<(), Failure> {
    match out {
        Some(p) => write(p, text),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

pub fn color(
    algo: Algo,
    g: &str,
    t: Option<&str>,
    out: Option<&Path>,
    witness: Option<&Path>,
    exec: Execution,
) -> CmdResult {
    let g = load_graph(g)?;
    let (coloring, bound, trailer) = match algo {
        Algo::Square => {
            let d = g.max_degree() as u128;
            (color_square_greedy(&g), Some(d * d + 1), vec![])
        }
        Algo::Dfs => (color_dfs_levels(&g), None, vec![]),
        Algo::Tfree => {
            let t = t.ok_or_else(|| Failure::usage("--algo tfree needs --t"))?;
            let t = load_graph(t)?;
            let t = if t.is_tree() {
                t
            } else {
                embed_in_even_tree(&t)?
            };
            match color_star_tfree_with(&g, &t, exec)? {
                TFreeOutcome::Colored { coloring, ledger } => {
                    (coloring, Some(ledger.c_value), ledger.comment_lines())
                }
                TFreeOutcome::NotTFree(report) => {
                    println!("not-t-free: {}", report.detail);
                    if let Some(w) = &report.witness {
                        let mut text = String::from("# tree vertex -> graph vertex\n");
                        for (tv, gv) in w.vertex_map.iter().enumerate() {
                            text.push_str(&format!("{tv} {gv}\n"));
                        }
                        emit(&text, witness)?;
                    }
                    return Ok(1);
                }
            }
        }
    };
    assert!(
        check_star(&g, &coloring)?.is_none(),
        "constructed coloring failed star validation"
    );
    let bound = bound.map_or_else(|| "-".to_string(), |b| b.to_string());
    emit(&write_coloring(&coloring, &trailer), out)?;
    eprintln!("colors={} bound={bound} valid=star", coloring.color_count());
    Ok(0)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum ModeArg {
    Proper,
    Star,
    Acyclic,
    Dist2,
    Avoid,
}

pub fn mode(arg: ModeArg, h: Option<&str>) -> Result<Mode, Failure> {
    Ok(match arg {
        ModeArg::Proper => Mode::Proper,
        ModeArg::Star => Mode::Star,
        ModeArg::Acyclic => Mode::Acyclic,
        ModeArg::Dist2 => Mode::Dist2,
        ModeArg::Avoid => {
            let h = h.ok_or_else(|| Failure::usage("--mode avoid needs --h"))?;
            Mode::Avoid(load_graph(h)?)
        }
    })
}

pub fn check(
    g: &Graph,
    c: &Coloring,
    mode: &Mode,
    opts: &SearchOptions,
) -> Result<Option<String>, Error> {
    let v = match mode {
        Mode::Proper => check_proper(g, c)?,
        Mode::Star => check_avoiding_with(g, c, &starcolor::generators::path(4), opts)?,
        Mode::Acyclic => check_acyclic(g, c)?,
        Mode::Dist2 => check_dist2(g, c)?,
        Mode::Avoid(h) => check_avoiding_with(g, c, h, opts)?,
    };
    Ok(v.map(|v| v.to_string()))
}

pub fn verify(
    g: &str,
    coloring: &Path,
    mode: &Mode,
    budget: Option<u64>,
    exec: Execution,
) -> CmdResult {
    let g = load_graph(g)?;
    let c = parse_coloring(&read(coloring)?)
        .map_err(|e| Failure::usage(format!("{}: {e}", coloring.display())))?;
    let opts = SearchOptions {
        budget,
        execution: exec,
    };
    match check(&g, &c, mode, &opts)? {
        None => {
            println!("valid {mode} coloring with {} colors", c.color_count());
            Ok(0)
        }
        Some(v) => {
            println!("invalid: {v}");
            Ok(1)
        }
    }
}

pub fn exact(
    g: &str,
    mode: &Mode,
    max_k: usize,
    budget: Option<u64>,
    out: Option<&Path>,
) -> CmdResult {
    let g = load_graph(g)?;
    match exact_chromatic(&g, mode, max_k, budget) {
        Ok(r) => {
            println!("chi={}", r.k);
            if let Some(p) = out {
                write(
                    p,
                    &write_coloring(&r.coloring, &[format!("exact {mode} chi={}", r.k)]),
                )?;
            }
            Ok(0)
        }
        Err(Error::ExceedsMaxK { max_k }) => {
            println!("exceeds-max-k {max_k}");
            Ok(1)
        }
        Err(Error::SearchBudgetExceeded { budget }) => {
            println!("budget-exceeded {budget}");
            Ok(crate::support::EXIT_BUDGET)
        }
        Err(e) => Err(e.into()),
    }
}

/// Inclusive `a..b` or a single number.
pub fn parse_range(s: &str) -> Result<Vec<u64>, Failure> {
    let num = |x: &str| {
        x.trim()
            .parse::<u64>()
            .map_err(|_| Failure::usage(format!("bad number `{x}`")))
    };
    match s.split_once("..") {
        Some((a, b)) => {
            let (a, b) = (num(a)?, num(b)?);
            if a > b {
                return Err(Failure::usage(format!("empty range `{s}`")));
            }
            Ok((a..=b).collect())
        }
        None => Ok(vec![num(s)?]),
    }
}

pub struct GenArgs {
    pub family: Option<String>,
    pub gmn: Option<Vec<usize>>,
    pub ffree: Option<String>,
    pub n: Option<usize>,
    pub edges: Option<usize>,
    pub seed: String,
    pub attempts: usize,
    pub out: Option<PathBuf>,
    pub out_dir: Option<PathBuf>,
}

pub fn generate(args: &GenArgs) -> CmdResult {
    if let Some(spec) = &args.family {
        let g = load_graph(spec)?;
        emit(
            &write_edge_list(&g, &[format!("generator family {spec}")]),
            args.out.as_deref(),
        )?;
        return Ok(0);
    }
    if let Some(mn) = &args.gmn {
        let (g, _) = gen_gmn(mn[0], mn[1])?;
        let header = [format!("generator gmn m={} n={}", mn[0], mn[1])];
        emit(&write_edge_list(&g, &header), args.out.as_deref())?;
        return Ok(0);
    }
    let Some(f_arg) = &args.ffree else {
        return Err(Failure::usage("choose one of --family, --gmn, --ffree"));
    };
    let f = load_graph(f_arg)?;
    let n = args.n.ok_or_else(|| Failure::usage("--ffree needs --n"))?;
    let target = args.edges.unwrap_or(2 * n);
    let seeds = parse_range(&args.seed)?;
    if seeds.len() > 1 && args.out_dir.is_none() {
        return Err(Failure::usage("a seed range needs --out-dir"));
    }
    for &seed in &seeds {
        let r = gen_random_ffree(&f, n, target, seed, args.attempts);
        let header = [
            format!(
                "generator ffree f={f_arg} n={n} target_edges={target} attempts={}",
                args.attempts
            ),
            format!("seed {seed}"),
            format!("edges_achieved {}", r.edges_achieved),
        ];
        let text = write_edge_list(&r.graph, &header);
        match &args.out_dir {
            Some(dir) => write(&dir.join(format!("ffree-seed{seed}.edges")), &text)?,
            None => emit(&text, args.out.as_deref())?,
        }
    }
    Ok(0)
}
