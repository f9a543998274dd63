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

mod commands;
mod experiment;
mod support;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use starcolor::Execution;

use commands::{Algo, GenArgs, ModeArg};
use support::{CmdResult, EXIT_USAGE};

/// Star colorings, forbidden bicolored subgraphs and friends.
#[derive(Parser)]
#[command(name = "starcolor", version)]
struct Cli {
    /// Run everything on one thread.
    #[arg(long, global = true)]
    sequential: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Decide whether forbidding bicolored `h` bounds the star chromatic
    /// number of `f`-free graphs.
    Classify {
        #[arg(long)]
        f: String,
        #[arg(long)]
        h: String,
    },
    /// Color a graph with a constructive algorithm.
    Color {
        #[arg(long, value_enum)]
        algo: Algo,
        #[arg(long)]
        g: String,
        /// Forbidden tree (or forest) for `tfree`.
        #[arg(long)]
        t: Option<String>,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Where to write a not-t-free witness.
        #[arg(long)]
        witness: Option<PathBuf>,
    },
    /// Check a coloring against a mode.
    Verify {
        #[arg(long)]
        g: String,
        #[arg(long)]
        coloring: PathBuf,
        #[arg(long, value_enum)]
        mode: ModeArg,
        #[arg(long)]
        h: Option<String>,
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Smallest number of colors for a mode, by exhaustive search.
    Exact {
        #[arg(long)]
        g: String,
        #[arg(long, value_enum)]
        mode: ModeArg,
        #[arg(long)]
        h: Option<String>,
        #[arg(long, default_value_t = 16)]
        max_k: usize,
        #[arg(long)]
        budget: Option<u64>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Generate graphs.
    Gen {
        /// Family spec such as `spider:2,2,2` or `cycle:5`.
        #[arg(long, conflicts_with_all = ["gmn", "ffree"])]
        family: Option<String>,
        #[arg(long, num_args = 2, value_names = ["M", "N"], conflicts_with = "ffree")]
        gmn: Option<Vec<usize>>,
        /// Forbidden graph for random growth.
        #[arg(long)]
        ffree: Option<String>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        edges: Option<usize>,
        /// A seed or an inclusive range `a..b`.
        #[arg(long, default_value = "0")]
        seed: String,
        #[arg(long, default_value_t = 200)]
        attempts: usize,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        out_dir: Option<PathBuf>,
    },
    /// Run a batch of experiments and write a CSV report.
    Experiment {
        #[arg(long)]
        config: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Report runtime as 0 so the CSV is byte-stable.
        #[arg(long)]
        deterministic: bool,
    },
}

fn dispatch(cli: Cli) -> CmdResult {
    let exec = if cli.sequential {
        Execution::Sequential
    } else {
        Execution::default()
    };
    match cli.cmd {
        Cmd::Classify { f, h } => commands::classify(&f, &h),
        Cmd::Color {
            algo,
            g,
            t,
            out,
            witness,
        } => commands::color(
            algo,
            &g,
            t.as_deref(),
            out.as_deref(),
            witness.as_deref(),
            exec,
        ),
        Cmd::Verify {
            g,
            coloring,
            mode,
            h,
            budget,
        } => {
            let mode = commands::mode(mode, h.as_deref())?;
            commands::verify(&g, &coloring, &mode, budget, exec)
        }
        Cmd::Exact {
            g,
            mode,
            h,
            max_k,
            budget,
            out,
        } => {
            let mode = commands::mode(mode, h.as_deref())?;
            commands::exact(&g, &mode, max_k, budget, out.as_deref())
        }
        Cmd::Gen {
            family,
            gmn,
            ffree,
            n,
            edges,
            seed,
            attempts,
            out,
            out_dir,
        } => commands::generate(&GenArgs {
            family,
            gmn,
            ffree,
            n,
            edges,
            seed,
            attempts,
            out,
            out_dir,
        }),
        Cmd::Experiment {
            config,
            out,
            deterministic,
        } => experiment::experiment(&config, out.as_ref(), deterministic, exec),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(EXIT_USAGE)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match dispatch(cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {f}");
            ExitCode::from(f.code())
        }
    }
}
