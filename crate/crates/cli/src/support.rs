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

use std::fmt;
use std::fs;
use std::io;
use std::path::Path;

use starcolor::generators::{gen_family, Family};
use starcolor::Graph;

/// Exit statuses beyond the per-command results.
pub const EXIT_USAGE: u8 = 64;
pub const EXIT_BUDGET: u8 = 65;
pub const EXIT_SOFTWARE: u8 = 70;

#[derive(Debug)]
pub enum Failure {
    Usage(String),
    Budget(String),
    Internal(String),
}

impl Failure {
    pub fn code(&self) -> u8 {
        match self {
            Failure::Usage(_) => EXIT_USAGE,
            Failure::Budget(_) => EXIT_BUDGET,
            Failure::Internal(_) => EXIT_SOFTWARE,
        }
    }

    pub fn usage(msg: impl Into<String>) -> Self {
        Failure::Usage(msg.into())
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Usage(m) | Failure::Internal(m) => f.write_str(m),
            Failure::Budget(m) => write!(f, "budget-exceeded: {m}"),
        }
    }
}

impl From<starcolor::Error> for Failure {
    fn from(e: starcolor::Error) -> Self {
        use starcolor::Error::*;
        match e {
            SearchBudgetExceeded { .. } => Failure::Budget(e.to_string()),
            InternalInvariant(_) | Overflow(_) => Failure::Internal(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

pub type CmdResult = Result<u8, Failure>;

pub fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))
}

pub fn write(path: &Path, text: &str) -> Result<(), Failure> {
    if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
        fs::create_dir_all(dir).map_err(|e| io_failure(dir, e))?;
    }
    fs::write(path, text).map_err(|e| io_failure(path, e))
}

fn io_failure(path: &Path, e: io::Error) -> Failure {
    Failure::usage(format!("{}: {e}", path.display()))
}

/// An edge-list file, or a family such as `spider:2,2,2` when no file of
/// that name exists.
pub fn load_graph(arg: &str) -> Result<Graph, Failure> {
    let path = Path::new(arg);
    if path.exists() {
        return starcolor::graph::parse_edge_list(&read(path)?)
            .map_err(|e| Failure::usage(format!("{arg}: {e}")));
    }
    match arg.parse::<Family>() {
        Ok(family) => Ok(gen_family(&family)?),
        Err(e) if arg.contains(':') => Err(Failure::usage(format!("{arg}: {e}"))),
        Err(_) => Err(Failure::usage(format!("{arg}: no such file"))),
    }
}
