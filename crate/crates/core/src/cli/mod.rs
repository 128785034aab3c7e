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

//! Command implementations behind the `cayleyaut` binary. Everything here
//! returns strings so the binary can write stdout once at the end.

pub mod corpus;
pub mod report;
pub mod spec_file;

pub use corpus::{
    corpus, corpus_listing, render_table, run_corpus, CorpusEntry, CorpusRow, Verdict,
};
pub use report::{analyze, AnalysisReport, AnalyzeOptions};
pub use spec_file::{FamilyParams, GraphSource, GraphSpecFile};

use crate::error::{Error, Result};
use crate::Limits;

pub const EXIT_OK: i32 = 0;
pub const EXIT_CORPUS_MISMATCH: i32 = 1;
pub const EXIT_VALIDATION: i32 = 2;
pub const EXIT_RESOURCE: i32 = 3;
/// Internal inconsistency; indicates a bug.
pub const EXIT_INTERNAL: i32 = 4;

/// Prefix of the environment variables mirroring the limit flags.
pub const ENV_PREFIX: &str = "CAYLEYAUT_";

pub fn exit_code(err: &Error) -> i32 {
    match err {
        Error::Dimension { .. } | Error::Argument(_) | Error::Validation(_) => EXIT_VALIDATION,
        Error::Resource { .. } => EXIT_RESOURCE,
        Error::Inconsistency(_) => EXIT_INTERNAL,
    }
}

/// Output format for `family`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Emit {
    Spec,
    Edges,
}

/// Builds a family graph and renders it as an explicit spec file or as a
/// sorted `u v` edge list.
pub fn cmd_family(name: &str, args: &[String], emit: Emit, limits: &Limits) -> Result<String> {
    let family = FamilyParams::from_args(name, args)?.into_family(name)?;
    let graph = family.build_with(limits)?;
    Ok(match emit {
        Emit::Spec => {
            let mut s = serde_json::to_string_pretty(&GraphSpecFile::from_graph(&graph))
                .expect("spec serializes");
            s.push('\n');
            s
        }
        Emit::Edges => graph
            .graph()
            .edges()
            .map(|(u, v)| format!("{u} {v}\n"))
            .collect(),
    })
}

pub fn cmd_analyze(text: &str, opts: &AnalyzeOptions, json: bool) -> Result<String> {
    let input = GraphSpecFile::parse(text)?;
    let report = analyze(&input, opts)?;
    Ok(if json {
        report.to_json()
    } else {
        report.to_text()
    })
}

/// Returns the rendered corpus and whether every row passed.
pub fn cmd_corpus(limits: &Limits, json: bool) -> (String, bool) {
    let rows = run_corpus(limits);
    let ok = rows.iter().all(|r| r.verdict == Verdict::Pass);
    let text = if json {
        let mut s = serde_json::to_string_pretty(&rows).expect("rows serialize");
        s.push('\n');
        s
    } else {
        render_table(&rows)
    };
    (text, ok)
}
