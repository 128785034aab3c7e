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

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use cayleyaut::cli::{self, AnalyzeOptions, Emit, EXIT_CORPUS_MISMATCH, EXIT_OK, EXIT_VALIDATION};
use cayleyaut::{Error, Limits};

#[derive(Parser)]
#[command(
    name = "cayleyaut",
    version,
    about = "Automorphism groups of Cayley graphs on finite abelian groups"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Analyze a graph spec file (JSON).
    Analyze {
        file: PathBuf,
        /// Emit the machine-readable JSON report.
        #[arg(long)]
        json: bool,
        /// Omit timings so output is byte-identical across runs.
        #[arg(long)]
        stable: bool,
        /// Skip the exhaustive automorphism search.
        #[arg(long)]
        no_brute: bool,
        /// Also compute vertex and edge connectivity.
        #[arg(long)]
        connectivity: bool,
        #[command(flatten)]
        limits: LimitArgs,
    },
    /// Print a family graph as a spec file or an edge list.
    Family {
        /// cycle, hypercube, mobius, kary_ncube or circulant.
        name: String,
        /// Positional values (`5`, `3 2`) or key=value pairs (`n=25 d=5 m=2 powers=0,1`).
        params: Vec<String>,
        #[arg(long, value_enum, default_value = "spec")]
        emit: EmitArg,
        #[command(flatten)]
        limits: LimitArgs,
    },
    /// Run the built-in reproduction corpus.
    Corpus {
        #[arg(long)]
        run: bool,
        #[arg(long)]
        json: bool,
        #[command(flatten)]
        limits: LimitArgs,
    },
}

#[derive(Copy, Clone, ValueEnum)]
enum EmitArg {
    Spec,
    Edges,
}

#[derive(Args)]
struct LimitArgs {
    /// Largest graph given to the automorphism search.
    #[arg(long, env = "CAYLEYAUT_MAX_VERTICES", default_value_t = Limits::DEFAULT.max_search_vertices)]
    max_vertices: usize,
    /// Largest graph that will be constructed.
    #[arg(long, env = "CAYLEYAUT_MAX_CONSTRUCT", default_value_t = Limits::DEFAULT.max_construct_vertices)]
    max_construct: usize,
    /// Largest permutation group held as an element list.
    #[arg(long, env = "CAYLEYAUT_MAX_GROUP_ORDER", default_value_t = Limits::DEFAULT.max_group_order)]
    max_group_order: usize,
    /// Largest connection set for the group-automorphism enumeration.
    #[arg(long, env = "CAYLEYAUT_MAX_CONNECTION_SET", default_value_t = Limits::DEFAULT.max_connection_set)]
    max_connection_set: usize,
}

impl From<&LimitArgs> for Limits {
    fn from(a: &LimitArgs) -> Limits {
        Limits {
            max_construct_vertices: a.max_construct,
            max_search_vertices: a.max_vertices,
            max_group_order: a.max_group_order,
            max_connection_set: a.max_connection_set,
        }
    }
}

fn run(cmd: Command) -> Result<(String, i32), Error> {
    match cmd {
        Command::Analyze {
            file,
            json,
            stable,
            no_brute,
            connectivity,
            limits,
        } => {
            let text = std::fs::read_to_string(&file)
                .map_err(|e| Error::Validation(format!("cannot read {}: {e}", file.display())))?;
            let opts = AnalyzeOptions {
                no_brute,
                connectivity,
                stable,
                limits: Limits::from(&limits),
            };
            Ok((cli::cmd_analyze(&text, &opts, json)?, EXIT_OK))
        }
        Command::Family {
            name,
            params,
            emit,
            limits,
        } => {
            let emit = match emit {
                EmitArg::Spec => Emit::Spec,
                EmitArg::Edges => Emit::Edges,
            };
            Ok((
                cli::cmd_family(&name, &params, emit, &Limits::from(&limits))?,
                EXIT_OK,
            ))
        }
        Command::Corpus { run, json, limits } => {
            if !run {
                return Ok((cli::corpus_listing()?, EXIT_OK));
            }
            let (text, ok) = cli::cmd_corpus(&Limits::from(&limits), json);
            Ok((text, if ok { EXIT_OK } else { EXIT_CORPUS_MISMATCH }))
        }
    }
}

fn main() -> ExitCode {
    let args = match Cli::try_parse() {
        Ok(a) => a,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() {
                EXIT_VALIDATION as u8
            } else {
                0
            });
        }
    };
    match run(args.command) {
        Ok((out, code)) => {
            let mut stdout = std::io::stdout().lock();
            if stdout
                .write_all(out.as_bytes())
                .and_then(|_| stdout.flush())
                .is_err()
            {
                return ExitCode::FAILURE;
            }
            ExitCode::from(code as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(cli::exit_code(&e) as u8)
        }
    }
}
