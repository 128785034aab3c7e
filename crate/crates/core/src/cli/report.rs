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

use std::fmt::Write as _;
use std::time::Instant;

use serde::Serialize;

use super::spec_file::GraphSpecFile;
use crate::autgroup::{
    arc_transitive_under, brute_force_aut_with, group_equal, is_dihedral, is_subgroup,
};
use crate::cayley::{check_us, GroupElementPair, UsWitness};
use crate::connect::{edge_connectivity, vertex_connectivity, vertex_connectivity_with_group};
use crate::error::{Error, Result};
use crate::predict::predicted_group_with;
use crate::Limits;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AnalyzeOptions {
    /// Skip the exhaustive automorphism search.
    pub no_brute: bool,
    pub connectivity: bool,
    /// Omit the timings block.
    pub stable: bool,
    pub limits: Limits,
}

impl Default for AnalyzeOptions {
    fn default() -> Self {
        AnalyzeOptions {
            no_brute: false,
            connectivity: false,
            stable: false,
            limits: Limits::DEFAULT,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AnalysisReport {
    pub input: GraphSpecFile,
    pub graph: GraphSummary,
    pub us: UsSummary,
    pub predicted_order: usize,
    pub aut_order: Option<usize>,
    pub prediction: PredictionSummary,
    pub vertex_transitive: bool,
    pub arc_transitive: Option<bool>,
    pub dihedral: Option<DihedralSummary>,
    pub connectivity: Option<ConnectivitySummary>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timings: Option<Timings>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GraphSummary {
    pub label: Option<String>,
    pub moduli: Vec<u32>,
    pub connection_set: Vec<Vec<u32>>,
    pub vertices: usize,
    pub edges: usize,
    pub degree: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct UsSummary {
    pub holds: bool,
    pub witness: Option<WitnessSummary>,
}

/// `first[0] + first[1] = sum = second[0] + second[1]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WitnessSummary {
    pub sum: Vec<u32>,
    pub first: [Vec<u32>; 2],
    pub second: [Vec<u32>; 2],
}

impl From<&UsWitness> for WitnessSummary {
    fn from(w: &UsWitness) -> Self {
        let pair = |p: &GroupElementPair| [p.0.residues().to_vec(), p.1.residues().to_vec()];
        WitnessSummary {
            sum: w.sum.residues().to_vec(),
            first: pair(&w.first),
            second: pair(&w.second),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PredictionSummary {
    pub applicable: bool,
    pub containment: Option<bool>,
    pub equality: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DihedralSummary {
    pub is_dihedral: bool,
    pub n: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConnectivitySummary {
    pub vertex: usize,
    pub edge: usize,
}

/// Wall-clock milliseconds per stage.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Timings {
    pub validate_ms: f64,
    pub us_ms: f64,
    pub predicted_ms: f64,
    pub brute_force_ms: f64,
    pub transitivity_ms: f64,
    pub connectivity_ms: f64,
}

fn millis(start: Instant) -> f64 {
    (start.elapsed().as_secs_f64() * 1e6).round() / 1e3
}

/// Runs the full pipeline on one spec.
pub fn analyze(input: &GraphSpecFile, opts: &AnalyzeOptions) -> Result<AnalysisReport> {
    let limits = &opts.limits;
    let t = Instant::now();
    let cayley = input.build(limits)?;
    let graph = cayley.graph();
    let spec = cayley.group();
    let conn = cayley.connection_set();
    let validate_ms = millis(t);

    let t = Instant::now();
    let us = check_us(spec, conn)?;
    let us_ms = millis(t);

    let t = Instant::now();
    let predicted = predicted_group_with(spec, conn, limits)?;
    let predicted_ms = millis(t);

    let t = Instant::now();
    let aut = if opts.no_brute {
        None
    } else {
        Some(brute_force_aut_with(graph, limits)?)
    };
    let brute_force_ms = millis(t);

    let (containment, equality) = match &aut {
        Some(aut) => {
            let containment = is_subgroup(&predicted, aut)?;
            if !containment {
                return Err(Error::Inconsistency(format!(
                    "predicted group of order {} is not contained in the automorphism group of order {}",
                    predicted.order(),
                    aut.order()
                )));
            }
            (Some(true), Some(group_equal(&predicted, aut)?))
        }
        None => (None, None),
    };

    let t = Instant::now();
    // L(H) lies in the predicted group, so it is transitive on its own.
    let vertex_transitive = match &aut {
        Some(aut) => aut.is_transitive(),
        None => predicted.is_transitive(),
    };
    let arc_transitive = aut
        .as_ref()
        .map(|aut| arc_transitive_under(graph, aut))
        .transpose()?;
    let dihedral = match (&aut, spec.rank()) {
        (Some(aut), 1) => Some(DihedralSummary {
            is_dihedral: is_dihedral(aut, spec.order()),
            n: spec.order(),
        }),
        _ => None,
    };
    let transitivity_ms = millis(t);

    let t = Instant::now();
    let connectivity = if opts.connectivity {
        let vertex = match &aut {
            Some(aut) => vertex_connectivity_with_group(graph, aut)?,
            None => vertex_connectivity(graph)?,
        };
        Some(ConnectivitySummary {
            vertex,
            edge: edge_connectivity(graph)?,
        })
    } else {
        None
    };
    let connectivity_ms = millis(t);

    Ok(AnalysisReport {
        input: input.clone(),
        graph: GraphSummary {
            label: cayley.label().map(str::to_string),
            moduli: spec.moduli().to_vec(),
            connection_set: conn
                .elements()
                .iter()
                .map(|e| e.residues().to_vec())
                .collect(),
            vertices: graph.vertex_count(),
            edges: graph.edge_count(),
            degree: conn.len(),
        },
        us: UsSummary {
            holds: us.holds,
            witness: us.witness.as_ref().map(WitnessSummary::from),
        },
        predicted_order: predicted.order(),
        aut_order: aut.as_ref().map(|a| a.order()),
        prediction: PredictionSummary {
            applicable: us.holds,
            containment,
            equality,
        },
        vertex_transitive,
        arc_transitive,
        dihedral,
        connectivity,
        timings: (!opts.stable).then_some(Timings {
            validate_ms,
            us_ms,
            predicted_ms,
            brute_force_ms,
            transitivity_ms,
            connectivity_ms,
        }),
    })
}

fn tuple(r: &[u32]) -> String {
    match r {
        [x] => x.to_string(),
        _ => format!(
            "({})",
            r.iter().map(u32::to_string).collect::<Vec<_>>().join(",")
        ),
    }
}

fn opt<T: ToString>(v: &Option<T>) -> String {
    v.as_ref().map_or_else(|| "n/a".to_string(), T::to_string)
}

impl AnalysisReport {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let g = &self.graph;
        let mut out = String::new();
        let group = g
            .moduli
            .iter()
            .map(|m| format!("Z_{m}"))
            .collect::<Vec<_>>()
            .join(" x ");
        let conn = g
            .connection_set
            .iter()
            .map(|r| tuple(r))
            .collect::<Vec<_>>()
            .join(", ");
        let _ = writeln!(
            out,
            "graph:             {}",
            g.label.as_deref().unwrap_or("Cay(H; S)")
        );
        let _ = writeln!(out, "group:             {group}");
        let _ = writeln!(out, "connection set:    {{{conn}}}");
        let _ = writeln!(
            out,
            "vertices/edges:    {} / {} (degree {})",
            g.vertices, g.edges, g.degree
        );
        match &self.us.witness {
            None => {
                let _ = writeln!(out, "us-property:       holds");
            }
            Some(w) => {
                let _ = writeln!(
                    out,
                    "us-property:       fails: {} + {} = {} = {} + {}",
                    tuple(&w.first[0]),
                    tuple(&w.first[1]),
                    tuple(&w.sum),
                    tuple(&w.second[0]),
                    tuple(&w.second[1])
                );
            }
        }
        let _ = writeln!(out, "predicted order:   {}", self.predicted_order);
        let _ = writeln!(out, "|Aut|:             {}", opt(&self.aut_order));
        let t = &self.prediction;
        let _ = writeln!(
            out,
            "prediction:        applicable={} containment={} equality={}",
            t.applicable,
            opt(&t.containment),
            opt(&t.equality)
        );
        let _ = writeln!(out, "vertex-transitive: {}", self.vertex_transitive);
        let _ = writeln!(out, "arc-transitive:    {}", opt(&self.arc_transitive));
        if let Some(d) = &self.dihedral {
            let _ = writeln!(out, "dihedral D_{}:     {}", 2 * d.n, d.is_dihedral);
        }
        if let Some(c) = &self.connectivity {
            let _ = writeln!(
                out,
                "connectivity:      vertex={} edge={}",
                c.vertex, c.edge
            );
        }
        if let Some(t) = &self.timings {
            let _ = writeln!(
                out,
                "timings (ms):      validate={} us={} predicted={} search={} transitivity={} connectivity={}",
                t.validate_ms, t.us_ms, t.predicted_ms, t.brute_force_ms, t.transitivity_ms, t.connectivity_ms
            );
        }
        out
    }
}
