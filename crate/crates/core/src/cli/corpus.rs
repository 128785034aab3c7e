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

//! The built-in reproduction corpus: every named graph with the group
//! orders and us-verdicts it is expected to produce.

use rayon::prelude::*;
use serde::Serialize;

use crate::cayley::Family;
use crate::predict::verify_with;
use crate::Limits;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorpusEntry {
    pub family: Family,
    pub expected_us: bool,
    pub expected_predicted: usize,
    pub expected_aut: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CorpusRow {
    pub graph: String,
    pub vertices: usize,
    pub us: Option<bool>,
    pub predicted: Option<usize>,
    pub brute: Option<usize>,
    pub expected_us: bool,
    pub expected_predicted: usize,
    pub expected_brute: usize,
    pub equality: Option<bool>,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub failures: Vec<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Verdict {
    Pass,
    Fail,
}

fn factorial(n: usize) -> usize {
    (1..=n).product()
}

/// `|Aut(Q_n^k)|` for `k != 4`.
fn kary_order(k: usize, n: usize) -> usize {
    if k == 2 {
        (1 << n) * factorial(n)
    } else {
        k.pow(n as u32) * (1 << n) * factorial(n)
    }
}

fn entry(
    family: Family,
    expected_us: bool,
    expected_predicted: usize,
    expected_aut: usize,
) -> CorpusEntry {
    CorpusEntry {
        family,
        expected_us,
        expected_predicted,
        expected_aut,
    }
}

pub fn corpus() -> Vec<CorpusEntry> {
    let mut out = Vec::new();
    for n in 3..=12 {
        // C_4 fails the us-property but still has Aut = D_8 = L ⋊ {±1}.
        out.push(entry(Family::Cycle { n }, n != 4, 2 * n, 2 * n));
    }
    for n in 1..=4 {
        let order = (1 << n) * factorial(n);
        out.push(entry(Family::Hypercube { n }, true, order, order));
    }
    // M_4 = K_4, M_5 = K_5, M_6 has Aut = Sym(3) wr Sym(2), M_7 is dihedral.
    out.push(entry(Family::Mobius { n: 4 }, false, 8, 24));
    out.push(entry(Family::Mobius { n: 5 }, false, 20, 120));
    out.push(entry(Family::Mobius { n: 6 }, false, 12, 72));
    out.push(entry(Family::Mobius { n: 7 }, false, 14, 14));
    for n in 8..=16 {
        out.push(entry(Family::Mobius { n }, true, 2 * n, 2 * n));
    }
    for (k, n) in [(3, 2), (5, 2), (3, 3), (6, 1), (7, 1), (2, 3), (2, 4)] {
        let order = kary_order(k, n);
        out.push(entry(Family::KaryNcube { k, n }, true, order, order));
    }
    // k = 4: Q_1^4 = C_4 and Q_2^4 = Q_4.
    out.push(entry(Family::KaryNcube { k: 4, n: 1 }, false, 8, 8));
    out.push(entry(Family::KaryNcube { k: 4, n: 2 }, false, 128, 384));
    out.push(entry(
        Family::Circulant {
            n: 25,
            d: 5,
            m: 2,
            powers: None,
        },
        true,
        50,
        50,
    ));
    out
}

pub fn run_entry(e: &CorpusEntry, limits: &Limits) -> CorpusRow {
    let mut row = CorpusRow {
        graph: String::new(),
        vertices: 0,
        us: None,
        predicted: None,
        brute: None,
        expected_us: e.expected_us,
        expected_predicted: e.expected_predicted,
        expected_brute: e.expected_aut,
        equality: None,
        verdict: Verdict::Fail,
        failures: Vec::new(),
    };
    let g = match e.family.build_with(limits) {
        Ok(g) => g,
        Err(err) => {
            row.graph = format!("{:?}", e.family);
            row.failures.push(err.to_string());
            return row;
        }
    };
    row.graph = g.label().unwrap_or_default().to_string();
    row.vertices = g.graph().vertex_count();
    let v = match verify_with(g.group(), g.connection_set(), limits) {
        Ok(v) => v.report,
        Err(err) => {
            row.failures.push(err.to_string());
            return row;
        }
    };
    row.us = Some(v.us_holds);
    row.predicted = Some(v.predicted_order);
    row.brute = Some(v.aut_order);
    row.equality = Some(v.equality);
    if v.us_holds != e.expected_us {
        row.failures.push(format!(
            "us verdict {} != expected {}",
            v.us_holds, e.expected_us
        ));
    }
    if let Some(w) = &v.us_witness {
        if !w.verify(g.group()) {
            row.failures.push("us witness does not verify".into());
        }
    }
    if v.predicted_order != e.expected_predicted {
        row.failures.push(format!(
            "predicted order {} != expected {}",
            v.predicted_order, e.expected_predicted
        ));
    }
    if v.aut_order != e.expected_aut {
        row.failures.push(format!(
            "|Aut| {} != expected {}",
            v.aut_order, e.expected_aut
        ));
    }
    if v.equality != (e.expected_predicted == e.expected_aut) {
        row.failures
            .push(format!("equality {} unexpected", v.equality));
    }
    if v.prediction_applicable && !v.equality {
        row.failures
            .push("us holds but predicted group differs from Aut".into());
    }
    if row.failures.is_empty() {
        row.verdict = Verdict::Pass;
    }
    row
}

/// Runs every corpus entry; rows come back in corpus order.
pub fn run_corpus(limits: &Limits) -> Vec<CorpusRow> {
    corpus().par_iter().map(|e| run_entry(e, limits)).collect()
}

fn show<T: ToString>(v: &Option<T>) -> String {
    v.as_ref().map_or_else(|| "-".to_string(), T::to_string)
}

/// The corpus with its expected values, without running anything heavier
/// than graph construction.
pub fn corpus_listing() -> crate::Result<String> {
    let mut out = format!(
        "{:<20} {:>5} {:>6} {:>10} {:>10}\n",
        "graph", "|V|", "us", "predicted", "brute"
    );
    for e in corpus() {
        let g = e.family.build()?;
        out.push_str(&format!(
            "{:<20} {:>5} {:>6} {:>10} {:>10}\n",
            g.label().unwrap_or_default(),
            g.graph().vertex_count(),
            e.expected_us,
            e.expected_predicted,
            e.expected_aut
        ));
    }
    Ok(out)
}

pub fn render_table(rows: &[CorpusRow]) -> String {
    let mut out = format!(
        "{:<20} {:>5} {:>6} {:>10} {:>10} {:>9}  {}\n",
        "graph", "|V|", "us", "predicted", "brute", "equality", "verdict"
    );
    for r in rows {
        out.push_str(&format!(
            "{:<20} {:>5} {:>6} {:>10} {:>10} {:>9}  {}\n",
            r.graph,
            r.vertices,
            show(&r.us),
            show(&r.predicted),
            show(&r.brute),
            show(&r.equality),
            match r.verdict {
                Verdict::Pass => "PASS",
                Verdict::Fail => "FAIL",
            }
        ));
        for f in &r.failures {
            out.push_str(&format!("    - {f}\n"));
        }
    }
    let failed = rows.iter().filter(|r| r.verdict == Verdict::Fail).count();
    out.push_str(&format!("{} rows, {} failed\n", rows.len(), failed));
    out
}
