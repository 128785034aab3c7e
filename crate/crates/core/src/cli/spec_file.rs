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

//! Graph specification files: either an explicit group and connection set
//! or a named family with parameters.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::abelian::GroupSpec;
use crate::cayley::{build_cayley_with, CayleyGraph, ConnectionSet, Family};
use crate::error::{Error, Result};
use crate::Limits;

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphSpecFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub moduli: Option<Vec<u32>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub connection_set: Option<Vec<Vec<u32>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub family: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub params: Option<FamilyParams>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FamilyParams {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub d: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub m: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub powers: Option<Vec<usize>>,
}

/// What a spec file resolves to.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphSource {
    Explicit {
        moduli: Vec<u32>,
        connection_set: Vec<Vec<u32>>,
    },
    Family(Family),
}

impl GraphSpecFile {
    /// Parses JSON text; syntax errors report line and column.
    pub fn parse(text: &str) -> Result<GraphSpecFile> {
        serde_json::from_str(text).map_err(|e| {
            let (line, column) = (e.line(), e.column());
            let full = e.to_string();
            let msg = full
                .strip_suffix(&format!(" at line {line} column {column}"))
                .unwrap_or(&full);
            Error::Validation(format!(
                "malformed spec at line {line}, column {column}: {msg}"
            ))
        })
    }

    pub fn explicit(moduli: Vec<u32>, connection_set: Vec<Vec<u32>>) -> GraphSpecFile {
        GraphSpecFile {
            moduli: Some(moduli),
            connection_set: Some(connection_set),
            ..GraphSpecFile::default()
        }
    }

    pub fn from_family(family: &Family) -> GraphSpecFile {
        let mut p = FamilyParams::default();
        match family {
            Family::Cycle { n } | Family::Hypercube { n } | Family::Mobius { n } => p.n = Some(*n),
            Family::KaryNcube { k, n } => {
                p.k = Some(*k);
                p.n = Some(*n);
            }
            Family::Circulant { n, d, m, powers } => {
                p.n = Some(*n);
                p.d = Some(*d);
                p.m = Some(*m);
                p.powers = powers.clone();
            }
        }
        GraphSpecFile {
            family: Some(family.name().to_string()),
            params: Some(p),
            ..GraphSpecFile::default()
        }
    }

    /// The explicit form of an already built graph.
    pub fn from_graph(graph: &CayleyGraph) -> GraphSpecFile {
        GraphSpecFile::explicit(
            graph.group().moduli().to_vec(),
            graph
                .connection_set()
                .elements()
                .iter()
                .map(|e| e.residues().to_vec())
                .collect(),
        )
    }

    pub fn source(&self) -> Result<GraphSource> {
        let explicit = self.moduli.is_some() || self.connection_set.is_some();
        let named = self.family.is_some() || self.params.is_some();
        match (explicit, named) {
            (true, true) => Err(Error::Validation(
                "spec must use either moduli/connection_set or family/params, not both".into(),
            )),
            (false, false) => Err(Error::Validation(
                "spec must contain moduli/connection_set or family/params".into(),
            )),
            (true, false) => match (&self.moduli, &self.connection_set) {
                (Some(m), Some(s)) => Ok(GraphSource::Explicit {
                    moduli: m.clone(),
                    connection_set: s.clone(),
                }),
                (None, _) => Err(Error::Validation("spec is missing \"moduli\"".into())),
                (_, None) => Err(Error::Validation(
                    "spec is missing \"connection_set\"".into(),
                )),
            },
            (false, true) => {
                let name = self
                    .family
                    .as_deref()
                    .ok_or_else(|| Error::Validation("spec is missing \"family\"".into()))?;
                let params = self.params.clone().unwrap_or_default();
                Ok(GraphSource::Family(params.into_family(name)?))
            }
        }
    }

    pub fn build(&self, limits: &Limits) -> Result<CayleyGraph> {
        match self.source()? {
            GraphSource::Explicit {
                moduli,
                connection_set,
            } => {
                let spec = GroupSpec::new(moduli)?;
                if spec.order() > limits.max_construct_vertices {
                    return Err(Error::Resource {
                        what: "vertex count",
                        actual: spec.order(),
                        limit: limits.max_construct_vertices,
                    });
                }
                let elements = connection_set
                    .iter()
                    .map(|r| spec.element(r))
                    .collect::<Result<Vec<_>>>()?;
                let conn = ConnectionSet::new(&spec, &elements)?;
                build_cayley_with(&spec, &conn, limits)
            }
            GraphSource::Family(f) => f.build_with(limits),
        }
    }
}

impl FamilyParams {
    fn require(&self, value: Option<usize>, key: &str, family: &str) -> Result<usize> {
        value.ok_or_else(|| Error::Argument(format!("family {family} needs parameter {key}")))
    }

    fn only(&self, allowed: &[&str], family: &str) -> Result<()> {
        let present = [
            ("n", self.n.is_some()),
            ("k", self.k.is_some()),
            ("d", self.d.is_some()),
            ("m", self.m.is_some()),
            ("powers", self.powers.is_some()),
        ];
        match present.iter().find(|(k, p)| *p && !allowed.contains(k)) {
            Some((k, _)) => Err(Error::Argument(format!(
                "family {family} does not take parameter {k}"
            ))),
            None => Ok(()),
        }
    }

    pub fn into_family(self, name: &str) -> Result<Family> {
        let family = match name {
            "cycle" | "hypercube" | "mobius" => {
                self.only(&["n"], name)?;
                let n = self.require(self.n, "n", name)?;
                match name {
                    "cycle" => Family::Cycle { n },
                    "hypercube" => Family::Hypercube { n },
                    _ => Family::Mobius { n },
                }
            }
            "kary_ncube" => {
                self.only(&["k", "n"], name)?;
                Family::KaryNcube {
                    k: self.require(self.k, "k", name)?,
                    n: self.require(self.n, "n", name)?,
                }
            }
            "circulant" => {
                self.only(&["n", "d", "m", "powers"], name)?;
                Family::Circulant {
                    n: self.require(self.n, "n", name)?,
                    d: self.require(self.d, "d", name)?,
                    m: self.require(self.m, "m", name)?,
                    powers: self.powers,
                }
            }
            other => {
                return Err(Error::Argument(format!(
                    "unknown family {other:?}; expected one of {}",
                    Family::NAMES.join(", ")
                )))
            }
        };
        Ok(family)
    }

    /// Parses command-line parameters: either positional values in the
    /// family's order (`cycle 5`, `kary_ncube 3 2`, `circulant 25 5 2`) or
    /// `key=value` pairs (`n=25 d=5 m=2 powers=0,1`).
    pub fn from_args(name: &str, args: &[String]) -> Result<FamilyParams> {
        let order: &[&str] = match name {
            "cycle" | "hypercube" | "mobius" => &["n"],
            "kary_ncube" => &["k", "n"],
            "circulant" => &["n", "d", "m", "powers"],
            other => {
                return Err(Error::Argument(format!(
                    "unknown family {other:?}; expected one of {}",
                    Family::NAMES.join(", ")
                )))
            }
        };
        let mut values: BTreeMap<String, String> = BTreeMap::new();
        let mut positional = 0;
        for arg in args {
            let (key, value) = match arg.split_once('=') {
                Some((k, v)) => (k.trim().to_string(), v.trim().to_string()),
                None => {
                    let key = order.get(positional).ok_or_else(|| {
                        Error::Argument(format!("too many parameters for family {name}"))
                    })?;
                    positional += 1;
                    (key.to_string(), arg.clone())
                }
            };
            if values.insert(key.clone(), value).is_some() {
                return Err(Error::Argument(format!("parameter {key} given twice")));
            }
        }
        let mut p = FamilyParams::default();
        for (key, value) in values {
            let num = |v: &str| {
                v.parse::<usize>().map_err(|_| {
                    Error::Argument(format!("parameter {key}={v} is not a non-negative integer"))
                })
            };
            match key.as_str() {
                "n" => p.n = Some(num(&value)?),
                "k" => p.k = Some(num(&value)?),
                "d" => p.d = Some(num(&value)?),
                "m" => p.m = Some(num(&value)?),
                "powers" => {
                    p.powers = Some(
                        value
                            .split(',')
                            .filter(|s| !s.trim().is_empty())
                            .map(|s| num(s.trim()))
                            .collect::<Result<Vec<_>>>()?,
                    )
                }
                other => {
                    return Err(Error::Argument(format!("unknown parameter {other:?}")));
                }
            }
        }
        Ok(p)
    }
}
