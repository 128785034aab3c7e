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

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An element tuple does not have one residue per cyclic factor.
    #[error("dimension mismatch: expected {expected} residues, got {found}")]
    Dimension { expected: usize, found: usize },

    /// A parameter is outside the accepted range.
    #[error("invalid argument: {0}")]
    Argument(String),

    /// An input violates a structural invariant (group, connection set, spec file).
    #[error("validation failed: {0}")]
    Validation(String),

    /// A configured size cap would be exceeded.
    #[error("resource limit exceeded: {what} is {actual}, limit is {limit}")]
    Resource {
        what: &'static str,
        actual: usize,
        limit: usize,
    },

    /// Two computations that must agree did not; this is a bug, not a finding.
    #[error("internal inconsistency: {0}")]
    Inconsistency(String),
}

impl Error {
    pub(crate) fn resource(what: &'static str, actual: usize, limit: usize) -> Error {
        Error::Resource {
            what,
            actual,
            limit,
        }
    }
}
