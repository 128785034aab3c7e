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

//! Cayley graphs over finite abelian groups and their automorphism groups.
//!
//! The crate builds `Cay(H; S)` for `H = Z_{m1} x ... x Z_{mr}`, decides the
//! unique-summation (us) property of the connection set, materializes the
//! affine group `L(H) ⋊ Aut(H, S)` as explicit vertex permutations and
//! compares it against the automorphism group found by an exhaustive
//! individualization-refinement search.
//!
//! ```
//! use cayleyaut::{cayley, predict};
//!
//! let m10 = cayley::family_mobius(10).unwrap();
//! let report = predict::verify_prediction(m10.group(), m10.connection_set()).unwrap();
//! assert!(report.us_holds);
//! assert_eq!(report.aut_order, 20);
//! assert_eq!(report.prediction_confirmed, Some(true));
//! ```

pub mod abelian;
pub mod autgroup;
pub mod cayley;
pub mod cli;
pub mod connect;
pub mod error;
pub mod predict;

pub use error::{Error, Result};

/// Size limits shared by construction, search and group enumeration.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest group (and therefore graph) that will be materialized.
    pub max_construct_vertices: usize,
    /// Largest graph handed to the exhaustive automorphism search.
    pub max_search_vertices: usize,
    /// Largest permutation group kept as an explicit element list.
    pub max_group_order: usize,
    /// Largest connection set for which `Aut(H, S)` is enumerated.
    pub max_connection_set: usize,
}

impl Limits {
    pub const DEFAULT: Limits = Limits {
        max_construct_vertices: 65_536,
        max_search_vertices: 300,
        max_group_order: 1_000_000,
        max_connection_set: 14,
    };
}

impl Default for Limits {
    fn default() -> Self {
        Limits::DEFAULT
    }
}
