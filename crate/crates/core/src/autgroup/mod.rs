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

//! Automorphism groups of small graphs: exhaustive search, explicit
//! permutation groups, orbits, stabilizers and transitivity.

mod group;
mod perm;
mod search;

pub use group::{group_equal, is_dihedral, is_subgroup, orbits, stabilizer, PermutationGroup};
pub use perm::Permutation;
pub use search::{brute_force_aut, brute_force_aut_with};

use crate::cayley::Graph;
use crate::error::{Error, Result};

pub fn is_vertex_transitive(graph: &Graph) -> Result<bool> {
    Ok(brute_force_aut(graph)?.is_transitive())
}

pub fn is_arc_transitive(graph: &Graph) -> Result<bool> {
    let aut = brute_force_aut(graph)?;
    arc_transitive_under(graph, &aut)
}

/// Arc-transitivity decided from an already computed automorphism group:
/// one vertex orbit, and the stabilizer of vertex 0 transitive on `N(0)`.
pub fn arc_transitive_under(graph: &Graph, aut: &PermutationGroup) -> Result<bool> {
    if aut.degree() != graph.vertex_count() {
        return Err(Error::Argument(format!(
            "group acts on {} points, graph has {} vertices",
            aut.degree(),
            graph.vertex_count()
        )));
    }
    if graph.vertex_count() == 0 || !aut.is_transitive() {
        return Ok(graph.vertex_count() == 0);
    }
    let nbrs = graph.neighbors(0);
    let Some(&first) = nbrs.first() else {
        return Ok(true);
    };
    let stab = aut.stabilizer(0)?;
    let orbit = stab.orbit_of(first as usize)?;
    Ok(nbrs
        .iter()
        .all(|&v| orbit.binary_search(&(v as usize)).is_ok()))
}
