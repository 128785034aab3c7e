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

//! Individualization-refinement backtracking over vertex colorings.
//!
//! A coloring is a `Vec<u32>` of cell ids in `0..cells`. Every step that
//! changes a coloring (initial invariants, individualization, refinement)
//! renumbers cells by sorting vertex signatures, so it commutes with graph
//! automorphisms. That is what lets the left (base) path and the right
//! (candidate) path be compared cell by cell.

use std::sync::atomic::{AtomicBool, AtomicUsize, Ordering};

use rayon::prelude::*;

use super::group::PermutationGroup;
use super::perm::Permutation;
use crate::cayley::Graph;
use crate::error::{Error, Result};
use crate::Limits;

/// Distance invariants are only recomputed while the base is this short.
const DISTANCE_DEPTH: usize = 2;

#[derive(Clone, PartialEq, Eq)]
struct Coloring {
    colors: Vec<u32>,
    cells: usize,
}

impl Coloring {
    /// Cell ids ranked by sorted `keys`; equal keys share a cell.
    fn from_keys<K: Ord>(keys: &[K]) -> Coloring {
        let mut order: Vec<usize> = (0..keys.len()).collect();
        order.sort_by(|&a, &b| keys[a].cmp(&keys[b]));
        let mut colors = vec![0u32; keys.len()];
        let mut cells = 0usize;
        for (i, &v) in order.iter().enumerate() {
            if i > 0 && keys[order[i - 1]] != keys[v] {
                cells += 1;
            }
            colors[v] = cells as u32;
        }
        Coloring {
            colors,
            cells: if keys.is_empty() { 0 } else { cells + 1 },
        }
    }

    fn is_discrete(&self) -> bool {
        self.cells == self.colors.len()
    }

    fn cell_sizes(&self) -> Vec<u32> {
        let mut sizes = vec![0u32; self.cells];
        for &c in &self.colors {
            sizes[c as usize] += 1;
        }
        sizes
    }

    /// Smallest non-singleton cell, lowest id on ties.
    fn target_cell(&self) -> Option<u32> {
        self.cell_sizes()
            .iter()
            .enumerate()
            .filter(|(_, &s)| s > 1)
            .min_by_key(|(c, &s)| (s, *c))
            .map(|(c, _)| c as u32)
    }
}

struct Refiner<'g> {
    graph: &'g Graph,
}

impl<'g> Refiner<'g> {
    /// Degree, sorted neighbor degrees and the distance profile (number of
    /// vertices at each distance), then refined to an equitable partition.
    fn initial(&self) -> Coloring {
        let n = self.graph.vertex_count();
        let keys: Vec<(usize, Vec<usize>, Vec<u32>)> = (0..n)
            .map(|v| {
                let mut nd: Vec<usize> = self
                    .graph
                    .neighbors(v)
                    .iter()
                    .map(|&u| self.graph.degree(u as usize))
                    .collect();
                nd.sort_unstable();
                let mut profile = Vec::new();
                for d in self.graph.distances_from(v) {
                    let d = if d == u32::MAX { 0 } else { d as usize + 1 };
                    if profile.len() <= d {
                        profile.resize(d + 1, 0);
                    }
                    profile[d] += 1;
                }
                (self.graph.degree(v), nd, profile)
            })
            .collect();
        self.refine(Coloring::from_keys(&keys))
    }

    /// Iterated color refinement: a vertex's new cell is determined by its
    /// old cell and the multiset of its neighbors' cells.
    fn refine(&self, mut coloring: Coloring) -> Coloring {
        let n = self.graph.vertex_count();
        loop {
            let keys: Vec<(u32, Vec<u32>)> = (0..n)
                .map(|v| {
                    let mut nc: Vec<u32> = self
                        .graph
                        .neighbors(v)
                        .iter()
                        .map(|&u| coloring.colors[u as usize])
                        .collect();
                    nc.sort_unstable();
                    (coloring.colors[v], nc)
                })
                .collect();
            let next = Coloring::from_keys(&keys);
            if next.cells == coloring.cells {
                return next;
            }
            coloring = next;
        }
    }

    fn individualize(&self, coloring: &Coloring, v: usize, depth: usize) -> Coloring {
        let mut colors = coloring.colors.clone();
        colors[v] = coloring.cells as u32;
        let split = Coloring {
            colors,
            cells: coloring.cells + 1,
        };
        let split = if depth < DISTANCE_DEPTH {
            let dist = self.graph.distances_from(v);
            let keys: Vec<(u32, u32)> = split
                .colors
                .iter()
                .zip(dist)
                .map(|(&c, d)| (c, d))
                .collect();
            Coloring::from_keys(&keys)
        } else {
            split
        };
        self.refine(split)
    }
}

/// One level of the fixed left path.
struct BaseLevel {
    target: u32,
    base: usize,
    /// Coloring after individualizing `base`.
    after: Coloring,
    after_sizes: Vec<u32>,
}

struct Search<'g> {
    refiner: Refiner<'g>,
    graph: &'g Graph,
    path: Vec<BaseLevel>,
    max_order: usize,
    found: AtomicUsize,
    overflow: AtomicBool,
}

impl<'g> Search<'g> {
    fn candidates(&self, coloring: &Coloring, depth: usize, images: &[usize]) -> Vec<usize> {
        let level = &self.path[depth];
        let bases: Vec<usize> = self.path[..depth].iter().map(|l| l.base).collect();
        (0..coloring.colors.len())
            .filter(|&w| coloring.colors[w] == level.target)
            .filter(|&w| {
                bases.iter().zip(images).all(|(&b, &img)| {
                    self.graph.has_edge(level.base, b) == self.graph.has_edge(w, img)
                })
            })
            .collect()
    }

    fn explore(
        &self,
        coloring: &Coloring,
        depth: usize,
        images: &mut Vec<usize>,
        out: &mut Vec<Permutation>,
    ) {
        for w in self.candidates(coloring, depth, images) {
            if self.overflow.load(Ordering::Relaxed) {
                return;
            }
            images.push(w);
            self.descend(coloring, depth, w, images, out);
            images.pop();
        }
    }

    fn descend(
        &self,
        coloring: &Coloring,
        depth: usize,
        w: usize,
        images: &mut Vec<usize>,
        out: &mut Vec<Permutation>,
    ) {
        let level = &self.path[depth];
        let next = self.refiner.individualize(coloring, w, depth);
        if next.cells != level.after.cells || next.cell_sizes() != level.after_sizes {
            return;
        }
        if depth + 1 == self.path.len() {
            debug_assert!(next.is_discrete());
            if let Some(p) = self.leaf(&level.after, &next) {
                if self.found.fetch_add(1, Ordering::Relaxed) >= self.max_order {
                    self.overflow.store(true, Ordering::Relaxed);
                    return;
                }
                out.push(p);
            }
        } else {
            self.explore(&next, depth + 1, images, out);
        }
    }

    /// Maps each left vertex to the right vertex of the same (singleton)
    /// cell and keeps the map if it preserves adjacency.
    fn leaf(&self, left: &Coloring, right: &Coloring) -> Option<Permutation> {
        let n = left.colors.len();
        let mut by_color = vec![0u32; n];
        for (v, &c) in right.colors.iter().enumerate() {
            by_color[c as usize] = v as u32;
        }
        let images: Vec<u32> = left.colors.iter().map(|&c| by_color[c as usize]).collect();
        let p = Permutation::from_images_unchecked(images);
        p.preserves(self.graph).then_some(p)
    }
}

/// All automorphisms of `graph`, with default limits.
pub fn brute_force_aut(graph: &Graph) -> Result<PermutationGroup> {
    brute_force_aut_with(graph, &Limits::DEFAULT)
}

pub fn brute_force_aut_with(graph: &Graph, limits: &Limits) -> Result<PermutationGroup> {
    let n = graph.vertex_count();
    if n > limits.max_search_vertices {
        return Err(Error::resource(
            "vertex count for automorphism search",
            n,
            limits.max_search_vertices,
        ));
    }
    if n == 0 {
        return Ok(PermutationGroup::trivial(0));
    }
    let refiner = Refiner { graph };
    let root = refiner.initial();

    let mut path = Vec::new();
    let mut current = root.clone();
    while let Some(target) = current.target_cell() {
        let base = (0..n)
            .find(|&v| current.colors[v] == target)
            .expect("target cell is nonempty");
        let after = refiner.individualize(&current, base, path.len());
        let after_sizes = after.cell_sizes();
        path.push(BaseLevel {
            target,
            base,
            after: after.clone(),
            after_sizes,
        });
        current = after;
    }

    let search = Search {
        refiner,
        graph,
        path,
        max_order: limits.max_group_order,
        found: AtomicUsize::new(0),
        overflow: AtomicBool::new(false),
    };

    let elements: Vec<Permutation> = if search.path.is_empty() {
        // Root already discrete: only the identity can survive.
        let id = Permutation::identity(n);
        debug_assert!(id.preserves(graph));
        vec![id]
    } else {
        let top = search.candidates(&root, 0, &[]);
        let chunks: Vec<Vec<Permutation>> = top
            .par_iter()
            .map(|&w| {
                let mut out = Vec::new();
                let mut images = vec![w];
                search.descend(&root, 0, w, &mut images, &mut out);
                out
            })
            .collect();
        chunks.into_iter().flatten().collect()
    };
    if search.overflow.load(Ordering::Relaxed) {
        return Err(Error::resource(
            "automorphism group order",
            limits.max_group_order + 1,
            limits.max_group_order,
        ));
    }
    PermutationGroup::from_elements_with(n, elements, limits.max_group_order)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cayley::{complement, family_cycle, family_kary_ncube, family_mobius};

    #[test]
    fn small_orders() {
        assert_eq!(
            brute_force_aut(family_cycle(5).unwrap().graph())
                .unwrap()
                .order(),
            10
        );
        assert_eq!(
            brute_force_aut(family_mobius(5).unwrap().graph())
                .unwrap()
                .order(),
            120
        );
        assert_eq!(
            brute_force_aut(family_mobius(6).unwrap().graph())
                .unwrap()
                .order(),
            72
        );
        assert_eq!(
            brute_force_aut(family_kary_ncube(3, 2).unwrap().graph())
                .unwrap()
                .order(),
            72
        );
    }

    #[test]
    fn asymmetric_and_disconnected_graphs() {
        // Irregular graph: whatever the search returns must be automorphisms.
        let g =
            Graph::from_edges(6, [(0, 1), (1, 2), (2, 3), (3, 4), (2, 5), (5, 4), (1, 5)]).unwrap();
        let aut = brute_force_aut(&g).unwrap();
        assert!(aut.elements().iter().all(|p| p.preserves(&g)));
        let empty = Graph::from_edges(4, []).unwrap();
        assert_eq!(brute_force_aut(&empty).unwrap().order(), 24);
        let two_triangles = complement(family_mobius(6).unwrap().graph());
        assert_eq!(brute_force_aut(&two_triangles).unwrap().order(), 72);
        assert_eq!(
            brute_force_aut(&Graph::from_edges(0, []).unwrap())
                .unwrap()
                .order(),
            1
        );
    }

    #[test]
    fn caps() {
        let g = family_cycle(12).unwrap();
        let tight = Limits {
            max_search_vertices: 11,
            ..Limits::DEFAULT
        };
        assert!(matches!(
            brute_force_aut_with(g.graph(), &tight),
            Err(Error::Resource { .. })
        ));
        let tiny_group = Limits {
            max_group_order: 20,
            ..Limits::DEFAULT
        };
        assert!(matches!(
            brute_force_aut_with(g.graph(), &tiny_group),
            Err(Error::Resource { .. })
        ));
        assert_eq!(
            brute_force_aut_with(
                g.graph(),
                &Limits {
                    max_group_order: 24,
                    ..Limits::DEFAULT
                }
            )
            .unwrap()
            .order(),
            24
        );
    }
}
