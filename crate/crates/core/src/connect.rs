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

//! Vertex and edge connectivity by unit-capacity max-flow.

use std::collections::VecDeque;

use crate::autgroup::PermutationGroup;
use crate::cayley::Graph;
use crate::error::{Error, Result};

const INF: u32 = u32::MAX / 2;

#[derive(Debug, Clone)]
struct Arc {
    to: usize,
    cap: u32,
    flow: u32,
}

/// Residual network with paired arcs (`arc ^ 1` is the reverse of `arc`).
#[derive(Debug, Clone)]
pub struct FlowNetwork {
    arcs: Vec<Arc>,
    out: Vec<Vec<usize>>,
}

impl FlowNetwork {
    fn new(nodes: usize) -> FlowNetwork {
        FlowNetwork {
            arcs: Vec::new(),
            out: vec![Vec::new(); nodes],
        }
    }

    fn add_arc(&mut self, from: usize, to: usize, cap: u32, rev_cap: u32) {
        self.out[from].push(self.arcs.len());
        self.arcs.push(Arc { to, cap, flow: 0 });
        self.out[to].push(self.arcs.len());
        self.arcs.push(Arc {
            to: from,
            cap: rev_cap,
            flow: 0,
        });
    }

    /// Node `2v` is `v_in`, `2v + 1` is `v_out`; `v_in -> v_out` has
    /// capacity 1 and every edge `{u, v}` becomes `u_out -> v_in` and
    /// `v_out -> u_in` with unbounded capacity.
    pub fn vertex_split(graph: &Graph) -> FlowNetwork {
        let n = graph.vertex_count();
        let mut net = FlowNetwork::new(2 * n);
        for v in 0..n {
            net.add_arc(2 * v, 2 * v + 1, 1, 0);
        }
        for (u, v) in graph.edges() {
            net.add_arc(2 * u + 1, 2 * v, INF, 0);
            net.add_arc(2 * v + 1, 2 * u, INF, 0);
        }
        net
    }

    /// One node per vertex, capacity 1 in each direction of every edge.
    pub fn edge_unit(graph: &Graph) -> FlowNetwork {
        let mut net = FlowNetwork::new(graph.vertex_count());
        for (u, v) in graph.edges() {
            net.add_arc(u, v, 1, 1);
        }
        net
    }

    fn reset(&mut self) {
        for a in &mut self.arcs {
            a.flow = 0;
        }
    }

    fn residual(&self, arc: usize) -> i64 {
        let a = &self.arcs[arc];
        i64::from(a.cap) - i64::from(a.flow) + i64::from(self.arcs[arc ^ 1].flow)
    }

    /// Max-flow value from `s` to `t` by BFS augmenting paths, stopping once
    /// `limit` is reached. Flows are reset first.
    pub fn max_flow(&mut self, s: usize, t: usize, limit: usize) -> usize {
        self.reset();
        let mut value = 0;
        let mut pred = vec![usize::MAX; self.out.len()];
        while value < limit {
            pred.fill(usize::MAX);
            let mut queue = VecDeque::from([s]);
            let mut reached = false;
            'bfs: while let Some(u) = queue.pop_front() {
                for &arc in &self.out[u] {
                    let v = self.arcs[arc].to;
                    if v != s && pred[v] == usize::MAX && self.residual(arc) > 0 {
                        pred[v] = arc;
                        if v == t {
                            reached = true;
                            break 'bfs;
                        }
                        queue.push_back(v);
                    }
                }
            }
            if !reached {
                break;
            }
            // Unit augmentation: vertex arcs have capacity 1 and edge arcs
            // are never the bottleneck.
            let mut v = t;
            while v != s {
                let arc = pred[v];
                let back = arc ^ 1;
                if self.arcs[back].flow > 0 {
                    self.arcs[back].flow -= 1;
                } else {
                    self.arcs[arc].flow += 1;
                }
                v = self.arcs[back].to;
            }
            value += 1;
        }
        value
    }
}

fn check_size(graph: &Graph) -> Result<()> {
    if graph.vertex_count() < 2 {
        return Err(Error::Argument(
            "connectivity needs at least two vertices".into(),
        ));
    }
    Ok(())
}

/// Minimum number of vertices whose removal disconnects the graph
/// (`n - 1` for complete graphs, 0 for disconnected ones).
pub fn vertex_connectivity(graph: &Graph) -> Result<usize> {
    check_size(graph)?;
    let n = graph.vertex_count();
    if !graph.is_connected() {
        return Ok(0);
    }
    if graph.edge_count() == n * (n - 1) / 2 {
        return Ok(n - 1);
    }
    let mut net = FlowNetwork::vertex_split(graph);
    let mut best = graph.min_degree();
    // Some vertex among the first best + 1 avoids a minimum separator.
    let mut i = 0;
    while i <= best && i < n {
        for j in i + 1..n {
            if !graph.has_edge(i, j) {
                best = best.min(net.max_flow(2 * i + 1, 2 * j, best));
            }
        }
        i += 1;
    }
    Ok(best)
}

/// Same value as [`vertex_connectivity`], using one source per orbit of an
/// automorphism group of the graph.
pub fn vertex_connectivity_with_group(graph: &Graph, aut: &PermutationGroup) -> Result<usize> {
    check_size(graph)?;
    if aut.degree() != graph.vertex_count() {
        return Err(Error::Argument(format!(
            "group acts on {} points, graph has {} vertices",
            aut.degree(),
            graph.vertex_count()
        )));
    }
    let n = graph.vertex_count();
    if !graph.is_connected() {
        return Ok(0);
    }
    if graph.edge_count() == n * (n - 1) / 2 {
        return Ok(n - 1);
    }
    let mut net = FlowNetwork::vertex_split(graph);
    let mut best = graph.min_degree();
    for orbit in aut.orbits() {
        let s = orbit[0];
        for t in 0..n {
            if t != s && !graph.has_edge(s, t) {
                best = best.min(net.max_flow(2 * s + 1, 2 * t, best));
            }
        }
    }
    Ok(best)
}

/// Minimum number of edges whose removal disconnects the graph.
pub fn edge_connectivity(graph: &Graph) -> Result<usize> {
    check_size(graph)?;
    if !graph.is_connected() {
        return Ok(0);
    }
    let mut net = FlowNetwork::edge_unit(graph);
    let mut best = graph.min_degree();
    for t in 1..graph.vertex_count() {
        best = best.min(net.max_flow(0, t, best));
    }
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::autgroup::brute_force_aut;
    use crate::cayley::{family_cycle, family_hypercube, family_kary_ncube, family_mobius};

    /// Smallest vertex set whose removal disconnects the graph, by
    /// enumerating subsets in order of size.
    fn exhaustive_vertex_cut(g: &Graph) -> usize {
        let n = g.vertex_count();
        for size in 0..n.saturating_sub(1) {
            for mask in 0u32..(1 << n) {
                if mask.count_ones() as usize != size {
                    continue;
                }
                let keep: Vec<usize> = (0..n).filter(|v| mask & (1 << v) == 0).collect();
                let mut seen = vec![false; n];
                let mut stack = vec![keep[0]];
                seen[keep[0]] = true;
                while let Some(u) = stack.pop() {
                    for &v in g.neighbors(u) {
                        let v = v as usize;
                        if mask & (1 << v) == 0 && !seen[v] {
                            seen[v] = true;
                            stack.push(v);
                        }
                    }
                }
                if keep.iter().any(|&v| !seen[v]) {
                    return size;
                }
            }
        }
        n - 1
    }

    #[test]
    fn examples() {
        assert_eq!(
            vertex_connectivity(family_cycle(6).unwrap().graph()).unwrap(),
            2
        );
        assert_eq!(
            vertex_connectivity(family_hypercube(3).unwrap().graph()).unwrap(),
            3
        );
        assert_eq!(
            vertex_connectivity(family_kary_ncube(3, 2).unwrap().graph()).unwrap(),
            4
        );
        assert_eq!(
            edge_connectivity(family_cycle(5).unwrap().graph()).unwrap(),
            2
        );
        assert_eq!(
            edge_connectivity(family_kary_ncube(5, 2).unwrap().graph()).unwrap(),
            4
        );
        assert_eq!(
            edge_connectivity(family_mobius(8).unwrap().graph()).unwrap(),
            3
        );
        assert_eq!(vertex_connectivity(&Graph::complete(5)).unwrap(), 4);
    }

    #[test]
    fn degenerate_inputs() {
        let single = Graph::from_edges(1, []).unwrap();
        assert!(matches!(
            vertex_connectivity(&single),
            Err(Error::Argument(_))
        ));
        assert!(matches!(
            edge_connectivity(&single),
            Err(Error::Argument(_))
        ));
        let split = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(vertex_connectivity(&split).unwrap(), 0);
        assert_eq!(edge_connectivity(&split).unwrap(), 0);
        // A path: cut vertex in the middle, bridge edges.
        let path = Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(vertex_connectivity(&path).unwrap(), 1);
        assert_eq!(edge_connectivity(&path).unwrap(), 1);
    }

    #[test]
    fn matches_exhaustive_cut_search() {
        let mut graphs: Vec<Graph> = (3..=12)
            .map(|n| family_cycle(n).unwrap().graph().clone())
            .collect();
        graphs.extend((4..=12).map(|n| family_mobius(n).unwrap().graph().clone()));
        graphs.push(family_hypercube(3).unwrap().graph().clone());
        graphs.push(family_kary_ncube(3, 2).unwrap().graph().clone());
        // Two K4s sharing one vertex, and a barbell.
        graphs.push(
            Graph::from_edges(
                7,
                [
                    (0, 1),
                    (0, 2),
                    (0, 3),
                    (1, 2),
                    (1, 3),
                    (2, 3),
                    (3, 4),
                    (3, 5),
                    (3, 6),
                    (4, 5),
                    (4, 6),
                    (5, 6),
                ],
            )
            .unwrap(),
        );
        graphs.push(
            Graph::from_edges(6, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (4, 5), (3, 5)]).unwrap(),
        );
        for g in &graphs {
            let oracle = exhaustive_vertex_cut(g);
            assert_eq!(vertex_connectivity(g).unwrap(), oracle, "{g:?}");
            let aut = brute_force_aut(g).unwrap();
            assert_eq!(vertex_connectivity_with_group(g, &aut).unwrap(), oracle);
        }
    }
}
