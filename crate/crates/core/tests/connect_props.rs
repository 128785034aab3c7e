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

mod common;

use proptest::prelude::*;

use cayleyaut::autgroup::brute_force_aut;
use cayleyaut::cayley::Graph;
use cayleyaut::connect::{edge_connectivity, vertex_connectivity, vertex_connectivity_with_group};

fn graph_strategy() -> impl Strategy<Value = Graph> {
    (2usize..=11, 0.2f64..0.9).prop_flat_map(|(n, p)| {
        let pairs = n * (n - 1) / 2;
        proptest::collection::vec(proptest::bool::weighted(p), pairs).prop_map(move |bits| {
            let edges = (0..n)
                .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                .zip(bits)
                .filter_map(|(e, b)| b.then_some(e));
            Graph::from_edges(n, edges).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn flow_matches_exhaustive_cuts(g in graph_strategy()) {
        let kappa = vertex_connectivity(&g).unwrap();
        let lambda = edge_connectivity(&g).unwrap();
        prop_assert_eq!(kappa, common::exhaustive_vertex_connectivity(&g));
        prop_assert_eq!(lambda, common::exhaustive_edge_connectivity(&g));
        prop_assert!(kappa <= lambda && lambda <= g.min_degree());
    }

    #[test]
    fn orbit_sources_give_same_answer(g in graph_strategy()) {
        let aut = brute_force_aut(&g).unwrap();
        prop_assert_eq!(vertex_connectivity_with_group(&g, &aut).unwrap(), vertex_connectivity(&g).unwrap());
    }
}

#[test]
fn symmetric_graphs_reach_their_degree() {
    use cayleyaut::cayley::{family_hypercube, family_kary_ncube, family_mobius};
    for n in 1..=6 {
        let g = family_hypercube(n).unwrap();
        assert_eq!(vertex_connectivity(g.graph()).unwrap(), n, "Q_{n}");
    }
    for (k, n) in [(3, 2), (3, 3), (5, 2), (4, 3), (6, 2), (7, 2)] {
        let g = family_kary_ncube(k, n).unwrap();
        assert_eq!(vertex_connectivity(g.graph()).unwrap(), 2 * n, "Q_{n}^{k}");
        assert_eq!(edge_connectivity(g.graph()).unwrap(), 2 * n, "Q_{n}^{k}");
    }
    for n in 6..=20 {
        let g = family_mobius(n).unwrap();
        assert_eq!(
            vertex_connectivity(g.graph()).unwrap(),
            g.graph().min_degree(),
            "M_{n}"
        );
    }
}

#[test]
fn path_and_star() {
    let path = Graph::from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap();
    assert_eq!(vertex_connectivity(&path).unwrap(), 1);
    assert_eq!(edge_connectivity(&path).unwrap(), 1);
    let disconnected = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
    assert_eq!(vertex_connectivity(&disconnected).unwrap(), 0);
    assert_eq!(edge_connectivity(&disconnected).unwrap(), 0);
    let k5 = Graph::complete(5);
    assert_eq!(vertex_connectivity(&k5).unwrap(), 4);
    assert_eq!(edge_connectivity(&k5).unwrap(), 4);
}
