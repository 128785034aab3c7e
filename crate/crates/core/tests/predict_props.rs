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

use std::collections::BTreeSet;

use proptest::prelude::*;

use cayleyaut::abelian::{aut_stabilizing, generates, GroupElement, GroupSpec};
use cayleyaut::cayley::{build_cayley, check_us, ConnectionSet};
use cayleyaut::predict::{affine_maps, verify_with};
use cayleyaut::{Error, Limits};

/// A group of order at most 36 with a random inverse-closed generating set.
fn instance() -> impl Strategy<Value = (GroupSpec, ConnectionSet)> {
    prop_oneof![
        (3u32..=24).prop_map(|n| vec![n]),
        (2u32..=6, 2u32..=6).prop_map(|(a, b)| vec![a, b]),
        Just(vec![2, 2, 2]),
        Just(vec![2, 2, 3]),
        Just(vec![2, 3, 3]),
    ]
    .prop_flat_map(|moduli| {
        let spec = GroupSpec::new(moduli).unwrap();
        let n = spec.order();
        (Just(spec), proptest::collection::btree_set(1..n, 1..6))
    })
    .prop_filter_map("connection set must generate", |(spec, picks)| {
        let mut idx: BTreeSet<usize> = BTreeSet::new();
        for x in picks {
            idx.insert(x);
            idx.insert(spec.neg_index(x));
        }
        let set: Vec<GroupElement> = idx.iter().map(|&i| spec.element_at(i)).collect();
        if set.len() > 10 || !generates(&spec, &set).unwrap() {
            return None;
        }
        let conn = ConnectionSet::new(&spec, &set).unwrap();
        Some((spec, conn))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(150))]

    #[test]
    fn graph_matches_definition((spec, conn) in instance()) {
        let g = build_cayley(&spec, &conn).unwrap();
        let s = common::residues(conn.elements());
        let edges: BTreeSet<(usize, usize)> = g.graph().edges().collect();
        prop_assert_eq!(edges, common::cayley_edges(&spec, &s));
        prop_assert_eq!(g.graph().regular_degree(), Some(conn.len()));
        prop_assert_eq!(2 * g.graph().edge_count(), spec.order() * conn.len());
    }

    #[test]
    fn stabilizing_automorphisms_match_oracle((spec, conn) in instance()) {
        let got: BTreeSet<Vec<u32>> = aut_stabilizing(&spec, conn.elements())
            .unwrap()
            .iter()
            .map(|m| m.images().to_vec())
            .collect();
        let s = common::residues(conn.elements());
        prop_assert_eq!(got, common::aut_stabilizing_oracle(&spec, &s));
    }

    #[test]
    fn containment_always_and_equality_under_us((spec, conn) in instance()) {
        // Dense instances can have very large groups (K_{n,n} and the like);
        // those are skipped rather than enumerated.
        let limits = Limits { max_group_order: 20_000, ..Limits::DEFAULT };
        let v = match verify_with(&spec, &conn, &limits) {
            Err(Error::Resource { .. }) => return Err(TestCaseError::reject("group too large")),
            other => other.unwrap(),
        };
        let r = &v.report;
        prop_assert!(r.containment);
        prop_assert_eq!(r.aut_order % r.predicted_order, 0);
        prop_assert_eq!(r.prediction_applicable, r.us_holds);
        if r.us_holds {
            prop_assert!(r.equality);
            prop_assert_eq!(r.prediction_confirmed, Some(true));
        }
        if r.equality {
            prop_assert_eq!(r.predicted_order, r.aut_order);
        }
        let s = common::residues(conn.elements());
        prop_assert_eq!(check_us(&spec, &conn).unwrap().holds, common::us_quadruple_loop(spec.moduli(), &s));
    }

    #[test]
    fn affine_composition_is_pointwise((spec, conn) in instance(), i in any::<usize>(), j in any::<usize>()) {
        let maps = affine_maps(&spec, &conn).unwrap();
        let a = &maps[i % maps.len()];
        let b = &maps[j % maps.len()];
        let ab = a.compose(&spec, b).unwrap();
        for x in 0..spec.order() {
            prop_assert_eq!(ab.apply_index(&spec, x), a.apply_index(&spec, b.apply_index(&spec, x)));
        }
        prop_assert_eq!(ab.to_permutation(&spec), a.to_permutation(&spec).compose(&b.to_permutation(&spec)));
    }
}
