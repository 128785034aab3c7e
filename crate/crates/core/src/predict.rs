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

//! The predicted automorphism group `L(H) ⋊ Aut(H, S)`, realized as the
//! affine maps `x -> a(x) + v`, and its comparison with the group found by
//! exhaustive search.

use crate::abelian::{aut_stabilizing_with, GroupElement, GroupEndoMap, GroupSpec};
use crate::autgroup::{
    brute_force_aut_with, group_equal, is_subgroup, Permutation, PermutationGroup,
};
use crate::cayley::{build_cayley_with, check_us, ConnectionSet, UsWitness};
use crate::error::{Error, Result};
use crate::Limits;

/// `x -> auto(x) + shift` for a group automorphism `auto`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AffineAut {
    pub auto: GroupEndoMap,
    pub shift: GroupElement,
}

impl AffineAut {
    pub fn new(spec: &GroupSpec, auto: GroupEndoMap, shift: GroupElement) -> Result<AffineAut> {
        if auto.images().len() != spec.order() || !auto.is_automorphism() {
            return Err(Error::Validation(
                "affine map needs an automorphism of the group".into(),
            ));
        }
        spec.index_of(&shift)?;
        Ok(AffineAut { auto, shift })
    }

    pub fn apply_index(&self, spec: &GroupSpec, x: usize) -> usize {
        let shift = spec.index_of(&self.shift).expect("validated shift");
        spec.add_index(self.auto.apply_index(x), shift)
    }

    /// `self ∘ first` = `(a2 ∘ a1, a2(v1) + v2)`.
    pub fn compose(&self, spec: &GroupSpec, first: &AffineAut) -> Result<AffineAut> {
        let shift = spec.add(&self.auto.apply(spec, &first.shift)?, &self.shift)?;
        Ok(AffineAut {
            auto: self.auto.compose(&first.auto),
            shift,
        })
    }

    pub fn to_permutation(&self, spec: &GroupSpec) -> Permutation {
        let shift = spec.index_of(&self.shift).expect("validated shift");
        Permutation::from_images_unchecked(
            (0..spec.order())
                .map(|x| spec.add_index(self.auto.apply_index(x), shift) as u32)
                .collect(),
        )
    }
}

/// Translations `x -> h + x`, one per group element.
pub fn left_regular(spec: &GroupSpec) -> Result<PermutationGroup> {
    left_regular_with(spec, &Limits::DEFAULT)
}

pub fn left_regular_with(spec: &GroupSpec, limits: &Limits) -> Result<PermutationGroup> {
    let n = spec.order();
    if n > limits.max_group_order {
        return Err(Error::resource("group order", n, limits.max_group_order));
    }
    let elements = (0..n)
        .map(|h| {
            Permutation::from_images_unchecked(
                (0..n).map(|x| spec.add_index(h, x) as u32).collect(),
            )
        })
        .collect();
    PermutationGroup::from_elements_with(n, elements, limits.max_group_order)
}

/// Every `x -> a(x) + v` with `a` in `Aut(H, S)` and `v` in `H`.
pub fn affine_maps(spec: &GroupSpec, conn: &ConnectionSet) -> Result<Vec<AffineAut>> {
    affine_maps_with(spec, conn, &Limits::DEFAULT)
}

pub fn affine_maps_with(
    spec: &GroupSpec,
    conn: &ConnectionSet,
    limits: &Limits,
) -> Result<Vec<AffineAut>> {
    check_group(spec, conn)?;
    let auts = aut_stabilizing_with(spec, conn.elements(), limits.max_connection_set)?;
    let total = auts.len().saturating_mul(spec.order());
    if total > limits.max_group_order {
        return Err(Error::resource(
            "predicted group order",
            total,
            limits.max_group_order,
        ));
    }
    let mut out = Vec::with_capacity(total);
    for a in &auts {
        for v in 0..spec.order() {
            out.push(AffineAut {
                auto: a.clone(),
                shift: spec.element_at(v),
            });
        }
    }
    Ok(out)
}

pub fn predicted_group(spec: &GroupSpec, conn: &ConnectionSet) -> Result<PermutationGroup> {
    predicted_group_with(spec, conn, &Limits::DEFAULT)
}

pub fn predicted_group_with(
    spec: &GroupSpec,
    conn: &ConnectionSet,
    limits: &Limits,
) -> Result<PermutationGroup> {
    let maps = affine_maps_with(spec, conn, limits)?;
    let expected = maps.len();
    let perms: Vec<Permutation> = maps.iter().map(|m| m.to_permutation(spec)).collect();
    let group = PermutationGroup::from_elements_with(spec.order(), perms, limits.max_group_order)?;
    // L ∩ A is trivial, so distinct pairs give distinct permutations.
    if group.order() != expected {
        return Err(Error::Inconsistency(format!(
            "predicted group has {} distinct permutations, expected |H|*|A| = {expected}",
            group.order()
        )));
    }
    Ok(group)
}

/// Whether `sub` is normalized by `sup`, tested on generators:
/// `p ∘ l ∘ p^-1` must lie in `sub` for every generator pair.
pub fn is_normal_subgroup(sub: &PermutationGroup, sup: &PermutationGroup) -> Result<bool> {
    if !is_subgroup(sub, sup)? {
        return Ok(false);
    }
    Ok(sup.generators().iter().all(|p| {
        let p_inv = p.inverse();
        sub.generators()
            .iter()
            .all(|l| sub.contains(&p.compose(l).compose(&p_inv)))
    }))
}

/// Outcome of comparing `L(H) ⋊ Aut(H, S)` against `Aut(Cay(H; S))`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub us_holds: bool,
    pub us_witness: Option<UsWitness>,
    pub predicted_order: usize,
    pub aut_order: usize,
    pub containment: bool,
    pub equality: bool,
    /// Equal to `us_holds`: the equality is only claimed under the us-property.
    pub prediction_applicable: bool,
    /// `Some(equality)` when applicable, `None` otherwise.
    pub prediction_confirmed: Option<bool>,
}

/// The report together with the two groups it was computed from.
#[derive(Debug, Clone)]
pub struct Verification {
    pub report: VerificationReport,
    pub predicted: PermutationGroup,
    pub aut: PermutationGroup,
}

pub fn verify_prediction(spec: &GroupSpec, conn: &ConnectionSet) -> Result<VerificationReport> {
    Ok(verify_with(spec, conn, &Limits::DEFAULT)?.report)
}

pub fn verify_with(
    spec: &GroupSpec,
    conn: &ConnectionSet,
    limits: &Limits,
) -> Result<Verification> {
    check_group(spec, conn)?;
    let graph = build_cayley_with(spec, conn, limits)?;
    let us = check_us(spec, conn)?;
    let (predicted, aut) = rayon::join(
        || predicted_group_with(spec, conn, limits),
        || brute_force_aut_with(graph.graph(), limits),
    );
    let (predicted, aut) = (predicted?, aut?);
    let containment = is_subgroup(&predicted, &aut)?;
    if !containment {
        return Err(Error::Inconsistency(format!(
            "predicted group of order {} is not contained in the automorphism group of order {}",
            predicted.order(),
            aut.order()
        )));
    }
    let equality = group_equal(&predicted, &aut)?;
    let report = VerificationReport {
        us_holds: us.holds,
        us_witness: us.witness,
        predicted_order: predicted.order(),
        aut_order: aut.order(),
        containment,
        equality,
        prediction_applicable: us.holds,
        prediction_confirmed: us.holds.then_some(equality),
    };
    Ok(Verification {
        report,
        predicted,
        aut,
    })
}

fn check_group(spec: &GroupSpec, conn: &ConnectionSet) -> Result<()> {
    if spec != conn.group() {
        return Err(Error::Validation(format!(
            "connection set belongs to {} but {} was given",
            conn.group(),
            spec
        )));
    }
    Ok(())
}
