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

use std::collections::HashSet;

use super::perm::Permutation;
use crate::error::{Error, Result};
use crate::Limits;

/// A permutation group held as its full, sorted element list.
///
/// `generators` is the greedy subset obtained by scanning the sorted
/// elements and keeping each one not already generated by its
/// predecessors; it is what orbit computations and conjugation tests use.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PermutationGroup {
    degree: usize,
    elements: Vec<Permutation>,
    generators: Vec<Permutation>,
}

impl PermutationGroup {
    pub fn trivial(degree: usize) -> PermutationGroup {
        PermutationGroup {
            degree,
            elements: vec![Permutation::identity(degree)],
            generators: Vec::new(),
        }
    }

    /// Wraps an explicit element set, checking that it contains the
    /// identity and is closed under composition.
    pub fn from_elements(degree: usize, elements: Vec<Permutation>) -> Result<PermutationGroup> {
        PermutationGroup::from_elements_with(degree, elements, Limits::DEFAULT.max_group_order)
    }

    pub fn from_elements_with(
        degree: usize,
        mut elements: Vec<Permutation>,
        max_order: usize,
    ) -> Result<PermutationGroup> {
        if let Some(p) = elements.iter().find(|p| p.degree() != degree) {
            return Err(Error::Argument(format!(
                "permutation of degree {} in a group of degree {degree}",
                p.degree()
            )));
        }
        elements.sort_unstable();
        elements.dedup();
        if elements.len() > max_order {
            return Err(Error::resource("group order", elements.len(), max_order));
        }
        if elements
            .binary_search(&Permutation::identity(degree))
            .is_err()
        {
            return Err(Error::Validation("element set lacks the identity".into()));
        }
        let members: HashSet<&Permutation> = elements.iter().collect();
        let mut closure = Closure::new(degree);
        let mut generators = Vec::new();
        for p in &elements {
            if closure.contains(p) {
                continue;
            }
            generators.push(p.clone());
            closure.extend(&generators, max_order, Some(&members))?;
        }
        if closure.len() != elements.len() {
            return Err(Error::Inconsistency(format!(
                "closure has {} elements, set has {}",
                closure.len(),
                elements.len()
            )));
        }
        Ok(PermutationGroup {
            degree,
            elements,
            generators,
        })
    }

    /// The group generated by `gens`.
    pub fn generate(degree: usize, gens: &[Permutation]) -> Result<PermutationGroup> {
        PermutationGroup::generate_with(degree, gens, Limits::DEFAULT.max_group_order)
    }

    pub fn generate_with(
        degree: usize,
        gens: &[Permutation],
        max_order: usize,
    ) -> Result<PermutationGroup> {
        if let Some(p) = gens.iter().find(|p| p.degree() != degree) {
            return Err(Error::Argument(format!(
                "generator of degree {} for a group of degree {degree}",
                p.degree()
            )));
        }
        let mut closure = Closure::new(degree);
        let mut used = Vec::new();
        for g in gens {
            used.push(g.clone());
            closure.extend(&used, max_order, None)?;
        }
        PermutationGroup::from_elements_with(degree, closure.into_elements(), max_order)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.elements.binary_search(p).is_ok()
    }

    /// Orbits of `0..degree`, each sorted, ordered by smallest member.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let mut uf = UnionFind::new(self.degree);
        for g in &self.generators {
            for x in 0..self.degree {
                uf.union(x, g.apply(x));
            }
        }
        uf.classes()
    }

    pub fn orbit_of(&self, v: usize) -> Result<Vec<usize>> {
        self.check_point(v)?;
        Ok(self
            .orbits()
            .into_iter()
            .find(|o| o.binary_search(&v).is_ok())
            .expect("every point lies in an orbit"))
    }

    /// `{p : p(v) = v}`.
    pub fn stabilizer(&self, v: usize) -> Result<PermutationGroup> {
        self.check_point(v)?;
        let elements = self
            .elements
            .iter()
            .filter(|p| p.apply(v) == v)
            .cloned()
            .collect();
        PermutationGroup::from_elements_with(self.degree, elements, usize::MAX)
    }

    pub fn is_transitive(&self) -> bool {
        self.orbits().len() <= 1
    }

    fn check_point(&self, v: usize) -> Result<()> {
        if v >= self.degree {
            return Err(Error::Argument(format!(
                "point {v} out of range for degree {}",
                self.degree
            )));
        }
        Ok(())
    }
}

/// Incrementally maintained closure under right multiplication by a
/// growing generator list.
struct Closure {
    list: Vec<Permutation>,
    set: HashSet<Permutation>,
    /// Generators already applied to every element of `list`.
    applied: usize,
}

impl Closure {
    fn new(degree: usize) -> Closure {
        let id = Permutation::identity(degree);
        Closure {
            list: vec![id.clone()],
            set: HashSet::from([id]),
            applied: 0,
        }
    }

    fn contains(&self, p: &Permutation) -> bool {
        self.set.contains(p)
    }

    fn len(&self) -> usize {
        self.list.len()
    }

    fn into_elements(self) -> Vec<Permutation> {
        self.list
    }

    fn extend(
        &mut self,
        gens: &[Permutation],
        max_order: usize,
        within: Option<&HashSet<&Permutation>>,
    ) -> Result<()> {
        let old_len = self.list.len();
        let new_gens = &gens[self.applied..];
        // Old elements only need the new generators; new ones need all.
        let mut i = 0;
        while i < self.list.len() {
            let gs = if i < old_len { new_gens } else { gens };
            for g in gs {
                let q = self.list[i].compose(g);
                if self.set.contains(&q) {
                    continue;
                }
                if let Some(members) = within {
                    if !members.contains(&q) {
                        return Err(Error::Validation(
                            "element set is not closed under composition".into(),
                        ));
                    }
                }
                if self.list.len() >= max_order {
                    return Err(Error::resource(
                        "group order",
                        self.list.len() + 1,
                        max_order,
                    ));
                }
                self.set.insert(q.clone());
                self.list.push(q);
            }
            i += 1;
        }
        self.applied = gens.len();
        Ok(())
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> UnionFind {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            let (lo, hi) = (ra.min(rb), ra.max(rb));
            self.parent[hi] = lo;
        }
    }

    fn classes(&mut self) -> Vec<Vec<usize>> {
        let n = self.parent.len();
        let mut by_root: Vec<Vec<usize>> = vec![Vec::new(); n];
        for x in 0..n {
            let r = self.find(x);
            by_root[r].push(x);
        }
        by_root.into_iter().filter(|c| !c.is_empty()).collect()
    }
}

fn check_same_degree(a: &PermutationGroup, b: &PermutationGroup) -> Result<()> {
    if a.degree != b.degree {
        return Err(Error::Argument(format!(
            "groups act on {} and {} points",
            a.degree, b.degree
        )));
    }
    Ok(())
}

pub fn orbits(group: &PermutationGroup) -> Vec<Vec<usize>> {
    group.orbits()
}

pub fn stabilizer(group: &PermutationGroup, v: usize) -> Result<PermutationGroup> {
    group.stabilizer(v)
}

pub fn group_equal(a: &PermutationGroup, b: &PermutationGroup) -> Result<bool> {
    check_same_degree(a, b)?;
    Ok(a.elements == b.elements)
}

/// Whether every element of `sub` lies in `sup`.
pub fn is_subgroup(sub: &PermutationGroup, sup: &PermutationGroup) -> Result<bool> {
    check_same_degree(sub, sup)?;
    Ok(sub.order() <= sup.order() && sub.elements.iter().all(|p| sup.contains(p)))
}

/// Whether the group is dihedral of order `2n`: some `r` of order `n` and
/// involution `s` with `s r s = r^-1` generate it.
pub fn is_dihedral(group: &PermutationGroup, n: usize) -> bool {
    if n == 0 || group.order() != 2 * n {
        return false;
    }
    let involutions: Vec<&Permutation> = group.elements.iter().filter(|p| p.order() == 2).collect();
    for r in group.elements.iter().filter(|p| p.order() == n as u64) {
        let r_inv = r.inverse();
        for s in &involutions {
            if s.compose(r).compose(s) != r_inv {
                continue;
            }
            if let Ok(h) = PermutationGroup::generate_with(
                group.degree,
                &[r.clone(), (*s).clone()],
                group.order(),
            ) {
                if h.order() == group.order() {
                    return true;
                }
            }
        }
    }
    false
}
