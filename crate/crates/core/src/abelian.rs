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

//! Arithmetic in finite abelian groups `Z_{m1} x ... x Z_{mr}` and
//! enumeration of the automorphisms that fix a connection set.
//!
//! Elements are residue tuples. Every element also has a dense index in
//! `[0, |H|)` given by the little-endian mixed radix
//! `index = x_1 + m_1 * (x_2 + m_2 * (x_3 + ...))`, which is the vertex id
//! used by every other module.

use std::collections::VecDeque;
use std::fmt;

use crate::error::{Error, Result};
use crate::Limits;

/// Largest supported group order.
pub const MAX_GROUP_ORDER: u64 = 1 << 31;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GroupSpec {
    moduli: Vec<u32>,
    order: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupElement {
    residues: Vec<u32>,
}

impl GroupElement {
    pub fn residues(&self) -> &[u32] {
        &self.residues
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.residues.len() == 1 {
            return write!(f, "{}", self.residues[0]);
        }
        write!(f, "(")?;
        for (i, r) in self.residues.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{r}")?;
        }
        write!(f, ")")
    }
}

impl GroupSpec {
    pub fn new(moduli: Vec<u32>) -> Result<GroupSpec> {
        if moduli.is_empty() {
            return Err(Error::Validation(
                "group needs at least one cyclic factor".into(),
            ));
        }
        let mut order: u64 = 1;
        for &m in &moduli {
            if m < 2 {
                return Err(Error::Validation(format!(
                    "every modulus must be at least 2, got {m}"
                )));
            }
            order = order.saturating_mul(u64::from(m));
            if order > MAX_GROUP_ORDER {
                return Err(Error::resource(
                    "group order",
                    usize::try_from(order).unwrap_or(usize::MAX),
                    MAX_GROUP_ORDER as usize,
                ));
            }
        }
        Ok(GroupSpec {
            moduli,
            order: order as usize,
        })
    }

    /// `Z_n`.
    pub fn cyclic(n: u32) -> Result<GroupSpec> {
        GroupSpec::new(vec![n])
    }

    /// `Z_k^n`.
    pub fn power(k: u32, n: usize) -> Result<GroupSpec> {
        if n == 0 {
            return Err(Error::Argument("rank must be at least 1".into()));
        }
        GroupSpec::new(vec![k; n])
    }

    pub fn moduli(&self) -> &[u32] {
        &self.moduli
    }

    pub fn rank(&self) -> usize {
        self.moduli.len()
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Builds an element from residues that must already be reduced.
    pub fn element(&self, residues: &[u32]) -> Result<GroupElement> {
        self.check_dim(residues.len())?;
        for (i, (&x, &m)) in residues.iter().zip(&self.moduli).enumerate() {
            if x >= m {
                return Err(Error::Validation(format!(
                    "residue {x} at position {i} is not reduced modulo {m}"
                )));
            }
        }
        Ok(GroupElement {
            residues: residues.to_vec(),
        })
    }

    /// Builds an element from arbitrary integers, reducing each modulo `m_i`.
    pub fn reduce(&self, values: &[i64]) -> Result<GroupElement> {
        self.check_dim(values.len())?;
        let residues = values
            .iter()
            .zip(&self.moduli)
            .map(|(&v, &m)| v.rem_euclid(i64::from(m)) as u32)
            .collect();
        Ok(GroupElement { residues })
    }

    /// The unit vector with 1 in position `i`.
    pub fn unit(&self, i: usize) -> Result<GroupElement> {
        if i >= self.rank() {
            return Err(Error::Argument(format!(
                "unit vector position {i} out of range for rank {}",
                self.rank()
            )));
        }
        let mut residues = vec![0; self.rank()];
        residues[i] = 1;
        Ok(GroupElement { residues })
    }

    pub fn zero(&self) -> GroupElement {
        GroupElement {
            residues: vec![0; self.rank()],
        }
    }

    pub fn add(&self, a: &GroupElement, b: &GroupElement) -> Result<GroupElement> {
        self.check_dim(a.residues.len())?;
        self.check_dim(b.residues.len())?;
        let residues = a
            .residues
            .iter()
            .zip(&b.residues)
            .zip(&self.moduli)
            .map(|((&x, &y), &m)| ((u64::from(x) + u64::from(y)) % u64::from(m)) as u32)
            .collect();
        Ok(GroupElement { residues })
    }

    pub fn neg(&self, a: &GroupElement) -> Result<GroupElement> {
        self.check_dim(a.residues.len())?;
        let residues = a
            .residues
            .iter()
            .zip(&self.moduli)
            .map(|(&x, &m)| (m - x % m) % m)
            .collect();
        Ok(GroupElement { residues })
    }

    /// Least `t >= 1` with `t * a = 0`.
    pub fn elem_order(&self, a: &GroupElement) -> Result<u64> {
        self.check_dim(a.residues.len())?;
        Ok(a.residues
            .iter()
            .zip(&self.moduli)
            .fold(1u64, |acc, (&x, &m)| {
                let m = u64::from(m);
                lcm(acc, m / gcd(m, u64::from(x)))
            }))
    }

    pub fn index_of(&self, a: &GroupElement) -> Result<usize> {
        self.check_dim(a.residues.len())?;
        let mut index = 0usize;
        for (&x, &m) in a.residues.iter().zip(&self.moduli).rev() {
            index = index * m as usize + x as usize;
        }
        Ok(index)
    }

    pub fn element_at(&self, index: usize) -> GroupElement {
        assert!(index < self.order, "element index {index} out of range");
        let mut rest = index;
        let residues = self
            .moduli
            .iter()
            .map(|&m| {
                let x = (rest % m as usize) as u32;
                rest /= m as usize;
                x
            })
            .collect();
        GroupElement { residues }
    }

    /// Addition on element indices.
    pub fn add_index(&self, a: usize, b: usize) -> usize {
        let (mut a, mut b) = (a, b);
        let mut out = 0;
        let mut stride = 1;
        for &m in &self.moduli {
            let m = m as usize;
            let s = (a % m + b % m) % m;
            out += s * stride;
            stride *= m;
            a /= m;
            b /= m;
        }
        out
    }

    pub fn neg_index(&self, a: usize) -> usize {
        let mut a = a;
        let mut out = 0;
        let mut stride = 1;
        for &m in &self.moduli {
            let m = m as usize;
            out += ((m - a % m) % m) * stride;
            stride *= m;
            a /= m;
        }
        out
    }

    pub(crate) fn indices_of(&self, elems: &[GroupElement]) -> Result<Vec<usize>> {
        elems.iter().map(|e| self.index_of(e)).collect()
    }

    fn check_dim(&self, found: usize) -> Result<()> {
        if found != self.rank() {
            return Err(Error::Dimension {
                expected: self.rank(),
                found,
            });
        }
        Ok(())
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, m) in self.moduli.iter().enumerate() {
            if i > 0 {
                write!(f, " x ")?;
            }
            write!(f, "Z_{m}")?;
        }
        Ok(())
    }
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

/// Whether the additive closure of `set` is the whole group.
pub fn generates(spec: &GroupSpec, set: &[GroupElement]) -> Result<bool> {
    if set.is_empty() {
        return Err(Error::Argument("generating set must be nonempty".into()));
    }
    let idx = spec.indices_of(set)?;
    Ok(spanning_tree(spec, &idx).is_some())
}

/// BFS tree from 0 where each reached element `x` records `(y, j)` with
/// `x = y + gens[j]`. `None` if some element is unreachable.
fn spanning_tree(spec: &GroupSpec, gens: &[usize]) -> Option<Vec<(usize, usize)>> {
    let n = spec.order();
    let mut parent = vec![(usize::MAX, usize::MAX); n];
    let mut seen = vec![false; n];
    let mut queue = VecDeque::from([0usize]);
    seen[0] = true;
    let mut reached = 1;
    while let Some(x) = queue.pop_front() {
        for (j, &s) in gens.iter().enumerate() {
            let y = spec.add_index(x, s);
            if !seen[y] {
                seen[y] = true;
                parent[y] = (x, j);
                reached += 1;
                queue.push_back(y);
            }
        }
    }
    (reached == n).then_some(parent)
}

/// A total function `H -> H` stored as an image table over element indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupEndoMap {
    images: Vec<u32>,
    is_automorphism: bool,
}

impl GroupEndoMap {
    pub fn identity(spec: &GroupSpec) -> GroupEndoMap {
        GroupEndoMap {
            images: (0..spec.order() as u32).collect(),
            is_automorphism: true,
        }
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    pub fn apply_index(&self, x: usize) -> usize {
        self.images[x] as usize
    }

    pub fn apply(&self, spec: &GroupSpec, x: &GroupElement) -> Result<GroupElement> {
        Ok(spec.element_at(self.apply_index(spec.index_of(x)?)))
    }

    /// Set when the map is known to be additive and bijective.
    pub fn is_automorphism(&self) -> bool {
        self.is_automorphism
    }

    pub fn is_bijective(&self) -> bool {
        let mut seen = vec![false; self.images.len()];
        self.images
            .iter()
            .all(|&y| !std::mem::replace(&mut seen[y as usize], true))
    }

    /// Exhaustive check of `f(x + y) = f(x) + f(y)` over all pairs.
    pub fn is_additive(&self, spec: &GroupSpec) -> bool {
        let n = spec.order();
        (0..n).all(|x| {
            (0..n).all(|y| {
                self.apply_index(spec.add_index(x, y))
                    == spec.add_index(self.apply_index(x), self.apply_index(y))
            })
        })
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &GroupEndoMap) -> GroupEndoMap {
        GroupEndoMap {
            images: other
                .images
                .iter()
                .map(|&x| self.images[x as usize])
                .collect(),
            is_automorphism: self.is_automorphism && other.is_automorphism,
        }
    }

    pub fn inverse(&self) -> Option<GroupEndoMap> {
        if !self.is_bijective() {
            return None;
        }
        let mut inv = vec![0u32; self.images.len()];
        for (x, &y) in self.images.iter().enumerate() {
            inv[y as usize] = x as u32;
        }
        Some(GroupEndoMap {
            images: inv,
            is_automorphism: self.is_automorphism,
        })
    }
}

/// Outcome of extending an assignment on generators to a homomorphism.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Extension {
    Map(GroupEndoMap),
    /// `f(x + s) != f(x) + f(s)` for the tree-defined `f`.
    NotExtendable {
        x: GroupElement,
        s: GroupElement,
    },
}

/// Extends `gens[j] -> images[j]` additively to all of `H`.
///
/// `f` is defined along a BFS tree from 0 and then checked against
/// `f(x + s) = f(x) + f(s)` for every `x` and every generator `s`, which
/// forces additivity because the generators span `H`.
pub fn extend_map(
    spec: &GroupSpec,
    gens: &[GroupElement],
    images: &[GroupElement],
) -> Result<Extension> {
    if gens.len() != images.len() {
        return Err(Error::Argument(format!(
            "{} generators but {} images",
            gens.len(),
            images.len()
        )));
    }
    if gens.is_empty() {
        return Err(Error::Argument("generating set must be nonempty".into()));
    }
    let g = spec.indices_of(gens)?;
    let im = spec.indices_of(images)?;
    let tree = spanning_tree(spec, &g)
        .ok_or_else(|| Error::Validation("the given elements do not generate the group".into()))?;
    Ok(match extend_on_tree(spec, &tree, &g, &im) {
        Ok(map) => Extension::Map(map),
        Err((x, j)) => Extension::NotExtendable {
            x: spec.element_at(x),
            s: gens[j].clone(),
        },
    })
}

fn extend_on_tree(
    spec: &GroupSpec,
    tree: &[(usize, usize)],
    gens: &[usize],
    images: &[usize],
) -> std::result::Result<GroupEndoMap, (usize, usize)> {
    let n = spec.order();
    let mut f = vec![u32::MAX; n];
    f[0] = 0;
    // BFS order guarantees parents are assigned first; walk the tree lazily.
    let mut stack = Vec::new();
    for x in 1..n {
        let mut y = x;
        while f[y] == u32::MAX {
            stack.push(y);
            y = tree[y].0;
        }
        while let Some(z) = stack.pop() {
            let (p, j) = tree[z];
            f[z] = spec.add_index(f[p] as usize, images[j]) as u32;
        }
    }
    for x in 0..n {
        for (j, &s) in gens.iter().enumerate() {
            if f[spec.add_index(x, s)] as usize != spec.add_index(f[x] as usize, images[j]) {
                return Err((x, j));
            }
        }
    }
    let mut map = GroupEndoMap {
        images: f,
        is_automorphism: false,
    };
    map.is_automorphism = map.is_bijective();
    Ok(map)
}

/// Checks that `set` is a valid connection set: nonempty, free of 0,
/// inverse-closed and generating. Returns sorted, deduplicated indices.
pub(crate) fn validate_connection_indices(
    spec: &GroupSpec,
    set: &[GroupElement],
) -> Result<Vec<usize>> {
    if set.is_empty() {
        return Err(Error::Validation("connection set is empty".into()));
    }
    let mut idx = spec.indices_of(set)?;
    idx.sort_unstable();
    idx.dedup();
    if idx[0] == 0 {
        return Err(Error::Validation(
            "connection set contains the identity element 0".into(),
        ));
    }
    for &s in &idx {
        if idx.binary_search(&spec.neg_index(s)).is_err() {
            return Err(Error::Validation(format!(
                "connection set is not inverse-closed: {} is present but its inverse {} is not",
                spec.element_at(s),
                spec.element_at(spec.neg_index(s))
            )));
        }
    }
    if spanning_tree(spec, &idx).is_none() {
        return Err(Error::Validation(
            "connection set does not generate the group".into(),
        ));
    }
    Ok(idx)
}

/// All automorphisms `f` of `H` with `f(S) = S`, sorted by image table.
pub fn aut_stabilizing(spec: &GroupSpec, set: &[GroupElement]) -> Result<Vec<GroupEndoMap>> {
    aut_stabilizing_with(spec, set, Limits::DEFAULT.max_connection_set)
}

pub fn aut_stabilizing_with(
    spec: &GroupSpec,
    set: &[GroupElement],
    max_set_size: usize,
) -> Result<Vec<GroupEndoMap>> {
    let s = validate_connection_indices(spec, set)?;
    if s.len() > max_set_size {
        return Err(Error::resource(
            "connection set size",
            s.len(),
            max_set_size,
        ));
    }
    let tree = spanning_tree(spec, &s).expect("validated connection set generates");
    let orders: Vec<u64> = s
        .iter()
        .map(|&x| spec.elem_order(&spec.element_at(x)).expect("valid element"))
        .collect();
    let pos = |x: usize| s.binary_search(&x).expect("inverse-closed");

    // One representative per {s, -s} pair; the image of -s is forced.
    let mut reps = Vec::new();
    let mut covered = vec![false; s.len()];
    for i in 0..s.len() {
        if !covered[i] {
            covered[i] = true;
            covered[pos(spec.neg_index(s[i]))] = true;
            reps.push(i);
        }
    }

    let mut found = Vec::new();
    let mut image = vec![usize::MAX; s.len()];
    let mut used = vec![false; s.len()];
    assign_pairs(
        &AssignCtx {
            spec,
            s: &s,
            orders: &orders,
            reps: &reps,
            tree: &tree,
            pos: &pos,
        },
        0,
        &mut image,
        &mut used,
        &mut found,
    );
    found.sort();
    found.dedup();
    Ok(found)
}

struct AssignCtx<'a, P: Fn(usize) -> usize> {
    spec: &'a GroupSpec,
    s: &'a [usize],
    orders: &'a [u64],
    reps: &'a [usize],
    tree: &'a [(usize, usize)],
    pos: &'a P,
}

fn assign_pairs<P: Fn(usize) -> usize>(
    ctx: &AssignCtx<'_, P>,
    depth: usize,
    image: &mut [usize],
    used: &mut [bool],
    found: &mut Vec<GroupEndoMap>,
) {
    let spec = ctx.spec;
    if depth == ctx.reps.len() {
        let imgs: Vec<usize> = image.iter().map(|&i| ctx.s[i]).collect();
        if let Ok(map) = extend_on_tree(spec, ctx.tree, ctx.s, &imgs) {
            if map.is_automorphism {
                found.push(map);
            }
        }
        return;
    }
    let i = ctx.reps[depth];
    let neg_i = (ctx.pos)(spec.neg_index(ctx.s[i]));
    for t in 0..ctx.s.len() {
        if used[t] || ctx.orders[t] != ctx.orders[i] {
            continue;
        }
        let neg_t = (ctx.pos)(spec.neg_index(ctx.s[t]));
        if used[neg_t] {
            continue;
        }
        image[i] = t;
        image[neg_i] = neg_t;
        used[t] = true;
        used[neg_t] = true;
        assign_pairs(ctx, depth + 1, image, used, found);
        used[t] = false;
        used[neg_t] = false;
    }
    image[i] = usize::MAX;
    image[neg_i] = usize::MAX;
}
