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

//! Cayley graph construction, the unique-summation test and the named
//! graph families (cycles, hypercubes, Möbius ladders, k-ary n-cubes and
//! power-of-d circulants).

use std::collections::BTreeMap;
use std::fmt;

use crate::abelian::{validate_connection_indices, GroupElement, GroupSpec};
use crate::error::{Error, Result};
use crate::Limits;

/// Graphs up to this many vertices also keep a dense adjacency bitset.
pub const DENSE_ADJACENCY_LIMIT: usize = 4096;

/// Simple undirected graph on `0..n` with sorted adjacency lists.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<u32>>,
    dense: Option<BitMatrix>,
}

#[derive(Clone, PartialEq, Eq)]
struct BitMatrix {
    words_per_row: usize,
    bits: Vec<u64>,
}

impl BitMatrix {
    fn new(n: usize) -> BitMatrix {
        let words_per_row = n.div_ceil(64);
        BitMatrix {
            words_per_row,
            bits: vec![0; words_per_row * n],
        }
    }

    fn set(&mut self, u: usize, v: usize) {
        self.bits[u * self.words_per_row + v / 64] |= 1 << (v % 64);
    }

    fn get(&self, u: usize, v: usize) -> bool {
        self.bits[u * self.words_per_row + v / 64] & (1 << (v % 64)) != 0
    }
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate edges are merged; loops
    /// and out-of-range endpoints are rejected.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Graph>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::Argument(format!(
                    "edge ({u}, {v}) out of range for {n} vertices"
                )));
            }
            if u == v {
                return Err(Error::Validation(format!("self-loop at vertex {u}")));
            }
            adj[u].push(v as u32);
            adj[v].push(u as u32);
        }
        Ok(Graph::from_adjacency(adj))
    }

    fn from_adjacency(mut adj: Vec<Vec<u32>>) -> Graph {
        for row in &mut adj {
            row.sort_unstable();
            row.dedup();
        }
        let n = adj.len();
        let dense = (n <= DENSE_ADJACENCY_LIMIT).then(|| {
            let mut m = BitMatrix::new(n);
            for (u, row) in adj.iter().enumerate() {
                for &v in row {
                    m.set(u, v as usize);
                }
            }
            m
        });
        Graph { adj, dense }
    }

    pub fn complete(n: usize) -> Graph {
        let adj = (0..n)
            .map(|u| (0..n as u32).filter(|&v| v as usize != u).collect())
            .collect();
        Graph::from_adjacency(adj)
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> &[u32] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).min().unwrap_or(0)
    }

    /// `Some(d)` if every vertex has degree `d`.
    pub fn regular_degree(&self) -> Option<usize> {
        let d = self.adj.first().map_or(0, Vec::len);
        self.adj.iter().all(|r| r.len() == d).then_some(d)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        match &self.dense {
            Some(m) => m.get(u, v),
            None => self.adj[u].binary_search(&(v as u32)).is_ok(),
        }
    }

    /// Edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj.iter().enumerate().flat_map(|(u, row)| {
            row.iter()
                .map(|&v| v as usize)
                .filter(move |&v| u < v)
                .map(move |v| (u, v))
        })
    }

    pub fn is_connected(&self) -> bool {
        let n = self.vertex_count();
        if n == 0 {
            return true;
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = stack.pop() {
            for &v in &self.adj[u] {
                if !std::mem::replace(&mut seen[v as usize], true) {
                    count += 1;
                    stack.push(v as usize);
                }
            }
        }
        count == n
    }

    /// BFS distances from `source`; `u32::MAX` for unreachable vertices.
    pub fn distances_from(&self, source: usize) -> Vec<u32> {
        let mut dist = vec![u32::MAX; self.vertex_count()];
        let mut queue = std::collections::VecDeque::from([source]);
        dist[source] = 0;
        while let Some(u) = queue.pop_front() {
            for &v in &self.adj[u] {
                if dist[v as usize] == u32::MAX {
                    dist[v as usize] = dist[u] + 1;
                    queue.push_back(v as usize);
                }
            }
        }
        dist
    }

    /// The graph obtained by relabeling vertex `v` as `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        let n = self.vertex_count();
        let mut seen = vec![false; n];
        if perm.len() != n
            || perm
                .iter()
                .any(|&p| p >= n || std::mem::replace(&mut seen[p], true))
        {
            return Err(Error::Argument("relabeling is not a permutation".into()));
        }
        Graph::from_edges(n, self.edges().map(|(u, v)| (perm[u], perm[v])))
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("vertices", &self.vertex_count())
            .field("adj", &self.adj)
            .finish()
    }
}

/// Same vertex set; `{u, v}` is an edge iff it is not an edge of `g`.
pub fn complement(g: &Graph) -> Graph {
    let n = g.vertex_count();
    let adj = (0..n)
        .map(|u| {
            (0..n)
                .filter(|&v| v != u && !g.has_edge(u, v))
                .map(|v| v as u32)
                .collect()
        })
        .collect();
    Graph::from_adjacency(adj)
}

/// A validated connection set: nonempty, without 0, inverse-closed and
/// generating. Elements are kept sorted by index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConnectionSet {
    group: GroupSpec,
    elements: Vec<GroupElement>,
    indices: Vec<usize>,
}

impl ConnectionSet {
    pub fn new(group: &GroupSpec, elements: &[GroupElement]) -> Result<ConnectionSet> {
        let indices = validate_connection_indices(group, elements)?;
        Ok(ConnectionSet {
            group: group.clone(),
            elements: indices.iter().map(|&i| group.element_at(i)).collect(),
            indices,
        })
    }

    /// Convenience for `Z_n` inputs given as plain integers (reduced mod n).
    pub fn cyclic(n: u32, elements: &[i64]) -> Result<ConnectionSet> {
        let group = GroupSpec::cyclic(n)?;
        let els = elements
            .iter()
            .map(|&x| group.reduce(&[x]))
            .collect::<Result<Vec<_>>>()?;
        ConnectionSet::new(&group, &els)
    }

    pub fn group(&self) -> &GroupSpec {
        &self.group
    }

    pub fn elements(&self) -> &[GroupElement] {
        &self.elements
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    fn check_group(&self, spec: &GroupSpec) -> Result<()> {
        if *spec != self.group {
            return Err(Error::Validation(format!(
                "connection set belongs to {} but {} was given",
                self.group, spec
            )));
        }
        Ok(())
    }
}

#[derive(Debug, Clone)]
pub struct CayleyGraph {
    conn: ConnectionSet,
    graph: Graph,
    label: Option<String>,
}

impl CayleyGraph {
    pub fn group(&self) -> &GroupSpec {
        &self.conn.group
    }

    pub fn connection_set(&self) -> &ConnectionSet {
        &self.conn
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn label(&self) -> Option<&str> {
        self.label.as_deref()
    }

    pub fn with_label(mut self, label: impl Into<String>) -> CayleyGraph {
        self.label = Some(label.into());
        self
    }
}

impl AsRef<Graph> for CayleyGraph {
    fn as_ref(&self) -> &Graph {
        &self.graph
    }
}

pub fn build_cayley(spec: &GroupSpec, conn: &ConnectionSet) -> Result<CayleyGraph> {
    build_cayley_with(spec, conn, &Limits::DEFAULT)
}

/// Edges `{g, g + s}` for every vertex `g` and every `s` in the connection set.
pub fn build_cayley_with(
    spec: &GroupSpec,
    conn: &ConnectionSet,
    limits: &Limits,
) -> Result<CayleyGraph> {
    conn.check_group(spec)?;
    let n = spec.order();
    if n > limits.max_construct_vertices {
        return Err(Error::resource(
            "vertex count",
            n,
            limits.max_construct_vertices,
        ));
    }
    let adj = (0..n)
        .map(|g| {
            conn.indices
                .iter()
                .map(|&s| spec.add_index(g, s) as u32)
                .collect()
        })
        .collect();
    Ok(CayleyGraph {
        conn: conn.clone(),
        graph: Graph::from_adjacency(adj),
        label: None,
    })
}

pub type GroupElementPair = (GroupElement, GroupElement);

/// `s1 + s2 = sum = s3 + s4` with `{s1, s2} != {s3, s4}` and `sum != 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UsWitness {
    pub sum: GroupElement,
    pub first: GroupElementPair,
    pub second: GroupElementPair,
}

impl UsWitness {
    /// Re-checks the witness equations from scratch.
    pub fn verify(&self, spec: &GroupSpec) -> bool {
        let sorted = |(a, b): &GroupElementPair| {
            if a <= b {
                (a.clone(), b.clone())
            } else {
                (b.clone(), a.clone())
            }
        };
        let ok_sum =
            |(a, b): &GroupElementPair| spec.add(a, b).map(|s| s == self.sum).unwrap_or(false);
        self.sum != spec.zero()
            && ok_sum(&self.first)
            && ok_sum(&self.second)
            && sorted(&self.first) != sorted(&self.second)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UsReport {
    pub holds: bool,
    pub witness: Option<UsWitness>,
}

/// Sums of two connection-set elements, keyed by the nonzero sum index,
/// each with the sorted list of index pairs `(i, j)`, `i <= j`, producing it.
fn sum_buckets(spec: &GroupSpec, s: &[usize]) -> BTreeMap<usize, Vec<(usize, usize)>> {
    let mut buckets: BTreeMap<usize, Vec<(usize, usize)>> = BTreeMap::new();
    for (a, &x) in s.iter().enumerate() {
        for &y in &s[a..] {
            let g = spec.add_index(x, y);
            if g != 0 {
                buckets.entry(g).or_default().push((x, y));
            }
        }
    }
    buckets
}

/// Decides the unique-summation property. A failing report carries the
/// collision with the smallest sum index, and within it the two
/// lexicographically smallest multisets.
pub fn check_us(spec: &GroupSpec, conn: &ConnectionSet) -> Result<UsReport> {
    conn.check_group(spec)?;
    let buckets = sum_buckets(spec, &conn.indices);
    let witness = buckets
        .into_iter()
        .find(|(_, pairs)| pairs.len() > 1)
        .map(|(g, pairs)| make_witness(spec, g, pairs[0], pairs[1]));
    Ok(UsReport {
        holds: witness.is_none(),
        witness,
    })
}

/// Every sum with more than one representation, as
/// `(sum, all multisets {s1, s2} adding to it)`.
pub fn us_collisions(
    spec: &GroupSpec,
    conn: &ConnectionSet,
) -> Result<Vec<(GroupElement, Vec<GroupElementPair>)>> {
    conn.check_group(spec)?;
    Ok(sum_buckets(spec, &conn.indices)
        .into_iter()
        .filter(|(_, pairs)| pairs.len() > 1)
        .map(|(g, pairs)| {
            (
                spec.element_at(g),
                pairs
                    .into_iter()
                    .map(|(x, y)| (spec.element_at(x), spec.element_at(y)))
                    .collect(),
            )
        })
        .collect())
}

fn make_witness(spec: &GroupSpec, g: usize, p: (usize, usize), q: (usize, usize)) -> UsWitness {
    UsWitness {
        sum: spec.element_at(g),
        first: (spec.element_at(p.0), spec.element_at(p.1)),
        second: (spec.element_at(q.0), spec.element_at(q.1)),
    }
}

/// The named graph families with their parameters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Family {
    Cycle {
        n: usize,
    },
    Hypercube {
        n: usize,
    },
    Mobius {
        n: usize,
    },
    KaryNcube {
        k: usize,
        n: usize,
    },
    Circulant {
        n: usize,
        d: usize,
        m: usize,
        powers: Option<Vec<usize>>,
    },
}

impl Family {
    pub const NAMES: [&'static str; 5] =
        ["cycle", "hypercube", "mobius", "kary_ncube", "circulant"];

    pub fn name(&self) -> &'static str {
        match self {
            Family::Cycle { .. } => "cycle",
            Family::Hypercube { .. } => "hypercube",
            Family::Mobius { .. } => "mobius",
            Family::KaryNcube { .. } => "kary_ncube",
            Family::Circulant { .. } => "circulant",
        }
    }

    pub fn build(&self) -> Result<CayleyGraph> {
        self.build_with(&Limits::DEFAULT)
    }

    /// Validates the parameters, then constructs the graph if it fits
    /// within `limits.max_construct_vertices`.
    pub fn build_with(&self, limits: &Limits) -> Result<CayleyGraph> {
        let (spec, elements, label) = self.parts()?;
        let conn = ConnectionSet::new(&spec, &elements)?;
        Ok(build_cayley_with(&spec, &conn, limits)?.with_label(label))
    }

    fn parts(&self) -> Result<(GroupSpec, Vec<GroupElement>, String)> {
        match *self {
            Family::Cycle { n } => {
                if n < 3 {
                    return Err(Error::Argument(format!("cycle needs n >= 3, got {n}")));
                }
                let spec = GroupSpec::cyclic(to_u32(n, "n")?)?;
                let s = vec![spec.reduce(&[1])?, spec.reduce(&[-1])?];
                Ok((spec, s, format!("C_{n}")))
            }
            Family::Hypercube { n } => {
                if n < 1 {
                    return Err(Error::Argument("hypercube needs n >= 1".into()));
                }
                let spec = GroupSpec::power(2, n)?;
                let s = (0..n).map(|i| spec.unit(i)).collect::<Result<Vec<_>>>()?;
                Ok((spec, s, format!("Q_{n}")))
            }
            Family::Mobius { n } => {
                if n < 4 {
                    return Err(Error::Argument(format!(
                        "Möbius ladder needs n >= 4, got {n}"
                    )));
                }
                let spec = GroupSpec::cyclic(to_u32(n, "n")?)?;
                let k = (n / 2) as i64;
                let raw: Vec<i64> = if n % 2 == 0 {
                    vec![1, 2 * k - 1, k]
                } else {
                    vec![1, 2 * k, k, k + 1]
                };
                let s = raw
                    .iter()
                    .map(|&x| spec.reduce(&[x]))
                    .collect::<Result<Vec<_>>>()?;
                Ok((spec, s, format!("M_{n}")))
            }
            Family::KaryNcube { k, n } => {
                if k < 2 || n < 1 {
                    return Err(Error::Argument(format!(
                        "k-ary n-cube needs k >= 2 and n >= 1, got k={k}, n={n}"
                    )));
                }
                let spec = GroupSpec::power(to_u32(k, "k")?, n)?;
                let s = signed_units(&spec)?;
                Ok((spec, s, format!("Q_{n}^{k}")))
            }
            Family::Circulant {
                n,
                d,
                m,
                ref powers,
            } => circulant_parts(n, d, m, powers.as_deref()),
        }
    }
}

fn circulant_parts(
    n: usize,
    d: usize,
    m: usize,
    powers: Option<&[usize]>,
) -> Result<(GroupSpec, Vec<GroupElement>, String)> {
    if d < 5 {
        return Err(Error::Argument(format!("circulant needs d >= 5, got {d}")));
    }
    if m < 1 {
        return Err(Error::Argument("circulant needs m >= 1".into()));
    }
    let dm = u32::try_from(m)
        .ok()
        .and_then(|m| d.checked_pow(m))
        .ok_or_else(|| Error::Argument(format!("d^m overflows for d={d}, m={m}")))?;
    if !n.is_multiple_of(dm) || n / dm == 0 || n / dm >= d {
        return Err(Error::Argument(format!(
            "circulant needs n = c*d^m with 1 <= c < d; n={n}, d^m={dm}"
        )));
    }
    let all: Vec<usize> = (0..m).collect();
    let powers = powers.unwrap_or(&all);
    if !powers.contains(&0) {
        return Err(Error::Argument("circulant powers must contain 0".into()));
    }
    if let Some(&p) = powers.iter().find(|&&p| p >= m) {
        return Err(Error::Argument(format!(
            "circulant power {p} out of range 0..{m}"
        )));
    }
    let spec = GroupSpec::cyclic(to_u32(n, "n")?)?;
    let mut s = Vec::new();
    for &p in powers {
        let x = d.pow(p as u32) as i64;
        s.push(spec.reduce(&[x])?);
        s.push(spec.reduce(&[-x])?);
    }
    let mut ps = powers.to_vec();
    ps.sort_unstable();
    ps.dedup();
    let label = if ps == all {
        format!("Circ(n={n},d={d},m={m})")
    } else {
        format!("Circ(n={n},d={d},m={m},powers={ps:?})")
    };
    Ok((spec, s, label))
}

fn signed_units(spec: &GroupSpec) -> Result<Vec<GroupElement>> {
    let mut out = Vec::new();
    for i in 0..spec.rank() {
        let e = spec.unit(i)?;
        out.push(spec.neg(&e)?);
        out.push(e);
    }
    Ok(out)
}

fn to_u32(x: usize, what: &str) -> Result<u32> {
    u32::try_from(x).map_err(|_| Error::Argument(format!("{what} {x} is too large")))
}

/// `C_n = Cay(Z_n; {1, -1})`, `n >= 3`.
pub fn family_cycle(n: usize) -> Result<CayleyGraph> {
    Family::Cycle { n }.build()
}

/// `Q_n = Cay(Z_2^n; {e_1, ..., e_n})`, `n >= 1`.
pub fn family_hypercube(n: usize) -> Result<CayleyGraph> {
    Family::Hypercube { n }.build()
}

/// Möbius ladder `M_n`, `n >= 4`: `{1, 2k-1, k}` on `Z_{2k}` and
/// `{1, 2k, k, k+1}` on `Z_{2k+1}`.
pub fn family_mobius(n: usize) -> Result<CayleyGraph> {
    Family::Mobius { n }.build()
}

/// k-ary n-cube `Q_n^k = Cay(Z_k^n; {±e_i})`. For `k = 2` the signs
/// coincide and the degree is `n`.
pub fn family_kary_ncube(k: usize, n: usize) -> Result<CayleyGraph> {
    Family::KaryNcube { k, n }.build()
}

/// Circulant on `Z_n`, `n = c * d^m` with `1 <= c < d`, `d >= 5`, and
/// connection set `{±d^i : i in powers}`. `powers` defaults to `0..m` and
/// must contain 0.
pub fn family_circulant(
    n: usize,
    d: usize,
    m: usize,
    powers: Option<&[usize]>,
) -> Result<CayleyGraph> {
    Family::Circulant {
        n,
        d,
        m,
        powers: powers.map(<[usize]>::to_vec),
    }
    .build()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn idx(g: &CayleyGraph) -> Vec<usize> {
        g.connection_set().indices().to_vec()
    }

    #[test]
    fn cycle_and_small_hypercube() {
        let c5 = family_cycle(5).unwrap();
        let edges: Vec<_> = c5.graph().edges().collect();
        assert_eq!(edges, vec![(0, 1), (0, 4), (1, 2), (2, 3), (3, 4)]);
        let q2 = family_hypercube(2).unwrap();
        assert_eq!(q2.graph().edge_count(), 4);
        assert_eq!(q2.graph().regular_degree(), Some(2));
        // 0=(0,0) 1=(1,0) 2=(0,1) 3=(1,1): a 4-cycle 0-1-3-2.
        assert!(q2.graph().has_edge(0, 1) && q2.graph().has_edge(1, 3));
        assert!(q2.graph().has_edge(3, 2) && q2.graph().has_edge(2, 0));
    }

    #[test]
    fn mobius_connection_sets() {
        let m8 = family_mobius(8).unwrap();
        assert_eq!(idx(&m8), vec![1, 4, 7]);
        assert_eq!(m8.graph().regular_degree(), Some(3));
        assert_eq!(m8.graph().edge_count(), 12);
        assert_eq!(idx(&family_mobius(6).unwrap()), vec![1, 3, 5]);
        assert_eq!(idx(&family_mobius(9).unwrap()), vec![1, 4, 5, 8]);
        assert_eq!(family_mobius(5).unwrap().graph(), &Graph::complete(5));
        assert_eq!(family_mobius(4).unwrap().graph(), &Graph::complete(4));
        assert!(family_mobius(3).is_err());
    }

    #[test]
    fn mobius_matches_cycle_plus_antipodal_chords() {
        for n in 4..=17usize {
            let c = family_cycle(n).unwrap();
            let diam = n / 2;
            let mut edges: Vec<_> = c.graph().edges().collect();
            for u in 0..n {
                let dist = c.graph().distances_from(u);
                for (v, &d) in dist.iter().enumerate().skip(u + 1) {
                    if d as usize == diam {
                        edges.push((u, v));
                    }
                }
            }
            let direct = Graph::from_edges(n, edges).unwrap();
            assert_eq!(family_mobius(n).unwrap().graph(), &direct, "n = {n}");
        }
    }

    #[test]
    fn kary_binary_is_hypercube() {
        for n in 1..=4 {
            assert_eq!(
                family_kary_ncube(2, n).unwrap().graph(),
                family_hypercube(n).unwrap().graph()
            );
        }
        let q = family_kary_ncube(3, 2).unwrap();
        assert_eq!(q.graph().regular_degree(), Some(4));
        assert!(family_kary_ncube(1, 2).is_err());
        assert!(family_kary_ncube(3, 0).is_err());
    }

    #[test]
    fn circulant_powers_of_d() {
        let c = family_circulant(25, 5, 2, None).unwrap();
        assert_eq!(idx(&c), vec![1, 5, 20, 24]);
        assert_eq!(c.graph().regular_degree(), Some(4));
        let spec = c.group().clone();
        assert!(check_us(&spec, c.connection_set()).unwrap().holds);

        let sub = family_circulant(125, 5, 3, Some(&[0, 2])).unwrap();
        assert_eq!(idx(&sub), vec![1, 25, 100, 124]);
        assert!(family_circulant(25, 4, 2, None).is_err());
        assert!(family_circulant(24, 5, 2, None).is_err());
        assert!(family_circulant(125, 5, 2, None).is_err());
        assert!(family_circulant(25, 5, 2, Some(&[1])).is_err());
        assert!(family_circulant(25, 5, 2, Some(&[0, 2])).is_err());
    }

    #[test]
    fn consecutive_reading_of_circulant_fails_us() {
        // {±1, ..., ±5} in Z_25: 1 + 2 = 3 = (-1) + 4.
        let conn = ConnectionSet::cyclic(25, &[1, 2, 3, 4, 5, -1, -2, -3, -4, -5]).unwrap();
        let report = check_us(conn.group(), &conn).unwrap();
        assert!(!report.holds);
        assert!(report.witness.unwrap().verify(conn.group()));
    }

    #[test]
    fn us_witnesses() {
        type Case<'a> = (u32, &'a [i64], u32, [u32; 2], [u32; 2]);
        let cases: [Case; 3] = [
            (4, &[1, 3], 2, [1, 1], [3, 3]),
            (6, &[1, 5, 3], 2, [1, 1], [3, 5]),
            (7, &[1, 6, 3, 4], 2, [1, 1], [3, 6]),
        ];
        for (n, s, g, first, second) in cases {
            let conn = ConnectionSet::cyclic(n, s).unwrap();
            let report = check_us(conn.group(), &conn).unwrap();
            assert!(!report.holds);
            let w = report.witness.unwrap();
            assert!(w.verify(conn.group()));
            assert_eq!(w.sum.residues(), &[g]);
            assert_eq!([w.first.0.residues()[0], w.first.1.residues()[0]], first);
            assert_eq!([w.second.0.residues()[0], w.second.1.residues()[0]], second);
        }
    }

    #[test]
    fn us_holds_for_kary_cubes() {
        for (k, n) in [(3, 2), (5, 2), (3, 3), (2, 3), (6, 2)] {
            let g = family_kary_ncube(k, n).unwrap();
            assert!(
                check_us(g.group(), g.connection_set()).unwrap().holds,
                "k={k} n={n}"
            );
        }
        let g = family_kary_ncube(4, 2).unwrap();
        let r = check_us(g.group(), g.connection_set()).unwrap();
        assert!(!r.holds);
        assert!(r.witness.unwrap().verify(g.group()));
    }

    #[test]
    fn collisions_contain_cited_sum() {
        // M_5: 4 + 4 = 1 + 2 in Z_5.
        let m5 = family_mobius(5).unwrap();
        let spec = m5.group();
        let cols = us_collisions(spec, m5.connection_set()).unwrap();
        let three = spec.element(&[3]).unwrap();
        let (_, pairs) = cols.iter().find(|(g, _)| *g == three).unwrap();
        let as_ints: Vec<(u32, u32)> = pairs
            .iter()
            .map(|(a, b)| (a.residues()[0], b.residues()[0]))
            .collect();
        assert!(as_ints.contains(&(1, 2)) && as_ints.contains(&(4, 4)));
    }

    #[test]
    fn connection_set_validation() {
        assert!(matches!(
            ConnectionSet::cyclic(6, &[0, 1, 5]),
            Err(Error::Validation(m)) if m.contains("identity")
        ));
        assert!(matches!(
            ConnectionSet::cyclic(6, &[1, 2]),
            Err(Error::Validation(m)) if m.contains("inverse-closed")
        ));
        assert!(matches!(
            ConnectionSet::cyclic(6, &[2, 4]),
            Err(Error::Validation(m)) if m.contains("generate")
        ));
        let z5 = GroupSpec::cyclic(5).unwrap();
        let conn = ConnectionSet::cyclic(6, &[1, 5]).unwrap();
        assert!(build_cayley(&z5, &conn).is_err());
    }

    #[test]
    fn construction_cap() {
        let limits = Limits {
            max_construct_vertices: 10,
            ..Limits::DEFAULT
        };
        let conn = ConnectionSet::cyclic(11, &[1, -1]).unwrap();
        assert!(matches!(
            build_cayley_with(conn.group(), &conn, &limits),
            Err(Error::Resource { .. })
        ));
    }

    #[test]
    fn complement_examples() {
        let m7 = family_mobius(7).unwrap();
        let comp = complement(m7.graph());
        assert_eq!(comp.regular_degree(), Some(2));
        assert!(comp.is_connected());
        assert_eq!(comp.edge_count(), 7);

        let m6 = complement(family_mobius(6).unwrap().graph());
        assert_eq!(m6.regular_degree(), Some(2));
        assert!(!m6.is_connected());
        // Two triangles: {0, 2, 4} and {1, 3, 5}.
        assert!(m6.has_edge(0, 2) && m6.has_edge(2, 4) && m6.has_edge(0, 4));
        assert!(m6.has_edge(1, 3) && m6.has_edge(3, 5) && m6.has_edge(1, 5));

        assert_eq!(complement(&Graph::complete(4)).edge_count(), 0);
        let g = family_kary_ncube(3, 2).unwrap();
        assert_eq!(&complement(&complement(g.graph())), g.graph());
    }

    #[test]
    fn graph_basics() {
        assert!(Graph::from_edges(3, [(0, 0)]).is_err());
        assert!(Graph::from_edges(3, [(0, 3)]).is_err());
        let g = Graph::from_edges(4, [(0, 1), (1, 0), (2, 3)]).unwrap();
        assert_eq!(g.edge_count(), 2);
        assert!(!g.is_connected());
        assert_eq!(g.distances_from(0)[2], u32::MAX);
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn corpus_graph() -> impl Strategy<Value = CayleyGraph> {
            prop_oneof![
                (3usize..30).prop_map(|n| family_cycle(n).unwrap()),
                (1usize..7).prop_map(|n| family_hypercube(n).unwrap()),
                (4usize..40).prop_map(|n| family_mobius(n).unwrap()),
                (2usize..6, 1usize..4).prop_map(|(k, n)| family_kary_ncube(k, n).unwrap()),
            ]
        }

        proptest! {
            #[test]
            fn regular_simple_undirected(g in corpus_graph()) {
                let gr = g.graph();
                let d = g.connection_set().len();
                prop_assert_eq!(gr.regular_degree(), Some(d));
                prop_assert_eq!(2 * gr.edge_count(), gr.vertex_count() * d);
                prop_assert!(gr.is_connected());
                for u in 0..gr.vertex_count() {
                    prop_assert!(!gr.has_edge(u, u));
                    for &v in gr.neighbors(u) {
                        prop_assert!(gr.has_edge(v as usize, u));
                    }
                }
                prop_assert_eq!(&complement(&complement(gr)), gr);
            }
        }
    }
}
