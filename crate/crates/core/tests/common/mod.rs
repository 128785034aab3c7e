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

//! Independent reference implementations used by the integration tests.
//! Nothing here shares code with the library beyond its public types.

#![allow(dead_code)]

use std::collections::{BTreeSet, VecDeque};

use cayleyaut::abelian::{GroupElement, GroupSpec};
use cayleyaut::cayley::{CayleyGraph, Graph};

/// Adjacency matrix of a graph, read through the public API only.
pub fn matrix(g: &Graph) -> Vec<Vec<bool>> {
    let n = g.vertex_count();
    let mut m = vec![vec![false; n]; n];
    for (u, v) in g.edges() {
        m[u][v] = true;
        m[v][u] = true;
    }
    m
}

/// All automorphisms by plain backtracking: vertex `i` is mapped to an
/// unused vertex of equal degree whose adjacency to the images of `0..i`
/// agrees. No refinement, no orbit pruning.
pub fn naive_automorphisms(g: &Graph) -> BTreeSet<Vec<u32>> {
    let n = g.vertex_count();
    let adj = matrix(g);
    let deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut out = BTreeSet::new();
    let mut image = vec![0u32; n];
    let mut used = vec![false; n];

    fn go(
        i: usize,
        adj: &[Vec<bool>],
        deg: &[usize],
        image: &mut [u32],
        used: &mut [bool],
        out: &mut BTreeSet<Vec<u32>>,
    ) {
        let n = adj.len();
        if i == n {
            out.insert(image.to_vec());
            return;
        }
        for t in 0..n {
            if used[t] || deg[t] != deg[i] {
                continue;
            }
            if (0..i).any(|j| adj[i][j] != adj[t][image[j] as usize]) {
                continue;
            }
            image[i] = t as u32;
            used[t] = true;
            go(i + 1, adj, deg, image, used, out);
            used[t] = false;
        }
    }

    go(0, &adj, &deg, &mut image, &mut used, &mut out);
    out
}

pub fn element_set(perms: &[cayleyaut::autgroup::Permutation]) -> BTreeSet<Vec<u32>> {
    perms.iter().map(|p| p.images().to_vec()).collect()
}

/// Every element of `H` in index order, built by counting in mixed radix.
pub fn all_elements(spec: &GroupSpec) -> Vec<Vec<u32>> {
    let m = spec.moduli();
    let mut out = Vec::new();
    let mut cur = vec![0u32; m.len()];
    loop {
        out.push(cur.clone());
        let mut i = 0;
        loop {
            if i == m.len() {
                return out;
            }
            cur[i] += 1;
            if cur[i] < m[i] {
                break;
            }
            cur[i] = 0;
            i += 1;
        }
    }
}

pub fn add(m: &[u32], a: &[u32], b: &[u32]) -> Vec<u32> {
    a.iter()
        .zip(b)
        .zip(m)
        .map(|((x, y), k)| (x + y) % k)
        .collect()
}

pub fn index(m: &[u32], a: &[u32]) -> usize {
    let mut idx = 0usize;
    for i in (0..m.len()).rev() {
        idx = idx * m[i] as usize + a[i] as usize;
    }
    idx
}

/// Edge set of `Cay(H; S)` straight from the definition.
pub fn cayley_edges(spec: &GroupSpec, s: &[Vec<u32>]) -> BTreeSet<(usize, usize)> {
    let m = spec.moduli();
    let mut edges = BTreeSet::new();
    for x in all_elements(spec) {
        for t in s {
            let (a, b) = (index(m, &x), index(m, &add(m, &x, t)));
            edges.insert((a.min(b), a.max(b)));
        }
    }
    edges
}

pub fn residues(set: &[GroupElement]) -> Vec<Vec<u32>> {
    set.iter().map(|e| e.residues().to_vec()).collect()
}

/// Literal reading of the unique-summation definition: no
/// `s1 + s2 = s3 + s4 != 0` with `{s1, s2} != {s3, s4}` as multisets.
pub fn us_quadruple_loop(m: &[u32], s: &[Vec<u32>]) -> bool {
    let zero = vec![0u32; m.len()];
    let multiset = |a: &Vec<u32>, b: &Vec<u32>| {
        if a <= b {
            (a.clone(), b.clone())
        } else {
            (b.clone(), a.clone())
        }
    };
    for s1 in s {
        for s2 in s {
            let g = add(m, s1, s2);
            if g == zero {
                continue;
            }
            for s3 in s {
                for s4 in s {
                    if add(m, s3, s4) == g && multiset(s1, s2) != multiset(s3, s4) {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// Nonzero sums reachable in more than one way, by the quadruple loop.
pub fn colliding_sums(m: &[u32], s: &[Vec<u32>]) -> BTreeSet<usize> {
    let zero = vec![0u32; m.len()];
    let multiset = |a: &Vec<u32>, b: &Vec<u32>| {
        if a <= b {
            (a.clone(), b.clone())
        } else {
            (b.clone(), a.clone())
        }
    };
    let mut out = BTreeSet::new();
    for s1 in s {
        for s2 in s {
            for s3 in s {
                for s4 in s {
                    let g = add(m, s1, s2);
                    if g != zero && add(m, s3, s4) == g && multiset(s1, s2) != multiset(s3, s4) {
                        out.insert(index(m, &g));
                    }
                }
            }
        }
    }
    out
}

/// `Aut(H, S)` as image arrays: every assignment of images to the unit
/// vectors that respects their orders, extended linearly, kept when
/// bijective and `S`-stabilizing.
pub fn aut_stabilizing_oracle(spec: &GroupSpec, s: &[Vec<u32>]) -> BTreeSet<Vec<u32>> {
    let m = spec.moduli().to_vec();
    let elems = all_elements(spec);
    let sset: BTreeSet<Vec<u32>> = s.iter().cloned().collect();
    let scale = |k: u32, a: &[u32]| -> Vec<u32> {
        a.iter()
            .zip(&m)
            .map(|(x, q)| ((*x as u64 * k as u64) % *q as u64) as u32)
            .collect()
    };
    let mut out = BTreeSet::new();
    let r = m.len();
    let mut choice = vec![0usize; r];
    loop {
        let imgs: Vec<&Vec<u32>> = choice.iter().map(|&c| &elems[c]).collect();
        let respects = (0..r).all(|i| scale(m[i], imgs[i]).iter().all(|&x| x == 0));
        if respects {
            let map: Vec<Vec<u32>> = elems
                .iter()
                .map(|x| {
                    let mut acc = vec![0u32; r];
                    for i in 0..r {
                        acc = add(&m, &acc, &scale(x[i], imgs[i]));
                    }
                    acc
                })
                .collect();
            let distinct: BTreeSet<&Vec<u32>> = map.iter().collect();
            let stabilizes = s.iter().all(|t| sset.contains(&map[index(&m, t)]));
            if distinct.len() == elems.len() && stabilizes {
                out.insert(map.iter().map(|y| index(&m, y) as u32).collect());
            }
        }
        let mut i = 0;
        loop {
            if i == r {
                return out;
            }
            choice[i] += 1;
            if choice[i] < elems.len() {
                break;
            }
            choice[i] = 0;
            i += 1;
        }
    }
}

fn connected_without(adj: &[Vec<bool>], removed: &[bool]) -> bool {
    let n = adj.len();
    let Some(start) = (0..n).find(|&v| !removed[v]) else {
        return true;
    };
    let mut seen = removed.to_vec();
    seen[start] = true;
    let mut queue = VecDeque::from([start]);
    while let Some(u) = queue.pop_front() {
        for v in 0..n {
            if adj[u][v] && !seen[v] {
                seen[v] = true;
                queue.push_back(v);
            }
        }
    }
    seen.iter().all(|&b| b)
}

/// Smallest vertex set whose removal disconnects the graph, found by
/// trying every subset; `n - 1` for complete graphs.
pub fn exhaustive_vertex_connectivity(g: &Graph) -> usize {
    let n = g.vertex_count();
    let adj = matrix(g);
    if !connected_without(&adj, &vec![false; n]) {
        return 0;
    }
    let mut best = n.saturating_sub(1);
    for mask in 0u32..(1 << n) {
        let k = mask.count_ones() as usize;
        if k >= best || k + 2 > n {
            continue;
        }
        let removed: Vec<bool> = (0..n).map(|v| mask >> v & 1 == 1).collect();
        if !connected_without(&adj, &removed) {
            best = k;
        }
    }
    best
}

/// Minimum number of edges across a cut `(X, V \ X)`, over every `X`
/// containing vertex 0.
pub fn exhaustive_edge_connectivity(g: &Graph) -> usize {
    let n = g.vertex_count();
    if n < 2 {
        return 0;
    }
    let adj = matrix(g);
    let mut best = usize::MAX;
    for mask in 0u32..(1 << (n - 1)) {
        let side: Vec<bool> = (0..n).map(|v| v == 0 || mask >> (v - 1) & 1 == 1).collect();
        if side.iter().all(|&b| b) {
            continue;
        }
        let cut = (0..n)
            .flat_map(|u| (0..n).map(move |v| (u, v)))
            .filter(|&(u, v)| side[u] && !side[v] && adj[u][v])
            .count();
        best = best.min(cut);
    }
    best
}

/// The graphs every acceptance criterion is checked against, with the
/// expected verdicts.
pub struct Entry {
    pub name: String,
    pub graph: CayleyGraph,
    pub us: bool,
    pub aut_order: usize,
}

fn factorial(n: usize) -> usize {
    (1..=n).product()
}

pub fn corpus() -> Vec<Entry> {
    use cayleyaut::cayley::*;
    let mut out = Vec::new();
    let mut push = |name: String, graph: CayleyGraph, us: bool, aut_order: usize| {
        out.push(Entry {
            name,
            graph,
            us,
            aut_order,
        })
    };
    for n in 3..=12 {
        push(format!("C_{n}"), family_cycle(n).unwrap(), n != 4, 2 * n);
    }
    for n in 1..=4 {
        push(
            format!("Q_{n}"),
            family_hypercube(n).unwrap(),
            true,
            (1 << n) * factorial(n),
        );
    }
    // M_4 = K_4 and M_5 = K_5; the complement of M_6 is two disjoint
    // triangles, whose group is Sym(3) wr Sym(2) of order 6^2 * 2.
    push("M_4".into(), family_mobius(4).unwrap(), false, factorial(4));
    push("M_5".into(), family_mobius(5).unwrap(), false, factorial(5));
    push("M_6".into(), family_mobius(6).unwrap(), false, 72);
    push("M_7".into(), family_mobius(7).unwrap(), false, 14);
    for n in 8..=16 {
        push(format!("M_{n}"), family_mobius(n).unwrap(), true, 2 * n);
    }
    for (k, n) in [
        (3usize, 2usize),
        (5, 2),
        (3, 3),
        (6, 1),
        (7, 1),
        (2, 3),
        (2, 4),
    ] {
        let order = if k == 2 {
            (1 << n) * factorial(n)
        } else {
            k.pow(n as u32) * (1 << n) * factorial(n)
        };
        push(
            format!("Q_{n}^{k}"),
            family_kary_ncube(k, n).unwrap(),
            true,
            order,
        );
    }
    // Q_2^4 is isomorphic to Q_4.
    push("Q_2^4".into(), family_kary_ncube(4, 2).unwrap(), false, 384);
    push(
        "Circ(25,5,2)".into(),
        family_circulant(25, 5, 2, None).unwrap(),
        true,
        50,
    );
    out
}
