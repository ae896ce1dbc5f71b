//! Brute-force oracles that share no code path with the library.

#![allow(dead_code)]

use sharpbound::{Digraph, DigraphCharacteristics};

/// Reachability closure by repeated squaring of a boolean matrix.
fn closure(n: usize, adj: &[Vec<bool>]) -> Vec<Vec<bool>> {
    let mut r = adj.to_vec();
    for (v, row) in r.iter_mut().enumerate() {
        row[v] = true;
    }
    for k in 0..n {
        let via = r[k].clone();
        for row in r.iter_mut() {
            if row[k] {
                for (cell, &reach) in row.iter_mut().zip(&via) {
                    *cell |= reach;
                }
            }
        }
    }
    r
}

fn classes(n: usize, same: impl Fn(usize, usize) -> bool) -> Vec<usize> {
    let mut sizes = Vec::new();
    let mut seen = vec![false; n];
    for i in 0..n {
        if seen[i] {
            continue;
        }
        let members: Vec<usize> = (0..n).filter(|&j| same(i, j)).collect();
        for &j in &members {
            seen[j] = true;
        }
        sizes.push(members.len());
    }
    sizes
}

/// Component sizes `(weak, strong)` via reachability matrices.
pub fn component_sizes(g: &Digraph) -> (Vec<usize>, Vec<usize>) {
    let n = g.vertex_count();
    let mut directed = vec![vec![false; n]; n];
    let mut undirected = vec![vec![false; n]; n];
    for &(t, h) in g.arcs() {
        directed[t][h] = true;
        undirected[t][h] = true;
        undirected[h][t] = true;
    }
    let d = closure(n, &directed);
    let u = closure(n, &undirected);
    (classes(n, |i, j| u[i][j]), classes(n, |i, j| d[i][j] && d[j][i]))
}

pub fn characteristics(g: &Digraph) -> DigraphCharacteristics {
    let (cc, scc) = component_sizes(g);
    DigraphCharacteristics {
        v: g.vertex_count(),
        c: cc.len(),
        s: scc.len(),
        cc_max: *cc.iter().max().unwrap(),
        cc_min: *cc.iter().min().unwrap(),
        scc_max: *scc.iter().max().unwrap(),
        scc_min: *scc.iter().min().unwrap(),
    }
}

fn binomial(n: u64, k: u64) -> i64 {
    (0..k).fold(1i64, |acc, i| acc * (n - i) as i64 / (i + 1) as i64)
}

/// Arc subsets on `n` vertices touching every vertex, by inclusion-exclusion
/// over the set of untouched vertices.
pub fn in_class_count(n: u64) -> i64 {
    (0..=n)
        .map(|k| {
            let sign = if k % 2 == 0 { 1 } else { -1 };
            sign * binomial(n, k) * (1i64 << ((n - k) * (n - k)))
        })
        .sum()
}

/// Number of integer partitions of `n` by the standard DP over part sizes.
pub fn partition_count(n: usize) -> u64 {
    let mut ways = vec![0u64; n + 1];
    ways[0] = 1;
    for part in 1..=n {
        for total in part..=n {
            ways[total] += ways[total - part];
        }
    }
    ways[n]
}

/// Every partition of `n` with parts at most `max_part`, by recursion on the
/// largest part.
pub fn partitions(n: usize, max_part: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for first in (1..=max_part.min(n)).rev() {
        for mut rest in partitions(n - first, first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// Every father vector on `n` vertices whose chains reach 0, found by
/// following fathers `n` times.
pub fn rooted_trees(n: usize) -> Vec<Vec<usize>> {
    let total = n.pow(n as u32 - 1);
    (0..total)
        .map(|mut idx| {
            let mut father = vec![0; n - 1];
            for slot in father.iter_mut().rev() {
                *slot = idx % n;
                idx /= n;
            }
            father
        })
        .filter(|father| {
            (1..n).all(|start| {
                let mut v = start;
                for _ in 0..n {
                    if v == 0 {
                        break;
                    }
                    v = father[v - 1];
                }
                v == 0
            })
        })
        .collect()
}

/// `(n, leaves, d_min, d_max)` computed from scratch.
pub fn tree_profile(father: &[usize]) -> (usize, usize, usize, usize) {
    let n = father.len() + 1;
    let children: Vec<usize> = (0..n).map(|x| father.iter().filter(|&&f| f == x).count()).collect();
    let leaves = children.iter().filter(|&&k| k == 0).count();
    let internal: Vec<usize> = children.iter().copied().filter(|&k| k > 0).collect();
    (
        n,
        leaves,
        internal.iter().copied().min().unwrap_or(0),
        internal.iter().copied().max().unwrap_or(0),
    )
}
