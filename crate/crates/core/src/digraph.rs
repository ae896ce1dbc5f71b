//! Labeled simple digraphs (self-loops allowed) and their component-based
//! characteristics.
//!
//! Connected components are *weak*: arc direction is ignored. Strongly
//! connected components follow the usual definition, so a vertex without a
//! self-loop that lies on no cycle is an SCC of its own.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{inconsistent, Error, Result};

/// A labeled directed graph on vertices `0..vertex_count`.
///
/// Arcs are kept sorted and deduplicated, so two digraphs with the same arc
/// set compare equal regardless of insertion order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Digraph {
    vertex_count: usize,
    arcs: Vec<(usize, usize)>,
}

impl Digraph {
    pub fn new(vertex_count: usize, arcs: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut arcs: Vec<(usize, usize)> = arcs.into_iter().collect();
        if let Some(&(tail, head)) = arcs.iter().find(|&&(t, h)| t >= vertex_count || h >= vertex_count) {
            return Err(Error::ArcOutOfRange {
                tail,
                head,
                vertex_count,
            });
        }
        arcs.sort_unstable();
        arcs.dedup();
        Ok(Self { vertex_count, arcs })
    }

    /// Builds the digraph whose arc `(u, v)` is present iff bit `u * n + v`
    /// of `mask` is set.
    pub fn from_mask(vertex_count: usize, mask: u64) -> Self {
        debug_assert!(vertex_count * vertex_count <= 64);
        let mut arcs = Vec::with_capacity(mask.count_ones() as usize);
        let mut rest = mask;
        while rest != 0 {
            let bit = rest.trailing_zeros() as usize;
            arcs.push((bit / vertex_count, bit % vertex_count));
            rest &= rest - 1;
        }
        Self { vertex_count, arcs }
    }

    /// Single vertex carrying a self-loop.
    pub fn self_loop() -> Self {
        Self {
            vertex_count: 1,
            arcs: vec![(0, 0)],
        }
    }

    /// Directed cycle `0 -> 1 -> ... -> k-1 -> 0`. A 1-cycle is a self-loop.
    pub fn cycle(k: usize) -> Self {
        let arcs = (0..k).map(|i| (i, (i + 1) % k)).collect::<Vec<_>>();
        Self::new(k, arcs).expect("cycle arcs are in range")
    }

    /// Directed path `0 -> 1 -> ... -> k-1`.
    pub fn path(k: usize) -> Self {
        let arcs = (1..k).map(|i| (i - 1, i)).collect::<Vec<_>>();
        Self::new(k, arcs).expect("path arcs are in range")
    }

    /// Places `other` after `self`, shifting its labels by `self.vertex_count()`.
    pub fn disjoint_union(&self, other: &Digraph) -> Digraph {
        let shift = self.vertex_count;
        let arcs = self
            .arcs
            .iter()
            .copied()
            .chain(other.arcs.iter().map(|&(t, h)| (t + shift, h + shift)));
        Digraph::new(self.vertex_count + other.vertex_count, arcs).expect("shifted arcs are in range")
    }

    /// Renames vertex `u` to `perm[u]`. `perm` must be a permutation of
    /// `0..vertex_count`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Digraph> {
        let mut seen = vec![false; self.vertex_count];
        if perm.len() != self.vertex_count
            || !perm.iter().all(|&p| p < self.vertex_count && !std::mem::replace(&mut seen[p], true))
        {
            return Err(Error::Unsupported("relabeling is not a permutation".into()));
        }
        Digraph::new(self.vertex_count, self.arcs.iter().map(|&(t, h)| (perm[t], perm[h])))
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn arcs(&self) -> &[(usize, usize)] {
        &self.arcs
    }

    pub fn has_arc(&self, tail: usize, head: usize) -> bool {
        self.arcs.binary_search(&(tail, head)).is_ok()
    }

    /// True iff the graph has at least one vertex and every vertex is the
    /// tail or head of some arc. A self-loop counts.
    pub fn in_class(&self) -> bool {
        self.first_isolated().is_none() && self.vertex_count > 0
    }

    fn first_isolated(&self) -> Option<usize> {
        let mut touched = vec![false; self.vertex_count];
        for &(t, h) in &self.arcs {
            touched[t] = true;
            touched[h] = true;
        }
        touched.iter().position(|&t| !t)
    }

    /// Weakly connected components, each sorted, ordered by smallest vertex.
    pub fn connected_components(&self) -> Result<Vec<Vec<usize>>> {
        if self.vertex_count == 0 {
            return Err(Error::EmptyDigraph);
        }
        let mut parent: Vec<usize> = (0..self.vertex_count).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for &(t, h) in &self.arcs {
            let (a, b) = (find(&mut parent, t), find(&mut parent, h));
            if a != b {
                // keep the smaller label as representative
                let (lo, hi) = if a < b { (a, b) } else { (b, a) };
                parent[hi] = lo;
            }
        }
        let labels: Vec<usize> = (0..self.vertex_count).map(|x| find(&mut parent, x)).collect();
        Ok(group_by_label(&labels))
    }

    /// Strongly connected components, each sorted, ordered by smallest vertex.
    ///
    /// Iterative Tarjan, so deep graphs never touch the call stack.
    pub fn strongly_connected_components(&self) -> Result<Vec<Vec<usize>>> {
        let n = self.vertex_count;
        if n == 0 {
            return Err(Error::EmptyDigraph);
        }
        let successors = self.successor_lists();

        const UNVISITED: usize = usize::MAX;
        let mut index = vec![UNVISITED; n];
        let mut low = vec![0; n];
        let mut on_stack = vec![false; n];
        let mut stack = Vec::new();
        let mut component = vec![UNVISITED; n];
        let mut next_index = 0;
        let mut next_component = 0;
        // (vertex, position in its successor list)
        let mut frames: Vec<(usize, usize)> = Vec::new();

        for root in 0..n {
            if index[root] != UNVISITED {
                continue;
            }
            frames.push((root, 0));
            while let Some(&mut (v, ref mut pos)) = frames.last_mut() {
                if *pos == 0 && index[v] == UNVISITED {
                    index[v] = next_index;
                    low[v] = next_index;
                    next_index += 1;
                    stack.push(v);
                    on_stack[v] = true;
                }
                if let Some(&w) = successors[v].get(*pos) {
                    *pos += 1;
                    if index[w] == UNVISITED {
                        frames.push((w, 0));
                    } else if on_stack[w] {
                        low[v] = low[v].min(index[w]);
                    }
                    continue;
                }
                frames.pop();
                if let Some(&(parent, _)) = frames.last() {
                    low[parent] = low[parent].min(low[v]);
                }
                if low[v] == index[v] {
                    while let Some(w) = stack.pop() {
                        on_stack[w] = false;
                        component[w] = next_component;
                        if w == v {
                            break;
                        }
                    }
                    next_component += 1;
                }
            }
        }
        Ok(group_by_label(&component))
    }

    fn successor_lists(&self) -> Vec<Vec<usize>> {
        let mut successors = vec![Vec::new(); self.vertex_count];
        for &(t, h) in &self.arcs {
            successors[t].push(h);
        }
        successors
    }

    pub fn characteristics(&self) -> Result<DigraphCharacteristics> {
        if self.vertex_count == 0 {
            return Err(Error::EmptyDigraph);
        }
        if let Some(v) = self.first_isolated() {
            return Err(Error::NotInClass(v));
        }
        let cc = self.connected_components()?;
        let scc = self.strongly_connected_components()?;
        Ok(DigraphCharacteristics::from_component_sizes(
            self.vertex_count,
            cc.iter().map(Vec::len),
            scc.iter().map(Vec::len),
        ))
    }

    /// Graphviz rendering for visual inspection.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph G {\n");
        for v in 0..self.vertex_count {
            let _ = writeln!(out, "  {v};");
        }
        for &(t, h) in &self.arcs {
            let _ = writeln!(out, "  {t} -> {h};");
        }
        out.push_str("}\n");
        out
    }
}

/// Groups vertices by component label; result is ordered by smallest vertex
/// since vertices are visited in increasing order.
fn group_by_label(labels: &[usize]) -> Vec<Vec<usize>> {
    let mut slot = vec![usize::MAX; labels.len()];
    let mut groups: Vec<Vec<usize>> = Vec::new();
    for (v, &label) in labels.iter().enumerate() {
        if slot[label] == usize::MAX {
            slot[label] = groups.len();
            groups.push(Vec::new());
        }
        groups[slot[label]].push(v);
    }
    groups
}

/// The seven component-size characteristics of an in-class digraph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DigraphCharacteristics {
    /// Number of vertices.
    pub v: usize,
    /// Number of connected components.
    pub c: usize,
    /// Number of strongly connected components.
    pub s: usize,
    pub cc_max: usize,
    pub cc_min: usize,
    pub scc_max: usize,
    pub scc_min: usize,
}

impl DigraphCharacteristics {
    fn from_component_sizes(
        v: usize,
        cc_sizes: impl Iterator<Item = usize> + Clone,
        scc_sizes: impl Iterator<Item = usize> + Clone,
    ) -> Self {
        Self {
            v,
            c: cc_sizes.clone().count(),
            s: scc_sizes.clone().count(),
            cc_max: cc_sizes.clone().max().unwrap_or(0),
            cc_min: cc_sizes.min().unwrap_or(0),
            scc_max: scc_sizes.clone().max().unwrap_or(0),
            scc_min: scc_sizes.min().unwrap_or(0),
        }
    }

    /// `(ascii name, display symbol, value)` in canonical order.
    pub fn fields(&self) -> [(&'static str, &'static str, usize); 7] {
        [
            ("v", "v", self.v),
            ("c", "c", self.c),
            ("s", "s", self.s),
            ("cc_max", "c\u{304}", self.cc_max),
            ("cc_min", "c\u{332}", self.cc_min),
            ("scc_max", "s\u{304}", self.scc_max),
            ("scc_min", "s\u{332}", self.scc_min),
        ]
    }

    /// Checks every relation that holds for all in-class digraphs, including
    /// `c * cc_max >= v` and `cc_max >= scc_max`.
    pub fn check(&self) -> Result<()> {
        let Self {
            v,
            c,
            s,
            cc_max,
            cc_min,
            scc_max,
            scc_min,
        } = *self;
        let rules = [
            (1 <= cc_min && cc_min <= cc_max && cc_max <= v, "1 <= cc_min <= cc_max <= v"),
            (1 <= scc_min && scc_min <= scc_max && scc_max <= cc_max, "1 <= scc_min <= scc_max <= cc_max"),
            (1 <= c && c <= s && s <= v, "1 <= c <= s <= v"),
            (c * cc_min <= v && v <= c * cc_max, "c*cc_min <= v <= c*cc_max"),
            (s * scc_min <= v && v <= s * scc_max, "s*scc_min <= v <= s*scc_max"),
        ];
        match rules.iter().find(|(ok, _)| !ok) {
            Some((_, rule)) => Err(inconsistent(format!("{rule} fails for {self:?}"))),
            None => Ok(()),
        }
    }
}
