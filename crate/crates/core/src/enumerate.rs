//! Deterministic exhaustive generators over small labeled objects.
//!
//! Each stream has a raw candidate index (arc bitmask, father vector read as
//! a base-`n` number, position in the partition sequence). Shard `i` of `k`
//! keeps candidates whose index is `i mod k`, so merging shards by index
//! reproduces the unsharded stream exactly.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::digraph::Digraph;
use crate::error::{Error, Result};
use crate::ordered::{first_unrooted, RootedTree};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ObjectKind {
    Digraph,
    RootedTree,
    Partition,
}

impl fmt::Display for ObjectKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ObjectKind::Digraph => "digraph",
            ObjectKind::RootedTree => "rooted_tree",
            ObjectKind::Partition => "partition",
        })
    }
}

/// Largest sizes for which each stream is representable at all: arc masks
/// live in a `u64` and father vectors are indexed by `n^(n-1)` in a `u64`.
pub const DIGRAPH_LIMIT: usize = 7;
pub const TREE_LIMIT: usize = 15;

/// Per-kind enumeration caps.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Caps {
    pub digraph: usize,
    pub rooted_tree: usize,
    pub partition: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Self {
            digraph: 5,
            rooted_tree: 8,
            partition: 20,
        }
    }
}

pub const CAP_ENV: &str = "SHARPBOUND_MAX_ENUM";

impl Caps {
    /// Caps bounded only by what the streams can represent.
    pub fn unlimited() -> Self {
        Self {
            digraph: DIGRAPH_LIMIT,
            rooted_tree: TREE_LIMIT,
            partition: usize::MAX,
        }
    }

    pub fn get(&self, kind: ObjectKind) -> usize {
        match kind {
            ObjectKind::Digraph => self.digraph,
            ObjectKind::RootedTree => self.rooted_tree,
            ObjectKind::Partition => self.partition,
        }
    }

    /// Applies an override of the form `6` (digraph cap) or
    /// `digraph=6,rooted_tree=9,partition=30`.
    pub fn with_override(mut self, spec: &str) -> Result<Self> {
        let bad = || Error::Unsupported(format!("bad cap override {spec:?}"));
        for item in spec.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let (key, value) = item.split_once('=').unwrap_or(("digraph", item));
            let value: usize = value.trim().parse().map_err(|_| bad())?;
            match key.trim() {
                "digraph" => self.digraph = value,
                "rooted_tree" | "tree" => self.rooted_tree = value,
                "partition" => self.partition = value,
                _ => return Err(bad()),
            }
        }
        Ok(self)
    }

    /// Defaults, overridden by `SHARPBOUND_MAX_ENUM` when set.
    pub fn from_env() -> Result<Self> {
        match std::env::var(CAP_ENV) {
            Ok(spec) => Self::default().with_override(&spec),
            Err(_) => Ok(Self::default()),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Shard {
    index: usize,
    count: usize,
}

impl Shard {
    pub fn new(index: usize, count: usize) -> Result<Self> {
        if index >= count {
            return Err(Error::InvalidShard { index, count });
        }
        Ok(Self { index, count })
    }

    pub fn whole() -> Self {
        Self { index: 0, count: 1 }
    }

    pub fn index(&self) -> usize {
        self.index
    }

    pub fn count(&self) -> usize {
        self.count
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EnumerationSpec {
    pub kind: ObjectKind,
    pub size: usize,
    pub shard: Option<Shard>,
}

impl EnumerationSpec {
    pub fn new(kind: ObjectKind, size: usize) -> Self {
        Self { kind, size, shard: None }
    }

    pub fn sharded(mut self, shard: Shard) -> Self {
        self.shard = Some(shard);
        self
    }

    pub fn validate(&self, caps: &Caps) -> Result<()> {
        if self.size == 0 {
            return Err(Error::Unsupported(format!("{} size must be positive", self.kind)));
        }
        let cap = caps.get(self.kind);
        let hard = Caps::unlimited().get(self.kind);
        if self.size > cap.min(hard) {
            return Err(Error::OverCap {
                size: self.size,
                cap: cap.min(hard),
            });
        }
        Ok(())
    }

    fn expect_kind(&self, kind: ObjectKind, caps: &Caps) -> Result<Shard> {
        if self.kind != kind {
            return Err(Error::Unsupported(format!("spec enumerates {}, not {kind}", self.kind)));
        }
        self.validate(caps)?;
        Ok(self.shard.unwrap_or_else(Shard::whole))
    }

    pub fn digraphs(&self, caps: &Caps) -> Result<Digraphs> {
        let shard = self.expect_kind(ObjectKind::Digraph, caps)?;
        Ok(Digraphs::new(self.size, shard))
    }

    pub fn rooted_trees(&self, caps: &Caps) -> Result<RootedTrees> {
        let shard = self.expect_kind(ObjectKind::RootedTree, caps)?;
        Ok(RootedTrees::new(self.size, shard))
    }

    pub fn partitions(&self, caps: &Caps) -> Result<Partitions> {
        let shard = self.expect_kind(ObjectKind::Partition, caps)?;
        Ok(Partitions::new(self.size, shard))
    }
}

/// Every in-class digraph on `n` labeled vertices.
pub fn enumerate_digraphs(n: usize, caps: &Caps) -> Result<Digraphs> {
    EnumerationSpec::new(ObjectKind::Digraph, n).digraphs(caps)
}

/// Every rooted tree on `n` labeled vertices with root 0.
pub fn enumerate_rooted_trees(n: usize, caps: &Caps) -> Result<RootedTrees> {
    EnumerationSpec::new(ObjectKind::RootedTree, n).rooted_trees(caps)
}

/// Every multiset of positive integers summing to `n_p`, each listed in
/// non-increasing order.
pub fn enumerate_partitions(n_p: usize, caps: &Caps) -> Result<Partitions> {
    EnumerationSpec::new(ObjectKind::Partition, n_p).partitions(caps)
}

/// Arc subsets in ascending bitmask order, filtered to the digraph class.
#[derive(Clone, Debug)]
pub struct Digraphs {
    n: usize,
    next: u64,
    end: u64,
    step: u64,
    // arcs touching vertex u, as a mask
    incident: Vec<u64>,
}

impl Digraphs {
    fn new(n: usize, shard: Shard) -> Self {
        let incident = (0..n)
            .map(|u| {
                (0..n).fold(0u64, |acc, w| acc | 1 << (u * n + w) | 1 << (w * n + u))
            })
            .collect();
        Self {
            n,
            next: shard.index as u64,
            end: 1u64 << (n * n),
            step: shard.count as u64,
            incident,
        }
    }

    /// Yields `(bitmask, digraph)` pairs.
    pub fn next_indexed(&mut self) -> Option<(u64, Digraph)> {
        while self.next < self.end {
            let mask = self.next;
            self.next = self.next.saturating_add(self.step);
            if self.incident.iter().all(|&inc| mask & inc != 0) {
                return Some((mask, Digraph::from_mask(self.n, mask)));
            }
        }
        None
    }

    pub fn indexed(mut self) -> impl Iterator<Item = (u64, Digraph)> {
        std::iter::from_fn(move || self.next_indexed())
    }
}

impl Iterator for Digraphs {
    type Item = Digraph;

    fn next(&mut self) -> Option<Digraph> {
        self.next_indexed().map(|(_, g)| g)
    }
}

/// Father vectors in lexicographic order, filtered to those reaching root 0.
#[derive(Clone, Debug)]
pub struct RootedTrees {
    n: usize,
    next: u64,
    end: u64,
    step: u64,
}

impl RootedTrees {
    fn new(n: usize, shard: Shard) -> Self {
        Self {
            n,
            next: shard.index as u64,
            end: (n as u64).pow(n as u32 - 1),
            step: shard.count as u64,
        }
    }

    fn decode(&self, mut index: u64) -> Vec<usize> {
        let len = self.n - 1;
        let mut father = vec![0; len];
        for slot in father.iter_mut().rev() {
            *slot = (index % self.n as u64) as usize;
            index /= self.n as u64;
        }
        father
    }

    pub fn next_indexed(&mut self) -> Option<(u64, RootedTree)> {
        while self.next < self.end {
            let index = self.next;
            self.next = self.next.saturating_add(self.step);
            let father = self.decode(index);
            if first_unrooted(&father).is_none() {
                let tree = RootedTree::new(father).expect("validated father vector");
                return Some((index, tree));
            }
        }
        None
    }

    pub fn indexed(mut self) -> impl Iterator<Item = (u64, RootedTree)> {
        std::iter::from_fn(move || self.next_indexed())
    }
}

impl Iterator for RootedTrees {
    type Item = RootedTree;

    fn next(&mut self) -> Option<RootedTree> {
        self.next_indexed().map(|(_, t)| t)
    }
}

/// Integer partitions of `n_p` in reverse lexicographic order, starting
/// from `[n_p]` and ending at `[1, 1, ..., 1]`.
#[derive(Clone, Debug)]
pub struct Partitions {
    current: Option<Vec<usize>>,
    position: u64,
    shard: Shard,
}

impl Partitions {
    fn new(n_p: usize, shard: Shard) -> Self {
        Self {
            current: Some(vec![n_p]),
            position: 0,
            shard,
        }
    }

    fn advance(parts: &[usize]) -> Option<Vec<usize>> {
        // rightmost part greater than one
        let k = parts.iter().rposition(|&p| p > 1)?;
        let mut next = parts[..k].to_vec();
        let top = parts[k] - 1;
        next.push(top);
        // trailing ones plus the unit freed from parts[k]
        let mut remaining = parts.len() - k;
        while remaining > 0 {
            let piece = remaining.min(top);
            next.push(piece);
            remaining -= piece;
        }
        Some(next)
    }

    pub fn next_indexed(&mut self) -> Option<(u64, Vec<usize>)> {
        loop {
            let current = self.current.take()?;
            self.current = Self::advance(&current);
            let index = self.position;
            self.position += 1;
            if index % self.shard.count as u64 == self.shard.index as u64 {
                return Some((index, current));
            }
        }
    }

    pub fn indexed(mut self) -> impl Iterator<Item = (u64, Vec<usize>)> {
        std::iter::from_fn(move || self.next_indexed())
    }
}

impl Iterator for Partitions {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        self.next_indexed().map(|(_, p)| p)
    }
}

impl FromStr for ObjectKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "digraph" => Ok(ObjectKind::Digraph),
            "rooted_tree" | "rooted-tree" | "tree" => Ok(ObjectKind::RootedTree),
            "partition" => Ok(ObjectKind::Partition),
            other => Err(Error::Unsupported(format!("unknown object kind {other:?}"))),
        }
    }
}
