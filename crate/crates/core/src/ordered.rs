//! Integer sequences viewed as partitions, and rooted trees stored as father
//! vectors. A rooted tree's father vector is itself a partition instance,
//! which is how the leaf-count interval is derived from the two `nval`
//! bounds.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A non-empty sequence of integers.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PartitionInstance {
    values: Vec<i64>,
}

impl PartitionInstance {
    pub fn new(values: Vec<i64>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::EmptySequence);
        }
        Ok(Self { values })
    }

    /// Canonical sequence realizing an occurrence profile: value `i` repeated
    /// `occurrences[i]` times.
    pub fn from_occurrences(occurrences: &[usize]) -> Result<Self> {
        let values: Vec<i64> = occurrences
            .iter()
            .enumerate()
            .flat_map(|(i, &k)| std::iter::repeat_n(i as i64, k))
            .collect();
        Self::new(values)
    }

    pub fn values(&self) -> &[i64] {
        &self.values
    }

    pub fn characteristics(&self) -> PartitionCharacteristics {
        let mut counts: HashMap<i64, usize> = HashMap::new();
        for &x in &self.values {
            *counts.entry(x).or_default() += 1;
        }
        let occurrences: Vec<usize> = counts.into_values().collect();
        PartitionCharacteristics::from_occurrences(&occurrences).expect("non-empty sequence")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PartitionCharacteristics {
    /// Sequence length.
    pub n_p: usize,
    /// Number of distinct values.
    pub nval: usize,
    /// Occurrences of the least frequent value.
    pub m_min: usize,
    /// Occurrences of the most frequent value.
    pub m_max: usize,
    /// `m_max - m_min`.
    pub m_diff: usize,
}

impl PartitionCharacteristics {
    /// Characteristics depend only on the multiset of occurrence counts.
    /// Zero counts are ignored.
    pub fn from_occurrences(occurrences: &[usize]) -> Result<Self> {
        let positive = occurrences.iter().copied().filter(|&k| k > 0);
        let m_min = positive.clone().min().ok_or(Error::EmptySequence)?;
        let m_max = positive.clone().max().unwrap_or(m_min);
        Ok(Self {
            n_p: positive.clone().sum(),
            nval: positive.count(),
            m_min,
            m_max,
            m_diff: m_max - m_min,
        })
    }

    pub fn fields(&self) -> [(&'static str, &'static str, usize); 5] {
        [
            ("n_p", "n", self.n_p),
            ("nval", "nval", self.nval),
            ("m_min", "m\u{332}", self.m_min),
            ("m_max", "m\u{304}", self.m_max),
            ("m_diff", "m\u{332}\u{304}", self.m_diff),
        ]
    }
}

/// Rooted tree on `0..node_count` with root 0, stored as the father of each
/// non-root vertex.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RootedTree {
    /// `father[j - 1]` is the father of vertex `j`.
    father: Vec<usize>,
}

impl RootedTree {
    /// `father[j - 1]` gives the father of vertex `j`; the vector has length
    /// `n - 1`. Every vertex must reach vertex 0.
    pub fn new(father: Vec<usize>) -> Result<Self> {
        let n = father.len() + 1;
        if let Some((j, &f)) = father.iter().enumerate().find(|&(_, &f)| f >= n) {
            return Err(Error::FatherOutOfRange {
                vertex: j + 1,
                father: f,
                node_count: n,
            });
        }
        if let Some(v) = first_unrooted(&father) {
            return Err(Error::NotATree(v));
        }
        Ok(Self { father })
    }

    pub fn single_vertex() -> Self {
        Self { father: Vec::new() }
    }

    pub fn node_count(&self) -> usize {
        self.father.len() + 1
    }

    /// The father vector of vertices `1..n`.
    pub fn fathers(&self) -> &[usize] {
        &self.father
    }

    pub fn child_counts(&self) -> Vec<usize> {
        let mut counts = vec![0; self.node_count()];
        for &f in &self.father {
            counts[f] += 1;
        }
        counts
    }

    pub fn characteristics(&self) -> RootedTreeCharacteristics {
        let counts = self.child_counts();
        RootedTreeCharacteristics {
            n: self.node_count(),
            leaves: counts.iter().filter(|&&k| k == 0).count(),
            d_min: counts.iter().copied().filter(|&k| k > 0).min().unwrap_or(0),
            d_max: counts.iter().copied().max().unwrap_or(0),
        }
    }

    /// The father vector read as a partition instance. Undefined for the
    /// single-vertex tree, whose father vector is empty.
    pub fn to_partition(&self) -> Result<PartitionInstance> {
        if self.father.is_empty() {
            return Err(Error::SingleVertexTree);
        }
        PartitionInstance::new(self.father.iter().map(|&f| f as i64).collect())
    }
}

/// Returns the first vertex whose father chain does not reach the root.
pub(crate) fn first_unrooted(father: &[usize]) -> Option<usize> {
    let n = father.len() + 1;
    // 0 = unknown, 1 = on current walk, 2 = reaches root
    let mut state = vec![0u8; n];
    state[0] = 2;
    let mut walk = Vec::new();
    for start in 1..n {
        let mut v = start;
        while state[v] == 0 {
            state[v] = 1;
            walk.push(v);
            v = father[v - 1];
        }
        if state[v] == 1 {
            return Some(start);
        }
        for w in walk.drain(..) {
            state[w] = 2;
        }
    }
    None
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RootedTreeCharacteristics {
    pub n: usize,
    pub leaves: usize,
    /// Smallest child count among vertices with at least one child; 0 for
    /// the single-vertex tree.
    pub d_min: usize,
    pub d_max: usize,
}

impl RootedTreeCharacteristics {
    pub fn fields(&self) -> [(&'static str, &'static str, usize); 4] {
        [
            ("n", "n", self.n),
            ("leaves", "\u{2113}", self.leaves),
            ("d_min", "d\u{332}", self.d_min),
            ("d_max", "d\u{304}", self.d_max),
        ]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pc(n_p: usize, nval: usize, m_min: usize, m_max: usize, m_diff: usize) -> PartitionCharacteristics {
        PartitionCharacteristics { n_p, nval, m_min, m_max, m_diff }
    }

    #[test]
    fn partition_examples() {
        let p = PartitionInstance::new(vec![1, 1, 1, 1, 1, 1, 2, 2, 3, 3, 4]).unwrap();
        assert_eq!(p.characteristics(), pc(11, 4, 1, 6, 5));
        assert_eq!(PartitionInstance::new(vec![7]).unwrap().characteristics(), pc(1, 1, 1, 1, 0));
        let q = PartitionInstance::new(vec![0, 0, 2, 0, 3, 3]).unwrap();
        assert_eq!(q.characteristics(), pc(6, 3, 1, 3, 2));
    }

    #[test]
    fn empty_partition_rejected() {
        assert_eq!(PartitionInstance::new(vec![]), Err(Error::EmptySequence));
        assert_eq!(PartitionCharacteristics::from_occurrences(&[0, 0]), Err(Error::EmptySequence));
    }

    #[test]
    fn occurrence_profile_round_trip() {
        let p = PartitionInstance::from_occurrences(&[6, 2, 2, 1]).unwrap();
        assert_eq!(p.values().len(), 11);
        assert_eq!(p.characteristics(), PartitionCharacteristics::from_occurrences(&[1, 2, 6, 2]).unwrap());
    }

    fn example_tree() -> RootedTree {
        RootedTree::new(vec![0, 0, 2, 0, 3, 3]).unwrap()
    }

    #[test]
    fn tree_examples() {
        let t = example_tree().characteristics();
        assert_eq!(t, RootedTreeCharacteristics { n: 7, leaves: 4, d_min: 1, d_max: 3 });

        let single = RootedTree::single_vertex().characteristics();
        assert_eq!(single, RootedTreeCharacteristics { n: 1, leaves: 1, d_min: 0, d_max: 0 });

        let binary = RootedTree::new(vec![0, 0, 1, 1, 2, 2]).unwrap().characteristics();
        assert_eq!(binary, RootedTreeCharacteristics { n: 7, leaves: 4, d_min: 2, d_max: 2 });
    }

    #[test]
    fn cyclic_father_map_is_not_a_tree() {
        assert_eq!(RootedTree::new(vec![2, 1]), Err(Error::NotATree(1)));
        assert_eq!(RootedTree::new(vec![1]), Err(Error::NotATree(1)));
        assert_eq!(RootedTree::new(vec![0, 3, 2]), Err(Error::NotATree(2)));
        assert!(matches!(RootedTree::new(vec![0, 5]), Err(Error::FatherOutOfRange { vertex: 2, .. })));
    }

    #[test]
    fn tree_to_partition_projection() {
        assert_eq!(example_tree().to_partition().unwrap().values(), &[0, 0, 2, 0, 3, 3]);
        assert_eq!(RootedTree::new(vec![0]).unwrap().to_partition().unwrap().values(), &[0]);
        assert_eq!(RootedTree::single_vertex().to_partition(), Err(Error::SingleVertexTree));
    }

    #[test]
    fn star_maps_to_one_value() {
        let star = RootedTree::new(vec![0, 0, 0]).unwrap();
        let tc = star.characteristics();
        let p = star.to_partition().unwrap();
        assert_eq!(p.values(), &[0, 0, 0]);
        // direct count of distinct fathers
        let distinct = {
            let mut v = p.values().to_vec();
            v.sort();
            v.dedup();
            v.len()
        };
        assert_eq!(distinct, 1);
        assert_eq!(p.characteristics().nval, tc.n - tc.leaves);
    }
}
