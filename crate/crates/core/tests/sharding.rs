use std::collections::BTreeMap;

use sharpbound::{Caps, EnumerationSpec, ObjectKind, Shard};

fn merged<T: Clone>(k: usize, stream: impl Fn(Shard) -> Vec<(u64, T)>) -> Vec<(u64, T)> {
    let mut all = BTreeMap::new();
    for i in 0..k {
        for (idx, item) in stream(Shard::new(i, k).unwrap()) {
            assert_eq!(idx as usize % k, i, "shard {i}/{k} got index {idx}");
            assert!(all.insert(idx, item).is_none(), "index {idx} seen twice");
        }
    }
    all.into_iter().collect()
}

#[test]
fn digraph_shards_partition_the_stream() {
    let caps = Caps::default();
    let spec = EnumerationSpec::new(ObjectKind::Digraph, 3);
    let whole: Vec<_> = spec.digraphs(&caps).unwrap().indexed().collect();
    for k in [1, 2, 3, 7] {
        let parts = merged(k, |s| spec.sharded(s).digraphs(&caps).unwrap().indexed().collect());
        assert_eq!(parts, whole);
    }
}

#[test]
fn tree_shards_partition_the_stream() {
    let caps = Caps::default();
    let spec = EnumerationSpec::new(ObjectKind::RootedTree, 6);
    let whole: Vec<_> = spec.rooted_trees(&caps).unwrap().indexed().collect();
    for k in [1, 4, 5] {
        let parts = merged(k, |s| spec.sharded(s).rooted_trees(&caps).unwrap().indexed().collect());
        assert_eq!(parts, whole);
    }
}

#[test]
fn partition_shards_partition_the_stream() {
    let caps = Caps::default();
    let spec = EnumerationSpec::new(ObjectKind::Partition, 15);
    let whole: Vec<_> = spec.partitions(&caps).unwrap().indexed().collect();
    for k in [1, 2, 6] {
        let parts = merged(k, |s| spec.sharded(s).partitions(&caps).unwrap().indexed().collect());
        assert_eq!(parts, whole);
    }
}

#[test]
fn caps_gate_enumeration() {
    let caps = Caps::default().with_override("3").unwrap();
    assert!(EnumerationSpec::new(ObjectKind::Digraph, 4).validate(&caps).is_err());
    assert!(EnumerationSpec::new(ObjectKind::Digraph, 3).validate(&caps).is_ok());
    assert!(Shard::new(3, 3).is_err());
    assert!(Shard::new(0, 0).is_err());
}
