use proptest::prelude::*;
use sharpbound::{Digraph, GraphDocument, ObjectKind, PartitionInstance, RootedTree};

fn document() -> impl Strategy<Value = GraphDocument> {
    let digraph = (1usize..8)
        .prop_flat_map(|n| (Just(n), prop::collection::vec((0..n, 0..n), 0..20)))
        .prop_map(|(n, arcs)| GraphDocument::Digraph(Digraph::new(n, arcs).unwrap()));
    let tree = prop::collection::vec(any::<prop::sample::Index>(), 0..15).prop_map(|ix| {
        let father = ix.iter().enumerate().map(|(j, i)| i.index(j + 1)).collect();
        GraphDocument::RootedTree(RootedTree::new(father).unwrap())
    });
    let partition = prop::collection::vec(-50i64..50, 1..20)
        .prop_map(|v| GraphDocument::Partition(PartitionInstance::new(v).unwrap()));
    prop_oneof![digraph, tree, partition]
}

proptest! {
    #[test]
    fn json_round_trips(doc in document()) {
        let back = GraphDocument::parse(&doc.to_json(), None).unwrap();
        prop_assert_eq!(back, doc);
    }

    #[test]
    fn text_round_trips(doc in document()) {
        let back = GraphDocument::parse(&doc.to_text(), Some(doc.kind())).unwrap();
        prop_assert_eq!(back, doc);
    }
}

#[test]
fn kind_mismatch_is_reported() {
    let err = GraphDocument::parse(r#"{"values":[1,2]}"#, Some(ObjectKind::Digraph)).unwrap_err();
    assert!(!err.message.is_empty());
}

#[test]
fn text_errors_carry_positions() {
    let err = GraphDocument::parse("n=2\n0 x\n", None).unwrap_err();
    assert_eq!(err.line, Some(2));
    assert!(err.column.is_some());
}
