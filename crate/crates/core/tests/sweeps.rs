use sharpbound::verify::{self, SweepOptions, ViolationKind, WitnessSource};
use sharpbound::{Caps, Conjecture, Error};

fn opts() -> SweepOptions {
    SweepOptions::default()
}

#[test]
fn instance_counts_per_kind() {
    let digraphs = verify::verify_validity(Conjecture::Conj1, 4, &opts()).unwrap();
    assert_eq!(digraphs.instances_checked, 1 + 13 + 469 + 63_577);
    let trees = verify::verify_validity(Conjecture::Conj5, 7, &opts()).unwrap();
    assert_eq!(trees.instances_checked, (1..=7u64).map(|n| if n == 1 { 1 } else { n.pow(n as u32 - 2) }).sum::<u64>());
    let parts = verify::verify_validity(Conjecture::PartitionUpper, 12, &opts()).unwrap();
    assert_eq!(parts.instances_checked, 271);
}

#[test]
fn enumeration_alone_leaves_conj1_rows_uncovered_at_four() {
    let r = verify::verify_case_coverage(Conjecture::Conj1, 4, &opts()).unwrap();
    assert!(r.passed());
    let sources: Vec<_> = r
        .case_coverage
        .iter()
        .map(|c| c.witness.as_ref().unwrap().source)
        .collect();
    use WitnessSource::{Enumeration as E, Fixture as F};
    assert_eq!(sources, [E, E, F, E, F, F, F]);
}

#[test]
fn small_conj3_and_conj4_sweeps_cover_every_row() {
    for conj in [Conjecture::Conj3, Conjecture::Conj4] {
        let r = verify::verify_case_coverage(conj, 3, &opts()).unwrap();
        assert!(r.passed());
        assert!(r
            .case_coverage
            .iter()
            .all(|c| c.witness.as_ref().unwrap().source == WitnessSource::Enumeration));
    }
}

#[test]
fn sharpness_is_not_conclusive_below_the_needed_size() {
    let r = verify::verify_sharpness(Conjecture::Conj1, 1, &opts()).unwrap();
    assert!(r.passed());
    assert!(r.violations.iter().all(|v| v.kind == ViolationKind::Unattained));
}

#[test]
fn caps_are_enforced() {
    let caps = Caps::default().with_override("3").unwrap();
    let err = verify::verify_validity(Conjecture::Conj1, 4, &opts().with_caps(caps)).unwrap_err();
    assert!(matches!(err, Error::OverCap { size: 4, cap: 3 }));
}

#[test]
#[ignore = "visits about 33.5 million bitmasks"]
fn extended_validity_at_five_vertices() {
    let o = opts().with_caps(Caps::unlimited()).with_jobs(
        std::thread::available_parallelism().map_or(1, |n| n.get()),
    );
    for conj in [Conjecture::Conj1, Conjecture::Conj2, Conjecture::Conj3, Conjecture::Conj4] {
        let r = verify::verify_validity(conj, 5, &o).unwrap();
        assert!(r.violations.is_empty(), "{conj}");
    }
}
