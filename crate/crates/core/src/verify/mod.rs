//! Exhaustive verification of the bounds: validity sweeps, attainment
//! analysis, case coverage and the tree/partition cross-check.
//!
//! Sweeps are sharded over `jobs` worker threads. Every shard produces a
//! partial tally; tallies merge with commutative aggregation, so a report is
//! byte-identical for any number of jobs.

mod fixtures;
mod report;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::bounds::{self, CaseId, LeafInterval};
use crate::digraph::Digraph;
use crate::document::GraphDocument;
use crate::enumerate::{Caps, EnumerationSpec, ObjectKind, Shard};
use crate::error::{Error, Result};
use crate::ordered::{PartitionCharacteristics, PartitionInstance, RootedTree};

pub use fixtures::{all_fixtures, check_fixture, fixtures, FixtureCheck, FixtureMismatch, WitnessFixture};
pub use report::{
    Attainment, Bound, CaseCoverage, TupleStat, Verdict, VerificationReport, Violation, ViolationKind, Witness,
    WitnessSource, SCHEMA_VERSION,
};
use report::Tally;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Conjecture {
    Conj1,
    Conj2,
    Conj3,
    Conj4,
    Conj5,
    PartitionUpper,
    PartitionLower,
}

impl Conjecture {
    pub const ALL: [Conjecture; 7] = [
        Conjecture::Conj1,
        Conjecture::Conj2,
        Conjecture::Conj3,
        Conjecture::Conj4,
        Conjecture::Conj5,
        Conjecture::PartitionUpper,
        Conjecture::PartitionLower,
    ];

    pub fn kind(&self) -> ObjectKind {
        match self {
            Conjecture::Conj1 | Conjecture::Conj2 | Conjecture::Conj3 | Conjecture::Conj4 => ObjectKind::Digraph,
            Conjecture::Conj5 => ObjectKind::RootedTree,
            Conjecture::PartitionUpper | Conjecture::PartitionLower => ObjectKind::Partition,
        }
    }

    /// The case table attached to this bound, if any.
    pub fn table(&self) -> Option<u8> {
        match self {
            Conjecture::Conj1 => Some(1),
            Conjecture::Conj3 => Some(3),
            Conjecture::Conj4 => Some(4),
            _ => None,
        }
    }

    /// Names of the right-hand-side parameters, in tuple order.
    pub fn tuple_parameters(&self) -> &'static [&'static str] {
        match self {
            Conjecture::Conj1 => &["v", "cc_max", "scc_min"],
            Conjecture::Conj2 => &["s", "cc_max", "scc_min"],
            Conjecture::Conj3 => &["v", "s", "scc_min"],
            Conjecture::Conj4 => &["v", "c", "cc_min", "scc_max"],
            Conjecture::Conj5 => &["n", "d_min", "d_max"],
            Conjecture::PartitionUpper => &["n_p", "m_min", "m_diff"],
            Conjecture::PartitionLower => &["n_p", "m_max", "m_diff"],
        }
    }

    /// The characteristic being bounded.
    pub fn observed(&self) -> &'static str {
        match self {
            Conjecture::Conj1 | Conjecture::Conj2 => "c",
            Conjecture::Conj3 => "scc_max",
            Conjecture::Conj4 => "cc_max",
            Conjecture::Conj5 => "leaves",
            Conjecture::PartitionUpper | Conjecture::PartitionLower => "nval",
        }
    }

    /// Desk-scale sweep size.
    pub fn default_max_size(&self) -> usize {
        match self.kind() {
            ObjectKind::Digraph => 4,
            ObjectKind::RootedTree => 7,
            ObjectKind::Partition => 12,
        }
    }

    /// Whether attainment is decidable by enumeration at the swept sizes:
    /// the tuple fixes the instance size, so every instance with that tuple
    /// has been seen.
    pub fn sharpness_is_conclusive(&self) -> bool {
        matches!(self, Conjecture::Conj1 | Conjecture::Conj3)
    }
}

impl fmt::Display for Conjecture {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Conjecture::Conj1 => "conj1",
            Conjecture::Conj2 => "conj2",
            Conjecture::Conj3 => "conj3",
            Conjecture::Conj4 => "conj4",
            Conjecture::Conj5 => "conj5",
            Conjecture::PartitionUpper => "partition_upper",
            Conjecture::PartitionLower => "partition_lower",
        })
    }
}

impl FromStr for Conjecture {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let norm = s.trim().to_ascii_lowercase().replace('-', "_");
        Ok(match norm.as_str() {
            "1" | "conj1" => Conjecture::Conj1,
            "2" | "conj2" => Conjecture::Conj2,
            "3" | "conj3" => Conjecture::Conj3,
            "4" | "conj4" => Conjecture::Conj4,
            "5" | "conj5" => Conjecture::Conj5,
            "partition_upper" | "pu" => Conjecture::PartitionUpper,
            "partition_lower" | "pl" => Conjecture::PartitionLower,
            _ => return Err(Error::Unsupported(format!("unknown conjecture {s:?}"))),
        })
    }
}

impl Serialize for Conjecture {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Mode {
    Validity,
    Sharpness,
    Cases,
    TreePartition,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Validity => "validity",
            Mode::Sharpness => "sharpness",
            Mode::Cases => "cases",
            Mode::TreePartition => "tree-partition",
        })
    }
}

impl FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "validity" => Mode::Validity,
            "sharpness" => Mode::Sharpness,
            "cases" => Mode::Cases,
            "tree-partition" | "tree_partition" => Mode::TreePartition,
            _ => return Err(Error::Unsupported(format!("unknown mode {s:?}"))),
        })
    }
}

impl Serialize for Mode {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SweepOptions {
    pub jobs: usize,
    pub caps: Caps,
}

impl Default for SweepOptions {
    fn default() -> Self {
        Self {
            jobs: 1,
            caps: Caps::default(),
        }
    }
}

impl SweepOptions {
    pub fn with_jobs(mut self, jobs: usize) -> Self {
        self.jobs = jobs.max(1);
        self
    }

    pub fn with_caps(mut self, caps: Caps) -> Self {
        self.caps = caps;
        self
    }
}

/// One enumerated object.
#[derive(Clone, Debug)]
enum Instance {
    Digraph(Digraph),
    Tree(RootedTree),
    Occurrences(Vec<usize>),
}

impl Instance {
    fn document(&self) -> String {
        match self {
            Instance::Digraph(g) => GraphDocument::Digraph(g.clone()).to_json(),
            Instance::Tree(t) => GraphDocument::RootedTree(t.clone()).to_json(),
            Instance::Occurrences(o) => {
                GraphDocument::Partition(PartitionInstance::from_occurrences(o).expect("non-empty profile")).to_json()
            }
        }
    }
}

/// Bound evaluation for one instance.
struct Observation {
    characteristics: Vec<(&'static str, usize)>,
    tuple: Vec<usize>,
    observed: usize,
    bound: std::result::Result<Bound, Error>,
    /// Row and simplified bound, for conjectures with a case table.
    case: Option<std::result::Result<(CaseId, usize), Error>>,
}

fn named(fields: &[(&'static str, &'static str, usize)]) -> Vec<(&'static str, usize)> {
    fields.iter().map(|&(n, _, v)| (n, v)).collect()
}

fn to_map(fields: &[(&'static str, usize)]) -> BTreeMap<String, usize> {
    fields.iter().map(|&(n, v)| (n.to_string(), v)).collect()
}

fn observe(conj: Conjecture, inst: &Instance) -> std::result::Result<Observation, Error> {
    match (conj, inst) {
        (_, Instance::Digraph(g)) => {
            let ch = g.characteristics()?;
            let characteristics = named(&ch.fields());
            let (tuple, observed, bound, case) = match conj {
                Conjecture::Conj1 => (
                    vec![ch.v, ch.cc_max, ch.scc_min],
                    ch.c,
                    bounds::conj1_for(&ch).map(Bound::AtLeast),
                    Some(bounds::conj1_case(ch.v, ch.cc_max, ch.scc_min)),
                ),
                Conjecture::Conj2 => (
                    vec![ch.s, ch.cc_max, ch.scc_min],
                    ch.c,
                    bounds::conj2_for(&ch).map(Bound::AtLeast),
                    None,
                ),
                Conjecture::Conj3 => (
                    vec![ch.v, ch.s, ch.scc_min],
                    ch.scc_max,
                    bounds::conj3_for(&ch).map(Bound::AtLeast),
                    Some(bounds::conj3_case(ch.v, ch.s, ch.scc_min)),
                ),
                Conjecture::Conj4 => (
                    vec![ch.v, ch.c, ch.cc_min, ch.scc_max],
                    ch.cc_max,
                    bounds::conj4_for(&ch).map(Bound::AtLeast),
                    Some(bounds::conj4_case(ch.v, ch.c, ch.cc_min, ch.scc_max)),
                ),
                other => return Err(Error::Unsupported(format!("{other} does not apply to digraphs"))),
            };
            Ok(Observation {
                characteristics,
                tuple,
                observed,
                bound,
                case,
            })
        }
        (Conjecture::Conj5, Instance::Tree(t)) => {
            let tc = t.characteristics();
            Ok(Observation {
                characteristics: named(&tc.fields()),
                tuple: vec![tc.n, tc.d_min, tc.d_max],
                observed: tc.leaves,
                bound: bounds::leaf_interval_for(&tc).map(Bound::Within),
                case: None,
            })
        }
        (Conjecture::PartitionUpper | Conjecture::PartitionLower, Instance::Occurrences(o)) => {
            let pc = PartitionCharacteristics::from_occurrences(o)?;
            let (tuple, bound) = if conj == Conjecture::PartitionUpper {
                (vec![pc.n_p, pc.m_min, pc.m_diff], bounds::partition_upper_for(&pc).map(Bound::AtMost))
            } else {
                (vec![pc.n_p, pc.m_max, pc.m_diff], bounds::partition_lower_for(&pc).map(Bound::AtLeast))
            };
            Ok(Observation {
                characteristics: named(&pc.fields()),
                tuple,
                observed: pc.nval,
                bound,
                case: None,
            })
        }
        (other, _) => Err(Error::Unsupported(format!("{other} does not apply to this object kind"))),
    }
}

fn violation(kind: ViolationKind, size: usize, index: u64, inst: &Instance, detail: impl Into<String>) -> Violation {
    Violation {
        kind,
        size,
        index: Some(index),
        instance: Some(inst.document()),
        characteristics: BTreeMap::new(),
        bound: None,
        observed: None,
        detail: detail.into(),
    }
}

#[derive(Clone, Copy)]
struct Collect {
    tuples: bool,
    cases: bool,
}

/// Checks one instance against `conj`, recording violations and, per
/// `collect`, tuple statistics and case coverage.
fn visit(conj: Conjecture, collect: Collect, size: usize, index: u64, inst: Instance, tally: &mut Tally) {
    tally.instances += 1;
    let obs = match observe(conj, &inst) {
        Ok(obs) => obs,
        Err(e) => {
            tally
                .violations
                .push(violation(ViolationKind::Evaluator, size, index, &inst, e.to_string()));
            return;
        }
    };
    let bound = match obs.bound {
        Ok(b) => b,
        Err(e) => {
            let mut v = violation(ViolationKind::Evaluator, size, index, &inst, e.to_string());
            v.characteristics = to_map(&obs.characteristics);
            tally.violations.push(v);
            return;
        }
    };
    if !bound.holds(obs.observed) {
        let mut v = violation(
            ViolationKind::Bound,
            size,
            index,
            &inst,
            format!("{} = {} violates {bound}", conj.observed(), obs.observed),
        );
        v.characteristics = to_map(&obs.characteristics);
        v.bound = Some(bound);
        v.observed = Some(obs.observed);
        tally.violations.push(v);
    }
    match obs.case {
        Some(Ok((case, simplified))) => {
            let full = match bound {
                Bound::AtLeast(b) => b,
                _ => unreachable!("case tables exist only for lower bounds"),
            };
            if simplified != full {
                let mut v = violation(
                    ViolationKind::CaseMismatch,
                    size,
                    index,
                    &inst,
                    format!("case {case} gives {simplified}, full formula gives {full}"),
                );
                v.characteristics = to_map(&obs.characteristics);
                tally.violations.push(v);
            }
            if collect.cases {
                tally.cover(
                    case,
                    Witness {
                        source: WitnessSource::Enumeration,
                        size,
                        index: Some(index),
                        instance: inst.document(),
                    },
                );
            }
        }
        Some(Err(e)) => {
            let kind = match e {
                Error::InfeasibleCase(_) => ViolationKind::InfeasibleCase,
                _ => ViolationKind::Evaluator,
            };
            let mut v = violation(kind, size, index, &inst, e.to_string());
            v.characteristics = to_map(&obs.characteristics);
            tally.violations.push(v);
        }
        None => {}
    }
    if collect.tuples {
        tally.observe_tuple(obs.tuple, obs.observed, bound);
    }
}

/// Runs `f` over every object of `kind` at each size, sharded across
/// `opts.jobs` threads, and merges the partial tallies.
fn sweep<F>(kind: ObjectKind, sizes: &[usize], opts: &SweepOptions, f: F) -> Result<Tally>
where
    F: Fn(usize, u64, Instance, &mut Tally) + Sync,
{
    for &size in sizes {
        EnumerationSpec::new(kind, size).validate(&opts.caps)?;
    }
    let jobs = opts.jobs.max(1);
    let run_shard = |size: usize, shard: Shard| -> Result<Tally> {
        let spec = EnumerationSpec::new(kind, size).sharded(shard);
        let mut tally = Tally::default();
        match kind {
            ObjectKind::Digraph => {
                for (i, g) in spec.digraphs(&opts.caps)?.indexed() {
                    f(size, i, Instance::Digraph(g), &mut tally);
                }
            }
            ObjectKind::RootedTree => {
                for (i, t) in spec.rooted_trees(&opts.caps)?.indexed() {
                    f(size, i, Instance::Tree(t), &mut tally);
                }
            }
            ObjectKind::Partition => {
                for (i, p) in spec.partitions(&opts.caps)?.indexed() {
                    f(size, i, Instance::Occurrences(p), &mut tally);
                }
            }
        }
        Ok(tally)
    };

    let mut total = Tally::default();
    for &size in sizes {
        if jobs == 1 {
            total.merge(run_shard(size, Shard::whole())?);
            continue;
        }
        let partials: Vec<Result<Tally>> = std::thread::scope(|scope| {
            let handles: Vec<_> = (0..jobs)
                .map(|i| {
                    let run_shard = &run_shard;
                    scope.spawn(move || run_shard(size, Shard::new(i, jobs)?))
                })
                .collect();
            handles
                .into_iter()
                .map(|h| h.join().expect("sweep worker panicked"))
                .collect()
        });
        for partial in partials {
            total.merge(partial?);
        }
    }
    total.sort_violations();
    Ok(total)
}

fn sizes_up_to(max_size: usize) -> Vec<usize> {
    (1..=max_size).collect()
}

fn base_report(conj: Conjecture, mode: Mode, sizes: Vec<usize>, tally: &Tally) -> VerificationReport {
    VerificationReport {
        schema_version: SCHEMA_VERSION,
        conjecture: conj,
        mode,
        sizes_swept: sizes,
        instances_checked: tally.instances,
        verdict: Verdict::Pass,
        violations: Vec::new(),
        tuple_parameters: conj.tuple_parameters().iter().map(|s| s.to_string()).collect(),
        observed: conj.observed().to_string(),
        tuple_stats: Vec::new(),
        attainment: None,
        case_coverage: Vec::new(),
    }
}

fn finish(mut report: VerificationReport, violations: Vec<Violation>) -> VerificationReport {
    report.verdict = if violations.is_empty() {
        Verdict::Pass
    } else {
        Verdict::Fail
    };
    report.violations = violations;
    report
}

/// Checks the bound on every enumerated object of each size up to
/// `max_size`. Conjectures with a case table also get their case
/// classification checked against the full formula.
pub fn verify_validity(conj: Conjecture, max_size: usize, opts: &SweepOptions) -> Result<VerificationReport> {
    let sizes = sizes_up_to(max_size);
    let collect = Collect {
        tuples: false,
        cases: false,
    };
    let tally = sweep(conj.kind(), &sizes, opts, |size, i, inst, t| {
        visit(conj, collect, size, i, inst, t)
    })?;
    let report = base_report(conj, Mode::Validity, sizes, &tally);
    Ok(finish(report, tally.violations))
}

/// Groups instances by their parameter tuple and records whether the bound
/// is met with equality. For conjectures whose tuple fixes the instance size
/// every realized tuple must be attained; elsewhere attainment is reported.
pub fn verify_sharpness(conj: Conjecture, max_size: usize, opts: &SweepOptions) -> Result<VerificationReport> {
    let sizes = sizes_up_to(max_size);
    let collect = Collect {
        tuples: true,
        cases: false,
    };
    let tally = sweep(conj.kind(), &sizes, opts, |size, i, inst, t| {
        visit(conj, collect, size, i, inst, t)
    })?;
    let mut report = base_report(conj, Mode::Sharpness, sizes, &tally);
    let mut violations = tally.violations;
    report.tuple_stats = tally
        .tuples
        .iter()
        .map(|(tuple, acc)| TupleStat {
            tuple: tuple.clone(),
            instances: acc.instances,
            min_observed: acc.min,
            max_observed: acc.max,
            bound: acc.bound,
            attained: acc.bound.attained(acc.min, acc.max),
        })
        .collect();
    report.attainment = Some(Attainment {
        realized: report.tuple_stats.len(),
        attained: report.tuple_stats.iter().filter(|s| s.attained).count(),
    });
    if conj.sharpness_is_conclusive() {
        let size_param = conj.tuple_parameters().iter().position(|&p| p == "v").expect("size in tuple");
        violations.extend(report.tuple_stats.iter().filter(|s| !s.attained).map(|s| Violation {
            kind: ViolationKind::Unattained,
            size: s.tuple[size_param],
            index: None,
            instance: None,
            characteristics: conj
                .tuple_parameters()
                .iter()
                .zip(&s.tuple)
                .map(|(n, &v)| (n.to_string(), v))
                .collect(),
            bound: Some(s.bound),
            observed: Some(s.min_observed),
            detail: format!("tuple {:?}: best observed {} vs {}", s.tuple, s.min_observed, s.bound),
        }));
    }
    Ok(finish(report, violations))
}

/// Classifies every enumerated digraph by case and confirms each table row
/// has a witness. Rows the enumeration cannot reach fall back to the
/// built-in fixtures, which are checked before being accepted. `max_size`
/// may be 0 to use fixtures alone.
pub fn verify_case_coverage(conj: Conjecture, max_size: usize, opts: &SweepOptions) -> Result<VerificationReport> {
    let table = conj
        .table()
        .ok_or_else(|| Error::Unsupported(format!("{conj} has no case table")))?;
    let sizes = sizes_up_to(max_size);
    let collect = Collect {
        tuples: false,
        cases: true,
    };
    let mut tally = sweep(conj.kind(), &sizes, opts, |size, i, inst, t| {
        visit(conj, collect, size, i, inst, t)
    })?;
    let mut report = base_report(conj, Mode::Cases, sizes, &tally);
    let mut violations = std::mem::take(&mut tally.violations);

    for f in fixtures(conj) {
        match check_fixture(&f) {
            Ok(_) => {
                tally.coverage.entry(f.case).or_insert_with(|| Witness {
                    source: WitnessSource::Fixture,
                    size: f.instance.vertex_count(),
                    index: None,
                    instance: GraphDocument::Digraph(f.instance.clone()).to_json(),
                });
            }
            Err(e) => violations.push(Violation {
                kind: ViolationKind::Fixture,
                size: f.instance.vertex_count(),
                index: None,
                instance: Some(GraphDocument::Digraph(f.instance.clone()).to_json()),
                characteristics: BTreeMap::new(),
                bound: None,
                observed: None,
                detail: format!("fixture {}: {e}", f.case),
            }),
        }
    }
    report.case_coverage = CaseId::table(table)
        .into_iter()
        .map(|case| CaseCoverage {
            case,
            witness: tally.coverage.get(&case).cloned(),
        })
        .collect();
    for cov in report.case_coverage.iter().filter(|c| c.witness.is_none()) {
        violations.push(Violation {
            kind: ViolationKind::Uncovered,
            size: 0,
            index: None,
            instance: None,
            characteristics: BTreeMap::new(),
            bound: None,
            observed: None,
            detail: format!("case {} has no witness", cov.case),
        });
    }
    Ok(finish(report, violations))
}

/// Leaf interval obtained by reading a tree's father vector as a partition
/// and applying both `nval` bounds with `nval = n - leaves`.
pub fn chained_leaf_interval(n: usize, pc: &PartitionCharacteristics) -> Result<LeafInterval> {
    let lower_nval = bounds::partition_lower_for(pc)?;
    let upper_nval = bounds::partition_upper_for(pc)?;
    if upper_nval > n || lower_nval > n {
        return Err(Error::Inconsistent(format!("nval bounds exceed n = {n}")));
    }
    Ok(LeafInterval {
        lower: n - upper_nval,
        upper: n - lower_nval,
    })
}

fn tree_partition_mismatches(tree: &RootedTree) -> Vec<String> {
    let tc = tree.characteristics();
    let n = tc.n;
    let pc = tree.to_partition().expect("n >= 2").characteristics();
    let mut problems = Vec::new();
    let identities = [
        ("nval = n - leaves", pc.nval, n - tc.leaves),
        ("n_p = n - 1", pc.n_p, n - 1),
        ("m_min = d_min", pc.m_min, tc.d_min),
        ("m_max = d_max", pc.m_max, tc.d_max),
    ];
    for (name, lhs, rhs) in identities {
        if lhs != rhs {
            problems.push(format!("{name} fails: {lhs} != {rhs}"));
        }
    }
    match (chained_leaf_interval(n, &pc), bounds::leaf_interval_for(&tc)) {
        (Ok(chained), Ok(direct)) => {
            if chained != direct {
                problems.push(format!("chained interval {chained} != direct interval {direct}"));
            }
            if !chained.contains(tc.leaves) {
                problems.push(format!("leaves = {} outside chained interval {chained}", tc.leaves));
            }
        }
        (Err(e), _) | (_, Err(e)) => problems.push(e.to_string()),
    }
    problems
}

/// For every labeled rooted tree with `2 <= n <= max_n`, checks the four
/// tree/partition identities and that the interval chained through the two
/// partition bounds equals the direct leaf interval and contains the leaf
/// count.
pub fn cross_check_tree_partition(max_n: usize, opts: &SweepOptions) -> Result<VerificationReport> {
    let sizes: Vec<usize> = (2..=max_n).collect();
    let tally = sweep(ObjectKind::RootedTree, &sizes, opts, |size, index, inst, t| {
        t.instances += 1;
        let Instance::Tree(tree) = &inst else {
            unreachable!("tree sweep yields trees")
        };
        for problem in tree_partition_mismatches(tree) {
            let mut v = violation(ViolationKind::Mapping, size, index, &inst, problem);
            v.characteristics = to_map(&named(&tree.characteristics().fields()));
            t.violations.push(v);
        }
    })?;
    let report = base_report(Conjecture::Conj5, Mode::TreePartition, sizes, &tally);
    Ok(finish(report, tally.violations))
}

/// Dispatches on `mode`.
pub fn run(conj: Conjecture, mode: Mode, max_size: usize, opts: &SweepOptions) -> Result<VerificationReport> {
    match mode {
        Mode::Validity => verify_validity(conj, max_size, opts),
        Mode::Sharpness => verify_sharpness(conj, max_size, opts),
        Mode::Cases => verify_case_coverage(conj, max_size, opts),
        Mode::TreePartition => cross_check_tree_partition(max_size, opts),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn opts() -> SweepOptions {
        SweepOptions::default()
    }

    #[test]
    fn conjecture_names_round_trip() {
        for c in Conjecture::ALL {
            assert_eq!(c.to_string().parse::<Conjecture>().unwrap(), c);
        }
        assert_eq!("1".parse::<Conjecture>().unwrap(), Conjecture::Conj1);
        assert_eq!("partition-upper".parse::<Conjecture>().unwrap(), Conjecture::PartitionUpper);
        assert!("6".parse::<Conjecture>().is_err());
    }

    #[test]
    fn small_validity_sweeps_pass() {
        for c in Conjecture::ALL {
            let max = match c.kind() {
                ObjectKind::Digraph => 3,
                ObjectKind::RootedTree => 5,
                ObjectKind::Partition => 8,
            };
            let r = verify_validity(c, max, &opts()).unwrap();
            assert!(r.passed(), "{c}: {:?}", r.violations.first());
            assert!(r.instances_checked > 0);
        }
    }

    #[test]
    fn over_cap_is_an_error() {
        assert!(matches!(
            verify_validity(Conjecture::Conj1, 6, &opts()),
            Err(Error::OverCap { .. })
        ));
        assert!(cross_check_tree_partition(9, &opts()).is_err());
    }

    #[test]
    fn cases_need_a_table() {
        assert!(verify_case_coverage(Conjecture::Conj2, 2, &opts()).is_err());
    }

    #[test]
    fn fixtures_alone_cover_every_row() {
        for c in [Conjecture::Conj1, Conjecture::Conj3, Conjecture::Conj4] {
            let r = verify_case_coverage(c, 0, &opts()).unwrap();
            assert!(r.passed());
            assert!(r.case_coverage.iter().all(|cov| cov.witness.is_some()));
        }
    }

    #[test]
    fn chained_interval_on_example_tree() {
        let tree = RootedTree::new(vec![0, 0, 2, 0, 3, 3]).unwrap();
        let pc = tree.to_partition().unwrap().characteristics();
        let interval = chained_leaf_interval(7, &pc).unwrap();
        assert_eq!(interval, LeafInterval { lower: 3, upper: 4 });
        assert!(interval.contains(4));
        assert!(tree_partition_mismatches(&tree).is_empty());

        let two = RootedTree::new(vec![0]).unwrap();
        let pc = two.to_partition().unwrap().characteristics();
        assert_eq!(chained_leaf_interval(2, &pc).unwrap(), LeafInterval { lower: 1, upper: 1 });
        assert_eq!(two.characteristics().leaves, 1);
    }

    #[test]
    fn bound_semantics() {
        assert!(Bound::AtLeast(2).holds(3));
        assert!(!Bound::AtMost(2).holds(3));
        assert!(Bound::AtLeast(2).attained(2, 5));
        assert!(Bound::AtMost(5).attained(2, 5));
        let i = LeafInterval { lower: 3, upper: 4 };
        assert!(Bound::Within(i).attained(3, 4));
        assert!(!Bound::Within(i).attained(4, 4));
    }
}
