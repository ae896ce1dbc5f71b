use std::collections::BTreeMap;
use std::fmt::{self, Write as _};

use serde::Serialize;

use crate::bounds::{CaseId, LeafInterval};

use super::{Conjecture, Mode};

pub const SCHEMA_VERSION: u32 = 1;

/// What a bound asserts about the observed characteristic.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Bound {
    AtLeast(usize),
    AtMost(usize),
    Within(LeafInterval),
}

impl Bound {
    pub fn holds(&self, observed: usize) -> bool {
        match *self {
            Bound::AtLeast(b) => observed >= b,
            Bound::AtMost(b) => observed <= b,
            Bound::Within(i) => i.contains(observed),
        }
    }

    /// Attained when the extreme observations sit exactly on the bound.
    pub fn attained(&self, min_observed: usize, max_observed: usize) -> bool {
        match *self {
            Bound::AtLeast(b) => min_observed == b,
            Bound::AtMost(b) => max_observed == b,
            Bound::Within(i) => min_observed == i.lower && max_observed == i.upper,
        }
    }
}

impl fmt::Display for Bound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Bound::AtLeast(b) => write!(f, ">= {b}"),
            Bound::AtMost(b) => write!(f, "<= {b}"),
            Bound::Within(i) => write!(f, "in {i}"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ViolationKind {
    /// Observed value outside the bound.
    Bound,
    /// Evaluator rejected characteristics of a real instance.
    Evaluator,
    /// Case classification landed on an infeasible assignment.
    InfeasibleCase,
    /// Simplified row bound disagrees with the full formula.
    CaseMismatch,
    /// Tree-to-partition identity or chained interval mismatch.
    Mapping,
    /// Realized parameter tuple whose bound is never met with equality.
    Unattained,
    /// Table row with no witness.
    Uncovered,
    /// Witness fixture failed its check.
    Fixture,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub kind: ViolationKind,
    pub size: usize,
    /// Raw candidate index in the enumeration stream.
    pub index: Option<u64>,
    /// Instance document (JSON), ready to feed back to `invariants`.
    pub instance: Option<String>,
    pub characteristics: BTreeMap<String, usize>,
    pub bound: Option<Bound>,
    pub observed: Option<usize>,
    pub detail: String,
}

impl Violation {
    fn sort_key(&self) -> (usize, Option<u64>, ViolationKind, &str) {
        (self.size, self.index, self.kind, &self.detail)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TupleStat {
    pub tuple: Vec<usize>,
    pub instances: u64,
    pub min_observed: usize,
    pub max_observed: usize,
    pub bound: Bound,
    pub attained: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Attainment {
    /// Distinct parameter tuples realized by some instance.
    pub realized: usize,
    /// Realized tuples whose bound is met with equality.
    pub attained: usize,
}

impl Attainment {
    pub fn fraction(&self) -> f64 {
        if self.realized == 0 {
            1.0
        } else {
            self.attained as f64 / self.realized as f64
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum WitnessSource {
    Enumeration,
    Fixture,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub source: WitnessSource,
    pub size: usize,
    pub index: Option<u64>,
    pub instance: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CaseCoverage {
    pub case: CaseId,
    pub witness: Option<Witness>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Pass,
    Fail,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerificationReport {
    pub schema_version: u32,
    pub conjecture: Conjecture,
    pub mode: Mode,
    pub sizes_swept: Vec<usize>,
    pub instances_checked: u64,
    pub verdict: Verdict,
    pub violations: Vec<Violation>,
    pub tuple_parameters: Vec<String>,
    pub observed: String,
    pub tuple_stats: Vec<TupleStat>,
    pub attainment: Option<Attainment>,
    pub case_coverage: Vec<CaseCoverage>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// Human-readable summary.
    pub fn to_table(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "conjecture     {}", self.conjecture);
        let _ = writeln!(out, "mode           {}", self.mode);
        let _ = writeln!(out, "sizes          {:?}", self.sizes_swept);
        let _ = writeln!(out, "instances      {}", self.instances_checked);
        let _ = writeln!(out, "violations     {}", self.violations.len());
        if let Some(a) = self.attainment {
            let _ = writeln!(
                out,
                "attainment     {}/{} tuples ({:.2}%)",
                a.attained,
                a.realized,
                100.0 * a.fraction()
            );
        }
        for cov in &self.case_coverage {
            let witness = match &cov.witness {
                Some(w) => format!("{:?} size={} {}", w.source, w.size, w.instance),
                None => "UNCOVERED".to_string(),
            };
            let _ = writeln!(out, "case {:<14} {}", cov.case.to_string(), witness);
        }
        for v in self.violations.iter().take(20) {
            let _ = writeln!(
                out,
                "violation {:?} size={} {} {}",
                v.kind,
                v.size,
                v.instance.as_deref().unwrap_or("-"),
                v.detail
            );
        }
        if self.violations.len() > 20 {
            let _ = writeln!(out, "... {} more violations", self.violations.len() - 20);
        }
        let _ = writeln!(
            out,
            "verdict        {}",
            if self.passed() { "PASS" } else { "FAIL" }
        );
        out
    }
}

#[derive(Clone, Debug)]
pub(crate) struct TupleAcc {
    pub instances: u64,
    pub min: usize,
    pub max: usize,
    pub bound: Bound,
}

/// Partial sweep result. Merging is commutative and associative, so shard
/// scheduling never shows up in the final report.
#[derive(Clone, Debug, Default)]
pub(crate) struct Tally {
    pub instances: u64,
    pub violations: Vec<Violation>,
    pub tuples: BTreeMap<Vec<usize>, TupleAcc>,
    pub coverage: BTreeMap<CaseId, Witness>,
}

impl Tally {
    pub fn observe_tuple(&mut self, tuple: Vec<usize>, observed: usize, bound: Bound) {
        self.tuples
            .entry(tuple)
            .and_modify(|acc| {
                acc.instances += 1;
                acc.min = acc.min.min(observed);
                acc.max = acc.max.max(observed);
            })
            .or_insert(TupleAcc {
                instances: 1,
                min: observed,
                max: observed,
                bound,
            });
    }

    pub fn cover(&mut self, case: CaseId, witness: Witness) {
        let earlier = |a: &Witness, b: &Witness| (a.size, a.index) < (b.size, b.index);
        match self.coverage.get(&case) {
            Some(existing) if !earlier(&witness, existing) => {}
            _ => {
                self.coverage.insert(case, witness);
            }
        }
    }

    pub fn merge(&mut self, other: Tally) {
        self.instances += other.instances;
        self.violations.extend(other.violations);
        for (tuple, acc) in other.tuples {
            match self.tuples.get_mut(&tuple) {
                Some(mine) => {
                    mine.instances += acc.instances;
                    mine.min = mine.min.min(acc.min);
                    mine.max = mine.max.max(acc.max);
                }
                None => {
                    self.tuples.insert(tuple, acc);
                }
            }
        }
        for (case, w) in other.coverage {
            self.cover(case, w);
        }
    }

    pub fn sort_violations(&mut self) {
        self.violations.sort_by(|a, b| a.sort_key().cmp(&b.sort_key()));
    }
}
