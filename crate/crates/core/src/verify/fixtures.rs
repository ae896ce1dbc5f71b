//! Witness digraphs for every row of the three case tables, transcribed to
//! explicit arc sets. Each one attains its row's bound with equality.

use std::fmt;

use crate::bounds::{self, CaseId};
use crate::digraph::{Digraph, DigraphCharacteristics};

use super::Conjecture;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WitnessFixture {
    pub conjecture: Conjecture,
    pub case: CaseId,
    pub instance: Digraph,
    /// The row's witness parameters, by characteristic name.
    pub parameters: Vec<(&'static str, usize)>,
    /// The bounded characteristic and the value the witness shows for it.
    pub expected: (&'static str, usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FixtureMismatch {
    pub field: String,
    pub expected: String,
    pub actual: String,
}

impl fmt::Display for FixtureMismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}: expected {}, found {}",
            self.field, self.expected, self.actual
        )
    }
}

impl std::error::Error for FixtureMismatch {}

/// Everything recomputed while checking a fixture.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FixtureCheck {
    pub characteristics: DigraphCharacteristics,
    pub case: CaseId,
    pub bound: usize,
    pub simplified_bound: usize,
}

fn union(parts: &[Digraph]) -> Digraph {
    parts
        .iter()
        .skip(1)
        .fold(parts[0].clone(), |acc, g| acc.disjoint_union(g))
}

fn row(conj: u8, idx: usize) -> CaseId {
    CaseId::table(conj)[idx]
}

/// Fixtures for conjecture 1, 3 or 4, in table order. Empty otherwise.
pub fn fixtures(conjecture: Conjecture) -> Vec<WitnessFixture> {
    use Digraph as G;
    let fx = |row_idx: usize,
              instance: Digraph,
              parameters: Vec<(&'static str, usize)>,
              expected: (&'static str, usize)| {
        let table = conjecture.table().expect("table conjecture");
        WitnessFixture {
            conjecture,
            case: row(table, row_idx),
            instance,
            parameters,
            expected,
        }
    };
    match conjecture {
        Conjecture::Conj1 => {
            let p = |v, cc_max, scc_min| vec![("v", v), ("cc_max", cc_max), ("scc_min", scc_min)];
            vec![
                fx(0, G::self_loop(), p(1, 1, 1), ("c", 1)),
                fx(1, G::path(2), p(2, 2, 1), ("c", 1)),
                fx(
                    2,
                    union(&[G::cycle(3), G::cycle(2), G::cycle(2), G::cycle(2)]),
                    p(9, 3, 2),
                    ("c", 4),
                ),
                fx(3, union(&[G::path(2), G::self_loop()]), p(3, 2, 1), ("c", 2)),
                fx(4, union(&[G::cycle(3), G::cycle(2)]), p(5, 3, 2), ("c", 2)),
                fx(5, union(&[G::path(3), G::path(2)]), p(5, 3, 1), ("c", 2)),
                fx(
                    6,
                    union(&[G::cycle(5), G::cycle(3), G::cycle(3), G::cycle(3)]),
                    p(14, 5, 3),
                    ("c", 4),
                ),
            ]
        }
        Conjecture::Conj3 => {
            let p = |v, s, scc_min| vec![("v", v), ("s", s), ("scc_min", scc_min)];
            vec![
                fx(0, G::self_loop(), p(1, 1, 1), ("scc_max", 1)),
                fx(1, G::path(2), p(2, 2, 1), ("scc_max", 1)),
            ]
        }
        Conjecture::Conj4 => {
            let p = |v, cc_min, c, scc_max| vec![("v", v), ("cc_min", cc_min), ("c", c), ("scc_max", scc_max)];
            vec![
                fx(0, G::self_loop(), p(1, 1, 1, 1), ("cc_max", 1)),
                fx(
                    1,
                    union(&[G::cycle(3), G::self_loop(), G::self_loop()]),
                    p(5, 1, 3, 3),
                    ("cc_max", 3),
                ),
                fx(2, union(&[G::path(2), G::self_loop()]), p(3, 1, 2, 1), ("cc_max", 2)),
            ]
        }
        _ => Vec::new(),
    }
}

pub fn all_fixtures() -> Vec<WitnessFixture> {
    [Conjecture::Conj1, Conjecture::Conj3, Conjecture::Conj4]
        .into_iter()
        .flat_map(fixtures)
        .collect()
}

fn field(ch: &DigraphCharacteristics, name: &str) -> Option<usize> {
    ch.fields().iter().find(|(n, _, _)| *n == name).map(|&(_, _, v)| v)
}

fn mismatch(field: impl Into<String>, expected: impl ToString, actual: impl ToString) -> FixtureMismatch {
    FixtureMismatch {
        field: field.into(),
        expected: expected.to_string(),
        actual: actual.to_string(),
    }
}

/// Recomputes the fixture's characteristics, case and bound from its arc
/// set and compares each against the table row.
pub fn check_fixture(f: &WitnessFixture) -> Result<FixtureCheck, FixtureMismatch> {
    let ch = f
        .instance
        .characteristics()
        .map_err(|e| mismatch("class", "in-class digraph", e))?;
    for &(name, want) in f.parameters.iter().chain(std::iter::once(&f.expected)) {
        let got = field(&ch, name).ok_or_else(|| mismatch(name, want, "unknown characteristic"))?;
        if got != want {
            return Err(mismatch(name, want, got));
        }
    }
    let evaluated = match f.conjecture {
        Conjecture::Conj1 => bounds::conj1_for(&ch).and_then(|b| Ok((b, bounds::conj1_case(ch.v, ch.cc_max, ch.scc_min)?))),
        Conjecture::Conj3 => bounds::conj3_for(&ch).and_then(|b| Ok((b, bounds::conj3_case(ch.v, ch.s, ch.scc_min)?))),
        Conjecture::Conj4 => {
            bounds::conj4_for(&ch).and_then(|b| Ok((b, bounds::conj4_case(ch.v, ch.c, ch.cc_min, ch.scc_max)?)))
        }
        other => return Err(mismatch("conjecture", "1, 3 or 4", other)),
    };
    let (bound, (case, simplified)) = evaluated.map_err(|e| mismatch("bound", "evaluable", e))?;
    if case != f.case {
        return Err(mismatch("case", f.case, case));
    }
    if bound != f.expected.1 {
        return Err(mismatch("bound", f.expected.1, bound));
    }
    if simplified != f.expected.1 {
        return Err(mismatch("simplified_bound", f.expected.1, simplified));
    }
    Ok(FixtureCheck {
        characteristics: ch,
        case,
        bound,
        simplified_bound: simplified,
    })
}
