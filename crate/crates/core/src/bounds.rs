//! Closed-form bounds on digraph, partition and rooted-tree characteristics,
//! plus the case classifiers that unfold the digraph bounds into disjoint
//! cases with simplified formulas.
//!
//! Evaluators take raw integers so enumeration sweeps can query parameter
//! tuples that have no accompanying instance. All arithmetic is on
//! non-negative integers; divisors are validated to be at least 1.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::digraph::DigraphCharacteristics;
use crate::error::{inconsistent, Error, Result};
use crate::ordered::{PartitionCharacteristics, RootedTreeCharacteristics};

/// `⌈a/b⌉` for `b >= 1`.
pub fn ceil_div(a: usize, b: usize) -> usize {
    debug_assert!(b >= 1);
    a.div_ceil(b)
}

/// `⌊a/b⌋` for `b >= 1`.
pub fn floor_div(a: usize, b: usize) -> usize {
    debug_assert!(b >= 1);
    a / b
}

/// Iverson bracket.
pub fn iverson(e: bool) -> usize {
    usize::from(e)
}

/// `(cond ? x : y)`.
pub fn cond<T>(c: bool, x: T, y: T) -> T {
    if c {
        x
    } else {
        y
    }
}

fn require(ok: bool, what: &str) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(inconsistent(what))
    }
}

/// A feasible truth assignment to the conditions attached to one of the
/// digraph bounds. Only feasible assignments can be constructed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CaseId {
    conjecture: u8,
    signs: [Option<bool>; 3],
}

impl CaseId {
    /// Conditions ① `v mod c̄ = 0`, ② `s̲ >= (① ? c̄ : v mod c̄)`, ③ `2s̲ <= c̄`.
    pub fn conj1(divisible: bool, min_scc_covers_rest: bool, two_fit: bool) -> Result<Self> {
        let id = Self {
            conjecture: 1,
            signs: [Some(divisible), Some(min_scc_covers_rest), Some(two_fit)],
        };
        if divisible && min_scc_covers_rest && two_fit {
            return Err(Error::InfeasibleCase(id.to_string()));
        }
        Ok(id)
    }

    /// Conditions ④ `v = s̲`, ⑤ `s = 1`. Mixed assignments are infeasible.
    pub fn conj3(whole_is_min: bool, single_scc: bool) -> Result<Self> {
        let id = Self {
            conjecture: 3,
            signs: [Some(whole_is_min), Some(single_scc), None],
        };
        if whole_is_min != single_scc {
            return Err(Error::InfeasibleCase(id.to_string()));
        }
        Ok(id)
    }

    /// Conditions ⑥ `v = c·c̲`, ⑦ `s̄ >= ⌈(v-c̲)/(c-1)⌉`. Under ⑥ condition ⑦
    /// is irrelevant and must be `None`; otherwise it must be given.
    pub fn conj4(uniform: bool, scc_dominates: Option<bool>) -> Result<Self> {
        let id = Self {
            conjecture: 4,
            signs: [Some(uniform), scc_dominates, None],
        };
        if uniform == scc_dominates.is_some() {
            return Err(Error::InfeasibleCase(id.to_string()));
        }
        Ok(id)
    }

    pub fn conjecture(&self) -> u8 {
        self.conjecture
    }

    pub fn signs(&self) -> [Option<bool>; 3] {
        self.signs
    }

    /// Every feasible case of a table, in table order.
    pub fn table(conjecture: u8) -> Vec<CaseId> {
        match conjecture {
            1 => [
                (true, true, false),
                (true, false, true),
                (true, false, false),
                (false, true, true),
                (false, true, false),
                (false, false, true),
                (false, false, false),
            ]
            .into_iter()
            .map(|(a, b, c)| Self::conj1(a, b, c).expect("feasible row"))
            .collect(),
            3 => vec![Self::conj3(true, true).unwrap(), Self::conj3(false, false).unwrap()],
            4 => vec![
                Self::conj4(true, None).unwrap(),
                Self::conj4(false, Some(true)).unwrap(),
                Self::conj4(false, Some(false)).unwrap(),
            ],
            _ => Vec::new(),
        }
    }

    fn symbols(&self) -> [&'static str; 3] {
        match self.conjecture {
            1 => ["\u{2460}", "\u{2461}", "\u{2462}"],
            3 => ["\u{2463}", "\u{2464}", ""],
            _ => ["\u{2465}", "\u{2466}", ""],
        }
    }
}

impl fmt::Display for CaseId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .signs
            .iter()
            .zip(self.symbols())
            .filter_map(|(sign, sym)| sign.map(|s| if s { sym.to_string() } else { format!("\u{ac}{sym}") }))
            .collect();
        f.write_str(&parts.join("\u{2227}"))
    }
}

impl Serialize for CaseId {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// Closed interval of admissible leaf counts.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct LeafInterval {
    pub lower: usize,
    pub upper: usize,
}

impl LeafInterval {
    pub fn contains(&self, x: usize) -> bool {
        self.lower <= x && x <= self.upper
    }
}

impl fmt::Display for LeafInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.lower, self.upper)
    }
}

fn check_conj1(v: usize, cc_max: usize, scc_min: usize) -> Result<()> {
    require(
        1 <= scc_min && scc_min <= cc_max && cc_max <= v,
        "conj1 requires 1 <= scc_min <= cc_max <= v",
    )
}

/// Lower bound on the number of connected components `c`.
pub fn conj1_bound(v: usize, cc_max: usize, scc_min: usize) -> Result<usize> {
    check_conj1(v, cc_max, scc_min)?;
    let rem = v % cc_max;
    Ok(ceil_div(v, cc_max)
        + iverson(!((2 * scc_min <= cc_max) || (scc_min >= cond(rem == 0, cc_max, rem)))))
}

/// Classifies `(v, c̄, s̲)` into its row and returns the row's simplified bound.
pub fn conj1_case(v: usize, cc_max: usize, scc_min: usize) -> Result<(CaseId, usize)> {
    check_conj1(v, cc_max, scc_min)?;
    let rem = v % cc_max;
    let c1 = rem == 0;
    let c2 = scc_min >= cond(c1, cc_max, rem);
    let c3 = 2 * scc_min <= cc_max;
    let case = CaseId::conj1(c1, c2, c3)?;
    let base = floor_div(v, cc_max);
    let simplified = match (c1, c2, c3) {
        (true, true, false) | (true, false, true) => base,
        (true, false, false) => base + 1,
        (false, false, false) => base + 2,
        (false, _, _) => base + 1,
        (true, true, true) => unreachable!("rejected by CaseId::conj1"),
    };
    Ok((case, simplified))
}

/// Lower bound on `c` from the number of SCCs: each connected component
/// holds at most `⌊c̄/s̲⌋` SCCs.
pub fn conj2_bound(s: usize, cc_max: usize, scc_min: usize) -> Result<usize> {
    require(
        s >= 1 && 1 <= scc_min && scc_min <= cc_max,
        "conj2 requires s >= 1 and 1 <= scc_min <= cc_max",
    )?;
    Ok(ceil_div(s, floor_div(cc_max, scc_min)))
}

fn check_conj3(v: usize, s: usize, scc_min: usize) -> Result<()> {
    require(
        1 <= scc_min && scc_min <= v && 1 <= s && s <= v,
        "conj3 requires 1 <= scc_min <= v and 1 <= s <= v",
    )
}

/// Lower bound on the largest SCC size `s̄`.
pub fn conj3_bound(v: usize, s: usize, scc_min: usize) -> Result<usize> {
    check_conj3(v, s, scc_min)?;
    Ok(ceil_div(cond(v == scc_min, v, v - scc_min), s - 1 + iverson(s == 1)))
}

pub fn conj3_case(v: usize, s: usize, scc_min: usize) -> Result<(CaseId, usize)> {
    check_conj3(v, s, scc_min)?;
    let case = CaseId::conj3(v == scc_min, s == 1)?;
    let simplified = if s == 1 { v } else { ceil_div(v - scc_min, s - 1) };
    Ok((case, simplified))
}

fn check_conj4(v: usize, c: usize, cc_min: usize, scc_max: usize) -> Result<()> {
    require(
        cc_min >= 1 && c >= 1 && scc_max >= 1 && c * cc_min <= v,
        "conj4 requires cc_min, c, scc_max >= 1 and c*cc_min <= v",
    )?;
    require(v == c * cc_min || c >= 2, "conj4 requires c >= 2 when v != c*cc_min")
}

/// Lower bound on the largest connected component size `c̄`.
pub fn conj4_bound(v: usize, c: usize, cc_min: usize, scc_max: usize) -> Result<usize> {
    check_conj4(v, c, cc_min, scc_max)?;
    Ok(if v == c * cc_min {
        cc_min
    } else {
        scc_max.max(ceil_div(v - cc_min, c - 1))
    })
}

pub fn conj4_case(v: usize, c: usize, cc_min: usize, scc_max: usize) -> Result<(CaseId, usize)> {
    check_conj4(v, c, cc_min, scc_max)?;
    if v == c * cc_min {
        return Ok((CaseId::conj4(true, None)?, cc_min));
    }
    let spread = ceil_div(v - cc_min, c - 1);
    let dominates = scc_max >= spread;
    let simplified = if dominates { scc_max } else { spread };
    Ok((CaseId::conj4(false, Some(dominates))?, simplified))
}

/// Upper bound on the number of distinct values of a sequence.
pub fn partition_nval_upper(n_p: usize, m_min: usize, m_diff: usize) -> Result<usize> {
    require(
        m_min >= 1 && n_p >= m_min + m_diff,
        "partition upper bound requires m_min >= 1 and n_p >= m_min + m_diff",
    )?;
    Ok(floor_div(n_p - m_diff, m_min))
}

/// Lower bound on the number of distinct values of a sequence.
pub fn partition_nval_lower(n_p: usize, m_max: usize, m_diff: usize) -> Result<usize> {
    require(
        m_max >= 1 && m_diff < m_max && n_p >= m_max,
        "partition lower bound requires 0 <= m_diff < m_max <= n_p",
    )?;
    Ok(ceil_div(n_p + m_diff, m_max))
}

/// Interval of admissible leaf counts of a rooted tree on `n` vertices with
/// child-count range `[d_min, d_max]` over non-leaf vertices.
pub fn tree_leaf_interval(n: usize, d_min: usize, d_max: usize) -> Result<LeafInterval> {
    require(n >= 1, "tree interval requires n >= 1")?;
    if d_min == 0 {
        require(n == 1 && d_max == 0, "d_min = 0 requires n = 1 and d_max = 0")?;
        return Ok(LeafInterval { lower: 1, upper: 1 });
    }
    require(
        n >= 2 && d_min <= d_max && d_max < n,
        "tree interval requires 1 <= d_min <= d_max <= n-1",
    )?;
    // numerators rearranged to stay non-negative: n·d̲ + d̄ − d̲ − n + 1 and n·d̄ + d̲ − d̄ − n + 1
    let lower = ceil_div(n * d_min + d_max + 1 - d_min - n, d_min);
    let upper = floor_div(n * d_max + d_min + 1 - d_max - n, d_max);
    Ok(LeafInterval { lower, upper })
}

pub fn conj1_for(ch: &DigraphCharacteristics) -> Result<usize> {
    conj1_bound(ch.v, ch.cc_max, ch.scc_min)
}

pub fn conj2_for(ch: &DigraphCharacteristics) -> Result<usize> {
    conj2_bound(ch.s, ch.cc_max, ch.scc_min)
}

pub fn conj3_for(ch: &DigraphCharacteristics) -> Result<usize> {
    conj3_bound(ch.v, ch.s, ch.scc_min)
}

pub fn conj4_for(ch: &DigraphCharacteristics) -> Result<usize> {
    conj4_bound(ch.v, ch.c, ch.cc_min, ch.scc_max)
}

pub fn partition_upper_for(pc: &PartitionCharacteristics) -> Result<usize> {
    partition_nval_upper(pc.n_p, pc.m_min, pc.m_diff)
}

pub fn partition_lower_for(pc: &PartitionCharacteristics) -> Result<usize> {
    partition_nval_lower(pc.n_p, pc.m_max, pc.m_diff)
}

pub fn leaf_interval_for(tc: &RootedTreeCharacteristics) -> Result<LeafInterval> {
    tree_leaf_interval(tc.n, tc.d_min, tc.d_max)
}

/// Triples `(v, scc_min, cc_max)` with `1 <= scc_min <= cc_max < v <= max_v`
/// where raising `cc_max` by one raises the conj1 bound.
pub fn conj1_monotonicity_counterexamples(max_v: usize) -> Vec<(usize, usize, usize)> {
    let mut out = Vec::new();
    for v in 1..=max_v {
        for scc_min in 1..=v {
            for cc_max in scc_min..v {
                let here = conj1_bound(v, cc_max, scc_min).expect("valid triple");
                let next = conj1_bound(v, cc_max + 1, scc_min).expect("valid triple");
                if next > here {
                    out.push((v, scc_min, cc_max));
                }
            }
        }
    }
    out
}
