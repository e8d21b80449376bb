//! Complete tableaux given by column heights, their functions, and the
//! function-level deconstruction into block removals.
//!
//! Columns are `C_1, ..., C_{n+1}`. In a complete tableau the entry of a
//! block is forced by the parity of its row, so the heights are the whole
//! tableau. Inside this module `k` in a move always names the column
//! `C_{k+1}`.

use std::collections::{BTreeSet, HashSet};
use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactmath::{FunctionVector, LinearForm};
use crate::orders::CoeffOrder;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct HeightProfile {
    heights: Vec<u32>,
}

impl HeightProfile {
    /// `heights[i]` is the height of `C_{i+1}`; there must be at least one column.
    pub fn new(heights: Vec<u32>) -> Result<Self> {
        if heights.is_empty() {
            return Err(Error::input("a profile needs at least the column C_1"));
        }
        Ok(Self { heights })
    }

    pub fn empty(n: usize) -> Self {
        Self {
            heights: vec![0; n + 1],
        }
    }

    pub fn n(&self) -> usize {
        self.heights.len() - 1
    }

    pub fn heights(&self) -> &[u32] {
        &self.heights
    }

    /// Height of `C_col`, 1-based; zero outside `1..=n+1`.
    pub fn height(&self, col: usize) -> u32 {
        if col == 0 {
            0
        } else {
            self.heights.get(col - 1).copied().unwrap_or(0)
        }
    }

    pub fn max_height(&self) -> u32 {
        self.heights.iter().copied().max().unwrap_or(0)
    }

    fn columns_at(&self, m: u32) -> impl DoubleEndedIterator<Item = usize> + '_ {
        (1..=self.n() + 1).filter(move |&c| self.height(c) >= m)
    }

    /// Nearest column strictly left of `col` with height at least `m`.
    fn left_neighbour(&self, col: usize, m: u32) -> Option<usize> {
        (1..col).rev().find(|&c| self.height(c) >= m)
    }

    /// Nearest column strictly right of `col` with height at least `m`.
    fn right_neighbour(&self, col: usize, m: u32) -> Option<usize> {
        (col + 1..=self.n() + 1).find(|&c| self.height(c) >= m)
    }

    fn with_added(&self, col: usize, blocks: u32) -> Self {
        let mut h = self.clone();
        h.heights[col - 1] += blocks;
        h
    }
}

impl fmt::Display for HeightProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.heights.iter().join(","))
    }
}

impl FromStr for HeightProfile {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let heights = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::parse("heights", format!("bad entry {t:?} in {s:?}")))
            })
            .collect::<Result<Vec<u32>>>()?;
        Self::new(heights)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "clause", rename_all = "camelCase")]
pub enum ProfileViolation {
    /// At an odd level the rightmost column must be `C_{n+1}`, at an even
    /// level the leftmost must be `C_1`.
    Boundary { level: u32, column: usize },
    /// `C_column` is shorter than `C_beside` (its neighbour) requires.
    Neighbour { column: usize, beside: usize, required: u32 },
}

impl fmt::Display for ProfileViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ProfileViolation::Boundary { level, column } => {
                let side = if level % 2 == 1 { "rightmost" } else { "leftmost" };
                write!(f, "level {level}: {side} column is C{column}")
            }
            ProfileViolation::Neighbour { column, beside, required } => {
                write!(f, "C{column} must have height at least {required} beside C{beside}")
            }
        }
    }
}

/// The admissibility clauses violated by `h`; empty when admissible.
pub fn validate_profile(h: &HeightProfile) -> Vec<ProfileViolation> {
    let last = h.n() + 1;
    let mut out = Vec::new();
    for m in 1..=h.max_height() {
        let mut cols = h.columns_at(m);
        let edge = if m % 2 == 1 {
            cols.next_back().filter(|&c| c != last)
        } else {
            cols.next().filter(|&c| c != 1)
        };
        if let Some(column) = edge {
            out.push(ProfileViolation::Boundary { level: m, column });
        }
    }
    for col in 1..=last {
        let m = h.height(col);
        if m == 0 {
            continue;
        }
        let (left_req, right_req) = if m % 2 == 1 {
            (m.saturating_sub(2), m - 1)
        } else {
            (m - 1, m.saturating_sub(2))
        };
        if col > 1 && h.height(col - 1) < left_req {
            out.push(ProfileViolation::Neighbour { column: col - 1, beside: col, required: left_req });
        }
        if col < last && h.height(col + 1) < right_req {
            out.push(ProfileViolation::Neighbour { column: col + 1, beside: col, required: right_req });
        }
    }
    out
}

/// `f_T` by rows: an odd-row block of `C_k` gives `c_k (r^k - r^j)` with
/// `C_j` its right neighbour, an even-row block of `C_{k+1}` gives
/// `c_k (r^{k+1} - r^j)` with `C_j` its left neighbour.
pub fn evaluate_rows(h: &HeightProfile) -> Result<FunctionVector> {
    let n = h.n();
    let mut f = FunctionVector::zero(n);
    for m in 1..=h.max_height() {
        for col in h.columns_at(m) {
            let term = if m % 2 == 1 {
                if col == n + 1 {
                    continue;
                }
                let j = h
                    .right_neighbour(col, m)
                    .ok_or(Error::BoundaryViolation { row: m, column: col })?;
                FunctionVector::r_difference(n, col, j, &LinearForm::var(col))
            } else {
                if col == 1 {
                    continue;
                }
                let j = h
                    .left_neighbour(col, m)
                    .ok_or(Error::BoundaryViolation { row: m, column: col })?;
                FunctionVector::r_difference(n, col, j, &LinearForm::var(col - 1))
            };
            f = &f + &term;
        }
    }
    Ok(f)
}

/// The `n + 1` differences `c'_{k+1} - c'_k` for `k = 0..=n`, read off the
/// top block of each column.
pub fn column_differences(h: &HeightProfile) -> Vec<LinearForm> {
    let n = h.n();
    (1..=n + 1)
        .map(|col| {
            let m = h.height(col);
            let own = LinearForm::coeff_var(col, n);
            if m == 0 {
                return LinearForm::zero();
            }
            let partner = if m % 2 == 1 {
                h.left_neighbour(col, m)
            } else {
                h.right_neighbour(col, m).map(|c| c - 1)
            };
            match partner {
                Some(j) => &own - &LinearForm::coeff_var(j, n),
                None => own,
            }
        })
        .collect()
}

/// `f_T` by summing [`column_differences`]. The last partial sum must vanish.
pub fn evaluate_diffs(h: &HeightProfile) -> Result<FunctionVector> {
    let diffs = column_differences(h);
    let mut acc = LinearForm::zero();
    let mut coords = Vec::with_capacity(h.n());
    for d in &diffs {
        acc += d;
        coords.push(acc.clone());
    }
    let closing = coords.pop().expect("n + 1 differences");
    if !closing.is_zero() {
        return Err(Error::input(format!(
            "differences of profile ({h}) sum to {closing}, not 0"
        )));
    }
    Ok(FunctionVector::from_coords(coords))
}

/// Generators `a ≺ b` of the partial order attached to a tableau.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct OrderRelations {
    pub pairs: BTreeSet<(usize, usize)>,
}

impl OrderRelations {
    pub fn transitive_closure(&self) -> BTreeSet<(usize, usize)> {
        let mut closure = self.pairs.clone();
        loop {
            let extra: Vec<(usize, usize)> = closure
                .iter()
                .flat_map(|&(a, b)| {
                    closure
                        .iter()
                        .filter(move |&&(c, _)| c == b)
                        .map(move |&(_, d)| (a, d))
                })
                .filter(|p| !closure.contains(p))
                .collect();
            if extra.is_empty() {
                return closure;
            }
            closure.extend(extra);
        }
    }

    /// Whether the relations lift to the linear order.
    pub fn embeds_in(&self, order: &CoeffOrder) -> bool {
        self.pairs
            .iter()
            .all(|&(a, b)| a <= order.n() && b <= order.n() && order.precedes(a, b))
    }
}

impl fmt::Display for OrderRelations {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.pairs.iter().map(|(a, b)| format!("{a}<{b}")).collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

pub fn order_relations(h: &HeightProfile) -> OrderRelations {
    let n = h.n();
    let mut rel = OrderRelations::default();
    let mut add = |a: usize, b: usize| {
        if a != b && (1..=n).contains(&a) && (1..=n).contains(&b) {
            rel.pairs.insert((a, b));
        }
    };
    for m in 1..=h.max_height() {
        let cols: Vec<usize> = h.columns_at(m).collect();
        for (&left, &right) in cols.iter().tuple_windows() {
            if m % 2 == 1 {
                let (j, k) = (left, right - 1);
                if m > 1 {
                    for mid in left + 1..right {
                        if h.height(mid) == m - 1 {
                            add(j, mid - 1);
                        }
                    }
                }
                add(j, k);
            } else {
                add(right - 1, left);
            }
        }
    }
    rel
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "camelCase")]
pub enum Extremal {
    Empty,
    /// `k` such that `C_{k+1}` is the strongly extremal column.
    Column { k: usize },
    NotRepresentable { matches: Vec<usize> },
}

/// Locates `k` with `c'_{k+1} - c'_k = c_{k+1}`.
pub fn strongly_extremal_column(f: &FunctionVector) -> Extremal {
    if f.is_zero() {
        return Extremal::Empty;
    }
    let n = f.n();
    let matches: Vec<usize> = (0..=n)
        .filter(|&k| f.get(k + 1) - f.get(k) == LinearForm::coeff_var(k + 1, n))
        .collect();
    match matches.as_slice() {
        [k] => Extremal::Column { k: *k },
        _ => Extremal::NotRepresentable { matches },
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Odd,
    Even,
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Parity::Odd => "odd",
            Parity::Even => "even",
        })
    }
}

/// Candidate partners for `C_{k+1}`: odd ones by ascending `j`, then even
/// ones by descending `j`.
pub fn quasi_extremal_neighbor(f: &FunctionVector, k: usize) -> Vec<(usize, Parity)> {
    let n = f.n();
    let c = |i: usize| LinearForm::coeff_var(i, n);
    let step = |j: usize| f.get(j + 1) - f.get(j);
    let odd = (k + 1..=n)
        .filter(|&j| step(j) == &c(j + 1) - &c(k + 1))
        .map(|j| (j, Parity::Odd));
    let even = (0..k)
        .rev()
        .filter(|&j| step(j) == &c(j + 1) - &c(k))
        .map(|j| (j, Parity::Even));
    odd.chain(even).collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Move {
    pub k: usize,
    pub j: usize,
    pub parity: Parity,
}

impl Move {
    /// The removed contribution `c (r^{k+1} - r^{j+1})`, with `c = c_{k+1}`
    /// for odd moves and `c = c_k` for even ones.
    pub fn term(&self, n: usize) -> FunctionVector {
        let weight = match self.parity {
            Parity::Odd => LinearForm::coeff_var(self.k + 1, n),
            Parity::Even => LinearForm::coeff_var(self.k, n),
        };
        FunctionVector::r_difference(n, self.k + 1, self.j + 1, &weight)
    }
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.k, self.j, self.parity)
    }
}

/// Removals in the order they were made.
pub type MoveLog = Vec<Move>;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "reason", rename_all = "camelCase")]
pub enum NotRepresentable {
    /// No or several strongly extremal candidates at the given step (1-based).
    Column { step: usize, matches: Vec<usize> },
    /// Every branch ended without reaching zero.
    DeadEnd { explored: usize },
    BoundExhausted { bound: usize },
}

impl fmt::Display for NotRepresentable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NotRepresentable::Column { step, matches } => {
                write!(f, "step {step}: strongly extremal candidates {matches:?}")
            }
            NotRepresentable::DeadEnd { explored } => {
                write!(f, "no branch reaches zero ({explored} moves explored)")
            }
            NotRepresentable::BoundExhausted { bound } => write!(f, "step bound {bound} exhausted"),
        }
    }
}

pub fn default_step_bound(n: usize) -> usize {
    4 * n * n * (n + 1)
}

/// Removes blocks from `f` until nothing is left, returning the removals.
pub fn deconstruct(f: &FunctionVector) -> std::result::Result<MoveLog, NotRepresentable> {
    deconstruct_bounded(f, default_step_bound(f.n()).max(1))
}

pub fn deconstruct_bounded(
    f: &FunctionVector,
    bound: usize,
) -> std::result::Result<MoveLog, NotRepresentable> {
    if let Extremal::NotRepresentable { matches } = strongly_extremal_column(f) {
        return Err(NotRepresentable::Column { step: 1, matches });
    }
    let mut search = Dfs {
        visited: HashSet::new(),
        explored: 0,
        bound,
        log: Vec::new(),
    };
    match search.run(f.clone()) {
        Some(true) => Ok(search.log),
        Some(false) => Err(NotRepresentable::DeadEnd { explored: search.explored }),
        None => Err(NotRepresentable::BoundExhausted { bound }),
    }
}

struct Dfs {
    visited: HashSet<FunctionVector>,
    explored: usize,
    bound: usize,
    log: MoveLog,
}

impl Dfs {
    /// `None` when the bound runs out.
    fn run(&mut self, f: FunctionVector) -> Option<bool> {
        let k = match strongly_extremal_column(&f) {
            Extremal::Empty => return Some(true),
            Extremal::Column { k } => k,
            Extremal::NotRepresentable { .. } => return Some(false),
        };
        if !self.visited.insert(f.clone()) {
            return Some(false);
        }
        for (j, parity) in quasi_extremal_neighbor(&f, k) {
            if self.explored == self.bound {
                return None;
            }
            self.explored += 1;
            let mv = Move { k, j, parity };
            self.log.push(mv);
            if self.run(&f - &mv.term(f.n()))? {
                return Some(true);
            }
            self.log.pop();
        }
        Some(false)
    }
}

/// Sum of the removed contributions: the function a log was taken from.
pub fn replay(log: &[Move], n: usize) -> FunctionVector {
    log.iter()
        .fold(FunctionVector::zero(n), |acc, mv| &acc + &mv.term(n))
}

/// `f` followed by the function left after each removal.
pub fn trace(f: &FunctionVector, log: &[Move]) -> Vec<FunctionVector> {
    let mut out = vec![f.clone()];
    for mv in log {
        let next = out.last().expect("non-empty") - &mv.term(f.n());
        out.push(next);
    }
    out
}

/// `c'_k = 0` at the strongly extremal `k`; `None` when there is no such `k`.
pub fn corollary_43_check(f: &FunctionVector) -> Option<bool> {
    match strongly_extremal_column(f) {
        Extremal::Column { k } => Some(f.get(k).is_zero()),
        _ => None,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "camelCase")]
pub enum Rebuild {
    Complete { profile: HeightProfile },
    /// `blocking` indexes the log entry that could not be re-added.
    Incomplete { partial: HeightProfile, blocking: usize },
}

/// Most blocks a single silent augmentation may add, over all columns.
pub const AUGMENT_LIMIT: u32 = 6;

/// Re-adds the removed blocks last-first. Before each block goes back, the
/// profile may first grow by a silent augmentation: any addition of up to
/// [`AUGMENT_LIMIT`] blocks that keeps it admissible and its function fixed.
pub fn rebuild_heights(log: &[Move], f: &FunctionVector) -> Result<Rebuild> {
    let n = f.n();
    if replay(log, n) != *f {
        return Err(Error::input(format!(
            "log {} does not replay to ({f})",
            log.iter().join(" ")
        )));
    }
    let mut h = HeightProfile::empty(n);
    let mut running = FunctionVector::zero(n);
    for (idx, mv) in log.iter().enumerate().rev() {
        let target = &running + &mv.term(n);
        match add_block(&h, &running, &target, mv.k + 1) {
            Some(next) => {
                h = next;
                running = target;
            }
            None => {
                return Ok(Rebuild::Incomplete {
                    partial: h,
                    blocking: idx,
                })
            }
        }
    }
    Ok(Rebuild::Complete { profile: h })
}

fn admissible_with(h: &HeightProfile, f: &FunctionVector) -> bool {
    validate_profile(h).is_empty() && evaluate_rows(h).is_ok_and(|g| g == *f)
}

fn add_block(
    start: &HeightProfile,
    current: &FunctionVector,
    target: &FunctionVector,
    col: usize,
) -> Option<HeightProfile> {
    let width = start.n() + 1;
    for total in 0..=AUGMENT_LIMIT {
        for extra in compositions(total, width) {
            let mut h = start.clone();
            for (c, e) in extra.iter().enumerate() {
                h.heights[c] += e;
            }
            if total > 0 && !admissible_with(&h, current) {
                continue;
            }
            let grown = h.with_added(col, 1);
            if admissible_with(&grown, target) {
                return Some(grown);
            }
        }
    }
    None
}

/// All ways to write `total` as an ordered sum of `parts` non-negative terms.
fn compositions(total: u32, parts: usize) -> Vec<Vec<u32>> {
    if parts == 1 {
        return vec![vec![total]];
    }
    let mut out = Vec::new();
    for first in (0..=total).rev() {
        for mut rest in compositions(total - first, parts - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hp(s: &str) -> HeightProfile {
        s.parse().unwrap()
    }

    fn fv(s: &str) -> FunctionVector {
        s.parse().unwrap()
    }

    fn mv(k: usize, j: usize, parity: Parity) -> Move {
        Move { k, j, parity }
    }

    use Parity::{Even, Odd};

    #[test]
    fn example_profiles_are_admissible() {
        assert!(validate_profile(&hp("3,2,1,3")).is_empty());
        assert!(validate_profile(&hp("2,1,2")).is_empty());
        assert!(validate_profile(&hp("0,0,0")).is_empty());
    }

    #[test]
    fn boundary_violation_detected() {
        let v = validate_profile(&hp("0,2,1,1"));
        assert!(v.contains(&ProfileViolation::Boundary { level: 2, column: 2 }), "{v:?}");
    }

    #[test]
    fn row_rule_examples() {
        assert_eq!(evaluate_rows(&hp("3,2,1,3")).unwrap(), fv("c1; c1+c2-c3; c1"));
        assert_eq!(evaluate_rows(&hp("2,1,2")).unwrap(), fv("c1-c2; 0"));
        assert_eq!(evaluate_rows(&hp("0,0,0,0")).unwrap(), FunctionVector::zero(3));
    }

    #[test]
    fn row_rule_reports_missing_partner() {
        assert_eq!(
            evaluate_rows(&hp("1,0,0")).unwrap_err(),
            Error::BoundaryViolation { row: 1, column: 1 }
        );
    }

    #[test]
    fn difference_rule_examples() {
        assert_eq!(evaluate_diffs(&hp("3,2,1,3")).unwrap(), fv("c1; c1+c2-c3; c1"));
        let d = column_differences(&hp("2,1,2"));
        assert_eq!(d, vec![fv("c1-c2").get(1).clone(), fv("c2-c1").get(1).clone(), LinearForm::zero()]);
        assert_eq!(evaluate_diffs(&hp("2,1,2")).unwrap(), fv("c1-c2; 0"));
        assert_eq!(evaluate_diffs(&hp("1,1")).unwrap(), fv("c1"));
    }

    #[test]
    fn relations_examples() {
        let pairs = |s: &str| order_relations(&hp(s)).pairs.into_iter().collect::<Vec<_>>();
        assert_eq!(pairs("2,1,2"), vec![(2, 1)]);
        assert_eq!(pairs("0,0,0"), vec![]);
        assert_eq!(pairs("3,2,1,3"), vec![(1, 3), (3, 2)]);
        let rel = order_relations(&hp("3,2,1,3"));
        assert!(rel.transitive_closure().contains(&(1, 2)));
        assert!(rel.embeds_in(&"1,3,2".parse().unwrap()));
        assert!(!rel.embeds_in(&"1,2,3".parse().unwrap()));
    }

    #[test]
    fn strongly_extremal_examples() {
        assert_eq!(strongly_extremal_column(&fv("c1; c1+c2-c3; c1")), Extremal::Column { k: 0 });
        assert_eq!(strongly_extremal_column(&fv("c1-c2; 0")), Extremal::Column { k: 2 });
        assert_eq!(
            strongly_extremal_column(&fv("c1; c1+c2")),
            Extremal::NotRepresentable { matches: vec![0, 1] }
        );
        assert_eq!(strongly_extremal_column(&fv("0; 0")), Extremal::Empty);
    }

    #[test]
    fn quasi_extremal_examples() {
        assert_eq!(quasi_extremal_neighbor(&fv("c1; c1+c2-c3; c1"), 0), vec![(3, Odd)]);
        assert_eq!(quasi_extremal_neighbor(&fv("c1-c2; 0"), 2), vec![(0, Even)]);
        assert_eq!(quasi_extremal_neighbor(&fv("0; c2; c3"), 1), vec![(2, Odd), (0, Even)]);
        for h in ["0,1,1,1", "2,2,1,1"] {
            assert_eq!(evaluate_rows(&hp(h)).unwrap(), fv("0; c2; c3"));
        }
    }

    #[test]
    fn deconstruct_example_one() {
        let f = fv("c1; c1+c2-c3; c1");
        let log = deconstruct(&f).unwrap();
        assert_eq!(log, vec![mv(0, 3, Odd), mv(3, 1, Even), mv(1, 2, Odd), mv(2, 3, Odd)]);
        let steps = trace(&f, &log);
        let expected = ["c1; c1+c2-c3; c1", "0; c2-c3; 0", "0; c2; c3", "0; 0; c3", "0; 0; 0"];
        assert_eq!(steps, expected.iter().map(|s| fv(s)).collect::<Vec<_>>());
        assert_eq!(replay(&log, 3), f);
    }

    #[test]
    fn deconstruct_example_two() {
        let f = fv("c1-c2; 0");
        let log = deconstruct(&f).unwrap();
        assert_eq!(log, vec![mv(2, 0, Even), mv(0, 1, Odd), mv(1, 2, Odd)]);
        let steps = trace(&f, &log);
        assert_eq!(steps[1], fv("c1; c2"));
        assert_eq!(steps[2], fv("0; c2"));
        assert_eq!(replay(&log, 2), f);
    }

    #[test]
    fn deconstruct_rejects_ambiguous_function() {
        assert_eq!(
            deconstruct(&fv("c1; c1+c2")).unwrap_err(),
            NotRepresentable::Column { step: 1, matches: vec![0, 1] }
        );
    }

    #[test]
    fn deconstruct_bound_is_reported() {
        let err = deconstruct_bounded(&fv("c1; c1+c2-c3; c1"), 2).unwrap_err();
        assert_eq!(err, NotRepresentable::BoundExhausted { bound: 2 });
    }

    #[test]
    fn corollary_examples() {
        assert_eq!(corollary_43_check(&fv("c1-c2; 0")), Some(true));
        assert_eq!(corollary_43_check(&fv("c1; c1+c2-c3; c1")), Some(true));
        assert_eq!(corollary_43_check(&fv("0; c2; c3")), Some(true));
        assert_eq!(corollary_43_check(&fv("c1; c1+c2")), None);
    }

    #[test]
    fn rebuild_single_move() {
        let f = fv("c1; c1");
        let log = deconstruct(&f).unwrap();
        assert_eq!(log, vec![mv(0, 2, Odd)]);
        assert_eq!(rebuild_heights(&log, &f).unwrap(), Rebuild::Complete { profile: hp("1,0,1") });
        assert!(rebuild_heights(&[mv(0, 1, Odd)], &f).is_err());
    }

    #[test]
    fn rebuild_example_two() {
        let f = fv("c1-c2; 0");
        let log = vec![mv(2, 0, Even), mv(0, 1, Odd), mv(1, 2, Odd)];
        let Rebuild::Complete { profile } = rebuild_heights(&log, &f).unwrap() else {
            panic!("incomplete");
        };
        assert_eq!(evaluate_rows(&profile).unwrap(), f);
        assert!(validate_profile(&profile).is_empty());
    }

    #[test]
    fn rebuild_empty() {
        assert_eq!(
            rebuild_heights(&[], &FunctionVector::zero(2)).unwrap(),
            Rebuild::Complete { profile: hp("0,0,0") }
        );
    }

    #[test]
    fn move_log_json() {
        let json = serde_json::to_string(&vec![mv(2, 0, Even)]).unwrap();
        assert_eq!(json, r#"[{"k":2,"j":0,"parity":"even"}]"#);
    }
}
