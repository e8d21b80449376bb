//! The polytope `K(c)` and its variants, exact vertex enumeration, and the
//! comparison of its vertex set with the evaluated `Z(c)`.

use std::collections::{BTreeSet, HashMap, HashSet};
use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exactmath::{format_rational, serde_rational, serde_rational_vec, serde_rational_vecs, Rational};
use crate::fusion::{build_sgraph, numeric_zset};
use crate::lp;
use crate::orders::{CoeffOrder, NumericCoeffs};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub enum Variant {
    /// Chain inequalities between consecutive members of every `N_k`.
    Three,
    /// Only the two chain inequalities adjacent to the newly added `s_k`.
    ThreePrime,
    /// `x_r - x_s >= min{0, c_r - c_s}` for every pair `r > s`.
    ThreeDoublePrime,
}

impl Variant {
    pub const ALL: [Variant; 3] = [Variant::Three, Variant::ThreePrime, Variant::ThreeDoublePrime];
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Variant::Three => "3",
            Variant::ThreePrime => "3p",
            Variant::ThreeDoublePrime => "3pp",
        })
    }
}

impl FromStr for Variant {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "3" | "three" => Ok(Variant::Three),
            "3p" | "threePrime" => Ok(Variant::ThreePrime),
            "3pp" | "threeDoublePrime" => Ok(Variant::ThreeDoublePrime),
            other => Err(Error::parse("variant", format!("{other:?} (expected 3, 3p or 3pp)"))),
        }
    }
}

/// The rule that generated an inequality.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Provenance {
    /// `x_k >= 0`.
    Lower(usize),
    /// `-x_k >= -c_k`.
    Upper(usize),
    /// Consecutive pair `(t_i, t_{i+1})` of the sorted chain `N_k`.
    Chain { k: usize, i: usize },
    /// Pair `(t_j, t_{j+1})` where `t_j = s_k`.
    PrimeAbove { k: usize },
    /// Pair `(t_{j-1}, t_j)` where `t_j = s_k`.
    PrimeBelow { k: usize },
    /// Pair `r > s`.
    Pair { r: usize, s: usize },
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Provenance::Lower(k) => write!(f, "lower:{k}"),
            Provenance::Upper(k) => write!(f, "upper:{k}"),
            Provenance::Chain { k, i } => write!(f, "chain:k={k},i={i}"),
            Provenance::PrimeAbove { k } => write!(f, "prime-above:k={k}"),
            Provenance::PrimeBelow { k } => write!(f, "prime-below:k={k}"),
            Provenance::Pair { r, s } => write!(f, "pair:r={r},s={s}"),
        }
    }
}

impl Serialize for Provenance {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// `normal · x >= rhs`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AffineInequality {
    #[serde(with = "serde_rational_vec")]
    pub normal: Vec<Rational>,
    #[serde(serialize_with = "serde_rational::serialize")]
    pub rhs: Rational,
    pub provenance: Vec<Provenance>,
}

impl AffineInequality {
    pub fn holds_at(&self, p: &[Rational]) -> bool {
        let lhs: Rational = self.normal.iter().zip(p).map(|(a, x)| a * x).sum();
        lhs >= self.rhs
    }
}

impl fmt::Display for AffineInequality {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, a) in self.normal.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let sign = if a.is_negative() { "-" } else if first { "" } else { "+" };
            let mag = a.abs();
            if mag.is_one() {
                write!(f, "{sign}x{}", i + 1)?;
            } else {
                write!(f, "{sign}{}*x{}", format_rational(&mag), i + 1)?;
            }
            first = false;
        }
        write!(f, " >= {}", format_rational(&self.rhs))
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct InequalitySystem {
    pub n: usize,
    pub variant: Variant,
    pub inequalities: Vec<AffineInequality>,
}

#[derive(Default)]
struct SystemBuilder {
    n: usize,
    rows: Vec<AffineInequality>,
    index: HashMap<(Vec<Rational>, Rational), usize>,
}

impl SystemBuilder {
    fn push(&mut self, normal: Vec<Rational>, rhs: Rational, tag: Provenance) {
        debug_assert!(normal.iter().any(|a| !a.is_zero()));
        let key = (normal, rhs);
        if let Some(&at) = self.index.get(&key) {
            self.rows[at].provenance.push(tag);
            return;
        }
        self.index.insert(key.clone(), self.rows.len());
        self.rows.push(AffineInequality {
            normal: key.0,
            rhs: key.1,
            provenance: vec![tag],
        });
    }

    /// `x_hi - x_lo >= rhs`.
    fn difference(&mut self, hi: usize, lo: usize, rhs: Rational, tag: Provenance) {
        let mut normal = vec![Rational::zero(); self.n];
        normal[hi - 1] = Rational::one();
        normal[lo - 1] = -Rational::one();
        self.push(normal, rhs, tag);
    }
}

fn min0(q: Rational) -> Rational {
    if q.is_negative() {
        q
    } else {
        Rational::zero()
    }
}

/// The box `0 <= x_k <= c_k` together with the chain inequalities of the
/// chosen variant, evaluated at `c`.
pub fn build_system(order: &CoeffOrder, c: &NumericCoeffs, variant: Variant) -> Result<InequalitySystem> {
    order.require_compatible(c)?;
    let n = order.n();
    let mut b = SystemBuilder {
        n,
        ..SystemBuilder::default()
    };
    for k in 1..=n {
        let mut e = vec![Rational::zero(); n];
        e[k - 1] = Rational::one();
        b.push(e.clone(), Rational::zero(), Provenance::Lower(k));
        e[k - 1] = -Rational::one();
        b.push(e, -c.get(k), Provenance::Upper(k));
    }
    match variant {
        Variant::Three => {
            for k in 1..=n {
                for (i, (&lo, &hi)) in order.sorted_chain(k).iter().tuple_windows().enumerate() {
                    b.difference(hi, lo, min0(c.get(hi) - c.get(lo)), Provenance::Chain { k, i: i + 1 });
                }
            }
        }
        Variant::ThreePrime => {
            for k in 1..=n {
                let chain = order.sorted_chain(k);
                let s = order.seq()[k - 1];
                let j = chain.iter().position(|&t| t == s).expect("s_k in N_k");
                if let Some(&above) = chain.get(j + 1) {
                    b.difference(above, s, -(c.get(s) - c.get(above)), Provenance::PrimeAbove { k });
                }
                if j > 0 {
                    b.difference(s, chain[j - 1], Rational::zero(), Provenance::PrimeBelow { k });
                }
            }
        }
        Variant::ThreeDoublePrime => {
            for s in 1..=n {
                for r in s + 1..=n {
                    b.difference(r, s, min0(c.get(r) - c.get(s)), Provenance::Pair { r, s });
                }
            }
        }
    }
    Ok(InequalitySystem {
        n,
        variant,
        inequalities: b.rows,
    })
}

impl InequalitySystem {
    /// The system with every provenance tag rejected by `keep` removed;
    /// inequalities left without tags are dropped.
    pub fn retain_rules(&self, keep: impl Fn(&Provenance) -> bool) -> InequalitySystem {
        let inequalities = self
            .inequalities
            .iter()
            .filter_map(|ineq| {
                let provenance: Vec<Provenance> =
                    ineq.provenance.iter().copied().filter(|p| keep(p)).collect();
                (!provenance.is_empty()).then(|| AffineInequality {
                    provenance,
                    ..ineq.clone()
                })
            })
            .collect();
        InequalitySystem {
            n: self.n,
            variant: self.variant,
            inequalities,
        }
    }
}

/// Whether every inequality holds at `p`.
pub fn contains(sys: &InequalitySystem, p: &[Rational]) -> Result<bool> {
    if p.len() != sys.n {
        return Err(Error::input(format!(
            "point has dimension {}, system has {}",
            p.len(),
            sys.n
        )));
    }
    Ok(sys.inequalities.iter().all(|ineq| ineq.holds_at(p)))
}

pub type Point = Vec<Rational>;

/// Extreme points of a bounded system: every `n`-subset of inequalities with
/// an invertible normal matrix is solved as equalities and kept when the
/// solution satisfies the whole system.
///
/// Subsets are solved with fraction-free integer determinants; any subset
/// that would overflow `i128` is re-solved over the big rationals.
pub fn enumerate_vertices(sys: &InequalitySystem) -> BTreeSet<Point> {
    match IntegerRows::from_system(sys) {
        Some(rows) => rows.enumerate(sys),
        None => enumerate_vertices_exact(sys),
    }
}

/// Same result as [`enumerate_vertices`], solving every subset over the big
/// rationals. Slow; used as an oracle.
pub fn enumerate_vertices_exact(sys: &InequalitySystem) -> BTreeSet<Point> {
    let n = sys.n;
    let mut out = BTreeSet::new();
    if n == 0 {
        out.insert(Vec::new());
        return out;
    }
    for subset in (0..sys.inequalities.len()).combinations(n) {
        if let Some(p) = solve_subset_exact(sys, &subset) {
            if sys.inequalities.iter().all(|ineq| ineq.holds_at(&p)) {
                out.insert(p);
            }
        }
    }
    out
}

fn solve_subset_exact(sys: &InequalitySystem, subset: &[usize]) -> Option<Point> {
    let n = sys.n;
    let mut m: Vec<Vec<Rational>> = subset
        .iter()
        .map(|&i| {
            let ineq = &sys.inequalities[i];
            let mut row = ineq.normal.clone();
            row.push(ineq.rhs.clone());
            row
        })
        .collect();
    for col in 0..n {
        let piv = (col..n).find(|&r| !m[r][col].is_zero())?;
        m.swap(col, piv);
        let inv = m[col][col].recip();
        for v in m[col].iter_mut() {
            *v *= &inv;
        }
        let pivot_row = m[col].clone();
        for (r, row) in m.iter_mut().enumerate() {
            if r != col && !row[col].is_zero() {
                let f = row[col].clone();
                for (v, p) in row.iter_mut().zip(&pivot_row) {
                    *v -= &f * p;
                }
            }
        }
    }
    Some(m.into_iter().map(|mut row| row.pop().expect("augmented")).collect())
}

/// The system scaled row-wise to integers that fit in `i128`.
struct IntegerRows {
    n: usize,
    normals: Vec<Vec<i128>>,
    rhs: Vec<i128>,
}

impl IntegerRows {
    fn from_system(sys: &InequalitySystem) -> Option<Self> {
        let mut normals = Vec::with_capacity(sys.inequalities.len());
        let mut rhs = Vec::with_capacity(sys.inequalities.len());
        for ineq in &sys.inequalities {
            let scale = ineq
                .normal
                .iter()
                .chain(std::iter::once(&ineq.rhs))
                .fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
            let to_int = |q: &Rational| -> Option<i128> {
                (q.numer() * (&scale / q.denom())).to_i128()
            };
            normals.push(ineq.normal.iter().map(to_int).collect::<Option<Vec<_>>>()?);
            rhs.push(to_int(&ineq.rhs)?);
        }
        Some(Self { n: sys.n, normals, rhs })
    }

    fn enumerate(&self, sys: &InequalitySystem) -> BTreeSet<Point> {
        let n = self.n;
        let mut out = BTreeSet::new();
        if n == 0 {
            out.insert(Vec::new());
            return out;
        }
        let mut seen: HashSet<Vec<(i128, i128)>> = HashSet::new();
        let mut scratch = vec![0i128; n * n];
        for subset in (0..self.normals.len()).combinations(n) {
            match self.solve(&subset, &mut scratch) {
                Some(Solved::Singular) => {}
                Some(Solved::Point { nums, det }) => {
                    if !self.feasible(&nums, det) {
                        continue;
                    }
                    let key: Vec<(i128, i128)> = nums.iter().map(|&p| reduce(p, det)).collect();
                    if seen.insert(key.clone()) {
                        out.insert(
                            key.into_iter()
                                .map(|(p, q)| Rational::new(p.into(), q.into()))
                                .collect(),
                        );
                    }
                }
                None => {
                    if let Some(p) = solve_subset_exact(sys, &subset) {
                        if sys.inequalities.iter().all(|ineq| ineq.holds_at(&p)) {
                            out.insert(p);
                        }
                    }
                }
            }
        }
        out
    }

    /// Cramer's rule; `None` on overflow.
    fn solve(&self, subset: &[usize], scratch: &mut [i128]) -> Option<Solved> {
        let n = self.n;
        let load = |scratch: &mut [i128], replace: Option<usize>| {
            for (r, &i) in subset.iter().enumerate() {
                for c in 0..n {
                    scratch[r * n + c] = if Some(c) == replace {
                        self.rhs[i]
                    } else {
                        self.normals[i][c]
                    };
                }
            }
        };
        load(scratch, None);
        let det = bareiss(scratch, n)?;
        if det == 0 {
            return Some(Solved::Singular);
        }
        let mut nums = Vec::with_capacity(n);
        for c in 0..n {
            load(scratch, Some(c));
            nums.push(bareiss(scratch, n)?);
        }
        Some(Solved::Point { nums, det })
    }

    /// `a · (nums / det) >= b` for every row, without dividing.
    fn feasible(&self, nums: &[i128], det: i128) -> bool {
        let sign = det.signum();
        self.normals.iter().zip(&self.rhs).all(|(a, &b)| {
            let mut acc: i128 = 0;
            for (&ai, &xi) in a.iter().zip(nums) {
                if ai != 0 {
                    acc = match ai.checked_mul(xi).and_then(|t| acc.checked_add(t)) {
                        Some(v) => v,
                        None => return feasible_big(a, b, nums, det),
                    };
                }
            }
            match b.checked_mul(det).and_then(|bd| acc.checked_sub(bd)) {
                Some(v) => v * sign >= 0,
                None => feasible_big(a, b, nums, det),
            }
        })
    }
}

fn feasible_big(a: &[i128], b: i128, nums: &[i128], det: i128) -> bool {
    let acc: BigInt = a.iter().zip(nums).map(|(&ai, &xi)| BigInt::from(ai) * xi).sum();
    let v = (acc - BigInt::from(b) * det) * det.signum();
    !v.is_negative()
}

enum Solved {
    Singular,
    Point { nums: Vec<i128>, det: i128 },
}

fn reduce(p: i128, q: i128) -> (i128, i128) {
    let g = p.gcd(&q);
    let (p, q) = (p / g, q / g);
    if q < 0 {
        (-p, -q)
    } else {
        (p, q)
    }
}

/// Fraction-free elimination; destroys `m`. `None` on overflow.
fn bareiss(m: &mut [i128], n: usize) -> Option<i128> {
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n {
        if m[k * n + k] == 0 {
            let Some(r) = (k + 1..n).find(|&r| m[r * n + k] != 0) else {
                return Some(0);
            };
            for c in 0..n {
                m.swap(k * n + c, r * n + c);
            }
            sign = -sign;
        }
        let pivot = m[k * n + k];
        for i in k + 1..n {
            let lead = m[i * n + k];
            for j in k + 1..n {
                let v = m[i * n + j]
                    .checked_mul(pivot)?
                    .checked_sub(lead.checked_mul(m[k * n + j])?)?;
                m[i * n + j] = v / prev;
            }
        }
        prev = pivot;
    }
    Some(sign * m[(n - 1) * n + (n - 1)])
}

/// Whether `p` is not a convex combination of the other points.
pub fn is_extreme_point(points: &BTreeSet<Point>, p: &[Rational]) -> bool {
    let others: Vec<Point> = points.iter().filter(|q| q.as_slice() != p).cloned().collect();
    !lp::in_convex_hull(&others, p)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub enum SystemComparison {
    Equal,
    AStrictlyInsideB,
    BStrictlyInsideA,
    Incomparable,
}

/// Compares two bounded systems by mutual containment of their vertices.
pub fn compare_systems(a: &InequalitySystem, b: &InequalitySystem) -> Result<SystemComparison> {
    if a.n != b.n {
        return Err(Error::input(format!("dimensions {} and {} differ", a.n, b.n)));
    }
    let a_in_b = enumerate_vertices(a).iter().all(|p| b.inequalities.iter().all(|i| i.holds_at(p)));
    let b_in_a = enumerate_vertices(b).iter().all(|p| a.inequalities.iter().all(|i| i.holds_at(p)));
    Ok(match (a_in_b, b_in_a) {
        (true, true) => SystemComparison::Equal,
        (true, false) => SystemComparison::AStrictlyInsideB,
        (false, true) => SystemComparison::BStrictlyInsideA,
        (false, false) => SystemComparison::Incomparable,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct TheoremReport {
    pub order: CoeffOrder,
    pub coeffs: NumericCoeffs,
    pub passed: bool,
    #[serde(serialize_with = "serde_rational_vecs::serialize")]
    pub polytope_vertices: Vec<Point>,
    #[serde(serialize_with = "serde_rational_vecs::serialize")]
    pub zset_points: Vec<Point>,
    #[serde(serialize_with = "serde_rational_vecs::serialize")]
    pub only_in_polytope: Vec<Point>,
    #[serde(serialize_with = "serde_rational_vecs::serialize")]
    pub only_in_zset: Vec<Point>,
}

/// Compares the vertices of `K(c)` with the evaluated, deduplicated `Z(c)`.
pub fn verify_theorem(order: &CoeffOrder, c: &NumericCoeffs) -> Result<TheoremReport> {
    let sys = build_system(order, c, Variant::Three)?;
    let vertices = enumerate_vertices(&sys);
    let z = numeric_zset(&build_sgraph(order), c)?;
    let only_in_polytope: Vec<Point> = vertices.difference(&z).cloned().collect();
    let only_in_zset: Vec<Point> = z.difference(&vertices).cloned().collect();
    Ok(TheoremReport {
        order: order.clone(),
        coeffs: c.clone(),
        passed: only_in_polytope.is_empty() && only_in_zset.is_empty(),
        polytope_vertices: vertices.into_iter().collect(),
        zset_points: z.into_iter().collect(),
        only_in_polytope,
        only_in_zset,
    })
}

/// JSON document for a system and its vertices.
#[derive(Clone, Debug, Serialize)]
pub struct PolytopeDocument<'a> {
    pub variant: Variant,
    pub inequalities: &'a [AffineInequality],
    #[serde(serialize_with = "serde_rational_vecs::serialize")]
    pub vertices: Vec<Point>,
}

impl<'a> PolytopeDocument<'a> {
    pub fn new(sys: &'a InequalitySystem, vertices: &BTreeSet<Point>) -> Self {
        Self {
            variant: sys.variant,
            inequalities: &sys.inequalities,
            vertices: vertices.iter().cloned().collect(),
        }
    }
}

/// Header `x1,...,xn`, then one row per vertex.
pub fn vertices_csv(n: usize, vertices: &BTreeSet<Point>) -> String {
    let mut out = (1..=n).map(|k| format!("x{k}")).join(",");
    out.push('\n');
    for p in vertices {
        out.push_str(&p.iter().map(format_rational).join(","));
        out.push('\n');
    }
    out
}
