//! Coefficient orders `s_1 < s_2 < ... < s_n` (written `≺` below), numeric
//! coefficient vectors, and the deterministic coefficient sampler.

use std::fmt;
use std::ops::Deref;
use std::str::FromStr;

use itertools::Itertools;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactmath::{format_rational, int, parse_rational, Rational};

/// A linear order on `{1..n}`, stored as its increasing enumeration
/// `(s_1, ..., s_n)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct CoeffOrder {
    seq: Vec<usize>,
    rank: Vec<usize>,
}

impl CoeffOrder {
    pub fn new(seq: Vec<usize>) -> Result<Self> {
        let n = seq.len();
        let mut rank = vec![usize::MAX; n];
        for (pos, &s) in seq.iter().enumerate() {
            if !(1..=n).contains(&s) || rank[s - 1] != usize::MAX {
                return Err(Error::input(format!(
                    "order {seq:?} is not a permutation of 1..={n}"
                )));
            }
            rank[s - 1] = pos;
        }
        Ok(Self { seq, rank })
    }

    /// `1 ≺ 2 ≺ ... ≺ n`.
    pub fn natural(n: usize) -> Self {
        Self::new((1..=n).collect()).expect("identity permutation")
    }

    /// All `n!` orders in lexicographic order of `seq`.
    pub fn all(n: usize) -> impl Iterator<Item = CoeffOrder> {
        (1..=n)
            .permutations(n)
            .map(|p| CoeffOrder::new(p).expect("permutation"))
    }

    pub fn n(&self) -> usize {
        self.seq.len()
    }

    pub fn seq(&self) -> &[usize] {
        &self.seq
    }

    /// Position of `i` in the order, 0-based.
    pub fn rank(&self, i: usize) -> usize {
        self.rank[i - 1]
    }

    pub fn precedes(&self, a: usize, b: usize) -> bool {
        self.rank(a) < self.rank(b)
    }

    /// `≺`-maximal element `s_n`, if `n > 0`.
    pub fn top(&self) -> Option<usize> {
        self.seq.last().copied()
    }

    /// `N_k = {s_1, ..., s_k}` listed in the natural order of integers.
    pub fn sorted_chain(&self, k: usize) -> Vec<usize> {
        assert!(k <= self.n(), "chain length {k} exceeds n = {}", self.n());
        let mut chain = self.seq[..k].to_vec();
        chain.sort_unstable();
        chain
    }

    pub fn compatible(&self, c: &NumericCoeffs) -> Result<bool> {
        if c.len() != self.n() {
            return Err(Error::input(format!(
                "order has n = {} but {} coefficients were given",
                self.n(),
                c.len()
            )));
        }
        Ok(self
            .seq
            .iter()
            .tuple_windows()
            .all(|(&a, &b)| c[a - 1] <= c[b - 1]))
    }

    pub(crate) fn require_compatible(&self, c: &NumericCoeffs) -> Result<()> {
        if self.compatible(c)? {
            Ok(())
        } else {
            Err(Error::input(format!(
                "coefficients ({c}) are not compatible with order {self}"
            )))
        }
    }
}

impl TryFrom<Vec<usize>> for CoeffOrder {
    type Error = Error;
    fn try_from(seq: Vec<usize>) -> Result<Self> {
        Self::new(seq)
    }
}

impl From<CoeffOrder> for Vec<usize> {
    fn from(o: CoeffOrder) -> Self {
        o.seq
    }
}

impl fmt::Display for CoeffOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.seq.iter().join(","))
    }
}

/// `1,3,2` means `s_1 = 1 ≺ s_2 = 3 ≺ s_3 = 2`.
impl FromStr for CoeffOrder {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        if s.trim().is_empty() {
            return Self::new(Vec::new());
        }
        let seq = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::parse("order", format!("bad entry {t:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(seq)
    }
}

/// Non-negative numeric coefficients `(c_1, ..., c_n)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct NumericCoeffs {
    #[serde(with = "crate::exactmath::serde_rational_vec")]
    values: Vec<Rational>,
}

impl NumericCoeffs {
    pub fn new(values: Vec<Rational>) -> Result<Self> {
        if let Some(bad) = values.iter().find(|v| v.is_negative()) {
            return Err(Error::input(format!(
                "coefficients must be non-negative, got {}",
                format_rational(bad)
            )));
        }
        Ok(Self { values })
    }

    pub fn from_ints(values: &[i64]) -> Result<Self> {
        Self::new(values.iter().map(|&v| int(v)).collect())
    }

    /// `c_k` with the conventions `c_0 = c_{n+1} = 0`.
    pub fn get(&self, k: usize) -> Rational {
        if k == 0 || k > self.values.len() {
            Rational::zero()
        } else {
            self.values[k - 1].clone()
        }
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }
}

impl Deref for NumericCoeffs {
    type Target = [Rational];
    fn deref(&self) -> &[Rational] {
        &self.values
    }
}

impl fmt::Display for NumericCoeffs {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.values.iter().map(format_rational).join(","))
    }
}

impl FromStr for NumericCoeffs {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        if s.trim().is_empty() {
            return Self::new(Vec::new());
        }
        Self::new(s.split(',').map(parse_rational).collect::<Result<Vec<_>>>()?)
    }
}

/// Shape of sampled coefficients.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Profile {
    /// Pairwise distinct positive integers.
    Generic,
    /// At least one repeated value (when `n >= 2`).
    Ties,
    /// `c_{s_1} = 0`.
    Zeros,
}

impl Profile {
    pub const ALL: [Profile; 3] = [Profile::Generic, Profile::Ties, Profile::Zeros];
}

impl fmt::Display for Profile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Profile::Generic => "generic",
            Profile::Ties => "ties",
            Profile::Zeros => "zeros",
        })
    }
}

impl FromStr for Profile {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "generic" => Ok(Profile::Generic),
            "ties" => Ok(Profile::Ties),
            "zeros" => Ok(Profile::Zeros),
            other => Err(Error::parse("profile", format!("unknown profile {other:?}"))),
        }
    }
}

/// 64-bit LCG, `state <- state * 6364136223846793005 + 1442695040888963407 (mod 2^64)`.
#[derive(Clone, Debug)]
pub struct Lcg64 {
    state: u64,
}

impl Lcg64 {
    pub const MULTIPLIER: u64 = 6364136223846793005;
    pub const INCREMENT: u64 = 1442695040888963407;

    pub fn new(seed: u64) -> Self {
        Self { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self
            .state
            .wrapping_mul(Self::MULTIPLIER)
            .wrapping_add(Self::INCREMENT);
        self.state
    }

    /// Uniform-ish draw from `0..bound` using the high bits of the next state.
    pub fn below(&mut self, bound: u64) -> u64 {
        (self.next_u64() >> 33) % bound
    }

    /// A draw from `1..=1000`.
    pub fn draw_value(&mut self) -> u64 {
        1 + self.below(1000)
    }
}

/// Samples coefficients compatible with `order`.
///
/// Draws `n` values in `[1, 1000]` (distinct for [`Profile::Generic`]), sorts
/// them ascending and assigns them to `s_1, ..., s_n`. [`Profile::Ties`] then
/// copies one sorted value onto its successor and [`Profile::Zeros`] sets the
/// smallest value to zero.
pub fn sample_coeffs(order: &CoeffOrder, seed: u64, profile: Profile) -> NumericCoeffs {
    let n = order.n();
    let mut rng = Lcg64::new(seed);
    let mut drawn: Vec<u64> = Vec::with_capacity(n);
    while drawn.len() < n {
        let v = rng.draw_value();
        if profile == Profile::Generic && drawn.contains(&v) {
            continue;
        }
        drawn.push(v);
    }
    drawn.sort_unstable();
    match profile {
        Profile::Generic => {}
        Profile::Ties => {
            if n >= 2 {
                let i = 1 + rng.below(n as u64 - 1) as usize;
                drawn[i] = drawn[i - 1];
            }
        }
        Profile::Zeros => {
            if n >= 1 {
                drawn[0] = 0;
            }
        }
    }
    let mut values = vec![Rational::zero(); n];
    for (pos, &s) in order.seq().iter().enumerate() {
        values[s - 1] = int(drawn[pos] as i64);
    }
    NumericCoeffs::new(values).expect("sampled values are non-negative")
}
