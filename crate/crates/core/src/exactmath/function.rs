use std::fmt;
use std::ops::{Add, Sub};
use std::str::FromStr;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::form::{LinearForm, ZERO_FORM};
use super::rational::Rational;
use crate::error::{Error, Result};

/// The coordinates `(c'_1, ..., c'_n)` of a function
/// `sum_k c'_k (r^k - r^{k+1})`, i.e. of `sum_k c'_k x_k`.
///
/// Accessors are 1-based. Slots `0` and `n + 1` read as zero and are never
/// stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct FunctionVector {
    coords: Vec<LinearForm>,
}

impl FunctionVector {
    pub fn zero(n: usize) -> Self {
        Self {
            coords: vec![LinearForm::zero(); n],
        }
    }

    pub fn from_coords(coords: Vec<LinearForm>) -> Self {
        Self { coords }
    }

    pub fn n(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[LinearForm] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(LinearForm::is_zero)
    }

    /// `c'_k` for `k` in `0..=n+1`; the two boundary slots are zero.
    pub fn get(&self, k: usize) -> &LinearForm {
        if k == 0 || k > self.coords.len() {
            &ZERO_FORM
        } else {
            &self.coords[k - 1]
        }
    }

    /// Sets `c'_k`, `1 <= k <= n`.
    pub fn set(&mut self, k: usize, form: LinearForm) {
        assert!(
            (1..=self.coords.len()).contains(&k),
            "slot {k} outside 1..={}",
            self.coords.len()
        );
        self.coords[k - 1] = form;
    }

    /// `weight * (r^a - r^b)` written in the `x_k = r^k - r^{k+1}` basis, for
    /// `1 <= a, b <= n + 1`.
    pub fn r_difference(n: usize, a: usize, b: usize, weight: &LinearForm) -> Self {
        assert!(
            (1..=n + 1).contains(&a) && (1..=n + 1).contains(&b),
            "r-index out of range 1..={}",
            n + 1
        );
        let mut out = Self::zero(n);
        let (lo, hi, w) = if a <= b {
            (a, b, weight.clone())
        } else {
            (b, a, -weight)
        };
        for k in lo..hi {
            out.coords[k - 1] = w.clone();
        }
        out
    }

    /// Numeric coordinates under `c_i := values[i - 1]`.
    pub fn evaluate(&self, values: &[Rational]) -> Result<Vec<Rational>> {
        self.coords.iter().map(|f| f.evaluate(values)).collect()
    }

    /// `sum_k value(c'_k) * (b_k - b_{k+1})` where `b` lists `r^1(b), ..., r^{n+1}(b)`.
    pub fn evaluate_at(&self, values: &[Rational], b: &[Rational]) -> Result<Rational> {
        if b.len() != self.n() + 1 {
            return Err(Error::input(format!(
                "evaluation point has {} entries, expected {}",
                b.len(),
                self.n() + 1
            )));
        }
        let mut acc = Rational::zero();
        for (k, form) in self.coords.iter().enumerate() {
            acc += form.evaluate(values)? * (&b[k] - &b[k + 1]);
        }
        Ok(acc)
    }

    /// Highest indeterminate index appearing anywhere.
    pub fn max_index(&self) -> Option<usize> {
        self.coords.iter().filter_map(LinearForm::max_index).max()
    }
}

impl Add<&FunctionVector> for &FunctionVector {
    type Output = FunctionVector;
    fn add(self, rhs: &FunctionVector) -> FunctionVector {
        assert_eq!(self.n(), rhs.n(), "dimension mismatch");
        FunctionVector {
            coords: self.coords.iter().zip(&rhs.coords).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub<&FunctionVector> for &FunctionVector {
    type Output = FunctionVector;
    fn sub(self, rhs: &FunctionVector) -> FunctionVector {
        assert_eq!(self.n(), rhs.n(), "dimension mismatch");
        FunctionVector {
            coords: self.coords.iter().zip(&rhs.coords).map(|(a, b)| a - b).collect(),
        }
    }
}

/// Semicolon-separated forms: `c1; c1+c2-c3; c1`.
impl fmt::Display for FunctionVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, form) in self.coords.iter().enumerate() {
            if i > 0 {
                f.write_str("; ")?;
            }
            write!(f, "{form}")?;
        }
        Ok(())
    }
}

impl FromStr for FunctionVector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s.trim().is_empty() {
            return Ok(Self::zero(0));
        }
        let coords = s
            .split(';')
            .map(str::parse)
            .collect::<Result<Vec<LinearForm>>>()?;
        Ok(Self { coords })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::int;
    use proptest::prelude::*;

    fn c(i: usize) -> LinearForm {
        LinearForm::var(i)
    }

    fn fv(s: &str) -> FunctionVector {
        s.parse().unwrap()
    }

    #[test]
    fn telescoping_examples() {
        assert_eq!(FunctionVector::r_difference(3, 1, 4, &c(1)), fv("c1; c1; c1"));
        assert_eq!(FunctionVector::r_difference(3, 3, 3, &c(2)), FunctionVector::zero(3));
        assert_eq!(FunctionVector::r_difference(3, 4, 2, &c(3)), fv("0; -c3; -c3"));
    }

    #[test]
    fn boundary_slots_read_zero() {
        let f = fv("c1; c2");
        assert!(f.get(0).is_zero());
        assert!(f.get(3).is_zero());
        assert_eq!(f.get(2), &c(2));
    }

    #[test]
    fn evaluate_at_examples() {
        let f = fv("c1");
        assert_eq!(f.evaluate_at(&[int(1)], &[int(1), int(0)]).unwrap(), int(1));
        let z = FunctionVector::zero(2);
        assert_eq!(z.evaluate_at(&[int(3), int(5)], &[int(7), int(-2), int(9)]).unwrap(), int(0));
        let g = fv("c1; c1");
        assert_eq!(g.evaluate_at(&[int(1), int(2)], &[int(2), int(1), int(0)]).unwrap(), int(2));
    }

    #[test]
    fn text_and_json_formats() {
        let f = fv("c1; c1+c2-c3; c1");
        assert_eq!(f.to_string(), "c1; c1+c2-c3; c1");
        let json = serde_json::to_string(&fv("c1; 0")).unwrap();
        assert_eq!(json, r#"[{"c1":"1"},{}]"#);
        let back: FunctionVector = serde_json::from_str(&json).unwrap();
        assert_eq!(back, fv("c1; 0"));
    }

    proptest! {
        #[test]
        fn r_difference_is_additive(n in 1usize..7, picks in prop::collection::vec(1usize..8, 3), w in 1usize..5) {
            let mut idx: Vec<usize> = picks.iter().map(|p| 1 + (p - 1) % (n + 1)).collect();
            idx.sort();
            let (a, b, cc) = (idx[0], idx[1], idx[2]);
            let weight = c(w);
            let whole = FunctionVector::r_difference(n, a, cc, &weight);
            let split = &FunctionVector::r_difference(n, a, b, &weight)
                + &FunctionVector::r_difference(n, b, cc, &weight);
            prop_assert_eq!(whole, split);
        }

        #[test]
        fn evaluation_is_a_ring_homomorphism(
            a in prop::collection::vec(-5i64..6, 4),
            b in prop::collection::vec(-5i64..6, 4),
            vals in prop::collection::vec(-20i64..21, 4),
            q in -4i64..5,
        ) {
            let form = |v: &[i64]| v.iter().enumerate().fold(LinearForm::zero(), |acc, (i, &k)| {
                acc + LinearForm::term(i + 1, int(k))
            });
            let (fa, fb) = (form(&a), form(&b));
            let vals: Vec<Rational> = vals.into_iter().map(int).collect();
            let ea = fa.evaluate(&vals).unwrap();
            let eb = fb.evaluate(&vals).unwrap();
            prop_assert_eq!((&fa + &fb).evaluate(&vals).unwrap(), &ea + &eb);
            prop_assert_eq!((&fa - &fb).evaluate(&vals).unwrap(), &ea - &eb);
            prop_assert_eq!(fa.scale(&int(q)).evaluate(&vals).unwrap(), ea * int(q));
        }
    }
}
