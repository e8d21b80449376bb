use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::rational::{format_rational, parse_rational, Rational};
use crate::error::{Error, Result};

/// A homogeneous degree-one form `sum_i q_i c_i` over the indeterminates
/// `c_1, c_2, ...` (indices are 1-based).
///
/// Zero coefficients are never stored, so derived equality is mathematical
/// equality and the zero form has an empty map.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LinearForm {
    coeffs: BTreeMap<usize, Rational>,
}

pub(crate) static ZERO_FORM: LinearForm = LinearForm {
    coeffs: BTreeMap::new(),
};

impl LinearForm {
    pub fn zero() -> Self {
        Self::default()
    }

    /// The indeterminate `c_i`.
    pub fn var(i: usize) -> Self {
        Self::term(i, Rational::one())
    }

    /// `q * c_i`. Index 0 is reserved for the convention `c_0 = 0` and is
    /// rejected by a panic, as is any other out-of-band index.
    pub fn term(i: usize, q: Rational) -> Self {
        assert!(i >= 1, "indeterminates are 1-based");
        let mut coeffs = BTreeMap::new();
        if !q.is_zero() {
            coeffs.insert(i, q);
        }
        Self { coeffs }
    }

    /// `c_i`, or the zero form when `i` is outside `1..=n` (the `c_0 = 0` and
    /// `c_{n+1} = 0` conventions).
    pub fn coeff_var(i: usize, n: usize) -> Self {
        if (1..=n).contains(&i) {
            Self::var(i)
        } else {
            Self::zero()
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Coefficient of `c_i` (zero if absent).
    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(&i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (usize, &Rational)> + '_ {
        self.coeffs.iter().map(|(&i, q)| (i, q))
    }

    pub fn max_index(&self) -> Option<usize> {
        self.coeffs.keys().next_back().copied()
    }

    /// `Some(i)` iff the form is exactly `c_i`.
    pub fn as_single_var(&self) -> Option<usize> {
        match self.coeffs.iter().next() {
            Some((&i, q)) if self.coeffs.len() == 1 && q.is_one() => Some(i),
            _ => None,
        }
    }

    pub fn scale(&self, q: &Rational) -> Self {
        if q.is_zero() {
            return Self::zero();
        }
        Self {
            coeffs: self.coeffs.iter().map(|(&i, v)| (i, v * q)).collect(),
        }
    }

    fn add_term(&mut self, i: usize, q: &Rational) {
        if q.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(i).or_insert_with(Rational::zero);
        *entry += q;
        if entry.is_zero() {
            self.coeffs.remove(&i);
        }
    }

    /// Substitutes `c_i := values[i - 1]`.
    pub fn evaluate(&self, values: &[Rational]) -> Result<Rational> {
        let mut acc = Rational::zero();
        for (&i, q) in &self.coeffs {
            let v = values.get(i - 1).ok_or_else(|| {
                Error::input(format!(
                    "form {self} uses c{i} but only {} values were given",
                    values.len()
                ))
            })?;
            acc += q * v;
        }
        Ok(acc)
    }
}

impl AddAssign<&LinearForm> for LinearForm {
    fn add_assign(&mut self, rhs: &LinearForm) {
        for (&i, q) in &rhs.coeffs {
            self.add_term(i, q);
        }
    }
}

impl SubAssign<&LinearForm> for LinearForm {
    fn sub_assign(&mut self, rhs: &LinearForm) {
        for (&i, q) in &rhs.coeffs {
            self.add_term(i, &-q);
        }
    }
}

impl Add<&LinearForm> for &LinearForm {
    type Output = LinearForm;
    fn add(self, rhs: &LinearForm) -> LinearForm {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub<&LinearForm> for &LinearForm {
    type Output = LinearForm;
    fn sub(self, rhs: &LinearForm) -> LinearForm {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Add for LinearForm {
    type Output = LinearForm;
    fn add(mut self, rhs: LinearForm) -> LinearForm {
        self += &rhs;
        self
    }
}

impl Sub for LinearForm {
    type Output = LinearForm;
    fn sub(mut self, rhs: LinearForm) -> LinearForm {
        self -= &rhs;
        self
    }
}

impl Neg for &LinearForm {
    type Output = LinearForm;
    fn neg(self) -> LinearForm {
        LinearForm {
            coeffs: self.coeffs.iter().map(|(&i, q)| (i, -q)).collect(),
        }
    }
}

impl Neg for LinearForm {
    type Output = LinearForm;
    fn neg(self) -> LinearForm {
        -&self
    }
}

/// `c1+c2-c3`, `2*c1-1/2*c4`, `0`.
impl fmt::Display for LinearForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (pos, (i, q)) in self.coeffs.iter().enumerate() {
            let mag = q.abs();
            if q.is_negative() {
                f.write_str("-")?;
            } else if pos > 0 {
                f.write_str("+")?;
            }
            if mag.is_one() {
                write!(f, "c{i}")?;
            } else {
                write!(f, "{}*c{i}", format_rational(&mag))?;
            }
        }
        Ok(())
    }
}

impl FromStr for LinearForm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(Error::parse("linear form", "empty input"));
        }
        if compact == "0" {
            return Ok(Self::zero());
        }
        let mut out = Self::zero();
        let bytes = compact.as_bytes();
        let mut start = 0;
        while start < bytes.len() {
            let mut end = start + 1;
            while end < bytes.len() && bytes[end] != b'+' && bytes[end] != b'-' {
                end += 1;
            }
            let chunk = &compact[start..end];
            let (sign, body) = match chunk.as_bytes()[0] {
                b'-' => (-Rational::one(), &chunk[1..]),
                b'+' => (Rational::one(), &chunk[1..]),
                _ => (Rational::one(), chunk),
            };
            let (q, var) = match body.split_once('*') {
                Some((q, v)) => (parse_rational(q)?, v),
                None => (Rational::one(), body),
            };
            let idx = var
                .strip_prefix('c')
                .and_then(|d| d.parse::<usize>().ok())
                .filter(|&i| i >= 1)
                .ok_or_else(|| {
                    Error::parse("linear form", format!("bad term {chunk:?} in {s:?}"))
                })?;
            out.add_term(idx, &(sign * q));
            start = end;
        }
        Ok(out)
    }
}

impl Serialize for LinearForm {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeMap;
        let mut map = s.serialize_map(Some(self.coeffs.len()))?;
        for (i, q) in &self.coeffs {
            map.serialize_entry(&format!("c{i}"), &format_rational(q))?;
        }
        map.end()
    }
}

impl<'de> Deserialize<'de> for LinearForm {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = BTreeMap::<String, String>::deserialize(d)?;
        let mut out = LinearForm::zero();
        for (k, v) in raw {
            let i = k
                .strip_prefix('c')
                .and_then(|d| d.parse::<usize>().ok())
                .filter(|&i| i >= 1)
                .ok_or_else(|| D::Error::custom(format!("bad indeterminate key {k:?}")))?;
            let q = parse_rational(&v).map_err(D::Error::custom)?;
            out.add_term(i, &q);
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::{int, rat};

    fn c(i: usize) -> LinearForm {
        LinearForm::var(i)
    }

    #[test]
    fn cancellation_leaves_canonical_form() {
        let sum = &c(1) + &(&c(2) - &c(1));
        assert_eq!(sum, c(2));
        assert_eq!(sum.terms().count(), 1);
    }

    #[test]
    fn zero_scale_is_zero_form() {
        assert!(c(3).scale(&int(0)).is_zero());
        assert_eq!(c(3).scale(&int(0)), LinearForm::zero());
    }

    #[test]
    fn reflexive_equality() {
        let f = &c(2) - &c(3);
        assert_eq!(f, &c(2) - &c(3));
    }

    #[test]
    fn evaluation_examples() {
        let coeffs = [int(1), int(4), int(2)];
        assert_eq!((&c(2) - &c(3)).evaluate(&coeffs).unwrap(), int(2));
        assert_eq!(LinearForm::zero().evaluate(&coeffs).unwrap(), int(0));
        let f = &(&c(1) + &c(2)) - &c(3);
        assert_eq!(f.evaluate(&coeffs).unwrap(), int(3));
    }

    #[test]
    fn evaluation_out_of_range_is_an_input_error() {
        let err = c(4).evaluate(&[int(1), int(2)]).unwrap_err();
        assert!(matches!(err, Error::Input(_)));
    }

    #[test]
    fn text_round_trip() {
        let f: LinearForm = "c1 + c2 - c3".parse().unwrap();
        assert_eq!(f.to_string(), "c1+c2-c3");
        let g: LinearForm = "-1/2*c4+2*c1".parse().unwrap();
        assert_eq!(g.coeff(4), rat(-1, 2));
        assert_eq!(g.to_string(), "2*c1-1/2*c4");
        assert_eq!("0".parse::<LinearForm>().unwrap(), LinearForm::zero());
        assert_eq!("c1-c1".parse::<LinearForm>().unwrap().to_string(), "0");
        assert!("c0".parse::<LinearForm>().is_err());
        assert!("x1".parse::<LinearForm>().is_err());
    }

    #[test]
    fn json_shape() {
        let f = &c(1) - &c(3);
        let json = serde_json::to_string(&f).unwrap();
        assert_eq!(json, r#"{"c1":"1","c3":"-1"}"#);
        let back: LinearForm = serde_json::from_str(&json).unwrap();
        assert_eq!(back, f);
    }

    #[test]
    fn single_var_detection() {
        assert_eq!(c(5).as_single_var(), Some(5));
        assert_eq!(c(5).scale(&int(2)).as_single_var(), None);
        assert_eq!((&c(1) + &c(2)).as_single_var(), None);
        assert_eq!(LinearForm::zero().as_single_var(), None);
    }
}
