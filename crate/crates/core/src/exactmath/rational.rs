use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::{Error, Result};

/// Exact rational number, always in lowest terms with a positive denominator.
pub type Rational = BigRational;

pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

/// `p/q`. Panics if `q == 0`.
pub fn rat(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// Parses `"p"` or `"p/q"` (surrounding whitespace allowed).
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((p, q)) => (p.trim(), q.trim()),
        None => (s, "1"),
    };
    let num: BigInt = num
        .parse()
        .map_err(|_| Error::parse("rational", format!("bad numerator in {s:?}")))?;
    let den: BigInt = den
        .parse()
        .map_err(|_| Error::parse("rational", format!("bad denominator in {s:?}")))?;
    if den == BigInt::from(0) {
        return Err(Error::parse("rational", format!("zero denominator in {s:?}")));
    }
    Ok(Rational::new(num, den))
}

/// `"p/q"`, or `"p"` for integers.
pub fn format_rational(q: &Rational) -> String {
    q.to_string()
}

pub(crate) mod serde_rational {
    use super::{format_rational, Rational};
    use serde::Serializer;

    pub fn serialize<S: Serializer>(q: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&format_rational(q))
    }
}

pub(crate) mod serde_rational_vec {
    use super::{format_rational, parse_rational, Rational};
    use serde::{de::Error as _, ser::SerializeSeq, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &[Rational], s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(v.len()))?;
        for q in v {
            seq.serialize_element(&format_rational(q))?;
        }
        seq.end()
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Rational>, D::Error> {
        Vec::<String>::deserialize(d)?
            .iter()
            .map(|s| parse_rational(s).map_err(D::Error::custom))
            .collect()
    }
}

pub(crate) mod serde_rational_vecs {
    use super::{format_rational, Rational};
    use serde::{Serialize, Serializer};

    pub fn serialize<S: Serializer>(v: &[Vec<Rational>], s: S) -> Result<S::Ok, S::Error> {
        let text: Vec<Vec<String>> = v
            .iter()
            .map(|p| p.iter().map(format_rational).collect())
            .collect();
        text.serialize(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lowest_terms() {
        let q = rat(6, -4);
        assert_eq!(q, rat(-3, 2));
        assert_eq!(format_rational(&q), "-3/2");
        assert_eq!(format_rational(&int(7)), "7");
    }

    #[test]
    fn parse_accepts_both_forms() {
        assert_eq!(parse_rational(" 4 ").unwrap(), int(4));
        assert_eq!(parse_rational("-10/4").unwrap(), rat(-5, 2));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }
}
