//! Parsing and formatting helpers for exact rationals.
//!
//! The external formats accept either a plain integer (`"42"`) or a
//! fraction (`"p/q"`); output always uses the shortest of the two.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Shorthand for an integer-valued rational.
pub fn int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

pub fn one() -> BigRational {
    BigRational::one()
}

/// True iff the value is a (not necessarily positive) integer.
pub fn is_integer(v: &BigRational) -> bool {
    v.denom().is_one()
}

pub fn is_positive_integer(v: &BigRational) -> bool {
    v.is_positive() && is_integer(v)
}

/// Formats as `"n"` for integers and `"p/q"` otherwise.
pub fn format(v: &BigRational) -> String {
    if is_integer(v) {
        v.numer().to_string()
    } else {
        format!("{}/{}", v.numer(), v.denom())
    }
}

/// Parses `"n"` or `"p/q"`; rejects empty parts and zero denominators.
pub fn parse(s: &str) -> Result<BigRational, String> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), Some(d.trim())),
        None => (s, None),
    };
    let n: BigInt = num
        .parse()
        .map_err(|_| format!("invalid integer {:?}", num))?;
    let d: BigInt = match den {
        Some(d) => d.parse().map_err(|_| format!("invalid integer {:?}", d))?,
        None => BigInt::one(),
    };
    if d.is_zero() {
        return Err(format!("zero denominator in {:?}", s));
    }
    Ok(BigRational::new(n, d))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roundtrip() {
        for s in ["0", "7", "-3", "5/3", "-7/2"] {
            let v = parse(s).unwrap();
            assert_eq!(format(&v), s);
        }
        assert_eq!(format(&parse("6/3").unwrap()), "2");
        assert!(parse("1/0").is_err());
        assert!(parse("").is_err());
        assert!(parse("a/b").is_err());
    }
}
