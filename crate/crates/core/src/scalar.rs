//! Exact rational scalars.
//!
//! Everything in this crate is computed over ℚ. `BigRational` keeps values
//! in lowest terms with a positive denominator, so equality is structural.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

pub type Scalar = BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("cannot parse scalar {0:?}: expected \"p\" or \"p/q\" with integer p and nonzero q")]
pub struct ParseScalarError(pub String);

pub fn int(n: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(n))
}

/// `num / den`. Panics on a zero denominator.
pub fn ratio(num: i64, den: i64) -> Scalar {
    Scalar::new(BigInt::from(num), BigInt::from(den))
}

pub fn zero() -> Scalar {
    Scalar::zero()
}

pub fn one() -> Scalar {
    Scalar::one()
}

pub fn half() -> Scalar {
    ratio(1, 2)
}

/// Parses `"p"` or `"p/q"`; the result is reduced.
pub fn parse(s: &str) -> Result<Scalar, ParseScalarError> {
    let err = || ParseScalarError(s.to_string());
    let t = s.trim();
    let (p, q) = match t.split_once('/') {
        Some((p, q)) => (p.trim(), q.trim()),
        None => (t, "1"),
    };
    let p: BigInt = p.parse().map_err(|_| err())?;
    let q: BigInt = q.parse().map_err(|_| err())?;
    if q.is_zero() {
        return Err(err());
    }
    Ok(Scalar::new(p, q))
}

/// Canonical text form: `"p"` for integers, `"p/q"` otherwise.
pub fn format(x: &Scalar) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

pub fn is_positive(x: &Scalar) -> bool {
    x.is_positive()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format_are_canonical() {
        assert_eq!(format(&parse("-6/4").unwrap()), "-3/2");
        assert_eq!(format(&parse("4/2").unwrap()), "2");
        assert_eq!(format(&parse("0/7").unwrap()), "0");
        assert_eq!(format(&parse("3/-6").unwrap()), "-1/2");
        assert_eq!(parse(" 5 ").unwrap(), int(5));
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!(parse("1/0").is_err());
        assert!(parse("x").is_err());
        assert!(parse("1.5").is_err());
        assert!(parse("").is_err());
    }

    #[test]
    fn denominators_stay_positive() {
        let x = ratio(1, -3);
        assert!(x.denom().is_positive());
        assert_eq!(x, ratio(-1, 3));
    }
}
