//! Arbitrary-precision rationals, always in lowest terms with positive
//! denominator (the invariants `num_rational` maintains for values built
//! through its constructors and arithmetic).

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

pub type Rational = num_rational::BigRational;

pub fn rat_i64(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Parses "p/q" or "p".
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                return None;
            }
            Some(Rational::new(n, d))
        }
        None => {
            let n: BigInt = s.parse().ok()?;
            Some(Rational::from_integer(n))
        }
    }
}

/// Renders "p/q", or just "p" for integers.
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn rational_to_f64(r: &Rational) -> f64 {
    let num = r.numer();
    let den = r.denom();
    // Good enough for display and the float-image property tests: all values
    // in this crate have numerators and denominators far below 2^1000.
    let nf: f64 = num.to_string().parse().unwrap_or(if num.is_negative() {
        f64::NEG_INFINITY
    } else {
        f64::INFINITY
    });
    let df: f64 = den.to_string().parse().unwrap_or(f64::INFINITY);
    nf / df
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format_round_trip() {
        let r = parse_rational("-3/6").unwrap();
        assert_eq!(format_rational(&r), "-1/2");
        let r = parse_rational("7").unwrap();
        assert_eq!(format_rational(&r), "7");
        assert!(parse_rational("1/0").is_none());
        assert!(parse_rational("x").is_none());
    }

    #[test]
    fn canonical_zero() {
        let z = rat(0, 5);
        assert!(z.is_zero());
        assert_eq!(format_rational(&z), "0");
    }
}
