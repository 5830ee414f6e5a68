//! Exact rational scalars.
//!
//! Every time, position, speed and ratio in the simulator is a
//! [`BigRational`]; nothing in the kernel rounds.

use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub type Scalar = BigRational;

/// `numer / denom` as an exact scalar. Panics if `denom == 0`.
pub fn rat(numer: i64, denom: i64) -> Scalar {
    BigRational::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn int(n: i64) -> Scalar {
    BigRational::from_integer(BigInt::from(n))
}

pub fn zero() -> Scalar {
    Scalar::zero()
}

pub fn one() -> Scalar {
    Scalar::one()
}

/// `2^exp` for a possibly negative exponent.
pub fn pow2(exp: i64) -> Scalar {
    let mag = BigInt::one() << exp.unsigned_abs();
    if exp >= 0 {
        BigRational::from_integer(mag)
    } else {
        BigRational::new(BigInt::one(), mag)
    }
}

/// Integer power of a rational base.
pub fn powi(base: &Scalar, exp: u32) -> Scalar {
    num_traits::pow(base.clone(), exp as usize)
}

/// Sign as -1, 0 or +1.
pub fn signum(x: &Scalar) -> i8 {
    if x.is_positive() {
        1
    } else if x.is_negative() {
        -1
    } else {
        0
    }
}

/// Nearest `f64`; huge or tiny values saturate the way `f64` does.
pub fn to_f64(x: &Scalar) -> f64 {
    x.to_f64().unwrap_or_else(|| {
        if x.is_negative() {
            f64::NEG_INFINITY
        } else {
            f64::INFINITY
        }
    })
}

/// Exact conversion of a finite `f64` into a rational.
pub fn from_f64(x: f64) -> Result<Scalar> {
    BigRational::from_float(x).ok_or_else(|| Error::Domain(format!("{x} is not finite")))
}

/// Always writes `p/q`, including `5/1` for integers.
pub fn fmt_pq(x: &Scalar) -> String {
    format!("{}/{}", x.numer(), x.denom())
}

/// Parses `p/q`, an integer, or a plain decimal such as `0.25` or `-1.5e-3`.
/// Decimals are converted exactly, so `0.1` becomes `1/10`.
pub fn parse_scalar(s: &str) -> Result<Scalar> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not a rational number: {s:?}"));
    if s.is_empty() {
        return Err(bad());
    }
    if let Some((p, q)) = s.split_once('/') {
        let p: BigInt = p
            .trim()
            .trim_start_matches('+')
            .parse()
            .map_err(|_| bad())?;
        let q: BigInt = q.trim().parse().map_err(|_| bad())?;
        if q.is_zero() {
            return Err(Error::Parse(format!("zero denominator in {s:?}")));
        }
        return Ok(BigRational::new(p, q));
    }

    let (mantissa, exponent) = match s.find(['e', 'E']) {
        Some(pos) => {
            let e: i64 = s[pos + 1..]
                .trim_start_matches('+')
                .parse()
                .map_err(|_| bad())?;
            (&s[..pos], e)
        }
        None => (s, 0),
    };
    let (negative, digits) = match mantissa.as_bytes().first() {
        Some(b'-') => (true, &mantissa[1..]),
        Some(b'+') => (false, &mantissa[1..]),
        _ => (false, mantissa),
    };
    let (whole, frac) = digits.split_once('.').unwrap_or((digits, ""));
    if (whole.is_empty() && frac.is_empty())
        || !whole
            .bytes()
            .chain(frac.bytes())
            .all(|b| b.is_ascii_digit())
    {
        return Err(bad());
    }
    let all: BigInt = format!("0{whole}{frac}").parse().map_err(|_| bad())?;
    let scale = exponent - frac.len() as i64;
    let ten = BigRational::from_integer(BigInt::from(10));
    let factor = if scale >= 0 {
        num_traits::pow(ten, scale as usize)
    } else {
        num_traits::pow(ten, scale.unsigned_abs() as usize).recip()
    };
    let value = BigRational::from_integer(all) * factor;
    Ok(if negative { -value } else { value })
}

/// Smallest integer `n >= 0` with `base^n >= x`, computed exactly.
/// Requires `base > 1`; returns 0 for `x <= 1`.
pub fn ceil_log(base: &Scalar, x: &Scalar) -> Result<u32> {
    if *base <= one() {
        return Err(Error::Domain(format!(
            "log base {} must exceed 1",
            fmt_pq(base)
        )));
    }
    let mut n = 0u32;
    let mut p = one();
    while p < *x {
        p *= base;
        n += 1;
    }
    Ok(n)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_fractions_integers_and_decimals() {
        assert_eq!(parse_scalar("1/2").unwrap(), rat(1, 2));
        assert_eq!(parse_scalar("-3/6").unwrap(), rat(-1, 2));
        assert_eq!(parse_scalar("+1").unwrap(), int(1));
        assert_eq!(parse_scalar("7").unwrap(), int(7));
        assert_eq!(parse_scalar("0.25").unwrap(), rat(1, 4));
        assert_eq!(parse_scalar("1e-9").unwrap(), rat(1, 1_000_000_000));
        assert_eq!(parse_scalar("-1.5E2").unwrap(), int(-150));
        assert_eq!(parse_scalar(".5").unwrap(), rat(1, 2));
    }

    #[test]
    fn rejects_garbage() {
        for s in ["", "1/0", "abc", "1..2", "--1", "1/x", "."] {
            assert!(parse_scalar(s).is_err(), "{s}");
        }
    }

    #[test]
    fn formats_with_explicit_denominator() {
        assert_eq!(fmt_pq(&int(5)), "5/1");
        assert_eq!(fmt_pq(&rat(-6, 4)), "-3/2");
    }

    #[test]
    fn powers_of_two() {
        assert_eq!(pow2(3), int(8));
        assert_eq!(pow2(-2), rat(1, 4));
        assert_eq!(pow2(0), one());
    }

    #[test]
    fn exact_ceiling_log() {
        assert_eq!(ceil_log(&int(2), &int(16)).unwrap(), 4);
        assert_eq!(ceil_log(&int(2), &rat(161, 10)).unwrap(), 5);
        assert_eq!(ceil_log(&int(4), &one()).unwrap(), 0);
        assert!(ceil_log(&one(), &int(3)).is_err());
    }
}
