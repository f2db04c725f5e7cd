//! Exact rational arithmetic and integer square/square-free helpers.
//!
//! `Rational` is an arbitrary-precision fraction kept in canonical form
//! (positive denominator, fully reduced), so equality is structural.

use num::bigint::Sign;
use num::integer::Roots;
use num::{BigInt, One, Signed, Zero};
use std::str::FromStr;

use crate::error::{Error, Result};

/// Arbitrary-precision fraction, always reduced, denominator always positive.
pub type Rational = num::BigRational;

/// `n/d` as a canonical rational. Panics if `d == 0`; test and construction helper.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Integer `n` as a rational.
pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Parses "p/q" or "p". Rejects zero denominators instead of panicking.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let bad = || Error::BadRational { input: s.to_string() };
    match s.split_once('/') {
        Some((p, q)) => {
            let p = BigInt::from_str(p.trim()).map_err(|_| bad())?;
            let q = BigInt::from_str(q.trim()).map_err(|_| bad())?;
            if q.is_zero() {
                return Err(bad());
            }
            Ok(Rational::new(p, q))
        }
        None => {
            let p = BigInt::from_str(s.trim()).map_err(|_| bad())?;
            Ok(Rational::from_integer(p))
        }
    }
}

fn perfect_sqrt(v: &BigInt) -> Option<BigInt> {
    if v.is_negative() {
        return None;
    }
    let r = v.sqrt();
    (&r * &r == *v).then_some(r)
}

/// The nonnegative rational square root of `a`, if `a` is a square in Q.
///
/// With `a = p/q` in canonical form, `a` is a square iff `p >= 0` and both
/// `p` and `q` are perfect integer squares.
pub fn is_rational_square(a: &Rational) -> Option<Rational> {
    if a.is_negative() {
        return None;
    }
    let pn = perfect_sqrt(a.numer())?;
    let pd = perfect_sqrt(a.denom())?;
    Some(Rational::new(pn, pd))
}

/// Trial-division factorization of `|n|` into (prime, exponent) pairs.
pub(crate) fn factor_trial(n: &BigInt) -> Vec<(BigInt, u32)> {
    let mut m = n.abs();
    let mut out = Vec::new();
    if m.is_zero() || m.is_one() {
        return out;
    }
    let mut push = |p: BigInt, e: u32| {
        if e > 0 {
            out.push((p, e));
        }
    };
    let two = BigInt::from(2);
    let mut e = 0u32;
    while (&m % &two).is_zero() {
        m /= &two;
        e += 1;
    }
    push(two, e);
    let mut d = BigInt::from(3);
    while &d * &d <= m {
        let mut e = 0u32;
        while (&m % &d).is_zero() {
            m /= &d;
            e += 1;
        }
        push(d.clone(), e);
        d += 2;
    }
    if m > BigInt::one() {
        push(m, 1);
    }
    out
}

/// All positive divisors of `|n|`, unordered.
pub(crate) fn divisors(n: &BigInt) -> Vec<BigInt> {
    let mut out = vec![BigInt::one()];
    for (p, e) in factor_trial(n) {
        let base = out.clone();
        let mut pk = BigInt::one();
        for _ in 0..e {
            pk *= &p;
            out.extend(base.iter().map(|d| d * &pk));
        }
    }
    out
}

/// The unique square-free integer `s` with `a = s * (rational square)`.
/// The sign of `a` is preserved in `s`.
pub fn squarefree_part(a: &Rational) -> Result<BigInt> {
    if a.is_zero() {
        return Err(Error::ZeroInput);
    }
    // a = p/q with p ⟂ q, so sf(p/q) = sf(p*q).
    let prod = a.numer() * a.denom();
    let mut s = BigInt::one();
    for (p, e) in factor_trial(&prod) {
        if e % 2 == 1 {
            s *= p;
        }
    }
    if prod.sign() == Sign::Minus {
        s = -s;
    }
    Ok(s)
}

/// `true` if the positive integer `n` has no repeated prime factor.
pub fn is_squarefree(n: u64) -> bool {
    let b = BigInt::from(n);
    factor_trial(&b).into_iter().all(|(_, e)| e == 1)
}

/// Decimal rendering of `a` to `digits` fractional digits, rounding half
/// away from zero. Display only; never feeds back into arithmetic.
pub fn decimal_string(a: &Rational, digits: usize) -> String {
    let sign = if a.is_negative() { "-" } else { "" };
    let scale = BigInt::from(10u32).pow(digits as u32);
    let scaled = a.abs() * Rational::from_integer(scale.clone());
    // round half up in magnitude
    let rounded = (scaled + rat(1, 2)).floor().to_integer();
    let int_part = &rounded / &scale;
    let frac_part = &rounded % &scale;
    if digits == 0 {
        format!("{sign}{int_part}")
    } else {
        format!("{sign}{int_part}.{frac:0>width$}", frac = frac_part, width = digits)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_display_matches_wire_format() {
        assert_eq!(rat(3, 2).to_string(), "3/2");
        assert_eq!(rat(10, 2).to_string(), "5");
        assert_eq!(rat(-4, 8).to_string(), "-1/2");
        assert_eq!(rat(0, 5).to_string(), "0");
    }

    #[test]
    fn fibonacci_sides_multiply_to_area() {
        // (3/2) * (20/3) / 2 = 5
        let area = rat(3, 2) * rat(20, 3) / rat_int(2);
        assert_eq!(area, rat_int(5));
    }

    #[test]
    fn hypotenuse_square_exact() {
        // (25/4)^2 + 25 = 1025/16, by direct fraction arithmetic
        let v = rat(25, 4) * rat(25, 4) + rat_int(25);
        assert_eq!(v, rat(1025, 16));
    }

    #[test]
    fn additive_identity() {
        let a = rat(-7, 3);
        assert_eq!(&a + rat_int(0), a);
    }

    #[test]
    fn square_detection() {
        // 41^2 = 1681 and 12^2 = 144, checked by integer multiplication
        assert_eq!(41 * 41, 1681);
        assert_eq!(12 * 12, 144);
        assert_eq!(is_rational_square(&rat(1681, 144)), Some(rat(41, 12)));
        assert_eq!(is_rational_square(&rat_int(0)), Some(rat_int(0)));
        assert_eq!(is_rational_square(&rat_int(2)), None);
        assert_eq!(is_rational_square(&rat_int(-4)), None);
    }

    #[test]
    fn squarefree_parts() {
        // 4*1^2 + 1^4 = 5, square-free by trial division (divisors: 1, 5)
        assert_eq!(squarefree_part(&rat_int(5)).unwrap(), BigInt::from(5));
        assert_eq!(squarefree_part(&rat_int(20)).unwrap(), BigInt::from(5));
        assert_eq!(squarefree_part(&rat(9, 4)).unwrap(), BigInt::from(1));
        assert_eq!(squarefree_part(&rat_int(-18)).unwrap(), BigInt::from(-2));
        assert_eq!(squarefree_part(&rat_int(32)).unwrap(), BigInt::from(2));
        assert_eq!(squarefree_part(&rat_int(0)), Err(Error::ZeroInput));
    }

    #[test]
    fn parse_round_trips() {
        assert_eq!(parse_rational("3/2").unwrap(), rat(3, 2));
        assert_eq!(parse_rational("-6/4").unwrap(), rat(-3, 2));
        assert_eq!(parse_rational("7").unwrap(), rat_int(7));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn decimal_rendering() {
        assert_eq!(decimal_string(&rat(3, 2), 3), "1.500");
        assert_eq!(decimal_string(&rat(20, 3), 10), "6.6666666667");
        assert_eq!(decimal_string(&rat(-1, 8), 2), "-0.13");
        assert_eq!(decimal_string(&rat_int(41), 0), "41");
    }
}
