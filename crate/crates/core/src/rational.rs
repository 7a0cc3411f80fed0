//! Exact arbitrary-precision rational scalars.
//!
//! The scalar type is [`num_rational::BigRational`], which maintains the
//! invariants we rely on (fully reduced, denominator positive, zero stored
//! as `0/1`). This module adds the prime-support analysis that every
//! pi-condition in the crate reduces to, and the `"a/b"` string form used
//! by all external interfaces. There is no floating point anywhere.

use alloc::fmt;
use alloc::string::String;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::primes::{self, PrimeSet};

pub type Rational = num_rational::BigRational;

/// Shorthand for an integer rational.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Shorthand for `n/d`; panics on `d = 0`.
pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Errors from [`parse_rational`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ParseRationalError {
    Empty,
    BadInteger(String),
    ZeroDenominator,
    NegativeDenominator,
}

impl fmt::Display for ParseRationalError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseRationalError::Empty => write!(f, "empty rational literal"),
            ParseRationalError::BadInteger(s) => write!(f, "invalid integer literal {:?}", s),
            ParseRationalError::ZeroDenominator => write!(f, "denominator is zero"),
            ParseRationalError::NegativeDenominator => {
                write!(f, "denominator must be positive")
            }
        }
    }
}

/// Parses `"a"` or `"a/b"` with decimal `a`, `b` and `b > 0`.
pub fn parse_rational(s: &str) -> Result<Rational, ParseRationalError> {
    let s = s.trim();
    if s.is_empty() {
        return Err(ParseRationalError::Empty);
    }
    let parse_int = |t: &str| -> Result<BigInt, ParseRationalError> {
        t.parse::<BigInt>()
            .map_err(|_| ParseRationalError::BadInteger(String::from(t)))
    };
    match s.split_once('/') {
        None => Ok(Rational::from_integer(parse_int(s)?)),
        Some((num, den)) => {
            let num = parse_int(num)?;
            let den = parse_int(den)?;
            if den.is_zero() {
                return Err(ParseRationalError::ZeroDenominator);
            }
            if den.is_negative() {
                return Err(ParseRationalError::NegativeDenominator);
            }
            Ok(Rational::new(num, den))
        }
    }
}

/// Error from [`prime_support`]: zero admits every prime as a divisor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZeroSupport;

impl fmt::Display for ZeroSupport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "zero has no support")
    }
}

/// The primes dividing the numerator and the denominator of `q != 0`.
pub fn prime_support(q: &Rational) -> Result<(PrimeSet, PrimeSet), ZeroSupport> {
    if q.is_zero() {
        return Err(ZeroSupport);
    }
    let numer = primes::distinct_prime_divisors(q.numer().magnitude());
    let denom = primes::distinct_prime_divisors(q.denom().magnitude());
    Ok((numer, denom))
}

/// `q` is a unit of `Z[1/pi]`, i.e. `q = ±` a product of (possibly
/// negative) powers of primes in `pi`.
pub fn is_pi_unit(q: &Rational, pi: &PrimeSet) -> bool {
    !q.is_zero() && primes::is_pi_number(q.numer(), pi) && primes::is_pi_number(q.denom(), pi)
}

/// `q` lies in `Z[1/pi]`, i.e. every prime in the denominator is in `pi`.
/// Zero lies in every ring.
pub fn in_localization(q: &Rational, pi: &PrimeSet) -> bool {
    q.is_zero() || primes::is_pi_number(q.denom(), pi)
}

/// The `p`-adic valuation of `q != 0`.
pub fn valuation(q: &Rational, p: u64) -> i64 {
    assert!(!q.is_zero(), "valuation of zero is infinite");
    primes::int_valuation(q.numer(), p) as i64 - primes::int_valuation(q.denom(), p) as i64
}

/// `q` is `p`-integral (no `p` in the denominator). Zero passes.
pub fn p_integral(q: &Rational, p: u64) -> bool {
    q.is_zero() || primes::int_valuation(q.denom(), p) == 0
}

/// `q^k` for a (possibly negative) integer exponent; `q != 0` when `k < 0`.
pub fn int_pow(q: &Rational, k: i64) -> Rational {
    if k == 0 {
        return Rational::one();
    }
    let mut out = Rational::one();
    let base = if k < 0 { q.recip() } else { q.clone() };
    for _ in 0..k.unsigned_abs() {
        out *= &base;
    }
    out
}
