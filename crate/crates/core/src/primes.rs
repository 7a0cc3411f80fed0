//! Finite sets of primes and the small amount of integer factorization the
//! crate needs.
//!
//! All inputs live at desk scale, so primality and factorization are plain
//! deterministic trial division; correctness over asymptotics.

use alloc::fmt;
use alloc::vec::Vec;
use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

/// A finite, strictly increasing set of primes (possibly empty).
///
/// `PrimeSet` doubles as the description of the subring `Z[1/pi]` of `Q`
/// obtained by inverting its members.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PrimeSet {
    primes: Vec<u64>,
}

/// Error raised when constructing a [`PrimeSet`] from a non-prime entry.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NotPrime(pub u64);

impl fmt::Display for NotPrime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} is not a prime number", self.0)
    }
}

impl PrimeSet {
    /// The empty set of primes, i.e. the ring `Z`.
    pub fn empty() -> Self {
        PrimeSet { primes: Vec::new() }
    }

    /// Builds a set from arbitrary entries, sorting and deduplicating.
    pub fn new<I: IntoIterator<Item = u64>>(entries: I) -> Result<Self, NotPrime> {
        let mut primes: Vec<u64> = Vec::new();
        for p in entries {
            if !is_prime(p) {
                return Err(NotPrime(p));
            }
            primes.push(p);
        }
        primes.sort_unstable();
        primes.dedup();
        Ok(PrimeSet { primes })
    }

    /// Infallible constructor for literal prime lists in code and tests.
    ///
    /// Panics if an entry is not prime.
    pub fn of(entries: &[u64]) -> Self {
        Self::new(entries.iter().copied()).expect("literal prime set")
    }

    pub fn contains(&self, p: u64) -> bool {
        self.primes.binary_search(&p).is_ok()
    }

    pub fn is_subset_of(&self, other: &PrimeSet) -> bool {
        self.primes.iter().all(|&p| other.contains(p))
    }

    pub fn union(&self, other: &PrimeSet) -> PrimeSet {
        let mut primes = self.primes.clone();
        primes.extend_from_slice(&other.primes);
        primes.sort_unstable();
        primes.dedup();
        PrimeSet { primes }
    }

    pub fn iter(&self) -> impl Iterator<Item = u64> + '_ {
        self.primes.iter().copied()
    }

    pub fn len(&self) -> usize {
        self.primes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.primes.is_empty()
    }

    pub fn as_slice(&self) -> &[u64] {
        &self.primes
    }
}

impl fmt::Display for PrimeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, p) in self.primes.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", p)?;
        }
        write!(f, "}}")
    }
}

/// Deterministic primality test by trial division.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    while d.checked_mul(d).is_some_and(|sq| sq <= n) {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// Distinct prime divisors of a positive integer, in increasing order.
///
/// Panics if `n` is zero (zero is divisible by everything).
pub fn distinct_prime_divisors(n: &BigUint) -> PrimeSet {
    assert!(!n.is_zero(), "zero has no prime support");
    let mut rest = n.clone();
    let mut primes = Vec::new();
    let two = BigUint::from(2u64);
    if (&rest % &two).is_zero() {
        primes.push(2u64);
        while (&rest % &two).is_zero() {
            rest /= &two;
        }
    }
    let mut d = BigUint::from(3u64);
    while &d * &d <= rest {
        if (&rest % &d).is_zero() {
            primes.push(u64::try_from(&d).expect("trial divisor fits u64"));
            while (&rest % &d).is_zero() {
                rest /= &d;
            }
        }
        d += 2u64;
    }
    if !rest.is_one() {
        primes.push(u64::try_from(&rest).expect("prime factor beyond u64"));
    }
    PrimeSet { primes }
}

/// Removes every factor lying in `pi` from `|n|`, returning the positive
/// remainder. `n` must be nonzero.
pub fn strip_primes(n: &BigInt, pi: &PrimeSet) -> BigUint {
    let mut rest = n.magnitude().clone();
    assert!(!rest.is_zero(), "cannot strip primes from zero");
    for p in pi.iter() {
        let p = BigUint::from(p);
        while (&rest % &p).is_zero() {
            rest /= &p;
        }
    }
    rest
}

/// The exact power of `p` dividing `|n|`; `n` must be nonzero.
pub fn int_valuation(n: &BigInt, p: u64) -> u64 {
    let mut rest = n.magnitude().clone();
    assert!(!rest.is_zero(), "valuation of zero is infinite");
    let p = BigUint::from(p);
    let mut v = 0u64;
    while (&rest % &p).is_zero() {
        rest /= &p;
        v += 1;
    }
    v
}

/// `n` is a pi-number: nonzero with every prime divisor in `pi`.
///
/// Zero is not a pi-number; `Z[1/pi]` only inverts nonzero pi-numbers.
pub fn is_pi_number(n: &BigInt, pi: &PrimeSet) -> bool {
    if n.is_zero() {
        return false;
    }
    strip_primes(n, pi).is_one()
}
