//! Small exact-arithmetic helpers used throughout the crate.

use num::rational::Ratio;
use num::{BigInt, BigRational, One, Signed, Zero};

/// Exact rational scalar. All quantities in this crate stay tiny, so a
/// 64-bit ratio is ample; overflow would panic rather than silently wrap.
pub type Rat = Ratio<i64>;

pub fn rat(n: i64, d: i64) -> Rat {
    Ratio::new(n, d)
}

pub fn rint(n: i64) -> Rat {
    Ratio::from_integer(n)
}

pub fn factorial(n: usize) -> u64 {
    (1..=n as u64).product()
}

pub fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u64 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u64 / (i + 1) as u64;
    }
    acc
}

pub fn pow2(e: usize) -> u64 {
    1u64 << e
}

/// Sign of a rational as -1, 0, 1.
pub fn sign(x: &Rat) -> i32 {
    if x.is_zero() {
        0
    } else if x.is_positive() {
        1
    } else {
        -1
    }
}

pub fn big(x: &Rat) -> BigRational {
    BigRational::new(BigInt::from(*x.numer()), BigInt::from(*x.denom()))
}

/// Parity sign `(-1)^k`.
pub fn neg_one_pow(k: usize) -> i64 {
    if k % 2 == 0 {
        1
    } else {
        -1
    }
}

/// True if the big rational is exactly one.
pub fn is_one(x: &BigRational) -> bool {
    x.is_one()
}
