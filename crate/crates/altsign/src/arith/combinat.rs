use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::ring::{Integer, Rational};

pub fn factorial(n: u64) -> Integer {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

/// n! for n ≥ 0, `None` for negative n (a pole of the Gamma function).
pub fn factorial_i(n: i64) -> Option<Integer> {
    (n >= 0).then(|| factorial(n as u64))
}

/// 1/n! with the Gamma-function convention 1/n! = 0 for negative n.
pub fn inv_factorial(n: i64) -> Rational {
    match factorial_i(n) {
        Some(f) => Rational::new(BigInt::one(), f),
        None => Rational::zero(),
    }
}

/// Rising factorial (a)_n = a(a+1)···(a+n−1).
pub fn pochhammer(a: &Rational, n: u64) -> Rational {
    let mut acc = Rational::one();
    let mut t = a.clone();
    for _ in 0..n {
        acc *= &t;
        t += Rational::one();
    }
    acc
}

/// Binomial coefficient counting lattice paths: 0 whenever no path exists
/// (k < 0, m < 0 or m < k).
pub fn binom_safe(m: i64, k: i64) -> Integer {
    if k < 0 || m < 0 || m < k {
        return BigInt::zero();
    }
    let k = k.min(m - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (m - i) / (i + 1);
    }
    acc
}
