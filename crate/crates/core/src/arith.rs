//! Exact binomials, including the generalised real-argument binomial.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// `C(n, k)` as an integer; exact for every value fitting in `u128`.
pub fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        // acc * (n - i) is divisible by (i + 1); split the division to avoid overflow
        let d = (i + 1) as u128;
        let g = gcd(acc, d);
        acc = acc / g * ((n - i) as u128 / (d / g));
    }
    acc
}

fn gcd(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub fn binomial_big(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// `x(x-1)...(x-k+1)/k!` when `x > k - 1`, and `0` otherwise.
pub fn generalized_binomial(x: &BigRational, k: u64) -> BigRational {
    if k == 0 {
        return BigRational::one();
    }
    let threshold = BigRational::from_integer(BigInt::from(k - 1));
    if *x <= threshold {
        return BigRational::zero();
    }
    let mut acc = BigRational::one();
    for i in 0..k {
        acc *= x - BigRational::from_integer(BigInt::from(i));
        acc /= BigRational::from_integer(BigInt::from(i + 1));
    }
    acc
}

pub fn ratio(num: impl Into<BigInt>, den: impl Into<BigInt>) -> BigRational {
    BigRational::new(num.into(), den.into())
}

/// Smallest integer `>= q`.
pub fn ceil_to_int(q: &BigRational) -> BigInt {
    q.ceil().to_integer()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn integer_binomials() {
        assert_eq!(binomial(5, 2), 10);
        assert_eq!(binomial(0, 0), 1);
        assert_eq!(binomial(3, 4), 0);
        assert_eq!(binomial(100, 3), 161_700);
        assert_eq!(
            binomial(128, 64),
            23_951_146_041_928_082_866_135_587_776_380_551_750
        );
        for n in 0..40 {
            for k in 0..=n {
                assert_eq!(BigInt::from(binomial(n, k)), binomial_big(n, k));
            }
        }
    }

    #[test]
    fn generalized_binomial_matches_integers_and_cutoff() {
        for n in 0..12u64 {
            for k in 0..6u64 {
                let x = BigRational::from_integer(BigInt::from(n));
                assert_eq!(
                    generalized_binomial(&x, k),
                    BigRational::from_integer(BigInt::from(binomial(n, k)))
                );
            }
        }
        // t <= r - 1 gives zero, including non-integer t just below the cutoff
        assert!(generalized_binomial(&ratio(5, 2), 4).is_zero());
        assert!(generalized_binomial(&ratio(3, 1), 4).is_zero());
        // C(7/2, 2) = (7/2)(5/2)/2 = 35/8
        assert_eq!(generalized_binomial(&ratio(7, 2), 2), ratio(35, 8));
        assert_eq!(ceil_to_int(&ratio(57, 5)), BigInt::from(12));
        assert_eq!(ceil_to_int(&ratio(12, 1)), BigInt::from(12));
    }
}
