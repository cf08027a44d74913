//! Exact comparisons against `log2(n)` and a certified dyadic enclosure of it.

use std::cmp::Ordering;

use num_bigint::{BigInt, BigUint};
use num_traits::One;

use super::rational::Rational;

/// Fractional bits carried by the fixed-point squaring.
const FRAC_BITS: usize = 128;

/// Default number of binary digits extracted; the enclosure is at most
/// `2^-40` wide.
pub const DEFAULT_DIGITS: u32 = 40;

/// `lower <= log2(n) <= upper`, both dyadic rationals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Log2Enclosure {
    pub lower: Rational,
    pub upper: Rational,
}

/// Compares `log2(n)` with `num / den` exactly, via `n^den` against `2^num`.
pub fn log2_cmp(n: u64, num: i64, den: u64) -> Ordering {
    assert!(n >= 1 && den >= 1);
    if num < 0 {
        return Ordering::Greater;
    }
    let lhs = BigUint::from(n).pow(den as u32);
    let rhs = BigUint::one() << num as usize;
    lhs.cmp(&rhs)
}

/// `log2(n) >= num / den`.
pub fn log2_at_least(n: u64, num: i64, den: u64) -> bool {
    log2_cmp(n, num, den) != Ordering::Less
}

/// `log2(n) <= num / den`.
pub fn log2_at_most(n: u64, num: i64, den: u64) -> bool {
    log2_cmp(n, num, den) != Ordering::Greater
}

fn ceil_shr(x: BigUint, bits: usize) -> BigUint {
    let mask = (BigUint::one() << bits) - 1u32;
    let exact = (&x & &mask) == BigUint::default();
    let q = x >> bits;
    if exact {
        q
    } else {
        q + 1u32
    }
}

/// Encloses `log2(n)` by extracting `digits` binary digits of the mantissa
/// through repeated squaring. Lower bounds are rounded down and upper bounds
/// up at every step, so the enclosure is certified. Exact for powers of two.
pub fn log2_enclosure(n: u64, digits: u32) -> Log2Enclosure {
    assert!(n >= 1);
    let k = u64::from(63 - n.leading_zeros());
    let dyadic = |m: u64, bits: u32| {
        let den = BigInt::one() << bits as usize;
        Rational::new(BigInt::from(k) * &den + BigInt::from(m), den)
    };
    if n.is_power_of_two() {
        let exact = Rational::from_integer(BigInt::from(k));
        return Log2Enclosure {
            lower: exact.clone(),
            upper: exact,
        };
    }
    // mantissa y = n / 2^k in [1, 2), held as [lo, hi] * 2^-FRAC_BITS
    let two = BigUint::from(2u32) << FRAC_BITS;
    let mut lo = (BigUint::from(n) << FRAC_BITS) >> k as usize;
    let mut hi = lo.clone();
    let mut m = 0u64;
    for i in 0..digits {
        lo = (&lo * &lo) >> FRAC_BITS;
        hi = ceil_shr(&hi * &hi, FRAC_BITS);
        m <<= 1;
        if lo >= two {
            m |= 1;
            lo >>= 1;
            hi = ceil_shr(hi, 1);
        } else if hi >= two {
            // digit undecided at this precision
            return Log2Enclosure {
                lower: dyadic(m, i + 1),
                upper: dyadic(m + 2, i + 1),
            };
        }
    }
    Log2Enclosure {
        lower: dyadic(m, digits),
        upper: dyadic(m + 1, digits),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bounds::rational::to_f64;

    #[test]
    fn comparisons() {
        // log2(10) is between 3.32 and 3.33
        assert!(log2_at_least(10, 332, 100));
        assert!(log2_at_most(10, 333, 100));
        assert_eq!(log2_cmp(8, 3, 1), Ordering::Equal);
        assert_eq!(log2_cmp(1, 0, 1), Ordering::Equal);
        assert_eq!(log2_cmp(5, -1, 1), Ordering::Greater);
    }

    #[test]
    fn enclosure_contains_float_log() {
        for n in [3u64, 5, 6, 7, 10, 12, 30, 100, 1000, 65_537, u64::MAX] {
            let e = log2_enclosure(n, DEFAULT_DIGITS);
            let x = (n as f64).log2();
            assert!(to_f64(&e.lower) <= x + 1e-12 && x - 1e-12 <= to_f64(&e.upper), "{n}");
            let width = to_f64(&(&e.upper - &e.lower));
            assert!(width > 0.0 && width <= 2f64.powi(-32), "{n}: {width}");
        }
    }

    #[test]
    fn enclosure_is_certified() {
        // lower = a/2^b must satisfy 2^a <= n^(2^b); check with small digit counts
        for n in [3u64, 5, 10, 11] {
            let e = log2_enclosure(n, 8);
            let den = 256u64;
            let scale = |r: &Rational| {
                let x = r * Rational::from_integer(den.into());
                assert!(x.is_integer());
                x.to_integer().to_string().parse::<i64>().unwrap()
            };
            let (lo, hi) = (scale(&e.lower), scale(&e.upper));
            assert!(log2_at_least(n, lo, den), "{n}");
            assert!(log2_at_most(n, hi, den), "{n}");
        }
    }

    #[test]
    fn powers_of_two_exact() {
        for k in 0..64 {
            let e = log2_enclosure(1u64 << k, DEFAULT_DIGITS);
            assert_eq!(e.lower, Rational::from_integer(k.into()));
            assert_eq!(e.lower, e.upper);
        }
    }
}
