//! Arbitrary precision rational scalars and small numeric helpers.
//!
//! `Rational` is `num_rational::BigRational`: always stored in lowest terms
//! with a positive denominator, which is exactly the invariant the kernel
//! needs. No floating point appears anywhere in the verification path.

use alloc::vec::Vec;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

pub type Rational = num_rational::BigRational;

/// Integer as a rational.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `n/d` in lowest terms.
pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn is_zero(r: &Rational) -> bool {
    r.is_zero()
}

/// Binomial coefficient `C(n, k)` as usize; zero when `k > n`.
pub fn binomial(n: i64, k: i64) -> usize {
    if k < 0 || n < 0 || k > n {
        return 0;
    }
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..k {
        num *= n - i;
        den *= i + 1;
    }
    let q = num / den;
    let (_, digits) = q.to_u64_digits();
    match digits.len() {
        0 => 0,
        1 => digits[0] as usize,
        _ => panic!("binomial overflow"),
    }
}

/// `n!` as a big integer.
pub fn factorial(n: u64) -> BigInt {
    let mut f = BigInt::one();
    for i in 2..=n {
        f *= i;
    }
    f
}

/// dim P_k over a `d`-dimensional domain: `C(k + d, d)`; zero for k < 0.
pub fn dim_pk(k: i64, d: i64) -> usize {
    binomial(k + d, d)
}

/// Sum of absolute values of a slice of rationals. Zero iff all entries are.
pub fn abs_sum(vals: &[Rational]) -> Rational {
    let mut s = Rational::zero();
    for v in vals {
        s += v.abs();
    }
    s
}

/// Deterministic 64-bit PRNG (splitmix64). Used only to generate test inputs
/// (random tets, random polynomials); the verification itself is exact.
#[derive(Debug, Clone)]
pub struct Rng {
    state: u64,
}

impl Rng {
    pub fn new(seed: u64) -> Self {
        Rng { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9e37_79b9_7f4a_7c15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
        z ^ (z >> 31)
    }

    /// Uniform in `0..n` (n > 0).
    pub fn below(&mut self, n: u64) -> u64 {
        self.next_u64() % n
    }

    /// Small rational with numerator in `-max..=max` and denominator in `1..=den_max`.
    pub fn small_rational(&mut self, max: u64, den_max: u64) -> Rational {
        let num = self.below(2 * max + 1) as i64 - max as i64;
        let den = 1 + self.below(den_max) as i64;
        ratio(num, den)
    }

    /// Random rational point in the cube `[-max, max]^3`.
    pub fn point(&mut self, max: u64) -> [Rational; 3] {
        [
            self.small_rational(max, 3),
            self.small_rational(max, 3),
            self.small_rational(max, 3),
        ]
    }
}

/// Exponent tuple of a monomial; unused trailing coordinates stay zero.
pub type Expo = [u16; 3];

/// All exponent tuples in `vars` variables with total degree `<= k`, in
/// graded lexicographic order (degree ascending, within a degree the first
/// variable dominates).
pub fn monomials_up_to(k: i64, vars: usize) -> Vec<Expo> {
    let mut out = Vec::new();
    if k < 0 {
        return out;
    }
    let k = k as u16;
    for d in 0..=k {
        match vars {
            1 => out.push([d, 0, 0]),
            2 => {
                for a in (0..=d).rev() {
                    out.push([a, d - a, 0]);
                }
            }
            3 => {
                for a in (0..=d).rev() {
                    for b in (0..=(d - a)).rev() {
                        out.push([a, b, d - a - b]);
                    }
                }
            }
            _ => panic!("unsupported variable count"),
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomials() {
        assert_eq!(binomial(9, 3), 84);
        assert_eq!(binomial(3, 5), 0);
        assert_eq!(dim_pk(6, 3), 84);
        assert_eq!(dim_pk(-1, 3), 0);
        assert_eq!(dim_pk(4, 2), 15);
    }

    #[test]
    fn monomial_enumeration_is_graded() {
        let m = monomials_up_to(2, 3);
        assert_eq!(m.len(), 10);
        assert_eq!(m[0], [0, 0, 0]);
        assert_eq!(m[1], [1, 0, 0]);
        assert_eq!(m[2], [0, 1, 0]);
        assert_eq!(m[3], [0, 0, 1]);
        assert_eq!(m[4], [2, 0, 0]);
        assert_eq!(m[9], [0, 0, 2]);
    }

    #[test]
    fn rng_is_deterministic() {
        let mut a = Rng::new(7);
        let mut b = Rng::new(7);
        for _ in 0..10 {
            assert_eq!(a.next_u64(), b.next_u64());
        }
    }
}
