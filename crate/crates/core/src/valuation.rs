//! 3-adic valuations with an explicit infinity for zero.

use num_bigint::BigInt;
use num_traits::Zero;
use std::fmt;

/// The 3-adic valuation of an integer: the largest `a` with `3^a | n`.
///
/// `nu(0)` is infinite by convention and is represented by a dedicated
/// variant, never by a large finite value, so that comparisons against
/// finite bounds behave correctly.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Val3 {
    Finite(u64),
    Infinite,
}

impl Val3 {
    /// Valuation of an arbitrary-precision integer by exact repeated
    /// division by 3.
    pub fn of(n: &BigInt) -> Val3 {
        if n.is_zero() {
            return Val3::Infinite;
        }
        let three = BigInt::from(3);
        let mut v = 0u64;
        let mut m = n.clone();
        loop {
            let (q, r) = num_integer::Integer::div_rem(&m, &three);
            if !r.is_zero() {
                return Val3::Finite(v);
            }
            v += 1;
            m = q;
        }
    }

    /// True iff the valuation is at least `bound`.
    pub fn at_least(&self, bound: u64) -> bool {
        match self {
            Val3::Infinite => true,
            Val3::Finite(v) => *v >= bound,
        }
    }

    /// True iff the valuation equals the given finite value.
    pub fn equals(&self, v: u64) -> bool {
        matches!(self, Val3::Finite(x) if *x == v)
    }
}

impl fmt::Display for Val3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Val3::Finite(v) => write!(f, "{v}"),
            Val3::Infinite => write!(f, "inf"),
        }
    }
}

/// `3^e` as a `BigInt`.
pub fn pow3(e: u32) -> BigInt {
    BigInt::from(3).pow(e)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn valuations() {
        assert_eq!(Val3::of(&BigInt::from(0)), Val3::Infinite);
        assert_eq!(Val3::of(&BigInt::from(1)), Val3::Finite(0));
        assert_eq!(Val3::of(&BigInt::from(-2)), Val3::Finite(0));
        assert_eq!(Val3::of(&BigInt::from(45)), Val3::Finite(2));
        assert_eq!(Val3::of(&BigInt::from(-54)), Val3::Finite(3));
        assert_eq!(Val3::of(&pow3(17)), Val3::Finite(17));
    }

    #[test]
    fn infinity_compares_correctly() {
        assert!(Val3::Infinite.at_least(10_000));
        assert!(!Val3::Infinite.equals(0));
        assert!(Val3::Finite(2).at_least(2));
        assert!(!Val3::Finite(2).at_least(3));
    }
}
