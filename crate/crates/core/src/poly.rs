//! Dense univariate polynomials over arbitrary-precision integers.
//!
//! These serve as `Z[xi]` and `Z[zeta]`: the two indeterminates share every
//! polynomial identity in scope, so a single representation carries both.

use crate::error::CoreError;
use crate::series::LaurentSeries;
use crate::Result;
use num_bigint::BigInt;
use num_traits::{One, Zero};

/// A polynomial `sum_j coeffs[j] x^j` with the leading coefficient nonzero
/// (the zero polynomial has an empty coefficient vector).
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPoly {
            coeffs: vec![BigInt::one()],
        }
    }

    /// `x` as a polynomial.
    pub fn x() -> Self {
        IntPoly {
            coeffs: vec![BigInt::zero(), BigInt::one()],
        }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| c.into()).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, j: usize) -> BigInt {
        self.coeffs.get(j).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Lowest degree with a nonzero coefficient; usage error on the zero
    /// polynomial.
    pub fn min_degree(&self) -> Result<usize> {
        self.coeffs
            .iter()
            .position(|c| !c.is_zero())
            .ok_or_else(|| CoreError::Usage("min_degree of the zero polynomial".into()))
    }

    /// Lowest *positive* degree with a nonzero coefficient, if any.
    pub fn min_positive_degree(&self) -> Option<usize> {
        self.coeffs
            .iter()
            .enumerate()
            .skip(1)
            .find(|(_, c)| !c.is_zero())
            .map(|(j, _)| j)
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = vec![BigInt::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        IntPoly::new(coeffs)
    }

    pub fn neg(&self) -> Self {
        IntPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scalar_mul(&self, k: &BigInt) -> Self {
        if k.is_zero() {
            return IntPoly::zero();
        }
        IntPoly {
            coeffs: self.coeffs.iter().map(|c| c * k).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        IntPoly::new(coeffs)
    }

    /// Divide by `x^k`; structural error if any nonzero coefficient sits
    /// below degree `k`.
    pub fn shift_down(&self, k: usize) -> Result<Self> {
        for (j, c) in self.coeffs.iter().take(k).enumerate() {
            if !c.is_zero() {
                return Err(CoreError::Structural(format!(
                    "shift_down({k}) would drop nonzero coefficient {c} at degree {j}"
                )));
            }
        }
        Ok(IntPoly {
            coeffs: self.coeffs.iter().skip(k).cloned().collect(),
        })
    }

    /// Horner evaluation at a series argument with valuation >= 0. The
    /// result inherits the precision of `x`.
    pub fn eval_series(&self, x: &LaurentSeries) -> LaurentSeries {
        debug_assert!(x.is_zero() || x.valuation() >= 0);
        let mut acc = LaurentSeries::zero(x.precision());
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(x).truncate(x.precision());
            if !c.is_zero() {
                acc = acc.add(&LaurentSeries::monomial(0, c.clone(), x.precision()));
            }
        }
        acc.truncate(x.precision())
    }

    /// Value at `x = 1`: the coefficient sum.
    pub fn eval_at_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    /// Largest coefficient magnitude in bits, for arithmetic sizing.
    pub fn max_coeff_bits(&self) -> u64 {
        self.coeffs.iter().map(|c| c.bits()).max().unwrap_or(0)
    }

    pub fn to_decimal_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(|c| c.to_string()).collect()
    }

    pub fn from_decimal_strings(strings: &[String]) -> Result<Self> {
        let coeffs = strings
            .iter()
            .map(|s| {
                s.parse::<BigInt>()
                    .map_err(|e| CoreError::Malformed(format!("bad coefficient {s:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(IntPoly::new(coeffs))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn square_of_cubic() {
        // (x - 3x^2 + 3x^3)^2, multiplied out by hand
        let p = IntPoly::from_i64(&[0, 1, -3, 3]);
        let sq = p.mul(&p);
        assert_eq!(sq, IntPoly::from_i64(&[0, 0, 1, -6, 15, -18, 9]));
    }

    #[test]
    fn ring_identities() {
        let p = IntPoly::from_i64(&[4, -1, 0, 7]);
        assert_eq!(p.mul(&IntPoly::one()), p);
        assert!(p.sub(&p).is_zero());
    }

    #[test]
    fn min_degree_cases() {
        assert_eq!(IntPoly::from_i64(&[0, -2, 9]).min_degree().unwrap(), 1);
        assert_eq!(IntPoly::one().min_degree().unwrap(), 0);
        assert!(IntPoly::zero().min_degree().is_err());
        assert_eq!(IntPoly::from_i64(&[5, 0, 3]).min_positive_degree(), Some(2));
        assert_eq!(IntPoly::from_i64(&[5]).min_positive_degree(), None);
    }

    #[test]
    fn eval_series_degenerate_cases() {
        let x = LaurentSeries::new(0, vec![1.into(), 2.into(), 3.into()], 3);
        assert!(IntPoly::zero().eval_series(&x).is_zero());
        assert_eq!(IntPoly::x().eval_series(&x), x);
    }

    #[test]
    fn shift_down_checks_low_coeffs() {
        let p = IntPoly::from_i64(&[0, 1, -3, 3]);
        assert_eq!(p.shift_down(1).unwrap(), IntPoly::from_i64(&[1, -3, 3]));
        assert!(IntPoly::from_i64(&[1, 1]).shift_down(1).is_err());
    }

    /// Naive convolution oracle, independent of `IntPoly::mul`'s zero
    /// skipping.
    fn naive_mul(a: &[i64], b: &[i64]) -> Vec<BigInt> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
        for i in 0..a.len() {
            for j in 0..b.len() {
                out[i + j] += BigInt::from(a[i]) * BigInt::from(b[j]);
            }
        }
        out
    }

    proptest! {
        #[test]
        fn mul_matches_naive_convolution(
            a in proptest::collection::vec(-50i64..50, 0..12),
            b in proptest::collection::vec(-50i64..50, 0..12),
        ) {
            let p = IntPoly::from_i64(&a).mul(&IntPoly::from_i64(&b));
            prop_assert_eq!(p, IntPoly::new(naive_mul(&a, &b)));
        }

        #[test]
        fn eval_series_is_ring_hom(
            a in proptest::collection::vec(-9i64..9, 0..6),
            b in proptest::collection::vec(-9i64..9, 0..6),
            xv in proptest::collection::vec(-5i64..5, 8),
        ) {
            let p = IntPoly::from_i64(&a);
            let q = IntPoly::from_i64(&b);
            let x = LaurentSeries::new(0, xv.iter().map(|&c| c.into()).collect(), 8);
            let lhs = p.mul(&q).eval_series(&x);
            let rhs = p.eval_series(&x).mul(&q.eval_series(&x)).truncate(8);
            prop_assert_eq!(lhs.first_disagreement(&rhs), None);
            let lhs = p.add(&q).eval_series(&x);
            let rhs = p.eval_series(&x).add(&q.eval_series(&x));
            prop_assert_eq!(lhs.first_disagreement(&rhs), None);
        }
    }
}
