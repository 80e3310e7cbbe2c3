//! Series with coefficients in `Z[omega]`, `omega` a primitive cube root
//! of unity (`omega^2 = -1 - omega`).
//!
//! These carry the twisted series `f(omega^k q)` used to verify
//! root-of-unity filtering and the Newton-identity scaffolding.

use crate::error::CoreError;
use crate::series::LaurentSeries;
use crate::Result;
use num_bigint::BigInt;
use num_traits::Zero;

/// An element `a + b omega` of `Z[omega]`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CycloCoeff {
    pub re: BigInt,
    pub om: BigInt,
}

impl CycloCoeff {
    pub fn new(re: impl Into<BigInt>, om: impl Into<BigInt>) -> Self {
        CycloCoeff {
            re: re.into(),
            om: om.into(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.om.is_zero()
    }

    fn add(&self, other: &Self) -> Self {
        CycloCoeff {
            re: &self.re + &other.re,
            om: &self.om + &other.om,
        }
    }

    fn neg(&self) -> Self {
        CycloCoeff {
            re: -&self.re,
            om: -&self.om,
        }
    }

    /// `(a + b w)(c + d w) = ac - bd + (ad + bc - bd) w` under `w^2 = -1 - w`.
    fn mul(&self, other: &Self) -> Self {
        let ac = &self.re * &other.re;
        let bd = &self.om * &other.om;
        let ad = &self.re * &other.om;
        let bc = &self.om * &other.re;
        CycloCoeff {
            re: ac - &bd,
            om: ad + bc - bd,
        }
    }

    /// `a * omega^k` for `k` in `{0, 1, 2}`.
    fn times_omega_pow(value: &BigInt, k: u8) -> Self {
        match k {
            0 => CycloCoeff::new(value.clone(), BigInt::zero()),
            1 => CycloCoeff::new(BigInt::zero(), value.clone()),
            2 => CycloCoeff::new(-value, -value),
            _ => unreachable!("omega exponent is reduced mod 3"),
        }
    }
}

/// Truncated Laurent series over `Z[omega]`, same precision semantics as
/// [`LaurentSeries`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycloSeries {
    valuation: i64,
    precision: i64,
    coeffs: Vec<CycloCoeff>,
}

impl CycloSeries {
    pub fn zero(precision: i64) -> Self {
        CycloSeries {
            valuation: 0,
            precision,
            coeffs: Vec::new(),
        }
    }

    fn new(valuation: i64, coeffs: Vec<CycloCoeff>, precision: i64) -> Self {
        let mut s = CycloSeries {
            valuation,
            precision,
            coeffs,
        };
        let lead = s.coeffs.iter().position(|c| !c.is_zero());
        match lead {
            None => {
                s.coeffs.clear();
                s.valuation = 0;
            }
            Some(0) => {}
            Some(k) => {
                s.coeffs.drain(..k);
                s.valuation += k as i64;
            }
        }
        s
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn valuation(&self) -> i64 {
        self.valuation
    }

    pub fn precision(&self) -> i64 {
        self.precision
    }

    pub fn coeff(&self, n: i64) -> CycloCoeff {
        assert!(n < self.precision, "coefficient beyond horizon");
        if n < self.valuation || n - self.valuation >= self.coeffs.len() as i64 {
            CycloCoeff::default()
        } else {
            self.coeffs[(n - self.valuation) as usize].clone()
        }
    }

    fn terms(&self) -> impl Iterator<Item = (i64, &CycloCoeff)> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(k, c)| (self.valuation + k as i64, c))
    }

    /// Embed an integer series (omega-component zero throughout).
    pub fn embed(s: &LaurentSeries) -> Self {
        CycloSeries {
            valuation: s.valuation(),
            precision: s.precision(),
            coeffs: s
                .coeffs()
                .iter()
                .map(|c| CycloCoeff::new(c.clone(), BigInt::zero()))
                .collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let prec = self.precision.min(other.precision);
        if self.is_zero() && other.is_zero() {
            return Self::zero(prec);
        }
        let val = match (self.is_zero(), other.is_zero()) {
            (false, false) => self.valuation.min(other.valuation),
            (false, true) => self.valuation,
            (true, false) => other.valuation,
            (true, true) => unreachable!(),
        };
        if val >= prec {
            return Self::zero(prec);
        }
        let mut coeffs = vec![CycloCoeff::default(); (prec - val) as usize];
        for (e, c) in self.terms().chain(other.terms()) {
            if e < prec {
                let slot = &mut coeffs[(e - val) as usize];
                *slot = slot.add(c);
            }
        }
        CycloSeries::new(val, coeffs, prec)
    }

    pub fn neg(&self) -> Self {
        CycloSeries {
            valuation: self.valuation,
            precision: self.precision,
            coeffs: self.coeffs.iter().map(|c| c.neg()).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let prec = (self.precision + other.valuation).min(other.precision + self.valuation);
        if self.is_zero() || other.is_zero() {
            return Self::zero(prec);
        }
        let val = self.valuation + other.valuation;
        if val >= prec {
            return Self::zero(prec);
        }
        let mut coeffs = vec![CycloCoeff::default(); (prec - val) as usize];
        for (ea, ca) in self.terms() {
            if ea + other.valuation >= prec {
                break;
            }
            for (eb, cb) in other.terms() {
                let e = ea + eb;
                if e >= prec {
                    break;
                }
                let slot = &mut coeffs[(e - val) as usize];
                *slot = slot.add(&ca.mul(cb));
            }
        }
        CycloSeries::new(val, coeffs, prec)
    }

    /// True iff every coefficient has zero omega-component.
    pub fn is_rational(&self) -> bool {
        self.coeffs.iter().all(|c| c.om.is_zero())
    }

    /// Project to an integer series; errors if any omega-component survives.
    pub fn into_laurent(&self) -> Result<LaurentSeries> {
        for (e, c) in self.terms() {
            if !c.om.is_zero() {
                return Err(CoreError::Structural(format!(
                    "residual omega-component {} at q^{e}",
                    c.om
                )));
            }
        }
        Ok(LaurentSeries::new(
            self.valuation,
            self.coeffs.iter().map(|c| c.re.clone()).collect(),
            self.precision,
        ))
    }

    /// Exact division of every coefficient by an integer.
    pub fn exact_div_scalar(&self, k: &BigInt) -> Result<Self> {
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for (i, c) in self.coeffs.iter().enumerate() {
            let (qr, rr) = num_integer::Integer::div_rem(&c.re, k);
            let (qo, ro) = num_integer::Integer::div_rem(&c.om, k);
            if !rr.is_zero() || !ro.is_zero() {
                return Err(CoreError::Structural(format!(
                    "coefficient at q^{} is not divisible by {k}",
                    self.valuation + i as i64
                )));
            }
            coeffs.push(CycloCoeff { re: qr, om: qo });
        }
        Ok(CycloSeries {
            valuation: self.valuation,
            precision: self.precision,
            coeffs,
        })
    }
}

/// The twist `f(omega^k q)`: coefficient at `q^n` becomes `a_n omega^{kn}`.
pub fn twist(s: &LaurentSeries, k: u8) -> CycloSeries {
    assert!(k < 3, "twist exponent must be 0, 1 or 2");
    let coeffs = s
        .coeffs()
        .iter()
        .enumerate()
        .map(|(i, c)| {
            let e = s.valuation() + i as i64;
            CycloCoeff::times_omega_pow(c, ((k as i64 * e).rem_euclid(3)) as u8)
        })
        .collect();
    CycloSeries {
        valuation: s.valuation(),
        precision: s.precision(),
        coeffs,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ls(val: i64, coeffs: &[i64], prec: i64) -> LaurentSeries {
        LaurentSeries::new(val, coeffs.iter().map(|&c| c.into()).collect(), prec)
    }

    #[test]
    fn twist_examples() {
        let s = ls(0, &[7, -2, 5], 3);
        let t0 = twist(&s, 0);
        assert_eq!(t0, CycloSeries::embed(&s));
        let q = ls(1, &[1], 2);
        assert_eq!(twist(&q, 1).coeff(1), CycloCoeff::new(0, 1));
        let q3 = ls(3, &[1], 4);
        assert_eq!(twist(&q3, 1).coeff(3), CycloCoeff::new(1, 0));
        // omega^2 representation: -1 - omega
        let q2 = ls(2, &[1], 3);
        assert_eq!(twist(&q2, 1).coeff(2), CycloCoeff::new(-1, -1));
    }

    #[test]
    fn embedding_commutes_with_ops() {
        let a = ls(0, &[1, -2, 3, 0, 4], 5);
        let b = ls(0, &[2, 1, 0, -1, 5], 5);
        assert_eq!(
            CycloSeries::embed(&a).mul(&CycloSeries::embed(&b)),
            CycloSeries::embed(&a.mul(&b))
        );
        assert_eq!(
            CycloSeries::embed(&a).add(&CycloSeries::embed(&b)),
            CycloSeries::embed(&a.add(&b))
        );
    }

    #[test]
    fn root_of_unity_filtering() {
        // dilate(u3(f), 3) = (1/3) sum_k twist(f, k), exactly in Z[omega].
        let f = ls(0, &[3, 1, -4, 6, 0, 2, -7, 5, 9, -1, 0, 8], 12);
        let total = twist(&f, 0).add(&twist(&f, 1)).add(&twist(&f, 2));
        let filtered = total.exact_div_scalar(&BigInt::from(3)).unwrap();
        let expected = CycloSeries::embed(&f.u3().dilate(3).unwrap());
        let prec = filtered.precision().min(expected.precision());
        for e in 0..prec {
            assert_eq!(filtered.coeff(e), expected.coeff(e), "exponent {e}");
        }
    }

    proptest! {
        // Ring-axiom spot checks under omega^2 = -1 - omega.
        #[test]
        fn cyclo_mul_associates_distributes(
            a in (-9i64..9, -9i64..9),
            b in (-9i64..9, -9i64..9),
            c in (-9i64..9, -9i64..9),
        ) {
            let x = CycloCoeff::new(a.0, a.1);
            let y = CycloCoeff::new(b.0, b.1);
            let z = CycloCoeff::new(c.0, c.1);
            prop_assert_eq!(x.mul(&y).mul(&z), x.mul(&y.mul(&z)));
            prop_assert_eq!(x.mul(&y.add(&z)), x.mul(&y).add(&x.mul(&z)));
            prop_assert_eq!(x.mul(&y), y.mul(&x));
        }

        #[test]
        fn filtering_on_random_series(
            coeffs in proptest::collection::vec(-20i64..20, 30),
        ) {
            let f = ls(0, &coeffs, 30);
            let total = twist(&f, 0).add(&twist(&f, 1)).add(&twist(&f, 2));
            prop_assert!(total.is_rational());
            let filtered = total.exact_div_scalar(&BigInt::from(3)).unwrap();
            let expected = CycloSeries::embed(&f.u3().dilate(3).unwrap());
            let prec = filtered.precision().min(expected.precision());
            for e in 0..prec {
                prop_assert_eq!(filtered.coeff(e), expected.coeff(e));
            }
        }
    }
}
