//! Theta-type series constructors.
//!
//! Everything in scope is assembled from two specializations of Ramanujan's
//! theta function `f(a,b) = sum_k a^{k(k+1)/2} b^{k(k-1)/2}`:
//!
//! ```text
//!   phi(q) = f(q, q)   = sum q^{k^2}
//!   psi(q) = f(q, q^3) = sum_{k>=0} q^{k(k+1)/2}
//! ```
//!
//! together with q-Pochhammer powers `(q^d; q^d)_inf^r` and the named
//! quotients used by the congruence machinery.

use crate::error::CoreError;
use crate::series::LaurentSeries;
use crate::Result;
use num_bigint::BigInt;
use num_traits::Zero;

/// Sign flag for a theta-function argument `+-q^s`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    fn pow_is_negative(self, e: i64) -> bool {
        matches!(self, Sign::Minus) && e % 2 != 0
    }
}

/// `(q^delta; q^delta)_inf^r` truncated at `prec`.
///
/// The base product is expanded by Euler's pentagonal number theorem
/// (exact and sparse); integer powers use binary powering, and negative
/// powers invert the positive power (the leading coefficient is 1, so
/// inversion stays integral).
pub fn pochhammer_power(delta: i64, r: i64, prec: i64) -> Result<LaurentSeries> {
    if delta < 1 {
        return Err(CoreError::Usage(format!("delta = {delta} must be >= 1")));
    }
    if prec < 1 {
        return Err(CoreError::Usage(format!("prec = {prec} must be >= 1")));
    }
    if r == 0 {
        return Ok(LaurentSeries::one(prec));
    }
    let base = pentagonal(delta, prec);
    let pos = pow_series(&base, r.unsigned_abs(), prec);
    if r > 0 {
        Ok(pos)
    } else {
        pos.invert()
    }
}

/// `(q^d; q^d)_inf = sum_k (-1)^k q^{d k(3k-1)/2}` over all integers k.
fn pentagonal(d: i64, prec: i64) -> LaurentSeries {
    let mut coeffs = vec![BigInt::zero(); prec as usize];
    let mut k = 0i64;
    loop {
        let e1 = d * k * (3 * k - 1) / 2;
        let e2 = d * k * (3 * k + 1) / 2;
        if e1 >= prec && e2 >= prec && k > 0 {
            break;
        }
        let sign = if k % 2 == 0 { 1 } else { -1 };
        if e1 < prec {
            coeffs[e1 as usize] += sign;
        }
        if k > 0 && e2 < prec {
            coeffs[e2 as usize] += sign;
        }
        k += 1;
    }
    LaurentSeries::new(0, coeffs, prec)
}

fn pow_series(base: &LaurentSeries, mut e: u64, prec: i64) -> LaurentSeries {
    let mut result = LaurentSeries::one(prec);
    let mut p = base.clone();
    while e > 0 {
        if e & 1 == 1 {
            result = result.mul(&p);
        }
        e >>= 1;
        if e > 0 {
            p = p.mul(&p);
        }
    }
    result.truncate(prec)
}

/// Ramanujan's theta function at monomial arguments `a = sign_a q^s`,
/// `b = sign_b q^t`:
///
/// ```text
///   f(a, b) = sum_{k in Z} sign_a^{k(k+1)/2} sign_b^{k(k-1)/2}
///                          q^{s k(k+1)/2 + t k(k-1)/2}
/// ```
///
/// Requires `s + t >= 1` so that `|ab| < 1` formally.
pub fn theta_f(s: i64, sign_a: Sign, t: i64, sign_b: Sign, prec: i64) -> Result<LaurentSeries> {
    if s < 0 || t < 0 || s + t < 1 {
        return Err(CoreError::Usage(format!(
            "theta_f requires s, t >= 0 and s + t >= 1 (got s = {s}, t = {t})"
        )));
    }
    if prec < 1 {
        return Err(CoreError::Usage(format!("prec = {prec} must be >= 1")));
    }
    let mut coeffs = vec![BigInt::zero(); prec as usize];
    let mut add_term = |k: i64| -> bool {
        let tri_up = k * (k + 1) / 2;
        let tri_dn = k * (k - 1) / 2;
        let e = s * tri_up + t * tri_dn;
        if e >= prec {
            return false;
        }
        debug_assert!(e >= 0);
        let neg = sign_a.pow_is_negative(tri_up) ^ sign_b.pow_is_negative(tri_dn);
        if neg {
            coeffs[e as usize] -= 1;
        } else {
            coeffs[e as usize] += 1;
        }
        true
    };
    // Exponents are eventually strictly increasing in |k| in both
    // directions, so stop once both sides fall outside the horizon.
    let mut k = 0i64;
    loop {
        let up = add_term(k);
        let dn = if k > 0 { add_term(-k) } else { true };
        if !up && !dn && k > 0 {
            break;
        }
        k += 1;
    }
    Ok(LaurentSeries::new(0, coeffs, prec))
}

/// `phi(-q) = f(-q, -q) = 1 + 2 sum_{k>=1} (-1)^k q^{k^2}`.
pub fn phi_neg(prec: i64) -> LaurentSeries {
    theta_f(1, Sign::Minus, 1, Sign::Minus, prec).expect("phi(-q) arguments are valid")
}

/// `psi(q) = f(q, q^3) = sum_{k>=0} q^{k(k+1)/2}`.
pub fn psi(prec: i64) -> LaurentSeries {
    theta_f(1, Sign::Plus, 3, Sign::Plus, prec).expect("psi(q) arguments are valid")
}

/// The named series of the congruence machinery.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SeriesName {
    /// `phi(-q)`
    PhiNeg,
    /// `psi(q)`
    Psi,
    /// `F = phi(-q^3)/phi(-q)`, the ph3 generating function
    F,
    /// `G = psi(q^3)/psi(q)`, the ps3 generating function
    G,
    /// `xi = phi(-q^9)/phi(-q)`
    Xi,
    /// `zeta = q psi(q^9)/psi(q)`
    Zeta,
    /// `gamma = F(q)/F(q^9)`
    Gamma,
    /// `delta = q^-2 G(q)/G(q^9)`
    Delta,
}

impl SeriesName {
    pub fn parse(name: &str) -> Option<SeriesName> {
        Some(match name {
            "phi_neg" => SeriesName::PhiNeg,
            "psi" => SeriesName::Psi,
            "F" | "f" => SeriesName::F,
            "G" | "g" => SeriesName::G,
            "xi" => SeriesName::Xi,
            "zeta" => SeriesName::Zeta,
            "gamma" => SeriesName::Gamma,
            "delta" => SeriesName::Delta,
            _ => return None,
        })
    }
}

/// `base(q^d) / base(q)` at precision `prec`, computing the numerator from
/// a dilation of an expansion just long enough that the dilated horizon
/// covers `prec`.
fn dilated_quotient(base: fn(i64) -> LaurentSeries, d: i64, prec: i64) -> Result<LaurentSeries> {
    let short = base(crate::series::ceil_div(prec - 1, d) + 1).dilate(d)?;
    let inv = base(prec).invert()?;
    Ok(short.mul(&inv).truncate(prec))
}

/// One of the eight named series, at precision exactly `prec`.
///
/// `F` and `G` have valuation 0 and constant term 1; `xi` has valuation 0;
/// `zeta` has valuation 1; `gamma` has valuation 0; `delta` has valuation -2.
pub fn named_series(name: SeriesName, prec: i64) -> Result<LaurentSeries> {
    if prec < 1 {
        return Err(CoreError::Usage(format!("prec = {prec} must be >= 1")));
    }
    match name {
        SeriesName::PhiNeg => Ok(phi_neg(prec)),
        SeriesName::Psi => Ok(psi(prec)),
        SeriesName::F => dilated_quotient(phi_neg, 3, prec),
        SeriesName::G => dilated_quotient(psi, 3, prec),
        SeriesName::Xi => dilated_quotient(phi_neg, 9, prec),
        SeriesName::Zeta => Ok(dilated_quotient(psi, 9, prec)?.shift(1).truncate(prec)),
        SeriesName::Gamma => {
            let f = named_series(SeriesName::F, prec)?;
            let f9 = named_series(SeriesName::F, crate::series::ceil_div(prec - 1, 9) + 1)?.dilate(9)?;
            Ok(f.mul(&f9.invert()?).truncate(prec))
        }
        SeriesName::Delta => {
            let g = named_series(SeriesName::G, prec + 2)?;
            let g9 = named_series(SeriesName::G, crate::series::ceil_div(prec + 1, 9) + 1)?.dilate(9)?;
            Ok(g.mul(&g9.invert()?).shift(-2).truncate(prec))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    /// Naive product oracle: multiply out `prod_{k=1..} (1 - q^{d k})^r`
    /// factor by factor, entirely independently of the pentagonal route.
    fn naive_pochhammer(d: i64, r: u32, prec: i64) -> LaurentSeries {
        let mut acc = LaurentSeries::one(prec);
        for _ in 0..r {
            let mut k = 1;
            while d * k < prec {
                let factor = LaurentSeries::new(
                    0,
                    {
                        let mut v = vec![BigInt::zero(); prec as usize];
                        v[0] = BigInt::one();
                        v[(d * k) as usize] = BigInt::from(-1);
                        v
                    },
                    prec,
                );
                acc = acc.mul(&factor);
                k += 1;
            }
        }
        acc
    }

    fn coeffs_up_to(s: &LaurentSeries, n: i64) -> Vec<i64> {
        (0..=n).map(|e| i64::try_from(s.coeff(e)).unwrap()).collect()
    }

    #[test]
    fn pochhammer_pentagonal_expansion() {
        let p = pochhammer_power(1, 1, 8).unwrap();
        assert_eq!(coeffs_up_to(&p, 7), vec![1, -1, -1, 0, 0, 1, 0, 1]);
        assert_eq!(p, naive_pochhammer(1, 1, 8));
    }

    #[test]
    fn pochhammer_zeroth_power_and_dilation() {
        assert_eq!(pochhammer_power(1, 0, 5).unwrap(), LaurentSeries::one(5));
        let p = pochhammer_power(3, 1, 4).unwrap();
        assert_eq!(coeffs_up_to(&p, 3), vec![1, 0, 0, -1]);
    }

    #[test]
    fn pochhammer_matches_naive_product() {
        for (d, r) in [(1i64, 2i64), (2, 1), (1, -1), (2, -2), (3, 2)] {
            let fast = pochhammer_power(d, r, 60).unwrap();
            let naive = naive_pochhammer(d, r.unsigned_abs() as u32, 60);
            let naive = if r < 0 { naive.invert().unwrap() } else { naive };
            assert_eq!(fast.first_disagreement(&naive), None, "d={d} r={r}");
        }
    }

    #[test]
    fn pochhammer_rejects_bad_args() {
        assert!(pochhammer_power(0, 1, 5).is_err());
        assert!(pochhammer_power(1, 1, 0).is_err());
    }

    #[test]
    fn theta_specializations() {
        // phi(q): squares with multiplicity 2
        let phi = theta_f(1, Sign::Plus, 1, Sign::Plus, 10).unwrap();
        assert_eq!(coeffs_up_to(&phi, 9), vec![1, 2, 0, 0, 2, 0, 0, 0, 0, 2]);
        // psi(q): triangular numbers
        let ps = psi(11);
        assert_eq!(coeffs_up_to(&ps, 10), vec![1, 1, 0, 1, 0, 0, 1, 0, 0, 0, 1]);
        // phi(-q): alternating signs on squares
        let pn = phi_neg(10);
        assert_eq!(coeffs_up_to(&pn, 9), vec![1, -2, 0, 0, 2, 0, 0, 0, 0, -2]);
    }

    #[test]
    fn theta_rejects_s_t_zero() {
        assert!(theta_f(0, Sign::Plus, 0, Sign::Plus, 5).is_err());
    }

    /// Overpartition oracle: dynamic programming on the exact product
    /// `prod_{3 !| j} (1 + q^j)/(1 - q^j)`, counting 3-regular
    /// overpartitions directly.
    fn ph3_by_counting(n_max: usize) -> Vec<BigInt> {
        let mut c = vec![BigInt::zero(); n_max + 1];
        c[0] = BigInt::one();
        for j in 1..=n_max {
            if j % 3 == 0 {
                continue;
            }
            for e in (j..=n_max).rev() {
                let add = c[e - j].clone();
                c[e] += add;
            }
            for e in j..=n_max {
                let add = c[e - j].clone();
                c[e] += add;
            }
        }
        c
    }

    #[test]
    fn named_series_shapes() {
        assert_eq!(named_series(SeriesName::Zeta, 3).unwrap().valuation(), 1);
        assert_eq!(named_series(SeriesName::Delta, 3).unwrap().valuation(), -2);
        assert_eq!(named_series(SeriesName::Gamma, 3).unwrap().valuation(), 0);
        let f = named_series(SeriesName::F, 5).unwrap();
        assert_eq!(f.valuation(), 0);
        assert!(f.coeff(0).is_one());
        let xi = named_series(SeriesName::Xi, 4).unwrap();
        assert_eq!(xi.valuation(), 0);
        for name in [
            SeriesName::PhiNeg,
            SeriesName::Psi,
            SeriesName::F,
            SeriesName::G,
            SeriesName::Xi,
            SeriesName::Zeta,
            SeriesName::Gamma,
            SeriesName::Delta,
        ] {
            assert_eq!(named_series(name, 37).unwrap().precision(), 37);
        }
    }

    #[test]
    fn f_counts_3_regular_overpartitions() {
        let f = named_series(SeriesName::F, 24).unwrap();
        let oracle = ph3_by_counting(23);
        for n in 0..24 {
            assert_eq!(f.coeff(n), &oracle[n as usize], "ph3({n})");
        }
        // the two 3-regular overpartitions of 1 by hand: 1 and overlined 1
        assert_eq!(f.coeff(1), &BigInt::from(2));
    }

    #[test]
    fn triple_product_consistency() {
        // phi(-q) = (q;q)^2 / (q^2;q^2), psi(q) = (q^2;q^2)^2 / (q;q)
        let prec = 200;
        let lhs = phi_neg(prec);
        let rhs = pochhammer_power(1, 2, prec)
            .unwrap()
            .mul(&pochhammer_power(2, -1, prec).unwrap());
        assert_eq!(lhs.first_disagreement(&rhs), None);
        let lhs = psi(prec);
        let rhs = pochhammer_power(2, 2, prec)
            .unwrap()
            .mul(&pochhammer_power(1, -1, prec).unwrap());
        assert_eq!(lhs.first_disagreement(&rhs), None);
    }

    #[test]
    fn gamma_delta_ratio_identities() {
        // gamma * xi(q^3) = xi and delta * zeta(q^3) = zeta
        let prec = 120;
        let xi = named_series(SeriesName::Xi, prec).unwrap();
        let gamma = named_series(SeriesName::Gamma, prec).unwrap();
        let xi3 = named_series(SeriesName::Xi, (prec - 1) / 3 + 1)
            .unwrap()
            .dilate(3)
            .unwrap();
        assert_eq!(gamma.mul(&xi3).first_disagreement(&xi), None);
        let zeta = named_series(SeriesName::Zeta, prec).unwrap();
        let delta = named_series(SeriesName::Delta, prec).unwrap();
        let zeta3 = named_series(SeriesName::Zeta, (prec - 1) / 3 + 1)
            .unwrap()
            .dilate(3)
            .unwrap();
        assert_eq!(delta.mul(&zeta3).first_disagreement(&zeta), None);
    }
}
