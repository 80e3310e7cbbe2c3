//! Dense truncated Laurent series over arbitrary-precision integers.
//!
//! A series carries an explicit precision horizon: coefficients at exponents
//! `>= precision` are *unknown*, not zero. Every binary operation computes
//! the guaranteed-correct horizon of its result rather than assuming a
//! global order; silently wrong tails are the classic q-series bug.

use crate::error::CoreError;
use crate::Result;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::sync::atomic::{AtomicI64, Ordering};

/// Global cap on series horizons produced by `dilate` (and anything else
/// that inflates precision). Exceeding the cap is an explicit error, never
/// silent truncation.
static MAX_HORIZON: AtomicI64 = AtomicI64::new(200_000);

/// Current global horizon cap (default 200 000 exponents).
pub fn max_horizon() -> i64 {
    MAX_HORIZON.load(Ordering::Relaxed)
}

/// Override the global horizon cap. Intended for frontends; series values
/// themselves are immutable and unaffected.
pub fn set_max_horizon(cap: i64) {
    MAX_HORIZON.store(cap, Ordering::Relaxed);
}

/// A truncated Laurent series `sum_{n=valuation}^{precision-1} a_n q^n`.
///
/// Invariants:
/// - nonzero series have `coeffs[0] != 0` (the coefficient at `valuation`)
///   and `coeffs.len() == precision - valuation`;
/// - the zero series is canonical: `valuation == 0`, empty `coeffs`, and
///   `precision` equal to the horizon it is known to.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LaurentSeries {
    valuation: i64,
    precision: i64,
    coeffs: Vec<BigInt>,
}

pub(crate) fn ceil_div(a: i64, b: i64) -> i64 {
    debug_assert!(b > 0);
    (a + b - 1).div_euclid(b)
}

impl LaurentSeries {
    /// Build a series from raw parts, canonicalizing leading zeros and the
    /// zero series.
    pub fn new(valuation: i64, coeffs: Vec<BigInt>, precision: i64) -> Self {
        debug_assert!(coeffs.is_empty() || valuation + coeffs.len() as i64 == precision);
        let mut s = LaurentSeries {
            valuation,
            precision,
            coeffs,
        };
        s.canonicalize();
        s
    }

    fn canonicalize(&mut self) {
        let lead = self.coeffs.iter().position(|c| !c.is_zero());
        match lead {
            None => {
                self.coeffs.clear();
                self.valuation = 0;
            }
            Some(0) => {}
            Some(k) => {
                self.coeffs.drain(..k);
                self.valuation += k as i64;
            }
        }
    }

    /// The zero series known to the given horizon.
    pub fn zero(precision: i64) -> Self {
        LaurentSeries {
            valuation: 0,
            precision,
            coeffs: Vec::new(),
        }
    }

    /// The constant series 1 known to the given horizon.
    pub fn one(precision: i64) -> Self {
        Self::monomial(0, BigInt::one(), precision)
    }

    /// `c * q^n` known to the given horizon (which must exceed `n`).
    pub fn monomial(n: i64, c: BigInt, precision: i64) -> Self {
        assert!(precision > n, "monomial exponent outside horizon");
        if c.is_zero() {
            return Self::zero(precision);
        }
        let mut coeffs = vec![BigInt::zero(); (precision - n) as usize];
        coeffs[0] = c;
        LaurentSeries {
            valuation: n,
            precision,
            coeffs,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Lowest stored exponent (0 for the zero series by convention).
    pub fn valuation(&self) -> i64 {
        self.valuation
    }

    /// Exclusive horizon: coefficients at exponents `>= precision` are unknown.
    pub fn precision(&self) -> i64 {
        self.precision
    }

    /// Coefficient at exponent `n`. Panics if `n >= precision`, because such
    /// a coefficient is unknown rather than zero.
    pub fn coeff(&self, n: i64) -> &BigInt {
        assert!(
            n < self.precision,
            "coefficient at q^{n} is beyond horizon {}",
            self.precision
        );
        static ZERO: std::sync::OnceLock<BigInt> = std::sync::OnceLock::new();
        if n < self.valuation || n - self.valuation >= self.coeffs.len() as i64 {
            ZERO.get_or_init(BigInt::zero)
        } else {
            &self.coeffs[(n - self.valuation) as usize]
        }
    }

    /// Stored coefficients, indexed from `valuation`.
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Iterator over `(exponent, coefficient)` pairs of nonzero terms.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(k, c)| (self.valuation + k as i64, c))
    }

    /// Restrict the horizon to `min(precision, new_prec)`.
    pub fn truncate(&self, new_prec: i64) -> Self {
        if new_prec >= self.precision {
            return self.clone();
        }
        let keep = (new_prec - self.valuation).max(0) as usize;
        LaurentSeries::new(
            self.valuation,
            self.coeffs.iter().take(keep).cloned().collect(),
            new_prec.min(self.valuation + keep as i64).max(new_prec),
        )
    }

    /// Multiply by `q^k` (exponent shift).
    pub fn shift(&self, k: i64) -> Self {
        LaurentSeries {
            valuation: if self.is_zero() { 0 } else { self.valuation + k },
            precision: self.precision + k,
            coeffs: self.coeffs.clone(),
        }
    }

    pub fn neg(&self) -> Self {
        LaurentSeries {
            valuation: self.valuation,
            precision: self.precision,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    /// Sum; the result is known to `min` of the horizons.
    pub fn add(&self, other: &Self) -> Self {
        let prec = self.precision.min(other.precision);
        if self.is_zero() {
            return other.truncate(prec);
        }
        if other.is_zero() {
            return self.truncate(prec);
        }
        let val = self.valuation.min(other.valuation);
        if val >= prec {
            return Self::zero(prec);
        }
        let mut coeffs = vec![BigInt::zero(); (prec - val) as usize];
        for (e, c) in self.terms() {
            if e < prec {
                coeffs[(e - val) as usize] += c;
            }
        }
        for (e, c) in other.terms() {
            if e < prec {
                coeffs[(e - val) as usize] += c;
            }
        }
        LaurentSeries::new(val, coeffs, prec)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    /// Product; the result horizon is `min(prec_a + val_b, prec_b + val_a)`.
    pub fn mul(&self, other: &Self) -> Self {
        let prec = (self.precision + other.valuation).min(other.precision + self.valuation);
        if self.is_zero() || other.is_zero() {
            return Self::zero(prec);
        }
        let val = self.valuation + other.valuation;
        if val >= prec {
            return Self::zero(prec);
        }
        let mut coeffs = vec![BigInt::zero(); (prec - val) as usize];
        // Schoolbook over nonzero terms; theta-type factors are sparse, so
        // skipping zeros matters more than asymptotics here.
        for (ea, ca) in self.terms() {
            if ea + other.valuation >= prec {
                break;
            }
            for (eb, cb) in other.terms() {
                let e = ea + eb;
                if e >= prec {
                    break;
                }
                coeffs[(e - val) as usize] += ca * cb;
            }
        }
        LaurentSeries::new(val, coeffs, prec)
    }

    pub fn scalar_mul(&self, k: &BigInt) -> Self {
        if k.is_zero() {
            return Self::zero(self.precision);
        }
        LaurentSeries {
            valuation: self.valuation,
            precision: self.precision,
            coeffs: self.coeffs.iter().map(|c| c * k).collect(),
        }
    }

    /// Multiplicative inverse up to the available precision.
    ///
    /// Requires a unit leading coefficient (all series in scope have one);
    /// anything else would leave the integers and signals a misuse. The
    /// result has valuation `-v` and precision `prec - 2v` where `v` is the
    /// argument's valuation.
    pub fn invert(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(CoreError::Usage("cannot invert the zero series".into()));
        }
        let lead = &self.coeffs[0];
        if !lead.is_one() && !(-lead).is_one() {
            return Err(CoreError::Integrality {
                lead: lead.to_string(),
                val: self.valuation,
            });
        }
        let v = self.valuation;
        let n = (self.precision - v) as usize; // known terms of the unit part
        let lead_is_one = lead.is_one();
        // Back-substitution: with a = lead*(1 + sum_{k>=1} b_k q^k),
        // c_0 = lead and c_m = -lead * sum a_k c_{m-k}, iterating only over
        // the nonzero a_k (theta-type divisors are very sparse).
        let nz: Vec<(usize, &BigInt)> = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .filter(|(_, c)| !c.is_zero())
            .collect();
        let mut inv = vec![BigInt::zero(); n];
        inv[0] = lead.clone();
        for m in 1..n {
            let mut acc = BigInt::zero();
            for &(k, ak) in &nz {
                if k > m {
                    break;
                }
                if !inv[m - k].is_zero() {
                    acc += ak * &inv[m - k];
                }
            }
            inv[m] = if lead_is_one { -acc } else { acc };
        }
        Ok(LaurentSeries::new(-v, inv, self.precision - 2 * v))
    }

    /// Substitution `q -> q^t`. The result horizon is `t*(precision-1)+1`,
    /// subject to the global cap.
    pub fn dilate(&self, t: i64) -> Result<Self> {
        if t < 1 {
            return Err(CoreError::Usage(format!("dilation factor {t} must be >= 1")));
        }
        if t == 1 {
            return Ok(self.clone());
        }
        let prec = t * (self.precision - 1) + 1;
        let cap = max_horizon();
        if prec > cap {
            return Err(CoreError::Horizon {
                requested: prec,
                cap,
            });
        }
        if self.is_zero() {
            return Ok(Self::zero(prec));
        }
        let val = t * self.valuation;
        let mut coeffs = vec![BigInt::zero(); (prec - val) as usize];
        for (e, c) in self.terms() {
            coeffs[(t * e - val) as usize] = c.clone();
        }
        Ok(LaurentSeries::new(val, coeffs, prec))
    }

    /// The unitizing operator of degree three: keeps coefficients at
    /// exponents divisible by 3, re-indexed by `n -> n/3`. The result is
    /// known to `ceil(precision / 3)`.
    pub fn u3(&self) -> Self {
        let prec = ceil_div(self.precision, 3);
        if self.is_zero() {
            return Self::zero(prec);
        }
        let val = ceil_div(self.valuation, 3);
        if val >= prec {
            return Self::zero(prec);
        }
        let mut coeffs = vec![BigInt::zero(); (prec - val) as usize];
        for (e, c) in self.terms() {
            if e.rem_euclid(3) == 0 {
                coeffs[(e / 3 - val) as usize] = c.clone();
            }
        }
        LaurentSeries::new(val, coeffs, prec)
    }

    /// Exponent of the first disagreement with `other` below the shared
    /// horizon, or `None` if the two series agree there.
    pub fn first_disagreement(&self, other: &Self) -> Option<i64> {
        let prec = self.precision.min(other.precision);
        let lo = self.valuation.min(other.valuation);
        (lo..prec).find(|&e| self.coeff(e) != other.coeff(e))
    }

    /// Exact division by an integer scalar; errors if any coefficient is
    /// not divisible.
    pub fn exact_div_scalar(&self, k: &BigInt) -> Result<Self> {
        if k.is_zero() {
            return Err(CoreError::Usage("division by zero".into()));
        }
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for (i, c) in self.coeffs.iter().enumerate() {
            let (q, r) = num_integer::Integer::div_rem(c, k);
            if !r.is_zero() {
                return Err(CoreError::Structural(format!(
                    "coefficient {c} at q^{} is not divisible by {k}",
                    self.valuation + i as i64
                )));
            }
            coeffs.push(q);
        }
        Ok(LaurentSeries {
            valuation: self.valuation,
            precision: self.precision,
            coeffs,
        })
    }
}

impl fmt::Display for LaurentSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0 + O(q^{})", self.precision);
        }
        let mut first = true;
        for (e, c) in self.terms() {
            if first {
                first = false;
                if e == 0 {
                    write!(f, "{c}")?;
                } else {
                    write!(f, "{c}*q^{e}")?;
                }
            } else if c.is_positive() {
                if e == 0 {
                    write!(f, " + {c}")?;
                } else {
                    write!(f, " + {c}*q^{e}")?;
                }
            } else {
                write!(f, " - {}*q^{e}", -c)?;
            }
        }
        write!(f, " + O(q^{})", self.precision)
    }
}

/// Serialized form: all integers as decimal strings so downstream consumers
/// never overflow a 64-bit slot.
#[derive(serde::Serialize, serde::Deserialize)]
pub struct SeriesJson {
    pub valuation: i64,
    pub precision: i64,
    pub coeffs: Vec<String>,
}

impl From<&LaurentSeries> for SeriesJson {
    fn from(s: &LaurentSeries) -> Self {
        SeriesJson {
            valuation: s.valuation,
            precision: s.precision,
            coeffs: s.coeffs.iter().map(|c| c.to_string()).collect(),
        }
    }
}

impl TryFrom<SeriesJson> for LaurentSeries {
    type Error = CoreError;
    fn try_from(j: SeriesJson) -> Result<Self> {
        let coeffs = j
            .coeffs
            .iter()
            .map(|s| {
                s.parse::<BigInt>()
                    .map_err(|e| CoreError::Malformed(format!("bad coefficient {s:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        if !coeffs.is_empty() && j.valuation + coeffs.len() as i64 != j.precision {
            return Err(CoreError::Malformed(
                "coefficient count does not match valuation/precision".into(),
            ));
        }
        Ok(LaurentSeries::new(j.valuation, coeffs, j.precision))
    }
}
