//! Exact truncated q-series arithmetic over arbitrary-precision integers,
//! together with the machinery needed to verify, at finite truncation order,
//! internal congruences modulo powers of 3 for the theta quotients
//!
//! ```text
//!   sum ph3(n) q^n = phi(-q^3)/phi(-q)      (3-regular overpartitions)
//!   sum ps3(n) q^n = psi(q^3)/psi(q)        (signed pod_3 partitions)
//! ```
//!
//! The library is organized around five building blocks:
//!
//! - [`series`]: dense truncated Laurent series over `BigInt`, with the
//!   theta-type constructors (`phi(-q)`, `psi(q)`, and the quotients
//!   `F`, `G`, `xi`, `zeta`, `gamma`, `delta`) and the degree-3 unitizing
//!   operator `U(sum a_n q^n) = sum a_{3n} q^n`.
//! - [`cyclo`]: series with coefficients in `Z[omega]`, `omega` a primitive
//!   cube root of unity, used for root-of-unity filtering and the Newton
//!   identity checks.
//! - [`poly`]: dense univariate polynomials over `BigInt`, the carrier for
//!   modular-equation rows and the iterate polynomials.
//! - [`modeq`]: the table of polynomials expressing `U(xi^i)` in `Z[xi]`
//!   (identically `U(zeta^i)` in `Z[zeta]`), its recurrence, series
//!   certification, and the 3-adic valuation bounds.
//! - [`engine`]: the polynomial iteration behind the congruence families,
//!   hat-difference bound checks, and direct brute-force congruence scans
//!   on coefficient data.
//!
//! Everything is exact: there is no floating-point mode and no modular
//! coefficient ring. All series and polynomial values are immutable;
//! operations are pure functions.

pub mod certificate;
pub mod cyclo;
pub mod engine;
pub mod error;
pub mod modeq;
pub mod poly;
pub mod series;
pub mod theta;
pub mod ustream;
pub mod valuation;

pub use certificate::{CertStatus, Certificate, ValuationFailure, ValuationReport, Witness};
pub use cyclo::{CycloCoeff, CycloSeries};
pub use error::CoreError;
pub use modeq::{ModEqTable, Provenance, Side};
pub use poly::IntPoly;
pub use series::{LaurentSeries, SeriesJson};
pub use theta::{named_series, pochhammer_power, theta_f, SeriesName, Sign};
pub use valuation::Val3;

/// Result alias used throughout the crate.
pub type Result<T> = std::result::Result<T, CoreError>;
