//! Machine-readable verdicts for individual finite-order claims.
//!
//! Every series-identity certificate states its truncation horizon: at
//! finite order these checks are consistency evidence, not proofs, and an
//! honest certificate says so.

use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;

/// Verdict for one claim.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CertStatus {
    Pass,
    Fail,
    Error,
}

/// Structured counterexample: the index or exponent where a check failed,
/// with both values as decimal strings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    /// Exponent (series checks) or coefficient index (polynomial checks).
    pub index: i64,
    pub lhs: String,
    pub rhs: String,
    #[serde(default, skip_serializing_if = "String::is_empty")]
    pub note: String,
}

/// Verdict for one claim: identifier, parameters, status, optional witness,
/// and environment metadata. Field order is fixed so serialized output is
/// deterministic.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Certificate {
    pub claim_id: String,
    pub params: BTreeMap<String, String>,
    pub status: CertStatus,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub horizon_note: Option<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    pub tool_version: String,
    pub timestamp: String,
    pub elapsed_ms: u128,
}

impl Certificate {
    pub fn new(claim_id: impl Into<String>) -> Self {
        Certificate {
            claim_id: claim_id.into(),
            params: BTreeMap::new(),
            status: CertStatus::Pass,
            witness: None,
            horizon_note: None,
            notes: Vec::new(),
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
            timestamp: String::new(),
            elapsed_ms: 0,
        }
    }

    pub fn param(mut self, key: &str, value: impl fmt::Display) -> Self {
        self.params.insert(key.to_string(), value.to_string());
        self
    }

    pub fn note(mut self, note: impl Into<String>) -> Self {
        self.notes.push(note.into());
        self
    }

    /// Standard caveat attached to every finite-order series comparison.
    pub fn with_horizon(mut self, horizon: i64) -> Self {
        self.horizon_note = Some(format!(
            "checked coefficientwise to q^{} only; finite-order agreement is \
             consistency evidence, not a proof",
            horizon - 1
        ));
        self
    }

    pub fn fail(mut self, witness: Witness) -> Self {
        self.status = CertStatus::Fail;
        self.witness = Some(witness);
        self
    }

    pub fn error(mut self, message: impl Into<String>) -> Self {
        self.status = CertStatus::Error;
        self.notes.push(message.into());
        self
    }

    pub fn passed(&self) -> bool {
        self.status == CertStatus::Pass
    }

    /// Canonical JSON with the run-dependent metadata (timestamp, elapsed)
    /// removed; two runs over identical inputs must agree on this form.
    pub fn canonical_json(&self) -> serde_json::Value {
        let mut v = serde_json::to_value(self).expect("certificate serializes");
        let obj = v.as_object_mut().expect("certificate is an object");
        obj.remove("timestamp");
        obj.remove("elapsed_ms");
        v
    }
}

/// One violated valuation bound.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ValuationFailure {
    /// Row index (tables) or hat index m (bound checks).
    pub i: u32,
    /// Coefficient offset the bound applies to.
    pub j: i64,
    /// Observed 3-adic valuation, `"inf"` for a zero value.
    pub observed: String,
    /// Required lower bound (or exact value where the claim is equality).
    pub required: u64,
    #[serde(default, skip_serializing_if = "String::is_empty")]
    pub note: String,
}

/// Outcome of a sweep of 3-adic valuation bounds. Failures are data, not
/// exceptions; `status` is pass iff `failures` is empty.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ValuationReport {
    pub subject: String,
    pub i_range: (u32, u32),
    pub failures: Vec<ValuationFailure>,
    pub status: CertStatus,
}

impl ValuationReport {
    pub fn new(subject: impl Into<String>, i_range: (u32, u32)) -> Self {
        ValuationReport {
            subject: subject.into(),
            i_range,
            failures: Vec::new(),
            status: CertStatus::Pass,
        }
    }

    pub fn record(&mut self, failure: ValuationFailure) {
        self.failures.push(failure);
        self.status = CertStatus::Fail;
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}
