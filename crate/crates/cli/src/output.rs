//! Human-readable rendering of certificates and reports.
//!
//! Coefficients from deep iterates run to thousands of digits; human output
//! elides them to `head...tail (N digits)`. JSON output always carries the
//! full decimal strings.

use triadic_core::{CertStatus, Certificate, ValuationReport};

/// Elide a decimal string beyond 32 digits.
pub fn elide(s: &str) -> String {
    let (sign, digits) = match s.strip_prefix('-') {
        Some(rest) => ("-", rest),
        None => ("", s),
    };
    if digits.len() <= 32 {
        return s.to_string();
    }
    format!(
        "{sign}{}...{} ({} digits)",
        &digits[..8],
        &digits[digits.len() - 8..],
        digits.len()
    )
}

pub fn print_certificate(cert: &Certificate) {
    let status = match cert.status {
        CertStatus::Pass => "PASS ",
        CertStatus::Fail => "FAIL ",
        CertStatus::Error => "ERROR",
    };
    let params: Vec<String> = cert
        .params
        .iter()
        .map(|(k, v)| format!("{k}={v}"))
        .collect();
    println!(
        "{status} {:40} {}  [{} ms]",
        cert.claim_id,
        params.join(" "),
        cert.elapsed_ms
    );
    if let Some(w) = &cert.witness {
        println!(
            "      witness: index {} lhs {} rhs {} {}",
            w.index,
            elide(&w.lhs),
            elide(&w.rhs),
            w.note
        );
    }
    for note in &cert.notes {
        println!("      note: {note}");
    }
    if let Some(h) = &cert.horizon_note {
        println!("      horizon: {h}");
    }
}

pub fn report_to_certificate(report: &ValuationReport, claim_id: &str) -> Certificate {
    let mut cert = Certificate::new(claim_id)
        .param("subject", &report.subject)
        .param("i_range", format!("{}..={}", report.i_range.0, report.i_range.1))
        .param("failures", report.failures.len());
    if let Some(first) = report.failures.first() {
        cert = cert.fail(triadic_core::Witness {
            index: first.j,
            lhs: format!("nu = {}", first.observed),
            rhs: format!("required >= {}", first.required),
            note: format!("at (i = {}, j = {}): {}", first.i, first.j, first.note),
        });
        for f in report.failures.iter().skip(1).take(8) {
            cert = cert.note(format!(
                "also (i = {}, j = {}): nu = {} < {}",
                f.i, f.j, f.observed, f.required
            ));
        }
    }
    cert
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn elide_keeps_short_and_trims_long() {
        assert_eq!(elide("-12345"), "-12345");
        let long = "9".repeat(100);
        let e = elide(&long);
        assert!(e.starts_with("99999999..."));
        assert!(e.ends_with("(100 digits)"));
        let neg = format!("-{long}");
        assert!(elide(&neg).starts_with("-99999999"));
    }
}
