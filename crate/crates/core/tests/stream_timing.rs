//! Manual timing probe for the streaming kernel (ignored by default).
//! Run with: cargo test -p triadic-core --test stream_timing -- --ignored --nocapture

use std::time::Instant;
use triadic_core::engine::{build_hats, build_phi, hat_bound_check, Family};
use triadic_core::modeq::{base_polys, ModEqTable, Side};

#[test]
#[ignore]
fn phi_chain_timings() {
    let t0 = Instant::now();
    let table = ModEqTable::build(Side::Xi, base_polys(), 200).unwrap();
    println!("table to 200: {:?}", t0.elapsed());

    for m_max in [7u32, 8, 9] {
        let t = Instant::now();
        let seq = build_phi(Family::Ph3, m_max, &table).unwrap();
        let top = seq.poly(m_max).unwrap();
        println!(
            "phi to M={m_max}: {:?} (deg {}, max coeff bits {})",
            t.elapsed(),
            top.degree().unwrap(),
            top.max_coeff_bits()
        );
    }

    let seq = build_phi(Family::Ph3, 9, &table).unwrap();
    let t = Instant::now();
    let hats = build_hats(&seq, 3, &table).unwrap();
    println!("hats to m=3 (incl. cross-checks): {:?}", t.elapsed());
    let t = Instant::now();
    let report = hat_bound_check(&hats, 3).unwrap();
    println!("bounds m<=3: {:?} pass={}", t.elapsed(), report.passed());
}
