//! A small differential run across all strata.
//!
//! `cargo run --release --example fuzz_harness -- 300 7`

use cyclic_psd::{fuzz_report, FuzzConfig};

fn main() -> cyclic_psd::Result<()> {
    let mut args = std::env::args().skip(1);
    let count = args.next().and_then(|s| s.parse().ok()).unwrap_or(90);
    let seed = args.next().and_then(|s| s.parse().ok()).unwrap_or(0);
    let cfg = FuzzConfig {
        sample_count: count,
        seed,
        pinned: vec![cyclic_psd::CyclicParams::parse("1/2", "-3", "0", "0")?],
        ..FuzzConfig::default()
    };
    let report = fuzz_report(&cfg)?;
    for r in report.records.iter().filter(|r| !r.false_psd.is_empty()).take(5) {
        println!("false PSD from {:?} at {} ({})", r.false_psd, r.params, r.stratum);
    }
    println!("{}", serde_json::to_string_pretty(&report.summary).expect("summary"));
    println!("elapsed {} ms", report.elapsed_ms);
    Ok(())
}
