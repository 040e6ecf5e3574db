//! Real-root counts from the discriminant sequence, checked against Sturm.
//!
//! `cargo run --example root_classification -- 1,0,-5,0,4`

use cyclic_psd::poly::parse_rational_poly;
use cyclic_psd::roots::classify_roots_detailed;
use cyclic_psd::is_nonneg_everywhere;

fn main() -> cyclic_psd::Result<()> {
    let inputs: Vec<String> = std::env::args().skip(1).collect();
    let inputs = if inputs.is_empty() {
        ["1,0,-5,0,4", "1,0,2,0,1", "1,-2,1", "1,1,0,0,1", "1,0,0,-1"].map(String::from).to_vec()
    } else {
        inputs
    };
    for text in &inputs {
        let p = parse_rational_poly(text)?;
        let d = classify_roots_detailed(&p)?;
        let seq: Vec<String> = d.sequence.entries.iter().map(ToString::to_string).collect();
        println!("{p}");
        println!("  D = [{}]", seq.join(", "));
        println!("  revised signs {:?}, l = {}, v = {}", d.revised.0, d.nonvanishing, d.sign_changes);
        println!(
            "  {} distinct real, {} imaginary pairs, Sturm says {}, nonnegative: {}",
            d.count.distinct_real,
            d.count.imaginary_pairs,
            p.real_root_count()?,
            is_nonneg_everywhere(&p)
        );
    }
    Ok(())
}
