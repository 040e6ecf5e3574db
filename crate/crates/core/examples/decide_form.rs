//! Decide a few forms with every method and print the clause that fired.
//!
//! Run with `cargo run --example decide_form -- 1/2 -3 0 0`, or without
//! arguments for a built-in list.

use cyclic_psd::{decide, CyclicParams, Method};

fn main() -> cyclic_psd::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let forms = if args.len() == 4 {
        vec![CyclicParams::parse(&args[0], &args[1], &args[2], &args[3])?]
    } else {
        vec![
            CyclicParams::ints(0, 0, 0, 0),
            CyclicParams::ints(2, 0, 0, 0),
            CyclicParams::ints(0, 0, -1, 0),
            CyclicParams::ints(0, 0, -3, 0),
            CyclicParams::parse("1/2", "-3", "0", "0")?,
        ]
    };
    for c in &forms {
        println!("{c}");
        for method in Method::ALL {
            let v = decide(c, method, true)?;
            let verdict = if v.is_psd { "PSD" } else { "NotPSD" };
            print!("  {:<17} {:<7} {}", method.name(), verdict, v.fired_clause);
            if let (Some(w), Some(val)) = (&v.witness, &v.witness_value) {
                print!("  F{w} = {val}");
            }
            println!();
        }
    }
    Ok(())
}
