//! Exact counterexamples for non-PSD forms, including one whose negative
//! region is too thin for any small grid.

use cyclic_psd::arith::{int, rat};
use cyclic_psd::decide::DEFAULT_WITNESS_BUDGET;
use cyclic_psd::form::eval_form_at;
use cyclic_psd::{decide_structural, find_witness, CyclicParams};

fn main() {
    let eps = rat(1, 1_000_000);
    let forms = [
        CyclicParams::ints(0, 0, -3, 0),
        CyclicParams::ints(0, 0, 2, 2),
        CyclicParams::new(rat(1, 2), int(-3), int(0), int(0)),
        CyclicParams::new(-eps.clone(), int(-2) + &eps, int(2), int(-1)),
        CyclicParams::ints(2, 0, 0, 0),
    ];
    for c in &forms {
        let psd = decide_structural(c).is_psd;
        match find_witness(c, DEFAULT_WITNESS_BUDGET) {
            Some(p) => println!("{c}: psd = {psd}, F{p} = {}", eval_form_at(c, &p)),
            None => println!("{c}: psd = {psd}, no witness"),
        }
    }
}
