//! Coefficients given in the symmetric basis, converted and decided.

use cyclic_psd::arith::parse_rational;
use cyclic_psd::form::{from_bcde, BcdeParams};
use cyclic_psd::decide_structural;

fn main() -> cyclic_psd::Result<()> {
    for [b, c, d, e] in [["0", "0", "0", "0"], ["-3", "1", "0", "0"], ["-2", "-1/2", "1", "-1"]] {
        let p = BcdeParams::new(parse_rational(b)?, parse_rational(c)?, parse_rational(d)?, parse_rational(e)?);
        let k = from_bcde(&p);
        println!("B,C,D,E = {b},{c},{d},{e} -> {k}: psd = {}", decide_structural(&k).is_psd);
    }
    Ok(())
}
