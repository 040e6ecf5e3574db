//! Exact arithmetic and signs in Q(sqrt(R)).

use cyclic_psd::arith::{int, rat};
use cyclic_psd::poly::Poly;
use cyclic_psd::{is_nonneg_everywhere, QuadExt};

fn main() -> cyclic_psd::Result<()> {
    let r = int(2);
    let a = QuadExt::new(int(3), int(-2), r.clone())?; // 3 - 2 sqrt(2)
    let b = QuadExt::new(rat(1, 2), int(1), r.clone())?;
    println!("a = {a}, sign {:?}", a.sign());
    println!("a * b = {}", a.checked_mul(&b)?);
    println!("a / b = {}", a.checked_div(&b)?);
    println!("norm(a) = {}", a.norm());

    // x² - 2 sqrt(2) x + 2 = (x - sqrt(2))², nonnegative with a double root.
    let one = QuadExt::rational(int(1), &r)?;
    let p = Poly::from_leading_first(vec![one, QuadExt::new(int(0), int(-2), r.clone())?, QuadExt::rational(int(2), &r)?]);
    println!("{p}: distinct real roots {}, nonnegative {}", p.real_root_count()?, is_nonneg_everywhere(&p));
    Ok(())
}
