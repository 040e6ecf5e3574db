//! The quartic g(t) behind the structural decider, and the identities that
//! connect F to it.

use cyclic_psd::arith::rat;
use cyclic_psd::form::{eval_form_at, power_sums, r_range, symmetrized_gap, vandermonde_square, SigmaCoords};
use cyclic_psd::{reduce_to_g, CyclicParams, Point};

fn main() -> cyclic_psd::Result<()> {
    let c = CyclicParams::parse("3", "-5/2", "1", "-2")?;
    let g = reduce_to_g(&c);
    println!("F: {c}");
    println!("R = {}", g.radicand);
    println!("g(t) = {}", g.poly);
    for t in [rat(0, 1), rat(1, 2), rat(1, 1), rat(3, 1)] {
        println!("  g({t}) = {}", g.eval(&t));
    }

    let (x, y, z) = (rat(2, 1), rat(-1, 3), rat(5, 4));
    let s = SigmaCoords::of_point(&x, &y, &z);
    let sums = power_sums(&s);
    println!("\np = {}, q = {}, r = {}", s.p, s.q, s.r);
    println!("Σx⁴ = {}, (x-y)²(y-z)²(z-x)² = {}", sums.sum_x4, vandermonde_square(&s));

    let p = Point::new(x.clone(), y.clone(), z.clone());
    let swapped = Point::new(x.clone(), z.clone(), y.clone());
    println!("F(x,y,z) = {}", eval_form_at(&c, &p));
    println!("F(x,z,y) = {}", eval_form_at(&c, &swapped));
    println!("symmetrized gap = {}", symmetrized_gap(&c, &x, &y, &z));

    let (r1, r2) = r_range(&rat(1, 2))?;
    println!("\nxyz range on x+y+z = 1 with t = 1/2: [{r1}, {r2}]");
    Ok(())
}
