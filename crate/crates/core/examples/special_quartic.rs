//! The discriminant rule for a0 x⁴ + a1 x³ + a2 x² + a4, including a double-root
//! case built as (x - c)² (x² + p x + q) with no linear term.

use cyclic_psd::arith::{int, rat};
use cyclic_psd::quartic::SpecialQuartic;
use cyclic_psd::is_nonneg_everywhere;

fn main() -> cyclic_psd::Result<()> {
    // Linear term of (x - c)²(x² + p x + q) vanishes when q = c p / 2.
    let (c, p) = (int(2), int(1));
    let q = &c * &p / int(2);
    let double_root = SpecialQuartic::from_coeffs(
        int(1),
        &p - int(2) * &c,
        &c * &c - int(2) * &c * &p + &q,
        &c * &c * &q,
    );
    let cases = [
        ("x^4 + x^3 + 1", SpecialQuartic::from_coeffs(int(1), int(1), int(0), int(1))),
        ("x^4 - 3x^3 + x^2 + 1", SpecialQuartic::from_coeffs(int(1), int(-3), int(1), int(1))),
        ("(x-2)^2 (x^2 + x + 1)", double_root),
        ("2x^4 - x^3 + 1/8 x^2 + 3", SpecialQuartic::from_coeffs(int(2), int(-1), rat(1, 8), int(3))),
    ];
    for (name, q) in cases {
        let d = q.discriminants()?;
        let oracle = is_nonneg_everywhere(&q.to_rational_poly().expect("rational"));
        println!("{name}");
        println!("  D1 = {}, D2 = {}, D3 = {}, D4 = {}", d.d1, d.d2, d.d3, d.d4);
        println!("  rule: {:?}, psd = {}, oracle = {}", q.rule_clause()?, q.is_psd()?, oracle);
    }
    Ok(())
}
