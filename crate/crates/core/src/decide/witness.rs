//! Exact search for a rational point where the form is negative.

use num_traits::Signed;

use crate::arith::{int, rat, round_dyadic, sqrt_floor, Rational, Scalar, Sign};
use crate::form::{eval_form_at, f2, reduce_to_g, CyclicParams, Point};
use crate::roots::find_negative_point;

use super::decide_structural;

/// Default number of form evaluations spent by [`find_witness`].
pub const DEFAULT_WITNESS_BUDGET: usize = 50_000;

/// Half-width of the first integer grid.
const COARSE_GRID: i64 = 4;
/// Precision ladder, in bits, for the seeded construction.
const SEED_BITS: [u32; 6] = [24, 53, 100, 200, 400, 800];
const MIN_STEP_BITS: u32 = 30;

/// A point with `F < 0`, found within `budget` evaluations of `F`.
///
/// Order of attack: the points `(1,1,1)` and `(1,-1,0)`, integer shells
/// `max |coord| = N` for `N <= 4`, a dyadic descent from the best shell
/// point, a point built from a negative value of `g` when the structural
/// decider says NotPSD, then wider shells until the budget runs out.
/// Deterministic for given inputs.
pub fn find_witness(c: &CyclicParams, budget: usize) -> Option<Point> {
    let mut s = Search { c, left: budget, best: None };
    for p in [Point::ints(1, 1, 1), Point::ints(1, -1, 0)] {
        if s.try_point(&p)? {
            return Some(p);
        }
    }
    for n in 1..=COARSE_GRID {
        if let Some(p) = s.scan_shell(n)? {
            return Some(p);
        }
    }
    if let Some(p) = s.descend()? {
        return Some(p);
    }
    if !decide_structural(c).is_psd {
        if let Some(p) = s.seeded()? {
            return Some(p);
        }
    }
    let mut n = COARSE_GRID + 1;
    loop {
        if let Some(p) = s.scan_shell(n)? {
            return Some(p);
        }
        n += 1;
    }
}

struct Search<'a> {
    c: &'a CyclicParams,
    left: usize,
    /// Most negative `F / max|coord|⁴` seen so far, with its point.
    best: Option<(Rational, Point)>,
}

impl Search<'_> {
    /// `Some(true)` if `F(p) < 0`; `None` once the budget is spent.
    fn try_point(&mut self, p: &Point) -> Option<bool> {
        Some(Scalar::sign(&self.value(p)?) == Sign::Negative)
    }

    fn value(&mut self, p: &Point) -> Option<Rational> {
        if self.left == 0 {
            return None;
        }
        self.left -= 1;
        let v = eval_form_at(self.c, p);
        let scale = max_abs(p);
        if !Scalar::is_zero(&scale) {
            let norm = &v / (&scale * &scale * &scale * &scale);
            if self.best.as_ref().is_none_or(|(b, _)| &norm < b) {
                self.best = Some((norm, p.clone()));
            }
        }
        Some(v)
    }

    /// Integer points with `max |coord| = n`, one of each `±` pair.
    fn scan_shell(&mut self, n: i64) -> Option<Option<Point>> {
        for x in -n..=n {
            for y in -n..=n {
                for z in -n..=n {
                    if x.abs().max(y.abs()).max(z.abs()) != n || !leads_positive(x, y, z) {
                        continue;
                    }
                    let p = Point::ints(x, y, z);
                    if self.try_point(&p)? {
                        return Some(Some(p));
                    }
                }
            }
        }
        Some(None)
    }

    /// Coordinate descent on the cube surface with halving dyadic steps.
    fn descend(&mut self) -> Option<Option<Point>> {
        let Some((mut best, start)) = self.best.clone() else {
            return Some(None);
        };
        let scale = max_abs(&start);
        let mut cur = [&start.x / &scale, &start.y / &scale, &start.z / &scale];
        let mut step = rat(1, 4);
        let floor = Rational::new(1.into(), num_bigint::BigInt::from(1u8) << MIN_STEP_BITS);
        while step >= floor {
            let mut moved = false;
            for axis in 0..3 {
                for dir in [1, -1] {
                    let mut cand = cur.clone();
                    cand[axis] = &cand[axis] + &step * int(dir);
                    let p = Point::new(cand[0].clone(), cand[1].clone(), cand[2].clone());
                    let s = max_abs(&p);
                    if Scalar::is_zero(&s) {
                        continue;
                    }
                    let v = self.value(&p)?;
                    if Scalar::sign(&v) == Sign::Negative {
                        return Some(Some(p));
                    }
                    let norm = v / (&s * &s * &s * &s);
                    if norm < best {
                        best = norm;
                        cur = cand;
                        moved = true;
                    }
                }
            }
            if !moved {
                step *= rat(1, 2);
            }
        }
        Some(None)
    }

    /// Points on the plane `x+y+z = 1` that realize a negative value of `g`.
    ///
    /// With `x = 1/3 + (2t/3) cos(θ + 2πj/3)` the symmetric part of `F` is
    /// fixed by `t` and the antisymmetric part is minimized at
    /// `cos 3θ = (8-4k+2l-m-n)/-sqrt(R)`. The angle is approximated with
    /// increasing precision and both orientations are tried.
    fn seeded(&mut self) -> Option<Option<Point>> {
        let g = reduce_to_g(self.c);
        let Some(t) = find_negative_point(&g.poly) else {
            return Some(None);
        };
        // g(|t|) <= g(t) for t < 0 because the cubic coefficient is -sqrt(R).
        let t = t.abs();
        let f = -f2(self.c);
        for bits in SEED_BITS {
            let (cos, sin) = if Scalar::is_zero(&g.radicand) {
                (int(1), int(0))
            } else {
                let root = sqrt_floor(&g.radicand, bits);
                let gamma = if Scalar::is_zero(&root) {
                    int(1)
                } else {
                    clamp_unit(-&f / root)
                };
                let cos = cos_third(&gamma, bits);
                let sin = sqrt_floor(&(int(1) - &cos * &cos), bits);
                (cos, sin)
            };
            let spread = &sin * sqrt_floor(&int(3), bits);
            let third = rat(1, 3);
            let x = &third + int(2) * &t * &cos / int(3);
            let y = &third + &t * (-&cos + &spread) / int(3);
            let z = &third + &t * (-&cos - &spread) / int(3);
            let round = |v: &Rational| round_dyadic(v, bits + 16);
            let (x, y, z) = (round(&x), round(&y), round(&z));
            for p in [Point::new(x.clone(), y.clone(), z.clone()), Point::new(x, z, y)] {
                if self.try_point(&p)? {
                    return Some(Some(p));
                }
            }
        }
        Some(None)
    }
}

fn max_abs(p: &Point) -> Rational {
    let (x, y, z) = (p.x.abs(), p.y.abs(), p.z.abs());
    x.max(y).max(z)
}

fn leads_positive(x: i64, y: i64, z: i64) -> bool {
    x > 0 || (x == 0 && (y > 0 || (y == 0 && z > 0)))
}

fn clamp_unit(v: Rational) -> Rational {
    v.max(int(-1)).min(int(1))
}

/// The root in `[1/2, 1]` of `4c³ - 3c = gamma`, by bisection to `bits`.
fn cos_third(gamma: &Rational, bits: u32) -> Rational {
    let (mut lo, mut hi) = (rat(1, 2), int(1));
    for _ in 0..bits {
        let mid = (&lo + &hi) * rat(1, 2);
        if int(4) * &mid * &mid * &mid - int(3) * &mid <= *gamma {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    lo
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check(c: &CyclicParams, want: Point, value: i64) {
        let w = find_witness(c, DEFAULT_WITNESS_BUDGET).expect("witness");
        assert_eq!(w, want);
        assert_eq!(eval_form_at(c, &w), int(value));
    }

    #[test]
    fn probe_points_come_first() {
        check(&CyclicParams::ints(0, 0, -3, 0), Point::ints(1, 1, 1), -6);
        check(&CyclicParams::ints(0, 0, 2, 2), Point::ints(1, -1, 0), -2);
        let c = CyclicParams::new(rat(1, 2), int(-3), int(0), int(0));
        let w = find_witness(&c, DEFAULT_WITNESS_BUDGET).unwrap();
        assert_eq!(w, Point::ints(1, 1, 1));
        assert_eq!(eval_form_at(&c, &w), rat(-9, 2));
    }

    #[test]
    fn psd_forms_have_no_witness() {
        assert_eq!(find_witness(&CyclicParams::ints(0, 0, 0, 0), 2_000), None);
        assert_eq!(find_witness(&CyclicParams::ints(2, 0, 0, 0), 2_000), None);
    }

    #[test]
    fn budget_is_respected() {
        assert_eq!(find_witness(&CyclicParams::ints(0, 0, -3, 0), 0), None);
        assert_eq!(find_witness(&CyclicParams::ints(0, 0, 2, 2), 1), None);
        assert!(find_witness(&CyclicParams::ints(0, 0, 2, 2), 2).is_some());
    }

    #[test]
    fn seeded_point_catches_a_narrow_dip() {
        // (k, l, m, n) = (0, -2, 2, -1) has f3 = 0 and R = 4 a0 a2 exactly, so
        // g = t² (a0 t² - sqrt(R) t + a2) touches zero. Moving k down while
        // keeping f3 = 0 opens a very short interval where g < 0.
        let eps = rat(1, 1_000_000);
        let c = CyclicParams::new(-eps.clone(), int(-2) + &eps, int(2), int(-1));
        assert!(!decide_structural(&c).is_psd);
        let w = find_witness(&c, DEFAULT_WITNESS_BUDGET).expect("witness");
        assert_eq!(Scalar::sign(&eval_form_at(&c, &w)), Sign::Negative);
    }

    #[test]
    fn cos_third_solves_the_triple_angle_equation() {
        for g in [int(-1), rat(-1, 3), int(0), rat(5, 7), int(1)] {
            let c = cos_third(&g, 60);
            let err = int(4) * &c * &c * &c - int(3) * &c - &g;
            assert!(err.abs() < rat(1, 1 << 50), "gamma {g}");
        }
    }
}
