//! Exact point sweep over the cube surface `max(|x|,|y|,|z|) = 1`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::arith::Rational;
use crate::form::{CyclicParams, Point};

/// First point with `F < 0` among at most `budget` surface points.
///
/// Points are visited by increasing denominator `d`: on the faces
/// `x = 1`, `y = 1`, `z = 1` (F is even, so the opposite faces add nothing)
/// the free coordinates run over `i/d` with `|i| <= d` and
/// `gcd(i, j, d) = 1`, so no point repeats across levels. Edge points are
/// visited only on their lowest face.
pub fn sample_falsifier(c: &CyclicParams, budget: usize) -> Option<Point> {
    let form = ScaledForm::new(c);
    surface_points()
        .take(budget)
        .find(|(v, _)| form.is_negative(*v))
        .map(|(v, d)| {
            let r = |n: i64| Rational::new(n.into(), d.into());
            Point::new(r(v[0]), r(v[1]), r(v[2]))
        })
}

/// Integer numerators and the common denominator of the sweep, in order.
fn surface_points() -> impl Iterator<Item = ([i64; 3], i64)> {
    (1i64..).flat_map(|d| level(d).into_iter().map(move |v| (v, d)))
}

fn level(d: i64) -> Vec<[i64; 3]> {
    let mut out = Vec::new();
    for face in 0..3 {
        let (a, b) = match face {
            0 => (1, 2),
            1 => (0, 2),
            _ => (0, 1),
        };
        for i in -d..=d {
            for j in -d..=d {
                if d > 1 && d.gcd(&i).gcd(&j) != 1 {
                    continue;
                }
                let mut v = [0i64; 3];
                v[face] = d;
                v[a] = i;
                v[b] = j;
                if (0..face).all(|lower| v[lower].abs() != d) {
                    out.push(v);
                }
            }
        }
    }
    out
}

/// `L * F` with `L` the common denominator of `k, l, m, n`, so that integer
/// points give integer values with the same sign as `F`.
struct ScaledForm {
    big: [BigInt; 5],
    small: Option<[i128; 5]>,
}

impl ScaledForm {
    fn new(c: &CyclicParams) -> Self {
        let lcm = [&c.k, &c.l, &c.m, &c.n]
            .iter()
            .fold(BigInt::from(1), |acc, q| acc.lcm(q.denom()));
        let scaled = |q: &Rational| (q * Rational::from_integer(lcm.clone())).to_integer();
        let big = [lcm.clone(), scaled(&c.k), scaled(&c.l), scaled(&c.m), scaled(&c.n)];
        let small = big
            .iter()
            .map(|b| i128::try_from(b).ok())
            .collect::<Option<Vec<_>>>()
            .map(|v| [v[0], v[1], v[2], v[3], v[4]]);
        ScaledForm { big, small }
    }

    fn is_negative(&self, v: [i64; 3]) -> bool {
        if let Some(w) = self.small {
            if let Some(val) = eval_i128(&w, v) {
                return val < 0;
            }
        }
        eval_big(&self.big, v).is_negative()
    }
}

fn sums(v: [i64; 3]) -> [i128; 5] {
    let [x, y, z] = v.map(i128::from);
    let (x2, y2, z2) = (x * x, y * y, z * z);
    [
        x2 * x2 + y2 * y2 + z2 * z2,
        x2 * y2 + y2 * z2 + z2 * x2,
        x * y * z * (x + y + z),
        x2 * x * y + y2 * y * z + z2 * z * x,
        x * y2 * y + y * z2 * z + z * x2 * x,
    ]
}

fn eval_i128(w: &[i128; 5], v: [i64; 3]) -> Option<i128> {
    let s = sums(v);
    w.iter()
        .zip(s.iter())
        .try_fold(0i128, |acc, (a, b)| acc.checked_add(a.checked_mul(*b)?))
}

fn eval_big(w: &[BigInt; 5], v: [i64; 3]) -> BigInt {
    let s = sums(v);
    w.iter()
        .zip(s.iter())
        .fold(BigInt::zero(), |acc, (a, b)| acc + a * BigInt::from(*b))
}
