//! Parameter samplers, including exact constructions of degenerate strata.

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_integer::{Integer, Roots};
use num_traits::Signed;
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::arith::{exact_sqrt, int, rat, Rational};
use crate::decide::eval_polys;
use crate::error::{Error, Result};
use crate::form::CyclicParams;

/// Region of parameter space a sample is drawn from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Stratum {
    #[serde(rename = "generic")]
    Generic,
    /// `R = 0`: `m = n` and `l = 2k + m - 4`.
    #[serde(rename = "R_zero")]
    RZero,
    /// `f3 = 0`, i.e. `F(1,1,1) = 0`.
    #[serde(rename = "f3_zero")]
    F3Zero,
    /// `f1 = 0`, i.e. `F(1,-1,0) = 0`.
    #[serde(rename = "f1_zero")]
    F1Zero,
    /// Best of several generic draws by `|f5|`.
    #[serde(rename = "f5_zero_near")]
    F5ZeroNear,
    /// `R = 0` with `g2 < 0`, where the first disjunct leans on `g3`.
    #[serde(rename = "case1_boundary")]
    Case1Boundary,
    /// `f5 = 0` exactly, with `f1 > 0` and `f3 > 0`.
    #[serde(rename = "f5_zero")]
    F5Zero,
    /// `f6 = 0` exactly, with `f1 > 0` and `f3 > 0`.
    #[serde(rename = "f6_zero")]
    F6Zero,
    /// `f7 = 0` exactly, with `f1 > 0` and `f3 > 0`.
    #[serde(rename = "f7_zero")]
    F7Zero,
}

impl Stratum {
    pub const ALL: [Stratum; 9] = [
        Stratum::Generic,
        Stratum::RZero,
        Stratum::F3Zero,
        Stratum::F1Zero,
        Stratum::F5ZeroNear,
        Stratum::Case1Boundary,
        Stratum::F5Zero,
        Stratum::F6Zero,
        Stratum::F7Zero,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Stratum::Generic => "generic",
            Stratum::RZero => "R_zero",
            Stratum::F3Zero => "f3_zero",
            Stratum::F1Zero => "f1_zero",
            Stratum::F5ZeroNear => "f5_zero_near",
            Stratum::Case1Boundary => "case1_boundary",
            Stratum::F5Zero => "f5_zero",
            Stratum::F6Zero => "f6_zero",
            Stratum::F7Zero => "f7_zero",
        }
    }

    /// Parse a comma-separated list such as `generic,R_zero`.
    pub fn parse_list(text: &str) -> Result<Vec<Stratum>> {
        text.split(',').map(str::trim).filter(|s| !s.is_empty()).map(str::parse).collect()
    }
}

impl fmt::Display for Stratum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Stratum {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Stratum::ALL
            .into_iter()
            .find(|t| t.name() == s)
            .ok_or_else(|| Error::UnknownStratum(s.to_string()))
    }
}

/// Draws rationals in `[lo, hi]` with denominators up to `denominator_bound`:
/// small integers, small fractions, or log-uniform magnitudes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalSampler {
    pub lo: Rational,
    pub hi: Rational,
    pub denominator_bound: u32,
}

impl RationalSampler {
    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> Rational {
        let den = i64::from(rng.random_range(1..=self.denominator_bound.max(1)));
        let v = match rng.random_range(0..10) {
            0..=3 => int(rng.random_range(-8..=8)),
            4..=6 => rat(rng.random_range(-8 * den..=8 * den), den),
            _ => {
                let top = crate::arith::to_f64(&self.lo.abs().max(self.hi.abs())).max(1.0);
                let mag = top.powf(rng.random::<f64>());
                let numer = (mag * den as f64).round() as i64;
                let sign = if rng.random_bool(0.5) { 1 } else { -1 };
                rat(sign * numer, den)
            }
        };
        v.max(self.lo.clone()).min(self.hi.clone())
    }

    fn positive<R: Rng + ?Sized>(&self, rng: &mut R) -> Rational {
        let v = self.sample(rng).abs();
        if v == int(0) {
            rat(1, i64::from(self.denominator_bound.max(1)))
        } else {
            v
        }
    }
}

const NEAR_POOL: usize = 24;

/// One parameter point from `stratum`. Every constraint holds exactly.
pub fn stratum_sampler<R: Rng + ?Sized>(stratum: Stratum, rng: &mut R, s: &RationalSampler) -> CyclicParams {
    match stratum {
        Stratum::Generic => generic(rng, s),
        Stratum::RZero => {
            let (k, m) = (s.sample(rng), s.sample(rng));
            let l = int(2) * &k + &m - int(4);
            CyclicParams::new(k, l, m.clone(), m)
        }
        Stratum::F3Zero => {
            let (k, l, m) = (s.sample(rng), s.sample(rng), s.sample(rng));
            let n = int(-1) - &k - &l - &m;
            CyclicParams::new(k, l, m, n)
        }
        Stratum::F1Zero => {
            let (k, l, m) = (s.sample(rng), s.sample(rng), s.sample(rng));
            let n = int(2) + &k - &m;
            CyclicParams::new(k, l, m, n)
        }
        Stratum::F5ZeroNear => (0..NEAR_POOL)
            .map(|_| generic(rng, s))
            .min_by_key(|c| eval_polys(c).f5.abs())
            .expect("nonempty pool"),
        Stratum::Case1Boundary => {
            // Keep m small so that g1 > 0 and g3 >= 0 are both reachable.
            let m = rat(rng.random_range(-24..=24), rng.random_range(1..=4));
            let delta = s.positive(rng) / int(rng.random_range(1..=64));
            let k = (&m * &m + int(8)) / int(4) - delta;
            let l = int(2) * &k + &m - int(4);
            CyclicParams::new(k, l, m.clone(), m)
        }
        Stratum::F5Zero => pick(rng, f5_zero_points()),
        Stratum::F6Zero => pick(rng, f6_zero_points()),
        Stratum::F7Zero => pick(rng, f7_zero_points()),
    }
}

fn generic<R: Rng + ?Sized>(rng: &mut R, s: &RationalSampler) -> CyclicParams {
    CyclicParams::new(s.sample(rng), s.sample(rng), s.sample(rng), s.sample(rng))
}

fn pick<R: Rng + ?Sized>(rng: &mut R, pool: &[(Rational, Rational, Rational, Rational)]) -> CyclicParams {
    let (a0, a2, a4, d2) = &pool[rng.random_range(0..pool.len())];
    let d = exact_sqrt(d2).expect("pool holds squares");
    let d = if rng.random_bool(0.5) { d } else { -d };
    from_g_coefficients(a0, a2, a4, &d)
}

/// Parameters whose `g` has coefficients `a0, -sqrt(R), a2, 0, a4` with
/// `m - n = d`; `R` then equals `27 d² + (a0 + a2 + a4 - 27)²`.
pub fn from_g_coefficients(a0: &Rational, a2: &Rational, a4: &Rational, d: &Rational) -> CyclicParams {
    let a = a0 / int(3) - int(2);
    let b = a2 / int(3) - int(4);
    let sigma = (a4 - int(1) - &a + &b) / int(3);
    let k = &a + &sigma;
    let l = &sigma - &b;
    let m = (&sigma + d) / int(2);
    let n = (&sigma - d) / int(2);
    CyclicParams::new(k, l, m, n)
}

type Pool = Vec<(Rational, Rational, Rational, Rational)>;

fn is_square(v: i128) -> bool {
    v >= 0 && {
        let r = v.sqrt();
        r * r == v
    }
}

/// `(a0, a2, a4, d²)` with `D2(g) = 0`, i.e. `R = 8 a0 a2 / 3`.
fn f6_zero_points() -> &'static Pool {
    static POOL: OnceLock<Pool> = OnceLock::new();
    POOL.get_or_init(|| {
        let mut out = Vec::new();
        for a0 in 1..=40i128 {
            for a2 in 1..=40i128 {
                for a4 in 1..=40i128 {
                    let f2 = a0 + a2 + a4 - 27;
                    // d² = (8 a0 a2 / 3 - f2²) / 27 = (8 a0 a2 - 3 f2²) / 81
                    let w = 8 * a0 * a2 - 3 * f2 * f2;
                    if is_square(w) {
                        out.push(quad(a0, a2, a4, Rational::new(BigInt::from(w), BigInt::from(81))));
                    }
                }
            }
        }
        out
    })
}

/// `(a0, a2, a4, d²)` with `D3(g) = 0`, i.e.
/// `R (a2² - 6 a0 a4) = 4 a0 a2³ - 16 a0² a2 a4`.
fn f7_zero_points() -> &'static Pool {
    static POOL: OnceLock<Pool> = OnceLock::new();
    POOL.get_or_init(|| {
        let mut out = Vec::new();
        for a0 in 1..=60i128 {
            for a2 in -60..=60i128 {
                for a4 in 1..=60i128 {
                    let den = a2 * a2 - 6 * a0 * a4;
                    let num = 4 * a0 * a2 * a2 * a2 - 16 * a0 * a0 * a2 * a4;
                    if den == 0 || num == 0 || (num > 0) != (den > 0) {
                        continue;
                    }
                    let f2 = a0 + a2 + a4 - 27;
                    // d² = (num/den - f2²) / 27, a square iff 27 den (num - f2² den) is.
                    let gap = num - f2 * f2 * den;
                    if is_square(27 * den * gap) {
                        let d2 = Rational::new(BigInt::from(gap), BigInt::from(27 * den));
                        out.push(quad(a0, a2, a4, d2));
                    }
                }
            }
        }
        out
    })
}

/// `(a0, a2, a4, d²)` for `a0 (x - c)² (x² + p x + c p / 2)`, whose linear
/// term vanishes and which has a double root, so `D4(g) = 0`.
fn f5_zero_points() -> &'static Pool {
    static POOL: OnceLock<Pool> = OnceLock::new();
    POOL.get_or_init(|| {
        let mut grid: Vec<(i128, i128)> = Vec::new();
        for num in -12..=12i128 {
            for den in 1..=4i128 {
                if num != 0 && num.gcd(&den) == 1 {
                    grid.push((num, den));
                }
            }
        }
        let mut out = Vec::new();
        for a0 in 1..=12i128 {
            for &(a, b) in &grid {
                for &(e, h) in &grid {
                    // c = a/b, p = e/h; every coefficient over D = 2 b³ h.
                    let d = 2 * b * b * b * h;
                    let a1 = a0 * (e * b - 2 * a * h) * 2 * b * b;
                    let a2 = a0 * (2 * a * a * h - 3 * a * b * e) * b;
                    let a4 = a0 * a * a * a * e;
                    if a1 == 0 || a4 <= 0 {
                        continue;
                    }
                    let f2 = a0 * d + a2 + a4 - 27 * d;
                    // d² = (a1² - f2²) / (27 D²), a square iff 27 (a1² - f2²) is.
                    let gap = a1 * a1 - f2 * f2;
                    if is_square(27 * gap) {
                        let over = |v: i128, w: i128| Rational::new(BigInt::from(v), BigInt::from(w));
                        out.push((int(a0 as i64), over(a2, d), over(a4, d), over(gap, 27 * d * d)));
                    }
                }
            }
        }
        out
    })
}

fn quad(a0: i128, a2: i128, a4: i128, d2: Rational) -> (Rational, Rational, Rational, Rational) {
    let r = |v: i128| Rational::from_integer(BigInt::from(v));
    (r(a0), r(a2), r(a4), d2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::Scalar;
    use crate::form::{eval_form, radicand, reduce_to_g};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn sampler() -> RationalSampler {
        RationalSampler { lo: int(-1000), hi: int(1000), denominator_bound: 64 }
    }

    fn draws(stratum: Stratum, count: usize) -> Vec<CyclicParams> {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        (0..count).map(|_| stratum_sampler(stratum, &mut rng, &sampler())).collect()
    }

    #[test]
    fn names_round_trip() {
        for s in Stratum::ALL {
            assert_eq!(s.name().parse::<Stratum>().unwrap(), s);
            assert_eq!(serde_json::to_string(&s).unwrap(), format!("\"{}\"", s.name()));
        }
        assert_eq!(
            Stratum::parse_list("generic, R_zero").unwrap(),
            vec![Stratum::Generic, Stratum::RZero]
        );
        assert_eq!("bogus".parse::<Stratum>(), Err(Error::UnknownStratum("bogus".into())));
    }

    #[test]
    fn exact_strata_constraints_hold() {
        let (o, z) = (int(1), int(0));
        for c in draws(Stratum::RZero, 200) {
            assert_eq!(radicand(&c), z);
        }
        for c in draws(Stratum::F3Zero, 200) {
            assert_eq!(eval_form(&c, &o, &o, &o), z);
        }
        for c in draws(Stratum::F1Zero, 200) {
            assert_eq!(eval_form(&c, &o, &int(-1), &z), z);
        }
        for c in draws(Stratum::Case1Boundary, 200) {
            let p = eval_polys(&c);
            assert_eq!(radicand(&c), z);
            assert!(p.g2 < z);
        }
    }

    #[test]
    fn constructed_discriminant_strata() {
        for (stratum, which) in [(Stratum::F5Zero, 5), (Stratum::F6Zero, 6), (Stratum::F7Zero, 7)] {
            for c in draws(stratum, 100) {
                let p = eval_polys(&c);
                let v = match which {
                    5 => &p.f5,
                    6 => &p.f6,
                    _ => &p.f7,
                };
                assert!(Scalar::is_zero(v), "{stratum} at {c}");
                assert!(p.f1 > int(0) && p.f3 > int(0));
                assert!(radicand(&c) > int(0));
            }
        }
    }

    #[test]
    fn pools_are_reasonably_large() {
        assert!(f5_zero_points().len() >= 50);
        assert!(f6_zero_points().len() >= 50);
        assert!(f7_zero_points().len() >= 50);
    }

    #[test]
    fn inverse_map_reproduces_g() {
        let c = from_g_coefficients(&int(6), &int(12), &int(1), &int(0));
        assert_eq!(c, CyclicParams::ints(0, 0, 0, 0));
        let g = reduce_to_g(&c);
        assert_eq!((g.a0, g.a2, g.a4), (int(6), int(12), int(1)));
    }

    #[test]
    fn samples_respect_range_and_denominators() {
        let s = RationalSampler { lo: int(-10), hi: int(5), denominator_bound: 8 };
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..500 {
            let v = s.sample(&mut rng);
            assert!(v >= int(-10) && v <= int(5));
            assert!(*v.denom() <= BigInt::from(8));
        }
    }
}
