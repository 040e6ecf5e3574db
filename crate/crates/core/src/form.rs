//! The cyclic ternary quartic
//! `F = Σx⁴ + k Σx²y² + l Σx²yz + m Σx³y + n Σxy³`
//! and the identities that reduce its nonnegativity to a univariate quartic.

use std::fmt;

use num_traits::Signed;
use serde::{Deserialize, Serialize};

use crate::arith::{int, parse_rational, QuadExt, Rational, Scalar, Sign};
use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::quartic::SpecialQuartic;

/// Coefficients `(k, l, m, n)` of the form.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CyclicParams {
    #[serde(with = "crate::arith::serde_str")]
    pub k: Rational,
    #[serde(with = "crate::arith::serde_str")]
    pub l: Rational,
    #[serde(with = "crate::arith::serde_str")]
    pub m: Rational,
    #[serde(with = "crate::arith::serde_str")]
    pub n: Rational,
}

impl CyclicParams {
    pub fn new(k: Rational, l: Rational, m: Rational, n: Rational) -> Self {
        CyclicParams { k, l, m, n }
    }

    /// Integer parameters, mostly for tests and examples.
    pub fn ints(k: i64, l: i64, m: i64, n: i64) -> Self {
        CyclicParams::new(int(k), int(l), int(m), int(n))
    }

    /// Parse four rational literals such as `"1/2" "-3" "0" "0"`.
    pub fn parse(k: &str, l: &str, m: &str, n: &str) -> Result<Self> {
        Ok(CyclicParams::new(
            parse_rational(k)?,
            parse_rational(l)?,
            parse_rational(m)?,
            parse_rational(n)?,
        ))
    }

    /// The same form with `m` and `n` exchanged, i.e. `F(x, z, y)`.
    pub fn swapped(&self) -> Self {
        CyclicParams::new(self.k.clone(), self.l.clone(), self.n.clone(), self.m.clone())
    }
}

impl fmt::Display for CyclicParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(k={}, l={}, m={}, n={})", self.k, self.l, self.m, self.n)
    }
}

/// A rational point `(x, y, z)`, serialized as a list of three strings.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Point {
    pub x: Rational,
    pub y: Rational,
    pub z: Rational,
}

impl Point {
    pub fn new(x: Rational, y: Rational, z: Rational) -> Self {
        Point { x, y, z }
    }

    pub fn ints(x: i64, y: i64, z: i64) -> Self {
        Point::new(int(x), int(y), int(z))
    }

    pub fn is_origin(&self) -> bool {
        Scalar::is_zero(&self.x) && Scalar::is_zero(&self.y) && Scalar::is_zero(&self.z)
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.x, self.y, self.z)
    }
}

impl Serialize for Point {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        [self.x.to_string(), self.y.to_string(), self.z.to_string()].serialize(s)
    }
}

impl<'de> Deserialize<'de> for Point {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let [x, y, z] = <[String; 3]>::deserialize(d)?;
        let p = |t: &str| parse_rational(t).map_err(serde::de::Error::custom);
        Ok(Point::new(p(&x)?, p(&y)?, p(&z)?))
    }
}

/// The five cyclic sums evaluated at one point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclicSums {
    pub x4: Rational,
    pub x2y2: Rational,
    pub x2yz: Rational,
    pub x3y: Rational,
    pub xy3: Rational,
}

impl CyclicSums {
    pub fn at(x: &Rational, y: &Rational, z: &Rational) -> Self {
        let (x2, y2, z2) = (x * x, y * y, z * z);
        CyclicSums {
            x4: &x2 * &x2 + &y2 * &y2 + &z2 * &z2,
            x2y2: &x2 * &y2 + &y2 * &z2 + &z2 * &x2,
            x2yz: x * y * z * (x + y + z),
            x3y: &x2 * x * y + &y2 * y * z + &z2 * z * x,
            xy3: x * &y2 * y + y * &z2 * z + z * &x2 * x,
        }
    }

    pub fn combine(&self, c: &CyclicParams) -> Rational {
        &self.x4 + &c.k * &self.x2y2 + &c.l * &self.x2yz + &c.m * &self.x3y + &c.n * &self.xy3
    }
}

/// `F(x, y, z)` for the form with parameters `c`.
pub fn eval_form(c: &CyclicParams, x: &Rational, y: &Rational, z: &Rational) -> Rational {
    CyclicSums::at(x, y, z).combine(c)
}

pub fn eval_form_at(c: &CyclicParams, p: &Point) -> Rational {
    eval_form(c, &p.x, &p.y, &p.z)
}

/// Elementary symmetric values `p = x+y+z`, `q = xy+yz+zx`, `r = xyz`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SigmaCoords {
    pub p: Rational,
    pub q: Rational,
    pub r: Rational,
}

impl SigmaCoords {
    pub fn new(p: Rational, q: Rational, r: Rational) -> Self {
        SigmaCoords { p, q, r }
    }

    pub fn of_point(x: &Rational, y: &Rational, z: &Rational) -> Self {
        SigmaCoords {
            p: x + y + z,
            q: x * y + y * z + z * x,
            r: x * y * z,
        }
    }
}

/// Symmetric sums expressed through `(p, q, r)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PowerSums {
    pub sum_x4: Rational,
    pub sum_x2y2: Rational,
    pub sum_x2yz: Rational,
    /// `Σx³y + Σxy³`
    pub sum_x3y_plus_xy3: Rational,
}

pub fn power_sums(s: &SigmaCoords) -> PowerSums {
    let (p, q, r) = (&s.p, &s.q, &s.r);
    let p2 = p * p;
    let q2 = q * q;
    let pr = p * r;
    PowerSums {
        sum_x4: &p2 * &p2 - int(4) * &p2 * q + int(2) * &q2 + int(4) * &pr,
        sum_x2y2: &q2 - int(2) * &pr,
        sum_x2yz: pr.clone(),
        sum_x3y_plus_xy3: &p2 * q - int(2) * &q2 - &pr,
    }
}

/// `(x-y)²(y-z)²(z-x)²` in terms of `(p, q, r)`.
pub fn vandermonde_square(s: &SigmaCoords) -> Rational {
    let (p, q, r) = (&s.p, &s.q, &s.r);
    let a = p * p - int(3) * q;
    let b = int(2) * p * p * p - int(9) * p * q + int(27) * r;
    (int(4) * &a * &a * &a - &b * &b) / int(27)
}

/// Range `[r1, r2]` of `xyz` over real points with `x+y+z = 1` and
/// `xy+yz+zx = (1-t²)/3`.
pub fn r_range(t: &Rational) -> Result<(Rational, Rational)> {
    if t.is_negative() {
        return Err(Error::usage(format!("r_range needs t >= 0, got {t}")));
    }
    let base = int(1) - int(3) * t * t;
    let twice_cube = int(2) * t * t * t;
    Ok(((&base - &twice_cube) / int(27), (&base + &twice_cube) / int(27)))
}

/// `27(m-n)² + (4k+m+n-8-2l)²`.
pub fn radicand(c: &CyclicParams) -> Rational {
    let d = &c.m - &c.n;
    let f2 = f2(c);
    int(27) * &d * &d + &f2 * &f2
}

pub(crate) fn f1(c: &CyclicParams) -> Rational {
    int(2) + &c.k - &c.m - &c.n
}

pub(crate) fn f2(c: &CyclicParams) -> Rational {
    int(4) * &c.k + &c.m + &c.n - int(8) - int(2) * &c.l
}

pub(crate) fn f3(c: &CyclicParams) -> Rational {
    int(1) + &c.k + &c.m + &c.n + &c.l
}

/// `g(t) = 3f1 t⁴ - sqrt(R) t³ + 3(4+m+n-l) t² + f3` over `Q(sqrt(R))`.
#[derive(Clone, Debug, PartialEq)]
pub struct ReducedQuartic {
    pub poly: Poly<QuadExt>,
    pub radicand: Rational,
    pub a0: Rational,
    pub a2: Rational,
    pub a4: Rational,
}

impl ReducedQuartic {
    /// The quartic as a rule input with `a1 = -sqrt(R)`.
    pub fn special_quartic(&self) -> SpecialQuartic {
        let a1_sign = if Scalar::is_zero(&self.radicand) { Sign::Zero } else { Sign::Negative };
        SpecialQuartic {
            a0: self.a0.clone(),
            a1_squared: self.radicand.clone(),
            a1_sign,
            a2: self.a2.clone(),
            a4: self.a4.clone(),
        }
    }

    /// Coefficients `(a0, a1, a2, a3, a4)`, leading first.
    pub fn coefficients(&self) -> [QuadExt; 5] {
        let r = &self.radicand;
        let lift = |q: &Rational| QuadExt::rational(q.clone(), r).expect("R >= 0");
        let v = if Scalar::is_zero(r) { int(0) } else { int(-1) };
        [
            lift(&self.a0),
            QuadExt::new(int(0), v, r.clone()).expect("R >= 0"),
            lift(&self.a2),
            lift(&int(0)),
            lift(&self.a4),
        ]
    }

    pub fn eval(&self, t: &Rational) -> QuadExt {
        self.poly.eval_rational(t)
    }
}

pub fn reduce_to_g(c: &CyclicParams) -> ReducedQuartic {
    let radicand = radicand(c);
    let a0 = int(3) * f1(c);
    let a2 = int(3) * (int(4) + &c.m + &c.n - &c.l);
    let a4 = f3(c);
    let mut g = ReducedQuartic {
        poly: Poly::zero(),
        radicand,
        a0,
        a2,
        a4,
    };
    g.poly = Poly::from_leading_first(g.coefficients().to_vec());
    g
}

/// `LHS - |RHS|` of the symmetrization inequality
/// `F(x,y,z) + F(x,z,y) >= |(m-n)(x+y+z)(x-y)(y-z)(z-x)|`.
///
/// Half of this value is `min(F(x,y,z), F(x,z,y))`.
pub fn symmetrized_gap(c: &CyclicParams, x: &Rational, y: &Rational, z: &Rational) -> Rational {
    let s = CyclicSums::at(x, y, z);
    let lhs = int(2) * &s.x4
        + int(2) * &c.k * &s.x2y2
        + int(2) * &c.l * &s.x2yz
        + (&c.m + &c.n) * (&s.x3y + &s.xy3);
    let rhs = (&c.m - &c.n) * (x + y + z) * (x - y) * (y - z) * (z - x);
    lhs - rhs.abs()
}

/// `H(r) = (2(8-4k+2l-m-n)/3) t³ + (3t²-1+27r) sqrt(R/9)`, carried as
/// `u + v sqrt(R)` with `v = (3t²-1+27r)/3`.
pub fn h_function(c: &CyclicParams, t: &Rational, r: &Rational) -> QuadExt {
    let f = -f2(c);
    let u = int(2) * f / int(3) * t * t * t;
    let v = (int(3) * t * t - int(1) + int(27) * r) / int(3);
    QuadExt::new(u, v, radicand(c)).expect("R >= 0")
}

/// Alternative parametrization by `(B, C, D, E)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BcdeParams {
    #[serde(with = "crate::arith::serde_str")]
    pub b: Rational,
    #[serde(with = "crate::arith::serde_str")]
    pub c: Rational,
    #[serde(with = "crate::arith::serde_str")]
    pub d: Rational,
    #[serde(with = "crate::arith::serde_str")]
    pub e: Rational,
}

impl BcdeParams {
    pub fn new(b: Rational, c: Rational, d: Rational, e: Rational) -> Self {
        BcdeParams { b, c, d, e }
    }
}

pub fn from_bcde(p: &BcdeParams) -> CyclicParams {
    let (b, c, d, e) = (&p.b, &p.c, &p.d, &p.e);
    CyclicParams {
        k: int(2) * b + c + e + int(6),
        l: int(2) * c + d + e + int(12) + int(5) * b,
        m: b + int(4),
        n: b + e + int(4),
    }
}

/// The cubic `X³ - X² + ((1-t²)/3) X - r` whose roots are `x, y, z` when
/// `x+y+z = 1`.
pub fn sigma_cubic(t: &Rational, r: &Rational) -> Poly<Rational> {
    Poly::from_leading_first(vec![int(1), int(-1), (int(1) - t * t) / int(3), -r.clone()])
}
