//! Exact scalars: big rationals and elements of a real quadratic extension
//! `Q(sqrt(R))`.
//!
//! Both implement [`Scalar`], the ordered-field interface that the polynomial
//! code is generic over. Signs are always decided exactly; floating point is
//! only used for seeding searches, never for a decision.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, Sign as BigSign};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision exact fraction, always kept in lowest terms with a
/// positive denominator.
pub type Rational = BigRational;

/// Exact sign of a scalar.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

impl Sign {
    pub fn of(r: &Rational) -> Sign {
        match r.numer().sign() {
            BigSign::Minus => Sign::Negative,
            BigSign::NoSign => Sign::Zero,
            BigSign::Plus => Sign::Positive,
        }
    }

    pub fn from_i8(v: i8) -> Sign {
        match v.signum() {
            -1 => Sign::Negative,
            0 => Sign::Zero,
            _ => Sign::Positive,
        }
    }

    pub fn as_i8(self) -> i8 {
        match self {
            Sign::Negative => -1,
            Sign::Zero => 0,
            Sign::Positive => 1,
        }
    }

    pub fn is_zero(self) -> bool {
        self == Sign::Zero
    }
}

impl Neg for Sign {
    type Output = Sign;
    fn neg(self) -> Sign {
        Sign::from_i8(-self.as_i8())
    }
}

impl Mul for Sign {
    type Output = Sign;
    fn mul(self, rhs: Sign) -> Sign {
        Sign::from_i8(self.as_i8() * rhs.as_i8())
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Negative => "-",
            Sign::Zero => "0",
            Sign::Positive => "+",
        })
    }
}

/// Parses a rational literal: optional sign, decimal digits, optional
/// `/` and a positive decimal denominator. Floating-point syntax is rejected.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let bad = || Error::Parse(text.to_string());
    let s = text.trim();
    let (negative, body) = match s.as_bytes().first() {
        Some(b'-') => (true, &s[1..]),
        Some(b'+') => (false, &s[1..]),
        _ => (false, s),
    };
    let (num, den) = match body.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (body, None),
    };
    let digits = |d: &str| !d.is_empty() && d.bytes().all(|b| b.is_ascii_digit());
    if !digits(num) {
        return Err(bad());
    }
    let mut numer: BigInt = num.parse().map_err(|_| bad())?;
    if negative {
        numer = -numer;
    }
    let denom: BigInt = match den {
        Some(d) if digits(d) => d.parse().map_err(|_| bad())?,
        Some(_) => return Err(bad()),
        None => BigInt::one(),
    };
    if denom.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(numer, denom))
}

/// Shorthand for small rational constants.
pub fn rat(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

pub fn to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or_else(|| {
        // Ratios of huge integers overflow the direct conversion.
        let shift = r.numer().bits().max(r.denom().bits()).saturating_sub(1000) as usize;
        let n = (r.numer() >> shift).to_f64().unwrap_or(f64::NAN);
        let d = (r.denom() >> shift).to_f64().unwrap_or(f64::NAN);
        n / d
    })
}

/// Dyadic rational `floor(sqrt(r) * 2^bits) / 2^bits`, a lower bound of
/// `sqrt(r)` within `2^-bits`. `r` must be nonnegative.
pub fn sqrt_floor(r: &Rational, bits: u32) -> Rational {
    debug_assert!(!r.is_negative());
    let scale = BigInt::one() << (2 * bits as usize);
    let scaled = (r * Rational::from_integer(scale)).floor().to_integer();
    Rational::new(scaled.sqrt(), BigInt::one() << bits as usize)
}

/// Rounds `r` to the nearest multiple of `2^-bits` (ties toward +inf).
pub fn round_dyadic(r: &Rational, bits: u32) -> Rational {
    let scale = BigInt::one() << bits as usize;
    let scaled = r * Rational::from_integer(scale.clone()) + rat(1, 2);
    Rational::new(scaled.floor().to_integer(), scale)
}

/// Best rational approximation of a finite float with the given bit budget.
pub fn from_f64_dyadic(x: f64, bits: u32) -> Rational {
    Rational::from_float(x)
        .map(|r| round_dyadic(&r, bits))
        .unwrap_or_else(Rational::zero)
}

/// Ordered-field interface used by the generic polynomial code.
///
/// Elements carry their own context (the radicand for [`QuadExt`]), so
/// constants are produced from an existing element with [`Scalar::zero_like`],
/// [`Scalar::one_like`] and [`Scalar::embed`].
pub trait Scalar: Clone + PartialEq + fmt::Debug + fmt::Display + Send + Sync + 'static {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    /// The rational `r` viewed in the same field as `self`.
    fn embed(&self, r: &Rational) -> Self;
    fn is_zero(&self) -> bool;
    fn sign(&self) -> Sign;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Field division. Panics on a zero divisor; callers check first.
    fn div(&self, rhs: &Self) -> Self;
    fn approx(&self) -> f64;
}

impl Scalar for Rational {
    fn zero_like(&self) -> Self {
        Rational::zero()
    }
    fn one_like(&self) -> Self {
        Rational::one()
    }
    fn embed(&self, r: &Rational) -> Self {
        r.clone()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn sign(&self) -> Sign {
        Sign::of(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn div(&self, rhs: &Self) -> Self {
        assert!(!Zero::is_zero(rhs), "division by zero");
        self / rhs
    }
    fn approx(&self) -> f64 {
        to_f64(self)
    }
}

/// Element `u + v*sqrt(radicand)` of `Q(sqrt(radicand))`, `radicand >= 0`.
///
/// Perfect-square radicands are not simplified; equality is structural.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuadExt {
    u: Rational,
    v: Rational,
    radicand: Rational,
}

impl QuadExt {
    pub fn new(u: Rational, v: Rational, radicand: Rational) -> Result<Self> {
        if radicand.is_negative() {
            return Err(Error::NegativeRadicand(radicand.to_string()));
        }
        Ok(QuadExt { u, v, radicand })
    }

    /// The rational `u` inside `Q(sqrt(radicand))`.
    pub fn rational(u: Rational, radicand: &Rational) -> Result<Self> {
        QuadExt::new(u, Rational::zero(), radicand.clone())
    }

    /// `sqrt(radicand)` itself.
    pub fn sqrt(radicand: &Rational) -> Result<Self> {
        QuadExt::new(Rational::zero(), Rational::one(), radicand.clone())
    }

    pub fn u(&self) -> &Rational {
        &self.u
    }

    pub fn v(&self) -> &Rational {
        &self.v
    }

    pub fn radicand(&self) -> &Rational {
        &self.radicand
    }

    fn check(&self, other: &QuadExt) -> Result<()> {
        if self.radicand != other.radicand {
            return Err(Error::MismatchedRadicand {
                left: self.radicand.to_string(),
                right: other.radicand.to_string(),
            });
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &QuadExt) -> Result<QuadExt> {
        self.check(other)?;
        Ok(self.with(&self.u + &other.u, &self.v + &other.v))
    }

    pub fn checked_sub(&self, other: &QuadExt) -> Result<QuadExt> {
        self.check(other)?;
        Ok(self.with(&self.u - &other.u, &self.v - &other.v))
    }

    pub fn checked_mul(&self, other: &QuadExt) -> Result<QuadExt> {
        self.check(other)?;
        let u = &self.u * &other.u + &self.v * &other.v * &self.radicand;
        let v = &self.u * &other.v + &self.v * &other.u;
        Ok(self.with(u, v))
    }

    /// Division through the conjugate: `a/b = a*conj(b) / norm(b)`.
    pub fn checked_div(&self, other: &QuadExt) -> Result<QuadExt> {
        self.check(other)?;
        if other.sign().is_zero() {
            return Err(Error::DivisionByZero);
        }
        let norm = other.norm();
        let num = self.checked_mul(&other.conjugate())?;
        if Zero::is_zero(&norm) {
            // Nonzero element of zero norm: radicand is a perfect square and
            // the element is a rational multiple of (sqrt(R) +- rational).
            // Fall back to the rational value of sqrt(R).
            let root = exact_sqrt(&self.radicand).expect("zero norm implies square radicand");
            let a = &self.u + &self.v * &root;
            let b = &other.u + &other.v * &root;
            return Ok(self.with(a / b, Rational::zero()));
        }
        Ok(self.with(num.u / &norm, num.v / &norm))
    }

    pub fn conjugate(&self) -> QuadExt {
        self.with(self.u.clone(), -&self.v)
    }

    /// `u^2 - v^2 R`, the product with the conjugate.
    pub fn norm(&self) -> Rational {
        &self.u * &self.u - &self.v * &self.v * &self.radicand
    }

    /// Exact sign of `u + v*sqrt(R)` from rational comparisons only.
    pub fn sign(&self) -> Sign {
        let su = Sign::of(&self.u);
        let sv = if Zero::is_zero(&self.radicand) {
            Sign::Zero
        } else {
            Sign::of(&self.v)
        };
        match (su, sv) {
            (s, Sign::Zero) => s,
            (Sign::Zero, s) => s,
            (a, b) if a == b => a,
            (a, b) => {
                let lhs = &self.u * &self.u;
                let rhs = &self.v * &self.v * &self.radicand;
                match lhs.cmp(&rhs) {
                    std::cmp::Ordering::Greater => a,
                    std::cmp::Ordering::Less => b,
                    std::cmp::Ordering::Equal => Sign::Zero,
                }
            }
        }
    }

    pub fn to_f64(&self) -> f64 {
        to_f64(&self.u) + to_f64(&self.v) * to_f64(&self.radicand).sqrt()
    }

    /// Rational value when `v = 0` or the radicand is a perfect square.
    pub fn as_rational(&self) -> Option<Rational> {
        if Zero::is_zero(&self.v) {
            return Some(self.u.clone());
        }
        exact_sqrt(&self.radicand).map(|root| &self.u + &self.v * root)
    }

    fn with(&self, u: Rational, v: Rational) -> QuadExt {
        QuadExt {
            u,
            v,
            radicand: self.radicand.clone(),
        }
    }
}

/// Exact square root of a nonnegative rational, if it is a perfect square.
pub fn exact_sqrt(r: &Rational) -> Option<Rational> {
    if r.is_negative() {
        return None;
    }
    let n = r.numer().sqrt();
    let d = r.denom().sqrt();
    (&n * &n == *r.numer() && &d * &d == *r.denom()).then(|| Rational::new(n, d))
}

impl fmt::Display for QuadExt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (Zero::is_zero(&self.u), Zero::is_zero(&self.v)) {
            (_, true) => write!(f, "{}", self.u),
            (true, false) => write!(f, "{}*sqrt({})", self.v, self.radicand),
            (false, false) => write!(f, "{} + {}*sqrt({})", self.u, self.v, self.radicand),
        }
    }
}

// Operator sugar. Mismatched radicands are a programming error here; the
// `checked_*` methods are the fallible entry points.
impl Add for &QuadExt {
    type Output = QuadExt;
    fn add(self, rhs: &QuadExt) -> QuadExt {
        self.checked_add(rhs).expect("QuadExt add")
    }
}

impl Sub for &QuadExt {
    type Output = QuadExt;
    fn sub(self, rhs: &QuadExt) -> QuadExt {
        self.checked_sub(rhs).expect("QuadExt sub")
    }
}

impl Mul for &QuadExt {
    type Output = QuadExt;
    fn mul(self, rhs: &QuadExt) -> QuadExt {
        self.checked_mul(rhs).expect("QuadExt mul")
    }
}

impl Neg for &QuadExt {
    type Output = QuadExt;
    fn neg(self) -> QuadExt {
        self.with(-&self.u, -&self.v)
    }
}

impl Scalar for QuadExt {
    fn zero_like(&self) -> Self {
        self.with(Rational::zero(), Rational::zero())
    }
    fn one_like(&self) -> Self {
        self.with(Rational::one(), Rational::zero())
    }
    fn embed(&self, r: &Rational) -> Self {
        self.with(r.clone(), Rational::zero())
    }
    fn is_zero(&self) -> bool {
        QuadExt::sign(self).is_zero()
    }
    fn sign(&self) -> Sign {
        QuadExt::sign(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn div(&self, rhs: &Self) -> Self {
        self.checked_div(rhs).expect("QuadExt div")
    }
    fn approx(&self) -> f64 {
        self.to_f64()
    }
}

/// Serde adapters that carry rationals as strings, so big values survive
/// JSON round trips losslessly.
pub mod serde_str {
    use serde::{de, Deserialize, Deserializer, Serializer};

    use super::{parse_rational, Rational};

    pub fn serialize<S: Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(r)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        let text = String::deserialize(d)?;
        parse_rational(&text).map_err(de::Error::custom)
    }

    pub mod option {
        use super::*;

        pub fn serialize<S: Serializer>(r: &Option<Rational>, s: S) -> Result<S::Ok, S::Error> {
            match r {
                Some(r) => s.collect_str(r),
                None => s.serialize_none(),
            }
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<Rational>, D::Error> {
            Option::<String>::deserialize(d)?
                .map(|t| parse_rational(&t).map_err(de::Error::custom))
                .transpose()
        }
    }

    pub mod pair {
        use super::*;

        pub fn serialize<S: Serializer>(p: &(Rational, Rational), s: S) -> Result<S::Ok, S::Error> {
            use serde::ser::SerializeTuple;
            let mut t = s.serialize_tuple(2)?;
            t.serialize_element(&p.0.to_string())?;
            t.serialize_element(&p.1.to_string())?;
            t.end()
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<(Rational, Rational), D::Error> {
            let (a, b) = <(String, String)>::deserialize(d)?;
            Ok((
                parse_rational(&a).map_err(de::Error::custom)?,
                parse_rational(&b).map_err(de::Error::custom)?,
            ))
        }
    }
}
