//! Nonnegativity rule for quartics without a linear term,
//! `a0 x^4 + a1 x^3 + a2 x^2 + a4`, driven by closed-form discriminants.
//!
//! `a1` enters every discriminant only through `a1^2`, so the rule is stated
//! over `(a1^2, sign(a1))`. That keeps it rational even when `a1` is a
//! quadratic surd such as `-sqrt(R)`.

use serde::Serialize;

use crate::arith::{QuadExt, Rational, Scalar, Sign};
use crate::error::{Error, Result};
use crate::poly::Poly;

#[derive(Clone, Debug, PartialEq)]
pub struct SpecialQuartic {
    pub a0: Rational,
    pub a1_squared: Rational,
    pub a1_sign: Sign,
    pub a2: Rational,
    pub a4: Rational,
}

/// Closed-form `D1..D4` of a [`SpecialQuartic`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QuarticDiscriminants {
    #[serde(with = "crate::arith::serde_str")]
    pub d1: Rational,
    #[serde(with = "crate::arith::serde_str")]
    pub d2: Rational,
    #[serde(with = "crate::arith::serde_str")]
    pub d3: Rational,
    #[serde(with = "crate::arith::serde_str")]
    pub d4: Rational,
}

/// Which condition of the rule accepted the quartic.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum QuarticClause {
    /// `D4 > 0 and (D2 < 0 or D3 < 0)`: no real roots.
    PositiveDefinite,
    /// `D4 = 0 and D3 < 0`: one double real root.
    DoubleRoot,
    Rejected,
}

impl SpecialQuartic {
    pub fn new(a0: Rational, a1_squared: Rational, a1_sign: Sign, a2: Rational, a4: Rational) -> Result<Self> {
        if Scalar::sign(&a1_squared) == Sign::Negative {
            return Err(Error::usage("a1^2 must be nonnegative"));
        }
        if (Scalar::sign(&a1_squared) == Sign::Zero) != (a1_sign == Sign::Zero) {
            return Err(Error::usage("a1 sign must be zero exactly when a1^2 is"));
        }
        Ok(SpecialQuartic {
            a0,
            a1_squared,
            a1_sign,
            a2,
            a4,
        })
    }

    /// From a rational `a1`.
    pub fn from_coeffs(a0: Rational, a1: Rational, a2: Rational, a4: Rational) -> Self {
        SpecialQuartic {
            a0,
            a1_squared: &a1 * &a1,
            a1_sign: Scalar::sign(&a1),
            a2,
            a4,
        }
    }

    /// The quartic over `Q(sqrt(a1^2))` with `a1 = sign * sqrt(a1^2)`.
    pub fn to_poly(&self) -> Poly<QuadExt> {
        let r = &self.a1_squared;
        let lift = |c: &Rational| QuadExt::rational(c.clone(), r).expect("nonnegative radicand");
        let one = Rational::from_integer(self.a1_sign.as_i8().into());
        let a1 = QuadExt::new(Rational::from_integer(0.into()), one, r.clone()).expect("nonnegative radicand");
        let zero = lift(&Rational::from_integer(0.into()));
        Poly::from_leading_first(vec![lift(&self.a0), a1, lift(&self.a2), zero, lift(&self.a4)])
    }

    /// The quartic over the rationals, when `a1^2` is a perfect square.
    pub fn to_rational_poly(&self) -> Option<Poly<Rational>> {
        let root = crate::arith::exact_sqrt(&self.a1_squared)?;
        let a1 = root * Rational::from_integer(self.a1_sign.as_i8().into());
        Some(Poly::from_leading_first(vec![
            self.a0.clone(),
            a1,
            self.a2.clone(),
            Rational::from_integer(0.into()),
            self.a4.clone(),
        ]))
    }

    pub fn discriminants(&self) -> Result<QuarticDiscriminants> {
        if Scalar::is_zero(&self.a0) {
            return Err(Error::usage("leading coefficient a0 must be nonzero"));
        }
        let a0 = &self.a0;
        let s = &self.a1_squared;
        let a2 = &self.a2;
        let a4 = &self.a4;
        let a0_2 = a0 * a0;
        let a0_3 = &a0_2 * a0;
        let a0_4 = &a0_3 * a0;
        let a0_5 = &a0_4 * a0;
        let a2_2 = a2 * a2;
        let a2_3 = &a2_2 * a2;
        let a2_4 = &a2_3 * a2;
        let a4_2 = a4 * a4;
        let s2 = s * s;
        let c = |k: i64| Rational::from_integer(k.into());

        let d1 = a0_2.clone();
        let d2 = c(-8) * &a0_3 * a2 + c(3) * s * &a0_2;
        let d3 = c(-4) * &a0_3 * &a2_3 + c(16) * &a0_4 * a2 * a4 + &a0_2 * s * &a2_2
            - c(6) * &a0_3 * s * a4;
        let d4 = c(-27) * &a0_2 * &s2 * &a4_2 + c(16) * &a0_3 * &a2_4 * a4
            - c(128) * &a0_4 * &a2_2 * &a4_2
            - c(4) * &a0_2 * s * &a2_3 * a4
            + c(144) * &a0_3 * a2 * s * &a4_2
            + c(256) * &a0_5 * &a4_2 * a4;
        Ok(QuarticDiscriminants { d1, d2, d3, d4 })
    }

    /// Requires `a0 > 0`, `a4 > 0`, `a1 != 0`.
    pub fn check_rule_preconditions(&self) -> Result<()> {
        if Scalar::sign(&self.a0) != Sign::Positive {
            return Err(Error::usage("rule requires a0 > 0"));
        }
        if Scalar::sign(&self.a4) != Sign::Positive {
            return Err(Error::usage("rule requires a4 > 0"));
        }
        if Scalar::is_zero(&self.a1_squared) {
            return Err(Error::usage("rule requires a1 != 0"));
        }
        Ok(())
    }

    pub fn rule_clause(&self) -> Result<QuarticClause> {
        self.check_rule_preconditions()?;
        let d = self.discriminants()?;
        let (s2, s3, s4) = (Scalar::sign(&d.d2), Scalar::sign(&d.d3), Scalar::sign(&d.d4));
        Ok(match s4 {
            Sign::Positive if s2 == Sign::Negative || s3 == Sign::Negative => {
                QuarticClause::PositiveDefinite
            }
            Sign::Zero if s3 == Sign::Negative => QuarticClause::DoubleRoot,
            _ => QuarticClause::Rejected,
        })
    }

    /// `x -> f(x) >= 0` for all real `x`, decided by the discriminant rule.
    pub fn is_psd(&self) -> Result<bool> {
        Ok(self.rule_clause()? != QuarticClause::Rejected)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, rat};
    use crate::roots::is_nonneg_everywhere;

    fn sq(a0: Rational, a1: Rational, a2: Rational, a4: Rational) -> SpecialQuartic {
        SpecialQuartic::from_coeffs(a0, a1, a2, a4)
    }

    #[test]
    fn discriminant_examples() {
        let d = sq(int(1), int(1), int(0), int(1)).discriminants().unwrap();
        assert_eq!((d.d1, d.d2, d.d3, d.d4), (int(1), int(3), int(-6), int(229)));

        // (x-1)^2 (x^2+x+1/2) = x^4 - x^3 - x^2/2 + 1/2
        let d = sq(int(1), int(-1), rat(-1, 2), rat(1, 2)).discriminants().unwrap();
        assert_eq!(d.d3, rat(-25, 4));
        assert_eq!(d.d4, int(0));

        let d = sq(int(1), int(0), int(1), int(1)).discriminants().unwrap();
        assert_eq!(d.d2, int(-8));

        assert!(sq(int(0), int(1), int(1), int(1)).discriminants().is_err());
    }

    #[test]
    fn rule_examples() {
        assert!(sq(int(1), int(1), int(0), int(1)).is_psd().unwrap());
        assert_eq!(
            sq(int(1), int(-1), rat(-1, 2), rat(1, 2)).rule_clause().unwrap(),
            QuarticClause::DoubleRoot
        );
        assert!(!sq(int(1), int(-3), int(1), int(1)).is_psd().unwrap());
    }

    #[test]
    fn rule_rejects_degenerate_inputs() {
        // x^4 - 2x^2 + 1 = (x^2 - 1)^2 is PSD but has a1 = 0
        assert!(sq(int(1), int(0), int(-2), int(1)).is_psd().is_err());
        assert!(sq(int(-1), int(1), int(0), int(1)).is_psd().is_err());
        assert!(sq(int(1), int(1), int(0), int(0)).is_psd().is_err());
        assert!(SpecialQuartic::new(int(1), int(-1), Sign::Negative, int(0), int(1)).is_err());
        assert!(SpecialQuartic::new(int(1), int(2), Sign::Zero, int(0), int(1)).is_err());
    }

    #[test]
    fn discriminants_ignore_sign_of_a1() {
        let a = sq(rat(3, 2), int(-5), rat(7, 3), int(2)).discriminants().unwrap();
        let b = sq(rat(3, 2), int(5), rat(7, 3), int(2)).discriminants().unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn irrational_a1_matches_oracle() {
        // a1 = -sqrt(108): 9t^4 - sqrt(108) t^3 + 9t^2 + 1
        let q = SpecialQuartic::new(int(9), int(108), Sign::Negative, int(9), int(1)).unwrap();
        assert_eq!(q.is_psd().unwrap(), is_nonneg_everywhere(&q.to_poly()));
        let q = SpecialQuartic::new(int(1), int(20), Sign::Negative, int(1), rat(1, 10)).unwrap();
        assert_eq!(q.is_psd().unwrap(), is_nonneg_everywhere(&q.to_poly()));
    }
}
