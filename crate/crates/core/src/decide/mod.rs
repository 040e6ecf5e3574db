//! Deciding whether the cyclic quartic is nonnegative on all of `R³`.
//!
//! Three routes are offered:
//!
//! - [`decide_structural`] follows the reduction to `g(t)` and the
//!   discriminant rule for quartics without a linear term. It is the
//!   reference path.
//! - [`decide_oracle`] runs a Sturm/squarefree nonnegativity test on `g`
//!   directly. It shares no decision logic with the structural path.
//! - [`decide_closed_form`] evaluates the quantifier-free formula in the
//!   eleven polynomials `f1..f7, g1..g4`, in three variants.

mod polys;
pub mod witness;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::arith::{int, Rational, Scalar, Sign};
use crate::error::{Error, Result};
use crate::form::{eval_form_at, reduce_to_g, CyclicParams, Point};
use crate::quartic::QuarticClause;
use crate::roots::is_nonneg_everywhere;

pub use polys::{eval_polys, ClosedFormPolys};
pub use witness::{find_witness, DEFAULT_WITNESS_BUDGET};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    ClosedFormTheorem,
    ClosedFormProof,
    ClosedFormCorrected,
    Structural,
    SturmOracle,
}

impl Method {
    pub const ALL: [Method; 5] = [
        Method::Structural,
        Method::SturmOracle,
        Method::ClosedFormTheorem,
        Method::ClosedFormProof,
        Method::ClosedFormCorrected,
    ];

    /// Command-line spelling.
    pub fn name(self) -> &'static str {
        match self {
            Method::ClosedFormTheorem => "closed-theorem",
            Method::ClosedFormProof => "closed-proof",
            Method::ClosedFormCorrected => "closed-corrected",
            Method::Structural => "structural",
            Method::SturmOracle => "oracle",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Method::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| Error::usage(format!("unknown method {s:?}")))
    }
}

/// Textual variant of the closed-form formula.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ClosedFormVariant {
    /// Strict `f6 < 0 or f7 < 0` in the third disjunct.
    Theorem,
    /// Non-strict `f6 <= 0 or f7 <= 0` in the third disjunct.
    Proof,
    /// Strict third disjunct; the `g3` option of the first disjunct also
    /// requires `k + m - 1 >= 0`.
    Corrected,
}

impl ClosedFormVariant {
    pub const ALL: [ClosedFormVariant; 3] =
        [ClosedFormVariant::Theorem, ClosedFormVariant::Proof, ClosedFormVariant::Corrected];

    pub fn method(self) -> Method {
        match self {
            ClosedFormVariant::Theorem => Method::ClosedFormTheorem,
            ClosedFormVariant::Proof => Method::ClosedFormProof,
            ClosedFormVariant::Corrected => Method::ClosedFormCorrected,
        }
    }
}

/// A PSD/NotPSD answer.
///
/// `fired_clause` names the branch that settled the answer, e.g.
/// `case3/f5>0/f6<0` or `f3=0/quadratic`. A witness, when present, is a point
/// with `F < 0` and `witness_value` holds that value.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub is_psd: bool,
    pub method: Method,
    pub fired_clause: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Point>,
    #[serde(rename = "value", skip_serializing_if = "Option::is_none", with = "crate::arith::serde_str::option")]
    pub witness_value: Option<Rational>,
}

impl Verdict {
    fn new(is_psd: bool, method: Method, clause: impl Into<String>) -> Self {
        Verdict {
            is_psd,
            method,
            fired_clause: clause.into(),
            witness: None,
            witness_value: None,
        }
    }

    /// Attach `point` after checking `F(point) < 0` exactly.
    pub fn with_witness(mut self, params: &CyclicParams, point: Point) -> Result<Self> {
        let value = eval_form_at(params, &point);
        if self.is_psd || Scalar::sign(&value) != Sign::Negative {
            return Err(Error::Internal(format!("{point} is not a witness for {params}")));
        }
        self.witness = Some(point);
        self.witness_value = Some(value);
        Ok(self)
    }
}

fn sign(r: &Rational) -> Sign {
    Scalar::sign(r)
}

pub fn decide_closed_form(c: &CyclicParams, variant: ClosedFormVariant) -> Verdict {
    use Sign::{Negative as Neg, Positive as Pos, Zero};
    let method = variant.method();
    let p = eval_polys(c);
    let (f1, f2, f3, f4) = (sign(&p.f1), sign(&p.f2), sign(&p.f3), sign(&p.f4));
    let (f5, f6, f7) = (sign(&p.f5), sign(&p.f6), sign(&p.f7));
    let (g1, g2, g3, g4) = (sign(&p.g1), sign(&p.g2), sign(&p.g3), sign(&p.g4));
    let ge = |s: Sign| s != Neg;

    if g4 == Zero && f2 == Zero {
        if g1 == Zero && c.m >= int(1) && c.m <= int(4) {
            return Verdict::new(true, method, "case1/g1=0/1<=m<=4");
        }
        if g1 == Pos && ge(g2) {
            return Verdict::new(true, method, "case1/g1>0/g2>=0");
        }
        if g1 == Pos && ge(g3) {
            if variant != ClosedFormVariant::Corrected {
                return Verdict::new(true, method, "case1/g1>0/g3>=0");
            }
            if ge(sign(&(&c.k + &c.m - int(1)))) {
                return Verdict::new(true, method, "case1/g1>0/g3>=0/k+m-1>=0");
            }
        }
    }
    let off_axis = g4 != Zero || f2 != Zero;
    if off_axis && f1 == Pos && f3 == Zero && ge(f4) {
        return Verdict::new(true, method, "case2/f3=0/f4>=0");
    }
    if off_axis && f1 == Pos && f3 == Pos {
        let strict = variant != ClosedFormVariant::Proof;
        let fires = |s: Sign| s == Neg || (!strict && s == Zero);
        let rel = if strict { "<0" } else { "<=0" };
        if f5 == Pos && fires(f6) {
            return Verdict::new(true, method, format!("case3/f5>0/f6{rel}"));
        }
        if f5 == Pos && fires(f7) {
            return Verdict::new(true, method, format!("case3/f5>0/f7{rel}"));
        }
        if f5 == Zero && f7 == Neg {
            return Verdict::new(true, method, "case3/f5=0/f7<0");
        }
    }
    Verdict::new(false, method, "none")
}

/// Case analysis on `g(t) = a0 t⁴ - sqrt(R) t³ + a2 t² + a4`.
pub fn decide_structural(c: &CyclicParams) -> Verdict {
    let method = Method::Structural;
    let g = reduce_to_g(c);
    let (a0, a2, a4, r) = (&g.a0, &g.a2, &g.a4, &g.radicand);
    let verdict = |psd: bool, clause: &str| Verdict::new(psd, method, clause);

    if Scalar::is_zero(r) {
        // Biquadratic a0 t⁴ + a2 t² + a4.
        return match sign(a0) {
            Sign::Negative => verdict(false, "r_zero/a0<0"),
            Sign::Zero => {
                let ok = sign(a2) != Sign::Negative && sign(a4) != Sign::Negative;
                verdict(ok, if ok { "r_zero/a0=0/a2>=0,a4>=0" } else { "r_zero/a0=0/negative" })
            }
            Sign::Positive => {
                if sign(a4) == Sign::Negative {
                    verdict(false, "r_zero/a4<0")
                } else if sign(a2) != Sign::Negative {
                    verdict(true, "r_zero/a2>=0")
                } else if a2 * a2 <= int(4) * a0 * a4 {
                    verdict(true, "r_zero/a2^2<=4a0a4")
                } else {
                    verdict(false, "r_zero/a2^2>4a0a4")
                }
            }
        };
    }
    match sign(a4) {
        Sign::Negative => verdict(false, "f3<0"),
        Sign::Zero => {
            // g = t² (a0 t² - sqrt(R) t + a2) with sqrt(R) > 0.
            if sign(a0) != Sign::Positive {
                verdict(false, "f3=0/f1<=0")
            } else if r <= &(int(4) * a0 * a2) {
                verdict(true, "f3=0/quadratic")
            } else {
                verdict(false, "f3=0/quadratic<0")
            }
        }
        Sign::Positive => match sign(a0) {
            Sign::Negative => verdict(false, "f1<0"),
            Sign::Zero => verdict(false, "f1=0/odd"),
            Sign::Positive => {
                let clause = g
                    .special_quartic()
                    .rule_clause()
                    .expect("a0 > 0, a4 > 0 and R > 0 satisfy the rule hypotheses");
                match clause {
                    QuarticClause::PositiveDefinite => verdict(true, "quartic/d4>0"),
                    QuarticClause::DoubleRoot => verdict(true, "quartic/d4=0,d3<0"),
                    QuarticClause::Rejected => verdict(false, "quartic/rejected"),
                }
            }
        },
    }
}

/// Nonnegativity of `g` on the real line by squarefree decomposition and
/// Sturm counting over `Q(sqrt(R))`.
pub fn decide_oracle(c: &CyclicParams) -> Verdict {
    let g = reduce_to_g(c);
    let psd = is_nonneg_everywhere(&g.poly);
    Verdict::new(psd, Method::SturmOracle, "sturm")
}

/// Run one method and, if asked, search for a witness on a NotPSD answer.
///
/// A missing witness within the budget is not an error; the verdict simply
/// carries none.
pub fn decide(c: &CyclicParams, method: Method, want_witness: bool) -> Result<Verdict> {
    let v = match method {
        Method::Structural => decide_structural(c),
        Method::SturmOracle => decide_oracle(c),
        Method::ClosedFormTheorem => decide_closed_form(c, ClosedFormVariant::Theorem),
        Method::ClosedFormProof => decide_closed_form(c, ClosedFormVariant::Proof),
        Method::ClosedFormCorrected => decide_closed_form(c, ClosedFormVariant::Corrected),
    };
    if v.is_psd || !want_witness {
        return Ok(v);
    }
    match find_witness(c, DEFAULT_WITNESS_BUDGET) {
        Some(w) => v.with_witness(c, w),
        None => Ok(v),
    }
}
