//! Exact positive-semidefiniteness decisions for cyclic ternary quartics
//!
//! ```text
//! F(x,y,z) = Σx⁴ + k Σx²y² + l Σx²yz + m Σx³y + n Σxy³
//! ```
//!
//! Three independent deciders are provided:
//!
//! * [`decide_structural`] reduces `F` to a univariate quartic `g(t)` over
//!   `Q(sqrt(R))` and applies a discriminant rule to it;
//! * [`decide_oracle`] runs a squarefree/Sturm nonnegativity test on `g`;
//! * [`decide_closed_form`] evaluates a quantifier-free formula in `k, l, m, n`
//!   in three textual variants.
//!
//! Non-PSD answers can be certified with [`find_witness`], which returns a
//! rational point where `F < 0`. The [`harness`] module cross-checks all of
//! the above on sampled parameters.
//!
//! All arithmetic is exact: [`Rational`] is an arbitrary-precision fraction
//! and [`QuadExt`] an element `u + v sqrt(R)` of a real quadratic field.

pub mod arith;
pub mod cli;
pub mod decide;
pub mod error;
pub mod form;
pub mod harness;
pub mod poly;
pub mod quartic;
pub mod roots;

pub use arith::{parse_rational, QuadExt, Rational, Scalar, Sign};
pub use decide::{
    decide, decide_closed_form, decide_oracle, decide_structural, eval_polys, find_witness, ClosedFormVariant,
    Method, ClosedFormPolys, Verdict,
};
pub use error::{Error, Result};
pub use form::{eval_form, reduce_to_g, CyclicParams, Point, ReducedQuartic};
pub use harness::{fuzz_compare, fuzz_report, DiscrepancyReport, FuzzConfig, Stratum};
pub use poly::Poly;
pub use quartic::SpecialQuartic;
pub use roots::{classify_roots, is_nonneg_everywhere, RootCount};
