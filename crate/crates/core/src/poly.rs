//! Dense univariate polynomials over an exact ordered field.
//!
//! Coefficients are stored lowest degree first internally; the public
//! constructors and accessors use the conventional leading-first order
//! `a0 x^n + a1 x^(n-1) + ... + an`.

use std::fmt;

use crate::arith::{Rational, Scalar, Sign};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
pub struct Poly<S> {
    /// `coeffs[i]` multiplies `x^i`; the last entry is nonzero.
    coeffs: Vec<S>,
}

/// Endpoint of a root-counting interval.
#[derive(Clone, Debug, PartialEq)]
pub enum Bound<S> {
    NegInf,
    At(S),
    PosInf,
}

/// `[D1, ..., Dn]`: leading principal minors of even order of the
/// discrimination matrix of `(f, f')`.
#[derive(Clone, Debug, PartialEq)]
pub struct DiscriminantSequence<S> {
    pub entries: Vec<S>,
}

impl<S: Scalar> DiscriminantSequence<S> {
    pub fn signs(&self) -> Vec<Sign> {
        self.entries.iter().map(Scalar::sign).collect()
    }
}

/// Negated-remainder sequence of `(f, f')`, each member scaled by a positive
/// constant (its leading coefficient made `+-1`).
#[derive(Clone, Debug, PartialEq)]
pub struct SturmChain<S> {
    pub polys: Vec<Poly<S>>,
}

impl<S: Scalar> Poly<S> {
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    /// Builds `a0 x^n + ... + an`; leading zero coefficients are dropped.
    pub fn from_leading_first(coeffs: Vec<S>) -> Self {
        let mut c = coeffs;
        c.reverse();
        Self::from_ascending(c)
    }

    /// Builds `c0 + c1 x + ... + cn x^n`.
    pub fn from_ascending(coeffs: Vec<S>) -> Self {
        let mut p = Poly { coeffs };
        p.trim();
        p
    }

    pub fn constant(c: S) -> Self {
        Self::from_ascending(vec![c])
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Scalar::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&S> {
        self.coeffs.last()
    }

    pub fn coeffs_ascending(&self) -> &[S] {
        &self.coeffs
    }

    pub fn coeffs_leading_first(&self) -> Vec<S> {
        self.coeffs.iter().rev().cloned().collect()
    }

    /// Coefficient of `x^i` (zero beyond the degree), given a context element.
    fn coeff_or_zero(&self, i: usize, ctx: &S) -> S {
        self.coeffs.get(i).cloned().unwrap_or_else(|| ctx.zero_like())
    }

    fn context(&self) -> Option<&S> {
        self.coeffs.first()
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &S) -> S {
        self.coeffs
            .iter()
            .rev()
            .fold(x.zero_like(), |acc, c| acc.mul(x).add(c))
    }

    /// Evaluation at a rational point embedded into the coefficient field.
    pub fn eval_rational(&self, x: &Rational) -> S {
        match self.context() {
            Some(ctx) => self.eval(&ctx.embed(x)),
            None => unreachable_zero(),
        }
    }

    pub fn sign_at(&self, x: &Bound<S>) -> Sign {
        let Some(lc) = self.leading() else {
            return Sign::Zero;
        };
        match x {
            Bound::PosInf => lc.sign(),
            Bound::NegInf if self.coeffs.len().is_multiple_of(2) => -lc.sign(),
            Bound::NegInf => lc.sign(),
            Bound::At(v) => self.eval(v).sign(),
        }
    }

    pub fn derivative(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c.mul(&c.embed(&Rational::from_integer(i.into()))))
            .collect();
        Self::from_ascending(coeffs)
    }

    pub fn scale(&self, k: &S) -> Self {
        Self::from_ascending(self.coeffs.iter().map(|c| c.mul(k)).collect())
    }

    pub fn neg(&self) -> Self {
        Poly {
            coeffs: self.coeffs.iter().map(Scalar::neg).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let (long, short) = if self.coeffs.len() >= other.coeffs.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (c, s) in coeffs.iter_mut().zip(&short.coeffs) {
            *c = c.add(s);
        }
        Self::from_ascending(coeffs)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let zero = self.coeffs[0].zero_like();
        let mut out = vec![zero; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        Self::from_ascending(out)
    }

    pub fn pow(&self, e: usize) -> Self {
        let one = match self.context() {
            Some(c) => Self::constant(c.one_like()),
            None if e == 0 => unreachable_zero(),
            None => return Self::zero(),
        };
        (0..e).fold(one, |acc, _| acc.mul(self))
    }

    /// Euclidean division `self = q * d + r` with `deg r < deg d`.
    pub fn div_rem(&self, d: &Self) -> Result<(Self, Self)> {
        let Some(dl) = d.leading() else {
            return Err(Error::DivisionByZero);
        };
        let dd = d.coeffs.len() - 1;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Self::zero(), self.clone()));
        }
        let mut quot = vec![dl.zero_like(); rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let c = rem[i + dd].div(dl);
            if !c.is_zero() {
                for (j, dc) in d.coeffs.iter().enumerate() {
                    rem[i + j] = rem[i + j].sub(&c.mul(dc));
                }
            }
            quot[i] = c;
        }
        rem.truncate(dd);
        Ok((Self::from_ascending(quot), Self::from_ascending(rem)))
    }

    pub fn rem(&self, d: &Self) -> Result<Self> {
        Ok(self.div_rem(d)?.1)
    }

    /// Exact quotient; errors if `d` does not divide `self`.
    pub fn exact_div(&self, d: &Self) -> Result<Self> {
        let (q, r) = self.div_rem(d)?;
        if !r.is_zero() {
            return Err(Error::Internal("inexact polynomial division".into()));
        }
        Ok(q)
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            Some(lc) => {
                let inv = lc.one_like().div(lc);
                self.scale(&inv)
            }
            None => Self::zero(),
        }
    }

    /// Scales by the positive constant that makes the leading coefficient `+-1`.
    fn sign_normalized(&self) -> Self {
        match self.leading() {
            Some(lc) => {
                let unit = match lc.sign() {
                    Sign::Negative => lc.one_like().neg(),
                    _ => lc.one_like(),
                };
                self.scale(&unit.div(lc))
            }
            None => Self::zero(),
        }
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b).expect("nonzero divisor");
            a = b;
            b = r.monic();
        }
        a.monic()
    }

    /// `p / gcd(p, p')`, monic.
    pub fn squarefree_part(&self) -> Self {
        if self.degree().unwrap_or(0) == 0 {
            return self.monic();
        }
        let g = self.gcd(&self.derivative());
        self.exact_div(&g).expect("gcd divides").monic()
    }

    /// Yun's algorithm: `p = lc * prod f_i^i` with monic, squarefree,
    /// pairwise-coprime `f_i`. Returns the nonconstant factors only.
    pub fn squarefree_decompose(&self) -> Result<Vec<(Self, usize)>> {
        if self.is_zero() {
            return Err(Error::usage("squarefree decomposition of the zero polynomial"));
        }
        let mut out = Vec::new();
        if self.degree() == Some(0) {
            return Ok(out);
        }
        let p = self.monic();
        let dp = p.derivative();
        let a0 = p.gcd(&dp);
        let mut b = p.exact_div(&a0)?;
        let mut c = dp.exact_div(&a0)?;
        let mut d = c.sub(&b.derivative());
        let mut i = 1;
        loop {
            let a = b.gcd(&d);
            if a.degree().unwrap_or(0) > 0 {
                out.push((a.clone(), i));
            }
            b = b.exact_div(&a)?;
            if b.degree() == Some(0) {
                break;
            }
            c = d.exact_div(&a)?;
            d = c.sub(&b.derivative());
            i += 1;
        }
        Ok(out)
    }

    /// Sturm chain of the squarefree part of `self`.
    pub fn sturm_chain(&self) -> SturmChain<S> {
        let p0 = self.squarefree_part();
        let mut polys = vec![p0.clone()];
        let mut prev = p0.clone();
        let mut cur = p0.derivative().sign_normalized();
        while !cur.is_zero() {
            polys.push(cur.clone());
            let r = prev.rem(&cur).expect("nonzero divisor").neg();
            prev = cur;
            cur = r.sign_normalized();
        }
        SturmChain { polys }
    }

    /// Number of distinct real roots in `(lo, hi]`.
    pub fn sturm_count(&self, lo: &Bound<S>, hi: &Bound<S>) -> Result<usize> {
        if self.is_zero() {
            return Err(Error::usage("root count of the zero polynomial"));
        }
        Ok(self.sturm_chain().count(lo, hi))
    }

    pub fn real_root_count(&self) -> Result<usize> {
        self.sturm_count(&Bound::NegInf, &Bound::PosInf)
    }

    /// Discriminant sequence `[D1..Dn]`, `Dk` the leading principal minor of
    /// order `2k` of the `2n x 2n` discrimination matrix.
    pub fn discriminant_sequence(&self) -> Result<DiscriminantSequence<S>> {
        let n = match self.degree() {
            Some(n) if n >= 1 => n,
            _ => return Err(Error::usage("discriminant sequence needs degree >= 1")),
        };
        let m = discrimination_matrix(self, n);
        let entries = (1..=n).map(|k| determinant(&m, 2 * k)).collect();
        Ok(DiscriminantSequence { entries })
    }
}

fn unreachable_zero<T>() -> T {
    panic!("operation needs a nonzero polynomial to fix the coefficient field")
}

/// Rows `2j, 2j+1` hold `f` and `f'` (with one leading zero) shifted right by `j`.
fn discrimination_matrix<S: Scalar>(p: &Poly<S>, n: usize) -> Vec<Vec<S>> {
    let ctx = p.leading().expect("nonzero");
    let f = p.coeffs_leading_first();
    let dp = p.derivative();
    let mut fp = vec![ctx.zero_like()];
    fp.extend((0..n).map(|i| dp.coeff_or_zero(n - 1 - i, ctx)));
    let width = 2 * n;
    let mut rows = Vec::with_capacity(width);
    for j in 0..n {
        for src in [&f, &fp] {
            let mut row = vec![ctx.zero_like(); width];
            for (c, v) in src.iter().enumerate() {
                if j + c < width {
                    row[j + c] = v.clone();
                }
            }
            rows.push(row);
        }
    }
    rows
}

/// Determinant of the leading `size x size` block by fraction-free
/// (Bareiss) elimination with row pivoting.
pub(crate) fn determinant<S: Scalar>(m: &[Vec<S>], size: usize) -> S {
    let ctx = &m[0][0];
    if size == 0 {
        return ctx.one_like();
    }
    let mut a: Vec<Vec<S>> = m[..size].iter().map(|r| r[..size].to_vec()).collect();
    let mut prev = ctx.one_like();
    let mut negate = false;
    for k in 0..size - 1 {
        let Some(pivot) = (k..size).find(|&i| !a[i][k].is_zero()) else {
            return ctx.zero_like();
        };
        if pivot != k {
            a.swap(pivot, k);
            negate = !negate;
        }
        for i in k + 1..size {
            for j in k + 1..size {
                let t = a[i][j].mul(&a[k][k]).sub(&a[i][k].mul(&a[k][j]));
                a[i][j] = t.div(&prev);
            }
        }
        prev = a[k][k].clone();
    }
    let d = a[size - 1][size - 1].clone();
    if negate {
        d.neg()
    } else {
        d
    }
}

impl<S: Scalar> SturmChain<S> {
    /// Sign variations at `x`, zeros skipped.
    pub fn variations(&self, x: &Bound<S>) -> usize {
        let signs = self.polys.iter().map(|p| p.sign_at(x));
        count_sign_changes(signs)
    }

    /// Distinct roots of the chain head in `(lo, hi]`.
    pub fn count(&self, lo: &Bound<S>, hi: &Bound<S>) -> usize {
        self.variations(lo).saturating_sub(self.variations(hi))
    }
}

/// Number of adjacent opposite-sign pairs after dropping zeros.
pub fn count_sign_changes(signs: impl IntoIterator<Item = Sign>) -> usize {
    let mut last = Sign::Zero;
    let mut changes = 0;
    for s in signs.into_iter().filter(|s| !s.is_zero()) {
        if !last.is_zero() && s != last {
            changes += 1;
        }
        last = s;
    }
    changes
}

impl<S: Scalar> fmt::Display for Poly<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| match i {
                0 => format!("({c})"),
                1 => format!("({c})*x"),
                _ => format!("({c})*x^{i}"),
            })
            .collect();
        f.write_str(&terms.join(" + "))
    }
}

/// Parses a comma-separated, leading-first list of rational literals.
pub fn parse_rational_poly(text: &str) -> Result<Poly<Rational>> {
    let coeffs = text
        .split(',')
        .map(crate::arith::parse_rational)
        .collect::<Result<Vec<_>>>()?;
    Ok(Poly::from_leading_first(coeffs))
}
