//! Real-root classification from the revised sign list of the discriminant
//! sequence, plus an everywhere-nonnegativity test built only on squarefree
//! decomposition and Sturm counting.

use serde::Serialize;

use crate::arith::{int, rat, Rational, Scalar, Sign};
use crate::error::{Error, Result};
use crate::poly::{count_sign_changes, Bound, DiscriminantSequence, Poly};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignList(pub Vec<Sign>);

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RevisedSignList(pub Vec<Sign>);

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct RootCount {
    pub distinct_real: usize,
    pub imaginary_pairs: usize,
}

impl SignList {
    pub fn from_sequence<S: Scalar>(d: &DiscriminantSequence<S>) -> Self {
        SignList(d.signs())
    }
}

impl RevisedSignList {
    pub fn sign_changes(&self) -> usize {
        count_sign_changes(self.0.iter().copied())
    }

    pub fn nonvanishing(&self) -> usize {
        self.0.iter().filter(|s| !s.is_zero()).count()
    }
}

/// Replaces every zero run bounded by nonzero entries on both sides with
/// `-s, -s, s, s, -s, -s, ...` where `s` is the entry before the run.
/// Leading and trailing zero runs are kept.
pub fn revise(s: &SignList) -> RevisedSignList {
    let mut out = s.0.clone();
    let mut i = 0;
    while i < out.len() {
        if out[i].is_zero() {
            i += 1;
            continue;
        }
        let run_end = (i + 1..out.len()).find(|&j| !s.0[j].is_zero());
        if let Some(end) = run_end {
            let base = s.0[i];
            for r in 1..end - i {
                out[i + r] = if r.div_ceil(2) % 2 == 1 { -base } else { base };
            }
            i = end;
        } else {
            break;
        }
    }
    RevisedSignList(out)
}

/// Everything the root classification derives from a polynomial.
#[derive(Clone, Debug)]
pub struct RootClassification<S> {
    pub sequence: DiscriminantSequence<S>,
    pub signs: SignList,
    pub revised: RevisedSignList,
    pub sign_changes: usize,
    pub nonvanishing: usize,
    pub count: RootCount,
}

pub fn classify_roots_detailed<S: Scalar>(p: &Poly<S>) -> Result<RootClassification<S>> {
    if p.degree().unwrap_or(0) == 0 {
        return Err(Error::usage("root classification needs degree >= 1"));
    }
    let sequence = p.discriminant_sequence()?;
    let signs = SignList::from_sequence(&sequence);
    let revised = revise(&signs);
    let v = revised.sign_changes();
    let l = revised.nonvanishing();
    let distinct_real = l.checked_sub(2 * v).ok_or_else(|| {
        Error::Internal(format!("revised sign list gives l = {l} < 2v = {}", 2 * v))
    })?;
    Ok(RootClassification {
        sequence,
        signs,
        revised,
        sign_changes: v,
        nonvanishing: l,
        count: RootCount {
            distinct_real,
            imaginary_pairs: v,
        },
    })
}

/// Distinct real roots `l - 2v` and imaginary pairs `v`, where `v` counts
/// sign changes and `l` nonzero members of the revised sign list.
pub fn classify_roots<S: Scalar>(p: &Poly<S>) -> Result<RootCount> {
    Ok(classify_roots_detailed(p)?.count)
}

/// `p(x) >= 0` for every real `x`.
pub fn is_nonneg_everywhere<S: Scalar>(p: &Poly<S>) -> bool {
    let Some(deg) = p.degree() else {
        return true;
    };
    let lc = p.leading().expect("nonzero");
    if deg == 0 {
        return lc.sign() != Sign::Negative;
    }
    if deg % 2 == 1 || lc.sign() == Sign::Negative {
        return false;
    }
    let parts = p.squarefree_decompose().expect("nonzero polynomial");
    parts
        .iter()
        .filter(|(_, mult)| mult % 2 == 1)
        .all(|(f, _)| f.real_root_count().expect("nonzero factor") == 0)
}

/// Disjoint half-open intervals `(lo, hi]` with rational endpoints, each
/// holding exactly one distinct real root of `p`; no endpoint is a root.
/// Sorted left to right.
pub fn isolate_real_roots<S: Scalar>(p: &Poly<S>) -> Vec<(Rational, Rational)> {
    let Some(ctx) = p.leading().cloned() else {
        return Vec::new();
    };
    let chain = p.sturm_chain();
    let head = &chain.polys[0];
    let at = |x: &Rational| Bound::At(ctx.embed(x));
    let is_root = |x: &Rational| head.eval(&ctx.embed(x)).is_zero();
    let total = chain.count(&Bound::NegInf, &Bound::PosInf);
    if total == 0 {
        return Vec::new();
    }
    let mut b = int(1);
    while is_root(&b) || is_root(&-&b) || chain.count(&at(&-&b), &at(&b)) < total {
        b = &b + &b;
    }
    let mut out = Vec::with_capacity(total);
    let mut stack = vec![(-&b, b, total)];
    while let Some((lo, hi, n)) = stack.pop() {
        if n == 0 {
            continue;
        }
        if n == 1 {
            out.push((lo, hi));
            continue;
        }
        let width = &hi - &lo;
        let mid = SPLITS
            .iter()
            .map(|&(a, d)| &lo + &width * rat(a, d))
            .find(|m| !is_root(m))
            .expect("finitely many roots");
        let left = chain.count(&at(&lo), &at(&mid));
        stack.push((mid.clone(), hi, n - left));
        stack.push((lo, mid, left));
    }
    out.sort_by(|a, b| a.0.cmp(&b.0));
    out
}

const SPLITS: [(i64, i64); 7] = [(1, 2), (1, 3), (2, 3), (1, 4), (3, 4), (2, 5), (3, 5)];

/// A rational point where `p` is strictly negative, if one exists.
///
/// The sign of `p` is constant between consecutive distinct real roots, so it
/// suffices to probe one point per gap. Among negative probes the one with
/// the most negative approximate value is returned.
pub fn find_negative_point<S: Scalar>(p: &Poly<S>) -> Option<Rational> {
    let ctx = p.leading()?.clone();
    let roots = isolate_real_roots(p);
    let mut probes = vec![int(0), int(1), -int(1)];
    if let (Some(first), Some(last)) = (roots.first(), roots.last()) {
        probes.push(&first.0 - int(1));
        probes.push(last.1.clone() + int(1));
    }
    for (i, (lo, hi)) in roots.iter().enumerate() {
        probes.push(lo.clone());
        probes.push(hi.clone());
        if let Some((next_lo, _)) = roots.get(i + 1) {
            probes.push((hi + next_lo) * rat(1, 2));
        }
    }
    probes
        .into_iter()
        .map(|x| {
            let v = p.eval(&ctx.embed(&x));
            (x, v)
        })
        .filter(|(_, v)| v.sign() == Sign::Negative)
        .min_by(|a, b| a.1.approx().total_cmp(&b.1.approx()))
        .map(|(x, _)| x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::QuadExt;
    use proptest::prelude::*;

    use Sign::{Negative as N, Positive as P, Zero as Z};

    fn pi(cs: &[i64]) -> Poly<Rational> {
        Poly::from_leading_first(cs.iter().map(|&c| int(c)).collect())
    }

    #[test]
    fn revise_examples() {
        assert_eq!(revise(&SignList(vec![P, Z, Z, N])).0, vec![P, N, N, N]);
        assert_eq!(revise(&SignList(vec![P, P, N, P])).0, vec![P, P, N, P]);
        assert_eq!(revise(&SignList(vec![P, Z, Z])).0, vec![P, Z, Z]);
    }

    #[test]
    fn revise_long_interior_run_follows_pattern() {
        // s_i = -1, five zeros: -s, -s, s, s, -s
        let got = revise(&SignList(vec![N, Z, Z, Z, Z, Z, P])).0;
        assert_eq!(got, vec![N, P, P, N, N, P, P]);
    }

    #[test]
    fn revise_keeps_leading_zero_run() {
        assert_eq!(revise(&SignList(vec![Z, Z, P, Z, N])).0, vec![Z, Z, P, N, N]);
    }

    #[test]
    fn classify_examples() {
        assert_eq!(
            classify_roots(&pi(&[1, 0, 1])).unwrap(),
            RootCount { distinct_real: 0, imaginary_pairs: 1 }
        );
        assert_eq!(
            classify_roots(&pi(&[1, 1, 0, 0, 1])).unwrap(),
            RootCount { distinct_real: 0, imaginary_pairs: 2 }
        );
        let f = Poly::from_leading_first(vec![int(1), int(-1), rat(-1, 2), int(0), rat(1, 2)]);
        assert_eq!(
            classify_roots(&f).unwrap(),
            RootCount { distinct_real: 1, imaginary_pairs: 1 }
        );
        assert!(classify_roots(&pi(&[3])).is_err());
    }

    #[test]
    fn classify_with_repeated_roots() {
        // (x-1)^2 (x+2)^3 (x^2+1): two distinct real roots, one imaginary pair
        let f = pi(&[1, -1]).pow(2).mul(&pi(&[1, 2]).pow(3)).mul(&pi(&[1, 0, 1]));
        assert_eq!(
            classify_roots(&f).unwrap(),
            RootCount { distinct_real: 2, imaginary_pairs: 1 }
        );
        assert_eq!(f.real_root_count().unwrap(), 2);
    }

    #[test]
    fn nonneg_examples() {
        assert!(is_nonneg_everywhere(&pi(&[1, 0, 1])));
        assert!(!is_nonneg_everywhere(&pi(&[1, 0, 0, 0])));
        assert!(is_nonneg_everywhere(&Poly::<Rational>::zero()));
        assert!(is_nonneg_everywhere(&pi(&[3])));
        assert!(!is_nonneg_everywhere(&pi(&[-3])));
        assert!(!is_nonneg_everywhere(&pi(&[-1, 0, 0])));
        // (x-1)^2 (x+2)^2 touches zero twice
        assert!(is_nonneg_everywhere(&pi(&[1, -1]).pow(2).mul(&pi(&[1, 2]).pow(2))));
        assert!(!is_nonneg_everywhere(&pi(&[1, -3, 1, 0, 1])));
    }

    #[test]
    fn isolation_separates_close_roots() {
        // roots 1/100, 1/50, 1, -3
        let f = Poly::from_leading_first(vec![int(1), rat(-1, 100)])
            .mul(&Poly::from_leading_first(vec![int(1), rat(-1, 50)]))
            .mul(&pi(&[1, -1]))
            .mul(&pi(&[1, 3]));
        let iv = isolate_real_roots(&f);
        assert_eq!(iv.len(), 4);
        for (lo, hi) in &iv {
            assert!(!f.eval(lo).is_zero() && !f.eval(hi).is_zero());
            assert_eq!(f.sturm_count(&Bound::At(lo.clone()), &Bound::At(hi.clone())).unwrap(), 1);
        }
        assert!(iv.windows(2).all(|w| w[0].1 <= w[1].0));
    }

    #[test]
    fn negative_point_in_thin_dip() {
        // (x - 1/1000)(x - 2/1000) is negative only on a tiny interval
        let f = Poly::from_leading_first(vec![int(1), rat(-1, 1000)])
            .mul(&Poly::from_leading_first(vec![int(1), rat(-2, 1000)]));
        let x = find_negative_point(&f).unwrap();
        assert_eq!(f.eval(&x).sign(), Sign::Negative);
        assert_eq!(find_negative_point(&pi(&[1, 0, 1])), None);
        assert_eq!(find_negative_point(&pi(&[1, -2, 1])), None);
        assert!(find_negative_point(&pi(&[-1])).is_some());
    }

    #[test]
    fn nonneg_over_quadext() {
        // 9t^4 - sqrt(108) t^3 + 9t^2 = t^2 (9t^2 - sqrt(108) t + 9)
        let r = int(108);
        let q = |u: i64, v: i64| QuadExt::new(int(u), int(v), r.clone()).unwrap();
        let g = Poly::from_leading_first(vec![q(9, 0), q(0, -1), q(9, 0), q(0, 0), q(0, 0)]);
        assert!(is_nonneg_everywhere(&g));
        // 9t^4 - sqrt(400) t^3 + 9t^2: inner discriminant 400 - 324 > 0
        let r2 = int(400);
        let q2 = |u: i64, v: i64| QuadExt::new(int(u), int(v), r2.clone()).unwrap();
        let h = Poly::from_leading_first(vec![q2(9, 0), q2(0, -1), q2(9, 0), q2(0, 0), q2(0, 0)]);
        assert!(!is_nonneg_everywhere(&h));
    }

    fn sign_strategy() -> impl Strategy<Value = Sign> {
        prop_oneof![Just(N), Just(Z), Just(P)]
    }

    proptest! {
        #[test]
        fn revise_is_idempotent(v in prop::collection::vec(sign_strategy(), 0..12)) {
            let once = revise(&SignList(v));
            let twice = revise(&SignList(once.0.clone()));
            prop_assert_eq!(once, twice);
        }

        #[test]
        fn revise_preserves_nonzeros_and_extent(v in prop::collection::vec(sign_strategy(), 0..12)) {
            let out = revise(&SignList(v.clone())).0;
            prop_assert_eq!(out.len(), v.len());
            for (a, b) in v.iter().zip(&out) {
                if !a.is_zero() {
                    prop_assert_eq!(a, b);
                }
            }
            let first = |s: &[Sign]| s.iter().position(|x| !x.is_zero());
            let last = |s: &[Sign]| s.iter().rposition(|x| !x.is_zero());
            prop_assert_eq!(first(&v), first(&out));
            prop_assert_eq!(last(&v), last(&out));
        }

        #[test]
        fn classification_is_scale_invariant(
            cs in prop::collection::vec(-9i64..=9, 3..7),
            num in 1i64..20, den in 1i64..20,
        ) {
            prop_assume!(cs[0] != 0);
            let f = pi(&cs);
            let g = f.scale(&rat(num, den));
            prop_assert_eq!(classify_roots(&f).unwrap(), classify_roots(&g).unwrap());
        }

        #[test]
        fn negative_point_exists_iff_not_nonneg(cs in prop::collection::vec(-6i64..=6, 1..7)) {
            let f = pi(&cs);
            let found = find_negative_point(&f);
            if let Some(x) = &found {
                prop_assert_eq!(f.eval(x).sign(), Sign::Negative);
            }
            prop_assert_eq!(found.is_none(), is_nonneg_everywhere(&f));
        }

        #[test]
        fn nonneg_verdict_is_consistent_with_samples(
            cs in prop::collection::vec(-6i64..=6, 1..6),
            xs in prop::collection::vec((-40i64..=40, 1i64..=8), 100),
        ) {
            // squares keep a decent share of the samples nonnegative
            let f = pi(&cs);
            let f = f.mul(&f).add(&pi(&[cs[0]]));
            let values: Vec<Rational> = xs.iter().map(|&(n, d)| f.eval(&rat(n, d))).collect();
            if is_nonneg_everywhere(&f) {
                prop_assert!(values.iter().all(|v| v.sign() != Sign::Negative));
            }
        }
    }
}
