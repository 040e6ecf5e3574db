//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_traits::Signed;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use cyclic_psd::arith::{int, rat, Rational, Scalar, Sign};
use cyclic_psd::decide::DEFAULT_WITNESS_BUDGET;
use cyclic_psd::form::{
    eval_form_at, from_bcde, h_function, power_sums, r_range, radicand, sigma_cubic, vandermonde_square, BcdeParams,
    CyclicSums, SigmaCoords,
};
use cyclic_psd::harness::{Finding, WitnessStatus};
use cyclic_psd::quartic::{QuarticDiscriminants, SpecialQuartic};
use cyclic_psd::{
    classify_roots, decide_closed_form, decide_oracle, decide_structural, eval_polys, find_witness, fuzz_report,
    is_nonneg_everywhere, ClosedFormVariant, CyclicParams, FuzzConfig, Method, Point, Poly,
};

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome { pass, detail: detail.into() }
}

fn small_rat(rng: &mut ChaCha8Rng, num: i64, den: i64) -> Rational {
    rat(rng.random_range(-num..=num), rng.random_range(1..=den))
}

fn nonzero_rat(rng: &mut ChaCha8Rng, num: i64, den: i64) -> Rational {
    loop {
        let v = small_rat(rng, num, den);
        if !Scalar::is_zero(&v) {
            return v;
        }
    }
}

fn positive_rat(rng: &mut ChaCha8Rng, num: i64, den: i64) -> Rational {
    rat(rng.random_range(1..=num), rng.random_range(1..=den))
}

fn criterion_1() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let mut d1_ratios = Vec::new();
    let (mut d2_bad, mut d3_bad, mut d4_bad, mut sign_bad) = (0, 0, 0, 0);
    let mut d3_ratios = Vec::new();
    for _ in 0..200 {
        let (a0, a1, a2, a4) = (
            nonzero_rat(&mut rng, 20, 6),
            small_rat(&mut rng, 20, 6),
            small_rat(&mut rng, 20, 6),
            small_rat(&mut rng, 20, 6),
        );
        let poly = Poly::from_leading_first(vec![a0.clone(), a1.clone(), a2.clone(), int(0), a4.clone()]);
        let raw = poly.discriminant_sequence().expect("nonzero").entries;
        let QuarticDiscriminants { d1, d2, d3, d4 } =
            SpecialQuartic::from_coeffs(a0, a1, a2, a4).discriminants().expect("a0 != 0");
        d1_ratios.push(&raw[0] / &d1);
        d2_bad += usize::from(raw[1] != d2);
        d3_bad += usize::from(raw[2] != d3);
        d4_bad += usize::from(raw[3] != d4);
        if !Scalar::is_zero(&d3) {
            d3_ratios.push(&raw[2] / &d3);
        }
        let closed = [&d1, &d2, &d3, &d4].map(Scalar::sign);
        sign_bad += usize::from(closed.iter().zip(&raw).any(|(s, r)| *s != Scalar::sign(r)));
    }
    d1_ratios.sort();
    d1_ratios.dedup();
    d3_ratios.sort();
    d3_ratios.dedup();
    let d1_constant = d1_ratios.len() == 1 && d1_ratios[0] > int(0);
    let ratios = |v: &[Rational]| v.iter().map(ToString::to_string).collect::<Vec<_>>().join(",");
    outcome(
        d1_constant && d2_bad == 0 && d3_bad == 0 && d4_bad == 0,
        format!(
            "D1 ratio {{{}}}; exact mismatches D2 {d2_bad}, D3 {d3_bad}, D4 {d4_bad}; \
             D3 minor/closed ratio {{{}}}; sign mismatches {sign_bad}",
            ratios(&d1_ratios),
            ratios(&d3_ratios)
        ),
    )
}

fn criterion_2() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let mut bad = 0;
    for i in 0..1000 {
        let degree = rng.random_range(2..=6usize);
        let mut p = if i % 4 == 0 {
            // A repeated factor exercises the zero runs of the sign list.
            let lin = Poly::from_leading_first(vec![int(1), small_rat(&mut rng, 6, 3)]);
            let rest = random_poly(&mut rng, degree.saturating_sub(2));
            lin.mul(&lin).mul(&rest)
        } else {
            random_poly(&mut rng, degree)
        };
        if p.degree().unwrap_or(0) < 1 {
            p = random_poly(&mut rng, 2);
        }
        let count = classify_roots(&p).expect("degree >= 1");
        let sturm = p.real_root_count().expect("nonzero");
        bad += usize::from(count.distinct_real != sturm);
    }
    outcome(bad == 0, format!("1000 polynomials of degree 2-6, {bad} disagreements"))
}

fn random_poly(rng: &mut ChaCha8Rng, degree: usize) -> Poly<Rational> {
    let mut c = vec![nonzero_rat(rng, 9, 4)];
    c.extend((0..degree).map(|_| if rng.random_bool(0.25) { int(0) } else { small_rat(rng, 9, 4) }));
    Poly::from_leading_first(c)
}

fn criterion_3() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut bad = 0;
    let mut constructed = 0;
    for i in 0..1000 {
        let q = if i % 10 == 0 {
            // a0 (x - c)² (x² + p x + c p / 2): no linear term, double root at c.
            let a0 = positive_rat(&mut rng, 9, 3);
            let (c, p) = loop {
                let c = nonzero_rat(&mut rng, 8, 3);
                let p = nonzero_rat(&mut rng, 8, 3);
                if c.is_positive() == p.is_positive() && p != int(2) * &c {
                    break (c, p);
                }
            };
            let qq = &c * &p / int(2);
            let q = SpecialQuartic::from_coeffs(
                a0.clone(),
                &a0 * (&p - int(2) * &c),
                &a0 * (&c * &c - int(2) * &c * &p + &qq),
                &a0 * &c * &c * &qq,
            );
            if Scalar::is_zero(&q.discriminants().expect("a0 > 0").d4) {
                constructed += 1;
            }
            q
        } else {
            SpecialQuartic::from_coeffs(
                positive_rat(&mut rng, 20, 5),
                nonzero_rat(&mut rng, 20, 5),
                small_rat(&mut rng, 20, 5),
                positive_rat(&mut rng, 20, 5),
            )
        };
        let rule = q.is_psd().expect("preconditions hold");
        let oracle = is_nonneg_everywhere(&q.to_rational_poly().expect("rational"));
        bad += usize::from(rule != oracle);
    }
    outcome(
        bad == 0 && constructed >= 50,
        format!("1000 quartics ({constructed} with D4 = 0 by construction), {bad} disagreements"),
    )
}

fn criterion_4() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let mut bad_sums = 0;
    for _ in 0..500 {
        let [x, y, z] = [(); 3].map(|_| int(rng.random_range(-50..=50)));
        let s = SigmaCoords::of_point(&x, &y, &z);
        let ps = power_sums(&s);
        let d = CyclicSums::at(&x, &y, &z);
        let v = (&x - &y) * (&y - &z) * (&z - &x);
        let ok = ps.sum_x4 == d.x4
            && ps.sum_x2y2 == d.x2y2
            && ps.sum_x2yz == d.x2yz
            && ps.sum_x3y_plus_xy3 == &d.x3y + &d.xy3
            && vandermonde_square(&s) == &v * &v;
        bad_sums += usize::from(!ok);
    }
    let mut bad_h = 0;
    for _ in 0..500 {
        let c = random_params(&mut rng);
        let t = rat(rng.random_range(0..=60), rng.random_range(1..=7));
        let (r1, r2) = r_range(&t).expect("t >= 0");
        let prod = h_function(&c, &t, &r1).checked_mul(&h_function(&c, &t, &r2)).expect("same radicand");
        let d = &c.m - &c.n;
        let t3 = &t * &t * &t;
        let rest = prod.u() + int(12) * &t3 * &t3 * &d * &d;
        bad_h += usize::from(!(Scalar::is_zero(prod.v()) && Scalar::is_zero(&rest)));
    }
    outcome(
        bad_sums == 0 && bad_h == 0,
        format!("power sums/Vandermonde {bad_sums}/500 failures, H product {bad_h}/500 failures"),
    )
}

fn random_params(rng: &mut ChaCha8Rng) -> CyclicParams {
    CyclicParams::new(
        small_rat(rng, 40, 8),
        small_rat(rng, 40, 8),
        small_rat(rng, 40, 8),
        small_rat(rng, 40, 8),
    )
}

fn criterion_5() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let (mut bad, mut inside) = (0, 0);
    for i in 0..200 {
        let t = rat(rng.random_range(0..=30), rng.random_range(1..=6));
        let (r1, r2) = r_range(&t).expect("t >= 0");
        let r = match i % 5 {
            0 => r1.clone(),
            1 => r2.clone(),
            2 => (&r1 + &r2) / int(2),
            _ => {
                let width = (&r2 - &r1).max(int(1));
                &r1 + &width * rat(rng.random_range(-300..=400), 100)
            }
        };
        let expect = r1 <= r && r <= r2;
        inside += usize::from(expect);
        let pairs = classify_roots(&sigma_cubic(&t, &r)).expect("cubic").imaginary_pairs;
        bad += usize::from((pairs == 0) != expect);
    }
    outcome(bad == 0, format!("200 (t, r) pairs, {inside} inside the range, {bad} exceptions"))
}

fn criterion_6_to_9() -> [Outcome; 4] {
    let cfg = FuzzConfig {
        sample_count: 2000,
        seed: 20_240_601,
        falsifier_budget: 4000,
        pinned: vec![CyclicParams::new(rat(1, 2), int(-3), int(0), int(0))],
        ..FuzzConfig::default()
    };
    let start = Instant::now();
    let report = fuzz_report(&cfg).expect("valid config");
    let elapsed = start.elapsed();
    let recs = &report.records;

    // 6
    let mut mismatch = 0;
    let mut bad_witness = 0;
    let mut missing_witness = 0;
    let mut refuted = 0;
    for r in recs {
        let s = r.verdicts[&Method::Structural];
        mismatch += usize::from(s != r.verdicts[&Method::SturmOracle]);
        if s {
            refuted += usize::from(r.falsifier_point.is_some());
        } else {
            match (&r.witness, r.witness_status) {
                (Some(w), WitnessStatus::Found) => {
                    let v = eval_form_at(&r.params, w);
                    bad_witness += usize::from(Scalar::sign(&v) != Sign::Negative || r.witness_value.as_ref() != Some(&v));
                }
                _ => missing_witness += 1,
            }
        }
    }
    let strata: Vec<String> =
        report.summary.per_stratum.iter().map(|(k, v)| format!("{k}:{v}")).collect();
    let c6 = outcome(
        mismatch == 0
            && bad_witness == 0
            && missing_witness == 0
            && refuted == 0
            && report.summary.hard_failures == 0
            && recs.len() > 2000
            && elapsed < Duration::from_secs(300),
        format!(
            "{} samples [{}] in {:.1}s: structural/oracle mismatches {mismatch}, missing witnesses \
             {missing_witness}, bad witnesses {bad_witness}, PSD refuted {refuted}, PSD attacked {}",
            recs.len(),
            strata.join(" "),
            elapsed.as_secs_f64(),
            report.summary.psd_verdicts_attacked
        ),
    );

    // 8
    let erratum = CyclicParams::new(rat(1, 2), int(-3), int(0), int(0));
    let w = find_witness(&erratum, DEFAULT_WITNESS_BUDGET);
    let point_ok = w == Some(Point::ints(1, 1, 1)) && eval_form_at(&erratum, &Point::ints(1, 1, 1)) == rat(-9, 2);
    let theorem = decide_closed_form(&erratum, ClosedFormVariant::Theorem).is_psd;
    let corrected = decide_closed_form(&erratum, ClosedFormVariant::Corrected).is_psd;
    let (structural, oracle) = (decide_structural(&erratum).is_psd, decide_oracle(&erratum).is_psd);
    let r_zero: Vec<_> = recs.iter().filter(|r| Scalar::is_zero(&radicand(&r.params))).collect();
    let r_zero_bad = r_zero
        .iter()
        .filter(|r| r.verdicts[&Method::ClosedFormCorrected] != r.verdicts[&Method::Structural])
        .count();
    let c8 = outcome(
        point_ok && theorem && !corrected && !structural && !oracle && r_zero_bad == 0 && !r_zero.is_empty(),
        format!(
            "(1/2,-3,0,0): theorem psd={theorem}, structural psd={structural}, oracle psd={oracle}, \
             corrected psd={corrected}, witness (1,1,1) F=-9/2 {point_ok}; R=0 samples {}, corrected != structural {r_zero_bad}",
            r_zero.len()
        ),
    );

    // 9
    let generic: Vec<_> = recs.iter().filter(|r| r.zero_polys.is_empty()).collect();
    let outside: Vec<_> = generic.iter().filter(|r| !r.erratum_region).collect();
    let generic_bad = outside
        .iter()
        .filter(|r| r.verdicts[&Method::ClosedFormTheorem] != r.verdicts[&Method::Structural])
        .count();
    let unexplained = recs
        .iter()
        .flat_map(|r| r.closed_form.values())
        .filter(|f| **f == Finding::Unexplained)
        .count();
    let f6 = report.summary.f6_boundary;
    let f7 = report.summary.f7_boundary;
    let c9 = outcome(
        generic_bad == 0 && !outside.is_empty() && f6.samples > 0 && f7.samples > 0,
        format!(
            "{} fully generic samples, {generic_bad} theorem/structural disagreements, {unexplained} unexplained \
             findings; f6=0 stratum: {} samples, {} PSD, strict agrees {}, non-strict agrees {}; f7=0 stratum: \
             {} samples, {} PSD, strict agrees {}, non-strict agrees {}",
            outside.len(),
            f6.samples,
            f6.structural_psd,
            f6.theorem_agrees,
            f6.proof_agrees,
            f7.samples,
            f7.structural_psd,
            f7.theorem_agrees,
            f7.proof_agrees
        ),
    );

    [c6, criterion_7(), c8, c9]
}

fn criterion_7() -> Outcome {
    let mut notes = Vec::new();
    let mut ok = true;
    let mut check = |label: &str, cond: bool| {
        ok &= cond;
        if !cond {
            notes.push(label.to_string());
        }
    };
    let zero = CyclicParams::ints(0, 0, 0, 0);
    let p = eval_polys(&zero);
    check("decide(0,0,0,0)", decide_structural(&zero).is_psd);
    check("(f5,f6,f7)", (p.f5.clone(), p.f6.clone(), p.f7.clone()) == (int(128), int(-32), int(-768)));
    let two = CyclicParams::ints(2, 0, 0, 0);
    check("decide(2,0,0,0)", decide_structural(&two).is_psd && Scalar::is_zero(&radicand(&two)));
    let m1 = CyclicParams::ints(0, 0, -1, 0);
    let v = decide_structural(&m1);
    check("decide(0,0,-1,0)", v.is_psd && v.fired_clause.starts_with("f3=0") && eval_polys(&m1).f4 == int(2));
    let m3 = CyclicParams::ints(0, 0, -3, 0);
    let w = find_witness(&m3, DEFAULT_WITNESS_BUDGET);
    check(
        "decide(0,0,-3,0)",
        !decide_structural(&m3).is_psd && w == Some(Point::ints(1, 1, 1)) && eval_form_at(&m3, &Point::ints(1, 1, 1)) == int(-6),
    );
    let conv = from_bcde(&BcdeParams::new(int(0), int(0), int(0), int(0)));
    check("convert(0,0,0,0)", conv == CyclicParams::ints(6, 12, 4, 4));
    let detail = if notes.is_empty() {
        "all five spot checks hold".to_string()
    } else {
        format!("failed: {}", notes.join(", "))
    };
    outcome(ok, detail)
}

fn main() -> ExitCode {
    let mut all = true;
    let mut report = |n: usize, title: &str, budget: Option<Duration>, run: &dyn Fn() -> Outcome| {
        let start = Instant::now();
        let mut o = run();
        let took = start.elapsed();
        if let Some(b) = budget {
            if took > b {
                o.pass = false;
                o.detail.push_str(&format!("; over time budget {}s", b.as_secs()));
            }
        }
        all &= o.pass;
        let tag = if o.pass { "PASS" } else { "FAIL" };
        println!("{tag} criterion {n} ({title}, {:.2}s): {}", took.as_secs_f64(), o.detail);
    };
    report(1, "discriminant formulas", Some(Duration::from_secs(5)), &criterion_1);
    report(2, "root counts vs Sturm", Some(Duration::from_secs(30)), &criterion_2);
    report(3, "quartic rule vs oracle", Some(Duration::from_secs(60)), &criterion_3);
    report(4, "symmetric identities", Some(Duration::from_secs(10)), &criterion_4);
    report(5, "xyz range", None, &criterion_5);
    let [c6, c7, c8, c9] = criterion_6_to_9();
    for (n, title, o) in [
        (6, "decider equivalence", c6),
        (7, "spot checks", c7),
        (8, "erratum", c8),
        (9, "closed-form agreement", c9),
    ] {
        all &= o.pass;
        let tag = if o.pass { "PASS" } else { "FAIL" };
        println!("{tag} criterion {n} ({title}): {}", o.detail);
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
