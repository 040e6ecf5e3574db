//! Differential testing of the deciders.
//!
//! Each sample is decided by every method. The structural and Sturm paths
//! must agree and must survive an exact falsifier sweep; any slip there is a
//! bug and fails the run. Closed-form disagreements are the interesting
//! output and are classified, never fatal.

mod falsifier;
mod strata;

use std::collections::BTreeMap;
use std::io::{self, Write};
use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::arith::{int, Rational, Scalar, Sign};
use crate::decide::{
    decide_closed_form, decide_oracle, decide_structural, eval_polys, find_witness, ClosedFormVariant,
    Method, ClosedFormPolys, Verdict, DEFAULT_WITNESS_BUDGET,
};
use crate::error::{Error, Result};
use crate::form::{eval_form_at, radicand, reduce_to_g, CyclicParams, Point};
use crate::quartic::QuarticDiscriminants;

pub use falsifier::sample_falsifier;
pub use strata::{from_g_coefficients, stratum_sampler, RationalSampler, Stratum};

/// Run settings. Deserializes from JSON with every field optional.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct FuzzConfig {
    pub sample_count: usize,
    #[serde(with = "crate::arith::serde_str::pair")]
    pub coefficient_range: (Rational, Rational),
    pub denominator_bound: u32,
    pub seed: u64,
    pub strata: Vec<Stratum>,
    /// Surface points tried against each PSD verdict.
    pub falsifier_budget: usize,
    /// Form evaluations spent looking for a witness per NotPSD verdict.
    pub witness_budget: usize,
    /// Points decided before the sampled ones, tagged `pinned`.
    pub pinned: Vec<CyclicParams>,
}

impl Default for FuzzConfig {
    fn default() -> Self {
        FuzzConfig {
            sample_count: 200,
            coefficient_range: (int(-1000), int(1000)),
            denominator_bound: 64,
            seed: 0,
            strata: Stratum::ALL.to_vec(),
            falsifier_budget: 4000,
            witness_budget: DEFAULT_WITNESS_BUDGET,
            pinned: Vec::new(),
        }
    }
}

impl FuzzConfig {
    pub fn validate(&self) -> Result<()> {
        if self.sample_count == 0 && self.pinned.is_empty() {
            return Err(Error::usage("sample_count must be at least 1"));
        }
        if self.coefficient_range.0 >= self.coefficient_range.1 {
            return Err(Error::usage("coefficient_range needs lo < hi"));
        }
        if self.denominator_bound == 0 {
            return Err(Error::usage("denominator_bound must be positive"));
        }
        if self.strata.is_empty() && self.sample_count > 0 {
            return Err(Error::usage("at least one stratum is required"));
        }
        if self.falsifier_budget == 0 || self.witness_budget == 0 {
            return Err(Error::usage("budgets must be positive"));
        }
        Ok(())
    }

    pub fn sampler(&self) -> RationalSampler {
        RationalSampler {
            lo: self.coefficient_range.0.clone(),
            hi: self.coefficient_range.1.clone(),
            denominator_bound: self.denominator_bound,
        }
    }

    /// Stratum tag and parameters of sample `index`.
    pub fn sample(&self, index: usize) -> (String, CyclicParams) {
        if let Some(c) = self.pinned.get(index) {
            return ("pinned".to_string(), c.clone());
        }
        let j = index - self.pinned.len();
        let stratum = self.strata[j % self.strata.len()];
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed ^ index as u64);
        (stratum.name().to_string(), stratum_sampler(stratum, &mut rng, &self.sampler()))
    }

    pub fn total(&self) -> usize {
        self.pinned.len() + self.sample_count
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum WitnessStatus {
    Found,
    WitnessBudgetExhausted,
    NotNeeded,
}

/// How a closed-form answer relates to the structural one.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Finding {
    Agree,
    /// Inside `{g4=0, f2=0, g1>0, g3>=0, g2<0, k+m-1<0}`.
    ErratumRegion,
    /// Some of the eleven polynomials vanish.
    Boundary,
    Unexplained,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SampleRecord {
    pub index: usize,
    pub stratum: String,
    pub params: CyclicParams,
    pub verdicts: BTreeMap<Method, bool>,
    pub fired_clauses: BTreeMap<Method, String>,
    pub witness_status: WitnessStatus,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Point>,
    #[serde(skip_serializing_if = "Option::is_none", with = "crate::arith::serde_str::option")]
    pub witness_value: Option<Rational>,
    /// Negative point found while attacking a PSD verdict.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub falsifier_point: Option<Point>,
    /// Methods that said PSD although the falsifier found a negative point.
    pub false_psd: Vec<Method>,
    pub closed_form: BTreeMap<Method, Finding>,
    pub erratum_region: bool,
    pub zero_polys: Vec<String>,
    pub polys: ClosedFormPolys,
    /// Discriminants of `g` when its leading coefficient is nonzero.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub g_discriminants: Option<QuarticDiscriminants>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub hard_failure: Option<String>,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct PairTally {
    pub agree: usize,
    pub disagree: usize,
}

impl PairTally {
    fn add(&mut self, same: bool) {
        if same {
            self.agree += 1;
        } else {
            self.disagree += 1;
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct FindingTally {
    pub erratum_region: usize,
    pub boundary: usize,
    pub unexplained: usize,
}

/// Samples on `f6 = 0` (or `f7 = 0`) inside the third disjunct's domain,
/// where the strict and non-strict readings can differ.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct BoundaryTally {
    pub samples: usize,
    pub structural_psd: usize,
    pub theorem_agrees: usize,
    pub proof_agrees: usize,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SignTally {
    pub same: usize,
    pub opposite: usize,
    /// Exactly one of the two is zero.
    pub other: usize,
}

impl SignTally {
    fn add(&mut self, a: Sign, b: Sign) {
        if a == b {
            self.same += 1;
        } else if a == -b {
            self.opposite += 1;
        } else {
            self.other += 1;
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub samples: usize,
    pub per_stratum: BTreeMap<String, usize>,
    pub structural_psd: usize,
    /// Agreement of each method with the structural decider.
    pub agreement_with_structural: BTreeMap<Method, PairTally>,
    pub closed_form_disagreements: BTreeMap<Method, FindingTally>,
    /// PSD claims broken by the falsifier, per method.
    pub false_psd: BTreeMap<Method, usize>,
    pub erratum_region_hits: usize,
    pub psd_verdicts_attacked: usize,
    pub witnesses_found: usize,
    pub witness_budget_exhausted: usize,
    /// Theorem variant vs structural where all eleven values are nonzero,
    /// outside the erratum region.
    pub generic_theorem_agreement: PairTally,
    /// Corrected variant vs structural on every `R = 0` sample.
    pub corrected_on_r_zero: PairTally,
    pub f6_boundary: BoundaryTally,
    pub f7_boundary: BoundaryTally,
    /// Sign of each closed-form polynomial against the matching discriminant
    /// of `g`, on samples with `f1 > 0`, `f3 > 0`, `R > 0`.
    pub sign_relations: BTreeMap<String, SignTally>,
    /// Samples where `f5` and its printed variant have different signs.
    pub f5_printed_sign_mismatches: usize,
    pub hard_failures: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DiscrepancyReport {
    pub records: Vec<SampleRecord>,
    pub summary: Summary,
    /// Wall time; the only field that varies between identical runs.
    pub elapsed_ms: u128,
}

impl DiscrepancyReport {
    /// One JSON object per line, in sample order.
    pub fn write_jsonl<W: Write>(&self, mut out: W) -> io::Result<()> {
        for r in &self.records {
            serde_json::to_writer(&mut out, r)?;
            out.write_all(b"\n")?;
        }
        Ok(())
    }

    pub fn hard_failures(&self) -> impl Iterator<Item = &SampleRecord> {
        self.records.iter().filter(|r| r.hard_failure.is_some())
    }
}

/// Decide every sample of `cfg` by every method and cross-check.
///
/// Returns an error if the structural and Sturm deciders disagree, or if
/// either says PSD where the falsifier finds a negative point. The report
/// is still available through [`fuzz_report`] in that case.
pub fn fuzz_compare(cfg: &FuzzConfig) -> Result<DiscrepancyReport> {
    let report = fuzz_report(cfg)?;
    let failures: Vec<String> = report
        .hard_failures()
        .take(5)
        .map(|r| format!("sample {} {}: {}", r.index, r.params, r.hard_failure.as_deref().unwrap_or("")))
        .collect();
    if failures.is_empty() {
        Ok(report)
    } else {
        Err(Error::Internal(format!(
            "{} hard failure(s); first: {}",
            report.summary.hard_failures,
            failures.join("; ")
        )))
    }
}

/// Like [`fuzz_compare`] but hard failures are left in the records.
pub fn fuzz_report(cfg: &FuzzConfig) -> Result<DiscrepancyReport> {
    cfg.validate()?;
    let start = Instant::now();
    let records: Vec<SampleRecord> = (0..cfg.total()).into_par_iter().map(|i| run_sample(cfg, i)).collect();
    let summary = summarize(&records);
    Ok(DiscrepancyReport {
        records,
        summary,
        elapsed_ms: start.elapsed().as_millis(),
    })
}

/// Membership in the region where the printed first disjunct is too weak.
pub fn in_erratum_region(c: &CyclicParams, p: &ClosedFormPolys) -> bool {
    let z = |v: &Rational| Scalar::is_zero(v);
    let pos = |v: &Rational| Scalar::sign(v) == Sign::Positive;
    let neg = |v: &Rational| Scalar::sign(v) == Sign::Negative;
    z(&p.g4) && z(&p.f2) && pos(&p.g1) && !neg(&p.g3) && neg(&p.g2) && neg(&(&c.k + &c.m - int(1)))
}

fn run_sample(cfg: &FuzzConfig, index: usize) -> SampleRecord {
    let (stratum, params) = cfg.sample(index);
    let mut verdicts: Vec<Verdict> = vec![decide_structural(&params), decide_oracle(&params)];
    verdicts.extend(ClosedFormVariant::ALL.map(|v| decide_closed_form(&params, v)));
    let structural = verdicts[0].is_psd;
    let oracle = verdicts[1].is_psd;
    let polys = eval_polys(&params);
    let mut failures = Vec::new();
    if structural != oracle {
        failures.push(format!("structural={structural} oracle={oracle}"));
    }

    let falsifier_point = if verdicts.iter().any(|v| v.is_psd) {
        sample_falsifier(&params, cfg.falsifier_budget)
    } else {
        None
    };
    let false_psd: Vec<Method> = match &falsifier_point {
        Some(_) => verdicts.iter().filter(|v| v.is_psd).map(|v| v.method).collect(),
        None => Vec::new(),
    };
    if let Some(p) = &falsifier_point {
        if structural || oracle {
            failures.push(format!("PSD verdict refuted at {p}"));
        }
    }

    let (witness_status, witness, witness_value) = if structural {
        (WitnessStatus::NotNeeded, None, None)
    } else {
        match find_witness(&params, cfg.witness_budget) {
            Some(w) => {
                let v = eval_form_at(&params, &w);
                if Scalar::sign(&v) != Sign::Negative {
                    failures.push(format!("witness {w} has F = {v}"));
                }
                (WitnessStatus::Found, Some(w), Some(v))
            }
            None => (WitnessStatus::WitnessBudgetExhausted, None, None),
        }
    };

    let erratum_region = in_erratum_region(&params, &polys);
    let zero_polys: Vec<String> = polys.zero_names().into_iter().map(String::from).collect();
    let closed_form = verdicts[2..]
        .iter()
        .map(|v| {
            let finding = if v.is_psd == structural {
                Finding::Agree
            } else if erratum_region {
                Finding::ErratumRegion
            } else if !zero_polys.is_empty() {
                Finding::Boundary
            } else {
                Finding::Unexplained
            };
            (v.method, finding)
        })
        .collect();
    let g = reduce_to_g(&params);
    let g_discriminants = g.special_quartic().discriminants().ok();

    SampleRecord {
        index,
        stratum,
        verdicts: verdicts.iter().map(|v| (v.method, v.is_psd)).collect(),
        fired_clauses: verdicts.iter().map(|v| (v.method, v.fired_clause.clone())).collect(),
        params,
        witness_status,
        witness,
        witness_value,
        falsifier_point,
        false_psd,
        closed_form,
        erratum_region,
        zero_polys,
        polys,
        g_discriminants,
        hard_failure: (!failures.is_empty()).then(|| failures.join("; ")),
    }
}

fn summarize(records: &[SampleRecord]) -> Summary {
    let mut s = Summary {
        samples: records.len(),
        ..Summary::default()
    };
    for key in ["f5~D4", "f6~D2", "f7~D3"] {
        s.sign_relations.insert(key.to_string(), SignTally::default());
    }
    for r in records {
        *s.per_stratum.entry(r.stratum.clone()).or_default() += 1;
        let structural = r.verdicts[&Method::Structural];
        if structural {
            s.structural_psd += 1;
            s.psd_verdicts_attacked += 1;
        }
        for (m, psd) in &r.verdicts {
            if *m != Method::Structural {
                s.agreement_with_structural.entry(*m).or_default().add(*psd == structural);
            }
        }
        for (m, f) in &r.closed_form {
            let t = s.closed_form_disagreements.entry(*m).or_default();
            match f {
                Finding::Agree => {}
                Finding::ErratumRegion => t.erratum_region += 1,
                Finding::Boundary => t.boundary += 1,
                Finding::Unexplained => t.unexplained += 1,
            }
        }
        for m in &r.false_psd {
            *s.false_psd.entry(*m).or_default() += 1;
        }
        s.erratum_region_hits += usize::from(r.erratum_region);
        match r.witness_status {
            WitnessStatus::Found => s.witnesses_found += 1,
            WitnessStatus::WitnessBudgetExhausted => s.witness_budget_exhausted += 1,
            WitnessStatus::NotNeeded => {}
        }
        s.hard_failures += usize::from(r.hard_failure.is_some());

        let p = &r.polys;
        let theorem = r.verdicts[&Method::ClosedFormTheorem];
        let proof = r.verdicts[&Method::ClosedFormProof];
        if p.all_nonzero() && !r.erratum_region {
            s.generic_theorem_agreement.add(theorem == structural);
        }
        if Scalar::is_zero(&radicand(&r.params)) {
            s.corrected_on_r_zero.add(r.verdicts[&Method::ClosedFormCorrected] == structural);
        }

        let sg = |v: &Rational| Scalar::sign(v);
        let third_disjunct = !(Scalar::is_zero(&p.g4) && Scalar::is_zero(&p.f2))
            && sg(&p.f1) == Sign::Positive
            && sg(&p.f3) == Sign::Positive;
        if third_disjunct && sg(&p.f5) == Sign::Positive {
            for (tally, v) in [(&mut s.f6_boundary, &p.f6), (&mut s.f7_boundary, &p.f7)] {
                if Scalar::is_zero(v) {
                    tally.samples += 1;
                    tally.structural_psd += usize::from(structural);
                    tally.theorem_agrees += usize::from(theorem == structural);
                    tally.proof_agrees += usize::from(proof == structural);
                }
            }
        }
        if third_disjunct {
            if let Some(d) = &r.g_discriminants {
                let rel = &mut s.sign_relations;
                rel.get_mut("f5~D4").expect("key").add(sg(&p.f5), sg(&d.d4));
                rel.get_mut("f6~D2").expect("key").add(sg(&p.f6), sg(&d.d2));
                rel.get_mut("f7~D3").expect("key").add(sg(&p.f7), sg(&d.d3));
            }
        }
        if sg(&p.f5) != sg(&p.f5_as_printed) {
            s.f5_printed_sign_mismatches += 1;
        }
    }
    s
}
