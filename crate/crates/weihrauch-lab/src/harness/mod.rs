//! The verification engine: seeded certified families, batch soundness runs
//! producing deterministic reports, fault-injected mutants, and brute-force
//! cross-checks of the combinatorial oracles.

mod crosscheck;
mod families;

pub mod catalog;

pub use crosscheck::{oracle_crosscheck, CrosscheckKind};
pub use families::{family, family_names};

use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::oracle::OracleFn;
use crate::problems::{
    check_solution, solve_certified, verify_certificate, Budget, HatSolution, Instance, Payload,
    ProblemId, Solution,
};
use crate::reductions::Reduction;
use crate::verdict::Verdict;

type GenFn = Arc<dyn Fn(u64, u64) -> Result<Instance> + Send + Sync>;

/// A named source of certified instances, deterministic in (seed, index).
#[derive(Clone)]
pub struct CertifiedFamily {
    pub name: String,
    pub problem: ProblemId,
    gen: GenFn,
}

impl CertifiedFamily {
    pub fn new<F>(name: impl Into<String>, problem: ProblemId, gen: F) -> Self
    where
        F: Fn(u64, u64) -> Result<Instance> + Send + Sync + 'static,
    {
        CertifiedFamily {
            name: name.into(),
            problem,
            gen: Arc::new(gen),
        }
    }

    pub fn instance(&self, seed: u64, index: u64) -> Result<Instance> {
        (self.gen)(seed, index)
    }
}

/// Generates `count` instances of the family.
pub fn generate(family: &CertifiedFamily, seed: u64, count: u64) -> Result<Vec<Instance>> {
    (0..count).map(|i| family.instance(seed, i)).collect()
}

/// One non-Valid case, with enough digests to reproduce and diagnose it.
#[derive(Debug, Clone, Serialize)]
pub struct CaseReport {
    pub index: u64,
    pub seed: u64,
    /// Which check failed: `source_certificate`, `forward_certificate`,
    /// `target_solution`, or `back_solution`.
    pub stage: String,
    #[serde(flatten)]
    pub verdict: Verdict,
    pub instance: String,
    pub forward: String,
    pub solution: String,
    pub back: String,
}

/// Aggregated outcome of a verification batch. Counts always sum to `cases`;
/// failures are listed in case order, so equal inputs give equal reports.
#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub reduction: String,
    pub family: String,
    pub seed: u64,
    pub cases: u64,
    pub valid: u64,
    pub invalid: u64,
    pub unknown: u64,
    pub failures: Vec<CaseReport>,
}

impl Report {
    pub fn all_valid(&self) -> bool {
        self.invalid == 0 && self.unknown == 0 && self.valid == self.cases
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }
}

/// One-line reproducible description of a payload.
pub fn payload_digest(p: &Payload) -> String {
    match p {
        Payload::Oracle(f) => f.digest(8),
        Payload::Graph(g) => format!("graph({})", g.edge_fn.digest(8)),
        Payload::Tree(t) => format!("tree[{:?}]({})", t.branching, t.node_fn.digest(8)),
        Payload::GraphPair(g, h) => format!(
            "pair(graph({}), graph({}))",
            g.edge_fn.digest(8),
            h.edge_fn.digest(8)
        ),
        Payload::Hat(h) => match h.row(0) {
            Ok(row) => format!("hat[row0 = {}]", payload_digest(&row)),
            Err(e) => format!("hat[row0: {e}]"),
        },
    }
}

/// Runs the soundness contract of `r` over a batch of certified instances:
/// the source certificate must verify, the forward instance's certificate
/// must verify, the certificate-driven target solution must check, and the
/// pulled-back solution is tallied against the source instance.
///
/// A refuted *source* certificate is a generator bug and aborts the run with
/// an error; everything downstream is recorded in the report.
pub fn verify_reduction(
    r: &Reduction,
    family: &CertifiedFamily,
    seed: u64,
    count: u64,
    budget: &Budget,
) -> Result<Report> {
    if family.problem != r.source {
        return Err(Error::ReductionMismatch(format!(
            "family {} generates {}, reduction {} expects {}",
            family.name, family.problem, r.name, r.source
        )));
    }
    let mut report = Report {
        reduction: r.name.clone(),
        family: family.name.clone(),
        seed,
        cases: count,
        valid: 0,
        invalid: 0,
        unknown: 0,
        failures: Vec::new(),
    };
    for index in 0..count {
        let u = family.instance(seed, index)?;
        match verify_certificate(&u, budget)? {
            Verdict::Valid => {}
            Verdict::Invalid { witness } => {
                return Err(Error::CertificateMismatch(format!(
                    "family {} case {index}: generator certificate refuted: {witness}",
                    family.name
                )))
            }
            v @ Verdict::Unknown { .. } => {
                record(
                    &mut report,
                    index,
                    seed,
                    "source_certificate",
                    v,
                    &u,
                    None,
                    None,
                    None,
                );
                continue;
            }
        }
        let x = r.forward(&u)?;
        if x.certificate.is_some() {
            match verify_certificate(&x, budget)? {
                Verdict::Valid => {}
                v => {
                    record(
                        &mut report,
                        index,
                        seed,
                        "forward_certificate",
                        v,
                        &u,
                        Some(&x),
                        None,
                        None,
                    );
                    continue;
                }
            }
        }
        let y = solve_certified(&x, budget)?;
        match check_solution(&x, &y, budget)? {
            Verdict::Valid => {}
            v => {
                record(
                    &mut report,
                    index,
                    seed,
                    "target_solution",
                    v,
                    &u,
                    Some(&x),
                    Some(&y),
                    None,
                );
                continue;
            }
        }
        let v = r.back(&u, &y)?;
        match check_solution(&u, &v, budget)? {
            Verdict::Valid => report.valid += 1,
            verdict => {
                record(
                    &mut report,
                    index,
                    seed,
                    "back_solution",
                    verdict,
                    &u,
                    Some(&x),
                    Some(&y),
                    Some(&v),
                );
            }
        }
    }
    Ok(report)
}

#[allow(clippy::too_many_arguments)]
fn record(
    report: &mut Report,
    index: u64,
    seed: u64,
    stage: &str,
    verdict: Verdict,
    u: &Instance,
    x: Option<&Instance>,
    y: Option<&Solution>,
    v: Option<&Solution>,
) {
    match verdict {
        Verdict::Invalid { .. } => report.invalid += 1,
        _ => report.unknown += 1,
    }
    report.failures.push(CaseReport {
        index,
        seed,
        stage: stage.into(),
        verdict,
        instance: payload_digest(&u.payload),
        forward: x.map(|x| payload_digest(&x.payload)).unwrap_or_default(),
        solution: y.map(Solution::digest).unwrap_or_default(),
        back: v.map(Solution::digest).unwrap_or_default(),
    });
}

/// Off-by-one fault injection: same forward map, back map perturbed by one
/// everywhere. A sound checker must flag the result on certified families.
pub fn value_fault(r: &Reduction) -> Reduction {
    let orig = r.clone();
    r.with_back(format!("{}!fault", r.name), move |u, y| {
        Ok(perturb(&orig.back(u, y)?))
    })
}

fn perturb(s: &Solution) -> Solution {
    match s {
        Solution::Value(v) => Solution::Value(v + 1),
        Solution::Fn(f) => {
            let f = f.clone();
            let fuel = f.fuel_limit;
            Solution::Fn(OracleFn::computed(move |n| Ok(f.eval(n)? + 1)).with_fuel(fuel))
        }
        Solution::Hat(h) => {
            let h = h.clone();
            Solution::Hat(HatSolution::computed(move |i| Ok(perturb(&h.row(i)?))))
        }
    }
}

/// For a reduction marked strong, the back map may not consult the source
/// instance: pulling one target solution back through two different source
/// instances must give identical solutions (compared by digest).
pub fn strong_flag_honest(
    r: &Reduction,
    family: &CertifiedFamily,
    seed: u64,
    pairs: u64,
    budget: &Budget,
) -> Result<bool> {
    if !r.strong {
        return Ok(true);
    }
    for i in 0..pairs {
        let u1 = family.instance(seed, 2 * i)?;
        let u2 = family.instance(seed, 2 * i + 1)?;
        let y = solve_certified(&r.forward(&u1)?, budget)?;
        let v1 = r.back(&u1, &y)?;
        let v2 = r.back(&u2, &y)?;
        if v1.digest() != v2.digest() {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::reductions::{compose, red_lgk_to_lpo, red_lpo_to_lgk};

    #[test]
    fn lpo_family_instances_verify() {
        let fam = family("lpo").unwrap();
        let batch = generate(&fam, 7, 3).unwrap();
        assert_eq!(batch.len(), 3);
        for inst in &batch {
            assert!(verify_certificate(inst, &Budget::default())
                .unwrap()
                .is_valid());
        }
        // Determinism: the same (seed, index) reproduces the instance.
        let again = generate(&fam, 7, 3).unwrap();
        for (a, b) in batch.iter().zip(&again) {
            for n in 0..16 {
                assert_eq!(
                    a.payload.as_oracle().unwrap().eval(n).unwrap(),
                    b.payload.as_oracle().unwrap().eval(n).unwrap()
                );
            }
        }
    }

    #[test]
    fn lgl_round_trip_all_valid() {
        let fam = family("lpo").unwrap();
        let r = red_lpo_to_lgk(2);
        let report = verify_reduction(&r, &fam, 1, 100, &Budget::default()).unwrap();
        assert!(report.all_valid(), "{}", report.to_json());
        let round = compose(&r, &red_lgk_to_lpo(2)).unwrap();
        let report = verify_reduction(&round, &fam, 1, 50, &Budget::default()).unwrap();
        assert!(report.all_valid(), "{}", report.to_json());
    }

    #[test]
    fn fault_injection_is_detected() {
        let fam = family("lpo").unwrap();
        let broken = value_fault(&red_lpo_to_lgk(2));
        let report = verify_reduction(&broken, &fam, 3, 40, &Budget::default()).unwrap();
        assert!(report.invalid > 0);
        assert!(!report.failures.is_empty());
        assert_eq!(report.failures[0].stage, "back_solution");
    }

    #[test]
    fn reports_are_byte_identical_for_equal_seeds() {
        let fam = family("lpo").unwrap();
        let r = red_lpo_to_lgk(3);
        let a = verify_reduction(&r, &fam, 11, 30, &Budget::default()).unwrap();
        let b = verify_reduction(&r, &fam, 11, 30, &Budget::default()).unwrap();
        assert_eq!(a.to_json(), b.to_json());
    }

    #[test]
    fn every_family_name_resolves_and_verifies() {
        for name in family_names() {
            let fam = family(name).unwrap_or_else(|| panic!("family {name}"));
            for index in 0..4 {
                let inst = fam.instance(5, index).unwrap();
                assert_eq!(inst.problem, fam.problem, "family {name}");
                let verdict = verify_certificate(&inst, &Budget::default()).unwrap();
                assert!(verdict.is_valid(), "family {name} case {index}: {verdict}");
            }
        }
    }

    #[test]
    fn mismatched_family_rejected() {
        let fam = family("wkl").unwrap();
        let err = verify_reduction(&red_lpo_to_lgk(2), &fam, 0, 1, &Budget::default());
        assert!(matches!(err, Err(Error::ReductionMismatch(_))));
    }
}
