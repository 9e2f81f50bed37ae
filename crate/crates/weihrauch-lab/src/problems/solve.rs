//! Certificate-guided exact solving.
//!
//! The certificate carries the undecidable part of the answer; everything
//! else is recomputed here so the output is canonical and deterministic
//! (leftmost path, lexicographically-least coloring).

use crate::encodings::finite_subgraph;
use crate::error::{Error, Result};
use crate::oracle::OracleFn;
use crate::problems::{hat_row, Budget, Certificate, HatSolution, Instance, ProblemId, Solution};

/// Computes a solution from the instance's certificate.
///
/// The result always satisfies `check_solution(inst, result, budget) =
/// Valid` for instances whose certificates verify.
pub fn solve_certified(inst: &Instance, budget: &Budget) -> Result<Solution> {
    inst.problem.validate()?;
    let cert = inst.require_certificate()?;
    match (&inst.problem, cert) {
        (ProblemId::Lpo, Certificate::NoZero) => Ok(Solution::Value(0)),
        (ProblemId::Lpo, Certificate::FirstZero(j)) => Ok(Solution::Value(j + 1)),
        (ProblemId::Lpo, Certificate::KnownAnswer(v)) => Ok(Solution::Value(*v)),

        // Output 0 is the valid answer when the pivot is odd; on all-zero
        // input both answers are valid, 0 is the canonical pick.
        (ProblemId::Llpo, Certificate::NoZero) => Ok(Solution::Value(0)),
        (ProblemId::Llpo, Certificate::FirstZero(j)) => {
            Ok(Solution::Value(if j % 2 == 1 { 0 } else { 1 }))
        }

        (ProblemId::Lg(_), Certificate::KnownAnswer(m)) => Ok(Solution::Value(*m)),

        (ProblemId::Gc(_), Certificate::KnownColoring(c))
        | (ProblemId::Gc(_), Certificate::PathGen(c)) => Ok(Solution::Fn(c.clone())),

        (ProblemId::Tc(_), Certificate::KnownAnswer(m)) if *m > 0 => {
            Ok(Solution::Fn(OracleFn::tabled(vec![*m], 0)))
        }
        (ProblemId::Tc(_), Certificate::KnownColoring(c)) => {
            if c.eval(0)? != 0 {
                return Err(Error::CertificateMismatch(
                    "TC coloring certificate must have c(0) = 0".into(),
                ));
            }
            Ok(Solution::Fn(c.clone()))
        }

        (ProblemId::Wkl, Certificate::PathGen(g))
        | (ProblemId::Wkln(_), Certificate::PathGen(g)) => Ok(Solution::Fn(g.clone())),
        (ProblemId::Wkl, Certificate::Finite(d)) | (ProblemId::Wkln(_), Certificate::Finite(d)) => {
            Err(Error::Precondition(format!(
                "tree dies before level {d}: no infinite path exists"
            )))
        }

        (ProblemId::Wf, Certificate::PathGen(_)) => Ok(Solution::Value(0)),
        (ProblemId::Wf, Certificate::Finite(_)) => Ok(Solution::Value(1)),
        (ProblemId::Wf, Certificate::KnownAnswer(v)) => Ok(Solution::Value(*v)),

        (ProblemId::S, cert)
        | (ProblemId::SL, cert)
        | (ProblemId::Rc, cert)
        | (ProblemId::D, cert)
            if decision_answer(cert).is_some() =>
        {
            Ok(Solution::Value(decision_answer(cert).unwrap()))
        }

        (ProblemId::Sf(f), cert) => match cert {
            Certificate::KnownAnswer(v) => Ok(Solution::Value(*v)),
            Certificate::EmbedsAt(_) => Ok(Solution::Value(1)),
            Certificate::NoEmbedding(_) => Ok(Solution::Value(0)),
            // Bounded search justified by the certificate's presence.
            Certificate::FirstZero(_) => {
                let g = inst.payload.as_graph()?;
                let trunc = finite_subgraph(g, budget.scan_bound)?;
                Ok(Solution::Value(
                    crate::encodings::pattern_embeds(f, &trunc) as u64
                ))
            }
            other => Err(Error::CertificateMismatch(format!(
                "{other:?} does not solve S_F"
            ))),
        },

        (ProblemId::SVecL, cert @ (Certificate::HatOf { .. } | Certificate::HatGen(_))) => {
            let cert = cert.clone();
            Ok(Solution::Fn(
                OracleFn::computed(move |n| {
                    let row = cert.hat_row(n)?;
                    decision_answer(&row).ok_or_else(|| {
                        Error::CertificateMismatch(format!("S_vecL row {n} pins no answer"))
                    })
                })
                .with_fuel(u64::MAX),
            ))
        }

        (ProblemId::Hat(_), Certificate::HatOf { .. })
        | (ProblemId::Hat(_), Certificate::HatGen(_)) => {
            let inst = inst.clone();
            let budget = *budget;
            Ok(Solution::Hat(HatSolution::computed(move |i| {
                let row = hat_row(&inst, i)?;
                solve_certified(&row, &budget)
            })))
        }

        (problem, cert) => Err(Error::CertificateMismatch(format!(
            "{cert:?} cannot drive solving for {problem}"
        ))),
    }
}

fn decision_answer(cert: &Certificate) -> Option<u64> {
    match cert {
        Certificate::KnownAnswer(v) => Some(*v),
        Certificate::PathGen(_) | Certificate::EmbedsAt(_) => Some(1),
        Certificate::NoEmbedding(_) | Certificate::Finite(_) => Some(0),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::encodings::{Branching, GraphCode, TreeCode};
    use crate::problems::{check_solution, Payload};

    #[test]
    fn wf_on_a_finite_tree() {
        let t = TreeCode::from_members(Branching::Omega, &[vec![0, 1], vec![2]]).unwrap();
        let inst = Instance::certified(ProblemId::Wf, Payload::Tree(t), Certificate::Finite(3));
        let sol = solve_certified(&inst, &Budget::default()).unwrap();
        assert_eq!(sol.as_value().unwrap(), 1);
        assert!(check_solution(&inst, &sol, &Budget::default())
            .unwrap()
            .is_valid());
    }

    #[test]
    fn wkl_follows_the_path_generator() {
        let inst = Instance::certified(
            ProblemId::Wkl,
            Payload::Tree(TreeCode::full(Branching::Binary)),
            Certificate::PathGen(OracleFn::constant(0)),
        );
        let sol = solve_certified(&inst, &Budget::default()).unwrap();
        assert_eq!(sol.as_fn().unwrap().eval(5).unwrap(), 0);
        assert!(check_solution(&inst, &sol, &Budget::default())
            .unwrap()
            .is_valid());
    }

    #[test]
    fn lg_reads_known_answer() {
        // Triangle on {0,1,2}: G_1 is 2-colorable, G_2 is not.
        let tri = GraphCode::from_edges(&[(0, 1), (0, 2), (1, 2)]).unwrap();
        let inst = Instance::certified(
            ProblemId::Lg(2),
            Payload::Graph(tri),
            Certificate::KnownAnswer(2),
        );
        let sol = solve_certified(&inst, &Budget::default()).unwrap();
        assert_eq!(sol.as_value().unwrap(), 2);
        assert!(check_solution(&inst, &sol, &Budget::default())
            .unwrap()
            .is_valid());
    }

    #[test]
    fn missing_certificate_is_an_error() {
        let inst = Instance::new(ProblemId::Lpo, Payload::Oracle(OracleFn::constant(1)));
        assert!(matches!(
            solve_certified(&inst, &Budget::default()),
            Err(Error::MissingCertificate(_))
        ));
    }
}
