//! Certified instances: build them, solve them from their certificates, and
//! check candidate solutions at a finite budget.

use weihrauch_lab::encodings::{seq_decode, Branching, TreeCode};
use weihrauch_lab::oracle::OracleFn;
use weihrauch_lab::problems::{
    check_solution, solve_certified, verify_certificate, Budget, Certificate, Instance, Payload,
    ProblemId, Solution,
};

fn main() -> weihrauch_lab::Result<()> {
    let budget = Budget::default();

    // LPO: locate the first zero of a positive-by-default function. The
    // certificate pins the answer so solving is a lookup, not a search.
    let lpo = Instance::certified(
        ProblemId::Lpo,
        Payload::Oracle(OracleFn::finite_support(vec![(3, 0)], 1)),
        Certificate::FirstZero(3),
    );
    println!("certificate: {:?}", verify_certificate(&lpo, &budget)?);
    let answer = solve_certified(&lpo, &budget)?;
    println!("LPO answer = {} (index+1 convention)", answer.digest());
    println!("check: {:?}", check_solution(&lpo, &answer, &budget)?);

    // A wrong answer is refuted by direct inspection of the oracle.
    let wrong = Solution::Value(2);
    println!("check of 2: {:?}", check_solution(&lpo, &wrong, &budget)?);

    // WF over ℕ-branching trees is where budgets bite. This tree consists
    // of one infinite path, so it is not well-founded — but that is not
    // observable at finite depth, and an uncertified claim stays Unknown
    // instead of flipping to a boolean.
    let path = OracleFn::tabled(vec![1, 2, 0, 1], 0);
    let tree = {
        let p = path.clone();
        OracleFn::computed(move |code| {
            let seq = seq_decode(Branching::Omega, code);
            for (i, &s) in seq.iter().enumerate() {
                if p.eval(i as u64)? != s {
                    return Ok(0);
                }
            }
            Ok(1)
        })
        .with_fuel(u64::MAX)
    };
    let wf = Instance::new(
        ProblemId::Wf,
        Payload::Tree(TreeCode::new(Branching::Omega, tree)),
    );
    println!(
        "uncertified WF claim of 1: {:?}",
        check_solution(&wf, &Solution::Value(1), &budget)?
    );

    // A path-generator certificate makes the answer canonical: solving
    // yields 0, and the wrong claim becomes refutable.
    let wf = Instance {
        certificate: Some(Certificate::PathGen(path)),
        ..wf
    };
    println!(
        "certified WF: solve = {}, claim of 1 now {:?}",
        solve_certified(&wf, &budget)?.digest(),
        check_solution(&wf, &Solution::Value(1), &budget)?
    );

    // Budgets derive from one fuel figure; the CLI reads the same number
    // from --budget or WEIHRAUCH_LAB_BUDGET.
    let tight = Budget::from_fuel(64);
    println!(
        "fuel 64 scales to depth {}, coloring bound {}, scan bound {}",
        tight.depth, tight.coloring_bound, tight.scan_bound
    );
    Ok(())
}
