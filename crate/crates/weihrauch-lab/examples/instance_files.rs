//! The JSON instance format shared with the `wlab` binary: finite
//! descriptors only, self-describing, and round-trip stable.

use weihrauch_lab::cli::InstanceFile;
use weihrauch_lab::oracle::OracleFn;
use weihrauch_lab::problems::{
    check_solution, solve_certified, Budget, Certificate, Instance, Payload, ProblemId,
};

fn main() -> weihrauch_lab::Result<()> {
    let budget = Budget::default();

    // Any instance built from finite descriptors serializes; computed
    // oracles deliberately do not, so files always mean what they say.
    let inst = Instance::certified(
        ProblemId::Lpo,
        Payload::Oracle(OracleFn::finite_support(vec![(3, 0)], 1)),
        Certificate::FirstZero(3),
    );
    let file = InstanceFile::from_instance(&inst)?;
    let text = file.to_json();
    println!("{text}");

    // Parsing rejects unknown fields and re-validates problem parameters;
    // what comes back is the same instance.
    let parsed = InstanceFile::parse(&text)?.to_instance()?;
    let answer = solve_certified(&parsed, &budget)?;
    println!("answer = {}", answer.digest());
    println!("check: {:?}", check_solution(&parsed, &answer, &budget)?);

    // This is exactly what `wlab solve --instance file.json` does, and
    // `wlab run --reduction lpo_to_lg --k 2 --instance file.json` pushes the
    // same file through a reduction first.
    let computed = Instance::new(
        ProblemId::Lpo,
        Payload::Oracle(OracleFn::computed(|n| Ok(n % 7))),
    );
    println!(
        "computed oracle file: {:?}",
        InstanceFile::from_instance(&computed).err()
    );
    Ok(())
}
