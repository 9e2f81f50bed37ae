//! One reduction end to end: LPO into the localized-graph problem LG_2 and
//! back, on a hand-built instance.

use weihrauch_lab::oracle::OracleFn;
use weihrauch_lab::problems::{
    check_solution, solve_certified, Budget, Certificate, Instance, Payload, ProblemId,
};
use weihrauch_lab::reductions::red_lpo_to_lgk;

fn main() -> weihrauch_lab::Result<()> {
    let budget = Budget::default();
    let r = red_lpo_to_lgk(2);
    println!(
        "{}: {} ≤ {}, strong = {}",
        r.name, r.source, r.target, r.strong
    );

    // f is 1 everywhere except f(3) = 0, so the LPO answer is 4.
    let u = Instance::certified(
        ProblemId::Lpo,
        Payload::Oracle(OracleFn::finite_support(vec![(3, 0)], 1)),
        Certificate::FirstZero(3),
    );

    // Forward: a graph whose initial subgraphs stay 2-colorable exactly as
    // long as f stays positive. The certificate travels along, so the
    // target side remains solvable.
    let x = r.forward(&u)?;
    let y = solve_certified(&x, &budget)?;
    println!("target {} answer = {}", x.problem, y.digest());
    println!("target check: {:?}", check_solution(&x, &y, &budget)?);

    // Back: recover the LPO answer from the target answer alone.
    let v = r.back(&u, &y)?;
    println!("back-mapped answer = {}", v.digest());
    println!("source check: {:?}", check_solution(&u, &v, &budget)?);

    // The no-zero case comes back as 0 on both sides.
    let u = Instance::certified(
        ProblemId::Lpo,
        Payload::Oracle(OracleFn::constant(1)),
        Certificate::NoZero,
    );
    let x = r.forward(&u)?;
    let y = solve_certified(&x, &budget)?;
    let v = r.back(&u, &y)?;
    println!(
        "all-positive input: target {} back {}",
        y.digest(),
        v.digest()
    );
    println!("source check: {:?}", check_solution(&u, &v, &budget)?);
    Ok(())
}
