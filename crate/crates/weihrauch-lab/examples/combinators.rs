//! Building new reductions out of old ones: composition, parallelization,
//! and the flattening isomorphism for nested hats.

use weihrauch_lab::encodings::diag_pair;
use weihrauch_lab::oracle::OracleFn;
use weihrauch_lab::problems::{
    check_solution, hat_pack, solve_certified, Budget, Certificate, Instance, Payload, ProblemId,
};
use weihrauch_lab::reductions::{
    compose, hat_flatten, parallelize, red_lgk_to_lpo, red_lpo_to_lgk,
};

fn lpo_inst(j: u64) -> Instance {
    Instance::certified(
        ProblemId::Lpo,
        Payload::Oracle(OracleFn::finite_support(vec![(j, 0)], 1)),
        Certificate::FirstZero(j),
    )
}

fn main() -> weihrauch_lab::Result<()> {
    let budget = Budget::default();

    // Composition chains transforms forward and back maps in reverse,
    // re-deriving the intermediate instance for the back trip.
    let round = compose(&red_lpo_to_lgk(2), &red_lgk_to_lpo(2))?;
    println!("{}: {} ≤ {}", round.name, round.source, round.target);
    let u = lpo_inst(5);
    let x = round.forward(&u)?;
    let y = solve_certified(&x, &budget)?;
    let v = round.back(&u, &y)?;
    println!("LPO answer through the round trip: {}", v.digest());
    println!("check: {:?}", check_solution(&u, &v, &budget)?);

    // Parallelization lifts a reduction row by row to the hat problems.
    let hat = parallelize(&red_lpo_to_lgk(2));
    println!("{}: {} ≤ {}", hat.name, hat.source, hat.target);
    let rows: Vec<Instance> = (0..4).map(lpo_inst).collect();
    let u = hat_pack(&rows)?;
    let x = hat.forward(&u)?;
    let y = solve_certified(&x, &budget)?;
    let v = hat.back(&u, &y)?;
    println!("row answers: {}", v.digest());
    println!("hat check: {:?}", check_solution(&u, &v, &budget)?);

    // Hat(Hat(P)) and Hat(P) are interreducible: flattening re-indexes
    // nested rows through the diagonal pairing.
    let outer: Vec<Instance> = (0..3)
        .map(|i| hat_pack(&(0..3).map(|j| lpo_inst(i + j)).collect::<Vec<_>>()).unwrap())
        .collect();
    let nested = hat_pack(&outer)?;
    let flat = hat_flatten(ProblemId::Lpo);
    let x = flat.forward(&nested)?;
    let inner_row = weihrauch_lab::problems::hat_row(&x, diag_pair(1, 2))?;
    println!(
        "flat row diag_pair(1, 2) holds inner instance (1, 2): answer {}",
        solve_certified(&inner_row, &budget)?.digest()
    );
    let y = solve_certified(&x, &budget)?;
    let v = flat.back(&nested, &y)?;
    println!("nested check: {:?}", check_solution(&nested, &v, &budget)?);
    Ok(())
}
