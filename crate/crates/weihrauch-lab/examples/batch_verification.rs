//! The verification harness: seeded certified families, batch soundness
//! reports, fault injection, and brute-force cross-checks.

use weihrauch_lab::harness::{
    catalog, family, oracle_crosscheck, value_fault, verify_reduction, CrosscheckKind,
};
use weihrauch_lab::problems::Budget;

fn main() -> weihrauch_lab::Result<()> {
    let budget = Budget::default();

    // Every catalog entry knows its parameter slot and a matching family of
    // certified source instances.
    let entry = catalog::find("lpo_to_lg").unwrap();
    let k = entry.param_value(Some(3), None)?;
    let r = entry.build(k);
    let fam = family(&entry.default_family(k)).unwrap();

    // A verification run checks, per case: the generated certificate, the
    // forwarded certificate, the certified target solution, and finally the
    // pulled-back source solution. Equal seeds give byte-identical reports.
    let report = verify_reduction(&r, &fam, 42, 200, &budget)?;
    println!(
        "{} on {}: {}/{} valid, {} invalid, {} unknown",
        report.reduction, report.family, report.valid, report.cases, report.invalid, report.unknown
    );
    let again = verify_reduction(&r, &fam, 42, 200, &budget)?;
    println!("deterministic: {}", report.to_json() == again.to_json());

    // Fault injection: perturbing the back map by one must be noticed.
    let broken = value_fault(&r);
    let report = verify_reduction(&broken, &fam, 42, 200, &budget)?;
    println!(
        "{}: {} invalid out of {}",
        report.reduction, report.invalid, report.cases
    );
    if let Some(f) = report.failures.first() {
        println!("first failure at case {} in stage {}", f.index, f.stage);
    }

    // The finite combinatorics the checkers lean on are themselves checked
    // against naive exhaustive implementations over all small graphs.
    for kind in [CrosscheckKind::Colorability, CrosscheckKind::Embedding] {
        let report = oracle_crosscheck(kind, 4);
        println!(
            "{} on {}: {} cases, {} disagreements",
            report.reduction, report.family, report.cases, report.invalid
        );
    }
    Ok(())
}
