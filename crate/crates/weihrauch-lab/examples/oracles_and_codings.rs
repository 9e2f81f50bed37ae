//! Oracles with fuel budgets, and the pair/sequence codings everything
//! else is built on.

use weihrauch_lab::encodings::{
    diag_pair, diag_unpair, pair_decode, pair_encode, seq_decode, seq_encode, Branching,
};
use weihrauch_lab::error::Error;
use weihrauch_lab::oracle::OracleFn;

fn main() -> weihrauch_lab::Result<()> {
    // An oracle is a function ℕ → ℕ behind a fuel limit: queries at or past
    // the limit fail with FuelExhausted instead of silently answering.
    let f = OracleFn::finite_support(vec![(3, 0), (7, 2)], 1).with_fuel(16);
    println!("f = {}", f.digest(10));
    println!("f(3) = {}, f(4) = {}", f.eval(3)?, f.eval(4)?);
    match f.eval(99) {
        Err(Error::FuelExhausted { index, limit }) => {
            println!("f(99): fuel exhausted at index {index}, limit {limit}")
        }
        other => println!("f(99): {other:?}"),
    }

    // Searches use descriptor knowledge where they can: a finite-support
    // oracle with nonzero default provably has no zero past its support, so
    // the scan below terminates without visiting the whole bound.
    println!("first zero of f below 2^40: {:?}", f.first_zero(1 << 40)?);

    // The strictly increasing pairing enumerates {(a,b) | a < b}; the
    // diagonal pairing covers all of ℕ².
    for n in 0..6 {
        let (a, b) = pair_decode(n);
        assert_eq!(pair_encode(a, b)?, n);
        println!("pair {n} = ({a}, {b})");
    }
    let code = diag_pair(12, 34);
    assert_eq!(diag_unpair(code), (12, 34));

    // Sequence codes identify tree nodes. Binary and n-ary alphabets code
    // positionally; the omega alphabet nests pairs and overflows quickly,
    // which is why tree checks run at bounded depth.
    let seq = vec![2, 0, 3];
    let code = seq_encode(Branching::NAry(4), &seq)?;
    println!("⟨2,0,3⟩ over 4 symbols = {code}");
    assert_eq!(seq_decode(Branching::NAry(4), code), seq);

    let deep: Vec<u64> = vec![5; 12];
    match seq_encode(Branching::Omega, &deep) {
        Err(Error::CodeOverflow(len)) => println!("omega code overflows at length {len}"),
        Ok(c) => println!("omega code = {c}"),
        Err(e) => return Err(e),
    }
    Ok(())
}
