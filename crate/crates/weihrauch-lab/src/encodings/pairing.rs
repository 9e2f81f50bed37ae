//! Bijective pairings.
//!
//! `pair_encode`/`pair_decode` enumerate the strictly increasing pairs
//! `{(a,b) | a < b}`: code(a,b) = b(b-1)/2 + a, ordered by b then a.
//! `diag_pair`/`diag_unpair` are the Cantor diagonal pairing on all of ℕ²,
//! used where a total pairing is required (hat rows, flattening, vertex
//! layouts of disjoint unions).

use crate::error::{Error, Result};

/// Code of the increasing pair `(a, b)`. Requires `a < b`.
pub fn pair_encode(a: u64, b: u64) -> Result<u64> {
    if a >= b {
        return Err(Error::Precondition(format!(
            "pair_encode requires a < b, got ({a}, {b})"
        )));
    }
    let code = b as u128 * (b as u128 - 1) / 2 + a as u128;
    u64::try_from(code)
        .map_err(|_| Error::Precondition(format!("pair code of ({a}, {b}) exceeds u64")))
}

/// Inverse of [`pair_encode`]; always returns `(a, b)` with `a < b`.
pub fn pair_decode(n: u64) -> (u64, u64) {
    // Largest b with b(b-1)/2 <= n; intermediate products in u128 so codes
    // near u64::MAX decode without overflow.
    let tri = |b: u64| b as u128 * (b as u128 - 1) / 2;
    let mut b = (((8.0 * n as f64 + 1.0).sqrt() + 1.0) / 2.0) as u64;
    b = b.max(1);
    while b > 1 && tri(b) > n as u128 {
        b -= 1;
    }
    while tri(b + 1) <= n as u128 {
        b += 1;
    }
    (n - tri(b) as u64, b)
}

/// Code of the unordered pair `{a, b}` with `a != b`.
pub fn unordered_pair_encode(a: u64, b: u64) -> Result<u64> {
    if a == b {
        return Err(Error::Precondition(format!(
            "unordered pair requires distinct endpoints, got ({a}, {b})"
        )));
    }
    pair_encode(a.min(b), a.max(b))
}

/// Cantor diagonal pairing, a bijection ℕ² → ℕ.
pub fn diag_pair(i: u64, j: u64) -> u64 {
    (i + j) * (i + j + 1) / 2 + j
}

/// Inverse of [`diag_pair`].
pub fn diag_unpair(n: u64) -> (u64, u64) {
    let tri = |d: u64| d as u128 * (d as u128 + 1) / 2;
    let mut d = (((8.0 * n as f64 + 1.0).sqrt() - 1.0) / 2.0) as u64;
    while d > 0 && tri(d) > n as u128 {
        d -= 1;
    }
    while tri(d + 1) <= n as u128 {
        d += 1;
    }
    let j = n - tri(d) as u64;
    (d - j, j)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn first_pairs() {
        // Enumeration order: (0,1),(0,2),(1,2),(0,3),(1,3),(2,3)
        assert_eq!(pair_encode(0, 1).unwrap(), 0);
        assert_eq!(pair_encode(0, 3).unwrap(), 3);
        assert_eq!(pair_encode(2, 3).unwrap(), 5);
        assert_eq!(pair_decode(0), (0, 1));
        assert_eq!(pair_decode(4), (1, 3));
        assert_eq!(pair_decode(5), (2, 3));
    }

    #[test]
    fn rejects_non_increasing() {
        assert!(pair_encode(3, 3).is_err());
        assert!(pair_encode(4, 1).is_err());
        assert!(unordered_pair_encode(2, 2).is_err());
    }

    #[test]
    fn unordered_symmetrizes() {
        assert_eq!(
            unordered_pair_encode(3, 2).unwrap(),
            unordered_pair_encode(2, 3).unwrap()
        );
    }

    #[test]
    fn round_trip_dense() {
        for n in 0..100_000u64 {
            let (a, b) = pair_decode(n);
            assert!(a < b);
            assert_eq!(pair_encode(a, b).unwrap(), n);
        }
    }

    #[test]
    fn diag_round_trip() {
        for n in 0..10_000u64 {
            let (i, j) = diag_unpair(n);
            assert_eq!(diag_pair(i, j), n);
        }
        assert_eq!(diag_pair(0, 0), 0);
    }

    proptest! {
        #[test]
        fn prop_pair_round_trip(n in 0u64..1_000_000_000) {
            let (a, b) = pair_decode(n);
            prop_assert!(a < b);
            prop_assert_eq!(pair_encode(a, b).unwrap(), n);
        }

        #[test]
        fn prop_diag_round_trip(i in 0u64..1_000_000, j in 0u64..1_000_000) {
            prop_assert_eq!(diag_unpair(diag_pair(i, j)), (i, j));
        }
    }
}
