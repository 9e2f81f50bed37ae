//! Bijective codes for finite sequences.
//!
//! Finite alphabets use length-lexicographic enumeration: the empty sequence
//! is 0, then all length-1 sequences in order, and so on. Sequences over the
//! full alphabet ℕ (omega branching) use a cons-cell encoding through the
//! diagonal pairing, since no length-lexicographic order exists there; the
//! empty sequence is still 0.

use serde::{Deserialize, Serialize};

use crate::encodings::pairing::diag_unpair;
use crate::error::{Error, Result};

/// Branching discipline of a tree, which is also the sequence alphabet.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Branching {
    Binary,
    NAry(u64),
    Omega,
}

impl Branching {
    /// Alphabet size, `None` for omega.
    pub fn width(self) -> Option<u64> {
        match self {
            Branching::Binary => Some(2),
            Branching::NAry(n) => Some(n),
            Branching::Omega => None,
        }
    }

    pub fn admits(self, symbol: u64) -> bool {
        match self.width() {
            Some(n) => symbol < n,
            None => true,
        }
    }
}

/// Code of `seq` under the given branching. Empty sequence codes to 0.
pub fn seq_encode(branching: Branching, seq: &[u64]) -> Result<u64> {
    if let Some(bad) = seq.iter().find(|&&s| !branching.admits(s)) {
        return Err(Error::Precondition(format!(
            "symbol {bad} outside alphabet {branching:?}"
        )));
    }
    match branching.width() {
        Some(n) => {
            // Sequences shorter than |seq| come first: (n^L - 1)/(n - 1)
            // of them, accumulated iteratively to stay in checked u64.
            let mut base: u64 = 0;
            let mut level: u64 = 1;
            for _ in 0..seq.len() {
                base = base
                    .checked_add(level)
                    .ok_or(Error::CodeOverflow(seq.len() as u64))?;
                level = level
                    .checked_mul(n)
                    .ok_or(Error::CodeOverflow(seq.len() as u64))?;
            }
            let mut offset: u64 = 0;
            for &s in seq {
                offset = offset
                    .checked_mul(n)
                    .and_then(|o| o.checked_add(s))
                    .ok_or(Error::CodeOverflow(seq.len() as u64))?;
            }
            base.checked_add(offset)
                .ok_or(Error::CodeOverflow(seq.len() as u64))
        }
        None => {
            let mut code: u64 = 0;
            for &s in seq {
                // diag_pair(code, s) + 1 in u128 to catch overflow cleanly.
                let sum = code as u128 + s as u128;
                let next = sum * (sum + 1) / 2 + s as u128 + 1;
                if next > u64::MAX as u128 {
                    return Err(Error::CodeOverflow(seq.len() as u64));
                }
                code = next as u64;
            }
            Ok(code)
        }
    }
}

/// Inverse of [`seq_encode`].
pub fn seq_decode(branching: Branching, code: u64) -> Vec<u64> {
    match branching.width() {
        Some(n) => {
            let mut base: u64 = 0;
            let mut level: u64 = 1;
            let mut len: usize = 0;
            while base + level <= code {
                base += level;
                level = level.saturating_mul(n);
                len += 1;
            }
            let mut offset = code - base;
            let mut seq = vec![0u64; len];
            for slot in seq.iter_mut().rev() {
                *slot = offset % n;
                offset /= n;
            }
            seq
        }
        None => {
            let mut seq = Vec::new();
            let mut code = code;
            while code > 0 {
                let (rest, s) = diag_unpair(code - 1);
                seq.push(s);
                code = rest;
            }
            seq.reverse();
            seq
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn empty_sequence_is_zero() {
        for b in [Branching::Binary, Branching::NAry(5), Branching::Omega] {
            assert_eq!(seq_encode(b, &[]).unwrap(), 0);
            assert!(seq_decode(b, 0).is_empty());
        }
    }

    #[test]
    fn binary_length_lex_order() {
        // 0:⟨⟩ 1:⟨0⟩ 2:⟨1⟩ 3:⟨0,0⟩ 4:⟨0,1⟩ 5:⟨1,0⟩ 6:⟨1,1⟩ 7:⟨0,0,0⟩
        assert_eq!(seq_decode(Branching::Binary, 1), vec![0]);
        assert_eq!(seq_decode(Branching::Binary, 2), vec![1]);
        assert_eq!(seq_decode(Branching::Binary, 4), vec![0, 1]);
        assert_eq!(seq_decode(Branching::Binary, 7), vec![0, 0, 0]);
        assert_eq!(seq_encode(Branching::Binary, &[1, 0, 1]).unwrap(), 12);
        assert_eq!(seq_decode(Branching::Binary, 12), vec![1, 0, 1]);
    }

    #[test]
    fn binary_codes_hit_distinct_sequences() {
        let mut seen = std::collections::HashSet::new();
        for code in 0..16u64 {
            assert!(seen.insert(seq_decode(Branching::Binary, code)));
        }
        assert_eq!(seen.len(), 16);
    }

    #[test]
    fn out_of_alphabet_rejected() {
        assert!(seq_encode(Branching::Binary, &[0, 2]).is_err());
        assert!(seq_encode(Branching::NAry(3), &[3]).is_err());
        assert!(seq_encode(Branching::Omega, &[1_000_000]).is_ok());
    }

    #[test]
    fn round_trip_dense() {
        for b in [
            Branching::Binary,
            Branching::NAry(3),
            Branching::NAry(7),
            Branching::Omega,
        ] {
            for code in 0..10_000u64 {
                let seq = seq_decode(b, code);
                assert_eq!(seq_encode(b, &seq).unwrap(), code, "{b:?} code {code}");
            }
        }
    }

    proptest! {
        #[test]
        fn prop_round_trip_nary(n in 2u64..9, code in 0u64..1_000_000) {
            let b = Branching::NAry(n);
            let seq = seq_decode(b, code);
            prop_assert_eq!(seq_encode(b, &seq).unwrap(), code);
        }

        #[test]
        fn prop_round_trip_omega(code in 0u64..1_000_000_000) {
            let seq = seq_decode(Branching::Omega, code);
            prop_assert_eq!(seq_encode(Branching::Omega, &seq).unwrap(), code);
        }
    }
}
