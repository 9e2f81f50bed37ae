//! Trees as characteristic functions over sequence codes.
//!
//! Membership is downward closed by construction: a sequence is in the tree
//! only when the node function is positive on it and on every initial
//! segment. The raw node function may therefore mark dead branches below a
//! missing ancestor without affecting the tree.

use std::collections::BTreeSet;
use std::sync::Arc;

use crate::encodings::seq::{seq_decode, seq_encode, Branching};
use crate::error::{Error, Result};
use crate::oracle::OracleFn;

#[derive(Clone, Debug)]
pub struct TreeCode {
    pub branching: Branching,
    pub node_fn: OracleFn,
}

impl TreeCode {
    pub fn new(branching: Branching, node_fn: OracleFn) -> Self {
        TreeCode { branching, node_fn }
    }

    /// The full tree over the alphabet.
    pub fn full(branching: Branching) -> Self {
        TreeCode::new(branching, OracleFn::constant(1))
    }

    /// Tree given by an explicit node set. The set is closed downward here,
    /// so partial enumerations of a tree's nodes are accepted.
    pub fn from_members(branching: Branching, members: &[Vec<u64>]) -> Result<Self> {
        let mut codes = BTreeSet::new();
        for m in members {
            for l in 0..=m.len() {
                codes.insert(seq_encode(branching, &m[..l])?);
            }
        }
        let codes = Arc::new(codes);
        Ok(TreeCode::new(
            branching,
            OracleFn::computed(move |n| Ok(codes.contains(&n) as u64)),
        ))
    }

    /// Membership under the downward-closure convention.
    pub fn member(&self, seq: &[u64]) -> Result<bool> {
        if let Some(bad) = seq.iter().find(|&&s| !self.branching.admits(s)) {
            return Err(Error::Precondition(format!(
                "symbol {bad} outside alphabet {:?}",
                self.branching
            )));
        }
        for l in 0..=seq.len() {
            let code = seq_encode(self.branching, &seq[..l])?;
            if self.node_fn.eval(code)? == 0 {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn member_code(&self, code: u64) -> Result<bool> {
        self.member(&seq_decode(self.branching, code))
    }

    /// Whether some sequence of length `m` is in the tree, by pruned
    /// depth-first search. Rejected for omega branching, which cannot be
    /// scanned exhaustively.
    pub fn has_level(&self, m: u64) -> Result<bool> {
        let width = self
            .branching
            .width()
            .ok_or_else(|| Error::Unsupported("level search on an omega-branching tree".into()))?;
        if self.node_fn.eval(0)? == 0 {
            return Ok(false);
        }
        self.level_dfs(&mut Vec::new(), m, width)
    }

    fn level_dfs(&self, prefix: &mut Vec<u64>, m: u64, width: u64) -> Result<bool> {
        if prefix.len() as u64 == m {
            return Ok(true);
        }
        for s in 0..width {
            prefix.push(s);
            let code = seq_encode(self.branching, prefix)?;
            let alive = self.node_fn.eval(code)? > 0;
            if alive && self.level_dfs(prefix, m, width)? {
                prefix.pop();
                return Ok(true);
            }
            prefix.pop();
        }
        Ok(false)
    }

    /// Whether `child` extended from `seq` by one symbol stays in the tree.
    pub fn child_alive(&self, seq: &[u64], symbol: u64) -> Result<bool> {
        let mut child = seq.to_vec();
        child.push(symbol);
        self.member(&child)
    }
}

/// Reads the first `len` values of a path generator as a sequence.
pub fn path_prefix(gen: &OracleFn, len: u64) -> Result<Vec<u64>> {
    (0..len).map(|i| gen.eval(i)).collect()
}
