use serde::{Deserialize, Serialize};

/// Outcome of checking a candidate solution or certificate at a finite budget.
///
/// `Unknown` is first-class: truncation checking must not convert ignorance
/// into refutation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum Verdict {
    Valid,
    Invalid { witness: String },
    Unknown { reason: String },
}

impl Verdict {
    pub fn invalid(witness: impl Into<String>) -> Self {
        Verdict::Invalid {
            witness: witness.into(),
        }
    }

    pub fn unknown(reason: impl Into<String>) -> Self {
        Verdict::Unknown {
            reason: reason.into(),
        }
    }

    pub fn is_valid(&self) -> bool {
        matches!(self, Verdict::Valid)
    }

    pub fn is_invalid(&self) -> bool {
        matches!(self, Verdict::Invalid { .. })
    }

    pub fn is_unknown(&self) -> bool {
        matches!(self, Verdict::Unknown { .. })
    }

    /// Conjunction: Invalid dominates, then Unknown.
    pub fn and(self, other: Verdict) -> Verdict {
        match (self, other) {
            (v @ Verdict::Invalid { .. }, _) => v,
            (_, v @ Verdict::Invalid { .. }) => v,
            (v @ Verdict::Unknown { .. }, _) => v,
            (_, v @ Verdict::Unknown { .. }) => v,
            _ => Verdict::Valid,
        }
    }
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Verdict::Valid => write!(f, "valid"),
            Verdict::Invalid { witness } => write!(f, "invalid ({witness})"),
            Verdict::Unknown { reason } => write!(f, "unknown ({reason})"),
        }
    }
}
