//! Total functions on the naturals presented as budgeted oracles.
//!
//! Every infinite object in this crate (edge characteristic functions, tree
//! membership functions, colorings, paths) is an [`OracleFn`]: a finite
//! descriptor plus a fuel limit. Evaluating past the fuel limit is an
//! explicit error, never a silent default.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Finite descriptor for a total function `ℕ → ℕ`.
///
/// The three data variants are serializable and round-trip through instance
/// files. `Computed` holds a closure produced by a forward transform; it
/// evaluates like any other oracle but only its digest is printable.
#[derive(Clone)]
pub enum Descriptor {
    /// `entries` override a constant `default`; `support_bound` is an upper
    /// bound on every overridden index (callers may use it to cut scans).
    FiniteSupport {
        entries: Vec<(u64, u64)>,
        default: u64,
        support_bound: u64,
    },
    /// `prefix` followed by `cycle` repeated forever.
    Periodic {
        prefix: Vec<u64>,
        cycle: Vec<u64>,
    },
    /// Explicit initial values, then a constant tail.
    Tabled {
        values: Vec<u64>,
        tail_value: u64,
    },
    Computed(Arc<dyn Fn(u64) -> Result<u64> + Send + Sync>),
}

impl fmt::Debug for Descriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Descriptor::FiniteSupport {
                entries,
                default,
                support_bound,
            } => f
                .debug_struct("FiniteSupport")
                .field("entries", entries)
                .field("default", default)
                .field("support_bound", support_bound)
                .finish(),
            Descriptor::Periodic { prefix, cycle } => f
                .debug_struct("Periodic")
                .field("prefix", prefix)
                .field("cycle", cycle)
                .finish(),
            Descriptor::Tabled { values, tail_value } => f
                .debug_struct("Tabled")
                .field("values", values)
                .field("tail_value", tail_value)
                .finish(),
            Descriptor::Computed(_) => f.write_str("Computed(..)"),
        }
    }
}

/// A total `ℕ → ℕ` function with an explicit evaluation budget.
#[derive(Clone, Debug)]
pub struct OracleFn {
    pub descriptor: Descriptor,
    pub fuel_limit: u64,
}

pub const DEFAULT_FUEL: u64 = 4096;

impl OracleFn {
    pub fn new(descriptor: Descriptor, fuel_limit: u64) -> Self {
        OracleFn {
            descriptor,
            fuel_limit,
        }
    }

    /// Constant function.
    pub fn constant(value: u64) -> Self {
        OracleFn::new(
            Descriptor::FiniteSupport {
                entries: Vec::new(),
                default: value,
                support_bound: 0,
            },
            DEFAULT_FUEL,
        )
    }

    pub fn finite_support(entries: Vec<(u64, u64)>, default: u64) -> Self {
        let support_bound = entries.iter().map(|&(i, _)| i + 1).max().unwrap_or(0);
        OracleFn::new(
            Descriptor::FiniteSupport {
                entries,
                default,
                support_bound,
            },
            DEFAULT_FUEL,
        )
    }

    pub fn tabled(values: Vec<u64>, tail_value: u64) -> Self {
        OracleFn::new(Descriptor::Tabled { values, tail_value }, DEFAULT_FUEL)
    }

    pub fn periodic(prefix: Vec<u64>, cycle: Vec<u64>) -> Self {
        assert!(!cycle.is_empty(), "periodic oracle needs a nonempty cycle");
        OracleFn::new(Descriptor::Periodic { prefix, cycle }, DEFAULT_FUEL)
    }

    pub fn computed<F>(f: F) -> Self
    where
        F: Fn(u64) -> Result<u64> + Send + Sync + 'static,
    {
        OracleFn::new(Descriptor::Computed(Arc::new(f)), DEFAULT_FUEL)
    }

    pub fn with_fuel(mut self, fuel_limit: u64) -> Self {
        self.fuel_limit = fuel_limit;
        self
    }

    /// Evaluate at `n`. Indices at or above the fuel limit are rejected.
    pub fn eval(&self, n: u64) -> Result<u64> {
        if n >= self.fuel_limit {
            return Err(Error::FuelExhausted {
                index: n,
                limit: self.fuel_limit,
            });
        }
        match &self.descriptor {
            Descriptor::FiniteSupport {
                entries, default, ..
            } => Ok(entries
                .iter()
                .rev()
                .find(|&&(i, _)| i == n)
                .map(|&(_, v)| v)
                .unwrap_or(*default)),
            Descriptor::Periodic { prefix, cycle } => {
                let n = n as usize;
                if n < prefix.len() {
                    Ok(prefix[n])
                } else {
                    Ok(cycle[(n - prefix.len()) % cycle.len()])
                }
            }
            Descriptor::Tabled { values, tail_value } => {
                Ok(values.get(n as usize).copied().unwrap_or(*tail_value))
            }
            Descriptor::Computed(f) => f(n),
        }
    }

    /// First index `< bound` where the value is zero, or `None` if there is
    /// no zero below the bound. Fuel errors propagate.
    pub fn first_zero(&self, bound: u64) -> Result<Option<u64>> {
        match &self.descriptor {
            // A finite-support oracle with nonzero default cannot be zero
            // past its support bound.
            Descriptor::FiniteSupport {
                default,
                support_bound,
                ..
            } if *default != 0 => self.scan_first((*support_bound).min(bound), |v| v == 0),
            _ => self.scan_first(bound, |v| v == 0),
        }
    }

    /// First index `< bound` with a nonzero value.
    pub fn first_nonzero(&self, bound: u64) -> Result<Option<u64>> {
        match &self.descriptor {
            // A finite-support oracle with zero default cannot be nonzero
            // past its support bound.
            Descriptor::FiniteSupport {
                default: 0,
                support_bound,
                ..
            } => self.scan_first((*support_bound).min(bound), |v| v != 0),
            _ => self.scan_first(bound, |v| v != 0),
        }
    }

    /// True when the descriptor itself proves every value is nonzero.
    pub fn provably_positive(&self) -> bool {
        match &self.descriptor {
            Descriptor::FiniteSupport {
                entries, default, ..
            } => *default != 0 && entries.iter().all(|&(_, v)| v != 0),
            Descriptor::Periodic { prefix, cycle } => prefix.iter().chain(cycle).all(|&v| v != 0),
            Descriptor::Tabled { values, tail_value } => {
                *tail_value != 0 && values.iter().all(|&v| v != 0)
            }
            Descriptor::Computed(_) => false,
        }
    }

    /// True when the descriptor itself proves every value is zero.
    pub fn provably_zero(&self) -> bool {
        match &self.descriptor {
            Descriptor::FiniteSupport {
                entries, default, ..
            } => *default == 0 && entries.iter().all(|&(_, v)| v == 0),
            Descriptor::Periodic { prefix, cycle } => prefix.iter().chain(cycle).all(|&v| v == 0),
            Descriptor::Tabled { values, tail_value } => {
                *tail_value == 0 && values.iter().all(|&v| v == 0)
            }
            Descriptor::Computed(_) => false,
        }
    }

    fn scan_first(&self, bound: u64, pred: impl Fn(u64) -> bool) -> Result<Option<u64>> {
        for n in 0..bound {
            if pred(self.eval(n)?) {
                return Ok(Some(n));
            }
        }
        Ok(None)
    }

    /// Stable digest used in reports: descriptor kind plus the first values
    /// within fuel, never a bare value dump for computed oracles.
    pub fn digest(&self, sample: u64) -> String {
        let kind = match &self.descriptor {
            Descriptor::FiniteSupport { .. } => "finite_support",
            Descriptor::Periodic { .. } => "periodic",
            Descriptor::Tabled { .. } => "tabled",
            Descriptor::Computed(_) => "computed",
        };
        let n = sample.min(self.fuel_limit);
        let mut vals = Vec::new();
        for i in 0..n {
            match self.eval(i) {
                Ok(v) => vals.push(v.to_string()),
                Err(_) => {
                    vals.push("?".into());
                    break;
                }
            }
        }
        format!("{kind}[fuel={}]<{}>", self.fuel_limit, vals.join(","))
    }
}

/// Serializable form of the finite descriptors, used by instance files.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum DescriptorRepr {
    FiniteSupport {
        entries: Vec<(u64, u64)>,
        default: u64,
        support_bound: u64,
    },
    Periodic {
        prefix: Vec<u64>,
        cycle: Vec<u64>,
    },
    Tabled {
        values: Vec<u64>,
        tail_value: u64,
    },
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct OracleRepr {
    pub descriptor: DescriptorRepr,
    pub fuel: u64,
}

impl OracleRepr {
    pub fn to_oracle(&self) -> OracleFn {
        let descriptor = match &self.descriptor {
            DescriptorRepr::FiniteSupport {
                entries,
                default,
                support_bound,
            } => Descriptor::FiniteSupport {
                entries: entries.clone(),
                default: *default,
                support_bound: *support_bound,
            },
            DescriptorRepr::Periodic { prefix, cycle } => Descriptor::Periodic {
                prefix: prefix.clone(),
                cycle: cycle.clone(),
            },
            DescriptorRepr::Tabled { values, tail_value } => Descriptor::Tabled {
                values: values.clone(),
                tail_value: *tail_value,
            },
        };
        OracleFn::new(descriptor, self.fuel)
    }

    pub fn from_oracle(oracle: &OracleFn) -> Result<Self> {
        let descriptor = match &oracle.descriptor {
            Descriptor::FiniteSupport {
                entries,
                default,
                support_bound,
            } => DescriptorRepr::FiniteSupport {
                entries: entries.clone(),
                default: *default,
                support_bound: *support_bound,
            },
            Descriptor::Periodic { prefix, cycle } => DescriptorRepr::Periodic {
                prefix: prefix.clone(),
                cycle: cycle.clone(),
            },
            Descriptor::Tabled { values, tail_value } => DescriptorRepr::Tabled {
                values: values.clone(),
                tail_value: *tail_value,
            },
            Descriptor::Computed(_) => {
                return Err(Error::Unsupported(
                    "computed oracles have no serializable descriptor".into(),
                ))
            }
        };
        Ok(OracleRepr {
            descriptor,
            fuel: oracle.fuel_limit,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn finite_support_defaults() {
        let f = OracleFn::finite_support(vec![(3, 0), (5, 7)], 1);
        assert_eq!(f.eval(0).unwrap(), 1);
        assert_eq!(f.eval(3).unwrap(), 0);
        assert_eq!(f.eval(5).unwrap(), 7);
        assert_eq!(f.eval(100).unwrap(), 1);
    }

    #[test]
    fn fuel_exhaustion_is_an_error() {
        let f = OracleFn::constant(1).with_fuel(10);
        assert!(f.eval(9).is_ok());
        assert_eq!(
            f.eval(10),
            Err(Error::FuelExhausted {
                index: 10,
                limit: 10
            })
        );
    }

    #[test]
    fn periodic_and_tabled() {
        let p = OracleFn::periodic(vec![9], vec![0, 1]);
        assert_eq!(
            (0..6).map(|n| p.eval(n).unwrap()).collect::<Vec<_>>(),
            vec![9, 0, 1, 0, 1, 0]
        );
        let t = OracleFn::tabled(vec![4, 5], 2);
        assert_eq!(
            (0..4).map(|n| t.eval(n).unwrap()).collect::<Vec<_>>(),
            vec![4, 5, 2, 2]
        );
    }

    #[test]
    fn first_zero_scan() {
        let f = OracleFn::finite_support(vec![(4, 0)], 2);
        assert_eq!(f.first_zero(100).unwrap(), Some(4));
        assert_eq!(OracleFn::constant(1).first_zero(50).unwrap(), None);
    }

    #[test]
    fn first_nonzero_uses_support_bound() {
        // Scan bound far beyond fuel; the zero-default support bound cuts it.
        let f = OracleFn::finite_support(vec![(7, 3)], 0).with_fuel(16);
        assert_eq!(f.first_nonzero(1 << 40).unwrap(), Some(7));
        let z = OracleFn::finite_support(vec![], 0).with_fuel(16);
        assert_eq!(z.first_nonzero(1 << 40).unwrap(), None);
    }

    #[test]
    fn repr_round_trip() {
        let f = OracleFn::finite_support(vec![(2, 0)], 1).with_fuel(64);
        let repr = OracleRepr::from_oracle(&f).unwrap();
        let back = repr.to_oracle();
        for n in 0..10 {
            assert_eq!(f.eval(n).unwrap(), back.eval(n).unwrap());
        }
    }
}
