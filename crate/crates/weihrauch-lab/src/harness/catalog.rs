//! Named registry of the shipped reductions with their catalog anchors,
//! parameter ranges, and default source families.

use std::sync::Arc;

use crate::encodings::FiniteGraph;
use crate::error::{Error, Result};
use crate::reductions::{
    red_d_to_rc, red_d_to_s, red_gc2_to_gcn, red_gcn_to_wkln, red_hat_llpo_to_gc2,
    red_hat_wf_to_s_vecl, red_lgk_to_lpo, red_lpo_to_lgk, red_lpo_to_sf, red_lpo_to_tck,
    red_rc_to_d, red_s_to_wf, red_s_vecl_to_hat_s, red_sf_to_lpo, red_tck_to_hat_lpo, red_wf_to_d,
    red_wf_to_s_l, red_wkl_to_hat_llpo, red_wkln_to_wkl, Reduction,
};

/// How a registry entry consumes the CLI's `--k` / `--n` flags.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Param {
    None,
    K { default: u64, min: u64, max: u64 },
    N { default: u64, min: u64, max: u64 },
}

#[derive(Clone)]
pub struct CatalogEntry {
    pub base: &'static str,
    pub anchor: &'static str,
    pub param: Param,
    builder: Arc<dyn Fn(u64) -> Reduction + Send + Sync>,
    family: Arc<dyn Fn(u64) -> String + Send + Sync>,
}

impl CatalogEntry {
    fn new<B, F>(
        base: &'static str,
        anchor: &'static str,
        param: Param,
        build: B,
        family: F,
    ) -> Self
    where
        B: Fn(u64) -> Reduction + Send + Sync + 'static,
        F: Fn(u64) -> String + Send + Sync + 'static,
    {
        CatalogEntry {
            base,
            anchor,
            param,
            builder: Arc::new(build),
            family: Arc::new(family),
        }
    }

    pub fn display_name(&self) -> String {
        format!("red_{}", self.base)
    }

    /// Resolves the `--k` / `--n` flags against this entry's parameter slot.
    pub fn param_value(&self, k: Option<u64>, n: Option<u64>) -> Result<u64> {
        let (label, given, default, min, max) = match self.param {
            Param::None => {
                if k.is_some() || n.is_some() {
                    return Err(Error::Precondition(format!(
                        "{} takes no --k/--n parameter",
                        self.base
                    )));
                }
                return Ok(0);
            }
            Param::K { default, min, max } => {
                if n.is_some() {
                    return Err(Error::Precondition(format!(
                        "{} takes --k, not --n",
                        self.base
                    )));
                }
                ("--k", k, default, min, max)
            }
            Param::N { default, min, max } => {
                if k.is_some() {
                    return Err(Error::Precondition(format!(
                        "{} takes --n, not --k",
                        self.base
                    )));
                }
                ("--n", n, default, min, max)
            }
        };
        let value = given.unwrap_or(default);
        if value < min || value > max {
            return Err(Error::Precondition(format!(
                "{} needs {label} in {min}..={max}, got {value}",
                self.base
            )));
        }
        Ok(value)
    }

    pub fn build(&self, param: u64) -> Reduction {
        (self.builder)(param)
    }

    /// Name of the default source family for a given parameter value.
    pub fn default_family(&self, param: u64) -> String {
        (self.family)(param)
    }
}

/// All shipped point reductions in catalog order.
pub fn catalog() -> Vec<CatalogEntry> {
    vec![
        CatalogEntry::new(
            "lpo_to_lg",
            "Lemma LGL",
            Param::K {
                default: 2,
                min: 1,
                max: 6,
            },
            red_lpo_to_lgk,
            |_| "lpo".into(),
        ),
        CatalogEntry::new(
            "lg_to_lpo",
            "Lemma LGL",
            Param::K {
                default: 2,
                min: 2,
                max: 4,
            },
            red_lgk_to_lpo,
            |k| format!("lg{k}"),
        ),
        CatalogEntry::new(
            "wkln_to_wkl",
            "Lemma GCL0",
            Param::N {
                default: 3,
                min: 3,
                max: 5,
            },
            red_wkln_to_wkl,
            |n| format!("wkl{n}"),
        ),
        CatalogEntry::new(
            "wkl_to_hat_llpo",
            "Lemma BGP",
            Param::None,
            |_| red_wkl_to_hat_llpo(),
            |_| "wkl".into(),
        ),
        CatalogEntry::new(
            "hat_llpo_to_gc2",
            "Lemma GCL1",
            Param::None,
            |_| red_hat_llpo_to_gc2(),
            |_| "hat_llpo".into(),
        ),
        CatalogEntry::new(
            "gc2_to_gcn",
            "Lemma GCLm",
            Param::N {
                default: 3,
                min: 3,
                max: 6,
            },
            red_gc2_to_gcn,
            |_| "gc2".into(),
        ),
        CatalogEntry::new(
            "gcn_to_wkln",
            "Lemma GCL2",
            Param::N {
                default: 3,
                min: 2,
                max: 4,
            },
            red_gcn_to_wkln,
            |n| format!("gc{n}"),
        ),
        CatalogEntry::new(
            "lpo_to_tc",
            "Theorem TGC1",
            Param::K {
                default: 2,
                min: 2,
                max: 6,
            },
            red_lpo_to_tck,
            |_| "lpo".into(),
        ),
        CatalogEntry::new(
            "tc_to_hat_lpo",
            "Theorem TGC1",
            Param::K {
                default: 2,
                min: 2,
                max: 3,
            },
            red_tck_to_hat_lpo,
            |k| format!("tc{k}"),
        ),
        CatalogEntry::new(
            "wf_to_s_l",
            "Theorem PW1",
            Param::None,
            |_| red_wf_to_s_l(),
            |_| "wf".into(),
        ),
        CatalogEntry::new(
            "s_to_wf",
            "Theorem PW1",
            Param::None,
            |_| red_s_to_wf(),
            |_| "s".into(),
        ),
        CatalogEntry::new(
            "hat_wf_to_s_vecl",
            "Theorem PW3",
            Param::None,
            |_| red_hat_wf_to_s_vecl(),
            |_| "hat_wf".into(),
        ),
        CatalogEntry::new(
            "s_vecl_to_hat_s",
            "Theorem PW3",
            Param::None,
            |_| red_s_vecl_to_hat_s(),
            |_| "svecl".into(),
        ),
        CatalogEntry::new(
            "sf_to_lpo",
            "Theorem PW4",
            Param::None,
            |_| red_sf_to_lpo(FiniteGraph::triangle()),
            |_| "sf_triangle".into(),
        ),
        CatalogEntry::new(
            "sf_empty_to_lpo",
            "Theorem PW4",
            Param::None,
            |_| red_sf_to_lpo(FiniteGraph::empty(3)),
            |_| "sf_empty3".into(),
        ),
        CatalogEntry::new(
            "lpo_to_sf",
            "Theorem PW4",
            Param::None,
            |_| red_lpo_to_sf(FiniteGraph::triangle()),
            |_| "lpo".into(),
        ),
        CatalogEntry::new(
            "lpo_to_sf_empty",
            "Theorem PW4",
            Param::None,
            |_| red_lpo_to_sf(FiniteGraph::empty(3)),
            |_| "lpo".into(),
        ),
        CatalogEntry::new(
            "rc_to_d",
            "Theorem PW5",
            Param::None,
            |_| red_rc_to_d(),
            |_| "rc".into(),
        ),
        CatalogEntry::new(
            "d_to_rc",
            "Theorem PW5",
            Param::None,
            |_| red_d_to_rc(),
            |_| "d".into(),
        ),
        CatalogEntry::new(
            "wf_to_d",
            "Theorem PW5",
            Param::None,
            |_| red_wf_to_d(),
            |_| "wf".into(),
        ),
        CatalogEntry::new(
            "d_to_s",
            "Theorem PW5",
            Param::None,
            |_| red_d_to_s(),
            |_| "d".into(),
        ),
    ]
}

/// Looks up an entry by name, accepting the bare base name or the `red_`
/// prefixed display name.
pub fn find(name: &str) -> Option<CatalogEntry> {
    let base = name.strip_prefix("red_").unwrap_or(name);
    catalog().into_iter().find(|e| e.base == base)
}

/// Combinators listed alongside the point reductions.
pub fn combinator_anchors() -> Vec<(&'static str, &'static str)> {
    vec![
        ("compose", "Lemma TRANS"),
        ("parallelize", "Lemma HAT"),
        ("hat_flatten", "Lemma WKLH"),
        ("hat_unflatten", "Lemma WKLH"),
    ]
}

/// Display names of the problem catalog.
pub fn problem_names() -> Vec<&'static str> {
    vec![
        "LPO", "LLPO", "LG_k", "GC_k", "TC_k", "WKL", "WKL_n", "WF", "S", "S_L", "S_vecL", "S_F",
        "RC", "D",
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::harness::family;

    #[test]
    fn every_entry_builds_and_has_a_family() {
        for entry in catalog() {
            let p = entry.param_value(None, None).unwrap();
            let r = entry.build(p);
            let fam = family(&entry.default_family(p))
                .unwrap_or_else(|| panic!("family for {}", entry.base));
            assert_eq!(fam.problem, r.source, "{}", entry.base);
        }
    }

    #[test]
    fn every_entry_sound_on_its_default_family() {
        use crate::harness::{value_fault, verify_reduction};
        use crate::problems::Budget;
        for entry in catalog() {
            let p = entry.param_value(None, None).unwrap();
            let r = entry.build(p);
            let fam = family(&entry.default_family(p)).unwrap();
            let report = verify_reduction(&r, &fam, 2, 8, &Budget::default()).unwrap();
            assert!(report.all_valid(), "{}: {}", entry.base, report.to_json());
            // An off-by-one back map must be noticed at least once.
            let broken = value_fault(&r);
            let report = verify_reduction(&broken, &fam, 2, 8, &Budget::default()).unwrap();
            assert!(report.invalid > 0, "{} fault undetected", entry.base);
        }
    }

    #[test]
    fn find_accepts_both_spellings() {
        assert!(find("wkl_to_hat_llpo").is_some());
        assert!(find("red_wkl_to_hat_llpo").is_some());
        assert!(find("nonsense").is_none());
    }

    #[test]
    fn param_ranges_enforced() {
        let e = find("lg_to_lpo").unwrap();
        assert!(e.param_value(Some(9), None).is_err());
        assert_eq!(e.param_value(None, None).unwrap(), 2);
        let none = find("wf_to_d").unwrap();
        assert!(none.param_value(Some(2), None).is_err());
    }
}
