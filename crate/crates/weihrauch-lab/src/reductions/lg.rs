//! LPO and LG_k reduce to each other: a zero of the function plants a
//! (k+1)-clique window in the graph, and colorability of the truncations
//! reads the function back.

use crate::encodings::{finite_subgraph, is_k_colorable, GraphCode};
use crate::error::{Error, Result};
use crate::oracle::OracleFn;
use crate::problems::{Certificate, Instance, Payload, ProblemId, Solution};
use crate::reductions::Reduction;

/// Scan cap for forward transforms that must locate a first zero themselves.
pub(crate) const FORWARD_SCAN: u64 = 4096;

pub(crate) fn forward_scan(p: &OracleFn) -> u64 {
    p.fuel_limit.min(FORWARD_SCAN)
}

/// `LPO <= LG_k`: every zero of `p` at `m` adds the complete graph on
/// `{m, ..., m+k}`. The first truncation without a k-coloring is `G_{j+k}`
/// for the first zero `j`.
pub fn red_lpo_to_lgk(k: u64) -> Reduction {
    assert!(k >= 1, "LG_k needs k >= 1");
    Reduction::new(
        format!("lpo_to_lg{k}"),
        ProblemId::Lpo,
        ProblemId::Lg(k),
        true,
        move |u| {
            let p = u.payload.as_oracle()?.clone();
            let edge_fn = OracleFn::computed(move |code| {
                let (a, b) = crate::encodings::pair_decode(code);
                if b - a > k {
                    return Ok(0);
                }
                for m in b.saturating_sub(k)..=a {
                    if p.eval(m)? == 0 {
                        return Ok(1);
                    }
                }
                Ok(0)
            })
            .with_fuel(u64::MAX);
            let certificate = match &u.certificate {
                Some(Certificate::FirstZero(j)) => Some(Certificate::KnownAnswer(j + k)),
                Some(Certificate::NoZero) | Some(Certificate::KnownAnswer(0)) => {
                    Some(Certificate::KnownAnswer(0))
                }
                Some(Certificate::KnownAnswer(v)) => Some(Certificate::KnownAnswer(v - 1 + k)),
                _ => None,
            };
            Ok(Instance {
                problem: ProblemId::Lg(k),
                payload: Payload::Graph(GraphCode::new(edge_fn)),
                certificate,
            })
        },
        move |_, y| {
            let y = y.as_value()?;
            Ok(Solution::Value(if y == 0 { 0 } else { y - k + 1 }))
        },
    )
}

/// `LG_k <= LPO`: `p(m) = 1` iff `G_m` is k-colorable; the answer is the
/// LPO output minus one.
pub fn red_lgk_to_lpo(k: u64) -> Reduction {
    assert!(k >= 1);
    Reduction::new(
        format!("lg{k}_to_lpo"),
        ProblemId::Lg(k),
        ProblemId::Lpo,
        true,
        move |u| {
            let g = u.payload.as_graph()?.clone();
            // Colorability of truncations is decreasing, so the first zero of
            // p is exactly the LG answer. Fuel keeps the brute-force
            // truncations small.
            let p = OracleFn::computed(move |m| {
                let trunc = finite_subgraph(&g, m)?;
                Ok(is_k_colorable(&trunc, k) as u64)
            })
            .with_fuel(48);
            let certificate = match &u.certificate {
                Some(Certificate::KnownAnswer(0)) => Some(Certificate::NoZero),
                Some(Certificate::KnownAnswer(m)) => Some(Certificate::FirstZero(*m)),
                _ => None,
            };
            Ok(Instance {
                problem: ProblemId::Lpo,
                payload: Payload::Oracle(p),
                certificate,
            })
        },
        |_, y| {
            let y = y.as_value()?;
            Ok(Solution::Value(y.saturating_sub(1)))
        },
    )
}

pub(crate) fn first_zero_or_err(p: &OracleFn) -> Result<u64> {
    p.first_zero(forward_scan(p))?
        .ok_or_else(|| Error::Precondition("no zero found within the forward scan bound".into()))
}
