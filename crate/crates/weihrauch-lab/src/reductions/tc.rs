//! TC_k both ways: a first zero plants an escape clique, and the parallelized
//! colorability questions about truncations and partial colorings recover a
//! coloring or an escape value.

use std::sync::Mutex;

use crate::encodings::{
    finite_subgraph, is_k_colorable, is_k_colorable_extending, pair_decode, seq_decode, seq_encode,
    Branching, GraphCode,
};
use crate::error::Error;
use crate::oracle::OracleFn;
use crate::problems::{Certificate, HatPayload, Instance, Payload, ProblemId, Solution};
use crate::reductions::lg::forward_scan;
use crate::reductions::Reduction;

/// Scan bound for the certificate transport in `red_tck_to_hat_lpo`. The
/// harness families keep their planted structure below this many vertices.
const STABLE_SCAN: u64 = 32;

/// `LPO <= TC_k`: a first zero at `j` turns `{j, ..., j+k}` into a clique, so
/// the graph stops being k-colorable and the escape value is `j + k`; with no
/// zero the graph is empty and the constant coloring answers 0.
pub fn red_lpo_to_tck(k: u64) -> Reduction {
    assert!(k >= 1);
    Reduction::new(
        format!("lpo_to_tc{k}"),
        ProblemId::Lpo,
        ProblemId::Tc(k),
        true,
        move |u| {
            let p = u.payload.as_oracle()?.clone();
            let scan = forward_scan(&p);
            let edge_fn = OracleFn::computed(move |code| {
                let (a, b) = pair_decode(code);
                if b - a > k {
                    return Ok(0);
                }
                match p.first_zero(scan)? {
                    Some(m) => Ok((m <= a && b <= m + k) as u64),
                    None => Ok(0),
                }
            })
            .with_fuel(u64::MAX);
            let certificate = match &u.certificate {
                Some(Certificate::FirstZero(j)) => Some(Certificate::KnownAnswer(j + k)),
                Some(Certificate::NoZero) | Some(Certificate::KnownAnswer(0)) => {
                    Some(Certificate::KnownColoring(OracleFn::constant(0)))
                }
                Some(Certificate::KnownAnswer(v)) => Some(Certificate::KnownAnswer(v - 1 + k)),
                _ => None,
            };
            Ok(Instance {
                problem: ProblemId::Tc(k),
                payload: Payload::Graph(GraphCode::new(edge_fn)),
                certificate,
            })
        },
        move |_, y| {
            let f = y.as_fn()?;
            let f0 = f.eval(0)?;
            Ok(Solution::Value(if f0 == 0 {
                0
            } else {
                f0.saturating_sub(k - 1)
            }))
        },
    )
}

/// Partial coloring number `i >= 1` decodes to the k-ary word `<0> ++ sigma`
/// where `sigma` is word number `i - 1`. Row 0 asks plain colorability.
fn tck_sigma(k: u64, i: u64) -> Vec<u64> {
    let mut word = vec![0];
    word.extend(seq_decode(Branching::NAry(k), i - 1));
    word
}

fn tck_row(g: &GraphCode, k: u64, i: u64) -> OracleFn {
    let g = g.clone();
    if i == 0 {
        OracleFn::computed(move |m| Ok(is_k_colorable(&finite_subgraph(&g, m)?, k) as u64))
            .with_fuel(48)
    } else {
        let sigma = tck_sigma(k, i);
        OracleFn::computed(move |m| {
            Ok(is_k_colorable_extending(&finite_subgraph(&g, m)?, k, &sigma) as u64)
        })
        .with_fuel(48)
    }
}

/// `TC_k <= Hat(LPO)`: row 0 asks whether the truncations stay k-colorable,
/// row `i >= 1` whether the partial coloring number `i` extends. The back map
/// either reads an escape value off row 0 or walks a coloring one vertex at a
/// time along rows that answered "no zero".
pub fn red_tck_to_hat_lpo(k: u64) -> Reduction {
    assert!(
        (2..=3).contains(&k),
        "word codes stay in u64 for k in 2..=3"
    );
    Reduction::new(
        format!("tc{k}_to_hat_lpo"),
        ProblemId::Tc(k),
        ProblemId::hat(ProblemId::Lpo),
        true,
        move |u| {
            let g = u.payload.as_graph()?.clone();
            let rows = HatPayload::computed(move |i| Ok(Payload::Oracle(tck_row(&g, k, i))));
            let certificate = if u.certificate.is_some() {
                let g = u.payload.as_graph()?.clone();
                Some(Certificate::hat_gen(move |i| {
                    let p = tck_row(&g, k, i);
                    match p.first_zero(STABLE_SCAN)? {
                        Some(j) => Ok(Certificate::FirstZero(j)),
                        None => Ok(Certificate::NoZero),
                    }
                }))
            } else {
                None
            };
            Ok(Instance {
                problem: ProblemId::hat(ProblemId::Lpo),
                payload: Payload::Hat(rows),
                certificate,
            })
        },
        move |_, y| {
            let y = y.as_hat()?.clone();
            let a0 = y.row(0)?.as_value()?;
            if a0 > 0 {
                // Truncation a0 - 1 is the first without a k-coloring; G_0 is
                // always colorable so the escape value is positive.
                return Ok(Solution::Fn(OracleFn::tabled(vec![a0 - 1], 0)));
            }
            let cache = Mutex::new(vec![0u64]);
            Ok(Solution::Fn(
                OracleFn::computed(move |v| {
                    let mut cur = cache.lock().unwrap();
                    while (cur.len() as u64) <= v {
                        let mut found = None;
                        for m in 0..k {
                            let mut child = cur.clone();
                            child.push(m);
                            let code = seq_encode(Branching::NAry(k), &child[1..])? + 1;
                            if y.row(code)?.as_value()? == 0 {
                                found = Some(m);
                                break;
                            }
                        }
                        match found {
                            Some(m) => cur.push(m),
                            None => {
                                return Err(Error::Precondition(
                                    "coloring walk stuck: no extendable child row".into(),
                                ))
                            }
                        }
                    }
                    Ok(cur[v as usize])
                })
                .with_fuel(40),
            ))
        },
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::encodings::check_coloring;
    use crate::problems::{check_solution, solve_certified, verify_certificate, Budget};

    #[test]
    fn escape_through_tc() {
        // FirstZero(1), k=2: clique on {1,2,3}, escape value 3, back 2.
        let r = red_lpo_to_tck(2);
        let u = Instance::certified(
            ProblemId::Lpo,
            Payload::Oracle(OracleFn::finite_support(vec![(1, 0)], 1)),
            Certificate::FirstZero(1),
        );
        let x = r.forward(&u).unwrap();
        assert!(verify_certificate(&x, &Budget::default())
            .unwrap()
            .is_valid());
        let g = x.payload.as_graph().unwrap();
        assert!(g.edge(1, 3).unwrap());
        assert!(!g.edge(0, 1).unwrap());
        let y = solve_certified(&x, &Budget::default()).unwrap();
        assert!(check_solution(&x, &y, &Budget::default())
            .unwrap()
            .is_valid());
        let v = r.back(&u, &y).unwrap();
        assert_eq!(v.as_value().unwrap(), 2);
        assert!(check_solution(&u, &v, &Budget::default())
            .unwrap()
            .is_valid());
    }

    #[test]
    fn no_zero_through_tc() {
        let r = red_lpo_to_tck(3);
        let u = Instance::certified(
            ProblemId::Lpo,
            Payload::Oracle(OracleFn::constant(1)),
            Certificate::NoZero,
        );
        let x = r.forward(&u).unwrap();
        let y = solve_certified(&x, &Budget::default()).unwrap();
        assert!(check_solution(&x, &y, &Budget::default())
            .unwrap()
            .is_valid());
        let v = r.back(&u, &y).unwrap();
        assert_eq!(v.as_value().unwrap(), 0);
        assert!(check_solution(&u, &v, &Budget::default())
            .unwrap()
            .is_valid());
    }

    #[test]
    fn sigma_numbering_starts_with_zero() {
        assert_eq!(tck_sigma(2, 1), vec![0]);
        assert_eq!(tck_sigma(2, 2), vec![0, 0]);
        assert_eq!(tck_sigma(2, 3), vec![0, 1]);
    }

    #[test]
    fn colorable_graph_walks_a_coloring() {
        // Path 0-1-2 is 2-colorable: back must produce a proper coloring
        // starting at color 0.
        let r = red_tck_to_hat_lpo(2);
        let g = GraphCode::from_edges(&[(0, 1), (1, 2)]).unwrap();
        let u = Instance::certified(
            ProblemId::Tc(2),
            Payload::Graph(g),
            Certificate::KnownColoring(OracleFn::periodic(vec![], vec![0, 1])),
        );
        let x = r.forward(&u).unwrap();
        assert!(verify_certificate(&x, &Budget::default())
            .unwrap()
            .is_valid());
        let y = solve_certified(&x, &Budget::default()).unwrap();
        assert!(check_solution(&x, &y, &Budget::default())
            .unwrap()
            .is_valid());
        let v = r.back(&u, &y).unwrap();
        let f = v.as_fn().unwrap();
        assert_eq!(f.eval(0).unwrap(), 0);
        let verdict = check_coloring(u.payload.as_graph().unwrap(), f, 2, 10);
        assert!(verdict.is_valid());
        assert!(check_solution(&u, &v, &Budget::default())
            .unwrap()
            .is_valid());
    }

    #[test]
    fn uncolorable_graph_escapes() {
        // Triangle, k=2: row 0 first hits zero at truncation 2, escape 2.
        let r = red_tck_to_hat_lpo(2);
        let g = GraphCode::from_edges(&[(0, 1), (0, 2), (1, 2)]).unwrap();
        let u = Instance::certified(
            ProblemId::Tc(2),
            Payload::Graph(g),
            Certificate::KnownAnswer(2),
        );
        let x = r.forward(&u).unwrap();
        assert!(verify_certificate(&x, &Budget::default())
            .unwrap()
            .is_valid());
        let y = solve_certified(&x, &Budget::default()).unwrap();
        let v = r.back(&u, &y).unwrap();
        assert_eq!(v.as_fn().unwrap().eval(0).unwrap(), 2);
        assert!(check_solution(&u, &v, &Budget::default())
            .unwrap()
            .is_valid());
    }
}
