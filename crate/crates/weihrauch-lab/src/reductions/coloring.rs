//! Coloring problems: parallelized LLPO embeds into 2-coloring gadgets,
//! 2-coloring lifts to n-coloring by apex cliques, and n-coloring reduces to
//! paths through the tree of proper partial colorings.

use std::sync::Arc;

use crate::encodings::{
    diag_pair, diag_unpair, pair_decode, seq_decode, Branching, GraphCode, TreeCode, VertexUniverse,
};
use crate::error::{Error, Result};
use crate::oracle::OracleFn;
use crate::problems::{Certificate, HatSolution, Instance, Payload, ProblemId, Solution};
use crate::reductions::Reduction;

fn row_pivot(p: &OracleFn) -> Result<Option<u64>> {
    p.first_nonzero(p.fuel_limit.min(4096))
}

/// `Hat(LLPO) <= GC_2`: gadget `i` is the ray `v_{i,0}, v_{i,1}, ...` with a
/// hub `u_i` wired to `v_{i,j}` for the first nonzero index `j` of row `i`.
/// Vertex layout through the diagonal pairing: `u_i = <i,0>`,
/// `v_{i,j} = <i,j+1>`. In any proper 2-coloring the hub's color relative to
/// `v_{i,0}` reads off the parity of `j`.
pub fn red_hat_llpo_to_gc2() -> Reduction {
    Reduction::new(
        "hat_llpo_to_gc2",
        ProblemId::hat(ProblemId::Llpo),
        ProblemId::Gc(2),
        true,
        move |u| {
            let hat = u.payload.as_hat()?.clone();
            let edge_fn = OracleFn::computed(move |code| {
                let (v, w) = pair_decode(code);
                let (i, x) = diag_unpair(v);
                let (i2, x2) = diag_unpair(w);
                if i != i2 {
                    return Ok(0);
                }
                let (lo, hi) = (x.min(x2), x.max(x2));
                if lo >= 1 {
                    return Ok((hi == lo + 1) as u64);
                }
                // Hub to ray: present exactly at the row's pivot.
                let j = hi - 1;
                let p = hat.row(i)?.as_oracle()?.clone();
                Ok((row_pivot(&p)? == Some(j)) as u64)
            })
            .with_fuel(u64::MAX);
            let certificate = match &u.certificate {
                Some(cert @ (Certificate::HatOf { .. } | Certificate::HatGen(_))) => {
                    let cert = cert.clone();
                    Some(Certificate::KnownColoring(
                        OracleFn::computed(move |v| {
                            let (i, x) = diag_unpair(v);
                            if x >= 1 {
                                return Ok((x - 1) % 2);
                            }
                            match cert.hat_row(i)? {
                                Certificate::FirstZero(j) => Ok(1 - j % 2),
                                Certificate::NoZero => Ok(0),
                                other => Err(Error::CertificateMismatch(format!(
                                    "row {i}: {other:?} is not an LLPO certificate"
                                ))),
                            }
                        })
                        .with_fuel(u64::MAX),
                    ))
                }
                _ => None,
            };
            Ok(Instance {
                problem: ProblemId::Gc(2),
                payload: Payload::Graph(GraphCode::new(edge_fn)),
                certificate,
            })
        },
        |_, y| {
            let c = y.as_fn()?.clone();
            Ok(Solution::Hat(HatSolution::computed(move |i| {
                let hub = c.eval(diag_pair(i, 0))?;
                let ray0 = c.eval(diag_pair(i, 1))?;
                Ok(Solution::Value((hub != ray0) as u64))
            })))
        },
    )
}

/// `GC_2 <= GC_n`: adjoin a complete graph on `n - 2` apex vertices, each
/// joined to everything; the old graph shifts up by `n - 2`. Any proper
/// n-coloring leaves exactly two colors for the old vertices, renamed back
/// to `{0, 1}` by order of first appearance.
pub fn red_gc2_to_gcn(n: u64) -> Reduction {
    assert!(n > 2);
    let shift = n - 2;
    Reduction::new(
        format!("gc2_to_gc{n}"),
        ProblemId::Gc(2),
        ProblemId::Gc(n),
        false,
        move |u| {
            let g = u.payload.as_graph()?.clone();
            let eg = g.clone();
            let edge_fn = OracleFn::computed(move |code| {
                let (a, b) = pair_decode(code);
                if a < shift {
                    return Ok(1);
                }
                Ok(eg.edge(a - shift, b - shift)? as u64)
            })
            .with_fuel(u64::MAX);
            let universe = match &g.vertex_universe {
                VertexUniverse::All => VertexUniverse::All,
                _ => {
                    let ug = g.clone();
                    VertexUniverse::Computed(Arc::new(move |v| {
                        if v < shift {
                            Ok(true)
                        } else {
                            ug.contains_vertex(v - shift)
                        }
                    }))
                }
            };
            let certificate = match &u.certificate {
                Some(Certificate::KnownColoring(c)) | Some(Certificate::PathGen(c)) => {
                    let c = c.clone();
                    Some(Certificate::KnownColoring(
                        OracleFn::computed(move |v| {
                            if v < shift {
                                Ok(v + 2)
                            } else {
                                c.eval(v - shift)
                            }
                        })
                        .with_fuel(u64::MAX),
                    ))
                }
                _ => None,
            };
            Ok(Instance {
                problem: ProblemId::Gc(n),
                payload: Payload::Graph(GraphCode::new(edge_fn).with_universe(universe)),
                certificate,
            })
        },
        move |u, y| {
            let g = u.payload.as_graph()?.clone();
            let c2 = y.as_fn()?.clone();
            let fuel = c2.fuel_limit;
            Ok(Solution::Fn(
                OracleFn::computed(move |v| {
                    let mut first = None;
                    let mut second = None;
                    for w in 0..=v {
                        if !g.contains_vertex(w)? {
                            continue;
                        }
                        let col = c2.eval(w + shift)?;
                        if first.is_none() {
                            first = Some(col);
                        } else if first != Some(col) && second.is_none() {
                            second = Some(col);
                        }
                    }
                    let col = c2.eval(v + shift)?;
                    if Some(col) == first {
                        Ok(0)
                    } else if Some(col) == second {
                        Ok(1)
                    } else {
                        // A third color among the old vertices: the input was
                        // not a proper coloring of the lifted graph.
                        Ok(2)
                    }
                })
                .with_fuel(fuel),
            ))
        },
    )
}

/// `GC_n <= WKL_n`: the tree of proper partial colorings; a path is exactly
/// a coloring. The input must be certified locally colorable.
pub fn red_gcn_to_wkln(n: u64) -> Reduction {
    assert!(n >= 2);
    Reduction::new(
        format!("gc{n}_to_wkl{n}"),
        ProblemId::Gc(n),
        ProblemId::Wkln(n),
        true,
        move |u| {
            let g = u.payload.as_graph()?.clone();
            let certificate = match u.require_certificate()? {
                Certificate::KnownColoring(c) | Certificate::PathGen(c) => {
                    Certificate::PathGen(c.clone())
                }
                other => {
                    return Err(Error::CertificateMismatch(format!(
                        "{other:?} does not witness local {n}-colorability"
                    )))
                }
            };
            let node_fn = OracleFn::computed(move |code| {
                let sigma = seq_decode(Branching::NAry(n), code);
                for j in 0..sigma.len() as u64 {
                    if !g.contains_vertex(j)? {
                        continue;
                    }
                    for l in 0..j {
                        if !g.contains_vertex(l)? {
                            continue;
                        }
                        if g.edge(l, j)? && sigma[l as usize] == sigma[j as usize] {
                            return Ok(0);
                        }
                    }
                }
                Ok(1)
            })
            .with_fuel(u64::MAX);
            Ok(Instance {
                problem: ProblemId::Wkln(n),
                payload: Payload::Tree(TreeCode::new(Branching::NAry(n), node_fn)),
                certificate: Some(certificate),
            })
        },
        |_, y| Ok(Solution::Fn(y.as_fn()?.clone())),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::encodings::{check_coloring, finite_subgraph, is_k_colorable};
    use crate::problems::{check_solution, hat_pack, solve_certified, verify_certificate, Budget};

    fn llpo_inst(entries: Vec<(u64, u64)>, cert: Certificate) -> Instance {
        Instance::certified(
            ProblemId::Llpo,
            Payload::Oracle(OracleFn::finite_support(entries, 0)),
            cert,
        )
    }

    #[test]
    fn even_pivot_forces_answer_one() {
        // Row 0 pivots at the even index 2: any proper 2-coloring makes the
        // hub differ from v_{0,0}, so the pulled-back answer is 1.
        let u = hat_pack(&[
            llpo_inst(vec![(2, 5)], Certificate::FirstZero(2)),
            llpo_inst(vec![(3, 1)], Certificate::FirstZero(3)),
            llpo_inst(vec![], Certificate::NoZero),
        ])
        .unwrap();
        let r = red_hat_llpo_to_gc2();
        let x = r.forward(&u).unwrap();
        let g = x.payload.as_graph().unwrap();
        // Hub edge at the pivot only.
        assert!(g.edge(diag_pair(0, 0), diag_pair(0, 3)).unwrap());
        assert!(!g.edge(diag_pair(0, 0), diag_pair(0, 1)).unwrap());
        // Ray edges always.
        assert!(g.edge(diag_pair(2, 1), diag_pair(2, 2)).unwrap());

        assert!(verify_certificate(&x, &Budget::default())
            .unwrap()
            .is_valid());
        // Forward graph is locally 2-colorable.
        assert!(is_k_colorable(&finite_subgraph(g, 30).unwrap(), 2));

        let y = solve_certified(&x, &Budget::default()).unwrap();
        assert!(check_solution(&x, &y, &Budget::default())
            .unwrap()
            .is_valid());
        let v = r.back(&u, &y).unwrap();
        let rows = v.as_hat().unwrap();
        assert_eq!(rows.row(0).unwrap().as_value().unwrap(), 1);
        assert_eq!(rows.row(1).unwrap().as_value().unwrap(), 0);
        assert!(check_solution(&u, &v, &Budget::default())
            .unwrap()
            .is_valid());
    }

    #[test]
    fn apex_lift_and_rename() {
        // G = single edge (0,1), lifted to GC_3 with one apex.
        let g = GraphCode::from_edges(&[(0, 1)]).unwrap();
        let u = Instance::certified(
            ProblemId::Gc(2),
            Payload::Graph(g),
            Certificate::KnownColoring(OracleFn::periodic(vec![0, 1], vec![0])),
        );
        let r = red_gc2_to_gcn(3);
        let x = r.forward(&u).unwrap();
        let gx = x.payload.as_graph().unwrap();
        assert!(gx.edge(0, 1).unwrap());
        assert!(gx.edge(0, 2).unwrap());
        assert!(gx.edge(1, 2).unwrap());
        assert!(verify_certificate(&x, &Budget::default())
            .unwrap()
            .is_valid());
        let y = solve_certified(&x, &Budget::default()).unwrap();
        assert!(check_solution(&x, &y, &Budget::default())
            .unwrap()
            .is_valid());
        let v = r.back(&u, &y).unwrap();
        assert!(check_solution(&u, &v, &Budget::default())
            .unwrap()
            .is_valid());
        // Renaming starts at 0.
        assert_eq!(v.as_fn().unwrap().eval(0).unwrap(), 0);
        assert_eq!(v.as_fn().unwrap().eval(1).unwrap(), 1);
    }

    #[test]
    fn coloring_tree_levels() {
        // G = single edge (0,1), n = 2: level-2 members are <0,1> and <1,0>.
        let g = GraphCode::from_edges(&[(0, 1)]).unwrap();
        let u = Instance::certified(
            ProblemId::Gc(2),
            Payload::Graph(g),
            Certificate::KnownColoring(OracleFn::periodic(vec![], vec![0, 1])),
        );
        let r = red_gcn_to_wkln(2);
        let x = r.forward(&u).unwrap();
        let t = x.payload.as_tree().unwrap();
        assert!(t.member(&[0, 1]).unwrap());
        assert!(t.member(&[1, 0]).unwrap());
        assert!(!t.member(&[0, 0]).unwrap());
        assert!(!t.member(&[1, 1]).unwrap());

        let y = solve_certified(&x, &Budget::default()).unwrap();
        let v = r.back(&u, &y).unwrap();
        let verdict = check_coloring(u.payload.as_graph().unwrap(), v.as_fn().unwrap(), 2, 30);
        assert!(verdict.is_valid());
    }

    #[test]
    fn empty_graph_gives_full_coloring_tree() {
        let u = Instance::certified(
            ProblemId::Gc(3),
            Payload::Graph(GraphCode::empty()),
            Certificate::KnownColoring(OracleFn::constant(0)),
        );
        let x = red_gcn_to_wkln(3).forward(&u).unwrap();
        let t = x.payload.as_tree().unwrap();
        assert!(t.member(&[0, 0, 2, 1]).unwrap());
    }

    #[test]
    fn uncertified_gcn_rejected() {
        let u = Instance::new(ProblemId::Gc(3), Payload::Graph(GraphCode::empty()));
        assert!(red_gcn_to_wkln(3).forward(&u).is_err());
    }
}
