//! Embedding problems: well-foundedness and subgraph search translate back
//! and forth through trees of partial embeddings, incomparability graphs,
//! and tagged-ray gadget components.

use std::sync::Arc;

use crate::encodings::{
    diag_unpair, pair_decode, path_prefix, seq_decode, seq_encode, Branching, FiniteGraph,
    GraphCode, TreeCode, VertexUniverse,
};
use crate::error::Error;
use crate::oracle::OracleFn;
use crate::problems::{
    tagged_linear, Certificate, HatPayload, HatSolution, Instance, Payload, ProblemId, Solution,
};
use crate::reductions::lg::first_zero_or_err;
use crate::reductions::Reduction;

fn prefix_code_gen(branching: Branching, gen: &OracleFn) -> OracleFn {
    let gen = gen.clone();
    // Prefix codes grow geometrically with depth (omega codes square per
    // level); the fuel stops where they leave the window in which edge
    // queries between codes still have representable pair codes.
    const QUERYABLE: u64 = 1 << 31;
    let mut fuel = 1u64;
    while fuel < 64 {
        match path_prefix(&gen, fuel).and_then(|p| seq_encode(branching, &p)) {
            Ok(code) if code < QUERYABLE => fuel += 1,
            _ => break,
        }
    }
    OracleFn::computed(move |i| seq_encode(branching, &path_prefix(&gen, i)?)).with_fuel(fuel)
}

fn is_extension(shorter: &[u64], longer: &[u64]) -> bool {
    longer.len() == shorter.len() + 1 && longer.starts_with(shorter)
}

/// `WF <= S_L`: the graph of the tree itself, vertices the node codes and
/// edges the parent-child pairs. The ray embeds exactly along an infinite
/// path, so the answers are complementary.
pub fn red_wf_to_s_l() -> Reduction {
    Reduction::new(
        "wf_to_s_l",
        ProblemId::Wf,
        ProblemId::SL,
        true,
        |u| {
            let t = u.payload.as_tree()?.clone();
            let branching = t.branching;
            let edge_t = t.clone();
            let edge_fn = OracleFn::computed(move |code| {
                let (a, b) = pair_decode(code);
                let sa = seq_decode(edge_t.branching, a);
                let sb = seq_decode(edge_t.branching, b);
                Ok((is_extension(&sa, &sb) || is_extension(&sb, &sa)) as u64)
            })
            .with_fuel(u64::MAX);
            let universe_t = t.clone();
            let universe = VertexUniverse::Computed(Arc::new(move |v| universe_t.member_code(v)));
            let certificate = match &u.certificate {
                Some(Certificate::PathGen(gen)) => {
                    Some(Certificate::PathGen(prefix_code_gen(branching, gen)))
                }
                Some(Certificate::Finite(d)) => Some(Certificate::NoEmbedding(*d)),
                Some(Certificate::KnownAnswer(v)) => {
                    Some(Certificate::KnownAnswer(1 - (*v).min(1)))
                }
                _ => None,
            };
            Ok(Instance {
                problem: ProblemId::SL,
                payload: Payload::Graph(GraphCode::new(edge_fn).with_universe(universe)),
                certificate,
            })
        },
        |_, y| Ok(Solution::Value(1 - y.as_value()?.min(1))),
    )
}

/// `S <= WF`: the tree of partial embeddings of `H` into `G`, branching over
/// all of ℕ. A node maps the first vertices of `H` injectively into `G`
/// preserving `H`'s edges; infinite paths are embeddings.
pub fn red_s_to_wf() -> Reduction {
    Reduction::new(
        "s_to_wf",
        ProblemId::S,
        ProblemId::Wf,
        true,
        |u| {
            let (g, h) = u.payload.as_graph_pair()?;
            let (g, h) = (g.clone(), h.clone());
            let node_fn = OracleFn::computed(move |code| {
                let sigma = seq_decode(Branching::Omega, code);
                for (t, &v) in sigma.iter().enumerate() {
                    if !g.contains_vertex(v)? {
                        return Ok(0);
                    }
                    if sigma[..t].contains(&v) {
                        return Ok(0);
                    }
                    for (j, &w) in sigma[..t].iter().enumerate() {
                        let pattern_edge = h.contains_vertex(j as u64)?
                            && h.contains_vertex(t as u64)?
                            && h.edge(j as u64, t as u64)?;
                        if pattern_edge && !g.edge(w, v)? {
                            return Ok(0);
                        }
                    }
                }
                Ok(1)
            })
            .with_fuel(u64::MAX);
            let certificate = match &u.certificate {
                Some(Certificate::EmbedsAt(map)) => {
                    let map = map.clone();
                    let base = map.iter().max().map_or(0, |m| m + 1);
                    Some(Certificate::PathGen(
                        OracleFn::computed(move |i| {
                            Ok(map
                                .get(i as usize)
                                .copied()
                                .unwrap_or(base + i - map.len() as u64))
                        })
                        .with_fuel(u64::MAX),
                    ))
                }
                Some(Certificate::PathGen(e)) => Some(Certificate::PathGen(e.clone())),
                Some(Certificate::NoEmbedding(_)) => Some(Certificate::KnownAnswer(1)),
                Some(Certificate::KnownAnswer(v)) => {
                    Some(Certificate::KnownAnswer(1 - (*v).min(1)))
                }
                _ => None,
            };
            Ok(Instance {
                problem: ProblemId::Wf,
                payload: Payload::Tree(TreeCode::new(Branching::Omega, node_fn)),
                certificate,
            })
        },
        |_, y| Ok(Solution::Value(1 - y.as_value()?.min(1))),
    )
}

fn cycle_edge(n: u64, l1: u64, l2: u64) -> bool {
    let (lo, hi) = (l1.min(l2), l1.max(l2));
    hi == lo + 1 || (lo == 0 && hi == n + 2)
}

fn tree_local_code(n: u64, local: u64) -> Option<u64> {
    if local == 0 {
        Some(0)
    } else if local > n + 2 {
        Some(local - (n + 2))
    } else {
        None
    }
}

/// `Hat(WF) <= S_vecL`: component `i` of the output graph is the
/// `(i+3)`-cycle of the tagged ray with the `i`-th tree hung at the cycle's
/// shared vertex. `L_i` embeds into component `i` exactly when the tree has
/// an infinite path, so `s` answers the well-foundedness questions negated.
pub fn red_hat_wf_to_s_vecl() -> Reduction {
    Reduction::new(
        "hat_wf_to_s_vecl",
        ProblemId::hat(ProblemId::Wf),
        ProblemId::SVecL,
        true,
        |u| {
            let hat = u.payload.as_hat()?.clone();
            let edge_hat = hat.clone();
            let edge_fn = OracleFn::computed(move |code| {
                let (a, b) = pair_decode(code);
                let (i, l1) = diag_unpair(a);
                let (i2, l2) = diag_unpair(b);
                if i != i2 {
                    return Ok(0);
                }
                if l1 <= i + 2 && l2 <= i + 2 {
                    return Ok(cycle_edge(i, l1, l2) as u64);
                }
                match (tree_local_code(i, l1), tree_local_code(i, l2)) {
                    (Some(c1), Some(c2)) => {
                        let t = edge_hat.row(i)?.as_tree()?.clone();
                        let s1 = seq_decode(t.branching, c1);
                        let s2 = seq_decode(t.branching, c2);
                        Ok((is_extension(&s1, &s2) || is_extension(&s2, &s1)) as u64)
                    }
                    _ => Ok(0),
                }
            })
            .with_fuel(u64::MAX);
            let universe_hat = hat.clone();
            let universe = VertexUniverse::Computed(Arc::new(move |v| {
                let (i, local) = diag_unpair(v);
                match tree_local_code(i, local) {
                    Some(c) if local > 0 => universe_hat.row(i)?.as_tree()?.member_code(c),
                    _ => Ok(true),
                }
            }));
            let certificate = match &u.certificate {
                Some(cert @ (Certificate::HatOf { .. } | Certificate::HatGen(_))) => {
                    let cert = cert.clone();
                    Some(Certificate::hat_gen(move |i| match cert.hat_row(i)? {
                        Certificate::PathGen(_) | Certificate::KnownAnswer(0) => {
                            Ok(Certificate::KnownAnswer(1))
                        }
                        Certificate::Finite(_) | Certificate::KnownAnswer(_) => {
                            Ok(Certificate::KnownAnswer(0))
                        }
                        other => Err(Error::CertificateMismatch(format!(
                            "row {i}: {other:?} is not a well-foundedness certificate"
                        ))),
                    }))
                }
                _ => None,
            };
            Ok(Instance {
                problem: ProblemId::SVecL,
                payload: Payload::Graph(GraphCode::new(edge_fn).with_universe(universe)),
                certificate,
            })
        },
        |_, y| {
            let s = y.as_fn()?.clone();
            Ok(Solution::Hat(HatSolution::computed(move |n| {
                Ok(Solution::Value(1 - s.eval(n)?.min(1)))
            })))
        },
    )
}

/// `S_vecL <= Hat(S)`: row `n` asks whether the tagged ray `L_n` embeds.
pub fn red_s_vecl_to_hat_s() -> Reduction {
    Reduction::new(
        "s_vecl_to_hat_s",
        ProblemId::SVecL,
        ProblemId::hat(ProblemId::S),
        true,
        |u| {
            let g = u.payload.as_graph()?.clone();
            let rows =
                HatPayload::computed(move |n| Ok(Payload::GraphPair(g.clone(), tagged_linear(n))));
            let certificate = match &u.certificate {
                Some(cert @ (Certificate::HatOf { .. } | Certificate::HatGen(_))) => {
                    let cert = cert.clone();
                    Some(Certificate::hat_gen(move |n| cert.hat_row(n)))
                }
                _ => None,
            };
            Ok(Instance {
                problem: ProblemId::hat(ProblemId::S),
                payload: Payload::Hat(rows),
                certificate,
            })
        },
        |_, y| {
            let y = y.as_hat()?.clone();
            Ok(Solution::Fn(
                OracleFn::computed(move |n| y.row(n)?.as_value()).with_fuel(u64::MAX),
            ))
        },
    )
}

/// `S_F <= LPO` for finite `F`: `p(m) = 0` once `F` embeds into the
/// truncation below `m`, so a positive LPO answer means "yes".
pub fn red_sf_to_lpo(f: FiniteGraph) -> Reduction {
    let source = ProblemId::Sf(f.clone());
    Reduction::new(
        "sf_to_lpo",
        source.clone(),
        ProblemId::Lpo,
        true,
        move |u| {
            let g = u.payload.as_graph()?.clone();
            let f = f.clone();
            let p = OracleFn::computed(move |m| {
                if m == 0 {
                    return Ok(1);
                }
                let trunc = crate::encodings::finite_subgraph(&g, m - 1)?;
                Ok((!crate::encodings::pattern_embeds(&f, &trunc)) as u64)
            })
            .with_fuel(64);
            let certificate = match &u.certificate {
                Some(Certificate::EmbedsAt(_)) | Some(Certificate::KnownAnswer(1)) => {
                    Some(Certificate::FirstZero(first_zero_or_err(&p)?))
                }
                Some(Certificate::NoEmbedding(_)) | Some(Certificate::KnownAnswer(0)) => {
                    Some(Certificate::NoZero)
                }
                _ => None,
            };
            Ok(Instance {
                problem: ProblemId::Lpo,
                payload: Payload::Oracle(p),
                certificate,
            })
        },
        |_, y| Ok(Solution::Value((y.as_value()? > 0) as u64)),
    )
}

/// `LPO <= S_F` for a finite `F` with at least two vertices. When `F` has an
/// edge, a copy of `F` appears on the vertex window starting at the first
/// zero, and nowhere otherwise. An edgeless `F` wants an independent set
/// instead, so the host grows as a clique until a zero shows up and the
/// later vertices stay isolated.
pub fn red_lpo_to_sf(f: FiniteGraph) -> Reduction {
    assert!(f.num_vertices() >= 2);
    let target = ProblemId::Sf(f.clone());
    Reduction::new(
        "lpo_to_sf",
        ProblemId::Lpo,
        target.clone(),
        false,
        move |u| {
            let p = u.payload.as_oracle()?.clone();
            let nf = f.num_vertices();
            let scan = crate::reductions::lg::forward_scan(&p);
            let ef = f.clone();
            let ep = p.clone();
            let edge_fn = OracleFn::computed(move |code| {
                let (a, b) = pair_decode(code);
                if ef.num_edges() == 0 {
                    // Clique until the first zero: vertex b keeps its edges
                    // only while p is positive through index b.
                    return Ok(match ep.first_zero(scan)? {
                        Some(m) => (b < m) as u64,
                        None => 1,
                    });
                }
                match ep.first_zero(scan)? {
                    Some(m) if a >= m && b < m + nf => Ok(ef.has_edge(a - m, b - m) as u64),
                    _ => Ok(0),
                }
            })
            .with_fuel(u64::MAX);
            let certificate = match &u.certificate {
                Some(Certificate::FirstZero(j)) => {
                    Some(Certificate::EmbedsAt((*j..*j + nf).collect()))
                }
                Some(Certificate::NoZero) | Some(Certificate::KnownAnswer(0)) => {
                    Some(Certificate::NoEmbedding(64))
                }
                Some(Certificate::KnownAnswer(v)) => {
                    Some(Certificate::EmbedsAt((*v - 1..*v - 1 + nf).collect()))
                }
                _ => None,
            };
            Ok(Instance {
                problem: target.clone(),
                payload: Payload::Graph(GraphCode::new(edge_fn)),
                certificate,
            })
        },
        |u, y| {
            if y.as_value()? == 0 {
                return Ok(Solution::Value(0));
            }
            let p = u.payload.as_oracle()?;
            Ok(Solution::Value(first_zero_or_err(p)? + 1))
        },
    )
}

fn relabel(name: &str, source: ProblemId, target: ProblemId) -> Reduction {
    Reduction::new(
        name,
        source,
        target.clone(),
        true,
        move |u| {
            Ok(Instance {
                problem: target.clone(),
                payload: u.payload.clone(),
                certificate: u.certificate.clone(),
            })
        },
        |_, y| Ok(Solution::Value(y.as_value()?)),
    )
}

/// `RC <= D`: a coloring repeats a color infinitely often exactly when the
/// graph has an infinite independent set, so the instance passes unchanged.
pub fn red_rc_to_d() -> Reduction {
    relabel("rc_to_d", ProblemId::Rc, ProblemId::D)
}

/// `D <= RC`, the unchanged instance in the other direction.
pub fn red_d_to_rc() -> Reduction {
    relabel("d_to_rc", ProblemId::D, ProblemId::Rc)
}

/// `D <= S`: pair the graph with the empty pattern; the witness generators
/// transfer unchanged.
pub fn red_d_to_s() -> Reduction {
    Reduction::new(
        "d_to_s",
        ProblemId::D,
        ProblemId::S,
        true,
        |u| {
            let g = u.payload.as_graph()?.clone();
            let certificate = match &u.certificate {
                Some(Certificate::PathGen(h)) => Some(Certificate::PathGen(h.clone())),
                Some(Certificate::NoEmbedding(_)) | Some(Certificate::Finite(_)) => {
                    Some(Certificate::KnownAnswer(0))
                }
                Some(Certificate::KnownAnswer(v)) => Some(Certificate::KnownAnswer(*v)),
                _ => None,
            };
            Ok(Instance {
                problem: ProblemId::S,
                payload: Payload::GraphPair(g, GraphCode::empty()),
                certificate,
            })
        },
        |_, y| Ok(Solution::Value(y.as_value()?)),
    )
}

/// `WF <= D`: the incomparability graph of the tree. An infinite independent
/// set is an infinite chain of nodes, which is exactly an infinite path.
pub fn red_wf_to_d() -> Reduction {
    Reduction::new(
        "wf_to_d",
        ProblemId::Wf,
        ProblemId::D,
        true,
        |u| {
            let t = u.payload.as_tree()?.clone();
            let branching = t.branching;
            let edge_t = t.clone();
            let edge_fn = OracleFn::computed(move |code| {
                let (a, b) = pair_decode(code);
                let sa = seq_decode(edge_t.branching, a);
                let sb = seq_decode(edge_t.branching, b);
                let comparable = sa.starts_with(&sb) || sb.starts_with(&sa);
                Ok((!comparable) as u64)
            })
            .with_fuel(u64::MAX);
            let universe_t = t.clone();
            let universe = VertexUniverse::Computed(Arc::new(move |v| universe_t.member_code(v)));
            let certificate = match &u.certificate {
                Some(Certificate::PathGen(gen)) => {
                    Some(Certificate::PathGen(prefix_code_gen(branching, gen)))
                }
                Some(Certificate::Finite(_)) | Some(Certificate::KnownAnswer(1)) => {
                    Some(Certificate::KnownAnswer(0))
                }
                Some(Certificate::KnownAnswer(_)) => Some(Certificate::KnownAnswer(1)),
                _ => None,
            };
            Ok(Instance {
                problem: ProblemId::D,
                payload: Payload::Graph(GraphCode::new(edge_fn).with_universe(universe)),
                certificate,
            })
        },
        |_, y| Ok(Solution::Value(1 - y.as_value()?.min(1))),
    )
}

/// The equivalence cluster around repeated colors, disconnected subgraphs,
/// and well-foundedness, bundled for the harness.
pub fn red_rc_d_wf() -> Vec<Reduction> {
    vec![red_rc_to_d(), red_d_to_rc(), red_wf_to_d(), red_d_to_s()]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::problems::{check_solution, hat_pack, solve_certified, verify_certificate, Budget};

    fn binary_tree(members: &[&[u64]]) -> TreeCode {
        let members: Vec<Vec<u64>> = members.iter().map(|m| m.to_vec()).collect();
        TreeCode::from_members(Branching::Binary, &members).unwrap()
    }

    fn zeros_gen() -> OracleFn {
        OracleFn::constant(0)
    }

    // Unbounded node fuel: the deep prefix codes of a binary tree overflow
    // the default fuel long before the interesting depths.
    fn full_binary() -> TreeCode {
        TreeCode::new(Branching::Binary, OracleFn::constant(1).with_fuel(u64::MAX))
    }

    #[test]
    fn path_becomes_ray() {
        // Full binary tree: the all-zeros path is a ray in the node graph.
        let u = Instance::certified(
            ProblemId::Wf,
            Payload::Tree(full_binary()),
            Certificate::PathGen(zeros_gen()),
        );
        let r = red_wf_to_s_l();
        let x = r.forward(&u).unwrap();
        assert!(verify_certificate(&x, &Budget::default())
            .unwrap()
            .is_valid());
        let y = solve_certified(&x, &Budget::default()).unwrap();
        assert_eq!(y.as_value().unwrap(), 1);
        let v = r.back(&u, &y).unwrap();
        assert_eq!(v.as_value().unwrap(), 0);
        assert!(check_solution(&u, &v, &Budget::default())
            .unwrap()
            .is_valid());
    }

    #[test]
    fn dead_tree_has_no_ray() {
        let t = binary_tree(&[&[], &[0], &[1], &[0, 1]]);
        let u = Instance::certified(ProblemId::Wf, Payload::Tree(t), Certificate::Finite(3));
        let r = red_wf_to_s_l();
        let x = r.forward(&u).unwrap();
        let y = solve_certified(&x, &Budget::default()).unwrap();
        let v = r.back(&u, &y).unwrap();
        assert_eq!(v.as_value().unwrap(), 1);
        assert!(check_solution(&u, &v, &Budget::default())
            .unwrap()
            .is_valid());
    }

    #[test]
    fn embedding_tree_follows_the_pattern() {
        // G = triangle plus isolated vertices, H = single edge (0,1).
        let g = GraphCode::from_edges(&[(0, 1), (0, 2), (1, 2)]).unwrap();
        let h = GraphCode::from_edges(&[(0, 1)]).unwrap();
        let u = Instance::certified(
            ProblemId::S,
            Payload::GraphPair(g, h),
            Certificate::EmbedsAt(vec![0, 1]),
        );
        let r = red_s_to_wf();
        let x = r.forward(&u).unwrap();
        let t = x.payload.as_tree().unwrap();
        assert!(t.member(&[0, 1]).unwrap());
        assert!(t.member(&[2, 0]).unwrap());
        // Vertices 3 and 4 are not adjacent, so they cannot open the map.
        assert!(!t.member(&[3, 4]).unwrap());
        assert!(!t.member(&[0, 0]).unwrap());
        assert!(verify_certificate(&x, &Budget::default())
            .unwrap()
            .is_valid());
        let y = solve_certified(&x, &Budget::default()).unwrap();
        assert_eq!(y.as_value().unwrap(), 0);
        let v = r.back(&u, &y).unwrap();
        assert_eq!(v.as_value().unwrap(), 1);
        assert!(check_solution(&u, &v, &Budget::default())
            .unwrap()
            .is_valid());
    }

    #[test]
    fn tagged_components_answer_rows() {
        // Row 0 alive (full binary tree), row 1 dead at depth 2.
        let rows = vec![
            Instance::certified(
                ProblemId::Wf,
                Payload::Tree(full_binary()),
                Certificate::PathGen(zeros_gen()),
            ),
            Instance::certified(
                ProblemId::Wf,
                Payload::Tree(binary_tree(&[&[], &[0]])),
                Certificate::Finite(2),
            ),
        ];
        let u = hat_pack(&rows).unwrap();
        let r = red_hat_wf_to_s_vecl();
        let x = r.forward(&u).unwrap();
        let g = x.payload.as_graph().unwrap();
        // Component 0 cycle: locals 0,1,2.
        assert!(g.edge(diag_pair_at(0, 0), diag_pair_at(0, 2)).unwrap());
        // Tree child of the shared vertex: local (i+2) + code of <0>.
        let child_local = 2 + seq_encode(Branching::Binary, &[0]).unwrap();
        assert!(g
            .edge(diag_pair_at(0, 0), diag_pair_at(0, child_local))
            .unwrap());
        assert!(verify_certificate(&x, &Budget::default())
            .unwrap()
            .is_valid());
        let y = solve_certified(&x, &Budget::default()).unwrap();
        let v = r.back(&u, &y).unwrap();
        let rows_out = v.as_hat().unwrap();
        assert_eq!(rows_out.row(0).unwrap().as_value().unwrap(), 0);
        assert_eq!(rows_out.row(1).unwrap().as_value().unwrap(), 1);
        assert!(check_solution(&u, &v, &Budget::default())
            .unwrap()
            .is_valid());
    }

    fn diag_pair_at(i: u64, local: u64) -> u64 {
        crate::encodings::diag_pair(i, local)
    }

    #[test]
    fn ray_rows_pass_through() {
        // Graph = the tagged ray L_1 itself: row 1 answers 1, row 0 answers 0.
        let g = tagged_linear(1);
        let u = Instance::certified(
            ProblemId::SVecL,
            Payload::Graph(g),
            Certificate::hat_gen(|n| {
                Ok(if n == 1 {
                    Certificate::KnownAnswer(1)
                } else {
                    Certificate::KnownAnswer(0)
                })
            }),
        );
        let r = red_s_vecl_to_hat_s();
        let x = r.forward(&u).unwrap();
        assert!(verify_certificate(&x, &Budget::default())
            .unwrap()
            .is_valid());
        let y = solve_certified(&x, &Budget::default()).unwrap();
        let v = r.back(&u, &y).unwrap();
        let s = v.as_fn().unwrap();
        assert_eq!(s.eval(0).unwrap(), 0);
        assert_eq!(s.eval(1).unwrap(), 1);
        assert!(check_solution(&u, &v, &Budget::default())
            .unwrap()
            .is_valid());
    }

    #[test]
    fn pattern_search_through_lpo() {
        // Triangle pattern inside a host with a planted triangle at 4,5,6.
        let f = FiniteGraph::complete(3);
        let host = GraphCode::from_edges(&[(0, 1), (4, 5), (4, 6), (5, 6)]).unwrap();
        let u = Instance::certified(
            ProblemId::Sf(f.clone()),
            Payload::Graph(host),
            Certificate::EmbedsAt(vec![4, 5, 6]),
        );
        let r = red_sf_to_lpo(f);
        let x = r.forward(&u).unwrap();
        assert!(verify_certificate(&x, &Budget::default())
            .unwrap()
            .is_valid());
        let y = solve_certified(&x, &Budget::default()).unwrap();
        // First zero at 7: the triangle completes within the first 7 vertices.
        assert_eq!(y.as_value().unwrap(), 8);
        let v = r.back(&u, &y).unwrap();
        assert_eq!(v.as_value().unwrap(), 1);
        assert!(check_solution(&u, &v, &Budget::default())
            .unwrap()
            .is_valid());
    }

    #[test]
    fn planted_pattern_at_first_zero() {
        let f = FiniteGraph::complete(3);
        let r = red_lpo_to_sf(f);
        let u = Instance::certified(
            ProblemId::Lpo,
            Payload::Oracle(OracleFn::finite_support(vec![(2, 0)], 1)),
            Certificate::FirstZero(2),
        );
        let x = r.forward(&u).unwrap();
        let g = x.payload.as_graph().unwrap();
        assert!(g.edge(2, 3).unwrap());
        assert!(g.edge(3, 4).unwrap());
        assert!(!g.edge(4, 5).unwrap());
        assert!(verify_certificate(&x, &Budget::default())
            .unwrap()
            .is_valid());
        let y = solve_certified(&x, &Budget::default()).unwrap();
        assert_eq!(y.as_value().unwrap(), 1);
        let v = r.back(&u, &y).unwrap();
        assert_eq!(v.as_value().unwrap(), 3);
        assert!(check_solution(&u, &v, &Budget::default())
            .unwrap()
            .is_valid());
    }

    #[test]
    fn no_zero_leaves_no_pattern() {
        let f = FiniteGraph::complete(3);
        let r = red_lpo_to_sf(f);
        let u = Instance::certified(
            ProblemId::Lpo,
            Payload::Oracle(OracleFn::constant(1)),
            Certificate::NoZero,
        );
        let x = r.forward(&u).unwrap();
        let y = solve_certified(&x, &Budget::default()).unwrap();
        assert_eq!(y.as_value().unwrap(), 0);
        let v = r.back(&u, &y).unwrap();
        assert_eq!(v.as_value().unwrap(), 0);
        assert!(check_solution(&u, &v, &Budget::default())
            .unwrap()
            .is_valid());
    }

    #[test]
    fn edgeless_pattern_uses_the_clique_complement() {
        // F = three isolated vertices: the host is a clique until the first
        // zero at 2, so {2,3,4} is the planted independent set.
        let f = FiniteGraph::empty(3);
        let r = red_lpo_to_sf(f.clone());
        let u = Instance::certified(
            ProblemId::Lpo,
            Payload::Oracle(OracleFn::finite_support(vec![(2, 0)], 1)),
            Certificate::FirstZero(2),
        );
        let x = r.forward(&u).unwrap();
        let g = x.payload.as_graph().unwrap();
        assert!(g.edge(0, 1).unwrap());
        assert!(!g.edge(1, 2).unwrap());
        assert!(!g.edge(2, 3).unwrap());
        assert!(verify_certificate(&x, &Budget::default())
            .unwrap()
            .is_valid());
        let y = solve_certified(&x, &Budget::default()).unwrap();
        assert_eq!(y.as_value().unwrap(), 1);
        let v = r.back(&u, &y).unwrap();
        assert_eq!(v.as_value().unwrap(), 3);
        assert!(check_solution(&u, &v, &Budget::default())
            .unwrap()
            .is_valid());

        // All ones: the host stays a clique and nothing independent exists.
        let none = Instance::certified(
            ProblemId::Lpo,
            Payload::Oracle(OracleFn::constant(1)),
            Certificate::NoZero,
        );
        let xn = r.forward(&none).unwrap();
        assert!(verify_certificate(&xn, &Budget::default())
            .unwrap()
            .is_valid());
        let yn = solve_certified(&xn, &Budget::default()).unwrap();
        assert_eq!(yn.as_value().unwrap(), 0);
        let vn = r.back(&none, &yn).unwrap();
        assert_eq!(vn.as_value().unwrap(), 0);
    }

    #[test]
    fn incomparability_graph_flips_the_answer() {
        let u = Instance::certified(
            ProblemId::Wf,
            Payload::Tree(full_binary()),
            Certificate::PathGen(zeros_gen()),
        );
        let r = red_wf_to_d();
        let x = r.forward(&u).unwrap();
        let g = x.payload.as_graph().unwrap();
        // Codes of <0> and <0,0> are comparable: no edge.
        let c1 = seq_encode(Branching::Binary, &[0]).unwrap();
        let c2 = seq_encode(Branching::Binary, &[0, 0]).unwrap();
        let c3 = seq_encode(Branching::Binary, &[1]).unwrap();
        assert!(!g.edge(c1, c2).unwrap());
        assert!(g.edge(c1, c3).unwrap());
        assert!(verify_certificate(&x, &Budget::default())
            .unwrap()
            .is_valid());
        let y = solve_certified(&x, &Budget::default()).unwrap();
        assert_eq!(y.as_value().unwrap(), 1);
        let v = r.back(&u, &y).unwrap();
        assert_eq!(v.as_value().unwrap(), 0);
        assert!(check_solution(&u, &v, &Budget::default())
            .unwrap()
            .is_valid());
    }

    #[test]
    fn relabel_cluster_round_trips() {
        let g = GraphCode::empty();
        let u = Instance::certified(
            ProblemId::Rc,
            Payload::Graph(g),
            Certificate::PathGen(OracleFn::computed(|i| Ok(i)).with_fuel(4096)),
        );
        let r = red_rc_to_d();
        let x = r.forward(&u).unwrap();
        assert_eq!(x.problem, ProblemId::D);
        assert!(verify_certificate(&x, &Budget::default())
            .unwrap()
            .is_valid());
        let y = solve_certified(&x, &Budget::default()).unwrap();
        let v = r.back(&u, &y).unwrap();
        assert_eq!(v.as_value().unwrap(), 1);
        assert!(check_solution(&u, &v, &Budget::default())
            .unwrap()
            .is_valid());

        let back = red_d_to_rc().forward(&x).unwrap();
        assert_eq!(back.problem, ProblemId::Rc);
    }

    #[test]
    fn empty_pattern_pairs_with_the_graph() {
        let u = Instance::certified(
            ProblemId::D,
            Payload::Graph(GraphCode::empty()),
            Certificate::PathGen(OracleFn::computed(|i| Ok(i)).with_fuel(4096)),
        );
        let r = red_d_to_s();
        let x = r.forward(&u).unwrap();
        assert!(verify_certificate(&x, &Budget::default())
            .unwrap()
            .is_valid());
        let y = solve_certified(&x, &Budget::default()).unwrap();
        assert_eq!(y.as_value().unwrap(), 1);
        let v = r.back(&u, &y).unwrap();
        assert_eq!(v.as_value().unwrap(), 1);
        assert!(check_solution(&u, &v, &Budget::default())
            .unwrap()
            .is_valid());
    }
}
