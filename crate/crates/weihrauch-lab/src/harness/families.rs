//! Seeded certified-instance generators, one family per source problem.
//!
//! Every generator plants the structure its certificate claims, so the
//! invariant "certificate verifies against payload" holds by construction.
//! Randomness comes from ChaCha8 keyed by (seed, index): portable, and
//! reports reproduce across machines.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::encodings::{seq_decode, Branching, FiniteGraph, GraphCode, TreeCode};
use crate::oracle::OracleFn;
use crate::problems::{hat_pack, tagged_linear, Certificate, Instance, Payload, ProblemId};
use crate::reductions::{red_lpo_to_lgk, red_lpo_to_tck};

use super::CertifiedFamily;

fn rng_for(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index.wrapping_add(1));
    rng
}

fn lpo_instance(rng: &mut ChaCha8Rng) -> Instance {
    // Positive by default with a little nonzero noise; a planted zero with
    // probability 3/4. The zero stays below 8 so that downstream gadget
    // graphs keep their brute-force colorability checks small.
    let mut vals: BTreeMap<u64, u64> = BTreeMap::new();
    for _ in 0..rng.gen_range(0..6) {
        vals.insert(rng.gen_range(0..12u64), rng.gen_range(1..5u64));
    }
    let cert = if rng.gen_bool(0.75) {
        let j = rng.gen_range(0..8u64);
        vals.retain(|&i, _| i != j);
        vals.insert(j, 0);
        Certificate::FirstZero(j)
    } else {
        Certificate::NoZero
    };
    Instance::certified(
        ProblemId::Lpo,
        Payload::Oracle(OracleFn::finite_support(vals.into_iter().collect(), 1)),
        cert,
    )
}

fn llpo_instance(rng: &mut ChaCha8Rng) -> Instance {
    // Zero by default; the pivot is the first nonzero position.
    let mut vals: BTreeMap<u64, u64> = BTreeMap::new();
    let cert = if rng.gen_bool(0.8) {
        let j = rng.gen_range(0..24u64);
        vals.insert(j, rng.gen_range(1..4u64));
        for _ in 0..rng.gen_range(0..4) {
            let i = j + 1 + rng.gen_range(0..24u64);
            vals.insert(i, rng.gen_range(0..4u64));
        }
        Certificate::FirstZero(j)
    } else {
        Certificate::NoZero
    };
    Instance::certified(
        ProblemId::Llpo,
        Payload::Oracle(OracleFn::finite_support(vals.into_iter().collect(), 0)),
        cert,
    )
}

fn colorable_instance(rng: &mut ChaCha8Rng, k: u64, problem: ProblemId) -> Instance {
    // Plant a proper coloring first, then only add edges it permits.
    let n = 24usize;
    let mut colors: Vec<u64> = (0..n).map(|_| rng.gen_range(0..k)).collect();
    if matches!(problem, ProblemId::Tc(_)) {
        // TC's coloring certificates must start at color 0.
        colors[0] = 0;
    }
    let mut edges = Vec::new();
    for _ in 0..rng.gen_range(8..20) {
        let a = rng.gen_range(0..n);
        let b = rng.gen_range(0..n);
        if a != b && colors[a] != colors[b] {
            edges.push((a.min(b) as u64, a.max(b) as u64));
        }
    }
    Instance::certified(
        problem,
        Payload::Graph(GraphCode::from_edges(&edges).expect("edge list is well formed")),
        Certificate::KnownColoring(OracleFn::tabled(colors, 0)),
    )
}

/// Infinite tree holding one designated path plus bounded noise: a sequence
/// deviating first at position `t` survives only `tol[t]` extra levels.
fn path_tree_instance(rng: &mut ChaCha8Rng, problem: ProblemId, branching: Branching) -> Instance {
    let width = branching
        .width()
        .expect("path trees are finitely branching");
    let path: Vec<u64> = (0..32).map(|_| rng.gen_range(0..width)).collect();
    let tol: Vec<u64> = (0..10).map(|_| rng.gen_range(0..3u64)).collect();
    let (p, t) = (path.clone(), tol.clone());
    let node_fn = OracleFn::computed(move |code| {
        let seq = seq_decode(branching, code);
        match seq.iter().enumerate().find(|&(i, &s)| s != p[i % 32]) {
            None => Ok(1),
            Some((i, _)) => {
                let extra = t.get(i).copied().unwrap_or(0);
                Ok((seq.len() as u64 <= i as u64 + 1 + extra) as u64)
            }
        }
    })
    .with_fuel(u64::MAX);
    Instance::certified(
        problem,
        Payload::Tree(TreeCode::new(branching, node_fn)),
        Certificate::PathGen(OracleFn::periodic(Vec::new(), path)),
    )
}

fn omega_tree_instance(rng: &mut ChaCha8Rng) -> Instance {
    if rng.gen_bool(0.4) {
        // A finite tree from a few short explicit members.
        let members: Vec<Vec<u64>> = (0..rng.gen_range(1..6))
            .map(|_| {
                (0..rng.gen_range(0..4))
                    .map(|_| rng.gen_range(0..5u64))
                    .collect()
            })
            .collect();
        let depth = members.iter().map(|m| m.len() as u64).max().unwrap_or(0) + 1;
        let tree = TreeCode::from_members(Branching::Omega, &members)
            .expect("small members encode within u64");
        Instance::certified(
            ProblemId::Wf,
            Payload::Tree(tree),
            Certificate::Finite(depth),
        )
    } else {
        // Ill-founded: a planted infinite path with small labels plus noise.
        let path: Vec<u64> = (0..32).map(|_| rng.gen_range(0..3u64)).collect();
        let tol: Vec<u64> = (0..8).map(|_| rng.gen_range(0..3u64)).collect();
        let (p, t) = (path.clone(), tol.clone());
        let node_fn = OracleFn::computed(move |code| {
            let seq = seq_decode(Branching::Omega, code);
            match seq.iter().enumerate().find(|&(i, &s)| s != p[i % 32]) {
                None => Ok(1),
                Some((i, _)) => {
                    let extra = t.get(i).copied().unwrap_or(0);
                    Ok((seq.len() as u64 <= i as u64 + 1 + extra) as u64)
                }
            }
        })
        .with_fuel(u64::MAX);
        Instance::certified(
            ProblemId::Wf,
            Payload::Tree(TreeCode::new(Branching::Omega, node_fn)),
            Certificate::PathGen(OracleFn::periodic(Vec::new(), path)),
        )
    }
}

fn s_instance(rng: &mut ChaCha8Rng) -> Instance {
    if rng.gen_bool(0.7) {
        // Plant a copy of a small pattern H into G; extra noise edges cannot
        // break a subgraph embedding.
        let hv = rng.gen_range(2..5u64);
        let mut h_edges = Vec::new();
        for b in 1..hv {
            for a in 0..b {
                if rng.gen_bool(0.5) {
                    h_edges.push((a, b));
                }
            }
        }
        let offset = rng.gen_range(0..10u64);
        let mut g_edges: Vec<(u64, u64)> = h_edges
            .iter()
            .map(|&(a, b)| (a + offset, b + offset))
            .collect();
        for _ in 0..rng.gen_range(0..8) {
            let a = rng.gen_range(0..16u64);
            let b = rng.gen_range(0..16u64);
            if a != b {
                g_edges.push((a.min(b), a.max(b)));
            }
        }
        Instance::certified(
            ProblemId::S,
            Payload::GraphPair(
                GraphCode::from_edges(&g_edges).expect("well-formed edges"),
                GraphCode::from_edges(&h_edges).expect("well-formed edges"),
            ),
            Certificate::EmbedsAt((offset..offset + hv).collect()),
        )
    } else {
        // H has an edge, G has none: no embedding anywhere.
        let h = GraphCode::from_edges(&[(0, 1)]).expect("well-formed edges");
        Instance::certified(
            ProblemId::S,
            Payload::GraphPair(GraphCode::empty(), h),
            Certificate::KnownAnswer(0),
        )
    }
}

fn svecl_instance(rng: &mut ChaCha8Rng) -> Instance {
    // The tagged ray L_j embeds into L_j and into nothing else: the only
    // cycle in L_j has length j + 3.
    let j = rng.gen_range(0..6u64);
    Instance::certified(
        ProblemId::SVecL,
        Payload::Graph(tagged_linear(j)),
        Certificate::hat_gen(move |n| Ok(Certificate::KnownAnswer((n == j) as u64))),
    )
}

fn independent_instance(rng: &mut ChaCha8Rng, problem: ProblemId) -> Instance {
    if rng.gen_bool(0.7) {
        // Edges touch an odd vertex, so the evens are an infinite
        // independent set.
        let mut edges = Vec::new();
        for _ in 0..rng.gen_range(2..12) {
            let a = 2 * rng.gen_range(0..10u64) + 1;
            let b = rng.gen_range(0..20u64);
            if a != b {
                edges.push((a.min(b), a.max(b)));
            }
        }
        Instance::certified(
            problem,
            Payload::Graph(GraphCode::from_edges(&edges).expect("well-formed edges")),
            Certificate::PathGen(OracleFn::computed(|i| Ok(2 * i)).with_fuel(u64::MAX)),
        )
    } else {
        // The complete graph has no two nonadjacent vertices.
        let complete = GraphCode::new(OracleFn::constant(1));
        Instance::certified(
            problem,
            Payload::Graph(complete),
            Certificate::KnownAnswer(0),
        )
    }
}

fn sf_triangle_instance(rng: &mut ChaCha8Rng) -> Instance {
    if rng.gen_bool(0.6) {
        let m = rng.gen_range(0..8u64);
        let mut edges = vec![(m, m + 1), (m, m + 2), (m + 1, m + 2)];
        for _ in 0..rng.gen_range(0..6) {
            let a = rng.gen_range(0..14u64);
            let b = rng.gen_range(0..14u64);
            if a != b {
                edges.push((a.min(b), a.max(b)));
            }
        }
        Instance::certified(
            ProblemId::Sf(FiniteGraph::triangle()),
            Payload::Graph(GraphCode::from_edges(&edges).expect("well-formed edges")),
            Certificate::EmbedsAt(vec![m, m + 1, m + 2]),
        )
    } else {
        // Bipartite between evens and odds: triangle-free at every scale.
        let mut edges = Vec::new();
        for _ in 0..rng.gen_range(2..10) {
            let a = 2 * rng.gen_range(0..8u64);
            let b = 2 * rng.gen_range(0..8u64) + 1;
            edges.push((a.min(b), a.max(b)));
        }
        Instance::certified(
            ProblemId::Sf(FiniteGraph::triangle()),
            Payload::Graph(GraphCode::from_edges(&edges).expect("well-formed edges")),
            Certificate::NoEmbedding(64),
        )
    }
}

fn sf_empty3_instance(rng: &mut ChaCha8Rng) -> Instance {
    let pattern = FiniteGraph::empty(3);
    if rng.gen_bool(0.6) {
        // Edges stay below vertex 6, so {6, 7, 8} is independent.
        let mut edges = Vec::new();
        for _ in 0..rng.gen_range(1..10) {
            let a = rng.gen_range(0..6u64);
            let b = rng.gen_range(0..6u64);
            if a != b {
                edges.push((a.min(b), a.max(b)));
            }
        }
        Instance::certified(
            ProblemId::Sf(pattern),
            Payload::Graph(GraphCode::from_edges(&edges).expect("well-formed edges")),
            Certificate::EmbedsAt(vec![6, 7, 8]),
        )
    } else {
        // The complete graph has no independent triple.
        let complete = GraphCode::new(OracleFn::constant(1));
        Instance::certified(
            ProblemId::Sf(pattern),
            Payload::Graph(complete),
            Certificate::KnownAnswer(0),
        )
    }
}

fn simple<F>(name: &str, problem: ProblemId, gen: F) -> CertifiedFamily
where
    F: Fn(&mut ChaCha8Rng) -> Instance + Send + Sync + 'static,
{
    CertifiedFamily::new(name, problem, move |seed, index| {
        Ok(gen(&mut rng_for(seed, index)))
    })
}

fn hat_of<F>(name: &str, base: ProblemId, gen: F) -> CertifiedFamily
where
    F: Fn(&mut ChaCha8Rng) -> Instance + Send + Sync + 'static,
{
    CertifiedFamily::new(name, ProblemId::hat(base), move |seed, index| {
        let mut rng = rng_for(seed, index);
        let rows: Vec<Instance> = (0..rng.gen_range(2..8)).map(|_| gen(&mut rng)).collect();
        hat_pack(&rows)
    })
}

/// Derived family: instances of `base` pushed through a reduction's forward
/// map, certificates included.
fn forward_of(
    name: &str,
    base: CertifiedFamily,
    reduction: crate::reductions::Reduction,
) -> CertifiedFamily {
    let problem = reduction.target.clone();
    CertifiedFamily::new(name, problem, move |seed, index| {
        reduction.forward(&base.instance(seed, index)?)
    })
}

/// Looks up a family by name. Parameterized families are spelled with their
/// parameter inline: `lg2`, `gc3`, `tc2`, `wkl4`.
pub fn family(name: &str) -> Option<CertifiedFamily> {
    let f = match name {
        "lpo" => simple("lpo", ProblemId::Lpo, lpo_instance),
        "llpo" => simple("llpo", ProblemId::Llpo, llpo_instance),
        "hat_lpo" => hat_of("hat_lpo", ProblemId::Lpo, lpo_instance),
        "hat_llpo" => hat_of("hat_llpo", ProblemId::Llpo, llpo_instance),
        "lg2" | "lg3" | "lg4" => {
            let k: u64 = name[2..].parse().ok()?;
            forward_of(name, family("lpo")?, red_lpo_to_lgk(k))
        }
        "gc2" | "gc3" | "gc4" => {
            let k: u64 = name[2..].parse().ok()?;
            simple(name, ProblemId::Gc(k), move |rng| {
                colorable_instance(rng, k, ProblemId::Gc(k))
            })
        }
        "tc2" | "tc3" => {
            let k: u64 = name[2..].parse().ok()?;
            CertifiedFamily::new(name, ProblemId::Tc(k), move |seed, index| {
                let mut rng = rng_for(seed, index);
                if rng.gen_bool(0.5) {
                    Ok(colorable_instance(&mut rng, k, ProblemId::Tc(k)))
                } else {
                    red_lpo_to_tck(k).forward(&lpo_instance(&mut rng))
                }
            })
        }
        "wkl" => simple("wkl", ProblemId::Wkl, |rng| {
            path_tree_instance(rng, ProblemId::Wkl, Branching::Binary)
        }),
        "wkl3" | "wkl4" | "wkl5" => {
            let n: u64 = name[3..].parse().ok()?;
            simple(name, ProblemId::Wkln(n), move |rng| {
                path_tree_instance(rng, ProblemId::Wkln(n), Branching::NAry(n))
            })
        }
        "wf" => simple("wf", ProblemId::Wf, omega_tree_instance),
        "hat_wf" => hat_of("hat_wf", ProblemId::Wf, omega_tree_instance),
        "s" => simple("s", ProblemId::S, s_instance),
        "svecl" => simple("svecl", ProblemId::SVecL, svecl_instance),
        "rc" => simple("rc", ProblemId::Rc, |rng| {
            independent_instance(rng, ProblemId::Rc)
        }),
        "d" => simple("d", ProblemId::D, |rng| {
            independent_instance(rng, ProblemId::D)
        }),
        "sf_triangle" => simple(
            "sf_triangle",
            ProblemId::Sf(FiniteGraph::triangle()),
            sf_triangle_instance,
        ),
        "sf_empty3" => simple(
            "sf_empty3",
            ProblemId::Sf(FiniteGraph::empty(3)),
            sf_empty3_instance,
        ),
        _ => return None,
    };
    Some(f)
}

/// Every family name `family` resolves.
pub fn family_names() -> Vec<&'static str> {
    vec![
        "lpo",
        "llpo",
        "hat_lpo",
        "hat_llpo",
        "lg2",
        "lg3",
        "lg4",
        "gc2",
        "gc3",
        "gc4",
        "tc2",
        "tc3",
        "wkl",
        "wkl3",
        "wkl4",
        "wkl5",
        "wf",
        "hat_wf",
        "s",
        "svecl",
        "rc",
        "d",
        "sf_triangle",
        "sf_empty3",
    ]
}
